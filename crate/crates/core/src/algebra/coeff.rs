//! Exact coefficient fields: the rationals (arbitrary precision) and prime
//! fields `F_p` with the modulus chosen at run time.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Field element used as a polynomial coefficient.
///
/// Binary operations only ever combine elements of the same field, so an
/// element carries whatever it needs (e.g. the modulus) to operate on its own.
pub trait Coefficient:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Run-time description of the field, used only to create elements.
    type Field: Clone + fmt::Debug + Send + Sync;

    fn from_i64(field: &Self::Field, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inverse(&self) -> Self;

    /// Whether the canonical text form starts with a minus sign.
    fn is_negative(&self) -> bool {
        false
    }
}

impl Coefficient for BigRational {
    type Field = ();

    fn from_i64(_: &(), n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

/// Element of `F_p`, stored as its canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn new(value: u64, field: PrimeField) -> Self {
        Fp {
            value: value % field.p,
            p: field.p,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    fn with(&self, value: u64) -> Self {
        Fp { value, p: self.p }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing elements of different prime fields");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coefficient for Fp {
    type Field = PrimeField;

    fn from_i64(field: &PrimeField, n: i64) -> Self {
        let r = (n as i128).rem_euclid(field.p as i128) as u64;
        Fp {
            value: r,
            p: field.p,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn is_one(&self) -> bool {
        self.value == 1
    }
    fn plus(&self, other: &Self) -> Self {
        self.check(other);
        self.with(((self.value as u128 + other.value as u128) % self.p as u128) as u64)
    }
    fn minus(&self, other: &Self) -> Self {
        self.check(other);
        self.with(((self.value as u128 + (self.p - other.value) as u128) % self.p as u128) as u64)
    }
    fn times(&self, other: &Self) -> Self {
        self.check(other);
        self.with(mul_mod(self.value, other.value, self.p))
    }
    fn negated(&self) -> Self {
        self.with((self.p - self.value) % self.p)
    }
    fn inverse(&self) -> Self {
        assert!(self.value != 0, "inverse of zero");
        self.with(pow_mod(self.value, self.p - 2, self.p))
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Characteristic of the ground field: `0` for the rationals, or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Characteristic {
    #[default]
    Zero,
    Prime(u64),
}

impl Characteristic {
    pub fn new(c: u64) -> Result<Self, AlgebraError> {
        match c {
            0 => Ok(Characteristic::Zero),
            p => PrimeField::new(p).map(|f| Characteristic::Prime(f.modulus())),
        }
    }

    pub fn value(&self) -> u64 {
        match self {
            Characteristic::Zero => 0,
            Characteristic::Prime(p) => *p,
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl FromStr for Characteristic {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let c: u64 = s
            .trim()
            .parse()
            .map_err(|_| AlgebraError::Parse(format!("invalid characteristic `{s}`")))?;
        Characteristic::new(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        let a = Fp::from_i64(&f, -3);
        assert_eq!(a.value(), 4);
        assert_eq!(a.times(&a.inverse()).value(), 1);
        assert_eq!(a.plus(&Fp::from_i64(&f, 3)).value(), 0);
        assert_eq!(a.minus(&Fp::from_i64(&f, 5)).value(), 6);
        assert_eq!(a.negated().value(), 3);
        assert!(PrimeField::new(8).is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let half = BigRational::new(1.into(), 2.into());
        let two = BigRational::from_i64(&(), 2);
        assert!(Coefficient::is_one(&half.times(&two)));
        assert!(Coefficient::is_negative(&half.negated()));
        assert_eq!(two.inverse(), half);
    }

    #[test]
    fn characteristic_parsing() {
        assert_eq!("0".parse::<Characteristic>().unwrap(), Characteristic::Zero);
        assert_eq!(
            "2".parse::<Characteristic>().unwrap(),
            Characteristic::Prime(2)
        );
        assert!("4".parse::<Characteristic>().is_err());
        assert!("x".parse::<Characteristic>().is_err());
    }
}
