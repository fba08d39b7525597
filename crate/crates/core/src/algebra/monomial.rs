use std::fmt;
use std::sync::Arc;

use crate::lattice::FiniteLattice;

use super::AlgebraError;

/// Variable names together with their position in the ascending variable
/// ranking that monomial orders are built on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarContext {
    names: Vec<String>,
    rank: Vec<usize>,
    by_rank: Vec<usize>,
}

impl VarContext {
    /// Variables ranked in the order given (first = lowest).
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let rank = (0..names.len()).collect();
        Self::with_ranking(names, rank)
    }

    /// `rank[i]` is the position of variable `i` in the ascending ranking.
    pub fn with_ranking(names: Vec<String>, rank: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::InvalidContext("no variables".into()));
        }
        if rank.len() != n {
            return Err(AlgebraError::InvalidContext(
                "ranking has wrong length".into(),
            ));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(AlgebraError::InvalidContext(format!(
                    "duplicate variable `{a}`"
                )));
            }
        }
        let mut by_rank = vec![usize::MAX; n];
        for (var, &r) in rank.iter().enumerate() {
            if r >= n || by_rank[r] != usize::MAX {
                return Err(AlgebraError::InvalidContext(
                    "ranking is not a permutation".into(),
                ));
            }
            by_rank[r] = var;
        }
        Ok(VarContext {
            names,
            rank,
            by_rank,
        })
    }

    /// One variable per lattice element, ranked by element index.
    pub fn from_lattice(lattice: &FiniteLattice) -> Arc<Self> {
        Arc::new(Self::new(lattice.labels().iter().cloned()).expect("lattice labels are distinct"))
    }

    /// Variables `v0, v1, ...` in ascending rank.
    pub fn standard(n: usize) -> Arc<Self> {
        Arc::new(Self::new((0..n).map(|i| format!("v{i}"))).expect("valid standard context"))
    }

    pub fn var_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn rank(&self, var: usize) -> usize {
        self.rank[var]
    }

    /// Variable indices from lowest to highest rank.
    pub fn ascending(&self) -> &[usize] {
        &self.by_rank
    }

    /// Parses a product like `x1_1*x2_1^2`; `1` is the empty product.
    pub fn parse_monomial(&self, text: &str) -> Result<Monomial, AlgebraError> {
        let mut m = Monomial::one(self.var_count());
        let text = text.trim();
        if text == "1" {
            return Ok(m);
        }
        for factor in text.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| AlgebraError::Parse(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor.trim(), 1),
            };
            let var = self
                .index_of(name)
                .ok_or_else(|| AlgebraError::Parse(format!("unknown variable `{name}`")))?;
            m.exponents[var] = m.exponents[var]
                .checked_add(exp)
                .ok_or(AlgebraError::ExponentOverflow)?;
        }
        Ok(m)
    }
}

/// A monomial `x^a` as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exponents)
    }
}

impl Monomial {
    pub fn one(var_count: usize) -> Self {
        Monomial {
            exponents: vec![0; var_count],
        }
    }

    pub fn var(var_count: usize, var: usize) -> Self {
        let mut m = Self::one(var_count);
        m.exponents[var] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    /// Squarefree monomial with the given support.
    pub fn from_support(var_count: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(var_count);
        for &v in vars {
            m.exponents[v] = 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn var_count(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.exponents.len())
            .filter(|&i| self.exponents[i] > 0)
            .collect()
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        debug_assert_eq!(self.var_count(), other.var_count());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exponents })
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("monomial exponent overflow")
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Monomial { exponents })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Canonical text form, e.g. `x1_1*t^2`, or `1`.
    pub fn display<'a>(&'a self, ctx: &'a VarContext) -> impl fmt::Display + 'a {
        MonomialDisplay { m: self, ctx }
    }
}

struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ctx: &'a VarContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (var, &e) in self.m.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ctx.name(var))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(vec![1, 2, 0]);
        let b = Monomial::from_exponents(vec![0, 1, 3]);
        assert_eq!(a.lcm(&b).exponents(), [1, 2, 3]);
        assert_eq!(a.gcd(&b).exponents(), [0, 1, 0]);
        assert!(b.gcd(&a).divides(&a));
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.degree(), 3);
        assert!(!a.is_squarefree());
        assert!(!a.is_coprime(&b));
    }

    #[test]
    fn overflow_is_detected() {
        let big = Monomial::from_exponents(vec![u32::MAX]);
        assert!(big.checked_mul(&Monomial::var(1, 0)).is_none());
    }

    #[test]
    fn context_validation() {
        assert!(VarContext::new(["a", "a"]).is_err());
        assert!(VarContext::with_ranking(vec!["a".into(), "b".into()], vec![0, 0]).is_err());
        let ctx = VarContext::with_ranking(vec!["a".into(), "b".into()], vec![1, 0]).unwrap();
        assert_eq!(ctx.ascending(), [1, 0]);
    }

    #[test]
    fn text_round_trip() {
        let ctx = VarContext::new(["s", "x1", "t"]).unwrap();
        let m = ctx.parse_monomial("x1*t^2*s").unwrap();
        assert_eq!(m.display(&ctx).to_string(), "s*x1*t^2");
        assert_eq!(ctx.parse_monomial("1").unwrap(), Monomial::one(3));
        assert!(ctx.parse_monomial("q").is_err());
    }
}
