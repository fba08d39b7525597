use std::collections::BTreeMap;
use std::fmt;

use super::{AlgebraError, Coefficient, Monomial, MonomialOrder, VarContext};

/// Sparse polynomial with exact coefficients. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
///
/// Terms are keyed by exponent vector; anything order-dependent (leading
/// term, canonical text) takes the order explicitly.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<C: Coefficient> {
    var_count: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(var_count: usize) -> Self {
        Polynomial {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self::zero(m.var_count());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(var_count: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(var_count);
        for (m, c) in terms {
            assert_eq!(
                m.var_count(),
                var_count,
                "monomial over a different context"
            );
            p.add_term(m, c);
        }
        p
    }

    /// `m1 - m2`.
    pub fn binomial(m1: Monomial, m2: Monomial, field: &C::Field) -> Self {
        let n = m1.var_count();
        Self::from_terms(
            n,
            [(m1, C::from_i64(field, 1)), (m2, C::from_i64(field, -1))],
        )
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.plus(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Whether every term has the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.negated());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.negated()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.var_count);
        }
        Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .map(|(m, d)| (m.clone(), d.times(c)))
                .collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.var_count);
        }
        Polynomial {
            var_count: self.var_count,
            terms: self
                .terms
                .iter()
                .map(|(n, d)| (n.mul(m), d.times(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.var_count);
        for (m, c) in &other.terms {
            for (n, d) in &self.terms {
                out.add_term(n.mul(m), d.times(c));
            }
        }
        out
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inverse()),
        }
    }

    /// Terms in strictly decreasing order.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &C)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|a, b| order.compare(b.0, a.0));
        ts
    }

    /// Canonical text: decreasing terms as `coeff*var^e`, with unit
    /// coefficients and `^1` omitted, e.g. `x1_1*x2_1 - s*t`.
    pub fn to_text(&self, order: &MonomialOrder) -> String {
        let ctx = order.context();
        let terms = self.sorted_terms(order);
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { c.negated() } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.display(ctx).to_string());
            } else {
                out.push_str(&format!("{abs}*{}", m.display(ctx)));
            }
        }
        out
    }

    /// Parses sums like `x1*y1 - 2*s*t + 3` with integer coefficients.
    pub fn parse(text: &str, ctx: &VarContext, field: &C::Field) -> Result<Self, AlgebraError> {
        let n = ctx.var_count();
        let mut out = Self::zero(n);
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(AlgebraError::Parse("empty polynomial".into()));
        }
        let mut chunks = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes().first() {
                Some(b'-') => (-1, &chunk[1..]),
                Some(b'+') => (1, &chunk[1..]),
                _ => (1, chunk),
            };
            let (coeff, mono) = match body.split_once('*') {
                Some((head, rest)) if head.chars().all(|c| c.is_ascii_digit()) => (
                    head.parse::<i64>()
                        .map_err(|e| AlgebraError::Parse(e.to_string()))?,
                    rest,
                ),
                _ if body.chars().all(|c| c.is_ascii_digit()) => (
                    body.parse::<i64>()
                        .map_err(|e| AlgebraError::Parse(e.to_string()))?,
                    "1",
                ),
                _ => (1, body),
            };
            out.add_term(ctx.parse_monomial(mono)?, C::from_i64(field, sign * coeff));
        }
        Ok(out)
    }
}

/// Remainder of `f` on multivariate division by `divisors`.
///
/// Every term is reduced, so no term of the result is divisible by a leading
/// monomial of a divisor. At each step the first divisor in sequence order
/// whose leading monomial divides the current leading term is used.
pub fn normal_form<C: Coefficient>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Polynomial<C> {
    let leads: Vec<(Monomial, C)> = divisors
        .iter()
        .filter_map(|g| g.leading_term(order).map(|(m, c)| (m.clone(), c.inverse())))
        .collect();
    let divisors: Vec<&Polynomial<C>> = divisors.iter().filter(|g| !g.is_zero()).collect();
    let mut p = f.clone();
    let mut remainder = Polynomial::zero(f.var_count());
    while let Some((lm, lc)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        let reducer = leads
            .iter()
            .zip(&divisors)
            .find(|((glm, _), _)| glm.divides(&lm));
        match reducer {
            Some(((glm, ginv), g)) => {
                let factor = lm.div(glm).expect("divisibility checked");
                p = p.sub(&g.mul_term(&factor, &lc.times(ginv)));
            }
            None => {
                p.terms.remove(&lm);
                remainder.terms.insert(lm, lc);
            }
        }
    }
    remainder
}

/// `(L / LT(f)) f - (L / LT(g)) g` with `L` the lcm of the leading monomials.
pub fn s_polynomial<C: Coefficient>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    order: &MonomialOrder,
) -> Polynomial<C> {
    let (fm, fc) = f.leading_term(order).expect("s-polynomial of zero");
    let (gm, gc) = g.leading_term(order).expect("s-polynomial of zero");
    let l = fm.lcm(gm);
    let left = f.mul_term(&l.div(fm).expect("lcm"), &fc.inverse());
    let right = g.mul_term(&l.div(gm).expect("lcm"), &gc.inverse());
    left.sub(&right)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use num_rational::BigRational;

    use super::*;
    use crate::algebra::{Fp, OrderKind, PrimeField};

    type Q = Polynomial<BigRational>;

    fn setup() -> (Arc<VarContext>, MonomialOrder) {
        let ctx = Arc::new(VarContext::new(["s", "x1", "x2", "y1", "t"]).unwrap());
        let order = MonomialOrder::new(OrderKind::DegRevLex, ctx.clone());
        (ctx, order)
    }

    fn q(text: &str) -> Q {
        let (ctx, _) = setup();
        Q::parse(text, &ctx, &()).unwrap()
    }

    #[test]
    fn canonical_text() {
        let (_, order) = setup();
        assert_eq!(q("s*t - x1*y1").to_text(&order), "-x1*y1 + s*t");
        assert_eq!(q("2*t^2 - 3 + x1").to_text(&order), "2*t^2 + x1 - 3");
        assert_eq!(q("x1 - x1").to_text(&order), "0");
        let half = Q::term(Monomial::var(5, 0), BigRational::new(1.into(), 2.into()));
        assert_eq!(half.to_text(&order), "1/2*s");
    }

    #[test]
    fn normal_form_examples() {
        let (_, order) = setup();
        let g = q("x1*y1 - s*t");
        assert!(normal_form(&g, std::slice::from_ref(&g), &order).is_zero());
        assert_eq!(
            normal_form(&q("x1*y1*t"), std::slice::from_ref(&g), &order),
            q("s*t^2")
        );
        assert_eq!(
            normal_form(&q("s"), std::slice::from_ref(&g), &order),
            q("s")
        );
        // Non-leading terms are reduced as well.
        assert_eq!(normal_form(&q("t^3 + x1*y1"), &[g], &order), q("t^3 + s*t"));
    }

    #[test]
    fn normal_form_uses_first_divisor() {
        let (_, order) = setup();
        let f = q("x1*y1");
        let a = q("x1*y1 - s");
        let b = q("y1 - s");
        assert_eq!(normal_form(&f, &[a.clone(), b.clone()], &order), q("s"));
        assert_eq!(normal_form(&f, &[b, a], &order), q("s*x1"));
    }

    #[test]
    fn s_polynomial_examples() {
        let (_, order) = setup();
        let f = q("x1*y1 - s*t");
        let g = q("x2*y1 - s*t");
        assert!(s_polynomial(&f, &f, &order).is_zero());
        assert_eq!(s_polynomial(&f, &g, &order), q("x1*s*t - x2*s*t"));
        let h = q("x2*t - s*t");
        let sp = s_polynomial(&f, &h, &order);
        assert!(normal_form(&sp, &[f, h], &order).is_zero());
    }

    #[test]
    fn arithmetic() {
        let (_, order) = setup();
        let a = q("x1 + s");
        let b = q("x1 - s");
        assert_eq!(a.mul(&b), q("x1^2 - s^2"));
        assert_eq!(a.add(&b), q("2*x1"));
        assert_eq!(a.sub(&a), Q::zero(5));
        assert_eq!(q("2*x1 + 4*s").monic(&order), q("x1 + 2*s"));
        assert!(q("x1*y1 - s*t").is_homogeneous());
        assert!(!q("x1 - 1").is_homogeneous());
    }

    #[test]
    fn prime_field_polynomials() {
        let (ctx, order) = setup();
        let f = PrimeField::new(3).unwrap();
        let p = Polynomial::<Fp>::parse("2*x1 + s", &ctx, &f).unwrap();
        assert_eq!(p.monic(&order).to_text(&order), "x1 + 2*s");
        assert!(p.scale(&Fp::new(3, f)).is_zero());
    }
}
