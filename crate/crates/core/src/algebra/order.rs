use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::lattice::FiniteLattice;

use super::{AlgebraError, Monomial, VarContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum OrderKind {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            other => Err(AlgebraError::Parse(format!(
                "unknown monomial order `{other}`"
            ))),
        }
    }
}

/// A monomial order over the ascending ranking of a [`VarContext`].
///
/// * `Lex`: the highest-ranked variable where the exponents differ decides;
///   the larger exponent wins.
/// * `DegLex`: total degree first, then `Lex`.
/// * `DegRevLex`: total degree first; on ties the lowest-ranked variable where
///   the exponents differ decides, and the *smaller* exponent wins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    ctx: Arc<VarContext>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, ctx: Arc<VarContext>) -> Self {
        MonomialOrder { kind, ctx }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    /// Compares two monomials, checking that both live over this context.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, AlgebraError> {
        let n = self.ctx.var_count();
        if a.var_count() != n || b.var_count() != n {
            return Err(AlgebraError::ContextMismatch {
                expected: n,
                found: if a.var_count() != n {
                    a.var_count()
                } else {
                    b.var_count()
                },
            });
        }
        Ok(self.compare(a, b))
    }

    /// Unchecked comparison for monomials known to share the context.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.var_count(), self.ctx.var_count());
        debug_assert_eq!(b.var_count(), self.ctx.var_count());
        match self.kind {
            OrderKind::Lex => self.lex(a, b),
            OrderKind::DegLex => a.degree().cmp(&b.degree()).then_with(|| self.lex(a, b)),
            OrderKind::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for &v in self.ctx.ascending() {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for &v in self.ctx.ascending().iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Largest of the given monomials.
    pub fn max<'a>(&self, ms: impl IntoIterator<Item = &'a Monomial>) -> Option<&'a Monomial> {
        ms.into_iter().max_by(|a, b| self.compare(a, b))
    }
}

/// Whether `order` makes `ab` the leading monomial of `ab - (a∨b)(a∧b)` for
/// every incomparable pair `{a, b}` of `lattice`.
///
/// The order's context must have one variable per lattice element, indexed
/// like the lattice.
pub fn is_compatible_order(lattice: &FiniteLattice, order: &MonomialOrder) -> bool {
    let n = lattice.size();
    assert_eq!(
        order.context().var_count(),
        n,
        "order context does not match the lattice"
    );
    lattice.incomparable_pairs().into_iter().all(|(a, b)| {
        let product = Monomial::var(n, a).mul(&Monomial::var(n, b));
        let join_meet =
            Monomial::var(n, lattice.join(a, b)).mul(&Monomial::var(n, lattice.meet(a, b)));
        order.compare(&product, &join_meet) == Ordering::Greater
    })
}
