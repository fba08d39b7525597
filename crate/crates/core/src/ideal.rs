//! Join-meet ideals, reduced Gröbner bases via Buchberger's algorithm, and
//! initial monomial ideals.

use std::cmp::Ordering;
use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{normal_form, s_polynomial, Coefficient, Monomial, MonomialOrder, Polynomial};
use crate::lattice::{Element, FiniteLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("Buchberger run cancelled: basis grew beyond {limit} elements")]
    Cancelled { limit: usize },
    #[error("generators live over {found} variables, order has {expected}")]
    ContextMismatch { expected: usize, found: usize },
}

/// Binomials `ab - (a∨b)(a∧b)`, one per incomparable pair `{a, b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialGeneratorSet<C: Coefficient> {
    pub gens: Vec<Polynomial<C>>,
    pub source_pairs: Vec<(Element, Element)>,
}

impl<C: Coefficient> BinomialGeneratorSet<C> {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// The join-meet ideal of `lattice` over one variable per element. Comparable
/// pairs give the zero binomial and are skipped.
pub fn join_meet_ideal<C: Coefficient>(
    lattice: &FiniteLattice,
    field: &C::Field,
) -> BinomialGeneratorSet<C> {
    let n = lattice.size();
    let var = |e| Monomial::var(n, e);
    let source_pairs = lattice.incomparable_pairs();
    let gens = source_pairs
        .iter()
        .map(|&(a, b)| {
            let product = var(a).mul(&var(b));
            let join_meet = var(lattice.join(a, b)).mul(&var(lattice.meet(a, b)));
            Polynomial::binomial(product, join_meet, field)
        })
        .collect();
    BinomialGeneratorSet { gens, source_pairs }
}

/// Knobs for [`buchberger_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Abort once the working basis exceeds this many polynomials.
    pub max_basis_size: Option<usize>,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions {
            max_basis_size: Some(10_000),
        }
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<C: Coefficient>(
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    buchberger_with(gens, order, GroebnerOptions::default())
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first), the coprime-leading-monomial criterion and the chain criterion,
/// followed by full interreduction.
///
/// The result is monic, sorted by leading monomial (degree first), and unique for
/// the ideal and order.
pub fn buchberger_with<C: Coefficient>(
    gens: &[Polynomial<C>],
    order: &MonomialOrder,
    options: GroebnerOptions,
) -> Result<Vec<Polynomial<C>>, GroebnerError> {
    let n = order.context().var_count();
    if let Some(g) = gens.iter().find(|g| g.var_count() != n) {
        return Err(GroebnerError::ContextMismatch {
            expected: n,
            found: g.var_count(),
        });
    }
    let mut basis: Vec<Polynomial<C>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero").clone())
        .collect();

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(pair) = select_pair(&pending, &leads, order) {
        pending.remove(&pair);
        let (i, j) = pair;
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        if chain_criterion(i, j, &leads, &pending) {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j], order), &basis, order);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(order);
        let new = basis.len();
        if let Some(limit) = options.max_basis_size {
            if new >= limit {
                return Err(GroebnerError::Cancelled { limit });
            }
        }
        leads.push(h.leading_monomial(order).expect("nonzero").clone());
        basis.push(h);
        for k in 0..new {
            pending.insert((k, new));
        }
    }

    Ok(interreduce(basis, order))
}

fn select_pair(
    pending: &HashSet<(usize, usize)>,
    leads: &[Monomial],
    order: &MonomialOrder,
) -> Option<(usize, usize)> {
    pending.iter().copied().min_by(|&(a, b), &(c, d)| {
        let l1 = leads[a].lcm(&leads[b]);
        let l2 = leads[c].lcm(&leads[d]);
        order.compare(&l1, &l2).then((b, a).cmp(&(d, c)))
    })
}

/// Buchberger's second criterion: the pair `(i, j)` is redundant when some
/// `k` has a leading monomial dividing `lcm(i, j)` and neither `(i, k)` nor
/// `(j, k)` is still pending.
fn chain_criterion(
    i: usize,
    j: usize,
    leads: &[Monomial],
    pending: &HashSet<(usize, usize)>,
) -> bool {
    let l = leads[i].lcm(&leads[j]);
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    (0..leads.len()).any(|k| {
        k != i
            && k != j
            && leads[k].divides(&l)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn interreduce<C: Coefficient>(
    basis: Vec<Polynomial<C>>,
    order: &MonomialOrder,
) -> Vec<Polynomial<C>> {
    // Keep polynomials whose leading monomial is not divisible by another
    // kept leading monomial; among equal leading monomials keep the first.
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(order).expect("nonzero").clone())
        .collect();
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, lj)| j != i && lj.divides(&leads[i]) && (lj != &leads[i] || j < i));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial<C>> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial<C>> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = minimal[i].leading_term(order).expect("nonzero");
        let head = Polynomial::term(lm.clone(), lc.clone());
        let tail = normal_form(&minimal[i].sub(&head), &others, order);
        reduced.push(head.add(&tail).monic(order));
    }
    reduced.sort_by(|a, b| {
        canonical_cmp(
            order,
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    reduced
}

/// Total degree first, then the monomial order.
fn canonical_cmp(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| order.compare(a, b))
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis<C: Coefficient>(basis: &[Polynomial<C>], order: &MonomialOrder) -> bool {
    (0..basis.len()).all(|j| {
        (0..j).all(|i| {
            normal_form(&s_polynomial(&basis[i], &basis[j], order), basis, order).is_zero()
        })
    })
}

/// Whether `basis` is a reduced Gröbner basis: monic, and no term of any
/// element divisible by the leading monomial of another.
pub fn is_reduced_groebner_basis<C: Coefficient>(
    basis: &[Polynomial<C>],
    order: &MonomialOrder,
) -> bool {
    let leads: Vec<&Monomial> = basis
        .iter()
        .filter_map(|g| g.leading_monomial(order))
        .collect();
    if leads.len() != basis.len() {
        return false;
    }
    let monic = basis
        .iter()
        .all(|g| g.leading_term(order).is_some_and(|(_, c)| c.is_one()));
    let autoreduced = basis.iter().enumerate().all(|(i, g)| {
        g.monomials().all(|m| {
            leads
                .iter()
                .enumerate()
                .all(|(j, l)| j == i || !l.divides(m))
        })
    });
    monic && autoreduced && is_groebner_basis(basis, order)
}

/// A monomial ideal given by its minimal generators, sorted by degree and
/// then by the monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    var_count: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` under divisibility and sorts them canonically.
    pub fn new(
        var_count: usize,
        gens: impl IntoIterator<Item = Monomial>,
        order: &MonomialOrder,
    ) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        assert!(
            all.iter().all(|m| m.var_count() == var_count),
            "generator over a different number of variables"
        );
        all.sort();
        all.dedup();
        let mut gens: Vec<Monomial> = all
            .iter()
            .filter(|m| !all.iter().any(|d| d != *m && d.divides(m)))
            .cloned()
            .collect();
        gens.sort_by(|a, b| canonical_cmp(order, a, b));
        MonomialIdeal { var_count, gens }
    }

    /// Uses degree-reverse-lex over variables ranked by index for sorting.
    pub fn from_exponents(var_count: usize, gens: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let order = MonomialOrder::new(
            crate::algebra::OrderKind::DegRevLex,
            crate::algebra::VarContext::standard(var_count),
        );
        Self::new(
            var_count,
            gens.into_iter().map(Monomial::from_exponents),
            &order,
        )
    }

    pub fn zero(var_count: usize) -> Self {
        MonomialIdeal {
            var_count,
            gens: Vec::new(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Number of minimal generators in each degree.
    pub fn degree_census(&self) -> std::collections::BTreeMap<u64, u64> {
        let mut census = std::collections::BTreeMap::new();
        for g in &self.gens {
            *census.entry(g.degree()).or_insert(0) += 1;
        }
        census
    }

    pub fn to_strings(&self, order: &MonomialOrder) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| g.display(order.context()).to_string())
            .collect()
    }
}

/// Minimal generators of the ideal of leading monomials of `gb`.
pub fn initial_ideal<C: Coefficient>(gb: &[Polynomial<C>], order: &MonomialOrder) -> MonomialIdeal {
    let n = order.context().var_count();
    MonomialIdeal::new(
        n,
        gb.iter().filter_map(|g| g.leading_monomial(order).cloned()),
        order,
    )
}

/// JSON shape of a Gröbner computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub variables: Vec<String>,
    pub basis: Vec<String>,
    pub initial_ideal: Vec<String>,
}

impl GroebnerReport {
    pub fn new<C: Coefficient>(
        basis: &[Polynomial<C>],
        initial: &MonomialIdeal,
        order: &MonomialOrder,
    ) -> Self {
        GroebnerReport {
            variables: order.context().names().to_vec(),
            basis: basis.iter().map(|g| g.to_text(order)).collect(),
            initial_ideal: initial.to_strings(order),
        }
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::{Fp, OrderKind, PrimeField, Rational, VarContext};
    use crate::lattice::CrystalParams;

    type Q = Polynomial<Rational>;

    fn crystal(n1: usize, n2: usize) -> (FiniteLattice, MonomialOrder) {
        let l = FiniteLattice::crystal(&CrystalParams::two_chains(n1, n2).unwrap());
        let order = MonomialOrder::new(OrderKind::DegRevLex, VarContext::from_lattice(&l));
        (l, order)
    }

    fn texts(ms: &MonomialIdeal, order: &MonomialOrder) -> Vec<String> {
        ms.to_strings(order)
    }

    #[test]
    fn join_meet_generators() {
        let chain = FiniteLattice::crystal(&CrystalParams::new(1, vec![3]).unwrap());
        assert!(join_meet_ideal::<Rational>(&chain, &()).is_empty());

        let (l, order) = crystal(2, 1);
        let jm = join_meet_ideal::<Rational>(&l, &());
        let shown: Vec<String> = jm.gens.iter().map(|g| g.to_text(&order)).collect();
        assert_eq!(shown, ["x1_1*x2_1 - s*t", "x1_2*x2_1 - s*t"]);
        assert_eq!(jm.source_pairs, [(1, 3), (2, 3)]);

        let (l, order) = crystal(1, 1);
        let jm = join_meet_ideal::<Rational>(&l, &());
        assert_eq!(jm.len(), 1);
        assert_eq!(jm.gens[0].to_text(&order), "x1_1*x2_1 - s*t");
    }

    #[test]
    fn single_binomial_is_its_own_basis() {
        let (l, order) = crystal(1, 1);
        let jm = join_meet_ideal::<Rational>(&l, &());
        let gb = buchberger(&jm.gens, &order).unwrap();
        assert_eq!(gb, jm.gens);
        assert_eq!(texts(&initial_ideal(&gb, &order), &order), ["x1_1*x2_1"]);
    }

    #[test]
    fn pentagon_basis() {
        let (l, order) = crystal(2, 1);
        let jm = join_meet_ideal::<Rational>(&l, &());
        let gb = buchberger(&jm.gens, &order).unwrap();
        let shown: Vec<String> = gb.iter().map(|g| g.to_text(&order)).collect();
        assert_eq!(
            shown,
            ["x1_1*x2_1 - s*t", "x1_2*x2_1 - s*t", "s*x1_2*t - s*x1_1*t"]
        );
        assert!(is_reduced_groebner_basis(&gb, &order));
        assert_eq!(
            texts(&initial_ideal(&gb, &order), &order),
            ["x1_1*x2_1", "x1_2*x2_1", "s*x1_2*t"]
        );
    }

    #[test]
    fn three_by_one_initial_ideal() {
        let (l, order) = crystal(3, 1);
        let gb = buchberger(&join_meet_ideal::<Rational>(&l, &()).gens, &order).unwrap();
        assert_eq!(
            texts(&initial_ideal(&gb, &order), &order),
            [
                "x1_1*x2_1",
                "x1_2*x2_1",
                "x1_3*x2_1",
                "s*x1_2*t",
                "s*x1_3*t"
            ]
        );
    }

    #[test]
    fn prime_field_agrees_with_rationals() {
        let (l, order) = crystal(3, 2);
        let f = PrimeField::new(2).unwrap();
        let q = buchberger(&join_meet_ideal::<Rational>(&l, &()).gens, &order).unwrap();
        let p = buchberger(&join_meet_ideal::<Fp>(&l, &f).gens, &order).unwrap();
        assert_eq!(initial_ideal(&q, &order), initial_ideal(&p, &order));
        assert!(is_reduced_groebner_basis(&p, &order));
    }

    #[test]
    fn general_polynomials() {
        // x^2 - y, xy - 1 under degrevlex with y < x.
        let ctx = Arc::new(VarContext::new(["y", "x"]).unwrap());
        let order = MonomialOrder::new(OrderKind::DegRevLex, ctx.clone());
        let gens = vec![
            Q::parse("x^2 - y", &ctx, &()).unwrap(),
            Q::parse("x*y - 1", &ctx, &()).unwrap(),
        ];
        let gb = buchberger(&gens, &order).unwrap();
        assert!(is_reduced_groebner_basis(&gb, &order));
        // y^2 - x lies in the ideal: y(x^2 - y) ... reduces to zero.
        let probe = Q::parse("y^2 - x", &ctx, &()).unwrap();
        assert!(normal_form(&probe, &gb, &order).is_zero());
        assert!(buchberger::<Rational>(&[], &order).unwrap().is_empty());
    }

    #[test]
    fn basis_limit_cancels() {
        let (l, order) = crystal(4, 2);
        let gens = join_meet_ideal::<Rational>(&l, &()).gens;
        let err = buchberger_with(
            &gens,
            &order,
            GroebnerOptions {
                max_basis_size: Some(gens.len()),
            },
        )
        .unwrap_err();
        assert!(matches!(err, GroebnerError::Cancelled { .. }));
    }

    #[test]
    fn monomial_ideal_minimalization() {
        let ideal = MonomialIdeal::from_exponents(2, [vec![1, 0], vec![1, 1], vec![1, 0]]);
        assert_eq!(ideal.gens(), [Monomial::from_exponents(vec![1, 0])]);
        assert!(ideal.contains(&Monomial::from_exponents(vec![3, 2])));
        assert!(!ideal.contains(&Monomial::from_exponents(vec![0, 2])));
    }

    #[test]
    fn report_json_shape() {
        let (l, order) = crystal(2, 1);
        let gb = buchberger(&join_meet_ideal::<Rational>(&l, &()).gens, &order).unwrap();
        let report = GroebnerReport::new(&gb, &initial_ideal(&gb, &order), &order);
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["variables"][0], "s");
        assert_eq!(json["initial_ideal"][2], "s*x1_2*t");
        assert_eq!(json["basis"].as_array().unwrap().len(), 3);
    }
}
