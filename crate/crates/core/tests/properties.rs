mod common;

use joinmeet::algebra::{
    normal_form, Monomial, MonomialOrder, OrderKind, Polynomial, Rational, VarContext,
};
use joinmeet::ideal::{buchberger, join_meet_ideal};
use joinmeet::lattice::{CrystalParams, FiniteLattice};
use proptest::prelude::*;
use std::cmp::Ordering;

use common::{crystal_covers, degrevlex, order_from_covers, BruteLattice};

const VARS: usize = 5;

fn exps() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..4, VARS)
}

fn grevlex() -> MonomialOrder {
    MonomialOrder::new(OrderKind::DegRevLex, VarContext::standard(VARS))
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::from_exponents(e.to_vec())
}

proptest! {
    #[test]
    fn order_matches_oracle(a in exps(), b in exps()) {
        prop_assert_eq!(grevlex().compare(&mono(&a), &mono(&b)), degrevlex(&a, &b));
    }

    #[test]
    fn orders_are_antisymmetric_and_multiplicative(
        a in exps(), b in exps(), c in exps(), kind in prop_oneof![
            Just(OrderKind::Lex), Just(OrderKind::DegLex), Just(OrderKind::DegRevLex)
        ],
    ) {
        let order = MonomialOrder::new(kind, VarContext::standard(VARS));
        let (ma, mb, mc) = (mono(&a), mono(&b), mono(&c));
        let ab = order.compare(&ma, &mb);
        prop_assert_eq!(ab, order.compare(&mb, &ma).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(order.compare(&ma.mul(&mc), &mb.mul(&mc)), ab);
        // 1 is the smallest monomial
        prop_assert_ne!(order.compare(&Monomial::one(VARS), &ma), Ordering::Greater);
        let bc = order.compare(&mb, &mc);
        if ab == bc && ab != Ordering::Equal {
            prop_assert_eq!(order.compare(&ma, &mc), ab);
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_kills_ideal_members(
        terms in prop::collection::vec((prop::collection::vec(0u32..3, 5), -3i64..4), 0..6),
        multiplier in prop::collection::vec(0u32..2, 5),
        which in 0usize..3,
    ) {
        let lattice = FiniteLattice::crystal(&CrystalParams::two_chains(2, 1).unwrap());
        let order = MonomialOrder::new(OrderKind::DegRevLex, VarContext::from_lattice(&lattice));
        let gb = buchberger(&join_meet_ideal::<Rational>(&lattice, &()).gens, &order).unwrap();
        let f = Polynomial::from_terms(5, terms.iter().map(|(e, c)| (mono(e), Rational::from_integer((*c).into()))));
        let r = normal_form(&f, &gb, &order);
        prop_assert_eq!(normal_form(&r, &gb, &order), r.clone());
        // no remainder term is divisible by a leading monomial
        for m in r.monomials() {
            prop_assert!(gb.iter().all(|g| !g.leading_monomial(&order).unwrap().divides(m)));
        }
        let member = gb[which % gb.len()].mul_term(&mono(&multiplier), &Rational::from_integer(2.into()));
        prop_assert!(normal_form(&member, &gb, &order).is_zero());
        prop_assert_eq!(normal_form(&f.add(&member), &gb, &order), r);
    }

    #[test]
    fn random_covers_agree_with_brute_force(
        n in 2usize..7,
        edges in prop::collection::vec((0usize..7, 0usize..7), 0..12),
    ) {
        // orient every edge upward in index order so there are no cycles
        let mut covers: Vec<(usize, usize)> = edges
            .into_iter()
            .filter(|&(a, b)| a < n && b < n && a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        covers.sort();
        covers.dedup();
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let named: Vec<(String, String)> =
            covers.iter().map(|&(a, b)| (labels[a].clone(), labels[b].clone())).collect();
        let brute = BruteLattice { n, leq: order_from_covers(n, &covers) };
        match FiniteLattice::from_cover_relations(&labels, &named) {
            Ok(l) => {
                prop_assert!(brute.is_lattice());
                for a in 0..n {
                    for b in 0..n {
                        prop_assert_eq!(l.leq(a, b), brute.leq[a][b]);
                        prop_assert_eq!(Some(l.join(a, b)), brute.join(a, b));
                        prop_assert_eq!(Some(l.meet(a, b)), brute.meet(a, b));
                        prop_assert_eq!(l.join(a, l.meet(a, b)), a);
                        prop_assert_eq!(l.meet(a, l.join(a, b)), a);
                    }
                }
                prop_assert_eq!(l.is_distributive(), brute.is_distributive());
                prop_assert_eq!(l.is_modular(), brute.is_modular());
            }
            Err(_) => prop_assert!(!brute.is_lattice()),
        }
    }

    #[test]
    fn crystal_tables_match_brute_force(ns in prop::collection::vec(1usize..4, 1..4)) {
        let lattice = FiniteLattice::crystal(&CrystalParams::new(ns.len(), ns.clone()).unwrap());
        let (labels, covers) = crystal_covers(&ns);
        prop_assert_eq!(lattice.labels(), labels.as_slice());
        let brute = BruteLattice { n: labels.len(), leq: order_from_covers(labels.len(), &covers) };
        for a in 0..brute.n {
            for b in 0..brute.n {
                prop_assert_eq!(Some(lattice.join(a, b)), brute.join(a, b));
                prop_assert_eq!(Some(lattice.meet(a, b)), brute.meet(a, b));
                for c in 0..brute.n {
                    prop_assert_eq!(
                        lattice.join(lattice.join(a, b), c),
                        lattice.join(a, lattice.join(b, c))
                    );
                }
            }
        }
    }
}
