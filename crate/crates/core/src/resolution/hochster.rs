use std::collections::HashSet;

use rayon::prelude::*;

use crate::algebra::Monomial;
use crate::ideal::MonomialIdeal;

use super::complex::{homology_up_to, SimplicialComplex};
use super::{collect_table, BettiOptions, BettiTable, DegreeSupport, Multidegree, ResolutionError};

const MAX_VARIABLES: usize = 64;
const MAX_ALL_SQUAREFREE_VARIABLES: usize = 24;

/// Distinct lcms of nonempty sets of generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcmLattice {
    degrees: Vec<Multidegree>,
}

impl LcmLattice {
    /// Sorted by degree, then by exponent vector.
    pub fn degrees(&self) -> &[Multidegree] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn contains(&self, b: &Multidegree) -> bool {
        self.degrees.contains(b)
    }
}

/// Closure of the generators under pairwise lcm.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> LcmLattice {
    let gens = ideal.gens();
    let mut seen: HashSet<Monomial> = gens.iter().cloned().collect();
    let mut queue: Vec<Monomial> = seen.iter().cloned().collect();
    while let Some(m) = queue.pop() {
        for g in gens {
            let l = m.lcm(g);
            if !seen.contains(&l) {
                seen.insert(l.clone());
                queue.push(l);
            }
        }
    }
    let mut degrees: Vec<Monomial> = seen.into_iter().collect();
    degrees.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    LcmLattice { degrees }
}

/// `K^b(I) = { τ ⊆ supp(b) : x^(b - τ) ∈ I }` for squarefree `b`.
pub fn upper_koszul_complex(
    ideal: &MonomialIdeal,
    b: &Multidegree,
) -> Result<SimplicialComplex, ResolutionError> {
    if !b.is_squarefree() {
        return Err(ResolutionError::NonSquarefreeDegree);
    }
    if b.var_count() > MAX_VARIABLES {
        return Err(ResolutionError::TooManyVariables {
            count: b.var_count(),
            limit: MAX_VARIABLES,
        });
    }
    let b_mask = to_mask(b);
    let contains = |rest: u64| {
        let m = from_mask(rest, b.var_count());
        ideal.contains(&m)
    };
    Ok(koszul_faces(b_mask, contains, None))
}

/// Faces of `K^b` with at most `max_size` vertices, grown level by level.
fn koszul_faces(
    b: u64,
    in_ideal: impl Fn(u64) -> bool,
    max_size: Option<usize>,
) -> SimplicialComplex {
    if !in_ideal(b) {
        return SimplicialComplex::void();
    }
    let mut all = vec![0u64];
    let mut level = vec![0u64];
    let mut size = 0;
    while !level.is_empty() && max_size.is_none_or(|m| size < m) {
        let mut next = Vec::new();
        for &f in &level {
            // extend only by vertices above the current maximum
            let above = match 64 - f.leading_zeros() {
                64 => 0,
                h => !0u64 << h,
            };
            let mut candidates = b & above & !f;
            while candidates != 0 {
                let v = candidates & candidates.wrapping_neg();
                candidates &= candidates - 1;
                let g = f | v;
                if in_ideal(b & !g) {
                    next.push(g);
                }
            }
        }
        all.extend_from_slice(&next);
        level = next;
        size += 1;
    }
    SimplicialComplex::from_face_list(all)
}

fn to_mask(m: &Monomial) -> u64 {
    m.support().into_iter().fold(0, |acc, v| acc | (1u64 << v))
}

fn from_mask(mask: u64, var_count: usize) -> Monomial {
    Monomial::from_support(var_count, &super::complex::vertex_list(mask))
}

/// Multigraded Betti numbers `(i, b, B_{i,b})` of `R/I`, nonzero entries only,
/// sorted by `i` then by `b`.
pub fn multigraded_betti_hochster(
    ideal: &MonomialIdeal,
    options: &BettiOptions,
) -> Result<Vec<(usize, Multidegree, u64)>, ResolutionError> {
    if !ideal.is_squarefree() {
        return Err(ResolutionError::NonSquarefreeIdeal);
    }
    let n = ideal.var_count();
    if n > MAX_VARIABLES {
        return Err(ResolutionError::TooManyVariables {
            count: n,
            limit: MAX_VARIABLES,
        });
    }
    let mut out = vec![(0, Monomial::one(n), 1)];
    if options.max_index == Some(0) {
        return Ok(out);
    }
    if ideal.gens().iter().any(Monomial::is_one) {
        // unit ideal: R/I = 0
        return Ok(Vec::new());
    }
    let gens: Vec<u64> = ideal.gens().iter().map(to_mask).collect();
    let support: Vec<u64> = match options.support {
        DegreeSupport::LcmLattice => mask_lcm_closure(&gens),
        DegreeSupport::BoundedLcms => {
            let r = options.max_index.ok_or(ResolutionError::InvalidOptions(
                "bounded lcm support needs max_index",
            ))?;
            bounded_lcms(&gens, r)
        }
        DegreeSupport::AllSquarefree => {
            if n > MAX_ALL_SQUAREFREE_VARIABLES {
                return Err(ResolutionError::TooManyVariables {
                    count: n,
                    limit: MAX_ALL_SQUAREFREE_VARIABLES,
                });
            }
            (1..(1u64 << n)).collect()
        }
    };

    let characteristic = options.characteristic;
    // rows i <= r need H̃_d for d <= r - 2, hence faces with up to r vertices
    let max_size = options.max_index;
    let in_ideal = |m: u64| gens.iter().any(|&g| g & !m == 0);
    let mut found: Vec<(usize, Monomial, u64)> = support
        .par_iter()
        .flat_map_iter(|&b| {
            let cx = koszul_faces(b, in_ideal, max_size);
            let top = match (cx.dimension(), max_size) {
                (None, _) => return Vec::new(),
                (Some(d), None) => d,
                (Some(_), Some(r)) => r as isize - 2,
            };
            let ranks = homology_up_to(&cx, top, characteristic);
            (-1..=top)
                .filter_map(|d| {
                    let h = ranks.get(d) as u64;
                    (h > 0).then(|| ((d + 2) as usize, from_mask(b, n), h))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    found.sort_by(|a, b| (a.0, a.1.degree(), &a.1).cmp(&(b.0, b.1.degree(), &b.1)));
    out.extend(found);
    Ok(out)
}

/// Graded Betti table of `R/I` for squarefree `I` by Hochster's formula.
pub fn graded_betti_hochster(
    ideal: &MonomialIdeal,
    options: &BettiOptions,
) -> Result<BettiTable, ResolutionError> {
    Ok(collect_table(
        options,
        multigraded_betti_hochster(ideal, options)?,
    ))
}

fn mask_lcm_closure(gens: &[u64]) -> Vec<u64> {
    let mut seen: HashSet<u64> = gens.iter().copied().collect();
    let mut queue: Vec<u64> = seen.iter().copied().collect();
    while let Some(m) = queue.pop() {
        for &g in gens {
            let l = m | g;
            if seen.insert(l) {
                queue.push(l);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Lcms of between 1 and `r` generators.
fn bounded_lcms(gens: &[u64], r: usize) -> Vec<u64> {
    fn walk(gens: &[u64], start: usize, acc: u64, left: usize, out: &mut HashSet<u64>) {
        if left == 0 {
            return;
        }
        for i in start..gens.len() {
            let l = acc | gens[i];
            out.insert(l);
            walk(gens, i + 1, l, left - 1, out);
        }
    }
    let mut out = HashSet::new();
    walk(gens, 0, 0, r, &mut out);
    let mut v: Vec<u64> = out.into_iter().collect();
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Characteristic, MonomialOrder, OrderKind, VarContext};
    use crate::resolution::reduced_homology_ranks;

    fn ideal(names: &[&str], gens: &[&str]) -> (MonomialIdeal, VarContext) {
        let ctx = VarContext::new(names.iter().copied()).unwrap();
        let order = MonomialOrder::new(OrderKind::DegRevLex, std::sync::Arc::new(ctx.clone()));
        let ms = gens.iter().map(|g| ctx.parse_monomial(g).unwrap());
        (MonomialIdeal::new(names.len(), ms, &order), ctx)
    }

    fn pentagon() -> (MonomialIdeal, VarContext) {
        ideal(&["s", "x1", "x2", "y1", "t"], &["x1*y1", "x2*y1", "x2*s*t"])
    }

    fn shown(l: &LcmLattice, ctx: &VarContext) -> Vec<String> {
        l.degrees()
            .iter()
            .map(|m| m.display(ctx).to_string())
            .collect()
    }

    #[test]
    fn lcm_lattices() {
        let (i, ctx) = ideal(&["x"], &["x"]);
        assert_eq!(shown(&lcm_lattice(&i), &ctx), ["x"]);
        let (i, ctx) = ideal(&["x", "y", "z"], &["x*y", "y*z", "x*z"]);
        assert_eq!(
            shown(&lcm_lattice(&i), &ctx),
            ["y*z", "x*z", "x*y", "x*y*z"]
        );
        let (i, ctx) = pentagon();
        let mut got = shown(&lcm_lattice(&i), &ctx);
        got.sort();
        let mut want = vec![
            "x1*y1",
            "x2*y1",
            "s*x2*t",
            "x1*x2*y1",
            "s*x2*y1*t",
            "s*x1*x2*y1*t",
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn koszul_complexes() {
        let (i, ctx) = ideal(&["x"], &["x"]);
        let cx = upper_koszul_complex(&i, &ctx.parse_monomial("x").unwrap()).unwrap();
        assert_eq!(cx, SimplicialComplex::empty_face());

        let (i, ctx) = pentagon();
        let b = ctx.parse_monomial("x1*x2*y1").unwrap();
        let cx = upper_koszul_complex(&i, &b).unwrap();
        assert_eq!(cx.facets(), vec![vec![1], vec![2]]);
        assert_eq!(reduced_homology_ranks(&cx, Characteristic::Zero).get(0), 1);

        let outside = ctx.parse_monomial("s*t").unwrap();
        assert!(upper_koszul_complex(&i, &outside).unwrap().is_void());

        let square = ctx.parse_monomial("x1^2").unwrap();
        assert_eq!(
            upper_koszul_complex(&i, &square),
            Err(ResolutionError::NonSquarefreeDegree)
        );
    }

    #[test]
    fn pentagon_table() {
        let (i, _) = pentagon();
        let t = graded_betti_hochster(&i, &BettiOptions::default()).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(
            entries,
            [(0, 0, 1), (1, 2, 2), (1, 3, 1), (2, 3, 1), (2, 4, 1)]
        );
    }

    #[test]
    fn triangle_and_zero_ideal() {
        let (i, _) = ideal(&["x", "y", "z"], &["x*y", "y*z", "x*z"]);
        let t = graded_betti_hochster(&i, &BettiOptions::default()).unwrap();
        assert_eq!((t.get(1, 2), t.get(2, 3), t.total(3)), (3, 2, 0));

        let zero = MonomialIdeal::zero(3);
        let t = graded_betti_hochster(&zero, &BettiOptions::default()).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), [(0, 0, 1)]);
    }

    #[test]
    fn rejects_non_squarefree() {
        let (i, _) = ideal(&["x", "y"], &["x^2", "x*y"]);
        assert_eq!(
            graded_betti_hochster(&i, &BettiOptions::default()),
            Err(ResolutionError::NonSquarefreeIdeal)
        );
    }

    #[test]
    fn bounded_support_needs_a_bound() {
        let (i, _) = pentagon();
        let opts = BettiOptions::default().with_support(DegreeSupport::BoundedLcms);
        assert!(matches!(
            graded_betti_hochster(&i, &opts),
            Err(ResolutionError::InvalidOptions(_))
        ));
        let opts =
            BettiOptions::rows(Characteristic::Zero, 2).with_support(DegreeSupport::BoundedLcms);
        let full = graded_betti_hochster(&i, &BettiOptions::default()).unwrap();
        assert!(graded_betti_hochster(&i, &opts)
            .unwrap()
            .same_entries(&full.truncated(2)));
    }
}
