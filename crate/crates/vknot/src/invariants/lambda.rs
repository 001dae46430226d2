//! Realizable longitude images. For a finite group `G` with chosen
//! meridian image `μ`, the set of longitude images achievable by virtual
//! knot groups is `Λ = G' ∩ Z(μ)`. The closed form is computed from the
//! multiplication table; an empirical search over a diagram corpus
//! collects longitude images of actual homomorphisms and must always
//! land inside the closed form.

use std::collections::BTreeSet;

use crate::correspondence::{group_of_diagram, longitude_of_diagram};
use crate::gauss::GaussDiagram;
use crate::invariants::finite_group::FiniteGroup;
use crate::invariants::homs::{enumerate_homs, HomError, HomSearch};

/// `Λ = G' ∩ Z(μ)` plus a weight-one diagnostic. The closed form is
/// evaluated regardless of weight; `mu_weight_one` records whether `μ`
/// normally generates `G`, which the realization theorem requires for
/// the set to be achieved by surjections.
#[derive(Clone, Debug)]
pub struct RealizableSet {
    pub elements: BTreeSet<usize>,
    pub mu_weight_one: bool,
}

pub fn realizable_set(g: &FiniteGroup, mu: usize) -> RealizableSet {
    let derived = g.derived_subgroup();
    let centralizer = g.centralizer(mu);
    let elements: BTreeSet<usize> =
        derived.intersection(&centralizer).copied().collect();
    // the theorem says this is a subgroup; verify closure
    for &a in &elements {
        assert!(elements.contains(&g.inv(a)));
        for &b in &elements {
            assert!(elements.contains(&g.mul(a, b)));
        }
    }
    RealizableSet { elements, mu_weight_one: g.is_weight_one(mu) }
}

#[derive(Clone, Debug)]
pub struct EmpiricalSearch {
    /// Cap on hom-enumeration work per diagram.
    pub hom_budget: u128,
    /// Keep only homomorphisms onto all of `G`.
    pub surjective_only: bool,
    /// Extra random diagrams beyond the deterministic corpus.
    pub random_diagrams: usize,
    pub max_chords: usize,
    pub seed: u64,
}

impl Default for EmpiricalSearch {
    fn default() -> Self {
        EmpiricalSearch {
            hom_budget: 2_000_000,
            surjective_only: false,
            random_diagrams: 24,
            max_chords: 6,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct EmpiricalResult {
    pub found: BTreeSet<usize>,
    pub diagrams_tried: usize,
    /// Some diagrams were skipped because their hom search exceeded the
    /// budget.
    pub budget_exhausted: bool,
}

/// Collects longitude images over homomorphisms `Π_D -> G` with the
/// meridian arc sent to `μ`, for a corpus of seed diagrams, their
/// mirror-reverses, pairwise connected sums, and seeded random diagrams.
/// The result is always contained in [`realizable_set`].
pub fn empirical_realizable_search(
    g: &FiniteGroup,
    mu: usize,
    opts: &EmpiricalSearch,
) -> EmpiricalResult {
    let corpus = search_corpus(opts);
    let closed_form = realizable_set(g, mu);
    let mut found = BTreeSet::new();
    let mut budget_exhausted = false;
    for diagram in &corpus {
        let w = group_of_diagram(diagram);
        let peripheral =
            longitude_of_diagram(diagram, "t1").expect("t1 is always an arc");
        let homs = match enumerate_homs(
            w.presentation(),
            g,
            HomSearch {
                fix_meridian: Some(mu),
                surjective_only: opts.surjective_only,
                budget: opts.hom_budget,
            },
        ) {
            Ok(set) => set,
            Err(HomError::BudgetExceeded { .. }) => {
                budget_exhausted = true;
                continue;
            }
        };
        for image in homs.images_of(g, &peripheral.longitude) {
            assert!(
                closed_form.elements.contains(&image),
                "longitude image escaped G' ∩ Z(mu)"
            );
            found.insert(image);
        }
    }
    EmpiricalResult { found, diagrams_tried: corpus.len(), budget_exhausted }
}

/// Deterministic seed diagrams plus their mirror-reverses, pairwise
/// based sums, and seeded random diagrams.
pub fn search_corpus(opts: &EmpiricalSearch) -> Vec<GaussDiagram> {
    use rand::SeedableRng;
    let seeds: Vec<GaussDiagram> = [
        "",
        "O1+ U1+",
        "O1- U1-",
        "O1+ U2+ O3+ U1+ O2+ U3+",
        "O1- U2- O3- U1- O2- U3-",
        "O1+ U2- O3- U1+ O4+ U3- O2- U4+",
        "O1+ O2+ U1+ U2+",
        "O1+ U2+ U1+ O2+",
    ]
    .iter()
    .map(|code| GaussDiagram::parse(code).unwrap())
    .collect();

    let mut out: Vec<GaussDiagram> = Vec::new();
    let push = |d: GaussDiagram, out: &mut Vec<GaussDiagram>| {
        if d.n() <= opts.max_chords && !out.contains(&d) {
            out.push(d);
        }
    };
    for d in &seeds {
        push(d.clone(), &mut out);
        push(d.mirror_reverse(), &mut out);
    }
    let base: Vec<GaussDiagram> = out.clone();
    for a in &base {
        for b in &base {
            if a.n() + b.n() <= opts.max_chords {
                push(a.connected_sum(0, b, 0).unwrap(), &mut out);
            }
        }
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_diagrams {
        use rand::Rng;
        let n = rng.gen_range(1..=opts.max_chords.min(4));
        push(crate::sampling::random_diagram(&mut rng, n), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_transposition() {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.element_by_name("(12)").unwrap();
        let set = realizable_set(&s3, t);
        assert!(set.mu_weight_one);
        assert_eq!(set.elements, BTreeSet::from([s3.identity()]));
    }

    #[test]
    fn q8_formula() {
        let q8 = FiniteGroup::quaternion8();
        let i = q8.element_by_name("i").unwrap();
        let set = realizable_set(&q8, i);
        let one = q8.identity();
        let minus_one = q8.element_by_name("-1").unwrap();
        assert_eq!(set.elements, BTreeSet::from([one, minus_one]));
        // Q8 has no weight-one element at all
        assert!(!set.mu_weight_one);
        assert!((0..8).all(|x| !q8.is_weight_one(x)));
    }

    #[test]
    fn abelian_gives_identity_only() {
        let z6 = FiniteGroup::cyclic(6);
        let set = realizable_set(&z6, 1);
        assert_eq!(set.elements, BTreeSet::from([z6.identity()]));
        assert!(set.mu_weight_one);
    }

    #[test]
    fn empirical_contained_and_finds_identity() {
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.element_by_name("(12)").unwrap();
        let opts = EmpiricalSearch { random_diagrams: 6, max_chords: 4, ..Default::default() };
        let res = empirical_realizable_search(&s3, t, &opts);
        // Λ(S3, transposition) = {e}, and the kink finds the identity
        assert_eq!(res.found, BTreeSet::from([s3.identity()]));
    }
}
