//! Enumeration of homomorphisms from a finitely presented group to a
//! finite group. When the presentation is Wirtinger all generators are
//! conjugate, so generator images are confined to a single conjugacy
//! class; this cuts the search from `|G|^n` to class-size powers.

use thiserror::Error;

use crate::invariants::finite_group::FiniteGroup;
use crate::wirtinger::WirtingerData;
use crate::words::{Presentation, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomError {
    #[error("search space {space} exceeds budget {budget}")]
    BudgetExceeded { space: u128, budget: u128 },
}

pub const DEFAULT_HOM_BUDGET: u128 = 20_000_000;

/// All homomorphisms found, as generator-image tuples.
#[derive(Clone, Debug)]
pub struct HomSet {
    pub target_name: String,
    pub homs: Vec<Vec<usize>>,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    /// Image of a word under each stored homomorphism.
    pub fn images_of(&self, g: &FiniteGroup, w: &Word) -> Vec<usize> {
        self.homs.iter().map(|images| g.eval_word(images, w)).collect()
    }
}

/// Options for [`enumerate_homs`].
#[derive(Clone, Copy, Debug)]
pub struct HomSearch {
    /// Force the image of generator 0 (the meridian arc).
    pub fix_meridian: Option<usize>,
    /// Keep only homomorphisms whose image generates the whole group.
    pub surjective_only: bool,
    /// Cap on candidate tuples.
    pub budget: u128,
}

impl Default for HomSearch {
    fn default() -> Self {
        HomSearch { fix_meridian: None, surjective_only: false, budget: DEFAULT_HOM_BUDGET }
    }
}

/// Enumerates every homomorphism `P -> G` under the given options.
/// For Wirtinger presentations the image tuple is confined to one
/// conjugacy class of `G`.
pub fn enumerate_homs(
    p: &Presentation,
    g: &FiniteGroup,
    opts: HomSearch,
) -> Result<HomSet, HomError> {
    let n = p.num_gens();
    let wirtinger = WirtingerData::recognize(p).is_ok();

    // candidate image sets per generator
    let domains: Vec<Vec<usize>> = if wirtinger {
        Vec::new() // handled per class below
    } else {
        (0..n)
            .map(|i| match opts.fix_meridian {
                Some(mu) if i == 0 => vec![mu],
                _ => (0..g.order()).collect(),
            })
            .collect()
    };

    let mut homs: Vec<Vec<usize>> = Vec::new();
    if wirtinger {
        let classes = match opts.fix_meridian {
            Some(mu) => vec![g.conjugacy_class(mu)],
            None => g.conjugacy_classes().into_iter().collect(),
        };
        let mut space: u128 = 0;
        for class in &classes {
            let exp = if opts.fix_meridian.is_some() { n.saturating_sub(1) } else { n };
            space = space.saturating_add((class.len() as u128).saturating_pow(exp as u32));
        }
        if space > opts.budget {
            return Err(HomError::BudgetExceeded { space, budget: opts.budget });
        }
        for class in classes {
            let elems: Vec<usize> = class.into_iter().collect();
            let doms: Vec<Vec<usize>> = (0..n)
                .map(|i| match opts.fix_meridian {
                    Some(mu) if i == 0 => vec![mu],
                    _ => elems.clone(),
                })
                .collect();
            backtrack(p, g, &doms, &mut homs);
        }
    } else {
        let mut space: u128 = 1;
        for d in &domains {
            space = space.saturating_mul(d.len() as u128);
        }
        if space > opts.budget {
            return Err(HomError::BudgetExceeded { space, budget: opts.budget });
        }
        backtrack(p, g, &domains, &mut homs);
    }

    if opts.surjective_only {
        homs.retain(|images| {
            g.subgroup_generated(&images.iter().copied().collect()).len() == g.order()
        });
    }
    Ok(HomSet { target_name: g.name().to_string(), homs })
}

fn backtrack(
    p: &Presentation,
    g: &FiniteGroup,
    domains: &[Vec<usize>],
    out: &mut Vec<Vec<usize>>,
) {
    let n = p.num_gens();
    // relators checked as soon as their last generator is assigned
    let due: Vec<Vec<&Word>> = {
        let mut due: Vec<Vec<&Word>> = vec![Vec::new(); n + 1];
        for r in p.relators() {
            let depth = r.max_gen().map_or(0, |m| m + 1);
            due[depth].push(r);
        }
        due
    };
    let mut images = vec![0usize; n];
    fn rec(
        g: &FiniteGroup,
        domains: &[Vec<usize>],
        due: &[Vec<&Word>],
        images: &mut Vec<usize>,
        depth: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        for r in &due[depth] {
            if g.eval_word(images, r) != g.identity() {
                return;
            }
        }
        if depth == domains.len() {
            out.push(images.clone());
            return;
        }
        for &x in &domains[depth] {
            images[depth] = x;
            rec(g, domains, due, images, depth + 1, out);
        }
    }
    rec(g, domains, &due, &mut images, 0, out);
}

/// Per-group fingerprint of hom counts, a cheap Tietze-invariant of the
/// presented group.
pub fn hom_count_fingerprint(p: &Presentation, order_bound: usize) -> Vec<(String, usize)> {
    FiniteGroup::catalog_upto(order_bound)
        .iter()
        .map(|g| {
            let set = enumerate_homs(p, g, HomSearch::default()).expect("within budget");
            (g.name().to_string(), set.len())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_has_order_many_homs() {
        let p = Presentation::parse("gens: t ; rels:").unwrap();
        for g in [FiniteGroup::symmetric(3), FiniteGroup::cyclic(5)] {
            let homs = enumerate_homs(&p, &g, HomSearch::default()).unwrap();
            assert_eq!(homs.len(), g.order());
        }
    }

    #[test]
    fn trefoil_to_s3() {
        let p = Presentation::parse("gens: t2 t4 ; rels: t2 t4 t2 = t4 t2 t4").unwrap();
        let s3 = FiniteGroup::symmetric(3);
        let homs = enumerate_homs(&p, &s3, HomSearch::default()).unwrap();
        assert_eq!(homs.len(), 12);
        let surj = enumerate_homs(
            &p,
            &s3,
            HomSearch { surjective_only: true, ..Default::default() },
        )
        .unwrap();
        assert_eq!(surj.len(), 6); // the transposition pairs with a ≠ b
    }

    #[test]
    fn meridian_fixing() {
        let p = Presentation::parse("gens: t2 t4 ; rels: t2 t4 t2 = t4 t2 t4").unwrap();
        let s3 = FiniteGroup::symmetric(3);
        let t = s3.element_by_name("(12)").unwrap();
        let homs = enumerate_homs(
            &p,
            &s3,
            HomSearch { fix_meridian: Some(t), ..Default::default() },
        )
        .unwrap();
        assert_eq!(homs.len(), 3);
        assert!(homs.homs.iter().all(|im| im[0] == t));
    }

    #[test]
    fn budget() {
        let p = Presentation::parse("gens: a b c d e f ; rels:").unwrap();
        let s4 = FiniteGroup::symmetric(4);
        let res = enumerate_homs(&p, &s4, HomSearch { budget: 1000, ..Default::default() });
        assert!(matches!(res, Err(HomError::BudgetExceeded { .. })));
    }
}
