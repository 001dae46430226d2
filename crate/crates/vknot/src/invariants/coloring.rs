//! Fox colorings. A labeling of the generators in `Z/n` colors a
//! Wirtinger presentation when every relator `t_i^-1 t_j^w` satisfies
//! the dihedral rule: conjugating a reflection `r_x` by `r_b` gives
//! `r_{2b - x}`, so the relator imposes one linear equation on the
//! labels. Counting solutions of the integer system mod `n` goes
//! through the Smith normal form.

use num_bigint::BigInt;
use num_traits::One;

use crate::gauss::GaussDiagram;
use crate::homology::IntMatrix;
use crate::wirtinger::WirtingerData;

/// One row per relator: the linear coloring equation with integer
/// coefficients, before reduction mod `n`.
pub fn coloring_matrix(w: &WirtingerData) -> IntMatrix {
    let gens = w.presentation().num_gens();
    let shapes = w.shapes();
    let mut m = IntMatrix::zero(shapes.len(), gens);
    for (row, sh) in shapes.iter().enumerate() {
        let mut coeffs = vec![0i64; gens];
        // conjugating the reflection labeled x_src by the word's letters
        // left to right: x -> 2b - x per letter b (sign irrelevant)
        let k = sh.conjugator.len() as i64;
        let par = |j: i64| if (k - j) % 2 == 0 { 1 } else { -1 };
        coeffs[sh.target] += 1;
        coeffs[sh.source] -= par(0);
        for (m_idx, &(b, _)) in sh.conjugator.letters().iter().enumerate() {
            coeffs[b] -= 2 * par(m_idx as i64 + 1);
        }
        for (col, &c) in coeffs.iter().enumerate() {
            m[(row, col)] = BigInt::from(c);
        }
    }
    m
}

/// Number of colorings in `Z/n`: solutions of the coloring system
/// mod `n`, computed exactly. Always a multiple of `n` and at least `n`
/// (constant labelings).
pub fn count_colorings(w: &WirtingerData, n: u64) -> BigInt {
    assert!(n >= 2, "modulus must be at least 2");
    let m = coloring_matrix(w);
    let snf = m.smith_normal_form();
    let n_big = BigInt::from(n);
    let mut count = BigInt::one();
    for d in &snf.invariant_factors {
        count *= gcd(d.clone(), n_big.clone());
    }
    for _ in snf.rank..m.cols() {
        count *= &n_big;
    }
    count
}

pub fn count_colorings_diagram(d: &GaussDiagram, n: u64) -> BigInt {
    count_colorings(&crate::correspondence::group_of_diagram(d), n)
}

fn gcd(a: BigInt, b: BigInt) -> BigInt {
    use num_traits::Zero;
    let (mut a, mut b) = (a, b);
    while !b.is_zero() {
        let r = &a % &b;
        a = std::mem::replace(&mut b, r);
    }
    if a < BigInt::zero() {
        -a
    } else {
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correspondence::group_of_diagram;
    use crate::invariants::finite_group::FiniteGroup;

    fn diagram(code: &str) -> GaussDiagram {
        GaussDiagram::parse(code).unwrap()
    }

    /// Oracle: count labelings by brute dihedral evaluation.
    fn brute_count(w: &WirtingerData, n: u64) -> u64 {
        let dn = FiniteGroup::dihedral(n as usize);
        let refl: Vec<usize> = FiniteGroup::dihedral_reflections(n as usize).collect();
        let gens = w.presentation().num_gens();
        let mut count = 0u64;
        let mut idx = vec![0usize; gens];
        loop {
            let images: Vec<usize> = idx.iter().map(|&i| refl[i]).collect();
            let ok = w
                .presentation()
                .relators()
                .iter()
                .all(|r| dn.eval_word(&images, r) == dn.identity());
            if ok {
                count += 1;
            }
            let mut carry = true;
            for slot in idx.iter_mut() {
                *slot += 1;
                if *slot < refl.len() {
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry {
                break;
            }
        }
        count
    }

    #[test]
    fn unknot_counts() {
        let free = group_of_diagram(&GaussDiagram::empty());
        assert_eq!(count_colorings(&free, 3), BigInt::from(3));
        assert_eq!(count_colorings(&free, 5), BigInt::from(5));
        let kink = group_of_diagram(&diagram("O1+ U1+"));
        assert_eq!(count_colorings(&kink, 3), BigInt::from(3));
    }

    #[test]
    fn trefoil_three_colorings() {
        let w = group_of_diagram(&diagram("O1- U2- O3- U1- O2- U3-"));
        assert_eq!(count_colorings(&w, 3), BigInt::from(9));
        assert_eq!(count_colorings(&w, 5), BigInt::from(5));
        assert_eq!(brute_count(&w, 3), 9);
    }

    #[test]
    fn linear_count_matches_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let d = crate::sampling::random_diagram(&mut rng, 3);
            let w = group_of_diagram(&d);
            for n in [2u64, 3, 4, 5] {
                let fast = count_colorings(&w, n);
                let brute = brute_count(&w, n);
                assert_eq!(fast, BigInt::from(brute), "{} mod {n}", d.serialize());
            }
        }
    }
}
