//! Fox calculus: the Alexander matrix of a Wirtinger presentation (free
//! derivatives abelianized by sending every generator to `t`), elementary
//! ideals as minor lists, and a bounded-degree two-way membership check
//! for ideal equality over `Z[t, t^-1]`.

use num_bigint::BigInt;

use crate::homology::{solve, IntMatrix};
use crate::invariants::laurent::LaurentPoly;
use crate::wirtinger::WirtingerData;
use crate::words::Word;

/// Abelianized Fox derivative `∂w/∂x` with every generator mapped to
/// `t`: letters `x` at abelianized prefix `t^e` contribute `t^e`,
/// letters `x^-1` contribute `-t^{e-1}`.
pub fn fox_derivative(w: &Word, x: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero('t');
    let mut prefix = 0i64;
    for &(g, e) in w.letters() {
        if e > 0 {
            if g == x {
                out = out.add(&LaurentPoly::monomial('t', prefix, 1));
            }
            prefix += 1;
        } else {
            prefix -= 1;
            if g == x {
                out = out.add(&LaurentPoly::monomial('t', prefix, -1));
            }
        }
    }
    out
}

/// The (relators × generators) Alexander matrix of a Wirtinger
/// presentation.
pub fn fox_alexander_matrix(w: &WirtingerData) -> Vec<Vec<LaurentPoly>> {
    let p = w.presentation();
    p.relators()
        .iter()
        .map(|r| (0..p.num_gens()).map(|x| fox_derivative(r, x)).collect())
        .collect()
}

/// Generators of the k-th elementary ideal: all `(g - k) × (g - k)`
/// minors of the matrix with one generator column dropped (`g` =
/// generator count; the Wirtinger redundancy makes the choice of the
/// dropped column immaterial). Minors are unit-normalized and deduped;
/// an empty list is the zero ideal.
pub fn elementary_ideal_generators(
    matrix: &[Vec<LaurentPoly>],
    num_gens: usize,
    k: usize,
    drop_col: usize,
) -> Vec<LaurentPoly> {
    assert!(k >= 1 && drop_col < num_gens);
    let rows = matrix.len();
    let cols: Vec<usize> = (0..num_gens).filter(|&c| c != drop_col).collect();
    let size = match num_gens.checked_sub(k) {
        Some(s) => s,
        None => return vec![],
    };
    if size == 0 {
        return vec![LaurentPoly::one('t')];
    }
    if size > rows || size > cols.len() {
        return vec![];
    }
    let mut out: Vec<LaurentPoly> = Vec::new();
    for row_set in combinations(rows, size) {
        for col_set in combinations(cols.len(), size) {
            let sub: Vec<Vec<&LaurentPoly>> = row_set
                .iter()
                .map(|&i| col_set.iter().map(|&j| &matrix[i][cols[j]]).collect())
                .collect();
            let m = determinant(&sub).normalized_unit();
            if !m.is_zero() && !out.contains(&m) {
                out.push(m);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).combinations(k).collect()
}

fn determinant(m: &[Vec<&LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentPoly::zero('t');
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<&LaurentPoly>> = (1..n)
            .map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c]).collect())
            .collect();
        let cofactor = determinant(&minor).mul(entry);
        acc = if j % 2 == 0 { acc.add(&cofactor) } else { acc.sub(&cofactor) };
    }
    acc
}

/// Outcome of the bounded ideal comparison.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealComparison {
    /// Both containments certified by explicit coefficient combinations.
    Equal,
    /// Evaluation at `t = a (mod p)` separates the ideals.
    DefinitelyUnequal,
    /// No combination was found within the degree bound.
    NotWithinBound,
}

/// Decides `(gens1) = (gens2)` in `Z[t, t^-1]` up to a degree bound on
/// the coefficient polynomials. Membership certificates are exact
/// integer solutions; inequality is certified by a modular evaluation.
pub fn ideal_equal_bounded(
    gens1: &[LaurentPoly],
    gens2: &[LaurentPoly],
    degree_bound: i64,
) -> IdealComparison {
    let a: Vec<LaurentPoly> =
        gens1.iter().filter(|p| !p.is_zero()).map(|p| p.normalized_unit()).collect();
    let b: Vec<LaurentPoly> =
        gens2.iter().filter(|p| !p.is_zero()).map(|p| p.normalized_unit()).collect();
    if a.is_empty() || b.is_empty() {
        return if a.is_empty() == b.is_empty() {
            IdealComparison::Equal
        } else {
            IdealComparison::DefinitelyUnequal
        };
    }
    // modular separation first
    for p in [3i64, 5, 7, 11, 13] {
        for t in 1..p {
            let ga = ideal_gcd_mod(&a, t, p);
            let gb = ideal_gcd_mod(&b, t, p);
            if ga != gb {
                return IdealComparison::DefinitelyUnequal;
            }
        }
    }
    let fwd = b.iter().all(|g| member_bounded(g, &a, degree_bound));
    let bwd = a.iter().all(|g| member_bounded(g, &b, degree_bound));
    if fwd && bwd {
        IdealComparison::Equal
    } else {
        IdealComparison::NotWithinBound
    }
}

/// Image of the ideal in `Z/p` after `t = a`: the subgroup generated by
/// the evaluations, encoded as `gcd` with `p`.
fn ideal_gcd_mod(gens: &[LaurentPoly], t: i64, p: i64) -> i64 {
    let mut g = p;
    for q in gens {
        let v = q.eval_mod(t, p);
        g = gcd64(g, v);
    }
    g
}

fn gcd64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Searches for `c_i` of degree ≤ `2·bound + deg g` with
/// `Σ c_i h_i = t^bound · g`, i.e. membership of `g` in `(h_1..h_k)` up
/// to a unit. A found solution is a proof; failure only means "not
/// within the bound".
fn member_bounded(g: &LaurentPoly, h: &[LaurentPoly], bound: i64) -> bool {
    let bound = bound.max(0);
    let g = g.normalized_unit();
    let target = g.scale(bound, 1);
    let deg_target = target.max_exp().unwrap_or(0);
    let max_h_deg = h.iter().filter_map(|p| p.max_exp()).max().unwrap_or(0);
    let coeff_deg = (2 * bound + deg_target).max(0);
    let rows = (coeff_deg + max_h_deg + 1) as usize;
    let cols_per = (coeff_deg + 1) as usize;
    let mut a = IntMatrix::zero(rows, cols_per * h.len());
    for (i, hi) in h.iter().enumerate() {
        for (e, c) in hi.terms() {
            for d in 0..cols_per as i64 {
                let row = e + d;
                if row >= 0 && (row as usize) < rows {
                    a[(row as usize, i * cols_per + d as usize)] += c.clone();
                }
            }
        }
    }
    let mut rhs = vec![BigInt::from(0); rows];
    for (e, c) in target.terms() {
        if e >= 0 && (e as usize) < rows {
            rhs[e as usize] = c.clone();
        }
    }
    solve(&a, &rhs).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Presentation;

    fn wirt(text: &str) -> WirtingerData {
        WirtingerData::recognize(&Presentation::parse(text).unwrap()).unwrap()
    }

    fn t_poly(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero('t');
        for &(e, c) in terms {
            p = p.add(&LaurentPoly::monomial('t', e, c));
        }
        p
    }

    #[test]
    fn trefoil_alexander() {
        let w = wirt("gens: t2 t4 ; rels: t2 t4 t2 = t4 t2 t4");
        let m = fox_alexander_matrix(&w);
        assert_eq!((m.len(), m[0].len()), (1, 2));
        // ∂r/∂t2 = 1 - t + t^2
        assert_eq!(m[0][0].normalized_unit(), t_poly(&[(0, 1), (1, -1), (2, 1)]));
        for drop in 0..2 {
            let gens = elementary_ideal_generators(&m, 2, 1, drop);
            assert_eq!(gens, vec![t_poly(&[(0, 1), (1, -1), (2, 1)])]);
        }
    }

    #[test]
    fn row_sums_at_one() {
        // at t = 1 the derivative row is the exponent-sum vector
        let w = wirt("gens: x y ; rels: y^-1 x^(y^-1 x), x^-1 y^(x y^-1)");
        let m = fox_alexander_matrix(&w);
        for (row, r) in m.iter().zip(w.presentation().relators()) {
            for (x, entry) in row.iter().enumerate() {
                let at_one: BigInt = entry.terms().map(|(_, c)| c.clone()).sum();
                assert_eq!(at_one, BigInt::from(r.exponent_sum(x)));
            }
        }
    }

    #[test]
    fn free_group_empty_matrix() {
        let w = wirt("gens: t ; rels:");
        let m = fox_alexander_matrix(&w);
        assert!(m.is_empty());
        let gens = elementary_ideal_generators(&m, 1, 1, 0);
        assert_eq!(gens, vec![LaurentPoly::one('t')]); // 0x0 minor
    }

    #[test]
    fn zero_matrix_minors() {
        let m = vec![vec![LaurentPoly::zero('t'); 2]; 2];
        let gens = elementary_ideal_generators(&m, 2, 1, 0);
        assert!(gens.is_empty());
    }

    #[test]
    fn fox_example_ideal() {
        let w = wirt("gens: x y ; rels: y^-1 x^(y^-1 x), x^-1 y^(x y^-1)");
        let m = fox_alexander_matrix(&w);
        for drop in 0..2 {
            let gens = elementary_ideal_generators(&m, 2, 1, drop);
            let expected = [t_poly(&[(0, 3)]), t_poly(&[(0, 1), (1, 1)])];
            assert_eq!(ideal_equal_bounded(&gens, &expected, 6), IdealComparison::Equal);
        }
    }

    #[test]
    fn ideal_comparisons() {
        let three_and_t1 = [t_poly(&[(0, 3)]), t_poly(&[(0, 1), (1, 1)])];
        assert_eq!(
            ideal_equal_bounded(&three_and_t1, &three_and_t1, 4),
            IdealComparison::Equal
        );
        let unit = [LaurentPoly::one('t')];
        assert_eq!(
            ideal_equal_bounded(&three_and_t1, &unit, 4),
            IdealComparison::DefinitelyUnequal
        );
        let trefoil = [t_poly(&[(0, 1), (1, -1), (2, 1)])];
        assert_eq!(
            ideal_equal_bounded(&trefoil, &three_and_t1, 4),
            IdealComparison::DefinitelyUnequal
        );
        assert_eq!(ideal_equal_bounded(&[], &[], 4), IdealComparison::Equal);
        assert_eq!(ideal_equal_bounded(&[], &unit, 4), IdealComparison::DefinitelyUnequal);
    }
}
