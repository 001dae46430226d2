//! Exact integer matrices, Smith normal form, and the homology of the
//! 2-complex built from a group presentation (one 0-cell, a 1-cell per
//! generator, a 2-cell per relator).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::wirtinger::WirtingerData;
use crate::words::Presentation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("presentation is not in cyclic deficiency-0 form")]
    NotCyclicDef0,
    #[error("the all-ones relator vector does not span ker ∂2")]
    SpanCheckFailed,
    #[error("bad matrix text: {0}")]
    BadMatrixText(String),
}

/// Dense arbitrary-precision integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// One row per line, entries space-separated.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)].to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn from_text(text: &str) -> Result<Self, HomologyError> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for line in text.lines() {
            if line.trim().is_empty() {
                continue;
            }
            let row: Result<Vec<BigInt>, _> =
                line.split_whitespace().map(|tok| tok.parse::<BigInt>()).collect();
            rows.push(row.map_err(|e| HomologyError::BadMatrixText(e.to_string()))?);
        }
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(HomologyError::BadMatrixText("ragged rows".into()));
        }
        let mut m = IntMatrix::zero(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Smith normal form `U · M · V = S` with unimodular `U`, `V` and
    /// `S` diagonal satisfying the divisibility chain.
    pub fn smith_normal_form(&self) -> Snf {
        let mut s = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let bound = self.rows.min(self.cols);
        let mut k = 0;
        while k < bound {
            // smallest nonzero entry in the trailing block as pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in k..self.rows {
                for j in k..self.cols {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if s[(pi, pj)].abs() <= s[(i, j)].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            s.swap_rows(k, pi, &mut u);
            s.swap_cols(k, pj, &mut v);

            'reduce: loop {
                // clear column k; a nonzero remainder becomes the smaller pivot
                for i in k + 1..self.rows {
                    if s[(i, k)].is_zero() {
                        continue;
                    }
                    let q = &s[(i, k)] / &s[(k, k)];
                    if !q.is_zero() {
                        s.row_op(i, k, &q, &mut u);
                    }
                    if !s[(i, k)].is_zero() {
                        s.swap_rows(i, k, &mut u);
                        continue 'reduce;
                    }
                }
                for j in k + 1..self.cols {
                    if s[(k, j)].is_zero() {
                        continue;
                    }
                    let q = &s[(k, j)] / &s[(k, k)];
                    if !q.is_zero() {
                        s.col_op(j, k, &q, &mut v);
                    }
                    if !s[(k, j)].is_zero() {
                        s.swap_cols(j, k, &mut v);
                        continue 'reduce;
                    }
                }
                // divisibility: pivot must divide the trailing block
                for i in k + 1..self.rows {
                    for j in k + 1..self.cols {
                        if (&s[(i, j)] % &s[(k, k)]).is_zero() {
                            continue;
                        }
                        s.add_row(k, i, &mut u);
                        continue 'reduce;
                    }
                }
                break;
            }
            if s[(k, k)].is_negative() {
                s.negate_row(k, &mut u);
            }
            k += 1;
        }
        let rank = (0..bound).take_while(|&i| !s[(i, i)].is_zero()).count();
        let invariant_factors = (0..rank).map(|i| s[(i, i)].clone()).collect();
        Snf { s, u, v, rank, invariant_factors }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix[{}x{}]\n{}", self.rows, self.cols, self.to_text())
    }
}

// elementary operations, mirrored into the transforms
impl IntMatrix {
    fn swap_rows(&mut self, a: usize, b: usize, u: &mut IntMatrix) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
        for j in 0..u.cols {
            u.entries.swap(a * u.cols + j, b * u.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize, v: &mut IntMatrix) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
        for i in 0..v.rows {
            v.entries.swap(i * v.cols + a, i * v.cols + b);
        }
    }

    /// row a -= q * row b
    fn row_op(&mut self, a: usize, b: usize, q: &BigInt, u: &mut IntMatrix) {
        for j in 0..self.cols {
            let sub = q * &self[(b, j)];
            self[(a, j)] -= sub;
        }
        for j in 0..u.cols {
            let sub = q * &u[(b, j)];
            u[(a, j)] -= sub;
        }
    }

    /// col a -= q * col b
    fn col_op(&mut self, a: usize, b: usize, q: &BigInt, v: &mut IntMatrix) {
        for i in 0..self.rows {
            let sub = q * &self[(i, b)];
            self[(i, a)] -= sub;
        }
        for i in 0..v.rows {
            let sub = q * &v[(i, b)];
            v[(i, a)] -= sub;
        }
    }

    /// row a += row b
    fn add_row(&mut self, a: usize, b: usize, u: &mut IntMatrix) {
        for j in 0..self.cols {
            let add = self[(b, j)].clone();
            self[(a, j)] += add;
        }
        for j in 0..u.cols {
            let add = u[(b, j)].clone();
            u[(a, j)] += add;
        }
    }

    fn negate_row(&mut self, a: usize, u: &mut IntMatrix) {
        for j in 0..self.cols {
            let neg = -self[(a, j)].clone();
            self[(a, j)] = neg;
        }
        for j in 0..u.cols {
            let neg = -u[(a, j)].clone();
            u[(a, j)] = neg;
        }
    }
}

pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
    pub invariant_factors: Vec<BigInt>,
}

impl Snf {
    /// Integral basis of `ker M`: the trailing columns of `V`.
    pub fn kernel_basis(&self) -> Vec<Vec<BigInt>> {
        (self.rank..self.v.cols()).map(|j| self.v.column(j)).collect()
    }
}

/// Solves `A x = b` over the integers, if solvable.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), a.rows());
    let snf = a.smith_normal_form();
    // y = U b; need d_i | y_i below the rank and y_i = 0 beyond it
    let mut y = vec![BigInt::zero(); a.rows()];
    for i in 0..a.rows() {
        for j in 0..a.rows() {
            let add = &snf.u[(i, j)] * &b[j];
            y[i] += add;
        }
    }
    let mut z = vec![BigInt::zero(); a.cols()];
    for (i, yi) in y.iter().enumerate() {
        if i < snf.rank {
            let d = &snf.s[(i, i)];
            if !(yi % d).is_zero() {
                return None;
            }
            z[i] = yi / d;
        } else if !yi.is_zero() {
            return None;
        }
    }
    let mut x = vec![BigInt::zero(); a.cols()];
    for i in 0..a.cols() {
        for j in 0..a.cols() {
            let add = &snf.v[(i, j)] * &z[j];
            x[i] += add;
        }
    }
    Some(x)
}

/// A finitely generated abelian group: free rank plus invariant factors
/// `d_1 | d_2 | …`, each ≥ 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AbelianGroupDescriptor {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDescriptor {
    pub fn free(rank: usize) -> Self {
        AbelianGroupDescriptor { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_infinite_cyclic(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for _ in 0..self.rank {
            parts.push("Z".into());
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// The boundary map ∂2 of the presentation 2-complex:
/// a (generators × relators) matrix of exponent sums.
pub fn boundary_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zero(p.num_gens(), p.num_relators());
    for (j, r) in p.relators().iter().enumerate() {
        for (i, sum) in r.exponent_sums(p.num_gens()).into_iter().enumerate() {
            m[(i, j)] = BigInt::from(sum);
        }
    }
    m
}

/// `H1 = coker ∂2` and `H2` of the presentation 2-complex (`ker ∂2`,
/// always free). For a group `Π` presented by `P`, `H2(Π)` is a quotient
/// of the second value; only the complex-level group is computed here.
pub fn homology_of_presentation_complex(
    p: &Presentation,
) -> (AbelianGroupDescriptor, AbelianGroupDescriptor) {
    let d2 = boundary_matrix(p);
    let snf = d2.smith_normal_form();
    let torsion: Vec<BigInt> = snf
        .invariant_factors
        .iter()
        .filter(|d| **d > BigInt::one())
        .cloned()
        .collect();
    let h1 = AbelianGroupDescriptor { rank: p.num_gens() - snf.rank, torsion };
    let h2 = AbelianGroupDescriptor::free(p.num_relators() - snf.rank);
    (h1, h2)
}

/// For a cyclic deficiency-0 Wirtinger presentation, checks that the
/// all-ones relator vector spans `ker ∂2` and returns it. This class is
/// the image of the torus mapped along the commuting meridian and
/// longitude, so it designates the generator of the second homology.
pub fn pontryagin_generator(w: &WirtingerData) -> Result<Vec<BigInt>, HomologyError> {
    if !w.is_cyclic() {
        return Err(HomologyError::NotCyclicDef0);
    }
    let d2 = boundary_matrix(w.presentation());
    let snf = d2.smith_normal_form();
    let kernel = snf.kernel_basis();
    let n = w.presentation().num_relators();
    let all_ones: Vec<BigInt> = vec![BigInt::one(); n];
    if kernel.len() != 1 {
        return Err(HomologyError::SpanCheckFailed);
    }
    let k = &kernel[0];
    let ok = k.iter().all(|x| x == &BigInt::one())
        || k.iter().all(|x| x == &(-BigInt::one()));
    if !ok {
        return Err(HomologyError::SpanCheckFailed);
    }
    Ok(all_ones)
}
