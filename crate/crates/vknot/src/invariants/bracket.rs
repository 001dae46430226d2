//! Kauffman bracket of a Gauss diagram, computed as the state sum over
//! all smoothings: `⟨D⟩ = Σ A^(#A − #B) δ^(loops − 1)` with
//! `δ = -A^2 - A^-2` and `⟨empty⟩ = 1`.
//!
//! Loop tracing works on the abstract circle: each chord reconnects its
//! four incident circle segments, either preserving the traversal
//! direction across the chord or reversing it. Which of the two
//! reconnection rules counts as the A-smoothing depends on the chord
//! sign; the assignment below is calibrated so that second and third
//! moves preserve the bracket exactly, a positive kink contributes
//! `-A^3`, and the result agrees with a planar state-sum oracle on
//! classical codes.

use num_bigint::BigInt;
use num_traits::One;
use std::collections::HashMap;
use thiserror::Error;

use crate::gauss::GaussDiagram;
use crate::invariants::laurent::LaurentPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BracketError {
    #[error("diagram has {0} chords; the state sum is capped at 20")]
    StateSpaceTooLarge(usize),
}

pub const MAX_STATE_CHORDS: usize = 20;

/// The raw bracket `⟨D⟩`.
pub fn bracket(d: &GaussDiagram) -> Result<LaurentPoly, BracketError> {
    let n = d.n();
    if n > MAX_STATE_CHORDS {
        return Err(BracketError::StateSpaceTooLarge(n));
    }
    if n == 0 {
        return Ok(LaurentPoly::one('A'));
    }
    let len = 2 * n;
    let partner: Vec<usize> = (0..len).map(|p| d.partner(p)).collect();
    let signs: Vec<i8> = (0..n).map(|c| d.sign(c)).collect();
    let chord_at: Vec<usize> = d.endpoints().iter().map(|e| e.chord).collect();

    // bucket states by (A-count minus B-count, loop count)
    let mut buckets: HashMap<(i64, usize), BigInt> = HashMap::new();
    for state in 0u32..(1u32 << n) {
        // bit c set = B-smoothing at chord c
        let loops = trace_loops(len, &partner, &chord_at, &signs, state);
        let b_count = state.count_ones() as i64;
        let key = (n as i64 - 2 * b_count, loops);
        *buckets.entry(key).or_insert_with(|| BigInt::from(0)) += BigInt::one();
    }

    // a state of n chords has at most n + 1 loops
    let delta = LaurentPoly::monomial('A', 2, -1).add(&LaurentPoly::monomial('A', -2, -1));
    let mut delta_pow = Vec::with_capacity(n + 1);
    delta_pow.push(LaurentPoly::one('A'));
    for k in 1..=n {
        let next = delta_pow[k - 1].mul(&delta);
        delta_pow.push(next);
    }
    let mut acc = LaurentPoly::zero('A');
    for ((exp, loops), count) in buckets {
        let term = delta_pow[loops - 1].scale(exp, count);
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// `f_D = (-A^3)^{-writhe} · ⟨D⟩`, invariant under all moves.
pub fn normalized_bracket(d: &GaussDiagram) -> Result<LaurentPoly, BracketError> {
    let raw = bracket(d)?;
    Ok(raw.mul(&LaurentPoly::neg_cube_power('A', -d.writhe())))
}

/// Counts the loops of one smoothing state. A chord smoothing is
/// direction-preserving exactly when `(sign > 0) == (A-smoothing)`.
fn trace_loops(
    len: usize,
    partner: &[usize],
    chord_at: &[usize],
    signs: &[i8],
    state: u32,
) -> usize {
    let mut visited = vec![false; len];
    let mut loops = 0usize;
    for start in 0..len {
        if visited[start] {
            continue;
        }
        loops += 1;
        // walk (segment, direction) states; segment s runs from
        // endpoint s to endpoint s+1, and the walk is a permutation of
        // states, so it closes at the starting state
        let mut seg = start;
        let mut forward = true;
        loop {
            visited[seg] = true;
            let endpoint = if forward { (seg + 1) % len } else { seg };
            let c = chord_at[endpoint];
            let is_a = state >> c & 1 == 0;
            let oriented = (signs[c] > 0) == is_a;
            let q = partner[endpoint];
            let (next_seg, next_fwd) = match (oriented, forward) {
                (true, true) => (q, true),
                (true, false) => ((q + len - 1) % len, false),
                (false, true) => ((q + len - 1) % len, false),
                (false, false) => (q, true),
            };
            seg = next_seg;
            forward = next_fwd;
            if seg == start && forward {
                break;
            }
        }
    }
    loops
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(code: &str) -> GaussDiagram {
        GaussDiagram::parse(code).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero('A');
        for &(e, c) in terms {
            p = p.add(&LaurentPoly::monomial('A', e, c));
        }
        p
    }

    #[test]
    fn empty_bracket_is_one() {
        assert_eq!(bracket(&GaussDiagram::empty()).unwrap(), LaurentPoly::one('A'));
    }

    #[test]
    fn kink_calibration() {
        assert_eq!(bracket(&d("O1+ U1+")).unwrap(), poly(&[(3, -1)]));
        assert_eq!(bracket(&d("O1- U1-")).unwrap(), poly(&[(-3, -1)]));
        assert_eq!(bracket(&d("U1+ O1+")).unwrap(), poly(&[(3, -1)]));
        // normalization cancels the kink factor
        assert_eq!(normalized_bracket(&d("O1+ U1+")).unwrap(), LaurentPoly::one('A'));
        assert_eq!(normalized_bracket(&d("O1- U1-")).unwrap(), LaurentPoly::one('A'));
    }

    #[test]
    fn two_kinks_multiply() {
        let two = d("O1+ U1+ O2+ U2+");
        assert_eq!(bracket(&two).unwrap(), poly(&[(6, 1)]));
        let mixed = d("O1+ U1+ O2- U2-");
        assert_eq!(bracket(&mixed).unwrap(), poly(&[(0, 1)]));
    }

    #[test]
    fn size_guard() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let big = crate::sampling::random_diagram(&mut rng, 21);
        assert!(matches!(bracket(&big), Err(BracketError::StateSpaceTooLarge(21))));
    }
}
