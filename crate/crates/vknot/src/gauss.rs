//! Gauss diagrams: a based circle carrying `n` signed, oriented chords,
//! one per crossing. The arrow of a chord points from the over-passage
//! (`O`, the tail) to the under-passage (`U`, the head).
//!
//! Text encoding: whitespace-separated tokens `O<id><sign>` / `U<id><sign>`,
//! e.g. `O1+ U2- O3+ U1+ O2- U3+`. The first token is the basepoint and
//! token order is the counterclockwise circle order. Canonical form
//! renumbers chord ids 1..n by first appearance.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Role {
    /// Arrow tail, the over-passage.
    Over,
    /// Arrow head, the under-passage.
    Under,
}

impl Role {
    fn letter(self) -> char {
        match self {
            Role::Over => 'O',
            Role::Under => 'U',
        }
    }
}

/// One endpoint on the circle: which chord and which end of its arrow.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Endpoint {
    /// Chord index, `0..n`, in canonical (first-appearance) order.
    pub chord: usize,
    pub role: Role,
}

/// A chord in the public, position-annotated form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chord {
    /// 1-based label as it appears in the textual code.
    pub id: usize,
    pub sign: i8,
    /// Position of the `U` endpoint (arrowhead).
    pub head_pos: usize,
    /// Position of the `O` endpoint (arrowtail).
    pub tail_pos: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GaussError {
    #[error("bad token `{token}` at position {index}")]
    BadSyntax { index: usize, token: String },
    #[error("chord {id} appears twice with role {role}")]
    DuplicateRole { id: usize, role: char },
    #[error("chord {id} carries both signs")]
    SignMismatch { id: usize },
    #[error("chord {id} appears {count} time(s), expected 2")]
    OddOccurrence { id: usize, count: usize },
    #[error("gap index {gap} out of range for a diagram with {endpoints} endpoints")]
    GapOutOfRange { gap: usize, endpoints: usize },
}

/// A validated Gauss diagram in canonical numbering. Immutable; every
/// operation returns a new diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussDiagram {
    endpoints: Vec<Endpoint>,
    signs: Vec<i8>,
}

impl GaussDiagram {
    pub fn empty() -> Self {
        GaussDiagram { endpoints: Vec::new(), signs: Vec::new() }
    }

    /// Number of chords.
    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn endpoints(&self) -> &[Endpoint] {
        &self.endpoints
    }

    pub fn sign(&self, chord: usize) -> i8 {
        self.signs[chord]
    }

    /// Sum of all chord signs.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Number of insertion gaps; the empty diagram keeps a single gap.
    pub fn gap_count(&self) -> usize {
        self.endpoints.len().max(1)
    }

    /// Position of the other endpoint of the chord at `pos`.
    pub fn partner(&self, pos: usize) -> usize {
        let e = self.endpoints[pos];
        self.endpoints
            .iter()
            .position(|f| f.chord == e.chord && f.role != e.role)
            .expect("valid diagram")
    }

    pub fn chords(&self) -> Vec<Chord> {
        let mut heads = vec![usize::MAX; self.n()];
        let mut tails = vec![usize::MAX; self.n()];
        for (pos, e) in self.endpoints.iter().enumerate() {
            match e.role {
                Role::Under => heads[e.chord] = pos,
                Role::Over => tails[e.chord] = pos,
            }
        }
        (0..self.n())
            .map(|c| Chord { id: c + 1, sign: self.signs[c], head_pos: heads[c], tail_pos: tails[c] })
            .collect()
    }

    /// Rebuilds a diagram from structurally valid endpoint data,
    /// renumbering chords by first appearance.
    pub(crate) fn renumbered(endpoints: Vec<Endpoint>, signs: Vec<i8>) -> Self {
        let n = signs.len();
        debug_assert_eq!(endpoints.len(), 2 * n);
        let mut new_id = vec![usize::MAX; n];
        let mut next = 0;
        for e in &endpoints {
            if new_id[e.chord] == usize::MAX {
                new_id[e.chord] = next;
                next += 1;
            }
        }
        debug_assert_eq!(next, n);
        let mut new_signs = vec![0i8; n];
        for (old, &new) in new_id.iter().enumerate() {
            new_signs[new] = signs[old];
        }
        let endpoints = endpoints
            .into_iter()
            .map(|e| Endpoint { chord: new_id[e.chord], role: e.role })
            .collect();
        GaussDiagram { endpoints, signs: new_signs }
    }

    pub fn parse(text: &str) -> Result<Self, GaussError> {
        let mut seq: Vec<(usize, Role, i8)> = Vec::new();
        for (index, token) in text.split_whitespace().enumerate() {
            let bad = || GaussError::BadSyntax { index, token: token.to_string() };
            let bytes = token.as_bytes();
            if bytes.len() < 3 {
                return Err(bad());
            }
            let role = match bytes[0] {
                b'O' => Role::Over,
                b'U' => Role::Under,
                _ => return Err(bad()),
            };
            let sign = match bytes[bytes.len() - 1] {
                b'+' => 1i8,
                b'-' => -1i8,
                _ => return Err(bad()),
            };
            let id: usize = token[1..token.len() - 1].parse().map_err(|_| bad())?;
            if id == 0 {
                return Err(bad());
            }
            seq.push((id, role, sign));
        }

        // Canonical ids by first appearance.
        let mut order: Vec<usize> = Vec::new();
        for &(id, _, _) in &seq {
            if !order.contains(&id) {
                order.push(id);
            }
        }
        let mut signs = vec![0i8; order.len()];
        let mut seen_roles: Vec<Vec<Role>> = vec![Vec::new(); order.len()];
        let mut endpoints = Vec::with_capacity(seq.len());
        for &(id, role, sign) in &seq {
            let c = order.iter().position(|&x| x == id).unwrap();
            if seen_roles[c].contains(&role) {
                return Err(GaussError::DuplicateRole { id, role: role.letter() });
            }
            seen_roles[c].push(role);
            if seen_roles[c].len() == 1 {
                signs[c] = sign;
            } else if signs[c] != sign {
                return Err(GaussError::SignMismatch { id });
            }
            endpoints.push(Endpoint { chord: c, role });
        }
        for (c, roles) in seen_roles.iter().enumerate() {
            if roles.len() != 2 {
                return Err(GaussError::OddOccurrence { id: order[c], count: roles.len() });
            }
        }
        Ok(GaussDiagram { endpoints, signs })
    }

    /// Canonical single-space code; inverse of [`GaussDiagram::parse`].
    pub fn serialize(&self) -> String {
        self.endpoints
            .iter()
            .map(|e| {
                format!(
                    "{}{}{}",
                    e.role.letter(),
                    e.chord + 1,
                    if self.signs[e.chord] > 0 { '+' } else { '-' }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Reverses the circle orientation and negates every chord sign.
    /// Realizes the inverse of a longitude value.
    pub fn mirror_reverse(&self) -> Self {
        let endpoints: Vec<Endpoint> = self.endpoints.iter().rev().copied().collect();
        let signs = self.signs.iter().map(|&s| -s).collect();
        GaussDiagram::renumbered(endpoints, signs)
    }

    /// Moves the basepoint forward by `k` endpoints.
    pub fn rotated(&self, k: usize) -> Self {
        if self.endpoints.is_empty() {
            return self.clone();
        }
        let len = self.endpoints.len();
        let k = k % len;
        let endpoints: Vec<Endpoint> =
            self.endpoints[k..].iter().chain(self.endpoints[..k].iter()).copied().collect();
        GaussDiagram::renumbered(endpoints, self.signs.clone())
    }

    /// Based connected sum. Gap `g` sits immediately before endpoint `g`
    /// (cyclically), so the other diagram's endpoint cycle, opened at its
    /// own gap, is spliced in just before endpoint `g1` of `self`.
    pub fn connected_sum(
        &self,
        gap1: usize,
        other: &GaussDiagram,
        gap2: usize,
    ) -> Result<Self, GaussError> {
        if gap1 >= self.gap_count() {
            return Err(GaussError::GapOutOfRange { gap: gap1, endpoints: self.endpoints.len() });
        }
        if gap2 >= other.gap_count() {
            return Err(GaussError::GapOutOfRange { gap: gap2, endpoints: other.endpoints.len() });
        }
        let shift = self.n();
        let mut endpoints: Vec<Endpoint> = Vec::with_capacity(self.endpoints.len() + other.endpoints.len());
        endpoints.extend_from_slice(&self.endpoints[..gap1]);
        for e in other.endpoints[gap2..].iter().chain(other.endpoints[..gap2].iter()) {
            endpoints.push(Endpoint { chord: e.chord + shift, role: e.role });
        }
        endpoints.extend_from_slice(&self.endpoints[gap1..]);
        let mut signs = self.signs.clone();
        signs.extend_from_slice(&other.signs);
        Ok(GaussDiagram::renumbered(endpoints, signs))
    }

    /// Every canonical diagram with exactly `n` chords. Grows as
    /// `(2n)!·2^n`; intended for exhaustive searches at `n ≤ 3`.
    pub fn enumerate_all(n: usize) -> Vec<GaussDiagram> {
        use itertools::Itertools;
        let mut out: Vec<GaussDiagram> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        let slots: Vec<(usize, Role)> = (0..n)
            .flat_map(|c| [(c, Role::Over), (c, Role::Under)])
            .collect();
        let k = slots.len();
        for perm in slots.iter().permutations(k) {
            for mask in 0..(1u32 << n) {
                let signs: Vec<i8> = (0..n).map(|c| if mask >> c & 1 == 1 { -1 } else { 1 }).collect();
                let endpoints: Vec<Endpoint> =
                    perm.iter().map(|&&(chord, role)| Endpoint { chord, role }).collect();
                let d = GaussDiagram::renumbered(endpoints, signs);
                if seen.insert(d.serialize()) {
                    out.push(d);
                }
            }
        }
        out.sort_by_key(|d| d.serialize());
        out
    }
}

impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.serialize())
    }
}

impl fmt::Debug for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussDiagram({})", self.serialize())
    }
}

impl FromStr for GaussDiagram {
    type Err = GaussError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GaussDiagram::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn d(code: &str) -> GaussDiagram {
        GaussDiagram::parse(code).unwrap()
    }

    #[test]
    fn parse_basics() {
        assert_eq!(d("").n(), 0);
        let kink = d("O1+ U1+");
        assert_eq!(kink.n(), 1);
        let chords = kink.chords();
        assert_eq!(chords[0].head_pos, 1);
        assert_eq!(chords[0].tail_pos, 0);
        assert_eq!(chords[0].sign, 1);
        assert!(matches!(
            GaussDiagram::parse("O1+ U1-"),
            Err(GaussError::SignMismatch { id: 1 })
        ));
        let trefoil = d("O1- U2- O3- U1- O2- U3-");
        assert_eq!(trefoil.n(), 3);
        assert_eq!(trefoil.writhe(), -3);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            GaussDiagram::parse("O1+ O1+ U1+ U1+"),
            Err(GaussError::DuplicateRole { id: 1, .. })
        ));
        assert!(matches!(
            GaussDiagram::parse("O1+"),
            Err(GaussError::OddOccurrence { id: 1, count: 1 })
        ));
        assert!(matches!(GaussDiagram::parse("X1+ U1+"), Err(GaussError::BadSyntax { .. })));
        assert!(matches!(GaussDiagram::parse("O0+ U0+"), Err(GaussError::BadSyntax { .. })));
        assert!(matches!(GaussDiagram::parse("O+ U+"), Err(GaussError::BadSyntax { .. })));
    }

    #[test]
    fn serialize_round_trip() {
        for code in ["", "O1+ U1+", "O1- U2- O3- U1- O2- U3-", "O1+ U2- O3+ U1+ O2- U3+"] {
            let diagram = d(code);
            assert_eq!(diagram.serialize(), code);
            assert_eq!(GaussDiagram::parse(&diagram.serialize()).unwrap(), diagram);
        }
        // serialize ∘ parse canonicalizes ids by first appearance
        assert_eq!(d("O7- U7-").serialize(), "O1- U1-");
        assert_eq!(d("U5+ O2- U2- O5+").serialize(), "U1+ O2- U2- O1+");
    }

    #[test]
    fn mirror_reverse_basics() {
        assert_eq!(GaussDiagram::empty().mirror_reverse(), GaussDiagram::empty());
        assert_eq!(d("O1+ U1+").mirror_reverse().serialize(), "U1- O1-");
        for code in ["O1+ U1+", "O1- U2- O3- U1- O2- U3-", "O1+ O2+ U1+ U2+"] {
            let diagram = d(code);
            assert_eq!(diagram.mirror_reverse().mirror_reverse(), diagram);
        }
    }

    #[test]
    fn connected_sum_basics() {
        let kink = d("O1+ U1+");
        let sum = kink.connected_sum(0, &kink, 0).unwrap();
        assert_eq!(sum.serialize(), "O1+ U1+ O2+ U2+");

        let trefoil = d("O1- U2- O3- U1- O2- U3-");
        for gap in 0..trefoil.gap_count() {
            let s = trefoil.connected_sum(gap, &GaussDiagram::empty(), 0).unwrap();
            assert_eq!(s, trefoil);
        }
        let s = GaussDiagram::empty().connected_sum(0, &kink, 1).unwrap();
        assert_eq!(s.serialize(), "U1+ O1+");

        assert!(matches!(
            kink.connected_sum(2, &kink, 0),
            Err(GaussError::GapOutOfRange { gap: 2, .. })
        ));
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(GaussDiagram::enumerate_all(0).len(), 1);
        // 2 endpoint orders (OU / UO) × 2 signs
        assert_eq!(GaussDiagram::enumerate_all(1).len(), 4);
        for diagram in GaussDiagram::enumerate_all(2) {
            assert_eq!(GaussDiagram::parse(&diagram.serialize()).unwrap(), diagram);
        }
    }

    #[test]
    fn fuzz_parser_never_accepts_invalid() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4000 {
            let len = rng.gen_range(0..8);
            let mut tokens = Vec::new();
            for _ in 0..len {
                let role = if rng.gen_bool(0.5) { 'O' } else { 'U' };
                let id = rng.gen_range(0..4);
                let sign = if rng.gen_bool(0.5) { '+' } else { '-' };
                tokens.push(format!("{role}{id}{sign}"));
            }
            let text = tokens.join(" ");
            if let Ok(diagram) = GaussDiagram::parse(&text) {
                // accepted: must be internally consistent and round-trip
                assert_eq!(diagram.endpoints().len(), 2 * diagram.n());
                for c in 0..diagram.n() {
                    let roles: Vec<Role> = diagram
                        .endpoints()
                        .iter()
                        .filter(|e| e.chord == c)
                        .map(|e| e.role)
                        .collect();
                    assert_eq!(roles.len(), 2);
                    assert_ne!(roles[0], roles[1]);
                }
                assert_eq!(GaussDiagram::parse(&diagram.serialize()).unwrap(), diagram);
            }
        }
    }

    #[test]
    fn rotation_keeps_chord_data() {
        let trefoil = d("O1- U2- O3- U1- O2- U3-");
        for k in 0..6 {
            let r = trefoil.rotated(k);
            assert_eq!(r.n(), 3);
            assert_eq!(r.writhe(), -3);
        }
        assert_eq!(trefoil.rotated(6), trefoil);
    }
}
