//! The dictionary between Gauss diagrams and group presentations:
//! extracting the group, meridian and longitude of a diagram, realizing
//! realizable presentations as diagrams, the presentation of a based
//! connected sum, and the symbolic proof that meridian and longitude
//! commute.
//!
//! Arcs are the pieces of the circle between consecutive arrowheads
//! (`U` endpoints). The arc starting at the first arrowhead at or after
//! the basepoint is `t1`, the rest follow in circle order. The chord
//! whose head separates arc `t_j` from `t_{j+1}` contributes the relator
//! `t_{j+1}^-1 t_j^(t_a^ε)` where `t_a` carries its tail and `ε` is its
//! sign, so the extracted presentation is cyclic and realizable.

use itertools::Itertools;
use thiserror::Error;

use crate::gauss::{Endpoint, GaussDiagram, GaussError, Role};
use crate::wirtinger::{RelatorShape, WirtingerData};
use crate::words::Word;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorrespondenceError {
    #[error("unknown arc generator `{0}`")]
    UnknownArc(String),
    #[error("presentation is not in realizable form (cyclic, one-letter conjugators)")]
    NotRealizableForm,
    #[error("bad splice: {0}")]
    BadSplice(String),
    #[error("substitution trace failed at step {step}")]
    TraceFailure { step: usize },
    #[error(transparent)]
    Gauss(#[from] GaussError),
}

/// Meridian, longitude and framing read off a diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeripheralData {
    /// Arc generator at the chosen start arc.
    pub meridian: String,
    /// Longitude word in the diagram's arc generators, freely reduced.
    pub longitude: Word,
    /// The exponent `p` in the closing `t^-p`; equals the writhe.
    pub framing_p: i64,
}

/// A diagram produced from a realizable presentation, together with the
/// tail ordering chosen on each arc.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realization {
    pub diagram: GaussDiagram,
    /// Per arc: relator indices whose tails sit on the arc, in placement
    /// order.
    pub tail_order: Vec<Vec<usize>>,
}

/// Positions of the arrowheads in circle order from the basepoint.
fn head_positions(d: &GaussDiagram) -> Vec<usize> {
    d.endpoints()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.role == Role::Under)
        .map(|(pos, _)| pos)
        .collect()
}

/// Arc index owning a tail position: the arc starting at the last head
/// before it.
fn arc_of(heads: &[usize], pos: usize) -> usize {
    debug_assert!(!heads.is_empty());
    match heads.iter().rposition(|&h| h < pos) {
        Some(k) => k,
        None => heads.len() - 1, // wraps around past the basepoint
    }
}

/// The Wirtinger presentation of a diagram. Generators `t1..tn` are the
/// arcs; the empty diagram gives the free group `⟨t1 | ⟩`.
pub fn group_of_diagram(d: &GaussDiagram) -> WirtingerData {
    let n = d.n();
    if n == 0 {
        return WirtingerData::from_shapes(vec!["t1".to_string()], Vec::new());
    }
    let heads = head_positions(d);
    let chords = d.chords();
    let mut shapes = Vec::with_capacity(n);
    for j in 0..n {
        let head = heads[(j + 1) % n];
        let chord = chords.iter().find(|c| c.head_pos == head).unwrap();
        let tail_arc = arc_of(&heads, chord.tail_pos);
        shapes.push(RelatorShape {
            target: (j + 1) % n,
            source: j,
            conjugator: Word::letter(tail_arc, chord.sign),
        });
    }
    let names = (1..=n).map(|i| format!("t{i}")).collect();
    WirtingerData::from_shapes(names, shapes)
}

/// Reads the longitude from `start_arc`: one circuit appending `t_a^ε`
/// at each arrowhead passed, closed by `t^-p` with `p` the writhe.
pub fn longitude_of_diagram(
    d: &GaussDiagram,
    start_arc: &str,
) -> Result<PeripheralData, CorrespondenceError> {
    let w = group_of_diagram(d);
    let k = w
        .presentation()
        .gen_index(start_arc)
        .ok_or_else(|| CorrespondenceError::UnknownArc(start_arc.to_string()))?;
    let n = d.n();
    let p = d.writhe();
    if n == 0 {
        return Ok(PeripheralData {
            meridian: start_arc.to_string(),
            longitude: Word::identity(),
            framing_p: 0,
        });
    }
    let conjs = w.conjugators().expect("extracted presentations are cyclic");
    let mut letters: Vec<(usize, i8)> = Vec::new();
    for step in 0..n {
        for &l in conjs[(k + step) % n].letters() {
            letters.push(l);
        }
    }
    let meridian_power = Word::letter(k, 1).pow(-p);
    let longitude = Word::from_letters(letters).concat(&meridian_power);
    debug_assert_eq!(longitude.total_exponent_sum(), 0);
    Ok(PeripheralData { meridian: start_arc.to_string(), longitude, framing_p: p })
}

/// Builds the diagram of a realizable presentation: `n` arcs
/// counterclockwise, one chord per relator `t_{i+1}^-1 t_i^(t_j^ε)`
/// running from a tail on arc `t_j` to the head dividing `t_i` from
/// `t_{i+1}`. `tail_order[k]` lists the relators whose tails share arc
/// `k`, in placement order.
pub fn realize_with_order(
    w: &WirtingerData,
    tail_order: &[Vec<usize>],
) -> Result<Realization, CorrespondenceError> {
    if !w.is_realizable() {
        return Err(CorrespondenceError::NotRealizableForm);
    }
    let n = w.presentation().num_gens();
    let mut endpoints: Vec<Endpoint> = Vec::with_capacity(2 * n);
    let mut signs = vec![0i8; n];
    for j in 0..n {
        let (g, e) = w.shapes()[j].conjugator.letters()[0];
        debug_assert!(g < n);
        signs[j] = e;
        let _ = g;
    }
    // basepoint at the head of the last relator's chord, so extraction
    // reproduces the input verbatim
    endpoints.push(Endpoint { chord: n - 1, role: Role::Under });
    for arc in 0..n {
        for &rel in &tail_order[arc] {
            debug_assert_eq!(w.shapes()[rel].conjugator.letters()[0].0, arc);
            endpoints.push(Endpoint { chord: rel, role: Role::Over });
        }
        if arc + 1 < n {
            endpoints.push(Endpoint { chord: arc, role: Role::Under });
        }
    }
    let diagram = GaussDiagram::renumbered(endpoints, signs);
    Ok(Realization { diagram, tail_order: tail_order.to_vec() })
}

/// Default tail policy: tails on an arc ordered by relator index.
pub fn realize_presentation(w: &WirtingerData) -> Result<Realization, CorrespondenceError> {
    let order = default_tail_order(w)?;
    realize_with_order(w, &order)
}

fn default_tail_order(w: &WirtingerData) -> Result<Vec<Vec<usize>>, CorrespondenceError> {
    if !w.is_realizable() {
        return Err(CorrespondenceError::NotRealizableForm);
    }
    let n = w.presentation().num_gens();
    let mut order = vec![Vec::new(); n];
    for (rel, sh) in w.shapes().iter().enumerate() {
        let (g, _) = sh.conjugator.letters()[0];
        order[g].push(rel);
    }
    Ok(order)
}

/// All realizations of `w` up to `cap`: the product of the tail
/// permutations per arc, enumerated deterministically (lexicographic
/// permutations, odometer over arcs).
pub fn enumerate_realizations(
    w: &WirtingerData,
    cap: usize,
) -> Result<Vec<Realization>, CorrespondenceError> {
    let base = default_tail_order(w)?;
    let per_arc: Vec<Vec<Vec<usize>>> = base
        .iter()
        .map(|tails| {
            if tails.len() <= 1 {
                vec![tails.clone()]
            } else {
                tails.iter().copied().permutations(tails.len()).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_arc.len()];
    'outer: loop {
        if out.len() >= cap {
            break;
        }
        let order: Vec<Vec<usize>> =
            idx.iter().enumerate().map(|(a, &i)| per_arc[a][i].clone()).collect();
        out.push(realize_with_order(w, &order)?);
        // odometer
        for a in (0..idx.len()).rev() {
            idx[a] += 1;
            if idx[a] < per_arc[a].len() {
                continue 'outer;
            }
            idx[a] = 0;
        }
        break;
    }
    Ok(out)
}

/// The merged presentation of a based connected sum of two cyclic
/// presentations, spliced on the arcs `t_1` and `s_1`. `split1` of the
/// `t_1`-tail occurrences (in relator-then-letter order) lie before the
/// splice point of the first diagram, `split2` likewise for the second.
/// Those occurrences switch basepoint arc: `t_1 ↦ s_1` and `s_1 ↦ t_1`.
pub fn connected_sum_presentation(
    w1: &WirtingerData,
    split1: usize,
    w2: &WirtingerData,
    split2: usize,
) -> Result<WirtingerData, CorrespondenceError> {
    for (w, split, which) in [(w1, split1, "first"), (w2, split2, "second")] {
        if !w.is_cyclic() {
            return Err(CorrespondenceError::NotRealizableForm);
        }
        let occurrences: usize = w
            .shapes()
            .iter()
            .map(|sh| sh.conjugator.letters().iter().filter(|&&(g, _)| g == 0).count())
            .sum();
        if split > occurrences {
            return Err(CorrespondenceError::BadSplice(format!(
                "{which} split {split} exceeds the {occurrences} tail(s) on the basepoint arc"
            )));
        }
    }
    let n = w1.presentation().num_gens();
    let m = w2.presentation().num_gens();

    // merged generator list: t's then s's, renaming on collision
    let mut names: Vec<String> = w1.presentation().generators().to_vec();
    for s in w2.presentation().generators() {
        let mut cand = s.clone();
        while names.contains(&cand) {
            cand.push('_');
        }
        names.push(cand);
    }

    // substitute basepoint-arc letters up to the split, counting
    // occurrences in relator-then-letter order
    let subst = |w: &WirtingerData, split: usize, own_base: usize, other_base: usize, offset: usize| {
        let mut seen = 0usize;
        let mut out: Vec<Word> = Vec::new();
        for sh in w.shapes() {
            let letters: Vec<(usize, i8)> = sh
                .conjugator
                .letters()
                .iter()
                .map(|&(g, e)| {
                    if g == 0 {
                        seen += 1;
                        if seen <= split {
                            (other_base, e)
                        } else {
                            (own_base, e)
                        }
                    } else {
                        (g + offset, e)
                    }
                })
                .collect();
            out.push(Word::from_letters(letters));
        }
        out
    };
    let u: Vec<Word> = subst(w1, split1, 0, n, 0);
    let v: Vec<Word> = subst(w2, split2, n, 0, n);

    let mut shapes = Vec::with_capacity(n + m);
    for (j, uj) in u.into_iter().enumerate() {
        shapes.push(RelatorShape {
            target: if j + 1 < n { j + 1 } else { n },
            source: j,
            conjugator: uj,
        });
    }
    for (j, vj) in v.into_iter().enumerate() {
        shapes.push(RelatorShape {
            target: if j + 1 < m { n + j + 1 } else { 0 },
            source: n + j,
            conjugator: vj,
        });
    }
    Ok(WirtingerData::from_shapes(names, shapes))
}

/// One substitution step of the peripheral commutation proof.
#[derive(Clone, Debug)]
pub struct TraceStep {
    pub relator: usize,
    pub base_before: usize,
    pub base_after: usize,
    pub conjugator_after: Word,
}

/// The verified free-group substitution trace showing
/// `t_1 = t_1^(w_1 ⋯ w_n)`, hence that the longitude commutes with the
/// meridian in the group.
#[derive(Clone, Debug)]
pub struct CommutationTrace {
    pub steps: Vec<TraceStep>,
    /// `w_1 ⋯ w_n`, freely reduced.
    pub conjugator: Word,
    pub longitude: Word,
    pub framing_p: i64,
}

/// Substitutes `t_{i+1} ← t_i^{w_i}` through the whole cycle, purely in
/// the free group, and checks the result returns to the meridian
/// conjugated by the (unnormalized) longitude.
pub fn verify_peripheral_commutation(
    d: &GaussDiagram,
) -> Result<CommutationTrace, CorrespondenceError> {
    let peripheral = longitude_of_diagram(d, "t1")?;
    if d.is_empty() {
        return Ok(CommutationTrace {
            steps: Vec::new(),
            conjugator: Word::identity(),
            longitude: peripheral.longitude,
            framing_p: peripheral.framing_p,
        });
    }
    let w = group_of_diagram(d);
    let n = w.presentation().num_gens();
    let conjs = w.conjugators().expect("extracted presentations are cyclic");

    let mut steps = Vec::with_capacity(n);
    let mut base = 0usize;
    let mut conj = Word::identity();
    {
        for step in 0..n {
            // relator with target = base rewrites the base one step back
            let j = (n + base - 1) % n;
            let sh = &w.shapes()[j];
            if sh.target != base {
                return Err(CorrespondenceError::TraceFailure { step });
            }
            base = sh.source;
            conj = conjs[j].concat(&conj);
            steps.push(TraceStep {
                relator: j,
                base_before: sh.target,
                base_after: base,
                conjugator_after: conj.clone(),
            });
        }
    }
    if base != 0 {
        return Err(CorrespondenceError::TraceFailure { step: n });
    }
    // the accumulated conjugator is the longitude without its framing
    // correction
    let expected = peripheral
        .longitude
        .concat(&Word::letter(0, 1).pow(peripheral.framing_p));
    if conj != expected {
        return Err(CorrespondenceError::TraceFailure { step: n });
    }
    Ok(CommutationTrace {
        steps,
        conjugator: conj,
        longitude: peripheral.longitude,
        framing_p: peripheral.framing_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Presentation;

    fn d(code: &str) -> GaussDiagram {
        GaussDiagram::parse(code).unwrap()
    }

    fn fig3() -> WirtingerData {
        WirtingerData::recognize(
            &Presentation::parse(
                "gens: t1 t2 t3 t4 ; rels: t2^-1 t1^(t4), t3^-1 t2^(t4^-1), t4^-1 t3^(t2^-1), t1^-1 t4^(t2)",
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn group_of_empty_and_kink() {
        let free = group_of_diagram(&GaussDiagram::empty());
        assert_eq!(free.presentation().num_gens(), 1);
        assert_eq!(free.presentation().num_relators(), 0);

        let kink = group_of_diagram(&d("O1+ U1+"));
        assert_eq!(kink.presentation().num_gens(), 1);
        assert_eq!(kink.shapes()[0], RelatorShape {
            target: 0,
            source: 0,
            conjugator: Word::letter(0, 1)
        });
        assert!(kink.presentation().relators()[0].is_identity());
        assert!(kink.is_realizable());
    }

    #[test]
    fn group_of_trefoil() {
        let w = group_of_diagram(&d("O1- U2- O3- U1- O2- U3-"));
        assert_eq!(w.presentation().num_gens(), 3);
        assert!(w.is_cyclic());
        assert!(w.is_realizable());
        for sh in w.shapes() {
            assert_eq!(sh.conjugator.letters()[0].1, -1);
        }
    }

    #[test]
    fn longitude_kink() {
        let p = longitude_of_diagram(&d("O1+ U1+"), "t1").unwrap();
        assert!(p.longitude.is_identity());
        assert_eq!(p.framing_p, 1);
        assert_eq!(p.meridian, "t1");
    }

    #[test]
    fn longitude_writhe_zero() {
        // opposite kinks: writhe 0, plain product of tail letters
        let diagram = d("O1+ U1+ O2- U2-");
        let p = longitude_of_diagram(&diagram, "t1").unwrap();
        assert_eq!(p.framing_p, 0);
        assert_eq!(p.longitude.total_exponent_sum(), 0);
        assert!(longitude_of_diagram(&diagram, "t9").is_err());
    }

    #[test]
    fn realize_kink() {
        let kink = group_of_diagram(&d("O1+ U1+"));
        let r = realize_presentation(&kink).unwrap();
        assert_eq!(r.diagram.serialize(), "U1+ O1+");
        assert_eq!(group_of_diagram(&r.diagram), kink);
    }

    #[test]
    fn realize_fig3_round_trip() {
        let w = fig3();
        let r = realize_presentation(&w).unwrap();
        assert_eq!(r.diagram.n(), 4);
        let back = group_of_diagram(&r.diagram);
        assert_eq!(back.shapes(), w.shapes());
    }

    #[test]
    fn enumerate_counts() {
        let w = fig3();
        let all = enumerate_realizations(&w, usize::MAX).unwrap();
        assert_eq!(all.len(), 4); // two arcs carry two tails each
        let capped = enumerate_realizations(&w, 3).unwrap();
        assert_eq!(capped.len(), 3);
        for r in &all {
            assert_eq!(group_of_diagram(&r.diagram).shapes(), w.shapes());
        }
        let kink = group_of_diagram(&d("O1+ U1+"));
        assert_eq!(enumerate_realizations(&kink, usize::MAX).unwrap().len(), 1);
    }

    #[test]
    fn peripheral_commutation_traces() {
        let kink = d("O1+ U1+");
        let t = verify_peripheral_commutation(&kink).unwrap();
        assert_eq!(t.steps.len(), 1);

        let trefoil = d("O1- U2- O3- U1- O2- U3-");
        let t = verify_peripheral_commutation(&trefoil).unwrap();
        assert_eq!(t.steps.len(), 3);
        assert_eq!(t.framing_p, -3);

        assert!(verify_peripheral_commutation(&GaussDiagram::empty()).is_ok());
    }

    #[test]
    fn connected_sum_presentation_matches_diagrams() {
        // two kinks, all splice choices
        let kink = group_of_diagram(&d("O1+ U1+"));
        for (s1, s2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let formula = connected_sum_presentation(&kink, s1, &kink, s2).unwrap();
            let d1 = realize_presentation(&kink).unwrap().diagram;
            let d2 = realize_presentation(&kink).unwrap().diagram;
            let g1 = (s1 + 1) % d1.endpoints().len();
            let g2 = (s2 + 1) % d2.endpoints().len();
            let summed = d1.connected_sum(g1, &d2, g2).unwrap();
            let extracted = group_of_diagram(&summed);
            assert!(
                formula.cyclic_rotation_eq(&extracted),
                "splice ({s1},{s2}): {} vs {}",
                formula.presentation(),
                extracted.presentation()
            );
        }
    }

    #[test]
    fn connected_sum_with_trivial_summand() {
        let trefoil = group_of_diagram(&d("O1- U2- O3- U1- O2- U3-"));
        let kink = group_of_diagram(&d("O1+ U1+"));
        let merged = connected_sum_presentation(&trefoil, 0, &kink, 0).unwrap();
        assert!(merged.is_cyclic());
        assert_eq!(merged.presentation().num_gens(), 4);
        assert!(matches!(
            connected_sum_presentation(&trefoil, 9, &kink, 0),
            Err(CorrespondenceError::BadSplice(_))
        ));
    }
}
