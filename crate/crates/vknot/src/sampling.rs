//! Deterministic random generators for diagrams and presentations,
//! shared by the randomized test suites and the empirical searches.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::gauss::{Endpoint, GaussDiagram, Role};
use crate::wirtinger::{RelatorShape, WirtingerData};
use crate::words::Word;

/// Uniform-ish random diagram with exactly `n` chords: random endpoint
/// arrangement, random signs.
pub fn random_diagram<R: Rng>(rng: &mut R, n: usize) -> GaussDiagram {
    let mut slots: Vec<Endpoint> = (0..n)
        .flat_map(|c| {
            [Endpoint { chord: c, role: Role::Over }, Endpoint { chord: c, role: Role::Under }]
        })
        .collect();
    slots.shuffle(rng);
    let signs: Vec<i8> = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    GaussDiagram::renumbered(slots, signs)
}

/// A random diagram guaranteed to contain a third-move site: the
/// six-endpoint pattern `t_x t_y h_x t_z h_y h_z` with uniform sign,
/// spliced into a random host at a random gap.
pub fn random_diagram_with_r3_site<R: Rng>(rng: &mut R, host_chords: usize) -> GaussDiagram {
    let sign = if rng.gen_bool(0.5) { '+' } else { '-' };
    let block = format!("O1{s} O2{s} U1{s} O3{s} U2{s} U3{s}", s = sign);
    let block = GaussDiagram::parse(&block).unwrap();
    let host = random_diagram(rng, host_chords);
    let gap = rng.gen_range(0..host.gap_count());
    host.connected_sum(gap, &block, 0).unwrap()
}

/// Random realizable Wirtinger data on `n` generators: cyclic shapes
/// with uniformly random one-letter conjugators.
pub fn random_realizable<R: Rng>(rng: &mut R, n: usize) -> WirtingerData {
    assert!(n >= 1);
    let shapes: Vec<RelatorShape> = (0..n)
        .map(|j| {
            let k = rng.gen_range(0..n);
            let e = if rng.gen_bool(0.5) { 1 } else { -1 };
            RelatorShape { target: (j + 1) % n, source: j, conjugator: Word::letter(k, e) }
        })
        .collect();
    let names = (1..=n).map(|i| format!("t{i}")).collect();
    WirtingerData::from_shapes(names, shapes)
}

/// Random cyclic Wirtinger data with conjugator words up to
/// `max_conj_len` letters.
pub fn random_cyclic<R: Rng>(rng: &mut R, n: usize, max_conj_len: usize) -> WirtingerData {
    assert!(n >= 1);
    let shapes: Vec<RelatorShape> = (0..n)
        .map(|j| {
            let len = rng.gen_range(0..=max_conj_len);
            let letters: Vec<(usize, i8)> = (0..len)
                .map(|_| (rng.gen_range(0..n), if rng.gen_bool(0.5) { 1i8 } else { -1 }))
                .collect();
            RelatorShape {
                target: (j + 1) % n,
                source: j,
                conjugator: Word::from_letters(letters),
            }
        })
        .collect();
    let names = (1..=n).map(|i| format!("t{i}")).collect();
    WirtingerData::from_shapes(names, shapes)
}
