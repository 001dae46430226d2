//! Wirtinger presentations: every relator has the form `t_i^-1 t_j^w`
//! and all generators are conjugate. This module recognizes the shape,
//! and transforms presentations between deficiency-1, cyclic
//! (`t_{j+1}^-1 t_j^{w_j}` around a single cycle) and realizable
//! (one-letter conjugators) forms, preserving the presented group at
//! every step.

use std::collections::VecDeque;

use thiserror::Error;

use crate::words::{Presentation, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WirtingerError {
    #[error("relator {relator} is not of the form t_i^-1 t_j^w")]
    NotWirtingerShape { relator: usize },
    #[error("generators are not all conjugate (conjugacy graph is disconnected)")]
    NotConjugate,
    #[error("wrong deficiency: expected {expected}, found {actual}")]
    WrongDeficiency { expected: i64, actual: i64 },
    #[error("presentation is not in cyclic form")]
    NotCyclic,
    #[error("presentation is not in chain form")]
    NotChainForm,
    #[error("word has nonzero exponent sum in generator `{generator}`")]
    NonzeroExponentSum { generator: String },
    #[error("conjugacy graph invariant violated")]
    InternalGraphInvariant,
}

/// Structural reading of one relator: `gen[target]^-1 · gen[source]^conjugator`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelatorShape {
    pub target: usize,
    pub source: usize,
    pub conjugator: Word,
}

/// The graph with one vertex per generator and one edge per relator
/// `t_i = t_j^w` (from `j` to `i`). Self-loops and multi-edges allowed.
#[derive(Clone, Debug)]
pub struct ConjugacyGraph {
    pub vertices: Vec<String>,
    /// `(from = source, to = target, conjugator)` per relator.
    pub edges: Vec<(usize, usize, Word)>,
}

impl ConjugacyGraph {
    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn betti_number(&self) -> i64 {
        // connected graphs only: E - V + 1
        self.edges.len() as i64 - self.vertices.len() as i64 + 1
    }
}

/// A presentation together with the structural shape of each relator.
/// The shapes are authoritative; the stored relators are their free
/// reductions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WirtingerData {
    presentation: Presentation,
    shapes: Vec<RelatorShape>,
}

impl WirtingerData {
    /// Builds the presentation from structural data. Relator `k` becomes
    /// the reduction of `gen[target]^-1 · gen[source]^conjugator`.
    pub fn from_shapes(generators: Vec<String>, shapes: Vec<RelatorShape>) -> Self {
        let n = generators.len();
        let relators: Vec<Word> = shapes
            .iter()
            .map(|sh| {
                assert!(sh.target < n && sh.source < n);
                if let Some(g) = sh.conjugator.max_gen() {
                    assert!(g < n);
                }
                Word::letter(sh.target, -1)
                    .concat(&Word::letter(sh.source, 1).conjugated_by(&sh.conjugator))
            })
            .collect();
        WirtingerData { presentation: Presentation::new(generators, relators), shapes }
    }

    /// Recognizes Wirtinger structure on an arbitrary presentation.
    /// Each relator must freely reduce to `t_i^-1 t_j^w`; the shape found
    /// for an empty relator is the degenerate `t_1^-1 t_1^1`. All
    /// generators must be conjugate.
    pub fn recognize(p: &Presentation) -> Result<Self, WirtingerError> {
        let mut shapes = Vec::with_capacity(p.num_relators());
        for (idx, r) in p.relators().iter().enumerate() {
            let shape = match_shape(r, p.num_gens())
                .ok_or(WirtingerError::NotWirtingerShape { relator: idx })?;
            shapes.push(shape);
        }
        let data = WirtingerData { presentation: p.clone(), shapes };
        if !data.conjugacy_graph().is_connected() {
            return Err(WirtingerError::NotConjugate);
        }
        Ok(data)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn shapes(&self) -> &[RelatorShape] {
        &self.shapes
    }

    pub fn deficiency(&self) -> i64 {
        self.presentation.deficiency()
    }

    pub fn conjugacy_graph(&self) -> ConjugacyGraph {
        ConjugacyGraph {
            vertices: self.presentation.generators().to_vec(),
            edges: self
                .shapes
                .iter()
                .map(|sh| (sh.source, sh.target, sh.conjugator.clone()))
                .collect(),
        }
    }

    /// Cyclic form: `n` relators, relator `j` reading
    /// `t_{j+1}^-1 t_j^{w_j}` (indices mod `n`).
    pub fn is_cyclic(&self) -> bool {
        let n = self.presentation.num_gens();
        self.shapes.len() == n
            && n >= 1
            && self
                .shapes
                .iter()
                .enumerate()
                .all(|(j, sh)| sh.source == j && sh.target == (j + 1) % n)
    }

    /// Chain form: `n - 1` relators, relator `j` reading
    /// `t_{j+1}^-1 t_j^{w_j}`.
    pub fn is_chain(&self) -> bool {
        let n = self.presentation.num_gens();
        n >= 1
            && self.shapes.len() + 1 == n
            && self
                .shapes
                .iter()
                .enumerate()
                .all(|(j, sh)| sh.source == j && sh.target == j + 1)
    }

    /// Realizable form: cyclic with every conjugator a single letter.
    pub fn is_realizable(&self) -> bool {
        self.is_cyclic() && self.shapes.iter().all(|sh| sh.conjugator.len() == 1)
    }

    /// The cyclic conjugator list `w_0 .. w_{n-1}`.
    pub fn conjugators(&self) -> Option<Vec<Word>> {
        if self.is_cyclic() {
            Some(self.shapes.iter().map(|sh| sh.conjugator.clone()).collect())
        } else {
            None
        }
    }

    /// Renders relator `k` structurally, e.g. `t2^-1 t1^(t4)`.
    pub fn shape_display(&self, k: usize) -> String {
        let names = self.presentation.generators();
        let sh = &self.shapes[k];
        if sh.conjugator.is_identity() {
            format!("{}^-1 {}", names[sh.target], names[sh.source])
        } else {
            format!(
                "{}^-1 {}^({})",
                names[sh.target],
                names[sh.source],
                sh.conjugator.display(names)
            )
        }
    }

    /// Duplicates the last relator, turning deficiency 1 into 0 without
    /// changing the group. With no relator at all (free of rank 1) the
    /// vacuous empty relator is appended instead.
    pub fn double_last_relator(&self) -> Result<Self, WirtingerError> {
        if self.deficiency() != 1 {
            return Err(WirtingerError::WrongDeficiency { expected: 1, actual: self.deficiency() });
        }
        let mut shapes = self.shapes.clone();
        match shapes.last() {
            Some(last) => shapes.push(last.clone()),
            None => shapes.push(RelatorShape {
                target: 0,
                source: 0,
                conjugator: Word::identity(),
            }),
        }
        Ok(WirtingerData::from_shapes(self.presentation.generators().to_vec(), shapes))
    }

    /// Rewrites a deficiency-0 presentation into cyclic form by the
    /// edge-rerouting operation: from `t_i = t_j^{w1}` and `t_j = t_k^{w2}`
    /// the former is replaced by `t_i = t_k^{w2 w1}`, growing the unique
    /// cycle of the conjugacy graph until it spans every generator.
    /// Generators are reordered along the cycle.
    pub fn to_cyclic(&self) -> Result<Self, WirtingerError> {
        if self.deficiency() != 0 {
            return Err(WirtingerError::WrongDeficiency { expected: 0, actual: self.deficiency() });
        }
        let n = self.presentation.num_gens();
        let mut shapes = self.shapes.clone();
        loop {
            let (cycle_verts, cycle_edges) = unique_cycle(&shapes, n)?;
            if cycle_verts.iter().filter(|&&b| b).count() == n {
                break;
            }
            // edge f joining an outside vertex x to a cycle vertex y
            let mut best: Option<(usize, usize, usize)> = None;
            for (idx, sh) in shapes.iter().enumerate() {
                for (x, y) in [(sh.target, sh.source), (sh.source, sh.target)] {
                    if !cycle_verts[x] && cycle_verts[y] {
                        let cand = (x, y, idx);
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
            let (x, y, f) = best.ok_or(WirtingerError::InternalGraphInvariant)?;
            // cycle edge g at y gets rerouted from y to x through f
            let g = cycle_edges
                .iter()
                .copied()
                .filter(|&e| shapes[e].target == y || shapes[e].source == y)
                .min()
                .ok_or(WirtingerError::InternalGraphInvariant)?;
            let (a, wg) = oriented_from(&shapes[g], y); // t_a = t_y^{wg}
            let (_, wf) = oriented_from(&shapes[f], x); // t_y = t_x^{wf}
            shapes[g] =
                RelatorShape { target: a, source: x, conjugator: wf.concat(&wg) };
        }
        self.relabel_along_cycle(shapes)
    }

    fn relabel_along_cycle(&self, shapes: Vec<RelatorShape>) -> Result<Self, WirtingerError> {
        let n = self.presentation.num_gens();
        let names = self.presentation.generators();
        if n == 1 {
            return Ok(WirtingerData::from_shapes(names.to_vec(), shapes));
        }
        // walk the cycle from generator 0; prefer a stored edge that
        // defines the next vertex from 0 without inversion
        let incident = |v: usize| -> Vec<usize> {
            shapes
                .iter()
                .enumerate()
                .filter(|(_, sh)| sh.target == v || sh.source == v)
                .map(|(i, _)| i)
                .collect()
        };
        let start_edges = incident(0);
        if start_edges.len() != 2 {
            return Err(WirtingerError::InternalGraphInvariant);
        }
        let first = start_edges
            .iter()
            .copied()
            .find(|&e| shapes[e].source == 0)
            .unwrap_or(start_edges[0]);

        let mut order = vec![0usize];
        let mut edge_order = vec![first];
        let mut used = vec![false; shapes.len()];
        used[first] = true;
        let mut cur = other_end(&shapes[first], 0);
        while cur != 0 {
            order.push(cur);
            let next = incident(cur)
                .into_iter()
                .find(|&e| !used[e])
                .ok_or(WirtingerError::InternalGraphInvariant)?;
            used[next] = true;
            edge_order.push(next);
            cur = other_end(&shapes[next], cur);
        }
        if order.len() != n {
            return Err(WirtingerError::InternalGraphInvariant);
        }
        // position of each old generator along the cycle
        let mut pos = vec![0usize; n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let new_names: Vec<String> = order.iter().map(|&v| names[v].clone()).collect();
        let new_shapes: Vec<RelatorShape> = edge_order
            .iter()
            .enumerate()
            .map(|(m, &e)| {
                let src_old = order[m];
                let (_, w) = oriented_from(&shapes[e], src_old);
                RelatorShape {
                    target: (m + 1) % n,
                    source: m,
                    conjugator: w.map_gens(|g| pos[g]),
                }
            })
            .collect();
        Ok(WirtingerData::from_shapes(new_names, new_shapes))
    }

    /// Same rerouting machinery targeting a Hamiltonian path instead of a
    /// cycle: deficiency-1 input, chain-form output starting at the first
    /// generator.
    pub fn to_chain(&self) -> Result<Self, WirtingerError> {
        if self.deficiency() != 1 {
            return Err(WirtingerError::WrongDeficiency { expected: 1, actual: self.deficiency() });
        }
        let n = self.presentation.num_gens();
        let names = self.presentation.generators();
        let mut shapes = self.shapes.clone();
        let mut path = vec![0usize];
        let mut path_edges: Vec<usize> = Vec::new();
        let mut in_path = vec![false; n];
        in_path[0] = true;
        while path.len() < n {
            let tail = *path.last().unwrap();
            let mut ext: Option<(usize, usize)> = None;
            for (idx, sh) in shapes.iter().enumerate() {
                if path_edges.contains(&idx) {
                    continue;
                }
                for (x, y) in [(sh.target, sh.source), (sh.source, sh.target)] {
                    if y == tail && !in_path[x] {
                        let cand = (x, idx);
                        if ext.map_or(true, |b| cand < b) {
                            ext = Some(cand);
                        }
                    }
                }
            }
            if let Some((x, idx)) = ext {
                path.push(x);
                in_path[x] = true;
                path_edges.push(idx);
                continue;
            }
            // no edge leaves the tail: pick an edge into the path and
            // walk its attachment down toward the tail
            let mut best: Option<(usize, usize, usize)> = None;
            for (idx, sh) in shapes.iter().enumerate() {
                for (x, y) in [(sh.target, sh.source), (sh.source, sh.target)] {
                    if !in_path[x] && in_path[y] {
                        let cand = (x, y, idx);
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
            let (x, mut y, f) = best.ok_or(WirtingerError::InternalGraphInvariant)?;
            while y != tail {
                let ypos = path.iter().position(|&v| v == y).unwrap();
                let g = path_edges[ypos];
                let z = path[ypos + 1];
                let (_, wf) = oriented_from(&shapes[f], y); // t_x = t_y^{wf}
                let (_, wg) = oriented_from(&shapes[g], z); // t_y = t_z^{wg}
                shapes[f] =
                    RelatorShape { target: x, source: z, conjugator: wg.concat(&wf) };
                y = z;
            }
            path.push(x);
            in_path[x] = true;
            path_edges.push(f);
        }
        let mut pos = vec![0usize; n];
        for (p, &v) in path.iter().enumerate() {
            pos[v] = p;
        }
        let new_names: Vec<String> = path.iter().map(|&v| names[v].clone()).collect();
        let new_shapes: Vec<RelatorShape> = path_edges
            .iter()
            .enumerate()
            .map(|(m, &e)| {
                let src_old = path[m];
                let (_, w) = oriented_from(&shapes[e], src_old);
                RelatorShape { target: m + 1, source: m, conjugator: w.map_gens(|g| pos[g]) }
            })
            .collect();
        Ok(WirtingerData::from_shapes(new_names, new_shapes))
    }

    /// Splits every multi-letter conjugator of a cyclic presentation into
    /// one-letter steps through fresh generators, and replaces an empty
    /// conjugator `w = 1` with the self-conjugator `t_j` (`t_j^1 = t_j^{t_j}`).
    /// The new generators are spliced into the cycle, so the output is
    /// again cyclic, now realizable.
    pub fn to_realizable(&self) -> Result<Self, WirtingerError> {
        if !self.is_cyclic() {
            return Err(WirtingerError::NotCyclic);
        }
        let n = self.presentation.num_gens();
        let names = self.presentation.generators();
        let mut taken: std::collections::HashSet<String> =
            names.iter().cloned().collect();

        // conjugators with the empty case patched
        let conjs: Vec<Word> = self
            .shapes
            .iter()
            .map(|sh| {
                if sh.conjugator.is_identity() {
                    Word::letter(sh.source, 1)
                } else {
                    sh.conjugator.clone()
                }
            })
            .collect();

        // new generator order: t_j followed by the fresh generators of
        // relator j
        let mut new_names: Vec<String> = Vec::new();
        let mut old_pos = vec![0usize; n];
        let mut fresh_pos: Vec<Vec<usize>> = vec![Vec::new(); n];
        for j in 0..n {
            old_pos[j] = new_names.len();
            new_names.push(names[j].clone());
            let extra = conjs[j].len().saturating_sub(1);
            for m in 1..=extra {
                let mut cand = format!("{}_{}", names[j], m);
                while taken.contains(&cand) {
                    cand.push('_');
                }
                taken.insert(cand.clone());
                fresh_pos[j].push(new_names.len());
                new_names.push(cand);
            }
        }
        let mut new_shapes: Vec<RelatorShape> = Vec::new();
        for j in 0..n {
            let letters = conjs[j].letters();
            let chain: Vec<usize> = std::iter::once(old_pos[j])
                .chain(fresh_pos[j].iter().copied())
                .chain(std::iter::once(old_pos[(j + 1) % n]))
                .collect();
            for (m, &(g, e)) in letters.iter().enumerate() {
                new_shapes.push(RelatorShape {
                    target: chain[m + 1],
                    source: chain[m],
                    conjugator: Word::letter(old_pos[g], e),
                });
            }
        }
        // relators were emitted in cycle order; renumber targets/sources
        // to the canonical cyclic indexing
        let total = new_names.len();
        debug_assert_eq!(new_shapes.len(), total);
        let ok = new_shapes
            .iter()
            .enumerate()
            .all(|(k, sh)| sh.source == k && sh.target == (k + 1) % total);
        if !ok {
            return Err(WirtingerError::InternalGraphInvariant);
        }
        Ok(WirtingerData::from_shapes(new_names, new_shapes))
    }

    /// Appends the relator
    /// `t_1^-1 λ^-1 w_1 ⋯ w_{n-1} t_n w_{n-1}^-1 ⋯ w_1^-1 λ`
    /// to a deficiency-1 chain. With `λ = 1` the relator is redundant and
    /// the realized knot has trivial longitude; in general the realized
    /// longitude is `λ` (the caller asserts that `λ` commutes with `t_1`
    /// in the group, which is not decidable here).
    pub fn with_longitude_relator(&self, lambda: &Word) -> Result<Self, WirtingerError> {
        let n = self.presentation.num_gens();
        if !self.is_chain() {
            return Err(WirtingerError::NotChainForm);
        }
        for (g, sum) in lambda.exponent_sums(n).into_iter().enumerate() {
            if sum != 0 {
                return Err(WirtingerError::NonzeroExponentSum {
                    generator: self.presentation.generators()[g].clone(),
                });
            }
        }
        let mut product = Word::identity();
        for sh in &self.shapes {
            product = product.concat(&sh.conjugator);
        }
        let v = product.inverse().concat(lambda);
        let mut shapes = self.shapes.clone();
        shapes.push(RelatorShape { target: 0, source: n - 1, conjugator: v });
        Ok(WirtingerData::from_shapes(self.presentation.generators().to_vec(), shapes))
    }

    /// Equality of cyclic presentations up to rotating the cycle.
    pub fn cyclic_rotation_eq(&self, other: &WirtingerData) -> bool {
        if !self.is_cyclic() || !other.is_cyclic() {
            return false;
        }
        let n = self.presentation.num_gens();
        if other.presentation.num_gens() != n {
            return false;
        }
        let a: Vec<&Word> = self.shapes.iter().map(|sh| &sh.conjugator).collect();
        let b: Vec<&Word> = other.shapes.iter().map(|sh| &sh.conjugator).collect();
        (0..n).any(|r| {
            (0..n).all(|j| {
                let rotated = a[(j + r) % n].map_gens(|g| (g + n - r) % n);
                rotated == *b[j]
            })
        })
    }
}

fn other_end(sh: &RelatorShape, v: usize) -> usize {
    if sh.target == v {
        sh.source
    } else {
        debug_assert_eq!(sh.source, v);
        sh.target
    }
}

/// Orients a relator so that it defines the other vertex from `src`:
/// returns `(other, w)` with `t_other = t_src^w`, inverting the stored
/// relator if necessary.
fn oriented_from(sh: &RelatorShape, src: usize) -> (usize, Word) {
    if sh.source == src {
        (sh.target, sh.conjugator.clone())
    } else {
        debug_assert_eq!(sh.target, src);
        (sh.source, sh.conjugator.inverse())
    }
}

/// Vertices and edges of the unique cycle of a connected betti-1 graph,
/// found by pruning degree-1 vertices.
fn unique_cycle(
    shapes: &[RelatorShape],
    n: usize,
) -> Result<(Vec<bool>, Vec<usize>), WirtingerError> {
    let mut alive = vec![true; shapes.len()];
    let mut degree = vec![0usize; n];
    for sh in shapes {
        degree[sh.target] += 1;
        degree[sh.source] += 1;
    }
    loop {
        let Some(v) = (0..n).find(|&v| degree[v] == 1) else { break };
        let Some(e) = (0..shapes.len())
            .find(|&e| alive[e] && (shapes[e].target == v || shapes[e].source == v))
        else {
            return Err(WirtingerError::InternalGraphInvariant);
        };
        alive[e] = false;
        degree[shapes[e].target] -= 1;
        degree[shapes[e].source] -= 1;
    }
    let mut verts = vec![false; n];
    let edges: Vec<usize> = (0..shapes.len()).filter(|&e| alive[e]).collect();
    if edges.is_empty() {
        return Err(WirtingerError::InternalGraphInvariant);
    }
    for &e in &edges {
        verts[shapes[e].target] = true;
        verts[shapes[e].source] = true;
    }
    Ok((verts, edges))
}

/// Matches a freely reduced word against `t_i^-1 (v^-1 t_j v)`.
fn match_shape(r: &Word, num_gens: usize) -> Option<RelatorShape> {
    if r.is_identity() {
        return Some(RelatorShape { target: 0, source: 0, conjugator: Word::identity() });
    }
    for i in 0..num_gens {
        let c = Word::letter(i, 1).concat(r);
        let letters = c.letters();
        let len = letters.len();
        if len % 2 == 0 {
            continue;
        }
        let mid = len / 2;
        let (x, e) = letters[mid];
        if e != 1 {
            continue;
        }
        let mirror = (0..mid).all(|k| {
            let (g1, e1) = letters[k];
            let (g2, e2) = letters[len - 1 - k];
            g1 == g2 && e1 == -e2
        });
        if mirror {
            let v = Word::from_letters(letters[mid + 1..].iter().copied());
            return Some(RelatorShape { target: i, source: x, conjugator: v });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn recognize(text: &str) -> WirtingerData {
        WirtingerData::recognize(&Presentation::parse(text).unwrap()).unwrap()
    }

    const FIG3: &str =
        "gens: t1 t2 t3 t4 ; rels: t2^-1 t1^(t4), t3^-1 t2^(t4^-1), t4^-1 t3^(t2^-1), t1^-1 t4^(t2)";

    #[test]
    fn recognize_examples() {
        let fig3 = recognize(FIG3);
        assert_eq!(fig3.deficiency(), 0);
        assert!(fig3.is_cyclic());
        assert!(fig3.is_realizable());

        let fox = recognize("gens: x y ; rels: y^-1 x^(y^-1 x), x^-1 y^(x y^-1)");
        assert_eq!(fox.deficiency(), 0);
        assert!(fox.is_cyclic());
        assert!(!fox.is_realizable());

        // commutator relator: the shape degenerates to t_a^-1 t_a^b, which
        // leaves b disconnected from a in the conjugacy graph
        let p = Presentation::parse("gens: a b ; rels: a^-1 b^-1 a b").unwrap();
        assert_eq!(WirtingerData::recognize(&p), Err(WirtingerError::NotConjugate));
    }

    #[test]
    fn recognize_fixtures() {
        let bms = recognize(
            "gens: a b ; rels: b = a^-1 b^2 a b^-2 a, b = b^([b a^-1, a^-1 b])",
        );
        assert_eq!(bms.deficiency(), 0);

        let gordon2 = recognize(
            "gens: t z w ; rels: z = t^((t^-1 z)^-2), w = t^((t^-1 w)^-2), t = t^(w^-1 t z^-1)",
        );
        assert_eq!(gordon2.deficiency(), 0);

        let trefoil2 = recognize("gens: t2 t4 ; rels: t2 t4 t2 = t4 t2 t4");
        assert_eq!(trefoil2.deficiency(), 1);
    }

    #[test]
    fn double_last() {
        let trefoil = recognize("gens: t2 t4 ; rels: t2 t4 t2 = t4 t2 t4");
        let doubled = trefoil.double_last_relator().unwrap();
        assert_eq!(doubled.deficiency(), 0);
        assert_eq!(doubled.presentation().num_relators(), 2);
        assert_eq!(doubled.shapes()[0], doubled.shapes()[1]);
        assert!(doubled.double_last_relator().is_err());
        // free group of rank one: doubling appends the vacuous relator
        let free = recognize("gens: t ; rels:");
        let d = free.double_last_relator().unwrap();
        assert_eq!(d.deficiency(), 0);
        assert!(d.presentation().relators()[0].is_identity());
    }

    #[test]
    fn to_cyclic_fixed_point() {
        let fig3 = recognize(FIG3);
        let cyc = fig3.to_cyclic().unwrap();
        assert_eq!(cyc, fig3);
    }

    #[test]
    fn to_cyclic_path_shape() {
        // path a -> b -> c after doubling gets rerouted onto a real cycle
        let p = recognize("gens: a b c ; rels: b^-1 a^(c), c^-1 b^(a^-1 c)");
        assert_eq!(p.deficiency(), 1);
        let doubled = p.double_last_relator().unwrap();
        let cyc = doubled.to_cyclic().unwrap();
        assert!(cyc.is_cyclic());
        assert_eq!(cyc.presentation().num_gens(), 3);
    }

    #[test]
    fn to_cyclic_gordon() {
        let gordon2 = recognize(
            "gens: t z w ; rels: z = t^((t^-1 z)^-2), w = t^((t^-1 w)^-2), t = t^(w^-1 t z^-1)",
        );
        let cyc = gordon2.to_cyclic().unwrap();
        assert!(cyc.is_cyclic());
    }

    #[test]
    fn to_realizable_paper_example() {
        // w_1 = t3 t7^-1 t5 splits into one-letter steps through two
        // fresh generators
        let mut shapes = Vec::new();
        let w1 = Word::from_letters(vec![(2, 1), (6, -1), (4, 1)]);
        for j in 0..7usize {
            let w = if j == 0 { w1.clone() } else { Word::letter((j + 1) % 7, 1) };
            shapes.push(RelatorShape { target: (j + 1) % 7, source: j, conjugator: w });
        }
        let names = (1..=7).map(|i| format!("t{i}")).collect();
        let data = WirtingerData::from_shapes(names, shapes);
        assert!(data.is_cyclic());
        let real = data.to_realizable().unwrap();
        assert!(real.is_realizable());
        assert_eq!(real.presentation().num_gens(), 9);
        assert_eq!(real.presentation().gen_index("t1_1"), Some(1));
        assert_eq!(real.presentation().gen_index("t1_2"), Some(2));
        assert_eq!(real.shape_display(0), "t1_1^-1 t1^(t3)");
        assert_eq!(real.shape_display(1), "t1_2^-1 t1_1^(t7^-1)");
        assert_eq!(real.shape_display(2), "t2^-1 t1_2^(t5)");
    }

    #[test]
    fn to_realizable_fixed_point_and_empty_conj() {
        let fig3 = recognize(FIG3);
        assert_eq!(fig3.to_realizable().unwrap(), fig3);

        let mut shapes = Vec::new();
        shapes.push(RelatorShape { target: 1, source: 0, conjugator: Word::identity() });
        shapes.push(RelatorShape { target: 0, source: 1, conjugator: Word::letter(0, 1) });
        let data = WirtingerData::from_shapes(vec!["a".into(), "b".into()], shapes);
        let real = data.to_realizable().unwrap();
        assert!(real.is_realizable());
        // empty conjugator became the self-conjugator
        assert_eq!(real.shapes()[0].conjugator, Word::letter(0, 1));
    }

    #[test]
    fn longitude_relator() {
        let trefoil = recognize("gens: t2 t4 ; rels: t2 t4 t2 = t4 t2 t4");
        let chain = trefoil.to_chain().unwrap();
        assert_eq!(chain.shapes().len(), 1);
        let with = chain.with_longitude_relator(&Word::identity()).unwrap();
        assert!(with.is_cyclic());
        assert_eq!(with.deficiency(), 0);
        // λ with nonzero exponent sum is rejected
        let lam = Word::letter(0, 1);
        assert!(matches!(
            chain.with_longitude_relator(&lam),
            Err(WirtingerError::NonzeroExponentSum { .. })
        ));
        // not a chain
        let fig3 = recognize(FIG3);
        assert!(matches!(
            fig3.with_longitude_relator(&Word::identity()),
            Err(WirtingerError::NotChainForm)
        ));
    }

    #[test]
    fn longitude_relator_formula() {
        // chain a -> b -> c with w_1, w_2; the added relator must be
        // t_1^-1 t_3^(w_2^-1 w_1^-1 λ)
        let w1 = Word::letter(2, 1);
        let w2 = Word::from_letters(vec![(0, -1), (1, 1)]);
        let shapes = vec![
            RelatorShape { target: 1, source: 0, conjugator: w1.clone() },
            RelatorShape { target: 2, source: 1, conjugator: w2.clone() },
        ];
        let data = WirtingerData::from_shapes(
            vec!["a".into(), "b".into(), "c".into()],
            shapes,
        );
        let out = data.with_longitude_relator(&Word::identity()).unwrap();
        let expect = w1.concat(&w2).inverse();
        assert_eq!(out.shapes()[2].conjugator, expect);
        assert_eq!(out.shapes()[2].target, 0);
        assert_eq!(out.shapes()[2].source, 2);
    }

    #[test]
    fn self_loop_cycle_grows() {
        // cycle is a self-loop at t with pendant vertices; rerouting must
        // still reach a spanning cycle
        let gordon2 = recognize(
            "gens: t z w ; rels: z = t^((t^-1 z)^-2), w = t^((t^-1 w)^-2), t = t^(w^-1 t z^-1)",
        );
        let cyc = gordon2.to_cyclic().unwrap();
        assert!(cyc.is_cyclic());
        assert_eq!(cyc.presentation().num_gens(), 3);
    }

    #[test]
    fn rotation_equality() {
        let fig3 = recognize(FIG3);
        let n = 4;
        let conjs = fig3.conjugators().unwrap();
        for r in 0..n {
            let shapes: Vec<RelatorShape> = (0..n)
                .map(|j| RelatorShape {
                    target: (j + 1) % n,
                    source: j,
                    conjugator: conjs[(j + r) % n].map_gens(|g| (g + n - r) % n),
                })
                .collect();
            let names = (0..n).map(|i| format!("g{i}")).collect();
            let rotated = WirtingerData::from_shapes(names, shapes);
            assert!(fig3.cyclic_rotation_eq(&rotated));
        }
    }
}
