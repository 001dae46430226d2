//! Finite groups as multiplication tables, with the subgroup machinery
//! needed for peripheral-image experiments: conjugacy classes, commutator
//! subgroup, centralizers, normal closures, and a catalog of every group
//! of order ≤ 12.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("bad group table: {0}")]
    BadTable(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    names: Vec<String>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates and wraps a multiplication table. Identity and inverses
    /// are located; associativity is checked exhaustively up to order 24
    /// and on a fixed sample beyond.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        names: Vec<String>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::BadTable("empty table".into()));
        }
        if names.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(GroupError::BadTable("dimension mismatch".into()));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(GroupError::BadTable("entry out of range".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| GroupError::BadTable("no identity".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            inverses[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| GroupError::BadTable(format!("element {a} has no inverse")))?;
        }
        if n <= 24 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(GroupError::BadTable(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut x = 1usize;
            for _ in 0..10_000 {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (x >> 33) as usize % n;
                let b = (x >> 17) as usize % n;
                let c = x as usize % n;
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(GroupError::BadTable("associativity fails".into()));
                }
            }
        }
        Ok(FiniteGroup { name: name.into(), table, names, identity, inverses })
    }

    /// Table file format: first line the order `n`, then `n` lines of
    /// `n` element indices.
    pub fn from_table_text(name: impl Into<String>, text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| GroupError::BadTable("empty file".into()))?
            .trim()
            .parse()
            .map_err(|_| GroupError::BadTable("bad order line".into()))?;
        let mut table = Vec::with_capacity(n);
        for _ in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| GroupError::BadTable("missing row".into()))?;
            let row: Result<Vec<usize>, _> =
                line.split_whitespace().map(|t| t.parse::<usize>()).collect();
            table.push(row.map_err(|_| GroupError::BadTable("bad entry".into()))?);
        }
        let names = (0..n).map(|i| format!("g{i}")).collect();
        FiniteGroup::from_table(name, table, names)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_names(&self) -> &[String] {
        &self.names
    }

    pub fn element_by_name(&self, name: &str) -> Result<usize, GroupError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| GroupError::UnknownElement(name.to_string()))
    }

    pub fn conjugate(&self, a: usize, by: usize) -> usize {
        // a^by = by^-1 · a · by
        self.mul(self.mul(self.inv(by), a), by)
    }

    pub fn conjugacy_class(&self, a: usize) -> BTreeSet<usize> {
        (0..self.order()).map(|g| self.conjugate(a, g)).collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for a in 0..self.order() {
            if seen[a] {
                continue;
            }
            let class = self.conjugacy_class(a);
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Index of the conjugacy class containing `a`, in the fixed class
    /// order returned by `conjugacy_classes`.
    pub fn class_index(&self, a: usize) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.contains(&a))
            .unwrap()
    }

    pub fn subgroup_generated(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut sub: BTreeSet<usize> = BTreeSet::new();
        sub.insert(self.identity);
        let mut queue: VecDeque<usize> = gens.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            if !sub.insert(x) {
                continue;
            }
            let snapshot: Vec<usize> = sub.iter().copied().collect();
            for &y in &snapshot {
                for z in [self.mul(x, y), self.mul(y, x), self.inv(x)] {
                    if !sub.contains(&z) {
                        queue.push_back(z);
                    }
                }
            }
        }
        sub
    }

    /// Commutator subgroup: generated by all `[a,b] = a^-1 b^-1 a b`.
    pub fn derived_subgroup(&self) -> BTreeSet<usize> {
        let mut gens = BTreeSet::new();
        for a in 0..self.order() {
            for b in 0..self.order() {
                let c = self.mul(
                    self.mul(self.inv(a), self.inv(b)),
                    self.mul(a, b),
                );
                gens.insert(c);
            }
        }
        self.subgroup_generated(&gens)
    }

    pub fn centralizer(&self, a: usize) -> BTreeSet<usize> {
        (0..self.order())
            .filter(|&g| self.mul(g, a) == self.mul(a, g))
            .collect()
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut all: BTreeSet<usize> = BTreeSet::new();
        for &x in gens {
            for g in 0..self.order() {
                all.insert(self.conjugate(x, g));
            }
        }
        loop {
            let sub = self.subgroup_generated(&all);
            let mut grew = false;
            for &x in &sub {
                for g in 0..self.order() {
                    if all.insert(self.conjugate(x, g)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return sub;
            }
        }
    }

    /// Whether `mu` normally generates the group (weight one).
    pub fn is_weight_one(&self, mu: usize) -> bool {
        self.normal_closure(&BTreeSet::from([mu])).len() == self.order()
    }

    /// Evaluates a word under generator images.
    pub fn eval_word(&self, images: &[usize], w: &crate::words::Word) -> usize {
        let mut acc = self.identity;
        for &(g, e) in w.letters() {
            let x = if e > 0 { images[g] } else { self.inv(images[g]) };
            acc = self.mul(acc, x);
        }
        acc
    }

    // constructors

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|i| i.to_string()).collect();
        FiniteGroup::from_table(format!("Z/{n}"), table, names).unwrap()
    }

    /// Dihedral group of order `2n`: rotations `s0..` and reflections
    /// `r0..`, with `rk = r0 · sk`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1);
        let order = 2 * n;
        let enc = |flip: usize, rot: usize| flip * n + rot;
        let mut table = vec![vec![0usize; order]; order];
        for f1 in 0..2 {
            for r1 in 0..n {
                for f2 in 0..2 {
                    for r2 in 0..n {
                        // x^f1 s^r1 · x^f2 s^r2 = x^(f1+f2) s^(±r1 + r2)
                        let f = (f1 + f2) % 2;
                        let r = if f2 == 1 { (n - r1 % n) % n + r2 } else { r1 + r2 } % n;
                        table[enc(f1, r1)][enc(f2, r2)] = enc(f, r % n);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(order);
        for k in 0..n {
            names.push(format!("s{k}"));
        }
        for k in 0..n {
            names.push(format!("r{k}"));
        }
        FiniteGroup::from_table(format!("D{n}"), table, names).unwrap()
    }

    /// Indices of the reflections of a dihedral group built by
    /// [`FiniteGroup::dihedral`].
    pub fn dihedral_reflections(n: usize) -> std::ops::Range<usize> {
        n..2 * n
    }

    pub fn symmetric(n: usize) -> Self {
        assert!((1..=4).contains(&n), "symmetric groups supported up to S4");
        let perms = all_permutations(n);
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        // apply p first, then q
                        let comp: Vec<usize> = (0..n).map(|x| q[p[x]]).collect();
                        index_of(&comp)
                    })
                    .collect()
            })
            .collect();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        FiniteGroup::from_table(format!("S{n}"), table, names).unwrap()
    }

    pub fn alternating4() -> Self {
        let s4 = FiniteGroup::symmetric(4);
        let perms = all_permutations(4);
        let even: Vec<usize> = (0..24).filter(|&i| perm_sign(&perms[i])).collect();
        let pos = |x: usize| even.iter().position(|&y| y == x).unwrap();
        let table: Vec<Vec<usize>> = even
            .iter()
            .map(|&a| even.iter().map(|&b| pos(s4.mul(a, b))).collect())
            .collect();
        let names = even.iter().map(|&i| s4.element_names()[i].clone()).collect();
        FiniteGroup::from_table("A4", table, names).unwrap()
    }

    /// The quaternion group `{±1, ±i, ±j, ±k}`.
    pub fn quaternion8() -> Self {
        // element = (axis 0..4 for 1,i,j,k; sign bit)
        let mul_unit = |a: usize, b: usize| -> (usize, bool) {
            match (a, b) {
                (0, x) => (x, false),
                (x, 0) => (x, false),
                (1, 1) | (2, 2) | (3, 3) => (0, true),
                (1, 2) => (3, false),
                (2, 1) => (3, true),
                (2, 3) => (1, false),
                (3, 2) => (1, true),
                (3, 1) => (2, false),
                (1, 3) => (2, true),
                _ => unreachable!(),
            }
        };
        let enc = |axis: usize, neg: bool| axis * 2 + neg as usize;
        let mut table = vec![vec![0usize; 8]; 8];
        for a in 0..4 {
            for sa in 0..2 {
                for b in 0..4 {
                    for sb in 0..2 {
                        let (axis, flip) = mul_unit(a, b);
                        let neg = (sa + sb) % 2 == 1;
                        table[enc(a, sa == 1)][enc(b, sb == 1)] = enc(axis, neg ^ flip);
                    }
                }
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        FiniteGroup::from_table("Q8", table, names).unwrap()
    }

    /// Dicyclic group of order `4m`:
    /// `⟨a, b | a^{2m} = 1, b^2 = a^m, b^-1 a b = a^-1⟩`.
    pub fn dicyclic(m: usize) -> Self {
        assert!(m >= 2);
        let two_m = 2 * m;
        let order = 4 * m;
        let enc = |k: usize, beta: usize| beta * two_m + k;
        let mut table = vec![vec![0usize; order]; order];
        for k1 in 0..two_m {
            for b1 in 0..2 {
                for k2 in 0..two_m {
                    for b2 in 0..2 {
                        // (a^k1 b^b1)(a^k2 b^b2)
                        let k1_eff = if b1 == 1 {
                            // b a^k2 = a^-k2 b
                            (k1 + two_m - k2 % two_m) % two_m
                        } else {
                            (k1 + k2) % two_m
                        };
                        let (k, beta) = if b1 + b2 == 2 {
                            ((k1_eff + m) % two_m, 0)
                        } else {
                            (k1_eff, b1 + b2)
                        };
                        table[enc(k1, b1)][enc(k2, b2)] = enc(k, beta);
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(order);
        for k in 0..two_m {
            names.push(format!("a{k}"));
        }
        for k in 0..two_m {
            names.push(format!("a{k}b"));
        }
        FiniteGroup::from_table(format!("Dic{m}"), table, names).unwrap()
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let enc = |x: usize, y: usize| x * nb + y;
        let mut table = vec![vec![0usize; na * nb]; na * nb];
        for x1 in 0..na {
            for y1 in 0..nb {
                for x2 in 0..na {
                    for y2 in 0..nb {
                        table[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
                    }
                }
            }
        }
        let mut names = Vec::with_capacity(na * nb);
        for x in 0..na {
            for y in 0..nb {
                names.push(format!("({},{})", a.names[x], b.names[y]));
            }
        }
        FiniteGroup::from_table(format!("{}x{}", a.name, b.name), table, names).unwrap()
    }

    /// One group per isomorphism class of order ≤ `bound` (`bound` ≤ 12).
    pub fn catalog_upto(bound: usize) -> Vec<FiniteGroup> {
        assert!(bound <= 12, "catalog covers orders up to 12");
        let c = FiniteGroup::cyclic;
        let mut groups: Vec<FiniteGroup> = Vec::new();
        let mut push = |g: FiniteGroup| {
            if g.order() <= bound {
                groups.push(g);
            }
        };
        for n in 1..=bound.min(12) {
            push(c(n));
        }
        push(FiniteGroup::direct_product(&c(2), &c(2))); // 4
        push(FiniteGroup::symmetric(3)); // 6
        push(FiniteGroup::direct_product(&c(2), &c(4))); // 8
        push(FiniteGroup::direct_product(&c(2), &FiniteGroup::direct_product(&c(2), &c(2))));
        push(FiniteGroup::dihedral(4)); // 8
        push(FiniteGroup::quaternion8()); // 8
        push(FiniteGroup::direct_product(&c(3), &c(3))); // 9
        push(FiniteGroup::dihedral(5)); // 10
        push(FiniteGroup::direct_product(&c(2), &c(6))); // 12
        push(FiniteGroup::dihedral(6)); // 12
        push(FiniteGroup::alternating4()); // 12
        push(FiniteGroup::dicyclic(3)); // 12
        groups.sort_by_key(|g| (g.order(), g.name.clone()));
        groups
    }

    /// Resolves a group name: catalog names (`S3`, `S4`, `A4`, `Q8`,
    /// `D4`, `Dic3`, `Z/7`, `Z7`) and `x`-separated direct products.
    pub fn by_name(name: &str) -> Result<FiniteGroup, GroupError> {
        if let Some((left, right)) = name.split_once('x') {
            let a = FiniteGroup::by_name(left)?;
            let b = FiniteGroup::by_name(right)?;
            return Ok(FiniteGroup::direct_product(&a, &b));
        }
        let unknown = || GroupError::UnknownGroup(name.to_string());
        let tail_num = |prefix: &str| -> Option<usize> {
            name.strip_prefix(prefix).and_then(|t| t.parse().ok())
        };
        match name {
            "Q8" => return Ok(FiniteGroup::quaternion8()),
            "A4" => return Ok(FiniteGroup::alternating4()),
            _ => {}
        }
        if let Some(n) = tail_num("Z/").or_else(|| tail_num("Z")) {
            if n >= 1 {
                return Ok(FiniteGroup::cyclic(n));
            }
        }
        if let Some(n) = tail_num("S") {
            if (1..=4).contains(&n) {
                return Ok(FiniteGroup::symmetric(n));
            }
        }
        if let Some(n) = tail_num("D") {
            if n >= 1 {
                return Ok(FiniteGroup::dihedral(n));
            }
        }
        if let Some(n) = tail_num("Dic") {
            if n >= 2 {
                return Ok(FiniteGroup::dicyclic(n));
            }
        }
        Err(unknown())
    }
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

fn perm_sign(p: &[usize]) -> bool {
    let mut even = true;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                even = !even;
            }
        }
    }
    even
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
            if x == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_structure() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        let derived = s3.derived_subgroup();
        assert_eq!(derived.len(), 3); // A3
        let t = s3.element_by_name("(12)").unwrap();
        assert!(s3.is_weight_one(t));
        let z = s3.centralizer(t);
        assert_eq!(z.len(), 2);
        let classes = s3.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        assert!(sizes.contains(&3) && sizes.contains(&2) && sizes.contains(&1));
    }

    #[test]
    fn q8_structure() {
        let q8 = FiniteGroup::quaternion8();
        assert_eq!(q8.order(), 8);
        let i = q8.element_by_name("i").unwrap();
        let minus_one = q8.element_by_name("-1").unwrap();
        assert_eq!(q8.mul(i, i), minus_one);
        let derived = q8.derived_subgroup();
        assert_eq!(derived, BTreeSet::from([q8.identity(), minus_one]));
        // i does not normally generate: its closure is the C4 it spans
        assert!(!q8.is_weight_one(i));
        assert_eq!(q8.normal_closure(&BTreeSet::from([i])).len(), 4);
        assert_eq!(q8.centralizer(i).len(), 4);
    }

    #[test]
    fn dihedral_and_dicyclic() {
        let d4 = FiniteGroup::dihedral(4);
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.derived_subgroup().len(), 2);
        let dic3 = FiniteGroup::dicyclic(3);
        assert_eq!(dic3.order(), 12);
        // b^2 = a^3
        let b = dic3.element_by_name("a0b").unwrap();
        let a3 = dic3.element_by_name("a3").unwrap();
        assert_eq!(dic3.mul(b, b), a3);
    }

    #[test]
    fn catalog_counts() {
        // isomorphism classes per order 1..12
        let expected = [1usize, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];
        let groups = FiniteGroup::catalog_upto(12);
        for (order, &count) in expected.iter().enumerate() {
            let have = groups.iter().filter(|g| g.order() == order + 1).count();
            assert_eq!(have, count, "order {}", order + 1);
        }
    }

    #[test]
    fn table_text_round_trip() {
        let z3 = FiniteGroup::cyclic(3);
        let text = format!(
            "3\n{}",
            (0..3)
                .map(|a| (0..3).map(|b| z3.mul(a, b).to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n")
        );
        let loaded = FiniteGroup::from_table_text("file", &text).unwrap();
        assert_eq!(loaded.order(), 3);
        // junk is rejected
        assert!(FiniteGroup::from_table_text("file", "2\n0 1\n1 1").is_err());
    }

    #[test]
    fn by_name_examples() {
        assert_eq!(FiniteGroup::by_name("S3").unwrap().order(), 6);
        assert_eq!(FiniteGroup::by_name("Z/5").unwrap().order(), 5);
        assert_eq!(FiniteGroup::by_name("Z5").unwrap().order(), 5);
        assert_eq!(FiniteGroup::by_name("Z/2xZ/4").unwrap().order(), 8);
        assert!(FiniteGroup::by_name("E8").is_err());
    }
}
