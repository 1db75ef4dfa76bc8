//! Bruhat graphs on intervals, reflection orders, and path enumeration.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::coxeter::{Element, Group, Interval};
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Default cap on interval length for exhaustive path enumeration.
pub const DEFAULT_PATH_CAP: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruhatEdge {
    pub source: Element,
    pub target: Element,
    /// Index into [`Group::reflections`]; `target = source * t`.
    pub reflection: usize,
    /// `(ℓ(source, target) + 1) / 2`.
    pub height: u32,
}

impl BruhatEdge {
    pub fn is_short(&self) -> bool {
        self.height == 1
    }

    pub fn coxeter_length(&self) -> u32 {
        2 * self.height - 1
    }

    pub fn weight(&self) -> IntPoly {
        edge_weight(self.height).expect("heights are positive")
    }
}

/// `(q+1)^(h-1) q`.
pub fn edge_weight(height: u32) -> Result<IntPoly> {
    if height < 1 {
        return Err(Error::InvalidHeight(height));
    }
    Ok(&IntPoly::q_plus_one().pow(height - 1) * &IntPoly::q())
}

/// Induced Bruhat graph on an interval.
#[derive(Clone, Debug)]
pub struct BruhatGraph {
    interval: Interval,
    local: HashMap<Element, usize>,
    edges: Vec<BruhatEdge>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl BruhatGraph {
    pub fn build(group: &Group, interval: Interval) -> BruhatGraph {
        let verts = interval.members();
        let local: HashMap<Element, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        let mut outgoing = vec![Vec::new(); verts.len()];
        let mut incoming = vec![Vec::new(); verts.len()];
        for (i, &x) in verts.iter().enumerate() {
            let lx = group.length(x);
            let mut targets: Vec<(Element, usize)> = (0..group.reflections().len())
                .map(|k| (group.times_reflection(x, k), k))
                .filter(|&(y, _)| group.length(y) > lx && local.contains_key(&y))
                .collect();
            targets.sort();
            for (y, k) in targets {
                let diff = group.length(y) - lx;
                debug_assert!(diff % 2 == 1, "Bruhat edges have odd length");
                let idx = edges.len();
                edges.push(BruhatEdge { source: x, target: y, reflection: k, height: diff.div_ceil(2) });
                outgoing[i].push(idx);
                incoming[local[&y]].push(idx);
            }
        }
        BruhatGraph { interval, local, edges, outgoing, incoming }
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn vertices(&self) -> &[Element] {
        self.interval.members()
    }

    pub fn edges(&self) -> &[BruhatEdge] {
        &self.edges
    }

    pub fn contains(&self, v: Element) -> bool {
        self.local.contains_key(&v)
    }

    pub fn out_edges(&self, v: Element) -> impl Iterator<Item = &BruhatEdge> {
        let list = self.local.get(&v).map(|&i| self.outgoing[i].as_slice()).unwrap_or(&[]);
        list.iter().map(move |&e| &self.edges[e])
    }

    pub fn in_edges(&self, v: Element) -> impl Iterator<Item = &BruhatEdge> {
        let list = self.local.get(&v).map(|&i| self.incoming[i].as_slice()).unwrap_or(&[]);
        list.iter().map(move |&e| &self.edges[e])
    }

    pub fn out_degree(&self, v: Element) -> usize {
        self.local.get(&v).map_or(0, |&i| self.outgoing[i].len())
    }

    pub fn in_degree(&self, v: Element) -> usize {
        self.local.get(&v).map_or(0, |&i| self.incoming[i].len())
    }

    /// Undirected degree.
    pub fn degree(&self, v: Element) -> usize {
        self.in_degree(v) + self.out_degree(v)
    }

    /// Shortest directed path length `a(u, w)`.
    pub fn absolute_distance(&self, u: Element, w: Element) -> Result<u32> {
        if !self.contains(u) || !self.contains(w) {
            return Err(Error::Internal("vertex outside the graph".into()));
        }
        let mut dist: HashMap<Element, u32> = HashMap::from([(u, 0)]);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == w {
                return Ok(dist[&x]);
            }
            let d = dist[&x];
            for e in self.out_edges(x) {
                if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(e.target) {
                    slot.insert(d + 1);
                    queue.push_back(e.target);
                }
            }
        }
        Err(Error::Internal(format!("no directed path between vertices {} and {}", u.id(), w.id())))
    }

    /// Graphviz rendering; long edges are dashed and labeled with their height.
    pub fn to_dot(&self, group: &Group) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph bruhat {{");
        let _ = writeln!(out, "  rankdir=BT;");
        let _ = writeln!(out, "  node [shape=box];");
        for &v in self.vertices() {
            let _ = writeln!(out, "  v{} [label=\"{}\\nl={}\"];", v.id(), group.label(v), group.length(v));
        }
        for e in &self.edges {
            if e.is_short() {
                let _ = writeln!(out, "  v{} -> v{};", e.source.id(), e.target.id());
            } else {
                let _ = writeln!(
                    out,
                    "  v{} -> v{} [style=dashed, label=\"h={}\"];",
                    e.source.id(),
                    e.target.id(),
                    e.height
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Directed path in a Bruhat graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruhatPath {
    vertices: Vec<Element>,
    labels: Vec<usize>,
    heights: Vec<u32>,
}

impl BruhatPath {
    pub fn empty(at: Element) -> BruhatPath {
        BruhatPath { vertices: vec![at], labels: Vec::new(), heights: Vec::new() }
    }

    fn push(&mut self, e: &BruhatEdge) {
        self.vertices.push(e.target);
        self.labels.push(e.reflection);
        self.heights.push(e.height);
    }

    fn pop(&mut self) {
        self.vertices.pop();
        self.labels.pop();
        self.heights.pop();
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    /// Reflection indices `t_1, ..., t_k`.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn start(&self) -> Element {
        self.vertices[0]
    }

    pub fn end(&self) -> Element {
        *self.vertices.last().unwrap()
    }

    /// `a(Γ)`, the number of edges.
    pub fn absolute_length(&self) -> u32 {
        self.labels.len() as u32
    }

    /// `ℓ(Γ)`, the length difference between the endpoints.
    pub fn coxeter_length(&self) -> u32 {
        self.heights.iter().map(|h| 2 * h - 1).sum()
    }

    pub fn is_short(&self) -> bool {
        self.heights.iter().all(|&h| h == 1)
    }

    pub fn is_increasing(&self, order: &ReflectionOrder) -> bool {
        self.labels.windows(2).all(|p| order.less(p[0], p[1]))
    }

    /// Product of edge weights along the path.
    pub fn edge_weight_product(&self) -> IntPoly {
        self.heights.iter().fold(IntPoly::one(), |acc, &h| &acc * &edge_weight(h).unwrap())
    }
}

/// `ρ(Γ) = (q+1)^((ℓ(Γ) - a(Γ))/2) q^a(Γ)`.
pub fn bruhat_weight(path: &BruhatPath) -> IntPoly {
    let a = path.absolute_length();
    let l = path.coxeter_length();
    IntPoly::q_plus_one().pow((l - a) / 2).shift_up(a as usize)
}

/// A total order on the reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReflectionOrder {
    /// Reflection indices from smallest to largest.
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl ReflectionOrder {
    /// Any total order on `T`; no dihedral check.
    pub fn from_sequence(group: &Group, sequence: Vec<usize>) -> Result<ReflectionOrder> {
        let n = group.reflections().len();
        let mut rank = vec![usize::MAX; n];
        if sequence.len() != n {
            return Err(Error::InvalidOrder(format!("expected {n} reflections, got {}", sequence.len())));
        }
        for (pos, &t) in sequence.iter().enumerate() {
            if t >= n || rank[t] != usize::MAX {
                return Err(Error::InvalidOrder("sequence is not a permutation of the reflections".into()));
            }
            rank[t] = pos;
        }
        Ok(ReflectionOrder { sequence, rank })
    }

    /// Inversion sequence of a reduced word `s_1 ... s_N` for `w0`:
    /// `t_k = s_1 ... s_{k-1} s_k s_{k-1} ... s_1`.
    pub fn from_w0_word(group: &Group, word: &[u8]) -> Result<ReflectionOrder> {
        let w0 = group.longest();
        if word.len() != group.length(w0) as usize {
            return Err(Error::InvalidWord(format!(
                "word has length {}, w0 has length {}",
                word.len(),
                group.length(w0)
            )));
        }
        if word.iter().any(|&s| s as usize >= group.rank()) {
            return Err(Error::InvalidWord("generator out of range".into()));
        }
        if group.from_word(word) != w0 {
            return Err(Error::InvalidWord("word is not an expression for w0".into()));
        }
        let mut prefix = group.identity();
        let mut sequence = Vec::with_capacity(word.len());
        for &s in word {
            let gen = group.generator(s as usize);
            let t = group.mul(group.mul(prefix, gen), group.inverse(prefix));
            sequence.push(group.reflection_index(t).ok_or_else(|| Error::Internal("conjugate is not a reflection".into()))?);
            prefix = group.right_mul(prefix, s as usize);
        }
        ReflectionOrder::from_sequence(group, sequence)
    }

    /// Order from the lexicographically smallest reduced word of `w0`.
    pub fn standard(group: &Group) -> ReflectionOrder {
        ReflectionOrder::from_w0_word(group, &group.lex_first_word(group.longest())).expect("greedy word is reduced")
    }

    /// Up to `count` distinct reflection orders: lex-first and lex-last words,
    /// reversals, then further reduced words. Fewer are returned when the group
    /// has fewer reflection orders of this kind.
    pub fn distinct_orders(group: &Group, count: usize) -> Vec<ReflectionOrder> {
        let w0 = group.longest();
        let first = ReflectionOrder::standard(group);
        let last = ReflectionOrder::from_w0_word(group, &group.lex_last_word(w0)).unwrap();
        let mut candidates = vec![first.clone(), last, first.reversed()];
        let mut out: Vec<ReflectionOrder> = Vec::new();
        let push = |o: ReflectionOrder, out: &mut Vec<ReflectionOrder>| {
            if out.len() < count && !out.contains(&o) {
                out.push(o);
            }
        };
        for o in candidates.drain(..) {
            push(o, &mut out);
        }
        if out.len() < count && group.length(w0) <= 10 {
            for word in group.reduced_words(w0) {
                if out.len() >= count {
                    break;
                }
                push(ReflectionOrder::from_w0_word(group, &word).unwrap(), &mut out);
            }
        }
        out
    }

    pub fn reversed(&self) -> ReflectionOrder {
        let sequence: Vec<usize> = self.sequence.iter().rev().copied().collect();
        let mut rank = vec![0; sequence.len()];
        for (pos, &t) in sequence.iter().enumerate() {
            rank[t] = pos;
        }
        ReflectionOrder { sequence, rank }
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn rank(&self, t: usize) -> usize {
        self.rank[t]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.rank[a] < self.rank[b]
    }

    /// Checks the dihedral chain condition on every dihedral reflection subgroup.
    pub fn validate(&self, group: &Group) -> OrderValidation {
        for sub in dihedral_reflection_subgroups(group) {
            let ranks: Vec<usize> = sub.chain.iter().map(|&t| self.rank(t)).collect();
            let up = ranks.windows(2).all(|p| p[0] < p[1]);
            let down = ranks.windows(2).all(|p| p[0] > p[1]);
            if !up && !down {
                return OrderValidation { valid: false, violation: Some(sub) };
            }
        }
        OrderValidation { valid: true, violation: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderValidation {
    pub valid: bool,
    /// First offending subgroup, when invalid.
    pub violation: Option<DihedralSubgroup>,
}

/// A dihedral reflection subgroup with its reflections listed as the chain
/// `r, rsr, rsrsr, ..., s` where `{r, s}` are its canonical generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralSubgroup {
    pub canonical: (usize, usize),
    pub chain: Vec<usize>,
}

/// Reflection subgroups generated by pairs of reflections, deduplicated.
pub fn dihedral_reflection_subgroups(group: &Group) -> Vec<DihedralSubgroup> {
    let refl = group.reflections();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out = Vec::new();
    for i in 0..refl.len() {
        for j in i + 1..refl.len() {
            let (a, b) = (refl[i], refl[j]);
            let rot = group.mul(a, b);
            let mut ts: Vec<usize> = Vec::new();
            let mut x = group.identity();
            loop {
                ts.push(group.reflection_index(group.mul(x, a)).expect("x a is a reflection"));
                x = group.mul(x, rot);
                if x == group.identity() {
                    break;
                }
            }
            ts.sort_unstable();
            ts.dedup();
            if !seen.insert(ts.clone()) {
                continue;
            }
            // canonical generators: T_L(t') ∩ W' = {t'}
            let canonical: Vec<usize> = ts
                .iter()
                .copied()
                .filter(|&tp| {
                    let t_prime = refl[tp];
                    ts.iter()
                        .filter(|&&t| group.length(group.mul(refl[t], t_prime)) < group.length(t_prime))
                        .count()
                        == 1
                })
                .collect();
            if canonical.len() != 2 {
                continue;
            }
            let (r, s) = (refl[canonical[0]], refl[canonical[1]]);
            let rs = group.mul(r, s);
            let mut chain = Vec::with_capacity(ts.len());
            let mut x = r;
            for _ in 0..ts.len() {
                chain.push(group.reflection_index(x).unwrap());
                x = group.mul(rs, x);
            }
            out.push(DihedralSubgroup { canonical: (canonical[0], canonical[1]), chain });
        }
    }
    out
}

/// All `<`-increasing paths from `u` to `w` inside the graph.
pub fn increasing_paths(
    group: &Group,
    graph: &BruhatGraph,
    u: Element,
    w: Element,
    order: &ReflectionOrder,
    short_only: bool,
) -> Vec<BruhatPath> {
    let mut out = Vec::new();
    if !graph.contains(u) || !graph.contains(w) || !group.leq(u, w) {
        return out;
    }
    let mut path = BruhatPath::empty(u);
    increasing_dfs(group, graph, w, order, short_only, &mut path, &mut out);
    out
}

fn increasing_dfs(
    group: &Group,
    graph: &BruhatGraph,
    w: Element,
    order: &ReflectionOrder,
    short_only: bool,
    path: &mut BruhatPath,
    out: &mut Vec<BruhatPath>,
) {
    let x = path.end();
    if x == w {
        out.push(path.clone());
        return;
    }
    let last = path.labels().last().copied();
    for e in graph.out_edges(x) {
        if short_only && !e.is_short() {
            continue;
        }
        if last.is_some_and(|l| !order.less(l, e.reflection)) {
            continue;
        }
        if !group.leq(e.target, w) {
            continue;
        }
        path.push(e);
        increasing_dfs(group, graph, w, order, short_only, path, out);
        path.pop();
    }
}

/// Increasing paths of absolute length exactly `k` leaving `u`, ending anywhere.
pub fn increasing_paths_from(graph: &BruhatGraph, u: Element, k: usize, order: &ReflectionOrder) -> Vec<BruhatPath> {
    fn go(graph: &BruhatGraph, k: usize, order: &ReflectionOrder, path: &mut BruhatPath, out: &mut Vec<BruhatPath>) {
        if path.labels().len() == k {
            out.push(path.clone());
            return;
        }
        let last = path.labels().last().copied();
        let x = path.end();
        for e in graph.out_edges(x) {
            if last.is_some_and(|l| !order.less(l, e.reflection)) {
                continue;
            }
            path.push(e);
            go(graph, k, order, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    if graph.contains(u) {
        go(graph, k, order, &mut BruhatPath::empty(u), &mut out);
    }
    out
}

/// Streams every directed path from `u` to `w`.
pub fn all_paths<'a>(
    group: &'a Group,
    graph: &'a BruhatGraph,
    u: Element,
    w: Element,
    cap: u32,
) -> Result<AllPaths<'a>> {
    let length = group.length(w).saturating_sub(group.length(u));
    if length > cap {
        return Err(Error::EnumerationCap { length, cap });
    }
    let live = graph.contains(u) && graph.contains(w) && group.leq(u, w);
    Ok(AllPaths { group, graph, target: w, path: BruhatPath::empty(u), cursors: vec![0], done: !live })
}

pub struct AllPaths<'a> {
    group: &'a Group,
    graph: &'a BruhatGraph,
    target: Element,
    path: BruhatPath,
    cursors: Vec<usize>,
    done: bool,
}

impl Iterator for AllPaths<'_> {
    type Item = BruhatPath;

    fn next(&mut self) -> Option<BruhatPath> {
        while !self.done {
            let x = self.path.end();
            if x == self.target {
                let found = self.path.clone();
                self.backtrack();
                return Some(found);
            }
            let cursor = self.cursors.last_mut().unwrap();
            let next = self
                .graph
                .out_edges(x)
                .enumerate()
                .skip(*cursor)
                .find(|(_, e)| self.group.leq(e.target, self.target))
                .map(|(i, e)| (i, *e));
            match next {
                Some((i, e)) => {
                    *cursor = i + 1;
                    self.path.push(&e);
                    self.cursors.push(0);
                }
                None => self.backtrack(),
            }
        }
        None
    }
}

impl AllPaths<'_> {
    fn backtrack(&mut self) {
        self.cursors.pop();
        if self.cursors.is_empty() {
            self.done = true;
        } else {
            self.path.pop();
        }
    }
}

/// The lexicographically first short maximal chain from `u` to `w`: at each
/// step take the short edge with the smallest label that stays below `w`.
pub fn lex_first_short_chain(
    group: &Group,
    graph: &BruhatGraph,
    u: Element,
    w: Element,
    order: &ReflectionOrder,
) -> Option<BruhatPath> {
    if !group.leq(u, w) {
        return None;
    }
    let mut path = BruhatPath::empty(u);
    while path.end() != w {
        let e = graph
            .out_edges(path.end())
            .filter(|e| e.is_short() && group.leq(e.target, w))
            .min_by_key(|e| order.rank(e.reflection))
            .copied()?;
        path.push(&e);
    }
    Some(path)
}
