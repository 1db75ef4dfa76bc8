//! Finite Coxeter groups realized as explicit tables.
//!
//! Type `A_n` is realized as permutations of `{1, ..., n+1}` in one-line
//! notation, the dihedral group `I_2(m)` as pairs `r^k s^f`. Every element
//! gets a dense id; ids are sorted by `(length, canonical form)` so that
//! iterating ids in order walks the group rank by rank.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Default cap on the number of enumerated elements.
pub const DEFAULT_ORDER_CAP: usize = 1_000_000;

/// Groups up to this order get a precomputed Bruhat table.
const BRUHAT_TABLE_LIMIT: usize = 5_040;

/// Groups up to this order get a precomputed `x * t` table for reflections.
const REFLECTION_TABLE_LIMIT: usize = 50_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    /// `A_n`, the symmetric group on `n + 1` letters.
    A(usize),
    /// `I_2(m)`, the dihedral group of order `2m`.
    Dihedral(usize),
}

impl CoxeterType {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CoxeterType::A(n) if n >= 1 => Ok(()),
            CoxeterType::A(n) => Err(Error::InvalidDescriptor(format!("A{n}: rank must be at least 1"))),
            CoxeterType::Dihedral(m) if m >= 2 => Ok(()),
            CoxeterType::Dihedral(m) => Err(Error::InvalidDescriptor(format!(
                "I2:{m}: order parameter must be at least 2"
            ))),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            CoxeterType::A(n) => n,
            CoxeterType::Dihedral(_) => 2,
        }
    }

    /// Entry `m(s_i, s_j)` of the Coxeter matrix.
    pub fn coxeter_entry(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        match *self {
            CoxeterType::A(_) => {
                if i.abs_diff(j) == 1 {
                    3
                } else {
                    2
                }
            }
            CoxeterType::Dihedral(m) => m as u32,
        }
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u32>> {
        let r = self.rank();
        (0..r).map(|i| (0..r).map(|j| self.coxeter_entry(i, j)).collect()).collect()
    }

    /// Group order, saturating at `u128::MAX`.
    pub fn estimated_order(&self) -> u128 {
        match *self {
            CoxeterType::A(n) => (1..=(n as u128 + 1)).fold(1u128, |acc, k| acc.saturating_mul(k)),
            CoxeterType::Dihedral(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::Dihedral(m) => write!(f, "I2:{m}"),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A3`, `I2:7` and `I2(7)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = |msg: &str| Error::Parse { position: 0, message: format!("group `{s}`: {msg}") };
        let descriptor = if let Some(rest) = t.strip_prefix("I2") {
            let digits = rest
                .strip_prefix(':')
                .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
                .ok_or_else(|| bad("expected `I2:m`"))?;
            CoxeterType::Dihedral(digits.parse().map_err(|_| bad("order parameter is not an integer"))?)
        } else if let Some(rest) = t.strip_prefix('A') {
            CoxeterType::A(rest.parse().map_err(|_| bad("rank is not an integer"))?)
        } else {
            return Err(bad("expected `An` or `I2:m`"));
        };
        descriptor.validate()?;
        Ok(descriptor)
    }
}

/// Dense element id inside one [`Group`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(pub(crate) u32);

impl Element {
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

/// Canonical form of an element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Form {
    /// One-line notation, values `1..=n+1`.
    Perm(Vec<u8>),
    /// `r^rotation s^flip` with `r = s_1 s_2`.
    Dihedral { rotation: u32, flip: bool },
}

impl Form {
    fn identity(t: CoxeterType) -> Form {
        match t {
            CoxeterType::A(n) => Form::Perm((1..=n as u8 + 1).collect()),
            CoxeterType::Dihedral(_) => Form::Dihedral { rotation: 0, flip: false },
        }
    }

    /// Right multiplication by the generator `s_{i+1}`.
    fn times_generator(&self, t: CoxeterType, i: usize) -> Form {
        match (self, t) {
            (Form::Perm(p), _) => {
                let mut p = p.clone();
                p.swap(i, i + 1);
                Form::Perm(p)
            }
            (&Form::Dihedral { rotation, flip }, CoxeterType::Dihedral(m)) => {
                let m = m as u32;
                // s_1 = s, s_2 = r^{-1} s
                let b = if i == 0 { 0 } else { m - 1 };
                let rotation = if flip { (rotation + m - b) % m } else { (rotation + b) % m };
                Form::Dihedral { rotation, flip: !flip }
            }
            _ => unreachable!("form does not match descriptor"),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Perm(p) => {
                if p.len() <= 9 {
                    for v in p {
                        write!(f, "{v}")?;
                    }
                    Ok(())
                } else {
                    let parts: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                    write!(f, "{}", parts.join(","))
                }
            }
            Form::Dihedral { rotation, flip } => {
                write!(f, "r{rotation}")?;
                if *flip {
                    write!(f, "s")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A fully enumerated finite Coxeter group. Immutable after construction.
pub struct Group {
    descriptor: CoxeterType,
    rank: usize,
    forms: Vec<Form>,
    lookup: HashMap<Form, Element>,
    lengths: Vec<u32>,
    right: Vec<Element>,
    inverse: Vec<Element>,
    words: Vec<Vec<u8>>,
    reflections: Vec<Element>,
    reflection_index: Vec<Option<u32>>,
    reflection_products: Option<Vec<Element>>,
    longest: Element,
    lower_sets: OnceLock<Vec<FixedBitSet>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("descriptor", &self.descriptor)
            .field("order", &self.order())
            .finish()
    }
}

impl Group {
    pub fn new(descriptor: CoxeterType) -> Result<Group> {
        Group::with_cap(descriptor, DEFAULT_ORDER_CAP)
    }

    /// Breadth-first closure under right multiplication by generators.
    pub fn with_cap(descriptor: CoxeterType, cap: usize) -> Result<Group> {
        descriptor.validate()?;
        let estimated = descriptor.estimated_order();
        if estimated > cap as u128 {
            return Err(Error::SizeLimit { group: descriptor.to_string(), estimated, cap });
        }
        let rank = descriptor.rank();

        let start = Form::identity(descriptor);
        let mut seen: HashMap<Form, u32> = HashMap::new();
        seen.insert(start.clone(), 0);
        let mut found = vec![(0u32, start.clone())];
        let mut queue = VecDeque::from([(start, 0u32)]);
        while let Some((form, len)) = queue.pop_front() {
            for i in 0..rank {
                let next = form.times_generator(descriptor, i);
                if !seen.contains_key(&next) {
                    if seen.len() >= cap {
                        return Err(Error::SizeLimit { group: descriptor.to_string(), estimated, cap });
                    }
                    seen.insert(next.clone(), len + 1);
                    found.push((len + 1, next.clone()));
                    queue.push_back((next, len + 1));
                }
            }
        }
        found.sort();

        let n = found.len();
        let (lengths, forms): (Vec<u32>, Vec<Form>) = found.into_iter().unzip();
        let lookup: HashMap<Form, Element> =
            forms.iter().enumerate().map(|(i, f)| (f.clone(), Element(i as u32))).collect();

        let mut right = Vec::with_capacity(n * rank);
        for form in &forms {
            for i in 0..rank {
                right.push(lookup[&form.times_generator(descriptor, i)]);
            }
        }

        // smallest right descent gives a deterministic reduced word
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); n];
        for w in 1..n {
            let s = (0..rank)
                .find(|&s| lengths[right[w * rank + s].id()] < lengths[w])
                .expect("non-identity element has a descent");
            let mut word = words[right[w * rank + s].id()].clone();
            word.push(s as u8);
            words[w] = word;
        }

        let mut inverse = vec![Element(0); n];
        for w in 0..n {
            let mut x = 0usize;
            for &s in words[w].iter().rev() {
                x = right[x * rank + s as usize].id();
            }
            inverse[w] = Element(x as u32);
        }

        let longest = Element((n - 1) as u32);
        let mut group = Group {
            descriptor,
            rank,
            forms,
            lookup,
            lengths,
            right,
            inverse,
            words,
            reflections: Vec::new(),
            reflection_index: vec![None; n],
            reflection_products: None,
            longest,
            lower_sets: OnceLock::new(),
        };

        let mut refl: Vec<Element> = Vec::new();
        let mut is_refl = vec![false; n];
        for v in group.elements() {
            let vi = group.inverse(v);
            for s in 0..rank {
                let t = group.mul(group.right_mul(v, s), vi);
                if !is_refl[t.id()] {
                    is_refl[t.id()] = true;
                    refl.push(t);
                }
            }
        }
        refl.sort();
        for (k, t) in refl.iter().enumerate() {
            group.reflection_index[t.id()] = Some(k as u32);
        }
        group.reflections = refl;

        if n <= REFLECTION_TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * group.reflections.len());
            for x in group.elements() {
                for &t in &group.reflections {
                    table.push(group.mul(x, t));
                }
            }
            group.reflection_products = Some(table);
        }
        Ok(group)
    }

    pub fn descriptor(&self) -> CoxeterType {
        self.descriptor
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.forms.len()
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Element> + ExactSizeIterator {
        (0..self.forms.len() as u32).map(Element)
    }

    pub fn identity(&self) -> Element {
        Element(0)
    }

    pub fn longest(&self) -> Element {
        self.longest
    }

    pub fn generator(&self, s: usize) -> Element {
        self.right_mul(self.identity(), s)
    }

    pub fn length(&self, x: Element) -> u32 {
        self.lengths[x.id()]
    }

    /// `ℓ(v) - ℓ(u)`, meaningful for `u ≤ v`.
    pub fn length_between(&self, u: Element, v: Element) -> u32 {
        self.length(v) - self.length(u)
    }

    pub fn form(&self, x: Element) -> &Form {
        &self.forms[x.id()]
    }

    pub fn element_of(&self, form: &Form) -> Option<Element> {
        self.lookup.get(form).copied()
    }

    /// One-line notation for type A elements.
    pub fn permutation(&self, x: Element) -> Option<&[u8]> {
        match self.form(x) {
            Form::Perm(p) => Some(p),
            Form::Dihedral { .. } => None,
        }
    }

    /// Human-readable label: one-line notation in type A, a reduced word otherwise.
    pub fn label(&self, x: Element) -> String {
        match self.form(x) {
            Form::Perm(_) => self.form(x).to_string(),
            Form::Dihedral { .. } => {
                let w = self.word(x);
                if w.is_empty() {
                    "e".to_string()
                } else {
                    w.iter().map(|s| format!("s{}", s + 1)).collect::<Vec<_>>().join("")
                }
            }
        }
    }

    /// Reduced word (0-based generator indices), built from smallest right descents.
    pub fn word(&self, x: Element) -> &[u8] {
        &self.words[x.id()]
    }

    pub fn right_mul(&self, x: Element, s: usize) -> Element {
        self.right[x.id() * self.rank + s]
    }

    pub fn left_mul(&self, s: usize, x: Element) -> Element {
        self.inverse(self.right_mul(self.inverse(x), s))
    }

    pub fn inverse(&self, x: Element) -> Element {
        self.inverse[x.id()]
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.word(y).iter().fold(x, |acc, &s| self.right_mul(acc, s as usize))
    }

    /// Product of a word in the generators, not necessarily reduced.
    pub fn from_word(&self, word: &[u8]) -> Element {
        word.iter().fold(self.identity(), |acc, &s| self.right_mul(acc, s as usize))
    }

    pub fn reflections(&self) -> &[Element] {
        &self.reflections
    }

    pub fn reflection_index(&self, t: Element) -> Option<usize> {
        self.reflection_index[t.id()].map(|k| k as usize)
    }

    pub fn is_reflection(&self, x: Element) -> bool {
        self.reflection_index[x.id()].is_some()
    }

    /// `x * t` where `t` is the reflection with index `k`.
    pub fn times_reflection(&self, x: Element, k: usize) -> Element {
        match &self.reflection_products {
            Some(table) => table[x.id() * self.reflections.len() + k],
            None => self.mul(x, self.reflections[k]),
        }
    }

    pub fn descents(&self, w: Element, side: Side) -> Vec<usize> {
        (0..self.rank)
            .filter(|&s| {
                let ws = match side {
                    Side::Right => self.right_mul(w, s),
                    Side::Left => self.left_mul(s, w),
                };
                self.length(ws) < self.length(w)
            })
            .collect()
    }

    pub fn first_right_descent(&self, w: Element) -> Option<usize> {
        (0..self.rank).find(|&s| self.length(self.right_mul(w, s)) < self.length(w))
    }

    pub fn last_right_descent(&self, w: Element) -> Option<usize> {
        (0..self.rank).rev().find(|&s| self.length(self.right_mul(w, s)) < self.length(w))
    }

    /// Bruhat comparison `u ≤ w`.
    pub fn leq(&self, u: Element, w: Element) -> bool {
        if self.order() <= BRUHAT_TABLE_LIMIT {
            self.lower_sets()[w.id()].contains(u.id())
        } else {
            self.leq_by_descent(u, w)
        }
    }

    /// Descent recursion: for a right descent `s` of `w`, `u ≤ w` iff
    /// `us ≤ ws` when `us < u` and `u ≤ ws` otherwise.
    pub fn leq_by_descent(&self, mut u: Element, mut w: Element) -> bool {
        loop {
            if u == w {
                return true;
            }
            if self.length(u) >= self.length(w) {
                return false;
            }
            let s = self.first_right_descent(w).expect("w > e has a descent");
            let us = self.right_mul(u, s);
            if self.length(us) < self.length(u) {
                u = us;
            }
            w = self.right_mul(w, s);
        }
    }

    fn lower_sets(&self) -> &[FixedBitSet] {
        self.lower_sets.get_or_init(|| {
            let n = self.order();
            let mut sets: Vec<FixedBitSet> = Vec::with_capacity(n);
            let mut e = FixedBitSet::with_capacity(n);
            e.insert(0);
            sets.push(e);
            for w in 1..n {
                let w = Element(w as u32);
                let s = self.first_right_descent(w).unwrap();
                let ws = self.right_mul(w, s);
                let mut set = sets[ws.id()].clone();
                for x in sets[ws.id()].ones() {
                    set.insert(self.right_mul(Element(x as u32), s).id());
                }
                sets.push(set);
            }
            sets
        })
    }

    /// Elements of `[u, w]` sorted by id (hence by length).
    pub fn interval(&self, u: Element, w: Element) -> Result<Interval> {
        if !self.leq(u, w) {
            return Err(Error::EmptyInterval { lower: self.label(u), upper: self.label(w) });
        }
        let (lo, hi) = (self.length(u), self.length(w));
        let members = if self.order() <= BRUHAT_TABLE_LIMIT {
            self.lower_sets()[w.id()]
                .ones()
                .map(|x| Element(x as u32))
                .filter(|&v| self.length(v) >= lo && self.leq(u, v))
                .collect()
        } else {
            self.elements()
                .filter(|&v| {
                    let l = self.length(v);
                    l >= lo && l <= hi && self.leq(u, v) && self.leq(v, w)
                })
                .collect()
        };
        Ok(Interval { bottom: u, top: w, length: hi - lo, members })
    }

    /// `[e, w]`.
    pub fn lower_interval(&self, w: Element) -> Interval {
        self.interval(self.identity(), w).expect("e is below everything")
    }

    /// All comparable pairs `(u, w)`, ordered by `(w, u)` ids.
    pub fn comparable_pairs(&self) -> Vec<(Element, Element)> {
        let mut out = Vec::new();
        for w in self.elements() {
            for u in self.elements() {
                if self.length(u) <= self.length(w) && self.leq(u, w) {
                    out.push((u, w));
                }
            }
        }
        out
    }

    /// Every reduced word of `w`, in lexicographic order.
    pub fn reduced_words(&self, w: Element) -> Vec<Vec<u8>> {
        if w == self.identity() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for s in self.descents(w, Side::Left) {
            for mut tail in self.reduced_words(self.left_mul(s, w)) {
                tail.insert(0, s as u8);
                out.push(tail);
            }
        }
        out
    }

    /// Lexicographically smallest reduced word, by greedy left descents.
    pub fn lex_first_word(&self, w: Element) -> Vec<u8> {
        self.greedy_word(w, |d| d.first().copied())
    }

    pub fn lex_last_word(&self, w: Element) -> Vec<u8> {
        self.greedy_word(w, |d| d.last().copied())
    }

    fn greedy_word(&self, mut w: Element, pick: impl Fn(&[usize]) -> Option<usize>) -> Vec<u8> {
        let mut word = Vec::with_capacity(self.length(w) as usize);
        while let Some(s) = pick(&self.descents(w, Side::Left)) {
            word.push(s as u8);
            w = self.left_mul(s, w);
        }
        word
    }

    /// Parses `e`, a word such as `s1 s2 s1`, or (type A) one-line notation
    /// such as `3412` or `10,1,2,...`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let t = text.trim();
        if t == "e" || t.is_empty() {
            return Ok(self.identity());
        }
        if t.starts_with('s') {
            let word = parse_word(t, self.rank)?;
            return Ok(self.from_word(&word));
        }
        let CoxeterType::A(n) = self.descriptor else {
            return Err(Error::Parse {
                position: 0,
                message: format!("`{t}`: dihedral elements must be given as words like `s1 s2`"),
            });
        };
        let values: Vec<u8> = if t.contains(',') {
            let mut v = Vec::new();
            let mut pos = 0;
            for part in t.split(',') {
                let x = part.trim().parse::<u8>().map_err(|_| Error::Parse {
                    position: pos,
                    message: format!("`{part}` is not a number"),
                })?;
                v.push(x);
                pos += part.len() + 1;
            }
            v
        } else {
            let mut v = Vec::new();
            for (pos, c) in t.char_indices() {
                let d = c.to_digit(10).ok_or_else(|| Error::Parse {
                    position: pos,
                    message: format!("unexpected character `{c}` in one-line notation"),
                })?;
                v.push(d as u8);
            }
            v
        };
        if values.len() != n + 1 {
            return Err(Error::Parse {
                position: 0,
                message: format!("`{t}` has {} entries, A{n} needs {}", values.len(), n + 1),
            });
        }
        let mut seen = vec![false; n + 2];
        for (pos, &v) in values.iter().enumerate() {
            if v == 0 || v as usize > n + 1 || seen[v as usize] {
                return Err(Error::Parse { position: pos, message: format!("`{t}` is not a permutation of 1..={}", n + 1) });
            }
            seen[v as usize] = true;
        }
        Ok(self.lookup[&Form::Perm(values)])
    }
}

fn parse_word(text: &str, rank: usize) -> Result<Vec<u8>> {
    let bytes = text.as_bytes();
    let mut word = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' | b'*' | b'.' => i += 1,
            b's' => {
                let start = i + 1;
                let mut j = start;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == start {
                    return Err(Error::Parse { position: i, message: "expected a generator index after `s`".into() });
                }
                let k: usize = text[start..j].parse().unwrap();
                if k == 0 || k > rank {
                    return Err(Error::Parse { position: start, message: format!("generator s{k} out of range 1..={rank}") });
                }
                word.push((k - 1) as u8);
                i = j;
            }
            c => {
                return Err(Error::Parse { position: i, message: format!("unexpected character `{}`", c as char) })
            }
        }
    }
    Ok(word)
}

/// A Bruhat interval `[bottom, top]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    bottom: Element,
    top: Element,
    length: u32,
    members: Vec<Element>,
}

impl Interval {
    pub fn bottom(&self) -> Element {
        self.bottom
    }

    pub fn top(&self) -> Element {
        self.top
    }

    /// `ℓ(bottom, top)`.
    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Group {
        Group::new(CoxeterType::A(n)).unwrap()
    }

    fn inversions(p: &[u8]) -> u32 {
        let mut c = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn orders_and_longest_lengths() {
        let g = a(3);
        assert_eq!(g.order(), 24);
        assert_eq!(g.length(g.longest()), 6);
        assert_eq!(g.label(g.longest()), "4321");

        let d = Group::new(CoxeterType::Dihedral(5)).unwrap();
        assert_eq!(d.order(), 10);
        assert_eq!(d.length(d.longest()), 5);
    }

    #[test]
    fn a5_contains_564312_with_length_13() {
        let g = a(5);
        assert_eq!(g.order(), 720);
        let w = g.parse_element("564312").unwrap();
        assert_eq!(inversions(&[5, 6, 4, 3, 1, 2]), 13);
        assert_eq!(g.length(w), 13);
    }

    #[test]
    fn length_is_inversion_count() {
        let g = a(4);
        for x in g.elements() {
            assert_eq!(g.length(x), inversions(g.permutation(x).unwrap()));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = Group::with_cap(CoxeterType::A(5), 100).unwrap_err();
        assert_eq!(err, Error::SizeLimit { group: "A5".into(), estimated: 720, cap: 100 });
    }

    #[test]
    fn generators_change_length_by_one() {
        for g in [a(3), Group::new(CoxeterType::Dihedral(7)).unwrap()] {
            for x in g.elements() {
                for s in 0..g.rank() {
                    let d = g.length(g.right_mul(x, s)) as i64 - g.length(x) as i64;
                    assert_eq!(d.abs(), 1);
                }
            }
            let top: Vec<_> = g.elements().filter(|&x| g.length(x) == g.length(g.longest())).collect();
            assert_eq!(top, vec![g.longest()]);
        }
    }

    #[test]
    fn reflections_are_involutive_conjugates() {
        let g = a(3);
        assert_eq!(g.reflections().len(), 6);
        for &t in g.reflections() {
            assert_eq!(g.mul(t, t), g.identity());
        }
        let g2 = a(2);
        let labels: Vec<String> = g2.reflections().iter().map(|&t| g2.label(t)).collect();
        assert_eq!(labels, vec!["132", "213", "321"]);
        let d = Group::new(CoxeterType::Dihedral(5)).unwrap();
        assert_eq!(d.reflections().len(), 5);
        assert_eq!(d.reflections().len() as u32, d.length(d.longest()));
    }

    #[test]
    fn descents() {
        let g = a(3);
        assert!(g.descents(g.identity(), Side::Right).is_empty());
        assert_eq!(g.descents(g.longest(), Side::Left), vec![0, 1, 2]);
        let w = g.parse_element("3412").unwrap();
        assert_eq!(g.descents(w, Side::Right), vec![1]);
        // left descents of w are the right descents of w^{-1} = 3412
        assert_eq!(g.descents(w, Side::Left), vec![1]);
    }

    #[test]
    fn bruhat_examples() {
        let g = a(3);
        let e = g.identity();
        let x3412 = g.parse_element("3412").unwrap();
        let x4231 = g.parse_element("4231").unwrap();
        assert!(g.leq(e, x3412));
        assert!(g.leq(x3412, x3412));
        // 3412 and 4231 are incomparable
        assert!(!g.leq(x3412, x4231));
        assert_eq!(g.interval(e, x3412).unwrap().len(), 14);
        assert_eq!(g.interval(e, x4231).unwrap().len(), 20);
        assert_eq!(g.interval(x3412, x3412).unwrap().members(), &[x3412]);
        assert!(matches!(g.interval(x3412, x4231), Err(Error::EmptyInterval { .. })));
    }

    #[test]
    fn table_and_descent_recursion_agree() {
        let g = a(4);
        for u in g.elements() {
            for w in g.elements() {
                assert_eq!(g.leq(u, w), g.leq_by_descent(u, w));
            }
        }
    }

    #[test]
    fn parse_elements() {
        let g = a(3);
        assert_eq!(g.parse_element("s1 s2 s1").unwrap(), g.parse_element("3214").unwrap());
        assert_eq!(g.parse_element("e").unwrap(), g.identity());
        assert!(matches!(g.parse_element("3414"), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(g.parse_element("s1 s5"), Err(Error::Parse { position: 4, .. })));
        let d = Group::new(CoxeterType::Dihedral(3)).unwrap();
        assert_eq!(d.parse_element("s1s2s1").unwrap(), d.longest());
        assert!(d.parse_element("121").is_err());
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!("A3".parse::<CoxeterType>().unwrap(), CoxeterType::A(3));
        assert_eq!("I2:7".parse::<CoxeterType>().unwrap(), CoxeterType::Dihedral(7));
        assert_eq!("I2(7)".parse::<CoxeterType>().unwrap(), CoxeterType::Dihedral(7));
        assert!("I2:1".parse::<CoxeterType>().is_err());
        assert!("B3".parse::<CoxeterType>().is_err());
        let m = CoxeterType::A(3).coxeter_matrix();
        assert_eq!(m, vec![vec![1, 3, 2], vec![3, 1, 3], vec![2, 3, 1]]);
        assert_eq!(CoxeterType::Dihedral(6).coxeter_matrix(), vec![vec![1, 6], vec![6, 1]]);
    }

    #[test]
    fn reduced_words_of_w0() {
        let g = a(2);
        assert_eq!(g.reduced_words(g.longest()), vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let g3 = a(3);
        assert_eq!(g3.reduced_words(g3.longest()).len(), 16);
        assert_eq!(g3.lex_first_word(g3.longest()), vec![0, 1, 0, 2, 1, 0]);
        for w in g3.reduced_words(g3.longest()) {
            assert_eq!(g3.from_word(&w), g3.longest());
        }
    }
}
