//! R-polynomials and their relatives via memoized descent recursions.
//!
//! For a right descent `s` of `w` the three families satisfy
//!
//! ```text
//! X(u, w) = X(us, ws)                         if us < u
//! R(u, w) = (q-1) R(u, ws) + q R(us, ws)      if us > u
//! R~(u, w) = q R~(u, ws) + R~(us, ws)         if us > u
//! R->(u, w) = q R->(u, ws) + (q+1) R->(us, ws) if us > u
//! ```
//!
//! with `X(u, u) = 1` and `X(u, w) = 0` unless `u ≤ w`. The path-sum
//! oracles at the bottom of the module compute the same polynomials from
//! increasing paths in the Bruhat graph instead.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coxeter::{Element, Group};
use crate::error::{Error, Result};
use crate::graph::{bruhat_weight, increasing_paths, BruhatGraph, ReflectionOrder};
use crate::poly::{BiPoly, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R,
    RTilde,
    Shifted,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::R => "R",
            Family::RTilde => "RT",
            Family::Shifted => "RS",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Family> {
        match tag {
            "R" => Some(Family::R),
            "RT" => Some(Family::RTilde),
            "RS" => Some(Family::Shifted),
            _ => None,
        }
    }
}

/// Which right descent the recursion peels off.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DescentRule {
    #[default]
    Smallest,
    Largest,
}

/// Memo tables for one group. Not shared between threads; scans create one
/// context per worker.
pub struct RContext<'g> {
    group: &'g Group,
    rule: DescentRule,
    memo: HashMap<(Family, u32, u32), IntPoly>,
    hits: u64,
    misses: u64,
}

impl<'g> RContext<'g> {
    pub fn new(group: &'g Group) -> RContext<'g> {
        RContext::with_rule(group, DescentRule::Smallest)
    }

    pub fn with_rule(group: &'g Group, rule: DescentRule) -> RContext<'g> {
        RContext { group, rule, memo: HashMap::new(), hits: 0, misses: 0 }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Memo contents sorted by key.
    pub fn snapshot(&self) -> Vec<(Family, Element, Element, IntPoly)> {
        let mut out: Vec<_> =
            self.memo.iter().map(|(&(f, u, w), p)| (f, Element(u), Element(w), p.clone())).collect();
        out.sort_by_key(|a| (a.0, a.1, a.2));
        out
    }

    pub fn preload(&mut self, family: Family, u: Element, w: Element, value: IntPoly) {
        self.memo.insert((family, u.0, w.0), value);
    }

    pub fn r_poly(&mut self, u: Element, w: Element) -> IntPoly {
        self.compute(Family::R, u, w)
    }

    pub fn rtilde_poly(&mut self, u: Element, w: Element) -> IntPoly {
        self.compute(Family::RTilde, u, w)
    }

    /// `R(u, w)(q + 1)` from its own recursion.
    pub fn shifted_r(&mut self, u: Element, w: Element) -> IntPoly {
        self.compute(Family::Shifted, u, w)
    }

    fn descent(&self, w: Element) -> usize {
        match self.rule {
            DescentRule::Smallest => self.group.first_right_descent(w),
            DescentRule::Largest => self.group.last_right_descent(w),
        }
        .expect("w > u ≥ e has a descent")
    }

    fn compute(&mut self, family: Family, u: Element, w: Element) -> IntPoly {
        let g = self.group;
        if u == w {
            return IntPoly::one();
        }
        if g.length(u) >= g.length(w) || !g.leq(u, w) {
            return IntPoly::zero();
        }
        let key = (family, u.0, w.0);
        if let Some(p) = self.memo.get(&key) {
            self.hits += 1;
            return p.clone();
        }
        self.misses += 1;
        let s = self.descent(w);
        let ws = g.right_mul(w, s);
        let us = g.right_mul(u, s);
        let value = if g.length(us) < g.length(u) {
            self.compute(family, us, ws)
        } else {
            let a = self.compute(family, u, ws);
            let b = self.compute(family, us, ws);
            match family {
                Family::R => &(&IntPoly::q_minus_one() * &a) + &b.shift_up(1),
                Family::RTilde => &a.shift_up(1) + &b,
                Family::Shifted => &a.shift_up(1) + &(&IntPoly::q_plus_one() * &b),
            }
        };
        self.memo.insert(key, value.clone());
        value
    }

    pub fn gamma_vector(&mut self, u: Element, w: Element) -> Result<GammaVector> {
        let g = self.group;
        if !g.leq(u, w) {
            return Err(Error::EmptyInterval { lower: g.label(u), upper: g.label(w) });
        }
        let rt = self.rtilde_poly(u, w);
        let l = g.length_between(u, w);
        let a = rt.low_degree().expect("R~ is nonzero on an interval") as u32;
        if !(l - a).is_multiple_of(2) {
            return Err(Error::Internal("R~ support does not have the parity of the length".into()));
        }
        let mut values = Vec::new();
        for j in a..=l {
            let c = rt.coeff(j as usize);
            if (j - a).is_multiple_of(2) {
                values.push(c);
            } else if !c.is_zero() {
                return Err(Error::Internal(format!("R~ has a term off the step-2 support at q^{j}")));
            }
        }
        Ok(GammaVector { absolute_length: a, coxeter_length: l, values })
    }

    pub fn double_r(&mut self, u: Element, w: Element) -> Result<BiPoly> {
        Ok(self.gamma_vector(u, w)?.double_r())
    }

    /// `|[u, w]| = R->(1)`.
    pub fn bruhat_size(&mut self, u: Element, w: Element) -> BigInt {
        self.shifted_r(u, w).size()
    }

    /// `‖[u, w]‖ = R->'(1)`.
    pub fn bruhat_total(&mut self, u: Element, w: Element) -> BigInt {
        self.shifted_r(u, w).total()
    }

    /// `R(2)`, the second route to the Bruhat size.
    pub fn bruhat_size_via_r(&mut self, u: Element, w: Element) -> BigInt {
        self.r_poly(u, w).eval_i64(2)
    }

    /// `R'(2)`.
    pub fn bruhat_total_via_r(&mut self, u: Element, w: Element) -> BigInt {
        self.r_poly(u, w).derivative().eval_i64(2)
    }

    /// `(R(1) = 1, R'(1) = 1)`: whether `(u, w)` is a vertex, an edge.
    pub fn characteristic_check(&mut self, u: Element, w: Element) -> (bool, bool) {
        let r = self.r_poly(u, w);
        (r.eval_i64(1).is_one(), r.derivative().eval_i64(1).is_one())
    }

    /// Descent transport: replace `(x, y)` by `(xs, ys)` until some right
    /// descent `s` of `y` is an ascent of `x`. Every pair in the chain has the
    /// same R-polynomial. Returns the chain and the final `s`.
    pub fn transport_chain(&self, u: Element, w: Element) -> Option<(Vec<(Element, Element)>, usize)> {
        let g = self.group;
        if u == w || !g.leq(u, w) {
            return None;
        }
        let (mut x, mut y) = (u, w);
        let mut chain = vec![(x, y)];
        loop {
            let descents = g.descents(y, crate::coxeter::Side::Right);
            if let Some(&s) = descents.iter().find(|&&s| g.length(g.right_mul(x, s)) > g.length(x)) {
                return Some((chain, s));
            }
            let s = descents[0];
            x = g.right_mul(x, s);
            y = g.right_mul(y, s);
            chain.push((x, y));
        }
    }
}

/// Coefficients of `R~(u, w)`, supported on `a, a+2, ..., ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaVector {
    absolute_length: u32,
    coxeter_length: u32,
    /// `γ_a, γ_{a+2}, ..., γ_ℓ`.
    values: Vec<BigInt>,
}

impl GammaVector {
    pub fn absolute_length(&self) -> u32 {
        self.absolute_length
    }

    pub fn coxeter_length(&self) -> u32 {
        self.coxeter_length
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `(j, γ_j)` pairs in increasing `j`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.values.iter().enumerate().map(move |(i, c)| (self.absolute_length + 2 * i as u32, c))
    }

    pub fn get(&self, j: u32) -> BigInt {
        if j < self.absolute_length || j > self.coxeter_length || !(j - self.absolute_length).is_multiple_of(2) {
            return BigInt::zero();
        }
        self.values[((j - self.absolute_length) / 2) as usize].clone()
    }

    /// `Σ γ_j q^((ℓ-j)/2) (q-1)^j`.
    pub fn reassemble_r(&self) -> IntPoly {
        let l = self.coxeter_length;
        self.entries()
            .map(|(j, c)| IntPoly::q_minus_one().pow(j).shift_up(((l - j) / 2) as usize).scale(c))
            .sum()
    }

    /// `Σ γ_j (q+1)^((ℓ-j)/2) q^j`.
    pub fn reassemble_shifted(&self) -> IntPoly {
        let l = self.coxeter_length;
        self.entries().map(|(j, c)| IntPoly::q_plus_one().pow((l - j) / 2).shift_up(j as usize).scale(c)).sum()
    }

    /// `Σ γ_j p^((ℓ-j)/2) (q-1)^j`.
    pub fn double_r(&self) -> BiPoly {
        let l = self.coxeter_length;
        let mut out = BiPoly::zero();
        for (j, c) in self.entries() {
            out.add_p_power_times((l - j) / 2, &IntPoly::q_minus_one().pow(j).scale(c));
        }
        out
    }
}

fn check_cap(group: &Group, u: Element, w: Element, cap: u32) -> Result<()> {
    let length = group.length(w).saturating_sub(group.length(u));
    if length > cap {
        return Err(Error::EnumerationCap { length, cap });
    }
    Ok(())
}

/// `Σ q^a(Γ)` over `<`-increasing paths from `u` to `w`.
pub fn rtilde_via_paths(
    group: &Group,
    graph: &BruhatGraph,
    u: Element,
    w: Element,
    order: &ReflectionOrder,
    cap: u32,
) -> Result<IntPoly> {
    check_cap(group, u, w, cap)?;
    Ok(increasing_paths(group, graph, u, w, order, false)
        .iter()
        .map(|p| IntPoly::monomial(1, p.absolute_length() as usize))
        .sum())
}

/// `Σ ρ(Γ)` over `<`-increasing paths from `u` to `w`.
pub fn shifted_r_via_weights(
    group: &Group,
    graph: &BruhatGraph,
    u: Element,
    w: Element,
    order: &ReflectionOrder,
    cap: u32,
) -> Result<IntPoly> {
    check_cap(group, u, w, cap)?;
    Ok(increasing_paths(group, graph, u, w, order, false).iter().map(bruhat_weight).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn qm(k: u32) -> IntPoly {
        IntPoly::q_minus_one().pow(k)
    }

    #[test]
    fn r_of_e_4321() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let want = &(&qm(6) + &qm(4).shift_up(1).scale(&3.into())) + &qm(2).shift_up(2);
        assert_eq!(ctx.r_poly(g.identity(), g.longest()), want);
        let x = g.parse_element("2413").unwrap();
        assert_eq!(ctx.r_poly(x, x), IntPoly::one());
        assert!(ctx.r_poly(g.longest(), g.identity()).is_zero());
    }

    #[test]
    fn boe_counterexample() {
        let g = Group::new(CoxeterType::A(5)).unwrap();
        let mut ctx = RContext::new(&g);
        let u = g.parse_element("124356").unwrap();
        let w = g.parse_element("564312").unwrap();
        assert_eq!(ctx.r_poly(u, w), p(&[1, -5, 11, -13, 8, -1, -2, -1, 8, -13, 11, -5, 1]));
    }

    #[test]
    fn rtilde_examples() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let w = g.parse_element("3412").unwrap();
        assert_eq!(ctx.rtilde_poly(g.identity(), w), p(&[0, 0, 1, 0, 1]));
        assert_eq!(ctx.rtilde_poly(w, w), IntPoly::one());

        // Fibonacci oracle: F_0 = 1, F_1 = q, F_2 = q^2, F_n = q F_{n-1} + F_{n-2}
        let mut fib = vec![IntPoly::one(), IntPoly::q(), IntPoly::monomial(1, 2)];
        for n in 3..=5 {
            let next = &fib[n - 1].shift_up(1) + &fib[n - 2];
            fib.push(next);
        }
        assert_eq!(fib[5], p(&[0, 1, 0, 3, 0, 1]));
        let d = Group::new(CoxeterType::Dihedral(5)).unwrap();
        let mut dctx = RContext::new(&d);
        assert_eq!(dctx.rtilde_poly(d.identity(), d.longest()), fib[5]);
    }

    #[test]
    fn shifted_examples() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let w = g.parse_element("3421").unwrap();
        let q = IntPoly::q();
        let want = &q.pow(5) + &(&IntPoly::q_plus_one() * &q.pow(3)).scale(&2.into());
        assert_eq!(ctx.shifted_r(g.identity(), w), want);

        let d = Group::new(CoxeterType::Dihedral(5)).unwrap();
        let mut dctx = RContext::new(&d);
        let x1 = IntPoly::q_plus_one();
        let want = &(&q.pow(5) + &(&x1 * &q.pow(3)).scale(&3.into())) + &(&x1.pow(2) * &q);
        assert_eq!(dctx.shifted_r(d.identity(), d.longest()), want);
    }

    #[test]
    fn gamma_vectors() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let gv = ctx.gamma_vector(g.identity(), g.longest()).unwrap();
        let entries: Vec<(u32, i64)> = gv.entries().map(|(j, c)| (j, c.try_into().unwrap())).collect();
        assert_eq!(entries, vec![(2, 1), (4, 3), (6, 1)]);
        let gv = ctx.gamma_vector(g.identity(), g.parse_element("4231").unwrap()).unwrap();
        let entries: Vec<(u32, i64)> = gv.entries().map(|(j, c)| (j, c.try_into().unwrap())).collect();
        assert_eq!(entries, vec![(1, 1), (3, 2), (5, 1)]);
        let s = g.generator(1);
        let gv = ctx.gamma_vector(g.identity(), s).unwrap();
        assert_eq!((gv.absolute_length(), gv.values().len()), (1, 1));
        assert!(ctx.gamma_vector(g.longest(), g.identity()).is_err());
    }

    #[test]
    fn sizes_and_totals() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let e = g.identity();
        assert_eq!(ctx.bruhat_size(e, g.longest()), 11.into());
        assert_eq!(ctx.bruhat_size_via_r(e, g.longest()), 11.into());
        let w = g.parse_element("3421").unwrap();
        assert_eq!(ctx.bruhat_total(e, w), 19.into());
        assert_eq!(ctx.bruhat_total_via_r(e, w), 19.into());
        assert_eq!(ctx.bruhat_size(w, w), BigInt::one());
    }

    #[test]
    fn characteristic_functions() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let e = g.identity();
        assert_eq!(ctx.characteristic_check(e, e), (true, false));
        let t = g.parse_element("3214").unwrap();
        assert_eq!(ctx.characteristic_check(e, t), (false, true));
        assert_eq!(ctx.characteristic_check(e, g.parse_element("3412").unwrap()), (false, false));
    }

    #[test]
    fn memo_counts_hits() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let first = ctx.r_poly(g.identity(), g.longest());
        let misses = ctx.misses();
        assert_eq!(ctx.r_poly(g.identity(), g.longest()), first);
        assert_eq!(ctx.misses(), misses);
        assert!(ctx.hits() >= 1);
    }

    #[test]
    fn transport_reaches_an_ascent() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        for (u, w) in g.comparable_pairs() {
            if u == w {
                continue;
            }
            let (chain, s) = ctx.transport_chain(u, w).unwrap();
            let r = ctx.r_poly(u, w);
            for &(x, y) in &chain {
                assert_eq!(ctx.r_poly(x, y), r);
            }
            let &(x, y) = chain.last().unwrap();
            assert!(g.length(g.right_mul(x, s)) > g.length(x));
            assert!(g.length(g.right_mul(y, s)) < g.length(y));
        }
    }
}
