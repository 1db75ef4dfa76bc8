//! Named verification checks run exhaustively (or on a seeded sample) over a
//! group. Output is independent of the worker count.

use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{self, par_map};
use crate::coxeter::{Element, Group};
use crate::error::{Error, Result};
use crate::graph::{all_paths, increasing_paths, BruhatGraph, BruhatPath, ReflectionOrder, DEFAULT_PATH_CAP};
use crate::rpoly::{rtilde_via_paths, shifted_r_via_weights, DescentRule, RContext};

pub const CHECKS: [&str; 10] = [
    "th1-monotone",
    "th1-odd",
    "th2",
    "th3",
    "th4-bounds",
    "el-unique",
    "oracle-eq",
    "cp-fourway",
    "obs-sum",
    "gen-func",
];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// 0 = rayon default.
    pub workers: usize,
    /// Intervals longer than this are skipped by path-enumerating checks.
    pub max_interval_len: u32,
    /// Restrict interval checks to this many seeded random comparable pairs.
    pub sample: Option<usize>,
    pub seed: u64,
    /// Empty = all of [`CHECKS`].
    pub checks: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { workers: 0, max_interval_len: DEFAULT_PATH_CAP, sample: None, seed: 0, checks: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    /// Cases beyond the length cap; a nonzero count marks a partial result.
    pub skipped: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub group: String,
    pub sampled: bool,
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("suite {}{}\n", self.group, if self.sampled { " (sampled)" } else { "" });
        for o in &self.outcomes {
            let partial = if o.skipped > 0 { format!(" skipped={} (partial)", o.skipped) } else { String::new() };
            let _ = writeln!(
                out,
                "{:<13} {}  cases={}{}  {}",
                o.name,
                if o.passed { "PASS" } else { "FAIL" },
                o.cases,
                partial,
                o.detail
            );
        }
        let ok = self.outcomes.iter().filter(|o| o.passed).count();
        let _ = writeln!(out, "result: {} ({ok}/{})", if self.passed() { "PASS" } else { "FAIL" }, self.outcomes.len());
        out
    }
}

/// Comparable pairs in scope, in canonical order.
pub fn scope_pairs(group: &Group, config: &SuiteConfig) -> Vec<(Element, Element)> {
    let pairs = group.comparable_pairs();
    match config.sample {
        Some(n) if n < pairs.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
            let mut idx = rand::seq::index::sample(&mut rng, pairs.len(), n).into_vec();
            idx.sort_unstable();
            idx.into_iter().map(|i| pairs[i]).collect()
        }
        _ => pairs,
    }
}

pub fn run_suite(group: &Group, config: &SuiteConfig) -> Result<SuiteReport> {
    let names: Vec<String> =
        if config.checks.is_empty() { CHECKS.iter().map(|s| s.to_string()).collect() } else { config.checks.clone() };
    for n in &names {
        if !CHECKS.contains(&n.as_str()) {
            return Err(Error::UnknownCheck(n.clone()));
        }
    }
    let pairs = scope_pairs(group, config);
    let mut th1 = None;
    let mut outcomes = Vec::new();
    for name in &names {
        let outcome = match name.as_str() {
            "th1-monotone" | "th1-odd" => {
                let (mono, odd) = *th1.get_or_insert_with(|| analysis::theorem1_check(group, config.workers));
                let passed = if name == "th1-monotone" { mono } else { odd };
                let detail = if name == "th1-monotone" { "|u| <= |v| whenever u <= v" } else { "|v| odd for every v" };
                outcome(name, passed, group.order() as u64, 0, detail.to_string())
            }
            "th2" => check_th2(group, config),
            "th3" => check_th3(group, &pairs, config),
            "th4-bounds" => check_th4(group, &pairs, config),
            "el-unique" => check_el(group, &pairs, config),
            "oracle-eq" => check_oracle(group, &pairs, config),
            "cp-fourway" => check_fourway(group, config),
            "obs-sum" => {
                let mut ctx = RContext::new(group);
                let obs = analysis::observation_sum_check(&mut ctx);
                let detail = format!("sum |v| = {}, expected {}", obs.sum, obs.expected);
                outcome(name, obs.holds(), group.order() as u64, 0, detail)
            }
            "gen-func" => {
                let n = 20;
                let ok = analysis::generating_function_check(n)
                    && (0..=n).all(analysis::dihedral_closed_form_holds)
                    && (1..=n).all(|k| analysis::dihedral_numbers(k).0 == analysis::jacobsthal(k));
                outcome(name, ok, n as u64 + 1, 0, format!("series, closed form and Jacobsthal agree through n = {n}"))
            }
            _ => unreachable!(),
        };
        outcomes.push(outcome);
    }
    Ok(SuiteReport { group: group.descriptor().to_string(), sampled: pairs.len() < group.comparable_pairs().len(), outcomes })
}

fn outcome(name: &str, passed: bool, cases: u64, skipped: u64, detail: String) -> CheckOutcome {
    CheckOutcome { name: name.to_string(), passed, cases, skipped, detail }
}

fn check_th2(group: &Group, config: &SuiteConfig) -> CheckOutcome {
    let ws: Vec<Element> = group.elements().collect();
    let rows = par_map(group, &ws, config.workers, |ctx, &w| {
        let g = ctx.group();
        let regular = analysis::is_regular(&BruhatGraph::build(g, g.lower_interval(w)));
        (analysis::theorem2_criterion(ctx, w).fires(), regular)
    });
    let bad = rows.iter().filter(|&&(fires, regular)| fires && regular).count();
    let fired = rows.iter().filter(|r| r.0).count();
    let silent = rows.iter().filter(|&&(fires, regular)| !fires && !regular).count();
    outcome(
        "th2",
        bad == 0,
        ws.len() as u64,
        0,
        format!("fired on {fired} lower intervals, silent on {silent} irregular ones, {bad} contradictions"),
    )
}

fn check_th3(group: &Group, pairs: &[(Element, Element)], config: &SuiteConfig) -> CheckOutcome {
    let order = ReflectionOrder::standard(group);
    let rows = par_map(group, pairs, config.workers, |ctx, &(u, w)| {
        let g = ctx.group();
        let graph = BruhatGraph::build(g, g.interval(u, w).expect("comparable"));
        let regular = analysis::is_upward_regular(&graph, g);
        let d = analysis::deodhar_checks(ctx, u, w);
        let (p1, p2) = analysis::p1_p2(&graph, u, &order);
        let split = d.f2 == BigInt::from(p1 + p2);
        [d.f1_holds(), d.f1_strict() != regular, d.f2_holds(), !d.f2_strict() || !regular, split]
    });
    let fails: Vec<usize> = (0..5).map(|k| rows.iter().filter(|r| !r[k]).count()).collect();
    let detail = format!(
        "f1 bound {}, f1 strict<=>irregular {}, f2 bound {}, f2 strict=>irregular {}, f2=p1+p2 {} failures",
        fails[0], fails[1], fails[2], fails[3], fails[4]
    );
    outcome("th3", fails.iter().all(|&f| f == 0), pairs.len() as u64, 0, detail)
}

/// `2^ℓ` elements and no long edges.
fn is_boolean_interval(graph: &BruhatGraph) -> bool {
    let l = graph.interval().length();
    graph.vertices().len() == 1usize << l && graph.edges().iter().all(|e| e.is_short())
}

fn check_th4(group: &Group, pairs: &[(Element, Element)], config: &SuiteConfig) -> CheckOutcome {
    let rows = par_map(group, pairs, config.workers, |ctx, &(u, w)| {
        let g = ctx.group();
        if u == w {
            return (true, 0u8);
        }
        let v = analysis::bounds_check_th4(ctx, u, w);
        let graph = BruhatGraph::build(g, g.interval(u, w).expect("comparable"));
        let mut tight_ok = true;
        let mut kind = 0u8;
        if analysis::is_dihedral_interval(g, u, w) {
            tight_ok &= v.upper_tight;
            kind |= 1;
        }
        if is_boolean_interval(&graph) {
            tight_ok &= v.lower_tight;
            kind |= 2;
        }
        (v.holds() && tight_ok, kind)
    });
    let fails = rows.iter().filter(|r| !r.0).count();
    let dihedral = rows.iter().filter(|r| r.1 & 1 != 0).count();
    let boolean = rows.iter().filter(|r| r.1 & 2 != 0).count();
    outcome(
        "th4-bounds",
        fails == 0,
        pairs.len() as u64,
        0,
        format!("{fails} failures; {dihedral} dihedral intervals at d_n, {boolean} Boolean intervals at q^n"),
    )
}

fn rank_sequence(path: &BruhatPath, order: &ReflectionOrder) -> Vec<usize> {
    path.labels().iter().map(|&t| order.rank(t)).collect()
}

fn check_el(group: &Group, pairs: &[(Element, Element)], config: &SuiteConfig) -> CheckOutcome {
    let orders = ReflectionOrder::distinct_orders(group, 3);
    let cap = config.max_interval_len;
    let rows = par_map(group, pairs, config.workers, |ctx, &(u, w)| {
        let g = ctx.group();
        if g.length_between(u, w) > cap {
            return None;
        }
        let graph = BruhatGraph::build(g, g.interval(u, w).expect("comparable"));
        let short: Vec<BruhatPath> =
            all_paths(g, &graph, u, w, cap).expect("within cap").filter(|p| p.is_short()).collect();
        Some(orders.iter().all(|order| {
            let inc = increasing_paths(g, &graph, u, w, order, true);
            let first = short.iter().min_by_key(|p| rank_sequence(p, order));
            inc.len() == 1 && first == Some(&inc[0])
        }))
    });
    let skipped = rows.iter().filter(|r| r.is_none()).count() as u64;
    let fails = rows.iter().filter(|r| **r == Some(false)).count();
    outcome(
        "el-unique",
        fails == 0,
        pairs.len() as u64 - skipped,
        skipped,
        format!("{} reflection orders; {fails} intervals without a unique lex-first increasing chain", orders.len()),
    )
}

fn check_oracle(group: &Group, pairs: &[(Element, Element)], config: &SuiteConfig) -> CheckOutcome {
    let orders = ReflectionOrder::distinct_orders(group, 3);
    let valid = orders.iter().all(|o| o.validate(group).valid);
    let cap = config.max_interval_len;
    let rows = par_map(group, pairs, config.workers, |ctx, &(u, w)| {
        let g = ctx.group();
        let r = ctx.r_poly(u, w);
        let rt = ctx.rtilde_poly(u, w);
        let rs = ctx.shifted_r(u, w);
        let mut alt = RContext::with_rule(g, DescentRule::Largest);
        let algebraic = ctx.gamma_vector(u, w).map(|gv| gv.reassemble_r() == r).unwrap_or(false)
            && rs == r.shift_plus_one()
            && alt.r_poly(u, w) == r;
        if g.length_between(u, w) > cap {
            return (algebraic, true);
        }
        let graph = BruhatGraph::build(g, g.interval(u, w).expect("comparable"));
        let paths = orders.iter().all(|order| {
            rtilde_via_paths(g, &graph, u, w, order, cap).as_ref() == Ok(&rt)
                && shifted_r_via_weights(g, &graph, u, w, order, cap).as_ref() == Ok(&rs)
        });
        (algebraic && paths, false)
    });
    let skipped = rows.iter().filter(|r| r.1).count() as u64;
    let fails = rows.iter().filter(|r| !r.0).count();
    outcome(
        "oracle-eq",
        valid && fails == 0,
        pairs.len() as u64,
        skipped,
        format!(
            "{} valid reflection orders; {fails} mismatches (path oracles skipped on {skipped} long intervals)",
            if valid { orders.len() } else { 0 }
        ),
    )
}

fn check_fourway(group: &Group, config: &SuiteConfig) -> CheckOutcome {
    let ws: Vec<Element> = group.elements().collect();
    let rows = par_map(group, &ws, config.workers, |ctx, &w| analysis::regularity_fourway(ctx, w));
    let fails = rows.iter().filter(|r| !r.agree()).count();
    let regular = rows.iter().filter(|r| r.degree).count();
    outcome(
        "cp-fourway",
        fails == 0,
        ws.len() as u64,
        0,
        format!("{regular} regular of {} lower intervals, {fails} disagreements", ws.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    #[test]
    fn a3_suite_passes() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let report = run_suite(&g, &SuiteConfig::default()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        assert_eq!(report.outcomes.len(), CHECKS.len());
    }

    #[test]
    fn dihedral_suite_passes() {
        let g = Group::new(CoxeterType::Dihedral(6)).unwrap();
        let report = run_suite(&g, &SuiteConfig::default()).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn unknown_check_is_an_error() {
        let g = Group::new(CoxeterType::A(1)).unwrap();
        let config = SuiteConfig { checks: vec!["th9".into()], ..SuiteConfig::default() };
        assert_eq!(run_suite(&g, &config), Err(Error::UnknownCheck("th9".into())));
    }

    #[test]
    fn sampling_is_seeded() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let config = SuiteConfig { sample: Some(20), seed: 7, ..SuiteConfig::default() };
        let a = scope_pairs(&g, &config);
        assert_eq!(a.len(), 20);
        assert_eq!(a, scope_pairs(&g, &config));
        let all = g.comparable_pairs();
        let pos: Vec<usize> = a.iter().map(|p| all.iter().position(|q| q == p).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
    }
}
