//! Serializable summaries: per-interval reports and the two reference tables.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::analysis::{self, Theorem4};
use crate::coxeter::Element;
use crate::error::Result;
use crate::graph::{BruhatGraph, ReflectionOrder};
use crate::poly::IntPoly;
use crate::rpoly::{GammaVector, RContext};

/// `"num/den"`, always with an explicit denominator.
pub fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// JSON number when it fits in an `i64`, decimal string otherwise.
pub(crate) mod big {
    use num_bigint::BigInt;
    use serde::{Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(v) {
            Ok(x) => s.serialize_i64(x),
            Err(_) => s.serialize_str(&v.to_string()),
        }
    }

    pub fn serialize_vec<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W<'a>(#[serde(serialize_with = "serialize")] &'a BigInt);
        s.collect_seq(v.iter().map(W))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaEntry {
    pub j: u32,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegularityReport {
    /// Every vertex `x` has `ℓ(x, w)` outgoing edges.
    pub regular: bool,
    /// Every vertex has undirected degree `ℓ(u, w)`.
    pub degree_regular: bool,
    pub upper_intervals_bruhat_boolean: bool,
    /// Lower intervals only.
    pub carrell_peterson: Option<bool>,
    /// Lower intervals in type A only.
    pub nonsingular: Option<bool>,
    /// Lower intervals only: `proved-irregular`, `silent` or `consistent`.
    pub theorem2: Option<String>,
    pub provenance: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeodharReport {
    pub f1_bound: bool,
    pub f1_strict: bool,
    pub f2_bound: bool,
    pub f2_strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntervalReport {
    pub group: String,
    pub u: String,
    pub w: String,
    pub length: u32,
    pub absolute_length: u32,
    pub vertices: usize,
    pub edges: usize,
    pub poincare: Option<IntPoly>,
    pub poincare_average: Option<String>,
    pub r: IntPoly,
    pub rtilde: IntPoly,
    pub shifted_r: IntPoly,
    pub gamma: Vec<GammaEntry>,
    #[serde(serialize_with = "big::serialize")]
    pub size: BigInt,
    #[serde(serialize_with = "big::serialize")]
    pub total: BigInt,
    pub average: String,
    pub interval_sum: IntPoly,
    pub interval_sum_average: String,
    #[serde(serialize_with = "big::serialize_vec")]
    pub f_tilde: Vec<BigInt>,
    #[serde(serialize_with = "big::serialize")]
    pub f1: BigInt,
    #[serde(serialize_with = "big::serialize")]
    pub f2: BigInt,
    pub p1: u64,
    pub p2: u64,
    pub bruhat_boolean: bool,
    pub regularity: RegularityReport,
    pub deodhar: DeodharReport,
    pub th4: Theorem4,
    /// `Σ R->(u, v) ≥ (1+q)^ℓ` coefficientwise.
    pub conjecture_bound: bool,
}

impl IntervalReport {
    pub fn build(ctx: &mut RContext, u: Element, w: Element) -> Result<IntervalReport> {
        let g = ctx.group();
        let interval = g.interval(u, w)?;
        let graph = BruhatGraph::build(g, interval.clone());
        let gv = ctx.gamma_vector(u, w)?;
        let absolute_length = graph.absolute_distance(u, w)?;
        if absolute_length != gv.absolute_length() {
            return Err(crate::Error::Internal(format!(
                "graph distance {absolute_length} disagrees with R~ support {}",
                gv.absolute_length()
            )));
        }
        let r = ctx.r_poly(u, w);
        let rtilde = ctx.rtilde_poly(u, w);
        let shifted_r = ctx.shifted_r(u, w);
        let interval_sum = analysis::interval_shifted_sum(ctx, u, w);
        let length = interval.length();
        let f_tilde: Vec<BigInt> = (0..=length as usize).map(|i| interval_sum.coeff(i)).collect();
        let order = ReflectionOrder::standard(g);
        let (p1, p2) = analysis::p1_p2(&graph, u, &order);
        let dd = analysis::deodhar_checks(ctx, u, w);

        let lower = u == g.identity();
        let regular = analysis::is_upward_regular(&graph, g);
        let regularity = RegularityReport {
            regular,
            degree_regular: analysis::is_regular(&graph),
            upper_intervals_bruhat_boolean: analysis::regularity_via_bruhat_boolean(ctx, u, w),
            carrell_peterson: lower.then(|| analysis::carrell_peterson(g, w)),
            nonsingular: if lower { analysis::is_singular(g, w).ok().map(|s| !s) } else { None },
            theorem2: lower.then(|| analysis::theorem2_criterion(ctx, w).describe(regular).to_string()),
            provenance: "out-degree of every vertex x equals l(x, w) in the Bruhat graph of [u, w]".to_string(),
        };
        let poincare = lower.then(|| analysis::poincare(g, w));
        let poincare_average = poincare.as_ref().map(|p| ratio_string(&p.average().expect("nonzero")));

        Ok(IntervalReport {
            group: g.descriptor().to_string(),
            u: g.label(u),
            w: g.label(w),
            length,
            absolute_length,
            vertices: graph.vertices().len(),
            edges: graph.edges().len(),
            poincare,
            poincare_average,
            gamma: gv.entries().map(|(j, c)| GammaEntry { j, value: c.to_string() }).collect(),
            size: shifted_r.size(),
            total: shifted_r.total(),
            average: ratio_string(&shifted_r.average()?),
            interval_sum_average: ratio_string(&interval_sum.average()?),
            f1: f_tilde.get(1).cloned().unwrap_or_default(),
            f2: f_tilde.get(2).cloned().unwrap_or_default(),
            f_tilde,
            p1,
            p2,
            bruhat_boolean: interval_sum == IntPoly::q_plus_one().pow(length),
            conjecture_bound: IntPoly::q_plus_one().pow(length).coeffwise_leq(&interval_sum),
            interval_sum,
            regularity,
            deodhar: DeodharReport {
                f1_bound: dd.f1_holds(),
                f1_strict: dd.f1_strict(),
                f2_bound: dd.f2_holds(),
                f2_strict: dd.f2_strict(),
            },
            th4: analysis::bounds_check_th4(ctx, u, w),
            r,
            rtilde,
            shifted_r,
        })
    }
}

/// `Σ γ_j q^((ℓ-j)/2) (q-1)^j` written out, e.g. `(q-1)^5+2q(q-1)^3`.
pub fn gamma_form(gv: &GammaVector) -> String {
    let l = gv.coxeter_length();
    let mut terms: Vec<String> = Vec::new();
    for (j, c) in gv.entries().collect::<Vec<_>>().into_iter().rev() {
        let mut t = String::new();
        if !c.is_one() {
            t.push_str(&c.to_string());
        }
        match (l - j) / 2 {
            0 => {}
            1 => t.push('q'),
            k => t.push_str(&format!("q^{k}")),
        }
        match j {
            0 => {}
            1 => t.push_str("(q-1)"),
            _ => t.push_str(&format!("(q-1)^{j}")),
        }
        if t.is_empty() {
            t.push('1');
        }
        terms.push(t);
    }
    terms.join("+")
}

#[derive(Clone, Debug, Serialize)]
pub struct RClass {
    pub members: Vec<String>,
    pub length: u32,
    pub r: IntPoly,
    pub gamma_form: String,
    #[serde(serialize_with = "big::serialize")]
    pub size: BigInt,
}

/// The elements `v` grouped by `R(e, v)`, classes ordered by length and then
/// by decreasing size.
pub fn r_poly_classes(ctx: &mut RContext) -> Vec<RClass> {
    let g = ctx.group();
    let e = g.identity();
    let mut classes: Vec<RClass> = Vec::new();
    for v in g.elements() {
        let r = ctx.r_poly(e, v);
        match classes.iter_mut().find(|c| c.r == r) {
            Some(c) => c.members.push(g.label(v)),
            None => {
                let gv = ctx.gamma_vector(e, v).expect("e ≤ v");
                classes.push(RClass {
                    members: vec![g.label(v)],
                    length: g.length(v),
                    size: r.eval_i64(2),
                    gamma_form: gamma_form(&gv),
                    r,
                });
            }
        }
    }
    for c in &mut classes {
        c.members.sort();
    }
    classes.sort_by(|a, b| a.length.cmp(&b.length).then(b.size.cmp(&a.size)).then(a.members.cmp(&b.members)));
    classes
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralRow {
    pub n: usize,
    pub poly: IntPoly,
    #[serde(serialize_with = "big::serialize")]
    pub size: BigInt,
    #[serde(serialize_with = "big::serialize")]
    pub total: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DihedralTable {
    pub rows: Vec<DihedralRow>,
}

impl DihedralTable {
    pub fn new(max_n: usize) -> DihedralTable {
        let rows = analysis::dihedral_polys(max_n)
            .into_iter()
            .enumerate()
            .map(|(n, poly)| DihedralRow { n, size: poly.size(), total: poly.total(), poly })
            .collect();
        DihedralTable { rows }
    }

    /// Every row satisfies the closed form and `d_n = J_n`.
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(|r| {
            analysis::dihedral_closed_form_holds(r.n) && (r.n == 0 || r.size == analysis::jacobsthal(r.n))
        })
    }
}

impl Default for DihedralTable {
    fn default() -> Self {
        DihedralTable::new(8)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterType, Group};

    #[test]
    fn table1_classes() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let classes = r_poly_classes(&mut ctx);
        let sizes: Vec<i64> = classes.iter().map(|c| (&c.size).try_into().unwrap()).collect();
        assert_eq!(sizes, vec![1, 1, 1, 3, 1, 3, 9, 5, 11]);
        assert_eq!(classes[6].members, vec!["4231"]);
        assert_eq!(classes[6].gamma_form, "(q-1)^5+2q(q-1)^3+q^2(q-1)");
        assert_eq!(classes[0].gamma_form, "1");
        assert_eq!(classes[3].members, vec!["1432", "3214"]);
    }

    #[test]
    fn report_for_3412() {
        let g = Group::new(CoxeterType::A(3)).unwrap();
        let mut ctx = RContext::new(&g);
        let rep = IntervalReport::build(&mut ctx, g.identity(), g.parse_element("3412").unwrap()).unwrap();
        assert_eq!(rep.size, 3.into());
        assert_eq!((rep.vertices, rep.edges), (14, 29));
        assert_eq!(rep.absolute_length, 2);
        assert_eq!(rep.poincare_average.as_deref(), Some("29/14"));
        assert!(!rep.regularity.regular && !rep.regularity.degree_regular);
        assert_eq!(rep.regularity.nonsingular, Some(false));
        assert_eq!(rep.f1, 5.into());
        assert_eq!(rep.p1 + rep.p2, 8);
        assert_eq!(rep.f2, 8.into());
    }

    #[test]
    fn report_for_a_point() {
        let g = Group::new(CoxeterType::Dihedral(4)).unwrap();
        let mut ctx = RContext::new(&g);
        let x = g.generator(1);
        let rep = IntervalReport::build(&mut ctx, x, x).unwrap();
        assert_eq!(rep.r, IntPoly::one());
        assert_eq!(rep.shifted_r, IntPoly::one());
        assert_eq!(rep.interval_sum, IntPoly::one());
        assert_eq!(rep.average, "0/1");
        assert!(rep.regularity.regular && rep.poincare.is_none());
        assert!(IntervalReport::build(&mut ctx, g.longest(), x).is_err());
    }

    #[test]
    fn dihedral_table() {
        let t = DihedralTable::new(8);
        assert!(t.consistent());
        assert_eq!((t.rows[8].size.clone(), t.rows[8].total.clone()), (85.into(), 398.into()));
        assert_eq!(DihedralTable::new(0).rows.len(), 1);
    }
}
