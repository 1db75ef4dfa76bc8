//! Exhaustive identities and inequalities for the R-polynomial family.

use bruhat::analysis::{
    bruhat_poincare, fibonacci_poly, interval_shifted_sum, is_dihedral_interval, poincare,
};
use bruhat::graph::{increasing_paths, BruhatGraph, ReflectionOrder};
use bruhat::{CoxeterType, Group, IntPoly, RContext, Specialization};

fn group(ty: CoxeterType) -> Group {
    Group::new(ty).unwrap()
}

#[test]
fn recursion_outputs_have_the_expected_shape() {
    let g = group(CoxeterType::A(3));
    let mut ctx = RContext::new(&g);
    for (u, w) in g.comparable_pairs() {
        let l = g.length_between(u, w) as usize;
        let rt = ctx.rtilde_poly(u, w);
        let rs = ctx.shifted_r(u, w);
        for p in [&rt, &rs] {
            assert!(p.is_monic() && p.has_nonnegative_coeffs());
            assert_eq!(p.degree(), Some(l));
        }
        assert_eq!(ctx.r_poly(u, w).degree(), Some(l));
        let gv = ctx.gamma_vector(u, w).unwrap();
        assert!(gv.values().iter().all(|c| *c >= 1.into()));
        assert_eq!(gv.values().last(), Some(&1.into()));
        assert_eq!(gv.reassemble_shifted(), rs);
        let graph = BruhatGraph::build(&g, g.interval(u, w).unwrap());
        assert_eq!(graph.absolute_distance(u, w).unwrap(), gv.absolute_length());
    }
}

#[test]
fn memo_matches_fresh_computation() {
    let g = group(CoxeterType::A(3));
    let mut warm = RContext::new(&g);
    for (u, w) in g.comparable_pairs() {
        warm.r_poly(u, w);
    }
    for (u, w) in g.comparable_pairs().into_iter().step_by(7) {
        let mut fresh = RContext::new(&g);
        assert_eq!(warm.r_poly(u, w), fresh.r_poly(u, w));
    }
}

#[test]
fn characteristic_functions_match_the_edge_relation() {
    let g = group(CoxeterType::A(3));
    let mut ctx = RContext::new(&g);
    for u in g.elements() {
        for w in g.elements() {
            let edge = g.length(w) > g.length(u) && g.is_reflection(g.mul(g.inverse(u), w));
            assert_eq!(ctx.characteristic_check(u, w), (u == w, edge));
        }
    }
}

#[test]
fn size_and_total_two_routes() {
    for ty in [CoxeterType::A(3), CoxeterType::Dihedral(7)] {
        let g = group(ty);
        let mut ctx = RContext::new(&g);
        for (u, w) in g.comparable_pairs() {
            assert_eq!(ctx.bruhat_size(u, w), ctx.bruhat_size_via_r(u, w));
            assert_eq!(ctx.bruhat_total(u, w), ctx.bruhat_total_via_r(u, w));
        }
    }
}

#[test]
fn double_r_specializations_on_s4() {
    let g = group(CoxeterType::A(3));
    let mut ctx = RContext::new(&g);
    for (u, w) in g.comparable_pairs() {
        let d = ctx.double_r(u, w).unwrap();
        let l = g.length_between(u, w) as usize;
        assert_eq!(d.specialize(Specialization::Diagonal), ctx.r_poly(u, w));
        assert_eq!(d.specialize(Specialization::BothShifted), ctx.shifted_r(u, w));
        assert_eq!(d.specialize(Specialization::PAtOne), ctx.rtilde_poly(u, w));
        assert_eq!(d.specialize(Specialization::PAtZero), IntPoly::monomial(1, l));
    }
    let x = g.parse_element("2413").unwrap();
    assert_eq!(ctx.double_r(x, x).unwrap().specialize(Specialization::Diagonal), IntPoly::one());
}

#[test]
fn blanco_and_brenti_inequalities() {
    for ty in [CoxeterType::A(3), CoxeterType::A(4)] {
        let g = group(ty);
        let mut ctx = RContext::new(&g);
        let e = g.identity();
        for (u, v) in g.comparable_pairs() {
            let lhs = ctx.rtilde_poly(e, u).shift_up(g.length_between(u, v) as usize);
            assert!(lhs.coeffwise_leq(&ctx.rtilde_poly(e, v)));
            let n = g.length_between(u, v) as usize;
            let rt = ctx.rtilde_poly(u, v);
            assert!(IntPoly::monomial(1, n).coeffwise_leq(&rt));
            assert!(rt.coeffwise_leq(&fibonacci_poly(n)));
        }
    }
    let g = group(CoxeterType::A(3));
    let mut ctx = RContext::new(&g);
    for (u, v) in g.comparable_pairs() {
        let members = g.interval(u, v).unwrap().members().to_vec();
        for x in members {
            let lhs = ctx.rtilde_poly(u, x).shift_up(g.length_between(x, v) as usize);
            assert!(lhs.coeffwise_leq(&ctx.rtilde_poly(u, v)));
        }
    }
}

#[test]
fn dihedral_intervals_share_r_polynomials() {
    let groups: Vec<Group> =
        [CoxeterType::A(3), CoxeterType::Dihedral(6), CoxeterType::Dihedral(9)].into_iter().map(group).collect();
    let mut by_length: Vec<Option<IntPoly>> = vec![None; 10];
    for g in &groups {
        let mut ctx = RContext::new(g);
        for (u, w) in g.comparable_pairs() {
            if !is_dihedral_interval(g, u, w) {
                continue;
            }
            let r = ctx.r_poly(u, w);
            let slot = &mut by_length[g.length_between(u, w) as usize];
            match slot {
                Some(seen) => assert_eq!(seen, &r),
                None => *slot = Some(r),
            }
        }
    }
    assert!(by_length[3].is_some() && by_length[9].is_some());
}

#[test]
fn bruhat_poincare_dominates_and_agrees_at_minus_one() {
    for ty in [CoxeterType::A(3), CoxeterType::A(4)] {
        let g = group(ty);
        let mut ctx = RContext::new(&g);
        for w in g.elements() {
            let p = poincare(&g, w);
            let bp = bruhat_poincare(&mut ctx, w);
            assert!(p.coeffwise_leq(&bp));
            assert_eq!(p.eval_i64(-1), bp.eval_i64(-1));
        }
    }
}

#[test]
fn bruhat_poincare_splits_over_long_increasing_paths() {
    let g = group(CoxeterType::A(3));
    let mut ctx = RContext::new(&g);
    let e = g.identity();
    let order = ReflectionOrder::standard(&g);
    for w in g.elements() {
        let graph = BruhatGraph::build(&g, g.lower_interval(w));
        let long: IntPoly = graph
            .vertices()
            .iter()
            .flat_map(|&v| increasing_paths(&g, &graph, e, v, &order, false))
            .filter(|p| !p.is_short())
            .map(|p| bruhat::graph::bruhat_weight(&p))
            .sum();
        assert_eq!(bruhat_poincare(&mut ctx, w), &poincare(&g, w) + &long);
    }
}

#[test]
fn interval_sums_of_lower_intervals_are_bruhat_poincare() {
    let g = group(CoxeterType::Dihedral(5));
    let mut ctx = RContext::new(&g);
    let e = g.identity();
    for w in g.elements() {
        assert_eq!(interval_shifted_sum(&mut ctx, e, w), bruhat_poincare(&mut ctx, w));
    }
}

#[test]
fn path_weights_are_multiplicative() {
    let g = group(CoxeterType::A(3));
    let graph = BruhatGraph::build(&g, g.lower_interval(g.longest()));
    let paths = bruhat::graph::all_paths(&g, &graph, g.identity(), g.longest(), 8).unwrap();
    let mut n = 0;
    for p in paths {
        assert_eq!(bruhat::graph::bruhat_weight(&p), p.edge_weight_product());
        assert!(p.coxeter_length() >= p.absolute_length());
        assert_eq!((p.coxeter_length() - p.absolute_length()) % 2, 0);
        n += 1;
    }
    assert!(n > 16);
}
