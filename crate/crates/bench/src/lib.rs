//! Shared fixtures for the benchmarks.

use toriparam::param::{compose, ParamSystem, ParamTuple, ToricModel};
use toriparam::poly::{parse_poly_in, VarFamily};
use toriparam::polytope::LatticePolytope;
use toriparam::{IntVec, MultiPoly};

pub fn polygon(vertices: &[(i64, i64)]) -> LatticePolytope {
    let pts: Vec<IntVec> = vertices.iter().map(|&(x, y)| IntVec::from_i64(&[x, y])).collect();
    LatticePolytope::from_vertices(2, &pts).expect("full-dimensional polygon")
}

pub fn pentagon() -> LatticePolytope {
    polygon(&[(1, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
}

pub fn poly(text: &str, nvars: usize) -> MultiPoly {
    parse_poly_in(text, VarFamily::Param, nvars).expect("fixture parses")
}

/// Two bivariate polynomials of degree 9 sharing a degree-5 factor.
pub fn gcd_pair() -> (MultiPoly, MultiPoly) {
    let g = poly("(u^2 + 3*u*v - v + 2)*(u*v^2 - 4*u + 7)*(v - 2*u)", 2);
    let a = poly("(u^3 - v^2 + 5)*(2*u + v - 1)", 2);
    let b = poly("(v^3 + u*v - 3)*(u - v + 4)", 2);
    (&g * &a, &g * &b)
}

/// A degree-24 univariate polynomial with repeated and irreducible factors.
pub fn factor_target() -> MultiPoly {
    poly("(u^4 - 2)*(u^3 + u + 1)^2*(u^2 - 3)^3*(u^5 - u - 1)*(u - 7)^2", 1)
}

/// `P_Δ ∘ F` on the pentagon for a planted single-parameter tuple.
pub fn pentagon_curve() -> (ParamSystem, Vec<MultiPoly>) {
    let model = ToricModel::from_polytope(&pentagon());
    let sys = ParamSystem::build_p_delta(&model);
    let f = ParamTuple::parse("(u^2 + 1, u - 3, 2*u + 5, u^3 - u + 1, u + 4)").expect("fixture parses");
    let raw = compose(&sys, &f).expect("lengths agree").raw;
    (sys, raw)
}
