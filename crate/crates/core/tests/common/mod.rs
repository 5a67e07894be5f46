#![allow(dead_code)]

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toriparam::param::{ParamSystem, ParamTuple, ToricModel};
use toriparam::poly::{parse_poly_in, VarFamily};
use toriparam::polytope::LatticePolytope;
use toriparam::resolution::resolved_model;
use toriparam::{IntVec, MultiPoly, Rational};

pub fn pt(x: i64, y: i64) -> IntVec {
    IntVec::from_i64(&[x, y])
}

pub fn polygon(v: &[(i64, i64)]) -> LatticePolytope {
    let pts: Vec<IntVec> = v.iter().map(|&(x, y)| pt(x, y)).collect();
    LatticePolytope::from_vertices(2, &pts).unwrap()
}

pub fn square() -> LatticePolytope {
    polygon(&[(0, 0), (1, 0), (1, 1), (0, 1)])
}

pub fn pentagon() -> LatticePolytope {
    polygon(&[(1, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])
}

pub fn p2() -> LatticePolytope {
    polygon(&[(0, 0), (2, 0), (0, 2)])
}

pub fn singular_triangle() -> LatticePolytope {
    polygon(&[(1, 0), (0, 1), (-1, 0)])
}

pub fn hirzebruch() -> LatticePolytope {
    polygon(&[(1, 0), (0, 1), (-1, 1), (-1, 0)])
}

/// Our facet index for each facet variable of the worked examples, which
/// number facets differently from the counter-clockwise order used here.
pub const SQUARE_LABELS: [usize; 4] = [0, 2, 1, 3];
pub const HIRZEBRUCH_LABELS: [usize; 4] = [1, 2, 3, 0];
pub const RESOLVED_TRIANGLE_LABELS: [usize; 4] = [0, 1, 3, 2];
pub const IDENTITY5: [usize; 5] = [0, 1, 2, 3, 4];

/// Rewrites a polynomial written in the example's facet labels into ours.
pub fn relabel(text: &str, labels: &[usize]) -> MultiPoly {
    let r = labels.len();
    let p = parse_poly_in(text, VarFamily::Facet, r).unwrap();
    let vars: Vec<MultiPoly> = labels.iter().map(|&i| MultiPoly::var(r, i)).collect();
    p.substitute(&vars).unwrap()
}

/// Reorders a tuple given in the example's labels into ours.
pub fn to_ours<T: Clone>(listed: &[T], labels: &[usize]) -> Vec<T> {
    let mut out = listed.to_vec();
    for (i, &j) in labels.iter().enumerate() {
        out[j] = listed[i].clone();
    }
    out
}

/// Reorders a tuple in our labels into the example's.
pub fn to_example<T: Clone>(ours: &[T], labels: &[usize]) -> Vec<T> {
    labels.iter().map(|&j| ours[j].clone()).collect()
}

pub fn tuple(s: &str) -> ParamTuple {
    ParamTuple::parse(s).unwrap()
}

pub fn poly(s: &str, nvars: usize) -> MultiPoly {
    parse_poly_in(s, VarFamily::Param, nvars).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random polynomial in `nvars` parameters with total degree at most
/// `deg` and small integer coefficients; may be zero.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, density: f64) -> MultiPoly {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn all(nvars: usize, deg: u32, i: usize, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == nvars {
            out.push(e.clone());
            return;
        }
        let used: u32 = e[..i].iter().sum();
        for k in 0..=deg - used {
            e[i] = k;
            all(nvars, deg, i + 1, e, out);
        }
        e[i] = 0;
    }
    let mut monos = Vec::new();
    all(nvars, deg, 0, &mut exps, &mut monos);
    for m in monos {
        if rng.gen_bool(density) {
            let c: i64 = rng.gen_range(-4..=4);
            if c != 0 {
                terms.push((m, Rational::from_integer(c.into())));
            }
        }
    }
    MultiPoly::from_terms(nvars, terms)
}

pub fn random_nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-5..=5);
        let d: i64 = rng.gen_range(1..=4);
        let q = Rational::new(n.into(), d.into());
        if !q.is_zero() {
            return q;
        }
    }
}

/// A random tuple for `model` that is Σ-irreducible and whose composition
/// with `P_Δ` is not identically zero.
pub fn random_irreducible(rng: &mut ChaCha8Rng, model: &ToricModel, nvars: usize, deg: u32) -> ParamTuple {
    loop {
        let entries: Vec<MultiPoly> = (0..model.nvars())
            .map(|_| {
                if rng.gen_bool(0.08) {
                    MultiPoly::zero(nvars)
                } else {
                    let d = rng.gen_range(0..=deg);
                    random_poly(rng, nvars, d, 0.6)
                }
            })
            .collect();
        let report = toriparam::param::is_sigma_irreducible(&entries, model.fan()).unwrap();
        if report.irreducible {
            return ParamTuple::new(entries).unwrap();
        }
    }
}

/// Models of the round-trip corpus: square, pentagon, ℙ² triangle and the
/// resolved singular triangle.
pub fn corpus() -> Vec<(&'static str, ToricModel)> {
    vec![
        ("square", ToricModel::from_polytope(&square())),
        ("pentagon", ToricModel::from_polytope(&pentagon())),
        ("p2", ToricModel::from_polytope(&p2())),
        ("resolved triangle", resolved_model(&singular_triangle()).unwrap()),
    ]
}

pub fn p_delta(model: &ToricModel) -> ParamSystem {
    ParamSystem::build_p_delta(model)
}
