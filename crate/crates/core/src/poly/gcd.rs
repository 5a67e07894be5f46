//! Multivariate gcd: recursive content/primitive-part splitting with a
//! primitive remainder sequence in the main variable.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::modp;
use super::{Monomial, MultiPoly};

/// Greatest common divisor, normalized to integer content 1 and a positive
/// graded-lex leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd_multi(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    assert_eq!(p.nvars(), q.nvars(), "variable count mismatch");
    if p.is_zero() {
        return q.normalized();
    }
    if q.is_zero() {
        return p.normalized();
    }
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mono = Monomial(mp.0.iter().zip(&mq.0).map(|(a, b)| *a.min(b)).collect());
    let p = p.unshift(&mp);
    let q = q.unshift(&mq);
    let g = gcd_nonmonomial(&p.normalized(), &q.normalized());
    g.shift(&mono).normalized()
}

/// Fold of [`gcd_multi`] over a list; zero for an empty or all-zero list.
pub fn gcd_many<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a MultiPoly>) -> MultiPoly {
    let mut acc = MultiPoly::zero(nvars);
    for p in polys {
        acc = gcd_multi(&acc, p);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn gcd_nonmonomial(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    gcd_nonmonomial_with(p, q, true)
}

fn gcd_nonmonomial_with(p: &MultiPoly, q: &MultiPoly, heuristic: bool) -> MultiPoly {
    let n = p.nvars();
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(n);
    }
    if p == q {
        return p.clone();
    }
    if let Some(g) = heuristic.then(|| heuristic_gcd(p, q, 0)).flatten() {
        return g.normalized();
    }
    let v = match (0..n).find(|&i| p.degree_in(i).unwrap_or(0) > 0 || q.degree_in(i).unwrap_or(0) > 0) {
        Some(v) => v,
        None => return MultiPoly::one(n),
    };
    let dp = p.degree_in(v).unwrap_or(0);
    let dq = q.degree_in(v).unwrap_or(0);
    if dp == 0 {
        return gcd_multi(p, &content_in(q, v));
    }
    if dq == 0 {
        return gcd_multi(&content_in(p, v), q);
    }
    let cp = content_in(p, v);
    let cq = content_in(q, v);
    let pp = p.div_exact(&cp).expect("content divides");
    let pq = q.div_exact(&cq).expect("content divides");
    let c = gcd_multi(&cp, &cq);
    if coprime_by_image(&pp, &pq, v) {
        return c;
    }
    let g = primitive_prs_gcd(&pp, &pq, v);
    let g = g.div_exact(&content_in(&g, v)).expect("content divides");
    &g * &c
}

const HEURISTIC_ATTEMPTS: usize = 6;

fn max_norm(p: &MultiPoly) -> BigInt {
    p.terms().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}

/// `p` with variable `x` set to the integer `xi`.
fn eval_var(p: &MultiPoly, x: usize, xi: &BigInt) -> MultiPoly {
    let n = p.nvars();
    MultiPoly::from_terms(
        n,
        p.terms().map(|(m, c)| {
            let mut e = m.0.clone();
            e[x] = 0;
            (e, c * super::Rational::from_integer(xi.pow(m.0[x])))
        }),
    )
}

/// Heuristic gcd by evaluation at a large integer and ξ-adic
/// reconstruction. Inputs have integer coefficients; an answer is only
/// returned once it divides both, which makes it the gcd. `None` asks the
/// caller to use a remainder sequence instead.
fn heuristic_gcd(a: &MultiPoly, b: &MultiPoly, from: usize) -> Option<MultiPoly> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let n = a.nvars();
    // the ξ-adic argument needs the gcd over ℤ, integer content included
    let content = super::Rational::from_integer(a.rational_content().numer().gcd(b.rational_content().numer()));
    let (a, b) = (a.normalized(), b.normalized());
    let Some(x) = (from..n).find(|&i| a.degree_in(i).unwrap_or(0) > 0 || b.degree_in(i).unwrap_or(0) > 0) else {
        return Some(MultiPoly::constant(n, content));
    };
    let mut xi: BigInt = 2 * max_norm(&a).min(max_norm(&b)) + 29;
    for _ in 0..HEURISTIC_ATTEMPTS {
        let (ea, eb) = (eval_var(&a, x, &xi), eval_var(&b, x, &xi));
        if let Some(gamma) = heuristic_gcd(&ea, &eb, x + 1) {
            let g = xi_adic(gamma, x, &xi).normalized();
            if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                return Some(g.scale(&content));
            }
        }
        xi = xi * 73794 / 27011;
    }
    None
}

/// Reads the integer coefficients of `gamma` as base-`xi` digits (symmetric
/// range) of a polynomial in variable `x`.
fn xi_adic(mut gamma: MultiPoly, x: usize, xi: &BigInt) -> MultiPoly {
    let n = gamma.nvars();
    let half = xi / 2;
    let mut out = MultiPoly::zero(n);
    let mut k = 0u32;
    while !gamma.is_zero() {
        let digit = MultiPoly::from_terms(
            n,
            gamma.terms().map(|(m, c)| {
                let mut d = c.numer().mod_floor(xi);
                if d > half {
                    d -= xi;
                }
                (m.0.clone(), super::Rational::from_integer(d))
            }),
        );
        let mut e = vec![0; n];
        e[x] = k;
        out = &out + &digit.shift(&Monomial(e));
        gamma = (&gamma - &digit).scale(&super::Rational::new(BigInt::from(1), xi.clone()));
        k += 1;
    }
    out
}

/// Image of `p` in `F_m[v]` after substituting `point` for the other
/// variables. `p` must have integer coefficients.
fn image_mod(p: &MultiPoly, v: usize, point: &[BigInt], m: &BigInt) -> modp::ModPoly {
    let mut out = vec![BigInt::zero(); p.degree_in(v).unwrap_or(0) as usize + 1];
    for (mono, c) in p.terms() {
        let mut t = c.numer().clone();
        for (i, &k) in mono.0.iter().enumerate() {
            if i != v && k > 0 {
                t = t * point[i].modpow(&BigInt::from(k), m) % m;
            }
        }
        let d = mono.0[v] as usize;
        out[d] = (&out[d] + t) % m;
    }
    modp::reduce(&out, m)
}

/// Sufficient test for coprime primitive parts: a specialization keeping
/// both degrees in `v` whose gcd is constant. A common factor of positive
/// degree would survive such a specialization, since its leading
/// coefficient divides those of `p` and `q`.
fn coprime_by_image(p: &MultiPoly, q: &MultiPoly, v: usize) -> bool {
    let (p, q) = (p.normalized(), q.normalized());
    let (dp, dq) = (p.degree_in(v).unwrap_or(0) as usize, q.degree_in(v).unwrap_or(0) as usize);
    let m = BigInt::from(2_147_483_647u32);
    for attempt in 0..3u32 {
        let point: Vec<BigInt> = (0..p.nvars()).map(|i| BigInt::from(3 + 17 * attempt + 5 * i as u32)).collect();
        let (ip, iq) = (image_mod(&p, v, &point, &m), image_mod(&q, v, &point, &m));
        if modp::deg(&ip) != Some(dp) || modp::deg(&iq) != Some(dq) {
            continue;
        }
        return modp::gcd(&ip, &iq, &m).len() == 1;
    }
    false
}

/// gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content_in(p: &MultiPoly, v: usize) -> MultiPoly {
    let coeffs = p.coefficients_in(v);
    gcd_many(p.nvars(), coeffs.values())
}

fn lead_in(p: &MultiPoly, v: usize) -> (u32, MultiPoly) {
    let coeffs = p.coefficients_in(v);
    let (&d, c) = coeffs.iter().next_back().expect("nonzero");
    (d, c.clone())
}

fn var_power(n: usize, v: usize, k: u32) -> Monomial {
    let mut e = vec![0; n];
    e[v] = k;
    Monomial(e)
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn prem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let n = a.nvars();
    let (db, lb) = lead_in(b, v);
    let (da, _) = lead_in(a, v);
    let mut r = a.clone();
    let mut steps = 0u32;
    while !r.is_zero() {
        let (dr, lr) = lead_in(&r, v);
        if dr < db {
            break;
        }
        let t = (&lr * b).shift(&var_power(n, v, dr - db));
        r = &(&lb * &r) - &t;
        steps += 1;
    }
    let total = da + 1 - db;
    if steps < total {
        r = &r * &lb.pow(total - steps);
    }
    r
}

/// Primitive remainder sequence: each pseudo-remainder is divided by its
/// content in `v`, which keeps coefficients as small as possible.
fn primitive_prs_gcd(p: &MultiPoly, q: &MultiPoly, v: usize) -> MultiPoly {
    let n = p.nvars();
    let (mut a, mut b) = if p.degree_in(v) >= q.degree_in(v) { (p.clone(), q.clone()) } else { (q.clone(), p.clone()) };
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            return b;
        }
        if r.degree_in(v).unwrap_or(0) == 0 {
            return MultiPoly::one(n);
        }
        a = b;
        b = r.div_exact(&content_in(&r, v)).expect("content divides").normalized();
    }
}
