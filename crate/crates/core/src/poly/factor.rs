//! Factorization of univariate polynomials over ℚ: squarefree
//! decomposition, factoring modulo a small prime, Hensel lifting and
//! recombination of lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, ModPoly};
use super::{MultiPoly, Rational};
use crate::error::{Error, Result};

/// `unit * Π factor^multiplicity`, every factor monic and irreducible
/// over ℚ, sorted by degree and then coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(MultiPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self, nvars: usize) -> MultiPoly {
        let mut p = MultiPoly::constant(nvars, self.unit.clone());
        for (f, k) in &self.factors {
            p = &p * &f.pow(*k);
        }
        p
    }
}

type QPoly = Vec<Rational>;

fn qtrim(mut a: QPoly) -> QPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn qmonic(a: &[Rational]) -> QPoly {
    let l = a.last().expect("nonzero").clone();
    a.iter().map(|c| c / &l).collect()
}

fn qsub(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    let z = Rational::zero();
    qtrim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn qderiv(a: &[Rational]) -> QPoly {
    qtrim(a.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect())
}

fn qdivrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db {
        let c = r.last().unwrap() / &b[db];
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
        r = qtrim(r);
    }
    (qtrim(q), r)
}

fn qgcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let (mut a, mut b) = (qtrim(a.to_vec()), qtrim(b.to_vec()));
    while !b.is_empty() {
        let r = qdivrem(&a, &b).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        qmonic(&a)
    }
}

/// Yun's squarefree decomposition of a monic polynomial.
fn squarefree(f: &[Rational]) -> Vec<(QPoly, u32)> {
    let mut out = Vec::new();
    let d = qderiv(f);
    if d.is_empty() {
        return out;
    }
    let c = qgcd(f, &d);
    let mut w = qdivrem(f, &c).0;
    let mut y = qdivrem(&d, &c).0;
    let mut z = qsub(&y, &qderiv(&w));
    let mut i = 1;
    while w.len() > 1 {
        let g = qgcd(&w, &z);
        w = qdivrem(&w, &g).0;
        y = qdivrem(&z, &g).0;
        z = qsub(&y, &qderiv(&w));
        if g.len() > 1 {
            out.push((qmonic(&g), i));
        }
        i += 1;
    }
    out
}

/// Primitive integer multiple with positive leading coefficient.
fn to_primitive(a: &[Rational]) -> Vec<BigInt> {
    let den = a.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = a.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.iter().map(|c| c / &g * &sign).collect()
}

fn int_to_q(a: &[BigInt]) -> QPoly {
    a.iter().map(|c| Rational::from_integer(c.clone())).collect()
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible factors over ℤ of a primitive squarefree polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7061_7261_6d73);
    // Among a few good primes keep the one with the fewest modular factors.
    let mut best: Option<(BigInt, Vec<ModPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        let p = BigInt::from(p);
        if (&lc % &p).is_zero() {
            continue;
        }
        let fp = modp::reduce(f, &p);
        if modp::gcd(&fp, &modp::derivative(&fp, &p), &p).len() != 1 {
            continue;
        }
        let fm = modp::monic(&fp, &p);
        let mut factors = Vec::new();
        for (g, d) in modp::distinct_degree(&fm, &p) {
            factors.extend(modp::equal_degree(&g, d, &p, &mut rng));
        }
        if factors.len() == 1 {
            return vec![f.to_vec()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (p, mut factors) = best.expect("a good prime exists");
    factors.sort();

    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * maxc;
    let mut m = p.clone();
    while m <= &bound * 2u32 {
        m = &m * &m;
    }
    let lifted = lift_all(f, &factors, &p, &m);
    recombine(f, lifted, &m)
}

/// Lifts `f ≡ lc(f) * Π factors (mod p)` to monic factors modulo `m`, a
/// power of `p` reached by repeated squaring.
fn lift_all(f: &[BigInt], factors: &[ModPoly], p: &BigInt, m: &BigInt) -> Vec<ModPoly> {
    let lc = f.last().unwrap().clone();
    if factors.len() == 1 {
        let inv = modp::inverse(&lc, m);
        return vec![modp::scale(f, &inv, m)];
    }
    let (a, b) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[ModPoly]| fs.iter().fold(vec![BigInt::one()], |acc, q| modp::mul(&acc, q, p));
    let mut g = modp::scale(&prod(a), &lc, p);
    let mut h = prod(b);
    let (_, mut s, mut t) = modp::ext_gcd(&g, &h, p);
    let mut cur = p.clone();
    while &cur < m {
        (g, h, s, t) = modp::hensel_step(f, &g, &h, &s, &t, &cur);
        cur = &cur * &cur;
    }
    let mut out = lift_all(&g, a, p, m);
    out.extend(lift_all(&h, b, p, m));
    out
}

fn exact_quotient(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = qdivrem(&int_to_q(f), &int_to_q(g));
    if !r.is_empty() || !q.iter().all(|c| c.is_integer()) {
        return None;
    }
    Some(q.iter().map(|c| c.to_integer()).collect())
}

fn recombine(f: &[BigInt], mut lifted: Vec<ModPoly>, m: &BigInt) -> Vec<Vec<BigInt>> {
    let mut f = f.to_vec();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= lifted.len() {
        let lc = f.last().unwrap().clone();
        for subset in combinations(lifted.len(), s) {
            let cand = subset.iter().fold(vec![lc.clone()], |acc, &i| modp::mul(&acc, &lifted[i], m));
            let cand = to_primitive(&int_to_q(&modp::symmetric(&cand, m)));
            if let Some(q) = exact_quotient(&f, &cand) {
                out.push(cand);
                f = q;
                let mut k = 0;
                lifted.retain(|_| {
                    k += 1;
                    !subset.contains(&(k - 1))
                });
                continue 'outer;
            }
        }
        s += 1;
    }
    out.push(to_primitive(&int_to_q(&f)));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Factors a polynomial in which at most one variable occurs.
pub fn factor_univariate(p: &MultiPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let support = p.support_vars();
    if support.len() > 1 {
        return Err(Error::NotUnivariate);
    }
    let nvars = p.nvars();
    let Some(&v) = support.first() else {
        return Ok(Factorization { unit: p.constant_value(), factors: Vec::new() });
    };
    let coeffs = p.to_univariate(v).expect("univariate");
    let unit = coeffs.last().unwrap().clone();
    let mut factors: Vec<(MultiPoly, u32)> = Vec::new();
    let low = coeffs.iter().take_while(|c| c.is_zero()).count();
    if low > 0 {
        factors.push((MultiPoly::var(nvars, v), low as u32));
    }
    let rest = qmonic(&coeffs[low..]);
    for (g, k) in squarefree(&rest) {
        for h in zassenhaus(&to_primitive(&g)) {
            let q = qmonic(&int_to_q(&h));
            factors.push((MultiPoly::from_univariate(nvars, v, &q), k));
        }
    }
    factors.sort_by(|a, b| {
        let ka = (a.0.total_degree(), a.0.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>());
        let kb = (b.0.total_degree(), b.0.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>());
        ka.cmp(&kb).then(a.1.cmp(&b.1))
    });
    Ok(Factorization { unit, factors })
}
