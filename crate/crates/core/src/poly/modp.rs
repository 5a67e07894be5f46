//! Dense univariate polynomials over `ℤ/mℤ`, coefficients low to high.
//!
//! Most routines only need the leading coefficients involved to be units;
//! gcds and factoring assume `m` is prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;

pub(crate) type ModPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: ModPoly) -> ModPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn reduce(a: &[BigInt], m: &BigInt) -> ModPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

/// Representatives in `(-m/2, m/2]`.
pub(crate) fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    a.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

pub(crate) fn deg(a: &[BigInt]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

pub(crate) fn inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not a unit modulo m");
    e.x.mod_floor(m)
}

pub(crate) fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(&(0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect::<Vec<_>>(), m)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    reduce(&(0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect::<Vec<_>>(), m)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

pub(crate) fn scale(a: &[BigInt], c: &BigInt, m: &BigInt) -> ModPoly {
    reduce(&a.iter().map(|x| x * c).collect::<Vec<_>>(), m)
}

pub(crate) fn monic(a: &[BigInt], m: &BigInt) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(a, &inverse(l, m), m),
    }
}

/// Division with remainder; the leading coefficient of `b` must be a unit.
pub(crate) fn divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ModPoly, ModPoly) {
    let db = deg(b).expect("division by zero polynomial");
    let inv = inverse(&b[db], m);
    let mut r = reduce(a, m);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = (&r[dr] * &inv).mod_floor(m);
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = (&r[i + shift] - &c * bc).mod_floor(m);
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ModPoly {
    divrem(a, b, m).1
}

/// Monic gcd over a prime field.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt], p: &BigInt) -> ModPoly {
    let mut a = reduce(a, p);
    let mut b = reduce(b, p);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic, over a prime field.
pub(crate) fn ext_gcd(a: &[BigInt], b: &[BigInt], p: &BigInt) -> (ModPoly, ModPoly, ModPoly) {
    let (mut r0, mut r1) = (reduce(a, p), reduce(b, p));
    let (mut s0, mut s1) = (vec![BigInt::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![BigInt::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inverse(r0.last().expect("gcd of zero polynomials"), p);
    (scale(&r0, &inv, p), scale(&s0, &inv, p), scale(&t0, &inv, p))
}

pub(crate) fn derivative(a: &[BigInt], m: &BigInt) -> ModPoly {
    reduce(&a.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect::<Vec<_>>(), m)
}

/// `base^e mod (f, p)`.
pub(crate) fn powmod(base: &[BigInt], e: &BigInt, f: &[BigInt], p: &BigInt) -> ModPoly {
    let mut result = vec![BigInt::one()];
    let b = rem(base, f, p);
    for i in (0..e.bits()).rev() {
        result = rem(&mul(&result, &result, p), f, p);
        if e.bit(i) {
            result = rem(&mul(&result, &b, p), f, p);
        }
    }
    rem(&result, f, p)
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(f: &[BigInt], p: &BigInt) -> Vec<(ModPoly, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![BigInt::zero(), BigInt::one()];
    let mut h = x.clone();
    let mut d = 0;
    while deg(&f).unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = powmod(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, d));
        }
    }
    if deg(&f).unwrap_or(0) > 0 {
        let n = deg(&f).unwrap();
        out.push((f, n));
    }
    out
}

/// Splits a monic squarefree product of irreducibles of degree `d` over an
/// odd prime field (Cantor–Zassenhaus).
pub(crate) fn equal_degree<R: Rng>(f: &[BigInt], d: usize, p: &BigInt, rng: &mut R) -> Vec<ModPoly> {
    let n = deg(f).unwrap();
    if n == d {
        return vec![f.to_vec()];
    }
    let e: BigInt = (num_traits::pow(p.clone(), d) - 1u32) / 2u32;
    loop {
        let a: ModPoly = trim((0..n).map(|_| rand_below(p, rng)).collect());
        if deg(&a).unwrap_or(0) == 0 {
            continue;
        }
        let mut g = gcd(&a, f, p);
        if g.len() == 1 {
            let b = sub(&powmod(&a, &e, f, p), &[BigInt::one()], p);
            g = gcd(&b, f, p);
        }
        if g.len() > 1 && g.len() <= n {
            let h = monic(&divrem(f, &g, p).0, p);
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&h, d, p, rng));
            return out;
        }
    }
}

fn rand_below<R: Rng>(p: &BigInt, rng: &mut R) -> BigInt {
    let small: u64 = p.try_into().expect("factoring primes are small");
    BigInt::from(rng.gen_range(0..small))
}

/// One quadratic Hensel step: from `f ≡ g*h`, `s*g + t*h ≡ 1 (mod m)` with
/// `h` monic, returns the corresponding data modulo `m^2`.
pub(crate) fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ModPoly, ModPoly, ModPoly, ModPoly) {
    let m2 = m * m;
    let e = sub(f, &mul(g, h, &m2), &m2);
    let (q, r) = divrem(&mul(s, &e, &m2), h, &m2);
    let g2 = add(&add(g, &mul(t, &e, &m2), &m2), &mul(&q, g, &m2), &m2);
    let h2 = add(h, &r, &m2);
    let b = sub(&add(&mul(s, &g2, &m2), &mul(t, &h2, &m2), &m2), &[BigInt::one()], &m2);
    let (c, d) = divrem(&mul(s, &b, &m2), &h2, &m2);
    let s2 = sub(s, &d, &m2);
    let t2 = sub(&sub(t, &mul(t, &b, &m2), &m2), &mul(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn v(xs: &[i64]) -> ModPoly {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn division_identity() {
        let p = BigInt::from(7);
        let a = v(&[3, 0, 5, 1, 2]);
        let b = v(&[1, 4, 3]);
        let (q, r) = divrem(&a, &b, &p);
        assert_eq!(add(&mul(&q, &b, &p), &r, &p), reduce(&a, &p));
        assert!(r.len() < b.len());
    }

    #[test]
    fn bezout() {
        let p = BigInt::from(11);
        let a = v(&[1, 0, 1]);
        let b = v(&[2, 1]);
        let (g, s, t) = ext_gcd(&a, &b, &p);
        assert_eq!(g, v(&[1]));
        assert_eq!(add(&mul(&s, &a, &p), &mul(&t, &b, &p), &p), g);
    }

    #[test]
    fn factor_mod_five() {
        // x^4 - 1 = (x-1)(x+1)(x-2)(x+2) mod 5
        let p = BigInt::from(5);
        let f = reduce(&v(&[-1, 0, 0, 0, 1]), &p);
        let dd = distinct_degree(&f, &p);
        assert_eq!(dd.len(), 1);
        assert_eq!(dd[0].1, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let parts = equal_degree(&dd[0].0, 1, &p, &mut rng);
        assert_eq!(parts.len(), 4);
        let prod = parts.iter().fold(vec![BigInt::one()], |acc, q| mul(&acc, q, &p));
        assert_eq!(prod, f);
    }

    #[test]
    fn lifting() {
        // x^2 - 2 has roots 3 and 4 mod 7; lift to 7^2.
        let p = BigInt::from(7);
        let f = v(&[-2, 0, 1]);
        let g = v(&[-3, 1]);
        let h = v(&[-4, 1]);
        let (_, s, t) = ext_gcd(&g, &h, &p);
        let (g2, h2, _, _) = hensel_step(&f, &g, &h, &s, &t, &p);
        let m2 = BigInt::from(49);
        assert_eq!(mul(&g2, &h2, &m2), reduce(&f, &m2));
    }
}
