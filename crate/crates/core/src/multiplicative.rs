//! Systems of monomial equations `Π_j t_j^{A_ij} = c_i` over ℚ*.
//!
//! The positive parts are reduced to integer linear algebra over a base of
//! pairwise coprime integers none of which is a perfect power, so that the
//! base is multiplicatively independent. Signs are solved over GF(2).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{solve_integer_linear, IntMat, IntVec};
use crate::poly::Rational;

/// `x^e` for a nonzero rational and any integer exponent.
pub fn rational_pow(x: &Rational, e: &BigInt) -> Rational {
    let k = e.abs().to_usize().expect("exponent fits in usize");
    let p = num_traits::pow(x.clone(), k);
    if e.is_negative() {
        p.recip()
    } else {
        p
    }
}

/// `Π x_j^{e_j}`.
pub fn monomial_value(x: &[Rational], e: &IntVec) -> Rational {
    x.iter().zip(e.iter()).fold(Rational::one(), |acc, (xi, ei)| acc * rational_pow(xi, ei))
}

fn coprime_base(values: &[BigInt]) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = values.iter().filter(|v| **v > BigInt::one()).cloned().collect();
    base.sort();
    base.dedup();
    'again: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if !g.is_one() {
                    let (a, b) = (&base[i] / &g, &base[j] / &g);
                    base.remove(j);
                    base.remove(i);
                    base.extend([g, a, b].into_iter().filter(|x| !x.is_one()));
                    base.sort();
                    base.dedup();
                    continue 'again;
                }
            }
        }
        break;
    }
    base.into_iter().map(minimal_root).collect::<Vec<_>>()
}

/// The smallest `r` with `n = r^k` for some `k ≥ 1`.
fn minimal_root(n: BigInt) -> BigInt {
    let mut n = n;
    'again: loop {
        for k in (2..=n.bits() as u32).rev() {
            let r = n.nth_root(k);
            if num_traits::pow(r.clone(), k as usize) == n {
                n = r;
                continue 'again;
            }
        }
        return n;
    }
}

fn valuation(n: &BigInt, b: &BigInt) -> (BigInt, i64) {
    let mut n = n.clone();
    let mut k = 0;
    while n.is_multiple_of(b) {
        n /= b;
        k += 1;
    }
    (n, k)
}

/// Exponents of `|x|` over `base`; `None` if some factor falls outside.
fn exponents(x: &Rational, base: &[BigInt]) -> Option<Vec<i64>> {
    let mut num = x.numer().abs();
    let mut den = x.denom().clone();
    let mut out = Vec::with_capacity(base.len());
    for b in base {
        let (n2, a) = valuation(&num, b);
        let (d2, c) = valuation(&den, b);
        num = n2;
        den = d2;
        out.push(a - c);
    }
    (num.is_one() && den.is_one()).then_some(out)
}

/// Solves `A·x = b` over GF(2).
fn solve_gf2(a: &[Vec<bool>], b: &[bool], cols: usize) -> Option<Vec<bool>> {
    let mut rows: Vec<(Vec<bool>, bool)> = a.iter().cloned().zip(b.iter().copied()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0[c]) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i].0[c] {
                let (src, rhs) = rows[r].clone();
                for (x, y) in rows[i].0.iter_mut().zip(&src) {
                    *x ^= *y;
                }
                rows[i].1 ^= rhs;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|(_, rhs)| *rhs) {
        return None;
    }
    let mut x = vec![false; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i].1;
    }
    Some(x)
}

/// One rational solution `t` of `Π_j t_j^{a_ij} = c_i` for every row `i`,
/// or `None` when no rational solution exists.
pub fn solve_multiplicative(a: &IntMat, c: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if c.len() != a.rows() {
        return Err(Error::DimensionMismatch { expected: a.rows(), got: c.len() });
    }
    if c.iter().any(Zero::is_zero) {
        return Err(Error::ZeroScalar);
    }
    let k = a.cols();
    let mut raw = Vec::new();
    for x in c {
        raw.push(x.numer().abs());
        raw.push(x.denom().clone());
    }
    let base = coprime_base(&raw);
    let ex: Vec<Vec<i64>> = c.iter().map(|x| exponents(x, &base).expect("base covers inputs")).collect();
    let mut t = vec![Rational::one(); k];
    for (bi, b) in base.iter().enumerate() {
        let rhs = IntVec::new(ex.iter().map(|e| BigInt::from(e[bi])).collect());
        let Some(sol) = solve_integer_linear(a, &rhs)? else { return Ok(None) };
        let br = Rational::from_integer(b.clone());
        for (tj, xj) in t.iter_mut().zip(sol.particular.iter()) {
            *tj *= rational_pow(&br, xj);
        }
    }
    let parity: Vec<Vec<bool>> = (0..a.rows()).map(|i| (0..k).map(|j| a.get(i, j).is_odd()).collect()).collect();
    let signs: Vec<bool> = c.iter().map(Signed::is_negative).collect();
    let Some(s) = solve_gf2(&parity, &signs, k) else { return Ok(None) };
    for (tj, neg) in t.iter_mut().zip(s) {
        if neg {
            *tj = -tj.clone();
        }
    }
    Ok(Some(t))
}
