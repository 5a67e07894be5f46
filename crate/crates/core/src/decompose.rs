//! Recovering `F` from `H = q·c·(P∘F)` for systems whose orders are
//! determined by monomial components.
//!
//! Every irreducible factor `π` of the monomial components contributes an
//! order vector `o(π)` with `E·o(π) = e(π)`, where row `j` of `E` holds the
//! exponents of the `j`-th monomial. The entries of `F` are then
//! `f_i = t_i · Π π^{o_i(π)}` and the constants `t_i` solve a multiplicative
//! system.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{rank, saturated_kernel_basis, solve_integer_linear, IntMat, IntVec};
use crate::multiplicative::{monomial_value, solve_multiplicative};
use crate::param::{compose, ParamSystem, ParamTuple, ToricModel};
use crate::poly::{factor_univariate, format_rational, gcd_many, render, MultiPoly, Rational, VarFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    /// The common factor `q` of the input components.
    pub content: MultiPoly,
    /// `c` with `H = c·(P∘F)`; one when absorbed into `F`.
    pub scalar: Rational,
    pub f: ParamTuple,
    /// Whether a scalar other than one was folded into `F`.
    pub absorbed: bool,
    /// Which group `F` is unique modulo.
    pub normalization: String,
}

impl DecompositionResult {
    /// `H = h_raw / q`.
    pub fn reduced(&self, h_raw: &[MultiPoly]) -> Vec<MultiPoly> {
        h_raw.iter().map(|h| h.div_exact(&self.content).expect("content divides")).collect()
    }
}

/// Irreducible factors with multiplicities, up to a constant.
type Factors = Vec<(MultiPoly, u32)>;

fn split_monomial(h: &MultiPoly) -> (Factors, MultiPoly) {
    let nvars = h.nvars();
    let mono = h.monomial_content();
    let rest = h.unshift(&mono);
    let out = mono.0.iter().enumerate().filter(|(_, &k)| k > 0).map(|(v, &k)| (MultiPoly::var(nvars, v), k)).collect();
    (out, rest)
}

fn factor_component(h: &MultiPoly, j: usize) -> Result<Factors> {
    let (mut out, rest) = split_monomial(h);
    if rest.support_vars().len() > 1 {
        return Err(Error::MultiParameterUnsupported(j));
    }
    out.extend(factor_univariate(&rest)?.factors);
    Ok(out)
}

/// Monomial factors are split off first, so hints only need the others.
fn factor_by_hints(h: &MultiPoly, hints: &[MultiPoly], j: usize) -> Result<Factors> {
    let (mut out, mut rest) = split_monomial(h);
    for p in hints {
        let mut k = 0;
        while let Some(q) = rest.div_exact(p) {
            rest = q;
            k += 1;
        }
        if k > 0 {
            out.push((p.clone(), k));
        }
    }
    if !rest.is_constant() {
        return Err(Error::IncompleteHints(j));
    }
    Ok(out)
}

fn normalized_hints(hints: &[MultiPoly], nvars: usize) -> Result<Vec<MultiPoly>> {
    let mut out: Vec<MultiPoly> = Vec::new();
    for h in hints {
        let h = h.with_nvars(nvars.max(h.nvars()))?;
        if h.nvars() != nvars {
            return Err(Error::VariableCountMismatch(nvars, h.nvars()));
        }
        if h.is_constant() {
            return Err(Error::Input("factor hints must be nonconstant".into()));
        }
        let h = h.normalized();
        if !out.contains(&h) {
            out.push(h);
        }
    }
    Ok(out)
}

/// The monomial components of a system: `(index, coefficient, exponents)`.
fn monomial_rows(p_sys: &ParamSystem) -> Result<Vec<(usize, Rational, IntVec)>> {
    let model = p_sys.model();
    let mut rows = Vec::new();
    for (j, c) in p_sys.components().iter().enumerate() {
        if let Some((m, a)) = c.as_monomial() {
            rows.push((j, a.clone(), model.delta_monomial(m)?));
        }
    }
    let all: Vec<IntVec> = p_sys
        .components()
        .iter()
        .flat_map(|c| c.coefficients().keys())
        .map(|m| model.delta_monomial(m))
        .collect::<Result<_>>()?;
    let r = model.nvars();
    let full = rank(&IntMat::from_rows(all.len(), r, &all));
    let exps: Vec<IntVec> = rows.iter().map(|(_, _, e)| e.clone()).collect();
    if rows.is_empty() || rank(&IntMat::from_rows(exps.len(), r, &exps)) < full {
        return Err(Error::NotMonomialSystem);
    }
    Ok(rows)
}

/// All nonnegative `o` with `E·o = e`, where `E` has nonnegative entries
/// and every column has a positive entry.
fn nonnegative_solutions(e_mat: &[Vec<u64>], rhs: &[u64]) -> Vec<Vec<u64>> {
    fn go(col: usize, e_mat: &[Vec<u64>], residual: &mut [u64], o: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let cols = e_mat.first().map_or(0, Vec::len);
        if col == cols {
            if residual.iter().all(|&x| x == 0) {
                out.push(o.clone());
            }
            return;
        }
        let mut k = 0;
        loop {
            o.push(k);
            go(col + 1, e_mat, residual, o, out);
            o.pop();
            // raise o[col] by one if the residual allows it
            if e_mat.iter().zip(residual.iter()).any(|(row, &r)| row[col] > r) {
                break;
            }
            for (row, r) in e_mat.iter().zip(residual.iter_mut()) {
                *r -= row[col];
            }
            k += 1;
        }
        for (row, r) in e_mat.iter().zip(residual.iter_mut()) {
            *r += row[col] * k;
        }
    }
    let mut out = Vec::new();
    let mut residual = rhs.to_vec();
    go(0, e_mat, &mut residual, &mut Vec::new(), &mut out);
    out
}

fn normalization_note(model: &ToricModel, scalar: &Rational) -> String {
    let name = if model.is_resolved() { "G_{Δ,Σ}" } else { "G_Δ" };
    let note = format!("F is unique up to {name} = {}", model.group_delta().render());
    if scalar.is_one() {
        note
    } else {
        format!("{note}; c·F is unique up to G = {}", model.group().render())
    }
}

/// Recovers `F` from `h_raw` in one parameter (polynomials with a single
/// variable after removing monomial content).
pub fn decompose_curve(h_raw: &[MultiPoly], p_sys: &ParamSystem) -> Result<DecompositionResult> {
    decompose_inner(h_raw, p_sys, None)
}

/// Like [`decompose_curve`], with the irreducible factors of the
/// components supplied by the caller.
pub fn decompose_with_hints(
    h_raw: &[MultiPoly],
    p_sys: &ParamSystem,
    hints: &[MultiPoly],
) -> Result<DecompositionResult> {
    decompose_inner(h_raw, p_sys, Some(hints))
}

fn decompose_inner(
    h_raw: &[MultiPoly],
    p_sys: &ParamSystem,
    hints: Option<&[MultiPoly]>,
) -> Result<DecompositionResult> {
    if h_raw.len() != p_sys.len() {
        return Err(Error::LengthMismatch { expected: p_sys.len(), got: h_raw.len() });
    }
    let nvars = h_raw.iter().map(MultiPoly::nvars).max().unwrap_or(0);
    let h_raw: Vec<MultiPoly> = h_raw.iter().map(|h| h.with_nvars(nvars)).collect::<Result<_>>()?;
    if h_raw.iter().all(MultiPoly::is_zero) {
        return Err(Error::ZeroTarget);
    }
    let hints = hints.map(|h| normalized_hints(h, nvars)).transpose()?;
    let model = p_sys.model();
    let r = model.nvars();
    let rows = monomial_rows(p_sys)?;

    // content
    let q = gcd_many(nvars, &h_raw);
    let h: Vec<MultiPoly> = h_raw.iter().map(|p| p.div_exact(&q).expect("gcd divides")).collect();

    // entries forced to vanish
    let mut live = vec![false; r];
    for (j, _, e) in &rows {
        if !h[*j].is_zero() {
            for (i, x) in e.iter().enumerate() {
                live[i] |= !x.is_zero();
            }
        }
    }
    for (j, _, e) in &rows {
        if h[*j].is_zero() && e.iter().zip(&live).all(|(x, &l)| x.is_zero() || l) {
            return Err(Error::NoPreimage(format!("component {} vanishes but no entry of F can", j + 1)));
        }
    }
    let cols: Vec<usize> = (0..r).filter(|&i| live[i]).collect();
    let active: Vec<&(usize, Rational, IntVec)> = rows.iter().filter(|(j, _, _)| !h[*j].is_zero()).collect();

    // factor the nonzero monomial components
    let mut primes: Vec<MultiPoly> = Vec::new();
    let mut mult: Vec<Vec<u64>> = Vec::new();
    for (k, (j, _, _)) in active.iter().enumerate() {
        let fac = match &hints {
            Some(hs) => factor_by_hints(&h[*j], hs, *j + 1)?,
            None => factor_component(&h[*j], *j + 1)?,
        };
        for (p, m) in fac {
            let p = p.monic();
            let idx = match primes.iter().position(|x| *x == p) {
                Some(i) => i,
                None => {
                    primes.push(p);
                    mult.push(vec![0; active.len()]);
                    primes.len() - 1
                }
            };
            mult[idx][k] += u64::from(m);
        }
    }

    // orders of each factor in the entries of F
    let e_small: Vec<Vec<u64>> = active
        .iter()
        .map(|(_, _, e)| cols.iter().map(|&i| u64::try_from(&e[i]).expect("nonnegative exponent")).collect())
        .collect();
    let e_int: Vec<IntVec> =
        active.iter().map(|(_, _, e)| IntVec::new(cols.iter().map(|&i| e[i].clone()).collect())).collect();
    let e_mat = IntMat::from_rows(active.len(), cols.len(), &e_int);
    let mut f0 = vec![MultiPoly::one(nvars); r];
    for (p, e) in primes.iter().zip(&mult) {
        let rhs = IntVec::new(e.iter().map(|&x| BigInt::from(x)).collect());
        let shown = render(p, VarFamily::Param);
        if solve_integer_linear(&e_mat, &rhs)?.is_none() {
            return Err(Error::NoPreimage(format!("orders of the factor {shown} have no integer solution")));
        }
        let o = nonnegative_solutions(&e_small, e)
            .into_iter()
            .find(|o| {
                let support: Vec<usize> = o.iter().zip(&cols).filter(|(k, _)| **k > 0).map(|(_, &i)| i).collect();
                model.fan().in_common_cone(&support)
            })
            .ok_or_else(|| Error::NoPreimage(format!("orders of the factor {shown} are not Σ-irreducible")))?;
        for (k, &i) in o.iter().zip(&cols) {
            f0[i] = &f0[i] * &p.pow(u32::try_from(*k).expect("small order"));
        }
    }

    // constants: Π t_i^{E_ji} · c = H_j / (a_j Π f0_i^{E_ji})
    let mut ratios = Vec::new();
    for (j, a, e) in &active {
        let mut base = MultiPoly::constant(nvars, a.clone());
        for (fi, k) in f0.iter().zip(e.iter()) {
            base = &base * &fi.pow(u32::try_from(k).expect("small exponent"));
        }
        match h[*j].div_exact(&base) {
            Some(k) if k.is_constant() => ratios.push(k.constant_value()),
            _ => {
                return Err(Error::NoPreimage(format!(
                    "component {} is not a constant multiple of its monomial",
                    j + 1
                )))
            }
        }
    }
    let with_c: Vec<IntVec> =
        e_int.iter().map(|row| IntVec::new(row.iter().cloned().chain([BigInt::one()]).collect())).collect();
    let a_c = IntMat::from_rows(with_c.len(), cols.len() + 1, &with_c);
    let t = match solve_multiplicative(&e_mat, &ratios)? {
        Some(t) => t.into_iter().chain([Rational::one()]).collect::<Vec<_>>(),
        None => match solve_multiplicative(&a_c, &ratios)? {
            Some(t) => t,
            None => return Err(constant_failure(&a_c, &ratios)),
        },
    };
    let mut f = f0;
    for (x, &i) in t.iter().zip(&cols) {
        f[i] = f[i].scale(x);
    }
    let c = t.last().expect("scalar column").clone();

    // entries not seen by any nonzero monomial: the fewest zeros that kill
    // the vanishing components, the rest set to one
    let free: Vec<usize> = (0..r).filter(|&i| !live[i]).collect();
    let zero_rows: Vec<&IntVec> = rows.iter().filter(|(j, _, _)| h[*j].is_zero()).map(|(_, _, e)| e).collect();
    let mut last = None;
    for z in zero_sets(&free, &zero_rows) {
        let mut fz = f.clone();
        for &i in &z {
            fz[i] = MultiPoly::zero(nvars);
        }
        match finish(p_sys, fz, c.clone(), &h) {
            Ok((f, scalar, absorbed)) => {
                return Ok(DecompositionResult {
                    content: q,
                    normalization: normalization_note(model, &scalar),
                    scalar,
                    f,
                    absorbed,
                })
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("the full free set is a candidate"))
}

/// Consistent constants (every multiplicative relation among the rows
/// holds) that still have no rational solution need roots.
fn constant_failure(a: &IntMat, ratios: &[Rational]) -> Error {
    let shown: Vec<String> = ratios.iter().map(format_rational).collect();
    let relations = saturated_kernel_basis(&a.transpose());
    if relations.columns().iter().all(|y| monomial_value(ratios, y).is_one()) {
        Error::NeedsAlgebraicScalars(format!("constants {} need roots", shown.join(", ")))
    } else {
        Error::NoPreimage(format!("constants {} are inconsistent with the system", shown.join(", ")))
    }
}

/// Subsets of `free` meeting the support of every row, smallest first.
fn zero_sets(free: &[usize], rows: &[&IntVec]) -> Vec<Vec<usize>> {
    let hits = |z: &[usize]| rows.iter().all(|e| z.iter().any(|&i| !e[i].is_zero()));
    if free.len() > 16 {
        return vec![free.to_vec()];
    }
    let mut out: Vec<Vec<usize>> = (0u32..1 << free.len())
        .map(|mask| free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &i)| i).collect::<Vec<_>>())
        .filter(|z| hits(z))
        .collect();
    out.sort_by_key(Vec::len);
    out
}

/// Absorbs `c` when possible and checks `H = c·(P∘F)` with `F` Σ-irreducible.
fn finish(
    p_sys: &ParamSystem,
    f: Vec<MultiPoly>,
    c: Rational,
    h: &[MultiPoly],
) -> Result<(ParamTuple, Rational, bool)> {
    let model = p_sys.model();
    let (f, c, absorbed) = if c.is_one() {
        (f, c, false)
    } else {
        match model.group().solve_character(&model.mu_delta(), &c) {
            Ok(g) => (f.iter().zip(&g.ambient).map(|(p, m)| p.scale(m)).collect(), Rational::one(), true),
            Err(_) => (f, c, false),
        }
    };
    let f = ParamTuple::new(f)?;
    verify(p_sys, &f, &c, h)?;
    Ok((f, c, absorbed))
}

fn verify(p_sys: &ParamSystem, f: &ParamTuple, c: &Rational, h: &[MultiPoly]) -> Result<()> {
    let comp = compose(p_sys, f)?;
    if !comp.sigma_irreducible {
        return Err(Error::NoPreimage("the recovered tuple is not Σ-irreducible".into()));
    }
    for (j, (raw, hj)) in comp.raw.iter().zip(h).enumerate() {
        if &raw.scale(c) != hj {
            return Err(Error::NoPreimage(format!("component {} is not of the form c·P∘F", j + 1)));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonnegative_enumeration() {
        let e = vec![vec![1, 1], vec![0, 1]];
        assert_eq!(nonnegative_solutions(&e, &[3, 1]), vec![vec![2, 1]]);
        let e = vec![vec![1, 1]];
        assert_eq!(nonnegative_solutions(&e, &[2]), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
    }

    #[test]
    fn hint_division() {
        let u = MultiPoly::var(2, 0);
        let v = MultiPoly::var(2, 1);
        let w = &u + &v;
        let h = &(&(&u * &u) * &v) * &w;
        let got = factor_by_hints(&h, std::slice::from_ref(&w), 1).unwrap();
        assert_eq!(got, vec![(u.clone(), 2), (v.clone(), 1), (w, 1)]);
        assert_eq!(factor_by_hints(&h, &[], 1), Err(Error::IncompleteHints(1)));
    }
}
