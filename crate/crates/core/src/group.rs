//! Diagonalizable subgroups of an algebraic torus `(ℂ*)^r`: the quotient
//! group of the Cox construction, kernels of characters, and rational
//! points of such groups.
//!
//! A subgroup is stored through its relation lattice: integer vectors `w`
//! with `Π μ_i^{w_i} = 1` on the group. A Smith diagonalization of the
//! relations gives the free parametrization and the torsion part.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::{canonical_basis, smith_normal_form, solve_integer_linear, IntMat, IntVec};
use crate::multiplicative::{monomial_value, solve_multiplicative};
use crate::poly::{MultiPoly, Rational};
use crate::polytope::{Fan, LatticePolytope};

/// A cyclic factor: the element `(ζ^{e_1}, …, ζ^{e_r})` for a primitive
/// `order`-th root of unity `ζ`, exponents reduced into `[0, order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGenerator {
    pub exponents: IntVec,
    pub order: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusDescription {
    ambient: usize,
    relations: IntMat,
    exponent_matrix: IntMat,
    torsion: Vec<TorsionGenerator>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacterDomain {
    /// Exponents of the ambient coordinates `μ_1, …, μ_r`.
    Ambient,
    /// Exponents of the free parameters of a subgroup.
    Parameter,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub domain: CharacterDomain,
    pub exponents: IntVec,
}

impl Character {
    pub fn ambient(exponents: IntVec) -> Self {
        Character { domain: CharacterDomain::Ambient, exponents }
    }

    pub fn parameter(exponents: IntVec) -> Self {
        Character { domain: CharacterDomain::Parameter, exponents }
    }
}

/// A rational point of a subgroup, optionally with parameter values
/// reproducing it through the free parametrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub ambient: Vec<Rational>,
    pub params: Option<Vec<Rational>>,
}

impl SubtorusDescription {
    /// The subgroup of `(ℂ*)^ambient` cut out by the relation columns.
    pub fn from_relations(ambient: usize, relations: IntMat) -> Self {
        assert_eq!(relations.rows(), ambient);
        // u · W · v = D, so the characters given by the columns of u⁻¹ scaled
        // by D span the relations; rows of u parametrize the group.
        let snf = smith_normal_form(&relations);
        let s = snf.rank();
        let free: Vec<IntVec> = (s..ambient).map(|i| snf.u.row(i)).collect();
        let exponent_matrix = if free.is_empty() {
            IntMat::zeros(ambient, 0)
        } else {
            canonical_basis(&IntMat::from_columns(ambient, &free))
        };
        let torsion = snf
            .diagonal
            .iter()
            .enumerate()
            .filter(|(_, d)| !d.is_one())
            .map(|(i, d)| TorsionGenerator {
                exponents: IntVec::new(snf.u.row(i).iter().map(|x| x.mod_floor(d)).collect()),
                order: d.clone(),
            })
            .collect();
        SubtorusDescription { ambient, relations, exponent_matrix, torsion }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Number of free parameters.
    pub fn dim(&self) -> usize {
        self.exponent_matrix.cols()
    }

    /// `r × k`; column `j` holds the exponents of parameter `t_j`.
    pub fn exponent_matrix(&self) -> &IntMat {
        &self.exponent_matrix
    }

    pub fn relations(&self) -> &IntMat {
        &self.relations
    }

    pub fn torsion(&self) -> &[TorsionGenerator] {
        &self.torsion
    }

    /// Order of the finite part.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().map(|t| t.order.clone()).product()
    }

    /// Ambient exponent vector of a character.
    pub fn ambient_character(&self, chi: &Character) -> Result<IntVec> {
        match chi.domain {
            CharacterDomain::Ambient => {
                if chi.exponents.len() != self.ambient {
                    return Err(Error::DimensionMismatch { expected: self.ambient, got: chi.exponents.len() });
                }
                Ok(chi.exponents.clone())
            }
            CharacterDomain::Parameter => {
                if chi.exponents.len() != self.dim() {
                    return Err(Error::DimensionMismatch { expected: self.dim(), got: chi.exponents.len() });
                }
                if !self.torsion.is_empty() {
                    return Err(Error::Input(
                        "a parameter character does not determine a character of a group with torsion".into(),
                    ));
                }
                let sol = solve_integer_linear(&self.exponent_matrix.transpose(), &chi.exponents)?
                    .expect("free parametrization of a saturated lattice");
                Ok(sol.particular)
            }
        }
    }

    /// Parameter exponents of a character restricted to the free part.
    pub fn parameter_character(&self, chi: &Character) -> Result<IntVec> {
        match chi.domain {
            CharacterDomain::Parameter => {
                if chi.exponents.len() != self.dim() {
                    return Err(Error::DimensionMismatch { expected: self.dim(), got: chi.exponents.len() });
                }
                Ok(chi.exponents.clone())
            }
            CharacterDomain::Ambient => {
                let w = self.ambient_character(chi)?;
                Ok(self.exponent_matrix.transpose().mul_vec(&w))
            }
        }
    }

    /// Whether the character is identically 1 on the group.
    pub fn is_trivial(&self, chi: &Character) -> Result<bool> {
        let w = self.ambient_character(chi)?;
        if !self.exponent_matrix.transpose().mul_vec(&w).is_zero() {
            return Ok(false);
        }
        Ok(self.torsion.iter().all(|t| t.exponents.dot(&w).is_multiple_of(&t.order)))
    }

    /// Kernel of `chi` on this group.
    pub fn kernel_of_character(&self, chi: &Character) -> Result<SubtorusDescription> {
        let w = self.ambient_character(chi)?;
        let mut cols = self.relations.columns();
        cols.push(w);
        Ok(Self::from_relations(self.ambient, IntMat::from_columns(self.ambient, &cols)))
    }

    /// Membership of a rational point: every relation evaluates to 1.
    pub fn contains(&self, mu: &[Rational]) -> Result<bool> {
        if mu.len() != self.ambient {
            return Err(Error::LengthMismatch { expected: self.ambient, got: mu.len() });
        }
        if mu.iter().any(Zero::is_zero) {
            return Err(Error::ZeroScalar);
        }
        Ok(self.relations.columns().iter().all(|w| monomial_value(mu, w).is_one()))
    }

    /// Ambient coordinates of the point with the given parameter values.
    pub fn element_from_params(&self, t: &[Rational]) -> Result<GroupElement> {
        if t.len() != self.dim() {
            return Err(Error::LengthMismatch { expected: self.dim(), got: t.len() });
        }
        if t.iter().any(Zero::is_zero) {
            return Err(Error::ZeroScalar);
        }
        let ambient = (0..self.ambient).map(|i| monomial_value(t, &self.exponent_matrix.row(i))).collect();
        Ok(GroupElement { ambient, params: Some(t.to_vec()) })
    }

    fn params_of(&self, mu: &[Rational]) -> Option<Vec<Rational>> {
        solve_multiplicative(&self.exponent_matrix, mu).ok().flatten()
    }

    /// A rational point `μ` of the group with `μ^chi = c`.
    pub fn solve_character(&self, chi: &Character, c: &Rational) -> Result<GroupElement> {
        if c.is_zero() {
            return Err(Error::ZeroScalar);
        }
        if self.is_trivial(chi)? {
            return Err(Error::TrivialCharacter);
        }
        let w = self.ambient_character(chi)?;
        let mut rows = self.relations.transpose().row_vecs();
        rows.push(w);
        let a = IntMat::from_rows(rows.len(), self.ambient, &rows);
        let mut rhs = vec![Rational::one(); rows.len() - 1];
        rhs.push(c.clone());
        match solve_multiplicative(&a, &rhs)? {
            Some(mu) => {
                let params = self.params_of(&mu);
                Ok(GroupElement { ambient: mu, params })
            }
            None => Err(Error::UnabsorbableScalar(crate::poly::format_rational(c))),
        }
    }

    /// Value of an ambient character at a rational point.
    pub fn evaluate_character(&self, chi: &Character, mu: &[Rational]) -> Result<Rational> {
        let w = self.ambient_character(chi)?;
        Ok(monomial_value(mu, &w))
    }

    /// Constant scalars `μ` in the group with `f2 = μ·f`, when they exist.
    pub fn g_equivalent(&self, f: &[MultiPoly], f2: &[MultiPoly]) -> Result<GroupElement> {
        if f.len() != self.ambient {
            return Err(Error::LengthMismatch { expected: self.ambient, got: f.len() });
        }
        if f2.len() != self.ambient {
            return Err(Error::LengthMismatch { expected: self.ambient, got: f2.len() });
        }
        let mut known: Vec<Option<Rational>> = Vec::with_capacity(self.ambient);
        for (i, (a, b)) in f.iter().zip(f2).enumerate() {
            match (a.is_zero(), b.is_zero()) {
                (true, true) => known.push(None),
                (true, false) | (false, true) => return Err(Error::NotEquivalent),
                (false, false) => {
                    let c = b.leading_coefficient() / a.leading_coefficient();
                    if &a.scale(&c) != b {
                        return Err(Error::NonConstantRatio(i));
                    }
                    known.push(Some(c));
                }
            }
        }
        let unknown: Vec<usize> = (0..self.ambient).filter(|&i| known[i].is_none()).collect();
        let relations = self.relations.columns();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for w in &relations {
            let mut fixed = Rational::one();
            for (i, k) in known.iter().enumerate() {
                if let Some(c) = k {
                    fixed *= crate::multiplicative::rational_pow(c, &w[i]);
                }
            }
            rows.push(IntVec::new(unknown.iter().map(|&i| w[i].clone()).collect()));
            rhs.push(fixed.recip());
        }
        let solution = if unknown.is_empty() {
            rhs.iter().all(One::is_one).then(Vec::new)
        } else {
            solve_multiplicative(&IntMat::from_rows(rows.len(), unknown.len(), &rows), &rhs)?
        };
        let Some(sol) = solution else { return Err(Error::NotEquivalent) };
        let mut mu: Vec<Rational> = known.into_iter().map(|k| k.unwrap_or_else(Rational::one)).collect();
        for (&i, x) in unknown.iter().zip(sol) {
            mu[i] = x;
        }
        let params = self.params_of(&mu);
        Ok(GroupElement { ambient: mu, params })
    }

    /// Tuple notation such as `(λ, μ, ν, λ*μ, μ*ν)` or `±(1, 1, 1)`.
    pub fn render(&self) -> String {
        let free = render_tuple(&self.exponent_matrix);
        if self.torsion.is_empty() {
            return free;
        }
        if self.dim() == 0
            && self.torsion.len() == 1
            && self.torsion[0].order == BigInt::from(2)
            && self.torsion[0].exponents.iter().all(|e| e.is_one())
        {
            return format!("±{free}");
        }
        let mut out = free;
        for t in &self.torsion {
            let _ = write!(out, " · ⟨{}⟩", render_torsion(t));
        }
        out
    }

    /// The group as a subset of a parent group cut out by a character,
    /// e.g. `{(λ, μ, ν, λ*μ, μ*ν) | λ^2*μ^3*ν^2 = 1}`.
    pub fn render_as_kernel(parent: &SubtorusDescription, chi: &Character) -> Result<String> {
        let c = parent.parameter_character(chi)?;
        Ok(format!("{{{} | {} = 1}}", parent.render(), render_param_monomial(&c)))
    }
}

pub fn param_name(j: usize) -> String {
    match j {
        0 => "λ".into(),
        1 => "μ".into(),
        2 => "ν".into(),
        _ => format!("t{}", j + 1),
    }
}

/// Product of parameter powers, `1` for the zero vector.
pub fn render_param_monomial(e: &IntVec) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| if x.is_one() { param_name(j) } else { format!("{}^{}", param_name(j), x) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn render_tuple(e: &IntMat) -> String {
    let entries: Vec<String> = e.row_vecs().iter().map(render_param_monomial).collect();
    format!("({})", entries.join(", "))
}

fn render_torsion(t: &TorsionGenerator) -> String {
    let two = BigInt::from(2);
    let entries: Vec<String> = t
        .exponents
        .iter()
        .map(|k| {
            if k.is_zero() {
                "1".to_string()
            } else if t.order == two {
                "-1".to_string()
            } else if k.is_one() {
                format!("ζ{}", t.order)
            } else {
                format!("ζ{}^{}", t.order, k)
            }
        })
        .collect();
    format!("({})", entries.join(", "))
}

/// The group `G = {μ : Π μ_i^{⟨m, n_i⟩} = 1 for all m}` of a fan.
pub fn compute_g(fan: &Fan) -> SubtorusDescription {
    let r = fan.rays().len();
    SubtorusDescription::from_relations(r, fan.ray_matrix().transpose())
}

/// The character `μ ↦ Π μ_i^{a_i}` for given offsets, in ambient form.
pub fn offsets_character(offsets: &[BigInt]) -> Character {
    Character::ambient(IntVec::new(offsets.to_vec()))
}

/// `μ_Δ` as a character on the parameters of `g`: exponents `aᵀ·E`.
pub fn mu_delta_character(p: &LatticePolytope, g: &SubtorusDescription) -> Result<Character> {
    let a = offsets_character(&p.offsets());
    Ok(Character::parameter(g.parameter_character(&a)?))
}

/// Coordinate-wise scaling `μ·F`.
pub fn act(mu: &[Rational], f: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    if mu.len() != f.len() {
        return Err(Error::LengthMismatch { expected: f.len(), got: mu.len() });
    }
    if mu.iter().any(Zero::is_zero) {
        return Err(Error::ZeroScalar);
    }
    Ok(mu.iter().zip(f).map(|(m, p)| p.scale(m)).collect())
}

/// [`act`] with scalars given as polynomials, which must be constants.
pub fn act_symbolic(mu: &[MultiPoly], f: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    if mu.iter().any(|m| !m.is_constant()) {
        return Err(Error::NonConstantEntry);
    }
    let values: Vec<Rational> = mu.iter().map(MultiPoly::constant_value).collect();
    act(&values, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn polytope(v: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<IntVec> = v.iter().map(|p| IntVec::from_i64(p)).collect();
        LatticePolytope::from_vertices(2, &pts).unwrap()
    }

    fn square() -> LatticePolytope {
        polytope(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])
    }

    #[test]
    fn square_groups() {
        let p = square();
        let g = compute_g(&p.normal_fan());
        assert_eq!(g.render(), "(λ, μ, λ, μ)");
        let chi = mu_delta_character(&p, &g).unwrap();
        assert_eq!(chi.exponents, IntVec::from_i64(&[1, 1]));
        let gd = g.kernel_of_character(&chi).unwrap();
        assert_eq!(gd.render(), "(λ, λ^-1, λ, λ^-1)");
        assert!(gd.torsion().is_empty());
    }

    #[test]
    fn projective_plane_torsion() {
        let p = polytope(&[&[0, 0], &[2, 0], &[0, 2]]);
        let g = compute_g(&p.normal_fan());
        assert_eq!(g.render(), "(λ, λ, λ)");
        let chi = mu_delta_character(&p, &g).unwrap();
        assert_eq!(chi.exponents, IntVec::from_i64(&[2]));
        let gd = g.kernel_of_character(&chi).unwrap();
        assert_eq!(gd.dim(), 0);
        assert_eq!(gd.torsion_order(), BigInt::from(2));
        assert_eq!(gd.render(), "±(1, 1, 1)");
        assert!(gd.contains(&[rat(-1), rat(-1), rat(-1)]).unwrap());
        assert!(!gd.contains(&[rat(2), rat(2), rat(2)]).unwrap());
    }

    #[test]
    fn character_solving() {
        let p = polytope(&[&[0, 0], &[2, 0], &[0, 2]]);
        let g = compute_g(&p.normal_fan());
        let chi = mu_delta_character(&p, &g).unwrap();
        let e = g.solve_character(&chi, &rat(4)).unwrap();
        assert_eq!(g.evaluate_character(&chi, &e.ambient).unwrap(), rat(4));
        assert!(matches!(g.solve_character(&chi, &rat(2)), Err(Error::UnabsorbableScalar(_))));
        let sq = square();
        let gs = compute_g(&sq.normal_fan());
        let chis = mu_delta_character(&sq, &gs).unwrap();
        let e = gs.solve_character(&chis, &rat(6)).unwrap();
        assert!(gs.contains(&e.ambient).unwrap());
        assert_eq!(gs.evaluate_character(&chis, &e.ambient).unwrap(), rat(6));
        let gd = gs.kernel_of_character(&chis).unwrap();
        let amb = Character::ambient(IntVec::from_i64(&[0, 0, 1, 1]));
        assert_eq!(gd.solve_character(&amb, &rat(3)), Err(Error::TrivialCharacter));
    }

    #[test]
    fn equivalence() {
        let p = square();
        let g = compute_g(&p.normal_fan());
        let gd = g.kernel_of_character(&mu_delta_character(&p, &g).unwrap()).unwrap();
        let u = MultiPoly::var(2, 0);
        let v = MultiPoly::var(2, 1);
        let one = MultiPoly::one(2);
        let f = vec![u.clone(), one.clone(), v.clone(), &u + &v];
        let two = rat(2);
        let f2 = vec![u.scale(&two), one.scale(&two), v.clone(), &u + &v];
        assert!(g.g_equivalent(&f, &f2).is_err());
        let f3 = vec![u.scale(&two), one.clone(), v.scale(&two), &u + &v];
        let e = g.g_equivalent(&f, &f3).unwrap();
        assert_eq!(e.ambient, vec![rat(2), rat(1), rat(2), rat(1)]);
        assert_eq!(gd.g_equivalent(&f, &f3), Err(Error::NotEquivalent));
        assert_eq!(g.g_equivalent(&f, &[u.clone(), u.clone(), v.clone(), v.clone()]), Err(Error::NonConstantRatio(1)));
        let id = gd.g_equivalent(&f, &f).unwrap();
        assert!(id.ambient.iter().all(One::is_one));
    }

    #[test]
    fn action() {
        let f = vec![MultiPoly::var(1, 0), MultiPoly::one(1)];
        assert_eq!(act(&[rat(1), rat(1)], &f).unwrap(), f);
        assert_eq!(act(&[rat(0), rat(1)], &f), Err(Error::ZeroScalar));
        let nonconst = [MultiPoly::var(1, 0), MultiPoly::one(1)];
        assert_eq!(act_symbolic(&nonconst, &f), Err(Error::NonConstantEntry));
    }
}
