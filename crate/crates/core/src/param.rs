//! Polynomials in S_Δ, parametrization systems, Σ-irreducibility and
//! composition `P∘F`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{compute_g, offsets_character, Character, SubtorusDescription};
use crate::lattice::{smith_normal_form, IntMat, IntVec};
use crate::poly::{gcd_many, parse_poly, render, MultiPoly, Rational, VarFamily};
use crate::polytope::{Fan, LatticePolytope, PrimitiveCollection};

/// A polytope together with the fan and offsets used for its facet
/// variables: the normal fan with the facet offsets, or a smooth
/// refinement with virtual offsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricModel {
    polytope: LatticePolytope,
    fan: Fan,
    offsets: Vec<BigInt>,
    resolved: bool,
}

impl ToricModel {
    pub fn from_polytope(p: &LatticePolytope) -> Self {
        ToricModel { polytope: p.clone(), fan: p.normal_fan(), offsets: p.offsets(), resolved: false }
    }

    /// A model over a refinement; `offsets[i]` belongs to `fan.rays()[i]`.
    pub fn with_fan(p: &LatticePolytope, fan: Fan, offsets: Vec<BigInt>, resolved: bool) -> Result<Self> {
        if offsets.len() != fan.rays().len() {
            return Err(Error::LengthMismatch { expected: fan.rays().len(), got: offsets.len() });
        }
        if fan.dim() != p.dim() {
            return Err(Error::DimensionMismatch { expected: p.dim(), got: fan.dim() });
        }
        for (ray, a) in fan.rays().iter().zip(&offsets) {
            if p.vertices().iter().any(|v| (v.dot(ray) + a).is_negative()) {
                return Err(Error::Input(format!("offset {a} of ray {ray} cuts the polytope")));
            }
        }
        Ok(ToricModel { polytope: p.clone(), fan, offsets, resolved })
    }

    pub fn polytope(&self) -> &LatticePolytope {
        &self.polytope
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn offsets(&self) -> &[BigInt] {
        &self.offsets
    }

    pub fn is_resolved(&self) -> bool {
        self.resolved
    }

    /// Number of facet variables.
    pub fn nvars(&self) -> usize {
        self.offsets.len()
    }

    /// Exponents `⟨m, n_i⟩ + a_i` over all rays of the model's fan.
    pub fn delta_monomial(&self, m: &IntVec) -> Result<IntVec> {
        if m.len() != self.polytope.dim() {
            return Err(Error::DimensionMismatch { expected: self.polytope.dim(), got: m.len() });
        }
        if !self.polytope.contains(m) {
            return Err(Error::PointOutsidePolytope(m.to_string()));
        }
        Ok(IntVec::new(self.fan.rays().iter().zip(&self.offsets).map(|(n, a)| m.dot(n) + a).collect()))
    }

    pub fn delta_monomial_poly(&self, m: &IntVec) -> Result<MultiPoly> {
        let e = self.delta_monomial(m)?;
        let exps = e.iter().map(|x| u32::try_from(x).expect("small exponent")).collect();
        Ok(MultiPoly::monomial(self.nvars(), exps, Rational::one()))
    }

    pub fn group(&self) -> SubtorusDescription {
        compute_g(&self.fan)
    }

    /// `μ ↦ Π μ_i^{a_i}` in ambient form.
    pub fn mu_delta(&self) -> Character {
        offsets_character(&self.offsets)
    }

    /// Kernel of `μ_Δ` in `G` (`G_Δ`, or `G_{Δ,Σ}` for a refinement).
    pub fn group_delta(&self) -> SubtorusDescription {
        self.group().kernel_of_character(&self.mu_delta()).expect("ambient character")
    }
}

/// An element of S_Δ: coefficients `a_m` on lattice points `m ∈ Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaPolynomial {
    coefficients: BTreeMap<IntVec, Rational>,
}

impl DeltaPolynomial {
    pub fn monomial(m: IntVec) -> Self {
        DeltaPolynomial { coefficients: BTreeMap::from([(m, Rational::one())]) }
    }

    /// Sums repeated points and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (IntVec, Rational)>) -> Self {
        let mut coefficients: BTreeMap<IntVec, Rational> = BTreeMap::new();
        for (m, a) in terms {
            *coefficients.entry(m).or_insert_with(Rational::zero) += a;
        }
        coefficients.retain(|_, a| !a.is_zero());
        DeltaPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &BTreeMap<IntVec, Rational> {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// The single lattice point of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<(&IntVec, &Rational)> {
        if self.coefficients.len() == 1 {
            self.coefficients.iter().next()
        } else {
            None
        }
    }

    pub fn expand(&self, model: &ToricModel) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(model.nvars());
        for (m, a) in &self.coefficients {
            p = &p + &model.delta_monomial_poly(m)?.scale(a);
        }
        Ok(p)
    }
}

/// Diagnostics for a subset system; neither stops the system from being built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetWarning {
    /// Some vertex of Δ is missing from the subset, so its hull is smaller.
    HullDiffers { missing_vertices: Vec<IntVec> },
    /// Differences of subset points generate a proper sublattice of ℤⁿ
    /// (`index` is `None` when they do not even span ℝⁿ).
    DifferencesDoNotSpan { index: Option<BigInt> },
}

impl std::fmt::Display for SubsetWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SubsetWarning::HullDiffers { missing_vertices } => {
                let v: Vec<String> = missing_vertices.iter().map(ToString::to_string).collect();
                write!(f, "convex hull of the subset is not the polytope (missing vertices {})", v.join(", "))
            }
            SubsetWarning::DifferencesDoNotSpan { index: Some(i) } => {
                write!(f, "differences of the subset generate a sublattice of index {i}")
            }
            SubsetWarning::DifferencesDoNotSpan { index: None } => {
                write!(f, "differences of the subset do not span the ambient space")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSystem {
    model: ToricModel,
    components: Vec<DeltaPolynomial>,
}

impl ParamSystem {
    pub fn new(model: ToricModel, components: Vec<DeltaPolynomial>) -> Result<Self> {
        if components.is_empty() || components.iter().all(DeltaPolynomial::is_zero) {
            return Err(Error::Input("a system needs a nonzero component".into()));
        }
        for c in &components {
            for m in c.coefficients.keys() {
                model.delta_monomial(m)?;
            }
        }
        Ok(ParamSystem { model, components })
    }

    /// One Δ-monomial per lattice point, in lattice-point order.
    pub fn build_p_delta(model: &ToricModel) -> Self {
        let comps = model.polytope.lattice_points().into_iter().map(DeltaPolynomial::monomial).collect();
        ParamSystem { model: model.clone(), components: comps }
    }

    /// The Δ-monomials of the given points, plus diagnostics on whether the
    /// points have hull Δ and affinely generate ℤⁿ.
    pub fn select_p_a(model: &ToricModel, points: &[IntVec]) -> Result<(Self, Vec<SubsetWarning>)> {
        if points.is_empty() {
            return Err(Error::Input("empty point subset".into()));
        }
        for m in points {
            model.delta_monomial(m)?;
        }
        let mut warnings = Vec::new();
        let missing: Vec<IntVec> = model.polytope.vertices().iter().filter(|v| !points.contains(v)).cloned().collect();
        if !missing.is_empty() {
            warnings.push(SubsetWarning::HullDiffers { missing_vertices: missing });
        }
        let n = model.polytope.dim();
        let diffs: Vec<IntVec> = points[1..].iter().map(|p| p.sub(&points[0])).collect();
        let snf = smith_normal_form(&IntMat::from_rows(diffs.len(), n, &diffs));
        if snf.rank() < n {
            warnings.push(SubsetWarning::DifferencesDoNotSpan { index: None });
        } else {
            let index: BigInt = snf.diagonal.iter().product();
            if !index.is_one() {
                warnings.push(SubsetWarning::DifferencesDoNotSpan { index: Some(index) });
            }
        }
        let comps = points.iter().cloned().map(DeltaPolynomial::monomial).collect();
        Ok((ParamSystem { model: model.clone(), components: comps }, warnings))
    }

    pub fn model(&self) -> &ToricModel {
        &self.model
    }

    pub fn components(&self) -> &[DeltaPolynomial] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Components as polynomials in the facet variables.
    pub fn expand(&self) -> Vec<MultiPoly> {
        self.components.iter().map(|c| c.expand(&self.model).expect("validated points")).collect()
    }

    /// Whether every component is a single Δ-monomial.
    pub fn is_monomial(&self) -> bool {
        self.components.iter().all(|c| c.as_monomial().is_some())
    }

    pub fn to_json(&self) -> Vec<ComponentJson> {
        self.components
            .iter()
            .map(|c| {
                if c.coefficients.values().all(One::is_one) {
                    ComponentJson::Monomials { monomials: c.coefficients.keys().cloned().collect() }
                } else {
                    ComponentJson::Coefficients {
                        coefficients: c
                            .coefficients
                            .iter()
                            .map(|(m, a)| CoefficientJson { m: m.clone(), a: a.clone() })
                            .collect(),
                    }
                }
            })
            .collect()
    }

    pub fn from_json(model: &ToricModel, comps: &[ComponentJson]) -> Result<Self> {
        let components = comps
            .iter()
            .map(|c| match c {
                ComponentJson::Monomials { monomials } => {
                    DeltaPolynomial::from_terms(monomials.iter().map(|m| (m.clone(), Rational::one())))
                }
                ComponentJson::Coefficients { coefficients } => {
                    DeltaPolynomial::from_terms(coefficients.iter().map(|t| (t.m.clone(), t.a.clone())))
                }
            })
            .collect();
        Self::new(model.clone(), components)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientJson {
    pub m: IntVec,
    #[serde(with = "crate::json::rational")]
    pub a: Rational,
}

/// One system component on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum ComponentJson {
    Monomials { monomials: Vec<IntVec> },
    Coefficients { coefficients: Vec<CoefficientJson> },
}

/// A tuple `F = (f_1, …, f_r)` of polynomials in `nparams` parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTuple {
    nparams: usize,
    entries: Vec<MultiPoly>,
}

impl ParamTuple {
    pub fn new(entries: Vec<MultiPoly>) -> Result<Self> {
        let nparams = entries.first().map_or(0, MultiPoly::nvars);
        if let Some(e) = entries.iter().find(|e| e.nvars() != nparams) {
            return Err(Error::VariableCountMismatch(nparams, e.nvars()));
        }
        Ok(ParamTuple { nparams, entries })
    }

    /// Parses `(p1, p2, …)` in the parameter variables.
    pub fn parse(text: &str) -> Result<Self> {
        let parsed = parse_tuple(text, VarFamily::Param)?;
        let nparams = parsed.iter().map(MultiPoly::nvars).max().unwrap_or(0);
        Self::new(parsed.into_iter().map(|p| p.with_nvars(nparams).expect("padding")).collect())
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn entries(&self) -> &[MultiPoly] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Reinterprets the entries in `n ≥ nparams` parameters.
    pub fn with_nparams(&self, n: usize) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.with_nvars(n)).collect::<Result<_>>()?;
        Ok(ParamTuple { nparams: n, entries })
    }

    pub fn render(&self) -> String {
        render_tuple(&self.entries)
    }
}

pub fn render_tuple(entries: &[MultiPoly]) -> String {
    let parts: Vec<String> = entries.iter().map(|e| render(e, VarFamily::Param)).collect();
    format!("({})", parts.join(", "))
}

/// Splits `(a, b, …)` at top-level commas and parses each entry, which must
/// use `family` or be constant. Entries keep their own variable counts.
pub fn parse_tuple(text: &str, family: VarFamily) -> Result<Vec<MultiPoly>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .filter(|s| {
            // the outer parentheses must enclose the whole tuple
            let mut depth = 0i32;
            s.chars().all(|c| {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    _ => {}
                }
                depth >= 0
            })
        })
        .unwrap_or(t);
    let offset = text.find(inner).unwrap_or(0);
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start, &inner[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &inner[start..]));
    let mut out = Vec::new();
    for (pos, s) in parts {
        let (fam, p) = parse_poly(s).map_err(|e| match e {
            Error::Syntax { pos: p, msg } => Error::Syntax { pos: p + pos + offset, msg },
            other => other,
        })?;
        if fam.is_some_and(|f| f != family) {
            return Err(Error::Syntax {
                pos: pos + offset + (s.len() - s.trim_start().len()),
                msg: match family {
                    VarFamily::Param => "tuple entries must use parameter variables y1, y2, ... (or u, v)".into(),
                    VarFamily::Facet => "entries must use facet variables x1, x2, ...".into(),
                },
            });
        }
        out.push(p);
    }
    Ok(out)
}

/// `H = (h_0, …, h_s)` with coprime components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalParametrization {
    nparams: usize,
    components: Vec<MultiPoly>,
}

impl RationalParametrization {
    pub fn new(components: Vec<MultiPoly>) -> Result<Self> {
        let nparams = components.first().map_or(0, MultiPoly::nvars);
        if !is_rational_parametrization(&components) {
            return Err(Error::Input("components are zero or share a common factor".into()));
        }
        Ok(RationalParametrization { nparams, components })
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Same map: the tuples differ by a nonzero constant factor.
    pub fn same_map(&self, other: &RationalParametrization) -> bool {
        proportional(&self.components, &other.components)
    }
}

/// Whether `b = c·a` for a nonzero constant `c`.
pub fn proportional(a: &[MultiPoly], b: &[MultiPoly]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let Some(i) = a.iter().position(|p| !p.is_zero()) else { return false };
    if b[i].is_zero() {
        return false;
    }
    let c = b[i].leading_coefficient() / a[i].leading_coefficient();
    a.iter().zip(b).all(|(p, q)| &p.scale(&c) == q)
}

/// Components not all zero and with gcd 1.
pub fn is_rational_parametrization(h: &[MultiPoly]) -> bool {
    let Some(first) = h.first() else { return false };
    gcd_many(first.nvars(), h).is_one()
}

/// Whether `relation(h_0, …, h_s)` vanishes identically.
pub fn check_implicit(h: &[MultiPoly], relation: &MultiPoly) -> Result<bool> {
    if relation.nvars() != h.len() {
        return Err(Error::VariableCountMismatch(h.len(), relation.nvars()));
    }
    Ok(relation.substitute(h)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub irreducible: bool,
    pub violated: Vec<PrimitiveCollection>,
}

/// Σ-irreducibility: the entries indexed by each minimal primitive
/// collection are coprime (an all-zero collection has gcd 0 and fails).
pub fn is_sigma_irreducible(f: &[MultiPoly], fan: &Fan) -> Result<IrreducibilityReport> {
    if f.len() != fan.rays().len() {
        return Err(Error::LengthMismatch { expected: fan.rays().len(), got: f.len() });
    }
    let nvars = f.first().map_or(0, MultiPoly::nvars);
    let violated: Vec<PrimitiveCollection> = fan
        .minimal_primitive_collections()
        .into_iter()
        .filter(|c| !gcd_many(nvars, c.rays.iter().map(|&i| &f[i])).is_one())
        .collect();
    Ok(IrreducibilityReport { irreducible: violated.is_empty(), violated })
}

/// `f^m = Π f_i^{⟨m, n_i⟩ + a_i}`.
pub fn f_power(f: &ParamTuple, m: &IntVec, model: &ToricModel) -> Result<MultiPoly> {
    if f.len() != model.nvars() {
        return Err(Error::LengthMismatch { expected: model.nvars(), got: f.len() });
    }
    let e = model.delta_monomial(m)?;
    let mut p = MultiPoly::one(f.nparams());
    for (fi, k) in f.entries().iter().zip(e.iter()) {
        p = &p * &fi.pow(u32::try_from(k).expect("small exponent"));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    /// `Σ_m a_{jm} f^m` for each component `j`.
    pub raw: Vec<MultiPoly>,
    /// gcd of the raw components (0 when they all vanish).
    pub content: MultiPoly,
    /// Raw components divided by the content.
    pub h: Vec<MultiPoly>,
    pub sigma_irreducible: bool,
    pub violated: Vec<PrimitiveCollection>,
}

/// `P∘F` with its content split off.
pub fn compose(p_sys: &ParamSystem, f: &ParamTuple) -> Result<Composition> {
    let model = p_sys.model();
    if f.len() != model.nvars() {
        return Err(Error::LengthMismatch { expected: model.nvars(), got: f.len() });
    }
    let report = is_sigma_irreducible(f.entries(), model.fan())?;
    let raw: Vec<MultiPoly> = p_sys.expand().iter().map(|c| c.substitute(f.entries())).collect::<Result<_>>()?;
    let content = gcd_many(f.nparams(), &raw);
    let h = if content.is_zero() {
        raw.clone()
    } else {
        raw.iter().map(|p| p.div_exact(&content).expect("content divides")).collect()
    };
    Ok(Composition { raw, content, h, sigma_irreducible: report.irreducible, violated: report.violated })
}

/// Lattice points used by a system, for reporting.
pub fn support_points(p_sys: &ParamSystem) -> BTreeSet<IntVec> {
    p_sys.components.iter().flat_map(|c| c.coefficients.keys().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn polytope(v: &[&[i64]]) -> LatticePolytope {
        let pts: Vec<IntVec> = v.iter().map(|p| IntVec::from_i64(p)).collect();
        LatticePolytope::from_vertices(2, &pts).unwrap()
    }

    fn tuple(s: &str) -> ParamTuple {
        ParamTuple::parse(s).unwrap()
    }

    #[test]
    fn tuple_parsing() {
        let t = tuple("(u*v, 1, u, v, 1)");
        assert_eq!(t.len(), 5);
        assert_eq!(t.nparams(), 2);
        assert_eq!(t.render(), "(u*v, 1, u, v, 1)");
        let nested = tuple("((u+1)*(u-1), 2)");
        assert_eq!(nested.entries()[0], parse_poly("u^2 - 1").unwrap().1);
        assert!(matches!(ParamTuple::parse("(u, x1)"), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(ParamTuple::parse("(u, +)"), Err(Error::Syntax { pos: 5, .. })));
        assert_eq!(tuple("u, v").len(), 2);
        assert_eq!(tuple("(u)*(v)").len(), 1);
    }

    #[test]
    fn square_p_delta() {
        let m = ToricModel::from_polytope(&polytope(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]));
        let sys = ParamSystem::build_p_delta(&m);
        let rendered: Vec<String> = sys.expand().iter().map(ToString::to_string).collect();
        assert_eq!(rendered, vec!["x3*x4", "x2*x3", "x1*x4", "x1*x2"]);
    }

    #[test]
    fn veronese() {
        let m = ToricModel::from_polytope(&polytope(&[&[0, 0], &[2, 0], &[0, 2]]));
        let sys = ParamSystem::build_p_delta(&m);
        let mut rendered: Vec<String> = sys.expand().iter().map(ToString::to_string).collect();
        rendered.sort();
        assert_eq!(rendered, vec!["x1*x2", "x1*x3", "x1^2", "x2*x3", "x2^2", "x3^2"]);
    }

    #[test]
    fn power_of_tuple() {
        let p = polytope(&[&[1, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        let m = ToricModel::from_polytope(&p);
        let f = tuple("(1, u, 1, 1, 1)");
        assert_eq!(f_power(&f, &IntVec::from_i64(&[1, 1]), &m).unwrap(), parse_poly("u^3").unwrap().1);
        assert!(matches!(f_power(&f, &IntVec::from_i64(&[2, 2]), &m), Err(Error::PointOutsidePolytope(_))));
    }

    #[test]
    fn implicit_and_gcd_checks() {
        let h: Vec<MultiPoly> = parse_tuple("(u, 0, 0, v)", VarFamily::Param).unwrap();
        let h: Vec<MultiPoly> = h.into_iter().map(|p| p.with_nvars(2).unwrap()).collect();
        assert!(is_rational_parametrization(&h));
        assert!(!is_rational_parametrization(&[MultiPoly::zero(1), MultiPoly::zero(1)]));
        let rel = parse_poly("x1").unwrap().1.with_nvars(2).unwrap();
        let h1 = [MultiPoly::one(1), MultiPoly::var(1, 0)];
        assert!(!check_implicit(&h1, &rel).unwrap());
        assert!(check_implicit(&h1, &MultiPoly::var(3, 0)).is_err());
    }

    #[test]
    fn proportionality() {
        let a = vec![MultiPoly::var(1, 0), MultiPoly::one(1)];
        let b: Vec<MultiPoly> = a.iter().map(|p| p.scale(&rat(-3))).collect();
        assert!(proportional(&a, &b));
        assert!(!proportional(&a, &[MultiPoly::var(1, 0), MultiPoly::constant(1, rat(2))]));
    }

    #[test]
    fn system_json() {
        let m = ToricModel::from_polytope(&polytope(&[&[0, 0], &[2, 0], &[0, 2]]));
        let text = r#"[{"monomials": [[0,0],[2,0],[0,2]]}, {"coefficients": [{"m": [1,0], "a": "3/2"}]}]"#;
        let comps: Vec<ComponentJson> = serde_json::from_str(text).unwrap();
        let sys = ParamSystem::from_json(&m, &comps).unwrap();
        assert_eq!(sys.expand()[0].to_string(), "x1^2 + x2^2 + x3^2");
        assert_eq!(sys.expand()[1].to_string(), "3/2*x1*x3");
        let back = serde_json::to_string(&sys.to_json()).unwrap();
        let again: Vec<ComponentJson> = serde_json::from_str(&back).unwrap();
        assert_eq!(ParamSystem::from_json(&m, &again).unwrap(), sys);
        let outside: Vec<ComponentJson> = serde_json::from_str(r#"[{"monomials": [[3,0]]}]"#).unwrap();
        assert!(matches!(ParamSystem::from_json(&m, &outside), Err(Error::PointOutsidePolytope(_))));
    }
}
