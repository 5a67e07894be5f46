//! Lattice polytopes, normal fans, smoothness and primitive collections.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{determinant, primitive_vector, rank, saturated_kernel_basis, IntMat, IntVec};

/// Inequality `⟨m, normal⟩ + offset ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub normal: IntVec,
    #[serde(with = "crate::json::bigint")]
    pub offset: BigInt,
}

impl Facet {
    pub fn value(&self, m: &IntVec) -> BigInt {
        m.dot(&self.normal) + &self.offset
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<IntVec>,
    facets: Vec<Facet>,
}

/// On-disk form: vertices, optionally with facets in a chosen order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<IntVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Facet>>,
}

fn check_lengths(n: usize, pts: &[IntVec]) -> Result<()> {
    match pts.iter().find(|p| p.len() != n) {
        Some(p) => Err(Error::DimensionMismatch { expected: n, got: p.len() }),
        None => Ok(()),
    }
}

fn affine_rank(pts: &[&IntVec]) -> usize {
    let Some(first) = pts.first() else { return 0 };
    let diffs: Vec<IntVec> = pts[1..].iter().map(|p| p.sub(first)).collect();
    if diffs.is_empty() {
        return 0;
    }
    rank(&IntMat::from_rows(diffs.len(), first.len(), &diffs))
}

/// Counter-clockwise angular order starting at the direction (1, 0).
pub fn angle_cmp(a: &IntVec, b: &IntVec) -> Ordering {
    let half = |v: &IntVec| {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a[0] * &b[1] - &a[1] * &b[0];
        BigInt::zero().cmp(&cross)
    })
}

fn sort_facets(n: usize, facets: &mut [Facet]) {
    if n == 2 {
        facets.sort_by(|a, b| angle_cmp(&a.normal, &b.normal));
    } else {
        facets.sort();
    }
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

/// Primitive normal of the hyperplane through `n` points, if they span one.
fn hyperplane_normal(n: usize, pts: &[&IntVec]) -> Option<IntVec> {
    let diffs: Vec<IntVec> = pts[1..].iter().map(|p| p.sub(pts[0])).collect();
    let m = IntMat::from_rows(diffs.len(), n, &diffs);
    let k = saturated_kernel_basis(&m);
    if k.cols() != 1 {
        return None;
    }
    primitive_vector(&k.column(0)).ok()
}

/// Facets and vertices of the convex hull of full-dimensional points.
fn hull(n: usize, pts: &[IntVec]) -> (Vec<IntVec>, Vec<Facet>) {
    let mut facets = BTreeSet::new();
    for idx in combinations(pts.len(), n) {
        let chosen: Vec<&IntVec> = idx.iter().map(|&i| &pts[i]).collect();
        let Some(normal) = hyperplane_normal(n, &chosen) else { continue };
        let c = chosen[0].dot(&normal);
        let vals: Vec<BigInt> = pts.iter().map(|p| p.dot(&normal) - &c).collect();
        let normal = if vals.iter().all(|v| !v.is_negative()) {
            normal
        } else if vals.iter().all(|v| !v.is_positive()) {
            normal.neg()
        } else {
            continue;
        };
        let offset = -pts[idx[0]].dot(&normal);
        facets.insert(Facet { normal, offset });
    }
    let facets: Vec<Facet> = facets.into_iter().collect();
    let mut vertices: Vec<IntVec> = pts
        .iter()
        .filter(|p| {
            let tight: Vec<IntVec> = facets.iter().filter(|f| f.value(p).is_zero()).map(|f| f.normal.clone()).collect();
            !tight.is_empty() && rank(&IntMat::from_rows(tight.len(), n, &tight)) == n
        })
        .cloned()
        .collect();
    vertices.sort();
    vertices.dedup();
    (vertices, facets)
}

fn dedup_points(n: usize, points: &[IntVec]) -> Result<Vec<IntVec>> {
    if !(1..=3).contains(&n) {
        return Err(Error::UnsupportedDimension(n));
    }
    check_lengths(n, points)?;
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let refs: Vec<&IntVec> = pts.iter().collect();
    if affine_rank(&refs) != n {
        return Err(Error::NotFullDimensional);
    }
    Ok(pts)
}

impl LatticePolytope {
    /// Convex hull of lattice points in dimension 1, 2 or 3. In the plane,
    /// facets are listed counter-clockwise by inward normal starting from
    /// direction (1, 0); otherwise lexicographically by normal.
    pub fn from_vertices(n: usize, points: &[IntVec]) -> Result<Self> {
        let pts = dedup_points(n, points)?;
        let (vertices, mut facets) = hull(n, &pts);
        sort_facets(n, &mut facets);
        Ok(LatticePolytope { dim: n, vertices, facets })
    }

    /// Builds a polytope from both presentations, keeping the given facet
    /// order. The data is validated; in dimension ≤ 3 it must agree with
    /// the convex hull of the vertices.
    pub fn from_h_representation(n: usize, vertices: &[IntVec], facets: Vec<Facet>) -> Result<Self> {
        check_lengths(n, vertices)?;
        if let Some(f) = facets.iter().find(|f| f.normal.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: f.normal.len() });
        }
        let mut verts = vertices.to_vec();
        verts.sort();
        verts.dedup();
        let refs: Vec<&IntVec> = verts.iter().collect();
        if n == 0 || affine_rank(&refs) != n {
            return Err(Error::NotFullDimensional);
        }
        let invalid = |msg: String| Err(Error::InvalidPolytope(msg));
        let mut seen = BTreeSet::new();
        for f in &facets {
            if f.normal.content() != BigInt::from(1) {
                return invalid(format!("facet normal {} is not primitive", f.normal));
            }
            if !seen.insert(f.clone()) {
                return invalid(format!("facet {} listed twice", f.normal));
            }
            if let Some(v) = verts.iter().find(|v| f.value(v).is_negative()) {
                return invalid(format!("vertex {v} violates facet {}", f.normal));
            }
            let tight: Vec<&IntVec> = verts.iter().filter(|v| f.value(v).is_zero()).collect();
            if tight.is_empty() || affine_rank(&tight) != n - 1 {
                return invalid(format!("facet {} does not support a facet of the polytope", f.normal));
            }
        }
        for v in &verts {
            let tight: Vec<IntVec> = facets.iter().filter(|f| f.value(v).is_zero()).map(|f| f.normal.clone()).collect();
            if tight.is_empty() || rank(&IntMat::from_rows(tight.len(), n, &tight)) != n {
                return invalid(format!("point {v} is not a vertex"));
            }
        }
        if n <= 3 {
            let (hv, hf) = hull(n, &verts);
            let given: BTreeSet<&Facet> = facets.iter().collect();
            let computed: BTreeSet<&Facet> = hf.iter().collect();
            if given != computed || hv != verts {
                return invalid("facets do not match the convex hull of the vertices".to_string());
            }
        }
        Ok(LatticePolytope { dim: n, vertices: verts, facets })
    }

    pub fn from_json(data: &PolytopeJson) -> Result<Self> {
        match &data.facets {
            Some(f) => Self::from_h_representation(data.dim, &data.vertices, f.clone()),
            None => Self::from_vertices(data.dim, &data.vertices),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let data: PolytopeJson = serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))?;
        Self::from_json(&data)
    }

    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson { dim: self.dim, vertices: self.vertices.clone(), facets: Some(self.facets.clone()) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[IntVec] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn normals(&self) -> Vec<IntVec> {
        self.facets.iter().map(|f| f.normal.clone()).collect()
    }

    pub fn offsets(&self) -> Vec<BigInt> {
        self.facets.iter().map(|f| f.offset.clone()).collect()
    }

    pub fn contains(&self, m: &IntVec) -> bool {
        m.len() == self.dim && self.facets.iter().all(|f| !f.value(m).is_negative())
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> Vec<IntVec> {
        let n = self.dim;
        let lo: Vec<BigInt> = (0..n).map(|i| self.vertices.iter().map(|v| v[i].clone()).min().unwrap()).collect();
        let hi: Vec<BigInt> = (0..n).map(|i| self.vertices.iter().map(|v| v[i].clone()).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let p = IntVec::new(cur.clone());
            if self.contains(&p) {
                out.push(p);
            }
            // odometer with the last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    cur[i + 1..n].clone_from_slice(&lo[i + 1..n]);
                    break;
                }
            }
        }
    }

    /// Exponents `⟨m, n_i⟩ + a_i` of the Δ-monomial of `m`.
    pub fn delta_monomial(&self, m: &IntVec) -> Result<IntVec> {
        if m.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: m.len() });
        }
        if !self.contains(m) {
            return Err(Error::PointOutsidePolytope(m.to_string()));
        }
        Ok(IntVec::new(self.facets.iter().map(|f| f.value(m)).collect()))
    }

    /// Normal fan: ray `i` is the normal of facet `i`; one maximal cone per
    /// vertex (vertices in lexicographic order).
    pub fn normal_fan(&self) -> Fan {
        let cones = self
            .vertices
            .iter()
            .map(|v| Cone::new((0..self.facets.len()).filter(|&i| self.facets[i].value(v).is_zero()).collect()))
            .collect();
        Fan { dim: self.dim, rays: self.normals(), max_cones: cones }
    }
}

/// A cone given by indices into its fan's ray list, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    rays: Vec<usize>,
}

impl Cone {
    pub fn new(mut rays: Vec<usize>) -> Self {
        rays.sort_unstable();
        rays.dedup();
        Cone { rays }
    }

    pub fn rays(&self) -> &[usize] {
        &self.rays
    }

    pub fn contains_all(&self, idx: &[usize]) -> bool {
        idx.iter().all(|i| self.rays.binary_search(i).is_ok())
    }

    /// 1-based labels, e.g. `{1,3}`.
    pub fn label(&self) -> String {
        index_label(&self.rays)
    }
}

pub fn index_label(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<IntVec>,
    max_cones: Vec<Cone>,
}

/// On-disk form of a fan; cone indices are 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FanJson {
    pub dim: usize,
    pub rays: Vec<IntVec>,
    pub max_cones: Vec<Vec<usize>>,
}

/// A minimal set of rays lying in no common cone.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimitiveCollection {
    pub rays: Vec<usize>,
}

impl PrimitiveCollection {
    pub fn label(&self) -> String {
        index_label(&self.rays)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularCone {
    pub cone: Cone,
    /// `|det|` of the generators for simplicial cones; `None` otherwise.
    pub determinant: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smoothness {
    pub smooth: bool,
    pub singular: Vec<SingularCone>,
}

impl Fan {
    /// Builds a fan from raw data, checking that rays are primitive,
    /// distinct and used, and that every cone is strongly convex.
    pub fn new(dim: usize, rays: Vec<IntVec>, max_cones: Vec<Cone>) -> Result<Self> {
        check_lengths(dim, &rays)?;
        let invalid = |msg: String| Err(Error::Input(msg));
        let distinct: BTreeSet<&IntVec> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return invalid("fan rays must be distinct".to_string());
        }
        if let Some(r) = rays.iter().find(|r| r.content() != BigInt::from(1)) {
            return invalid(format!("ray {r} is not primitive"));
        }
        for c in &max_cones {
            if c.rays.iter().any(|&i| i >= rays.len()) {
                return invalid("cone refers to a missing ray".to_string());
            }
        }
        for (i, ray) in rays.iter().enumerate() {
            if !max_cones.iter().any(|c| c.rays.contains(&i)) {
                return invalid(format!("ray {ray} lies in no cone"));
            }
        }
        let fan = Fan { dim, rays, max_cones };
        for c in &fan.max_cones {
            let gens = fan.generators(c);
            let facets = fan.cone_facets(c);
            if gens.is_empty()
                || rank(&IntMat::from_columns(dim, &gens)) != dim
                || facets.is_empty()
                || rank(&IntMat::from_rows(facets.len(), dim, &facets)) != dim
            {
                return invalid(format!("cone {} is not a full-dimensional strongly convex cone", c.label()));
            }
        }
        Ok(fan)
    }

    pub fn from_json(data: &FanJson) -> Result<Self> {
        let mut cones = Vec::new();
        for c in &data.max_cones {
            if c.contains(&0) {
                return Err(Error::Input("cone indices are 1-based".to_string()));
            }
            cones.push(Cone::new(c.iter().map(|i| i - 1).collect()));
        }
        Self::new(data.dim, data.rays.clone(), cones)
    }

    pub fn to_json(&self) -> FanJson {
        FanJson {
            dim: self.dim,
            rays: self.rays.clone(),
            max_cones: self.max_cones.iter().map(|c| c.rays.iter().map(|i| i + 1).collect()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Cone] {
        &self.max_cones
    }

    /// `n × r` matrix whose columns are the rays.
    pub fn ray_matrix(&self) -> IntMat {
        IntMat::from_columns(self.dim, &self.rays)
    }

    pub fn generators(&self, c: &Cone) -> Vec<IntVec> {
        c.rays.iter().map(|&i| self.rays[i].clone()).collect()
    }

    pub fn is_smooth(&self) -> Smoothness {
        let mut singular = Vec::new();
        for c in &self.max_cones {
            let gens = self.generators(c);
            if gens.len() != self.dim {
                singular.push(SingularCone { cone: c.clone(), determinant: None });
                continue;
            }
            let d = determinant(&IntMat::from_columns(self.dim, &gens)).abs();
            if d != BigInt::from(1) {
                singular.push(SingularCone { cone: c.clone(), determinant: Some(d) });
            }
        }
        Smoothness { smooth: singular.is_empty(), singular }
    }

    /// Whether the listed rays all generate faces of one cone.
    pub fn in_common_cone(&self, idx: &[usize]) -> bool {
        self.max_cones.iter().any(|c| c.contains_all(idx))
    }

    /// All minimal primitive collections, sorted lexicographically.
    pub fn minimal_primitive_collections(&self) -> Vec<PrimitiveCollection> {
        let r = self.rays.len();
        assert!(r < 64, "too many rays for subset enumeration");
        let mut out = Vec::new();
        for mask in 1u64..(1u64 << r) {
            let idx: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            if self.in_common_cone(&idx) {
                continue;
            }
            let minimal = (0..idx.len()).all(|k| {
                let sub: Vec<usize> = idx.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &i)| i).collect();
                self.in_common_cone(&sub)
            });
            if minimal {
                out.push(PrimitiveCollection { rays: idx });
            }
        }
        out.sort();
        out
    }

    /// Inward facet normals of a cone of full dimension.
    fn cone_facets(&self, c: &Cone) -> Vec<IntVec> {
        let n = self.dim;
        let gens = self.generators(c);
        let mut out = BTreeSet::new();
        for idx in combinations(gens.len(), n.saturating_sub(1)) {
            let chosen: Vec<IntVec> = idx.iter().map(|&i| gens[i].clone()).collect();
            let m = IntMat::from_rows(chosen.len(), n, &chosen);
            let k = saturated_kernel_basis(&m);
            if k.cols() != 1 {
                continue;
            }
            let normal = k.column(0);
            let vals: Vec<BigInt> = gens.iter().map(|g| g.dot(&normal)).collect();
            let normal = if vals.iter().all(|v| !v.is_negative()) {
                normal
            } else if vals.iter().all(|v| !v.is_positive()) {
                normal.neg()
            } else {
                continue;
            };
            out.insert(normal);
        }
        out.into_iter().collect()
    }

    /// The smallest face of a maximal cone that contains `v` (exact test
    /// against the facet inequalities of each cone).
    pub fn smallest_containing_cone(&self, v: &IntVec) -> Result<Cone> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut best: Option<Cone> = None;
        for c in &self.max_cones {
            let gens = self.generators(c);
            if gens.len() < self.dim || rank(&IntMat::from_columns(self.dim, &gens)) < self.dim {
                continue;
            }
            let facets = self.cone_facets(c);
            if facets.iter().any(|f| v.dot(f).is_negative()) {
                continue;
            }
            let tight: Vec<&IntVec> = facets.iter().filter(|f| v.dot(f).is_zero()).collect();
            let face = Cone::new(
                c.rays.iter().copied().filter(|&i| tight.iter().all(|f| self.rays[i].dot(f).is_zero())).collect(),
            );
            if best.as_ref().is_none_or(|b| face.rays.len() < b.rays.len()) {
                best = Some(face);
            }
        }
        best.ok_or_else(|| Error::NotInSupport(v.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<IntVec> {
        v.iter().map(|p| IntVec::from_i64(p)).collect()
    }

    fn facets(p: &LatticePolytope) -> Vec<(Vec<i64>, i64)> {
        p.facets().iter().map(|f| (f.normal.to_i64().unwrap(), f.offset.clone().try_into().unwrap())).collect()
    }

    #[test]
    fn square_facets() {
        let sq = LatticePolytope::from_vertices(2, &pts(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])).unwrap();
        assert_eq!(facets(&sq), vec![(vec![1, 0], 0), (vec![0, 1], 0), (vec![-1, 0], 1), (vec![0, -1], 1)]);
        assert_eq!(sq.lattice_points().len(), 4);
    }

    #[test]
    fn interior_points_are_dropped() {
        let t =
            LatticePolytope::from_vertices(2, &pts(&[&[0, 0], &[2, 0], &[0, 2], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(t.vertices().len(), 3);
        assert_eq!(facets(&t), vec![(vec![1, 0], 0), (vec![0, 1], 0), (vec![-1, -1], 2)]);
        assert_eq!(t.lattice_points().len(), 6);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            LatticePolytope::from_vertices(2, &pts(&[&[0, 0], &[1, 1], &[2, 2]])),
            Err(Error::NotFullDimensional)
        );
        assert_eq!(LatticePolytope::from_vertices(4, &[]), Err(Error::UnsupportedDimension(4)));
        assert!(matches!(LatticePolytope::from_vertices(2, &pts(&[&[0, 0, 0]])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn segment_and_cube() {
        let seg = LatticePolytope::from_vertices(1, &pts(&[&[-1], &[3], &[0]])).unwrap();
        assert_eq!(facets(&seg), vec![(vec![-1], 3), (vec![1], 1)]);
        assert_eq!(seg.lattice_points().len(), 5);
        let cube: Vec<IntVec> = (0..8).map(|b| IntVec::from_i64(&[b & 1, b >> 1 & 1, b >> 2 & 1])).collect();
        let c = LatticePolytope::from_vertices(3, &cube).unwrap();
        assert_eq!(c.facets().len(), 6);
        let fan = c.normal_fan();
        assert_eq!(fan.max_cones().len(), 8);
        assert!(fan.is_smooth().smooth);
        assert_eq!(fan.minimal_primitive_collections().len(), 3);
    }

    #[test]
    fn octahedron_has_non_simplicial_cones() {
        let o = LatticePolytope::from_vertices(
            3,
            &pts(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]]),
        )
        .unwrap();
        assert_eq!(o.facets().len(), 8);
        let fan = o.normal_fan();
        let s = fan.is_smooth();
        assert!(!s.smooth);
        assert!(s.singular.iter().all(|c| c.determinant.is_none()));
        let c = fan.smallest_containing_cone(&IntVec::from_i64(&[1, 0, 0])).unwrap();
        assert_eq!(c.rays().len(), 4);
    }

    #[test]
    fn explicit_facets_keep_order_and_are_checked() {
        let v = pts(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        let f = |n: &[i64], a: i64| Facet { normal: IntVec::from_i64(n), offset: a.into() };
        let ordered = vec![f(&[1, 0], 0), f(&[-1, 0], 1), f(&[0, 1], 0), f(&[0, -1], 1)];
        let p = LatticePolytope::from_h_representation(2, &v, ordered.clone()).unwrap();
        assert_eq!(p.facets(), &ordered[..]);
        let mut wrong = ordered.clone();
        wrong[1] = f(&[-1, 0], 2);
        assert!(matches!(LatticePolytope::from_h_representation(2, &v, wrong), Err(Error::InvalidPolytope(_))));
        assert!(LatticePolytope::from_h_representation(2, &v, ordered[..3].to_vec()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = LatticePolytope::from_json_str(r#"{"dim": 2, "vertices": [[1,0],[0,1],[-1,0]]}"#).unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(LatticePolytope::from_json_str(&s).unwrap(), p);
        assert!(matches!(LatticePolytope::from_json_str("{"), Err(Error::Input(_))));
    }

    #[test]
    fn fan_validation() {
        let rays = pts(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let cones = vec![Cone::new(vec![0, 1]), Cone::new(vec![1, 2]), Cone::new(vec![0, 2])];
        let fan = Fan::new(2, rays.clone(), cones.clone()).unwrap();
        assert_eq!(Fan::from_json(&fan.to_json()).unwrap(), fan);
        assert!(Fan::new(2, pts(&[&[2, 0], &[0, 1], &[-1, -1]]), cones.clone()).is_err());
        assert!(Fan::new(2, pts(&[&[1, 0], &[-1, 0], &[0, 1]]), vec![Cone::new(vec![0, 1, 2])]).is_err());
    }
}
