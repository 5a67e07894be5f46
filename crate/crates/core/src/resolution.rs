//! Minimal resolution of complete 2-dimensional fans and the virtual facet
//! hyperplanes of the added rays.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{compute_g, offsets_character, SubtorusDescription};
use crate::lattice::IntVec;
use crate::param::ToricModel;
use crate::polytope::{Cone, Fan, FanJson, LatticePolytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddedRay {
    /// Index of the ray in the resolved fan.
    pub index: usize,
    pub ray: IntVec,
    /// The cone of the original fan whose interior contains the ray.
    pub origin: Cone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedFan {
    pub fan: Fan,
    pub original_ray_count: usize,
    pub added: Vec<AddedRay>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualFacet {
    pub normal: IntVec,
    pub offset: BigInt,
    /// Vertices of Δ on the hyperplane `⟨m, normal⟩ + offset = 0`.
    pub face: Vec<IntVec>,
}

fn det2(a: &IntVec, b: &IntVec) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Interior boundary points of the hull of the nonzero lattice points of
/// the cone spanned by `g1, g2` (with `det(g1, g2) > 0`), from `g1` to `g2`.
pub fn hirzebruch_jung(g1: &IntVec, g2: &IntVec) -> Vec<IntVec> {
    let mut out = Vec::new();
    let mut u = g1.clone();
    loop {
        let d = det2(&u, g2);
        assert!(d.is_positive(), "cone generators must be counter-clockwise");
        if d.is_one() {
            return out;
        }
        // lattice points w with det(u, w) = 1 are w0 + t·u
        let e = u[0].extended_gcd(&u[1]);
        assert!(e.gcd.is_one(), "generators must be primitive");
        // u0·x + u1·y = 1  ⇒  det(u, (-y, x)) = u0·x + u1·y = 1
        let w0 = IntVec::new(vec![-e.y.clone(), e.x.clone()]);
        let c = det2(&w0, g2);
        // smallest t with det(w0 + t·u, g2) = c + t·d ≥ 0
        let t = (-c).div_ceil(&d);
        let w = w0.add(&u.scale(&t));
        if &w == g2 {
            return out;
        }
        out.push(w.clone());
        u = w;
    }
}

/// Subdivides every singular cone of a complete 2D fan by its
/// Hirzebruch–Jung sequence. New rays are appended after the original
/// ones, cone by cone, counter-clockwise within each cone.
pub fn minimal_resolution_2d(fan: &Fan) -> Result<ResolvedFan> {
    if fan.dim() != 2 {
        return Err(Error::UnsupportedDimension(fan.dim()));
    }
    let mut rays = fan.rays().to_vec();
    let mut cones = Vec::new();
    let mut added = Vec::new();
    for cone in fan.max_cones() {
        let idx = cone.rays();
        if idx.len() != 2 {
            return Err(Error::Input(format!("cone {} of a 2D fan must have two rays", cone.label())));
        }
        let (mut a, mut b) = (idx[0], idx[1]);
        if det2(&rays[a], &rays[b]).is_negative() {
            std::mem::swap(&mut a, &mut b);
        }
        let inserted = hirzebruch_jung(&rays[a], &rays[b]);
        let mut chain = vec![a];
        for w in inserted {
            let index = rays.len();
            rays.push(w.clone());
            added.push(AddedRay { index, ray: w, origin: cone.clone() });
            chain.push(index);
        }
        chain.push(b);
        for pair in chain.windows(2) {
            cones.push(Cone::new(pair.to_vec()));
        }
    }
    let resolved = Fan::new(2, rays, cones)?;
    Ok(ResolvedFan { fan: resolved, original_ray_count: fan.rays().len(), added })
}

/// `(ñ_i, ã_i)` for every ray of the refinement, with `ã_i = -min_v ⟨v, ñ_i⟩`.
pub fn virtual_offsets(p: &LatticePolytope, rf: &ResolvedFan) -> Result<Vec<VirtualFacet>> {
    let original = p.normal_fan();
    if rf.fan.dim() != p.dim()
        || rf.original_ray_count != original.rays().len()
        || rf.fan.rays()[..rf.original_ray_count] != *original.rays()
    {
        return Err(Error::NotARefinement);
    }
    for c in rf.fan.max_cones() {
        let mut idx = Vec::new();
        for g in rf.fan.generators(c) {
            idx.extend_from_slice(original.smallest_containing_cone(&g)?.rays());
        }
        if !original.in_common_cone(&idx) {
            return Err(Error::NotARefinement);
        }
    }
    let mut out = Vec::new();
    for ray in rf.fan.rays() {
        let min = p.vertices().iter().map(|v| v.dot(ray)).min().expect("nonempty polytope");
        let face = p.vertices().iter().filter(|v| v.dot(ray) == min).cloned().collect();
        out.push(VirtualFacet { normal: ray.clone(), offset: -min, face });
    }
    Ok(out)
}

/// Vertices of the face of Δ dual to a cone of its normal fan.
pub fn dual_face(p: &LatticePolytope, cone: &Cone) -> Vec<IntVec> {
    p.vertices().iter().filter(|v| cone.rays().iter().all(|&i| p.facets()[i].value(v).is_zero())).cloned().collect()
}

/// Exponents `⟨m, ñ_i⟩ + ã_i` over all rays of the refinement.
pub fn delta_monomial_resolved(p: &LatticePolytope, rf: &ResolvedFan, m: &IntVec) -> Result<IntVec> {
    resolved_model_from(p, rf)?.delta_monomial(m)
}

/// `G_{Δ,Σ}`: the kernel of `μ ↦ Π μ_i^{ã_i}` on the group of the refinement.
pub fn compute_g_delta_sigma(rf: &ResolvedFan, offsets: &[VirtualFacet]) -> Result<SubtorusDescription> {
    let a: Vec<BigInt> = offsets.iter().map(|f| f.offset.clone()).collect();
    compute_g(&rf.fan).kernel_of_character(&offsets_character(&a))
}

fn resolved_model_from(p: &LatticePolytope, rf: &ResolvedFan) -> Result<ToricModel> {
    let offsets = virtual_offsets(p, rf)?.into_iter().map(|f| f.offset).collect();
    ToricModel::with_fan(p, rf.fan.clone(), offsets, true)
}

/// The model of a polygon over the minimal resolution of its normal fan.
pub fn resolved_model(p: &LatticePolytope) -> Result<ToricModel> {
    let rf = minimal_resolution_2d(&p.normal_fan())?;
    resolved_model_from(p, &rf)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AddedRayJson {
    pub ray: IntVec,
    /// 1-based index in the resolved fan.
    pub index: usize,
    /// 1-based ray indices of the original cone.
    pub origin_cone: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VirtualFacetJson {
    pub normal: IntVec,
    #[serde(with = "crate::json::bigint")]
    pub offset: BigInt,
    pub face: Vec<IntVec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolvedFanJson {
    #[serde(flatten)]
    pub fan: FanJson,
    pub original_ray_count: usize,
    pub added_rays: Vec<AddedRayJson>,
    pub virtual_offsets: Vec<VirtualFacetJson>,
}

impl ResolvedFan {
    pub fn to_json(&self, offsets: &[VirtualFacet]) -> ResolvedFanJson {
        ResolvedFanJson {
            fan: self.fan.to_json(),
            original_ray_count: self.original_ray_count,
            added_rays: self
                .added
                .iter()
                .map(|a| AddedRayJson {
                    ray: a.ray.clone(),
                    index: a.index + 1,
                    origin_cone: a.origin.rays().iter().map(|i| i + 1).collect(),
                })
                .collect(),
            virtual_offsets: offsets
                .iter()
                .map(|f| VirtualFacetJson { normal: f.normal.clone(), offset: f.offset.clone(), face: f.face.clone() })
                .collect(),
        }
    }
}
