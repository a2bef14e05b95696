//! Maps of sheaves, the unit of sheafified constantification, the exotic
//! attaching map, and recognition of constant groupoid sheaves.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::presheaf::{global_sections, power_map, sheafify_constant, CatSheaf};
use super::space::FiniteSpace;
use crate::error::{Error, Result};
use crate::fpcat::{FinFunctor, FiniteCategory};
use crate::model::{all_functors, is_groupoid};
use crate::DEFAULT_SEARCH_BOUND;

/// One functor per open, commuting with the restrictions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SheafMap {
    pub source: CatSheaf,
    pub target: CatSheaf,
    /// Indexed like the opens of the space.
    pub components: Vec<FinFunctor>,
}

impl SheafMap {
    pub fn new(source: CatSheaf, target: CatSheaf, components: Vec<FinFunctor>) -> Result<Self> {
        let m = SheafMap {
            source,
            target,
            components,
        };
        m.check()?;
        Ok(m)
    }

    /// Endpoints and every naturality square.
    pub fn check(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidPresheaf(m));
        let space = self.source.space();
        if space != self.target.space() {
            return bad("source and target live on different spaces".into());
        }
        let (s, t) = (self.source.presheaf(), self.target.presheaf());
        if self.components.len() != space.opens().len() {
            return bad("one functor per open is required".into());
        }
        for (u, f) in self.components.iter().enumerate() {
            if f.source != s.sections()[u] || f.target != t.sections()[u] || !f.check() {
                return bad(format!("component at open {:?} is not a functor", space.names(space.opens()[u])));
            }
        }
        for (v, u) in space.inclusions() {
            let down_then = s.restriction(v, u).expect("inclusion").then(&self.components[v])?;
            let then_down = self.components[u].then(t.restriction(v, u).expect("inclusion"))?;
            if down_then != then_down {
                return bad(format!(
                    "naturality fails for {:?} <= {:?}",
                    space.names(space.opens()[v]),
                    space.names(space.opens()[u])
                ));
            }
        }
        Ok(())
    }

    /// Glues one functor `A -> B` per point into a map between the constant
    /// sheaves on `A` and `B`. The functors must agree on every connected open.
    pub fn from_points(a: &FiniteCategory, b: &FiniteCategory, space: &FiniteSpace, local: &[FinFunctor]) -> Result<Self> {
        if local.len() != space.points().len() {
            return Err(Error::InvalidPresheaf("one functor per point is required".into()));
        }
        let (fa, fb) = (sheafify_constant(a, space), sheafify_constant(b, space));
        let mut components = Vec::new();
        for (i, &u) in space.opens().iter().enumerate() {
            let mut factors = Vec::new();
            for c in space.connected_components(u)? {
                let first = c.trailing_zeros() as usize;
                let f = &local[first];
                if (0..space.points().len()).any(|x| c >> x & 1 == 1 && local[x] != *f) {
                    return Err(Error::InvalidPresheaf(format!(
                        "local functors disagree on the connected open {:?}",
                        space.names(c)
                    )));
                }
                factors.push(f);
            }
            let (s, t) = (fa.presheaf().sections()[i].clone(), fb.presheaf().sections()[i].clone());
            components.push(power_map(s, t, a, b, &factors));
        }
        Self::new(fa, fb, components)
    }

    /// The sheafification of a single functor.
    pub fn sheafified(g: &FinFunctor, space: &FiniteSpace) -> Result<Self> {
        let local = vec![g.clone(); space.points().len()];
        Self::from_points(&g.source, &g.target, space, &local)
    }
}

/// Inverse pair of functors between finite categories.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinIsoCertificate {
    pub forward: FinFunctor,
    pub inverse: FinFunctor,
}

impl FinIsoCertificate {
    /// Inverts a bijective functor.
    pub fn from_isomorphism(f: &FinFunctor) -> Option<Self> {
        if !f.check() || !f.is_isomorphism() {
            return None;
        }
        let invert = |m: &[usize], n: usize| {
            let mut out = vec![0; n];
            for (i, &j) in m.iter().enumerate() {
                out[j] = i;
            }
            out
        };
        let inverse = FinFunctor {
            source: f.target.clone(),
            target: f.source.clone(),
            object_map: invert(&f.object_map, f.target.object_count()),
            mor_map: invert(&f.mor_map, f.target.morphism_count()),
        };
        Some(FinIsoCertificate {
            forward: f.clone(),
            inverse,
        })
    }

    pub fn verify(&self) -> Result<()> {
        let there = self.forward.then(&self.inverse)?;
        let back = self.inverse.then(&self.forward)?;
        if !self.forward.check()
            || there != FinFunctor::identity(self.forward.source.clone())
            || back != FinFunctor::identity(self.forward.target.clone())
        {
            return Err(Error::CertificateRejected("functors are not mutually inverse".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
#[error("unit A -> Γ(#cA) is not an isomorphism: {source_objects} objects and {source_morphisms} morphisms against {target_objects} and {target_morphisms}")]
pub struct UnitFailure {
    pub source_objects: usize,
    pub source_morphisms: usize,
    pub target_objects: usize,
    pub target_morphisms: usize,
}

/// The diagonal `A -> A^{components of X}`, certified to be an isomorphism.
pub fn unit_check(a: &FiniteCategory, space: &FiniteSpace) -> std::result::Result<FinIsoCertificate, UnitFailure> {
    let sheaf = sheafify_constant(a, space);
    let gamma = global_sections(&sheaf);
    let k = space.connected_components(space.full()).expect("full set is open").len();
    let a = Arc::new(a.clone());
    let id = FinFunctor::identity(a.clone());
    let diagonal = power_map(a.clone(), gamma.clone(), &a, &a, &vec![&id; k]);
    let failure = UnitFailure {
        source_objects: a.object_count(),
        source_morphisms: a.morphism_count(),
        target_objects: gamma.object_count(),
        target_morphisms: gamma.morphism_count(),
    };
    if diagonal.target != gamma {
        return Err(failure);
    }
    FinIsoCertificate::from_isomorphism(&diagonal).ok_or(failure)
}

/// The outcome of the exotic attaching map construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExoticDemo {
    pub map: SheafMap,
    pub in_constant_image: bool,
}

/// Which functors to use on the two points of the discrete space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExoticVariant {
    /// Identity at `u`, constant at `0` at `v`.
    Exotic,
    /// Identity at both points.
    Identity,
    /// Constant at `0` at both points.
    Constant,
}

/// Over the discrete space on `{u, v}`, the self-map of the constant sheaf on
/// `S⁰ = {0, 1}` that is the identity at `u` and constant at `v`.
pub fn exotic_map_demo() -> ExoticDemo {
    exotic_variant(ExoticVariant::Exotic)
}

pub fn exotic_variant(variant: ExoticVariant) -> ExoticDemo {
    let s0 = Arc::new(FiniteCategory::discrete(["0", "1"]));
    let space = FiniteSpace::discrete(["u", "v"]);
    let id = FinFunctor::identity(s0.clone());
    let zero = FinFunctor::constant(s0.clone(), s0.clone(), 0);
    let local = match variant {
        ExoticVariant::Exotic => vec![id, zero],
        ExoticVariant::Identity => vec![id.clone(), id],
        ExoticVariant::Constant => vec![zero.clone(), zero],
    };
    let map = SheafMap::from_points(&s0, &s0, &space, &local).expect("points of a discrete space are separate");
    let in_constant_image = is_in_constant_image(&map).expect("both sides are constant sheaves");
    ExoticDemo { map, in_constant_image }
}

/// Whether `m` is the sheafification of one functor `A -> B`, by search over
/// all such functors.
pub fn is_in_constant_image(m: &SheafMap) -> Result<bool> {
    let (Some(a), Some(b)) = (m.source.constant_value(), m.target.constant_value()) else {
        return Err(Error::InvalidPresheaf("maps must go between constant sheaves".into()));
    };
    let space = m.source.space();
    for g in all_functors(a, b, DEFAULT_SEARCH_BOUND)? {
        if SheafMap::sheafified(&g, space)?.components == m.components {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CwSheafVerdict {
    Cw,
    /// The restriction or product comparison at this open is not an isomorphism.
    NotConstant { open: Vec<String> },
    /// Global sections have a non-invertible morphism.
    NotGroupoid { morphism: String },
}

/// Recognizes constant groupoid sheaves over a connected space.
///
/// With `G = F(X)`, the sheaf is constant when every restriction
/// `F(X) -> F(C)` to a nonempty connected open is an isomorphism and every
/// open's sections map isomorphically onto the product over its components.
pub fn classify_cw_sheaf(f: &CatSheaf) -> Result<CwSheafVerdict> {
    let space = f.space();
    if !space.is_connected() {
        return Err(Error::NotConnected);
    }
    let p = f.presheaf();
    let full = space.opens().len() - 1;
    let g = global_sections(f);
    let not_constant = |u: usize| CwSheafVerdict::NotConstant {
        open: space.names(space.opens()[u]),
    };
    // inverse of F(X) -> F(C) for every nonempty connected open C
    let mut back = vec![None; space.opens().len()];
    for (c, &u) in space.opens().iter().enumerate() {
        if u == 0 || space.connected_components(u)?.len() != 1 {
            continue;
        }
        match FinIsoCertificate::from_isomorphism(p.restriction(c, full).expect("inclusion")) {
            Some(cert) => back[c] = Some(cert.inverse),
            None => return Ok(not_constant(c)),
        }
    }
    for (i, &u) in space.opens().iter().enumerate() {
        let comps = space.connected_components(u)?;
        let to_g: Vec<FinFunctor> = comps
            .iter()
            .map(|&c| {
                let ci = space.open_index(c)?;
                p.restriction(ci, i).expect("inclusion").then(back[ci].as_ref().expect("connected open"))
            })
            .collect::<Result<_>>()?;
        let power = Arc::new(FiniteCategory::power(&g, comps.len()));
        let tuple = tuple_map(p.sections()[i].clone(), power, &g, &to_g);
        if !tuple.is_isomorphism() {
            return Ok(not_constant(i));
        }
    }
    if !is_groupoid(&g) {
        let bad = (0..g.morphism_count()).find(|&m| !g.is_iso(m)).expect("not a groupoid");
        return Ok(CwSheafVerdict::NotGroupoid {
            morphism: g.label(bad).to_string(),
        });
    }
    Ok(CwSheafVerdict::Cw)
}

/// The functor into `G^k` with components `fs`.
fn tuple_map(source: Arc<FiniteCategory>, target: Arc<FiniteCategory>, g: &FiniteCategory, fs: &[FinFunctor]) -> FinFunctor {
    let object_map = (0..source.object_count())
        .map(|x| fs.iter().fold(0, |acc, f| acc * g.object_count() + f.object_map[x]))
        .collect();
    let mor_map = (0..source.morphism_count())
        .map(|x| fs.iter().fold(0, |acc, f| acc * g.morphism_count() + f.mor_map[x]))
        .collect();
    FinFunctor::new(source, target, object_map, mor_map).expect("tuple stays in range")
}
