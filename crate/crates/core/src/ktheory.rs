//! Pointed categories, the cone functor, suspension and K0-vanishing witnesses.
//!
//! The cone of a pointed category is the chaotic category on its objects and
//! the suspension is the pushout of the cone unit along the collapse to the
//! point. A [`K0Witness`] records the two cofiber sequences
//! `X -> PX -> ΣX` and `ΣX -> PΣX -> Σ²X` together with contractibility of
//! both cones and the identification `Σ²X ≅ 1`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::colimits::{chaotic, chaotic_arrow, pushout, PushoutResult};
use crate::error::{Error, Result};
use crate::fpcat::{FiniteCategory, FinFunctor, FpCategory, FpFunctor, Path};
use crate::model::{find_inverse, is_equivalence, EquivalenceCertificate, IsoCertificate};

/// Longest normal form tried when searching for inverse functors.
pub const INVERSE_LENGTH: usize = 4;

const SCOPE_NOTE: &str = "closure under cofibers and pushouts is checked only for the categories in this witness";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PointedJson", into = "PointedJson")]
pub struct PointedCategory {
    cat: Arc<FpCategory>,
    basepoint: String,
}

#[derive(Serialize, Deserialize)]
struct PointedJson {
    cat: Arc<FpCategory>,
    basepoint: String,
}

impl TryFrom<PointedJson> for PointedCategory {
    type Error = Error;
    fn try_from(p: PointedJson) -> Result<Self> {
        PointedCategory::new(p.cat, p.basepoint)
    }
}

impl From<PointedCategory> for PointedJson {
    fn from(p: PointedCategory) -> Self {
        PointedJson {
            cat: p.cat,
            basepoint: p.basepoint,
        }
    }
}

impl PointedCategory {
    pub fn new(cat: Arc<FpCategory>, basepoint: impl Into<String>) -> Result<Self> {
        let basepoint = basepoint.into();
        if !cat.has_object(&basepoint) {
            return Err(Error::UnknownObject(basepoint));
        }
        Ok(PointedCategory { cat, basepoint })
    }

    /// Pointed at the first object.
    pub fn at_first(cat: Arc<FpCategory>) -> Result<Self> {
        let first = cat.objects().first().cloned().ok_or(Error::EmptySet)?;
        Self::new(cat, first)
    }

    pub fn from_finite(cat: &FiniteCategory, basepoint: &str) -> Result<Self> {
        Self::new(Arc::new(cat.to_presentation()), basepoint)
    }

    pub fn terminal() -> Self {
        Self::new(Arc::new(FpCategory::terminal()), "pt").expect("pt is an object")
    }

    pub fn cat(&self) -> &Arc<FpCategory> {
        &self.cat
    }

    pub fn basepoint(&self) -> &str {
        &self.basepoint
    }
}

/// The chaotic category on the objects of `cat`.
pub fn cone_of(cat: &FpCategory) -> Result<FpCategory> {
    chaotic(cat.objects().iter().cloned())
}

pub fn cone(x: &PointedCategory) -> PointedCategory {
    let cat = Arc::new(cone_of(&x.cat).expect("pointed categories are nonempty"));
    PointedCategory {
        cat,
        basepoint: x.basepoint.clone(),
    }
}

fn index_of(cat: &FpCategory, o: &str) -> usize {
    cat.objects().iter().position(|p| p == o).expect("object of the presentation")
}

/// Identity on objects, each generator to the parallel chaotic arrow.
pub fn cone_unit(x: &PointedCategory) -> FpFunctor {
    cone_unit_into(&x.cat, Arc::new(cone_of(&x.cat).expect("pointed categories are nonempty")))
}

fn cone_unit_into(cat: &Arc<FpCategory>, cone: Arc<FpCategory>) -> FpFunctor {
    let objects = cone.objects().to_vec();
    let object_map = cat.objects().iter().map(|o| (o.clone(), o.clone())).collect();
    let gen_map = cat
        .declared_generators()
        .map(|g| {
            let p = chaotic_arrow(&objects, index_of(&cone, &g.src), index_of(&cone, &g.dst));
            (g.name.clone(), p)
        })
        .collect();
    FpFunctor::new(cat.clone(), cone, object_map, gen_map).expect("cone unit is well formed")
}

/// The cone of a functor: `x->y` goes to the chaotic arrow `f(x) -> f(y)`.
pub fn cone_map(f: &FpFunctor) -> Result<FpFunctor> {
    let source = Arc::new(cone_of(f.source())?);
    let target = Arc::new(cone_of(f.target())?);
    let objects = target.objects().to_vec();
    let gen_map = source
        .declared_generators()
        .map(|g| {
            let (a, b) = (f.map_object(&g.src)?, f.map_object(&g.dst)?);
            Ok((g.name.clone(), chaotic_arrow(&objects, index_of(&target, a), index_of(&target, b))))
        })
        .collect::<Result<_>>()?;
    FpFunctor::new(source, target, f.object_map().clone(), gen_map)
}

/// The suspension pushout `PX ⊔_X 1` with the new basepoint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Suspension {
    pub pushout: PushoutResult,
    pub result: PointedCategory,
}

pub fn suspension(x: &PointedCategory) -> Result<Suspension> {
    let unit = cone_unit(x);
    let collapse = FpFunctor::to_terminal(x.cat.clone());
    let p = pushout(&unit, &collapse)?;
    let basepoint = p.inj_left.map_object(&x.basepoint)?.to_string();
    let result = PointedCategory::new(p.apex.clone(), basepoint)?;
    Ok(Suspension { pushout: p, result })
}

pub fn suspend(x: &PointedCategory) -> Result<PointedCategory> {
    Ok(suspension(x)?.result)
}

/// A presentation of the terminal category: one object, nothing else.
pub fn is_literally_terminal(c: &FpCategory) -> bool {
    c.object_count() == 1 && c.generators().is_empty() && c.relations().is_empty()
}

/// `Σ²X` together with an inverse pair of functors `Σ²X ⇄ 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DoubleSuspension {
    pub suspension: PointedCategory,
    pub double_suspension: PointedCategory,
    pub terminal: IsoCertificate,
}

pub fn verify_double_suspension(x: &PointedCategory) -> Result<DoubleSuspension> {
    let s1 = suspend(x)?;
    let s2 = suspend(&s1)?;
    if !is_literally_terminal(s2.cat()) {
        return Err(Error::CertificateRejected("second suspension has generators or relations".into()));
    }
    let terminal = terminal_iso(s2.cat())?;
    Ok(DoubleSuspension {
        suspension: s1,
        double_suspension: s2,
        terminal,
    })
}

fn terminal_iso(c: &Arc<FpCategory>) -> Result<IsoCertificate> {
    let collapse = FpFunctor::to_terminal(c.clone());
    find_inverse(&collapse, INVERSE_LENGTH)?
        .ok_or_else(|| Error::CertificateRejected("category is not isomorphic to the terminal category".into()))
}

/// Evidence that `A -i-> B -q-> C` is a cofiber sequence: `i` is a
/// cofibration and the comparison `B ⊔_A 1 -> C` induced by `q` is an
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CofiberCertificate {
    pub i: FpFunctor,
    pub q: FpFunctor,
    pub pushout: PushoutResult,
    pub comparison: IsoCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
pub enum CofiberFailure {
    #[error("maps are not composable")]
    NotComposable,
    #[error("{which} is not a functor")]
    NotFunctor { which: String },
    #[error("first map is not injective on objects")]
    NotCofibration,
    #[error("composite does not collapse the source at {at}")]
    NotCollapsing { at: String },
    #[error("comparison from the pushout is not an isomorphism")]
    ComparisonNotIso,
}

/// Recognizes a cofiber sequence; computation errors (for instance an
/// incomplete rewriting system) are reported in the outer result.
pub fn is_cofiber_sequence(
    i: &FpFunctor,
    q: &FpFunctor,
) -> Result<std::result::Result<CofiberCertificate, CofiberFailure>> {
    if **i.target() != **q.source() {
        return Ok(Err(CofiberFailure::NotComposable));
    }
    for (which, f) in [("first map", i), ("second map", q)] {
        if !f.check() {
            return Ok(Err(CofiberFailure::NotFunctor { which: which.into() }));
        }
    }
    if !i.is_cofibration() {
        return Ok(Err(CofiberFailure::NotCofibration));
    }
    let (a, c) = (i.source(), q.target());
    let composite = i.then(q)?;
    let Some(point) = a.objects().first().map(|o| composite.map_object(o)) else {
        // B ⊔_∅ 1 = B ⊔ 1 never collapses onto anything determined by q
        return Ok(Err(CofiberFailure::NotCollapsing { at: "empty source".into() }));
    };
    let point = point?.to_string();
    for o in a.objects() {
        if composite.map_object(o)? != point {
            return Ok(Err(CofiberFailure::NotCollapsing { at: o.clone() }));
        }
    }
    for g in a.generators() {
        if !c.paths_equal(&composite.map_generator(&g.name)?, &Path::id(point.clone()))? {
            return Ok(Err(CofiberFailure::NotCollapsing { at: g.name.clone() }));
        }
    }
    let p = pushout(i, &FpFunctor::to_terminal(a.clone()))?;
    let phi = comparison(&p, q, &point)?;
    Ok(match find_inverse(&phi, INVERSE_LENGTH)? {
        Some(comparison) => Ok(CofiberCertificate {
            i: i.clone(),
            q: q.clone(),
            pushout: p,
            comparison,
        }),
        None => Err(CofiberFailure::ComparisonNotIso),
    })
}

fn comparison(p: &PushoutResult, q: &FpFunctor, point: &str) -> Result<FpFunctor> {
    let to_point = FpFunctor::constant(Arc::new(FpCategory::terminal()), q.target().clone(), point)?;
    p.mediating(q, &to_point)
}

impl CofiberCertificate {
    /// Replays every check from the stored data.
    pub fn verify(&self) -> Result<()> {
        let reject = |m: &str| Err(Error::CertificateRejected(m.into()));
        self.i.verify()?;
        self.q.verify()?;
        if !self.i.is_cofibration() {
            return reject("first map is not a cofibration");
        }
        if **self.i.target() != **self.q.source() {
            return reject("maps are not composable");
        }
        let collapse = FpFunctor::to_terminal(self.i.source().clone());
        if self.pushout.from_span.left != self.i || self.pushout.from_span.right != collapse {
            return reject("pushout is not taken along the collapse");
        }
        let fresh = pushout(&self.i, &collapse)?;
        if fresh != self.pushout {
            return reject("stored pushout differs from the recomputed one");
        }
        self.pushout.verify()?;
        let point = self.comparison.forward.map_object(self.pushout.inj_right.map_object("pt")?)?;
        if self.comparison.forward != comparison(&self.pushout, &self.q, point)? {
            return reject("comparison is not induced by the second map");
        }
        self.comparison.verify()
    }
}

/// Evidence that a presented category is contractible: its finite model has
/// every hom-set a singleton, so the functor to 1 is an equivalence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContractibilityCertificate {
    pub cat: Arc<FpCategory>,
    pub model: Arc<FiniteCategory>,
    pub equivalence: EquivalenceCertificate,
}

impl ContractibilityCertificate {
    pub fn new(cat: Arc<FpCategory>) -> Result<Self> {
        let model = Arc::new(cat.to_finite(1)?);
        let equivalence = is_equivalence(&FinFunctor::to_terminal(model.clone()))
            .map_err(|e| Error::CertificateRejected(e.to_string()))?;
        Ok(ContractibilityCertificate {
            cat,
            model,
            equivalence,
        })
    }

    pub fn verify(&self) -> Result<()> {
        if self.cat.to_finite(1)? != *self.model {
            return Err(Error::CertificateRejected("finite model does not match".into()));
        }
        self.equivalence.verify(&FinFunctor::to_terminal(self.model.clone()))
    }
}

/// A replayable proof that `[X] = 0` in K0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct K0Witness {
    pub x: PointedCategory,
    pub suspension: PointedCategory,
    pub double_suspension: PointedCategory,
    pub cert1: CofiberCertificate,
    pub cert2: CofiberCertificate,
    pub contract_px: ContractibilityCertificate,
    pub contract_psx: ContractibilityCertificate,
    pub terminal: IsoCertificate,
    pub scope: String,
}

fn cofiber_of_cone(x: &PointedCategory) -> Result<(Suspension, CofiberCertificate)> {
    let s = suspension(x)?;
    let cert = is_cofiber_sequence(&s.pushout.from_span.left, &s.pushout.inj_left)?
        .map_err(|e| Error::CertificateRejected(e.to_string()))?;
    Ok((s, cert))
}

pub fn k0_vanishing_witness(x: &PointedCategory) -> Result<K0Witness> {
    let (s1, cert1) = cofiber_of_cone(x)?;
    let (s2, cert2) = cofiber_of_cone(&s1.result)?;
    let contract_px = ContractibilityCertificate::new(cert1.i.target().clone())?;
    let contract_psx = ContractibilityCertificate::new(cert2.i.target().clone())?;
    let terminal = terminal_iso(s2.result.cat())?;
    let w = K0Witness {
        x: x.clone(),
        suspension: s1.result,
        double_suspension: s2.result,
        cert1,
        cert2,
        contract_px,
        contract_psx,
        terminal,
        scope: SCOPE_NOTE.into(),
    };
    w.verify()?;
    Ok(w)
}

impl K0Witness {
    /// Checks the five sub-certificates and how they fit together.
    pub fn verify(&self) -> Result<()> {
        let reject = |m: &str| Err(Error::CertificateRejected(m.into()));
        let links = [
            (self.cert1.i.source(), self.x.cat(), "first sequence does not start at X"),
            (self.cert1.q.target(), self.suspension.cat(), "first sequence does not end at ΣX"),
            (self.cert2.i.source(), self.suspension.cat(), "second sequence does not start at ΣX"),
            (self.cert2.q.target(), self.double_suspension.cat(), "second sequence does not end at Σ²X"),
            (&self.contract_px.cat, self.cert1.i.target(), "contracted category is not PX"),
            (&self.contract_psx.cat, self.cert2.i.target(), "contracted category is not PΣX"),
            (self.terminal.forward.source(), self.double_suspension.cat(), "terminal iso is not about Σ²X"),
        ];
        for (a, b, msg) in links {
            if **a != **b {
                return reject(msg);
            }
        }
        if **self.terminal.forward.target() != FpCategory::terminal() {
            return reject("terminal iso does not target 1");
        }
        let cone_x = cone_unit_into(self.x.cat(), self.cert1.i.target().clone());
        let cone_sx = cone_unit_into(self.suspension.cat(), self.cert2.i.target().clone());
        if self.cert1.i != cone_x || self.cert2.i != cone_sx {
            return reject("cofibrations are not cone units");
        }
        if **self.cert1.i.target() != cone_of(self.x.cat())? || **self.cert2.i.target() != cone_of(self.suspension.cat())? {
            return reject("cone is not the chaotic category on the objects");
        }
        self.cert1.verify()?;
        self.cert2.verify()?;
        self.contract_px.verify()?;
        self.contract_psx.verify()?;
        self.terminal.verify()
    }

    /// Recomputes the witness from `x` and compares serialized forms byte for byte.
    pub fn replay(&self) -> Result<()> {
        self.verify()?;
        let fresh = k0_vanishing_witness(&self.x)?;
        let (a, b) = (serde_json::to_string(self), serde_json::to_string(&fresh));
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => Ok(()),
            _ => Err(Error::CertificateRejected("recomputed witness differs".into())),
        }
    }
}

/// The comparison `P(B) ⊔_{P(A)} P(C) -> P(B ⊔_A C)` for a span `B <-f- A -g-> C`,
/// with an inverse when one is found.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConeComparison {
    pub original: PushoutResult,
    pub of_cones: PushoutResult,
    pub gamma: FpFunctor,
    pub iso: Option<IsoCertificate>,
}

pub fn cone_preserves_pushout(f: &FpFunctor, g: &FpFunctor) -> Result<ConeComparison> {
    let original = pushout(f, g)?;
    let of_cones = pushout(&cone_map(f)?, &cone_map(g)?)?;
    let gamma = of_cones.mediating(&cone_map(&original.inj_left)?, &cone_map(&original.inj_right)?)?;
    let iso = find_inverse(&gamma, INVERSE_LENGTH)?;
    Ok(ConeComparison {
        original,
        of_cones,
        gamma,
        iso,
    })
}

/// `f` goes between the underlying categories and sends basepoint to basepoint.
pub fn is_pointed(f: &FpFunctor, source: &PointedCategory, target: &PointedCategory) -> bool {
    **f.source() == **source.cat()
        && **f.target() == **target.cat()
        && f.map_object(source.basepoint()).is_ok_and(|o| o == target.basepoint())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::is_contractible_fp;
    use crate::Error;

    fn s0() -> PointedCategory {
        PointedCategory::at_first(Arc::new(FpCategory::discrete(["n", "s"]))).unwrap()
    }

    fn pointed(c: FpCategory) -> PointedCategory {
        PointedCategory::at_first(Arc::new(c)).unwrap()
    }

    #[test]
    fn basepoint_must_be_an_object() {
        let e = PointedCategory::new(Arc::new(FpCategory::terminal()), "q").unwrap_err();
        assert_eq!(e, Error::UnknownObject("q".into()));
        assert_eq!(PointedCategory::at_first(Arc::new(FpCategory::empty())).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn cone_examples() {
        let c = cone(&s0());
        assert_eq!(c.cat().object_count(), 2);
        assert_eq!(c.cat().to_finite(8).unwrap().morphism_count(), 4);
        assert_eq!(c.basepoint(), "n");
        assert_eq!(*cone(&PointedCategory::terminal()).cat().as_ref(), FpCategory::terminal());
        let cz = cone(&pointed(FpCategory::integers()));
        assert_eq!(cz.cat().to_finite(8).unwrap().morphism_count(), 1);
    }

    #[test]
    fn cone_unit_examples() {
        let u = cone_unit(&pointed(FpCategory::arrow()));
        u.verify().unwrap();
        assert!(u.is_cofibration());
        assert_eq!(u.gen_map()["f"], Path::new("x", ["x->y"]));
        let t = cone_unit(&PointedCategory::terminal());
        assert_eq!(t, FpFunctor::identity(Arc::new(FpCategory::terminal())));
    }

    #[test]
    fn suspension_examples() {
        let z = suspend(&s0()).unwrap();
        assert_eq!(z.cat().object_count(), 1);
        assert_eq!(z.basepoint(), "n");
        assert!(matches!(z.cat().to_finite(16), Err(Error::NotFinite { .. })));
        assert!(is_literally_terminal(suspend(&PointedCategory::terminal()).unwrap().cat()));
        let sz = suspend(&pointed(FpCategory::integers())).unwrap();
        assert!(is_contractible_fp(sz.cat()).unwrap());
    }

    #[test]
    fn double_suspension_is_terminal() {
        for x in [s0(), pointed(FpCategory::arrow()), PointedCategory::terminal()] {
            let d = verify_double_suspension(&x).unwrap();
            assert!(is_literally_terminal(d.double_suspension.cat()));
            d.terminal.verify().unwrap();
        }
    }

    #[test]
    fn cofiber_sequence_examples() {
        let x = s0();
        let s = suspension(&x).unwrap();
        let cert = is_cofiber_sequence(&cone_unit(&x), &s.pushout.inj_left).unwrap().unwrap();
        cert.verify().unwrap();

        // C2 -> Z sending n->s to the generator
        let z = Arc::new(FpCategory::integers());
        let c2 = cone(&x).cat().clone();
        let q = FpFunctor::new(
            c2,
            z,
            [("n", "*"), ("s", "*")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            [("n->s".to_string(), Path::new("*", ["a"]))].into(),
        )
        .unwrap();
        assert!(is_cofiber_sequence(&cone_unit(&x), &q).unwrap().is_ok());

        // the identity followed by the collapse always gives the point
        let id = FpFunctor::identity(x.cat().clone());
        assert!(is_cofiber_sequence(&id, &FpFunctor::to_terminal(x.cat().clone())).unwrap().is_ok());

        let fold = FpFunctor::to_terminal(x.cat().clone());
        let after = FpFunctor::identity(Arc::new(FpCategory::terminal()));
        assert_eq!(is_cofiber_sequence(&fold, &after).unwrap().unwrap_err(), CofiberFailure::NotCofibration);
    }

    #[test]
    fn wrong_target_is_not_a_cofiber() {
        // S0 -> C2 -> 1 misses the loop of the suspension
        let x = s0();
        let c2 = cone(&x).cat().clone();
        let q = FpFunctor::to_terminal(c2);
        assert_eq!(
            is_cofiber_sequence(&cone_unit(&x), &q).unwrap().unwrap_err(),
            CofiberFailure::ComparisonNotIso
        );
    }

    #[test]
    fn k0_witness_replays() {
        for x in [s0(), pointed(FpCategory::arrow()), pointed(FpCategory::cyclic(2)), pointed(FpCategory::integers())] {
            let w = k0_vanishing_witness(&x).unwrap();
            w.replay().unwrap();
            let json = serde_json::to_string(&w).unwrap();
            let back: K0Witness = serde_json::from_str(&json).unwrap();
            back.verify().unwrap();
            assert_eq!(serde_json::to_string(&back).unwrap(), json);
        }
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let mut w = k0_vanishing_witness(&s0()).unwrap();
        w.suspension = PointedCategory::terminal();
        assert!(w.verify().is_err());
    }

    #[test]
    fn cone_commutes_with_a_pushout() {
        let s = s0();
        let inc = cone_unit(&s);
        let collapse = FpFunctor::to_terminal(s.cat().clone());
        let c = cone_preserves_pushout(&inc, &collapse).unwrap();
        c.iso.expect("gamma is invertible").verify().unwrap();
    }
}
