//! Functors at the presentation level and at the table level.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::finite::FiniteCategory;
use super::presentation::FpCategory;
use super::Path;
use crate::error::{Error, Result};

/// A functor between presented categories, given on objects and generators.
///
/// Mates of invertible generators may be omitted from `gen_map`; their image
/// is then the formal inverse of the image of the declared generator.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "FunctorJson", into = "FunctorJson")]
pub struct FpFunctor {
    source: Arc<FpCategory>,
    target: Arc<FpCategory>,
    object_map: BTreeMap<String, String>,
    gen_map: BTreeMap<String, Path>,
}

impl PartialEq for FpFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.object_map == other.object_map
            && self.gen_map == other.gen_map
    }
}

impl FpFunctor {
    /// Structural construction: every object and declared generator must be
    /// mapped and every image path must be valid in the target. Functoriality
    /// is checked separately by [`check`](Self::check).
    pub fn new(
        source: Arc<FpCategory>,
        target: Arc<FpCategory>,
        object_map: BTreeMap<String, String>,
        gen_map: BTreeMap<String, Path>,
    ) -> Result<Self> {
        for o in source.objects() {
            let image = object_map
                .get(o)
                .ok_or_else(|| Error::InvalidFunctor(format!("object `{o}` is not mapped")))?;
            if !target.has_object(image) {
                return Err(Error::UnknownObject(image.clone()));
            }
        }
        if let Some(extra) = object_map.keys().find(|o| !source.has_object(o)) {
            return Err(Error::UnknownObject(extra.clone()));
        }
        for g in source.declared_generators() {
            if !gen_map.contains_key(&g.name) {
                return Err(Error::InvalidFunctor(format!("generator `{}` is not mapped", g.name)));
            }
        }
        for (g, p) in &gen_map {
            if source.generator(g).is_none() {
                return Err(Error::UnknownGenerator(g.clone()));
            }
            target.validate_path(p)?;
        }
        Ok(FpFunctor {
            source,
            target,
            object_map,
            gen_map,
        })
    }

    /// Like [`new`](Self::new), but also requires [`check`](Self::check) to pass.
    pub fn checked(
        source: Arc<FpCategory>,
        target: Arc<FpCategory>,
        object_map: BTreeMap<String, String>,
        gen_map: BTreeMap<String, Path>,
    ) -> Result<Self> {
        let f = Self::new(source, target, object_map, gen_map)?;
        f.verify()?;
        Ok(f)
    }

    pub fn identity(cat: Arc<FpCategory>) -> Self {
        let object_map = cat.objects().iter().map(|o| (o.clone(), o.clone())).collect();
        let gen_map = cat
            .declared_generators()
            .map(|g| (g.name.clone(), Path::new(g.src.clone(), [g.name.clone()])))
            .collect();
        FpFunctor {
            target: cat.clone(),
            source: cat,
            object_map,
            gen_map,
        }
    }

    /// The unique functor to the terminal category.
    pub fn to_terminal(cat: Arc<FpCategory>) -> Self {
        Self::constant(cat, Arc::new(FpCategory::terminal()), "pt")
            .expect("terminal category has object pt")
    }

    /// Sends every object to `object` and every generator to its identity.
    pub fn constant(source: Arc<FpCategory>, target: Arc<FpCategory>, object: &str) -> Result<Self> {
        let object_map = source.objects().iter().map(|o| (o.clone(), object.to_string())).collect();
        let gen_map = source
            .declared_generators()
            .map(|g| (g.name.clone(), Path::id(object)))
            .collect();
        Self::new(source, target, object_map, gen_map)
    }

    pub fn source(&self) -> &Arc<FpCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FpCategory> {
        &self.target
    }

    pub fn object_map(&self) -> &BTreeMap<String, String> {
        &self.object_map
    }

    pub fn gen_map(&self) -> &BTreeMap<String, Path> {
        &self.gen_map
    }

    pub fn map_object(&self, o: &str) -> Result<&str> {
        self.object_map
            .get(o)
            .map(String::as_str)
            .ok_or_else(|| Error::UnknownObject(o.to_string()))
    }

    /// Image of a single generator, filling in mates by formal inversion.
    pub fn map_generator(&self, g: &str) -> Result<Path> {
        if let Some(p) = self.gen_map.get(g) {
            return Ok(p.clone());
        }
        let mate = self
            .source
            .mate_of(g)
            .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
        let image = self
            .gen_map
            .get(mate)
            .ok_or_else(|| Error::UnknownGenerator(mate.to_string()))?;
        self.target.formal_inverse(image).ok_or_else(|| {
            Error::InvalidFunctor(format!("image {image} of `{mate}` has no formal inverse"))
        })
    }

    pub fn map_path(&self, p: &Path) -> Result<Path> {
        self.source.validate_path(p)?;
        let mut out = Path::id(self.map_object(&p.at)?);
        for g in &p.gens {
            let image = self.map_generator(g)?;
            out.gens.extend(image.gens);
        }
        self.target.validate_path(&out)?;
        Ok(out)
    }

    /// Endpoint compatibility and preservation of every relation, including
    /// the unit relations of invertible generators.
    pub fn check(&self) -> bool {
        self.verify().is_ok()
    }

    /// Like [`check`](Self::check), reporting the first failure.
    pub fn verify(&self) -> Result<()> {
        for g in self.source.generators() {
            let image = self.map_generator(&g.name)?;
            let (s, d) = self.target.endpoints(&image)?;
            if s != self.object_map[&g.src] || d != self.object_map[&g.dst] {
                return Err(Error::InvalidFunctor(format!(
                    "image {image} of `{}` runs {s} -> {d}, expected {} -> {}",
                    g.name, self.object_map[&g.src], self.object_map[&g.dst]
                )));
            }
        }
        for r in self.source.all_relations() {
            let (l, rr) = (self.map_path(&r.lhs)?, self.map_path(&r.rhs)?);
            if !self.target.paths_equal(&l, &rr)? {
                return Err(Error::InvalidFunctor(format!(
                    "relation {} = {} maps to {l} != {rr}",
                    r.lhs, r.rhs
                )));
            }
        }
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &FpFunctor) -> Result<FpFunctor> {
        if *self.target != *other.source {
            return Err(Error::InvalidFunctor("functors are not composable".into()));
        }
        let object_map = self
            .object_map
            .iter()
            .map(|(o, t)| Ok((o.clone(), other.map_object(t)?.to_string())))
            .collect::<Result<_>>()?;
        let gen_map = self
            .source
            .generators()
            .iter()
            .map(|g| Ok((g.name.clone(), other.map_path(&self.map_generator(&g.name)?)?)))
            .collect::<Result<_>>()?;
        FpFunctor::new(self.source.clone(), other.target.clone(), object_map, gen_map)
    }

    /// Injective on objects.
    pub fn is_cofibration(&self) -> bool {
        let mut seen = HashSet::new();
        self.object_map.values().all(|t| seen.insert(t))
    }

    /// Table-level functor between the finite models of source and target.
    pub fn to_finite(&self, bound: usize) -> Result<FinFunctor> {
        let src = self.source.finite_model(bound)?;
        let dst = self.target.finite_model(bound)?;
        let object_map = self
            .source
            .objects()
            .iter()
            .map(|o| dst.cat.object_index(&self.object_map[o]).expect("mapped object exists"))
            .collect();
        let mor_map = src
            .paths()
            .iter()
            .map(|p| dst.morphism_of(&self.map_path(p)?))
            .collect::<Result<_>>()?;
        FinFunctor::new(Arc::new(src.cat), Arc::new(dst.cat), object_map, mor_map)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorJson {
    pub source: FpCategory,
    pub target: FpCategory,
    pub object_map: BTreeMap<String, String>,
    pub gen_map: BTreeMap<String, Path>,
}

impl TryFrom<FunctorJson> for FpFunctor {
    type Error = Error;

    fn try_from(j: FunctorJson) -> Result<Self> {
        FpFunctor::new(Arc::new(j.source), Arc::new(j.target), j.object_map, j.gen_map)
    }
}

impl From<FpFunctor> for FunctorJson {
    fn from(f: FpFunctor) -> Self {
        FunctorJson {
            source: (*f.source).clone(),
            target: (*f.target).clone(),
            object_map: f.object_map,
            gen_map: f.gen_map,
        }
    }
}

/// A functor between finite categories, given on object and morphism indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FinFunctor {
    pub source: Arc<FiniteCategory>,
    pub target: Arc<FiniteCategory>,
    pub object_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

impl FinFunctor {
    /// Checks sizes and index ranges only; see [`check`](Self::check).
    pub fn new(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        object_map: Vec<usize>,
        mor_map: Vec<usize>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() || mor_map.len() != source.morphism_count() {
            return Err(Error::InvalidFunctor("map sizes do not match the source".into()));
        }
        if object_map.iter().any(|&o| o >= target.object_count())
            || mor_map.iter().any(|&f| f >= target.morphism_count())
        {
            return Err(Error::InvalidFunctor("image index out of range".into()));
        }
        Ok(FinFunctor {
            source,
            target,
            object_map,
            mor_map,
        })
    }

    pub fn identity(cat: Arc<FiniteCategory>) -> Self {
        let object_map = (0..cat.object_count()).collect();
        let mor_map = (0..cat.morphism_count()).collect();
        FinFunctor {
            target: cat.clone(),
            source: cat,
            object_map,
            mor_map,
        }
    }

    /// Everything to object `x` of `target` and its identity.
    pub fn constant(source: Arc<FiniteCategory>, target: Arc<FiniteCategory>, x: usize) -> Self {
        let id = target.identity(x);
        FinFunctor {
            object_map: vec![x; source.object_count()],
            mor_map: vec![id; source.morphism_count()],
            source,
            target,
        }
    }

    pub fn to_terminal(source: Arc<FiniteCategory>) -> Self {
        Self::constant(source, Arc::new(FiniteCategory::terminal()), 0)
    }

    /// Endpoints, identities and composition are all preserved.
    pub fn check(&self) -> bool {
        let (s, t) = (&*self.source, &*self.target);
        let endpoints = (0..s.morphism_count()).all(|f| {
            let g = self.mor_map[f];
            t.src(g) == self.object_map[s.src(f)] && t.dst(g) == self.object_map[s.dst(f)]
        });
        let identities = (0..s.object_count()).all(|x| self.mor_map[s.identity(x)] == t.identity(self.object_map[x]));
        endpoints
            && identities
            && (0..s.morphism_count()).all(|f| {
                s.hom_from(s.dst(f)).into_iter().all(|g| {
                    let fg = s.compose(f, g).expect("composable");
                    t.compose(self.mor_map[f], self.mor_map[g]) == Some(self.mor_map[fg])
                })
            })
    }

    pub fn then(&self, other: &FinFunctor) -> Result<FinFunctor> {
        if *self.target != *other.source {
            return Err(Error::InvalidFunctor("functors are not composable".into()));
        }
        FinFunctor::new(
            self.source.clone(),
            other.target.clone(),
            self.object_map.iter().map(|&o| other.object_map[o]).collect(),
            self.mor_map.iter().map(|&f| other.mor_map[f]).collect(),
        )
    }

    pub fn is_cofibration(&self) -> bool {
        let mut seen = HashSet::new();
        self.object_map.iter().all(|t| seen.insert(t))
    }

    /// Bijective on objects and on morphisms.
    pub fn is_isomorphism(&self) -> bool {
        let bij = |m: &[usize], n: usize| m.len() == n && m.iter().collect::<HashSet<_>>().len() == n;
        bij(&self.object_map, self.target.object_count()) && bij(&self.mor_map, self.target.morphism_count())
    }
}
