//! Finitely presented categories: a quiver plus path relations.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::finite::{FiniteCategory, FiniteModel};
use super::path::{IPath, Path};
use super::rewriting::RewritingSystem;
use crate::error::{Error, Result};
use crate::DEFAULT_BUDGET;

/// Name given to the formal inverse of an invertible generator.
pub fn mate_name(generator: &str) -> String {
    format!("{generator}^-1")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub src: String,
    pub dst: String,
}

impl Generator {
    pub fn new(name: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        Generator {
            name: name.into(),
            src: src.into(),
            dst: dst.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: Path,
    pub rhs: Path,
}

impl Relation {
    pub fn new(lhs: Path, rhs: Path) -> Self {
        Relation { lhs, rhs }
    }
}

/// Objects and generating arrows, in declaration order.
#[derive(Debug, Clone)]
pub struct Quiver {
    objects: Vec<String>,
    generators: Vec<Generator>,
    object_index: HashMap<String, usize>,
    generator_index: HashMap<String, usize>,
    src: Vec<usize>,
    dst: Vec<usize>,
}

impl Quiver {
    pub fn new(objects: Vec<String>, generators: Vec<Generator>) -> Result<Self> {
        let mut object_index = HashMap::with_capacity(objects.len());
        for (i, o) in objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::DuplicateName(o.clone()));
            }
        }
        let mut generator_index = HashMap::with_capacity(generators.len());
        let mut src = Vec::with_capacity(generators.len());
        let mut dst = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if object_index.contains_key(&g.name) || generator_index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateName(g.name.clone()));
            }
            for endpoint in [&g.src, &g.dst] {
                if !object_index.contains_key(endpoint) {
                    return Err(Error::DanglingEndpoint {
                        generator: g.name.clone(),
                        endpoint: endpoint.clone(),
                    });
                }
            }
            src.push(object_index[&g.src]);
            dst.push(object_index[&g.dst]);
        }
        Ok(Quiver {
            objects,
            generators,
            object_index,
            generator_index,
            src,
            dst,
        })
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_index.get(name).copied()
    }

    pub(crate) fn src_of(&self, g: usize) -> usize {
        self.src[g]
    }

    pub(crate) fn dst_of(&self, g: usize) -> usize {
        self.dst[g]
    }

    pub(crate) fn resolve(&self, path: &Path) -> Result<IPath> {
        let at = self
            .object_index(&path.at)
            .ok_or_else(|| Error::UnknownObject(path.at.clone()))?;
        let mut word = Vec::with_capacity(path.gens.len());
        let mut cursor = at;
        for (position, name) in path.gens.iter().enumerate() {
            let g = self
                .generator_index(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            if self.src[g] != cursor {
                return Err(Error::NotComposable {
                    path: path.to_string(),
                    position,
                });
            }
            cursor = self.dst[g];
            word.push(g);
        }
        Ok(IPath { at, word })
    }

    pub(crate) fn path_of(&self, p: &IPath) -> Path {
        Path {
            at: self.objects[p.at].clone(),
            gens: p.word.iter().map(|&g| self.generators[g].name.clone()).collect(),
        }
    }

    pub(crate) fn ipath_dst(&self, p: &IPath) -> usize {
        p.word.last().map_or(p.at, |&g| self.dst[g])
    }

    /// Source and target object of a valid path.
    pub fn endpoints(&self, path: &Path) -> Result<(String, String)> {
        let ip = self.resolve(path)?;
        Ok((
            self.objects[ip.at].clone(),
            self.objects[self.ipath_dst(&ip)].clone(),
        ))
    }
}

/// A category presented by a finite quiver and path relations.
///
/// Generators marked invertible receive a formal mate `g^-1` (inserted right
/// after `g` in generator order) together with the two unit relations.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "PresentationJson", into = "PresentationJson")]
pub struct FpCategory {
    quiver: Quiver,
    relations: Vec<Relation>,
    resolved: Vec<(IPath, IPath)>,
    /// Declared invertible generator -> its mate.
    invertible: BTreeMap<String, String>,
    /// Per generator index: the mate index, in both directions.
    mates: Vec<Option<usize>>,
    /// Per generator index: false for auto-inserted mates.
    declared: Vec<bool>,
    rewriting: OnceLock<RewritingSystem>,
}

impl PartialEq for FpCategory {
    fn eq(&self, other: &Self) -> bool {
        self.quiver.objects == other.quiver.objects
            && self.quiver.generators == other.quiver.generators
            && self.relations == other.relations
            && self.invertible == other.invertible
    }
}

impl Eq for FpCategory {}

impl FpCategory {
    pub fn build(
        objects: Vec<String>,
        generators: Vec<Generator>,
        relations: Vec<Relation>,
        invertible: Vec<String>,
    ) -> Result<Self> {
        let declared_names: HashSet<&str> = generators.iter().map(|g| g.name.as_str()).collect();
        let mut marked = BTreeMap::new();
        for name in &invertible {
            if !declared_names.contains(name.as_str()) {
                return Err(Error::UnknownGenerator(name.clone()));
            }
            marked.insert(name.clone(), mate_name(name));
        }

        let mut expanded = Vec::with_capacity(generators.len() + marked.len());
        let mut declared = Vec::with_capacity(expanded.capacity());
        for g in generators {
            let mate = marked.get(&g.name).cloned();
            let (src, dst) = (g.src.clone(), g.dst.clone());
            expanded.push(g);
            declared.push(true);
            if let Some(m) = mate {
                expanded.push(Generator::new(m, dst, src));
                declared.push(false);
            }
        }
        let quiver = Quiver::new(objects, expanded)?;

        let mut mates = vec![None; quiver.generators.len()];
        for (g, m) in &marked {
            let gi = quiver.generator_index(g).expect("declared generator");
            let mi = quiver.generator_index(m).expect("inserted mate");
            mates[gi] = Some(mi);
            mates[mi] = Some(gi);
        }

        let mut resolved = Vec::with_capacity(relations.len());
        for (index, r) in relations.iter().enumerate() {
            let lhs = quiver.resolve(&r.lhs)?;
            let rhs = quiver.resolve(&r.rhs)?;
            if lhs.at != rhs.at || quiver.ipath_dst(&lhs) != quiver.ipath_dst(&rhs) {
                return Err(Error::NonParallelRelation {
                    index,
                    lhs: r.lhs.to_string(),
                    rhs: r.rhs.to_string(),
                });
            }
            resolved.push((lhs, rhs));
        }

        Ok(FpCategory {
            quiver,
            relations,
            resolved,
            invertible: marked,
            mates,
            declared,
            rewriting: OnceLock::new(),
        })
    }

    pub fn builder() -> FpBuilder {
        FpBuilder::default()
    }

    /// The category with no objects.
    pub fn empty() -> Self {
        FpCategory::build(vec![], vec![], vec![], vec![]).expect("empty presentation")
    }

    /// The terminal category 1, on the single object `pt`.
    pub fn terminal() -> Self {
        Self::discrete(["pt"])
    }

    pub fn discrete<I, S>(objects: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        FpCategory::build(objects.into_iter().map(Into::into).collect(), vec![], vec![], vec![])
            .expect("discrete presentation")
    }

    /// The free category on a single arrow `f: x -> y`.
    pub fn arrow() -> Self {
        FpCategory::builder()
            .objects(["x", "y"])
            .generator("f", "x", "y")
            .build()
            .expect("arrow presentation")
    }

    /// The integers as a one-object category: one invertible generator `a`.
    pub fn integers() -> Self {
        FpCategory::builder()
            .object("*")
            .generator("a", "*", "*")
            .invertible("a")
            .build()
            .expect("integer presentation")
    }

    /// The cyclic group of order `n` as a one-object category.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs positive order");
        FpCategory::builder()
            .object("*")
            .generator("a", "*", "*")
            .invertible("a")
            .relation(Path::new("*", vec!["a"; n]), Path::id("*"))
            .build()
            .expect("cyclic presentation")
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn objects(&self) -> &[String] {
        self.quiver.objects()
    }

    pub fn object_count(&self) -> usize {
        self.quiver.objects.len()
    }

    /// All generators, including inserted mates.
    pub fn generators(&self) -> &[Generator] {
        self.quiver.generators()
    }

    /// Generators as declared, without inserted mates.
    pub fn declared_generators(&self) -> impl Iterator<Item = &Generator> {
        self.quiver
            .generators
            .iter()
            .zip(&self.declared)
            .filter(|(_, &d)| d)
            .map(|(g, _)| g)
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.quiver.generator_index(name).map(|i| &self.quiver.generators[i])
    }

    pub fn has_object(&self, name: &str) -> bool {
        self.quiver.object_index(name).is_some()
    }

    /// User relations, as declared.
    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// User relations followed by the unit relations of every invertible generator.
    pub fn all_relations(&self) -> Vec<Relation> {
        let mut out = self.relations.clone();
        for (g, m) in &self.invertible {
            let gen = self.generator(g).expect("marked generator exists");
            out.push(Relation::new(
                Path::new(gen.src.clone(), [g.clone(), m.clone()]),
                Path::id(gen.src.clone()),
            ));
            out.push(Relation::new(
                Path::new(gen.dst.clone(), [m.clone(), g.clone()]),
                Path::id(gen.dst.clone()),
            ));
        }
        out
    }

    pub(crate) fn all_resolved_relations(&self) -> Vec<(IPath, IPath)> {
        let mut out = self.resolved.clone();
        for (gi, mate) in self.mates.iter().enumerate() {
            if let (Some(mi), true) = (mate, self.declared[gi]) {
                let s = self.quiver.src[gi];
                let d = self.quiver.dst[gi];
                out.push((IPath { at: s, word: vec![gi, *mi] }, IPath { at: s, word: vec![] }));
                out.push((IPath { at: d, word: vec![*mi, gi] }, IPath { at: d, word: vec![] }));
            }
        }
        out
    }

    /// Declared-invertible generators and their mates.
    pub fn invertible(&self) -> &BTreeMap<String, String> {
        &self.invertible
    }

    /// The formal inverse of a generator, if it has one (works in both directions).
    pub fn mate_of(&self, generator: &str) -> Option<&str> {
        let i = self.quiver.generator_index(generator)?;
        self.mates[i].map(|m| self.quiver.generators[m].name.as_str())
    }

    pub fn is_declared(&self, generator: &str) -> bool {
        self.quiver
            .generator_index(generator)
            .is_some_and(|i| self.declared[i])
    }

    /// The single-generator path of `name`.
    pub fn gen_path(&self, name: &str) -> Result<Path> {
        let g = self.generator(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        Ok(Path::new(g.src.clone(), [name]))
    }

    pub fn validate_path(&self, path: &Path) -> Result<()> {
        self.quiver.resolve(path).map(|_| ())
    }

    pub fn endpoints(&self, path: &Path) -> Result<(String, String)> {
        self.quiver.endpoints(path)
    }

    /// Concatenation `p ; q`.
    pub fn concat(&self, p: &Path, q: &Path) -> Result<Path> {
        let (_, pd) = self.endpoints(p)?;
        let (qs, _) = self.endpoints(q)?;
        if pd != qs {
            return Err(Error::NotComposable {
                path: format!("{p} ; {q}"),
                position: p.len(),
            });
        }
        let mut gens = p.gens.clone();
        gens.extend(q.gens.iter().cloned());
        Ok(Path { at: p.at.clone(), gens })
    }

    /// Formal inverse of a path built only from generators that have mates.
    pub fn formal_inverse(&self, p: &Path) -> Option<Path> {
        let (_, dst) = self.endpoints(p).ok()?;
        let gens = p
            .gens
            .iter()
            .rev()
            .map(|g| self.mate_of(g).map(str::to_string))
            .collect::<Option<Vec<_>>>()?;
        Some(Path { at: dst, gens })
    }

    /// Completion with the default rule budget, cached.
    pub fn rewriting(&self) -> &RewritingSystem {
        self.rewriting
            .get_or_init(|| RewritingSystem::complete(self, DEFAULT_BUDGET))
    }

    /// Knuth-Bendix completion with an explicit rule budget.
    pub fn complete(&self, budget: usize) -> RewritingSystem {
        if budget == DEFAULT_BUDGET {
            return self.rewriting().clone();
        }
        RewritingSystem::complete(self, budget)
    }

    /// Finite model with the default rule budget.
    pub fn to_finite(&self, bound: usize) -> Result<FiniteCategory> {
        self.rewriting().to_finite(bound)
    }

    pub fn finite_model(&self, bound: usize) -> Result<FiniteModel> {
        self.rewriting().finite_model(bound)
    }

    /// Decides equality of two parallel paths with the cached rewriting system.
    ///
    /// Equal normal forms always prove equality; unequal normal forms prove
    /// inequality only when the system is complete.
    pub fn paths_equal(&self, p: &Path, q: &Path) -> Result<bool> {
        let rs = self.rewriting();
        let a = rs.normalize(p)?;
        let b = rs.normalize(q)?;
        Ok(a.path == b.path)
    }

    /// All names (objects and generators, including mates).
    pub(crate) fn names(&self) -> impl Iterator<Item = &str> {
        self.objects()
            .iter()
            .map(String::as_str)
            .chain(self.generators().iter().map(|g| g.name.as_str()))
    }
}

#[derive(Debug, Default, Clone)]
pub struct FpBuilder {
    objects: Vec<String>,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    invertible: Vec<String>,
}

impl FpBuilder {
    pub fn object(mut self, name: impl Into<String>) -> Self {
        self.objects.push(name.into());
        self
    }

    pub fn objects<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.objects.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn generator(mut self, name: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        self.generators.push(Generator::new(name, src, dst));
        self
    }

    pub fn relation(mut self, lhs: Path, rhs: Path) -> Self {
        self.relations.push(Relation::new(lhs, rhs));
        self
    }

    pub fn invertible(mut self, name: impl Into<String>) -> Self {
        self.invertible.push(name.into());
        self
    }

    pub fn build(self) -> Result<FpCategory> {
        FpCategory::build(self.objects, self.generators, self.relations, self.invertible)
    }
}

/// Wire format of a presentation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationJson {
    pub objects: Vec<String>,
    #[serde(default)]
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub relations: Vec<Relation>,
    #[serde(default)]
    pub invertible: Vec<String>,
}

impl TryFrom<PresentationJson> for FpCategory {
    type Error = Error;

    fn try_from(p: PresentationJson) -> Result<Self> {
        FpCategory::build(p.objects, p.generators, p.relations, p.invertible)
    }
}

impl From<FpCategory> for PresentationJson {
    fn from(c: FpCategory) -> Self {
        PresentationJson {
            objects: c.objects().to_vec(),
            generators: c.declared_generators().cloned().collect(),
            relations: c.relations.clone(),
            invertible: c
                .declared_generators()
                .filter(|g| c.invertible.contains_key(&g.name))
                .map(|g| g.name.clone())
                .collect(),
        }
    }
}
