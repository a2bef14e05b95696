//! Explicit finite categories: object list, morphism list, composition table.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::path::IPath;
use super::presentation::{FpCategory, Generator, Relation};
use super::rewriting::RewritingSystem;
use super::Path;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Morphism {
    pub label: String,
    pub src: usize,
    pub dst: usize,
}

/// A finite category with diagrammatic composition: `compose(f, g)` is
/// "first `f`, then `g`" and is defined when `dst(f) == src(g)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "FiniteJson", into = "FiniteJson")]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identities == other.identities
            && self.compose == other.compose
    }
}

impl Eq for FiniteCategory {}

impl FiniteCategory {
    /// Builds and exhaustively checks identity and associativity laws.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let c = Self::assemble(objects, morphisms, identities, compose)?;
        c.check_laws()?;
        Ok(c)
    }

    fn assemble(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = objects.len();
        let m = morphisms.len();
        if identities.len() != n {
            return Err(Error::InvalidCategory("one identity per object required".into()));
        }
        for f in &morphisms {
            if f.src >= n || f.dst >= n {
                return Err(Error::InvalidCategory(format!("morphism {} has bad endpoints", f.label)));
            }
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, f) in morphisms.iter().enumerate() {
            homs[f.src * n + f.dst].push(i);
        }
        let mut table = vec![None; m * m];
        for f in 0..m {
            for &g in &homs_from(&homs, n, morphisms[f].dst) {
                let h = compose(f, g);
                if h >= m {
                    return Err(Error::InvalidCategory(format!(
                        "composite of {} and {} out of range",
                        morphisms[f].label, morphisms[g].label
                    )));
                }
                table[f * m + g] = Some(h);
            }
        }
        Ok(FiniteCategory {
            objects,
            morphisms,
            identities,
            compose: table,
            homs,
        })
    }

    /// Exhaustive identity and associativity check over all composable triples.
    pub fn check_laws(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCategory(msg));
        for (x, &i) in self.identities.iter().enumerate() {
            if self.morphisms[i].src != x || self.morphisms[i].dst != x {
                return bad(format!("identity of {} is not an endomorphism", self.objects[x]));
            }
        }
        for f in 0..self.morphisms.len() {
            let (s, d) = (self.src(f), self.dst(f));
            if self.compose(self.identities[s], f) != Some(f) || self.compose(f, self.identities[d]) != Some(f) {
                return bad(format!("identity law fails at {}", self.morphisms[f].label));
            }
            for (g, gm) in self.morphisms.iter().enumerate() {
                if gm.src != d {
                    continue;
                }
                let fg = self.compose(f, g).unwrap();
                if self.src(fg) != s || self.dst(fg) != gm.dst {
                    return bad(format!(
                        "composite of {} and {} has wrong endpoints",
                        self.morphisms[f].label, gm.label
                    ));
                }
                for &h in self.hom_from(gm.dst).iter() {
                    let left = self.compose(fg, h).unwrap();
                    let right = self.compose(f, self.compose(g, h).unwrap()).unwrap();
                    if left != right {
                        return bad(format!(
                            "associativity fails at ({}, {}, {})",
                            self.morphisms[f].label, gm.label, self.morphisms[h].label
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn terminal() -> Self {
        Self::discrete(["pt"])
    }

    pub fn empty() -> Self {
        Self::discrete(Vec::<String>::new())
    }

    pub fn discrete<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let objects: Vec<String> = names.into_iter().map(Into::into).collect();
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism { label: format!("id({o})"), src: i, dst: i })
            .collect();
        let identities = (0..objects.len()).collect();
        Self::new(objects, morphisms, identities, |f, _| f).expect("discrete category")
    }

    /// Exactly one morphism between every ordered pair of objects.
    pub fn chaotic<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let objects: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = objects.len();
        let mut morphisms = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let label = if x == y {
                    format!("id({})", objects[x])
                } else {
                    format!("{}->{}", objects[x], objects[y])
                };
                morphisms.push(Morphism { label, src: x, dst: y });
            }
        }
        let identities = (0..n).map(|x| x * n + x).collect();
        Self::new(objects, morphisms, identities, |f, g| (f / n) * n + g % n).expect("chaotic category")
    }

    /// `x -> y` with one non-identity arrow `f`.
    pub fn arrow() -> Self {
        let objects = vec!["x".to_string(), "y".to_string()];
        let morphisms = vec![
            Morphism { label: "id(x)".into(), src: 0, dst: 0 },
            Morphism { label: "id(y)".into(), src: 1, dst: 1 },
            Morphism { label: "f".into(), src: 0, dst: 1 },
        ];
        Self::new(objects, morphisms, vec![0, 1], |f, g| match (f, g) {
            (0, g) => g,
            (f, 1) => f,
            (f, _) => f,
        })
        .expect("arrow category")
    }

    /// One-object category of a finite group; element 0 must be the unit.
    pub fn from_group(
        object: &str,
        labels: &[&str],
        multiply: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let morphisms = labels
            .iter()
            .map(|l| Morphism { label: l.to_string(), src: 0, dst: 0 })
            .collect();
        Self::new(vec![object.to_string()], morphisms, vec![0], multiply)
    }

    pub fn cyclic(n: usize) -> Self {
        let labels: Vec<String> = (0..n)
            .map(|k| if k == 0 { "id(*)".to_string() } else { format!("a^{k}") })
            .collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        Self::from_group("*", &refs, |f, g| (f + g) % n).expect("cyclic group")
    }

    /// Product category; objects and morphisms are pairs in row-major order.
    pub fn product(a: &Self, b: &Self) -> Self {
        Self::power_of(&[a, b])
    }

    /// `k`-fold power of `a`; `k = 0` gives the terminal category.
    pub fn power(a: &Self, k: usize) -> Self {
        let factors = vec![a; k];
        Self::power_of(&factors)
    }

    fn power_of(factors: &[&Self]) -> Self {
        fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
            let mut out = vec![vec![]];
            for &s in sizes {
                out = out
                    .into_iter()
                    .flat_map(|t| (0..s).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    }))
                    .collect();
            }
            out
        }
        let obj_tuples = tuples(&factors.iter().map(|c| c.object_count()).collect::<Vec<_>>());
        let mor_tuples = tuples(&factors.iter().map(|c| c.morphism_count()).collect::<Vec<_>>());
        let obj_index: HashMap<&Vec<usize>, usize> = obj_tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mor_index: HashMap<&Vec<usize>, usize> = mor_tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let join = |parts: Vec<String>| format!("({})", parts.join(","));
        let objects = obj_tuples
            .iter()
            .map(|t| join(t.iter().zip(factors).map(|(&o, c)| c.objects[o].clone()).collect()))
            .collect();
        let morphisms = mor_tuples
            .iter()
            .map(|t| {
                let src: Vec<usize> = t.iter().zip(factors).map(|(&f, c)| c.src(f)).collect();
                let dst: Vec<usize> = t.iter().zip(factors).map(|(&f, c)| c.dst(f)).collect();
                Morphism {
                    label: join(t.iter().zip(factors).map(|(&f, c)| c.morphisms[f].label.clone()).collect()),
                    src: obj_index[&src],
                    dst: obj_index[&dst],
                }
            })
            .collect();
        let identities = obj_tuples
            .iter()
            .map(|t| {
                let ids: Vec<usize> = t.iter().zip(factors).map(|(&o, c)| c.identities[o]).collect();
                mor_index[&ids]
            })
            .collect();
        let compose = |f: usize, g: usize| {
            let h: Vec<usize> = mor_tuples[f]
                .iter()
                .zip(&mor_tuples[g])
                .zip(factors)
                .map(|((&x, &y), c)| c.compose(x, y).expect("componentwise composable"))
                .collect();
            mor_index[&h]
        };
        Self::assemble(objects, morphisms, identities, compose).expect("product category")
    }

    /// Disjoint union; names are prefixed `i.` when they would clash.
    pub fn disjoint_union(parts: &[&Self]) -> Self {
        let mut seen = std::collections::HashSet::new();
        let clash = parts
            .iter()
            .flat_map(|c| c.objects.iter().chain(c.morphisms.iter().map(|m| &m.label)))
            .any(|s| !seen.insert(s.clone()));
        let name = |i: usize, s: &str| if clash { format!("{i}.{s}") } else { s.to_string() };
        let mut objects = Vec::new();
        let mut morphisms = Vec::new();
        let mut identities = Vec::new();
        let mut offsets = Vec::new();
        for (i, c) in parts.iter().enumerate() {
            let (ob, mo) = (objects.len(), morphisms.len());
            offsets.push(mo);
            objects.extend(c.objects.iter().map(|o| name(i, o)));
            morphisms.extend(c.morphisms.iter().map(|m| Morphism {
                label: name(i, &m.label),
                src: m.src + ob,
                dst: m.dst + ob,
            }));
            identities.extend(c.identities.iter().map(|&f| f + mo));
        }
        let part_of = |f: usize| offsets.iter().rposition(|&o| o <= f).unwrap();
        let compose = |f: usize, g: usize| {
            let p = part_of(f);
            let o = offsets[p];
            parts[p].compose(f - o, g - o).expect("composable within part") + o
        };
        Self::assemble(objects, morphisms, identities, compose).expect("disjoint union")
    }

    /// Wide subcategory on the given morphisms (must contain identities and be closed).
    pub fn wide_subcategory(&self, keep: &[usize]) -> Result<Self> {
        let index: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let morphisms = keep.iter().map(|&f| self.morphisms[f].clone()).collect();
        let identities = self
            .identities
            .iter()
            .map(|i| index.get(i).copied())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidCategory("subcategory misses an identity".into()))?;
        let closed = keep.iter().all(|&f| {
            keep.iter()
                .all(|&g| self.compose(f, g).is_none_or(|h| index.contains_key(&h)))
        });
        if !closed {
            return Err(Error::InvalidCategory("subcategory not closed under composition".into()));
        }
        let c = Self::assemble(self.objects.clone(), morphisms, identities, |f, g| {
            index[&self.compose(keep[f], keep[g]).unwrap()]
        })?;
        Ok(c)
    }

    pub(crate) fn from_rewriting(rs: &RewritingSystem, bound: usize) -> Result<FiniteModel> {
        let q = rs.quiver();
        let n = q.objects().len();
        let mut words: Vec<IPath> = Vec::new();
        let mut ends: Vec<usize> = Vec::new();
        let mut counts = vec![0usize; n * n];
        for x in 0..n {
            let start = words.len();
            words.push(IPath { at: x, word: vec![] });
            ends.push(x);
            counts[x * n + x] += 1;
            let mut frontier = start;
            while frontier < words.len() {
                let end = words.len();
                for idx in frontier..end {
                    let d = ends[idx];
                    for g in 0..q.generators().len() {
                        if q.src_of(g) != d {
                            continue;
                        }
                        let mut word = words[idx].word.clone();
                        word.push(g);
                        if !rs.suffix_irreducible(&word) {
                            continue;
                        }
                        let t = q.dst_of(g);
                        counts[x * n + t] += 1;
                        words.push(IPath { at: x, word });
                        ends.push(t);
                        if counts[x * n + t] > bound {
                            let witness = words[start..]
                                .iter()
                                .zip(&ends[start..])
                                .filter(|(_, &e)| e == t)
                                .map(|(p, _)| q.path_of(p).to_string())
                                .collect();
                            return Err(Error::NotFinite {
                                src: q.objects()[x].clone(),
                                dst: q.objects()[t].clone(),
                                bound,
                                witness,
                            });
                        }
                    }
                }
                frontier = end;
            }
        }

        let mut lookup: HashMap<(usize, Vec<usize>), usize> = HashMap::with_capacity(words.len());
        let mut morphisms = Vec::with_capacity(words.len());
        let mut identities = vec![0; n];
        for (i, (p, &t)) in words.iter().zip(&ends).enumerate() {
            if p.word.is_empty() {
                identities[p.at] = i;
            }
            lookup.insert((p.at, p.word.clone()), i);
            morphisms.push(Morphism {
                label: q.path_of(p).to_string(),
                src: p.at,
                dst: t,
            });
        }
        let compose = |f: usize, g: usize| {
            let mut w = words[f].word.clone();
            w.extend_from_slice(&words[g].word);
            let w = rs.reduce_word(&w);
            lookup[&(words[f].at, w)]
        };
        let cat = Self::assemble(q.objects().to_vec(), morphisms, identities, compose)?;
        let paths = words.iter().map(|p| q.path_of(p)).collect();
        Ok(FiniteModel {
            cat,
            paths,
            lookup,
            rs: rs.clone(),
        })
    }

    /// A presentation with one generator per non-identity morphism and the
    /// full multiplication table as relations.
    pub fn to_presentation(&self) -> FpCategory {
        let gens: Vec<usize> = (0..self.morphisms.len()).filter(|&f| !self.is_identity(f)).collect();
        let as_path = |f: usize| {
            if self.is_identity(f) {
                Path::id(self.objects[self.src(f)].clone())
            } else {
                Path::new(self.objects[self.src(f)].clone(), [self.morphisms[f].label.clone()])
            }
        };
        let generators = gens
            .iter()
            .map(|&f| {
                let m = &self.morphisms[f];
                Generator::new(m.label.clone(), self.objects[m.src].clone(), self.objects[m.dst].clone())
            })
            .collect();
        let mut relations = Vec::new();
        for &f in &gens {
            for &g in &gens {
                if let Some(h) = self.compose(f, g) {
                    let lhs = Path::new(
                        self.objects[self.src(f)].clone(),
                        [self.morphisms[f].label.clone(), self.morphisms[g].label.clone()],
                    );
                    relations.push(Relation::new(lhs, as_path(h)));
                }
            }
        }
        FpCategory::build(self.objects.clone(), generators, relations, vec![])
            .expect("multiplication-table presentation")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, label: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.label == label)
    }

    pub fn label(&self, f: usize) -> &str {
        &self.morphisms[f].label
    }

    pub fn src(&self, f: usize) -> usize {
        self.morphisms[f].src
    }

    pub fn dst(&self, f: usize) -> usize {
        self.morphisms[f].dst
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.src(f)] == f
    }

    /// `f` then `g`, when composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose[f * self.morphisms.len() + g]
    }

    pub fn hom(&self, x: usize, y: usize) -> &[usize] {
        &self.homs[x * self.objects.len() + y]
    }

    pub fn hom_from(&self, x: usize) -> Vec<usize> {
        homs_from(&self.homs, self.objects.len(), x)
    }

    /// A two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (s, d) = (self.src(f), self.dst(f));
        self.hom(d, s).iter().copied().find(|&g| {
            self.compose(f, g) == Some(self.identities[s]) && self.compose(g, f) == Some(self.identities[d])
        })
    }

    pub fn is_iso(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    /// Composite of a sequence of morphisms; `None` if not composable.
    pub fn compose_all(&self, at: usize, fs: &[usize]) -> Option<usize> {
        fs.iter().try_fold(self.identities[at], |acc, &f| self.compose(acc, f))
    }

    /// Hom-set sizes keyed by object names, for reports.
    pub fn hom_sizes(&self) -> BTreeMap<(String, String), usize> {
        let n = self.objects.len();
        let mut out = BTreeMap::new();
        for x in 0..n {
            for y in 0..n {
                out.insert((self.objects[x].clone(), self.objects[y].clone()), self.hom(x, y).len());
            }
        }
        out
    }
}

/// A finite category computed from a presentation, remembering which normal
/// form each morphism came from.
#[derive(Debug, Clone)]
pub struct FiniteModel {
    pub cat: FiniteCategory,
    paths: Vec<Path>,
    lookup: HashMap<(usize, Vec<usize>), usize>,
    rs: RewritingSystem,
}

impl FiniteModel {
    /// Normal-form path of morphism `f`.
    pub fn path(&self, f: usize) -> &Path {
        &self.paths[f]
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    /// The morphism a path denotes.
    pub fn morphism_of(&self, p: &Path) -> Result<usize> {
        let ip = self.rs.quiver().resolve(p)?;
        let w = self.rs.reduce_word(&ip.word);
        Ok(self.lookup[&(ip.at, w)])
    }

    pub fn into_category(self) -> FiniteCategory {
        self.cat
    }
}

fn homs_from(homs: &[Vec<usize>], n: usize, x: usize) -> Vec<usize> {
    (0..n).flat_map(|y| homs[x * n + y].iter().copied()).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiniteJson {
    pub objects: Vec<String>,
    pub morphisms: Vec<Morphism>,
    pub identities: Vec<usize>,
    /// Triples `[f, g, f;g]` for every composable pair.
    pub compose: Vec<[usize; 3]>,
}

impl From<FiniteCategory> for FiniteJson {
    fn from(c: FiniteCategory) -> Self {
        let m = c.morphisms.len();
        let compose = (0..m)
            .flat_map(|f| (0..m).map(move |g| (f, g)))
            .filter_map(|(f, g)| c.compose(f, g).map(|h| [f, g, h]))
            .collect();
        FiniteJson {
            objects: c.objects,
            morphisms: c.morphisms,
            identities: c.identities,
            compose,
        }
    }
}

impl TryFrom<FiniteJson> for FiniteCategory {
    type Error = Error;

    fn try_from(j: FiniteJson) -> Result<Self> {
        let table: HashMap<(usize, usize), usize> = j.compose.iter().map(|t| ((t[0], t[1]), t[2])).collect();
        let m = j.morphisms.len();
        FiniteCategory::new(j.objects, j.morphisms, j.identities, |f, g| {
            table.get(&(f, g)).copied().unwrap_or(m)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chaotic_and_arrow_satisfy_laws() {
        let c3 = FiniteCategory::chaotic(["x", "y", "z"]);
        assert_eq!(c3.morphism_count(), 9);
        c3.check_laws().unwrap();
        let a = FiniteCategory::arrow();
        assert_eq!(a.morphism_count(), 3);
        assert!(!a.is_iso(2));
    }

    #[test]
    fn product_counts_multiply() {
        let p = FiniteCategory::product(&FiniteCategory::arrow(), &FiniteCategory::cyclic(2));
        assert_eq!(p.object_count(), 2);
        assert_eq!(p.morphism_count(), 6);
        p.check_laws().unwrap();
        let t = FiniteCategory::power(&FiniteCategory::arrow(), 0);
        assert_eq!((t.object_count(), t.morphism_count()), (1, 1));
    }

    #[test]
    fn bad_table_is_rejected() {
        let objects = vec!["*".to_string()];
        let morphisms = vec![
            Morphism { label: "e".into(), src: 0, dst: 0 },
            Morphism { label: "a".into(), src: 0, dst: 0 },
        ];
        // a;a = e but e;a = e breaks the identity law
        let err = FiniteCategory::new(objects, morphisms, vec![0], |f, g| if f == 0 { 0 } else { 1 - g })
            .unwrap_err();
        assert!(matches!(err, Error::InvalidCategory(_)));
    }

    #[test]
    fn json_round_trip() {
        let c = FiniteCategory::cyclic(3);
        let text = serde_json::to_string(&c).unwrap();
        let back: FiniteCategory = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn presentation_of_finite_category_recovers_it() {
        let c = FiniteCategory::cyclic(3);
        let p = c.to_presentation();
        let back = p.rewriting().to_finite(10).unwrap();
        assert_eq!(back.morphism_count(), 3);
    }
}
