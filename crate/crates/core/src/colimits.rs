//! Coproducts, pushouts, chaotic categories and one-sided homotopy pushouts of presentations.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpcat::{FpCategory, FpFunctor, Generator, Path, Relation};

/// A coproduct with its injections.
#[derive(Debug, Clone)]
pub struct Coproduct {
    pub apex: Arc<FpCategory>,
    pub injections: Vec<FpFunctor>,
}

/// Disjoint union of presentations. Names are kept when the parts share no
/// name, otherwise every name of part `i` is prefixed with `i.`.
pub fn coproduct(cats: &[Arc<FpCategory>]) -> Coproduct {
    let mut seen = HashSet::new();
    let clash = cats
        .iter()
        .flat_map(|c| c.names().map(str::to_string).collect::<Vec<_>>())
        .any(|n| !seen.insert(n));
    let prefix = |i: usize| if clash { format!("{i}.") } else { String::new() };

    let mut objects = Vec::new();
    let mut generators = Vec::new();
    let mut relations = Vec::new();
    let mut invertible = Vec::new();
    for (i, c) in cats.iter().enumerate() {
        let r = Renaming::prefix(&prefix(i));
        objects.extend(c.objects().iter().map(|o| r.object(o)));
        generators.extend(c.declared_generators().map(|g| r.generator(g)));
        relations.extend(c.relations().iter().map(|rel| r.relation(rel)));
        invertible.extend(c.invertible().keys().map(|g| r.name(g)));
    }
    let apex = Arc::new(
        FpCategory::build(objects, generators, relations, invertible).expect("disjoint union of valid presentations"),
    );
    let injections = cats
        .iter()
        .enumerate()
        .map(|(i, c)| Renaming::prefix(&prefix(i)).functor(c, &apex))
        .collect();
    Coproduct { apex, injections }
}

impl Coproduct {
    /// The functor out of the coproduct that restricts to `maps[i]` on part `i`.
    pub fn copair(&self, maps: &[FpFunctor], target: Arc<FpCategory>) -> Result<FpFunctor> {
        if maps.len() != self.injections.len() {
            return Err(Error::InvalidFunctor("copairing needs one map per summand".into()));
        }
        let mut object_map = BTreeMap::new();
        let mut gen_map = BTreeMap::new();
        for (inj, m) in self.injections.iter().zip(maps) {
            if **m.source() != **inj.source() || **m.target() != *target {
                return Err(Error::InvalidFunctor("copairing map has the wrong source or target".into()));
            }
            for (o, image) in inj.object_map() {
                object_map.insert(image.clone(), m.map_object(o)?.to_string());
            }
            for g in inj.source().declared_generators() {
                let image = &inj.gen_map()[&g.name];
                gen_map.insert(image.gens[0].clone(), m.map_generator(&g.name)?);
            }
        }
        FpFunctor::new(self.apex.clone(), target, object_map, gen_map)
    }
}

/// Object and generator renaming used to embed one presentation into another.
struct Renaming<'a> {
    prefix: String,
    objects: Option<&'a dyn Fn(&str) -> String>,
}

impl<'a> Renaming<'a> {
    fn prefix(p: &str) -> Self {
        Renaming {
            prefix: p.to_string(),
            objects: None,
        }
    }

    fn name(&self, s: &str) -> String {
        format!("{}{s}", self.prefix)
    }

    fn object(&self, s: &str) -> String {
        match self.objects {
            Some(f) => f(&self.name(s)),
            None => self.name(s),
        }
    }

    fn generator(&self, g: &Generator) -> Generator {
        Generator::new(self.name(&g.name), self.object(&g.src), self.object(&g.dst))
    }

    fn path(&self, p: &Path) -> Path {
        Path {
            at: self.object(&p.at),
            gens: p.gens.iter().map(|g| self.name(g)).collect(),
        }
    }

    fn relation(&self, r: &Relation) -> Relation {
        Relation::new(self.path(&r.lhs), self.path(&r.rhs))
    }

    /// The induced functor `source -> target`, which must contain every renamed name.
    fn functor(&self, source: &Arc<FpCategory>, target: &Arc<FpCategory>) -> FpFunctor {
        let object_map = source.objects().iter().map(|o| (o.clone(), self.object(o))).collect();
        let gen_map = source
            .declared_generators()
            .map(|g| (g.name.clone(), Path::new(self.object(&g.src), [self.name(&g.name)])))
            .collect();
        FpFunctor::new(source.clone(), target.clone(), object_map, gen_map).expect("renaming embeds")
    }
}

/// The two legs of a span `B <- A -> C`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Span {
    pub left: FpFunctor,
    pub right: FpFunctor,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PushoutResult {
    pub apex: Arc<FpCategory>,
    pub inj_left: FpFunctor,
    pub inj_right: FpFunctor,
    pub from_span: Span,
}

impl PushoutResult {
    /// Both injections are functors and the square commutes up to the relations.
    pub fn verify(&self) -> Result<()> {
        let (f, g) = (&self.from_span.left, &self.from_span.right);
        self.inj_left.verify()?;
        self.inj_right.verify()?;
        let square = f.then(&self.inj_left)?;
        let other = g.then(&self.inj_right)?;
        for o in f.source().objects() {
            if square.map_object(o)? != other.map_object(o)? {
                return Err(Error::CertificateRejected(format!("square does not commute at object {o}")));
            }
        }
        for gen in f.source().generators() {
            let (a, b) = (square.map_generator(&gen.name)?, other.map_generator(&gen.name)?);
            if !self.apex.paths_equal(&a, &b)? {
                return Err(Error::CertificateRejected(format!("square does not commute at {}", gen.name)));
            }
        }
        Ok(())
    }

    /// The functor out of the apex determined by a cocone `B -> T <- C`.
    /// The cocone condition itself is not checked here.
    pub fn mediating(&self, to_left: &FpFunctor, to_right: &FpFunctor) -> Result<FpFunctor> {
        if **to_left.target() != **to_right.target() {
            return Err(Error::InvalidFunctor("cocone legs have different targets".into()));
        }
        let mut object_map = BTreeMap::new();
        let mut gen_map = BTreeMap::new();
        for (inj, leg) in [(&self.inj_left, to_left), (&self.inj_right, to_right)] {
            if **leg.source() != **inj.source() {
                return Err(Error::InvalidFunctor("cocone leg has the wrong source".into()));
            }
            for (o, image) in inj.object_map() {
                object_map.entry(image.clone()).or_insert(leg.map_object(o)?.to_string());
            }
            for g in inj.source().declared_generators() {
                gen_map.insert(inj.gen_map()[&g.name].gens[0].clone(), leg.map_generator(&g.name)?);
            }
        }
        FpFunctor::new(self.apex.clone(), to_left.target().clone(), object_map, gen_map)
    }
}

/// Pushout of `B <-f- A -g-> C`.
///
/// Objects are glued by union-find; each class is named after its first
/// member in the order (objects of B, objects of C). Generators are those of
/// B and C; relations are theirs plus `f(a) = g(a)` for every generator `a`
/// of A. If B and C share any name, all of B is prefixed `L.` and all of C `R.`.
pub fn pushout(f: &FpFunctor, g: &FpFunctor) -> Result<PushoutResult> {
    if *f.source() != *g.source() {
        return Err(Error::InvalidFunctor("span legs have different sources".into()));
    }
    let (a, b, c) = (f.source(), f.target(), g.target());
    let b_names: HashSet<&str> = b.names().collect();
    let clash = c.names().any(|n| b_names.contains(n));
    let (lp, rp) = if clash { ("L.", "R.") } else { ("", "") };

    // union-find over B's objects followed by C's
    let all: Vec<String> = b
        .objects()
        .iter()
        .map(|o| format!("{lp}{o}"))
        .chain(c.objects().iter().map(|o| format!("{rp}{o}")))
        .collect();
    let index: BTreeMap<&str, usize> = all.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for o in a.objects() {
        let x = index[format!("{lp}{}", f.map_object(o)?).as_str()];
        let y = index[format!("{rp}{}", g.map_object(o)?).as_str()];
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        // smaller index becomes the representative
        let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
        parent[hi] = lo;
    }
    let reps: Vec<String> = (0..all.len()).map(|i| all[find(&mut parent, i)].clone()).collect();
    let rep_of = |name: &str| reps[index[name]].clone();
    let apex_objects: Vec<String> = (0..all.len())
        .filter(|&i| find(&mut parent.clone(), i) == i)
        .map(|i| all[i].clone())
        .collect();

    let left = Renaming {
        prefix: lp.to_string(),
        objects: Some(&rep_of),
    };
    let right = Renaming {
        prefix: rp.to_string(),
        objects: Some(&rep_of),
    };
    let mut generators: Vec<Generator> = b.declared_generators().map(|x| left.generator(x)).collect();
    generators.extend(c.declared_generators().map(|x| right.generator(x)));
    let mut relations: Vec<Relation> = b.relations().iter().map(|r| left.relation(r)).collect();
    relations.extend(c.relations().iter().map(|r| right.relation(r)));
    for gen in a.declared_generators() {
        let lhs = left.path(&f.map_generator(&gen.name)?);
        let rhs = right.path(&g.map_generator(&gen.name)?);
        if lhs != rhs {
            relations.push(Relation::new(lhs, rhs));
        }
    }
    let mut invertible: Vec<String> = b.invertible().keys().map(|x| left.name(x)).collect();
    invertible.extend(c.invertible().keys().map(|x| right.name(x)));

    let apex = Arc::new(FpCategory::build(apex_objects, generators, relations, invertible)?);
    let inj_left = left.functor(b, &apex);
    let inj_right = right.functor(c, &apex);
    Ok(PushoutResult {
        apex,
        inj_left,
        inj_right,
        from_span: Span {
            left: f.clone(),
            right: g.clone(),
        },
    })
}

/// The arrow `x -> y` of a chaotic presentation on `objects`.
pub fn chaotic_arrow(objects: &[String], x: usize, y: usize) -> Path {
    if x == y {
        Path::id(objects[x].clone())
    } else if x < y {
        Path::new(objects[x].clone(), [format!("{}->{}", objects[x], objects[y])])
    } else {
        Path::new(
            objects[x].clone(),
            [crate::fpcat::mate_name(&format!("{}->{}", objects[y], objects[x]))],
        )
    }
}

/// The chaotic category on `objects`: one invertible generator `x->y` for
/// each pair `x` before `y` (its mate serving as `y -> x`), and the
/// triangle relations `(x->y);(y->z) = (x->z)` for distinct `x, y, z`.
pub fn chaotic<I, S>(objects: I) -> Result<FpCategory>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
    if objects.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = objects.len();
    let mut generators = Vec::new();
    let mut invertible = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let name = format!("{}->{}", objects[x], objects[y]);
            generators.push(Generator::new(name.clone(), objects[x].clone(), objects[y].clone()));
            invertible.push(name);
        }
    }
    let mut relations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if x == y || y == z || x == z {
                    continue;
                }
                let mut lhs = chaotic_arrow(&objects, x, y);
                lhs.gens.extend(chaotic_arrow(&objects, y, z).gens);
                relations.push(Relation::new(lhs, chaotic_arrow(&objects, x, z)));
            }
        }
    }
    FpCategory::build(objects, generators, relations, invertible)
}

fn fresh(name: String, taken: &HashSet<String>) -> String {
    let mut n = name;
    while taken.contains(&n) {
        n.push('\'');
    }
    n
}

/// Factors `g: X -> Y` as a cofibration `X -> Y'` followed by an equivalence
/// `Y' -> Y`, returning the cofibration.
///
/// Cofibrations are returned unchanged. When `Y` has no generators, `Y'` is
/// the coproduct over `y` of the chaotic category on the fiber of `y` (or on
/// `{y}` if the fiber is empty). Otherwise `Y'` is `Y` with a new object `x'`
/// per object of X and an invertible generator `c_x: x' -> g(x)`.
pub fn cofibrant_replacement(g: &FpFunctor) -> Result<FpFunctor> {
    if g.is_cofibration() {
        return Ok(g.clone());
    }
    let (x, y) = (g.source(), g.target());
    if y.generators().is_empty() {
        let mut objects = Vec::new();
        let mut generators = Vec::new();
        let mut relations = Vec::new();
        let mut invertible = Vec::new();
        let taken: HashSet<String> = x.objects().iter().cloned().collect();
        for target in y.objects() {
            let fiber: Vec<String> = x
                .objects()
                .iter()
                .filter(|o| g.object_map()[*o] == *target)
                .cloned()
                .collect();
            let fiber = if fiber.is_empty() {
                vec![fresh(target.clone(), &taken)]
            } else {
                fiber
            };
            let part = chaotic(fiber)?;
            objects.extend(part.objects().iter().cloned());
            generators.extend(part.declared_generators().cloned());
            relations.extend(part.relations().iter().cloned());
            invertible.extend(part.invertible().keys().cloned());
        }
        let cyl = Arc::new(FpCategory::build(objects, generators, relations, invertible)?);
        let cyl_objects = cyl.objects().to_vec();
        let pos = |o: &str| cyl_objects.iter().position(|c| c == o).expect("fiber object");
        let object_map = x.objects().iter().map(|o| (o.clone(), o.clone())).collect();
        let gen_map = x
            .declared_generators()
            .map(|h| (h.name.clone(), chaotic_arrow(&cyl_objects, pos(&h.src), pos(&h.dst))))
            .collect();
        return FpFunctor::checked(x.clone(), cyl, object_map, gen_map);
    }

    let taken: HashSet<String> = y.names().map(str::to_string).collect();
    let mut objects = y.objects().to_vec();
    let mut generators: Vec<Generator> = y.declared_generators().cloned().collect();
    let mut invertible: Vec<String> = y.invertible().keys().cloned().collect();
    let mut copy = BTreeMap::new();
    let mut connector = BTreeMap::new();
    for o in x.objects() {
        let o2 = fresh(format!("{o}'"), &taken);
        let c = fresh(format!("c_{o}"), &taken);
        objects.push(o2.clone());
        generators.push(Generator::new(c.clone(), o2.clone(), g.object_map()[o].clone()));
        invertible.push(c.clone());
        copy.insert(o.clone(), o2);
        connector.insert(o.clone(), c);
    }
    let cyl = Arc::new(FpCategory::build(objects, generators, y.relations().to_vec(), invertible)?);
    let gen_map = x
        .declared_generators()
        .map(|h| {
            let mut p = Path::new(copy[&h.src].clone(), [connector[&h.src].clone()]);
            p.gens.extend(g.map_generator(&h.name)?.gens);
            p.gens.push(crate::fpcat::mate_name(&connector[&h.dst]));
            Ok((h.name.clone(), p))
        })
        .collect::<Result<_>>()?;
    FpFunctor::checked(x.clone(), cyl, copy, gen_map)
}

/// Pushout of `f: X -> Z` along a cofibrant replacement of `g: X -> Y`.
pub fn one_sided_homotopy_pushout(f: &FpFunctor, g: &FpFunctor) -> Result<PushoutResult> {
    pushout(f, &cofibrant_replacement(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::is_contractible_fp;

    fn s0() -> Arc<FpCategory> {
        Arc::new(FpCategory::discrete(["n", "s"]))
    }

    #[test]
    fn coproduct_examples() {
        let one = Arc::new(FpCategory::terminal());
        let s = coproduct(&[one.clone(), one]);
        assert_eq!(s.apex.object_count(), 2);
        assert!(s.apex.generators().is_empty());
        assert!(s.injections.iter().all(|i| i.is_cofibration() && i.check()));

        assert_eq!(coproduct(&[]).apex.object_count(), 0);

        let mixed = coproduct(&[Arc::new(FpCategory::integers()), Arc::new(FpCategory::arrow())]);
        assert_eq!(mixed.apex.object_count(), 3);
        assert_eq!(mixed.apex.generators().len(), 3);
    }

    #[test]
    fn chaotic_examples() {
        let c2 = chaotic(["x", "y"]).unwrap();
        assert_eq!(c2.generators().len(), 2);
        assert!(c2.rewriting().is_complete());
        assert_eq!(chaotic(["x"]).unwrap().generators().len(), 0);
        let c3 = chaotic(["x", "y", "z"]).unwrap();
        assert_eq!(c3.generators().len(), 6);
        assert!(is_contractible_fp(&c3).unwrap());
        assert_eq!(chaotic(Vec::<String>::new()).unwrap_err(), Error::EmptySet);
    }

    #[test]
    fn circle_from_two_points() {
        let c2 = Arc::new(chaotic(["n", "s"]).unwrap());
        let inc = FpFunctor::new(
            s0(),
            c2,
            [("n", "n"), ("s", "s")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            BTreeMap::new(),
        )
        .unwrap();
        let collapse = FpFunctor::to_terminal(s0());
        let p = pushout(&inc, &collapse).unwrap();
        p.verify().unwrap();
        assert_eq!(p.apex.object_count(), 1);
        assert_eq!(p.apex.generators().len(), 2);
        assert!(p.apex.relations().is_empty());
        assert_eq!(p.apex.invertible().len(), 1);
    }

    #[test]
    fn pushout_along_identities() {
        let z = Arc::new(FpCategory::integers());
        let id = FpFunctor::identity(z.clone());
        let p = pushout(&id, &id).unwrap();
        p.verify().unwrap();
        assert_eq!(p.apex.object_count(), 1);
        let fin = p.apex.rewriting();
        assert!(fin.is_complete());
        // a from the left and a from the right are identified
        assert!(p
            .apex
            .paths_equal(&Path::new("L.*", ["L.a"]), &Path::new("L.*", ["R.a"]))
            .unwrap());
    }

    #[test]
    fn one_sided_pushout_of_two_points_is_the_integers() {
        let f = FpFunctor::to_terminal(s0());
        let g = FpFunctor::to_terminal(s0());
        let p = one_sided_homotopy_pushout(&f, &g).unwrap();
        p.verify().unwrap();
        assert_eq!(p.apex.object_count(), 1);
        assert!(matches!(p.apex.to_finite(10), Err(Error::NotFinite { .. })));
    }

    #[test]
    fn mapping_cylinder_replacement_is_a_cofibration() {
        // arrow -> Z/2 sending both objects to * is not injective on objects, and Z/2 has generators
        let arrow = Arc::new(FpCategory::arrow());
        let z2 = Arc::new(FpCategory::cyclic(2));
        let g = FpFunctor::new(
            arrow,
            z2,
            [("x", "*"), ("y", "*")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
            [("f".to_string(), Path::new("*", ["a"]))].into(),
        )
        .unwrap();
        let r = cofibrant_replacement(&g).unwrap();
        assert!(r.is_cofibration());
        assert!(r.check());
        assert_eq!(r.target().object_count(), 3);
    }
}
