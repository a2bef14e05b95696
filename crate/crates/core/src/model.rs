//! Cofibrations, weak equivalences and isofibrations of small categories.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fpcat::{FinFunctor, FiniteCategory, FpCategory, FpFunctor, Path};
use crate::DEFAULT_BOUND;

/// Three-valued answer for questions that are only semi-decidable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

impl From<bool> for Decision {
    fn from(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }
}

pub fn is_cofibration(f: &FinFunctor) -> bool {
    f.is_cofibration()
}

pub fn is_cofibration_fp(f: &FpFunctor) -> bool {
    f.is_cofibration()
}

/// Invertible morphisms found by enumerating tuples `(x, f, y, g)` with
/// `f: x -> y`, `g: y -> x` and both composites identities.
pub fn invertible_by_tuples(c: &FiniteCategory) -> BTreeSet<usize> {
    let mut tuples = Vec::new();
    for x in 0..c.object_count() {
        for y in 0..c.object_count() {
            for &f in c.hom(x, y) {
                for &g in c.hom(y, x) {
                    if c.compose(f, g) == Some(c.identity(x)) && c.compose(g, f) == Some(c.identity(y)) {
                        tuples.push((x, f, y, g));
                    }
                }
            }
        }
    }
    tuples.into_iter().map(|(_, f, _, _)| f).collect()
}

/// Invertible morphisms found by asking each morphism for an inverse.
pub fn invertible_by_scan(c: &FiniteCategory) -> BTreeSet<usize> {
    (0..c.morphism_count()).filter(|&f| c.is_iso(f)).collect()
}

/// The wide subcategory of isomorphisms.
pub fn iso_core(c: &FiniteCategory) -> FiniteCategory {
    let tuples = invertible_by_tuples(c);
    debug_assert_eq!(tuples, invertible_by_scan(c));
    let keep: Vec<usize> = tuples.into_iter().collect();
    c.wide_subcategory(&keep).expect("isomorphisms form a wide subcategory")
}

/// Every isomorphism out of an image object lifts to an isomorphism out of
/// the chosen source object.
pub fn is_isofibration(f: &FinFunctor) -> bool {
    let (s, t) = (&*f.source, &*f.target);
    (0..s.object_count()).all(|x| {
        let lifts: HashSet<usize> = s
            .hom_from(x)
            .into_iter()
            .filter(|&u| s.is_iso(u))
            .map(|u| f.mor_map[u])
            .collect();
        t.hom_from(f.object_map[x])
            .into_iter()
            .filter(|&v| t.is_iso(v))
            .all(|v| lifts.contains(&v))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomBijection {
    pub src: usize,
    pub dst: usize,
    /// `(u, F u)` for every `u` in `hom(src, dst)`.
    pub pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EssentialWitness {
    pub target_object: usize,
    pub source_object: usize,
    /// `F(source_object) -> target_object`.
    pub iso: usize,
    pub inverse: usize,
}

/// Replayable evidence that a functor is fully faithful and essentially surjective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceCertificate {
    pub fully_faithful: Vec<HomBijection>,
    pub essentially_surjective: Vec<EssentialWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, thiserror::Error)]
pub enum NonEquivalence {
    #[error("not a functor")]
    NotFunctor,
    #[error("hom({src}, {dst}) -> hom(F{src}, F{dst}) misses morphism {missing}")]
    NotFull { src: usize, dst: usize, missing: usize },
    #[error("morphisms {first} and {second} in hom({src}, {dst}) have the same image")]
    NotFaithful { src: usize, dst: usize, first: usize, second: usize },
    #[error("target object {object} is not isomorphic to any image object")]
    NotEssentiallySurjective { object: usize },
}

pub fn is_equivalence(f: &FinFunctor) -> std::result::Result<EquivalenceCertificate, NonEquivalence> {
    if !f.check() {
        return Err(NonEquivalence::NotFunctor);
    }
    let (s, t) = (&*f.source, &*f.target);
    let mut fully_faithful = Vec::new();
    for x in 0..s.object_count() {
        for y in 0..s.object_count() {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            let mut pairs = Vec::new();
            for &u in s.hom(x, y) {
                let v = f.mor_map[u];
                if let Some(&first) = seen.get(&v) {
                    return Err(NonEquivalence::NotFaithful { src: x, dst: y, first, second: u });
                }
                seen.insert(v, u);
                pairs.push((u, v));
            }
            if let Some(&missing) = t
                .hom(f.object_map[x], f.object_map[y])
                .iter()
                .find(|v| !seen.contains_key(v))
            {
                return Err(NonEquivalence::NotFull { src: x, dst: y, missing });
            }
            fully_faithful.push(HomBijection { src: x, dst: y, pairs });
        }
    }
    let mut essentially_surjective = Vec::new();
    for z in 0..t.object_count() {
        let witness = (0..s.object_count()).find_map(|x| {
            t.hom(f.object_map[x], z).iter().find_map(|&i| {
                t.inverse(i).map(|inv| EssentialWitness {
                    target_object: z,
                    source_object: x,
                    iso: i,
                    inverse: inv,
                })
            })
        });
        essentially_surjective.push(witness.ok_or(NonEquivalence::NotEssentiallySurjective { object: z })?);
    }
    Ok(EquivalenceCertificate {
        fully_faithful,
        essentially_surjective,
    })
}

impl EquivalenceCertificate {
    /// Re-checks every witness against the functor without redoing the search.
    pub fn verify(&self, f: &FinFunctor) -> Result<()> {
        let reject = |m: String| Err(Error::CertificateRejected(m));
        if !f.check() {
            return reject("not a functor".into());
        }
        let (s, t) = (&*f.source, &*f.target);
        let mut covered = HashSet::new();
        for b in &self.fully_faithful {
            if b.src >= s.object_count() || b.dst >= s.object_count() || !covered.insert((b.src, b.dst)) {
                return reject(format!("bad hom pair ({}, {})", b.src, b.dst));
            }
            let dom: BTreeSet<usize> = b.pairs.iter().map(|p| p.0).collect();
            let cod: BTreeSet<usize> = b.pairs.iter().map(|p| p.1).collect();
            let want_dom: BTreeSet<usize> = s.hom(b.src, b.dst).iter().copied().collect();
            let want_cod: BTreeSet<usize> =
                t.hom(f.object_map[b.src], f.object_map[b.dst]).iter().copied().collect();
            if dom != want_dom || cod != want_cod || cod.len() != b.pairs.len() {
                return reject(format!("hom({}, {}) is not matched bijectively", b.src, b.dst));
            }
            if b.pairs.iter().any(|&(u, v)| f.mor_map[u] != v) {
                return reject(format!("pair in hom({}, {}) disagrees with the functor", b.src, b.dst));
            }
        }
        if covered.len() != s.object_count() * s.object_count() {
            return reject("some hom pair has no bijection".into());
        }
        let mut hit = HashSet::new();
        for w in &self.essentially_surjective {
            if w.source_object >= s.object_count() || w.target_object >= t.object_count() {
                return reject("witness object out of range".into());
            }
            let fx = f.object_map[w.source_object];
            let ok = w.iso < t.morphism_count()
                && w.inverse < t.morphism_count()
                && t.src(w.iso) == fx
                && t.dst(w.iso) == w.target_object
                && t.compose(w.iso, w.inverse) == Some(t.identity(fx))
                && t.compose(w.inverse, w.iso) == Some(t.identity(w.target_object));
            if !ok {
                return reject(format!("object {} has no valid connecting isomorphism", w.target_object));
            }
            hit.insert(w.target_object);
        }
        if hit.len() != t.object_count() {
            return reject("some target object is not witnessed".into());
        }
        Ok(())
    }
}

pub fn is_groupoid(c: &FiniteCategory) -> bool {
    (0..c.morphism_count()).all(|f| c.is_iso(f))
}

/// Length of candidate inverses tried for unmarked generators.
const INVERSE_SEARCH_LENGTH: usize = 6;

/// Groupoid test on a presentation: it suffices that every generator is invertible.
///
/// Unmarked generators are given an inverse by bounded normal-form search;
/// failing that, a finite model (when one exists) decides the question.
pub fn is_groupoid_fp(c: &FpCategory) -> Decision {
    let unmarked: Vec<_> = c.generators().iter().filter(|g| c.mate_of(&g.name).is_none()).collect();
    if unmarked.is_empty() {
        return Decision::Yes;
    }
    let rs = c.rewriting();
    if !rs.is_complete() {
        return Decision::Unknown;
    }
    let has_inverse = |name: &str, src: &str, dst: &str| -> bool {
        let g = Path::new(src, [name]);
        rs.normal_forms(dst, src, INVERSE_SEARCH_LENGTH)
            .unwrap_or_default()
            .into_iter()
            .any(|h| {
                let gh = c.concat(&g, &h).expect("composable");
                let hg = c.concat(&h, &g).expect("composable");
                c.paths_equal(&gh, &Path::id(src)).unwrap_or(false)
                    && c.paths_equal(&hg, &Path::id(dst)).unwrap_or(false)
            })
    };
    if unmarked.iter().all(|g| has_inverse(&g.name, &g.src, &g.dst)) {
        return Decision::Yes;
    }
    match c.to_finite(DEFAULT_BOUND) {
        Ok(fin) => is_groupoid(&fin).into(),
        Err(_) => Decision::Unknown,
    }
}

/// Nonempty with exactly one morphism in every hom-set.
pub fn is_contractible(c: &FiniteCategory) -> bool {
    c.object_count() > 0
        && (0..c.object_count()).all(|x| (0..c.object_count()).all(|y| c.hom(x, y).len() == 1))
}

/// Contractibility of a presentation. Enumeration with hom bound 1 either
/// succeeds (and then every hom-set has one element) or exhibits two
/// distinct normal forms.
pub fn is_contractible_fp(c: &FpCategory) -> Result<bool> {
    if c.object_count() == 0 {
        return Ok(false);
    }
    match c.to_finite(1) {
        Ok(fin) => Ok(is_contractible(&fin)),
        Err(Error::NotFinite { .. }) => Ok(false),
        Err(Error::IncompleteSystem { budget }) => Err(Error::NotDecided(format!(
            "completion exhausted its budget of {budget} rules"
        ))),
        Err(e) => Err(e),
    }
}

/// Equivalence test for presented functors through their finite models.
pub fn is_equivalence_fp(
    f: &FpFunctor,
    bound: usize,
) -> Result<std::result::Result<EquivalenceCertificate, NonEquivalence>> {
    Ok(is_equivalence(&f.to_finite(bound)?))
}

/// A pair of mutually inverse functors between presentations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub forward: FpFunctor,
    pub inverse: FpFunctor,
}

impl IsoCertificate {
    /// Both functors are valid and both composites are the identity on
    /// objects and, up to the relations, on every generator.
    pub fn verify(&self) -> Result<()> {
        let reject = |m: String| Err(Error::CertificateRejected(m));
        self.forward.verify()?;
        self.inverse.verify()?;
        for (f, g) in [(&self.forward, &self.inverse), (&self.inverse, &self.forward)] {
            let round = f.then(g)?;
            let cat = f.source();
            for o in cat.objects() {
                if round.map_object(o)? != o {
                    return reject(format!("round trip moves object {o}"));
                }
            }
            for gen in cat.generators() {
                if !cat.paths_equal(&round.map_generator(&gen.name)?, &cat.gen_path(&gen.name)?)? {
                    return reject(format!("round trip moves generator {}", gen.name));
                }
            }
        }
        Ok(())
    }
}

/// Searches for an inverse of `f` among functors whose generator images are
/// normal forms of length at most `max_len`.
pub fn find_inverse(f: &FpFunctor, max_len: usize) -> Result<Option<IsoCertificate>> {
    let (d, e) = (f.source(), f.target());
    let mut back: BTreeMap<&str, &str> = BTreeMap::new();
    for (o, image) in f.object_map() {
        if back.insert(image, o).is_some() {
            return Ok(None);
        }
    }
    if back.len() != e.object_count() {
        return Ok(None);
    }
    let object_map: BTreeMap<String, String> = back.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    let rs = d.rewriting();
    let mut gen_map = BTreeMap::new();
    for h in e.generators() {
        let target = e.gen_path(&h.name)?;
        let found = rs
            .normal_forms(&object_map[&h.src], &object_map[&h.dst], max_len)?
            .into_iter()
            .find(|p| matches!(f.map_path(p).and_then(|q| e.paths_equal(&q, &target)), Ok(true)));
        match found {
            Some(p) => gen_map.insert(h.name.clone(), p),
            None => return Ok(None),
        };
    }
    let inverse = FpFunctor::new(e.clone(), d.clone(), object_map, gen_map)?;
    let cert = IsoCertificate {
        forward: f.clone(),
        inverse,
    };
    Ok(cert.verify().is_ok().then_some(cert))
}

/// A small generating set: morphisms added in index order unless already
/// composites of earlier ones. Returns the generators and, for every
/// morphism, how to build it (`None` for identities).
fn generating_set(c: &FiniteCategory) -> (Vec<usize>, Vec<Option<(usize, usize)>>) {
    let m = c.morphism_count();
    let mut built: Vec<Option<Option<(usize, usize)>>> = vec![None; m];
    for x in 0..c.object_count() {
        built[c.identity(x)] = Some(None);
    }
    let mut gens = Vec::new();
    for f in 0..m {
        if built[f].is_some() {
            continue;
        }
        gens.push(f);
        built[f] = Some(Some((c.identity(c.src(f)), f)));
        // close under right composition; earlier morphisms only need the new generator
        let mut queue: Vec<usize> = vec![f];
        for a in 0..m {
            if a != f && built[a].is_some() {
                if let Some(h) = c.compose(a, f) {
                    if built[h].is_none() {
                        built[h] = Some(Some((a, f)));
                        queue.push(h);
                    }
                }
            }
        }
        while let Some(a) = queue.pop() {
            for &g in &gens {
                if let Some(h) = c.compose(a, g) {
                    if built[h].is_none() {
                        built[h] = Some(Some((a, g)));
                        queue.push(h);
                    }
                }
            }
        }
    }
    (gens, built.into_iter().map(|b| b.expect("every morphism is generated")).collect())
}

/// Object maps `C -> D` satisfying `keep`, in lexicographic order.
fn object_maps(
    n: usize,
    targets: usize,
    keep: &dyn Fn(&[usize]) -> bool,
) -> Vec<Vec<usize>> {
    fn go(
        n: usize,
        targets: usize,
        cur: &mut Vec<usize>,
        keep: &dyn Fn(&[usize]) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !keep(cur) {
            return;
        }
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for t in 0..targets {
            cur.push(t);
            go(n, targets, cur, keep, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, targets, &mut Vec::new(), keep, &mut out);
    out
}

/// Enumerates functors `C -> D` whose object maps pass `keep_objects`,
/// stopping early when `visit` returns `true`. Errors before searching if
/// the candidate count exceeds `bound`.
fn search_functors(
    c: &Arc<FiniteCategory>,
    d: &Arc<FiniteCategory>,
    bound: u128,
    keep_objects: &dyn Fn(&[usize]) -> bool,
    visit: &mut dyn FnMut(FinFunctor) -> bool,
) -> Result<()> {
    let (gens, recipe) = generating_set(c);
    let maps = object_maps(c.object_count(), d.object_count(), keep_objects);
    let mut size: u128 = 0;
    for om in &maps {
        let count = gens.iter().fold(1u128, |acc, &g| {
            acc.saturating_mul(d.hom(om[c.src(g)], om[c.dst(g)]).len() as u128)
        });
        size = size.saturating_add(count);
        if size > bound {
            return Err(Error::SearchSpaceTooLarge { size, bound });
        }
    }
    let order = build_order(c, &recipe);
    for om in maps {
        let choices: Vec<&[usize]> = gens.iter().map(|&g| d.hom(om[c.src(g)], om[c.dst(g)])).collect();
        if choices.iter().any(|ch| ch.is_empty()) {
            continue;
        }
        let mut pick = vec![0usize; gens.len()];
        loop {
            if let Some(mor_map) = extend(c, d, &om, &gens, &pick, &choices, &recipe, &order) {
                let f = FinFunctor {
                    source: c.clone(),
                    target: d.clone(),
                    object_map: om.clone(),
                    mor_map,
                };
                if f.check() && visit(f) {
                    return Ok(());
                }
            }
            // odometer increment
            let mut i = 0;
            while i < pick.len() {
                pick[i] += 1;
                if pick[i] < choices[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
    }
    Ok(())
}

/// Morphisms ordered so that every recipe refers only to earlier entries.
fn build_order(c: &FiniteCategory, recipe: &[Option<(usize, usize)>]) -> Vec<usize> {
    let m = c.morphism_count();
    let mut done = vec![false; m];
    let mut order = Vec::with_capacity(m);
    while order.len() < m {
        for f in 0..m {
            if done[f] {
                continue;
            }
            let ready = match recipe[f] {
                None => true,
                Some((a, g)) => a == f || done[a] || (a == c.identity(c.src(f)) && g == f),
            };
            if ready {
                done[f] = true;
                order.push(f);
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    c: &FiniteCategory,
    d: &FiniteCategory,
    om: &[usize],
    gens: &[usize],
    pick: &[usize],
    choices: &[&[usize]],
    recipe: &[Option<(usize, usize)>],
    order: &[usize],
) -> Option<Vec<usize>> {
    let mut image = vec![usize::MAX; c.morphism_count()];
    let gen_image: HashMap<usize, usize> = gens.iter().zip(pick).zip(choices).map(|((&g, &p), ch)| (g, ch[p])).collect();
    for &f in order {
        image[f] = match recipe[f] {
            None => d.identity(om[c.src(f)]),
            Some((_, g)) if g == f => gen_image[&g],
            Some((a, g)) => d.compose(image[a], gen_image[&g])?,
        };
    }
    Some(image)
}

/// All functors `C -> D`.
pub fn all_functors(c: &FiniteCategory, d: &FiniteCategory, bound: u128) -> Result<Vec<FinFunctor>> {
    let (c, d) = (Arc::new(c.clone()), Arc::new(d.clone()));
    let mut out = Vec::new();
    search_functors(&c, &d, bound, &|_| true, &mut |f| {
        out.push(f);
        false
    })?;
    Ok(out)
}

/// First functor `C -> D` that is an equivalence, if any.
///
/// Object maps are pruned by requiring `|hom(x, y)| = |hom(Fx, Fy)|`, which
/// every fully faithful functor satisfies.
pub fn find_equivalence(c: &FiniteCategory, d: &FiniteCategory, bound: u128) -> Result<Option<FinFunctor>> {
    let (ca, da) = (Arc::new(c.clone()), Arc::new(d.clone()));
    let keep = |om: &[usize]| {
        let k = om.len();
        (0..k).all(|x| {
            c.hom(x, k - 1).len() == d.hom(om[x], om[k - 1]).len()
                && c.hom(k - 1, x).len() == d.hom(om[k - 1], om[x]).len()
        })
    };
    let mut found = None;
    search_functors(&ca, &da, bound, &|om| om.is_empty() || keep(om), &mut |f| {
        if is_equivalence(&f).is_ok() {
            found = Some(f);
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Decision::Yes => "yes",
            Decision::No => "no",
            Decision::Unknown => "unknown",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_SEARCH_BOUND;

    fn c2() -> FiniteCategory {
        FiniteCategory::chaotic(["x", "y"])
    }

    #[test]
    fn iso_core_examples() {
        let core = iso_core(&FiniteCategory::arrow());
        assert_eq!(core.morphism_count(), 2);
        assert_eq!(iso_core(&c2()), c2());
        let z3 = FiniteCategory::cyclic(3);
        assert_eq!(iso_core(&z3), z3);
    }

    #[test]
    fn isofibration_examples() {
        let c2 = Arc::new(c2());
        assert!(is_isofibration(&FinFunctor::to_terminal(c2.clone())));
        let pick = FinFunctor::constant(Arc::new(FiniteCategory::terminal()), c2.clone(), 0);
        assert!(!is_isofibration(&pick));
        assert!(is_isofibration(&FinFunctor::identity(c2)));
    }

    #[test]
    fn equivalence_examples() {
        let to_one = FinFunctor::to_terminal(Arc::new(c2()));
        let cert = is_equivalence(&to_one).unwrap();
        cert.verify(&to_one).unwrap();
        let s0 = Arc::new(FiniteCategory::discrete(["n", "s"]));
        let inc = FinFunctor::constant(Arc::new(FiniteCategory::terminal()), s0, 0);
        assert_eq!(is_equivalence(&inc), Err(NonEquivalence::NotEssentiallySurjective { object: 1 }));
    }

    #[test]
    fn tampered_certificate_is_rejected() {
        let id = FinFunctor::identity(Arc::new(c2()));
        let mut cert = is_equivalence(&id).unwrap();
        cert.essentially_surjective.pop();
        assert!(cert.verify(&id).is_err());
    }

    #[test]
    fn groupoid_and_contractible() {
        assert!(is_groupoid(&c2()));
        assert!(!is_groupoid(&FiniteCategory::arrow()));
        assert_eq!(is_groupoid_fp(&FpCategory::integers()), Decision::Yes);
        assert_eq!(is_groupoid_fp(&FpCategory::arrow()), Decision::No);
        assert!(is_contractible(&c2()));
        assert!(!is_contractible(&FiniteCategory::empty()));
        assert!(!is_contractible_fp(&FpCategory::integers()).unwrap());
        assert!(is_contractible_fp(&FpCategory::terminal()).unwrap());
    }

    #[test]
    fn unmarked_inverse_is_found() {
        let c = FpCategory::builder()
            .objects(["x", "y"])
            .generator("f", "x", "y")
            .generator("g", "y", "x")
            .relation(Path::new("x", ["f", "g"]), Path::id("x"))
            .relation(Path::new("y", ["g", "f"]), Path::id("y"))
            .build()
            .unwrap();
        assert_eq!(is_groupoid_fp(&c), Decision::Yes);
        let free_loop = FpCategory::builder().object("*").generator("l", "*", "*").build().unwrap();
        assert_eq!(is_groupoid_fp(&free_loop), Decision::Unknown);
    }

    #[test]
    fn find_equivalence_examples() {
        let one = FiniteCategory::terminal();
        assert!(find_equivalence(&c2(), &one, DEFAULT_SEARCH_BOUND).unwrap().is_some());
        assert!(find_equivalence(&FiniteCategory::arrow(), &c2(), DEFAULT_SEARCH_BOUND)
            .unwrap()
            .is_none());
        let z3 = FiniteCategory::cyclic(3);
        let e = find_equivalence(&z3, &z3, DEFAULT_SEARCH_BOUND).unwrap().unwrap();
        assert!(e.is_isomorphism());
    }

    #[test]
    fn functor_count_between_cyclic_groups() {
        // homomorphisms Z/4 -> Z/2: 2; Z/3 -> Z/3: 3
        assert_eq!(all_functors(&FiniteCategory::cyclic(4), &FiniteCategory::cyclic(2), 100).unwrap().len(), 2);
        assert_eq!(all_functors(&FiniteCategory::cyclic(3), &FiniteCategory::cyclic(3), 100).unwrap().len(), 3);
    }

    #[test]
    fn search_bound_is_enforced() {
        let big = FiniteCategory::chaotic(["a", "b", "c", "d", "e"]);
        let err = all_functors(&big, &big, 10).unwrap_err();
        assert!(matches!(err, Error::SearchSpaceTooLarge { .. }));
    }
}
