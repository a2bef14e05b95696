//! Shared pools, random generators and brute-force oracles for the
//! integration tests. Oracles here deliberately avoid the library's own
//! search routines.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use catcw::colimits::chaotic;
use catcw::fpcat::FiniteModel;
use catcw::ktheory::PointedCategory;
use catcw::sheaf::FiniteSpace;
use catcw::{FiniteCategory, FpCategory, FpFunctor, Generator, Path, Relation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn obj_map(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// Composable pair `x -f-> y -g-> z`, free.
pub fn composable_pair() -> FpCategory {
    FpCategory::builder()
        .objects(["x", "y", "z"])
        .generator("f", "x", "y")
        .generator("g", "y", "z")
        .build()
        .unwrap()
}

/// Eight presentations with at most three objects, all with finite models.
pub fn pushout_pool() -> Vec<(&'static str, Arc<FpCategory>)> {
    vec![
        ("1", FpCategory::terminal()),
        ("S0", FpCategory::discrete(["n", "s"])),
        ("arrow", FpCategory::arrow()),
        ("C2", chaotic(["p", "q"]).unwrap()),
        ("Z/2", FpCategory::cyclic(2)),
        ("Z/3", FpCategory::cyclic(3)),
        ("x->y->z", composable_pair()),
        ("3", FpCategory::discrete(["i", "j", "k"])),
    ]
    .into_iter()
    .map(|(n, c)| (n, Arc::new(c)))
    .collect()
}

/// A functor from a presentation into a finite category, by indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleFunctor {
    pub objects: Vec<usize>,
    /// Image of every generator, declared or mate, in generator order.
    pub gens: Vec<usize>,
}

/// The morphism of `t` a path denotes under `f`.
pub fn eval(p: &FpCategory, t: &FiniteCategory, f: &OracleFunctor, path: &Path) -> usize {
    let at = p.objects().iter().position(|o| *o == path.at).unwrap();
    let mut m = t.identity(f.objects[at]);
    for g in &path.gens {
        let i = p.generators().iter().position(|h| h.name == *g).unwrap();
        m = t.compose(m, f.gens[i]).expect("endpoints were matched");
    }
    m
}

/// Every functor `p -> t`, by trying all object maps and all generator images
/// and keeping those that satisfy every relation (including mate relations).
pub fn oracle_functors(p: &FpCategory, t: &FiniteCategory) -> Vec<OracleFunctor> {
    let n = p.object_count();
    let mut out = Vec::new();
    let mut objects = vec![0; n];
    if n > 0 && t.object_count() == 0 {
        return out;
    }
    loop {
        let gens = p.generators();
        let choices: Vec<Vec<usize>> = gens
            .iter()
            .map(|g| {
                let s = objects[p.objects().iter().position(|o| *o == g.src).unwrap()];
                let d = objects[p.objects().iter().position(|o| *o == g.dst).unwrap()];
                t.hom(s, d).to_vec()
            })
            .collect();
        if choices.iter().all(|c| !c.is_empty()) {
            let mut idx = vec![0; gens.len()];
            loop {
                let f = OracleFunctor {
                    objects: objects.clone(),
                    gens: idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect(),
                };
                if p.all_relations().iter().all(|r| eval(p, t, &f, &r.lhs) == eval(p, t, &f, &r.rhs)) {
                    out.push(f);
                }
                if !bump(&mut idx, &choices.iter().map(Vec::len).collect::<Vec<_>>()) {
                    break;
                }
            }
        }
        if !bump(&mut objects, &vec![t.object_count(); n]) {
            break;
        }
    }
    out
}

/// Odometer increment; false after the last tuple.
pub fn bump(idx: &mut [usize], radix: &[usize]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < radix[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}

/// The presented functor corresponding to an oracle functor into a finite model.
pub fn to_fp(p: &Arc<FpCategory>, t: &Arc<FpCategory>, model: &FiniteModel, f: &OracleFunctor) -> FpFunctor {
    let object_map = p
        .objects()
        .iter()
        .zip(&f.objects)
        .map(|(o, &i)| (o.clone(), model.cat.objects()[i].clone()))
        .collect();
    let gen_map = p
        .generators()
        .iter()
        .zip(&f.gens)
        .filter(|(g, _)| p.is_declared(&g.name))
        .map(|(g, &m)| (g.name.clone(), model.path(m).clone()))
        .collect();
    FpFunctor::new(p.clone(), t.clone(), object_map, gen_map).unwrap()
}

/// Every functor between finite categories, by trying all object and
/// morphism assignments.
pub fn brute_fin_functors(s: &FiniteCategory, t: &FiniteCategory) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let (n, m) = (s.object_count(), s.morphism_count());
    let mut objects = vec![0; n];
    if n > 0 && t.object_count() == 0 {
        return out;
    }
    loop {
        let mut mors = vec![0; m];
        loop {
            let ok = (0..m).all(|f| {
                let g = mors[f];
                t.src(g) == objects[s.src(f)] && t.dst(g) == objects[s.dst(f)]
            }) && (0..n).all(|x| mors[s.identity(x)] == t.identity(objects[x]))
                && (0..m).all(|f| {
                    (0..m).all(|g| match s.compose(f, g) {
                        Some(h) => t.compose(mors[f], mors[g]) == Some(mors[h]),
                        None => true,
                    })
                });
            if ok {
                out.push((objects.clone(), mors.clone()));
            }
            if !bump(&mut mors, &vec![t.morphism_count(); m]) {
                break;
            }
        }
        if !bump(&mut objects, &vec![t.object_count(); n]) {
            break;
        }
    }
    out
}

/// A random presentation: up to `max_objects` objects, `max_gens` generators,
/// `max_rels` relations between parallel paths of length at most two.
pub fn random_presentation(r: &mut ChaCha8Rng, max_objects: usize, max_gens: usize, max_rels: usize) -> FpCategory {
    let n = r.gen_range(1..=max_objects);
    let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let k = r.gen_range(0..=max_gens);
    let gens: Vec<Generator> = (0..k)
        .map(|i| {
            let (s, d) = (r.gen_range(0..n), r.gen_range(0..n));
            Generator::new(format!("g{i}"), objects[s].clone(), objects[d].clone())
        })
        .collect();
    // paths of length <= 2 grouped by endpoints
    let mut by_ends: BTreeMap<(String, String), Vec<Path>> = BTreeMap::new();
    for o in &objects {
        by_ends.entry((o.clone(), o.clone())).or_default().push(Path::id(o.clone()));
    }
    for g in &gens {
        by_ends
            .entry((g.src.clone(), g.dst.clone()))
            .or_default()
            .push(Path::new(g.src.clone(), [g.name.clone()]));
        for h in gens.iter().filter(|h| h.src == g.dst) {
            by_ends
                .entry((g.src.clone(), h.dst.clone()))
                .or_default()
                .push(Path::new(g.src.clone(), [g.name.clone(), h.name.clone()]));
        }
    }
    let parallel: Vec<&Vec<Path>> = by_ends.values().filter(|v| v.len() >= 2).collect();
    let mut relations = Vec::new();
    if !parallel.is_empty() {
        for _ in 0..r.gen_range(0..=max_rels) {
            let group = parallel.choose(r).unwrap();
            let pair: Vec<&Path> = group.choose_multiple(r, 2).collect();
            relations.push(Relation::new(pair[0].clone(), pair[1].clone()));
        }
    }
    FpCategory::build(objects, gens, relations, vec![]).unwrap()
}

pub fn random_pointed(r: &mut ChaCha8Rng) -> PointedCategory {
    let c = Arc::new(random_presentation(r, 4, 8, 4));
    let base = c.objects().choose(r).unwrap().clone();
    PointedCategory::new(c, base).unwrap()
}

/// The space of up-sets of a random preorder on at most `max_points` points.
pub fn random_space(r: &mut ChaCha8Rng, max_points: usize) -> FiniteSpace {
    let n = r.gen_range(1..=max_points);
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
        for (j, cell) in row.iter_mut().enumerate() {
            if i != j && r.gen_bool(0.3) {
                *cell = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let opens = (0u64..1 << n).filter(|&u| (0..n).all(|i| u >> i & 1 == 0 || (0..n).all(|j| !le[i][j] || u >> j & 1 == 1)));
    FiniteSpace::new((0..n).map(|i| format!("p{i}")).collect(), opens).unwrap()
}

/// Small finite categories used across the sheaf and model tests.
pub fn finite_pool() -> Vec<(&'static str, FiniteCategory)> {
    vec![
        ("1", FiniteCategory::terminal()),
        ("S0", FiniteCategory::discrete(["0", "1"])),
        ("arrow", FiniteCategory::arrow()),
        ("C2", FiniteCategory::chaotic(["x", "y"])),
        ("Z/2", FiniteCategory::cyclic(2)),
        ("Z/3", FiniteCategory::cyclic(3)),
    ]
}
