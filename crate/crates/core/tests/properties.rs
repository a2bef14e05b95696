mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use catcw::colimits::{cofibrant_replacement, pushout};
use catcw::ktheory::{cone, cone_map, cone_unit, suspend};
use catcw::model::{
    all_functors, find_equivalence, invertible_by_scan, invertible_by_tuples, is_contractible, is_contractible_fp,
    is_equivalence, is_groupoid, iso_core,
};
use catcw::sheaf::{sheafify_constant, unit_check, FiniteSpace, GluingVerdict, SheafMap};
use catcw::{FinFunctor, FiniteCategory, FpCategory, FpFunctor, Path, DEFAULT_SEARCH_BOUND};
use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

/// A random path in `c` of length at most `len`, starting anywhere.
fn random_path(r: &mut rand_chacha::ChaCha8Rng, c: &FpCategory, len: usize) -> Path {
    let start = c.objects().choose(r).unwrap().clone();
    random_path_from(r, c, start, len)
}

fn random_path_from(r: &mut rand_chacha::ChaCha8Rng, c: &FpCategory, start: String, len: usize) -> Path {
    let mut p = Path::id(start.clone());
    let mut at = start;
    for _ in 0..r.gen_range(0..=len) {
        let out: Vec<_> = c.generators().iter().filter(|g| g.src == at).collect();
        let Some(g) = out.choose(r) else { break };
        p.gens.push(g.name.clone());
        at = g.dst.clone();
    }
    p
}

/// Presentations with invertible generators and group-like relations, which
/// complete quickly.
fn random_group_like(r: &mut rand_chacha::ChaCha8Rng) -> FpCategory {
    let n = r.gen_range(1..=2);
    let orders = [2, 3];
    let mut b = FpCategory::builder().objects((0..n).map(|i| format!("o{i}")));
    for i in 0..r.gen_range(1..=2) {
        let (s, d) = (format!("o{}", r.gen_range(0..n)), format!("o{}", r.gen_range(0..n)));
        let name = format!("g{i}");
        b = b.generator(name.clone(), s.clone(), d.clone()).invertible(name.clone());
        if s == d {
            let k = *orders.choose(r).unwrap();
            b = b.relation(Path::new(s.clone(), vec![name; k]), Path::id(s));
        }
    }
    b.build().unwrap()
}

fn random_finite(r: &mut rand_chacha::ChaCha8Rng) -> Option<FiniteCategory> {
    let c = if r.gen_bool(0.5) {
        random_presentation(r, 3, 3, 3)
    } else {
        random_group_like(r)
    };
    c.complete(60).to_finite(24).ok()
}

/// Union-find oracle: classes of the graph on B ⊔ C with an edge f(a) -- g(a).
fn glued_classes(f: &FpFunctor, g: &FpFunctor) -> usize {
    let (b, c) = (f.target(), g.target());
    let nb = b.object_count();
    let n = nb + c.object_count();
    let mut adj = vec![Vec::new(); n];
    for o in f.source().objects() {
        let x = b.objects().iter().position(|p| p == f.map_object(o).unwrap()).unwrap();
        let y = nb + c.objects().iter().position(|p| p == g.map_object(o).unwrap()).unwrap();
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut seen = vec![false; n];
    let mut classes = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        classes += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    classes
}

fn random_oracle_leg(r: &mut rand_chacha::ChaCha8Rng, a: &Arc<FpCategory>, pool: &[(&str, Arc<FpCategory>)]) -> FpFunctor {
    let (_, b) = pool.choose(r).unwrap();
    let model = b.finite_model(64).unwrap();
    let all = oracle_functors(a, &model.cat);
    to_fp(a, b, &model, all.choose(r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_forms_are_idempotent_and_compatible_with_concatenation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_group_like(&mut r);
        let rs = c.rewriting();
        prop_assume!(rs.is_complete());
        let p = random_path(&mut r, &c, 6);
        let np = rs.normal_form(&p).unwrap();
        prop_assert_eq!(rs.normal_form(&np).unwrap(), np.clone());
        let (_, end) = c.endpoints(&p).unwrap();
        let q = random_path_from(&mut r, &c, end, 6);
        let pq = c.concat(&p, &q).unwrap();
        let npq = c.concat(&np, &rs.normal_form(&q).unwrap()).unwrap();
        prop_assert_eq!(rs.normal_form(&pq).unwrap(), rs.normal_form(&npq).unwrap());
    }

    #[test]
    fn finite_model_composition_matches_paths(seed in any::<u64>()) {
        let mut r = rng(seed);
        let c = random_group_like(&mut r);
        let Ok(model) = c.finite_model(24) else { return Ok(()) };
        let p = random_path(&mut r, &c, 5);
        let m = model.morphism_of(&p).unwrap();
        let at = model.cat.object_index(&p.at).unwrap();
        let mut step = model.cat.identity(at);
        for g in &p.gens {
            let gi = model.morphism_of(&Path::new(c.generator(g).unwrap().src.clone(), [g.clone()])).unwrap();
            step = model.cat.compose(step, gi).unwrap();
        }
        prop_assert_eq!(m, step);
        model.cat.check_laws().unwrap();
    }

    #[test]
    fn pushout_objects_match_union_find(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = pushout_pool();
        let (_, a) = pool[..3].choose(&mut r).unwrap().clone();
        let f = random_oracle_leg(&mut r, &a, &pool);
        let g = random_oracle_leg(&mut r, &a, &pool);
        let p = pushout(&f, &g).unwrap();
        p.verify().unwrap();
        prop_assert_eq!(p.apex.object_count(), glued_classes(&f, &g));
    }

    #[test]
    fn cofibrant_replacement_is_a_cofibration(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = pushout_pool();
        let (_, a) = pool.choose(&mut r).unwrap().clone();
        let g = random_oracle_leg(&mut r, &a, &pool);
        let rep = cofibrant_replacement(&g).unwrap();
        prop_assert!(rep.is_cofibration());
        rep.verify().unwrap();
    }

    #[test]
    fn iso_core_routes_agree(seed in any::<u64>()) {
        let mut r = rng(seed);
        let Some(c) = random_finite(&mut r) else { return Ok(()) };
        prop_assert_eq!(invertible_by_tuples(&c), invertible_by_scan(&c));
        let core = iso_core(&c);
        prop_assert!(is_groupoid(&core));
        prop_assert_eq!(core.object_count(), c.object_count());
    }

    #[test]
    fn contractible_iff_equivalent_to_the_point(seed in any::<u64>()) {
        let mut r = rng(seed);
        let Some(c) = random_finite(&mut r) else { return Ok(()) };
        let to_point = find_equivalence(&c, &FiniteCategory::terminal(), DEFAULT_SEARCH_BOUND).unwrap();
        prop_assert_eq!(is_contractible(&c), to_point.is_some());
    }

    #[test]
    fn two_out_of_three(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = finite_pool();
        let pick = |r: &mut rand_chacha::ChaCha8Rng| Arc::new(pool.choose(r).unwrap().1.clone());
        let (a, b, c) = (pick(&mut r), pick(&mut r), pick(&mut r));
        let fs = all_functors(&a, &b, DEFAULT_SEARCH_BOUND).unwrap();
        let gs = all_functors(&b, &c, DEFAULT_SEARCH_BOUND).unwrap();
        prop_assume!(!fs.is_empty() && !gs.is_empty());
        let f = fs.choose(&mut r).unwrap();
        let g = gs.choose(&mut r).unwrap();
        let fg = f.then(g).unwrap();
        let eq = |h: &FinFunctor| is_equivalence(h).is_ok();
        let count = [eq(f), eq(g), eq(&fg)].iter().filter(|&&b| b).count();
        prop_assert_ne!(count, 2);
    }

    #[test]
    fn cone_and_suspension_shapes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_pointed(&mut r);
        prop_assert!(is_contractible_fp(cone(&x).cat()).unwrap());
        prop_assert!(cone_unit(&x).is_cofibration());
        prop_assert_eq!(suspend(&x).unwrap().cat().object_count(), 1);
    }

    #[test]
    fn cone_of_any_functor_is_an_equivalence(seed in any::<u64>()) {
        let mut r = rng(seed);
        let pool = pushout_pool();
        let (_, a) = pool.choose(&mut r).unwrap().clone();
        let f = random_oracle_leg(&mut r, &a, &pool);
        let pf = cone_map(&f).unwrap().to_finite(64).unwrap();
        prop_assert!(is_equivalence(&pf).is_ok());
    }

    #[test]
    fn constant_sheaves_glue_and_unit_detects_connectedness(seed in any::<u64>()) {
        let mut r = rng(seed);
        let space = random_space(&mut r, 4);
        let s0 = FiniteCategory::discrete(["0", "1"]);
        let f = sheafify_constant(&s0, &space);
        prop_assert_eq!(f.presheaf().gluing().unwrap(), GluingVerdict::Holds);
        prop_assert_eq!(unit_check(&s0, &space).is_ok(), space.is_connected());
    }

    #[test]
    fn unit_is_an_isomorphism_on_connected_spaces(seed in any::<u64>()) {
        let mut r = rng(seed);
        let space = random_space(&mut r, 4);
        prop_assume!(space.is_connected());
        for (_, a) in finite_pool() {
            unit_check(&a, &space).unwrap().verify().unwrap();
        }
    }

    #[test]
    fn constant_image_agrees_with_brute_force(seed in any::<u64>()) {
        let mut r = rng(seed);
        let space = random_space(&mut r, 3);
        let pool = finite_pool();
        let a = Arc::new(pool[..4].choose(&mut r).unwrap().1.clone());
        let b = Arc::new(pool[..4].choose(&mut r).unwrap().1.clone());
        let candidates = brute_fin_functors(&a, &b);
        prop_assume!(!candidates.is_empty());
        // one random functor per component of the whole space
        let comps = space.connected_components(space.full()).unwrap();
        let per_comp: Vec<&(Vec<usize>, Vec<usize>)> = comps.iter().map(|_| candidates.choose(&mut r).unwrap()).collect();
        let local: Vec<FinFunctor> = (0..space.points().len())
            .map(|x| {
                let k = comps.iter().position(|c| c >> x & 1 == 1).unwrap();
                let (o, m) = per_comp[k].clone();
                FinFunctor::new(a.clone(), b.clone(), o, m).unwrap()
            })
            .collect();
        let map = SheafMap::from_points(&a, &b, &space, &local).unwrap();
        let got = catcw::sheaf::is_in_constant_image(&map).unwrap();
        let oracle = candidates.iter().any(|g| per_comp.iter().all(|&h| h == g));
        prop_assert_eq!(got, oracle);
    }

    #[test]
    fn sheafified_equivalences_are_levelwise_equivalences(seed in any::<u64>()) {
        let mut r = rng(seed);
        let space = random_space(&mut r, 3);
        let c2 = Arc::new(FiniteCategory::chaotic(["x", "y"]));
        let one = Arc::new(FiniteCategory::terminal());
        let z2 = Arc::new(FiniteCategory::cyclic(2));
        let equivalences = [
            FinFunctor::to_terminal(c2.clone()),
            FinFunctor::constant(one, c2.clone(), 1),
            FinFunctor::identity(z2),
            FinFunctor::new(c2.clone(), c2.clone(), vec![1, 0], vec![3, 2, 1, 0]).unwrap(),
        ];
        let w = equivalences.choose(&mut r).unwrap();
        prop_assert!(is_equivalence(w).is_ok());
        let m = SheafMap::sheafified(w, &space).unwrap();
        for c in &m.components {
            prop_assert!(is_equivalence(c).is_ok());
        }
    }

    #[test]
    fn sheafified_spheres_are_spheres(seed in any::<u64>(), n in prop::sample::select(vec![0usize, 2, 3])) {
        let mut r = rng(seed);
        let space = random_space(&mut r, 4);
        prop_assume!(space.is_connected());
        let sn = catcw::cw::sphere(n).unwrap().to_finite(64).unwrap();
        let f = sheafify_constant(&sn, &space);
        for (i, &u) in space.opens().iter().enumerate() {
            if u == 0 {
                continue;
            }
            let k = space.connected_components(u).unwrap().len();
            let section = &f.presheaf().sections()[i];
            let want = FiniteCategory::power(&sn, k);
            let isos = all_functors(&want, section, DEFAULT_SEARCH_BOUND).unwrap();
            prop_assert!(isos.iter().any(|g| g.is_isomorphism()));
            if k == 1 {
                prop_assert_eq!(section.object_count(), sn.object_count());
                prop_assert_eq!(section.morphism_count(), sn.morphism_count());
            }
        }
    }
}

#[test]
fn random_spaces_are_valid_topologies() {
    let mut r = rng(11);
    let mut kinds = BTreeSet::new();
    for _ in 0..50 {
        let s: FiniteSpace = random_space(&mut r, 4);
        kinds.insert((s.points().len(), s.opens().len(), s.is_connected()));
    }
    assert!(kinds.len() > 5);
}
