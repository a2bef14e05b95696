//! Spheres, cell attachment, explicit 1- and 2-complexes, and the CW classifier.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::colimits::{coproduct, cofibrant_replacement, one_sided_homotopy_pushout, pushout};
use crate::error::{Error, Result};
use crate::fpcat::{mate_name, FiniteCategory, FpCategory, FpFunctor, Generator, Path};
use crate::model::{is_groupoid, is_groupoid_fp, Decision};
use crate::DEFAULT_BOUND;

/// One chosen presentation of the `n`-sphere.
///
/// `S^0` is the discrete category on `n`, `s`; `S^1` is the pushout of
/// `S^0 -> C_2` along `S^0 -> 1`; higher spheres are one-sided homotopy
/// pushouts of `S^(n-1) -> 1` along itself.
pub fn sphere(n: usize) -> Result<FpCategory> {
    let s0 = FpCategory::discrete(["n", "s"]);
    if n == 0 {
        return Ok(s0);
    }
    let s0 = Arc::new(s0);
    let collapse = FpFunctor::to_terminal(s0);
    let mut current = pushout(&cofibrant_replacement(&collapse)?, &collapse)?.apex;
    for _ in 1..n {
        let c = FpFunctor::to_terminal(current);
        current = one_sided_homotopy_pushout(&c, &c)?.apex;
    }
    Ok(Arc::unwrap_or_clone(current))
}

/// Attaches cells of one dimension: the one-sided homotopy pushout of the
/// copaired attaching map `⊔ S_i -> base` along `⊔ S_i -> ⊔ 1`.
pub fn attach_cells(base: Arc<FpCategory>, attachments: &[(usize, FpFunctor)]) -> Result<FpCategory> {
    let dims: Vec<usize> = attachments.iter().map(|(d, _)| *d).collect();
    if dims.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::MixedDimensions(dims));
    }
    if attachments.is_empty() {
        return Ok((*base).clone());
    }
    for (_, f) in attachments {
        if *f.target() != base {
            return Err(Error::InvalidFunctor("attaching map does not land in the base".into()));
        }
    }
    let spheres: Vec<Arc<FpCategory>> = attachments.iter().map(|(_, f)| f.source().clone()).collect();
    let domain = coproduct(&spheres);
    let maps: Vec<FpFunctor> = attachments.iter().map(|(_, f)| f.clone()).collect();
    let attach = domain.copair(&maps, base)?;
    let pt = Arc::new(FpCategory::terminal());
    let points = coproduct(&std::iter::repeat_n(pt, spheres.len()).collect::<Vec<_>>());
    let to_points: Vec<FpFunctor> = spheres
        .iter()
        .zip(&points.injections)
        .map(|(s, inj)| FpFunctor::to_terminal(s.clone()).then(inj))
        .collect::<Result<_>>()?;
    let collapse = domain.copair(&to_points, points.apex.clone())?;
    let result = one_sided_homotopy_pushout(&attach, &collapse)?;
    Ok(Arc::unwrap_or_clone(result.apex))
}

/// One connected piece of a 1- or 2-complex: a basepoint whose automorphism
/// group is generated by `generators` (subject to `relations`), plus
/// `extra_objects` each joined to the basepoint by one isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    #[serde(default)]
    pub extra_objects: Vec<String>,
    #[serde(default)]
    pub generators: Vec<String>,
    /// Words in the generators; `x^-1` denotes the inverse of `x`.
    #[serde(default)]
    pub relations: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidPresentation {
    pub components: Vec<Component>,
}

fn fresh(base: String, taken: &HashSet<String>) -> String {
    let mut n = base;
    while taken.contains(&n) {
        n.push('\'');
    }
    n
}

/// The free groupoid of one component: pushout of
/// `⊔_{S ⊔ T} S^0 -p-> 1 ⊔ T` along `⊔_{S ⊔ T} S^0 -> ⊔_{S ⊔ T} C_2`.
///
/// `p` sends both points of the `s`-th copy to the basepoint, and the two
/// points of the `t`-th copy to the basepoint and to `t`. The `C_2` copies
/// carry one invertible generator each, named `s` resp. `c_t`.
fn one_component(index: usize, s: &[String], t: &[String]) -> Result<(FpCategory, String)> {
    let mut taken: HashSet<String> = s.iter().chain(t).cloned().collect();
    let basepoint = fresh(format!("b{index}"), &taken);
    taken.insert(basepoint.clone());
    let mut objects = vec![basepoint.clone()];
    objects.extend(t.iter().cloned());
    let base = Arc::new(FpCategory::build(objects, vec![], vec![], vec![])?);

    // copy k of S^0 has points k.0, k.1; C_2 copy k adds generator `label`
    let labels: Vec<(String, Option<&String>)> = s
        .iter()
        .map(|x| (x.clone(), None))
        .chain(t.iter().map(|x| (fresh(format!("c_{x}"), &taken), Some(x))))
        .collect();
    let point = |k: usize, e: usize| fresh(format!("{k}.{e}"), &taken);
    let mut sphere_objects = Vec::new();
    let mut generators = Vec::new();
    let mut p_objects = BTreeMap::new();
    for (k, (label, target)) in labels.iter().enumerate() {
        let (x0, x1) = (point(k, 0), point(k, 1));
        sphere_objects.extend([x0.clone(), x1.clone()]);
        generators.push(Generator::new(label.clone(), x0.clone(), x1.clone()));
        p_objects.insert(x0, basepoint.clone());
        p_objects.insert(x1, target.map_or(basepoint.clone(), |t| t.clone()));
    }
    let spheres = Arc::new(FpCategory::build(sphere_objects.clone(), vec![], vec![], vec![])?);
    let invertible = generators.iter().map(|g| g.name.clone()).collect();
    let cylinders = Arc::new(FpCategory::build(sphere_objects.clone(), generators, vec![], invertible)?);
    let p = FpFunctor::new(spheres.clone(), base, p_objects, BTreeMap::new())?;
    let inclusion = FpFunctor::new(
        spheres,
        cylinders,
        sphere_objects.iter().map(|o| (o.clone(), o.clone())).collect(),
        BTreeMap::new(),
    )?;
    let result = pushout(&p, &inclusion)?;
    Ok((Arc::unwrap_or_clone(result.apex), basepoint))
}

/// Builds a free groupoid, one connected component per `(S, T)` pair.
pub fn build_one_complex(components: &[(Vec<String>, Vec<String>)]) -> Result<FpCategory> {
    let parts = components
        .iter()
        .enumerate()
        .map(|(i, (s, t))| one_component(i, s, t).map(|(c, _)| Arc::new(c)))
        .collect::<Result<Vec<_>>>()?;
    Ok(join(parts))
}

fn join(mut parts: Vec<Arc<FpCategory>>) -> FpCategory {
    if parts.len() == 1 {
        return Arc::unwrap_or_clone(parts.pop().unwrap());
    }
    Arc::unwrap_or_clone(coproduct(&parts).apex)
}

fn parse_word(word: &[String], generators: &[String], at: &str) -> Result<Path> {
    let known: HashSet<&str> = generators.iter().map(String::as_str).collect();
    let gens = word
        .iter()
        .map(|tok| {
            let base = tok.strip_suffix("^-1").unwrap_or(tok);
            if known.contains(base) {
                Ok(tok.clone())
            } else {
                Err(Error::MalformedToken(tok.clone()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Path::new(at, gens))
}

/// Builds a groupoid from a presentation: the free stage of each component,
/// then one 2-cell per relation word, attached along `⊔_J Z -> ⊔_J 1`.
pub fn build_two_complex(g: &GroupoidPresentation) -> Result<FpCategory> {
    let mut parts = Vec::new();
    for (i, c) in g.components.iter().enumerate() {
        let mut seen = HashSet::new();
        for name in c.generators.iter().chain(&c.extra_objects) {
            if name.ends_with("^-1") || !seen.insert(name) {
                return Err(Error::InvalidGroupoidPresentation(format!("bad or repeated name `{name}`")));
            }
        }
        let (free, basepoint) = one_component(i, &c.generators, &c.extra_objects)?;
        let free = Arc::new(free);
        let z = Arc::new(sphere(1)?);
        let loop_gen = z.declared_generators().next().expect("circle has a generator").name.clone();
        let attachments = c
            .relations
            .iter()
            .map(|w| {
                let image = parse_word(w, &c.generators, &basepoint)?;
                let f = FpFunctor::new(
                    z.clone(),
                    free.clone(),
                    z.objects().iter().map(|o| (o.clone(), basepoint.clone())).collect(),
                    [(loop_gen.clone(), image)].into(),
                )?;
                Ok((1, f))
            })
            .collect::<Result<Vec<_>>>()?;
        parts.push(Arc::new(attach_cells(free, &attachments)?));
    }
    Ok(join(parts))
}

/// Reads a presentation off a finite groupoid: per isomorphism class of
/// objects, a greedy generating set of the first object's automorphism group
/// and the relators `w(e) s w(e s)^-1` of its Cayley graph.
pub fn read_off_presentation(g: &FiniteCategory) -> Result<GroupoidPresentation> {
    if !is_groupoid(g) {
        return Err(Error::InvalidGroupoidPresentation("category is not a groupoid".into()));
    }
    let n = g.object_count();
    let mut assigned = vec![false; n];
    let taken: HashSet<String> = g.objects().iter().cloned().collect();
    let mut components = Vec::new();
    for b in 0..n {
        if assigned[b] {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&y| !g.hom(b, y).is_empty()).collect();
        members.iter().for_each(|&y| assigned[y] = true);
        let extra_objects = members[1..].iter().map(|&y| g.objects()[y].clone()).collect();

        let group = g.hom(b, b);
        let id = g.identity(b);
        // greedy generators and shortest words (BFS from the identity)
        let mut gens: Vec<usize> = Vec::new();
        let mut word: BTreeMap<usize, Vec<usize>> = BTreeMap::from([(id, vec![])]);
        for &e in group {
            if word.contains_key(&e) {
                continue;
            }
            gens.push(e);
            word = BTreeMap::from([(id, vec![])]);
            let mut queue = VecDeque::from([id]);
            while let Some(x) = queue.pop_front() {
                for (k, &s) in gens.iter().enumerate() {
                    let y = g.compose(x, s).expect("endomorphisms compose");
                    if !word.contains_key(&y) {
                        let mut w = word[&x].clone();
                        w.push(k);
                        word.insert(y, w);
                        queue.push_back(y);
                    }
                }
            }
        }
        let names: Vec<String> = (0..gens.len())
            .map(|k| fresh(format!("g{}_{}", components.len(), k + 1), &taken))
            .collect();
        let mut relations = Vec::new();
        for &e in group {
            for (k, &s) in gens.iter().enumerate() {
                let es = g.compose(e, s).expect("endomorphisms compose");
                let mut w: Vec<String> = word[&e].iter().map(|&j| names[j].clone()).collect();
                w.push(names[k].clone());
                w.extend(word[&es].iter().rev().map(|&j| mate_name(&names[j])));
                let w = free_reduce(w);
                if !w.is_empty() && !relations.contains(&w) {
                    relations.push(w);
                }
            }
        }
        components.push(Component {
            extra_objects,
            generators: names,
            relations,
        });
    }
    Ok(GroupoidPresentation { components })
}

fn invert_token(t: &str) -> String {
    t.strip_suffix("^-1").map_or_else(|| mate_name(t), str::to_string)
}

/// Cancels adjacent `x x^-1` pairs.
pub fn free_reduce(word: Vec<String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(word.len());
    for t in word {
        if out.last().is_some_and(|l| *l == invert_token(&t)) {
            out.pop();
        } else {
            out.push(t);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CwKind {
    NotCW,
    Dim0,
    Dim1,
    Dim2,
}

/// Free generators of the automorphism group at one basepoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeComponent {
    pub basepoint: String,
    pub generators: Vec<Path>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CwWitness {
    NonInvertible { morphism: String },
    /// Every automorphism group is trivial.
    Thin,
    Free { components: Vec<FreeComponent> },
    Groupoid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwVerdict {
    pub kind: CwKind,
    pub witness: CwWitness,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Classifies a finite category. A finite free group is trivial, so a finite
/// groupoid is either thin (0-dimensional) or genuinely 2-dimensional.
pub fn cw_classify(c: &FiniteCategory) -> CwVerdict {
    if let Some(f) = (0..c.morphism_count()).find(|&f| !c.is_iso(f)) {
        return CwVerdict {
            kind: CwKind::NotCW,
            witness: CwWitness::NonInvertible {
                morphism: c.label(f).to_string(),
            },
            note: None,
        };
    }
    let thin = (0..c.object_count()).all(|x| c.hom(x, x).len() == 1);
    let (kind, witness) = if thin {
        (CwKind::Dim0, CwWitness::Thin)
    } else {
        (CwKind::Dim2, CwWitness::Groupoid)
    };
    CwVerdict { kind, witness, note: None }
}

/// Classifies a presentation.
///
/// Freeness is witnessed syntactically: after discarding relations that
/// merely declare two generators mutually inverse, no relation may remain.
/// A spanning forest of the underlying graph then yields free generators.
pub fn cw_classify_fp(c: &FpCategory) -> Result<CwVerdict> {
    match is_groupoid_fp(c) {
        Decision::Unknown => {
            return Err(Error::NotDecided("could not decide whether every generator is invertible".into()))
        }
        Decision::No => return Ok(cw_classify(&c.to_finite(DEFAULT_BOUND)?)),
        Decision::Yes => {}
    }
    if let Some(edges) = free_edges(c) {
        let components = spanning_forest_loops(c, &edges);
        let rank: usize = components.iter().map(|f| f.generators.len()).sum();
        return Ok(if rank == 0 {
            CwVerdict {
                kind: CwKind::Dim0,
                witness: CwWitness::Thin,
                note: None,
            }
        } else {
            CwVerdict {
                kind: CwKind::Dim1,
                witness: CwWitness::Free { components },
                note: None,
            }
        });
    }
    match c.to_finite(DEFAULT_BOUND) {
        Ok(fin) => Ok(cw_classify(&fin)),
        Err(Error::NotFinite { .. }) | Err(Error::IncompleteSystem { .. }) => Ok(CwVerdict {
            kind: CwKind::Dim2,
            witness: CwWitness::Groupoid,
            note: Some("freeness of the automorphism groups was not witnessed syntactically".into()),
        }),
        Err(e) => Err(e),
    }
}

/// One representative generator per inverse pair, provided every relation
/// is an inverse-pair relation.
fn free_edges(c: &FpCategory) -> Option<Vec<Generator>> {
    let mut partner: BTreeMap<String, String> = BTreeMap::new();
    for (g, m) in c.invertible() {
        partner.insert(g.clone(), m.clone());
        partner.insert(m.clone(), g.clone());
    }
    let rels = c.relations();
    for r in rels {
        let pair = match (r.lhs.gens.as_slice(), r.rhs.gens.as_slice()) {
            ([a, b], []) | ([], [a, b]) => (a.clone(), b.clone()),
            _ => return None,
        };
        let (a, b) = pair;
        if a == b {
            return None;
        }
        if partner.get(&a).is_some_and(|p| *p != b) || partner.get(&b).is_some_and(|p| *p != a) {
            return None;
        }
        // both composites must be present
        let other = rels.iter().any(|s| {
            let flip = [b.clone(), a.clone()];
            (s.lhs.gens == flip && s.rhs.gens.is_empty()) || (s.rhs.gens == flip && s.lhs.gens.is_empty())
        });
        if !other {
            return None;
        }
        partner.insert(a.clone(), b.clone());
        partner.insert(b, a);
    }
    let mut used = HashSet::new();
    let mut edges = Vec::new();
    for g in c.generators() {
        if used.contains(&g.name) {
            continue;
        }
        let p = partner.get(&g.name)?;
        used.insert(g.name.clone());
        used.insert(p.clone());
        edges.push(g.clone());
    }
    Some(edges)
}

fn spanning_forest_loops(c: &FpCategory, edges: &[Generator]) -> Vec<FreeComponent> {
    let objects = c.objects();
    let mut route: BTreeMap<String, Path> = BTreeMap::new();
    let mut tree: HashSet<String> = HashSet::new();
    let mut out = Vec::new();
    for root in objects {
        if route.contains_key(root) {
            continue;
        }
        route.insert(root.clone(), Path::id(root.clone()));
        let mut members = vec![root.clone()];
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(x) = queue.pop_front() {
            for e in edges {
                let (next, step) = if e.src == x {
                    (&e.dst, e.name.clone())
                } else if e.dst == x {
                    (&e.src, c.mate_of(&e.name).expect("paired edge").to_string())
                } else {
                    continue;
                };
                if route.contains_key(next) {
                    continue;
                }
                let mut p = route[&x].clone();
                p.gens.push(step);
                route.insert(next.clone(), p);
                tree.insert(e.name.clone());
                members.push(next.clone());
                queue.push_back(next.clone());
            }
        }
        let generators = edges
            .iter()
            .filter(|e| members.contains(&e.src) && !tree.contains(&e.name))
            .map(|e| {
                let mut p = route[&e.src].clone();
                p.gens.push(e.name.clone());
                let back = c.formal_inverse(&route[&e.dst]).expect("tree paths are invertible");
                p.gens.extend(back.gens);
                p
            })
            .collect();
        out.push(FreeComponent {
            basepoint: root.clone(),
            generators,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{find_equivalence, is_contractible_fp};
    use crate::DEFAULT_SEARCH_BOUND;

    fn words(ws: &[&[&str]]) -> Vec<Vec<String>> {
        ws.iter().map(|w| w.iter().map(|t| t.to_string()).collect()).collect()
    }

    #[test]
    fn low_spheres() {
        let s0 = sphere(0).unwrap();
        assert_eq!((s0.object_count(), s0.generators().len()), (2, 0));
        let s1 = sphere(1).unwrap();
        assert_eq!(s1.object_count(), 1);
        assert_eq!(s1.invertible().len(), 1);
        assert!(s1.relations().is_empty());
        for n in 2..=4 {
            assert!(is_contractible_fp(&sphere(n).unwrap()).unwrap(), "sphere {n}");
        }
    }

    #[test]
    fn attach_examples() {
        let one = Arc::new(FpCategory::terminal());
        let s0 = Arc::new(sphere(0).unwrap());
        let z = attach_cells(one.clone(), &[(0, FpFunctor::to_terminal(s0))]).unwrap();
        assert_eq!(z.object_count(), 1);
        assert!(matches!(z.to_finite(10), Err(Error::NotFinite { .. })));

        let base = Arc::new(sphere(1).unwrap());
        let s1 = Arc::new(sphere(1).unwrap());
        let a = s1.declared_generators().next().unwrap().name.clone();
        let square = FpFunctor::new(
            s1.clone(),
            base.clone(),
            [(s1.objects()[0].clone(), base.objects()[0].clone())].into(),
            [(a.clone(), Path::new(base.objects()[0].clone(), [a.clone(), a]))].into(),
        )
        .unwrap();
        let z2 = attach_cells(base.clone(), &[(1, square)]).unwrap();
        assert_eq!(z2.to_finite(10).unwrap().morphism_count(), 2);

        assert_eq!(attach_cells(one.clone(), &[]).unwrap(), *one);
        let err = attach_cells(
            one.clone(),
            &[
                (0, FpFunctor::to_terminal(Arc::new(sphere(0).unwrap()))),
                (1, FpFunctor::to_terminal(Arc::new(sphere(1).unwrap()))),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::MixedDimensions(vec![0, 1]));
    }

    #[test]
    fn one_complex_examples() {
        let z = build_one_complex(&[(vec!["a".into()], vec![])]).unwrap();
        assert_eq!(z.object_count(), 1);
        assert_eq!(cw_classify_fp(&z).unwrap().kind, CwKind::Dim1);

        let c2 = build_one_complex(&[(vec![], vec!["t".into()])]).unwrap();
        assert_eq!(c2.object_count(), 2);
        assert!(is_contractible_fp(&c2).unwrap());

        let s0 = build_one_complex(&[(vec![], vec![]), (vec![], vec![])]).unwrap();
        assert_eq!((s0.object_count(), s0.generators().len()), (2, 0));
        assert_eq!(cw_classify_fp(&s0).unwrap().kind, CwKind::Dim0);
    }

    #[test]
    fn two_complex_examples() {
        let z2 = build_two_complex(&GroupoidPresentation {
            components: vec![Component {
                extra_objects: vec![],
                generators: vec!["a".into()],
                relations: words(&[&["a", "a"]]),
            }],
        })
        .unwrap();
        assert_eq!(z2.to_finite(10).unwrap().morphism_count(), 2);

        let c2 = build_two_complex(&GroupoidPresentation {
            components: vec![Component {
                extra_objects: vec!["t".into()],
                generators: vec![],
                relations: vec![],
            }],
        })
        .unwrap();
        assert!(is_contractible_fp(&c2).unwrap());

        let z_squared = build_two_complex(&GroupoidPresentation {
            components: vec![Component {
                extra_objects: vec![],
                generators: vec!["a".into(), "b".into()],
                relations: words(&[&["a", "b", "a^-1", "b^-1"]]),
            }],
        })
        .unwrap();
        let rs = z_squared.rewriting();
        assert!(rs.is_complete());
        let b = &z_squared.objects()[0];
        // a^i b^j with |i| + |j| <= 2: 1 + 4 + 8 = 13
        assert_eq!(rs.normal_forms(b, b, 2).unwrap().len(), 13);
    }

    #[test]
    fn malformed_token_rejected() {
        let err = build_two_complex(&GroupoidPresentation {
            components: vec![Component {
                extra_objects: vec![],
                generators: vec!["a".into()],
                relations: words(&[&["b"]]),
            }],
        })
        .unwrap_err();
        assert_eq!(err, Error::MalformedToken("b".into()));
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(cw_classify_fp(&FpCategory::arrow()).unwrap().kind, CwKind::NotCW);
        assert_eq!(cw_classify_fp(&FpCategory::integers()).unwrap().kind, CwKind::Dim1);
        assert_eq!(cw_classify_fp(&FpCategory::cyclic(2)).unwrap().kind, CwKind::Dim2);
        assert_eq!(cw_classify(&FiniteCategory::cyclic(2)).kind, CwKind::Dim2);
        assert_eq!(cw_classify(&FiniteCategory::chaotic(["x", "y"])).kind, CwKind::Dim0);
    }

    #[test]
    fn self_inverse_generator_is_not_free() {
        let z2 = FpCategory::builder()
            .object("*")
            .generator("a", "*", "*")
            .relation(Path::new("*", ["a", "a"]), Path::id("*"))
            .build()
            .unwrap();
        assert_eq!(cw_classify_fp(&z2).unwrap().kind, CwKind::Dim2);
    }

    #[test]
    fn read_off_round_trip_on_cyclic_group() {
        let g = FiniteCategory::cyclic(3);
        let p = read_off_presentation(&g).unwrap();
        let built = build_two_complex(&p).unwrap().to_finite(DEFAULT_BOUND).unwrap();
        assert!(find_equivalence(&built, &g, DEFAULT_SEARCH_BOUND).unwrap().is_some());
    }

    #[test]
    fn presentation_json_shape() {
        let p = GroupoidPresentation {
            components: vec![Component {
                extra_objects: vec![],
                generators: vec!["a".into()],
                relations: words(&[&["a", "a"]]),
            }],
        };
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"components":[{"extra_objects":[],"generators":["a"],"relations":[["a","a"]]}]}"#
        );
    }
}
