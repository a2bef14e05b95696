//! Presheaves and sheaves of finite categories on a finite space.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::space::{FiniteSpace, PointSet};
use crate::error::{Error, Result};
use crate::fpcat::{FinFunctor, FiniteCategory};

/// Mixed-radix digits of `index`, most significant first.
pub(crate) fn digits(mut index: usize, radix: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut().rev() {
        *d = index % radix;
        index /= radix;
    }
    out
}

pub(crate) fn undigits(ds: impl IntoIterator<Item = usize>, radix: usize) -> usize {
    ds.into_iter().fold(0, |acc, d| acc * radix + d)
}

/// The functor `A^k -> A^m` picking factor `pick[j]` for output factor `j`.
pub(crate) fn reindex(
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
    base: &FiniteCategory,
    k: usize,
    pick: &[usize],
) -> FinFunctor {
    let (no, nm) = (base.object_count(), base.morphism_count());
    let object_map = (0..source.object_count())
        .map(|i| {
            let d = digits(i, no, k);
            undigits(pick.iter().map(|&p| d[p]), no)
        })
        .collect();
    let mor_map = (0..source.morphism_count())
        .map(|i| {
            let d = digits(i, nm, k);
            undigits(pick.iter().map(|&p| d[p]), nm)
        })
        .collect();
    FinFunctor::new(source, target, object_map, mor_map).expect("reindexing stays in range")
}

/// The functor `A^k -> B^k` applying `fs[i]` in factor `i`.
pub(crate) fn power_map(
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
    a: &FiniteCategory,
    b: &FiniteCategory,
    fs: &[&FinFunctor],
) -> FinFunctor {
    let k = fs.len();
    let object_map = (0..source.object_count())
        .map(|i| {
            let d = digits(i, a.object_count(), k);
            undigits(d.iter().zip(fs).map(|(&x, f)| f.object_map[x]), b.object_count())
        })
        .collect();
    let mor_map = (0..source.morphism_count())
        .map(|i| {
            let d = digits(i, a.morphism_count(), k);
            undigits(d.iter().zip(fs).map(|(&x, f)| f.mor_map[x]), b.morphism_count())
        })
        .collect();
    FinFunctor::new(source, target, object_map, mor_map).expect("componentwise map stays in range")
}

/// A category per open and a restriction functor per inclusion.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PresheafJson", into = "PresheafJson")]
pub struct CatPresheaf {
    space: FiniteSpace,
    /// Indexed like `space.opens()`.
    sections: Vec<Arc<FiniteCategory>>,
    /// `(v, u)` with `v ⊆ u` to the restriction `F(u) -> F(v)`.
    restrictions: BTreeMap<(usize, usize), FinFunctor>,
}

impl CatPresheaf {
    /// Checks that every inclusion has a functor with the right endpoints,
    /// identities restrict to identities, and restrictions compose.
    pub fn new(
        space: FiniteSpace,
        sections: Vec<Arc<FiniteCategory>>,
        restrictions: BTreeMap<(usize, usize), FinFunctor>,
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidPresheaf(m));
        if sections.len() != space.opens().len() {
            return bad("one category per open is required".into());
        }
        for (v, u) in space.inclusions() {
            let Some(r) = restrictions.get(&(v, u)) else {
                return bad(format!("missing restriction for inclusion {v} <= {u}"));
            };
            if *r.source != *sections[u] || *r.target != *sections[v] || !r.check() {
                return bad(format!("restriction for {v} <= {u} is not a functor F(U) -> F(V)"));
            }
            if v == u && *r != FinFunctor::identity(sections[u].clone()) {
                return bad(format!("restriction to open {u} itself is not the identity"));
            }
        }
        if restrictions.len() != space.inclusions().count() {
            return bad("restriction given for a non-inclusion".into());
        }
        for (w, v) in space.inclusions() {
            for (v2, u) in space.inclusions() {
                if v2 != v {
                    continue;
                }
                let two = restrictions[&(v, u)].then(&restrictions[&(w, v)])?;
                if two != restrictions[&(w, u)] {
                    return bad(format!("restrictions {u} -> {v} -> {w} do not compose"));
                }
            }
        }
        Ok(CatPresheaf {
            space,
            sections,
            restrictions,
        })
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn sections(&self) -> &[Arc<FiniteCategory>] {
        &self.sections
    }

    pub fn at(&self, u: PointSet) -> Result<&Arc<FiniteCategory>> {
        Ok(&self.sections[self.space.open_index(u)?])
    }

    /// The restriction `F(u) -> F(v)` for open indices `v ⊆ u`.
    pub fn restriction(&self, v: usize, u: usize) -> Option<&FinFunctor> {
        self.restrictions.get(&(v, u))
    }

    /// Sheaf condition for every cover of every open by smaller opens.
    pub fn gluing(&self) -> Result<GluingVerdict> {
        let opens = self.space.opens();
        for u in 0..opens.len() {
            let subs: Vec<usize> = (0..opens.len())
                .filter(|&v| v != u && opens[v] & !opens[u] == 0)
                .collect();
            if subs.len() > MAX_COVER_CANDIDATES {
                return Err(Error::NotDecided(format!(
                    "open {u} has {} proper sub-opens; covers are not enumerated",
                    subs.len()
                )));
            }
            for choice in 0u64..1 << subs.len() {
                let cover: Vec<usize> = (0..subs.len()).filter(|i| choice >> i & 1 == 1).map(|i| subs[i]).collect();
                if cover.iter().fold(0, |m, &v| m | opens[v]) != opens[u] {
                    continue;
                }
                if let Some(failure) = self.check_cover(u, &cover) {
                    return Ok(GluingVerdict::Fails {
                        open: self.space.names(opens[u]),
                        cover: cover.iter().map(|&v| self.space.names(opens[v])).collect(),
                        reason: failure,
                    });
                }
            }
        }
        Ok(GluingVerdict::Holds)
    }

    /// `None` when `F(u)` is the equalizer of the cover, separately on
    /// objects and on morphisms.
    fn check_cover(&self, u: usize, cover: &[usize]) -> Option<String> {
        let opens = self.space.opens();
        let meet = |a: usize, b: usize| self.space.open_index(opens[a] & opens[b]).expect("opens closed under meets");
        for on_objects in [true, false] {
            let size = |v: usize| {
                if on_objects {
                    self.sections[v].object_count()
                } else {
                    self.sections[v].morphism_count()
                }
            };
            let restrict = |v: usize, w: usize, x: usize| {
                let r = &self.restrictions[&(v, w)];
                if on_objects {
                    r.object_map[x]
                } else {
                    r.mor_map[x]
                }
            };
            let what = if on_objects { "object" } else { "morphism" };
            let mut image = BTreeMap::new();
            for x in 0..size(u) {
                let family: Vec<usize> = cover.iter().map(|&v| restrict(v, u, x)).collect();
                if let Some(y) = image.insert(family, x) {
                    return Some(format!("{what}s {y} and {x} have the same restrictions"));
                }
            }
            // matching families by backtracking over the cover
            let mut count = 0usize;
            let mut stack: Vec<usize> = Vec::new();
            fn extend(
                stack: &mut Vec<usize>,
                cover: &[usize],
                size: &dyn Fn(usize) -> usize,
                agree: &dyn Fn(usize, usize, usize, usize) -> bool,
                count: &mut usize,
            ) {
                let i = stack.len();
                if i == cover.len() {
                    *count += 1;
                    return;
                }
                for s in 0..size(cover[i]) {
                    if (0..i).all(|j| agree(j, stack[j], i, s)) {
                        stack.push(s);
                        extend(stack, cover, size, agree, count);
                        stack.pop();
                    }
                }
            }
            let agree = |j: usize, sj: usize, i: usize, si: usize| {
                let w = meet(cover[j], cover[i]);
                restrict(w, cover[j], sj) == restrict(w, cover[i], si)
            };
            extend(&mut stack, cover, &size, &agree, &mut count);
            if count != image.len() {
                return Some(format!("{count} matching families of {what}s but {} sections", image.len()));
            }
        }
        None
    }
}

/// Largest number of proper sub-opens for which all covers are enumerated.
pub const MAX_COVER_CANDIDATES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GluingVerdict {
    Holds,
    Fails {
        open: Vec<String>,
        cover: Vec<Vec<String>>,
        reason: String,
    },
}

/// A presheaf that satisfies the gluing condition, optionally remembering
/// the category it is the constant sheaf on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "SheafJson", into = "SheafJson")]
pub struct CatSheaf {
    presheaf: CatPresheaf,
    constant: Option<Arc<FiniteCategory>>,
}

impl CatSheaf {
    pub fn new(presheaf: CatPresheaf) -> Result<Self> {
        match presheaf.gluing()? {
            GluingVerdict::Holds => Ok(CatSheaf {
                presheaf,
                constant: None,
            }),
            GluingVerdict::Fails { open, reason, .. } => {
                Err(Error::InvalidPresheaf(format!("gluing fails over {open:?}: {reason}")))
            }
        }
    }

    pub fn presheaf(&self) -> &CatPresheaf {
        &self.presheaf
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.presheaf.space
    }

    /// The category `A` when this is the sheafification of the constant presheaf on `A`.
    pub fn constant_value(&self) -> Option<&Arc<FiniteCategory>> {
        self.constant.as_ref()
    }
}

/// Sections listed per open, by point names.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SectionJson {
    pub open: Vec<String>,
    pub category: Arc<FiniteCategory>,
}

/// The restriction `F(from) -> F(to)` on indices. Identity restrictions may be omitted.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RestrictionJson {
    pub from: Vec<String>,
    pub to: Vec<String>,
    pub object_map: Vec<usize>,
    pub mor_map: Vec<usize>,
}

/// Wire format of a presheaf.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresheafJson {
    pub space: FiniteSpace,
    pub sections: Vec<SectionJson>,
    #[serde(default)]
    pub restrictions: Vec<RestrictionJson>,
}

impl TryFrom<PresheafJson> for CatPresheaf {
    type Error = Error;

    fn try_from(j: PresheafJson) -> Result<Self> {
        let space = j.space;
        let mut sections: Vec<Option<Arc<FiniteCategory>>> = vec![None; space.opens().len()];
        for s in j.sections {
            let i = space.open_index(space.mask_of(&s.open)?)?;
            if sections[i].replace(s.category).is_some() {
                return Err(Error::InvalidPresheaf(format!("two sections given over {:?}", s.open)));
            }
        }
        let sections = sections
            .into_iter()
            .zip(space.opens())
            .map(|(s, &u)| s.ok_or_else(|| Error::InvalidPresheaf(format!("no section over {:?}", space.names(u)))))
            .collect::<Result<Vec<_>>>()?;
        let mut restrictions = BTreeMap::new();
        for r in j.restrictions {
            let u = space.open_index(space.mask_of(&r.from)?)?;
            let v = space.open_index(space.mask_of(&r.to)?)?;
            let f = FinFunctor::new(sections[u].clone(), sections[v].clone(), r.object_map, r.mor_map)?;
            if restrictions.insert((v, u), f).is_some() {
                return Err(Error::InvalidPresheaf(format!("two restrictions {:?} -> {:?}", r.from, r.to)));
            }
        }
        for (i, s) in sections.iter().enumerate() {
            restrictions.entry((i, i)).or_insert_with(|| FinFunctor::identity(s.clone()));
        }
        CatPresheaf::new(space, sections, restrictions)
    }
}

impl From<CatPresheaf> for PresheafJson {
    fn from(p: CatPresheaf) -> Self {
        let name = |i: usize| p.space.names(p.space.opens()[i]);
        let sections = (0..p.sections.len())
            .map(|i| SectionJson {
                open: name(i),
                category: p.sections[i].clone(),
            })
            .collect();
        let restrictions = p
            .restrictions
            .iter()
            .filter(|((v, u), _)| v != u)
            .map(|(&(v, u), f)| RestrictionJson {
                from: name(u),
                to: name(v),
                object_map: f.object_map.clone(),
                mor_map: f.mor_map.clone(),
            })
            .collect();
        PresheafJson {
            space: p.space.clone(),
            sections,
            restrictions,
        }
    }
}

/// Wire format of a sheaf; gluing is rechecked on load.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SheafJson {
    pub presheaf: CatPresheaf,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<Arc<FiniteCategory>>,
}

impl TryFrom<SheafJson> for CatSheaf {
    type Error = Error;

    fn try_from(j: SheafJson) -> Result<Self> {
        match j.constant {
            Some(a) => {
                let expected = sheafify_constant(&a, j.presheaf.space());
                if expected.presheaf != j.presheaf {
                    return Err(Error::InvalidPresheaf("sections differ from the sheafified constant presheaf".into()));
                }
                Ok(expected)
            }
            None => CatSheaf::new(j.presheaf),
        }
    }
}

impl From<CatSheaf> for SheafJson {
    fn from(s: CatSheaf) -> Self {
        SheafJson {
            presheaf: s.presheaf,
            constant: s.constant,
        }
    }
}

/// Every nonempty open to `a`, the empty open to the terminal category.
pub fn constantify(a: &FiniteCategory, space: &FiniteSpace) -> CatPresheaf {
    let a = Arc::new(a.clone());
    let one = Arc::new(FiniteCategory::terminal());
    let sections: Vec<_> = space
        .opens()
        .iter()
        .map(|&u| if u == 0 { one.clone() } else { a.clone() })
        .collect();
    let restrictions = space
        .inclusions()
        .map(|(v, u)| {
            let r = if v == u {
                FinFunctor::identity(sections[u].clone())
            } else if space.opens()[v] == 0 {
                FinFunctor::to_terminal(sections[u].clone())
            } else {
                FinFunctor::identity(a.clone())
            };
            ((v, u), r)
        })
        .collect();
    CatPresheaf::new(space.clone(), sections, restrictions).expect("constant presheaf")
}

/// Locally constant sections: `U` goes to `A^{components of U}`.
pub fn sheafify_constant(a: &FiniteCategory, space: &FiniteSpace) -> CatSheaf {
    let comps: Vec<Vec<PointSet>> = space
        .opens()
        .iter()
        .map(|&u| space.connected_components(u).expect("listed opens are open"))
        .collect();
    let sections: Vec<Arc<FiniteCategory>> =
        comps.iter().map(|c| Arc::new(FiniteCategory::power(a, c.len()))).collect();
    let restrictions = space
        .inclusions()
        .map(|(v, u)| {
            let pick: Vec<usize> = comps[v]
                .iter()
                .map(|&cv| comps[u].iter().position(|&cu| cv & !cu == 0).expect("component lies in one component"))
                .collect();
            let r = reindex(sections[u].clone(), sections[v].clone(), a, comps[u].len(), &pick);
            ((v, u), r)
        })
        .collect();
    let presheaf = CatPresheaf::new(space.clone(), sections, restrictions).expect("sheafified presheaf");
    let mut sheaf = CatSheaf::new(presheaf).expect("locally constant sections glue");
    sheaf.constant = Some(Arc::new(a.clone()));
    sheaf
}

/// Evaluation at the whole space.
pub fn global_sections(f: &CatSheaf) -> Arc<FiniteCategory> {
    f.presheaf.sections.last().expect("the full open is listed").clone()
}
