//! Shortlex Knuth-Bendix completion on path rewriting.
//!
//! Words are sequences of generator indices; the order compares length first
//! and then generator declaration order lexicographically. Rules are only
//! ever applied to factors of well-typed words, and both sides of every rule
//! are parallel, so rewriting never leaves the hom-set of its input.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::finite::{FiniteCategory, FiniteModel};
use super::path::{IPath, Path};
use super::presentation::{FpCategory, Quiver};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Completion {
    Complete,
    /// The rule budget was exhausted before all critical pairs resolved.
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Rule {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
}

/// Result of normalizing a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub path: Path,
    /// False when the system is incomplete: the path is then only a reduct.
    pub certified: bool,
}

#[derive(Debug, Clone)]
pub struct RewritingSystem {
    quiver: Quiver,
    rules: Vec<Rule>,
    by_last: Vec<Vec<usize>>,
    status: Completion,
    budget: usize,
}

pub(crate) fn shortlex_gt(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a > b)
}

fn find_factor(hay: &[usize], needle: &[usize]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&p| &hay[p..p + needle.len()] == needle)
}

/// Mutable rule store used during completion; dead rules are tombstoned so
/// that ids stay stable for the critical-pair bookkeeping.
struct Store {
    rules: Vec<Option<Rule>>,
    by_last: Vec<Vec<usize>>,
}

impl Store {
    fn new(generators: usize) -> Self {
        Store {
            rules: Vec::new(),
            by_last: vec![Vec::new(); generators],
        }
    }

    fn insert(&mut self, rule: Rule) -> usize {
        let id = self.rules.len();
        self.by_last[*rule.lhs.last().expect("lhs nonempty")].push(id);
        self.rules.push(Some(rule));
        id
    }

    fn kill(&mut self, id: usize) -> Rule {
        let rule = self.rules[id].take().expect("live rule");
        self.by_last[*rule.lhs.last().unwrap()].retain(|&r| r != id);
        rule
    }

    fn live(&self) -> Vec<usize> {
        (0..self.rules.len()).filter(|&i| self.rules[i].is_some()).collect()
    }

    fn reduce(&self, word: &[usize]) -> Vec<usize> {
        reduce_with(&self.rules, &self.by_last, word, |r| r.as_ref())
    }
}

fn reduce_with<'a, T>(
    rules: &'a [T],
    by_last: &[Vec<usize>],
    word: &[usize],
    get: impl Fn(&'a T) -> Option<&'a Rule>,
) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(word.len());
    let mut input: Vec<usize> = word.iter().rev().copied().collect();
    while let Some(s) = input.pop() {
        out.push(s);
        let hit = by_last[s].iter().find_map(|&id| {
            let r = get(&rules[id])?;
            (r.lhs.len() <= out.len() && out[out.len() - r.lhs.len()..] == r.lhs[..]).then_some(r)
        });
        if let Some(r) = hit {
            out.truncate(out.len() - r.lhs.len());
            input.extend(r.rhs.iter().rev());
        }
    }
    out
}

fn critical_pairs(a: &Rule, b: &Rule, same: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    let (l1, r1, l2, r2) = (&a.lhs, &a.rhs, &b.lhs, &b.rhs);
    // suffix of l1 overlaps prefix of l2
    for k in 1..l1.len().min(l2.len()) {
        if l1[l1.len() - k..] == l2[..k] {
            let mut x = r1.clone();
            x.extend_from_slice(&l2[k..]);
            let mut y = l1[..l1.len() - k].to_vec();
            y.extend_from_slice(r2);
            out.push((x, y));
        }
    }
    // l2 is a factor of l1
    if !same && l2.len() <= l1.len() {
        for p in 0..=l1.len() - l2.len() {
            if l1[p..p + l2.len()] == l2[..] {
                let mut y = l1[..p].to_vec();
                y.extend_from_slice(r2);
                y.extend_from_slice(&l1[p + l2.len()..]);
                out.push((r1.clone(), y));
            }
        }
    }
    out
}

impl RewritingSystem {
    pub(crate) fn complete(cat: &FpCategory, budget: usize) -> Self {
        let quiver = cat.quiver().clone();
        let mut store = Store::new(quiver.generators().len());
        let mut pending: VecDeque<(Vec<usize>, Vec<usize>)> = cat
            .all_resolved_relations()
            .into_iter()
            .map(|(l, r)| (l.word, r.word))
            .collect();
        let mut added = 0usize;
        let mut checked: HashSet<(usize, usize)> = HashSet::new();

        let status = 'outer: loop {
            while let Some((u, v)) = pending.pop_front() {
                let u = store.reduce(&u);
                let v = store.reduce(&v);
                if u == v {
                    continue;
                }
                let (lhs, rhs) = if shortlex_gt(&u, &v) { (u, v) } else { (v, u) };
                added += 1;
                if added > budget {
                    break 'outer Completion::Incomplete;
                }
                for id in store.live() {
                    let old = store.rules[id].as_ref().unwrap();
                    if find_factor(&old.lhs, &lhs).is_some() {
                        let old = store.kill(id);
                        pending.push_back((old.lhs, old.rhs));
                    }
                }
                store.insert(Rule { lhs, rhs });
            }

            let live = store.live();
            let mut fresh = false;
            for &i in &live {
                for &j in &live {
                    if !checked.insert((i, j)) {
                        continue;
                    }
                    let (a, b) = (store.rules[i].as_ref().unwrap(), store.rules[j].as_ref().unwrap());
                    for (x, y) in critical_pairs(a, b, i == j) {
                        let (x, y) = (store.reduce(&x), store.reduce(&y));
                        if x != y {
                            pending.push_back((x, y));
                            fresh = true;
                        }
                    }
                }
            }
            if fresh {
                continue;
            }
            // Final audit from scratch: every critical pair of the surviving rules joins.
            let all_join = live.iter().all(|&i| {
                live.iter().all(|&j| {
                    let (a, b) = (store.rules[i].as_ref().unwrap(), store.rules[j].as_ref().unwrap());
                    critical_pairs(a, b, i == j)
                        .into_iter()
                        .all(|(x, y)| store.reduce(&x) == store.reduce(&y))
                })
            });
            if all_join {
                break Completion::Complete;
            }
            checked.clear();
        };

        let mut rules: Vec<Rule> = store.rules.iter().flatten().cloned().collect();
        if status == Completion::Complete {
            for r in &mut rules {
                r.rhs = store.reduce(&r.rhs);
            }
        }
        rules.sort_by(|a, b| {
            a.lhs
                .len()
                .cmp(&b.lhs.len())
                .then_with(|| a.lhs.cmp(&b.lhs))
        });
        let mut by_last = vec![Vec::new(); quiver.generators().len()];
        for (id, r) in rules.iter().enumerate() {
            by_last[*r.lhs.last().unwrap()].push(id);
        }
        RewritingSystem {
            quiver,
            rules,
            by_last,
            status,
            budget,
        }
    }

    pub fn status(&self) -> Completion {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == Completion::Complete
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Rules as `(lhs, rhs)` path pairs, sorted shortlex by lhs.
    pub fn rules(&self) -> Vec<(Path, Path)> {
        self.rules
            .iter()
            .map(|r| {
                let at = self.quiver.src_of(r.lhs[0]);
                (
                    self.quiver.path_of(&IPath { at, word: r.lhs.clone() }),
                    self.quiver.path_of(&IPath { at, word: r.rhs.clone() }),
                )
            })
            .collect()
    }

    pub(crate) fn reduce_word(&self, word: &[usize]) -> Vec<usize> {
        reduce_with(&self.rules, &self.by_last, word, Some)
    }

    /// True when no rule's left side is a suffix of `word`.
    pub(crate) fn suffix_irreducible(&self, word: &[usize]) -> bool {
        let Some(&last) = word.last() else { return true };
        self.by_last[last].iter().all(|&id| {
            let l = &self.rules[id].lhs;
            l.len() > word.len() || word[word.len() - l.len()..] != l[..]
        })
    }

    pub(crate) fn reduce_ipath(&self, p: &IPath) -> IPath {
        IPath {
            at: p.at,
            word: self.reduce_word(&p.word),
        }
    }

    pub fn normalize(&self, p: &Path) -> Result<Normalized> {
        let ip = self.quiver.resolve(p)?;
        Ok(Normalized {
            path: self.quiver.path_of(&self.reduce_ipath(&ip)),
            certified: self.is_complete(),
        })
    }

    /// Like [`normalize`](Self::normalize), but refuses to answer for incomplete systems.
    pub fn normal_form(&self, p: &Path) -> Result<Path> {
        if !self.is_complete() {
            return Err(Error::IncompleteSystem { budget: self.budget });
        }
        Ok(self.normalize(p)?.path)
    }

    /// Irreducible words from `src` of length at most `max_len`, breadth-first,
    /// each paired with its target object.
    pub(crate) fn irreducible_from(&self, src: usize, max_len: usize) -> Vec<(IPath, usize)> {
        let mut out = vec![(IPath { at: src, word: vec![] }, src)];
        let mut frontier = 0;
        for _ in 0..max_len {
            let end = out.len();
            for idx in frontier..end {
                let (p, dst) = out[idx].clone();
                for g in 0..self.quiver.generators().len() {
                    if self.quiver.src_of(g) != dst {
                        continue;
                    }
                    let mut word = p.word.clone();
                    word.push(g);
                    if self.suffix_irreducible(&word) {
                        out.push((IPath { at: src, word }, self.quiver.dst_of(g)));
                    }
                }
            }
            frontier = end;
        }
        out
    }

    /// Normal forms in `hom(src, dst)` of length at most `max_len`, shortlex ordered.
    pub fn normal_forms(&self, src: &str, dst: &str, max_len: usize) -> Result<Vec<Path>> {
        let s = self
            .quiver
            .object_index(src)
            .ok_or_else(|| Error::UnknownObject(src.to_string()))?;
        let d = self
            .quiver
            .object_index(dst)
            .ok_or_else(|| Error::UnknownObject(dst.to_string()))?;
        Ok(self
            .irreducible_from(s, max_len)
            .into_iter()
            .filter(|(_, t)| *t == d)
            .map(|(p, _)| self.quiver.path_of(&p))
            .collect())
    }

    /// Enumerates normal forms breadth-first and builds the composition table.
    pub fn to_finite(&self, bound: usize) -> Result<FiniteCategory> {
        self.finite_model(bound).map(FiniteModel::into_category)
    }

    /// Like [`to_finite`](Self::to_finite), keeping the normal form of each morphism.
    pub fn finite_model(&self, bound: usize) -> Result<FiniteModel> {
        if !self.is_complete() {
            return Err(Error::IncompleteSystem { budget: self.budget });
        }
        FiniteCategory::from_rewriting(self, bound)
    }
}

impl fmt::Display for RewritingSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} ({} rules)", self.status, self.rules.len())?;
        for (l, r) in self.rules() {
            writeln!(f, "  {l} -> {r}")?;
        }
        Ok(())
    }
}
