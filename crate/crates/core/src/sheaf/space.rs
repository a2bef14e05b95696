//! Finite topological spaces with opens stored as bitmasks.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of points of a [`FiniteSpace`], bit `i` standing for point `i`.
pub type PointSet = u64;

pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpaceJson", into = "SpaceJson")]
pub struct FiniteSpace {
    points: Vec<String>,
    /// Sorted by cardinality, then by mask; the first is empty, the last is full.
    opens: Vec<PointSet>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

impl TryFrom<SpaceJson> for FiniteSpace {
    type Error = Error;
    fn try_from(j: SpaceJson) -> Result<Self> {
        let index = |p: &String| {
            j.points
                .iter()
                .position(|q| q == p)
                .ok_or_else(|| Error::InvalidSpace(format!("open mentions unknown point `{p}`")))
        };
        let opens = j
            .opens
            .iter()
            .map(|u| u.iter().map(index).try_fold(0u64, |m, i| Ok(m | 1 << i?)))
            .collect::<Result<Vec<_>>>()?;
        FiniteSpace::new(j.points.clone(), opens)
    }
}

impl From<FiniteSpace> for SpaceJson {
    fn from(s: FiniteSpace) -> Self {
        SpaceJson {
            opens: s.opens.iter().map(|&u| s.names(u)).collect(),
            points: s.points,
        }
    }
}

fn full_mask(n: usize) -> PointSet {
    if n == MAX_POINTS {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn bits(u: PointSet) -> impl Iterator<Item = usize> {
    (0..MAX_POINTS).filter(move |i| u >> i & 1 == 1)
}

impl FiniteSpace {
    /// Checks that the opens contain the empty and full sets and are closed
    /// under binary unions and intersections.
    pub fn new(points: Vec<String>, opens: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        if points.len() > MAX_POINTS {
            return Err(Error::InvalidSpace(format!("more than {MAX_POINTS} points")));
        }
        if points.iter().collect::<BTreeSet<_>>().len() != points.len() {
            return Err(Error::InvalidSpace("duplicate point".into()));
        }
        let full = full_mask(points.len());
        let set: BTreeSet<PointSet> = opens.into_iter().collect();
        if set.iter().any(|&u| u & !full != 0) {
            return Err(Error::InvalidSpace("open outside the point set".into()));
        }
        if !set.contains(&0) || !set.contains(&full) {
            return Err(Error::InvalidSpace("opens must include the empty and the full set".into()));
        }
        for &u in &set {
            for &v in &set {
                if !set.contains(&(u | v)) || !set.contains(&(u & v)) {
                    return Err(Error::InvalidSpace("opens are not closed under union and intersection".into()));
                }
            }
        }
        let mut opens: Vec<PointSet> = set.into_iter().collect();
        opens.sort_by_key(|&u| (u.count_ones(), u));
        Ok(FiniteSpace { points, opens })
    }

    pub fn point() -> Self {
        Self::new(vec!["p".into()], [0, 1]).expect("one-point space")
    }

    /// Points `u, v` with opens `∅, {u}, {u, v}`.
    pub fn sierpinski() -> Self {
        Self::new(vec!["u".into(), "v".into()], [0, 0b01, 0b11]).expect("Sierpinski space")
    }

    pub fn discrete<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let points: Vec<String> = names.into_iter().map(Into::into).collect();
        let opens = 0..=full_mask(points.len());
        Self::new(points, opens).expect("discrete space")
    }

    /// Two open points `a, b` whose only common neighborhood is the whole
    /// space `{a, b, c}`.
    pub fn pseudocircle() -> Self {
        Self::new(vec!["a".into(), "b".into(), "c".into()], [0, 0b001, 0b010, 0b011, 0b111])
            .expect("three-point space")
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn full(&self) -> PointSet {
        full_mask(self.points.len())
    }

    pub fn open_index(&self, u: PointSet) -> Result<usize> {
        self.opens
            .iter()
            .position(|&v| v == u)
            .ok_or_else(|| Error::NotAnOpen(self.names(u)))
    }

    pub fn is_open(&self, u: PointSet) -> bool {
        self.opens.contains(&u)
    }

    pub fn names(&self, u: PointSet) -> Vec<String> {
        bits(u).filter_map(|i| self.points.get(i).cloned()).collect()
    }

    pub fn mask_of<S: AsRef<str>>(&self, names: &[S]) -> Result<PointSet> {
        names.iter().try_fold(0, |m, n| {
            let i = self
                .points
                .iter()
                .position(|p| p == n.as_ref())
                .ok_or_else(|| Error::InvalidSpace(format!("unknown point `{}`", n.as_ref())))?;
            Ok(m | 1 << i)
        })
    }

    /// The smallest open containing point `x`.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        self.opens
            .iter()
            .filter(|&&u| u >> x & 1 == 1)
            .fold(self.full(), |m, &u| m & u)
    }

    /// Connected components of the open `u`, ordered by their first point.
    /// Two points are linked when one lies in the minimal open of the other.
    pub fn connected_components(&self, u: PointSet) -> Result<Vec<PointSet>> {
        if !self.is_open(u) {
            return Err(Error::NotAnOpen(self.names(u)));
        }
        let mut left = u;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp: PointSet = 1 << left.trailing_zeros();
            loop {
                let grown = bits(comp).fold(comp, |m, x| m | self.minimal_open(x));
                let grown = bits(u & !grown).fold(grown, |m, y| {
                    if self.minimal_open(y) & grown != 0 {
                        m | 1 << y
                    } else {
                        m
                    }
                });
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        Ok(out)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components(self.full()).is_ok_and(|c| c.len() == 1)
    }

    /// Pairs `(v, u)` of open indices with `v ⊆ u`.
    pub fn inclusions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.opens.len();
        (0..n).flat_map(move |u| (0..n).map(move |v| (v, u))).filter(|&(v, u)| self.opens[v] & !self.opens[u] == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let pts = vec!["a".to_string(), "b".to_string()];
        assert!(FiniteSpace::new(pts.clone(), [0, 0b01, 0b10, 0b11]).is_ok());
        assert!(matches!(FiniteSpace::new(pts.clone(), [0, 0b01, 0b10]), Err(Error::InvalidSpace(_))));
        assert!(matches!(FiniteSpace::new(pts.clone(), [0b01, 0b11]), Err(Error::InvalidSpace(_))));
        // {a} and {b} present but not their union
        let three = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert!(FiniteSpace::new(three, [0, 0b001, 0b010, 0b111]).is_err());
        assert!(FiniteSpace::new(vec!["a".into(), "a".into()], [0, 0b11]).is_err());
    }

    #[test]
    fn connectedness_examples() {
        assert!(FiniteSpace::sierpinski().is_connected());
        assert!(FiniteSpace::point().is_connected());
        assert!(FiniteSpace::pseudocircle().is_connected());
        let d = FiniteSpace::discrete(["u", "v"]);
        assert!(!d.is_connected());
        assert_eq!(d.connected_components(0b11).unwrap(), vec![0b01, 0b10]);
        let p = FiniteSpace::pseudocircle();
        assert_eq!(p.connected_components(0b011).unwrap(), vec![0b001, 0b010]);
        assert_eq!(p.connected_components(0).unwrap(), Vec::<PointSet>::new());
        assert_eq!(
            p.connected_components(0b100).unwrap_err(),
            Error::NotAnOpen(vec!["c".to_string()])
        );
    }

    #[test]
    fn minimal_opens() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.minimal_open(0), 0b01);
        assert_eq!(s.minimal_open(1), 0b11);
    }

    #[test]
    fn json_round_trip() {
        let s = FiniteSpace::sierpinski();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"points":["u","v"],"opens":[[],["u"],["u","v"]]}"#);
        let back: FiniteSpace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"points":["u"],"opens":[[],["w"],["u"]]}"#;
        assert!(serde_json::from_str::<FiniteSpace>(bad).is_err());
    }
}
