//! Reading input files. Every loader reports the file name, and serde's
//! line/column and field messages for malformed content.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use catcw::ktheory::PointedCategory;
use catcw::{FiniteCategory, FpCategory};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde_json::Value;

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn parse<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T> {
    serde_json::from_str(text).with_context(|| format!("{}: malformed input", path.display()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    parse(path, &read_text(path)?)
}

/// What a JSON file contains, judged by its top-level keys.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Presentation,
    Finite,
    Pointed,
    Functor,
    Span,
    Space,
    Groupoid,
    Presheaf,
    Sheaf,
    K0Witness,
}

pub fn kind_of(path: &Path, text: &str) -> Result<Kind> {
    let v: Value = parse(path, text)?;
    let Some(map) = v.as_object() else {
        bail!("{}: expected a JSON object at the top level", path.display());
    };
    let has = |k: &str| map.contains_key(k);
    Ok(if has("cert1") && has("terminal") {
        Kind::K0Witness
    } else if has("left") && has("right") {
        Kind::Span
    } else if has("object_map") && has("gen_map") {
        Kind::Functor
    } else if has("cat") && has("basepoint") {
        Kind::Pointed
    } else if has("points") {
        Kind::Space
    } else if has("components") {
        Kind::Groupoid
    } else if has("presheaf") {
        Kind::Sheaf
    } else if has("sections") {
        Kind::Presheaf
    } else if has("morphisms") {
        Kind::Finite
    } else if has("objects") {
        Kind::Presentation
    } else {
        let keys: Vec<&str> = map.keys().map(String::as_str).collect();
        bail!("{}: unrecognized input with keys {keys:?}", path.display())
    })
}

/// A category given either way.
#[derive(Debug, Clone)]
pub enum CategoryInput {
    Presented(Box<FpCategory>),
    Finite(FiniteCategory),
}

impl CategoryInput {
    pub fn load(path: &Path) -> Result<Self> {
        let text = read_text(path)?;
        match kind_of(path, &text)? {
            Kind::Presentation => Ok(Self::Presented(Box::new(parse(path, &text)?))),
            Kind::Finite => Ok(Self::Finite(parse(path, &text)?)),
            other => bail!("{}: expected a category, found {other:?}", path.display()),
        }
    }

    pub fn finite(&self, bound: usize) -> Result<FiniteCategory> {
        match self {
            Self::Presented(c) => c.to_finite(bound).context("no finite model"),
            Self::Finite(c) => Ok(c.clone()),
        }
    }

    pub fn presented(&self) -> FpCategory {
        match self {
            Self::Presented(c) => (**c).clone(),
            Self::Finite(c) => c.to_presentation(),
        }
    }
}

/// A pointed category from a file, or a random one from a seed.
pub fn pointed(file: Option<&Path>, basepoint: Option<&str>, seed: Option<u64>) -> Result<PointedCategory> {
    let (cat, given) = match (file, seed) {
        (Some(path), _) => {
            let text = read_text(path)?;
            match kind_of(path, &text)? {
                Kind::Pointed => {
                    let p: PointedCategory = parse(path, &text)?;
                    (p.cat().clone(), Some(p.basepoint().to_string()))
                }
                Kind::Presentation | Kind::Finite => (Arc::new(CategoryInput::load(path)?.presented()), None),
                other => bail!("{}: expected a category, found {other:?}", path.display()),
            }
        }
        (None, Some(seed)) => return Ok(random_pointed(seed)),
        (None, None) => bail!("give an input file or --seed"),
    };
    let p = match basepoint.map(str::to_string).or(given) {
        Some(b) => PointedCategory::new(cat, b),
        None => PointedCategory::at_first(cat),
    };
    p.context("invalid basepoint")
}

/// A free category on a random quiver with at most three objects and four
/// generators, some of them invertible.
pub fn random_pointed(seed: u64) -> PointedCategory {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let objects: Vec<String> = (0..r.gen_range(1..=3)).map(|i| format!("o{i}")).collect();
    let mut b = FpCategory::builder().objects(objects.clone());
    for i in 0..r.gen_range(0..=4) {
        let (s, d) = (objects.choose(&mut r).unwrap(), objects.choose(&mut r).unwrap());
        b = b.generator(format!("g{i}"), s.clone(), d.clone());
        if r.gen_bool(0.3) {
            b = b.invertible(format!("g{i}"));
        }
    }
    let cat = Arc::new(b.build().expect("fresh names and listed endpoints"));
    let base = objects.choose(&mut r).unwrap().clone();
    PointedCategory::new(cat, base).expect("basepoint is an object")
}
