//! One function per verb. Each returns a report; errors become exit code 2.

use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use catcw::colimits::{one_sided_homotopy_pushout, pushout, PushoutResult, Span};
use catcw::cw::{build_two_complex, cw_classify, cw_classify_fp, sphere, CwKind, CwVerdict, CwWitness, GroupoidPresentation};
use catcw::ktheory::{
    cone, cone_unit, k0_vanishing_witness, suspension, verify_double_suspension, K0Witness, PointedCategory,
};
use catcw::model::{is_contractible_fp, is_equivalence, EquivalenceCertificate};
use catcw::sheaf::{
    classify_cw_sheaf, exotic_map_demo, global_sections, sheafify_constant, unit_check, CatPresheaf, CatSheaf,
    CwSheafVerdict, FinIsoCertificate, FiniteSpace,
};
use catcw::{Error, FinFunctor, FpFunctor};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{self, kind_of, read_json, read_text, CategoryInput, Kind};
use crate::render;

/// Shared numeric options.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub bound: usize,
    pub budget: usize,
}

pub struct Report {
    /// False for a negative verdict.
    pub positive: bool,
    pub json: Value,
    pub text: String,
}

impl Report {
    fn new(positive: bool, json: Value, text: String) -> Self {
        Report { positive, json, text }
    }
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).context("serializing report")
}

/// A certificate file may hold the bare certificate or a report carrying it under `key`.
fn read_certificate<T: serde::de::DeserializeOwned>(path: &Path, key: &str) -> Result<T> {
    let text = read_text(path)?;
    let v: Value = input::parse(path, &text)?;
    match v.get(key) {
        Some(inner) => serde_json::from_value(inner.clone())
            .with_context(|| format!("{}: malformed `{key}`", path.display())),
        None => input::parse(path, &text),
    }
}

pub fn check(file: &Path, limits: Limits) -> Result<Report> {
    let text = read_text(file)?;
    let kind = kind_of(file, &text)?;
    let mut out = format!("{}: valid {kind:?}\n", file.display());
    let mut j = json!({ "file": file.display().to_string(), "kind": format!("{kind:?}") });
    match kind {
        Kind::Presentation => {
            let c: catcw::FpCategory = input::parse(file, &text)?;
            out.push_str(&render::presentation(&c));
            let rs = c.complete(limits.budget);
            let _ = writeln!(out, "completion: {:?} with {} rules", rs.status(), rs.rule_count());
            j["completion"] = json!({ "status": rs.status(), "rules": rs.rule_count() });
            if rs.is_complete() {
                match rs.to_finite(limits.bound) {
                    Ok(m) => {
                        out.push_str(&render::finite(&m));
                        j["finite"] = json!({ "objects": m.object_count(), "morphisms": m.morphism_count() });
                    }
                    Err(Error::NotFinite { src, dst, bound, .. }) => {
                        let _ = writeln!(out, "NotFinite: hom({src}, {dst}) exceeds {bound}");
                        j["finite"] = json!({ "NotFinite": { "src": src, "dst": dst, "bound": bound } });
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Kind::Finite => {
            let c: catcw::FiniteCategory = input::parse(file, &text)?;
            out.push_str(&render::finite(&c));
            j["finite"] = json!({ "objects": c.object_count(), "morphisms": c.morphism_count() });
        }
        Kind::Functor => {
            let f: FpFunctor = input::parse(file, &text)?;
            f.verify().context("functor does not respect the relations")?;
            out.push_str(&render::functor(&f));
        }
        Kind::Pointed => {
            let p: PointedCategory = input::parse(file, &text)?;
            let _ = writeln!(out, "basepoint: {}", p.basepoint());
            out.push_str(&render::presentation(p.cat()));
        }
        Kind::Span => {
            let s: Span = input::parse(file, &text)?;
            s.left.verify()?;
            s.right.verify()?;
            if s.left.source() != s.right.source() {
                bail!("{}: the two legs have different sources", file.display());
            }
        }
        Kind::Space => {
            let s: FiniteSpace = input::parse(file, &text)?;
            let _ = writeln!(out, "{} points, {} opens, connected: {}", s.points().len(), s.opens().len(), s.is_connected());
        }
        Kind::Groupoid => {
            let g: GroupoidPresentation = input::parse(file, &text)?;
            let _ = writeln!(out, "{} components", g.components.len());
        }
        Kind::Presheaf => {
            let p: CatPresheaf = input::parse(file, &text)?;
            let verdict = p.gluing()?;
            let _ = writeln!(out, "gluing: {verdict:?}");
            j["gluing"] = to_value(&verdict)?;
        }
        Kind::Sheaf => {
            input::parse::<CatSheaf>(file, &text)?;
        }
        Kind::K0Witness => {
            let w: K0Witness = input::parse(file, &text)?;
            w.verify()?;
            out.push_str("witness verifies\n");
        }
    }
    Ok(Report::new(true, j, out))
}

/// Loads a functor between presentations or between finite categories.
fn load_functor(file: &Path, bound: usize) -> Result<FinFunctor> {
    let text = read_text(file)?;
    let v: Value = input::parse(file, &text)?;
    if v.get("gen_map").is_some() {
        let f: FpFunctor = input::parse(file, &text)?;
        f.verify().context("functor does not respect the relations")?;
        Ok(f.to_finite(bound)?)
    } else {
        let f: FinFunctor = input::parse(file, &text)?;
        if !f.check() {
            bail!("{}: not a functor", file.display());
        }
        Ok(f)
    }
}

pub fn equiv(file: &Path, verify: Option<&Path>, limits: Limits) -> Result<Report> {
    let f = load_functor(file, limits.bound)?;
    if let Some(cert) = verify {
        let c: EquivalenceCertificate = read_certificate(cert, "certificate")?;
        return Ok(match c.verify(&f) {
            Ok(()) => Report::new(true, json!({ "verified": true }), "certificate verifies\n".into()),
            Err(e) => Report::new(
                false,
                json!({ "verified": false, "reason": e.to_string() }),
                format!("certificate rejected: {e}\n"),
            ),
        });
    }
    Ok(match is_equivalence(&f) {
        Ok(c) => {
            let text = format!(
                "Equivalence\n{} hom-set bijections, {} essential-surjectivity witnesses\n",
                c.fully_faithful.len(),
                c.essentially_surjective.len()
            );
            Report::new(true, json!({ "verdict": "Equivalence", "certificate": c }), text)
        }
        Err(e) => Report::new(
            false,
            json!({ "verdict": "NotEquivalence", "reason": e }),
            format!("NotEquivalence: {e}\n"),
        ),
    })
}

pub fn pushout_cmd(file: &Path, one_sided: bool, verify: Option<&Path>) -> Result<Report> {
    let span: Span = read_json(file)?;
    let result = if one_sided {
        one_sided_homotopy_pushout(&span.left, &span.right)?
    } else {
        pushout(&span.left, &span.right)?
    };
    if let Some(stored) = verify {
        let r: PushoutResult = read_certificate(stored, "pushout")?;
        let verdict = r.verify().map_err(|e| e.to_string()).and_then(|()| {
            if r == result {
                Ok(())
            } else {
                Err("stored pushout differs from the recomputed one".into())
            }
        });
        return Ok(match verdict {
            Ok(()) => Report::new(true, json!({ "verified": true }), "pushout verifies\n".into()),
            Err(e) => Report::new(false, json!({ "verified": false, "reason": e }), format!("pushout rejected: {e}\n")),
        });
    }
    result.verify()?;
    let mut text = render::presentation(&result.apex);
    let _ = write!(text, "left injection:\n{}", render::functor(&result.inj_left));
    let _ = write!(text, "right injection:\n{}", render::functor(&result.inj_right));
    Ok(Report::new(true, json!({ "pushout": result }), text))
}

pub fn sphere_cmd(n: usize, to_finite: bool, limits: Limits) -> Result<Report> {
    let s = sphere(n)?;
    let mut text = format!("S^{n}\n{}", render::presentation(&s));
    let mut j = json!({ "n": n, "presentation": s });
    if to_finite {
        let rs = s.complete(limits.budget);
        match rs.to_finite(limits.bound) {
            Ok(m) => {
                text.push_str(&render::finite(&m));
                j["finite"] = to_value(&m)?;
            }
            Err(Error::NotFinite { src, dst, .. }) => {
                let forms: Vec<String> =
                    rs.normal_forms(&src, &dst, limits.bound)?.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    text,
                    "NotFinite: hom({src}, {dst}) has more than {} morphisms\nnormal forms up to length {}:",
                    limits.bound, limits.bound
                );
                for f in &forms {
                    let _ = writeln!(text, "  {f}");
                }
                j["finite"] = json!({ "NotFinite": { "src": src, "dst": dst, "bound": limits.bound, "normal_forms": forms } });
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(Report::new(true, j, text))
}

pub fn suspend_cmd(x: &PointedCategory) -> Result<Report> {
    let s = suspension(x)?;
    let mut text = format!("suspension, based at {}\n{}", s.result.basepoint(), render::presentation(s.result.cat()));
    let mut j = json!({ "input": x, "suspension": s.result });
    if let Ok(d) = verify_double_suspension(x) {
        text.push_str("double suspension is the terminal category\n");
        j["double_suspension_terminal"] = to_value(&d.terminal)?;
    }
    Ok(Report::new(true, j, text))
}

pub fn cone_cmd(x: &PointedCategory) -> Result<Report> {
    let c = cone(x);
    let unit = cone_unit(x);
    let contractible = is_contractible_fp(c.cat())?;
    let mut text = format!("cone, based at {}\n{}", c.basepoint(), render::presentation(c.cat()));
    let _ = write!(text, "unit:\n{}contractible: {contractible}\n", render::functor(&unit));
    let j = json!({ "input": x, "cone": c, "unit": unit, "contractible": contractible });
    Ok(Report::new(true, j, text))
}

fn default_witness_path(file: Option<&Path>, seed: Option<u64>) -> PathBuf {
    match (file.and_then(Path::file_stem), seed) {
        (Some(stem), _) => PathBuf::from(format!("{}.k0.json", stem.to_string_lossy())),
        (None, Some(seed)) => PathBuf::from(format!("seed-{seed}.k0.json")),
        (None, None) => PathBuf::from("witness.k0.json"),
    }
}

pub fn k0_witness(
    file: Option<&Path>,
    basepoint: Option<&str>,
    seed: Option<u64>,
    out: Option<&Path>,
    verify: Option<&Path>,
    replay: bool,
) -> Result<Report> {
    if let Some(stored) = verify {
        let w: K0Witness = read_json(stored)?;
        let verdict = w.verify().and_then(|()| if replay { w.replay() } else { Ok(()) });
        return Ok(match verdict {
            Ok(()) => {
                let how = if replay { "verifies and replays" } else { "verifies" };
                Report::new(true, json!({ "verified": true, "replayed": replay }), format!("witness {how}\n"))
            }
            Err(e) => Report::new(false, json!({ "verified": false, "reason": e.to_string() }), format!("witness rejected: {e}\n")),
        });
    }
    let x = input::pointed(file, basepoint, seed)?;
    let w = k0_vanishing_witness(&x)?;
    let path = out.map_or_else(|| default_witness_path(file, seed), Path::to_path_buf);
    let body = serde_json::to_string_pretty(&w)? + "\n";
    fs::write(&path, body).with_context(|| format!("cannot write {}", path.display()))?;
    let text = format!(
        "[X] = 0 in K0\nΣX has {} objects, Σ²X has {}\nwitness written to {}\nscope: {}\n",
        w.suspension.cat().object_count(),
        w.double_suspension.cat().object_count(),
        path.display(),
        w.scope
    );
    let j = json!({ "verdict": "Vanishes", "witness_file": path.display().to_string() });
    Ok(Report::new(true, j, text))
}

fn cw_report(v: CwVerdict) -> Result<Report> {
    let positive = v.kind != CwKind::NotCW;
    let mut text = format!("{:?}\n", v.kind);
    if let Some(note) = &v.note {
        let _ = writeln!(text, "note: {note}");
    }
    match &v.witness {
        CwWitness::NonInvertible { morphism } => {
            let _ = writeln!(text, "{morphism} is not invertible");
        }
        CwWitness::Thin => text.push_str("every automorphism group is trivial\n"),
        CwWitness::Free { components } => {
            for c in components {
                let gens: Vec<String> = c.generators.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "at {}: free on [{}]", c.basepoint, gens.join(", "));
            }
        }
        CwWitness::Groupoid => text.push_str("finite groupoid\n"),
    }
    Ok(Report::new(positive, to_value(&v)?, text))
}

pub fn cw_classify_cmd(file: &Path) -> Result<Report> {
    match CategoryInput::load(file)? {
        CategoryInput::Presented(c) => cw_report(cw_classify_fp(&c)?),
        CategoryInput::Finite(c) => cw_report(cw_classify(&c)),
    }
}

pub fn cw_build(file: &Path) -> Result<Report> {
    let g: GroupoidPresentation = read_json(file)?;
    let c = build_two_complex(&g)?;
    let text = render::presentation(&c);
    Ok(Report::new(true, json!({ "presentation": c }), text))
}

pub fn sheaf_unit(category: &Path, space: &Path, verify: Option<&Path>, limits: Limits) -> Result<Report> {
    let a = CategoryInput::load(category)?.finite(limits.bound)?;
    let space: FiniteSpace = read_json(space)?;
    if let Some(stored) = verify {
        let c: FinIsoCertificate = read_certificate(stored, "certificate")?;
        let gamma = global_sections(&sheafify_constant(&a, &space));
        let verdict = c.verify().map_err(|e| e.to_string()).and_then(|()| {
            if *c.forward.source == a && c.forward.target == gamma {
                Ok(())
            } else {
                Err("certificate is about other categories".to_string())
            }
        });
        return Ok(match verdict {
            Ok(()) => Report::new(true, json!({ "verified": true }), "certificate verifies\n".into()),
            Err(e) => Report::new(false, json!({ "verified": false, "reason": e }), format!("certificate rejected: {e}\n")),
        });
    }
    Ok(match unit_check(&a, &space) {
        Ok(c) => {
            let text = format!("unit is an isomorphism\n{}", render::fin_functor(&c.forward));
            Report::new(true, json!({ "verdict": "Isomorphism", "certificate": c }), text)
        }
        Err(e) => Report::new(false, json!({ "verdict": "NotIsomorphism", "reason": e }), format!("{e}\n")),
    })
}

pub fn sheaf_exotic() -> Result<Report> {
    let demo = exotic_map_demo();
    let space = demo.map.source.space();
    let mut text = String::from("space: discrete on {u, v}; sheaf: constant on S^0 = {0, 1}\nξ per open:\n");
    for (u, f) in space.opens().iter().zip(&demo.map.components) {
        let images: Vec<&str> = f.object_map.iter().map(|&o| f.target.objects()[o].as_str()).collect();
        let _ = writeln!(text, "  {{{}}}: objects to [{}]", space.names(*u).join(", "), images.join(", "));
    }
    text.push_str(if demo.in_constant_image { "in constant image\n" } else { "not in constant image\n" });
    Ok(Report::new(true, to_value(&demo)?, text))
}

pub fn sheaf_classify(first: &Path, second: Option<&Path>, limits: Limits) -> Result<Report> {
    let sheaf: CatSheaf = match second {
        None => read_json(first)?,
        Some(space) => {
            let a = CategoryInput::load(first)?.finite(limits.bound)?;
            let space: FiniteSpace = read_json(space)?;
            sheafify_constant(&a, &space)
        }
    };
    let verdict = classify_cw_sheaf(&sheaf)?;
    let positive = verdict == CwSheafVerdict::Cw;
    let text = match &verdict {
        CwSheafVerdict::Cw => "Cw: constant sheaf on a groupoid\n".to_string(),
        CwSheafVerdict::NotConstant { open } => format!("NotCW: not constant at {{{}}}\n", open.join(", ")),
        CwSheafVerdict::NotGroupoid { morphism } => format!("NotCW: global section {morphism} is not invertible\n"),
    };
    let g = Arc::clone(&global_sections(&sheaf));
    let j = json!({ "verdict": verdict, "global_sections": g });
    Ok(Report::new(positive, j, text))
}
