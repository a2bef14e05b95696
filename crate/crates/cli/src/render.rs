//! Plain-text rendering of categories and functors.

use std::fmt::Write;

use catcw::{FinFunctor, FiniteCategory, FpCategory, FpFunctor};

pub fn presentation(c: &FpCategory) -> String {
    let mut out = format!("objects: {}\n", c.objects().join(", "));
    let declared: Vec<_> = c.declared_generators().collect();
    if !declared.is_empty() {
        out.push_str("generators:\n");
        for g in declared {
            let inv = if c.invertible().contains_key(&g.name) { " (invertible)" } else { "" };
            let _ = writeln!(out, "  {}: {} -> {}{inv}", g.name, g.src, g.dst);
        }
    }
    if !c.relations().is_empty() {
        out.push_str("relations:\n");
        for r in c.relations() {
            let _ = writeln!(out, "  {} = {}", r.lhs, r.rhs);
        }
    }
    out
}

pub fn finite(c: &FiniteCategory) -> String {
    let mut out = format!(
        "{} objects, {} morphisms\nobjects: {}\n",
        c.object_count(),
        c.morphism_count(),
        c.objects().join(", ")
    );
    let nontrivial: Vec<_> = c
        .hom_sizes()
        .into_iter()
        .filter(|((x, y), n)| *n > usize::from(x == y))
        .collect();
    if !nontrivial.is_empty() {
        out.push_str("hom-sets beyond identities:\n");
        for ((x, y), n) in nontrivial {
            let _ = writeln!(out, "  |hom({x}, {y})| = {n}");
        }
    }
    out
}

pub fn functor(f: &FpFunctor) -> String {
    let mut out = String::new();
    for (x, y) in f.object_map() {
        let _ = writeln!(out, "  {x} |-> {y}");
    }
    for (g, p) in f.gen_map() {
        let _ = writeln!(out, "  {g} |-> {p}");
    }
    out
}

pub fn fin_functor(f: &FinFunctor) -> String {
    let (s, t) = (&f.source, &f.target);
    let mut out = String::new();
    for (x, &y) in f.object_map.iter().enumerate() {
        let _ = writeln!(out, "  {} |-> {}", s.objects()[x], t.objects()[y]);
    }
    for (m, &n) in f.mor_map.iter().enumerate() {
        if !s.is_identity(m) {
            let _ = writeln!(out, "  {} |-> {}", s.label(m), t.label(n));
        }
    }
    out
}
