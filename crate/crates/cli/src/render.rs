//! Plain-text tables. JSON is the source of truth; these only lay it out.

use std::fmt::Write;

use newton_spectrum::io::{
    ConsistencyJson, DiagramJson, FacetJson, JumpingJson, MultiplierJson, PolyhedronJson, SpectrumJson,
};
use newton_spectrum::verify::VerifyReport;

fn vector(v: &[i64]) -> String {
    format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(", "))
}

fn form(coeffs: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.as_str() != "0")
        .map(|(i, c)| if c == "1" { format!("x{}", i + 1) } else { format!("{c}·x{}", i + 1) })
        .collect();
    terms.join(" + ")
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

pub fn terms(t: &[(String, i64)]) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|(a, m)| match (m, a.as_str()) {
            (1, "1") => "t".to_string(),
            (1, _) => format!("t^{a}"),
            (_, "1") => format!("{m}t"),
            _ => format!("{m}t^{a}"),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn polyhedron(p: &PolyhedronJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "n = {}", p.n);
    let _ = writeln!(s, "vertices: {}", p.vertices.iter().map(|v| vector(v)).collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "level-one facets:");
    for (f, compact) in p.level_one_facets.iter().zip(&p.compact) {
        let tag = if *compact { "compact" } else { "noncompact" };
        let _ = writeln!(s, "  {:<10} {} = 1", tag, form(f));
    }
    let coords: Vec<String> = p.coordinate_facets.iter().map(|i| format!("x{i} = 0")).collect();
    let _ = writeln!(s, "coordinate facets: {}", if coords.is_empty() { "none".into() } else { coords.join(", ") });
    s
}

pub fn facets(fs: &[FacetJson]) -> String {
    let mut s = String::new();
    let width = fs.iter().map(|f| form(&f.form).chars().count()).max().unwrap_or(0).max(5);
    let _ = writeln!(s, "{:<width$}  {:>4}  {:>4}  vertices", "facet", "c", "e");
    for f in fs {
        let verts: Vec<String> = f.facet_vertices.iter().map(|v| vector(v)).collect();
        let _ = writeln!(s, "{:<width$}  {:>4}  {:>4}  {}", form(&f.form), f.c, f.e, verts.join(" "));
    }
    s
}

pub fn spectrum(sp: &SpectrumJson) -> String {
    let mut s = String::new();
    if let Some(note) = &sp.note {
        let _ = writeln!(s, "{note}");
    }
    for (i, c) in sp.components.iter().enumerate() {
        let _ = writeln!(s, "component {} over {} = 1   (c = {}, e = {})", i + 1, form(&c.facet), c.c, c.e);
        let width = c.nonreduced.iter().map(|(a, _)| a.len()).max().unwrap_or(1);
        for (a, m) in &c.nonreduced {
            let _ = writeln!(s, "  {a:>width$}  {m:>4}");
        }
        let _ = writeln!(s, "  reduced: {}", terms(&c.reduced));
    }
    s
}

pub fn multiplier(m: &MultiplierJson) -> String {
    let gens: Vec<String> = m.generators.iter().map(|g| vector(g)).collect();
    format!(
        "J({}): {}\nguarantee box [0, {}]^n\n",
        m.alpha,
        if m.unit { "unit ideal".to_string() } else { gens.join(" ") },
        m.guarantee_box
    )
}

pub fn jumping(j: &JumpingJson) -> String {
    let mut s = format!("lct = {}; jumping coefficients in (0, {}]\n", j.lct, j.bound);
    if let Some(note) = &j.note {
        let _ = writeln!(s, "{note}");
    }
    let width = j.coefficients.iter().map(|c| c.value.len()).max().unwrap_or(1);
    for c in &j.coefficients {
        let _ = writeln!(s, "  {:>width$}  witness {}", c.value, vector(&c.witness));
    }
    let _ = writeln!(s, "complete for weights of [1, {}]^n", j.report_box);
    s
}

fn set(v: &[String]) -> String {
    format!("{{{}}}", v.join(", "))
}

pub fn diagram(d: &DiagramJson) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "m = {:?}, all sets restricted to (0,1)", d.m);
    let _ = writeln!(s, "  JC(Y,D)    {}", set(&d.jc_divisor));
    let _ = writeln!(s, "  JC(Y,X)    {}", set(&d.jc_ideal));
    let _ = writeln!(s, "  E(D,0)     {}", set(&d.exponents_divisor));
    let _ = writeln!(s, "  ∪E(X,Λ)    {}", set(&d.exponents_ideal));
    for v in &d.verdicts {
        let strict = if v.strict { format!("  strict, e.g. {}", v.difference[0]) } else { String::new() };
        let _ = writeln!(s, "  {:<28} {}{strict}", v.relation, verdict(v.holds));
    }
    s
}

pub fn consistency(c: &ConsistencyJson) -> String {
    let mut s = format!("m = {:?}, bound {}{}\n", c.m, c.bound, if c.escalated { " (escalated)" } else { "" });
    let _ = writeln!(s, "  {:>8}  {:>6}  {:>4}", "alpha", "shift", "j0");
    let show = |x: Option<i64>| x.map_or("-".to_string(), |v| v.to_string());
    for e in &c.checks {
        let _ = writeln!(s, "  {:>8}  {:>6}  {:>4}", e.alpha, show(e.root_shift), show(e.j0));
    }
    for f in &c.failures {
        let _ = writeln!(s, "  failure: {f}");
    }
    let _ = writeln!(s, "{}", verdict(c.passed));
    s
}

pub fn verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    for ideal in &r.ideals {
        let _ = writeln!(s, "{:<28} {}", ideal.name, verdict(ideal.passed));
        for c in &ideal.checks {
            let _ = writeln!(s, "    {:<40} {}  {}", c.name, verdict(c.passed), c.detail);
        }
        let _ = writeln!(
            s,
            "    {:<40} {}  {} nilpotent classes, {} products",
            "graded ring to degree k_max",
            verdict(ideal.ring.passed),
            ideal.ring.nilpotent_classes,
            ideal.ring.tight_products
        );
    }
    let _ = writeln!(s, "overall: {}", verdict(r.passed));
    s
}
