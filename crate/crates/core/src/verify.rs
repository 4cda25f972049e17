//! The oracle suite run against one ideal, with a serializable report.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homogeneous::residue_class_minimum_check;
use crate::io::{IdealJson, RingCheckJson};
use crate::lattice::{all_facet_invariants, kernel_basis};
use crate::multiplier::{default_box, jumping_coefficients};
use crate::oracle::{
    brute_jumping, brute_lattice_index, brute_weights_on_box, reduced_ring_check, BruteIndex, SearchBox,
};
use crate::polyhedron::{newton_polyhedron, ExponentVector, MonomialIdeal};
use crate::rational::{self, Rational};
use crate::spectrum::check_ambient_independence_iterated;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyParams {
    pub bx: SearchBox,
    pub k_max: u32,
    pub bound: Rational,
    /// `T_max` for the weight oracle.
    pub t_max: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<Vec<Vec<i64>>>,
}

impl Check {
    fn new(name: &str, failures: Vec<(String, Vec<ExponentVector>)>, summary: String) -> Self {
        let passed = failures.is_empty();
        let detail = if passed {
            summary
        } else {
            failures.iter().map(|(m, _)| m.as_str()).collect::<Vec<_>>().join("; ")
        };
        Self {
            name: name.to_string(),
            passed,
            detail,
            witnesses: failures
                .into_iter()
                .filter(|(_, w)| !w.is_empty())
                .map(|(_, w)| w.iter().map(|v| v.coords().to_vec()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealReport {
    pub name: String,
    pub ideal: IdealJson,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub ring: RingCheckJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub box_bound: i64,
    pub k_max: u32,
    pub bound: String,
    pub passed: bool,
    pub ideals: Vec<IdealReport>,
}

/// Runs every oracle comparison on each named ideal.
pub fn verify_all(ideals: &[(String, MonomialIdeal)], params: &VerifyParams) -> Result<VerifyReport> {
    let reports = ideals
        .iter()
        .map(|(name, ideal)| verify_ideal(name, ideal, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport {
        box_bound: params.bx.k(),
        k_max: params.k_max,
        bound: rational::format(&params.bound),
        passed: reports.iter().all(|r| r.passed),
        ideals: reports,
    })
}

pub fn verify_ideal(name: &str, ideal: &MonomialIdeal, params: &VerifyParams) -> Result<IdealReport> {
    let poly = newton_polyhedron(ideal);
    let d = poly.common_denominator();
    let mut checks = Vec::new();

    // the weight box shrinks until the power table fits
    let mut wbox = params.bx.k();
    let weights = loop {
        match brute_weights_on_box(ideal, SearchBox::new(wbox)?, d, params.t_max) {
            Ok(w) => break w,
            Err(Error::Overflow(_)) if wbox > 1 => wbox /= 2,
            Err(e) => return Err(e),
        }
    };
    let mut fails = Vec::new();
    for (nu, bw) in &weights {
        let w = poly.weight_int(nu)?;
        if bw.value() != Some(&w) {
            fails.push((format!("ν = {nu}: weight {} but brute {:?}", rational::format(&w), bw), vec![nu.clone()]));
        }
    }
    checks.push(Check::new(
        "weight = brute_weight",
        fails,
        format!("{} points of [0,{wbox}]^n, D = {d}", weights.len()),
    ));

    let report = jumping_coefficients(&poly, &params.bound)?;
    let mut k = default_box(&poly, &params.bound)?;
    let mut fails = Vec::new();
    for c in &report.coefficients {
        if poly.weight_int(&c.witness)? != c.value || !c.witness.is_positive() {
            fails.push((format!("bad witness for {}", rational::format(&c.value)), vec![c.witness.clone()]));
        }
        k = k.max(c.witness.coords().iter().copied().max().unwrap_or(1));
    }
    let module: BTreeSet<Rational> = report.values().into_iter().collect();
    let brute = brute_jumping(&poly, SearchBox::new(k)?, &params.bound)?;
    for v in module.symmetric_difference(&brute) {
        let side = if module.contains(v) { "module only" } else { "brute only" };
        fails.push((format!("{} ({side})", rational::format(v)), vec![]));
    }
    checks.push(Check::new(
        "jumping coefficients = brute_jumping",
        fails,
        format!("{} values in (0,{}] on box {k}", module.len(), rational::format(&params.bound)),
    ));

    let mut fails = Vec::new();
    let invariants = all_facet_invariants(ideal, &poly)?;
    for inv in &invariants {
        let basis = kernel_basis(&inv.form)
            .into_iter()
            .map(|v| v.iter().map(rational::to_i64).collect::<Result<Vec<_>>>().map(ExponentVector::new))
            .collect::<Result<Vec<_>>>()?;
        let base = &inv.face_points[0];
        let diffs: Vec<ExponentVector> = inv.face_points[1..].iter().map(|p| p.sub(base)).collect();
        let ok = match brute_lattice_index(&basis, &diffs, 64)? {
            BruteIndex::Finite(b) => b == inv.e,
            BruteIndex::Overflow => inv.e > 64,
            BruteIndex::Infinite => false,
        };
        if !ok {
            fails.push((format!("facet {}: e = {}", inv.form, inv.e), inv.facet_vertices.clone()));
        }
    }
    checks.push(Check::new(
        "lattice_index = brute_lattice_index",
        fails,
        format!("{} compact facets", invariants.len()),
    ));

    let mut fails = Vec::new();
    for j in 0..poly.level_one_facets().len() {
        let r = residue_class_minimum_check(&poly, j)?;
        if !r.passed() {
            let missing: Vec<String> = r.unwitnessed().iter().map(rational::format).collect();
            fails.push((format!("facet {}: classes {}", poly.level_one_facets()[j], missing.join(", ")), vec![]));
        }
    }
    checks.push(Check::new(
        "residue classes reach value ≤ n",
        fails,
        format!("{} level-one facets", poly.level_one_facets().len()),
    ));

    let ambient = check_ambient_independence_iterated(ideal, 2)?;
    let fails = ambient.diagnostics.iter().map(|d| (d.clone(), vec![])).collect();
    checks.push(Check::new("ambient independence, depth 2", fails, "unit law and extensions agree".into()));

    let ring = reduced_ring_check(ideal, &poly, params.k_max, params.bx, d * params.k_max as i64)?;
    let ring = RingCheckJson::new(&ring);
    let passed = ring.passed && checks.iter().all(|c| c.passed);
    Ok(IdealReport {
        name: name.to_string(),
        ideal: IdealJson::from_ideal(ideal),
        passed,
        checks,
        ring,
    })
}
