//! String-in, JSON-out entry points shared by the wasm exports and tests.

use serde::Serialize;

use newton_spectrum::homogeneous::{comparison_diagram, DiagonalData};
use newton_spectrum::io::{parse_ideal, DiagramJson, FacetJson, JumpingJson, PolyhedronJson, SpectrumJson};
use newton_spectrum::lattice::all_facet_invariants;
use newton_spectrum::multiplier::{default_box, jumping_coefficients, lct};
use newton_spectrum::rational;
use newton_spectrum::spectrum::spectrum_of_ideal;
use newton_spectrum::newton_polyhedron;

/// Everything the page draws for one ideal.
#[derive(Serialize)]
pub struct Analysis {
    pub notices: Vec<String>,
    pub lct: String,
    pub polyhedron: PolyhedronJson,
    pub facets: Vec<FacetJson>,
    pub spectrum: SpectrumJson,
}

fn encode<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

pub fn analyze(source: &str) -> Result<String, String> {
    let parsed = parse_ideal(source).map_err(|e| e.to_string())?;
    let ideal = parsed.ideal;
    let poly = newton_polyhedron(&ideal);
    let facets = all_facet_invariants(&ideal, &poly).map_err(|e| e.to_string())?;
    let spectrum = spectrum_of_ideal(&ideal).map_err(|e| e.to_string())?;
    encode(&Analysis {
        notices: parsed.notices,
        lct: rational::format(&lct(&poly)),
        polyhedron: PolyhedronJson::new(&poly),
        facets: facets.iter().map(FacetJson::new).collect(),
        spectrum: SpectrumJson::new(&ideal, &spectrum),
    })
}

pub fn jumping(source: &str, bound: &str) -> Result<String, String> {
    let ideal = parse_ideal(source).map_err(|e| e.to_string())?.ideal;
    let bound = rational::parse(bound.trim()).map_err(|e| e.to_string())?;
    let poly = newton_polyhedron(&ideal);
    let report = jumping_coefficients(&poly, &bound).map_err(|e| e.to_string())?;
    let k = report
        .coefficients
        .iter()
        .flat_map(|c| c.witness.coords().iter().copied())
        .fold(default_box(&poly, &bound).map_err(|e| e.to_string())?, i64::max);
    encode(&JumpingJson::new(&report, &lct(&poly), k))
}

/// `m` is a comma-separated list such as `"2,3"`.
pub fn compare(m: &str) -> Result<String, String> {
    let m = m
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad exponent {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    let data = DiagonalData::fermat(m).map_err(|e| e.to_string())?;
    let report = comparison_diagram(&data).map_err(|e| e.to_string())?;
    encode(&DiagramJson::new(&report))
}
