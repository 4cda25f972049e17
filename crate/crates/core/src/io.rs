//! Text and JSON formats. Rationals travel as `"p/q"` strings, never as
//! decimals; coordinate facets are numbered from 1 on the wire.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homogeneous::{ConsistencyReport, DiagramReport, ResidueReport, RootSet, Verdict};
use crate::lattice::FacetInvariants;
use crate::multiplier::{JumpingReport, MultiplierIdealBasis};
use crate::oracle::RingCheckReport;
use crate::polyhedron::{ExponentVector, LinearForm, MonomialIdeal, NewtonPolyhedron};
use crate::rational::{self, Rational};
use crate::spectrum::{IdealSpectrum, SpectrumPolynomial};

fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(rational::format).collect()
}

fn vectors(values: &[ExponentVector]) -> Vec<Vec<i64>> {
    values.iter().map(|v| v.coords().to_vec()).collect()
}

/// Single-line JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<Vec<i64>>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &MonomialIdeal) -> Self {
        Self {
            n: ideal.n(),
            generators: vectors(ideal.generators()),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::new(self.n, self.generators.iter().cloned().map(ExponentVector::new).collect())
    }
}

/// A parsed ideal plus notices about what minimalization removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub notices: Vec<String>,
}

/// Reads `{"n": .., "generators": [[..], ..]}` or one exponent vector per
/// line (whitespace or comma separated, `#` starts a comment).
pub fn parse_ideal(source: &str) -> Result<ParsedIdeal> {
    let trimmed = source.trim_start();
    let (n, rows) = if trimmed.starts_with('{') {
        let json: IdealJson = serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("malformed JSON: {e}")))?;
        (json.n, json.generators)
    } else {
        let mut rows = Vec::new();
        for (lineno, line) in source.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let row = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("line {}: bad exponent {t:?}", lineno + 1)))
                })
                .collect::<Result<Vec<i64>>>()?;
            rows.push(row);
        }
        (rows.first().map_or(0, Vec::len), rows)
    };
    let given: Vec<ExponentVector> = rows.into_iter().map(ExponentVector::new).collect();
    let ideal = MonomialIdeal::new(n, given.clone())?;
    let mut notices = Vec::new();
    let mut distinct = given;
    distinct.sort();
    distinct.dedup();
    let dropped: Vec<String> = distinct
        .iter()
        .filter(|g| !ideal.generators().contains(g))
        .map(ToString::to_string)
        .collect();
    if !dropped.is_empty() {
        notices.push(format!(
            "minimalized to {} generators; dropped {}",
            ideal.generators().len(),
            dropped.join(" ")
        ));
    }
    Ok(ParsedIdeal { ideal, notices })
}

/// One exponent vector per line, the text form accepted by [`parse_ideal`].
pub fn ideal_to_text(ideal: &MonomialIdeal) -> String {
    ideal
        .generators()
        .iter()
        .map(|g| g.coords().iter().map(i64::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyhedronJson {
    pub n: usize,
    pub generators: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
    pub level_one_facets: Vec<Vec<String>>,
    pub compact: Vec<bool>,
    pub coordinate_facets: Vec<usize>,
}

impl PolyhedronJson {
    pub fn new(poly: &NewtonPolyhedron) -> Self {
        let compact = (0..poly.level_one_facets().len())
            .map(|j| poly.facet_face(j).is_compact)
            .collect();
        Self {
            n: poly.n(),
            generators: vectors(poly.generators()),
            vertices: vectors(poly.vertices()),
            level_one_facets: poly.level_one_facets().iter().map(|f| rationals(f.coeffs())).collect(),
            compact,
            coordinate_facets: poly.coordinate_facets().iter().map(|i| i + 1).collect(),
        }
    }
}

pub fn parse_form(coeffs: &[String]) -> Result<LinearForm> {
    LinearForm::new(coeffs.iter().map(|c| rational::parse(c)).collect::<Result<Vec<_>>>()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub facet_vertices: Vec<Vec<i64>>,
    #[serde(rename = "L")]
    pub form: Vec<String>,
    pub c: u64,
    pub e: u64,
    pub face_points: Vec<Vec<i64>>,
}

impl FacetJson {
    pub fn new(inv: &FacetInvariants) -> Self {
        Self {
            facet_vertices: vectors(&inv.facet_vertices),
            form: rationals(inv.form.coeffs()),
            c: inv.c,
            e: inv.e,
            face_points: vectors(&inv.face_points),
        }
    }
}

/// `[["p/q", multiplicity], ...]` in increasing exponent order.
pub type SpectrumTerms = Vec<(String, i64)>;

pub fn spectrum_terms(s: &SpectrumPolynomial) -> SpectrumTerms {
    s.terms().map(|(a, m)| (rational::format(a), m)).collect()
}

pub fn parse_spectrum(terms: &SpectrumTerms) -> Result<SpectrumPolynomial> {
    let parsed = terms
        .iter()
        .map(|(a, m)| Ok((rational::parse(a)?, *m)))
        .collect::<Result<Vec<_>>>()?;
    SpectrumPolynomial::from_terms(parsed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    pub facet: Vec<String>,
    pub c: u64,
    pub e: u64,
    pub nonreduced: SpectrumTerms,
    pub reduced: SpectrumTerms,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub ideal: IdealJson,
    pub components: Vec<ComponentJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl SpectrumJson {
    pub fn new(ideal: &MonomialIdeal, sp: &IdealSpectrum) -> Self {
        Self {
            ideal: IdealJson::from_ideal(ideal),
            components: sp
                .components
                .iter()
                .map(|c| ComponentJson {
                    facet: rationals(c.invariants.form.coeffs()),
                    c: c.invariants.c,
                    e: c.invariants.e,
                    nonreduced: spectrum_terms(&c.nonreduced),
                    reduced: spectrum_terms(&c.reduced),
                })
                .collect(),
            note: sp.note.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierJson {
    pub alpha: String,
    pub generators: Vec<Vec<i64>>,
    pub guarantee_box: i64,
    pub unit: bool,
}

impl MultiplierJson {
    pub fn new(basis: &MultiplierIdealBasis) -> Self {
        Self {
            alpha: rational::format(&basis.alpha),
            generators: vectors(&basis.minimal_generators),
            guarantee_box: basis.guarantee_box,
            unit: basis.is_unit(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpingEntryJson {
    pub value: String,
    pub witness: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JumpingJson {
    pub bound: String,
    pub lct: String,
    /// Box `[1, K]^n` whose weights the reported set is complete for.
    pub report_box: i64,
    pub coefficients: Vec<JumpingEntryJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl JumpingJson {
    pub fn new(report: &JumpingReport, lct: &Rational, report_box: i64) -> Self {
        Self {
            bound: rational::format(&report.bound),
            lct: rational::format(lct),
            report_box,
            coefficients: report
                .coefficients
                .iter()
                .map(|c| JumpingEntryJson {
                    value: rational::format(&c.value),
                    witness: c.witness.coords().to_vec(),
                })
                .collect(),
            note: report.note.clone(),
        }
    }
}

pub fn root_strings(set: &RootSet) -> Vec<String> {
    set.to_strings()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub relation: String,
    pub holds: bool,
    pub strict: bool,
    pub difference: Vec<String>,
}

impl VerdictJson {
    fn new(relation: &str, v: &Verdict) -> Self {
        Self {
            relation: relation.to_string(),
            holds: v.holds,
            strict: v.is_strict(),
            difference: rationals(&v.strict_witnesses),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub m: Vec<u64>,
    pub jc_divisor: Vec<String>,
    pub jc_ideal: Vec<String>,
    pub exponents_divisor: Vec<String>,
    pub exponents_ideal: Vec<String>,
    pub verdicts: Vec<VerdictJson>,
}

impl DiagramJson {
    pub fn new(r: &DiagramReport) -> Self {
        Self {
            m: r.data.m().to_vec(),
            jc_divisor: r.jc_divisor.to_strings(),
            jc_ideal: r.jc_ideal.to_strings(),
            exponents_divisor: r.exponents_divisor.to_strings(),
            exponents_ideal: r.exponents_ideal.to_strings(),
            verdicts: vec![
                VerdictJson::new("(1) JC(Y,D) = JC(Y,X)", &r.v1),
                VerdictJson::new("(2) JC(Y,D) = E(D,0)", &r.v2),
                VerdictJson::new("(3) JC(Y,X) ⊆ ∪E(X,Λ)", &r.v3),
                VerdictJson::new("(4) E(D,0) ⊆ ∪E(X,Λ)", &r.v4),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentCheckJson {
    pub alpha: String,
    pub root_shift: Option<i64>,
    pub j0: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyJson {
    pub m: Vec<u64>,
    pub bound: String,
    pub escalated: bool,
    pub passed: bool,
    pub checks: Vec<ExponentCheckJson>,
    pub failures: Vec<String>,
}

impl ConsistencyJson {
    pub fn new(r: &ConsistencyReport) -> Self {
        Self {
            m: r.data.m().to_vec(),
            bound: rational::format(&r.bound),
            escalated: r.escalated,
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| ExponentCheckJson {
                    alpha: rational::format(&c.alpha),
                    root_shift: c.root_shift,
                    j0: c.j0,
                })
                .collect(),
            failures: r.failures.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueJson {
    pub facet: Vec<String>,
    pub c: u64,
    pub passed: bool,
    /// `[class, witness, value]`; witness and value are null when missing.
    pub classes: Vec<(String, Option<Vec<i64>>, Option<String>)>,
}

impl ResidueJson {
    pub fn new(poly: &NewtonPolyhedron, r: &ResidueReport) -> Self {
        Self {
            facet: rationals(poly.level_one_facets()[r.facet].coeffs()),
            c: r.c,
            passed: r.passed(),
            classes: r
                .classes
                .iter()
                .map(|w| {
                    let (nu, value) = match &w.witness {
                        Some((nu, v)) => (Some(nu.coords().to_vec()), Some(rational::format(v))),
                        None => (None, None),
                    };
                    (rational::format(&w.class), nu, value)
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFailureJson {
    pub kind: String,
    pub witness: Vec<Vec<i64>>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingCheckJson {
    pub box_bound: i64,
    pub k_max: u32,
    pub n_pow: i64,
    pub nilpotent_classes: usize,
    pub tight_products: usize,
    pub passed: bool,
    pub failures: Vec<RingFailureJson>,
}

impl RingCheckJson {
    pub fn new(r: &RingCheckReport) -> Self {
        Self {
            box_bound: r.bx.k(),
            k_max: r.k_max,
            n_pow: r.n_pow,
            nilpotent_classes: r.nilpotent_classes,
            tight_products: r.tight_products,
            passed: r.passed(),
            failures: r
                .failures
                .iter()
                .map(|f| RingFailureJson {
                    kind: format!("{:?}", f.kind),
                    witness: vectors(&f.witness),
                    detail: f.detail.clone(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::newton_polyhedron;
    use crate::spectrum::spectrum_of_ideal;

    #[test]
    fn parses_both_forms() {
        let a = parse_ideal(r#"{"n":2,"generators":[[2,0],[0,3]]}"#).unwrap();
        let b = parse_ideal("2 0\n0 3\n").unwrap();
        assert_eq!(a.ideal, b.ideal);
        assert!(a.notices.is_empty());
        let c = parse_ideal(r#"{"n":2,"generators":[[2,0],[3,0],[0,3]]}"#).unwrap();
        assert_eq!(c.ideal.generators().len(), 2);
        assert_eq!(c.notices.len(), 1);
        let d = parse_ideal("# cusp\n2, 0\n\n0,3 # y^3\n").unwrap();
        assert_eq!(d.ideal, a.ideal);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_ideal("{\"n\":2,"), Err(Error::Parse(_))));
        assert!(matches!(parse_ideal("1 2\n3"), Err(Error::RaggedGenerator { .. })));
        assert!(matches!(parse_ideal("1 -2"), Err(Error::NegativeExponent { .. })));
        assert!(matches!(parse_ideal(""), Err(Error::ZeroDimension)));
        assert!(matches!(parse_ideal(r#"{"n":2,"generators":[]}"#), Err(Error::EmptyGenerators)));
        let err = parse_ideal("1 x").unwrap_err();
        assert!(err.to_string().contains("\"x\""));
    }

    #[test]
    fn round_trips() {
        let ideal = MonomialIdeal::from_rows(&[&[3, 0], &[1, 1], &[0, 3]]).unwrap();
        let json = to_json(&IdealJson::from_ideal(&ideal));
        assert_eq!(parse_ideal(&json).unwrap().ideal, ideal);
        assert_eq!(parse_ideal(&ideal_to_text(&ideal)).unwrap().ideal, ideal);

        let sp = spectrum_of_ideal(&ideal).unwrap();
        let out = SpectrumJson::new(&ideal, &sp);
        let text = to_json(&out);
        let back: SpectrumJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out);
        for (c, j) in sp.components.iter().zip(&back.components) {
            assert_eq!(parse_spectrum(&j.nonreduced).unwrap(), c.nonreduced);
            assert_eq!(parse_form(&j.facet).unwrap(), c.invariants.form);
        }
    }

    #[test]
    fn polyhedron_wire_format() {
        let ideal = MonomialIdeal::from_rows(&[&[2, 1], &[1, 3]]).unwrap();
        let p = PolyhedronJson::new(&newton_polyhedron(&ideal));
        assert_eq!(p.level_one_facets, vec![vec!["0", "1"], vec!["2/5", "1/5"], vec!["1", "0"]]);
        assert_eq!(p.compact, vec![false, true, false]);
        assert!(p.coordinate_facets.is_empty());
        let q = PolyhedronJson::new(&newton_polyhedron(&MonomialIdeal::from_rows(&[&[2, 0], &[0, 3]]).unwrap()));
        assert_eq!(q.coordinate_facets, vec![1, 2]);
    }
}
