//! Spectrum polynomials of the components of the normal cone over the origin.
//!
//! A spectrum polynomial is a finite sum `Σ m_α t^α` with positive rational
//! exponents and integer multiplicities. For a compact facet `σ` of the Newton
//! polyhedron the nonreduced spectrum of the component `Spec B̄_σ` is
//! `Σ_{i=1}^{c_σ} e_σ t^{i/c_σ}`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::lattice::{facet_invariants, FacetInvariants};
use crate::polyhedron::{newton_polyhedron, ExponentVector, MonomialIdeal};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct SpectrumPolynomial {
    terms: BTreeMap<Rational, i64>,
}

impl SpectrumPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The unit `t` for the twisted convolution.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1).unwrap()
    }

    pub fn monomial(exponent: Rational, multiplicity: i64) -> Result<Self> {
        Self::from_terms([(exponent, multiplicity)])
    }

    /// Collects terms, summing repeated exponents; exponents must be positive.
    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, i64)>) -> Result<Self> {
        let mut out = Self::zero();
        for (alpha, m) in terms {
            if !alpha.is_positive() {
                return Err(Error::Parse(format!(
                    "spectrum exponent {} is not positive",
                    rational::format(&alpha)
                )));
            }
            out.add_term(alpha, m);
        }
        Ok(out)
    }

    fn add_term(&mut self, alpha: Rational, m: i64) {
        if m == 0 {
            return;
        }
        match self.terms.entry(alpha) {
            Entry::Vacant(slot) => {
                slot.insert(m);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += m;
                if *slot.get() == 0 {
                    slot.remove();
                }
            }
        }
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, i64)> {
        self.terms.iter().map(|(a, &m)| (a, m))
    }

    pub fn multiplicity(&self, alpha: &Rational) -> i64 {
        self.terms.get(alpha).copied().unwrap_or(0)
    }

    /// Exponents with nonzero multiplicity.
    pub fn exponents(&self) -> Vec<Rational> {
        self.terms.keys().cloned().collect()
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for SpectrumPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (alpha, &m)) in self.terms.iter().enumerate() {
            let sign = if m < 0 { "-" } else { "+" };
            if k == 0 {
                if m < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if m.abs() != 1 {
                write!(f, "{}", m.abs())?;
            }
            if alpha.is_one() {
                write!(f, "t")?;
            } else {
                write!(f, "t^{}", rational::format(alpha))?;
            }
        }
        Ok(())
    }
}

/// `Σ_{i=1}^{c} e·t^{i/c}`.
pub fn facet_spectrum(c: u64, e: u64) -> SpectrumPolynomial {
    let mut s = SpectrumPolynomial::zero();
    let c = c as i64;
    for i in 1..=c {
        s.add_term(rational::rat(i, c), e as i64);
    }
    s
}

/// `Sp = Ŝp - (-1)^{n_Λ} t^{n_Λ + 1}`.
pub fn reduce(s: &SpectrumPolynomial, n_lambda: u32) -> SpectrumPolynomial {
    let mut out = s.clone();
    let sign = if n_lambda.is_multiple_of(2) { 1 } else { -1 };
    out.add_term(rational::int(i64::from(n_lambda) + 1), -sign);
    out
}

/// `α₁ +̃ α₂`: the plain sum when the ceiling deficits add up to at least one,
/// and the sum minus one otherwise.
pub fn twisted_sum(a1: &Rational, a2: &Rational) -> Rational {
    let deficit = rational::ceil_deficit(a1) + rational::ceil_deficit(a2);
    let sum = a1 + a2;
    if deficit >= Rational::one() {
        sum
    } else {
        sum - Rational::one()
    }
}

/// Twisted convolution: the spectrum of a product of components.
pub fn convolve(s1: &SpectrumPolynomial, s2: &SpectrumPolynomial) -> SpectrumPolynomial {
    let mut out = SpectrumPolynomial::zero();
    for (a1, m1) in s1.terms() {
        for (a2, m2) in s2.terms() {
            out.add_term(twisted_sum(a1, a2), m1 * m2);
        }
    }
    out
}

/// Spectrum data for one irreducible component of the normal cone over the
/// origin, i.e. one compact facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub invariants: FacetInvariants,
    /// Codimension of the component; zero for facet components.
    pub n_lambda: u32,
    pub nonreduced: SpectrumPolynomial,
    pub reduced: SpectrumPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSpectrum {
    pub components: Vec<ComponentReport>,
    pub note: Option<String>,
}

pub fn spectrum_of_ideal(ideal: &MonomialIdeal) -> Result<IdealSpectrum> {
    let poly = newton_polyhedron(ideal);
    let mut components = Vec::new();
    for facet in poly.compact_facets() {
        let invariants = facet_invariants(ideal, &poly, &facet)?;
        let nonreduced = facet_spectrum(invariants.c, invariants.e);
        let reduced = reduce(&nonreduced, 0);
        components.push(ComponentReport {
            invariants,
            n_lambda: 0,
            nonreduced,
            reduced,
        });
    }
    let note = components.is_empty().then(|| {
        "no compact facet: the subscheme is not supported at the origin alone, so the normal cone has no component over 0".to_string()
    });
    Ok(IdealSpectrum { components, note })
}

/// `𝔞 + (x_{n+1})` in one more variable.
pub fn ambient_extension(ideal: &MonomialIdeal) -> MonomialIdeal {
    let n = ideal.n();
    let mut gens: Vec<ExponentVector> = ideal.generators().iter().map(|g| g.extended(0)).collect();
    gens.push(ExponentVector::unit(n + 1, n));
    MonomialIdeal::new(n + 1, gens).expect("extension of a valid ideal is valid")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientCheck {
    pub passed: bool,
    pub depth: usize,
    pub diagnostics: Vec<String>,
}

/// Compares the component spectra of `𝔞` with those of its `depth`-fold
/// ambient extension. A compact facet with form `L` must reappear with form
/// `L + x_{n+1} + ... + x_{n+depth}` and the same nonreduced spectrum; also
/// checks `Ŝp ⊛ t = Ŝp` for every component.
pub fn check_ambient_independence_iterated(ideal: &MonomialIdeal, depth: usize) -> Result<AmbientCheck> {
    let base = spectrum_of_ideal(ideal)?;
    let mut diagnostics = Vec::new();
    if base.components.is_empty() {
        diagnostics.push("ideal has no compact facet".to_string());
    }
    for comp in &base.components {
        let unit = convolve(&comp.nonreduced, &SpectrumPolynomial::t());
        if unit != comp.nonreduced {
            diagnostics.push(format!(
                "unit law fails for facet {}: {} ⊛ t = {}",
                comp.invariants.form, comp.nonreduced, unit
            ));
        }
    }
    let mut extended = ideal.clone();
    for level in 1..=depth {
        extended = ambient_extension(&extended);
        let ext = spectrum_of_ideal(&extended)?;
        if ext.components.len() != base.components.len() {
            diagnostics.push(format!(
                "extension {level}: {} components, expected {}",
                ext.components.len(),
                base.components.len()
            ));
        }
        for comp in &base.components {
            let mut coeffs = comp.invariants.form.coeffs().to_vec();
            coeffs.extend(std::iter::repeat_n(Rational::one(), level));
            let matched = ext
                .components
                .iter()
                .find(|e| e.invariants.form.coeffs() == coeffs.as_slice());
            match matched {
                None => diagnostics.push(format!(
                    "extension {level}: no component over facet {}",
                    comp.invariants.form
                )),
                Some(e) if e.nonreduced != comp.nonreduced => diagnostics.push(format!(
                    "extension {level}: facet {} has spectrum {} (c={}, e={}), expected {} (c={}, e={})",
                    comp.invariants.form,
                    e.nonreduced,
                    e.invariants.c,
                    e.invariants.e,
                    comp.nonreduced,
                    comp.invariants.c,
                    comp.invariants.e
                )),
                Some(_) => {}
            }
        }
    }
    Ok(AmbientCheck {
        passed: diagnostics.is_empty(),
        depth,
        diagnostics,
    })
}

pub fn check_ambient_independence(ideal: &MonomialIdeal) -> Result<AmbientCheck> {
    check_ambient_independence_iterated(ideal, 1)
}

/// Exponent range and sign checks for nonreduced facet spectra: exponents in
/// `(0, 1]`, multiplicities nonnegative, total mass `c·e`.
pub fn check_component_shape(comp: &ComponentReport) -> bool {
    let one = Rational::one();
    comp.nonreduced
        .terms()
        .all(|(a, m)| a.is_positive() && *a <= one && m >= 0)
        && comp.nonreduced.total_multiplicity() == (comp.invariants.c * comp.invariants.e) as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn sp(terms: &[(i64, i64, i64)]) -> SpectrumPolynomial {
        SpectrumPolynomial::from_terms(terms.iter().map(|&(p, q, m)| (rat(p, q), m))).unwrap()
    }

    fn ideal(rows: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    #[test]
    fn facet_spectra() {
        assert_eq!(
            facet_spectrum(6, 1),
            sp(&[(1, 6, 1), (1, 3, 1), (1, 2, 1), (2, 3, 1), (5, 6, 1), (1, 1, 1)])
        );
        assert_eq!(facet_spectrum(1, 1), SpectrumPolynomial::t());
        assert_eq!(facet_spectrum(2, 2), sp(&[(1, 2, 2), (1, 1, 2)]));
    }

    #[test]
    fn reduction() {
        let r = reduce(&facet_spectrum(6, 1), 0);
        assert_eq!(r, sp(&[(1, 6, 1), (1, 3, 1), (1, 2, 1), (2, 3, 1), (5, 6, 1)]));
        assert!(reduce(&SpectrumPolynomial::t(), 0).is_zero());
        assert_eq!(reduce(&sp(&[(1, 2, 1)]), 1), sp(&[(1, 2, 1), (2, 1, 1)]));
    }

    #[test]
    fn convolution_examples() {
        let a = sp(&[(1, 2, 1), (1, 1, 1)]);
        let b = sp(&[(1, 3, 1), (2, 3, 1), (1, 1, 1)]);
        assert_eq!(convolve(&a, &b), facet_spectrum(6, 1));
        assert_eq!(convolve(&a, &a), facet_spectrum(2, 2));
        assert_eq!(convolve(&b, &SpectrumPolynomial::t()), b);
    }

    #[test]
    fn twisted_sum_cases() {
        assert_eq!(twisted_sum(&rat(1, 2), &rat(1, 3)), rat(5, 6));
        assert_eq!(twisted_sum(&rat(1, 2), &rat(1, 2)), int(1));
        assert_eq!(twisted_sum(&rat(1, 2), &int(1)), rat(1, 2));
        assert_eq!(twisted_sum(&rat(5, 6), &rat(2, 3)), rat(1, 2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(facet_spectrum(2, 2).to_string(), "2t^1/2 + 2t");
        assert_eq!(reduce(&sp(&[(1, 2, 1)]), 1).to_string(), "t^1/2 + t^2");
        assert_eq!(SpectrumPolynomial::zero().to_string(), "0");
        assert_eq!(reduce(&sp(&[(1, 2, 1)]), 0).to_string(), "t^1/2 - t");
    }

    #[test]
    fn nonpositive_exponent_rejected() {
        assert!(SpectrumPolynomial::from_terms([(int(0), 1)]).is_err());
    }

    #[test]
    fn cusp_spectrum() {
        let s = spectrum_of_ideal(&ideal(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(s.components.len(), 1);
        let c = &s.components[0];
        assert_eq!((c.invariants.c, c.invariants.e), (6, 1));
        assert_eq!(c.nonreduced, facet_spectrum(6, 1));
        assert!(check_component_shape(c));
    }

    #[test]
    fn equal_exponent_diagonal() {
        let s = spectrum_of_ideal(&ideal(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]])).unwrap();
        assert_eq!((s.components[0].invariants.c, s.components[0].invariants.e), (3, 9));
    }

    #[test]
    fn two_components() {
        let s = spectrum_of_ideal(&ideal(&[&[3, 0], &[1, 1], &[0, 3]])).unwrap();
        assert_eq!(s.components.len(), 2);
        for c in &s.components {
            assert_eq!((c.invariants.c, c.invariants.e), (3, 1));
        }
    }

    #[test]
    fn no_compact_facet() {
        let s = spectrum_of_ideal(&ideal(&[&[1, 0]])).unwrap();
        assert!(s.components.is_empty());
        assert!(s.note.is_some());
    }

    #[test]
    fn extensions() {
        assert_eq!(
            ambient_extension(&ideal(&[&[2, 0], &[0, 3]])),
            ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]])
        );
        assert_eq!(ambient_extension(&ideal(&[&[1]])), ideal(&[&[1, 0], &[0, 1]]));
        assert_eq!(
            ambient_extension(&ambient_extension(&ideal(&[&[2, 0], &[0, 3]]))),
            ideal(&[&[2, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn ambient_independence() {
        for rows in [&[&[2i64, 0][..], &[0, 3]][..], &[&[5]], &[&[1, 0], &[0, 1]]] {
            let check = check_ambient_independence_iterated(&ideal(rows), 2).unwrap();
            assert!(check.passed, "{:?}", check.diagnostics);
        }
        let s = spectrum_of_ideal(&ideal(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.components[0].nonreduced, SpectrumPolynomial::t());
    }
}
