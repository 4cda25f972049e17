//! Closed forms for diagonal ideals `(x_1^{m_1}, ..., x_n^{m_n})` and the
//! Fermat hypersurfaces `Σ x_i^{m_i}`, with the consistency checks that tie
//! them to the combinatorial side.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multiplier::{cone_point_with_value, jumping_coefficients};
use crate::polyhedron::{newton_polyhedron, ExponentVector, MonomialIdeal, NewtonPolyhedron};
use crate::rational::{self, int, rat, Rational};
use crate::spectrum::{spectrum_of_ideal, SpectrumPolynomial};

/// Exponents `m_i` of `f_i = x_i^{m_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagonalData {
    m: Vec<u64>,
}

impl DiagonalData {
    pub fn new(m: Vec<u64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if m.iter().any(|&x| x < 1) {
            return Err(Error::InvalidExponents { min: 1, found: m });
        }
        Ok(Self { m })
    }

    /// Same as [`DiagonalData::new`] but with every `m_i ≥ 2`, as needed for
    /// an isolated Fermat singularity.
    pub fn fermat(m: Vec<u64>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if m.iter().any(|&x| x < 2) {
            return Err(Error::InvalidExponents { min: 2, found: m });
        }
        Ok(Self { m })
    }

    pub fn m(&self) -> &[u64] {
        &self.m
    }

    pub fn n(&self) -> usize {
        self.m.len()
    }

    pub fn is_fermat(&self) -> bool {
        self.m.iter().all(|&x| x >= 2)
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let n = self.n();
        let gens = self
            .m
            .iter()
            .enumerate()
            .map(|(i, &mi)| ExponentVector::unit(n, i).scale(mi as i64))
            .collect();
        MonomialIdeal::new(n, gens).expect("diagonal generators are valid")
    }

    /// `(lcm(m), ∏ m_i / lcm(m))`.
    pub fn expected_invariants(&self) -> (u64, u64) {
        let l = self.m.iter().fold(1u64, |acc, &x| num_integer::lcm(acc, x));
        (l, self.m.iter().product::<u64>() / l)
    }

    fn values(&self, top: impl Fn(u64) -> u64) -> impl Iterator<Item = Rational> + '_ {
        let ranges: Vec<Vec<(u64, u64)>> = self.m.iter().map(|&mi| (1..=top(mi)).map(|a| (a, mi)).collect()).collect();
        ranges.into_iter().multi_cartesian_product().map(|tuple| {
            tuple
                .into_iter()
                .fold(Rational::zero(), |acc, (a, mi)| acc + rat(a as i64, mi as i64))
        })
    }
}

impl fmt::Display for DiagonalData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.m.iter().join(","))
    }
}

/// Shorthand for the diagonal ideal of `m`.
pub fn diagonal_ideal(m: &[u64]) -> Result<MonomialIdeal> {
    Ok(DiagonalData::new(m.to_vec())?.ideal())
}

/// Sorted set of distinct positive rationals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootSet(BTreeSet<Rational>);

impl RootSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, r: Rational) {
        self.0.insert(r);
    }

    pub fn contains(&self, r: &Rational) -> bool {
        self.0.contains(r)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rational> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_set(&self) -> &BTreeSet<Rational> {
        &self.0
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Elements strictly between 0 and 1.
    pub fn open_unit_part(&self) -> RootSet {
        let one = Rational::one();
        self.0.iter().filter(|r| rational::is_positive(r) && **r < one).cloned().collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rational::format).collect()
    }
}

impl FromIterator<Rational> for RootSet {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_strings().join(", "))
    }
}

/// Roots of `b_f(-s)` for `f = (x_1^{m_1}, ..., x_n^{m_n})`: the distinct
/// values `Σ a_i/m_i` with `1 ≤ a_i ≤ m_i`.
pub fn diagonal_b_roots(data: &DiagonalData) -> RootSet {
    data.values(|mi| mi).collect()
}

/// Roots of the reduced b-function `b_f(-s)/(1 - s)` of the Fermat
/// polynomial: `a_i` ranges over `[1, m_i - 1]`.
pub fn fermat_reduced_b_roots(data: &DiagonalData) -> Result<RootSet> {
    require_fermat(data)?;
    Ok(data.values(|mi| mi - 1).collect())
}

fn require_fermat(data: &DiagonalData) -> Result<()> {
    if data.is_fermat() {
        Ok(())
    } else {
        Err(Error::InvalidExponents {
            min: 2,
            found: data.m.clone(),
        })
    }
}

/// `∏_i Σ_{j=1}^{m_i-1} t^{j/m_i}`, the Steenbrink spectrum of `Σ x_i^{m_i}`.
pub fn fermat_spectrum(data: &DiagonalData) -> Result<SpectrumPolynomial> {
    require_fermat(data)?;
    let mut acc: Vec<(Rational, i64)> = vec![(Rational::zero(), 1)];
    for &mi in &data.m {
        let mut next: std::collections::BTreeMap<Rational, i64> = Default::default();
        for (a, k) in &acc {
            for j in 1..mi {
                *next.entry(a + rat(j as i64, mi as i64)).or_insert(0) += k;
            }
        }
        acc = next.into_iter().collect();
    }
    SpectrumPolynomial::from_terms(acc)
}

/// Checks `(t - t^{1/m}) = (t^{1/m} - 1)·Σ_{j=1}^{m-1} t^{j/m}` for each factor,
/// i.e. that the expanded form agrees with the quotient form of the product.
pub fn fermat_quotient_identity(data: &DiagonalData) -> Result<bool> {
    require_fermat(data)?;
    for &mi in &data.m {
        let step = rat(1, mi as i64);
        let mut lhs: std::collections::BTreeMap<Rational, i64> = Default::default();
        for j in 1..mi {
            let e = rat(j as i64, mi as i64);
            *lhs.entry(&e + &step).or_insert(0) += 1;
            *lhs.entry(e).or_insert(0) -= 1;
        }
        lhs.retain(|_, v| *v != 0);
        let mut rhs = std::collections::BTreeMap::new();
        rhs.insert(Rational::one(), 1);
        rhs.insert(step.clone(), -1);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `JC(Y, D) ∩ (0, bound]` for the Fermat divisor `D`: the `(0,1]` part
/// `{Σ a_i/m_i ≤ 1 : a_i ≥ 1} ∪ {1}` extended by nonnegative integer shifts.
pub fn fermat_jumping_coefficients(data: &DiagonalData, bound: &Rational) -> Result<RootSet> {
    require_fermat(data)?;
    let one = Rational::one();
    let lct = data
        .m
        .iter()
        .fold(Rational::zero(), |acc, &mi| acc + rat(1, mi as i64))
        .min(one.clone());
    if *bound < lct {
        return Err(Error::NonPositiveAlpha(format!(
            "bound {} is below the log-canonical threshold {}",
            rational::format(bound),
            rational::format(&lct)
        )));
    }
    let mut base: BTreeSet<Rational> = data.values(|mi| mi).filter(|v| *v <= one).collect();
    base.insert(one);
    let top = rational::floor_to_i64(bound)?;
    let mut out = RootSet::new();
    for b in &base {
        for shift in 0..=top {
            let v = b + int(shift);
            if v <= *bound {
                out.insert(v);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// Elements of the larger side missing from the smaller one.
    pub strict_witnesses: Vec<Rational>,
}

impl Verdict {
    fn equality(a: &RootSet, b: &RootSet) -> Self {
        Self {
            holds: a == b,
            strict_witnesses: a.as_set().symmetric_difference(b.as_set()).cloned().collect(),
        }
    }

    fn inclusion(small: &RootSet, large: &RootSet) -> Self {
        Self {
            holds: small.is_subset(large),
            strict_witnesses: large.as_set().difference(small.as_set()).cloned().collect(),
        }
    }

    pub fn is_strict(&self) -> bool {
        self.holds && !self.strict_witnesses.is_empty()
    }
}

/// The four sets of the jumping-coefficient / spectrum comparison square,
/// all restricted to `(0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub data: DiagonalData,
    pub jc_divisor: RootSet,
    pub jc_ideal: RootSet,
    pub exponents_divisor: RootSet,
    pub exponents_ideal: RootSet,
    /// `JC(Y,D) = JC(Y,X)`.
    pub v1: Verdict,
    /// `JC(Y,D) = E(D,0)`.
    pub v2: Verdict,
    /// `JC(Y,X) ⊆ ∪ E(X,Λ)`.
    pub v3: Verdict,
    /// `E(D,0) ⊆ ∪ E(X,Λ)`.
    pub v4: Verdict,
}

impl DiagramReport {
    pub fn all_hold(&self) -> bool {
        self.v1.holds && self.v2.holds && self.v3.holds && self.v4.holds
    }
}

pub fn comparison_diagram(data: &DiagonalData) -> Result<DiagramReport> {
    require_fermat(data)?;
    let one = Rational::one();
    let jc_divisor = fermat_jumping_coefficients(data, &one)?.open_unit_part();
    let ideal = data.ideal();
    let poly = newton_polyhedron(&ideal);
    let jc_ideal: RootSet = jumping_coefficients(&poly, &one)?
        .values()
        .into_iter()
        .collect::<RootSet>()
        .open_unit_part();
    let exponents_divisor: RootSet = fermat_spectrum(data)?.exponents().into_iter().collect::<RootSet>().open_unit_part();
    let exponents_ideal: RootSet = spectrum_of_ideal(&ideal)?
        .components
        .iter()
        .flat_map(|c| c.nonreduced.exponents())
        .collect::<RootSet>()
        .open_unit_part();
    Ok(DiagramReport {
        data: data.clone(),
        v1: Verdict::equality(&jc_divisor, &jc_ideal),
        v2: Verdict::equality(&jc_divisor, &exponents_divisor),
        v3: Verdict::inclusion(&jc_ideal, &exponents_ideal),
        v4: Verdict::inclusion(&exponents_divisor, &exponents_ideal),
        jc_divisor,
        jc_ideal,
        exponents_divisor,
        exponents_ideal,
    })
}

/// Outcome for one spectral exponent `α` of the diagonal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentCheck {
    pub alpha: Rational,
    /// Smallest `|i|` (ties to the nonnegative shift) with `α + i` a b-root.
    pub root_shift: Option<i64>,
    /// Minimal `j₀` with `α + j` a jumping coefficient for all `j ∈ [j₀, B]`;
    /// only computed for `α < 1`.
    pub j0: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub data: DiagonalData,
    /// The bound actually used, after at most one doubling.
    pub bound: Rational,
    pub escalated: bool,
    pub checks: Vec<ExponentCheck>,
    pub failures: Vec<String>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Default search bound `n + 2`.
pub fn default_consistency_bound(data: &DiagonalData) -> Rational {
    int(data.n() as i64 + 2)
}

/// For every exponent `α` of the diagonal ideal's spectrum, looks for an
/// integer shift into the b-roots and for the threshold `j₀ ≤ n - 1` past
/// which `α + j` is always a jumping coefficient. A failure is retried once
/// with the bound doubled.
pub fn theorem3_consistency(data: &DiagonalData, bound: &Rational) -> Result<ConsistencyReport> {
    if !rational::is_positive(bound) {
        return Err(Error::NonPositiveAlpha(rational::format(bound)));
    }
    let first = consistency_at(data, bound)?;
    if first.passed() {
        return Ok(first);
    }
    let mut second = consistency_at(data, &(bound * int(2)))?;
    second.escalated = true;
    if !second.passed() {
        second.failures.extend(first.failures.into_iter().map(|f| format!("at bound {}: {f}", rational::format(bound))));
    }
    Ok(second)
}

fn consistency_at(data: &DiagonalData, bound: &Rational) -> Result<ConsistencyReport> {
    let n = data.n() as i64;
    let roots = diagonal_b_roots(data);
    let ideal = data.ideal();
    let poly = newton_polyhedron(&ideal);
    let top = rational::floor_to_i64(bound)?;
    let range = rational::ceil_to_i64(bound)?;
    let jc: BTreeSet<Rational> = jumping_coefficients(&poly, &(bound + Rational::one()))?
        .values()
        .into_iter()
        .collect();
    let exponents: BTreeSet<Rational> = spectrum_of_ideal(&ideal)?
        .components
        .iter()
        .flat_map(|c| c.nonreduced.exponents())
        .collect();
    let one = Rational::one();
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for alpha in exponents {
        let root_shift = (0..=range)
            .flat_map(|d| [d, -d])
            .find(|&i| roots.contains(&(&alpha + int(i))));
        if root_shift.is_none() {
            failures.push(format!("no shift |i| ≤ {range} puts {} into the b-roots", rational::format(&alpha)));
        }
        let mut j0 = None;
        if alpha < one {
            let mut j = top;
            while j >= 0 && jc.contains(&(&alpha + int(j))) {
                j0 = Some(j);
                j -= 1;
            }
            match j0 {
                None => failures.push(format!(
                    "{} + {top} is not a jumping coefficient",
                    rational::format(&alpha)
                )),
                Some(j) if j > n - 1 => failures.push(format!(
                    "j0 = {j} exceeds n - 1 = {} for {}",
                    n - 1,
                    rational::format(&alpha)
                )),
                Some(_) => {}
            }
        }
        checks.push(ExponentCheck { alpha, root_shift, j0 });
    }
    Ok(ConsistencyReport {
        data: data.clone(),
        bound: bound.clone(),
        escalated: false,
        checks,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueWitness {
    /// Class `k / c` with `k ∈ [1, c]`.
    pub class: Rational,
    pub witness: Option<(ExponentVector, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueReport {
    pub facet: usize,
    pub c: u64,
    pub classes: Vec<ResidueWitness>,
}

impl ResidueReport {
    pub fn passed(&self) -> bool {
        self.classes.iter().all(|w| w.witness.is_some())
    }

    pub fn unwitnessed(&self) -> Vec<Rational> {
        self.classes
            .iter()
            .filter(|w| w.witness.is_none())
            .map(|w| w.class.clone())
            .collect()
    }
}

/// For each class `k/c_σ` modulo `Z`, the smallest value `L_σ(ν) ≤ n` in that
/// class over nonzero lattice points `ν ≥ 0` of the cone over `σ`.
pub fn residue_class_minimum_check(poly: &NewtonPolyhedron, facet: usize) -> Result<ResidueReport> {
    let forms = poly.level_one_facets();
    if facet >= forms.len() {
        return Err(Error::Inconsistent(format!(
            "facet index {facet} out of range ({} level-one facets)",
            forms.len()
        )));
    }
    let c = forms[facet].denominator();
    let limit = poly.n() as i64 * c;
    let classes = (1..=c)
        .map(|k| {
            let witness = (0..)
                .map(|j| k + j * c)
                .take_while(|&t| t <= limit)
                .find_map(|t| cone_point_with_value(poly, facet, t, 0).map(|nu| (nu, rat(t, c))));
            ResidueWitness {
                class: rat(k, c),
                witness,
            }
        })
        .collect();
    Ok(ResidueReport { facet, c: c as u64, classes })
}
