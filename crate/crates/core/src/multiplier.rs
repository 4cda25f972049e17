//! Monomial multiplier ideals and jumping coefficients.
//!
//! By Howald's criterion `x^ν ∈ J(α·𝔞)` exactly when `ν + 1` lies in the
//! interior-shifted dilate `(α + ε)P`, i.e. when `v(ν + 1) > α`. Jumping
//! coefficients are the values `v(ν)` for `ν` with all coordinates positive.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::grid::GridPoints;
use crate::polyhedron::{ceil_div_i128, ExponentVector, LinearForm, NewtonPolyhedron};
use crate::rational::{self, Rational};

fn shifted_weight(poly: &NewtonPolyhedron, nu: &[i64]) -> Rational {
    let shifted: Vec<i64> = nu.iter().map(|x| x + 1).collect();
    let (num, den) = poly.weight_scaled(&shifted);
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveAlpha(rational::format(alpha)))
    }
}

pub fn in_multiplier_ideal(poly: &NewtonPolyhedron, nu: &ExponentVector, alpha: &Rational) -> Result<bool> {
    check_alpha(alpha)?;
    if nu.dim() != poly.n() {
        return Err(Error::DimensionMismatch {
            expected: poly.n(),
            found: nu.dim(),
        });
    }
    if !nu.is_nonnegative() {
        return Err(Error::NegativeCoordinate(nu.to_string()));
    }
    Ok(shifted_weight(poly, nu.coords()) > *alpha)
}

/// Minimal monomial generators of `J(α·𝔞)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierIdealBasis {
    pub alpha: Rational,
    pub minimal_generators: Vec<ExponentVector>,
    /// Every minimal generator has all coordinates at most this bound.
    pub guarantee_box: i64,
}

/// Smallest positive coefficient over all level-one facets.
fn min_positive_coefficient(poly: &NewtonPolyhedron) -> Rational {
    poly.level_one_facets()
        .iter()
        .flat_map(|f| f.coeffs().iter())
        .filter(|c| c.is_positive())
        .min()
        .cloned()
        .expect("level-one facets have a positive coefficient")
}

/// `J(α·𝔞)` by its minimal generators.
///
/// If `ν` is a minimal generator with `ν_i > 0`, some facet form `L` has
/// `L(ν + 1 - e_i) <= α < L(ν + 1)`, so `L_i > 0` and `L_i·ν_i <= α`. The
/// search box `[0, ⌊α / min L_i⌋]^n` therefore contains every generator.
pub fn multiplier_ideal(poly: &NewtonPolyhedron, alpha: &Rational) -> Result<MultiplierIdealBasis> {
    check_alpha(alpha)?;
    let bound = rational::floor_to_i64(&(alpha / min_positive_coefficient(poly)))?;
    let n = poly.n();
    let member = |nu: &[i64]| shifted_weight(poly, nu) > *alpha;
    let mut minimal_generators = Vec::new();
    for nu in GridPoints::cube(n, 0, bound) {
        if !member(&nu) {
            continue;
        }
        let is_minimal = (0..n).all(|i| {
            if nu[i] == 0 {
                return true;
            }
            let mut lower = nu.clone();
            lower[i] -= 1;
            !member(&lower)
        });
        if is_minimal {
            minimal_generators.push(ExponentVector::new(nu));
        }
    }
    minimal_generators.sort();
    Ok(MultiplierIdealBasis {
        alpha: alpha.clone(),
        minimal_generators,
        guarantee_box: bound,
    })
}

impl MultiplierIdealBasis {
    pub fn contains(&self, nu: &ExponentVector) -> bool {
        self.minimal_generators.iter().any(|g| nu.dominates(g))
    }

    pub fn is_unit(&self) -> bool {
        self.minimal_generators
            .iter()
            .any(|g| g.coords().iter().all(|&x| x == 0))
    }
}

/// Monomial basis of `J((α-ε)·𝔞) / J(α·𝔞)` inside `[0, box]^n`.
pub fn graded_piece(poly: &NewtonPolyhedron, alpha: &Rational, bound: i64) -> Result<Vec<ExponentVector>> {
    check_alpha(alpha)?;
    Ok(GridPoints::cube(poly.n(), 0, bound)
        .filter(|nu| shifted_weight(poly, nu) == *alpha)
        .map(ExponentVector::new)
        .collect())
}

/// Log-canonical threshold `v(1)`.
pub fn lct(poly: &NewtonPolyhedron) -> Rational {
    poly.weight_int(&ExponentVector::ones(poly.n()))
        .expect("the all-ones vector is a valid point")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingCoefficient {
    pub value: Rational,
    /// A point `ν` with positive coordinates and `v(ν) = value`.
    pub witness: ExponentVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingReport {
    pub bound: Rational,
    pub coefficients: Vec<JumpingCoefficient>,
    pub note: Option<String>,
}

impl JumpingReport {
    pub fn values(&self) -> Vec<Rational> {
        self.coefficients.iter().map(|c| c.value.clone()).collect()
    }
}

/// Finds `ν` with all coordinates at least `lower`, `c·L(ν) = target` for
/// the level-one facet `facet` and every other facet form at least
/// `target / c` at `ν`; that is, a lattice point of the cone over the facet
/// with `v(ν) = L(ν) = target / c`.
///
/// Coordinates with a positive coefficient in `L` are bounded by `L` itself.
/// A coordinate `i` with `L_i = 0` can be lowered to `⌈t / L′_i⌉` over the
/// other forms `L′` with `L′_i > 0` without changing `L(ν)` and without
/// pushing any other form below `t`, so that bound loses no witness.
pub(crate) fn cone_point_with_value(
    poly: &NewtonPolyhedron,
    facet: usize,
    target: i64,
    lower: i64,
) -> Option<ExponentVector> {
    let forms = poly.level_one_facets();
    let form = &forms[facet];
    let c = form.denominator() as i128;
    let target = target as i128;
    let n = poly.n();
    let cleared = form.cleared();
    let mut hi = vec![0i64; n];
    for i in 0..n {
        if cleared[i] > 0 {
            hi[i] = (target / cleared[i] as i128) as i64;
        } else {
            let mut m = lower as i128;
            for other in forms {
                let a = other.cleared()[i] as i128;
                if a > 0 {
                    // ⌈(target/c) / (a/c′)⌉ = ⌈target·c′ / (c·a)⌉
                    let num = target * other.denominator() as i128;
                    let den = c * a;
                    m = m.max(ceil_div_i128(num, den));
                }
            }
            hi[i] = m as i64;
        }
        if hi[i] < lower {
            return None;
        }
    }
    let search = ConeSearch {
        forms,
        facet,
        c,
        target,
        lower,
        hi,
        rest_floor: (0..=n)
            .map(|i| cleared[i..].iter().map(|&a| a as i128 * lower as i128).sum())
            .collect(),
    };
    let mut nu = vec![lower; n];
    search.run(0, 0, &mut nu).then(|| ExponentVector::new(nu))
}

struct ConeSearch<'a> {
    forms: &'a [LinearForm],
    facet: usize,
    c: i128,
    target: i128,
    lower: i64,
    hi: Vec<i64>,
    /// Smallest possible contribution of coordinates `i..` to `c·L`.
    rest_floor: Vec<i128>,
}

impl ConeSearch<'_> {
    fn accept(&self, nu: &[i64]) -> bool {
        self.forms.iter().enumerate().all(|(j, other)| {
            j == self.facet || other.eval_scaled(nu) * self.c >= self.target * other.denominator() as i128
        })
    }

    fn run(&self, i: usize, partial: i128, nu: &mut [i64]) -> bool {
        let n = nu.len();
        if i == n {
            return partial == self.target && self.accept(nu);
        }
        let a = self.forms[self.facet].cleared()[i] as i128;
        if i == n - 1 && a > 0 {
            let rest = self.target - partial;
            if rest % a != 0 {
                return false;
            }
            let x = rest / a;
            if x < self.lower as i128 || x > self.hi[i] as i128 {
                return false;
            }
            nu[i] = x as i64;
            return self.accept(nu);
        }
        for x in self.lower..=self.hi[i] {
            let p = partial + a * x as i128;
            if p + self.rest_floor[i + 1] > self.target {
                break;
            }
            nu[i] = x;
            if self.run(i + 1, p, nu) {
                return true;
            }
        }
        false
    }
}

/// Jumping coefficients in `(0, bound]` with witnesses.
///
/// Every value `v(ν)` equals some `L_σ(ν) ∈ (1/c_σ)Z`, so the candidates are
/// `k / c_σ` for each level-one facet, tested with a bounded cone search.
pub fn jumping_coefficients(poly: &NewtonPolyhedron, bound: &Rational) -> Result<JumpingReport> {
    let threshold = lct(poly);
    if *bound < threshold {
        return Ok(JumpingReport {
            bound: bound.clone(),
            coefficients: Vec::new(),
            note: Some(format!(
                "bound {} is below the log-canonical threshold {}",
                rational::format(bound),
                rational::format(&threshold)
            )),
        });
    }
    let mut found: BTreeMap<Rational, ExponentVector> = BTreeMap::new();
    for (j, form) in poly.level_one_facets().iter().enumerate() {
        let c = form.denominator();
        let top = rational::floor_to_i64(&(bound * rational::int(c)))?;
        let start = rational::ceil_to_i64(&(&threshold * rational::int(c)))?.max(1);
        for k in start..=top {
            let value = rational::rat(k, c);
            if found.contains_key(&value) {
                continue;
            }
            if let Some(w) = cone_point_with_value(poly, j, k, 1) {
                found.insert(value, w);
            }
        }
    }
    Ok(JumpingReport {
        bound: bound.clone(),
        coefficients: found
            .into_iter()
            .map(|(value, witness)| JumpingCoefficient { value, witness })
            .collect(),
        note: None,
    })
}

/// Default reporting box `⌈B⌉·(Vmax + 1)`.
pub fn default_box(poly: &NewtonPolyhedron, bound: &Rational) -> Result<i64> {
    Ok(rational::ceil_to_i64(bound)?.max(1) * (poly.max_vertex_coordinate() + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::{newton_polyhedron, MonomialIdeal};
    use crate::rational::{int, rat};

    fn poly(rows: &[&[i64]]) -> NewtonPolyhedron {
        newton_polyhedron(&MonomialIdeal::from_rows(rows).unwrap())
    }

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn membership_is_strict() {
        let p = poly(&[&[2, 0], &[0, 3]]);
        assert!(!in_multiplier_ideal(&p, &ev(&[0, 0]), &rat(5, 6)).unwrap());
        assert!(in_multiplier_ideal(&p, &ev(&[0, 0]), &rat(1, 2)).unwrap());
        assert!(in_multiplier_ideal(&p, &ev(&[20, 0]), &int(1)).unwrap());
        assert!(matches!(
            in_multiplier_ideal(&p, &ev(&[0, 0]), &int(0)),
            Err(Error::NonPositiveAlpha(_))
        ));
    }

    #[test]
    fn multiplier_ideals_of_the_cusp() {
        let p = poly(&[&[2, 0], &[0, 3]]);
        let j = multiplier_ideal(&p, &rat(5, 6)).unwrap();
        assert_eq!(j.minimal_generators, vec![ev(&[0, 1]), ev(&[1, 0])]);
        let j = multiplier_ideal(&p, &rat(1, 2)).unwrap();
        assert_eq!(j.minimal_generators, vec![ev(&[0, 0])]);
        assert!(j.is_unit());
        let j = multiplier_ideal(&p, &int(1)).unwrap();
        assert_eq!(j.minimal_generators, vec![ev(&[0, 1]), ev(&[1, 0])]);
        // J(2·𝔞) = 𝔞·J(𝔞) = (x³, x²y, xy³, y⁴)
        let j = multiplier_ideal(&p, &int(2)).unwrap();
        assert_eq!(
            j.minimal_generators,
            vec![ev(&[0, 4]), ev(&[1, 3]), ev(&[2, 1]), ev(&[3, 0])]
        );
    }

    #[test]
    fn below_lct_is_unit() {
        let p = poly(&[&[3, 0, 0], &[0, 4, 0], &[1, 1, 1]]);
        let t = lct(&p);
        let j = multiplier_ideal(&p, &(t.clone() * rat(9, 10))).unwrap();
        assert!(j.is_unit());
        assert!(!multiplier_ideal(&p, &t).unwrap().is_unit());
    }

    #[test]
    fn graded_pieces() {
        let p = poly(&[&[2, 0], &[0, 3]]);
        assert_eq!(graded_piece(&p, &rat(5, 6), 4).unwrap(), vec![ev(&[0, 0])]);
        assert!(graded_piece(&p, &int(1), 4).unwrap().is_empty());
        let line = poly(&[&[1, 0]]);
        let piece = graded_piece(&line, &int(1), 3).unwrap();
        assert_eq!(piece, (0..=3).map(|k| ev(&[0, k])).collect::<Vec<_>>());
    }

    #[test]
    fn cusp_jumping_coefficients() {
        let p = poly(&[&[2, 0], &[0, 3]]);
        let report = jumping_coefficients(&p, &int(2)).unwrap();
        let expected: Vec<Rational> = [(5, 6), (7, 6), (4, 3), (3, 2), (5, 3), (11, 6), (2, 1)]
            .iter()
            .map(|&(a, b)| rat(a, b))
            .collect();
        assert_eq!(report.values(), expected);
        for c in &report.coefficients {
            assert!(c.witness.is_positive());
            assert_eq!(p.weight_int(&c.witness).unwrap(), c.value);
        }
        for v in report.values().iter().filter(|v| **v <= int(1)) {
            assert!(report.values().contains(&(v + int(1))));
        }
    }

    #[test]
    fn line_jumping_coefficients() {
        let p = poly(&[&[1, 0]]);
        let report = jumping_coefficients(&p, &int(3)).unwrap();
        assert_eq!(report.values(), vec![int(1), int(2), int(3)]);
    }

    #[test]
    fn bound_below_lct() {
        let p = poly(&[&[2, 0], &[0, 3]]);
        let report = jumping_coefficients(&p, &rat(1, 2)).unwrap();
        assert!(report.coefficients.is_empty());
        assert!(report.note.is_some());
    }

    #[test]
    fn noncompact_facet_witnesses() {
        // (x²y, xy³): the facet x = 1 is noncompact; its values need y large.
        let p = poly(&[&[2, 1], &[1, 3]]);
        let report = jumping_coefficients(&p, &int(3)).unwrap();
        let brute: std::collections::BTreeSet<Rational> = GridPoints::cube(2, 1, 30)
            .map(|nu| p.weight_int(&ExponentVector::new(nu)).unwrap())
            .filter(|w| *w <= int(3))
            .collect();
        assert_eq!(report.values(), brute.into_iter().collect::<Vec<_>>());
    }

    #[test]
    fn lct_examples() {
        assert_eq!(lct(&poly(&[&[2, 0], &[0, 3]])), rat(5, 6));
        assert_eq!(lct(&poly(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])), int(3));
        assert_eq!(lct(&poly(&[&[4]])), rat(1, 4));
    }
}
