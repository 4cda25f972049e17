//! Newton polyhedra of monomial ideals.
//!
//! A monomial ideal is stored by its minimal generator exponents. Its Newton
//! polyhedron `P = conv(generators) + R^n_{>=0}` is kept in both
//! representations: the vertex set, and the facet inequalities. Facets come in
//! two kinds. Level-one facets are supported by `L(x) = 1` for a linear form
//! `L` with nonnegative rational coefficients. Coordinate facets are supported
//! by `x_i = 0` and carry no linear form at level one.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::{self, Rational};

/// An exponent vector `ν`, the exponent of the monomial `x^ν`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn ones(n: usize) -> Self {
        ExponentVector(vec![1; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x > 0)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    /// Appends one coordinate.
    pub fn extended(&self, last: i64) -> ExponentVector {
        let mut v = self.0.clone();
        v.push(last);
        ExponentVector(v)
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|&x| rational::int(x)).collect()
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(v: Vec<i64>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(", "))
    }
}

/// A monomial ideal given by its minimal generators, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Validates the generators and keeps only the componentwise-minimal ones.
    pub fn new(n: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.dim() != n {
                return Err(Error::RaggedGenerator {
                    index,
                    expected: n,
                    found: g.dim(),
                });
            }
            if let Some(&value) = g.coords().iter().find(|&&x| x < 0) {
                return Err(Error::NegativeExponent { index, value });
            }
        }
        let mut sorted: Vec<ExponentVector> = generators;
        sorted.sort();
        sorted.dedup();
        let minimal: Vec<ExponentVector> = sorted
            .iter()
            .filter(|g| !sorted.iter().any(|h| h != *g && g.dominates(h)))
            .cloned()
            .collect();
        if minimal.iter().any(|g| g.coords().iter().all(|&x| x == 0)) {
            return Err(Error::UnitIdeal);
        }
        Ok(MonomialIdeal {
            n,
            generators: minimal,
        })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        Self::new(n, rows.iter().map(|r| ExponentVector::new(r.to_vec())).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// `ν ∈ Γ_𝔞`, i.e. `x^ν` lies in the ideal.
    pub fn contains(&self, nu: &ExponentVector) -> bool {
        self.generators.iter().any(|g| nu.dominates(g))
    }
}

/// Reduces a generator list to its minimal elements.
pub fn minimalize(generators: Vec<ExponentVector>) -> Result<MonomialIdeal> {
    let n = generators.first().map(ExponentVector::dim).ok_or(Error::EmptyGenerators)?;
    MonomialIdeal::new(n, generators)
}

/// A linear form with nonnegative rational coefficients, not identically zero.
///
/// Alongside the reduced coefficients the form keeps `c·L`, the integral
/// multiple with `c` the least common denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rational>,
    cleared: Vec<i64>,
    denom: i64,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroForm);
        }
        if let Some(neg) = coeffs.iter().find(|c| c.is_negative()) {
            return Err(Error::NegativeCoordinate(rational::format(neg)));
        }
        let denom = rational::lcm_of_denominators(&coeffs);
        let cleared = coeffs
            .iter()
            .map(|c| rational::to_i64(&(c * Rational::from_integer(denom.clone())).to_integer()))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearForm {
            coeffs,
            cleared,
            denom: rational::to_i64(&denom)?,
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The integral form `c·L`.
    pub fn cleared(&self) -> &[i64] {
        &self.cleared
    }

    /// Least positive `c` with `c·L` integral.
    pub fn denominator(&self) -> i64 {
        self.denom
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(point)
            .fold(Rational::zero(), |acc, (a, x)| acc + a * x)
    }

    /// `c·L(ν)` for an integer point.
    pub fn eval_scaled(&self, nu: &[i64]) -> i128 {
        self.cleared
            .iter()
            .zip(nu)
            .map(|(&a, &x)| a as i128 * x as i128)
            .sum()
    }

    pub fn eval_int(&self, nu: &ExponentVector) -> Rational {
        Rational::new(
            BigInt::from(self.eval_scaled(nu.coords())),
            BigInt::from(self.denom),
        )
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("{}·x{}", rational::format(c), i + 1))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// One facet inequality in the combined list of a polyhedron: level-one
/// facets first, then coordinate facets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    LevelOne(usize),
    Coordinate(usize),
}

/// A nonempty proper face of a Newton polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRecord {
    /// Indices into the combined constraint list, closed: every constraint
    /// tight on the whole face is listed.
    pub tight_facets: BTreeSet<usize>,
    /// Indices into the polyhedron's vertex list.
    pub vertex_set: Vec<usize>,
    /// Coordinates `i` with the unit ray `e_i` in the face's recession cone.
    pub rays: Vec<usize>,
    pub is_compact: bool,
    pub dim: usize,
    /// For a level-one facet, the index of its linear form.
    pub level_one: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    n: usize,
    generators: Vec<ExponentVector>,
    vertices: Vec<ExponentVector>,
    facets: Vec<LinearForm>,
    coordinate_facets: Vec<usize>,
}

/// Builds the Newton polyhedron by enumerating supporting hyperplanes
/// through `k` generators and `n - k` coordinate rays.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> NewtonPolyhedron {
    let n = ideal.n();
    let gens = ideal.generators();
    let mut forms: BTreeSet<LinearForm> = BTreeSet::new();
    for k in 1..=n.min(gens.len()) {
        for chosen in (0..gens.len()).combinations(k) {
            for rays in (0..n).combinations(n - k) {
                let mut a: Vec<Vec<Rational>> = chosen.iter().map(|&g| gens[g].to_rational()).collect();
                let mut b: Vec<Rational> = vec![rational::int(1); k];
                for &i in &rays {
                    a.push(ExponentVector::unit(n, i).to_rational());
                    b.push(Rational::zero());
                }
                let Some(sol) = linalg::solve_square(&a, &b) else {
                    continue;
                };
                if sol.iter().any(Signed::is_negative) {
                    continue;
                }
                let Ok(form) = LinearForm::new(sol) else {
                    continue;
                };
                let d = form.denominator() as i128;
                if gens.iter().all(|g| form.eval_scaled(g.coords()) >= d) {
                    forms.insert(form);
                }
            }
        }
    }
    let facets: Vec<LinearForm> = forms.into_iter().collect();
    let coordinate_facets: Vec<usize> = (0..n)
        .filter(|&i| gens.iter().any(|g| g.coords()[i] == 0))
        .collect();

    let mut poly = NewtonPolyhedron {
        n,
        generators: gens.to_vec(),
        vertices: Vec::new(),
        facets,
        coordinate_facets,
    };
    poly.vertices = gens
        .iter()
        .filter(|g| {
            let normals: Vec<Vec<Rational>> = (0..poly.constraint_count())
                .filter(|&c| poly.tight_on(c, g))
                .map(|c| poly.normal(c))
                .collect();
            linalg::rank(&normals) == n
        })
        .cloned()
        .collect();
    poly
}

impl NewtonPolyhedron {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn level_one_facets(&self) -> &[LinearForm] {
        &self.facets
    }

    /// Zero-based coordinates `i` for which `{x_i = 0}` meets `P` in a facet.
    pub fn coordinate_facets(&self) -> &[usize] {
        &self.coordinate_facets
    }

    pub fn constraint_count(&self) -> usize {
        self.facets.len() + self.coordinate_facets.len()
    }

    pub fn constraint(&self, index: usize) -> Constraint {
        if index < self.facets.len() {
            Constraint::LevelOne(index)
        } else {
            Constraint::Coordinate(self.coordinate_facets[index - self.facets.len()])
        }
    }

    /// Largest coordinate of any vertex.
    pub fn max_vertex_coordinate(&self) -> i64 {
        self.vertices
            .iter()
            .flat_map(|v| v.coords().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// Least common multiple of all facet denominators `c_σ`.
    pub fn common_denominator(&self) -> i64 {
        self.facets.iter().fold(1, |acc, f| acc.lcm(&f.denominator()))
    }

    fn normal(&self, index: usize) -> Vec<Rational> {
        match self.constraint(index) {
            Constraint::LevelOne(j) => self.facets[j].coeffs().to_vec(),
            Constraint::Coordinate(i) => ExponentVector::unit(self.n, i).to_rational(),
        }
    }

    fn tight_on(&self, index: usize, v: &ExponentVector) -> bool {
        match self.constraint(index) {
            Constraint::LevelOne(j) => {
                let f = &self.facets[j];
                f.eval_scaled(v.coords()) == f.denominator() as i128
            }
            Constraint::Coordinate(i) => v.coords()[i] == 0,
        }
    }

    fn invariant_along(&self, index: usize, ray: usize) -> bool {
        match self.constraint(index) {
            Constraint::LevelOne(j) => self.facets[j].cleared()[ray] == 0,
            Constraint::Coordinate(i) => i != ray,
        }
    }

    /// H-representation membership test.
    pub fn contains(&self, point: &[Rational]) -> bool {
        point.iter().all(|x| !x.is_negative())
            && self.facets.iter().all(|f| f.eval(point) >= rational::int(1))
    }

    /// Membership in the dilate `αP`, for `α > 0`.
    pub fn dilate_contains(&self, point: &[Rational], alpha: &Rational) -> bool {
        let scaled: Vec<Rational> = point.iter().map(|x| x / alpha).collect();
        self.contains(&scaled)
    }

    fn check_point(&self, point: &[Rational]) -> Result<()> {
        if point.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.len(),
            });
        }
        if let Some(x) = point.iter().find(|x| x.is_negative()) {
            return Err(Error::NegativeCoordinate(rational::format(x)));
        }
        Ok(())
    }

    /// `v(ν) = min_σ L_σ(ν)` over the level-one facets.
    pub fn weight(&self, point: &[Rational]) -> Result<Rational> {
        self.check_point(point)?;
        Ok(self
            .facets
            .iter()
            .map(|f| f.eval(point))
            .min()
            .expect("a Newton polyhedron has at least one level-one facet"))
    }

    /// Integer-point version of [`weight`](Self::weight).
    pub fn weight_int(&self, nu: &ExponentVector) -> Result<Rational> {
        if nu.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: nu.dim(),
            });
        }
        if !nu.is_nonnegative() {
            return Err(Error::NegativeCoordinate(nu.to_string()));
        }
        let (num, den) = self.weight_scaled(nu.coords());
        Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The weight of a nonnegative integer point as an unreduced fraction.
    pub(crate) fn weight_scaled(&self, nu: &[i64]) -> (i128, i128) {
        let mut best: Option<(i128, i128)> = None;
        for f in &self.facets {
            let num = f.eval_scaled(nu);
            let den = f.denominator() as i128;
            best = match best {
                Some((bn, bd)) if bn * den <= num * bd => Some((bn, bd)),
                _ => Some((num, den)),
            };
        }
        best.expect("a Newton polyhedron has at least one level-one facet")
    }

    /// Level-one facets whose form attains `v(ν)`.
    pub fn locate_cone(&self, point: &[Rational]) -> Result<Vec<usize>> {
        let w = self.weight(point)?;
        Ok(self
            .facets
            .iter()
            .enumerate()
            .filter(|(_, f)| f.eval(point) == w)
            .map(|(j, _)| j)
            .collect())
    }

    pub fn locate_cone_int(&self, nu: &ExponentVector) -> Result<Vec<usize>> {
        self.locate_cone(&nu.to_rational())
    }

    /// The face cut out by a set of constraints, or `None` when empty.
    pub fn face_from_constraints(&self, constraints: &BTreeSet<usize>) -> Option<FaceRecord> {
        let vertex_set: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| constraints.iter().all(|&c| self.tight_on(c, &self.vertices[v])))
            .collect();
        if vertex_set.is_empty() {
            return None;
        }
        let rays: Vec<usize> = (0..self.n)
            .filter(|&i| constraints.iter().all(|&c| self.invariant_along(c, i)))
            .collect();
        let tight_facets: BTreeSet<usize> = (0..self.constraint_count())
            .filter(|&c| {
                vertex_set.iter().all(|&v| self.tight_on(c, &self.vertices[v]))
                    && rays.iter().all(|&i| self.invariant_along(c, i))
            })
            .collect();
        let base = &self.vertices[vertex_set[0]];
        let mut spanning: Vec<Vec<Rational>> = vertex_set[1..]
            .iter()
            .map(|&v| self.vertices[v].sub(base).to_rational())
            .collect();
        spanning.extend(rays.iter().map(|&i| ExponentVector::unit(self.n, i).to_rational()));
        let dim = linalg::rank(&spanning);
        let level_one = if dim + 1 == self.n {
            tight_facets.iter().copied().find(|&c| c < self.facets.len())
        } else {
            None
        };
        Some(FaceRecord {
            tight_facets,
            is_compact: rays.is_empty(),
            vertex_set,
            rays,
            dim,
            level_one,
        })
    }

    /// The face of a level-one facet.
    pub fn facet_face(&self, facet: usize) -> FaceRecord {
        self.face_from_constraints(&BTreeSet::from([facet]))
            .expect("facet faces are nonempty")
    }

    /// Intersection of two faces; `None` for the empty face.
    pub fn intersect(&self, a: &FaceRecord, b: &FaceRecord) -> Option<FaceRecord> {
        let union: BTreeSet<usize> = a.tight_facets.union(&b.tight_facets).copied().collect();
        self.face_from_constraints(&union)
    }

    /// All nonempty proper faces, of every dimension, sorted by decreasing
    /// dimension and then by tight set.
    pub fn faces(&self) -> Vec<FaceRecord> {
        let mut found: BTreeMap<BTreeSet<usize>, FaceRecord> = BTreeMap::new();
        let mut queue: Vec<FaceRecord> = (0..self.constraint_count())
            .filter_map(|c| self.face_from_constraints(&BTreeSet::from([c])))
            .collect();
        while let Some(face) = queue.pop() {
            if found.contains_key(&face.tight_facets) {
                continue;
            }
            for c in 0..self.constraint_count() {
                if face.tight_facets.contains(&c) {
                    continue;
                }
                let mut set = face.tight_facets.clone();
                set.insert(c);
                if let Some(next) = self.face_from_constraints(&set) {
                    if !found.contains_key(&next.tight_facets) {
                        queue.push(next);
                    }
                }
            }
            found.insert(face.tight_facets.clone(), face);
        }
        let mut faces: Vec<FaceRecord> = found.into_values().collect();
        faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.tight_facets.cmp(&b.tight_facets)));
        faces
    }

    /// Level-one facets containing no ray, in facet order.
    pub fn compact_facets(&self) -> Vec<FaceRecord> {
        (0..self.facets.len())
            .map(|j| self.facet_face(j))
            .filter(|f| f.is_compact)
            .collect()
    }

    /// Vertex coordinates of a face.
    pub fn face_vertices(&self, face: &FaceRecord) -> Vec<ExponentVector> {
        face.vertex_set.iter().map(|&v| self.vertices[v].clone()).collect()
    }
}

/// `⌈num / den⌉` for `den > 0`.
pub(crate) fn ceil_div_i128(num: i128, den: i128) -> i128 {
    debug_assert!(den > 0);
    num.div_euclid(den) + i128::from(num.rem_euclid(den) != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ideal(rows: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    fn form(c: &[(i64, i64)]) -> LinearForm {
        LinearForm::new(c.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn minimalize_drops_dominated_generators() {
        let a = minimalize(vec![ev(&[2, 0]), ev(&[3, 0]), ev(&[0, 3])]).unwrap();
        assert_eq!(a.generators(), &[ev(&[0, 3]), ev(&[2, 0])]);
        let b = minimalize(vec![ev(&[1, 1])]).unwrap();
        assert_eq!(b.generators(), &[ev(&[1, 1])]);
        let c = minimalize(vec![ev(&[2, 1]), ev(&[1, 2]), ev(&[2, 2])]).unwrap();
        assert_eq!(c.generators(), &[ev(&[1, 2]), ev(&[2, 1])]);
    }

    #[test]
    fn minimalize_rejects_bad_input() {
        assert_eq!(minimalize(vec![]), Err(Error::EmptyGenerators));
        assert!(matches!(
            minimalize(vec![ev(&[1, 0]), ev(&[1])]),
            Err(Error::RaggedGenerator { index: 1, .. })
        ));
        assert!(matches!(
            minimalize(vec![ev(&[1, -1])]),
            Err(Error::NegativeExponent { value: -1, .. })
        ));
        assert_eq!(minimalize(vec![ev(&[0, 0]), ev(&[1, 0])]), Err(Error::UnitIdeal));
    }

    #[test]
    fn cusp_polyhedron() {
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(p.vertices(), &[ev(&[0, 3]), ev(&[2, 0])]);
        assert_eq!(p.level_one_facets(), &[form(&[(1, 2), (1, 3)])]);
        assert_eq!(p.coordinate_facets(), &[0, 1]);
    }

    #[test]
    fn half_space_polyhedron() {
        let p = newton_polyhedron(&ideal(&[&[1, 0]]));
        assert_eq!(p.vertices(), &[ev(&[1, 0])]);
        assert_eq!(p.level_one_facets(), &[form(&[(1, 1), (0, 1)])]);
        assert_eq!(p.coordinate_facets(), &[1]);
    }

    #[test]
    fn three_generator_polyhedron() {
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[1, 1], &[0, 3]]));
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(
            p.level_one_facets(),
            &[form(&[(1, 2), (1, 2)]), form(&[(2, 3), (1, 3)])]
        );
    }

    #[test]
    fn non_vertex_generator_is_dropped_from_vertices() {
        // (1,1) lies on the segment between (2,0) and (0,2).
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(p.vertices(), &[ev(&[0, 2]), ev(&[2, 0])]);
        assert_eq!(p.level_one_facets(), &[form(&[(1, 2), (1, 2)])]);
    }

    #[test]
    fn cusp_faces() {
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]]));
        let faces = p.faces();
        assert_eq!(faces.len(), 5);
        assert_eq!(faces.iter().filter(|f| f.dim == 0).count(), 2);
        let compact: Vec<_> = faces.iter().filter(|f| f.dim == 1 && f.is_compact).collect();
        assert_eq!(compact.len(), 1);
        assert_eq!(faces.iter().filter(|f| f.dim == 1 && !f.is_compact).count(), 2);

        // compact facet ∩ {y = 0} is the vertex (2,0)
        let y_zero = faces
            .iter()
            .find(|f| !f.is_compact && f.rays == vec![0])
            .unwrap();
        let meet = p.intersect(compact[0], y_zero).unwrap();
        assert_eq!(meet.dim, 0);
        assert_eq!(p.face_vertices(&meet), vec![ev(&[2, 0])]);
    }

    #[test]
    fn one_variable_is_a_single_vertex_facet() {
        let p = newton_polyhedron(&ideal(&[&[1]]));
        let faces = p.faces();
        assert_eq!(faces.len(), 1);
        assert_eq!(faces[0].dim, 0);
        assert!(faces[0].is_compact);
        assert_eq!(faces[0].level_one, Some(0));
    }

    #[test]
    fn compact_facet_counts() {
        assert_eq!(newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]])).compact_facets().len(), 1);
        assert!(newton_polyhedron(&ideal(&[&[1, 0]])).compact_facets().is_empty());
        let diag = newton_polyhedron(&ideal(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]));
        let compact = diag.compact_facets();
        assert_eq!(compact.len(), 1);
        assert_eq!(compact[0].vertex_set.len(), 3);
        assert_eq!(diag.level_one_facets()[compact[0].level_one.unwrap()], form(&[(1, 2), (1, 3), (1, 4)]));
    }

    #[test]
    fn weight_examples() {
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(p.weight_int(&ev(&[1, 1])).unwrap(), rat(5, 6));
        assert_eq!(p.weight_int(&ev(&[2, 0])).unwrap(), int(1));
        assert_eq!(p.weight_int(&ev(&[0, 3])).unwrap(), int(1));
        assert_eq!(p.weight_int(&ev(&[0, 0])).unwrap(), int(0));
        assert_eq!(p.weight(&[rat(1, 2), rat(3, 2)]).unwrap(), rat(3, 4));
        assert!(p.weight(&[int(-1), int(0)]).is_err());
        assert!(p.weight_int(&ev(&[1])).is_err());
    }

    #[test]
    fn locate_cone_on_a_ridge() {
        // (x²y, xy³): facets y ≥ 1, (2x + y)/5 ≥ 1, x ≥ 1.
        let p = newton_polyhedron(&ideal(&[&[2, 1], &[1, 3]]));
        assert_eq!(
            p.level_one_facets(),
            &[form(&[(0, 1), (1, 1)]), form(&[(2, 5), (1, 5)]), form(&[(1, 1), (0, 1)])]
        );
        assert!(p.coordinate_facets().is_empty());
        assert_eq!(p.locate_cone_int(&ev(&[1, 3])).unwrap(), vec![1, 2]);
        assert_eq!(p.locate_cone_int(&ev(&[4, 4])).unwrap(), vec![1]);
        assert_eq!(p.locate_cone_int(&ev(&[0, 0])).unwrap(), vec![0, 1, 2]);
        let cusp = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]]));
        assert_eq!(cusp.locate_cone_int(&ev(&[1, 1])).unwrap(), vec![0]);
    }

    #[test]
    fn dilate_membership_matches_weight() {
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]]));
        let nu = ev(&[1, 1]).to_rational();
        assert!(p.dilate_contains(&nu, &rat(5, 6)));
        assert!(!p.dilate_contains(&nu, &rat(6, 7)));
    }
}
