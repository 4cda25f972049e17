//! Integer linear algebra for the facet invariants `c_σ` and `e_σ`.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::polyhedron::{ExponentVector, FaceRecord, LinearForm, MonomialIdeal, NewtonPolyhedron};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntegerMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in entries.iter().enumerate() {
            m.data[i * n + i] = BigInt::from(d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += factor * row[source]`
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * self.get(source, j);
            self.data[target * self.cols + j] += delta;
        }
    }

    /// `col[target] += factor * col[source]`
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * self.get(i, source);
            self.data[i * self.cols + target] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -&self.data[idx];
        }
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `left · M · right = diagonal` with `left`, `right` unimodular.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: IntegerMatrix,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        let k = self.diagonal.rows.min(self.diagonal.cols);
        (0..k).take_while(|&i| !self.diagonal.get(i, i).is_zero()).count()
    }

    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank()).map(|i| self.diagonal.get(i, i).clone()).collect()
    }
}

/// Position of the nonzero entry of least absolute value in the trailing
/// block starting at `(t, t)`, ties broken by `(row, col)` order.
fn min_pivot(m: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows {
        for j in t..m.cols {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.get(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

pub fn smith_normal_form(matrix: &IntegerMatrix) -> SmithForm {
    let mut d = matrix.clone();
    let mut u = IntegerMatrix::identity(matrix.rows);
    let mut v = IntegerMatrix::identity(matrix.cols);
    let k = d.rows.min(d.cols);

    for t in 0..k {
        let Some((pi, pj)) = min_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..d.rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                if !d.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..d.cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                if !d.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // Move the smallest remainder in row/column t to the pivot.
                let mut best = (t, t);
                for i in t + 1..d.rows {
                    let x = d.get(i, t);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..d.cols {
                    let x = d.get(t, j);
                    if !x.is_zero() && x.abs() < d.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..d.rows).find(|&i| {
                (t + 1..d.cols).any(|j| !d.get(i, j).is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm {
        diagonal: d,
        left: u,
        right: v,
    }
}

/// Hermite normal form of a list of linearly independent integer rows:
/// echelon shape, positive pivots, entries above each pivot reduced into
/// `[0, pivot)`.
fn hermite_rows(mut rows: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let n_cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..n_cols {
        if r == rows.len() {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let p = *nonzero
                .iter()
                .min_by_key(|&&i| rows[i][col].abs())
                .unwrap();
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                for j in 0..n_cols {
                    let delta = &q * &rows[r][j];
                    rows[i][j] -= delta;
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < rows.len() && !rows[r][col].is_zero() {
            if rows[r][col].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = rows[i][col].div_floor(&rows[r][col]);
                if !q.is_zero() {
                    for j in 0..n_cols {
                        let delta = &q * &rows[r][j];
                        rows[i][j] -= delta;
                    }
                }
            }
            r += 1;
        }
    }
    rows
}

/// A `Z`-basis of `Z^n ∩ ker(c·L)`, in Hermite normal form.
pub fn kernel_basis(form: &LinearForm) -> Vec<Vec<BigInt>> {
    let row = IntegerMatrix::from_rows(&[form.cleared().to_vec()]);
    let snf = smith_normal_form(&row);
    let rank = snf.rank();
    let basis: Vec<Vec<BigInt>> = (rank..row.cols()).map(|j| snf.right.column(j)).collect();
    hermite_rows(basis)
}

/// Integer coordinates of `target` in a Hermite-form basis; `None` when the
/// target is not in the lattice spanned by the basis.
fn hermite_coordinates(basis: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest: Vec<BigInt> = target.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let col = b.iter().position(|x| !x.is_zero())?;
        let (q, r) = rest[col].div_rem(&b[col]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= &q * y;
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

/// `c_σ`: least common multiple of the coefficient denominators.
pub fn facet_denominator(form: &LinearForm) -> u64 {
    form.denominator() as u64
}

/// `|G′/G|` where `G′ = Z^n ∩ ker L` and `G` is generated by the pairwise
/// differences of `points`, all of which must satisfy `L = 1`.
pub fn lattice_index(form: &LinearForm, points: &[ExponentVector]) -> Result<LatticeIndex> {
    let Some(first) = points.first() else {
        return Err(Error::Inconsistent("lattice index of an empty point set".into()));
    };
    for p in points {
        if p.dim() != form.dim() {
            return Err(Error::DimensionMismatch {
                expected: form.dim(),
                found: p.dim(),
            });
        }
        if form.eval_scaled(p.coords()) != form.denominator() as i128 {
            return Err(Error::OffHyperplane(p.to_string()));
        }
    }
    let basis = kernel_basis(form);
    if basis.is_empty() {
        return Ok(LatticeIndex::Finite(BigInt::one()));
    }
    let mut columns: Vec<Vec<BigInt>> = Vec::new();
    for p in &points[1..] {
        let diff: Vec<BigInt> = p.sub(first).coords().iter().map(|&x| BigInt::from(x)).collect();
        let coords = hermite_coordinates(&basis, &diff)
            .ok_or_else(|| Error::Inconsistent(format!("difference {p} - {first} left the kernel lattice")))?;
        columns.push(coords);
    }
    if columns.len() < basis.len() {
        return Ok(LatticeIndex::Infinite);
    }
    let mut m = IntegerMatrix::zeros(basis.len(), columns.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            m.set(i, j, x.clone());
        }
    }
    let snf = smith_normal_form(&m);
    if snf.rank() < basis.len() {
        return Ok(LatticeIndex::Infinite);
    }
    Ok(LatticeIndex::Finite(
        snf.invariant_factors().iter().fold(BigInt::one(), |a, d| a * d),
    ))
}

/// Lattice points of a compact facet that lie in `Γ_𝔞`.
pub fn face_semigroup_points(
    ideal: &MonomialIdeal,
    poly: &NewtonPolyhedron,
    facet: &FaceRecord,
) -> Result<Vec<ExponentVector>> {
    if !facet.is_compact {
        return Err(Error::NoncompactFace);
    }
    let vertices = poly.face_vertices(facet);
    let n = poly.n();
    let lo: Vec<i64> = (0..n).map(|i| vertices.iter().map(|v| v.coords()[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..n).map(|i| vertices.iter().map(|v| v.coords()[i]).max().unwrap()).collect();
    let constraints: Vec<usize> = facet.tight_facets.iter().copied().collect();
    let mut out = Vec::new();
    let mut current = lo.clone();
    loop {
        let nu = ExponentVector::new(current.clone());
        let on_face = constraints.iter().all(|&c| match poly.constraint(c) {
            crate::polyhedron::Constraint::LevelOne(j) => {
                let f = &poly.level_one_facets()[j];
                f.eval_scaled(nu.coords()) == f.denominator() as i128
            }
            crate::polyhedron::Constraint::Coordinate(i) => nu.coords()[i] == 0,
        });
        if on_face && poly.contains(&nu.to_rational()) && ideal.contains(&nu) {
            out.push(nu);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            if current[i] < hi[i] {
                current[i] += 1;
                break;
            }
            current[i] = lo[i];
            i += 1;
        }
    }
}

/// `(L_σ, c_σ, e_σ, Γ_𝔞 ∩ σ)` for a compact level-one facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetInvariants {
    pub facet_vertices: Vec<ExponentVector>,
    pub form: LinearForm,
    pub c: u64,
    pub e: u64,
    pub face_points: Vec<ExponentVector>,
}

pub fn facet_invariants(
    ideal: &MonomialIdeal,
    poly: &NewtonPolyhedron,
    facet: &FaceRecord,
) -> Result<FacetInvariants> {
    let j = facet
        .level_one
        .ok_or_else(|| Error::Inconsistent("face is not a level-one facet".into()))?;
    let form = poly.level_one_facets()[j].clone();
    let mut face_points = face_semigroup_points(ideal, poly, facet)?;
    face_points.sort();
    let e = match lattice_index(&form, &face_points)? {
        LatticeIndex::Finite(e) => e
            .to_u64()
            .ok_or_else(|| Error::Overflow(e.to_string()))?,
        LatticeIndex::Infinite => {
            return Err(Error::Inconsistent(format!(
                "compact facet {form} has an infinite lattice index"
            )))
        }
    };
    Ok(FacetInvariants {
        facet_vertices: poly.face_vertices(facet),
        c: facet_denominator(&form),
        e,
        form,
        face_points,
    })
}

/// Facet invariants of every compact level-one facet, in facet order.
pub fn all_facet_invariants(ideal: &MonomialIdeal, poly: &NewtonPolyhedron) -> Result<Vec<FacetInvariants>> {
    poly.compact_facets()
        .iter()
        .map(|f| facet_invariants(ideal, poly, f))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::newton_polyhedron;
    use crate::rational::rat;

    fn check_snf(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.left.mul(m).mul(&s.right), s.diagonal, "U·M·V = D");
        assert!(s.diagonal.is_diagonal());
        assert_eq!(s.left.determinant().abs(), BigInt::one());
        assert_eq!(s.right.determinant().abs(), BigInt::one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(f.iter().all(|d| d.is_positive()));
        s
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_identity() {
        let s = check_snf(&IntegerMatrix::identity(3));
        assert_eq!(s.diagonal, IntegerMatrix::identity(3));
    }

    #[test]
    fn snf_diag_2_3() {
        let s = check_snf(&IntegerMatrix::diagonal(&[2, 3]));
        assert_eq!(s.invariant_factors(), big(&[1, 6]));
    }

    #[test]
    fn snf_square() {
        let s = check_snf(&IntegerMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.invariant_factors(), big(&[2, 4]));
    }

    #[test]
    fn snf_rectangular_and_zero() {
        let s = check_snf(&IntegerMatrix::from_rows(&[vec![0, 0, 0], vec![0, 0, 0]]));
        assert_eq!(s.rank(), 0);
        let s = check_snf(&IntegerMatrix::from_rows(&[vec![3, 2]]));
        assert_eq!(s.invariant_factors(), big(&[1]));
        let s = check_snf(&IntegerMatrix::from_rows(&[vec![4, 6], vec![6, 9], vec![2, 3]]));
        assert_eq!(s.invariant_factors(), big(&[1]));
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntegerMatrix::from_rows(&[vec![0, 2, 1], vec![1, 1, 0], vec![3, 0, 5]]);
        assert_eq!(m.determinant(), BigInt::from(-13));
        assert_eq!(IntegerMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    fn form(c: &[(i64, i64)]) -> LinearForm {
        LinearForm::new(c.iter().map(|&(p, q)| rat(p, q)).collect()).unwrap()
    }

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn denominators() {
        assert_eq!(facet_denominator(&form(&[(1, 2), (1, 3)])), 6);
        assert_eq!(facet_denominator(&form(&[(1, 1)])), 1);
        assert_eq!(facet_denominator(&form(&[(1, 4), (1, 6)])), 12);
        assert_eq!(LinearForm::new(vec![rat(0, 1)]), Err(Error::ZeroForm));
    }

    #[test]
    fn kernel_is_saturated_hermite() {
        let b = kernel_basis(&form(&[(1, 2), (1, 3)]));
        assert_eq!(b, vec![big(&[2, -3])]);
        let b = kernel_basis(&form(&[(1, 2), (1, 2)]));
        assert_eq!(b, vec![big(&[1, -1])]);
        let b = kernel_basis(&form(&[(1, 2), (1, 4), (1, 6)]));
        assert_eq!(b.len(), 2);
        for v in &b {
            let dot: BigInt = v.iter().zip([6, 3, 2]).map(|(x, c)| x * c).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn lattice_index_examples() {
        let f = form(&[(1, 2), (1, 3)]);
        assert_eq!(
            lattice_index(&f, &[ev(&[2, 0]), ev(&[0, 3])]).unwrap(),
            LatticeIndex::Finite(BigInt::one())
        );
        let f = form(&[(1, 2), (1, 2)]);
        assert_eq!(
            lattice_index(&f, &[ev(&[2, 0]), ev(&[0, 2])]).unwrap(),
            LatticeIndex::Finite(BigInt::from(2))
        );
        assert_eq!(
            lattice_index(&f, &[ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])]).unwrap(),
            LatticeIndex::Finite(BigInt::one())
        );
        assert_eq!(lattice_index(&f, &[ev(&[2, 0])]).unwrap(), LatticeIndex::Infinite);
        let f = form(&[(1, 5)]);
        assert_eq!(
            lattice_index(&f, &[ev(&[5])]).unwrap(),
            LatticeIndex::Finite(BigInt::one())
        );
        assert!(matches!(
            lattice_index(&form(&[(1, 2), (1, 3)]), &[ev(&[1, 1])]),
            Err(Error::OffHyperplane(_))
        ));
    }

    fn invariants(rows: &[&[i64]]) -> Vec<FacetInvariants> {
        let ideal = MonomialIdeal::from_rows(rows).unwrap();
        let poly = newton_polyhedron(&ideal);
        all_facet_invariants(&ideal, &poly).unwrap()
    }

    #[test]
    fn semigroup_points_on_facets() {
        let inv = invariants(&[&[2, 0], &[0, 3]]);
        assert_eq!(inv[0].face_points, vec![ev(&[0, 3]), ev(&[2, 0])]);
        let inv = invariants(&[&[2, 0], &[1, 1], &[0, 2]]);
        assert_eq!(inv[0].face_points, vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]);
        let inv = invariants(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
        assert!(inv[0].face_points.contains(&ev(&[3, 0, 0])));
        assert!(!inv[0].face_points.contains(&ev(&[1, 1, 1])));
    }

    #[test]
    fn noncompact_face_rejected() {
        let ideal = MonomialIdeal::from_rows(&[&[1, 0]]).unwrap();
        let poly = newton_polyhedron(&ideal);
        let face = poly.facet_face(0);
        assert_eq!(
            face_semigroup_points(&ideal, &poly, &face),
            Err(Error::NoncompactFace)
        );
    }

    #[test]
    fn diagonal_invariants() {
        let inv = invariants(&[&[2, 0], &[0, 3]]);
        assert_eq!((inv[0].c, inv[0].e), (6, 1));
        let inv = invariants(&[&[2, 0], &[0, 2]]);
        assert_eq!((inv[0].c, inv[0].e), (2, 2));
        let inv = invariants(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        assert_eq!((inv[0].c, inv[0].e), (30, 1));
    }
}
