//! Brute-force reference implementations. Nothing here reads facet data
//! except where stated, so agreement with the closed-form modules is a real
//! cross-check.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::grid::GridPoints;
use crate::linalg;
use crate::polyhedron::{ExponentVector, MonomialIdeal, NewtonPolyhedron};
use crate::rational::{self, int, rat, Rational};

/// Coordinate bound `K` of a search box `[0, K]^n` or `[1, K]^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchBox(i64);

impl SearchBox {
    pub fn new(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Inconsistent(format!("box bound must be at least 1, got {k}")));
        }
        Ok(Self(k))
    }

    pub fn k(self) -> i64 {
        self.0
    }

    pub fn doubled(self) -> Self {
        Self(self.0 * 2)
    }
}

/// Largest table the oracles will allocate.
pub const MAX_TABLE_CELLS: usize = 1 << 23;

/// `ν ∈ Γ_𝔞`, i.e. `ν` dominates a generator.
pub fn semigroup_member(ideal: &MonomialIdeal, nu: &[i64]) -> bool {
    ideal
        .generators()
        .iter()
        .any(|g| g.coords().iter().zip(nu).all(|(a, b)| a <= b))
}

/// `f(w) = max{k : w ∈ Γ(𝔞^k)}` for every `w` in a box `[0, hi]`.
///
/// Filled by `f(w) = max(f(w - e_i), 1 + f(w - g))` over unit vectors and
/// generators `g ≤ w`, in an order where both predecessors come first.
#[derive(Debug, Clone)]
pub struct PowerTable {
    hi: Vec<i64>,
    strides: Vec<usize>,
    degree: Vec<u32>,
}

impl PowerTable {
    pub fn build(ideal: &MonomialIdeal, hi: &[i64]) -> Result<Self> {
        let n = ideal.n();
        if hi.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: hi.len(),
            });
        }
        let mut strides = Vec::with_capacity(n);
        let mut total: usize = 1;
        for &h in hi {
            if h < 0 {
                return Err(Error::NegativeCoordinate(h.to_string()));
            }
            strides.push(total);
            total = total
                .checked_mul(h as usize + 1)
                .filter(|&t| t <= MAX_TABLE_CELLS)
                .ok_or_else(|| Error::Overflow(format!("power table over {hi:?} exceeds {MAX_TABLE_CELLS} cells")))?;
        }
        let gens: Vec<(&[i64], usize)> = ideal
            .generators()
            .iter()
            .map(|g| {
                let off = g.coords().iter().zip(&strides).map(|(&a, &s)| a as usize * s).sum();
                (g.coords(), off)
            })
            .collect();
        let mut degree = vec![0u32; total];
        let mut w = vec![0i64; n];
        for idx in 0..total {
            let mut best = 0;
            for i in 0..n {
                if w[i] > 0 {
                    best = best.max(degree[idx - strides[i]]);
                }
            }
            for (g, off) in &gens {
                if g.iter().zip(&w).all(|(a, b)| a <= b) {
                    best = best.max(degree[idx - off] + 1);
                }
            }
            degree[idx] = best;
            for i in 0..n {
                if w[i] < hi[i] {
                    w[i] += 1;
                    break;
                }
                w[i] = 0;
            }
        }
        Ok(Self {
            hi: hi.to_vec(),
            strides,
            degree,
        })
    }

    pub fn cube(ideal: &MonomialIdeal, k: i64) -> Result<Self> {
        Self::build(ideal, &vec![k; ideal.n()])
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn covers(&self, w: &[i64]) -> bool {
        w.len() == self.hi.len() && w.iter().zip(&self.hi).all(|(&a, &h)| (0..=h).contains(&a))
    }

    /// `max{k : w ∈ Γ(𝔞^k)}`, or `None` outside the table.
    pub fn degree(&self, w: &[i64]) -> Option<u32> {
        self.covers(w)
            .then(|| self.degree[w.iter().zip(&self.strides).map(|(&a, &s)| a as usize * s).sum::<usize>()])
    }

    /// Lower bound for `f(q·w)` from `f(q·w) ≥ ⌊q/p⌋·f(p·w) + f((q mod p)·w)`
    /// over the multiples `p·w` the table covers. Exact when `q·w` is covered.
    pub fn scaled_degree_lower_bound(&self, w: &[i64], q: i64) -> Option<u64> {
        let scaled: Vec<i64> = w.iter().map(|&a| a * q).collect();
        if let Some(d) = self.degree(&scaled) {
            return Some(d as u64);
        }
        let at = |p: i64| -> Option<u64> {
            let v: Vec<i64> = w.iter().map(|&a| a * p).collect();
            self.degree(&v).map(u64::from)
        };
        let mut best = None;
        let mut p = 1;
        while let Some(fp) = at(p) {
            let r = q % p;
            if let Some(fr) = at(r) {
                let bound = (q / p) as u64 * fp + fr;
                best = Some(best.map_or(bound, |b: u64| b.max(bound)));
            }
            if p >= q {
                break;
            }
            p += 1;
        }
        best
    }
}

/// `Γ(𝔞^k) ∩ [0, K]^n`; `k = 0` gives the whole box.
pub fn ideal_power_members(ideal: &MonomialIdeal, k: u32, bx: SearchBox) -> Result<BTreeSet<ExponentVector>> {
    let table = PowerTable::cube(ideal, bx.k())?;
    Ok(GridPoints::cube(ideal.n(), 0, bx.k())
        .filter(|w| table.degree(w).is_some_and(|d| d >= k))
        .map(ExponentVector::new)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteWeight {
    /// `f(DT·ν)/(DT)` agreed for `T = t - 1` and `T = t`.
    Stable { value: Rational, t: i64 },
    /// The ratios seen for `T = 1, 2, ...`; no two consecutive ones agreed on
    /// a value with denominator dividing `D`.
    Inconclusive { ratios: Vec<Rational> },
}

impl BruteWeight {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            BruteWeight::Stable { value, .. } => Some(value),
            BruteWeight::Inconclusive { .. } => None,
        }
    }
}

fn stabilize(d: i64, t_max: i64, mut f: impl FnMut(i64) -> Option<u32>) -> BruteWeight {
    let mut ratios: Vec<Rational> = Vec::new();
    for t in 1..=t_max {
        let Some(fk) = f(t) else { break };
        let r = rat(fk as i64, d * t);
        if let Some(prev) = ratios.last() {
            let den = r.denom().to_i64().unwrap_or(0);
            if *prev == r && den != 0 && d % den == 0 {
                return BruteWeight::Stable { value: r, t };
            }
        }
        ratios.push(r);
    }
    BruteWeight::Inconclusive { ratios }
}

/// Estimates `v(ν)` as `f(N·ν)/N` for `N = D·T`, `T = 1..=t_max`.
/// `D` is only a grid hint; nothing else from the polyhedron is used.
pub fn brute_weight(ideal: &MonomialIdeal, nu: &ExponentVector, d: i64, t_max: i64) -> Result<BruteWeight> {
    if d < 1 || t_max < 1 {
        return Err(Error::Inconsistent(format!("need D ≥ 1 and T_max ≥ 1, got {d}, {t_max}")));
    }
    if !nu.is_nonnegative() {
        return Err(Error::NegativeCoordinate(nu.to_string()));
    }
    let hi: Vec<i64> = nu.coords().iter().map(|&a| a * d * t_max).collect();
    let table = PowerTable::build(ideal, &hi)?;
    Ok(stabilize(d, t_max, |t| {
        let w: Vec<i64> = nu.coords().iter().map(|&a| a * d * t).collect();
        table.degree(&w)
    }))
}

/// [`brute_weight`] for every `ν ∈ [0, K]^n` from one shared table.
/// The table first covers `T ≤ 2` and is rebuilt for `t_max` only if some
/// point fails to stabilize.
pub fn brute_weights_on_box(
    ideal: &MonomialIdeal,
    bx: SearchBox,
    d: i64,
    t_max: i64,
) -> Result<Vec<(ExponentVector, BruteWeight)>> {
    let n = ideal.n();
    let run = |t: i64| -> Result<Vec<(ExponentVector, BruteWeight)>> {
        let table = PowerTable::cube(ideal, bx.k() * d * t)?;
        Ok(GridPoints::cube(n, 0, bx.k())
            .map(|nu| {
                let bw = stabilize(d, t, |s| {
                    let w: Vec<i64> = nu.iter().map(|&a| a * d * s).collect();
                    table.degree(&w)
                });
                (ExponentVector::new(nu), bw)
            })
            .collect())
    };
    let first = run(2.min(t_max))?;
    if t_max <= 2 || first.iter().all(|(_, b)| b.value().is_some()) {
        return Ok(first);
    }
    run(t_max)
}

/// `{v(ν) : ν ∈ [1, K]^n} ∩ (0, B]`, using the polyhedron's weight.
pub fn brute_jumping(poly: &NewtonPolyhedron, bx: SearchBox, bound: &Rational) -> Result<BTreeSet<Rational>> {
    let mut out = BTreeSet::new();
    for nu in GridPoints::cube(poly.n(), 1, bx.k()) {
        let v = poly.weight_int(&ExponentVector::new(nu))?;
        if rational::is_positive(&v) && v <= *bound {
            out.insert(v);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteIndex {
    Finite(u64),
    /// The index exceeds the bound, or the enumeration would be too large.
    Overflow,
    /// `G` has lower rank than `G′`.
    Infinite,
}

/// Largest coset enumeration attempted by [`brute_lattice_index`].
pub const MAX_COSET_ENUMERATION: usize = 1 << 21;

/// `|G′ / G|` by enumeration: with `Δ = |det|` of a full-rank set of
/// generators (in `G′` coordinates), `Δ·Z^r ⊆ G`, so the index is `Δ^r`
/// divided by the size of the subgroup `G` generates in `(Z/Δ)^r`.
pub fn brute_lattice_index(basis: &[ExponentVector], gens: &[ExponentVector], bound: u64) -> Result<BruteIndex> {
    let r = basis.len();
    if r == 0 {
        return Ok(BruteIndex::Finite(1));
    }
    let n = basis[0].dim();
    if basis.iter().chain(gens).any(|v| v.dim() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: basis.iter().chain(gens).map(ExponentVector::dim).find(|&d| d != n).unwrap_or(n),
        });
    }
    let basis_q: Vec<Vec<Rational>> = basis.iter().map(ExponentVector::to_rational).collect();
    // r coordinate rows on which the basis is independent
    let mut rows: Vec<usize> = Vec::new();
    for i in 0..n {
        let mut trial = rows.clone();
        trial.push(i);
        let minor: Vec<Vec<Rational>> = trial.iter().map(|&k| basis_q.iter().map(|b| b[k].clone()).collect()).collect();
        if linalg::rank(&minor) == trial.len() {
            rows = trial;
        }
        if rows.len() == r {
            break;
        }
    }
    if rows.len() < r {
        return Err(Error::Inconsistent("G′ basis is not linearly independent".into()));
    }
    let square: Vec<Vec<Rational>> = rows.iter().map(|&k| basis_q.iter().map(|b| b[k].clone()).collect()).collect();
    let mut coords: Vec<Vec<i64>> = Vec::new();
    for g in gens {
        let rhs: Vec<Rational> = rows.iter().map(|&k| int(g.coords()[k])).collect();
        let x = linalg::solve_square(&square, &rhs).ok_or_else(|| Error::Inconsistent("singular G′ minor".into()))?;
        let back: Vec<Rational> = (0..n)
            .map(|k| x.iter().zip(&basis_q).fold(Rational::zero(), |acc, (c, b)| acc + c * &b[k]))
            .collect();
        if back != g.to_rational() {
            return Err(Error::Inconsistent(format!("{g} is not in the span of G′")));
        }
        let mut ints = Vec::with_capacity(r);
        for c in x {
            if !c.is_integer() {
                return Err(Error::Inconsistent(format!("{g} is not in the lattice G′")));
            }
            ints.push(rational::to_i64(c.numer())?);
        }
        coords.push(ints);
    }
    let coords_q: Vec<Vec<Rational>> = coords.iter().map(|c| c.iter().map(|&a| int(a)).collect()).collect();
    if linalg::rank(&coords_q) < r {
        return Ok(BruteIndex::Infinite);
    }
    // a full-rank r-subset, greedily
    let mut chosen: Vec<Vec<Rational>> = Vec::new();
    for c in &coords_q {
        let mut trial = chosen.clone();
        trial.push(c.clone());
        if linalg::rank(&trial) == trial.len() {
            chosen = trial;
        }
    }
    let delta = linalg::determinant(&chosen).abs();
    let delta = rational::to_i64(delta.numer())?;
    let full = (delta as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if full > MAX_COSET_ENUMERATION as u128 * bound.max(1) as u128 {
        return Ok(BruteIndex::Overflow);
    }
    let reduce = |v: &[i64]| -> Vec<i64> { v.iter().map(|a| a.rem_euclid(delta)).collect() };
    let steps: Vec<Vec<i64>> = coords.iter().map(|c| reduce(c)).collect();
    let start = vec![0i64; r];
    let mut seen: HashSet<Vec<i64>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for s in &steps {
            let q: Vec<i64> = p.iter().zip(s).map(|(a, b)| (a + b).rem_euclid(delta)).collect();
            if seen.insert(q.clone()) {
                if seen.len() > MAX_COSET_ENUMERATION {
                    return Ok(BruteIndex::Overflow);
                }
                queue.push_back(q);
            }
        }
    }
    let index = full / seen.len() as u128;
    Ok(if index > bound as u128 {
        BruteIndex::Overflow
    } else {
        BruteIndex::Finite(index as u64)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingFailureKind {
    /// A class of weight above its degree whose power did not rise.
    NotNilpotent,
    /// A weight-tight class below its degree in the table.
    TightClassDropped,
    /// Additivity of the weight disagrees with sharing a facet cone.
    ConeMismatch,
    /// A product of tight classes with additive weight vanished.
    ProductVanished,
    /// A nilpotency certificate could not be produced inside the table.
    Uncertified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingFailure {
    pub kind: RingFailureKind,
    pub witness: Vec<ExponentVector>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCheckReport {
    pub bx: SearchBox,
    pub k_max: u32,
    pub n_pow: i64,
    pub nilpotent_classes: usize,
    pub tight_products: usize,
    pub failures: Vec<RingFailure>,
}

impl RingCheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the graded ring `⊕ 𝔞^k / 𝔞^{k+1}` against the weight function on
/// `[0, K]^n` for degrees `k ≤ k_max`:
///
/// * a class of degree `k` with `v(ν) > k` is nilpotent, with
///   `N·ν ∈ Γ(𝔞^{N·k + 1})` for `N = n_pow`;
/// * a class with `v(ν) = k` has degree exactly `k`;
/// * for two such classes, `v(ν + ν′) = k + k′` iff their facet cones
///   meet, and then `ν + ν′` has degree exactly `k + k′`; otherwise the
///   product class is nilpotent, so it vanishes in the reduced ring.
pub fn reduced_ring_check(
    ideal: &MonomialIdeal,
    poly: &NewtonPolyhedron,
    k_max: u32,
    bx: SearchBox,
    n_pow: i64,
) -> Result<RingCheckReport> {
    if k_max < 1 || n_pow < 1 {
        return Err(Error::Inconsistent(format!("need k_max ≥ 1 and N ≥ 1, got {k_max}, {n_pow}")));
    }
    let n = ideal.n();
    let k = bx.k();
    // the largest multiple of the doubled box that fits
    let mut p = n_pow;
    let table = loop {
        match PowerTable::cube(ideal, 2 * k * p) {
            Ok(t) => break t,
            Err(Error::Overflow(_)) if p > 1 => p = (p / 2).max(1),
            Err(e) => return Err(e),
        }
    };
    let mut failures = Vec::new();
    let mut nilpotent_classes = 0;
    let mut tight_products = 0;
    let mut tight: Vec<(Vec<i64>, u32, Vec<usize>)> = Vec::new();

    let check_nilpotent = |w: &[i64], deg: u32, failures: &mut Vec<RingFailure>| {
        let need = n_pow as u64 * deg as u64 + 1;
        match table.scaled_degree_lower_bound(w, n_pow) {
            Some(b) if b >= need => {}
            Some(b) if table.covers(&w.iter().map(|a| a * n_pow).collect::<Vec<_>>()) => failures.push(RingFailure {
                kind: RingFailureKind::NotNilpotent,
                witness: vec![ExponentVector::new(w.to_vec())],
                detail: format!("{n_pow}·ν has degree {b}, expected at least {need}"),
            }),
            _ => failures.push(RingFailure {
                kind: RingFailureKind::Uncertified,
                witness: vec![ExponentVector::new(w.to_vec())],
                detail: format!("no certificate for degree {need} within table {:?}", table.hi()),
            }),
        }
    };

    for w in GridPoints::cube(n, 0, k) {
        let deg = table.degree(&w).expect("box is inside the table");
        if deg > k_max {
            continue;
        }
        let nu = ExponentVector::new(w.clone());
        let weight = poly.weight_int(&nu)?;
        let kd = int(deg as i64);
        if weight > kd {
            nilpotent_classes += 1;
            check_nilpotent(&w, deg, &mut failures);
        } else if weight == kd {
            tight.push((w, deg, poly.locate_cone_int(&nu)?));
        } else {
            failures.push(RingFailure {
                kind: RingFailureKind::TightClassDropped,
                witness: vec![nu],
                detail: format!("degree {deg} exceeds weight {}", rational::format(&weight)),
            });
        }
    }
    for (a, (wa, da, ca)) in tight.iter().enumerate() {
        for (wb, db, cb) in &tight[a..] {
            if da + db > k_max {
                continue;
            }
            tight_products += 1;
            let sum: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            let sum_ev = ExponentVector::new(sum.clone());
            let weight = poly.weight_int(&sum_ev)?;
            let target = int((da + db) as i64);
            let additive = weight == target;
            let meet = ca.iter().any(|c| cb.contains(c));
            let witness = || vec![ExponentVector::new(wa.clone()), ExponentVector::new(wb.clone())];
            if additive != meet {
                failures.push(RingFailure {
                    kind: RingFailureKind::ConeMismatch,
                    witness: witness(),
                    detail: format!(
                        "v(ν+ν′) = {}, degrees {da}+{db}, cones {ca:?} / {cb:?}",
                        rational::format(&weight)
                    ),
                });
                continue;
            }
            let deg = table.degree(&sum).expect("doubled box is inside the table");
            if additive {
                if deg != da + db {
                    failures.push(RingFailure {
                        kind: RingFailureKind::ProductVanished,
                        witness: witness(),
                        detail: format!("ν+ν′ has degree {deg}, expected {}", da + db),
                    });
                }
            } else if deg == da + db {
                check_nilpotent(&sum, deg, &mut failures);
            }
        }
    }
    Ok(RingCheckReport {
        bx,
        k_max,
        n_pow,
        nilpotent_classes,
        tight_products,
        failures,
    })
}

/// `D·k_max`, the nilpotency exponent used in place of the inexplicit one.
pub fn default_nilpotency_exponent(poly: &NewtonPolyhedron, k_max: u32) -> i64 {
    poly.common_denominator() * k_max as i64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::newton_polyhedron;

    fn ideal(rows: &[&[i64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(rows).unwrap()
    }

    fn ev(c: &[i64]) -> ExponentVector {
        ExponentVector::new(c.to_vec())
    }

    #[test]
    fn semigroup() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        assert!(semigroup_member(&a, &[2, 5]));
        assert!(!semigroup_member(&a, &[1, 2]));
        for g in a.generators() {
            assert!(semigroup_member(&a, g.coords()));
        }
    }

    #[test]
    fn powers() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let bx = SearchBox::new(10).unwrap();
        let sq = ideal_power_members(&a, 2, bx).unwrap();
        for p in [[4, 0], [2, 3], [0, 6], [5, 4]] {
            assert!(sq.contains(&ev(&p)));
        }
        assert!(!sq.contains(&ev(&[3, 2])));
        let one = ideal_power_members(&a, 1, bx).unwrap();
        for w in GridPoints::cube(2, 0, 10) {
            assert_eq!(one.contains(&ExponentVector::new(w.clone())), semigroup_member(&a, &w));
        }
        assert_eq!(ideal_power_members(&a, 0, bx).unwrap().len(), 121);
        let t = PowerTable::cube(&a, 12).unwrap();
        assert_eq!(t.degree(&[6, 12]), Some(7));
        assert_eq!(t.degree(&[6, 6]), Some(5));
    }

    #[test]
    fn weights() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        assert_eq!(brute_weight(&a, &ev(&[1, 1]), 6, 4).unwrap().value(), Some(&rat(5, 6)));
        assert_eq!(brute_weight(&a, &ev(&[2, 0]), 6, 4).unwrap().value(), Some(&int(1)));
        assert_eq!(brute_weight(&a, &ev(&[0, 0]), 6, 4).unwrap().value(), Some(&int(0)));
    }

    #[test]
    fn jumping() {
        let p = newton_polyhedron(&ideal(&[&[2, 0], &[0, 3]]));
        let got = brute_jumping(&p, SearchBox::new(12).unwrap(), &int(2)).unwrap();
        let want: BTreeSet<_> = [(5, 6), (7, 6), (4, 3), (3, 2), (5, 3), (11, 6), (2, 1)]
            .iter()
            .map(|&(a, b)| rat(a, b))
            .collect();
        assert_eq!(got, want);
        let p = newton_polyhedron(&ideal(&[&[1]]));
        let got = brute_jumping(&p, SearchBox::new(5).unwrap(), &int(3)).unwrap();
        assert_eq!(got, [int(1), int(2), int(3)].into_iter().collect());
    }

    #[test]
    fn indices() {
        let r = brute_lattice_index(&[ev(&[1, -1])], &[ev(&[2, -2])], 64).unwrap();
        assert_eq!(r, BruteIndex::Finite(2));
        let basis = [ev(&[1, 0]), ev(&[0, 1])];
        assert_eq!(brute_lattice_index(&basis, &basis, 64).unwrap(), BruteIndex::Finite(1));
        let r = brute_lattice_index(&basis, &[ev(&[2, 0]), ev(&[0, 3])], 64).unwrap();
        assert_eq!(r, BruteIndex::Finite(6));
        let r = brute_lattice_index(&basis, &[ev(&[2, 0]), ev(&[0, 3])], 5).unwrap();
        assert_eq!(r, BruteIndex::Overflow);
        let r = brute_lattice_index(&basis, &[ev(&[2, 0]), ev(&[4, 0])], 64).unwrap();
        assert_eq!(r, BruteIndex::Infinite);
        let r = brute_lattice_index(&basis, &[ev(&[4, 6]), ev(&[6, 4])], 64).unwrap();
        assert_eq!(r, BruteIndex::Finite(20));
    }

    #[test]
    fn ring_cusp() {
        let a = ideal(&[&[2, 0], &[0, 3]]);
        let p = newton_polyhedron(&a);
        let r = reduced_ring_check(&a, &p, 4, SearchBox::new(10).unwrap(), 24).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.nilpotent_classes > 0 && r.tight_products > 0);
    }

    #[test]
    fn ring_two_facets() {
        let a = ideal(&[&[3, 0], &[1, 1], &[0, 3]]);
        let p = newton_polyhedron(&a);
        let r = reduced_ring_check(&a, &p, 3, SearchBox::new(6).unwrap(), default_nilpotency_exponent(&p, 3)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}
