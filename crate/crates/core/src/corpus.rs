//! Fixed test corpora: a hand-picked list of small monomial ideals and the
//! exhaustive list of small diagonal exponent vectors.

use crate::homogeneous::DiagonalData;
use crate::polyhedron::MonomialIdeal;

const IDEALS: &[(&str, &[&[i64]])] = &[
    ("x^2", &[&[2]]),
    ("x^3", &[&[3]]),
    ("x^2, y^3", &[&[2, 0], &[0, 3]]),
    ("x^2, xy, y^2", &[&[2, 0], &[1, 1], &[0, 2]]),
    ("x^3, xy, y^3", &[&[3, 0], &[1, 1], &[0, 3]]),
    ("x^2y, xy^3", &[&[2, 1], &[1, 3]]),
    ("x^4, x^2y, y^3", &[&[4, 0], &[2, 1], &[0, 3]]),
    ("x^5, x^2y^2, y^5", &[&[5, 0], &[2, 2], &[0, 5]]),
    ("x^6, x^3y, y^4", &[&[6, 0], &[3, 1], &[0, 4]]),
    ("x^3, y^4", &[&[3, 0], &[0, 4]]),
    ("x^4, xy, y^6", &[&[4, 0], &[1, 1], &[0, 6]]),
    ("x^2, y^5", &[&[2, 0], &[0, 5]]),
    ("x^6, y^6", &[&[6, 0], &[0, 6]]),
    ("x^4, x^3y, xy^3, y^4", &[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]),
    ("x^6, x^4y, x^2y^3, y^5", &[&[6, 0], &[4, 1], &[2, 3], &[0, 5]]),
    ("x^3y, y^2", &[&[3, 1], &[0, 2]]),
    ("x, y, z", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
    ("x^2, y^2, z^2", &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]),
    ("x^2, y^3, z^3", &[&[2, 0, 0], &[0, 3, 0], &[0, 0, 3]]),
    ("xy, yz, xz", &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
    ("x^3, y^3, z^3, xyz", &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3], &[1, 1, 1]]),
    ("x^2, y^2, z^2, xyz", &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]),
    ("x^3, y^3, z^2, xy", &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 2], &[1, 1, 0]]),
    ("x^2, y^2, z^3", &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]),
    ("x^4, y^4, z^2, x^2y^2", &[&[4, 0, 0], &[0, 4, 0], &[0, 0, 2], &[2, 2, 0]]),
];

/// The 25 named ideals.
pub fn ideal_corpus() -> Vec<(String, MonomialIdeal)> {
    IDEALS
        .iter()
        .map(|(name, rows)| {
            let ideal = MonomialIdeal::from_rows(rows).expect("corpus ideals are valid");
            (name.to_string(), ideal)
        })
        .collect()
}

/// Every `m` with `1 ≤ n ≤ 3` and `1 ≤ m_i ≤ 6`, in lexicographic order
/// by length then entries.
pub fn diagonal_corpus() -> Vec<DiagonalData> {
    let mut out = Vec::new();
    for n in 1..=3u32 {
        for code in 0..6u64.pow(n) {
            let m = (0..n).map(|i| code / 6u64.pow(n - 1 - i) % 6 + 1).collect();
            out.push(DiagonalData::new(m).expect("positive exponents"));
        }
    }
    out
}

/// The members of [`diagonal_corpus`] with every `m_i ≥ 2`.
pub fn fermat_corpus() -> Vec<DiagonalData> {
    diagonal_corpus().into_iter().filter(DiagonalData::is_fermat).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedron::newton_polyhedron;

    #[test]
    fn shapes() {
        let ideals = ideal_corpus();
        assert_eq!(ideals.len(), 25);
        for (name, ideal) in &ideals {
            assert!(ideal.n() <= 3 && ideal.generators().len() <= 5, "{name}");
            assert!(ideal.generators().iter().all(|g| g.coords().iter().all(|&a| a <= 6)), "{name}");
            assert!(!newton_polyhedron(ideal).compact_facets().is_empty(), "{name}");
        }
        assert_eq!(diagonal_corpus().len(), 258);
        assert_eq!(fermat_corpus().len(), 155);
    }
}
