/// Iterates the integer points of the box `lo <= x <= hi`, first coordinate
/// fastest. Empty when any `lo[i] > hi[i]`.
pub(crate) struct GridPoints {
    lo: Vec<i64>,
    hi: Vec<i64>,
    current: Option<Vec<i64>>,
}

impl GridPoints {
    pub(crate) fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        let current = lo.iter().zip(&hi).all(|(a, b)| a <= b).then(|| lo.clone());
        GridPoints { lo, hi, current }
    }

    pub(crate) fn cube(n: usize, lo: i64, hi: i64) -> Self {
        Self::new(vec![lo; n], vec![hi; n])
    }
}

impl Iterator for GridPoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut i = 0;
        loop {
            if i == cur.len() {
                self.current = None;
                break;
            }
            if cur[i] < self.hi[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = self.lo[i];
            i += 1;
        }
        Some(out)
    }
}
