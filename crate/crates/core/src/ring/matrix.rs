use std::fmt;

use itertools::Itertools;

use super::element::RingElement;
use super::spec::RingSpec;
use crate::error::{Error, Result};

/// Default largest square size accepted by [`RingMatrix::det`].
pub const DEFAULT_DET_CAP: usize = 10;

/// A dense matrix over a [`RingSpec`] ring.
///
/// `declared_rows`/`declared_cols` are the `t` and `s` used by elementary ideals:
/// the matrix stands for an infinite matrix whose rows past `declared_rows` are zero.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMatrix {
    spec: RingSpec,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
    declared_rows: usize,
    declared_cols: usize,
}

impl RingMatrix {
    pub fn zeros(spec: &RingSpec, rows: usize, cols: usize) -> Self {
        RingMatrix {
            spec: spec.clone(),
            rows,
            cols,
            entries: vec![RingElement::zero(spec); rows * cols],
            declared_rows: rows,
            declared_cols: cols,
        }
    }

    pub fn identity(spec: &RingSpec, n: usize) -> Self {
        let mut m = RingMatrix::zeros(spec, n, n);
        for i in 0..n {
            m.set(i, i, RingElement::one(spec));
        }
        m
    }

    /// Row-major construction; every entry must share `spec`.
    pub fn from_rows(spec: &RingSpec, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::InvalidArgument("ragged matrix rows".into()));
            }
            for e in row {
                if e.spec() != spec {
                    return Err(Error::SpecMismatch);
                }
                entries.push(e);
            }
        }
        Ok(RingMatrix {
            spec: spec.clone(),
            rows: nrows,
            cols: ncols,
            entries,
            declared_rows: nrows,
            declared_cols: ncols,
        })
    }

    /// Sets the logical column count `s`; must equal the stored column count.
    pub fn with_declared(mut self, declared_rows: usize, declared_cols: usize) -> Self {
        assert!(declared_rows <= self.rows.max(declared_rows));
        assert_eq!(
            declared_cols, self.cols,
            "declared columns must match stored columns"
        );
        self.declared_rows = declared_rows;
        self.declared_cols = declared_cols;
        self
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn declared_rows(&self) -> usize {
        self.declared_rows
    }

    pub fn declared_cols(&self) -> usize {
        self.declared_cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RingElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: RingElement) {
        value.assert_same_spec(&self.entries[r * self.cols + c]);
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[RingElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> RingMatrix {
        let mut out = RingMatrix::zeros(&self.spec, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.entries[i * cols.len() + j] = self.get(r, c).clone();
            }
        }
        out
    }

    pub fn det(&self) -> Result<RingElement> {
        self.det_with_cap(DEFAULT_DET_CAP)
    }

    /// Division-free determinant by cofactor expansion memoized over column subsets.
    pub fn det_with_cap(&self, cap: usize) -> Result<RingElement> {
        if self.rows != self.cols {
            return Err(Error::InvalidArgument(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n > cap {
            return Err(Error::DeterminantTooLarge { size: n, cap });
        }
        if n == 0 {
            return Ok(RingElement::one(&self.spec));
        }
        // minors[mask] is the determinant of rows 0..popcount(mask) and the columns in mask.
        let mut minors: Vec<RingElement> = vec![RingElement::zero(&self.spec); 1 << n];
        minors[0] = RingElement::one(&self.spec);
        let mut masks: Vec<usize> = (1..(1usize << n)).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = mask.count_ones() as usize - 1;
            let mut acc = RingElement::zero(&self.spec);
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let entry = self.get(row, col);
                let rest = &minors[mask ^ (1 << col)];
                if entry.is_zero() || rest.is_zero() {
                    continue;
                }
                let above = (mask >> (col + 1)).count_ones();
                let term = entry * rest;
                acc = if above % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            minors[mask] = acc;
        }
        Ok(minors.pop().unwrap())
    }

    /// All `q x q` minors over the first `declared_rows` rows and all columns,
    /// ordered lexicographically by (row subset, column subset).
    pub fn minors(&self, q: usize) -> Result<Vec<RingElement>> {
        let rows = self.declared_rows.min(self.rows);
        if q == 0 {
            return Ok(vec![RingElement::one(&self.spec)]);
        }
        if q > rows || q > self.cols {
            return Ok(Vec::new());
        }
        if q > DEFAULT_DET_CAP {
            return Err(Error::DeterminantTooLarge {
                size: q,
                cap: DEFAULT_DET_CAP,
            });
        }
        let mut out = Vec::new();
        for rs in (0..rows).combinations(q) {
            for cs in (0..self.cols).combinations(q) {
                out.push(self.submatrix(&rs, &cs).det()?);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(
                "matrix dimensions do not chain".into(),
            ));
        }
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = RingMatrix::zeros(&self.spec, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = RingElement::zero(&self.spec);
                for k in 0..self.cols {
                    acc = &acc + &(self.get(i, k) * other.get(k, j));
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(RingElement::is_zero)
    }

    /// Removes unit-monomial pivots and zero rows without changing any elementary ideal.
    ///
    /// A pivot at `(i, j)` clears column `j` with row operations; the pivot row and
    /// column then split off as a `1` block. Each pivot lowers both `s` and `t` by one.
    pub fn reduce_unit_pivots(&self) -> RingMatrix {
        let mut m = self.clone();
        m.rows = m.declared_rows.min(m.rows);
        m.entries.truncate(m.rows * m.cols);
        loop {
            let live: Vec<usize> = (0..m.rows).filter(|&r| !m.is_zero_row(r)).collect();
            if live.len() != m.rows {
                m = m.submatrix(&live, &(0..m.cols).collect::<Vec<_>>());
            }
            let pivot = (0..m.rows)
                .flat_map(|r| (0..m.cols).map(move |c| (r, c)))
                .filter(|&(r, c)| m.get(r, c).is_unit_monomial())
                .min_by_key(|&(r, c)| {
                    let col_fill = (0..m.rows).filter(|&k| !m.get(k, c).is_zero()).count();
                    let row_fill = m.row(r).iter().filter(|e| !e.is_zero()).count();
                    (col_fill * row_fill, r, c)
                });
            let Some((pr, pc)) = pivot else { break };
            let inv = m.get(pr, pc).unit_inverse().unwrap();
            let pivot_row: Vec<RingElement> = m.row(pr).iter().map(|e| e * &inv).collect();
            let mut next = RingMatrix::zeros(&m.spec, m.rows - 1, m.cols - 1);
            let mut out_r = 0;
            for r in 0..m.rows {
                if r == pr {
                    continue;
                }
                let factor = m.get(r, pc).clone();
                let mut out_c = 0;
                for (c, pivot) in pivot_row.iter().enumerate() {
                    if c == pc {
                        continue;
                    }
                    let v = if factor.is_zero() {
                        m.get(r, c).clone()
                    } else {
                        m.get(r, c) - &(&factor * pivot)
                    };
                    next.entries[out_r * next.cols + out_c] = v;
                    out_c += 1;
                }
                out_r += 1;
            }
            m = next;
        }
        m.declared_rows = m.rows;
        m.declared_cols = m.cols;
        m
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            write!(f, "{}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> RingSpec {
        RingSpec::new(0, vec![]).unwrap()
    }

    fn int_matrix(spec: &RingSpec, rows: &[Vec<i64>]) -> RingMatrix {
        RingMatrix::from_rows(
            spec,
            rows.iter()
                .map(|r| r.iter().map(|&c| RingElement::constant(spec, c)).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Oracle: Leibniz permutation sum over Z.
    fn leibniz(rows: &[Vec<i64>]) -> i64 {
        let n = rows.len();
        (0..n)
            .permutations(n)
            .map(|perm| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                sign * (0..n).map(|i| rows[i][perm[i]]).product::<i64>()
            })
            .sum()
    }

    #[test]
    fn identity_determinant() {
        for spec in [z(), RingSpec::univariate(2, "t", 2).unwrap()] {
            assert!(RingMatrix::identity(&spec, 3).det().unwrap().is_one());
        }
    }

    #[test]
    fn nilpotent_diagonal() {
        let s = RingSpec::univariate(2, "t", 2).unwrap();
        let u = &RingElement::one(&s) + &RingElement::variable(&s, 0);
        let m = RingMatrix::from_rows(
            &s,
            vec![
                vec![u.clone(), RingElement::zero(&s)],
                vec![RingElement::zero(&s), u],
            ],
        )
        .unwrap();
        assert!(m.det().unwrap().is_zero());
    }

    #[test]
    fn det_cap() {
        let m = RingMatrix::identity(&z(), 11);
        assert_eq!(
            m.det(),
            Err(Error::DeterminantTooLarge { size: 11, cap: 10 })
        );
        assert!(m.det_with_cap(11).unwrap().is_one());
    }

    #[test]
    fn minors_examples() {
        let s = RingSpec::univariate(2, "t", 0).unwrap();
        let zero = RingElement::zero(&s);
        let one = RingElement::one(&s);
        let u = &one + &RingElement::variable(&s, 0);
        let m = RingMatrix::from_rows(
            &s,
            vec![
                vec![zero.clone(), zero.clone(), u.clone(), zero.clone()],
                vec![zero.clone(), one.clone(), zero.clone(), zero.clone()],
            ],
        )
        .unwrap();
        assert!(m.minors(3).unwrap().is_empty());
        let two = m.minors(2).unwrap();
        assert_eq!(two.len(), 6);
        // Column subsets in order {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
        assert_eq!(two[3], u);
        assert_eq!(two.iter().filter(|e| !e.is_zero()).count(), 1);
        let row =
            RingMatrix::from_rows(&s, vec![vec![one.clone(), u.clone(), zero.clone()]]).unwrap();
        assert_eq!(row.minors(1).unwrap(), vec![one, u, zero]);
    }

    #[test]
    fn unit_pivot_reduction_keeps_a_row_of_units() {
        let s = RingSpec::univariate(0, "t", 0).unwrap();
        let t = RingElement::variable(&s, 0);
        let one = RingElement::one(&s);
        let two = RingElement::constant(&s, 2);
        let m = RingMatrix::from_rows(
            &s,
            vec![vec![t.clone(), two.clone()], vec![one.clone(), two.clone()]],
        )
        .unwrap();
        let r = m.reduce_unit_pivots();
        assert_eq!((r.rows(), r.cols()), (1, 1));
        assert_eq!(
            r.get(0, 0).unit_normalized(),
            m.det().unwrap().unit_normalized()
        );
    }

    proptest! {
        #[test]
        fn det_matches_leibniz(n in 1usize..=5, seed in prop::collection::vec(-4i64..=4, 25)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| seed[i * 5..i * 5 + n].to_vec()).collect();
            let d = int_matrix(&z(), &rows).det().unwrap();
            prop_assert_eq!(d, RingElement::constant(&z(), leibniz(&rows)));
        }

        #[test]
        fn det_is_multiplicative_mod_p(a in prop::collection::vec(0i64..5, 9), b in prop::collection::vec(0i64..5, 9)) {
            let s = RingSpec::univariate(5, "t", 3).unwrap();
            let mk = |v: &[i64]| RingMatrix::from_rows(&s, (0..3).map(|i| (0..3).map(|j| {
                RingElement::from_terms(&s, [(vec![0], v[i * 3 + j]), (vec![(i + j) as i64], v[(i * 3 + j + 1) % 9])])
            }).collect()).collect()).unwrap();
            let (ma, mb) = (mk(&a), mk(&b));
            let lhs = ma.mul(&mb).unwrap().det().unwrap();
            let rhs = &ma.det().unwrap() * &mb.det().unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
