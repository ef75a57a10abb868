//! Labelled matrices over an arbitrary carrier ring.
//!
//! Rows and columns are addressed by `i32` labels rather than positions so
//! the same type covers ordinary index sets `1..=n`, signed sets
//! `-n..=n` (with or without 0), and asymmetric submatrices such as a
//! signed block with one boundary row removed.  Entries multiply in the
//! noncommutative carrier, so products respect left/right order.

use std::fmt;

use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::series::Series;

/// Which bilinear form pairs index +i with index -i: the orthogonal one
/// (theta = 1) or the symplectic one (theta_ij = sgn i * sgn j).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairingCase {
    Orthogonal,
    Symplectic,
}

impl PairingCase {
    pub fn theta(self, i: i32, j: i32) -> i64 {
        match self {
            PairingCase::Orthogonal => 1,
            PairingCase::Symplectic => (i.signum() * j.signum()) as i64,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<A: Ring> {
    rows: Vec<i32>,
    cols: Vec<i32>,
    data: Vec<A>, // row-major
}

impl<A: Ring> Mat<A> {
    pub fn zero(rows: Vec<i32>, cols: Vec<i32>) -> Self {
        let data = vec![A::zero(); rows.len() * cols.len()];
        Mat { rows, cols, data }
    }

    pub fn identity(labels: Vec<i32>) -> Self {
        let mut m = Mat::zero(labels.clone(), labels);
        for i in 0..m.rows.len() {
            let ncols = m.cols.len();
            m.data[i * ncols + i] = A::one();
        }
        m
    }

    pub fn from_fn(rows: Vec<i32>, cols: Vec<i32>, mut f: impl FnMut(i32, i32) -> A) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in &rows {
            for &j in &cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn row_labels(&self) -> &[i32] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[i32] {
        &self.cols
    }

    fn rpos(&self, i: i32) -> usize {
        self.rows
            .iter()
            .position(|&r| r == i)
            .unwrap_or_else(|| panic!("row label {} not present in {:?}", i, self.rows))
    }

    fn cpos(&self, j: i32) -> usize {
        self.cols
            .iter()
            .position(|&c| c == j)
            .unwrap_or_else(|| panic!("column label {} not present in {:?}", j, self.cols))
    }

    pub fn get(&self, i: i32, j: i32) -> &A {
        &self.data[self.rpos(i) * self.cols.len() + self.cpos(j)]
    }

    pub fn set(&mut self, i: i32, j: i32, v: A) {
        let p = self.rpos(i) * self.cols.len() + self.cpos(j);
        self.data[p] = v;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        assert_eq!(self.cols, rhs.cols);
        Mat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Mat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product needs matching inner labels");
        let n = self.rows.len();
        let k = self.cols.len();
        let m = rhs.cols.len();
        let mut data = vec![A::zero(); n * m];
        for r in 0..n {
            for t in 0..k {
                let a = &self.data[r * k + t];
                if a.is_zero() {
                    continue;
                }
                for c in 0..m {
                    let b = &rhs.data[t * m + c];
                    if b.is_zero() {
                        continue;
                    }
                    data[r * m + c] = data[r * m + c].add(&a.mul(b));
                }
            }
        }
        Mat { rows: self.rows.clone(), cols: rhs.cols.clone(), data }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Mat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(|a| a.scale(s)).collect(),
        }
    }

    /// Multiply every entry by `a` on the chosen side.
    pub fn scale_elem(&self, a: &A, on_left: bool) -> Self {
        Mat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self
                .data
                .iter()
                .map(|x| if on_left { a.mul(x) } else { x.mul(a) })
                .collect(),
        }
    }

    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> Mat<B> {
        Mat {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            data: self.data.iter().map(&f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols.clone(), self.rows.clone(), |i, j| self.get(j, i).clone())
    }

    /// theta-transpose for signed label sets: (A^t)_{ij} = theta_ij A_{-j,-i}.
    pub fn transpose_theta(&self, case: PairingCase) -> Self {
        assert_eq!(self.rows, self.cols, "theta-transpose needs a square, label-symmetric matrix");
        for &l in &self.rows {
            assert!(
                self.rows.contains(&(-l)),
                "theta-transpose needs a sign-symmetric label set, missing {}",
                -l
            );
        }
        Mat::from_fn(self.rows.clone(), self.cols.clone(), |i, j| {
            let v = self.get(-j, -i).clone();
            if case.theta(i, j) >= 0 {
                v
            } else {
                v.neg()
            }
        })
    }

    pub fn submatrix(&self, rows: &[i32], cols: &[i32]) -> Self {
        Mat::from_fn(rows.to_vec(), cols.to_vec(), |i, j| self.get(i, j).clone())
    }

    pub fn trace(&self) -> A {
        assert_eq!(self.rows, self.cols);
        let mut t = A::zero();
        for &i in &self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// First nonzero entry (labels and debug form), if any.
    pub fn nonzero_witness(&self) -> Option<String> {
        for &i in &self.rows {
            for &j in &self.cols {
                let e = self.get(i, j);
                if !e.is_zero() {
                    return Some(format!("entry ({}, {}): {:?}", i, j, e));
                }
            }
        }
        None
    }
}

/// Matrices of truncated series: the shape every generating matrix T(u),
/// S(u), 1 + E u^{-1}, ... takes in this crate.
pub type SeriesMat<A> = Mat<Series<A>>;

impl<A: Ring> SeriesMat<A> {
    /// Entrywise argument shift u -> u + a.
    pub fn shift_arg(&self, a: &Scalar, want: Option<i64>) -> Self {
        self.map(|s| s.shift_arg(a, want))
    }

    /// Shallowest floor among the entries (None if every entry is exact).
    pub fn common_floor(&self) -> Option<i64> {
        let mut floor = None;
        for s in &self.data {
            floor = crate::series::join_floor(floor, s.floor());
        }
        floor
    }

    /// Entrywise substitution u -> -u.
    pub fn negate_arg(&self) -> Self {
        self.map(|s| s.negate_arg())
    }

    /// Inverse of a series matrix whose u^0 coefficient is the identity,
    /// by the Neumann series sum (1 - (1 - M))^{-1} = sum (1-M)^k.
    ///
    /// `want` is the requested floor; required when the matrix is exact.
    pub fn neumann_inverse(&self, want: Option<i64>) -> Self {
        assert_eq!(self.rows, self.cols);
        let labels = self.rows.clone();
        let mut floor = want;
        for s in &self.data {
            floor = crate::series::join_floor(floor, s.floor());
        }
        let f = floor.expect("inverting an exact series matrix needs a target floor");
        let id: SeriesMat<A> = Mat::from_fn(labels.clone(), labels.clone(), |i, j| {
            if i == j {
                Series::one().truncate_to(f)
            } else {
                Series::zero_mod(f)
            }
        });
        // Check leading coefficient and build N = id - M (strictly negative exponents).
        let n_mat = id.sub(&self.map(|s| s.truncate_to(f)));
        for (idx, s) in n_mat.data.iter().enumerate() {
            if let Some(t) = s.top() {
                assert!(
                    t < 0,
                    "Neumann inverse needs leading identity; entry {} has top exponent {}",
                    idx,
                    t
                );
            }
        }
        let mut acc = id.clone();
        let mut pw = id;
        loop {
            pw = pw.mul(&n_mat).map(|s| s.truncate_to(f));
            if pw.data.iter().all(|s| s.is_zero()) {
                break;
            }
            acc = acc.add(&pw);
        }
        acc
    }

    /// Quasi-determinant |M|_{ij} = ((M^{-1})_{ji})^{-1} for a series matrix
    /// with leading identity.
    pub fn quasidet(&self, i: i32, j: i32, want: Option<i64>) -> Series<A> {
        let inv = self.neumann_inverse(want);
        inv.get(j, i).invert_to(want)
    }
}

impl<A: Ring + fmt::Display> fmt::Display for Mat<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &i in &self.rows {
            write!(f, "[{:>3}] ", i)?;
            for &j in &self.cols {
                write!(f, " ({})", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
