use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use super::bitvec::{words_for, BitVec, WORD};
use super::LinalgError;

/// Dense matrix over F₂ with bit-packed rows.
///
/// Row `i` occupies `stride` consecutive words of `data`; column `j` of that
/// row is bit `j % 64` of word `j / 64`. Unused high bits are kept at zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of 0/1 entries.
    ///
    /// Panics if the rows are ragged.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &b) in row.iter().enumerate() {
                m.set(i, j, b != 0);
            }
        }
        m
    }

    /// Square matrix whose row `i` is the low `n` bits of `rows[i]`
    /// (column `j` is bit `j`).
    pub fn from_row_masks(n: usize, rows: &[u64]) -> Self {
        assert!(n <= WORD);
        let mut m = Self::zeros(rows.len(), n);
        let mask = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &r) in rows.iter().enumerate() {
            m.data[i * m.stride] = r & mask;
        }
        m
    }

    pub fn from_columns(cols: &[BitVec]) -> Self {
        let rows = cols.first().map_or(0, BitVec::len);
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    pub fn from_row_vecs(rows: &[BitVec]) -> Self {
        let cols = rows.first().map_or(0, BitVec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length mismatch");
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Diagonal matrix with the given diagonal.
    pub fn diagonal(diag: &BitVec) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for i in diag.ones() {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / WORD] >> (j % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// First word of row `i`; for matrices with at most 64 columns this is the
    /// whole row.
    #[inline]
    pub fn row_mask(&self, i: usize) -> u64 {
        if self.stride == 0 {
            0
        } else {
            self.data[i * self.stride]
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_bits((0..self.rows).map(|i| self.get(i, j)))
    }

    /// `row[dst] ^= row[src]`.
    #[inline]
    pub(crate) fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, x) in b.iter_mut().zip(a) {
            *d ^= x;
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.data.swap(a * s + k, b * s + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| self.row(i).ones().all(|j| j == i))
    }

    pub fn diag(&self) -> BitVec {
        BitVec::from_bits((0..self.rows.min(self.cols)).map(|i| self.get(i, i)))
    }

    /// Product over F₂.
    pub fn mat_mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mat_mul",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let row = self.row_words(i);
            let dst = i * out.stride;
            for (wi, &w) in row.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let k = wi * WORD + w.trailing_zeros() as usize;
                    w &= w - 1;
                    let src = rhs.row_words(k);
                    for (d, s) in out.data[dst..dst + out.stride].iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mat_add(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "mat_add",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &BitVec) -> BitVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        BitVec::from_bits((0..self.rows).map(|i| {
            self.row_words(i)
                .iter()
                .zip(v.words())
                .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
                & 1
                == 1
        }))
    }

    /// `self^exp` by square-and-multiply.
    pub fn pow(&self, mut exp: u64) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Reduces a copy to row echelon form (not reduced) and returns its rank.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce(false).len()
    }

    /// In-place Gaussian elimination; returns pivot columns in order.
    ///
    /// Pivot rows are chosen as the lowest-index candidate. With `reduced`
    /// the result is the reduced row echelon form.
    pub(crate) fn row_reduce(&mut self, reduced: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            let start = if reduced { 0 } else { r + 1 };
            for i in start..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row echelon form of a copy.
    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        m.row_reduce(true);
        m
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Inverse over F₂ by Gauss–Jordan elimination on `[a | I]`.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Self::zeros(0, 0));
        }
        let mut aug = self.hstack(&Self::identity(n))?;
        let pivots = aug.row_reduce(true);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::NotInvertible);
        }
        Ok(aug.submatrix(0, n, n, n))
    }

    /// Copy of the `rows × cols` block starting at (`r0`, `c0`).
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "submatrix out of range");
        let mut out = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.get(r0 + i, c0 + j) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.rows != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "hstack",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                out.set(i, j, true);
            }
            for j in rhs.row(i).ones() {
                out.set(i, self.cols + j, true);
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                lhs: (self.rows, self.cols),
                rhs: (rhs.rows, rhs.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Ok(Self { rows: self.rows + rhs.rows, cols: self.cols, stride: self.stride, data })
    }

    /// Assembles `[[a, b], [c, d]]` from four blocks.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self, LinalgError> {
        a.hstack(b)?.vstack(&c.hstack(d)?)
    }

    /// Splits a `2m × 2m` matrix into its four `m × m` blocks.
    pub fn blocks(&self) -> [Self; 4] {
        assert!(self.is_square() && self.rows.is_multiple_of(2), "blocks needs an even square matrix");
        let m = self.rows / 2;
        [
            self.submatrix(0, 0, m, m),
            self.submatrix(0, m, m, m),
            self.submatrix(m, 0, m, m),
            self.submatrix(m, m, m, m),
        ]
    }

    /// Row-major bits with entry (0,0) first.
    pub fn lex_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.rows).flat_map(move |i| (0..self.cols).map(move |j| self.get(i, j)))
    }

    /// Lexicographic comparison of the row-major bit strings, (0,0) most
    /// significant.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.lex_bits().cmp(other.lex_bits()))
    }

    /// Entries as nested `0/1` rows.
    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| u8::from(self.get(i, j))).collect()).collect()
    }

    /// Row-major flattening into a single vector of length `rows · cols`.
    pub fn flatten(&self) -> BitVec {
        BitVec::from_bits(self.lex_bits())
    }

    /// Upper triangle (diagonal included) in row-major order.
    pub fn upper_triangle(&self) -> BitVec {
        assert!(self.is_square());
        let n = self.rows;
        BitVec::from_bits((0..n).flat_map(move |i| (i..n).map(move |j| self.get(i, j))))
    }

    /// Inverse of [`BitMatrix::upper_triangle`]: the symmetric matrix with
    /// the given upper triangle.
    pub fn symmetric_from_upper(n: usize, upper: &BitVec) -> Self {
        assert_eq!(upper.len(), n * (n + 1) / 2, "wrong upper-triangle length");
        let mut m = Self::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                if upper.get(k) {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
                k += 1;
            }
        }
        m
    }
}

impl Mul for &BitMatrix {
    type Output = BitMatrix;

    /// Panics on dimension mismatch; use [`BitMatrix::mat_mul`] for a checked product.
    fn mul(self, rhs: &BitMatrix) -> BitMatrix {
        self.mat_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &BitMatrix {
    type Output = BitMatrix;

    fn add(self, rhs: &BitMatrix) -> BitMatrix {
        self.mat_add(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, " ")?;
            }
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

/// Fixture text format: one row per line, characters `0`/`1`.
impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for BitMatrix {
    type Err = LinalgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for (line_no, line) in s.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            let row = line
                .chars()
                .map(|c| match c {
                    '0' => Ok(0u8),
                    '1' => Ok(1u8),
                    other => Err(LinalgError::Parse(format!(
                        "line {}: unexpected character {other:?}",
                        line_no + 1
                    ))),
                })
                .collect::<Result<Vec<u8>, _>>()?;
            if let Some(first) = rows.first() {
                let first: &Vec<u8> = first;
                if first.len() != row.len() {
                    return Err(LinalgError::Parse(format!(
                        "line {}: expected {} columns, found {}",
                        line_no + 1,
                        first.len(),
                        row.len()
                    )));
                }
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(LinalgError::Parse("empty matrix".into()));
        }
        Ok(Self::from_rows(&rows))
    }
}
