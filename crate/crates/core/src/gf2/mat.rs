use std::fmt;
use std::ops::{Add, Mul};

use super::bits;
use super::echelon::Echelon;
use super::vec::BinVec;
use crate::error::{Error, Result};

/// Dense row-major bit-packed matrix over GF(2).
///
/// Each row occupies `stride` words; bits past `cols` are kept zero so that
/// word-level comparisons and popcounts are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinMat {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BinMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = bits::words_for(cols);
        Self {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Stacks vectors as rows. All vectors must share `cols` length.
    pub fn from_rows(cols: usize, rows: &[BinVec]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row {i} has length {} != {cols}", r.len());
            m.row_mut(i).copy_from_slice(r.words());
        }
        m
    }

    /// Parses rows written as 0/1 strings, e.g. `["110", "011"]`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let vecs = rows.iter().map(|s| BinVec::parse01(s)).collect::<Result<Vec<_>>>()?;
        let cols = vecs.first().map_or(0, BinVec::len);
        if vecs.iter().any(|v| v.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Self::from_rows(cols, &vecs))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        bits::get(self.row(r), c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "({r},{c}) outside {}x{}", self.rows, self.cols);
        bits::set(self.row_mut(r), c, value);
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        assert!(r < self.rows && c < self.cols);
        self.row_mut(r)[c / 64] ^= 1 << (c % 64);
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row_vec(&self, r: usize) -> BinVec {
        BinVec::from_words(self.cols, self.row(r).to_vec())
    }

    pub fn row_vecs(&self) -> Vec<BinVec> {
        (0..self.rows).map(|r| self.row_vec(r)).collect()
    }

    pub fn col_vec(&self, c: usize) -> BinVec {
        BinVec::from_bits((0..self.rows).map(|r| self.get(r, c)))
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row(&mut self, dst: usize, src: usize) {
        if dst == src {
            self.row_mut(dst).fill(0);
            return;
        }
        let s = self.stride;
        let (a, b) = if dst < src {
            let (lo, hi) = self.words.split_at_mut(src * s);
            (&mut lo[dst * s..(dst + 1) * s], &hi[..s])
        } else {
            let (lo, hi) = self.words.split_at_mut(dst * s);
            (&mut hi[..s], &lo[src * s..(src + 1) * s])
        };
        bits::xor_into(a, b);
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.words.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn weight(&self) -> usize {
        bits::popcount(&self.words)
    }

    pub fn row_weight(&self, r: usize) -> usize {
        bits::popcount(self.row(r))
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for r in 0..self.rows {
            for c in bits::ones(self.row(r)) {
                w[c] += 1;
            }
        }
        w
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn transpose(&self) -> BinMat {
        let mut t = BinMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in bits::ones(self.row(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &BinMat) -> Result<BinMat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BinMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in bits::ones(self.row(r)) {
                let (dst, src) = (r * out.stride, k * other.stride);
                bits::xor_into(&mut out.words[dst..dst + out.stride], &other.words[src..src + other.stride]);
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &BinMat) -> Result<BinMat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        bits::xor_into(&mut out.words, &other.words);
        Ok(out)
    }

    pub fn add_assign(&mut self, other: &BinMat) {
        assert!(self.rows == other.rows && self.cols == other.cols, "shape mismatch in add");
        bits::xor_into(&mut self.words, &other.words);
    }

    pub fn mul_vec(&self, v: &BinVec) -> BinVec {
        assert_eq!(self.cols, v.len(), "matrix-vector length mismatch");
        BinVec::from_bits((0..self.rows).map(|r| bits::dot(self.row(r), v.words())))
    }

    pub fn hstack(&self, other: &BinMat) -> Result<BinMat> {
        if self.rows != other.rows {
            return Err(Error::Dimension(format!(
                "hstack of {} and {} rows",
                self.rows, other.rows
            )));
        }
        let mut out = BinMat::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            let row = out.row_mut(r);
            bits::xor_shifted(row, self.row(r), self.cols, 0);
            bits::xor_shifted(row, other.row(r), other.cols, self.cols);
        }
        Ok(out)
    }

    pub fn vstack(&self, other: &BinMat) -> Result<BinMat> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut out = self.clone();
        out.rows += other.rows;
        out.words.extend_from_slice(&other.words);
        Ok(out)
    }

    /// Kronecker product; row `(i, k)` maps to `i * b.rows + k`.
    pub fn kron(&self, b: &BinMat) -> BinMat {
        let mut out = BinMat::zeros(self.rows * b.rows, self.cols * b.cols);
        for i in 0..self.rows {
            let cols: Vec<usize> = bits::ones(self.row(i)).collect();
            if cols.is_empty() {
                continue;
            }
            for k in 0..b.rows {
                let r = i * b.rows + k;
                let src = b.row(k);
                let stride = out.stride;
                let dst = &mut out.words[r * stride..(r + 1) * stride];
                for &j in &cols {
                    bits::xor_shifted(dst, src, b.cols, j * b.cols);
                }
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> BinMat {
        let mut out = BinMat::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.row_mut(i).copy_from_slice(self.row(r));
        }
        out
    }

    pub fn select_cols(&self, cols: &[usize]) -> BinMat {
        let mut out = BinMat::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            for (j, &c) in cols.iter().enumerate() {
                if bits::get(row, c) {
                    out.set(r, j, true);
                }
            }
        }
        out
    }

    /// Column `perm[j]` of `self` becomes column `j` of the result.
    pub fn permute_cols(&self, perm: &[usize]) -> BinMat {
        assert_eq!(perm.len(), self.cols);
        self.select_cols(perm)
    }

    /// Row-reduced echelon form (leftmost pivot, topmost row on ties).
    pub fn echelon(&self) -> Echelon {
        Echelon::new(self.clone())
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the right null space `{v : M v = 0}` in reduced echelon form.
    pub fn kernel_basis(&self) -> BinMat {
        let ech = self.echelon();
        let basis = ech.kernel_vectors();
        BinMat::from_rows(self.cols, &basis).echelon().into_reduced()
    }

    pub fn row_space_contains(&self, v: &BinVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self.echelon().contains(v))
    }

    /// Inverse of a square nonsingular matrix.
    pub fn inverse(&self) -> Option<BinMat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = self.hstack(&BinMat::identity(n)).ok()?;
        let ech = aug.echelon();
        if ech.pivots().len() < n || ech.pivots()[n - 1] != n - 1 {
            return None;
        }
        let red = ech.reduced();
        let cols: Vec<usize> = (n..2 * n).collect();
        Some(red.select_rows(&(0..n).collect::<Vec<_>>()).select_cols(&cols))
    }

    /// Circulant permutation with (0-based) row `k` holding its one at column `(k + shift) mod c`.
    pub fn circshift_perm(c: usize, shift: i64) -> BinMat {
        let mut m = BinMat::zeros(c, c);
        if c == 0 {
            return m;
        }
        let s = shift.rem_euclid(c as i64) as usize;
        for k in 0..c {
            m.set(k, (k + s) % c, true);
        }
        m
    }

    /// Boundary-shift permutation: 0-based row `k` holds its one at column `(k * chi) mod c`.
    pub fn skew_perm(c: usize, chi: usize) -> Result<BinMat> {
        if c == 0 || gcd(c, chi) != 1 {
            return Err(Error::Commensurate { c, chi });
        }
        let mut m = BinMat::zeros(c, c);
        for k in 0..c {
            m.set(k, (k * chi) % c, true);
        }
        Ok(m)
    }

    pub fn is_permutation(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| self.row_weight(r) == 1)
            && self.col_weights().iter().all(|&w| w == 1)
    }

    /// Rows as 0/1 strings.
    pub fn to_strings(&self) -> Vec<String> {
        (0..self.rows).map(|r| self.row_vec(r).to_string01()).collect()
    }
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Debug for BinMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinMat {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row_vec(r))?;
        }
        Ok(())
    }
}

impl Mul for &BinMat {
    type Output = BinMat;

    /// Panics on incompatible shapes; see [`BinMat::checked_mul`].
    fn mul(self, rhs: &BinMat) -> BinMat {
        self.checked_mul(rhs).unwrap()
    }
}

impl Add for &BinMat {
    type Output = BinMat;

    fn add(self, rhs: &BinMat) -> BinMat {
        self.checked_add(rhs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circ3() -> BinMat {
        BinMat::from_strs(&["110", "011", "101"]).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BinMat::identity(3).rank(), 3);
        assert_eq!(circ3().rank(), 2);
        assert_eq!(BinMat::zeros(0, 5).rank(), 0);
        assert_eq!(BinMat::zeros(4, 0).rank(), 0);
    }

    #[test]
    fn row_space_membership() {
        let id = BinMat::identity(2);
        assert!(id.row_space_contains(&BinVec::parse01("11").unwrap()).unwrap());
        let single = BinMat::from_strs(&["101"]).unwrap();
        assert!(!single.row_space_contains(&BinVec::parse01("010").unwrap()).unwrap());
        assert!(!circ3().row_space_contains(&BinVec::parse01("111").unwrap()).unwrap());
        assert!(matches!(
            id.row_space_contains(&BinVec::zeros(3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(BinMat::identity(3).kernel_basis().rows(), 0);
        let k = circ3().kernel_basis();
        assert_eq!(k.to_strings(), vec!["111"]);
        let k = BinMat::from_strs(&["11"]).unwrap().kernel_basis();
        assert_eq!(k.to_strings(), vec!["11"]);
        assert_eq!(BinMat::zeros(0, 3).kernel_basis().rows(), 3);
    }

    #[test]
    fn kron_examples() {
        let m = circ3();
        assert_eq!(BinMat::identity(1).kron(&m), m);
        assert_eq!(BinMat::identity(2).kron(&BinMat::identity(3)), BinMat::identity(6));
        let row = BinMat::from_strs(&["11"]).unwrap();
        let col = BinMat::from_strs(&["1", "1"]).unwrap();
        assert_eq!(row.kron(&col), BinMat::from_strs(&["11", "11"]).unwrap());
    }

    #[test]
    fn kron_wide_blocks() {
        // 70-column blocks cross word boundaries.
        let a = BinMat::from_strs(&["101"]).unwrap();
        let b = BinMat::from_fn(2, 70, |r, c| (r + c) % 3 == 0);
        let k = a.kron(&b);
        for r in 0..2 {
            for c in 0..210 {
                let expect = a.get(0, c / 70) && b.get(r, c % 70);
                assert_eq!(k.get(r, c), expect, "({r},{c})");
            }
        }
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(BinMat::circshift_perm(3, 0), BinMat::identity(3));
        let s = BinMat::skew_perm(5, 3).unwrap();
        let map: Vec<usize> = (0..5).map(|r| s.row_vec(r).support()[0]).collect();
        assert_eq!(map, vec![0, 3, 1, 4, 2]);
        for c in 1..10 {
            assert_eq!(BinMat::skew_perm(c, 1).unwrap(), BinMat::identity(c));
        }
        assert!(matches!(BinMat::skew_perm(6, 3), Err(Error::Commensurate { c: 6, chi: 3 })));
        assert_eq!(BinMat::circshift_perm(4, -1), BinMat::circshift_perm(4, 3));
    }

    #[test]
    fn skew_perm_matches_one_based_delta() {
        // (S)_{kj} = delta_{j-k, (k-1)(chi-1) mod c}, indices 1-based.
        for c in 1..12usize {
            for chi in 1..=c {
                if gcd(c, chi) != 1 {
                    continue;
                }
                let s = BinMat::skew_perm(c, chi).unwrap();
                for k in 1..=c {
                    for j in 1..=c {
                        let lhs = (j as i64 - k as i64).rem_euclid(c as i64);
                        let rhs = (((k - 1) * (chi - 1)) % c) as i64;
                        assert_eq!(s.get(k - 1, j - 1), lhs == rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = BinMat::from_strs(&["110", "011", "001"]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, BinMat::identity(3));
        assert!(circ3().inverse().is_none());
    }

    #[test]
    fn hstack_vstack_shapes() {
        let a = BinMat::from_strs(&["10", "01"]).unwrap();
        let b = BinMat::from_strs(&["1", "1"]).unwrap();
        assert_eq!(a.hstack(&b).unwrap().to_strings(), vec!["101", "011"]);
        assert!(a.vstack(&b).is_err());
        assert_eq!(a.vstack(&a).unwrap().rows(), 4);
    }
}
