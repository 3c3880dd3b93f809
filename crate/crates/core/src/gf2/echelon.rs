use super::bits;
use super::mat::BinMat;
use super::vec::BinVec;

/// Reduced row echelon form of a matrix.
///
/// The first `rank` rows are the nonzero reduced rows; row `i` has its
/// leading one in column `pivots[i]` and every other row is zero there.
#[derive(Clone, Debug)]
pub struct Echelon {
    mat: BinMat,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(mut mat: BinMat) -> Self {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..mat.cols() {
            if rank == mat.rows() {
                break;
            }
            let Some(p) = (rank..mat.rows()).find(|&r| mat.get(r, col)) else {
                continue;
            };
            mat.swap_rows(rank, p);
            for r in 0..mat.rows() {
                if r != rank && mat.get(r, col) {
                    mat.xor_row(r, rank);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Self { mat, pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn cols(&self) -> usize {
        self.mat.cols()
    }

    /// The full reduced matrix, zero rows included.
    pub fn reduced(&self) -> &BinMat {
        &self.mat
    }

    /// The nonzero reduced rows only.
    pub fn into_reduced(self) -> BinMat {
        let rank = self.rank();
        self.mat.select_rows(&(0..rank).collect::<Vec<_>>())
    }

    /// Reduces `v` against the row space; returns the residual.
    pub fn reduce(&self, v: &BinVec) -> BinVec {
        let mut w = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w.get(p) {
                bits::xor_into(w.words_mut(), self.mat.row(i));
            }
        }
        w
    }

    pub fn contains(&self, v: &BinVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.mat.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.mat.cols()).filter(|&c| !is_pivot[c]).collect()
    }

    /// One null-space vector per free column `f`: `v[f] = 1` and the pivot
    /// coordinates read off column `f` of the reduced rows.
    pub fn kernel_vectors(&self) -> Vec<BinVec> {
        let n = self.mat.cols();
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = BinVec::zeros(n);
                v.set(f, true);
                for (i, &p) in self.pivots.iter().enumerate() {
                    if self.mat.get(i, f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}

/// Incrementally grown span, kept in reduced form.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    len: usize,
    rows: Vec<BinVec>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_matrix(m: &BinMat) -> Self {
        let mut s = Self::new(m.cols());
        for r in 0..m.rows() {
            s.insert(&m.row_vec(r));
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[BinVec] {
        &self.rows
    }

    pub fn reduce(&self, v: &BinVec) -> BinVec {
        let mut w = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w.get(p) {
                w.xor_assign(row);
            }
        }
        w
    }

    pub fn contains(&self, v: &BinVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns `false` if it was already contained.
    pub fn insert(&mut self, v: &BinVec) -> bool {
        assert_eq!(v.len(), self.len);
        let w = self.reduce(v);
        let Some(p) = bits::ones(w.words()).next() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&w);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }
}
