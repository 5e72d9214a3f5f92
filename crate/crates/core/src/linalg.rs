//! Exact linear algebra over the rationals: dense matrices, row spaces
//! with coordinate bookkeeping, and multiplicative span closure.
//!
//! Everything here is deterministic. Row reduction always picks the first
//! nonzero column as pivot and basis vectors are kept in insertion order,
//! so repeated runs produce identical bases and identical structure
//! constants.

use crate::rat::Rat;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Dense matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        let mut m = QMat::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn scale(&self, c: &Rat) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> QMat {
        let mut m = QMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    /// Rows flattened into one vector; the coordinates a span closure works in.
    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }

    /// Direct sum of square blocks along the diagonal.
    pub fn block_diag(blocks: &[QMat]) -> QMat {
        let n: usize = blocks.iter().map(|b| b.nrows()).sum();
        let mut m = QMat::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            assert!(b.is_square());
            for i in 0..b.nrows() {
                for j in 0..b.ncols() {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.nrows();
        }
        m
    }

    /// Apply a univariate function entrywise to the diagonal of a diagonal
    /// matrix. Panics if an off-diagonal entry is nonzero.
    pub fn map_diagonal(&self, f: impl Fn(&Rat) -> Rat) -> QMat {
        assert!(self.is_square());
        let mut m = QMat::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i != j {
                    assert!(self[(i, j)].is_zero(), "map_diagonal on a non-diagonal matrix");
                }
            }
            m[(i, i)] = f(&self[(i, i)]);
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        for i in 0..self.rows {
            let row: Vec<Rat> = (0..self.cols).map(|j| self[(i, j)].clone()).collect();
            space.insert(&row);
        }
        space.rank()
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &QMat {
    type Output = QMat;
    fn add(self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &QMat {
    type Output = QMat;
    fn sub(self, rhs: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &QMat {
    type Output = QMat;
    fn mul(self, rhs: &QMat) -> QMat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = QMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }
}

impl fmt::Display for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::rat::rat_to_string(&self[(i, j)]))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built row space in reduced echelon form.
///
/// Alongside each echelon row it tracks the combination of *kept* inserted
/// vectors that produced it, so arbitrary vectors can later be expressed in
/// the kept basis (this is how structure constants are extracted).
#[derive(Debug, Clone)]
pub struct RowSpace {
    ambient: usize,
    /// (pivot column, echelon row, combination over kept vectors)
    rows: Vec<(usize, Vec<Rat>, Vec<Rat>)>,
    kept: usize,
}

impl RowSpace {
    pub fn new(ambient: usize) -> Self {
        RowSpace {
            ambient,
            rows: Vec::new(),
            kept: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut residue = v.to_vec();
        let mut combo = vec![Rat::zero(); self.kept];
        for (pivot, row, rcombo) in &self.rows {
            let c = residue[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let delta = &c * &row[j];
                residue[j] -= delta;
            }
            for (slot, rc) in combo.iter_mut().zip(rcombo) {
                *slot += &c * rc;
            }
        }
        (residue, combo)
    }

    /// True iff v already lies in the span.
    pub fn contains(&self, v: &[Rat]) -> bool {
        let (residue, _) = self.reduce(v);
        residue.iter().all(|x| x.is_zero())
    }

    /// Coordinates of v over the kept basis vectors, or None if v is
    /// outside the span.
    pub fn express(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let (residue, combo) = self.reduce(v);
        if residue.iter().all(|x| x.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }

    /// Inserts v. Returns true (and keeps v as a basis vector) iff it was
    /// independent of the current span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let (mut residue, combo) = self.reduce(v);
        let pivot = match residue.iter().position(|x| !x.is_zero()) {
            None => return false,
            Some(p) => p,
        };
        // v is kept: extend every stored combination with a zero slot,
        // record residue = v - sum(combo_i * kept_i)
        for (_, _, rcombo) in &mut self.rows {
            rcombo.push(Rat::zero());
        }
        let mut new_combo: Vec<Rat> = combo.iter().map(|c| -c).collect();
        new_combo.push(Rat::one());
        self.kept += 1;

        // normalize pivot to 1
        let inv = residue[pivot].clone().recip();
        for x in residue.iter_mut() {
            *x *= &inv;
        }
        for c in new_combo.iter_mut() {
            *c *= &inv;
        }
        // eliminate the new pivot column from existing rows (keeps RREF)
        for (_, row, rcombo) in &mut self.rows {
            let c = row[pivot].clone();
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let delta = &c * &residue[j];
                row[j] -= delta;
            }
            for (slot, nc) in rcombo.iter_mut().zip(&new_combo) {
                *slot -= &c * nc;
            }
        }
        self.rows.push((pivot, residue, new_combo));
        self.rows.sort_by_key(|(p, _, _)| *p);
        true
    }
}

/// Result of closing a set of matrices under multiplication.
#[derive(Debug, Clone)]
pub struct SpanClosure {
    /// Basis of the unital algebra generated, in insertion order.
    pub basis: Vec<QMat>,
    /// Number of multiplication passes that added a new basis element.
    pub rounds: usize,
    row_space: RowSpace,
}

impl SpanClosure {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of m over the closure basis; None if m lies outside.
    pub fn express(&self, m: &QMat) -> Option<Vec<Rat>> {
        self.row_space.express(&m.flatten())
    }

    /// Structure constants `c[i][j][k]` with `basis[i] * basis[j] =
    /// sum_k c[i][j][k] basis[k]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Rat>>> {
        let d = self.basis.len();
        let mut c = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = &self.basis[i] * &self.basis[j];
                c[i][j] = self
                    .express(&prod)
                    .expect("closure basis not actually closed");
            }
        }
        c
    }
}

/// Closes the unital span of the generators under multiplication by
/// repeated passes of pairwise products and exact row reduction.
pub fn close_span(generators: &[QMat], n: usize) -> SpanClosure {
    let ambient = n * n;
    let mut space = RowSpace::new(ambient);
    let mut basis: Vec<QMat> = Vec::new();
    let push = |space: &mut RowSpace, basis: &mut Vec<QMat>, m: QMat| -> bool {
        if space.insert(&m.flatten()) {
            basis.push(m);
            true
        } else {
            false
        }
    };
    push(&mut space, &mut basis, QMat::identity(n));
    for g in generators {
        assert_eq!(g.nrows(), n);
        assert!(g.is_square());
        push(&mut space, &mut basis, g.clone());
    }
    let mut rounds = 0;
    loop {
        let mut grew = false;
        let current = basis.len();
        for i in 0..current {
            for j in 0..current {
                let prod = &basis[i] * &basis[j];
                if push(&mut space, &mut basis, prod) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
        rounds += 1;
    }
    SpanClosure {
        basis,
        rounds,
        row_space: space,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn matrix_ops() {
        let a = QMat::from_rows(vec![
            vec![rat_int(1), rat_int(2)],
            vec![rat_int(3), rat_int(4)],
        ]);
        let i = QMat::identity(2);
        assert_eq!(&a * &i, a);
        assert_eq!(a.trace(), rat_int(5));
        assert_eq!((&a - &a).is_zero(), true);
        let b = &a * &a;
        assert_eq!(b[(0, 0)], rat_int(7));
        assert_eq!(b[(1, 1)], rat_int(22));
    }

    #[test]
    fn rank_and_express() {
        let mut space = RowSpace::new(3);
        assert!(space.insert(&[rat_int(1), rat_int(0), rat_int(1)]));
        assert!(space.insert(&[rat_int(0), rat_int(2), rat_int(0)]));
        assert!(!space.insert(&[rat_int(2), rat_int(2), rat_int(2)]));
        assert_eq!(space.rank(), 2);
        let coords = space
            .express(&[rat_int(3), rat_int(-4), rat_int(3)])
            .unwrap();
        assert_eq!(coords, vec![rat_int(3), rat_int(-2)]);
        assert!(space.express(&[rat_int(0), rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn close_span_matrix_units() {
        // E12 and E21 generate all of M_2
        let e12 = QMat::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(0), rat_int(0)],
        ]);
        let e21 = e12.transpose();
        let closure = close_span(&[e12, e21], 2);
        assert_eq!(closure.dim(), 4);
        let sc = closure.structure_constants();
        assert_eq!(sc.len(), 4);
    }

    #[test]
    fn close_span_diagonal_is_small() {
        let d = QMat::diagonal(&[rat_int(1), rat(1, 2)]);
        let closure = close_span(&[d], 2);
        // identity and d are independent; d^2 lies in their span
        assert_eq!(closure.dim(), 2);
        assert_eq!(closure.rounds, 0);
    }
}
