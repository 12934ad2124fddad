//! Dense exact linear algebra over [`Coeff`].

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::field::Coeff;

use super::monomial::Monomial;
use super::polynomial::{canonical_cmp, Polynomial, Ring};

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn row_reduce(rows: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r].iter_mut().skip(col) {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(pivot_row.iter()).skip(col) {
                if !p.is_zero() {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows.
pub fn nullspace(rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Coeff::zero(); ncols];
            v[f] = Coeff::one();
            for (row, &pc) in m.iter().zip(pivots.iter()) {
                v[pc] = -&row[f];
            }
            v
        })
        .collect()
}

/// Basis of the combinations `c` with `sum_i c_i * rows[i] = 0`.
pub fn left_kernel(rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let nrows = rows.len();
    let transposed: Vec<Vec<Coeff>> = (0..ncols)
        .map(|j| (0..nrows).map(|i| rows[i][j].clone()).collect())
        .collect();
    nullspace(&transposed, nrows)
}

/// A square or rectangular matrix with exact entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Coeff::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Coeff::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Coeff) -> Self {
        Matrix::identity(n).scale(c)
    }

    pub fn from_rows(rows: Vec<Vec<Coeff>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer entries, for tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Coeff::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: Coeff) {
        self.data[i * self.cols + j] = c;
    }

    pub fn row(&self, i: usize) -> &[Coeff] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Coeff>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Coeff] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coeff::is_zero)
    }

    pub fn scale(&self, c: &Coeff) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Coeff]) -> Vec<Coeff> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Coeff::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rows())
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Coeff>> {
        nullspace(&self.to_rows(), self.cols)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = self.row(i).iter().map(|c| c.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Coordinates of polynomials with respect to a growing monomial index.
/// Column order is the canonical term order, so echelon forms put the
/// largest monomials first.
#[derive(Debug)]
pub struct MonomialIndex {
    ring: Arc<Ring>,
    monomials: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(ring: &Arc<Ring>, polys: &[Polynomial]) -> Self {
        let mut monos: Vec<Monomial> = polys
            .iter()
            .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
            .collect();
        monos.sort_by(|a, b| canonical_cmp(b, a));
        monos.dedup();
        Self::from_monomials(ring, monos)
    }

    pub fn from_monomials(ring: &Arc<Ring>, mut monos: Vec<Monomial>) -> Self {
        monos.sort_by(|a, b| canonical_cmp(b, a));
        monos.dedup();
        let position = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        MonomialIndex {
            ring: ring.clone(),
            monomials: monos,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Dense coordinates; `None` if a monomial falls outside the index.
    pub fn coords(&self, p: &Polynomial) -> Option<Vec<Coeff>> {
        let mut v = vec![Coeff::zero(); self.monomials.len()];
        for (m, c) in p.terms() {
            v[*self.position.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn poly(&self, v: &[Coeff]) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.monomials
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }
}

/// Echelon basis of the linear span of `polys`, each element monic with
/// distinct leading monomials.
pub fn span_basis(ring: &Arc<Ring>, polys: &[Polynomial]) -> Vec<Polynomial> {
    let idx = MonomialIndex::new(ring, polys);
    let mut rows: Vec<Vec<Coeff>> = polys.iter().map(|p| idx.coords(p).expect("indexed")).collect();
    row_reduce(&mut rows);
    rows.iter().map(|r| idx.poly(r)).collect()
}

/// Coordinates of polynomial vectors, indexed by (position, monomial).
#[derive(Debug)]
pub struct VectorIndex {
    ring: Arc<Ring>,
    rank: usize,
    columns: Vec<(usize, Monomial)>,
    position: HashMap<(usize, Monomial), usize>,
}

impl VectorIndex {
    pub fn new(ring: &Arc<Ring>, rank: usize, vectors: &[Vec<Polynomial>]) -> Self {
        let mut cols: Vec<(usize, Monomial)> = vectors
            .iter()
            .flat_map(|v| {
                v.iter()
                    .enumerate()
                    .flat_map(|(k, p)| p.terms().iter().map(move |(m, _)| (k, m.clone())))
            })
            .collect();
        cols.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| canonical_cmp(&b.1, &a.1)));
        cols.dedup();
        let position = cols.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        VectorIndex {
            ring: ring.clone(),
            rank,
            columns: cols,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn coords(&self, v: &[Polynomial]) -> Option<Vec<Coeff>> {
        let mut out = vec![Coeff::zero(); self.columns.len()];
        for (k, p) in v.iter().enumerate() {
            for (m, c) in p.terms() {
                out[*self.position.get(&(k, m.clone()))?] = c.clone();
            }
        }
        Some(out)
    }

    pub fn vector(&self, coords: &[Coeff]) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); self.rank];
        for ((k, m), c) in self.columns.iter().zip(coords) {
            if !c.is_zero() {
                parts[*k].push((m.clone(), c.clone()));
            }
        }
        parts
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect()
    }
}

/// Echelon basis of the linear span of polynomial vectors.
pub fn vector_span_basis(ring: &Arc<Ring>, rank: usize, vectors: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let idx = VectorIndex::new(ring, rank, vectors);
    let mut rows: Vec<Vec<Coeff>> = vectors.iter().map(|v| idx.coords(v).expect("indexed")).collect();
    row_reduce(&mut rows);
    rows.iter().map(|r| idx.vector(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let rows = vec![vec![Coeff::from_int(1), Coeff::from_int(2), Coeff::from_int(3)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot = &(&v[0] + &(&v[1] * &Coeff::from_int(2))) + &(&v[2] * &Coeff::from_int(3));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn matrix_products() {
        let a = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(a.commutator(&b), Matrix::from_i64(&[&[1, 0], &[0, -1]]));
        assert_eq!(a.pow(2), Matrix::zeros(2, 2));
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn span_basis_is_echelon() {
        let r = Ring::rational(&["x", "y"]).unwrap();
        let polys = vec![
            r.parse("x + y").unwrap(),
            r.parse("2*x + 2*y").unwrap(),
            r.parse("x - y").unwrap(),
        ];
        let b = span_basis(&r, &polys);
        assert_eq!(b, vec![r.var(0), r.var(1)]);
    }
}
