//! Exact dense linear algebra over a [`Field`]: echelon forms, null spaces,
//! subspaces kept in reduced row echelon form, and the Hermitian signature.

use std::fmt;

use serde::Serialize;

use crate::scalar::{Field, GaussRational, Rational, Scalar};

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged matrix columns");
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j).clone() + a.clone() * b.clone();
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Matrix<F>) -> Matrix<F> {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(&mut rows, self.cols);
        (Matrix::from_rows(self.cols, rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect()
    }

    /// Some solution of `A x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut rows: Vec<Vec<F>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i);
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = rows[row][self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut rows: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i);
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_rows(n, rows.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return F::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let piv = a[c][c].clone();
            det = det * piv.clone();
            let inv = piv.inv().unwrap();
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone() * inv.clone();
                for k in c..n {
                    let v = a[r][k].clone() - f.clone() * a[c][k].clone();
                    a[r][k] = v;
                }
            }
        }
        det
    }
}

impl<F: Field + Scalar> Matrix<F> {
    pub fn conj(&self) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Matrix<F> {
        self.transpose().conj()
    }
}

/// In-place RREF on the first `ncols` columns of `rows`; returns pivots.
/// Zero rows are dropped.
pub fn rref_rows<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        if !inv.is_zero() && rows[r][c] != F::one() {
            for x in rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (k, x) in row.iter_mut().enumerate() {
                if !pivot_row[k].is_zero() {
                    *x = x.clone() - f.clone() * pivot_row[k].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

impl<F: Field + fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Linear subspace of `F^n`, stored as a reduced row echelon basis so that
/// equal subspaces compare equal structurally.
#[derive(Clone, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vecs: &[Vec<F>]) -> Self {
        let mut rows: Vec<Vec<F>> = vecs.to_vec();
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length does not match ambient dimension");
        }
        let pivots = rref_rows(&mut rows, ambient);
        Subspace { ambient, basis: rows, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, &unit_vectors(ambient))
    }

    /// Span of the listed coordinate axes.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        let units = unit_vectors(ambient);
        let vecs: Vec<Vec<F>> = idx.iter().map(|&i| units[i].clone()).collect();
        Subspace::span(ambient, &vecs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![F::zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in recon.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = r.clone() + c.clone() * x.clone();
                }
            }
        }
        if recon.iter().zip(v).all(|(a, b)| *a == *b) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace<F>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &vecs)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // a·A = b·B  ⟺  (a, −b) ∈ left kernel of [A; B]
        let (da, db) = (self.dim(), other.dim());
        let mut cols = Vec::with_capacity(da + db);
        cols.extend(self.basis.iter().cloned());
        cols.extend(other.basis.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
        let m = Matrix::from_cols(self.ambient, &cols);
        let vecs: Vec<Vec<F>> = m
            .nullspace()
            .into_iter()
            .map(|coef| combine(&self.basis, &coef[..da], self.ambient))
            .collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Standard unit vectors completing the echelon basis to the ambient space.
    pub fn complement_basis(&self) -> Vec<Vec<F>> {
        let units = unit_vectors(self.ambient);
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).map(|c| units[c].clone()).collect()
    }

    /// Normal form of `v` modulo the subspace (pivot coordinates cleared).
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = o.clone() - f.clone() * x.clone();
                }
            }
        }
        out
    }
}

impl<F: Field + Scalar> Subspace<F> {
    pub fn conj(&self) -> Subspace<F> {
        let vecs: Vec<Vec<F>> = self.basis.iter().map(|v| v.iter().map(Scalar::conj).collect()).collect();
        Subspace::span(self.ambient, &vecs)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; {:?})", self.dim(), self.ambient, self.basis)
    }
}

pub fn unit_vectors<F: Field>(n: usize) -> Vec<Vec<F>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { F::one() } else { F::zero() }).collect())
        .collect()
}

/// `Σ coef_i · vecs_i`.
pub fn combine<F: Field>(vecs: &[Vec<F>], coef: &[F], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (c, v) in coef.iter().zip(vecs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            if !x.is_zero() {
                *o = o.clone() + c.clone() * x.clone();
            }
        }
    }
    out
}

/// Inertia `(pos, neg, zero)` of a Hermitian form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Signature { pos, neg, zero }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.pos == 0 || self.neg == 0)
    }

    pub fn flipped(&self) -> Signature {
        Signature { pos: self.neg, neg: self.pos, zero: self.zero }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.pos, self.neg, self.zero)
    }
}

pub fn is_hermitian(h: &Matrix<GaussRational>) -> bool {
    h.rows() == h.cols() && *h == h.adjoint()
}

/// Signature of a Hermitian matrix by congruence diagonalization.
///
/// Pivots on the first nonzero diagonal entry. If the remaining diagonal is
/// zero but some `h_ab ≠ 0`, replaces `v_a` by `v_a + c v_b` with `c = 1`
/// (or `c = i` when `Re h_ab = 0`), which makes the new `h_aa` nonzero.
pub fn hermitian_signature(h: &Matrix<GaussRational>) -> Signature {
    assert!(is_hermitian(h), "hermitian_signature on a non-Hermitian matrix");
    let n = h.rows();
    let mut a = h.row_vecs();
    let mut live: Vec<usize> = (0..n).collect();
    let mut sig = Signature::new(0, 0, 0);
    while !live.is_empty() {
        if let Some(pos) = live.iter().position(|&k| !a[k][k].is_zero()) {
            let k = live.remove(pos);
            let d = a[k][k].re.clone();
            if d.is_positive() {
                sig.pos += 1;
            } else {
                sig.neg += 1;
            }
            let dinv = GaussRational::real(d.recip().unwrap());
            for &j in &live {
                if a[j][k].is_zero() {
                    continue;
                }
                let f = &a[j][k] * &dinv;
                // R_j -= f R_k, then C_j -= conj(f) C_k
                for c in 0..n {
                    let v = &a[j][c] - &(&f * &a[k][c]);
                    a[j][c] = v;
                }
                let fc = f.conj();
                for r in 0..n {
                    let v = &a[r][j] - &(&fc * &a[r][k]);
                    a[r][j] = v;
                }
            }
            continue;
        }
        let pair = live
            .iter()
            .flat_map(|&x| live.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| x != y && !a[x][y].is_zero());
        let Some((x, y)) = pair else {
            sig.zero += live.len();
            break;
        };
        let c = if a[x][y].re.is_zero() { GaussRational::i() } else { GaussRational::one() };
        for col in 0..n {
            let v = &a[x][col] + &(&c * &a[y][col]);
            a[x][col] = v;
        }
        let cc = c.conj();
        for r in 0..n {
            let v = &a[r][x] + &(&cc * &a[r][y]);
            a[r][x] = v;
        }
        debug_assert!(!a[x][x].is_zero());
    }
    sig
}

/// Helper for tests and reports: rational matrix into Gaussian rationals.
pub fn rational_to_gauss(m: &Matrix<Rational>) -> Matrix<GaussRational> {
    let rows = (0..m.rows())
        .map(|i| m.row(i).into_iter().map(GaussRational::real).collect())
        .collect();
    Matrix::from_rows(m.cols(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(re: i64, im: i64) -> GaussRational {
        GaussRational::ints(re, im)
    }

    fn gm(rows: &[&[(i64, i64)]]) -> Matrix<GaussRational> {
        let cols = rows[0].len();
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&(a, b)| g(a, b)).collect()).collect())
    }

    #[test]
    fn nullspace_and_rank() {
        let m = gm(&[&[(1, 0), (2, 0), (3, 0)], &[(2, 0), (4, 0), (6, 0)]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(GaussRational::is_zero));
        }
    }

    #[test]
    fn inverse_and_det() {
        let m = gm(&[&[(1, 1), (2, 0)], &[(0, 0), (3, -1)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(m.det(), &g(1, 1) * &g(3, -1));
        let sing = gm(&[&[(1, 0), (2, 0)], &[(2, 0), (4, 0)]]);
        assert!(sing.inverse().is_none());
        assert!(sing.det().is_zero());
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = gm(&[&[(1, 0), (1, 0)], &[(1, 0), (-1, 0)]]);
        assert_eq!(m.solve(&[g(2, 0), g(0, 0)]).unwrap(), vec![g(1, 0), g(1, 0)]);
        let sing = gm(&[&[(1, 0), (1, 0)], &[(1, 0), (1, 0)]]);
        assert!(sing.solve(&[g(1, 0), g(2, 0)]).is_none());
    }

    #[test]
    fn subspace_operations() {
        let e = unit_vectors::<GaussRational>(3);
        let xy = Subspace::span(3, &[e[0].clone(), e[1].clone()]);
        let yz = Subspace::span(3, &[e[1].clone(), e[2].clone()]);
        assert_eq!(xy.intersection(&yz), Subspace::span(3, &[e[1].clone()]));
        assert_eq!(xy.sum(&yz), Subspace::full(3));
        assert!(!xy.contains(&e[2]));
        let twisted = Subspace::span(3, &[vec![g(1, 0), g(0, -1), g(0, 0)]]);
        assert_eq!(twisted.intersection(&twisted.conj()).dim(), 0);
        assert_eq!(twisted.reduce(&[g(1, 0), g(0, 1), g(0, 0)]), vec![g(0, 0), g(0, 2), g(0, 0)]);
        assert_eq!(xy.complement_basis(), vec![e[2].clone()]);
    }

    #[test]
    fn hermitian_signature_examples() {
        assert_eq!(hermitian_signature(&gm(&[&[(-2, 0)]])), Signature::new(0, 1, 0));
        // zero diagonal with imaginary off-diagonal
        let h = gm(&[&[(0, 0), (0, 1)], &[(0, -1), (0, 0)]]);
        assert_eq!(hermitian_signature(&h), Signature::new(1, 1, 0));
        let h = gm(&[&[(0, 0), (1, 0), (0, 0)], &[(1, 0), (0, 0), (0, 0)], &[(0, 0), (0, 0), (0, 0)]]);
        assert_eq!(hermitian_signature(&h), Signature::new(1, 1, 1));
    }

    fn small_gauss() -> impl Strategy<Value = GaussRational> {
        (-3i64..=3, -3i64..=3).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #[test]
        fn signature_is_congruence_invariant(
            diag in prop::collection::vec(-2i64..=2, 3),
            p in prop::collection::vec(small_gauss(), 9),
        ) {
            let h = Matrix::from_rows(3, (0..3).map(|i| (0..3).map(|j| if i == j { g(diag[i], 0) } else { g(0, 0) }).collect()).collect());
            let p = Matrix::from_rows(3, p.chunks(3).map(|c| c.to_vec()).collect());
            prop_assume!(!p.det().is_zero());
            let h2 = p.adjoint().mul(&h).mul(&p);
            let expected = Signature::new(
                diag.iter().filter(|&&d| d > 0).count(),
                diag.iter().filter(|&&d| d < 0).count(),
                diag.iter().filter(|&&d| d == 0).count(),
            );
            prop_assert_eq!(hermitian_signature(&h2), expected);
        }

        #[test]
        fn nullspace_is_annihilated(p in prop::collection::vec(small_gauss(), 12)) {
            let m = Matrix::from_rows(4, p.chunks(4).map(|c| c.to_vec()).collect());
            let ns = m.nullspace();
            prop_assert_eq!(ns.len() + m.rank(), 4);
            for v in ns {
                prop_assert!(m.mul_vec(&v).iter().all(GaussRational::is_zero));
            }
        }
    }
}
