//! Dense exact matrices over any [`Scalar`] field, plus row-space machinery.
//!
//! Elimination over extension towers can hit zero divisors, so every
//! operation that divides returns a [`SplitEvent`] in its error channel.
//! Rational-only callers get a fraction-free path through [`QRowSpace`],
//! which keeps rows as content-normalized integer vectors the way Bareiss
//! style elimination does.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};
use crate::tower::SplitEvent;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Scalar> Matrix<K> {
    pub fn new(rows: usize, cols: usize, data: Vec<K>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix shape mismatch");
        Matrix { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| K::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { K::one() } else { K::zero() })
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

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[K] {
        &self.data
    }

    pub fn map<L: Scalar>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
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
                    let t = a.mul(b).add(&out[(i, j)]);
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc.add(&self[(i, j)].mul(&v[j]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_diagonal(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Reduced row echelon form with pivot column list.
    pub fn rref(&self) -> Result<(Matrix<K>, Vec<usize>), SplitEvent> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m[(r, j)].clone();
                    let b = m[(p, j)].clone();
                    m.set(r, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = m[(r, c)].inv()?;
            for j in c..m.cols {
                let v = m[(r, j)].mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = m[(i, j)].sub(&f.mul(&m[(r, j)]));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize, SplitEvent> {
        Ok(self.rref()?.1.len())
    }

    /// A basis of the right kernel, one vector per free column, in ascending
    /// free-column order.
    pub fn kernel(&self) -> Result<Vec<Vec<K>>, SplitEvent> {
        let (r, pivots) = self.rref()?;
        Ok(kernel_from_rref(&r, &pivots))
    }

    /// `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix<K>>, SplitEvent> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                K::one()
            } else {
                K::zero()
            }
        });
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        Ok(Some(Matrix::from_fn(n, n, |i, j| r[(i, j + n)].clone())))
    }

    /// Commutator `self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    /// Row-major flattening, the coordinate convention used everywhere a
    /// matrix is treated as a vector.
    pub fn vectorize(&self) -> Vec<K> {
        self.data.clone()
    }
}

impl<K: Scalar> Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K: Scalar> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

pub(crate) fn kernel_from_rref<K: Scalar>(r: &Matrix<K>, pivots: &[usize]) -> Vec<Vec<K>> {
    let cols = r.cols();
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![K::zero(); cols];
        v[free] = K::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = r[(row, free)].neg();
        }
        out.push(v);
    }
    out
}

/// Lifts a rational matrix into any scalar domain.
pub fn lift_matrix<K: Scalar>(m: &Matrix<Rational>) -> Matrix<K> {
    m.map(|a| K::from_rat(a))
}

/// Convenience constructor from integer literals.
pub fn mat_i64(rows: usize, cols: usize, entries: &[i64]) -> Matrix<Rational> {
    assert_eq!(entries.len(), rows * cols);
    Matrix::new(
        rows,
        cols,
        entries
            .iter()
            .map(|&e| Rational::from_integer(e.into()))
            .collect(),
    )
}

/// Incremental row space over an arbitrary scalar field, kept in reduced row
/// echelon form, with optional tag columns carried along (used to read off
/// dependency coefficients, e.g. for minimal polynomials).
pub struct RowSpace<K: Scalar> {
    ncols: usize,
    rows: Vec<(usize, Vec<K>, Vec<K>)>,
}

impl<K: Scalar> RowSpace<K> {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `(main, tag)` by the rows stored so far.
    pub fn reduce(&self, mut main: Vec<K>, mut tag: Vec<K>) -> (Vec<K>, Vec<K>) {
        for (p, rmain, rtag) in &self.rows {
            if main[*p].is_zero() {
                continue;
            }
            let f = main[*p].clone();
            for j in 0..self.ncols {
                main[j] = main[j].sub(&f.mul(&rmain[j]));
            }
            for j in 0..tag.len() {
                tag[j] = tag[j].sub(&f.mul(&rtag[j]));
            }
        }
        (main, tag)
    }

    /// Inserts a row. Returns `Ok(None)` if it was independent, otherwise the
    /// reduced tag vector witnessing the dependency.
    pub fn insert(&mut self, main: Vec<K>, tag: Vec<K>) -> Result<Option<Vec<K>>, SplitEvent> {
        assert_eq!(main.len(), self.ncols);
        let (mut main, mut tag) = self.reduce(main, tag);
        let Some(p) = main.iter().position(|a| !a.is_zero()) else {
            return Ok(Some(tag));
        };
        let inv = main[p].inv()?;
        for v in main.iter_mut() {
            *v = v.mul(&inv);
        }
        for v in tag.iter_mut() {
            *v = v.mul(&inv);
        }
        // Keep full reduction: clear this pivot column in existing rows.
        for (_, rmain, rtag) in self.rows.iter_mut() {
            if rmain[p].is_zero() {
                continue;
            }
            let f = rmain[p].clone();
            for j in 0..main.len() {
                rmain[j] = rmain[j].sub(&f.mul(&main[j]));
            }
            for j in 0..tag.len() {
                rtag[j] = rtag[j].sub(&f.mul(&tag[j]));
            }
        }
        let at = self.rows.partition_point(|(q, _, _)| *q < p);
        self.rows.insert(at, (p, main, tag));
        Ok(None)
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[K]> {
        self.rows.iter().map(|(_, m, _)| m.as_slice())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _, _)| *p).collect()
    }

    /// Is `v` in the span of the inserted rows?
    pub fn contains(&self, v: &[K]) -> bool {
        let (r, _) = self.reduce(v.to_vec(), vec![]);
        r.iter().all(|a| a.is_zero())
    }
}

/// Sparse rational row, kept sorted by column index.
pub type SparseQRow = Vec<(u32, Rational)>;

type IntRow = Vec<(u32, BigInt)>;

fn int_row_axpy(a: &BigInt, r: &[(u32, BigInt)], b: &BigInt, p: &[(u32, BigInt)]) -> IntRow {
    // a*r - b*p, merged over sorted sparse rows.
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        if j >= p.len() || (i < r.len() && r[i].0 < p[j].0) {
            out.push((r[i].0, a * &r[i].1));
            i += 1;
        } else if i >= r.len() || p[j].0 < r[i].0 {
            out.push((p[j].0, -(b * &p[j].1)));
            j += 1;
        } else {
            let v = a * &r[i].1 - b * &p[j].1;
            if !v.is_zero() {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn int_row_normalize(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    if row.first().map_or(false, |(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
    row
}

/// Fraction-free incremental row reduction over the rationals: rows are
/// scaled to integer vectors, eliminated by cross-multiplication and kept
/// content-free. This is the workhorse behind graded pieces and the
/// stabilizer linear systems, where many thousands of sparse rows pour in.
pub struct QRowSpace {
    ncols: usize,
    /// pivot column -> row (leading entry at the pivot column, full-reduced
    /// against all other pivots).
    rows: BTreeMap<u32, IntRow>,
}

impl QRowSpace {
    pub fn new(ncols: usize) -> Self {
        QRowSpace {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn to_int_row(row: &[(u32, Rational)]) -> IntRow {
        let mut den = BigInt::one();
        for (_, v) in row {
            den = den.lcm(v.denom());
        }
        let mut out: IntRow = row
            .iter()
            .filter(|(_, v)| !Zero::is_zero(v))
            .map(|(c, v)| (*c, v.numer() * (&den / v.denom())))
            .collect();
        out.sort_by_key(|(c, _)| *c);
        int_row_normalize(core::mem::take(&mut out))
    }

    fn eliminate(&self, mut row: IntRow) -> IntRow {
        loop {
            let Some(&(lead, ref lv)) = row.first() else {
                return row;
            };
            let Some(p) = self.rows.get(&lead) else {
                return row;
            };
            let a = p[0].1.clone();
            let b = lv.clone();
            row = int_row_normalize(int_row_axpy(&a, &row, &b, p));
        }
    }

    /// Inserts a sparse rational row; returns true when it enlarged the span.
    pub fn insert(&mut self, row: &[(u32, Rational)]) -> bool {
        let row = Self::to_int_row(row);
        let row = self.eliminate(row);
        let Some(&(lead, _)) = row.first() else {
            return false;
        };
        // Full reduction: clear the new pivot column from existing rows.
        let mut updates = Vec::new();
        for (&p, r) in &self.rows {
            if let Ok(pos) = r.binary_search_by_key(&lead, |(c, _)| *c) {
                let a = row[0].1.clone();
                let b = r[pos].1.clone();
                updates.push((p, int_row_normalize(int_row_axpy(&a, r, &b, &row))));
            }
        }
        for (p, r) in updates {
            self.rows.insert(p, r);
        }
        self.rows.insert(lead, row);
        true
    }

    /// Fully reduces a sparse rational row against the stored rows, exactly.
    pub fn residue(&self, row: &[(u32, Rational)]) -> SparseQRow {
        let mut cur: SparseQRow = row
            .iter()
            .filter(|(_, v)| !Zero::is_zero(v))
            .cloned()
            .collect();
        cur.sort_by_key(|(c, _)| *c);
        let mut out: SparseQRow = Vec::new();
        while let Some((lead, lv)) = cur.first().cloned() {
            let Some(p) = self.rows.get(&lead) else {
                out.push((lead, lv));
                cur.remove(0);
                continue;
            };
            // cur -= (lv / p_lead) * p
            let f = lv / Rational::from_integer(p[0].1.clone());
            let mut merged: SparseQRow = Vec::with_capacity(cur.len() + p.len());
            let (mut i, mut j) = (0, 0);
            while i < cur.len() || j < p.len() {
                if j >= p.len() || (i < cur.len() && cur[i].0 < p[j].0) {
                    merged.push(cur[i].clone());
                    i += 1;
                } else if i >= cur.len() || p[j].0 < cur[i].0 {
                    merged.push((p[j].0, -(&f * Rational::from_integer(p[j].1.clone()))));
                    j += 1;
                } else {
                    let v = &cur[i].1 - &f * Rational::from_integer(p[j].1.clone());
                    if !Zero::is_zero(&v) {
                        merged.push((cur[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            cur = merged;
        }
        out.sort_by_key(|(c, _)| *c);
        out
    }

    pub fn pivots(&self) -> Vec<u32> {
        self.rows.keys().copied().collect()
    }

    /// The reduced-row-echelon basis rows as dense rational vectors with
    /// leading entry 1, ordered by pivot column.
    pub fn rref_rows(&self) -> Vec<Vec<Rational>> {
        self.rows
            .values()
            .map(|r| {
                let lead = Rational::from_integer(r[0].1.clone());
                let mut v = vec![<Rational as Zero>::zero(); self.ncols];
                for (c, x) in r {
                    v[*c as usize] = Rational::from_integer(x.clone()) / &lead;
                }
                v
            })
            .collect()
    }

    /// Kernel of the matrix whose rows were inserted: one basis vector per
    /// free column, ascending.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let pivots: Vec<u32> = self.pivots();
        let rows = self.rref_rows();
        let mut out = Vec::new();
        for free in 0..self.ncols as u32 {
            if pivots.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![<Rational as Zero>::zero(); self.ncols];
            v[free as usize] = <Rational as One>::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p as usize] = -row[free as usize].clone();
            }
            out.push(v);
        }
        out
    }
}

/// Dense-row convenience wrapper for [`QRowSpace::insert`].
pub fn dense_to_sparse(v: &[Rational]) -> SparseQRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !Zero::is_zero(*x))
        .map(|(i, x)| (i as u32, x.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::tower::{adjoin, NumberTower, TowerElem};
    use crate::upoly::UPoly;

    #[test]
    fn rref_identity_full_rank() {
        let m = mat_i64(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let (r, pivots) = m.rref().unwrap();
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(r, Matrix::identity(3));
        assert!(m.kernel().unwrap().is_empty());
    }

    #[test]
    fn rref_rank_one_kernel() {
        let m = mat_i64(2, 2, &[1, 1, 1, 1]);
        let k = m.kernel().unwrap();
        assert_eq!(k.len(), 1);
        // Kernel spans (1, -1): check Mv = 0 and proportionality.
        assert!(m.mul_vec(&k[0]).iter().all(|x| Zero::is_zero(x)));
        assert_eq!(k[0][0], -k[0][1].clone());
    }

    #[test]
    fn rref_tall_rank_one() {
        let m = mat_i64(3, 2, &[2, 4, 1, 2, 3, 6]);
        let (_, pivots) = m.rref().unwrap();
        assert_eq!(pivots.len(), 1);
        let k = m.kernel().unwrap();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| Zero::is_zero(x)));
        // Proportional to (2, -1).
        assert_eq!(k[0][0].clone() * rat_int(-1), k[0][1].clone() * rat_int(2));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat_i64(3, 3, &[2, 1, 0, 1, 1, 1, 0, 3, 1]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert_eq!(inv.mul(&m), Matrix::identity(3));
        let s = mat_i64(2, 2, &[1, 2, 2, 4]);
        assert!(s.inverse().unwrap().is_none());
    }

    #[test]
    fn kernel_over_tower() {
        // M = [[0,2],[1,0]], eigenvalue a with a^2 = 2: kernel of M - aI.
        let q = NumberTower::rationals();
        let m2 = UPoly::from_coeffs(vec![
            TowerElem::from_int(-2),
            TowerElem::from_int(0),
            TowerElem::from_int(1),
        ]);
        let (t, a) = adjoin(&q, &m2, "a").unwrap();
        let m = mat_i64(2, 2, &[0, 2, 1, 0]).map(|x| TowerElem::from_rat(x).reduce_into(&t));
        let shifted = m.sub(&Matrix::identity(2).scale(&a));
        let k = shifted.kernel().unwrap();
        assert_eq!(k.len(), 1);
        let mv = m.mul_vec(&k[0]);
        let av: Vec<TowerElem> = k[0].iter().map(|x| x.mul(&a)).collect();
        assert_eq!(mv, av);
    }

    #[test]
    fn qrowspace_matches_dense_rref() {
        let m = mat_i64(4, 5, &[1, 2, 0, -1, 3, 2, 4, 1, 0, 1, 0, 0, 1, 2, -5, 3, 6, 1, -1, 4]);
        let mut qs = QRowSpace::new(5);
        for i in 0..4 {
            qs.insert(&dense_to_sparse(m.row(i)));
        }
        let (r, pivots) = m.rref().unwrap();
        assert_eq!(
            qs.pivots(),
            pivots.iter().map(|&p| p as u32).collect::<Vec<_>>()
        );
        let rows = qs.rref_rows();
        for (i, row) in rows.iter().enumerate() {
            for j in 0..5 {
                assert_eq!(row[j], r[(i, j)]);
            }
        }
        // Kernel vectors annihilate the original rows.
        for k in qs.kernel_basis() {
            assert!(m.mul_vec(&k).iter().all(|x| Zero::is_zero(x)));
        }
    }

    #[test]
    fn qrowspace_residue_is_exact() {
        let mut qs = QRowSpace::new(4);
        qs.insert(&[(0, rat_int(1)), (1, rat_int(2))]);
        qs.insert(&[(2, rat_int(3)), (3, rat_int(1))]);
        // Reduce (1, 2, 3, 1): subtract both stored rows exactly -> 0.
        let res = qs.residue(&[
            (0, rat_int(1)),
            (1, rat_int(2)),
            (2, rat_int(3)),
            (3, rat_int(1)),
        ]);
        assert!(res.is_empty());
        let res = qs.residue(&[(1, rat(1, 2))]);
        assert_eq!(res, vec![(1, rat(1, 2))]);
    }

    #[test]
    fn rowspace_dependency_tags() {
        let mut rs: RowSpace<Rational> = RowSpace::new(3);
        let e = |a: i64, b: i64, c: i64| vec![rat_int(a), rat_int(b), rat_int(c)];
        assert!(rs.insert(e(1, 0, 1), e(1, 0, 0)).unwrap().is_none());
        assert!(rs.insert(e(0, 1, 1), e(0, 1, 0)).unwrap().is_none());
        // (1, 1, 2) = row0 + row1: the tag must read (-1, -1, 1) combination.
        let dep = rs.insert(e(1, 1, 2), e(0, 0, 1)).unwrap().unwrap();
        assert_eq!(dep, e(-1, -1, 1));
    }
}
