//! Integer matrices and the Smith normal form.
//!
//! The Smith normal form turns an integer matrix `A` into `U * A * V = D`
//! with unimodular `U`, `V` and diagonal `D` whose nonnegative entries form a
//! divisibility chain. It exposes the torsion of the cokernel lattice, which
//! is exactly what the binomial primality test needs: an exponent lattice is
//! saturated iff every nonzero invariant factor is 1.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        IntMatrix::new(
            rows,
            cols,
            entries.iter().map(|&e| BigInt::from(e)).collect(),
        )
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix::new(rows, cols, vec![BigInt::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = &out[(i, j)] + &self[(i, k)] * &rhs[(k, j)];
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j])
                        / &prev;
                    m[i * n + j] = v;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        let det = m[(n - 1) * n + (n - 1)].clone();
        if sign < 0 {
            -det
        } else {
            det
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
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

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal with
/// nonnegative entries in a divisibility chain.
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let mut d = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut v = IntMatrix::identity(a.cols());
    let steps = a.rows().min(a.cols());

    for t in 0..steps {
        'pivot: loop {
            // Smallest nonzero entry in the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows() {
                for j in t..d.cols() {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match &best {
                        None => true,
                        Some((bi, bj)) => d[(i, j)].abs() < d[(*bi, *bj)].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break 'pivot;
            };
            swap_rows(&mut d, &mut u, t, pi);
            swap_cols(&mut d, &mut v, t, pj);

            // Clear the pivot column and row by Euclidean steps.
            let mut dirty = false;
            for i in t + 1..d.rows() {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_nearest(&d[(i, t)], &d[(t, t)]);
                if !q.is_zero() {
                    row_axpy(&mut d, &mut u, i, t, &q);
                }
                if !d[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..d.cols() {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_nearest(&d[(t, j)], &d[(t, t)]);
                if !q.is_zero() {
                    col_axpy(&mut d, &mut v, j, t, &q);
                }
                if !d[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot;
            }

            // Pivot must divide everything that remains, so later invariant
            // factors are multiples of earlier ones.
            for i in t + 1..d.rows() {
                for j in t + 1..d.cols() {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        add_row(&mut d, &mut u, t, i);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
    }

    for t in 0..steps {
        if d[(t, t)].is_negative() {
            negate_row(&mut d, &mut u, t);
        }
    }
    Snf { u, d, v }
}

fn swap_rows(d: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols() {
        let x = d[(a, j)].clone();
        let y = d[(b, j)].clone();
        d.set(a, j, y);
        d.set(b, j, x);
    }
    for j in 0..u.cols() {
        let x = u[(a, j)].clone();
        let y = u[(b, j)].clone();
        u.set(a, j, y);
        u.set(b, j, x);
    }
}

fn swap_cols(d: &mut IntMatrix, v: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows() {
        let x = d[(i, a)].clone();
        let y = d[(i, b)].clone();
        d.set(i, a, y);
        d.set(i, b, x);
    }
    for i in 0..v.rows() {
        let x = v[(i, a)].clone();
        let y = v[(i, b)].clone();
        v.set(i, a, y);
        v.set(i, b, x);
    }
}

/// row_i -= q * row_t.
fn row_axpy(d: &mut IntMatrix, u: &mut IntMatrix, i: usize, t: usize, q: &BigInt) {
    for j in 0..d.cols() {
        let val = &d[(i, j)] - q * &d[(t, j)];
        d.set(i, j, val);
    }
    for j in 0..u.cols() {
        let val = &u[(i, j)] - q * &u[(t, j)];
        u.set(i, j, val);
    }
}

/// col_j -= q * col_t.
fn col_axpy(d: &mut IntMatrix, v: &mut IntMatrix, j: usize, t: usize, q: &BigInt) {
    for i in 0..d.rows() {
        let val = &d[(i, j)] - q * &d[(i, t)];
        d.set(i, j, val);
    }
    for i in 0..v.rows() {
        let val = &v[(i, j)] - q * &v[(i, t)];
        v.set(i, j, val);
    }
}

fn add_row(d: &mut IntMatrix, u: &mut IntMatrix, t: usize, i: usize) {
    for j in 0..d.cols() {
        let val = &d[(t, j)] + &d[(i, j)];
        d.set(t, j, val);
    }
    for j in 0..u.cols() {
        let val = &u[(t, j)] + &u[(i, j)];
        u.set(t, j, val);
    }
}

fn negate_row(d: &mut IntMatrix, u: &mut IntMatrix, t: usize) {
    for j in 0..d.cols() {
        let val = -&d[(t, j)];
        d.set(t, j, val);
    }
    for j in 0..u.cols() {
        let val = -&u[(t, j)];
        u.set(t, j, val);
    }
}

/// Round-to-nearest quotient keeps entries small during reduction.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if &r.abs() * 2 > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(snf: &Snf, a: &IntMatrix) {
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
        assert!(snf.d.is_diagonal());
        assert_eq!(snf.u.determinant().abs(), BigInt::one());
        assert_eq!(snf.v.determinant().abs(), BigInt::one());
        let f = snf.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "divisibility chain broken");
        }
    }

    #[test]
    fn diag_2_3_gives_1_6() {
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let snf = smith_normal_form(&a);
        check(&snf, &a);
        assert_eq!(
            snf.invariant_factors(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(3);
        let snf = smith_normal_form(&a);
        check(&snf, &a);
        assert_eq!(snf.d, IntMatrix::identity(3));
    }

    #[test]
    fn single_column_gcd() {
        let a = IntMatrix::from_i64(2, 1, &[2, -2]);
        let snf = smith_normal_form(&a);
        check(&snf, &a);
        assert_eq!(snf.d[(0, 0)], BigInt::from(2));
        assert_eq!(snf.d[(1, 0)], BigInt::from(0));
    }

    #[test]
    fn rank_deficient() {
        let a = IntMatrix::from_i64(3, 3, &[2, 4, 6, 1, 2, 3, 0, 0, 0]);
        let snf = smith_normal_form(&a);
        check(&snf, &a);
        assert_eq!(snf.invariant_factors(), vec![BigInt::from(1)]);
    }

    #[test]
    fn determinant_bareiss() {
        let a = IntMatrix::from_i64(3, 3, &[2, 0, 1, 1, 3, -1, 0, 4, 1]);
        // Cofactor oracle: 2*(3*1 - (-1)*4) - 0 + 1*(1*4 - 3*0) = 2*7 + 4 = 18
        assert_eq!(a.determinant(), BigInt::from(18));
        assert_eq!(IntMatrix::identity(4).determinant(), BigInt::one());
    }
}
