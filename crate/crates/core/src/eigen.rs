//! Spectral machinery: characteristic and minimal polynomials, the
//! Jordan-Chevalley split, exact eigendecomposition with on-demand tower
//! extension, and the certified simultaneous diagonalizer.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{Matrix, RowSpace};
use crate::rng::SeedStream;
use crate::scalar::{Rational, Scalar};
use crate::tower::{adjoin, split, NumberTower, SplitEvent, TowerElem};
use crate::upoly::{rational_roots, UPoly};

/// Characteristic polynomial `det(tI - M)` by the Berkowitz scheme.
///
/// Division-free, so it works verbatim over towers without ever triggering a
/// split.
pub fn char_poly<K: Scalar>(m: &Matrix<K>) -> UPoly<K> {
    assert!(m.is_square(), "characteristic polynomial of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return UPoly::one();
    }
    // Coefficient vectors are kept in descending powers: c[0] t^r + ...
    let mut c = vec![K::one(), m[(0, 0)].neg()];
    for r in 1..n {
        // Principal (r+1)x(r+1) block: top-left r x r block M, row R, col S.
        let a = m[(r, r)].clone();
        let row: Vec<K> = (0..r).map(|j| m[(r, j)].clone()).collect();
        let col: Vec<K> = (0..r).map(|i| m[(i, r)].clone()).collect();

        // p[0] = 1, p[1] = -a, p[k+2] = -(R * M^k * S)
        let mut p = Vec::with_capacity(r + 2);
        p.push(K::one());
        p.push(a.neg());
        let mut w = col.clone();
        for k in 0..r {
            let dot = row
                .iter()
                .zip(&w)
                .fold(K::zero(), |acc, (x, y)| acc.add(&x.mul(y)));
            p.push(dot.neg());
            if k + 1 < r {
                // w <- M * w over the r x r block
                let mut next = vec![K::zero(); r];
                for i in 0..r {
                    for j in 0..r {
                        if m[(i, j)].is_zero() || w[j].is_zero() {
                            continue;
                        }
                        next[i] = next[i].add(&m[(i, j)].mul(&w[j]));
                    }
                }
                w = next;
            }
        }

        // Toeplitz product: new[i] = sum_j p[i - j] * c[j].
        let mut next = vec![K::zero(); r + 2];
        for (j, cj) in c.iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            for (k, pk) in p.iter().enumerate() {
                if j + k > r + 1 || pk.is_zero() {
                    continue;
                }
                next[j + k] = next[j + k].add(&pk.mul(cj));
            }
        }
        c = next;
    }
    c.reverse();
    UPoly::from_coeffs(c)
}

/// Monic minimal polynomial, found as the first linear dependency among
/// `I, M, M^2, ...`.
pub fn min_poly<K: Scalar>(m: &Matrix<K>) -> Result<UPoly<K>, SplitEvent> {
    assert!(m.is_square(), "minimal polynomial of non-square matrix");
    let n = m.rows();
    let mut space: RowSpace<K> = RowSpace::new(n * n);
    let mut power = Matrix::identity(n);
    for k in 0..=n {
        let mut tag = vec![K::zero(); n + 1];
        tag[k] = K::one();
        if let Some(dep) = space.insert(power.vectorize(), tag)? {
            return Ok(UPoly::from_coeffs(dep));
        }
        power = power.mul(m);
    }
    unreachable!("Cayley-Hamilton guarantees a dependency by degree n");
}

/// Evaluates a polynomial at a matrix argument by Horner's rule.
pub fn eval_at_matrix<K: Scalar>(p: &UPoly<K>, m: &Matrix<K>) -> Matrix<K> {
    assert!(m.is_square());
    let n = m.rows();
    let mut acc = Matrix::zero(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m);
        if !c.is_zero() {
            acc = acc.add(&Matrix::identity(n).scale(c));
        }
    }
    acc
}

/// Jordan-Chevalley decomposition `M = s + n` with `s` semisimple, `n`
/// nilpotent, both commuting polynomials in `M`.
///
/// Newton iteration against the squarefree part `q` of the characteristic
/// polynomial: `s <- s - q(s) * q'(s)^{-1}`, starting at `s = M`. The
/// derivative stays invertible in the commutative algebra generated by `M`
/// because `gcd(q, q') = 1`.
pub fn jordan_chevalley<K: Scalar>(
    m: &Matrix<K>,
) -> Result<(Matrix<K>, Matrix<K>), SplitEvent> {
    assert!(m.is_square());
    let n = m.rows();
    let q = char_poly(m).squarefree_part()?;
    let dq = q.derivative();
    let mut s = m.clone();
    // Quadratic convergence: the error lives in the nilpotent ideal, whose
    // index is at most n.
    let steps = (usize::BITS - n.leading_zeros()) as usize + 1;
    for _ in 0..steps {
        let qs = eval_at_matrix(&q, &s);
        if qs.is_zero_matrix() {
            break;
        }
        let dqs = eval_at_matrix(&dq, &s);
        let inv = dqs
            .inverse()?
            .expect("q'(s) invertible in the algebra generated by M");
        s = s.sub(&qs.mul(&inv));
    }
    debug_assert!(eval_at_matrix(&q, &s).is_zero_matrix());
    let nil = m.sub(&s);
    Ok((s, nil))
}

#[derive(Clone, Debug)]
pub enum EigenError {
    NotDiagonalizable,
    SplitLimitExceeded,
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::NotDiagonalizable => write!(f, "matrix is not diagonalizable"),
            EigenError::SplitLimitExceeded => {
                write!(f, "tower split limit exceeded during eigendecomposition")
            }
        }
    }
}

impl core::error::Error for EigenError {}

#[derive(Clone, Debug)]
pub struct EigenPair {
    pub value: TowerElem,
    pub vectors: Vec<Vec<TowerElem>>,
}

#[derive(Clone, Debug)]
pub struct Eigen {
    pub tower: Arc<NumberTower>,
    pub pairs: Vec<EigenPair>,
}

impl Eigen {
    /// Eigenvector columns in pair order; square iff the matrix was
    /// diagonalizable.
    pub fn basis_matrix(&self) -> Matrix<TowerElem> {
        let n: usize = self.pairs.iter().map(|p| p.vectors.len()).sum();
        let dim = self.pairs[0].vectors[0].len();
        let cols: Vec<&Vec<TowerElem>> =
            self.pairs.iter().flat_map(|p| p.vectors.iter()).collect();
        Matrix::from_fn(dim, n, |i, j| cols[j][i].clone())
    }
}

const MAX_SPLITS: usize = 256;

/// Exact eigendecomposition of a rational matrix with squarefree minimal
/// polynomial. Rational eigenvalues never leave the rationals; irrational
/// ones are adjoined to a fresh tower, splitting lazily as needed.
pub fn eigen_decompose(m: &Matrix<Rational>) -> Result<Eigen, EigenError> {
    eigen_decompose_in(m, &NumberTower::rationals())
}

/// As [`eigen_decompose`], but extending the given base tower.
pub fn eigen_decompose_in(
    m: &Matrix<Rational>,
    base: &Arc<NumberTower>,
) -> Result<Eigen, EigenError> {
    let n = m.rows();
    let mp = min_poly(m).expect("rational arithmetic cannot split");
    let sep = mp
        .gcd(&mp.derivative())
        .expect("rational arithmetic cannot split");
    if sep.degree() != Some(0) {
        return Err(EigenError::NotDiagonalizable);
    }

    // Collect the roots of the minimal polynomial: rational ones first, the
    // rest by adjoining generators, taking the smaller branch on each split.
    let (rat_roots, rest) = rational_roots(&mp);
    let mut tower = base.clone();
    let mut values: Vec<TowerElem> = rat_roots
        .iter()
        .map(|r| TowerElem::from_rat_in(&tower, r))
        .collect();
    let mut remaining: UPoly<TowerElem> =
        rest.map_coeffs(|c| TowerElem::from_rat_in(&tower, c));
    let mut splits = 0usize;
    let mut gen_index = 0usize;
    while remaining.degree().map_or(false, |d| d >= 1) {
        let step = || -> Result<(Arc<NumberTower>, TowerElem, UPoly<TowerElem>), SplitEvent> {
            if remaining.degree() == Some(1) {
                let root = remaining.coeff(0).div(&remaining.coeff(1))?.neg();
                return Ok((tower.clone(), root, UPoly::one()));
            }
            let name = ["a", "b", "c", "d", "e", "f", "g", "h"]
                .get(gen_index)
                .copied()
                .unwrap_or("z");
            match adjoin(&tower, &remaining, name) {
                Ok((next, gen)) => {
                    let lifted = remaining.map_coeffs(|c| c.reduce_into(&next));
                    let deflated = lifted.div_exact(&UPoly::linear_root(&gen))?;
                    Ok((next, gen, deflated))
                }
                Err(crate::tower::AdjoinError::Split(ev)) => Err(ev),
                Err(_) => unreachable!("modulus is squarefree of degree >= 2"),
            }
        };
        match step() {
            Ok((next, root, deflated)) => {
                values = values.iter().map(|v| v.reduce_into(&next)).collect();
                values.push(root);
                remaining = deflated.map_coeffs(|c| c.reduce_into(&next));
                tower = next;
                gen_index += 1;
            }
            Err(ev) => {
                splits += 1;
                if splits > MAX_SPLITS {
                    return Err(EigenError::SplitLimitExceeded);
                }
                let (preferred, _) = split(&tower, &ev);
                values = values.iter().map(|v| v.reduce_into(&preferred)).collect();
                remaining = remaining.map_coeffs(|c| c.reduce_into(&preferred));
                tower = preferred;
            }
        }
    }

    // Deterministic eigenvalue order: rational values ascending, then tower
    // values by increasing structural complexity.
    values.sort_by(|a, b| match (a.to_rat(), b.to_rat()) {
        (Some(x), Some(y)) => x.cmp(&y),
        (Some(_), None) => core::cmp::Ordering::Less,
        (None, Some(_)) => core::cmp::Ordering::Greater,
        (None, None) => a.structural_cmp(b),
    });

    // Eigenvectors: kernels of M - lambda I, re-run in a branch whenever a
    // split interrupts.
    loop {
        let attempt = || -> Result<Vec<EigenPair>, SplitEvent> {
            let lifted: Matrix<TowerElem> =
                m.map(|x| TowerElem::from_rat_in(&tower, x));
            let mut pairs = Vec::with_capacity(values.len());
            for v in &values {
                let shifted = lifted.sub(&Matrix::identity(n).scale(v));
                let vectors = shifted.kernel()?;
                pairs.push(EigenPair {
                    value: v.clone(),
                    vectors,
                });
            }
            Ok(pairs)
        };
        match attempt() {
            Ok(pairs) => {
                let total: usize = pairs.iter().map(|p| p.vectors.len()).sum();
                if total != n {
                    return Err(EigenError::NotDiagonalizable);
                }
                return Ok(Eigen { tower, pairs });
            }
            Err(ev) => {
                splits += 1;
                if splits > MAX_SPLITS {
                    return Err(EigenError::SplitLimitExceeded);
                }
                let (preferred, _) = split(&tower, &ev);
                values = values.iter().map(|v| v.reduce_into(&preferred)).collect();
                tower = preferred;
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum DiagonalizeError {
    /// A family member is not diagonalizable or the family does not commute.
    NotSimultaneouslyDiagonalizable,
    /// The retry budget ran out, which points at a broken random source
    /// rather than bad luck: generic draws succeed with probability one.
    RetriesExhausted { budget: usize },
    SplitLimitExceeded,
}

impl fmt::Display for DiagonalizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagonalizeError::NotSimultaneouslyDiagonalizable => {
                write!(f, "family is not simultaneously diagonalizable")
            }
            DiagonalizeError::RetriesExhausted { budget } => {
                write!(f, "diagonalizer retry budget ({}) exhausted", budget)
            }
            DiagonalizeError::SplitLimitExceeded => write!(f, "tower split limit exceeded"),
        }
    }
}

impl core::error::Error for DiagonalizeError {}

pub struct Diagonalization {
    pub basis: Matrix<TowerElem>,
    pub tower: Arc<NumberTower>,
    /// Diagonal of `S^{-1} A S` per family member, certification output.
    pub diagonals: Vec<Vec<TowerElem>>,
    pub retries: usize,
}

/// Finds `S` whose columns simultaneously diagonalize a commuting family of
/// diagonalizable rational matrices.
///
/// A random small-coefficient combination of the family is eigendecomposed;
/// its eigenvector basis generically works for every member, and the
/// conjugates are checked exactly before returning. Failed draws are retried
/// up to `retry_budget` times.
pub fn simultaneous_diagonalizer(
    family: &[Matrix<Rational>],
    seed: u64,
    retry_budget: usize,
) -> Result<Diagonalization, DiagonalizeError> {
    assert!(!family.is_empty(), "empty family");
    let n = family[0].rows();
    let mut rng = SeedStream::new(seed);

    for attempt in 0..retry_budget {
        let combo = loop {
            let coeffs: Vec<Rational> =
                (0..family.len()).map(|_| rng.next_small_coeff()).collect();
            if coeffs.iter().any(|c| !Scalar::is_zero(c)) {
                let mut m = Matrix::zero(n, n);
                for (c, f) in coeffs.iter().zip(family) {
                    m = m.add(&f.scale(c));
                }
                break m;
            }
        };
        let eig = match eigen_decompose(&combo) {
            Ok(e) => e,
            Err(EigenError::NotDiagonalizable) => {
                return Err(DiagonalizeError::NotSimultaneouslyDiagonalizable)
            }
            Err(EigenError::SplitLimitExceeded) => {
                return Err(DiagonalizeError::SplitLimitExceeded)
            }
        };
        let mut tower = eig.tower.clone();
        let mut basis = eig.basis_matrix();
        if basis.cols() != n {
            return Err(DiagonalizeError::NotSimultaneouslyDiagonalizable);
        }

        // Certify: every family member must conjugate to a diagonal matrix.
        let mut splits = 0usize;
        let outcome = loop {
            let certify = || -> Result<Option<Vec<Vec<TowerElem>>>, SplitEvent> {
                let inv = basis
                    .inverse()?
                    .expect("eigenvector basis spans the ambient space");
                let mut diags = Vec::with_capacity(family.len());
                for a in family {
                    let lifted: Matrix<TowerElem> =
                        a.map(|x| TowerElem::from_rat_in(&tower, x));
                    let conj = inv.mul(&lifted).mul(&basis);
                    if !conj.is_diagonal() {
                        return Ok(None);
                    }
                    diags.push((0..n).map(|i| conj[(i, i)].clone()).collect());
                }
                Ok(Some(diags))
            };
            match certify() {
                Ok(Some(diags)) => break Some(diags),
                Ok(None) => break None,
                Err(ev) => {
                    splits += 1;
                    if splits > MAX_SPLITS {
                        return Err(DiagonalizeError::SplitLimitExceeded);
                    }
                    let (preferred, _) = split(&tower, &ev);
                    basis = basis.map(|x| x.reduce_into(&preferred));
                    tower = preferred;
                }
            }
        };
        if let Some(diagonals) = outcome {
            return Ok(Diagonalization {
                basis,
                tower,
                diagonals,
                retries: attempt,
            });
        }
    }
    Err(DiagonalizeError::RetriesExhausted {
        budget: retry_budget,
    })
}

/// Human-readable tower summary for diagnostics, e.g. `a^2 - 2 = 0`.
pub fn tower_summary(tower: &NumberTower) -> Vec<String> {
    (0..tower.height())
        .map(|i| format!("{} = 0", tower.modulus_display(i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::mat_i64;
    use crate::scalar::rat_int;

    fn upi(coeffs: &[i64]) -> UPoly<Rational> {
        UPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// Cofactor-expansion determinant of `tI - M` over `Q[t]`, the
    /// independent oracle for the Berkowitz implementation.
    fn charpoly_oracle(m: &Matrix<Rational>) -> UPoly<Rational> {
        fn det(rows: &[Vec<UPoly<Rational>>]) -> UPoly<Rational> {
            let n = rows.len();
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = UPoly::zero();
            for j in 0..n {
                if rows[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<UPoly<Rational>>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, v)| v.clone())
                            .collect()
                    })
                    .collect();
                let term = rows[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
        let n = m.rows();
        let entries: Vec<Vec<UPoly<Rational>>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            UPoly::from_coeffs(vec![-m[(i, j)].clone(), rat_int(1)])
                        } else {
                            UPoly::constant(-m[(i, j)].clone())
                        }
                    })
                    .collect()
            })
            .collect();
        det(&entries)
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(char_poly(&mat_i64(2, 2, &[0, 1, 1, 0])), upi(&[-1, 0, 1]));
        assert_eq!(char_poly(&mat_i64(2, 2, &[1, 0, 0, 1])), upi(&[1, -2, 1]));
        // [[1,2],[3,4]] -> t^2 - 5t - 2 against the hand expansion
        let m = mat_i64(2, 2, &[1, 2, 3, 4]);
        assert_eq!(char_poly(&m), upi(&[-2, -5, 1]));
        assert_eq!(char_poly(&m), charpoly_oracle(&m));
    }

    #[test]
    fn charpoly_matches_oracle_on_samples() {
        let mut rng = SeedStream::new(11);
        for n in 1..=4 {
            for _ in 0..6 {
                let m = Matrix::from_fn(n, n, |_, _| {
                    rat_int(rng.next_below(7) as i64 - 3)
                });
                assert_eq!(char_poly(&m), charpoly_oracle(&m));
            }
        }
    }

    #[test]
    fn minpoly_examples() {
        assert_eq!(min_poly(&mat_i64(2, 2, &[1, 0, 0, 1])).unwrap(), upi(&[-1, 1]));
        assert_eq!(
            min_poly(&mat_i64(2, 2, &[1, 1, 0, 1])).unwrap(),
            upi(&[1, -2, 1])
        );
        // diag(1,2,2): (t-1)(t-2), checked by annihilation
        let m = mat_i64(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 2]);
        let mp = min_poly(&m).unwrap();
        assert_eq!(mp, upi(&[2, -3, 1]));
        assert!(eval_at_matrix(&mp, &m).is_zero_matrix());
    }

    #[test]
    fn cayley_hamilton_on_samples() {
        let mut rng = SeedStream::new(5);
        for _ in 0..8 {
            let m = Matrix::from_fn(3, 3, |_, _| rat_int(rng.next_below(5) as i64 - 2));
            assert!(eval_at_matrix(&char_poly(&m), &m).is_zero_matrix());
        }
    }

    #[test]
    fn jordan_chevalley_examples() {
        // Jordan block: s = I, n = E12
        let m = mat_i64(2, 2, &[1, 1, 0, 1]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, mat_i64(2, 2, &[1, 0, 0, 1]));
        assert_eq!(n, mat_i64(2, 2, &[0, 1, 0, 0]));

        // Distinct eigenvalues: already semisimple
        let m = mat_i64(2, 2, &[1, 1, 0, 2]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert_eq!(s, m);
        assert!(n.is_zero_matrix());

        // Nilpotent input
        let m = mat_i64(2, 2, &[0, 1, 0, 0]);
        let (s, n) = jordan_chevalley(&m).unwrap();
        assert!(s.is_zero_matrix());
        assert_eq!(n, m);
    }

    #[test]
    fn jordan_chevalley_identities_hold() {
        let mut rng = SeedStream::new(23);
        for _ in 0..6 {
            let m = Matrix::from_fn(4, 4, |_, _| rat_int(rng.next_below(5) as i64 - 2));
            let (s, n) = jordan_chevalley(&m).unwrap();
            assert_eq!(s.add(&n), m);
            assert_eq!(s.mul(&n), n.mul(&s));
            assert!(n.pow(4).is_zero_matrix(), "n must be nilpotent");
            let mp = min_poly(&s).unwrap();
            assert_eq!(mp.gcd(&mp.derivative()).unwrap(), UPoly::one());
        }
    }

    #[test]
    fn eigen_rational_spectrum() {
        let m = mat_i64(2, 2, &[1, 0, 0, 2]);
        let e = eigen_decompose(&m).unwrap();
        assert_eq!(e.tower.height(), 0);
        let values: Vec<Rational> = e.pairs.iter().map(|p| p.value.to_rat().unwrap()).collect();
        assert_eq!(values, vec![rat_int(1), rat_int(2)]);

        // Swap matrix: eigenvalues -1, 1 with eigenvectors (1,-1), (1,1).
        let m = mat_i64(2, 2, &[0, 1, 1, 0]);
        let e = eigen_decompose(&m).unwrap();
        assert_eq!(e.pairs.len(), 2);
        for p in &e.pairs {
            assert_eq!(p.vectors.len(), 1);
        }
    }

    #[test]
    fn eigen_adjoins_sqrt2() {
        let m = mat_i64(2, 2, &[0, 2, 1, 0]);
        let e = eigen_decompose(&m).unwrap();
        assert_eq!(e.tower.height(), 1);
        assert_eq!(e.pairs.len(), 2);
        let lifted = m.map(|x| TowerElem::from_rat_in(&e.tower, x));
        for p in &e.pairs {
            // lambda^2 = 2 exactly, and M v = lambda v symbolically.
            assert_eq!(p.value.mul(&p.value).to_rat(), Some(rat_int(2)));
            for v in &p.vectors {
                let mv = lifted.mul_vec(v);
                let lv: Vec<TowerElem> = v.iter().map(|x| x.mul(&p.value)).collect();
                assert_eq!(mv, lv);
            }
        }
    }

    #[test]
    fn eigen_rejects_jordan_block() {
        let m = mat_i64(2, 2, &[1, 1, 0, 1]);
        assert!(matches!(
            eigen_decompose(&m),
            Err(EigenError::NotDiagonalizable)
        ));
    }

    #[test]
    fn diagonalizer_identity_family() {
        let fam = vec![mat_i64(2, 2, &[1, 0, 0, 1])];
        let d = simultaneous_diagonalizer(&fam, 1, 16).unwrap();
        assert_eq!(d.basis.cols(), 2);
        assert_eq!(d.retries, 0);
    }

    #[test]
    fn diagonalizer_diagonal_family() {
        let fam = vec![
            mat_i64(2, 2, &[1, 0, 0, 2]),
            mat_i64(2, 2, &[3, 0, 0, 5]),
        ];
        let d = simultaneous_diagonalizer(&fam, 7, 16).unwrap();
        // Columns may permute; certification already verified diagonality.
        assert_eq!(d.diagonals.len(), 2);
    }

    #[test]
    fn diagonalizer_symmetric_pair() {
        let fam = vec![
            mat_i64(2, 2, &[0, 1, 1, 0]),
            mat_i64(2, 2, &[2, 1, 1, 2]),
        ];
        let d = simultaneous_diagonalizer(&fam, 3, 16).unwrap();
        let inv = d.basis.inverse().unwrap().unwrap();
        for a in &fam {
            let lifted = a.map(|x| TowerElem::from_rat_in(&d.tower, x));
            assert!(inv.mul(&lifted).mul(&d.basis).is_diagonal());
        }
    }

    #[test]
    fn eigen_with_splitting_reducible_quartic() {
        // Block diagonal with blocks [[0,2],[1,0]] and [[0,8],[1,0]]:
        // minimal polynomial (t^2-2)(t^2-8), squarefree, no rational roots.
        let m = mat_i64(
            4,
            4,
            &[0, 2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 8, 0, 0, 1, 0],
        );
        let e = eigen_decompose(&m).unwrap();
        assert_eq!(e.pairs.iter().map(|p| p.vectors.len()).sum::<usize>(), 4);
        let lifted = m.map(|x| TowerElem::from_rat_in(&e.tower, x));
        for p in &e.pairs {
            for v in &p.vectors {
                let mv = lifted.mul_vec(v);
                let lv: Vec<TowerElem> = v.iter().map(|x| x.mul(&p.value)).collect();
                assert_eq!(mv, lv);
            }
        }
    }
}
