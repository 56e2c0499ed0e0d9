//! Shared dense linear-algebra helpers: sorted symmetric eigendecomposition,
//! jittered Cholesky factorization, and log-determinants of `I + K/lambda`.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Symmetric eigendecomposition with eigenvalues sorted ascending and the
/// eigenvector columns permuted to match.
pub fn sym_eigen_sorted(m: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let n = m.nrows();
    let eig = m.clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = DVector::from_iterator(n, order.iter().map(|&i| eig.eigenvalues[i]));
    let mut vectors = DMatrix::zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &eig.eigenvectors.column(src));
    }
    (values, vectors)
}

/// Lower Cholesky factor of `m`, retrying with an escalating diagonal
/// jitter on failure. The first attempt adds no jitter; subsequent
/// attempts add `jitter * 100^(attempt-1)` to the diagonal.
pub fn cholesky_jittered(
    m: &DMatrix<f64>,
    jitter: f64,
    max_attempts: usize,
) -> Result<DMatrix<f64>> {
    let n = m.nrows();
    let mut shift = 0.0;
    for attempt in 0..max_attempts {
        let mut work = m.clone();
        if attempt > 0 {
            shift = if attempt == 1 {
                jitter
            } else {
                shift * 100.0
            };
            for i in 0..n {
                work[(i, i)] += shift;
            }
        }
        if let Some(chol) = work.cholesky() {
            return Ok(chol.l());
        }
    }
    Err(Error::Numerical(format!(
        "Cholesky failed after {max_attempts} attempts (last jitter {shift:.3e})"
    )))
}

/// `log det(I + K/lambda)` computed via Cholesky of `I + K/lambda`,
/// with a single jitter retry on factorization failure.
pub fn log_det_i_plus(k: &DMatrix<f64>, lambda: f64) -> Result<f64> {
    if lambda <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    let n = k.nrows();
    let mut m = k / lambda;
    for i in 0..n {
        m[(i, i)] += 1.0;
    }
    let l = cholesky_jittered(&m, 1e-8, 2)?;
    Ok(2.0 * (0..n).map(|i| l[(i, i)].ln()).sum::<f64>())
}

/// Symmetrize in place: `m <- (m + m^T)/2`.
pub fn symmetrize(m: &mut DMatrix<f64>) {
    let t = m.transpose();
    *m += t;
    *m *= 0.5;
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn eigen_sorted_ascending() {
        let m = DMatrix::from_row_slice(3, 3, &[2.0, -1.0, 0.0, -1.0, 2.0, -1.0, 0.0, -1.0, 2.0]);
        let (vals, vecs) = sym_eigen_sorted(&m);
        assert!(vals[0] <= vals[1] && vals[1] <= vals[2]);
        // reconstruct
        let d = DMatrix::from_diagonal(&vals);
        let rec = &vecs * d * vecs.transpose();
        assert_relative_eq!(rec, m, epsilon = 1e-10);
    }

    #[test]
    fn logdet_matches_direct_determinant() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, 0.5, 0.5, 2.0]);
        let k = &a * a.transpose();
        let lambda = 0.7;
        let direct = (DMatrix::identity(2, 2) + &k / lambda).determinant().ln();
        let ld = log_det_i_plus(&k, lambda).unwrap();
        assert_relative_eq!(ld, direct, epsilon = 1e-12);
    }

    #[test]
    fn jitter_recovers_semidefinite_matrix() {
        // rank-1 PSD matrix; exact Cholesky of the singular part can fail
        let v = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        let mut m = &v * v.transpose();
        m[(2, 2)] -= 1e-14; // nudge slightly indefinite
        let l = cholesky_jittered(&m, 1e-8, 3).unwrap();
        let rec = &l * l.transpose();
        assert_relative_eq!(rec, m, epsilon = 1e-6);
    }

    #[test]
    fn logdet_rejects_bad_lambda() {
        let k = DMatrix::identity(2, 2);
        assert!(log_det_i_plus(&k, 0.0).is_err());
    }
}
