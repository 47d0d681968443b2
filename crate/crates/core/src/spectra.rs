//! Dense symmetric eigensolver and the eigenproblem restricted to the
//! orthogonal complement of the all-ones vector.

use crate::error::{Error, Result};
use crate::tolerance::Tolerances;

/// Dense real symmetric matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds from the upper triangle of `f`; the lower triangle mirrors it,
    /// so the result is symmetric by construction.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v;
            }
        }
        SymMatrix { n, data }
    }

    /// Builds from explicit rows, rejecting anything not exactly symmetric.
    #[allow(clippy::needless_range_loop)]
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::input("matrix rows must all have length n"));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::input(format!(
                        "matrix is not symmetric at ({i},{j}): {} vs {}",
                        rows[i][j], rows[j][i]
                    )));
                }
            }
        }
        Ok(SymMatrix {
            n,
            data: rows.concat(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        self.data
            .chunks_exact(self.n.max(1))
            .take(self.n)
            .map(|row| dot(row, x))
            .collect()
    }

    /// `<x, M x>`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        dot(x, &self.mul_vec(x))
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Row sums, i.e. `M·1`.
    pub fn row_sums(&self) -> Vec<f64> {
        self.mul_vec(&vec![1.0; self.n])
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Eigenvalues sorted descending with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Column-major: eigenvector `i` is `vectors[i*n..(i+1)*n]`.
    vectors: Vec<f64>,
    n: usize,
}

impl EigenDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i * self.n..(i + 1) * self.n]
    }

    /// Largest `|M v - λ v|` over all pairs.
    pub fn max_residual(&self, m: &SymMatrix) -> f64 {
        (0..self.n)
            .map(|i| {
                let v = self.vector(i);
                let mv = m.mul_vec(v);
                mv.iter()
                    .zip(v)
                    .map(|(a, b)| (a - self.values[i] * b).abs())
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }

    /// Largest `|<v_i, v_j> - δ_ij|`.
    pub fn max_orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(self.vector(i), self.vector(j)) - target).abs());
            }
        }
        worst
    }

    /// `V diag(λ) Vᵀ`.
    pub fn reconstruct(&self) -> SymMatrix {
        SymMatrix::from_fn(self.n, |r, c| {
            (0..self.n)
                .map(|i| self.values[i] * self.vector(i)[r] * self.vector(i)[c])
                .sum()
        })
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            s += 2.0 * a[i * n + j] * a[i * n + j];
        }
    }
    s.sqrt()
}

/// Full eigendecomposition by cyclic-by-row Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm falls below
/// `1e-12 * |M|_F`, at most 100 sweeps. Equal eigenvalues keep the order in
/// which the rotations left them.
pub fn jacobi_eigen(m: &SymMatrix) -> Result<EigenDecomposition> {
    let tol = Tolerances::DEFAULT;
    let n = m.n;
    let mut a = m.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let target = tol.jacobi_off * m.frobenius();
    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > target {
        if sweeps == tol.jacobi_max_sweeps {
            return Err(Error::Numerical {
                message: format!("Jacobi did not converge in {sweeps} sweeps"),
                residual: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                rotate(&mut a, n, p, q, c, s);
                // V <- V R
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    // stable: ties keep rotation order
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &i in &order {
        vectors.extend((0..n).map(|k| v[k * n + i]));
    }
    Ok(EigenDecomposition { values, vectors, n })
}

/// `A <- Rᵀ A R` for the plane rotation in `(p, q)` that zeroes `A[p][q]`.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize, c: f64, s: f64) {
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let apq = a[p * n + q];
    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    let t = s / c;
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

/// The eigenproblem of `M` restricted to `1⊥`.
#[derive(Debug, Clone)]
pub struct RestrictedEigen {
    /// `n-1` eigenvalues of `Qᵀ M Q`, descending.
    pub decomposition: EigenDecomposition,
    /// Orthonormal basis of `1⊥`; column `i` is `basis[i*n..(i+1)*n]`.
    basis: Vec<f64>,
    n: usize,
}

impl RestrictedEigen {
    pub fn values(&self) -> &[f64] {
        &self.decomposition.values
    }

    /// Basis vector `i` of `1⊥` in the original coordinates.
    pub fn basis_vector(&self, i: usize) -> &[f64] {
        &self.basis[i * self.n..(i + 1) * self.n]
    }

    /// Eigenvector `i` lifted back to `R^n`; unit norm and orthogonal to `1`.
    pub fn lifted_vector(&self, i: usize) -> Vec<f64> {
        let y = self.decomposition.vector(i);
        let mut out = vec![0.0; self.n];
        for (j, &yj) in y.iter().enumerate() {
            for (o, b) in out.iter_mut().zip(self.basis_vector(j)) {
                *o += yj * b;
            }
        }
        out
    }
}

/// Orthonormal basis of `1⊥` from the Householder reflector `H` with
/// `H e_1 = 1/√n`: the last `n-1` columns of `H`.
fn ones_complement_basis(n: usize) -> Vec<f64> {
    let u = 1.0 / (n as f64).sqrt();
    // w = e_1 - u·1, H = I - 2 w wᵀ / (wᵀ w)
    let mut w = vec![-u; n];
    w[0] += 1.0;
    let ww = dot(&w, &w);
    let mut basis = Vec::with_capacity(n * (n - 1));
    for col in 1..n {
        let scale = 2.0 * w[col] / ww;
        basis.extend((0..n).map(|row| f64::from(u8::from(row == col)) - scale * w[row]));
    }
    basis
}

/// Eigendecomposition of `M` restricted to the orthogonal complement of
/// the all-ones vector, computed as the spectrum of `Qᵀ M Q`.
pub fn restricted_eigen(m: &SymMatrix) -> Result<RestrictedEigen> {
    let n = m.n;
    if n < 2 {
        return Err(Error::input("restricted spectrum needs n >= 2"));
    }
    let basis = ones_complement_basis(n);
    let col = |i: usize| &basis[i * n..(i + 1) * n];
    let mq: Vec<Vec<f64>> = (0..n - 1).map(|j| m.mul_vec(col(j))).collect();
    let reduced = SymMatrix::from_fn(n - 1, |i, j| dot(col(i), &mq[j]));
    let decomposition = jacobi_eigen(&reduced)?;
    Ok(RestrictedEigen {
        decomposition,
        basis,
        n,
    })
}

/// The `n-1` eigenvalues of `M` on `1⊥`, descending.
pub fn restricted_spectrum(m: &SymMatrix) -> Result<Vec<f64>> {
    Ok(restricted_eigen(m)?.decomposition.values)
}

/// Groups a descending spectrum into runs whose consecutive gaps are at
/// most `gap`. Returns `(mean, multiplicity)` per run.
pub fn cluster_spectrum(values: &[f64], gap: f64) -> Vec<(f64, usize)> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut clusters: Vec<Vec<f64>> = Vec::new();
    for v in sorted {
        match clusters.last_mut() {
            Some(run) if run.last().is_some_and(|&last| last - v <= gap) => run.push(v),
            _ => clusters.push(vec![v]),
        }
    }
    clusters
        .into_iter()
        .map(|run| (run.iter().sum::<f64>() / run.len() as f64, run.len()))
        .collect()
}
