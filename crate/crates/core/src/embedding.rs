//! Quadratic embeddings: maps `ψ: V → R^dim` with
//! `|ψ(x) - ψ(y)|² = d(x, y)`.
//!
//! The centered Gram matrix `M = -½ P D P`, `P = I - J/n`, is positive
//! semidefinite exactly when the graph is of QE class; its eigenvectors
//! scaled by the square roots of the eigenvalues give the coordinates.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::DistanceMatrix;
use crate::spectra::{jacobi_eigen, SymMatrix};
use crate::tolerance::Tolerances;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Embedding {
    pub n: usize,
    pub dim: usize,
    /// One row of `dim` coordinates per vertex.
    pub points: Vec<Vec<f64>>,
    /// Largest `| |ψ(x)-ψ(y)|² - d(x,y) |` over all pairs.
    pub max_deviation: f64,
}

impl Embedding {
    /// Norm of the centroid of the points.
    pub fn centroid_norm(&self) -> f64 {
        let mut c = vec![0.0; self.dim];
        for p in &self.points {
            for (ci, x) in c.iter_mut().zip(p) {
                *ci += x;
            }
        }
        c.iter().map(|v| (v / self.n as f64).powi(2)).sum::<f64>().sqrt()
    }
}

/// `M = -½ P D P` with `P = I - J/n`.
pub fn gram_matrix(d: &DistanceMatrix) -> SymMatrix {
    let n = d.n();
    let nf = n as f64;
    let means: Vec<f64> = d
        .row_sums()
        .into_iter()
        .map(|s| s as f64 / nf)
        .collect();
    let grand = means.iter().sum::<f64>() / nf;
    // D symmetric: row means equal column means
    SymMatrix::from_fn(n, |i, j| -0.5 * (f64::from(d.get(i, j)) - means[i] - means[j] + grand))
}

/// Builds a quadratic embedding, or fails with [`Error::NotQeClass`] when the
/// Gram matrix has an eigenvalue below `-1e-9 |M|_max`.
pub fn construct_embedding(d: &DistanceMatrix) -> Result<Embedding> {
    let tol = Tolerances::DEFAULT;
    let n = d.n();
    let m = gram_matrix(d);
    let eig = jacobi_eigen(&m)?;
    let min = eig.values.last().copied().unwrap_or(0.0);
    if min < -tol.psd_relative * m.max_abs() {
        // on 1⊥, M = -½ D, so the most negative eigenvalue is -QEC/2
        return Err(Error::NotQeClass {
            min_eigenvalue: min,
            qec: -2.0 * min,
        });
    }

    let kept: Vec<usize> = (0..n).filter(|&i| eig.values[i] > tol.rank).collect();
    let scales: Vec<f64> = kept.iter().map(|&i| eig.values[i].sqrt()).collect();
    let points = (0..n)
        .map(|x| {
            kept.iter()
                .zip(&scales)
                .map(|(&i, s)| eig.vector(i)[x] * s)
                .collect()
        })
        .collect();
    let mut e = Embedding {
        n,
        dim: kept.len(),
        points,
        max_deviation: 0.0,
    };
    e.max_deviation = verify_embedding(&e, d)?;
    if e.max_deviation > tol.embedding_deviation {
        return Err(Error::Numerical {
            message: "embedding does not reproduce the distance matrix".into(),
            residual: e.max_deviation,
        });
    }
    Ok(e)
}

/// Largest absolute difference between squared Euclidean distances of the
/// points and graph distances.
pub fn verify_embedding(e: &Embedding, d: &DistanceMatrix) -> Result<f64> {
    if e.n != d.n() || e.points.len() != e.n {
        return Err(Error::input(format!(
            "embedding has {} points, distance matrix has {} vertices",
            e.points.len(),
            d.n()
        )));
    }
    if e.points.iter().any(|p| p.len() != e.dim) {
        return Err(Error::input(format!("every point must have {} coordinates", e.dim)));
    }
    let mut worst: f64 = 0.0;
    for x in 0..e.n {
        for y in (x + 1)..e.n {
            let sq: f64 = e.points[x]
                .iter()
                .zip(&e.points[y])
                .map(|(a, b)| (a - b) * (a - b))
                .sum();
            worst = worst.max((sq - f64::from(d.get(x, y))).abs());
        }
    }
    Ok(worst)
}
