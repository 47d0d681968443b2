//! Numerical thresholds shared by every module.

/// All floating point thresholds in one record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max-norm residual `|M v - λ v|` accepted for an eigenpair.
    pub residual: f64,
    /// Deviation from orthonormality accepted for eigenvectors.
    pub ortho: f64,
    /// Jacobi stops once the off-diagonal Frobenius norm drops below
    /// `jacobi_off * |M|_F`.
    pub jacobi_off: f64,
    pub jacobi_max_sweeps: usize,
    /// `|qec| <= classification_band` is reported as the boundary class.
    pub classification_band: f64,
    /// Relative PSD threshold for the centered Gram matrix.
    pub psd_relative: f64,
    /// Eigenvalues above this count towards the embedding dimension.
    pub rank: f64,
    /// Largest accepted `| |ψ(x)-ψ(y)|² - d(x,y) |`.
    pub embedding_deviation: f64,
    /// Closed form vs numeric agreement.
    pub cross_check: f64,
    /// Gap used to cluster a numeric spectrum into distinct eigenvalues.
    pub cluster_gap: f64,
    /// Distance from a predicted eigenvalue accepted when matching clusters.
    pub eigenvalue_match: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        residual: 1e-9,
        ortho: 1e-9,
        jacobi_off: 1e-12,
        jacobi_max_sweeps: 100,
        classification_band: 1e-9,
        psd_relative: 1e-9,
        rank: 1e-9,
        embedding_deviation: 1e-8,
        cross_check: 1e-8,
        cluster_gap: 1e-6,
        eigenvalue_match: 1e-8,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
