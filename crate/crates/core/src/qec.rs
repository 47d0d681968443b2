//! Numeric QEC of arbitrary connected graphs and cross-validation against
//! the strongly regular closed form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, SrgParams};
use crate::spectra::{self, cluster_spectrum};
use crate::srg;
use crate::tolerance::Tolerances;

/// Whether a graph admits a quadratic embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QeClass {
    /// QEC < 0.
    Yes,
    /// QEC > 0: no quadratic embedding.
    No,
    /// QEC = 0: embeddable, on the edge of the class.
    Boundary,
}

impl QeClass {
    /// Classifies a numeric QEC with a symmetric dead band around zero.
    pub fn from_value(qec: f64, band: f64) -> QeClass {
        if qec.abs() <= band {
            QeClass::Boundary
        } else if qec < 0.0 {
            QeClass::Yes
        } else {
            QeClass::No
        }
    }

    /// Yes or boundary.
    pub fn is_embeddable(&self) -> bool {
        !matches!(self, QeClass::No)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            QeClass::Yes => "yes",
            QeClass::No => "no",
            QeClass::Boundary => "boundary",
        }
    }
}

impl fmt::Display for QeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QecMethod {
    ClosedForm,
    Numeric,
}

impl fmt::Display for QecMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QecMethod::ClosedForm => "closed_form",
            QecMethod::Numeric => "numeric",
        })
    }
}

/// QEC together with the two largest distance eigenvalues.
///
/// `delta2 <= qec < delta1` always; closed-form reports have
/// `qec == delta2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QecReport {
    pub qec: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub qe_class: QeClass,
    pub method: QecMethod,
}

/// Output of [`qec_numeric`].
#[derive(Debug, Clone)]
pub struct NumericQec {
    pub report: QecReport,
    /// Unit vector orthogonal to `1` attaining the maximum.
    pub maximizer: Vec<f64>,
    /// Full spectrum of the distance matrix, descending.
    pub distance_spectrum: Vec<f64>,
    /// Common row sum of `D` when the graph is transmission regular.
    pub transmission: Option<u64>,
    /// Whether `|qec - δ₂| <= 1e-9`.
    pub attains_delta2: bool,
}

/// QEC of a connected graph: the largest eigenvalue of the distance matrix
/// restricted to the complement of the all-ones vector.
pub fn qec_numeric(g: &Graph) -> Result<NumericQec> {
    let tol = Tolerances::DEFAULT;
    if g.n() < 2 {
        return Err(Error::input("QEC is defined for graphs with at least two vertices"));
    }
    let d = g.distance_matrix()?;
    let dm = d.to_sym_matrix();
    let full = spectra::jacobi_eigen(&dm)?;
    let restricted = spectra::restricted_eigen(&dm)?;

    let qec = restricted.values()[0];
    let (delta1, delta2) = (full.values[0], full.values[1]);
    let slack = tol.classification_band * dm.max_abs().max(1.0);
    if qec < delta2 - slack || qec >= delta1 {
        return Err(Error::Numerical {
            message: format!(
                "interlacing violated: delta2 {delta2}, qec {qec}, delta1 {delta1}"
            ),
            residual: (delta2 - qec).max(qec - delta1),
        });
    }

    let sums = d.row_sums();
    let transmission = sums.iter().all(|&s| s == sums[0]).then_some(sums[0]);
    Ok(NumericQec {
        report: QecReport {
            qec,
            delta1,
            delta2,
            qe_class: QeClass::from_value(qec, tol.classification_band),
            method: QecMethod::Numeric,
        },
        maximizer: restricted.lifted_vector(0),
        distance_spectrum: full.values,
        transmission,
        attains_delta2: (qec - delta2).abs() <= tol.classification_band,
    })
}

/// `Some(row sum)` when every row of the distance matrix has the same sum.
pub fn is_transmission_regular(g: &Graph) -> Result<Option<u64>> {
    let sums = g.distance_matrix()?.row_sums();
    Ok(sums.iter().all(|&s| s == sums[0]).then_some(sums[0]))
}

/// Predicted vs observed distance spectrum of an SRG.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumMatch {
    /// `(value, multiplicity)` ascending: `-r-2 (×f)`, `-s-2 (×g)`,
    /// `2(n-1)-k (×1)`.
    pub expected: Vec<(f64, i64)>,
    /// Clusters of the numeric spectrum, descending.
    pub observed: Vec<(f64, usize)>,
    pub matches: bool,
}

/// Checks that a numeric spectrum consists of exactly the expected values
/// with the expected multiplicities.
pub fn match_spectrum(numeric: &[f64], expected: &[(f64, i64)]) -> SpectrumMatch {
    let tol = Tolerances::DEFAULT;
    let observed = cluster_spectrum(numeric, tol.cluster_gap);
    let distinct = expected.iter().filter(|(_, m)| *m > 0).count();
    let counts_ok = expected.iter().all(|&(value, mult)| {
        let hits = numeric
            .iter()
            .filter(|v| (*v - value).abs() <= tol.eigenvalue_match)
            .count();
        hits as i64 == mult
    });
    let total: i64 = expected.iter().map(|(_, m)| m).sum();
    SpectrumMatch {
        expected: expected.to_vec(),
        matches: counts_ok && observed.len() == distinct && total == numeric.len() as i64,
        observed,
    }
}

/// Numeric QEC, plus the closed form when the graph is an SRG with μ ≥ 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub numeric: QecReport,
    pub transmission_regular: bool,
    pub attains_delta2: bool,
    pub params: Option<SrgParams>,
    pub closed_form: Option<QecReport>,
    /// `|numeric - closed form|`.
    pub difference: Option<f64>,
    pub spectrum: Option<SpectrumMatch>,
}

impl CrossCheck {
    /// False when a closed form exists and disagrees with the numeric
    /// engine beyond `1e-8`, or the distance spectrum has the wrong shape.
    pub fn passed(&self) -> bool {
        self.difference
            .is_none_or(|d| d <= Tolerances::DEFAULT.cross_check)
            && self.spectrum.as_ref().is_none_or(|s| s.matches)
    }
}

/// Runs the numeric engine and, for SRGs with μ ≥ 1, compares against the
/// closed form and the predicted distance spectrum.
pub fn cross_check(g: &Graph) -> Result<CrossCheck> {
    let numeric = qec_numeric(g)?;
    let mut out = CrossCheck {
        numeric: numeric.report,
        transmission_regular: numeric.transmission.is_some(),
        attains_delta2: numeric.attains_delta2,
        params: None,
        closed_form: None,
        difference: None,
        spectrum: None,
    };
    if let Some(p) = g.detect_srg().connected_params() {
        let closed = srg::qec_closed_form(p)?;
        out.params = Some(p);
        out.difference = Some((closed.qec - numeric.report.qec).abs());
        out.closed_form = Some(closed);
        let expected = srg::distance_spectrum(p)?;
        out.spectrum = Some(match_spectrum(&numeric.distance_spectrum, &expected));
    }
    Ok(out)
}
