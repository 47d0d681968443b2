//! Closed-form results for strongly regular graphs, computed from the
//! parameter tuple `(n, k, λ, μ)` alone.
//!
//! Feasibility logic is exact integer arithmetic. Floating point only
//! enters for the irrational eigenvalues of conference parameters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, SrgParams};
use crate::qec::{QeClass, QecMethod, QecReport};

/// A necessary condition that a parameter tuple can violate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// `n >= 4`
    VertexCount,
    /// `2 <= k <= n-2`
    DegreeRange,
    /// `1 <= μ <= k`
    MuRange,
    /// `0 <= λ <= k-2`
    LambdaRange,
    /// `(n-k-1)μ = (k-λ-1)k`
    ParameterRelation,
    /// Non-conference tuples need integral `s` and `r`.
    NonIntegralEigenvalues,
    /// Multiplicities `f`, `g` must be non-negative integers.
    NonIntegralMultiplicity,
    /// `2k + (n-1)(λ-μ) = 0` forces `k=(n-1)/2, λ=(n-5)/4, μ=(n-1)/4`,
    /// `n ≡ 1 (mod 4)`.
    ConferenceShape,
}

impl Condition {
    pub fn id(&self) -> &'static str {
        match self {
            Condition::VertexCount => "vertex_count",
            Condition::DegreeRange => "degree_range",
            Condition::MuRange => "mu_range",
            Condition::LambdaRange => "lambda_range",
            Condition::ParameterRelation => "parameter_relation",
            Condition::NonIntegralEigenvalues => "non_integral_eigenvalues",
            Condition::NonIntegralMultiplicity => "non_integral_multiplicity",
            Condition::ConferenceShape => "conference_shape",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            Condition::VertexCount => "n >= 4",
            Condition::DegreeRange => "2 <= k <= n-2",
            Condition::MuRange => "1 <= mu <= k",
            Condition::LambdaRange => "0 <= lambda <= k-2",
            Condition::ParameterRelation => "(n-k-1)mu = (k-lambda-1)k",
            Condition::NonIntegralEigenvalues => {
                "s and r must be integers when 2k+(n-1)(lambda-mu) != 0"
            }
            Condition::NonIntegralMultiplicity => {
                "multiplicities f and g must be non-negative integers"
            }
            Condition::ConferenceShape => {
                "2k+(n-1)(lambda-mu) = 0 requires k=(n-1)/2, lambda=(n-5)/4, mu=(n-1)/4, n = 1 mod 4"
            }
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.id(), self.describe())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "violated", rename_all = "snake_case")]
pub enum Feasibility {
    Feasible,
    Infeasible(Condition),
}

/// Result of [`validate_params`].
///
/// `Feasible` means every necessary condition checked here holds. It does
/// not mean a graph with these parameters exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub params: SrgParams,
    pub status: Feasibility,
    pub is_conference: bool,
    pub integer_eigenvalues: bool,
}

impl FeasibilityReport {
    pub fn is_feasible(&self) -> bool {
        self.status == Feasibility::Feasible
    }
}

/// `2k + (n-1)(λ-μ)`; zero exactly for conference parameters.
pub fn conference_indicator(p: &SrgParams) -> i128 {
    2 * p.k as i128 + (p.n as i128 - 1) * (p.lambda as i128 - p.mu as i128)
}

/// `(λ-μ)² + 4(k-μ)`.
pub fn discriminant(p: &SrgParams) -> i128 {
    let d = p.lambda as i128 - p.mu as i128;
    d * d + 4 * (p.k as i128 - p.mu as i128)
}

/// `Some(√x)` when `x` is a perfect square.
fn exact_sqrt(x: i128) -> Option<i128> {
    if x < 0 {
        return None;
    }
    let r = x.isqrt();
    (r * r == x).then_some(r)
}

/// Integral `(s, r)` when the discriminant is a square of matching parity.
fn integral_eigenvalues(p: &SrgParams) -> Option<(i128, i128)> {
    let root = exact_sqrt(discriminant(p))?;
    let d = p.lambda as i128 - p.mu as i128;
    ((d - root) % 2 == 0).then(|| ((d - root) / 2, (d + root) / 2))
}

fn check_bounds(p: &SrgParams) -> Option<Condition> {
    let SrgParams { n, k, lambda, mu } = *p;
    if n < 4 {
        Some(Condition::VertexCount)
    } else if k < 2 || k > n - 2 {
        Some(Condition::DegreeRange)
    } else if mu < 1 || mu > k {
        Some(Condition::MuRange)
    } else if lambda < 0 || lambda > k - 2 {
        Some(Condition::LambdaRange)
    } else {
        None
    }
}

/// Checks the necessary conditions on an SRG parameter tuple: the
/// parameter bounds, the counting relation, integrality of eigenvalues and
/// multiplicities, and the conference shape.
pub fn validate_params(p: SrgParams) -> FeasibilityReport {
    let mut report = FeasibilityReport {
        params: p,
        status: Feasibility::Feasible,
        is_conference: false,
        integer_eigenvalues: false,
    };
    if let Some(c) = check_bounds(&p) {
        report.status = Feasibility::Infeasible(c);
        return report;
    }
    let (n, k, lambda, mu) = (p.n as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    report.integer_eigenvalues = integral_eigenvalues(&p).is_some();

    if (n - k - 1) * mu != (k - lambda - 1) * k {
        report.status = Feasibility::Infeasible(Condition::ParameterRelation);
        return report;
    }

    if conference_indicator(&p) == 0 {
        report.is_conference = true;
        let shape_ok = n % 4 == 1 && 2 * k == n - 1 && 4 * lambda == n - 5 && 4 * mu == n - 1;
        if !shape_ok {
            report.status = Feasibility::Infeasible(Condition::ConferenceShape);
        }
        return report;
    }

    let Some((s, r)) = integral_eigenvalues(&p) else {
        report.status = Feasibility::Infeasible(Condition::NonIntegralEigenvalues);
        return report;
    };
    let f_num = -s * (n - 1) - k;
    let g_num = r * (n - 1) + k;
    let gap = r - s;
    if f_num % gap != 0 || g_num % gap != 0 || f_num < 0 || g_num < 0 {
        report.status = Feasibility::Infeasible(Condition::NonIntegralMultiplicity);
    }
    report
}

/// Adjacency spectrum `{k (×1), r (×f), s (×g)}` of an SRG with μ ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SrgSpectrum {
    /// Least eigenvalue.
    pub s: f64,
    pub r: f64,
    pub k: i64,
    /// Multiplicity of `r`.
    pub f: i64,
    /// Multiplicity of `s`.
    pub g: i64,
    /// `(λ-μ)² + 4(k-μ)`, equal to `(r-s)²`.
    pub disc: i64,
    /// `s` and `r` are integers (always the case off the conference family).
    pub integral: bool,
}

fn require_feasible(p: SrgParams) -> Result<FeasibilityReport> {
    if p.mu < 1 {
        return Err(Error::input(format!(
            "{p}: mu = {} describes a disconnected graph; closed forms need mu >= 1",
            p.mu
        )));
    }
    let report = validate_params(p);
    match report.status {
        Feasibility::Feasible => Ok(report),
        Feasibility::Infeasible(c) => Err(Error::input(format!("{p} is infeasible: {c}"))),
    }
}

/// Eigenvalues `s < r < k` of the adjacency matrix with multiplicities.
pub fn adjacency_eigenvalues(p: SrgParams) -> Result<SrgSpectrum> {
    let report = require_feasible(p)?;
    let n = p.n;
    let disc = discriminant(&p);
    let spectrum = match integral_eigenvalues(&p) {
        Some((s, r)) if !report.is_conference => {
            let gap = r - s;
            SrgSpectrum {
                s: s as f64,
                r: r as f64,
                k: p.k,
                f: ((-s * (n as i128 - 1) - p.k as i128) / gap) as i64,
                g: ((r * (n as i128 - 1) + p.k as i128) / gap) as i64,
                disc: disc as i64,
                integral: true,
            }
        }
        _ => {
            // conference: the two multiplicities coincide
            let root = (disc as f64).sqrt();
            let d = (p.lambda - p.mu) as f64;
            SrgSpectrum {
                s: (d - root) / 2.0,
                r: (d + root) / 2.0,
                k: p.k,
                f: (n - 1) / 2,
                g: (n - 1) / 2,
                disc: disc as i64,
                integral: integral_eigenvalues(&p).is_some(),
            }
        }
    };
    Ok(spectrum)
}

/// Distance eigenvalues `(-r-2, -s-2, 2(n-1)-k)`, strictly increasing.
///
/// On `1⊥` the distance matrix is `-2I - A`, so `-r-2` has multiplicity
/// `f`, `-s-2` has multiplicity `g` and the Perron value `2(n-1)-k` is
/// simple.
pub fn distance_eigenvalues(p: SrgParams) -> Result<[f64; 3]> {
    let sp = adjacency_eigenvalues(p)?;
    Ok([-sp.r - 2.0, -sp.s - 2.0, (2 * (p.n - 1) - p.k) as f64])
}

/// Distance spectrum as `(value, multiplicity)` pairs in increasing order.
pub fn distance_spectrum(p: SrgParams) -> Result<[(f64, i64); 3]> {
    let sp = adjacency_eigenvalues(p)?;
    let [a, b, c] = distance_eigenvalues(p)?;
    Ok([(a, sp.f), (b, sp.g), (c, 1)])
}

/// `k - 2λ + μ - 4`; its sign is the sign of the QEC.
pub fn qe_margin(p: &SrgParams) -> i128 {
    p.k as i128 - 2 * p.lambda as i128 + p.mu as i128 - 4
}

/// QE class from the parameters: boundary iff `k-2λ+μ = 4`, in class iff
/// `k-2λ+μ < 4`.
pub fn classify_qe(p: SrgParams) -> Result<QeClass> {
    require_feasible(p)?;
    Ok(match qe_margin(&p).signum() {
        -1 => QeClass::Yes,
        0 => QeClass::Boundary,
        _ => QeClass::No,
    })
}

/// `QEC = -s - 2`, which equals the second largest distance eigenvalue.
pub fn qec_closed_form(p: SrgParams) -> Result<QecReport> {
    let sp = adjacency_eigenvalues(p)?;
    let qec = -sp.s - 2.0;
    Ok(QecReport {
        qec,
        delta1: (2 * (p.n - 1) - p.k) as f64,
        delta2: qec,
        qe_class: classify_qe(p)?,
        method: QecMethod::ClosedForm,
    })
}

/// The integer QEC when `2k + (n-1)(λ-μ) != 0`.
pub fn integer_qec(p: SrgParams) -> Result<Option<i64>> {
    let report = require_feasible(p)?;
    if report.is_conference {
        return Ok(None);
    }
    Ok(integral_eigenvalues(&p).map(|(s, _)| (-s - 2) as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixIdentity {
    /// `A² = μJ - (μ-λ)A - (μ-k)I`
    SquareOfAdjacency,
    /// `(A-kI)(A² + (μ-λ)A + (μ-k)I) = 0`
    MinimalPolynomial,
    /// `μD = 2A² - (2λ-μ)A - 2kI`
    DistanceFromAdjacency,
    /// `D = 2J - 2I - A`
    DiameterTwoDistance,
}

impl fmt::Display for MatrixIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatrixIdentity::SquareOfAdjacency => "A^2 = mu J - (mu-lambda) A - (mu-k) I",
            MatrixIdentity::MinimalPolynomial => "(A-k)(A^2 + (mu-lambda) A + (mu-k) I) = 0",
            MatrixIdentity::DistanceFromAdjacency => "mu D = 2A^2 - (2 lambda - mu) A - 2k I",
            MatrixIdentity::DiameterTwoDistance => "D = 2J - 2I - A",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: MatrixIdentity,
    /// First offending entry in row-major order, if any.
    pub mismatch: Option<EntryMismatch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub params: SrgParams,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatch.is_none())
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.mismatch.is_some())
    }
}

/// Square integer matrix, row-major.
struct IntMatrix {
    n: usize,
    a: Vec<i64>,
}

impl IntMatrix {
    fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            a.extend((0..n).map(|j| f(i, j)));
        }
        IntMatrix { n, a }
    }

    fn at(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            for l in 0..n {
                let x = self.at(i, l);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += x * other.at(l, j);
                }
            }
        }
        IntMatrix { n, a }
    }

    fn first_mismatch(&self, other: &IntMatrix) -> Option<EntryMismatch> {
        self.a
            .iter()
            .zip(&other.a)
            .position(|(x, y)| x != y)
            .map(|idx| EntryMismatch {
                row: idx / self.n,
                col: idx % self.n,
                lhs: self.a[idx],
                rhs: other.a[idx],
            })
    }
}

/// Verifies the adjacency and distance matrix identities of an SRG entry by
/// entry in integer arithmetic. `p` must be the detected parameter tuple of
/// `g`, with μ ≥ 1.
pub fn matrix_identity_check(g: &Graph, p: SrgParams) -> Result<IdentityReport> {
    match g.detect_srg().params() {
        Some(found) if found == p && p.mu >= 1 => {}
        Some(found) if found != p => {
            return Err(Error::input(format!("graph is {found}, not {p}")));
        }
        Some(_) => return Err(Error::input(format!("{p} needs mu >= 1"))),
        None => return Err(Error::input(format!("graph is not {p}"))),
    }
    let d = g.distance_matrix()?;
    let n = g.n();
    let (k, lambda, mu) = (p.k, p.lambda, p.mu);
    let delta = |i: usize, j: usize| i64::from(i == j);
    let adj = IntMatrix::from_fn(n, |i, j| i64::from(g.adjacent(i, j)));
    let dist = IntMatrix::from_fn(n, |i, j| i64::from(d.get(i, j)));
    let a2 = adj.mul(&adj);

    let rhs_square =
        IntMatrix::from_fn(n, |i, j| mu - (mu - lambda) * adj.at(i, j) - (mu - k) * delta(i, j));
    let quadratic = IntMatrix::from_fn(n, |i, j| {
        a2.at(i, j) + (mu - lambda) * adj.at(i, j) + (mu - k) * delta(i, j)
    });
    let shifted = IntMatrix::from_fn(n, |i, j| adj.at(i, j) - k * delta(i, j));
    let zero = IntMatrix::from_fn(n, |_, _| 0);
    let mu_d = IntMatrix::from_fn(n, |i, j| mu * dist.at(i, j));
    let rhs_distance = IntMatrix::from_fn(n, |i, j| {
        2 * a2.at(i, j) - (2 * lambda - mu) * adj.at(i, j) - 2 * k * delta(i, j)
    });
    let diameter_two = IntMatrix::from_fn(n, |i, j| 2 - 2 * delta(i, j) - adj.at(i, j));

    let checks = vec![
        IdentityCheck {
            identity: MatrixIdentity::SquareOfAdjacency,
            mismatch: a2.first_mismatch(&rhs_square),
        },
        IdentityCheck {
            identity: MatrixIdentity::MinimalPolynomial,
            mismatch: shifted.mul(&quadratic).first_mismatch(&zero),
        },
        IdentityCheck {
            identity: MatrixIdentity::DistanceFromAdjacency,
            mismatch: mu_d.first_mismatch(&rhs_distance),
        },
        IdentityCheck {
            identity: MatrixIdentity::DiameterTwoDistance,
            mismatch: dist.first_mismatch(&diameter_two),
        },
    ];
    Ok(IdentityReport { params: p, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    const PETERSEN: SrgParams = SrgParams::new(10, 3, 0, 1);
    const C5: SrgParams = SrgParams::new(5, 2, 0, 1);
    const CLEBSCH: SrgParams = SrgParams::new(16, 5, 0, 2);

    fn infeasible(p: SrgParams) -> Condition {
        match validate_params(p).status {
            Feasibility::Infeasible(c) => c,
            Feasibility::Feasible => panic!("{p} accepted"),
        }
    }

    #[test]
    fn petersen_feasible() {
        let r = validate_params(PETERSEN);
        assert!(r.is_feasible());
        assert!(!r.is_conference);
        assert!(r.integer_eigenvalues);
    }

    #[test]
    fn c5_is_conference() {
        let r = validate_params(C5);
        assert!(r.is_feasible() && r.is_conference);
        assert!(!r.integer_eigenvalues);
    }

    #[test]
    fn twenty_one_passes_necessary_conditions() {
        let r = validate_params(SrgParams::new(21, 10, 4, 5));
        assert!(r.is_feasible() && r.is_conference);
    }

    #[test]
    fn violated_conditions() {
        assert_eq!(infeasible(SrgParams::new(10, 3, 1, 1)), Condition::ParameterRelation);
        assert_eq!(infeasible(SrgParams::new(3, 2, 0, 1)), Condition::VertexCount);
        assert_eq!(infeasible(SrgParams::new(10, 9, 8, 1)), Condition::DegreeRange);
        assert_eq!(infeasible(SrgParams::new(10, 3, 0, 0)), Condition::MuRange);
        assert_eq!(infeasible(SrgParams::new(10, 3, 0, 4)), Condition::MuRange);
        assert_eq!(infeasible(SrgParams::new(10, 3, 2, 1)), Condition::LambdaRange);
        assert_eq!(infeasible(SrgParams::new(10, 3, -1, 1)), Condition::LambdaRange);
        // relation 1*3 = 1*3 holds, s = -2, r = 0, f = 5/2
        assert_eq!(infeasible(SrgParams::new(5, 3, 1, 3)), Condition::NonIntegralMultiplicity);
    }

    #[test]
    fn irrational_non_conference_rejected() {
        // brute-force a tuple that passes bounds and relation but has a
        // non-square discriminant and is not conference
        let mut found = None;
        'outer: for n in 4..60i64 {
            for k in 2..=n - 2 {
                for lambda in 0..=k - 2 {
                    let num = (k - lambda - 1) * k;
                    if num % (n - k - 1) != 0 {
                        continue;
                    }
                    let p = SrgParams::new(n, k, lambda, num / (n - k - 1));
                    if check_bounds(&p).is_none()
                        && conference_indicator(&p) != 0
                        && exact_sqrt(discriminant(&p)).is_none()
                    {
                        found = Some(p);
                        break 'outer;
                    }
                }
            }
        }
        let p = found.expect("some tuple has an irrational discriminant");
        assert_eq!(infeasible(p), Condition::NonIntegralEigenvalues);
    }

    #[test]
    fn conference_shape_violations() {
        // n = 3 mod 4 with k = (n-1)/2, mu = lambda + 1 never passes
        for n in [7i64, 11, 15] {
            let k = (n - 1) / 2;
            for lambda in 0..=k - 2 {
                let p = SrgParams::new(n, k, lambda, lambda + 1);
                assert!(!validate_params(p).is_feasible());
            }
        }
    }

    #[test]
    fn petersen_spectrum() {
        let sp = adjacency_eigenvalues(PETERSEN).unwrap();
        assert_eq!((sp.s, sp.r, sp.f, sp.g, sp.disc), (-2.0, 1.0, 5, 4, 9));
        assert!(sp.integral);
    }

    #[test]
    fn clebsch_spectrum() {
        let sp = adjacency_eigenvalues(CLEBSCH).unwrap();
        assert_eq!((sp.s, sp.r, sp.disc), (-3.0, 1.0, 16));
        assert_eq!((sp.f, sp.g), (10, 5));
    }

    #[test]
    fn c5_spectrum() {
        let sp = adjacency_eigenvalues(C5).unwrap();
        let r5 = 5f64.sqrt();
        assert!((sp.s - (-1.0 - r5) / 2.0).abs() < 1e-15);
        assert!((sp.r - (-1.0 + r5) / 2.0).abs() < 1e-15);
        assert_eq!((sp.f, sp.g), (2, 2));
    }

    #[test]
    fn spectrum_rejects_infeasible() {
        assert!(adjacency_eigenvalues(SrgParams::new(10, 3, 1, 1)).is_err());
        assert!(adjacency_eigenvalues(SrgParams::new(6, 2, 1, 0)).is_err());
    }

    #[test]
    fn distance_eigenvalue_examples() {
        assert_eq!(distance_eigenvalues(PETERSEN).unwrap(), [-3.0, 0.0, 15.0]);
        assert_eq!(distance_eigenvalues(SrgParams::new(4, 2, 0, 2)).unwrap(), [-2.0, 0.0, 4.0]);
        assert_eq!(
            distance_spectrum(PETERSEN).unwrap(),
            [(-3.0, 5), (0.0, 4), (15.0, 1)]
        );
    }

    #[test]
    fn closed_form_values() {
        let c5 = qec_closed_form(C5).unwrap();
        assert!((c5.qec - (5f64.sqrt() - 3.0) / 2.0).abs() < 1e-15);
        assert_eq!(c5.qe_class, QeClass::Yes);
        assert_eq!(c5.method, QecMethod::ClosedForm);
        assert_eq!(c5.delta2, c5.qec);
        assert_eq!(c5.delta1, 6.0);

        let hs = qec_closed_form(SrgParams::new(100, 22, 0, 6)).unwrap();
        assert_eq!(hs.qec, 6.0);
        assert_eq!(integer_qec(SrgParams::new(100, 22, 0, 6)).unwrap(), Some(6));
        assert_eq!(integer_qec(C5).unwrap(), None);
    }

    #[test]
    fn multipartite_closed_form() {
        for p in 2..=6i64 {
            for q in 2..=6i64 {
                let params = SrgParams::new(p * q, (p - 1) * q, (p - 2) * q, (p - 1) * q);
                assert_eq!(qec_closed_form(params).unwrap().qec, (q - 2) as f64);
            }
        }
    }

    #[test]
    fn conference_closed_form() {
        for n in [5i64, 9, 13, 17, 21, 25, 29, 101] {
            let p = SrgParams::new(n, (n - 1) / 2, (n - 5) / 4, (n - 1) / 4);
            let qec = qec_closed_form(p).unwrap().qec;
            assert!((qec - ((n as f64).sqrt() - 3.0) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_refuses_disconnected() {
        assert!(matches!(
            qec_closed_form(SrgParams::new(6, 2, 1, 0)),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_qe(PETERSEN).unwrap(), QeClass::Boundary);
        assert_eq!(classify_qe(C5).unwrap(), QeClass::Yes);
        assert_eq!(classify_qe(CLEBSCH).unwrap(), QeClass::No);
        assert_eq!(qec_closed_form(CLEBSCH).unwrap().qec, 1.0);
    }

    #[test]
    fn identities_hold_on_generated_srgs() {
        for g in [generators::petersen(), generators::shrikhande(), generators::cycle(4).unwrap()] {
            let p = g.detect_srg().params().unwrap();
            let report = matrix_identity_check(&g, p).unwrap();
            assert!(report.all_passed(), "{p}: {report:?}");
            assert_eq!(report.checks.len(), 4);
        }
    }

    #[test]
    fn identity_check_preconditions() {
        let g = generators::petersen();
        assert!(matrix_identity_check(&g, CLEBSCH).is_err());
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matrix_identity_check(&path, SrgParams::new(4, 2, 0, 2)).is_err());
    }
}
