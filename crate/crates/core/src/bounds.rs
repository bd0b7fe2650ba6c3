//! Machine-checked registry of BSO inequalities.
//!
//! Every registered bound is normalized to the form `lhs <= rhs`, so one
//! report shape covers lower bounds, upper bounds, and absolute-difference
//! bounds alike:
//!
//! * `slack = rhs - lhs` (signed),
//! * `holds` iff `slack >= -tol * max(1, |rhs|)`,
//! * `equality_detected` iff `|slack| <= tol * max(1, |rhs|)`.
//!
//! Equality detection is numeric; `equality_predicted` evaluates the
//! bound's structural equality condition (regularity, or regularity-or-
//! semiregular-bipartiteness) on the graph. `consistent` records whether
//! the two agree; bounds without a stated condition are vacuously
//! consistent. This split is deliberate: the interesting failures are
//! precisely disagreements between the numeric and structural answers.

use std::fmt;
use std::str::FromStr;

use serde::ser::Serializer;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{complement, degree_summary, Graph};
use crate::indices::{edge_sum_unchecked, IndexKind};

/// Default relative tolerance for bound checks.
pub const DEFAULT_TOL: f64 = 1e-9;

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Identifiers for the twenty-seven registered inequalities, in registry
/// order. Two-sided statements contribute a `-lower` and an `-upper` entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundId {
    T3_1Lower,
    T3_1Upper,
    T3_2,
    T3_3Lower,
    T3_3Upper,
    T3_4,
    T3_5Lower,
    T3_5Upper,
    T3_6Lower,
    T3_6Upper,
    T3_7,
    C3_5,
    T3_8,
    T3_9,
    C3_6,
    C3_7,
    T3_10,
    C3_8,
    T3_11Lower,
    T3_11Upper,
    T3_12,
    C3_1,
    C3_2,
    C3_3Lower,
    C3_3Upper,
    C3_4Lower,
    C3_4Upper,
}

/// Structural equality condition attached to a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EqualityCondition {
    /// Equality iff the graph is regular.
    Regular,
    /// Equality iff the graph is regular or semiregular bipartite.
    RegularOrSemiregularBipartite,
    /// No equality characterization is part of the statement.
    NotApplicable,
}

/// Why a bound was not evaluated on a given graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SkipReason {
    #[error("disconnected")]
    Disconnected,
    #[error("zero-degree")]
    ZeroDegree,
    #[error("complement-zero-degree")]
    ComplementZeroDegree,
    #[error("not-unicyclic")]
    NotUnicyclic,
    #[error("not-regular")]
    NotRegular,
}

impl BoundId {
    pub const ALL: [BoundId; 27] = [
        BoundId::T3_1Lower,
        BoundId::T3_1Upper,
        BoundId::T3_2,
        BoundId::T3_3Lower,
        BoundId::T3_3Upper,
        BoundId::T3_4,
        BoundId::T3_5Lower,
        BoundId::T3_5Upper,
        BoundId::T3_6Lower,
        BoundId::T3_6Upper,
        BoundId::T3_7,
        BoundId::C3_5,
        BoundId::T3_8,
        BoundId::T3_9,
        BoundId::C3_6,
        BoundId::C3_7,
        BoundId::T3_10,
        BoundId::C3_8,
        BoundId::T3_11Lower,
        BoundId::T3_11Upper,
        BoundId::T3_12,
        BoundId::C3_1,
        BoundId::C3_2,
        BoundId::C3_3Lower,
        BoundId::C3_3Upper,
        BoundId::C3_4Lower,
        BoundId::C3_4Upper,
    ];

    /// Stable identifier used in all reports and on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::T3_1Lower => "T3.1-lower",
            BoundId::T3_1Upper => "T3.1-upper",
            BoundId::T3_2 => "T3.2",
            BoundId::T3_3Lower => "T3.3-lower",
            BoundId::T3_3Upper => "T3.3-upper",
            BoundId::T3_4 => "T3.4",
            BoundId::T3_5Lower => "T3.5-lower",
            BoundId::T3_5Upper => "T3.5-upper",
            BoundId::T3_6Lower => "T3.6-lower",
            BoundId::T3_6Upper => "T3.6-upper",
            BoundId::T3_7 => "T3.7",
            BoundId::C3_5 => "C3.5",
            BoundId::T3_8 => "T3.8",
            BoundId::T3_9 => "T3.9",
            BoundId::C3_6 => "C3.6",
            BoundId::C3_7 => "C3.7",
            BoundId::T3_10 => "T3.10",
            BoundId::C3_8 => "C3.8",
            BoundId::T3_11Lower => "T3.11-lower",
            BoundId::T3_11Upper => "T3.11-upper",
            BoundId::T3_12 => "T3.12",
            BoundId::C3_1 => "C3.1",
            BoundId::C3_2 => "C3.2",
            BoundId::C3_3Lower => "C3.3-lower",
            BoundId::C3_3Upper => "C3.3-upper",
            BoundId::C3_4Lower => "C3.4-lower",
            BoundId::C3_4Upper => "C3.4-upper",
        }
    }

    /// The structural condition under which equality is asserted to hold.
    pub fn equality_condition(self) -> EqualityCondition {
        match self {
            BoundId::T3_4 | BoundId::T3_7 | BoundId::T3_9 | BoundId::C3_5 => {
                EqualityCondition::RegularOrSemiregularBipartite
            }
            BoundId::T3_12 | BoundId::C3_1 | BoundId::C3_2 => EqualityCondition::NotApplicable,
            _ => EqualityCondition::Regular,
        }
    }

    /// Both sides of the normalized inequality `lhs <= rhs`.
    fn sides(self, g: &Graph, c: &Ctx) -> (f64, f64) {
        let bso_with_complement = || c.bso + edge_sum_unchecked(&complement(g), IndexKind::Bso);
        match self {
            BoundId::T3_1Lower => (c.n / SQRT_2, c.bso),
            BoundId::T3_1Upper => (c.bso, SQRT_2 * c.m / c.dmin),
            BoundId::T3_2 => (c.bso, c.n - c.m * (2.0 - SQRT_2) / c.dmax),
            BoundId::T3_3Lower => (SQRT_2 * c.randic, c.bso),
            BoundId::T3_3Upper => (c.bso, SQRT_2 * c.dmax * c.m2s),
            BoundId::T3_4 => (c.bso, (c.m * c.id).sqrt()),
            BoundId::T3_5Lower => (SQRT_2 * c.h, c.bso),
            BoundId::T3_5Upper => (c.bso, (c.dmax / c.dmin + c.dmin / c.dmax) * c.h / SQRT_2),
            BoundId::T3_6Lower => (
                2.0 * SQRT_2 / (3.0 * c.dmax) * c.sdd + SQRT_2 / 3.0 * c.h,
                c.bso,
            ),
            BoundId::T3_6Upper => (c.bso, SQRT_2 / c.dmin * c.sdd),
            BoundId::T3_7 => (c.bso, (2.0 * c.m2s * c.sdd).sqrt()),
            BoundId::C3_5 => (
                c.bso,
                (c.m * c.m2s * (c.dmax / c.dmin + c.dmin / c.dmax)).sqrt(),
            ),
            BoundId::T3_8 => {
                let dmax3 = c.dmax.powi(3);
                let dmin3 = c.dmin.powi(3);
                (
                    SQRT_2 / (dmax3 + dmin3) * (c.m * dmin3 / c.dmax + c.f / 2.0),
                    c.bso,
                )
            }
            BoundId::T3_9 => (c.bso, (2.0 * c.m * c.sdd + c.m2s * c.f) / (2.0 * c.so)),
            BoundId::C3_6 => {
                let num = c.m * (c.dmax * c.dmax * c.dmin + c.dmin.powi(3)) + c.dmax * c.f;
                (c.bso, num / (2.0 * SQRT_2 * c.dmax * c.dmin.powi(3)))
            }
            BoundId::C3_7 => {
                let num =
                    c.m * c.m * (2.0 * c.dmax.powi(3) + c.dmax * c.dmax * c.dmin + c.dmin.powi(3));
                (c.bso, num / (2.0 * c.dmax * c.dmin * c.dmin * c.so))
            }
            BoundId::T3_10 => (c.bso, (c.h * c.sdd + 2.0 * c.m2s * c.isi) / (SQRT_2 * c.ga)),
            BoundId::C3_8 => {
                let num = c.m * c.m * c.dmax * c.dmax
                    + c.m * c.m * c.dmin * c.dmin
                    + 4.0 * c.m * c.dmax * c.isi;
                (
                    c.bso,
                    num / (2.0 * SQRT_2 * c.dmax * c.dmin * c.dmin * c.ga),
                )
            }
            BoundId::T3_11Lower => (2.0 * c.m * c.m / c.so, c.bso),
            BoundId::T3_11Upper => (c.bso, c.so / (c.dmin * c.dmin)),
            BoundId::T3_12 => {
                let lhs = (c.bso / c.m - c.so * c.m2s / (c.m * c.m)).abs();
                let spread = (c.dmax + c.dmin) * (c.dmax - c.dmin) * (c.dmax - c.dmin);
                let rhs = xi(c.m_int) * SQRT_2 * spread / (c.dmax * c.dmax * c.dmin * c.dmin);
                (lhs, rhs)
            }
            BoundId::C3_1 => ((c.bso - c.n / SQRT_2).abs(), 0.0),
            BoundId::C3_2 => (c.n / SQRT_2, c.bso),
            BoundId::C3_3Lower | BoundId::C3_4Lower => (SQRT_2 * c.n, bso_with_complement()),
            BoundId::C3_3Upper => {
                let mbar2 = c.n * (c.n - 1.0) - 2.0 * c.m;
                let rhs = SQRT_2 * (c.m / c.dmin + mbar2 / (2.0 * (c.n - 1.0 - c.dmax)));
                (bso_with_complement(), rhs)
            }
            BoundId::C3_4Upper => {
                let mbar2 = c.n * (c.n - 1.0) - 2.0 * c.m;
                let rhs = 2.0 * c.n
                    - (2.0 - SQRT_2) * (c.m / c.dmax + mbar2 / (2.0 * (c.n - 1.0 - c.dmin)));
                (bso_with_complement(), rhs)
            }
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BoundId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown bound id {s:?} (expected T3.1-lower .. C3.4-upper)"))
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Result of evaluating one bound on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub id: BoundId,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`; nonnegative (up to tolerance) iff the bound holds.
    pub slack: f64,
    pub holds: bool,
    pub equality_detected: bool,
    pub equality_predicted: bool,
    /// Whether detection and prediction agree; vacuously true when the
    /// bound has no stated equality condition.
    pub consistent: bool,
}

/// Evaluation outcome for one bound: a report, or a skip with its reason.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundOutcome {
    Evaluated(BoundReport),
    Skipped { id: BoundId, reason: SkipReason },
}

impl BoundOutcome {
    pub fn id(&self) -> BoundId {
        match self {
            BoundOutcome::Evaluated(r) => r.id,
            BoundOutcome::Skipped { id, .. } => *id,
        }
    }

    pub fn report(&self) -> Option<&BoundReport> {
        match self {
            BoundOutcome::Evaluated(r) => Some(r),
            BoundOutcome::Skipped { .. } => None,
        }
    }

    /// Flat record with one column set for every outcome kind.
    pub fn record(&self) -> BoundRecord {
        match *self {
            BoundOutcome::Evaluated(r) => BoundRecord {
                id: r.id.as_str().to_owned(),
                lhs: Some(r.lhs),
                rhs: Some(r.rhs),
                slack: Some(r.slack),
                holds: Some(r.holds),
                equality_detected: Some(r.equality_detected),
                equality_predicted: Some(r.equality_predicted),
                consistent: Some(r.consistent),
                skipped: false,
                skip_reason: None,
            },
            BoundOutcome::Skipped { id, reason } => BoundRecord {
                id: id.as_str().to_owned(),
                lhs: None,
                rhs: None,
                slack: None,
                holds: None,
                equality_detected: None,
                equality_predicted: None,
                consistent: None,
                skipped: true,
                skip_reason: Some(reason.to_string()),
            },
        }
    }
}

/// Serializable row: identical columns for evaluated and skipped bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundRecord {
    pub id: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: Option<bool>,
    pub equality_detected: Option<bool>,
    pub equality_predicted: Option<bool>,
    pub consistent: Option<bool>,
    pub skipped: bool,
    pub skip_reason: Option<String>,
}

/// All graph quantities a bound's sides may reference, computed once.
struct Ctx {
    n: f64,
    m: f64,
    m_int: u64,
    dmax: f64,
    dmin: f64,
    bso: f64,
    so: f64,
    randic: f64,
    m2s: f64,
    h: f64,
    id: f64,
    sdd: f64,
    isi: f64,
    ga: f64,
    f: f64,
}

impl Ctx {
    fn new(g: &Graph) -> Ctx {
        let sum = |k: IndexKind| edge_sum_unchecked(g, k);
        Ctx {
            n: g.n() as f64,
            m: g.m() as f64,
            m_int: g.m() as u64,
            dmax: f64::from(g.max_degree()),
            dmin: f64::from(g.min_degree()),
            bso: sum(IndexKind::Bso),
            so: sum(IndexKind::Sombor),
            randic: sum(IndexKind::Randic),
            m2s: sum(IndexKind::ModifiedSecondZagreb),
            h: sum(IndexKind::Harmonic),
            id: sum(IndexKind::InverseDegree),
            sdd: sum(IndexKind::SymmetricDivisionDeg),
            isi: sum(IndexKind::InverseSumIndeg),
            ga: sum(IndexKind::GeometricArithmetic),
            f: sum(IndexKind::Forgotten),
        }
    }
}

/// The weight `xi(m)` from the registry's difference bound, as an exact
/// rational evaluated with a single rounding: `1/4` for even `m`,
/// `(m^2-1)/(4m^2)` for odd `m`. Agreement with the equivalent floor form
/// `floor(m/2) * (m - floor(m/2)) / m^2` is asserted in integer
/// arithmetic on every call.
pub fn xi(m: u64) -> f64 {
    assert!(m >= 1, "xi requires m >= 1");
    let (num, den) = if m % 2 == 0 {
        (1, 4)
    } else {
        (m * m - 1, 4 * m * m)
    };
    let half = m / 2;
    assert_eq!(
        num as u128 * (m as u128 * m as u128),
        half as u128 * (m - half) as u128 * den as u128,
        "closed-form and floor-form xi({m}) disagree"
    );
    num as f64 / den as f64
}

/// Scalar envelope around `sqrt(a^2 + b^2)` for positive `a`, `b`:
/// returns `(lower, upper)` with
/// `lower = 2*sqrt(2)*(a^2 + b^2 + ab) / (3(a+b))` and
/// `upper = sqrt(2)*(a^2 + b^2) / (a+b)`; both collapse to
/// `sqrt(2)*a` at `a = b`.
pub fn hypot_envelope(a: f64, b: f64) -> (f64, f64) {
    assert!(
        a > 0.0 && b > 0.0,
        "hypot_envelope requires positive inputs"
    );
    let s = a + b;
    let q = a * a + b * b;
    (2.0 * SQRT_2 * (q + a * b) / (3.0 * s), SQRT_2 * q / s)
}

/// Evaluates one bound on one graph at relative tolerance `tol`.
///
/// Preconditions: the graph must be connected with minimum degree at
/// least 1; the difference bounds over the complement additionally need
/// the complement to have minimum degree at least 1, `C3.1` needs a
/// regular graph, and `C3.2` a unicyclic one. Violations return the
/// corresponding [`SkipReason`].
pub fn evaluate_bound(g: &Graph, id: BoundId, tol: f64) -> Result<BoundReport, SkipReason> {
    assert!(tol > 0.0, "tolerance must be positive");
    let summary = degree_summary(g);
    if !summary.is_connected {
        return Err(SkipReason::Disconnected);
    }
    if summary.min_degree == 0 {
        return Err(SkipReason::ZeroDegree);
    }
    match id {
        BoundId::C3_1 if !summary.is_regular => return Err(SkipReason::NotRegular),
        BoundId::C3_2 if summary.m != summary.n => return Err(SkipReason::NotUnicyclic),
        BoundId::C3_3Lower | BoundId::C3_3Upper | BoundId::C3_4Lower | BoundId::C3_4Upper
            if summary.max_degree as usize + 1 >= summary.n =>
        {
            return Err(SkipReason::ComplementZeroDegree)
        }
        _ => {}
    }

    let ctx = Ctx::new(g);
    let (lhs, rhs) = id.sides(g, &ctx);
    let slack = rhs - lhs;
    let scale = rhs.abs().max(1.0);
    let holds = slack >= -tol * scale;
    let equality_detected = slack.abs() <= tol * scale;
    let condition = id.equality_condition();
    let equality_predicted = match condition {
        EqualityCondition::Regular => summary.is_regular,
        EqualityCondition::RegularOrSemiregularBipartite => {
            summary.is_regular || summary.is_semiregular_bipartite
        }
        EqualityCondition::NotApplicable => false,
    };
    let consistent = match condition {
        EqualityCondition::NotApplicable => true,
        _ => equality_detected == equality_predicted,
    };
    Ok(BoundReport {
        id,
        lhs,
        rhs,
        slack,
        holds,
        equality_detected,
        equality_predicted,
        consistent,
    })
}

/// Evaluates every registered bound, mapping precondition failures to
/// skipped outcomes. On a disconnected or zero-degree graph every row is
/// skipped.
pub fn check_all_bounds(g: &Graph, tol: f64) -> Vec<BoundOutcome> {
    BoundId::ALL
        .iter()
        .map(|&id| match evaluate_bound(g, id, tol) {
            Ok(report) => BoundOutcome::Evaluated(report),
            Err(reason) => BoundOutcome::Skipped { id, reason },
        })
        .collect()
}
