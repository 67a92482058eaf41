//! The JSON report. Every field except `schema` and `command` is optional and
//! omitted when the command does not produce it.

use apolar_core::poincare::{DecompositionTable, RationalFunction, TheoremVerdict, TruncatedSeries};
use apolar_core::suites::SuiteReport;
use apolar_core::Rational;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "apolar-lab/1";

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nvars: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub capital_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub annihilator: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub betti: Option<Betti>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poincare: Option<Poincare>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split: Option<Split>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<Enumeration>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Suite>,
    /// Wall-clock milliseconds; only filled with `--timing`, so default output stays reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report { schema: SCHEMA.to_string(), command, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Betti {
    pub pmax: usize,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Poincare {
    pub pmax: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<Series>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub split_quadrics: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert_drop: Option<i64>,
    pub oracle: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_b: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted: Option<Vec<String>>,
    pub consistent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdicts {
    pub stretched: bool,
    pub column_shape: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column_height: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column_end: Option<usize>,
    pub small_length: bool,
    pub low_capital_degree: bool,
    pub constant_column: bool,
    pub f3: Option<usize>,
    pub f3_at_most_4: Option<bool>,
    pub any: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub assembled_dim: usize,
    pub annihilator_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Split {
    pub f: String,
    pub generators: Vec<String>,
    pub sigmas: Vec<String>,
    pub checks: Vec<DegreeCheck>,
    pub generators_annihilate: bool,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table {
    pub rows: Vec<Vec<usize>>,
    pub hilbert: Vec<usize>,
    pub dim: usize,
    pub f3: usize,
    pub capital_degree: usize,
    pub f3_at_most_4: bool,
    pub low_capital_degree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Enumeration {
    pub socle_degree: usize,
    pub max_dim: usize,
    pub max_h2: usize,
    pub tables: Vec<Table>,
    pub uncovered: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialResult {
    pub index: usize,
    pub input: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Suite {
    pub name: String,
    pub seed: u64,
    pub trials: usize,
    pub passed: usize,
    pub summary: String,
    pub results: Vec<TrialResult>,
}

/// `p/q` even for integers.
pub fn rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn series_values(s: &TruncatedSeries) -> Vec<String> {
    s.coeffs.iter().map(|c| c.to_string()).collect()
}

pub fn series(r: &RationalFunction) -> Series {
    Series {
        numerator: r.numerator().iter().map(rational).collect(),
        denominator: r.denominator().iter().map(rational).collect(),
        text: r.to_string(),
    }
}

pub fn verdicts(v: &TheoremVerdict) -> Verdicts {
    Verdicts {
        stretched: v.stretched,
        column_shape: v.column_shape,
        column_height: v.column.and_then(|(m, _)| m),
        column_end: v.column.map(|(_, c)| c),
        small_length: v.small_length,
        low_capital_degree: v.low_capital_degree,
        constant_column: v.constant_column,
        f3: v.f3,
        f3_at_most_4: v.f3_at_most_4,
        any: v.any(),
    }
}

pub fn table(d: &DecompositionTable) -> Table {
    Table {
        rows: d.rows.clone(),
        hilbert: d.hilbert.clone(),
        dim: d.dim,
        f3: d.f3,
        capital_degree: d.capital_degree,
        f3_at_most_4: d.f3_at_most_4(),
        low_capital_degree: d.low_capital_degree(),
    }
}

pub fn suite(r: &SuiteReport) -> Suite {
    Suite {
        name: r.suite.name().to_string(),
        seed: r.seed,
        trials: r.trials.len(),
        passed: r.passed(),
        summary: r.summary(),
        results: r
            .trials
            .iter()
            .map(|t| TrialResult { index: t.index, input: t.input.clone(), passed: t.passed, detail: t.detail.clone() })
            .collect(),
    }
}
