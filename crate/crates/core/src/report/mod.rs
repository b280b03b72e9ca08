//! Report assembly and rendering for the `hspan` front end.
//!
//! Every report carries `schema_version`. Output depends only on the
//! configuration, so runs are byte-identical.

mod emit;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sln::{commutator_defect, crosscheck_degroupoidification, run_sln_catalog, RelationForm};
use crate::verifier::{run_relation_catalog, CheckStatus, Expectation, RelationCheck};

pub use emit::{
    emit_block, emit_gf, emit_lattice, emit_moments, emit_number_block, emit_sym_block, Emitted, LatticeTable,
    StuffKind, Table,
};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_CARD: usize = 6;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact rationals serialize as `"p/q"` in lowest terms (`"p"` for integers).
pub fn rational_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn ser_rational<S: Serializer>(q: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "dot" => Ok(Format::Dot),
            "text" => Ok(Format::Text),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Dot => "dot",
            Format::Text => "text",
        };
        f.write_str(s)
    }
}

fn unsupported(format: Format, what: &str) -> Error {
    Error::InvalidParameter(format!("{format} output is not available for {what}"))
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub(crate) fn csv_string(rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for r in rows {
        w.write_record(r).map_err(|e| Error::InvalidParameter(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidParameter(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidParameter(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Heisenberg,
    Sln,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Heisenberg => "heisenberg",
            Suite::Sln => "sln",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub max_card: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub suite: Suite,
    pub config: ConfigEcho,
    pub checks: Vec<RelationCheck>,
    /// Reported but not counted towards `status`.
    pub informational: Vec<RelationCheck>,
    pub status: Overall,
}

impl VerifyReport {
    fn new(suite: Suite, config: ConfigEcho, checks: Vec<RelationCheck>, informational: Vec<RelationCheck>) -> Self {
        let status = if checks.iter().all(|c| c.status.passed()) {
            Overall::Pass
        } else {
            Overall::Fail
        };
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            tool_version: TOOL_VERSION,
            suite,
            config,
            checks,
            informational,
            status,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Overall::Pass
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => to_json(self),
            Format::Csv => {
                let mut rows = vec![[
                    "schema_version",
                    "suite",
                    "name",
                    "counted",
                    "status",
                    "expectation",
                    "max_card",
                    "window",
                    "lhs_classes",
                    "rhs_classes",
                    "lhs",
                    "rhs",
                ]
                .map(String::from)
                .to_vec()];
                let tagged = self.checks.iter().map(|c| (true, c)).chain(self.informational.iter().map(|c| (false, c)));
                for (counted, c) in tagged {
                    rows.push(vec![
                        SCHEMA_VERSION.to_string(),
                        self.suite.to_string(),
                        c.name.clone(),
                        counted.to_string(),
                        status_str(c.status).into(),
                        expectation_str(c.expectation).into(),
                        c.max_card.to_string(),
                        c.window.to_string(),
                        c.classes_compared.0.to_string(),
                        c.classes_compared.1.to_string(),
                        c.lhs.clone(),
                        c.rhs.clone(),
                    ]);
                }
                csv_string(&rows)
            }
            Format::Text => {
                let mut s = format!(
                    "hspan {} verify {} (max-card {}{}) schema {}\n",
                    self.tool_version,
                    self.suite,
                    self.config.max_card,
                    self.config.rank.map(|r| format!(", rank {r}")).unwrap_or_default(),
                    SCHEMA_VERSION
                );
                for c in &self.checks {
                    s += &check_line(if c.status.passed() { "PASS" } else { "FAIL" }, c);
                }
                for c in &self.informational {
                    s += &check_line("INFO", c);
                }
                s += &format!("overall: {}\n", if self.passed() { "pass" } else { "fail" });
                Ok(s)
            }
            Format::Dot => Err(unsupported(format, "verification reports")),
        }
    }
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Verified => "verified",
        CheckStatus::Failed => "failed",
        CheckStatus::ExpectedInequalityConfirmed => "expected-inequality-confirmed",
    }
}

fn expectation_str(e: Expectation) -> &'static str {
    match e {
        Expectation::Equal => "equal",
        Expectation::NotEqual => "not-equal",
        Expectation::Zero => "zero",
    }
}

fn check_line(tag: &str, c: &RelationCheck) -> String {
    let rel = match c.expectation {
        Expectation::Zero => format!("{} = 0", c.lhs),
        Expectation::NotEqual => format!("{} ≠ {}", c.lhs, c.rhs),
        Expectation::Equal => format!("{} ≅ {}", c.lhs, c.rhs),
    };
    format!(
        "[{tag}] {:<28} {:<30} window {} classes {}/{}  {rel}\n",
        c.name,
        status_str(c.status),
        c.window,
        c.classes_compared.0,
        c.classes_compared.1
    )
}

fn require_window(max_card: usize, needed: usize) -> Result<()> {
    if max_card < needed {
        return Err(Error::WindowTooSmall {
            required: needed,
            available: max_card,
        });
    }
    Ok(())
}

/// The Heisenberg relation catalog at `max_card`.
pub fn verify_heisenberg(max_card: usize) -> Result<VerifyReport> {
    require_window(max_card, 2)?;
    Ok(VerifyReport::new(
        Suite::Heisenberg,
        ConfigEcho { max_card, rank: None },
        run_relation_catalog(max_card),
        Vec::new(),
    ))
}

/// The EF, EN, FN relations for `U(sl_rank)`, the comparison of linearized
/// generators with differential operators, and the `[E_i, F_j]`
/// commutators. The relations with the printed EN/FN coefficients are
/// reported as informational entries.
pub fn verify_sln(rank: usize, max_card: usize) -> Result<VerifyReport> {
    if rank < 2 {
        return Err(Error::InvalidParameter(format!("rank must be at least 2, got {rank}")));
    }
    require_window(max_card, 4)?;
    let mut checks = run_sln_catalog(rank, max_card, RelationForm::Derived);
    let check = |name: String, lhs: String, rhs: String, window: usize, ok: bool, witness: &str| RelationCheck {
        name,
        description: "degroupoidification".into(),
        lhs,
        rhs,
        expectation: Expectation::Equal,
        max_card,
        window,
        classes_compared: (0, 0),
        status: if ok { CheckStatus::Verified } else { CheckStatus::Failed },
        witness: witness.into(),
    };
    let degree = max_card.min(3);
    for i in 1..=rank {
        let r = crosscheck_degroupoidification(i, rank, degree)?;
        let mut push = |g: char, op: String, ok: bool| {
            checks.push(check(
                format!("D({g}{i})[n={rank}]"),
                format!("D({g}{i})"),
                op,
                degree,
                ok,
                "equal as matrices on monomials of bounded degree",
            ))
        };
        if i < rank {
            push('E', format!("z{}∂{i}", i + 1), r.e_equal);
            push('F', format!("z{i}∂{}", i + 1), r.f_equal);
        }
        push('N', format!("z{i}∂{i}"), r.n_equal);
    }
    for i in 1..rank {
        for j in 1..rank {
            let zero = commutator_defect(i, j, rank, max_card)?.is_zero();
            let rhs = if i == j {
                format!("D(N{}) − D(N{i})", i + 1)
            } else {
                "0".into()
            };
            checks.push(check(
                format!("commutator[i={i},j={j},n={rank}]"),
                format!("[D(E{i}), D(F{j})]"),
                rhs,
                max_card,
                zero,
                "exact matrix equality",
            ));
        }
    }
    let informational = run_sln_catalog(rank, max_card, RelationForm::Literal)
        .into_iter()
        .filter(|c| !c.name.starts_with("EF"))
        .collect();
    Ok(VerifyReport::new(
        Suite::Sln,
        ConfigEcho {
            max_card,
            rank: Some(rank),
        },
        checks,
        informational,
    ))
}
