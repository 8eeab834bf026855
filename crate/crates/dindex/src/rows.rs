//! One output row per input line for each subcommand.
//!
//! Every row knows whether it passed; a subcommand exits 0 only when all of
//! its rows did.

use dindex_core::aut::{automorphism_group_with, Engine};
use dindex_core::construct::{ceil_root, construct_thm23, construct_thm32, paper_bound, ConstructError};
use dindex_core::solver::{exact_distinguishing_index, Clock, SolveOutcome};
use dindex_core::{Certificate, Graph};
use serde::{Deserialize, Serialize};

use crate::config::{Mode, RunConfig};
use crate::graph6::Graph6Line;
use crate::json::{CertificateJson, SolveResultJson, StatsJson};
use crate::StdClock;

/// A line that could not be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub line: usize,
    pub input: String,
    pub message: String,
}

impl ErrorRow {
    fn new(line: &Graph6Line, message: impl ToString) -> Self {
        ErrorRow {
            line: line.line,
            input: line.text.clone(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ExactRow {
    Solved(SolveResultJson),
    /// The budget ran out; every label count below `lower_bound` was ruled out.
    Unknown {
        graph6: String,
        lower_bound: usize,
        stats: StatsJson,
    },
    /// No distinguishing labeling within `d_max` labels.
    ExceedsMax {
        graph6: String,
        lower_bound: usize,
        stats: StatsJson,
    },
    Error(ErrorRow),
}

impl ExactRow {
    pub fn passed(&self) -> bool {
        matches!(self, ExactRow::Solved(_))
    }
}

/// Exact index with at most `d_max` labels, or `m` when `None`.
pub fn exact_row(line: &Graph6Line, cfg: &RunConfig, d_max: Option<usize>) -> ExactRow {
    let g = match &line.graph {
        Ok(g) => g,
        Err(e) => return ExactRow::Error(ErrorRow::new(line, e)),
    };
    let d_max = d_max.unwrap_or(g.m()).max(1);
    let graph6 = line.text.clone();
    match exact_distinguishing_index(g, d_max, &cfg.solver(), &StdClock::start()) {
        Ok(SolveOutcome::Solved(r)) => ExactRow::Solved(SolveResultJson::new(g, &r)),
        Ok(SolveOutcome::Unknown { lower_bound, stats }) => ExactRow::Unknown {
            graph6,
            lower_bound,
            stats: stats.into(),
        },
        Ok(SolveOutcome::ExceedsMax { lower_bound, stats }) => ExactRow::ExceedsMax {
            graph6,
            lower_bound,
            stats: stats.into(),
        },
        Err(e) => ExactRow::Error(ErrorRow::new(line, e)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ConstructRow {
    Certified {
        certificate: CertificateJson,
        /// Label budget of the mode.
        bound: usize,
        /// The certificate re-checked from scratch.
        verified: bool,
        /// Verified, distinguishing and within `bound`.
        pass: bool,
    },
    /// The graph does not meet the constructor's hypotheses.
    Skipped { graph6: String, reason: String },
    Error(ErrorRow),
}

impl ConstructRow {
    pub fn passed(&self) -> bool {
        match self {
            ConstructRow::Certified { pass, .. } => *pass,
            ConstructRow::Skipped { .. } => true,
            ConstructRow::Error(_) => false,
        }
    }
}

/// Runs the constructor of `mode`; conjecture mode uses the degree-bound
/// constructor, whose bound never exceeds `1 + ⌈√Δ⌉` on 2-connected graphs.
pub fn construct(g: &Graph, mode: Mode, cfg: &RunConfig) -> Result<Certificate, ConstructError> {
    let clock = StdClock::start();
    match mode {
        Mode::Thm23 | Mode::Conjecture11 => construct_thm23(g, &cfg.construct(), &clock),
        Mode::Thm32 => construct_thm32(g, &cfg.construct(), &clock),
    }
}

/// Label budget for `g` under `mode`, or why `g` is outside the mode.
pub fn mode_bound(g: &Graph, mode: Mode) -> Result<usize, String> {
    if !g.is_connected() {
        return Err("disconnected".into());
    }
    let stats = g.degree_stats();
    match mode {
        Mode::Thm23 => paper_bound(stats.min, stats.max).map_err(|_| format!("minimum degree {} < 2", stats.min)),
        Mode::Thm32 => match stats.regular {
            Some(k) if k >= 5 => Ok(2),
            Some(k) => Err(format!("{k}-regular, degree below 5")),
            None => Err("not regular".into()),
        },
        Mode::Conjecture11 if g.is_biconnected() => Ok(1 + ceil_root(stats.max, 2)),
        Mode::Conjecture11 => Err("not 2-connected".into()),
    }
}

pub fn construct_row(line: &Graph6Line, mode: Mode, cfg: &RunConfig) -> ConstructRow {
    let g = match &line.graph {
        Ok(g) => g,
        Err(e) => return ConstructRow::Error(ErrorRow::new(line, e)),
    };
    let bound = match mode_bound(g, mode) {
        Ok(b) => b,
        Err(reason) => {
            return ConstructRow::Skipped {
                graph6: line.text.clone(),
                reason,
            }
        }
    };
    match construct(g, mode, cfg) {
        Ok(cert) => {
            let verified = cert.verify(g).is_ok();
            ConstructRow::Certified {
                pass: verified && cert.distinguishing && cert.label_count() <= bound,
                certificate: CertificateJson::new(g, &cert),
                bound,
                verified,
            }
        }
        Err(e) => ConstructRow::Error(ErrorRow::new(line, e)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Unknown,
    Filtered,
    Error,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IndexKind {
    Exact,
    /// From a verified constructed labeling.
    Upper,
    /// The exact search proved the index exceeds the bound.
    Lower,
}

/// One row of a bound sweep. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundRow {
    pub graph6: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub connected: Option<bool>,
    pub method: Option<String>,
    pub index: Option<usize>,
    pub index_kind: Option<IndexKind>,
    /// `⌈Δ^(1/δ)⌉ + 1` when `δ ≥ 2`.
    pub paper_bound: Option<usize>,
    /// 2 for connected `k`-regular graphs with `k ≥ 5`.
    pub regular_bound: Option<usize>,
    /// The bound the mode checks.
    pub bound: Option<usize>,
    pub status: Status,
    pub pass: bool,
    pub elapsed_ms: u64,
    pub note: String,
}

impl BoundRow {
    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Filtered)
    }

    /// `index / bound` when both are known.
    pub fn ratio(&self) -> Option<f64> {
        match (self.index, self.bound, self.index_kind) {
            (Some(i), Some(b), Some(IndexKind::Exact | IndexKind::Upper)) => Some(i as f64 / b as f64),
            _ => None,
        }
    }
}

/// Checks one graph against the bound of `cfg.mode`: the exact index when
/// the budget allows, otherwise a verified constructed labeling.
pub fn bound_row(line: &Graph6Line, cfg: &RunConfig) -> BoundRow {
    let clock = StdClock::start();
    let mut row = BoundRow {
        graph6: line.text.clone(),
        n: None,
        m: None,
        min_degree: None,
        max_degree: None,
        connected: None,
        method: None,
        index: None,
        index_kind: None,
        paper_bound: None,
        regular_bound: None,
        bound: None,
        status: Status::Error,
        pass: false,
        elapsed_ms: 0,
        note: String::new(),
    };
    let g = match &line.graph {
        Ok(g) => g,
        Err(e) => {
            row.note = format!("line {}: {e}", line.line);
            return row;
        }
    };
    let stats = g.degree_stats();
    let connected = g.is_connected();
    row.n = Some(g.n());
    row.m = Some(g.m());
    row.min_degree = Some(stats.min);
    row.max_degree = Some(stats.max);
    row.connected = Some(connected);
    row.paper_bound = paper_bound(stats.min, stats.max).ok();
    row.regular_bound = mode_bound(g, Mode::Thm32).ok();

    let bound = match mode_bound(g, cfg.mode) {
        Ok(b) => b,
        Err(reason) => {
            row.status = Status::Filtered;
            row.note = reason;
            row.elapsed_ms = clock.elapsed_ms();
            return row;
        }
    };
    row.bound = Some(bound);

    match exact_distinguishing_index(g, bound, &cfg.solver(), &clock) {
        Ok(SolveOutcome::Solved(r)) => {
            row.method = Some(r.certificate.method.as_str().into());
            row.index = Some(r.dprime);
            row.index_kind = Some(IndexKind::Exact);
            row.status = Status::Pass;
        }
        Ok(SolveOutcome::ExceedsMax { lower_bound, .. }) => {
            row.method = Some("exact-search".into());
            row.index = Some(lower_bound);
            row.index_kind = Some(IndexKind::Lower);
            row.status = Status::Fail;
            row.note = "no labeling within the bound".into();
        }
        Ok(SolveOutcome::Unknown { lower_bound, .. }) => match construct(g, cfg.mode, cfg) {
            Ok(cert) if cert.verify(g).is_ok() && cert.distinguishing && cert.label_count() <= bound => {
                row.method = Some(cert.method.as_str().into());
                row.index = Some(cert.label_count());
                row.index_kind = Some(IndexKind::Upper);
                row.status = Status::Pass;
                row.note = format!("exact search over budget; index at least {lower_bound}");
            }
            outcome => {
                row.status = Status::Unknown;
                row.note = match outcome {
                    Ok(cert) => format!("exact search over budget; constructed labeling with {} labels not accepted", cert.label_count()),
                    Err(e) => format!("exact search over budget; constructor failed: {e}"),
                };
            }
        },
        Err(e) => {
            row.status = Status::Error;
            row.note = e.to_string();
        }
    }
    row.pass = row.status == Status::Pass;
    row.elapsed_ms = clock.elapsed_ms();
    row
}

/// Totals written after the last row of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mode: String,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub unknown: usize,
    pub filtered: usize,
    pub errors: usize,
    /// Largest `index / bound` over rows with a known index.
    pub max_ratio: Option<f64>,
    pub max_ratio_graph6: Option<String>,
}

impl Summary {
    pub fn new(mode: Mode) -> Self {
        Summary {
            mode: mode.to_string(),
            rows: 0,
            passed: 0,
            failed: 0,
            unknown: 0,
            filtered: 0,
            errors: 0,
            max_ratio: None,
            max_ratio_graph6: None,
        }
    }

    pub fn add(&mut self, row: &BoundRow) {
        self.rows += 1;
        match row.status {
            Status::Pass => self.passed += 1,
            Status::Fail => self.failed += 1,
            Status::Unknown => self.unknown += 1,
            Status::Filtered => self.filtered += 1,
            Status::Error => self.errors += 1,
        }
        if let Some(r) = row.ratio() {
            if self.max_ratio.is_none_or(|best| r > best) {
                self.max_ratio = Some(r);
                self.max_ratio_graph6 = Some(row.graph6.clone());
            }
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.unknown == 0 && self.errors == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum AutRow {
    Ok {
        graph6: String,
        /// Decimal group order.
        order: String,
        generators: Vec<Vec<usize>>,
    },
    Error(ErrorRow),
}

pub fn aut_row(line: &Graph6Line, engine: Engine) -> AutRow {
    match &line.graph {
        Ok(g) => {
            let group = automorphism_group_with(g, engine);
            AutRow::Ok {
                graph6: line.text.clone(),
                order: group.order.to_string(),
                generators: group.generators.iter().map(|p| p.images().to_vec()).collect(),
            }
        }
        Err(e) => AutRow::Error(ErrorRow::new(line, e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::{parse_graph6, write_graph6};
    use dindex_core::families;

    fn line(g: &Graph) -> Graph6Line {
        let text = write_graph6(g);
        Graph6Line {
            line: 1,
            graph: parse_graph6(&text),
            text,
        }
    }

    fn bad_line() -> Graph6Line {
        Graph6Line {
            line: 3,
            text: "B!".into(),
            graph: parse_graph6("B!"),
        }
    }

    #[test]
    fn exact_rows() {
        let cfg = RunConfig::default();
        match exact_row(&line(&families::cycle(5).unwrap()), &cfg, None) {
            ExactRow::Solved(r) => assert_eq!(r.dprime, 3),
            other => panic!("{other:?}"),
        }
        let row = exact_row(&bad_line(), &cfg, None);
        assert!(!row.passed());
        let json = serde_json::to_string(&row).unwrap();
        assert!(json.starts_with(r#"{"status":"error","line":3"#), "{json}");
    }

    #[test]
    fn construct_rows() {
        let cfg = RunConfig::default();
        let c6 = construct_row(&line(&families::cycle(6).unwrap()), Mode::Thm23, &cfg);
        assert!(matches!(&c6, ConstructRow::Certified { bound: 3, pass: true, .. }));
        let petersen = construct_row(&line(&families::petersen()), Mode::Thm32, &cfg);
        assert!(matches!(&petersen, ConstructRow::Skipped { .. }) && petersen.passed());
        match construct_row(&line(&families::complete(6).unwrap()), Mode::Thm32, &cfg) {
            ConstructRow::Certified { certificate, pass, .. } => {
                assert!(pass);
                assert_eq!(certificate.verify().unwrap().1.label_count(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bound_rows() {
        let cfg = RunConfig::default();
        let row = bound_row(&line(&families::petersen()), &cfg);
        assert_eq!((row.status, row.index, row.bound), (Status::Pass, Some(2), Some(3)));
        assert_eq!(row.regular_bound, None);
        let tree = bound_row(&line(&families::path(5).unwrap()), &cfg);
        assert_eq!(tree.status, Status::Filtered);
        assert!(tree.passed() && !tree.pass);
        assert_eq!(bound_row(&bad_line(), &cfg).status, Status::Error);

        let mut summary = Summary::new(Mode::Thm23);
        summary.add(&row);
        summary.add(&tree);
        assert_eq!((summary.passed, summary.filtered, summary.max_ratio), (1, 1, Some(2.0 / 3.0)));
        assert!(summary.all_passed());
    }

    #[test]
    fn budget_exhaustion_is_never_a_pass_without_a_certificate() {
        // With a one-node budget the exact search cannot finish; the row
        // passes only through a verified constructed labeling.
        let cfg = RunConfig {
            budget_nodes: 1,
            ..RunConfig::default()
        };
        let row = bound_row(&line(&families::complete(7).unwrap()), &cfg);
        assert_eq!(row.index_kind, Some(IndexKind::Upper));
        assert_eq!(row.status, Status::Pass);
    }

    #[test]
    fn mode_bounds() {
        let k6 = families::complete(6).unwrap();
        assert_eq!(mode_bound(&k6, Mode::Thm23), Ok(3));
        assert_eq!(mode_bound(&k6, Mode::Thm32), Ok(2));
        assert_eq!(mode_bound(&k6, Mode::Conjecture11), Ok(4));
        assert!(mode_bound(&families::path(4).unwrap(), Mode::Conjecture11).is_err());
    }

    #[test]
    fn aut_rows() {
        match aut_row(&line(&families::petersen()), Engine::default()) {
            AutRow::Ok { order, .. } => assert_eq!(order, "120"),
            other => panic!("{other:?}"),
        }
    }
}
