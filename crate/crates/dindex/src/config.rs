//! Run configuration shared by the subcommands.

use std::fmt;
use std::str::FromStr;

use dindex_core::aut::{Engine, DEFAULT_BRUTE_FORCE_CAP};
use dindex_core::construct::ConstructConfig;
use dindex_core::solver::{Budget, SolverConfig};

/// Which bound a sweep checks and which graphs it admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Minimum degree at least 2, bound `⌈Δ^(1/δ)⌉ + 1`.
    #[default]
    Thm23,
    /// Connected `k`-regular with `k ≥ 5`, bound 2.
    Thm32,
    /// 2-connected, bound `1 + ⌈√Δ⌉`.
    Conjecture11,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Thm23 => "thm23",
            Mode::Thm32 => "thm32",
            Mode::Conjecture11 => "conjecture11",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Mode::Thm23, Mode::Thm32, Mode::Conjecture11]
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown mode {s:?} (expected thm23, thm32 or conjecture11)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Graphs up to this order use exhaustive automorphism enumeration.
    pub brute_force_cap: usize,
    /// Search nodes per exact solve.
    pub budget_nodes: u64,
    /// Milliseconds per graph for each exact solve.
    pub budget_ms: u64,
    /// Seeded retries after a constructor's deterministic attempt.
    pub repair_attempts: usize,
    pub seed: u64,
    pub workers: usize,
    pub mode: Mode,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            brute_force_cap: DEFAULT_BRUTE_FORCE_CAP,
            budget_nodes: Budget::default().max_nodes,
            budget_ms: Budget::default().max_millis,
            repair_attempts: ConstructConfig::default().repair_attempts,
            seed: 0,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            mode: Mode::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} must be positive")]
pub struct ConfigError(pub &'static str);

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let checks = [
            (self.brute_force_cap as u64, "brute_force_cap"),
            (self.budget_nodes, "budget_nodes"),
            (self.budget_ms, "budget_ms"),
            (self.repair_attempts as u64, "repair_attempts"),
            (self.workers as u64, "workers"),
        ];
        match checks.into_iter().find(|&(v, _)| v == 0) {
            Some((_, name)) => Err(ConfigError(name)),
            None => Ok(()),
        }
    }

    pub fn solver(&self) -> SolverConfig {
        SolverConfig {
            budget: Budget {
                max_nodes: self.budget_nodes,
                max_millis: self.budget_ms,
            },
            partial_pruning: true,
            engine: Engine::Auto {
                brute_force_cap: self.brute_force_cap,
            },
        }
    }

    pub fn construct(&self) -> ConstructConfig {
        ConstructConfig {
            repair_attempts: self.repair_attempts,
            seed: self.seed,
            solver: self.solver(),
            ..ConstructConfig::default()
        }
    }
}
