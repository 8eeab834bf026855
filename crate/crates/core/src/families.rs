//! Named graph families and their closed-form distinguishing indices.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::solver::{self, NoClock, SolveOutcome, SolverConfig};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("infeasible parameters: {0}")]
    Infeasible(&'static str),
    #[error("no simple connected pairing found in {0} attempts")]
    PairingGaveUp(usize),
}

fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, FamilyError> {
    Graph::new(n, pairs).map_err(|_| FamilyError::Infeasible("graph exceeds the vertex limit"))
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Infeasible("path needs at least one vertex"));
    }
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &pairs)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::Infeasible("cycle needs at least three vertices"));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &pairs)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Infeasible("complete graph needs at least one vertex"));
    }
    let pairs: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    build(n, &pairs)
}

/// `K_{p,q}` with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph, FamilyError> {
    if p == 0 || q == 0 {
        return Err(FamilyError::Infeasible("both parts must be nonempty"));
    }
    let pairs: Vec<_> = (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))).collect();
    build(p + q, &pairs)
}

/// `n` triangles sharing the hub vertex 0; triangle `i` is `{0, 2i+1, 2i+2}`.
pub fn friendship(n: usize) -> Result<Graph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::Infeasible("friendship graph needs a triangle"));
    }
    let mut pairs = Vec::with_capacity(3 * n);
    for i in 0..n {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        pairs.extend([(0, a), (0, b), (a, b)]);
    }
    build(2 * n + 1, &pairs)
}

pub fn petersen() -> Graph {
    let mut pairs = Vec::with_capacity(15);
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &pairs).expect("ten vertices")
}

/// Vertex `i` adjacent to `i ± j mod n` for each jump `j`.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph, FamilyError> {
    if jumps.iter().any(|&j| j == 0 || j >= n) {
        return Err(FamilyError::Infeasible("jumps must lie in 1..n"));
    }
    let pairs: Vec<_> = (0..n)
        .flat_map(|i| jumps.iter().map(move |&j| (i, (i + j) % n)))
        .collect();
    build(n, &pairs)
}

/// Attempts before [`random_regular`] gives up.
pub const PAIRING_ATTEMPTS: usize = 10_000;

/// Uniform-pairing random `k`-regular graph, resampled until simple and connected.
pub fn random_regular(n: usize, k: usize, seed: u64) -> Result<Graph, FamilyError> {
    if k >= n || (n * k) % 2 == 1 {
        return Err(FamilyError::Infeasible("need k < n and n·k even"));
    }
    if k == 0 && n > 1 {
        return Err(FamilyError::Infeasible("0-regular graphs on several vertices are disconnected"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * k).map(|p| p / k).collect();
    'attempt: for _ in 0..PAIRING_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut pairs = Vec::with_capacity(n * k / 2);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                continue 'attempt;
            }
            pairs.push((u, v));
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let g = build(n, &pairs)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::PairingGaveUp(PAIRING_ATTEMPTS))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("formula needs {0}")]
    OutOfDomain(&'static str),
}

/// `D'(P_n)` for `n ≥ 3`.
pub fn formula_path(n: usize) -> Result<usize, FormulaError> {
    if n < 3 {
        return Err(FormulaError::OutOfDomain("n ≥ 3"));
    }
    Ok(2)
}

/// `D'(C_n)`: 3 for the triangle, square and pentagon, 2 from the hexagon on.
pub fn formula_cycle(n: usize) -> Result<usize, FormulaError> {
    match n {
        0..=2 => Err(FormulaError::OutOfDomain("n ≥ 3")),
        3..=5 => Ok(3),
        _ => Ok(2),
    }
}

/// Cardano radicand `a_n = 1 + 27n + 3·sqrt(81n² + 6n)` kept in exact parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FriendshipRadicand {
    pub n: u64,
    /// `1 + 27n`.
    pub rational: u128,
    /// `81n² + 6n`, whose square root is taken with coefficient 3.
    pub under_root: u128,
}

impl FriendshipRadicand {
    pub fn new(n: u64) -> Result<Self, FormulaError> {
        if n < 2 {
            return Err(FormulaError::OutOfDomain("at least two triangles"));
        }
        let n128 = n as u128;
        Ok(FriendshipRadicand {
            n,
            rational: 1 + 27 * n128,
            under_root: 81 * n128 * n128 + 6 * n128,
        })
    }
}

/// `D'(F_n)`.
///
/// The closed form `⌈a^(1/3)/3 + 1/(3a^(1/3)) + 1/3⌉` is the ceiling of the
/// real root of `t³ − t² − 2n`, so it equals the least integer `d` with
/// `d³ − d² ≥ 2n`. That predicate is evaluated exactly; the root is an
/// integer for infinitely many `n` and a float would misplace the ceiling.
pub fn formula_friendship(n: u64) -> Result<usize, FormulaError> {
    let radicand = FriendshipRadicand::new(n)?;
    let target = 2 * radicand.n as u128;
    let mut d: u128 = 1;
    while d * d * d - d * d < target {
        d += 1;
    }
    Ok(d as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteCase {
    /// `q ≤ r^p − ⌈log_r p⌉ − 1`: the index is `r`.
    Low,
    /// `q ≥ r^p − ⌈log_r p⌉ + 1`: the index is `r + 1`.
    High,
    /// `q = r^p − ⌈log_r p⌉`: the index is `r` or `r + 1`.
    Boundary,
    /// `p = q`: swapping the two sides is an extra symmetry the counting
    /// argument does not cover.
    Balanced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BipartiteValue {
    Exact(usize),
    /// Either endpoint, inclusive.
    Between(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Formula,
    ExactSolver,
    /// `K_{1,q}`: every permutation of the leaves is an automorphism, so all
    /// `q` edges need distinct labels.
    StarArgument,
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BipartiteFormulaResult {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub case: BipartiteCase,
    pub value: BipartiteValue,
    pub resolution: Resolution,
}

/// Largest `p·q` for which unresolved cases go to the exact solver.
pub const BIPARTITE_EXACT_CAP: usize = 12;

fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

/// Least `t ≥ 0` with `base^t ≥ x`, for `base ≥ 2`.
pub fn ceil_log(base: usize, x: usize) -> usize {
    let mut t = 0;
    let mut power: u128 = 1;
    while power < x as u128 {
        power *= base as u128;
        t += 1;
    }
    t
}

/// Radix `r ≥ 2` with `(r−1)^p < q ≤ r^p`, if one exists.
pub fn bipartite_radix(p: usize, q: usize) -> Option<usize> {
    if p == 0 || q < 2 {
        return None;
    }
    let mut r = 2usize;
    while saturating_pow(r as u128, p) < q as u128 {
        r += 1;
    }
    (saturating_pow(r as u128 - 1, p) < q as u128).then_some(r)
}

/// `D'(K_{p,q})`, with parts given in either order.
pub fn formula_complete_bipartite(p: usize, q: usize) -> Result<BipartiteFormulaResult, FormulaError> {
    let (p, q) = (p.min(q), p.max(q));
    let r = bipartite_radix(p, q).ok_or(FormulaError::OutOfDomain("an r ≥ 2 with (r−1)^p < q ≤ r^p"))?;
    let mut result = BipartiteFormulaResult {
        p,
        q,
        r,
        case: BipartiteCase::Boundary,
        value: BipartiteValue::Between(r, r + 1),
        resolution: Resolution::Unresolved,
    };
    if p == 1 {
        result.value = BipartiteValue::Exact(q);
        result.resolution = Resolution::StarArgument;
        return Ok(result);
    }
    let threshold = saturating_pow(r as u128, p).saturating_sub(ceil_log(r, p) as u128);
    let q128 = q as u128;
    result.case = if p == q {
        BipartiteCase::Balanced
    } else if q128 < threshold {
        BipartiteCase::Low
    } else if q128 > threshold {
        BipartiteCase::High
    } else {
        BipartiteCase::Boundary
    };
    match result.case {
        BipartiteCase::Low => {
            result.value = BipartiteValue::Exact(r);
            result.resolution = Resolution::Formula;
        }
        BipartiteCase::High => {
            result.value = BipartiteValue::Exact(r + 1);
            result.resolution = Resolution::Formula;
        }
        BipartiteCase::Boundary | BipartiteCase::Balanced if p * q <= BIPARTITE_EXACT_CAP => {
            let g = complete_bipartite(p, q).expect("nonempty parts");
            let outcome = solver::exact_distinguishing_index(&g, g.m(), &SolverConfig::default(), &NoClock)
                .expect("complete bipartite graphs are connected");
            if let SolveOutcome::Solved(solved) = outcome {
                result.value = BipartiteValue::Exact(solved.dprime);
                result.resolution = Resolution::ExactSolver;
            }
        }
        BipartiteCase::Boundary | BipartiteCase::Balanced => {}
    }
    Ok(result)
}
