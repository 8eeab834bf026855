//! Label budgets and block sizes, in exact integer arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundError {
    #[error("minimum degree {0} is below 2")]
    MinDegreeBelowTwo(usize),
    #[error("maximum degree {max} is below the minimum degree {min}")]
    DegreeOrder { min: usize, max: usize },
    #[error("tuples need arity at least 1")]
    ZeroArity,
}

fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Least `t` with `t^k ≥ x`, i.e. `⌈x^(1/k)⌉`, for `k ≥ 1`.
pub fn ceil_root(x: usize, k: usize) -> usize {
    let mut t = 1usize;
    while saturating_pow(t as u128, k) < x as u128 {
        t += 1;
    }
    t
}

fn check_degrees(min_degree: usize, max_degree: usize) -> Result<(), BoundError> {
    if min_degree < 2 {
        return Err(BoundError::MinDegreeBelowTwo(min_degree));
    }
    if max_degree < min_degree {
        return Err(BoundError::DegreeOrder {
            min: min_degree,
            max: max_degree,
        });
    }
    Ok(())
}

/// `⌈Δ^(1/δ)⌉ + 1`.
pub fn paper_bound(min_degree: usize, max_degree: usize) -> Result<usize, BoundError> {
    check_degrees(min_degree, max_degree)?;
    Ok(ceil_root(max_degree, min_degree) + 1)
}

/// Spoke block size `⌈Δ^((δ−1)/δ)⌉ − 1`: the least `s` with
/// `s^δ ≥ Δ^(δ−1)`, minus one.
pub fn block_size(min_degree: usize, max_degree: usize) -> Result<usize, BoundError> {
    check_degrees(min_degree, max_degree)?;
    let target = BigUint::from(max_degree).pow(min_degree as u32 - 1);
    let (mut lo, mut hi) = (1usize, max_degree.max(1));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if BigUint::from(mid).pow(min_degree as u32) >= target {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo - 1)
}

/// Label-count vectors usable as pairwise distinct multisets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuplePool {
    /// Labels needed, `min{r : C(j+r−1, r−1) ≥ count}`.
    pub r: usize,
    /// Nondecreasing `j`-tuples over `1..=r`, pairwise distinct as multisets.
    pub tuples: Vec<Vec<u32>>,
}

/// `count` tuples of arity `j` whose label multisets differ pairwise,
/// over as few labels as possible.
pub fn multiset_tuple_pool(j: usize, count: usize) -> Result<TuplePool, BoundError> {
    if j == 0 {
        return Err(BoundError::ZeroArity);
    }
    // C(j+r−1, r−1) at r = 1 is 1; stepping r multiplies by (j+r)/r.
    let mut r = 1usize;
    let mut available: u128 = 1;
    while available < count as u128 {
        available = available * (j + r) as u128 / r as u128;
        r += 1;
    }
    Ok(TuplePool {
        r,
        tuples: multisets(j, r, count),
    })
}

/// The first `limit` nondecreasing `j`-tuples over `1..=labels`, in
/// lexicographic order.
pub fn multisets(j: usize, labels: usize, limit: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if labels == 0 {
        return out;
    }
    let mut current = vec![1u32; j];
    while out.len() < limit {
        out.push(current.clone());
        let Some(pos) = current.iter().rposition(|&x| (x as usize) < labels) else {
            break;
        };
        let next = current[pos] + 1;
        current[pos..].iter_mut().for_each(|x| *x = next);
    }
    out
}
