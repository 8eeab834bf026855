//! Order-preserving parallel map over graph6 input.

use std::io::BufRead;

use rayon::prelude::*;

use crate::graph6::{read_graph6_lines, Graph6Line};

/// Lines handed to the pool at once, per worker.
const CHUNK_PER_WORKER: usize = 16;

/// Maps `work` over every input line on `workers` threads and hands the
/// results to `emit` in input order, one chunk at a time so output streams.
pub fn map_ordered<R, T, W, E>(reader: R, workers: usize, work: W, mut emit: E) -> anyhow::Result<()>
where
    R: BufRead,
    T: Send,
    W: Fn(&Graph6Line) -> T + Sync,
    E: FnMut(T) -> anyhow::Result<()>,
{
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build()?;
    let chunk = workers.max(1) * CHUNK_PER_WORKER;
    let mut lines = read_graph6_lines(reader);
    loop {
        let batch = lines.by_ref().take(chunk).collect::<std::io::Result<Vec<_>>>()?;
        if batch.is_empty() {
            return Ok(());
        }
        let done: Vec<T> = pool.install(|| batch.par_iter().map(&work).collect());
        for item in done {
            emit(item)?;
        }
    }
}
