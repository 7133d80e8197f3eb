//! Concurrent atlas build: cells are split across scoped threads and merged
//! back in key order, so the result equals the sequential build.

use std::num::NonZeroUsize;
use std::thread;

use moduli_core::classify::atlas::{atlas_keys, classify_cell, AtlasCell, AtlasConfig, KnownWitnesses};
use moduli_core::Error;

pub fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

pub fn build_atlas_parallel(
    d: usize,
    changes: &[usize],
    cfg: &AtlasConfig,
    workers: usize,
) -> Result<Vec<AtlasCell>, Error> {
    let known = KnownWitnesses::for_degree(d);
    let keys = atlas_keys(d, changes);
    let workers = workers.clamp(1, keys.len().max(1));
    let mut results: Vec<(usize, Result<AtlasCell, Error>)> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let (keys, known) = (&keys, &known);
                s.spawn(move || {
                    keys.iter()
                        .enumerate()
                        .skip(w)
                        .step_by(workers)
                        .map(|(i, (shape, word))| (i, classify_cell(shape, word, known, cfg)))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    results.sort_by_key(|(i, _)| *i);
    results.into_iter().map(|(_, cell)| cell).collect()
}
