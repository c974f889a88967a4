//! Goldbach scans over 𝔑 split across threads.

use std::thread;

use peano_core::goldbach::{scan_range, split_range, FrakNReport, PrimeTable};

/// [`peano_core::goldbach::scan_chunked`] with each chunk on its own thread.
/// The report does not depend on `chunks`.
pub fn parallel_scan(limit: u64, chunks: usize) -> FrakNReport {
    let table = PrimeTable::new(limit);
    let ranges = split_range(limit, chunks);
    let parts = thread::scope(|s| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| {
                let table = &table;
                s.spawn(move || scan_range(table, lo, hi))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect::<Vec<_>>()
    });
    FrakNReport::merge(limit, parts)
}
