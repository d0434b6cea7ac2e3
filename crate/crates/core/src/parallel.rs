//! Order-preserving parallel evaluation with early exit.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

/// Shared stop marker: the lowest item index that has produced a hit so far.
pub struct StopIndex(AtomicUsize);

impl StopIndex {
    fn new() -> Self {
        StopIndex(AtomicUsize::new(usize::MAX))
    }

    /// True once some item with a smaller index than `index` has hit, which
    /// makes the result for `index` irrelevant.
    #[inline]
    pub fn superseded(&self, index: usize) -> bool {
        self.0.load(Ordering::Relaxed) < index
    }

    fn record(&self, index: usize) {
        self.0.fetch_min(index, Ordering::Relaxed);
    }

    fn get(&self) -> usize {
        self.0.load(Ordering::Relaxed)
    }
}

/// Evaluates `f` on every item, possibly in parallel, and returns the results
/// for the prefix of items up to and including the first (lowest-index) hit,
/// or for all items when nothing hits.
///
/// The returned prefix does not depend on scheduling: every item before the
/// first hit is always evaluated to completion. `f` may poll
/// [`StopIndex::superseded`] to abandon work whose result will be discarded.
pub fn ordered_until_hit<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(usize, &T, &StopIndex) -> (R, bool) + Sync,
{
    let stop = StopIndex::new();
    let results: Vec<Option<R>> = items
        .par_iter()
        .enumerate()
        .map(|(i, item)| {
            if stop.superseded(i) {
                return None;
            }
            let (r, hit) = f(i, item, &stop);
            if hit {
                stop.record(i);
            }
            Some(r)
        })
        .collect();
    let end = stop.get();
    results
        .into_iter()
        .enumerate()
        .take_while(|(i, _)| *i <= end)
        .map(|(i, r)| r.unwrap_or_else(|| panic!("item {i} precedes the first hit but was skipped")))
        .collect()
}
