//! Censuses split across worker threads by least vertex.

use rayon::prelude::*;
use srg_core::oracle::{census_codes_from, check_census_request, Census, CensusError, Classifier, FixtureSrg, DEFAULT_SUBSET_BUDGET};

/// Same result as the sequential census; each worker keeps its own tally.
pub fn parallel_census(host: &FixtureSrg, order: usize) -> Result<Census, CensusError> {
    check_census_request(host, order, DEFAULT_SUBSET_BUDGET)?;
    let classifier = Classifier::new(order);
    let size = 1usize << (order * (order - 1) / 2);
    let codes = (0..host.order())
        .into_par_iter()
        .fold(
            || vec![0u64; size],
            |mut acc, first| {
                census_codes_from(host, order, first, &mut acc);
                acc
            },
        )
        .reduce(
            || vec![0u64; size],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(Census { order, counts: classifier.aggregate(&codes) })
}
