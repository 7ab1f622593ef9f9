//! Threaded experiment execution.
//!
//! Sample indices are independent work units; workers pick them round-robin
//! and the outcomes are re-sorted by index before aggregation, so results
//! are identical for every thread count.

use netdist_core::error::Result;
use netdist_core::experiment::{
    self, BoxStats, ExperimentConfig, SampleOutcome, ScaledSampleSet,
};
use netdist_core::linalg::Representation;

fn collect_outcomes<F>(n_samples: usize, threads: usize, work: F) -> Result<Vec<SampleOutcome>>
where
    F: Fn(usize) -> Result<SampleOutcome> + Sync,
{
    if threads <= 1 {
        return (0..n_samples).map(&work).collect();
    }
    let threads = threads.min(n_samples.max(1));
    let mut partials: Vec<Result<Vec<SampleOutcome>>> = Vec::with_capacity(threads);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let work = &work;
                scope.spawn(move || {
                    (t..n_samples)
                        .step_by(threads)
                        .map(work)
                        .collect::<Result<Vec<_>>>()
                })
            })
            .collect();
        for h in handles {
            partials.push(h.join().expect("worker panicked"));
        }
    });
    let mut outcomes = Vec::with_capacity(n_samples);
    for partial in partials {
        outcomes.extend(partial?);
    }
    Ok(outcomes)
}

/// `run_experiment` with a worker pool; bit-identical to the serial driver.
pub fn run_experiment_threaded(
    cfg: &ExperimentConfig,
    threads: usize,
) -> Result<Vec<ScaledSampleSet>> {
    cfg.validate()?;
    let outcomes = collect_outcomes(cfg.n_samples, threads, |i| {
        experiment::sample_distances(cfg, i)
    })?;
    experiment::aggregate(cfg, outcomes)
}

/// `lambda_k_sweep` with a worker pool; bit-identical to the serial driver.
pub fn run_sweep_threaded(
    cfg: &ExperimentConfig,
    representation: Representation,
    k_values: &[usize],
    threads: usize,
) -> Result<Vec<(usize, BoxStats)>> {
    cfg.validate()?;
    let outcomes = collect_outcomes(cfg.n_samples, threads, |i| {
        experiment::sweep_sample(cfg, representation, k_values, i)
    })?;
    experiment::aggregate_sweep(k_values, outcomes)
}
