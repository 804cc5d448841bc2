//! Parallel drivers over the pure core operations. Results always come back
//! in canonical order, whatever the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use primpoints_core::arith::Rational;
use primpoints_core::hyperell::{CurveFunction, HyperCurve};
use primpoints_core::pipeline::{
    check_census_input, class_representatives, classify_class, search_twist, specialize_fiber, squarefree_twists,
    tabulate, FiberReport, MWSpec, OrbitVerdict, Summary, TwistCensusResult,
};
use primpoints_core::Result;

/// Runs `f` on a pool of `jobs` threads, or on the global pool for `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

pub fn classify_points_par(
    c: &HyperCurve,
    mw: &MWSpec,
    d: u64,
    jobs: Option<usize>,
) -> Result<(Vec<OrbitVerdict>, Summary)> {
    let reps = class_representatives(c, mw, d)?;
    let verdicts = with_jobs(jobs, || {
        reps.par_iter().map(|(l, div)| classify_class(c, d, l, div)).collect::<Result<Vec<_>>>()
    })?;
    let s = Summary::of(&verdicts);
    Ok((verdicts, s))
}

pub fn twist_census_par(
    f: &primpoints_core::arith::UniPoly,
    m: u64,
    height_bound: u64,
    jobs: Option<usize>,
) -> Result<TwistCensusResult> {
    check_census_input(f, m, height_bound)?;
    let table = tabulate(f, height_bound);
    let rs = squarefree_twists(m);
    let hits = with_jobs(jobs, || {
        rs.par_iter().filter_map(|&r| search_twist(&table, r)).filter(|h| h.verify(f)).collect()
    });
    Ok(TwistCensusResult { m, height_bound, hits })
}

/// `count` rationals `p/q` with `|p| <= height`, `1 <= q <= height`, from a
/// seeded ChaCha stream.
pub fn sample_betas(seed: u64, count: usize, height: u64) -> Vec<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let h = height.max(1) as i64;
    (0..count)
        .map(|_| {
            let p = rng.gen_range(-h..=h);
            let q = rng.gen_range(1..=h);
            Rational::new(p.into(), q.into())
        })
        .collect()
}

pub fn sample_fibers(
    c: &HyperCurve,
    w: &CurveFunction,
    betas: &[Rational],
    jobs: Option<usize>,
) -> Result<Vec<FiberReport>> {
    with_jobs(jobs, || betas.par_iter().map(|b| specialize_fiber(c, w, b)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        assert_eq!(sample_betas(7, 20, 50), sample_betas(7, 20, 50));
        assert_ne!(sample_betas(7, 20, 50), sample_betas(8, 20, 50));
        let h = Rational::from_integer(50.into());
        assert!(sample_betas(1, 100, 50).iter().all(|b| b.numer().magnitude() <= h.numer().magnitude()));
    }
}
