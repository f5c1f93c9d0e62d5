use kfree_core::enumeration::WorkUnit;
use kfree_core::verify::Executor;
use rayon::prelude::*;

/// Executes work units on a dedicated rayon pool. Results come back in unit
/// order, so every report is independent of the thread count.
pub struct Parallel {
    pool: rayon::ThreadPool,
}

impl Parallel {
    pub fn new(jobs: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
        Ok(Self { pool })
    }

    pub fn jobs(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl Executor for Parallel {
    fn map<T, F>(&self, units: &[WorkUnit], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&WorkUnit) -> T + Sync,
    {
        self.pool.install(|| units.par_iter().map(&f).collect())
    }
}

/// Default job count: all available cores.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
