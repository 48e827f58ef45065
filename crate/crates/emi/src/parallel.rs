//! Multi-threaded evaluation on top of `emi-core`.
//!
//! Subinterval terms are computed independently and collected in `ℓ` order,
//! then reduced by the core's fixed pairwise tree, so results do not depend
//! on the thread count.

use emi_core::pi::{self, ConvergenceReport, ReferencePi};
use emi_core::{Arithmetic, EmiConfig, EmiPlan, Exact, Float, Integrand, Mode, QuadResult, Rat, Value};
use rayon::prelude::*;

use crate::error::{CliError, Result};

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "EMI_THREADS";

/// Reads `EMI_THREADS`; unset means "let rayon decide".
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{raw}`"))),
        },
    }
}

/// A pool honoring an optional thread cap.
#[derive(Debug)]
pub struct Workers {
    pool: rayon::ThreadPool,
}

impl Workers {
    pub fn new(threads: Option<usize>) -> Result<Self> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = threads {
            builder = builder.num_threads(n);
        }
        let pool = builder.build().map_err(|e| CliError::Internal(e.to_string()))?;
        Ok(Workers { pool })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    fn integrate_plan<A>(&self, plan: &EmiPlan<A>) -> Result<A::Scalar>
    where
        A: Arithmetic + Sync,
        A::Scalar: Send + Sync,
    {
        let terms = self.pool.install(|| {
            (1..=plan.subintervals()).into_par_iter().map(|ell| plan.term(ell)).collect::<Result<Vec<_>, _>>()
        })?;
        Ok(plan.sum(&terms))
    }

    /// Same contract as [`emi_core::emi_integrate`], evaluated on the pool.
    pub fn emi_integrate(&self, integrand: &Integrand, config: &EmiConfig) -> Result<QuadResult> {
        config.validate()?;
        let value = match config.mode {
            Mode::Exact => {
                let plan = EmiPlan::new(Exact, integrand.clone(), config.subintervals, config.order)?;
                Value::Exact(self.integrate_plan(&plan)?)
            }
            Mode::Float => {
                let arith = Float::for_output(config.precision)?;
                let plan = EmiPlan::new(arith, integrand.clone(), config.subintervals, config.order)?;
                Value::Float(self.integrate_plan(&plan)?)
            }
        };
        Ok(QuadResult { value, config: *config, term_count: config.term_count() })
    }

    pub fn pi_emi(&self, subintervals: u32, order: u32, mode: Mode, precision: u32) -> Result<Value> {
        let config = EmiConfig { subintervals, order, mode, precision };
        let result = self.emi_integrate(&Integrand::arctan_kernel(Rat::one()), &config)?;
        Ok(pi::four_times(result.value))
    }

    /// Evaluates every `(L, M)` cell concurrently (each cell sequentially
    /// inside) and assembles the report.
    pub fn convergence_scan(
        &self,
        subintervals: &[u32],
        orders: &[u32],
        mode: Mode,
        precision: u32,
        reference: &ReferencePi,
    ) -> Result<ConvergenceReport> {
        let cells: Vec<(u32, u32)> = orders.iter().flat_map(|&m| subintervals.iter().map(move |&l| (l, m))).collect();
        let values = self.pool.install(|| {
            cells
                .par_iter()
                .map(|&(l, m)| pi::pi_emi(l, m, mode, precision).map(|v| ((l, m), v)))
                .collect::<Result<Vec<_>, _>>()
        })?;
        let mut report = ConvergenceReport::assemble(mode, precision, values, reference)?;
        report.timestamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok().map(|d| d.as_secs());
        Ok(report)
    }
}
