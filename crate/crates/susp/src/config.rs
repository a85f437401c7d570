use std::sync::atomic::AtomicBool;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Safety limits on polynomial growth.
///
/// Long-running algorithms (basis computation, determinants, minor
/// enumeration) check intermediate results against these limits and fail
/// with a resource error instead of grinding on, so runaway computations
/// are reported rather than silent.
#[derive(Clone, Debug)]
pub struct Limits {
    /// Maximum total degree of any intermediate polynomial.
    pub max_total_degree: u32,
    /// Maximum number of terms of any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_total_degree: 64,
            max_terms: 100_000,
        }
    }
}

impl Limits {
    pub fn check(&self, p: &Polynomial) -> Result<()> {
        if let Some(d) = p.total_degree() {
            if d > self.max_total_degree {
                return Err(Error::Resource(format!(
                    "total degree {} exceeds limit {}",
                    d, self.max_total_degree
                )));
            }
        }
        if p.num_terms() > self.max_terms {
            return Err(Error::Resource(format!(
                "term count {} exceeds limit {}",
                p.num_terms(),
                self.max_terms
            )));
        }
        Ok(())
    }
}

/// Shared configuration for the symbolic engine.
#[derive(Clone)]
pub struct Config {
    pub limits: Limits,
    /// Cooperative cancellation: checked between reduction steps of long
    /// computations. Setting it to `true` aborts with a cancelled error.
    pub stop: Option<Arc<AtomicBool>>,
    /// Cap on the number of suspension equations at one tower level; the
    /// minor enumeration grows combinatorially with it.
    pub max_suspension_codim: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            limits: Limits::default(),
            stop: None,
            max_suspension_codim: 4,
        }
    }
}

impl Config {
    pub(crate) fn check_stop(&self) -> Result<()> {
        if let Some(flag) = &self.stop {
            if flag.load(std::sync::atomic::Ordering::Relaxed) {
                return Err(Error::Cancelled);
            }
        }
        Ok(())
    }
}
