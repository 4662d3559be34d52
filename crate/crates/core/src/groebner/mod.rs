//! Gröbner engine and the ideal-theoretic decision procedures built on it.
//!
//! All procedures go through [`Engine`], which owns the resource budget and
//! an optional on-disk basis cache. Exceeding the budget yields
//! [`Error::BudgetExhausted`](crate::Error::BudgetExhausted); no partial
//! basis is ever returned as if it were complete.

mod buchberger;
mod ideal;
mod ops;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

pub use ideal::{GroebnerBasis, Ideal};

use crate::cache::DiskCache;
use crate::error::Result;
use crate::polyring::MonomialOrder;
use buchberger::Control;

/// Resource caps for basis computations. `None` disables a cap.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// S-pairs reduced within one basis computation.
    pub max_pairs: Option<u64>,
    /// Total terms of the intermediate basis.
    pub max_terms: Option<u64>,
    /// Wall-clock limit measured from engine creation.
    pub time_limit: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: Some(2_000_000),
            max_terms: Some(20_000_000),
            time_limit: None,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget {
            max_pairs: None,
            max_terms: None,
            time_limit: None,
        }
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Budget {
        self.time_limit = Some(limit);
        self
    }

    pub fn with_max_pairs(mut self, pairs: u64) -> Budget {
        self.max_pairs = Some(pairs);
        self
    }
}

/// Counters describing the work an engine has done.
#[derive(Debug, Default)]
pub struct EngineStats {
    pub bases_computed: AtomicU64,
    pub pairs_reduced: AtomicU64,
    pub memory_hits: AtomicU64,
    pub disk_hits: AtomicU64,
}

impl EngineStats {
    pub fn bases_computed(&self) -> u64 {
        self.bases_computed.load(Ordering::Relaxed)
    }

    pub fn pairs_reduced(&self) -> u64 {
        self.pairs_reduced.load(Ordering::Relaxed)
    }

    pub fn disk_hits(&self) -> u64 {
        self.disk_hits.load(Ordering::Relaxed)
    }

    pub fn memory_hits(&self) -> u64 {
        self.memory_hits.load(Ordering::Relaxed)
    }
}

/// Entry point for every Gröbner computation. Shareable across threads.
#[derive(Debug)]
pub struct Engine {
    budget: Budget,
    started: Instant,
    cache: Option<DiskCache>,
    stats: Arc<EngineStats>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(Budget::default())
    }
}

impl Engine {
    pub fn new(budget: Budget) -> Engine {
        Engine {
            budget,
            started: Instant::now(),
            cache: None,
            stats: Arc::default(),
        }
    }

    pub fn with_cache(mut self, cache: DiskCache) -> Engine {
        self.cache = Some(cache);
        self
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    pub fn stats(&self) -> &EngineStats {
        &self.stats
    }

    pub fn cache(&self) -> Option<&DiskCache> {
        self.cache.as_ref()
    }

    /// Reduced Gröbner basis of `ideal` for `order`, consulting the ideal's
    /// own cache and then the disk cache before running Buchberger.
    pub fn groebner(&self, ideal: &Ideal, order: MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = ideal.cached(order) {
            self.stats.memory_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(gb);
        }
        let ring = ideal.ring().with_order(order);
        if let Some(cache) = &self.cache {
            if let Some(elements) = cache.load(&ring, ideal.generators()) {
                self.stats.disk_hits.fetch_add(1, Ordering::Relaxed);
                return Ok(ideal.store(Arc::new(GroebnerBasis::new(ring, elements))));
            }
        }
        let stats = self.stats.clone();
        let on_pair = move || {
            stats.pairs_reduced.fetch_add(1, Ordering::Relaxed);
        };
        let ctl = Control {
            max_pairs: self.budget.max_pairs,
            max_terms: self.budget.max_terms,
            deadline: self.budget.time_limit.map(|d| self.started + d),
            on_pair: &on_pair,
        };
        let elements = buchberger::reduced_basis(&ring, ideal.generators(), &ctl)?;
        self.stats.bases_computed.fetch_add(1, Ordering::Relaxed);
        if let Some(cache) = &self.cache {
            let _ = cache.store(&ring, ideal.generators(), &elements);
        }
        Ok(ideal.store(Arc::new(GroebnerBasis::new(ring, elements))))
    }
}

#[cfg(test)]
mod tests;
