//! Node and wall-clock budgets shared by the exhaustive searches.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::error::Error;

/// Environment variable consulted for the default worker count.
pub const WORKERS_ENV: &str = "FOLKMAN_WORKERS";

/// Limits applied to one exhaustive search.
#[derive(Clone, Debug, Default)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Worker threads for the arrowing search. `0` and `1` both mean sequential.
    pub workers: usize,
}

impl SearchLimits {
    pub fn unlimited() -> Self {
        SearchLimits::default()
    }

    pub fn with_max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn with_max_time(mut self, time: Duration) -> Self {
        self.max_time = Some(time);
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    /// Worker count from `FOLKMAN_WORKERS`, falling back to 1.
    pub fn workers_from_env() -> usize {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&w| w > 0)
            .unwrap_or(1)
    }
}

/// Why a search stopped before finishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Stop {
    Budget,
    Cancelled,
}

/// Budget state shared by every worker of one search.
pub(crate) struct SharedBudget {
    start: Instant,
    max_nodes: Option<u64>,
    max_time: Option<Duration>,
    nodes: AtomicU64,
    exhausted: AtomicBool,
}

impl SharedBudget {
    pub(crate) fn new(limits: &SearchLimits) -> Self {
        SharedBudget {
            start: Instant::now(),
            max_nodes: limits.max_nodes,
            max_time: limits.max_time,
            nodes: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    pub(crate) fn total_nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub(crate) fn exhausted_error(&self) -> Error {
        Error::Indeterminate {
            nodes: self.total_nodes(),
        }
    }
}

/// Per-worker node counter.
pub(crate) struct Meter<'a> {
    shared: &'a SharedBudget,
    pub(crate) local: u64,
    since_clock: u32,
    cancel: Option<&'a dyn Fn() -> bool>,
}

impl<'a> Meter<'a> {
    pub(crate) fn new(shared: &'a SharedBudget) -> Self {
        Meter {
            shared,
            local: 0,
            since_clock: 0,
            cancel: None,
        }
    }

    pub(crate) fn with_cancel(mut self, cancel: &'a dyn Fn() -> bool) -> Self {
        self.cancel = Some(cancel);
        self
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), Stop> {
        self.local += 1;
        let total = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(max) = self.shared.max_nodes {
            if total > max {
                self.shared.exhausted.store(true, Ordering::Relaxed);
                return Err(Stop::Budget);
            }
        }
        self.since_clock += 1;
        if self.since_clock >= 1024 {
            self.since_clock = 0;
            if self.shared.exhausted.load(Ordering::Relaxed) {
                return Err(Stop::Budget);
            }
            if let Some(max) = self.shared.max_time {
                if self.shared.start.elapsed() > max {
                    self.shared.exhausted.store(true, Ordering::Relaxed);
                    return Err(Stop::Budget);
                }
            }
            if let Some(cancel) = self.cancel {
                if cancel() {
                    return Err(Stop::Cancelled);
                }
            }
        }
        Ok(())
    }
}
