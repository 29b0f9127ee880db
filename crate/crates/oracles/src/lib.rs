//! Brute-force reference answers for the `partree-core` algorithms.
//!
//! Everything here works from the definitions, on its own bitmask graph
//! type ([`SmallGraph`]), and shares no algorithmic code with the core
//! crate. All oracles are exponential and guarded by an [`OracleBudget`]:
//! going over budget is an error, never a guess.

use std::time::{Duration, Instant};

use thiserror::Error;

mod choosable;
mod chromatic;
mod cutsets;
pub mod enumerate;
mod parts;
mod planar;
mod random;
mod small;

pub use choosable::{oracle_choosable, oracle_choosable_exhaustive};
pub use chromatic::oracle_chromatic;
pub use cutsets::{oracle_critical, oracle_cutsets};
pub use parts::oracle_parts;
pub use planar::oracle_planar;
pub use random::random_biconnected;
pub use small::SmallGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: size {size} is over the budget of {cap}")]
    Budget {
        what: &'static str,
        size: u64,
        cap: u64,
    },
    #[error("{what}: gave up after {cap:?}")]
    Timeout { what: &'static str, cap: Duration },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget field `{0}` must be positive")]
    InvalidBudget(&'static str),
}

impl OracleError {
    /// Budget and time-cap errors mean "not decided", as opposed to bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            OracleError::Budget { .. } | OracleError::Timeout { .. }
        )
    }
}

pub type Result<T, E = OracleError> = std::result::Result<T, E>;

/// Size caps per oracle and a wall-clock cap per call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub parts_vertices: usize,
    pub chromatic_vertices: usize,
    pub choosable_vertices: usize,
    pub choosable_colors: usize,
    /// Number of `k`-subsets the cutset oracle may examine.
    pub cutset_subsets: u64,
    pub critical_vertices: usize,
    pub planar_vertices: usize,
    pub time_cap: Duration,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            parts_vertices: 12,
            chromatic_vertices: 12,
            choosable_vertices: 6,
            choosable_colors: 3,
            cutset_subsets: 1 << 20,
            critical_vertices: 32,
            planar_vertices: 10,
            time_cap: Duration::from_secs(30),
        }
    }
}

impl OracleBudget {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("parts_vertices", self.parts_vertices as u64),
            ("chromatic_vertices", self.chromatic_vertices as u64),
            ("choosable_vertices", self.choosable_vertices as u64),
            ("choosable_colors", self.choosable_colors as u64),
            ("cutset_subsets", self.cutset_subsets),
            ("critical_vertices", self.critical_vertices as u64),
            ("planar_vertices", self.planar_vertices as u64),
            (
                "time_cap",
                self.time_cap.as_nanos().min(u64::MAX as u128) as u64,
            ),
        ];
        match fields.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(OracleError::InvalidBudget(name)),
            None => Ok(()),
        }
    }

    pub(crate) fn cap(&self, what: &'static str, size: usize, cap: usize) -> Result<()> {
        self.validate()?;
        if size > cap {
            return Err(OracleError::Budget {
                what,
                size: size as u64,
                cap: cap as u64,
            });
        }
        Ok(())
    }

    pub(crate) fn deadline(&self, what: &'static str) -> Deadline {
        Deadline {
            what,
            start: Instant::now(),
            cap: self.time_cap,
            ticks: 0,
        }
    }
}

/// Cheap periodic wall-clock check for long enumerations.
pub(crate) struct Deadline {
    what: &'static str,
    start: Instant,
    cap: Duration,
    ticks: u32,
}

impl Deadline {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) && self.start.elapsed() > self.cap {
            return Err(OracleError::Timeout {
                what: self.what,
                cap: self.cap,
            });
        }
        Ok(())
    }
}
