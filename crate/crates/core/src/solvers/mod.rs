//! Exact clique and chromatic numbers with witnesses.

mod brute;
mod chromatic;
mod clique;
mod dsatur;
mod kernel;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::graph::Coloring;

pub use brute::{brute_force_chi, BRUTE_FORCE_LIMIT};
pub use chromatic::chromatic_number;
pub use clique::max_clique;
pub use dsatur::greedy_dsatur;
pub use kernel::{dominated_kernel, Kernel};

/// Wall-clock limit shared by one solver call.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn from_millis(ms: u64) -> Self {
        Budget { deadline: Some(Instant::now() + Duration::from_millis(ms)) }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueResult {
    pub omega: usize,
    /// Vertex positions, increasing.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Coloring,
    /// The clique size the search started from.
    pub lower_bound_used: usize,
    pub clique: CliqueResult,
}

// Nodes between deadline checks.
const CHECK_INTERVAL: u64 = 1024;
