//! Run manifests embedded in every JSON document.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    pub n: usize,
    pub max_a: i64,
}

/// What produced an output: the command line, the bounds and seed it ran
/// with, the worker count, and how long it took. Identical manifests and
/// inputs give byte-identical documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub bounds: Option<SearchBounds>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub jobs: usize,
    pub duration_ms: u64,
    pub version: String,
}

impl RunManifest {
    pub fn new(command: String) -> Self {
        RunManifest {
            command,
            bounds: None,
            seed: None,
            trials: None,
            jobs: 1,
            duration_ms: 0,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn with_bounds(mut self, n: usize, max_a: i64) -> Self {
        self.bounds = Some(SearchBounds { n, max_a });
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = Some(trials);
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_duration_ms(mut self, ms: u64) -> Self {
        self.duration_ms = ms;
        self
    }
}
