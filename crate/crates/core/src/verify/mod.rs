//! Verification suites. Every suite returns a [`CheckReport`] with exact
//! pass counts and the first few failing inputs; reports carry no timings so
//! identical configurations give identical output.

mod cubes;
mod laws;
mod phi;
mod posets;
mod tensor;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};

pub use laws::{brute_force_count, operad_laws_exhaustive, operad_laws_random};
pub use phi::phi_packed;
pub use posets::{acyclicity_sweep, poset_homology};

const MAX_FAILURES: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: u64,
    pub total: u64,
    /// One line per instance covered, such as `K_2(3): 60/60`.
    pub details: Vec<String>,
    pub failures: Vec<serde_json::Value>,
}

impl CheckReport {
    pub fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), passed: 0, total: 0, details: Vec::new(), failures: Vec::new() }
    }

    #[inline]
    pub fn record(&mut self, ok: bool, payload: impl FnOnce() -> serde_json::Value) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < MAX_FAILURES {
            self.failures.push(payload());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }

    /// Runs `f` and appends a detail line with the counts it added.
    pub fn section(&mut self, label: String, f: impl FnOnce(&mut Self) -> Result<()>) -> Result<()> {
        let (p, t) = (self.passed, self.total);
        f(self)?;
        self.details.push(format!("{label}: {}/{}", self.passed - p, self.total - t));
        Ok(())
    }
}

/// Bounds and seed shared by all suites. `n` and `k` are inclusive upper
/// bounds; `trials` sizes the randomized parts.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyConfig {
    pub n: u32,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub budget: Budget,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { n: 2, k: 3, trials: 1000, seed: 0, budget: Budget::default() }
    }
}

impl VerifyConfig {
    /// An independent random stream per suite.
    pub(crate) fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// Names accepted by [`run_check`], in the order [`run_all`] uses.
pub const CHECKS: &[&str] = &[
    "counting",
    "operad-laws",
    "sigma-free",
    "phi",
    "cubes",
    "compatibility",
    "relation",
    "tensor",
    "cover",
    "prop-a2",
    "colimits",
    "homology",
    "acyclicity",
    "counterexample",
];

pub fn run_check(name: &str, cfg: &VerifyConfig) -> Result<CheckReport> {
    match name {
        "counting" => laws::counting(cfg),
        "operad-laws" => laws::operad_laws(cfg),
        "sigma-free" => laws::sigma_free(cfg),
        "phi" => phi::phi_check(cfg),
        "cubes" => cubes::cube_properties(cfg),
        "compatibility" => cubes::compatibility(cfg),
        "relation" => tensor::relation(cfg),
        "tensor" => tensor::tensor_laws(cfg),
        "cover" => tensor::cover(cfg),
        "prop-a2" => posets::prop_a2(cfg),
        "colimits" => posets::colimits(cfg),
        "homology" => posets::homology_check(cfg),
        "acyclicity" => posets::acyclicity(cfg),
        "counterexample" => cubes::counterexample(cfg),
        other => Err(Error::Parse(format!("unknown check `{other}`; expected one of {}", CHECKS.join(", ")))),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<CheckReport>> {
    CHECKS.iter().map(|c| run_check(c, cfg)).collect()
}
