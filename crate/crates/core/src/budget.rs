use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource limits shared by the exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest poset or enumeration result.
    pub max_elements: usize,
    /// Largest simplicial complex (all dimensions together).
    pub max_simplices: usize,
    /// Largest constraint list during Fourier–Motzkin elimination.
    pub max_constraints: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 2_000_000,
            max_simplices: 2_000_000,
            max_constraints: 20_000,
        }
    }
}

impl Budget {
    pub fn check_elements(&self, count: usize) -> Result<()> {
        if count > self.max_elements {
            return Err(Error::Budget { what: "element count", limit: self.max_elements });
        }
        Ok(())
    }

    pub fn check_simplices(&self, count: usize) -> Result<()> {
        if count > self.max_simplices {
            return Err(Error::Budget { what: "simplex count", limit: self.max_simplices });
        }
        Ok(())
    }

    pub fn check_constraints(&self, count: usize) -> Result<()> {
        if count > self.max_constraints {
            return Err(Error::Budget { what: "constraint count", limit: self.max_constraints });
        }
        Ok(())
    }
}
