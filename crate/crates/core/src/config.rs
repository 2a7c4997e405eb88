// SPDX-License-Identifier: Apache-2.0

//! Run configuration: a TOML file, overridden field by field from the command line.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{check_eps, RegionSpec};
use crate::groups::is_prime;
use crate::report::Format;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Exact rational `"p/q"`.
    pub eps: String,
    pub k_min: u32,
    pub k_max: u32,
    pub primes: Vec<u32>,
    pub seed: u64,
    /// Random points for the disjointness check.
    pub numeric_samples: usize,
    /// Random points per region-invariance check.
    pub invariance_samples: usize,
    /// Random boundary points per gluing check.
    pub boundary_samples: usize,
    /// Adds `timing_ns` to every check; breaks byte-identical output.
    pub record_timing: bool,
    #[serde(skip_serializing)]
    pub format: Format,
    #[serde(skip_serializing)]
    pub out: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            eps: "49/625".into(),
            k_min: 3,
            k_max: 5,
            primes: vec![3, 5, 7, 11, 13],
            seed: 20_240_917,
            numeric_samples: 10_000,
            invariance_samples: 1_000,
            boundary_samples: 100,
            record_timing: false,
            format: Format::Json,
            out: None,
        }
    }
}

/// Largest `k` for which `P(k)` is enumerated.
pub const MAX_K: u32 = 6;

impl Config {
    pub fn from_toml_str(s: &str) -> Result<Self> {
        toml::from_str(s).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let s = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&s)
    }

    pub fn eps_rational(&self) -> Result<BigRational> {
        let q = BigRational::from_str(self.eps.trim()).map_err(|_| {
            Error::Config(format!("ε must be a rational \"p/q\", got {:?}", self.eps))
        })?;
        check_eps(&q).map_err(|e| Error::Config(e.to_string()))?;
        Ok(q)
    }

    pub fn spec(&self) -> Result<RegionSpec> {
        RegionSpec::new(self.eps_rational()?)
    }

    pub fn ks(&self) -> std::ops::RangeInclusive<u32> {
        self.k_min..=self.k_max
    }

    pub fn validate(&self) -> Result<()> {
        self.eps_rational()?;
        if self.k_min < 3 || self.k_min > self.k_max || self.k_max > MAX_K {
            return Err(Error::Config(format!(
                "k range {}..{} must lie in 3..{MAX_K} and be non-empty",
                self.k_min, self.k_max
            )));
        }
        if let Some(p) = self.primes.iter().find(|&&p| !is_prime(p) || p == 2) {
            return Err(Error::Config(format!("{p} is not an odd prime")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        Config::default().validate().unwrap();
    }

    #[test]
    fn toml_overrides_some_fields() {
        let c = Config::from_toml_str("eps = \"1/16\"\nprimes = [5, 7]\n").unwrap();
        c.validate().unwrap();
        assert_eq!(c.primes, vec![5, 7]);
        assert_eq!(c.k_max, 5);
    }

    #[test]
    fn rejects_bad_values() {
        for bad in [
            "eps = \"1/4\"",
            "eps = \"0.1\"",
            "eps = \"-1/20\"",
            "primes = [2]",
            "primes = [9]",
            "k_min = 2",
            "k_min = 5\nk_max = 4",
            "unknown = 1",
        ] {
            let r = Config::from_toml_str(bad).and_then(|c| c.validate());
            assert!(matches!(r, Err(Error::Config(_))), "{bad}: {r:?}");
        }
    }
}
