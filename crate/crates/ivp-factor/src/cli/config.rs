//! Flat key-value configuration: `key = value` lines, `#` comments.
//! Flags override file values; the optional prime-search cache directory may
//! also come from the IVP_FACTOR_CACHE environment variable.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::families::SearchBounds;
use crate::irred::CertifyOptions;
use crate::powfact::EnumerateOptions;

#[derive(Clone, Debug, Default)]
pub struct Config {
    pub slot_cap: Option<u32>,
    pub k_max: Option<u32>,
    pub partition_cap: Option<u128>,
    pub eisenstein_shift_range: Option<i64>,
    pub modp_prime_limit: Option<u64>,
    pub exhaustive_budget: Option<u128>,
    pub prime_candidates: Option<usize>,
    pub root_candidates: Option<usize>,
    pub max_degree: Option<u64>,
    pub threads: Option<usize>,
    pub cache_dir: Option<PathBuf>,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)?;
        let mut config = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::InvalidParams {
                    what: format!("config line {}: expected key = value", lineno + 1),
                });
            };
            let key = key.trim();
            let value = value.trim();
            let bad = |what: &str| Error::InvalidParams {
                what: format!("config line {}: {}", lineno + 1, what),
            };
            match key {
                "slot_cap" => config.slot_cap = Some(value.parse().map_err(|_| bad("bad u32"))?),
                "k_max" => config.k_max = Some(value.parse().map_err(|_| bad("bad u32"))?),
                "partition_cap" => {
                    config.partition_cap = Some(value.parse().map_err(|_| bad("bad u128"))?)
                }
                "eisenstein_shift_range" => {
                    config.eisenstein_shift_range = Some(value.parse().map_err(|_| bad("bad i64"))?)
                }
                "modp_prime_limit" => {
                    config.modp_prime_limit = Some(value.parse().map_err(|_| bad("bad u64"))?)
                }
                "exhaustive_budget" => {
                    config.exhaustive_budget = Some(value.parse().map_err(|_| bad("bad u128"))?)
                }
                "prime_candidates" => {
                    config.prime_candidates = Some(value.parse().map_err(|_| bad("bad usize"))?)
                }
                "root_candidates" => {
                    config.root_candidates = Some(value.parse().map_err(|_| bad("bad usize"))?)
                }
                "max_degree" => {
                    config.max_degree = Some(value.parse().map_err(|_| bad("bad u64"))?)
                }
                "threads" => config.threads = Some(value.parse().map_err(|_| bad("bad usize"))?),
                "cache_dir" => config.cache_dir = Some(PathBuf::from(value)),
                other => {
                    return Err(Error::InvalidParams {
                        what: format!("config line {}: unknown key '{}'", lineno + 1, other),
                    })
                }
            }
        }
        Ok(config)
    }

    pub fn certify_options(&self) -> CertifyOptions {
        let mut o = CertifyOptions::default();
        if let Some(v) = self.eisenstein_shift_range {
            o.eisenstein_shift_range = v;
        }
        if let Some(v) = self.modp_prime_limit {
            o.modp_prime_limit = v;
        }
        if let Some(v) = self.exhaustive_budget {
            o.exhaustive_budget = v;
        }
        o
    }

    pub fn enumerate_options(&self) -> EnumerateOptions {
        let mut o = EnumerateOptions::default();
        if let Some(v) = self.slot_cap {
            o.slot_cap = v;
        }
        if let Some(v) = self.k_max {
            o.k_max = v;
        }
        if let Some(v) = self.partition_cap {
            o.partition_cap = v;
        }
        o
    }

    pub fn search_bounds(&self) -> SearchBounds {
        let mut b = SearchBounds {
            certify: self.certify_options(),
            enumerate: self.enumerate_options(),
            ..SearchBounds::default()
        };
        if let Some(v) = self.prime_candidates {
            b.prime_candidates = v;
        }
        if let Some(v) = self.root_candidates {
            b.root_candidates = v;
        }
        if let Some(v) = self.max_degree {
            b.max_degree = v;
        }
        b.cache_dir = self
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os("IVP_FACTOR_CACHE").map(PathBuf::from));
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_key_value_lines() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "# comment").unwrap();
        writeln!(file, "slot_cap = 12").unwrap();
        writeln!(file, "k_max = 32").unwrap();
        writeln!(file, "prime_candidates = 1000").unwrap();
        let config = Config::load(file.path()).unwrap();
        assert_eq!(config.slot_cap, Some(12));
        assert_eq!(config.enumerate_options().slot_cap, 12);
        assert_eq!(config.enumerate_options().k_max, 32);
        assert_eq!(config.search_bounds().prime_candidates, 1000);
    }

    #[test]
    fn rejects_unknown_keys() {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        writeln!(file, "bogus = 1").unwrap();
        assert!(Config::load(file.path()).is_err());
    }
}
