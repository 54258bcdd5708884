//! Runtime settings shared by the CLI and the library entry points.

use std::path::PathBuf;

/// Output style for CLI subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Knobs that bound the expensive operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    /// Largest lattice the enumerator will touch; requests above it are
    /// refused rather than attempted.
    pub max_enumeration_size: usize,
    /// Worker threads for the enumeration search; results are identical for
    /// any count.
    pub worker_count: usize,
    pub output_format: OutputFormat,
    /// Directory of algebra JSON files that replaces the built-in corpus
    /// where a command consults it.
    pub corpus_dir: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_enumeration_size: 5,
            worker_count: 1,
            output_format: OutputFormat::Text,
            corpus_dir: None,
        }
    }
}

/// Rejected configuration values.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("max enumeration size {0} is outside 1..=8")]
    MaxSizeOutOfRange(usize),
    #[error("worker count must be at least 1")]
    NoWorkers,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(1..=8).contains(&self.max_enumeration_size) {
            return Err(ConfigError::MaxSizeOutOfRange(self.max_enumeration_size));
        }
        if self.worker_count == 0 {
            return Err(ConfigError::NoWorkers);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        let c = RunConfig::default();
        assert_eq!(c.validate(), Ok(()));
        assert_eq!(c.max_enumeration_size, 5);
        assert_eq!(c.worker_count, 1);
    }

    #[test]
    fn bounds_are_enforced() {
        let mut c = RunConfig::default();
        c.max_enumeration_size = 0;
        assert_eq!(c.validate(), Err(ConfigError::MaxSizeOutOfRange(0)));
        c.max_enumeration_size = 9;
        assert_eq!(c.validate(), Err(ConfigError::MaxSizeOutOfRange(9)));
        c.max_enumeration_size = 8;
        c.worker_count = 0;
        assert_eq!(c.validate(), Err(ConfigError::NoWorkers));
    }
}
