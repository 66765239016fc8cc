//! Size caps shared by the library entry points and the CLI.

use crate::error::{Error, Result};
use crate::face::DEFAULT_AMBIENT_CAP;
use crate::modules::DEFAULT_TENSOR_BUDGET;
use crate::perm::DEFAULT_ELEMENT_CAP;

/// Environment variable overriding the ambient cap `|X|²|G|`.
pub const CAP_ENV: &str = "COSET_INDICATOR_CAP";

/// Ambient cap used by the verification suites, which reach `|X|²|G| = 1.728·10⁶`
/// at `n = 5`, `α = (1,1,1,1,1)`.
pub const SUITE_AMBIENT_CAP: usize = 4_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group enumerated.
    pub elements: usize,
    /// Largest face algebra dimension `|X|²|G|`.
    pub ambient: usize,
    /// Largest `dim(M)^r` for the trace-twist computation.
    pub tensor: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            elements: DEFAULT_ELEMENT_CAP,
            ambient: DEFAULT_AMBIENT_CAP,
            tensor: DEFAULT_TENSOR_BUDGET,
        }
    }
}

impl Caps {
    pub fn for_suites() -> Self {
        Caps {
            ambient: SUITE_AMBIENT_CAP,
            ..Caps::default()
        }
    }

    /// Applies [`CAP_ENV`] when it is set.
    pub fn with_env(self) -> Result<Self> {
        match std::env::var(CAP_ENV) {
            Ok(v) => Ok(Caps {
                ambient: parse_cap(&v)?,
                ..self
            }),
            Err(_) => Ok(self),
        }
    }
}

/// Accepts plain integers and scientific forms such as `2e6`.
pub fn parse_cap(text: &str) -> Result<usize> {
    let t = text.trim().replace('_', "");
    if let Ok(v) = t.parse::<usize>() {
        return Ok(v);
    }
    if let Some((m, e)) = t.split_once(['e', 'E']) {
        if let (Ok(m), Ok(e)) = (m.parse::<usize>(), e.parse::<u32>()) {
            return 10usize
                .checked_pow(e)
                .and_then(|p| p.checked_mul(m))
                .ok_or(Error::Overflow("cap"));
        }
    }
    Err(Error::Parse(format!("cap `{}` is not a nonnegative integer", text)))
}
