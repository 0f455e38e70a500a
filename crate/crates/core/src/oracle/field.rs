use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// Coefficient field for homology: `GF(p)` for a prime `p < 2^31`, or the rationals when `p = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic != 0 && (characteristic >= 1 << 31 || !is_prime(characteristic)) {
            return Err(Error::InvalidParameter(format!(
                "field characteristic {characteristic} must be 0 or a prime below 2^31"
            )));
        }
        Ok(Self { characteristic })
    }

    pub fn rationals() -> Self {
        Self { characteristic: 0 }
    }

    pub fn gf2() -> Self {
        Self { characteristic: 2 }
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self {
            characteristic: DEFAULT_CHARACTERISTIC,
        }
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Self::new(p)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.characteristic
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(Self::rationals());
        }
        let p: u32 = t
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("cannot parse field characteristic {s:?}")))?;
        Self::new(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "GF({p})"),
        }
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
