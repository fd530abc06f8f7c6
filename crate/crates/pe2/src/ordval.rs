//! The length lattice 0 < 1/2 < 1- < 1 < 3/2 < 2- < 2 < 5/2 < ..
//!
//! Encoded as a single rank so the total order is the integer order:
//! 0 -> 0, n + 1/2 -> 3n + 1, n- -> 3n - 1, n -> 3n.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrdValue(u32);

impl OrdValue {
    pub const ZERO: OrdValue = OrdValue(0);

    /// The integer value n >= 0.
    pub fn int(n: u32) -> OrdValue {
        OrdValue(3 * n)
    }

    /// n + 1/2 for n >= 0.
    pub fn half_above(n: u32) -> OrdValue {
        OrdValue(3 * n + 1)
    }

    /// n- for n >= 1 (just below n, just above n - 1/2).
    pub fn minus(n: u32) -> OrdValue {
        assert!(n >= 1);
        OrdValue(3 * n - 1)
    }

    pub fn rank(self) -> u32 {
        self.0
    }

    pub fn from_rank(r: u32) -> OrdValue {
        OrdValue(r)
    }

    pub fn successor(self) -> OrdValue {
        OrdValue(self.0 + 1)
    }

    pub fn predecessor(self) -> Option<OrdValue> {
        self.0.checked_sub(1).map(OrdValue)
    }
}

impl fmt::Display for OrdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 % 3 {
            0 => write!(f, "{}", self.0 / 3),
            1 => write!(f, "{}/2", 2 * (self.0 / 3) + 1),
            _ => write!(f, "{}-", self.0 / 3 + 1),
        }
    }
}

impl FromStr for OrdValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(n) = s.strip_suffix('-') {
            let n: u32 = n.parse().map_err(|_| format!("bad ord value `{s}`"))?;
            if n == 0 {
                return Err("0- is not on the chain".into());
            }
            Ok(OrdValue::minus(n))
        } else if let Some(num) = s.strip_suffix("/2") {
            let num: u32 = num.parse().map_err(|_| format!("bad ord value `{s}`"))?;
            if num % 2 == 0 {
                return Err(format!("`{s}` is not in lowest terms"));
            }
            Ok(OrdValue::half_above(num / 2))
        } else {
            let n: u32 = s.parse().map_err(|_| format!("bad ord value `{s}`"))?;
            Ok(OrdValue::int(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_order() {
        let chain = [
            OrdValue::int(0),
            OrdValue::half_above(0),
            OrdValue::minus(1),
            OrdValue::int(1),
            OrdValue::half_above(1),
            OrdValue::minus(2),
            OrdValue::int(2),
            OrdValue::half_above(2),
        ];
        for w in chain.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(chain.last().unwrap().to_string(), "5/2");
    }

    #[test]
    fn display_round_trips() {
        for r in 0..40 {
            let v = OrdValue::from_rank(r);
            let s = v.to_string();
            assert_eq!(s.parse::<OrdValue>().unwrap(), v, "{s}");
        }
    }
}
