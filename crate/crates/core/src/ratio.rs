use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Exact nonnegative fraction `num/den`, used for thresholds like "at least
/// an ε-fraction of U" so comparisons never go through floating point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::param("fraction with zero denominator"));
        }
        Ok(Ratio { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `count >= self * total`.
    #[inline]
    pub fn reached_by(self, count: usize, total: usize) -> bool {
        count as u128 * self.den as u128 >= self.num as u128 * total as u128
    }

    /// Strictly between 0 and 1.
    pub fn is_proper(self) -> bool {
        self.num > 0 && self.num < self.den
    }

    /// At most 1/2.
    pub fn at_most_half(self) -> bool {
        2 * self.num as u128 <= self.den as u128
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::param(format!("expected a fraction p/q, got {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                Ratio::new(p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?)
            }
            None => Ratio::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_compare() {
        let r: Ratio = "1/40".parse().unwrap();
        assert!(r.reached_by(1, 40));
        assert!(!r.reached_by(1, 41));
        let half: Ratio = "1/2".parse().unwrap();
        assert!(!half.reached_by(2, 5));
        assert!(half.at_most_half() && half.is_proper());
        assert!("1/0".parse::<Ratio>().is_err());
        assert!("x".parse::<Ratio>().is_err());
        assert_eq!("3".parse::<Ratio>().unwrap().to_string(), "3/1");
    }
}
