use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter of the super alphabet `1 < 2 < … < n < 1' < 2' < … < m'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperEntry {
    pub value: usize,
    pub primed: bool,
}

impl SuperEntry {
    pub fn unprimed(value: usize) -> Self {
        SuperEntry { value, primed: false }
    }

    pub fn primed(value: usize) -> Self {
        SuperEntry { value, primed: true }
    }

    /// Zero-based index in the alphabet `[n] ∪ [m]`.
    pub fn index(&self, n: usize) -> usize {
        if self.primed {
            n + self.value - 1
        } else {
            self.value - 1
        }
    }

    pub fn from_index(index: usize, n: usize) -> Self {
        if index < n {
            SuperEntry::unprimed(index + 1)
        } else {
            SuperEntry::primed(index - n + 1)
        }
    }

    pub fn fits(&self, n: usize, m: usize) -> bool {
        self.value >= 1 && self.value <= if self.primed { m } else { n }
    }
}

impl Ord for SuperEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.primed, self.value).cmp(&(other.primed, other.value))
    }
}

impl PartialOrd for SuperEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SuperEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.primed { "'" } else { "" })
    }
}

impl FromStr for SuperEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<usize>() {
            Ok(value) if value >= 1 => Ok(SuperEntry { value, primed }),
            _ => Err(Error::Parse { input: s.into(), reason: "expected a positive integer, optionally primed".into() }),
        }
    }
}

impl Serialize for SuperEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SuperEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unprimed_letters_come_first() {
        let mut letters: Vec<SuperEntry> = ["2'", "3", "1'", "1"].iter().map(|s| s.parse().unwrap()).collect();
        letters.sort();
        let shown: Vec<String> = letters.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["1", "3", "1'", "2'"]);
    }

    #[test]
    fn index_round_trip() {
        for idx in 0..5 {
            assert_eq!(SuperEntry::from_index(idx, 3).index(3), idx);
        }
        assert_eq!(SuperEntry::from_index(3, 3), SuperEntry::primed(1));
        assert!("0".parse::<SuperEntry>().is_err());
        assert!("x'".parse::<SuperEntry>().is_err());
    }
}
