//! Up/down step words shared by diagram boundaries, matchings, oscillating
//! tableaux and lattice paths.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }

    pub fn delta(self) -> i32 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

/// A word over `{U, D}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StepWord(pub Vec<Step>);

impl StepWord {
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reflection in a vertical line: reverse the word and swap U/D.
    pub fn mirrored(&self) -> StepWord {
        StepWord(self.0.iter().rev().map(|s| s.flip()).collect())
    }

    /// Running heights `h_0 = start, h_1, …, h_m`.
    pub fn heights(&self, start: i32) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        let mut h = start;
        out.push(h);
        for s in &self.0 {
            h += s.delta();
            out.push(h);
        }
        out
    }

    pub fn from_heights(heights: &[i32]) -> Result<StepWord> {
        heights
            .windows(2)
            .map(|w| match w[1] - w[0] {
                1 => Ok(Step::U),
                -1 => Ok(Step::D),
                d => Err(Error::InvalidPath(format!("height jump of {d}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StepWord)
    }

    /// True for a nonnegative path from height 0 back to height 0.
    pub fn is_dyck(&self) -> bool {
        let h = self.heights(0);
        h.iter().all(|&x| x >= 0) && h.last() == Some(&0)
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for StepWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<StepWord> {
        s.trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::U),
                'D' | 'd' => Ok(Step::D),
                other => Err(Error::InvalidPath(format!("unexpected step letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StepWord)
    }
}

impl serde::Serialize for StepWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for StepWord {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
