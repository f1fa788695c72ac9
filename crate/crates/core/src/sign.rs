use std::fmt;

use serde::{Deserialize, Serialize};

/// A choice in `{+, -}`: the resolution choice at a seam, or the parity of a
/// stack or intersection curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Parity of a stack on the disk boundary or of a curve on a torus.
pub type Parity = Sign;

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `-1`.
    pub fn step(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Parses a word such as `"++-+"`. Returns the offending character on failure.
pub fn parse_word(s: &str) -> Result<Vec<Sign>, char> {
    s.chars().map(|c| Sign::from_char(c).ok_or(c)).collect()
}

pub fn format_word(word: &[Sign]) -> String {
    word.iter().map(|s| s.as_char()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_round_trip() {
        let w = parse_word("++-+").unwrap();
        assert_eq!(w, vec![Sign::Plus, Sign::Plus, Sign::Minus, Sign::Plus]);
        assert_eq!(format_word(&w), "++-+");
        assert_eq!(parse_word("+x"), Err('x'));
    }

    #[test]
    fn serde_uses_symbols() {
        assert_eq!(serde_json::to_string(&Sign::Minus).unwrap(), "\"-\"");
        let s: Sign = serde_json::from_str("\"+\"").unwrap();
        assert_eq!(s, Sign::Plus);
    }
}
