use std::fmt;

use serde::{Deserialize, Serialize};

use super::Permutation;
use crate::error::{Error, Result};

/// A word `s_{i_1} s_{i_2} ... s_{i_N}` in the simple reflections of rank `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct Word {
    rank: usize,
    letters: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
    letters: Vec<usize>,
}

impl TryFrom<WordRepr> for Word {
    type Error = Error;

    fn try_from(r: WordRepr) -> Result<Self> {
        let rank = r
            .rank
            .unwrap_or_else(|| r.letters.iter().copied().max().unwrap_or(0));
        Word::new(rank, r.letters)
    }
}

impl From<Word> for WordRepr {
    fn from(w: Word) -> Self {
        WordRepr {
            rank: Some(w.rank),
            letters: w.letters,
        }
    }
}

impl Word {
    pub fn new(rank: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::OutOfRange {
                name: "letter",
                value: bad,
                lo: 1,
                hi: rank,
            });
        }
        Ok(Self { rank, letters })
    }

    pub fn empty(rank: usize) -> Self {
        Self {
            rank,
            letters: Vec::new(),
        }
    }

    /// `s_from s_{from-1} ... s_to` (empty when `from < to`).
    pub fn descending(rank: usize, from: usize, to: usize) -> Result<Self> {
        Self::new(rank, (to..=from).rev().collect())
    }

    /// `s_from s_{from+1} ... s_to` (empty when `from > to`).
    pub fn ascending(rank: usize, from: usize, to: usize) -> Result<Self> {
        Self::new(rank, (from..=to).collect())
    }

    /// Parses `s3 s2 s1`, `3 2 1` or `3,2,1`; `e` is the empty word.
    pub fn parse(rank: usize, input: &str) -> Result<Self> {
        let trimmed = input.trim();
        if trimmed == "e" {
            return Ok(Self::empty(rank));
        }
        let letters = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let digits = t.strip_prefix('s').unwrap_or(t);
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::parse(input, format!("bad letter {t:?}")));
                }
                digits
                    .parse::<usize>()
                    .map_err(|e| Error::parse(input, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(rank, letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            rank: self.rank.max(other.rank),
            letters,
        }
    }

    /// The product as a permutation; the rightmost letter acts first.
    pub fn evaluate(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.rank + 1).collect();
        // Right-multiplying by s_i swaps the images at positions i and i+1.
        for &i in &self.letters {
            images.swap(i - 1, i);
        }
        Permutation::from_images(images).expect("swaps keep a bijection")
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        f.write_str(&parts.join(" "))
    }
}
