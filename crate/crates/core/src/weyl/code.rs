use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Permutation, Word};
use crate::error::{Error, Result};
use crate::text::{join, parse_int_list};

/// `(k_1, ..., k_r)` with `1 <= k_i <= i + 1`, naming the element
/// `π_{k_1} π_{k_2} ... π_{k_r}` where `π_{k_i} = s_i s_{i-1} ... s_{k_i}`
/// (the identity when `k_i = i + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CodeRepr", into = "CodeRepr")]
pub struct DescendingCode {
    entries: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    rank: usize,
    code: Vec<usize>,
}

impl TryFrom<CodeRepr> for DescendingCode {
    type Error = Error;

    fn try_from(r: CodeRepr) -> Result<Self> {
        if r.code.len() != r.rank {
            return Err(Error::RankMismatch(r.rank, r.code.len()));
        }
        DescendingCode::new(r.code)
    }
}

impl From<DescendingCode> for CodeRepr {
    fn from(c: DescendingCode) -> Self {
        CodeRepr {
            rank: c.rank(),
            code: c.entries,
        }
    }
}

pub(crate) fn check_entry(i: usize, k: usize) -> Result<()> {
    if k == 0 || k > i + 1 {
        return Err(Error::OutOfRange {
            name: "k_i",
            value: k,
            lo: 1,
            hi: i + 1,
        });
    }
    Ok(())
}

/// The cycle `π_k` at position `i` as a permutation of rank `rank`:
/// `k -> i + 1` and `x -> x - 1` for `k < x <= i + 1`.
pub fn cycle_permutation(rank: usize, i: usize, k: usize) -> Result<Permutation> {
    check_entry(i, k)?;
    if i > rank {
        return Err(Error::OutOfRange {
            name: "i",
            value: i,
            lo: 1,
            hi: rank,
        });
    }
    let mut images: Vec<usize> = (1..=rank + 1).collect();
    apply_cycle_right(&mut images, i, k);
    Ok(Permutation::from_images(images).expect("cycle is a bijection"))
}

/// Right-multiplies the one-line `images` by `π_k` at position `i`.
#[inline]
pub(crate) fn apply_cycle_right(images: &mut [usize], i: usize, k: usize) {
    // (w π)(x) = w(π(x)), so the window [k, i+1] of images shifts right.
    if k <= i {
        images[k - 1..=i].rotate_right(1);
    }
}

/// `s321` for `s_3 s_2 s_1`; letters of ten or more are joined with dots
/// (`s10.9.8`) so the notation stays unambiguous.
pub fn cycle_token(i: usize, k: usize) -> String {
    let letters: Vec<usize> = (k..=i).rev().collect();
    if i < 10 {
        format!("s{}", join(&letters, ""))
    } else {
        format!("s{}", join(&letters, "."))
    }
}

/// Inverse of [`cycle_token`]: returns `(i, k)`.
pub fn parse_cycle_token(token: &str) -> Result<(usize, usize)> {
    let body = token
        .strip_prefix('s')
        .filter(|b| !b.is_empty())
        .ok_or_else(|| Error::parse(token, "expected s<letters>"))?;
    let letters: Vec<usize> = if body.contains('.') {
        body.split('.')
            .map(|d| {
                d.parse::<usize>()
                    .map_err(|e| Error::parse(token, e.to_string()))
            })
            .collect::<Result<_>>()?
    } else {
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::parse(token, "bad letter"))
            })
            .collect::<Result<_>>()?
    };
    let i = letters[0];
    if i == 0 || letters.iter().enumerate().any(|(n, &l)| l + n != i) {
        return Err(Error::parse(token, "not a descending run"));
    }
    Ok((i, i + 1 - letters.len()))
}

impl DescendingCode {
    /// Builds a code from `(k_1, ..., k_r)`; the rank is the length.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (idx, &k) in entries.iter().enumerate() {
            check_entry(idx + 1, k)?;
        }
        Ok(Self { entries })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            entries: (2..=rank + 1).collect(),
        }
    }

    /// The code of the longest element, `(1, 1, ..., 1)`.
    pub fn longest(rank: usize) -> Self {
        Self {
            entries: vec![1; rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `k_i`, 1-based.
    pub fn entry(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// Length of the element: `Σ (i + 1 - k_i)`.
    pub fn length(&self) -> usize {
        self.entries
            .iter()
            .enumerate()
            .map(|(idx, &k)| idx + 2 - k)
            .sum()
    }

    /// `(i, k_i)` for the non-identity cycles, left to right.
    pub fn cycles(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(idx, &k)| (idx + 1, k))
            .filter(|&(i, k)| k <= i)
    }

    pub fn word(&self) -> Word {
        let letters = self.cycles().flat_map(|(i, k)| (k..=i).rev()).collect();
        Word::new(self.rank(), letters).expect("cycle letters lie in 1..=rank")
    }

    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.rank() + 1).collect();
        for (i, k) in self.cycles() {
            apply_cycle_right(&mut images, i, k);
        }
        Permutation::from_images(images).expect("product of cycles is a bijection")
    }

    pub fn decode(&self) -> (Word, Permutation) {
        (self.word(), self.permutation())
    }

    /// The unique code with `decode(code).1 == w`.
    ///
    /// Only `π_{k_r}` moves `r + 1`, and it sends `k_r` there, so
    /// `k_r = w^{-1}(r + 1)`; peel that cycle off and recurse into `S_r`.
    pub fn encode(w: &Permutation) -> Self {
        let rank = w.rank();
        let mut images = w.images().to_vec();
        let mut entries = vec![0; rank];
        for i in (1..=rank).rev() {
            let k = images
                .iter()
                .position(|&y| y == i + 1)
                .expect("i + 1 is an image")
                + 1;
            entries[i - 1] = k;
            // images ∘ π_k^{-1}: rotate the window [k, i+1] back.
            if k <= i {
                images[k - 1..=i].rotate_left(1);
            }
        }
        Self { entries }
    }

    /// All `(rank + 1)!` codes, in lexicographic order of `(k_1, ..., k_r)`.
    pub fn all(rank: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur = vec![1; rank];
        loop {
            out.push(Self {
                entries: cur.clone(),
            });
            let mut pos = rank;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < pos + 2 {
                    cur[pos] += 1;
                    break;
                }
                cur[pos] = 1;
            }
        }
    }

    /// Renders the cycles in compressed notation, `s1 s21`; `e` if empty.
    pub fn compressed(&self) -> String {
        let tokens: Vec<String> = self.cycles().map(|(i, k)| cycle_token(i, k)).collect();
        if tokens.is_empty() {
            "e".to_string()
        } else {
            tokens.join(" ")
        }
    }
}

impl fmt::Display for DescendingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.entries, ","))
    }
}

impl FromStr for DescendingCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> DescendingCode {
        s.parse().unwrap()
    }

    #[test]
    fn rank_two_table() {
        let table = [
            ("2,3", "e"),
            ("2,2", "s2"),
            ("2,1", "s2 s1"),
            ("1,3", "s1"),
            ("1,2", "s1 s2"),
            ("1,1", "s1 s2 s1"),
        ];
        for (c, w) in table {
            assert_eq!(code(c).word().to_string(), w, "code {c}");
        }
        assert_eq!(code("1,1").compressed(), "s1 s21");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!("3,1".parse::<DescendingCode>().is_err());
        assert!("1,4".parse::<DescendingCode>().is_err());
        assert!("0".parse::<DescendingCode>().is_err());
        let bad: std::result::Result<DescendingCode, _> =
            serde_json::from_str(r#"{"rank":3,"code":[1,1]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn cycle_matches_word() {
        for rank in 1..=6 {
            for i in 1..=rank {
                for k in 1..=i + 1 {
                    let w = Word::descending(rank, i, k).unwrap();
                    assert_eq!(cycle_permutation(rank, i, k).unwrap(), w.evaluate());
                }
            }
        }
    }

    #[test]
    fn encode_fixed_points() {
        assert_eq!(
            DescendingCode::encode(&Permutation::identity(4)),
            DescendingCode::identity(4)
        );
        let s1 = Permutation::simple_reflection(2, 1).unwrap();
        assert_eq!(DescendingCode::encode(&s1), code("1,3"));
        let w0 = Permutation::from_images(vec![5, 4, 3, 2, 1]).unwrap();
        assert_eq!(DescendingCode::encode(&w0), DescendingCode::longest(4));
    }

    #[test]
    fn tokens() {
        assert_eq!(cycle_token(3, 1), "s321");
        assert_eq!(cycle_token(5, 5), "s5");
        assert_eq!(cycle_token(11, 9), "s11.10.9");
        assert_eq!(parse_cycle_token("s321").unwrap(), (3, 1));
        assert_eq!(parse_cycle_token("s11.10.9").unwrap(), (11, 9));
        assert!(parse_cycle_token("s312").is_err());
        assert!(parse_cycle_token("s").is_err());
    }

    #[test]
    fn json_shape() {
        let c = code("2,3");
        let js = serde_json::to_value(&c).unwrap();
        assert_eq!(js, serde_json::json!({"rank": 2, "code": [2, 3]}));
        assert_eq!(DescendingCode::all(3).len(), 24);
    }
}
