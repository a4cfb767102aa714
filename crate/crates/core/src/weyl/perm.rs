use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::join;

/// An element of `S_{r+1}` in one-line notation: `images[x-1] = w(x)`.
///
/// Coordinates past the end are fixed points, which is how `S_r` sits inside
/// `S_{r+1}`. Products follow function composition: `(a * b)(x) = a(b(x))`,
/// so in a word the rightmost reflection acts first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermRepr", into = "PermRepr")]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    images: Vec<usize>,
}

impl TryFrom<PermRepr> for Permutation {
    type Error = Error;

    fn try_from(r: PermRepr) -> Result<Self> {
        Permutation::from_images(r.images)
    }
}

impl From<Permutation> for PermRepr {
    fn from(p: Permutation) -> Self {
        PermRepr { images: p.images }
    }
}

impl Permutation {
    pub fn identity(rank: usize) -> Self {
        Self {
            images: (1..=rank + 1).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotPermutation(images));
            }
            seen[x] = true;
        }
        if n == 0 {
            return Err(Error::NotPermutation(images));
        }
        Ok(Self { images })
    }

    /// `s_i`, the transposition of coordinates `i` and `i+1`.
    pub fn simple_reflection(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::OutOfRange {
                name: "reflection",
                value: i,
                lo: 1,
                hi: rank,
            });
        }
        let mut p = Self::identity(rank);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.images.len() - 1
    }

    /// Number of points moved around, `r + 1`.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(x)`; coordinates outside `1..=r+1` are fixed.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        match x.checked_sub(1).and_then(|i| self.images.get(i)) {
            Some(&y) => y,
            None => x,
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y - 1] = x + 1;
        }
        Self { images }
    }

    /// The same element viewed in `S_{rank+1}`, padded with fixed points.
    pub fn extend(&self, rank: usize) -> Self {
        let mut images = self.images.clone();
        images.extend(images.len() + 1..=rank + 1);
        Self { images }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.images.len().max(other.images.len());
        Self {
            images: (1..=n).map(|x| self.apply(other.apply(x))).collect(),
        }
    }

    /// Inversion number `#{(i, j) : i < j, w(i) > w(j)}`, the Coxeter length.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x + 1 == y)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl Mul for Permutation {
    type Output = Permutation;

    fn mul(self, rhs: Permutation) -> Permutation {
        self.compose(&rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.images, " "))
    }
}

/// One-line notation, whitespace separated (`3 1 2`). Commas are accepted
/// as separators too.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                if !t.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::parse(s, format!("bad image {t:?}")));
                }
                t.parse::<usize>()
                    .map_err(|e| Error::parse(s, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }
}
