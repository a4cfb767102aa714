use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The type-A root `e_i - e_j`, `i != j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RootRepr", into = "RootRepr")]
pub struct Root {
    i: usize,
    j: usize,
}

#[derive(Serialize, Deserialize)]
struct RootRepr {
    i: usize,
    j: usize,
}

impl TryFrom<RootRepr> for Root {
    type Error = Error;

    fn try_from(r: RootRepr) -> Result<Self> {
        Root::new(r.i, r.j)
    }
}

impl From<Root> for RootRepr {
    fn from(r: Root) -> Self {
        RootRepr { i: r.i, j: r.j }
    }
}

impl Root {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidRoot(i, j, usize::MAX));
        }
        Ok(Self { i, j })
    }

    pub(crate) const fn pair(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    /// `α_k = e_k - e_{k+1}`.
    pub fn simple(k: usize) -> Result<Self> {
        Self::new(k, k + 1)
    }

    /// `α_lo + α_{lo+1} + ... + α_hi`.
    pub fn span(lo: usize, hi: usize) -> Result<Self> {
        if lo == 0 || hi < lo {
            return Err(Error::InvalidRoot(lo, hi + 1, usize::MAX));
        }
        Self::new(lo, hi + 1)
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn is_negative(&self) -> bool {
        self.i > self.j
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }

    /// Index `k` when this is `α_k`.
    pub fn simple_index(&self) -> Option<usize> {
        self.is_simple().then_some(self.i)
    }

    pub fn negate(&self) -> Self {
        Self {
            i: self.j,
            j: self.i,
        }
    }

    /// Smallest rank `r` whose root system contains this root.
    pub fn min_rank(&self) -> usize {
        self.i.max(self.j) - 1
    }

    /// Simple roots `[lo, hi]` in the support, and the common sign.
    pub fn support(&self) -> (usize, usize, i64) {
        if self.is_positive() {
            (self.i, self.j - 1, 1)
        } else {
            (self.j, self.i - 1, -1)
        }
    }

    /// Coefficient of `α_k` in this root (0 or ±1).
    pub fn coefficient(&self, k: usize) -> i64 {
        let (lo, hi, sign) = self.support();
        if (lo..=hi).contains(&k) {
            sign
        } else {
            0
        }
    }

    /// Coordinates in the basis `α_1, ..., α_rank`.
    pub fn coefficients(&self, rank: usize) -> Vec<i64> {
        (1..=rank).map(|k| self.coefficient(k)).collect()
    }

    pub fn height(&self) -> i64 {
        let (lo, hi, sign) = self.support();
        sign * (hi + 1 - lo) as i64
    }
}

/// Sums of simple roots: `a1+a2+a3`, `-(a2+a3)`, `a4`, `-a4`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi, sign) = self.support();
        let body = (lo..=hi)
            .map(|k| format!("a{k}"))
            .collect::<Vec<_>>()
            .join("+");
        match (sign, lo == hi) {
            (1, _) => f.write_str(&body),
            (_, true) => write!(f, "-{body}"),
            (_, false) => write!(f, "-({body})"),
        }
    }
}

impl FromStr for Root {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (negative, body) = match t.strip_prefix('-') {
            Some(rest) => (
                true,
                rest.strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(rest),
            ),
            None => (false, t),
        };
        let ks = body
            .split('+')
            .map(|tok| {
                tok.strip_prefix('a')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::parse(s, format!("bad term {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let lo = ks[0];
        if ks.iter().enumerate().any(|(n, &k)| k != lo + n) {
            return Err(Error::parse(s, "terms must be consecutive simple roots"));
        }
        let root = Root::span(lo, lo + ks.len() - 1)?;
        Ok(if negative { root.negate() } else { root })
    }
}

/// A set of roots of a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct RootSet {
    rank: usize,
    roots: BTreeSet<Root>,
}

impl RootSet {
    pub fn new(rank: usize) -> Self {
        Self {
            rank,
            roots: BTreeSet::new(),
        }
    }

    pub fn from_roots(rank: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let mut set = Self::new(rank);
        for r in roots {
            set.insert(r)?;
        }
        Ok(set)
    }

    /// `{α_k : k in indices}`.
    pub fn simple(rank: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::from_roots(
            rank,
            indices
                .into_iter()
                .map(Root::simple)
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn all_simple(rank: usize) -> Self {
        Self::simple(rank, 1..=rank).expect("indices in range")
    }

    pub fn all_positive(rank: usize) -> Self {
        let n = rank + 1;
        Self {
            rank,
            roots: (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| Root::pair(i, j)))
                .collect(),
        }
    }

    pub fn insert(&mut self, root: Root) -> Result<bool> {
        if root.min_rank() > self.rank {
            return Err(Error::InvalidRoot(root.i, root.j, self.rank));
        }
        Ok(self.roots.insert(root))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.roots.contains(root)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Root> + '_ {
        self.roots.iter()
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.roots.is_subset(&other.roots)
    }

    /// Indices `k` of the members that are simple roots `α_k`, ascending.
    pub fn simple_indices(&self) -> Vec<usize> {
        let mut ks: Vec<usize> = self.roots.iter().filter_map(Root::simple_index).collect();
        ks.sort_unstable();
        ks
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let r = Root::new(2, 5).unwrap();
        assert!(r.is_positive() && !r.is_simple());
        assert_eq!(r.coefficients(5), vec![0, 1, 1, 1, 0]);
        assert_eq!(r.negate().coefficients(5), vec![0, -1, -1, -1, 0]);
        assert_eq!(r.height(), 3);
        assert!(Root::simple(3).unwrap().is_simple());
        assert!(Root::new(2, 2).is_err());
        assert!(Root::new(0, 2).is_err());
    }

    #[test]
    fn text_round_trip() {
        for (i, j) in [(1, 2), (2, 1), (2, 5), (5, 2), (7, 8)] {
            let r = Root::new(i, j).unwrap();
            assert_eq!(r.to_string().parse::<Root>().unwrap(), r);
        }
        assert_eq!(Root::new(5, 2).unwrap().to_string(), "-(a2+a3+a4)");
        assert_eq!(Root::new(2, 1).unwrap().to_string(), "-a1");
        assert!("a1+a3".parse::<Root>().is_err());
        assert!("b1".parse::<Root>().is_err());
    }

    #[test]
    fn root_sets() {
        assert_eq!(RootSet::all_positive(3).len(), 6);
        let mut s = RootSet::new(2);
        assert!(s.insert(Root::new(1, 4).unwrap()).is_err());
        assert!(s.insert(Root::new(1, 3).unwrap()).unwrap());
        assert!(!s.insert(Root::new(1, 3).unwrap()).unwrap());
        assert_eq!(
            RootSet::simple(4, [3, 1]).unwrap().simple_indices(),
            vec![1, 3]
        );
    }
}
