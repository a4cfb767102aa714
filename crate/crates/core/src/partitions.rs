//! Integer partitions and compositions.
//!
//! A [`Composition`] keeps its parts in the order given; a
//! [`SortedPartition`] is weakly decreasing. The two never convert into each
//! other silently: use [`Composition::sorted`] or
//! [`SortedPartition::to_composition`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::text::{join, parse_int_list};

/// An ordered sequence of positive integers `(p_1, ..., p_m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Empty);
        }
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Self { parts })
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `p_i`, 1-based, zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `p_1 + ... + p_l`, with zero padding past the end.
    pub fn prefix_sum(&self, l: usize) -> usize {
        self.parts.iter().take(l).sum()
    }

    pub fn is_sorted(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The weakly decreasing rearrangement.
    pub fn sorted(&self) -> SortedPartition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        SortedPartition { parts }
    }

    /// Exact conversion, failing when the parts are not weakly decreasing.
    pub fn to_sorted(&self) -> Result<SortedPartition> {
        SortedPartition::new(self.parts.clone())
    }

    /// Partial sums `s_1, ..., s_{m-1}`: the block boundaries of the
    /// standard parabolic with these block sizes.
    pub fn boundaries(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts[..self.parts.len() - 1]
            .iter()
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Block label (0-based) of every coordinate `1..=n`, indexed by
    /// `coordinate - 1`.
    pub fn block_labels(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
            .collect()
    }

    pub fn transpose(&self) -> SortedPartition {
        transpose(self)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts, ","))
    }
}

/// A partition `t_1 >= t_2 >= ... >= t_b > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct SortedPartition {
    parts: Vec<usize>,
}

impl SortedPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let checked = Composition::new(parts)?;
        if !checked.is_sorted() {
            return Err(Error::NotSorted(checked.parts));
        }
        Ok(Self {
            parts: checked.parts,
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn prefix_sum(&self, l: usize) -> usize {
        self.parts.iter().take(l).sum()
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }

    pub fn transpose(&self) -> SortedPartition {
        transpose_parts(&self.parts)
    }
}

impl TryFrom<Vec<usize>> for SortedPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<SortedPartition> for Vec<usize> {
    fn from(p: SortedPartition) -> Self {
        p.parts
    }
}

impl FromStr for SortedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

impl fmt::Display for SortedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts, ","))
    }
}

fn transpose_parts(parts: &[usize]) -> SortedPartition {
    let width = parts.iter().copied().max().unwrap_or(0);
    let parts = (1..=width)
        .map(|i| parts.iter().filter(|&&p| p >= i).count())
        .collect();
    SortedPartition { parts }
}

/// Conjugate partition: `q_i = #{j : p_j >= i}`.
///
/// Defined for any composition; the result is always weakly decreasing.
pub fn transpose(lambda: &Composition) -> SortedPartition {
    transpose_parts(&lambda.parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dominance {
    Greater,
    Less,
    Equal,
    Incomparable,
}

impl Dominance {
    /// True for `Greater` and `Incomparable`: the left side is not `<=`
    /// the right side.
    pub fn not_below(self) -> bool {
        matches!(self, Dominance::Greater | Dominance::Incomparable)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Dominance::Greater => "greater",
            Dominance::Less => "less",
            Dominance::Equal => "equal",
            Dominance::Incomparable => "incomparable",
        }
    }

    pub fn to_partial_ordering(self) -> Option<Ordering> {
        match self {
            Dominance::Greater => Some(Ordering::Greater),
            Dominance::Less => Some(Ordering::Less),
            Dominance::Equal => Some(Ordering::Equal),
            Dominance::Incomparable => None,
        }
    }
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Dominance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "greater" => Ok(Dominance::Greater),
            "less" => Ok(Dominance::Less),
            "equal" => Ok(Dominance::Equal),
            "incomparable" => Ok(Dominance::Incomparable),
            _ => Err(Error::parse(s, "unknown dominance relation")),
        }
    }
}

/// Result of comparing `a` against `b` in the dominance order.
///
/// `a_exceeds_at` is the first prefix length `i` (1-based) with
/// `a_1 + ... + a_i > b_1 + ... + b_i`, and `b_exceeds_at` the first with the
/// reverse strict inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceVerdict {
    pub relation: Dominance,
    pub a_exceeds_at: Option<usize>,
    pub b_exceeds_at: Option<usize>,
}

fn first_strict_excess(a: &[usize], b: &[usize]) -> (Option<usize>, Option<usize>) {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    let (mut a_first, mut b_first) = (None, None);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa > sb && a_first.is_none() {
            a_first = Some(i + 1);
        }
        if sb > sa && b_first.is_none() {
            b_first = Some(i + 1);
        }
    }
    (a_first, b_first)
}

pub fn dominance_compare(a: &SortedPartition, b: &SortedPartition) -> Result<DominanceVerdict> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let (a_exceeds_at, b_exceeds_at) = first_strict_excess(&a.parts, &b.parts);
    let relation = match (a_exceeds_at, b_exceeds_at) {
        (None, None) => Dominance::Equal,
        (Some(_), None) => Dominance::Greater,
        (None, Some(_)) => Dominance::Less,
        (Some(_), Some(_)) => Dominance::Incomparable,
    };
    Ok(DominanceVerdict {
        relation,
        a_exceeds_at,
        b_exceeds_at,
    })
}

/// Smallest `l` with `p_1 + ... + p_l > t_1 + ... + t_l`, if any.
pub fn partial_sum_violation(lambda: &Composition, mu: &SortedPartition) -> Result<Option<usize>> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: mu.n(),
        });
    }
    Ok(first_strict_excess(&lambda.parts, &mu.parts).0)
}

/// Both sides of `p_1 + ... + p_l <= l*k + q_{k+1} + ... + q_n`, where
/// `(q_i)` is the transpose of `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma32Bound {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
    pub equality: bool,
}

pub fn lemma32_bound(lambda: &Composition, l: usize, k: usize) -> Result<Lemma32Bound> {
    let q = transpose(lambda);
    if l == 0 || l > lambda.len() {
        return Err(Error::OutOfRange {
            name: "l",
            value: l,
            lo: 1,
            hi: lambda.len(),
        });
    }
    // q is padded with zeros up to length n.
    if k == 0 || k > lambda.n() {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            lo: 1,
            hi: lambda.n(),
        });
    }
    let lhs = lambda.prefix_sum(l);
    let rhs = l * k + q.parts.iter().skip(k).sum::<usize>();
    Ok(Lemma32Bound {
        lhs,
        rhs,
        holds: lhs <= rhs,
        equality: lhs == rhs,
    })
}

/// All partitions of `n`, largest first part first (reverse lexicographic).
pub fn enumerate_partitions(n: usize) -> Result<Vec<SortedPartition>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            lo: 1,
            hi: usize::MAX,
        });
    }
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<SortedPartition>) {
        if rest == 0 {
            out.push(SortedPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// All `2^(n-1)` compositions of `n`, in the order of their cut masks.
pub fn enumerate_compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0,
            lo: 1,
            hi: usize::MAX,
        });
    }
    let cuts = n - 1;
    Ok((0u64..1 << cuts)
        .map(|mask| {
            let mut parts = Vec::new();
            let mut run = 1;
            for bit in 0..cuts {
                if mask >> bit & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition { parts }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    fn part(s: &str) -> SortedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn construction_rejects_bad_parts() {
        assert_eq!(Composition::new(vec![]), Err(Error::Empty));
        assert!(matches!(
            Composition::new(vec![2, 0, 1]),
            Err(Error::ZeroPart(_))
        ));
        assert!(matches!(
            SortedPartition::new(vec![1, 3]),
            Err(Error::NotSorted(_))
        ));
        assert!("".parse::<SortedPartition>().is_err());
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(transpose(&comp("3,2,2,1")), part("4,3,1"));
        assert_eq!(transpose(&comp("3,1,3")), part("3,2,2"));
        assert_eq!(transpose(&Composition::ones(6).unwrap()), part("6"));
    }

    #[test]
    fn sorting_is_explicit() {
        let c = comp("1,3,2");
        assert!(c.to_sorted().is_err());
        assert_eq!(c.sorted(), part("3,2,1"));
        assert_eq!(part("3,2,1").to_composition(), comp("3,2,1"));
    }

    #[test]
    fn dominance_examples() {
        let v = dominance_compare(&part("3,1"), &part("3,1")).unwrap();
        assert_eq!(v.relation, Dominance::Equal);
        let v = dominance_compare(&part("3,1"), &part("2,2")).unwrap();
        assert_eq!(v.relation, Dominance::Greater);
        assert_eq!(v.a_exceeds_at, Some(1));
        let v = dominance_compare(&part("4,2,2,1"), &part("3,3,3")).unwrap();
        assert_eq!(v.relation, Dominance::Incomparable);
        assert_eq!((v.a_exceeds_at, v.b_exceeds_at), (Some(1), Some(3)));
        assert!(dominance_compare(&part("3"), &part("2,1,1")).is_err());
    }

    #[test]
    fn violation_examples() {
        assert_eq!(
            partial_sum_violation(&comp("4,1,1"), &part("3,3")).unwrap(),
            Some(1)
        );
        assert_eq!(
            partial_sum_violation(&comp("3,3,3"), &part("4,2,2,1")).unwrap(),
            Some(3)
        );
        assert_eq!(
            partial_sum_violation(&comp("4,3,3"), &part("4,3,3")).unwrap(),
            None
        );
        assert!(partial_sum_violation(&comp("4,3"), &part("4,3,3")).is_err());
    }

    #[test]
    fn lemma32_examples() {
        let b = lemma32_bound(&comp("3,2,2,1"), 2, 2).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds, b.equality), (5, 5, true, true));
        let b = lemma32_bound(&comp("3,1,3"), 1, 3).unwrap();
        assert_eq!((b.lhs, b.rhs, b.holds), (3, 3, true));
        let b = lemma32_bound(&comp("7"), 1, 1).unwrap();
        assert_eq!((b.lhs, b.rhs), (7, 7));
        assert!(lemma32_bound(&comp("3,1"), 3, 1).is_err());
        assert!(lemma32_bound(&comp("3,1"), 1, 5).is_err());
        assert!(lemma32_bound(&comp("3,1"), 1, 4).unwrap().holds);
        assert!(lemma32_bound(&comp("3,1"), 0, 1).is_err());
    }

    #[test]
    fn small_enumerations() {
        let ps = enumerate_partitions(3).unwrap();
        assert_eq!(ps, vec![part("3"), part("2,1"), part("1,1,1")]);
        assert_eq!(enumerate_compositions(3).unwrap().len(), 4);
        assert!(enumerate_partitions(0).is_err());
        assert!(enumerate_compositions(0).is_err());
    }

    #[test]
    fn block_bookkeeping() {
        let c = comp("4,4,2");
        assert_eq!(c.boundaries(), vec![4, 8]);
        assert_eq!(c.block_labels(), vec![0, 0, 0, 0, 1, 1, 1, 1, 2, 2]);
        assert_eq!(comp("5").boundaries(), Vec::<usize>::new());
    }
}
