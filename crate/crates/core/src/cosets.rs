//! Minimal representatives of `W(P)\W(G)` as column-grouped descending codes.
//!
//! For a parabolic with block sizes `(r_1, ..., r_a)` the positions
//! `k_0, k_1, ..., k_r` are filled top to bottom into columns of heights
//! `r_1, ..., r_a`. The first column is dropped (it always holds the
//! identity entries `k_i = i + 1`), and every remaining column must be
//! strictly increasing. Column `j` covers positions
//! `r_1 + ... + r_{j-1}` through `r_1 + ... + r_j - 1`, and its product of
//! cycles is written `Π_j`; the representative is `Π_2 Π_3 ... Π_a`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partitions::{Composition, SortedPartition};
use crate::text::join;
use crate::weyl::{
    act_on_root, apply_cycle_right, check_entry, cycle_token, parse_cycle_token, DescendingCode,
    Permutation, Root, RootSet, Word,
};

/// A tableau in `D_{(r_1 ... r_a)}`: entries for columns `2..=a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CosetRepr", into = "CosetRepr")]
pub struct CosetCode {
    parabolic: Composition,
    columns: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct CosetRepr {
    parabolic: Composition,
    columns: Vec<Vec<usize>>,
}

impl TryFrom<CosetRepr> for CosetCode {
    type Error = Error;

    fn try_from(r: CosetRepr) -> Result<Self> {
        CosetCode::new(r.parabolic, r.columns)
    }
}

impl From<CosetCode> for CosetRepr {
    fn from(c: CosetCode) -> Self {
        CosetRepr {
            parabolic: c.parabolic,
            columns: c.columns,
        }
    }
}

/// First tableau position of every column `1..=a`, plus `n` as a sentinel.
fn column_starts(parabolic: &Composition) -> Vec<usize> {
    let mut starts = vec![0];
    let mut acc = 0;
    for &p in parabolic.parts() {
        acc += p;
        starts.push(acc);
    }
    starts
}

/// Tableau positions `i` held by column `j` (1-based, `j >= 1`).
pub fn column_positions(parabolic: &Composition, j: usize) -> std::ops::Range<usize> {
    let starts = column_starts(parabolic);
    starts[j - 1]..starts[j]
}

impl CosetCode {
    pub fn new(parabolic: Composition, columns: Vec<Vec<usize>>) -> Result<Self> {
        let a = parabolic.len();
        if columns.len() != a - 1 {
            return Err(Error::ColumnCount {
                expected: a - 1,
                found: columns.len(),
            });
        }
        for (idx, col) in columns.iter().enumerate() {
            let j = idx + 2;
            let positions = column_positions(&parabolic, j);
            if col.len() != positions.len() {
                return Err(Error::ColumnLength {
                    column: j,
                    expected: positions.len(),
                    found: col.len(),
                });
            }
            for (i, &k) in positions.zip(col) {
                check_entry(i, k)?;
            }
            if col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotIncreasing {
                    column: j,
                    entries: col.clone(),
                });
            }
        }
        Ok(Self { parabolic, columns })
    }

    /// The code of the identity coset: every entry `k_i = i + 1`.
    pub fn identity(parabolic: &Composition) -> Self {
        let columns = (2..=parabolic.len())
            .map(|j| column_positions(parabolic, j).map(|i| i + 1).collect())
            .collect();
        Self {
            parabolic: parabolic.clone(),
            columns,
        }
    }

    pub fn parabolic(&self) -> &Composition {
        &self.parabolic
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    /// Column `j` (2-based index as in the tableau).
    pub fn column(&self, j: usize) -> &[usize] {
        &self.columns[j - 2]
    }

    /// Number of columns `a` of the tableau, including the dropped first one.
    pub fn width(&self) -> usize {
        self.parabolic.len()
    }

    pub fn rank(&self) -> usize {
        self.parabolic.n() - 1
    }

    /// `(i, k_i)` pairs of column `j`.
    pub fn column_entries(&self, j: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        column_positions(&self.parabolic, j).zip(self.column(j).iter().copied())
    }

    /// The full descending code, first-column positions set to `i + 1`.
    pub fn to_descending_code(&self) -> DescendingCode {
        let rank = self.rank();
        let mut entries: Vec<usize> = (2..=rank + 1).collect();
        for j in 2..=self.width() {
            for (i, k) in self.column_entries(j) {
                entries[i - 1] = k;
            }
        }
        DescendingCode::new(entries).expect("entries validated at construction")
    }

    /// Regroups a full descending code into columns, checking that the
    /// first column is trivial and the remaining columns increase.
    pub fn from_descending_code(parabolic: &Composition, code: &DescendingCode) -> Result<Self> {
        if code.rank() + 1 != parabolic.n() {
            return Err(Error::RankMismatch(parabolic.n() - 1, code.rank()));
        }
        for i in column_positions(parabolic, 1).skip(1) {
            if code.entry(i) != i + 1 {
                return Err(Error::OutOfRange {
                    name: "first-column k_i",
                    value: code.entry(i),
                    lo: i + 1,
                    hi: i + 1,
                });
            }
        }
        let columns = (2..=parabolic.len())
            .map(|j| {
                column_positions(parabolic, j)
                    .map(|i| code.entry(i))
                    .collect()
            })
            .collect();
        Self::new(parabolic.clone(), columns)
    }

    /// `Π_j` as a permutation of the full rank.
    pub fn column_product(&self, j: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=self.rank() + 1).collect();
        for (i, k) in self.column_entries(j) {
            apply_cycle_right(&mut images, i, k);
        }
        Permutation::from_images(images).expect("product of cycles")
    }

    /// `Π_2 Π_3 ... Π_a`.
    pub fn permutation(&self) -> Permutation {
        let mut images: Vec<usize> = (1..=self.rank() + 1).collect();
        for j in 2..=self.width() {
            for (i, k) in self.column_entries(j) {
                apply_cycle_right(&mut images, i, k);
            }
        }
        Permutation::from_images(images).expect("product of cycles")
    }

    pub fn word(&self) -> Word {
        self.to_descending_code().word()
    }

    pub fn length(&self) -> usize {
        self.to_descending_code().length()
    }

    /// Parses the rendering produced by `Display`.
    pub fn parse_rendered(parabolic: &Composition, text: &str) -> Result<Self> {
        let mut code = Self::identity(parabolic);
        let groups: Vec<&str> = text.split('|').map(str::trim).collect();
        if parabolic.len() == 1 {
            return if groups == ["e"] {
                Ok(code)
            } else {
                Err(Error::parse(text, "single-column parabolic renders as e"))
            };
        }
        if groups.len() != parabolic.len() - 1 {
            return Err(Error::ColumnCount {
                expected: parabolic.len() - 1,
                found: groups.len(),
            });
        }
        for (idx, group) in groups.iter().enumerate() {
            let j = idx + 2;
            if *group == "e" {
                continue;
            }
            let positions = column_positions(parabolic, j);
            for token in group.split_whitespace() {
                let (i, k) = parse_cycle_token(token)?;
                if !positions.contains(&i) {
                    return Err(Error::parse(text, format!("{token} is not in column {j}")));
                }
                code.columns[idx][i - positions.start] = k;
            }
        }
        Self::new(code.parabolic, code.columns)
    }
}

/// Columns in compressed cycle notation separated by `|`:
/// `s321 s43 s5 | s654321 s7654 s87 | s987654321`. Trivial columns, and
/// the whole code of a one-block parabolic, render as `e`.
impl fmt::Display for CosetCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.width() == 1 {
            return f.write_str("e");
        }
        let groups: Vec<String> = (2..=self.width())
            .map(|j| {
                let tokens: Vec<String> = self
                    .column_entries(j)
                    .filter(|&(i, k)| k <= i)
                    .map(|(i, k)| cycle_token(i, k))
                    .collect();
                if tokens.is_empty() {
                    "e".to_string()
                } else {
                    tokens.join(" ")
                }
            })
            .collect();
        f.write_str(&groups.join(" | "))
    }
}

/// Every code in `D_{(r_1 ... r_a)}`, columns varying fastest on the right.
pub fn enumerate_coset_codes(parabolic: &Composition) -> Vec<CosetCode> {
    let column_choices: Vec<Vec<Vec<usize>>> = (2..=parabolic.len())
        .map(|j| increasing_columns(column_positions(parabolic, j)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(column_choices.len());
    fn go(
        choices: &[Vec<Vec<usize>>],
        cur: &mut Vec<Vec<usize>>,
        parabolic: &Composition,
        out: &mut Vec<CosetCode>,
    ) {
        match choices.split_first() {
            None => out.push(CosetCode {
                parabolic: parabolic.clone(),
                columns: cur.clone(),
            }),
            Some((first, rest)) => {
                for col in first {
                    cur.push(col.clone());
                    go(rest, cur, parabolic, out);
                    cur.pop();
                }
            }
        }
    }
    go(&column_choices, &mut cur, parabolic, &mut out);
    out
}

/// Strictly increasing fillings `k_i` of the positions, `1 <= k_i <= i + 1`.
fn increasing_columns(positions: std::ops::Range<usize>) -> Vec<Vec<usize>> {
    let positions: Vec<usize> = positions.collect();
    let mut out = Vec::new();
    fn go(positions: &[usize], floor: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        match positions.split_first() {
            None => out.push(cur.clone()),
            Some((&i, rest)) => {
                for k in floor..=i + 1 {
                    cur.push(k);
                    go(rest, k + 1, cur, out);
                    cur.pop();
                }
            }
        }
    }
    go(&positions, 1, &mut Vec::new(), &mut out);
    out
}

pub fn coset_decode(code: &CosetCode) -> Permutation {
    code.permutation()
}

/// All coset codes of one parabolic with their decoded representatives.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    parabolic: Composition,
    codes: Vec<CosetCode>,
    perms: Vec<Permutation>,
}

impl CosetSpace {
    pub fn new(parabolic: &Composition, exec: Execution) -> Self {
        let codes = enumerate_coset_codes(parabolic);
        let perms = exec.map(&codes, CosetCode::permutation);
        Self {
            parabolic: parabolic.clone(),
            codes,
            perms,
        }
    }

    pub fn parabolic(&self) -> &Composition {
        &self.parabolic
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    pub fn codes(&self) -> &[CosetCode] {
        &self.codes
    }

    pub fn permutations(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CosetCode, &Permutation)> + '_ {
        self.codes.iter().zip(&self.perms)
    }
}

/// The element of `W(P) w` whose inverse keeps each block's positions in
/// increasing order, i.e. `w'^{-1}(α) > 0` for every simple `α` of the
/// Levi. Left multiplication by `W(P)` permutes values inside blocks, so
/// the positions carrying a block's values get that block's values in
/// increasing order.
pub fn block_sorted(w: &Permutation, parabolic: &Composition) -> Result<Permutation> {
    let n = parabolic.n();
    if w.size() != n {
        return Err(Error::RankMismatch(n - 1, w.rank()));
    }
    let labels = parabolic.block_labels();
    let starts = column_starts(parabolic);
    let mut next: Vec<usize> = starts[..parabolic.len()].iter().map(|s| s + 1).collect();
    let images = w
        .images()
        .iter()
        .map(|&y| {
            let b = labels[y - 1];
            let v = next[b];
            next[b] += 1;
            v
        })
        .collect();
    Permutation::from_images(images)
}

/// The coset code of the minimal representative of `W(P) w`.
pub fn min_rep(w: &Permutation, parabolic: &Composition) -> Result<CosetCode> {
    let rep = block_sorted(w, parabolic)?;
    CosetCode::from_descending_code(parabolic, &DescendingCode::encode(&rep))
}

/// Which identity of the rewrite lemma to instantiate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Lemma25Form {
    /// `(s_i ... s_j)(s_{i+1} ... s_j) = s_{i+1}(s_i ... s_j)(s_{i+1} ... s_{j+1})`
    First { i: usize, j: usize },
    /// `(s_i ... s_j)(s_{i+1} ... s_k) = s_{i+1}(s_i ... s_k)(s_{i+1} ... s_{j+1})`
    Second { i: usize, j: usize, k: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma25Check {
    pub lhs: Word,
    pub rhs: Word,
    pub equal: bool,
}

pub fn lemma25_rewrite(form: Lemma25Form, rank: usize) -> Result<Lemma25Check> {
    let (i, j, k) = match form {
        Lemma25Form::First { i, j } => (i, j, j),
        Lemma25Form::Second { i, j, k } => (i, j, k),
    };
    if k == 0 {
        return Err(Error::Admissibility("k >= 1"));
    }
    if !(i >= j && j >= k) {
        return Err(Error::Admissibility("i >= j >= k"));
    }
    if i + 1 > rank {
        return Err(Error::Admissibility("i + 1 <= rank"));
    }
    let lhs = Word::descending(rank, i, j)?.concat(&Word::descending(rank, i + 1, k)?);
    let rhs = Word::new(rank, vec![i + 1])?
        .concat(&Word::descending(rank, i, k)?)
        .concat(&Word::descending(rank, i + 1, j + 1)?);
    let equal = lhs.evaluate() == rhs.evaluate();
    Ok(Lemma25Check { lhs, rhs, equal })
}

/// The coset code of `w_μ` in `W(P_{μ^⊤})\W(G)`.
///
/// Built column by column from the right: if the current diagram has
/// largest part `t` and `c` rows of length `t`, the last column is
/// `(1, 1 + t, 1 + 2t, ..., 1 + (c-1)t)`; removing that column leaves the
/// same problem for a smaller diagram.
pub fn construct_w_mu(mu: &SortedPartition) -> CosetCode {
    let parabolic = mu.transpose().to_composition();
    let mut rows = mu.parts().to_vec();
    let mut columns = Vec::with_capacity(parabolic.len().saturating_sub(1));
    while rows[0] >= 2 {
        let t = rows[0];
        let height = rows.iter().take_while(|&&p| p == t).count();
        columns.push((0..height).map(|m| 1 + m * t).collect::<Vec<_>>());
        for p in rows.iter_mut().take(height) {
            *p -= 1;
        }
    }
    columns.reverse();
    CosetCode::new(parabolic, columns).expect("w_mu columns satisfy the tableau conditions")
}

/// `R_2, ..., R_a`: each `α ∈ Δ_λ` sits in the `R_l` for the largest `l`
/// with `Π_l ... Π_a(α) < 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RlDecomposition {
    rank: usize,
    sets: Vec<RootSet>,
}

#[derive(Serialize)]
struct RlEntry {
    l: usize,
    roots: Vec<usize>,
}

impl Serialize for RlDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<RlEntry> = self
            .iter()
            .map(|(l, set)| RlEntry {
                l,
                roots: set.simple_indices(),
            })
            .collect();
        entries.serialize(s)
    }
}

impl RlDecomposition {
    /// `R_l` for `2 <= l <= a`.
    pub fn get(&self, l: usize) -> Option<&RootSet> {
        l.checked_sub(2).and_then(|idx| self.sets.get(idx))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &RootSet)> + '_ {
        self.sets.iter().enumerate().map(|(idx, s)| (idx + 2, s))
    }

    /// The `l` with `α_k ∈ R_l`.
    pub fn level_of(&self, k: usize) -> Option<usize> {
        let root = Root::simple(k).ok()?;
        self.iter().find(|(_, s)| s.contains(&root)).map(|(l, _)| l)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

pub fn rl_decomposition(code: &CosetCode, lambda: &Composition) -> Result<RlDecomposition> {
    let rank = code.rank();
    if lambda.n() != rank + 1 {
        return Err(Error::SizeMismatch {
            left: lambda.n(),
            right: rank + 1,
        });
    }
    let a = code.width();
    // suffix[l] = Π_l ... Π_a for l in 2..=a+1
    let mut suffix = vec![Permutation::identity(rank); a + 2];
    for l in (2..=a).rev() {
        suffix[l] = code.column_product(l).compose(&suffix[l + 1]);
    }
    let mut sets = vec![RootSet::new(rank); a.saturating_sub(1)];
    for k in crate::orbits::delta_lambda(lambda).simple_indices() {
        let alpha = Root::simple(k)?;
        let mut placed = false;
        for l in (2..=a).rev() {
            if act_on_root(&suffix[l], &alpha).is_negative() {
                let before = act_on_root(&suffix[l + 1], &alpha);
                if !before.is_simple() {
                    return Err(Error::NotSimple(before.i(), before.j()));
                }
                sets[l - 2].insert(alpha)?;
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(Error::PositiveImage(k));
        }
    }
    Ok(RlDecomposition { rank, sets })
}

impl fmt::Display for RlDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .iter()
            .map(|(l, s)| {
                let ks: Vec<String> = s.simple_indices().iter().map(|k| format!("a{k}")).collect();
                format!("R{l}: {}", join(&ks, ","))
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}
