//! The Weyl group of `GL_{r+1}` as `S_{r+1}` and its action on roots.

mod code;
mod perm;
mod root;
mod word;

pub(crate) use code::{apply_cycle_right, check_entry};
pub use code::{cycle_permutation, cycle_token, parse_cycle_token, DescendingCode};
pub use perm::Permutation;
pub use root::{Root, RootSet};
pub use word::Word;

use crate::error::{Error, Result};

pub fn decode(code: &DescendingCode) -> (Word, Permutation) {
    code.decode()
}

pub fn encode(w: &Permutation) -> DescendingCode {
    DescendingCode::encode(w)
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

/// `w(e_i - e_j) = e_{w(i)} - e_{w(j)}`.
#[inline]
pub fn act_on_root(w: &Permutation, root: &Root) -> Root {
    Root::pair(w.apply(root.i()), w.apply(root.j()))
}

/// Closed form for `s_j s_{j-1} ... s_i (α_k)`, `i <= j`.
pub fn cycle_action(rank: usize, i: usize, j: usize, k: usize) -> Result<Root> {
    if i == 0 || i > j {
        return Err(Error::OutOfRange {
            name: "i",
            value: i,
            lo: 1,
            hi: j,
        });
    }
    if j > rank {
        return Err(Error::OutOfRange {
            name: "j",
            value: j,
            lo: i,
            hi: rank,
        });
    }
    if k == 0 || k > rank {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            lo: 1,
            hi: rank,
        });
    }
    let root = if k + 2 <= i || k >= j + 2 {
        Root::pair(k, k + 1)
    } else if k + 1 == i {
        // α_{i-1} + α_i + ... + α_j
        Root::pair(i - 1, j + 1)
    } else if k == i {
        // -(α_i + ... + α_j)
        Root::pair(j + 1, i)
    } else if k <= j {
        // i + 1 <= k <= j: α_{k-1}
        Root::pair(k - 1, k)
    } else {
        // k = j + 1: α_j + α_{j+1}
        Root::pair(j, j + 2)
    };
    Ok(root)
}

/// `{α ∈ simple : w(α) < 0}`.
pub fn negative_simple_set(w: &Permutation, simple: &RootSet) -> Result<RootSet> {
    let mut out = RootSet::new(simple.rank().max(w.rank()));
    for root in simple.iter() {
        if !root.is_simple() {
            return Err(Error::NotSimple(root.i(), root.j()));
        }
        if act_on_root(w, root).is_negative() {
            out.insert(*root)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(rank: usize, s: &str) -> Permutation {
        Word::parse(rank, s).unwrap().evaluate()
    }

    #[test]
    fn decode_examples() {
        let (w, p) = decode(&"2,3".parse().unwrap());
        assert!(w.is_empty() && p.is_identity());
        assert_eq!(decode(&"1,2".parse().unwrap()).0.to_string(), "s1 s2");
        let (w, p) = decode(&"1,1".parse().unwrap());
        assert_eq!(w.to_string(), "s1 s2 s1");
        assert_eq!(p.length(), 3);
    }

    #[test]
    fn length_examples() {
        assert_eq!(length(&Permutation::identity(3)), 0);
        assert_eq!(length(&DescendingCode::longest(5).permutation()), 15);
        assert_eq!(length(&word(2, "1 2")), 2);
    }

    #[test]
    fn act_examples() {
        let a1 = Root::simple(1).unwrap();
        assert_eq!(act_on_root(&word(1, "1"), &a1), a1.negate());
        let w = word(4, "4 3 2");
        assert_eq!(act_on_root(&w, &a1), Root::span(1, 4).unwrap());
        assert_eq!(
            act_on_root(&w, &Root::simple(3).unwrap()),
            Root::simple(2).unwrap()
        );
    }

    #[test]
    fn cycle_action_examples() {
        assert_eq!(
            cycle_action(6, 2, 4, 2).unwrap(),
            Root::span(2, 4).unwrap().negate()
        );
        assert_eq!(cycle_action(6, 2, 4, 5).unwrap(), Root::span(4, 5).unwrap());
        assert_eq!(cycle_action(6, 2, 4, 6).unwrap(), Root::simple(6).unwrap());
        assert!(cycle_action(6, 3, 2, 1).is_err());
        assert!(cycle_action(3, 2, 4, 1).is_err());
        assert!(cycle_action(6, 2, 4, 7).is_err());
        assert!(cycle_action(6, 0, 4, 1).is_err());
    }

    #[test]
    fn negative_simple_examples() {
        let all = RootSet::all_simple(2);
        assert!(negative_simple_set(&Permutation::identity(2), &all)
            .unwrap()
            .is_empty());
        let w0 = DescendingCode::longest(2).permutation();
        assert_eq!(negative_simple_set(&w0, &all).unwrap(), all);
        let got = negative_simple_set(&word(2, "2 1"), &all).unwrap();
        assert_eq!(got.simple_indices(), vec![1]);
        let not_simple = RootSet::from_roots(2, [Root::new(1, 3).unwrap()]).unwrap();
        assert!(negative_simple_set(&w0, &not_simple).is_err());
    }
}
