use proptest::prelude::*;
use weylcode::cosets::{min_rep, CosetCode};
use weylcode::orbits::{semiwhittaker_verdict, torus_exponents};
use weylcode::partitions::{dominance_compare, lemma32_bound, partial_sum_violation};
use weylcode::weyl::act_on_root;
use weylcode::{Composition, DescendingCode, Dominance, Permutation, Root, SortedPartition};

fn composition(max_part: usize, max_len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 1..=max_len).prop_map(|p| Composition::new(p).unwrap())
}

fn partition_of(n: usize) -> impl Strategy<Value = SortedPartition> {
    // Random cut points of n boxes, sorted afterwards.
    prop::collection::vec(any::<bool>(), n - 1).prop_map(move |cuts| {
        let mut parts = vec![1];
        for cut in cuts {
            if cut {
                parts.push(1);
            } else {
                *parts.last_mut().unwrap() += 1;
            }
        }
        Composition::new(parts).unwrap().sorted()
    })
}

fn permutation(max_size: usize) -> impl Strategy<Value = Permutation> {
    (2..=max_size).prop_flat_map(|n| {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|images| Permutation::from_images(images).unwrap())
    })
}

fn code(max_rank: usize) -> impl Strategy<Value = DescendingCode> {
    (1..=max_rank).prop_flat_map(|rank| {
        (1..=rank)
            .map(|i| (1..=i + 1).boxed())
            .collect::<Vec<_>>()
            .prop_map(|entries| DescendingCode::new(entries).unwrap())
    })
}

fn blocks_of(w: &Permutation, parabolic: &Composition) -> Vec<usize> {
    let labels = parabolic.block_labels();
    w.images().iter().map(|&y| labels[y - 1]).collect()
}

/// A composition of `n` from cut flags.
fn cut(n: usize, flags: &[bool]) -> Composition {
    let mut parts = vec![1];
    for &f in flags.iter().take(n - 1) {
        if f {
            parts.push(1);
        } else {
            *parts.last_mut().unwrap() += 1;
        }
    }
    Composition::new(parts).unwrap()
}

proptest! {
    #[test]
    fn transpose_is_an_involution(c in composition(6, 6)) {
        let p = c.sorted();
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().n(), p.n());
        prop_assert_eq!(c.transpose(), p.transpose());
    }

    #[test]
    fn dominance_is_antisymmetric((a, b) in (1usize..=12).prop_flat_map(|n| (partition_of(n), partition_of(n)))) {
        let ab = dominance_compare(&a, &b).unwrap().relation;
        let ba = dominance_compare(&b, &a).unwrap().relation;
        let flipped = match ab {
            Dominance::Greater => Dominance::Less,
            Dominance::Less => Dominance::Greater,
            other => other,
        };
        prop_assert_eq!(ba, flipped);
        prop_assert_eq!(ab == Dominance::Equal, a == b);
    }

    #[test]
    fn transpose_reverses_dominance((a, b) in (1usize..=12).prop_flat_map(|n| (partition_of(n), partition_of(n)))) {
        let ab = dominance_compare(&a, &b).unwrap().relation;
        let tt = dominance_compare(&b.transpose(), &a.transpose()).unwrap().relation;
        prop_assert_eq!(ab, tt);
    }

    #[test]
    fn violation_iff_not_below((lambda, mu) in (1usize..=12).prop_flat_map(|n| (partition_of(n), partition_of(n)))) {
        let violated = partial_sum_violation(&lambda.to_composition(), &mu).unwrap().is_some();
        let relation = dominance_compare(&lambda, &mu).unwrap().relation;
        prop_assert_eq!(violated, relation.not_below());
    }

    #[test]
    fn transpose_bound_always_holds(c in composition(5, 6), l in 1usize..=6, k in 1usize..=30) {
        prop_assume!(l <= c.len() && k <= c.n());
        let bound = lemma32_bound(&c, l, k).unwrap();
        prop_assert!(bound.holds, "{:?}", bound);
        if c.is_sorted() && l < c.len() && k == c.part(l + 1) {
            prop_assert!(bound.equality, "{:?}", bound);
        }
    }

    #[test]
    fn code_round_trip(c in code(9)) {
        let (word, perm) = c.decode();
        prop_assert_eq!(word.evaluate(), perm.clone());
        prop_assert_eq!(word.len(), perm.length());
        prop_assert_eq!(perm.length(), c.length());
        prop_assert_eq!(DescendingCode::encode(&perm), c.clone());
        prop_assert_eq!(c.to_string().parse::<DescendingCode>().unwrap(), c);
    }

    #[test]
    fn encode_inverts_decode(w in permutation(9)) {
        prop_assert_eq!(DescendingCode::encode(&w).permutation(), w);
    }

    #[test]
    fn min_rep_is_minimal_and_idempotent(w in permutation(8), flags in prop::collection::vec(any::<bool>(), 7)) {
        let parabolic = cut(w.size(), &flags);
        let rep = min_rep(&w, &parabolic).unwrap();
        let r = rep.permutation();
        prop_assert_eq!(blocks_of(&r, &parabolic), blocks_of(&w, &parabolic));
        prop_assert!(r.length() <= w.length());
        prop_assert_eq!(min_rep(&r, &parabolic).unwrap(), rep.clone());
        let js = serde_json::to_string(&rep).unwrap();
        prop_assert_eq!(serde_json::from_str::<CosetCode>(&js).unwrap(), rep.clone());
        prop_assert_eq!(CosetCode::parse_rendered(&parabolic, &rep.to_string()).unwrap(), rep);
    }

    #[test]
    fn action_is_a_homomorphism(a in permutation(6), b in permutation(6), i in 1usize..=6, j in 1usize..=6) {
        prop_assume!(i != j && i <= a.size().min(b.size()) && j <= a.size().min(b.size()));
        let root = Root::new(i, j).unwrap();
        prop_assert_eq!(act_on_root(&(&a * &b), &root), act_on_root(&a, &act_on_root(&b, &root)));
        prop_assert_eq!(root.to_string().parse::<Root>().unwrap(), root);
    }

    #[test]
    fn torus_is_balanced(p in (1usize..=14).prop_flat_map(partition_of)) {
        let h = torus_exponents(&p).exponents;
        prop_assert_eq!(h.iter().sum::<i64>(), 0);
        prop_assert!(h.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(h.len(), p.n());
    }

    #[test]
    fn violated_pairs_have_empty_support((mu, flags) in (2usize..=7).prop_flat_map(|n| (partition_of(n), prop::collection::vec(any::<bool>(), n - 1)))) {
        let lambda = cut(mu.n(), &flags);
        let report = semiwhittaker_verdict(&mu, &lambda).unwrap();
        if report.violation_index.is_some() {
            prop_assert!(report.support.is_empty());
        }
        prop_assert!(report.invariant_violations().is_empty());
        prop_assert!(report.refined_support.iter().all(|c| report.support.contains(c)));
    }
}
