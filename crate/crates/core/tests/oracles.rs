//! Library results against independently computed references.

use std::collections::{HashMap, HashSet, VecDeque};

use itertools::Itertools;
use weylcode::cosets::{construct_w_mu, enumerate_coset_codes};
use weylcode::orbits::{delta_lambda, levi_negative_roots};
use weylcode::partitions::{enumerate_compositions, enumerate_partitions};
use weylcode::weyl::{act_on_root, negative_simple_set};
use weylcode::{DescendingCode, Permutation, Root, RootSet};

/// Partition numbers from Euler's pentagonal recurrence.
fn partition_numbers(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[n] += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                p[n] += sign * p[n - g2];
            }
            k += 1;
        }
    }
    p
}

#[test]
fn partition_counts() {
    let p = partition_numbers(16);
    assert_eq!(p[8], 22);
    for (n, &count) in p.iter().enumerate().skip(1) {
        let parts = enumerate_partitions(n).unwrap();
        assert_eq!(parts.len() as i64, count, "n = {n}");
        assert_eq!(parts.iter().collect::<HashSet<_>>().len(), parts.len());
        assert!(parts.iter().all(|q| q.n() == n));
    }
    for n in 1..=12 {
        let comps = enumerate_compositions(n).unwrap();
        assert_eq!(comps.len(), 1 << (n - 1));
        assert_eq!(comps.iter().collect::<HashSet<_>>().len(), comps.len());
    }
}

/// Breadth-first distances from the identity in the Cayley graph of
/// `S_{r+1}` with the simple reflections as generators.
fn cayley_distances(rank: usize) -> HashMap<Vec<usize>, usize> {
    let start: Vec<usize> = (1..=rank + 1).collect();
    let mut dist = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in 0..rank {
            let mut next = w.clone();
            next.swap(i, i + 1);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}

#[test]
fn code_words_are_geodesics() {
    for rank in 1..=5 {
        let dist = cayley_distances(rank);
        let codes = DescendingCode::all(rank);
        assert_eq!(codes.len(), dist.len());
        for c in codes {
            let (word, perm) = c.decode();
            assert_eq!(word.len(), dist[perm.images()], "code {c}");
        }
    }
}

#[test]
fn coset_minima_by_brute_force() {
    for n in 2..=6 {
        let all: Vec<Permutation> = (1..=n)
            .permutations(n)
            .map(|v| Permutation::from_images(v).unwrap())
            .collect();
        for parabolic in enumerate_compositions(n).unwrap() {
            let labels = parabolic.block_labels();
            let mut best: HashMap<Vec<usize>, (usize, Vec<Permutation>)> = HashMap::new();
            for w in &all {
                let key: Vec<usize> = w.images().iter().map(|&y| labels[y - 1]).collect();
                let entry = best.entry(key).or_insert((usize::MAX, Vec::new()));
                match w.length().cmp(&entry.0) {
                    std::cmp::Ordering::Less => *entry = (w.length(), vec![w.clone()]),
                    std::cmp::Ordering::Equal => entry.1.push(w.clone()),
                    std::cmp::Ordering::Greater => {}
                }
            }
            let mut expected: Vec<Permutation> = best
                .into_values()
                .map(|(_, ws)| {
                    assert_eq!(ws.len(), 1, "unique minimum");
                    ws.into_iter().next().unwrap()
                })
                .collect();
            let mut got: Vec<Permutation> = enumerate_coset_codes(&parabolic)
                .iter()
                .map(|c| c.permutation())
                .collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "parabolic {parabolic}");
        }
    }
}

#[test]
fn w_mu_is_the_unique_all_negative_minimal_element() {
    for n in 1..=7 {
        let all: Vec<Permutation> = (1..=n)
            .permutations(n)
            .map(|v| Permutation::from_images(v).unwrap())
            .collect();
        for mu in enumerate_partitions(n).unwrap() {
            let parabolic = mu.transpose().to_composition();
            let labels = parabolic.block_labels();
            let delta = delta_lambda(&mu.to_composition());
            // Minimal in W(P)w: w^{-1} increases on values of each block.
            let found: Vec<&Permutation> = all
                .iter()
                .filter(|w| {
                    let inv = w.inverse();
                    (1..n).all(|v| labels[v - 1] != labels[v] || inv.apply(v) < inv.apply(v + 1))
                })
                .filter(|w| delta.iter().all(|a| act_on_root(w, a).is_negative()))
                .collect();
            assert_eq!(found.len(), 1, "mu = {mu}");
            let w_mu = construct_w_mu(&mu).permutation();
            assert_eq!(*found[0], w_mu, "mu = {mu}");
            let levi = levi_negative_roots(&parabolic);
            assert!(delta.iter().all(|a| !levi.contains(&act_on_root(&w_mu, a))));
        }
    }
}

#[test]
fn negative_simple_set_matches_coordinates() {
    for rank in 1..=4 {
        let all = RootSet::all_simple(rank);
        for c in DescendingCode::all(rank) {
            let w = c.permutation();
            let got = negative_simple_set(&w, &all).unwrap().simple_indices();
            let want: Vec<usize> = (1..=rank)
                .filter(|&k| w.apply(k) > w.apply(k + 1))
                .collect();
            assert_eq!(got, want);
        }
    }
    let s2s1 = weylcode::Word::parse(2, "s2 s1").unwrap().evaluate();
    let got = negative_simple_set(&s2s1, &RootSet::all_simple(2)).unwrap();
    assert_eq!(
        got.iter().copied().collect::<Vec<_>>(),
        vec![Root::simple(1).unwrap()]
    );
}
