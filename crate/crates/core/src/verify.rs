//! Exhaustive checks with replayable counterexamples.
//!
//! Every check sweeps its whole input space up to the given bound and
//! compares the library against an oracle that does not share its code
//! path (brute-force permutation enumeration, word evaluation, direct
//! root action). Passing a mutation seed makes each check corrupt exactly
//! one of its inputs, which must then show up as a failure.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cosets::{
    construct_w_mu, enumerate_coset_codes, lemma25_rewrite, min_rep, rl_decomposition, CosetCode,
    CosetSpace, Lemma25Form,
};
use crate::exec::Execution;
use crate::orbits::{
    attached_orbit_certificate_with, delta_lambda, levi_negative_roots, root_weight, support_in,
    torus_exponents, u_level, Verdict,
};
use crate::partitions::{
    enumerate_compositions, enumerate_partitions, lemma32_bound, partial_sum_violation,
    Composition, SortedPartition,
};
use crate::weyl::{
    act_on_root, cycle_action, cycle_permutation, DescendingCode, Permutation, Root, RootSet, Word,
};

/// Names accepted by [`run_suite`], in run order.
pub const CHECKS: &[&str] = &[
    "pi_bijection",
    "coset_representatives",
    "lemma25",
    "lemma32",
    "root_lemmas",
    "cycle_action",
    "theorem31",
    "orbit_torus",
    "orbit_certificates",
];

pub const DEFAULT_MAX_RANK: usize = 6;
pub const DEFAULT_MAX_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Value,
    pub observed: Value,
    pub expected: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub scope: Value,
    pub cases: u64,
    pub failures: Vec<Counterexample>,
    pub ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The report without its timing, for determinism comparisons.
    pub fn outcome(&self) -> (&str, &Value, u64, &[Counterexample]) {
        (&self.check, &self.scope, self.cases, &self.failures)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    pub exec: Execution,
    /// Corrupt one seeded input per check.
    pub mutation: Option<u64>,
}

impl Options {
    pub fn with_exec(exec: Execution) -> Self {
        Self {
            exec,
            mutation: None,
        }
    }

    pub fn mutated(seed: u64) -> Self {
        Self {
            exec: Execution::default(),
            mutation: Some(seed),
        }
    }

    /// A seeded index into `0..len`, when mutating.
    fn target(&self, salt: u64, len: usize) -> Option<usize> {
        let seed = self.mutation?;
        if len == 0 {
            return None;
        }
        let mut rng = StdRng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        Some(rng.gen_range(0..len))
    }
}

/// Accumulates case counts and failures; merges shard results in order.
#[derive(Default)]
struct Tally {
    cases: u64,
    failures: Vec<Counterexample>,
}

impl Tally {
    fn case(&mut self) {
        self.cases += 1;
    }

    fn fail(&mut self, inputs: Value, observed: Value, expected: Value) {
        self.failures.push(Counterexample {
            inputs,
            observed,
            expected,
        });
    }

    fn expect<T: PartialEq + Serialize>(
        &mut self,
        inputs: impl FnOnce() -> Value,
        got: &T,
        want: &T,
    ) {
        self.case();
        if got != want {
            self.fail(inputs(), json!(got), json!(want));
        }
    }

    fn merge(shards: Vec<Tally>) -> Tally {
        let mut out = Tally::default();
        for s in shards {
            out.cases += s.cases;
            out.failures.extend(s.failures);
        }
        out
    }

    fn into_report(self, check: &str, scope: Value, started: Instant) -> VerificationReport {
        VerificationReport {
            check: check.to_string(),
            scope,
            cases: self.cases,
            failures: self.failures,
            ms: started.elapsed().as_millis() as u64,
        }
    }
}

/// All permutations of `1..=n` in lexicographic order, by the classical
/// next-permutation step. Independent of the descending decomposition.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("pivot has a successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn multinomial(parabolic: &Composition) -> u64 {
    parabolic
        .parts()
        .iter()
        .fold(factorial(parabolic.n()), |acc, &p| acc / factorial(p))
}

/// Changes entry `pos` (0-based) of a code to another admissible value.
fn perturb_code(code: &DescendingCode, pos: usize) -> DescendingCode {
    let mut entries = code.entries().to_vec();
    let top = pos + 2;
    entries[pos] = if entries[pos] < top {
        entries[pos] + 1
    } else {
        1
    };
    DescendingCode::new(entries).expect("perturbed entry stays in range")
}

/// For every rank `r <= max_rank` the `(r+1)!` codes decode to
/// distinct permutations by reduced words, and encode inverts decode.
pub fn verify_pi_bijection(max_rank: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    for rank in 1..=max_rank {
        let codes = DescendingCode::all(rank);
        let target = if rank == max_rank {
            opts.target(1, codes.len())
        } else {
            None
        };
        let decoded = opts.exec.map(&codes, |c| c.decode());
        let mut seen: HashMap<Permutation, usize> = HashMap::with_capacity(codes.len());
        for (idx, (code, (word, perm))) in codes.iter().zip(decoded).enumerate() {
            let (word, perm) = if Some(idx) == target {
                perturb_code(code, rank - 1).decode()
            } else {
                (word, perm)
            };
            let inputs = || json!({"rank": rank, "code": code});
            let letters = word.len();
            tally.expect(inputs, &letters, &code.length());
            tally.expect(inputs, &perm.length(), &code.length());
            tally.expect(inputs, &DescendingCode::encode(&perm), code);
            tally.case();
            if let Some(first) = seen.insert(perm.clone(), idx) {
                tally.fail(
                    inputs(),
                    json!({"duplicate_of": codes[first], "permutation": perm}),
                    json!("distinct permutations"),
                );
            }
        }
        tally.expect(
            || json!({"rank": rank}),
            &(seen.len() as u64),
            &factorial(rank + 1),
        );
    }
    tally.into_report("pi_bijection", json!({"max_rank": max_rank}), started)
}

/// Coset codes against a brute-force partition of `S_n` into
/// cosets `W(P)w`, keyed by which block each value `w(x)` lies in.
pub fn verify_coset_representatives(max_n: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut shards = Vec::new();
    for n in 1..=max_n {
        let everything = all_permutations(n);
        let lengths: Vec<usize> = everything
            .iter()
            .map(|w| {
                Permutation::from_images(w.clone())
                    .expect("permutation")
                    .length()
            })
            .collect();
        let parabolics = enumerate_compositions(n).expect("n >= 1");
        let target = if n == max_n {
            // Only parabolics with more than one block have a column to perturb.
            let eligible: Vec<usize> = (0..parabolics.len())
                .filter(|&i| parabolics[i].len() > 1)
                .collect();
            opts.target(2, eligible.len()).map(|t| eligible[t])
        } else {
            None
        };
        let indexed: Vec<(usize, Composition)> = parabolics.into_iter().enumerate().collect();
        shards.extend(opts.exec.map(&indexed, |(idx, parabolic)| {
            coset_shard(parabolic, &everything, &lengths, Some(*idx) == target)
        }));
    }
    Tally::merge(shards).into_report("coset_representatives", json!({"max_n": max_n}), started)
}

fn coset_shard(
    parabolic: &Composition,
    everything: &[Vec<usize>],
    lengths: &[usize],
    mutate: bool,
) -> Tally {
    let mut tally = Tally::default();
    let labels = parabolic.block_labels();
    let key = |w: &[usize]| -> Vec<usize> { w.iter().map(|&y| labels[y - 1]).collect() };
    // key -> (minimal length, how many attain it, index of a minimiser)
    let mut cosets: HashMap<Vec<usize>, (usize, usize, usize)> = HashMap::new();
    for (idx, w) in everything.iter().enumerate() {
        let len = lengths[idx];
        cosets
            .entry(key(w))
            .and_modify(|e| {
                if len < e.0 {
                    *e = (len, 1, idx);
                } else if len == e.0 {
                    e.1 += 1;
                }
            })
            .or_insert((len, 1, idx));
    }
    let codes = enumerate_coset_codes(parabolic);
    tally.expect(
        || json!({"parabolic": parabolic}),
        &(codes.len() as u64),
        &multinomial(parabolic),
    );
    tally.expect(
        || json!({"parabolic": parabolic}),
        &(cosets.len() as u64),
        &multinomial(parabolic),
    );
    let mut hit: HashSet<Vec<usize>> = HashSet::new();
    for (idx, code) in codes.iter().enumerate() {
        let mut perm = code.permutation();
        if mutate && idx == codes.len() / 2 {
            let full = code.to_descending_code();
            let last = full.rank() - 1;
            perm = perturb_code(&full, last).permutation();
        }
        let inputs = || json!({"parabolic": parabolic, "code": code});
        let k = key(perm.images());
        tally.case();
        if !hit.insert(k.clone()) {
            tally.fail(
                inputs(),
                json!({"permutation": perm}),
                json!("one representative per coset"),
            );
        }
        let (min_len, ties, argmin) = cosets[&k];
        tally.case();
        if ties != 1 || everything[argmin] != perm.images() {
            tally.fail(
                inputs(),
                json!({"permutation": perm, "length": perm.length()}),
                json!({"permutation": everything[argmin], "length": min_len, "minimisers": ties}),
            );
        }
        match min_rep(&perm, parabolic) {
            Ok(c) => tally.expect(inputs, &c, code),
            Err(e) => tally.fail(inputs(), json!(e.to_string()), json!(code)),
        }
    }
    tally
}

/// Both rewrite identities as permutations for every admissible `(i, j, k)`.
pub fn verify_lemma25(max_rank: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut forms = Vec::new();
    for i in 1..max_rank {
        for j in 1..=i {
            forms.push(Lemma25Form::First { i, j });
            for k in 1..=j {
                forms.push(Lemma25Form::Second { i, j, k });
            }
        }
    }
    let target = opts.target(3, forms.len());
    let shards = opts.exec.map(&forms, |form| {
        let mut tally = Tally::default();
        let mutate = target.is_some_and(|t| forms[t] == *form);
        let inputs = || json!({"form": form, "rank": max_rank});
        match lemma25_rewrite(*form, max_rank) {
            Ok(check) => {
                let rhs = if mutate {
                    // One extra letter flips the parity of the right side.
                    check
                        .rhs
                        .concat(&Word::new(max_rank, vec![1]).expect("letter in range"))
                } else {
                    check.rhs.clone()
                };
                let (l, r) = (check.lhs.evaluate(), rhs.evaluate());
                tally.case();
                if l != r || !check.equal {
                    tally.fail(
                        inputs(),
                        json!({"lhs": l, "rhs": r}),
                        json!("equal permutations"),
                    );
                }
            }
            Err(e) => tally.fail(inputs(), json!(e.to_string()), json!("admissible")),
        }
        tally
    });
    Tally::merge(shards).into_report("lemma25", json!({"max_rank": max_rank}), started)
}

/// The transpose bound for every composition and every `(l, k)`, and
/// equality at `k = p_{l+1}` for sorted partitions.
pub fn verify_lemma32(max_n: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut shards = Vec::new();
    for n in 1..=max_n {
        let comps = enumerate_compositions(n).expect("n >= 1");
        let target = if n == max_n {
            let eligible: Vec<usize> = (0..comps.len())
                .filter(|&i| comps[i].is_sorted() && comps[i].len() > 1)
                .collect();
            opts.target(4, eligible.len()).map(|t| eligible[t])
        } else {
            None
        };
        let indexed: Vec<(usize, Composition)> = comps.into_iter().enumerate().collect();
        shards.extend(opts.exec.map(&indexed, |(idx, lambda)| {
            let mut tally = Tally::default();
            for l in 1..=lambda.len() {
                for k in 1..=n {
                    let inputs = || json!({"lambda": lambda, "l": l, "k": k});
                    let mut bound = lemma32_bound(lambda, l, k).expect("indices in range");
                    if Some(*idx) == target && l < lambda.len() && k == lambda.part(l + 1) {
                        bound.lhs += 1;
                        bound.holds = bound.lhs <= bound.rhs;
                        bound.equality = bound.lhs == bound.rhs;
                    }
                    tally.case();
                    if !bound.holds {
                        tally.fail(inputs(), json!(bound), json!("lhs <= rhs"));
                    }
                    if lambda.is_sorted() && l < lambda.len() && k == lambda.part(l + 1) {
                        tally.case();
                        if !bound.equality {
                            tally.fail(inputs(), json!(bound), json!("lhs == rhs"));
                        }
                    }
                }
            }
            tally
        }));
    }
    Tally::merge(shards).into_report("lemma32", json!({"max_n": max_n}), started)
}

/// Cycle-product lemmas on every product `π_{k_i} ... π_{k_j}`, `j <= max_rank`:
/// negative images of the last cycle stay negative, positive non-simple ones
/// stay positive, at most `j - i + 1` simple roots go negative, and strictly
/// increasing codes shift `α_l` down to `α_{l+i-j-1}` for `k_j < l <= j`.
pub fn verify_root_lemmas(max_rank: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let rank = max_rank;
    let simple: Vec<Root> = (1..=rank)
        .map(|l| Root::simple(l).expect("l >= 1"))
        .collect();
    let mut shards = Vec::new();
    for j in 1..=rank {
        let prefixes = DescendingCode::all(j);
        let target = if j == rank {
            // A non-trivial last cycle sends α_{k_j} negative; flipping that
            // image must trip the persistence check.
            let eligible: Vec<usize> = (0..prefixes.len())
                .filter(|&t| prefixes[t].entry(j) <= j)
                .collect();
            opts.target(5, eligible.len()).map(|t| eligible[t])
        } else {
            None
        };
        let indexed: Vec<(usize, DescendingCode)> = prefixes.into_iter().enumerate().collect();
        shards.extend(opts.exec.map(&indexed, |(idx, code)| {
            let mut tally = Tally::default();
            let k = code.entries();
            let last = cycle_permutation(rank, j, k[j - 1]).expect("entry in range");
            let first_images: Vec<Root> = simple.iter().map(|a| act_on_root(&last, a)).collect();
            let mut product = last;
            for i in (1..=j).rev() {
                if i < j {
                    product = cycle_permutation(rank, i, k[i - 1])
                        .expect("entry in range")
                        .compose(&product);
                }
                let mut images: Vec<Root> =
                    simple.iter().map(|a| act_on_root(&product, a)).collect();
                if Some(*idx) == target && i == j {
                    let l = k[j - 1];
                    images[l - 1] = images[l - 1].negate();
                }
                let inputs = || json!({"code": &k[i - 1..j], "i": i, "j": j, "rank": rank});
                for (pos, (before, after)) in first_images.iter().zip(&images).enumerate() {
                    let l = pos + 1;
                    if before.is_negative() {
                        tally.case();
                        if !after.is_negative() {
                            tally.fail(
                                json!({"code": &k[i - 1..j], "i": i, "j": j, "l": l}),
                                json!(after.to_string()),
                                json!("negative root"),
                            );
                        }
                    } else if !before.is_simple() {
                        tally.case();
                        if !after.is_positive() {
                            tally.fail(
                                json!({"code": &k[i - 1..j], "i": i, "j": j, "l": l}),
                                json!(after.to_string()),
                                json!("positive root"),
                            );
                        }
                    }
                }
                let negatives = images.iter().filter(|r| r.is_negative()).count();
                tally.case();
                if negatives > j - i + 1 {
                    tally.fail(
                        inputs(),
                        json!(negatives),
                        json!(format!("at most {}", j - i + 1)),
                    );
                }
                if k[i - 1..j].windows(2).all(|w| w[0] < w[1]) {
                    for l in k[j - 1] + 1..=j {
                        let want = Root::simple(l + i - j - 1).expect("index >= 1").to_string();
                        tally.expect(
                            || json!({"code": &k[i - 1..j], "i": i, "j": j, "l": l}),
                            &images[l - 1].to_string(),
                            &want,
                        );
                    }
                }
            }
            tally
        }));
    }
    Tally::merge(shards).into_report("root_lemmas", json!({"max_rank": max_rank}), started)
}

/// The five-case table for `s_j ... s_i (α_k)` against evaluating the word.
pub fn verify_cycle_action(max_rank: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for rank in 1..=max_rank {
        for i in 1..=rank {
            for j in i..=rank {
                for k in 1..=rank {
                    cases.push((rank, i, j, k));
                }
            }
        }
    }
    let target = opts.target(6, cases.len());
    let shards = opts.exec.map(&cases, |&(rank, i, j, k)| {
        let mut tally = Tally::default();
        let w = Word::descending(rank, j, i)
            .expect("letters in range")
            .evaluate();
        let direct = act_on_root(&w, &Root::simple(k).expect("k >= 1"));
        let fed = if target.is_some_and(|t| cases[t] == (rank, i, j, k)) {
            k % rank + 1
        } else {
            k
        };
        let inputs = || json!({"rank": rank, "i": i, "j": j, "k": k});
        match cycle_action(rank, i, j, fed) {
            Ok(closed) => tally.expect(inputs, &closed.to_string(), &direct.to_string()),
            Err(e) => tally.fail(inputs(), json!(e.to_string()), json!(direct.to_string())),
        }
        tally
    });
    Tally::merge(shards).into_report("cycle_action", json!({"max_rank": max_rank}), started)
}

/// Vanishing and uniqueness over every sorted `μ` and every composition
/// `λ` of `n <= max_n`, with the `R_l` structure checked on each coset that
/// sends all of `Δ_λ` negative and the consecutive-run bound on every
/// representative.
pub fn verify_theorem31(max_n: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut shards = Vec::new();
    for n in 1..=max_n {
        let mus = enumerate_partitions(n).expect("n >= 1");
        let lambdas = enumerate_compositions(n).expect("n >= 1");
        let target = if n == max_n {
            opts.target(7, mus.len())
        } else {
            None
        };
        for (idx, mu) in mus.iter().enumerate() {
            let space = CosetSpace::new(&mu.transpose().to_composition(), opts.exec);
            shards.push(run_bound_check(&space, mu, opts.exec));
            let mutated = (Some(idx) == target).then(|| perturb_partition(mu));
            let per_lambda = opts.exec.map(&lambdas, |lambda| {
                theorem31_case(&space, mu, lambda, mutated.as_ref())
            });
            shards.extend(per_lambda);
        }
    }
    Tally::merge(shards).into_report("theorem31", json!({"max_n": max_n}), started)
}

/// Moves one box of `μ` so the result is no longer `μ`: up into the first
/// row, or out of a single row.
fn perturb_partition(mu: &SortedPartition) -> Composition {
    let mut parts = mu.parts().to_vec();
    if parts.len() == 1 {
        if parts[0] == 1 {
            return mu.to_composition();
        }
        parts[0] -= 1;
        parts.push(1);
    } else {
        parts[0] += 1;
        let last = parts.len() - 1;
        parts[last] -= 1;
        if parts[last] == 0 {
            parts.pop();
        }
    }
    Composition::new(parts).expect("positive parts")
}

/// A coset representative never sends a run of `a` consecutive simple roots
/// entirely negative, `a` being the number of blocks.
fn run_bound_check(space: &CosetSpace, mu: &SortedPartition, exec: Execution) -> Tally {
    let blocks = space.parabolic().len();
    let runs = exec.map(space.permutations(), |w| {
        let mut longest = 0;
        let mut run = 0;
        for k in 1..w.size() {
            if w.apply(k) > w.apply(k + 1) {
                run += 1;
                longest = longest.max(run);
            } else {
                run = 0;
            }
        }
        longest
    });
    let mut tally = Tally::default();
    for (code, longest) in space.codes().iter().zip(runs) {
        tally.case();
        if longest >= blocks {
            tally.fail(
                json!({"mu": mu, "code": code}),
                json!({"negative_run": longest}),
                json!({"negative_run_below": blocks}),
            );
        }
    }
    tally
}

fn theorem31_case(
    space: &CosetSpace,
    mu: &SortedPartition,
    lambda: &Composition,
    mutated: Option<&Composition>,
) -> Tally {
    let mut tally = Tally::default();
    let is_mu = *lambda == mu.to_composition();
    let fed = match mutated {
        Some(m) if is_mu => m,
        _ => lambda,
    };
    let (support, refined) = support_in(space, fed, Execution::Sequential);
    let inputs = || json!({"mu": mu, "lambda": lambda});
    let violation = partial_sum_violation(lambda, mu).expect("same n");
    if violation.is_some() {
        tally.expect(inputs, &support, &Vec::new());
    }
    if is_mu {
        let w_mu = construct_w_mu(mu);
        tally.expect(inputs, &support, &vec![w_mu.clone()]);
        tally.expect(inputs, &refined, &vec![w_mu.clone()]);
        let levi = levi_negative_roots(space.parabolic());
        let w = w_mu.permutation();
        for k in delta_lambda(lambda).simple_indices() {
            let image = act_on_root(&w, &Root::simple(k).expect("k >= 1"));
            tally.case();
            if !image.is_negative() || levi.contains(&image) {
                tally.fail(
                    json!({"mu": mu, "k": k}),
                    json!(image.to_string()),
                    json!("negative root outside the Levi of the transpose"),
                );
            }
        }
    }
    for code in &support {
        check_rl_structure(&mut tally, code, fed);
    }
    tally
}

fn check_rl_structure(tally: &mut Tally, code: &CosetCode, lambda: &Composition) {
    let inputs = || json!({"code": code, "lambda": lambda});
    let decomposition = match rl_decomposition(code, lambda) {
        Ok(d) => d,
        Err(e) => {
            tally.fail(
                inputs(),
                json!(e.to_string()),
                json!("every root of Δ_λ placed"),
            );
            return;
        }
    };
    let delta = delta_lambda(lambda);
    for k in delta.simple_indices() {
        let Some(level) = decomposition.level_of(k) else {
            tally.fail(
                inputs(),
                json!({"unplaced": k}),
                json!("every root of Δ_λ placed"),
            );
            continue;
        };
        let next = Root::simple(k + 1).expect("k + 1 >= 1");
        if !delta.contains(&next) {
            continue;
        }
        tally.case();
        let next_level = decomposition.level_of(k + 1);
        if !next_level.is_some_and(|m| m < level) {
            tally.fail(
                inputs(),
                json!({"k": k, "level": level, "next_level": next_level}),
                json!("next root placed at a strictly smaller level"),
            );
        }
    }
}

/// Torus exponents sum to zero and decrease, `U_l` levels nest down to
/// `Φ^+`, and negative roots carry non-positive weight.
pub fn verify_orbit_torus(max_n: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut shards = Vec::new();
    for n in 1..=max_n {
        let orbits = enumerate_partitions(n).expect("n >= 1");
        let target = if n == max_n {
            opts.target(8, orbits.len())
        } else {
            None
        };
        let indexed: Vec<(usize, SortedPartition)> = orbits.into_iter().enumerate().collect();
        shards.extend(opts.exec.map(&indexed, |(idx, orbit)| {
            let mut tally = Tally::default();
            let mut torus = torus_exponents(orbit);
            if Some(*idx) == target {
                torus.exponents[0] += 1;
            }
            let inputs = || json!({"orbit": orbit});
            let e = &torus.exponents;
            tally.expect(inputs, &e.iter().sum::<i64>(), &0);
            tally.expect(inputs, &e.len(), &n);
            tally.case();
            if e.windows(2).any(|w| w[0] < w[1]) {
                tally.fail(inputs(), json!(e), json!("weakly decreasing"));
            }
            let rank = n - 1;
            let top = e.first().copied().unwrap_or(0) - e.last().copied().unwrap_or(0);
            let mut previous = RootSet::all_positive(rank);
            tally.expect(inputs, &u_level(orbit, 0), &previous);
            for level in 1..=(top.max(0) as usize + 1) {
                let current = u_level(orbit, level);
                tally.case();
                if !current.is_subset(&previous) {
                    tally.fail(
                        json!({"orbit": orbit, "level": level}),
                        json!(current.to_string()),
                        json!(format!("subset of {previous}")),
                    );
                }
                previous = current;
            }
            for root in RootSet::all_positive(rank).iter() {
                let neg = root.negate();
                tally.case();
                if root_weight(&torus, &neg) > 0 {
                    tally.fail(
                        json!({"orbit": orbit, "root": neg.to_string()}),
                        json!(root_weight(&torus, &neg)),
                        json!("non-positive weight"),
                    );
                }
            }
            tally
        }));
    }
    Tally::merge(shards).into_report("orbit_torus", json!({"max_n": max_n}), started)
}

/// Certificates for every sorted `μ` of `n <= max_n`: each row's verdict
/// agrees with dominance, and `μ` is the unique maximal nonvanishing orbit.
pub fn verify_orbit_certificates(max_n: usize, opts: Options) -> VerificationReport {
    let started = Instant::now();
    let mut tally = Tally::default();
    for n in 1..=max_n {
        let mus = enumerate_partitions(n).expect("n >= 1");
        let target = if n == max_n {
            opts.target(9, mus.len())
        } else {
            None
        };
        let certificates = opts.exec.map(&mus, |mu| {
            let idx = mus.iter().position(|m| m == mu).expect("listed");
            let perturbed = (Some(idx) == target).then(|| perturb_partition(mu));
            attached_orbit_certificate_with(mu, Execution::Sequential, perturbed.map(|p| (mu, p)))
        });
        for cert in certificates {
            for row in &cert.rows {
                tally.case();
                if !row.consistent {
                    tally.fail(
                        json!({"mu": cert.mu, "orbit": row.orbit}),
                        json!(row),
                        json!({"vanishes": row.dominance.not_below()}),
                    );
                }
            }
            let mu_row = cert.rows.iter().find(|r| r.orbit == cert.mu);
            tally.expect(
                || json!({"mu": cert.mu}),
                &mu_row.map(|r| r.verdict),
                &Some(Verdict::Nonvanishing),
            );
            tally.expect(
                || json!({"mu": cert.mu}),
                &cert.attached,
                &vec![cert.mu.clone()],
            );
        }
    }
    tally.into_report("orbit_certificates", json!({"max_n": max_n}), started)
}

/// Runs the named check; `max_rank` and `max_n` are the suite bounds, from
/// which the cheaper checks derive larger scopes.
pub fn run_check(
    name: &str,
    max_rank: usize,
    max_n: usize,
    opts: Options,
) -> Option<VerificationReport> {
    let report = match name {
        "pi_bijection" => verify_pi_bijection(max_rank, opts),
        "coset_representatives" => verify_coset_representatives(max_n.min(max_rank + 2), opts),
        "lemma25" => verify_lemma25(max_rank + 4, opts),
        "lemma32" => verify_lemma32(max_n + 4, opts),
        "root_lemmas" => verify_root_lemmas(max_rank, opts),
        "cycle_action" => verify_cycle_action(max_rank + 2, opts),
        "theorem31" => verify_theorem31(max_n, opts),
        "orbit_torus" => verify_orbit_torus(max_n + 2, opts),
        "orbit_certificates" => verify_orbit_certificates(max_n, opts),
        _ => return None,
    };
    Some(report)
}

/// Runs every check whose name contains `filter` (all of them for `None`).
pub fn run_suite(
    max_rank: usize,
    max_n: usize,
    filter: Option<&str>,
    opts: Options,
) -> Vec<VerificationReport> {
    CHECKS
        .iter()
        .filter(|name| filter.is_none_or(|f| name.contains(f)))
        .filter_map(|name| run_check(name, max_rank, max_n, opts))
        .collect()
}
