//! Unipotent-orbit data and the combinatorial vanishing verdicts.
//!
//! A unipotent orbit of `GL_n` is a [`SortedPartition`] of `n`. The
//! semi-Whittaker support of `(μ, λ)` is the set of minimal coset
//! representatives `w ∈ W(P_{μ^⊤})\W(G)` with `w(Δ_λ) ⊂ Φ^-`; it must be
//! empty whenever some prefix of `λ` strictly outgrows the same prefix of
//! `μ`, and for `λ = μ` it is the single element `w_μ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cosets::{construct_w_mu, CosetCode, CosetSpace};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partitions::{
    dominance_compare, enumerate_partitions, partial_sum_violation, Composition, Dominance,
    SortedPartition,
};
use crate::text::join;
use crate::weyl::{Permutation, Root, RootSet};

/// Exponents of `h_O(t)`: the per-part strings `(p-1, p-3, ..., 1-p)`
/// merged in decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTorus {
    pub orbit: SortedPartition,
    pub exponents: Vec<i64>,
}

impl OrbitTorus {
    pub fn rank(&self) -> usize {
        self.exponents.len() - 1
    }
}

impl fmt::Display for OrbitTorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.exponents, ","))
    }
}

pub fn torus_exponents(orbit: &SortedPartition) -> OrbitTorus {
    let mut exponents: Vec<i64> = orbit
        .parts()
        .iter()
        .flat_map(|&p| {
            let p = p as i64;
            (0..p).map(move |m| p - 1 - 2 * m)
        })
        .collect();
    exponents.sort_unstable_by(|a, b| b.cmp(a));
    OrbitTorus {
        orbit: orbit.clone(),
        exponents,
    }
}

/// `m` in `h_O(t) x_ρ(a) h_O(t)^{-1} = x_ρ(t^m a)`.
pub fn root_weight(torus: &OrbitTorus, root: &Root) -> i64 {
    torus.exponents[root.i() - 1] - torus.exponents[root.j() - 1]
}

/// Positive roots of weight at least `level`: the root support of `U_l(O)`.
pub fn u_level(orbit: &SortedPartition, level: usize) -> RootSet {
    let torus = torus_exponents(orbit);
    let rank = torus.rank();
    let roots = RootSet::all_positive(rank)
        .iter()
        .filter(|r| root_weight(&torus, r) >= level as i64)
        .copied()
        .collect::<Vec<_>>();
    RootSet::from_roots(rank, roots).expect("roots of the same rank")
}

/// Simple roots inside the Levi of `P_λ`: every `α_i` except the block
/// boundaries `i = p_1, p_1 + p_2, ...`.
pub fn delta_lambda(lambda: &Composition) -> RootSet {
    let rank = lambda.n() - 1;
    let boundaries = lambda.boundaries();
    RootSet::simple(rank, (1..=rank).filter(|i| !boundaries.contains(i))).expect("indices in range")
}

/// Negative roots `e_i - e_j`, `i > j`, with both coordinates in one block.
pub fn levi_negative_roots(parabolic: &Composition) -> RootSet {
    let rank = parabolic.n() - 1;
    let labels = parabolic.block_labels();
    let roots = (1..=rank + 1)
        .flat_map(|i| (1..i).map(move |j| (i, j)))
        .filter(|&(i, j)| labels[i - 1] == labels[j - 1])
        .map(|(i, j)| Root::new(i, j).expect("distinct"))
        .collect::<Vec<_>>();
    RootSet::from_roots(rank, roots).expect("roots of the same rank")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Vanishes,
    Nonvanishing,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Vanishes => "vanishes",
            Verdict::Nonvanishing => "nonvanishing",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vanishes" => Ok(Verdict::Vanishes),
            "nonvanishing" => Ok(Verdict::Nonvanishing),
            _ => Err(Error::parse(s, "expected vanishes or nonvanishing")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub mu: SortedPartition,
    pub lambda: Composition,
    pub verdict: Verdict,
    pub violation_index: Option<usize>,
    /// Coset codes `w` with `w(Δ_λ) ⊂ Φ^-`.
    pub support: Vec<CosetCode>,
    /// The part of `support` with `w(Δ_λ) ⊂ Φ^- − Φ^-_{μ^⊤}`.
    pub refined_support: Vec<CosetCode>,
}

impl SupportReport {
    /// Human-readable descriptions of every broken report invariant.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.verdict == Verdict::Vanishes && !self.support.is_empty() {
            out.push(format!(
                "verdict vanishes (l={}) but {} coset(s) send Δ_λ negative, e.g. {}",
                self.violation_index.unwrap_or(0),
                self.support.len(),
                self.support[0]
            ));
        }
        if self.lambda == self.mu.to_composition() {
            let w_mu = construct_w_mu(&self.mu);
            if self.support != [w_mu.clone()] {
                out.push(format!(
                    "support at λ=μ has {} element(s), expected exactly w_μ = {}",
                    self.support.len(),
                    w_mu
                ));
            }
            if self.refined_support != [w_mu.clone()] {
                out.push(format!(
                    "refined support at λ=μ has {} element(s), expected exactly w_μ = {}",
                    self.refined_support.len(),
                    w_mu
                ));
            }
        }
        out
    }
}

/// `w(α_k) < 0` for every `k` in `simple`, in one-line terms.
#[inline]
fn all_negative(w: &Permutation, simple: &[usize]) -> bool {
    simple.iter().all(|&k| w.apply(k) > w.apply(k + 1))
}

/// Support and refined support of `λ` over an already enumerated space.
pub fn support_in(
    space: &CosetSpace,
    lambda: &Composition,
    exec: Execution,
) -> (Vec<CosetCode>, Vec<CosetCode>) {
    let simple = delta_lambda(lambda).simple_indices();
    let labels = space.parabolic().block_labels();
    let flags = exec.map(space.permutations(), |w| {
        if !all_negative(w, &simple) {
            return (false, false);
        }
        let refined = simple
            .iter()
            .all(|&k| labels[w.apply(k) - 1] != labels[w.apply(k + 1) - 1]);
        (true, refined)
    });
    let mut support = Vec::new();
    let mut refined = Vec::new();
    for (code, (inside, sharp)) in space.codes().iter().zip(flags) {
        if inside {
            support.push(code.clone());
        }
        if sharp {
            refined.push(code.clone());
        }
    }
    (support, refined)
}

pub fn semiwhittaker_verdict_in(
    space: &CosetSpace,
    mu: &SortedPartition,
    lambda: &Composition,
    exec: Execution,
) -> Result<SupportReport> {
    let violation_index = partial_sum_violation(lambda, mu)?;
    if space.parabolic() != &mu.transpose().to_composition() {
        return Err(Error::parse(
            &space.parabolic().to_string(),
            "coset space is not for the transpose of μ",
        ));
    }
    let (support, refined_support) = support_in(space, lambda, exec);
    Ok(SupportReport {
        mu: mu.clone(),
        lambda: lambda.clone(),
        verdict: if violation_index.is_some() {
            Verdict::Vanishes
        } else {
            Verdict::Nonvanishing
        },
        violation_index,
        support,
        refined_support,
    })
}

pub fn semiwhittaker_verdict(mu: &SortedPartition, lambda: &Composition) -> Result<SupportReport> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            left: mu.n(),
            right: lambda.n(),
        });
    }
    let exec = Execution::default();
    let space = CosetSpace::new(&mu.transpose().to_composition(), exec);
    semiwhittaker_verdict_in(&space, mu, lambda, exec)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRow {
    pub orbit: SortedPartition,
    /// Relation of `orbit` to `μ`.
    pub dominance: Dominance,
    pub verdict: Verdict,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitCertificate {
    pub mu: SortedPartition,
    pub rows: Vec<CertificateRow>,
    /// Maximal orbits (in dominance order) among the nonvanishing rows.
    pub attached: Vec<SortedPartition>,
}

impl Serialize for OrbitCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl OrbitCertificate {
    pub fn is_consistent(&self) -> bool {
        self.rows.iter().all(|r| r.consistent) && self.attached == [self.mu.clone()]
    }
}

pub fn attached_orbit_certificate(mu: &SortedPartition) -> OrbitCertificate {
    attached_orbit_certificate_with(mu, Execution::default(), None)
}

/// Builds the certificate; `perturb` replaces the `λ` fed to the support
/// computation of one row (used to show the check is not vacuous).
pub(crate) fn attached_orbit_certificate_with(
    mu: &SortedPartition,
    exec: Execution,
    perturb: Option<(&SortedPartition, Composition)>,
) -> OrbitCertificate {
    let space = CosetSpace::new(&mu.transpose().to_composition(), Execution::Sequential);
    let orbits = enumerate_partitions(mu.n()).expect("n >= 1");
    let rows = exec.map(&orbits, |orbit| {
        let lambda = match perturb {
            Some((target, ref replacement)) if target == orbit => replacement.clone(),
            _ => orbit.to_composition(),
        };
        let dominance = dominance_compare(orbit, mu).expect("same n").relation;
        let report =
            semiwhittaker_verdict_in(&space, mu, &lambda, Execution::Sequential).expect("same n");
        // Reports are judged against the row's orbit, not the fed λ.
        let report = SupportReport {
            lambda: orbit.to_composition(),
            ..report
        };
        let vanishes = report.verdict == Verdict::Vanishes;
        let consistent =
            vanishes == dominance.not_below() && report.invariant_violations().is_empty();
        CertificateRow {
            orbit: orbit.clone(),
            dominance,
            verdict: report.verdict,
            consistent,
        }
    });
    let nonvanishing: Vec<&SortedPartition> = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Nonvanishing)
        .map(|r| &r.orbit)
        .collect();
    let attached = nonvanishing
        .iter()
        .filter(|o| {
            !nonvanishing.iter().any(|other| {
                dominance_compare(other, o).expect("same n").relation == Dominance::Greater
            })
        })
        .map(|o| (*o).clone())
        .collect();
    OrbitCertificate {
        mu: mu.clone(),
        rows,
        attached,
    }
}

impl fmt::Display for OrbitCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}",
                row.orbit,
                row.dominance,
                row.verdict,
                if row.consistent {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            )?;
        }
        let attached: Vec<String> = self.attached.iter().map(ToString::to_string).collect();
        write!(f, "attached orbit: {}", attached.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> SortedPartition {
        s.parse().unwrap()
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn torus_examples() {
        assert_eq!(
            torus_exponents(&part("3,3,1")).exponents,
            vec![2, 2, 0, 0, 0, -2, -2]
        );
        assert_eq!(torus_exponents(&part("1,1,1,1")).exponents, vec![0; 4]);
        assert_eq!(torus_exponents(&part("5")).exponents, vec![4, 2, 0, -2, -4]);
        assert_eq!(
            torus_exponents(&part("3,3,1")).to_string(),
            "2,2,0,0,0,-2,-2"
        );
    }

    #[test]
    fn weights() {
        let h = torus_exponents(&part("2,1"));
        assert_eq!(h.exponents, vec![1, 0, -1]);
        let r13 = Root::new(1, 3).unwrap();
        assert_eq!(root_weight(&h, &r13), 2);
        assert_eq!(root_weight(&h, &Root::new(1, 2).unwrap()), 1);
        assert_eq!(root_weight(&h, &r13.negate()), -2);
    }

    #[test]
    fn u_levels() {
        let o = part("2,1");
        let l2 = u_level(&o, 2);
        assert_eq!(
            l2.iter().copied().collect::<Vec<_>>(),
            vec![Root::new(1, 3).unwrap()]
        );
        assert_eq!(u_level(&o, 1), RootSet::all_positive(2));
        assert_eq!(u_level(&part("3,2,2"), 0).len(), 21);
    }

    #[test]
    fn delta_and_levi() {
        assert_eq!(
            delta_lambda(&comp("4,4,2")).simple_indices(),
            vec![1, 2, 3, 5, 6, 7, 9]
        );
        assert!(delta_lambda(&Composition::ones(5).unwrap()).is_empty());
        assert_eq!(delta_lambda(&comp("5")).len(), 4);
        let levi = levi_negative_roots(&comp("2,1"));
        assert_eq!(
            levi.iter().copied().collect::<Vec<_>>(),
            vec![Root::new(2, 1).unwrap()]
        );
        assert!(levi_negative_roots(&Composition::ones(4).unwrap()).is_empty());
        assert_eq!(levi_negative_roots(&comp("3")).len(), 3);
    }

    #[test]
    fn verdict_examples() {
        let r = semiwhittaker_verdict(&part("3,3"), &comp("4,1,1")).unwrap();
        assert_eq!((r.verdict, r.violation_index), (Verdict::Vanishes, Some(1)));
        assert!(r.support.is_empty());
        let r = semiwhittaker_verdict(&part("4,2,2,1"), &comp("3,3,3")).unwrap();
        assert_eq!((r.verdict, r.violation_index), (Verdict::Vanishes, Some(3)));
        assert!(r.support.is_empty());
        let mu = part("4,3,3");
        let r = semiwhittaker_verdict(&mu, &mu.to_composition()).unwrap();
        assert_eq!(r.verdict, Verdict::Nonvanishing);
        assert_eq!(r.support, vec![construct_w_mu(&mu)]);
        assert!(r.invariant_violations().is_empty());
        assert!(semiwhittaker_verdict(&mu, &comp("3,3")).is_err());
    }

    #[test]
    fn certificate_small() {
        let cert = attached_orbit_certificate(&part("2,1"));
        let rows: Vec<(String, Dominance, Verdict)> = cert
            .rows
            .iter()
            .map(|r| (r.orbit.to_string(), r.dominance, r.verdict))
            .collect();
        assert_eq!(
            rows,
            vec![
                ("3".to_string(), Dominance::Greater, Verdict::Vanishes),
                ("2,1".to_string(), Dominance::Equal, Verdict::Nonvanishing),
                ("1,1,1".to_string(), Dominance::Less, Verdict::Nonvanishing),
            ]
        );
        assert!(cert.is_consistent());
        assert_eq!(cert.attached, vec![part("2,1")]);
    }

    #[test]
    fn certificate_extremes() {
        let cert = attached_orbit_certificate(&part("4"));
        assert!(cert.is_consistent());
        assert!(cert.rows[1..]
            .iter()
            .all(|r| r.dominance == Dominance::Less));
        let cert = attached_orbit_certificate(&part("1,1,1,1"));
        assert!(cert.is_consistent());
        let last = cert.rows.last().unwrap();
        assert_eq!(last.verdict, Verdict::Nonvanishing);
        assert!(cert.rows[..cert.rows.len() - 1]
            .iter()
            .all(|r| r.dominance == Dominance::Greater && r.verdict == Verdict::Vanishes));
    }

    #[test]
    fn certificate_json_is_row_array() {
        let js = serde_json::to_value(attached_orbit_certificate(&part("1"))).unwrap();
        assert_eq!(
            js,
            serde_json::json!([{"orbit": [1], "dominance": "equal", "verdict": "nonvanishing", "consistent": true}])
        );
    }
}
