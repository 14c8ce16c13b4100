//! Named verification suites: each closed form checked against the exhaustive
//! oracle, the lemma multisets, the counting identities and the entropy argmin.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitstring::BitString;
use crate::budget::Budget;
use crate::entropy::{
    compositions, entropy_report, predicted_weights_double, predicted_weights_single,
    sanity_identity_counts_double, sanity_identity_weights_double, weight_distribution, IdentityCheck,
    ENTROPY_TOL,
};
use crate::error::{Error, Result};
use crate::oracle::{oracle_distribution, oracle_space, OracleBudget};
use crate::space::{
    cluster_size_closed, cluster_size_recursive, cluster_size_simple, maximal_initials_cluster,
    maximal_initials_total, singleton_count, singletons_by_cluster,
};

/// Largest `n` the oracle-backed suites scan.
pub const SUITE_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Clusters,
    Initials,
    Singletons,
    Lemma1,
    Lemma4,
    IdentityB,
    IdentityC,
    EntropyMin,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Clusters,
        Suite::Initials,
        Suite::Singletons,
        Suite::Lemma1,
        Suite::Lemma4,
        Suite::IdentityB,
        Suite::IdentityC,
        Suite::EntropyMin,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Clusters => "clusters",
            Suite::Initials => "initials",
            Suite::Singletons => "singletons",
            Suite::Lemma1 => "lemma1",
            Suite::Lemma4 => "lemma4",
            Suite::IdentityB => "identityB",
            Suite::IdentityC => "identityC",
            Suite::EntropyMin => "entropy-min",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::InvalidRange(format!("unknown suite {s:?}")))
    }
}

/// One checked case.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Case {
    pub name: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl Case {
    fn compare<T: PartialEq + fmt::Debug>(name: &str, input: String, expected: T, actual: T) -> Case {
        Case {
            name: name.to_string(),
            input,
            ok: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        }
    }

    fn identity(c: IdentityCheck) -> Case {
        Case {
            name: c.name.to_string(),
            input: format!("{:?}", c.composition),
            expected: c.rhs.to_string(),
            actual: c.lhs.to_string(),
            ok: c.holds,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub max_m: usize,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Case> {
        self.cases.iter().filter(|c| !c.ok)
    }
}

fn listing_budget() -> OracleBudget {
    OracleBudget {
        max_listing_n: 0,
        ..OracleBudget::default()
    }
}

fn need(n: usize, budget: &Budget) -> Result<()> {
    if n > budget.max_n() {
        return Err(Error::BudgetExceeded {
            what: "n",
            value: n as u64,
            limit: budget.max_n() as u64,
        });
    }
    Ok(())
}

/// Every (x, n) with |x| ≤ max_m and |x| ≤ n ≤ min(max_m + 4, 14).
fn grid(max_m: usize, budget: &Budget) -> Result<Vec<(BitString, usize)>> {
    let n_max = (max_m + 4).min(SUITE_MAX_N);
    need(max_m.min(n_max), budget)?;
    let n_max = n_max.min(budget.max_n());
    let mut out = vec![];
    for m in 0..=max_m.min(n_max) {
        for x in BitString::all(m) {
            for n in m..=n_max {
                out.push((x.clone(), n));
            }
        }
    }
    Ok(out)
}

fn label(x: &BitString, n: usize) -> String {
    format!("x={x} n={n}")
}

fn check_clusters(x: &BitString, n: usize) -> Result<Vec<Case>> {
    let space = oracle_space(n, x, &listing_budget())?;
    let (m, h) = (x.len(), x.hamming_weight());
    let oracle = space.cluster_sizes();
    let mut closed = vec![];
    let mut simple = vec![];
    let mut rec = vec![];
    for c in 0..=n - m {
        closed.push(cluster_size_closed::<u64>(n, m, h, c)?);
        simple.push(cluster_size_simple::<u64>(n, m, h, c)?);
        rec.push(cluster_size_recursive::<u64>(n, x, c)?);
    }
    Ok(vec![
        Case::compare("cluster sizes, closed form", label(x, n), oracle.clone(), closed),
        Case::compare("cluster sizes, simple form", label(x, n), oracle.clone(), simple),
        Case::compare("cluster sizes, recursion", label(x, n), oracle, rec),
    ])
}

fn check_initials(x: &BitString, n: usize) -> Result<Vec<Case>> {
    let (m, h) = (x.len(), x.hamming_weight());
    if m == 0 {
        return Ok(vec![]);
    }
    let oracle = oracle_space(n, x, &listing_budget())?.maximal_initials_by_cluster();
    let split = (0..=n - m)
        .map(|c| maximal_initials_cluster::<u64>(n, m, h, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(vec![
        Case::compare(
            "maximal initials, total",
            label(x, n),
            oracle.iter().sum::<u64>(),
            maximal_initials_total::<u64>(n, m)?,
        ),
        Case::compare("maximal initials, per cluster", label(x, n), oracle, split),
    ])
}

fn check_singletons(x: &BitString, n: usize) -> Result<Vec<Case>> {
    let m = x.len();
    if m == 0 {
        return Ok(vec![]);
    }
    let space = oracle_space(n, x, &listing_budget())?;
    let h = x.hamming_weight();
    let mut per_cluster = vec![0u64; n - m + 1];
    for y in space.singletons() {
        per_cluster[y.hamming_weight() - h] += 1;
    }
    Ok(vec![
        Case::compare(
            "singletons, closed form",
            label(x, n),
            per_cluster.iter().sum::<u64>(),
            singleton_count::<u64>(n, x)?,
        ),
        Case::compare(
            "singletons, per cluster",
            label(x, n),
            per_cluster,
            singletons_by_cluster::<u64>(n, x)?,
        ),
    ])
}

/// Among all x of length m, the singleton count peaks at the constant strings and
/// bottoms out at the alternating ones (for n > m; at n = m every count is one).
fn singleton_extremes(m: usize, n: usize) -> Result<Vec<Case>> {
    let counts = BitString::all(m)
        .map(|x| Ok((singleton_count::<u64>(n, &x)?, x)))
        .collect::<Result<Vec<_>>>()?;
    let hi = counts.iter().map(|e| e.0).max().unwrap();
    let lo = counts.iter().map(|e| e.0).min().unwrap();
    let pick = |v: u64| -> BTreeSet<String> {
        counts.iter().filter(|e| e.0 == v).map(|e| e.1.to_string()).collect()
    };
    let constants: BTreeSet<String> = [0, 1].map(|s| BitString::constant(s, m).to_string()).into();
    let alternating: BTreeSet<String> = [0, 1].map(|s| BitString::alternating(s, m).to_string()).into();
    let input = format!("m={m} n={n}");
    Ok(vec![
        Case::compare("singleton argmax", input.clone(), constants, pick(hi)),
        Case::compare("singleton argmin", input, alternating, pick(lo)),
    ])
}

fn lemma_cases(max_m: usize, deletions: usize, budget: &Budget) -> Result<Vec<Case>> {
    need(max_m + deletions, budget)?;
    let xs: Vec<BitString> = (0..=max_m).flat_map(BitString::all).collect();
    let oracle = OracleBudget {
        max_n: budget.max_n(),
        ..listing_budget()
    };
    let name = if deletions == 1 {
        "single-insertion multiset"
    } else {
        "double-insertion multiset"
    };
    xs.par_iter()
        .map(|x| {
            let n = x.len() + deletions;
            let predicted = if deletions == 1 {
                predicted_weights_single(x)
            } else {
                predicted_weights_double(x)
            };
            let actual = oracle_distribution(n, x, &oracle)?;
            Ok(Case::compare(name, label(x, n), actual.counts, predicted.counts))
        })
        .collect()
}

/// For each m ≤ max_m and one or two deletions, the strings of minimum entropy are
/// exactly 0^m and 1^m. With one deletion the same holds for H_α, α ∈ {0.5, 2, 3}.
fn entropy_min_cases(max_m: usize, budget: &Budget) -> Result<Vec<Case>> {
    need(max_m + 2, budget)?;
    let alphas = [0.5, 2.0, 3.0];
    let mut out = vec![];
    for m in 1..=max_m {
        let constants: BTreeSet<String> = [0, 1].map(|s| BitString::constant(s, m).to_string()).into();
        for deletions in [1usize, 2] {
            let n = m + deletions;
            let xs: Vec<BitString> = BitString::all(m).collect();
            let reports = xs
                .par_iter()
                .map(|x| entropy_report(&weight_distribution(n, x, budget)?, &alphas))
                .collect::<Result<Vec<_>>>()?;
            let mut measures: Vec<(String, Vec<f64>)> =
                vec![("Shannon".into(), reports.iter().map(|r| r.shannon).collect())];
            if deletions == 1 {
                for (i, a) in alphas.iter().enumerate() {
                    measures.push((format!("Renyi {a}"), reports.iter().map(|r| r.renyi[i].1).collect()));
                }
            }
            for (what, values) in measures {
                let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
                let argmin: BTreeSet<String> = xs
                    .iter()
                    .zip(&values)
                    .filter(|(_, &v)| v <= lo + ENTROPY_TOL)
                    .map(|(x, _)| x.to_string())
                    .collect();
                out.push(Case::compare(
                    &format!("{what} entropy argmin"),
                    format!("m={m} n={n}"),
                    constants.clone(),
                    argmin,
                ));
            }
        }
    }
    Ok(out)
}

fn per_point(
    max_m: usize,
    budget: &Budget,
    check: impl Fn(&BitString, usize) -> Result<Vec<Case>> + Sync,
) -> Result<Vec<Case>> {
    let points = grid(max_m, budget)?;
    let nested = points
        .par_iter()
        .map(|(x, n)| check(x, *n))
        .collect::<Result<Vec<_>>>()?;
    Ok(nested.into_iter().flatten().collect())
}

pub fn run_suite(suite: Suite, max_m: usize, budget: &Budget) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Clusters => per_point(max_m, budget, check_clusters)?,
        Suite::Initials => per_point(max_m, budget, check_initials)?,
        Suite::Singletons => {
            let mut cases = per_point(max_m, budget, check_singletons)?;
            let n_max = (max_m + 4).min(SUITE_MAX_N).min(budget.max_n());
            for m in 1..=max_m.min(n_max) {
                for n in m + 1..=n_max {
                    cases.extend(singleton_extremes(m, n)?);
                }
            }
            cases
        }
        Suite::Lemma1 => lemma_cases(max_m, 1, budget)?,
        Suite::Lemma4 => lemma_cases(max_m, 2, budget)?,
        Suite::IdentityB => (1..=max_m)
            .flat_map(compositions)
            .map(|k| sanity_identity_counts_double(&k).map(Case::identity))
            .collect::<Result<_>>()?,
        Suite::IdentityC => (1..=max_m)
            .flat_map(compositions)
            .map(|k| sanity_identity_weights_double(&k).map(Case::identity))
            .collect::<Result<_>>()?,
        Suite::EntropyMin => entropy_min_cases(max_m, budget)?,
    };
    Ok(SuiteReport {
        suite: suite.name(),
        max_m,
        cases,
    })
}
