use anyhow::{bail, Result};
use delkit::entropy::{g_chain, sweep};
use delkit::oracle::{oracle_count, oracle_masks, OracleBudget};
use delkit::verify::{run_suite, Suite, SuiteReport};
use delkit::{
    count_embeddings_dp, count_embeddings_runs, entropy_report, enumerate_masks, mu, shannon_entropy,
    upsilon_size, weight_distribution, weight_distribution_by_cluster, BitString, Budget, Count, Mask,
};
use serde_json::{json, Value};

use crate::output::{float, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Dp,
    Runs,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Dp => "dp",
            Method::Runs => "runs",
            Method::Oracle => "oracle",
        }
    }
}

fn oracle_budget(budget: &Budget) -> OracleBudget {
    OracleBudget {
        max_n: budget.max_n(),
        max_listing_n: budget.max_n(),
        ..OracleBudget::default()
    }
}

fn space_sizes(n: usize, m: usize) -> Result<(u128, u128)> {
    Ok((mu::<u128>(n, m)?, upsilon_size::<u128>(n, m)?))
}

pub fn count(y: &BitString, x: &BitString, method: Method, with_masks: bool, budget: &Budget) -> Result<Output> {
    let weight: Count = match method {
        Method::Dp => count_embeddings_dp(y, x)?,
        Method::Runs => count_embeddings_runs(y, x)?,
        Method::Oracle => oracle_count(y, x, &oracle_budget(budget))?.into(),
    };
    let masks: Option<Vec<Mask>> = if with_masks {
        Some(match method {
            Method::Oracle => oracle_masks(y, x, &oracle_budget(budget))?,
            _ => enumerate_masks(y, x, budget)?,
        })
    } else {
        None
    };
    let mut text = format!("{weight}\n");
    let mut rows = vec![];
    match &masks {
        Some(list) => {
            for (i, m) in list.iter().enumerate() {
                text.push_str(&format!("{m}\n"));
                rows.push(vec![
                    y.to_string(),
                    x.to_string(),
                    method.name().into(),
                    weight.to_string(),
                    (i + 1).to_string(),
                    m.to_string(),
                ]);
            }
        }
        None => rows.push(vec![y.to_string(), x.to_string(), method.name().into(), weight.to_string()]),
    }
    let header: &[&str] = if masks.is_some() {
        &["y", "x", "method", "weight", "mask_index", "mask"]
    } else {
        &["y", "x", "method", "weight"]
    };
    let json = json!({
        "schema": "delkit/count/v1",
        "y": y.to_string(),
        "x": x.to_string(),
        "method": method.name(),
        "weight": weight.to_string().parse::<Value>()?,
        "masks": masks.map(|l| l.iter().map(|m| m.indices().iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>()),
    });
    let mut out = Output::table(header, rows, json);
    out.text = Some(text);
    Ok(out)
}

pub fn distribution(x: &BitString, n: usize, by_cluster: bool, budget: &Budget) -> Result<Output> {
    let (mu, ups) = space_sizes(n, x.len())?;
    let d = if by_cluster {
        weight_distribution_by_cluster(n, x, budget)?
    } else {
        weight_distribution(n, x, budget)?
    };
    let lead = |v: Vec<String>| {
        let mut r = vec![x.to_string(), n.to_string(), mu.to_string(), ups.to_string()];
        r.extend(v);
        r
    };
    let (header, rows, json_rows): (&[&str], Vec<Vec<String>>, Vec<Value>) = match &d.by_cluster {
        Some(parts) => {
            let mut rows = vec![];
            let mut js = vec![];
            for (c, part) in parts.iter().enumerate() {
                for (w, k) in part {
                    rows.push(lead(vec![c.to_string(), w.to_string(), k.to_string()]));
                    js.push(json!({"cluster": c, "weight": w, "count": k}));
                }
            }
            (&["x", "n", "mu", "upsilon", "cluster", "weight", "count"], rows, js)
        }
        None => (
            &["x", "n", "mu", "upsilon", "weight", "count"],
            d.counts.iter().map(|(w, k)| lead(vec![w.to_string(), k.to_string()])).collect(),
            d.counts.iter().map(|(w, k)| json!({"weight": w, "count": k})).collect(),
        ),
    };
    let json = json!({
        "schema": "delkit/distribution/v1",
        "x": x.to_string(),
        "n": n,
        "mu": mu,
        "upsilon": ups,
        "rows": json_rows,
    });
    Ok(Output::table(header, rows, json))
}

pub fn sweep_cmd(m: usize, n: usize, alphas: &[f64], force: bool, budget: &Budget) -> Result<Output> {
    if m > 12 && !force {
        bail!(delkit::Error::InvalidRange(format!("m = {m} exceeds 12; pass --force to sweep anyway")));
    }
    let (mu, ups) = space_sizes(n, m)?;
    let rows = sweep(m, n, alphas, budget)?;
    let mut header = vec!["x".to_string(), "n".into(), "mu".into(), "upsilon".into(), "H".into()];
    header.extend(alphas.iter().map(|a| format!("R_{a}")));
    header.push("Hmin".into());
    let csv_rows = rows
        .iter()
        .map(|r| {
            let mut v = vec![r.x.to_string(), n.to_string(), mu.to_string(), ups.to_string(), float(r.report.shannon)];
            v.extend(r.report.renyi.iter().map(|&(_, h)| float(h)));
            v.push(float(r.report.min_entropy));
            v
        })
        .collect();
    let json = json!({
        "schema": "delkit/sweep/v1",
        "m": m,
        "n": n,
        "mu": mu,
        "upsilon": ups,
        "alphas": alphas,
        "rows": rows.iter().map(|r| json!({
            "x": r.x.to_string(),
            "shannon": r.report.shannon,
            "renyi": r.report.renyi.iter().map(|&(a, h)| json!({"alpha": a, "value": h})).collect::<Vec<_>>(),
            "min_entropy": r.report.min_entropy,
        })).collect::<Vec<_>>(),
    });
    Ok(Output {
        header,
        rows: csv_rows,
        json,
        text: None,
    })
}

pub fn gchain(x: &BitString, deletions: usize, budget: &Budget) -> Result<Output> {
    if x.is_empty() {
        bail!(delkit::Error::InvalidRange("g needs a nonempty x".into()));
    }
    let n = x.len() + deletions;
    let (mu, ups) = space_sizes(n, x.len())?;
    let mut rows = vec![];
    let mut js = vec![];
    for (step, s) in g_chain(x).iter().enumerate() {
        let h: f64 = shannon_entropy(&weight_distribution(n, s, budget)?);
        rows.push(vec![
            step.to_string(),
            s.to_string(),
            n.to_string(),
            mu.to_string(),
            ups.to_string(),
            float(h),
        ]);
        js.push(json!({"step": step, "x": s.to_string(), "H": h}));
    }
    let json = json!({
        "schema": "delkit/gchain/v1",
        "x": x.to_string(),
        "n": n,
        "deletions": deletions,
        "mu": mu,
        "upsilon": ups,
        "rows": js,
    });
    Ok(Output::table(&["step", "x", "n", "mu", "upsilon", "H"], rows, json))
}

pub fn verify(suite: Suite, max_m: usize, budget: &Budget) -> Result<(Output, SuiteReport)> {
    let report = run_suite(suite, max_m, budget)?;
    let rows = report
        .cases
        .iter()
        .map(|c| {
            vec![
                report.suite.to_string(),
                c.name.clone(),
                c.input.clone(),
                c.expected.clone(),
                c.actual.clone(),
                c.ok.to_string(),
            ]
        })
        .collect();
    let json = json!({
        "schema": "delkit/verify/v1",
        "suite": report.suite,
        "max_m": max_m,
        "passed": report.passed(),
        "cases": report.cases,
    });
    Ok((
        Output::table(&["suite", "case", "input", "expected", "actual", "ok"], rows, json),
        report,
    ))
}

/// Entropy report for a single (x, n), used by `distribution --entropy`.
pub fn entropy_rows(x: &BitString, n: usize, alphas: &[f64], budget: &Budget) -> Result<Output> {
    let (mu, ups) = space_sizes(n, x.len())?;
    let d = weight_distribution(n, x, budget)?;
    let r = entropy_report(&d, alphas)?;
    let mut header = vec!["x".to_string(), "n".into(), "mu".into(), "upsilon".into(), "H".into()];
    header.extend(alphas.iter().map(|a| format!("R_{a}")));
    header.push("Hmin".into());
    let mut row = vec![x.to_string(), n.to_string(), mu.to_string(), ups.to_string(), float(r.shannon)];
    row.extend(r.renyi.iter().map(|&(_, h)| float(h)));
    row.push(float(r.min_entropy));
    let json = json!({
        "schema": "delkit/entropy/v1",
        "x": x.to_string(),
        "n": n,
        "mu": mu,
        "upsilon": ups,
        "shannon": r.shannon,
        "renyi": r.renyi.iter().map(|&(a, h)| json!({"alpha": a, "value": h})).collect::<Vec<_>>(),
        "min_entropy": r.min_entropy,
    });
    Ok(Output {
        header,
        rows: vec![row],
        json,
        text: None,
    })
}
