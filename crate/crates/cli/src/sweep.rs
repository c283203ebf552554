//! Family verification and corpus sweeps.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use lambda_power::corpus::corpus;
use lambda_power::exact::{lambda_exact, ExactOptions, LambdaReport};
use lambda_power::groups::FiniteGroup;
use lambda_power::invariants::independence_number;
use lambda_power::oracle::{check_lower_equality, check_upper_classification, classify_alpha2, predict_lambda};
use lambda_power::build_power_graph;

use crate::cache::Cache;
use crate::{emit, Context, Family, EXIT_INEXACT, EXIT_MISMATCH, EXIT_OK};

/// The `(p, q, n)` cases checked when no range is given for `zpqn`.
const DEFAULT_ZPQN: [(usize, usize, u32); 6] = [(2, 3, 1), (3, 2, 1), (2, 3, 2), (3, 2, 2), (2, 5, 1), (5, 2, 1)];

/// Inclusive range `a..b`, `a..=b` or a single value.
pub fn parse_range(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("invalid range '{text}', expected e.g. 3..8 or 5");
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn family_specs(family: Family, range: Option<&str>, prime: usize) -> Result<Vec<String>, String> {
    let range = range.map(parse_range).transpose()?;
    let specs = match family {
        Family::Dihedral => {
            let (lo, hi) = range.unwrap_or((3, 8));
            if lo < 3 {
                return Err("dihedral parameter k (group order 2k) must be at least 3".into());
            }
            (lo..=hi).map(|k| format!("D{}", 2 * k)).collect()
        }
        Family::Quaternion => {
            let (lo, hi) = range.unwrap_or((2, 5));
            if lo < 2 {
                return Err("quaternion parameter k (group order 4k) must be at least 2".into());
            }
            (lo..=hi).map(|k| format!("Q{}", 4 * k)).collect()
        }
        Family::Cyclic => {
            let (lo, hi) = range.unwrap_or((1, 20));
            (lo.max(1)..=hi).map(|m| format!("Z{m}")).collect()
        }
        Family::ElementaryAbelian => {
            if !lambda_power::arith::is_prime(prime) {
                return Err(format!("--prime {prime} is not prime"));
            }
            let (lo, hi) = range.unwrap_or((1, 4));
            (lo.max(1)..=hi)
                .map(|e| vec![format!("Z{prime}"); e].join("x"))
                .collect()
        }
        Family::Zpqn => match range {
            None => DEFAULT_ZPQN
                .iter()
                .map(|&(p, q, n)| format!("Z{}", p * q.pow(n)))
                .collect(),
            Some((lo, hi)) => (lo.max(1)..=hi)
                .filter(|&m| lambda_power::arith::split_pqn(m).is_some())
                .map(|m| format!("Z{m}"))
                .collect(),
        },
    };
    Ok(specs)
}

/// λ reports for every group, computed in parallel, in input order.
fn reports(
    groups: &[FiniteGroup],
    opts: &ExactOptions,
    cache: Option<PathBuf>,
) -> Result<Vec<Result<LambdaReport, String>>, String> {
    let mut cache = cache.map(Cache::open).transpose()?;
    let keys: Vec<String> = groups
        .iter()
        .map(|g| Cache::key(&g.descriptor().to_string(), opts))
        .collect();
    let out: Vec<Result<LambdaReport, String>> = groups
        .par_iter()
        .zip(keys.par_iter())
        .map(|(g, key)| match cache.as_ref().and_then(|c| c.get(key)) {
            Some(r) => Ok(r.clone()),
            None => lambda_exact(g, opts).map_err(|e| e.to_string()),
        })
        .collect();
    if let Some(c) = cache.as_mut() {
        for (key, r) in keys.into_iter().zip(&out) {
            if let Ok(r) = r {
                if c.get(&key).is_none() {
                    c.insert(key, r)?;
                }
            }
        }
    }
    Ok(out)
}

fn csv_text(w: csv::Writer<Vec<u8>>) -> Result<String, String> {
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct VerifyRow {
    spec: String,
    order: usize,
    lambda_solver: String,
    lambda_oracle: String,
    source: String,
    #[serde(rename = "match")]
    matches: String,
}

pub fn verify(
    ctx: &Context,
    family: Family,
    range: Option<&str>,
    prime: usize,
    strict: bool,
    cache: Option<PathBuf>,
) -> Result<u8, String> {
    let specs = family_specs(family, range, prime)?;
    let groups: Vec<FiniteGroup> = specs.iter().map(|s| ctx.group(s)).collect::<Result<_, _>>()?;
    let opts = ExactOptions {
        witness: false,
        ..ctx.options()
    };
    let reports = reports(&groups, &opts, cache)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    let (mut mismatches, mut skipped) = (0, 0);
    for ((spec, g), report) in specs.iter().zip(&groups).zip(&reports) {
        let prediction = predict_lambda(g);
        let solver = report.as_ref().ok().and_then(|r| r.lambda);
        let matches = match (solver, prediction.value) {
            (Some(a), Some(b)) if a == b => "true",
            (Some(_), Some(_)) => {
                mismatches += 1;
                "false"
            }
            (None, _) => {
                skipped += 1;
                "skipped"
            }
            (Some(_), None) => "no-oracle",
        };
        if let Err(e) = report {
            eprintln!("{spec}: {e}");
        }
        w.serialize(VerifyRow {
            spec: spec.clone(),
            order: g.order(),
            lambda_solver: solver.map_or("skipped".into(), |v| v.to_string()),
            lambda_oracle: prediction.value.map_or(String::new(), |v| v.to_string()),
            source: prediction.source.map_or(String::new(), |s| s.tag().to_string()),
            matches: matches.to_string(),
        })
        .map_err(|e| e.to_string())?;
    }
    emit(&csv_text(w)?)?;

    if mismatches > 0 {
        eprintln!("{mismatches} instance(s) disagree with the closed form");
        Ok(EXIT_MISMATCH)
    } else if strict && skipped > 0 {
        eprintln!("{skipped} instance(s) skipped under --strict");
        Ok(EXIT_INEXACT)
    } else {
        Ok(EXIT_OK)
    }
}

#[derive(Serialize)]
struct EnumerateRow {
    spec: String,
    order: usize,
    lambda: Option<usize>,
    method: String,
    alpha: Option<usize>,
    alpha2_predicted: bool,
    alpha2_check: &'static str,
    lower_equality: &'static str,
    upper_check: &'static str,
    upper_equality: bool,
}

fn verdict(ok: Option<bool>) -> &'static str {
    match ok {
        Some(true) => "pass",
        Some(false) => "fail",
        None => "skipped",
    }
}

pub fn enumerate(ctx: &Context, max_order: usize, json: bool, cache: Option<PathBuf>) -> Result<u8, String> {
    let entries = corpus(max_order);
    let groups: Vec<FiniteGroup> = entries
        .iter()
        .map(|e| e.build().map_err(|err| format!("{}: {err}", e.spec())))
        .collect::<Result<_, _>>()?;
    let opts = ExactOptions {
        witness: false,
        ..ctx.options()
    };
    let reports = reports(&groups, &opts, cache)?;

    let rows: Vec<EnumerateRow> = groups
        .par_iter()
        .zip(&reports)
        .map(|(g, report)| {
            let lambda = report.as_ref().ok().and_then(|r| r.lambda);
            let pg = build_power_graph(g);
            let alpha = independence_number(&pg, ctx.limits.clique).ok().map(|w| w.value);
            let predicted = classify_alpha2(g);
            let alpha2 = alpha.map(|a| (a == 2) == predicted);
            let (lower, upper, equality) = match lambda {
                Some(l) => {
                    let lower = check_lower_equality(g, l, ctx.limits.dp).ok().and_then(|v| v.consistent);
                    let up = check_upper_classification(g, l);
                    let upper = if up.applicable { verdict(Some(up.consistent)) } else { "n/a" };
                    let lower = if g.order() < 2 { "n/a" } else { verdict(lower) };
                    (lower, upper, up.applicable && up.equality)
                }
                None => ("skipped", "skipped", false),
            };
            EnumerateRow {
                spec: g.descriptor().to_string(),
                order: g.order(),
                lambda,
                method: report.as_ref().map_or_else(|e| format!("error: {e}"), |r| r.method.clone()),
                alpha,
                alpha2_predicted: predicted,
                alpha2_check: verdict(alpha2),
                lower_equality: lower,
                upper_check: upper,
                upper_equality: equality,
            }
        })
        .collect();

    if json {
        emit(&(serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())? + "\n"))?;
    } else {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &rows {
            w.serialize(row).map_err(|e| e.to_string())?;
        }
        emit(&csv_text(w)?)?;
    }
    let failed = rows
        .iter()
        .filter(|r| [r.alpha2_check, r.lower_equality, r.upper_check].contains(&"fail"))
        .count();
    if failed > 0 {
        eprintln!("{failed} group(s) failed a classification check");
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}
