//! Exhaustive searches over `F_p` driven from a spec file.

use std::collections::BTreeMap;

use kupershmidt::linear::Matrix;
use kupershmidt::search::{
    enumerate_operators, solve_mc_linear_layer, strong_mc_solutions, Predicate, SearchContext,
    SearchSpec, DEFAULT_BUDGET,
};
use serde_json::{json, Value};

use crate::checks::Resolver;
use crate::error::{CliError, CliResult};
use crate::spec_file::{canonical_json, CheckRequest, SpecFile};

pub const PREDICATES: &[&str] = &[
    "kupershmidt",
    "nijenhuis",
    "rota-baxter",
    "bn-pair",
    "mc-strong",
    "mc-linear",
];

pub const DEFAULT_PREDICATE: &str = "nijenhuis";

#[derive(Clone, Debug, Default)]
pub struct SearchArgs {
    pub predicate: Option<String>,
    pub algebra: Option<String>,
    pub rep: Option<String>,
    pub twilled: Option<String>,
    pub budget: Option<u128>,
    pub workers: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub results: Vec<Matrix>,
    /// The search parameters, echoed in the output.
    pub spec: BTreeMap<&'static str, Value>,
}

impl SearchOutcome {
    pub fn count(&self) -> usize {
        self.results.len()
    }

    pub fn to_json(&self) -> String {
        let results: Vec<Value> = self.results.iter().map(matrix_json).collect();
        let spec: serde_json::Map<String, Value> = self
            .spec
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        canonical_json(&json!({
            "count": self.count(),
            "results": results,
            "spec": spec,
        }))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} solutions\n", self.count());
        for m in &self.results {
            let rows: Vec<String> = m
                .to_rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| s.to_canonical())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            out.push_str(&format!("[{}]\n", rows.join("; ")));
        }
        out
    }
}

fn matrix_json(m: &Matrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|s| Value::String(s.to_canonical())).collect()))
            .collect(),
    )
}

pub fn run_search(file: &SpecFile, args: &SearchArgs) -> CliResult<SearchOutcome> {
    let predicate = args.predicate.as_deref().unwrap_or(DEFAULT_PREDICATE);
    if !PREDICATES.contains(&predicate) {
        return Err(CliError::Usage(format!(
            "unknown predicate {predicate:?}; expected one of {}",
            PREDICATES.join(", ")
        )));
    }
    let req = CheckRequest {
        algebra: args.algebra.clone(),
        rep: args.rep.clone(),
        twilled: args.twilled.clone(),
        ..CheckRequest::new(predicate, "")
    };
    let r = Resolver::new(file, &req);
    let budget = args.budget.unwrap_or(DEFAULT_BUDGET);
    let mut spec = BTreeMap::new();
    spec.insert("predicate", json!(predicate));
    spec.insert("field", json!(file.field.to_string()));
    spec.insert("budget", json!(budget.to_string()));
    let mut context = serde_json::Map::new();
    let mut note = |key: &str, v: &Option<String>| {
        if let Some(v) = v {
            context.insert(key.to_string(), json!(v));
        }
    };
    note("algebra", &args.algebra);

    let results = match predicate {
        "mc-strong" | "mc-linear" => {
            note("twilled", &args.twilled);
            let ctx = r.twilled()?;
            if predicate == "mc-strong" {
                strong_mc_solutions(&ctx, budget, args.workers)?
            } else {
                solve_mc_linear_layer(&ctx)?.basis
            }
        }
        _ => {
            let (pred, ctx) = if predicate == "kupershmidt" {
                note(
                    "rep",
                    &Some(args.rep.clone().unwrap_or_else(|| "regular".into())),
                );
                (Predicate::Kupershmidt, SearchContext::Rep(r.rep()?))
            } else {
                let p = Predicate::parse(predicate).expect("listed predicate");
                (p, SearchContext::Algebra(r.algebra()?))
            };
            let mut search = SearchSpec::new(pred, ctx).with_budget(budget);
            if let Some(w) = args.workers {
                search = search.with_workers(w);
            }
            enumerate_operators(&search)?
        }
    };
    spec.insert("context", Value::Object(context));
    Ok(SearchOutcome { results, spec })
}
