//! Consequence suites: catalog expectations plus an exhaustive sweep over F3,
//! with every derived statement tallied under a named group.

use std::collections::BTreeMap;
use std::time::Instant;

use kupershmidt::algebra::{
    dual_representation, regular_representation, LeibnizAlgebra, Representation, TwilledContext,
};
use kupershmidt::cochain::{
    check_maurer_cartan, dual_kn_from_mc, mc_from_dual_kn, theta_twist, tilde_varrho_bracket,
};
use kupershmidt::forms::{
    check_bn_structure, check_quadratic, check_rbn_structure, check_rn_structure, check_ybe,
    rbn_rn_transfer, BilinearForm, Symmetry, Tensor2,
};
use kupershmidt::linear::{solve_linear, vec_add, FieldSpec, LinearSolution, Matrix};
use kupershmidt::operators::{
    check_compatible, check_kupershmidt, check_nijenhuis, check_nk_condition, check_rota_baxter,
    lifted_algebra, nijenhuis_from_compatible, LinearOperator,
};
use kupershmidt::pairs::{
    block_diagonal, check_dual_nijenhuis_pair, check_kn_structure, check_kn_structure_with,
    check_nijenhuis_pair, deformation_from_pair, dual_kn_from_compatible, sum_nijenhuis_on_twilled,
    KnMode, KnStructure, OperatorPair,
};
use kupershmidt::report::CheckReport;
use kupershmidt::search::enumerate_matrices;
use serde_json::{json, Value};

use crate::catalog::{catalog, entry, nil2, planes};
use crate::checks::{deformation_samples, hat_tilde_report, run_check, verdict};
use crate::error::{CliError, CliResult};
use crate::spec_file::canonical_json;

/// Name of the sweep that is not backed by a catalog file.
pub const EXHAUSTIVE: &str = "exhaustive-f3";

/// Groups stating an equivalence; a full run needs an instance of each
/// where the hypothesis side fails.
pub const BICONDITIONALS: &[&str] = &[
    "pair-duality",
    "nk-kupershmidt-condition",
    "rbn-rn-transfer",
];

const GROUPS: &[(&str, &str)] = &[
    ("(Theta, S, N) is a dual KN-structure", "mc-dual-kn"),
    ("I + tN intertwines", "trivial-deformation"),
    ("I + tS intertwines", "trivial-deformation"),
    ("deformed actions form", "trivial-deformation"),
    ("deformed bracket is Leibniz at", "trivial-deformation"),
    ("N maps the deformation cocycle", "trivial-deformation"),
    ("K + KS is Kupershmidt", "kn-compatible-operators"),
    ("K and KS are compatible", "kn-compatible-operators"),
    ("K Theta K is Kupershmidt", "mc-kupershmidt-products"),
    (
        "K and NK are compatible for invertible N",
        "nk-kupershmidt-condition",
    ),
    ("K and NK are compatible", "mc-kupershmidt-products"),
    (
        "K is Kupershmidt for the twisted representation",
        "theta-twist",
    ),
    ("K is Kupershmidt for the", "kn-kupershmidt-operators"),
    ("K is a strong Maurer-Cartan element", "theta-twist"),
    ("K^-1 N equals S K^-1", "dual-kn-to-mc"),
    ("N + S* is Nijenhuis", "twilled-sum-nijenhuis"),
    ("NK is Kupershmidt", "kn-kupershmidt-operators"),
    (
        "S is Nijenhuis on the sub-adjacent algebra",
        "kn-subadjacent-nijenhuis",
    ),
    ("S-deformed bracket is Leibniz", "kn-subadjacent-nijenhuis"),
    ("S-deformed bracket equals", "kn-bracket-agreement"),
    ("hat and tilde brackets sum", "kn-bracket-agreement"),
    ("hat bracket is Leibniz", "kn-bracket-agreement"),
    ("tilde bracket is Leibniz", "kn-bracket-agreement"),
    ("combination (", "compatible-combinations"),
    ("combined bracket is Leibniz", "tilde-varrho-bracket"),
    (
        "condition holds iff NK is Kupershmidt",
        "nk-kupershmidt-condition",
    ),
    ("form intertwines", "quadratic-form-intertwines"),
    ("form sharp and N times form sharp", "bn-compatible"),
    ("form sharp with N", "bn-dual-kn"),
    ("graded bracket route agrees", "maurer-cartan-graded-route"),
    (
        "invertible K makes (N, S) a dual-Nijenhuis pair",
        "kn-invertible-dual",
    ),
    ("sharp map is Kupershmidt", "r-matrix-kupershmidt"),
    ("sharp map with N", "rn-dual-kn"),
    ("total twisted bracket is Leibniz", "theta-twist"),
    ("twisted actions form a representation", "theta-twist"),
    ("twisted bracket is Leibniz", "theta-twist"),
    (
        "actions form a representation of the N-deformed algebra",
        "hat-tilde-representations",
    ),
    ("K1 K2^-1 is Nijenhuis", "compatible-nijenhuis"),
    (") is a dual KN-structure", "compatible-dual-kn"),
];

/// The group a consequence of `check` is tallied under.
pub fn group_of(check: &str, consequence: &str) -> &'static str {
    if check == "tilde-varrho" && consequence.starts_with("K is Kupershmidt for the tilde") {
        return "tilde-varrho-bracket";
    }
    GROUPS
        .iter()
        .find(|(pat, _)| consequence.starts_with(pat))
        .or_else(|| GROUPS.iter().find(|(pat, _)| consequence.contains(pat)))
        .map(|(_, g)| *g)
        .unwrap_or("other")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
    /// Instances where the hypothesis side of an equivalence is false.
    pub negative: usize,
}

/// Failing instances kept per run, for the report.
const FAILURE_SAMPLES: usize = 12;

#[derive(Clone, Debug, Default)]
pub struct Groups {
    pub tallies: BTreeMap<&'static str, Tally>,
    /// A capped sample of failing statements with their instances.
    pub failures: Vec<String>,
}

impl Groups {
    pub fn tally(&mut self, group: &'static str, ok: bool, negative: bool) {
        let t = self.tallies.entry(group).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
        if negative {
            t.negative += 1;
        }
    }

    fn note_failure(&mut self, group: &str, what: &str, instance: impl FnOnce() -> String) {
        if self.failures.len() < FAILURE_SAMPLES {
            self.failures
                .push(format!("{group}: {what} at {}", instance()));
        }
    }

    /// Tallies the consequences of a report produced by `check`.
    pub fn record(&mut self, check: &str, report: &CheckReport) {
        self.record_at(check, report, String::new);
    }

    /// As [`Groups::record`], naming the instance when something fails.
    pub fn record_at(&mut self, check: &str, report: &CheckReport, instance: impl Fn() -> String) {
        if check == "rbn-rn-transfer" {
            let rbn_false = report
                .consequences
                .iter()
                .any(|c| c.name == "Rota-Baxter-Nijenhuis side" && c.detail == "holds: false");
            self.tally("rbn-rn-transfer", report.ok, rbn_false);
            if !report.ok {
                self.note_failure("rbn-rn-transfer", "sides disagree", &instance);
            }
            return;
        }
        for c in &report.consequences {
            let negative = c.detail.starts_with("condition false");
            let group = group_of(check, &c.name);
            self.tally(group, c.ok, negative);
            if !c.ok {
                let what = if c.detail.is_empty() {
                    c.name.clone()
                } else {
                    format!("{} ({})", c.name, c.detail)
                };
                self.note_failure(group, &what, &instance);
            }
        }
    }

    fn merge(&mut self, other: &Groups) {
        for (g, t) in &other.tallies {
            let mine = self.tallies.entry(g).or_default();
            mine.passed += t.passed;
            mine.failed += t.failed;
            mine.negative += t.negative;
        }
        let room = FAILURE_SAMPLES.saturating_sub(self.failures.len());
        self.failures
            .extend(other.failures.iter().take(room).cloned());
    }

    pub fn failed(&self) -> usize {
        self.tallies.values().map(|t| t.failed).sum()
    }
}

#[derive(Clone, Debug)]
pub struct EntryOutcome {
    pub name: String,
    pub expectations: usize,
    pub mismatches: Vec<String>,
    pub groups: Groups,
    pub seconds: f64,
}

impl EntryOutcome {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.groups.failed() == 0
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOutcome {
    pub entries: Vec<EntryOutcome>,
    /// Whether every equivalence must have seen a failing hypothesis.
    pub require_negatives: bool,
}

impl SuiteOutcome {
    pub fn groups(&self) -> Groups {
        let mut all = Groups::default();
        for e in &self.entries {
            all.merge(&e.groups);
        }
        all
    }

    pub fn missing_negatives(&self) -> Vec<&'static str> {
        if !self.require_negatives {
            return Vec::new();
        }
        let groups = self.groups();
        BICONDITIONALS
            .iter()
            .copied()
            .filter(|g| groups.tallies.get(g).is_none_or(|t| t.negative == 0))
            .collect()
    }

    pub fn ok(&self) -> bool {
        self.entries.iter().all(EntryOutcome::ok) && self.missing_negatives().is_empty()
    }

    pub fn to_json(&self) -> String {
        let tally =
            |t: &Tally| json!({"failed": t.failed, "negative": t.negative, "passed": t.passed});
        let groups: serde_json::Map<String, Value> = self
            .groups()
            .tallies
            .iter()
            .map(|(g, t)| (g.to_string(), tally(t)))
            .collect();
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "expectations": e.expectations,
                    "mismatches": e.mismatches,
                    "name": e.name,
                    "ok": e.ok(),
                })
            })
            .collect();
        canonical_json(&json!({
            "entries": entries,
            "failures": self.groups().failures,
            "groups": groups,
            "missing_negatives": self.missing_negatives(),
            "ok": self.ok(),
        }))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = if e.ok() { "pass" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} ({} expectations, {:.2}s)\n",
                e.name, e.expectations, e.seconds
            ));
            for m in &e.mismatches {
                out.push_str(&format!("  mismatch: {m}\n"));
            }
        }
        let groups = self.groups();
        for (g, t) in &groups.tallies {
            out.push_str(&format!(
                "  {g}: {} passed, {} failed, {} negative\n",
                t.passed, t.failed, t.negative
            ));
        }
        for f in &groups.failures {
            out.push_str(&format!("  failure: {f}\n"));
        }
        for g in self.missing_negatives() {
            out.push_str(&format!("  {g}: no instance with a failing hypothesis\n"));
        }
        out.push_str(if self.ok() {
            "suite passed\n"
        } else {
            "suite FAILED\n"
        });
        out
    }
}

/// Every runnable suite name.
pub fn suite_names() -> Vec<&'static str> {
    let mut names: Vec<_> = catalog().iter().map(|e| e.name).collect();
    names.push(EXHAUSTIVE);
    names
}

pub fn run_suite(name: &str) -> CliResult<EntryOutcome> {
    let start = Instant::now();
    let mut outcome = if name == EXHAUSTIVE {
        let mut groups = Groups::default();
        sweep_f3(&mut groups)?;
        EntryOutcome {
            name: name.to_string(),
            expectations: 0,
            mismatches: Vec::new(),
            groups,
            seconds: 0.0,
        }
    } else {
        run_catalog_entry(name)?
    };
    outcome.seconds = start.elapsed().as_secs_f64();
    Ok(outcome)
}

pub fn run_all() -> CliResult<SuiteOutcome> {
    let entries = suite_names()
        .into_iter()
        .map(run_suite)
        .collect::<CliResult<_>>()?;
    Ok(SuiteOutcome {
        entries,
        require_negatives: true,
    })
}

fn run_catalog_entry(name: &str) -> CliResult<EntryOutcome> {
    let e = entry(name).ok_or_else(|| CliError::UnknownEntry(name.to_string()))?;
    let spec = e.spec();
    let mut groups = Groups::default();
    let mut mismatches = Vec::new();
    for exp in &spec.expected {
        let req = &exp.request;
        let label = format!("{} {}", req.check, req.object);
        match verdict(run_check(&spec, req, true)) {
            Ok((got, report)) => {
                if got != exp.verdict {
                    mismatches.push(format!("{label}: expected {}, got {got}", exp.verdict));
                }
                if let Some(r) = report {
                    groups.record_at(&req.check, &r, || label.clone());
                }
            }
            Err(err) => mismatches.push(format!("{label}: {err}")),
        }
    }
    Ok(EntryOutcome {
        name: name.to_string(),
        expectations: spec.expected.len(),
        mismatches,
        groups,
        seconds: 0.0,
    })
}

fn rows(m: &Matrix) -> String {
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
    format!("[{}]", rows.join("; "))
}

fn kn_label(kn: &KnStructure, rep: &Representation) -> String {
    let g: Vec<String> = (0..rep.algebra().dim())
        .flat_map(|i| (0..rep.algebra().dim()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            rep.algebra()
                .bracket_basis(i, j)
                .iter()
                .any(|s| !s.is_zero())
        })
        .map(|(i, j)| format!("[e{i},e{j}]"))
        .collect();
    format!(
        "algebra with nonzero {}, module dim {}, K {}, N {}, S {}",
        g.join(" "),
        rep.mdim(),
        rows(kn.k()),
        rows(kn.n()),
        rows(kn.s())
    )
}

fn all_matrices(f: FieldSpec, rows: usize, cols: usize) -> CliResult<Vec<Matrix>> {
    Ok(enumerate_matrices(
        f,
        rows,
        cols,
        u128::MAX,
        Some(1),
        |_| true,
    )?)
}

fn ok(r: kupershmidt::Result<CheckReport>) -> bool {
    matches!(r, Ok(rep) if rep.ok)
}

/// Strong Maurer-Cartan read directly off the two component equations.
fn strong_mc_direct(ctx: &TwilledContext, theta: &Matrix) -> CliResult<bool> {
    let n1 = ctx.n1();
    let (g1, g2, rho1, rho2) = (ctx.g1(), ctx.g2(), ctx.rho1(), ctx.rho2());
    for y in 0..n1 {
        let ty = theta.column(y);
        for z in 0..n1 {
            let tz = theta.column(z);
            let action = vec_add(&rho1.rho_l()[y].apply(&tz)?, &rho1.rho_r()[z].apply(&ty)?);
            if theta.apply(g1.bracket_basis(y, z))? != action {
                return Ok(false);
            }
            let back = vec_add(&rho2.left(&ty).column(z), &rho2.right(&tz).column(y));
            if g2.bracket(&ty, &tz) != theta.apply(&back)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn sweep_f3(groups: &mut Groups) -> CliResult<()> {
    let f = FieldSpec::Prime(3);
    let square = all_matrices(f, 2, 2)?;
    for (_, alg) in planes(f) {
        let nij: Vec<Matrix> = square
            .iter()
            .filter(|n| {
                ok(check_nijenhuis(
                    &alg,
                    &LinearOperator::on_algebra((*n).clone()),
                ))
            })
            .cloned()
            .collect();
        let reg = regular_representation(&alg)?;
        let dual = dual_representation(&reg)?;
        for rep in [reg, dual] {
            sweep_rep(groups, &rep, &square, &nij)?;
        }
        sweep_forms(groups, &alg, &square, &nij)?;
    }
    sweep_transfer(groups)
}

fn sweep_rep(
    groups: &mut Groups,
    rep: &Representation,
    square: &[Matrix],
    nij: &[Matrix],
) -> CliResult<()> {
    let dim = rep.algebra().dim();
    let f = rep.field();
    let ks: Vec<Matrix> = square
        .iter()
        .filter(|k| {
            ok(check_kupershmidt(
                &LinearOperator::module_to_algebra((*k).clone()),
                rep,
            ))
        })
        .cloned()
        .collect();

    let mut strong = Vec::new();
    for k in &ks {
        let kop = LinearOperator::module_to_algebra(k.clone());
        let ctx = TwilledContext::new(lifted_algebra(&kop, rep)?, dim)?;
        for theta in square {
            let report = check_maurer_cartan(&ctx, theta, true)?;
            groups.record("strong-maurer-cartan", &report);
            let direct = strong_mc_direct(&ctx, theta)?;
            groups.tally("strong-mc-characterization", direct == report.ok, !direct);
            if report.ok {
                strong.push((kop.clone(), theta.clone()));
            }
        }
    }
    for (kop, theta) in &strong {
        let tw = theta_twist(kop, rep, theta)?;
        groups.record("theta-twist", &tw.report);
        if let Ok((_, report)) = dual_kn_from_mc(kop, rep, theta) {
            groups.tally("mc-dual-kn", report.ok, false);
            groups.record("dual-kn-from-mc", &report);
        }
    }

    let dual_rep = dual_representation(rep)?;
    let zero = LinearOperator::module_to_algebra(Matrix::zeros(f, dim, rep.mdim()));
    let semidirect = TwilledContext::new(lifted_algebra(&zero, rep)?, dim)?;
    let mut pairs = Vec::new();
    for n in nij {
        for s in square {
            let pair = OperatorPair::new(n.clone(), s.clone());
            let is_pair = check_nijenhuis_pair(&pair, rep)?.ok;
            let is_dual = check_dual_nijenhuis_pair(&pair, rep)?.ok;
            let transposed = OperatorPair::new(n.clone(), s.transpose());
            let dual_side = check_dual_nijenhuis_pair(&transposed, &dual_rep)?.ok;
            groups.tally("pair-duality", is_pair == dual_side, !is_pair);
            if is_pair {
                let d = deformation_from_pair(&pair, rep, &deformation_samples(f))?;
                groups.record("trivial-deformation", &d.report);
                let back = OperatorPair::new(s.clone(), n.clone());
                let sum = sum_nijenhuis_on_twilled(&pair, &back, &semidirect)?;
                groups.tally("twilled-sum-nijenhuis", sum.ok, false);
                groups.record("twilled-sum-nijenhuis", &sum);
            }
            if is_pair || is_dual {
                groups.record("hat-tilde", &hat_tilde_report(&pair, rep)?);
                pairs.push(pair);
            }
        }
    }

    for k in &ks {
        for pair in &pairs {
            for mode in [KnMode::Kn, KnMode::DualKn] {
                let kn = KnStructure::new(k.clone(), pair.n().clone(), pair.s().clone(), mode);
                let Ok(report) = check_kn_structure_with(&kn, rep, true) else {
                    continue;
                };
                if !report.ok {
                    continue;
                }
                groups.record("kn", &report);
                if mode == KnMode::DualKn {
                    match tilde_varrho_bracket(&kn, rep) {
                        Ok((_, report)) => {
                            groups.record_at("tilde-varrho", &report, || kn_label(&kn, rep))
                        }
                        Err(_) => groups.tally("tilde-varrho-bracket", false, false),
                    }
                    if k.is_invertible() {
                        let kop = LinearOperator::module_to_algebra(k.clone());
                        let ctx = TwilledContext::new(lifted_algebra(&kop, rep)?, dim)?;
                        let strong = match mc_from_dual_kn(&kn, rep) {
                            Ok((theta, report)) => {
                                groups.record("mc-from-dual-kn", &report);
                                ok(check_maurer_cartan(&ctx, &theta, true))
                            }
                            Err(_) => false,
                        };
                        groups.tally("dual-kn-to-mc", strong, false);
                    }
                }
            }
        }
    }

    for k1 in &ks {
        let k1op = LinearOperator::module_to_algebra(k1.clone());
        for k2 in &ks {
            let k2op = LinearOperator::module_to_algebra(k2.clone());
            let report = check_compatible(&k1op, &k2op, rep)?;
            groups.record("compatible", &report);
            if !report.ok {
                continue;
            }
            if k2.is_invertible() {
                let holds = nijenhuis_from_compatible(&k1op, &k2op, rep)
                    .is_ok_and(|nij| ok(check_nijenhuis(rep.algebra(), &nij)));
                groups.tally("compatible-nijenhuis", holds, false);
            }
            if let Ok((a, b)) = dual_kn_from_compatible(&k1op, &k2op, rep) {
                for kn in [a, b] {
                    groups.tally(
                        "compatible-dual-kn",
                        ok(check_kn_structure(&kn, rep)),
                        false,
                    );
                }
            }
        }
        for n in nij {
            let report = check_nk_condition(&LinearOperator::on_algebra(n.clone()), &k1op, rep)?;
            groups.record("nk-condition", &report);
        }
    }
    Ok(())
}

fn sweep_forms(
    groups: &mut Groups,
    alg: &LeibnizAlgebra,
    square: &[Matrix],
    nij: &[Matrix],
) -> CliResult<()> {
    let rbs: Vec<&Matrix> = square
        .iter()
        .filter(|r| {
            ok(check_rota_baxter(
                alg,
                &LinearOperator::on_algebra((*r).clone()),
            ))
        })
        .collect();
    for r in &rbs {
        for n in nij {
            let rop = LinearOperator::on_algebra((*r).clone());
            if let Ok(report) =
                check_rbn_structure(alg, &rop, &LinearOperator::on_algebra(n.clone()))
            {
                groups.record("rbn", &report);
            }
        }
    }
    for m in square {
        let pi = Tensor2::new(m.clone())?;
        let report = check_ybe(alg, &pi)?;
        groups.record("ybe", &report);
        if report.ok && pi.is_symmetric() {
            for n in nij {
                if let Ok(rn) = check_rn_structure(alg, &pi, &LinearOperator::on_algebra(n.clone()))
                {
                    groups.record("rn", &rn);
                }
            }
        }
        for symmetry in [Symmetry::Symmetric, Symmetry::Skew] {
            let Ok(form) = BilinearForm::new(m.clone(), symmetry) else {
                continue;
            };
            if !form.is_nondegenerate() {
                continue;
            }
            if let Ok(q) = check_quadratic(alg, &form) {
                groups.record("quadratic", &q);
            }
            if symmetry == Symmetry::Symmetric {
                for n in nij {
                    if let Ok(bn) =
                        check_bn_structure(alg, &form, &LinearOperator::on_algebra(n.clone()))
                    {
                        if bn.ok {
                            groups.record("bn", &bn);
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Basis of the matrices `X` of the given shape with `map(X) = 0`.
fn kernel(
    f: FieldSpec,
    rows: usize,
    cols: usize,
    map: impl Fn(&Matrix) -> Matrix,
) -> CliResult<Vec<Matrix>> {
    let units: Vec<Matrix> = (0..rows * cols)
        .map(|idx| {
            Matrix::from_fn(f, rows, cols, |i, j| {
                if i * cols + j == idx {
                    f.one()
                } else {
                    f.zero()
                }
            })
        })
        .collect();
    let images: Vec<_> = units.iter().map(|u| map(u).flatten()).collect();
    let a = Matrix::from_columns(f, images[0].len(), &images);
    let rhs = Matrix::zeros(f, a.rows(), 1);
    Ok(match solve_linear(&a, &rhs)? {
        LinearSolution::NoSolution => Vec::new(),
        LinearSolution::Solutions { nullspace, .. } => nullspace
            .into_iter()
            .map(|v| Matrix::from_fn(f, rows, cols, |i, j| v.get(i * cols + j, 0).clone()))
            .collect(),
    })
}

fn span(f: FieldSpec, basis: &[Matrix]) -> CliResult<Vec<Matrix>> {
    let coeffs = all_matrices(f, 1, basis.len())?;
    Ok(coeffs
        .iter()
        .map(|c| {
            basis.iter().zip(c.entries()).fold(
                Matrix::zeros(f, basis[0].rows(), basis[0].cols()),
                |acc, (b, s)| acc.add(&b.scale(s)).expect("same shape"),
            )
        })
        .collect())
}

/// RBN versus r-n on the 4-dimensional quadratic algebra nil2 + nil2 over
/// F3, over every admissible pair of operators.
fn sweep_transfer(groups: &mut Groups) -> CliResult<()> {
    let f = FieldSpec::Prime(3);
    let alg = nil2(f).direct_sum(&nil2(f));
    let q2 = Matrix::from_ints(f, &[&[0, 1], &[-1, 0]]);
    let q = BilinearForm::new(block_diagonal(f, &q2, &q2), Symmetry::Skew)?;
    let qs = q.sharp()?;
    let d = alg.dim();
    let n_basis = kernel(f, d, d, |n| {
        qs.mul(&n.transpose())
            .expect("square")
            .sub(&n.mul(&qs).expect("square"))
            .expect("square")
    })?;
    let r_basis = kernel(f, d, d, |r| {
        let p = r.mul(&qs).expect("square");
        p.sub(&p.transpose()).expect("square")
    })?;
    let nijs: Vec<Matrix> = span(f, &n_basis)?
        .into_iter()
        .filter(|n| {
            ok(check_nijenhuis(
                &alg,
                &LinearOperator::on_algebra(n.clone()),
            ))
        })
        .collect();
    let rbs: Vec<Matrix> = span(f, &r_basis)?
        .into_iter()
        .filter(|r| {
            ok(check_rota_baxter(
                &alg,
                &LinearOperator::on_algebra(r.clone()),
            ))
        })
        .collect();
    for r in rbs.iter().step_by(rbs.len().div_ceil(60).max(1)) {
        for n in nijs.iter().step_by(nijs.len().div_ceil(30).max(1)) {
            let report = rbn_rn_transfer(
                &alg,
                &q,
                &LinearOperator::on_algebra(r.clone()),
                &LinearOperator::on_algebra(n.clone()),
            )?;
            groups.record("rbn-rn-transfer", &report);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_known_consequence_has_a_group() {
        for name in [
            "I + tN intertwines the brackets at t = 1",
            "K is Kupershmidt for the hat representation",
            "K and NK are compatible for invertible N",
            "(K2, N, S) is a dual KN-structure",
            "tilde actions form a representation of the N-deformed algebra",
        ] {
            assert_ne!(group_of("kn", name), "other", "{name}");
        }
        assert_eq!(
            group_of("kn", "K and NK are compatible for invertible N"),
            "nk-kupershmidt-condition"
        );
        assert_eq!(
            group_of("dual-kn-from-mc", "K and NK are compatible"),
            "mc-kupershmidt-products"
        );
        assert_eq!(
            group_of(
                "tilde-varrho",
                "K is Kupershmidt for the tilde representation"
            ),
            "tilde-varrho-bracket"
        );
        assert_eq!(
            group_of("kn", "K is Kupershmidt for the tilde representation"),
            "kn-kupershmidt-operators"
        );
        assert_eq!(
            group_of(
                "dual-kn-from-mc",
                "(Theta, S, N) is a dual KN-structure on the induced representation"
            ),
            "mc-dual-kn"
        );
    }

    #[test]
    fn trivial_suite_passes() {
        let outcome = run_suite("trivial").unwrap();
        assert!(outcome.ok(), "{:?}", outcome.mismatches);
    }
}
