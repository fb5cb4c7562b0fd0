//! Named checks dispatched against objects of a spec file.

use kupershmidt::algebra::{
    check_leibniz, check_matched_pair, check_representation, dual_representation,
    regular_representation, LeibnizAlgebra, Representation, TwilledContext,
};
use kupershmidt::cochain::{
    check_maurer_cartan, dual_kn_from_mc, mc_from_dual_kn, theta_twist, tilde_varrho_bracket,
};
use kupershmidt::forms::{
    check_bn_structure, check_quadratic, check_rbn_structure, check_rn_structure, check_ybe,
    rbn_rn_transfer, BilinearForm, Tensor2,
};
use kupershmidt::linear::{FieldSpec, Matrix, Scalar};
use kupershmidt::operators::{
    check_compatible, check_kupershmidt, check_nijenhuis, check_nk_condition, check_rota_baxter,
    deformed_bracket, nijenhuis_from_compatible, LinearOperator,
};
use kupershmidt::pairs::{
    check_dual_nijenhuis_pair, check_kn_structure_with, check_nijenhuis_pair, check_perfect_pair,
    deformation_from_pair, dual_kn_from_compatible, hat_tilde_representations,
    sum_nijenhuis_on_twilled, KnStructure, OperatorPair,
};
use kupershmidt::report::CheckReport;

use crate::error::{CliError, CliResult};
use crate::spec_file::{CheckRequest, Object, SpecFile};

/// Every check name understood by [`run_check`].
pub const CHECKS: &[&str] = &[
    "leibniz",
    "representation",
    "twilled",
    "kupershmidt",
    "nijenhuis",
    "rota-baxter",
    "compatible",
    "nk-condition",
    "compatible-nijenhuis",
    "dual-kn-from-compatible",
    "nijenhuis-pair",
    "dual-nijenhuis-pair",
    "perfect-pair",
    "trivial-deformation",
    "hat-tilde",
    "twilled-sum-nijenhuis",
    "kn",
    "maurer-cartan",
    "strong-maurer-cartan",
    "theta-twist",
    "dual-kn-from-mc",
    "mc-from-dual-kn",
    "tilde-varrho",
    "ybe",
    "rn",
    "rbn",
    "quadratic",
    "bn",
    "rbn-rn-transfer",
];

/// Keyword naming the regular representation of the chosen algebra.
pub const REGULAR: &str = "regular";
/// Keyword naming the dual of the regular representation.
pub const DUAL_REGULAR: &str = "dual-regular";

/// Names accepted in object position without a file entry.
pub const OBJECT_KEYWORDS: &[&str] = &["", REGULAR, DUAL_REGULAR, "zero", "identity"];

/// Resolves object names in a request against one file.
pub struct Resolver<'a> {
    pub file: &'a SpecFile,
    pub req: &'a CheckRequest,
}

impl<'a> Resolver<'a> {
    pub fn new(file: &'a SpecFile, req: &'a CheckRequest) -> Self {
        Resolver { file, req }
    }

    fn field(&self) -> FieldSpec {
        self.file.field
    }

    fn unique(&self, kind: &'static str, flag: &str) -> CliResult<&'a str> {
        match self.file.names_of(kind).as_slice() {
            [one] => Ok(one),
            [] => Err(CliError::Usage(format!(
                "the file has no {kind}; pass {flag}"
            ))),
            _ => Err(CliError::Usage(format!(
                "several objects of kind {kind}; pass {flag}"
            ))),
        }
    }

    pub fn algebra(&self) -> CliResult<LeibnizAlgebra> {
        if let Some(name) = &self.req.algebra {
            return Ok(self.file.algebra(name)?.clone());
        }
        if let Some(name) = self
            .req
            .rep
            .as_deref()
            .filter(|r| ![REGULAR, DUAL_REGULAR].contains(r))
        {
            return Ok(self.representation_named(name)?.algebra().clone());
        }
        match self.file.get(&self.req.object) {
            Ok(Object::Algebra(a)) => return Ok(a.clone()),
            Ok(Object::Representation { rep, .. }) => return Ok(rep.algebra().clone()),
            Ok(Object::Twilled { ctx, .. }) => return Ok(ctx.total().clone()),
            _ => {}
        }
        Ok(self
            .file
            .algebra(self.unique("algebra", "--algebra")?)?
            .clone())
    }

    fn representation_named(&self, name: &str) -> CliResult<Representation> {
        match self.file.get(name)? {
            Object::Representation { rep, .. } => Ok(rep.clone()),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "representation",
            }),
        }
    }

    /// The requested representation; defaults to the regular one.
    pub fn rep(&self) -> CliResult<Representation> {
        match self.req.rep.as_deref() {
            None | Some(REGULAR) => Ok(regular_representation(&self.algebra()?)?),
            Some(DUAL_REGULAR) => Ok(dual_representation(&regular_representation(
                &self.algebra()?,
            )?)?),
            Some(name) => self.representation_named(name),
        }
    }

    pub fn twilled(&self) -> CliResult<TwilledContext> {
        let name = match &self.req.twilled {
            Some(n) => n.as_str(),
            None => self.unique("twilled", "--twilled")?,
        };
        match self.file.get(name)? {
            Object::Twilled { ctx, .. } => Ok(ctx.clone()),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "twilled",
            }),
        }
    }

    /// A matrix by name, or the keywords `zero` / `identity` at the given shape.
    pub fn matrix(&self, name: &str, rows: usize, cols: usize) -> CliResult<Matrix> {
        let f = self.field();
        match name {
            "zero" => Ok(Matrix::zeros(f, rows, cols)),
            "identity" if rows == cols => Ok(Matrix::identity(f, rows)),
            _ => match self.file.get(name)? {
                Object::Operator(m) => Ok(m.clone()),
                _ => Err(CliError::WrongKind {
                    name: name.to_string(),
                    expected: "operator",
                }),
            },
        }
    }

    fn object_matrix(&self, rows: usize, cols: usize) -> CliResult<Matrix> {
        self.matrix(&self.req.object, rows, cols)
    }

    fn with(&self, idx: usize, what: &str) -> CliResult<&'a str> {
        self.req.with.get(idx).map(String::as_str).ok_or_else(|| {
            CliError::Usage(format!("check {} needs --with <{what}>", self.req.check))
        })
    }

    fn with_matrix(&self, idx: usize, what: &str, rows: usize, cols: usize) -> CliResult<Matrix> {
        self.matrix(self.with(idx, what)?, rows, cols)
    }

    pub fn kn(&self) -> CliResult<KnStructure> {
        match self.file.get(&self.req.object)? {
            Object::Kn(kn) => Ok(kn.clone()),
            _ => Err(CliError::WrongKind {
                name: self.req.object.clone(),
                expected: "kn",
            }),
        }
    }

    fn tensor(&self) -> CliResult<Tensor2> {
        match self.file.get(&self.req.object)? {
            Object::Tensor2(t) => Ok(t.clone()),
            _ => Err(CliError::WrongKind {
                name: self.req.object.clone(),
                expected: "tensor2",
            }),
        }
    }

    fn form(&self) -> CliResult<BilinearForm> {
        match self.file.get(&self.req.object)? {
            Object::Form(b) => Ok(b.clone()),
            _ => Err(CliError::WrongKind {
                name: self.req.object.clone(),
                expected: "form",
            }),
        }
    }
}

/// Deformation parameters sampled by `trivial-deformation`.
pub fn deformation_samples(field: FieldSpec) -> Vec<Scalar> {
    [(1, 1), (2, 1), (-1, 2)]
        .into_iter()
        .filter_map(|(a, b)| field.ratio(a, b).ok())
        .collect()
}

/// Runs one named check. Mathematical precondition failures come back as
/// errors with exit code 1; with `consequences` off, the derived statements
/// are dropped from the report.
pub fn run_check(
    file: &SpecFile,
    req: &CheckRequest,
    consequences: bool,
) -> CliResult<CheckReport> {
    let r = Resolver::new(file, req);
    let mut report = dispatch(&r, consequences)?;
    if !consequences {
        report.consequences.clear();
    }
    Ok(report)
}

fn dispatch(r: &Resolver<'_>, consequences: bool) -> CliResult<CheckReport> {
    let check = r.req.check.as_str();
    let report = match check {
        "leibniz" => check_leibniz(&r.algebra()?),
        "representation" => {
            let rep = match r.file.get(&r.req.object) {
                Ok(Object::Representation { rep, .. }) => rep.clone(),
                _ => {
                    let req = CheckRequest {
                        rep: Some(r.req.object.clone()),
                        ..r.req.clone()
                    };
                    Resolver::new(r.file, &req).rep()?
                }
            };
            check_representation(&rep)
        }
        "twilled" => {
            let ctx = r.twilled_named_object()?;
            check_matched_pair(ctx.g1(), ctx.g2(), ctx.rho1(), ctx.rho2())?.0
        }
        "kupershmidt" => {
            let rep = r.rep()?;
            let k = r.object_matrix(rep.algebra().dim(), rep.mdim())?;
            check_kupershmidt(&LinearOperator::module_to_algebra(k), &rep)?
        }
        "nijenhuis" | "rota-baxter" => {
            let alg = r.algebra()?;
            let m = LinearOperator::on_algebra(r.object_matrix(alg.dim(), alg.dim())?);
            if check == "nijenhuis" {
                check_nijenhuis(&alg, &m)?
            } else {
                check_rota_baxter(&alg, &m)?
            }
        }
        "compatible" | "compatible-nijenhuis" | "dual-kn-from-compatible" => {
            let rep = r.rep()?;
            let (n, m) = (rep.algebra().dim(), rep.mdim());
            let k1 = LinearOperator::module_to_algebra(r.object_matrix(n, m)?);
            let k2 =
                LinearOperator::module_to_algebra(r.with_matrix(0, "second operator", n, m)?);
            match check {
                "compatible" => check_compatible(&k1, &k2, &rep)?,
                "compatible-nijenhuis" => {
                    let nij = nijenhuis_from_compatible(&k1, &k2, &rep)?;
                    let mut report = CheckReport::passed();
                    report.consequence_from(
                        "K1 K2^-1 is Nijenhuis",
                        &check_nijenhuis(rep.algebra(), &nij)?,
                    );
                    report
                }
                _ => {
                    let (a, b) = dual_kn_from_compatible(&k1, &k2, &rep)?;
                    let mut report = CheckReport::passed();
                    for (label, kn) in [("K1", a), ("K2", b)] {
                        let sub = check_kn_structure_with(&kn, &rep, consequences)?;
                        report.consequence_from(
                            format!("({label}, N, S) is a dual KN-structure"),
                            &sub,
                        );
                    }
                    report
                }
            }
        }
        "nk-condition" => {
            let rep = r.rep()?;
            let (n, m) = (rep.algebra().dim(), rep.mdim());
            let nij = LinearOperator::on_algebra(r.object_matrix(n, n)?);
            let k = LinearOperator::module_to_algebra(r.with_matrix(0, "K", n, m)?);
            check_nk_condition(&nij, &k, &rep)?
        }
        "nijenhuis-pair"
        | "dual-nijenhuis-pair"
        | "perfect-pair"
        | "trivial-deformation"
        | "hat-tilde" => {
            let rep = r.rep()?;
            let (n, m) = (rep.algebra().dim(), rep.mdim());
            let pair = OperatorPair::new(r.object_matrix(n, n)?, r.with_matrix(0, "S", m, m)?);
            match check {
                "nijenhuis-pair" => check_nijenhuis_pair(&pair, &rep)?,
                "dual-nijenhuis-pair" => check_dual_nijenhuis_pair(&pair, &rep)?,
                "perfect-pair" => check_perfect_pair(&pair, &rep)?,
                "trivial-deformation" => {
                    deformation_from_pair(&pair, &rep, &deformation_samples(rep.field()))?.report
                }
                _ => hat_tilde_report(&pair, &rep)?,
            }
        }
        "twilled-sum-nijenhuis" => {
            let ctx = r.twilled()?;
            let (n1, n2) = (ctx.n1(), ctx.n2());
            let nm = r.object_matrix(n1, n1)?;
            let sm = r.with_matrix(0, "S", n2, n2)?;
            let ns = OperatorPair::new(nm.clone(), sm.clone());
            let sn = OperatorPair::new(sm, nm);
            sum_nijenhuis_on_twilled(&ns, &sn, &ctx)?
        }
        "kn" | "mc-from-dual-kn" | "tilde-varrho" => {
            let rep = r.rep()?;
            let kn = r.kn()?;
            match check {
                "kn" => check_kn_structure_with(&kn, &rep, consequences)?,
                "mc-from-dual-kn" => mc_from_dual_kn(&kn, &rep)?.1,
                _ => tilde_varrho_bracket(&kn, &rep)?.1,
            }
        }
        "maurer-cartan" | "strong-maurer-cartan" => {
            let ctx = r.twilled()?;
            let theta = r.object_matrix(ctx.n2(), ctx.n1())?;
            check_maurer_cartan(&ctx, &theta, check == "strong-maurer-cartan")?
        }
        "theta-twist" | "dual-kn-from-mc" => {
            let rep = r.rep()?;
            let (n, m) = (rep.algebra().dim(), rep.mdim());
            let theta = r.object_matrix(m, n)?;
            let k = LinearOperator::module_to_algebra(r.with_matrix(0, "K", n, m)?);
            if check == "theta-twist" {
                theta_twist(&k, &rep, &theta)?.report
            } else {
                dual_kn_from_mc(&k, &rep, &theta)?.1
            }
        }
        "ybe" | "rn" => {
            let alg = r.algebra()?;
            let pi = r.tensor()?;
            if check == "ybe" {
                check_ybe(&alg, &pi)?
            } else {
                let n = r.with_matrix(0, "N", alg.dim(), alg.dim())?;
                check_rn_structure(&alg, &pi, &LinearOperator::on_algebra(n))?
            }
        }
        "rbn" => {
            let alg = r.algebra()?;
            let d = alg.dim();
            let rb = LinearOperator::on_algebra(r.object_matrix(d, d)?);
            let n = LinearOperator::on_algebra(r.with_matrix(0, "N", d, d)?);
            check_rbn_structure(&alg, &rb, &n)?
        }
        "quadratic" | "bn" | "rbn-rn-transfer" => {
            let alg = r.algebra()?;
            let d = alg.dim();
            let form = r.form()?;
            match check {
                "quadratic" => check_quadratic(&alg, &form)?,
                "bn" => {
                    let n = r.with_matrix(0, "N", d, d)?;
                    check_bn_structure(&alg, &form, &LinearOperator::on_algebra(n))?
                }
                _ => {
                    let rb = r.with_matrix(0, "R", d, d)?;
                    let n = r.with_matrix(1, "N", d, d)?;
                    rbn_rn_transfer(
                        &alg,
                        &form,
                        &LinearOperator::on_algebra(rb),
                        &LinearOperator::on_algebra(n),
                    )?
                }
            }
        }
        other => return Err(CliError::UnknownCheck(other.to_string())),
    };
    Ok(report)
}

impl Resolver<'_> {
    fn twilled_named_object(&self) -> CliResult<TwilledContext> {
        match self.file.get(&self.req.object)? {
            Object::Twilled { ctx, .. } => Ok(ctx.clone()),
            _ => self.twilled(),
        }
    }
}

/// `hat` must represent `[,]_N` for a pair and `tilde` for a dual pair.
pub fn hat_tilde_report(pair: &OperatorPair, rep: &Representation) -> CliResult<CheckReport> {
    let (hat, tilde) = hat_tilde_representations(pair, rep)?;
    let deformed = deformed_bracket(rep.algebra(), &pair.n)?;
    let mut report = CheckReport::passed();
    if check_nijenhuis_pair(pair, rep)?.ok {
        report.consequence(
            "hat actions form a representation of the N-deformed algebra",
            hat.algebra() == &deformed && check_representation(&hat).ok,
            "",
        );
    }
    if check_dual_nijenhuis_pair(pair, rep)?.ok {
        report.consequence(
            "tilde actions form a representation of the N-deformed algebra",
            tilde.algebra() == &deformed && check_representation(&tilde).ok,
            "",
        );
    }
    Ok(report)
}

/// The verdict a check reaches: mathematical errors count as a failed check,
/// input errors propagate.
pub fn verdict(result: CliResult<CheckReport>) -> CliResult<(bool, Option<CheckReport>)> {
    match result {
        Ok(r) => Ok((r.ok, Some(r))),
        Err(e) if e.is_mathematical() => Ok((false, None)),
        Err(e) => Err(e),
    }
}
