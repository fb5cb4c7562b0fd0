//! Constructions that add new, re-checked objects to a spec file.

use kupershmidt::algebra::{
    check_leibniz, check_matched_pair, check_representation, dual_representation,
    regular_representation, semidirect_sum, LeibnizAlgebra, Representation, TwilledContext,
};
use kupershmidt::cochain::{dual_kn_from_mc, mc_from_dual_kn, theta_twist};
use kupershmidt::error::Error as CoreError;
use kupershmidt::forms::{sharp_map, Tensor2};
use kupershmidt::operators::{
    check_kupershmidt, deformed_bracket, induced_representation, lifted_algebra,
    subadjacent_algebra, LinearOperator,
};
use kupershmidt::pairs::{
    check_kn_structure, dual_kn_from_compatible, hat_tilde_representations, OperatorPair,
};

use crate::checks::{Resolver, DUAL_REGULAR, REGULAR};
use crate::error::{CliError, CliResult};
use crate::spec_file::{CheckRequest, Object, SpecFile};

pub const CONSTRUCTIONS: &[&str] = &[
    "regular",
    "dual-rep",
    "semidirect",
    "subadjacent",
    "induced",
    "lifted",
    "deformed",
    "hat-tilde",
    "theta-twist",
    "dual-kn-from-mc",
    "mc-from-dual-kn",
    "sharp",
    "dual-kn-from-compatible",
    "twilled",
];

/// Inputs of a construction; unused fields are ignored.
#[derive(Clone, Debug, Default)]
pub struct ConstructArgs {
    pub algebra: Option<String>,
    pub rep: Option<String>,
    pub k: Option<String>,
    pub n: Option<String>,
    pub s: Option<String>,
    pub theta: Option<String>,
    pub kn: Option<String>,
    pub pi: Option<String>,
    pub with: Option<String>,
    pub split: Option<usize>,
    /// Name (or name prefix) of the new objects.
    pub name: Option<String>,
}

fn required<'a>(v: &'a Option<String>, flag: &str, construction: &str) -> CliResult<&'a str> {
    v.as_deref()
        .ok_or_else(|| CliError::Usage(format!("{construction} needs {flag}")))
}

fn failed(what: &str) -> CliError {
    CliError::Core(CoreError::HypothesisFailed(format!(
        "re-check of {what} failed"
    )))
}

struct Ctx<'a> {
    file: &'a SpecFile,
    args: &'a ConstructArgs,
    req: CheckRequest,
}

impl<'a> Ctx<'a> {
    fn resolver(&self) -> Resolver<'_> {
        Resolver::new(self.file, &self.req)
    }

    /// Name of the algebra the representation (or the construction) lives on.
    fn algebra_name(&self) -> CliResult<String> {
        if let Some(a) = &self.args.algebra {
            return Ok(a.clone());
        }
        if let Some(rep) = self
            .args
            .rep
            .as_deref()
            .filter(|r| ![REGULAR, DUAL_REGULAR].contains(r))
        {
            if let Object::Representation { algebra, .. } = self.file.get(rep)? {
                return Ok(algebra.clone());
            }
        }
        match self.file.names_of("algebra").as_slice() {
            [one] => Ok(one.to_string()),
            _ => Err(CliError::Usage(
                "pass --algebra to choose the algebra".into(),
            )),
        }
    }

    fn rep(&self) -> CliResult<Representation> {
        self.resolver().rep()
    }

    fn algebra(&self) -> CliResult<LeibnizAlgebra> {
        self.resolver().algebra()
    }

    fn k_op(&self, construction: &str, rep: &Representation) -> CliResult<LinearOperator> {
        let name = required(&self.args.k, "--K", construction)?;
        let m = self
            .resolver()
            .matrix(name, rep.algebra().dim(), rep.mdim())?;
        Ok(LinearOperator::module_to_algebra(m))
    }

    fn tensor(&self, name: &str) -> CliResult<Tensor2> {
        match self.file.get(name)? {
            Object::Tensor2(t) => Ok(t.clone()),
            _ => Err(CliError::WrongKind {
                name: name.to_string(),
                expected: "tensor2",
            }),
        }
    }
}

fn verified_algebra(alg: LeibnizAlgebra, what: &str) -> CliResult<Object> {
    if check_leibniz(&alg).ok {
        Ok(Object::Algebra(alg))
    } else {
        Err(failed(what))
    }
}

fn verified_rep(algebra: &str, rep: Representation, what: &str) -> CliResult<Object> {
    if check_representation(&rep).ok {
        Ok(Object::Representation {
            algebra: algebra.to_string(),
            rep,
        })
    } else {
        Err(failed(what))
    }
}

/// Runs a construction and returns the input file extended by the new
/// objects, each marked verified.
pub fn construct(file: &SpecFile, construction: &str, args: &ConstructArgs) -> CliResult<SpecFile> {
    if !CONSTRUCTIONS.contains(&construction) {
        return Err(CliError::UnknownConstruction(construction.to_string()));
    }
    let req = CheckRequest {
        algebra: args.algebra.clone(),
        rep: args.rep.clone(),
        ..CheckRequest::new(construction, "")
    };
    let ctx = Ctx { file, args, req };
    let name = args
        .name
        .clone()
        .unwrap_or_else(|| construction.to_string());
    let sub = |suffix: &str| format!("{name}-{suffix}");
    let mut out = file.clone();
    let mut add = |n: String, o: Object| out.insert(n, o, true);

    match construction {
        "regular" => {
            let alg_name = ctx.algebra_name()?;
            let rep = regular_representation(file.algebra(&alg_name)?)?;
            add(
                name,
                verified_rep(&alg_name, rep, "the regular representation")?,
            );
        }
        "dual-rep" => {
            let rep = ctx.rep()?;
            let dual = dual_representation(&rep)?;
            add(
                name,
                verified_rep(&ctx.algebra_name()?, dual, "the dual representation")?,
            );
        }
        "semidirect" => {
            let alg = semidirect_sum(&ctx.rep()?)?;
            add(name, verified_algebra(alg, "the semidirect sum")?);
        }
        "subadjacent" | "induced" | "lifted" => {
            let rep = ctx.rep()?;
            let k = ctx.k_op(construction, &rep)?;
            match construction {
                "subadjacent" => {
                    let (_, alg) = subadjacent_algebra(&k, &rep)?;
                    add(name, verified_algebra(alg, "the sub-adjacent algebra")?);
                }
                "induced" => {
                    if !check_kupershmidt(&k, &rep)?.ok {
                        return Err(CoreError::NotKupershmidt.into());
                    }
                    let induced = induced_representation(&k, &rep)?;
                    let alg_name = sub("algebra");
                    add(
                        alg_name.clone(),
                        verified_algebra(induced.algebra().clone(), "the sub-adjacent algebra")?,
                    );
                    add(
                        name,
                        verified_rep(&alg_name, induced, "the induced representation")?,
                    );
                }
                _ => {
                    let alg = lifted_algebra(&k, &rep)?;
                    add(name, verified_algebra(alg, "the lifted algebra")?);
                }
            }
        }
        "deformed" => {
            let alg = ctx.algebra()?;
            let n_name = required(&args.n, "--N", construction)?;
            let n = ctx.resolver().matrix(n_name, alg.dim(), alg.dim())?;
            let deformed = deformed_bracket(&alg, &LinearOperator::on_algebra(n))?;
            add(name, verified_algebra(deformed, "the deformed bracket")?);
        }
        "hat-tilde" => {
            let rep = ctx.rep()?;
            let r = ctx.resolver();
            let n = r.matrix(
                required(&args.n, "--N", construction)?,
                rep.algebra().dim(),
                rep.algebra().dim(),
            )?;
            let s = r.matrix(
                required(&args.s, "--S", construction)?,
                rep.mdim(),
                rep.mdim(),
            )?;
            let (hat, tilde) = hat_tilde_representations(&OperatorPair::new(n, s), &rep)?;
            let alg_name = sub("algebra");
            add(
                alg_name.clone(),
                verified_algebra(hat.algebra().clone(), "the deformed bracket")?,
            );
            let (hat_ok, tilde_ok) = (
                check_representation(&hat).ok,
                check_representation(&tilde).ok,
            );
            if !hat_ok && !tilde_ok {
                return Err(failed("the hat and tilde actions"));
            }
            for (suffix, rep, ok) in [("hat", hat, hat_ok), ("tilde", tilde, tilde_ok)] {
                let obj = Object::Representation {
                    algebra: alg_name.clone(),
                    rep,
                };
                out.insert(sub(suffix), obj, ok);
            }
        }
        "theta-twist" | "dual-kn-from-mc" => {
            let rep = ctx.rep()?;
            let k = ctx.k_op(construction, &rep)?;
            let theta_name = required(&args.theta, "--theta", construction)?;
            let theta = ctx
                .resolver()
                .matrix(theta_name, rep.mdim(), rep.algebra().dim())?;
            if construction == "theta-twist" {
                let tw = theta_twist(&k, &rep, &theta)?;
                if !tw.report.consequences_ok() {
                    return Err(failed("the twisted structures"));
                }
                let alg_name = sub("algebra");
                add(
                    alg_name.clone(),
                    verified_algebra(tw.algebra, "the twisted bracket")?,
                );
                add(
                    sub("rep"),
                    verified_rep(&alg_name, tw.rep, "the twisted actions")?,
                );
                add(
                    sub("total"),
                    verified_algebra(tw.total, "the total twisted bracket")?,
                );
            } else {
                let (kn, report) = dual_kn_from_mc(&k, &rep, &theta)?;
                if !report.ok {
                    return Err(failed("the dual KN-structure"));
                }
                add(name, Object::Kn(kn));
            }
        }
        "mc-from-dual-kn" => {
            let rep = ctx.rep()?;
            let kn_name = required(&args.kn, "--kn", construction)?;
            let kn = match file.get(kn_name)? {
                Object::Kn(kn) => kn.clone(),
                _ => {
                    return Err(CliError::WrongKind {
                        name: kn_name.to_string(),
                        expected: "kn",
                    })
                }
            };
            let (theta, report) = mc_from_dual_kn(&kn, &rep)?;
            if !report.ok {
                return Err(failed("the Maurer-Cartan element"));
            }
            add(name, Object::Operator(theta));
        }
        "sharp" => {
            let pi = ctx.tensor(required(&args.pi, "--pi", construction)?)?;
            let sharp = sharp_map(&pi)?;
            let alg = ctx.algebra()?;
            if sharp.map().rows() != alg.dim() {
                return Err(CliError::Usage(
                    "tensor and algebra dimensions differ".into(),
                ));
            }
            let dual = dual_representation(&regular_representation(&alg)?)?;
            let ok = check_kupershmidt(&sharp, &dual)?.ok;
            out.insert(name, Object::Operator(sharp.into_map()), ok);
        }
        "dual-kn-from-compatible" => {
            let rep = ctx.rep()?;
            let k1 = ctx.k_op(construction, &rep)?;
            let k2_name = required(&args.with, "--with", construction)?;
            let k2 = ctx
                .resolver()
                .matrix(k2_name, rep.algebra().dim(), rep.mdim())?;
            let (a, b) =
                dual_kn_from_compatible(&k1, &LinearOperator::module_to_algebra(k2), &rep)?;
            for (suffix, kn) in [("first", a), ("second", b)] {
                if !check_kn_structure(&kn, &rep)?.ok {
                    return Err(failed("the dual KN-structures"));
                }
                add(sub(suffix), Object::Kn(kn));
            }
        }
        "twilled" => {
            let alg_name = ctx.algebra_name()?;
            let total = file.algebra(&alg_name)?.clone();
            let split = args
                .split
                .ok_or_else(|| CliError::Usage("twilled needs --split".into()))?;
            let tw = TwilledContext::new(total, split)?;
            let (report, _) = check_matched_pair(tw.g1(), tw.g2(), tw.rho1(), tw.rho2())?;
            if !report.ok {
                return Err(failed("the matched pair"));
            }
            add(
                name,
                Object::Twilled {
                    algebra: alg_name,
                    ctx: tw,
                },
            );
        }
        _ => unreachable!("checked against CONSTRUCTIONS"),
    }
    Ok(out)
}
