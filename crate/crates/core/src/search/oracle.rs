//! Naive second evaluator for every checked identity. Shares no helpers
//! with the main checkers: everything is expanded from raw coefficients.

#![allow(clippy::needless_range_loop)]

use crate::algebra::{LeibnizAlgebra, Representation, TwilledContext};
use crate::error::{Error, Result};
use crate::linear::{FieldSpec, Matrix, Scalar};
use crate::report::{CheckReport, Violation};

pub const ORACLE_IDENTITIES: &[&str] = &[
    "leibniz",
    "representation",
    "kupershmidt",
    "nijenhuis",
    "rota-baxter",
    "compatible",
    "nijenhuis-pair",
    "dual-nijenhuis-pair",
    "maurer-cartan",
    "strong-maurer-cartan",
    "ybe",
    "quadratic",
];

/// Inputs for [`oracle_eval`]; each identity reads the fields it needs.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    pub algebra: Option<LeibnizAlgebra>,
    pub rep: Option<Representation>,
    pub map: Option<Matrix>,
    pub second: Option<Matrix>,
    pub twilled: Option<TwilledContext>,
}

impl Bindings {
    pub fn algebra(alg: &LeibnizAlgebra) -> Self {
        Bindings {
            algebra: Some(alg.clone()),
            ..Default::default()
        }
    }

    pub fn rep(rep: &Representation) -> Self {
        Bindings {
            algebra: Some(rep.algebra().clone()),
            rep: Some(rep.clone()),
            ..Default::default()
        }
    }

    pub fn twilled(ctx: &TwilledContext) -> Self {
        Bindings {
            algebra: Some(ctx.total().clone()),
            twilled: Some(ctx.clone()),
            ..Default::default()
        }
    }

    pub fn with_map(mut self, m: &Matrix) -> Self {
        self.map = Some(m.clone());
        self
    }

    pub fn with_second(mut self, m: &Matrix) -> Self {
        self.second = Some(m.clone());
        self
    }
}

fn need<'a, T>(x: &'a Option<T>, what: &'static str) -> Result<&'a T> {
    x.as_ref().ok_or(Error::MissingBinding(what))
}

/// Raw arrays pulled out of the typed objects.
struct Raw {
    f: FieldSpec,
}

impl Raw {
    fn zero(&self, n: usize) -> Vec<Scalar> {
        vec![self.f.zero(); n]
    }

    fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sub(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    fn basis(&self, n: usize, i: usize) -> Vec<Scalar> {
        let mut v = self.zero(n);
        v[i] = self.f.one();
        v
    }

    /// `Σ x_i y_j c[i][j][k]`.
    fn br(&self, alg: &LeibnizAlgebra, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = alg.dim();
        let mut out = self.zero(n);
        for i in 0..n {
            for j in 0..n {
                let w = &x[i] * &y[j];
                for (k, o) in out.iter_mut().enumerate() {
                    *o = &*o + &(&w * alg.structure(i, j, k));
                }
            }
        }
        out
    }

    fn mv(&self, m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
        (0..m.rows())
            .map(|i| (0..m.cols()).fold(self.f.zero(), |acc, j| &acc + &(m.get(i, j) * &v[j])))
            .collect()
    }

    fn mm(&self, a: &Matrix, b: &Matrix) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(a.rows() * b.cols());
        for i in 0..a.rows() {
            for j in 0..b.cols() {
                out.push(
                    (0..a.cols()).fold(self.f.zero(), |acc, k| &acc + &(a.get(i, k) * b.get(k, j))),
                );
            }
        }
        out
    }

    fn col(&self, m: &Matrix, j: usize) -> Vec<Scalar> {
        (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
    }

    /// `Σ x_i family[i] v`.
    fn act(&self, family: &[Matrix], x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero(v.len());
        for (m, c) in family.iter().zip(x) {
            let w = self.mv(m, v);
            for (o, wi) in out.iter_mut().zip(&w) {
                *o = &*o + &(c * wi);
            }
        }
        out
    }

    /// `Σ x_i family[i]` as a matrix.
    fn comb(&self, family: &[Matrix], x: &[Scalar]) -> Matrix {
        let r = family[0].rows();
        Matrix::from_fn(self.f, r, r, |i, j| {
            family
                .iter()
                .zip(x)
                .fold(self.f.zero(), |acc, (m, c)| &acc + &(c * m.get(i, j)))
        })
    }
}

struct Collect(Vec<Violation>);

impl Collect {
    fn check(&mut self, name: &str, idx: Vec<usize>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        if lhs != rhs {
            self.0.push(Violation {
                identity: name.to_string(),
                indices: idx,
                lhs,
                rhs,
            });
        }
    }
}

/// Evaluates a named identity directly from coefficients.
pub fn oracle_eval(identity: &str, b: &Bindings) -> Result<CheckReport> {
    let alg = need(&b.algebra, "algebra")?;
    let raw = Raw { f: alg.field() };
    let n = alg.dim();
    let mut out = Collect(Vec::new());
    match identity {
        "leibniz" => {
            for a in 0..n {
                for bb in 0..n {
                    for c in 0..n {
                        let (ea, eb, ec) = (raw.basis(n, a), raw.basis(n, bb), raw.basis(n, c));
                        let lhs = raw.br(alg, &ea, &raw.br(alg, &eb, &ec));
                        let rhs = raw.add(
                            &raw.br(alg, &raw.br(alg, &ea, &eb), &ec),
                            &raw.br(alg, &eb, &raw.br(alg, &ea, &ec)),
                        );
                        out.check("leibniz", vec![a, bb, c], lhs, rhs);
                    }
                }
            }
        }
        "representation" => {
            let rep = need(&b.rep, "rep")?;
            let (l, r) = (rep.rho_l(), rep.rho_r());
            for i in 0..n {
                for j in 0..n {
                    let xy = raw.br(alg, &raw.basis(n, i), &raw.basis(n, j));
                    let lxy = raw.comb(l, &xy);
                    let rxy = raw.comb(r, &xy);
                    out.check(
                        "rep-left",
                        vec![i, j],
                        lxy.entries().to_vec(),
                        raw.sub(&raw.mm(&l[i], &l[j]), &raw.mm(&l[j], &l[i])),
                    );
                    out.check(
                        "rep-mixed",
                        vec![i, j],
                        rxy.entries().to_vec(),
                        raw.sub(&raw.mm(&l[i], &r[j]), &raw.mm(&r[j], &l[i])),
                    );
                    let neg: Vec<Scalar> = raw.mm(&r[j], &r[i]).iter().map(|x| -x).collect();
                    out.check("rep-right", vec![i, j], raw.mm(&r[j], &l[i]), neg);
                }
            }
        }
        "kupershmidt" | "compatible" => {
            let rep = need(&b.rep, "rep")?;
            let k1 = need(&b.map, "map")?;
            let k2 = if identity == "compatible" {
                need(&b.second, "second")?
            } else {
                k1
            };
            let m = rep.mdim();
            let prod = |k: &Matrix, u: &[Scalar], v: &[Scalar]| {
                raw.add(
                    &raw.act(rep.rho_l(), &raw.mv(k, u), v),
                    &raw.act(rep.rho_r(), &raw.mv(k, v), u),
                )
            };
            for u in 0..m {
                for v in 0..m {
                    let (eu, ev) = (raw.basis(m, u), raw.basis(m, v));
                    let (lhs, rhs) = if identity == "kupershmidt" {
                        (
                            raw.br(alg, &raw.col(k1, u), &raw.col(k1, v)),
                            raw.mv(k1, &prod(k1, &eu, &ev)),
                        )
                    } else {
                        (
                            raw.add(
                                &raw.br(alg, &raw.col(k1, u), &raw.col(k2, v)),
                                &raw.br(alg, &raw.col(k2, u), &raw.col(k1, v)),
                            ),
                            raw.add(
                                &raw.mv(k1, &prod(k2, &eu, &ev)),
                                &raw.mv(k2, &prod(k1, &eu, &ev)),
                            ),
                        )
                    };
                    out.check(identity, vec![u, v], lhs, rhs);
                }
            }
        }
        "nijenhuis" => nijenhuis(&raw, alg, need(&b.map, "map")?, &mut out),
        "rota-baxter" => {
            let r = need(&b.map, "map")?;
            for i in 0..n {
                for j in 0..n {
                    let (ri, rj) = (raw.col(r, i), raw.col(r, j));
                    let lhs = raw.br(alg, &ri, &rj);
                    let inner = raw.add(
                        &raw.br(alg, &ri, &raw.basis(n, j)),
                        &raw.br(alg, &raw.basis(n, i), &rj),
                    );
                    out.check("rota-baxter", vec![i, j], lhs, raw.mv(r, &inner));
                }
            }
        }
        "nijenhuis-pair" | "dual-nijenhuis-pair" => {
            let rep = need(&b.rep, "rep")?;
            let nm = need(&b.map, "map")?;
            let s = need(&b.second, "second")?;
            nijenhuis(&raw, alg, nm, &mut out);
            let dual = identity == "dual-nijenhuis-pair";
            let prefix = if dual { "dual-pair" } else { "pair" };
            for i in 0..n {
                let ne = raw.col(nm, i);
                for (side, family) in [("left", rep.rho_l()), ("right", rep.rho_r())] {
                    let act = raw.comb(family, &ne);
                    let base = &family[i];
                    let lhs = raw.mm(&act, s);
                    let s_act = raw.mm(s, &act);
                    let s_base = Matrix::from_fn(raw.f, s.rows(), s.cols(), |a, c| {
                        (0..s.cols()).fold(raw.f.zero(), |acc, k| {
                            &acc + &(s.get(a, k) * base.get(k, c))
                        })
                    });
                    let base_s = Matrix::from_fn(raw.f, s.rows(), s.cols(), |a, c| {
                        (0..s.cols()).fold(raw.f.zero(), |acc, k| {
                            &acc + &(base.get(a, k) * s.get(k, c))
                        })
                    });
                    let rhs = if dual {
                        raw.sub(&raw.add(&s_act, &raw.mm(&base_s, s)), &raw.mm(&s_base, s))
                    } else {
                        raw.sub(&raw.add(&s_act, &raw.mm(&s_base, s)), &raw.mm(s, &s_base))
                    };
                    out.check(&format!("{prefix}-{side}"), vec![i], lhs, rhs);
                }
            }
        }
        "maurer-cartan" | "strong-maurer-cartan" => {
            let ctx = need(&b.twilled, "twilled")?;
            let theta = need(&b.map, "map")?;
            let total = ctx.total();
            let (n1, n2) = (ctx.n1(), ctx.n2());
            let c = |a: usize, bb: usize, k: usize| total.structure(a, bb, k);
            let th = |a: usize, y: usize| theta.get(a, y);
            for y in 0..n1 {
                for z in 0..n1 {
                    // g2 components: [Θy,Θz], [y,Θz], [Θy,z]; g1 components of the
                    // mixed brackets and [y,z].
                    let mut lhs = raw.zero(n2);
                    let mut action = raw.zero(n2);
                    for (k, slot) in lhs.iter_mut().enumerate() {
                        let mut acc = raw.f.zero();
                        for a in 0..n2 {
                            for bb in 0..n2 {
                                acc =
                                    &acc + &(&(th(a, y) * th(bb, z)) * c(n1 + a, n1 + bb, n1 + k));
                            }
                        }
                        let mut act = raw.f.zero();
                        for bb in 0..n2 {
                            act = &act + &(th(bb, z) * c(y, n1 + bb, n1 + k));
                            act = &act + &(th(bb, y) * c(n1 + bb, z, n1 + k));
                        }
                        action[k] = act.clone();
                        *slot = &acc + &act;
                    }
                    let mut back = raw.zero(n1);
                    let mut yz = raw.zero(n1);
                    for (j, slot) in back.iter_mut().enumerate() {
                        let mut acc = raw.f.zero();
                        for a in 0..n2 {
                            acc = &acc + &(th(a, y) * c(n1 + a, z, j));
                            acc = &acc + &(th(a, z) * c(y, n1 + a, j));
                        }
                        *slot = acc;
                        yz[j] = c(y, z, j).clone();
                    }
                    let t_yz = raw.mv(theta, &yz);
                    if identity == "maurer-cartan" {
                        let rhs = raw.add(&raw.mv(theta, &back), &t_yz);
                        out.check("maurer-cartan", vec![y, z], lhs, rhs);
                    } else {
                        out.check("strong-maurer-cartan", vec![y, z], t_yz, action);
                    }
                }
            }
        }
        "ybe" => {
            let p = need(&b.map, "map")?;
            let pp = |i: usize, j: usize| p.get(i, j);
            for x in 0..n {
                for y in 0..n {
                    let mut plus = raw.zero(n);
                    let mut minus = raw.zero(n);
                    for z in 0..n {
                        let mut pl = raw.f.zero();
                        let mut mi = raw.f.zero();
                        for i in 0..n {
                            for k in 0..n {
                                pl = &pl + &(&(pp(x, i) * pp(k, z)) * alg.structure(i, k, y));
                                pl = &pl + &(&(pp(x, i) * pp(y, k)) * alg.structure(i, k, z));
                                mi = &mi + &(&(pp(i, y) * pp(k, z)) * alg.structure(i, k, x));
                                mi = &mi + &(&(pp(i, z) * pp(k, y)) * alg.structure(i, k, x));
                            }
                        }
                        plus[z] = pl;
                        minus[z] = mi;
                    }
                    out.check("ybe", vec![x, y], plus, minus);
                }
            }
        }
        "quadratic" => {
            let q = need(&b.map, "map")?;
            let form = |x: &[Scalar], y: &[Scalar]| {
                let mut acc = raw.f.zero();
                for i in 0..n {
                    for j in 0..n {
                        acc = &acc + &(&(&x[i] * q.get(i, j)) * &y[j]);
                    }
                }
                acc
            };
            for a in 0..n {
                for bb in 0..n {
                    for c in 0..n {
                        let (ea, eb, ec) = (raw.basis(n, a), raw.basis(n, bb), raw.basis(n, c));
                        let lhs = form(&ea, &raw.br(alg, &eb, &ec));
                        let s = raw.add(&raw.br(alg, &ea, &ec), &raw.br(alg, &ec, &ea));
                        out.check("quadratic", vec![a, bb, c], vec![lhs], vec![form(&s, &eb)]);
                    }
                }
            }
        }
        other => return Err(Error::UnknownIdentity(other.to_string())),
    }
    Ok(CheckReport::from_violations(out.0))
}

fn nijenhuis(raw: &Raw, alg: &LeibnizAlgebra, nm: &Matrix, out: &mut Collect) {
    let n = alg.dim();
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (raw.basis(n, i), raw.basis(n, j));
            let (nx, ny) = (raw.col(nm, i), raw.col(nm, j));
            let lhs = raw.br(alg, &nx, &ny);
            let inner = raw.sub(
                &raw.add(&raw.br(alg, &nx, &y), &raw.br(alg, &x, &ny)),
                &raw.mv(nm, &raw.br(alg, &x, &y)),
            );
            out.check("nijenhuis", vec![i, j], lhs, raw.mv(nm, &inner));
        }
    }
}
