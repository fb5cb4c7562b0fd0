//! Nijenhuis pairs, trivial deformations and KN-structures.

use crate::algebra::{
    check_leibniz, check_representation, dual_representation, twilled_bracket, LeibnizAlgebra,
    Representation, TwilledContext,
};
use crate::error::{Error, Result};
use crate::linear::{FieldSpec, Matrix, Scalar};
use crate::operators::{
    check_compatible, check_kupershmidt, check_nijenhuis, deform_table, is_kupershmidt,
    is_nijenhuis, ks_violations, kupershmidt_bracket, nijenhuis_violations, LinearOperator,
};
use crate::report::{violation, CheckReport, Violation};

/// `N` on the algebra together with `S` on the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPair {
    pub n: LinearOperator,
    pub s: LinearOperator,
}

impl OperatorPair {
    pub fn new(n: Matrix, s: Matrix) -> Self {
        OperatorPair {
            n: LinearOperator::on_algebra(n),
            s: LinearOperator::on_module(s),
        }
    }

    pub fn n(&self) -> &Matrix {
        self.n.map()
    }

    pub fn s(&self) -> &Matrix {
        self.s.map()
    }

    fn check_shape(&self, rep: &Representation) -> Result<()> {
        let (n, m) = (rep.algebra().dim(), rep.mdim());
        if self.n().rows() != n || self.n().cols() != n {
            return Err(Error::ShapeMismatch(format!("N must be {n}x{n}")));
        }
        if self.s().rows() != m || self.s().cols() != m {
            return Err(Error::ShapeMismatch(format!("S must be {m}x{m}")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnMode {
    Kn,
    DualKn,
}

impl KnMode {
    pub fn name(self) -> &'static str {
        match self {
            KnMode::Kn => "kn",
            KnMode::DualKn => "dual-kn",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnStructure {
    pub k: LinearOperator,
    pub pair: OperatorPair,
    pub mode: KnMode,
}

impl KnStructure {
    pub fn new(k: Matrix, n: Matrix, s: Matrix, mode: KnMode) -> Self {
        KnStructure {
            k: LinearOperator::module_to_algebra(k),
            pair: OperatorPair::new(n, s),
            mode,
        }
    }

    pub fn k(&self) -> &Matrix {
        self.k.map()
    }

    pub fn n(&self) -> &Matrix {
        self.pair.n()
    }

    pub fn s(&self) -> &Matrix {
        self.pair.s()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PairKind {
    Nijenhuis,
    Dual,
    Perfect,
}

/// Per basis element `e_i` and side, the matrix identity for the pair kind.
fn pair_violations(pair: &OperatorPair, rep: &Representation, kind: PairKind) -> Vec<Violation> {
    let alg = rep.algebra();
    let (n, s) = (pair.n(), pair.s());
    let s2 = s.mul(s).expect("square");
    let two = rep.field().int(2);
    let mut out = Vec::new();
    for i in 0..alg.dim() {
        let ne = n.column(i);
        for (side, family, act) in [
            ("left", rep.rho_l(), rep.left(&ne)),
            ("right", rep.rho_r(), rep.right(&ne)),
        ] {
            let r = &family[i];
            let (lhs, rhs, name) = match kind {
                PairKind::Nijenhuis => {
                    let lhs = act.mul(s).unwrap();
                    let rhs = s
                        .mul(&act)
                        .unwrap()
                        .add(&s.mul(r).unwrap().mul(s).unwrap())
                        .unwrap()
                        .sub(&s2.mul(r).unwrap())
                        .unwrap();
                    (lhs, rhs, "pair")
                }
                PairKind::Dual => {
                    let lhs = act.mul(s).unwrap();
                    let rhs = s
                        .mul(&act)
                        .unwrap()
                        .add(&r.mul(&s2).unwrap())
                        .unwrap()
                        .sub(&s.mul(r).unwrap().mul(s).unwrap())
                        .unwrap();
                    (lhs, rhs, "dual-pair")
                }
                PairKind::Perfect => {
                    let lhs = s2.mul(r).unwrap().add(&r.mul(&s2).unwrap()).unwrap();
                    let rhs = s.mul(r).unwrap().mul(s).unwrap().scale(&two);
                    (lhs, rhs, "perfect")
                }
            };
            if lhs != rhs {
                out.push(violation(
                    &format!("{name}-{side}"),
                    vec![i],
                    lhs.flatten(),
                    rhs.flatten(),
                ));
            }
        }
    }
    out
}

fn pair_report(pair: &OperatorPair, rep: &Representation, kind: PairKind) -> Result<CheckReport> {
    pair.check_shape(rep)?;
    let mut v = nijenhuis_violations(rep.algebra(), pair.n());
    v.extend(pair_violations(pair, rep, kind));
    Ok(CheckReport::from_violations(v))
}

/// `N` Nijenhuis and `ρ(Ne_i)S = Sρ(Ne_i) + Sρ(e_i)S - S²ρ(e_i)` on both sides.
pub fn check_nijenhuis_pair(pair: &OperatorPair, rep: &Representation) -> Result<CheckReport> {
    pair_report(pair, rep, PairKind::Nijenhuis)
}

/// `N` Nijenhuis and `ρ(Ne_i)S = Sρ(Ne_i) + ρ(e_i)S² - Sρ(e_i)S` on both sides.
pub fn check_dual_nijenhuis_pair(pair: &OperatorPair, rep: &Representation) -> Result<CheckReport> {
    pair_report(pair, rep, PairKind::Dual)
}

pub(crate) fn is_pair(pair: &OperatorPair, rep: &Representation) -> bool {
    is_nijenhuis(rep.algebra(), pair.n())
        && pair_violations(pair, rep, PairKind::Nijenhuis).is_empty()
}

pub(crate) fn is_dual_pair(pair: &OperatorPair, rep: &Representation) -> bool {
    is_nijenhuis(rep.algebra(), pair.n()) && pair_violations(pair, rep, PairKind::Dual).is_empty()
}

/// `S²ρ(e_i) + ρ(e_i)S² = 2Sρ(e_i)S` on both sides, for a Nijenhuis pair.
pub fn check_perfect_pair(pair: &OperatorPair, rep: &Representation) -> Result<CheckReport> {
    pair.check_shape(rep)?;
    if !is_pair(pair, rep) {
        return Err(Error::NotNijenhuisPair);
    }
    Ok(CheckReport::from_violations(pair_violations(
        pair,
        rep,
        PairKind::Perfect,
    )))
}

/// Deformation data of a pair, with the per-sample verification results.
#[derive(Clone, Debug)]
pub struct DeformationTriple {
    /// `ω = [,]_N`.
    pub omega: LeibnizAlgebra,
    pub varpi_l: Vec<Matrix>,
    pub varpi_r: Vec<Matrix>,
    /// Sample values at which `I + tN` and `I + tS` are invertible.
    pub checked: Vec<Scalar>,
    /// Sample values skipped because one of the maps is singular.
    pub skipped: Vec<Scalar>,
    pub report: CheckReport,
}

fn varpi(pair: &OperatorPair, rep: &Representation, family: &[Matrix], left: bool) -> Vec<Matrix> {
    let s = pair.s();
    (0..rep.algebra().dim())
        .map(|i| {
            let ne = pair.n().column(i);
            let base = if left { rep.left(&ne) } else { rep.right(&ne) };
            let r = &family[i];
            base.add(&r.mul(s).unwrap())
                .unwrap()
                .sub(&s.mul(r).unwrap())
                .unwrap()
        })
        .collect()
}

fn shifted(family: &[Matrix], delta: &[Matrix], t: &Scalar) -> Vec<Matrix> {
    family
        .iter()
        .zip(delta)
        .map(|(a, b)| a.add(&b.scale(t)).unwrap())
        .collect()
}

/// Builds `(ω, ϖL, ϖR)` from a Nijenhuis pair and verifies, at each sample
/// `t`, that the deformed bracket and actions form a representation and that
/// `(I + tN, I + tS)` maps the deformed structure onto the original.
pub fn deformation_from_pair(
    pair: &OperatorPair,
    rep: &Representation,
    t_samples: &[Scalar],
) -> Result<DeformationTriple> {
    if !check_nijenhuis_pair(pair, rep)?.ok {
        return Err(Error::NotNijenhuisPair);
    }
    let alg = rep.algebra();
    let f = rep.field();
    let (n, m) = (alg.dim(), rep.mdim());
    let omega = deform_table(alg, pair.n());
    let varpi_l = varpi(pair, rep, rep.rho_l(), true);
    let varpi_r = varpi(pair, rep, rep.rho_r(), false);

    let mut report = CheckReport::passed();
    let mut bad = Vec::new();
    for i in 0..n {
        let ne_i = pair.n().column(i);
        for j in 0..n {
            let lhs = pair.n().apply(omega.bracket_basis(i, j))?;
            let rhs = alg.bracket(&ne_i, &pair.n().column(j));
            if lhs != rhs {
                bad.push((i, j));
            }
        }
    }
    report.consequence(
        "N maps the deformation cocycle to [Nx, Ny]",
        bad.is_empty(),
        if bad.is_empty() {
            String::new()
        } else {
            format!("fails at {bad:?}")
        },
    );

    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    for t in t_samples {
        let t = f.coerce(t)?;
        let it_n = Matrix::identity(f, n).add(&pair.n().scale(&t))?;
        let it_s = Matrix::identity(f, m).add(&pair.s().scale(&t))?;
        if !it_n.is_invertible() || !it_s.is_invertible() {
            skipped.push(t);
            continue;
        }
        let bracket_t = alg.plus(&omega.scaled(&t))?;
        report.consequence(
            format!("deformed bracket is Leibniz at t = {t}"),
            check_leibniz(&bracket_t).ok,
            "",
        );
        let rho_t = Representation::new(
            bracket_t.clone(),
            m,
            shifted(rep.rho_l(), &varpi_l, &t),
            shifted(rep.rho_r(), &varpi_r, &t),
        )?;
        report.consequence(
            format!("deformed actions form a representation at t = {t}"),
            check_representation(&rho_t).ok,
            "",
        );

        let mut eq_bracket = true;
        for i in 0..n {
            for j in 0..n {
                let lhs = it_n.apply(bracket_t.bracket_basis(i, j))?;
                let rhs = alg.bracket(&it_n.column(i), &it_n.column(j));
                eq_bracket &= lhs == rhs;
            }
        }
        report.consequence(
            format!("I + tN intertwines the brackets at t = {t}"),
            eq_bracket,
            "",
        );
        let mut eq_left = true;
        let mut eq_right = true;
        for i in 0..n {
            let xi = it_n.column(i);
            eq_left &= it_s.mul(&rho_t.rho_l()[i])? == rep.left(&xi).mul(&it_s)?;
            eq_right &= it_s.mul(&rho_t.rho_r()[i])? == rep.right(&xi).mul(&it_s)?;
        }
        report.consequence(
            format!("I + tS intertwines the left actions at t = {t}"),
            eq_left,
            "",
        );
        report.consequence(
            format!("I + tS intertwines the right actions at t = {t}"),
            eq_right,
            "",
        );
        checked.push(t);
    }
    Ok(DeformationTriple {
        omega,
        varpi_l,
        varpi_r,
        checked,
        skipped,
        report,
    })
}

fn hat_family(
    pair: &OperatorPair,
    rep: &Representation,
    family: &[Matrix],
    left: bool,
    hat: bool,
) -> Vec<Matrix> {
    let s = pair.s();
    (0..rep.algebra().dim())
        .map(|i| {
            let ne = pair.n().column(i);
            let base = if left { rep.left(&ne) } else { rep.right(&ne) };
            let r = &family[i];
            let comm = if hat {
                r.mul(s).unwrap().sub(&s.mul(r).unwrap()).unwrap()
            } else {
                s.mul(r).unwrap().sub(&r.mul(s).unwrap()).unwrap()
            };
            base.add(&comm).unwrap()
        })
        .collect()
}

/// `ρ̂ = ρ∘N + [ρ, S]` and `ρ̃ = ρ∘N - [ρ, S]`, both over `(g, [,]_N)`.
/// Fails unless the pair is a Nijenhuis or dual-Nijenhuis pair.
pub fn hat_tilde_representations(
    pair: &OperatorPair,
    rep: &Representation,
) -> Result<(Representation, Representation)> {
    pair.check_shape(rep)?;
    if !is_pair(pair, rep) && !is_dual_pair(pair, rep) {
        return Err(Error::NeitherPairKind);
    }
    hat_tilde_unchecked(pair, rep)
}

pub(crate) fn hat_tilde_unchecked(
    pair: &OperatorPair,
    rep: &Representation,
) -> Result<(Representation, Representation)> {
    let deformed = deform_table(rep.algebra(), pair.n());
    let m = rep.mdim();
    let hat = Representation::new(
        deformed.clone(),
        m,
        hat_family(pair, rep, rep.rho_l(), true, true),
        hat_family(pair, rep, rep.rho_r(), false, true),
    )?;
    let tilde = Representation::new(
        deformed,
        m,
        hat_family(pair, rep, rep.rho_l(), true, false),
        hat_family(pair, rep, rep.rho_r(), false, false),
    )?;
    Ok((hat, tilde))
}

/// `[w,u]_S^K = [Sw,u]^K + [w,Su]^K - S[w,u]^K`.
pub fn s_deformed_bracket(k: &Matrix, s: &Matrix, rep: &Representation) -> Result<LeibnizAlgebra> {
    let vk = kupershmidt_bracket(k, rep)?;
    Ok(deform_table(&vk, s))
}

pub(crate) fn table_violations(
    name: &str,
    a: &LeibnizAlgebra,
    b: &LeibnizAlgebra,
) -> Vec<Violation> {
    let m = a.dim();
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if a.bracket_basis(i, j) != b.bracket_basis(i, j) {
                out.push(violation(
                    name,
                    vec![i, j],
                    a.bracket_basis(i, j).clone(),
                    b.bracket_basis(i, j).clone(),
                ));
            }
        }
    }
    out
}

/// Checks `NK = KS` and `[,]^{NK} = [,]_S^K`; on success records the
/// downstream statements as consequences.
pub fn check_kn_structure(kn: &KnStructure, rep: &Representation) -> Result<CheckReport> {
    check_kn_structure_with(kn, rep, true)
}

pub fn check_kn_structure_with(
    kn: &KnStructure,
    rep: &Representation,
    consequences: bool,
) -> Result<CheckReport> {
    kn.pair.check_shape(rep)?;
    if !check_kupershmidt(&kn.k, rep)?.ok {
        return Err(Error::NotKupershmidt);
    }
    let pair_ok = match kn.mode {
        KnMode::Kn => is_pair(&kn.pair, rep),
        KnMode::DualKn => is_dual_pair(&kn.pair, rep),
    };
    if !pair_ok {
        return Err(Error::PairCheckFailed(format!(
            "(N, S) fails the {} pair identities",
            kn.mode.name()
        )));
    }
    let (k, n, s) = (kn.k(), kn.n(), kn.s());
    let nk = n.mul(k)?;
    let ks = k.mul(s)?;
    let mut violations = Vec::new();
    if nk != ks {
        violations.push(violation(
            "nk-equals-ks",
            vec![],
            nk.flatten(),
            ks.flatten(),
        ));
    }
    let nk_bracket = kupershmidt_bracket(&nk, rep)?;
    let s_bracket = s_deformed_bracket(k, s, rep)?;
    violations.extend(table_violations("kn-bracket", &nk_bracket, &s_bracket));
    let mut report = CheckReport::from_violations(violations);
    if report.ok && consequences {
        kn_consequences(kn, rep, &nk, &nk_bracket, &s_bracket, &mut report)?;
    }
    Ok(report)
}

fn kn_consequences(
    kn: &KnStructure,
    rep: &Representation,
    nk: &Matrix,
    nk_bracket: &LeibnizAlgebra,
    s_bracket: &LeibnizAlgebra,
    report: &mut CheckReport,
) -> Result<()> {
    let (k, s) = (kn.k(), kn.s());
    let (hat, tilde) = hat_tilde_unchecked(&kn.pair, rep)?;
    let hat_bracket = kupershmidt_bracket(k, &hat)?;
    let tilde_bracket = kupershmidt_bracket(k, &tilde)?;
    report.consequence(
        "S-deformed bracket equals the hat bracket",
        *s_bracket == hat_bracket,
        "",
    );
    report.consequence(
        "S-deformed bracket equals the tilde bracket",
        *s_bracket == tilde_bracket,
        "",
    );
    report.consequence(
        "hat and tilde brackets sum to twice the NK bracket",
        hat_bracket.plus(&tilde_bracket)? == nk_bracket.scaled(&rep.field().int(2)),
        "",
    );

    let vk = kupershmidt_bracket(k, rep)?;
    report.consequence(
        "S is Nijenhuis on the sub-adjacent algebra",
        is_nijenhuis(&vk, s),
        "",
    );
    report.consequence(
        "S-deformed bracket is Leibniz",
        check_leibniz(s_bracket).ok,
        "",
    );
    report.consequence("hat bracket is Leibniz", check_leibniz(&hat_bracket).ok, "");
    report.consequence(
        "tilde bracket is Leibniz",
        check_leibniz(&tilde_bracket).ok,
        "",
    );

    let (label, own) = match kn.mode {
        KnMode::Kn => ("hat", &hat),
        KnMode::DualKn => ("tilde", &tilde),
    };
    report.consequence(
        format!("{label} actions form a representation of the N-deformed algebra"),
        check_representation(own).ok,
        "",
    );
    report.consequence(
        format!("K is Kupershmidt for the {label} representation"),
        ks_violations(k, own, "kupershmidt").is_empty(),
        "",
    );
    report.consequence("NK is Kupershmidt", is_kupershmidt(nk, rep), "");

    let kop = LinearOperator::module_to_algebra(k.clone());
    let kso = LinearOperator::module_to_algebra(k.mul(s)?);
    let compat = check_compatible(&kop, &kso, rep)?;
    report.consequence_from("K and KS are compatible", &compat);
    report.consequence(
        "K + KS is Kupershmidt",
        is_kupershmidt(&k.add(kso.map())?, rep),
        "",
    );

    if kn.mode == KnMode::Kn && k.is_invertible() {
        report.consequence(
            "invertible K makes (N, S) a dual-Nijenhuis pair",
            is_dual_pair(&kn.pair, rep),
            "",
        );
    }
    Ok(())
}

/// Re-labels an invertible KN-structure as a dual KN-structure.
pub fn kn_to_dual_kn(kn: &KnStructure, rep: &Representation) -> Result<KnStructure> {
    if kn.mode != KnMode::Kn {
        return Err(Error::Unsupported("expected a KN-structure".into()));
    }
    kn.k().inverse()?;
    if !check_kn_structure_with(kn, rep, false)?.ok {
        return Err(Error::PairCheckFailed("not a KN-structure".into()));
    }
    Ok(KnStructure {
        mode: KnMode::DualKn,
        ..kn.clone()
    })
}

/// `K` compatible with `KS`, and `K + KS` Kupershmidt.
pub fn compatible_from_kn(kn: &KnStructure, rep: &Representation) -> Result<CheckReport> {
    let ks = LinearOperator::module_to_algebra(kn.k().mul(kn.s())?);
    let mut report = check_compatible(&kn.k, &ks, rep)?;
    let sum = kn.k.add(&ks)?;
    let sum_report = check_kupershmidt(&sum, rep)?;
    let mut v = std::mem::take(&mut report.violations);
    v.extend(sum_report.violations.into_iter().map(|mut x| {
        x.identity = "sum-kupershmidt".into();
        x
    }));
    let c = std::mem::take(&mut report.consequences);
    let mut out = CheckReport::from_violations(v);
    out.consequences = c;
    Ok(out)
}

/// `(K1, S = K1⁻¹K2, N = K2K1⁻¹)` and `(K2, S, N)` for compatible operators
/// with `K1` invertible.
pub fn dual_kn_from_compatible(
    k1: &LinearOperator,
    k2: &LinearOperator,
    rep: &Representation,
) -> Result<(KnStructure, KnStructure)> {
    let k1_inv = k1.map().inverse()?;
    if !check_compatible(k1, k2, rep)?.ok {
        return Err(Error::NotCompatible);
    }
    let s = k1_inv.mul(k2.map())?;
    let n = k2.map().mul(&k1_inv)?;
    Ok((
        KnStructure::new(k1.map().clone(), n.clone(), s.clone(), KnMode::DualKn),
        KnStructure::new(k2.map().clone(), n, s, KnMode::DualKn),
    ))
}

/// Block-diagonal `N ⊕ S` on `g1 ⊕ g2`.
pub fn block_diagonal(field: FieldSpec, a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = (a.rows(), b.rows());
    Matrix::from_fn(field, p + q, p + q, |i, j| match (i < p, j < p) {
        (true, true) => a.get(i, j).clone(),
        (false, false) => b.get(i - p, j - p).clone(),
        _ => field.zero(),
    })
}

/// For `(N, S)` a Nijenhuis pair on `g1` acting on `g2` and `(S, N)` one on
/// `g2` acting on `g1`: `N ⊕ S` is Nijenhuis on the total algebra. For a
/// perfect pair, also checks `N ⊕ Sᵀ` on `g1 ⋉ g2*`.
pub fn sum_nijenhuis_on_twilled(
    pair_ns: &OperatorPair,
    pair_sn: &OperatorPair,
    ctx: &TwilledContext,
) -> Result<CheckReport> {
    if pair_ns.n() != pair_sn.s() || pair_ns.s() != pair_sn.n() {
        return Err(Error::PairCheckFailed(
            "the two pairs must swap the same maps".into(),
        ));
    }
    pair_ns.check_shape(ctx.rho1())?;
    pair_sn.check_shape(ctx.rho2())?;
    if !is_pair(pair_ns, ctx.rho1()) {
        return Err(Error::PairCheckFailed(
            "(N, S) is not a Nijenhuis pair".into(),
        ));
    }
    if !is_pair(pair_sn, ctx.rho2()) {
        return Err(Error::PairCheckFailed(
            "(S, N) is not a Nijenhuis pair".into(),
        ));
    }
    let f = ctx.total().field();
    let sum = LinearOperator::on_algebra(block_diagonal(f, pair_ns.n(), pair_ns.s()));
    let mut report = check_nijenhuis(ctx.total(), &sum)?;
    if report.ok && pair_violations(pair_ns, ctx.rho1(), PairKind::Perfect).is_empty() {
        let dual = dual_representation(ctx.rho1())?;
        let g2_dual = LeibnizAlgebra::abelian(f, ctx.n2());
        let back = Representation::zero(g2_dual.clone(), ctx.n1());
        let total = twilled_bracket(ctx.g1(), &g2_dual, &dual, &back)?;
        let sum_t = block_diagonal(f, pair_ns.n(), &pair_ns.s().transpose());
        report.consequence(
            "N + S* is Nijenhuis on g1 with the dual module",
            is_nijenhuis(&total, &sum_t),
            "",
        );
    }
    Ok(report)
}

#[cfg(test)]
fn bracket_diff(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> bool {
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            crate::linear::vec_sub(a.bracket_basis(i, j), b.bracket_basis(i, j))
                .iter()
                .all(Scalar::is_zero)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::regular_representation;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn l2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_entries(Q, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
    }

    fn n74() -> Matrix {
        Matrix::from_ints(Q, &[&[2, -1], &[0, 3]])
    }

    #[test]
    fn identity_pairs() {
        let reg = regular_representation(&l2()).unwrap();
        let id = OperatorPair::new(Matrix::identity(Q, 2), Matrix::identity(Q, 2));
        assert!(check_nijenhuis_pair(&id, &reg).unwrap().ok);
        assert!(check_dual_nijenhuis_pair(&id, &reg).unwrap().ok);
        assert!(check_perfect_pair(&id, &reg).unwrap().ok);
    }

    #[test]
    fn example_n_with_zero_s() {
        let reg = regular_representation(&l2()).unwrap();
        let p = OperatorPair::new(n74(), Matrix::zeros(Q, 2, 2));
        assert!(check_nijenhuis_pair(&p, &reg).unwrap().ok);
        let samples = [Q.int(1), Q.int(2), Q.ratio(-1, 3).unwrap()];
        let d = deformation_from_pair(&p, &reg, &samples).unwrap();
        assert!(d.report.consequences_ok(), "{}", d.report);
        assert_eq!(d.checked.len() + d.skipped.len(), 3);
    }

    #[test]
    fn duality_of_pairs() {
        let reg = regular_representation(&l2()).unwrap();
        let dual = dual_representation(&reg).unwrap();
        let s = Matrix::from_ints(Q, &[&[1, 2], &[0, 0]]);
        for n in [n74(), Matrix::identity(Q, 2)] {
            let p = OperatorPair::new(n.clone(), s.clone());
            let pt = OperatorPair::new(n, s.transpose());
            assert_eq!(
                check_nijenhuis_pair(&p, &reg).unwrap().ok,
                check_dual_nijenhuis_pair(&pt, &dual).unwrap().ok
            );
        }
    }

    #[test]
    fn non_idempotent_s_violates() {
        let reg = regular_representation(&l2()).unwrap();
        let p = OperatorPair::new(
            Matrix::identity(Q, 2),
            Matrix::from_ints(Q, &[&[2, 1], &[0, 0]]),
        );
        let r = check_nijenhuis_pair(&p, &reg).unwrap();
        assert!(!r.ok);
        assert!(r.violations.iter().all(|v| v.identity.starts_with("pair-")));
    }

    #[test]
    fn hat_tilde_for_zero_s() {
        let reg = regular_representation(&l2()).unwrap();
        let p = OperatorPair::new(n74(), Matrix::zeros(Q, 2, 2));
        let (hat, tilde) = hat_tilde_representations(&p, &reg).unwrap();
        assert_eq!(hat, tilde);
        assert!(check_representation(&hat).ok);
        assert!(bracket_diff(hat.algebra(), &deform_table(&l2(), &n74())));
    }

    #[test]
    fn trivial_kn_structures() {
        let reg = regular_representation(&l2()).unwrap();
        let r = Matrix::from_ints(Q, &[&[0, 1], &[0, -1]]);
        for mode in [KnMode::Kn, KnMode::DualKn] {
            let zero = KnStructure::new(
                r.clone(),
                Matrix::zeros(Q, 2, 2),
                Matrix::zeros(Q, 2, 2),
                mode,
            );
            let rep = check_kn_structure(&zero, &reg).unwrap();
            assert!(rep.ok && rep.consequences_ok(), "{rep}");
            let id = KnStructure::new(
                r.clone(),
                Matrix::identity(Q, 2),
                Matrix::identity(Q, 2),
                mode,
            );
            let rep = check_kn_structure(&id, &reg).unwrap();
            assert!(rep.ok && rep.consequences_ok(), "{rep}");
        }
    }

    #[test]
    fn compatible_pairs_give_dual_kn() {
        let alg = LeibnizAlgebra::abelian(Q, 2);
        let reg = regular_representation(&alg).unwrap();
        let k1 = LinearOperator::module_to_algebra(Matrix::from_ints(Q, &[&[1, 1], &[0, 2]]));
        let k2 = k1.scale(&Q.int(3));
        let (a, b) = dual_kn_from_compatible(&k1, &k2, &reg).unwrap();
        assert_eq!(a.s(), &Matrix::scalar(Q, 2, &Q.int(3)));
        assert!(check_kn_structure(&a, &reg).unwrap().ok);
        assert!(check_kn_structure(&b, &reg).unwrap().ok);
    }
}
