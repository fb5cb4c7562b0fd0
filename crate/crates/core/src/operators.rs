//! Kupershmidt, Rota-Baxter and Nijenhuis operators.

use crate::algebra::{
    check_leibniz, check_representation, regular_representation, twilled_bracket, LeibnizAlgebra,
    Representation,
};
use crate::error::{Error, Result};
use crate::linear::{vec_add, vec_add_assign, vec_sub, zero_vector, Matrix, Scalar, Vector};
use crate::report::{violation, CheckReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpaceTag {
    Algebra,
    Module,
}

impl SpaceTag {
    pub fn name(self) -> &'static str {
        match self {
            SpaceTag::Algebra => "algebra",
            SpaceTag::Module => "module",
        }
    }
}

/// A matrix with explicit domain and codomain tags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator {
    map: Matrix,
    domain: SpaceTag,
    codomain: SpaceTag,
}

impl LinearOperator {
    pub fn new(map: Matrix, domain: SpaceTag, codomain: SpaceTag) -> Self {
        LinearOperator {
            map,
            domain,
            codomain,
        }
    }

    /// `K: V -> g`.
    pub fn module_to_algebra(map: Matrix) -> Self {
        Self::new(map, SpaceTag::Module, SpaceTag::Algebra)
    }

    /// `Θ: g -> V`.
    pub fn algebra_to_module(map: Matrix) -> Self {
        Self::new(map, SpaceTag::Algebra, SpaceTag::Module)
    }

    pub fn on_algebra(map: Matrix) -> Self {
        Self::new(map, SpaceTag::Algebra, SpaceTag::Algebra)
    }

    pub fn on_module(map: Matrix) -> Self {
        Self::new(map, SpaceTag::Module, SpaceTag::Module)
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn into_map(self) -> Matrix {
        self.map
    }

    pub fn domain(&self) -> SpaceTag {
        self.domain
    }

    pub fn codomain(&self) -> SpaceTag {
        self.codomain
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.map.apply(v).expect("operator shape checked by caller")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if other.codomain != self.domain {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.domain.name(),
                self.codomain.name(),
                other.domain.name(),
                other.codomain.name()
            )));
        }
        Ok(Self::new(
            self.map.mul(&other.map)?,
            other.domain,
            self.codomain,
        ))
    }

    pub fn add(&self, other: &LinearOperator) -> Result<LinearOperator> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ShapeMismatch(
                "operators between different spaces".into(),
            ));
        }
        Ok(Self::new(
            self.map.add(&other.map)?,
            self.domain,
            self.codomain,
        ))
    }

    pub fn scale(&self, s: &Scalar) -> LinearOperator {
        Self::new(self.map.scale(s), self.domain, self.codomain)
    }

    pub fn inverse(&self) -> Result<LinearOperator> {
        Ok(Self::new(self.map.inverse()?, self.codomain, self.domain))
    }

    /// Dual map in dual bases; tags are kept.
    pub fn transpose(&self) -> LinearOperator {
        Self::new(self.map.transpose(), self.domain, self.codomain)
    }
}

/// The two products whose sum is the sub-adjacent bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendriformPair {
    /// `u ⊲ v = ρL(Ku) v`, stored like a bracket table.
    pub lhd: LeibnizAlgebra,
    /// `u ⊳ v = ρR(Kv) u`.
    pub rhd: LeibnizAlgebra,
}

pub(crate) fn act(family: &[Matrix], x: &[Scalar], v: &[Scalar]) -> Vector {
    let m = v.len();
    let field = family[0].field();
    let mut out = zero_vector(field, m);
    for (mat, s) in family.iter().zip(x) {
        if s.is_zero() {
            continue;
        }
        let w = mat.apply(v).expect("module shape");
        for (o, wi) in out.iter_mut().zip(&w) {
            if !wi.is_zero() {
                *o += &(s * wi);
            }
        }
    }
    out
}

fn require_shape(map: &Matrix, rows: usize, cols: usize, what: &str) -> Result<()> {
    if map.rows() != rows || map.cols() != cols {
        return Err(Error::ShapeMismatch(format!(
            "{what} must be {rows}x{cols}, got {}x{}",
            map.rows(),
            map.cols()
        )));
    }
    Ok(())
}

fn require_kupershmidt_shape(k: &Matrix, rep: &Representation) -> Result<()> {
    require_shape(k, rep.algebra().dim(), rep.mdim(), "Kupershmidt operator")
}

/// `ρL(Ku) v + ρR(Kv) u`.
fn k_product(k: &Matrix, rep: &Representation, u: &[Scalar], v: &[Scalar]) -> Vector {
    let ku = k.apply(u).expect("shape");
    let kv = k.apply(v).expect("shape");
    vec_add(&act(rep.rho_l(), &ku, v), &act(rep.rho_r(), &kv, u))
}

pub(crate) fn ks_violations(k: &Matrix, rep: &Representation, name: &str) -> Vec<Violation> {
    let alg = rep.algebra();
    let m = rep.mdim();
    let f = rep.field();
    let mut out = Vec::new();
    for u in 0..m {
        let eu = crate::linear::basis_vector(f, m, u);
        let ku = k.column(u);
        for v in 0..m {
            let ev = crate::linear::basis_vector(f, m, v);
            let kv = k.column(v);
            let lhs = alg.bracket(&ku, &kv);
            let rhs = k.apply(&k_product(k, rep, &eu, &ev)).expect("shape");
            if lhs != rhs {
                out.push(violation(name, vec![u, v], lhs, rhs));
            }
        }
    }
    out
}

/// `[Ku, Kv] = K(ρL(Ku)v + ρR(Kv)u)` on basis pairs.
pub fn check_kupershmidt(k: &LinearOperator, rep: &Representation) -> Result<CheckReport> {
    require_kupershmidt_shape(k.map(), rep)?;
    Ok(CheckReport::from_violations(ks_violations(
        k.map(),
        rep,
        "kupershmidt",
    )))
}

pub(crate) fn is_kupershmidt(k: &Matrix, rep: &Representation) -> bool {
    ks_violations(k, rep, "kupershmidt").is_empty()
}

/// `[u,v]^K = ρL(Ku)v + ρR(Kv)u` for any `K`, without checking.
pub fn kupershmidt_bracket(k: &Matrix, rep: &Representation) -> Result<LeibnizAlgebra> {
    require_kupershmidt_shape(k, rep)?;
    let m = rep.mdim();
    let f = rep.field();
    Ok(LeibnizAlgebra::from_fn(f, m, |u, v| {
        k_product(
            k,
            rep,
            &crate::linear::basis_vector(f, m, u),
            &crate::linear::basis_vector(f, m, v),
        )
    }))
}

pub fn subadjacent_algebra(
    k: &LinearOperator,
    rep: &Representation,
) -> Result<(DendriformPair, LeibnizAlgebra)> {
    if !check_kupershmidt(k, rep)?.ok {
        return Err(Error::NotKupershmidt);
    }
    let km = k.map();
    let m = rep.mdim();
    let f = rep.field();
    let lhd = LeibnizAlgebra::from_fn(f, m, |u, v| {
        act(
            rep.rho_l(),
            &km.column(u),
            &crate::linear::basis_vector(f, m, v),
        )
    });
    let rhd = LeibnizAlgebra::from_fn(f, m, |u, v| {
        act(
            rep.rho_r(),
            &km.column(v),
            &crate::linear::basis_vector(f, m, u),
        )
    });
    let vk = lhd.plus(&rhd)?;
    debug_assert!(vk.is_leibniz());
    Ok((DendriformPair { lhd, rhd }, vk))
}

/// Action matrices of `V_K` on `g`, without checking `K`.
pub(crate) fn induced_matrices(k: &Matrix, rep: &Representation) -> (Vec<Matrix>, Vec<Matrix>) {
    let alg = rep.algebra();
    let (n, m) = (alg.dim(), rep.mdim());
    let f = rep.field();
    let mut left = Vec::with_capacity(m);
    let mut right = Vec::with_capacity(m);
    for v in 0..m {
        let kv = k.column(v);
        let ev = crate::linear::basis_vector(f, m, v);
        let lcols: Vec<Vector> = (0..n)
            .map(|j| {
                let ej = alg.basis(j);
                let a = alg.bracket(&kv, &ej);
                let b = k.apply(&act(rep.rho_r(), &ej, &ev)).expect("shape");
                vec_sub(&a, &b)
            })
            .collect();
        let rcols: Vec<Vector> = (0..n)
            .map(|j| {
                let ej = alg.basis(j);
                let a = alg.bracket(&ej, &kv);
                let b = k.apply(&act(rep.rho_l(), &ej, &ev)).expect("shape");
                vec_sub(&a, &b)
            })
            .collect();
        left.push(Matrix::from_columns(f, n, &lcols));
        right.push(Matrix::from_columns(f, n, &rcols));
    }
    (left, right)
}

/// `ϱL(v)x = [Kv,x] - K(ρR(x)v)`, `ϱR(v)x = [x,Kv] - K(ρL(x)v)` over `V_K`.
pub fn induced_representation(k: &LinearOperator, rep: &Representation) -> Result<Representation> {
    let (_, vk) = subadjacent_algebra(k, rep)?;
    let (left, right) = induced_matrices(k.map(), rep);
    let out = Representation::new(vk, rep.algebra().dim(), left, right)?;
    debug_assert!(check_representation(&out).ok);
    Ok(out)
}

/// `K[w1,w2]^K = ϱL(w1)Kw2 + ϱR(w2)Kw1`: `K` intertwines `V_K` with its
/// induced action on `g`.
pub fn check_induced_equivariance(k: &LinearOperator, rep: &Representation) -> Result<CheckReport> {
    let induced = induced_representation(k, rep)?;
    let vk = induced.algebra();
    let km = k.map();
    let m = rep.mdim();
    let mut violations = Vec::new();
    for a in 0..m {
        for b in 0..m {
            let lhs = km.apply(vk.bracket_basis(a, b))?;
            let rhs = vec_add(
                &induced.rho_l()[a].apply(&km.column(b))?,
                &induced.rho_r()[b].apply(&km.column(a))?,
            );
            if lhs != rhs {
                violations.push(violation("induced-equivariance", vec![a, b], lhs, rhs));
            }
        }
    }
    Ok(CheckReport::from_violations(violations))
}

/// The bracket on `g ⊕ V` (g first) combining `[,]`, `ρ`, `ϱ_K` and `[,]^K`.
pub fn lifted_algebra(k: &LinearOperator, rep: &Representation) -> Result<LeibnizAlgebra> {
    let induced = induced_representation(k, rep)?;
    let out = twilled_bracket(rep.algebra(), induced.algebra(), rep, &induced)?;
    debug_assert!(check_leibniz(&out).ok);
    Ok(out)
}

fn require_endo(n: &LinearOperator, alg: &LeibnizAlgebra, what: &str) -> Result<()> {
    require_shape(n.map(), alg.dim(), alg.dim(), what)?;
    if n.map().field() != alg.field() {
        return Err(Error::FieldMismatch(
            alg.field().to_string(),
            n.map().field().to_string(),
        ));
    }
    Ok(())
}

/// `[x,y]_N = [Nx,y] + [x,Ny] - N[x,y]` for any bracket table.
pub fn deformed_bracket(alg: &LeibnizAlgebra, n: &LinearOperator) -> Result<LeibnizAlgebra> {
    require_endo(n, alg, "operator")?;
    Ok(deform_table(alg, n.map()))
}

pub(crate) fn deform_table(alg: &LeibnizAlgebra, n: &Matrix) -> LeibnizAlgebra {
    let f = alg.field();
    LeibnizAlgebra::from_fn(f, alg.dim(), |i, j| {
        let ni = n.column(i);
        let nj = n.column(j);
        let mut out = alg.bracket(&ni, &alg.basis(j));
        vec_add_assign(&mut out, &alg.bracket(&alg.basis(i), &nj));
        vec_sub(&out, &n.apply(alg.bracket_basis(i, j)).expect("shape"))
    })
}

pub(crate) fn nijenhuis_violations(alg: &LeibnizAlgebra, n: &Matrix) -> Vec<Violation> {
    let deformed = deform_table(alg, n);
    let dim = alg.dim();
    let mut out = Vec::new();
    for i in 0..dim {
        let ni = n.column(i);
        for j in 0..dim {
            let lhs = alg.bracket(&ni, &n.column(j));
            let rhs = n.apply(deformed.bracket_basis(i, j)).expect("shape");
            if lhs != rhs {
                out.push(violation("nijenhuis", vec![i, j], lhs, rhs));
            }
        }
    }
    out
}

/// `[Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y])` on basis pairs.
pub fn check_nijenhuis(alg: &LeibnizAlgebra, n: &LinearOperator) -> Result<CheckReport> {
    require_endo(n, alg, "Nijenhuis operator")?;
    Ok(CheckReport::from_violations(nijenhuis_violations(
        alg,
        n.map(),
    )))
}

pub(crate) fn is_nijenhuis(alg: &LeibnizAlgebra, n: &Matrix) -> bool {
    nijenhuis_violations(alg, n).is_empty()
}

/// Weight-zero Rota-Baxter: `[Rx,Ry] = R([Rx,y] + [x,Ry])`.
pub fn check_rota_baxter(alg: &LeibnizAlgebra, r: &LinearOperator) -> Result<CheckReport> {
    require_endo(r, alg, "Rota-Baxter operator")?;
    let rm = r.map();
    let dim = alg.dim();
    let mut violations = Vec::new();
    for i in 0..dim {
        let ri = rm.column(i);
        for j in 0..dim {
            let rj = rm.column(j);
            let lhs = alg.bracket(&ri, &rj);
            let inner = vec_add(
                &alg.bracket(&ri, &alg.basis(j)),
                &alg.bracket(&alg.basis(i), &rj),
            );
            let rhs = rm.apply(&inner)?;
            if lhs != rhs {
                violations.push(violation("rota-baxter", vec![i, j], lhs, rhs));
            }
        }
    }
    Ok(CheckReport::from_violations(violations))
}

/// Same verdict as [`check_rota_baxter`], via the regular representation.
pub fn check_rota_baxter_via_regular(
    alg: &LeibnizAlgebra,
    r: &LinearOperator,
) -> Result<CheckReport> {
    let reg = regular_representation(alg)?;
    let k = LinearOperator::module_to_algebra(r.map().clone());
    check_kupershmidt(&k, &reg)
}

fn compat_violations(k1: &Matrix, k2: &Matrix, rep: &Representation) -> Vec<Violation> {
    let alg = rep.algebra();
    let m = rep.mdim();
    let f = rep.field();
    let mut out = Vec::new();
    for w in 0..m {
        let ew = crate::linear::basis_vector(f, m, w);
        for v in 0..m {
            let ev = crate::linear::basis_vector(f, m, v);
            let lhs = vec_add(
                &alg.bracket(&k1.column(w), &k2.column(v)),
                &alg.bracket(&k2.column(w), &k1.column(v)),
            );
            let rhs = vec_add(
                &k1.apply(&k_product(k2, rep, &ew, &ev)).expect("shape"),
                &k2.apply(&k_product(k1, rep, &ew, &ev)).expect("shape"),
            );
            if lhs != rhs {
                out.push(violation("compatible", vec![w, v], lhs, rhs));
            }
        }
    }
    out
}

/// Coefficient pairs at which `n1 K1 + n2 K2` is spot-checked.
pub fn compatibility_samples(field: crate::linear::FieldSpec) -> Vec<(Scalar, Scalar)> {
    [((1, 1), (1, 1)), ((2, 1), (-1, 1)), ((1, 2), (3, 1))]
        .into_iter()
        .filter_map(|((a, b), (c, d))| Some((field.ratio(a, b).ok()?, field.ratio(c, d).ok()?)))
        .collect()
}

/// Mixed Kupershmidt identity for `K1`, `K2`; on success also checks linear
/// combinations at sample coefficients.
pub fn check_compatible(
    k1: &LinearOperator,
    k2: &LinearOperator,
    rep: &Representation,
) -> Result<CheckReport> {
    if !check_kupershmidt(k1, rep)?.ok || !check_kupershmidt(k2, rep)?.ok {
        return Err(Error::NotKupershmidt);
    }
    let mut report = CheckReport::from_violations(compat_violations(k1.map(), k2.map(), rep));
    if report.ok {
        for (a, b) in compatibility_samples(rep.field()) {
            let comb = k1.map().scale(&a).add(&k2.map().scale(&b))?;
            report.consequence(
                format!("combination ({a})K1 + ({b})K2 is Kupershmidt"),
                is_kupershmidt(&comb, rep),
                "",
            );
        }
    }
    Ok(report)
}

pub(crate) fn is_compatible(k1: &Matrix, k2: &Matrix, rep: &Representation) -> bool {
    compat_violations(k1, k2, rep).is_empty()
}

/// `N([NKw,Ku] + [Kw,NKu]) = NK(ρL(NKw)u + ρR(NKu)w) + N²K(ρL(Kw)u + ρR(Ku)w)`.
pub fn check_nk_condition(
    n: &LinearOperator,
    k: &LinearOperator,
    rep: &Representation,
) -> Result<CheckReport> {
    let alg = rep.algebra();
    require_endo(n, alg, "Nijenhuis operator")?;
    if !check_nijenhuis(alg, n)?.ok {
        return Err(Error::NotNijenhuis);
    }
    if !check_kupershmidt(k, rep)?.ok {
        return Err(Error::NotKupershmidt);
    }
    let nm = n.map();
    let km = k.map();
    let nk = nm.mul(km)?;
    let nnk = nm.mul(&nk)?;
    let m = rep.mdim();
    let f = rep.field();
    let mut violations = Vec::new();
    for w in 0..m {
        let ew = crate::linear::basis_vector(f, m, w);
        for u in 0..m {
            let eu = crate::linear::basis_vector(f, m, u);
            let inner = vec_add(
                &alg.bracket(&nk.column(w), &km.column(u)),
                &alg.bracket(&km.column(w), &nk.column(u)),
            );
            let lhs = nm.apply(&inner)?;
            let rhs = vec_add(
                &nk.apply(&k_product(&nk, rep, &ew, &eu))?,
                &nnk.apply(&k_product(km, rep, &ew, &eu))?,
            );
            if lhs != rhs {
                violations.push(violation("nk-condition", vec![w, u], lhs, rhs));
            }
        }
    }
    let mut report = CheckReport::from_violations(violations);
    let nk_ks = is_kupershmidt(&nk, rep);
    report.consequence(
        "condition holds iff NK is Kupershmidt",
        report.ok == nk_ks,
        format!("condition {}, NK Kupershmidt {nk_ks}", report.ok),
    );
    if nk_ks && nm.is_invertible() {
        report.consequence(
            "K and NK are compatible for invertible N",
            is_compatible(km, &nk, rep),
            "",
        );
    }
    Ok(report)
}

/// `N = K1 K2^{-1}` for compatible `K1`, `K2` with `K2` invertible.
pub fn nijenhuis_from_compatible(
    k1: &LinearOperator,
    k2: &LinearOperator,
    rep: &Representation,
) -> Result<LinearOperator> {
    let k2_inv = k2.map().inverse()?;
    let report = check_compatible(k1, k2, rep)?;
    if !report.ok {
        return Err(Error::NotCompatible);
    }
    let n = LinearOperator::on_algebra(k1.map().mul(&k2_inv)?);
    debug_assert!(is_nijenhuis(rep.algebra(), n.map()));
    Ok(n)
}
