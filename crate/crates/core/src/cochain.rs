//! Multilinear cochains with the Balavoine bracket, and Maurer-Cartan
//! elements of twilled algebras.

use rayon::prelude::*;

use crate::algebra::{
    check_leibniz, check_representation, twilled_bracket, LeibnizAlgebra, Representation,
    TwilledContext,
};
use crate::error::{Error, Result};
use crate::linear::{
    vec_add, vec_axpy, vec_is_zero, vec_sub, zero_vector, FieldSpec, Matrix, Scalar, Vector,
};
use crate::operators::{
    check_compatible, check_kupershmidt, induced_matrices, induced_representation, is_kupershmidt,
    kupershmidt_bracket, lifted_algebra, LinearOperator,
};
use crate::pairs::{
    check_kn_structure, hat_tilde_unchecked, s_deformed_bracket, KnMode, KnStructure,
};
use crate::report::{violation, CheckReport};

/// Largest arity produced by [`balavoine_bracket`].
pub const DEFAULT_MAX_ARITY: usize = 4;

/// A dense multilinear map `g^{⊗k} → g`, of degree `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    field: FieldSpec,
    dim: usize,
    arity: usize,
    /// Output vectors indexed by basis tuples, first slot most significant.
    coeffs: Vec<Vector>,
}

impl Cochain {
    pub fn zero(field: FieldSpec, dim: usize, arity: usize) -> Self {
        let len = dim.pow(arity as u32);
        Cochain {
            field,
            dim,
            arity,
            coeffs: vec![zero_vector(field, dim); len],
        }
    }

    pub fn from_fn(
        field: FieldSpec,
        dim: usize,
        arity: usize,
        mut f: impl FnMut(&[usize]) -> Vector,
    ) -> Self {
        let mut out = Self::zero(field, dim, arity);
        for idx in 0..out.coeffs.len() {
            let tuple = out.tuple(idx);
            out.coeffs[idx] = f(&tuple);
        }
        out
    }

    pub fn new(field: FieldSpec, dim: usize, arity: usize, coeffs: Vec<Vector>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ShapeMismatch(
                "cochains have arity at least 1".into(),
            ));
        }
        if coeffs.len() != dim.pow(arity as u32) || coeffs.iter().any(|v| v.len() != dim) {
            return Err(Error::ShapeMismatch(format!(
                "arity {arity} cochain on dimension {dim} needs {} vectors of length {dim}",
                dim.pow(arity as u32)
            )));
        }
        Ok(Cochain {
            field,
            dim,
            arity,
            coeffs,
        })
    }

    /// The linear map as an arity-1 cochain.
    pub fn from_matrix(m: &Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::ShapeMismatch(
                "cochain maps need a square matrix".into(),
            ));
        }
        Ok(Self::from_fn(m.field(), m.rows(), 1, |t| m.column(t[0])))
    }

    /// The bracket as an arity-2 cochain.
    pub fn from_algebra(alg: &LeibnizAlgebra) -> Self {
        Self::from_fn(alg.field(), alg.dim(), 2, |t| {
            alg.bracket_basis(t[0], t[1]).clone()
        })
    }

    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        if self.arity != 2 {
            return Err(Error::ShapeMismatch(
                "only arity-2 cochains are brackets".into(),
            ));
        }
        LeibnizAlgebra::new(self.field, self.dim, self.coeffs.clone())
    }

    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.arity != 1 {
            return Err(Error::ShapeMismatch(
                "only arity-1 cochains are maps".into(),
            ));
        }
        Ok(Matrix::from_columns(self.field, self.dim, &self.coeffs))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> usize {
        self.arity - 1
    }

    pub fn coeffs(&self) -> &[Vector] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| vec_is_zero(v))
    }

    fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &t| acc * self.dim + t)
    }

    fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.arity];
        for slot in (0..self.arity).rev() {
            t[slot] = idx % self.dim;
            idx /= self.dim;
        }
        t
    }

    /// Value on basis elements.
    pub fn eval_basis(&self, tuple: &[usize]) -> &Vector {
        &self.coeffs[self.index(tuple)]
    }

    /// Value with basis elements everywhere except a vector in `slot`.
    fn eval_slot(&self, tuple: &mut [usize], slot: usize, v: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (c, s) in v.iter().enumerate() {
            if !s.is_zero() {
                tuple[slot] = c;
                vec_axpy(&mut out, s, self.eval_basis(tuple));
            }
        }
        out
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.require_same(other)?;
        if self.arity != other.arity {
            return Err(Error::ShapeMismatch(
                "adding cochains of different arity".into(),
            ));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| vec_add(a, b))
            .collect();
        Ok(Cochain {
            coeffs,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(&self.field.int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> Cochain {
        let coeffs = self
            .coeffs
            .iter()
            .map(|v| v.iter().map(|c| c * s).collect())
            .collect();
        Cochain {
            coeffs,
            ..self.clone()
        }
    }

    fn require_same(&self, other: &Cochain) -> Result<()> {
        if self.dim != other.dim || self.field != other.field {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }
}

/// All `(p, q)`-shuffles of `0..p+q` with their signs.
fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, bool)> {
    let n = p + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(p);
    fn rec(
        start: usize,
        n: usize,
        p: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, bool)>,
    ) {
        if chosen.len() == p {
            let rest = (0..n).filter(|i| !chosen.contains(i));
            let sigma: Vec<usize> = chosen.iter().copied().chain(rest).collect();
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| sigma[i] > sigma[j])
                .count();
            out.push((sigma, inversions % 2 == 1));
            return;
        }
        for i in start..n {
            chosen.push(i);
            rec(i + 1, n, p, chosen, out);
            chosen.pop();
        }
    }
    rec(0, n, p, &mut chosen, &mut out);
    out
}

/// `φ1 ∘_k φ2`, `k` counted from 1.
fn circ_k(phi1: &Cochain, phi2: &Cochain, k: usize, x: &[usize]) -> Vector {
    let n = phi2.degree();
    let arity1 = phi1.arity;
    let mut out = zero_vector(phi1.field, phi1.dim);
    for (sigma, odd) in shuffles(k - 1, n) {
        let mut inner: Vec<usize> = sigma[k - 1..k - 1 + n].iter().map(|&s| x[s]).collect();
        inner.push(x[k + n - 1]);
        let value = phi2.eval_basis(&inner);
        if vec_is_zero(value) {
            continue;
        }
        let mut outer = Vec::with_capacity(arity1);
        outer.extend(sigma[..k - 1].iter().map(|&s| x[s]));
        outer.push(0);
        outer.extend_from_slice(&x[k + n..]);
        let term = phi1.eval_slot(&mut outer, k - 1, value);
        out = if odd {
            vec_sub(&out, &term)
        } else {
            vec_add(&out, &term)
        };
    }
    out
}

/// `φ1 ∘̄ φ2 = Σ_k (-1)^{(k-1)n} φ1 ∘_k φ2`.
fn circ_bar(phi1: &Cochain, phi2: &Cochain, x: &[usize]) -> Vector {
    let n = phi2.degree();
    let mut out = zero_vector(phi1.field, phi1.dim);
    for k in 1..=phi1.arity {
        let term = circ_k(phi1, phi2, k, x);
        out = if ((k - 1) * n) % 2 == 1 {
            vec_sub(&out, &term)
        } else {
            vec_add(&out, &term)
        };
    }
    out
}

/// `{φ1,φ2} = φ1 ∘̄ φ2 - (-1)^{mn} φ2 ∘̄ φ1` with the default arity cap.
pub fn balavoine_bracket(phi1: &Cochain, phi2: &Cochain) -> Result<Cochain> {
    balavoine_bracket_capped(phi1, phi2, DEFAULT_MAX_ARITY)
}

pub fn balavoine_bracket_capped(
    phi1: &Cochain,
    phi2: &Cochain,
    max_arity: usize,
) -> Result<Cochain> {
    phi1.require_same(phi2)?;
    let (m, n) = (phi1.degree(), phi2.degree());
    let arity = m + n + 1;
    if arity > max_arity {
        return Err(Error::Unsupported(format!(
            "bracket of arity {arity} exceeds the cap {max_arity}"
        )));
    }
    let out = Cochain::zero(phi1.field, phi1.dim, arity);
    let sign_minus = (m * n) % 2 == 0;
    let coeffs = (0..out.coeffs.len())
        .into_par_iter()
        .map(|idx| {
            let x = out.tuple(idx);
            let a = circ_bar(phi1, phi2, &x);
            let b = circ_bar(phi2, phi1, &x);
            if sign_minus {
                vec_sub(&a, &b)
            } else {
                vec_add(&a, &b)
            }
        })
        .collect();
    Ok(Cochain { coeffs, ..out })
}

/// `dφ = {μ, φ}` for a Leibniz bracket `μ`.
pub fn coboundary(mu: &Cochain, phi: &Cochain) -> Result<Cochain> {
    require_leibniz_cochain(mu)?;
    balavoine_bracket(mu, phi)
}

/// `[φ1, φ2]_μ = (-1)^m {{μ, φ1}, φ2}`.
pub fn dgla_bracket(mu: &Cochain, phi1: &Cochain, phi2: &Cochain) -> Result<Cochain> {
    require_leibniz_cochain(mu)?;
    let inner = balavoine_bracket(mu, phi1)?;
    let out = balavoine_bracket(&inner, phi2)?;
    Ok(if phi1.degree() % 2 == 1 {
        out.scale(&mu.field.int(-1))
    } else {
        out
    })
}

fn require_leibniz_cochain(mu: &Cochain) -> Result<()> {
    if !check_leibniz(&mu.to_algebra()?).ok {
        return Err(Error::NotLeibniz);
    }
    Ok(())
}

/// Splits the total bracket into the part landing through `g1`'s structure
/// (`g1` bracket, `g1` acting on `g2`) and the part through `g2`'s.
pub fn split_bracket(ctx: &TwilledContext) -> (Cochain, Cochain) {
    let total = ctx.total();
    let (n1, dim, f) = (ctx.n1(), total.dim(), total.field());
    let masked = |keep_first: bool| {
        Cochain::from_fn(f, dim, 2, |t| {
            let v = total.bracket_basis(t[0], t[1]);
            let in_g1 = (t[0] < n1, t[1] < n1);
            let range = match (in_g1, keep_first) {
                ((true, true), true) => 0..dim,
                ((false, false), false) => 0..dim,
                ((true, true), false) | ((false, false), true) => 0..0,
                (_, true) => n1..dim,
                (_, false) => 0..n1,
            };
            let mut out = zero_vector(f, dim);
            for c in range {
                out[c] = v[c].clone();
            }
            out
        })
    };
    (masked(true), masked(false))
}

/// `Θ: g1 → g2` as an arity-1 cochain on `g1 ⊕ g2`, zero on `g2`.
pub fn embed_theta(ctx: &TwilledContext, theta: &Matrix) -> Result<Cochain> {
    require_theta_shape(ctx, theta)?;
    let (n1, dim, f) = (ctx.n1(), ctx.total().dim(), ctx.total().field());
    Ok(Cochain::from_fn(f, dim, 1, |t| {
        let mut out = zero_vector(f, dim);
        if t[0] < n1 {
            for (c, s) in theta.column(t[0]).into_iter().enumerate() {
                out[n1 + c] = s;
            }
        }
        out
    }))
}

fn require_theta_shape(ctx: &TwilledContext, theta: &Matrix) -> Result<()> {
    if theta.rows() != ctx.n2() || theta.cols() != ctx.n1() {
        return Err(Error::ShapeMismatch(format!(
            "Theta must be {}x{}",
            ctx.n2(),
            ctx.n1()
        )));
    }
    Ok(())
}

/// `dΘ + ½[Θ,Θ]_{μ2}` with `d = {μ1, ·}`. Needs characteristic other than 2.
pub fn maurer_cartan_cochain(ctx: &TwilledContext, theta: &Matrix) -> Result<(Cochain, Cochain)> {
    let f = ctx.total().field();
    if f.characteristic() == 2 {
        return Err(Error::Unsupported(
            "the factor 1/2 needs characteristic other than 2".into(),
        ));
    }
    let t = embed_theta(ctx, theta)?;
    let (mu1, mu2) = split_bracket(ctx);
    let d = balavoine_bracket(&mu1, &t)?;
    let quad = balavoine_bracket(&balavoine_bracket(&mu2, &t)?, &t)?;
    let half = f.ratio(1, 2)?;
    Ok((d.add(&quad.scale(&half))?, d))
}

/// Elementwise Maurer-Cartan equation for `Θ: g1 → g2`, and with `strong`
/// also `Θ[y,z] = ρ1L(y)Θz + ρ1R(z)Θy`. Cross-checks against the graded
/// bracket route when the characteristic allows.
pub fn check_maurer_cartan(
    ctx: &TwilledContext,
    theta: &Matrix,
    strong: bool,
) -> Result<CheckReport> {
    require_theta_shape(ctx, theta)?;
    let n1 = ctx.n1();
    let (g1, g2) = (ctx.g1(), ctx.g2());
    let (rho1, rho2) = (ctx.rho1(), ctx.rho2());
    let mut violations = Vec::new();
    let mut strong_ok = true;
    for y in 0..n1 {
        let ty = theta.column(y);
        for z in 0..n1 {
            let tz = theta.column(z);
            let action = vec_add(&rho1.rho_l()[y].apply(&tz)?, &rho1.rho_r()[z].apply(&ty)?);
            let t_bracket = theta.apply(g1.bracket_basis(y, z))?;
            let lhs = vec_add(&g2.bracket(&ty, &tz), &action);
            let back = vec_add(&rho2.left(&ty).column(z), &rho2.right(&tz).column(y));
            let rhs = vec_add(&theta.apply(&back)?, &t_bracket);
            if lhs != rhs {
                violations.push(violation("maurer-cartan", vec![y, z], lhs, rhs));
            }
            if action != t_bracket {
                strong_ok = false;
                if strong {
                    violations.push(violation(
                        "strong-maurer-cartan",
                        vec![y, z],
                        t_bracket,
                        action,
                    ));
                }
            }
        }
    }
    let weak_ok = violations.iter().all(|v| v.identity != "maurer-cartan");
    let mut report = CheckReport::from_violations(violations);
    if ctx.total().field().characteristic() != 2 {
        let (mc, d) = maurer_cartan_cochain(ctx, theta)?;
        report.consequence(
            "graded bracket route agrees on the Maurer-Cartan equation",
            mc.is_zero() == weak_ok,
            "",
        );
        if strong {
            report.consequence(
                "graded bracket route agrees on the strong condition",
                d.is_zero() == strong_ok,
                "",
            );
        }
    }
    Ok(report)
}

fn lifted_context(k: &LinearOperator, rep: &Representation) -> Result<TwilledContext> {
    TwilledContext::new(lifted_algebra(k, rep)?, rep.algebra().dim())
}

fn require_strong(
    k: &LinearOperator,
    rep: &Representation,
    theta: &Matrix,
) -> Result<TwilledContext> {
    if !check_kupershmidt(k, rep)?.ok {
        return Err(Error::NotKupershmidt);
    }
    let ctx = lifted_context(k, rep)?;
    if !check_maurer_cartan(&ctx, theta, true)?.ok {
        return Err(Error::NotStrongMc);
    }
    Ok(ctx)
}

/// Output of [`theta_twist`].
#[derive(Clone, Debug)]
pub struct ThetaTwist {
    /// `[y,z]^Θ = ϱL(Θy)z + ϱR(Θz)y` on `g`.
    pub algebra: LeibnizAlgebra,
    /// `g_Θ` acting on `V`.
    pub rep: Representation,
    /// Total bracket on `g ⊕ V` (g first).
    pub total: LeibnizAlgebra,
    pub report: CheckReport,
}

/// Twists `g` by a strong Maurer-Cartan element of `g ⋈ V_K`.
pub fn theta_twist(k: &LinearOperator, rep: &Representation, theta: &Matrix) -> Result<ThetaTwist> {
    require_strong(k, rep, theta)?;
    let (n, m) = (rep.algebra().dim(), rep.mdim());
    let varrho = induced_representation(k, rep)?;
    let theta_op = LinearOperator::algebra_to_module(theta.clone());
    let algebra = kupershmidt_bracket(theta, &varrho)?;
    let rho_theta = induced_representation(&theta_op, &varrho)?;
    // lifted_algebra puts V_K first here; move g to the front.
    let v_first = lifted_algebra(&theta_op, &varrho)?;
    let perm: Vec<usize> = (0..m).map(|i| i + n).chain(0..n).collect();
    let total = v_first.permuted(&perm);

    let mut report = CheckReport::passed();
    report.consequence("twisted bracket is Leibniz", check_leibniz(&algebra).ok, "");
    report.consequence(
        "twisted actions form a representation",
        check_representation(&rho_theta).ok,
        "",
    );
    report.consequence(
        "total twisted bracket is Leibniz",
        check_leibniz(&total).ok,
        "",
    );
    let vk_ctx = TwilledContext::new(v_first, m)?;
    report.consequence_from(
        "K is a strong Maurer-Cartan element of the swapped twilled algebra",
        &check_maurer_cartan(&vk_ctx, k.map(), true)?,
    );
    let k_on_twist = check_kupershmidt(k, &rho_theta)?;
    report.consequence_from(
        "K is Kupershmidt for the twisted representation",
        &k_on_twist,
    );
    Ok(ThetaTwist {
        algebra,
        rep: rho_theta,
        total,
        report,
    })
}

/// `(K, KΘ, ΘK)` from a strong Maurer-Cartan element, with the derived
/// statements recorded on the returned report.
pub fn dual_kn_from_mc(
    k: &LinearOperator,
    rep: &Representation,
    theta: &Matrix,
) -> Result<(KnStructure, CheckReport)> {
    require_strong(k, rep, theta)?;
    let km = k.map();
    let n = km.mul(theta)?;
    let s = theta.mul(km)?;
    let kn = KnStructure::new(km.clone(), n.clone(), s.clone(), KnMode::DualKn);
    let mut report = check_kn_structure(&kn, rep)?;

    let varrho = induced_representation(k, rep)?;
    let swapped = KnStructure::new(theta.clone(), s.clone(), n.clone(), KnMode::DualKn);
    let swapped_report = match check_kn_structure(&swapped, &varrho) {
        Ok(r) => r,
        Err(e) => {
            let mut r = CheckReport::from_violations(vec![]);
            r.ok = false;
            r.consequence(e.to_string(), false, "");
            r
        }
    };
    report.consequence_from(
        "(Theta, S, N) is a dual KN-structure on the induced representation",
        &swapped_report,
    );

    let ktk = km.mul(&s)?;
    report.consequence("K Theta K is Kupershmidt", is_kupershmidt(&ktk, rep), "");
    let nk = LinearOperator::module_to_algebra(n.mul(km)?);
    report.consequence_from("K and NK are compatible", &check_compatible(k, &nk, rep)?);
    Ok((kn, report))
}

/// `Θ = K⁻¹N` for a dual KN-structure with invertible `K`.
pub fn mc_from_dual_kn(kn: &KnStructure, rep: &Representation) -> Result<(Matrix, CheckReport)> {
    if kn.mode != KnMode::DualKn {
        return Err(Error::NotDualKn);
    }
    let k_inv = kn.k().inverse()?;
    match check_kn_structure(kn, rep) {
        Ok(r) if r.ok => {}
        _ => return Err(Error::NotDualKn),
    }
    let theta = k_inv.mul(kn.n())?;
    let ctx = lifted_context(&kn.k, rep)?;
    let mut report = check_maurer_cartan(&ctx, &theta, true)?;
    report.consequence("K^-1 N equals S K^-1", theta == kn.s().mul(&k_inv)?, "");
    Ok((theta, report))
}

/// The bracket on `g ⊕ V` (g first) built from `[,]_N`, `[,]_S^K`, the
/// tilde action and the modified induced action of `V` on `g`.
pub fn tilde_varrho_bracket(
    kn: &KnStructure,
    rep: &Representation,
) -> Result<(LeibnizAlgebra, CheckReport)> {
    if kn.mode != KnMode::DualKn {
        return Err(Error::NotDualKn);
    }
    match check_kn_structure(kn, rep) {
        Ok(r) if r.ok => {}
        _ => return Err(Error::NotDualKn),
    }
    let (k, n, s) = (kn.k(), kn.n(), kn.s());
    let (dim_g, m) = (rep.algebra().dim(), rep.mdim());
    let (_, tilde) = hat_tilde_unchecked(&kn.pair, rep)?;
    let (vl, vr) = induced_matrices(k, rep);
    let combine = |family: &[Matrix], v: &[Scalar]| -> Matrix {
        let f = rep.field();
        let mut out = Matrix::zeros(f, dim_g, dim_g);
        for (mat, c) in family.iter().zip(v) {
            if !c.is_zero() {
                out = out.add(&mat.scale(c)).expect("shape");
            }
        }
        out
    };
    let twist = |family: &[Matrix]| -> Vec<Matrix> {
        (0..m)
            .map(|v| {
                combine(family, &s.column(v))
                    .sub(&family[v].commutator(n).expect("shape"))
                    .expect("shape")
            })
            .collect()
    };
    let vs = s_deformed_bracket(k, s, rep)?;
    let varrho_tilde = Representation::new(vs, dim_g, twist(&vl), twist(&vr))?;
    let total = twilled_bracket(
        tilde.algebra(),
        varrho_tilde.algebra(),
        &tilde,
        &varrho_tilde,
    )?;
    let mut report = CheckReport::passed();
    report.consequence(
        "K is Kupershmidt for the tilde representation",
        is_kupershmidt(k, &tilde),
        "",
    );
    let detail = if k.is_invertible() {
        ""
    } else {
        "K is singular"
    };
    report.consequence(
        "combined bracket is Leibniz",
        check_leibniz(&total).ok,
        detail,
    );
    Ok((total, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{regular_representation, semidirect_sum};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn l2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_entries(Q, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
    }

    fn random_cochain(rng: &mut ChaCha8Rng, dim: usize, arity: usize) -> Cochain {
        Cochain::from_fn(Q, dim, arity, |_| {
            (0..dim).map(|_| Q.int(rng.gen_range(-2..=2))).collect()
        })
    }

    /// `[a,[b,c]] - [[a,b],c] - [b,[a,c]]` by direct evaluation.
    fn leibniz_defect(alg: &LeibnizAlgebra, a: usize, b: usize, c: usize) -> Vector {
        let (ea, eb, ec) = (alg.basis(a), alg.basis(b), alg.basis(c));
        let lhs = alg.bracket(&ea, &alg.bracket(&eb, &ec));
        let r1 = alg.bracket(&alg.bracket(&ea, &eb), &ec);
        let r2 = alg.bracket(&eb, &alg.bracket(&ea, &ec));
        vec_sub(&lhs, &vec_add(&r1, &r2))
    }

    #[test]
    fn self_bracket_is_twice_the_defect() {
        let bad = LeibnizAlgebra::from_entries(Q, 1, &[(0, 0, 0, 1)]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let random = Cochain::from_fn(Q, 2, 2, |_| {
            (0..2).map(|_| Q.int(rng.gen_range(-1..=1))).collect()
        })
        .to_algebra()
        .unwrap();
        for alg in [l2(), bad.clone(), random] {
            let mu = Cochain::from_algebra(&alg);
            let mm = balavoine_bracket(&mu, &mu).unwrap();
            let n = alg.dim();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let expect: Vector = leibniz_defect(&alg, a, b, c)
                            .iter()
                            .map(|x| x * &Q.int(-2))
                            .collect();
                        assert_eq!(mm.eval_basis(&[a, b, c]), &expect);
                    }
                }
            }
            assert_eq!(mm.is_zero(), check_leibniz(&alg).ok);
        }
        let mu = Cochain::from_algebra(&bad);
        assert_eq!(
            balavoine_bracket(&mu, &mu).unwrap().eval_basis(&[0, 0, 0]),
            &vec![Q.int(2)]
        );
    }

    #[test]
    fn bracket_with_degree_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let t = random_cochain(&mut rng, 2, 1).to_matrix().unwrap();
        let alg = l2();
        let mu = Cochain::from_algebra(&alg);
        let d = coboundary(&mu, &Cochain::from_matrix(&t).unwrap()).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                let expect = vec_sub(
                    &vec_add(
                        &alg.bracket(&t.column(x), &alg.basis(y)),
                        &alg.bracket(&alg.basis(x), &t.column(y)),
                    ),
                    &t.apply(alg.bracket_basis(x, y)).unwrap(),
                );
                assert_eq!(d.eval_basis(&[x, y]), &expect);
            }
        }
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let mu = Cochain::from_algebra(&l2());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for arity in 1..=2 {
            let phi = random_cochain(&mut rng, 2, arity);
            let dd = coboundary(&mu, &coboundary(&mu, &phi).unwrap()).unwrap();
            assert!(dd.is_zero());
        }
    }

    #[test]
    fn graded_antisymmetry_and_jacobi() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let sign = |e: usize| {
            if e.is_multiple_of(2) {
                Q.int(1)
            } else {
                Q.int(-1)
            }
        };
        for dim in 1..=2 {
            for (a1, a2, a3) in [(1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2)] {
                let p1 = random_cochain(&mut rng, dim, a1);
                let p2 = random_cochain(&mut rng, dim, a2);
                let p3 = random_cochain(&mut rng, dim, a3);
                let (m, n, p) = (p1.degree(), p2.degree(), p3.degree());
                let b12 = balavoine_bracket_capped(&p1, &p2, 8).unwrap();
                let b21 = balavoine_bracket_capped(&p2, &p1, 8).unwrap();
                assert_eq!(b12, b21.scale(&sign(m * n + 1)));
                let j1 = balavoine_bracket_capped(
                    &p1,
                    &balavoine_bracket_capped(&p2, &p3, 8).unwrap(),
                    8,
                )
                .unwrap();
                let j2 = balavoine_bracket_capped(
                    &p2,
                    &balavoine_bracket_capped(&p3, &p1, 8).unwrap(),
                    8,
                )
                .unwrap();
                let j3 = balavoine_bracket_capped(&p3, &b12, 8).unwrap();
                let sum = j1
                    .scale(&sign(m * p))
                    .add(&j2.scale(&sign(n * m)))
                    .unwrap()
                    .add(&j3.scale(&sign(p * n)))
                    .unwrap();
                assert!(sum.is_zero(), "degrees {m} {n} {p}");
            }
        }
    }

    #[test]
    fn arity_cap_is_enforced() {
        let phi = Cochain::zero(Q, 1, 3);
        assert!(matches!(
            balavoine_bracket(&phi, &phi),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            balavoine_bracket(&Cochain::zero(Q, 1, 1), &Cochain::zero(Q, 2, 1)),
            Err(Error::SpaceMismatch)
        ));
    }

    #[test]
    fn maurer_cartan_routes_agree() {
        let reg = regular_representation(&l2()).unwrap();
        let ctx =
            TwilledContext::new(semidirect_sum(&reg).unwrap().permuted(&[2, 3, 0, 1]), 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let mut seen = [false; 2];
        for _ in 0..40 {
            let theta = Matrix::from_fn(Q, 2, 2, |_, _| Q.int(rng.gen_range(-1..=1)));
            let r = check_maurer_cartan(&ctx, &theta, true).unwrap();
            assert!(r.consequences_ok(), "{r}");
            seen[r.ok as usize] = true;
        }
        assert!(seen[0] && seen[1]);
        let zero = Matrix::zeros(Q, 2, 2);
        assert!(check_maurer_cartan(&ctx, &zero, true).unwrap().ok);
    }

    #[test]
    fn zero_theta_twist() {
        let reg = regular_representation(&l2()).unwrap();
        let r = LinearOperator::module_to_algebra(Matrix::from_ints(Q, &[&[0, 1], &[0, -1]]));
        let tw = theta_twist(&r, &reg, &Matrix::zeros(Q, 2, 2)).unwrap();
        assert!(tw.algebra.is_abelian());
        assert!(tw
            .rep
            .rho_l()
            .iter()
            .chain(tw.rep.rho_r())
            .all(Matrix::is_zero));
        let varrho = induced_representation(&r, &reg).unwrap();
        assert_eq!(tw.total, semidirect_sum(&varrho).unwrap());
        assert!(tw.report.consequences_ok(), "{}", tw.report);
        let (kn, rep) = dual_kn_from_mc(&r, &reg, &Matrix::zeros(Q, 2, 2)).unwrap();
        assert!(kn.n().is_zero() && kn.s().is_zero());
        assert!(rep.ok && rep.consequences_ok(), "{rep}");
    }

    #[test]
    fn invertible_dual_kn_round_trip() {
        let alg = LeibnizAlgebra::abelian(Q, 2);
        let reg = regular_representation(&alg).unwrap();
        let k = Matrix::from_ints(Q, &[&[1, 1], &[0, 2]]);
        let s = Matrix::scalar(Q, 2, &Q.int(3));
        let kn = KnStructure::new(k.clone(), s.clone(), s, KnMode::DualKn);
        let (theta, report) = mc_from_dual_kn(&kn, &reg).unwrap();
        assert!(report.ok && report.consequences_ok(), "{report}");
        let (back, _) = dual_kn_from_mc(&kn.k, &reg, &theta).unwrap();
        assert_eq!(back, kn);
        let (total, rep) = tilde_varrho_bracket(&kn, &reg).unwrap();
        assert!(rep.consequences_ok() && check_leibniz(&total).ok);
    }
}
