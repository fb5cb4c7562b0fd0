//! Leibniz algebras by structure constants, and their representations.

use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::linear::{vec_add, vec_axpy, zero_vector, FieldSpec, Matrix, Scalar, Vector};
use crate::report::{violation, CheckReport};

/// A bilinear bracket on `F^n` with `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct LeibnizAlgebra {
    dim: usize,
    field: FieldSpec,
    table: Vec<Vector>,
    verified: OnceLock<bool>,
}

impl PartialEq for LeibnizAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.field == other.field && self.table == other.table
    }
}

impl Eq for LeibnizAlgebra {}

impl LeibnizAlgebra {
    /// `table[i * n + j]` is the coordinate vector of `[e_i, e_j]`.
    pub fn new(field: FieldSpec, dim: usize, table: Vec<Vector>) -> Result<Self> {
        if table.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!(
                "expected {} brackets, got {}",
                dim * dim,
                table.len()
            )));
        }
        let mut coerced = Vec::with_capacity(table.len());
        for v in table {
            if v.len() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "bracket vector of length {} in dimension {dim}",
                    v.len()
                )));
            }
            coerced.push(
                v.iter()
                    .map(|s| field.coerce(s))
                    .collect::<Result<Vector>>()?,
            );
        }
        Ok(LeibnizAlgebra {
            dim,
            field,
            table: coerced,
            verified: OnceLock::new(),
        })
    }

    pub fn from_fn(
        field: FieldSpec,
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vector,
    ) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim);
                table.push(v);
            }
        }
        LeibnizAlgebra {
            dim,
            field,
            table,
            verified: OnceLock::new(),
        }
    }

    pub fn abelian(field: FieldSpec, dim: usize) -> Self {
        Self::from_fn(field, dim, |_, _| zero_vector(field, dim))
    }

    /// Sparse constructor: each `(i, j, k, c)` adds `c e_k` to `[e_i, e_j]`.
    pub fn from_entries(
        field: FieldSpec,
        dim: usize,
        entries: &[(usize, usize, usize, i64)],
    ) -> Self {
        let mut alg = Self::abelian(field, dim);
        for &(i, j, k, c) in entries {
            let slot = &mut alg.table[i * dim + j][k];
            *slot = &*slot + &field.int(c);
        }
        alg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn table(&self) -> &[Vector] {
        &self.table
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[i * self.dim + j][k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.field, self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vec_axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Scalar::is_zero))
    }

    /// Cached result of [`check_leibniz`].
    pub fn is_leibniz(&self) -> bool {
        *self.verified.get_or_init(|| check_leibniz(self).ok)
    }

    pub fn require_leibniz(&self) -> Result<()> {
        if self.is_leibniz() {
            Ok(())
        } else {
            Err(Error::NotLeibniz)
        }
    }

    pub fn basis(&self, i: usize) -> Vector {
        crate::linear::basis_vector(self.field, self.dim, i)
    }

    /// Relabels the basis: new index `perm[i]` carries old `e_i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.dim;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        Self::from_fn(self.field, n, |a, b| {
            let v = self.bracket_basis(inv[a], inv[b]);
            let mut out = zero_vector(self.field, n);
            for (k, s) in v.iter().enumerate() {
                out[perm[k]] = s.clone();
            }
            out
        })
    }

    /// Bracket restricted to the block `offset..offset+len`, if it closes.
    pub fn block(&self, offset: usize, len: usize) -> Option<Self> {
        let n = self.dim;
        for i in offset..offset + len {
            for j in offset..offset + len {
                let v = self.bracket_basis(i, j);
                if (0..n).any(|k| (k < offset || k >= offset + len) && !v[k].is_zero()) {
                    return None;
                }
            }
        }
        Some(Self::from_fn(self.field, len, |i, j| {
            self.bracket_basis(offset + i, offset + j)[offset..offset + len].to_vec()
        }))
    }

    /// Direct sum with `other` placed after `self`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim, other.dim);
        let field = self.field;
        Self::from_fn(field, a + b, |i, j| {
            let mut out = zero_vector(field, a + b);
            if i < a && j < a {
                out[..a].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= a && j >= a {
                out[a..].clone_from_slice(other.bracket_basis(i - a, j - a));
            }
            out
        })
    }

    /// Structure constants scaled by `s`.
    pub fn scaled(&self, s: &Scalar) -> Self {
        Self::from_fn(self.field, self.dim, |i, j| {
            self.bracket_basis(i, j).iter().map(|c| c * s).collect()
        })
    }

    /// Entrywise sum of two brackets on the same space.
    pub fn plus(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim || self.field != other.field {
            return Err(Error::ShapeMismatch("brackets on different spaces".into()));
        }
        Ok(Self::from_fn(self.field, self.dim, |i, j| {
            vec_add(self.bracket_basis(i, j), other.bracket_basis(i, j))
        }))
    }
}

/// Checks `[a,[b,c]] = [[a,b],c] + [b,[a,c]]` on every basis triple.
pub fn check_leibniz(alg: &LeibnizAlgebra) -> CheckReport {
    let n = alg.dim;
    let mut violations = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = alg.bracket_basis(a, b);
            for c in 0..n {
                let lhs = alg.bracket(&alg.basis(a), alg.bracket_basis(b, c));
                let rhs = vec_add(
                    &alg.bracket(ab, &alg.basis(c)),
                    &alg.bracket(&alg.basis(b), alg.bracket_basis(a, c)),
                );
                if lhs != rhs {
                    violations.push(violation("leibniz", vec![a, b, c], lhs, rhs));
                }
            }
        }
    }
    CheckReport::from_violations(violations)
}

/// Left and right actions of a Leibniz algebra on `F^m`.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<LeibnizAlgebra>,
    mdim: usize,
    rho_l: Vec<Matrix>,
    rho_r: Vec<Matrix>,
    verified: OnceLock<bool>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.mdim == other.mdim
            && self.rho_l == other.rho_l
            && self.rho_r == other.rho_r
    }
}

impl Eq for Representation {}

impl Representation {
    pub fn new(
        algebra: impl Into<Arc<LeibnizAlgebra>>,
        mdim: usize,
        rho_l: Vec<Matrix>,
        rho_r: Vec<Matrix>,
    ) -> Result<Self> {
        let algebra = algebra.into();
        let n = algebra.dim();
        if rho_l.len() != n || rho_r.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "need {n} action matrices per side, got {} and {}",
                rho_l.len(),
                rho_r.len()
            )));
        }
        for m in rho_l.iter().chain(&rho_r) {
            if m.rows() != mdim || m.cols() != mdim {
                return Err(Error::ShapeMismatch(format!(
                    "action matrix {}x{} on module of dimension {mdim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch(
                    algebra.field().to_string(),
                    m.field().to_string(),
                ));
            }
        }
        Ok(Representation {
            algebra,
            mdim,
            rho_l,
            rho_r,
            verified: OnceLock::new(),
        })
    }

    pub fn zero(algebra: impl Into<Arc<LeibnizAlgebra>>, mdim: usize) -> Self {
        let algebra = algebra.into();
        let z = Matrix::zeros(algebra.field(), mdim, mdim);
        let n = algebra.dim();
        Representation {
            algebra,
            mdim,
            rho_l: vec![z.clone(); n],
            rho_r: vec![z; n],
            verified: OnceLock::new(),
        }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<LeibnizAlgebra> {
        self.algebra.clone()
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn mdim(&self) -> usize {
        self.mdim
    }

    pub fn rho_l(&self) -> &[Matrix] {
        &self.rho_l
    }

    pub fn rho_r(&self) -> &[Matrix] {
        &self.rho_r
    }

    fn combine(&self, family: &[Matrix], x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.mdim, self.mdim);
        for (m, s) in family.iter().zip(x) {
            if !s.is_zero() {
                out = out.add(&m.scale(s)).expect("same shape");
            }
        }
        out
    }

    /// `ρ^L(x)` for an arbitrary algebra element.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.rho_l, x)
    }

    /// `ρ^R(x)` for an arbitrary algebra element.
    pub fn right(&self, x: &[Scalar]) -> Matrix {
        self.combine(&self.rho_r, x)
    }

    /// Cached result of [`check_representation`].
    pub fn is_representation(&self) -> bool {
        *self
            .verified
            .get_or_init(|| self.algebra.is_leibniz() && check_representation(self).ok)
    }

    pub fn require_representation(&self) -> Result<()> {
        if self.is_representation() {
            Ok(())
        } else {
            Err(Error::NotRepresentation)
        }
    }

    /// Same actions viewed over another algebra on the same space.
    pub fn with_algebra(&self, algebra: impl Into<Arc<LeibnizAlgebra>>) -> Result<Self> {
        Self::new(algebra, self.mdim, self.rho_l.clone(), self.rho_r.clone())
    }
}

/// Checks the three representation identities on all basis pairs:
/// `ρL([x,y]) = [ρL x, ρL y]`, `ρR([x,y]) = [ρL x, ρR y]`,
/// `ρR(y)ρL(x) = -ρR(y)ρR(x)`.
pub fn check_representation(rep: &Representation) -> CheckReport {
    let alg = rep.algebra();
    let n = alg.dim();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let xy = alg.bracket_basis(i, j);
            let (li, lj) = (&rep.rho_l[i], &rep.rho_l[j]);
            let rj = &rep.rho_r[j];
            let ri = &rep.rho_r[i];

            let lhs = rep.left(xy);
            let rhs = li.commutator(lj).expect("square");
            if lhs != rhs {
                violations.push(violation(
                    "rep-left",
                    vec![i, j],
                    lhs.flatten(),
                    rhs.flatten(),
                ));
            }

            let lhs = rep.right(xy);
            let rhs = li.commutator(rj).expect("square");
            if lhs != rhs {
                violations.push(violation(
                    "rep-mixed",
                    vec![i, j],
                    lhs.flatten(),
                    rhs.flatten(),
                ));
            }

            let lhs = rj.mul(li).expect("square");
            let rhs = rj.mul(ri).expect("square").neg();
            if lhs != rhs {
                violations.push(violation(
                    "rep-right",
                    vec![i, j],
                    lhs.flatten(),
                    rhs.flatten(),
                ));
            }
        }
    }
    CheckReport::from_violations(violations)
}

/// `L(e_i) e_j = R(e_j) e_i = [e_i, e_j]`.
pub fn regular_representation(alg: &LeibnizAlgebra) -> Result<Representation> {
    alg.require_leibniz()?;
    let n = alg.dim();
    let f = alg.field();
    let rho_l = (0..n)
        .map(|i| Matrix::from_fn(f, n, n, |k, j| alg.structure(i, j, k).clone()))
        .collect();
    let rho_r = (0..n)
        .map(|j| Matrix::from_fn(f, n, n, |k, i| alg.structure(i, j, k).clone()))
        .collect();
    let rep = Representation::new(alg.clone(), n, rho_l, rho_r)?;
    debug_assert!(rep.is_representation());
    Ok(rep)
}

/// Dual module with the contragredient actions `(-ρL^T, ρL^T + ρR^T)`.
pub fn dual_representation(rep: &Representation) -> Result<Representation> {
    rep.require_representation()?;
    let rho_l: Vec<Matrix> = rep.rho_l.iter().map(|m| m.transpose().neg()).collect();
    let rho_r = rep
        .rho_l
        .iter()
        .zip(&rep.rho_r)
        .map(|(l, r)| l.transpose().add(&r.transpose()).expect("same shape"))
        .collect();
    let dual = Representation::new(rep.algebra_arc(), rep.mdim, rho_l, rho_r)?;
    debug_assert!(dual.is_representation());
    Ok(dual)
}

/// `V ⊕ g` with `[w0+x0, w1+x1] = ρR(x1)w0 + ρL(x0)w1 + [x0,x1]`, `V` first.
pub fn semidirect_sum(rep: &Representation) -> Result<LeibnizAlgebra> {
    rep.require_representation()?;
    let alg = rep.algebra();
    let (m, n) = (rep.mdim, alg.dim());
    let f = alg.field();
    let out = LeibnizAlgebra::from_fn(f, m + n, |a, b| {
        let mut v = zero_vector(f, m + n);
        match (a < m, b < m) {
            (true, true) => {}
            (true, false) => v[..m].clone_from_slice(&rep.rho_r[b - m].column(a)),
            (false, true) => v[..m].clone_from_slice(&rep.rho_l[a - m].column(b)),
            (false, false) => v[m..].clone_from_slice(alg.bracket_basis(a - m, b - m)),
        }
        v
    });
    debug_assert!(out.is_leibniz());
    Ok(out)
}

/// Total bracket on `g1 ⊕ g2` (g1 first) from two brackets and the mutual
/// actions: `rho1` is g1 acting on g2, `rho2` is g2 acting on g1.
pub fn twilled_bracket(
    g1: &LeibnizAlgebra,
    g2: &LeibnizAlgebra,
    rho1: &Representation,
    rho2: &Representation,
) -> Result<LeibnizAlgebra> {
    let (n1, n2) = (g1.dim(), g2.dim());
    if rho1.algebra().dim() != n1 || rho1.mdim() != n2 {
        return Err(Error::ShapeMismatch("rho1 must be g1 acting on g2".into()));
    }
    if rho2.algebra().dim() != n2 || rho2.mdim() != n1 {
        return Err(Error::ShapeMismatch("rho2 must be g2 acting on g1".into()));
    }
    if g1.field() != g2.field() {
        return Err(Error::FieldMismatch(
            g1.field().to_string(),
            g2.field().to_string(),
        ));
    }
    let f = g1.field();
    Ok(LeibnizAlgebra::from_fn(f, n1 + n2, |a, b| {
        let mut v = zero_vector(f, n1 + n2);
        match (a < n1, b < n1) {
            (true, true) => v[..n1].clone_from_slice(g1.bracket_basis(a, b)),
            (true, false) => {
                let bb = b - n1;
                v[..n1].clone_from_slice(&rho2.rho_r()[bb].column(a));
                v[n1..].clone_from_slice(&rho1.rho_l()[a].column(bb));
            }
            (false, true) => {
                let aa = a - n1;
                v[..n1].clone_from_slice(&rho2.rho_l()[aa].column(b));
                v[n1..].clone_from_slice(&rho1.rho_r()[b].column(aa));
            }
            (false, false) => v[n1..].clone_from_slice(g2.bracket_basis(a - n1, b - n1)),
        }
        v
    }))
}

/// Builds the candidate total bracket and checks it is Leibniz.
pub fn check_matched_pair(
    g1: &LeibnizAlgebra,
    g2: &LeibnizAlgebra,
    rho1: &Representation,
    rho2: &Representation,
) -> Result<(CheckReport, Option<LeibnizAlgebra>)> {
    let total = twilled_bracket(g1, g2, rho1, rho2)?;
    let report = check_leibniz(&total);
    let ok = report.ok;
    Ok((report, ok.then_some(total)))
}

/// A Leibniz algebra on `g1 ⊕ g2` (g1 first) in which both summands are
/// subalgebras, with the mutual actions read off the bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwilledContext {
    total: LeibnizAlgebra,
    g1: Arc<LeibnizAlgebra>,
    g2: Arc<LeibnizAlgebra>,
    rho1: Representation,
    rho2: Representation,
}

impl TwilledContext {
    pub fn new(total: LeibnizAlgebra, n1: usize) -> Result<Self> {
        let n = total.dim();
        if n1 > n {
            return Err(Error::ShapeMismatch(format!(
                "split {n1} exceeds dimension {n}"
            )));
        }
        total.require_leibniz()?;
        let n2 = n - n1;
        let g1 = total
            .block(0, n1)
            .ok_or_else(|| Error::Unsupported("first summand is not a subalgebra".into()))?;
        let g2 = total
            .block(n1, n2)
            .ok_or_else(|| Error::Unsupported("second summand is not a subalgebra".into()))?;
        let f = total.field();
        let (g1, g2) = (Arc::new(g1), Arc::new(g2));
        let part = |a: usize, b: usize, lo: usize, len: usize| -> Vector {
            total.bracket_basis(a, b)[lo..lo + len].to_vec()
        };
        let rho1_l = (0..n1)
            .map(|i| {
                Matrix::from_columns(
                    f,
                    n2,
                    &(0..n2).map(|b| part(i, n1 + b, n1, n2)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let rho1_r = (0..n1)
            .map(|j| {
                Matrix::from_columns(
                    f,
                    n2,
                    &(0..n2).map(|a| part(n1 + a, j, n1, n2)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let rho2_l = (0..n2)
            .map(|a| {
                Matrix::from_columns(
                    f,
                    n1,
                    &(0..n1).map(|j| part(n1 + a, j, 0, n1)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let rho2_r = (0..n2)
            .map(|b| {
                Matrix::from_columns(
                    f,
                    n1,
                    &(0..n1).map(|i| part(i, n1 + b, 0, n1)).collect::<Vec<_>>(),
                )
            })
            .collect();
        let rho1 = Representation::new(g1.clone(), n2, rho1_l, rho1_r)?;
        let rho2 = Representation::new(g2.clone(), n1, rho2_l, rho2_r)?;
        Ok(TwilledContext {
            total,
            g1,
            g2,
            rho1,
            rho2,
        })
    }

    pub fn total(&self) -> &LeibnizAlgebra {
        &self.total
    }

    pub fn n1(&self) -> usize {
        self.g1.dim()
    }

    pub fn n2(&self) -> usize {
        self.g2.dim()
    }

    pub fn g1(&self) -> &LeibnizAlgebra {
        &self.g1
    }

    pub fn g2(&self) -> &LeibnizAlgebra {
        &self.g2
    }

    /// `g1` acting on `g2`.
    pub fn rho1(&self) -> &Representation {
        &self.rho1
    }

    /// `g2` acting on `g1`.
    pub fn rho2(&self) -> &Representation {
        &self.rho2
    }

    /// Same algebra with the summands exchanged.
    pub fn swapped(&self) -> Result<Self> {
        let (n1, n2) = (self.n1(), self.n2());
        let perm: Vec<usize> = (0..n1).map(|i| i + n2).chain(0..n2).collect();
        Self::new(self.total.permuted(&perm), n2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn l2() -> LeibnizAlgebra {
        LeibnizAlgebra::from_entries(Q, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
    }

    #[test]
    fn abelian_is_leibniz() {
        for n in 1..4 {
            assert!(check_leibniz(&LeibnizAlgebra::abelian(Q, n)).ok);
        }
    }

    #[test]
    fn l2_is_leibniz() {
        assert!(check_leibniz(&l2()).ok);
    }

    #[test]
    fn idempotent_line_is_not_leibniz() {
        let alg = LeibnizAlgebra::from_entries(Q, 1, &[(0, 0, 0, 1)]);
        let r = check_leibniz(&alg);
        assert!(!r.ok);
        assert_eq!(r.violations.len(), 1);
        let v = &r.violations[0];
        assert_eq!(v.indices, vec![0, 0, 0]);
        assert_eq!(v.lhs, vec![Q.int(1)]);
        assert_eq!(v.rhs, vec![Q.int(2)]);
    }

    #[test]
    fn regular_of_l2() {
        let rep = regular_representation(&l2()).unwrap();
        assert_eq!(rep.rho_l()[1], Matrix::from_ints(Q, &[&[1, 1], &[0, 0]]));
        assert!(rep.rho_l()[0].is_zero());
        let r = Matrix::from_ints(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(rep.rho_r()[0], r);
        assert_eq!(rep.rho_r()[1], r);
        assert!(check_representation(&rep).ok);
    }

    #[test]
    fn identity_action_is_not_a_representation() {
        let id = Matrix::identity(Q, 2);
        let rep = Representation::new(l2(), 2, vec![id.clone(); 2], vec![id; 2]).unwrap();
        let r = check_representation(&rep);
        assert!(!r.ok);
        assert!(r
            .violations
            .iter()
            .any(|v| v.identity == "rep-left" && v.indices == vec![1, 1]));
    }

    #[test]
    fn dual_of_regular_l2() {
        let reg = regular_representation(&l2()).unwrap();
        let dual = dual_representation(&reg).unwrap();
        assert_eq!(dual.rho_l()[1], Matrix::from_ints(Q, &[&[-1, 0], &[-1, 0]]));
        assert_eq!(dual.rho_r()[1], Matrix::from_ints(Q, &[&[1, 0], &[2, 0]]));
        assert_eq!(dual.rho_r()[0], Matrix::from_ints(Q, &[&[0, 0], &[1, 0]]));
        assert!(check_representation(&dual).ok);
        assert_eq!(dual_representation(&dual).unwrap(), reg);
    }

    #[test]
    fn plain_transpose_dual_fails() {
        let reg = regular_representation(&l2()).unwrap();
        let rho_l: Vec<Matrix> = reg.rho_l().iter().map(Matrix::transpose).collect();
        let rho_r = reg
            .rho_l()
            .iter()
            .zip(reg.rho_r())
            .map(|(l, r)| l.transpose().add(&r.transpose()).unwrap().neg())
            .collect();
        let naive = Representation::new(l2(), 2, rho_l, rho_r).unwrap();
        assert!(!check_representation(&naive).ok);
    }

    #[test]
    fn semidirect_sums() {
        let reg = regular_representation(&l2()).unwrap();
        let s = semidirect_sum(&reg).unwrap();
        assert!(check_leibniz(&s).ok);
        assert_eq!(s.block(2, 2).unwrap(), l2());
        assert!(s.block(0, 2).unwrap().is_abelian());
        let d = semidirect_sum(&dual_representation(&reg).unwrap()).unwrap();
        assert!(check_leibniz(&d).ok);
        let z = semidirect_sum(&Representation::zero(l2(), 3)).unwrap();
        assert_eq!(z, LeibnizAlgebra::abelian(Q, 3).direct_sum(&l2()));
    }

    #[test]
    fn matched_pair_with_zero_back_action_is_semidirect() {
        let reg = regular_representation(&l2()).unwrap();
        let v = LeibnizAlgebra::abelian(Q, 2);
        let back = Representation::zero(v.clone(), 2);
        let (report, total) = check_matched_pair(&l2(), &v, &reg, &back).unwrap();
        assert!(report.ok);
        let semi = semidirect_sum(&reg).unwrap();
        assert_eq!(total.unwrap(), semi.permuted(&[2, 3, 0, 1]));
    }

    #[test]
    fn twilled_context_recovers_actions() {
        let reg = regular_representation(&l2()).unwrap();
        let dual = dual_representation(&reg).unwrap();
        let v = LeibnizAlgebra::abelian(Q, 2);
        let back = Representation::zero(v.clone(), 2);
        let total = twilled_bracket(&l2(), &v, &dual, &back).unwrap();
        let ctx = TwilledContext::new(total, 2).unwrap();
        assert_eq!(ctx.g1(), &l2());
        assert_eq!(ctx.rho1().rho_l(), dual.rho_l());
        assert_eq!(ctx.rho1().rho_r(), dual.rho_r());
        assert!(ctx.rho2().rho_l().iter().all(Matrix::is_zero));
        let sw = ctx.swapped().unwrap();
        assert_eq!(sw.g2(), &l2());
        assert_eq!(sw.rho2().rho_l(), dual.rho_l());
    }
}
