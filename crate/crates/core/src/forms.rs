//! Two-tensors, bilinear forms, r-matrices and the structures they induce
//! on the dual representation.

use crate::algebra::{dual_representation, regular_representation, LeibnizAlgebra, Representation};
use crate::error::{Error, Result};
use crate::linear::{FieldSpec, Matrix, Scalar, Vector};
use crate::operators::{
    check_compatible, check_kupershmidt, check_nijenhuis, check_rota_baxter, deform_table,
    is_kupershmidt, kupershmidt_bracket, LinearOperator,
};
use crate::pairs::{check_kn_structure, s_deformed_bracket, table_violations, KnMode, KnStructure};
use crate::report::{violation, CheckReport, Violation};

/// `π = Σ P[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor2 {
    matrix: Matrix,
}

impl Tensor2 {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch(
                "a tensor in g⊗g needs a square matrix".into(),
            ));
        }
        Ok(Tensor2 { matrix })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        Tensor2 {
            matrix: Matrix::zeros(field, n, n),
        }
    }

    /// `e_i ⊗ e_j`.
    pub fn elementary(field: FieldSpec, n: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        m.set(i, j, field.one());
        Tensor2 { matrix: m }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Skew,
}

/// `B[i][j] = form(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    matrix: Matrix,
    symmetry: Symmetry,
}

impl BilinearForm {
    pub fn new(matrix: Matrix, symmetry: Symmetry) -> Result<Self> {
        match symmetry {
            Symmetry::Symmetric if !matrix.is_symmetric() => Err(Error::NotSymmetric),
            Symmetry::Skew if !matrix.is_skew() => Err(Error::NotSkew),
            _ => Ok(BilinearForm { matrix, symmetry }),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let by = self.matrix.apply(y).expect("shape");
        let f = self.matrix.field();
        x.iter()
            .zip(&by)
            .fold(f.zero(), |acc, (a, b)| &acc + &(a * b))
    }

    /// `x ↦ form(x, ·)` as a map `g → g*`.
    pub fn flat(&self) -> Matrix {
        self.matrix.transpose()
    }

    /// Inverse of [`BilinearForm::flat`].
    pub fn sharp(&self) -> Result<Matrix> {
        self.flat().inverse().map_err(|_| Error::Degenerate)
    }
}

fn dual_regular(alg: &LeibnizAlgebra) -> Result<Representation> {
    dual_representation(&regular_representation(alg)?)
}

/// The four terms of the Yang-Baxter tensor as `T[i][j][k]`, split into the
/// two positive and two negative parts.
fn ybe_tensor(alg: &LeibnizAlgebra, p: &Matrix) -> (Vec<Scalar>, Vec<Scalar>) {
    let n = alg.dim();
    let f = alg.field();
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    let mut plus = vec![f.zero(); n * n * n];
    let mut minus = vec![f.zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let pij = p.get(i, j);
            if pij.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let pkl = p.get(k, l);
                    if pkl.is_zero() {
                        continue;
                    }
                    let w = pij * pkl;
                    for m in 0..n {
                        // a ⊗ [b, a'] ⊗ b'
                        let c = alg.structure(j, k, m);
                        if !c.is_zero() {
                            plus[idx(i, m, l)] += &(&w * c);
                        }
                        // a ⊗ a' ⊗ [b, b']
                        let c = alg.structure(j, l, m);
                        if !c.is_zero() {
                            plus[idx(i, k, m)] += &(&w * c);
                        }
                        // [a, a'] ⊗ b ⊗ b' and [a, a'] ⊗ b' ⊗ b
                        let c = alg.structure(i, k, m);
                        if !c.is_zero() {
                            let t = &w * c;
                            minus[idx(m, j, l)] += &t;
                            minus[idx(m, l, j)] += &t;
                        }
                    }
                }
            }
        }
    }
    (plus, minus)
}

/// `[π12,π23] + [π13,π23] - [π12,π13] - [π13,π12] = 0` with each bracket
/// taken in the shared tensor slot.
pub fn check_ybe(alg: &LeibnizAlgebra, pi: &Tensor2) -> Result<CheckReport> {
    let n = alg.dim();
    if pi.dim() != n {
        return Err(Error::ShapeMismatch(format!("tensor must be {n}x{n}")));
    }
    let mut report = CheckReport::from_violations(ybe_violations(alg, pi.matrix()));
    if report.ok && pi.is_symmetric() {
        let dual = dual_regular(alg)?;
        report.consequence(
            "sharp map is Kupershmidt on the dual representation",
            is_kupershmidt(&sharp_matrix(pi), &dual),
            "",
        );
    }
    Ok(report)
}

fn ybe_violations(alg: &LeibnizAlgebra, p: &Matrix) -> Vec<Violation> {
    let n = alg.dim();
    let (plus, minus) = ybe_tensor(alg, p);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lo = (i * n + j) * n;
            let (a, b) = (&plus[lo..lo + n], &minus[lo..lo + n]);
            if a != b {
                out.push(violation("ybe", vec![i, j], a.to_vec(), b.to_vec()));
            }
        }
    }
    out
}

fn sharp_matrix(pi: &Tensor2) -> Matrix {
    pi.matrix().transpose()
}

/// `⟨π♯(α), β⟩ = π(α, β)` for symmetric `π`.
pub fn sharp_map(pi: &Tensor2) -> Result<LinearOperator> {
    if !pi.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(LinearOperator::module_to_algebra(sharp_matrix(pi)))
}

fn require_nijenhuis(alg: &LeibnizAlgebra, n: &LinearOperator) -> Result<()> {
    if !check_nijenhuis(alg, n)?.ok {
        return Err(Error::NotNijenhuis);
    }
    Ok(())
}

fn kn_consequence(report: &mut CheckReport, name: &str, kn: &KnStructure, rep: &Representation) {
    match check_kn_structure(kn, rep) {
        Ok(r) => report.consequence_from(name, &r),
        Err(e) => report.consequence(name, false, e.to_string()),
    }
}

/// `Nπ♯ = π♯N*` and `[α,β]^{Nπ♯} = [α,β]^{π♯}_{N*}` on the dual representation.
pub fn check_rn_structure(
    alg: &LeibnizAlgebra,
    pi: &Tensor2,
    n: &LinearOperator,
) -> Result<CheckReport> {
    let sharp = sharp_map(pi)?;
    if !check_ybe(alg, pi)?.ok {
        return Err(Error::NotRMatrix);
    }
    require_nijenhuis(alg, n)?;
    let dual = dual_regular(alg)?;
    let p = sharp.map();
    let nt = n.map().transpose();
    let lhs = n.map().mul(p)?;
    let rhs = p.mul(&nt)?;
    let mut violations = Vec::new();
    if lhs != rhs {
        violations.push(violation(
            "rn-commute",
            vec![],
            lhs.flatten(),
            rhs.flatten(),
        ));
    }
    let np = kupershmidt_bracket(&lhs, &dual)?;
    let deformed = s_deformed_bracket(p, &nt, &dual)?;
    violations.extend(table_violations("rn-bracket", &np, &deformed));
    let mut report = CheckReport::from_violations(violations);
    if report.ok {
        let kn = KnStructure::new(p.clone(), n.map().clone(), nt, KnMode::DualKn);
        kn_consequence(
            &mut report,
            "sharp map with N gives a dual KN-structure",
            &kn,
            &dual,
        );
    }
    Ok(report)
}

/// `NR = RN` and `[x,y]^{NR} = ([,]^R)_N` where `[x,y]^R = [Rx,y] + [x,Ry]`.
pub fn check_rbn_structure(
    alg: &LeibnizAlgebra,
    r: &LinearOperator,
    n: &LinearOperator,
) -> Result<CheckReport> {
    if !check_rota_baxter(alg, r)?.ok {
        return Err(Error::NotRotaBaxter);
    }
    require_nijenhuis(alg, n)?;
    let reg = regular_representation(alg)?;
    let (rm, nm) = (r.map(), n.map());
    let nr = nm.mul(rm)?;
    let rn = rm.mul(nm)?;
    let mut violations = Vec::new();
    if nr != rn {
        violations.push(violation("rbn-commute", vec![], nr.flatten(), rn.flatten()));
    }
    let lhs = kupershmidt_bracket(&nr, &reg)?;
    let rhs = deform_table(&kupershmidt_bracket(rm, &reg)?, nm);
    violations.extend(table_violations("rbn-bracket", &lhs, &rhs));
    Ok(CheckReport::from_violations(violations))
}

/// `q(x0, [x1, x2]) = q([x0, x2] + [x2, x0], x1)` for a nondegenerate skew
/// form; on success checks that `x ↦ q(x, ·)` intertwines the regular and
/// dual representations.
pub fn check_quadratic(alg: &LeibnizAlgebra, q: &BilinearForm) -> Result<CheckReport> {
    if q.symmetry() != Symmetry::Skew {
        return Err(Error::NotSkew);
    }
    if !q.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let n = alg.dim();
    if q.matrix().rows() != n {
        return Err(Error::ShapeMismatch(format!("form must be {n}x{n}")));
    }
    let mut violations = Vec::new();
    for a in 0..n {
        let ea = alg.basis(a);
        for b in 0..n {
            let eb = alg.basis(b);
            for c in 0..n {
                let lhs = q.eval(&ea, alg.bracket_basis(b, c));
                let sym = crate::linear::vec_add(alg.bracket_basis(a, c), alg.bracket_basis(c, a));
                let rhs = q.eval(&sym, &eb);
                if lhs != rhs {
                    violations.push(violation("quadratic", vec![a, b, c], vec![lhs], vec![rhs]));
                }
            }
        }
    }
    let mut report = CheckReport::from_violations(violations);
    if report.ok {
        let reg = regular_representation(alg)?;
        let dual = dual_representation(&reg)?;
        let flat = q.flat();
        let mut left = true;
        let mut right = true;
        for i in 0..n {
            left &= flat.mul(&reg.rho_l()[i])? == dual.rho_l()[i].mul(&flat)?;
            right &= flat.mul(&reg.rho_r()[i])? == dual.rho_r()[i].mul(&flat)?;
        }
        report.consequence(
            "form intertwines the left regular and dual actions",
            left,
            "",
        );
        report.consequence(
            "form intertwines the right regular and dual actions",
            right,
            "",
        );
    }
    Ok(report)
}

/// For `π♯ = R q♯` with `q♯N* = Nq♯`: `(R, N)` is Rota-Baxter-Nijenhuis iff
/// `(π, N)` is an r-n structure. Records both sides and flags disagreement.
pub fn rbn_rn_transfer(
    alg: &LeibnizAlgebra,
    q: &BilinearForm,
    r: &LinearOperator,
    n: &LinearOperator,
) -> Result<CheckReport> {
    match check_quadratic(alg, q) {
        Ok(rep) if rep.ok => {}
        Ok(_) => return Err(Error::HypothesisFailed("form is not invariant".into())),
        Err(e) => return Err(Error::HypothesisFailed(e.to_string())),
    }
    if !check_nijenhuis(alg, n)?.ok {
        return Err(Error::HypothesisFailed("N is not Nijenhuis".into()));
    }
    let q_sharp = q.sharp()?;
    let nm = n.map();
    if q_sharp.mul(&nm.transpose())? != nm.mul(&q_sharp)? {
        return Err(Error::HypothesisFailed(
            "q-sharp does not intertwine N and its dual".into(),
        ));
    }
    let pi_sharp = r.map().mul(&q_sharp)?;
    let pi = Tensor2::new(pi_sharp.transpose())?;
    if !pi.is_symmetric() {
        return Err(Error::HypothesisFailed("R q-sharp is not symmetric".into()));
    }
    let rbn = matches!(check_rbn_structure(alg, r, n), Ok(rep) if rep.ok);
    let rn = matches!(check_rn_structure(alg, &pi, n), Ok(rep) if rep.ok);
    let mut violations = Vec::new();
    if rbn != rn {
        violations.push(violation("rbn-rn-transfer", vec![], vec![], vec![]));
    }
    let mut report = CheckReport::from_violations(violations);
    report.consequence("Rota-Baxter-Nijenhuis side", true, format!("holds: {rbn}"));
    report.consequence("r-n side", true, format!("holds: {rn}"));
    Ok(report)
}

fn closeness_violations(
    alg: &LeibnizAlgebra,
    b: &BilinearForm,
    n: Option<&Matrix>,
    name: &str,
) -> Vec<Violation> {
    let dim = alg.dim();
    let apply = |v: &Vector| -> Vector {
        match n {
            Some(m) => m.apply(v).expect("shape"),
            None => v.clone(),
        }
    };
    let mut out = Vec::new();
    for x0 in 0..dim {
        let e0 = alg.basis(x0);
        for x1 in 0..dim {
            let e1 = alg.basis(x1);
            for x2 in 0..dim {
                let e2 = alg.basis(x2);
                let lhs = b.eval(&e2, &apply(alg.bracket_basis(x0, x1)));
                let rhs = &(&(-&b.eval(&e1, &apply(alg.bracket_basis(x0, x2))))
                    + &b.eval(&e0, &apply(alg.bracket_basis(x1, x2))))
                    + &b.eval(&e0, &apply(alg.bracket_basis(x2, x1)));
                if lhs != rhs {
                    out.push(violation(name, vec![x0, x1, x2], vec![lhs], vec![rhs]));
                }
            }
        }
    }
    out
}

/// Closeness of `B`, `B(Nx, y) = B(x, Ny)` and closeness of `B_N`; on success
/// records the induced dual KN-structure and compatible pair.
pub fn check_bn_structure(
    alg: &LeibnizAlgebra,
    b: &BilinearForm,
    n: &LinearOperator,
) -> Result<CheckReport> {
    if b.symmetry() != Symmetry::Symmetric {
        return Err(Error::NotSymmetric);
    }
    if !b.is_nondegenerate() {
        return Err(Error::Degenerate);
    }
    let dim = alg.dim();
    if b.matrix().rows() != dim {
        return Err(Error::ShapeMismatch(format!("form must be {dim}x{dim}")));
    }
    require_nijenhuis(alg, n)?;
    let nm = n.map();
    let mut violations = closeness_violations(alg, b, None, "closeness");
    for i in 0..dim {
        for j in 0..dim {
            let lhs = b.eval(&nm.column(i), &alg.basis(j));
            let rhs = b.eval(&alg.basis(i), &nm.column(j));
            if lhs != rhs {
                violations.push(violation("bn-symmetric", vec![i, j], vec![lhs], vec![rhs]));
            }
        }
    }
    violations.extend(closeness_violations(alg, b, Some(nm), "bn-closeness"));
    let mut report = CheckReport::from_violations(violations);
    if report.ok {
        let dual = dual_regular(alg)?;
        let b_sharp = b.sharp()?;
        let kn = KnStructure::new(b_sharp.clone(), nm.clone(), nm.transpose(), KnMode::DualKn);
        kn_consequence(
            &mut report,
            "form sharp with N gives a dual KN-structure",
            &kn,
            &dual,
        );
        let k1 = LinearOperator::module_to_algebra(b_sharp.clone());
        let k2 = LinearOperator::module_to_algebra(nm.mul(&b_sharp)?);
        match check_compatible(&k1, &k2, &dual) {
            Ok(r) => {
                report.consequence_from("form sharp and N times form sharp are compatible", &r)
            }
            Err(e) => report.consequence(
                "form sharp and N times form sharp are compatible",
                false,
                e.to_string(),
            ),
        }
    }
    Ok(report)
}

/// Whether `π♯` is Kupershmidt on the dual representation, for any `π`.
pub fn sharp_is_kupershmidt(alg: &LeibnizAlgebra, pi: &Tensor2) -> Result<bool> {
    let dual = dual_regular(alg)?;
    Ok(check_kupershmidt(&LinearOperator::module_to_algebra(sharp_matrix(pi)), &dual)?.ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn l2(f: FieldSpec) -> LeibnizAlgebra {
        LeibnizAlgebra::from_entries(f, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
    }

    #[test]
    fn ybe_examples() {
        let alg = l2(Q);
        assert!(check_ybe(&alg, &Tensor2::zero(Q, 2)).unwrap().ok);
        let r = check_ybe(&alg, &Tensor2::elementary(Q, 2, 0, 0)).unwrap();
        assert!(r.ok && r.consequences_ok());
        assert!(
            !check_ybe(&alg, &Tensor2::elementary(Q, 2, 1, 1))
                .unwrap()
                .ok
        );
        let sharp = sharp_map(&Tensor2::elementary(Q, 2, 0, 0)).unwrap();
        assert_eq!(sharp.map(), &Matrix::from_ints(Q, &[&[1, 0], &[0, 0]]));
        assert_eq!(
            sharp_map(&Tensor2::elementary(Q, 2, 0, 1)),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn symmetric_ybe_matches_kupershmidt_sharp() {
        let f = FieldSpec::prime(3).unwrap();
        let algs = [
            l2(f),
            LeibnizAlgebra::from_entries(f, 2, &[(0, 0, 1, 1)]),
            LeibnizAlgebra::from_entries(f, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
        ];
        let el = f.elements().unwrap();
        for alg in &algs {
            let mut seen = [false; 2];
            for a in &el {
                for b in &el {
                    for c in &el {
                        let p = Matrix::from_rows(
                            f,
                            &[vec![a.clone(), b.clone()], vec![b.clone(), c.clone()]],
                        )
                        .unwrap();
                        let pi = Tensor2::new(p).unwrap();
                        let ybe = check_ybe(alg, &pi).unwrap().ok;
                        assert_eq!(ybe, sharp_is_kupershmidt(alg, &pi).unwrap());
                        seen[ybe as usize] = true;
                    }
                }
            }
            assert!(seen[0] && seen[1]);
        }
    }

    #[test]
    fn rn_examples() {
        let alg = l2(Q);
        let id = LinearOperator::on_algebra(Matrix::identity(Q, 2));
        assert!(
            check_rn_structure(&alg, &Tensor2::zero(Q, 2), &id)
                .unwrap()
                .ok
        );
        let pi = Tensor2::elementary(Q, 2, 0, 0);
        let diag = LinearOperator::on_algebra(Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]));
        assert_eq!(
            check_rn_structure(&alg, &pi, &diag),
            Err(Error::NotNijenhuis)
        );
        // N π♯ = π♯ N* holds, the bracket condition does not:
        // [e⁰,e⁰]^{Nπ♯} = 2e¹ against e¹ for the deformed side.
        let n = LinearOperator::on_algebra(Matrix::from_ints(Q, &[&[2, -1], &[0, 3]]));
        let r = check_rn_structure(&alg, &pi, &n).unwrap();
        assert_eq!(r.signature(), vec![("rn-bracket".to_string(), vec![0, 0])]);
        assert_eq!(r.violations[0].lhs, vec![Q.int(0), Q.int(2)]);
        assert_eq!(r.violations[0].rhs, vec![Q.int(0), Q.int(1)]);
    }

    #[test]
    fn rbn_examples() {
        let alg = l2(Q);
        let r = LinearOperator::on_algebra(Matrix::from_ints(Q, &[&[0, 1], &[0, -1]]));
        let n = LinearOperator::on_algebra(Matrix::from_ints(Q, &[&[2, -1], &[0, 3]]));
        assert!(check_rbn_structure(&alg, &r, &n).unwrap().ok);
        let zero = LinearOperator::on_algebra(Matrix::zeros(Q, 2, 2));
        assert!(check_rbn_structure(&alg, &zero, &n).unwrap().ok);
        let id = LinearOperator::on_algebra(Matrix::identity(Q, 2));
        assert!(check_rbn_structure(&alg, &r, &id).unwrap().ok);
        assert_eq!(
            check_rbn_structure(&alg, &id, &n),
            Err(Error::NotRotaBaxter)
        );
    }

    #[test]
    fn quadratic_examples() {
        let skew = |f| {
            BilinearForm::new(Matrix::from_ints(f, &[&[0, 1], &[-1, 0]]), Symmetry::Skew).unwrap()
        };
        let q = skew(Q);
        assert!(
            check_quadratic(&LeibnizAlgebra::abelian(Q, 2), &q)
                .unwrap()
                .ok
        );
        let r = check_quadratic(&l2(Q), &q).unwrap();
        assert!(!r.ok);
        let v = r
            .violations
            .iter()
            .find(|v| v.indices == [0, 1, 1])
            .unwrap();
        assert_eq!((v.lhs[0].clone(), v.rhs[0].clone()), (Q.int(0), Q.int(1)));

        let f3 = FieldSpec::prime(3).unwrap();
        let alg = LeibnizAlgebra::from_entries(f3, 2, &[(0, 0, 1, 1)]);
        let r = check_quadratic(&alg, &skew(f3)).unwrap();
        assert!(r.ok && r.consequences_ok(), "{r}");
        let alg_q = LeibnizAlgebra::from_entries(Q, 2, &[(0, 0, 1, 1)]);
        assert!(!check_quadratic(&alg_q, &q).unwrap().ok);
        assert_eq!(
            BilinearForm::new(Matrix::identity(Q, 2), Symmetry::Skew),
            Err(Error::NotSkew)
        );
    }

    #[test]
    fn bn_on_abelian() {
        let alg = LeibnizAlgebra::abelian(Q, 2);
        let b = BilinearForm::new(Matrix::identity(Q, 2), Symmetry::Symmetric).unwrap();
        for n in [
            Matrix::identity(Q, 2),
            Matrix::from_ints(Q, &[&[1, 2], &[2, 0]]),
        ] {
            let r = check_bn_structure(&alg, &b, &LinearOperator::on_algebra(n)).unwrap();
            assert!(r.ok && r.consequences_ok(), "{r}");
        }
    }

    #[test]
    fn transfer_with_zero_r() {
        let f3 = FieldSpec::prime(3).unwrap();
        let alg = LeibnizAlgebra::from_entries(f3, 2, &[(0, 0, 1, 1)]);
        let q =
            BilinearForm::new(Matrix::from_ints(f3, &[&[0, 1], &[-1, 0]]), Symmetry::Skew).unwrap();
        let zero = LinearOperator::on_algebra(Matrix::zeros(f3, 2, 2));
        let id = LinearOperator::on_algebra(Matrix::identity(f3, 2));
        let r = rbn_rn_transfer(&alg, &q, &zero, &id).unwrap();
        assert!(r.ok, "{r}");
    }
}
