//! Exhaustive finite-field enumeration, the linear layer of the strong
//! Maurer-Cartan equation, and seeded random instances.

mod oracle;

pub use oracle::{oracle_eval, Bindings, ORACLE_IDENTITIES};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{check_leibniz, LeibnizAlgebra, Representation, TwilledContext};
use crate::cochain::check_maurer_cartan;
use crate::error::{Error, Result};
use crate::forms::{check_bn_structure, BilinearForm, Symmetry};
use crate::linear::{solve_linear, FieldSpec, LinearSolution, Matrix, Scalar};
use crate::operators::{is_kupershmidt, is_nijenhuis, LinearOperator};

pub const DEFAULT_BUDGET: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Predicate {
    Kupershmidt,
    Nijenhuis,
    RotaBaxter,
    McStrong,
    /// Pairs `(B, N)` encoded side by side as `[B | N]`.
    BnPair,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Kupershmidt => "kupershmidt",
            Predicate::Nijenhuis => "nijenhuis",
            Predicate::RotaBaxter => "rota_baxter",
            Predicate::McStrong => "mc_strong",
            Predicate::BnPair => "bn_pair",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s.replace('-', "_").as_str() {
            "kupershmidt" => Predicate::Kupershmidt,
            "nijenhuis" => Predicate::Nijenhuis,
            "rota_baxter" => Predicate::RotaBaxter,
            "mc_strong" => Predicate::McStrong,
            "bn_pair" => Predicate::BnPair,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug)]
pub enum SearchContext {
    Algebra(LeibnizAlgebra),
    Rep(Representation),
    Twilled(TwilledContext),
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub predicate: Predicate,
    pub context: SearchContext,
    pub budget: u128,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl SearchSpec {
    pub fn new(predicate: Predicate, context: SearchContext) -> Self {
        SearchSpec {
            predicate,
            context,
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }

    pub fn field(&self) -> FieldSpec {
        match &self.context {
            SearchContext::Algebra(a) => a.field(),
            SearchContext::Rep(r) => r.field(),
            SearchContext::Twilled(t) => t.total().field(),
        }
    }

    /// Rows and columns of the candidate matrices.
    pub fn shape(&self) -> Result<(usize, usize)> {
        match (self.predicate, &self.context) {
            (Predicate::Kupershmidt, SearchContext::Rep(r)) => Ok((r.algebra().dim(), r.mdim())),
            (Predicate::Nijenhuis | Predicate::RotaBaxter, SearchContext::Algebra(a)) => {
                Ok((a.dim(), a.dim()))
            }
            (Predicate::BnPair, SearchContext::Algebra(a)) => Ok((a.dim(), 2 * a.dim())),
            (Predicate::McStrong, SearchContext::Twilled(t)) => Ok((t.n2(), t.n1())),
            (p, _) => Err(Error::Unsupported(format!(
                "predicate {} does not fit this context",
                p.name()
            ))),
        }
    }

    fn accepts(&self, m: &Matrix) -> bool {
        match (self.predicate, &self.context) {
            (Predicate::Kupershmidt, SearchContext::Rep(r)) => is_kupershmidt(m, r),
            (Predicate::Nijenhuis, SearchContext::Algebra(a)) => is_nijenhuis(a, m),
            (Predicate::RotaBaxter, SearchContext::Algebra(a)) => is_rota_baxter(a, m),
            (Predicate::McStrong, SearchContext::Twilled(t)) => {
                matches!(check_maurer_cartan(t, m, true), Ok(r) if r.ok)
            }
            (Predicate::BnPair, SearchContext::Algebra(a)) => is_bn_pair(a, m),
            _ => false,
        }
    }
}

fn is_rota_baxter(alg: &LeibnizAlgebra, r: &Matrix) -> bool {
    matches!(
        crate::operators::check_rota_baxter(alg, &LinearOperator::on_algebra(r.clone())),
        Ok(rep) if rep.ok
    )
}

/// Splits `[B | N]` into its halves.
pub fn split_bn_candidate(m: &Matrix) -> (Matrix, Matrix) {
    let n = m.rows();
    let f = m.field();
    let b = Matrix::from_fn(f, n, n, |i, j| m.get(i, j).clone());
    let nn = Matrix::from_fn(f, n, n, |i, j| m.get(i, j + n).clone());
    (b, nn)
}

fn is_bn_pair(alg: &LeibnizAlgebra, m: &Matrix) -> bool {
    let (b, n) = split_bn_candidate(m);
    if !b.is_symmetric() || !b.is_invertible() || !is_nijenhuis(alg, &n) {
        return false;
    }
    let Ok(form) = BilinearForm::new(b, Symmetry::Symmetric) else {
        return false;
    };
    matches!(check_bn_structure(alg, &form, &LinearOperator::on_algebra(n)), Ok(r) if r.ok)
}

/// `p^entries`, saturating.
fn space_size(p: u64, entries: usize) -> u128 {
    (p as u128).checked_pow(entries as u32).unwrap_or(u128::MAX)
}

fn require_prime(field: FieldSpec) -> Result<u64> {
    match field {
        FieldSpec::Prime(p) => Ok(p),
        FieldSpec::Rationals => Err(Error::Unsupported(
            "exhaustive search needs a prime field".into(),
        )),
    }
}

fn run_in_pool<T: Send>(workers: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Unsupported(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

/// Every `rows x cols` matrix over `F_p` accepted by `pred`, in
/// lexicographic order of the residues read row by row.
pub fn enumerate_matrices(
    field: FieldSpec,
    rows: usize,
    cols: usize,
    budget: u128,
    workers: Option<usize>,
    pred: impl Fn(&Matrix) -> bool + Sync,
) -> Result<Vec<Matrix>> {
    let p = require_prime(field)?;
    let entries = rows * cols;
    let needed = space_size(p, entries);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let elements = field.elements().expect("prime field");
    let decode = |mut idx: u128| {
        let mut data = vec![field.zero(); entries];
        for slot in (0..entries).rev() {
            data[slot] = elements[(idx % p as u128) as usize].clone();
            idx /= p as u128;
        }
        Matrix::from_fn(field, rows, cols, |i, j| data[i * cols + j].clone())
    };
    run_in_pool(workers, || {
        (0..needed as u64)
            .into_par_iter()
            .filter_map(|idx| {
                let m = decode(idx as u128);
                pred(&m).then_some(m)
            })
            .collect()
    })
}

/// Exhaustive list of candidates satisfying the spec's predicate.
pub fn enumerate_operators(spec: &SearchSpec) -> Result<Vec<Matrix>> {
    let (rows, cols) = spec.shape()?;
    enumerate_matrices(spec.field(), rows, cols, spec.budget, spec.workers, |m| {
        spec.accepts(m)
    })
}

/// Solutions of the linear condition `Θ[y,z] = ρ1L(y)Θz + ρ1R(z)Θy`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearLayer {
    pub rows: usize,
    pub cols: usize,
    /// Basis of the solution space, each an `n2 x n1` matrix.
    pub basis: Vec<Matrix>,
    /// The assembled constraint matrix on the row-major entries of `Θ`.
    pub constraints: Matrix,
}

impl LinearLayer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ c_i basis_i`.
    pub fn combine(&self, coeffs: &[Scalar], field: FieldSpec) -> Matrix {
        let mut out = Matrix::zeros(field, self.rows, self.cols);
        for (b, c) in self.basis.iter().zip(coeffs) {
            out = out.add(&b.scale(c)).expect("shape");
        }
        out
    }
}

/// Constraint matrix of the linear layer; row `(y, z, a)`, column `(a', b)`
/// for the unknown `Θ[a'][b]`.
pub fn mc_linear_constraints(ctx: &TwilledContext) -> Matrix {
    let (n1, n2) = (ctx.n1(), ctx.n2());
    let f = ctx.total().field();
    let (g1, rho1) = (ctx.g1(), ctx.rho1());
    let mut a = Matrix::zeros(f, n1 * n1 * n2, n2 * n1);
    for y in 0..n1 {
        for z in 0..n1 {
            let yz = g1.bracket_basis(y, z);
            for row in 0..n2 {
                let r = (y * n1 + z) * n2 + row;
                // Θ[y,z] component `row`.
                for (b, c) in yz.iter().enumerate() {
                    if !c.is_zero() {
                        let col = row * n1 + b;
                        let v = a.get(r, col) + c;
                        a.set(r, col, v);
                    }
                }
                // -ρ1L(y)Θz - ρ1R(z)Θy
                for k in 0..n2 {
                    let l = rho1.rho_l()[y].get(row, k);
                    if !l.is_zero() {
                        let col = k * n1 + z;
                        let v = a.get(r, col) - l;
                        a.set(r, col, v);
                    }
                    let rr = rho1.rho_r()[z].get(row, k);
                    if !rr.is_zero() {
                        let col = k * n1 + y;
                        let v = a.get(r, col) - rr;
                        a.set(r, col, v);
                    }
                }
            }
        }
    }
    a
}

pub fn solve_mc_linear_layer(ctx: &TwilledContext) -> Result<LinearLayer> {
    let (n1, n2) = (ctx.n1(), ctx.n2());
    let f = ctx.total().field();
    let constraints = mc_linear_constraints(ctx);
    let rhs = Matrix::zeros(f, constraints.rows(), 1);
    let basis = match solve_linear(&constraints, &rhs)? {
        LinearSolution::NoSolution => Vec::new(),
        LinearSolution::Solutions { nullspace, .. } => nullspace
            .into_iter()
            .map(|v| Matrix::from_fn(f, n2, n1, |i, j| v.get(i * n1 + j, 0).clone()))
            .collect(),
    };
    Ok(LinearLayer {
        rows: n2,
        cols: n1,
        basis,
        constraints,
    })
}

/// All strong Maurer-Cartan elements over `F_p`: the linear layer filtered
/// by the quadratic equation. Sorted.
pub fn strong_mc_solutions(
    ctx: &TwilledContext,
    budget: u128,
    workers: Option<usize>,
) -> Result<Vec<Matrix>> {
    let layer = solve_mc_linear_layer(ctx)?;
    let f = ctx.total().field();
    let k = layer.dim();
    if k == 0 {
        return Ok(vec![Matrix::zeros(f, layer.rows, layer.cols)]);
    }
    let coeff_space = enumerate_matrices(f, 1, k, budget, workers, |_| true)?;
    let mut out: Vec<Matrix> = run_in_pool(workers, || {
        coeff_space
            .par_iter()
            .filter_map(|c| {
                let theta = layer.combine(c.entries(), f);
                matches!(check_maurer_cartan(ctx, &theta, true), Ok(r) if r.ok).then_some(theta)
            })
            .collect()
    })?;
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug)]
pub enum InstanceKind {
    Leibniz { dim: usize },
    Nijenhuis(LeibnizAlgebra),
    RotaBaxter(LeibnizAlgebra),
    Kupershmidt(Representation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Algebra(LeibnizAlgebra),
    Operator(Matrix),
}

pub const MAX_ATTEMPTS: usize = 20_000;

/// Sparse scalar with numerator and denominator bounded by `height`.
fn sample(rng: &mut ChaCha8Rng, field: FieldSpec, height: i64) -> Scalar {
    if height == 0 || rng.gen_bool(0.5) {
        return field.zero();
    }
    let num = rng.gen_range(-height..=height);
    let den = rng.gen_range(1..=height);
    field.ratio(num, den).unwrap_or_else(|_| field.zero())
}

fn sample_matrix(rng: &mut ChaCha8Rng, field: FieldSpec, r: usize, c: usize, h: i64) -> Matrix {
    let entries: Vec<Scalar> = (0..r * c).map(|_| sample(rng, field, h)).collect();
    Matrix::from_fn(field, r, c, |i, j| entries[i * c + j].clone())
}

/// Rejection-samples a verified object of the requested kind.
pub fn random_instance(
    kind: &InstanceKind,
    field: FieldSpec,
    height: i64,
    seed: u64,
) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let found = match kind {
            InstanceKind::Leibniz { dim } => {
                let n = *dim;
                let table = (0..n * n)
                    .map(|_| (0..n).map(|_| sample(&mut rng, field, height)).collect())
                    .collect();
                let alg = LeibnizAlgebra::new(field, n, table)?;
                check_leibniz(&alg).ok.then_some(Instance::Algebra(alg))
            }
            InstanceKind::Nijenhuis(alg) => {
                let m = sample_matrix(&mut rng, alg.field(), alg.dim(), alg.dim(), height);
                is_nijenhuis(alg, &m).then_some(Instance::Operator(m))
            }
            InstanceKind::RotaBaxter(alg) => {
                let m = sample_matrix(&mut rng, alg.field(), alg.dim(), alg.dim(), height);
                is_rota_baxter(alg, &m).then_some(Instance::Operator(m))
            }
            InstanceKind::Kupershmidt(rep) => {
                let m = sample_matrix(
                    &mut rng,
                    rep.field(),
                    rep.algebra().dim(),
                    rep.mdim(),
                    height,
                );
                is_kupershmidt(&m, rep).then_some(Instance::Operator(m))
            }
        };
        if let Some(x) = found {
            return Ok(x);
        }
    }
    Err(Error::NotFound(MAX_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{regular_representation, semidirect_sum};
    use crate::operators::lifted_algebra;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn l2(f: FieldSpec) -> LeibnizAlgebra {
        LeibnizAlgebra::from_entries(f, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
    }

    /// `[e_i, e_j]` for L2 spelled out by hand.
    fn l2_bracket(x: [u64; 2], y: [u64; 2]) -> [u64; 2] {
        [(x[1] * y[0] + x[1] * y[1]) % 2, 0]
    }

    #[test]
    fn nijenhuis_on_l2_over_f2() {
        let spec = SearchSpec::new(Predicate::Nijenhuis, SearchContext::Algebra(l2(f2())));
        let found = enumerate_operators(&spec).unwrap();
        let mut expected = Vec::new();
        for code in 0..16u64 {
            let e = [code >> 3 & 1, code >> 2 & 1, code >> 1 & 1, code & 1];
            let apply = |v: [u64; 2]| {
                [
                    (e[0] * v[0] + e[1] * v[1]) % 2,
                    (e[2] * v[0] + e[3] * v[1]) % 2,
                ]
            };
            let basis = [[1, 0], [0, 1]];
            let ok = basis.iter().all(|&x| {
                basis.iter().all(|&y| {
                    let (nx, ny) = (apply(x), apply(y));
                    let lhs = l2_bracket(nx, ny);
                    let a = l2_bracket(nx, y);
                    let b = l2_bracket(x, ny);
                    let c = apply(l2_bracket(x, y));
                    let inner = [(a[0] + b[0] + c[0]) % 2, (a[1] + b[1] + c[1]) % 2];
                    lhs == apply(inner)
                })
            });
            if ok {
                expected.push(Matrix::from_ints(
                    f2(),
                    &[&[e[0] as i64, e[1] as i64], &[e[2] as i64, e[3] as i64]],
                ));
            }
        }
        assert_eq!(found, expected);
        assert_eq!(found.len(), 6);
        assert!(found.contains(&Matrix::zeros(f2(), 2, 2)));
        assert!(found.contains(&Matrix::identity(f2(), 2)));
        let again = enumerate_operators(&spec.clone().with_workers(3)).unwrap();
        assert_eq!(found, again);
    }

    #[test]
    fn abelian_rota_baxter_and_budget() {
        let ab = LeibnizAlgebra::abelian(f2(), 2);
        let spec = SearchSpec::new(Predicate::RotaBaxter, SearchContext::Algebra(ab.clone()));
        assert_eq!(enumerate_operators(&spec).unwrap().len(), 16);
        let rep = regular_representation(&LeibnizAlgebra::abelian(f2(), 4)).unwrap();
        let spec = SearchSpec::new(Predicate::Kupershmidt, SearchContext::Rep(rep)).with_budget(10);
        assert_eq!(
            enumerate_operators(&spec),
            Err(Error::BudgetExceeded {
                needed: 65536,
                budget: 10
            })
        );
    }

    #[test]
    fn linear_layer_matches_nullspace() {
        let f = FieldSpec::Rationals;
        let alg = l2(f);
        let reg = regular_representation(&alg).unwrap();
        let r = LinearOperator::module_to_algebra(Matrix::from_ints(f, &[&[0, 1], &[0, -1]]));
        let ctx = TwilledContext::new(lifted_algebra(&r, &reg).unwrap(), 2).unwrap();
        let layer = solve_mc_linear_layer(&ctx).unwrap();
        let rank = layer.constraints.rank();
        assert_eq!(layer.dim(), 4 - rank);
        for b in &layer.basis {
            let rep = check_maurer_cartan(&ctx, b, true).unwrap();
            assert!(rep
                .violations
                .iter()
                .all(|v| v.identity != "strong-maurer-cartan"));
        }

        let zero_ctx = TwilledContext::new(
            semidirect_sum(&crate::algebra::Representation::zero(alg.clone(), 2))
                .unwrap()
                .permuted(&[2, 3, 0, 1]),
            2,
        )
        .unwrap();
        let layer = solve_mc_linear_layer(&zero_ctx).unwrap();
        // Θ∘[,] = 0 ⟺ Θ kills e0, the only bracket value.
        assert_eq!(layer.dim(), 2);
        for b in &layer.basis {
            assert!(b.column(0).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn strong_solutions_over_f3() {
        let f = FieldSpec::prime(3).unwrap();
        let alg = l2(f);
        let reg = regular_representation(&alg).unwrap();
        let r = LinearOperator::module_to_algebra(Matrix::from_ints(f, &[&[0, 1], &[0, -1]]));
        let ctx = TwilledContext::new(lifted_algebra(&r, &reg).unwrap(), 2).unwrap();
        let sols = strong_mc_solutions(&ctx, DEFAULT_BUDGET, None).unwrap();
        let brute = enumerate_operators(&SearchSpec::new(
            Predicate::McStrong,
            SearchContext::Twilled(ctx),
        ))
        .unwrap();
        assert_eq!(sols, brute);
        assert!(sols.contains(&Matrix::zeros(f, 2, 2)));
    }

    #[test]
    fn random_instances() {
        let q = FieldSpec::Rationals;
        match random_instance(&InstanceKind::Leibniz { dim: 2 }, q, 2, 1).unwrap() {
            Instance::Algebra(a) => assert!(check_leibniz(&a).ok),
            other => panic!("{other:?}"),
        }
        match random_instance(&InstanceKind::Nijenhuis(l2(q)), q, 2, 7).unwrap() {
            Instance::Operator(m) => assert!(is_nijenhuis(&l2(q), &m)),
            other => panic!("{other:?}"),
        }
        match random_instance(&InstanceKind::Leibniz { dim: 3 }, q, 0, 5).unwrap() {
            Instance::Algebra(a) => assert!(a.is_abelian()),
            other => panic!("{other:?}"),
        }
        let a = random_instance(&InstanceKind::Leibniz { dim: 2 }, q, 2, 9).unwrap();
        let b = random_instance(&InstanceKind::Leibniz { dim: 2 }, q, 2, 9).unwrap();
        assert_eq!(a, b);
    }
}
