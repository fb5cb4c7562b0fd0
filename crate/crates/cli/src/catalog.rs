//! Bundled instances with the verdicts their checks must reproduce.

use kupershmidt::algebra::{regular_representation, LeibnizAlgebra, TwilledContext};
use kupershmidt::forms::{BilinearForm, Symmetry, Tensor2};
use kupershmidt::linear::{FieldSpec, Matrix};
use kupershmidt::operators::{lifted_algebra, LinearOperator};
use kupershmidt::pairs::{block_diagonal, KnMode, KnStructure};

use crate::checks::{DUAL_REGULAR, REGULAR};
use crate::spec_file::{CheckRequest, Expectation, Object, SpecFile};

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn() -> SpecFile,
}

impl CatalogEntry {
    pub fn spec(&self) -> SpecFile {
        (self.build)()
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry {
            name: "l2-rbn",
            summary: "Rota-Baxter and Nijenhuis families on L2 and their RBN pairings",
            build: example_rbn,
        },
        CatalogEntry {
            name: "l2-single-bracket",
            summary: "the one-bracket reading of L2, on which R is not Rota-Baxter",
            build: example_rbn_single,
        },
        CatalogEntry {
            name: "trivial",
            summary: "zero and identity operators on the abelian plane",
            build: trivial,
        },
        CatalogEntry {
            name: "algebras",
            summary: "Leibniz algebras of dimension 1 to 4 and one non-example",
            build: algebras,
        },
        CatalogEntry {
            name: "l2-rationals",
            summary: "L2 over Q: representations, an r-matrix and a Nijenhuis operator",
            build: l2_rationals,
        },
        CatalogEntry {
            name: "l2-f3",
            summary: "KN-structures, Maurer-Cartan elements and pairs on L2 over F3",
            build: l2_f3,
        },
        CatalogEntry {
            name: "nil2-f3",
            summary: "the nilpotent plane over F3: KN, r-n, BN and quadratic structures",
            build: nil2_f3,
        },
        CatalogEntry {
            name: "nil2-rationals",
            summary: "the nilpotent plane over Q, where the skew form is not invariant",
            build: nil2_rationals,
        },
        CatalogEntry {
            name: "nil2-squared-f3",
            summary: "a quadratic 4-dimensional algebra over F3 and the RBN / r-n transfer",
            build: nil2_squared_f3,
        },
    ]
}

pub fn entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

const Q: FieldSpec = FieldSpec::Rationals;
const F3: FieldSpec = FieldSpec::Prime(3);

pub fn l2(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
}

pub fn l2_single(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 2, &[(1, 0, 0, 1)])
}

pub fn nil2(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 2, &[(0, 0, 1, 1)])
}

/// `[e0,e1] = e1`, `[e1,e0] = -e1`.
pub fn affine(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

/// `[e0,e1] = e1` only.
pub fn left_plane(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 2, &[(0, 1, 1, 1)])
}

pub fn heisenberg(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// `[e0,e0] = e1`, `[e0,e1] = e2`.
pub fn cyclic3(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 3, &[(0, 0, 1, 1), (0, 1, 2, 1)])
}

/// Basis `h, e, f`.
pub fn sl2(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(
        f,
        3,
        &[
            (0, 1, 1, 2),
            (1, 0, 1, -2),
            (0, 2, 2, -2),
            (2, 0, 2, 2),
            (1, 2, 0, 1),
            (2, 1, 0, -1),
        ],
    )
}

/// The dimension-2 algebras swept exhaustively by the consequence suite.
pub fn planes(f: FieldSpec) -> Vec<(&'static str, LeibnizAlgebra)> {
    vec![
        ("l2", l2(f)),
        ("nil2", nil2(f)),
        ("affine", affine(f)),
        ("left-plane", left_plane(f)),
    ]
}

/// The Leibniz algebras of the `algebras` entry, by name.
pub fn catalog_algebras(f: FieldSpec) -> Vec<(&'static str, LeibnizAlgebra)> {
    let l2_semidirect = lifted_algebra(
        &LinearOperator::module_to_algebra(Matrix::zeros(f, 2, 2)),
        &regular_representation(&l2(f)).expect("l2 is Leibniz"),
    )
    .expect("semidirect sum");
    vec![
        ("a1", LeibnizAlgebra::abelian(f, 1)),
        ("l2", l2(f)),
        ("l2-single", l2_single(f)),
        ("nil2", nil2(f)),
        ("affine", affine(f)),
        ("left-plane", left_plane(f)),
        ("heisenberg", heisenberg(f)),
        ("cyclic3", cyclic3(f)),
        ("sl2", sl2(f)),
        ("l2+a1", l2(f).direct_sum(&LeibnizAlgebra::abelian(f, 1))),
        ("l2+l2", l2(f).direct_sum(&l2(f))),
        ("nil2+nil2", nil2(f).direct_sum(&nil2(f))),
        ("l2-semidirect-regular", l2_semidirect),
    ]
}

struct Builder {
    spec: SpecFile,
}

impl Builder {
    fn new(field: FieldSpec) -> Self {
        Builder {
            spec: SpecFile::new(field),
        }
    }

    fn object(mut self, name: &str, object: Object) -> Self {
        self.spec.insert(name, object, false);
        self
    }

    fn algebra(self, name: &str, alg: LeibnizAlgebra) -> Self {
        self.object(name, Object::Algebra(alg))
    }

    fn op(self, name: &str, rows: &[&[i64]]) -> Self {
        let f = self.spec.field;
        self.object(name, Object::Operator(Matrix::from_ints(f, rows)))
    }

    fn kn(self, name: &str, k: &[&[i64]], n: &[&[i64]], s: &[&[i64]], mode: KnMode) -> Self {
        let f = self.spec.field;
        let kn = KnStructure::new(
            Matrix::from_ints(f, k),
            Matrix::from_ints(f, n),
            Matrix::from_ints(f, s),
            mode,
        );
        self.object(name, Object::Kn(kn))
    }

    fn expect(mut self, check: &str, object: &str, args: &[(&str, &str)], verdict: bool) -> Self {
        let mut request = CheckRequest::new(check, object);
        for &(key, value) in args {
            match key {
                "algebra" => request.algebra = Some(value.to_string()),
                "rep" => request.rep = Some(value.to_string()),
                "twilled" => request.twilled = Some(value.to_string()),
                "with" => request.with.push(value.to_string()),
                _ => unreachable!("unknown expectation argument {key}"),
            }
        }
        let has_g = self.spec.objects.contains_key("g");
        if has_g && request.algebra.is_none() && request.twilled.is_none() {
            request.algebra = Some("g".to_string());
        }
        self.spec.expected.push(Expectation { request, verdict });
        self
    }

    fn done(self) -> SpecFile {
        self.spec
    }
}

fn rbn_name(a: &str) -> String {
    format!("R[a={a}]")
}

fn nij_name(b11: i64, b22: i64) -> String {
    format!("N[{b11},{b22}]")
}

/// `R = [[0, a], [0, -a]]` with `a` in {1, 2, -3/2}.
fn rbn_family(field: FieldSpec) -> Vec<(String, Matrix)> {
    [(1, 1), (2, 1), (-3, 2)]
        .into_iter()
        .map(|(p, q)| {
            let a = field.ratio(p, q).expect("nonzero denominator");
            let label = if q == 1 {
                p.to_string()
            } else {
                format!("{p}/{q}")
            };
            let m = Matrix::from_rows(
                field,
                &[vec![field.zero(), a.clone()], vec![field.zero(), a.neg()]],
            )
            .expect("square");
            (rbn_name(&label), m)
        })
        .collect()
}

/// `N = [[b11, b11 - b22], [0, b22]]`.
fn nij_family(field: FieldSpec) -> Vec<(String, Matrix)> {
    [(2, 3), (1, 1), (0, 5)]
        .into_iter()
        .map(|(b11, b22)| {
            (
                nij_name(b11, b22),
                Matrix::from_ints(field, &[&[b11, b11 - b22], &[0, b22]]),
            )
        })
        .collect()
}

fn example_rbn() -> SpecFile {
    let mut b = Builder::new(Q).algebra("g", l2(Q));
    let rs = rbn_family(Q);
    let ns = nij_family(Q);
    b = b.expect("leibniz", "g", &[], true);
    for (name, m) in &rs {
        b = b
            .object(name, Object::Operator(m.clone()))
            .expect("rota-baxter", name, &[], true);
        b = b.expect("kupershmidt", name, &[("rep", REGULAR)], true);
    }
    for (name, m) in &ns {
        b = b
            .object(name, Object::Operator(m.clone()))
            .expect("nijenhuis", name, &[], true);
    }
    for (r, _) in &rs {
        for (n, _) in &ns {
            b = b.expect("rbn", r, &[("with", n)], true);
        }
    }
    b.done()
}

fn example_rbn_single() -> SpecFile {
    let mut b = Builder::new(Q)
        .algebra("g", l2_single(Q))
        .expect("leibniz", "g", &[], true);
    for (name, m) in rbn_family(Q) {
        b = b
            .object(&name, Object::Operator(m))
            .expect("rota-baxter", &name, &[], false);
    }
    let (n, m) = nij_family(Q).remove(0);
    b = b
        .object(&n, Object::Operator(m))
        .expect("nijenhuis", &n, &[], false);
    b.expect("rbn", &rbn_name("1"), &[("with", &n)], false)
        .done()
}

fn trivial() -> SpecFile {
    Builder::new(Q)
        .algebra("g", LeibnizAlgebra::abelian(Q, 2))
        .op("Z", &[&[0, 0], &[0, 0]])
        .kn(
            "zero-kn",
            &[&[0, 0], &[0, 0]],
            &[&[0, 0], &[0, 0]],
            &[&[0, 0], &[0, 0]],
            KnMode::Kn,
        )
        .kn(
            "zero-dual-kn",
            &[&[0, 0], &[0, 0]],
            &[&[0, 0], &[0, 0]],
            &[&[0, 0], &[0, 0]],
            KnMode::DualKn,
        )
        .expect("leibniz", "g", &[], true)
        .expect("rota-baxter", "Z", &[], true)
        .expect("nijenhuis", "Z", &[], true)
        .expect("nijenhuis", "identity", &[], true)
        .expect("kupershmidt", "Z", &[("rep", REGULAR)], true)
        .expect("kupershmidt", "Z", &[("rep", DUAL_REGULAR)], true)
        .expect("rbn", "Z", &[("with", "Z")], true)
        .expect("nijenhuis-pair", "Z", &[("with", "Z")], true)
        .expect("dual-nijenhuis-pair", "Z", &[("with", "Z")], true)
        .expect("trivial-deformation", "Z", &[("with", "Z")], true)
        .expect("hat-tilde", "Z", &[("with", "Z")], true)
        .expect("kn", "zero-kn", &[], true)
        .expect("kn", "zero-dual-kn", &[], true)
        .done()
}

fn algebras() -> SpecFile {
    let mut b = Builder::new(Q);
    for (name, alg) in catalog_algebras(Q) {
        b = b.algebra(name, alg).expect("leibniz", name, &[], true);
    }
    let broken = LeibnizAlgebra::from_entries(Q, 1, &[(0, 0, 0, 1)]);
    b.algebra("broken", broken)
        .expect("leibniz", "broken", &[], false)
        .done()
}

fn l2_rationals() -> SpecFile {
    let alg = l2(Q);
    let reg = regular_representation(&alg).expect("l2 is Leibniz");
    let dual = kupershmidt::algebra::dual_representation(&reg).expect("dual");
    Builder::new(Q)
        .algebra("g", alg)
        .object(
            "reg",
            Object::Representation {
                algebra: "g".into(),
                rep: reg,
            },
        )
        .object(
            "dual",
            Object::Representation {
                algebra: "g".into(),
                rep: dual,
            },
        )
        .op("R", &[&[0, 1], &[0, -1]])
        .op("N", &[&[2, -1], &[0, 3]])
        .op("D", &[&[1, 0], &[0, 2]])
        .object("pi", Object::Tensor2(Tensor2::elementary(Q, 2, 0, 0)))
        .expect("representation", "reg", &[], true)
        .expect("representation", "dual", &[], true)
        .expect("kupershmidt", "R", &[("rep", "reg")], true)
        .expect("nijenhuis", "N", &[], true)
        .expect("nijenhuis", "D", &[], false)
        .expect("nk-condition", "N", &[("rep", "reg"), ("with", "R")], true)
        .expect("ybe", "pi", &[], true)
        .expect("rn", "pi", &[("with", "N")], false)
        .expect(
            "nijenhuis-pair",
            "N",
            &[("rep", "reg"), ("with", "zero")],
            true,
        )
        .expect(
            "trivial-deformation",
            "N",
            &[("rep", "reg"), ("with", "zero")],
            true,
        )
        .expect("hat-tilde", "N", &[("rep", "reg"), ("with", "zero")], true)
        .done()
}

fn lifted_twilled(spec: &mut SpecFile, k: &Matrix, rep_keyword: &str) {
    let alg = match spec.get("g") {
        Ok(Object::Algebra(a)) => a.clone(),
        _ => unreachable!("catalog entries name their algebra g"),
    };
    let reg = regular_representation(&alg).expect("Leibniz");
    let rep = if rep_keyword == DUAL_REGULAR {
        kupershmidt::algebra::dual_representation(&reg).expect("dual")
    } else {
        reg
    };
    let total =
        lifted_algebra(&LinearOperator::module_to_algebra(k.clone()), &rep).expect("lifted");
    let ctx = TwilledContext::new(total.clone(), alg.dim()).expect("twilled");
    spec.insert("lifted", Object::Algebra(total), false);
    spec.insert(
        "ctx",
        Object::Twilled {
            algebra: "lifted".into(),
            ctx,
        },
        false,
    );
}

fn l2_f3() -> SpecFile {
    let dual = &[("rep", DUAL_REGULAR)];
    let mut spec = Builder::new(F3)
        .algebra("g", l2(F3))
        .op("K", &[&[0, 1], &[1, 0]])
        .op("K2", &[&[1, 0], &[0, 0]])
        .op("N", &[&[0, 1], &[0, 0]])
        .op("S", &[&[0, 0], &[1, 0]])
        .op("S-bad", &[&[0, 0], &[0, 1]])
        .op("S-reg", &[&[0, 1], &[0, 0]])
        .op("N-bad", &[&[1, 1], &[0, 0]])
        .op("K-reg", &[&[0, 1], &[0, 2]])
        .op("N-reg", &[&[1, 1], &[0, 1]])
        .op("Theta", &[&[0, 0], &[0, 1]])
        .op("Theta-bad", &[&[1, 0], &[0, 0]])
        .kn(
            "kn",
            &[&[0, 1], &[1, 0]],
            &[&[0, 1], &[0, 0]],
            &[&[0, 0], &[1, 0]],
            KnMode::Kn,
        )
        .kn(
            "dkn",
            &[&[0, 1], &[1, 0]],
            &[&[0, 1], &[0, 0]],
            &[&[0, 0], &[1, 0]],
            KnMode::DualKn,
        )
        .expect("kupershmidt", "K", dual, true)
        .expect("kn", "kn", dual, true)
        .expect("kn", "dkn", dual, true)
        .expect("mc-from-dual-kn", "dkn", dual, true)
        .expect("tilde-varrho", "dkn", dual, true)
        .expect("strong-maurer-cartan", "Theta", &[("twilled", "ctx")], true)
        .expect("maurer-cartan", "Theta", &[("twilled", "ctx")], true)
        .expect(
            "strong-maurer-cartan",
            "Theta-bad",
            &[("twilled", "ctx")],
            false,
        )
        .expect(
            "theta-twist",
            "Theta",
            &[("rep", DUAL_REGULAR), ("with", "K")],
            true,
        )
        .expect(
            "dual-kn-from-mc",
            "Theta",
            &[("rep", DUAL_REGULAR), ("with", "K")],
            true,
        )
        .expect(
            "compatible",
            "K",
            &[("rep", DUAL_REGULAR), ("with", "K2")],
            true,
        )
        .expect(
            "dual-kn-from-compatible",
            "K",
            &[("rep", DUAL_REGULAR), ("with", "K2")],
            true,
        )
        .expect(
            "compatible-nijenhuis",
            "K2",
            &[("rep", DUAL_REGULAR), ("with", "K")],
            true,
        )
        .expect(
            "nk-condition",
            "N-bad",
            &[("rep", DUAL_REGULAR), ("with", "K")],
            false,
        )
        .expect(
            "nk-condition",
            "N-reg",
            &[("rep", REGULAR), ("with", "K-reg")],
            false,
        )
        .expect(
            "nijenhuis-pair",
            "N",
            &[("rep", DUAL_REGULAR), ("with", "S")],
            true,
        )
        .expect(
            "perfect-pair",
            "N",
            &[("rep", DUAL_REGULAR), ("with", "S")],
            true,
        )
        .expect(
            "nijenhuis-pair",
            "N",
            &[("rep", DUAL_REGULAR), ("with", "S-bad")],
            false,
        )
        .expect(
            "nijenhuis-pair",
            "N",
            &[("rep", REGULAR), ("with", "S-reg")],
            true,
        )
        .expect(
            "nijenhuis-pair",
            "N",
            &[("rep", REGULAR), ("with", "S-bad")],
            false,
        )
        .expect(
            "trivial-deformation",
            "N",
            &[("rep", REGULAR), ("with", "S-reg")],
            true,
        )
        .expect(
            "hat-tilde",
            "N",
            &[("rep", REGULAR), ("with", "S-reg")],
            true,
        )
        .done();
    let k = Matrix::from_ints(F3, &[&[0, 1], &[1, 0]]);
    lifted_twilled(&mut spec, &k, DUAL_REGULAR);
    spec.insert(
        "semidirect",
        Object::Algebra(
            lifted_algebra(
                &LinearOperator::module_to_algebra(Matrix::zeros(F3, 2, 2)),
                &regular_representation(&l2(F3)).expect("Leibniz"),
            )
            .expect("semidirect"),
        ),
        false,
    );
    let semi = match spec.get("semidirect") {
        Ok(Object::Algebra(a)) => a.clone(),
        _ => unreachable!(),
    };
    spec.insert(
        "semidirect-ctx",
        Object::Twilled {
            algebra: "semidirect".into(),
            ctx: TwilledContext::new(semi, 2).expect("twilled"),
        },
        false,
    );
    spec.expected.push(Expectation {
        request: CheckRequest {
            twilled: Some("semidirect-ctx".into()),
            with: vec!["S-reg".into()],
            ..CheckRequest::new("twilled-sum-nijenhuis", "N")
        },
        verdict: true,
    });
    spec.expected.push(Expectation {
        request: CheckRequest::new("twilled", "ctx"),
        verdict: true,
    });
    spec
}

fn nil2_f3() -> SpecFile {
    let q = BilinearForm::new(Matrix::from_ints(F3, &[&[0, 1], &[-1, 0]]), Symmetry::Skew)
        .expect("skew");
    let b = BilinearForm::new(
        Matrix::from_ints(F3, &[&[0, 1], &[1, 0]]),
        Symmetry::Symmetric,
    )
    .expect("symmetric");
    let mut spec = Builder::new(F3)
        .algebra("g", nil2(F3))
        .op("K", &[&[1, 0], &[0, 2]])
        .op("K2", &[&[0, 0], &[1, 0]])
        .op("N", &[&[0, 0], &[1, 0]])
        .op("S", &[&[0, 0], &[2, 0]])
        .op("S-pair", &[&[0, 0], &[1, 0]])
        .op("S-bad", &[&[0, 0], &[0, 1]])
        .op("Theta", &[&[0, 0], &[1, 0]])
        .kn(
            "kn",
            &[&[1, 0], &[0, 2]],
            &[&[0, 0], &[1, 0]],
            &[&[0, 0], &[2, 0]],
            KnMode::Kn,
        )
        .kn(
            "dkn",
            &[&[1, 0], &[0, 2]],
            &[&[0, 0], &[1, 0]],
            &[&[0, 0], &[2, 0]],
            KnMode::DualKn,
        )
        .object("pi", Object::Tensor2(Tensor2::elementary(F3, 2, 1, 1)))
        .object("q", Object::Form(q))
        .object("B", Object::Form(b))
        .expect("kn", "kn", &[], true)
        .expect("kn", "dkn", &[], true)
        .expect("mc-from-dual-kn", "dkn", &[], true)
        .expect("tilde-varrho", "dkn", &[], true)
        .expect("strong-maurer-cartan", "Theta", &[("twilled", "ctx")], true)
        .expect("theta-twist", "Theta", &[("with", "K")], true)
        .expect("dual-kn-from-mc", "Theta", &[("with", "K")], true)
        .expect("compatible", "K", &[("with", "K2")], true)
        .expect("dual-kn-from-compatible", "K", &[("with", "K2")], true)
        .expect("nijenhuis-pair", "N", &[("with", "S-pair")], true)
        .expect("perfect-pair", "N", &[("with", "S-pair")], true)
        .expect("nijenhuis-pair", "N", &[("with", "S-bad")], false)
        .expect("trivial-deformation", "N", &[("with", "S-pair")], true)
        .expect("ybe", "pi", &[], true)
        .expect("rn", "pi", &[("with", "N")], true)
        .expect("bn", "B", &[("with", "N")], true)
        .expect("quadratic", "q", &[], true)
        .done();
    let k = Matrix::from_ints(F3, &[&[1, 0], &[0, 2]]);
    lifted_twilled(&mut spec, &k, REGULAR);
    spec
}

fn nil2_rationals() -> SpecFile {
    let q = BilinearForm::new(Matrix::from_ints(Q, &[&[0, 1], &[-1, 0]]), Symmetry::Skew)
        .expect("skew");
    Builder::new(Q)
        .algebra("g", nil2(Q))
        .object("q", Object::Form(q))
        .expect("leibniz", "g", &[], true)
        .expect("quadratic", "q", &[], false)
        .done()
}

fn nil2_squared_f3() -> SpecFile {
    let alg = nil2(F3).direct_sum(&nil2(F3));
    let q2 = Matrix::from_ints(F3, &[&[0, 1], &[-1, 0]]);
    let q = BilinearForm::new(block_diagonal(F3, &q2, &q2), Symmetry::Skew).expect("skew");
    let q_sharp = q.sharp().expect("nondegenerate");
    let r_holds = Matrix::from_ints(
        F3,
        &[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]],
    );
    let r_fails = Matrix::from_ints(
        F3,
        &[&[2, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]],
    );
    // π with π♯ = R q♯; the sharp of a tensor is its transpose.
    let pi =
        |r: &Matrix| Tensor2::new(r.mul(&q_sharp).expect("square").transpose()).expect("square");
    Builder::new(F3)
        .algebra("g", alg)
        .object("q", Object::Form(q))
        .object("R-holds", Object::Operator(r_holds.clone()))
        .object("R-fails", Object::Operator(r_fails.clone()))
        .object("pi-holds", Object::Tensor2(pi(&r_holds)))
        .object("pi-fails", Object::Tensor2(pi(&r_fails)))
        .op(
            "N",
            &[&[0, 0, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 0], &[1, 0, 0, 0]],
        )
        .expect("leibniz", "g", &[], true)
        .expect("quadratic", "q", &[], true)
        .expect("nijenhuis", "N", &[], true)
        .expect("rota-baxter", "R-holds", &[], true)
        .expect("rota-baxter", "R-fails", &[], true)
        .expect(
            "rbn-rn-transfer",
            "q",
            &[("with", "R-holds"), ("with", "N")],
            true,
        )
        .expect(
            "rbn-rn-transfer",
            "q",
            &[("with", "R-fails"), ("with", "N")],
            true,
        )
        .expect("rbn", "R-holds", &[("with", "N")], true)
        .expect("rn", "pi-holds", &[("with", "N")], true)
        .expect("rbn", "R-fails", &[("with", "N")], false)
        .expect("rn", "pi-fails", &[("with", "N")], false)
        .done()
}

#[cfg(test)]
mod tests {
    use super::*;
    use kupershmidt::algebra::check_leibniz;

    #[test]
    fn catalog_algebras_are_leibniz() {
        let algs = catalog_algebras(Q);
        assert!(algs.len() >= 10);
        assert!(algs.iter().any(|(_, a)| a.dim() == 1) && algs.iter().any(|(_, a)| a.dim() == 4));
        for (name, alg) in algs {
            assert!(check_leibniz(&alg).ok, "{name}");
        }
    }

    #[test]
    fn names_are_unique() {
        let names: Vec<_> = catalog().iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len());
    }
}
