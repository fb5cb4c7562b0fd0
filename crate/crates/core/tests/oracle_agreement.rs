use kupershmidt::algebra::{
    check_leibniz, dual_representation, regular_representation, LeibnizAlgebra,
};
use kupershmidt::linear::{FieldSpec, Matrix};
use kupershmidt::operators::{
    check_kupershmidt, check_nijenhuis, check_rota_baxter, LinearOperator,
};
use kupershmidt::report::CheckReport;
use kupershmidt::search::{oracle_eval, Bindings};
use proptest::prelude::*;

const F5: FieldSpec = FieldSpec::Prime(5);
const Q: FieldSpec = FieldSpec::Rationals;

fn l2(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
}

fn heisenberg(f: FieldSpec) -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(f, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

fn same(main: &CheckReport, oracle: &CheckReport) {
    assert_eq!(main.ok, oracle.ok);
    assert_eq!(main.signature(), oracle.signature());
    for (a, b) in main.violations.iter().zip(&oracle.violations) {
        assert_eq!((&a.lhs, &a.rhs), (&b.lhs, &b.rhs), "{}", a.identity);
    }
}

fn matrix(f: FieldSpec, n: usize, m: usize, entries: &[i64]) -> Matrix {
    Matrix::from_fn(f, n, m, |i, j| f.int(entries[i * m + j]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn leibniz_tables(entries in prop::collection::vec(-1i64..=1, 8)) {
        let table = (0..4).map(|s| vec![Q.int(entries[2 * s]), Q.int(entries[2 * s + 1])]).collect();
        let alg = LeibnizAlgebra::new(Q, 2, table).unwrap();
        same(&check_leibniz(&alg), &oracle_eval("leibniz", &Bindings::algebra(&alg)).unwrap());
    }

    #[test]
    fn operators_on_l2(entries in prop::collection::vec(-3i64..=3, 4)) {
        for f in [Q, F5] {
            let alg = l2(f);
            let m = matrix(f, 2, 2, &entries);
            let op = LinearOperator::on_algebra(m.clone());
            let b = Bindings::algebra(&alg).with_map(&m);
            same(&check_nijenhuis(&alg, &op).unwrap(), &oracle_eval("nijenhuis", &b).unwrap());
            same(&check_rota_baxter(&alg, &op).unwrap(), &oracle_eval("rota-baxter", &b).unwrap());
        }
    }

    #[test]
    fn kupershmidt_on_heisenberg(entries in prop::collection::vec(-1i64..=1, 9)) {
        let alg = heisenberg(Q);
        let reg = regular_representation(&alg).unwrap();
        for rep in [dual_representation(&reg).unwrap(), reg] {
            let m = matrix(Q, 3, 3, &entries);
            let main = check_kupershmidt(&LinearOperator::module_to_algebra(m.clone()), &rep).unwrap();
            same(&main, &oracle_eval("kupershmidt", &Bindings::rep(&rep).with_map(&m)).unwrap());
        }
    }
}

#[test]
fn unknown_identity_is_an_error() {
    assert!(oracle_eval("no-such-identity", &Bindings::algebra(&l2(Q))).is_err());
}

#[test]
fn missing_binding_is_an_error() {
    assert!(oracle_eval("nijenhuis", &Bindings::algebra(&l2(Q))).is_err());
}
