//! The bracket on g ⊕ V assembled from a dual KN-structure.

use kupershmidt::algebra::{
    check_leibniz, dual_representation, regular_representation, LeibnizAlgebra,
};
use kupershmidt::cochain::tilde_varrho_bracket;
use kupershmidt::linear::{FieldSpec, Matrix};
use kupershmidt::pairs::{check_kn_structure, KnMode, KnStructure};
use kupershmidt::search::{enumerate_operators, Predicate, SearchContext, SearchSpec};

const F3: FieldSpec = FieldSpec::Prime(3);

fn l2() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(F3, 2, &[(1, 0, 0, 1), (1, 1, 0, 1)])
}

fn planes() -> Vec<LeibnizAlgebra> {
    vec![
        l2(),
        LeibnizAlgebra::from_entries(F3, 2, &[(0, 0, 1, 1)]),
        LeibnizAlgebra::from_entries(F3, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
        LeibnizAlgebra::from_entries(F3, 2, &[(0, 1, 1, 1)]),
    ]
}

#[test]
fn leibniz_for_every_invertible_k_on_the_planes() {
    let mut seen = 0;
    for alg in planes() {
        let reg = regular_representation(&alg).unwrap();
        for rep in [dual_representation(&reg).unwrap(), reg] {
            seen += sweep_invertible(&alg, &rep);
        }
    }
    assert!(seen > 0);
}

fn sweep_invertible(alg: &LeibnizAlgebra, rep: &kupershmidt::algebra::Representation) -> usize {
    let ks = enumerate_operators(&SearchSpec::new(
        Predicate::Kupershmidt,
        SearchContext::Rep(rep.clone()),
    ))
    .unwrap();
    let ns = enumerate_operators(&SearchSpec::new(
        Predicate::Nijenhuis,
        SearchContext::Algebra(alg.clone()),
    ))
    .unwrap();
    let mut seen = 0;
    for k in ks.iter().filter(|k| k.is_invertible()) {
        let k_inv = k.inverse().unwrap();
        for n in &ns {
            let s = k_inv.mul(n).unwrap().mul(k).unwrap();
            let kn = KnStructure::new(k.clone(), n.clone(), s, KnMode::DualKn);
            if !matches!(check_kn_structure(&kn, rep), Ok(r) if r.ok) {
                continue;
            }
            let (total, report) = tilde_varrho_bracket(&kn, rep).unwrap();
            assert!(check_leibniz(&total).ok, "K {k:?} N {n:?}");
            assert!(report.consequences_ok());
            seen += 1;
        }
    }
    seen
}

/// A dual KN-structure with singular K whose combined bracket breaks the
/// Leibniz identity; the report flags it rather than hiding it.
#[test]
fn singular_k_can_break_the_identity() {
    let rep = regular_representation(&l2()).unwrap();
    let kn = KnStructure::new(
        Matrix::from_ints(F3, &[&[0, 1], &[0, 0]]),
        Matrix::from_ints(F3, &[&[1, 1], &[0, 0]]),
        Matrix::identity(F3, 2),
        KnMode::DualKn,
    );
    assert!(check_kn_structure(&kn, &rep).unwrap().ok);
    let (total, report) = tilde_varrho_bracket(&kn, &rep).unwrap();
    let leibniz = check_leibniz(&total);
    assert!(!leibniz.ok);
    let sig = leibniz.signature();
    assert!(sig.contains(&("leibniz".to_string(), vec![1, 3, 3])));
    assert!(sig.contains(&("leibniz".to_string(), vec![3, 1, 3])));
    let c = report.failed_consequences().next().unwrap();
    assert_eq!(
        (c.name.as_str(), c.detail.as_str()),
        ("combined bracket is Leibniz", "K is singular")
    );
}
