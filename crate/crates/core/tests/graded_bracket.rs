use kupershmidt::algebra::{check_leibniz, LeibnizAlgebra};
use kupershmidt::cochain::{balavoine_bracket, balavoine_bracket_capped, coboundary, Cochain};
use kupershmidt::linear::FieldSpec;
use proptest::prelude::*;

const F5: FieldSpec = FieldSpec::Prime(5);

fn cochain(dim: usize, arity: usize, seed: &[i64]) -> Cochain {
    let mut k = 0;
    Cochain::from_fn(F5, dim, arity, |_| {
        (0..dim)
            .map(|_| {
                k += 1;
                F5.int(seed[k % seed.len()] * (k as i64 % 3))
            })
            .collect()
    })
}

fn sign(odd: bool) -> kupershmidt::linear::Scalar {
    F5.int(if odd { -1 } else { 1 })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn antisymmetry(a in 1usize..=3, b in 1usize..=3, seed in prop::collection::vec(-2i64..=2, 7)) {
        let x = cochain(2, a, &seed);
        let y = cochain(2, b, &seed[1..]);
        let (m, n) = (x.degree(), y.degree());
        let xy = balavoine_bracket_capped(&x, &y, 8).unwrap();
        let yx = balavoine_bracket_capped(&y, &x, 8).unwrap();
        prop_assert!(xy.add(&yx.scale(&sign(m * n % 2 == 1))).unwrap().is_zero());
    }

    #[test]
    fn jacobi(a in 1usize..=2, b in 1usize..=2, c in 1usize..=2, seed in prop::collection::vec(-2i64..=2, 5)) {
        let br = |p: &Cochain, q: &Cochain| balavoine_bracket_capped(p, q, 8).unwrap();
        let (x, y, z) = (cochain(2, a, &seed), cochain(2, b, &seed[1..]), cochain(2, c, &seed[2..]));
        let s = sign(x.degree() * y.degree() % 2 == 1);
        let lhs = br(&x, &br(&y, &z));
        let rhs = br(&br(&x, &y), &z).add(&br(&y, &br(&x, &z)).scale(&s)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_zero_iff_leibniz(entries in prop::collection::vec(-1i64..=1, 8)) {
        let table = (0..4).map(|s| vec![F5.int(entries[2 * s]), F5.int(entries[2 * s + 1])]).collect();
        let alg = LeibnizAlgebra::new(F5, 2, table).unwrap();
        let mu = Cochain::from_algebra(&alg);
        prop_assert_eq!(check_leibniz(&alg).ok, balavoine_bracket(&mu, &mu).unwrap().is_zero());
    }
}

#[test]
fn coboundary_squares_to_zero_on_heisenberg() {
    let alg = LeibnizAlgebra::from_entries(F5, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)]);
    let mu = Cochain::from_algebra(&alg);
    for arity in 1..=2 {
        let phi = cochain(3, arity, &[1, -2, 0, 2, 1]);
        let d = coboundary(&mu, &phi).unwrap();
        assert!(coboundary(&mu, &d).unwrap().is_zero());
    }
}

#[test]
fn coboundary_needs_a_leibniz_bracket() {
    let broken = LeibnizAlgebra::from_entries(F5, 1, &[(0, 0, 0, 1)]);
    let mu = Cochain::from_algebra(&broken);
    assert!(coboundary(&mu, &cochain(1, 1, &[1])).is_err());
}
