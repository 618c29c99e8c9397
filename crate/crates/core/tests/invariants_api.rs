use cartan_core::arith::factorize;
use cartan_core::genfunc::multiplicity_m;
use cartan_core::invariants::{
    graded_to_snf, kor_invariants, lie_cartan, matrix_x_a, matrix_x_ell, SizeLimits,
};
use cartan_core::linalg::{is_divisibility_chain, smith_normal_form};
use cartan_core::Error;
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn big(xs: &[u64]) -> Vec<BigUint> {
    xs.iter().map(|&x| BigUint::from(x)).collect()
}

#[test]
fn graded_to_snf_examples() {
    assert_eq!(graded_to_snf(&big(&[2, 3])), big(&[1, 6]));
    assert_eq!(graded_to_snf(&big(&[3, 6, 72])), big(&[3, 6, 72]));
    assert_eq!(
        graded_to_snf(&big(&[32, 2, 8, 1, 2])),
        big(&[1, 2, 2, 8, 32])
    );
}

proptest! {
    #[test]
    fn graded_to_snf_is_a_chain_with_the_same_local_data(xs in proptest::collection::vec(1u64..=5000, 0..12)) {
        let out = graded_to_snf(&big(&xs));
        let signed: Vec<BigInt> = out.iter().map(|x| BigInt::from(x.clone())).collect();
        prop_assert!(is_divisibility_chain(&signed));
        prop_assert_eq!(out.iter().product::<BigUint>(), big(&xs).iter().product::<BigUint>());
        let local = |ys: &[BigUint], p: u64| {
            let pb = BigUint::from(p);
            let mut v: Vec<u32> = ys
                .iter()
                .map(|y| {
                    let (mut y, mut e) = (y.clone(), 0);
                    while &y % &pb == BigUint::from(0u32) {
                        y /= &pb;
                        e += 1;
                    }
                    e
                })
                .collect();
            v.sort_unstable();
            v
        };
        for &x in &xs {
            for (p, _) in factorize(x) {
                prop_assert_eq!(local(&big(&xs), p), local(&out, p));
            }
        }
    }
}

#[test]
fn lie_cartan_snf() {
    let snf = smith_normal_form(&lie_cartan(4).unwrap(), false).into_factors();
    assert_eq!(snf, [1, 1, 4].map(BigInt::from).to_vec());
}

#[test]
fn x_a_at_two_is_x_ell() {
    for d in 0..=4 {
        assert_eq!(
            matrix_x_a(2, d, &SizeLimits::default()).unwrap(),
            matrix_x_ell(2, d, &SizeLimits::default()).unwrap()
        );
    }
}

#[test]
fn size_guards() {
    let err = matrix_x_ell(3, 30, &SizeLimits::default()).unwrap_err();
    assert!(matches!(
        err,
        Error::SizeLimit {
            size: 5604,
            limit: 1000,
            ..
        }
    ));
    let err = matrix_x_a(7, 8, &SizeLimits::default()).map(|m| m.rows());
    assert!(
        matches!(err, Err(Error::SizeLimit { limit: 3000, .. })),
        "{err:?}"
    );
}

#[test]
fn full_matrix_multiplicities_at_four_and_eight() {
    // degree 1 counts 3 copies in C_4(8): two from the weight-2 block and
    // one from each weight-1 block
    let m: Vec<BigInt> = (0..=2).map(|d| multiplicity_m(4, 8, d).unwrap()).collect();
    assert_eq!(m, [11, 3, 1].map(BigInt::from).to_vec());
    assert_eq!(kor_invariants(4, 8).unwrap().total(), 16);
}
