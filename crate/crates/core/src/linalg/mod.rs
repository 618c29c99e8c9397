//! Dense exact linear algebra.

mod matrix;
mod snf;

pub use matrix::{symmetric_power, Matrix};
pub use snf::{
    is_divisibility_chain, smith_normal_form, smith_normal_form_rational, verify_transforms,
    SnfResult,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, RatMatrix};
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &IntMatrix) -> BigInt {
        let n = m.rows();
        if n == 0 {
            return BigInt::from(1);
        }
        (0..n)
            .map(|j| {
                let rows: Vec<usize> = (1..n).collect();
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = cofactor_det(&m.permuted(&rows, &cols));
                let sign = if j % 2 == 0 { 1 } else { -1 };
                &m[(0, j)] * minor * sign
            })
            .sum()
    }

    #[test]
    fn determinant_examples() {
        let t3 = int(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(cofactor_det(&t3), BigInt::from(4));
        assert_eq!(t3.det_integer().unwrap(), BigInt::from(4));
        assert_eq!(t3.to_rational().det().unwrap(), rat(4, 1));
        assert_eq!(
            int(&[&[0, 1], &[1, 0]]).det_integer().unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            int(&[&[1, 2], &[2, 4]]).det_integer().unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            IntMatrix::zeros(0, 0).det_integer().unwrap(),
            BigInt::from(1)
        );
        assert!(int(&[&[1, 2]]).det_integer().is_err());
    }

    #[test]
    fn inverse_examples() {
        let m = int(&[&[1, 0], &[1, 2]]).to_rational();
        let inv = m.inverse().unwrap();
        let expected = RatMatrix::from_rows(vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(-1, 2), rat(1, 2)],
        ])
        .unwrap();
        assert_eq!(inv, expected);
        assert!(!inv.is_integral());
        assert!(inv.to_integral().is_err());
        assert_eq!(
            int(&[&[1, 2], &[2, 4]]).to_rational().inverse(),
            Err(crate::Error::Singular)
        );
    }

    #[test]
    fn kron_and_direct_sum() {
        let m = int(&[&[1, 2], &[3, 4]]);
        let i2 = IntMatrix::identity(2);
        assert_eq!(i2.kron(&m), Matrix::direct_sum(&[m.clone(), m.clone()]));
        let k = m.kron(&int(&[&[0, 1], &[1, 0]]));
        assert_eq!(k[(0, 1)], BigInt::from(1));
        assert_eq!(k[(2, 1)], BigInt::from(3));
        assert_eq!(k[(1, 2)], BigInt::from(2));
        assert!(m.mul(&int(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn symmetric_power_examples() {
        let y = int(&[&[2, -1], &[-1, 2]]);
        assert_eq!(symmetric_power(&y, 1).unwrap(), y);
        assert_eq!(symmetric_power(&y, 0).unwrap(), IntMatrix::identity(1));
        let s2 = symmetric_power(&y, 2).unwrap();
        // index order (1,1), (1,2), (2,2)
        assert_eq!(s2[(0, 2)], BigInt::from(1));
        assert_eq!(s2[(0, 1)], BigInt::from(-4));
        assert_eq!(s2[(1, 1)], BigInt::from(5));
        let t3 = int(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(symmetric_power(&t3, 3).unwrap().rows(), 10);
        let d = int(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]);
        let s = symmetric_power(&d, 2).unwrap();
        assert!(s.is_diagonal());
        assert_eq!(
            s.diagonal_entries(),
            [4, 6, 10, 9, 15, 25].map(BigInt::from).to_vec()
        );
    }

    proptest! {
        #[test]
        fn symmetric_power_is_multiplicative(
            a in proptest::collection::vec(-4i64..=4, 9),
            b in proptest::collection::vec(-4i64..=4, 9),
            m in 0usize..=3,
        ) {
            let y = Matrix::from_fn(3, 3, |i, j| BigInt::from(a[i * 3 + j]));
            let z = Matrix::from_fn(3, 3, |i, j| BigInt::from(b[i * 3 + j]));
            let lhs = symmetric_power(&y.mul(&z).unwrap(), m).unwrap();
            let rhs = symmetric_power(&y, m).unwrap().mul(&symmetric_power(&z, m).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_round_trip(seed in proptest::collection::vec(-9i64..=9, 16)) {
            let m = Matrix::from_fn(4, 4, |i, j| BigInt::from(seed[i * 4 + j])).to_rational();
            if let Ok(inv) = m.inverse() {
                prop_assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(4));
                prop_assert_eq!(m.det().unwrap() * inv.det().unwrap(), rat(1, 1));
            } else {
                prop_assert_eq!(m.det().unwrap(), rat(0, 1));
            }
        }

        #[test]
        fn bareiss_matches_field_elimination(seed in proptest::collection::vec(-20i64..=20, 25)) {
            let m = Matrix::from_fn(5, 5, |i, j| BigInt::from(seed[i * 5 + j]));
            prop_assert_eq!(BigRational::from_integer(m.det_integer().unwrap()), m.to_rational().det().unwrap());
        }
    }
}
