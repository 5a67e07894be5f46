use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use toriparam::lattice::{
    determinant, hermite_normal_form, rank, saturated_kernel_basis, smith_normal_form, solve_integer_linear,
};
use toriparam::{IntMat, IntVec};

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = IntMat> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-6i64..=6, c), r)
            .prop_map(|rows| IntMat::from_rows_i64(&rows))
    })
}

fn is_unimodular(u: &IntMat) -> bool {
    determinant(u).abs().is_one()
}

proptest! {
    #[test]
    fn hermite_form_is_a_unimodular_column_transform(m in matrix(4, 5)) {
        let hnf = hermite_normal_form(&m);
        prop_assert_eq!(m.mul(&hnf.u), hnf.h.clone());
        prop_assert!(is_unimodular(&hnf.u));
        for (k, &row) in hnf.pivots.iter().enumerate() {
            let pivot = hnf.h.get(row, k);
            prop_assert!(pivot.is_positive());
            for i in 0..row {
                prop_assert!(hnf.h.get(i, k).is_zero());
            }
            for j in 0..k {
                let x = hnf.h.get(row, j);
                prop_assert!(!x.is_negative() && x < pivot);
            }
            if k > 0 {
                prop_assert!(row > hnf.pivots[k - 1]);
            }
        }
        for j in hnf.rank()..m.cols() {
            prop_assert!(hnf.h.column(j).is_zero());
        }
    }

    #[test]
    fn smith_form_divisibility(m in matrix(4, 4)) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        prop_assert!(is_unimodular(&snf.u) && is_unimodular(&snf.v));
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert!(snf.d.get(i, j).is_zero());
                }
            }
        }
        for w in snf.diagonal.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert_eq!(snf.rank(), rank(&m));
    }

    #[test]
    fn kernel_is_saturated(m in matrix(3, 5)) {
        let k = saturated_kernel_basis(&m);
        prop_assert_eq!(k.cols(), m.cols() - rank(&m));
        prop_assert!(m.mul(&k).is_zero());
        if k.cols() > 0 {
            // saturated: the gcd of the maximal minors is one
            let snf = smith_normal_form(&k);
            prop_assert!(snf.diagonal.iter().all(One::is_one));
        }
    }

    #[test]
    fn integer_solutions_solve(m in matrix(3, 4), x in proptest::collection::vec(-4i64..=4, 4)) {
        let x = IntVec::from_i64(&x[..m.cols()]);
        let b = m.mul_vec(&x);
        let sol = solve_integer_linear(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&sol.particular), b);
        prop_assert!(m.mul(&sol.kernel).is_zero());
    }
}

#[test]
fn parity_obstruction() {
    let m = IntMat::from_rows_i64(&[vec![2, 4]]);
    assert!(solve_integer_linear(&m, &IntVec::from_i64(&[3])).unwrap().is_none());
    assert!(solve_integer_linear(&m, &IntVec::from_i64(&[6])).unwrap().is_some());
}

#[test]
fn hermite_of_a_determinant_two_matrix() {
    let m = IntMat::from_rows_i64(&[vec![1, 1], vec![-1, 1]]);
    let hnf = hermite_normal_form(&m);
    assert_eq!(hnf.h, IntMat::from_rows_i64(&[vec![1, 0], vec![1, 2]]));
    assert_eq!(determinant(&m), BigInt::from(2));
}
