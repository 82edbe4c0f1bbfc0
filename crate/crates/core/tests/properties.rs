use proptest::prelude::*;

use wheel_pinv::charpoly::{charpoly, is_psd_symmetric};
use wheel_pinv::circulant::Circulant;
use wheel_pinv::elimination::{inverse, rank, rref};
use wheel_pinv::io::{parse_csv, parse_json, write_csv, write_json};
use wheel_pinv::pinv::{mp_pinv_oracle, penrose_check};
use wheel_pinv::rational::{int, one, rat, zero, Rational};
use wheel_pinv::RatMatrix;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(small_rational(), r * c)
            .prop_map(move |data| RatMatrix::from_vec(r, c, data).unwrap())
    })
}

/// Mostly-zero integer matrices, so rank deficiency is common.
fn sparse_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], r * c).prop_map(
            move |data| RatMatrix::from_vec(r, c, data.into_iter().map(int).collect()).unwrap(),
        )
    })
}

fn symmetric(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
        RatMatrix::from_fn(n, n, |i, j| {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            int(v[a * n + b])
        })
    })
}

fn det(m: &RatMatrix) -> Rational {
    // Cofactor expansion; only used on matrices up to 3x3.
    let n = m.rows();
    if n == 0 {
        return one();
    }
    (0..n).fold(zero(), |acc, j| {
        let minor = RatMatrix::from_fn(n - 1, n - 1, |r, c| {
            m[(r + 1, if c < j { c } else { c + 1 })].clone()
        });
        let term = &m[(0, j)] * det(&minor);
        if j % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    })
}

/// PSD by the principal-minor criterion.
fn psd_by_minors(m: &RatMatrix) -> bool {
    let n = m.rows();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = RatMatrix::from_fn(idx.len(), idx.len(), |r, c| m[(idx[r], idx[c])].clone());
        det(&sub) >= zero()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_satisfies_penrose(a in sparse_matrix(5, 5)) {
        let k = mp_pinv_oracle(&a);
        prop_assert_eq!(k.shape(), (a.cols(), a.rows()));
        prop_assert!(penrose_check(&a, &k).unwrap().all());
    }

    #[test]
    fn oracle_on_dense_rationals(a in matrix(4, 4)) {
        prop_assert!(penrose_check(&a, &mp_pinv_oracle(&a)).unwrap().all());
    }

    #[test]
    fn rank_is_transpose_invariant(a in sparse_matrix(6, 6)) {
        let r = rank(&a);
        prop_assert_eq!(r, rank(&a.transpose()));
        prop_assert_eq!(r, rref(&a).1.len());
    }

    #[test]
    fn rref_pivots_are_unit_columns(a in sparse_matrix(5, 6)) {
        let (e, pivots) = rref(&a);
        for (row, &c) in pivots.iter().enumerate() {
            for i in 0..e.rows() {
                let expected = if i == row { one() } else { zero() };
                prop_assert_eq!(&e[(i, c)], &expected);
            }
        }
        for i in pivots.len()..e.rows() {
            prop_assert!(e.row(i).iter().all(|x| *x == zero()));
        }
    }

    #[test]
    fn inverse_round_trips(a in matrix(4, 4)) {
        prop_assume!(a.is_square() && rank(&a) == a.rows());
        let inv = inverse(&a).unwrap();
        prop_assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(a.rows()));
    }

    #[test]
    fn charpoly_of_diagonal(d in prop::collection::vec(small_rational(), 1..6)) {
        let coeffs = charpoly(&RatMatrix::diag(&d)).unwrap();
        // Expand Π(λ − dᵢ) directly, highest degree first.
        let mut poly = vec![one()];
        for x in &d {
            let mut next = poly.clone();
            next.push(zero());
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] -= c * x;
            }
            poly = next;
        }
        prop_assert_eq!(coeffs, poly);
    }

    #[test]
    fn charpoly_trace_and_determinant(a in matrix(3, 3)) {
        prop_assume!(a.is_square());
        let c = charpoly(&a).unwrap();
        let n = a.rows();
        prop_assert_eq!(&c[1], &-a.trace());
        let sign = if n % 2 == 0 { one() } else { -one() };
        prop_assert_eq!(&c[n], &(sign * det(&a)));
    }

    #[test]
    fn psd_matches_principal_minors(s in (1usize..=3).prop_flat_map(symmetric)) {
        prop_assert_eq!(is_psd_symmetric(&s).unwrap(), psd_by_minors(&s));
    }

    #[test]
    fn gram_matrices_are_psd(b in matrix(3, 4)) {
        let g = b.transpose().mul(&b).unwrap();
        prop_assert!(is_psd_symmetric(&g).unwrap());
    }

    #[test]
    fn circulants_close_and_commute(
        (a, b) in (2usize..8).prop_flat_map(|l| (
            prop::collection::vec(small_rational(), l),
            prop::collection::vec(small_rational(), l),
        ))
    ) {
        let ca = Circulant::new(a).unwrap();
        let cb = Circulant::new(b).unwrap();
        let ab = ca.mul(&cb).unwrap();
        prop_assert_eq!(ab.to_dense(), ca.to_dense().mul(&cb.to_dense()).unwrap());
        prop_assert_eq!(ab, cb.mul(&ca).unwrap());
    }

    #[test]
    fn csv_round_trip(m in matrix(5, 5)) {
        prop_assert_eq!(parse_csv(&write_csv(&m)).unwrap(), m);
    }

    #[test]
    fn json_round_trip(n in 1usize..5, cells in prop::collection::vec(small_rational(), 25)) {
        let m = RatMatrix::from_fn(n, n, |i, j| cells[i * 5 + j].clone());
        prop_assert_eq!(parse_json(&write_json(&m)).unwrap(), m);
    }
}
