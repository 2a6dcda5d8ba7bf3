//! Cross-route checks: closed form, Hessenberg determinant and generating
//! series must give identical rationals.

mod common;

use bernoulli_euler_core::closed::is_monic_of_degree;
use bernoulli_euler_core::series::default_order;
use bernoulli_euler_core::{
    bernoulli_number_closed, bernoulli_number_qi, bernoulli_poly_closed, bernoulli_via_det,
    beta_seq, det_exact, det_minor_oracle, euler_number_closed, euler_poly_closed, euler_via_det,
    gamma_seq, oracle_bernoulli, oracle_euler, quotient_derivative, JetPair, Rational, SqMatrix,
    StirlingTable, TruncatedSeries,
};
use common::*;
use proptest::collection::vec;
use proptest::prelude::*;

const N_MAX: usize = 16;

fn table() -> StirlingTable {
    StirlingTable::new(2 * 25)
}

#[test]
fn three_routes_agree_on_grid() {
    let t = table();
    for alpha in alpha_grid() {
        for n in 0..=N_MAX {
            let b_poly = bernoulli_poly_closed(n, &alpha, &t).unwrap();
            let e_poly = euler_poly_closed(n, &alpha, &t).unwrap();
            for x in x_grid() {
                let closed = b_poly.eval(&x);
                assert_eq!(closed, bernoulli_via_det(n, &alpha, &x, &t).unwrap());
                assert_eq!(
                    closed,
                    oracle_bernoulli(n, &alpha, &x, default_order(n)).unwrap()
                );
                let closed = e_poly.eval(&x);
                assert_eq!(closed, euler_via_det(n, &alpha, &x, &t).unwrap());
                assert_eq!(
                    closed,
                    oracle_euler(n, &alpha, &x, default_order(n)).unwrap()
                );
            }
        }
    }
}

#[test]
fn outputs_are_monic_of_degree_n() {
    let t = table();
    for alpha in alpha_grid() {
        for n in 0..=20 {
            assert!(is_monic_of_degree(
                &bernoulli_poly_closed(n, &alpha, &t).unwrap(),
                n
            ));
            assert!(is_monic_of_degree(
                &euler_poly_closed(n, &alpha, &t).unwrap(),
                n
            ));
        }
    }
}

#[test]
fn alpha_one_reduces_to_classical() {
    let t = table();
    for n in 0..=20 {
        let b = bernoulli_poly_closed(n, &int(1), &t).unwrap();
        let e = euler_poly_closed(n, &int(1), &t).unwrap();
        for x in x_grid() {
            assert_eq!(
                b.eval(&x),
                oracle_bernoulli(n, &int(1), &x, default_order(n)).unwrap()
            );
            assert_eq!(
                e.eval(&x),
                oracle_euler(n, &int(1), &x, default_order(n)).unwrap()
            );
        }
    }
}

#[test]
fn number_formulas_agree() {
    let t = table();
    for n in 0..=25 {
        assert_eq!(
            bernoulli_number_closed(n, &int(1), &t).unwrap(),
            bernoulli_number_qi(n, &t).unwrap(),
            "n={n}"
        );
    }
    let half = ratio(1, 2);
    for alpha in alpha_grid() {
        for n in 0..=20 {
            let p = euler_poly_closed(n, &alpha, &t).unwrap();
            let scaled = p.eval(&half) * bernoulli_euler_core::arith::pow(&int(2), n);
            assert_eq!(euler_number_closed(n, &alpha, &t).unwrap(), scaled);
            let b = bernoulli_poly_closed(n, &alpha, &t).unwrap();
            assert_eq!(
                bernoulli_number_closed(n, &alpha, &t).unwrap(),
                b.eval(&int(0))
            );
        }
    }
}

#[test]
fn gamma_beta_match_series_derivatives() {
    let t = table();
    let order = N_MAX + 1;
    for alpha in alpha_grid() {
        let g = gamma_seq(N_MAX, &alpha, &t).unwrap();
        let b = beta_seq(N_MAX, &alpha, &t).unwrap();
        let gs = TruncatedSeries::exp_minus_one_over_t(order)
            .pow(&alpha)
            .unwrap();
        let bs = TruncatedSeries::exp_plus_one_over_two(order)
            .pow(&alpha)
            .unwrap();
        assert_eq!(g[0], int(1));
        assert_eq!(b[0], int(1));
        for n in 0..=N_MAX {
            assert_eq!(g[n], gs.egf_coeff(n), "gamma_{n}");
            assert_eq!(b[n], bs.egf_coeff(n), "beta_{n}");
        }
    }
}

#[test]
fn hessenberg_matrices_match_cofactor_oracle() {
    let t = table();
    for alpha in alpha_grid() {
        let g = gamma_seq(6, &alpha, &t).unwrap();
        let b = beta_seq(6, &alpha, &t).unwrap();
        for x in x_grid() {
            let powers: Vec<Rational> = (0..7)
                .map(|i| bernoulli_euler_core::arith::pow(&x, i))
                .collect();
            for seq in [&g, &b] {
                let jets = JetPair::new(powers.clone(), seq.clone()).unwrap();
                for k in 0..=6 {
                    let w = jets.quotient_matrix(k).unwrap();
                    assert_eq!(det_exact(&w), det_minor_oracle(&w).unwrap());
                }
            }
        }
    }
}

fn matrix(dim: usize) -> impl Strategy<Value = SqMatrix> {
    vec(vec(rational(), dim), dim).prop_map(|rows| SqMatrix::from_rows(rows).unwrap())
}

fn sparse_matrix(dim: usize) -> impl Strategy<Value = SqMatrix> {
    vec(
        vec(prop_oneof![3 => Just(int(0)), 2 => rational()], dim),
        dim,
    )
    .prop_map(|rows| SqMatrix::from_rows(rows).unwrap())
}

fn jet_pair(len: usize) -> impl Strategy<Value = JetPair> {
    (
        vec(rational(), len),
        nonzero_rational(),
        vec(rational(), len - 1),
    )
        .prop_map(|(p, q0, q_tail)| {
            let mut q = vec![q0];
            q.extend(q_tail);
            JetPair::new(p, q).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bareiss_matches_cofactor_5x5(m in matrix(5)) {
        prop_assert_eq!(det_exact(&m), det_minor_oracle(&m).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_with_zero_pivots(m in sparse_matrix(5)) {
        prop_assert_eq!(det_exact(&m), det_minor_oracle(&m).unwrap());
    }

    #[test]
    fn quotient_derivative_matches_series_division(jets in jet_pair(9), k in 0usize..=8) {
        let order = 9;
        let p = TruncatedSeries::from_egf(jets.p(), order);
        let q = TruncatedSeries::from_egf(jets.q(), order);
        let expected = p.mul(&q.inv().unwrap()).unwrap().egf_coeff(k);
        prop_assert_eq!(quotient_derivative(&jets, k).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn bareiss_matches_cofactor_6x6(m in matrix(6)) {
        prop_assert_eq!(det_exact(&m), det_minor_oracle(&m).unwrap());
    }
}
