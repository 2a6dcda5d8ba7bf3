#![allow(dead_code)]

use bernoulli_euler_core::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(p, q)| ratio(p, q))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != int(0))
}

pub fn alpha_grid() -> Vec<Rational> {
    vec![int(-2), ratio(-1, 2), int(1), int(2), int(3), ratio(7, 3)]
}

pub fn x_grid() -> Vec<Rational> {
    vec![int(0), int(1), ratio(1, 2), ratio(-3, 4)]
}
