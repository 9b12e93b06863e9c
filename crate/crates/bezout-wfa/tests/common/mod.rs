//! Shared fixtures and random generators for the integration suites.
//! Each suite uses its own subset of these helpers.
#![allow(dead_code)]

use bezout_wfa::{Alphabet, BezoutRing, LinearRepresentation, Matrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;

pub fn alpha_a() -> Alphabet {
    Alphabet::new(["a"]).unwrap()
}

pub fn int_matrix(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
    Matrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect(),
    )
}

/// The series `x * a` realized with the weight on the transition.
pub fn a1(x: i64) -> LinearRepresentation<BigInt> {
    LinearRepresentation::new(
        alpha_a(),
        int_matrix(vec![vec![1, 0]]),
        vec![int_matrix(vec![vec![0, x], vec![0, 0]])],
        int_matrix(vec![vec![0], vec![1]]),
    )
    .unwrap()
}

/// The series `x * a` realized with the weight on the entry vector.
pub fn a2(x: i64) -> LinearRepresentation<BigInt> {
    LinearRepresentation::new(
        alpha_a(),
        int_matrix(vec![vec![x, 0]]),
        vec![int_matrix(vec![vec![0, 1], vec![0, 0]])],
        int_matrix(vec![vec![0], vec![1]]),
    )
    .unwrap()
}

/// Entrywise ring change, e.g. integers into rationals.
pub fn map_rep<R: BezoutRing, S: BezoutRing>(
    rep: &LinearRepresentation<R>,
    f: impl Fn(&R) -> S + Copy,
) -> LinearRepresentation<S> {
    let mu = (0..rep.alphabet().len())
        .map(|i| rep.mu(i).map(f))
        .collect();
    LinearRepresentation::new(
        rep.alphabet().clone(),
        rep.lambda().map(f),
        mu,
        rep.gamma().map(f),
    )
    .unwrap()
}

pub fn to_rational(rep: &LinearRepresentation<BigInt>) -> LinearRepresentation<BigRational> {
    map_rep(rep, |v| BigRational::from_integer(v.clone()))
}

pub fn random_int_matrix(rng: &mut StdRng, rows: usize, cols: usize, bound: i64) -> Matrix<BigInt> {
    Matrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// A random integer automaton with `dim <= max_dim`, one or two symbols,
/// and entries in `[-bound, bound]`.
pub fn random_int_rep(rng: &mut StdRng, max_dim: usize, bound: i64) -> LinearRepresentation<BigInt> {
    let symbols: &[&str] = if rng.gen_bool(0.5) { &["a"] } else { &["a", "b"] };
    let alphabet = Alphabet::new(symbols.iter().copied()).unwrap();
    random_int_rep_over(rng, alphabet, max_dim, bound)
}

pub fn random_int_rep_over(
    rng: &mut StdRng,
    alphabet: Alphabet,
    max_dim: usize,
    bound: i64,
) -> LinearRepresentation<BigInt> {
    let dim = rng.gen_range(1..=max_dim);
    let lambda = random_int_matrix(rng, 1, dim, bound);
    let gamma = random_int_matrix(rng, dim, 1, bound);
    let mu = (0..alphabet.len())
        .map(|_| random_int_matrix(rng, dim, dim, bound))
        .collect();
    LinearRepresentation::new(alphabet, lambda, mu, gamma).unwrap()
}
