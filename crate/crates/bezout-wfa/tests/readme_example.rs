//! The library snippet shown in the README, kept compiling.

use bezout_wfa::{
    minimize, ring_isomorphic, Alphabet, LinearRepresentation, Matrix, StepBudget,
};
use num_bigint::BigInt;

#[test]
fn readme_snippet() {
    let alphabet = Alphabet::new(["a"]).unwrap();
    let int = |n: i64| BigInt::from(n);
    let rep = LinearRepresentation::new(
        alphabet,
        Matrix::from_rows(vec![vec![int(1), int(0)]]),
        vec![Matrix::from_rows(vec![
            vec![int(0), int(2)],
            vec![int(0), int(0)],
        ])],
        Matrix::from_rows(vec![vec![int(0)], vec![int(1)]]),
    )
    .unwrap();
    let minimal = minimize(&rep, StepBudget::default()).unwrap();
    assert_eq!(minimal.dim(), 2);
    assert!(ring_isomorphic(&minimal, &minimal).unwrap());
}
