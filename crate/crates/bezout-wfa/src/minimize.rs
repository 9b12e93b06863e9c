//! Exact reduction and minimization of linear representations.
//!
//! The pipeline computes a prefix-closed set of words whose forward
//! vectors generate the reachability module over the coefficient ring,
//! keeps a stair basis of that module, rewrites the representation in the
//! basis (left reduction), and repeats on the reversed representation
//! (right reduction). Over the integers and the rationals the result has
//! the minimal possible dimension, the Hankel rank of the behavior.
//!
//! Termination is not guaranteed for every Bézout domain, so the word
//! loop runs under an explicit step budget.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use thiserror::Error;

use crate::automaton::{AutomatonError, LinearRepresentation, Word};
use crate::fraction::Fraction;
use crate::linalg::{
    invert_unimodular, membership, solve_over_fractions, solve_stair, triangularize,
    MembershipOutcome,
};
use crate::matrix::Matrix;
use crate::ring::BezoutRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinimizeError {
    #[error("step budget of {limit} candidate words exceeded")]
    BudgetExceeded { limit: usize },
    #[error("representations have different dimensions")]
    DimensionMismatch,
    #[error("alphabets do not match")]
    AlphabetMismatch,
}

/// Cap on the number of candidate words a prefix-set computation may
/// consume. The loop provably stops over the integers and the rationals
/// at desk scale; the budget makes it a total function on every ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepBudget {
    limit: usize,
}

impl StepBudget {
    pub fn new(limit: usize) -> Self {
        assert!(limit > 0, "step budget must be positive");
        StepBudget { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }
}

impl Default for StepBudget {
    fn default() -> Self {
        StepBudget { limit: 10_000 }
    }
}

/// Output of the prefix-set computation.
///
/// `words` is prefix-closed and listed in adoption order (length, then
/// lexicographic). The forward vectors of `words` generate the
/// reachability module; those of `words` minus `fractional` are linearly
/// independent over the fraction field, and `stair_basis` is a stair
/// basis of the module with exactly that many rows.
#[derive(Debug, Clone)]
pub struct PrefixSet<R: BezoutRing> {
    words: Vec<Word>,
    fractional: BTreeSet<Word>,
    stair_basis: Matrix<R>,
    vectors: BTreeMap<Word, Matrix<R>>,
    alphabet_len: usize,
}

impl<R: BezoutRing> PrefixSet<R> {
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The adopted words whose vectors entered with a non-unit
    /// multiplier: they enlarge the module without raising its
    /// fraction-field rank.
    pub fn fractional(&self) -> &BTreeSet<Word> {
        &self.fractional
    }

    pub fn stair_basis(&self) -> &Matrix<R> {
        &self.stair_basis
    }

    /// The forward vector of an adopted word.
    pub fn vector(&self, word: &Word) -> Option<&Matrix<R>> {
        self.vectors.get(word)
    }

    /// The basis size `|words| - |fractional|`.
    pub fn independent_count(&self) -> usize {
        self.words.len() - self.fractional.len()
    }

    /// The code induced by the prefix-closed set: one-letter extensions
    /// of adopted words (plus the empty word) that were not themselves
    /// adopted, in length-lexicographic order.
    pub fn induced_code(&self) -> Vec<Word> {
        let adopted: BTreeSet<&Word> = self.words.iter().collect();
        let mut code = BTreeSet::new();
        if !adopted.contains(&Word::empty()) {
            code.insert(Word::empty());
        }
        for word in &self.words {
            for letter in 0..self.alphabet_len {
                let ext = word.child(letter);
                if !adopted.contains(&ext) {
                    code.insert(ext);
                }
            }
        }
        code.into_iter().collect()
    }
}

/// Working state of the prefix-set computation: the adopted words, the
/// frontier of pending candidates, the fractional subset, a stair basis
/// of the module generated so far, and the forward vectors.
#[derive(Debug, Clone)]
pub struct PrefixState<R: BezoutRing> {
    adopted: Vec<Word>,
    frontier: BTreeSet<Word>,
    fractional: BTreeSet<Word>,
    stair: Matrix<R>,
    vectors: BTreeMap<Word, Matrix<R>>,
    alphabet_len: usize,
}

impl<R: BezoutRing> PrefixState<R> {
    pub fn new(rep: &LinearRepresentation<R>) -> Self {
        let mut frontier = BTreeSet::new();
        frontier.insert(Word::empty());
        PrefixState {
            adopted: Vec::new(),
            frontier,
            fractional: BTreeSet::new(),
            stair: Matrix::zero(0, rep.dim()),
            vectors: BTreeMap::new(),
            alphabet_len: rep.alphabet().len(),
        }
    }

    pub fn frontier(&self) -> &BTreeSet<Word> {
        &self.frontier
    }

    pub fn adopted(&self) -> &[Word] {
        &self.adopted
    }

    pub fn fractional(&self) -> &BTreeSet<Word> {
        &self.fractional
    }

    /// Classifies one candidate against the module generated so far and
    /// updates the state: an independent vector is adopted, a member is
    /// dropped, and a fractional member is adopted into the fractional
    /// subset. Adopting a word enqueues its one-letter extensions.
    pub fn process_candidate(
        &mut self,
        rep: &LinearRepresentation<R>,
        word: &Word,
    ) -> MembershipOutcome<R> {
        self.frontier.remove(word);
        let vector = self.forward_vector(rep, word);
        let outcome =
            membership(&self.stair, vector.row(0)).expect("forward vectors match the basis width");
        match &outcome {
            MembershipOutcome::Member(_) => {}
            MembershipOutcome::Independent => self.adopt(word, vector),
            MembershipOutcome::FractionalMember { .. } => {
                self.fractional.insert(word.clone());
                self.adopt(word, vector);
            }
        }
        outcome
    }

    fn adopt(&mut self, word: &Word, vector: Matrix<R>) {
        self.stair = triangularize(&self.stair.stack(&vector)).stair;
        self.adopted.push(word.clone());
        self.vectors.insert(word.clone(), vector);
        for letter in 0..self.alphabet_len {
            self.frontier.insert(word.child(letter));
        }
    }

    /// `lambda * mu(word)`, reusing the stored parent vector when there
    /// is one.
    fn forward_vector(&self, rep: &LinearRepresentation<R>, word: &Word) -> Matrix<R> {
        match word.parent() {
            None => rep.lambda().clone(),
            Some((front, last)) => match self.vectors.get(&front) {
                Some(row) => row.mul(rep.mu(last)),
                None => {
                    let mut row = rep.lambda().clone();
                    for &letter in word.letters() {
                        row = row.mul(rep.mu(letter));
                    }
                    row
                }
            },
        }
    }

    fn into_prefix_set(self) -> PrefixSet<R> {
        PrefixSet {
            words: self.adopted,
            fractional: self.fractional,
            stair_basis: self.stair,
            vectors: self.vectors,
            alphabet_len: self.alphabet_len,
        }
    }
}

/// Runs the candidate loop to completion: repeatedly processes the
/// shortest pending word (ties broken lexicographically) until the
/// frontier empties or the budget runs out.
pub fn prefix_set<R: BezoutRing>(
    rep: &LinearRepresentation<R>,
    budget: StepBudget,
) -> Result<PrefixSet<R>, MinimizeError> {
    let mut state = PrefixState::new(rep);
    let mut processed = 0usize;
    while let Some(word) = state.frontier.iter().next().cloned() {
        processed += 1;
        if processed > budget.limit() {
            return Err(MinimizeError::BudgetExceeded {
                limit: budget.limit(),
            });
        }
        state.process_candidate(rep, &word);
    }
    Ok(state.into_prefix_set())
}

/// Rewrites the representation on a stair basis of its reachability
/// module. The output dimension is the number of independent words in the
/// prefix set; the behavior is preserved on every word.
pub fn left_reduce<R: BezoutRing>(
    rep: &LinearRepresentation<R>,
    budget: StepBudget,
) -> Result<LinearRepresentation<R>, MinimizeError> {
    let prefix = prefix_set(rep, budget)?;
    if prefix.words().is_empty() {
        // lambda is zero: the behavior is the zero series.
        return Ok(LinearRepresentation::zero_rep(rep.alphabet().clone()));
    }

    // Invariant maintained below: lambda == coords * stair.
    let mut coords: Matrix<R> = Matrix::identity(1);
    let mut stair = rep.lambda().clone();
    for word in prefix.words() {
        let vector = prefix.vector(word).expect("adopted words have vectors").clone();
        let stacked = stair.stack(&vector);
        let reduced = triangularize(&stacked);
        let inverse = invert_unimodular(&reduced.transform)
            .expect("stair transforms are unimodular");
        // lambda = (coords | 0) * stacked = (coords | 0) * G^{-1} * (stair / 0),
        // so the coordinates on the new stair are the leading columns.
        let padded = Matrix::from_fn(1, stacked.rows(), |_, j| {
            if j < coords.cols() {
                coords.at(0, j).clone()
            } else {
                R::zero()
            }
        });
        coords = padded.mul(&inverse).left_columns(reduced.stair.rows());
        stair = reduced.stair;
        debug_assert_eq!(coords.mul(&stair), *rep.lambda());
    }

    // The incremental coordinates must agree with a direct solve.
    let direct = solve_stair(&stair, rep.lambda().row(0))
        .expect("lambda lies in the module it generated");
    assert_eq!(
        coords.row(0),
        &direct[..],
        "incremental coordinates diverged from the stair solution"
    );

    let dim = stair.rows();
    let mut reduced_mu = Vec::with_capacity(rep.alphabet().len());
    for letter in 0..rep.alphabet().len() {
        let shifted = stair.mul(rep.mu(letter));
        let mut rows = Vec::with_capacity(dim);
        for i in 0..dim {
            rows.push(
                solve_stair(&stair, shifted.row(i))
                    .expect("the module is stable under the transition action"),
            );
        }
        reduced_mu.push(Matrix::from_rows(rows));
    }
    let reduced = LinearRepresentation::new(
        rep.alphabet().clone(),
        coords,
        reduced_mu,
        stair.mul(rep.gamma()),
    )
    .expect("reduced shapes are consistent");
    Ok(reduced)
}

/// Left reduction of the reversed representation, transposed back.
pub fn right_reduce<R: BezoutRing>(
    rep: &LinearRepresentation<R>,
    budget: StepBudget,
) -> Result<LinearRepresentation<R>, MinimizeError> {
    Ok(left_reduce(&rep.transpose(), budget)?.transpose())
}

/// One left reduction followed by one right reduction. Over the integers
/// and the rationals the result realizes the behavior in its minimal
/// dimension, the Hankel rank.
pub fn minimize<R: BezoutRing>(
    rep: &LinearRepresentation<R>,
    budget: StepBudget,
) -> Result<LinearRepresentation<R>, MinimizeError> {
    right_reduce(&left_reduce(rep, budget)?, budget)
}

/// The shortest word (lexicographically first among the shortest) on
/// which the two behaviors differ, or `None` when the behaviors are
/// equal. Two representations of dimensions `n1` and `n2` realize the
/// same series iff they agree on every word shorter than `n1 + n2`.
pub fn distinguishing_word<R: BezoutRing>(
    r1: &LinearRepresentation<R>,
    r2: &LinearRepresentation<R>,
) -> Result<Option<Word>, AutomatonError> {
    if r1.alphabet() != r2.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    let bound = r1.dim() + r2.dim();
    if bound == 0 {
        return Ok(None);
    }
    for word in Word::all_up_to(r1.alphabet().len(), bound - 1) {
        let b1 = r1.behavior(&word).expect("word is over the shared alphabet");
        let b2 = r2.behavior(&word).expect("word is over the shared alphabet");
        if b1 != b2 {
            return Ok(Some(word));
        }
    }
    Ok(None)
}

/// Whether the two representations realize the same series.
pub fn equivalent<R: BezoutRing>(
    r1: &LinearRepresentation<R>,
    r2: &LinearRepresentation<R>,
) -> Result<bool, AutomatonError> {
    Ok(distinguishing_word(r1, r2)?.is_none())
}

/// The change of basis relating two equivalent representations that are
/// minimal over the fraction field: the invertible `S` with
/// `lambda2 = lambda1 * S`, `S * mu2(a) = mu1(a) * S` for every symbol,
/// and `S * gamma2 = gamma1`. For such inputs `S` is unique; `None` is
/// returned when no invertible solution exists.
pub fn conjugator<R: BezoutRing>(
    r1: &LinearRepresentation<R>,
    r2: &LinearRepresentation<R>,
) -> Result<Option<Matrix<Fraction<R>>>, MinimizeError> {
    if r1.alphabet() != r2.alphabet() {
        return Err(MinimizeError::AlphabetMismatch);
    }
    if r1.dim() != r2.dim() {
        return Err(MinimizeError::DimensionMismatch);
    }
    let n = r1.dim();
    let unknowns = n * n;
    let lambda1 = r1.lambda().to_fractions();
    let lambda2 = r2.lambda().to_fractions();
    let gamma1 = r1.gamma().to_fractions();
    let gamma2 = r2.gamma().to_fractions();

    let mut rows: Vec<Vec<Fraction<R>>> = Vec::new();
    let mut rhs: Vec<Fraction<R>> = Vec::new();
    // lambda1 * S = lambda2, one equation per column of S
    for j in 0..n {
        let mut row = vec![Fraction::zero(); unknowns];
        for i in 0..n {
            row[i * n + j] = lambda1.at(0, i).clone();
        }
        rows.push(row);
        rhs.push(lambda2.at(0, j).clone());
    }
    // S * gamma2 = gamma1, one equation per row of S
    for i in 0..n {
        let mut row = vec![Fraction::zero(); unknowns];
        for j in 0..n {
            row[i * n + j] = gamma2.at(j, 0).clone();
        }
        rows.push(row);
        rhs.push(gamma1.at(i, 0).clone());
    }
    // mu1(a) * S - S * mu2(a) = 0 entrywise
    for letter in 0..r1.alphabet().len() {
        let m1 = r1.mu(letter).to_fractions();
        let m2 = r2.mu(letter).to_fractions();
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![Fraction::zero(); unknowns];
                for k in 0..n {
                    row[k * n + j] = row[k * n + j].clone() + m1.at(i, k).clone();
                    row[i * n + k] = row[i * n + k].clone() - m2.at(k, j).clone();
                }
                rows.push(row);
                rhs.push(Fraction::zero());
            }
        }
    }

    let system = Matrix::from_rows(rows);
    let Some(solution) = solve_over_fractions(&system, &rhs) else {
        return Ok(None);
    };
    let s = Matrix::from_fn(n, n, |i, j| solution[i * n + j].clone());

    // The solver zeroes free variables, so re-verify the relations and
    // require invertibility before accepting.
    if lambda1.mul(&s) != lambda2 || s.mul(&gamma2) != gamma1 {
        return Ok(None);
    }
    for letter in 0..r1.alphabet().len() {
        let m1 = r1.mu(letter).to_fractions();
        let m2 = r2.mu(letter).to_fractions();
        if m1.mul(&s) != s.mul(&m2) {
            return Ok(None);
        }
    }
    if s.determinant().is_zero() {
        return Ok(None);
    }
    Ok(Some(s))
}

/// Whether two fraction-field-minimal representations are conjugate by a
/// matrix that is invertible over the coefficient ring itself: the
/// conjugator must exist, have all entries in the ring, and have a unit
/// determinant.
pub fn ring_isomorphic<R: BezoutRing>(
    r1: &LinearRepresentation<R>,
    r2: &LinearRepresentation<R>,
) -> Result<bool, MinimizeError> {
    let Some(s) = conjugator(r1, r2)? else {
        return Ok(false);
    };
    let mut entries = Vec::with_capacity(s.rows() * s.cols());
    for i in 0..s.rows() {
        for j in 0..s.cols() {
            match s.at(i, j).as_ring() {
                Some(value) => entries.push(value.clone()),
                None => return Ok(false),
            }
        }
    }
    let over_ring = Matrix::from_fn(s.rows(), s.cols(), |i, j| entries[i * s.cols() + j].clone());
    Ok(over_ring.determinant().is_unit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::{a1, a2, alpha_a, m};
    use crate::automaton::Alphabet;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn budget() -> StepBudget {
        StepBudget::default()
    }

    fn word(alphabet: &Alphabet, text: &str) -> Word {
        alphabet.word_from_text(text).unwrap()
    }

    /// lambda = (1, 1) over {a, b} with forward vectors (2,0) for a and
    /// (1,0) for b: adopting b requires the multiplier 2.
    fn two_letter_fixture() -> LinearRepresentation<BigInt> {
        LinearRepresentation::new(
            Alphabet::new(["a", "b"]).unwrap(),
            m(vec![vec![1, 1]]),
            vec![
                m(vec![vec![2, 0], vec![0, 0]]),
                m(vec![vec![1, 0], vec![0, 0]]),
            ],
            m(vec![vec![1], vec![0]]),
        )
        .unwrap()
    }

    #[test]
    fn process_candidate_branches() {
        let rep = two_letter_fixture();
        let mut state = PrefixState::new(&rep);
        let empty = Word::empty();

        let outcome = state.process_candidate(&rep, &empty);
        assert!(matches!(outcome, MembershipOutcome::Independent));
        assert_eq!(state.adopted(), std::slice::from_ref(&empty));
        let frontier: Vec<Word> = state.frontier().iter().cloned().collect();
        assert_eq!(
            frontier,
            vec![
                word(rep.alphabet(), "a"),
                word(rep.alphabet(), "b")
            ]
        );
        assert!(state.fractional().is_empty());

        let outcome = state.process_candidate(&rep, &word(rep.alphabet(), "a"));
        assert!(matches!(outcome, MembershipOutcome::Independent));

        let outcome = state.process_candidate(&rep, &word(rep.alphabet(), "b"));
        assert!(matches!(
            outcome,
            MembershipOutcome::FractionalMember { ref multiplier, .. } if *multiplier == int(2)
        ));
        assert!(state.fractional().contains(&word(rep.alphabet(), "b")));

        // a zero forward vector is a member with all-zero coefficients
        let nilpotent = a1(2);
        let mut state = PrefixState::new(&nilpotent);
        state.process_candidate(&nilpotent, &Word::empty());
        state.process_candidate(&nilpotent, &word(nilpotent.alphabet(), "a"));
        let outcome = state.process_candidate(&nilpotent, &word(nilpotent.alphabet(), "aa"));
        match outcome {
            MembershipOutcome::Member(coeffs) => {
                assert_eq!(coeffs.len(), 2);
                assert!(coeffs.iter().all(num_traits::Zero::is_zero))
            }
            other => panic!("expected member, got {other:?}"),
        }
    }

    #[test]
    fn prefix_set_of_the_nilpotent_representation() {
        let rep = a1(2);
        let prefix = prefix_set(&rep, budget()).unwrap();
        assert_eq!(
            prefix.words(),
            &[Word::empty(), word(rep.alphabet(), "a")]
        );
        assert!(prefix.fractional().is_empty());
        assert_eq!(prefix.stair_basis().rows(), 2);
        assert_eq!(prefix.independent_count(), 2);
    }

    #[test]
    fn prefix_set_with_fractional_word() {
        let rep = two_letter_fixture();
        let prefix = prefix_set(&rep, budget()).unwrap();
        let expected = [Word::empty(),
            word(rep.alphabet(), "a"),
            word(rep.alphabet(), "b")];
        assert_eq!(prefix.words(), &expected[..]);
        let fractional: Vec<Word> = prefix.fractional().iter().cloned().collect();
        assert_eq!(fractional, vec![word(rep.alphabet(), "b")]);
        assert_eq!(prefix.independent_count(), 2);
        // the code induced by the prefix-closed set
        let code = prefix.induced_code();
        assert_eq!(
            code,
            vec![
                word(rep.alphabet(), "aa"),
                word(rep.alphabet(), "ab"),
                word(rep.alphabet(), "ba"),
                word(rep.alphabet(), "bb"),
            ]
        );
    }

    #[test]
    fn prefix_set_of_the_zero_series_is_empty() {
        let rep = LinearRepresentation::new(
            alpha_a(),
            m(vec![vec![0, 0]]),
            vec![m(vec![vec![0, 1], vec![0, 0]])],
            m(vec![vec![1], vec![1]]),
        )
        .unwrap();
        let prefix = prefix_set(&rep, budget()).unwrap();
        assert!(prefix.words().is_empty());
        assert!(prefix.fractional().is_empty());
        assert_eq!(prefix.induced_code(), vec![Word::empty()]);
    }

    #[test]
    fn budget_is_enforced() {
        let rep = a1(2);
        let result = prefix_set(&rep, StepBudget::new(1));
        assert_eq!(
            result.err(),
            Some(MinimizeError::BudgetExceeded { limit: 1 })
        );
    }

    fn behaviors_match<R: BezoutRing>(
        r1: &LinearRepresentation<R>,
        r2: &LinearRepresentation<R>,
        max_len: usize,
    ) {
        for w in Word::all_up_to(r1.alphabet().len(), max_len) {
            assert_eq!(
                r1.behavior(&w).unwrap(),
                r2.behavior(&w).unwrap(),
                "behaviors differ on {w}"
            );
        }
    }

    #[test]
    fn left_reduce_keeps_reduced_representations() {
        let rep = a1(2);
        let reduced = left_reduce(&rep, budget()).unwrap();
        assert_eq!(reduced.dim(), 2);
        behaviors_match(&rep, &reduced, 4);
    }

    #[test]
    fn left_reduce_drops_unreachable_padding() {
        let rep = LinearRepresentation::new(
            alpha_a(),
            m(vec![vec![1, 0, 0]]),
            vec![m(vec![
                vec![0, 2, 0],
                vec![0, 0, 0],
                vec![0, 0, 0],
            ])],
            m(vec![vec![0], vec![1], vec![7]]),
        )
        .unwrap();
        let reduced = left_reduce(&rep, budget()).unwrap();
        assert_eq!(reduced.dim(), 2);
        behaviors_match(&rep, &reduced, 4);
    }

    #[test]
    fn left_reduce_of_zero_lambda_is_dimension_zero() {
        let rep = LinearRepresentation::new(
            alpha_a(),
            m(vec![vec![0, 0]]),
            vec![m(vec![vec![0, 1], vec![0, 0]])],
            m(vec![vec![1], vec![1]]),
        )
        .unwrap();
        let reduced = left_reduce(&rep, budget()).unwrap();
        assert_eq!(reduced.dim(), 0);
        behaviors_match(&rep, &reduced, 4);
    }

    #[test]
    fn right_reduce_examples() {
        let rep = a2(2);
        let reduced = right_reduce(&rep, budget()).unwrap();
        assert_eq!(reduced.dim(), 2);
        assert_eq!(
            reduced.behavior(&word(rep.alphabet(), "a")).unwrap(),
            int(2)
        );

        // an extra state that never reaches the output
        let padded = LinearRepresentation::new(
            alpha_a(),
            m(vec![vec![1, 0, 3]]),
            vec![m(vec![
                vec![0, 2, 0],
                vec![0, 0, 0],
                vec![0, 0, 0],
            ])],
            m(vec![vec![0], vec![1], vec![0]]),
        )
        .unwrap();
        let reduced = right_reduce(&padded, budget()).unwrap();
        assert_eq!(reduced.dim(), 2);
        behaviors_match(&padded, &reduced, 4);

        // transpose-symmetric: both reductions agree on the dimension
        let sym = LinearRepresentation::new(
            alpha_a(),
            m(vec![vec![1, 1]]),
            vec![m(vec![vec![0, 1], vec![1, 0]])],
            m(vec![vec![1], vec![1]]),
        )
        .unwrap();
        assert_eq!(
            left_reduce(&sym, budget()).unwrap().dim(),
            right_reduce(&sym, budget()).unwrap().dim()
        );
    }

    #[test]
    fn minimize_collapses_duplicated_series() {
        let rep = a1(2).direct_sum(&a1(2)).unwrap();
        assert_eq!(rep.dim(), 4);
        let minimized = minimize(&rep, budget()).unwrap();
        assert_eq!(minimized.dim(), 2);
        behaviors_match(&rep, &minimized, 4);
    }

    #[test]
    fn minimize_fixed_points() {
        let zero = LinearRepresentation::<BigInt>::zero_rep(alpha_a());
        assert_eq!(minimize(&zero, budget()).unwrap().dim(), 0);
        assert_eq!(minimize(&a1(2), budget()).unwrap().dim(), 2);
    }

    #[test]
    fn equivalence_of_the_weight_shifted_pair() {
        assert!(equivalent(&a1(2), &a2(2)).unwrap());
        assert!(equivalent(&a1(2), &a1(2)).unwrap());
        let witness = distinguishing_word(&a1(2), &a1(3)).unwrap();
        assert_eq!(witness, Some(word(a1(2).alphabet(), "a")));
        let zero = LinearRepresentation::<BigInt>::zero_rep(alpha_a());
        assert!(equivalent(&zero, &zero).unwrap());
    }

    #[test]
    fn equivalence_requires_matching_alphabets() {
        let other = LinearRepresentation::<BigInt>::zero_rep(Alphabet::new(["b"]).unwrap());
        assert_eq!(
            equivalent(&a1(2), &other),
            Err(AutomatonError::AlphabetMismatch)
        );
    }

    #[test]
    fn conjugator_of_a_representation_with_itself_is_identity() {
        let s = conjugator(&a1(2), &a1(2)).unwrap().unwrap();
        assert_eq!(s, Matrix::identity(2));
    }

    #[test]
    fn conjugator_of_the_weight_shifted_pair_is_diagonal() {
        let s = conjugator(&a1(2), &a2(2)).unwrap().unwrap();
        let expected = m(vec![vec![2, 0], vec![0, 1]]).to_fractions();
        assert_eq!(s, expected);
        // the inverse needs the fraction 1/2
        let inv = invert_unimodular(&s).unwrap();
        assert_eq!(
            inv.at(0, 0),
            &Fraction::new(int(1), int(2)).unwrap()
        );
    }

    #[test]
    fn conjugator_absent_for_inequivalent_inputs() {
        assert_eq!(conjugator(&a1(2), &a1(3)).unwrap(), None);
    }

    #[test]
    fn conjugator_dimension_mismatch() {
        let zero = LinearRepresentation::<BigInt>::zero_rep(alpha_a());
        assert_eq!(
            conjugator(&a1(2), &zero),
            Err(MinimizeError::DimensionMismatch)
        );
    }

    #[test]
    fn ring_isomorphism_detects_the_unit_obstruction() {
        assert!(!ring_isomorphic(&a1(2), &a2(2)).unwrap());
        assert!(ring_isomorphic(&a1(2), &a1(2)).unwrap());
    }

    #[test]
    fn ring_isomorphism_accepts_unimodular_conjugates() {
        // a1(2) conjugated by the swap matrix
        let swapped = LinearRepresentation::new(
            alpha_a(),
            m(vec![vec![0, 1]]),
            vec![m(vec![vec![0, 0], vec![2, 0]])],
            m(vec![vec![1], vec![0]]),
        )
        .unwrap();
        assert!(equivalent(&a1(2), &swapped).unwrap());
        let s = conjugator(&a1(2), &swapped).unwrap().unwrap();
        assert_eq!(s, m(vec![vec![0, 1], vec![1, 0]]).to_fractions());
        assert!(ring_isomorphic(&a1(2), &swapped).unwrap());
    }
}
