//! Finite Hankel blocks and the minimal-dimension oracle.
//!
//! For a series realized in dimension `n` over a field, the Hankel block
//! indexed by all words of length at most `n` on both sides already has
//! the full Hankel rank, and that rank is the minimal realization
//! dimension. This gives an oracle for minimization that shares nothing
//! with the reduction pipeline except behavior evaluation.

use crate::automaton::{LinearRepresentation, Word};
use crate::fraction::Fraction;
use crate::linalg::rank_over_fractions;
use crate::matrix::Matrix;
use crate::ring::BezoutRing;

/// The finite Hankel block on all words of length at most `max_len`,
/// with entries promoted to the fraction field. Row and column indices
/// share one word list, in length-lexicographic order.
#[derive(Debug, Clone)]
pub struct HankelBlock<R: BezoutRing> {
    words: Vec<Word>,
    entries: Matrix<Fraction<R>>,
}

impl<R: BezoutRing> HankelBlock<R> {
    pub fn build(rep: &LinearRepresentation<R>, max_len: usize) -> Self {
        let entries = hankel_entries(rep, max_len).to_fractions();
        HankelBlock {
            words: Word::all_up_to(rep.alphabet().len(), max_len),
            entries,
        }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn entries(&self) -> &Matrix<Fraction<R>> {
        &self.entries
    }

    pub fn rank(&self) -> usize {
        rank_over_fractions(&self.entries)
    }
}

/// Rank over the fraction field of the Hankel block on words of length
/// at most `max_len`. Choosing `max_len >= rep.dim()` makes the result
/// the minimal realization dimension of the behavior over the field.
pub fn hankel_rank<R: BezoutRing>(rep: &LinearRepresentation<R>, max_len: usize) -> usize {
    rank_over_fractions(&hankel_entries(rep, max_len))
}

/// Entry `(u, v)` is the behavior coefficient of the concatenation `uv`,
/// assembled from forward rows `lambda * mu(u)` and backward columns
/// `mu(v) * gamma` so each word product is computed once.
fn hankel_entries<R: BezoutRing>(rep: &LinearRepresentation<R>, max_len: usize) -> Matrix<R> {
    let words = Word::all_up_to(rep.alphabet().len(), max_len);
    let mut forward: Vec<Matrix<R>> = Vec::with_capacity(words.len());
    let mut backward: Vec<Matrix<R>> = Vec::with_capacity(words.len());
    for word in &words {
        match word.parent() {
            None => {
                forward.push(rep.lambda().clone());
                backward.push(rep.gamma().clone());
            }
            Some((front, last)) => {
                // words come parent-before-child, so the prefix row exists
                let parent_index = words.binary_search(&front).expect("prefix enumerated");
                forward.push(forward[parent_index].mul(rep.mu(last)));
                let (first, tail) = (word.letters()[0], Word::from_letters(word.letters()[1..].to_vec()));
                let tail_index = words.binary_search(&tail).expect("suffix enumerated");
                backward.push(rep.mu(first).mul(&backward[tail_index]));
            }
        }
    }
    Matrix::from_fn(words.len(), words.len(), |i, j| {
        forward[i].mul(&backward[j]).at(0, 0).clone()
    })
}
