//! Exact linear algebra over a Bézout ring and its fraction field.
//!
//! The central routine is [`triangularize`]: a unimodular row reduction to
//! stair form built from 2×2 extended-gcd steps. On top of it sit module
//! membership with denominator tracking, back substitution in a stair
//! basis, and unimodular inversion. Fraction-field rank and solving are
//! implemented independently of the stair machinery so they can serve as
//! oracles for it.

use num_traits::Zero;
use thiserror::Error;

use crate::fraction::Fraction;
use crate::matrix::Matrix;
use crate::ring::BezoutRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("matrix shapes do not match")]
    ShapeMismatch,
    #[error("both pivot candidates are zero")]
    BothZero,
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("vector is not in the module spanned by the stair basis")]
    NotInModule,
}

/// A 2×2 unimodular step `g` with `g * (a, b)^t = (d, 0)^t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussStep<R> {
    /// The 2×2 transformation matrix.
    pub matrix: Matrix<R>,
    /// The surviving entry `d`.
    pub pivot: R,
}

/// Builds the elimination step for a column pair `(a, b)`.
///
/// When `a` is zero the step is the plain swap; when `b` is zero the step
/// scales `a` to its canonical associate; otherwise the step is
/// `[[alpha, beta], [-b/d, a/d]]` from the extended gcd, which has
/// determinant 1.
pub fn gauss2<R: BezoutRing>(a: &R, b: &R) -> Result<GaussStep<R>, LinAlgError> {
    if a.is_zero() && b.is_zero() {
        return Err(LinAlgError::BothZero);
    }
    if a.is_zero() {
        return Ok(GaussStep {
            matrix: Matrix::from_rows(vec![
                vec![R::zero(), R::one()],
                vec![R::one(), R::zero()],
            ]),
            pivot: b.clone(),
        });
    }
    if b.is_zero() {
        let unit = a.canonical_unit();
        return Ok(GaussStep {
            matrix: Matrix::from_rows(vec![
                vec![unit.clone(), R::zero()],
                vec![R::zero(), R::one()],
            ]),
            pivot: unit * a.clone(),
        });
    }
    let (d, alpha, beta) = a.extended_gcd(b);
    let neg_b = (-b.clone()).exact_div(&d).expect("gcd divides b");
    let a_over_d = a.exact_div(&d).expect("gcd divides a");
    Ok(GaussStep {
        matrix: Matrix::from_rows(vec![vec![alpha, beta], vec![neg_b, a_over_d]]),
        pivot: d,
    })
}

/// The result of [`triangularize`]: `transform * input` equals `stair`
/// stacked on `zero_rows` zero rows, `transform` is unimodular, and
/// `stair` is a stair matrix (nonzero rows, pivot columns strictly
/// increasing, pivots canonical).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StairForm<R> {
    pub transform: Matrix<R>,
    pub stair: Matrix<R>,
    pub zero_rows: usize,
}

/// Unimodular reduction to stair form.
///
/// Columns are swept left to right; below the current pivot row every
/// nonzero entry is cleared with a [`gauss2`] step embedded into the
/// identity, and the pivot is scaled to its canonical associate. The row
/// count of `stair` equals the fraction-field rank of the input.
pub fn triangularize<R: BezoutRing>(input: &Matrix<R>) -> StairForm<R> {
    let mut work = input.clone();
    let mut transform = Matrix::identity(input.rows());
    let mut next = 0usize;
    for col in 0..input.cols() {
        if next == input.rows() {
            break;
        }
        for row in next + 1..input.rows() {
            if work.at(row, col).is_zero() {
                continue;
            }
            let step = gauss2(work.at(next, col), work.at(row, col))
                .expect("lower entry is nonzero");
            let t = [
                step.matrix.at(0, 0).clone(),
                step.matrix.at(0, 1).clone(),
                step.matrix.at(1, 0).clone(),
                step.matrix.at(1, 1).clone(),
            ];
            work.transform_row_pair(next, row, &t);
            transform.transform_row_pair(next, row, &t);
        }
        let pivot = work.at(next, col);
        if !pivot.is_zero() {
            let unit = pivot.canonical_unit();
            if !unit.is_one() {
                work.scale_row(next, &unit);
                transform.scale_row(next, &unit);
            }
            next += 1;
        }
    }
    debug_assert!(work.top_rows(next).rows() == next);
    debug_assert!(
        (next..input.rows()).all(|i| work.row(i).iter().all(Zero::is_zero)),
        "rows below the stair must be zero"
    );
    StairForm {
        transform,
        stair: work.top_rows(next),
        zero_rows: input.rows() - next,
    }
}

/// Classification of a vector against the module spanned by basis rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipOutcome<R> {
    /// Not in the fraction-field span of the basis.
    Independent,
    /// `vector = sum coefficients[i] * basis[i]` exactly over the ring.
    Member(Vec<R>),
    /// `multiplier * vector = sum coefficients[i] * basis[i]` with a
    /// non-unit multiplier that fails to divide some coefficient.
    FractionalMember { multiplier: R, coefficients: Vec<R> },
}

/// Tests whether `vector` lies in the span of the basis rows, first over
/// the fraction field and then over the ring itself.
///
/// The basis rows must be linearly independent over the fraction field
/// (stair bases always are), so the solved coordinates are unique. The
/// ring-level verdict clears denominators with their canonical least
/// common multiple.
pub fn membership<R: BezoutRing>(
    basis: &Matrix<R>,
    vector: &[R],
) -> Result<MembershipOutcome<R>, LinAlgError> {
    if vector.len() != basis.cols() {
        return Err(LinAlgError::ShapeMismatch);
    }
    let system = basis.transpose().to_fractions();
    let target: Vec<Fraction<R>> = vector.iter().cloned().map(Fraction::from_ring).collect();
    let Some(coords) = solve_over_fractions(&system, &target) else {
        return Ok(MembershipOutcome::Independent);
    };
    let mut multiplier = R::one();
    for c in &coords {
        multiplier = multiplier.lcm(c.denominator());
    }
    if multiplier.is_unit() {
        let coefficients = coords
            .into_iter()
            .map(|c| {
                debug_assert!(c.denominator().is_one());
                c.numerator().clone()
            })
            .collect();
        return Ok(MembershipOutcome::Member(coefficients));
    }
    let coefficients = coords
        .into_iter()
        .map(|c| {
            let scale = multiplier
                .exact_div(c.denominator())
                .expect("multiplier is a common multiple of the denominators");
            c.numerator().clone() * scale
        })
        .collect();
    Ok(MembershipOutcome::FractionalMember {
        multiplier,
        coefficients,
    })
}

/// Back substitution in a stair matrix: the unique `c` with
/// `c * stair = target`, all divisions exact.
///
/// Fails with [`LinAlgError::NotInModule`] when a pivot division is
/// inexact or a residue remains.
pub fn solve_stair<R: BezoutRing>(stair: &Matrix<R>, target: &[R]) -> Result<Vec<R>, LinAlgError> {
    if target.len() != stair.cols() {
        return Err(LinAlgError::ShapeMismatch);
    }
    let mut residual = target.to_vec();
    let mut coefficients = Vec::with_capacity(stair.rows());
    for i in 0..stair.rows() {
        let pivot_col = stair
            .row(i)
            .iter()
            .position(|e| !e.is_zero())
            .expect("stair rows are nonzero");
        let c = residual[pivot_col]
            .exact_div(stair.at(i, pivot_col))
            .map_err(|_| LinAlgError::NotInModule)?;
        if !c.is_zero() {
            for (j, r) in residual.iter_mut().enumerate().skip(pivot_col) {
                *r = r.clone() - c.clone() * stair.at(i, j).clone();
            }
        }
        coefficients.push(c);
    }
    if residual.iter().any(|e| !e.is_zero()) {
        return Err(LinAlgError::NotInModule);
    }
    Ok(coefficients)
}

/// Exact inverse of a unimodular matrix via the adjugate.
pub fn invert_unimodular<R: BezoutRing>(g: &Matrix<R>) -> Result<Matrix<R>, LinAlgError> {
    if g.rows() != g.cols() {
        return Err(LinAlgError::ShapeMismatch);
    }
    let det = g.determinant();
    if !det.is_unit() {
        return Err(LinAlgError::NotUnimodular);
    }
    let det_inv = R::one().exact_div(&det).expect("units divide one");
    let inverse = Matrix::from_fn(g.rows(), g.cols(), |i, j| {
        let cofactor = g.minor(j, i).determinant();
        let signed = if (i + j) % 2 == 0 { cofactor } else { -cofactor };
        signed * det_inv.clone()
    });
    debug_assert_eq!(g.mul(&inverse), Matrix::identity(g.rows()));
    Ok(inverse)
}

/// Rank of a matrix with entries promoted to the fraction field,
/// computed by plain Gaussian elimination. Kept independent of
/// [`triangularize`] so it can verify stair forms.
pub fn rank_over_fractions<R: BezoutRing>(input: &Matrix<R>) -> usize {
    let mut rows: Vec<Vec<Fraction<R>>> = (0..input.rows())
        .map(|i| {
            input
                .row(i)
                .iter()
                .cloned()
                .map(Fraction::from_ring)
                .collect()
        })
        .collect();
    eliminate(&mut rows, input.cols()).len()
}

/// Solves `a * x = b` over the fraction field by Gauss-Jordan
/// elimination. Returns a particular solution with free variables set to
/// zero, or `None` when the system is inconsistent.
pub fn solve_over_fractions<R: BezoutRing>(
    a: &Matrix<Fraction<R>>,
    b: &[Fraction<R>],
) -> Option<Vec<Fraction<R>>> {
    assert_eq!(a.rows(), b.len(), "system shapes differ");
    let unknowns = a.cols();
    let mut rows: Vec<Vec<Fraction<R>>> = (0..a.rows())
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = eliminate(&mut rows, unknowns);
    for row in rows.iter().skip(pivots.len()) {
        if !row[unknowns].is_zero() {
            return None;
        }
    }
    let mut solution = vec![Fraction::zero(); unknowns];
    for (rank, col) in pivots.iter().enumerate() {
        solution[*col] = rows[rank][unknowns].clone();
    }
    Some(solution)
}

/// Gauss-Jordan elimination over the fraction field, restricted to the
/// first `col_limit` columns. Returns the pivot columns; afterwards every
/// pivot column holds a unit vector and the rows below the last pivot are
/// zero on the first `col_limit` columns.
fn eliminate<R: BezoutRing>(rows: &mut [Vec<Fraction<R>>], col_limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..col_limit {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip();
        for e in rows[next].iter_mut() {
            *e = e.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i == next || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            for j in 0..rows[i].len() {
                let delta = factor.clone() * rows[next][j].clone();
                rows[i][j] = rows[i][j].clone() - delta;
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}
