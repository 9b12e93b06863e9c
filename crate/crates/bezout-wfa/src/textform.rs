//! Shared textual syntax for polynomial scalars.
//!
//! A polynomial is written as a sum of terms `c`, `c*X`, `c*X^e`, `X` or
//! `X^e`, with rational coefficients `p` or `p/q`. Integer exponents are
//! written bare (`X^3`); fractional exponents are parenthesized
//! (`X^(1/2)`). The zero polynomial is `0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{parse_rational, ScalarParseError};

/// One parsed `(exponent, coefficient)` term. Exponents are non-negative;
/// repeated exponents are legal and accumulate.
pub(crate) fn parse_terms(text: &str) -> Result<Vec<(BigRational, BigRational)>, ScalarParseError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ScalarParseError("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    for chunk in split_top_level(&compact)? {
        terms.push(parse_term(&chunk, text)?);
    }
    Ok(terms)
}

/// Splits at `+`/`-` outside parentheses, keeping each sign with its term.
fn split_top_level(s: &str) -> Result<Vec<String>, ScalarParseError> {
    let mut chunks = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for (pos, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| ScalarParseError(format!("unbalanced parentheses: {s:?}")))?;
            }
            '+' | '-' if depth == 0 && pos > 0 => {
                chunks.push(std::mem::take(&mut current));
            }
            _ => {}
        }
        current.push(c);
    }
    if depth != 0 {
        return Err(ScalarParseError(format!("unbalanced parentheses: {s:?}")));
    }
    chunks.push(current);
    Ok(chunks)
}

fn parse_term(chunk: &str, whole: &str) -> Result<(BigRational, BigRational), ScalarParseError> {
    let bad = || ScalarParseError(format!("invalid polynomial: {whole:?}"));
    let (sign, body) = match chunk.strip_prefix('-') {
        Some(rest) => (-BigRational::one(), rest),
        None => (BigRational::one(), chunk.strip_prefix('+').unwrap_or(chunk)),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let Some(x_pos) = body.find('X') else {
        // constant term
        return Ok((BigRational::zero(), sign * parse_rational(body)?));
    };
    let coeff = match &body[..x_pos] {
        "" => BigRational::one(),
        prefix => {
            let bare = prefix.strip_suffix('*').ok_or_else(bad)?;
            parse_rational(bare)?
        }
    };
    let exponent = match &body[x_pos + 1..] {
        "" => BigRational::one(),
        suffix => {
            let raw = suffix.strip_prefix('^').ok_or_else(bad)?;
            if let Some(inner) = raw.strip_prefix('(') {
                let inner = inner.strip_suffix(')').ok_or_else(bad)?;
                parse_rational(inner)?
            } else {
                let n = raw.parse::<BigInt>().map_err(|_| bad())?;
                BigRational::from_integer(n)
            }
        }
    };
    if exponent.is_negative() {
        return Err(ScalarParseError(format!(
            "negative exponent in polynomial: {whole:?}"
        )));
    }
    Ok((exponent, sign * coeff))
}

/// Renders terms in the canonical syntax. Terms must come in strictly
/// decreasing exponent order with nonzero coefficients.
pub(crate) fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a BigRational, &'a BigRational)>,
{
    let mut out = String::new();
    for (exponent, coeff) in terms {
        let negative = coeff.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push(if negative { '-' } else { '+' });
        }
        let magnitude = coeff.abs();
        if exponent.is_zero() {
            out.push_str(&magnitude.to_string());
            continue;
        }
        if !magnitude.is_one() {
            out.push_str(&magnitude.to_string());
            out.push('*');
        }
        out.push('X');
        if !exponent.is_one() {
            if exponent.is_integer() {
                out.push_str(&format!("^{exponent}"));
            } else {
                out.push_str(&format!("^({exponent})"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
