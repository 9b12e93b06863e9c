//! The on-disk automaton document: a self-describing JSON object whose
//! scalars are strings in the ring's textual syntax, so arbitrary
//! precision survives serialization. Serialization is deterministic:
//! fixed field order, transition matrices keyed in sorted symbol order.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::{Alphabet, LinearRepresentation};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::puiseux::PuiseuxPoly;
use crate::ring::BezoutRing;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("document syntax: {0}")]
    Syntax(String),
    #[error("invalid document: {0}")]
    Invalid(String),
}

/// The coefficient ring a document declares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "int")]
    Int,
    #[serde(rename = "rat")]
    Rat,
    #[serde(rename = "poly")]
    Poly,
    #[serde(rename = "fracpoly")]
    FracPoly,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RingTag::Int => "int",
            RingTag::Rat => "rat",
            RingTag::Poly => "poly",
            RingTag::FracPoly => "fracpoly",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonDocument {
    pub ring: RingTag,
    pub alphabet: Vec<String>,
    pub dim: usize,
    pub lambda: Vec<String>,
    pub mu: BTreeMap<String, Vec<Vec<String>>>,
    pub gamma: Vec<String>,
}

impl AutomatonDocument {
    /// Parses and validates a document.
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        let doc: AutomatonDocument =
            serde_json::from_str(text).map_err(|e| DocumentError::Syntax(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    /// Deterministic pretty-printed JSON (no trailing newline).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    /// Checks the structural invariants: a valid alphabet, consistent
    /// shapes, one transition matrix per symbol, and scalars that parse
    /// in the declared ring.
    pub fn validate(&self) -> Result<(), DocumentError> {
        Alphabet::new(self.alphabet.clone())
            .map_err(|e| DocumentError::Invalid(e.to_string()))?;
        if self.lambda.len() != self.dim {
            return Err(DocumentError::Invalid(format!(
                "lambda has {} entries, expected {}",
                self.lambda.len(),
                self.dim
            )));
        }
        if self.gamma.len() != self.dim {
            return Err(DocumentError::Invalid(format!(
                "gamma has {} entries, expected {}",
                self.gamma.len(),
                self.dim
            )));
        }
        let mu_symbols: Vec<&String> = self.mu.keys().collect();
        let mut alphabet_sorted: Vec<&String> = self.alphabet.iter().collect();
        alphabet_sorted.sort();
        if mu_symbols != alphabet_sorted {
            return Err(DocumentError::Invalid(
                "transition symbols do not match the alphabet".into(),
            ));
        }
        for (symbol, matrix) in &self.mu {
            if matrix.len() != self.dim || matrix.iter().any(|row| row.len() != self.dim) {
                return Err(DocumentError::Invalid(format!(
                    "transition matrix for {symbol:?} is not {0}x{0}",
                    self.dim
                )));
            }
        }
        for scalar in self.scalars() {
            self.check_scalar(scalar)?;
        }
        Ok(())
    }

    /// Strict form check: every scalar must round-trip to the identical
    /// string, i.e. be written canonically.
    pub fn check_canonical(&self) -> Result<(), DocumentError> {
        for scalar in self.scalars() {
            let rendered = match self.ring {
                RingTag::Int => BigInt::parse_scalar(scalar).map(|v| v.to_string()),
                RingTag::Rat => BigRational::parse_scalar(scalar).map(|v| v.to_string()),
                RingTag::Poly => Polynomial::parse_scalar(scalar).map(|v| v.to_string()),
                RingTag::FracPoly => PuiseuxPoly::parse_scalar(scalar).map(|v| v.to_string()),
            }
            .map_err(|e| DocumentError::Invalid(e.to_string()))?;
            if rendered != *scalar {
                return Err(DocumentError::Invalid(format!(
                    "scalar {scalar:?} is not in canonical form (expected {rendered:?})"
                )));
            }
        }
        Ok(())
    }

    fn scalars(&self) -> impl Iterator<Item = &String> {
        self.lambda
            .iter()
            .chain(self.gamma.iter())
            .chain(self.mu.values().flatten().flatten())
    }

    fn check_scalar(&self, scalar: &str) -> Result<(), DocumentError> {
        let result = match self.ring {
            RingTag::Int => BigInt::parse_scalar(scalar).map(|_| ()),
            RingTag::Rat => BigRational::parse_scalar(scalar).map(|_| ()),
            RingTag::Poly => Polynomial::parse_scalar(scalar).map(|_| ()),
            RingTag::FracPoly => PuiseuxPoly::parse_scalar(scalar).map(|_| ()),
        };
        result.map_err(|e| DocumentError::Invalid(e.to_string()))
    }

    /// Builds the typed representation. The scalar type must match the
    /// declared ring; dispatch on [`AutomatonDocument::ring`] first.
    pub fn to_representation<R: BezoutRing>(
        &self,
    ) -> Result<LinearRepresentation<R>, DocumentError> {
        let alphabet = Alphabet::new(self.alphabet.clone())
            .map_err(|e| DocumentError::Invalid(e.to_string()))?;
        let parse = |s: &String| {
            R::parse_scalar(s).map_err(|e| DocumentError::Invalid(e.to_string()))
        };
        let lambda = Matrix::row_vector(
            self.lambda.iter().map(parse).collect::<Result<Vec<_>, _>>()?,
        );
        let gamma = Matrix::column_vector(
            self.gamma.iter().map(parse).collect::<Result<Vec<_>, _>>()?,
        );
        let mut mu = Vec::with_capacity(alphabet.len());
        for symbol in alphabet.symbols() {
            let raw = self.mu.get(symbol).ok_or_else(|| {
                DocumentError::Invalid(format!("missing transition matrix for {symbol:?}"))
            })?;
            let rows = raw
                .iter()
                .map(|row| row.iter().map(parse).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(DocumentError::Invalid(format!(
                    "transition matrix for {symbol:?} is not {0}x{0}",
                    self.dim
                )));
            }
            mu.push(Matrix::from_rows(rows));
        }
        if lambda.cols() != self.dim {
            return Err(DocumentError::Invalid("lambda width differs from dim".into()));
        }
        LinearRepresentation::new(alphabet, lambda, mu, gamma)
            .map_err(|e| DocumentError::Invalid(e.to_string()))
    }

    /// Renders a representation with the given ring tag; scalars use the
    /// ring's canonical textual form.
    pub fn from_representation<R: BezoutRing>(
        ring: RingTag,
        rep: &LinearRepresentation<R>,
    ) -> Self {
        let render_row = |row: &[R]| row.iter().map(R::to_string).collect::<Vec<_>>();
        let mut mu = BTreeMap::new();
        for (i, symbol) in rep.alphabet().symbols().iter().enumerate() {
            let matrix = rep.mu(i);
            let rows: Vec<Vec<String>> = (0..matrix.rows())
                .map(|r| render_row(matrix.row(r)))
                .collect();
            mu.insert(symbol.clone(), rows);
        }
        AutomatonDocument {
            ring,
            alphabet: rep.alphabet().symbols().to_vec(),
            dim: rep.dim(),
            lambda: render_row(rep.lambda().row(0)),
            mu,
            gamma: (0..rep.dim())
                .map(|i| rep.gamma().at(i, 0).to_string())
                .collect(),
        }
    }
}
