//! Exact multivariate polynomials over the rationals.
//!
//! Everything else in the crate is built on [`Polynomial`]: cochain
//! coefficients, Poisson matrices, star-product values. Arithmetic is exact,
//! so "is zero" is a decidable test and canonical printing is reproducible.

mod monomial;
mod parse;
mod polynomial;
mod rational;

use std::borrow::Cow;
use std::collections::HashMap;

pub use monomial::{Monomial, MultiIndex, Var};
pub use parse::{parse_poly, ParseError};
pub use polynomial::{PolyDisplay, Polynomial};
pub use rational::Rational;

/// Ordered, finite set of declared variable names.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VarSet {
    names: Vec<String>,
    lookup: HashMap<String, Var>,
}

impl VarSet {
    /// Fails on duplicate names.
    pub fn new(names: Vec<String>) -> Result<Self, String> {
        let mut lookup = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if lookup.insert(n.clone(), i as Var).is_some() {
                return Err(format!("duplicate variable `{n}`"));
            }
        }
        Ok(VarSet { names, lookup })
    }

    /// `x1, ..., xn`.
    pub fn default_names(n: usize) -> Self {
        VarSet::new((1..=n).map(|i| format!("x{i}")).collect()).expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<Var> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, v: Var) -> Cow<'_, str> {
        match self.names.get(v as usize) {
            Some(n) => Cow::Borrowed(n),
            None => Cow::Owned(format!("x{}", v + 1)),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}
