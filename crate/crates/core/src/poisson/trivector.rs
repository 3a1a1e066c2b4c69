use std::collections::BTreeMap;
use std::fmt;

use crate::cochain::Cochain;
use crate::poly::{Polynomial, Rational, Var, VarSet};

/// Components `T_abc`, `a < b < c`, of a trivector in the basis
/// `∂^a∧∂^b∧∂^c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriVector {
    components: BTreeMap<(Var, Var, Var), Polynomial>,
}

impl TriVector {
    pub fn zero() -> Self {
        TriVector::default()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Component at a strictly increasing zero-based triple.
    pub fn get(&self, a: Var, b: Var, c: Var) -> Polynomial {
        assert!(a < b && b < c, "trivector components are indexed by a < b < c");
        self.components.get(&(a, b, c)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, a: Var, b: Var, c: Var, p: Polynomial) {
        assert!(a < b && b < c, "trivector components are indexed by a < b < c");
        if p.is_zero() {
            self.components.remove(&(a, b, c));
        } else {
            self.components.insert((a, b, c), p);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Var, Var, Var), &Polynomial)> {
        self.components.iter()
    }

    pub fn scale(&self, c: &Rational) -> TriVector {
        let mut out = TriVector::zero();
        for (&(a, b, cc), p) in &self.components {
            out.set(a, b, cc, p.scale(c));
        }
        out
    }

    /// Reads the coefficients of `∂^a⊗∂^b⊗∂^c`, `a < b < c`, off a
    /// type-(1,1,1) cochain.
    pub fn from_cochain(c: &Cochain) -> TriVector {
        let mut out = TriVector::zero();
        for (slots, p) in c.terms() {
            if slots.len() != 3 || slots.iter().any(|s| s.order() != 1) {
                continue;
            }
            let (a, b, cc) = (slots[0].as_slice()[0], slots[1].as_slice()[0], slots[2].as_slice()[0]);
            if a < b && b < cc {
                out.set(a, b, cc, p.clone());
            }
        }
        out
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> TriVectorDisplay<'a> {
        TriVectorDisplay { t: self, vars }
    }
}

pub struct TriVectorDisplay<'a> {
    t: &'a TriVector,
    vars: &'a VarSet,
}

/// `(a,b,c): <polynomial>` per nonzero component, one-based; `0` if none.
impl fmt::Display for TriVectorDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(a, b, c), p)) in self.t.components.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "({},{},{}): {}", a + 1, b + 1, c + 1, p.display(self.vars))?;
        }
        Ok(())
    }
}
