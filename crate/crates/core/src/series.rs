//! Truncated power series in the formal parameter `h`.

use std::fmt;
use std::ops::{AddAssign, Index, IndexMut};

use crate::poly::{Polynomial, VarSet};

/// `c_0 + c_1 h + ... + c_n h^n`, arithmetic taken modulo `h^{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Default> HSeries<T> {
    /// All coefficients zero, truncated at `h^{order+1}`.
    pub fn zero(order: usize) -> Self {
        HSeries {
            coeffs: vec![T::default(); order + 1],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut s = HSeries::zero(order);
        s.coeffs[0] = c;
        s
    }
}

impl<T> HSeries<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the h^0 coefficient");
        HSeries { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.coeffs.iter()
    }
}

impl<T> Index<usize> for HSeries<T> {
    type Output = T;
    fn index(&self, k: usize) -> &T {
        &self.coeffs[k]
    }
}

impl<T> IndexMut<usize> for HSeries<T> {
    fn index_mut(&mut self, k: usize) -> &mut T {
        &mut self.coeffs[k]
    }
}

impl<T: for<'a> AddAssign<&'a T>> AddAssign<&HSeries<T>> for HSeries<T> {
    fn add_assign(&mut self, rhs: &HSeries<T>) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
    }
}

impl HSeries<Polynomial> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn sub(&self, rhs: &HSeries<Polynomial>) -> HSeries<Polynomial> {
        HSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VarSet) -> SeriesDisplay<'a> {
        SeriesDisplay { series: self, vars }
    }
}

pub struct SeriesDisplay<'a> {
    series: &'a HSeries<Polynomial>,
    vars: &'a VarSet,
}

/// One line per power: `h^k: <polynomial>`.
impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.series.coeffs.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "h^{k}: {}", c.display(self.vars))?;
        }
        Ok(())
    }
}
