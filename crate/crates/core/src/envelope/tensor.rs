use std::collections::BTreeMap;
use std::fmt;

use crate::poly::{Rational, Var};
use crate::series::HSeries;

/// A word `x_{i_1} ⊗ ⋯ ⊗ x_{i_m}` in the generators; the empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Var>);

impl Word {
    pub fn new(letters: Vec<Var>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Var] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_ordered(&self) -> bool {
        self.first_descent().is_none()
    }

    /// Position `k` of the leftmost pair with `letters[k] > letters[k+1]`.
    pub fn first_descent(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] > w[1])
    }

    pub fn swapped(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        v.swap(k, k + 1);
        Word(v)
    }

    /// The letters before position `k` and after position `k + 1`.
    pub fn split_pair(&self, k: usize) -> (Word, Word) {
        (Word(self.0[..k].to_vec()), Word(self.0[k + 2..].to_vec()))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// Element of `T(V)[h] / (h^{n+1})`. Each word carries a series of rational
/// coefficients; words with a zero series are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    order: usize,
    terms: BTreeMap<Word, HSeries<Rational>>,
}

fn series_is_zero(s: &HSeries<Rational>) -> bool {
    s.iter().all(Rational::is_zero)
}

impl Tensor {
    pub fn zero(order: usize) -> Self {
        Tensor {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: Word, order: usize) -> Self {
        let mut t = Tensor::zero(order);
        t.add_term(w, 0, &Rational::one());
        t
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &HSeries<Rational>)> {
        self.terms.iter()
    }

    /// Coefficient of `h^k · w`.
    pub fn coeff(&self, w: &Word, k: usize) -> Rational {
        self.terms
            .get(w)
            .map(|s| s[k].clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_ordered(&self) -> bool {
        self.terms.keys().all(Word::is_ordered)
    }

    /// Adds `c · h^k · w`; powers above the truncation order are dropped.
    pub fn add_term(&mut self, w: Word, k: usize, c: &Rational) {
        if k > self.order || c.is_zero() {
            return;
        }
        let mut s = HSeries::zero(self.order);
        s[k] = c.clone();
        self.add_series(&w, &s);
    }

    pub fn add_series(&mut self, w: &Word, s: &HSeries<Rational>) {
        if series_is_zero(s) {
            return;
        }
        let order = self.order;
        let entry = self.terms.entry(w.clone()).or_insert_with(|| HSeries::zero(order));
        for (k, c) in s.iter().enumerate().take(order + 1) {
            entry[k] += c;
        }
        if series_is_zero(entry) {
            self.terms.remove(w);
        }
    }

    /// Adds `c · h^k · other`.
    pub fn add_scaled(&mut self, other: &Tensor, k: usize, c: &Rational) {
        for (w, s) in &other.terms {
            for (j, a) in s.iter().enumerate() {
                if !a.is_zero() {
                    self.add_term(w.clone(), j + k, &(a.clone() * c));
                }
            }
        }
    }

    pub(crate) fn pop_first(&mut self) -> Option<(Word, HSeries<Rational>)> {
        self.terms.pop_first()
    }

    /// The tensor product, i.e. concatenation of words.
    pub fn concat(&self, other: &Tensor) -> Tensor {
        let order = self.order.min(other.order);
        let mut out = Tensor::zero(order);
        for (w1, s1) in &self.terms {
            for (w2, s2) in &other.terms {
                let w = w1.concat(w2);
                for (i, a) in s1.iter().enumerate().take(order + 1) {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in s2.iter().enumerate().take(order + 1 - i) {
                        if !b.is_zero() {
                            out.add_term(w.clone(), i + j, &(a.clone() * b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(other, 0, &Rational::from(-1));
        out
    }

    /// The `h^k` part as a tensor of order `0`.
    pub fn h_part(&self, k: usize) -> Tensor {
        let mut out = Tensor::zero(0);
        for (w, s) in &self.terms {
            if k <= self.order {
                out.add_term(w.clone(), 0, &s[k]);
            }
        }
        out
    }
}

/// One line `coeff * h^k * (i1 i2 ...)` per nonzero coefficient, 1-based
/// letters, words in lexicographic order; `0` for the zero tensor.
impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, s) in &self.terms {
            for (k, c) in s.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    writeln!(f)?;
                }
                first = false;
                let letters: Vec<String> = w.0.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "{c} * h^{k} * ({})", letters.join(" "))?;
            }
        }
        Ok(())
    }
}
