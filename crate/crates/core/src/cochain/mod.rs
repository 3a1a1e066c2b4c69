//! Hochschild cochains represented as multidifferential operators.
//!
//! An `n`-cochain is stored as a finite sum
//! `Σ φ_{I_1..I_n} ∂^{I_1} ⊗ ... ⊗ ∂^{I_n}` with polynomial coefficients,
//! acting by `(p_1, ..., p_n) ↦ Σ φ_{I_1..I_n} ∂^{I_1}(p_1) ... ∂^{I_n}(p_n)`.

mod ops;
mod reconstruct;

use std::collections::btree_map::{self, BTreeMap};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiIndex, Polynomial, Rational, VarSet};

pub use reconstruct::cochain_from_evaluator;

/// Tuple of multi-indices `(I_1, ..., I_n)`, one per argument slot.
pub type Slots = Vec<MultiIndex>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Cochain {
    arity: usize,
    terms: BTreeMap<Slots, Polynomial>,
}

impl Cochain {
    pub fn zero(arity: usize) -> Self {
        Cochain {
            arity,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplication `μ = ∂^∅ ⊗ ∂^∅`.
    pub fn multiplication() -> Self {
        Cochain::monomial_term(vec![MultiIndex::empty(); 2], Polynomial::one())
    }

    /// The identity 1-cochain `p ↦ p`.
    pub fn identity() -> Self {
        Cochain::monomial_term(vec![MultiIndex::empty()], Polynomial::one())
    }

    /// A single term `coeff ∂^{I_1} ⊗ ... ⊗ ∂^{I_n}`.
    pub fn monomial_term(slots: Slots, coeff: Polynomial) -> Self {
        let mut c = Cochain::zero(slots.len());
        c.add_term(slots, &coeff);
        c
    }

    pub fn arity(&self) -> usize {
        self.arity
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

    pub fn terms(&self) -> btree_map::Iter<'_, Slots, Polynomial> {
        self.terms.iter()
    }

    pub fn coeff(&self, slots: &[MultiIndex]) -> Polynomial {
        self.terms.get(slots).cloned().unwrap_or_default()
    }

    /// Largest `|I_1| + ... + |I_n|` over stored terms; 0 for the zero cochain.
    pub fn order(&self) -> usize {
        self.terms
            .keys()
            .map(|s| s.iter().map(MultiIndex::order).sum())
            .max()
            .unwrap_or(0)
    }

    /// Largest variable index occurring in a multi-index or coefficient, plus one.
    pub fn width(&self) -> usize {
        self.terms
            .iter()
            .map(|(s, c)| {
                let from_slots = s
                    .iter()
                    .flat_map(|i| i.iter())
                    .map(|&v| v as usize + 1)
                    .max()
                    .unwrap_or(0);
                from_slots.max(c.width())
            })
            .max()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, slots: Slots, coeff: &Polynomial) {
        assert_eq!(slots.len(), self.arity, "slot count must equal arity");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * a * b` to the coefficient of `slots`.
    pub(crate) fn add_product(&mut self, slots: Slots, c: &Rational, a: &Polynomial, b: &Polynomial) {
        if c.is_zero() || a.is_zero() || b.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
            btree_map::Entry::Vacant(e) => {
                let mut p = Polynomial::zero();
                p.add_product(c, a, b);
                if !p.is_zero() {
                    e.insert(p);
                }
            }
            btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_product(c, a, b);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Cochain {
        if c.is_zero() {
            return Cochain::zero(self.arity);
        }
        Cochain {
            arity: self.arity,
            terms: self.terms.iter().map(|(s, p)| (s.clone(), p.scale(c))).collect(),
        }
    }

    /// Multiplies every coefficient by the polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial) -> Cochain {
        let mut out = Cochain::zero(self.arity);
        for (s, c) in self.terms.iter() {
            out.add_term(s.clone(), &(c * p));
        }
        out
    }

    /// Keeps the terms whose slot tuple satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[MultiIndex]) -> bool) -> Cochain {
        Cochain {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .filter(|(s, _)| keep(s))
                .map(|(s, c)| (s.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of total order exactly `k`, written `φ_(k)`.
    pub fn order_part(&self, k: usize) -> Cochain {
        self.filter(|s| s.iter().map(MultiIndex::order).sum::<usize>() == k)
    }

    /// Terms of type `(|I_1|, ..., |I_n|) = ty`.
    pub fn type_part(&self, ty: &[usize]) -> Cochain {
        self.filter(|s| s.iter().map(MultiIndex::order).eq(ty.iter().copied()))
    }

    /// Evaluates the operator on `args`.
    pub fn apply(&self, args: &[Polynomial]) -> Result<Polynomial> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: args.len(),
            });
        }
        let mut caches: Vec<HashMap<MultiIndex, Polynomial>> = vec![HashMap::new(); self.arity];
        let mut out = Polynomial::zero();
        let one = Rational::one();
        'terms: for (slots, coeff) in self.terms.iter() {
            let mut acc = coeff.clone();
            for (k, idx) in slots.iter().enumerate() {
                let d = caches[k]
                    .entry(idx.clone())
                    .or_insert_with(|| args[k].partial_derivative(idx));
                if d.is_zero() {
                    continue 'terms;
                }
                if k + 1 == slots.len() {
                    out.add_product(&one, &acc, d);
                    continue 'terms;
                }
                acc = &acc * d;
            }
            // arity 0
            out += &acc;
        }
        Ok(out)
    }

    /// Evaluates on monomial arguments, looking up only the terms that can
    /// survive (each `I_k` must divide the k-th monomial).
    pub fn apply_monomials(&self, args: &[Monomial]) -> Polynomial {
        assert_eq!(args.len(), self.arity, "arity mismatch");
        let subs: Vec<Vec<MultiIndex>> = args.iter().map(Monomial::sub_multi_indices).collect();
        let combos: usize = subs.iter().map(Vec::len).product();
        let mut out = Polynomial::zero();
        if combos <= self.terms.len() {
            let mut choice = vec![0usize; self.arity];
            let mut key: Slots = subs.iter().map(|s| s[0].clone()).collect();
            loop {
                if let Some(coeff) = self.terms.get(&key) {
                    self.accumulate_monomial_term(&mut out, &key, coeff, args);
                }
                // odometer increment
                let mut k = 0;
                loop {
                    if k == self.arity {
                        return out;
                    }
                    choice[k] += 1;
                    if choice[k] < subs[k].len() {
                        key[k] = subs[k][choice[k]].clone();
                        break;
                    }
                    choice[k] = 0;
                    key[k] = subs[k][0].clone();
                    k += 1;
                }
            }
        } else {
            for (slots, coeff) in self.terms.iter() {
                self.accumulate_monomial_term(&mut out, slots, coeff, args);
            }
            out
        }
    }

    fn accumulate_monomial_term(
        &self,
        out: &mut Polynomial,
        slots: &[MultiIndex],
        coeff: &Polynomial,
        args: &[Monomial],
    ) {
        let mut factor: u64 = 1;
        let mut mono = Monomial::one();
        for (idx, m) in slots.iter().zip(args.iter()) {
            match m.derivative(idx) {
                Some((k, dm)) => {
                    factor *= k;
                    mono = mono.mul(&dm);
                }
                None => return,
            }
        }
        out.add_scaled_shifted(&Rational::from(factor as i64), &mono, coeff);
    }

    /// Canonical text form, one line per term.
    pub fn display<'a>(&'a self, vars: &'a VarSet) -> CochainDisplay<'a> {
        CochainDisplay { cochain: self, vars }
    }
}

pub struct CochainDisplay<'a> {
    cochain: &'a Cochain,
    vars: &'a VarSet,
}

/// `coeff :: d[I1] (x) d[I2]`, tuples in lexicographic order; `0` when empty.
impl fmt::Display for CochainDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cochain.is_zero() {
            return write!(f, "0");
        }
        for (k, (slots, coeff)) in self.cochain.terms.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            if coeff.len() > 1 {
                write!(f, "({})", coeff.display(self.vars))?;
            } else {
                write!(f, "{}", coeff.display(self.vars))?;
            }
            write!(f, " ::")?;
            for (j, idx) in slots.iter().enumerate() {
                if j > 0 {
                    write!(f, " (x)")?;
                }
                write!(f, " d{idx}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars = VarSet::default_names(self.width());
        write!(f, "{}", self.display(&vars))
    }
}

impl AddAssign<&Cochain> for Cochain {
    fn add_assign(&mut self, rhs: &Cochain) {
        if self.is_zero() && self.arity != rhs.arity {
            self.arity = rhs.arity;
        }
        assert!(rhs.is_zero() || rhs.arity == self.arity, "arity mismatch in cochain sum");
        for (s, c) in rhs.terms.iter() {
            self.add_term(s.clone(), c);
        }
    }
}

impl SubAssign<&Cochain> for Cochain {
    fn sub_assign(&mut self, rhs: &Cochain) {
        *self += &-rhs;
    }
}

impl Add<&Cochain> for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Cochain {
    type Output = Cochain;
    fn add(mut self, rhs: Cochain) -> Cochain {
        self += &rhs;
        self
    }
}

impl Sub<&Cochain> for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Cochain {
    type Output = Cochain;
    fn sub(mut self, rhs: Cochain) -> Cochain {
        self -= &rhs;
        self
    }
}

impl Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        self.scale(&-Rational::one())
    }
}

impl Neg for Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        -&self
    }
}
