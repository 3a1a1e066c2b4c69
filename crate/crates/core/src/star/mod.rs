//! Star products `p ⋆ q = pq + h π₁(p,q) + h² π₂(p,q) + ...` truncated at a
//! finite order, the explicit third-order terms, the fourth-order
//! obstruction and its correction.

mod formulas;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{Monomial, Polynomial, Rational, Var};
use crate::series::HSeries;

pub use formulas::{
    biderivation, build_phi3_correction, build_pi1, build_pi2, build_pi3, correction_matrix,
    moyal_terms, obssol_residual, obstruction,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarProduct {
    base: PoissonStructure,
    /// `π₀ = μ, π₁, ..., π_n`.
    terms: Vec<Cochain>,
}

impl StarProduct {
    /// Checks `π₀ = μ`, that every term has arity 2 and that `π_k` is
    /// symmetric for even `k`, antisymmetric for odd `k`.
    pub fn new(base: PoissonStructure, terms: Vec<Cochain>) -> Result<Self> {
        if terms.first() != Some(&Cochain::multiplication()) {
            return Err(Error::InvalidArgument("the h^0 term must be the multiplication".into()));
        }
        for (k, t) in terms.iter().enumerate() {
            if t.arity() != 2 {
                return Err(Error::ArityMismatch {
                    expected: 2,
                    found: t.arity(),
                });
            }
            if k % 2 == 0 && !t.is_symmetric() {
                return Err(Error::WrongSymmetry { expected: "symmetric" });
            }
            if k % 2 == 1 && !t.is_antisymmetric() && !t.is_zero() {
                return Err(Error::WrongSymmetry { expected: "antisymmetric" });
            }
        }
        Ok(StarProduct { base, terms })
    }

    /// `μ + h π₁ + h² π₂ + h³ π₃` from the closed formulas.
    pub fn third_order(p: &PoissonStructure) -> Self {
        StarProduct {
            base: p.clone(),
            terms: vec![
                Cochain::multiplication(),
                build_pi1(p),
                build_pi2(p),
                build_pi3(p),
            ],
        }
    }

    /// [`StarProduct::third_order`] with `π₃` replaced by `π₃ + φ₃`.
    pub fn corrected_third_order(p: &PoissonStructure) -> Self {
        let mut s = StarProduct::third_order(p);
        s.terms[3] += &build_phi3_correction(p);
        s
    }

    /// The closed-form product for a constant bracket.
    pub fn moyal(p: &PoissonStructure, order: usize) -> Result<Self> {
        Ok(StarProduct {
            base: p.clone(),
            terms: moyal_terms(p, order)?,
        })
    }

    pub fn base(&self) -> &PoissonStructure {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, k: usize) -> &Cochain {
        &self.terms[k]
    }

    pub fn terms(&self) -> &[Cochain] {
        &self.terms
    }

    pub fn truncate(&self, order: usize) -> StarProduct {
        StarProduct {
            base: self.base.clone(),
            terms: self.terms[..=order.min(self.order())].to_vec(),
        }
    }

    /// Appends the next term `π_{n+1}`, checking its parity.
    pub fn extend(&self, next: Cochain) -> Result<StarProduct> {
        let mut terms = self.terms.clone();
        terms.push(next);
        StarProduct::new(self.base.clone(), terms)
    }

    /// `p ⋆ q` with `k`-th coefficient `π_k(p, q)`.
    pub fn apply(&self, p: &Polynomial, q: &Polynomial) -> HSeries<Polynomial> {
        let args = [p.clone(), q.clone()];
        HSeries::from_coeffs(
            self.terms
                .iter()
                .map(|t| t.apply(&args).expect("arity 2"))
                .collect(),
        )
    }

    /// Product of two series, truncated at the order of the product.
    pub fn apply_series(&self, a: &HSeries<Polynomial>, b: &HSeries<Polynomial>) -> HSeries<Polynomial> {
        let n = self.order();
        let mut out: HSeries<Polynomial> = HSeries::zero(n);
        for (i, ai) in a.iter().enumerate().take(n + 1) {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
                if bj.is_zero() {
                    continue;
                }
                let args = [ai.clone(), bj.clone()];
                for (k, t) in self.terms.iter().enumerate().take(n + 1 - i - j) {
                    out[i + j + k] += &t.apply(&args).expect("arity 2");
                }
            }
        }
        out
    }

    fn lift(&self, p: &Polynomial) -> HSeries<Polynomial> {
        HSeries::constant(p.clone(), self.order())
    }

    /// `(p⋆q)⋆r − p⋆(q⋆r)` modulo `h^{n+1}`.
    pub fn associator_residual(&self, p: &Polynomial, q: &Polynomial, r: &Polynomial) -> HSeries<Polynomial> {
        let left = self.apply_series(&self.apply(p, q), &self.lift(r));
        let right = self.apply_series(&self.lift(p), &self.apply(q, r));
        left.sub(&right)
    }

    /// `p⋆q − q⋆p`.
    pub fn commutator(&self, p: &Polynomial, q: &Polynomial) -> HSeries<Polynomial> {
        self.apply(p, q).sub(&self.apply(q, p))
    }

    /// `σ_⋆(m) − m`, where `σ_⋆(a_1 ⋯ a_n) = 1/n! Σ_p a_{p(1)} ⋆ ⋯ ⋆ a_{p(n)}`.
    pub fn balanced_residual(&self, m: &Monomial) -> HSeries<Polynomial> {
        let letters: Vec<Var> = m.to_multi_index().as_slice().to_vec();
        let n = self.order();
        let mut out: HSeries<Polynomial> = HSeries::zero(n);
        if letters.len() <= 1 {
            return out;
        }
        // distinct arrangements of the multiset, each standing for
        // (multiplicity product) permutations
        let arrangements = distinct_permutations(&letters);
        let total = arrangements.len();
        for word in &arrangements {
            let mut acc = self.lift(&Polynomial::var(word[0]));
            for &v in &word[1..] {
                acc = self.apply_series(&acc, &self.lift(&Polynomial::var(v)));
            }
            out += &acc;
        }
        let inv = Rational::new(1, total as i64);
        let mut res: HSeries<Polynomial> = HSeries::zero(n);
        for k in 0..=n {
            res[k] = out[k].scale(&inv);
        }
        res[0] -= &Polynomial::monomial(m.clone());
        res
    }
}

/// Distinct orderings of a multiset; each occurs `Π mult!` times among all
/// `n!` permutations, so averaging over them equals averaging over `S_n`.
pub(crate) fn distinct_permutations(letters: &[Var]) -> Vec<Vec<Var>> {
    fn rec(counts: &mut Vec<(Var, usize)>, cur: &mut Vec<Var>, len: usize, out: &mut Vec<Vec<Var>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            cur.push(counts[i].0);
            rec(counts, cur, len, out);
            cur.pop();
            counts[i].1 += 1;
        }
    }
    let mut counts: Vec<(Var, usize)> = Vec::new();
    for &v in letters {
        match counts.iter_mut().find(|(w, _)| *w == v) {
            Some(c) => c.1 += 1,
            None => counts.push((v, 1)),
        }
    }
    let mut out = Vec::new();
    rec(&mut counts, &mut Vec::new(), letters.len(), &mut out);
    out
}

pub fn star_apply(s: &StarProduct, p: &Polynomial, q: &Polynomial) -> HSeries<Polynomial> {
    s.apply(p, q)
}

pub fn associator_residual(s: &StarProduct, p: &Polynomial, q: &Polynomial, r: &Polynomial) -> HSeries<Polynomial> {
    s.associator_residual(p, q, r)
}

pub fn balanced_residual(s: &StarProduct, m: &Monomial) -> HSeries<Polynomial> {
    s.balanced_residual(m)
}

pub fn moyal_constant(p: &PoissonStructure, order: usize) -> Result<StarProduct> {
    StarProduct::moyal(p, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_permutations() {
        assert_eq!(distinct_permutations(&[0, 0, 1]).len(), 3);
        assert_eq!(distinct_permutations(&[0, 1, 2]).len(), 6);
        assert_eq!(distinct_permutations(&[2, 2]), vec![vec![2, 2]]);
    }
}
