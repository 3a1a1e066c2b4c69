use super::{Cochain, Slots};
use crate::poly::{Monomial, Polynomial, Rational};

/// All monomials of total degree `d` in `nvars` variables, in grlex order.
pub(crate) fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(v: usize, nvars: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if v + 1 == nvars {
            exps.push(left as u16);
            out.push(Monomial::from_exponents(exps));
            exps.pop();
            return;
        }
        for e in (0..=left).rev() {
            exps.push(e as u16);
            rec(v + 1, nvars, left - e, exps, out);
            exps.pop();
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![Monomial::one()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    rec(0, nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out.sort();
    out
}

/// Tuples of `arity` monomials whose degrees sum to `total`.
pub(crate) fn monomial_tuples(nvars: usize, arity: usize, total: u32) -> Vec<Vec<Monomial>> {
    let by_degree: Vec<Vec<Monomial>> = (0..=total).map(|d| monomials_of_degree(nvars, d)).collect();
    let mut out = Vec::new();
    let mut current: Vec<Monomial> = Vec::with_capacity(arity);
    fn rec(
        k: usize,
        arity: usize,
        left: u32,
        by_degree: &[Vec<Monomial>],
        current: &mut Vec<Monomial>,
        out: &mut Vec<Vec<Monomial>>,
    ) {
        if k + 1 == arity {
            for m in &by_degree[left as usize] {
                current.push(m.clone());
                out.push(current.clone());
                current.pop();
            }
            return;
        }
        for d in 0..=left {
            for m in &by_degree[d as usize] {
                current.push(m.clone());
                rec(k + 1, arity, left - d, by_degree, current, out);
                current.pop();
            }
        }
    }
    if arity == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, arity, total, &by_degree, &mut current, &mut out);
    out
}

/// Recovers the operator form of an `arity`-linear multidifferential map of
/// order at most `max_order` from its values on monomial tuples.
///
/// Tuples are visited by increasing total degree; the coefficient of
/// `∂^{I_1} ⊗ ... ⊗ ∂^{I_n}` is what remains of `f(x_{I_1}, ..., x_{I_n})`
/// after subtracting all lower-order terms, divided by `I_1! ... I_n!`.
pub fn cochain_from_evaluator<F>(mut f: F, arity: usize, nvars: usize, max_order: usize) -> Cochain
where
    F: FnMut(&[Monomial]) -> Polynomial,
{
    let mut out = Cochain::zero(arity);
    for total in 0..=max_order as u32 {
        for tuple in monomial_tuples(nvars, arity, total) {
            let residual = &f(&tuple) - &out.apply_monomials(&tuple);
            if residual.is_zero() {
                continue;
            }
            let slots: Slots = tuple.iter().map(Monomial::to_multi_index).collect();
            let denom: u64 = slots.iter().map(|i| i.factorial()).product();
            let coeff = residual.scale(&Rational::new(1, denom as i64));
            out.add_term(slots, &coeff);
        }
    }
    out
}
