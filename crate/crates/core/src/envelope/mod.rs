//! The quantized enveloping algebra at finite order in `h`: words in the
//! generators, symmetrization, normal ordering modulo
//! `x⊗y − y⊗x − hσ{x,y}`, and the diamond relations.

mod tensor;

use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{Monomial, Polynomial, Rational, Var};
use crate::series::HSeries;
use crate::star::StarProduct;

pub use tensor::{Tensor, Word};

/// `σ(m)`: the average of all orderings of the letters of `m`.
pub fn symmetrize(m: &Monomial, order: usize) -> Tensor {
    let letters: Vec<Var> = m.to_multi_index().as_slice().to_vec();
    let words = crate::star::distinct_permutations(&letters);
    let c = Rational::new(1, words.len() as i64);
    let mut t = Tensor::zero(order);
    for w in words {
        t.add_term(Word::new(w), 0, &c);
    }
    t
}

/// `σ` extended linearly to polynomials.
pub fn symmetrize_poly(p: &Polynomial, order: usize) -> Tensor {
    let mut t = Tensor::zero(order);
    for (m, c) in p.terms() {
        t.add_scaled(&symmetrize(m, order), 0, c);
    }
    t
}

/// `σ` applied coefficientwise to a series, truncated at its own order.
pub fn symmetrize_series(s: &HSeries<Polynomial>) -> Tensor {
    let order = s.truncation_order();
    let mut t = Tensor::zero(order);
    for (k, p) in s.iter().enumerate() {
        for (m, c) in p.terms() {
            t.add_scaled(&symmetrize(m, order), k, c);
        }
    }
    t
}

/// Rewrites `t` into a combination of nondecreasing words by repeatedly
/// replacing the leftmost descent `x_j ⊗ x_i` (`j > i`) with
/// `x_i ⊗ x_j + h σ{x_j, x_i}`.
pub fn normal_order(t: &Tensor, p: &PoissonStructure) -> Tensor {
    let order = t.order();
    let n = p.dim();
    // σ{x_j, x_i} for j > i, computed once
    let mut swaps: Vec<Vec<Option<Tensor>>> = vec![vec![None; n]; n];
    let mut out = Tensor::zero(order);
    let mut pending = t.clone();
    while let Some((word, coeff)) = pending.pop_first() {
        let Some(k) = word.first_descent() else {
            out.add_series(&word, &coeff);
            continue;
        };
        let (j, i) = (word.letters()[k], word.letters()[k + 1]);
        pending.add_series(&word.swapped(k), &coeff);
        if order == 0 {
            continue;
        }
        let sigma = swaps[j as usize][i as usize]
            .get_or_insert_with(|| symmetrize_poly(p.x(j, i), order));
        if sigma.is_zero() {
            continue;
        }
        let (prefix, suffix) = word.split_pair(k);
        // h · c · prefix ⊗ σ{x_j,x_i} ⊗ suffix
        for (w, s) in sigma.terms() {
            let mid = prefix.concat(w).concat(&suffix);
            let mut shifted: HSeries<Rational> = HSeries::zero(order);
            for a in 0..order {
                if coeff[a].is_zero() {
                    continue;
                }
                for b in 0..order - a {
                    if !s[b].is_zero() {
                        shifted[a + b + 1] += &(coeff[a].clone() * &s[b]);
                    }
                }
            }
            pending.add_series(&mid, &shifted);
        }
    }
    out
}

/// `x_a⋆{x_b,x_c} − {x_b,x_c}⋆x_a + cycl(a,b,c)`.
pub fn diamond_residual(s: &StarProduct, a: Var, b: Var, c: Var) -> HSeries<Polynomial> {
    let p = s.base();
    let mut out: HSeries<Polynomial> = HSeries::zero(s.order());
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        out += &s.commutator(&Polynomial::var(x), p.x(y, z));
    }
    out
}

/// The same cyclic sum computed in the tensor algebra,
/// `x_a⊗σ{x_b,x_c} − σ{x_b,x_c}⊗x_a + cycl(a,b,c)`, then normal ordered.
pub fn diamond_tensor(p: &PoissonStructure, a: Var, b: Var, c: Var, order: usize) -> Tensor {
    let mut t = Tensor::zero(order);
    let minus = Rational::from(-1);
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        let xw = Tensor::word(Word::new(vec![x]), order);
        let s = symmetrize_poly(p.x(y, z), order);
        t.add_scaled(&xw.concat(&s), 0, &Rational::one());
        t.add_scaled(&s.concat(&xw), 0, &minus);
    }
    normal_order(&t, p)
}

/// Witness of a failing diamond relation: the order `n` at which `τ_n`
/// stops being injective and a 1-based generator triple.
pub type DiamondWitness = (usize, usize, usize, usize);

/// Checks `Δ_k = 0` for `k ≤ n` on all generator triples `a < b < c`,
/// using the third-order product. `τ_0` and `τ_1` are always injective.
pub fn tau_injective_to(p: &PoissonStructure, n: usize) -> Result<(bool, Option<DiamondWitness>)> {
    if n > 4 {
        return Err(Error::InvalidArgument(format!(
            "injectivity is checked up to order 4, not {n}"
        )));
    }
    let s = StarProduct::third_order(p);
    let dim = p.dim() as Var;
    let mut residuals = Vec::new();
    for a in 0..dim {
        for b in a + 1..dim {
            for c in b + 1..dim {
                residuals.push(((a, b, c), diamond_residual(&s, a, b, c)));
            }
        }
    }
    // τ_k is injective given τ_{k−1} iff the h^{k−1} coefficient vanishes
    for k in 2..=n {
        for ((a, b, c), r) in &residuals {
            if !r[k - 1].is_zero() {
                let w = (k, *a as usize + 1, *b as usize + 1, *c as usize + 1);
                return Ok((false, Some(w)));
            }
        }
    }
    Ok((true, None))
}
