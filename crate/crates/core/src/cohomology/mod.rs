//! Constructive solutions of `δλ = φ` and `δφ = ψ` on a polynomial algebra.
//!
//! Each solver evaluates a recursion on monomial arguments (memoized per
//! call), rebuilds the operator form with [`cochain_from_evaluator`] and
//! checks that the coboundary of the result is the input. All free choices
//! (values on basis elements and ordered basis pairs) are set to zero.

use std::collections::HashMap;

use crate::cochain::{cochain_from_evaluator, Cochain};
use crate::error::{Error, Result};
use crate::poisson::PoissonStructure;
use crate::poly::{Monomial, Polynomial, Rational};
use crate::star::{build_phi3_correction, build_pi1, build_pi2, build_pi3, StarProduct};

/// Reconstruction bound: the normalized solution may need first-order
/// terms even when the input has order zero (`δλ = μ` forces
/// `λ = id − Σ x_i ∂^i`).
fn bound(c: &Cochain) -> usize {
    c.order().max(1)
}

/// The 1-cochain `p ↦ Σ c ∂^I(p)` formed by the terms of `c` whose slots
/// other than `slot` are all empty.
fn slot_operator(c: &Cochain, slot: usize) -> Cochain {
    let mut out = Cochain::zero(1);
    for (s, p) in c.terms() {
        if s.iter().enumerate().all(|(k, i)| k == slot || i.is_empty()) {
            out.add_term(vec![s[slot].clone()], p);
        }
    }
    out
}

fn require_cocycle(c: &Cochain) -> Result<()> {
    if c.coboundary().is_zero() {
        Ok(())
    } else {
        Err(Error::NotCocycle)
    }
}

fn verify(out: Cochain, input: &Cochain) -> Result<Cochain> {
    if out.coboundary() == *input {
        Ok(out)
    } else {
        Err(Error::SolverInconsistency)
    }
}

/// For a symmetric 2-cocycle `φ`, a 1-cochain `λ` with `δλ = φ` and
/// `λ(x_i) = 0`. Variables are those occurring in `φ`.
pub fn solve_sym2(phi: &Cochain) -> Result<Cochain> {
    solve_sym2_in(phi, phi.width())
}

/// [`solve_sym2`] over the first `nvars` variables.
pub fn solve_sym2_in(phi: &Cochain, nvars: usize) -> Result<Cochain> {
    if phi.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: phi.arity(),
        });
    }
    if !phi.is_symmetric() {
        return Err(Error::WrongSymmetry { expected: "symmetric" });
    }
    require_cocycle(phi)?;
    let one = Monomial::one();
    let phi11 = phi.apply_monomials(&[one.clone(), one.clone()]);
    let mut memo: HashMap<Monomial, Polynomial> = HashMap::new();

    // λ(x m') = x λ(m') − φ(x, m'), x the smallest variable of the monomial
    fn lambda(
        m: &Monomial,
        phi: &Cochain,
        phi11: &Polynomial,
        memo: &mut HashMap<Monomial, Polynomial>,
    ) -> Polynomial {
        if m.is_one() {
            return phi11.clone();
        }
        if m.degree() == 1 {
            return Polynomial::zero();
        }
        if let Some(v) = memo.get(m) {
            return v.clone();
        }
        let x = Monomial::var(m.min_var().expect("nonconstant"));
        let rest = m.div(&x).expect("x divides m");
        let v = lambda(&rest, phi, phi11, memo).mul_monomial(&x) - phi.apply_monomials(&[x, rest]);
        memo.insert(m.clone(), v.clone());
        v
    }

    let out = cochain_from_evaluator(
        |ms| lambda(&ms[0], phi, &phi11, &mut memo),
        1,
        nvars,
        bound(phi),
    );
    verify(out, phi)
}

/// For a flip symmetric 3-cocycle `ψ`, an antisymmetric `φ` with `δφ = ψ`
/// and `φ(x_i, x_j) = 0`.
pub fn solve_flip_sym3(psi: &Cochain) -> Result<Cochain> {
    solve_flip_sym3_in(psi, psi.width())
}

pub fn solve_flip_sym3_in(psi: &Cochain, nvars: usize) -> Result<Cochain> {
    if psi.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: psi.arity(),
        });
    }
    if !psi.is_flip_symmetric() {
        return Err(Error::WrongSymmetry { expected: "flip symmetric" });
    }
    require_cocycle(psi)?;

    // θ(p, q) = g(p) q − p g(q) with g(p) = ψ(1, 1, p); then ψ + δθ
    // vanishes as soon as one argument is constant.
    let g = slot_operator(psi, 2);
    let id = Cochain::identity();
    let theta = &g.tensor(&id) - &id.tensor(&g);
    let reduced = psi + &theta.coboundary();

    type Memo = HashMap<(Monomial, Monomial), Polynomial>;
    // 2φ(pq, r) = 2pφ(q, r) + 2qφ(p, r) − ψ(p, q, r) + ψ(p, r, q) − ψ(r, p, q)
    fn phi(a: &Monomial, b: &Monomial, psi: &Cochain, memo: &mut Memo) -> Polynomial {
        if a.is_one() || b.is_one() || (a.degree() == 1 && b.degree() == 1) {
            return Polynomial::zero();
        }
        if a.degree() == 1 {
            return -phi(b, a, psi, memo);
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let x = Monomial::var(a.min_var().expect("nonconstant"));
        let q = a.div(&x).expect("x divides a");
        let r = b;
        let mut v = phi(&q, r, psi, memo).mul_monomial(&x).scale(&Rational::from(2));
        v += &phi(&x, r, psi, memo).mul_monomial(&q).scale(&Rational::from(2));
        v -= &psi.apply_monomials(&[x.clone(), q.clone(), r.clone()]);
        v += &psi.apply_monomials(&[x.clone(), r.clone(), q.clone()]);
        v -= &psi.apply_monomials(&[r.clone(), x.clone(), q.clone()]);
        let v = v.scale(&Rational::new(1, 2));
        memo.insert(key, v.clone());
        v
    }

    let mut memo = Memo::new();
    let solved = cochain_from_evaluator(
        |ms| phi(&ms[0], &ms[1], &reduced, &mut memo),
        2,
        nvars,
        bound(psi),
    );
    let out = &solved - &theta;
    if !out.is_antisymmetric() && !out.is_zero() {
        return Err(Error::SolverInconsistency);
    }
    verify(out, psi)
}

/// One-based, sorted variable triple at which `Jψ` does not vanish: the
/// first `(1,1,1)` term if there is one, otherwise the first term, with `0`
/// standing for an empty slot.
pub fn jacobi_witness(psi: &Cochain) -> Result<Option<(usize, usize, usize)>> {
    let j = psi.jacobi_map()?;
    if j.is_zero() {
        return Ok(None);
    }
    let pick = j
        .terms()
        .find(|(s, _)| s.iter().all(|i| i.order() == 1))
        .or_else(|| j.terms().next())
        .map(|(s, _)| s.clone())
        .expect("nonzero");
    let mut w: Vec<usize> = pick
        .iter()
        .map(|i| i.as_slice().first().map_or(0, |&v| v as usize + 1))
        .collect();
    w.sort_unstable();
    Ok(Some((w[0], w[1], w[2])))
}

type PairMemo = HashMap<(Monomial, Monomial), Polynomial>;

/// `φ(x p, q) = x φ(p, q) + ψ(q, p, x)` with `x` the smallest variable of
/// `m1 m2`, `φ(x, p) = 0` for `x ≤ p` and `φ(1, p) = 0`.
fn sym_phi(a: &Monomial, b: &Monomial, psi: &Cochain, memo: &mut PairMemo) -> Polynomial {
    if a.is_one() || b.is_one() {
        return Polynomial::zero();
    }
    let xa = a.min_var().expect("nonconstant");
    let xb = b.min_var().expect("nonconstant");
    if xb < xa {
        return sym_phi(b, a, psi, memo);
    }
    if a.degree() == 1 {
        return Polynomial::zero();
    }
    let key = (a.clone(), b.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let x = Monomial::var(xa);
    let p = a.div(&x).expect("x divides a");
    let mut v = sym_phi(&p, b, psi, memo).mul_monomial(&x);
    v += &psi.apply_monomials(&[b.clone(), p.clone(), x.clone()]);
    memo.insert(key, v.clone());
    v
}

/// Symmetric `θ` absorbing `ψ(p, 1, 1)`: `θ(p, q) = −g(p) q − p g(q)` with
/// `g(p) = ψ(p, 1, 1)`.
fn sym_theta(psi: &Cochain) -> Cochain {
    let g = slot_operator(psi, 0);
    let id = Cochain::identity();
    -(&g.tensor(&id) + &id.tensor(&g))
}

fn solve_antisym_recursion(psi: &Cochain, nvars: usize, order: usize) -> Cochain {
    let theta = sym_theta(psi);
    let reduced = psi - &theta.coboundary();
    let mut memo = PairMemo::new();
    let solved = cochain_from_evaluator(|ms| sym_phi(&ms[0], &ms[1], &reduced, &mut memo), 2, nvars, order);
    &solved + &theta
}

/// For a flip antisymmetric 3-cocycle with `Jψ = 0`, a symmetric `φ` with
/// `δφ = ψ` and `φ(x, p) = 0` whenever `x ≤ p`.
pub fn solve_flip_antisym3(psi: &Cochain) -> Result<Cochain> {
    solve_flip_antisym3_in(psi, psi.width())
}

pub fn solve_flip_antisym3_in(psi: &Cochain, nvars: usize) -> Result<Cochain> {
    if psi.arity() != 3 {
        return Err(Error::ArityMismatch {
            expected: 3,
            found: psi.arity(),
        });
    }
    if !psi.is_flip_antisymmetric() {
        return Err(Error::WrongSymmetry {
            expected: "flip antisymmetric",
        });
    }
    require_cocycle(psi)?;
    if let Some(witness) = jacobi_witness(psi)? {
        return Err(Error::JacobiObstruction { witness });
    }
    let out = solve_antisym_recursion(psi, nvars, bound(psi));
    if !out.is_symmetric() {
        return Err(Error::SolverInconsistency);
    }
    verify(out, psi)
}

/// The recursion of [`solve_flip_antisym3`] run without any precondition
/// or result check. When `Jψ ≠ 0` the output is a symmetric cochain whose
/// coboundary differs from `ψ`.
pub fn solve_flip_antisym3_unchecked(psi: &Cochain, nvars: usize) -> Cochain {
    solve_antisym_recursion(psi, nvars, bound(psi))
}

/// `[π₁, π₃ + φ₃] + ½[π₂, π₂]`, or without `φ₃` when `corrected` is false.
pub fn pi4_source(p: &PoissonStructure, corrected: bool) -> Cochain {
    let pi1 = build_pi1(p);
    let pi2 = build_pi2(p);
    let mut pi3 = build_pi3(p);
    if corrected {
        pi3 += &build_phi3_correction(p);
    }
    let mut out = pi1.gerstenhaber(&pi3);
    out += &pi2.gerstenhaber(&pi2).scale(&Rational::new(1, 2));
    out
}

/// Symmetric `π₄` with `δπ₄ = [π₁, π₃ + φ₃] + ½[π₂, π₂]`.
pub fn build_pi4(p: &PoissonStructure) -> Result<Cochain> {
    solve_flip_antisym3_in(&pi4_source(p, true), p.dim())
}

/// `π₄` from the same recursion applied to the uncorrected source; only a
/// genuine solution when the obstruction vanishes.
pub fn naive_pi4(p: &PoissonStructure) -> Cochain {
    solve_flip_antisym3_unchecked(&pi4_source(p, false), p.dim())
}

/// The corrected third-order product extended by [`build_pi4`].
pub fn fourth_order(p: &PoissonStructure) -> Result<StarProduct> {
    StarProduct::corrected_third_order(p).extend(build_pi4(p)?)
}

/// The uncorrected third-order product extended by [`naive_pi4`].
pub fn naive_fourth_order(p: &PoissonStructure) -> Result<StarProduct> {
    StarProduct::third_order(p).extend(naive_pi4(p))
}
