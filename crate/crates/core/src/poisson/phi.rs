//! Poisson brackets on pairs `(u(λ), v(λ))` built from a polynomial
//! `φ(x, y)`: `{u_j, v(λ)} = φ(λ, v(λ)) [u(λ)/λ^{d-j+1}]_+ mod u(λ)`.
//!
//! Coordinates are `u_1..u_d, v_1..v_d` with
//! `u(λ) = λ^d + u_1 λ^{d-1} + ... + u_d` and `v(λ) = v_1 λ^{d-1} + ... + v_d`.
//! A polynomial in `λ` is a vector of coefficients in `ℚ[u, v]`, index = power.

use super::PoissonStructure;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational, Var, VarSet};

type LambdaPoly = Vec<Polynomial>;

fn trim(mut p: LambdaPoly) -> LambdaPoly {
    while p.last().is_some_and(Polynomial::is_zero) {
        p.pop();
    }
    p
}

fn lmul(a: &LambdaPoly, b: &LambdaPoly) -> LambdaPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let one = Rational::one();
    let mut out = vec![Polynomial::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_product(&one, x, y);
        }
    }
    trim(out)
}

fn u_var(j: usize) -> Polynomial {
    Polynomial::var((j - 1) as Var)
}

fn v_var(d: usize, j: usize) -> Polynomial {
    Polynomial::var((d + j - 1) as Var)
}

/// `u(λ)`, monic of degree `d`.
fn u_poly(d: usize) -> LambdaPoly {
    let mut u = vec![Polynomial::zero(); d + 1];
    u[d] = Polynomial::one();
    for j in 1..=d {
        u[d - j] = u_var(j);
    }
    u
}

fn v_poly(d: usize) -> LambdaPoly {
    let mut v = vec![Polynomial::zero(); d];
    for j in 1..=d {
        v[d - j] = v_var(d, j);
    }
    trim(v)
}

/// `φ(λ, v(λ))`.
fn substitute(phi: &Polynomial, d: usize) -> LambdaPoly {
    let v = v_poly(d);
    let mut out: LambdaPoly = Vec::new();
    for (m, c) in phi.terms() {
        let mut t: LambdaPoly = vec![Polynomial::zero(); m.exponent(0) as usize + 1];
        t[m.exponent(0) as usize] = Polynomial::constant(c.clone());
        for _ in 0..m.exponent(1) {
            t = lmul(&t, &v);
        }
        if out.len() < t.len() {
            out.resize(t.len(), Polynomial::zero());
        }
        for (k, p) in t.into_iter().enumerate() {
            out[k] += &p;
        }
    }
    trim(out)
}

/// `[u(λ)/λ^{d-j+1}]_+ = λ^{j-1} + u_1 λ^{j-2} + ... + u_{j-1}`.
fn polynomial_part(d: usize, j: usize) -> LambdaPoly {
    let _ = d;
    let mut out = vec![Polynomial::zero(); j];
    out[j - 1] = Polynomial::one();
    for i in 1..j {
        out[j - 1 - i] = u_var(i);
    }
    out
}

/// Remainder modulo `u(λ)` by long division from the top coefficient.
fn rem_long_division(mut p: LambdaPoly, u: &LambdaPoly) -> LambdaPoly {
    let d = u.len() - 1;
    let one = Rational::one();
    for k in (d..p.len()).rev() {
        let c = std::mem::take(&mut p[k]);
        if c.is_zero() {
            continue;
        }
        for t in 0..d {
            p[k - d + t].add_product(&-&one, &c, &u[t]);
        }
    }
    p.truncate(d);
    p.resize(d, Polynomial::zero());
    p
}

/// Remainder modulo `u(λ)` through the table of `λ^k mod u(λ)`.
fn rem_power_table(p: LambdaPoly, u: &LambdaPoly) -> LambdaPoly {
    let d = u.len() - 1;
    let one = Rational::one();
    let mut power: LambdaPoly = vec![Polynomial::zero(); d];
    let mut out: LambdaPoly = vec![Polynomial::zero(); d];
    if d == 0 {
        return out;
    }
    power[0] = Polynomial::one();
    for (k, c) in p.iter().enumerate() {
        if k > 0 {
            // λ · (λ^{k-1} mod u), then replace λ^d by -(u - λ^d)
            let top = std::mem::take(&mut power[d - 1]);
            for t in (1..d).rev() {
                power[t] = std::mem::take(&mut power[t - 1]);
            }
            power[0] = Polynomial::zero();
            if !top.is_zero() {
                for t in 0..d {
                    power[t].add_product(&-&one, &top, &u[t]);
                }
            }
        }
        if c.is_zero() {
            continue;
        }
        for t in 0..d {
            out[t].add_product(&one, c, &power[t]);
        }
    }
    out
}

fn matrix_with(phi: &Polynomial, d: usize, rem: fn(LambdaPoly, &LambdaPoly) -> LambdaPoly) -> Result<Vec<Vec<Polynomial>>> {
    if d < 1 {
        return Err(Error::InvalidArgument("from_phi needs d >= 1".into()));
    }
    if phi.max_var().is_some_and(|v| v > 1) {
        return Err(Error::InvalidArgument("phi must be a polynomial in two variables".into()));
    }
    let u = u_poly(d);
    let f = substitute(phi, d);
    let mut rows = Vec::with_capacity(d);
    for j in 1..=d {
        let r = rem(lmul(&f, &polynomial_part(d, j)), &u);
        rows.push((1..=d).map(|i| r[d - i].clone()).collect());
    }
    Ok(rows)
}

/// The block `U` with `U[j-1][i-1] = {u_j, v_i}`.
pub fn lambda_matrix(phi: &Polynomial, d: usize) -> Result<Vec<Vec<Polynomial>>> {
    matrix_with(phi, d, rem_long_division)
}

/// [`lambda_matrix`] computed with a different reduction.
pub fn lambda_matrix_by_power_table(phi: &Polynomial, d: usize) -> Result<Vec<Vec<Polynomial>>> {
    matrix_with(phi, d, rem_power_table)
}

fn structure(u: Vec<Vec<Polynomial>>) -> Result<PoissonStructure> {
    let d = u.len();
    let mut names: Vec<String> = (1..=d).map(|j| format!("u{j}")).collect();
    names.extend((1..=d).map(|j| format!("v{j}")));
    let vars = VarSet::new(names).expect("distinct names");
    let mut entries = Vec::new();
    for (j, row) in u.into_iter().enumerate() {
        for (i, p) in row.into_iter().enumerate() {
            entries.push((j as Var, (d + i) as Var, p));
        }
    }
    PoissonStructure::new(vars, entries)
}

/// Poisson structure on `u_1..u_d, v_1..v_d` with matrix `((0, U), (-U, 0))`.
/// `phi` is read as a polynomial in its first two variables `x, y`.
pub fn from_phi(phi: &Polynomial, d: usize) -> Result<PoissonStructure> {
    structure(lambda_matrix(phi, d)?)
}

pub fn from_phi_by_power_table(phi: &Polynomial, d: usize) -> Result<PoissonStructure> {
    structure(lambda_matrix_by_power_table(phi, d)?)
}
