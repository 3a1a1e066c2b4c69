//! Closed formulas in the entries `X_ij` and their derivatives, summation
//! over repeated indices written out as nested loops that skip zero factors.

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::poisson::{Derivatives, PoissonStructure, TriVector};
use crate::poly::{MultiIndex, Polynomial, Rational, Var};

fn idx(vs: &[usize]) -> MultiIndex {
    let v: Vec<Var> = vs.iter().map(|&i| i as Var).collect();
    MultiIndex::new(&v)
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

/// `π₁ = ½ X_ij ∂^i ⊗ ∂^j`.
pub fn build_pi1(p: &PoissonStructure) -> Cochain {
    p.as_cochain().scale(&r(1, 2))
}

/// `π₂ = 1/12 X_ij^l X_lk (∂^i⊗∂^{jk} + ∂^{jk}⊗∂^i) + 1/8 X_ij X_kl ∂^{ik}⊗∂^{jl}`.
pub fn build_pi2(p: &PoissonStructure) -> Cochain {
    let n = p.dim();
    let x = p.derivatives(1);
    let mut out = Cochain::zero(2);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let a = x.get(i, j, &[l]);
                if a.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let b = x.get(l, k, &[]);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_product(vec![idx(&[i]), idx(&[j, k])], &r(1, 12), a, b);
                    out.add_product(vec![idx(&[j, k]), idx(&[i])], &r(1, 12), a, b);
                }
            }
            let a = x.get(i, j, &[]);
            if a.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let b = x.get(k, l, &[]);
                    if !b.is_zero() {
                        out.add_product(vec![idx(&[i, k]), idx(&[j, l])], &r(1, 8), a, b);
                    }
                }
            }
        }
    }
    out
}

/// Adds `c · (A ⊗ B − B ⊗ A)` for a single coefficient.
fn add_antisym(out: &mut Cochain, c: &Rational, a: MultiIndex, b: MultiIndex, coeff: &Polynomial) {
    out.add_product(vec![a.clone(), b.clone()], c, coeff, &Polynomial::one());
    out.add_product(vec![b, a], &-c, coeff, &Polynomial::one());
}

/// The third-order term, `1/48` times
///
/// ```text
///   2 X_ij X_kl^i X_mn^{jk} (∂^n⊗∂^{lm} − ∂^{lm}⊗∂^n)
/// +   X_ij X_kl X_mn ∂^{ikm}⊗∂^{jln}
/// +   X_lm^k X_jn^l X_ki (∂^{mn}⊗∂^{ij} − ∂^{ij}⊗∂^{mn})
/// +   X_mn^{kl} X_lj X_ki (∂^m⊗∂^{nij} − ∂^{nij}⊗∂^m)
/// + 2 X_ij^k X_kl X_mn (∂^{jlm}⊗∂^{in} − ∂^{in}⊗∂^{jlm})
/// ```
pub fn build_pi3(p: &PoissonStructure) -> Cochain {
    let n = p.dim();
    let x = p.derivatives(2);
    let mut out = Cochain::zero(2);
    let c1 = r(1, 48);
    let c2 = r(2, 48);
    for i in 0..n {
        for j in 0..n {
            let xij = x.get(i, j, &[]);
            if xij.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    // first line
                    let xkl_i = x.get(k, l, &[i]);
                    if !xkl_i.is_zero() {
                        let ab = xij * xkl_i;
                        for m in 0..n {
                            for nn in 0..n {
                                let c = x.get(m, nn, &[j, k]);
                                if !c.is_zero() {
                                    add_antisym(&mut out, &c2, idx(&[nn]), idx(&[l, m]), &(&ab * c));
                                }
                            }
                        }
                    }
                    // second line
                    let xkl = x.get(k, l, &[]);
                    if !xkl.is_zero() {
                        let ab = xij * xkl;
                        for m in 0..n {
                            for nn in 0..n {
                                let c = x.get(m, nn, &[]);
                                if !c.is_zero() {
                                    out.add_product(vec![idx(&[i, k, m]), idx(&[j, l, nn])], &c1, &ab, c);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let xki = x.get(k, i, &[]);
            if xki.is_zero() {
                continue;
            }
            for l in 0..n {
                for m in 0..n {
                    // third line: X_lm^k X_jn^l X_ki
                    let xlm_k = x.get(l, m, &[k]);
                    if !xlm_k.is_zero() {
                        let ab = xlm_k * xki;
                        for j in 0..n {
                            for nn in 0..n {
                                let c = x.get(j, nn, &[l]);
                                if !c.is_zero() {
                                    add_antisym(&mut out, &c1, idx(&[m, nn]), idx(&[i, j]), &(&ab * c));
                                }
                            }
                        }
                    }
                }
            }
            // fourth line: X_mn^{kl} X_lj X_ki
            for l in 0..n {
                for j in 0..n {
                    let xlj = x.get(l, j, &[]);
                    if xlj.is_zero() {
                        continue;
                    }
                    let ab = xlj * xki;
                    for m in 0..n {
                        for nn in 0..n {
                            let c = x.get(m, nn, &[k, l]);
                            if !c.is_zero() {
                                add_antisym(&mut out, &c1, idx(&[m]), idx(&[nn, i, j]), &(&ab * c));
                            }
                        }
                    }
                }
            }
        }
    }
    // fifth line: 2 X_ij^k X_kl X_mn
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let xij_k = x.get(i, j, &[k]);
                if xij_k.is_zero() {
                    continue;
                }
                for l in 0..n {
                    let xkl = x.get(k, l, &[]);
                    if xkl.is_zero() {
                        continue;
                    }
                    let ab = xij_k * xkl;
                    for m in 0..n {
                        for nn in 0..n {
                            let c = x.get(m, nn, &[]);
                            if !c.is_zero() {
                                add_antisym(&mut out, &c2, idx(&[j, l, m]), idx(&[i, nn]), &(&ab * c));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `Z_ab = ½ X_ab^{ik} X_ij^l X_kl^j − X_ai^{jk} X_bj^{il} X_kl`, as a dense
/// `n × n` matrix.
pub fn correction_matrix(p: &PoissonStructure) -> Vec<Vec<Polynomial>> {
    let n = p.dim();
    let x = p.derivatives(2);
    let half = r(1, 2);
    let minus_one = r(-1, 1);
    // ½ X_ij^l X_kl^j, contracted over j, l; depends on (i, k)
    let mut s = vec![Polynomial::zero(); n * n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let a = x.get(i, j, &[l]);
                    let b = x.get(k, l, &[j]);
                    if !a.is_zero() && !b.is_zero() {
                        s[i * n + k].add_product(&half, a, b);
                    }
                }
            }
        }
    }
    let mut z = vec![vec![Polynomial::zero(); n]; n];
    #[allow(clippy::needless_range_loop)]
    for a in 0..n {
        for b in 0..n {
            let mut acc = Polynomial::zero();
            for i in 0..n {
                for k in 0..n {
                    let d = x.get(a, b, &[i, k]);
                    if !d.is_zero() && !s[i * n + k].is_zero() {
                        acc.add_product(&Rational::one(), d, &s[i * n + k]);
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let f = x.get(a, i, &[j, k]);
                        if f.is_zero() {
                            continue;
                        }
                        for l in 0..n {
                            let g = x.get(b, j, &[i, l]);
                            let h = x.get(k, l, &[]);
                            if !g.is_zero() && !h.is_zero() {
                                acc.add_product(&minus_one, &(f * g), h);
                            }
                        }
                    }
                }
            }
            z[a][b] = acc;
        }
    }
    z
}

/// `φ₃ = 1/48 Z_ij ∂^i ⊗ ∂^j`.
pub fn build_phi3_correction(p: &PoissonStructure) -> Cochain {
    biderivation(&correction_matrix(p), &r(1, 48))
}

/// `c · M_ij ∂^i ⊗ ∂^j`.
pub fn biderivation(m: &[Vec<Polynomial>], c: &Rational) -> Cochain {
    let mut out = Cochain::zero(2);
    for (i, row) in m.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            if !e.is_zero() {
                out.add_term(vec![idx(&[i]), idx(&[j])], &e.scale(c));
            }
        }
    }
    out
}

/// `2 X_ij X_kl^i X_ab^{km} X_cm^{jl} + X_ij X_kl X_ab^{ikm} X_cm^{jl}`,
/// one cyclic summand of the obstruction.
fn obstruction_summand(x: &Derivatives, a: usize, b: usize, c: usize) -> Polynomial {
    let n = x.dim();
    let two = r(2, 1);
    let one = Rational::one();
    let mut out = Polynomial::zero();
    for i in 0..n {
        for j in 0..n {
            let xij = x.get(i, j, &[]);
            if xij.is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    let xkl_i = x.get(k, l, &[i]);
                    let xkl = x.get(k, l, &[]);
                    if xkl_i.is_zero() && xkl.is_zero() {
                        continue;
                    }
                    for m in 0..n {
                        let xcm = x.get(c, m, &[j, l]);
                        if xcm.is_zero() {
                            continue;
                        }
                        let first = x.get(a, b, &[k, m]);
                        if !xkl_i.is_zero() && !first.is_zero() {
                            out.add_product(&two, &(xij * xkl_i), &(first * xcm));
                        }
                        let second = x.get(a, b, &[i, k, m]);
                        if !xkl.is_zero() && !second.is_zero() {
                            out.add_product(&one, &(xij * xkl), &(second * xcm));
                        }
                    }
                }
            }
        }
    }
    out
}

fn cyclic_sum(a: usize, b: usize, c: usize, mut f: impl FnMut(usize, usize, usize) -> Polynomial) -> Polynomial {
    f(a, b, c) + f(b, c, a) + f(c, a, b)
}

/// Left-hand side of the fourth-order obstruction, as components in the
/// basis `∂^a∧∂^b∧∂^c = 1/6 Σ_λ sgn(λ) ∂^{λ(a)}⊗∂^{λ(b)}⊗∂^{λ(c)}`.
///
/// The summed expression `O_abc` is totally antisymmetric, so the tensor
/// `O_abc ∂^a⊗∂^b⊗∂^c` has component `6 O_abc` on `∂^a∧∂^b∧∂^c`.
pub fn obstruction(p: &PoissonStructure) -> TriVector {
    let n = p.dim();
    let x = p.derivatives(3);
    let six = r(6, 1);
    let mut out = TriVector::zero();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let v = cyclic_sum(a, b, c, |a, b, c| obstruction_summand(&x, a, b, c));
                out.set(a as Var, b as Var, c as Var, v.scale(&six));
            }
        }
    }
    out
}

/// `X_mc Z_ab^m + Z_mc X_ab^m + 6 Y_mc Y_ab^m − X_ij X_kl X_ab^{ikm} X_cm^{jl}
///  − 2 X_ij X_kl^i X_ab^{km} X_cm^{jl} + cycl(a, b, c)` for antisymmetric
/// `Y`, `Z` given as dense `n × n` matrices.
pub fn obssol_residual(
    p: &PoissonStructure,
    y: &[Vec<Polynomial>],
    z: &[Vec<Polynomial>],
    a: Var,
    b: Var,
    c: Var,
) -> Result<Polynomial> {
    let n = p.dim();
    for (what, m) in [("Y", y), ("Z", z)] {
        if m.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidArgument(format!("{what} must be a {n}x{n} matrix")));
        }
        if (0..n).any(|i| (0..n).any(|j| m[i][j] != -&m[j][i])) {
            return Err(Error::WrongSymmetry { expected: "antisymmetric" });
        }
    }
    let x = p.derivatives(3);
    let one = Rational::one();
    let six = r(6, 1);
    let v = cyclic_sum(a as usize, b as usize, c as usize, |a, b, c| {
        let mut t = Polynomial::zero();
        for m in 0..n {
            let v = m as Var;
            t.add_product(&one, x.get(m, c, &[]), &z[a][b].derivative(v));
            t.add_product(&one, &z[m][c], x.get(a, b, &[m]));
            t.add_product(&six, &y[m][c], &y[a][b].derivative(v));
        }
        t - obstruction_summand(&x, a, b, c)
    });
    Ok(v)
}

/// `Σ_{k≤order} h^k/(2^k k!) X_{k1 l1}…X_{kk lk} ∂^{k1…kk} ⊗ ∂^{l1…lk}`, the
/// `k`-th entry of the returned vector being the `h^k` cochain.
pub fn moyal_terms(p: &PoissonStructure, order: usize) -> Result<Vec<Cochain>> {
    if !p.is_constant() {
        return Err(Error::NotConstant {
            what: "Poisson bracket".into(),
        });
    }
    let n = p.dim();
    let pairs: Vec<(Var, Var, Rational)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let e = p.x(i as Var, j as Var);
            (!e.is_zero()).then(|| (i as Var, j as Var, e.constant_term()))
        })
        .collect();
    let mut out = vec![Cochain::multiplication()];
    // (left index, right index, coefficient) accumulated over k-fold products
    let mut level: std::collections::BTreeMap<(MultiIndex, MultiIndex), Rational> =
        std::collections::BTreeMap::new();
    level.insert((MultiIndex::empty(), MultiIndex::empty()), Rational::one());
    let mut scale = Rational::one();
    for k in 1..=order {
        let mut next = std::collections::BTreeMap::new();
        for ((li, ri), c) in &level {
            for (i, j, x) in &pairs {
                let key = (li.push(*i), ri.push(*j));
                let e: &mut Rational = next.entry(key).or_insert_with(Rational::zero);
                *e += &(c * x);
            }
        }
        next.retain(|_, c: &mut Rational| !c.is_zero());
        level = next;
        scale = &scale * &r(1, 2 * k as i64);
        let mut term = Cochain::zero(2);
        for ((li, ri), c) in &level {
            term.add_term(vec![li.clone(), ri.clone()], &Polynomial::constant(c * &scale));
        }
        out.push(term);
    }
    Ok(out)
}
