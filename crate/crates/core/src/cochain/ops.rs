//! Coboundary, Gerstenhaber bracket, Jacobi map and symmetry splittings,
//! all computed directly on the operator representation.

use std::collections::HashMap;

use super::{Cochain, Slots};
use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial, Rational};

fn sign(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

impl Cochain {
    /// Hochschild coboundary `δφ`, expanded term by term with the Leibniz
    /// splitting `∂^I(pq) = Σ_{I'+I''=I} ∂^{I'}p ∂^{I''}q`.
    pub fn coboundary(&self) -> Cochain {
        let n = self.arity;
        let mut out = Cochain::zero(n + 1);
        let empty = MultiIndex::empty();
        for (slots, c) in self.terms.iter() {
            let mut first: Slots = Vec::with_capacity(n + 1);
            first.push(empty.clone());
            first.extend(slots.iter().cloned());
            out.add_term(first, c);

            for k in 0..n {
                let s = sign(k % 2 == 0);
                for (parts, count) in slots[k].distributions(2) {
                    let mut t: Slots = Vec::with_capacity(n + 1);
                    t.extend(slots[..k].iter().cloned());
                    t.extend(parts);
                    t.extend(slots[k + 1..].iter().cloned());
                    out.add_product(t, &(&s * &Rational::from(count as i64)), c, &Polynomial::one());
                }
            }

            let mut last: Slots = slots.clone();
            last.push(empty.clone());
            out.add_product(last, &sign(n.is_multiple_of(2)), c, &Polynomial::one());
        }
        out
    }

    /// Evaluates `δφ(p_1, ..., p_{n+1})` from the defining formula
    /// `p_1 φ(p_2..) + Σ (-1)^k φ(.., p_k p_{k+1}, ..) + (-1)^{n+1} φ(p_1..p_n) p_{n+1}`.
    pub fn coboundary_at(&self, args: &[Polynomial]) -> Result<Polynomial> {
        let n = self.arity;
        if args.len() != n + 1 {
            return Err(Error::ArityMismatch {
                expected: n + 1,
                found: args.len(),
            });
        }
        let mut out = &args[0] * &self.apply(&args[1..])?;
        for k in 0..n {
            let mut merged: Vec<Polynomial> = Vec::with_capacity(n);
            merged.extend(args[..k].iter().cloned());
            merged.push(&args[k] * &args[k + 1]);
            merged.extend(args[k + 2..].iter().cloned());
            let v = self.apply(&merged)?;
            if k % 2 == 0 {
                out -= &v;
            } else {
                out += &v;
            }
        }
        let last = &self.apply(&args[..n])? * &args[n];
        if n.is_multiple_of(2) {
            out -= &last;
        } else {
            out += &last;
        }
        Ok(out)
    }

    /// Cup product `(α⊗β)(p_1..p_{m+n}) = α(p_1..p_m) β(p_{m+1}..p_{m+n})`.
    pub fn tensor(&self, other: &Cochain) -> Cochain {
        let mut out = Cochain::zero(self.arity + other.arity);
        let one = Rational::one();
        for (s1, c1) in self.terms.iter() {
            for (s2, c2) in other.terms.iter() {
                let mut s = s1.clone();
                s.extend(s2.iter().cloned());
                out.add_product(s, &one, c1, c2);
            }
        }
        out
    }

    /// Partial composition `φ ∘_k ψ`: insert `ψ(p_k, ..., p_{k+n-1})` into the
    /// `k`-th (zero-based) slot of `φ`.
    pub fn compose_at(&self, k: usize, other: &Cochain) -> Cochain {
        assert!(k < self.arity, "slot out of range");
        let n = other.arity;
        let mut out = Cochain::zero(self.arity + n - 1);
        let mut dist_cache: HashMap<MultiIndex, Vec<(Vec<MultiIndex>, u64)>> = HashMap::new();
        let mut deriv_cache: HashMap<(usize, MultiIndex), Polynomial> = HashMap::new();
        let others: Vec<(&Slots, &Polynomial)> = other.terms.iter().collect();
        for (s1, c1) in self.terms.iter() {
            let dists = dist_cache
                .entry(s1[k].clone())
                .or_insert_with(|| s1[k].distributions(n + 1))
                .clone();
            for (j, (s2, c2)) in others.iter().enumerate() {
                for (parts, count) in dists.iter() {
                    let dc2 = deriv_cache
                        .entry((j, parts[0].clone()))
                        .or_insert_with(|| c2.partial_derivative(&parts[0]));
                    if dc2.is_zero() {
                        continue;
                    }
                    let mut slots: Slots = Vec::with_capacity(out.arity);
                    slots.extend(s1[..k].iter().cloned());
                    for (jj, idx) in s2.iter().enumerate() {
                        slots.push(idx.join(&parts[jj + 1]));
                    }
                    slots.extend(s1[k + 1..].iter().cloned());
                    out.add_product(slots, &Rational::from(*count as i64), c1, dc2);
                }
            }
        }
        out
    }

    /// Gerstenhaber bracket `[φ, ψ]` of an `m`-cochain and an `n`-cochain.
    pub fn gerstenhaber(&self, other: &Cochain) -> Cochain {
        let m = self.arity;
        let n = other.arity;
        let mut out = Cochain::zero(m + n - 1);
        for k in 0..m {
            let c = self.compose_at(k, other);
            if (k * (n - 1)).is_multiple_of(2) {
                out += &c;
            } else {
                out -= &c;
            }
        }
        let outer_negative = ((m - 1) * (n - 1)).is_multiple_of(2);
        for k in 0..n {
            let c = other.compose_at(k, self);
            let inner_negative = (k * (m - 1)) % 2 == 1;
            if outer_negative != inner_negative {
                out -= &c;
            } else {
                out += &c;
            }
        }
        out
    }

    /// `χ(p_1..p_n) = φ(p_{σ(1)}, ..., p_{σ(n)})` for a permutation `σ`
    /// given zero-based as `perm`.
    pub fn permute_args(&self, perm: &[usize]) -> Cochain {
        assert_eq!(perm.len(), self.arity, "permutation length must equal arity");
        Cochain {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(s, c)| {
                    let mut t = vec![MultiIndex::empty(); self.arity];
                    for (k, idx) in s.iter().enumerate() {
                        t[perm[k]] = idx.clone();
                    }
                    (t, c.clone())
                })
                .collect(),
        }
    }

    /// `φ̄(p, q) = φ(q, p)` for 2-cochains, `ψ(r, q, p)` for 3-cochains.
    fn involution(&self, op: &'static str) -> Result<Cochain> {
        match self.arity {
            2 => Ok(self.permute_args(&[1, 0])),
            3 => Ok(self.permute_args(&[2, 1, 0])),
            arity => Err(Error::UnsupportedArity { op, arity }),
        }
    }

    /// Jacobi map `Jψ(p,q,r) = ψ(p,q,r) + ψ(q,r,p) + ψ(r,p,q)`.
    pub fn jacobi_map(&self) -> Result<Cochain> {
        if self.arity != 3 {
            return Err(Error::UnsupportedArity {
                op: "jacobi_map",
                arity: self.arity,
            });
        }
        let mut out = self.clone();
        out += &self.permute_args(&[1, 2, 0]);
        out += &self.permute_args(&[2, 0, 1]);
        Ok(out)
    }

    /// Splits into the parts invariant and anti-invariant under argument
    /// swap (arity 2) or flip `(p,q,r) -> (r,q,p)` (arity 3).
    pub fn decompose(&self) -> Result<(Cochain, Cochain)> {
        let bar = self.involution("decompose")?;
        let half = Rational::new(1, 2);
        let plus = (self + &bar).scale(&half);
        let minus = (self - &bar).scale(&half);
        Ok((plus, minus))
    }

    pub fn is_symmetric(&self) -> bool {
        self.arity == 2 && self.permute_args(&[1, 0]) == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.arity == 2 && self.permute_args(&[1, 0]) == -self
    }

    pub fn is_flip_symmetric(&self) -> bool {
        self.arity == 3 && self.permute_args(&[2, 1, 0]) == *self
    }

    pub fn is_flip_antisymmetric(&self) -> bool {
        self.arity == 3 && self.permute_args(&[2, 1, 0]) == -self
    }

    /// A 2-cochain all of whose terms have type `(1,1)` is a biderivation.
    pub fn is_biderivation(&self) -> bool {
        self.arity == 2 && self.terms.keys().all(|s| s[0].order() == 1 && s[1].order() == 1)
    }

    /// True when every stored term differentiates every slot at least once,
    /// so the cochain vanishes whenever some argument is constant.
    pub fn is_normalized(&self) -> bool {
        self.terms.keys().all(|s| s.iter().all(|i| !i.is_empty()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn x(v: Var) -> Polynomial {
        Polynomial::var(v)
    }

    fn d(idx: &[Var]) -> MultiIndex {
        MultiIndex::new(idx)
    }

    #[test]
    fn coboundary_of_identity_is_multiplication() {
        assert_eq!(Cochain::identity().coboundary(), Cochain::multiplication());
    }

    #[test]
    fn coboundary_of_second_order_operator() {
        // δ(p ∂^{12}) = -p(∂^1⊗∂^2 + ∂^2⊗∂^1): the splittings with an empty
        // part cancel against the outer terms of δ.
        let p = &x(0) + &x(2);
        let lam = Cochain::monomial_term(vec![d(&[0, 1])], p.clone());
        let mut expect = Cochain::zero(2);
        expect.add_term(vec![d(&[0]), d(&[1])], &-&p);
        expect.add_term(vec![d(&[1]), d(&[0])], &-&p);
        assert_eq!(lam.coboundary(), expect);
        // pointwise definition on monomial pairs up to degree 3
        let monos = [x(0), x(1), &x(0) * &x(1), &x(1) * &x(2), &(&x(0) * &x(0)) * &x(1)];
        for a in &monos {
            for b in &monos {
                assert_eq!(
                    expect.apply(&[a.clone(), b.clone()]).unwrap(),
                    lam.coboundary_at(&[a.clone(), b.clone()]).unwrap()
                );
            }
        }
    }

    #[test]
    fn biderivation_is_cocycle() {
        let mut c = Cochain::zero(2);
        c.add_term(vec![d(&[0]), d(&[1])], &(&x(0) * &x(1)));
        c.add_term(vec![d(&[1]), d(&[0])], &-(&x(0) * &x(1)));
        c.add_term(vec![d(&[0]), d(&[0])], &x(2));
        assert!(c.coboundary().is_zero());
    }

    #[test]
    fn bracket_of_multiplication_vanishes() {
        let mu = Cochain::multiplication();
        assert!(mu.gerstenhaber(&mu).is_zero());
    }

    #[test]
    fn bracket_with_multiplication_is_minus_coboundary() {
        let mut c = Cochain::zero(2);
        c.add_term(vec![d(&[0, 1]), d(&[])], &x(1));
        c.add_term(vec![d(&[0]), d(&[1, 1])], &Polynomial::int(3));
        assert_eq!(c.gerstenhaber(&Cochain::multiplication()), -c.coboundary());
        let mut l = Cochain::zero(1);
        l.add_term(vec![d(&[0, 0])], &(&x(0) * &x(1)));
        assert_eq!(l.gerstenhaber(&Cochain::multiplication()), -l.coboundary());
    }

    #[test]
    fn jacobi_map_unrolled() {
        let c = Cochain::monomial_term(vec![d(&[0]), d(&[1]), d(&[2])], Polynomial::one());
        let j = c.jacobi_map().unwrap();
        let mut expect = c.clone();
        expect.add_term(vec![d(&[1]), d(&[2]), d(&[0])], &Polynomial::one());
        expect.add_term(vec![d(&[2]), d(&[0]), d(&[1])], &Polynomial::one());
        // ψ(q,r,p) puts I_3 on p: the tuple (I_3, I_1, I_2) = (∂^3, ∂^1, ∂^2)
        assert_eq!(j.len(), 3);
        let args = [x(0) * x(3), x(1), x(2)];
        let direct = c.apply(&args).unwrap()
            + c.apply(&[args[1].clone(), args[2].clone(), args[0].clone()]).unwrap()
            + c.apply(&[args[2].clone(), args[0].clone(), args[1].clone()]).unwrap();
        assert_eq!(j.apply(&args).unwrap(), direct);
        assert_eq!(j, expect);
    }

    #[test]
    fn decompose_standard_split() {
        let c = Cochain::monomial_term(vec![d(&[0]), d(&[1])], Polynomial::one());
        let (s, a) = c.decompose().unwrap();
        let half = Polynomial::constant(Rational::new(1, 2));
        let mut es = Cochain::zero(2);
        es.add_term(vec![d(&[0]), d(&[1])], &half);
        es.add_term(vec![d(&[1]), d(&[0])], &half);
        let mut ea = Cochain::zero(2);
        ea.add_term(vec![d(&[0]), d(&[1])], &half);
        ea.add_term(vec![d(&[1]), d(&[0])], &-&half);
        assert_eq!(s, es);
        assert_eq!(a, ea);
        let (s2, a2) = es.decompose().unwrap();
        assert_eq!(s2, es);
        assert!(a2.is_zero());
        assert!(Cochain::identity().decompose().is_err());
    }
}

