use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Index of a variable in a declared [`VarSet`](super::VarSet), zero-based.
pub type Var = u16;

type Exps = SmallVec<[u16; 8]>;

/// A monomial `x_1^{e_1} ... x_n^{e_n}` stored as a dense exponent vector with
/// trailing zeros trimmed, so equal monomials compare equal regardless of how
/// many variables were in scope when they were built.
///
/// `Ord` is graded-lexicographic: total degree first, then the exponent of
/// `x_1`, then `x_2`, and so on (larger exponent is larger).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Exps,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut exps = Exps::from_elem(0, v as usize + 1);
        exps[v as usize] = e;
        Monomial::from_exps(exps)
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial::from_exps(Exps::from_slice(exps))
    }

    fn from_exps(mut exps: Exps) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    /// Builds `x_I` for a multi-index `I`.
    pub fn from_multi_index(idx: &MultiIndex) -> Self {
        let mut exps = Exps::new();
        for &v in idx.iter() {
            let v = v as usize;
            if exps.len() <= v {
                exps.resize(v + 1, 0);
            }
            exps[v] += 1;
        }
        Monomial::from_exps(exps)
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.exps.get(v as usize).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Number of variable slots needed to hold this monomial.
    pub fn width(&self) -> usize {
        self.exps.len()
    }

    /// Smallest variable occurring in the monomial.
    pub fn min_var(&self) -> Option<Var> {
        self.exps.iter().position(|&e| e > 0).map(|i| i as Var)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(short.exps.iter()) {
            *e += *s;
        }
        Monomial { exps }
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.exps.len() > self.exps.len() {
            return None;
        }
        let mut exps = self.exps.clone();
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            if *e < *o {
                return None;
            }
            *e -= *o;
        }
        Some(Monomial::from_exps(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Variables with multiplicity, in increasing order; the multi-index `I` with `x_I = self`.
    pub fn to_multi_index(&self) -> MultiIndex {
        let mut idx = SmallVec::new();
        for (v, &e) in self.exps.iter().enumerate() {
            for _ in 0..e {
                idx.push(v as Var);
            }
        }
        MultiIndex(idx)
    }

    /// Applies `∂^I`, returning the falling-factorial multiplier and the
    /// resulting monomial, or `None` when the derivative vanishes.
    pub fn derivative(&self, idx: &MultiIndex) -> Option<(u64, Monomial)> {
        if idx.is_empty() {
            return Some((1, self.clone()));
        }
        let mut exps = self.exps.clone();
        let mut factor: u64 = 1;
        for &v in idx.iter() {
            let e = exps.get_mut(v as usize)?;
            if *e == 0 {
                return None;
            }
            factor *= *e as u64;
            *e -= 1;
        }
        Some((factor, Monomial::from_exps(exps)))
    }

    /// All multi-indices `J` with `∂^J(self) != 0`, i.e. sub-multisets of the
    /// variables of this monomial (including the empty one).
    pub fn sub_multi_indices(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::empty()];
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = out.clone();
            for k in 1..=e {
                for b in &base {
                    let mut m = b.0.clone();
                    for _ in 0..k {
                        m.push(v as Var);
                    }
                    out.push(MultiIndex(m));
                }
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.exps.len().max(other.exps.len());
            for i in 0..n {
                let a = self.exps.get(i).copied().unwrap_or(0);
                let b = other.exps.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", v + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Nondecreasing sequence of variable indices; `∂^I = ∂^{i_1} ... ∂^{i_m}`.
/// The empty multi-index is the identity operator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(SmallVec<[Var; 8]>);

impl MultiIndex {
    pub fn empty() -> Self {
        MultiIndex::default()
    }

    /// Builds a multi-index from indices in any order.
    pub fn new(indices: &[Var]) -> Self {
        let mut v: SmallVec<[Var; 8]> = SmallVec::from_slice(indices);
        v.sort_unstable();
        MultiIndex(v)
    }

    pub fn single(v: Var) -> Self {
        MultiIndex(SmallVec::from_slice(&[v]))
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Var> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Var] {
        &self.0
    }

    /// Union with multiplicity, `IJ`.
    pub fn join(&self, other: &MultiIndex) -> MultiIndex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        MultiIndex(v)
    }

    pub fn push(&self, var: Var) -> MultiIndex {
        self.join(&MultiIndex::single(var))
    }

    /// `I! = ∂^I(x_I)`, the product of factorials of the multiplicities.
    pub fn factorial(&self) -> u64 {
        let mut out = 1u64;
        let mut run = 0u64;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 && self.0[k - 1] == *v {
                run += 1;
            } else {
                run = 1;
            }
            out *= run;
        }
        out
    }

    /// All splittings of the positions of `I` into `parts` ordered pieces,
    /// as in the Leibniz rule `∂^I(f_1 ... f_k) = Σ ∂^{I_1} f_1 ... ∂^{I_k} f_k`.
    /// Splittings giving the same tuple are merged and counted.
    pub fn distributions(&self, parts: usize) -> Vec<(Vec<MultiIndex>, u64)> {
        let mut acc: std::collections::BTreeMap<Vec<MultiIndex>, u64> = Default::default();
        let mut cur = vec![MultiIndex::empty(); parts];
        fn rec(
            idx: &[Var],
            pos: usize,
            cur: &mut Vec<MultiIndex>,
            acc: &mut std::collections::BTreeMap<Vec<MultiIndex>, u64>,
        ) {
            if pos == idx.len() {
                *acc.entry(cur.clone()).or_insert(0) += 1;
                return;
            }
            for k in 0..cur.len() {
                // indices arrive sorted, so pushing keeps each part nondecreasing
                cur[k].0.push(idx[pos]);
                rec(idx, pos + 1, cur, acc);
                cur[k].0.pop();
            }
        }
        rec(&self.0, 0, &mut cur, &mut acc);
        acc.into_iter().collect()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Prints `[1,2,2]` with one-based variable numbers.
impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x1 = Monomial::var(0);
        let x2 = Monomial::var(1);
        let x1x2 = x1.mul(&x2);
        let x2sq = x2.mul(&x2);
        assert!(x1 > x2);
        assert!(x1x2 > x2sq);
        assert!(x2sq > x1);
        assert!(Monomial::one() < x2);
    }

    #[test]
    fn factorial_of_multi_index() {
        assert_eq!(MultiIndex::new(&[0, 0, 1]).factorial(), 2);
        assert_eq!(MultiIndex::new(&[2, 2, 2]).factorial(), 6);
        assert_eq!(MultiIndex::empty().factorial(), 1);
    }

    #[test]
    fn distributions_count_positions() {
        let d = MultiIndex::new(&[0, 0]).distributions(2);
        let total: u64 = d.iter().map(|(_, c)| c).sum();
        assert_eq!(total, 4);
        let mixed = d
            .iter()
            .find(|(p, _)| p[0].order() == 1 && p[1].order() == 1)
            .unwrap();
        assert_eq!(mixed.1, 2);
    }

    #[test]
    fn sub_multi_indices_of_square() {
        let m = Monomial::var_pow(0, 2).mul(&Monomial::var(1));
        assert_eq!(m.sub_multi_indices().len(), 6);
    }
}
