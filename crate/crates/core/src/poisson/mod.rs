//! Polynomial Poisson structures `X_ij = {x_i, x_j}` on a finite set of
//! variables, the Jacobi identity and its derivatives, trivectors, the
//! two-variable generator and the named example catalog.

mod bracket_file;
mod catalog;
mod phi;
mod trivector;

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::poly::{MultiIndex, Polynomial, Var, VarSet};

pub use bracket_file::{parse_bracket_file, write_bracket_file};
pub use catalog::{catalog, catalog_names, catalog_source};
pub use phi::{from_phi, from_phi_by_power_table, lambda_matrix, lambda_matrix_by_power_table};
pub use trivector::TriVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    name: Option<String>,
    vars: VarSet,
    /// Full `n × n` matrix, row-major, antisymmetric.
    matrix: Vec<Polynomial>,
}

impl PoissonStructure {
    /// Builds the structure from the entries `{x_i, x_j}` with `i ≠ j`
    /// (zero-based) and checks the Jacobi identity on every triple.
    pub fn new(vars: VarSet, entries: Vec<(Var, Var, Polynomial)>) -> Result<Self> {
        let p = Self::new_unchecked(vars, entries)?;
        p.validate()?;
        Ok(p)
    }

    /// Same as [`PoissonStructure::new`] without the Jacobi check.
    pub fn new_unchecked(vars: VarSet, entries: Vec<(Var, Var, Polynomial)>) -> Result<Self> {
        let n = vars.len();
        let mut matrix = vec![Polynomial::zero(); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, p) in entries {
            let (i, j) = (i as usize, j as usize);
            if i >= n || j >= n {
                return Err(Error::InvalidArgument(format!(
                    "bracket entry ({}, {}) outside {} variables",
                    i + 1,
                    j + 1,
                    n
                )));
            }
            if i == j {
                if p.is_zero() {
                    continue;
                }
                return Err(Error::InvalidArgument(format!("{{x{0},x{0}}} must vanish", i + 1)));
            }
            if seen[i * n + j] {
                return Err(Error::InvalidArgument(format!(
                    "bracket entry ({}, {}) given twice",
                    i.min(j) + 1,
                    i.max(j) + 1
                )));
            }
            if let Some(v) = p.max_var() {
                if v as usize >= n {
                    return Err(Error::InvalidArgument(format!(
                        "bracket entry ({}, {}) uses an undeclared variable",
                        i + 1,
                        j + 1
                    )));
                }
            }
            seen[i * n + j] = true;
            seen[j * n + i] = true;
            matrix[j * n + i] = -&p;
            matrix[i * n + j] = p;
        }
        Ok(PoissonStructure {
            name: None,
            vars,
            matrix,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// Same brackets over renamed variables.
    pub fn with_vars(&self, vars: VarSet) -> Result<Self> {
        if vars.len() != self.dim() {
            return Err(Error::InvalidArgument(format!(
                "expected {} variable names, got {}",
                self.dim(),
                vars.len()
            )));
        }
        Ok(PoissonStructure {
            name: self.name.clone(),
            vars,
            matrix: self.matrix.clone(),
        })
    }

    /// `X_ij`, zero-based.
    pub fn x(&self, i: Var, j: Var) -> &Polynomial {
        &self.matrix[i as usize * self.dim() + j as usize]
    }

    /// Nonzero entries `X_ij` with `i < j`.
    pub fn entries(&self) -> impl Iterator<Item = (Var, Var, &Polynomial)> {
        let n = self.dim();
        (0..n).flat_map(move |i| {
            (i + 1..n).filter_map(move |j| {
                let p = &self.matrix[i * n + j];
                (!p.is_zero()).then_some((i as Var, j as Var, p))
            })
        })
    }

    /// Highest degree of an entry, `None` for the zero bracket.
    pub fn degree(&self) -> Option<u32> {
        self.matrix.iter().filter_map(Polynomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.matrix.iter().all(Polynomial::is_constant)
    }

    /// `{p, q} = X_ij ∂^i p ∂^j q`.
    pub fn bracket(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let n = self.dim();
        let dp: Vec<Polynomial> = (0..n).map(|i| p.derivative(i as Var)).collect();
        let dq: Vec<Polynomial> = (0..n).map(|j| q.derivative(j as Var)).collect();
        let mut out = Polynomial::zero();
        let one = crate::poly::Rational::one();
        for (i, pi) in dp.iter().enumerate() {
            if pi.is_zero() {
                continue;
            }
            for (j, qj) in dq.iter().enumerate() {
                let x = &self.matrix[i * n + j];
                if x.is_zero() || qj.is_zero() {
                    continue;
                }
                out.add_product(&one, &(x * pi), qj);
            }
        }
        out
    }

    /// The bracket as the 2-cochain `X_ij ∂^i ⊗ ∂^j`.
    pub fn as_cochain(&self) -> Cochain {
        let n = self.dim();
        let mut c = Cochain::zero(2);
        for i in 0..n {
            for j in 0..n {
                let x = &self.matrix[i * n + j];
                if !x.is_zero() {
                    c.add_term(
                        vec![MultiIndex::single(i as Var), MultiIndex::single(j as Var)],
                        x,
                    );
                }
            }
        }
        c
    }

    /// `X_ab^l X_cl + X_bc^l X_al + X_ca^l X_bl`, summed over `l`.
    pub fn jacobi_residual(&self, a: Var, b: Var, c: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        let one = crate::poly::Rational::one();
        for (i, j, k) in [(a, b, c), (b, c, a), (c, a, b)] {
            let xij = self.x(i, j);
            if xij.is_zero() {
                continue;
            }
            for l in 0..self.dim() as Var {
                let xkl = self.x(k, l);
                if xkl.is_zero() {
                    continue;
                }
                out.add_product(&one, &xij.derivative(l), xkl);
            }
        }
        out
    }

    /// `∂^m` of the Jacobi residual, expanded by the product rule as
    /// `X_ab^{lm} X_cl + X_ab^l X_cl^m + cycl`.
    pub fn jacobi_derivative_residual(&self, a: Var, b: Var, c: Var, m: Var) -> Polynomial {
        let mut out = Polynomial::zero();
        let one = crate::poly::Rational::one();
        for (i, j, k) in [(a, b, c), (b, c, a), (c, a, b)] {
            let xij = self.x(i, j);
            for l in 0..self.dim() as Var {
                let xkl = self.x(k, l);
                let xij_l = xij.derivative(l);
                out.add_product(&one, &xij_l.derivative(m), xkl);
                out.add_product(&one, &xij_l, &xkl.derivative(m));
            }
        }
        out
    }

    /// First triple `a < b < c` (zero-based) with nonzero Jacobi residual.
    pub fn jacobi_failure(&self) -> Option<(Var, Var, Var, Polynomial)> {
        let n = self.dim() as Var;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let r = self.jacobi_residual(a, b, c);
                    if !r.is_zero() {
                        return Some((a, b, c, r));
                    }
                }
            }
        }
        None
    }

    pub fn validate(&self) -> Result<()> {
        match self.jacobi_failure() {
            None => Ok(()),
            Some((a, b, c, r)) => Err(Error::NotPoisson {
                a: a as usize + 1,
                b: b as usize + 1,
                c: c as usize + 1,
                residual: r.display(&self.vars).to_string(),
            }),
        }
    }

    /// Table of the entries and their partial derivatives up to `order`.
    pub fn derivatives(&self, order: usize) -> Derivatives {
        let n = self.dim();
        let mut levels: Vec<Vec<Polynomial>> = vec![self.matrix.clone()];
        for _ in 0..order {
            let prev = levels.last().expect("nonempty");
            let mut next = Vec::with_capacity(prev.len() * n);
            for p in prev {
                for l in 0..n {
                    next.push(p.derivative(l as Var));
                }
            }
            levels.push(next);
        }
        Derivatives { n, levels }
    }
}

/// `X_ij^{l_1 ... l_r}` for `r` up to a fixed order, stored densely.
#[derive(Clone, Debug)]
pub struct Derivatives {
    n: usize,
    levels: Vec<Vec<Polynomial>>,
}

impl Derivatives {
    pub fn dim(&self) -> usize {
        self.n
    }

    /// `X_ij^{ls}` with `ls` the differentiation variables.
    pub fn get(&self, i: usize, j: usize, ls: &[usize]) -> &Polynomial {
        let mut idx = i * self.n + j;
        for &l in ls {
            idx = idx * self.n + l;
        }
        &self.levels[ls.len()][idx]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn broken() -> PoissonStructure {
        let vars = VarSet::default_names(3);
        let e = |s: &str| parse_poly(s, &vars).unwrap();
        PoissonStructure::new_unchecked(vars.clone(), vec![(0, 1, e("x2")), (1, 2, e("x1"))]).unwrap()
    }

    #[test]
    fn broken_bracket_residual() {
        let p = broken();
        assert_eq!(p.jacobi_residual(0, 1, 2), -Polynomial::var(0));
        assert_eq!(p.jacobi_derivative_residual(0, 1, 2, 0), Polynomial::int(-1));
        for m in 0..3 {
            assert_eq!(
                p.jacobi_derivative_residual(0, 1, 2, m),
                p.jacobi_residual(0, 1, 2).derivative(m)
            );
        }
        assert!(matches!(p.validate(), Err(Error::NotPoisson { a: 1, b: 2, c: 3, .. })));
    }

    #[test]
    fn residual_is_nested_bracket_sum() {
        let p = broken();
        let x = |v| Polynomial::var(v);
        let nested = p.bracket(&x(0), &p.bracket(&x(1), &x(2)))
            + p.bracket(&x(1), &p.bracket(&x(2), &x(0)))
            + p.bracket(&x(2), &p.bracket(&x(0), &x(1)));
        assert_eq!(nested, p.jacobi_residual(0, 1, 2));
    }

    #[test]
    fn bracket_independent_of_third_variable() {
        let vars = VarSet::default_names(3);
        let p = PoissonStructure::new(
            vars.clone(),
            vec![(0, 1, parse_poly("x1*x2", &vars).unwrap())],
        )
        .unwrap();
        assert!(p.jacobi_residual(0, 1, 2).is_zero());
    }

    #[test]
    fn entries_are_antisymmetric() {
        let p = broken();
        assert_eq!(p.x(1, 0), &-Polynomial::var(1));
        assert!(p.x(2, 2).is_zero());
        assert_eq!(p.entries().count(), 2);
    }
}
