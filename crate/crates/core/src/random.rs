//! Seeded pseudorandom inputs for property checks and the randomized suites.
//!
//! Uses ChaCha8, so a seed gives the same stream on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochain::Cochain;
use crate::poly::{Monomial, MultiIndex, Polynomial, Rational, Var};

/// Seed of the associativity and solver suites.
pub const DEFAULT_SEED: u64 = 0x5EED_0003;

pub struct Sampler {
    rng: ChaCha8Rng,
    nvars: usize,
}

impl Sampler {
    pub fn new(seed: u64, nvars: usize) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            nvars,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Integer in `[-3, 3]`.
    pub fn small_int(&mut self) -> i64 {
        self.rng.gen_range(-3..=3)
    }

    pub fn monomial(&mut self, max_degree: u32) -> Monomial {
        let d = self.rng.gen_range(0..=max_degree);
        let mut exps = vec![0u16; self.nvars];
        if self.nvars > 0 {
            for _ in 0..d {
                exps[self.rng.gen_range(0..self.nvars)] += 1;
            }
        }
        Monomial::from_exponents(&exps)
    }

    /// Up to `max_terms` terms of degree `≤ max_degree`, integer
    /// coefficients in `[-3, 3]`.
    pub fn poly(&mut self, max_degree: u32, max_terms: usize) -> Polynomial {
        let n = self.rng.gen_range(1..=max_terms.max(1));
        let mut p = Polynomial::zero();
        for _ in 0..n {
            let m = self.monomial(max_degree);
            p.add_term(m, Rational::from(self.small_int()));
        }
        p
    }

    pub fn multi_index(&mut self, order: usize) -> MultiIndex {
        let v: Vec<Var> = (0..order)
            .map(|_| self.rng.gen_range(0..self.nvars) as Var)
            .collect();
        MultiIndex::new(&v)
    }

    /// A cochain of the given arity and order `≤ max_order` with at most
    /// `max_terms` terms whose coefficients have degree `≤ coeff_degree`.
    pub fn cochain(&mut self, arity: usize, max_order: usize, max_terms: usize, coeff_degree: u32) -> Cochain {
        let mut c = Cochain::zero(arity);
        let n = self.rng.gen_range(1..=max_terms.max(1));
        for _ in 0..n {
            let total = self.rng.gen_range(0..=max_order);
            let mut orders = vec![0usize; arity];
            for _ in 0..total {
                orders[self.rng.gen_range(0..arity)] += 1;
            }
            let slots = orders.into_iter().map(|k| self.multi_index(k)).collect();
            let coeff = self.poly(coeff_degree, 2);
            c.add_term(slots, &coeff);
        }
        c
    }
}

/// Argument triples of the associativity suites: degree `≤ 3`, up to four
/// terms, integer coefficients in `[-3, 3]`.
pub fn random_triples(seed: u64, nvars: usize, count: usize) -> Vec<[Polynomial; 3]> {
    let mut s = Sampler::new(seed, nvars);
    (0..count)
        .map(|_| [s.poly(3, 4), s.poly(3, 4), s.poly(3, 4)])
        .collect()
}
