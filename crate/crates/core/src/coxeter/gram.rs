//! Numeric cross-check of finiteness: `W_I` is finite iff the cosine (Gram) matrix
//! `B(s,t) = -cos(pi / m(s,t))` restricted to `I` is positive definite.

use num_traits::{Float, FloatConst};

use super::{CoxeterSystem, GeneratorSet, Order};

/// Symmetric Gram matrix of the Tits form on a subset of generators.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix<F> {
    entries: Vec<Vec<F>>,
}

impl<F: Float + FloatConst> GramMatrix<F> {
    pub fn new(system: &CoxeterSystem, subset: &GeneratorSet) -> Self {
        let gens: Vec<_> = subset.iter().collect();
        let entries = gens
            .iter()
            .map(|&s| {
                gens.iter()
                    .map(|&t| match system.m(s, t) {
                        Order::Finite(1) => F::one(),
                        Order::Finite(m) => -(F::PI() / F::from(m).expect("m fits in a float")).cos(),
                        Order::Infinite => -F::one(),
                    })
                    .collect()
            })
            .collect();
        GramMatrix { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> F {
        self.entries[i][j]
    }

    /// Cholesky test: every pivot must exceed `tol`.
    pub fn is_positive_definite(&self, tol: F) -> bool {
        let n = self.dim();
        let mut l = vec![vec![F::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let mut sum = self.entries[i][j];
                for k in 0..j {
                    sum = sum - l[i][k] * l[j][k];
                }
                if i == j {
                    if sum <= tol {
                        return false;
                    }
                    l[i][i] = sum.sqrt();
                } else {
                    l[i][j] = sum / l[j][j];
                }
            }
        }
        true
    }
}

impl CoxeterSystem {
    /// Gram positive-definiteness in double precision.
    pub fn gram_positive_definite(&self, subset: &GeneratorSet, tol: f64) -> bool {
        GramMatrix::<f64>::new(self, subset).is_positive_definite(tol)
    }
}
