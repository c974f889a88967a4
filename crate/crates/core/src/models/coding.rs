//! Coding functions ψ: ℝ⁺ → ℝ⁺ that are piecewise linear with slope ξ_i on
//! the unit interval `[i, i+1)`, each ξ_i being 1 or the parameter `u`.
//!
//! Because every slope is 1 or `u`, ψ(n) at a natural `n` is exactly
//! `a + b·u` with `a + b = n`; [`LinearForm`] keeps that pair so equality
//! and order never need floating point.

use core::cmp::Ordering;
use core::fmt;

use num_rational::Ratio;
use num_traits::{One, ToPrimitive};

use crate::goldbach::in_frakN;

use super::ModelError;

/// Exact value `ones + us·u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub ones: u64,
    pub us: u64,
}

impl LinearForm {
    pub const ZERO: LinearForm = LinearForm { ones: 0, us: 0 };

    /// Compares the values of two forms at `u`.
    pub fn cmp_at(&self, other: &LinearForm, u: Ratio<u64>) -> Ordering {
        let (p, q) = (*u.numer() as u128, *u.denom() as u128);
        let lhs = self.ones as u128 * q + self.us as u128 * p;
        let rhs = other.ones as u128 * q + other.us as u128 * p;
        lhs.cmp(&rhs)
    }

    pub fn value_at(&self, u: Ratio<u64>) -> Ratio<u128> {
        let u = Ratio::new(*u.numer() as u128, *u.denom() as u128);
        Ratio::from_integer(self.ones as u128) + u * self.us as u128
    }

    pub fn to_f64(&self, u: Ratio<u64>) -> f64 {
        self.ones as f64 + self.us as f64 * u.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.ones, self.us) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("u"),
            (0, b) => write!(f, "{b}u"),
            (a, 1) => write!(f, "{a} + u"),
            (a, b) => write!(f, "{a} + {b}u"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slope {
    One,
    U,
}

/// A member ψ_(α,u) of a coding family.
pub trait CodingFunction {
    fn alpha(&self) -> u64;

    fn u(&self) -> Ratio<u64>;

    /// ξ_i, the slope on `[i, i+1)`.
    fn slope(&self, i: u64) -> Slope;

    /// ψ(n) for a natural `n`.
    fn psi(&self, n: u64) -> LinearForm {
        let us = (0..n).filter(|i| self.slope(*i) == Slope::U).count() as u64;
        LinearForm { ones: n - us, us }
    }

    /// ψ(x) for a real `x ≥ 0`.
    fn psi_real(&self, x: f64) -> f64 {
        assert!(x >= 0.0, "coding functions are defined on nonnegative reals");
        let whole = x as u64;
        let frac = x - whole as f64;
        let slope = match self.slope(whole) {
            Slope::One => 1.0,
            Slope::U => self.u().to_f64().unwrap_or(f64::NAN),
        };
        self.psi(whole).to_f64(self.u()) + slope * frac
    }
}

/// The two-slope family used in place of an unavailable construction.
///
/// ξ_i = 1 for `i ∈ {0, 1, α/2}` and for every `i ≥ α − 4`; ξ_i = u for
/// the other `i` in `[2, α − 5]`. At `u = 1` ψ is the identity, and ψ(n)
/// tends to `n` as `u` tends to 1 from above.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StandInCoding {
    alpha: u64,
    u: Ratio<u64>,
}

impl StandInCoding {
    /// `alpha` must belong to 𝔑 and `u ≥ 1`.
    pub fn new(alpha: u64, u: Ratio<u64>) -> Result<StandInCoding, ModelError> {
        if !in_frakN(alpha) {
            return Err(ModelError::AlphaNotInFrakN(alpha));
        }
        if u < Ratio::one() {
            return Err(ModelError::ParameterBelowOne);
        }
        Ok(StandInCoding { alpha, u })
    }

    /// Number of u-slope intervals `[i, i+1)` with `i < n`.
    fn u_intervals_below(&self, n: u64) -> u64 {
        if self.u == Ratio::one() {
            return 0;
        }
        let last = self.alpha - 5;
        if n <= 2 {
            return 0;
        }
        let top = (n - 1).min(last);
        let mut count = top - 1;
        if (2..=top).contains(&(self.alpha / 2)) {
            count -= 1;
        }
        count
    }
}

impl CodingFunction for StandInCoding {
    fn alpha(&self) -> u64 {
        self.alpha
    }

    fn u(&self) -> Ratio<u64> {
        self.u
    }

    fn slope(&self, i: u64) -> Slope {
        let fixed = i <= 1 || i == self.alpha / 2 || i + 4 >= self.alpha;
        if fixed || self.u == Ratio::one() {
            Slope::One
        } else {
            Slope::U
        }
    }

    fn psi(&self, n: u64) -> LinearForm {
        let us = self.u_intervals_below(n);
        LinearForm { ones: n - us, us }
    }
}

/// The stand-in coding ψ_(α,u).
pub fn default_coding(alpha: u64, u: Ratio<u64>) -> Result<StandInCoding, ModelError> {
    StandInCoding::new(alpha, u)
}
