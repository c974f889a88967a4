use core::cmp::Ordering;

use num_rational::Ratio;

use super::coding::{CodingFunction, LinearForm};
use super::ModelError;

/// An interpretation of the arithmetic language whose elements are
/// enumerated by index `0, 1, 2, …`.
pub trait Structure {
    type Elem: Clone;

    /// The element with the given index.
    fn element(&self, index: u64) -> Self::Elem;

    fn index_of(&self, e: &Self::Elem) -> u64;

    /// Interpretation of the constant `a_k`, if any.
    fn constant(&self, k: u32) -> Option<Self::Elem>;

    fn succ(&self, x: &Self::Elem) -> Result<Self::Elem, ModelError>;

    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, ModelError>;

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem, ModelError>;

    /// Interpretation of `=`.
    fn equal(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.index_of(x) == self.index_of(y)
    }

    /// True when successor, sum and product act on indices exactly as they
    /// do on ℕ. The evaluator only uses bound-irrelevance arguments for such
    /// structures.
    fn arithmetic_is_standard(&self) -> bool {
        false
    }
}

/// ℕ itself.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StandardModel;

impl Structure for StandardModel {
    type Elem = u64;

    fn element(&self, index: u64) -> u64 {
        index
    }

    fn index_of(&self, e: &u64) -> u64 {
        *e
    }

    fn constant(&self, k: u32) -> Option<u64> {
        match k {
            1 => Some(0),
            2 => Some(1),
            _ => None,
        }
    }

    fn succ(&self, x: &u64) -> Result<u64, ModelError> {
        x.checked_add(1).ok_or(ModelError::Overflow)
    }

    fn add(&self, x: &u64, y: &u64) -> Result<u64, ModelError> {
        x.checked_add(*y).ok_or(ModelError::Overflow)
    }

    fn mul(&self, x: &u64, y: &u64) -> Result<u64, ModelError> {
        x.checked_mul(*y).ok_or(ModelError::Overflow)
    }

    fn arithmetic_is_standard(&self) -> bool {
        true
    }
}

/// Identifies the coded model an element was produced by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelKey {
    pub alpha: u64,
    pub u: Ratio<u64>,
}

/// The coded natural n̂ = ψ(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CodedNat {
    pub index: u64,
    /// ψ(index), exact.
    pub value: LinearForm,
    pub model: ModelKey,
}

impl PartialOrd for CodedNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.model == other.model).then(|| self.index.cmp(&other.index))
    }
}

/// The interpretation whose domain is {ψ(n) : n ∈ ℕ}, with `a1 ↦ 0̂`,
/// `a2 ↦ 1̂` and successor, sum and product carried over from ℕ along ψ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodedModel<C> {
    coding: C,
}

impl<C: CodingFunction> CodedModel<C> {
    pub fn new(coding: C) -> CodedModel<C> {
        CodedModel { coding }
    }

    pub fn coding(&self) -> &C {
        &self.coding
    }

    pub fn key(&self) -> ModelKey {
        ModelKey { alpha: self.coding.alpha(), u: self.coding.u() }
    }

    pub fn encode(&self, n: u64) -> CodedNat {
        CodedNat { index: n, value: self.coding.psi(n), model: self.key() }
    }

    pub fn decode(&self, c: &CodedNat) -> Result<u64, ModelError> {
        self.check(c)?;
        Ok(c.index)
    }

    fn check(&self, c: &CodedNat) -> Result<(), ModelError> {
        if c.model != self.key() {
            return Err(ModelError::ModelMismatch);
        }
        debug_assert_eq!(c.value, self.coding.psi(c.index));
        Ok(())
    }

    /// `x ⊕ 1̂`.
    pub fn coded_succ(&self, x: &CodedNat) -> Result<CodedNat, ModelError> {
        self.coded_add(x, &self.encode(1))
    }

    /// Sum of ℕ carried to the coded domain: ψ(ψ⁻¹(x) + ψ⁻¹(y)).
    pub fn coded_add(&self, x: &CodedNat, y: &CodedNat) -> Result<CodedNat, ModelError> {
        let (m, n) = (self.decode(x)?, self.decode(y)?);
        Ok(self.encode(m.checked_add(n).ok_or(ModelError::Overflow)?))
    }

    /// Product of ℕ carried to the coded domain.
    pub fn coded_mul(&self, x: &CodedNat, y: &CodedNat) -> Result<CodedNat, ModelError> {
        let (m, n) = (self.decode(x)?, self.decode(y)?);
        Ok(self.encode(m.checked_mul(n).ok_or(ModelError::Overflow)?))
    }
}

impl<C: CodingFunction> Structure for CodedModel<C> {
    type Elem = CodedNat;

    fn element(&self, index: u64) -> CodedNat {
        self.encode(index)
    }

    fn index_of(&self, e: &CodedNat) -> u64 {
        e.index
    }

    fn constant(&self, k: u32) -> Option<CodedNat> {
        match k {
            1 => Some(self.encode(0)),
            2 => Some(self.encode(1)),
            _ => None,
        }
    }

    fn succ(&self, x: &CodedNat) -> Result<CodedNat, ModelError> {
        self.coded_succ(x)
    }

    fn add(&self, x: &CodedNat, y: &CodedNat) -> Result<CodedNat, ModelError> {
        self.coded_add(x, y)
    }

    fn mul(&self, x: &CodedNat, y: &CodedNat) -> Result<CodedNat, ModelError> {
        self.coded_mul(x, y)
    }

    fn arithmetic_is_standard(&self) -> bool {
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::default_coding;

    fn model(alpha: u64, n: u64, d: u64) -> CodedModel<crate::models::StandInCoding> {
        CodedModel::new(default_coding(alpha, Ratio::new(n, d)).unwrap())
    }

    #[test]
    fn encode_examples() {
        let m = model(18, 3, 2);
        let zero = m.encode(0);
        assert_eq!(zero.value, LinearForm::ZERO);
        assert_eq!(m.encode(2).value, LinearForm { ones: 2, us: 0 });
        let id = model(18, 1, 1);
        for n in 0..=100 {
            assert_eq!(id.encode(n).value, LinearForm { ones: n, us: 0 });
            assert_eq!(id.decode(&id.encode(n)).unwrap(), n);
        }
    }

    #[test]
    fn transported_operations() {
        let m = model(24, 2, 1);
        assert_eq!(m.coded_add(&m.encode(2), &m.encode(3)).unwrap(), m.encode(5));
        assert_eq!(m.coded_succ(&m.encode(0)).unwrap(), m.encode(1));
        assert_eq!(m.coded_mul(&m.encode(17), &m.encode(0)).unwrap(), m.encode(0));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = model(18, 2, 1);
        let b = model(24, 2, 1);
        assert_eq!(a.coded_add(&a.encode(1), &b.encode(1)), Err(ModelError::ModelMismatch));
        assert_eq!(a.decode(&b.encode(4)), Err(ModelError::ModelMismatch));
        assert_eq!(a.encode(3).partial_cmp(&b.encode(3)), None);
    }

    #[test]
    fn index_order_is_value_order() {
        let m = model(28, 3, 2);
        for i in 0..60 {
            for j in 0..60 {
                let (x, y) = (m.encode(i), m.encode(j));
                assert_eq!(x.partial_cmp(&y), Some(x.value.cmp_at(&y.value, m.key().u)));
            }
        }
    }
}
