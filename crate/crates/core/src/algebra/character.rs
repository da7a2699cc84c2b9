//! Algebra characters and modular pairs.

use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::element::AlgElement;
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::word::{AlgebraId, Word};

/// A ℚ-valued algebra map, determined by its values on the generators.
/// All δ_k and δ_T letters are sent to 0, which covers every character
/// the family needs; σ must get a nonzero (invertible) value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub algebra: AlgebraId,
    pub on_y: Rational,
    pub on_x: Rational,
    pub on_z: Rational,
    pub on_sigma: Rational,
}

impl Character {
    /// The counit ε.
    pub fn counit(algebra: AlgebraId) -> Character {
        Character {
            algebra,
            on_y: Rational::zero(),
            on_x: Rational::zero(),
            on_z: Rational::zero(),
            on_sigma: Rational::one(),
        }
    }

    /// The modular character δ: δ(Y) = 1, everything else 0, δ(σ) = 1.
    pub fn modular(algebra: AlgebraId) -> Character {
        Character {
            on_y: Rational::one(),
            ..Character::counit(algebra)
        }
    }

    pub fn eval_word(&self, w: &Word) -> Result<Rational> {
        if w.algebra != self.algebra {
            return Err(Error::TagMismatch {
                expected: self.algebra.name(),
                got: w.algebra.name(),
            });
        }
        if !w.deltas.is_empty() || !w.forest.is_empty() {
            return Ok(Rational::zero());
        }
        let mut v = Rational::one();
        let pow = |base: &Rational, e: u32| -> Result<Rational> {
            if e == 0 {
                return Ok(Rational::one());
            }
            Ok(base.pow(e as i32))
        };
        v *= pow(&self.on_y, w.y)?;
        v *= pow(&self.on_x, w.x)?;
        v *= pow(&self.on_z, w.z)?;
        if w.sigma != 0 {
            if self.on_sigma.is_zero() {
                return Err(Error::Invalid(
                    "character value on σ must be invertible".into(),
                ));
            }
            v *= self.on_sigma.pow(w.sigma as i32);
        }
        Ok(v)
    }

    pub fn eval(&self, x: &AlgElement) -> Result<Rational> {
        let mut out = Rational::zero();
        for (w, c) in x.terms() {
            out += c * self.eval_word(w)?;
        }
        Ok(out)
    }

    /// Multiplicativity against the normal form, on the given sample pairs.
    pub fn check_multiplicative(&self, alg: &Algebra, pairs: &[(Word, Word)]) -> Result<bool> {
        for (a, b) in pairs {
            let lhs = self.eval(&alg.mul_word(a, b)?)?;
            let rhs = self.eval_word(a)? * self.eval_word(b)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A modular pair: character δ with δ(σ) = 1 and a group-like σ.
/// Involution (S_δ² = Ad σ) is what `check_mpi` verifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPair {
    pub delta: Character,
    pub sigma: Word,
}

impl ModularPair {
    pub fn new(delta: Character, sigma: Word) -> Result<ModularPair> {
        if delta.algebra != sigma.algebra {
            return Err(Error::TagMismatch {
                expected: delta.algebra.name(),
                got: sigma.algebra.name(),
            });
        }
        if !sigma.is_grouplike_sigma() {
            return Err(Error::Invalid(format!(
                "{sigma} is not a registered group-like element"
            )));
        }
        Ok(ModularPair { delta, sigma })
    }

    /// The canonical pair (δ, σ^k); k must be 0 for algebras without σ.
    pub fn canonical(alg: &Algebra, k: i64) -> Result<ModularPair> {
        let sigma = if k == 0 {
            alg.one_word()
        } else {
            alg.sigma_word(k)?
        };
        ModularPair::new(Character::modular(alg.id()), sigma)
    }

    pub fn sigma_inverse(&self) -> Word {
        self.sigma.with_sigma(-self.sigma.sigma)
    }
}
