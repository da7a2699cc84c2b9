//! Left coactions ρ: H → K ⊗ H used across the family.
//!
//! Three kinds occur: the σ-grading coaction h ↦ σ^{|h|} ⊗ h onto a group
//! algebra, the matched-pair coaction of the commutative factor on U
//! (ρ(X) = 1⊗X + t⊗Y extended by the bicrossed rule), and the trivial one.
//! A letterwise override supports deliberately corrupted coactions in
//! axiom-failure tests.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::algebra::{action, Algebra};
use crate::element::{AlgElement, Tensor};
use crate::error::{Error, Result};
use crate::scalar::rat;
use crate::word::{AlgebraId, Word};

#[derive(Clone, Debug)]
pub enum CoactionKind {
    /// h ↦ σ^{|h|} ⊗ h.
    WeightSigma,
    /// h ↦ 1 ⊗ h.
    Trivial,
    /// The bicrossed-product coaction of K ∈ {F, ℂ[Z], Hrt} on U.
    MatchedPair,
    /// Like `WeightSigma` but with σ-exponent on the X letter overridden.
    CorruptedX { x_exponent: i64 },
}

#[derive(Clone, Debug)]
pub struct Coaction {
    pub h: Algebra,
    pub k: Algebra,
    kind: CoactionKind,
}

fn matched_cache() -> &'static RwLock<HashMap<(AlgebraId, u32, u32), Tensor>> {
    static CACHE: OnceLock<RwLock<HashMap<(AlgebraId, u32, u32), Tensor>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

impl Coaction {
    pub fn weight_sigma(h: Algebra, k: Algebra) -> Result<Coaction> {
        if !matches!(k.id(), AlgebraId::K(_)) {
            return Err(Error::Unsupported(format!(
                "σ-grading coaction needs a group algebra, got {}",
                k.name()
            )));
        }
        Ok(Coaction { h, k, kind: CoactionKind::WeightSigma })
    }

    pub fn trivial(h: Algebra, k: Algebra) -> Coaction {
        Coaction { h, k, kind: CoactionKind::Trivial }
    }

    /// The coaction of the commutative factor on U for the bicrossed
    /// presentation of `bicrossed` (h1, h1s or hck).
    pub fn matched_pair(bicrossed: &Algebra) -> Result<Coaction> {
        let (h, k) = bicrossed.factor_algebras()?;
        if h.id() != AlgebraId::U {
            return Err(Error::Unsupported(format!(
                "matched-pair coaction targets U, not {}",
                h.name()
            )));
        }
        Ok(Coaction { h, k, kind: CoactionKind::MatchedPair })
    }

    pub fn corrupted_x(h: Algebra, k: Algebra, x_exponent: i64) -> Result<Coaction> {
        if !matches!(k.id(), AlgebraId::K(_)) {
            return Err(Error::Unsupported(
                "corrupted coaction is a σ-grading variant".into(),
            ));
        }
        Ok(Coaction { h, k, kind: CoactionKind::CorruptedX { x_exponent } })
    }

    pub fn kind(&self) -> &CoactionKind {
        &self.kind
    }

    /// ρ(w) as a degree-2 tensor (K-slot, H-slot).
    pub fn apply_word(&self, w: &Word) -> Result<Tensor> {
        if w.algebra != self.h.id() {
            return Err(Error::TagMismatch {
                expected: self.h.name(),
                got: w.algebra.name(),
            });
        }
        match &self.kind {
            CoactionKind::WeightSigma => {
                let k = Word::one(self.k.id()).with_sigma(w.weight());
                Ok(Tensor::from_tuple(vec![k, w.clone()]))
            }
            CoactionKind::Trivial => {
                Ok(Tensor::from_tuple(vec![Word::one(self.k.id()), w.clone()]))
            }
            CoactionKind::CorruptedX { x_exponent } => {
                // like the weight coaction but ρ(X) = σ^{x_exponent} ⊗ X,
                // extended multiplicatively over the canonical letters
                let twist = w.weight() - w.x as i64 + x_exponent * w.x as i64;
                let k = Word::one(self.k.id()).with_sigma(twist);
                Ok(Tensor::from_tuple(vec![k, w.clone()]))
            }
            CoactionKind::MatchedPair => self.matched_word(w),
        }
    }

    /// Matched-pair coaction on a U-monomial, built letterwise by
    /// ρ(u·v) = (u₍₋₁₎ ◁ v₍₁₎) v₍₂₎₍₋₁₎ ⊗ u₍₀₎ v₍₂₎₍₀₎ and memoized.
    fn matched_word(&self, w: &Word) -> Result<Tensor> {
        let key = (self.k.id(), w.y, w.x);
        if let Some(t) = matched_cache().read().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let k_one = Word::one(self.k.id());
        let mut acc = Tensor::from_tuple(vec![k_one.clone(), Word::one(AlgebraId::U)]);
        // ρ(X) = 1⊗X + t⊗Y with t the tail letter of K
        let tail = match self.k.id() {
            AlgebraId::F => action::letter_delta(self.k.id(), 1),
            AlgebraId::CZ => action::letter_z(self.k.id()),
            AlgebraId::Hrt => {
                action::letter_tree(self.k.id(), crate::trees::RootedTree::leaf())
            }
            other => {
                return Err(Error::Unsupported(format!(
                    "no matched-pair coaction with K = {}",
                    other.name()
                )))
            }
        };
        let y = action::letter_y(AlgebraId::U);
        let x = action::letter_x(AlgebraId::U);
        for _ in 0..w.y {
            acc = self.append_letter(&acc, &y, &[(k_one.clone(), y.clone())])?;
        }
        for _ in 0..w.x {
            acc = self.append_letter(
                &acc,
                &x,
                &[(k_one.clone(), x.clone()), (tail.clone(), y.clone())],
            )?;
        }
        matched_cache().write().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    /// One step of the extension rule, for a primitive letter `v` with
    /// ρ(v) = Σ v_k ⊗ v_h given explicitly.
    fn append_letter(
        &self,
        acc: &Tensor,
        v: &Word,
        rho_v: &[(Word, Word)],
    ) -> Result<Tensor> {
        let mut out = Tensor::zero(2);
        for (ws, c) in acc.terms() {
            let (uk, uh) = (&ws[0], &ws[1]);
            // Δ(v) = v⊗1 + 1⊗v (letters here are primitive in U):
            // term v₍₁₎ = v, v₍₂₎ = 1:  (u₍₋₁₎ ◁ v) ⊗ u₍₀₎
            let (dguard, tguard) = self.k.guard_values();
            let acted = action::act_word(uk, (v.y, v.x), dguard, tguard)?;
            for (aw, ac) in acted.terms() {
                out.add_term(vec![aw.clone(), uh.clone()], c * ac);
            }
            // term v₍₁₎ = 1, v₍₂₎ = v:  u₍₋₁₎ v₍₋₁₎ ⊗ u₍₀₎ v₍₀₎
            for (vk, vh) in rho_v {
                let kk = action::merge_commutative(uk, vk);
                let hh = self.h.mul_word(uh, vh)?;
                for (hw, hc) in hh.terms() {
                    out.add_term(vec![kk.clone(), hw.clone()], c * hc * rat(1));
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, x: &AlgElement) -> Result<Tensor> {
        let mut out = Tensor::zero(2);
        for (w, c) in x.terms() {
            out = out.add(&self.apply_word(w)?.scale(c));
        }
        Ok(out)
    }

    /// Iterated coaction ρ^{(r)}: degree r+1 tensor (r K-slots then the H-slot).
    pub fn iterated_word(&self, w: &Word, r: usize) -> Result<Tensor> {
        if r == 0 {
            return Ok(Tensor::from_tuple(vec![w.clone()]));
        }
        let first = self.apply_word(w)?;
        if r == 1 {
            return Ok(first);
        }
        // ρ^{(r)} = (Id_K ⊗ ρ^{(r-1)}) ∘ ρ
        let mut out = Tensor::zero(r + 1);
        for (ws, c) in first.terms() {
            let deeper = self.iterated_word(&ws[1], r - 1)?;
            for (dws, dc) in deeper.terms() {
                let mut t = Vec::with_capacity(r + 1);
                t.push(ws[0].clone());
                t.extend(dws.iter().cloned());
                out.add_term(t, c * dc);
            }
        }
        Ok(out)
    }

    /// Slotwise coaction of a tuple: h̃₍₋₁₎ ⊗ h̃₍₀₎ with the K-legs multiplied
    /// (K is commutative). Result: degree len+1, K-slot first.
    pub fn coact_tuple(&self, ws: &[Word]) -> Result<Tensor> {
        let mut out = Tensor::from_tuple(vec![Word::one(self.k.id())]);
        for w in ws {
            let rho = self.apply_word(w)?;
            let mut next = Tensor::zero(out.degree() + 1);
            for (acc_ws, acc_c) in out.terms() {
                for (rws, rc) in rho.terms() {
                    let mut t = acc_ws.clone();
                    t[0] = action::merge_commutative(&t[0], &rws[0]);
                    t.push(rws[1].clone());
                    next.add_term(t, acc_c * rc);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trunc::TruncationSpec;

    #[test]
    fn weight_coaction_on_h1() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let rho = Coaction::weight_sigma(h1, k).unwrap();
        let x = {
            let mut w = h1.one_word();
            w.x = 1;
            w
        };
        let t = rho.apply_word(&x).unwrap();
        let sigma = k.sigma_word(1).unwrap();
        assert_eq!(t, Tensor::from_tuple(vec![sigma, x]));
    }

    #[test]
    fn matched_coaction_on_x() {
        // ρ(X) = 1⊗X + δ₁⊗Y
        let h1 = Algebra::new(AlgebraId::H1);
        let rho = Coaction::matched_pair(&h1).unwrap();
        let x = {
            let mut w = Word::one(AlgebraId::U);
            w.x = 1;
            w
        };
        let t = rho.apply_word(&x).unwrap();
        assert_eq!(t.num_terms(), 2);
        let y = {
            let mut w = Word::one(AlgebraId::U);
            w.y = 1;
            w
        };
        let d1 = action::letter_delta(AlgebraId::F, 1);
        assert_eq!(t.coeff(&[d1, y]), rat(1));
        // ρ(1) = 1⊗1
        let one = rho.apply_word(&Word::one(AlgebraId::U)).unwrap();
        assert_eq!(
            one,
            Tensor::from_tuple(vec![Word::one(AlgebraId::F), Word::one(AlgebraId::U)])
        );
    }

    #[test]
    fn iterated_weight_coaction() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let rho = Coaction::weight_sigma(h1, k.clone()).unwrap();
        let trunc = TruncationSpec::default();
        for w in h1.enumerate_basis(&trunc).unwrap().iter().take(10) {
            let t = rho.iterated_word(w, 2).unwrap();
            let sigma = Word::one(k.id()).with_sigma(w.weight());
            assert_eq!(
                t,
                Tensor::from_tuple(vec![sigma.clone(), sigma, w.clone()])
            );
        }
    }
}
