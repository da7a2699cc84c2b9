//! Memoized coproduct and antipode tables for the derived letters.
//!
//! The paper presents Δ and S only on the generators; δ_k for k ≥ 2 come
//! from the commutator recursion δ_{k+1} = [X, δ_k] and tree symbols from
//! the simple-cut sum. Values are universal across the family, so they are
//! computed once (δ-letters inside H₁, tree letters inside Hrt) and
//! re-tagged where used. Caches are concurrent-read with deterministic
//! contents.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::algebra::action::{crossed_mul, letter_delta, letter_x};
use crate::element::{AlgElement, Tensor};
use crate::error::Result;
use crate::scalar::rat;
use crate::trees::RootedTree;
use crate::word::{AlgebraId, Word};

fn delta_cop_cache() -> &'static RwLock<HashMap<u32, Tensor>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Tensor>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn delta_anti_cache() -> &'static RwLock<HashMap<u32, AlgElement>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, AlgElement>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn tree_cop_cache() -> &'static RwLock<HashMap<RootedTree, Tensor>> {
    static CACHE: OnceLock<RwLock<HashMap<RootedTree, Tensor>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn tree_anti_cache() -> &'static RwLock<HashMap<RootedTree, AlgElement>> {
    static CACHE: OnceLock<RwLock<HashMap<RootedTree, AlgElement>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Slotwise product of two degree-2 tensors.
fn mul_deg2<F>(mul: &F, a: &Tensor, b: &Tensor) -> Result<Tensor>
where
    F: Fn(&Word, &Word) -> Result<AlgElement>,
{
    let mut out = Tensor::zero(2);
    for (aw, ac) in a.terms() {
        for (bw, bc) in b.terms() {
            let left = mul(&aw[0], &bw[0])?;
            let right = mul(&aw[1], &bw[1])?;
            for (lw, lc) in left.terms() {
                for (rw, rc) in right.terms() {
                    out.add_term(vec![lw.clone(), rw.clone()], ac * bc * lc * rc);
                }
            }
        }
    }
    Ok(out)
}

fn retag_tensor(t: &Tensor, algebra: AlgebraId) -> Tensor {
    Tensor::from_terms(
        t.degree(),
        t.terms()
            .map(|(ws, c)| (ws.iter().map(|w| w.retag(algebra)).collect(), c.clone())),
    )
}

/// Δ(δ_k) in F ⊗ F.
pub(crate) fn delta_coproduct(k: u32) -> Result<Tensor> {
    debug_assert!(k >= 1);
    if let Some(t) = delta_cop_cache().read().unwrap().get(&k) {
        return Ok(t.clone());
    }
    let value = if k == 1 {
        let d1 = letter_delta(AlgebraId::F, 1);
        Tensor::from_tuple(vec![d1.clone(), Word::one(AlgebraId::F)])
            .add(&Tensor::from_tuple(vec![Word::one(AlgebraId::F), d1]))
    } else {
        // Δ(δ_k) = [Δ(X), Δ(δ_{k-1})] computed inside H₁ ⊗ H₁
        let guard = k + 2;
        let mul = |a: &Word, b: &Word| crossed_mul(a, b, guard, 4);
        let dx = {
            // X⊗1 + 1⊗X + δ₁⊗Y
            let x = letter_x(AlgebraId::H1);
            let one = Word::one(AlgebraId::H1);
            let d1 = letter_delta(AlgebraId::H1, 1);
            let y = crate::algebra::action::letter_y(AlgebraId::H1);
            Tensor::from_tuple(vec![x.clone(), one.clone()])
                .add(&Tensor::from_tuple(vec![one, x]))
                .add(&Tensor::from_tuple(vec![d1, y]))
        };
        let prev = retag_tensor(&delta_coproduct(k - 1)?, AlgebraId::H1);
        let comm = mul_deg2(&mul, &dx, &prev)?.sub(&mul_deg2(&mul, &prev, &dx)?);
        debug_assert!(comm
            .terms()
            .all(|(ws, _)| ws.iter().all(|w| w.y == 0 && w.x == 0)));
        retag_tensor(&comm, AlgebraId::F)
    };
    delta_cop_cache().write().unwrap().insert(k, value.clone());
    Ok(value)
}

/// S(δ_k) in F.
pub(crate) fn delta_antipode(k: u32) -> Result<AlgElement> {
    debug_assert!(k >= 1);
    if let Some(t) = delta_anti_cache().read().unwrap().get(&k) {
        return Ok(t.clone());
    }
    let value = if k == 1 {
        AlgElement::from_word(letter_delta(AlgebraId::F, 1)).neg()
    } else {
        // S(δ_k) = [S(δ_{k-1}), S(X)] inside H₁
        let guard = k + 2;
        let mul = |a: &AlgElement, b: &AlgElement| -> Result<AlgElement> {
            let mut out = AlgElement::zero(AlgebraId::H1);
            for (aw, ac) in a.terms() {
                for (bw, bc) in b.terms() {
                    let p = crossed_mul(aw, bw, guard, 4)?;
                    out = out.add(&p.scale(&(ac * bc)));
                }
            }
            Ok(out)
        };
        let sx = {
            // S(X) = -X + δ₁Y, computed in normal form
            let d1 = letter_delta(AlgebraId::H1, 1);
            let y = crate::algebra::action::letter_y(AlgebraId::H1);
            crossed_mul(&d1, &y, guard, 4)?
                .sub(&AlgElement::from_word(letter_x(AlgebraId::H1)))
        };
        let prev = {
            let p = delta_antipode(k - 1)?;
            AlgElement::from_terms(
                AlgebraId::H1,
                p.terms().map(|(w, c)| (w.retag(AlgebraId::H1), c.clone())),
            )
        };
        let comm = mul(&prev, &sx)?.sub(&mul(&sx, &prev)?);
        debug_assert!(comm.terms().all(|(w, _)| w.y == 0 && w.x == 0));
        AlgElement::from_terms(
            AlgebraId::F,
            comm.terms().map(|(w, c)| (w.retag(AlgebraId::F), c.clone())),
        )
    };
    delta_anti_cache().write().unwrap().insert(k, value.clone());
    Ok(value)
}

fn forest_word(algebra: AlgebraId, f: &crate::trees::Forest) -> Word {
    let mut w = Word::one(algebra);
    w.forest = f.clone();
    w
}

/// Δ(δ_T) in Hrt ⊗ Hrt: δ_T⊗1 plus the simple-cut sum, the empty cut
/// contributing 1⊗δ_T.
pub(crate) fn tree_coproduct(t: &RootedTree) -> Tensor {
    if let Some(v) = tree_cop_cache().read().unwrap().get(t) {
        return v.clone();
    }
    let alg = AlgebraId::Hrt;
    let mut out = Tensor::zero(2);
    out.add_term(
        vec![
            forest_word(alg, &crate::trees::Forest::single(t.clone())),
            Word::one(alg),
        ],
        rat(1),
    );
    for (branches, trunk) in t.simple_cuts() {
        out.add_term(
            vec![
                forest_word(alg, &branches),
                forest_word(alg, &crate::trees::Forest::single(trunk)),
            ],
            rat(1),
        );
    }
    tree_cop_cache().write().unwrap().insert(t.clone(), out.clone());
    out
}

/// S(δ_T) in Hrt via the cut recursion
/// `S(δ_T) = -δ_T - Σ_{c ≠ ∅} S(δ_{P_c}) δ_{R_c}`.
pub(crate) fn tree_antipode(t: &RootedTree) -> AlgElement {
    if let Some(v) = tree_anti_cache().read().unwrap().get(t) {
        return v.clone();
    }
    let alg = AlgebraId::Hrt;
    let mut out = AlgElement::from_word(forest_word(alg, &crate::trees::Forest::single(t.clone()))).neg();
    for (branches, trunk) in t.simple_cuts() {
        if branches.is_empty() {
            continue; // empty cut handled by the -δ_T term
        }
        // S on the branch forest is multiplicative (commutative algebra)
        let mut s_branches = AlgElement::one(alg);
        for b in branches.trees() {
            let sb = tree_antipode(b);
            let mut next = AlgElement::zero(alg);
            for (w1, c1) in s_branches.terms() {
                for (w2, c2) in sb.terms() {
                    next.add_term(crate::algebra::action::merge_commutative(w1, w2), c1 * c2);
                }
            }
            s_branches = next;
        }
        let trunk_word = forest_word(alg, &crate::trees::Forest::single(trunk));
        for (w, c) in s_branches.terms() {
            out.add_term(
                crate::algebra::action::merge_commutative(w, &trunk_word),
                -c.clone(),
            );
        }
    }
    tree_anti_cache().write().unwrap().insert(t.clone(), out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta2_coproduct_matches_commutator_oracle() {
        // Δ(δ₂) = δ₂⊗1 + δ₁⊗δ₁ + 1⊗δ₂
        let t = delta_coproduct(2).unwrap();
        let one = Word::one(AlgebraId::F);
        let d1 = letter_delta(AlgebraId::F, 1);
        let d2 = letter_delta(AlgebraId::F, 2);
        let expected = Tensor::from_tuple(vec![d2.clone(), one.clone()])
            .add(&Tensor::from_tuple(vec![d1.clone(), d1]))
            .add(&Tensor::from_tuple(vec![one, d2]));
        assert_eq!(t, expected);
    }

    #[test]
    fn delta2_antipode() {
        // S(δ₂) = δ₁² − δ₂
        let s = delta_antipode(2).unwrap();
        let mut d1sq = Word::one(AlgebraId::F);
        d1sq.deltas.insert(1, 2);
        let d2 = letter_delta(AlgebraId::F, 2);
        let expected = AlgElement::from_word(d1sq).sub(&AlgElement::from_word(d2));
        assert_eq!(s, expected);
    }

    #[test]
    fn single_vertex_is_primitive() {
        let t = RootedTree::leaf();
        let cop = tree_coproduct(&t);
        assert_eq!(cop.num_terms(), 2);
        let s = tree_antipode(&t);
        assert_eq!(
            s,
            AlgElement::from_word(forest_word(AlgebraId::Hrt, &crate::trees::Forest::single(t))).neg()
        );
    }
}
