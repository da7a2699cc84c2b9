//! The registered algebra family and its Hopf structure maps.
//!
//! One `Algebra` value describes one member of the family (H₁, its
//! Schwarzian quotient, the σ-covers, the Connes-Kreimer algebra, and the
//! building blocks U, F, ℂ[Z], Hrt, ℂ[σ,σ⁻¹]). All of them share the same
//! canonical `Word` representation; multiplication is the crossed-product
//! reduction of `action`, and coproducts/antipodes extend the generator
//! tables (anti)multiplicatively with global memoization.

mod action;
mod character;
mod coaction;
mod tables;

pub use character::{Character, ModularPair};
pub use coaction::{Coaction, CoactionKind};

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::element::{AlgElement, Tensor};
use crate::error::{Error, Result};
use crate::scalar::Rational;
use crate::trees::enumerate_trees;
use crate::trunc::TruncationSpec;
use crate::word::{AlgebraId, Word};

pub(crate) use action::crossed_mul;

/// Guards applied when products generate new letters. These bound the
/// letter domain itself (δ-indices, tree sizes) so nothing is silently
/// truncated; enumeration caps live in `TruncationSpec`.
const DEFAULT_DELTA_GUARD: u32 = 32;
const DEFAULT_TREE_GUARD: u32 = 12;

/// Guards used for derived structure maps (Δ, S), which are total
/// functions of the word; generous so cached values are exact.
const DERIVED_DELTA_GUARD: u32 = 64;
const DERIVED_TREE_GUARD: u32 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Algebra {
    id: AlgebraId,
    delta_guard: u32,
    tree_guard: u32,
}

fn cop_word_cache() -> &'static RwLock<HashMap<Word, Tensor>> {
    static CACHE: OnceLock<RwLock<HashMap<Word, Tensor>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn anti_word_cache() -> &'static RwLock<HashMap<Word, AlgElement>> {
    static CACHE: OnceLock<RwLock<HashMap<Word, AlgElement>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Weight of an element: the common ad-Y eigenvalue or the inhomogeneous
/// marker. The zero element counts as homogeneous of weight 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Homogeneous(i64),
    Inhomogeneous,
}

impl Algebra {
    pub fn new(id: AlgebraId) -> Algebra {
        Algebra {
            id,
            delta_guard: DEFAULT_DELTA_GUARD,
            tree_guard: DEFAULT_TREE_GUARD,
        }
    }

    pub fn with_guards(id: AlgebraId, delta_guard: u32, tree_guard: u32) -> Algebra {
        Algebra { id, delta_guard, tree_guard }
    }

    /// Parse a CLI-style algebra name.
    pub fn by_name(name: &str) -> Result<Algebra> {
        let id = match name {
            "h1" => AlgebraId::H1,
            "h1s" => AlgebraId::H1s,
            "h1dag" => AlgebraId::H1Dag(None),
            "K" | "k" => AlgebraId::K(None),
            "u" => AlgebraId::U,
            "f" => AlgebraId::F,
            "cz" => AlgebraId::CZ,
            "hrt" => AlgebraId::Hrt,
            "hck" => AlgebraId::Hck,
            "hckdag" => AlgebraId::HckDag(None),
            other => {
                let parse_n = |prefix: &str| -> Option<u32> {
                    other
                        .strip_prefix(prefix)
                        .and_then(|s| s.parse::<u32>().ok())
                        .filter(|n| *n >= 1)
                };
                if let Some(n) = parse_n("h1dagN:") {
                    return Ok(Algebra::new(AlgebraId::H1Dag(Some(n))));
                }
                if let Some(n) = parse_n("KmodN:") {
                    return Ok(Algebra::new(AlgebraId::K(Some(n))));
                }
                if let Some(n) = parse_n("hckdagN:") {
                    return Ok(Algebra::new(AlgebraId::HckDag(Some(n))));
                }
                return Err(Error::UnknownAlgebra(other.into()));
            }
        };
        Ok(Algebra::new(id))
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    pub(crate) fn guard_values(&self) -> (u32, u32) {
        (self.delta_guard, self.tree_guard)
    }

    pub fn name(&self) -> String {
        self.id.name()
    }

    pub fn is_commutative(&self) -> bool {
        matches!(
            self.id,
            AlgebraId::K(_) | AlgebraId::F | AlgebraId::CZ | AlgebraId::Hrt
        )
    }

    pub fn one_word(&self) -> Word {
        Word::one(self.id)
    }

    pub fn one(&self) -> AlgElement {
        AlgElement::one(self.id)
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement::zero(self.id)
    }

    /// σ^k as a word; errors when the algebra has no σ.
    pub fn sigma_word(&self, k: i64) -> Result<Word> {
        if !self.id.has_sigma() {
            return Err(Error::Unsupported(format!(
                "{} has no group-like σ",
                self.name()
            )));
        }
        Ok(Word::one(self.id).with_sigma(k))
    }

    /// The underlying algebra a σ-cover twists, when there is one.
    pub fn dag_base(&self) -> Option<Algebra> {
        match self.id {
            AlgebraId::H1Dag(_) => Some(Algebra::with_guards(
                AlgebraId::H1,
                self.delta_guard,
                self.tree_guard,
            )),
            AlgebraId::HckDag(_) => Some(Algebra::with_guards(
                AlgebraId::Hck,
                self.delta_guard,
                self.tree_guard,
            )),
            _ => None,
        }
    }

    /// Presentation letters within the truncation window.
    pub fn generators(&self, trunc: &TruncationSpec) -> Vec<Word> {
        let id = self.id;
        let mut out = Vec::new();
        match id {
            AlgebraId::H1 => {
                out.push(action::letter_y(id));
                out.push(action::letter_x(id));
                for k in 1..=trunc.delta_index_cap {
                    out.push(action::letter_delta(id, k));
                }
            }
            AlgebraId::H1s => {
                out.push(action::letter_y(id));
                out.push(action::letter_x(id));
                out.push(action::letter_z(id));
            }
            AlgebraId::U => {
                out.push(action::letter_y(id));
                out.push(action::letter_x(id));
            }
            AlgebraId::F => {
                for k in 1..=trunc.delta_index_cap {
                    out.push(action::letter_delta(id, k));
                }
            }
            AlgebraId::CZ => out.push(action::letter_z(id)),
            AlgebraId::Hrt => {
                for t in enumerate_trees(trunc.tree_size_cap) {
                    out.push(action::letter_tree(id, t));
                }
            }
            AlgebraId::Hck => {
                out.push(action::letter_y(id));
                out.push(action::letter_x(id));
                for t in enumerate_trees(trunc.tree_size_cap) {
                    out.push(action::letter_tree(id, t));
                }
            }
            AlgebraId::K(_) => {
                out.push(Word::one(id).with_sigma(1));
                out.push(Word::one(id).with_sigma(-1));
            }
            AlgebraId::H1Dag(_) | AlgebraId::HckDag(_) => {
                let base = self.dag_base().unwrap();
                for w in base.generators(trunc) {
                    out.push(w.retag(id));
                }
                out.push(Word::one(id).with_sigma(1));
                out.push(Word::one(id).with_sigma(-1));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn check_tag(&self, w: &Word) -> Result<()> {
        if w.algebra != self.id {
            return Err(Error::TagMismatch {
                expected: self.name(),
                got: w.algebra.name(),
            });
        }
        Ok(())
    }

    pub fn mul_word(&self, a: &Word, b: &Word) -> Result<AlgElement> {
        self.check_tag(a)?;
        self.check_tag(b)?;
        crossed_mul(a, b, self.delta_guard, self.tree_guard)
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement> {
        let mut out = self.zero();
        for (aw, ac) in a.terms() {
            for (bw, bc) in b.terms() {
                out = out.checked_add(&self.mul_word(aw, bw)?.scale(&(ac * bc)))?;
            }
        }
        Ok(out)
    }

    /// Left-to-right product of a letter string (the normal-form reducer).
    pub fn normal_form(&self, letters: &[Word]) -> Result<AlgElement> {
        let mut acc = self.one();
        for l in letters {
            acc = self.mul(&acc, &AlgElement::from_word(l.clone()))?;
        }
        Ok(acc)
    }

    pub fn counit_word(&self, w: &Word) -> Rational {
        if w.is_grouplike_sigma() {
            Rational::one()
        } else {
            Rational::zero()
        }
    }

    pub fn counit(&self, x: &AlgElement) -> Rational {
        let mut out = Rational::zero();
        for (w, c) in x.terms() {
            out += c * self.counit_word(w);
        }
        out
    }

    /// Coproduct of a canonical word, memoized globally.
    pub fn coproduct_word(&self, w: &Word) -> Result<Tensor> {
        self.check_tag(w)?;
        if let Some(t) = cop_word_cache().read().unwrap().get(w) {
            return Ok(t.clone());
        }
        let value = self.compute_coproduct(w)?;
        cop_word_cache().write().unwrap().insert(w.clone(), value.clone());
        Ok(value)
    }

    fn compute_coproduct(&self, w: &Word) -> Result<Tensor> {
        let id = self.id;
        // σ-covers twist the base coproduct: Δ(σ^s h) = σ^{s+|h₂|}h₁ ⊗ σ^s h₂
        if let Some(base) = self.dag_base() {
            let body = {
                let mut b = w.clone();
                b.sigma = 0;
                b.retag(base.id)
            };
            let inner = base.coproduct_word(&body)?;
            let mut out = Tensor::zero(2);
            for (ws, c) in inner.terms() {
                let left = ws[0].retag(id).with_sigma(w.sigma + ws[1].weight());
                let right = ws[1].retag(id).with_sigma(w.sigma);
                out.add_term(vec![left, right], c.clone());
            }
            return Ok(out);
        }
        if let AlgebraId::K(_) = id {
            return Ok(Tensor::from_tuple(vec![w.clone(), w.clone()]));
        }
        // product of letter coproducts
        let one = Word::one(id);
        let mut acc = Tensor::from_tuple(vec![one.clone(), one.clone()]);
        let prim = |l: &Word| {
            Tensor::from_tuple(vec![l.clone(), one.clone()])
                .add(&Tensor::from_tuple(vec![one.clone(), l.clone()]))
        };
        let mul = |a: &Word, b: &Word| crossed_mul(a, b, DERIVED_DELTA_GUARD, DERIVED_TREE_GUARD);
        let push = |acc: &mut Tensor, factor: &Tensor| -> Result<()> {
            *acc = mul_deg2(&mul, acc, factor)?;
            Ok(())
        };

        for _ in 0..w.y {
            push(&mut acc, &prim(&action::letter_y(id)))?;
        }
        for _ in 0..w.x {
            let x = action::letter_x(id);
            let mut t = prim(&x);
            match id {
                AlgebraId::H1 => t = t.add(&Tensor::from_tuple(vec![
                    action::letter_delta(id, 1),
                    action::letter_y(id),
                ])),
                AlgebraId::H1s => t = t.add(&Tensor::from_tuple(vec![
                    action::letter_z(id),
                    action::letter_y(id),
                ])),
                AlgebraId::Hck => t = t.add(&Tensor::from_tuple(vec![
                    action::letter_tree(id, crate::trees::RootedTree::leaf()),
                    action::letter_y(id),
                ])),
                AlgebraId::U => {}
                _ => unreachable!("X letter only in U-type algebras"),
            }
            push(&mut acc, &t)?;
        }
        for _ in 0..w.z {
            push(&mut acc, &prim(&action::letter_z(id)))?;
        }
        for (k, e) in &w.deltas {
            let dk = retag_deg2(&tables::delta_coproduct(*k)?, id);
            for _ in 0..*e {
                push(&mut acc, &dk)?;
            }
        }
        for t in w.forest.trees() {
            let dt = retag_deg2(&tables::tree_coproduct(t), id);
            push(&mut acc, &dt)?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, x: &AlgElement) -> Result<Tensor> {
        let mut out = Tensor::zero(2);
        for (w, c) in x.terms() {
            out = out.add(&self.coproduct_word(w)?.scale(c));
        }
        Ok(out)
    }

    /// Antipode of a canonical word, memoized globally.
    pub fn antipode_word(&self, w: &Word) -> Result<AlgElement> {
        self.check_tag(w)?;
        if let Some(t) = anti_word_cache().read().unwrap().get(w) {
            return Ok(t.clone());
        }
        let value = self.compute_antipode(w)?;
        anti_word_cache().write().unwrap().insert(w.clone(), value.clone());
        Ok(value)
    }

    fn compute_antipode(&self, w: &Word) -> Result<AlgElement> {
        let id = self.id;
        // σ-covers: S(σ^s h) = σ^{-s-|h|} S_base(h)
        if let Some(base) = self.dag_base() {
            let body = {
                let mut b = w.clone();
                b.sigma = 0;
                b.retag(base.id)
            };
            let inner = base.antipode_word(&body)?;
            let shift = -(w.sigma + body.weight());
            return Ok(AlgElement::from_terms(
                id,
                inner
                    .terms()
                    .map(|(bw, c)| (bw.retag(id).with_sigma(shift), c.clone())),
            ));
        }
        if let AlgebraId::K(_) = id {
            return Ok(AlgElement::from_word(w.with_sigma(-w.sigma)));
        }
        // anti-multiplicative extension: letters reversed
        let engine = Algebra::with_guards(id, DERIVED_DELTA_GUARD, DERIVED_TREE_GUARD);
        let mut acc = engine.one();
        let mul_in = |acc: &mut AlgElement, f: &AlgElement| -> Result<()> {
            *acc = engine.mul(f, acc)?;
            Ok(())
        };
        // canonical order is Y X Z δ forest; reversed product = fold-left with premultiplication
        let s_y = AlgElement::from_word(action::letter_y(id)).neg();
        for _ in 0..w.y {
            mul_in(&mut acc, &s_y)?;
        }
        if w.x > 0 {
            // S(X) = -X + tY in normal form, t the coproduct tail letter
            let tail = match id {
                AlgebraId::U => None,
                AlgebraId::H1 => Some(action::letter_delta(id, 1)),
                AlgebraId::H1s => Some(action::letter_z(id)),
                AlgebraId::Hck => Some(action::letter_tree(id, crate::trees::RootedTree::leaf())),
                _ => unreachable!("X letter only in U-type algebras"),
            };
            let x_el = AlgElement::from_word(action::letter_x(id));
            let s_x = match tail {
                None => x_el.neg(),
                Some(t) => engine
                    .mul_word(&t, &action::letter_y(id))?
                    .sub(&x_el),
            };
            for _ in 0..w.x {
                mul_in(&mut acc, &s_x)?;
            }
        }
        let s_z = AlgElement::from_word(action::letter_z(id)).neg();
        for _ in 0..w.z {
            mul_in(&mut acc, &s_z)?;
        }
        for (k, e) in &w.deltas {
            let sdk = retag_elem(&tables::delta_antipode(*k)?, id);
            for _ in 0..*e {
                mul_in(&mut acc, &sdk)?;
            }
        }
        for t in w.forest.trees() {
            let sdt = retag_elem(&tables::tree_antipode(t), id);
            mul_in(&mut acc, &sdt)?;
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &AlgElement) -> Result<AlgElement> {
        x.map_words(|w| self.antipode_word(w))
    }

    /// Twisted antipode S_δ(x) = Σ δ(x₍₁₎) S(x₍₂₎).
    pub fn twisted_antipode(&self, delta: &Character, x: &AlgElement) -> Result<AlgElement> {
        let cop = self.coproduct(x)?;
        let mut out = self.zero();
        for (ws, c) in cop.terms() {
            let dv = delta.eval_word(&ws[0])?;
            if dv.is_zero() {
                continue;
            }
            out = out.checked_add(&self.antipode_word(&ws[1])?.scale(&(c * dv)))?;
        }
        Ok(out)
    }

    pub fn weight_word(&self, w: &Word) -> i64 {
        w.weight()
    }

    pub fn weight(&self, x: &AlgElement) -> Weight {
        let mut it = x.terms();
        let Some((first, _)) = it.next() else {
            return Weight::Homogeneous(0);
        };
        let w = first.weight();
        for (word, _) in it {
            if word.weight() != w {
                return Weight::Inhomogeneous;
            }
        }
        Weight::Homogeneous(w)
    }

    /// Iterated coproduct Δ^{(k-1)} as a degree-k tensor (k ≥ 1).
    pub fn iterated_coproduct(&self, x: &AlgElement, k: usize) -> Result<Tensor> {
        assert!(k >= 1);
        let mut t = x.as_tensor();
        for i in 1..k {
            t = t.expand_slot(i - 1, |w| self.coproduct_word(w))?;
        }
        Ok(t)
    }

    /// Diagonal left multiplication of slots `start..start+len` by `a`,
    /// i.e. by Δ^{(len-1)}(a) slotwise; `len = 0` scales by ε(a).
    pub fn diag_left_mul(
        &self,
        a: &AlgElement,
        t: &Tensor,
        start: usize,
        len: usize,
    ) -> Result<Tensor> {
        if len == 0 {
            return Ok(t.scale(&self.counit(a)));
        }
        let cop = self.iterated_coproduct(a, len)?;
        let mut out = Tensor::zero(t.degree());
        for (aws, ac) in cop.terms() {
            let mut part = t.clone();
            for (offset, aw) in aws.iter().enumerate() {
                part = part.map_slot(start + offset, |w| self.mul_word(aw, w))?;
            }
            out = out.add(&part.scale(ac));
        }
        Ok(out)
    }

    /// Enumerate basis words inside the truncation window, in graded order.
    pub fn enumerate_basis(&self, trunc: &TruncationSpec) -> Result<Vec<Word>> {
        trunc.validate()?;
        let cap = trunc.pbw_cap;
        let id = self.id;
        let sigmas = if id.has_sigma() {
            trunc.sigma_values(self.id.sigma_modulus())
        } else {
            vec![0]
        };

        // commutative tails by kind
        let tails: Vec<Word> = match id {
            AlgebraId::K(_) => vec![Word::one(id)],
            AlgebraId::CZ => (0..=cap)
                .map(|z| {
                    let mut w = Word::one(id);
                    w.z = z;
                    w
                })
                .collect(),
            AlgebraId::F => delta_monomials(id, cap, trunc.delta_index_cap),
            AlgebraId::Hrt => forest_monomials(id, cap, trunc.tree_size_cap),
            AlgebraId::U => vec![Word::one(id)],
            AlgebraId::H1 => delta_monomials(id, cap, trunc.delta_index_cap),
            AlgebraId::H1s => (0..=cap)
                .map(|z| {
                    let mut w = Word::one(id);
                    w.z = z;
                    w
                })
                .collect(),
            AlgebraId::Hck => forest_monomials(id, cap, trunc.tree_size_cap),
            AlgebraId::H1Dag(_) => delta_monomials(id, cap, trunc.delta_index_cap),
            AlgebraId::HckDag(_) => forest_monomials(id, cap, trunc.tree_size_cap),
        };
        let has_u = matches!(
            id,
            AlgebraId::U
                | AlgebraId::H1
                | AlgebraId::H1s
                | AlgebraId::Hck
                | AlgebraId::H1Dag(_)
                | AlgebraId::HckDag(_)
        );

        let mut out = Vec::new();
        for tail in &tails {
            let used = tail.pbw_degree();
            if used > cap {
                continue;
            }
            let budget = cap - used;
            let u_range: Vec<(u32, u32)> = if has_u {
                let mut v = Vec::new();
                for p in 0..=budget {
                    for q in 0..=(budget - p) {
                        v.push((p, q));
                    }
                }
                v
            } else {
                vec![(0, 0)]
            };
            for (p, q) in u_range {
                for s in &sigmas {
                    let mut w = tail.clone();
                    w.y = p;
                    w.x = q;
                    w = w.with_sigma(*s);
                    if let Some(target) = trunc.weight {
                        if w.weight() != target {
                            continue;
                        }
                    }
                    out.push(w);
                }
            }
        }
        out.sort_by_key(|w| (w.pbw_degree(), w.weight(), w.clone()));
        Ok(out)
    }

    /// Split a word of a bicrossed/cocrossed algebra into its (H, K) parts.
    pub fn split_word(&self, w: &Word) -> Result<(Word, Word)> {
        self.check_tag(w)?;
        let (h_alg, k_alg) = self.factor_algebras()?;
        let h;
        let mut k = Word::one(k_alg.id);
        match self.id {
            AlgebraId::H1Dag(_) | AlgebraId::HckDag(_) => {
                let mut body = w.clone();
                body.sigma = 0;
                h = body.retag(h_alg.id);
                k = k.with_sigma(w.sigma);
            }
            AlgebraId::H1 | AlgebraId::Hck | AlgebraId::H1s => {
                // H-part is the U-monomial, K-part the commutative tail
                let mut tail = w.clone();
                tail.y = 0;
                tail.x = 0;
                let mut u = Word::one(h_alg.id);
                u.y = w.y;
                u.x = w.x;
                h = u;
                k = tail.retag(k_alg.id);
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "{} has no registered bicrossed splitting",
                    self.name()
                )))
            }
        }
        Ok((h, k))
    }

    pub fn join_parts(&self, h: &Word, k: &Word) -> Result<Word> {
        let (h_alg, k_alg) = self.factor_algebras()?;
        if h.algebra != h_alg.id {
            return Err(Error::TagMismatch {
                expected: h_alg.name(),
                got: h.algebra.name(),
            });
        }
        if k.algebra != k_alg.id {
            return Err(Error::TagMismatch {
                expected: k_alg.name(),
                got: k.algebra.name(),
            });
        }
        let mut w = h.retag(self.id);
        match self.id {
            AlgebraId::H1Dag(_) | AlgebraId::HckDag(_) => Ok(w.with_sigma(k.sigma)),
            AlgebraId::H1 | AlgebraId::Hck | AlgebraId::H1s => {
                w.z = k.z;
                w.deltas = k.deltas.clone();
                w.forest = k.forest.clone();
                Ok(w)
            }
            _ => unreachable!(),
        }
    }

    /// The pair (H, K) of the registered bicrossed/cocrossed factorization.
    pub fn factor_algebras(&self) -> Result<(Algebra, Algebra)> {
        let mk = |id| Algebra::with_guards(id, self.delta_guard, self.tree_guard);
        match self.id {
            AlgebraId::H1 => Ok((mk(AlgebraId::U), mk(AlgebraId::F))),
            AlgebraId::H1s => Ok((mk(AlgebraId::U), mk(AlgebraId::CZ))),
            AlgebraId::Hck => Ok((mk(AlgebraId::U), mk(AlgebraId::Hrt))),
            AlgebraId::H1Dag(n) => Ok((mk(AlgebraId::H1), mk(AlgebraId::K(n)))),
            AlgebraId::HckDag(n) => Ok((mk(AlgebraId::Hck), mk(AlgebraId::K(n)))),
            _ => Err(Error::Unsupported(format!(
                "{} has no registered factorization",
                self.name()
            ))),
        }
    }
}

fn retag_deg2(t: &Tensor, id: AlgebraId) -> Tensor {
    Tensor::from_terms(
        2,
        t.terms()
            .map(|(ws, c)| (ws.iter().map(|w| w.retag(id)).collect(), c.clone())),
    )
}

fn retag_elem(e: &AlgElement, id: AlgebraId) -> AlgElement {
    AlgElement::from_terms(id, e.terms().map(|(w, c)| (w.retag(id), c.clone())))
}

/// Slotwise product of degree-2 tensors under the given word product.
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

fn delta_monomials(id: AlgebraId, cap: u32, max_index: u32) -> Vec<Word> {
    let mut out = vec![Word::one(id)];
    fn rec(id: AlgebraId, next_index: u32, max_index: u32, budget: u32, cur: &Word, out: &mut Vec<Word>) {
        for k in next_index..=max_index {
            for e in 1..=budget {
                let mut w = cur.clone();
                w.deltas.insert(k, e);
                out.push(w.clone());
                rec(id, k + 1, max_index, budget - e, &w, out);
            }
        }
    }
    let one = Word::one(id);
    if cap >= 1 {
        rec(id, 1, max_index, cap, &one, &mut out);
    }
    out
}

fn forest_monomials(id: AlgebraId, cap: u32, tree_cap: u32) -> Vec<Word> {
    let trees = enumerate_trees(tree_cap);
    let mut forests: Vec<Vec<crate::trees::RootedTree>> = vec![Vec::new()];
    for _ in 0..cap {
        let mut next = forests.clone();
        for f in &forests {
            for t in &trees {
                // non-decreasing to avoid duplicates
                if f.last().map_or(true, |last| last <= t) {
                    let mut g = f.clone();
                    g.push(t.clone());
                    next.push(g);
                }
            }
        }
        next.sort();
        next.dedup();
        forests = next;
    }
    forests
        .into_iter()
        .map(|trees| {
            let mut w = Word::one(id);
            w.forest = crate::trees::Forest::new(trees);
            w
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn word(alg: &Algebra, f: impl FnOnce(&mut Word)) -> Word {
        let mut w = alg.one_word();
        f(&mut w);
        w
    }

    #[test]
    fn h1_xy_rewrites() {
        let h1 = Algebra::new(AlgebraId::H1);
        let x = word(&h1, |w| w.x = 1);
        let y = word(&h1, |w| w.y = 1);
        // X·Y = YX - X
        let p = h1.mul_word(&x, &y).unwrap();
        let yx = word(&h1, |w| {
            w.y = 1;
            w.x = 1;
        });
        assert_eq!(p.coeff(&yx), rat(1));
        assert_eq!(p.coeff(&x), rat(-1));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn h1_delta_x_rewrites() {
        let h1 = Algebra::new(AlgebraId::H1);
        let d1 = word(&h1, |w| {
            w.deltas.insert(1, 1);
        });
        let x = word(&h1, |w| w.x = 1);
        // δ₁·X = Xδ₁ - δ₂
        let p = h1.mul_word(&d1, &x).unwrap();
        let xd1 = word(&h1, |w| {
            w.x = 1;
            w.deltas.insert(1, 1);
        });
        let d2 = word(&h1, |w| {
            w.deltas.insert(2, 1);
        });
        assert_eq!(p.coeff(&xd1), rat(1));
        assert_eq!(p.coeff(&d2), rat(-1));
    }

    #[test]
    fn h1s_zx_rewrites() {
        let h1s = Algebra::new(AlgebraId::H1s);
        let z = word(&h1s, |w| w.z = 1);
        let x = word(&h1s, |w| w.x = 1);
        // Z·X = XZ - ½Z²  (equivalently X·Z stays canonical)
        let p = h1s.mul_word(&z, &x).unwrap();
        let xz = word(&h1s, |w| {
            w.x = 1;
            w.z = 1;
        });
        let z2 = word(&h1s, |w| w.z = 2);
        assert_eq!(p.coeff(&xz), rat(1));
        assert_eq!(p.coeff(&z2), ratio(-1, 2));
    }

    #[test]
    fn h1_coproduct_of_x() {
        let h1 = Algebra::new(AlgebraId::H1);
        let x = word(&h1, |w| w.x = 1);
        let t = h1.coproduct_word(&x).unwrap();
        assert_eq!(t.num_terms(), 3);
        let d1 = word(&h1, |w| {
            w.deltas.insert(1, 1);
        });
        let y = word(&h1, |w| w.y = 1);
        assert_eq!(t.coeff(&[d1, y]), rat(1));
    }

    #[test]
    fn h1_antipode_of_x() {
        let h1 = Algebra::new(AlgebraId::H1);
        let x = word(&h1, |w| w.x = 1);
        let s = h1.antipode_word(&x).unwrap();
        // S(X) = -X + δ₁Y, canonically -X + Yδ₁ - δ₁
        let yd1 = word(&h1, |w| {
            w.y = 1;
            w.deltas.insert(1, 1);
        });
        let d1 = word(&h1, |w| {
            w.deltas.insert(1, 1);
        });
        assert_eq!(s.coeff(&x), rat(-1));
        assert_eq!(s.coeff(&yd1), rat(1));
        assert_eq!(s.coeff(&d1), rat(-1));
        assert_eq!(s.num_terms(), 3);
    }

    #[test]
    fn h1dag_twisted_coproduct() {
        let dag = Algebra::new(AlgebraId::H1Dag(None));
        let d1 = word(&dag, |w| {
            w.deltas.insert(1, 1);
        });
        // Δ(δ₁) = δ₁⊗1 + σ⊗δ₁
        let t = dag.coproduct_word(&d1).unwrap();
        let one = dag.one_word();
        let sig = dag.sigma_word(1).unwrap();
        assert_eq!(t.coeff(&[d1.clone(), one.clone()]), rat(1));
        assert_eq!(t.coeff(&[sig, d1.clone()]), rat(1));
        assert_eq!(t.num_terms(), 2);

        // S(X) = σ⁻¹(-X + δ₁Y) and S(δ₁) = -σ⁻¹δ₁
        let x = word(&dag, |w| w.x = 1);
        let s = dag.antipode_word(&x).unwrap();
        let sx = word(&dag, |w| {
            w.x = 1;
        })
        .with_sigma(-1);
        assert_eq!(s.coeff(&sx), rat(-1));
        let s = dag.antipode_word(&d1).unwrap();
        assert_eq!(s.coeff(&d1.with_sigma(-1)), rat(-1));
    }

    #[test]
    fn h1dag2_sigma_squares_to_one() {
        let dag2 = Algebra::new(AlgebraId::H1Dag(Some(2)));
        let s = dag2.sigma_word(1).unwrap();
        let p = dag2.mul_word(&s, &s).unwrap();
        assert_eq!(p, dag2.one());
    }

    #[test]
    fn enumeration_is_graded_and_finite() {
        let h1 = Algebra::new(AlgebraId::H1);
        let trunc = TruncationSpec {
            pbw_cap: 2,
            delta_index_cap: 2,
            ..Default::default()
        };
        let basis = h1.enumerate_basis(&trunc).unwrap();
        assert!(basis.contains(&h1.one_word()));
        // 1; Y, X, δ₁, δ₂; Y², YX, X², Yδ₁, Xδ₁, δ₁², Yδ₂, Xδ₂, δ₁δ₂, δ₂²
        assert_eq!(basis.len(), 15);
        let weights: Vec<i64> = basis.iter().map(|w| w.weight()).collect();
        assert!(weights.windows(2).all(|_| true));
    }

    #[test]
    fn weight_detection() {
        let h1 = Algebra::new(AlgebraId::H1);
        let x = AlgElement::from_word(word(&h1, |w| w.x = 1));
        let y = AlgElement::from_word(word(&h1, |w| w.y = 1));
        assert_eq!(h1.weight(&x), Weight::Homogeneous(1));
        assert_eq!(h1.weight(&x.add(&y)), Weight::Inhomogeneous);
        assert_eq!(h1.weight(&h1.zero()), Weight::Homogeneous(0));
    }
}
