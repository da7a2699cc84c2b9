//! Hopf-algebra level verifications: axioms, modular pairs in involution,
//! comodule Hopf algebras, cocrossed products and SAYD modules.
//!
//! Checks are bounded by a `TruncationSpec`, enumerate basis words in
//! graded order and report the first counterexample as a witness.

use num_traits::One;

use crate::algebra::{Algebra, Character, Coaction, CoactionKind, ModularPair};
use crate::element::{AlgElement, Tensor};
use crate::error::{Error, Result};
use crate::report::Report;
use crate::trunc::TruncationSpec;
use crate::word::{AlgebraId, Word};

/// (Δ⊗id)Δ = (id⊗Δ)Δ on every basis word within the cap.
pub fn check_coassociativity(alg: &Algebra, trunc: &TruncationSpec) -> Result<Report> {
    let report = Report::new("coassociativity", alg.name());
    for w in alg.enumerate_basis(trunc)? {
        let cop = alg.coproduct_word(&w)?;
        let lhs = cop.expand_slot(0, |v| alg.coproduct_word(v))?;
        let rhs = cop.expand_slot(1, |v| alg.coproduct_word(v))?;
        if lhs != rhs {
            return Ok(report.fail(&w, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ"));
        }
    }
    Ok(report)
}

/// (ε⊗id)Δ = id = (id⊗ε)Δ on every basis word within the cap.
pub fn check_counit(alg: &Algebra, trunc: &TruncationSpec) -> Result<Report> {
    let report = Report::new("counit", alg.name());
    for w in alg.enumerate_basis(trunc)? {
        let cop = alg.coproduct_word(&w)?;
        let left = cop.contract_slot(0, |v| Ok(alg.counit_word(v)))?;
        let right = cop.contract_slot(1, |v| Ok(alg.counit_word(v)))?;
        let id = Tensor::from_tuple(vec![w.clone()]);
        if left != id || right != id {
            return Ok(report.fail(&w, "counit axiom fails"));
        }
    }
    Ok(report)
}

/// m(S⊗id)Δ = ηε = m(id⊗S)Δ on every basis word within the cap.
pub fn check_antipode(alg: &Algebra, trunc: &TruncationSpec) -> Result<Report> {
    let report = Report::new("antipode", alg.name());
    for w in alg.enumerate_basis(trunc)? {
        let cop = alg.coproduct_word(&w)?;
        let mut left = alg.zero();
        let mut right = alg.zero();
        for (ws, c) in cop.terms() {
            let s1 = alg.antipode_word(&ws[0])?;
            left = left.add(&alg.mul(&s1, &AlgElement::from_word(ws[1].clone()))?.scale(c));
            let s2 = alg.antipode_word(&ws[1])?;
            right = right.add(&alg.mul(&AlgElement::from_word(ws[0].clone()), &s2)?.scale(c));
        }
        let expected = alg.one().scale(&alg.counit_word(&w));
        if left != expected || right != expected {
            return Ok(report.fail(&w, "antipode convolution identity fails"));
        }
    }
    Ok(report)
}

/// All three Hopf axioms in one report.
pub fn check_hopf_axioms(alg: &Algebra, trunc: &TruncationSpec) -> Result<Vec<Report>> {
    Ok(vec![
        check_coassociativity(alg, trunc)?,
        check_counit(alg, trunc)?,
        check_antipode(alg, trunc)?,
    ])
}

/// S_δ²(w) = σ w σ⁻¹ for every basis word within the cap.
pub fn check_mpi(alg: &Algebra, pair: &ModularPair, trunc: &TruncationSpec) -> Result<Report> {
    let mut report = Report::new("mpi", alg.name())
        .with_param("sigma", &pair.sigma)
        .with_param("delta(Y)", crate::scalar::format_rational(&pair.delta.on_y));
    // δ(σ) = 1 is part of the definition
    let dsig = pair.delta.eval_word(&pair.sigma)?;
    if !dsig.is_one() {
        return Ok(report.fail(&pair.sigma, "δ(σ) ≠ 1"));
    }
    // σ group-like
    let cop = alg.coproduct_word(&pair.sigma)?;
    let expect = Tensor::from_tuple(vec![pair.sigma.clone(), pair.sigma.clone()]);
    if cop != expect {
        return Ok(report.fail(&pair.sigma, "σ is not group-like"));
    }
    let sigma = AlgElement::from_word(pair.sigma.clone());
    let sigma_inv = AlgElement::from_word(pair.sigma_inverse());
    for w in alg.enumerate_basis(trunc)? {
        let x = AlgElement::from_word(w.clone());
        let s2 = alg.twisted_antipode(&pair.delta, &alg.twisted_antipode(&pair.delta, &x)?)?;
        let conj = alg.mul(&alg.mul(&sigma, &x)?, &sigma_inv)?;
        if s2 != conj {
            return Ok(report.fail(&w, "S_δ² ≠ Ad σ"));
        }
    }
    report = report.note("S_δ² = Ad σ on all enumerated basis words");
    Ok(report)
}

/// Comodule-algebra, comodule-coalgebra and antipode-colinearity checks
/// for a coaction ρ: H → K ⊗ H.
pub fn check_comodule_hopf(rho: &Coaction, trunc: &TruncationSpec) -> Result<Report> {
    let h = &rho.h;
    let k = &rho.k;
    let report = Report::new("comodule-hopf", h.name()).with_param("K", k.name());
    let basis = h.enumerate_basis(trunc)?;

    // (c-a-2) ρ(1) = 1⊗1
    let one = rho.apply_word(&h.one_word())?;
    if one != Tensor::from_tuple(vec![k.one_word(), h.one_word()]) {
        return Ok(report.fail(h.one_word(), "c-a-2: ρ(1) ≠ 1⊗1"));
    }

    // (c-a-1) multiplicativity on basis pairs
    for a in &basis {
        for b in &basis {
            let prod = h.mul_word(a, b)?;
            let lhs = rho.apply(&prod)?;
            let ra = rho.apply_word(a)?;
            let rb = rho.apply_word(b)?;
            let mut rhs = Tensor::zero(2);
            for (aw, ac) in ra.terms() {
                for (bw, bc) in rb.terms() {
                    let kk = k.mul_word(&aw[0], &bw[0])?;
                    let hh = h.mul_word(&aw[1], &bw[1])?;
                    for (kw, kc) in kk.terms() {
                        for (hw, hc) in hh.terms() {
                            rhs.add_term(vec![kw.clone(), hw.clone()], ac * bc * kc * hc);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Ok(report.fail(
                    format!("({a}, {b})"),
                    "c-a-1: ρ not multiplicative on this pair",
                ));
            }
        }
    }

    // (c-c-2) ε(h₋₁)⊗h₀ = 1⊗h
    for w in &basis {
        let r = rho.apply_word(w)?;
        let collapsed = r.contract_slot(0, |v| Ok(k.counit_word(v)))?;
        if collapsed != Tensor::from_tuple(vec![w.clone()]) {
            return Ok(report.fail(w, "c-c-2: counit of the coaction leg fails"));
        }
    }

    // (c-c-1) compatibility of Δ and ρ
    for w in &basis {
        // h₍₁₎₍₋₁₎h₍₂₎₍₋₁₎ ⊗ h₍₁₎₍₀₎ ⊗ h₍₂₎₍₀₎
        let cop = h.coproduct_word(w)?;
        let mut lhs = Tensor::zero(3);
        for (ws, c) in cop.terms() {
            let r1 = rho.apply_word(&ws[0])?;
            let r2 = rho.apply_word(&ws[1])?;
            for (a, ca) in r1.terms() {
                for (b, cb) in r2.terms() {
                    let kk = k.mul_word(&a[0], &b[0])?;
                    for (kw, kc) in kk.terms() {
                        lhs.add_term(
                            vec![kw.clone(), a[1].clone(), b[1].clone()],
                            c * ca * cb * kc,
                        );
                    }
                }
            }
        }
        // h₍₋₁₎ ⊗ Δ(h₍₀₎)
        let r = rho.apply_word(w)?;
        let mut rhs = Tensor::zero(3);
        for (ws, c) in r.terms() {
            let cop0 = h.coproduct_word(&ws[1])?;
            for (cs, cc) in cop0.terms() {
                rhs.add_term(vec![ws[0].clone(), cs[0].clone(), cs[1].clone()], c * cc);
            }
        }
        if lhs != rhs {
            return Ok(report.fail(w, "c-c-1: coaction does not commute with Δ"));
        }
    }

    // Lemma: the antipode is K-colinear
    for w in &basis {
        let r = rho.apply_word(w)?;
        let lhs = r.map_slot(1, |v| h.antipode_word(v))?;
        let s = h.antipode_word(w)?;
        let rhs = rho.apply(&s)?;
        if lhs != rhs {
            return Ok(report.fail(w, "antipode is not K-colinear"));
        }
    }

    Ok(report.note("c-a-1, c-a-2, c-c-1, c-c-2 and S-colinearity hold"))
}

/// The cocrossed product Hopf algebra H ⋊ K for a σ-grading coaction.
/// The registered family realizes these as the σ-covers.
pub fn cocrossed_product(h: &Algebra, k: &Algebra, rho: &Coaction) -> Result<Algebra> {
    if !k.is_commutative() {
        return Err(Error::Unsupported(format!(
            "cocrossed product needs commutative K, got {}",
            k.name()
        )));
    }
    if !matches!(rho.kind(), CoactionKind::WeightSigma) {
        return Err(Error::Unsupported(
            "only the σ-grading coaction has a registered cocrossed product".into(),
        ));
    }
    let n = match k.id() {
        AlgebraId::K(n) => n,
        other => {
            return Err(Error::Unsupported(format!(
                "cocrossed product needs the group algebra of σ, got {}",
                other.name()
            )))
        }
    };
    match h.id() {
        AlgebraId::H1 => Ok(Algebra::new(AlgebraId::H1Dag(n))),
        AlgebraId::Hck => Ok(Algebra::new(AlgebraId::HckDag(n))),
        other => Err(Error::Unsupported(format!(
            "no registered cocrossed product for {}",
            other.name()
        ))),
    }
}

/// Combine MPIs of H and K into an MPI of H ⋊ K (Proposition MPI).
/// Preconditions — α K-colinear, μ coinvariant, β stable — are verified on
/// basis words within the cap; failures return an error with a witness.
pub fn combined_mpi(
    h_pair: &ModularPair,
    k_pair: &ModularPair,
    rho: &Coaction,
    product: &Algebra,
    trunc: &TruncationSpec,
) -> Result<ModularPair> {
    let h = &rho.h;
    let k = &rho.k;
    let basis = h.enumerate_basis(trunc)?;

    // α colinear: α(h₍₀₎) h₍₋₁₎ = α(h) 1_K
    for w in &basis {
        let r = rho.apply_word(w)?;
        let mut lhs = AlgElement::zero(k.id());
        for (ws, c) in r.terms() {
            lhs.add_term(ws[0].clone(), c * h_pair.delta.eval_word(&ws[1])?);
        }
        let rhs = AlgElement::one(k.id()).scale(&h_pair.delta.eval_word(w)?);
        if lhs != rhs {
            return Err(Error::Invalid(format!(
                "character α is not K-colinear, witness {w}"
            )));
        }
    }
    // μ coinvariant: ρ(μ) = 1 ⊗ μ
    let rmu = rho.apply_word(&h_pair.sigma)?;
    if rmu != Tensor::from_tuple(vec![k.one_word(), h_pair.sigma.clone()]) {
        return Err(Error::Invalid(format!(
            "group-like μ = {} is not coinvariant",
            h_pair.sigma
        )));
    }
    // β stable: β(h₍₋₁₎) h₍₀₎ = h
    for w in &basis {
        let r = rho.apply_word(w)?;
        let mut lhs = AlgElement::zero(h.id());
        for (ws, c) in r.terms() {
            lhs.add_term(ws[1].clone(), c * k_pair.delta.eval_word(&ws[0])?);
        }
        if lhs != AlgElement::from_word(w.clone()) {
            return Err(Error::Invalid(format!(
                "character β is not stable, witness {w}"
            )));
        }
    }

    // (α⊗β, μ⋊ν) on the product algebra
    let delta = Character {
        algebra: product.id(),
        on_y: h_pair.delta.on_y.clone(),
        on_x: h_pair.delta.on_x.clone(),
        on_z: h_pair.delta.on_z.clone(),
        on_sigma: k_pair.delta.on_sigma.clone(),
    };
    let sigma = product.join_parts(&h_pair.sigma, &k_pair.sigma)?;
    ModularPair::new(delta, sigma)
}

/// A stable anti-Yetter-Drinfeld module over `base`, with a tuple carrier.
pub struct SaydModule {
    pub base: Algebra,
    pub width: usize,
    kind: SaydKind,
}

enum SaydKind {
    /// 1-dimensional ^σℂ_δ: action by δ, coaction by σ.
    MpiCoeff { pair: ModularPair },
    /// H^{⊗q} over K: action h̃·k = β(k) h̃, coaction h̃ ↦ h̃₍₋₁₎ν ⊗ h̃₍₀₎.
    TensorPowers {
        h: Algebra,
        coaction: Coaction,
        beta: Character,
        nu: Word,
    },
}

impl SaydModule {
    pub fn mpi_coeff(base: &Algebra, pair: ModularPair) -> SaydModule {
        SaydModule { base: *base, width: 0, kind: SaydKind::MpiCoeff { pair } }
    }

    /// The Lemma-lSAYD module H^{⊗q} over K = `base`.
    pub fn tensor_powers(
        base: &Algebra,
        h: &Algebra,
        coaction: Coaction,
        beta: Character,
        nu: Word,
        q: usize,
    ) -> SaydModule {
        SaydModule {
            base: *base,
            width: q,
            kind: SaydKind::TensorPowers { h: *h, coaction, beta, nu },
        }
    }

    pub fn pair(&self) -> Option<&ModularPair> {
        match &self.kind {
            SaydKind::MpiCoeff { pair } => Some(pair),
            _ => None,
        }
    }

    /// Right action by one base word; result has carrier width.
    pub fn act(&self, carrier: &[Word], h: &Word) -> Result<Tensor> {
        debug_assert_eq!(carrier.len(), self.width);
        match &self.kind {
            SaydKind::MpiCoeff { pair } => {
                let c = pair.delta.eval_word(h)?;
                Ok(Tensor::from_terms(0, [(Vec::new(), c)]))
            }
            SaydKind::TensorPowers { beta, .. } => {
                let c = beta.eval_word(h)?;
                Ok(Tensor::from_tuple(carrier.to_vec()).scale(&c))
            }
        }
    }

    /// Left coaction; result degree = width + 1, base-slot first.
    pub fn coact(&self, carrier: &[Word]) -> Result<Tensor> {
        debug_assert_eq!(carrier.len(), self.width);
        match &self.kind {
            SaydKind::MpiCoeff { pair } => {
                Ok(Tensor::from_tuple(vec![pair.sigma.clone()]))
            }
            SaydKind::TensorPowers { coaction, nu, .. } => {
                let t = coaction.coact_tuple(carrier)?;
                t.map_slot(0, |k| self.base.mul_word(k, nu))
            }
        }
    }

    /// Enumerated carrier basis within the truncation window.
    pub fn carrier_basis(&self, trunc: &TruncationSpec) -> Result<Vec<Vec<Word>>> {
        match &self.kind {
            SaydKind::MpiCoeff { .. } => Ok(vec![Vec::new()]),
            SaydKind::TensorPowers { h, .. } => {
                let words = h.enumerate_basis(trunc)?;
                let mut out: Vec<Vec<Word>> = vec![Vec::new()];
                for _ in 0..self.width {
                    let mut next = Vec::new();
                    for t in &out {
                        for w in &words {
                            let mut v = t.clone();
                            v.push(w.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                Ok(out)
            }
        }
    }
}

/// Verify the AYD condition and stability on carrier basis × generators.
pub fn check_sayd(m: &SaydModule, trunc: &TruncationSpec) -> Result<Report> {
    let base = &m.base;
    let report = Report::new("sayd", base.name()).with_param("width", m.width);
    let carriers = m.carrier_basis(trunc)?;
    let gens = base.generators(trunc);

    for carrier in &carriers {
        // stability: m₍₀₎ · m₍₋₁₎ = m
        let co = m.coact(carrier)?;
        let mut stab = Tensor::zero(m.width);
        for (ws, c) in co.terms() {
            let acted = m.act(&ws[1..], &ws[0])?;
            stab = stab.add(&acted.scale(c));
        }
        if stab != Tensor::from_tuple(carrier.clone()) {
            return Ok(report.fail(
                Tensor::from_tuple(carrier.clone()),
                "stability m₍₀₎m₍₋₁₎ = m fails",
            ));
        }

        for g in &gens {
            // (mh)₍₋₁₎ ⊗ (mh)₍₀₎
            let mh = m.act(carrier, g)?;
            let mut lhs = Tensor::zero(m.width + 1);
            for (ws, c) in mh.terms() {
                lhs = lhs.add(&m.coact(ws)?.scale(c));
            }
            // S(h₍₃₎) m₍₋₁₎ h₍₁₎ ⊗ m₍₀₎ h₍₂₎
            let d2 = base.iterated_coproduct(&AlgElement::from_word(g.clone()), 3)?;
            let mut rhs = Tensor::zero(m.width + 1);
            for (hs, hc) in d2.terms() {
                let s3 = base.antipode_word(&hs[2])?;
                for (ws, c) in co.terms() {
                    // K-slot: S(h₍₃₎)·m₍₋₁₎·h₍₁₎
                    let k_slot = base.mul(
                        &base.mul(&s3, &AlgElement::from_word(ws[0].clone()))?,
                        &AlgElement::from_word(hs[0].clone()),
                    )?;
                    // carrier: m₍₀₎ · h₍₂₎
                    let acted = m.act(&ws[1..], &hs[1])?;
                    for (kw, kc) in k_slot.terms() {
                        for (aw, ac) in acted.terms() {
                            let mut t = Vec::with_capacity(m.width + 1);
                            t.push(kw.clone());
                            t.extend(aw.iter().cloned());
                            rhs.add_term(t, hc * c * kc * ac);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Ok(report.fail(
                    format!("carrier {}, generator {g}", Tensor::from_tuple(carrier.clone())),
                    "anti-Yetter-Drinfeld condition fails",
                ));
            }
        }
    }
    Ok(report.note("AYD condition and stability hold on the enumerated carrier"))
}

/// Lemma `twisted`: a K-colinear character α has K-colinear S_α.
pub fn check_twisted_colinear(
    rho: &Coaction,
    alpha: &Character,
    trunc: &TruncationSpec,
) -> Result<Report> {
    let h = &rho.h;
    let report = Report::new("twisted-colinearity", h.name());
    for w in h.enumerate_basis(trunc)? {
        // S_α(h)₍₋₁₎ ⊗ S_α(h)₍₀₎
        let sa = h.twisted_antipode(alpha, &AlgElement::from_word(w.clone()))?;
        let lhs = rho.apply(&sa)?;
        // h₍₋₁₎ ⊗ S_α(h₍₀₎)
        let r = rho.apply_word(&w)?;
        let mut rhs = Tensor::zero(2);
        for (ws, c) in r.terms() {
            let img = h.twisted_antipode(alpha, &AlgElement::from_word(ws[1].clone()))?;
            for (iw, ic) in img.terms() {
                rhs.add_term(vec![ws[0].clone(), iw.clone()], c * ic);
            }
        }
        if lhs != rhs {
            return Ok(report.fail(&w, "S_α is not K-colinear"));
        }
    }
    Ok(report)
}

/// Lemma `tantipode`: S_{α⊗β}(h⋊k) = S_α(h₍₀₎) ⋊ S_β(h₍₋₁₎ k) on the
/// σ-cover `product` of `rho.h`.
pub fn check_tantipode(
    rho: &Coaction,
    product: &Algebra,
    alpha: &Character,
    beta: &Character,
    trunc: &TruncationSpec,
) -> Result<Report> {
    let h = &rho.h;
    let k = &rho.k;
    let report = Report::new("tantipode", product.name());
    let combined = Character {
        algebra: product.id(),
        on_y: alpha.on_y.clone(),
        on_x: alpha.on_x.clone(),
        on_z: alpha.on_z.clone(),
        on_sigma: beta.on_sigma.clone(),
    };
    let h_basis = h.enumerate_basis(trunc)?;
    let sigmas = trunc.sigma_values(k.id().sigma_modulus());
    for hw in &h_basis {
        for s in &sigmas {
            let kw = k.sigma_word(*s)?;
            let w = product.join_parts(hw, &kw)?;
            let lhs = product.twisted_antipode(&combined, &AlgElement::from_word(w))?;
            // S_α(h₍₀₎) ⋊ S_β(h₍₋₁₎ k)
            let r = rho.apply_word(hw)?;
            let mut rhs = AlgElement::zero(product.id());
            for (ws, c) in r.terms() {
                let sh = h.twisted_antipode(alpha, &AlgElement::from_word(ws[1].clone()))?;
                let kk = k.mul_word(&ws[0], &kw)?;
                for (kkw, kkc) in kk.terms() {
                    let sk = k.twisted_antipode(beta, &AlgElement::from_word(kkw.clone()))?;
                    for (shw, shc) in sh.terms() {
                        for (skw, skc) in sk.terms() {
                            rhs.add_term(
                                product.join_parts(shw, skw)?,
                                c * kkc * shc * skc,
                            );
                        }
                    }
                }
            }
            if lhs != rhs {
                return Ok(report.fail(
                    format!("{hw} ⋊ σ^{s}"),
                    "tantipode formula fails",
                ));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn small() -> TruncationSpec {
        TruncationSpec {
            pbw_cap: 2,
            delta_index_cap: 2,
            tree_size_cap: 2,
            ..Default::default()
        }
    }

    #[test]
    fn h1_axioms_small_cap() {
        let h1 = Algebra::new(AlgebraId::H1);
        for r in check_hopf_axioms(&h1, &small()).unwrap() {
            assert!(r.passed(), "{}: {:?}", r.check, r.witness);
        }
    }

    #[test]
    fn h1_mpi_delta_one() {
        let h1 = Algebra::new(AlgebraId::H1);
        let pair = ModularPair::canonical(&h1, 0).unwrap();
        assert!(check_mpi(&h1, &pair, &small()).unwrap().passed());
    }

    #[test]
    fn corrupted_modular_character_fails_with_witness_x() {
        let h1 = Algebra::new(AlgebraId::H1);
        let mut delta = Character::modular(AlgebraId::H1);
        delta.on_y = rat(0);
        let pair = ModularPair::new(delta, h1.one_word()).unwrap();
        let r = check_mpi(&h1, &pair, &small()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.witness.as_deref(), Some("X"));
    }

    #[test]
    fn weight_coaction_is_comodule_hopf() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let rho = Coaction::weight_sigma(h1, k).unwrap();
        assert!(check_comodule_hopf(&rho, &small()).unwrap().passed());
    }

    #[test]
    fn trivial_coaction_is_comodule_hopf() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let rho = Coaction::trivial(h1, k);
        assert!(check_comodule_hopf(&rho, &small()).unwrap().passed());
    }

    #[test]
    fn corrupted_coaction_fails_c_a_1() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let rho = Coaction::corrupted_x(h1, k, 2).unwrap();
        let r = check_comodule_hopf(&rho, &small()).unwrap();
        assert!(!r.passed());
        assert!(r.notes.iter().any(|n| n.contains("c-a-1")), "{:?}", r.notes);
        assert_eq!(r.witness.as_deref(), Some("(d1, X)"));
    }

    #[test]
    fn combined_mpi_for_h1dag() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let dag = Algebra::new(AlgebraId::H1Dag(None));
        let rho = Coaction::weight_sigma(h1, k).unwrap();
        let hp = ModularPair::canonical(&h1, 0).unwrap();
        let kp = ModularPair::new(Character::counit(k.id()), k.sigma_word(-1).unwrap()).unwrap();
        let pair = combined_mpi(&hp, &kp, &rho, &dag, &small()).unwrap();
        assert_eq!(pair.sigma.sigma, -1);
        assert!(check_mpi(&dag, &pair, &small()).unwrap().passed());
    }

    #[test]
    fn unstable_beta_rejected_with_witness_x() {
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let dag = Algebra::new(AlgebraId::H1Dag(None));
        let rho = Coaction::weight_sigma(h1, k).unwrap();
        let hp = ModularPair::canonical(&h1, 0).unwrap();
        let mut beta = Character::counit(k.id());
        beta.on_sigma = rat(2);
        let kp = ModularPair::new(beta, k.one_word()).unwrap();
        let err = combined_mpi(&hp, &kp, &rho, &dag, &small()).unwrap_err();
        assert!(err.to_string().contains("witness X"), "{err}");
    }

    #[test]
    fn mpi_sayd_passes() {
        let h1 = Algebra::new(AlgebraId::H1);
        let pair = ModularPair::canonical(&h1, 0).unwrap();
        let m = SaydModule::mpi_coeff(&h1, pair);
        assert!(check_sayd(&m, &small()).unwrap().passed());
    }

    #[test]
    fn corrupted_sayd_action_fails() {
        let h1 = Algebra::new(AlgebraId::H1);
        let mut delta = Character::modular(AlgebraId::H1);
        delta.on_y = rat(2);
        let pair = ModularPair::new(delta, h1.one_word()).unwrap();
        let m = SaydModule::mpi_coeff(&h1, pair);
        let r = check_sayd(&m, &small()).unwrap();
        assert!(!r.passed());
        assert!(r.witness.is_some());
    }

    #[test]
    fn lsayd_tensor_powers_pass() {
        // H₁^{⊗2} over K with ν = σ⁻¹ (Lemma lSAYD)
        let h1 = Algebra::new(AlgebraId::H1);
        let k = Algebra::new(AlgebraId::K(None));
        let rho = Coaction::weight_sigma(h1, k).unwrap();
        let nu = k.sigma_word(-1).unwrap();
        let m = SaydModule::tensor_powers(&k, &h1, rho, Character::counit(k.id()), nu, 2);
        let tiny = TruncationSpec {
            pbw_cap: 1,
            delta_index_cap: 1,
            ..Default::default()
        };
        assert!(check_sayd(&m, &tiny).unwrap().passed());
    }
}
