//! The matched-pair machinery behind the family's normal forms.
//!
//! Every noncommutative algebra here is a crossed product of U = U(g₋)
//! (basis Y^p X^q, [Y, X] = X) with a commutative algebra of "functions"
//! (δ-monomials, Z-powers or forests) on which U acts from the right:
//!
//!   δ_k ◁ X = -δ_{k+1}   δ_k ◁ Y = -k δ_k
//!   Z   ◁ X = -½ Z²      Z   ◁ Y = -Z
//!   δ_T ◁ X = -N(δ_T)    δ_T ◁ Y = -|T| δ_T
//!
//! extended as a module algebra. Multiplication of canonical words reduces
//! to U-multiplication, binomial coproducts of U and this action, so no
//! letter-by-letter rewriting is ever needed.

use crate::element::AlgElement;
use crate::error::{Error, Result};
use crate::scalar::{binomial, rat, ratio, Rational};
use crate::trees::Forest;
use crate::word::{AlgebraId, Word};

/// `Y^p X^q · Y^a X^b` inside U, as pairs `(p', q') -> coefficient`.
/// Uses `X^q Y = (Y - q) X^q`.
pub(crate) fn u_mul_exponents(
    (p, q): (u32, u32),
    (a, b): (u32, u32),
) -> Vec<((u32, u32), Rational)> {
    // Y^p X^q Y^a X^b = Y^p (Y-q)^a X^{q+b}
    let mut out = Vec::new();
    for t in 0..=a {
        let coeff = binomial(a, t) * rat(-(q as i64)).pow((a - t) as i32);
        if coeff != Rational::from_integer(0.into()) {
            out.push(((p + t, q + b), coeff));
        }
    }
    out
}

/// One letter of the commutative part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum FLetter {
    Delta(u32),
    Z,
    Tree(crate::trees::RootedTree),
}

pub(crate) fn f_letters(w: &Word) -> Vec<(FLetter, u32)> {
    let mut out = Vec::new();
    for (k, e) in &w.deltas {
        out.push((FLetter::Delta(*k), *e));
    }
    if w.z > 0 {
        out.push((FLetter::Z, w.z));
    }
    for t in w.forest.trees() {
        out.push((FLetter::Tree(t.clone()), 1));
    }
    out
}

fn without_letter(w: &Word, l: &FLetter) -> Word {
    let mut v = w.clone();
    match l {
        FLetter::Delta(k) => {
            let e = v.deltas.get_mut(k).expect("letter present");
            if *e == 1 {
                v.deltas.remove(k);
            } else {
                *e -= 1;
            }
        }
        FLetter::Z => v.z -= 1,
        FLetter::Tree(t) => {
            v.forest = v.forest.remove_one(t).expect("letter present");
        }
    }
    v
}

/// Image of one letter under `◁ X`, tagged like `home`.
fn letter_act_x(
    l: &FLetter,
    home: &Word,
    delta_guard: u32,
    tree_guard: u32,
) -> Result<AlgElement> {
    let algebra = home.algebra;
    match l {
        FLetter::Delta(k) => {
            if k + 1 > delta_guard {
                return Err(Error::CapExceeded(format!(
                    "product creates d{} beyond the configured δ-index cap {delta_guard}",
                    k + 1
                )));
            }
            let mut w = Word::one(algebra);
            w.deltas.insert(k + 1, 1);
            Ok(AlgElement::from_word(w).neg())
        }
        FLetter::Z => {
            let mut w = Word::one(algebra);
            w.z = 2;
            Ok(AlgElement::from_word(w).scale(&ratio(-1, 2)))
        }
        FLetter::Tree(t) => {
            if t.size() + 1 > tree_guard {
                return Err(Error::CapExceeded(format!(
                    "grafting a tree of size {} exceeds the configured tree-size cap {tree_guard}",
                    t.size() + 1
                )));
            }
            // -N(δ_T): one summand per vertex, isomorphic results merged
            let mut out = AlgElement::zero(algebra);
            for grown in t.graft_all() {
                let mut w = Word::one(algebra);
                w.forest = Forest::single(grown);
                out.add_term(w, rat(-1));
            }
            Ok(out)
        }
    }
}

/// Right action `f ◁ Y^a X^b` of a U-monomial on a commutative word.
pub(crate) fn act_word(
    f: &Word,
    (a, b): (u32, u32),
    delta_guard: u32,
    tree_guard: u32,
) -> Result<AlgElement> {
    debug_assert!(f.y == 0 && f.x == 0, "action applies to the commutative part");
    // Y acts diagonally by -weight
    let eigen = rat(-f.weight()).pow(a as i32);
    let mut acc = AlgElement::from_word(f.clone()).scale(&eigen);
    // then b successive X-derivations
    for _ in 0..b {
        let mut next = AlgElement::zero(f.algebra);
        for (w, c) in acc.terms() {
            for (l, mult) in f_letters(w) {
                let rest = without_letter(w, &l);
                let img = letter_act_x(&l, w, delta_guard, tree_guard)?;
                for (iw, ic) in img.terms() {
                    next.add_term(merge_commutative(&rest, iw), c * ic * rat(mult as i64));
                }
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Product of two commutative words (exponent merge, σ included).
pub(crate) fn merge_commutative(a: &Word, b: &Word) -> Word {
    debug_assert_eq!(a.algebra, b.algebra);
    debug_assert!(b.y == 0 && b.x == 0);
    let mut out = a.clone();
    out.z += b.z;
    for (k, e) in &b.deltas {
        *out.deltas.entry(*k).or_insert(0) += e;
    }
    if !b.forest.is_empty() {
        out.forest = out.forest.merge(&b.forest);
    }
    out.with_sigma(a.sigma + b.sigma)
}

/// Crossed-product multiplication of canonical words:
/// `(u ⋊ f)(u' ⋊ f') = Σ u u'₍₁₎ ⋊ (f ◁ u'₍₂₎) f'` with σ-exponents added.
pub(crate) fn crossed_mul(
    a: &Word,
    b: &Word,
    delta_guard: u32,
    tree_guard: u32,
) -> Result<AlgElement> {
    let algebra = a.algebra;
    let mut fa = a.clone();
    fa.y = 0;
    fa.x = 0;
    fa.sigma = 0;
    let mut fb = b.clone();
    fb.y = 0;
    fb.x = 0;
    fb.sigma = 0;

    let mut out = AlgElement::zero(algebra);
    for i in 0..=b.y {
        for j in 0..=b.x {
            let c = binomial(b.y, i) * binomial(b.x, j);
            // u-part: Y^{a.y} X^{a.x} · Y^i X^j
            let uu = u_mul_exponents((a.y, a.x), (i, j));
            // f-part: (fa ◁ Y^{b.y-i} X^{b.x-j}) · fb
            let acted = act_word(&fa, (b.y - i, b.x - j), delta_guard, tree_guard)?;
            for ((p, q), cu) in &uu {
                for (fw, cf) in acted.terms() {
                    let mut w = merge_commutative(fw, &fb);
                    w.y = *p;
                    w.x = *q;
                    w = w.with_sigma(a.sigma + b.sigma);
                    out.add_term(w, &c * cu * cf);
                }
            }
        }
    }
    Ok(out)
}

/// The single-letter words.
pub(crate) fn letter_y(algebra: AlgebraId) -> Word {
    let mut w = Word::one(algebra);
    w.y = 1;
    w
}

pub(crate) fn letter_x(algebra: AlgebraId) -> Word {
    let mut w = Word::one(algebra);
    w.x = 1;
    w
}

pub(crate) fn letter_z(algebra: AlgebraId) -> Word {
    let mut w = Word::one(algebra);
    w.z = 1;
    w
}

pub(crate) fn letter_delta(algebra: AlgebraId, k: u32) -> Word {
    let mut w = Word::one(algebra);
    w.deltas.insert(k, 1);
    w
}

pub(crate) fn letter_tree(algebra: AlgebraId, t: crate::trees::RootedTree) -> Word {
    let mut w = Word::one(algebra);
    w.forest = Forest::single(t);
    w
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_relation_yx() {
        // X·Y = YX - X
        let terms = u_mul_exponents((0, 1), (1, 0));
        let mut m: BTreeMap<(u32, u32), Rational> = BTreeMap::new();
        for (k, c) in terms {
            *m.entry(k).or_insert_with(|| rat(0)) += c;
        }
        assert_eq!(m.get(&(1, 1)), Some(&rat(1)));
        assert_eq!(m.get(&(0, 1)), Some(&rat(-1)));
    }

    #[test]
    fn delta_action_raises_index() {
        let d1 = letter_delta(AlgebraId::H1, 1);
        let acted = act_word(&d1, (0, 1), 8, 8).unwrap();
        assert_eq!(acted, AlgElement::from_word(letter_delta(AlgebraId::H1, 2)).neg());
    }

    #[test]
    fn delta_guard_trips() {
        let d = letter_delta(AlgebraId::H1, 4);
        assert!(act_word(&d, (0, 1), 4, 8).is_err());
    }
}
