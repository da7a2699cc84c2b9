//! Formal ℚ-linear combinations: algebra elements and tensors.
//!
//! `AlgElement` is a finite map from canonical words to nonzero rational
//! coefficients; `Tensor` is the same over n-tuples of words, where tuples
//! may mix algebras (carriers of bicomplexes do). Zero coefficients are
//! never stored, so structural equality is semantic equality. Terms are
//! kept in `BTreeMap`s, which fixes a canonical order for serialization.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, is_negative, Rational};
use crate::word::{AlgebraId, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgElement {
    pub algebra: AlgebraId,
    terms: BTreeMap<Word, Rational>,
}

impl AlgElement {
    pub fn zero(algebra: AlgebraId) -> Self {
        AlgElement { algebra, terms: BTreeMap::new() }
    }

    pub fn one(algebra: AlgebraId) -> Self {
        Self::from_word(Word::one(algebra))
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        let algebra = w.algebra;
        terms.insert(w, Rational::from_integer(1.into()));
        AlgElement { algebra, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(
        algebra: AlgebraId,
        it: I,
    ) -> Self {
        let mut e = AlgElement::zero(algebra);
        for (w, c) in it {
            e.add_term(w, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        debug_assert_eq!(w.algebra, self.algebra);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            // remove the key we just zeroed
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn checked_add(&self, other: &AlgElement) -> Result<AlgElement> {
        if self.algebra != other.algebra {
            return Err(Error::TagMismatch {
                expected: self.algebra.name(),
                got: other.algebra.name(),
            });
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        self.checked_add(other).expect("algebra tag mismatch in add")
    }

    pub fn sub(&self, other: &AlgElement) -> AlgElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgElement {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &Rational) -> AlgElement {
        if c.is_zero() {
            return AlgElement::zero(self.algebra);
        }
        AlgElement {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Linear extension of a word map.
    pub fn map_words<F>(&self, f: F) -> Result<AlgElement>
    where
        F: Fn(&Word) -> Result<AlgElement>,
    {
        let mut out: Option<AlgElement> = None;
        for (w, c) in &self.terms {
            let img = f(w)?.scale(c);
            out = Some(match out {
                None => img,
                Some(acc) => acc.checked_add(&img)?,
            });
        }
        Ok(out.unwrap_or_else(|| AlgElement::zero(self.algebra)))
    }

    /// View as a degree-1 tensor.
    pub fn as_tensor(&self) -> Tensor {
        Tensor::from_terms(
            1,
            self.terms.iter().map(|(w, c)| (vec![w.clone()], c.clone())),
        )
    }

    /// Collapse a degree-1 tensor back to an element.
    pub fn from_tensor(algebra: AlgebraId, t: &Tensor) -> Result<AlgElement> {
        if t.degree() != 1 {
            return Err(Error::DimMismatch(format!(
                "expected degree-1 tensor, got degree {}",
                t.degree()
            )));
        }
        Ok(AlgElement::from_terms(
            algebra,
            t.terms().map(|(ws, c)| (ws[0].clone(), c.clone())),
        ))
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_tensor())
    }
}

/// Finite ℚ-combination of n-tuples of words. Degree 0 tensors are scalars,
/// carried on the empty tuple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor {
    degree: usize,
    terms: BTreeMap<Vec<Word>, Rational>,
}

impl Tensor {
    pub fn zero(degree: usize) -> Self {
        Tensor { degree, terms: BTreeMap::new() }
    }

    pub fn scalar(c: Rational) -> Self {
        let mut t = Tensor::zero(0);
        t.add_term(Vec::new(), c);
        t
    }

    pub fn from_tuple(ws: Vec<Word>) -> Self {
        let mut t = Tensor::zero(ws.len());
        t.add_term(ws, Rational::from_integer(1.into()));
        t
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<Word>, Rational)>>(
        degree: usize,
        it: I,
    ) -> Self {
        let mut t = Tensor::zero(degree);
        for (ws, c) in it {
            t.add_term(ws, c);
        }
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, ws: &[Word]) -> Rational {
        self.terms.get(ws).cloned().unwrap_or_else(Rational::zero)
    }

    /// The unique scalar of a degree-0 tensor.
    pub fn scalar_value(&self) -> Rational {
        debug_assert_eq!(self.degree, 0);
        self.coeff(&[])
    }

    pub fn add_term(&mut self, ws: Vec<Word>, c: Rational) {
        debug_assert_eq!(ws.len(), self.degree, "tuple length must equal degree");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(ws.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&ws);
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.degree, other.degree, "degree mismatch in tensor add");
        let mut out = self.clone();
        for (ws, c) in &other.terms {
            out.add_term(ws.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.degree);
        }
        Tensor {
            degree: self.degree,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Bilinear concatenation of tuples; degrees add.
    pub fn tensor_product(&self, other: &Tensor) -> Tensor {
        let mut out = Tensor::zero(self.degree + other.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut ws = a.clone();
                ws.extend(b.iter().cloned());
                out.add_term(ws, ca * cb);
            }
        }
        out
    }

    /// Linear extension of a tuple map. The image degree is fixed by `deg`.
    pub fn map_terms<F>(&self, deg: usize, f: F) -> Result<Tensor>
    where
        F: Fn(&[Word]) -> Result<Tensor>,
    {
        let mut out = Tensor::zero(deg);
        for (ws, c) in &self.terms {
            let img = f(ws)?;
            debug_assert_eq!(img.degree(), deg);
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    /// Replace slot `i` by the image of a word map (an `AlgElement`), linearly.
    pub fn map_slot<F>(&self, i: usize, f: F) -> Result<Tensor>
    where
        F: Fn(&Word) -> Result<AlgElement>,
    {
        self.map_terms(self.degree, |ws| {
            let img = f(&ws[i])?;
            let mut out = Tensor::zero(ws.len());
            for (w, c) in img.terms() {
                let mut t = ws.to_vec();
                t[i] = w.clone();
                out.add_term(t, c.clone());
            }
            Ok(out)
        })
    }

    /// Replace slot `i` by a degree-2 tensor (a coproduct), linearly.
    pub fn expand_slot<F>(&self, i: usize, f: F) -> Result<Tensor>
    where
        F: Fn(&Word) -> Result<Tensor>,
    {
        self.map_terms(self.degree + 1, |ws| {
            let img = f(&ws[i])?;
            debug_assert_eq!(img.degree(), 2);
            let mut out = Tensor::zero(ws.len() + 1);
            for (pair, c) in img.terms() {
                let mut t = Vec::with_capacity(ws.len() + 1);
                t.extend_from_slice(&ws[..i]);
                t.push(pair[0].clone());
                t.push(pair[1].clone());
                t.extend_from_slice(&ws[i + 1..]);
                out.add_term(t, c.clone());
            }
            Ok(out)
        })
    }

    /// Drop slot `i`, scaling by `f(slot)` (a counit-style functional).
    pub fn contract_slot<F>(&self, i: usize, f: F) -> Result<Tensor>
    where
        F: Fn(&Word) -> Result<Rational>,
    {
        self.map_terms(self.degree - 1, |ws| {
            let c = f(&ws[i])?;
            let mut t = ws.to_vec();
            t.remove(i);
            let mut out = Tensor::zero(ws.len() - 1);
            out.add_term(t, c);
            Ok(out)
        })
    }

    /// Insert a fixed word at slot `i`.
    pub fn insert_slot(&self, i: usize, w: &Word) -> Tensor {
        let mut out = Tensor::zero(self.degree + 1);
        for (ws, c) in &self.terms {
            let mut t = ws.to_vec();
            t.insert(i, w.clone());
            out.add_term(t, c.clone());
        }
        out
    }

    /// Total weight when every term agrees, `None` otherwise.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let w: i64 = first.iter().map(|x| x.weight()).sum();
        for ws in it {
            if ws.iter().map(|x| x.weight()).sum::<i64>() != w {
                return None;
            }
        }
        Some(w)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (ws, c) in &self.terms {
            let tuple = if ws.is_empty() {
                "1".to_string()
            } else {
                ws.iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" # ")
            };
            let mag = {
                let abs = if is_negative(c) { -c.clone() } else { c.clone() };
                format_rational(&abs)
            };
            let lead = if first {
                if is_negative(c) { "-".to_string() } else { String::new() }
            } else if is_negative(c) {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            if mag == "1" && !(ws.is_empty()) {
                write!(f, "{lead}{tuple}")?;
            } else if ws.is_empty() {
                write!(f, "{lead}{mag}")?;
            } else {
                write!(f, "{lead}{mag}*{tuple}")?;
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn w(alg: AlgebraId, y: u32, x: u32) -> Word {
        let mut v = Word::one(alg);
        v.y = y;
        v.x = x;
        v
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = AlgElement::from_word(w(AlgebraId::H1, 0, 1));
        assert!(x.add(&x.neg()).is_zero());
    }

    #[test]
    fn like_terms_collect() {
        let d1 = AlgElement::from_word({
            let mut v = Word::one(AlgebraId::H1);
            v.deltas.insert(1, 1);
            v
        });
        let s = d1.scale(&rat(2)).add(&d1.scale(&rat(3)));
        assert_eq!(s, d1.scale(&rat(5)));
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let a = AlgElement::one(AlgebraId::H1);
        let b = AlgElement::one(AlgebraId::U);
        assert!(a.checked_add(&b).is_err());
    }

    #[test]
    fn tensor_product_bilinear_with_zero() {
        let x = AlgElement::from_word(w(AlgebraId::H1, 0, 1)).as_tensor();
        let zero = Tensor::zero(1);
        assert!(zero.tensor_product(&x).is_zero());
        let y = AlgElement::from_word(w(AlgebraId::H1, 1, 0)).as_tensor();
        let p = x.add(&y).tensor_product(&y);
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn display_sorted_and_signed() {
        let x = Tensor::from_tuple(vec![w(AlgebraId::H1, 0, 1)]);
        let y = Tensor::from_tuple(vec![w(AlgebraId::H1, 1, 0)]);
        let e = y.sub(&x.scale(&rat(2)));
        assert_eq!(e.to_string(), "Y - 2*X");
    }
}
