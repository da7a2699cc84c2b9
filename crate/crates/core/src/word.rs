//! Canonical basis words for the whole algebra family.
//!
//! Every algebra in the family has a PBW-style monomial basis of the shape
//! `σ^s · Y^p X^q Z^z · δ_1^{r_1}…δ_m^{r_m} · δ_{T_1}…δ_{T_j}`, each algebra
//! using only a subset of the letters. A `Word` stores the exponents of
//! that canonical form together with the tag of its owning algebra, so that
//! words from different algebras never compare equal and tuples mixing
//! algebras (as in bicomplex carriers) stay unambiguous.

use std::collections::BTreeMap;
use std::fmt;

use crate::trees::Forest;

/// Identifies one algebra of the registered family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum AlgebraId {
    /// H₁, generated by Y, X, δ_k.
    H1,
    /// The Schwarzian quotient, generated by Y, X, Z.
    H1s,
    /// σ-cover of H₁; `None` is the infinite cover, `Some(n)` imposes σ^n = 1.
    H1Dag(Option<u32>),
    /// Group algebra of σ; `None` = ℤ, `Some(n)` = ℤ/n.
    K(Option<u32>),
    /// U(g₋) with [Y, X] = X.
    U,
    /// Free commutative algebra on the δ_k.
    F,
    /// Polynomial algebra on the primitive Z.
    CZ,
    /// Free commutative algebra on rooted-tree symbols δ_T.
    Hrt,
    /// Extended Connes-Kreimer algebra U(g) ⋈ Hrt.
    Hck,
    /// σ-cover of Hck.
    HckDag(Option<u32>),
}

impl AlgebraId {
    pub fn name(&self) -> String {
        match self {
            AlgebraId::H1 => "h1".into(),
            AlgebraId::H1s => "h1s".into(),
            AlgebraId::H1Dag(None) => "h1dag".into(),
            AlgebraId::H1Dag(Some(n)) => format!("h1dagN:{n}"),
            AlgebraId::K(None) => "K".into(),
            AlgebraId::K(Some(n)) => format!("KmodN:{n}"),
            AlgebraId::U => "u".into(),
            AlgebraId::F => "f".into(),
            AlgebraId::CZ => "cz".into(),
            AlgebraId::Hrt => "hrt".into(),
            AlgebraId::Hck => "hck".into(),
            AlgebraId::HckDag(None) => "hckdag".into(),
            AlgebraId::HckDag(Some(n)) => format!("hckdagN:{n}"),
        }
    }

    /// σ-modulus when this algebra carries a cyclic σ.
    pub fn sigma_modulus(&self) -> Option<u32> {
        match self {
            AlgebraId::H1Dag(n) | AlgebraId::K(n) | AlgebraId::HckDag(n) => *n,
            _ => None,
        }
    }

    pub fn has_sigma(&self) -> bool {
        matches!(
            self,
            AlgebraId::H1Dag(_) | AlgebraId::K(_) | AlgebraId::HckDag(_)
        )
    }
}

/// A canonical monomial of its owning algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    pub algebra: AlgebraId,
    pub y: u32,
    pub x: u32,
    pub z: u32,
    /// δ-index → exponent, indices ≥ 1, exponents ≥ 1.
    pub deltas: BTreeMap<u32, u32>,
    pub forest: Forest,
    /// σ-exponent; canonical representative in `[0, N)` for cyclic covers.
    pub sigma: i64,
}

/// Structural order matching the normal-form letter order Y < X < Z < δ's
/// < trees: words without δ/tree letters sort first, then by exponents.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.algebra
            .cmp(&other.algebra)
            .then_with(|| self.deltas.cmp(&other.deltas))
            .then_with(|| self.forest.cmp(&other.forest))
            .then_with(|| self.z.cmp(&other.z))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.sigma.cmp(&other.sigma))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn one(algebra: AlgebraId) -> Self {
        Word {
            algebra,
            y: 0,
            x: 0,
            z: 0,
            deltas: BTreeMap::new(),
            forest: Forest::empty(),
            sigma: 0,
        }
    }

    pub fn is_one(&self) -> bool {
        self.y == 0
            && self.x == 0
            && self.z == 0
            && self.deltas.is_empty()
            && self.forest.is_empty()
            && self.sigma == 0
    }

    /// `true` when the word is a pure power of σ (counit value 1).
    pub fn is_grouplike_sigma(&self) -> bool {
        self.y == 0 && self.x == 0 && self.z == 0 && self.deltas.is_empty() && self.forest.is_empty()
    }

    /// ad-Y eigenvalue: X and Z count 1, δ_k counts k, δ_T counts |T|.
    pub fn weight(&self) -> i64 {
        let deltas: i64 = self.deltas.iter().map(|(k, e)| (*k as i64) * (*e as i64)).sum();
        self.x as i64 + self.z as i64 + deltas + self.forest.total_size() as i64
    }

    /// Total exponent sum of the non-σ letters (the PBW degree).
    pub fn pbw_degree(&self) -> u32 {
        self.y
            + self.x
            + self.z
            + self.deltas.values().sum::<u32>()
            + self.forest.len() as u32
    }

    /// Largest δ-index used (0 when none).
    pub fn max_delta_index(&self) -> u32 {
        self.deltas.keys().next_back().copied().unwrap_or(0)
    }

    /// Largest tree size used (0 when none).
    pub fn max_tree_size(&self) -> u32 {
        self.forest.trees().iter().map(|t| t.size()).max().unwrap_or(0)
    }

    pub fn with_sigma(&self, sigma: i64) -> Word {
        let mut w = self.clone();
        w.sigma = match self.algebra.sigma_modulus() {
            Some(n) => sigma.rem_euclid(n as i64),
            None => sigma,
        };
        w
    }

    /// Same exponents, re-tagged to another algebra. The caller is
    /// responsible for the letters making sense there.
    pub fn retag(&self, algebra: AlgebraId) -> Word {
        let mut w = self.clone();
        w.algebra = algebra;
        if !algebra.has_sigma() {
            debug_assert_eq!(w.sigma, 0);
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.sigma != 0 {
            if self.sigma == 1 {
                parts.push("s".into());
            } else {
                parts.push(format!("s^{}", self.sigma));
            }
        }
        let pow = |letter: &str, e: u32| {
            if e == 1 {
                letter.to_string()
            } else {
                format!("{letter}^{e}")
            }
        };
        if self.y > 0 {
            parts.push(pow("Y", self.y));
        }
        if self.x > 0 {
            parts.push(pow("X", self.x));
        }
        if self.z > 0 {
            parts.push(pow("Z", self.z));
        }
        for (k, e) in &self.deltas {
            parts.push(pow(&format!("d{k}"), *e));
        }
        for t in self.forest.trees() {
            parts.push(format!("dT{t}"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_of_mixed_word() {
        let mut w = Word::one(AlgebraId::H1);
        w.y = 3;
        w.x = 1;
        w.deltas.insert(2, 1);
        assert_eq!(w.weight(), 3);
        assert_eq!(w.pbw_degree(), 5);
    }

    #[test]
    fn sigma_reduction_mod_n() {
        let w = Word::one(AlgebraId::H1Dag(Some(2))).with_sigma(-1);
        assert_eq!(w.sigma, 1);
        let w = Word::one(AlgebraId::H1Dag(None)).with_sigma(-1);
        assert_eq!(w.sigma, -1);
    }

    #[test]
    fn display_canonical() {
        let mut w = Word::one(AlgebraId::H1);
        w.y = 2;
        w.x = 1;
        w.deltas.insert(1, 2);
        assert_eq!(w.to_string(), "Y^2*X*d1^2");
        assert_eq!(Word::one(AlgebraId::H1).to_string(), "1");
    }
}
