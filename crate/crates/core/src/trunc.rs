//! Truncation windows that make the infinite-dimensional complexes finite.

use crate::error::{Error, Result};

/// Range of σ-exponents to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaRange {
    /// Closed interval of exponents (used by infinite covers).
    Interval(i64, i64),
    /// All residues mod N (the algebra's own modulus wins when present).
    Modulus(u32),
}

impl Default for SigmaRange {
    fn default() -> Self {
        SigmaRange::Interval(-2, 2)
    }
}

/// Caps under which every enumerated basis is finite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationSpec {
    /// Highest tensor degree the enumeration will produce.
    pub max_tensor_degree: usize,
    /// Restrict to one ad-Y eigenvalue when set.
    pub weight: Option<i64>,
    /// Total exponent sum per tensor factor (σ excluded).
    pub pbw_cap: u32,
    /// Largest δ-index admitted in enumerated words.
    pub delta_index_cap: u32,
    /// σ-exponent window.
    pub sigma_range: SigmaRange,
    /// Largest rooted-tree size admitted.
    pub tree_size_cap: u32,
}

impl Default for TruncationSpec {
    fn default() -> Self {
        TruncationSpec {
            max_tensor_degree: 3,
            weight: None,
            pbw_cap: 4,
            delta_index_cap: 4,
            sigma_range: SigmaRange::default(),
            tree_size_cap: 4,
        }
    }
}

impl TruncationSpec {
    pub fn with_pbw_cap(mut self, cap: u32) -> Self {
        self.pbw_cap = cap;
        self.delta_index_cap = self.delta_index_cap.max(cap);
        self
    }

    pub fn with_weight(mut self, w: i64) -> Self {
        self.weight = Some(w);
        self
    }

    pub fn with_tree_cap(mut self, cap: u32) -> Self {
        self.tree_size_cap = cap;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let SigmaRange::Interval(lo, hi) = self.sigma_range {
            if lo > hi {
                return Err(Error::Invalid(format!("empty sigma range [{lo}, {hi}]")));
            }
        }
        if let SigmaRange::Modulus(0) = self.sigma_range {
            return Err(Error::Invalid("sigma modulus must be positive".into()));
        }
        Ok(())
    }

    pub fn sigma_values(&self, algebra_modulus: Option<u32>) -> Vec<i64> {
        match algebra_modulus {
            Some(n) => (0..n as i64).collect(),
            None => match &self.sigma_range {
                SigmaRange::Interval(lo, hi) => (*lo..=*hi).collect(),
                SigmaRange::Modulus(n) => (0..*n as i64).collect(),
            },
        }
    }
}
