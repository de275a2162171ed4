//! Classifying data of an essentially finite 2-group: the homotopy
//! groups π₀ and π₁, the π₀-action on π₁, and a normalized classifying
//! 3-cocycle α.  Everything downstream factors through this data, so a
//! 2-group is never materialized as a category.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charlat::{AbelianGroup, CharError, Pi1Action};
use crate::cohom::{CoeffModule, Cochain, CohomError, Pi1Cochain, Pi1Module};
use crate::grp::FiniteGroup;

#[derive(Debug, Error, PartialEq)]
pub enum TwoGroupError {
    #[error("alpha is not a 3-cocycle: ∂α ≠ 0 at ({0}, {1}, {2}, {3})")]
    NotACocycle(usize, usize, usize, usize),
    #[error("alpha is not normalized at {position:?}")]
    NotNormalized { position: Vec<usize> },
    #[error("alpha has wrong shape: {0}")]
    BadAlphaShape(String),
    #[error("alpha value {value} is not a π₁ element index (|π₁| = {order})")]
    BadAlphaValue { value: usize, order: usize },
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
}

/// Sinh data `(π₀, π₁, action, α)` of an essentially finite 2-group.
///
/// Invariants established at construction: the action is by additive
/// automorphisms and is a left action, and `α` is a normalized 3-cocycle
/// of π₀ with coefficients in π₁.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoGroupData {
    pi0: FiniteGroup,
    pi1: AbelianGroup,
    action: Pi1Action,
    alpha: Pi1Cochain,
}

impl TwoGroupData {
    /// A split 2-group: `α ≡ 0`.
    pub fn make_split(
        pi0: FiniteGroup,
        pi1: AbelianGroup,
        action: Pi1Action,
    ) -> Result<Self, TwoGroupError> {
        let action = action.attach(&pi0, &pi1)?;
        let module = Pi1Module::new(pi0.clone(), pi1.clone(), action.clone());
        let alpha = Cochain::zero(module, 3);
        Ok(TwoGroupData { pi0, pi1, action, alpha })
    }

    /// A 2-group with an arbitrary classifying 3-cocycle, given as a
    /// dense `p×p×p` table of π₁ element indices.
    pub fn make_two_group(
        pi0: FiniteGroup,
        pi1: AbelianGroup,
        action: Pi1Action,
        alpha_values: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, TwoGroupError> {
        let action = action.attach(&pi0, &pi1)?;
        let p = pi0.order();
        if alpha_values.len() != p
            || alpha_values.iter().any(|a| a.len() != p || a.iter().any(|b| b.len() != p))
        {
            return Err(TwoGroupError::BadAlphaShape(format!("expected {p}×{p}×{p} table")));
        }
        let mut flat = Vec::with_capacity(p * p * p);
        for plane in &alpha_values {
            for row in plane {
                for &v in row {
                    if v >= pi1.order() {
                        return Err(TwoGroupError::BadAlphaValue { value: v, order: pi1.order() });
                    }
                    flat.push(v);
                }
            }
        }
        let module = Pi1Module::new(pi0.clone(), pi1.clone(), action.clone());
        let alpha = Cochain::new(module, 3, flat)?;
        Self::from_parts(pi0, pi1, action, alpha)
    }

    /// Validates and assembles already-typed parts.
    pub fn from_parts(
        pi0: FiniteGroup,
        pi1: AbelianGroup,
        action: Pi1Action,
        alpha: Pi1Cochain,
    ) -> Result<Self, TwoGroupError> {
        if let Some(position) = (!alpha.is_normalized())
            .then(|| alpha_unnormalized_position(&alpha))
            .flatten()
        {
            return Err(TwoGroupError::NotNormalized { position });
        }
        if let Some(w) = alpha.cocycle_witness() {
            return Err(TwoGroupError::NotACocycle(w[0], w[1], w[2], w[3]));
        }
        Ok(TwoGroupData { pi0, pi1, action, alpha })
    }

    pub fn pi0(&self) -> &FiniteGroup {
        &self.pi0
    }

    pub fn pi1(&self) -> &AbelianGroup {
        &self.pi1
    }

    pub fn action(&self) -> &Pi1Action {
        &self.action
    }

    pub fn alpha(&self) -> &Pi1Cochain {
        &self.alpha
    }

    /// `p = |π₀|`.
    pub fn p(&self) -> usize {
        self.pi0.order()
    }

    /// `q = |π₁|`.
    pub fn q(&self) -> usize {
        self.pi1.order()
    }

    pub fn is_split(&self) -> bool {
        self.alpha.is_zero()
    }

    /// α as a `p×p×p` nested table of π₁ element indices.
    pub fn alpha_table(&self) -> Vec<Vec<Vec<usize>>> {
        let p = self.p();
        (0..p)
            .map(|a| {
                (0..p)
                    .map(|b| (0..p).map(|c| *self.alpha.value(&[a, b, c])).collect())
                    .collect()
            })
            .collect()
    }
}

fn alpha_unnormalized_position(alpha: &Pi1Cochain) -> Option<Vec<usize>> {
    let p = alpha.module().group().order();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                if (a == 0 || b == 0 || c == 0) && *alpha.value(&[a, b, c]) != 0 {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Wire form of a 2-group file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawTwoGroup {
    pub pi0: FiniteGroup,
    pub pi1: AbelianGroup,
    pub action: Pi1Action,
    pub alpha: Vec<Vec<Vec<usize>>>,
}

impl RawTwoGroup {
    pub fn build(self) -> Result<TwoGroupData, TwoGroupError> {
        TwoGroupData::make_two_group(self.pi0, self.pi1, self.action, self.alpha)
    }
}

impl From<&TwoGroupData> for RawTwoGroup {
    fn from(t: &TwoGroupData) -> RawTwoGroup {
        RawTwoGroup {
            pi0: t.pi0.clone(),
            pi1: t.pi1.clone(),
            action: t.action.clone(),
            alpha: t.alpha_table(),
        }
    }
}

impl Serialize for TwoGroupData {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawTwoGroup::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoGroupData {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawTwoGroup::deserialize(deserializer)?;
        raw.build().map_err(serde::de::Error::custom)
    }
}

/// The nontrivial classifying 3-cocycle `α(a,b,c) = (d/gcd(m,d))·a·⌊(b+c)/m⌋`
/// for `π₀ = ℤ/m` acting trivially on `π₁ = ℤ/d`; a generator of
/// `H³(ℤ/m, ℤ/d) ≅ ℤ/gcd(m,d)` scaled by `multiple`.
pub fn cyclic_alpha_table(m: usize, d: usize, multiple: usize) -> Vec<Vec<Vec<usize>>> {
    let g = {
        let (mut a, mut b) = (m, d);
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    };
    let step = d / g;
    (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    (0..m)
                        .map(|c| {
                            let carry = (b + c) / m;
                            step * multiple * a * carry % d
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}
