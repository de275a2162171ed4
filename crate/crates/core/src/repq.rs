//! Classifying quadruples `(n, ρ, β, c)` of representations in 2-vector
//! spaces: structural construction, exhaustive validation, the standard
//! families, the regular representation, and the equivalence test.
//!
//! `β` is kept in its equivariant form: an array `γ` of `n` characters
//! of π₁ with `γ(ρ(g)(i)) = g·γ(i)`.  The monoidal 2-cochain `c` lives
//! in `(ℚ/ℤ)ⁿ` twisted by `ρ` and must satisfy `∂c = β∗(α)`, where
//! `β∗(α)` has `i`-th coordinate `γ(i)(α(·,·,·))`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charlat::{act_on_character, dual_group, CharError, Character, QZ};
use crate::cohom::{cohomologous, Cochain, CohomError, QzCochain, TwistedQzModule};
use crate::exec;
use crate::grp::{cayley_embedding, GroupError, Perm, PermRep};
use crate::twogrp::{RawTwoGroup, TwoGroupData, TwoGroupError};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("quadruples live over different 2-groups")]
    DifferentTwoGroups,
    #[error("rho has degree {got}, expected n = {expected}")]
    RhoDegree { expected: usize, got: usize },
    #[error("beta has {got} characters, expected n = {expected}")]
    BetaLength { expected: usize, got: usize },
    #[error("cochain c has the wrong module (expected rank {expected_rank} twisted by rho over π₀)")]
    CochainModule { expected_rank: usize },
    #[error("quadruple fails validation: {0}")]
    Invalid(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
    #[error(transparent)]
    TwoGroup(#[from] TwoGroupError),
}

// ---------------------------------------------------------------------------
// Validation reports
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// Pass/fail per invariant family, with the first violating tuple as a
/// witness on failure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed: witness.is_none(),
            witness,
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match (&c.passed, &c.witness) {
                (true, _) => writeln!(f, "ok   {}", c.name)?,
                (false, Some(w)) => writeln!(f, "FAIL {} ({w})", c.name)?,
                (false, None) => writeln!(f, "FAIL {}", c.name)?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// The quadruple
// ---------------------------------------------------------------------------

/// A classifying quadruple over a fixed 2-group.
///
/// Construction enforces shapes and the homomorphism property of `ρ`;
/// [`RepQuadruple::validate`] re-checks every invariant exhaustively and
/// reports witnesses.
#[derive(Debug, Clone, PartialEq)]
pub struct RepQuadruple {
    two_group: TwoGroupData,
    n: usize,
    rho: PermRep,
    gamma: Vec<Character>,
    c: QzCochain,
}

impl RepQuadruple {
    pub fn new(
        two_group: TwoGroupData,
        rho: PermRep,
        gamma: Vec<Character>,
        c: QzCochain,
    ) -> Result<Self, RepError> {
        let n = rho.degree();
        if gamma.len() != n {
            return Err(RepError::BetaLength { expected: n, got: gamma.len() });
        }
        for chi in &gamma {
            // Exponent shape against π₁.
            Character::new(two_group.pi1(), chi.exps().to_vec())?;
        }
        let expected = TwistedQzModule::new(two_group.pi0().clone(), rho.clone())?;
        if c.module() != &expected || c.degree() != 2 {
            return Err(RepError::CochainModule { expected_rank: n });
        }
        Ok(RepQuadruple { two_group, n, rho, gamma, c })
    }

    pub fn two_group(&self) -> &TwoGroupData {
        &self.two_group
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rho(&self) -> &PermRep {
        &self.rho
    }

    /// The equivariant character array `γ`.
    pub fn gamma(&self) -> &[Character] {
        &self.gamma
    }

    pub fn c(&self) -> &QzCochain {
        &self.c
    }

    /// The pushforward `β∗(α)`: coordinate `i` of the value at
    /// `(g₁,g₂,g₃)` is `γ(i)(α(g₁,g₂,g₃))`.
    pub fn beta_push_alpha(&self) -> QzCochain {
        let t = &self.two_group;
        let module = self.c.module().clone();
        Cochain::from_fn(module, 3, |args| {
            let u = *t.alpha().value(args);
            self.gamma.iter().map(|chi| chi.value(t.pi1(), u)).collect()
        })
    }

    /// Exhaustive invariant check with witnesses.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { checks: Vec::new() };
        let t = &self.two_group;
        let pi0 = t.pi0();

        // ρ is a homomorphism over this π₀ (re-checked against the
        // quadruple's own 2-group, not the one ρ was built with).
        let mut witness = None;
        if !self.rho.image(0).is_identity() {
            witness = Some("image of identity is not the identity".to_string());
        }
        'rho: for g in pi0.elements() {
            for h in pi0.elements() {
                if self.rho.image(pi0.mul(g, h)) != &self.rho.image(g).after(self.rho.image(h)) {
                    witness = Some(format!("(g,h) = ({g},{h})"));
                    break 'rho;
                }
            }
        }
        report.push("rho_homomorphism", witness);

        // γ is π₀-equivariant: γ(ρ(g)(i)) = g·γ(i).
        let mut witness = None;
        'equi: for g in pi0.elements() {
            for i in 0..self.n {
                let moved = act_on_character(t.action(), pi0, t.pi1(), g, &self.gamma[i]);
                match moved {
                    Ok(moved) => {
                        if self.gamma[self.rho.image(g).apply(i)] != moved {
                            witness = Some(format!("(g,i) = ({g},{i})"));
                            break 'equi;
                        }
                    }
                    Err(e) => {
                        witness = Some(format!("character action failed: {e}"));
                        break 'equi;
                    }
                }
            }
        }
        report.push("beta_equivariance", witness);

        report.push(
            "c_normalized",
            (!self.c.is_normalized()).then(|| "nonzero value on an identity tuple".to_string()),
        );

        // ∂c = β∗(α).
        let lhs = self.c.coboundary();
        let rhs = self.beta_push_alpha();
        let mut witness = None;
        let p = pi0.order();
        'cob: for g1 in 0..p {
            for g2 in 0..p {
                for g3 in 0..p {
                    let args = [g1, g2, g3];
                    if lhs.value(&args) != rhs.value(&args) {
                        witness = Some(format!("(g1,g2,g3) = ({g1},{g2},{g3})"));
                        break 'cob;
                    }
                }
            }
        }
        report.push("coboundary_equation", witness);

        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().passed()
    }

    /// Relabels basis indices by `sigma`: `ρ′ = σρσ⁻¹`, `β′ = σβ`,
    /// `c′ = σc` with `(σβ)ᵢ = β_{σ⁻¹(i)}` and
    /// `(σc)(g₁,g₂)ᵢ = c(g₁,g₂)_{σ⁻¹(i)}`.
    pub fn conjugate_by(&self, sigma: &Perm) -> Result<RepQuadruple, RepError> {
        if sigma.degree() != self.n {
            return Err(RepError::RhoDegree { expected: self.n, got: sigma.degree() });
        }
        let sigma_inv = sigma.inverse();
        let pi0 = self.two_group.pi0();
        let images = pi0
            .elements()
            .map(|g| sigma.after(self.rho.image(g)).after(&sigma_inv))
            .collect();
        let rho = PermRep::new(pi0, images)?;
        let gamma = (0..self.n).map(|i| self.gamma[sigma_inv.apply(i)].clone()).collect();
        let module = TwistedQzModule::new(pi0.clone(), rho.clone())?;
        let c = Cochain::from_fn(module, 2, |args| {
            let v = self.c.value(args);
            (0..self.n).map(|i| v[sigma_inv.apply(i)]).collect()
        });
        RepQuadruple::new(self.two_group.clone(), rho, gamma, c)
    }

    /// Replaces `c` by `c + ∂b` (an equivalent quadruple).
    pub fn shift_c(&self, b: &QzCochain) -> Result<RepQuadruple, RepError> {
        let c = self.c.add(&b.coboundary())?;
        RepQuadruple::new(self.two_group.clone(), self.rho.clone(), self.gamma.clone(), c)
    }
}

// ---------------------------------------------------------------------------
// Standard representations
// ---------------------------------------------------------------------------

/// The 1-dimensional trivial representation 𝓘.
pub fn trivial_rep(two_group: &TwoGroupData) -> RepQuadruple {
    let rho = PermRep::trivial(two_group.pi0(), 1);
    let gamma = vec![Character::trivial(two_group.pi1())];
    let module = TwistedQzModule::new(two_group.pi0().clone(), rho.clone()).unwrap();
    let c = Cochain::zero(module, 2);
    RepQuadruple { two_group: two_group.clone(), n: 1, rho, gamma, c }
}

/// A cocyclic representation: trivial `ρ` and `β`, monoidal structure
/// given by a normalized 2-cocycle `z` with values in `(ℚ/ℤ)ⁿ`.
pub fn cocyclic_rep(two_group: &TwoGroupData, z: QzCochain) -> Result<RepQuadruple, RepError> {
    let n = z.module().rank();
    let expected = TwistedQzModule::untwisted(two_group.pi0().clone(), n);
    if z.module() != &expected || z.degree() != 2 {
        return Err(RepError::CochainModule { expected_rank: n });
    }
    if !z.is_normalized() {
        return Err(RepError::Invalid("cocyclic z must be normalized".to_string()));
    }
    if let Some(w) = z.cocycle_witness() {
        return Err(RepError::Invalid(format!("cocyclic z is not a 2-cocycle (witness {w:?})")));
    }
    let rho = PermRep::trivial(two_group.pi0(), n);
    let gamma = vec![Character::trivial(two_group.pi1()); n];
    RepQuadruple::new(two_group.clone(), rho, gamma, z)
}

/// A permutation representation induced by `ρ: π₀ → S_n`.
pub fn permutation_rep(two_group: &TwoGroupData, rho: PermRep) -> Result<RepQuadruple, RepError> {
    if rho.images().len() != two_group.p() {
        return Err(RepError::Group(GroupError::BadShape {
            order: two_group.p(),
            rows: rho.images().len(),
        }));
    }
    let n = rho.degree();
    let gamma = vec![Character::trivial(two_group.pi1()); n];
    let module = TwistedQzModule::new(two_group.pi0().clone(), rho.clone())?;
    let c = Cochain::zero(module, 2);
    RepQuadruple::new(two_group.clone(), rho, gamma, c)
}

// ---------------------------------------------------------------------------
// The regular representation
// ---------------------------------------------------------------------------

/// The classifying quadruple of the regular representation.
///
/// Dimension `pq` with basis index `(k,l) ↦ k·p + l` (character index
/// major, group index minor).  `ρ` is block-diagonal with `q` copies of
/// the Cayley embedding, `β` has component `(k,l)` equal to
/// `u ↦ χₖ(gₗ·u)`, and `c(gᵢ,gⱼ)` has component `(k,l)` equal to
/// `χₖ(α(gₗ,gᵢ,gⱼ))`.
pub fn regular_rep(two_group: &TwoGroupData) -> RepQuadruple {
    let t = two_group;
    let (p, q) = (t.p(), t.q());
    let n = p * q;
    let kappa = cayley_embedding(t.pi0());
    let chars = dual_group(t.pi1());

    let images: Vec<Perm> = t
        .pi0()
        .elements()
        .map(|g| {
            let block = kappa.image(g);
            Perm::new((0..n).map(|i| (i / p) * p + block.apply(i % p)).collect()).unwrap()
        })
        .collect();
    let rho = PermRep::new(t.pi0(), images).expect("blocks of a homomorphism");

    let gamma: Vec<Character> = (0..n)
        .map(|i| {
            let (k, l) = (i / p, i % p);
            // component (k,l) is u ↦ χₖ(gₗ·u), i.e. gₗ⁻¹ acting on χₖ.
            act_on_character(t.action(), t.pi0(), t.pi1(), t.pi0().inv(l), &chars[k])
                .expect("dual action is total")
        })
        .collect();

    let module = TwistedQzModule::new(t.pi0().clone(), rho.clone()).unwrap();
    let c = Cochain::from_fn(module, 2, |args| {
        (0..n)
            .map(|i| {
                let (k, l) = (i / p, i % p);
                let u = *t.alpha().value(&[l, args[0], args[1]]);
                chars[k].value(t.pi1(), u)
            })
            .collect()
    });

    let q4 = RepQuadruple { two_group: t.clone(), n, rho, gamma, c };
    debug_assert!(q4.is_valid());
    q4
}

// ---------------------------------------------------------------------------
// Equivalence
// ---------------------------------------------------------------------------

/// Searches for `σ ∈ S_n` with `ρ′ = σρσ⁻¹`, `β′ = σβ` and
/// `[c′] = [σc]`; returns the lexicographically first witness.
pub fn equivalent(q1: &RepQuadruple, q2: &RepQuadruple) -> Result<Option<Perm>, RepError> {
    use itertools::Itertools;

    if q1.two_group != q2.two_group {
        return Err(RepError::DifferentTwoGroups);
    }
    if q1.n != q2.n {
        return Ok(None);
    }
    let n = q1.n;
    let pi0 = q1.two_group.pi0();

    // Cheap filters first: ρ-conjugacy and β-compatibility prune hard
    // before any cohomology solve.
    let candidates: Vec<Perm> = (0..n)
        .permutations(n)
        .map(|im| Perm::new(im).unwrap())
        .chain((n == 0).then(|| Perm::identity(0)))
        .filter(|sigma| {
            let sigma_inv = sigma.inverse();
            pi0.elements().all(|g| {
                q2.rho.image(g) == &sigma.after(q1.rho.image(g)).after(&sigma_inv)
            }) && (0..n).all(|i| q2.gamma[i] == q1.gamma[sigma_inv.apply(i)])
        })
        .collect();

    let hit = exec::find_first_map(&candidates, |sigma| {
        let conj = q1.conjugate_by(sigma).expect("degree matches");
        match cohomologous(&q2.c, &conj.c) {
            Ok(true) => Some(Ok(sigma.clone())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        }
    });
    match hit {
        Some(Ok(sigma)) => Ok(Some(sigma)),
        Some(Err(e)) => Err(e.into()),
        None => Ok(None),
    }
}

// ---------------------------------------------------------------------------
// Enumeration of inequivalent representations
// ---------------------------------------------------------------------------

/// The pushforward `β∗(α)` for a bare character array.
pub(crate) fn push_alpha(
    two_group: &TwoGroupData,
    gamma: &[Character],
    module: &TwistedQzModule,
) -> QzCochain {
    Cochain::from_fn(module.clone(), 3, |args| {
        let u = *two_group.alpha().value(args);
        gamma.iter().map(|chi| chi.value(two_group.pi1(), u)).collect()
    })
}

/// All equivariant character arrays `γ: [n]_ρ → π₁*`, one choice of a
/// stabilizer-fixed character per orbit, propagated along the action.
fn equivariant_gammas(
    two_group: &TwoGroupData,
    rho: &PermRep,
) -> Result<Vec<Vec<Character>>, RepError> {
    let pi0 = two_group.pi0();
    let pi1 = two_group.pi1();
    let n = rho.degree();
    let x = crate::grp::GSet::from_perm_rep(pi0, rho);
    let orbs = crate::grp::orbits(&x);
    let chars = dual_group(pi1);

    // Per orbit: the characters fixed by the stabilizer of the
    // representative, plus a transversal (point, group element moving
    // the representative there).
    let mut per_orbit: Vec<(Vec<Character>, Vec<(usize, usize)>)> = Vec::new();
    for orbit in &orbs {
        let mut fixed = Vec::new();
        'chars: for chi in &chars {
            for &s in &orbit.stabilizer {
                if &act_on_character(two_group.action(), pi0, pi1, s, chi)? != chi {
                    continue 'chars;
                }
            }
            fixed.push(chi.clone());
        }
        if fixed.is_empty() {
            return Ok(Vec::new());
        }
        let mut transversal = Vec::with_capacity(orbit.points.len());
        for &pt in &orbit.points {
            let h = pi0
                .elements()
                .find(|&h| rho.image(h).apply(orbit.representative) == pt)
                .expect("orbit point reachable");
            transversal.push((pt, h));
        }
        per_orbit.push((fixed, transversal));
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; per_orbit.len()];
    loop {
        let mut gamma: Vec<Option<Character>> = vec![None; n];
        for (o, (fixed, transversal)) in per_orbit.iter().enumerate() {
            let base = &fixed[choice[o]];
            for &(pt, h) in transversal {
                // γ(ρ(h)(rep)) = h·γ(rep).
                gamma[pt] = Some(act_on_character(two_group.action(), pi0, pi1, h, base)?);
            }
        }
        out.push(gamma.into_iter().map(Option::unwrap).collect());
        let mut k = per_orbit.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < per_orbit[k].0.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// All pairwise inequivalent quadruples of dimension `n`, enumerated by
/// (ρ up to conjugacy) × (equivariant γ) × (H² class past the
/// obstruction), then deduplicated by [`equivalent`].
pub fn enumerate_reps(
    two_group: &TwoGroupData,
    n: usize,
    limits: &crate::cohom::EnumLimits,
) -> Result<Vec<RepQuadruple>, RepError> {
    use itertools::Itertools;
    if n > limits.max_rank {
        return Err(CohomError::TooLarge { size: n, bound: limits.max_rank }.into());
    }
    if two_group.p() > limits.max_group_order {
        return Err(CohomError::TooLarge {
            size: two_group.p(),
            bound: limits.max_group_order,
        }
        .into());
    }
    let pi0 = two_group.pi0();
    let all_perms: Vec<Perm> = (0..n).permutations(n).map(|im| Perm::new(im).unwrap()).collect();
    let homs = crate::grp::enumerate_perm_homs(pi0, &all_perms);

    // One homomorphism per S_n-conjugacy class, keeping the first seen.
    let mut rho_reps: Vec<PermRep> = Vec::new();
    'homs: for rho in homs {
        for kept in &rho_reps {
            for tau in &all_perms {
                let tau_inv = tau.inverse();
                let conjugated = pi0
                    .elements()
                    .all(|g| rho.image(g) == &tau.after(kept.image(g)).after(&tau_inv));
                if conjugated {
                    continue 'homs;
                }
            }
        }
        rho_reps.push(rho);
    }

    let mut found: Vec<RepQuadruple> = Vec::new();
    for rho in rho_reps {
        let module = TwistedQzModule::new(pi0.clone(), rho.clone())?;
        let classes = crate::cohom::h2_representatives(&module, limits)?;
        for gamma in equivariant_gammas(two_group, &rho)? {
            let target = push_alpha(two_group, &gamma, &module);
            let Some(c0) = crate::cohom::solve_coboundary(&target)? else {
                continue;
            };
            for class in &classes {
                let c = c0.add(class)?;
                let candidate =
                    RepQuadruple::new(two_group.clone(), rho.clone(), gamma.clone(), c)?;
                debug_assert!(candidate.is_valid());
                let mut known = false;
                for prior in &found {
                    if equivalent(prior, &candidate)?.is_some() {
                        known = true;
                        break;
                    }
                }
                if !known {
                    found.push(candidate);
                }
            }
        }
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// Wire format
// ---------------------------------------------------------------------------

/// Wire form of a quadruple file; the owning 2-group is embedded so a
/// single file is self-describing.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawQuadruple {
    pub two_group: RawTwoGroup,
    pub n: usize,
    pub rho: Vec<Vec<usize>>,
    pub beta: Vec<Vec<u64>>,
    pub c: Vec<Vec<Vec<QZ>>>,
}

impl RawQuadruple {
    /// Structural build; mathematical invariants are checked by
    /// [`RepQuadruple::validate`].
    pub fn build(self) -> Result<RepQuadruple, RepError> {
        let two_group = self.two_group.build()?;
        let pi0 = two_group.pi0().clone();
        let images = self
            .rho
            .into_iter()
            .map(|im| {
                if im.len() != self.n {
                    return Err(GroupError::DegreeMismatch { expected: self.n, got: im.len() });
                }
                Perm::new(im)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rho = PermRep::new(&pi0, images)?;
        let gamma = self
            .beta
            .into_iter()
            .map(|exps| Character::new(two_group.pi1(), exps))
            .collect::<Result<Vec<_>, _>>()?;
        let module = TwistedQzModule::new(pi0.clone(), rho.clone())?;
        let p = pi0.order();
        if self.c.len() != p
            || self.c.iter().any(|r| r.len() != p || r.iter().any(|v| v.len() != self.n))
        {
            return Err(RepError::CochainModule { expected_rank: self.n });
        }
        let mut values = Vec::with_capacity(p * p);
        for row in self.c {
            for v in row {
                values.push(v);
            }
        }
        let c = Cochain::new(module, 2, values)?;
        RepQuadruple::new(two_group, rho, gamma, c)
    }
}

impl From<&RepQuadruple> for RawQuadruple {
    fn from(q: &RepQuadruple) -> RawQuadruple {
        let p = q.two_group.p();
        RawQuadruple {
            two_group: RawTwoGroup::from(&q.two_group),
            n: q.n,
            rho: q.rho.images().iter().map(|perm| perm.images().to_vec()).collect(),
            beta: q.gamma.iter().map(|chi| chi.exps().to_vec()).collect(),
            c: (0..p)
                .map(|g1| (0..p).map(|g2| q.c.value(&[g1, g2]).clone()).collect())
                .collect(),
        }
    }
}

impl Serialize for RepQuadruple {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawQuadruple::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RepQuadruple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        RawQuadruple::deserialize(deserializer)?.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charlat::{AbelianGroup, Pi1Action};
    use crate::cohom::solve_coboundary;
    use crate::grp::FiniteGroup;

    fn split(pi0: FiniteGroup, orders: Vec<u64>) -> TwoGroupData {
        let pi1 = AbelianGroup::new(orders).unwrap();
        let act = Pi1Action::trivial(&pi0, &pi1);
        TwoGroupData::make_split(pi0, pi1, act).unwrap()
    }

    fn klein() -> FiniteGroup {
        FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))
    }

    #[test]
    fn trivial_rep_validates() {
        let t = split(FiniteGroup::symmetric(3), vec![2]);
        let i = trivial_rep(&t);
        let report = i.validate();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn regular_rep_of_discrete_z2() {
        let t = split(FiniteGroup::cyclic(2), vec![1]);
        let r = regular_rep(&t);
        assert_eq!(r.dim(), 2);
        assert_eq!(r.rho().image(1).images(), &[1, 0]);
        assert!(r.gamma().iter().all(Character::is_trivial));
        assert!(r.c().is_zero());
        assert!(r.is_valid());
    }

    #[test]
    fn regular_rep_of_one_object_z2() {
        let t = split(FiniteGroup::trivial(), vec![2]);
        let r = regular_rep(&t);
        assert_eq!(r.dim(), 2);
        assert!(r.rho().image(0).is_identity());
        assert_eq!(r.gamma()[0].exps(), &[0]);
        assert_eq!(r.gamma()[1].exps(), &[1]);
        // Character value at the generator: χ₁(1) = 1/2.
        assert_eq!(r.gamma()[1].value(t.pi1(), 1), QZ::frac(1, 2));
        assert!(r.is_valid());
    }

    #[test]
    fn regular_rep_of_split_z2_z2() {
        let t = split(FiniteGroup::cyclic(2), vec![2]);
        let r = regular_rep(&t);
        assert_eq!(r.dim(), 4);
        // ρ(1) is (0 1)(2 3) in block form.
        assert_eq!(r.rho().image(1).images(), &[1, 0, 3, 2]);
        assert!(r.is_valid());
    }

    #[test]
    fn regular_rep_with_nontrivial_alpha_validates() {
        use crate::twogrp::cyclic_alpha_table;
        for (m, d) in [(2, 2), (3, 3), (4, 2)] {
            let pi0 = FiniteGroup::cyclic(m);
            let pi1 = AbelianGroup::new(vec![d as u64]).unwrap();
            let act = Pi1Action::trivial(&pi0, &pi1);
            let t = TwoGroupData::make_two_group(pi0, pi1, act, cyclic_alpha_table(m, d, 1))
                .unwrap();
            let r = regular_rep(&t);
            assert_eq!(r.dim(), m * d);
            let report = r.validate();
            assert!(report.passed(), "m={m} d={d}:\n{report}");
        }
    }

    #[test]
    fn regular_rep_with_nontrivial_action_validates() {
        // ℤ/2 acting on ℤ/3 by negation.
        let pi0 = FiniteGroup::cyclic(2);
        let pi1 = AbelianGroup::new(vec![3]).unwrap();
        let neg = Perm::new((0..3).map(|u| pi1.neg(u)).collect()).unwrap();
        let act = Pi1Action::new(&pi0, &pi1, vec![Perm::identity(3), neg]).unwrap();
        let t = TwoGroupData::make_split(pi0, pi1, act).unwrap();
        let r = regular_rep(&t);
        assert_eq!(r.dim(), 6);
        let report = r.validate();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn broken_equivariance_reports_witness() {
        // Corrupt one character of a regular quadruple over a 2-group
        // with a genuine action, so equivariance has teeth.
        let pi0 = FiniteGroup::cyclic(2);
        let pi1 = AbelianGroup::new(vec![3]).unwrap();
        let neg = Perm::new(vec![0, 2, 1]).unwrap();
        let act = Pi1Action::new(&pi0, &pi1, vec![Perm::identity(3), neg]).unwrap();
        let t2 = TwoGroupData::make_split(pi0, pi1, act).unwrap();
        let mut r = regular_rep(&t2);
        r.gamma[1] = Character::new(t2.pi1(), vec![1]).unwrap();
        let report = r.validate();
        assert!(!report.passed());
        let failing: Vec<&CheckResult> = report.checks.iter().filter(|c| !c.passed).collect();
        assert!(failing.iter().any(|c| c.name == "beta_equivariance"));
        assert!(failing.iter().all(|c| c.witness.is_some()));
    }

    #[test]
    fn cocyclic_reps_and_inequivalence() {
        use crate::cohom::{h2_representatives, EnumLimits};
        let t = split(klein(), vec![1]);
        let module = TwistedQzModule::untwisted(t.pi0().clone(), 1);
        let reps = h2_representatives(&module, &EnumLimits::default()).unwrap();
        assert_eq!(reps.len(), 2);
        let q_triv = cocyclic_rep(&t, reps[0].clone()).unwrap();
        let q_nontriv = cocyclic_rep(&t, reps[1].clone()).unwrap();
        assert!(q_triv.is_valid() && q_nontriv.is_valid());
        assert!(equivalent(&q_triv, &q_nontriv).unwrap().is_none());
        assert!(equivalent(&q_triv, &q_triv).unwrap().is_some());
    }

    #[test]
    fn permutation_rep_via_cayley() {
        let t = split(FiniteGroup::symmetric(3), vec![2]);
        let rho = cayley_embedding(t.pi0());
        let q = permutation_rep(&t, rho).unwrap();
        assert_eq!(q.dim(), 6);
        assert!(q.is_valid());
    }

    #[test]
    fn sigma_conjugate_roundtrip() {
        let t = split(FiniteGroup::cyclic(2), vec![2]);
        let r = regular_rep(&t);
        let sigma = Perm::new(vec![2, 0, 3, 1]).unwrap();
        let conj = r.conjugate_by(&sigma).unwrap();
        assert!(conj.is_valid());
        // Shift c by a coboundary as well.
        let module = conj.c().module().clone();
        let b = Cochain::from_fn(module, 1, |args| {
            (0..4)
                .map(|i| if args[0] == 0 { QZ::ZERO } else { QZ::frac((i + args[0]) as i64, 3) })
                .collect()
        });
        let shifted = conj.shift_c(&b).unwrap();
        assert!(shifted.is_valid());
        let witness = equivalent(&r, &shifted).unwrap().expect("conjugates are equivalent");
        // Applying the witness reproduces (ρ′, β′) and a coboundary
        // difference.
        let applied = r.conjugate_by(&witness).unwrap();
        assert_eq!(applied.rho(), shifted.rho());
        assert_eq!(applied.gamma(), shifted.gamma());
        let diff = shifted.c().sub(applied.c()).unwrap();
        assert!(solve_coboundary(&diff).unwrap().is_some());
    }

    #[test]
    fn equivalent_rejects_mismatched_two_groups() {
        let t1 = split(FiniteGroup::cyclic(2), vec![1]);
        let t2 = split(FiniteGroup::cyclic(2), vec![2]);
        let q1 = trivial_rep(&t1);
        let q2 = trivial_rep(&t2);
        assert!(matches!(equivalent(&q1, &q2), Err(RepError::DifferentTwoGroups)));
    }

    #[test]
    fn dimension_of_regular_is_pq() {
        for (pi0, orders) in [
            (FiniteGroup::cyclic(3), vec![2]),
            (FiniteGroup::symmetric(3), vec![2, 2]),
            (klein(), vec![3]),
        ] {
            let t = split(pi0, orders);
            let r = regular_rep(&t);
            assert_eq!(r.dim(), t.p() * t.q());
        }
    }
}
