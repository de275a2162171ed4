//! Seeded random generators for 2-groups and valid quadruples, used by
//! the test and benchmark suites.
//!
//! Randomized coverage needs genuinely varied but *valid* inputs:
//! classifying 3-cocycles are sampled from the kernel of the degree-3
//! coboundary matrix (so they are exact cocycles by construction, then
//! re-verified), and quadruples are assembled from enumerated
//! homomorphisms, equivariant character arrays, and a particular
//! solution of the obstruction equation.

use rand::prelude::*;

use crate::charlat::{
    act_on_character, automorphism_perms, dual_group, AbelianGroup, Character, Pi1Action,
};
use crate::cohom::{self, solve_coboundary, Cochain, QzCochain, TwistedQzModule};
use crate::grp::{enumerate_perm_homs, orbits, FiniteGroup, GSet, Perm};
use crate::repq::RepQuadruple;
use crate::snf::{IntMat, KernelMod};
use crate::twogrp::TwoGroupData;

/// Small groups usable as π₀, orders ≤ `max_order`.
pub fn pi0_catalog(max_order: usize) -> Vec<FiniteGroup> {
    let z = FiniteGroup::cyclic;
    let mut out = vec![
        FiniteGroup::trivial(),
        z(2),
        z(3),
        z(4),
        z(2).direct_product(&z(2)),
        z(5),
        z(6),
        FiniteGroup::symmetric(3),
        z(7),
        z(8),
        z(2).direct_product(&z(4)),
        FiniteGroup::dihedral(4),
        z(2).direct_product(&z(2)).direct_product(&z(2)),
    ];
    out.retain(|g| g.order() <= max_order);
    out
}

/// Small abelian groups usable as π₁, orders ≤ `max_order`.
pub fn pi1_catalog(max_order: usize) -> Vec<AbelianGroup> {
    let mut out = vec![
        AbelianGroup::trivial(),
        AbelianGroup::new(vec![2]).unwrap(),
        AbelianGroup::new(vec![3]).unwrap(),
        AbelianGroup::new(vec![4]).unwrap(),
        AbelianGroup::new(vec![2, 2]).unwrap(),
    ];
    out.retain(|a| a.order() <= max_order);
    out
}

/// All actions of `pi0` on `pi1` by additive automorphisms.
pub fn enumerate_actions(pi0: &FiniteGroup, pi1: &AbelianGroup) -> Vec<Pi1Action> {
    let autos = automorphism_perms(pi1);
    enumerate_perm_homs(pi0, &autos)
        .into_iter()
        .map(|rep| {
            Pi1Action::new(pi0, pi1, rep.images().to_vec()).expect("automorphism homomorphism")
        })
        .collect()
}

/// Samples a normalized π₁-valued 3-cocycle for a *cyclic* π₁ by drawing
/// from the kernel of the coboundary matrix mod `|π₁|`.  Returns a dense
/// `p×p×p` table of π₁ element indices, or `None` when π₁ is not cyclic
/// of order ≥ 2.
pub fn sample_alpha_table(
    rng: &mut impl Rng,
    pi0: &FiniteGroup,
    pi1: &AbelianGroup,
    action: &Pi1Action,
) -> Option<Vec<Vec<Vec<usize>>>> {
    if pi1.cyclic_orders().len() != 1 || pi1.order() < 2 {
        return None;
    }
    let d = pi1.order();
    let p = pi0.order();
    if p == 1 {
        return Some(vec![vec![vec![0]]]);
    }
    // Coordinates: identity-free 3-tuples; a cyclic π₁ turns the module
    // action into multiplication by the unit u(g) = g·1.
    let rows = cohom::reduced_count(p, 4);
    let cols = cohom::reduced_count(p, 3);
    let mut a = IntMat::zero(rows, cols);
    let mut t = vec![0usize; 4];
    let mut merged = vec![0usize; 3];
    for r in 0..rows {
        cohom::reduced_unrank(p, 4, r, &mut t);
        // g₁·c(g₂,g₃,g₄)
        let unit = action.act(t[0], 1) as i128;
        a[(r, cohom::reduced_rank(p, &t[1..]))] += unit;
        for k in 1..=3 {
            merged[..k - 1].copy_from_slice(&t[..k - 1]);
            merged[k - 1] = pi0.mul(t[k - 1], t[k]);
            if k < 3 {
                merged[k..].copy_from_slice(&t[k + 1..]);
            }
            if merged.iter().any(|&x| x == 0) {
                continue;
            }
            a[(r, cohom::reduced_rank(p, &merged))] += if k % 2 == 1 { -1 } else { 1 };
        }
        a[(r, cohom::reduced_rank(p, &t[..3]))] += 1; // (−1)⁴
    }
    let kernel = KernelMod::compute(a, d as i128).ok()?;
    let coeffs: Vec<i128> = kernel
        .generator_cards()
        .iter()
        .map(|&c| rng.gen_range(0..c.max(1)))
        .collect();
    let numerators = kernel.element_for(&coeffs);
    let mut table = vec![vec![vec![0usize; p]; p]; p];
    let mut tuple = vec![0usize; 3];
    for (idx, &v) in numerators.iter().enumerate() {
        cohom::reduced_unrank(p, 3, idx, &mut tuple);
        table[tuple[0]][tuple[1]][tuple[2]] = v as usize;
    }
    Some(table)
}

/// Sampling bounds for random 2-groups.
#[derive(Debug, Clone, Copy)]
pub struct TwoGroupBounds {
    pub max_pi0: usize,
    pub max_pi1: usize,
}

impl Default for TwoGroupBounds {
    fn default() -> Self {
        TwoGroupBounds { max_pi0: 8, max_pi1: 4 }
    }
}

/// A random valid 2-group: random π₀ and π₁ from the catalogs, a random
/// action, and (where π₁ is cyclic) a kernel-sampled classifying
/// 3-cocycle; construction re-validates everything.
pub fn random_two_group(rng: &mut impl Rng, bounds: TwoGroupBounds) -> TwoGroupData {
    let pi0s = pi0_catalog(bounds.max_pi0);
    let pi1s = pi1_catalog(bounds.max_pi1);
    let pi0 = pi0s[rng.gen_range(0..pi0s.len())].clone();
    let pi1 = pi1s[rng.gen_range(0..pi1s.len())].clone();
    let actions = enumerate_actions(&pi0, &pi1);
    let action = actions[rng.gen_range(0..actions.len())].clone();
    if rng.gen_bool(0.5) {
        if let Some(table) = sample_alpha_table(rng, &pi0, &pi1, &action) {
            return TwoGroupData::make_two_group(pi0, pi1, action, table)
                .expect("kernel-sampled alpha is a cocycle");
        }
    }
    TwoGroupData::make_split(pi0, pi1, action).expect("catalog data is valid")
}

/// A random normalized cochain over the given module, with value orders
/// dividing `max_den`.
pub fn random_normalized_cochain(
    rng: &mut impl Rng,
    module: &TwistedQzModule,
    degree: usize,
    max_den: u64,
) -> QzCochain {
    use crate::charlat::QZ;
    let n = module.rank();
    Cochain::from_fn(module.clone(), degree, |t| {
        (0..n)
            .map(|_| {
                if t.contains(&0) {
                    QZ::ZERO
                } else {
                    QZ::frac(rng.gen_range(0..max_den as i64 * 2), max_den)
                }
            })
            .collect()
    })
}

/// A random valid quadruple of dimension ≤ `max_dim` over `two_group`:
/// a random homomorphism ρ, a random equivariant γ, and a particular
/// solution of `∂c = β∗(α)` shifted by a random coboundary.  `None` if
/// no solvable γ was found for the sampled ρ.
pub fn random_quadruple(
    rng: &mut impl Rng,
    two_group: &TwoGroupData,
    max_dim: usize,
) -> Option<RepQuadruple> {
    use itertools::Itertools;
    let pi0 = two_group.pi0();
    let pi1 = two_group.pi1();
    let n = rng.gen_range(1..=max_dim);
    let all_perms: Vec<Perm> = (0..n).permutations(n).map(|im| Perm::new(im).unwrap()).collect();
    let homs = enumerate_perm_homs(pi0, &all_perms);
    let rho = homs[rng.gen_range(0..homs.len())].clone();
    let module = TwistedQzModule::new(pi0.clone(), rho.clone()).ok()?;

    let x = GSet::from_perm_rep(pi0, &rho);
    let orbs = orbits(&x);
    let chars = dual_group(pi1);

    'attempt: for _ in 0..8 {
        let mut gamma: Vec<Option<Character>> = vec![None; n];
        for orbit in &orbs {
            let fixed: Vec<&Character> = chars
                .iter()
                .filter(|chi| {
                    orbit.stabilizer.iter().all(|&s| {
                        act_on_character(two_group.action(), pi0, pi1, s, chi)
                            .map(|moved| moved == **chi)
                            .unwrap_or(false)
                    })
                })
                .collect();
            if fixed.is_empty() {
                continue 'attempt;
            }
            let base = fixed[rng.gen_range(0..fixed.len())];
            for &pt in &orbit.points {
                let h = pi0
                    .elements()
                    .find(|&h| rho.image(h).apply(orbit.representative) == pt)
                    .expect("transitive on orbit");
                gamma[pt] =
                    Some(act_on_character(two_group.action(), pi0, pi1, h, base).ok()?);
            }
        }
        let gamma: Vec<Character> = gamma.into_iter().map(Option::unwrap).collect();
        let target = crate::repq::push_alpha(two_group, &gamma, &module);
        let Ok(Some(c0)) = solve_coboundary(&target) else {
            continue 'attempt;
        };
        let c = if rng.gen_bool(0.5) {
            let den = [2, 3, 4][rng.gen_range(0..3)];
            let b = random_normalized_cochain(rng, &module, 1, den);
            c0.add(&b.coboundary()).ok()?
        } else {
            c0
        };
        let q = RepQuadruple::new(two_group.clone(), rho, gamma, c).ok()?;
        debug_assert!(q.is_valid());
        return Some(q);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sampled_two_groups_are_valid_and_varied() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut nontrivial_alpha = 0;
        let mut nontrivial_action = 0;
        for _ in 0..40 {
            let t = random_two_group(&mut rng, TwoGroupBounds::default());
            assert!(t.p() <= 8 && t.q() <= 4);
            if !t.is_split() {
                nontrivial_alpha += 1;
            }
            if !t.action().is_trivial() {
                nontrivial_action += 1;
            }
        }
        assert!(nontrivial_alpha >= 3, "got {nontrivial_alpha} nontrivial α");
        assert!(nontrivial_action >= 3, "got {nontrivial_action} nontrivial actions");
    }

    #[test]
    fn sampled_quadruples_validate() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut produced = 0;
        while produced < 10 {
            let t = random_two_group(&mut rng, TwoGroupBounds { max_pi0: 6, max_pi1: 4 });
            if let Some(q) = random_quadruple(&mut rng, &t, 3) {
                let report = q.validate();
                assert!(report.passed(), "{report}");
                produced += 1;
            }
        }
    }
}
