//! Intertwining orbits, restricted cocycles, z-regular conjugacy
//! classes, intertwining numbers, torsor transport scalars, and the
//! representability invariants of the forgetful 2-functor.
//!
//! For quadruples `(n,ρ,β,c)` and `(n′,ρ′,β′,c′)` over the same 2-group,
//! π₀ acts on `X(n′,n) = [n′]×[n]` on the right by
//! `(i′,i)·g = (ρ′(g⁻¹)(i′), ρ(g⁻¹)(i))`.  An orbit is *intertwining*
//! when the source and target characters agree on it, and each
//! intertwining orbit contributes the number of `ẑ`-regular conjugacy
//! classes of its stabilizer, where
//! `ẑ(g₁,g₂) = c′(g₂⁻¹,g₁⁻¹)_{i′} − c(g₂⁻¹,g₁⁻¹)_{i}` at the
//! representative.  The total over orbits is the intertwining number.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charlat::{dual_group, Character, QZ};
use crate::cohom::{CoeffModule, Cochain, CohomError, OrbitFnModule, ScalarCochain, TrivialQzModule};
use crate::exec;
use crate::grp::{
    centralizer, conjugacy_classes, orbits, FiniteGroup, GSet, GroupError, Perm, SubgroupView,
};
use crate::repq::RepQuadruple;

#[derive(Debug, Error)]
pub enum IntertwineError {
    #[error("quadruples live over different 2-groups")]
    TwoGroupMismatch,
    #[error("multiplicity vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("orbit is not a torsor")]
    NonTorsor,
    #[error("point ({0}, {1}) is not in the orbit")]
    PointNotInOrbit(usize, usize),
    #[error("orbit record does not match the given cochains (index out of range)")]
    StaleOrbit,
    #[error("ẑ is not a 2-cocycle on the stabilizer")]
    ZhatNotACocycle,
    #[error("basis index {index} out of range 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cohom(#[from] CohomError),
}

// ---------------------------------------------------------------------------
// Orbits of X(n', n)
// ---------------------------------------------------------------------------

/// One intertwining π₀-orbit of `X(n′,n)`, with the stabilizer of its
/// least point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwineOrbit {
    pub representative: (usize, usize),
    pub points: Vec<(usize, usize)>,
    /// Sorted π₀ element indices of the stabilizer of the representative.
    pub stabilizer: Vec<usize>,
    pub is_torsor: bool,
}

impl IntertwineOrbit {
    pub fn contains(&self, point: (usize, usize)) -> bool {
        self.points.binary_search(&point).is_ok()
    }
}

/// The full orbit decomposition of `X(n′,n)` before the intertwining
/// filter; `intertwining` mirrors which orbits survive.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OrbitDecomposition {
    pub orbits: Vec<IntertwineOrbit>,
    pub intertwining: Vec<bool>,
}

/// The right `π₀`-set `X(n′,n)` for a pair of quadruples.
pub fn hom_gset(source: &RepQuadruple, target: &RepQuadruple) -> GSet {
    let pi0 = source.two_group().pi0();
    let (n, np) = (source.dim(), target.dim());
    let size = np * n;
    let act = pi0
        .elements()
        .map(|g| {
            let gi = pi0.inv(g);
            let ps = source.rho().image(gi);
            let pt = target.rho().image(gi);
            Perm::new(
                (0..size).map(|x| pt.apply(x / n) * n + ps.apply(x % n)).collect(),
            )
            .unwrap()
        })
        .collect();
    GSet::new(pi0.clone(), size, act).expect("product of right actions")
}

fn decompose(source: &RepQuadruple, target: &RepQuadruple) -> Result<OrbitDecomposition, IntertwineError> {
    if source.two_group() != target.two_group() {
        return Err(IntertwineError::TwoGroupMismatch);
    }
    let n = source.dim();
    let pi0 = source.two_group().pi0();
    let x = hom_gset(source, target);
    let mut out = Vec::new();
    let mut flags = Vec::new();
    for orbit in orbits(&x) {
        let points: Vec<(usize, usize)> = orbit.points.iter().map(|&p| (p / n, p % n)).collect();
        let rep = points[0];
        let is_torsor = orbit.stabilizer.len() == 1;
        debug_assert_eq!(is_torsor, points.len() == pi0.order());
        let intertwining = target.gamma()[rep.0] == source.gamma()[rep.1];
        if intertwining {
            // The agreement propagates to every point of the orbit; a
            // failure here would contradict equivariance of both γ's.
            for &(ip, i) in &points {
                assert_eq!(
                    target.gamma()[ip],
                    source.gamma()[i],
                    "intertwining condition must hold orbit-wide"
                );
            }
        }
        out.push(IntertwineOrbit {
            representative: rep,
            points,
            stabilizer: orbit.stabilizer,
            is_torsor,
        });
        flags.push(intertwining);
    }
    Ok(OrbitDecomposition { orbits: out, intertwining: flags })
}

/// All orbits of `X(n′,n)` with their intertwining flags.
pub fn orbit_decomposition(
    source: &RepQuadruple,
    target: &RepQuadruple,
) -> Result<OrbitDecomposition, IntertwineError> {
    decompose(source, target)
}

/// The intertwining orbits only, listed by representative.
pub fn intertwining_orbits(
    source: &RepQuadruple,
    target: &RepQuadruple,
) -> Result<Vec<IntertwineOrbit>, IntertwineError> {
    let d = decompose(source, target)?;
    Ok(d.orbits
        .into_iter()
        .zip(d.intertwining)
        .filter_map(|(o, keep)| keep.then_some(o))
        .collect())
}

// ---------------------------------------------------------------------------
// Restricted cocycles and z-regularity
// ---------------------------------------------------------------------------

/// The restricted cocycle `ẑ` on the stabilizer of the orbit
/// representative, as a normalized scalar 2-cochain over the re-indexed
/// stabilizer group.
pub fn zhat_cocycle(
    pi0: &FiniteGroup,
    orbit: &IntertwineOrbit,
    c_source: &crate::cohom::QzCochain,
    c_target: &crate::cohom::QzCochain,
) -> Result<(SubgroupView, ScalarCochain), IntertwineError> {
    let (ip, i) = orbit.representative;
    if i >= c_source.module().rank() || ip >= c_target.module().rank() {
        return Err(IntertwineError::StaleOrbit);
    }
    let view = SubgroupView::new(pi0, &orbit.stabilizer)?;
    let module = TrivialQzModule::new(view.group.clone());
    let zhat = Cochain::from_fn(module, 2, |args| {
        let g1 = view.ambient(args[0]);
        let g2 = view.ambient(args[1]);
        let at = [pi0.inv(g2), pi0.inv(g1)];
        c_target.value(&at)[ip] - c_source.value(&at)[i]
    });
    assert!(zhat.is_normalized(), "ẑ of normalized cochains is normalized");
    if !zhat.is_cocycle() {
        return Err(IntertwineError::ZhatNotACocycle);
    }
    Ok((view, zhat))
}

/// Number of `z`-regular conjugacy classes of `H`: a class counts iff
/// its representative `g` has `z(g,g′) = z(g′,g)` for every `g′` in the
/// centralizer of `g`.
pub fn zregular_count(h: &FiniteGroup, zhat: &ScalarCochain) -> Result<usize, IntertwineError> {
    if zhat.module().group() != h || zhat.degree() != 2 {
        return Err(IntertwineError::StaleOrbit);
    }
    if !zhat.is_normalized() || !zhat.is_cocycle() {
        return Err(IntertwineError::ZhatNotACocycle);
    }
    let mut count = 0;
    for class in conjugacy_classes(h) {
        let g = class.representative;
        let regular = centralizer(h, g)?
            .into_iter()
            .all(|gp| zhat.value(&[g, gp]) == zhat.value(&[gp, g]));
        if regular {
            count += 1;
        }
    }
    Ok(count)
}

// ---------------------------------------------------------------------------
// Intertwining numbers
// ---------------------------------------------------------------------------

/// A fully populated orbit record of a hom-rank computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    #[serde(flatten)]
    pub orbit: IntertwineOrbit,
    /// `ẑ` over the re-indexed stabilizer: `zhat[a][b]` is the value at
    /// the pair of stabilizer elements in sorted order.
    pub zhat: Vec<Vec<QZ>>,
    pub zregular_count: usize,
}

/// Intertwining orbits with cocycle data and the total intertwining
/// number `Σ_λ r(G_λ, ẑ_λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomReport {
    pub orbits: Vec<OrbitRecord>,
    pub total_rank: usize,
}

/// Computes the rank of the hom-category from `source` to `target`.
///
/// Per-orbit work is independent and runs concurrently when the
/// `parallel` feature is on; records are merged in canonical orbit
/// order either way.
pub fn hom_rank(
    source: &RepQuadruple,
    target: &RepQuadruple,
) -> Result<HomReport, IntertwineError> {
    let pi0 = source.two_group().pi0().clone();
    let orbs = intertwining_orbits(source, target)?;
    let records: Vec<Result<OrbitRecord, IntertwineError>> =
        exec::map_ordered(&orbs, |orbit| {
            let (view, zhat) = zhat_cocycle(&pi0, orbit, source.c(), target.c())?;
            let count = zregular_count(&view.group, &zhat)?;
            let h = view.group.order();
            let matrix = (0..h)
                .map(|a| (0..h).map(|b| *zhat.value(&[a, b])).collect())
                .collect();
            Ok(OrbitRecord { orbit: orbit.clone(), zhat: matrix, zregular_count: count })
        });
    let mut orbits = Vec::with_capacity(records.len());
    let mut total = 0;
    for r in records {
        let r = r?;
        total += r.zregular_count;
        orbits.push(r);
    }
    Ok(HomReport { orbits, total_rank: total })
}

/// The symmetry corollary: ranks agree in both directions.
pub fn symmetry_check(
    q1: &RepQuadruple,
    q2: &RepQuadruple,
) -> Result<bool, IntertwineError> {
    Ok(hom_rank(q1, q2)?.total_rank == hom_rank(q2, q1)?.total_rank)
}

/// Canonical point `(i, index(β_i, e))` of the `i`-th intertwining orbit
/// for a hom from the regular representation to `target`.
pub fn canonical_regular_point(target: &RepQuadruple, i: usize) -> Result<(usize, usize), IntertwineError> {
    if i >= target.dim() {
        return Err(IntertwineError::IndexOutOfRange { index: i, n: target.dim() });
    }
    let t = target.two_group();
    let k = t.pi1().index_of(target.gamma()[i].exps()).map_err(|_| IntertwineError::StaleOrbit)?;
    Ok((i, k * t.p()))
}

// ---------------------------------------------------------------------------
// Torsor transport
// ---------------------------------------------------------------------------

/// The right π₀-set structure on one orbit, points indexed by their
/// position in the orbit's sorted point list.
pub fn orbit_gset(
    source: &RepQuadruple,
    target: &RepQuadruple,
    orbit: &IntertwineOrbit,
) -> Result<GSet, IntertwineError> {
    let pi0 = source.two_group().pi0();
    let pos = |pt: (usize, usize)| orbit.points.binary_search(&pt).map_err(|_| IntertwineError::StaleOrbit);
    let mut act = Vec::with_capacity(pi0.order());
    for g in pi0.elements() {
        let gi = pi0.inv(g);
        let mut images = Vec::with_capacity(orbit.points.len());
        for &(ip, i) in &orbit.points {
            let moved =
                (target.rho().image(gi).apply(ip), source.rho().image(gi).apply(i));
            images.push(pos(moved)?);
        }
        act.push(Perm::new(images).map_err(IntertwineError::Group)?);
    }
    Ok(GSet::new(pi0.clone(), orbit.points.len(), act)?)
}

/// The ratio cocycle `z_λ(g₁,g₂)(i′,i) = c′(g₁,g₂)_{i′} − c(g₁,g₂)_i`
/// as a cochain valued in functions on the orbit.
pub fn ratio_cocycle(
    source: &RepQuadruple,
    target: &RepQuadruple,
    orbit: &IntertwineOrbit,
) -> Result<Cochain<OrbitFnModule>, IntertwineError> {
    let module = OrbitFnModule::new(orbit_gset(source, target, orbit)?);
    let c = source.c();
    let cp = target.c();
    let z = Cochain::from_fn(module, 2, |args| {
        orbit
            .points
            .iter()
            .map(|&(ip, i)| cp.value(args)[ip] - c.value(args)[i])
            .collect()
    });
    debug_assert!(z.is_cocycle());
    Ok(z)
}

/// Transport scalar over a torsor orbit: `−z(ḡ,g)(x₀)` where `ḡ` is the
/// unique element with `x = x₀·ḡ`.  Independent of any bundle rank.
pub fn torsor_transport(
    orbit: &IntertwineOrbit,
    z: &Cochain<OrbitFnModule>,
    x: (usize, usize),
    g: usize,
) -> Result<QZ, IntertwineError> {
    if !orbit.is_torsor {
        return Err(IntertwineError::NonTorsor);
    }
    let Ok(px) = orbit.points.binary_search(&x) else {
        return Err(IntertwineError::PointNotInOrbit(x.0, x.1));
    };
    let gset = z.module().points();
    let p0 = orbit
        .points
        .binary_search(&orbit.representative)
        .expect("representative is an orbit point");
    let pi0 = gset.group();
    let gbar = pi0
        .elements()
        .find(|&h| gset.act(p0, h) == px)
        .expect("torsor action is transitive");
    Ok(-z.value(&[gbar, g])[p0])
}

// ---------------------------------------------------------------------------
// Representability of the forgetful 2-functor
// ---------------------------------------------------------------------------

/// Evaluates the basic functor `η_{χ,g}` on a multiplicity vector `d`
/// (indexed by the basis of `target`): entry `j` of the result is
/// `d_{ρ(g)(j)}` when `β_{ρ(g)(j)} = χ`, and `0` otherwise.
pub fn universal_eval(
    d: &[usize],
    target: &RepQuadruple,
    chi: &Character,
    g: usize,
) -> Result<Vec<usize>, IntertwineError> {
    let n = target.dim();
    if d.len() != n {
        return Err(IntertwineError::DimensionMismatch { expected: n, got: d.len() });
    }
    let rho_g = target.rho().image(g);
    Ok((0..n)
        .map(|j| {
            let i = rho_g.apply(j);
            if &target.gamma()[i] == chi {
                d[i]
            } else {
                0
            }
        })
        .collect())
}

/// `Σ_χ η_{χ,e}` applied to `d`; equals `d` exactly (the
/// representability identity).
pub fn universal_roundtrip(
    d: &[usize],
    target: &RepQuadruple,
) -> Result<Vec<usize>, IntertwineError> {
    let n = target.dim();
    if d.len() != n {
        return Err(IntertwineError::DimensionMismatch { expected: n, got: d.len() });
    }
    let mut acc = vec![0usize; n];
    for chi in dual_group(target.two_group().pi1()) {
        let part = universal_eval(d, target, &chi, 0)?;
        for (a, b) in acc.iter_mut().zip(part) {
            *a += b;
        }
    }
    Ok(acc)
}

/// Component of the basis endomorphism `ζ_{χ,g}` on the `i`-th basis
/// object: `Some(ρ(g⁻¹)(i))` iff `χ = β_i`.
pub fn end_omega_basis_component(
    chi: &Character,
    g: usize,
    target: &RepQuadruple,
    i: usize,
) -> Result<Option<usize>, IntertwineError> {
    let n = target.dim();
    if i >= n {
        return Err(IntertwineError::IndexOutOfRange { index: i, n });
    }
    if &target.gamma()[i] == chi {
        let pi0 = target.two_group().pi0();
        Ok(Some(target.rho().image(pi0.inv(g)).apply(i)))
    } else {
        Ok(None)
    }
}
