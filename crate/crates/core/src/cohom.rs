//! Twisted group cochains, the bar-resolution coboundary, cocycle tests,
//! exact solution of coboundary equations, and enumeration of H²
//! representatives.
//!
//! Cochains are total maps `G^d → A` stored densely and indexed by
//! element tuples.  The coefficient module `A` varies: permutation-twisted
//! tuples of ℚ/ℤ scalars, plain ℚ/ℤ scalars, a π₁ with a π₀-action, or
//! ℚ/ℤ-valued functions on a right `G`-set.  The coboundary is
//!
//! `(∂c)(g₁,…,g_{d+1}) = g₁·c(g₂,…,g_{d+1})
//!     + Σ_{k=1}^{d} (−1)^k c(g₁,…,g_k g_{k+1},…,g_{d+1})
//!     + (−1)^{d+1} c(g₁,…,g_d)`,
//!
//! written additively.  Solving `∂c = t` for torsion-valued targets
//! reduces to integer linear algebra: with `e` the least common multiple
//! of the value orders of `t` and `M = e·|G|`, a solution exists over
//! ℚ/ℤ iff one exists with values in `(1/M)ℤ/ℤ`, because the nonzero
//! elementary divisors of the (normalized) coboundary matrix divide `|G|`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charlat::{lcm, AbelianGroup, Pi1Action, QZ};
use crate::grp::{FiniteGroup, GSet, GroupError, PermRep};
use crate::snf::{IntMat, KernelMod, LinAlgError, ZModSystem};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CohomError {
    #[error("cochain has {got} values, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("target is not a cocycle: ∂t ≠ 0 at tuple {witness:?}")]
    NotACocycle { witness: Vec<usize> },
    #[error("cochain is not normalized at tuple {position:?}")]
    NotNormalized { position: Vec<usize> },
    #[error("cochains live over different modules")]
    ModuleMismatch,
    #[error("cochains have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("enumeration size {size} exceeds bound {bound}")]
    TooLarge { size: usize, bound: usize },
    #[error("modulus too large for exact arithmetic")]
    ModulusOverflow,
    #[error("cannot solve for a cochain of negative degree")]
    DegreeZeroTarget,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

// ---------------------------------------------------------------------------
// Coefficient modules
// ---------------------------------------------------------------------------

/// A `G`-module of coefficient values for cochains.
pub trait CoeffModule: Clone + PartialEq {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn group(&self) -> &FiniteGroup;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Left action of a group element on a value.
    fn act(&self, g: usize, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// `(ℚ/ℤ)ⁿ` twisted by a permutation representation:
/// `(g·λ)ᵢ = λ_{ρ(g⁻¹)(i)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedQzModule {
    group: FiniteGroup,
    rank: usize,
    twist: PermRep,
}

impl TwistedQzModule {
    pub fn new(group: FiniteGroup, twist: PermRep) -> Result<Self, CohomError> {
        if twist.images().len() != group.order() {
            return Err(CohomError::Group(GroupError::BadShape {
                order: group.order(),
                rows: twist.images().len(),
            }));
        }
        Ok(TwistedQzModule { rank: twist.degree(), group, twist })
    }

    pub fn untwisted(group: FiniteGroup, rank: usize) -> Self {
        let twist = PermRep::trivial(&group, rank);
        TwistedQzModule { group, rank, twist }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn twist(&self) -> &PermRep {
        &self.twist
    }
}

impl CoeffModule for TwistedQzModule {
    type Elem = Vec<QZ>;

    fn group(&self) -> &FiniteGroup {
        &self.group
    }
    fn zero(&self) -> Vec<QZ> {
        vec![QZ::ZERO; self.rank]
    }
    fn add(&self, a: &Vec<QZ>, b: &Vec<QZ>) -> Vec<QZ> {
        a.iter().zip(b).map(|(&x, &y)| x + y).collect()
    }
    fn neg(&self, a: &Vec<QZ>) -> Vec<QZ> {
        a.iter().map(|&x| -x).collect()
    }
    fn act(&self, g: usize, a: &Vec<QZ>) -> Vec<QZ> {
        let p = self.twist.image(self.group.inv(g));
        (0..self.rank).map(|i| a[p.apply(i)]).collect()
    }
}

/// Plain ℚ/ℤ scalars with the trivial action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialQzModule {
    group: FiniteGroup,
}

impl TrivialQzModule {
    pub fn new(group: FiniteGroup) -> Self {
        TrivialQzModule { group }
    }
}

impl CoeffModule for TrivialQzModule {
    type Elem = QZ;

    fn group(&self) -> &FiniteGroup {
        &self.group
    }
    fn zero(&self) -> QZ {
        QZ::ZERO
    }
    fn add(&self, a: &QZ, b: &QZ) -> QZ {
        *a + *b
    }
    fn neg(&self, a: &QZ) -> QZ {
        -*a
    }
    fn act(&self, _g: usize, a: &QZ) -> QZ {
        *a
    }
}

/// A finite abelian group π₁ acted on by π₀; values are π₁ element
/// indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Pi1Module {
    pi0: FiniteGroup,
    pi1: AbelianGroup,
    action: Pi1Action,
}

impl Pi1Module {
    pub fn new(pi0: FiniteGroup, pi1: AbelianGroup, action: Pi1Action) -> Self {
        Pi1Module { pi0, pi1, action }
    }

    pub fn pi1(&self) -> &AbelianGroup {
        &self.pi1
    }

    pub fn action(&self) -> &Pi1Action {
        &self.action
    }
}

impl CoeffModule for Pi1Module {
    type Elem = usize;

    fn group(&self) -> &FiniteGroup {
        &self.pi0
    }
    fn zero(&self) -> usize {
        0
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        self.pi1.add(*a, *b)
    }
    fn neg(&self, a: &usize) -> usize {
        self.pi1.neg(*a)
    }
    fn act(&self, g: usize, a: &usize) -> usize {
        self.action.act(g, *a)
    }
}

/// ℚ/ℤ-valued functions on a right `G`-set with `(g·f)(x) = f(x·g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitFnModule {
    points: GSet,
}

impl OrbitFnModule {
    pub fn new(points: GSet) -> Self {
        OrbitFnModule { points }
    }

    pub fn points(&self) -> &GSet {
        &self.points
    }
}

impl CoeffModule for OrbitFnModule {
    type Elem = Vec<QZ>;

    fn group(&self) -> &FiniteGroup {
        self.points.group()
    }
    fn zero(&self) -> Vec<QZ> {
        vec![QZ::ZERO; self.points.size()]
    }
    fn add(&self, a: &Vec<QZ>, b: &Vec<QZ>) -> Vec<QZ> {
        a.iter().zip(b).map(|(&x, &y)| x + y).collect()
    }
    fn neg(&self, a: &Vec<QZ>) -> Vec<QZ> {
        a.iter().map(|&x| -x).collect()
    }
    fn act(&self, g: usize, a: &Vec<QZ>) -> Vec<QZ> {
        (0..self.points.size()).map(|x| a[self.points.act(x, g)]).collect()
    }
}

// ---------------------------------------------------------------------------
// Cochains
// ---------------------------------------------------------------------------

/// A total map `G^d → A`, stored densely; tuple `(g₁,…,g_d)` lives at
/// index `Σ gᵢ·p^{d−i}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<M: CoeffModule> {
    module: M,
    degree: usize,
    values: Vec<M::Elem>,
}

fn tuple_count(p: usize, d: usize) -> usize {
    p.pow(d as u32)
}

impl<M: CoeffModule> Cochain<M> {
    pub fn new(module: M, degree: usize, values: Vec<M::Elem>) -> Result<Self, CohomError> {
        let expected = tuple_count(module.group().order(), degree);
        if values.len() != expected {
            return Err(CohomError::BadLength { expected, got: values.len() });
        }
        Ok(Cochain { module, degree, values })
    }

    /// Like [`Cochain::new`] but additionally requires the cochain to be
    /// normalized (zero whenever any argument is the identity).
    pub fn normalized(module: M, degree: usize, values: Vec<M::Elem>) -> Result<Self, CohomError> {
        let c = Cochain::new(module, degree, values)?;
        match c.first_unnormalized() {
            None => Ok(c),
            Some(pos) => Err(CohomError::NotNormalized { position: pos }),
        }
    }

    pub fn zero(module: M, degree: usize) -> Self {
        let n = tuple_count(module.group().order(), degree);
        let z = module.zero();
        Cochain { module, degree, values: vec![z; n] }
    }

    pub fn from_fn(module: M, degree: usize, mut f: impl FnMut(&[usize]) -> M::Elem) -> Self {
        let p = module.group().order();
        let n = tuple_count(p, degree);
        let mut values = Vec::with_capacity(n);
        let mut tuple = vec![0usize; degree];
        for idx in 0..n {
            Self::unrank(p, degree, idx, &mut tuple);
            values.push(f(&tuple));
        }
        Cochain { module, degree, values }
    }

    fn unrank(p: usize, degree: usize, mut idx: usize, tuple: &mut [usize]) {
        for k in (0..degree).rev() {
            tuple[k] = idx % p;
            idx /= p;
        }
    }

    pub fn index_of(&self, args: &[usize]) -> usize {
        let p = self.module.group().order();
        debug_assert_eq!(args.len(), self.degree);
        args.iter().fold(0, |acc, &g| acc * p + g)
    }

    pub fn value(&self, args: &[usize]) -> &M::Elem {
        &self.values[self.index_of(args)]
    }

    pub fn values(&self) -> &[M::Elem] {
        &self.values
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn module(&self) -> &M {
        &self.module
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| self.module.is_zero(v))
    }

    /// First tuple containing the identity whose value is nonzero.
    fn first_unnormalized(&self) -> Option<Vec<usize>> {
        let p = self.module.group().order();
        let mut tuple = vec![0usize; self.degree];
        for (idx, v) in self.values.iter().enumerate() {
            Self::unrank(p, self.degree, idx, &mut tuple);
            if tuple.contains(&0) && !self.module.is_zero(v) {
                return Some(tuple);
            }
        }
        None
    }

    pub fn is_normalized(&self) -> bool {
        self.first_unnormalized().is_none()
    }

    pub fn add(&self, other: &Cochain<M>) -> Result<Cochain<M>, CohomError> {
        if self.module != other.module {
            return Err(CohomError::ModuleMismatch);
        }
        if self.degree != other.degree {
            return Err(CohomError::DegreeMismatch(self.degree, other.degree));
        }
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| self.module.add(a, b)).collect();
        Ok(Cochain { module: self.module.clone(), degree: self.degree, values })
    }

    pub fn sub(&self, other: &Cochain<M>) -> Result<Cochain<M>, CohomError> {
        if self.module != other.module {
            return Err(CohomError::ModuleMismatch);
        }
        if self.degree != other.degree {
            return Err(CohomError::DegreeMismatch(self.degree, other.degree));
        }
        let values =
            self.values.iter().zip(&other.values).map(|(a, b)| self.module.sub(a, b)).collect();
        Ok(Cochain { module: self.module.clone(), degree: self.degree, values })
    }

    /// The bar-resolution coboundary, one degree up.
    pub fn coboundary(&self) -> Cochain<M> {
        let g = self.module.group().clone();
        let d = self.degree;
        let module = self.module.clone();
        Cochain::from_fn(module, d + 1, |t| {
            let mut acc = self.module.act(t[0], self.value(&t[1..]));
            let mut merged = vec![0usize; d];
            for k in 1..=d {
                merged[..k - 1].copy_from_slice(&t[..k - 1]);
                merged[k - 1] = g.mul(t[k - 1], t[k]);
                if k < d {
                    merged[k..].copy_from_slice(&t[k + 1..]);
                }
                let term = self.value(&merged);
                acc = if k % 2 == 1 {
                    self.module.sub(&acc, term)
                } else {
                    self.module.add(&acc, term)
                };
            }
            let last = self.value(&t[..d]);
            acc = if (d + 1) % 2 == 1 {
                self.module.sub(&acc, last)
            } else {
                self.module.add(&acc, last)
            };
            acc
        })
    }

    pub fn is_cocycle(&self) -> bool {
        self.cocycle_witness().is_none()
    }

    /// First tuple where `∂c` fails to vanish.
    pub fn cocycle_witness(&self) -> Option<Vec<usize>> {
        let boundary = self.coboundary();
        let p = self.module.group().order();
        let mut tuple = vec![0usize; boundary.degree];
        for (idx, v) in boundary.values.iter().enumerate() {
            if !self.module.is_zero(v) {
                Cochain::<M>::unrank(p, boundary.degree, idx, &mut tuple);
                return Some(tuple);
            }
        }
        None
    }
}

pub type QzCochain = Cochain<TwistedQzModule>;
pub type ScalarCochain = Cochain<TrivialQzModule>;
pub type Pi1Cochain = Cochain<Pi1Module>;

// ---------------------------------------------------------------------------
// Identity-free tuple indexing for the normalized subcomplex
// ---------------------------------------------------------------------------

/// Rank of an identity-free tuple (all entries ≥ 1) among such tuples,
/// in lexicographic order.
pub(crate) fn reduced_rank(p: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &g| acc * (p - 1) + (g - 1))
}

pub(crate) fn reduced_unrank(p: usize, degree: usize, mut idx: usize, tuple: &mut [usize]) {
    for k in (0..degree).rev() {
        tuple[k] = idx % (p - 1) + 1;
        idx /= p - 1;
    }
}

pub(crate) fn reduced_count(p: usize, degree: usize) -> usize {
    if p == 1 {
        // Only the empty tuple in degree zero.
        return if degree == 0 { 1 } else { 0 };
    }
    (p - 1).pow(degree as u32)
}

/// Integer matrix of `∂: C^d_norm → C^{d+1}_norm` for a twisted ℚ/ℤⁿ
/// module, rows and columns indexed by identity-free tuples crossed with
/// coordinates.
fn coboundary_matrix(module: &TwistedQzModule, d: usize) -> IntMat {
    let g = module.group();
    let p = g.order();
    let n = module.rank();
    let rows = reduced_count(p, d + 1) * n;
    let cols = reduced_count(p, d) * n;
    let mut a = IntMat::zero(rows, cols);
    let mut t = vec![0usize; d + 1];
    let mut merged = vec![0usize; d];
    for rt in 0..reduced_count(p, d + 1) {
        reduced_unrank(p, d + 1, rt, &mut t);
        for i in 0..n {
            let row = rt * n + i;
            // g₁·c(g₂,…): coordinate i reads source coordinate ρ(g₁⁻¹)(i).
            if d == 0 || t[1..].iter().all(|&x| x != 0) {
                let j = module.twist.image(g.inv(t[0])).apply(i);
                let col = reduced_rank(p, &t[1..]) * n + j;
                a[(row, col)] += 1;
            }
            for k in 1..=d {
                merged[..k - 1].copy_from_slice(&t[..k - 1]);
                merged[k - 1] = g.mul(t[k - 1], t[k]);
                if k < d {
                    merged[k..].copy_from_slice(&t[k + 1..]);
                }
                if merged.iter().any(|&x| x == 0) {
                    continue;
                }
                let col = reduced_rank(p, &merged) * n + i;
                a[(row, col)] += if k % 2 == 1 { -1 } else { 1 };
            }
            if t[..d].iter().all(|&x| x != 0) {
                let col = reduced_rank(p, &t[..d]) * n + i;
                a[(row, col)] += if (d + 1) % 2 == 1 { -1 } else { 1 };
            }
        }
    }
    a
}

// ---------------------------------------------------------------------------
// Coboundary equations
// ---------------------------------------------------------------------------

/// Solves `∂c = target` for a normalized cochain `c` one degree down.
///
/// Returns `None` when the class of `target` is nonzero.  The target must
/// be a normalized cocycle; values are exact, and the returned solution
/// re-verifies `∂c = target` before being handed out.
pub fn solve_coboundary(target: &QzCochain) -> Result<Option<QzCochain>, CohomError> {
    if target.degree() == 0 {
        return Err(CohomError::DegreeZeroTarget);
    }
    if let Some(position) = target.first_unnormalized() {
        return Err(CohomError::NotNormalized { position });
    }
    if let Some(witness) = target.cocycle_witness() {
        return Err(CohomError::NotACocycle { witness });
    }
    let module = target.module().clone();
    let g = module.group().clone();
    let p = g.order();
    let n = module.rank();
    let d = target.degree() - 1;

    // Modulus M = e·|G| with e the lcm of the target value orders.
    let mut e: u64 = 1;
    for v in target.values() {
        for q in v {
            e = lcm(e, q.order());
        }
    }
    let m = (e as u128) * (p as u128);
    if m > i64::MAX as u128 {
        return Err(CohomError::ModulusOverflow);
    }
    let m = m as i128;

    let matrix = coboundary_matrix(&module, d);
    let mut rhs = Vec::with_capacity(matrix.rows());
    let mut t = vec![0usize; d + 1];
    for rt in 0..reduced_count(p, d + 1) {
        reduced_unrank(p, d + 1, rt, &mut t);
        let v = target.value(&t);
        for q in v.iter().take(n) {
            rhs.push(q.numerator() as i128 * (m / q.order() as i128));
        }
    }

    let sys = ZModSystem { matrix, rhs, modulus: m };
    let Some(x) = sys.solve()? else {
        return Ok(None);
    };

    let solution = Cochain::from_fn(module, d, |tuple| {
        if tuple.iter().any(|&x| x == 0) {
            return vec![QZ::ZERO; n];
        }
        let base = reduced_rank(p, tuple) * n;
        (0..n).map(|i| QZ::frac(x[base + i] as i64, m as u64)).collect()
    });
    debug_assert!(solution.is_normalized());
    assert!(
        solution.coboundary() == *target,
        "solver postcondition violated: ∂c ≠ target"
    );
    Ok(Some(solution))
}

/// Whether `c1` and `c2` differ by a coboundary.
pub fn cohomologous(c1: &QzCochain, c2: &QzCochain) -> Result<bool, CohomError> {
    Ok(solve_coboundary(&c1.sub(c2)?)?.is_some())
}

// ---------------------------------------------------------------------------
// H² representatives
// ---------------------------------------------------------------------------

/// Bounds for exhaustive enumerations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnumLimits {
    pub max_group_order: usize,
    pub max_rank: usize,
    pub max_enumeration: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_group_order: 16, max_rank: 8, max_enumeration: 1 << 16 }
    }
}

/// One normalized 2-cocycle per cohomology class of `H²` with
/// coefficients in the given ℚ/ℤⁿ module.
///
/// Every class has a representative with values in `(1/|G|)ℤ/ℤ` (the
/// cohomology is `|G|`-torsion and the coefficients are divisible), so
/// the kernel of the coboundary matrix mod `|G|` covers all classes;
/// enumerated cocycles are deduplicated up to coboundaries over ℚ/ℤ.
pub fn h2_representatives(
    module: &TwistedQzModule,
    limits: &EnumLimits,
) -> Result<Vec<QzCochain>, CohomError> {
    let p = module.group().order();
    if p > limits.max_group_order {
        return Err(CohomError::TooLarge { size: p, bound: limits.max_group_order });
    }
    if module.rank() > limits.max_rank {
        return Err(CohomError::TooLarge { size: module.rank(), bound: limits.max_rank });
    }
    let n = module.rank();
    let a2 = coboundary_matrix(module, 2);
    let kernel = KernelMod::compute(a2, p as i128)?;
    if kernel.cardinality() > limits.max_enumeration {
        return Err(CohomError::TooLarge {
            size: kernel.cardinality(),
            bound: limits.max_enumeration,
        });
    }

    let mut reps: Vec<QzCochain> = Vec::new();
    for numerators in kernel.elements() {
        let z = Cochain::from_fn(module.clone(), 2, |tuple| {
            if tuple.iter().any(|&x| x == 0) {
                return vec![QZ::ZERO; n];
            }
            let base = reduced_rank(p, tuple) * n;
            (0..n).map(|i| QZ::frac(numerators[base + i] as i64, p as u64)).collect()
        });
        debug_assert!(z.is_cocycle());
        let mut known = false;
        for r in &reps {
            if cohomologous(r, &z)? {
                known = true;
                break;
            }
        }
        if !known {
            reps.push(z);
        }
    }
    // Canonical output order: lexicographic on the flattened values.
    reps.sort_by(|a, b| a.values().cmp(b.values()));
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::Perm;

    fn swap_module(rank: usize) -> TwistedQzModule {
        let g = FiniteGroup::cyclic(2);
        let swap = Perm::new((0..rank).map(|i| rank - 1 - i).collect()).unwrap();
        let rho = PermRep::new(&g, vec![Perm::identity(rank), swap]).unwrap();
        TwistedQzModule::new(g, rho).unwrap()
    }

    /// Independent re-evaluation of the coboundary formula, written as a
    /// literal alternating sum with explicit tuple surgery.
    fn naive_coboundary(c: &QzCochain) -> QzCochain {
        let module = c.module().clone();
        let g = module.group().clone();
        let d = c.degree();
        Cochain::from_fn(module.clone(), d + 1, |t| {
            let mut terms: Vec<(i32, Vec<QZ>)> = Vec::new();
            terms.push((1, module.act(t[0], c.value(&t[1..]))));
            for i in 1..=d {
                let mut args: Vec<usize> = t.to_vec();
                let merged = g.mul(args[i - 1], args[i]);
                args.remove(i);
                args[i - 1] = merged;
                let sign = if i % 2 == 0 { 1 } else { -1 };
                terms.push((sign, c.value(&args).clone()));
            }
            let sign = if (d + 1) % 2 == 0 { 1 } else { -1 };
            terms.push((sign, c.value(&t[..d]).clone()));
            let mut acc = module.zero();
            for (s, v) in terms {
                let v = if s < 0 { module.neg(&v) } else { v };
                acc = module.add(&acc, &v);
            }
            acc
        })
    }

    fn pseudo_random_cochain(module: &TwistedQzModule, degree: usize, seed: u64) -> QzCochain {
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let dens = [2u64, 3, 4, 6];
        Cochain::from_fn(module.clone(), degree, |t| {
            (0..module.rank())
                .map(|_| {
                    if t.iter().any(|&x| x == 0) {
                        QZ::ZERO
                    } else {
                        let d = dens[(next() % 4) as usize];
                        QZ::frac((next() % d) as i64, d)
                    }
                })
                .collect()
        })
    }

    /// The nontrivial 2-cocycle `z((a₁,a₂),(b₁,b₂)) = a₁·b₂/2` on the
    /// Klein four-group (elements indexed as pairs, lexicographically).
    pub(crate) fn klein_nontrivial_cocycle() -> QzCochain {
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let module = TwistedQzModule::untwisted(v4, 1);
        Cochain::from_fn(module, 2, |t| {
            let a1 = t[0] / 2;
            let b2 = t[1] % 2;
            vec![QZ::frac((a1 * b2) as i64, 2)]
        })
    }

    #[test]
    fn zero_cochain_has_zero_coboundary() {
        let module = swap_module(2);
        let z = Cochain::zero(module, 1);
        assert!(z.coboundary().is_zero());
    }

    #[test]
    fn coboundary_squares_to_zero() {
        let module = swap_module(2);
        for degree in 0..=2 {
            for seed in 1..6 {
                let c = pseudo_random_cochain(&module, degree, seed);
                assert!(c.coboundary().coboundary().is_zero());
            }
        }
    }

    #[test]
    fn coboundary_matches_naive_reimplementation() {
        let module = swap_module(2);
        for degree in 1..=2 {
            for seed in 1..8 {
                let c = pseudo_random_cochain(&module, degree, seed);
                assert_eq!(c.coboundary(), naive_coboundary(&c));
            }
        }
        // Degree 1 over ℤ/2 with trivial twist: hand expansion.
        let m1 = TwistedQzModule::untwisted(FiniteGroup::cyclic(2), 1);
        let c = Cochain::normalized(
            m1.clone(),
            1,
            vec![vec![QZ::ZERO], vec![QZ::frac(1, 2)]],
        )
        .unwrap();
        let dc = c.coboundary();
        // (∂c)(1,1) = 1·c(1) − c(1·1) + c(1) = 1/2 − 0 + 1/2 = 0.
        assert_eq!(dc.value(&[1, 1]), &vec![QZ::ZERO]);
        assert_eq!(dc, naive_coboundary(&c));
    }

    #[test]
    fn klein_cocycle_is_closed_and_nontrivial() {
        let z = klein_nontrivial_cocycle();
        assert!(z.is_normalized());
        assert!(z.is_cocycle());
        // Exhaustive oracle: no normalized 1-cochain with values in
        // (1/8)ℤ/ℤ has ∂b = z; 8 = e·|G| is the solver's completeness
        // modulus, so searching it is conclusive.
        let module = z.module().clone();
        let mut found = false;
        for v1 in 0..8u64 {
            for v2 in 0..8u64 {
                for v3 in 0..8u64 {
                    let b = Cochain::new(
                        module.clone(),
                        1,
                        vec![
                            vec![QZ::ZERO],
                            vec![QZ::frac(v1 as i64, 8)],
                            vec![QZ::frac(v2 as i64, 8)],
                            vec![QZ::frac(v3 as i64, 8)],
                        ],
                    )
                    .unwrap();
                    if b.coboundary() == z {
                        found = true;
                    }
                }
            }
        }
        assert!(!found);
        assert_eq!(solve_coboundary(&z).unwrap(), None);
    }

    #[test]
    fn solve_recovers_coboundaries() {
        let module = swap_module(2);
        for seed in 1..10 {
            let b = pseudo_random_cochain(&module, 1, seed);
            let target = b.coboundary();
            let c = solve_coboundary(&target).unwrap().expect("solvable by construction");
            assert_eq!(c.coboundary(), target);
        }
        // Zero target solved by zero.
        let target = Cochain::zero(module, 2);
        let c = solve_coboundary(&target).unwrap().unwrap();
        assert!(c.coboundary().is_zero());
    }

    #[test]
    fn solve_rejects_non_cocycles() {
        // A normalized 2-cochain over ℤ/3 that is not closed, found by
        // rejection.
        let module = TwistedQzModule::untwisted(FiniteGroup::cyclic(3), 1);
        let mut rejected = None;
        for seed in 1..50 {
            let c = pseudo_random_cochain(&module, 2, seed);
            if !c.is_cocycle() {
                rejected = Some(c);
                break;
            }
        }
        let c = rejected.expect("rejection sampling found a non-cocycle");
        assert!(matches!(
            solve_coboundary(&c),
            Err(CohomError::NotACocycle { .. })
        ));
    }

    #[test]
    fn cohomologous_is_an_equivalence_on_samples() {
        let module = swap_module(2);
        let mut cocycles = Vec::new();
        for seed in 1..12 {
            let b = pseudo_random_cochain(&module, 1, seed);
            cocycles.push(b.coboundary());
        }
        cocycles.push(klein_to_swap_zero(&module));
        for c in &cocycles {
            assert!(cohomologous(c, c).unwrap());
        }
        for a in &cocycles {
            for b in &cocycles {
                assert_eq!(cohomologous(a, b).unwrap(), cohomologous(b, a).unwrap());
            }
        }
    }

    fn klein_to_swap_zero(module: &TwistedQzModule) -> QzCochain {
        Cochain::zero(module.clone(), 2)
    }

    #[test]
    fn h2_of_small_groups() {
        let limits = EnumLimits::default();

        let trivial = TwistedQzModule::untwisted(FiniteGroup::trivial(), 1);
        let reps = h2_representatives(&trivial, &limits).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_zero());

        let z2 = TwistedQzModule::untwisted(FiniteGroup::cyclic(2), 1);
        let reps = h2_representatives(&z2, &limits).unwrap();
        assert_eq!(reps.len(), 1);

        let v4 = TwistedQzModule::untwisted(
            FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
            1,
        );
        let reps = h2_representatives(&v4, &limits).unwrap();
        assert_eq!(reps.len(), 2);
        for (i, a) in reps.iter().enumerate() {
            assert!(a.is_normalized() && a.is_cocycle());
            for b in reps.iter().skip(i + 1) {
                assert!(!cohomologous(a, b).unwrap());
            }
        }
        // The nontrivial class is the one carried by the Klein cocycle.
        let z = klein_nontrivial_cocycle();
        assert!(reps.iter().any(|r| cohomologous(r, &z).unwrap()));
    }

    #[test]
    fn h2_respects_bounds() {
        let module = TwistedQzModule::untwisted(FiniteGroup::cyclic(2), 1);
        let limits = EnumLimits { max_group_order: 1, ..EnumLimits::default() };
        assert!(matches!(
            h2_representatives(&module, &limits),
            Err(CohomError::TooLarge { .. })
        ));
    }
}
