//! Exact scalars in ℚ/ℤ, finite abelian groups in cyclic-product form,
//! their dual character groups, and induced actions on characters.
//!
//! The multiplicative group of roots of unity in an algebraically closed
//! field of characteristic zero is isomorphic to ℚ/ℤ written additively;
//! every scalar this library produces is torsion, so `QZ` is an exact
//! stand-in for the nonzero field values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grp::{FiniteGroup, GroupError, Perm};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("malformed ℚ/ℤ literal {0:?}, expected \"num/den\"")]
    BadLiteral(String),
    #[error("cyclic orders must all be ≥ 1")]
    BadCyclicOrder,
    #[error("exponent tuple has length {got}, group has {expected} cyclic factors")]
    BadTupleLength { expected: usize, got: usize },
    #[error("exponent {value} out of range for cyclic factor of order {order}")]
    ExponentOutOfRange { value: u64, order: u64 },
    #[error("element index {index} out of range 0..{order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("permutation for element {element} is not an automorphism (breaks at pair ({u},{v}))")]
    NotAnAutomorphism { element: usize, u: usize, v: usize },
    #[error("action law fails for pair ({g},{h})")]
    NotALeftAction { g: usize, h: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

// ---------------------------------------------------------------------------
// ℚ/ℤ
// ---------------------------------------------------------------------------

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// An element of ℚ/ℤ in canonical reduced form: `0 ≤ num < den`,
/// `gcd(num, den) = 1`, with zero stored as `0/1`.
///
/// Addition here models multiplication of roots of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct QZ {
    num: u64,
    den: u64,
}

impl QZ {
    pub const ZERO: QZ = QZ { num: 0, den: 1 };

    /// `num/den` reduced into `[0, 1)`; `den` must be positive.
    pub fn new(num: i64, den: u64) -> Result<Self, CharError> {
        if den == 0 {
            return Err(CharError::ZeroDenominator);
        }
        let d = den as i64;
        let n = num.rem_euclid(d) as u64;
        let g = gcd(n, den);
        let (num, den) = (n / g, den / g);
        Ok(QZ { num, den })
    }

    /// Shorthand for known-good literals in tests and constructions.
    pub fn frac(num: i64, den: u64) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn add(self, other: QZ) -> QZ {
        let den = lcm(self.den, other.den);
        let num =
            (self.num as u128 * (den / self.den) as u128 + other.num as u128 * (den / other.den) as u128)
                % den as u128;
        let g = gcd(num as u64, den);
        QZ { num: num as u64 / g, den: den / g }
    }

    pub fn neg(self) -> QZ {
        if self.num == 0 {
            QZ::ZERO
        } else {
            QZ { num: self.den - self.num, den: self.den }
        }
    }

    pub fn sub(self, other: QZ) -> QZ {
        self.add(other.neg())
    }

    pub fn scale(self, k: i64) -> QZ {
        let kk = k.rem_euclid(self.den as i64) as u128;
        let num = (self.num as u128 * kk) % self.den as u128;
        let g = gcd(num as u64, self.den);
        QZ { num: num as u64 / g, den: self.den / g }
    }

    /// Additive order; equals the canonical denominator.
    pub fn order(&self) -> u64 {
        self.den
    }
}

impl std::ops::Add for QZ {
    type Output = QZ;
    fn add(self, other: QZ) -> QZ {
        QZ::add(self, other)
    }
}

impl std::ops::Sub for QZ {
    type Output = QZ;
    fn sub(self, other: QZ) -> QZ {
        QZ::sub(self, other)
    }
}

impl std::ops::Neg for QZ {
    type Output = QZ;
    fn neg(self) -> QZ {
        QZ::neg(self)
    }
}

impl PartialOrd for QZ {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QZ {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Compare as rationals in [0, 1).
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for QZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for QZ {
    type Err = CharError;

    fn from_str(s: &str) -> Result<Self, CharError> {
        let (n, d) = s.split_once('/').ok_or_else(|| CharError::BadLiteral(s.to_string()))?;
        let num: u64 = n.parse().map_err(|_| CharError::BadLiteral(s.to_string()))?;
        let den: u64 = d.parse().map_err(|_| CharError::BadLiteral(s.to_string()))?;
        if den == 0 || num >= den && num != 0 || gcd(num.max(1), den) != 1 {
            // Wire values must already be canonical: this keeps the
            // serialized contract bit-exact in both directions.
            return Err(CharError::BadLiteral(s.to_string()));
        }
        if num == 0 && den != 1 {
            return Err(CharError::BadLiteral(s.to_string()));
        }
        Ok(QZ { num, den })
    }
}

impl From<QZ> for String {
    fn from(q: QZ) -> String {
        q.to_string()
    }
}

impl TryFrom<String> for QZ {
    type Error = CharError;
    fn try_from(s: String) -> Result<Self, CharError> {
        s.parse()
    }
}

// ---------------------------------------------------------------------------
// Finite abelian groups as cyclic products
// ---------------------------------------------------------------------------

/// A finite abelian group `ℤ/m₁ × … × ℤ/m_r`.
///
/// Elements are exponent tuples enumerated lexicographically (leftmost
/// coordinate most significant), so index 0 is the zero tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAbelian", into = "RawAbelian")]
pub struct AbelianGroup {
    cyclic_orders: Vec<u64>,
    strides: Vec<usize>,
    count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawAbelian {
    cyclic: Vec<u64>,
}

impl TryFrom<RawAbelian> for AbelianGroup {
    type Error = CharError;
    fn try_from(raw: RawAbelian) -> Result<Self, CharError> {
        AbelianGroup::new(raw.cyclic)
    }
}

impl From<AbelianGroup> for RawAbelian {
    fn from(a: AbelianGroup) -> RawAbelian {
        RawAbelian { cyclic: a.cyclic_orders }
    }
}

impl AbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self, CharError> {
        if cyclic_orders.iter().any(|&m| m == 0) {
            return Err(CharError::BadCyclicOrder);
        }
        let mut strides = vec![1usize; cyclic_orders.len()];
        for j in (0..cyclic_orders.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * cyclic_orders[j + 1] as usize;
        }
        let count = cyclic_orders.iter().map(|&m| m as usize).product();
        Ok(AbelianGroup { cyclic_orders, strides, count })
    }

    pub fn trivial() -> Self {
        AbelianGroup::new(vec![1]).unwrap()
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    /// Number of elements `q = Π mⱼ`.
    pub fn order(&self) -> usize {
        self.count
    }

    pub fn exponent(&self) -> u64 {
        self.cyclic_orders.iter().copied().fold(1, lcm)
    }

    pub fn tuple_of(&self, index: usize) -> Vec<u64> {
        assert!(index < self.count);
        self.cyclic_orders
            .iter()
            .zip(&self.strides)
            .map(|(&m, &s)| (index / s % m as usize) as u64)
            .collect()
    }

    pub fn index_of(&self, tuple: &[u64]) -> Result<usize, CharError> {
        if tuple.len() != self.cyclic_orders.len() {
            return Err(CharError::BadTupleLength {
                expected: self.cyclic_orders.len(),
                got: tuple.len(),
            });
        }
        let mut index = 0;
        for ((&u, &m), &s) in tuple.iter().zip(&self.cyclic_orders).zip(&self.strides) {
            if u >= m {
                return Err(CharError::ExponentOutOfRange { value: u, order: m });
            }
            index += u as usize * s;
        }
        Ok(index)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.tuple_of(a), self.tuple_of(b));
        let sum: Vec<u64> = ta
            .iter()
            .zip(&tb)
            .zip(&self.cyclic_orders)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        self.index_of(&sum).unwrap()
    }

    pub fn neg(&self, a: usize) -> usize {
        let t: Vec<u64> =
            self.tuple_of(a).iter().zip(&self.cyclic_orders).map(|(&x, &m)| (m - x) % m).collect();
        self.index_of(&t).unwrap()
    }

    /// Index of the `j`-th standard generator (zero if that factor is
    /// trivial).
    pub fn generator(&self, j: usize) -> usize {
        if self.cyclic_orders[j] == 1 {
            0
        } else {
            self.strides[j]
        }
    }
}

// ---------------------------------------------------------------------------
// Characters
// ---------------------------------------------------------------------------

/// A character `χ: A → ℚ/ℤ` of a cyclic-product group, stored by its
/// exponent tuple: `χ(u) = Σⱼ aⱼuⱼ/mⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character {
    exps: Vec<u64>,
}

impl Character {
    pub fn new(group: &AbelianGroup, exps: Vec<u64>) -> Result<Self, CharError> {
        if exps.len() != group.cyclic_orders().len() {
            return Err(CharError::BadTupleLength {
                expected: group.cyclic_orders().len(),
                got: exps.len(),
            });
        }
        for (&a, &m) in exps.iter().zip(group.cyclic_orders()) {
            if a >= m {
                return Err(CharError::ExponentOutOfRange { value: a, order: m });
            }
        }
        Ok(Character { exps })
    }

    pub fn trivial(group: &AbelianGroup) -> Self {
        Character { exps: vec![0; group.cyclic_orders().len()] }
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    /// Exact value `χ(u)` at the element with index `u`.
    pub fn value(&self, group: &AbelianGroup, u: usize) -> QZ {
        let tuple = group.tuple_of(u);
        let mut acc = QZ::ZERO;
        for ((&a, &x), &m) in self.exps.iter().zip(&tuple).zip(group.cyclic_orders()) {
            acc = acc.add(QZ::new((a as i64) * (x as i64), m).unwrap());
        }
        acc
    }

    /// Recovers the unique character whose value at each standard
    /// generator of `group` is given by `values`.
    pub fn from_generator_values(group: &AbelianGroup, values: &[QZ]) -> Result<Self, CharError> {
        let orders = group.cyclic_orders();
        if values.len() != orders.len() {
            return Err(CharError::BadTupleLength { expected: orders.len(), got: values.len() });
        }
        let mut exps = Vec::with_capacity(orders.len());
        for (&m, v) in orders.iter().zip(values) {
            // v = a/m in lowest terms means den | m; a = num·(m/den).
            if m % v.denominator() != 0 {
                return Err(CharError::ExponentOutOfRange { value: v.numerator(), order: m });
            }
            exps.push(v.numerator() * (m / v.denominator()) % m.max(1));
        }
        Ok(Character { exps })
    }
}

/// All `|A|` characters of `A` in lexicographic exponent order; index 0
/// is the trivial character.  The indexing coincides with the element
/// indexing of `A` itself.
pub fn dual_group(a: &AbelianGroup) -> Vec<Character> {
    (0..a.order()).map(|i| Character { exps: a.tuple_of(i) }).collect()
}

// ---------------------------------------------------------------------------
// π₀-actions on π₁ and on characters
// ---------------------------------------------------------------------------

/// A left action of a finite group on a finite abelian group by
/// automorphisms: one permutation of the element set per group element,
/// with `perm[gh] = perm[g] ∘ perm[h]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAction", into = "RawAction")]
pub struct Pi1Action {
    target_orders: Vec<u64>,
    perms: Vec<Perm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawAction {
    perms: Vec<Vec<usize>>,
}

impl TryFrom<RawAction> for Pi1Action {
    type Error = CharError;
    fn try_from(raw: RawAction) -> Result<Self, CharError> {
        // Wire form carries no group data; structural checks happen when
        // the action is attached to (pi0, pi1) in `Pi1Action::new`.
        let perms = raw
            .perms
            .into_iter()
            .map(Perm::new)
            .collect::<Result<Vec<_>, _>>()
            .map_err(CharError::Group)?;
        Ok(Pi1Action { target_orders: Vec::new(), perms })
    }
}

impl From<Pi1Action> for RawAction {
    fn from(a: Pi1Action) -> RawAction {
        RawAction { perms: a.perms.into_iter().map(|p| p.images().to_vec()).collect() }
    }
}

impl Pi1Action {
    pub fn new(pi0: &FiniteGroup, pi1: &AbelianGroup, perms: Vec<Perm>) -> Result<Self, CharError> {
        if perms.len() != pi0.order() {
            return Err(CharError::Group(GroupError::BadShape {
                order: pi0.order(),
                rows: perms.len(),
            }));
        }
        for (g, p) in perms.iter().enumerate() {
            if p.degree() != pi1.order() {
                return Err(CharError::Group(GroupError::DegreeMismatch {
                    expected: pi1.order(),
                    got: p.degree(),
                }));
            }
            // Additive automorphism: fixes zero, preserves addition.
            for u in 0..pi1.order() {
                for v in 0..=u {
                    if p.apply(pi1.add(u, v)) != pi1.add(p.apply(u), p.apply(v)) {
                        return Err(CharError::NotAnAutomorphism { element: g, u, v });
                    }
                }
            }
        }
        if !perms[0].is_identity() {
            return Err(CharError::NotALeftAction { g: 0, h: 0 });
        }
        for g in pi0.elements() {
            for h in pi0.elements() {
                if perms[pi0.mul(g, h)] != perms[g].after(&perms[h]) {
                    return Err(CharError::NotALeftAction { g, h });
                }
            }
        }
        Ok(Pi1Action { target_orders: pi1.cyclic_orders().to_vec(), perms })
    }

    pub fn trivial(pi0: &FiniteGroup, pi1: &AbelianGroup) -> Self {
        Pi1Action {
            target_orders: pi1.cyclic_orders().to_vec(),
            perms: vec![Perm::identity(pi1.order()); pi0.order()],
        }
    }

    /// Revalidates a deserialized action against its groups.
    pub fn attach(self, pi0: &FiniteGroup, pi1: &AbelianGroup) -> Result<Self, CharError> {
        Pi1Action::new(pi0, pi1, self.perms)
    }

    /// `g · u` for a π₁ element index `u`.
    pub fn act(&self, g: usize, u: usize) -> usize {
        self.perms[g].apply(u)
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    pub fn is_trivial(&self) -> bool {
        self.perms.iter().all(Perm::is_identity)
    }
}

/// All additive automorphisms of `a`, as permutations of its element
/// set, in lexicographic image order (identity first).
pub fn automorphism_perms(a: &AbelianGroup) -> Vec<Perm> {
    use itertools::Itertools;
    let q = a.order();
    (0..q)
        .permutations(q)
        .filter_map(|im| {
            if im[0] != 0 {
                return None;
            }
            let ok = (0..q).all(|u| (0..=u).all(|v| im[a.add(u, v)] == a.add(im[u], im[v])));
            ok.then(|| Perm::new(im).unwrap())
        })
        .collect()
}

/// The induced left action on characters: `(g·χ)(u) = χ(g⁻¹·u)`.
///
/// The result is computed exactly by evaluating on the standard
/// generators and solving for the exponent tuple.
pub fn act_on_character(
    action: &Pi1Action,
    pi0: &FiniteGroup,
    pi1: &AbelianGroup,
    g: usize,
    chi: &Character,
) -> Result<Character, CharError> {
    if action.perms.len() != pi0.order()
        || action.perms.first().map(Perm::degree) != Some(pi1.order())
        || chi.exps().len() != pi1.cyclic_orders().len()
    {
        return Err(CharError::GroupMismatch);
    }
    let ginv = pi0.inv(g);
    let values: Vec<QZ> = (0..pi1.cyclic_orders().len())
        .map(|j| chi.value(pi1, action.act(ginv, pi1.generator(j))))
        .collect();
    Character::from_generator_values(pi1, &values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qz_arithmetic() {
        assert_eq!(QZ::frac(1, 2) + QZ::frac(2, 3), QZ::frac(1, 6));
        assert_eq!(-QZ::frac(1, 3), QZ::frac(2, 3));
        assert_eq!(QZ::ZERO.order(), 1);
        assert_eq!(QZ::frac(2, 4), QZ::frac(1, 2));
        assert_eq!(QZ::frac(-1, 3), QZ::frac(2, 3));
        assert_eq!(QZ::frac(1, 6).scale(3), QZ::frac(1, 2));
        assert_eq!(QZ::frac(1, 6).scale(-1), QZ::frac(5, 6));
        assert_eq!(QZ::frac(3, 4).order(), 4);
    }

    #[test]
    fn qz_wire_form_is_canonical() {
        assert_eq!("2/3".parse::<QZ>().unwrap(), QZ::frac(2, 3));
        assert_eq!(QZ::ZERO.to_string(), "0/1");
        assert!("2/4".parse::<QZ>().is_err());
        assert!("3/3".parse::<QZ>().is_err());
        assert!("0/2".parse::<QZ>().is_err());
        assert!("1".parse::<QZ>().is_err());
    }

    #[test]
    fn dual_group_sizes() {
        let z3 = AbelianGroup::new(vec![3]).unwrap();
        let chars = dual_group(&z3);
        assert_eq!(chars.len(), 3);
        assert_eq!(chars[1].value(&z3, 1), QZ::frac(1, 3));

        let v4 = AbelianGroup::new(vec![2, 2]).unwrap();
        let chars = dual_group(&v4);
        assert_eq!(chars.len(), 4);
        for c in &chars {
            for u in 0..4 {
                let v = c.value(&v4, u);
                assert!(v.order() <= 2);
            }
        }

        let triv = AbelianGroup::trivial();
        assert_eq!(dual_group(&triv).len(), 1);
    }

    #[test]
    fn characters_are_homomorphisms_and_distinct() {
        let a = AbelianGroup::new(vec![2, 4]).unwrap();
        let chars = dual_group(&a);
        assert_eq!(chars.len(), a.order());
        for c in &chars {
            for u in 0..a.order() {
                for v in 0..a.order() {
                    assert_eq!(
                        c.value(&a, a.add(u, v)),
                        c.value(&a, u) + c.value(&a, v)
                    );
                }
            }
        }
        // Pairwise distinct as value functions.
        for (i, ci) in chars.iter().enumerate() {
            for cj in chars.iter().skip(i + 1) {
                assert!((0..a.order()).any(|u| ci.value(&a, u) != cj.value(&a, u)));
            }
        }
    }

    #[test]
    fn trivial_action_fixes_characters() {
        let pi0 = FiniteGroup::cyclic(3);
        let pi1 = AbelianGroup::new(vec![4]).unwrap();
        let act = Pi1Action::trivial(&pi0, &pi1);
        for chi in dual_group(&pi1) {
            for g in pi0.elements() {
                assert_eq!(act_on_character(&act, &pi0, &pi1, g, &chi).unwrap(), chi);
            }
        }
    }

    /// ℤ/2 acting on ℤ/m by negation.
    pub(crate) fn negation_action(pi1: &AbelianGroup) -> (FiniteGroup, Pi1Action) {
        let pi0 = FiniteGroup::cyclic(2);
        let neg = Perm::new((0..pi1.order()).map(|u| pi1.neg(u)).collect()).unwrap();
        let act = Pi1Action::new(&pi0, pi1, vec![Perm::identity(pi1.order()), neg]).unwrap();
        (pi0, act)
    }

    #[test]
    fn negation_action_on_z3_characters() {
        let pi1 = AbelianGroup::new(vec![3]).unwrap();
        let (pi0, act) = negation_action(&pi1);
        let chi = Character::new(&pi1, vec![1]).unwrap();
        let moved = act_on_character(&act, &pi0, &pi1, 1, &chi).unwrap();
        assert_eq!(moved.exps(), &[2]);
        // Identity leaves characters alone.
        assert_eq!(act_on_character(&act, &pi0, &pi1, 0, &chi).unwrap(), chi);
    }

    #[test]
    fn character_action_is_a_left_action() {
        let pi1 = AbelianGroup::new(vec![4]).unwrap();
        let (pi0, act) = negation_action(&pi1);
        for chi in dual_group(&pi1) {
            assert_eq!(act_on_character(&act, &pi0, &pi1, 0, &chi).unwrap(), chi);
            for g in pi0.elements() {
                for h in pi0.elements() {
                    let gh = pi0.mul(g, h);
                    let lhs = act_on_character(&act, &pi0, &pi1, gh, &chi).unwrap();
                    let inner = act_on_character(&act, &pi0, &pi1, h, &chi).unwrap();
                    let rhs = act_on_character(&act, &pi0, &pi1, g, &inner).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn action_validation_rejects_non_automorphisms() {
        let pi0 = FiniteGroup::cyclic(2);
        let pi1 = AbelianGroup::new(vec![3]).unwrap();
        // Swapping 0 and 1 does not fix zero.
        let bad = Perm::new(vec![1, 0, 2]).unwrap();
        assert!(matches!(
            Pi1Action::new(&pi0, &pi1, vec![Perm::identity(3), bad]),
            Err(CharError::NotAnAutomorphism { .. })
        ));
    }
}
