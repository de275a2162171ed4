//! Finite groups as multiplication tables, permutations, permutation
//! representations, and right group actions with orbit/stabilizer data.
//!
//! A group of order `p` is stored as a dense `p × p` table of element
//! indices with the identity at index 0.  All procedures are exhaustive
//! over elements, so validation is decidable: identity and cancellation
//! laws are always checked, associativity is checked for all triples up
//! to a configurable order bound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Orders up to this bound get the full `O(p³)` associativity check by
/// default; larger tables must be constructed with an explicit override.
pub const DEFAULT_ASSOC_BOUND: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("table has {rows} rows for order {order}")]
    BadShape { order: usize, rows: usize },
    #[error("table entry {value} at ({i},{j}) out of range 0..{order}")]
    EntryOutOfRange { i: usize, j: usize, value: usize, order: usize },
    #[error("identity law fails at index {index}: element 0 is not a two-sided unit")]
    IdentityLaw { index: usize },
    #[error("row {index} of the table is not a permutation")]
    RowNotPermutation { index: usize },
    #[error("column {index} of the table is not a permutation")]
    ColumnNotPermutation { index: usize },
    #[error("associativity fails at triple ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("order {order} exceeds the associativity check bound {bound}; pass an explicit bound to override")]
    TooLarge { order: usize, bound: usize },
    #[error("element index {index} out of range 0..{order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("element set is not closed under multiplication: {a}*{b} = {product} is missing")]
    NotClosed { a: usize, b: usize, product: usize },
    #[error("subgroup element list must contain the identity")]
    MissingIdentity,
    #[error("permutation images are not a bijection of 0..{n}")]
    NotAPermutation { n: usize },
    #[error("permutation degree {got} does not match expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("map is not a homomorphism: images of ({i},{j}) disagree with image of product")]
    NotAHomomorphism { i: usize, j: usize },
    #[error("action law fails for pair ({g},{h})")]
    NotAnAction { g: usize, h: usize },
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

/// A permutation of `{0, …, n−1}`, stored by its image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Validates that `images` is a bijection of `{0, …, n−1}`.
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotAPermutation { n });
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Functional composition `self ∘ other`: applies `other` first.
    pub fn after(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    /// Diagrammatic composition: applies `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        other.after(self)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }
}

// ---------------------------------------------------------------------------
// Finite groups
// ---------------------------------------------------------------------------

/// A finite group given by its full multiplication table.
///
/// `table[i][j]` is the index of `gᵢ · gⱼ`; element 0 is the identity.
/// The table is a Latin square with unit row/column checks done at
/// construction, and an exhaustive associativity check up to
/// [`DEFAULT_ASSOC_BOUND`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroup", into = "RawGroup")]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>, // row-major, order × order
    inverse: Vec<usize>,
}

/// Wire form of a group file: `{"order": p, "table": [[…]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawGroup {
    order: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<RawGroup> for FiniteGroup {
    type Error = GroupError;

    fn try_from(raw: RawGroup) -> Result<Self, GroupError> {
        if raw.table.len() != raw.order {
            return Err(GroupError::BadShape { order: raw.order, rows: raw.table.len() });
        }
        FiniteGroup::from_table(raw.table)
    }
}

impl From<FiniteGroup> for RawGroup {
    fn from(g: FiniteGroup) -> RawGroup {
        RawGroup {
            order: g.order,
            table: (0..g.order).map(|i| g.table[i * g.order..(i + 1) * g.order].to_vec()).collect(),
        }
    }
}

impl FiniteGroup {
    /// Builds and validates a group from a nested multiplication table.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::from_table_with_bound(table, DEFAULT_ASSOC_BOUND)
    }

    /// Like [`FiniteGroup::from_table`] with an explicit associativity
    /// check bound.
    pub fn from_table_with_bound(table: Vec<Vec<usize>>, bound: usize) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if order > bound {
            return Err(GroupError::TooLarge { order, bound });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::BadShape { order, rows: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::EntryOutOfRange { i, j, value: v, order });
                }
                flat.push(v);
            }
        }
        // Identity law: table[0][j] = j and table[i][0] = i.
        for j in 0..order {
            if flat[j] != j || flat[j * order] != j {
                return Err(GroupError::IdentityLaw { index: j });
            }
        }
        // Cancellation: every row and column is a permutation.
        for i in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for j in 0..order {
                let r = flat[i * order + j];
                let c = flat[j * order + i];
                if seen_row[r] {
                    return Err(GroupError::RowNotPermutation { index: i });
                }
                if seen_col[c] {
                    return Err(GroupError::ColumnNotPermutation { index: i });
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        // Associativity, exhaustive over all triples.
        for i in 0..order {
            for j in 0..order {
                let ij = flat[i * order + j];
                for k in 0..order {
                    if flat[ij * order + k] != flat[i * order + flat[j * order + k]] {
                        return Err(GroupError::NotAssociative { i, j, k });
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for i in 0..order {
            for j in 0..order {
                if flat[i * order + j] == 0 {
                    inverse[i] = j;
                }
            }
        }
        Ok(FiniteGroup { order, table: flat, inverse })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, table: vec![0], inverse: vec![0] }
    }

    /// The cyclic group `ℤ/m` with addition mod `m`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1);
        let mut table = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = (i + j) % m;
            }
        }
        let inverse = (0..m).map(|i| (m - i) % m).collect();
        FiniteGroup { order: m, table, inverse }
    }

    /// Direct product, indexed lexicographically with `other` minor.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (p, q) = (self.order, other.order);
        let order = p * q;
        let mut table = vec![0; order * order];
        for a in 0..p {
            for b in 0..q {
                for c in 0..p {
                    for d in 0..q {
                        let i = a * q + b;
                        let j = c * q + d;
                        table[i * order + j] = self.mul(a, c) * q + other.mul(b, d);
                    }
                }
            }
        }
        let inverse = (0..order).map(|i| self.inv(i / q) * q + other.inv(i % q)).collect();
        FiniteGroup { order, table, inverse }
    }

    /// The symmetric group on `n` letters, elements enumerated in
    /// lexicographic image order (identity first).
    pub fn symmetric(n: usize) -> Self {
        use itertools::Itertools;
        let perms: Vec<Perm> =
            (0..n).permutations(n).map(|im| Perm { images: im }).collect();
        let perms = if perms.is_empty() { vec![Perm::identity(0)] } else { perms };
        let index_of = |p: &Perm| perms.iter().position(|q| q == p).unwrap();
        let order = perms.len();
        let mut table = vec![0; order * order];
        for (i, a) in perms.iter().enumerate() {
            for (j, b) in perms.iter().enumerate() {
                // Product g·h acts as h after g is *not* the table we want:
                // we take σ·τ = σ∘τ, matching ρ(gh) = ρ(g)∘ρ(h).
                table[i * order + j] = index_of(&a.after(b));
            }
        }
        let inverse = perms.iter().map(|p| index_of(&p.inverse())).collect();
        FiniteGroup { order, table, inverse }
    }

    /// The dihedral group of order `2m` (symmetries of the `m`-gon);
    /// element `i < m` is the rotation `rⁱ`, element `m + i` is `rⁱs`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1);
        let order = 2 * m;
        let idx = |rot: usize, flip: bool| if flip { m + rot } else { rot };
        let mut table = vec![0; order * order];
        for i in 0..order {
            let (r1, f1) = (i % m, i >= m);
            for j in 0..order {
                let (r2, f2) = (j % m, j >= m);
                // (r^a s^e)(r^b s^f) = r^(a + b or a − b) s^(e xor f)
                let rot = if f1 { (r1 + m - r2) % m } else { (r1 + r2) % m };
                table[i * order + j] = idx(rot, f1 ^ f2);
            }
        }
        let mut inverse = vec![0; order];
        for i in 0..order {
            for j in 0..order {
                if table[i * order + j] == 0 {
                    inverse[i] = j;
                }
            }
        }
        FiniteGroup { order, table, inverse }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of `gᵢ · gⱼ`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Conjugate `h g h⁻¹`.
    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// A greedy generating set: scans elements in index order and keeps
    /// those outside the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = vec![false; self.order];
        generated[0] = true;
        let mut count = 1;
        for g in 1..self.order {
            if generated[g] {
                continue;
            }
            gens.push(g);
            // Close under multiplication by the new generator set.
            loop {
                let mut grew = false;
                for a in 0..self.order {
                    if !generated[a] {
                        continue;
                    }
                    for &b in &gens {
                        let ab = self.mul(a, b);
                        if !generated[ab] {
                            generated[ab] = true;
                            count += 1;
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            if count == self.order {
                break;
            }
        }
        gens
    }

    /// Writes every element as a product of generators: returns, for each
    /// element, a word over indices into `gens` (empty for the identity).
    pub fn factorize_over(&self, gens: &[usize]) -> Option<Vec<Vec<usize>>> {
        let mut words: Vec<Option<Vec<usize>>> = vec![None; self.order];
        words[0] = Some(Vec::new());
        let mut frontier = vec![0usize];
        while let Some(a) = frontier.pop() {
            for (gi, &g) in gens.iter().enumerate() {
                let ag = self.mul(a, g);
                if words[ag].is_none() {
                    let mut w = words[a].clone().unwrap();
                    w.push(gi);
                    words[ag] = Some(w);
                    frontier.push(ag);
                }
            }
        }
        words.into_iter().collect()
    }
}

// ---------------------------------------------------------------------------
// Conjugacy classes and centralizers
// ---------------------------------------------------------------------------

/// A conjugacy class, represented by its least element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClass {
    pub representative: usize,
    pub elements: Vec<usize>,
}

/// Partitions the elements of `g` into conjugacy classes, each sorted and
/// represented by its least element; classes are listed by representative.
pub fn conjugacy_classes(g: &FiniteGroup) -> Vec<ConjClass> {
    let mut assigned = vec![false; g.order()];
    let mut classes = Vec::new();
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut elems: Vec<usize> = g.elements().map(|h| g.conjugate(h, x)).collect();
        elems.sort_unstable();
        elems.dedup();
        for &y in &elems {
            assigned[y] = true;
        }
        classes.push(ConjClass { representative: elems[0], elements: elems });
    }
    classes
}

/// The centralizer `{h : hg = gh}`, sorted.
pub fn centralizer(g: &FiniteGroup, x: usize) -> Result<Vec<usize>, GroupError> {
    if x >= g.order() {
        return Err(GroupError::IndexOutOfRange { index: x, order: g.order() });
    }
    Ok(g.elements().filter(|&h| g.mul(h, x) == g.mul(x, h)).collect())
}

// ---------------------------------------------------------------------------
// Permutation representations
// ---------------------------------------------------------------------------

/// A homomorphism `G → S_n`, one permutation per group element.
///
/// The homomorphism law uses functional composition:
/// `ρ(gh) = ρ(g) ∘ ρ(h)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermRep {
    degree: usize,
    images: Vec<Perm>,
}

impl PermRep {
    pub fn new(group: &FiniteGroup, images: Vec<Perm>) -> Result<Self, GroupError> {
        if images.len() != group.order() {
            return Err(GroupError::BadShape { order: group.order(), rows: images.len() });
        }
        let degree = images.first().map_or(0, Perm::degree);
        for p in &images {
            if p.degree() != degree {
                return Err(GroupError::DegreeMismatch { expected: degree, got: p.degree() });
            }
        }
        if !images[0].is_identity() {
            return Err(GroupError::NotAHomomorphism { i: 0, j: 0 });
        }
        for i in group.elements() {
            for j in group.elements() {
                if images[group.mul(i, j)] != images[i].after(&images[j]) {
                    return Err(GroupError::NotAHomomorphism { i, j });
                }
            }
        }
        Ok(PermRep { degree, images })
    }

    /// The trivial homomorphism into `S_n`.
    pub fn trivial(group: &FiniteGroup, n: usize) -> Self {
        PermRep { degree: n, images: vec![Perm::identity(n); group.order()] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, g: usize) -> &Perm {
        &self.images[g]
    }

    pub fn images(&self) -> &[Perm] {
        &self.images
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().skip(1).all(|p| !p.is_identity())
    }
}

/// All homomorphisms `G → S_n` whose images lie in `targets` (which must
/// be closed under composition and contain the identity), found by a
/// generating-set extension search: generator images range over
/// `targets`, the rest of the map is forced by factorization words, and
/// full multiplicativity is verified before a candidate is kept.
///
/// Results are deterministic: candidates are produced in lexicographic
/// order of the generator image choices.
pub fn enumerate_perm_homs(group: &FiniteGroup, targets: &[Perm]) -> Vec<PermRep> {
    if targets.is_empty() {
        return Vec::new();
    }
    let gens = group.generators();
    let words = group.factorize_over(&gens).expect("generators generate");
    let degree = targets.first().map_or(0, Perm::degree);
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let gen_images: Vec<&Perm> = choice.iter().map(|&c| &targets[c]).collect();
        let images: Vec<Perm> = words
            .iter()
            .map(|w| {
                let mut acc = Perm::identity(degree);
                for &gi in w {
                    acc = acc.after(gen_images[gi]);
                }
                acc
            })
            .collect();
        let hom = group
            .elements()
            .all(|i| group.elements().all(|j| images[group.mul(i, j)] == images[i].after(&images[j])));
        if hom {
            out.push(PermRep { degree, images });
        }
        // Odometer over generator choices.
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < targets.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// The Cayley embedding `κ: G → S_p`, `κ(g): i ↦ index of gᵢ·g⁻¹`.
pub fn cayley_embedding(g: &FiniteGroup) -> PermRep {
    let p = g.order();
    let images = g
        .elements()
        .map(|x| {
            let xi = g.inv(x);
            Perm { images: g.elements().map(|i| g.mul(i, xi)).collect() }
        })
        .collect();
    // Right translations compose as κ(gh) = κ(g)∘κ(h); validation is a
    // table identity, so construct directly.
    PermRep { degree: p, images }
}

// ---------------------------------------------------------------------------
// Right actions
// ---------------------------------------------------------------------------

/// A finite right `G`-set: `x·(gh) = (x·g)·h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GSet {
    group: FiniteGroup,
    size: usize,
    act: Vec<Perm>,
}

impl GSet {
    pub fn new(group: FiniteGroup, size: usize, act: Vec<Perm>) -> Result<Self, GroupError> {
        if act.len() != group.order() {
            return Err(GroupError::BadShape { order: group.order(), rows: act.len() });
        }
        for p in &act {
            if p.degree() != size {
                return Err(GroupError::DegreeMismatch { expected: size, got: p.degree() });
            }
        }
        if !act[0].is_identity() {
            return Err(GroupError::NotAnAction { g: 0, h: 0 });
        }
        for g in group.elements() {
            for h in group.elements() {
                if act[group.mul(g, h)] != act[g].then(&act[h]) {
                    return Err(GroupError::NotAnAction { g, h });
                }
            }
        }
        Ok(GSet { group, size, act })
    }

    /// The right action `x·g := ρ(g⁻¹)(x)` induced by a permutation
    /// representation.
    pub fn from_perm_rep(group: &FiniteGroup, rho: &PermRep) -> Self {
        let act = group.elements().map(|g| rho.image(group.inv(g)).clone()).collect();
        GSet { group: group.clone(), size: rho.degree(), act }
    }

    /// Right translation of the group on itself (a torsor).
    pub fn right_translation(group: &FiniteGroup) -> Self {
        let act = group
            .elements()
            .map(|g| Perm { images: group.elements().map(|x| group.mul(x, g)).collect() })
            .collect();
        GSet { group: group.clone(), size: group.order(), act }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, x: usize, g: usize) -> usize {
        self.act[g].apply(x)
    }
}

/// One orbit of a right action: the representative is the least point,
/// the stabilizer is that of the representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub representative: usize,
    pub points: Vec<usize>,
    pub stabilizer: Vec<usize>,
}

/// Orbit decomposition of a right `G`-set, listed by representative.
pub fn orbits(x: &GSet) -> Vec<Orbit> {
    let mut seen = vec![false; x.size()];
    let mut out = Vec::new();
    for start in 0..x.size() {
        if seen[start] {
            continue;
        }
        let mut points: Vec<usize> = x.group().elements().map(|g| x.act(start, g)).collect();
        points.sort_unstable();
        points.dedup();
        for &y in &points {
            seen[y] = true;
        }
        let rep = points[0];
        let stabilizer = x.group().elements().filter(|&g| x.act(rep, g) == rep).collect();
        out.push(Orbit { representative: rep, points, stabilizer });
    }
    out
}

// ---------------------------------------------------------------------------
// Subgroup views
// ---------------------------------------------------------------------------

/// A subgroup re-indexed as a standalone group, with the mapping back to
/// ambient element indices (sorted, identity first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupView {
    pub group: FiniteGroup,
    pub elements: Vec<usize>,
}

impl SubgroupView {
    /// Builds the view from a subset of ambient elements; the subset must
    /// contain the identity and be closed under multiplication.
    pub fn new(ambient: &FiniteGroup, elements: &[usize]) -> Result<Self, GroupError> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(GroupError::MissingIdentity);
        }
        for &x in &elems {
            if x >= ambient.order() {
                return Err(GroupError::IndexOutOfRange { index: x, order: ambient.order() });
            }
        }
        let pos = |x: usize| elems.binary_search(&x).ok();
        let h = elems.len();
        let mut table = vec![0; h * h];
        for (a, &x) in elems.iter().enumerate() {
            for (b, &y) in elems.iter().enumerate() {
                let xy = ambient.mul(x, y);
                match pos(xy) {
                    Some(c) => table[a * h + b] = c,
                    None => return Err(GroupError::NotClosed { a: x, b: y, product: xy }),
                }
            }
        }
        let inverse = elems.iter().map(|&x| pos(ambient.inv(x)).unwrap()).collect();
        Ok(SubgroupView { group: FiniteGroup { order: h, table, inverse }, elements: elems })
    }

    /// Ambient index of local element `i`.
    pub fn ambient(&self, i: usize) -> usize {
        self.elements[i]
    }
}
