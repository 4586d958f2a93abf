//! Finite groups stored as dense Cayley tables, plus the structural
//! computations built on top of them.
//!
//! Elements are indices `0..order`; index `0` is always the identity. A
//! [`FiniteGroup`] can only be obtained through validation, so every method
//! may assume the group axioms.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{is_prime, p_part, prime_power};

/// Largest order accepted unless a caller supplies its own cap.
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    EmptyTable,
    NotSquare { row: usize, len: usize, expected: usize },
    EntryOutOfRange { row: usize, col: usize, value: usize },
    OrderCapExceeded { order: usize, cap: usize },
    /// Element 0 fails to act as identity at the given element.
    NoIdentity { witness: usize },
    NotLatinSquare { line: Line, index: usize, repeated: usize },
    NotAssociative { i: usize, j: usize, k: usize },
    ElementOutOfRange { element: usize, order: usize },
    NotSubgroup,
    NotNormal { g: usize, n: usize },
    NotPrime(usize),
    DoesNotDivide { p: usize, order: usize },
    NotPGroup { order: usize },
    OrderTooLarge { order: usize, bound: usize },
    ZeroOrder,
    OrderTooSmall { order: usize, min: usize },
    InvalidOrder { order: usize },
    UnsupportedType,
    NotIsomorphism,
    CentersNotIsomorphic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupError::*;
        match self {
            EmptyTable => write!(f, "empty Cayley table"),
            NotSquare { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            EntryOutOfRange { row, col, value } => {
                write!(f, "entry ({row},{col}) = {value} is out of range")
            }
            OrderCapExceeded { order, cap } => write!(f, "order {order} exceeds cap {cap}"),
            NoIdentity { witness } => {
                write!(f, "element 0 is not a two-sided identity (fails at {witness})")
            }
            NotLatinSquare { line, index, repeated } => {
                let kind = match line {
                    Line::Row => "row",
                    Line::Column => "column",
                };
                write!(f, "{kind} {index} repeats element {repeated}")
            }
            NotAssociative { i, j, k } => write!(f, "({i}*{j})*{k} != {i}*({j}*{k})"),
            ElementOutOfRange { element, order } => {
                write!(f, "element {element} out of range for order {order}")
            }
            NotSubgroup => write!(f, "subset is not a subgroup"),
            NotNormal { g, n } => write!(f, "not normal: conjugate of {n} by {g} leaves the subgroup"),
            NotPrime(p) => write!(f, "{p} is not prime"),
            DoesNotDivide { p, order } => write!(f, "{p} does not divide {order}"),
            NotPGroup { order } => write!(f, "order {order} is not a prime power"),
            OrderTooLarge { order, bound } => write!(f, "order {order} exceeds search bound {bound}"),
            ZeroOrder => write!(f, "order must be positive"),
            OrderTooSmall { order, min } => write!(f, "order {order} below minimum {min}"),
            InvalidOrder { order } => write!(f, "order {order} is not valid for this family"),
            UnsupportedType => write!(f, "unsupported extraspecial type"),
            NotIsomorphism => write!(f, "map is not an isomorphism"),
            CentersNotIsomorphic => write!(f, "centers are not isomorphic"),
        }
    }
}

impl core::error::Error for GroupError {}

/// What a subset is known to be. Purely informational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetKind {
    Plain,
    Subgroup,
    Transversal,
    Coset,
    ConjugacyClass,
}

/// A sorted, duplicate-free set of element indices of some parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSubset {
    mask: Vec<bool>,
    members: Vec<usize>,
    kind: SubsetKind,
}

impl ElementSubset {
    pub fn new(
        universe: usize,
        elements: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GroupError> {
        let mut mask = vec![false; universe];
        for e in elements {
            if e >= universe {
                return Err(GroupError::ElementOutOfRange { element: e, order: universe });
            }
            mask[e] = true;
        }
        Ok(Self::from_mask(mask, SubsetKind::Plain))
    }

    pub(crate) fn from_mask(mask: Vec<bool>, kind: SubsetKind) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        ElementSubset { mask, members, kind }
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.get(x).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn kind(&self) -> SubsetKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: SubsetKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn is_subset_of(&self, other: &ElementSubset) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        let mask = self.mask.iter().enumerate().map(|(i, &m)| m && other.contains(i)).collect();
        Self::from_mask(mask, SubsetKind::Plain)
    }
}

/// A map between element indices. Whether it is a homomorphism is checked
/// against explicit source and target groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(map: Vec<usize>) -> Self {
        Homomorphism { map }
    }

    pub fn identity(order: usize) -> Self {
        Homomorphism { map: (0..order).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        let n = source.order();
        if self.map.len() != n || self.map.iter().any(|&y| y >= target.order()) {
            return false;
        }
        (0..n).all(|i| {
            (0..n).all(|j| self.map[source.mul(i, j)] == target.mul(self.map[i], self.map[j]))
        })
    }

    pub fn is_isomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        if source.order() != target.order() || !self.is_homomorphism(source, target) {
            return false;
        }
        let mut seen = vec![false; target.order()];
        self.map.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
    }

    pub fn inverse(&self) -> Option<Homomorphism> {
        let mut inv = vec![usize::MAX; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            if y >= inv.len() || inv[y] != usize::MAX {
                return None;
            }
            inv[y] = x;
        }
        Some(Homomorphism { map: inv })
    }
}

/// Cosets of a subgroup: the coset index of every element and the minimal
/// representative of every coset, in ascending representative order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    pub index_of: Vec<usize>,
    pub representatives: Vec<usize>,
}

/// `G/N` together with the projection `G -> G/N`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub cosets: CosetPartition,
}

impl Quotient {
    pub fn project(&self, x: usize) -> usize {
        self.cosets.index_of[x]
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.cosets.representatives[coset]
    }
}

/// A validated group given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// Validates a table with the default order cap and returns the group.
pub fn validate_group(rows: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::from_rows("table", rows, DEFAULT_MAX_ORDER)
}

impl FiniteGroup {
    pub fn from_rows(name: &str, rows: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > cap {
            return Err(GroupError::OrderCapExceeded { order: n, cap });
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: r, len: row.len(), expected: n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::EntryOutOfRange { row: r, col: c, value: v });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(name, n, table, cap)
    }

    /// Validates a row-major flat table.
    pub fn from_flat(name: &str, order: usize, table: Vec<u32>, cap: usize) -> Result<Self, GroupError> {
        let n = order;
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        if n > cap {
            return Err(GroupError::OrderCapExceeded { order: n, cap });
        }
        if table.len() != n * n {
            return Err(GroupError::NotSquare { row: table.len() / n, len: table.len() % n, expected: n });
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= n) {
            return Err(GroupError::EntryOutOfRange { row: pos / n, col: pos % n, value: table[pos] as usize });
        }
        for j in 0..n {
            if table[j] as usize != j || table[j * n] as usize != j {
                return Err(GroupError::NoIdentity { witness: j });
            }
        }
        check_latin(n, &table)?;
        check_associative(n, &table)?;

        let mut inverses = vec![0u32; n];
        for (i, inv) in inverses.iter_mut().enumerate() {
            // Latin rows guarantee exactly one solution of i*j = 0.
            let j = (0..n).find(|&j| table[i * n + j] == 0).expect("latin row contains identity");
            *inv = j as u32;
        }
        Ok(FiniteGroup { name: String::from(name), order: n, table, inverses, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = String::from(name);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Rows of the Cayley table.
    pub fn rows(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.table.chunks(self.order)
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        let mut base = x;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (x + 1..self.order).all(|y| self.commutes(x, y)))
    }

    /// `[x,y] = x y x⁻¹ y⁻¹`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        let xy = self.mul(x, y);
        self.mul(self.mul(xy, self.inv(x)), self.inv(y))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn center(&self) -> ElementSubset {
        let mask = (0..self.order)
            .map(|z| (0..self.order).all(|g| self.commutes(z, g)))
            .collect();
        ElementSubset::from_mask(mask, SubsetKind::Subgroup)
    }

    pub fn centralizer(&self, x: usize) -> ElementSubset {
        let mask = (0..self.order).map(|g| self.commutes(g, x)).collect();
        ElementSubset::from_mask(mask, SubsetKind::Subgroup)
    }

    /// `|C_G(x)|` for every element.
    pub fn centralizer_orders(&self) -> Vec<usize> {
        (0..self.order)
            .map(|x| (0..self.order).filter(|&g| self.commutes(g, x)).count())
            .collect()
    }

    /// Conjugacy class size of every element.
    pub fn class_sizes(&self) -> Vec<usize> {
        self.centralizer_orders().into_iter().map(|c| self.order / c).collect()
    }

    pub fn normalizer(&self, h: &ElementSubset) -> ElementSubset {
        let mask = (0..self.order)
            .map(|g| h.iter().all(|x| h.contains(self.conjugate(g, x))))
            .collect();
        ElementSubset::from_mask(mask, SubsetKind::Subgroup)
    }

    /// Smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: impl IntoIterator<Item = usize>) -> ElementSubset {
        let gens: Vec<usize> = {
            let mut s: Vec<usize> = seed.into_iter().filter(|&g| g != 0).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let mut mask = vec![false; self.order];
        mask[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push(y);
                }
            }
        }
        ElementSubset::from_mask(mask, SubsetKind::Subgroup)
    }

    pub fn is_subgroup(&self, h: &ElementSubset) -> bool {
        h.universe() == self.order
            && h.contains(0)
            && h.iter().all(|a| h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    /// Returns a witness `(g, n)` with `g n g⁻¹ ∉ N`, if any.
    pub fn normality_witness(&self, n: &ElementSubset) -> Option<(usize, usize)> {
        (0..self.order).find_map(|g| {
            n.iter().find(|&x| !n.contains(self.conjugate(g, x))).map(|x| (g, x))
        })
    }

    pub fn derived_subgroup(&self) -> ElementSubset {
        let mut comms = vec![false; self.order];
        for x in 0..self.order {
            for y in 0..self.order {
                comms[self.commutator(x, y)] = true;
            }
        }
        self.subgroup_closure(comms.iter().enumerate().filter_map(|(i, &c)| c.then_some(i)))
    }

    /// Conjugacy classes ordered by smallest member; the first is `{0}`.
    pub fn conjugacy_classes(&self) -> Vec<ElementSubset> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for x in 0..self.order {
            if assigned[x] {
                continue;
            }
            let mut mask = vec![false; self.order];
            for g in 0..self.order {
                let c = self.conjugate(g, x);
                mask[c] = true;
                assigned[c] = true;
            }
            classes.push(ElementSubset::from_mask(mask, SubsetKind::ConjugacyClass));
        }
        classes
    }

    /// The set of conjugacy class sizes, ascending.
    pub fn conjugate_type(&self) -> Vec<usize> {
        let sizes: BTreeSet<usize> = self.class_sizes().into_iter().collect();
        sizes.into_iter().collect()
    }

    /// Left cosets `xH` of a subgroup.
    pub fn left_cosets(&self, h: &ElementSubset) -> CosetPartition {
        let mut index_of = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        for x in 0..self.order {
            if index_of[x] != usize::MAX {
                continue;
            }
            let idx = representatives.len();
            representatives.push(x);
            for z in h.iter() {
                index_of[self.mul(x, z)] = idx;
            }
        }
        CosetPartition { index_of, representatives }
    }

    /// Minimal-index representative of every left coset of `h`.
    pub fn canonical_transversal(&self, h: &ElementSubset) -> ElementSubset {
        let cosets = self.left_cosets(h);
        let mut mask = vec![false; self.order];
        for r in cosets.representatives {
            mask[r] = true;
        }
        ElementSubset::from_mask(mask, SubsetKind::Transversal)
    }

    /// True when `t` holds exactly one element of every left coset of `h`
    /// and contains the identity.
    pub fn is_transversal(&self, t: &ElementSubset, h: &ElementSubset) -> bool {
        if !t.contains(0) {
            return false;
        }
        let cosets = self.left_cosets(h);
        let mut hit = vec![false; cosets.representatives.len()];
        for x in t.iter() {
            let c = cosets.index_of[x];
            if core::mem::replace(&mut hit[c], true) {
                return false;
            }
        }
        hit.iter().all(|&h| h)
    }

    pub fn quotient(&self, n: &ElementSubset) -> Result<Quotient, GroupError> {
        if n.universe() != self.order || !self.is_subgroup(n) {
            return Err(GroupError::NotSubgroup);
        }
        if let Some((g, x)) = self.normality_witness(n) {
            return Err(GroupError::NotNormal { g, n: x });
        }
        let cosets = self.left_cosets(n);
        let q = cosets.representatives.len();
        let mut table = Vec::with_capacity(q * q);
        for &a in &cosets.representatives {
            for &b in &cosets.representatives {
                table.push(cosets.index_of[self.mul(a, b)] as u32);
            }
        }
        let labels = cosets
            .representatives
            .iter()
            .map(|&r| format!("[{}]", self.label(r)))
            .collect();
        let name = format!("{}/N", self.name);
        let group = FiniteGroup::from_flat(&name, q, table, usize::MAX)
            .expect("quotient of a group by a normal subgroup is a group")
            .with_labels(labels);
        Ok(Quotient { group, cosets })
    }

    /// The subgroup `h` as a group in its own right, with the embedding
    /// back into `self`. Members keep their relative order, so index 0 stays
    /// the identity.
    pub fn subgroup_as_group(&self, h: &ElementSubset) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotSubgroup);
        }
        let members = h.members().to_vec();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let k = members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &members {
            for &b in &members {
                table.push(pos[self.mul(a, b)] as u32);
            }
        }
        let labels = members.iter().map(|&m| self.label(m)).collect();
        let name = format!("sub({})", self.name);
        let group = FiniteGroup::from_flat(&name, k, table, usize::MAX)
            .expect("subgroup table is a group")
            .with_labels(labels);
        Ok((group, members))
    }

    /// The prime `p` when the order is a power of `p`.
    pub fn p_group_prime(&self) -> Option<usize> {
        prime_power(self.order).map(|(p, _)| p)
    }

    /// A Sylow `p`-subgroup, grown from a cyclic `p`-subgroup by repeatedly
    /// adjoining an element of order `p` in `N(P)/P`.
    pub fn sylow_subgroup(&self, p: usize) -> Result<ElementSubset, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if self.order % p != 0 {
            return Err(GroupError::DoesNotDivide { p, order: self.order });
        }
        let target = p_part(self.order, p);
        let orders = self.element_orders();
        let start = (0..self.order)
            .filter(|&x| p_part(orders[x], p) == orders[x])
            .max_by_key(|&x| (orders[x], core::cmp::Reverse(x)))
            .unwrap_or(0);
        let mut sylow = self.subgroup_closure([start]);
        while sylow.len() < target {
            let normalizer = self.normalizer(&sylow);
            let step = normalizer.iter().filter(|&g| !sylow.contains(g)).find_map(|g| {
                // smallest k with g^k in P
                let mut k = 1;
                let mut y = g;
                while !sylow.contains(y) {
                    y = self.mul(y, g);
                    k += 1;
                }
                (k % p == 0).then(|| self.pow(g, k / p))
            });
            let h = step.expect("a non-Sylow p-subgroup has p | [N(P):P]");
            let mut seed = sylow.members().to_vec();
            seed.push(h);
            sylow = self.subgroup_closure(seed);
        }
        Ok(sylow)
    }

    /// Frattini subgroup of a `p`-group, computed as `G' G^p`.
    pub fn frattini_p_group(&self, p: usize) -> Result<ElementSubset, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if self.order != 1 && self.p_group_prime() != Some(p) {
            return Err(GroupError::NotPGroup { order: self.order });
        }
        let derived = self.derived_subgroup();
        let powers = (0..self.order).map(|g| self.pow(g, p));
        Ok(self.subgroup_closure(derived.iter().chain(powers)))
    }
}

fn check_latin(n: usize, table: &[u32]) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; n];
    for r in 0..n {
        for c in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == r {
                return Err(GroupError::NotLatinSquare { line: Line::Row, index: r, repeated: v });
            }
            seen[v] = r;
        }
    }
    seen.iter_mut().for_each(|s| *s = usize::MAX);
    for c in 0..n {
        for r in 0..n {
            let v = table[r * n + c] as usize;
            if seen[v] == c {
                return Err(GroupError::NotLatinSquare { line: Line::Column, index: c, repeated: v });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

fn check_associative(n: usize, t: &[u32]) -> Result<(), GroupError> {
    for i in 0..n {
        let row_i = &t[i * n..(i + 1) * n];
        for j in 0..n {
            let ij = row_i[j] as usize;
            let row_ij = &t[ij * n..(ij + 1) * n];
            let row_j = &t[j * n..(j + 1) * n];
            for k in 0..n {
                if row_ij[k] != row_i[row_j[k] as usize] {
                    return Err(GroupError::NotAssociative { i, j, k });
                }
            }
        }
    }
    Ok(())
}
