//! Isoclinism of finite groups.
//!
//! `G` and `H` are isoclinic when there are isomorphisms
//! `φ: G/Z(G) -> H/Z(H)` and `ψ: G' -> H'` with
//! `ψ(α_G(xZ, yZ)) = α_H(φ(xZ), φ(yZ))`, where `α(xZ, yZ) = [x, y]`.
//!
//! The search enumerates `φ` over isomorphisms of the central quotients and
//! lets the commutator condition dictate `ψ`. Partial `φ` are pruned as soon
//! as the forced `ψ` stops being a well-defined injection.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::commuting::{transversal_graph, CommutingError, CommutingGraph};
use crate::graph_iso::{graphs_isomorphic, GraphIsoError};
use crate::group::{ElementSubset, FiniteGroup, GroupError, Homomorphism, Quotient};
use crate::group_iso::{search_isomorphisms, PartialMap, UNSET};

/// Default cap on `[G:Z(G)]` for [`search_isoclinism`].
pub const DEFAULT_QUOTIENT_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoclinismError {
    /// `[x, y]` changed when `x` and `y` were replaced by other members of
    /// their cosets.
    WellDefinednessViolation { x: usize, y: usize, other_x: usize, other_y: usize },
    MalformedWitness(&'static str),
    QuotientTooLarge { index: usize, bound: usize },
    Group(GroupError),
    Commuting(CommutingError),
    GraphIso(GraphIsoError),
}

impl fmt::Display for IsoclinismError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoclinismError::WellDefinednessViolation { x, y, other_x, other_y } => write!(
                f,
                "commutator map not well defined: [{x},{y}] != [{other_x},{other_y}]"
            ),
            IsoclinismError::MalformedWitness(why) => write!(f, "malformed witness: {why}"),
            IsoclinismError::QuotientTooLarge { index, bound } => {
                write!(f, "central quotient of order {index} exceeds bound {bound}")
            }
            IsoclinismError::Group(e) => write!(f, "{e}"),
            IsoclinismError::Commuting(e) => write!(f, "{e}"),
            IsoclinismError::GraphIso(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for IsoclinismError {}

impl From<GroupError> for IsoclinismError {
    fn from(e: GroupError) -> Self {
        IsoclinismError::Group(e)
    }
}

impl From<CommutingError> for IsoclinismError {
    fn from(e: CommutingError) -> Self {
        IsoclinismError::Commuting(e)
    }
}

impl From<GraphIsoError> for IsoclinismError {
    fn from(e: GraphIsoError) -> Self {
        IsoclinismError::GraphIso(e)
    }
}

/// `α_G` tabulated over pairs of cosets of `Z(G)`.
#[derive(Debug, Clone)]
pub struct CommutatorMap {
    pub quotient: Quotient,
    pub derived: ElementSubset,
    /// `table[a * q + b] = [x_a, x_b]` for coset representatives `x_a, x_b`.
    pub table: Vec<usize>,
}

impl CommutatorMap {
    pub fn index(&self) -> usize {
        self.quotient.group.order()
    }

    pub fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.index() + b]
    }
}

/// Tabulates `α_G` on minimal coset representatives and confirms that the
/// largest member of each coset gives the same commutators.
pub fn commutator_map(g: &FiniteGroup) -> Result<CommutatorMap, IsoclinismError> {
    let z = g.center();
    let quotient = g.quotient(&z)?;
    let q = quotient.group.order();
    let mut other = vec![0usize; q];
    for x in 0..g.order() {
        other[quotient.project(x)] = x;
    }
    let mut table = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            let (x, y) = (quotient.representative(a), quotient.representative(b));
            let c = g.commutator(x, y);
            if g.commutator(other[a], other[b]) != c {
                return Err(IsoclinismError::WellDefinednessViolation { x, y, other_x: other[a], other_y: other[b] });
            }
            table.push(c);
        }
    }
    Ok(CommutatorMap { quotient, derived: g.derived_subgroup(), table })
}

/// A claimed isoclinism `G -> H`.
///
/// `phi` maps coset indices of `G/Z(G)` to coset indices of `H/Z(H)`, both
/// numbered by ascending minimal representative. `psi_image[i]` is the
/// image of `psi_domain[i]`, the members of `G'` in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IsoclinismWitness {
    pub phi: Vec<usize>,
    pub psi_domain: Vec<usize>,
    pub psi_image: Vec<usize>,
    pub g_representatives: Vec<usize>,
    pub h_representatives: Vec<usize>,
}

impl IsoclinismWitness {
    /// The identity isoclinism of `g` with itself.
    pub fn identity(g: &FiniteGroup) -> Self {
        let reps = g.left_cosets(&g.center()).representatives;
        let derived = g.derived_subgroup().members().to_vec();
        IsoclinismWitness {
            phi: (0..reps.len()).collect(),
            psi_domain: derived.clone(),
            psi_image: derived,
            g_representatives: reps.clone(),
            h_representatives: reps,
        }
    }

    pub fn psi(&self, x: usize) -> Option<usize> {
        self.psi_domain.binary_search(&x).ok().map(|i| self.psi_image[i])
    }
}

/// Necessary conditions for isoclinism: equal `[G:Z]`, `|G'|` and
/// conjugate type.
pub fn prescreen(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let key = |x: &FiniteGroup| (x.order() / x.center().len(), x.derived_subgroup().len(), x.conjugate_type());
    key(g) == key(h)
}

/// Checks all three conditions of an isoclinism. Structural defects in the
/// witness are errors; a well-formed witness that fails a condition gives
/// `Ok(false)`.
pub fn verify_isoclinism(g: &FiniteGroup, h: &FiniteGroup, w: &IsoclinismWitness) -> Result<bool, IsoclinismError> {
    let ag = commutator_map(g)?;
    let ah = commutator_map(h)?;
    let (qg, qh) = (ag.index(), ah.index());
    if w.phi.len() != qg || w.phi.iter().any(|&c| c >= qh) {
        return Err(IsoclinismError::MalformedWitness("phi does not map G/Z(G) into H/Z(H)"));
    }
    if w.psi_domain != ag.derived.members() {
        return Err(IsoclinismError::MalformedWitness("psi domain is not G'"));
    }
    if w.psi_image.len() != w.psi_domain.len() || w.psi_image.iter().any(|&y| y >= h.order()) {
        return Err(IsoclinismError::MalformedWitness("psi image has the wrong shape"));
    }
    if w.g_representatives != ag.quotient.cosets.representatives
        || w.h_representatives != ah.quotient.cosets.representatives
    {
        return Err(IsoclinismError::MalformedWitness("coset representatives do not match"));
    }

    // (i)
    if qg != qh || !Homomorphism::new(w.phi.clone()).is_isomorphism(&ag.quotient.group, &ah.quotient.group) {
        return Ok(false);
    }
    // (ii)
    let mut seen = vec![false; h.order()];
    for &y in &w.psi_image {
        if !ah.derived.contains(y) || core::mem::replace(&mut seen[y], true) {
            return Ok(false);
        }
    }
    if w.psi_image.len() != ah.derived.len() {
        return Ok(false);
    }
    for &x in &w.psi_domain {
        for &y in &w.psi_domain {
            let lhs = w.psi(g.mul(x, y));
            let rhs = h.mul(w.psi(x).unwrap_or(UNSET), w.psi(y).unwrap_or(UNSET));
            if lhs != Some(rhs) {
                return Ok(false);
            }
        }
    }
    // (iii)
    for a in 0..qg {
        for b in 0..qg {
            if w.psi(ag.get(a, b)) != Some(ah.get(w.phi[a], w.phi[b])) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Searches for an isoclinism with the default quotient bound.
pub fn search_isoclinism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<IsoclinismWitness>, IsoclinismError> {
    search_isoclinism_bounded(g, h, DEFAULT_QUOTIENT_BOUND)
}

/// Exhaustive within `bound`: returns a witness exactly when `G` and `H`
/// are isoclinic.
pub fn search_isoclinism_bounded(
    g: &FiniteGroup,
    h: &FiniteGroup,
    bound: usize,
) -> Result<Option<IsoclinismWitness>, IsoclinismError> {
    if !prescreen(g, h) {
        return Ok(None);
    }
    let index = g.order() / g.center().len();
    if index > bound {
        return Err(IsoclinismError::QuotientTooLarge { index, bound });
    }
    let ag = commutator_map(g)?;
    let ah = commutator_map(h)?;
    let q = ag.index();

    // ψ forced by φ on the pairs inside the current domain.
    let forced_psi = |forward: &[usize], domain: &[usize]| -> Option<BTreeMap<usize, usize>> {
        let mut psi = BTreeMap::new();
        let mut used = BTreeMap::new();
        for &a in domain {
            for &b in domain {
                let from = ag.get(a, b);
                let to = ah.get(forward[a], forward[b]);
                match psi.get(&from) {
                    Some(&t) if t != to => return None,
                    Some(_) => {}
                    None => {
                        if used.insert(to, from).is_some() {
                            return None;
                        }
                        psi.insert(from, to);
                    }
                }
            }
        }
        Some(psi)
    };

    let mut prune = |partial: &PartialMap| forced_psi(&partial.forward, &partial.domain).is_some();
    let mut found_psi: Option<Vec<usize>> = None;
    let all: Vec<usize> = (0..q).collect();
    let mut accept = |forward: &[usize]| {
        let Some(psi) = forced_psi(forward, &all) else {
            return false;
        };
        match extend_psi(g, h, &psi, &ag.derived, &ah.derived) {
            Some(image) => {
                found_psi = Some(image);
                true
            }
            None => false,
        }
    };
    let phi = search_isomorphisms(&ag.quotient.group, &ah.quotient.group, &mut prune, &mut accept);
    let (Some(phi), Some(psi_image)) = (phi, found_psi) else {
        return Ok(None);
    };
    let witness = IsoclinismWitness {
        phi,
        psi_domain: ag.derived.members().to_vec(),
        psi_image,
        g_representatives: ag.quotient.cosets.representatives.clone(),
        h_representatives: ah.quotient.cosets.representatives.clone(),
    };
    debug_assert_eq!(verify_isoclinism(g, h, &witness), Ok(true));
    Ok(Some(witness))
}

/// Extends `ψ`, known on the commutators, to all of `G'` by walking the
/// Cayley graph of `G'` on those commutators. Returns the images of the
/// members of `G'` in ascending order, or `None` if the extension is not a
/// bijective homomorphism onto `H'`.
fn extend_psi(
    g: &FiniteGroup,
    h: &FiniteGroup,
    on_commutators: &BTreeMap<usize, usize>,
    dg: &ElementSubset,
    dh: &ElementSubset,
) -> Option<Vec<usize>> {
    let mut map = vec![UNSET; g.order()];
    let mut hit = vec![false; h.order()];
    map[0] = 0;
    hit[0] = true;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&c, &img) in on_commutators {
            let y = g.mul(x, c);
            let iy = h.mul(map[x], img);
            if map[y] == UNSET {
                if core::mem::replace(&mut hit[iy], true) {
                    return None;
                }
                map[y] = iy;
                queue.push(y);
            } else if map[y] != iy {
                return None;
            }
        }
    }
    if queue.len() != dg.len() || dg.len() != dh.len() || queue.iter().any(|&y| !dh.contains(map[y])) {
        return None;
    }
    Some(dg.iter().map(|x| map[x]).collect())
}

/// Sends each vertex `t` of `tg` to the vertex of `th` lying in the coset
/// `φ(tZ(G))`. Works for any transversals on either side.
pub fn witness_vertex_map(
    g: &FiniteGroup,
    h: &FiniteGroup,
    w: &IsoclinismWitness,
    tg: &CommutingGraph,
    th: &CommutingGraph,
) -> Result<Vec<usize>, IsoclinismError> {
    let cg = g.left_cosets(&g.center());
    let ch = h.left_cosets(&h.center());
    if w.phi.len() != cg.representatives.len() || w.phi.iter().any(|&c| c >= ch.representatives.len()) {
        return Err(IsoclinismError::MalformedWitness("phi does not match the central quotients"));
    }
    let mut vertex_of_coset = vec![UNSET; ch.representatives.len()];
    for (v, &y) in th.vertex_elements.iter().enumerate() {
        vertex_of_coset[ch.index_of[y]] = v;
    }
    tg.vertex_elements
        .iter()
        .map(|&x| {
            let v = vertex_of_coset[w.phi[cg.index_of[x]]];
            if v == UNSET {
                Err(IsoclinismError::MalformedWitness("phi sends a non-central coset to the center"))
            } else {
                Ok(v)
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    /// `T(G) ≅ T(H)` by the general isomorphism test.
    pub graphs_isomorphic: bool,
    /// The witness-induced vertex map is itself an isomorphism.
    pub witness_map_is_isomorphism: bool,
    pub vertex_map: Vec<usize>,
}

impl InvarianceReport {
    pub fn holds(&self) -> bool {
        self.graphs_isomorphic && self.witness_map_is_isomorphism
    }
}

/// For an isoclinic pair, compares `T(G)` and `T(H)` both through the
/// general isomorphism test and through the map induced by the witness.
pub fn isoclinism_invariance_check(
    g: &FiniteGroup,
    h: &FiniteGroup,
    w: &IsoclinismWitness,
) -> Result<InvarianceReport, IsoclinismError> {
    let tg = transversal_graph(g)?;
    let th = transversal_graph(h)?;
    let vertex_map = witness_vertex_map(g, h, w, &tg, &th)?;
    let witness_map_is_isomorphism = tg.graph.is_isomorphism(&th.graph, &vertex_map);
    let graphs_isomorphic = graphs_isomorphic(&tg.graph, &th.graph)?.is_some();
    Ok(InvarianceReport { graphs_isomorphic, witness_map_is_isomorphism, vertex_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dihedral, group_j, m3, quaternion8};

    #[test]
    fn identity_witness_verifies() {
        let g = m3().unwrap();
        let w = IsoclinismWitness::identity(&g);
        assert_eq!(verify_isoclinism(&g, &g, &w), Ok(true));
    }

    #[test]
    fn d8_and_q8_are_isoclinic() {
        let d8 = dihedral(8).unwrap();
        let q8 = quaternion8().unwrap();
        let w = search_isoclinism(&d8, &q8).unwrap().expect("isoclinic");
        assert_eq!(verify_isoclinism(&d8, &q8, &w), Ok(true));
        let report = isoclinism_invariance_check(&d8, &q8, &w).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn j_and_d16_are_not() {
        let j = group_j().unwrap();
        let d16 = dihedral(16).unwrap();
        assert_eq!(search_isoclinism(&j, &d16).unwrap(), None);
    }

    #[test]
    fn malformed_witness_is_an_error() {
        let g = m3().unwrap();
        let mut w = IsoclinismWitness::identity(&g);
        w.phi.pop();
        assert!(matches!(verify_isoclinism(&g, &g, &w), Err(IsoclinismError::MalformedWitness(_))));
    }
}
