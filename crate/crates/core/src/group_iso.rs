//! Isomorphism search between Cayley-table groups.
//!
//! The search fixes images for a greedily chosen generating set of the
//! source, one generator at a time. After each choice the partial map is
//! extended over the subgroup generated so far; an inconsistency or a
//! collision in the image prunes the branch. Candidate images must match the
//! generator's element order and conjugacy-class size.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{FiniteGroup, GroupError, Homomorphism};

/// Orders above this are rejected by [`group_isomorphic`].
pub const ISOMORPHISM_MAX_ORDER: usize = 256;

pub(crate) const UNSET: usize = usize::MAX;

/// Generators chosen greedily: each step adds the element whose adjunction
/// yields the largest subgroup (smallest index on ties).
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut current = g.subgroup_closure([]);
    while current.len() < g.order() {
        let mut best: Option<(usize, usize)> = None;
        for x in 0..g.order() {
            if current.contains(x) {
                continue;
            }
            let size = g.subgroup_closure(gens.iter().copied().chain([x])).len();
            if best.map_or(true, |(_, s)| size > s) {
                best = Some((x, size));
                if size == g.order() {
                    break;
                }
            }
        }
        let (x, _) = best.expect("proper subgroup leaves an element outside");
        gens.push(x);
        current = g.subgroup_closure(gens.iter().copied());
    }
    gens
}

/// A map defined on the subgroup generated by the generators fixed so far.
pub(crate) struct PartialMap {
    pub forward: Vec<usize>,
    pub domain: Vec<usize>,
}

/// Extends generator images to a map on the generated subgroup, or `None` if
/// the assignment is not an injective homomorphism there.
pub(crate) fn extend_partial(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<PartialMap> {
    let mut forward = vec![UNSET; g.order()];
    let mut backward = vec![UNSET; h.order()];
    forward[0] = 0;
    backward[0] = 0;
    let mut domain = vec![0usize];
    let mut head = 0;
    while head < domain.len() {
        let x = domain[head];
        head += 1;
        for (&gen, &img) in gens.iter().zip(images) {
            let y = g.mul(x, gen);
            let iy = h.mul(forward[x], img);
            if forward[y] == UNSET {
                if backward[iy] != UNSET {
                    return None;
                }
                forward[y] = iy;
                backward[iy] = y;
                domain.push(y);
            } else if forward[y] != iy {
                return None;
            }
        }
    }
    Some(PartialMap { forward, domain })
}

fn invariant_profile(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let orders = g.element_orders();
    let classes = g.class_sizes();
    orders.into_iter().zip(classes).collect()
}

/// Backtracking enumeration of isomorphisms `g -> h`.
///
/// `prune` sees every consistent partial map and may cut the branch by
/// returning `false`; `accept` sees every complete isomorphism and stops the
/// search by returning `true`. Returns the accepted map.
pub(crate) fn search_isomorphisms(
    g: &FiniteGroup,
    h: &FiniteGroup,
    prune: &mut dyn FnMut(&PartialMap) -> bool,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let gp = invariant_profile(g);
    let hp = invariant_profile(h);
    let mut gs = gp.clone();
    let mut hs = hp.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return None;
    }
    if g.order() == 1 {
        let map = vec![0];
        return accept(&map).then_some(map);
    }
    let gens = greedy_generators(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&x| (0..h.order()).filter(|&y| hp[y] == gp[x]).collect())
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    descend(g, h, &gens, &candidates, &mut images, prune, accept)
}

fn descend(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    prune: &mut dyn FnMut(&PartialMap) -> bool,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let level = images.len();
    for &c in &candidates[level] {
        images.push(c);
        if let Some(partial) = extend_partial(g, h, &gens[..=level], images) {
            if prune(&partial) {
                if level + 1 == gens.len() {
                    debug_assert_eq!(partial.domain.len(), g.order());
                    if accept(&partial.forward) {
                        return Some(partial.forward);
                    }
                } else if let Some(found) = descend(g, h, gens, candidates, images, prune, accept) {
                    return Some(found);
                }
            }
        }
        images.pop();
    }
    None
}

/// Finds an isomorphism `g -> h` if one exists. Exhaustive up to
/// [`ISOMORPHISM_MAX_ORDER`].
pub fn group_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Homomorphism>, GroupError> {
    group_isomorphic_bounded(g, h, ISOMORPHISM_MAX_ORDER)
}

pub fn group_isomorphic_bounded(
    g: &FiniteGroup,
    h: &FiniteGroup,
    bound: usize,
) -> Result<Option<Homomorphism>, GroupError> {
    for order in [g.order(), h.order()] {
        if order > bound {
            return Err(GroupError::OrderTooLarge { order, bound });
        }
    }
    Ok(search_isomorphisms(g, h, &mut |_| true, &mut |_| true).map(Homomorphism::new))
}
