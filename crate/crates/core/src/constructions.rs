//! Named groups and product constructions.
//!
//! Every constructor builds a flat Cayley table from a normal form and runs
//! it through full validation, so a wrong reordering rule surfaces as a
//! [`GroupError`] rather than as a silently wrong group.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{checked_pow, is_prime};
use crate::group::{FiniteGroup, GroupError, DEFAULT_MAX_ORDER};
use crate::group_iso::group_isomorphic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ExtraspecialType {
    Plus,
    Minus,
}

impl ExtraspecialType {
    pub fn sign(self) -> char {
        match self {
            ExtraspecialType::Plus => '+',
            ExtraspecialType::Minus => '-',
        }
    }
}

/// Renders `a^i b^j ...` with unit exponents elided; the empty word is `1`.
fn word(parts: &[(&str, usize)]) -> String {
    let mut s = String::new();
    for &(sym, e) in parts {
        match e {
            0 => {}
            1 => s.push_str(sym),
            _ => s.push_str(&format!("{sym}^{e}")),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

fn build(
    name: &str,
    order: usize,
    cap: usize,
    labels: Vec<String>,
    product: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup, GroupError> {
    if order > cap {
        return Err(GroupError::OrderCapExceeded { order, cap });
    }
    let mut table = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            table.push(product(a, b) as u32);
        }
    }
    Ok(FiniteGroup::from_flat(name, order, table, cap)?.with_labels(labels))
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    cyclic_capped(n, DEFAULT_MAX_ORDER)
}

pub fn cyclic_capped(n: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ZeroOrder);
    }
    let labels = (0..n).map(|i| word(&[("x", i)])).collect();
    build(&format!("cyclic:{n}"), n, cap, labels, |a, b| (a + b) % n)
}

/// `D_{2m} = <x, y | x^m = y^2 = 1, y x y⁻¹ = x⁻¹>` in normal form `x^i y^j`,
/// stored at index `i + m j`.
pub fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    dihedral_capped(order, DEFAULT_MAX_ORDER)
}

pub fn dihedral_capped(order: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if order < 6 {
        return Err(GroupError::OrderTooSmall { order, min: 6 });
    }
    if order % 2 != 0 {
        return Err(GroupError::InvalidOrder { order });
    }
    let m = order / 2;
    let labels = (0..order).map(|e| word(&[("x", e % m), ("y", e / m)])).collect();
    build(&format!("dihedral:{order}"), order, cap, labels, |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        let k = if j == 1 { (m - k) % m } else { k };
        (i + k) % m + m * ((j + l) % 2)
    })
}

/// `Q_8 = <a, b | a^4 = 1, b^2 = a^2, b a b⁻¹ = a⁻¹>` in normal form
/// `a^i b^j` at index `i + 4 j`.
pub fn quaternion8() -> Result<FiniteGroup, GroupError> {
    let labels = ["1", "i", "-1", "-i", "j", "k", "-j", "-k"].map(String::from).to_vec();
    build("quaternion:8", 8, DEFAULT_MAX_ORDER, labels, |x, y| {
        let (i, j) = (x % 4, x / 4);
        let (k, l) = (y % 4, y / 4);
        let k = if j == 1 { (4 - k) % 4 } else { k };
        let mut a = i + k;
        if j + l == 2 {
            a += 2;
        }
        a % 4 + 4 * ((j + l) % 2)
    })
}

/// Heisenberg group mod `p` in normal form `a^i b^j c^k`, index
/// `k + p j + p² i`, with `b^j a^i = a^i b^j c^(-ij)` so that `[a,b] = c`.
pub fn heisenberg_mod_p(p: usize) -> Result<FiniteGroup, GroupError> {
    heisenberg_capped(p, DEFAULT_MAX_ORDER)
}

pub fn heisenberg_capped(p: usize, cap: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    let order = checked_pow(p, 3).ok_or(GroupError::OrderCapExceeded { order: usize::MAX, cap })?;
    let split = |e: usize| (e / (p * p), (e / p) % p, e % p);
    let labels = (0..order)
        .map(|e| {
            let (i, j, k) = split(e);
            word(&[("a", i), ("b", j), ("c", k)])
        })
        .collect();
    build(&format!("heisenberg:{p}"), order, cap, labels, |x, y| {
        let (i, j, k) = split(x);
        let (i2, j2, k2) = split(y);
        let c = (k + k2 + p * p - (j * i2) % p) % p;
        c + p * ((j + j2) % p) + p * p * ((i + i2) % p)
    })
}

/// The extraspecial group of order 27 and exponent 3.
pub fn m3() -> Result<FiniteGroup, GroupError> {
    Ok(heisenberg_mod_p(3)?.with_name("m3"))
}

/// `J = <a,b,c | a^4 = b^4 = c^4 = 1, a^2 = b^2, ab = ba, c a c⁻¹ = a⁻¹, b c b⁻¹ = c⁻¹>`
/// in normal form `a^i b^j c^k` (`i, k < 4`, `j < 2`), index `i + 4 j + 8 k`.
///
/// Reordering: `c^k a^I = a^((-1)^k I) c^k`, `c^k b^J = b^J c^((-1)^J k)`,
/// and `b^2 = a^2`.
pub fn group_j() -> Result<FiniteGroup, GroupError> {
    let split = |e: usize| (e % 4, (e / 4) % 2, e / 8);
    let labels = (0..32)
        .map(|e| {
            let (i, j, k) = split(e);
            word(&[("a", i), ("b", j), ("c", k)])
        })
        .collect();
    build("jgroup", 32, DEFAULT_MAX_ORDER, labels, |x, y| {
        let (i, j, k) = split(x);
        let (i2, j2, k2) = split(y);
        let moved_a = if k % 2 == 1 { (4 - i2) % 4 } else { i2 };
        let mut a = i + moved_a;
        if j + j2 == 2 {
            a += 2;
        }
        let moved_c = if j2 == 1 { (4 - k) % 4 } else { k };
        a % 4 + 4 * ((j + j2) % 2) + 8 * ((moved_c + k2) % 4)
    })
}

/// `G × H` with `(g, h)` stored at `g |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    direct_product_capped(g, h, DEFAULT_MAX_ORDER)
}

pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup, GroupError> {
    let m = h.order();
    let order = g
        .order()
        .checked_mul(m)
        .ok_or(GroupError::OrderCapExceeded { order: usize::MAX, cap })?;
    let labels = (0..order).map(|e| format!("({},{})", g.label(e / m), h.label(e % m))).collect();
    let name = format!("direct({},{})", g.name(), h.name());
    build(&name, order, cap, labels, |x, y| {
        g.mul(x / m, y / m) * m + h.mul(x % m, y % m)
    })
}

/// The canonical isomorphism `Z(G) -> Z(H)` used by spec-built central
/// products: for cyclic centers the smallest-index generator of one is sent
/// to the smallest-index generator of the other; otherwise any isomorphism
/// found by search.
pub fn canonical_center_map(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<(usize, usize)>, GroupError> {
    let zg = g.center();
    let zh = h.center();
    if zg.len() != zh.len() {
        return Err(GroupError::CentersNotIsomorphic);
    }
    let z = zg.len();
    let generator = |grp: &FiniteGroup, members: &[usize]| {
        members.iter().copied().find(|&x| grp.element_order(x) == z)
    };
    if let (Some(a), Some(b)) = (generator(g, zg.members()), generator(h, zh.members())) {
        return Ok((0..z).map(|k| (g.pow(a, k), h.pow(b, k))).collect());
    }
    if generator(g, zg.members()).is_some() != generator(h, zh.members()).is_some() {
        return Err(GroupError::CentersNotIsomorphic);
    }
    let (cg, emb_g) = g.subgroup_as_group(&zg)?;
    let (ch, emb_h) = h.subgroup_as_group(&zh)?;
    let iso = group_isomorphic(&cg, &ch)?.ok_or(GroupError::CentersNotIsomorphic)?;
    Ok((0..z).map(|i| (emb_g[i], emb_h[iso.apply(i)])).collect())
}

/// Central product `(G × H) / {(z, θ(z)⁻¹) : z ∈ Z(G)}`.
///
/// Elements are pairs `(g, t)` with `t` running over the canonical
/// transversal of `Z(H)`; index `g |T| + pos(t)`. The direct product is never
/// materialized, so the cap applies to the quotient order only.
pub fn central_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    theta: &[(usize, usize)],
) -> Result<FiniteGroup, GroupError> {
    central_product_capped(g, h, theta, DEFAULT_MAX_ORDER)
}

pub fn central_product_capped(
    g: &FiniteGroup,
    h: &FiniteGroup,
    theta: &[(usize, usize)],
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    let zg = g.center();
    let zh = h.center();
    if zg.len() != zh.len() {
        return Err(GroupError::CentersNotIsomorphic);
    }
    // θ must be a bijective homomorphism Z(G) -> Z(H).
    let mut fwd = alloc::vec![usize::MAX; g.order()];
    let mut back = alloc::vec![usize::MAX; h.order()];
    for &(a, b) in theta {
        if !zg.contains(a) || !zh.contains(b) || fwd[a] != usize::MAX || back[b] != usize::MAX {
            return Err(GroupError::NotIsomorphism);
        }
        fwd[a] = b;
        back[b] = a;
    }
    if theta.len() != zg.len() {
        return Err(GroupError::NotIsomorphism);
    }
    for a in zg.iter() {
        for b in zg.iter() {
            if fwd[g.mul(a, b)] != h.mul(fwd[a], fwd[b]) {
                return Err(GroupError::NotIsomorphism);
            }
        }
    }

    let cosets = h.left_cosets(&zh);
    let reps = &cosets.representatives;
    let t = reps.len();
    let order = g.order().checked_mul(t).ok_or(GroupError::OrderCapExceeded { order: usize::MAX, cap })?;
    let labels = (0..order)
        .map(|e| format!("({},{})", g.label(e / t), h.label(reps[e % t])))
        .collect();
    let name = format!("central({},{})", g.name(), h.name());
    build(&name, order, cap, labels, |x, y| {
        let (g1, t1) = (x / t, reps[x % t]);
        let (g2, t2) = (y / t, reps[y % t]);
        let prod = h.mul(t1, t2);
        let coset = cosets.index_of[prod];
        let w = h.mul(h.inv(reps[coset]), prod);
        g.mul(g.mul(g1, g2), back[w]) * t + coset
    })
}

/// Central product with the canonical center identification.
pub fn central_product_canonical(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup, GroupError> {
    let theta = canonical_center_map(g, h)?;
    central_product_capped(g, h, &theta, cap)
}

/// Extraspecial group of order `p^(2n+1)`: for `p = 2` an iterated central
/// product of `D_8` factors (one of them replaced by `Q_8` for the minus
/// type); for odd `p` an iterated central product of Heisenberg groups.
pub fn extraspecial(p: usize, n: usize, kind: ExtraspecialType) -> Result<FiniteGroup, GroupError> {
    extraspecial_capped(p, n, kind, DEFAULT_MAX_ORDER)
}

pub fn extraspecial_capped(
    p: usize,
    n: usize,
    kind: ExtraspecialType,
    cap: usize,
) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p));
    }
    if n == 0 {
        return Err(GroupError::OrderTooSmall { order: p, min: p * p * p });
    }
    if p != 2 && kind == ExtraspecialType::Minus {
        return Err(GroupError::UnsupportedType);
    }
    let order = u32::try_from(2 * n + 1)
        .ok()
        .and_then(|e| checked_pow(p, e))
        .ok_or(GroupError::OrderCapExceeded { order: usize::MAX, cap })?;
    if order > cap {
        return Err(GroupError::OrderCapExceeded { order, cap });
    }
    let base = if p == 2 { dihedral(8)? } else { heisenberg_mod_p(p)? };
    let last = if p == 2 && kind == ExtraspecialType::Minus { quaternion8()? } else { base.clone() };
    let mut acc = if n == 1 { last.clone() } else { base.clone() };
    for i in 1..n {
        let factor = if i + 1 == n { &last } else { &base };
        acc = central_product_canonical(&acc, factor, cap)?;
    }
    Ok(acc.with_name(&format!("extraspecial:p={p},n={n},type={}", kind.sign())))
}

/// `G' = Z(G) = Φ(G)` with `|Z(G)|` prime. Requires a `p`-group.
pub fn is_extraspecial(g: &FiniteGroup) -> Result<bool, GroupError> {
    let p = g.p_group_prime().ok_or(GroupError::NotPGroup { order: g.order() })?;
    let z = g.center();
    if z.len() != p {
        return Ok(false);
    }
    Ok(g.derived_subgroup() == z && g.frattini_p_group(p)? == z)
}
