//! Verdicts that compare a graph-theoretic property of `T(G)` or `Γ(G)`
//! with the algebraic condition that is supposed to characterize it.
//!
//! Each check computes both sides independently. Disagreement is reported
//! as [`ClassificationError::TheoremViolation`], which always points at a
//! defect in this crate rather than in the mathematics.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{is_prime, prime_power};
use crate::commuting::{gamma, transversal_graph, CommutingError};
use crate::constructions::{extraspecial, ExtraspecialType};
use crate::group::{ElementSubset, FiniteGroup, GroupError};
use crate::isoclinism::{search_isoclinism, IsoclinismError, IsoclinismWitness, DEFAULT_QUOTIENT_BOUND};
use crate::srg::{classify_connectivity, srg_params, SrgParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum CheckKind {
    TheoremA,
    MknCharacterization,
    DisconnectedSrg,
    GammaSrg,
    PCubed,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::TheoremA => "theorem-a",
            CheckKind::MknCharacterization => "mkn-characterization",
            CheckKind::DisconnectedSrg => "disconnected-srg",
            CheckKind::GammaSrg => "gamma-srg",
            CheckKind::PCubed => "p-cubed",
        }
    }
}

/// Outcome of one check on one group.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Verdict {
    pub check: CheckKind,
    pub group: String,
    pub graph_side: bool,
    pub algebra_side: bool,
    pub params: Option<SrgParams>,
    /// `(m, n)` when the graph in question is `mK_n`.
    pub form: Option<(usize, usize)>,
    pub witness: Option<IsoclinismWitness>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(check: CheckKind, g: &FiniteGroup) -> Self {
        Verdict {
            check,
            group: g.name().into(),
            graph_side: false,
            algebra_side: false,
            params: None,
            form: None,
            witness: None,
            notes: Vec::new(),
        }
    }

    fn violation(mut self, note: String) -> ClassificationError {
        self.notes.push(note);
        ClassificationError::TheoremViolation(Box::new(self))
    }

    fn settle(self) -> Result<Verdict, ClassificationError> {
        if self.graph_side == self.algebra_side {
            Ok(self)
        } else {
            let note = format!("graph side {} but algebra side {}", self.graph_side, self.algebra_side);
            Err(self.violation(note))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassificationError {
    NTooSmall(u32),
    NTooLarge(u32),
    AbelianGroup,
    NotConjugateTypeTwo(Vec<usize>),
    DecompositionNotFound(&'static str),
    TheoremViolation(Box<Verdict>),
    Group(GroupError),
    Commuting(CommutingError),
    Isoclinism(IsoclinismError),
}

impl fmt::Display for ClassificationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationError::NTooSmall(n) => write!(f, "n = {n} is below 2"),
            ClassificationError::NTooLarge(n) => write!(f, "n = {n} overflows the parameter range"),
            ClassificationError::AbelianGroup => write!(f, "group is abelian"),
            ClassificationError::NotConjugateTypeTwo(cs) => {
                write!(f, "conjugate type {cs:?} is not of the form {{1, m}}")
            }
            ClassificationError::DecompositionNotFound(why) => write!(f, "no A x P decomposition: {why}"),
            ClassificationError::TheoremViolation(v) => {
                write!(f, "{} violated on {}: {}", v.check.name(), v.group, v.notes.join("; "))
            }
            ClassificationError::Group(e) => write!(f, "{e}"),
            ClassificationError::Commuting(e) => write!(f, "{e}"),
            ClassificationError::Isoclinism(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ClassificationError {}

impl From<GroupError> for ClassificationError {
    fn from(e: GroupError) -> Self {
        ClassificationError::Group(e)
    }
}

impl From<CommutingError> for ClassificationError {
    fn from(e: CommutingError) -> Self {
        match e {
            CommutingError::AbelianGroup => ClassificationError::AbelianGroup,
            other => ClassificationError::Commuting(other),
        }
    }
}

impl From<IsoclinismError> for ClassificationError {
    fn from(e: IsoclinismError) -> Self {
        ClassificationError::Isoclinism(e)
    }
}

/// `(2^{2n} − 1, 2^{2n−1} − 2, 2^{2n−2} − 3, 2^{2n−2} − 1)`.
pub fn theorem_a_parameters(n: u32) -> Result<SrgParams, ClassificationError> {
    if n < 2 {
        return Err(ClassificationError::NTooSmall(n));
    }
    if 2 * n >= 64 {
        return Err(ClassificationError::NTooLarge(n));
    }
    let q = 1u64 << (2 * n - 2);
    Ok(SrgParams::new(4 * q - 1, 2 * q - 2, q - 3, q - 1))
}

/// `p` when the conjugate type is `{1, p}` with `p` prime.
pub fn is_type_1p(g: &FiniteGroup) -> Option<usize> {
    match g.conjugate_type().as_slice() {
        &[1, p] if is_prime(p) => Some(p),
        _ => None,
    }
}

fn require_nonabelian(g: &FiniteGroup) -> Result<(), ClassificationError> {
    if g.is_abelian() {
        Err(ClassificationError::AbelianGroup)
    } else {
        Ok(())
    }
}

/// `[C_G(x) : Z(G)]` when it is the same for every non-central `x`, and
/// whether every such centralizer is abelian.
fn centralizer_profile(g: &FiniteGroup) -> (Option<usize>, bool) {
    let z = g.center();
    let mut index = None;
    let mut constant = true;
    let mut abelian = true;
    for x in (0..g.order()).filter(|&x| !z.contains(x)) {
        let c = g.centralizer(x);
        let i = c.len() / z.len();
        match index {
            None => index = Some(i),
            Some(j) if j != i => constant = false,
            _ => {}
        }
        if abelian && !c.iter().all(|a| c.iter().all(|b| g.commutes(a, b))) {
            abelian = false;
        }
    }
    (index.filter(|_| constant), abelian)
}

/// `T(G)` is a connected strongly regular graph exactly when
/// `cs(G) = {1, 2}` and `[G:Z(G)] ≥ 16`; the parameters are then those of
/// [`theorem_a_parameters`] with `2^{2n} = [G:Z(G)]`. When the index is at
/// most 64 the group is additionally matched against an extraspecial
/// 2-group by isoclinism search.
pub fn check_theorem_a(g: &FiniteGroup) -> Result<Verdict, ClassificationError> {
    require_nonabelian(g)?;
    let mut v = Verdict::new(CheckKind::TheoremA, g);
    let t = transversal_graph(g)?;
    v.params = srg_params(&t.graph);
    if let Some(p) = v.params {
        if let Err(e) = classify_connectivity(&t.graph, &p) {
            return Err(v.violation(format!("{e}")));
        }
    }
    v.graph_side = v.params.is_some() && t.graph.is_connected();

    let index = g.order() / g.center().len();
    v.algebra_side = g.conjugate_type() == [1, 2] && index >= 16;
    let v = v.settle()?;
    if !v.algebra_side {
        return Ok(v);
    }
    let mut v = v;
    let n = match prime_power(index) {
        Some((2, e)) if e % 2 == 0 => e / 2,
        _ => return Err(v.violation(format!("[G:Z] = {index} is not an even power of 2"))),
    };
    let expected = theorem_a_parameters(n)?;
    if v.params != Some(expected) {
        let note = format!("expected parameters {expected}, found {:?}", v.params);
        return Err(v.violation(note));
    }
    if index <= DEFAULT_QUOTIENT_BOUND {
        let target = extraspecial(2, n as usize, ExtraspecialType::Plus)?;
        match search_isoclinism(g, &target)? {
            Some(w) => v.witness = Some(w),
            None => return Err(v.violation("not isoclinic to an extraspecial 2-group".into())),
        }
    } else {
        v.notes.push(format!("isoclinism cross-check skipped: [G:Z] = {index} above bound"));
    }
    Ok(v)
}

/// `T(G) ≅ mK_n` exactly when every non-central centralizer is abelian with
/// `[C_G(x) : Z(G)] = n + 1`, and then `mn = [G:Z(G)] − 1`.
pub fn check_mkn_characterization(g: &FiniteGroup) -> Result<Verdict, ClassificationError> {
    require_nonabelian(g)?;
    let mut v = Verdict::new(CheckKind::MknCharacterization, g);
    let t = transversal_graph(g)?;
    v.form = t.graph.disjoint_union_form();
    v.graph_side = v.form.is_some();

    let index = g.order() / g.center().len();
    let (c, abelian) = centralizer_profile(g);
    let predicted = match c {
        Some(c) if abelian => {
            let n = c - 1;
            ((index - 1) % n == 0).then(|| ((index - 1) / n, n))
        }
        _ => None,
    };
    v.algebra_side = predicted.is_some();
    let v = v.settle()?;
    if v.form != predicted {
        let note = format!("graph is {:?}, centralizers predict {predicted:?}", v.form);
        return Err(v.violation(note));
    }
    if let Some((m, _)) = v.form {
        if m < 3 {
            return Err(v.violation(format!("only {m} components")));
        }
    }
    Ok(v)
}

/// `T(G)` is a disconnected strongly regular graph exactly when every
/// non-central centralizer is abelian with constant `[C_G(x) : Z(G)] = r`
/// for some `r ≥ 3`.
pub fn check_disconnected_srg(g: &FiniteGroup) -> Result<Verdict, ClassificationError> {
    require_nonabelian(g)?;
    let mut v = Verdict::new(CheckKind::DisconnectedSrg, g);
    let t = transversal_graph(g)?;
    v.params = srg_params(&t.graph);
    v.form = t.graph.disjoint_union_form();
    v.graph_side = v.params.is_some() && !t.graph.is_connected();
    let (c, abelian) = centralizer_profile(g);
    v.algebra_side = abelian && c.is_some_and(|r| r >= 3);
    let v = v.settle()?;
    if v.graph_side {
        match v.form {
            Some((m, _)) if m >= 3 => {}
            other => return Err(v.violation(format!("expected at least 3 cliques, found {other:?}"))),
        }
    }
    Ok(v)
}

/// `Γ(G)` is strongly regular exactly when it is `mK_s` with
/// `s = ([C_G(x) : Z(G)] − 1)|Z(G)|` for every non-central `x`. Each
/// clique must then be a union of `[C_G(x) : Z(G)] − 1` non-trivial cosets
/// of the center.
pub fn check_gamma_srg(g: &FiniteGroup) -> Result<Verdict, ClassificationError> {
    require_nonabelian(g)?;
    let mut v = Verdict::new(CheckKind::GammaSrg, g);
    let gm = gamma(g)?;
    v.params = srg_params(&gm.graph);
    v.graph_side = v.params.is_some();
    v.form = gm.graph.disjoint_union_form();

    let z = g.center();
    let (c, _) = centralizer_profile(g);
    let predicted_s = c.map(|c| (c - 1) * z.len());
    v.algebra_side = match (v.form, predicted_s) {
        (Some((m, s)), Some(ps)) => s == ps && s > 1 && m * s == g.order() - z.len(),
        _ => false,
    };
    let v = v.settle()?;
    if v.algebra_side {
        let n = c.unwrap_or(0) - 1;
        let cosets = g.left_cosets(&z);
        for part in gm.graph.components().partition {
            let elements: Vec<usize> = part.iter().map(|&i| gm.vertex_elements[i]).collect();
            let mut hit: Vec<usize> = elements.iter().map(|&x| cosets.index_of[x]).collect();
            hit.sort_unstable();
            hit.dedup();
            let whole = hit.len() * z.len() == elements.len();
            if !whole || hit.len() != n {
                let note = format!("component of size {} is not a union of {n} cosets", elements.len());
                return Err(v.violation(note));
            }
        }
    }
    Ok(v)
}

/// `T(G) ≅ (p+1)K_{p−1}` exactly when `G` is isoclinic to an extraspecial
/// group of order `p³`.
pub fn check_p_cubed(g: &FiniteGroup, p: usize) -> Result<Verdict, ClassificationError> {
    require_nonabelian(g)?;
    if !is_prime(p) {
        return Err(GroupError::NotPrime(p).into());
    }
    let mut v = Verdict::new(CheckKind::PCubed, g);
    let t = transversal_graph(g)?;
    v.form = t.graph.disjoint_union_form();
    v.graph_side = v.form == Some((p + 1, p - 1));
    let target = extraspecial(p, 1, ExtraspecialType::Plus)?;
    v.witness = search_isoclinism(g, &target)?;
    v.algebra_side = v.witness.is_some();
    v.settle()
}

/// `G = A × P` with `A` abelian and `P` a Sylow `p`-subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItoDecomposition {
    pub prime: usize,
    pub abelian: ElementSubset,
    pub sylow: ElementSubset,
}

/// Splits a group of conjugate type `{1, m}` as `A × P`. `P` is a Sylow
/// subgroup for the prime dividing `m`; `A` is generated by the elements
/// of `C_G(P)` of order prime to `p`.
pub fn ito_decomposition(g: &FiniteGroup) -> Result<ItoDecomposition, ClassificationError> {
    let cs = g.conjugate_type();
    let m = match cs.as_slice() {
        &[1, m] => m,
        _ => return Err(ClassificationError::NotConjugateTypeTwo(cs)),
    };
    let (prime, _) = prime_power(m).ok_or(ClassificationError::DecompositionNotFound("m is not a prime power"))?;
    let sylow = g.sylow_subgroup(prime)?;
    let centralizes_p = |x: usize| sylow.iter().all(|y| g.commutes(x, y));
    let coprime = (0..g.order()).filter(|&x| g.element_order(x) % prime != 0 && centralizes_p(x));
    let abelian = g.subgroup_closure(coprime);

    let fail = ClassificationError::DecompositionNotFound;
    if abelian.len() * sylow.len() != g.order() {
        return Err(fail("|A||P| != |G|"));
    }
    if abelian.intersection(&sylow).len() != 1 {
        return Err(fail("A and P intersect"));
    }
    if !abelian.iter().all(|a| abelian.iter().all(|b| g.commutes(a, b))) {
        return Err(fail("A is not abelian"));
    }
    if !abelian.iter().all(centralizes_p) {
        return Err(fail("A does not centralize P"));
    }
    let (p_group, _) = g.subgroup_as_group(&sylow)?;
    if p_group.conjugate_type() != cs {
        return Err(fail("cs(P) differs from cs(G)"));
    }
    Ok(ItoDecomposition { prime, abelian, sylow })
}

/// For each non-central `x`, `C_G(x)` determines the coset `xZ(G)`: returns
/// a pair in distinct cosets with equal centralizers, if any.
pub fn equal_centralizer_pair(g: &FiniteGroup) -> Option<(usize, usize)> {
    let z = g.center();
    let cosets = g.left_cosets(&z);
    let reps: Vec<usize> = cosets.representatives.iter().copied().filter(|&r| !z.contains(r)).collect();
    let cents: Vec<ElementSubset> = reps.iter().map(|&r| g.centralizer(r)).collect();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if cents[i] == cents[j] {
                return Some((reps[i], reps[j]));
            }
        }
    }
    None
}
