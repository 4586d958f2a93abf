//! Strong regularity: parameter detection, the counting identity
//! `μ(v−k−1) = k(k−λ−1)`, eigenvalue multiplicities in exact rational
//! arithmetic, and the structure of disconnected strongly regular graphs.

use core::fmt;

use num_integer::Roots;
use num_rational::Ratio;

use crate::graph::Graph;

pub type Rational = Ratio<i64>;

/// `(v, k, λ, μ)` with `0 < k < v − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub const fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Self {
        SrgParams { v, k, lambda, mu }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Why a graph is or is not strongly regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgStatus {
    Strong(SrgParams),
    NotRegular,
    /// Regular, but `k = 0` or `k = v − 1`.
    OutsideWindow { k: usize },
    /// Two adjacent pairs `(x, y, common)` with different common counts.
    LambdaNotConstant { first: (usize, usize, usize), second: (usize, usize, usize) },
    /// Two non-adjacent pairs with different common counts.
    MuNotConstant { first: (usize, usize, usize), second: (usize, usize, usize) },
}

pub fn srg_status(g: &Graph) -> SrgStatus {
    let v = g.vertex_count();
    let Some(k) = g.is_regular() else {
        return SrgStatus::NotRegular;
    };
    if k == 0 || k + 1 >= v {
        return SrgStatus::OutsideWindow { k };
    }
    let mut lambda: Option<(usize, usize, usize)> = None;
    let mut mu: Option<(usize, usize, usize)> = None;
    for x in 0..v {
        for y in x + 1..v {
            let c = g.common_neighbors(x, y);
            let slot = if g.has_edge(x, y) { &mut lambda } else { &mut mu };
            match slot {
                None => *slot = Some((x, y, c)),
                Some(first) if first.2 != c => {
                    let (first, second) = (*first, (x, y, c));
                    return if g.has_edge(x, y) {
                        SrgStatus::LambdaNotConstant { first, second }
                    } else {
                        SrgStatus::MuNotConstant { first, second }
                    };
                }
                _ => {}
            }
        }
    }
    // 0 < k < v−1 guarantees at least one pair of each kind.
    let (lambda, mu) = (lambda.map_or(0, |t| t.2), mu.map_or(0, |t| t.2));
    SrgStatus::Strong(SrgParams::new(v as u64, k as u64, lambda as u64, mu as u64))
}

pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    match srg_status(g) {
        SrgStatus::Strong(p) => Some(p),
        _ => None,
    }
}

/// `μ(v−k−1) = k(k−λ−1)`, evaluated over signed integers.
pub fn check_parameter_identity(p: &SrgParams) -> bool {
    let (v, k, l, m) = (p.v as i128, p.k as i128, p.lambda as i128, p.mu as i128);
    m * (v - k - 1) == k * (k - l - 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgError {
    IdentityFails(SrgParams),
    NegativeGamma(i64),
    /// The graph's connectivity disagrees with its parameters.
    LemmaViolation { params: SrgParams, conditions: [bool; 4] },
}

impl fmt::Display for SrgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrgError::IdentityFails(p) => write!(f, "parameters {p} violate mu(v-k-1) = k(k-lambda-1)"),
            SrgError::NegativeGamma(g) => write!(f, "gamma = {g} is negative"),
            SrgError::LemmaViolation { params, conditions } => write!(
                f,
                "disconnected/mu=0/lambda=k-1/mK_(k+1) disagree for {params}: {conditions:?}"
            ),
        }
    }
}

impl core::error::Error for SrgError {}

/// Eigenvalue data of a strongly regular parameter set.
///
/// The restricted eigenvalues are `r, s = ((λ−μ) ± √γ)/2` with
/// `γ = (μ−λ)² + 4(k−μ)`; their multiplicities are
/// `m₁, m₂ = ½[(v−1) ∓ (2k + (v−1)(λ−μ))/√γ]`. When `√γ` is irrational
/// the multiplicities are rational only if the numerator vanishes, in which
/// case both equal `(v−1)/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrgSpectrum {
    pub gamma: i64,
    pub sqrt_gamma: Option<i64>,
    /// `(r, s)` when `√γ` is an integer.
    pub eigenvalues: Option<(Rational, Rational)>,
    /// `(m₁, m₂)` when rational.
    pub multiplicities: Option<(Rational, Rational)>,
    /// Multiplicities forced equal because `2k + (v−1)(λ−μ) = 0` or `γ = 0`.
    pub half_case: bool,
    /// Both multiplicities are non-negative integers.
    pub feasible: bool,
}

impl SrgSpectrum {
    /// `k + m₁ r + m₂ s`, when eigenvalues and multiplicities are rational.
    pub fn trace(&self, k: u64) -> Option<Rational> {
        let (r, s) = self.eigenvalues?;
        let (m1, m2) = self.multiplicities?;
        Some(Rational::from_integer(k as i64) + m1 * r + m2 * s)
    }
}

pub fn srg_spectrum(p: &SrgParams) -> Result<SrgSpectrum, SrgError> {
    if !check_parameter_identity(p) {
        return Err(SrgError::IdentityFails(*p));
    }
    let (v, k, l, m) = (p.v as i64, p.k as i64, p.lambda as i64, p.mu as i64);
    let gamma = (m - l) * (m - l) + 4 * (k - m);
    if gamma < 0 {
        return Err(SrgError::NegativeGamma(gamma));
    }
    let root = gamma.sqrt();
    let sqrt_gamma = (root * root == gamma).then_some(root);
    let numerator = 2 * k + (v - 1) * (l - m);
    let half = Rational::new(1, 2);
    let vm1 = Rational::from_integer(v - 1);

    let eigenvalues = sqrt_gamma.map(|s| {
        (Rational::new(l - m + s, 2), Rational::new(l - m - s, 2))
    });
    let half_case = numerator == 0 || gamma == 0;
    let multiplicities = if half_case {
        Some((vm1 * half, vm1 * half))
    } else {
        sqrt_gamma.map(|s| {
            let frac = Rational::new(numerator, s);
            (half * (vm1 - frac), half * (vm1 + frac))
        })
    };
    let feasible = multiplicities.is_some_and(|(a, b)| {
        a.is_integer() && b.is_integer() && a >= Rational::from_integer(0) && b >= Rational::from_integer(0)
    });
    Ok(SrgSpectrum { gamma, sqrt_gamma, eigenvalues, multiplicities, half_case, feasible })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Connectivity {
    Connected,
    /// `copies` disjoint copies of `K_clique_size`, `clique_size = k + 1`.
    Disconnected { copies: usize, clique_size: usize },
}

/// The four conditions that coincide for a strongly regular graph:
/// disconnected, `μ = 0`, `λ = k − 1`, and `g ≅ mK_{k+1}` with `m > 1`.
pub fn disconnection_conditions(g: &Graph, p: &SrgParams) -> [bool; 4] {
    let disconnected = !g.is_connected();
    let mu_zero = p.mu == 0;
    let lambda_full = p.lambda + 1 == p.k;
    let cliques = matches!(g.disjoint_union_form(), Some((m, n)) if m > 1 && n as u64 == p.k + 1);
    [disconnected, mu_zero, lambda_full, cliques]
}

pub fn classify_connectivity(g: &Graph, p: &SrgParams) -> Result<Connectivity, SrgError> {
    let conditions = disconnection_conditions(g, p);
    if conditions.iter().any(|&c| c != conditions[0]) {
        return Err(SrgError::LemmaViolation { params: *p, conditions });
    }
    if conditions[0] {
        let clique_size = p.k as usize + 1;
        Ok(Connectivity::Disconnected { copies: g.vertex_count() / clique_size, clique_size })
    } else {
        Ok(Connectivity::Connected)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn identity_examples() {
        assert!(check_parameter_identity(&SrgParams::new(15, 6, 1, 3)));
        assert!(check_parameter_identity(&SrgParams::new(24, 5, 4, 0)));
        assert!(!check_parameter_identity(&SrgParams::new(10, 3, 0, 2)));
    }

    #[test]
    fn window_excludes_complete_and_edgeless() {
        assert_eq!(srg_params(&Graph::complete(5)), None);
        assert_eq!(srg_status(&Graph::complete(5)), SrgStatus::OutsideWindow { k: 4 });
        assert_eq!(srg_status(&Graph::edgeless(3)), SrgStatus::OutsideWindow { k: 0 });
        assert_eq!(srg_params(&Graph::union_of_cliques(4, 6)), Some(SrgParams::new(24, 5, 4, 0)));
    }

    #[test]
    fn spectrum_of_15_6_1_3() {
        let s = srg_spectrum(&SrgParams::new(15, 6, 1, 3)).unwrap();
        assert_eq!(s.gamma, 16);
        assert_eq!(s.eigenvalues, Some((r(1), r(-3))));
        assert_eq!(s.multiplicities, Some((r(9), r(5))));
        assert!(s.feasible);
        assert_eq!(s.trace(6), Some(r(0)));
    }

    #[test]
    fn pentagon_is_half_case() {
        let s = srg_spectrum(&SrgParams::new(5, 2, 0, 1)).unwrap();
        assert_eq!(s.gamma, 5);
        assert_eq!(s.sqrt_gamma, None);
        assert!(s.half_case);
        assert_eq!(s.multiplicities, Some((r(2), r(2))));
        assert!(s.feasible);
    }

    #[test]
    fn identity_failure_is_an_error() {
        assert!(matches!(srg_spectrum(&SrgParams::new(10, 3, 0, 2)), Err(SrgError::IdentityFails(_))));
    }

    #[test]
    fn disconnected_structure() {
        let g = Graph::union_of_cliques(3, 2);
        let p = srg_params(&g).unwrap();
        assert_eq!(p, SrgParams::new(6, 1, 0, 0));
        assert_eq!(
            classify_connectivity(&g, &p).unwrap(),
            Connectivity::Disconnected { copies: 3, clique_size: 2 }
        );
    }
}
