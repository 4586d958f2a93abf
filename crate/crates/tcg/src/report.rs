use serde::{Deserialize, Serialize};

use tcg_core::arith::is_prime;
use tcg_core::classification::{
    check_disconnected_srg, check_gamma_srg, check_mkn_characterization, check_p_cubed, check_theorem_a,
    ito_decomposition, ClassificationError, Verdict,
};
use tcg_core::graph::ComponentInfo;
use tcg_core::isoclinism::IsoclinismWitness;
use tcg_core::srg::{classify_connectivity, srg_params, srg_spectrum, Connectivity, SrgParams};
use tcg_core::{gamma, transversal_graph, FiniteGroup, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
    pub center_size: usize,
    pub derived_size: usize,
    pub abelian: bool,
    pub conjugate_type: Vec<usize>,
}

/// Eigenvalues and multiplicities are exact rationals written as `a` or `a/b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumSummary {
    pub gamma: i64,
    pub eigenvalues: Option<(String, String)>,
    pub multiplicities: Option<(String, String)>,
    pub half_case: bool,
    pub feasible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    /// `(degree, how many vertices)`, ascending by degree.
    pub degree_counts: Vec<(usize, usize)>,
    pub connected: bool,
    pub components: Vec<ComponentInfo>,
    /// `(m, n)` when the graph is `mK_n`.
    pub union_form: Option<(usize, usize)>,
    pub srg: Option<SrgParams>,
    pub connectivity: Option<Connectivity>,
    pub spectrum: Option<SpectrumSummary>,
    /// Set when the parameters fail a feasibility identity.
    pub srg_error: Option<String>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        let mut degree_counts: Vec<(usize, usize)> = Vec::new();
        let mut degrees = g.degrees();
        degrees.sort_unstable();
        for d in degrees {
            match degree_counts.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => degree_counts.push((d, 1)),
            }
        }
        let srg = srg_params(g);
        let mut srg_error = None;
        let connectivity = srg.and_then(|p| classify_connectivity(g, &p).map_err(|e| srg_error = Some(e.to_string())).ok());
        let spectrum = srg.and_then(|p| match srg_spectrum(&p) {
            Ok(s) => Some(SpectrumSummary {
                gamma: s.gamma,
                eigenvalues: s.eigenvalues.map(|(r, s)| (r.to_string(), s.to_string())),
                multiplicities: s.multiplicities.map(|(a, b)| (a.to_string(), b.to_string())),
                half_case: s.half_case,
                feasible: s.feasible,
            }),
            Err(e) => {
                srg_error.get_or_insert(e.to_string());
                None
            }
        });
        GraphSummary {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            degree_counts,
            connected: g.is_connected(),
            components: g.components().summary,
            union_form: g.disjoint_union_form(),
            srg,
            connectivity,
            spectrum,
            srg_error,
        }
    }
}

/// One classification check on one group. `violation` holds the diagnosis
/// when the graph and algebra sides disagree; `skipped` when the check does
/// not apply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub check: String,
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph_side: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra_side: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<SrgParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<IsoclinismWitness>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
}

impl VerdictRecord {
    pub fn from_result(check: &str, group: &str, r: Result<Verdict, ClassificationError>) -> Self {
        let blank = VerdictRecord {
            check: check.to_string(),
            group: group.to_string(),
            graph_side: None,
            algebra_side: None,
            params: None,
            form: None,
            witness: None,
            notes: Vec::new(),
            violation: None,
            skipped: None,
        };
        let filled = |v: Verdict| VerdictRecord {
            graph_side: Some(v.graph_side),
            algebra_side: Some(v.algebra_side),
            params: v.params,
            form: v.form,
            witness: v.witness,
            notes: v.notes,
            ..blank.clone()
        };
        match r {
            Ok(v) => filled(v),
            Err(ClassificationError::TheoremViolation(v)) => {
                let message = ClassificationError::TheoremViolation(v.clone()).to_string();
                VerdictRecord { violation: Some(message), ..filled(*v) }
            }
            Err(e) => VerdictRecord { skipped: Some(e.to_string()), ..blank },
        }
    }

    pub fn is_violation(&self) -> bool {
        self.violation.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ItoSummary {
    pub prime: usize,
    pub abelian_order: usize,
    pub sylow_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub group: GroupSummary,
    /// `T(G)`; absent for abelian groups.
    pub transversal_graph: Option<GraphSummary>,
    /// `Γ(G)`; absent for abelian groups.
    pub commuting_graph: Option<GraphSummary>,
    pub ito: Option<ItoSummary>,
    pub verdicts: Vec<VerdictRecord>,
    pub notes: Vec<String>,
}

impl AnalysisReport {
    pub fn has_violation(&self) -> bool {
        self.verdicts.iter().any(VerdictRecord::is_violation)
    }
}

/// Every classification check that applies to `g`. The order-`p³` check runs
/// for each prime `p` dividing `|G|` with `p³ ≤ |G|`.
pub fn run_checks(g: &FiniteGroup) -> Vec<VerdictRecord> {
    let name = g.name();
    let mut out = vec![
        VerdictRecord::from_result("theorem-a", name, check_theorem_a(g)),
        VerdictRecord::from_result("mkn-characterization", name, check_mkn_characterization(g)),
        VerdictRecord::from_result("disconnected-srg", name, check_disconnected_srg(g)),
        VerdictRecord::from_result("gamma-srg", name, check_gamma_srg(g)),
    ];
    let n = g.order();
    for p in (2..=n).take_while(|p| p * p * p <= n).filter(|&p| is_prime(p) && n % p == 0) {
        out.push(VerdictRecord::from_result(&format!("p-cubed:{p}"), name, check_p_cubed(g, p)));
    }
    out
}

pub fn analyze(g: &FiniteGroup) -> AnalysisReport {
    let group = GroupSummary {
        name: g.name().to_string(),
        order: g.order(),
        center_size: g.center().len(),
        derived_size: g.derived_subgroup().len(),
        abelian: g.is_abelian(),
        conjugate_type: g.conjugate_type(),
    };
    if group.abelian {
        return AnalysisReport {
            group,
            transversal_graph: None,
            commuting_graph: None,
            ito: None,
            verdicts: Vec::new(),
            notes: vec!["abelian group: the commuting graphs have no vertices".to_string()],
        };
    }
    let t = transversal_graph(g).expect("non-abelian");
    let gm = gamma(g).expect("non-abelian");
    let mut notes = Vec::new();
    let ito = if group.conjugate_type.len() == 2 {
        match ito_decomposition(g) {
            Ok(d) => Some(ItoSummary { prime: d.prime, abelian_order: d.abelian.len(), sylow_order: d.sylow.len() }),
            Err(e) => {
                notes.push(format!("Ito decomposition: {e}"));
                None
            }
        }
    } else {
        None
    };
    AnalysisReport {
        group,
        transversal_graph: Some(GraphSummary::of(&t.graph)),
        commuting_graph: Some(GraphSummary::of(&gm.graph)),
        ito,
        verdicts: run_checks(g),
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tcg_core::constructions::{cyclic, m3};

    #[test]
    fn m3_report() {
        let r = analyze(&m3().unwrap());
        assert_eq!(r.transversal_graph.as_ref().unwrap().union_form, Some((4, 2)));
        assert_eq!(r.commuting_graph.as_ref().unwrap().union_form, Some((4, 6)));
        let p3 = r.verdicts.iter().find(|v| v.check == "p-cubed:3").unwrap();
        assert_eq!((p3.graph_side, p3.algebra_side), (Some(true), Some(true)));
        assert!(!r.has_violation());
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<AnalysisReport>(&text).unwrap(), r);
    }

    #[test]
    fn abelian_report_has_no_graphs() {
        let r = analyze(&cyclic(6).unwrap());
        assert!(r.group.abelian);
        assert!(r.transversal_graph.is_none() && r.verdicts.is_empty());
    }
}
