use tcg_core::classification::{check_gamma_srg, check_p_cubed, check_theorem_a};
use tcg_core::commuting::expand_transversal_graph;
use tcg_core::constructions::{
    cyclic, dihedral, direct_product, extraspecial, group_j, heisenberg_mod_p, is_extraspecial, m3, quaternion8,
    ExtraspecialType,
};
use tcg_core::graph_iso::graphs_isomorphic;
use tcg_core::group_iso::group_isomorphic;
use tcg_core::isoclinism::{commutator_map, search_isoclinism};
use tcg_core::srg::{classify_connectivity, srg_params, Connectivity, SrgParams};
use tcg_core::{gamma, transversal_graph, ElementSubset, FiniteGroup, Graph};

fn members(g: &FiniteGroup, labels: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = labels.iter().map(|l| g.element_by_label(l).unwrap()).collect();
    v.sort_unstable();
    v
}

fn k3_plus_i4() -> Graph {
    Graph::disjoint_union(&[Graph::complete(3), Graph::edgeless(4)])
}

#[test]
fn m3_graphs() {
    let g = m3().unwrap();
    assert_eq!(g.center().members(), members(&g, &["1", "c", "c^2"]));
    assert_eq!(g.derived_subgroup(), g.center());
    let (a, b) = (g.element_by_label("a").unwrap(), g.element_by_label("b").unwrap());
    assert_eq!(g.commutator(a, b), g.element_by_label("c").unwrap());
    assert_eq!(g.subgroup_closure([a, b]).len(), 27);

    let gm = gamma(&g).unwrap();
    assert_eq!(gm.graph.disjoint_union_form(), Some((4, 6)));
    assert!(graphs_isomorphic(&gm.graph, &Graph::union_of_cliques(4, 6)).unwrap().is_some());
    let t = transversal_graph(&g).unwrap();
    assert!(graphs_isomorphic(&t.graph, &Graph::union_of_cliques(4, 2)).unwrap().is_some());
    assert!(graphs_isomorphic(&expand_transversal_graph(&t.graph, 3), &gm.graph).unwrap().is_some());
}

#[test]
fn m3_transversal_from_the_text() {
    let g = m3().unwrap();
    let labels = ["1", "a", "a^2", "b", "b^2", "ab", "ab^2", "a^2b", "a^2b^2"];
    let t = ElementSubset::new(27, members(&g, &labels)).unwrap();
    assert!(g.is_transversal(&t, &g.center()));
}

#[test]
fn j_and_d16() {
    let j = group_j().unwrap();
    let d16 = dihedral(16).unwrap();
    assert_eq!(j.center().members(), members(&j, &["1", "a^2", "c^2", "a^2c^2"]));
    assert_eq!(d16.center().members(), members(&d16, &["1", "x^4"]));

    let tj = ElementSubset::new(32, members(&j, &["1", "a", "b", "c", "ab", "bc", "ac", "abc"]));
    let tj = tj.unwrap();
    assert!(j.is_transversal(&tj, &j.center()));
    let td = ElementSubset::new(16, members(&d16, &["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"])).unwrap();
    assert!(d16.is_transversal(&td, &d16.center()));

    let k3i4 = k3_plus_i4();
    for g in [&j, &d16] {
        let t = transversal_graph(g).unwrap();
        assert!(graphs_isomorphic(&t.graph, &k3i4).unwrap().is_some());
    }
    assert_eq!(search_isoclinism(&j, &d16).unwrap(), None);

    let c2 = cyclic(2).unwrap();
    let c2_cubed = direct_product(&direct_product(&c2, &c2).unwrap(), &c2).unwrap();
    let jq = j.quotient(&j.center()).unwrap().group;
    assert!(group_isomorphic(&jq, &c2_cubed).unwrap().is_some());
    let dq = d16.quotient(&d16.center()).unwrap().group;
    assert!(group_isomorphic(&dq, &dihedral(8).unwrap()).unwrap().is_some());
    assert!(group_isomorphic(&jq, &dq).unwrap().is_none());
}

#[test]
fn theorem_a_tuples() {
    for (n, expected) in [(2, SrgParams::new(15, 6, 1, 3)), (3, SrgParams::new(63, 30, 13, 15))] {
        for kind in [ExtraspecialType::Plus, ExtraspecialType::Minus] {
            let g = extraspecial(2, n, kind).unwrap();
            assert!(is_extraspecial(&g).unwrap());
            let t = transversal_graph(&g).unwrap();
            let p = srg_params(&t.graph).unwrap();
            assert_eq!(p, expected);
            assert_eq!(classify_connectivity(&t.graph, &p).unwrap(), Connectivity::Connected);
        }
    }
}

#[test]
fn theorem_a_on_a_times_p() {
    let g = direct_product(&cyclic(3).unwrap(), &extraspecial(2, 2, ExtraspecialType::Plus).unwrap()).unwrap();
    let v = check_theorem_a(&g).unwrap();
    assert!(v.graph_side && v.algebra_side);
    assert_eq!(v.params, Some(SrgParams::new(15, 6, 1, 3)));
    assert!(v.witness.is_some());
}

#[test]
fn gamma_components() {
    let v = check_gamma_srg(&m3().unwrap()).unwrap();
    assert!(v.graph_side);
    assert_eq!(v.form, Some((4, 6)));
    let v = check_gamma_srg(&dihedral(8).unwrap()).unwrap();
    assert_eq!(v.form, Some((3, 2)));
    assert!(!check_gamma_srg(&dihedral(16).unwrap()).unwrap().graph_side);
}

#[test]
fn order_p_cubed() {
    for (g, p) in [(m3().unwrap(), 3), (dihedral(8).unwrap(), 2), (quaternion8().unwrap(), 2), (heisenberg_mod_p(5).unwrap(), 5)] {
        let v = check_p_cubed(&g, p).unwrap();
        assert!(v.graph_side && v.algebra_side, "{}", g.name());
        assert_eq!(v.form, Some((p + 1, p - 1)));
    }
    let v = check_p_cubed(&extraspecial(2, 2, ExtraspecialType::Plus).unwrap(), 2).unwrap();
    assert!(!v.graph_side && !v.algebra_side);
}

#[test]
fn commutator_map_examples() {
    let g = m3().unwrap();
    let alpha = commutator_map(&g).unwrap();
    let e = |s: &str| g.element_by_label(s).unwrap();
    let (qa, qb) = (alpha.quotient.project(e("a")), alpha.quotient.project(e("b")));
    assert_eq!(alpha.get(qa, qb), e("c"));
    assert!((0..alpha.index()).all(|q| alpha.get(0, q) == 0));

    let d = dihedral(16).unwrap();
    let alpha = commutator_map(&d).unwrap();
    let e = |s: &str| d.element_by_label(s).unwrap();
    let (qx, qy) = (alpha.quotient.project(e("x")), alpha.quotient.project(e("y")));
    assert_eq!(alpha.get(qx, qy), e("x^2"));
    assert_eq!(alpha.get(qy, qx), e("x^6"));
}
