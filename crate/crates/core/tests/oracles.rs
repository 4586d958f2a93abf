//! Independent brute-force models checked against the library.

use std::collections::BTreeMap;

use num_rational::Ratio;
use tcg_core::classification::theorem_a_parameters;
use tcg_core::constructions::{dihedral, extraspecial, group_j, m3, ExtraspecialType};
use tcg_core::group::validate_group;
use tcg_core::group_iso::group_isomorphic;
use tcg_core::srg::{check_parameter_identity, srg_params, srg_spectrum, SrgParams};
use tcg_core::{transversal_graph, FiniteGroup, Graph, GroupError};

type Q = Ratio<i128>;

/// All `n × n` Latin squares whose first row and column are `0..n`.
fn normalized_latin_squares(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn fill(sq: &mut Vec<Vec<usize>>, cell: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if cell == (n - 1) * (n - 1) {
            out.push(sq.clone());
            return;
        }
        let (r, c) = (1 + cell / (n - 1), 1 + cell % (n - 1));
        for v in 0..n {
            if (0..c).any(|j| sq[r][j] == v) || (0..r).any(|i| sq[i][c] == v) {
                continue;
            }
            sq[r][c] = v;
            fill(sq, cell + 1, n, out);
        }
        sq[r][c] = usize::MAX;
    }
    let mut sq = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        sq[0][i] = i;
        sq[i][0] = i;
    }
    let mut out = Vec::new();
    fill(&mut sq, 0, n, &mut out);
    out
}

fn naive_associative(t: &[Vec<usize>]) -> bool {
    let n = t.len();
    (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| t[t[i][j]][k] == t[i][t[j][k]])))
}

#[test]
fn order_three_has_a_single_normalized_latin_square() {
    // So no non-associative order-3 example exists; C3 is forced.
    let squares = normalized_latin_squares(3);
    assert_eq!(squares, vec![vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]]);
    assert!(validate_group(&squares[0]).is_ok());
}

#[test]
fn latin_squares_of_order_four_and_five() {
    let four = normalized_latin_squares(4);
    assert_eq!(four.len(), 4);
    assert!(four.iter().all(|t| validate_group(t).is_ok()));

    let five = normalized_latin_squares(5);
    assert_eq!(five.len(), 56);
    let mut groups = 0;
    for t in &five {
        match validate_group(t) {
            Ok(_) => {
                assert!(naive_associative(t));
                groups += 1;
            }
            Err(GroupError::NotAssociative { i, j, k }) => {
                assert!(!naive_associative(t));
                assert_ne!(t[t[i][j]][k], t[i][t[j][k]]);
            }
            Err(e) => panic!("unexpected {e}"),
        }
    }
    // 4! labellings of C5 modulo its 4 automorphisms.
    assert_eq!(groups, 6);
}

fn closure_group(name: &str, gens: Vec<Vec<usize>>, identity: Vec<usize>, mul: impl Fn(&[usize], &[usize]) -> Vec<usize>) -> FiniteGroup {
    let mut elems = vec![identity];
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    index.insert(elems[0].clone(), 0);
    let mut head = 0;
    while head < elems.len() {
        let x = elems[head].clone();
        head += 1;
        for g in &gens {
            let y = mul(&x, g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
    }
    let rows: Vec<Vec<usize>> =
        elems.iter().map(|a| elems.iter().map(|b| index[&mul(a, b)]).collect()).collect();
    FiniteGroup::from_rows(name, &rows, 512).unwrap()
}

/// Upper unitriangular 3×3 matrices over F_p, stored as (x, y, z) for
/// [[1,x,z],[0,1,y],[0,0,1]].
fn unitriangular(p: usize) -> FiniteGroup {
    let mul = move |a: &[usize], b: &[usize]| vec![(a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p];
    closure_group("UT3", vec![vec![1, 0, 0], vec![0, 1, 0]], vec![0, 0, 0], mul)
}

/// `D16` acting on `Z/8`.
fn dihedral_permutations() -> FiniteGroup {
    let rot: Vec<usize> = (0..8).map(|i| (i + 1) % 8).collect();
    let refl: Vec<usize> = (0..8).map(|i| (8 - i) % 8).collect();
    let compose = |a: &[usize], b: &[usize]| (0..8).map(|i| a[b[i]]).collect();
    closure_group("D16perm", vec![rot, refl], (0..8).collect(), compose)
}

fn class_size_multiset(g: &FiniteGroup) -> Vec<usize> {
    let mut sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    sizes
}

fn naive_class_sizes(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut orbit: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            seen[y] = true;
        }
        sizes.push(orbit.len());
    }
    sizes.sort_unstable();
    sizes
}

#[test]
fn m3_matches_unitriangular_matrices() {
    let m = m3().unwrap();
    let ut = unitriangular(3);
    assert_eq!(ut.order(), 27);
    assert!(group_isomorphic(&m, &ut).unwrap().is_some());
    let expected = [vec![1; 3], vec![3; 8]].concat();
    assert_eq!(class_size_multiset(&m), expected);
    assert_eq!(naive_class_sizes(&ut), expected);
    let z = m.center();
    for x in (0..27).filter(|&x| !z.contains(x)) {
        let naive = (0..27).filter(|&y| m.mul(x, y) == m.mul(y, x)).count();
        assert_eq!(naive, 9);
        assert_eq!(m.centralizer(x).len(), 9);
    }
}

#[test]
fn d16_matches_permutation_model() {
    let d = dihedral(16).unwrap();
    let perm = dihedral_permutations();
    assert_eq!(perm.order(), 16);
    assert!(group_isomorphic(&d, &perm).unwrap().is_some());
    assert_eq!(d.conjugate_type(), vec![1, 2, 4]);
    assert_eq!(naive_class_sizes(&perm), naive_class_sizes(&d));
    // [y, x] = y x y⁻¹ x⁻¹ = x⁻² = x⁶
    let x = d.element_by_label("x").unwrap();
    let y = d.element_by_label("y").unwrap();
    assert_eq!(d.commutator(y, x), d.element_by_label("x^6").unwrap());
    assert_eq!(d.subgroup_closure([x]).len(), 8);
}

#[test]
fn j_satisfies_its_presentation() {
    let j = group_j().unwrap();
    let e = |s: &str| j.element_by_label(s).unwrap();
    let (a, b, c) = (e("a"), e("b"), e("c"));
    for g in [a, b, c] {
        assert_eq!(j.pow(g, 4), 0);
    }
    assert_eq!(j.pow(a, 2), j.pow(b, 2));
    assert_eq!(j.mul(a, b), j.mul(b, a));
    assert_eq!(j.conjugate(c, a), j.inv(a));
    assert_eq!(j.conjugate(b, c), j.inv(c));
    assert_eq!(j.subgroup_closure([a, b, c]).len(), 32);
    // The normal form a^i b^j c^k has 32 words, so the table is the group.
}

#[test]
fn extraspecial_32_centralizers_by_brute_force() {
    for kind in [ExtraspecialType::Plus, ExtraspecialType::Minus] {
        let g = extraspecial(2, 2, kind).unwrap();
        let central: Vec<usize> = (0..32).filter(|&z| (0..32).all(|y| g.mul(z, y) == g.mul(y, z))).collect();
        assert_eq!(central.len(), 2);
        for x in (0..32).filter(|x| !central.contains(x)) {
            let naive = (0..32).filter(|&y| g.mul(x, y) == g.mul(y, x)).count();
            assert_eq!(naive, 16);
        }
        let mut commutators: Vec<usize> =
            (0..32).flat_map(|x| (0..32).map(move |y| (x, y))).map(|(x, y)| g.commutator(x, y)).collect();
        commutators.sort_unstable();
        commutators.dedup();
        assert_eq!(commutators.len(), 2);
        assert_eq!(g.derived_subgroup().len(), 2);
        assert_eq!(naive_class_sizes(&g), [vec![1; 2], vec![2; 15]].concat());
    }
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, highest
/// coefficient first.
fn char_poly(g: &Graph) -> Vec<Q> {
    let n = g.vertex_count();
    let a: Vec<Vec<Q>> = (0..n)
        .map(|i| (0..n).map(|j| Q::from_integer(g.has_edge(i, j) as i128)).collect())
        .collect();
    let matmul = |x: &Vec<Vec<Q>>, y: &Vec<Vec<Q>>| -> Vec<Vec<Q>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(Q::from_integer(0), |s, k| s + x[i][k] * y[k][j])).collect())
            .collect()
    };
    let mut coeffs = vec![Q::from_integer(1)];
    let mut m = vec![vec![Q::from_integer(0); n]; n];
    for k in 1..=n {
        for i in 0..n {
            m[i][i] += coeffs[k - 1];
        }
        let am = matmul(&a, &m);
        let trace = (0..n).fold(Q::from_integer(0), |s, i| s + am[i][i]);
        coeffs.push(-trace / Q::from_integer(k as i128));
        m = am;
    }
    coeffs
}

fn poly_mul(p: &[Q], q: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::from_integer(0); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn poly_from_roots(roots: &[(Q, usize)]) -> Vec<Q> {
    let mut p = vec![Q::from_integer(1)];
    for &(r, m) in roots {
        for _ in 0..m {
            p = poly_mul(&p, &[Q::from_integer(1), -r]);
        }
    }
    p
}

fn to_wide(r: Ratio<i64>) -> Q {
    Q::new(*r.numer() as i128, *r.denom() as i128)
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn spectrum_matches_characteristic_polynomial_of_t_e32() {
    let g = extraspecial(2, 2, ExtraspecialType::Plus).unwrap();
    let t = transversal_graph(&g).unwrap();
    let p = srg_params(&t.graph).unwrap();
    assert_eq!(p, SrgParams::new(15, 6, 1, 3));
    let s = srg_spectrum(&p).unwrap();
    let (r, sv) = s.eigenvalues.unwrap();
    let (m1, m2) = s.multiplicities.unwrap();
    let expected = poly_from_roots(&[
        (Q::from_integer(6), 1),
        (to_wide(r), m1.to_integer() as usize),
        (to_wide(sv), m2.to_integer() as usize),
    ]);
    assert_eq!(char_poly(&t.graph), expected);
}

#[test]
fn pentagon_spectrum_is_the_half_case() {
    let c5 = cycle(5);
    let p = srg_params(&c5).unwrap();
    assert_eq!(p, SrgParams::new(5, 2, 0, 1));
    let s = srg_spectrum(&p).unwrap();
    assert_eq!(s.multiplicities, Some((Ratio::from_integer(2), Ratio::from_integer(2))));
    // (x − 2)(x² + x − 1)²: both irrational eigenvalues appear twice.
    let quad = [Q::from_integer(1), Q::from_integer(1), Q::from_integer(-1)];
    let expected = poly_mul(&[Q::from_integer(1), Q::from_integer(-2)], &poly_mul(&quad, &quad));
    assert_eq!(char_poly(&c5), expected);
}

#[test]
fn petersen_spectrum() {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    }
    let pet = Graph::from_edges(10, &edges).unwrap();
    let p = srg_params(&pet).unwrap();
    assert_eq!(p, SrgParams::new(10, 3, 0, 1));
    let s = srg_spectrum(&p).unwrap();
    let (r, sv) = s.eigenvalues.unwrap();
    let (m1, m2) = s.multiplicities.unwrap();
    let expected = poly_from_roots(&[
        (Q::from_integer(3), 1),
        (to_wide(r), m1.to_integer() as usize),
        (to_wide(sv), m2.to_integer() as usize),
    ]);
    assert_eq!(char_poly(&pet), expected);
}

#[test]
fn theorem_a_family_spectrum_by_trace() {
    for n in 2..=10 {
        let p = theorem_a_parameters(n).unwrap();
        assert!(check_parameter_identity(&p));
        let s = srg_spectrum(&p).unwrap();
        assert!(s.feasible);
        assert_eq!(s.trace(p.k), Some(Ratio::from_integer(0)));
        // Trace of A²: v k = k² + m₁ r² + m₂ s².
        let (r, sv) = s.eigenvalues.unwrap();
        let (m1, m2) = s.multiplicities.unwrap();
        let k = Ratio::from_integer(p.k as i64);
        assert_eq!(k * k + m1 * r * r + m2 * sv * sv, Ratio::from_integer((p.v * p.k) as i64));
    }
}

#[test]
fn infeasible_family_has_no_integral_multiplicities() {
    for s in 2..=10u32 {
        let p = SrgParams::new((1 << (2 * s + 1)) - 1, (1 << (s + 1)) - 2, (1 << s) - 3, 1);
        assert!(check_parameter_identity(&p), "s = {s}");
        let spec = srg_spectrum(&p).unwrap();
        assert!(!spec.feasible, "s = {s}");
        let (v, k, l, m) = (p.v as i64, p.k as i64, p.lambda as i64, p.mu as i64);
        assert_ne!(2 * k + (v - 1) * (l - m), 0);
    }
}
