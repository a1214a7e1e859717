//! Re-enacts the vertex surgeries the recurrence derivations perform on the
//! flower and generalized-book families, checking each intermediate identity
//! against the brute-force oracle. The fixed labellings make the specific
//! vertices addressable: flower hub is 0 with cycle-j opposite vertex
//! `2 + 3j`; the generalized book's middle hub vertex is 1.

use dompoly::domset::{domination_polynomial_bruteforce, p_u_polynomial, verify_vertex_recurrence};
use dompoly::families::{self, FamilySpec};
use dompoly::graph::Graph;
use dompoly::poly::Polynomial;

fn flower4(n: usize) -> Graph {
    FamilySpec::Flower { q: 4, n }.build().unwrap()
}

fn gbook5(n: usize) -> Graph {
    FamilySpec::GeneralizedBook { n, m: 5 }.build().unwrap()
}

fn d(g: &Graph) -> Polynomial {
    domination_polynomial_bruteforce(g).unwrap()
}

fn p(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_i64_coeffs(coeffs)
}

/// Vertex opposite the hub in the last cycle of `F_{4,n}`.
fn opposite(n: usize) -> usize {
    2 + 3 * (n - 1)
}

#[test]
fn hub_deletion_leaves_disjoint_paths() {
    for n in 1..=4 {
        let g = flower4(n).delete_vertex(0).unwrap();
        assert_eq!(g.order(), 3 * n);
        assert_eq!(g.edge_count(), 2 * n);
        assert_eq!(d(&g), p(&[0, 1, 3, 1]).pow(n), "n = {n}: D(P_3)^n");
    }
}

#[test]
fn hub_neighborhood_removal_leaves_isolated_vertices() {
    for n in 1..=4 {
        let g = flower4(n).delete_closed_neighborhood(0).unwrap();
        assert_eq!(g, Graph::empty(n));
    }
}

#[test]
fn opposite_vertex_neighborhood_removal_peels_one_cycle() {
    // G - N[v] for v opposite the hub is exactly F_{4,n-1}, label for label
    for n in 2..=4 {
        let g = flower4(n).delete_closed_neighborhood(opposite(n)).unwrap();
        assert_eq!(g, flower4(n - 1));
    }
    assert_eq!(
        flower4(1).delete_closed_neighborhood(opposite(1)).unwrap(),
        Graph::empty(1),
        "a single square minus N[opposite] leaves just the hub"
    );
}

#[test]
fn flower_correction_term_is_x_times_triangle_power() {
    // p_v(F_{4,n}) = x * D(K_3)^(n-1) for v opposite the hub
    for n in 2..=4 {
        let expected = &Polynomial::x() * &p(&[0, 3, 3, 1]).pow(n - 1);
        assert_eq!(p_u_polynomial(&flower4(n), opposite(n)).unwrap(), expected);
    }
}

#[test]
fn flower_contraction_relates_to_deletion() {
    // D(F_{4,n}/v) = D(F_{4,n} - v) + 2x D(P_3)^(n-1) for v opposite the hub
    for n in 2..=4 {
        let g = flower4(n);
        let v = opposite(n);
        let lhs = d(&g.contract_vertex(v).unwrap());
        let rhs = &d(&g.delete_vertex(v).unwrap()) + &(&p(&[0, 2]) * &p(&[0, 1, 3, 1]).pow(n - 1));
        assert_eq!(lhs, rhs, "n = {n}");
    }
}

#[test]
fn vertex_recurrence_holds_at_the_proof_vertices() {
    for n in 1..=3 {
        assert!(verify_vertex_recurrence(&flower4(n), opposite(n))
            .unwrap()
            .holds());
        assert!(verify_vertex_recurrence(&flower4(n), 0).unwrap().holds());
        assert!(verify_vertex_recurrence(&gbook5(n), 1).unwrap().holds());
    }
}

#[test]
fn gbook_middle_hub_surgeries() {
    for n in 1..=4 {
        let g = gbook5(n);
        // N[u_2] = {u_1, u_2, u_3}; removing it leaves the n page edges
        let stripped = g.delete_closed_neighborhood(1).unwrap();
        assert_eq!(stripped.order(), 2 * n);
        assert_eq!(d(&stripped), p(&[0, 2, 1]).pow(n), "D(n K_2)");
        // contracting u_2 joins u_1 u_3 and gives the plain book, label for label
        assert_eq!(
            g.contract_vertex(1).unwrap(),
            FamilySpec::Book { n }.build().unwrap()
        );
    }
}

#[test]
fn gbook_correction_term() {
    // p_v(B_{n,5}) = (x^2 + 2x)^n - 2x^n at the middle hub vertex
    for n in 1..=4 {
        let expected = &p(&[0, 2, 1]).pow(n) - &Polynomial::x().pow(n).scale(&2.into());
        assert_eq!(p_u_polynomial(&gbook5(n), 1).unwrap(), expected);
    }
}

#[test]
fn gbook_minus_middle_hub_identity() {
    // D(B_{n,5} - v) = (x^2+2x)^n (2x+1) + x^2 (x+1)^(2n) - 2x^n (1+x)
    for n in 1..=3 {
        let minus_v = gbook5(n).delete_vertex(1).unwrap();
        let expected = &(&(&p(&[0, 2, 1]).pow(n) * &p(&[1, 2]))
            + &(&Polynomial::x().pow(2) * &p(&[1, 1]).pow(2 * n)))
            - &(&Polynomial::x().pow(n).scale(&2.into()) * &p(&[1, 1]));
        assert_eq!(d(&minus_v), expected, "n = {n}");
    }
}

#[test]
fn star_and_complete_auxiliaries() {
    // D(K_{1,n}) and x((1+x)^n - 1) appear as operands in the book derivation
    for n in 1..=5 {
        let star = FamilySpec::Star { n }.build().unwrap();
        assert_eq!(d(&star), families::dompoly_star(n));
        let complete = FamilySpec::Complete { n }.build().unwrap();
        assert_eq!(d(&complete), families::dompoly_complete(n));
    }
}

#[test]
fn union_multiplicativity_on_family_pieces() {
    let k3 = FamilySpec::Complete { n: 3 }.build().unwrap();
    let p3 = FamilySpec::Path { n: 3 }.build().unwrap();
    let mut u = k3.clone();
    let mut expected = d(&k3);
    for piece in [&p3, &k3] {
        u = u.disjoint_union(piece);
        expected = &expected * &d(piece);
    }
    assert_eq!(d(&u), expected);
}
