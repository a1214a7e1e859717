//! Constructors for the graph families under study and exact evaluators for
//! their domination polynomials.
//!
//! Labelling conventions are fixed so that surgeries on specific vertices are
//! reproducible in tests:
//!
//! * flower `F_{q,n}`: hub is vertex 0; cycle `j` occupies
//!   `1 + j(q-1) ..= (j+1)(q-1)` in path order around the cycle, so for
//!   `q = 4` the vertex opposite the hub in cycle `j` is `2 + 3j`;
//! * friendship `F_n` is `F_{3,n}` with the same labels;
//! * book `B_n`: hub edge `u1 = 0`, `u2 = 1`; page `i` adds `v_i = 2 + 2i`
//!   adjacent to `u1` and `w_i = 3 + 2i` adjacent to `u2`;
//! * generalized book `B_{n,m}`: hub path `u_1.. u_{m-2}` on `0..m-2`, then
//!   `v_i = (m-2) + 2i` adjacent to `u_1` and `w_i = (m-2) + 2i + 1` adjacent
//!   to `u_{m-2}`; `B_{n,4}` coincides with `B_n` label for label;
//! * prism `K_n □ K_2`: vertex `(i, j)` is `2i + j`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;
use crate::poly::Polynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid parameters for {kind}: {reason}")]
    InvalidParameters { kind: String, reason: String },
    #[error("unknown family spec `{0}`")]
    UnknownSpec(String),
}

/// A parsed family name with its integer parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `F_n`: n triangles sharing a vertex.
    Friendship { n: usize },
    /// `F_{q,n}`: n cycles of length q sharing a vertex.
    Flower { q: usize, n: usize },
    /// `B_n`: n squares sharing an edge.
    Book { n: usize },
    /// `B_{n,m}`: n m-cycles sharing a path of m-2 vertices.
    GeneralizedBook { n: usize, m: usize },
    /// `K_{1,n}`.
    Star { n: usize },
    /// `P_n`.
    Path { n: usize },
    /// `C_n`, n >= 3.
    Cycle { n: usize },
    /// `K_n`.
    Complete { n: usize },
    /// `K_n □ K_2`.
    Prism { n: usize },
    /// `K_n ∘ K_1`.
    CoronaK1Of { n: usize },
}

impl FamilySpec {
    fn err(kind: &str, reason: &str) -> FamilyError {
        FamilyError::InvalidParameters {
            kind: kind.to_string(),
            reason: reason.to_string(),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            FamilySpec::Friendship { n }
            | FamilySpec::Book { n }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Prism { n }
            | FamilySpec::CoronaK1Of { n } => {
                if n == 0 {
                    return Err(Self::err(self.kind_name(), "n must be at least 1"));
                }
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return Err(Self::err("cycle", "a simple cycle needs n >= 3"));
                }
            }
            FamilySpec::Flower { q, n } => {
                if q < 3 {
                    return Err(Self::err("flower", "cycle length q must be at least 3"));
                }
                if n == 0 {
                    return Err(Self::err("flower", "n must be at least 1"));
                }
            }
            FamilySpec::GeneralizedBook { n, m } => {
                if m < 4 {
                    return Err(Self::err("gbook", "cycle length m must be at least 4"));
                }
                if n == 0 {
                    return Err(Self::err("gbook", "n must be at least 1"));
                }
            }
        }
        Ok(())
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FamilySpec::Friendship { .. } => "friendship",
            FamilySpec::Flower { .. } => "flower",
            FamilySpec::Book { .. } => "book",
            FamilySpec::GeneralizedBook { .. } => "gbook",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::Prism { .. } => "prism",
            FamilySpec::CoronaK1Of { .. } => "corona",
        }
    }

    /// Builds the graph with the documented labelling.
    pub fn build(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::Friendship { n } => build_flower(3, n),
            FamilySpec::Flower { q, n } => build_flower(q, n),
            FamilySpec::Book { n } => build_generalized_book(n, 4),
            FamilySpec::GeneralizedBook { n, m } => build_generalized_book(n, m),
            FamilySpec::Star { n } => Graph::from_edges(n + 1, (1..=n).map(|v| (0, v))).unwrap(),
            FamilySpec::Path { n } => path_graph(n),
            FamilySpec::Cycle { n } => cycle_graph(n),
            FamilySpec::Complete { n } => complete_graph(n),
            FamilySpec::Prism { n } => complete_graph(n).cartesian_product(&complete_graph(2)),
            FamilySpec::CoronaK1Of { n } => complete_graph(n).corona_k1(),
        })
    }

    /// The exact evaluator backed by a closed form, when one exists.
    pub fn closed_form(&self) -> Option<Polynomial> {
        match *self {
            FamilySpec::Friendship { n } | FamilySpec::Flower { q: 3, n } => {
                Some(dompoly_friendship(n))
            }
            FamilySpec::Book { n } | FamilySpec::GeneralizedBook { n, m: 4 } => {
                Some(dompoly_book(n))
            }
            FamilySpec::GeneralizedBook { n, m: 5 } => Some(dompoly_gbook5(n)),
            FamilySpec::Star { n } => Some(dompoly_star(n)),
            FamilySpec::Complete { n } => Some(dompoly_complete(n)),
            FamilySpec::Prism { n } => Some(dompoly_prism(n)),
            FamilySpec::CoronaK1Of { n } => Some(dompoly_corona_k1(n)),
            _ => None,
        }
    }

    /// The exact evaluator backed by an iterated recurrence, when one exists.
    pub fn recurrence_form(&self) -> Option<Polynomial> {
        match *self {
            FamilySpec::Flower { q: 4, n } => Some(dompoly_flower4(n)),
            _ => None,
        }
    }

    /// The varying family index.
    pub fn n(&self) -> usize {
        match *self {
            FamilySpec::Friendship { n }
            | FamilySpec::Flower { n, .. }
            | FamilySpec::Book { n }
            | FamilySpec::GeneralizedBook { n, .. }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Prism { n }
            | FamilySpec::CoronaK1Of { n } => n,
        }
    }

    /// Rebuilds the spec at a different n.
    pub fn with_n(&self, n: usize) -> FamilySpec {
        match *self {
            FamilySpec::Friendship { .. } => FamilySpec::Friendship { n },
            FamilySpec::Flower { q, .. } => FamilySpec::Flower { q, n },
            FamilySpec::Book { .. } => FamilySpec::Book { n },
            FamilySpec::GeneralizedBook { m, .. } => FamilySpec::GeneralizedBook { n, m },
            FamilySpec::Star { .. } => FamilySpec::Star { n },
            FamilySpec::Path { .. } => FamilySpec::Path { n },
            FamilySpec::Cycle { .. } => FamilySpec::Cycle { n },
            FamilySpec::Complete { .. } => FamilySpec::Complete { n },
            FamilySpec::Prism { .. } => FamilySpec::Prism { n },
            FamilySpec::CoronaK1Of { .. } => FamilySpec::CoronaK1Of { n },
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Friendship { n } => write!(f, "friendship:{n}"),
            FamilySpec::Flower { q, n } => write!(f, "flower:{q},{n}"),
            FamilySpec::Book { n } => write!(f, "book:{n}"),
            FamilySpec::GeneralizedBook { n, m } => write!(f, "gbook:{n},{m}"),
            FamilySpec::Star { n } => write!(f, "star:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
            FamilySpec::Prism { n } => write!(f, "prism:{n}"),
            FamilySpec::CoronaK1Of { n } => write!(f, "corona:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses the CLI-facing strings `friendship:n`, `flower:q,n`, `book:n`,
    /// `gbook:n,m`, `star:n`, `path:n`, `cycle:n`, `complete:n`, `prism:n`.
    fn from_str(s: &str) -> Result<FamilySpec, FamilyError> {
        let unknown = || FamilyError::UnknownSpec(s.to_string());
        let (kind, params) = s.split_once(':').ok_or_else(unknown)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| unknown())?;
        let spec = match (kind, nums.as_slice()) {
            ("friendship", [n]) => FamilySpec::Friendship { n: *n },
            ("flower", [q, n]) => FamilySpec::Flower { q: *q, n: *n },
            ("book", [n]) => FamilySpec::Book { n: *n },
            ("gbook", [n, m]) => FamilySpec::GeneralizedBook { n: *n, m: *m },
            ("star", [n]) => FamilySpec::Star { n: *n },
            ("path", [n]) => FamilySpec::Path { n: *n },
            ("cycle", [n]) => FamilySpec::Cycle { n: *n },
            ("complete", [n]) => FamilySpec::Complete { n: *n },
            ("prism", [n]) => FamilySpec::Prism { n: *n },
            _ => return Err(unknown()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

fn cycle_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

fn build_flower(q: usize, n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * q);
    for j in 0..n {
        let base = 1 + j * (q - 1);
        edges.push((0, base));
        for k in 0..q - 2 {
            edges.push((base + k, base + k + 1));
        }
        edges.push((base + q - 2, 0));
    }
    Graph::from_edges(n * (q - 1) + 1, edges).unwrap()
}

fn build_generalized_book(n: usize, m: usize) -> Graph {
    let hub = m - 2;
    let mut edges = Vec::with_capacity(3 * n + m - 3);
    for k in 1..hub {
        edges.push((k - 1, k));
    }
    for i in 0..n {
        let v = hub + 2 * i;
        let w = hub + 2 * i + 1;
        edges.push((0, v));
        edges.push((v, w));
        edges.push((w, hub - 1));
    }
    Graph::from_edges(2 * n + m - 2, edges).unwrap()
}

fn x() -> Polynomial {
    Polynomial::x()
}

/// `(2x + x^2)` — the domination polynomial of `K_2`, the per-page factor.
fn two_x_plus_x2() -> Polynomial {
    Polynomial::from_i64_coeffs(&[0, 2, 1])
}

fn one_plus_x() -> Polynomial {
    Polynomial::from_i64_coeffs(&[1, 1])
}

/// `D(F_n, x) = (2x + x^2)^n + x(1 + x)^{2n}`.
pub fn dompoly_friendship(n: usize) -> Polynomial {
    assert!(n >= 1);
    &two_x_plus_x2().pow(n) + &(&x() * &one_plus_x().pow(2 * n))
}

/// `D(F_{4,n}, x)` by iterating the first-order recurrence
/// `D_n = ((1+x)^3 + x) D_{n-1} - (1+3x)(x+3x^2+x^3)^{n-1}
///        + (1+x)^3 x^{n-1} - (x^2+x)(x^3+3x^2+3x)^{n-1}`
/// from the base `D_1 = 6x^2 + 4x^3 + x^4`.
pub fn dompoly_flower4(n: usize) -> Polynomial {
    assert!(n >= 1);
    let lambda = &one_plus_x().pow(3) + &x(); // 1 + 4x + 3x^2 + x^3
    let c1 = -Polynomial::from_i64_coeffs(&[1, 3]);
    let mu1 = Polynomial::from_i64_coeffs(&[0, 1, 3, 1]);
    let c2 = one_plus_x().pow(3);
    let mu2 = x();
    let c3 = -Polynomial::from_i64_coeffs(&[0, 1, 1]);
    let mu3 = Polynomial::from_i64_coeffs(&[0, 3, 3, 1]);

    let mut d = Polynomial::from_i64_coeffs(&[0, 0, 6, 4, 1]);
    // at step k the inhomogeneous terms carry mu^(k-1)
    let mut pow1 = mu1.clone();
    let mut pow2 = mu2.clone();
    let mut pow3 = mu3.clone();
    for _ in 2..=n {
        d = &(&lambda * &d) + &(&(&c1 * &pow1) + &(&(&c2 * &pow2) + &(&c3 * &pow3)));
        pow1 = &pow1 * &mu1;
        pow2 = &pow2 * &mu2;
        pow3 = &pow3 * &mu3;
    }
    d
}

/// `D(B_n, x) = (x^2 + 2x)^n (2x + 1) + x^2 (x + 1)^{2n} - 2x^n`.
pub fn dompoly_book(n: usize) -> Polynomial {
    assert!(n >= 1);
    let first = &two_x_plus_x2().pow(n) * &Polynomial::from_i64_coeffs(&[1, 2]);
    let second = &x().pow(2) * &one_plus_x().pow(2 * n);
    let third = x().pow(n).scale(&2.into());
    &(&first + &second) - &third
}

/// `D(B_{n,5}, x) = x^2 (x + 1)^{2n+1} - 2x^{n+1} + (x^2 + 2x)^n (2x^2 + 3x)`.
pub fn dompoly_gbook5(n: usize) -> Polynomial {
    assert!(n >= 1);
    let first = &x().pow(2) * &one_plus_x().pow(2 * n + 1);
    let second = x().pow(n + 1).scale(&2.into());
    let third = &two_x_plus_x2().pow(n) * &Polynomial::from_i64_coeffs(&[0, 3, 2]);
    &(&first - &second) + &third
}

/// `(x^2 + 2x)^n` — the domination polynomial of any corona `H ∘ K_1` with
/// `|H| = n`.
pub fn dompoly_corona_k1(n: usize) -> Polynomial {
    assert!(n >= 1);
    two_x_plus_x2().pow(n)
}

/// `D(K_n □ K_2, x) = ((1 + x)^n - 1)^2 + 2x^n`.
pub fn dompoly_prism(n: usize) -> Polynomial {
    assert!(n >= 1);
    let inner = &one_plus_x().pow(n) - &Polynomial::one();
    &inner.pow(2) + &x().pow(n).scale(&2.into())
}

/// `D(K_{1,n}, x) = x^n + x(1 + x)^n`.
pub fn dompoly_star(n: usize) -> Polynomial {
    assert!(n >= 1);
    &x().pow(n) + &(&x() * &one_plus_x().pow(n))
}

/// `D(K_n, x) = (1 + x)^n - 1`.
pub fn dompoly_complete(n: usize) -> Polynomial {
    assert!(n >= 1);
    &one_plus_x().pow(n) - &Polynomial::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domset::domination_polynomial_bruteforce;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_i64_coeffs(coeffs)
    }

    fn oracle(spec: FamilySpec) -> Polynomial {
        domination_polynomial_bruteforce(&spec.build().unwrap()).unwrap()
    }

    #[test]
    fn vertex_and_edge_counts() {
        for (q, n) in [(3, 2), (4, 3), (5, 2), (6, 4)] {
            let g = FamilySpec::Flower { q, n }.build().unwrap();
            assert_eq!(g.order(), n * (q - 1) + 1);
            assert_eq!(g.edge_count(), n * q);
        }
        for n in 1..=5 {
            let g = FamilySpec::Friendship { n }.build().unwrap();
            assert_eq!((g.order(), g.edge_count()), (2 * n + 1, 3 * n));
            let g = FamilySpec::Book { n }.build().unwrap();
            assert_eq!((g.order(), g.edge_count()), (2 * n + 2, 3 * n + 1));
        }
        for (n, m) in [(2, 5), (3, 6), (4, 5)] {
            let g = FamilySpec::GeneralizedBook { n, m }.build().unwrap();
            assert_eq!((g.order(), g.edge_count()), (2 * n + m - 2, 3 * n + m - 3));
        }
        for n in 2..=5 {
            let g = FamilySpec::Prism { n }.build().unwrap();
            assert_eq!((g.order(), g.edge_count()), (2 * n, n * (n - 1) + n));
        }
    }

    #[test]
    fn degenerate_family_members() {
        // single-page families collapse to cycles
        assert_eq!(
            FamilySpec::Flower { q: 4, n: 1 }
                .build()
                .unwrap()
                .edge_count(),
            4
        );
        assert_eq!(
            oracle(FamilySpec::Flower { q: 4, n: 1 }),
            p(&[0, 0, 6, 4, 1])
        );
        assert_eq!(
            oracle(FamilySpec::Book { n: 1 }),
            oracle(FamilySpec::Cycle { n: 4 })
        );
        assert_eq!(
            oracle(FamilySpec::GeneralizedBook { n: 1, m: 5 }),
            oracle(FamilySpec::Cycle { n: 5 })
        );
    }

    #[test]
    fn gbook_m4_equals_book_label_for_label() {
        for n in 1..=4 {
            assert_eq!(
                FamilySpec::GeneralizedBook { n, m: 4 }.build().unwrap(),
                FamilySpec::Book { n }.build().unwrap()
            );
        }
    }

    #[test]
    fn flower3_equals_friendship() {
        for n in 1..=4 {
            assert_eq!(
                FamilySpec::Flower { q: 3, n }.build().unwrap(),
                FamilySpec::Friendship { n }.build().unwrap()
            );
        }
    }

    #[test]
    fn friendship_formula_small() {
        assert_eq!(dompoly_friendship(1), p(&[0, 3, 3, 1]));
        assert_eq!(dompoly_friendship(2), p(&[0, 1, 8, 10, 5, 1]));
        for n in 1..=4 {
            assert_eq!(dompoly_friendship(n), oracle(FamilySpec::Friendship { n }));
        }
    }

    #[test]
    fn flower4_recurrence_small() {
        assert_eq!(dompoly_flower4(1), p(&[0, 0, 6, 4, 1]));
        for n in 1..=3 {
            assert_eq!(
                dompoly_flower4(n),
                oracle(FamilySpec::Flower { q: 4, n }),
                "n = {n}"
            );
        }
    }

    #[test]
    fn book_formula_small() {
        assert_eq!(dompoly_book(1), p(&[0, 0, 6, 4, 1]));
        for n in 1..=4 {
            assert_eq!(dompoly_book(n), oracle(FamilySpec::Book { n }));
        }
    }

    #[test]
    fn gbook5_formula_small() {
        assert_eq!(dompoly_gbook5(1), p(&[0, 0, 5, 10, 5, 1]));
        for n in 1..=3 {
            assert_eq!(
                dompoly_gbook5(n),
                oracle(FamilySpec::GeneralizedBook { n, m: 5 })
            );
        }
    }

    #[test]
    fn star_complete_prism_corona_small() {
        assert_eq!(dompoly_star(1), p(&[0, 2, 1]));
        assert_eq!(dompoly_star(2), p(&[0, 1, 3, 1]));
        assert_eq!(dompoly_complete(1), Polynomial::x());
        assert_eq!(dompoly_complete(3), p(&[0, 3, 3, 1]));
        assert_eq!(dompoly_corona_k1(1), p(&[0, 2, 1]));
        assert_eq!(dompoly_prism(2), p(&[0, 0, 6, 4, 1]));
        for n in 1..=5 {
            assert_eq!(dompoly_star(n), oracle(FamilySpec::Star { n }));
            assert_eq!(dompoly_complete(n), oracle(FamilySpec::Complete { n }));
        }
        for n in 2..=5 {
            assert_eq!(dompoly_prism(n), oracle(FamilySpec::Prism { n }));
        }
        for n in 1..=4 {
            assert_eq!(dompoly_corona_k1(n), oracle(FamilySpec::CoronaK1Of { n }));
        }
    }

    #[test]
    fn shared_small_members_agree() {
        assert_eq!(dompoly_book(1), dompoly_flower4(1));
        assert_eq!(dompoly_book(1), dompoly_prism(2));
    }

    #[test]
    fn lowest_degree_and_degree_across_range() {
        for n in 1..=30 {
            assert_eq!(dompoly_friendship(n).lowest_degree().unwrap(), 1);
            assert_eq!(dompoly_friendship(n).degree(), Some(2 * n + 1));
            assert_eq!(dompoly_book(n).degree(), Some(2 * n + 2));
            assert_eq!(dompoly_gbook5(n).degree(), Some(2 * n + 3));
            assert_eq!(dompoly_flower4(n).degree(), Some(3 * n + 1));
            assert_eq!(dompoly_prism(n).degree(), Some(2 * n));
            assert_eq!(dompoly_star(n).degree(), Some(n + 1));
            assert_eq!(dompoly_complete(n).degree(), Some(n));
            assert_eq!(dompoly_corona_k1(n).degree(), Some(2 * n));
            if n >= 2 {
                assert_eq!(dompoly_book(n).lowest_degree().unwrap(), 2);
                assert_eq!(dompoly_gbook5(n).lowest_degree().unwrap(), 2);
            }
        }
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            "flower:4,2".parse::<FamilySpec>().unwrap(),
            FamilySpec::Flower { q: 4, n: 2 }
        );
        assert_eq!(
            "book:5".parse::<FamilySpec>().unwrap(),
            FamilySpec::Book { n: 5 }
        );
        assert!("book".parse::<FamilySpec>().is_err());
        assert!("book:0".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert!("flower:2,3".parse::<FamilySpec>().is_err());
        assert!("widget:3".parse::<FamilySpec>().is_err());
        for s in [
            "friendship:3",
            "flower:5,2",
            "gbook:2,6",
            "prism:4",
            "path:7",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }
}
