//! Brute-force domination oracle.
//!
//! The oracle enumerates all vertex subsets with integer-coded bitmasks and
//! precomputed closed-neighborhood masks; a subset dominates iff the union of
//! its masks covers the vertex set. It is the trust anchor every closed form
//! in this crate is checked against, so it stays deliberately simple. The
//! set-based [`is_dominating`] is an independent code path, kept separate on
//! purpose so the two can cross-check each other.

use num_bigint::BigInt;
use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::poly::{PolyError, Polynomial};

/// Default cap on the oracle's `2^order` enumeration.
pub const DEFAULT_MAX_ORACLE_ORDER: usize = 26;

/// Orders above this are rejected outright (mask arithmetic uses u64).
const HARD_ORDER_LIMIT: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomsetError {
    #[error("graph order {order} exceeds the enumeration bound {bound}")]
    CapacityExceeded { order: usize, bound: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// True iff `N[s] = V(g)`. The empty set dominates the null graph.
pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool, DomsetError> {
    if let Some(v) = s.iter().find(|&v| v >= g.order()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        }
        .into());
    }
    let mut covered = s.clone();
    for v in s.iter() {
        covered = covered.union(&g.closed_neighborhood(v)?);
    }
    Ok(covered.len() == g.order())
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| {
            let mut m = 1u64 << v;
            for w in g.neighbors(v) {
                m |= 1 << w;
            }
            m
        })
        .collect()
}

fn check_capacity(g: &Graph, bound: usize) -> Result<(), DomsetError> {
    let order = g.order();
    if order > bound.min(HARD_ORDER_LIMIT) {
        return Err(DomsetError::CapacityExceeded {
            order,
            bound: bound.min(HARD_ORDER_LIMIT),
        });
    }
    Ok(())
}

/// Coverage mask of every subset of the `bits` vertices starting at `base`.
fn coverage_table(masks: &[u64], base: usize, bits: usize) -> Vec<u64> {
    let mut table = vec![0u64; 1 << bits];
    for s in 1..table.len() {
        let low = s & s.wrapping_neg();
        table[s] = table[s ^ low] | masks[base + low.trailing_zeros() as usize];
    }
    table
}

/// Exact `D(G, x)` by subset enumeration, capped at
/// [`DEFAULT_MAX_ORACLE_ORDER`]. The null graph yields the constant 1.
pub fn domination_polynomial_bruteforce(g: &Graph) -> Result<Polynomial, DomsetError> {
    domination_polynomial_bruteforce_bounded(g, DEFAULT_MAX_ORACLE_ORDER)
}

/// As [`domination_polynomial_bruteforce`] with an explicit order bound.
pub fn domination_polynomial_bruteforce_bounded(
    g: &Graph,
    bound: usize,
) -> Result<Polynomial, DomsetError> {
    check_capacity(g, bound)?;
    let n = g.order();
    let masks = closed_masks(g);
    let full: u64 = if n == 0 { 0 } else { (1 << n) - 1 };

    // Split-table enumeration: subsets factor into a low and a high part so
    // the inner loop is a single lookup, OR, and popcount.
    let lo_bits = n / 2;
    let hi_bits = n - lo_bits;
    let lo_cover = coverage_table(&masks, 0, lo_bits);
    let hi_cover = coverage_table(&masks[lo_bits..], 0, hi_bits);

    // Histogram of low-part popcounts, for the "everything works" fast path.
    let mut lo_hist = vec![0u64; lo_bits + 1];
    for lo in 0..lo_cover.len() {
        lo_hist[lo.count_ones() as usize] += 1;
    }

    let counts = (0..hi_cover.len())
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut counts, hi| {
                let pc_hi = hi.count_ones() as usize;
                let needed = full & !hi_cover[hi];
                if needed == 0 {
                    for (c, h) in lo_hist.iter().enumerate() {
                        counts[pc_hi + c] += h;
                    }
                } else {
                    for (lo, cover) in lo_cover.iter().enumerate() {
                        if cover & needed == needed {
                            counts[pc_hi + lo.count_ones() as usize] += 1;
                        }
                    }
                }
                counts
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );

    Ok(Polynomial::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// `γ(G)`: lowest exponent of the brute-force polynomial; 0 for the null
/// graph (whose domination polynomial is the constant 1).
pub fn domination_number(g: &Graph) -> Result<usize, DomsetError> {
    let d = domination_polynomial_bruteforce(g)?;
    Ok(d.lowest_degree().expect("D(G, x) is never zero"))
}

/// The correction polynomial of the vertex recurrence: counts, by size, the
/// sets that dominate `G - u` while avoiding every vertex of `N_G(u)`.
pub fn p_u_polynomial(g: &Graph, u: usize) -> Result<Polynomial, DomsetError> {
    check_capacity(g, DEFAULT_MAX_ORACLE_ORDER)?;
    let gd = g.delete_vertex(u)?;
    let m = gd.order();
    let masks = closed_masks(&gd);
    let full: u64 = if m == 0 { 0 } else { (1 << m) - 1 };
    // relabel N_G(u) into G - u coordinates
    let mut forbidden = 0u64;
    for w in g.neighbors(u) {
        forbidden |= 1 << (w - usize::from(w > u));
    }
    let allowed = full & !forbidden;

    let mut counts = vec![0u64; m + 1];
    let mut s = allowed;
    loop {
        let mut cover = 0u64;
        let mut bits = s;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            cover |= masks[low.trailing_zeros() as usize];
            bits ^= low;
        }
        if cover == full {
            counts[s.count_ones() as usize] += 1;
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & allowed;
    }
    Ok(Polynomial::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Outcome of replaying a recurrence identity on a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceCheck {
    Holds,
    /// `lhs` is the oracle `D(G, x)`, `rhs` the assembled right-hand side.
    Mismatch {
        lhs: Polynomial,
        rhs: Polynomial,
    },
    /// The edge recurrence's bracket was not divisible by `x - 1`.
    BracketNotDivisible {
        remainder: Polynomial,
    },
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        matches!(self, RecurrenceCheck::Holds)
    }
}

/// Checks `D(G) = x·D(G/u) + D(G-u) + x·D(G-N[u]) - (1+x)·p_u(G)` with every
/// operand computed by the oracle.
pub fn verify_vertex_recurrence(g: &Graph, u: usize) -> Result<RecurrenceCheck, DomsetError> {
    let lhs = domination_polynomial_bruteforce(g)?;
    let x = Polynomial::x();
    let contracted = domination_polynomial_bruteforce(&g.contract_vertex(u)?)?;
    let deleted = domination_polynomial_bruteforce(&g.delete_vertex(u)?)?;
    let neighborhood = domination_polynomial_bruteforce(&g.delete_closed_neighborhood(u)?)?;
    let p_u = p_u_polynomial(g, u)?;
    let rhs = &(&(&x * &contracted) + &deleted)
        + &(&(&x * &neighborhood) - &(&(&Polynomial::one() + &x) * &p_u));
    Ok(if lhs == rhs {
        RecurrenceCheck::Holds
    } else {
        RecurrenceCheck::Mismatch { lhs, rhs }
    })
}

/// Checks the edge recurrence for `e = {u, v}`, including exact divisibility
/// of the bracket by `x - 1`. Composite operands associate to the left:
/// `G - e - N[u]` removes the closed neighborhood as found in `G - e`.
pub fn verify_edge_recurrence(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<RecurrenceCheck, DomsetError> {
    let ge = g.delete_edge(u, v)?;
    let d = |h: &Graph| domination_polynomial_bruteforce(h);
    let lhs = d(g)?;
    let minus_e = d(&ge)?;
    let bracket = &(&(&d(&ge.contract_vertex(u)?)? + &d(&ge.contract_vertex(v)?)?)
        - &(&d(&g.contract_vertex(u)?)? + &d(&g.contract_vertex(v)?)?))
        - &(&(&d(&g.delete_closed_neighborhood(u)?)? + &d(&g.delete_closed_neighborhood(v)?)?)
            - &(&d(&ge.delete_closed_neighborhood(u)?)? + &d(&ge.delete_closed_neighborhood(v)?)?));
    let x_minus_1 = Polynomial::from_i64_coeffs(&[-1, 1]);
    let quotient = match bracket.divide_exact(&x_minus_1) {
        Ok(q) => q,
        Err(PolyError::NonDivisible { remainder }) => {
            return Ok(RecurrenceCheck::BracketNotDivisible { remainder })
        }
        Err(_) => unreachable!("x - 1 is not zero"),
    };
    let rhs = &minus_e + &(&Polynomial::x() * &quotient);
    Ok(if lhs == rhs {
        RecurrenceCheck::Holds
    } else {
        RecurrenceCheck::Mismatch { lhs, rhs }
    })
}

/// Random graph drawn as `G(order, 1/2)`, the distribution used by the
/// randomized recurrence sweeps.
pub fn random_sweep_graph(order: usize, rng: &mut impl Rng) -> Graph {
    crate::graph::random_graph(order, 0.5, rng)
}
