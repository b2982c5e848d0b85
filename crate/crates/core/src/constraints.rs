//! Arithmetic consequences of the search tables: Eulerian-number
//! divisibility exclusions, Hodge-number lower bounds, genus feasibility,
//! the surface invariant ledger, and the Fano Hilbert polynomial.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::root_system::Label;
use crate::search::{HodgeRow, SearchResult};
use crate::{Error, Result};

pub fn factorial(n: u64) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= BigUint::from(k);
    }
    out
}

/// The Eulerian number A(n, k): permutations of n elements with k descents.
pub fn eulerian_number(n: u64, k: u64) -> Result<BigUint> {
    if n < 1 || k > n - 1 {
        return Err(Error::EulerianIndex { n, k });
    }
    // Row-by-row recurrence A(n,k) = (k+1)·A(n-1,k) + (n-k)·A(n-1,k-1).
    let mut row = vec![BigUint::one()];
    for m in 2..=n {
        let mut next = vec![BigUint::zero(); m as usize];
        for (j, value) in row.iter().enumerate() {
            let j = j as u64;
            next[j as usize] += BigUint::from(j + 1) * value;
            next[j as usize + 1] += BigUint::from(m - 1 - j) * value;
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// True when an ample-divisor Euler characteristic `e` is impossible for
/// ambient genus `g`: the topological Euler characteristic of such a divisor
/// is a multiple of g!, so anything g! does not divide is excluded.
pub fn divisor_euler_exclusion(e: i64, g: u64) -> bool {
    assert!(g >= 1);
    let e = BigUint::from(e.unsigned_abs());
    !(e % factorial(g)).is_zero()
}

// Shared overlay for the two bound-vector shapes: ones everywhere, at least
// 2 next to the ends, at least `outer` at the ends.
fn bound_vector(d: u64, outer: u64) -> Vec<u64> {
    let len = d as usize + 1;
    let mut out = vec![1u64; len];
    for p in [1, len - 2] {
        out[p] = out[p].max(2);
    }
    for p in [0, len - 1] {
        out[p] = out[p].max(outer);
    }
    out
}

/// Lower bounds for the alternating Hodge sums (-1)^{d-p}·chi(Omega^p) of a
/// d-dimensional subvariety of a g-dimensional abelian variety:
/// g - d + 1 at p in {0, d}, 2 at p in {1, d-1}, 1 between.
pub fn hodge_lower_bounds(d: u64, g: u64) -> Result<Vec<u64>> {
    if d < 1 || d + 2 > g {
        return Err(Error::CodimensionTooSmall { d, g });
    }
    Ok(bound_vector(d, g - d + 1))
}

/// The same shape for a representation-theoretic subspace of dimension
/// `dim_v` in place of the ambient genus: ends are dim_v - d + 1.
pub fn subspace_hodge_bounds(d: u64, dim_v: u64) -> Result<Vec<u64>> {
    if dim_v <= d + 1 {
        return Err(Error::SubspaceTooSmall { d, dim_v });
    }
    Ok(bound_vector(d, dim_v - d + 1))
}

/// Largest admissible ambient genus per dimension d: the end dimension h^0
/// must cover g - d + 1, so g <= d - 1 + max h^0 over the rows of length d.
pub fn g_max_table(result: &SearchResult) -> BTreeMap<i64, i64> {
    let mut table: BTreeMap<i64, i64> = BTreeMap::new();
    for sr in result.rows() {
        let d = sr.row.ell();
        let g = d - 1 + sr.row.end_dimension() as i64;
        table.entry(d).and_modify(|slot| *slot = (*slot).max(g)).or_insert(g);
    }
    table
}

/// One admissible (dimension, row) pair with its inclusive genus range.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FeasibilityEntry {
    pub label: Label,
    pub d: i64,
    pub g_min: i64,
    pub g_max: i64,
    pub row: HodgeRow,
    /// (-1)^d times the representation dimension.
    pub euler: i64,
}

/// Feasible genus ranges per search row: g >= d + 2 from the codimension
/// hypothesis, g <= d - 1 + h^0 from the end bound, and additionally
/// g > 2d when `half_filter` is on. Rows with an empty range are dropped.
pub fn feasibility_table(result: &SearchResult, half_filter: bool) -> Vec<FeasibilityEntry> {
    let dim = result.rep_dimension() as i64;
    let mut out = Vec::new();
    for sr in result.rows() {
        let d = sr.row.ell();
        let mut g_min = d + 2;
        if half_filter {
            g_min = g_min.max(2 * d + 1);
        }
        let g_max = d - 1 + sr.row.end_dimension() as i64;
        if g_min > g_max {
            continue;
        }
        let euler = if d % 2 == 0 { dim } else { -dim };
        out.push(FeasibilityEntry { label: result.label(), d, g_min, g_max, row: sr.row.clone(), euler });
    }
    out
}

/// The numeric invariants of the candidate surface and the degree
/// candidates they admit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceLedger {
    pub chi_o: i64,
    pub c2: i64,
    /// c1^2 from Noether: 12·chi_O - c2.
    pub c1_sq: i64,
    /// chi(Omega^1) = (c1^2 - 5·c2)/6; always an integer given Noether.
    pub chi_omega1: i64,
    /// c2 of the normal sheaf term: c1^2 - c2.
    pub c2_normal: i64,
    /// Divisors of c2_normal at least the minimum map degree, ascending.
    pub deg_pi: Vec<i64>,
    /// Divisors of c1_sq dividing some deg_pi candidate, ascending.
    pub deg_gamma: Vec<i64>,
    /// c2_normal / deg_pi, aligned index by index with `deg_pi`.
    pub deg_y: Vec<i64>,
    pub min_map_degree: i64,
}

fn divisors(n: i64) -> Vec<i64> {
    debug_assert!(n > 0);
    let mut out: Vec<i64> = (1..=n).filter(|k| n % k == 0).collect();
    out.sort_unstable();
    out
}

/// Derives the full surface ledger from chi(O), c2, and the minimum degree
/// of the covering map. Errors name the violated identity.
pub fn surface_ledger(chi_o: i64, c2: i64, min_map_degree: i64) -> Result<SurfaceLedger> {
    let c1_sq = 12 * chi_o - c2;
    if c1_sq < 0 {
        return Err(Error::InconsistentSurface {
            detail: alloc::format!(
                "Noether needs 12*chi_O - c2 >= 0, got 12*{chi_o} - {c2} = {c1_sq}"
            ),
        });
    }
    let num = c1_sq - 5 * c2;
    if num.rem_euclid(6) != 0 {
        return Err(Error::InconsistentSurface {
            detail: alloc::format!(
                "chi(Omega^1) = (c1^2 - 5*c2)/6 = {num}/6 is not an integer"
            ),
        });
    }
    let chi_omega1 = num / 6;
    let c2_normal = c1_sq - c2;
    let (deg_pi, deg_gamma, deg_y) = if c2_normal > 0 {
        let deg_pi: Vec<i64> =
            divisors(c2_normal).into_iter().filter(|&p| p >= min_map_degree).collect();
        let deg_y: Vec<i64> = deg_pi.iter().map(|&p| c2_normal / p).collect();
        let deg_gamma: Vec<i64> = if c1_sq > 0 {
            divisors(c1_sq).into_iter().filter(|&g| deg_pi.iter().any(|&p| p % g == 0)).collect()
        } else {
            Vec::new()
        };
        (deg_pi, deg_gamma, deg_y)
    } else {
        (Vec::new(), Vec::new(), Vec::new())
    };
    Ok(SurfaceLedger {
        chi_o,
        c2,
        c1_sq,
        chi_omega1,
        c2_normal,
        deg_pi,
        deg_gamma,
        deg_y,
        min_map_degree,
    })
}

/// chi(X, O(i)) for the degree-45 threefold: 45·i(i+1)/2 - 45·i + 6.
pub fn fano_hilbert(i: i64) -> i64 {
    assert!(i >= 0);
    45 * i * (i + 1) / 2 - 45 * i + 6
}

/// The dimension a row forces on the subvariety: the length of its grading.
pub fn dimension_from_level(row: &HodgeRow) -> i64 {
    row.ell()
}
