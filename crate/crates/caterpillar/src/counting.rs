//! Counting caterpillars three ways: per-class binomials, the orbit sum
//! over all spine lengths, and the closed form the sum collapses to.

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::spine::SpineClassParams;

/// Arbitrary-precision count; the closed form outgrows u64 near N = 68.
pub type BigCount = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("counting requires at least 3 vertices, got {0}")]
    TooFewVertices(usize),
}

/// Binomial coefficient with the convention that out-of-range arguments
/// (r < 0, r > n, or n < 0) give 0, so boundary rows stay uniform.
pub fn binomial(n: i64, r: i64) -> BigCount {
    if n < 0 || r < 0 || r > n {
        return BigCount::from(0u32);
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigCount::from(1u32);
    for i in 1..=r {
        acc = acc * (n - r + i) / i;
    }
    acc
}

/// Order of the spine class with parameters `(N, k)`: the number of weak
/// compositions of `N - k - 2` into `k` parts, `C(N-3, k-1)`.
pub fn spine_class_order(p: SpineClassParams) -> BigCount {
    binomial(p.n_vertices() as i64 - 3, p.spine_len() as i64 - 1)
}

/// Number of palindromic members of the class, i.e. fixed points of the
/// reversal action.
///
/// For even `k` a palindrome is determined by its first half, whose sum is
/// half the class total; an odd total (odd `N`) makes that impossible. Odd
/// `k` adds a free middle component that absorbs the leftover parity.
pub fn symmetric_class_order(p: SpineClassParams) -> BigCount {
    let n = p.n_vertices() as i64;
    let k = p.spine_len() as i64;
    if k % 2 == 0 {
        if n % 2 == 0 {
            binomial(n / 2 - 2, k / 2 - 1)
        } else {
            BigCount::from(0u32)
        }
    } else {
        binomial((n + 1) / 2 - 2, (k - 1) / 2)
    }
}

/// Number of reversal orbits in the class, averaging fixed-point counts
/// over the two group elements.
pub fn orbit_count(p: SpineClassParams) -> BigCount {
    let sum = spine_class_order(p) + symmetric_class_order(p);
    assert!(
        &sum % 2u32 == BigCount::from(0u32),
        "fixed-point sum for (N={}, k={}) is odd",
        p.n_vertices(),
        p.spine_len(),
    );
    sum / 2u32
}

/// Per-class tallies for one vertex count, plus the two totals that must
/// agree: the sum of orbit counts over all spine lengths and the closed
/// form `2^(N-4) + 2^((N-4)/2 rounded down)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n_vertices: usize,
    pub rows: Vec<CountRow>,
    pub total_by_sum: BigCount,
    pub total_closed_form: BigCount,
}

/// One spine length's tallies inside a [`CountReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub spine_len: usize,
    pub class_order: BigCount,
    pub symmetric_order: BigCount,
    pub orbit_count: BigCount,
}

impl CountReport {
    /// Tab-separated table: a header, one row per spine length in ascending
    /// order, then the two totals.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("k\tclass_order\tsymmetric\torbits\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\n",
                row.spine_len, row.class_order, row.symmetric_order, row.orbit_count
            ));
        }
        out.push_str(&format!("total\t{}\n", self.total_by_sum));
        out.push_str(&format!("closed_form\t{}\n", self.total_closed_form));
        out
    }
}

/// Counts the non-isomorphic caterpillars on `n_vertices` vertices class by
/// class, k = 1 through N-2, and totals the orbit counts.
pub fn caterpillar_count_sum(n_vertices: usize) -> Result<CountReport, CountError> {
    if n_vertices < 3 {
        return Err(CountError::TooFewVertices(n_vertices));
    }
    let mut rows: Vec<CountRow> = (1..=n_vertices - 2)
        .into_par_iter()
        .map(|k| {
            let p = SpineClassParams::new(n_vertices, k)
                .expect("k ranges over exactly the valid spine lengths");
            CountRow {
                spine_len: k,
                class_order: spine_class_order(p),
                symmetric_order: symmetric_class_order(p),
                orbit_count: orbit_count(p),
            }
        })
        .collect();
    rows.sort_by_key(|r| r.spine_len);
    let total_by_sum = rows.iter().map(|r| &r.orbit_count).sum();
    Ok(CountReport {
        n_vertices,
        rows,
        total_by_sum,
        total_closed_form: caterpillar_count_closed(n_vertices)?,
    })
}

/// Evaluates `2^(N-4) + 2^((N-4)/2 rounded down)` exactly.
///
/// At N = 3 both exponents would be negative; the two half powers still sum
/// to a whole caterpillar (the path), so that case returns 1 directly.
pub fn caterpillar_count_closed(n_vertices: usize) -> Result<BigCount, CountError> {
    if n_vertices < 3 {
        return Err(CountError::TooFewVertices(n_vertices));
    }
    if n_vertices == 3 {
        return Ok(BigCount::from(1u32));
    }
    let one = BigCount::from(1u32);
    Ok((&one << (n_vertices - 4)) + (&one << ((n_vertices - 4) / 2)))
}
