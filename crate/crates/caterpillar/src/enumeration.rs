//! Deterministic streaming generation: all compositions of a spine class,
//! one representative per reversal orbit, and whole caterpillars for a
//! given vertex count. Streams hold only the current item plus O(k) state.

use std::cmp::Ordering;

use crate::counting::CountError;
use crate::graph::{decode, Graph};
use crate::spine::{CanonicalSpine, Spine, SpineClassParams};

/// The fixed output order everything in this module follows: ascending
/// spine length first, then ascending lexicographic order of components.
pub fn enumeration_order(a: &Spine, b: &Spine) -> Ordering {
    a.len()
        .cmp(&b.len())
        .then_with(|| a.components().cmp(b.components()))
}

/// Streams every weak composition of `N - k - 2` into `k` parts, in
/// ascending lexicographic order from `(0,…,0,sum)` to `(sum,0,…,0)`.
#[derive(Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

pub fn compositions(p: SpineClassParams) -> Compositions {
    let mut first = vec![0; p.spine_len()];
    *first.last_mut().expect("spine length is at least 1") = p.component_sum();
    Compositions { next: Some(first) }
}

impl Iterator for Compositions {
    type Item = Spine;

    fn next(&mut self) -> Option<Spine> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Spine::from_components_unchecked(current))
    }
}

/// Lexicographic successor: move one unit left from the rightmost positive
/// component and flush everything to its right into the final position.
fn successor(c: &[usize]) -> Option<Vec<usize>> {
    let j = c.iter().rposition(|&x| x > 0)?;
    if j == 0 {
        return None;
    }
    let mut next = c.to_vec();
    next[j - 1] += 1;
    let remainder = next[j] - 1;
    next[j] = 0;
    *next.last_mut().expect("compositions are non-empty") += remainder;
    Some(next)
}

/// Streams one representative per reversal orbit of a spine class, in
/// ascending lexicographic order: exactly the compositions that are no
/// larger than their own reversal.
#[derive(Debug)]
pub struct CanonicalSpines {
    inner: Compositions,
}

pub fn canonical_spines(p: SpineClassParams) -> CanonicalSpines {
    CanonicalSpines {
        inner: compositions(p),
    }
}

impl Iterator for CanonicalSpines {
    type Item = CanonicalSpine;

    fn next(&mut self) -> Option<CanonicalSpine> {
        loop {
            let s = self.inner.next()?;
            if s.components().iter().le(s.components().iter().rev()) {
                return Some(CanonicalSpine::from_spine_unchecked(s));
            }
        }
    }
}

/// Streams every non-isomorphic caterpillar on `n_vertices` vertices as a
/// (canonical spine, decoded tree) pair, in [`enumeration_order`].
#[derive(Debug)]
pub struct Caterpillars {
    n_vertices: usize,
    spine_len: usize,
    current: CanonicalSpines,
}

pub fn enumerate_caterpillars(n_vertices: usize) -> Result<Caterpillars, CountError> {
    if n_vertices < 3 {
        return Err(CountError::TooFewVertices(n_vertices));
    }
    let params = SpineClassParams::new(n_vertices, 1).expect("k = 1 is valid whenever N >= 3");
    Ok(Caterpillars {
        n_vertices,
        spine_len: 1,
        current: canonical_spines(params),
    })
}

impl Iterator for Caterpillars {
    type Item = (CanonicalSpine, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some(spine) = self.current.next() {
                let tree = decode(&spine);
                return Some((spine, tree));
            }
            if self.spine_len + 2 >= self.n_vertices {
                return None;
            }
            self.spine_len += 1;
            let params = SpineClassParams::new(self.n_vertices, self.spine_len)
                .expect("spine length stays within 1..=N-2");
            self.current = canonical_spines(params);
        }
    }
}
