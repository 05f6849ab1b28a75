//! Brute-force ground truth, kept deliberately naive: decode every Prüfer
//! sequence into a labeled tree, dedup by certificate, and count what
//! recognition says. Nothing here touches a binomial or a spine formula,
//! which is what makes agreement with the counting module meaningful.

use std::cmp::Reverse;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{iso_certificate, recognize, Classification, Graph, IsoCertificate};
use crate::spine::SpineClassParams;

/// Largest vertex count `verify` scans without an explicit opt-in; keeps
/// the default census (9^7 sequences) around seconds, not minutes.
pub const DEFAULT_CENSUS_CEILING: usize = 9;

/// Hard upper bound for the census: 10^8 sequences is an afternoon budget,
/// 11^9 is not.
pub const MAX_CENSUS_VERTICES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CensusBudgetError {
    #[error(
        "free-tree census supports 3..={max} vertices, got {0}",
        max = MAX_CENSUS_VERTICES
    )]
    UnsupportedVertexCount(usize),
}

/// What brute force found at one vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub n_vertices: usize,
    pub free_tree_count: usize,
    pub caterpillar_count: usize,
    pub caterpillar_certificates: BTreeSet<IsoCertificate>,
}

/// Streams all `N^(N-2)` labeled trees on `0..N`, one per Prüfer sequence,
/// sequences in ascending lexicographic order.
#[derive(Debug)]
pub struct LabeledTrees {
    n_vertices: usize,
    next_seq: Option<Vec<usize>>,
}

pub fn labeled_trees(n_vertices: usize) -> Result<LabeledTrees, CensusBudgetError> {
    if !(3..=MAX_CENSUS_VERTICES).contains(&n_vertices) {
        return Err(CensusBudgetError::UnsupportedVertexCount(n_vertices));
    }
    Ok(LabeledTrees {
        n_vertices,
        next_seq: Some(vec![0; n_vertices - 2]),
    })
}

impl Iterator for LabeledTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mut seq = self.next_seq.take()?;
        let tree = prufer_decode(self.n_vertices, &seq);
        if advance(&mut seq, self.n_vertices) {
            self.next_seq = Some(seq);
        }
        Some(tree)
    }
}

/// Odometer step through sequences over `{0..base-1}`, rightmost digit
/// fastest; false once the sequence wraps around.
fn advance(seq: &mut [usize], base: usize) -> bool {
    for digit in seq.iter_mut().rev() {
        *digit += 1;
        if *digit < base {
            return true;
        }
        *digit = 0;
    }
    false
}

/// Standard Prüfer decoding: repeatedly join the smallest current leaf to
/// the next sequence symbol, then join the last two leaves.
fn prufer_decode(n_vertices: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1usize; n_vertices];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n_vertices)
        .filter(|&v| degree[v] == 1)
        .map(Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n_vertices - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("sequence symbols keep a leaf available");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain at the end");
    let Reverse(v) = leaves.pop().expect("two leaves remain at the end");
    edges.push((u, v));
    Graph::new(n_vertices, edges).expect("Prüfer decoding yields a simple graph")
}

/// Enumerates every labeled tree on `n_vertices`, dedups up to isomorphism
/// by certificate, and classifies one representative per class. The
/// sequence space is partitioned by leading symbol so partitions can scan
/// in parallel; partition merging is order-independent.
pub fn free_tree_census(n_vertices: usize) -> Result<CensusResult, CensusBudgetError> {
    if !(3..=MAX_CENSUS_VERTICES).contains(&n_vertices) {
        return Err(CensusBudgetError::UnsupportedVertexCount(n_vertices));
    }
    let partitions: Vec<BTreeMap<IsoCertificate, bool>> = (0..n_vertices)
        .into_par_iter()
        .map(|leading| {
            let mut classes = BTreeMap::new();
            let mut seq = vec![0; n_vertices - 2];
            seq[0] = leading;
            loop {
                let tree = prufer_decode(n_vertices, &seq);
                let certificate =
                    iso_certificate(&tree).expect("every decoded sequence is a tree");
                classes.entry(certificate).or_insert_with(|| {
                    matches!(recognize(&tree), Classification::Caterpillar(_))
                });
                if !advance(&mut seq[1..], n_vertices) {
                    break;
                }
            }
            classes
        })
        .collect();
    let mut classes: BTreeMap<IsoCertificate, bool> = BTreeMap::new();
    for partition in partitions {
        for (certificate, is_caterpillar) in partition {
            match classes.entry(certificate) {
                Entry::Vacant(slot) => {
                    slot.insert(is_caterpillar);
                }
                Entry::Occupied(slot) => debug_assert_eq!(
                    *slot.get(),
                    is_caterpillar,
                    "recognition must be isomorphism-invariant"
                ),
            }
        }
    }
    let caterpillar_certificates: BTreeSet<IsoCertificate> = classes
        .iter()
        .filter(|(_, &is_caterpillar)| is_caterpillar)
        .map(|(certificate, _)| certificate.clone())
        .collect();
    Ok(CensusResult {
        n_vertices,
        free_tree_count: classes.len(),
        caterpillar_count: caterpillar_certificates.len(),
        caterpillar_certificates,
    })
}

/// Counts palindromic members of a spine class by generating every
/// composition recursively and filtering. No binomials involved; this is
/// the check the formula route must match.
pub fn symmetric_bruteforce(p: SpineClassParams) -> usize {
    fn walk(prefix: &mut Vec<usize>, parts_left: usize, sum_left: usize, hits: &mut usize) {
        if parts_left == 1 {
            prefix.push(sum_left);
            if prefix.iter().eq(prefix.iter().rev()) {
                *hits += 1;
            }
            prefix.pop();
            return;
        }
        for value in 0..=sum_left {
            prefix.push(value);
            walk(prefix, parts_left - 1, sum_left - value, hits);
            prefix.pop();
        }
    }
    let mut hits = 0;
    walk(
        &mut Vec::with_capacity(p.spine_len()),
        p.spine_len(),
        p.component_sum(),
        &mut hits,
    );
    hits
}
