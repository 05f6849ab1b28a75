//! Spine values and the two-element reversal symmetry acting on them.
//!
//! A spine is the sequence of pendant-leaf counts along the interior of a
//! caterpillar's longest path. Reading the path from the other end reverses
//! the sequence, so spines come in reversal orbits of size one (palindromes)
//! or two; [`CanonicalSpine`] picks the lexicographically smaller member as
//! the orbit representative.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use thiserror::Error;

/// Leaf counts per interior path vertex, left to right. Length `k >= 1`.
///
/// A spine of length `k` with component sum `m` describes a caterpillar on
/// `m + k + 2` vertices: the `k` interior vertices in a path, `s_i` pendant
/// leaves on the `i`-th of them, and one endpoint leaf capping each end.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Spine {
    components: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SpineError {
    #[error("a spine must have at least one component")]
    Empty,
}

impl Spine {
    pub fn new(components: Vec<usize>) -> Result<Self, SpineError> {
        if components.is_empty() {
            return Err(SpineError::Empty);
        }
        Ok(Self { components })
    }

    /// Skips the emptiness check; callers must guarantee `components.len() >= 1`.
    pub(crate) fn from_components_unchecked(components: Vec<usize>) -> Self {
        debug_assert!(!components.is_empty());
        Self { components }
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    /// Spine length `k`, the number of interior path vertices.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    /// Always false; kept so `len` follows the usual container pairing.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Total number of pendant leaves, excluding the two endpoint leaves.
    pub fn component_sum(&self) -> usize {
        self.components.iter().sum()
    }

    pub fn reversed(&self) -> Spine {
        let mut components = self.components.clone();
        components.reverse();
        Self { components }
    }

    /// True iff the spine is a palindrome, i.e. a fixed point of reversal.
    /// Such spines describe caterpillars that are their own mirror image.
    pub fn is_symmetric(&self) -> bool {
        self.components
            .iter()
            .zip(self.components.iter().rev())
            .all(|(a, b)| a == b)
    }

    /// The `(N, k)` class this spine belongs to: `k` components summing to
    /// `N - k - 2`, hence `N = sum + k + 2`.
    pub fn class_params(&self) -> SpineClassParams {
        SpineClassParams {
            n_vertices: self.component_sum() + self.len() + 2,
            spine_len: self.len(),
        }
    }

    /// The lexicographically smaller of the spine and its reversal.
    pub fn canonicalize(&self) -> CanonicalSpine {
        let reversed = self.reversed();
        if *self <= reversed {
            CanonicalSpine(self.clone())
        } else {
            CanonicalSpine(reversed)
        }
    }
}

impl fmt::Display for Spine {
    /// Literal form: comma-separated decimal components, e.g. `2,1,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSpineError {
    #[error("empty spine literal")]
    Empty,
    #[error("component {position} ({token:?}) is not a non-negative integer")]
    InvalidComponent { position: usize, token: String },
}

impl FromStr for Spine {
    type Err = ParseSpineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(ParseSpineError::Empty);
        }
        let components = trimmed
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| ParseSpineError::InvalidComponent {
                        position: i + 1,
                        token: tok.trim().to_string(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { components })
    }
}

/// The `(N, k)` pair naming a spine class: all spines of length `k` whose
/// components sum to `N - k - 2`, equivalently all caterpillars on `N`
/// vertices whose longest path has `k + 2` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpineClassParams {
    n_vertices: usize,
    spine_len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ClassParamsError {
    #[error("spine length {spine_len} is outside 1..={max} for {n_vertices} vertices")]
    SpineLenOutOfRange {
        n_vertices: usize,
        spine_len: usize,
        max: usize,
    },
}

impl SpineClassParams {
    /// Requires `1 <= k <= N - 2`, which also forces `N >= 3` and keeps the
    /// component sum `N - k - 2` non-negative.
    pub fn new(n_vertices: usize, spine_len: usize) -> Result<Self, ClassParamsError> {
        if spine_len < 1 || spine_len + 2 > n_vertices {
            return Err(ClassParamsError::SpineLenOutOfRange {
                n_vertices,
                spine_len,
                max: n_vertices.saturating_sub(2),
            });
        }
        Ok(Self {
            n_vertices,
            spine_len,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn spine_len(&self) -> usize {
        self.spine_len
    }

    /// `N - k - 2`, the sum every member's components must have.
    pub fn component_sum(&self) -> usize {
        self.n_vertices - self.spine_len - 2
    }
}

/// The reversal symmetry group: the identity and the end-for-end flip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Identity,
    Reversal,
}

impl GroupElement {
    /// Applies the element to a spine. Reversal maps `s_i` to `s_{k-i+1}`;
    /// both elements preserve length and component sum.
    pub fn act(self, s: &Spine) -> Spine {
        match self {
            GroupElement::Identity => s.clone(),
            GroupElement::Reversal => s.reversed(),
        }
    }

    pub fn compose(self, other: GroupElement) -> GroupElement {
        if self == other {
            GroupElement::Identity
        } else {
            GroupElement::Reversal
        }
    }
}

/// A spine constrained to be the lexicographically least member of its
/// reversal orbit. Two caterpillars are isomorphic exactly when their spines
/// canonicalize to the same value, so this doubles as an isomorphism
/// certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalSpine(Spine);

impl CanonicalSpine {
    /// Skips the orbit-minimality check; callers must guarantee
    /// `spine <= spine.reversed()`.
    pub(crate) fn from_spine_unchecked(spine: Spine) -> Self {
        debug_assert!(spine <= spine.reversed());
        Self(spine)
    }

    pub fn as_spine(&self) -> &Spine {
        &self.0
    }

    pub fn into_spine(self) -> Spine {
        self.0
    }
}

impl Deref for CanonicalSpine {
    type Target = Spine;

    fn deref(&self) -> &Spine {
        &self.0
    }
}

impl From<CanonicalSpine> for Spine {
    fn from(c: CanonicalSpine) -> Spine {
        c.0
    }
}

impl fmt::Display for CanonicalSpine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
