//! Structure-preserving maps between symmetric spine classes: halving a
//! palindrome against mirroring it back, merging the middle pair against
//! splitting it, and nudging the middle component up or down. Each pair
//! round-trips exactly and carries one class onto another, which is what
//! makes the fixed-point counts computable in closed form.

use thiserror::Error;

use crate::spine::Spine;

/// Raised only on contract violations, never on genuine domain members.
/// Display leads with a stable snake_case tag naming the violated clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BijectionDomainError {
    #[error("wrong_parity: spine length {actual} is not {required}")]
    WrongParity { required: &'static str, actual: usize },
    #[error("wrong_class: vertex count {actual} is not {required}")]
    WrongClass { required: &'static str, actual: usize },
    #[error("not_symmetric: spine differs from its reversal")]
    NotSymmetric,
    #[error("middle_not_even: middle component {0} is odd")]
    MiddleNotEven(usize),
    #[error("middle_zero: middle component must be positive")]
    MiddleZero,
}

fn check_domain(
    s: &Spine,
    want_even_len: bool,
    want_even_n: bool,
) -> Result<(), BijectionDomainError> {
    if (s.len() % 2 == 0) != want_even_len {
        return Err(BijectionDomainError::WrongParity {
            required: if want_even_len { "even" } else { "odd" },
            actual: s.len(),
        });
    }
    let n = s.class_params().n_vertices();
    if (n % 2 == 0) != want_even_n {
        return Err(BijectionDomainError::WrongClass {
            required: if want_even_n { "even" } else { "odd" },
            actual: n,
        });
    }
    if !s.is_symmetric() {
        return Err(BijectionDomainError::NotSymmetric);
    }
    Ok(())
}

/// Truncates a palindromic spine of even length and even vertex count to
/// its first half. A palindrome is determined by that half, so nothing is
/// lost: [`mirror`] reconstructs it. Class (N, k) maps onto (N/2 + 1, k/2).
pub fn halve(s: &Spine) -> Result<Spine, BijectionDomainError> {
    check_domain(s, true, true)?;
    Ok(Spine::from_components_unchecked(
        s.components()[..s.len() / 2].to_vec(),
    ))
}

/// Appends a reversed copy: (z_1,…,z_m) becomes (z_1,…,z_m,z_m,…,z_1).
/// Total on all spines and inverse to [`halve`]; class (M, m) maps onto
/// (2M - 2, 2m).
pub fn mirror(z: &Spine) -> Spine {
    let mut components = z.components().to_vec();
    components.extend(z.components().iter().rev());
    Spine::from_components_unchecked(components)
}

/// Replaces the two equal middle components of a palindromic spine of even
/// length and even vertex count by their sum, shortening the spine by one.
/// The merged middle is twice a component, so [`split_middle`] recovers the
/// original. Class (N, k) maps onto (N - 1, k - 1).
pub fn merge_middle(s: &Spine) -> Result<Spine, BijectionDomainError> {
    check_domain(s, true, true)?;
    let half = s.len() / 2;
    let mut components = s.components().to_vec();
    components[half - 1] += components[half];
    components.remove(half);
    Ok(Spine::from_components_unchecked(components))
}

/// Splits the middle component 2q of a palindromic spine of odd length and
/// odd vertex count into the adjacent pair q, q. Every genuine domain
/// member has an even middle (the component sum is even and the sides
/// cancel pairwise), so `MiddleNotEven` only fires on out-of-domain input.
/// Class (N, k) maps onto (N + 1, k + 1).
pub fn split_middle(z: &Spine) -> Result<Spine, BijectionDomainError> {
    check_domain(z, false, false)?;
    let mid = z.len() / 2;
    let middle = z.components()[mid];
    if middle % 2 != 0 {
        return Err(BijectionDomainError::MiddleNotEven(middle));
    }
    let mut components = z.components().to_vec();
    components[mid] = middle / 2;
    components.insert(mid + 1, middle / 2);
    Ok(Spine::from_components_unchecked(components))
}

/// Adds one to the middle component of a palindromic spine of odd length
/// and odd vertex count. Class (N, k) maps onto (N + 1, k);
/// [`decrement_middle`] undoes it.
pub fn increment_middle(s: &Spine) -> Result<Spine, BijectionDomainError> {
    check_domain(s, false, false)?;
    let mut components = s.components().to_vec();
    components[s.len() / 2] += 1;
    Ok(Spine::from_components_unchecked(components))
}

/// Subtracts one from the middle component of a palindromic spine of odd
/// length and even vertex count. Genuine members have an odd middle (the
/// component sum is odd), hence at least 1; `MiddleZero` only fires on
/// out-of-domain input. Class (N, k) maps onto (N - 1, k).
pub fn decrement_middle(z: &Spine) -> Result<Spine, BijectionDomainError> {
    check_domain(z, false, true)?;
    let mid = z.len() / 2;
    let mut components = z.components().to_vec();
    if components[mid] == 0 {
        return Err(BijectionDomainError::MiddleZero);
    }
    components[mid] -= 1;
    Ok(Spine::from_components_unchecked(components))
}
