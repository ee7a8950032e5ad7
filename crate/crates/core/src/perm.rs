//! Permutations and the symmetric group operad.
//!
//! A [`Permutation`] is a bijection of `{1..n}` stored in one-line notation.
//! The symmetric groups assemble into an operad: [`Permutation::block_compose`]
//! substitutes a permutation of size `m` into one input slot of a permutation
//! of size `n`, producing a permutation of size `n + m - 1` that shuffles the
//! inserted block as a unit.
//!
//! Conventions (shared by the whole crate):
//!
//! * Products are function composition: `compose(u, v)` applies `v` first,
//!   then `u`.
//! * All positions and values are 1-based.
//! * Size 0 is allowed everywhere; the empty permutation is the unique
//!   element of the symmetric group on zero points and acts as a deletion
//!   when block-composed.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation: `images[x - 1]` is the
/// image of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation, validating that the
    /// images form a bijection of `{1..n}`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The identity permutation of size `n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The adjacent transposition swapping `i` and `i + 1` inside `{1..n}`.
    pub fn transposition(n: usize, i: usize) -> Result<Self> {
        if n < 2 || i == 0 || i > n - 1 {
            return Err(Error::IndexOutOfRange {
                context: "transposition",
                index: i,
                bound: n.saturating_sub(1),
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    /// Number of points moved around, i.e. the `n` of `{1..n}`.
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// The image sequence in one-line notation.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Applies the permutation to a 1-based point.
    ///
    /// # Panics
    ///
    /// Panics if `x` is outside `1..=n`; the caller is expected to stay in
    /// range.
    pub fn apply(&self, x: usize) -> usize {
        assert!(
            x >= 1 && x <= self.images.len(),
            "point {x} outside 1..={}",
            self.images.len()
        );
        self.images[x - 1]
    }

    /// True when every point is fixed.
    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Function composition: `compose(u, v)(x) = u(v(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                context: "permutation composition",
                expected: self.size(),
                found: other.size(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    /// The inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Operadic partial composition: substitutes `v` (size `m`) into input
    /// slot `i` of `self` (size `n`), yielding a permutation of size
    /// `n + m - 1`.
    ///
    /// Inputs `i..i+m-1` of the result form a block that is permuted
    /// internally by `v`; the block then travels as a unit to the outputs
    /// `i..i+m-1`-shaped slot that `self` assigns to input `i`, while the
    /// remaining points follow `self` with their positions shifted past the
    /// block. With `m = 0` the slot is deleted outright.
    pub fn block_compose(&self, i: usize, v: &Permutation) -> Result<Permutation> {
        let n = self.size();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                context: "block_compose",
                index: i,
                bound: n,
            });
        }
        let m = v.size();
        let mut images = vec![0; n + m - 1];
        // The input slot mapped onto output slot i.
        let p = self
            .images
            .iter()
            .position(|&z| z == i)
            .expect("bijection invariant")
            + 1;
        for y in 1..=m {
            images[p + y - 2] = i + v.apply(y) - 1;
        }
        for x0 in 1..=n {
            if x0 == p {
                continue;
            }
            let x = if x0 > p { x0 + m - 1 } else { x0 };
            let val = self.images[x0 - 1];
            images[x - 1] = if val > i { val + m - 1 } else { val };
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Enumerates all permutations of size `n` in a fixed (lexicographic)
/// order.
///
/// Intended for the exhaustive tiers of the law suite and for building the
/// symmetric-group multiplication table; factorial growth restricts it to
/// small `n`.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, remaining: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if remaining.is_empty() {
            out.push(Permutation {
                images: prefix.clone(),
            });
            return;
        }
        for k in 0..remaining.len() {
            let v = remaining.remove(k);
            prefix.push(v);
            rec(prefix, remaining, out);
            prefix.pop();
            remaining.insert(k, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut out);
    out
}
