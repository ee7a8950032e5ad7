//! Braid words, the word problem, and the braid operad.
//!
//! A [`BraidWord`] is a word in the Artin generators of the braid group
//! `B_n`, kept as written: no normalization happens on construction, so
//! diagrams stay inspectable. Reduction is explicit.
//!
//! Conventions:
//!
//! * Diagrams read bottom to top; the first letter of a word is the lowest
//!   crossing. `multiply(a, b)` stacks `b` on top of `a`.
//! * `s_i` (positive sign) crosses the strand at position `i` over the
//!   strand at position `i + 1`.
//! * [`BraidWord::underlying_permutation`] maps a braid to the permutation
//!   whose image of a top position is the bottom position of the strand
//!   occupying it; with the crate's composition convention this makes it a
//!   homomorphism onto the symmetric group.
//!
//! Two independent decision procedures are provided for the word problem:
//! handle reduction (used by [`BraidWord::is_trivial`] and
//! [`BraidWord::equals`]) and the Artin action on a free group
//! ([`BraidWord::artin_action`]), kept solely as a cross-checking oracle.
//!
//! The operad structure is [`BraidWord::cable`]: replace one strand by a
//! parallel bundle of `m` strands carrying a sub-braid. Width 0 deletes the
//! strand together with every crossing it participates in.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// One crossing: the 1-based position of its left strand and a sign
/// (`+1` = left over right, `-1` = right over left).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Letter {
    pub position: usize,
    pub sign: i8,
}

impl Letter {
    fn checked(position: usize, sign: i8, strands: usize) -> Result<Letter> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidBraid(format!("sign {sign} must be +1 or -1")));
        }
        if strands < 2 || position == 0 || position > strands - 1 {
            return Err(Error::InvalidBraid(format!(
                "letter position {position} out of range 1..={} for {strands} strands",
                strands.saturating_sub(1)
            )));
        }
        Ok(Letter { position, sign })
    }

    fn inverse(self) -> Letter {
        Letter {
            position: self.position,
            sign: -self.sign,
        }
    }
}

/// A word in the Artin generators of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    /// Builds a word after checking every letter against the strand count.
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        for l in &letters {
            Letter::checked(l.position, l.sign, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// Convenience constructor from `(position, sign)` pairs.
    pub fn from_pairs(strands: usize, pairs: &[(usize, i8)]) -> Result<Self> {
        let letters = pairs
            .iter()
            .map(|&(p, s)| Letter::checked(p, s, strands))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { strands, letters })
    }

    /// The identity of `B_n`: the empty word.
    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single generator `s_i^sign`.
    pub fn generator(strands: usize, position: usize, sign: i8) -> Result<Self> {
        Ok(BraidWord {
            strands,
            letters: vec![Letter::checked(position, sign, strands)?],
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length (number of crossings as written).
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group law: concatenation, with `other` stacked on top. No
    /// normalization is performed.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch {
                context: "braid multiplication",
                expected: self.strands,
                found: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Group inverse: reverse the letters and flip every sign.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Sum of letter signs; invariant under both braid relations, so a
    /// cheap sound-but-incomplete equality prefilter.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign as i64).sum()
    }

    /// The projection onto the symmetric group. Image of a top position is
    /// the bottom position of the strand that ends there; `s_i` maps to the
    /// transposition of `i` and `i + 1`.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for l in &self.letters {
            let t = Permutation::transposition(self.strands, l.position)
                .expect("letter validated on construction");
            perm = perm.compose(&t).expect("sizes equal");
        }
        perm
    }

    /// Cancels adjacent `s_i s_i^-1` pairs until none remain.
    pub fn free_reduced(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: free_reduce(&self.letters),
        }
    }

    /// Runs Dehornoy handle reduction to a handle-free word representing
    /// the same braid.
    ///
    /// A `s_i`-handle is a subword `s_i^e v s_i^-e` whose interior `v` uses
    /// only generators `s_j` with `j > i`. Reducing it removes the two
    /// outer letters and conjugates every interior `s_{i+1}^d` into
    /// `s_{i+1}^-e s_i^d s_{i+1}^e`. A nonempty freely reduced word with no
    /// handles uses its lowest generator with a single sign only, hence is
    /// not the identity; so the loop decides the word problem.
    pub fn handle_reduced(&self) -> BraidWord {
        let mut letters = free_reduce(&self.letters);
        // Handle reduction always terminates; the budget only guards
        // against an implementation bug and scales generously with input
        // size.
        let mut budget: u64 = 1_000_000 + (letters.len() as u64).pow(2) * 1_000;
        while let Some((open, close)) = leftmost_handle(&letters) {
            letters = reduce_handle(letters, open, close);
            letters = free_reduce(&letters);
            budget = budget.checked_sub(1).expect("handle reduction diverged");
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Decides whether the word represents the identity braid (sound and
    /// complete, via handle reduction).
    pub fn is_trivial(&self) -> bool {
        if self.letters.is_empty() {
            return true;
        }
        if self.exponent_sum() != 0 || !self.underlying_permutation().is_identity() {
            return false;
        }
        self.handle_reduced().is_empty()
    }

    /// Decides equality in the braid group, prefiltered by the exponent sum
    /// and the underlying permutation.
    pub fn equals(&self, other: &BraidWord) -> Result<bool> {
        if self.strands != other.strands {
            return Err(Error::SizeMismatch {
                context: "braid equality",
                expected: self.strands,
                found: other.strands,
            });
        }
        if self.exponent_sum() != other.exponent_sum() {
            return Ok(false);
        }
        if self.underlying_permutation() != other.underlying_permutation() {
            return Ok(false);
        }
        Ok(self.multiply(&other.inverse()).expect("same strands").is_trivial())
    }

    /// The induced automorphism of the free group on `strands` generators
    /// (the Artin representation), as reduced generator images.
    ///
    /// The representation is faithful, so equal braid words have equal
    /// images; the law suite uses this as an independent oracle for
    /// [`BraidWord::equals`].
    pub fn artin_action(&self) -> FreeGroupEndo {
        let mut endo = FreeGroupEndo::identity(self.strands);
        for l in &self.letters {
            endo = endo.after_letter(l);
        }
        endo
    }

    /// Operadic partial composition: replaces the strand whose bottom
    /// endpoint is position `i` by an `m`-strand cable carrying `c`.
    ///
    /// `c` is inserted at the bottom of the cable; every crossing of `self`
    /// involving the cabled strand expands to a block of `m` parallel
    /// crossings, and all other crossings shift past the cable. With
    /// `m = 0` the strand is deleted along with every crossing it enters.
    pub fn cable(&self, i: usize, c: &BraidWord) -> Result<BraidWord> {
        let n = self.strands;
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange {
                context: "cable",
                index: i,
                bound: n,
            });
        }
        let m = c.strands;
        let strands = n + m - 1;
        let mut letters: Vec<Letter> = Vec::with_capacity(c.letters.len() + self.letters.len() * m.max(1));
        // The sub-braid enters at the bottom of the cable.
        for l in &c.letters {
            letters.push(Letter {
                position: l.position + i - 1,
                sign: l.sign,
            });
        }
        // Track the current position t of the cable's left edge while
        // replaying the outer word.
        let mut t = i;
        for l in &self.letters {
            let (j, s) = (l.position, l.sign);
            if j == t {
                // Cable crosses over/under the single strand to its right:
                // the single strand threads through the bundle.
                for p in (t..t + m).rev() {
                    letters.push(Letter { position: p, sign: s });
                }
                t += 1;
            } else if j + 1 == t {
                // Single strand to the cable's left threads through the
                // bundle in the other direction.
                for p in t - 1..t + m - 1 {
                    letters.push(Letter { position: p, sign: s });
                }
                t -= 1;
            } else if j + 1 < t {
                letters.push(Letter { position: j, sign: s });
            } else {
                letters.push(Letter {
                    position: j + m - 1,
                    sign: s,
                });
            }
        }
        BraidWord::new(strands, letters)
    }

    /// Deletes the strands starting at the given bottom positions
    /// (deduplicated), dropping every crossing they enter and renumbering
    /// the rest; equivalent to cabling each with the 0-strand braid.
    pub fn delete_strands(&self, bottom_positions: &[usize]) -> Result<BraidWord> {
        let mut zs: Vec<usize> = bottom_positions.to_vec();
        zs.sort_unstable();
        zs.dedup();
        if let Some(&z) = zs.last() {
            if z > self.strands || zs[0] == 0 {
                return Err(Error::IndexOutOfRange {
                    context: "strand deletion",
                    index: if z > self.strands { z } else { 0 },
                    bound: self.strands,
                });
            }
        }
        let mut out = self.clone();
        // Deleting from the highest position down keeps the remaining
        // positions stable.
        for &z in zs.iter().rev() {
            out = out.cable(z, &BraidWord::empty(0))?;
        }
        Ok(out)
    }

    /// A positive braid word whose underlying permutation is `u`, built
    /// from a bubble-sort decomposition into adjacent transpositions.
    pub fn positive_lift(u: &Permutation) -> BraidWord {
        let n = u.size();
        let mut arr: Vec<usize> = (1..=n).map(|x| u.apply(x)).collect();
        let mut record = Vec::new();
        loop {
            let mut swapped = false;
            for i in 0..n.saturating_sub(1) {
                if arr[i] > arr[i + 1] {
                    arr.swap(i, i + 1);
                    record.push(i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        record.reverse();
        BraidWord {
            strands: n,
            letters: record
                .into_iter()
                .map(|position| Letter { position, sign: 1 })
                .collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        if self.letters.is_empty() {
            return write!(f, " e");
        }
        for l in &self.letters {
            write!(f, " s{}", l.position)?;
            if l.sign < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Stack-based free reduction: cancels adjacent inverse pairs.
fn free_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        match out.last() {
            Some(&top) if top.position == l.position && top.sign == -l.sign => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

/// Finds the handle with the leftmost closing letter: the first index pair
/// `(open, close)` such that `letters[open] = s_i^e`, `letters[close] =
/// s_i^-e`, and no `s_j` with `j <= i` occurs strictly between them.
fn leftmost_handle(letters: &[Letter]) -> Option<(usize, usize)> {
    // last[i - 1] = index of the most recent occurrence of s_i^{±1}.
    let mut last: Vec<Option<usize>> = Vec::new();
    for (p, l) in letters.iter().enumerate() {
        if last.len() < l.position {
            last.resize(l.position, None);
        }
        if let Some(q) = last[l.position - 1] {
            if letters[q].sign == -l.sign {
                let clean = last[..l.position - 1]
                    .iter()
                    .all(|&o| o.map_or(true, |idx| idx < q));
                if clean {
                    return Some((q, p));
                }
            }
        }
        last[l.position - 1] = Some(p);
    }
    None
}

/// Rewrites the handle `letters[open..=close]` in place, leaving an equal
/// braid word.
fn reduce_handle(letters: Vec<Letter>, open: usize, close: usize) -> Vec<Letter> {
    let i = letters[open].position;
    let e = letters[open].sign;
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len() + 2 * (close - open));
    out.extend_from_slice(&letters[..open]);
    for &l in &letters[open + 1..close] {
        debug_assert!(l.position > i, "handle interior must avoid s_j, j <= i");
        if l.position == i + 1 {
            out.push(Letter {
                position: i + 1,
                sign: -e,
            });
            out.push(Letter {
                position: i,
                sign: l.sign,
            });
            out.push(Letter {
                position: i + 1,
                sign: e,
            });
        } else {
            out.push(l);
        }
    }
    out.extend_from_slice(&letters[close + 1..]);
    out
}

/// An endomorphism of the free group on `rank` generators, stored as the
/// reduced image word of each generator. Letters are nonzero integers:
/// `k` is the generator `x_k`, `-k` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreeGroupEndo {
    rank: usize,
    images: Vec<Vec<i32>>,
}

impl FreeGroupEndo {
    pub fn identity(rank: usize) -> Self {
        FreeGroupEndo {
            rank,
            images: (1..=rank as i32).map(|k| vec![k]).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Vec<i32>] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.len() == 1 && w[0] == k as i32 + 1)
    }

    /// Substitutes this endomorphism's generator images into `word`,
    /// freely reducing on the fly.
    fn substitute(&self, word: &[i32]) -> Vec<i32> {
        let mut out: Vec<i32> = Vec::new();
        let push = |l: i32, out: &mut Vec<i32>| match out.last() {
            Some(&top) if top == -l => {
                out.pop();
            }
            _ => out.push(l),
        };
        for &l in word {
            let k = l.unsigned_abs() as usize;
            let image = &self.images[k - 1];
            if l > 0 {
                for &g in image {
                    push(g, &mut out);
                }
            } else {
                for &g in image.iter().rev() {
                    push(-g, &mut out);
                }
            }
        }
        out
    }

    /// Extends the endomorphism by one more braid letter: the result sends
    /// each generator to `self` applied to the letter's substitution rule.
    fn after_letter(&self, l: &Letter) -> FreeGroupEndo {
        let i = l.position as i32;
        let images = (1..=self.rank as i32)
            .map(|j| {
                let word: Vec<i32> = if l.sign > 0 {
                    if j == i {
                        vec![i, i + 1, -i]
                    } else if j == i + 1 {
                        vec![i]
                    } else {
                        vec![j]
                    }
                } else if j == i {
                    vec![i + 1]
                } else if j == i + 1 {
                    vec![-(i + 1), i, i + 1]
                } else {
                    vec![j]
                };
                self.substitute(&word)
            })
            .collect();
        FreeGroupEndo {
            rank: self.rank,
            images,
        }
    }
}
