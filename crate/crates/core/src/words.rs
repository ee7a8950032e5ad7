//! Parenthesized weakly-unital words and the braided elements built on them.
//!
//! A [`ParenWord`] of arity `n` is a full binary tree whose leaves carry
//! labels: each of `1..=n` exactly once (the visible letters `x1..xn`,
//! in any order), plus any number of `0` labels (the weak unit `x0`).
//! Words form an operad under [`ParenWord::graft`]: substitution into the
//! leaf carrying a given letter, with the usual relabeling.
//!
//! Leaf positions — 1-based, left to right, counting `x0` leaves — matter
//! because a braid on `len(p)` strands rides on top of the word:
//! an [`OmegaBrElement`] pairs a word with such a braid, and composition
//! cables the braid at the leaf position of the substituted letter.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A full binary tree with labeled leaves; label `0` is the weak unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Tree {
    Leaf(usize),
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn collect_labels(&self, out: &mut Vec<usize>) {
        match self {
            Tree::Leaf(k) => out.push(*k),
            Tree::Node(l, r) => {
                l.collect_labels(out);
                r.collect_labels(out);
            }
        }
    }

    fn leaf_count(&self) -> usize {
        match self {
            Tree::Leaf(_) => 1,
            Tree::Node(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub(crate) fn map_labels(&self, f: &impl Fn(usize) -> usize) -> Tree {
        match self {
            Tree::Leaf(k) => Tree::Leaf(f(*k)),
            Tree::Node(l, r) => Tree::Node(Box::new(l.map_labels(f)), Box::new(r.map_labels(f))),
        }
    }

    /// Replaces the unique leaf labeled `target` (nonzero) by `sub`.
    pub(crate) fn substitute(&self, target: usize, sub: &Tree) -> Tree {
        match self {
            Tree::Leaf(k) if *k == target => sub.clone(),
            Tree::Leaf(k) => Tree::Leaf(*k),
            Tree::Node(l, r) => Tree::Node(
                Box::new(l.substitute(target, sub)),
                Box::new(r.substitute(target, sub)),
            ),
        }
    }

    /// Substitutes `sub` (of arity `m`) for the leaf labeled `i` while
    /// shifting labels above `i` past the block, all in one pass so the
    /// `m = 0` down-shift cannot collide with the leaf being replaced.
    pub(crate) fn graft_at(&self, i: usize, m: usize, sub: &Tree) -> Tree {
        match self {
            Tree::Leaf(k) if *k == i => sub.clone(),
            Tree::Leaf(k) if *k > i => Tree::Leaf(*k + m - 1),
            Tree::Leaf(k) => Tree::Leaf(*k),
            Tree::Node(l, r) => Tree::Node(
                Box::new(l.graft_at(i, m, sub)),
                Box::new(r.graft_at(i, m, sub)),
            ),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf(k) => write!(f, "x{k}"),
            Tree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

/// A parenthesized weakly-unital word: arity plus labeled tree, with the
/// label invariant enforced on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParenWord {
    arity: usize,
    tree: Tree,
}

impl ParenWord {
    /// Validates that the nonzero labels of `tree` are exactly `1..=arity`,
    /// each occurring once.
    pub fn new(arity: usize, tree: Tree) -> Result<Self> {
        let mut labels = Vec::new();
        tree.collect_labels(&mut labels);
        let mut seen = vec![false; arity];
        for &k in &labels {
            if k == 0 {
                continue;
            }
            if k > arity {
                return Err(Error::InvalidWord(format!(
                    "leaf label {k} exceeds arity {arity}"
                )));
            }
            if seen[k - 1] {
                return Err(Error::InvalidWord(format!("leaf label {k} occurs twice")));
            }
            seen[k - 1] = true;
        }
        if let Some(k) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidWord(format!(
                "leaf label {} missing for arity {arity}",
                k + 1
            )));
        }
        Ok(ParenWord { arity, tree })
    }

    /// The operad unit: the single-leaf word `x1`.
    pub fn unit() -> Self {
        ParenWord {
            arity: 1,
            tree: Tree::Leaf(1),
        }
    }

    /// The bare weak unit `x0`, the basic arity-0 word.
    pub fn x0() -> Self {
        ParenWord {
            arity: 0,
            tree: Tree::Leaf(0),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    /// Total number of leaves, `x0` leaves included.
    pub fn len(&self) -> usize {
        self.tree.leaf_count()
    }

    /// A word always has at least one leaf; provided for API symmetry.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Leaf labels in left-to-right order (`0` for `x0` leaves).
    pub fn leaf_labels(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        self.tree.collect_labels(&mut out);
        out
    }

    /// Label of the leaf at 1-based position `pos`.
    pub fn t_map(&self, pos: usize) -> Result<usize> {
        let labels = self.leaf_labels();
        if pos == 0 || pos > labels.len() {
            return Err(Error::IndexOutOfRange {
                context: "t_map",
                index: pos,
                bound: labels.len(),
            });
        }
        Ok(labels[pos - 1])
    }

    /// Position of the leaf carrying the (nonzero) label `label`.
    pub fn t_inverse(&self, label: usize) -> Result<usize> {
        if label == 0 || label > self.arity {
            return Err(Error::IndexOutOfRange {
                context: "t_inverse",
                index: label,
                bound: self.arity,
            });
        }
        let pos = self
            .leaf_labels()
            .iter()
            .position(|&k| k == label)
            .expect("validated word carries every label");
        Ok(pos + 1)
    }

    /// Operadic substitution: replaces letter `i` of `self` by `other`.
    ///
    /// Letters of `other` move up by `i - 1`; letters of `self` above `i`
    /// move past the inserted block. The result has arity
    /// `arity(self) + arity(other) - 1`.
    pub fn graft(&self, i: usize, other: &ParenWord) -> Result<ParenWord> {
        if i == 0 || i > self.arity {
            return Err(Error::IndexOutOfRange {
                context: "graft",
                index: i,
                bound: self.arity,
            });
        }
        let m = other.arity;
        let shifted = other.tree.map_labels(&|k| if k == 0 { 0 } else { k + i - 1 });
        // With m = 0 the shift past the block is k - 1, which `k + m - 1`
        // computes correctly in usize because those labels satisfy k >= 2.
        let tree = self.tree.graft_at(i, m, &shifted);
        ParenWord::new(self.arity + m - 1, tree)
    }

    /// The label permutation: sends `k` to the `k`-th nonzero label in
    /// left-to-right leaf order. This is the arity-wise projection onto
    /// the symmetric operad.
    pub fn tau(&self) -> Permutation {
        let images: Vec<usize> = self.leaf_labels().into_iter().filter(|&k| k != 0).collect();
        Permutation::new(images).expect("validated word has bijective labels")
    }

    /// The symmetric-group action: relabels letter `c` as `sigma(c)`,
    /// leaving the tree shape and `x0` leaves alone.
    pub fn relabel(&self, sigma: &Permutation) -> Result<ParenWord> {
        if sigma.size() != self.arity {
            return Err(Error::SizeMismatch {
                context: "word relabeling",
                expected: self.arity,
                found: sigma.size(),
            });
        }
        let tree = self
            .tree
            .map_labels(&|k| if k == 0 { 0 } else { sigma.apply(k) });
        Ok(ParenWord {
            arity: self.arity,
            tree,
        })
    }
}

impl fmt::Display for ParenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tree.fmt(f)
    }
}

/// A parenthesized word together with a braid on its leaves: an element of
/// the operad of braided weakly-unital words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct OmegaBrElement {
    word: ParenWord,
    braid: BraidWord,
}

impl OmegaBrElement {
    /// Pairs a word with a braid on one strand per leaf.
    pub fn new(word: ParenWord, braid: BraidWord) -> Result<Self> {
        if braid.strands() != word.len() {
            return Err(Error::SizeMismatch {
                context: "braided word",
                expected: word.len(),
                found: braid.strands(),
            });
        }
        Ok(OmegaBrElement { word, braid })
    }

    /// The operad unit: the word `x1` with the trivial 1-strand braid.
    pub fn unit() -> Self {
        OmegaBrElement {
            word: ParenWord::unit(),
            braid: BraidWord::empty(1),
        }
    }

    pub fn word(&self) -> &ParenWord {
        &self.word
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn arity(&self) -> usize {
        self.word.arity()
    }

    /// Structural equality of both layers.
    pub fn structurally_equal(&self, other: &OmegaBrElement) -> bool {
        self == other
    }

    /// Equality as braided words: same word, braids equal in the group.
    pub fn equals(&self, other: &OmegaBrElement) -> Result<bool> {
        if self.word != other.word {
            return Ok(false);
        }
        self.braid.equals(&other.braid)
    }

    /// Operadic composition: grafts the words and cables the braid at the
    /// leaf position of the substituted letter.
    pub fn compose(&self, i: usize, other: &OmegaBrElement) -> Result<OmegaBrElement> {
        let word = self.word.graft(i, &other.word)?;
        let braid = self.braid.cable(self.word.t_inverse(i)?, &other.braid)?;
        OmegaBrElement::new(word, braid)
    }

    /// The symmetric-group action: relabels the word, braid untouched.
    pub fn relabel(&self, sigma: &Permutation) -> Result<OmegaBrElement> {
        Ok(OmegaBrElement {
            word: self.word.relabel(sigma)?,
            braid: self.braid.clone(),
        })
    }
}

impl fmt::Display for OmegaBrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.word, self.braid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(k: usize) -> Tree {
        Tree::Leaf(k)
    }

    fn node(l: Tree, r: Tree) -> Tree {
        Tree::Node(Box::new(l), Box::new(r))
    }

    fn word(arity: usize, tree: Tree) -> ParenWord {
        ParenWord::new(arity, tree).unwrap()
    }

    #[test]
    fn construction_validates_labels() {
        assert!(ParenWord::new(2, node(leaf(1), leaf(2))).is_ok());
        assert!(ParenWord::new(2, node(leaf(2), node(leaf(0), leaf(1)))).is_ok());
        // Missing label 2.
        assert!(ParenWord::new(2, node(leaf(1), leaf(0))).is_err());
        // Duplicate label.
        assert!(ParenWord::new(2, node(leaf(1), node(leaf(1), leaf(2)))).is_err());
        // Label exceeding arity.
        assert!(ParenWord::new(1, leaf(2)).is_err());
        // Arity 0 words contain only x0 leaves.
        assert!(ParenWord::new(0, node(leaf(0), leaf(0))).is_ok());
    }

    #[test]
    fn len_counts_all_leaves() {
        let p = word(2, node(leaf(1), node(leaf(0), leaf(2))));
        assert_eq!(p.len(), 3);
        assert_eq!(p.leaf_labels(), vec![1, 0, 2]);
        assert_eq!(ParenWord::x0().len(), 1);
        assert_eq!(ParenWord::unit().len(), 1);
    }

    #[test]
    fn t_map_and_t_inverse_are_mutually_inverse() {
        let p = word(3, node(node(leaf(2), leaf(0)), node(leaf(3), leaf(1))));
        assert_eq!(p.t_map(1).unwrap(), 2);
        assert_eq!(p.t_map(2).unwrap(), 0);
        assert_eq!(p.t_map(4).unwrap(), 1);
        assert_eq!(p.t_inverse(2).unwrap(), 1);
        assert_eq!(p.t_inverse(1).unwrap(), 4);
        for label in 1..=3 {
            assert_eq!(p.t_map(p.t_inverse(label).unwrap()).unwrap(), label);
        }
        assert!(p.t_map(5).is_err());
        assert!(p.t_inverse(0).is_err());
        assert!(p.t_inverse(4).is_err());
    }

    #[test]
    fn graft_substitutes_and_relabels() {
        // (x1 x2) with (x1 x0) put in for x2 gives (x1 (x2 x0)).
        let p = word(2, node(leaf(1), leaf(2)));
        let q = word(1, node(leaf(1), leaf(0)));
        let got = p.graft(2, &q).unwrap();
        assert_eq!(got, word(2, node(leaf(1), node(leaf(2), leaf(0)))));
    }

    #[test]
    fn graft_shifts_outer_labels_past_the_block() {
        // (x2 x1) with (x1 x2) put in for x1 gives (x3 (x1 x2)).
        let p = word(2, node(leaf(2), leaf(1)));
        let q = word(2, node(leaf(1), leaf(2)));
        let got = p.graft(1, &q).unwrap();
        assert_eq!(got, word(3, node(leaf(3), node(leaf(1), leaf(2)))));
    }

    #[test]
    fn graft_with_arity_zero_lowers_labels() {
        // (x1 x2) with x0 put in for x1 gives (x0 x1).
        let p = word(2, node(leaf(1), leaf(2)));
        let got = p.graft(1, &ParenWord::x0()).unwrap();
        assert_eq!(got, word(1, node(leaf(0), leaf(1))));
    }

    #[test]
    fn graft_unit_laws() {
        let p = word(3, node(node(leaf(2), leaf(0)), node(leaf(3), leaf(1))));
        for i in 1..=3 {
            assert_eq!(p.graft(i, &ParenWord::unit()).unwrap(), p);
        }
        assert_eq!(ParenWord::unit().graft(1, &p).unwrap(), p);
        assert!(p.graft(0, &ParenWord::unit()).is_err());
        assert!(p.graft(4, &ParenWord::unit()).is_err());
    }

    #[test]
    fn tau_reads_nonzero_labels() {
        let p = word(3, node(node(leaf(2), leaf(0)), node(leaf(3), leaf(1))));
        assert_eq!(p.tau(), Permutation::new(vec![2, 3, 1]).unwrap());
        assert!(ParenWord::x0().tau().is_identity());
    }

    #[test]
    fn tau_turns_graft_into_block_composition() {
        let p = word(2, node(leaf(2), leaf(1)));
        let q = word(2, node(leaf(2), leaf(1)));
        let got = p.graft(1, &q).unwrap();
        assert_eq!(got.tau(), Permutation::new(vec![3, 2, 1]).unwrap());
        assert_eq!(got.tau(), p.tau().block_compose(1, &q.tau()).unwrap());
    }

    #[test]
    fn relabel_acts_through_tau() {
        let p = word(2, node(leaf(1), node(leaf(0), leaf(2))));
        let sigma = Permutation::new(vec![2, 1]).unwrap();
        let got = p.relabel(&sigma).unwrap();
        assert_eq!(got, word(2, node(leaf(2), node(leaf(0), leaf(1)))));
        assert_eq!(got.tau(), sigma.compose(&p.tau()).unwrap());
        assert!(p.relabel(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn braided_word_checks_strand_count() {
        let p = word(2, node(leaf(1), node(leaf(0), leaf(2))));
        assert!(OmegaBrElement::new(p.clone(), BraidWord::empty(3)).is_ok());
        assert!(OmegaBrElement::new(p, BraidWord::empty(2)).is_err());
    }

    #[test]
    fn braided_composition_cables_at_the_leaf_position() {
        // (x0 x1) carrying s1, composed at letter 1 with (x1 x2) carrying
        // s1: the cable sits at leaf position 2.
        let x = OmegaBrElement::new(
            word(1, node(leaf(0), leaf(1))),
            BraidWord::from_pairs(2, &[(1, 1)]).unwrap(),
        )
        .unwrap();
        let y = OmegaBrElement::new(
            word(2, node(leaf(1), leaf(2))),
            BraidWord::from_pairs(2, &[(1, 1)]).unwrap(),
        )
        .unwrap();
        let got = x.compose(1, &y).unwrap();
        assert_eq!(got.word(), &word(2, node(leaf(0), node(leaf(1), leaf(2)))));
        assert_eq!(
            got.braid(),
            &BraidWord::from_pairs(3, &[(2, 1), (1, 1), (2, 1)]).unwrap()
        );
    }

    #[test]
    fn braided_unit_laws() {
        let x = OmegaBrElement::new(
            word(2, node(leaf(2), node(leaf(0), leaf(1)))),
            BraidWord::from_pairs(3, &[(1, 1), (2, -1)]).unwrap(),
        )
        .unwrap();
        for i in 1..=2 {
            assert_eq!(x.compose(i, &OmegaBrElement::unit()).unwrap(), x);
        }
        assert_eq!(OmegaBrElement::unit().compose(1, &x).unwrap(), x);
    }

    #[test]
    fn braided_equality_is_up_to_braid_equivalence() {
        let p = word(2, node(leaf(1), leaf(2)));
        let a = OmegaBrElement::new(
            p.clone(),
            BraidWord::from_pairs(2, &[(1, 1), (1, -1)]).unwrap(),
        )
        .unwrap();
        let b = OmegaBrElement::new(p.clone(), BraidWord::empty(2)).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(!a.structurally_equal(&b));
        // Different tree shape: never equal.
        let c = OmegaBrElement::new(
            word(2, node(leaf(2), leaf(1))),
            BraidWord::empty(2),
        )
        .unwrap();
        assert!(!b.equals(&c).unwrap());
    }

    #[test]
    fn display_matches_the_text_grammar() {
        let p = word(2, node(leaf(1), node(leaf(0), leaf(2))));
        assert_eq!(p.to_string(), "(x1 (x0 x2))");
        assert_eq!(ParenWord::unit().to_string(), "x1");
        let x = OmegaBrElement::new(p, BraidWord::from_pairs(3, &[(2, -1)]).unwrap()).unwrap();
        assert_eq!(x.to_string(), "(x1 (x0 x2)) | B3: s2^-1");
    }
}
