//! The law registry and the shared machinery for running a law.
//!
//! Every law follows the same two-tier scheme: a deterministic exhaustive
//! sweep over a small domain, then a seeded randomized tier whose size is
//! controlled by [`LawParams::samples`]. A failing instance is greedily
//! shrunk (shorter braids, fewer strands, fewer unit leaves, smaller
//! permutations) before being reported, and re-running the same law with the
//! same parameters reproduces the same counterexample.

use std::fmt;
use std::sync::OnceLock;

use crate::braid::{BraidWord, Letter};
use crate::error::Result;
use crate::perm::{all_permutations, Permutation};
use crate::words::{OmegaBrElement, ParenWord, Tree};

use super::{Impls, LawParams, Verdict};

mod braids;
mod elements;
mod graded;
mod morphisms;
mod perms;
mod words_laws;

/// The signature shared by every law body.
pub(super) type LawFn = fn(&LawParams, &Impls) -> Verdict;

/// All laws, in the order they are reported.
pub(super) fn registry() -> &'static [(&'static str, LawFn)] {
    static REGISTRY: [(&'static str, LawFn); 41] = [
        ("sigma.operad.vertical_assoc", perms::vertical_assoc),
        ("sigma.operad.horizontal_assoc", perms::horizontal_assoc),
        ("sigma.operad.unit", perms::unit),
        ("sigma.operad.equivariance", perms::equivariance),
        ("braid.operad.vertical_assoc", braids::vertical_assoc),
        ("braid.operad.horizontal_assoc", braids::horizontal_assoc),
        ("braid.operad.unit", braids::unit),
        ("braid.operad.projection", braids::projection),
        ("braid.equivariance", braids::equivariance),
        ("braid.inverse_cable", braids::inverse_cable),
        ("braid.wordproblem.oracle", braids::wordproblem_oracle),
        ("words.operad.vertical_assoc", words_laws::vertical_assoc),
        ("words.operad.horizontal_assoc", words_laws::horizontal_assoc),
        ("words.operad.unit", words_laws::unit),
        ("words.operad.equivariance", words_laws::equivariance),
        ("words.index.vertical1", words_laws::index_vertical1),
        ("words.index.horizontal1a", words_laws::index_horizontal1a),
        ("words.index.horizontal1b", words_laws::index_horizontal1b),
        ("words.index.horizontal2a", words_laws::index_horizontal2a),
        ("words.index.horizontal2b", words_laws::index_horizontal2b),
        ("omegabr.operad.vertical_assoc", elements::omega_vertical_assoc),
        ("omegabr.operad.horizontal_assoc", elements::omega_horizontal_assoc),
        ("omegabr.operad.unit", elements::omega_unit),
        ("omegabr.operad.equivariance", elements::omega_equivariance),
        ("wcob.operad.vertical_assoc", elements::wcob_vertical_assoc),
        ("wcob.operad.horizontal_assoc", elements::wcob_horizontal_assoc),
        ("wcob.operad.unit", elements::wcob_unit),
        ("wcob.operad.equivariance", elements::wcob_equivariance),
        ("wcob.morphism.welldef", morphisms::welldef),
        ("wcob.morphism.functoriality", morphisms::functoriality),
        ("wcob.morphism.hom", morphisms::wcob_hom),
        ("wpab.morphism.hom", morphisms::wpab_hom_law),
        ("pi.morphism", morphisms::pi_morphism_law),
        ("tau.morphism", words_laws::tau_morphism),
        ("forget.morphism", morphisms::forget_morphism_law),
        ("gcrossed.hurwitz.welldef", graded::hurwitz_welldef),
        ("gcrossed.hurwitz.action", graded::hurwitz_action),
        ("gcrossed.grade.conservation", graded::grade_conservation),
        ("gcrossed.twist.welldef", graded::twist_welldef),
        ("gcrossed.twist.counting", graded::twist_counting),
        ("gcrossed.evaluate.compose", graded::evaluate_compose),
    ];
    &REGISTRY
}

/// An instance fails when the predicate returns `Ok(false)` or any error.
fn fails<I, H>(holds: &H, inst: &I) -> bool
where
    H: Fn(&I) -> Result<bool>,
{
    !matches!(holds(inst), Ok(true))
}

/// Greedily shrinks a failing instance: repeatedly replaces it by the first
/// shrink candidate that still fails, until none does, then renders it.
fn shrink_report<I, H, S>(mut inst: I, holds: &H, shrink: &S) -> String
where
    I: Clone + fmt::Display,
    H: Fn(&I) -> Result<bool>,
    S: Fn(&I) -> Vec<I>,
{
    'outer: loop {
        for cand in shrink(&inst) {
            if fails(holds, &cand) {
                inst = cand;
                continue 'outer;
            }
        }
        break;
    }
    match holds(&inst) {
        Err(e) => format!("{inst} [error: {e}]"),
        Ok(_) => inst.to_string(),
    }
}

/// Runs the exhaustive tier, then `samples` random instances, stopping at
/// the first failure (which is shrunk before being reported).
fn run_tiers<I, H, S>(
    exhaustive: impl IntoIterator<Item = I>,
    samples: usize,
    mut random: impl FnMut() -> I,
    holds: H,
    shrink: S,
) -> Verdict
where
    I: Clone + fmt::Display,
    H: Fn(&I) -> Result<bool>,
    S: Fn(&I) -> Vec<I>,
{
    let mut cases = 0usize;
    for inst in exhaustive {
        cases += 1;
        if fails(&holds, &inst) {
            return Verdict::Fail {
                counterexample: shrink_report(inst, &holds, &shrink),
            };
        }
    }
    for _ in 0..samples {
        let inst = random();
        cases += 1;
        if fails(&holds, &inst) {
            return Verdict::Fail {
                counterexample: shrink_report(inst, &holds, &shrink),
            };
        }
    }
    Verdict::Pass { cases }
}

/// Exhaustive-tier arity bound: the hard cap, lowered if the parameters ask
/// for less.
fn acap(params: &LawParams, hard: usize) -> usize {
    params.max_arity.min(hard).max(1)
}

/// Exhaustive-tier length bound: the hard cap, lowered if the parameters ask
/// for less.
fn lcap(params: &LawParams, hard: usize) -> usize {
    params.max_len.min(hard)
}

/// Every braid word on `strands` strands with at most `max_len` letters.
fn all_braids(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord::empty(strands)];
    let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for position in 1..strands {
                for sign in [1i8, -1] {
                    let mut letters = prefix.clone();
                    letters.push(Letter { position, sign });
                    out.push(
                        BraidWord::new(strands, letters.clone())
                            .expect("generator positions are in range"),
                    );
                    next.push(letters);
                }
            }
        }
        frontier = next;
    }
    out
}

/// Every tree shape with the given number of leaves (labels are all 0).
fn all_shapes(leaves: usize) -> Vec<Tree> {
    if leaves == 1 {
        return vec![Tree::Leaf(0)];
    }
    let mut out = Vec::new();
    for split in 1..leaves {
        for left in all_shapes(split) {
            for right in all_shapes(leaves - split) {
                out.push(Tree::Node(Box::new(left.clone()), Box::new(right)));
            }
        }
    }
    out
}

/// Rebuilds a shape with the given leaf labels, assigned left to right.
fn assign_labels(shape: &Tree, labels: &[usize], next: &mut usize) -> Tree {
    match shape {
        Tree::Leaf(_) => {
            let leaf = Tree::Leaf(labels[*next]);
            *next += 1;
            leaf
        }
        Tree::Node(l, r) => {
            let left = assign_labels(l, labels, next);
            let right = assign_labels(r, labels, next);
            Tree::Node(Box::new(left), Box::new(right))
        }
    }
}

/// Every parenthesized word with exactly `len` leaves: all shapes, all
/// choices of which leaves are units, all labelings of the rest.
fn all_words_of_len(len: usize) -> Vec<ParenWord> {
    let mut out = Vec::new();
    for shape in all_shapes(len) {
        for mask in 0u32..(1u32 << len) {
            let arity = mask.count_ones() as usize;
            for perm in all_permutations(arity) {
                let mut labels = vec![0usize; len];
                let mut seen = 0usize;
                for (pos, label) in labels.iter_mut().enumerate() {
                    if mask & (1 << pos) != 0 {
                        seen += 1;
                        *label = perm.apply(seen);
                    }
                }
                let mut cursor = 0usize;
                let tree = assign_labels(&shape, &labels, &mut cursor);
                out.push(ParenWord::new(arity, tree).expect("labels are a bijection"));
            }
        }
    }
    out
}

/// Words indexed by leaf count, up to six leaves, built once and shared.
fn words_by_len() -> &'static [Vec<ParenWord>] {
    static WORDS: OnceLock<Vec<Vec<ParenWord>>> = OnceLock::new();
    WORDS.get_or_init(|| {
        let mut by_len = vec![Vec::new()];
        for len in 1..=6 {
            by_len.push(all_words_of_len(len));
        }
        by_len
    })
}

/// Small braided words: every word with at most `word_len` leaves paired
/// with every braid of at most `braid_len` letters on those strands.
fn small_omegabr(word_len: usize, braid_len: usize) -> Vec<OmegaBrElement> {
    let mut out = Vec::new();
    for len in 1..=word_len.min(6) {
        for word in &words_by_len()[len] {
            for braid in all_braids(len, braid_len) {
                out.push(
                    OmegaBrElement::new(word.clone(), braid)
                        .expect("strand count matches leaf count"),
                );
            }
        }
    }
    out
}

/// Each candidate obtained by deleting one letter of the braid.
fn braid_letter_drops(b: &BraidWord) -> Vec<BraidWord> {
    (0..b.len())
        .map(|k| {
            let mut letters = b.letters().to_vec();
            letters.remove(k);
            BraidWord::new(b.strands(), letters).expect("removing a letter keeps validity")
        })
        .collect()
}

/// Drops the top strand if no letter touches it.
fn braid_strand_drop(b: &BraidWord) -> Option<BraidWord> {
    let n = b.strands();
    if n == 0 || b.letters().iter().any(|l| l.position + 1 >= n) {
        return None;
    }
    Some(BraidWord::new(n - 1, b.letters().to_vec()).expect("letters stay in range"))
}

/// Each candidate obtained by deleting an adjacent cancelling pair, which
/// preserves the braid up to equivalence.
fn braid_cancel_drops(b: &BraidWord) -> Vec<BraidWord> {
    (1..b.len())
        .filter(|&k| {
            let (x, y) = (b.letters()[k - 1], b.letters()[k]);
            x.position == y.position && x.sign == -y.sign
        })
        .map(|k| {
            let mut letters = b.letters().to_vec();
            letters.drain(k - 1..=k);
            BraidWord::new(b.strands(), letters).expect("removing letters keeps validity")
        })
        .collect()
}

/// Drops the top point if the permutation fixes it.
fn perm_point_drop(p: &Permutation) -> Option<Permutation> {
    let n = p.size();
    if n == 0 || p.apply(n) != n {
        return None;
    }
    Permutation::new(p.images()[..n - 1].to_vec()).ok()
}

/// Removes the `target`-th leaf (1-based, left to right), collapsing its
/// parent node. Returns `None` if the whole tree was that single leaf.
fn remove_leaf_at(tree: &Tree, target: usize, counter: &mut usize) -> Option<Tree> {
    match tree {
        Tree::Leaf(k) => {
            *counter += 1;
            if *counter == target {
                None
            } else {
                Some(Tree::Leaf(*k))
            }
        }
        Tree::Node(l, r) => {
            let left = remove_leaf_at(l, target, counter);
            let right = remove_leaf_at(r, target, counter);
            match (left, right) {
                (Some(a), Some(b)) => Some(Tree::Node(Box::new(a), Box::new(b))),
                (Some(a), None) | (None, Some(a)) => Some(a),
                (None, None) => None,
            }
        }
    }
}

/// Each candidate obtained by deleting one unit leaf; the arity never
/// changes, so slot indices stay valid.
fn word_zero_drops(p: &ParenWord) -> Vec<ParenWord> {
    let labels = p.leaf_labels();
    let mut out = Vec::new();
    for (idx, &label) in labels.iter().enumerate() {
        if label != 0 || p.len() == 1 {
            continue;
        }
        let mut counter = 0usize;
        if let Some(tree) = remove_leaf_at(p.tree(), idx + 1, &mut counter) {
            out.push(ParenWord::new(p.arity(), tree).expect("remaining labels are unchanged"));
        }
    }
    out
}

/// Shrink candidates for a braided word: drop a braid letter, or delete a
/// unit leaf together with its strand.
fn omegabr_shrinks(x: &OmegaBrElement) -> Vec<OmegaBrElement> {
    let mut out: Vec<OmegaBrElement> = braid_letter_drops(x.braid())
        .into_iter()
        .map(|b| OmegaBrElement::new(x.word().clone(), b).expect("strand count unchanged"))
        .collect();
    let labels = x.word().leaf_labels();
    for (idx, &label) in labels.iter().enumerate() {
        if label != 0 || x.word().len() == 1 {
            continue;
        }
        let mut counter = 0usize;
        let Some(tree) = remove_leaf_at(x.word().tree(), idx + 1, &mut counter) else {
            continue;
        };
        let word =
            ParenWord::new(x.word().arity(), tree).expect("remaining labels are unchanged");
        if let Ok(braid) = x.braid().delete_strands(&[idx + 1]) {
            out.push(OmegaBrElement::new(word, braid).expect("sizes stay aligned"));
        }
    }
    out
}

/// Composition of braided words routed through the pluggable graft and
/// cable, so fault injection reaches both halves.
fn omega_compose_impl(
    impls: &Impls,
    x: &OmegaBrElement,
    i: usize,
    y: &OmegaBrElement,
) -> Result<OmegaBrElement> {
    let word = (impls.graft)(x.word(), i, y.word())?;
    let pos = x.word().t_inverse(i)?;
    let braid = (impls.cable)(x.braid(), pos, y.braid())?;
    OmegaBrElement::new(word, braid)
}

/// Composition of colored-braid objects routed through the pluggable cable.
fn wcob_compose_impl(
    impls: &Impls,
    x: &crate::groupoid::WCobObject,
    i: usize,
    y: &crate::groupoid::WCobObject,
) -> Result<crate::groupoid::WCobObject> {
    let perm = x.perm().block_compose(i, y.perm())?;
    let braid = (impls.cable)(x.braid(), x.perm().inverse().apply(i), y.braid())?;
    crate::groupoid::WCobObject::new(perm, braid)
}
