//! Deliberately broken implementations for exercising the law suite.
//!
//! Each fault is a seeded mutation of one operation the laws route
//! through. A fault is useful only if some law catches it; `caught_by`
//! names a law that deterministically fails under the mutation (its
//! exhaustive tier contains a witnessing instance), which the tests
//! assert.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::gcrossed::TwistStyle;
use crate::groupoid::MorphIndexConvention;
use crate::words::ParenWord;

use super::Impls;

/// The five injectable mutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Fault {
    /// Cables at a skewed strand index.
    WrongCableIndex,
    /// Grafts without relabeling the inserted word's letters.
    DroppedRelabelInGraft,
    /// Composes morphisms operadically with the source-side permutation
    /// supplying the witness cable index.
    InputPermutationConvention,
    /// Applies Hurwitz twists using strands' original grades instead of
    /// their current (twist-conjugated) grades.
    OriginalGradeTwist,
    /// Inserts the cabled braid at the top instead of the bottom, and adds
    /// an extra crossing (top insertion alone would be sound, since the
    /// inserted braid slides along the cable).
    TopInsertionCable,
}

pub const ALL_FAULTS: [Fault; 5] = [
    Fault::WrongCableIndex,
    Fault::DroppedRelabelInGraft,
    Fault::InputPermutationConvention,
    Fault::OriginalGradeTwist,
    Fault::TopInsertionCable,
];

impl Fault {
    pub fn name(self) -> &'static str {
        match self {
            Fault::WrongCableIndex => "wrong-cable-index",
            Fault::DroppedRelabelInGraft => "dropped-relabel-in-graft",
            Fault::InputPermutationConvention => "input-permutation-convention",
            Fault::OriginalGradeTwist => "original-grade-twist",
            Fault::TopInsertionCable => "top-insertion-with-extra-crossing",
        }
    }

    /// A law whose exhaustive tier deterministically catches this fault.
    pub fn caught_by(self) -> &'static str {
        match self {
            Fault::WrongCableIndex => "braid.operad.projection",
            Fault::DroppedRelabelInGraft => "words.operad.vertical_assoc",
            Fault::InputPermutationConvention => "wcob.morphism.welldef",
            Fault::OriginalGradeTwist => "gcrossed.twist.welldef",
            Fault::TopInsertionCable => "braid.operad.unit",
        }
    }

    /// The implementation table with this fault injected.
    pub fn impls(self) -> Impls {
        let mut impls = Impls::default();
        match self {
            Fault::WrongCableIndex => impls.cable = cable_wrong_index,
            Fault::DroppedRelabelInGraft => impls.graft = graft_dropped_relabel,
            Fault::InputPermutationConvention => {
                impls.morphism_index = MorphIndexConvention::InputPermutation
            }
            Fault::OriginalGradeTwist => impls.twist_style = TwistStyle::OriginalGrade,
            Fault::TopInsertionCable => impls.cable = cable_top_insertion,
        }
        impls
    }
}

fn cable_wrong_index(a: &BraidWord, i: usize, c: &BraidWord) -> Result<BraidWord> {
    let n = a.strands();
    let skewed = if n >= 2 { i % n + 1 } else { i };
    a.cable(skewed, c)
}

fn graft_dropped_relabel(p: &ParenWord, i: usize, q: &ParenWord) -> Result<ParenWord> {
    if i == 0 || i > p.arity() {
        return p.graft(i, q); // defer to the real range error
    }
    let m = q.arity();
    let rehomed = p
        .tree()
        .map_labels(&|k| if k > i { k + m - 1 } else { k });
    let tree = rehomed.substitute(i, q.tree());
    ParenWord::new(p.arity() + m - 1, tree)
}

fn cable_top_insertion(a: &BraidWord, i: usize, c: &BraidWord) -> Result<BraidWord> {
    let m = c.strands();
    if m == 0 {
        return a.cable(i, c);
    }
    let widened = a.cable(i, &BraidWord::empty(m))?;
    let total = widened.strands();
    let top = widened.underlying_permutation().inverse().apply(i);
    let mut pairs: Vec<(usize, i8)> = widened
        .letters()
        .iter()
        .map(|l| (l.position, l.sign))
        .collect();
    pairs.extend(c.letters().iter().map(|l| (l.position + top - 1, l.sign)));
    if total >= 2 {
        pairs.push((top.min(total - 1), 1));
    }
    BraidWord::from_pairs(total, &pairs)
}
