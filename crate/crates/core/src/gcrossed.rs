//! Grade and twist bookkeeping for braids over a finite group.
//!
//! Strands carry grades from a finite group `G`. A positive crossing acts
//! on the pair of grades at its two positions by the Hurwitz move
//! `(g, h) -> (g h g^-1, g)`; a negative crossing by its inverse
//! `(g, h) -> (h, h^-1 g h)`. Both braid relations hold for this action,
//! so a braid acts on grade tuples ([`hurwitz_act`]) and the left-to-right
//! product of the tuple is conserved.
//!
//! [`twist_words`] records *how* each strand was twisted: every time a
//! strand passes under another, the over-strand's current grade (a
//! conjugate of its original grade) acts on it. The per-strand record is a
//! word in signed origin letters — letter `k` evaluates to the original
//! grade of the strand starting at bottom position `k` — built so that its
//! left-to-right evaluation is exactly the strand's accumulated twist.
//! Equal braid words produce per-strand words with equal evaluations for
//! every grade assignment, which is the well-definedness law the suite
//! checks.
//!
//! [`evaluate_graded`] runs both computations on a braided parenthesized
//! word, grading `x0` leaves by the group identity.

use std::collections::HashMap;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::all_permutations;
use crate::words::{OmegaBrElement, ParenWord};

/// A finite group presented by its multiplication table. Elements are the
/// indices `0..order`; the table is validated on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Builds a group from `table[a][b] = a * b`, checking closure, the
    /// latin-square property, associativity, identity, and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("a group needs at least one element".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {a} has length {} but the group has order {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &v in row {
                if v >= n {
                    return Err(Error::InvalidGroup(format!(
                        "entry {v} in row {a} is out of range"
                    )));
                }
                seen[v] = true;
            }
            if seen.iter().any(|&s| !s) {
                return Err(Error::InvalidGroup(format!("row {a} is not a permutation")));
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for row in &table {
                seen[row[b]] = true;
            }
            if seen.iter().any(|&s| !s) {
                return Err(Error::InvalidGroup(format!("column {b} is not a permutation")));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup {
            order: n,
            table,
            inverses,
            identity,
        })
    }

    /// The cyclic group of the given order; element `a` is the residue `a`.
    pub fn cyclic(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..order)
            .map(|a| (0..order).map(|b| (a + b) % order).collect())
            .collect();
        FiniteGroup::from_table(table)
    }

    /// The symmetric group on `n` points; elements are the permutations in
    /// lexicographic order of their one-line form, multiplied by
    /// composition (`a * b` applies `b` first).
    pub fn symmetric(n: usize) -> Result<Self> {
        let perms = all_permutations(n);
        let index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.images().to_vec(), i))
            .collect();
        let table = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index[a.compose(b).expect("same size").images()])
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a` conjugated by `g`: `g a g^-1`.
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    /// Integer power, negative exponents through the inverse.
    pub fn power(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut out = self.identity;
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    /// Left-to-right product of a sequence of elements.
    pub fn product(&self, elements: &[usize]) -> usize {
        elements.iter().fold(self.identity, |acc, &e| self.mul(acc, e))
    }

    fn check_element(&self, e: usize, context: &'static str) -> Result<()> {
        if e >= self.order {
            return Err(Error::IndexOutOfRange {
                context,
                index: e,
                bound: self.order - 1,
            });
        }
        Ok(())
    }
}

/// How the twist recorder reads the over-strand's grade. `CurrentGrade`
/// (the correct rule) uses the grade the strand carries at the crossing —
/// its original grade conjugated by its own accumulated twist.
/// `OriginalGrade` ignores accumulated twists; it satisfies the counting
/// law but breaks well-definedness, and is kept as an injectable fault.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwistStyle {
    CurrentGrade,
    OriginalGrade,
}

impl Default for TwistStyle {
    fn default() -> Self {
        TwistStyle::CurrentGrade
    }
}

/// A signed occurrence of an origin strand in a twist word. `origin` is
/// the 1-based bottom position where the acting strand starts; the letter
/// evaluates to that strand's original grade (inverted when `sign < 0`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TwistLetter {
    pub origin: usize,
    pub sign: i8,
}

/// The twist accumulated by one strand while the braid runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistRecord {
    /// 1-based bottom position where the strand starts.
    pub origin: usize,
    /// 1-based top position where it ends.
    pub final_position: usize,
    /// The twist as a word in signed origin letters; evaluates left to
    /// right to `twist` under the original grade assignment.
    pub word: Vec<TwistLetter>,
    /// The accumulated twist as a group element.
    pub twist: usize,
}

/// One Hurwitz move at `position` (1-based, acting on that position and
/// the next): the over-strand's grade conjugates its neighbour.
pub fn hurwitz_step(
    group: &FiniteGroup,
    tuple: &[usize],
    position: usize,
    sign: i8,
) -> Result<Vec<usize>> {
    if position == 0 || position + 1 > tuple.len() {
        return Err(Error::IndexOutOfRange {
            context: "hurwitz step",
            index: position,
            bound: tuple.len().saturating_sub(1),
        });
    }
    let mut out = tuple.to_vec();
    for &e in tuple {
        group.check_element(e, "hurwitz step")?;
    }
    let g = tuple[position - 1];
    let h = tuple[position];
    if sign > 0 {
        out[position - 1] = group.conj(g, h);
        out[position] = g;
    } else {
        out[position - 1] = h;
        out[position] = group.conj(group.inv(h), g);
    }
    Ok(out)
}

/// Acts a braid on a grade tuple indexed by bottom positions; the result
/// is indexed by top positions. Equal braid words act identically.
pub fn hurwitz_act(group: &FiniteGroup, braid: &BraidWord, tuple: &[usize]) -> Result<Vec<usize>> {
    if tuple.len() != braid.strands() {
        return Err(Error::SizeMismatch {
            context: "hurwitz action",
            expected: braid.strands(),
            found: tuple.len(),
        });
    }
    let mut out = tuple.to_vec();
    for &e in tuple {
        group.check_element(e, "hurwitz action")?;
    }
    for l in braid.letters() {
        out = hurwitz_step(group, &out, l.position, l.sign)?;
    }
    Ok(out)
}

/// Evaluates a twist word left to right under a grade assignment indexed
/// by bottom positions.
pub fn eval_twist_word(
    group: &FiniteGroup,
    word: &[TwistLetter],
    grades: &[usize],
) -> Result<usize> {
    let mut out = group.identity();
    for l in word {
        if l.origin == 0 || l.origin > grades.len() {
            return Err(Error::IndexOutOfRange {
                context: "twist word evaluation",
                index: l.origin,
                bound: grades.len(),
            });
        }
        let g = grades[l.origin - 1];
        group.check_element(g, "twist word evaluation")?;
        let e = if l.sign < 0 { group.inv(g) } else { g };
        out = group.mul(out, e);
    }
    Ok(out)
}

/// Records each strand's accumulated twist while `braid` runs over the
/// grade tuple (indexed by bottom positions).
pub fn twist_words(
    group: &FiniteGroup,
    braid: &BraidWord,
    grades: &[usize],
) -> Result<Vec<TwistRecord>> {
    twist_words_with(group, braid, grades, TwistStyle::CurrentGrade)
}

/// Like [`twist_words`], with an explicit [`TwistStyle`].
pub fn twist_words_with(
    group: &FiniteGroup,
    braid: &BraidWord,
    grades: &[usize],
    style: TwistStyle,
) -> Result<Vec<TwistRecord>> {
    let n = braid.strands();
    if grades.len() != n {
        return Err(Error::SizeMismatch {
            context: "twist words",
            expected: n,
            found: grades.len(),
        });
    }
    for &e in grades {
        group.check_element(e, "twist words")?;
    }
    // occ[p - 1]: origin of the strand currently at position p.
    let mut occ: Vec<usize> = (1..=n).collect();
    let mut twist: Vec<usize> = vec![group.identity(); n];
    let mut word: Vec<Vec<TwistLetter>> = vec![Vec::new(); n];
    for l in braid.letters() {
        let i = l.position;
        let (over, under) = if l.sign > 0 {
            (occ[i - 1], occ[i])
        } else {
            (occ[i], occ[i - 1])
        };
        match style {
            TwistStyle::CurrentGrade => {
                // The over-strand acts by its current grade: its original
                // grade conjugated by its own accumulated twist. As a word
                // that is w_over, the signed origin letter, then w_over
                // reversed with flipped signs — prepended to the
                // under-strand's word.
                let applied = group.conj(
                    twist[over - 1],
                    if l.sign > 0 {
                        grades[over - 1]
                    } else {
                        group.inv(grades[over - 1])
                    },
                );
                twist[under - 1] = group.mul(applied, twist[under - 1]);
                let mut conj: Vec<TwistLetter> = word[over - 1].clone();
                conj.push(TwistLetter {
                    origin: over,
                    sign: l.sign,
                });
                conj.extend(word[over - 1].iter().rev().map(|t| TwistLetter {
                    origin: t.origin,
                    sign: -t.sign,
                }));
                conj.extend(word[under - 1].iter().copied());
                word[under - 1] = conj;
            }
            TwistStyle::OriginalGrade => {
                let applied = if l.sign > 0 {
                    grades[over - 1]
                } else {
                    group.inv(grades[over - 1])
                };
                twist[under - 1] = group.mul(applied, twist[under - 1]);
                let mut conj = vec![TwistLetter {
                    origin: over,
                    sign: l.sign,
                }];
                conj.extend(word[under - 1].iter().copied());
                word[under - 1] = conj;
            }
        }
        occ.swap(i - 1, i);
    }
    Ok((1..=n)
        .map(|o| TwistRecord {
            origin: o,
            final_position: occ.iter().position(|&x| x == o).expect("occ is a permutation") + 1,
            word: word[o - 1].clone(),
            twist: twist[o - 1],
        })
        .collect())
}

/// Signed count of times each strand (by origin) passes under another
/// strand. When every strand carries the same grade `g`, the twist of a
/// strand evaluates to `g` raised to this count — an independent oracle
/// for the twist recorder.
pub fn signed_undercrossing_counts(braid: &BraidWord) -> Vec<i64> {
    let n = braid.strands();
    let mut occ: Vec<usize> = (1..=n).collect();
    let mut counts = vec![0i64; n];
    for l in braid.letters() {
        let i = l.position;
        let under = if l.sign > 0 { occ[i] } else { occ[i - 1] };
        counts[under - 1] += l.sign as i64;
        occ.swap(i - 1, i);
    }
    counts
}

/// The result of grading a braided parenthesized word: per-strand twist
/// records and the grades arriving at the top, with `x0` leaves graded by
/// the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedEvaluation {
    /// The target word shape (the input's word, unchanged).
    pub word: ParenWord,
    /// Grades by bottom position after extending over `x0` leaves.
    pub bottom_grades: Vec<usize>,
    pub twists: Vec<TwistRecord>,
    /// Grades by top position after the braid acts.
    pub top_grades: Vec<usize>,
}

/// Grades the visible letters of `x` (entry `k - 1` grades letter `xk`),
/// extends by the identity on `x0` leaves, and runs both the twist
/// recorder and the Hurwitz action over the braid.
pub fn evaluate_graded(
    group: &FiniteGroup,
    x: &OmegaBrElement,
    grades: &[usize],
) -> Result<GradedEvaluation> {
    if grades.len() != x.arity() {
        return Err(Error::SizeMismatch {
            context: "graded evaluation",
            expected: x.arity(),
            found: grades.len(),
        });
    }
    let bottom_grades: Vec<usize> = x
        .word()
        .leaf_labels()
        .iter()
        .map(|&k| if k == 0 { group.identity() } else { grades[k - 1] })
        .collect();
    let twists = twist_words(group, x.braid(), &bottom_grades)?;
    let top_grades = hurwitz_act(group, x.braid(), &bottom_grades)?;
    Ok(GradedEvaluation {
        word: x.word().clone(),
        bottom_grades,
        twists,
        top_grades,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{ParenWord, Tree};

    fn braid(strands: usize, pairs: &[(usize, i8)]) -> BraidWord {
        BraidWord::from_pairs(strands, pairs).unwrap()
    }

    /// Indices in symmetric(3): permutations in lexicographic order.
    const ID3: usize = 0; // [1,2,3]
    const T23: usize = 1; // [1,3,2]
    const T12: usize = 2; // [2,1,3]
    const C231: usize = 3; // [2,3,1]
    const C312: usize = 4; // [3,1,2]
    const T13: usize = 5; // [3,2,1]

    #[test]
    fn group_constructors_validate() {
        assert!(FiniteGroup::cyclic(0).is_err());
        let c4 = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.identity(), 0);
        assert_eq!(c4.mul(3, 2), 1);
        assert_eq!(c4.inv(1), 3);
        assert_eq!(c4.power(1, -3), 1);
        // Closure failure.
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]]).is_err());
        // Latin square but no identity (and not associative): x*y = x+y+1 mod 3.
        assert!(FiniteGroup::from_table(vec![
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![0, 1, 2],
        ])
        .is_ok()); // this one is shifted cyclic: identity is 2
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![1, 0]]).is_err());
    }

    #[test]
    fn symmetric_three_has_expected_structure() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), ID3);
        // (12)(13) applies (13) first: 1->3->3, 2->2->1, 3->1->2 = [3,1,2].
        assert_eq!(s3.mul(T12, T13), C312);
        assert_eq!(s3.mul(T13, T12), C231);
        assert_eq!(s3.inv(C231), C312);
        assert_eq!(s3.conj(T12, T13), T23);
    }

    #[test]
    fn hurwitz_step_conjugates_frozen_example() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let got = hurwitz_step(&s3, &[T12, T13], 1, 1).unwrap();
        assert_eq!(got, vec![T23, T12]);
        // The negative step undoes the positive one.
        let back = hurwitz_step(&s3, &got, 1, -1).unwrap();
        assert_eq!(back, vec![T12, T13]);
        assert!(hurwitz_step(&s3, &[T12, T13], 2, 1).is_err());
        assert!(hurwitz_step(&s3, &[T12, T13], 0, 1).is_err());
    }

    #[test]
    fn hurwitz_action_respects_braid_relations_spot_check() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let lhs = braid(3, &[(1, 1), (2, 1), (1, 1)]);
        let rhs = braid(3, &[(2, 1), (1, 1), (2, 1)]);
        for &tuple in &[[T12, T13, C231], [T23, T23, T12], [C312, ID3, T13]] {
            assert_eq!(
                hurwitz_act(&s3, &lhs, &tuple).unwrap(),
                hurwitz_act(&s3, &rhs, &tuple).unwrap()
            );
        }
    }

    #[test]
    fn hurwitz_action_conserves_the_total_product() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let a = braid(3, &[(1, 1), (2, -1), (1, 1), (1, -1), (2, 1)]);
        let tuple = [T12, C231, T13];
        let acted = hurwitz_act(&s3, &a, &tuple).unwrap();
        assert_eq!(s3.product(&acted), s3.product(&tuple));
    }

    #[test]
    fn twist_words_record_conjugated_letters() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let grades = [T12, T13];
        let recs = twist_words(&s3, &braid(2, &[(1, 1)]), &grades).unwrap();
        assert_eq!(recs[0].word, vec![]);
        assert_eq!(recs[0].twist, ID3);
        assert_eq!(recs[0].final_position, 2);
        assert_eq!(recs[1].word, vec![TwistLetter { origin: 1, sign: 1 }]);
        assert_eq!(recs[1].twist, T12);
        assert_eq!(recs[1].final_position, 1);

        // After s1 s1 the first strand passes under the twisted second
        // strand: its word is the conjugate (1 2 1^-1).
        let recs = twist_words(&s3, &braid(2, &[(1, 1), (1, 1)]), &grades).unwrap();
        assert_eq!(
            recs[0].word,
            vec![
                TwistLetter { origin: 1, sign: 1 },
                TwistLetter { origin: 2, sign: 1 },
                TwistLetter { origin: 1, sign: -1 },
            ]
        );
        assert_eq!(recs[0].twist, T23);
        assert_eq!(
            eval_twist_word(&s3, &recs[0].word, &grades).unwrap(),
            recs[0].twist
        );
    }

    #[test]
    fn twist_words_evaluate_to_the_recorded_twist() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let a = braid(3, &[(1, 1), (2, -1), (1, 1), (2, 1), (1, -1)]);
        let grades = [T12, C231, T13];
        for rec in twist_words(&s3, &a, &grades).unwrap() {
            assert_eq!(
                eval_twist_word(&s3, &rec.word, &grades).unwrap(),
                rec.twist,
                "strand {}",
                rec.origin
            );
            // The final positions assemble the underlying permutation.
            assert_eq!(
                rec.final_position,
                a.underlying_permutation().inverse().apply(rec.origin)
            );
        }
    }

    #[test]
    fn twist_evaluations_agree_on_equal_braids() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let lhs = braid(3, &[(1, 1), (2, 1), (1, 1)]);
        let rhs = braid(3, &[(2, 1), (1, 1), (2, 1)]);
        let grades = [T12, T13, C231];
        let a = twist_words(&s3, &lhs, &grades).unwrap();
        let b = twist_words(&s3, &rhs, &grades).unwrap();
        for (ra, rb) in a.iter().zip(&b) {
            assert_eq!(ra.final_position, rb.final_position);
            assert_eq!(ra.twist, rb.twist, "strand {}", ra.origin);
        }
        // The naive style that reads original grades disagrees between the
        // two sides of the relation.
        let na = twist_words_with(&s3, &lhs, &grades, TwistStyle::OriginalGrade).unwrap();
        let nb = twist_words_with(&s3, &rhs, &grades, TwistStyle::OriginalGrade).unwrap();
        assert!(na.iter().zip(&nb).any(|(ra, rb)| ra.twist != rb.twist));
    }

    #[test]
    fn counting_oracle_matches_equal_grades() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let a = braid(3, &[(1, 1), (2, -1), (1, -1), (2, 1), (1, 1)]);
        let counts = signed_undercrossing_counts(&a);
        assert_eq!(counts.iter().sum::<i64>(), a.exponent_sum());
        let g = C231;
        let grades = [g, g, g];
        for rec in twist_words(&s3, &a, &grades).unwrap() {
            assert_eq!(rec.twist, s3.power(g, counts[rec.origin - 1]));
        }
    }

    #[test]
    fn graded_evaluation_extends_over_unit_leaves() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let word = ParenWord::new(
            1,
            Tree::Node(Box::new(Tree::Leaf(1)), Box::new(Tree::Leaf(0))),
        )
        .unwrap();
        let x = OmegaBrElement::new(word, braid(2, &[(1, 1)])).unwrap();
        let got = evaluate_graded(&s3, &x, &[T12]).unwrap();
        assert_eq!(got.bottom_grades, vec![T12, ID3]);
        assert_eq!(got.top_grades, vec![ID3, T12]);
        assert_eq!(got.twists[1].word, vec![TwistLetter { origin: 1, sign: 1 }]);
        assert!(evaluate_graded(&s3, &x, &[T12, T13]).is_err());
    }
}
