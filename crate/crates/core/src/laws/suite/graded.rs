//! Laws for the Hurwitz action, grade bookkeeping, and twist records over
//! finite groups.

use std::fmt;

use rand::Rng;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::gcrossed::{
    eval_twist_word, evaluate_graded, hurwitz_act, signed_undercrossing_counts, twist_words_with,
    FiniteGroup,
};
use crate::laws::{gen, law_rng, Impls, LawParams, Verdict};
use crate::words::OmegaBrElement;

use super::{
    all_braids, braid_cancel_drops, braid_letter_drops, lcap, run_tiers, small_omegabr,
};

/// The two sides of each defining braid relation, on three and four
/// strands: the adjacent relation, its shifted copies, and far
/// commutation.
fn relation_pairs() -> Vec<(BraidWord, BraidWord)> {
    let word = |strands: usize, pairs: &[(usize, i8)]| {
        BraidWord::from_pairs(strands, pairs).expect("generator positions are in range")
    };
    vec![
        (
            word(3, &[(1, 1), (2, 1), (1, 1)]),
            word(3, &[(2, 1), (1, 1), (2, 1)]),
        ),
        (word(4, &[(1, 1), (3, 1)]), word(4, &[(3, 1), (1, 1)])),
        (
            word(4, &[(1, 1), (2, 1), (1, 1)]),
            word(4, &[(2, 1), (1, 1), (2, 1)]),
        ),
        (
            word(4, &[(2, 1), (3, 1), (2, 1)]),
            word(4, &[(3, 1), (2, 1), (3, 1)]),
        ),
    ]
}

/// Every grade tuple of the given length over a group of the given order.
fn all_tuples(order: usize, n: usize) -> Vec<Vec<usize>> {
    let total = order.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let g = idx % order;
                    idx /= order;
                    g
                })
                .collect()
        })
        .collect()
}

fn pick_group(rng: &mut rand_chacha::ChaCha8Rng) -> (&'static str, FiniteGroup) {
    let groups = gen::builtin_groups();
    let k = rng.gen_range(0..groups.len());
    groups[k].clone()
}

/// Two braid words acting on the same grade tuple.
#[derive(Clone)]
struct Pair {
    group_name: &'static str,
    group: FiniteGroup,
    a: BraidWord,
    b: BraidWord,
    grades: Vec<usize>,
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G={}; a={}; b={}; grades={:?}",
            self.group_name, self.a, self.b, self.grades
        )
    }
}

/// All builtin groups crossed with both sides of every braid relation and
/// every grade tuple.
fn relation_exhaustive() -> Vec<Pair> {
    let mut out = Vec::new();
    for (group_name, group) in gen::builtin_groups() {
        for (a, b) in relation_pairs() {
            for grades in all_tuples(group.order(), a.strands()) {
                out.push(Pair {
                    group_name,
                    group: group.clone(),
                    a: a.clone(),
                    b: b.clone(),
                    grades,
                });
            }
        }
    }
    out
}

/// Random equal-braid pairs with random grades.
fn equal_pair_random(params: &LawParams, name: &str) -> impl FnMut() -> Pair {
    let mut rng = law_rng(name, params.seed);
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    move || {
        let (group_name, group) = pick_group(&mut rng);
        let n = rng.gen_range(2..=max_arity);
        let (a, b) = gen::equal_braid_pair(&mut rng, n, max_len);
        let grades = gen::rand_grades(&mut rng, &group, n);
        Pair {
            group_name,
            group,
            a,
            b,
            grades,
        }
    }
}

/// Shrinks by removing cancelling letter pairs, which preserves braid
/// equivalence on both sides.
fn pair_shrinks(inst: &Pair) -> Vec<Pair> {
    let mut out = Vec::new();
    for a in braid_cancel_drops(&inst.a) {
        out.push(Pair { a, ..inst.clone() });
    }
    for b in braid_cancel_drops(&inst.b) {
        out.push(Pair { b, ..inst.clone() });
    }
    out
}

/// Equal braids act equally on grade tuples.
pub(super) fn hurwitz_welldef(params: &LawParams, impls: &Impls) -> Verdict {
    let _ = impls;
    let random = equal_pair_random(params, "gcrossed.hurwitz.welldef");
    let holds = |inst: &Pair| -> Result<bool> {
        Ok(hurwitz_act(&inst.group, &inst.a, &inst.grades)?
            == hurwitz_act(&inst.group, &inst.b, &inst.grades)?)
    };
    run_tiers(
        relation_exhaustive(),
        params.samples,
        random,
        holds,
        pair_shrinks,
    )
}

/// Acting by a product is acting by the factors in diagram order.
pub(super) fn hurwitz_action(params: &LawParams, impls: &Impls) -> Verdict {
    let _ = impls;
    let mut exhaustive = Vec::new();
    for (group_name, group) in gen::builtin_groups() {
        for n in 2..=3usize {
            for a in all_braids(n, lcap(params, 1)) {
                for b in all_braids(n, lcap(params, 1)) {
                    for grades in all_tuples(group.order(), n) {
                        exhaustive.push(Pair {
                            group_name,
                            group: group.clone(),
                            a: a.clone(),
                            b: b.clone(),
                            grades,
                        });
                    }
                }
            }
        }
    }
    let mut rng = law_rng("gcrossed.hurwitz.action", params.seed);
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let random = move || {
        let (group_name, group) = pick_group(&mut rng);
        let n = rng.gen_range(2..=max_arity);
        let a = gen::rand_braid(&mut rng, n, max_len);
        let b = gen::rand_braid(&mut rng, n, max_len);
        let grades = gen::rand_grades(&mut rng, &group, n);
        Pair {
            group_name,
            group,
            a,
            b,
            grades,
        }
    };
    let holds = |inst: &Pair| -> Result<bool> {
        let joined = hurwitz_act(&inst.group, &inst.a.multiply(&inst.b)?, &inst.grades)?;
        let staged = hurwitz_act(
            &inst.group,
            &inst.b,
            &hurwitz_act(&inst.group, &inst.a, &inst.grades)?,
        )?;
        Ok(joined == staged)
    };
    let shrink = |inst: &Pair| {
        let mut out = Vec::new();
        for a in braid_letter_drops(&inst.a) {
            out.push(Pair { a, ..inst.clone() });
        }
        for b in braid_letter_drops(&inst.b) {
            out.push(Pair { b, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A single braid acting on a grade tuple.
#[derive(Clone)]
struct Single {
    group_name: &'static str,
    group: FiniteGroup,
    a: BraidWord,
    grades: Vec<usize>,
}

impl fmt::Display for Single {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G={}; a={}; grades={:?}",
            self.group_name, self.a, self.grades
        )
    }
}

/// The product of all grades is unchanged by the action.
pub(super) fn grade_conservation(params: &LawParams, impls: &Impls) -> Verdict {
    let _ = impls;
    let mut exhaustive = Vec::new();
    for (group_name, group) in gen::builtin_groups() {
        for n in 2..=3usize {
            for a in all_braids(n, lcap(params, 2)) {
                for grades in all_tuples(group.order(), n) {
                    exhaustive.push(Single {
                        group_name,
                        group: group.clone(),
                        a: a.clone(),
                        grades,
                    });
                }
            }
        }
    }
    let mut rng = law_rng("gcrossed.grade.conservation", params.seed);
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let random = move || {
        let (group_name, group) = pick_group(&mut rng);
        let n = rng.gen_range(2..=max_arity);
        let a = gen::rand_braid(&mut rng, n, max_len);
        let grades = gen::rand_grades(&mut rng, &group, n);
        Single {
            group_name,
            group,
            a,
            grades,
        }
    };
    let holds = |inst: &Single| -> Result<bool> {
        let acted = hurwitz_act(&inst.group, &inst.a, &inst.grades)?;
        Ok(inst.group.product(&acted) == inst.group.product(&inst.grades))
    };
    let shrink = |inst: &Single| {
        braid_letter_drops(&inst.a)
            .into_iter()
            .map(|a| Single { a, ..inst.clone() })
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Equal braids produce the same twists and final positions, and every
/// recorded twist word evaluates to its recorded twist.
pub(super) fn twist_welldef(params: &LawParams, impls: &Impls) -> Verdict {
    let style = impls.twist_style;
    let random = equal_pair_random(params, "gcrossed.twist.welldef");
    let holds = move |inst: &Pair| -> Result<bool> {
        let ra = twist_words_with(&inst.group, &inst.a, &inst.grades, style)?;
        let rb = twist_words_with(&inst.group, &inst.b, &inst.grades, style)?;
        if ra.len() != rb.len() {
            return Ok(false);
        }
        for (x, y) in ra.iter().zip(&rb) {
            if x.twist != y.twist || x.final_position != y.final_position {
                return Ok(false);
            }
            if eval_twist_word(&inst.group, &x.word, &inst.grades)? != x.twist {
                return Ok(false);
            }
        }
        Ok(true)
    };
    run_tiers(
        relation_exhaustive(),
        params.samples,
        random,
        holds,
        pair_shrinks,
    )
}

/// A braid with a uniform grade.
#[derive(Clone)]
struct Counting {
    group_name: &'static str,
    group: FiniteGroup,
    elem: usize,
    a: BraidWord,
}

impl fmt::Display for Counting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G={}; elem={}; a={}",
            self.group_name, self.elem, self.a
        )
    }
}

/// Under a uniform grade the twist of a strand is that grade raised to the
/// strand's signed undercrossing count.
pub(super) fn twist_counting(params: &LawParams, impls: &Impls) -> Verdict {
    let style = impls.twist_style;
    let mut exhaustive = Vec::new();
    for (group_name, group) in gen::builtin_groups() {
        for elem in 0..group.order() {
            for n in 2..=3usize {
                for a in all_braids(n, lcap(params, 2)) {
                    exhaustive.push(Counting {
                        group_name,
                        group: group.clone(),
                        elem,
                        a: a.clone(),
                    });
                }
            }
        }
    }
    let mut rng = law_rng("gcrossed.twist.counting", params.seed);
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let random = move || {
        let (group_name, group) = pick_group(&mut rng);
        let n = rng.gen_range(2..=max_arity);
        let elem = rng.gen_range(0..group.order());
        let a = gen::rand_braid(&mut rng, n, max_len);
        Counting {
            group_name,
            group,
            elem,
            a,
        }
    };
    let holds = move |inst: &Counting| -> Result<bool> {
        let grades = vec![inst.elem; inst.a.strands()];
        let records = twist_words_with(&inst.group, &inst.a, &grades, style)?;
        let counts = signed_undercrossing_counts(&inst.a);
        for (record, &count) in records.iter().zip(&counts) {
            if record.twist != inst.group.power(inst.elem, count) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let shrink = |inst: &Counting| {
        braid_letter_drops(&inst.a)
            .into_iter()
            .map(|a| Counting { a, ..inst.clone() })
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A graded composition of braided words.
#[derive(Clone)]
struct EvalCompose {
    group_name: &'static str,
    group: FiniteGroup,
    x: OmegaBrElement,
    i: usize,
    y: OmegaBrElement,
    grades: Vec<usize>,
}

impl fmt::Display for EvalCompose {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "G={}; x={}; i={}; y={}; grades={:?}",
            self.group_name, self.x, self.i, self.y, self.grades
        )
    }
}

/// Evaluating a composite splits into evaluating the factors: grades
/// restrict to the inserted block and collapse to its total on the slot,
/// and inserted strands pick up the thick strand's twist on the left.
pub(super) fn evaluate_compose(params: &LawParams, impls: &Impls) -> Verdict {
    let _ = impls;
    let elements = small_omegabr(2, lcap(params, 1));
    let mut exhaustive = Vec::new();
    for (group_name, group) in gen::builtin_groups() {
        for x in &elements {
            for y in &elements {
                let n = x.arity();
                let m = y.arity();
                if n == 0 || n + m - 1 > 2 {
                    continue;
                }
                for i in 1..=n {
                    for grades in all_tuples(group.order(), n + m - 1) {
                        exhaustive.push(EvalCompose {
                            group_name,
                            group: group.clone(),
                            x: x.clone(),
                            i,
                            y: y.clone(),
                            grades,
                        });
                    }
                }
            }
        }
    }
    let mut rng = law_rng("gcrossed.evaluate.compose", params.seed);
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let (group_name, group) = pick_group(&mut rng);
        let n = rng.gen_range(1..=max_arity);
        let m = rng.gen_range(0..=max_arity);
        let x = gen::rand_omegabr_arity(&mut rng, n, 2, max_len);
        let y = gen::rand_omegabr_arity(&mut rng, m, 2, max_len);
        let grades = gen::rand_grades(&mut rng, &group, n + m - 1);
        EvalCompose {
            group_name,
            group,
            x,
            i: rng.gen_range(1..=n),
            y,
            grades,
        }
    };
    let holds = |inst: &EvalCompose| -> Result<bool> {
        let group = &inst.group;
        let z = inst.x.compose(inst.i, &inst.y)?;
        let ez = evaluate_graded(group, &z, &inst.grades)?;
        let n = inst.x.arity();
        let m = inst.y.arity();
        let gy = inst.grades[inst.i - 1..inst.i - 1 + m].to_vec();
        let ey = evaluate_graded(group, &inst.y, &gy)?;
        let mut gx = Vec::with_capacity(n);
        for j in 1..=n {
            gx.push(if j == inst.i {
                group.product(&ey.bottom_grades)
            } else if j < inst.i {
                inst.grades[j - 1]
            } else {
                inst.grades[j + m - 2]
            });
        }
        let ex = evaluate_graded(group, &inst.x, &gx)?;
        let pos = inst.x.word().t_inverse(inst.i)?;
        let ly = inst.y.word().len();
        let lz = z.word().len();
        for s in 1..=lz {
            let expect = if s < pos {
                ex.bottom_grades[s - 1]
            } else if s < pos + ly {
                ey.bottom_grades[s - pos]
            } else {
                ex.bottom_grades[s - ly]
            };
            if ez.bottom_grades[s - 1] != expect {
                return Ok(false);
            }
        }
        for s in 1..=lz {
            let expect = if s < pos {
                ex.twists[s - 1].twist
            } else if s < pos + ly {
                group.mul(ex.twists[pos - 1].twist, ey.twists[s - pos].twist)
            } else {
                ex.twists[s - ly].twist
            };
            if ez.twists[s - 1].twist != expect {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let shrink = |inst: &EvalCompose| {
        let mut out = Vec::new();
        for b in braid_letter_drops(inst.x.braid()) {
            let x = OmegaBrElement::new(inst.x.word().clone(), b)
                .expect("strand count unchanged");
            out.push(EvalCompose { x, ..inst.clone() });
        }
        for b in braid_letter_drops(inst.y.braid()) {
            let y = OmegaBrElement::new(inst.y.word().clone(), b)
                .expect("strand count unchanged");
            out.push(EvalCompose { y, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}
