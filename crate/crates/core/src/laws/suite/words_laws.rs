//! Operad laws for parenthesized words, the index identities relating slots
//! to leaf positions, and the compatibility of the projection to
//! permutations.

use std::fmt;

use rand::Rng;

use crate::error::Result;
use crate::laws::{gen, law_rng, Impls, LawParams, Verdict};
use crate::perm::Permutation;
use crate::words::ParenWord;

use super::{lcap, run_tiers, word_zero_drops, words_by_len};

/// Two nested grafts into a base word.
#[derive(Clone)]
struct Triple {
    p: ParenWord,
    i: usize,
    q: ParenWord,
    j: usize,
    r: ParenWord,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={}; i={}; q={}; j={}; r={}",
            self.p, self.i, self.q, self.j, self.r
        )
    }
}

/// Shrinks by deleting unit leaves; arities and slot indices survive.
fn triple_shrinks(inst: &Triple) -> Vec<Triple> {
    let mut out = Vec::new();
    for p in word_zero_drops(&inst.p) {
        out.push(Triple { p, ..inst.clone() });
    }
    for q in word_zero_drops(&inst.q) {
        out.push(Triple { q, ..inst.clone() });
    }
    for r in word_zero_drops(&inst.r) {
        out.push(Triple { r, ..inst.clone() });
    }
    out
}

/// All word triples whose leaf counts sum to at most the budget.
fn exhaustive_triples(budget: usize) -> Vec<(ParenWord, ParenWord, ParenWord)> {
    let mut out = Vec::new();
    let by_len = words_by_len();
    let cap = budget.min(6);
    for lp in 1..=cap.saturating_sub(2) {
        for p in &by_len[lp] {
            for lq in 1..=(cap - lp - 1).min(6) {
                for q in &by_len[lq] {
                    for lr in 1..=(cap - lp - lq).min(6) {
                        for r in &by_len[lr] {
                            out.push((p.clone(), q.clone(), r.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `(p ∘_i q) ∘_{i+j-1} r  ==  p ∘_i (q ∘_j r)`.
pub(super) fn vertical_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("words.operad.vertical_assoc", params.seed);
    let mut exhaustive = Vec::new();
    for (p, q, r) in exhaustive_triples(lcap(params, 6)) {
        for i in 1..=p.arity() {
            for j in 1..=q.arity() {
                exhaustive.push(Triple {
                    p: p.clone(),
                    i,
                    q: q.clone(),
                    j,
                    r: r.clone(),
                });
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let random = move || {
        let ap = rng.gen_range(1..=max_arity);
        let aq = rng.gen_range(1..=max_arity);
        let ar = rng.gen_range(0..=max_arity);
        let p = gen::rand_word_arity(&mut rng, ap, 2);
        let q = gen::rand_word_arity(&mut rng, aq, 2);
        let r = gen::rand_word_arity(&mut rng, ar, 2);
        Triple {
            p,
            i: rng.gen_range(1..=ap),
            q,
            j: rng.gen_range(1..=aq),
            r,
        }
    };
    let graft = impls.graft;
    let holds = move |inst: &Triple| -> Result<bool> {
        let lhs = graft(&graft(&inst.p, inst.i, &inst.q)?, inst.i + inst.j - 1, &inst.r)?;
        let rhs = graft(&inst.p, inst.i, &graft(&inst.q, inst.j, &inst.r)?)?;
        Ok(lhs == rhs)
    };
    run_tiers(exhaustive, params.samples, random, holds, triple_shrinks)
}

/// For `i < j`: `(p ∘_i q) ∘_{j+|q|-1} r  ==  (p ∘_j r) ∘_i q`.
pub(super) fn horizontal_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("words.operad.horizontal_assoc", params.seed);
    let mut exhaustive = Vec::new();
    for (p, q, r) in exhaustive_triples(lcap(params, 6)) {
        for i in 1..p.arity() {
            for j in i + 1..=p.arity() {
                exhaustive.push(Triple {
                    p: p.clone(),
                    i,
                    q: q.clone(),
                    j,
                    r: r.clone(),
                });
            }
        }
    }
    let max_arity = params.max_arity.max(2);
    let random = move || {
        let ap = rng.gen_range(2..=max_arity);
        let i = rng.gen_range(1..ap);
        let j = rng.gen_range(i + 1..=ap);
        let aq = rng.gen_range(0..=max_arity);
        let ar = rng.gen_range(0..=max_arity);
        let p = gen::rand_word_arity(&mut rng, ap, 2);
        let q = gen::rand_word_arity(&mut rng, aq, 2);
        let r = gen::rand_word_arity(&mut rng, ar, 2);
        Triple { p, i, q, j, r }
    };
    let graft = impls.graft;
    let holds = move |inst: &Triple| -> Result<bool> {
        let aq = inst.q.arity();
        let lhs = graft(&graft(&inst.p, inst.i, &inst.q)?, inst.j + aq - 1, &inst.r)?;
        let rhs = graft(&graft(&inst.p, inst.j, &inst.r)?, inst.i, &inst.q)?;
        Ok(lhs == rhs)
    };
    run_tiers(exhaustive, params.samples, random, holds, triple_shrinks)
}

/// A word with a slot index (a placeholder slot of 1 when the arity is 0).
#[derive(Clone)]
struct Unit {
    p: ParenWord,
    i: usize,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}; i={}", self.p, self.i)
    }
}

/// `p ∘_i ν == p` and `ν ∘_1 p == p`, with `ν` the one-slot word.
pub(super) fn unit(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("words.operad.unit", params.seed);
    let mut exhaustive = Vec::new();
    for len in 1..=lcap(params, 4).min(6) {
        for p in &words_by_len()[len] {
            for i in 1..=p.arity().max(1) {
                exhaustive.push(Unit { p: p.clone(), i });
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let random = move || {
        let arity = rng.gen_range(0..=max_arity);
        let p = gen::rand_word_arity(&mut rng, arity, 2);
        Unit {
            p,
            i: rng.gen_range(1..=arity.max(1)),
        }
    };
    let graft = impls.graft;
    let holds = move |inst: &Unit| -> Result<bool> {
        let nu = ParenWord::unit();
        let mut ok = graft(&nu, 1, &inst.p)? == inst.p;
        if inst.p.arity() >= 1 {
            ok = ok && graft(&inst.p, inst.i, &nu)? == inst.p;
        }
        Ok(ok)
    };
    let shrink = |inst: &Unit| {
        word_zero_drops(&inst.p)
            .into_iter()
            .map(|p| Unit { p, i: inst.i })
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Relabeling both factors against relabeling the composite.
#[derive(Clone)]
struct Equiv {
    p: ParenWord,
    sn: Permutation,
    i: usize,
    q: ParenWord,
    sm: Permutation,
}

impl fmt::Display for Equiv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={}; s_n={}; i={}; q={}; s_m={}",
            self.p, self.sn, self.i, self.q, self.sm
        )
    }
}

/// `(s_n · p) ∘_i (s_m · q)  ==  (s_n ∘_i s_m) · (p ∘_{s_n^{-1}(i)} q)`.
pub(super) fn equivariance(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("words.operad.equivariance", params.seed);
    let mut exhaustive = Vec::new();
    let cap = lcap(params, 3).min(6).max(1);
    for lp in 1..=cap {
        for p in &words_by_len()[lp] {
            for sn in crate::perm::all_permutations(p.arity()) {
                for i in 1..=p.arity() {
                    for lq in 1..=cap {
                        for q in &words_by_len()[lq] {
                            for sm in crate::perm::all_permutations(q.arity()) {
                                exhaustive.push(Equiv {
                                    p: p.clone(),
                                    sn: sn.clone(),
                                    i,
                                    q: q.clone(),
                                    sm,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let random = move || {
        let ap = rng.gen_range(1..=max_arity);
        let aq = rng.gen_range(0..=max_arity);
        let p = gen::rand_word_arity(&mut rng, ap, 2);
        let q = gen::rand_word_arity(&mut rng, aq, 2);
        Equiv {
            p,
            sn: gen::rand_perm(&mut rng, ap),
            i: rng.gen_range(1..=ap),
            q,
            sm: gen::rand_perm(&mut rng, aq),
        }
    };
    let graft = impls.graft;
    let holds = move |inst: &Equiv| -> Result<bool> {
        let lhs = graft(
            &inst.p.relabel(&inst.sn)?,
            inst.i,
            &inst.q.relabel(&inst.sm)?,
        )?;
        let slot = inst.sn.inverse().apply(inst.i);
        let sigma = inst.sn.block_compose(inst.i, &inst.sm)?;
        let rhs = graft(&inst.p, slot, &inst.q)?.relabel(&sigma)?;
        Ok(lhs == rhs)
    };
    let shrink = |inst: &Equiv| {
        let mut out = Vec::new();
        for p in word_zero_drops(&inst.p) {
            out.push(Equiv { p, ..inst.clone() });
        }
        for q in word_zero_drops(&inst.q) {
            out.push(Equiv { q, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A graft pair for the index identities.
#[derive(Clone)]
struct Pair {
    p: ParenWord,
    q: ParenWord,
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}; q={}", self.p, self.q)
    }
}

fn pair_shrinks(inst: &Pair) -> Vec<Pair> {
    let mut out = Vec::new();
    for p in word_zero_drops(&inst.p) {
        out.push(Pair { p, ..inst.clone() });
    }
    for q in word_zero_drops(&inst.q) {
        out.push(Pair { q, ..inst.clone() });
    }
    out
}

/// Every pair with leaf counts summing to at most the budget, lazily.
fn word_pairs(budget: usize) -> impl Iterator<Item = Pair> + 'static {
    let by_len = words_by_len();
    let cap = budget.min(7);
    (1..=cap.saturating_sub(1).min(6)).flat_map(move |lp| {
        by_len[lp]
            .iter()
            .filter(|p| p.arity() >= 1)
            .flat_map(move |p| {
                (1..=(cap - lp).min(6)).flat_map(move |lq| {
                    by_len[lq].iter().map(move |q| Pair {
                        p: p.clone(),
                        q: q.clone(),
                    })
                })
            })
    })
}

fn random_pair(params: &LawParams, name: &str) -> impl FnMut() -> Pair {
    let mut rng = law_rng(name, params.seed);
    let max_arity = params.max_arity.max(1);
    move || {
        let ap = rng.gen_range(1..=max_arity);
        let aq = rng.gen_range(0..=max_arity);
        Pair {
            p: gen::rand_word_arity(&mut rng, ap, 2),
            q: gen::rand_word_arity(&mut rng, aq, 2),
        }
    }
}

/// Runs an index identity over every pair in both tiers.
fn run_index_law(
    params: &LawParams,
    name: &str,
    impls: &Impls,
    check: fn(&Pair, crate::laws::GraftFn) -> Result<bool>,
) -> Verdict {
    let random = random_pair(params, name);
    let graft = impls.graft;
    let budget = (params.max_len + 1).min(7);
    run_tiers(
        word_pairs(budget),
        params.samples,
        random,
        move |inst: &Pair| check(inst, graft),
        pair_shrinks,
    )
}

/// Slot `j` of `q`, seen inside `p ∘_i q`, sits at slot `i+j-1`.
pub(super) fn index_vertical1(params: &LawParams, impls: &Impls) -> Verdict {
    run_index_law(params, "words.index.vertical1", impls, |inst, graft| {
        let p = &inst.p;
        let q = &inst.q;
        for i in 1..=p.arity() {
            let comp = graft(p, i, q)?;
            let pos_i = p.t_inverse(i)?;
            for j in 1..=q.arity() {
                if comp.t_map(pos_i + q.t_inverse(j)? - 1)? != i + j - 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })
}

/// For `i < j` with leaf(i) left of leaf(j): grafting at `j` leaves the
/// position of slot `i` alone.
pub(super) fn index_horizontal1a(params: &LawParams, impls: &Impls) -> Verdict {
    run_index_law(params, "words.index.horizontal1a", impls, |inst, graft| {
        let p = &inst.p;
        let q = &inst.q;
        for j in 1..=p.arity() {
            let comp = graft(p, j, q)?;
            let pos_j = p.t_inverse(j)?;
            for i in 1..j {
                let pos_i = p.t_inverse(i)?;
                if pos_i < pos_j && comp.t_map(pos_i)? != i {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })
}

/// For `i < j` with leaf(i) left of leaf(j): grafting at `i` shifts the
/// position of slot `j` by the inserted length and its label by the
/// inserted arity.
pub(super) fn index_horizontal1b(params: &LawParams, impls: &Impls) -> Verdict {
    run_index_law(params, "words.index.horizontal1b", impls, |inst, graft| {
        let p = &inst.p;
        let q = &inst.q;
        for i in 1..=p.arity() {
            let comp = graft(p, i, q)?;
            let pos_i = p.t_inverse(i)?;
            for j in i + 1..=p.arity() {
                let pos_j = p.t_inverse(j)?;
                if pos_j > pos_i && comp.t_map(pos_j + q.len() - 1)? != j + q.arity() - 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })
}

/// For `i < j` with leaf(i) right of leaf(j): grafting at `j` shifts the
/// position of slot `i` but not its label.
pub(super) fn index_horizontal2a(params: &LawParams, impls: &Impls) -> Verdict {
    run_index_law(params, "words.index.horizontal2a", impls, |inst, graft| {
        let p = &inst.p;
        let q = &inst.q;
        for j in 1..=p.arity() {
            let comp = graft(p, j, q)?;
            let pos_j = p.t_inverse(j)?;
            for i in 1..j {
                let pos_i = p.t_inverse(i)?;
                if pos_i > pos_j && comp.t_map(pos_i + q.len() - 1)? != i {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })
}

/// For `i < j` with leaf(i) right of leaf(j): grafting at `i` keeps the
/// position of slot `j` but relabels it by the inserted arity.
pub(super) fn index_horizontal2b(params: &LawParams, impls: &Impls) -> Verdict {
    run_index_law(params, "words.index.horizontal2b", impls, |inst, graft| {
        let p = &inst.p;
        let q = &inst.q;
        for i in 1..=p.arity() {
            let comp = graft(p, i, q)?;
            let pos_i = p.t_inverse(i)?;
            for j in i + 1..=p.arity() {
                let pos_j = p.t_inverse(j)?;
                if pos_j < pos_i && comp.t_map(pos_j)? != j + q.arity() - 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })
}

/// A graft instance together with a relabeling.
#[derive(Clone)]
struct TauInst {
    p: ParenWord,
    i: usize,
    q: ParenWord,
    sigma: Permutation,
}

impl fmt::Display for TauInst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p={}; i={}; q={}; sigma={}",
            self.p, self.i, self.q, self.sigma
        )
    }
}

/// The slot-to-position permutation turns grafting into block composition
/// and relabeling into left multiplication.
pub(super) fn tau_morphism(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("tau.morphism", params.seed);
    let mut exhaustive = Vec::new();
    let cap = lcap(params, 3).min(6).max(1);
    for lp in 1..=cap {
        for p in &words_by_len()[lp] {
            for sigma in crate::perm::all_permutations(p.arity()) {
                for i in 1..=p.arity() {
                    for lq in 1..=cap {
                        for q in &words_by_len()[lq] {
                            exhaustive.push(TauInst {
                                p: p.clone(),
                                i,
                                q: q.clone(),
                                sigma: sigma.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let random = move || {
        let ap = rng.gen_range(1..=max_arity);
        let aq = rng.gen_range(0..=max_arity);
        TauInst {
            p: gen::rand_word_arity(&mut rng, ap, 2),
            i: rng.gen_range(1..=ap),
            q: gen::rand_word_arity(&mut rng, aq, 2),
            sigma: gen::rand_perm(&mut rng, ap),
        }
    };
    let graft = impls.graft;
    let holds = move |inst: &TauInst| -> Result<bool> {
        let grafted = graft(&inst.p, inst.i, &inst.q)?;
        let split = inst.p.tau().block_compose(inst.i, &inst.q.tau())?;
        let relabeled = inst.p.relabel(&inst.sigma)?.tau();
        let expect = inst.sigma.compose(&inst.p.tau())?;
        Ok(grafted.tau() == split && relabeled == expect)
    };
    let shrink = |inst: &TauInst| {
        let mut out = Vec::new();
        for p in word_zero_drops(&inst.p) {
            out.push(TauInst { p, ..inst.clone() });
        }
        for q in word_zero_drops(&inst.q) {
            out.push(TauInst { q, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}
