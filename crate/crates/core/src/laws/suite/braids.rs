//! Operad laws for braid words under cabling, plus the word-problem oracle.

use std::fmt;

use rand::Rng;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::laws::{gen, law_rng, Impls, LawParams, Verdict};

use super::{acap, all_braids, braid_letter_drops, braid_strand_drop, lcap, run_tiers};

/// Two nested cablings into a base braid.
#[derive(Clone)]
struct Triple {
    a: BraidWord,
    i: usize,
    b: BraidWord,
    j: usize,
    c: BraidWord,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a={}; i={}; b={}; j={}; c={}",
            self.a, self.i, self.b, self.j, self.c
        )
    }
}

/// Shrinks by dropping letters anywhere and unused top strands.
fn triple_shrinks(inst: &Triple) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in braid_letter_drops(&inst.a) {
        out.push(Triple { a, ..inst.clone() });
    }
    for b in braid_letter_drops(&inst.b) {
        out.push(Triple { b, ..inst.clone() });
    }
    for c in braid_letter_drops(&inst.c) {
        out.push(Triple { c, ..inst.clone() });
    }
    if let Some(a) = braid_strand_drop(&inst.a) {
        out.push(Triple { a, ..inst.clone() });
    }
    if let Some(b) = braid_strand_drop(&inst.b) {
        out.push(Triple { b, ..inst.clone() });
    }
    if let Some(c) = braid_strand_drop(&inst.c) {
        out.push(Triple { c, ..inst.clone() });
    }
    out
}

/// All triples with bounded strand counts and a shared letter budget.
fn exhaustive_triples(
    params: &LawParams,
    n_min: usize,
    m_min: usize,
    k_min: usize,
) -> Vec<(BraidWord, BraidWord, BraidWord)> {
    let cap = acap(params, 3).max(n_min);
    let budget = lcap(params, 3);
    let mut out = Vec::new();
    for n in n_min..=cap {
        for a in all_braids(n, budget) {
            for m in m_min..=cap {
                for b in all_braids(m, budget - a.len()) {
                    for k in k_min..=cap {
                        for c in all_braids(k, budget - a.len() - b.len()) {
                            out.push((a.clone(), b.clone(), c.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// `(a ∘_i b) ∘_{i+j-1} c  ==  a ∘_i (b ∘_j c)`.
pub(super) fn vertical_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("braid.operad.vertical_assoc", params.seed);
    let mut exhaustive = Vec::new();
    for (a, b, c) in exhaustive_triples(params, 1, 1, 0) {
        for i in 1..=a.strands() {
            for j in 1..=b.strands() {
                exhaustive.push(Triple {
                    a: a.clone(),
                    i,
                    b: b.clone(),
                    j,
                    c: c.clone(),
                });
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let n = rng.gen_range(1..=max_arity);
        let m = rng.gen_range(1..=max_arity);
        let k = rng.gen_range(0..=max_arity);
        Triple {
            a: gen::rand_braid(&mut rng, n, max_len),
            i: rng.gen_range(1..=n),
            b: gen::rand_braid(&mut rng, m, max_len),
            j: rng.gen_range(1..=m),
            c: gen::rand_braid(&mut rng, k, max_len),
        }
    };
    let cable = impls.cable;
    let holds = move |inst: &Triple| -> Result<bool> {
        let lhs = cable(&cable(&inst.a, inst.i, &inst.b)?, inst.i + inst.j - 1, &inst.c)?;
        let rhs = cable(&inst.a, inst.i, &cable(&inst.b, inst.j, &inst.c)?)?;
        lhs.equals(&rhs)
    };
    let shrink = |inst: &Triple| {
        triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i <= t.a.strands() && t.j <= t.b.strands())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// For `i < j`: `(a ∘_i b) ∘_{j+|b|-1} c  ==  (a ∘_j c) ∘_i b`.
pub(super) fn horizontal_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("braid.operad.horizontal_assoc", params.seed);
    let mut exhaustive = Vec::new();
    for (a, b, c) in exhaustive_triples(params, 2, 0, 0) {
        for i in 1..a.strands() {
            for j in i + 1..=a.strands() {
                exhaustive.push(Triple {
                    a: a.clone(),
                    i,
                    b: b.clone(),
                    j,
                    c: c.clone(),
                });
            }
        }
    }
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let random = move || {
        let n = rng.gen_range(2..=max_arity);
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let m = rng.gen_range(0..=max_arity);
        let k = rng.gen_range(0..=max_arity);
        Triple {
            a: gen::rand_braid(&mut rng, n, max_len),
            i,
            b: gen::rand_braid(&mut rng, m, max_len),
            j,
            c: gen::rand_braid(&mut rng, k, max_len),
        }
    };
    let cable = impls.cable;
    let holds = move |inst: &Triple| -> Result<bool> {
        let m = inst.b.strands();
        let lhs = cable(&cable(&inst.a, inst.i, &inst.b)?, inst.j + m - 1, &inst.c)?;
        let rhs = cable(&cable(&inst.a, inst.j, &inst.c)?, inst.i, &inst.b)?;
        lhs.equals(&rhs)
    };
    let shrink = |inst: &Triple| {
        triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i < t.j && t.j <= t.a.strands())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A braid with a slot index.
#[derive(Clone)]
struct Unit {
    a: BraidWord,
    i: usize,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}; i={}", self.a, self.i)
    }
}

/// `a ∘_i e_1 == a` and `e_1 ∘_1 a == a`.
pub(super) fn unit(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("braid.operad.unit", params.seed);
    let cap = acap(params, 3);
    let budget = lcap(params, 4);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for a in all_braids(n, budget) {
            for i in 1..=n {
                exhaustive.push(Unit { a: a.clone(), i });
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let n = rng.gen_range(1..=max_arity);
        Unit {
            a: gen::rand_braid(&mut rng, n, max_len),
            i: rng.gen_range(1..=n),
        }
    };
    let cable = impls.cable;
    let holds = move |inst: &Unit| -> Result<bool> {
        let one = BraidWord::empty(1);
        Ok(cable(&inst.a, inst.i, &one)?.equals(&inst.a)?
            && cable(&one, 1, &inst.a)?.equals(&inst.a)?)
    };
    let shrink = |inst: &Unit| {
        let mut out: Vec<Unit> = braid_letter_drops(&inst.a)
            .into_iter()
            .map(|a| Unit { a, i: inst.i })
            .collect();
        if let Some(a) = braid_strand_drop(&inst.a) {
            if inst.i <= a.strands() {
                out.push(Unit { a, i: inst.i });
            }
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// One cabling into a base braid.
#[derive(Clone)]
struct Pair {
    a: BraidWord,
    i: usize,
    b: BraidWord,
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}; i={}; b={}", self.a, self.i, self.b)
    }
}

/// All pairs with bounded strand counts and a shared letter budget.
fn exhaustive_pairs(params: &LawParams) -> Vec<Pair> {
    let cap = acap(params, 3);
    let budget = lcap(params, 4);
    let mut out = Vec::new();
    for n in 1..=cap {
        for a in all_braids(n, budget) {
            for m in 0..=cap {
                for b in all_braids(m, budget - a.len()) {
                    for i in 1..=n {
                        out.push(Pair {
                            a: a.clone(),
                            i,
                            b: b.clone(),
                        });
                    }
                }
            }
        }
    }
    out
}

fn pair_shrinks(inst: &Pair) -> Vec<Pair> {
    let mut out = Vec::new();
    for a in braid_letter_drops(&inst.a) {
        out.push(Pair { a, ..inst.clone() });
    }
    for b in braid_letter_drops(&inst.b) {
        out.push(Pair { b, ..inst.clone() });
    }
    if let Some(a) = braid_strand_drop(&inst.a) {
        if inst.i <= a.strands() {
            out.push(Pair { a, ..inst.clone() });
        }
    }
    if let Some(b) = braid_strand_drop(&inst.b) {
        out.push(Pair { b, ..inst.clone() });
    }
    out
}

fn random_pair(params: &LawParams, name: &str) -> impl FnMut() -> Pair {
    let mut rng = law_rng(name, params.seed);
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    move || {
        let n = rng.gen_range(1..=max_arity);
        let m = rng.gen_range(0..=max_arity);
        Pair {
            a: gen::rand_braid(&mut rng, n, max_len),
            i: rng.gen_range(1..=n),
            b: gen::rand_braid(&mut rng, m, max_len),
        }
    }
}

/// The underlying permutation of a cable is the block composite of the
/// underlying permutations.
pub(super) fn projection(params: &LawParams, impls: &Impls) -> Verdict {
    let random = random_pair(params, "braid.operad.projection");
    let cable = impls.cable;
    let holds = move |inst: &Pair| -> Result<bool> {
        let cab = cable(&inst.a, inst.i, &inst.b)?;
        let split = inst
            .a
            .underlying_permutation()
            .block_compose(inst.i, &inst.b.underlying_permutation())?;
        Ok(cab.underlying_permutation() == split)
    };
    run_tiers(
        exhaustive_pairs(params),
        params.samples,
        random,
        holds,
        pair_shrinks,
    )
}

/// `(a ∘_i b)^{-1}  ==  a^{-1} ∘_{p(a)^{-1}(i)} b^{-1}` where `p` is the
/// underlying permutation.
pub(super) fn inverse_cable(params: &LawParams, impls: &Impls) -> Verdict {
    let random = random_pair(params, "braid.inverse_cable");
    let cable = impls.cable;
    let holds = move |inst: &Pair| -> Result<bool> {
        let lhs = cable(&inst.a, inst.i, &inst.b)?.inverse();
        let pos = inst.a.underlying_permutation().inverse().apply(inst.i);
        let rhs = cable(&inst.a.inverse(), pos, &inst.b.inverse())?;
        lhs.equals(&rhs)
    };
    run_tiers(
        exhaustive_pairs(params),
        params.samples,
        random,
        holds,
        pair_shrinks,
    )
}

/// Cabling a product against cabling the factors.
#[derive(Clone)]
struct Equiv {
    an: BraidWord,
    cn: BraidWord,
    i: usize,
    am: BraidWord,
    cm: BraidWord,
}

impl fmt::Display for Equiv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "a_n={}; c_n={}; i={}; a_m={}; c_m={}",
            self.an, self.cn, self.i, self.am, self.cm
        )
    }
}

/// `(a_n c_n) ∘_i (a_m c_m)  ==  (a_n ∘_i a_m)(c_n ∘_{p(a_n)^{-1}(i)} c_m)`.
pub(super) fn equivariance(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("braid.equivariance", params.seed);
    let cap = acap(params, 3);
    let budget = lcap(params, 3);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for an in all_braids(n, budget) {
            for cn in all_braids(n, budget - an.len()) {
                for m in 1..=cap {
                    let left = budget - an.len() - cn.len();
                    for am in all_braids(m, left) {
                        for cm in all_braids(m, left - am.len()) {
                            for i in 1..=n {
                                exhaustive.push(Equiv {
                                    an: an.clone(),
                                    cn: cn.clone(),
                                    i,
                                    am: am.clone(),
                                    cm: cm.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let n = rng.gen_range(1..=max_arity);
        let m = rng.gen_range(1..=max_arity);
        Equiv {
            an: gen::rand_braid(&mut rng, n, max_len),
            cn: gen::rand_braid(&mut rng, n, max_len),
            i: rng.gen_range(1..=n),
            am: gen::rand_braid(&mut rng, m, max_len),
            cm: gen::rand_braid(&mut rng, m, max_len),
        }
    };
    let cable = impls.cable;
    let holds = move |inst: &Equiv| -> Result<bool> {
        let lhs = cable(
            &inst.an.multiply(&inst.cn)?,
            inst.i,
            &inst.am.multiply(&inst.cm)?,
        )?;
        let pos = inst.an.underlying_permutation().inverse().apply(inst.i);
        let rhs = cable(&inst.an, inst.i, &inst.am)?
            .multiply(&cable(&inst.cn, pos, &inst.cm)?)?;
        lhs.equals(&rhs)
    };
    let shrink = |inst: &Equiv| {
        let mut out = Vec::new();
        for an in braid_letter_drops(&inst.an) {
            out.push(Equiv { an, ..inst.clone() });
        }
        for cn in braid_letter_drops(&inst.cn) {
            out.push(Equiv { cn, ..inst.clone() });
        }
        for am in braid_letter_drops(&inst.am) {
            out.push(Equiv { am, ..inst.clone() });
        }
        for cm in braid_letter_drops(&inst.cm) {
            out.push(Equiv { cm, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Two braid words on the same strand count.
#[derive(Clone)]
struct OraclePair {
    a: BraidWord,
    b: BraidWord,
}

impl fmt::Display for OraclePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}; b={}", self.a, self.b)
    }
}

/// Handle reduction agrees with the free-group action on every pair; a
/// third of the random pairs are built equal by relation rewriting.
pub(super) fn wordproblem_oracle(params: &LawParams, _impls: &Impls) -> Verdict {
    let mut rng = law_rng("braid.wordproblem.oracle", params.seed);
    let mut exhaustive = Vec::new();
    for (n, cap) in [(2usize, lcap(params, 3)), (3, lcap(params, 2))] {
        if n > params.max_arity.max(2) {
            continue;
        }
        for a in all_braids(n, cap) {
            for b in all_braids(n, cap) {
                exhaustive.push(OraclePair { a: a.clone(), b });
            }
        }
    }
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let mut count = 0usize;
    let random = move || {
        count += 1;
        let n = rng.gen_range(2..=max_arity);
        if count % 3 == 0 {
            let (a, b) = gen::equal_braid_pair(&mut rng, n, max_len);
            OraclePair { a, b }
        } else {
            OraclePair {
                a: gen::rand_braid(&mut rng, n, max_len),
                b: gen::rand_braid(&mut rng, n, max_len),
            }
        }
    };
    let holds = |inst: &OraclePair| -> Result<bool> {
        let reduced = inst.a.equals(&inst.b)?;
        let free = inst.a.artin_action() == inst.b.artin_action();
        Ok(reduced == free)
    };
    let shrink = |inst: &OraclePair| {
        let mut out = Vec::new();
        for a in braid_letter_drops(&inst.a) {
            out.push(OraclePair { a, ..inst.clone() });
        }
        for b in braid_letter_drops(&inst.b) {
            out.push(OraclePair { b, ..inst.clone() });
        }
        if let (Some(a), Some(b)) = (braid_strand_drop(&inst.a), braid_strand_drop(&inst.b)) {
            out.push(OraclePair { a, b });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}
