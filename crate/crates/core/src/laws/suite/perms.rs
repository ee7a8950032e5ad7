//! Operad laws for finite permutations under block composition.

use std::fmt;

use rand::Rng;

use crate::error::Result;
use crate::laws::{gen, law_rng, Impls, LawParams, Verdict};
use crate::perm::{all_permutations, Permutation};

use super::{acap, perm_point_drop, run_tiers};

/// Two nested substitutions into a base permutation.
#[derive(Clone)]
struct Triple {
    u: Permutation,
    i: usize,
    v: Permutation,
    j: usize,
    w: Permutation,
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u={}; i={}; v={}; j={}; w={}",
            self.u, self.i, self.v, self.j, self.w
        )
    }
}

/// Shrinks by dropping fixed top points, keeping the slot indices valid.
fn triple_shrinks(inst: &Triple) -> Vec<Triple> {
    let mut out = Vec::new();
    if let Some(u) = perm_point_drop(&inst.u) {
        if inst.i <= u.size() && inst.j <= u.size() {
            out.push(Triple { u, ..inst.clone() });
        }
    }
    if let Some(v) = perm_point_drop(&inst.v) {
        if inst.j <= v.size() {
            out.push(Triple { v, ..inst.clone() });
        }
    }
    if let Some(w) = perm_point_drop(&inst.w) {
        out.push(Triple { w, ..inst.clone() });
    }
    out
}

/// `(u ∘_i v) ∘_{i+j-1} w  ==  u ∘_i (v ∘_j w)`.
pub(super) fn vertical_assoc(params: &LawParams, _impls: &Impls) -> Verdict {
    let mut rng = law_rng("sigma.operad.vertical_assoc", params.seed);
    let cap = acap(params, 3);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for u in all_permutations(n) {
            for m in 1..=cap {
                for v in all_permutations(m) {
                    for k in 0..=cap {
                        for w in all_permutations(k) {
                            for i in 1..=n {
                                for j in 1..=m {
                                    exhaustive.push(Triple {
                                        u: u.clone(),
                                        i,
                                        v: v.clone(),
                                        j,
                                        w: w.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let random = move || {
        let n = rng.gen_range(1..=max_arity);
        let m = rng.gen_range(1..=max_arity);
        let k = rng.gen_range(0..=max_arity);
        Triple {
            u: gen::rand_perm(&mut rng, n),
            i: rng.gen_range(1..=n),
            v: gen::rand_perm(&mut rng, m),
            j: rng.gen_range(1..=m),
            w: gen::rand_perm(&mut rng, k),
        }
    };
    let holds = |inst: &Triple| -> Result<bool> {
        let lhs = inst
            .u
            .block_compose(inst.i, &inst.v)?
            .block_compose(inst.i + inst.j - 1, &inst.w)?;
        let rhs = inst
            .u
            .block_compose(inst.i, &inst.v.block_compose(inst.j, &inst.w)?)?;
        Ok(lhs == rhs)
    };
    let shrink = |inst: &Triple| {
        triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i <= t.u.size() && t.j <= t.v.size())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// For `i < j`: `(u ∘_i v) ∘_{j+|v|-1} w  ==  (u ∘_j w) ∘_i v`.
pub(super) fn horizontal_assoc(params: &LawParams, _impls: &Impls) -> Verdict {
    let mut rng = law_rng("sigma.operad.horizontal_assoc", params.seed);
    let cap = acap(params, 3).max(2);
    let mut exhaustive = Vec::new();
    for n in 2..=cap {
        for u in all_permutations(n) {
            for m in 0..=cap {
                for v in all_permutations(m) {
                    for k in 0..=cap {
                        for w in all_permutations(k) {
                            for i in 1..n {
                                for j in i + 1..=n {
                                    exhaustive.push(Triple {
                                        u: u.clone(),
                                        i,
                                        v: v.clone(),
                                        j,
                                        w: w.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(2);
    let random = move || {
        let n = rng.gen_range(2..=max_arity);
        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        let m = rng.gen_range(0..=max_arity);
        let k = rng.gen_range(0..=max_arity);
        Triple {
            u: gen::rand_perm(&mut rng, n),
            i,
            v: gen::rand_perm(&mut rng, m),
            j,
            w: gen::rand_perm(&mut rng, k),
        }
    };
    let holds = |inst: &Triple| -> Result<bool> {
        let m = inst.v.size();
        let lhs = inst
            .u
            .block_compose(inst.i, &inst.v)?
            .block_compose(inst.j + m - 1, &inst.w)?;
        let rhs = inst
            .u
            .block_compose(inst.j, &inst.w)?
            .block_compose(inst.i, &inst.v)?;
        Ok(lhs == rhs)
    };
    let shrink = |inst: &Triple| {
        triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i < t.j && t.j <= t.u.size())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A permutation with a slot index.
#[derive(Clone)]
struct Unit {
    u: Permutation,
    i: usize,
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={}; i={}", self.u, self.i)
    }
}

/// `u ∘_i id_1 == u` and `id_1 ∘_1 u == u`.
pub(super) fn unit(params: &LawParams, _impls: &Impls) -> Verdict {
    let mut rng = law_rng("sigma.operad.unit", params.seed);
    let cap = acap(params, 4);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for u in all_permutations(n) {
            for i in 1..=n {
                exhaustive.push(Unit { u: u.clone(), i });
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let random = move || {
        let n = rng.gen_range(1..=max_arity);
        Unit {
            u: gen::rand_perm(&mut rng, n),
            i: rng.gen_range(1..=n),
        }
    };
    let holds = |inst: &Unit| -> Result<bool> {
        let one = Permutation::identity(1);
        Ok(inst.u.block_compose(inst.i, &one)? == inst.u
            && one.block_compose(1, &inst.u)? == inst.u)
    };
    let shrink = |inst: &Unit| -> Vec<Unit> {
        match perm_point_drop(&inst.u) {
            Some(u) if inst.i <= u.size() => vec![Unit { u, i: inst.i }],
            _ => Vec::new(),
        }
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Products distribute over block composition with a shifted slot.
#[derive(Clone)]
struct Equiv {
    un: Permutation,
    wn: Permutation,
    i: usize,
    um: Permutation,
    wm: Permutation,
}

impl fmt::Display for Equiv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u_n={}; w_n={}; i={}; u_m={}; w_m={}",
            self.un, self.wn, self.i, self.um, self.wm
        )
    }
}

/// `(u_n w_n) ∘_i (u_m w_m)  ==  (u_n ∘_i u_m) (w_n ∘_{u_n^{-1}(i)} w_m)`.
pub(super) fn equivariance(params: &LawParams, _impls: &Impls) -> Verdict {
    let mut rng = law_rng("sigma.operad.equivariance", params.seed);
    let cap = acap(params, 3);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for un in all_permutations(n) {
            for wn in all_permutations(n) {
                for m in 0..=cap {
                    for um in all_permutations(m) {
                        for wm in all_permutations(m) {
                            for i in 1..=n {
                                exhaustive.push(Equiv {
                                    un: un.clone(),
                                    wn: wn.clone(),
                                    i,
                                    um: um.clone(),
                                    wm: wm.clone(),
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
        let n = rng.gen_range(1..=max_arity);
        let m = rng.gen_range(0..=max_arity);
        Equiv {
            un: gen::rand_perm(&mut rng, n),
            wn: gen::rand_perm(&mut rng, n),
            i: rng.gen_range(1..=n),
            um: gen::rand_perm(&mut rng, m),
            wm: gen::rand_perm(&mut rng, m),
        }
    };
    let holds = |inst: &Equiv| -> Result<bool> {
        let lhs = inst
            .un
            .compose(&inst.wn)?
            .block_compose(inst.i, &inst.um.compose(&inst.wm)?)?;
        let inner = inst
            .wn
            .block_compose(inst.un.inverse().apply(inst.i), &inst.wm)?;
        let rhs = inst.un.block_compose(inst.i, &inst.um)?.compose(&inner)?;
        Ok(lhs == rhs)
    };
    let shrink = |inst: &Equiv| {
        let mut out = Vec::new();
        if let (Some(un), Some(wn)) = (perm_point_drop(&inst.un), perm_point_drop(&inst.wn)) {
            if inst.i <= un.size() {
                out.push(Equiv {
                    un,
                    wn,
                    ..inst.clone()
                });
            }
        }
        if let (Some(um), Some(wm)) = (perm_point_drop(&inst.um), perm_point_drop(&inst.wm)) {
            out.push(Equiv {
                um,
                wm,
                ..inst.clone()
            });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}
