//! Laws for groupoid morphisms: operadic composition is well defined and
//! functorial, hom-sets have unique witnesses, and the projection and
//! forgetful maps send morphisms to morphisms.

use std::fmt;

use rand::Rng;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::groupoid::{
    check_morphism, compose_morphisms_operadic_with, compose_morphisms_vertical, forget,
    forget_morphism, hom, identity_morphism, pi, pi_morphism, wcob_compose_objects, wpab_hom,
    GroupoidMorphism, GroupoidObject, WCobObject,
};
use crate::laws::{gen, law_rng, Impls, LawParams, Verdict};
use crate::perm::{all_permutations, Permutation};
use crate::words::OmegaBrElement;

use super::{
    acap, all_braids, braid_letter_drops, lcap, omegabr_shrinks, run_tiers, small_omegabr,
};

/// Builds the unique morphism with the given witness out of `(u, a)`: the
/// target is forced by the witness.
fn wcob_morphism_from(
    u: &Permutation,
    a: &BraidWord,
    g: &BraidWord,
) -> Result<GroupoidMorphism> {
    let source = GroupoidObject::Wcob(WCobObject::new(u.clone(), a.clone())?);
    let v = u.compose(&g.underlying_permutation().inverse())?;
    let c = g.multiply(a)?;
    let target = GroupoidObject::Wcob(WCobObject::new(v, c)?);
    Ok(GroupoidMorphism {
        source,
        target,
        witness: g.clone(),
    })
}

/// Seeds for two morphisms and a slot.
#[derive(Clone)]
struct Welldef {
    un: Permutation,
    an: BraidWord,
    gn: BraidWord,
    i: usize,
    um: Permutation,
    am: BraidWord,
    gm: BraidWord,
}

impl fmt::Display for Welldef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u_n={}; a_n={}; g_n={}; i={}; u_m={}; a_m={}; g_m={}",
            self.un, self.an, self.gn, self.i, self.um, self.am, self.gm
        )
    }
}

fn welldef_shrinks(inst: &Welldef) -> Vec<Welldef> {
    let mut out = Vec::new();
    for an in braid_letter_drops(&inst.an) {
        out.push(Welldef { an, ..inst.clone() });
    }
    for gn in braid_letter_drops(&inst.gn) {
        out.push(Welldef { gn, ..inst.clone() });
    }
    for am in braid_letter_drops(&inst.am) {
        out.push(Welldef { am, ..inst.clone() });
    }
    for gm in braid_letter_drops(&inst.gm) {
        out.push(Welldef { gm, ..inst.clone() });
    }
    out
}

/// Operadic composition of two valid morphisms is a valid morphism between
/// the composite endpoints.
pub(super) fn welldef(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.morphism.welldef", params.seed);
    let cap = acap(params, 2);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for un in all_permutations(n) {
            for an in all_braids(n, lcap(params, 1)) {
                for gn in all_braids(n, lcap(params, 2)) {
                    for m in 1..=cap {
                        for um in all_permutations(m) {
                            for am in all_braids(m, lcap(params, 1)) {
                                for gm in all_braids(m, lcap(params, 2)) {
                                    for i in 1..=n {
                                        exhaustive.push(Welldef {
                                            un: un.clone(),
                                            an: an.clone(),
                                            gn: gn.clone(),
                                            i,
                                            um: um.clone(),
                                            am: am.clone(),
                                            gm: gm.clone(),
                                        });
                                    }
                                }
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
        Welldef {
            un: gen::rand_perm(&mut rng, n),
            an: gen::rand_braid(&mut rng, n, max_len),
            gn: gen::rand_braid(&mut rng, n, max_len),
            i: rng.gen_range(1..=n),
            um: gen::rand_perm(&mut rng, m),
            am: gen::rand_braid(&mut rng, m, max_len),
            gm: gen::rand_braid(&mut rng, m, max_len),
        }
    };
    let convention = impls.morphism_index;
    let holds = move |inst: &Welldef| -> Result<bool> {
        let f = wcob_morphism_from(&inst.un, &inst.an, &inst.gn)?;
        let g = wcob_morphism_from(&inst.um, &inst.am, &inst.gm)?;
        if !check_morphism(&f) || !check_morphism(&g) {
            return Ok(false);
        }
        let fg = compose_morphisms_operadic_with(&f, inst.i, &g, convention)?;
        Ok(check_morphism(&fg)
            && fg.source.equal(&f.source.compose(inst.i, &g.source)?)?
            && fg.target.equal(&f.target.compose(inst.i, &g.target)?)?)
    };
    run_tiers(exhaustive, params.samples, random, holds, welldef_shrinks)
}

/// Seeds for a composable square: two vertical chains joined at a slot.
#[derive(Clone)]
struct Square {
    un: Permutation,
    an: BraidWord,
    g1: BraidWord,
    g2: BraidWord,
    i: usize,
    um: Permutation,
    am: BraidWord,
    h1: BraidWord,
    h2: BraidWord,
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u_n={}; a_n={}; g1={}; g2={}; i={}; u_m={}; a_m={}; h1={}; h2={}",
            self.un, self.an, self.g1, self.g2, self.i, self.um, self.am, self.h1, self.h2
        )
    }
}

/// Builds the vertical chain `f1; f2` out of seeds.
fn chain(
    u: &Permutation,
    a: &BraidWord,
    g1: &BraidWord,
    g2: &BraidWord,
) -> Result<(GroupoidMorphism, GroupoidMorphism)> {
    let f1 = wcob_morphism_from(u, a, g1)?;
    let GroupoidObject::Wcob(mid) = f1.target.clone() else {
        unreachable!("wcob seeds build wcob morphisms");
    };
    let f2 = wcob_morphism_from(mid.perm(), mid.braid(), g2)?;
    Ok((f1, f2))
}

/// Vertical and operadic composition interchange, and identities are
/// neutral for vertical composition.
pub(super) fn functoriality(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.morphism.functoriality", params.seed);
    let cap = acap(params, 2);
    let bcap = lcap(params, 1);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for un in all_permutations(n) {
            for an in all_braids(n, bcap) {
                for g1 in all_braids(n, bcap) {
                    for g2 in all_braids(n, bcap) {
                        for m in 1..=cap {
                            for um in all_permutations(m) {
                                for am in all_braids(m, bcap) {
                                    for h1 in all_braids(m, bcap) {
                                        for h2 in all_braids(m, bcap) {
                                            for i in 1..=n {
                                                exhaustive.push(Square {
                                                    un: un.clone(),
                                                    an: an.clone(),
                                                    g1: g1.clone(),
                                                    g2: g2.clone(),
                                                    i,
                                                    um: um.clone(),
                                                    am: am.clone(),
                                                    h1: h1.clone(),
                                                    h2: h2.clone(),
                                                });
                                            }
                                        }
                                    }
                                }
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
        Square {
            un: gen::rand_perm(&mut rng, n),
            an: gen::rand_braid(&mut rng, n, max_len),
            g1: gen::rand_braid(&mut rng, n, max_len),
            g2: gen::rand_braid(&mut rng, n, max_len),
            i: rng.gen_range(1..=n),
            um: gen::rand_perm(&mut rng, m),
            am: gen::rand_braid(&mut rng, m, max_len),
            h1: gen::rand_braid(&mut rng, m, max_len),
            h2: gen::rand_braid(&mut rng, m, max_len),
        }
    };
    let convention = impls.morphism_index;
    let holds = move |inst: &Square| -> Result<bool> {
        let (f1, f2) = chain(&inst.un, &inst.an, &inst.g1, &inst.g2)?;
        let (e1, e2) = chain(&inst.um, &inst.am, &inst.h1, &inst.h2)?;
        let vertical_first = compose_morphisms_operadic_with(
            &compose_morphisms_vertical(&f1, &f2)?,
            inst.i,
            &compose_morphisms_vertical(&e1, &e2)?,
            convention,
        )?;
        let operadic_first = compose_morphisms_vertical(
            &compose_morphisms_operadic_with(&f1, inst.i, &e1, convention)?,
            &compose_morphisms_operadic_with(&f2, inst.i, &e2, convention)?,
        )?;
        if !(check_morphism(&vertical_first)
            && vertical_first.source.equal(&operadic_first.source)?
            && vertical_first.target.equal(&operadic_first.target)?
            && vertical_first.witness.equals(&operadic_first.witness)?)
        {
            return Ok(false);
        }
        let before = compose_morphisms_vertical(&identity_morphism(&f1.source), &f1)?;
        let after = compose_morphisms_vertical(&f1, &identity_morphism(&f1.target))?;
        Ok(before.witness.equals(&f1.witness)? && after.witness.equals(&f1.witness)?)
    };
    let shrink = |inst: &Square| {
        let mut out = Vec::new();
        for an in braid_letter_drops(&inst.an) {
            out.push(Square { an, ..inst.clone() });
        }
        for g1 in braid_letter_drops(&inst.g1) {
            out.push(Square { g1, ..inst.clone() });
        }
        for g2 in braid_letter_drops(&inst.g2) {
            out.push(Square { g2, ..inst.clone() });
        }
        for am in braid_letter_drops(&inst.am) {
            out.push(Square { am, ..inst.clone() });
        }
        for h1 in braid_letter_drops(&inst.h1) {
            out.push(Square { h1, ..inst.clone() });
        }
        for h2 in braid_letter_drops(&inst.h2) {
            out.push(Square { h2, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Seeds for a single morphism.
#[derive(Clone)]
struct Hom {
    u: Permutation,
    a: BraidWord,
    g: BraidWord,
}

impl fmt::Display for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u={}; a={}; g={}", self.u, self.a, self.g)
    }
}

/// `hom` finds exactly the forced witness; identities have trivial
/// witnesses; twisting the witness or the target kills the morphism.
pub(super) fn wcob_hom(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.morphism.hom", params.seed);
    let _ = impls;
    let cap = acap(params, 2);
    let bcap = lcap(params, 2);
    let mut exhaustive = Vec::new();
    for n in 1..=cap {
        for u in all_permutations(n) {
            for a in all_braids(n, bcap) {
                for g in all_braids(n, bcap) {
                    exhaustive.push(Hom {
                        u: u.clone(),
                        a: a.clone(),
                        g: g.clone(),
                    });
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let mut count = 0usize;
    let random = move || {
        let n = rng.gen_range(1..=max_arity);
        count += 1;
        // Every third witness is pure, so source and target share an
        // underlying permutation while their braids still differ.
        let g = if count % 3 == 0 {
            gen::rand_pure_braid(&mut rng, n, max_len)
        } else {
            gen::rand_braid(&mut rng, n, max_len)
        };
        Hom {
            u: gen::rand_perm(&mut rng, n),
            a: gen::rand_braid(&mut rng, n, max_len),
            g,
        }
    };
    let holds = |inst: &Hom| -> Result<bool> {
        let m = wcob_morphism_from(&inst.u, &inst.a, &inst.g)?;
        let Some(found) = hom(&m.source, &m.target)? else {
            return Ok(false);
        };
        if !(check_morphism(&found) && found.witness.equals(&inst.g)?) {
            return Ok(false);
        }
        let Some(idm) = hom(&m.source, &m.source)? else {
            return Ok(false);
        };
        if !idm.witness.is_trivial() {
            return Ok(false);
        }
        let n = inst.u.size();
        if n >= 2 {
            let full_twist = BraidWord::from_pairs(n, &[(1, 1), (1, 1)])?;
            let twisted = GroupoidMorphism {
                source: m.source.clone(),
                target: m.target.clone(),
                witness: found.witness.multiply(&full_twist)?,
            };
            if check_morphism(&twisted) {
                return Ok(false);
            }
            let GroupoidObject::Wcob(t) = &m.target else {
                return Ok(false);
            };
            let swap = Permutation::transposition(n, 1)?;
            let skew = WCobObject::new(swap.compose(t.perm())?, t.braid().clone())?;
            if hom(&m.source, &GroupoidObject::Wcob(skew))?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let shrink = |inst: &Hom| {
        let mut out = Vec::new();
        for a in braid_letter_drops(&inst.a) {
            out.push(Hom { a, ..inst.clone() });
        }
        for g in braid_letter_drops(&inst.g) {
            out.push(Hom { g, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A braided word with a witness braid on its visible strands.
#[derive(Clone)]
struct WpabHom {
    x: OmegaBrElement,
    g: BraidWord,
}

impl fmt::Display for WpabHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}; g={}", self.x, self.g)
    }
}

fn wpab_hom_shrinks(inst: &WpabHom) -> Vec<WpabHom> {
    let mut out = Vec::new();
    for g in braid_letter_drops(&inst.g) {
        out.push(WpabHom { g, ..inst.clone() });
    }
    for x in omegabr_shrinks(&inst.x) {
        out.push(WpabHom { x, ..inst.clone() });
    }
    out
}

/// Every witness reaches a unique target; the found morphism checks out
/// and identities have trivial witnesses.
pub(super) fn wpab_hom_law(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wpab.morphism.hom", params.seed);
    let _ = impls;
    let mut exhaustive = Vec::new();
    for x in small_omegabr(2, lcap(params, 1)) {
        for g in all_braids(x.arity(), lcap(params, 2)) {
            exhaustive.push(WpabHom { x: x.clone(), g });
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let arity = rng.gen_range(1..=max_arity);
        let x = gen::rand_omegabr_arity(&mut rng, arity, 2, max_len);
        let g = gen::rand_braid(&mut rng, arity, max_len);
        WpabHom { x, g }
    };
    let holds = |inst: &WpabHom| -> Result<bool> {
        let y = gen::wpab_morphism_target(&inst.x, &inst.g)?;
        let Some(m) = wpab_hom(&inst.x, &y)? else {
            return Ok(false);
        };
        if !(check_morphism(&m) && m.witness.equals(&inst.g)?) {
            return Ok(false);
        }
        let Some(idm) = wpab_hom(&inst.x, &inst.x)? else {
            return Ok(false);
        };
        if !idm.witness.is_trivial() {
            return Ok(false);
        }
        if inst.x.arity() >= 2 {
            let full_twist = BraidWord::from_pairs(inst.x.arity(), &[(1, 1), (1, 1)])?;
            let twisted = GroupoidMorphism {
                source: m.source.clone(),
                target: m.target.clone(),
                witness: m.witness.multiply(&full_twist)?,
            };
            if check_morphism(&twisted) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    run_tiers(exhaustive, params.samples, random, holds, wpab_hom_shrinks)
}

/// A composition instance together with a witness seed.
#[derive(Clone)]
struct Proj {
    x: OmegaBrElement,
    i: usize,
    y: OmegaBrElement,
    g: BraidWord,
}

impl fmt::Display for Proj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}; i={}; y={}; g={}", self.x, self.i, self.y, self.g)
    }
}

fn proj_exhaustive(params: &LawParams) -> Vec<Proj> {
    let elements = small_omegabr(2, lcap(params, 1));
    let mut out = Vec::new();
    for x in &elements {
        for y in &elements {
            for i in 1..=x.arity() {
                for g in all_braids(x.arity(), lcap(params, 1)) {
                    out.push(Proj {
                        x: x.clone(),
                        i,
                        y: y.clone(),
                        g,
                    });
                }
            }
        }
    }
    out
}

fn proj_random(params: &LawParams, name: &str) -> impl FnMut() -> Proj {
    let mut rng = law_rng(name, params.seed);
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    move || {
        let ax = rng.gen_range(1..=max_arity);
        let ay = rng.gen_range(0..=max_arity);
        let x = gen::rand_omegabr_arity(&mut rng, ax, 2, max_len);
        let y = gen::rand_omegabr_arity(&mut rng, ay, 2, max_len);
        let g = gen::rand_braid(&mut rng, ax, max_len);
        Proj {
            x,
            i: rng.gen_range(1..=ax),
            y,
            g,
        }
    }
}

fn proj_shrinks(inst: &Proj) -> Vec<Proj> {
    let mut out = Vec::new();
    for x in omegabr_shrinks(&inst.x) {
        out.push(Proj { x, ..inst.clone() });
    }
    for y in omegabr_shrinks(&inst.y) {
        out.push(Proj { y, ..inst.clone() });
    }
    for g in braid_letter_drops(&inst.g) {
        out.push(Proj { g, ..inst.clone() });
    }
    out
}

/// The projection to colored braids preserves composition, units, and
/// morphisms.
pub(super) fn pi_morphism_law(params: &LawParams, impls: &Impls) -> Verdict {
    let _ = impls;
    let random = proj_random(params, "pi.morphism");
    let holds = |inst: &Proj| -> Result<bool> {
        let composed = pi(&inst.x.compose(inst.i, &inst.y)?)?;
        let split = wcob_compose_objects(&pi(&inst.x)?, inst.i, &pi(&inst.y)?)?;
        if !composed.equal(&split)? {
            return Ok(false);
        }
        if !pi(&OmegaBrElement::unit())?.equal(&WCobObject::unit())? {
            return Ok(false);
        }
        let target = gen::wpab_morphism_target(&inst.x, &inst.g)?;
        let Some(m) = wpab_hom(&inst.x, &target)? else {
            return Ok(false);
        };
        let pm = pi_morphism(&m)?;
        Ok(check_morphism(&pm) && pm.witness.equals(&m.witness)?)
    };
    run_tiers(
        proj_exhaustive(params),
        params.samples,
        random,
        holds,
        proj_shrinks,
    )
}

/// Forgetting the braid preserves composition and sends morphisms to
/// word-level morphisms with the same witness.
pub(super) fn forget_morphism_law(params: &LawParams, impls: &Impls) -> Verdict {
    let random = proj_random(params, "forget.morphism");
    let graft = impls.graft;
    let holds = move |inst: &Proj| -> Result<bool> {
        let composed = forget(&inst.x.compose(inst.i, &inst.y)?);
        let split = graft(&forget(&inst.x), inst.i, &forget(&inst.y))?;
        if composed != split {
            return Ok(false);
        }
        let target = gen::wpab_morphism_target(&inst.x, &inst.g)?;
        let Some(m) = wpab_hom(&inst.x, &target)? else {
            return Ok(false);
        };
        let fm = forget_morphism(&m)?;
        Ok(check_morphism(&fm)
            && fm.witness.equals(&m.witness)?
            && fm.source == GroupoidObject::Pab(forget(&inst.x)))
    };
    run_tiers(
        proj_exhaustive(params),
        params.samples,
        random,
        holds,
        proj_shrinks,
    )
}
