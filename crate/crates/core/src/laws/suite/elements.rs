//! Operad laws for braided words and for colored-braid objects.

use std::fmt;

use rand::Rng;

use crate::error::Result;
use crate::groupoid::WCobObject;
use crate::laws::{gen, law_rng, Impls, LawParams, Verdict};
use crate::perm::{all_permutations, Permutation};
use crate::words::OmegaBrElement;

use super::{
    acap, all_braids, braid_letter_drops, lcap, omega_compose_impl, omegabr_shrinks, run_tiers,
    small_omegabr, wcob_compose_impl,
};

/// Two nested compositions of braided words.
#[derive(Clone)]
struct OmegaTriple {
    x: OmegaBrElement,
    i: usize,
    y: OmegaBrElement,
    j: usize,
    z: OmegaBrElement,
}

impl fmt::Display for OmegaTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={}; i={}; y={}; j={}; z={}",
            self.x, self.i, self.y, self.j, self.z
        )
    }
}

fn omega_triple_shrinks(inst: &OmegaTriple) -> Vec<OmegaTriple> {
    let mut out = Vec::new();
    for x in omegabr_shrinks(&inst.x) {
        out.push(OmegaTriple { x, ..inst.clone() });
    }
    for y in omegabr_shrinks(&inst.y) {
        out.push(OmegaTriple { y, ..inst.clone() });
    }
    for z in omegabr_shrinks(&inst.z) {
        out.push(OmegaTriple { z, ..inst.clone() });
    }
    out
}

fn rand_omega(
    rng: &mut rand_chacha::ChaCha8Rng,
    arity: usize,
    max_len: usize,
) -> OmegaBrElement {
    gen::rand_omegabr_arity(rng, arity, 2, max_len)
}

/// `(x ∘_i y) ∘_{i+j-1} z  ==  x ∘_i (y ∘_j z)`.
pub(super) fn omega_vertical_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("omegabr.operad.vertical_assoc", params.seed);
    let elements = small_omegabr(2, lcap(params, 1));
    let mut exhaustive = Vec::new();
    for x in &elements {
        for y in &elements {
            for z in &elements {
                for i in 1..=x.arity() {
                    for j in 1..=y.arity() {
                        exhaustive.push(OmegaTriple {
                            x: x.clone(),
                            i,
                            y: y.clone(),
                            j,
                            z: z.clone(),
                        });
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let ax = rng.gen_range(1..=max_arity);
        let ay = rng.gen_range(1..=max_arity);
        let az = rng.gen_range(0..=max_arity);
        let x = rand_omega(&mut rng, ax, max_len);
        let y = rand_omega(&mut rng, ay, max_len);
        let z = rand_omega(&mut rng, az, max_len);
        OmegaTriple {
            x,
            i: rng.gen_range(1..=ax),
            y,
            j: rng.gen_range(1..=ay),
            z,
        }
    };
    let routed = *impls;
    let holds = move |inst: &OmegaTriple| -> Result<bool> {
        let lhs = omega_compose_impl(
            &routed,
            &omega_compose_impl(&routed, &inst.x, inst.i, &inst.y)?,
            inst.i + inst.j - 1,
            &inst.z,
        )?;
        let rhs = omega_compose_impl(
            &routed,
            &inst.x,
            inst.i,
            &omega_compose_impl(&routed, &inst.y, inst.j, &inst.z)?,
        )?;
        lhs.equals(&rhs)
    };
    let shrink = |inst: &OmegaTriple| {
        omega_triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i <= t.x.arity() && t.j <= t.y.arity())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// For `i < j`: `(x ∘_i y) ∘_{j+|y|-1} z  ==  (x ∘_j z) ∘_i y`.
pub(super) fn omega_horizontal_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("omegabr.operad.horizontal_assoc", params.seed);
    let elements = small_omegabr(2, lcap(params, 1));
    let mut exhaustive = Vec::new();
    for x in &elements {
        for y in &elements {
            for z in &elements {
                for i in 1..x.arity() {
                    for j in i + 1..=x.arity() {
                        exhaustive.push(OmegaTriple {
                            x: x.clone(),
                            i,
                            y: y.clone(),
                            j,
                            z: z.clone(),
                        });
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let random = move || {
        let ax = rng.gen_range(2..=max_arity);
        let i = rng.gen_range(1..ax);
        let j = rng.gen_range(i + 1..=ax);
        let ay = rng.gen_range(0..=max_arity);
        let az = rng.gen_range(0..=max_arity);
        let x = rand_omega(&mut rng, ax, max_len);
        let y = rand_omega(&mut rng, ay, max_len);
        let z = rand_omega(&mut rng, az, max_len);
        OmegaTriple { x, i, y, j, z }
    };
    let routed = *impls;
    let holds = move |inst: &OmegaTriple| -> Result<bool> {
        let ay = inst.y.arity();
        let lhs = omega_compose_impl(
            &routed,
            &omega_compose_impl(&routed, &inst.x, inst.i, &inst.y)?,
            inst.j + ay - 1,
            &inst.z,
        )?;
        let rhs = omega_compose_impl(
            &routed,
            &omega_compose_impl(&routed, &inst.x, inst.j, &inst.z)?,
            inst.i,
            &inst.y,
        )?;
        lhs.equals(&rhs)
    };
    let shrink = |inst: &OmegaTriple| {
        omega_triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i < t.j && t.j <= t.x.arity())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A braided word with a slot index (placeholder 1 when the arity is 0).
#[derive(Clone)]
struct OmegaUnit {
    x: OmegaBrElement,
    i: usize,
}

impl fmt::Display for OmegaUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}; i={}", self.x, self.i)
    }
}

/// `x ∘_i ν == x` and `ν ∘_1 x == x`.
pub(super) fn omega_unit(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("omegabr.operad.unit", params.seed);
    let mut exhaustive = Vec::new();
    for x in small_omegabr(3, lcap(params, 2)) {
        for i in 1..=x.arity().max(1) {
            exhaustive.push(OmegaUnit { x: x.clone(), i });
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let arity = rng.gen_range(0..=max_arity);
        let x = rand_omega(&mut rng, arity, max_len);
        OmegaUnit {
            x,
            i: rng.gen_range(1..=arity.max(1)),
        }
    };
    let routed = *impls;
    let holds = move |inst: &OmegaUnit| -> Result<bool> {
        let nu = OmegaBrElement::unit();
        let mut ok = omega_compose_impl(&routed, &nu, 1, &inst.x)?.equals(&inst.x)?;
        if inst.x.arity() >= 1 {
            ok = ok && omega_compose_impl(&routed, &inst.x, inst.i, &nu)?.equals(&inst.x)?;
        }
        Ok(ok)
    };
    let shrink = |inst: &OmegaUnit| {
        omegabr_shrinks(&inst.x)
            .into_iter()
            .map(|x| OmegaUnit { x, i: inst.i })
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Relabeling both factors against relabeling the composite.
#[derive(Clone)]
struct OmegaEquiv {
    x: OmegaBrElement,
    sn: Permutation,
    i: usize,
    y: OmegaBrElement,
    sm: Permutation,
}

impl fmt::Display for OmegaEquiv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={}; s_n={}; i={}; y={}; s_m={}",
            self.x, self.sn, self.i, self.y, self.sm
        )
    }
}

/// `(s_n · x) ∘_i (s_m · y)  ==  (s_n ∘_i s_m) · (x ∘_{s_n^{-1}(i)} y)`.
pub(super) fn omega_equivariance(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("omegabr.operad.equivariance", params.seed);
    let elements = small_omegabr(2, lcap(params, 1));
    let mut exhaustive = Vec::new();
    for x in &elements {
        for y in &elements {
            for sn in all_permutations(x.arity()) {
                for sm in all_permutations(y.arity()) {
                    for i in 1..=x.arity() {
                        exhaustive.push(OmegaEquiv {
                            x: x.clone(),
                            sn: sn.clone(),
                            i,
                            y: y.clone(),
                            sm: sm.clone(),
                        });
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let ax = rng.gen_range(1..=max_arity);
        let ay = rng.gen_range(0..=max_arity);
        let x = rand_omega(&mut rng, ax, max_len);
        let y = rand_omega(&mut rng, ay, max_len);
        OmegaEquiv {
            x,
            sn: gen::rand_perm(&mut rng, ax),
            i: rng.gen_range(1..=ax),
            y,
            sm: gen::rand_perm(&mut rng, ay),
        }
    };
    let routed = *impls;
    let holds = move |inst: &OmegaEquiv| -> Result<bool> {
        let lhs = omega_compose_impl(
            &routed,
            &inst.x.relabel(&inst.sn)?,
            inst.i,
            &inst.y.relabel(&inst.sm)?,
        )?;
        let slot = inst.sn.inverse().apply(inst.i);
        let sigma = inst.sn.block_compose(inst.i, &inst.sm)?;
        let rhs = omega_compose_impl(&routed, &inst.x, slot, &inst.y)?.relabel(&sigma)?;
        lhs.equals(&rhs)
    };
    let shrink = |inst: &OmegaEquiv| {
        let mut out = Vec::new();
        for x in omegabr_shrinks(&inst.x) {
            out.push(OmegaEquiv { x, ..inst.clone() });
        }
        for y in omegabr_shrinks(&inst.y) {
            out.push(OmegaEquiv { y, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Every colored-braid object with bounded arity and braid length.
fn small_wcob_objects(max_arity: usize, braid_cap: usize) -> Vec<WCobObject> {
    let mut out = Vec::new();
    for n in 1..=max_arity {
        for u in all_permutations(n) {
            for b in all_braids(n, braid_cap) {
                out.push(WCobObject::new(u.clone(), b).expect("sizes match"));
            }
        }
    }
    out
}

/// A random colored-braid object of the given arity.
fn rand_wcob(rng: &mut rand_chacha::ChaCha8Rng, arity: usize, max_len: usize) -> WCobObject {
    let perm = gen::rand_perm(rng, arity);
    let braid = gen::rand_braid(rng, arity, max_len);
    WCobObject::new(perm, braid).expect("sizes match")
}

fn wcob_shrinks(x: &WCobObject) -> Vec<WCobObject> {
    braid_letter_drops(x.braid())
        .into_iter()
        .map(|b| WCobObject::new(x.perm().clone(), b).expect("sizes match"))
        .collect()
}

/// Two nested compositions of colored-braid objects.
#[derive(Clone)]
struct WcobTriple {
    x: WCobObject,
    i: usize,
    y: WCobObject,
    j: usize,
    z: WCobObject,
}

impl fmt::Display for WcobTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={}; i={}; y={}; j={}; z={}",
            self.x, self.i, self.y, self.j, self.z
        )
    }
}

fn wcob_triple_shrinks(inst: &WcobTriple) -> Vec<WcobTriple> {
    let mut out = Vec::new();
    for x in wcob_shrinks(&inst.x) {
        out.push(WcobTriple { x, ..inst.clone() });
    }
    for y in wcob_shrinks(&inst.y) {
        out.push(WcobTriple { y, ..inst.clone() });
    }
    for z in wcob_shrinks(&inst.z) {
        out.push(WcobTriple { z, ..inst.clone() });
    }
    out
}

/// All object triples with bounded arity and a shared letter budget.
fn wcob_exhaustive_triples(params: &LawParams) -> Vec<(WCobObject, WCobObject, WCobObject)> {
    let budget = lcap(params, 2);
    let objects = small_wcob_objects(acap(params, 3), lcap(params, 1));
    let mut out = Vec::new();
    for x in &objects {
        for y in &objects {
            if x.braid().len() + y.braid().len() > budget {
                continue;
            }
            for z in &objects {
                if x.braid().len() + y.braid().len() + z.braid().len() > budget {
                    continue;
                }
                out.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    out
}

/// Expands object triples into instances for each valid pair of slots.
fn wcob_triple_instances(
    triples: Vec<(WCobObject, WCobObject, WCobObject)>,
    horizontal: bool,
) -> impl Iterator<Item = WcobTriple> {
    triples.into_iter().flat_map(move |(x, y, z)| {
        let ax = x.arity();
        let ay = y.arity();
        let i_top = if horizontal { ax.saturating_sub(1) } else { ax };
        (1..=i_top).flat_map(move |i| {
            let x = x.clone();
            let y = y.clone();
            let z = z.clone();
            let js = if horizontal { i + 1..=ax } else { 1..=ay };
            js.map(move |j| WcobTriple {
                x: x.clone(),
                i,
                y: y.clone(),
                j,
                z: z.clone(),
            })
        })
    })
}

/// `(x ∘_i y) ∘_{i+j-1} z  ==  x ∘_i (y ∘_j z)`.
pub(super) fn wcob_vertical_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.operad.vertical_assoc", params.seed);
    let exhaustive = wcob_triple_instances(wcob_exhaustive_triples(params), false);
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let ax = rng.gen_range(1..=max_arity);
        let ay = rng.gen_range(1..=max_arity);
        let az = rng.gen_range(1..=max_arity);
        let x = rand_wcob(&mut rng, ax, max_len);
        let y = rand_wcob(&mut rng, ay, max_len);
        let z = rand_wcob(&mut rng, az, max_len);
        WcobTriple {
            x,
            i: rng.gen_range(1..=ax),
            y,
            j: rng.gen_range(1..=ay),
            z,
        }
    };
    let routed = *impls;
    let holds = move |inst: &WcobTriple| -> Result<bool> {
        let lhs = wcob_compose_impl(
            &routed,
            &wcob_compose_impl(&routed, &inst.x, inst.i, &inst.y)?,
            inst.i + inst.j - 1,
            &inst.z,
        )?;
        let rhs = wcob_compose_impl(
            &routed,
            &inst.x,
            inst.i,
            &wcob_compose_impl(&routed, &inst.y, inst.j, &inst.z)?,
        )?;
        lhs.equal(&rhs)
    };
    let shrink = |inst: &WcobTriple| {
        wcob_triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i <= t.x.arity() && t.j <= t.y.arity())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// For `i < j`: `(x ∘_i y) ∘_{j+|y|-1} z  ==  (x ∘_j z) ∘_i y`.
pub(super) fn wcob_horizontal_assoc(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.operad.horizontal_assoc", params.seed);
    let exhaustive = wcob_triple_instances(wcob_exhaustive_triples(params), true);
    let max_arity = params.max_arity.max(2);
    let max_len = params.max_len;
    let random = move || {
        let ax = rng.gen_range(2..=max_arity);
        let i = rng.gen_range(1..ax);
        let j = rng.gen_range(i + 1..=ax);
        let ay = rng.gen_range(1..=max_arity);
        let az = rng.gen_range(1..=max_arity);
        let x = rand_wcob(&mut rng, ax, max_len);
        let y = rand_wcob(&mut rng, ay, max_len);
        let z = rand_wcob(&mut rng, az, max_len);
        WcobTriple { x, i, y, j, z }
    };
    let routed = *impls;
    let holds = move |inst: &WcobTriple| -> Result<bool> {
        let ay = inst.y.arity();
        let lhs = wcob_compose_impl(
            &routed,
            &wcob_compose_impl(&routed, &inst.x, inst.i, &inst.y)?,
            inst.j + ay - 1,
            &inst.z,
        )?;
        let rhs = wcob_compose_impl(
            &routed,
            &wcob_compose_impl(&routed, &inst.x, inst.j, &inst.z)?,
            inst.i,
            &inst.y,
        )?;
        lhs.equal(&rhs)
    };
    let shrink = |inst: &WcobTriple| {
        wcob_triple_shrinks(inst)
            .into_iter()
            .filter(|t| t.i < t.j && t.j <= t.x.arity())
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// A colored-braid object with a slot index.
#[derive(Clone)]
struct WcobUnit {
    x: WCobObject,
    i: usize,
}

impl fmt::Display for WcobUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x={}; i={}", self.x, self.i)
    }
}

/// `x ∘_i 1 == x` and `1 ∘_1 x == x`.
pub(super) fn wcob_unit(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.operad.unit", params.seed);
    let mut exhaustive = Vec::new();
    for x in small_wcob_objects(acap(params, 3), lcap(params, 2)) {
        for i in 1..=x.arity() {
            exhaustive.push(WcobUnit { x: x.clone(), i });
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let arity = rng.gen_range(1..=max_arity);
        let x = rand_wcob(&mut rng, arity, max_len);
        WcobUnit {
            x,
            i: rng.gen_range(1..=arity),
        }
    };
    let routed = *impls;
    let holds = move |inst: &WcobUnit| -> Result<bool> {
        let one = WCobObject::unit();
        Ok(wcob_compose_impl(&routed, &inst.x, inst.i, &one)?.equal(&inst.x)?
            && wcob_compose_impl(&routed, &one, 1, &inst.x)?.equal(&inst.x)?)
    };
    let shrink = |inst: &WcobUnit| {
        wcob_shrinks(&inst.x)
            .into_iter()
            .map(|x| WcobUnit { x, i: inst.i })
            .collect()
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}

/// Relabeling both factors against relabeling the composite.
#[derive(Clone)]
struct WcobEquiv {
    x: WCobObject,
    sn: Permutation,
    i: usize,
    y: WCobObject,
    sm: Permutation,
}

impl fmt::Display for WcobEquiv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x={}; s_n={}; i={}; y={}; s_m={}",
            self.x, self.sn, self.i, self.y, self.sm
        )
    }
}

/// `(s_n · x) ∘_i (s_m · y)  ==  (s_n ∘_i s_m) · (x ∘_{s_n^{-1}(i)} y)`.
pub(super) fn wcob_equivariance(params: &LawParams, impls: &Impls) -> Verdict {
    let mut rng = law_rng("wcob.operad.equivariance", params.seed);
    let budget = lcap(params, 2);
    let objects = small_wcob_objects(acap(params, 2), budget);
    let mut exhaustive = Vec::new();
    for x in &objects {
        for y in &objects {
            if x.braid().len() + y.braid().len() > budget {
                continue;
            }
            for sn in all_permutations(x.arity()) {
                for sm in all_permutations(y.arity()) {
                    for i in 1..=x.arity() {
                        exhaustive.push(WcobEquiv {
                            x: x.clone(),
                            sn: sn.clone(),
                            i,
                            y: y.clone(),
                            sm: sm.clone(),
                        });
                    }
                }
            }
        }
    }
    let max_arity = params.max_arity.max(1);
    let max_len = params.max_len;
    let random = move || {
        let ax = rng.gen_range(1..=max_arity);
        let ay = rng.gen_range(1..=max_arity);
        let x = rand_wcob(&mut rng, ax, max_len);
        let y = rand_wcob(&mut rng, ay, max_len);
        WcobEquiv {
            x,
            sn: gen::rand_perm(&mut rng, ax),
            i: rng.gen_range(1..=ax),
            y,
            sm: gen::rand_perm(&mut rng, ay),
        }
    };
    let routed = *impls;
    let holds = move |inst: &WcobEquiv| -> Result<bool> {
        let lhs = wcob_compose_impl(
            &routed,
            &inst.x.relabel(&inst.sn)?,
            inst.i,
            &inst.y.relabel(&inst.sm)?,
        )?;
        let slot = inst.sn.inverse().apply(inst.i);
        let sigma = inst.sn.block_compose(inst.i, &inst.sm)?;
        let rhs = wcob_compose_impl(&routed, &inst.x, slot, &inst.y)?.relabel(&sigma)?;
        lhs.equal(&rhs)
    };
    let shrink = |inst: &WcobEquiv| {
        let mut out = Vec::new();
        for x in wcob_shrinks(&inst.x) {
            out.push(WcobEquiv { x, ..inst.clone() });
        }
        for y in wcob_shrinks(&inst.y) {
            out.push(WcobEquiv { y, ..inst.clone() });
        }
        out
    };
    run_tiers(exhaustive, params.samples, random, holds, shrink)
}
