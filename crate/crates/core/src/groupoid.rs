//! Operads in groupoids: colored braids, their weak variants, hom-set
//! decision procedures, and the structure maps between them.
//!
//! Four flavors of objects live here, one per operad-in-groupoids:
//!
//! * `Cob` — a permutation; morphisms are braids whose underlying
//!   permutation is `target^-1 . source`. Hom-sets are infinite (torsors
//!   over the pure braid group), so only witness checking is offered.
//! * `Wcob` — a [`WCobObject`]: a permutation `u` paired with a braid `A`.
//!   A morphism `(u, A) -> (v, C)` additionally satisfies `g A = C`, which
//!   pins the witness down to `C A^-1`: hom-sets have at most one element
//!   and [`hom`] decides them.
//! * `Pab` — a parenthesized word; conditions are read through the label
//!   permutation `tau`.
//! * `Wpab` — a braided parenthesized word ([`OmegaBrElement`]);
//!   conditions are read through the projection [`pi`], which takes `tau`
//!   of the word and deletes the braid strands riding on `x0` leaves.
//!
//! Morphisms compose vertically (within a groupoid) and operadically
//! (across arities, by cabling witnesses). The operadic witness index
//! comes from the *target* object's permutation; [`MorphIndexConvention`]
//! exposes the source-side alternative so the law suite can demonstrate it
//! breaks functoriality.
//!
//! [`forget`] drops the braid component of a braided word, an operad map
//! onto the `Pab` flavor; [`pi_morphism`] is the morphism level of the
//! projection onto the `Wcob` flavor.

use std::fmt;

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::words::{OmegaBrElement, ParenWord};

/// Which operad-in-groupoids an object or morphism belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Flavor {
    Cob,
    Wcob,
    Pab,
    Wpab,
}

/// Which object's permutation supplies the cable index when composing
/// morphisms operadically. `OutputPermutation` is the adopted convention;
/// `InputPermutation` is the rejected alternative, kept so the law suite
/// can show it breaks the morphism conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MorphIndexConvention {
    OutputPermutation,
    InputPermutation,
}

impl Default for MorphIndexConvention {
    fn default() -> Self {
        MorphIndexConvention::OutputPermutation
    }
}

/// An object of the weak colored-braid operad: a permutation and a braid
/// on the same number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WCobObject {
    perm: Permutation,
    braid: BraidWord,
}

impl WCobObject {
    pub fn new(perm: Permutation, braid: BraidWord) -> Result<Self> {
        if perm.size() != braid.strands() {
            return Err(Error::SizeMismatch {
                context: "weak colored-braid object",
                expected: perm.size(),
                found: braid.strands(),
            });
        }
        Ok(WCobObject { perm, braid })
    }

    /// The unit object: identity permutation and empty braid in arity 1.
    pub fn unit() -> Self {
        WCobObject {
            perm: Permutation::identity(1),
            braid: BraidWord::empty(1),
        }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn arity(&self) -> usize {
        self.perm.size()
    }

    /// Object equality: equal permutations and equal braid group elements
    /// (not merely equal words).
    pub fn equal(&self, other: &WCobObject) -> Result<bool> {
        if self.arity() != other.arity() {
            return Err(Error::SizeMismatch {
                context: "weak colored-braid object equality",
                expected: self.arity(),
                found: other.arity(),
            });
        }
        if self.perm != other.perm {
            return Ok(false);
        }
        self.braid.equals(&other.braid)
    }

    /// The symmetric-group action: post-composes the permutation, braid
    /// untouched.
    pub fn relabel(&self, sigma: &Permutation) -> Result<WCobObject> {
        Ok(WCobObject {
            perm: sigma.compose(&self.perm)?,
            braid: self.braid.clone(),
        })
    }
}

impl fmt::Display for WCobObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.perm, self.braid)
    }
}

/// Operadic composition of weak colored-braid objects: block composition
/// of the permutations and cabling of the braid at the strand whose bottom
/// endpoint carries color `i`, namely `u^-1(i)`.
pub fn wcob_compose_objects(x: &WCobObject, i: usize, y: &WCobObject) -> Result<WCobObject> {
    let perm = x.perm.block_compose(i, &y.perm)?;
    let braid = x.braid.cable(x.perm.inverse().apply(i), &y.braid)?;
    WCobObject::new(perm, braid)
}

/// Projects a braided parenthesized word to a weak colored-braid object:
/// the label permutation of the word, with every braid strand whose bottom
/// leaf is an `x0` deleted.
pub fn pi(x: &OmegaBrElement) -> Result<WCobObject> {
    let zeros: Vec<usize> = x
        .word()
        .leaf_labels()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k == 0)
        .map(|(idx, _)| idx + 1)
        .collect();
    let braid = x.braid().delete_strands(&zeros)?;
    WCobObject::new(x.word().tau(), braid)
}

/// An object of one of the four operads in groupoids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GroupoidObject {
    Cob(Permutation),
    Wcob(WCobObject),
    Pab(ParenWord),
    Wpab(OmegaBrElement),
}

impl GroupoidObject {
    pub fn flavor(&self) -> Flavor {
        match self {
            GroupoidObject::Cob(_) => Flavor::Cob,
            GroupoidObject::Wcob(_) => Flavor::Wcob,
            GroupoidObject::Pab(_) => Flavor::Pab,
            GroupoidObject::Wpab(_) => Flavor::Wpab,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            GroupoidObject::Cob(u) => u.size(),
            GroupoidObject::Wcob(x) => x.arity(),
            GroupoidObject::Pab(p) => p.arity(),
            GroupoidObject::Wpab(x) => x.arity(),
        }
    }

    /// The permutation entering the morphism conditions: the object itself
    /// for the colored-braid flavors, the label permutation for the
    /// parenthesized ones.
    pub fn sigma_image(&self) -> Permutation {
        match self {
            GroupoidObject::Cob(u) => u.clone(),
            GroupoidObject::Wcob(x) => x.perm().clone(),
            GroupoidObject::Pab(p) => p.tau(),
            GroupoidObject::Wpab(x) => x.word().tau(),
        }
    }

    /// Object equality within a flavor (braid components compared with
    /// `equals`); comparing across flavors is an error.
    pub fn equal(&self, other: &GroupoidObject) -> Result<bool> {
        match (self, other) {
            (GroupoidObject::Cob(u), GroupoidObject::Cob(v)) => Ok(u == v),
            (GroupoidObject::Wcob(x), GroupoidObject::Wcob(y)) => x.equal(y),
            (GroupoidObject::Pab(p), GroupoidObject::Pab(q)) => Ok(p == q),
            (GroupoidObject::Wpab(x), GroupoidObject::Wpab(y)) => x.equals(y),
            _ => Err(Error::NotComposable(format!(
                "cannot compare a {:?}-flavored object with a {:?}-flavored one",
                self.flavor(),
                other.flavor()
            ))),
        }
    }

    /// Operadic composition of objects, flavor-wise.
    pub fn compose(&self, i: usize, other: &GroupoidObject) -> Result<GroupoidObject> {
        match (self, other) {
            (GroupoidObject::Cob(u), GroupoidObject::Cob(v)) => {
                Ok(GroupoidObject::Cob(u.block_compose(i, v)?))
            }
            (GroupoidObject::Wcob(x), GroupoidObject::Wcob(y)) => {
                Ok(GroupoidObject::Wcob(wcob_compose_objects(x, i, y)?))
            }
            (GroupoidObject::Pab(p), GroupoidObject::Pab(q)) => {
                Ok(GroupoidObject::Pab(p.graft(i, q)?))
            }
            (GroupoidObject::Wpab(x), GroupoidObject::Wpab(y)) => {
                Ok(GroupoidObject::Wpab(x.compose(i, y)?))
            }
            _ => Err(Error::NotComposable(format!(
                "cannot compose a {:?}-flavored object with a {:?}-flavored one",
                self.flavor(),
                other.flavor()
            ))),
        }
    }
}

impl fmt::Display for GroupoidObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidObject::Cob(u) => u.fmt(f),
            GroupoidObject::Wcob(x) => x.fmt(f),
            GroupoidObject::Pab(p) => p.fmt(f),
            GroupoidObject::Wpab(x) => x.fmt(f),
        }
    }
}

/// A morphism in one of the four operads in groupoids: a witness braid on
/// `arity` strands between two same-flavor objects. Validity is decided by
/// [`check_morphism`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupoidMorphism {
    pub source: GroupoidObject,
    pub target: GroupoidObject,
    pub witness: BraidWord,
}

impl GroupoidMorphism {
    pub fn flavor(&self) -> Flavor {
        self.source.flavor()
    }

    pub fn arity(&self) -> usize {
        self.source.arity()
    }
}

/// The identity morphism at `x`: empty witness.
pub fn identity_morphism(x: &GroupoidObject) -> GroupoidMorphism {
    GroupoidMorphism {
        source: x.clone(),
        target: x.clone(),
        witness: BraidWord::empty(x.arity()),
    }
}

/// Decides the hom-set from `x` to `y` for the weak flavors, where it has
/// at most one element: the candidate witness `C A^-1` (braid components
/// read through [`pi`] for braided words), valid exactly when its
/// underlying permutation is `v^-1 . u`. The non-weak flavors have
/// infinite hom-sets; asking is an error — use [`check_morphism`] with an
/// explicit witness instead.
pub fn hom(x: &GroupoidObject, y: &GroupoidObject) -> Result<Option<GroupoidMorphism>> {
    if x.flavor() != y.flavor() {
        return Err(Error::NotComposable(format!(
            "hom between a {:?}-flavored object and a {:?}-flavored one",
            x.flavor(),
            y.flavor()
        )));
    }
    if x.arity() != y.arity() {
        return Err(Error::SizeMismatch {
            context: "hom",
            expected: x.arity(),
            found: y.arity(),
        });
    }
    let (a, c) = match (x, y) {
        (GroupoidObject::Wcob(a), GroupoidObject::Wcob(c)) => {
            (a.braid().clone(), c.braid().clone())
        }
        (GroupoidObject::Wpab(a), GroupoidObject::Wpab(c)) => {
            (pi(a)?.braid().clone(), pi(c)?.braid().clone())
        }
        _ => {
            return Err(Error::NotComposable(format!(
                "hom-sets of the {:?} flavor are infinite; check an explicit witness instead",
                x.flavor()
            )))
        }
    };
    let witness = c.multiply(&a.inverse())?;
    let required = y.sigma_image().inverse().compose(&x.sigma_image())?;
    if witness.underlying_permutation() != required {
        return Ok(None);
    }
    Ok(Some(GroupoidMorphism {
        source: x.clone(),
        target: y.clone(),
        witness,
    }))
}

/// Checks every condition the flavor imposes on a morphism; structural
/// mismatches yield `false` rather than an error.
pub fn check_morphism(m: &GroupoidMorphism) -> bool {
    if m.source.flavor() != m.target.flavor() {
        return false;
    }
    let n = m.source.arity();
    if m.target.arity() != n || m.witness.strands() != n {
        return false;
    }
    let required = match m.target.sigma_image().inverse().compose(&m.source.sigma_image()) {
        Ok(p) => p,
        Err(_) => return false,
    };
    if m.witness.underlying_permutation() != required {
        return false;
    }
    // The weak flavors additionally require the witness to carry the
    // source braid to the target braid.
    let (a, c) = match (&m.source, &m.target) {
        (GroupoidObject::Wcob(a), GroupoidObject::Wcob(c)) => {
            (a.braid().clone(), c.braid().clone())
        }
        (GroupoidObject::Wpab(a), GroupoidObject::Wpab(c)) => {
            match (pi(a), pi(c)) {
                (Ok(pa), Ok(pc)) => (pa.braid().clone(), pc.braid().clone()),
                _ => return false,
            }
        }
        _ => return true,
    };
    match m.witness.multiply(&a) {
        Ok(moved) => moved.equals(&c).unwrap_or(false),
        Err(_) => false,
    }
}

/// Vertical (groupoid) composition: `f` then `g`, defined when the target
/// of `f` equals the source of `g`; witnesses multiply with `g`'s on top.
pub fn compose_morphisms_vertical(
    f: &GroupoidMorphism,
    g: &GroupoidMorphism,
) -> Result<GroupoidMorphism> {
    if !f.target.equal(&g.source)? {
        return Err(Error::NotComposable(
            "vertical composition: target of the first morphism differs from source of the second"
                .into(),
        ));
    }
    Ok(GroupoidMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        witness: g.witness.multiply(&f.witness)?,
    })
}

/// Operadic composition of morphisms with the adopted (target-side) index
/// convention.
pub fn compose_morphisms_operadic(
    f: &GroupoidMorphism,
    i: usize,
    g: &GroupoidMorphism,
) -> Result<GroupoidMorphism> {
    compose_morphisms_operadic_with(f, i, g, MorphIndexConvention::OutputPermutation)
}

/// Like [`compose_morphisms_operadic`] with an explicit index convention:
/// sources and targets compose object-wise at slot `i`, and the witness of
/// `g` cables into the witness of `f` at the strand the chosen endpoint's
/// permutation assigns to color `i`.
pub fn compose_morphisms_operadic_with(
    f: &GroupoidMorphism,
    i: usize,
    g: &GroupoidMorphism,
    convention: MorphIndexConvention,
) -> Result<GroupoidMorphism> {
    let source = f.source.compose(i, &g.source)?;
    let target = f.target.compose(i, &g.target)?;
    let index = match convention {
        MorphIndexConvention::OutputPermutation => f.target.sigma_image().inverse().apply(i),
        MorphIndexConvention::InputPermutation => f.source.sigma_image().inverse().apply(i),
    };
    Ok(GroupoidMorphism {
        source,
        target,
        witness: f.witness.cable(index, &g.witness)?,
    })
}

/// Decides the hom-set between braided parenthesized words; a convenience
/// wrapper around [`hom`] in the `Wpab` flavor.
pub fn wpab_hom(x: &OmegaBrElement, y: &OmegaBrElement) -> Result<Option<GroupoidMorphism>> {
    hom(
        &GroupoidObject::Wpab(x.clone()),
        &GroupoidObject::Wpab(y.clone()),
    )
}

/// The morphism level of [`pi`]: a braided-word morphism maps to the weak
/// colored-braid morphism between the projected objects, with the same
/// witness.
pub fn pi_morphism(m: &GroupoidMorphism) -> Result<GroupoidMorphism> {
    match (&m.source, &m.target) {
        (GroupoidObject::Wpab(x), GroupoidObject::Wpab(y)) => Ok(GroupoidMorphism {
            source: GroupoidObject::Wcob(pi(x)?),
            target: GroupoidObject::Wcob(pi(y)?),
            witness: m.witness.clone(),
        }),
        _ => Err(Error::NotComposable(
            "the projection is defined on Wpab-flavored morphisms".into(),
        )),
    }
}

/// Forgets the braid component of a braided parenthesized word.
pub fn forget(x: &OmegaBrElement) -> ParenWord {
    x.word().clone()
}

/// Forgets the braid components of a braided-word morphism's endpoints,
/// landing in the `Pab` flavor with the same witness.
pub fn forget_morphism(m: &GroupoidMorphism) -> Result<GroupoidMorphism> {
    match (&m.source, &m.target) {
        (GroupoidObject::Wpab(x), GroupoidObject::Wpab(y)) => Ok(GroupoidMorphism {
            source: GroupoidObject::Pab(forget(x)),
            target: GroupoidObject::Pab(forget(y)),
            witness: m.witness.clone(),
        }),
        _ => Err(Error::NotComposable(
            "the forgetful map is defined on Wpab-flavored morphisms".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Tree;

    fn perm(images: Vec<usize>) -> Permutation {
        Permutation::new(images).unwrap()
    }

    fn braid(strands: usize, pairs: &[(usize, i8)]) -> BraidWord {
        BraidWord::from_pairs(strands, pairs).unwrap()
    }

    fn leaf(k: usize) -> Tree {
        Tree::Leaf(k)
    }

    fn node(l: Tree, r: Tree) -> Tree {
        Tree::Node(Box::new(l), Box::new(r))
    }

    fn braided(arity: usize, tree: Tree, strands: usize, pairs: &[(usize, i8)]) -> OmegaBrElement {
        OmegaBrElement::new(ParenWord::new(arity, tree).unwrap(), braid(strands, pairs)).unwrap()
    }

    fn wcob(images: Vec<usize>, pairs: &[(usize, i8)]) -> GroupoidObject {
        let n = images.len();
        GroupoidObject::Wcob(WCobObject::new(perm(images), braid(n, pairs)).unwrap())
    }

    #[test]
    fn object_construction_checks_sizes() {
        assert!(WCobObject::new(perm(vec![2, 1]), BraidWord::empty(2)).is_ok());
        assert!(WCobObject::new(perm(vec![2, 1]), BraidWord::empty(3)).is_err());
    }

    #[test]
    fn object_composition_blocks_and_cables() {
        let x = WCobObject::new(perm(vec![2, 1]), braid(2, &[(1, 1)])).unwrap();
        let y = WCobObject::new(perm(vec![2, 1]), braid(2, &[(1, -1)])).unwrap();
        let got = wcob_compose_objects(&x, 1, &y).unwrap();
        assert_eq!(got.perm(), &perm(vec![3, 2, 1]));
        // Color 1 sits at the bottom of strand u^-1(1) = 2, so the cable
        // lands there.
        assert_eq!(got.braid(), &braid(3, &[(2, -1), (1, 1), (2, 1)]));
    }

    #[test]
    fn pi_projects_words_and_deletes_unit_strands() {
        let x = braided(1, node(leaf(1), leaf(0)), 2, &[(1, 1)]);
        let px = pi(&x).unwrap();
        assert_eq!(px.perm(), &Permutation::identity(1));
        assert!(px.braid().is_empty());

        let y = braided(2, node(leaf(1), node(leaf(0), leaf(2))), 3, &[(1, 1), (2, 1)]);
        let py = pi(&y).unwrap();
        assert_eq!(py.perm(), &perm(vec![1, 2]));
        assert_eq!(py.braid(), &braid(2, &[(1, 1)]));

        assert!(pi(&OmegaBrElement::unit())
            .unwrap()
            .equal(&WCobObject::unit())
            .unwrap());
    }

    #[test]
    fn strand_deletion_splits_over_products() {
        // Deleting a set of bottom strands from a product deletes the set
        // from the first factor and its image positions from the second.
        let a = braid(3, &[(1, 1), (2, 1)]);
        let b = braid(3, &[(2, -1), (1, 1)]);
        let zs = [2usize];
        let whole = a.multiply(&b).unwrap().delete_strands(&zs).unwrap();
        let moved: Vec<usize> = zs
            .iter()
            .map(|&z| a.underlying_permutation().inverse().apply(z))
            .collect();
        let split = a
            .delete_strands(&zs)
            .unwrap()
            .multiply(&b.delete_strands(&moved).unwrap())
            .unwrap();
        assert_eq!(whole, split);
    }

    #[test]
    fn zero_positions_transform_under_graft() {
        // Leaf positions of x0 leaves: the outer word's zeros shift past
        // the inserted block, the inner word's land at P + w - 1.
        let p = ParenWord::new(2, node(node(leaf(0), leaf(2)), leaf(1))).unwrap();
        let q = ParenWord::new(1, node(leaf(1), leaf(0))).unwrap();
        let i = 2;
        let composite = p.graft(i, &q).unwrap();
        let zeros = |w: &ParenWord| -> Vec<usize> {
            w.leaf_labels()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k == 0)
                .map(|(idx, _)| idx + 1)
                .collect()
        };
        let cap = p.t_inverse(i).unwrap();
        let mut expected: Vec<usize> = zeros(&p)
            .into_iter()
            .map(|z| if z < cap { z } else { z + q.len() - 1 })
            .chain(zeros(&q).into_iter().map(|w| cap + w - 1))
            .collect();
        expected.sort_unstable();
        assert_eq!(zeros(&composite), expected);
    }

    #[test]
    fn hom_finds_the_unique_witness() {
        // A pure braid morphism: (id2, e) -> (id2, s1^2).
        let x = wcob(vec![1, 2], &[]);
        let y = wcob(vec![1, 2], &[(1, 1), (1, 1)]);
        let m = hom(&x, &y).unwrap().expect("hom-set is nonempty");
        assert!(check_morphism(&m));
        assert!(m.witness.equals(&braid(2, &[(1, 1), (1, 1)])).unwrap());

        // A single crossing cannot be pure: the candidate witness violates
        // the permutation condition.
        let z = wcob(vec![1, 2], &[(1, 1)]);
        assert!(hom(&x, &z).unwrap().is_none());

        // hom(x, x) is the identity morphism.
        let idm = hom(&x, &x).unwrap().unwrap();
        assert!(idm.witness.is_empty());

        // Arity mismatch is a malformed question, not an empty hom-set.
        assert!(hom(&x, &GroupoidObject::Wcob(WCobObject::unit())).is_err());
        // As is mixing flavors, or asking for an infinite hom-set.
        assert!(hom(&x, &GroupoidObject::Cob(perm(vec![1, 2]))).is_err());
        let c = GroupoidObject::Cob(perm(vec![1, 2]));
        assert!(hom(&c, &c).is_err());
    }

    #[test]
    fn hom_witness_is_unique() {
        let x = wcob(vec![2, 1], &[(1, 1)]);
        let y = wcob(vec![1, 2], &[(1, 1), (1, 1)]);
        let m = hom(&x, &y).unwrap().unwrap();
        assert!(m.witness.equals(&braid(2, &[(1, 1)])).unwrap());
        // Any braid equal to the witness passes; any other fails, even
        // with the same underlying permutation.
        let same = GroupoidMorphism {
            witness: m.witness.multiply(&braid(2, &[(1, 1), (1, -1)])).unwrap(),
            ..m.clone()
        };
        assert!(check_morphism(&same));
        let other = GroupoidMorphism {
            witness: m.witness.multiply(&braid(2, &[(1, 1), (1, 1)])).unwrap(),
            ..m.clone()
        };
        assert!(!check_morphism(&other));
    }

    #[test]
    fn cob_flavor_checks_the_permutation_condition_only() {
        let m = GroupoidMorphism {
            source: GroupoidObject::Cob(perm(vec![2, 1])),
            target: GroupoidObject::Cob(perm(vec![1, 2])),
            witness: braid(2, &[(1, 1)]),
        };
        assert!(check_morphism(&m));
        // Pure-braid witnesses between the same endpoints also pass: the
        // hom-set is infinite, which is why `hom` refuses this flavor.
        let m2 = GroupoidMorphism {
            witness: braid(2, &[(1, 1), (1, 1), (1, 1)]),
            ..m.clone()
        };
        assert!(check_morphism(&m2));
        let bad = GroupoidMorphism {
            witness: braid(2, &[]),
            ..m.clone()
        };
        assert!(!check_morphism(&bad));
    }

    #[test]
    fn identity_and_vertical_composition() {
        let x = wcob(vec![1, 2], &[]);
        let y = wcob(vec![1, 2], &[(1, 1), (1, 1)]);
        let z = wcob(vec![1, 2], &[(1, 1), (1, 1), (1, 1), (1, 1)]);
        let f = hom(&x, &y).unwrap().unwrap();
        let g = hom(&y, &z).unwrap().unwrap();
        let gf = compose_morphisms_vertical(&f, &g).unwrap();
        assert!(check_morphism(&gf));
        assert!(gf.source.equal(&x).unwrap() && gf.target.equal(&z).unwrap());
        let direct = hom(&x, &z).unwrap().unwrap();
        assert!(gf.witness.equals(&direct.witness).unwrap());

        let idx = identity_morphism(&x);
        assert!(check_morphism(&idx));
        let left = compose_morphisms_vertical(&idx, &f).unwrap();
        assert!(left.witness.equals(&f.witness).unwrap());
        let right = compose_morphisms_vertical(&f, &identity_morphism(&y)).unwrap();
        assert!(right.witness.equals(&f.witness).unwrap());

        // Endpoint mismatch is not composable.
        assert!(compose_morphisms_vertical(&g, &f).is_err());
    }

    #[test]
    fn operadic_composition_preserves_morphisms() {
        // f: (u, A) -> (v, C) with u = [2,1], composed at slot 1 with a
        // pure 2-strand morphism. The cable index must come from the
        // target permutation: v^-1(1) = 1 here, while u^-1(1) = 2.
        let u = perm(vec![2, 1]);
        let a = braid(2, &[(1, 1)]);
        let g_w = braid(2, &[(1, 1)]);
        let c = g_w.multiply(&a).unwrap();
        let v = g_w.underlying_permutation().inverse().compose(&u).unwrap();
        let f = GroupoidMorphism {
            source: wcob(u.images().to_vec(), &[(1, 1)]),
            target: GroupoidObject::Wcob(WCobObject::new(v, c).unwrap()),
            witness: g_w,
        };
        assert!(check_morphism(&f));

        let x2 = wcob(vec![1, 2], &[]);
        let y2 = wcob(vec![1, 2], &[(1, 1), (1, 1)]);
        let g = hom(&x2, &y2).unwrap().unwrap();

        let composed = compose_morphisms_operadic(&f, 1, &g).unwrap();
        assert!(check_morphism(&composed));
        assert!(composed
            .source
            .equal(&f.source.compose(1, &g.source).unwrap())
            .unwrap());
        assert!(composed
            .target
            .equal(&f.target.compose(1, &g.target).unwrap())
            .unwrap());

        // The rejected source-side convention cables at u^-1(1) = 2 and
        // produces an invalid morphism on this very instance.
        let skewed =
            compose_morphisms_operadic_with(&f, 1, &g, MorphIndexConvention::InputPermutation)
                .unwrap();
        assert!(!check_morphism(&skewed));
    }

    #[test]
    fn wpab_hom_moves_weak_units() {
        // nu(x1, x2) with no braiding maps to nu(x2, x1) with a single
        // crossing: the projected witness is that crossing.
        let x = braided(2, node(leaf(1), leaf(2)), 2, &[]);
        let y = braided(2, node(leaf(2), leaf(1)), 2, &[(1, 1)]);
        let m = wpab_hom(&x, &y).unwrap().expect("hom-set is nonempty");
        assert!(check_morphism(&m));
        assert!(m.witness.equals(&braid(2, &[(1, 1)])).unwrap());

        // Unit leaves are invisible: a braided word with an extra x0 still
        // reaches the bare word, with the x0 strand deleted.
        let padded = braided(2, node(node(leaf(1), leaf(0)), leaf(2)), 3, &[(2, 1), (2, -1)]);
        let m2 = wpab_hom(&padded, &y).unwrap().expect("hom-set is nonempty");
        assert!(check_morphism(&m2));

        // Words of different arity cannot be compared.
        assert!(wpab_hom(&x, &OmegaBrElement::unit()).is_err());
    }

    #[test]
    fn wpab_composition_projects_to_wcob_composition() {
        let x = braided(2, node(leaf(0), node(leaf(1), leaf(2))), 3, &[(2, 1)]);
        let y = braided(2, node(leaf(2), leaf(1)), 2, &[(1, -1)]);
        let xy = x.compose(2, &y).unwrap();
        let projected = pi(&xy).unwrap();
        let composed = wcob_compose_objects(&pi(&x).unwrap(), 2, &pi(&y).unwrap()).unwrap();
        assert!(projected.equal(&composed).unwrap());
    }

    #[test]
    fn pi_morphism_lands_in_weak_colored_braids() {
        let x = braided(2, node(leaf(1), leaf(2)), 2, &[]);
        let y = braided(2, node(leaf(2), leaf(1)), 2, &[(1, 1)]);
        let m = wpab_hom(&x, &y).unwrap().unwrap();
        let pm = pi_morphism(&m).unwrap();
        assert_eq!(pm.flavor(), Flavor::Wcob);
        assert!(check_morphism(&pm));
        assert!(pm.witness.equals(&m.witness).unwrap());
        // Only braided-word morphisms project.
        assert!(pi_morphism(&pm).is_err());
    }

    #[test]
    fn forget_drops_the_braid_and_respects_composition() {
        let x = braided(2, node(leaf(0), node(leaf(1), leaf(2))), 3, &[(2, 1)]);
        let y = braided(2, node(leaf(2), leaf(1)), 2, &[(1, -1)]);
        assert_eq!(forget(&x), *x.word());
        // forget(x o_i y) = forget(x) grafted with forget(y).
        let xy = x.compose(2, &y).unwrap();
        assert_eq!(forget(&xy), forget(&x).graft(2, &forget(&y)).unwrap());
    }

    #[test]
    fn forget_morphism_lands_in_parenthesized_words() {
        let x = braided(2, node(leaf(1), leaf(2)), 2, &[]);
        let y = braided(2, node(leaf(2), leaf(1)), 2, &[(1, 1)]);
        let m = wpab_hom(&x, &y).unwrap().unwrap();
        let fm = forget_morphism(&m).unwrap();
        assert_eq!(fm.flavor(), Flavor::Pab);
        assert!(check_morphism(&fm));
        assert_eq!(fm.source, GroupoidObject::Pab(forget(&x)));
        // Only braided-word morphisms forget.
        assert!(forget_morphism(&fm).is_err());
    }

    #[test]
    fn display_objects() {
        let x = WCobObject::new(perm(vec![2, 1]), braid(2, &[(1, -1)])).unwrap();
        assert_eq!(x.to_string(), "[2,1] | B2: s1^-1");
        assert_eq!(GroupoidObject::Wcob(x).to_string(), "[2,1] | B2: s1^-1");
        let w = braided(1, node(leaf(1), leaf(0)), 2, &[]);
        assert_eq!(GroupoidObject::Wpab(w).to_string(), "(x1 x0) | B2: e");
    }
}