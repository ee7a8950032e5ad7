//! Seeded instance generators and constructions shared by the laws.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::error::Result;
use crate::gcrossed::FiniteGroup;
use crate::perm::Permutation;
use crate::words::{OmegaBrElement, ParenWord, Tree};

/// A uniformly random permutation (Fisher–Yates).
pub(crate) fn rand_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for k in (1..images.len()).rev() {
        let j = rng.gen_range(0..=k);
        images.swap(k, j);
    }
    Permutation::new(images).expect("a shuffled identity is a permutation")
}

pub(crate) fn rand_sign(rng: &mut ChaCha8Rng) -> i8 {
    if rng.gen::<bool>() {
        1
    } else {
        -1
    }
}

/// A random braid word of length up to `max_len`.
pub(crate) fn rand_braid(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::empty(strands);
    }
    let len = rng.gen_range(0..=max_len);
    let pairs: Vec<(usize, i8)> = (0..len)
        .map(|_| (rng.gen_range(1..strands), rand_sign(rng)))
        .collect();
    BraidWord::from_pairs(strands, &pairs).expect("generated letters are in range")
}

/// A braid in the kernel of the underlying-permutation map.
pub(crate) fn rand_pure_braid(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let h = rand_braid(rng, strands, max_len);
    let lift = BraidWord::positive_lift(&h.underlying_permutation());
    h.multiply(&lift.inverse()).expect("same strand count")
}

fn rand_tree(rng: &mut ChaCha8Rng, labels: &[usize]) -> Tree {
    if labels.len() == 1 {
        return Tree::Leaf(labels[0]);
    }
    let split = rng.gen_range(1..labels.len());
    Tree::Node(
        Box::new(rand_tree(rng, &labels[..split])),
        Box::new(rand_tree(rng, &labels[split..])),
    )
}

/// A random word with exactly `arity` letters and exactly `len` leaves
/// (`len - arity` of them weak units), over a random shape.
pub(crate) fn rand_word_sized(rng: &mut ChaCha8Rng, arity: usize, len: usize) -> ParenWord {
    assert!(len >= arity && len >= 1, "invalid word size request");
    let mut slots: Vec<usize> = (0..len).collect();
    for k in (1..slots.len()).rev() {
        let j = rng.gen_range(0..=k);
        slots.swap(k, j);
    }
    let mut labels = vec![0usize; len];
    let letter_order = rand_perm(rng, arity);
    for (k, &slot) in slots.iter().take(arity).enumerate() {
        labels[slot] = letter_order.apply(k + 1);
    }
    ParenWord::new(arity, rand_tree(rng, &labels)).expect("labels are a bijection by construction")
}

/// A random word with the given arity and up to `extra_zeros` unit leaves.
pub(crate) fn rand_word_arity(
    rng: &mut ChaCha8Rng,
    arity: usize,
    extra_zeros: usize,
) -> ParenWord {
    let len = arity.max(1) + rng.gen_range(0..=extra_zeros);
    rand_word_sized(rng, arity, len)
}

/// A random braided word with the given arity.
pub(crate) fn rand_omegabr_arity(
    rng: &mut ChaCha8Rng,
    arity: usize,
    extra_zeros: usize,
    max_braid_len: usize,
) -> OmegaBrElement {
    let word = rand_word_arity(rng, arity, extra_zeros);
    let braid = rand_braid(rng, word.len(), max_braid_len);
    OmegaBrElement::new(word, braid).expect("strand count matches leaf count")
}

fn pick<'a, T>(rng: &mut ChaCha8Rng, xs: &'a [T]) -> Option<&'a T> {
    if xs.is_empty() {
        None
    } else {
        Some(&xs[rng.gen_range(0..xs.len())])
    }
}

/// Two words guaranteed to represent the same braid: the second is the
/// first transformed by random free insertions/cancellations, braid
/// relations, and far commutations.
pub(crate) fn equal_braid_pair(
    rng: &mut ChaCha8Rng,
    strands: usize,
    max_len: usize,
) -> (BraidWord, BraidWord) {
    let base = rand_braid(rng, strands, max_len);
    let mut letters: Vec<(usize, i8)> = base
        .letters()
        .iter()
        .map(|l| (l.position, l.sign))
        .collect();
    let rewrites = rng.gen_range(3..=8);
    for _ in 0..rewrites {
        match rng.gen_range(0..4u8) {
            0 if strands >= 2 => {
                let pos = rng.gen_range(1..strands);
                let sign = rand_sign(rng);
                let at = rng.gen_range(0..=letters.len());
                letters.insert(at, (pos, -sign));
                letters.insert(at, (pos, sign));
            }
            1 => {
                let hits: Vec<usize> = (1..letters.len())
                    .filter(|&k| {
                        letters[k - 1].0 == letters[k].0 && letters[k - 1].1 == -letters[k].1
                    })
                    .collect();
                if let Some(&k) = pick(rng, &hits) {
                    letters.drain(k - 1..=k);
                }
            }
            2 => {
                // sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
                // (same-signed triples swap in either direction).
                let hits: Vec<usize> = (2..letters.len())
                    .filter(|&k| {
                        let (a, b, c) = (letters[k - 2], letters[k - 1], letters[k]);
                        a.1 == b.1
                            && b.1 == c.1
                            && a.0 == c.0
                            && (b.0 == a.0 + 1 || a.0 == b.0 + 1)
                    })
                    .collect();
                if let Some(&k) = pick(rng, &hits) {
                    let (a, b) = (letters[k - 2], letters[k - 1]);
                    letters[k - 2] = b;
                    letters[k - 1] = a;
                    letters[k] = b;
                }
            }
            3 => {
                let hits: Vec<usize> = (1..letters.len())
                    .filter(|&k| letters[k - 1].0.abs_diff(letters[k].0) >= 2)
                    .collect();
                if let Some(&k) = pick(rng, &hits) {
                    letters.swap(k - 1, k);
                }
            }
            _ => {}
        }
    }
    let rewritten =
        BraidWord::from_pairs(strands, &letters).expect("rewrites preserve letter validity");
    (base, rewritten)
}

/// Realizes a braid `g` on the strands at the given (sorted, 1-based)
/// bottom positions of a wider braid, carrying each crossing over the
/// intermediate strands so that every other strand returns to its own
/// position. Deleting the complement recovers `g` verbatim.
pub(crate) fn embed_on_positions(
    g: &BraidWord,
    positions: &[usize],
    total: usize,
) -> Result<BraidWord> {
    let mut pairs: Vec<(usize, i8)> = Vec::new();
    for l in g.letters() {
        let lo = positions[l.position - 1];
        let hi = positions[l.position];
        for j in lo..hi.saturating_sub(1) {
            pairs.push((j, 1));
        }
        pairs.push((hi - 1, l.sign));
        for j in (lo..hi.saturating_sub(1)).rev() {
            pairs.push((j, 1));
        }
    }
    BraidWord::from_pairs(total, &pairs)
}

/// Builds the unique braided word `y` such that `g` witnesses a morphism
/// `x -> y`: the word is `x`'s relabeled through `g`'s underlying
/// permutation, and the braid is `g` (carried over the unit strands)
/// under `x`'s braid.
pub(crate) fn wpab_morphism_target(
    x: &OmegaBrElement,
    g: &BraidWord,
) -> Result<OmegaBrElement> {
    let tau = x.word().tau();
    let v = tau.compose(&g.underlying_permutation().inverse())?;
    let sigma = v.compose(&tau.inverse())?;
    let word = x.word().relabel(&sigma)?;
    let visible: Vec<usize> = x
        .word()
        .leaf_labels()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(idx, _)| idx + 1)
        .collect();
    let embedded = embed_on_positions(g, &visible, x.word().len())?;
    let braid = embedded.multiply(x.braid())?;
    OmegaBrElement::new(word, braid)
}

/// The finite groups used by the grade/twist laws.
pub(crate) fn builtin_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("cyclic:2", FiniteGroup::cyclic(2).expect("valid order")),
        ("cyclic:3", FiniteGroup::cyclic(3).expect("valid order")),
        ("cyclic:4", FiniteGroup::cyclic(4).expect("valid order")),
        ("cyclic:5", FiniteGroup::cyclic(5).expect("valid order")),
        ("sym3", FiniteGroup::symmetric(3).expect("valid degree")),
    ]
}

/// A random grade tuple over the group.
pub(crate) fn rand_grades(rng: &mut ChaCha8Rng, group: &FiniteGroup, n: usize) -> Vec<usize> {
    (0..n).map(|_| rng.gen_range(0..group.order())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::law_rng;

    fn rng() -> ChaCha8Rng {
        law_rng("gen.tests", 42)
    }

    #[test]
    fn random_words_validate_and_respect_sizes() {
        let mut rng = rng();
        for _ in 0..200 {
            let arity = rng.gen_range(0..=4);
            let word = rand_word_arity(&mut rng, arity, 3);
            assert_eq!(word.arity(), arity);
            assert!(word.len() >= arity.max(1) && word.len() <= arity.max(1) + 3);
        }
    }

    #[test]
    fn equal_braid_pairs_are_equal() {
        let mut rng = rng();
        for _ in 0..60 {
            let strands = rng.gen_range(2..=4);
            let (a, b) = equal_braid_pair(&mut rng, strands, 8);
            assert!(a.equals(&b).unwrap(), "rewritten pair diverged: {a} vs {b}");
        }
    }

    #[test]
    fn embeddings_delete_back_to_the_original() {
        let mut rng = rng();
        for _ in 0..60 {
            let arity = rng.gen_range(1..=3);
            let word = rand_word_arity(&mut rng, arity, 2);
            let g = rand_braid(&mut rng, word.arity(), 6);
            let visible: Vec<usize> = word
                .leaf_labels()
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(idx, _)| idx + 1)
                .collect();
            let zeros: Vec<usize> = (1..=word.len()).filter(|z| !visible.contains(z)).collect();
            let embedded = embed_on_positions(&g, &visible, word.len()).unwrap();
            assert_eq!(embedded.delete_strands(&zeros).unwrap(), g);
            // The embedded braid moves only the visible strands.
            let p = embedded.underlying_permutation();
            for &z in &zeros {
                assert_eq!(p.apply(z), z);
            }
        }
    }

    #[test]
    fn morphism_targets_are_valid() {
        use crate::groupoid::{check_morphism, wpab_hom};
        let mut rng = rng();
        for _ in 0..60 {
            let arity = rng.gen_range(1..=3);
            let x = rand_omegabr_arity(&mut rng, arity, 2, 5);
            let g = rand_braid(&mut rng, x.arity(), 5);
            let y = wpab_morphism_target(&x, &g).unwrap();
            let m = wpab_hom(&x, &y).unwrap().expect("constructed hom-set is nonempty");
            assert!(check_morphism(&m));
            assert!(m.witness.equals(&g).unwrap());
        }
    }

    #[test]
    fn pure_braids_project_to_the_identity() {
        let mut rng = rng();
        for _ in 0..40 {
            let strands = rng.gen_range(1..=5);
            let b = rand_pure_braid(&mut rng, strands, 8);
            assert!(b.underlying_permutation().is_identity());
        }
    }
}
