//! Deterministic input generators shared by the benchmark targets.
//!
//! Everything is seeded: benchmark inputs are fixed across runs so timing
//! differences come from the code, not the data.

use plait_core::words::Tree;
use plait_core::{BraidWord, OmegaBrElement, ParenWord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The fixed generator every benchmark draws from.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A braid word with exactly `len` uniformly random letters.
pub fn random_braid(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    assert!(strands >= 2, "a nontrivial braid needs two strands");
    let pairs: Vec<(usize, i8)> = (0..len)
        .map(|_| {
            (
                rng.gen_range(1..strands),
                if rng.gen_bool(0.5) { 1 } else { -1 },
            )
        })
        .collect();
    BraidWord::from_pairs(strands, &pairs).expect("letters are in range")
}

/// A pair of distinct words representing the same braid: the second is the
/// first with random free insertions sprinkled in.
pub fn equal_pair(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> (BraidWord, BraidWord) {
    let a = random_braid(rng, strands, len);
    let mut pairs: Vec<(usize, i8)> =
        a.letters().iter().map(|l| (l.position, l.sign)).collect();
    for _ in 0..len / 4 + 1 {
        let pos = rng.gen_range(1..strands);
        let sign = if rng.gen_bool(0.5) { 1i8 } else { -1 };
        let at = rng.gen_range(0..=pairs.len());
        pairs.insert(at, (pos, -sign));
        pairs.insert(at, (pos, sign));
    }
    let b = BraidWord::from_pairs(strands, &pairs).expect("letters are in range");
    (a, b)
}

/// A right-comb parenthesized word of the given arity with one unit leaf.
pub fn comb_word(arity: usize) -> ParenWord {
    let mut tree = Tree::Leaf(0);
    for label in (1..=arity).rev() {
        tree = Tree::Node(Box::new(Tree::Leaf(label)), Box::new(tree));
    }
    ParenWord::new(arity, tree).expect("comb labels are a bijection")
}

/// A braided word of the given arity over a random braid.
pub fn random_element(rng: &mut ChaCha8Rng, arity: usize, braid_len: usize) -> OmegaBrElement {
    let word = comb_word(arity);
    let braid = random_braid(rng, word.len(), braid_len);
    OmegaBrElement::new(word, braid).expect("strand count matches leaf count")
}
