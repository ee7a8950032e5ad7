//! Seeded expression generator shared by the CLI integration tests.
//!
//! Every generated expression is valid by construction — words label
//! their nonzero leaves bijectively, paired braids match strand counts —
//! so printing one and re-parsing the result must reproduce it exactly.

use plait_cli::parse::{CallName, Expr};
use plait_core::words::Tree;
use plait_core::{BraidWord, OmegaBrElement, ParenWord, Permutation, WCobObject};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_braid_on(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::empty(strands);
    }
    let len = rng.gen_range(0..=max_len);
    let pairs: Vec<(usize, i8)> = (0..len)
        .map(|_| (rng.gen_range(1..strands), if rng.gen() { 1 } else { -1 }))
        .collect();
    BraidWord::from_pairs(strands, &pairs).expect("generated positions are in range")
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

fn rand_word(rng: &mut ChaCha8Rng, max_arity: usize) -> ParenWord {
    let arity = rng.gen_range(0..=max_arity);
    let mut labels: Vec<usize> = (1..=arity).collect();
    for _ in 0..rng.gen_range(0..=2) {
        labels.push(0);
    }
    if labels.is_empty() {
        labels.push(0);
    }
    labels.shuffle(rng);
    ParenWord::new(arity, rand_tree(rng, &labels)).expect("nonzero labels are a bijection")
}

fn rand_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled images stay a bijection")
}

/// A random expression of any kind; `depth` bounds call nesting.
pub fn rand_expr(rng: &mut ChaCha8Rng, depth: usize) -> Expr {
    let kinds = if depth == 0 { 7 } else { 8 };
    match rng.gen_range(0..kinds) {
        0 => {
            let strands = rng.gen_range(0..=4);
            Expr::Braid(rand_braid_on(rng, strands, 5))
        }
        1 => Expr::Word(rand_word(rng, 4)),
        2 => {
            let n = rng.gen_range(0..=4);
            Expr::Perm(rand_perm(rng, n))
        }
        3 => {
            let word = rand_word(rng, 3);
            let braid = rand_braid_on(rng, word.len(), 4);
            Expr::Element(OmegaBrElement::new(word, braid).expect("one strand per leaf"))
        }
        4 => {
            let n = rng.gen_range(0..=4);
            let perm = rand_perm(rng, n);
            let braid = rand_braid_on(rng, n, 4);
            Expr::Wcob(WCobObject::new(perm, braid).expect("sizes match by construction"))
        }
        5 => {
            let len = rng.gen_range(1..=4);
            Expr::Grades((0..len).map(|_| rng.gen_range(1..=6)).collect())
        }
        6 => Expr::Slot(rng.gen_range(1..=3)),
        _ => {
            let name = *[
                CallName::Compose,
                CallName::Cable,
                CallName::Pi,
                CallName::Tau,
                CallName::Hom,
                CallName::Eq,
                CallName::Hurwitz,
                CallName::Twists,
            ]
            .choose(rng)
            .expect("the candidate list is nonempty");
            let args = (0..rng.gen_range(1..=3))
                .map(|_| rand_expr(rng, depth - 1))
                .collect();
            Expr::Call(name, args)
        }
    }
}
