//! ASCII braid diagrams.
//!
//! Diagrams read bottom to top, so rows are emitted in reverse letter
//! order: the first printed row is the last crossing applied. Each
//! crossing occupies one row; strands sit on even columns. A positive
//! crossing (left strand passing over) prints as `\X/`, a negative one as
//! `\x/`. The final row labels the bottom positions. The layout is purely
//! presentational and fixed by golden tests.

use plait_core::BraidWord;

/// Renders a braid as diagram rows, top row first, labels last.
pub fn render(braid: &BraidWord) -> Vec<String> {
    let n = braid.strands();
    let width = if n == 0 { 0 } else { 2 * n - 1 };
    let mut lines = Vec::with_capacity(braid.len() + 1);
    for letter in braid.letters().iter().rev() {
        let mut row = vec![' '; width];
        for k in 1..=n {
            if k == letter.position {
                row[2 * k - 2] = '\\';
                row[2 * k - 1] = if letter.sign > 0 { 'X' } else { 'x' };
                row[2 * k] = '/';
            } else if k != letter.position + 1 {
                row[2 * k - 2] = '|';
            }
        }
        lines.push(row.into_iter().collect());
    }
    let labels: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    lines.push(labels.join(" "));
    lines
}
