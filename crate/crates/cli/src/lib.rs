//! Command-line front end for the operad workbench: a small expression
//! language over braids, parenthesized words, permutations, and braided
//! elements, with commands to compare, reduce, compose, project,
//! evaluate graded data, run the law registry, and draw ASCII diagrams.

pub mod commands;
pub mod eval;
pub mod parse;
pub mod render;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use plait_core::laws::{LawParams, DEFAULT_SEED};
use plait_core::FiniteGroup;

use eval::EvalContext;

/// Output style shared by every command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-oriented plain text in the input grammar.
    Text,
    /// One JSON object on a single line.
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "plait",
    about = "A workbench for braids, parenthesized words, and their operads",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for randomized law tiers.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random samples per law.
    #[arg(long, global = true, default_value_t = LawParams::default().samples)]
    pub samples: usize,
    /// Largest arity for randomized law instances.
    #[arg(long, global = true, default_value_t = LawParams::default().max_arity)]
    pub max_arity: usize,
    /// Largest braid length for randomized law instances.
    #[arg(long, global = true, default_value_t = LawParams::default().max_len)]
    pub max_len: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Group for graded commands: `sym3`, `cyclic:N`, or a table file
    /// (first line the order, then the 1-based multiplication table).
    #[arg(long, global = true)]
    pub group: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide equality of two expressions of the same kind.
    Eq { a: String, b: String },
    /// Handle-reduce a braid expression.
    Reduce { expr: String },
    /// Operadic composition `x ∘_i y`; write the slot as `@i`.
    Compose { x: String, slot: String, y: String },
    /// Underlying weak colored-braid object of a braided word.
    Pi { expr: String },
    /// Slot-to-position permutation of a parenthesized word.
    Tau { expr: String },
    /// Find the morphism between two objects, if one exists.
    Hom { a: String, b: String },
    /// Act a braid on a grade tuple (1-based element indices).
    Hurwitz { braid: String, grades: String },
    /// Per-strand twist words a braid inflicts on graded strands.
    Twists { braid: String, grades: String },
    /// Run registered laws; no names means the whole registry.
    Laws { names: Vec<String> },
    /// ASCII diagram of a braid expression.
    Render { expr: String },
}

/// Executes a parsed invocation, returning the output and exit code.
pub fn run(cli: &Cli) -> Result<(String, i32)> {
    let group: Option<FiniteGroup> = cli
        .group
        .as_deref()
        .map(commands::load_group)
        .transpose()?;
    let ctx = EvalContext {
        group: group.as_ref(),
    };
    let format = cli.format;
    match &cli.command {
        Command::Eq { a, b } => commands::cmd_eq(a, b, &ctx, format),
        Command::Reduce { expr } => commands::cmd_reduce(expr, &ctx, format),
        Command::Compose { x, slot, y } => commands::cmd_compose(x, slot, y, &ctx, format),
        Command::Pi { expr } => commands::cmd_pi(expr, &ctx, format),
        Command::Tau { expr } => commands::cmd_tau(expr, &ctx, format),
        Command::Hom { a, b } => commands::cmd_hom(a, b, &ctx, format),
        Command::Hurwitz { braid, grades } => commands::cmd_hurwitz(braid, grades, &ctx, format),
        Command::Twists { braid, grades } => commands::cmd_twists(braid, grades, &ctx, format),
        Command::Laws { names } => {
            let params = LawParams {
                max_arity: cli.max_arity,
                max_len: cli.max_len,
                samples: cli.samples,
                seed: cli.seed,
            };
            commands::cmd_laws(names, &params, format)
        }
        Command::Render { expr } => commands::cmd_render(expr, &ctx, format),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses_global_flags_anywhere() {
        let cli = Cli::try_parse_from([
            "plait", "laws", "sigma.operad.unit", "--seed", "7", "--samples", "10",
        ])
        .unwrap();
        assert_eq!(cli.seed, 7);
        assert_eq!(cli.samples, 10);
        assert_eq!(cli.max_arity, LawParams::default().max_arity);
        let cli = Cli::try_parse_from(["plait", "--format", "machine", "eq", "a", "b"]).unwrap();
        assert_eq!(cli.format, Format::Machine);
    }

    #[test]
    fn run_wires_groups_through() {
        let cli = Cli::try_parse_from([
            "plait", "hurwitz", "B2: s1", "1,2", "--group", "cyclic:3",
        ])
        .unwrap();
        let (out, code) = run(&cli).unwrap();
        // Cyclic groups are abelian, so conjugation only swaps the grades.
        assert_eq!((out.as_str(), code), ("2,1", 0));
        let missing = Cli::try_parse_from(["plait", "hurwitz", "B2: s1", "1,2"]).unwrap();
        assert!(run(&missing).is_err());
    }
}
