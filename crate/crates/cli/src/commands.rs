//! Command implementations.
//!
//! Every command produces an output string plus a process exit code:
//! `0` for ordinary success, `1` for honest negative answers ("not
//! equal", "no morphism", a failing law), and `2` — raised by the caller
//! — when parsing or evaluation errors out. Outputs are deterministic
//! functions of the arguments, the seed, and the group, so repeated runs
//! are byte-identical.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context as _, Result};
use plait_core::laws::{run_all, run_law, LawParams, Verdict};
use plait_core::{FiniteGroup, GroupoidMorphism, TwistRecord};
use serde_json::json;

use crate::eval::{eval, EvalContext, Value};
use crate::parse::{parse, CallName, Expr};
use crate::render::render;
use crate::Format;

/// Loads a group from a builtin name (`sym3`, `cyclic:N`) or a
/// multiplication-table file (first line the order, then the table with
/// 1-based element indices).
pub fn load_group(spec: &str) -> Result<FiniteGroup> {
    if spec == "sym3" {
        return Ok(FiniteGroup::symmetric(3)?);
    }
    if let Some(n) = spec.strip_prefix("cyclic:") {
        let n: usize = n
            .parse()
            .with_context(|| format!("bad cyclic group order `{n}`"))?;
        return Ok(FiniteGroup::cyclic(n)?);
    }
    let text = std::fs::read_to_string(spec)
        .with_context(|| format!("cannot read group file `{spec}`"))?;
    let mut numbers = text.split_whitespace().map(|w| {
        w.parse::<usize>()
            .with_context(|| format!("bad integer `{w}` in group file `{spec}`"))
    });
    let order = numbers
        .next()
        .ok_or_else(|| anyhow!("group file `{spec}` is empty"))??;
    let mut table = vec![vec![0usize; order]; order];
    for row in table.iter_mut() {
        for entry in row.iter_mut() {
            let v = numbers
                .next()
                .ok_or_else(|| anyhow!("group file `{spec}` ends before the table does"))??;
            if v == 0 {
                bail!("group file `{spec}` uses 1-based element indices; found 0");
            }
            *entry = v - 1;
        }
    }
    if numbers.next().is_some() {
        bail!("group file `{spec}` has trailing numbers after the table");
    }
    Ok(FiniteGroup::from_table(table)?)
}

fn eval_str(text: &str, ctx: &EvalContext) -> Result<Value> {
    let expr = parse(text)?;
    eval(&expr, ctx)
}

fn surface_grades(internal: &[usize]) -> Vec<usize> {
    internal.iter().map(|&g| g + 1).collect()
}

fn grades_line(internal: &[usize]) -> String {
    surface_grades(internal)
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Formats one morphism as its three defining lines.
fn morphism_text(m: &GroupoidMorphism) -> String {
    format!(
        "source: {}\ntarget: {}\nwitness: {}",
        m.source, m.target, m.witness
    )
}

fn morphism_json(m: &GroupoidMorphism) -> serde_json::Value {
    json!({
        "source": m.source.to_string(),
        "target": m.target.to_string(),
        "witness": m.witness.to_string(),
    })
}

fn twist_word_text(record: &TwistRecord) -> String {
    if record.word.is_empty() {
        return "e".to_string();
    }
    record
        .word
        .iter()
        .map(|l| {
            if l.sign < 0 {
                format!("{}^-1", l.origin)
            } else {
                l.origin.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_eq(a: &str, b: &str, ctx: &EvalContext, format: Format) -> Result<(String, i32)> {
    let expr = Expr::Call(CallName::Eq, vec![parse(a)?, parse(b)?]);
    let Value::Bool(equal) = eval(&expr, ctx)? else {
        unreachable!("eq evaluates to a boolean");
    };
    let out = match format {
        Format::Text => if equal { "equal" } else { "not equal" }.to_string(),
        Format::Machine => json!({ "command": "eq", "equal": equal }).to_string(),
    };
    Ok((out, if equal { 0 } else { 1 }))
}

pub fn cmd_reduce(text: &str, ctx: &EvalContext, format: Format) -> Result<(String, i32)> {
    let Value::Braid(braid) = eval_str(text, ctx)? else {
        bail!("`reduce` needs a braid expression");
    };
    let reduced = braid.handle_reduced();
    let out = match format {
        Format::Text => reduced.to_string(),
        Format::Machine => json!({ "command": "reduce", "result": reduced.to_string() }).to_string(),
    };
    Ok((out, 0))
}

pub fn cmd_compose(
    x: &str,
    slot: &str,
    y: &str,
    ctx: &EvalContext,
    format: Format,
) -> Result<(String, i32)> {
    let slot = parse(slot)?;
    if !matches!(slot, Expr::Slot(_)) {
        bail!("the composition slot must be written like `@2`");
    }
    let expr = Expr::Call(CallName::Compose, vec![parse(x)?, slot, parse(y)?]);
    let value = eval(&expr, ctx)?;
    let out = match format {
        Format::Text => value.to_string(),
        Format::Machine => json!({ "command": "compose", "result": value.to_string() }).to_string(),
    };
    Ok((out, 0))
}

pub fn cmd_pi(text: &str, ctx: &EvalContext, format: Format) -> Result<(String, i32)> {
    let expr = Expr::Call(CallName::Pi, vec![parse(text)?]);
    let value = eval(&expr, ctx)?;
    let out = match format {
        Format::Text => value.to_string(),
        Format::Machine => json!({ "command": "pi", "result": value.to_string() }).to_string(),
    };
    Ok((out, 0))
}

pub fn cmd_tau(text: &str, ctx: &EvalContext, format: Format) -> Result<(String, i32)> {
    let expr = Expr::Call(CallName::Tau, vec![parse(text)?]);
    let value = eval(&expr, ctx)?;
    let out = match format {
        Format::Text => value.to_string(),
        Format::Machine => json!({ "command": "tau", "result": value.to_string() }).to_string(),
    };
    Ok((out, 0))
}

pub fn cmd_hom(a: &str, b: &str, ctx: &EvalContext, format: Format) -> Result<(String, i32)> {
    let expr = Expr::Call(CallName::Hom, vec![parse(a)?, parse(b)?]);
    let Value::Morphism(found) = eval(&expr, ctx)? else {
        unreachable!("hom evaluates to a morphism option");
    };
    let out = match format {
        Format::Text => match &found {
            Some(m) => morphism_text(m),
            None => "no morphism".to_string(),
        },
        Format::Machine => match &found {
            Some(m) => {
                json!({ "command": "hom", "found": true, "morphism": morphism_json(m) }).to_string()
            }
            None => json!({ "command": "hom", "found": false, "morphism": null }).to_string(),
        },
    };
    Ok((out, if found.is_some() { 0 } else { 1 }))
}

/// Parses a grade-tuple command argument; the empty string is the empty
/// tuple, which the expression grammar itself cannot spell.
fn parse_grades_arg(text: &str, ctx: &EvalContext) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    match eval_str(text, ctx)? {
        Value::Grades(v) => Ok(v),
        other => bail!("expected a grade tuple like `1,2,3`, found a {}", other.kind()),
    }
}

pub fn cmd_hurwitz(
    braid: &str,
    grades: &str,
    ctx: &EvalContext,
    format: Format,
) -> Result<(String, i32)> {
    let Value::Braid(braid) = eval_str(braid, ctx)? else {
        bail!("`hurwitz` needs a braid expression");
    };
    let grades = parse_grades_arg(grades, ctx)?;
    let group = ctx
        .group
        .ok_or_else(|| anyhow!("`hurwitz` needs --group"))?;
    let acted = plait_core::hurwitz_act(group, &braid, &grades)?;
    let out = match format {
        Format::Text => grades_line(&acted),
        Format::Machine => {
            json!({ "command": "hurwitz", "grades": surface_grades(&acted) }).to_string()
        }
    };
    Ok((out, 0))
}

pub fn cmd_twists(
    braid: &str,
    grades: &str,
    ctx: &EvalContext,
    format: Format,
) -> Result<(String, i32)> {
    let Value::Braid(braid) = eval_str(braid, ctx)? else {
        bail!("`twists` needs a braid expression");
    };
    let grades = parse_grades_arg(grades, ctx)?;
    let group = ctx
        .group
        .ok_or_else(|| anyhow!("`twists` needs --group"))?;
    let records = plait_core::twist_words(group, &braid, &grades)?;
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            for (k, r) in records.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                write!(
                    out,
                    "strand {}: word = {}; twist = {}; end = {}",
                    r.origin,
                    twist_word_text(r),
                    r.twist + 1,
                    r.final_position
                )
                .expect("writing to a string cannot fail");
            }
            out
        }
        Format::Machine => {
            let records: Vec<_> = records
                .iter()
                .map(|r| {
                    json!({
                        "origin": r.origin,
                        "end": r.final_position,
                        "word": r.word.iter().map(|l| json!({
                            "origin": l.origin,
                            "sign": l.sign,
                        })).collect::<Vec<_>>(),
                        "twist": r.twist + 1,
                    })
                })
                .collect();
            json!({ "command": "twists", "records": records }).to_string()
        }
    };
    Ok((out, 0))
}

pub fn cmd_laws(names: &[String], params: &LawParams, format: Format) -> Result<(String, i32)> {
    let cases = if names.is_empty() {
        run_all(params)
    } else {
        names
            .iter()
            .map(|name| Ok(run_law(name, params)?))
            .collect::<Result<Vec<_>>>()?
    };
    let failed = cases.iter().any(|c| !c.passed());
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            for (k, case) in cases.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                match &case.verdict {
                    Verdict::Pass { cases } => {
                        write!(out, "pass  {}  cases={cases}", case.name)
                    }
                    Verdict::Fail { counterexample } => {
                        write!(out, "FAIL  {}  counterexample: {counterexample}", case.name)
                    }
                }
                .expect("writing to a string cannot fail");
            }
            out
        }
        Format::Machine => json!({ "command": "laws", "cases": cases }).to_string(),
    };
    Ok((out, if failed { 1 } else { 0 }))
}

pub fn cmd_render(text: &str, ctx: &EvalContext, format: Format) -> Result<(String, i32)> {
    let Value::Braid(braid) = eval_str(text, ctx)? else {
        bail!("`render` needs a braid expression");
    };
    let lines = render(&braid);
    let out = match format {
        Format::Text => lines.join("\n"),
        Format::Machine => json!({ "command": "render", "lines": lines }).to_string(),
    };
    Ok((out, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx<'a>() -> EvalContext<'a> {
        EvalContext::default()
    }

    #[test]
    fn eq_distinguishes_the_defining_relation() {
        let (out, code) = cmd_eq("B3: s1 s2 s1", "B3: s2 s1 s2", &ctx(), Format::Text).unwrap();
        assert_eq!((out.as_str(), code), ("equal", 0));
        let (out, code) = cmd_eq("B3: s1", "B3: s2", &ctx(), Format::Text).unwrap();
        assert_eq!((out.as_str(), code), ("not equal", 1));
    }

    #[test]
    fn reduce_prints_canonical_braids() {
        let (out, code) = cmd_reduce("B2: s1 s1^-1", &ctx(), Format::Text).unwrap();
        assert_eq!((out.as_str(), code), ("B2: e", 0));
    }

    #[test]
    fn hom_answers_with_exit_codes() {
        let (out, code) = cmd_hom("id2 | B2: e", "id2 | B2: s1 s1", &ctx(), Format::Text).unwrap();
        assert_eq!(code, 0);
        assert!(out.starts_with("source: [1,2] | B2: e\n"));
        assert!(out.contains("witness: B2: s1 s1"));
        let (out, code) = cmd_hom("id2 | B2: e", "[2,1] | B2: e", &ctx(), Format::Text).unwrap();
        assert_eq!((out.as_str(), code), ("no morphism", 1));
    }

    #[test]
    fn hurwitz_round_trips_surface_indices() {
        let sym3 = FiniteGroup::symmetric(3).unwrap();
        let graded = EvalContext { group: Some(&sym3) };
        let (out, code) = cmd_hurwitz("B2: s1", "2,3", &graded, Format::Text).unwrap();
        assert_eq!(code, 0);
        let expected = grades_line(&[sym3.conj(1, 2), 1]);
        assert_eq!(out, expected);
        let (empty, code) = cmd_hurwitz("B0: e", "", &graded, Format::Text).unwrap();
        assert_eq!((empty.as_str(), code), ("", 0));
    }

    #[test]
    fn laws_command_reports_per_law_lines() {
        let params = LawParams {
            max_arity: 2,
            max_len: 2,
            samples: 5,
            seed: 42,
        };
        let (out, code) =
            cmd_laws(&["sigma.operad.unit".to_string()], &params, Format::Text).unwrap();
        assert_eq!(code, 0);
        assert!(out.starts_with("pass  sigma.operad.unit  cases="));
        assert!(cmd_laws(&["nonsense".to_string()], &params, Format::Text).is_err());
        let (json_out, _) =
            cmd_laws(&["sigma.operad.unit".to_string()], &params, Format::Machine).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&json_out).unwrap();
        assert_eq!(parsed["cases"][0]["verdict"]["status"], "pass");
    }

    #[test]
    fn render_emits_rows_then_labels() {
        let (out, code) = cmd_render("B3: s1 s2^-1", &ctx(), Format::Text).unwrap();
        assert_eq!(code, 0);
        assert_eq!(out, "| \\x/\n\\X/ |\n1 2 3");
    }

    #[test]
    fn load_group_builts_and_rejects() {
        assert_eq!(load_group("sym3").unwrap().order(), 6);
        assert_eq!(load_group("cyclic:4").unwrap().order(), 4);
        assert!(load_group("cyclic:zero").is_err());
        assert!(load_group("/nonexistent/group/file").is_err());
    }
}
