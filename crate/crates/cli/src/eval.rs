//! Evaluation of parsed expressions into values.
//!
//! Literals evaluate to themselves; calls dispatch on the kinds of their
//! arguments. `compose` is the generic operadic composition and works on
//! any two values of the same composable kind, while `cable` insists on
//! braids. Grade tuples are written with 1-based element indices on the
//! surface and are converted to the core's 0-based indices here.

use std::fmt;

use anyhow::{anyhow, bail, Result};
use plait_core::groupoid::GroupoidObject;
use plait_core::{
    hom, hurwitz_act, pi, twist_words, wcob_compose_objects, wpab_hom, BraidWord, FiniteGroup,
    GroupoidMorphism, OmegaBrElement, ParenWord, Permutation, TwistRecord, WCobObject,
};

use crate::parse::{CallName, Expr};

/// The result of evaluating an expression.
#[derive(Debug, Clone)]
pub enum Value {
    Braid(BraidWord),
    Word(ParenWord),
    Perm(Permutation),
    Element(OmegaBrElement),
    Wcob(WCobObject),
    /// Grade tuples, 0-based internally.
    Grades(Vec<usize>),
    Bool(bool),
    Morphism(Option<GroupoidMorphism>),
    Twists(Vec<TwistRecord>),
}

impl Value {
    /// A short kind name for error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Braid(_) => "braid",
            Value::Word(_) => "word",
            Value::Perm(_) => "permutation",
            Value::Element(_) => "element",
            Value::Wcob(_) => "colored-braid object",
            Value::Grades(_) => "grade tuple",
            Value::Bool(_) => "boolean",
            Value::Morphism(_) => "morphism",
            Value::Twists(_) => "twist table",
        }
    }
}

impl fmt::Display for Value {
    /// Prints plain values in the input grammar; booleans, morphisms, and
    /// twist tables have command-specific presentations and only get a
    /// summary here.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Braid(b) => b.fmt(f),
            Value::Word(w) => w.fmt(f),
            Value::Perm(p) => p.fmt(f),
            Value::Element(e) => e.fmt(f),
            Value::Wcob(x) => x.fmt(f),
            Value::Grades(v) => {
                for (k, g) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", g + 1)?;
                }
                Ok(())
            }
            Value::Bool(b) => write!(f, "{b}"),
            Value::Morphism(Some(m)) => write!(f, "morphism with witness {}", m.witness),
            Value::Morphism(None) => write!(f, "no morphism"),
            Value::Twists(records) => write!(f, "twist table for {} strands", records.len()),
        }
    }
}

/// Ambient data an evaluation may draw on.
#[derive(Default)]
pub struct EvalContext<'a> {
    pub group: Option<&'a FiniteGroup>,
}

impl<'a> EvalContext<'a> {
    fn group(&self) -> Result<&'a FiniteGroup> {
        self.group.ok_or_else(|| {
            anyhow!("this operation needs a group; pass --group sym3, --group cyclic:N, or --group FILE")
        })
    }
}

fn expect_args<const N: usize>(name: CallName, args: &[Expr]) -> Result<[&Expr; N]> {
    let got: Vec<&Expr> = args.iter().collect();
    got.try_into()
        .map_err(|_| anyhow!("`{name}` takes {N} arguments, found {}", args.len()))
}

fn expect_slot(name: CallName, arg: &Expr) -> Result<usize> {
    match arg {
        Expr::Slot(i) => Ok(*i),
        other => bail!("`{name}` needs a slot marker like `@1`, found `{other}`"),
    }
}

/// Converts surface 1-based grade indices to internal 0-based ones.
fn lower_grades(surface: &[usize]) -> Result<Vec<usize>> {
    surface
        .iter()
        .map(|&g| {
            if g == 0 {
                bail!("grade indices are 1-based; 0 is not an element")
            }
            Ok(g - 1)
        })
        .collect()
}

fn expect_graded(name: CallName, value: Value) -> Result<Vec<usize>> {
    match value {
        Value::Grades(v) => Ok(v),
        other => bail!("`{name}` needs a grade tuple, found a {}", other.kind()),
    }
}

fn expect_braid(name: CallName, value: Value) -> Result<BraidWord> {
    match value {
        Value::Braid(b) => Ok(b),
        other => bail!("`{name}` needs a braid, found a {}", other.kind()),
    }
}

/// Evaluates an expression under the given context.
pub fn eval(expr: &Expr, ctx: &EvalContext) -> Result<Value> {
    match expr {
        Expr::Braid(b) => Ok(Value::Braid(b.clone())),
        Expr::Word(w) => Ok(Value::Word(w.clone())),
        Expr::Perm(p) => Ok(Value::Perm(p.clone())),
        Expr::Element(e) => Ok(Value::Element(e.clone())),
        Expr::Wcob(x) => Ok(Value::Wcob(x.clone())),
        Expr::Grades(v) => Ok(Value::Grades(lower_grades(v)?)),
        Expr::Slot(i) => bail!("slot marker `@{i}` is only meaningful inside compose or cable"),
        Expr::Call(name, args) => eval_call(*name, args, ctx),
    }
}

fn eval_call(name: CallName, args: &[Expr], ctx: &EvalContext) -> Result<Value> {
    match name {
        CallName::Compose | CallName::Cable => {
            let [x, slot, y] = expect_args::<3>(name, args)?;
            let i = expect_slot(name, slot)?;
            let x = eval(x, ctx)?;
            let y = eval(y, ctx)?;
            match (name, x, y) {
                (_, Value::Braid(a), Value::Braid(b)) => Ok(Value::Braid(a.cable(i, &b)?)),
                (CallName::Cable, x, y) => {
                    bail!("`cable` needs two braids, found {} and {}", x.kind(), y.kind())
                }
                (_, Value::Perm(u), Value::Perm(v)) => Ok(Value::Perm(u.block_compose(i, &v)?)),
                (_, Value::Word(p), Value::Word(q)) => Ok(Value::Word(p.graft(i, &q)?)),
                (_, Value::Element(x), Value::Element(y)) => {
                    Ok(Value::Element(x.compose(i, &y)?))
                }
                (_, Value::Wcob(x), Value::Wcob(y)) => {
                    Ok(Value::Wcob(wcob_compose_objects(&x, i, &y)?))
                }
                (_, x, y) => bail!(
                    "`compose` needs two values of the same kind, found {} and {}",
                    x.kind(),
                    y.kind()
                ),
            }
        }
        CallName::Pi => {
            let [x] = expect_args::<1>(name, args)?;
            match eval(x, ctx)? {
                Value::Element(e) => Ok(Value::Wcob(pi(&e)?)),
                other => bail!("`pi` needs an element, found a {}", other.kind()),
            }
        }
        CallName::Tau => {
            let [x] = expect_args::<1>(name, args)?;
            match eval(x, ctx)? {
                Value::Word(w) => Ok(Value::Perm(w.tau())),
                other => bail!("`tau` needs a word, found a {}", other.kind()),
            }
        }
        CallName::Eq => {
            let [x, y] = expect_args::<2>(name, args)?;
            let x = eval(x, ctx)?;
            let y = eval(y, ctx)?;
            let equal = match (&x, &y) {
                (Value::Braid(a), Value::Braid(b)) => a.equals(b)?,
                (Value::Word(p), Value::Word(q)) => p == q,
                (Value::Perm(u), Value::Perm(v)) => u == v,
                (Value::Element(a), Value::Element(b)) => a.equals(b)?,
                (Value::Wcob(a), Value::Wcob(b)) => a.equal(b)?,
                (Value::Grades(a), Value::Grades(b)) => a == b,
                _ => bail!(
                    "`eq` needs two values of the same kind, found {} and {}",
                    x.kind(),
                    y.kind()
                ),
            };
            Ok(Value::Bool(equal))
        }
        CallName::Hom => {
            let [x, y] = expect_args::<2>(name, args)?;
            let x = eval(x, ctx)?;
            let y = eval(y, ctx)?;
            match (x, y) {
                (Value::Wcob(a), Value::Wcob(b)) => Ok(Value::Morphism(hom(
                    &GroupoidObject::Wcob(a),
                    &GroupoidObject::Wcob(b),
                )?)),
                (Value::Element(a), Value::Element(b)) => {
                    Ok(Value::Morphism(wpab_hom(&a, &b)?))
                }
                (x, y) => bail!(
                    "`hom` needs two colored-braid objects or two elements, found {} and {}",
                    x.kind(),
                    y.kind()
                ),
            }
        }
        CallName::Hurwitz => {
            let [braid, grades] = expect_args::<2>(name, args)?;
            let braid = expect_braid(name, eval(braid, ctx)?)?;
            let grades = expect_graded(name, eval(grades, ctx)?)?;
            let group = ctx.group()?;
            Ok(Value::Grades(hurwitz_act(group, &braid, &grades)?))
        }
        CallName::Twists => {
            let [braid, grades] = expect_args::<2>(name, args)?;
            let braid = expect_braid(name, eval(braid, ctx)?)?;
            let grades = expect_graded(name, eval(grades, ctx)?)?;
            let group = ctx.group()?;
            Ok(Value::Twists(twist_words(group, &braid, &grades)?))
        }
    }
}
