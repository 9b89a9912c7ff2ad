//! The input language: a ring declaration, ideal bindings and commands.
//!
//! ```text
//! ring R = QQ[X,Y];
//! ideal I = (X^4, X^3*Y, X*Y^3, Y^4);
//! rr_closure I [kmax=8];
//! ```

mod ast;
mod exec;
mod lexer;
mod parser;

use std::collections::HashSet;
use std::fmt;

pub use ast::{Command, Expr, FieldSpec, Program, RingDecl, Stmt};
pub use exec::{groebner_listing, run_program, status_text, verdict_text, CommandOutput, ExecError, Session};
pub use parser::{parse_expr, StmtSpan};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    Syntax,
    Arity,
    UnknownIdentifier,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParseErrorKind::Lexical => "lexical error",
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Arity => "arity error",
            ParseErrorKind::UnknownIdentifier => "unknown identifier",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {kind}: {message}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl ParseError {
    pub fn new(kind: ParseErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        ParseError { kind, pos, message: message.into() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arg {
    Ideal,
    Elem,
    Int,
}

use Arg::{Elem, Ideal, Int};

/// Command names with their argument kinds.
pub const COMMANDS: &[(&str, &[Arg])] = &[
    ("rr_closure", &[Ideal]),
    ("rr_power", &[Ideal, Int]),
    ("rr_via_reduction", &[Ideal, Ideal, Int]),
    ("rr_probe", &[Elem, Ideal]),
    ("rr_power_probe", &[Elem, Ideal, Int]),
    ("rr_reduction_probe", &[Elem, Ideal, Ideal, Int]),
    ("is_rr_closed", &[Ideal]),
    ("rr_defect", &[Ideal, Int]),
    ("depth_zero", &[Ideal]),
    ("gr_nzd", &[Elem, Ideal, Int]),
    ("superficial", &[Elem, Ideal]),
    ("is_reduction", &[Ideal, Ideal]),
    ("reduction_number", &[Ideal, Ideal]),
    ("rr_reduction_number", &[Ideal, Ideal]),
    ("s_invariant", &[Ideal]),
    ("reduction_report", &[Ideal, Ideal]),
    ("principal_conditions", &[Ideal, Elem, Int]),
    ("principal_comparison", &[Ideal, Elem]),
    ("member", &[Elem, Ideal]),
    ("contains", &[Ideal, Ideal]),
    ("equal", &[Ideal, Ideal]),
    ("colon", &[Ideal, Ideal]),
    ("intersect", &[Ideal, Ideal]),
    ("sum", &[Ideal, Ideal]),
    ("product", &[Ideal, Ideal]),
    ("power", &[Ideal, Int]),
    ("mingens", &[Ideal]),
    ("integral_closure", &[Ideal]),
    ("is_integral", &[Elem, Ideal]),
    ("ass_primes", &[Ideal]),
    ("socle", &[Ideal]),
    ("lt", &[Ideal]),
    ("gb", &[Ideal]),
    ("assert_member", &[Elem, Ideal]),
    ("assert_not_member", &[Elem, Ideal]),
    ("assert_contains", &[Ideal, Ideal]),
    ("assert_equal", &[Ideal, Ideal]),
];

pub const OPTIONS: &[&str] = &["kmax", "window", "nmax"];

fn signature(name: &str) -> Option<&'static [Arg]> {
    COMMANDS.iter().find(|(n, _)| *n == name).map(|(_, a)| *a)
}

fn expr_vars(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Var(v) => out.push(v.clone()),
        Expr::Neg(a) | Expr::Pow(a, _) => expr_vars(a, out),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            expr_vars(a, out);
            expr_vars(b, out);
        }
        Expr::Int(_) | Expr::Pair(..) => {}
    }
}

/// Resolves identifiers and checks command arities.
pub fn check(program: &Program, spans: &[StmtSpan]) -> Result<(), ParseError> {
    let mut vars: HashSet<String> = HashSet::new();
    let mut ideals: HashSet<String> = HashSet::new();
    let mut ring_seen = false;
    let unknown = |pos: Pos, msg: String| Err(ParseError::new(ParseErrorKind::UnknownIdentifier, pos, msg));
    let check_expr = |e: &Expr, pos: Pos, vars: &HashSet<String>| -> Result<(), ParseError> {
        let mut names = Vec::new();
        expr_vars(e, &mut names);
        match names.into_iter().find(|n| !vars.contains(n)) {
            Some(n) => unknown(pos, format!("{n} is not a ring variable")),
            None => Ok(()),
        }
    };
    for (stmt, span) in program.stmts.iter().zip(spans) {
        if !ring_seen && !matches!(stmt, Stmt::Ring(_)) {
            return Err(ParseError::new(ParseErrorKind::Syntax, span.pos, "the program must start with a ring declaration"));
        }
        match stmt {
            Stmt::Ring(r) => {
                if ring_seen {
                    return Err(ParseError::new(ParseErrorKind::Syntax, span.pos, "only one ring declaration is allowed"));
                }
                ring_seen = true;
                match r {
                    RingDecl::Poly { vars: vs, quotient, .. } => {
                        vars.extend(vs.iter().cloned());
                        for q in quotient {
                            check_expr(q, span.pos, &vars)?;
                        }
                    }
                    RingDecl::Numerical { .. } => {
                        vars.insert("t".into());
                    }
                    RingDecl::Affine { .. } => {}
                }
            }
            Stmt::Regular(e) => check_expr(e, span.pos, &vars)?,
            Stmt::Ideal { name, gens } => {
                for g in gens {
                    check_expr(g, span.pos, &vars)?;
                }
                if !ideals.insert(name.clone()) {
                    return Err(ParseError::new(ParseErrorKind::Syntax, span.pos, format!("ideal {name} is already bound")));
                }
            }
            Stmt::Command(c) => {
                let sig = match signature(&c.name) {
                    Some(s) => s,
                    None => return unknown(span.pos, format!("unknown command {}", c.name)),
                };
                if sig.len() != c.args.len() {
                    return Err(ParseError::new(
                        ParseErrorKind::Arity,
                        span.pos,
                        format!("{} takes {} arguments, got {}", c.name, sig.len(), c.args.len()),
                    ));
                }
                for ((kind, arg), pos) in sig.iter().zip(&c.args).zip(&span.args) {
                    match (kind, arg) {
                        (Arg::Ideal, Expr::Var(n)) if ideals.contains(n) => {}
                        (Arg::Ideal, Expr::Var(n)) => return unknown(*pos, format!("{n} is not a declared ideal")),
                        (Arg::Ideal, _) => return Err(ParseError::new(ParseErrorKind::Syntax, *pos, "expected an ideal name")),
                        (Arg::Int, Expr::Int(_)) => {}
                        (Arg::Int, _) => return Err(ParseError::new(ParseErrorKind::Syntax, *pos, "expected an integer")),
                        (Arg::Elem, e) => check_expr(e, *pos, &vars)?,
                    }
                }
                if let Some((k, _)) = c.options.iter().find(|(k, _)| !OPTIONS.contains(&k.as_str())) {
                    return unknown(span.pos, format!("unknown option {k}"));
                }
            }
        }
    }
    Ok(())
}

/// Parses and checks a program.
pub fn parse_program(src: &str) -> Result<Program, ParseError> {
    let (program, spans) = parser::parse_syntax(src)?;
    check(&program, &spans)?;
    Ok(program)
}
