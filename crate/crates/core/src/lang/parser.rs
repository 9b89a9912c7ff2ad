use super::ast::{Command, Expr, FieldSpec, Program, RingDecl, Stmt};
use super::lexer::{lex, Tok, Token};
use super::{ParseError, ParseErrorKind, Pos};

struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: Pos,
    arg_pos: Vec<Pos>,
}

/// Source positions of a statement and of its command arguments.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StmtSpan {
    pub pos: Pos,
    pub args: Vec<Pos>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::new(ParseErrorKind::Syntax, self.pos(), msg))
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => self.err("expected an identifier"),
        }
    }

    fn int(&mut self) -> PResult<u64> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = *v;
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn program(&mut self) -> PResult<(Program, Vec<StmtSpan>)> {
        let mut stmts = Vec::new();
        let mut spans = Vec::new();
        while self.peek().is_some() {
            let pos = self.pos();
            self.arg_pos.clear();
            stmts.push(self.stmt()?);
            spans.push(StmtSpan { pos, args: std::mem::take(&mut self.arg_pos) });
            self.expect_sym(';')?;
        }
        Ok((Program { stmts }, spans))
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let head = self.ident()?;
        match head.as_str() {
            "ring" => self.poly_ring().map(Stmt::Ring),
            "semiring" => {
                let name = self.binding()?;
                self.expect_sym('<')?;
                let mut gens = vec![self.int()?];
                while self.eat_sym(',') {
                    gens.push(self.int()?);
                }
                self.expect_sym('>')?;
                Ok(Stmt::Ring(RingDecl::Numerical { name, gens }))
            }
            "affine" => {
                let name = self.binding()?;
                self.expect_sym('<')?;
                let mut gens = vec![self.pair()?];
                while self.eat_sym(',') {
                    gens.push(self.pair()?);
                }
                self.expect_sym('>')?;
                Ok(Stmt::Ring(RingDecl::Affine { name, gens }))
            }
            "regular" => self.expr().map(Stmt::Regular),
            "ideal" => {
                let name = self.binding()?;
                self.expect_sym('(')?;
                let gens = self.expr_list(')')?;
                self.expect_sym(')')?;
                Ok(Stmt::Ideal { name, gens })
            }
            _ => self.command(head).map(Stmt::Command),
        }
    }

    fn binding(&mut self) -> PResult<String> {
        let name = self.ident()?;
        self.expect_sym('=')?;
        Ok(name)
    }

    fn pair(&mut self) -> PResult<(u64, u64)> {
        self.expect_sym('(')?;
        let a = self.int()?;
        self.expect_sym(',')?;
        let b = self.int()?;
        self.expect_sym(')')?;
        Ok((a, b))
    }

    fn poly_ring(&mut self) -> PResult<RingDecl> {
        let name = self.binding()?;
        let pos = self.pos();
        let f = self.ident()?;
        let field = match f.as_str() {
            "QQ" => FieldSpec::Rationals,
            "F" => FieldSpec::Prime(self.int()?),
            other => match other.strip_prefix('F').and_then(|p| p.parse::<u64>().ok()) {
                Some(p) => FieldSpec::Prime(p),
                None => return Err(ParseError::new(ParseErrorKind::Syntax, pos, format!("unknown field {other}"))),
            },
        };
        self.expect_sym('[')?;
        let mut vars = vec![self.ident()?];
        while self.eat_sym(',') {
            vars.push(self.ident()?);
        }
        self.expect_sym(']')?;
        let mut quotient = Vec::new();
        if self.eat_sym('/') {
            self.expect_sym('(')?;
            quotient = self.expr_list(')')?;
            self.expect_sym(')')?;
        }
        Ok(RingDecl::Poly { name, field, vars, quotient })
    }

    fn command(&mut self, name: String) -> PResult<Command> {
        let mut args = Vec::new();
        if !self.is_sym(';') && !self.is_sym('[') {
            self.arg_pos.push(self.pos());
            args.push(self.expr()?);
            while self.eat_sym(',') {
                self.arg_pos.push(self.pos());
                args.push(self.expr()?);
            }
        }
        let mut options = Vec::new();
        if self.eat_sym('[') {
            loop {
                let k = self.ident()?;
                self.expect_sym('=')?;
                options.push((k, self.int()?));
                if !self.eat_sym(',') {
                    break;
                }
            }
            self.expect_sym(']')?;
        }
        Ok(Command { name, args, options })
    }

    fn expr_list(&mut self, close: char) -> PResult<Vec<Expr>> {
        let mut out = Vec::new();
        if self.is_sym(close) {
            return Ok(out);
        }
        out.push(self.expr()?);
        while self.eat_sym(',') {
            out.push(self.expr()?);
        }
        Ok(out)
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        while self.eat_sym('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.eat_sym('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_sym('^') {
            return Ok(Expr::Pow(Box::new(base), self.int()?));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek() {
            Some(Tok::Int(_)) => self.int().map(Expr::Int),
            Some(Tok::Ident(_)) => self.ident().map(Expr::Var),
            Some(Tok::Sym('(')) => {
                self.at += 1;
                if let (Some(Tok::Int(a)), Some(Tok::Sym(',')), Some(Tok::Int(b)), Some(Tok::Sym(')'))) = (
                    self.toks.get(self.at).map(|t| &t.tok),
                    self.toks.get(self.at + 1).map(|t| &t.tok),
                    self.toks.get(self.at + 2).map(|t| &t.tok),
                    self.toks.get(self.at + 3).map(|t| &t.tok),
                ) {
                    let pair = Expr::Pair(*a, *b);
                    self.at += 4;
                    return Ok(pair);
                }
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => self.err("expected an expression"),
        }
    }
}

fn parser(src: &str) -> Result<Parser, ParseError> {
    let toks = lex(src)?;
    let end = match toks.last() {
        Some(t) => Pos { line: t.pos.line, col: t.pos.col + 1 },
        None => Pos { line: 1, col: 1 },
    };
    Ok(Parser { toks, at: 0, end, arg_pos: Vec::new() })
}

/// Parses a single expression.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = parser(src)?;
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("unexpected input after the expression");
    }
    Ok(e)
}

/// Parses the surface syntax; identifiers are resolved later by [`super::check`].
pub fn parse_syntax(src: &str) -> Result<(Program, Vec<StmtSpan>), ParseError> {
    parser(src)?.program()
}
