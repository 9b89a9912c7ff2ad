use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Var(String),
    Pair(u64, u64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(_) => 2,
            Expr::Mul(..) => 3,
            Expr::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Pair(a, b) => write!(f, "({a},{b})"),
            Expr::Neg(e) => {
                write!(f, "-")?;
                e.write_child(f, 4)
            }
            Expr::Add(a, b) => {
                a.write_child(f, 1)?;
                write!(f, " + ")?;
                b.write_child(f, 2)
            }
            Expr::Sub(a, b) => {
                a.write_child(f, 1)?;
                write!(f, " - ")?;
                b.write_child(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_child(f, 3)?;
                write!(f, "*")?;
                b.write_child(f, 4)
            }
            Expr::Pow(a, e) => {
                a.write_child(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDecl {
    Poly { name: String, field: FieldSpec, vars: Vec<String>, quotient: Vec<Expr> },
    Numerical { name: String, gens: Vec<u64> },
    Affine { name: String, gens: Vec<(u64, u64)> },
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for RingDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDecl::Poly { name, field, vars, quotient } => {
                write!(f, "ring {name} = {field}[{}]", vars.join(","))?;
                if !quotient.is_empty() {
                    write!(f, " / ({})", join(quotient))?;
                }
                Ok(())
            }
            RingDecl::Numerical { name, gens } => write!(f, "semiring {name} = <{}>", join(gens)),
            RingDecl::Affine { name, gens } => {
                let g: Vec<String> = gens.iter().map(|(a, b)| format!("({a},{b})")).collect();
                write!(f, "affine {name} = <{}>", g.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub name: String,
    pub args: Vec<Expr>,
    pub options: Vec<(String, u64)>,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if !self.args.is_empty() {
            write!(f, " {}", join(&self.args))?;
        }
        if !self.options.is_empty() {
            let o: Vec<String> = self.options.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", o.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Ring(RingDecl),
    Regular(Expr),
    Ideal { name: String, gens: Vec<Expr> },
    Command(Command),
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Ring(r) => write!(f, "{r};"),
            Stmt::Regular(e) => write!(f, "regular {e};"),
            Stmt::Ideal { name, gens } => write!(f, "ideal {name} = ({});", join(gens)),
            Stmt::Command(c) => write!(f, "{c};"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub stmts: Vec<Stmt>,
}

impl Program {
    pub fn ring(&self) -> Option<&RingDecl> {
        self.stmts.iter().find_map(|s| match s {
            Stmt::Ring(r) => Some(r),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = &Command> {
        self.stmts.iter().filter_map(|s| match s {
            Stmt::Command(c) => Some(c),
            _ => None,
        })
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
