//! Canonical text for scripts: one statement per line, minimal parentheses.

use std::fmt::{self, Display, Formatter};

use crate::ast::*;

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) | Expr::Frac(..) => 4,
        Expr::Int(_) | Expr::Var(_) => 5,
    }
}

fn operand(f: &mut Formatter<'_>, e: &Expr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl Display for Expr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let p = precedence(self);
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Frac(n, d) => write!(f, "{n}/{d}"),
            Expr::Var(id) => write!(f, "{}", id.name),
            Expr::Neg(e) => {
                write!(f, "-")?;
                operand(f, e, precedence(e) < p)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                operand(f, a, precedence(a) < p)?;
                let op = match self {
                    Expr::Add(..) => " + ",
                    Expr::Sub(..) => " - ",
                    _ => "*",
                };
                write!(f, "{op}")?;
                operand(f, b, precedence(b) <= p)
            }
            Expr::Pow(b, e) => {
                operand(f, b, precedence(b) < 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

struct List<'a, T>(&'a [T]);

impl<T: Display> Display for List<'_, T> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Display for Ident {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl Display for MapEntry {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.var, self.image)
    }
}

struct Body<'a>(&'a [MapEntry]);

impl Display for Body<'_> {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "{{ }}")
        } else {
            write!(f, "{{ {} }}", List(self.0))
        }
    }
}

impl Display for Command {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.keyword())?;
        match self {
            Command::CheckExp { map } | Command::Invariant { map } => write!(f, " {map}"),
            Command::Deg { map, elements } | Command::Rewrite { map, elements } => {
                write!(f, " {map} of {}", List(elements))
            }
            Command::DCoeff { map, element } => write!(f, " {map} of {element}"),
            Command::Iterative { map, bound } => {
                write!(f, " {map}")?;
                match bound {
                    Some(b) => write!(f, " bound {b}"),
                    None => Ok(()),
                }
            }
            Command::Conductor { sub, check } => {
                write!(f, " {sub}")?;
                match check {
                    Some(m) => write!(f, " check {m}"),
                    None => Ok(()),
                }
            }
            Command::TensorExtend { map, with } => write!(f, " {map} with {with}"),
            Command::Specialize { ring, avoid } => write!(f, " {ring} avoid {}", List(avoid)),
            Command::Push { map, ring, values } => write!(f, " {map} on {ring} at {}", Body(values)),
            Command::AkUpperBound { maps, elements } => write!(f, " {} on {}", List(maps), List(elements)),
        }
    }
}

impl Display for Stmt {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StmtKind::Field(spec) => write!(f, "field {spec}")?,
            StmtKind::Ring {
                name,
                def: RingDef::Presented { field, gens, relations },
            } => {
                write!(
                    f,
                    "ring {name} = {field}[{}]",
                    gens.iter().map(|g| g.name.as_str()).collect::<Vec<_>>().join(",")
                )?;
                if !relations.is_empty() {
                    write!(f, "/({})", List(relations))?;
                }
            }
            StmtKind::Ring {
                name,
                def: RingDef::Tensor { left, right },
            } => write!(f, "ring {name} = tensor({left}, {right})")?,
            StmtKind::ExpMap {
                name,
                ring,
                def: MapDef::Direct(entries),
            } => write!(f, "expmap {name} on {ring} = {}", Body(entries))?,
            StmtKind::ExpMap {
                name,
                ring,
                def: MapDef::Exp { derivation, bound },
            } => write!(f, "expmap {name} on {ring} = exp {} bound {bound}", Body(derivation))?,
            StmtKind::Subalgebra { name, field, var, gens } => {
                write!(f, "subalgebra {name} = {field}[{var}]<{}>", List(gens))?
            }
            StmtKind::Hom {
                name,
                source,
                target,
                images,
            } => write!(f, "hom {name} : {source} -> {target} = {}", Body(images))?,
            StmtKind::Command(c) => write!(f, "{c}")?,
        }
        write!(f, ";")
    }
}

impl Display for Script {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use crate::parser::parse;

    fn round_trip(src: &str) -> String {
        let s = parse(src).unwrap();
        let printed = s.to_string();
        assert_eq!(parse(&printed).unwrap(), s, "{printed}");
        printed
    }

    #[test]
    fn canonical_text() {
        let out = round_trip("field Q;ring A=Q[x,y]/(x*y-(1-x)^2, -x^3);");
        assert_eq!(out, "field Q;\nring A = Q[x,y]/(x*y - (1 - x)^2, -x^3);\n");
    }

    #[test]
    fn associativity_and_fractions() {
        let out = round_trip("field Q; ring A = Q[a,b,c]/(a - (b - c), a*(b*c) + (3/2)^2*a - -b, (a^2)^3);");
        assert!(out.contains("a - (b - c)"), "{out}");
        assert!(out.contains("a*(b*c)"), "{out}");
        assert!(out.contains("(3/2)^2*a - -b"), "{out}");
        assert!(out.contains("(a^2)^3"), "{out}");
    }
}
