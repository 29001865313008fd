//! Lexer and recursive-descent parser for scripts, with the name checks
//! that can be done without building any algebra: declare before use, no
//! shadowing, reserved variables only where `t` is meaningful.

use std::collections::HashMap;
use std::fmt;

use akinv_core::algebra::RESERVED_NAMES;
use akinv_core::field::is_prime;
use akinv_core::tensor_names;
use num_bigint::BigInt;

use crate::ast::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
    pub expected: Vec<String>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)?;
        match self.expected.as_slice() {
            [] => Ok(()),
            [one] => write!(f, " (expected {one})"),
            many => write!(f, " (expected one of {})", many.join(", ")),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

const SYMBOLS: [&str; 18] = [
    "->", ";", "=", "[", "]", "(", ")", "{", "}", "<", ">", ",", ":", "^", "*", "+", "-", "/",
];

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, n: usize| {
        for _ in 0..n {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, 1);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col, 1);
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            col += i - start;
            out.push((Tok::Int(text.parse().expect("digits")), pos));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let mut word: String = chars[start..i].iter().collect();
            // hyphenated command names
            loop {
                let mut j = i;
                if j < chars.len() && chars[j] == '-' {
                    j += 1;
                    let s = j;
                    while j < chars.len() && chars[j].is_alphanumeric() {
                        j += 1;
                    }
                    let joined = format!("{word}-{}", chars[s..j].iter().collect::<String>());
                    if j > s
                        && COMMANDS.iter().any(|c| {
                            c.starts_with(&joined) && c[joined.len()..].chars().next().is_none_or(|ch| ch == '-')
                        })
                    {
                        word = joined;
                        i = j;
                        continue;
                    }
                }
                break;
            }
            col += i - start;
            out.push((Tok::Ident(word), pos));
        } else {
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
                return Err(ParseError {
                    pos,
                    message: format!("unexpected character `{c}`"),
                    expected: Vec::new(),
                });
            };
            advance(&mut i, &mut line, &mut col, sym.len());
            out.push((Tok::Sym(sym), pos));
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

#[derive(Clone, Debug)]
struct RingInfo {
    gens: Vec<String>,
    /// For tensor rings: number of generators coming from the left factor.
    left: Option<usize>,
}

#[derive(Default)]
struct Scope {
    field: Option<FieldSpec>,
    rings: HashMap<String, RingInfo>,
    maps: HashMap<String, String>,
    subalgebras: HashMap<String, String>,
    homs: HashMap<String, ()>,
}

impl Scope {
    fn declared(&self, name: &str) -> bool {
        self.rings.contains_key(name)
            || self.maps.contains_key(name)
            || self.subalgebras.contains_key(name)
            || self.homs.contains_key(name)
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    idx: usize,
    scope: Scope,
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
        expected: Vec::new(),
    })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.idx].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.idx].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.idx].clone();
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: format!("unexpected {}", self.peek()),
            expected: expected.iter().map(|e| format!("`{e}`")).collect(),
        })
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == w)
    }

    fn eat_sym(&mut self, s: &str) -> bool {
        let hit = self.is_sym(s);
        if hit {
            self.bump();
        }
        hit
    }

    fn expect_sym(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            self.unexpected(&[s])
        }
    }

    fn expect_word(&mut self, w: &str) -> Result<(), ParseError> {
        if self.is_word(w) {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&[w])
        }
    }

    fn ident(&mut self) -> Result<Ident, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                let pos = self.pos();
                self.bump();
                Ok(Ident { name, pos })
            }
            _ => self.unexpected(&["identifier"]),
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.unexpected(&["integer"]),
        }
    }

    fn small_int(&mut self) -> Result<u32, ParseError> {
        let pos = self.pos();
        let n = self.int()?;
        u32::try_from(n).or_else(|_| err(pos, "integer too large"))
    }

    fn field_spec(&mut self) -> Result<FieldSpec, ParseError> {
        if self.is_word("Q") {
            self.bump();
            return Ok(FieldSpec::Q);
        }
        if self.is_word("Fp") {
            self.bump();
            self.expect_sym("(")?;
            let ppos = self.pos();
            let p = self.int()?;
            self.expect_sym(")")?;
            let p = u64::try_from(p).ok().filter(|&p| is_prime(p));
            return match p {
                Some(p) => Ok(FieldSpec::Fp(p)),
                None => err(ppos, "characteristic must be a prime"),
            };
        }
        self.unexpected(&["Q", "Fp"])
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self, vars: &[String], allow_t: bool) -> Result<Expr, ParseError> {
        let mut lhs = self.term(vars, allow_t)?;
        loop {
            if self.eat_sym("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term(vars, allow_t)?));
            } else if self.eat_sym("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term(vars, allow_t)?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self, vars: &[String], allow_t: bool) -> Result<Expr, ParseError> {
        let mut lhs = self.unary(vars, allow_t)?;
        while self.eat_sym("*") {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary(vars, allow_t)?));
        }
        Ok(lhs)
    }

    fn unary(&mut self, vars: &[String], allow_t: bool) -> Result<Expr, ParseError> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.unary(vars, allow_t)?)));
        }
        let base = self.atom(vars, allow_t)?;
        if self.eat_sym("^") {
            let e = self.small_int()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self, vars: &[String], allow_t: bool) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if self.eat_sym("/") {
                    let dpos = self.pos();
                    let d = self.int()?;
                    if d == BigInt::from(0) {
                        return err(dpos, "zero denominator");
                    }
                    return Ok(Expr::Frac(n, d));
                }
                Ok(Expr::Int(n))
            }
            Tok::Ident(_) => {
                let id = self.ident()?;
                if vars.contains(&id.name) || (allow_t && id.name == "t") {
                    Ok(Expr::Var(id))
                } else if RESERVED_NAMES.contains(&id.name.as_str()) {
                    err(id.pos, format!("reserved variable `{}` is not allowed here", id.name))
                } else {
                    err(id.pos, format!("undeclared identifier `{}`", id.name))
                }
            }
            Tok::Sym("(") => {
                self.bump();
                let e = self.expr(vars, allow_t)?;
                self.expect_sym(")")?;
                Ok(e)
            }
            _ => self.unexpected(&["number", "variable", "("]),
        }
    }

    fn expr_list(&mut self, vars: &[String], allow_t: bool, close: &str) -> Result<Vec<Expr>, ParseError> {
        let mut out = Vec::new();
        if self.is_sym(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr(vars, allow_t)?);
            if !self.eat_sym(",") {
                return Ok(out);
            }
        }
    }

    /// Comma-separated expressions up to the end of the statement.
    fn element_list(&mut self, vars: &[String]) -> Result<Vec<Expr>, ParseError> {
        let mut out = vec![self.expr(vars, false)?];
        while self.eat_sym(",") {
            out.push(self.expr(vars, false)?);
        }
        Ok(out)
    }

    /// `{ v -> expr, ... }`; every key must be in `keys`, at most once.
    fn map_body(&mut self, keys: &[String], vars: &[String], allow_t: bool) -> Result<Vec<MapEntry>, ParseError> {
        self.expect_sym("{")?;
        let mut entries: Vec<MapEntry> = Vec::new();
        while !self.is_sym("}") {
            let var = self.ident()?;
            if !keys.contains(&var.name) {
                return err(var.pos, format!("`{}` is not a generator of the source", var.name));
            }
            if entries.iter().any(|e| e.var.name == var.name) {
                return err(var.pos, format!("`{}` is mapped twice", var.name));
            }
            self.expect_sym("->")?;
            let image = self.expr(vars, allow_t)?;
            entries.push(MapEntry { var, image });
            if !self.eat_sym(",") {
                break;
            }
        }
        self.expect_sym("}")?;
        Ok(entries)
    }

    fn declare(&self, id: &Ident) -> Result<(), ParseError> {
        if self.scope.declared(&id.name) {
            return err(id.pos, format!("`{}` is already declared", id.name));
        }
        Ok(())
    }

    fn ring(&self, id: &Ident) -> Result<&RingInfo, ParseError> {
        self.scope
            .rings
            .get(&id.name)
            .map_or_else(|| err(id.pos, format!("undeclared ring `{}`", id.name)), Ok)
    }

    fn map_ring(&self, id: &Ident) -> Result<Vec<String>, ParseError> {
        match self.scope.maps.get(&id.name) {
            Some(r) => Ok(self.scope.rings[r].gens.clone()),
            None => err(id.pos, format!("undeclared exponential map `{}`", id.name)),
        }
    }

    fn check_field(&self, spec: FieldSpec, pos: Pos) -> Result<(), ParseError> {
        match self.scope.field {
            None => err(pos, "no field declared before this statement"),
            Some(f) if f != spec => err(pos, format!("field {spec} does not match the declared field {f}")),
            Some(_) => Ok(()),
        }
    }

    fn gen_names(&mut self) -> Result<Vec<Ident>, ParseError> {
        let mut gens: Vec<Ident> = Vec::new();
        loop {
            let g = self.ident()?;
            if RESERVED_NAMES.contains(&g.name.as_str()) {
                return err(g.pos, format!("reserved variable `{}` cannot be a generator", g.name));
            }
            if gens.iter().any(|h| h.name == g.name) {
                return err(g.pos, format!("duplicate generator `{}`", g.name));
            }
            gens.push(g);
            if !self.eat_sym(",") {
                return Ok(gens);
            }
        }
    }

    fn stmt(&mut self) -> Result<Stmt, ParseError> {
        let pos = self.pos();
        let word = match self.peek() {
            Tok::Ident(w) => w.clone(),
            _ => return self.unexpected(&["field", "ring", "expmap", "subalgebra", "hom", "command"]),
        };
        let kind = match word.as_str() {
            "field" => {
                self.bump();
                let spec = self.field_spec()?;
                if self.scope.field.is_some() {
                    return err(pos, "field already declared");
                }
                self.scope.field = Some(spec);
                StmtKind::Field(spec)
            }
            "ring" => {
                self.bump();
                let name = self.ident()?;
                self.declare(&name)?;
                self.expect_sym("=")?;
                let (def, info) = if self.is_word("tensor") {
                    self.bump();
                    self.expect_sym("(")?;
                    let left = self.ident()?;
                    self.expect_sym(",")?;
                    let right = self.ident()?;
                    self.expect_sym(")")?;
                    let (l, r) = (self.ring(&left)?.gens.clone(), self.ring(&right)?.gens.clone());
                    let (gens, _) = tensor_names(&l, &r);
                    (
                        RingDef::Tensor { left, right },
                        RingInfo {
                            gens,
                            left: Some(l.len()),
                        },
                    )
                } else {
                    let fpos = self.pos();
                    let field = self.field_spec()?;
                    self.check_field(field, fpos)?;
                    self.expect_sym("[")?;
                    let gens = self.gen_names()?;
                    self.expect_sym("]")?;
                    let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
                    let mut relations = Vec::new();
                    if self.eat_sym("/") {
                        self.expect_sym("(")?;
                        relations = self.expr_list(&names, false, ")")?;
                        self.expect_sym(")")?;
                    }
                    (
                        RingDef::Presented { field, gens, relations },
                        RingInfo {
                            gens: names,
                            left: None,
                        },
                    )
                };
                self.scope.rings.insert(name.name.clone(), info);
                StmtKind::Ring { name, def }
            }
            "expmap" => {
                self.bump();
                let name = self.ident()?;
                self.declare(&name)?;
                self.expect_word("on")?;
                let ring = self.ident()?;
                let gens = self.ring(&ring)?.gens.clone();
                self.expect_sym("=")?;
                let def = if self.is_word("exp") {
                    self.bump();
                    let derivation = self.map_body(&gens, &gens, false)?;
                    self.expect_word("bound")?;
                    let bound = self.small_int()?;
                    MapDef::Exp { derivation, bound }
                } else {
                    MapDef::Direct(self.map_body(&gens, &gens, true)?)
                };
                self.scope.maps.insert(name.name.clone(), ring.name.clone());
                StmtKind::ExpMap { name, ring, def }
            }
            "subalgebra" => {
                self.bump();
                let name = self.ident()?;
                self.declare(&name)?;
                self.expect_sym("=")?;
                let fpos = self.pos();
                let field = self.field_spec()?;
                self.check_field(field, fpos)?;
                self.expect_sym("[")?;
                let var = self.ident()?;
                if RESERVED_NAMES.contains(&var.name.as_str()) {
                    return err(
                        var.pos,
                        format!("reserved variable `{}` cannot be a generator", var.name),
                    );
                }
                self.expect_sym("]")?;
                self.expect_sym("<")?;
                let gens = self.expr_list(std::slice::from_ref(&var.name), false, ">")?;
                self.expect_sym(">")?;
                self.scope.subalgebras.insert(name.name.clone(), var.name.clone());
                StmtKind::Subalgebra { name, field, var, gens }
            }
            "hom" => {
                self.bump();
                let name = self.ident()?;
                self.declare(&name)?;
                self.expect_sym(":")?;
                let source = self.ident()?;
                self.expect_sym("->")?;
                let target = self.ident()?;
                let (sg, tg) = (self.ring(&source)?.gens.clone(), self.ring(&target)?.gens.clone());
                self.expect_sym("=")?;
                let images = self.map_body(&sg, &tg, false)?;
                self.scope.homs.insert(name.name.clone(), ());
                StmtKind::Hom {
                    name,
                    source,
                    target,
                    images,
                }
            }
            w if COMMANDS.contains(&w) => {
                self.bump();
                StmtKind::Command(self.command(&word)?)
            }
            _ => return self.unexpected(&["field", "ring", "expmap", "subalgebra", "hom", "command"]),
        };
        self.expect_sym(";")?;
        Ok(Stmt { kind, pos })
    }

    fn command(&mut self, word: &str) -> Result<Command, ParseError> {
        Ok(match word {
            "check-exp" => Command::CheckExp { map: self.map_ident()? },
            "invariant" => Command::Invariant { map: self.map_ident()? },
            "deg" | "dcoeff" | "rewrite" => {
                let map = self.map_ident()?;
                let gens = self.map_ring(&map)?;
                self.expect_word("of")?;
                match word {
                    "deg" => Command::Deg {
                        map,
                        elements: self.element_list(&gens)?,
                    },
                    "rewrite" => Command::Rewrite {
                        map,
                        elements: self.element_list(&gens)?,
                    },
                    _ => Command::DCoeff {
                        map,
                        element: self.expr(&gens, false)?,
                    },
                }
            }
            "iterative" => {
                let map = self.map_ident()?;
                let bound = if self.is_word("bound") {
                    self.bump();
                    Some(self.small_int()?)
                } else {
                    None
                };
                Command::Iterative { map, bound }
            }
            "conductor" => {
                let sub = self.ident()?;
                if !self.scope.subalgebras.contains_key(&sub.name) {
                    return err(sub.pos, format!("undeclared subalgebra `{}`", sub.name));
                }
                let check = if self.is_word("check") {
                    self.bump();
                    Some(self.map_ident()?)
                } else {
                    None
                };
                Command::Conductor { sub, check }
            }
            "tensor-extend" => {
                let map = self.map_ident()?;
                self.expect_word("with")?;
                let with = self.ident()?;
                self.ring(&with)?;
                Command::TensorExtend { map, with }
            }
            "specialize" => {
                let ring = self.ident()?;
                let gens = self.ring(&ring)?.gens.clone();
                self.expect_word("avoid")?;
                Command::Specialize {
                    ring,
                    avoid: self.element_list(&gens)?,
                }
            }
            "push" => {
                let map = self.map_ident()?;
                self.expect_word("on")?;
                let ring = self.ident()?;
                let info = self.ring(&ring)?.clone();
                let Some(left) = info.left else {
                    return err(ring.pos, format!("`{}` is not a tensor product", ring.name));
                };
                if self.scope.maps[&map.name] != ring.name {
                    return err(map.pos, format!("`{}` is not defined on `{}`", map.name, ring.name));
                }
                self.expect_word("at")?;
                let values = self.map_body(&info.gens[..left], &[], false)?;
                Command::Push { map, ring, values }
            }
            "ak-upper-bound" => {
                let mut maps = vec![self.map_ident()?];
                while self.eat_sym(",") {
                    maps.push(self.map_ident()?);
                }
                let ring = &self.scope.maps[&maps[0].name];
                if let Some(m) = maps.iter().find(|m| &self.scope.maps[&m.name] != ring) {
                    return err(m.pos, format!("`{}` is defined on a different ring", m.name));
                }
                let gens = self.scope.rings[ring].gens.clone();
                self.expect_word("on")?;
                Command::AkUpperBound {
                    maps,
                    elements: self.element_list(&gens)?,
                }
            }
            _ => unreachable!("command keyword list"),
        })
    }

    fn map_ident(&mut self) -> Result<Ident, ParseError> {
        let id = self.ident()?;
        self.map_ring(&id)?;
        Ok(id)
    }
}

pub fn parse(src: &str) -> Result<Script, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        idx: 0,
        scope: Scope::default(),
    };
    let mut stmts = Vec::new();
    while *p.peek() != Tok::Eof {
        stmts.push(p.stmt()?);
    }
    Ok(Script { stmts })
}

#[cfg(test)]
mod tests {
    use super::*;

    const DANIELEWSKI: &str = "field Q; ring A = Q[x,y,z]/(x*y - z^2 + 1); \
        expmap f on A = { x -> x, z -> z + x*t, y -> y + 2*z*t + x*t^2 }; check-exp f;";

    #[test]
    fn parses_danielewski() {
        let s = parse(DANIELEWSKI).unwrap();
        assert_eq!(s.stmts.len(), 4);
        assert_eq!(s.field(), Some(FieldSpec::Q));
        assert_eq!(s.commands().count(), 1);
    }

    #[test]
    fn empty_script() {
        assert_eq!(parse("").unwrap(), Script::default());
        assert_eq!(parse("  # only a comment\n").unwrap(), Script::default());
    }

    #[test]
    fn reserved_variable() {
        let e = parse("field Q; ring A = Q[t]/();").unwrap_err();
        assert!(e.message.contains("reserved"), "{e}");
        assert_eq!((e.pos.line, e.pos.col), (1, 21));
        let e = parse("field Q; ring A = Q[x]/(x - t);").unwrap_err();
        assert!(e.message.contains("reserved"), "{e}");
    }

    #[test]
    fn undeclared_and_shadowed() {
        let e = parse("field Q; check-exp f;").unwrap_err();
        assert!(e.message.contains("undeclared"));
        let e = parse("field Q; ring A = Q[x]; ring A = Q[y];").unwrap_err();
        assert!(e.message.contains("already declared"));
        let e = parse("field Q; ring A = Q[x]/(q);").unwrap_err();
        assert_eq!(e.message, "undeclared identifier `q`");
        let e = parse("ring A = Q[x];").unwrap_err();
        assert!(e.message.contains("no field"));
        let e = parse("field Fp(5); ring A = Q[x];").unwrap_err();
        assert!(e.message.contains("does not match"));
    }

    #[test]
    fn syntax_errors_report_expectations() {
        let e = parse("field Q;\nring A = Q[x]\n").unwrap_err();
        assert_eq!((e.pos.line, e.pos.col), (3, 1));
        assert!(e.expected.contains(&"`;`".to_string()), "{e}");
        let e = parse("field Fp(6);").unwrap_err();
        assert!(e.message.contains("prime"));
        let e = parse("field Q; ring A = Q[x]/(x $ 1);").unwrap_err();
        assert!(e.message.contains("unexpected character"));
    }

    #[test]
    fn hyphenated_commands_and_minus() {
        let s =
            parse("field Q; ring A = Q[x,y]; expmap f on A = { x -> x-t, y -> y }; ak-upper-bound f on x-y;").unwrap();
        assert_eq!(s.commands().next().unwrap().1.keyword(), "ak-upper-bound");
    }

    #[test]
    fn tensor_names_follow_renaming() {
        let s = "field Q; ring A = Q[x,y]; ring B = Q[x]; ring T = tensor(A, B); \
                 expmap f on T = { x_L -> x_L, y -> y, x_R -> x_R + t }; push f on T at { x_L -> 1, y -> 2 };";
        parse(s).unwrap();
        let bad = "field Q; ring A = Q[x]; ring B = Q[w]; ring T = tensor(A, B); \
                   expmap f on T = { x -> x, w -> w + t }; push f on T at { w -> 1 };";
        assert!(parse(bad).unwrap_err().message.contains("not a generator"));
    }
}
