//! Syntax tree of a script. Positions are carried for diagnostics only and
//! never take part in equality, so a printed and re-parsed script compares
//! equal to the original.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub name: String,
    pub pos: Pos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "Q"),
            FieldSpec::Fp(p) => write!(f, "Fp({p})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Frac(BigInt, BigInt),
    Var(Ident),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub var: Ident,
    pub image: Expr,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDef {
    Presented {
        field: FieldSpec,
        gens: Vec<Ident>,
        relations: Vec<Expr>,
    },
    Tensor {
        left: Ident,
        right: Ident,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapDef {
    /// Images of the generators under `φ`, polynomials in the generators and `t`.
    Direct(Vec<MapEntry>),
    /// A locally nilpotent derivation, exponentiated.
    Exp { derivation: Vec<MapEntry>, bound: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    CheckExp {
        map: Ident,
    },
    Deg {
        map: Ident,
        elements: Vec<Expr>,
    },
    DCoeff {
        map: Ident,
        element: Expr,
    },
    Invariant {
        map: Ident,
    },
    Iterative {
        map: Ident,
        bound: Option<u32>,
    },
    Rewrite {
        map: Ident,
        elements: Vec<Expr>,
    },
    Conductor {
        sub: Ident,
        check: Option<Ident>,
    },
    TensorExtend {
        map: Ident,
        with: Ident,
    },
    Specialize {
        ring: Ident,
        avoid: Vec<Expr>,
    },
    Push {
        map: Ident,
        ring: Ident,
        values: Vec<MapEntry>,
    },
    AkUpperBound {
        maps: Vec<Ident>,
        elements: Vec<Expr>,
    },
}

impl Command {
    pub fn keyword(&self) -> &'static str {
        match self {
            Command::CheckExp { .. } => "check-exp",
            Command::Deg { .. } => "deg",
            Command::DCoeff { .. } => "dcoeff",
            Command::Invariant { .. } => "invariant",
            Command::Iterative { .. } => "iterative",
            Command::Rewrite { .. } => "rewrite",
            Command::Conductor { .. } => "conductor",
            Command::TensorExtend { .. } => "tensor-extend",
            Command::Specialize { .. } => "specialize",
            Command::Push { .. } => "push",
            Command::AkUpperBound { .. } => "ak-upper-bound",
        }
    }
}

pub const COMMANDS: [&str; 11] = [
    "check-exp",
    "deg",
    "dcoeff",
    "invariant",
    "iterative",
    "rewrite",
    "conductor",
    "tensor-extend",
    "specialize",
    "push",
    "ak-upper-bound",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StmtKind {
    Field(FieldSpec),
    Ring {
        name: Ident,
        def: RingDef,
    },
    ExpMap {
        name: Ident,
        ring: Ident,
        def: MapDef,
    },
    Subalgebra {
        name: Ident,
        field: FieldSpec,
        var: Ident,
        gens: Vec<Expr>,
    },
    Hom {
        name: Ident,
        source: Ident,
        target: Ident,
        images: Vec<MapEntry>,
    },
    Command(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

impl Script {
    pub fn field(&self) -> Option<FieldSpec> {
        self.stmts.iter().find_map(|s| match s.kind {
            StmtKind::Field(f) => Some(f),
            _ => None,
        })
    }

    pub fn commands(&self) -> impl Iterator<Item = (&Stmt, &Command)> {
        self.stmts.iter().filter_map(|s| match &s.kind {
            StmtKind::Command(c) => Some((s, c)),
            _ => None,
        })
    }
}
