//! Finitely presented algebras `k[X_1..X_m]/I`, their elements, homomorphisms
//! and tensor products.
//!
//! Presentations are assumed to define domains; this is never verified.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, GroebnerBasis, GroebnerConfig};
use crate::poly::{MonomialOrder, Polynomial, Substitution};

/// Names of the deformation parameters; never allowed as generator names.
pub const RESERVED_NAMES: [&str; 2] = ["t", "s"];

struct AlgebraData<F: Field> {
    names: Vec<String>,
    relations: GroebnerBasis<F>,
    config: GroebnerConfig,
}

/// `k[X]/I` with `I` held as a reduced Gröbner basis. Generator `i` is
/// variable `i`; `t` is variable `m` and `s` is variable `m + 1`.
#[derive(Clone)]
pub struct PresentedAlgebra<F: Field> {
    inner: Arc<AlgebraData<F>>,
}

impl<F: Field> PartialEq for PresentedAlgebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.names == other.inner.names && self.inner.relations == other.inner.relations)
    }
}

impl<F: Field> Eq for PresentedAlgebra<F> {}

impl<F: Field> fmt::Debug for PresentedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for PresentedAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", F::name(), self.inner.names.join(","))?;
        let rels: Vec<String> = self.relations().generators().iter().map(|r| self.show(r)).collect();
        write!(f, "/({})", rels.join(", "))
    }
}

pub fn check_names(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if RESERVED_NAMES.contains(&n.as_str()) {
            return Err(Error::ReservedVariable(n.clone()));
        }
        if names[..i].contains(n) {
            return Err(Error::DuplicateVariable(n.clone()));
        }
    }
    Ok(())
}

impl<F: Field> PresentedAlgebra<F> {
    /// Present `k[names]/(relations)`. Relations are polynomials in variables
    /// `0..names.len()`.
    pub fn present(names: Vec<String>, relations: &[Polynomial<F>], config: &GroebnerConfig) -> Result<Self> {
        check_names(&names)?;
        if let Some(bad) = relations.iter().find(|r| r.width() > names.len()) {
            return Err(Error::InvalidInput(format!(
                "relation uses a variable outside the {} generators: {bad:?}",
                names.len()
            )));
        }
        let relations = buchberger(relations, MonomialOrder::GrevLex, config)?;
        if relations.is_unit_ideal() {
            return Err(Error::ZeroAlgebra);
        }
        Ok(PresentedAlgebra {
            inner: Arc::new(AlgebraData {
                names,
                relations,
                config: *config,
            }),
        })
    }

    pub fn polynomial_ring(names: &[&str]) -> Result<Self> {
        Self::present(
            names.iter().map(|s| s.to_string()).collect(),
            &[],
            &GroebnerConfig::default(),
        )
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn ngens(&self) -> usize {
        self.inner.names.len()
    }

    pub fn relations(&self) -> &GroebnerBasis<F> {
        &self.inner.relations
    }

    pub fn config(&self) -> &GroebnerConfig {
        &self.inner.config
    }

    pub fn t_var(&self) -> usize {
        self.ngens()
    }

    pub fn s_var(&self) -> usize {
        self.ngens() + 1
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// Generator names followed by `t` and `s`, for printing elements of `A[s, t]`.
    pub fn display_names(&self) -> Vec<String> {
        let mut v = self.inner.names.clone();
        v.extend(RESERVED_NAMES.iter().map(|s| s.to_string()));
        v
    }

    pub fn show(&self, p: &Polynomial<F>) -> String {
        p.display(&self.display_names()).to_string()
    }

    /// Normal form modulo the relations; also valid for polynomials in `t`, `s`.
    pub fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.inner.relations.normal_form(p)
    }

    pub fn element(&self, p: &Polynomial<F>) -> AlgebraElement<F> {
        AlgebraElement {
            owner: self.clone(),
            rep: self.reduce(p),
        }
    }

    pub fn gen(&self, i: usize) -> AlgebraElement<F> {
        self.element(&Polynomial::var(i))
    }

    pub fn gens(&self) -> Vec<AlgebraElement<F>> {
        (0..self.ngens()).map(|i| self.gen(i)).collect()
    }

    pub fn constant(&self, c: F) -> AlgebraElement<F> {
        self.element(&Polynomial::constant(c))
    }

    pub fn zero(&self) -> AlgebraElement<F> {
        self.constant(F::zero())
    }

    pub fn one(&self) -> AlgebraElement<F> {
        self.constant(F::one())
    }

    /// True when `p` only involves generators (no `t`, `s` or foreign variables).
    pub fn is_in_base(&self, p: &Polynomial<F>) -> bool {
        p.width() <= self.ngens()
    }
}

/// An element of a presented algebra, always stored in normal form.
#[derive(Clone)]
pub struct AlgebraElement<F: Field> {
    owner: PresentedAlgebra<F>,
    rep: Polynomial<F>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn owner(&self) -> &PresentedAlgebra<F> {
        &self.owner
    }

    pub fn rep(&self) -> &Polynomial<F> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.owner.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        AlgebraElement {
            owner: self.owner.clone(),
            rep: self.rep.scale(c),
        }
    }

    fn check_owner(&self, other: &Self) {
        assert!(self.owner == other.owner, "elements of different algebras");
    }
}

impl<F: Field> PartialEq for AlgebraElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.owner == other.owner && self.rep == other.rep
    }
}

impl<F: Field> Eq for AlgebraElement<F> {}

impl<F: Field> std::hash::Hash for AlgebraElement<F> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl<F: Field> fmt::Display for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.owner.show(&self.rep))
    }
}

impl<F: Field> fmt::Debug for AlgebraElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> Add for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;
    fn add(self, rhs: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_owner(rhs);
        // Sums of normal forms are normal forms.
        AlgebraElement {
            owner: self.owner.clone(),
            rep: &self.rep + &rhs.rep,
        }
    }
}

impl<F: Field> Sub for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;
    fn sub(self, rhs: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_owner(rhs);
        AlgebraElement {
            owner: self.owner.clone(),
            rep: &self.rep - &rhs.rep,
        }
    }
}

impl<F: Field> Mul for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;
    fn mul(self, rhs: &AlgebraElement<F>) -> AlgebraElement<F> {
        self.check_owner(rhs);
        self.owner.element(&(&self.rep * &rhs.rep))
    }
}

impl<F: Field> Neg for &AlgebraElement<F> {
    type Output = AlgebraElement<F>;
    fn neg(self) -> AlgebraElement<F> {
        AlgebraElement {
            owner: self.owner.clone(),
            rep: -&self.rep,
        }
    }
}

/// A verified algebra homomorphism given by generator images.
#[derive(Clone, Debug)]
pub struct AlgebraHom<F: Field> {
    source: PresentedAlgebra<F>,
    target: PresentedAlgebra<F>,
    images: Vec<Polynomial<F>>,
    /// Each source relation paired with the normal form of its image (all zero).
    certificate: Vec<(Polynomial<F>, Polynomial<F>)>,
}

impl<F: Field> AlgebraHom<F> {
    /// Build and verify the homomorphism sending generator `i` of `source` to
    /// `images[i]` (a polynomial in the generators of `target`).
    pub fn new(source: &PresentedAlgebra<F>, target: &PresentedAlgebra<F>, images: Vec<Polynomial<F>>) -> Result<Self> {
        if images.len() != source.ngens() {
            return Err(Error::ImageCount {
                expected: source.ngens(),
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|p| !target.is_in_base(p)) {
            return Err(Error::InvalidInput(format!(
                "image {} is not an element of the target",
                target.show(bad)
            )));
        }
        let images: Vec<_> = images.iter().map(|p| target.reduce(p)).collect();
        let sub = substitution(&images);
        let mut certificate = Vec::new();
        for r in source.relations().generators() {
            let image = target.reduce(&r.substitute(&sub));
            if !image.is_zero() {
                return Err(Error::NotWellDefined {
                    relation: source.show(r),
                    image: target.show(&image),
                });
            }
            certificate.push((r.clone(), image));
        }
        Ok(AlgebraHom {
            source: source.clone(),
            target: target.clone(),
            images,
            certificate,
        })
    }

    pub fn identity(a: &PresentedAlgebra<F>) -> Self {
        Self::new(a, a, (0..a.ngens()).map(Polynomial::var).collect()).expect("identity is well defined")
    }

    pub fn source(&self) -> &PresentedAlgebra<F> {
        &self.source
    }

    pub fn target(&self) -> &PresentedAlgebra<F> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    pub fn certificate(&self) -> &[(Polynomial<F>, Polynomial<F>)] {
        &self.certificate
    }

    pub fn apply(&self, a: &AlgebraElement<F>) -> AlgebraElement<F> {
        assert!(a.owner() == &self.source, "element is not in the source algebra");
        self.target.element(&self.apply_poly(a.rep()))
    }

    /// Apply to a polynomial over the source's generators and `t`, `s`,
    /// sending the parameters to the target's `t`, `s`. Result in normal form.
    pub fn apply_poly(&self, p: &Polynomial<F>) -> Polynomial<F> {
        let mut sub = substitution(&self.images);
        sub.insert(self.source.t_var(), Polynomial::var(self.target.t_var()));
        sub.insert(self.source.s_var(), Polynomial::var(self.target.s_var()));
        self.target.reduce(&p.substitute(&sub))
    }

    /// `other . self`
    pub fn then(&self, other: &AlgebraHom<F>) -> Result<AlgebraHom<F>> {
        if self.target != other.source {
            return Err(Error::AlgebraMismatch(
                "composition of homomorphisms with incompatible ends".into(),
            ));
        }
        let images = self.images.iter().map(|p| other.apply_poly(p)).collect();
        AlgebraHom::new(&self.source, &other.target, images)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, p)| *p == self.target.reduce(&Polynomial::var(i)))
    }
}

pub(crate) fn substitution<F: Field>(images: &[Polynomial<F>]) -> Substitution<F> {
    images.iter().cloned().enumerate().collect()
}

/// `A ⊗ B` on disjoint variables, with its canonical injections.
#[derive(Clone, Debug)]
pub struct TensorProduct<F: Field> {
    algebra: PresentedAlgebra<F>,
    left: AlgebraHom<F>,
    right: AlgebraHom<F>,
    renaming: Vec<(String, String)>,
}

impl<F: Field> TensorProduct<F> {
    pub fn algebra(&self) -> &PresentedAlgebra<F> {
        &self.algebra
    }

    /// The injection `A -> A ⊗ B`.
    pub fn left(&self) -> &AlgebraHom<F> {
        &self.left
    }

    /// The injection `B -> A ⊗ B`.
    pub fn right(&self) -> &AlgebraHom<F> {
        &self.right
    }

    /// Generator renamings applied to resolve name clashes: `(old, new)`,
    /// left factor entries first.
    pub fn renaming(&self) -> &[(String, String)] {
        &self.renaming
    }

    /// Index offset of the right factor's generators.
    pub fn right_offset(&self) -> usize {
        self.left.source.ngens()
    }
}

/// Generator names of `A ⊗ B` and the renamings applied: clashing names get
/// `_L` / `_R` suffixes, all other names are kept.
pub fn tensor_names(a: &[String], b: &[String]) -> (Vec<String>, Vec<(String, String)>) {
    let mut renaming = Vec::new();
    let mut names = Vec::new();
    for (own, other, suffix) in [(a, b, "_L"), (b, a, "_R")] {
        for n in own {
            if other.contains(n) {
                let new = format!("{n}{suffix}");
                renaming.push((n.clone(), new.clone()));
                names.push(new);
            } else {
                names.push(n.clone());
            }
        }
    }
    (names, renaming)
}

/// Tensor product over the common base field, named as in [`tensor_names`].
pub fn tensor<F: Field>(a: &PresentedAlgebra<F>, b: &PresentedAlgebra<F>) -> Result<TensorProduct<F>> {
    let (names, renaming) = tensor_names(a.names(), b.names());
    let offset = a.ngens();
    let mut relations: Vec<Polynomial<F>> = a.relations().generators().to_vec();
    relations.extend(b.relations().generators().iter().map(|r| r.map_vars(|v| v + offset)));
    let algebra = PresentedAlgebra::present(names, &relations, a.config())?;
    let left = AlgebraHom::new(a, &algebra, (0..a.ngens()).map(Polynomial::var).collect())?;
    let right = AlgebraHom::new(
        b,
        &algebra,
        (0..b.ngens()).map(|j| Polynomial::var(offset + j)).collect(),
    )?;
    Ok(TensorProduct {
        algebra,
        left,
        right,
        renaming,
    })
}
