//! Sparse multivariate polynomials over an exact [`Field`].
//!
//! Variables are identified by index. Polynomials over fewer variables embed
//! into rings with more variables without conversion, which is how `A`,
//! `A[t]` and `A[s, t]` share one representation: the algebra places `t` and
//! `s` directly after its own generators.

mod monomial;
pub mod univariate;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::field::Field;

pub use monomial::{Monomial, MonomialOrder};
pub use univariate::UniPoly;

/// Degree of a polynomial in one variable, with `deg(0) = -inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }

    /// Non-positive degree, i.e. `-inf` or `0`.
    pub fn is_non_positive(self) -> bool {
        self <= Degree::Finite(0)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Substitution `variable index -> image`; unlisted variables map to themselves.
pub type Substitution<F> = BTreeMap<usize, Polynomial<F>>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for Polynomial<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index, 1), F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|m| Degree::Finite(m.degree()))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Highest exponent of `var`; `-inf` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Degree {
        self.terms
            .keys()
            .map(|m| Degree::Finite(m.exponent(var)))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    /// Coefficient of `var^i`, a polynomial free of `var`.
    pub fn coeff_in(&self, var: usize, i: u32) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == i)
                .map(|(m, c)| (m.without(var), c.clone()))
                .collect(),
        }
    }

    /// All coefficients in `var`, index `i` holding the `var^i` coefficient.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = match self.degree_in(var) {
            Degree::NegInfinity => return Vec::new(),
            Degree::Finite(d) => d as usize,
        };
        let mut out = vec![Self::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exponent(var) as usize].terms.insert(m.without(var), c.clone());
        }
        out
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(var) > 0)
    }

    /// One past the largest variable index that occurs.
    pub fn width(&self) -> usize {
        self.terms.keys().map(Monomial::width).max().unwrap_or(0)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            out.add_term(Monomial::new(exps), c.clone() * F::from_i64(e as i64));
        }
        out
    }

    /// Ring-homomorphic substitution of variables by polynomials.
    pub fn substitute(&self, images: &Substitution<F>) -> Self {
        let mut cache: HashMap<(usize, u32), Self> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Self::constant(c.clone());
            for (v, e) in m.iter() {
                match images.get(&v) {
                    None => {
                        if kept.len() <= v {
                            kept.resize(v + 1, 0);
                        }
                        kept[v] = e;
                    }
                    Some(img) => {
                        let p = cache.entry((v, e)).or_insert_with(|| img.pow(e));
                        factor = &factor * &*p;
                    }
                }
            }
            let kept = Monomial::new(kept);
            out += factor.mul_term(&kept, &F::one());
        }
        out
    }

    /// Rename variables through an injective index map.
    pub fn map_vars(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Apply a function to every coefficient (e.g. a change of field).
    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// Scale so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => Self::zero(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(&Monomial, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Printable view using the given variable names (extra indices print as `v<i>`).
    pub fn display<'a, S: AsRef<str>>(&'a self, names: &'a [S]) -> PolyDisplay<'a, F, S> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a, F: Field, S: AsRef<str>> {
    poly: &'a Polynomial<F>,
    names: &'a [S],
}

impl<F: Field, S: AsRef<str>> fmt::Display for PolyDisplay<'_, F, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.sorted_terms(MonomialOrder::GrevLex).into_iter().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            let coeff_is_one = mag.is_one();
            if !coeff_is_one || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, e) in m.iter() {
                let name = match self.names.get(v) {
                    Some(n) => n.as_ref().to_string(),
                    None => format!("v{v}"),
                };
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: [&str; 0] = [];
        write!(f, "{}", self.display(&names))
    }
}

impl<F: Field> AddAssign<&Polynomial<F>> for Polynomial<F> {
    fn add_assign(&mut self, rhs: &Polynomial<F>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<F: Field> AddAssign for Polynomial<F> {
    fn add_assign(&mut self, rhs: Polynomial<F>) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<F: Field> SubAssign<&Polynomial<F>> for Polynomial<F> {
    fn sub_assign(&mut self, rhs: &Polynomial<F>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<F: Field> SubAssign for Polynomial<F> {
    fn sub_assign(&mut self, rhs: Polynomial<F>) {
        *self -= &rhs;
    }
}

impl<F: Field> Add<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<F: Field> Sub<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<F: Field> Mul<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$method(&rhs)
            }
        }
        impl<F: Field> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$method(rhs)
            }
        }
        impl<F: Field> $tr<Polynomial<F>> for &Polynomial<F> {
            type Output = Polynomial<F>;
            fn $method(self, rhs: Polynomial<F>) -> Polynomial<F> {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use proptest::prelude::*;

    type Q = Rational;
    type P = Polynomial<Q>;

    const X: usize = 0;
    const T: usize = 1;
    const S: usize = 2;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn x() -> P {
        P::var(X)
    }
    fn t() -> P {
        P::var(T)
    }

    #[test]
    fn char_two_square() {
        type F2 = Fp<2>;
        let f: Polynomial<F2> = Polynomial::var(X) + Polynomial::var(T);
        let sq = &f * &f;
        let expected = Polynomial::var(X).pow(2) + Polynomial::var(T).pow(2);
        assert_eq!(sq, expected);
    }

    #[test]
    fn simple_arith() {
        assert!((&x() * &P::zero()).is_zero());
        let sum = (x() + t()) + (x() - t());
        assert_eq!(sum, x().scale(&q(2)));
    }

    #[test]
    fn substitute_examples() {
        let mut sub = Substitution::new();
        sub.insert(X, x() + t());
        assert_eq!(x().substitute(&sub), x() + t());
        let f = x().pow(3) + t().scale(&q(5));
        assert_eq!(f.substitute(&Substitution::new()), f);

        // X^2 under X -> X + t, then t -> s + t, equals X -> X + s + t directly.
        let f = x().pow(2);
        let step1 = f.substitute(&sub);
        let mut shift = Substitution::new();
        shift.insert(T, P::var(S) + t());
        let two_step = step1.substitute(&shift);
        let mut direct = Substitution::new();
        direct.insert(X, x() + P::var(S) + t());
        assert_eq!(two_step, f.substitute(&direct));
    }

    #[test]
    fn coefficients_and_degrees() {
        let f = x() + x().scale(&q(2)) * t() + t().pow(2);
        assert_eq!(f.coeff_in(T, 1), x().scale(&q(2)));
        assert_eq!(x().coeff_in(T, 3), P::zero());
        assert_eq!(f.degree_in(T), Degree::Finite(2));
        assert_eq!(P::zero().degree_in(T), Degree::NegInfinity);
        assert_eq!(x().pow(2).degree_in(T), Degree::Finite(0));
    }

    #[test]
    fn display_is_readable() {
        let names = ["x", "y", "z"];
        let f = P::var(0) * P::var(1) - P::var(2).pow(2) + P::one();
        assert_eq!(f.display(&names).to_string(), "x*y - z^2 + 1");
        let g = P::var(0).scale(&Q::new(3.into(), 2.into())) - P::one();
        assert_eq!(g.display(&names).to_string(), "3/2*x - 1");
    }

    fn arb_poly(vars: usize) -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..3, vars), -3i64..4), 0..5)
            .prop_map(|ts| P::from_terms(ts.into_iter().map(|(e, c)| (Monomial::new(e), Q::from_i64(c)))))
    }

    proptest! {
        #[test]
        fn substitution_is_a_homomorphism(f in arb_poly(2), g in arb_poly(2), a in arb_poly(3), b in arb_poly(3)) {
            let mut sub = Substitution::new();
            sub.insert(0, a);
            sub.insert(1, b);
            prop_assert_eq!((&f * &g).substitute(&sub), &f.substitute(&sub) * &g.substitute(&sub));
            prop_assert_eq!((&f + &g).substitute(&sub), &f.substitute(&sub) + &g.substitute(&sub));
        }

        #[test]
        fn coefficients_reconstruct(f in arb_poly(2)) {
            let mut back = P::zero();
            for (i, c) in f.coefficients_in(T).into_iter().enumerate() {
                back += &c * &t().pow(i as u32);
            }
            prop_assert_eq!(back, f);
        }

        #[test]
        fn degree_is_additive(f in arb_poly(2), g in arb_poly(2)) {
            prop_assert_eq!((&f * &g).degree_in(T), f.degree_in(T) + g.degree_in(T));
        }

        #[test]
        fn substitution_composes(f in arb_poly(2), a in arb_poly(2), b in arb_poly(2)) {
            // substitute(substitute(f, sigma), tau) == substitute(f, tau . sigma)
            let mut sigma = Substitution::new();
            sigma.insert(0, a.clone());
            let mut tau = Substitution::new();
            tau.insert(1, b.clone());
            let mut composed = Substitution::new();
            composed.insert(0, a.substitute(&tau));
            composed.insert(1, b);
            prop_assert_eq!(f.substitute(&sigma).substitute(&tau), f.substitute(&composed));
        }
    }
}
