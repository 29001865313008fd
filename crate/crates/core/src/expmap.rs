//! Exponential maps `φ: A -> A[t]` and their higher derivations.
//!
//! A map is given by the images of the generators. Construction verifies the
//! two axioms exactly on generators, which determines them everywhere since
//! `φ` is a homomorphism:
//!
//! * counit: `φ(g)|_{t=0} = g`
//! * comultiplication: `φ_s(φ_t(g)) = φ_{s+t}(g)` in `A[s, t]`
//!
//! plus preservation of every relation. `D^i(a)` is the `t^i` coefficient of
//! `φ(a)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use crate::algebra::{substitution, AlgebraElement, AlgebraHom, PresentedAlgebra, TensorProduct};
use crate::error::{AxiomViolation, Error, Result};
use crate::field::{binomial_in, factorial_in, Field};
use crate::poly::{Degree, Polynomial, Substitution};

/// φ-degree of an element: `deg_t(φ(a))`, `-inf` exactly for zero.
pub type DegreeValue = Degree;

pub struct ExponentialMap<F: Field> {
    algebra: PresentedAlgebra<F>,
    images: Vec<Polynomial<F>>,
    // rep -> φ(rep), both in normal form.
    cache: RwLock<HashMap<Polynomial<F>, Polynomial<F>>>,
}

impl<F: Field> Clone for ExponentialMap<F> {
    fn clone(&self) -> Self {
        ExponentialMap {
            algebra: self.algebra.clone(),
            images: self.images.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl<F: Field> fmt::Debug for ExponentialMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for ExponentialMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .algebra
            .names()
            .iter()
            .zip(&self.images)
            .map(|(n, p)| format!("{n} -> {}", self.algebra.show(p)))
            .collect();
        write!(f, "{{ {} }}", parts.join(", "))
    }
}

/// Which factor of a tensor product a map lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A `(a, i, j)` triple where `D^i D^j (a) != C(i+j, i) D^{i+j}(a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterativeFailure {
    pub element: String,
    pub i: usize,
    pub j: usize,
    pub difference: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IterativeReport {
    pub identities_checked: usize,
    pub failures: Vec<IterativeFailure>,
}

impl IterativeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `ε₁φ` and its inverse `ε₁φ_{-t}`.
#[derive(Clone, Debug)]
pub struct Eps1Automorphism<F: Field> {
    pub forward: AlgebraHom<F>,
    pub inverse: AlgebraHom<F>,
}

/// Which maps of a family fix an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AkMembership {
    pub element: String,
    pub fixed_by: Vec<bool>,
}

impl AkMembership {
    /// Member of the intersection of the invariant rings.
    pub fn in_intersection(&self) -> bool {
        self.fixed_by.iter().all(|b| *b)
    }
}

impl<F: Field> ExponentialMap<F> {
    /// Verify and build the map sending generator `i` to `images[i] ∈ A[t]`.
    pub fn new(algebra: &PresentedAlgebra<F>, images: Vec<Polynomial<F>>) -> Result<Self> {
        let m = algebra.ngens();
        if images.len() != m {
            return Err(Error::ImageCount {
                expected: m,
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|p| p.width() > m + 1) {
            return Err(Error::InvalidInput(format!(
                "image {} uses variables other than the generators and t",
                algebra.show(bad)
            )));
        }
        let images: Vec<_> = images.iter().map(|p| algebra.reduce(p)).collect();
        let violations = axiom_violations(algebra, &images);
        if !violations.is_empty() {
            return Err(Error::NotExponential(violations));
        }
        Ok(ExponentialMap {
            algebra: algebra.clone(),
            images,
            cache: RwLock::new(HashMap::new()),
        })
    }

    /// The trivial map `φ(a) = a`.
    pub fn identity(algebra: &PresentedAlgebra<F>) -> Self {
        Self::new(algebra, (0..algebra.ngens()).map(Polynomial::var).collect()).expect("identity is exponential")
    }

    /// `exp(t D)` for a locally nilpotent derivation `D` in characteristic 0,
    /// where `D` is given by the images of the generators.
    pub fn from_lnd(
        algebra: &PresentedAlgebra<F>,
        derivation: Vec<Polynomial<F>>,
        nilpotency_bound: usize,
    ) -> Result<Self> {
        if F::CHARACTERISTIC != 0 {
            return Err(Error::UnsupportedCharacteristic(F::CHARACTERISTIC));
        }
        let m = algebra.ngens();
        if derivation.len() != m {
            return Err(Error::ImageCount {
                expected: m,
                found: derivation.len(),
            });
        }
        if let Some(bad) = derivation.iter().find(|p| !algebra.is_in_base(p)) {
            return Err(Error::InvalidInput(format!(
                "derivation image {} is not in the algebra",
                algebra.show(bad)
            )));
        }
        let derivation: Vec<_> = derivation.iter().map(|p| algebra.reduce(p)).collect();
        let apply_d = |p: &Polynomial<F>| -> Polynomial<F> {
            let mut out = Polynomial::zero();
            for (j, dj) in derivation.iter().enumerate() {
                if dj.is_zero() {
                    continue;
                }
                out += &p.derivative(j) * dj;
            }
            algebra.reduce(&out)
        };
        for r in algebra.relations().generators() {
            let image = apply_d(r);
            if !image.is_zero() {
                return Err(Error::DerivationNotWellDefined {
                    relation: algebra.show(r),
                    image: algebra.show(&image),
                });
            }
        }
        let t = Polynomial::var(algebra.t_var());
        let mut images = Vec::with_capacity(m);
        for g in 0..m {
            let mut iterate = Polynomial::var(g);
            let mut image = Polynomial::zero();
            for k in 0..=nilpotency_bound {
                if k == nilpotency_bound {
                    if !iterate.is_zero() {
                        return Err(Error::NotLocallyNilpotent {
                            generator: algebra.names()[g].clone(),
                            bound: nilpotency_bound,
                        });
                    }
                    break;
                }
                let inv_fact = F::one() / factorial_in::<F>(k as u64);
                image += (&iterate * &t.pow(k as u32)).scale(&inv_fact);
                iterate = apply_d(&iterate);
            }
            images.push(image);
        }
        Self::new(algebra, images)
    }

    pub fn algebra(&self) -> &PresentedAlgebra<F> {
        &self.algebra
    }

    pub fn images(&self) -> &[Polynomial<F>] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, p)| *p == self.algebra.reduce(&Polynomial::var(i)))
    }

    /// `φ` applied to a polynomial over the generators (and possibly `s`),
    /// as a normal form in `A[t]` (or `A[s, t]`).
    pub fn apply_poly(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.algebra.reduce(&p.substitute(&substitution(&self.images)))
    }

    /// `φ(a)` as a normal form in `A[t]`.
    pub fn apply(&self, a: &AlgebraElement<F>) -> Polynomial<F> {
        assert!(a.owner() == &self.algebra, "element is not in the map's algebra");
        if let Some(hit) = self.cache.read().expect("cache lock").get(a.rep()) {
            return hit.clone();
        }
        let image = self.apply_poly(a.rep());
        self.cache
            .write()
            .expect("cache lock")
            .insert(a.rep().clone(), image.clone());
        image
    }

    /// `D^i(a)`: the `t^i` coefficient of `φ(a)`.
    pub fn derivation_coeff(&self, a: &AlgebraElement<F>, i: usize) -> AlgebraElement<F> {
        let image = self.apply(a);
        self.algebra.element(&image.coeff_in(self.algebra.t_var(), i as u32))
    }

    /// All of `D^0(a), ..., D^{deg}(a)`.
    pub fn derivation_coeffs(&self, a: &AlgebraElement<F>) -> Vec<AlgebraElement<F>> {
        let image = self.apply(a);
        image
            .coefficients_in(self.algebra.t_var())
            .into_iter()
            .map(|c| self.algebra.element(&c))
            .collect()
    }

    pub fn phi_degree(&self, a: &AlgebraElement<F>) -> DegreeValue {
        self.apply(a).degree_in(self.algebra.t_var())
    }

    pub fn is_invariant(&self, a: &AlgebraElement<F>) -> bool {
        self.apply(a) == *a.rep()
    }

    /// Check `D^i D^j = C(i+j, i) D^{i+j}` on every sample for `i + j <= bound`,
    /// binomials taken in the base field.
    pub fn check_iterative(&self, samples: &[AlgebraElement<F>], bound: usize) -> IterativeReport {
        let mut report = IterativeReport::default();
        for a in samples {
            let d: Vec<AlgebraElement<F>> = (0..=bound).map(|k| self.derivation_coeff(a, k)).collect();
            for j in 0..=bound {
                for i in 0..=(bound - j) {
                    let lhs = self.derivation_coeff(&d[j], i);
                    let rhs = d[i + j].scale(&binomial_in::<F>((i + j) as u64, i as u64));
                    report.identities_checked += 1;
                    if lhs != rhs {
                        report.failures.push(IterativeFailure {
                            element: a.to_string(),
                            i,
                            j,
                            difference: (&lhs - &rhs).to_string(),
                        });
                    }
                }
            }
        }
        report
    }

    /// Leibniz rule `D^n(ab) = Σ_{i+j=n} D^i(a) D^j(b)`.
    pub fn check_leibniz(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>, n: usize) -> bool {
        let lhs = self.derivation_coeff(&(a * b), n);
        let mut rhs = self.algebra.zero();
        for i in 0..=n {
            rhs = &rhs + &(&self.derivation_coeff(a, i) * &self.derivation_coeff(b, n - i));
        }
        lhs == rhs
    }

    /// Extend to `A ⊗ B` (or `B ⊗ A`) by `φ(Σ a_i ⊗ b_i) = Σ φ(a_i) ⊗ b_i`.
    pub fn extend_to_tensor(&self, tensor: &TensorProduct<F>, side: Side) -> Result<ExponentialMap<F>> {
        let inj = match side {
            Side::Left => tensor.left(),
            Side::Right => tensor.right(),
        };
        if inj.source() != &self.algebra {
            return Err(Error::AlgebraMismatch(format!(
                "tensor product was not built from {} on the requested side",
                self.algebra
            )));
        }
        let target = tensor.algebra();
        let mut images: Vec<Polynomial<F>> = (0..target.ngens()).map(Polynomial::var).collect();
        for (i, img) in inj.images().iter().enumerate() {
            let pos = (0..target.ngens())
                .find(|&k| *img == Polynomial::var(k))
                .expect("canonical injections send generators to generators");
            images[pos] = inj.apply_poly(&self.images[i]);
        }
        ExponentialMap::new(target, images)
    }

    /// The automorphism `a -> φ(a)|_{t=1}` with inverse `a -> φ(a)|_{t=-1}`.
    pub fn eps1_automorphism(&self) -> Result<Eps1Automorphism<F>> {
        let at = |v: F| -> Vec<Polynomial<F>> {
            let mut sub = Substitution::new();
            sub.insert(self.algebra.t_var(), Polynomial::constant(v));
            self.images.iter().map(|p| p.substitute(&sub)).collect()
        };
        let forward = AlgebraHom::new(&self.algebra, &self.algebra, at(F::one()))?;
        let inverse = AlgebraHom::new(&self.algebra, &self.algebra, at(-F::one()))?;
        if !forward.then(&inverse)?.is_identity() || !inverse.then(&forward)?.is_identity() {
            return Err(Error::InvalidInput(
                "eps1 automorphism does not invert; map was not verified".into(),
            ));
        }
        Ok(Eps1Automorphism { forward, inverse })
    }
}

fn axiom_violations<F: Field>(algebra: &PresentedAlgebra<F>, images: &[Polynomial<F>]) -> Vec<AxiomViolation> {
    let (t, s) = (algebra.t_var(), algebra.s_var());
    let names = algebra.names();
    let mut out = Vec::new();

    let mut at_zero = Substitution::new();
    at_zero.insert(t, Polynomial::zero());
    for (i, img) in images.iter().enumerate() {
        let diff = algebra.reduce(&(&img.substitute(&at_zero) - &Polynomial::var(i)));
        if !diff.is_zero() {
            out.push(AxiomViolation::Counit {
                generator: names[i].clone(),
                witness: algebra.show(&diff),
            });
        }
    }

    let phi = substitution(images);
    for r in algebra.relations().generators() {
        let image = algebra.reduce(&r.substitute(&phi));
        if !image.is_zero() {
            out.push(AxiomViolation::Relation {
                relation: algebra.show(r),
                witness: algebra.show(&image),
            });
        }
    }

    // φ_s: generators to their images with t renamed to s; t itself is fixed.
    let mut t_to_s = Substitution::new();
    t_to_s.insert(t, Polynomial::var(s));
    let phi_s: Substitution<F> = images.iter().map(|p| p.substitute(&t_to_s)).enumerate().collect();
    let mut shift = Substitution::new();
    shift.insert(t, Polynomial::var(s) + Polynomial::var(t));
    for (i, img) in images.iter().enumerate() {
        let lhs = algebra.reduce(&img.substitute(&phi_s));
        let rhs = algebra.reduce(&img.substitute(&shift));
        let diff = &lhs - &rhs;
        if !diff.is_zero() {
            out.push(AxiomViolation::Comultiplication {
                generator: names[i].clone(),
                witness: algebra.show(&diff),
            });
        }
    }
    out
}

/// For each element, which maps of the family fix it. An element fixed by
/// every map lies in `∩ A^φ`, an upper bound for the AK invariant.
pub fn ak_upper_bound<F: Field>(
    maps: &[ExponentialMap<F>],
    elements: &[AlgebraElement<F>],
) -> Result<Vec<AkMembership>> {
    if let Some(m) = maps.iter().find(|m| elements.iter().any(|e| e.owner() != m.algebra())) {
        return Err(Error::AlgebraMismatch(format!(
            "map {m} is not defined on the queried algebra"
        )));
    }
    Ok(elements
        .iter()
        .map(|e| AkMembership {
            element: e.to_string(),
            fixed_by: maps.iter().map(|m| m.is_invariant(e)).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tensor;
    use crate::field::{Fp, Rational};
    use crate::groebner::GroebnerConfig;

    type Q = Rational;
    type P = Polynomial<Q>;

    fn c(n: i64) -> P {
        P::constant(Q::from_i64(n))
    }

    fn line() -> PresentedAlgebra<Q> {
        PresentedAlgebra::polynomial_ring(&["X"]).unwrap()
    }

    fn danielewski(n: u32) -> (PresentedAlgebra<Q>, ExponentialMap<Q>) {
        let (x, y, z, t) = (P::var(0), P::var(1), P::var(2), P::var(3));
        let rel = x.pow(n) * y.clone() - z.pow(2) + c(1);
        let a = PresentedAlgebra::present(
            vec!["x".into(), "y".into(), "z".into()],
            &[rel],
            &GroebnerConfig::default(),
        )
        .unwrap();
        let images = vec![
            x.clone(),
            y + (z.clone() * t.clone()).scale(&Q::from_i64(2)) + x.pow(n) * t.pow(2),
            z + x.pow(n) * t,
        ];
        let phi = ExponentialMap::new(&a, images).unwrap();
        (a, phi)
    }

    #[test]
    fn translation_is_exponential() {
        let a = line();
        let psi = ExponentialMap::new(&a, vec![P::var(0) + P::var(1)]).unwrap();
        assert!(!psi.is_trivial());
        assert!(psi.is_invariant(&a.constant(Q::from_i64(7))));
        assert!(!psi.is_invariant(&a.gen(0)));
    }

    #[test]
    fn scaling_map_is_rejected_with_witness() {
        let a = line();
        let (x, t) = (P::var(0), P::var(1));
        let err = ExponentialMap::new(&a, vec![x.clone() + t * x]).unwrap_err();
        match err {
            Error::NotExponential(v) => {
                assert_eq!(v.len(), 1);
                assert_eq!(
                    v[0],
                    AxiomViolation::Comultiplication {
                        generator: "X".into(),
                        witness: "X*t*s".into()
                    }
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn counit_and_relation_failures() {
        let a = line();
        let err = ExponentialMap::new(&a, vec![P::var(0) + c(1)]).unwrap_err();
        assert!(matches!(&err, Error::NotExponential(v) if matches!(v[0], AxiomViolation::Counit { .. })));
        let (a1, _) = danielewski(1);
        let (x, y, z, t) = (P::var(0), P::var(1), P::var(2), P::var(3));
        let err = ExponentialMap::new(&a1, vec![x, y, z + t]).unwrap_err();
        assert!(
            matches!(&err, Error::NotExponential(v) if v.iter().any(|e| matches!(e, AxiomViolation::Relation { .. })))
        );
    }

    #[test]
    fn danielewski_degrees_and_coefficients() {
        for n in 1..=3 {
            let (a, phi) = danielewski(n);
            let (x, y, z) = (a.gen(0), a.gen(1), a.gen(2));
            assert_eq!(phi.phi_degree(&z), Degree::Finite(1));
            assert_eq!(phi.phi_degree(&y), Degree::Finite(2));
            assert_eq!(phi.phi_degree(&x), Degree::Finite(0));
            assert_eq!(phi.phi_degree(&a.zero()), Degree::NegInfinity);
            assert_eq!(phi.derivation_coeff(&y, 2), x.pow(n));
            assert_eq!(phi.derivation_coeff(&y, 0), y);
            assert!(phi.is_invariant(&x));
            assert!(!phi.is_invariant(&z));
        }
    }

    #[test]
    fn from_lnd_matches_direct_map() {
        for n in 1..=3 {
            let (a, phi) = danielewski(n);
            let (x, z) = (P::var(0), P::var(2));
            let lnd = ExponentialMap::from_lnd(&a, vec![P::zero(), z.scale(&Q::from_i64(2)), x.pow(n)], 4).unwrap();
            assert_eq!(lnd.images(), phi.images());
        }
        let a = line();
        assert!(ExponentialMap::from_lnd(&a, vec![P::zero()], 2).unwrap().is_trivial());
        let err = ExponentialMap::from_lnd(&a, vec![P::var(0)], 6).unwrap_err();
        assert!(matches!(err, Error::NotLocallyNilpotent { .. }));
        let f2 = PresentedAlgebra::<Fp<2>>::polynomial_ring(&["X"]).unwrap();
        assert_eq!(
            ExponentialMap::from_lnd(&f2, vec![Polynomial::one()], 3).unwrap_err(),
            Error::UnsupportedCharacteristic(2)
        );
    }

    #[test]
    fn translation_coefficients_are_binomials() {
        let a = line();
        let psi = ExponentialMap::new(&a, vec![P::var(0) + P::var(1)]).unwrap();
        let x = a.gen(0);
        for m in 0..7u32 {
            for i in 0..=(m as usize + 1) {
                let expected = if i as u32 <= m {
                    x.pow(m - i as u32).scale(&binomial_in::<Q>(m as u64, i as u64))
                } else {
                    a.zero()
                };
                assert_eq!(psi.derivation_coeff(&x.pow(m), i), expected);
            }
        }
    }

    #[test]
    fn iterativity_and_frobenius_map() {
        let a = line();
        let psi = ExponentialMap::new(&a, vec![P::var(0) + P::var(1)]).unwrap();
        let x = a.gen(0);
        assert!(psi.check_iterative(&[x.clone(), x.pow(3)], 6).passed());
        assert!(ExponentialMap::identity(&a)
            .check_iterative(std::slice::from_ref(&x), 4)
            .passed());

        type F2 = Fp<2>;
        let b = PresentedAlgebra::<F2>::polynomial_ring(&["X"]).unwrap();
        let map = ExponentialMap::new(&b, vec![Polynomial::var(0) + Polynomial::var(1).pow(2)]).unwrap();
        let x = b.gen(0);
        assert_eq!(map.phi_degree(&x), Degree::Finite(2));
        let report = map.check_iterative(&[x.clone(), x.pow(2)], 8);
        assert!(report.passed(), "{report:?}");
        for i in (1..8).step_by(2) {
            assert!(map.derivation_coeff(&x, i).is_zero());
        }
    }

    #[test]
    fn leibniz_spot_check() {
        let (a, phi) = danielewski(2);
        let (y, z) = (a.gen(1), a.gen(2));
        for n in 0..5 {
            assert!(phi.check_leibniz(&y, &z, n));
            assert!(phi.check_leibniz(&(&y + &z), &z.pow(2), n));
        }
    }

    #[test]
    fn tensor_extension() {
        let kx = line();
        let ky = PresentedAlgebra::polynomial_ring(&["Y"]).unwrap();
        let tp = tensor(&kx, &ky).unwrap();
        let psi = ExponentialMap::new(&kx, vec![P::var(0) + P::var(1)]).unwrap();
        let ext = psi.extend_to_tensor(&tp, Side::Left).unwrap();
        assert_eq!(ext.images(), &[P::var(0) + P::var(2), P::var(1)]);
        assert!(psi.extend_to_tensor(&tp, Side::Right).is_err());

        let (a1, phi) = danielewski(1);
        let kw = PresentedAlgebra::polynomial_ring(&["w"]).unwrap();
        let tp = tensor(&a1, &kw).unwrap();
        let ext = phi.extend_to_tensor(&tp, Side::Left).unwrap();
        let t = tp.algebra();
        assert!(ext.is_invariant(&t.gen(0)));
        assert!(ext.is_invariant(&t.gen(3)));
        assert!(!ext.is_invariant(&t.gen(1)));
        assert!(!ext.is_invariant(&t.gen(2)));

        let id = ExponentialMap::identity(&a1).extend_to_tensor(&tp, Side::Left).unwrap();
        assert!(id.is_trivial());
    }

    #[test]
    fn eps1() {
        let a = line();
        let psi = ExponentialMap::new(&a, vec![P::var(0) + P::var(1)]).unwrap();
        let e = psi.eps1_automorphism().unwrap();
        assert_eq!(e.forward.images(), &[P::var(0) + c(1)]);
        assert_eq!(e.inverse.images(), &[P::var(0) - c(1)]);
        assert!(ExponentialMap::identity(&a)
            .eps1_automorphism()
            .unwrap()
            .forward
            .is_identity());

        let (_, phi) = danielewski(2);
        let e = phi.eps1_automorphism().unwrap();
        let (x, y, z) = (P::var(0), P::var(1), P::var(2));
        assert_eq!(e.forward.images()[2], z.clone() + x.pow(2));
        assert_eq!(e.forward.images()[1], y + z.scale(&Q::from_i64(2)) + x.pow(2));
        assert!(e.forward.then(&e.inverse).unwrap().is_identity());
    }

    #[test]
    fn ak_upper_bound_membership() {
        // A_2: both maps fix x, consistent with ak(A_2) = k[x]
        let (a, phi) = danielewski(2);
        let (x, y, z, t) = (P::var(0), P::var(1), P::var(2), P::var(3));
        let f = x.clone();
        let second = ExponentialMap::new(
            &a,
            vec![
                x.clone(),
                y.clone() + (z.clone() * f.clone() * t.clone()).scale(&Q::from_i64(2)) + x.pow(2) * f.pow(2) * t.pow(2),
                z.clone() + x.pow(2) * f * t.clone(),
            ],
        )
        .unwrap();
        let rows = ak_upper_bound(&[phi, second], &a.gens()).unwrap();
        assert!(rows[0].in_intersection());
        assert!(!rows[1].in_intersection());
        assert!(!rows[2].in_intersection());

        // A_1 is symmetric in x and y, so the swapped map moves x as well
        let (a1, phi1) = danielewski(1);
        let swapped = ExponentialMap::new(
            &a1,
            vec![
                x.clone() + (z.clone() * t.clone()).scale(&Q::from_i64(2)) + y.clone() * t.pow(2),
                y.clone(),
                z + y * t,
            ],
        )
        .unwrap();
        let rows = ak_upper_bound(&[phi1, swapped], &a1.gens()).unwrap();
        assert!(rows.iter().all(|r| !r.in_intersection()));
    }
}
