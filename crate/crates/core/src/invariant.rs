//! Invariant-ring procedures built on a minimal positive φ-degree element:
//! the search for such an element, the divisibility of φ-degrees, and the
//! descending rewrite of an element over `A^φ[c⁻¹][x]`.
//!
//! The rewrite is stored fraction-free as `c^L · a = Σ_l e_l · x^l` with
//! every `e_l` invariant.

use crate::algebra::{AlgebraElement, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::expmap::ExponentialMap;
use crate::field::{is_power_of, Field};
use crate::groebner::DivisionBasis;
use crate::poly::{Degree, Monomial, Polynomial};

pub const DEFAULT_POOL_DEGREE: u32 = 3;

/// Generators plus all monomials in the generators of total degree at most
/// `max_degree`, in normal form, deduplicated, zero dropped.
pub fn default_pool<F: Field>(algebra: &PresentedAlgebra<F>, max_degree: u32) -> Vec<AlgebraElement<F>> {
    let m = algebra.ngens();
    let mut out: Vec<AlgebraElement<F>> = algebra.gens();
    for d in 2..=max_degree {
        for exps in exponent_vectors(m, d) {
            let e = algebra.element(&Polynomial::term(Monomial::new(exps), F::one()));
            if !e.is_zero() && !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out.retain(|e| !e.is_zero());
    out
}

// All exponent vectors of length m and total degree d, lexicographically descending.
fn exponent_vectors(m: usize, d: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponent_vectors(m - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// First pool element of minimal positive φ-degree, and that degree.
pub fn minimal_positive_degree<F: Field>(
    phi: &ExponentialMap<F>,
    pool: &[AlgebraElement<F>],
) -> Result<(AlgebraElement<F>, u32)> {
    let mut best: Option<(AlgebraElement<F>, u32)> = None;
    for a in pool {
        if let Degree::Finite(d) = phi.phi_degree(a) {
            if d > 0 && best.as_ref().is_none_or(|(_, b)| d < *b) {
                best = Some((a.clone(), d));
            }
        }
    }
    best.ok_or(Error::TrivialOnPool)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub checked: usize,
    /// Elements whose φ-degree is not a multiple of `n`; any entry means the
    /// pool missed the true minimal degree.
    pub counterexamples: Vec<(String, u32)>,
}

impl DivisibilityReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub fn check_degree_divisibility<F: Field>(
    phi: &ExponentialMap<F>,
    n: u32,
    samples: &[AlgebraElement<F>],
) -> DivisibilityReport {
    let mut report = DivisibilityReport::default();
    for a in samples {
        if let Degree::Finite(d) = phi.phi_degree(a) {
            report.checked += 1;
            if n == 0 || d % n != 0 {
                report.counterexamples.push((a.to_string(), d));
            }
        }
    }
    report
}

/// Facts about a minimal positive-degree element `x`: every `D^i(x)` with
/// `i >= 1` is invariant, and vanishes unless `i` is a power of the
/// characteristic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MinimalElementReport {
    pub degree: u32,
    pub non_invariant: Vec<usize>,
    pub nonzero_off_powers: Vec<usize>,
}

impl MinimalElementReport {
    pub fn passed(&self) -> bool {
        self.non_invariant.is_empty() && self.nonzero_off_powers.is_empty()
    }
}

pub fn check_minimal_element<F: Field>(phi: &ExponentialMap<F>, x: &AlgebraElement<F>) -> MinimalElementReport {
    let coeffs = phi.derivation_coeffs(x);
    let mut report = MinimalElementReport {
        degree: coeffs.len().saturating_sub(1) as u32,
        ..Default::default()
    };
    for (i, d) in coeffs.iter().enumerate().skip(1) {
        if !phi.is_invariant(d) {
            report.non_invariant.push(i);
        }
        if !d.is_zero() && !is_power_of(i as u64, F::CHARACTERISTIC) {
            report.nonzero_off_powers.push(i);
        }
    }
    report
}

#[derive(Clone, Debug)]
pub struct InvariantRewrite<F: Field> {
    pub a: AlgebraElement<F>,
    pub x: AlgebraElement<F>,
    pub n: u32,
    pub c: AlgebraElement<F>,
    /// `L` in `c^L · a = Σ e_l x^l`.
    pub power: u32,
    /// `e_0, ..., e_top`, all invariant.
    pub coefficients: Vec<AlgebraElement<F>>,
    /// φ-degree of the remainder before each subtraction step.
    pub degrees: Vec<u32>,
}

impl<F: Field> InvariantRewrite<F> {
    /// Re-expand `Σ e_l x^l` and compare with `c^L · a`.
    pub fn reconstructs(&self) -> bool {
        let lhs = &self.c.pow(self.power) * &self.a;
        let mut rhs = self.a.owner().zero();
        for (l, e) in self.coefficients.iter().enumerate() {
            rhs = &rhs + &(e * &self.x.pow(l as u32));
        }
        lhs == rhs
    }

    pub fn coefficients_invariant(&self, phi: &ExponentialMap<F>) -> bool {
        self.coefficients.iter().all(|e| phi.is_invariant(e))
    }
}

fn divide_by_power<F: Field>(db: &DivisionBasis<F>, e: &Polynomial<F>, k: u32) -> Result<Option<Polynomial<F>>> {
    let mut q = e.clone();
    for _ in 0..k {
        match db.divide(&q)? {
            Some(next) => q = next,
            None => return Ok(None),
        }
    }
    Ok(Some(q))
}

/// Write `c^L · a` as a polynomial in `x` with invariant coefficients by
/// repeatedly cancelling the top φ-coefficient: with `R` of φ-degree `kn`,
/// `e_k = D^{kn}(R) / c^k` and `R ← R - e_k x^k` drops the degree. `L`
/// starts at `deg_φ(a) / n` and is raised only if an exact division fails.
pub fn rewrite_in_invariants<F: Field>(
    phi: &ExponentialMap<F>,
    a: &AlgebraElement<F>,
    x: &AlgebraElement<F>,
    n: u32,
    c: &AlgebraElement<F>,
) -> Result<InvariantRewrite<F>> {
    let algebra = phi.algebra();
    if n == 0 || phi.phi_degree(x) != Degree::Finite(n) {
        return Err(Error::RewriteFailed(format!("deg_phi({x}) is not {n}")));
    }
    if c.is_zero() || !phi.is_invariant(c) || phi.derivation_coeff(x, n as usize) != *c {
        return Err(Error::RewriteFailed(format!(
            "c = {c} is not the nonzero invariant D^{n}({x})"
        )));
    }
    let d = match phi.phi_degree(a) {
        Degree::NegInfinity | Degree::Finite(0) => {
            return Ok(InvariantRewrite {
                a: a.clone(),
                x: x.clone(),
                n,
                c: c.clone(),
                power: 0,
                coefficients: vec![a.clone()],
                degrees: Vec::new(),
            })
        }
        Degree::Finite(d) => d,
    };
    if d % n != 0 {
        return Err(Error::PoolMinimumNotGlobal { degree: d, n });
    }
    let l = d / n;
    let db = algebra.relations().division_basis(c.rep(), algebra.config())?;
    let max_power = l * (l + 1) / 2;
    'power: for power in l..=max_power {
        let mut coefficients = vec![algebra.zero(); l as usize + 1];
        let mut degrees = Vec::new();
        let mut rem = &c.pow(power) * a;
        loop {
            let k_deg = match phi.phi_degree(&rem) {
                Degree::NegInfinity => break,
                Degree::Finite(0) => {
                    coefficients[0] = &coefficients[0] + &rem;
                    break;
                }
                Degree::Finite(k) => k,
            };
            if degrees.len() > l as usize {
                return Err(Error::RewriteFailed(format!("more than {} induction steps", l + 1)));
            }
            if k_deg % n != 0 {
                return Err(Error::PoolMinimumNotGlobal { degree: k_deg, n });
            }
            degrees.push(k_deg);
            let k = k_deg / n;
            let top = phi.derivation_coeff(&rem, k_deg as usize);
            let Some(q) = divide_by_power(&db, top.rep(), k)? else {
                continue 'power;
            };
            let e = algebra.element(&q);
            rem = &rem - &(&e * &x.pow(k));
            if phi.phi_degree(&rem) >= Degree::Finite(k_deg) {
                return Err(Error::RewriteFailed(format!(
                    "step at degree {k_deg} did not lower the degree"
                )));
            }
            coefficients[k as usize] = &coefficients[k as usize] + &e;
        }
        return Ok(InvariantRewrite {
            a: a.clone(),
            x: x.clone(),
            n,
            c: c.clone(),
            power,
            coefficients,
            degrees,
        });
    }
    Err(Error::RewriteFailed(format!(
        "no fraction-free form with c^L, L <= {max_power}"
    )))
}

/// Search the pool for `x`, set `c = D^n(x)`, and rewrite `a`.
pub fn rewrite_with_pool<F: Field>(
    phi: &ExponentialMap<F>,
    a: &AlgebraElement<F>,
    pool: &[AlgebraElement<F>],
) -> Result<InvariantRewrite<F>> {
    let (x, n) = minimal_positive_degree(phi, pool)?;
    let c = phi.derivation_coeff(&x, n as usize);
    rewrite_in_invariants(phi, a, &x, n, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::groebner::GroebnerConfig;

    type Q = Rational;
    type P = Polynomial<Q>;

    fn danielewski(n: u32) -> ExponentialMap<Q> {
        let (x, y, z, t) = (P::var(0), P::var(1), P::var(2), P::var(3));
        let rel = x.pow(n) * y.clone() - z.pow(2) + P::one();
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
        ExponentialMap::new(&a, images).unwrap()
    }

    fn frobenius() -> ExponentialMap<Fp<2>> {
        let a = PresentedAlgebra::<Fp<2>>::polynomial_ring(&["X"]).unwrap();
        ExponentialMap::new(&a, vec![Polynomial::var(0) + Polynomial::var(1).pow(2)]).unwrap()
    }

    #[test]
    fn minimal_degree_search() {
        let phi = danielewski(1);
        let (x, n) = minimal_positive_degree(&phi, &phi.algebra().gens()).unwrap();
        assert_eq!((x, n), (phi.algebra().gen(2), 1));

        let line = PresentedAlgebra::<Q>::polynomial_ring(&["X"]).unwrap();
        let psi = ExponentialMap::new(&line, vec![P::var(0) + P::var(1)]).unwrap();
        assert_eq!(minimal_positive_degree(&psi, &[line.gen(0)]).unwrap().1, 1);

        let f = frobenius();
        let x = f.algebra().gen(0);
        let (w, n) = minimal_positive_degree(&f, &[x.clone(), x.pow(3)]).unwrap();
        assert_eq!((w, n), (x, 2));

        let id = ExponentialMap::identity(&line);
        assert_eq!(
            minimal_positive_degree(&id, &[line.gen(0)]).unwrap_err(),
            Error::TrivialOnPool
        );
    }

    #[test]
    fn pool_contents() {
        let phi = danielewski(1);
        let pool = default_pool(phi.algebra(), 2);
        // 3 generators + 6 quadratic monomials, x*y reduces to z^2 - 1 which is new
        assert_eq!(pool.len(), 9);
    }

    #[test]
    fn divisibility() {
        let f = frobenius();
        let x = f.algebra().gen(0);
        let samples: Vec<_> = (0..=6).map(|k| x.pow(k)).collect();
        let report = check_degree_divisibility(&f, 2, &samples);
        assert!(report.passed());
        assert_eq!(report.checked, 7);
        assert!(!check_degree_divisibility(&f, 4, &samples).passed());
    }

    #[test]
    fn minimal_element_facts() {
        let f = frobenius();
        assert!(check_minimal_element(&f, &f.algebra().gen(0)).passed());
        let phi = danielewski(2);
        assert!(check_minimal_element(&phi, &phi.algebra().gen(2)).passed());
        // y has degree 2 in characteristic 0, so it is not a minimal element
        assert!(!check_minimal_element(&phi, &phi.algebra().gen(1)).passed());
    }

    #[test]
    fn rewrite_plane_example() {
        let a = PresentedAlgebra::<Q>::polynomial_ring(&["v", "x"]).unwrap();
        let (v, x, t) = (P::var(0), P::var(1), P::var(2));
        let phi = ExponentialMap::new(&a, vec![v.clone(), x.clone() + v.clone() * t]).unwrap();
        let xe = a.gen(1);
        let c = phi.derivation_coeff(&xe, 1);
        assert_eq!(c, a.gen(0));
        let target = a.element(&(x.pow(2) + x.clone()));
        let rw = rewrite_in_invariants(&phi, &target, &xe, 1, &c).unwrap();
        assert_eq!(rw.power, 2);
        let v2 = a.element(&v.pow(2));
        assert_eq!(rw.coefficients, vec![a.zero(), v2.clone(), v2]);
        assert!(rw.reconstructs());
        assert_eq!(rw.degrees, vec![2, 1]);
    }

    #[test]
    fn rewrite_invariant_input() {
        let phi = danielewski(1);
        let alg = phi.algebra();
        let z = alg.gen(2);
        let c = phi.derivation_coeff(&z, 1);
        let rw = rewrite_in_invariants(&phi, &alg.gen(0), &z, 1, &c).unwrap();
        assert_eq!(rw.power, 0);
        assert_eq!(rw.coefficients, vec![alg.gen(0)]);
    }

    #[test]
    fn rewrite_danielewski_y() {
        for n in 1..=3 {
            let phi = danielewski(n);
            let alg = phi.algebra();
            let (x, y, z) = (alg.gen(0), alg.gen(1), alg.gen(2));
            let c = phi.derivation_coeff(&z, 1);
            assert_eq!(c, x.pow(n));
            let rw = rewrite_in_invariants(&phi, &y, &z, 1, &c).unwrap();
            assert_eq!(rw.power, 2);
            assert!(rw.reconstructs());
            assert!(rw.coefficients_invariant(&phi));
            // x^{2n} y = x^n z^2 - x^n
            assert_eq!(rw.coefficients, vec![-&x.pow(n), alg.zero(), x.pow(n)]);
        }
    }

    #[test]
    fn rewrite_rejects_bad_witness() {
        let phi = danielewski(1);
        let alg = phi.algebra();
        let err = rewrite_in_invariants(&phi, &alg.gen(1), &alg.gen(1), 1, &alg.gen(0)).unwrap_err();
        assert!(matches!(err, Error::RewriteFailed(_)));
    }
}
