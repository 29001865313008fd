//! Subalgebras `A = k[g_1, ..., g_r] ⊆ k[y]` and their conductor
//! `{f ∈ k[y] : k[y]f ⊆ A}`.
//!
//! Membership is decided by linear algebra on the span of generator
//! products up to a degree bound. The span is kept in echelon form keyed by
//! leading degree; every row remembers how it was produced (a previous row
//! times one generator, minus earlier rows), so a membership certificate is
//! a straight-line program that can be replayed from the generators alone.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::algebra::TensorProduct;
use crate::error::{Error, Result};
use crate::expmap::ExponentialMap;
use crate::field::Field;
use crate::linalg::solve;
use crate::poly::{Degree, Monomial, Polynomial, UniPoly};

#[derive(Clone, Debug)]
struct Origin<F: Field> {
    /// `None` for the constant row `1`.
    parent: Option<(usize, usize)>,
    reductions: Vec<(usize, F)>,
    scale: F,
}

#[derive(Clone, Debug)]
struct Row<F: Field> {
    poly: UniPoly<F>,
    origin: Origin<F>,
}

#[derive(Debug)]
struct Span<F: Field> {
    rows: BTreeMap<usize, Row<F>>,
}

impl<F: Field> Span<F> {
    /// Reduce top-down by every row; the result vanishes exactly on span
    /// members and is linear in `f`.
    fn residual(&self, f: &UniPoly<F>) -> (UniPoly<F>, Vec<(usize, F)>) {
        let mut rem = f.clone();
        let mut used = Vec::new();
        let Some(top) = rem.degree() else {
            return (rem, used);
        };
        for d in (0..=top).rev() {
            let c = rem.coeff(d);
            if c.is_zero() {
                continue;
            }
            if let Some(row) = self.rows.get(&d) {
                rem = &rem - &row.poly.scale(&c);
                used.push((d, c));
            }
        }
        (rem, used)
    }

    fn insert(&mut self, f: UniPoly<F>, parent: Option<(usize, usize)>) -> Option<usize> {
        let (rem, reductions) = self.residual(&f);
        let d = rem.degree()?;
        let scale = rem.leading_coeff().unwrap().inv().unwrap();
        let poly = rem.scale(&scale);
        self.rows.insert(
            d,
            Row {
                poly,
                origin: Origin {
                    parent,
                    reductions,
                    scale,
                },
            },
        );
        Some(d)
    }
}

/// `f = Σ c_p · row_p` over span rows built at `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate<F: Field> {
    pub bound: usize,
    pub combination: Vec<(usize, F)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership<F: Field> {
    pub bound: usize,
    pub certificate: Option<MembershipCertificate<F>>,
}

impl<F: Field> Membership<F> {
    pub fn is_member(&self) -> bool {
        self.certificate.is_some()
    }
}

pub struct CurveSubalgebra<F: Field> {
    gens: Vec<UniPoly<F>>,
    member_bound: Option<usize>,
    spans: RwLock<HashMap<usize, Arc<Span<F>>>>,
}

impl<F: Field> Clone for CurveSubalgebra<F> {
    fn clone(&self) -> Self {
        CurveSubalgebra {
            gens: self.gens.clone(),
            member_bound: self.member_bound,
            spans: RwLock::default(),
        }
    }
}

impl<F: Field> fmt::Debug for CurveSubalgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for CurveSubalgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[y]<", F::name())?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display("y"))?;
        }
        write!(f, ">")
    }
}

impl<F: Field> CurveSubalgebra<F> {
    pub fn new(gens: Vec<UniPoly<F>>) -> Self {
        CurveSubalgebra {
            gens,
            member_bound: None,
            spans: RwLock::default(),
        }
    }

    /// Use a fixed product-degree bound instead of the query-dependent default.
    pub fn with_member_bound(mut self, bound: usize) -> Self {
        self.member_bound = Some(bound);
        self
    }

    pub fn gens(&self) -> &[UniPoly<F>] {
        &self.gens
    }

    pub fn max_gen_degree(&self) -> usize {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    /// `4 · (max generator degree) · (query degree + 1)` unless overridden.
    pub fn default_bound(&self, query_degree: usize) -> usize {
        self.member_bound
            .unwrap_or(4 * self.max_gen_degree() * (query_degree + 1))
    }

    fn span(&self, bound: usize) -> Arc<Span<F>> {
        if let Some(s) = self.spans.read().unwrap().get(&bound) {
            return s.clone();
        }
        let mut span = Span { rows: BTreeMap::new() };
        span.insert(UniPoly::one(), None);
        let mut queue = VecDeque::from([0]);
        while let Some(p) = queue.pop_front() {
            let row = span.rows[&p].poly.clone();
            for (i, g) in self.gens.iter().enumerate() {
                let dg = match g.degree() {
                    Some(d) if d > 0 => d,
                    _ => continue,
                };
                if p + dg > bound {
                    continue;
                }
                if let Some(q) = span.insert(&row * g, Some((p, i))) {
                    queue.push_back(q);
                }
            }
        }
        let span = Arc::new(span);
        self.spans.write().unwrap().insert(bound, span.clone());
        span
    }

    /// Membership of `f` in the span of generator products of degree at most
    /// `bound` (default from the degree of `f`).
    pub fn member(&self, f: &UniPoly<F>, bound: Option<usize>) -> Membership<F> {
        let bound = bound.unwrap_or_else(|| self.default_bound(f.degree().unwrap_or(0)));
        let (rem, combination) = self.span(bound).residual(f);
        let certificate = rem.is_zero().then_some(MembershipCertificate { bound, combination });
        Membership { bound, certificate }
    }

    /// Rebuild every row from the generators by its recorded recipe and
    /// check that the certificate sums to `f`.
    pub fn verify_certificate(&self, f: &UniPoly<F>, cert: &MembershipCertificate<F>) -> bool {
        let span = self.span(cert.bound);
        let mut rebuilt: BTreeMap<usize, UniPoly<F>> = BTreeMap::new();
        fn build<F: Field>(
            p: usize,
            span: &Span<F>,
            gens: &[UniPoly<F>],
            memo: &mut BTreeMap<usize, UniPoly<F>>,
        ) -> Option<UniPoly<F>> {
            if let Some(r) = memo.get(&p) {
                return Some(r.clone());
            }
            let row = span.rows.get(&p)?;
            let mut v = match row.origin.parent {
                None => UniPoly::one(),
                Some((q, i)) => &build(q, span, gens, memo)? * gens.get(i)?,
            };
            for (q, c) in &row.origin.reductions {
                v = &v - &build(*q, span, gens, memo)?.scale(c);
            }
            let v = v.scale(&row.origin.scale);
            if v != row.poly {
                return None;
            }
            memo.insert(p, v.clone());
            Some(v)
        }
        let mut sum = UniPoly::zero();
        for (p, c) in &cert.combination {
            match build(*p, &span, &self.gens, &mut rebuilt) {
                Some(r) => sum = &sum + &r.scale(c),
                None => return false,
            }
        }
        sum == *f
    }

    /// Expand a certificate into an explicit polynomial in generator symbols
    /// (variable `i` stands for `g_i`).
    pub fn expand_certificate(&self, cert: &MembershipCertificate<F>) -> Polynomial<F> {
        let span = self.span(cert.bound);
        let mut memo: BTreeMap<usize, Polynomial<F>> = BTreeMap::new();
        fn expand<F: Field>(p: usize, span: &Span<F>, memo: &mut BTreeMap<usize, Polynomial<F>>) -> Polynomial<F> {
            if let Some(r) = memo.get(&p) {
                return r.clone();
            }
            let row = &span.rows[&p];
            let mut v = match row.origin.parent {
                None => Polynomial::one(),
                Some((q, i)) => expand(q, span, memo) * Polynomial::var(i),
            };
            for (q, c) in &row.origin.reductions {
                v -= expand(*q, span, memo).scale(c);
            }
            let v = v.scale(&row.origin.scale);
            memo.insert(p, v.clone());
            v
        }
        let mut out = Polynomial::zero();
        for (p, c) in &cert.combination {
            out += expand(*p, &span, &mut memo).scale(c);
        }
        out
    }

    fn member_escalating(&self, f: &UniPoly<F>, m: usize) -> Result<MembershipCertificate<F>> {
        let first = self.member(f, None);
        if let Some(c) = first.certificate {
            return Ok(c);
        }
        let bound = 2 * first.bound.max(1);
        self.member(f, Some(bound))
            .certificate
            .ok_or(Error::CertificateFailure { m, bound })
    }

    /// Minimal-degree monic `h ∈ A` with `y·h ∈ A`, searching `deg h <= degree_limit`
    /// (default `4 · max generator degree`).
    pub fn fraction_for_y(&self, degree_limit: Option<usize>) -> Result<(UniPoly<F>, UniPoly<F>)> {
        let limit = degree_limit.unwrap_or(4 * self.max_gen_degree());
        let span = self.span(self.default_bound(limit + 1));
        let y = UniPoly::y();
        for d in 0..=limit {
            let basis: Vec<&UniPoly<F>> = span.rows.range(..=d).map(|(_, r)| &r.poly).collect();
            if !span.rows.contains_key(&d) {
                continue;
            }
            let residuals: Vec<UniPoly<F>> = basis.iter().map(|r| span.residual(&(&y * *r)).0).collect();
            let width = d + 2;
            let mut rows: Vec<Vec<F>> = (0..width)
                .map(|e| residuals.iter().map(|r| r.coeff(e)).collect())
                .collect();
            let mut rhs = vec![F::zero(); width];
            rows.push(basis.iter().map(|r| r.coeff(d)).collect());
            rhs.push(F::one());
            if let Some(c) = solve(rows, rhs, basis.len()) {
                let h = basis
                    .iter()
                    .zip(&c)
                    .fold(UniPoly::zero(), |acc, (r, c)| &acc + &r.scale(c));
                let g = &y * &h;
                return Ok((g, h));
            }
        }
        Err(Error::FractionNotFound { bound: limit })
    }

    /// Verify `k[y]h^{n-1} ⊆ A` from memberships `y^m h^{n-1}`, `m < 2n`,
    /// then replay the induction identities up to `replay_to`.
    pub fn certificate_ideal(&self, g: &UniPoly<F>, h: &UniPoly<F>, replay_to: usize) -> Result<IdealCertificate<F>> {
        let y = UniPoly::y();
        if &y * h != *g || !h.is_monic() {
            return Err(Error::InvalidInput(format!(
                "expected monic h with y*h = g, got g = {}, h = {}",
                g.display("y"),
                h.display("y")
            )));
        }
        let n = h.degree().unwrap();
        if n <= 1 {
            return Ok(IdealCertificate {
                h_power: UniPoly::one(),
                checks: Vec::new(),
                replayed_to: replay_to,
            });
        }
        let hp = h.pow(n as u32 - 1);
        let mut checks = Vec::new();
        for m in 0..2 * n {
            let f = &UniPoly::monomial(m, F::one()) * &hp;
            checks.push((m, self.member_escalating(&f, m)?));
        }
        for m in 0..=replay_to {
            let lhs = &UniPoly::monomial(m, F::one()) * &hp;
            let rhs = if m < n {
                &g.pow(m as u32) * &h.pow((n - 1 - m) as u32)
            } else {
                let shift = UniPoly::monomial(m - n, F::one());
                let p_m = &shift * &(&UniPoly::monomial(n, F::one()) - h);
                debug_assert!(p_m.degree().is_none_or(|d| d < m));
                &(&(&shift * &hp) * h) + &(&p_m * &hp)
            };
            if lhs != rhs {
                return Err(Error::CertificateFailure { m, bound: 0 });
            }
        }
        Ok(IdealCertificate {
            h_power: hp,
            checks,
            replayed_to: replay_to,
        })
    }

    /// `y^j f ∈ A` for all `j < window`.
    pub fn passes_finite_test(&self, f: &UniPoly<F>, window: usize, bound: Option<usize>) -> bool {
        (0..window).all(|j| self.member(&f.shift(j), bound).is_member())
    }

    pub fn conductor_generator(&self) -> Result<ConductorResult<F>> {
        let (g, h) = self.fraction_for_y(None)?;
        let n = h.degree().unwrap_or(0);
        let ideal = self.certificate_ideal(&g, &h, 4 * n.max(1))?;
        let window = ideal.h_power.degree().unwrap_or(0);
        if window == 0 {
            return Ok(ConductorResult {
                u: UniPoly::one(),
                g,
                h,
                n,
                ideal,
                window,
                u_checks: Vec::new(),
            });
        }
        let first = self.default_bound(2 * window - 1);
        let u = match self.minimal_conductor_element(window, first) {
            Some(u) => u,
            None => self
                .minimal_conductor_element(window, 2 * first)
                .ok_or(Error::CertificateFailure {
                    m: window,
                    bound: 2 * first,
                })?,
        };
        let mut u_checks = Vec::new();
        for j in 0..window {
            u_checks.push((j, self.member_escalating(&u.shift(j), j)?));
        }
        Ok(ConductorResult {
            u,
            g,
            h,
            n,
            ideal,
            window,
            u_checks,
        })
    }

    // Degree by degree, solve for monic f = y^d + Σ c_i y^i with every
    // residual(y^j f) = 0, j < window.
    fn minimal_conductor_element(&self, window: usize, bound: usize) -> Option<UniPoly<F>> {
        let span = self.span(bound);
        let res: Vec<UniPoly<F>> = (0..2 * window)
            .map(|k| span.residual(&UniPoly::monomial(k, F::one())).0)
            .collect();
        for d in 0..=window {
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for j in 0..window {
                for e in 0..2 * window {
                    rows.push((0..d).map(|i| res[j + i].coeff(e)).collect::<Vec<F>>());
                    rhs.push(-res[j + d].coeff(e));
                }
            }
            if let Some(c) = solve(rows, rhs, d) {
                let mut coeffs = c;
                coeffs.push(F::one());
                return Some(UniPoly::new(coeffs));
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCertificate<F: Field> {
    /// `h^{n-1}`, or `1` when `n <= 1`.
    pub h_power: UniPoly<F>,
    /// Membership of `y^m h^{n-1}` for `m < 2n`.
    pub checks: Vec<(usize, MembershipCertificate<F>)>,
    pub replayed_to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConductorResult<F: Field> {
    pub u: UniPoly<F>,
    pub g: UniPoly<F>,
    pub h: UniPoly<F>,
    pub n: usize,
    pub ideal: IdealCertificate<F>,
    /// `deg h^{n-1}`: testing `y^j f` for `j` below this decides conductor membership.
    pub window: usize,
    /// Membership of `y^j u` for `j < window`.
    pub u_checks: Vec<(usize, MembershipCertificate<F>)>,
}

impl<F: Field> ConductorResult<F> {
    pub fn contains(&self, a: &CurveSubalgebra<F>, f: &UniPoly<F>) -> bool {
        a.passes_finite_test(f, self.window, None)
    }
}

/// Split an element of `k[y] ⊗ B` (with `y` the variable `0`) into
/// `Σ a_m(y) ⊗ m` over the `B`-monomials `m` of its normal form.
pub fn decompose_in_y<F: Field>(p: &Polynomial<F>) -> BTreeMap<Monomial, UniPoly<F>> {
    let mut out: BTreeMap<Monomial, Vec<F>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let e = m.exponent(0) as usize;
        let v = out.entry(m.without(0)).or_default();
        if v.len() <= e {
            v.resize(e + 1, F::zero());
        }
        v[e] = c.clone();
    }
    out.into_iter().map(|(m, v)| (m, UniPoly::new(v))).collect()
}

/// Quotient of `p` by a monic `u(y)` in `(k[y] ⊗ B)`, if exact.
pub fn divide_in_y<F: Field>(p: &Polynomial<F>, u: &UniPoly<F>) -> Option<Polynomial<F>> {
    let du = u.degree()? as u32;
    let up = u.to_polynomial(0);
    let mut rem = p.clone();
    let mut q = Polynomial::zero();
    while let Degree::Finite(k) = rem.degree_in(0) {
        if k < du {
            break;
        }
        let term = rem.coeff_in(0, k).mul_term(&Monomial::var(0, k - du), &F::one());
        rem -= &term * &up;
        q += term;
    }
    rem.is_zero().then_some(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    /// Why `φ` is not an exponential map of `A ⊗ B`; divisions are skipped
    /// when non-empty.
    pub hypothesis_violations: Vec<String>,
    /// `φ(y) · φ(h) = φ(g)` in `(k[y] ⊗ B)[t]`.
    pub fraction_consistent: bool,
    pub u_degree: Degree,
    /// `(i, D^i(u) / u)` for `1 <= i <= deg_φ(u)`; `None` marks a failed division.
    pub quotients: Vec<(usize, Option<String>)>,
}

impl DivisibilityReport {
    pub fn hypothesis_holds(&self) -> bool {
        self.hypothesis_violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.hypothesis_holds() && self.fraction_consistent && self.quotients.iter().all(|(_, q)| q.is_some())
    }
}

/// Check that `u` divides every `D^i(u)` in `k[y] ⊗ B`, after confirming
/// that `φ` maps the generators of `A ⊗ B` into `(A ⊗ B)[t]`.
pub fn check_u_divides_dn_u<F: Field>(
    phi: &ExponentialMap<F>,
    tp: &TensorProduct<F>,
    a: &CurveSubalgebra<F>,
    conductor: &ConductorResult<F>,
) -> Result<DivisibilityReport> {
    let t = tp.algebra();
    if phi.algebra() != t {
        return Err(Error::AlgebraMismatch(
            "map is not defined on the tensor product".into(),
        ));
    }
    let left = tp.left().source();
    if left.ngens() != 1 || !left.relations().generators().is_empty() {
        return Err(Error::AlgebraMismatch(
            "left factor must be the polynomial ring k[y]".into(),
        ));
    }
    let names = t.display_names();
    let mut candidates: Vec<(String, Polynomial<F>)> = a
        .gens()
        .iter()
        .map(|g| (g.display("y").to_string(), g.to_polynomial(0)))
        .collect();
    for i in 0..tp.right().source().ngens() {
        let v = tp.right_offset() + i;
        candidates.push((names[v].clone(), Polynomial::var(v)));
    }
    let mut violations = Vec::new();
    for (label, p) in &candidates {
        let e = t.element(p);
        for (i, d) in phi.derivation_coeffs(&e).iter().enumerate().skip(1) {
            for (m, comp) in decompose_in_y(d.rep()) {
                if !a.member(&comp, None).is_member() {
                    violations.push(format!(
                        "D^{i}({label}) has component {} at {} outside A",
                        comp.display("y"),
                        Polynomial::<F>::term(m, F::one()).display(&names)
                    ));
                }
            }
        }
    }
    let fraction_consistent = {
        let img = |f: &UniPoly<F>| phi.apply(&t.element(&f.to_polynomial(0)));
        t.reduce(&(img(&UniPoly::y()) * img(&conductor.h))) == img(&conductor.g)
    };
    let u = t.element(&conductor.u.to_polynomial(0));
    let u_degree = phi.phi_degree(&u);
    let mut quotients = Vec::new();
    if violations.is_empty() {
        let coeffs = phi.derivation_coeffs(&u);
        for (i, d) in coeffs.iter().enumerate().skip(1) {
            let q = divide_in_y(d.rep(), &conductor.u).map(|q| t.show(&q));
            quotients.push((i, q));
        }
    }
    Ok(DivisibilityReport {
        hypothesis_violations: violations,
        fraction_consistent,
        u_degree,
        quotients,
    })
}

/// Per-component view of an element `f = Σ a_m ⊗ m` of `k[y] ⊗ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCheck {
    pub monomial: String,
    pub in_conductor: bool,
    pub divisible_by_u: bool,
}

pub fn tensor_conductor_check<F: Field>(
    tp: &TensorProduct<F>,
    a: &CurveSubalgebra<F>,
    conductor: &ConductorResult<F>,
    f: &Polynomial<F>,
) -> Vec<ComponentCheck> {
    let t = tp.algebra();
    let names = t.display_names();
    decompose_in_y(&t.reduce(f))
        .into_iter()
        .map(|(m, comp)| ComponentCheck {
            monomial: Polynomial::<F>::term(m, F::one()).display(&names).to_string(),
            in_conductor: conductor.contains(a, &comp),
            divisible_by_u: conductor.u.divides(&comp),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{tensor, PresentedAlgebra};
    use crate::field::{Fp, Rational};

    type U = UniPoly<Rational>;

    fn cusp() -> CurveSubalgebra<Rational> {
        CurveSubalgebra::new(vec![U::from_i64s(&[0, 0, 1]), U::from_i64s(&[0, 0, 0, 1])])
    }

    fn node() -> CurveSubalgebra<Rational> {
        CurveSubalgebra::new(vec![U::from_i64s(&[0, -1, 1]), U::from_i64s(&[0, 0, -1, 1])])
    }

    #[test]
    fn membership() {
        let a = cusp();
        let m = a.member(&U::monomial(5, Rational::from_i64(1)), None);
        let cert = m.certificate.clone().unwrap();
        assert!(a.verify_certificate(&U::monomial(5, Rational::from_i64(1)), &cert));
        assert!(!a.verify_certificate(&U::monomial(4, Rational::from_i64(1)), &cert));
        // y^5 = g0 * g1
        let e = a.expand_certificate(&cert);
        assert_eq!(e, Polynomial::var(0) * Polynomial::var(1));
        for bound in [1, 5, 40] {
            assert!(!a.member(&U::y(), Some(bound)).is_member());
        }
        assert!(a.member(&U::one(), Some(0)).is_member());
        assert!(!a.member(&U::monomial(5, Rational::from_i64(1)), Some(4)).is_member());
    }

    #[test]
    fn fractions() {
        let (g, h) = cusp().fraction_for_y(None).unwrap();
        assert_eq!((g, h), (U::from_i64s(&[0, 0, 0, 1]), U::from_i64s(&[0, 0, 1])));
        let (g, h) = node().fraction_for_y(None).unwrap();
        assert_eq!((g, h), (U::from_i64s(&[0, 0, -1, 1]), U::from_i64s(&[0, -1, 1])));
        let line = CurveSubalgebra::new(vec![U::y()]);
        assert_eq!(line.fraction_for_y(None).unwrap(), (U::y(), U::one()));
        let k = CurveSubalgebra::<Rational>::new(vec![]);
        assert!(matches!(k.fraction_for_y(None), Err(Error::FractionNotFound { .. })));
    }

    #[test]
    fn ideal_certificates() {
        let a = node();
        let (g, h) = a.fraction_for_y(None).unwrap();
        let cert = a.certificate_ideal(&g, &h, 12).unwrap();
        assert_eq!(cert.h_power, h);
        assert_eq!(cert.checks.len(), 4);
        for (m, c) in &cert.checks {
            assert!(a.verify_certificate(&(&U::monomial(*m, Rational::from_i64(1)) * &h), c));
        }
        let line = CurveSubalgebra::new(vec![U::y()]);
        assert!(line
            .certificate_ideal(&U::from_i64s(&[0, 1, 1]), &U::from_i64s(&[1, 1]), 4)
            .unwrap()
            .checks
            .is_empty());
        assert!(matches!(a.certificate_ideal(&h, &g, 4), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn conductors() {
        assert_eq!(cusp().conductor_generator().unwrap().u, U::from_i64s(&[0, 0, 1]));
        assert_eq!(node().conductor_generator().unwrap().u, U::from_i64s(&[0, -1, 1]));
        let line = CurveSubalgebra::new(vec![U::y()]).conductor_generator().unwrap();
        assert_eq!((line.u, line.n), (U::one(), 0));
        let r = cusp().conductor_generator().unwrap();
        assert!(r.ideal.h_power.div_rem(&r.u).1.is_zero());
        assert_eq!(r.u_checks.len(), r.window);
    }

    #[test]
    fn conductor_over_f3() {
        type V = UniPoly<Fp<3>>;
        let a = CurveSubalgebra::new(vec![V::from_i64s(&[0, 0, 1]), V::from_i64s(&[0, 0, 0, 1])]);
        assert_eq!(a.conductor_generator().unwrap().u, V::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn divide_by_monic_in_y() {
        // (y^2 w + y^3) / y^2 = w + y with w = var 1
        let (y, w) = (Polynomial::<Rational>::var(0), Polynomial::var(1));
        let p = y.pow(2) * w.clone() + y.pow(3);
        assert_eq!(divide_in_y(&p, &U::from_i64s(&[0, 0, 1])), Some(w + y.clone()));
        assert_eq!(divide_in_y(&y, &U::from_i64s(&[0, 0, 1])), None);
    }

    fn ky_tensor_kw() -> TensorProduct<Rational> {
        let ky = PresentedAlgebra::<Rational>::polynomial_ring(&["y"]).unwrap();
        let kw = PresentedAlgebra::<Rational>::polynomial_ring(&["w"]).unwrap();
        tensor(&ky, &kw).unwrap()
    }

    #[test]
    fn divisibility_harness() {
        let tp = ky_tensor_kw();
        let t = tp.algebra();
        let a = cusp();
        let cond = a.conductor_generator().unwrap();
        let (y, w, tv) = (Polynomial::var(0), Polynomial::var(1), Polynomial::var(t.t_var()));

        // y -> y + w t moves A out of A ⊗ B: flagged, no division attempted
        let shift = ExponentialMap::new(t, vec![y.clone() + w.clone() * tv.clone(), w.clone()]).unwrap();
        let rep = check_u_divides_dn_u(&shift, &tp, &a, &cond).unwrap();
        assert!(!rep.hypothesis_holds());
        assert!(rep.quotients.is_empty());
        assert!(!rep.passed());

        // w -> w + y^2 t fixes k[y] and maps w into A ⊗ B
        let phi = ExponentialMap::new(t, vec![y.clone(), w.clone() + y.pow(2) * tv.clone()]).unwrap();
        let rep = check_u_divides_dn_u(&phi, &tp, &a, &cond).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.u_degree, Degree::Finite(0));

        // w -> w + y t maps w outside A ⊗ B
        let bad = ExponentialMap::new(t, vec![y.clone(), w.clone() + y * tv]).unwrap();
        assert!(!check_u_divides_dn_u(&bad, &tp, &a, &cond).unwrap().hypothesis_holds());

        let id = ExponentialMap::identity(t);
        assert!(check_u_divides_dn_u(&id, &tp, &a, &cond).unwrap().passed());
    }

    #[test]
    fn tensor_components() {
        let tp = ky_tensor_kw();
        let a = cusp();
        let cond = a.conductor_generator().unwrap();
        let (y, w) = (Polynomial::<Rational>::var(0), Polynomial::var(1));
        let f = y.pow(2) * w.clone() + y.pow(3) * w.pow(2);
        let checks = tensor_conductor_check(&tp, &a, &cond, &f);
        assert_eq!(checks.len(), 2);
        assert!(checks.iter().all(|c| c.in_conductor && c.divisible_by_u));
        let g = y.pow(2) * w + y.pow(3);
        let checks = tensor_conductor_check(&tp, &a, &cond, &g);
        assert!(checks.iter().all(|c| c.in_conductor == c.divisible_by_u));
        let h = y.clone() * y.clone() + y;
        assert!(tensor_conductor_check(&tp, &a, &cond, &h)
            .iter()
            .all(|c| !c.in_conductor && !c.divisible_by_u));
    }
}
