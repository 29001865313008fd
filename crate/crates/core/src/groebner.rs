//! Buchberger's algorithm, reduced Gröbner bases and normal forms.
//!
//! Pairs are processed lowest-lcm-degree first with the product and chain
//! criteria. Every reduction step counts against [`GroebnerConfig::max_steps`];
//! running out is an error, never a partial answer.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

pub const DEFAULT_MAX_STEPS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_steps: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_steps: DEFAULT_MAX_STEPS,
        }
    }
}

/// A reduced Gröbner basis: monic generators sorted by leading monomial,
/// descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    generators: Vec<Polynomial<F>>,
    order: MonomialOrder,
}

/// Monomial keyed by a monomial order, so a `BTreeMap` pops leading terms.
#[derive(Clone, PartialEq, Eq)]
struct Keyed {
    m: Monomial,
    order: MonomialOrder,
}

impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Keyed {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&self.m, &other.m)
    }
}

struct Element<F: Field> {
    poly: Polynomial<F>,
    lm: Monomial,
    lc: F,
    // Cofactor of the tracked divisor, when running a division basis.
    cof: Option<Polynomial<F>>,
}

impl<F: Field> Element<F> {
    fn new(poly: Polynomial<F>, cof: Option<Polynomial<F>>, order: MonomialOrder) -> Self {
        let (lm, lc) = poly
            .leading_term(order)
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("basis elements are nonzero");
        Element { poly, lm, lc, cof }
    }
}

struct StepCounter {
    used: usize,
    limit: Option<usize>,
}

impl StepCounter {
    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(Error::ResourceLimit {
                what: "Groebner reduction steps",
                limit,
            }),
            _ => Ok(()),
        }
    }
}

fn add_keyed<F: Field>(work: &mut BTreeMap<Keyed, F>, key: Keyed, c: F) {
    use std::collections::btree_map::Entry;
    match work.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get().clone() + c;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Full reduction of `f` by `basis`. Returns the remainder and, when every
/// used element carries a cofactor, the accumulated cofactor combination.
fn reduce<F: Field>(
    f: &Polynomial<F>,
    basis: &[Element<F>],
    order: MonomialOrder,
    steps: &mut StepCounter,
) -> Result<(Polynomial<F>, Polynomial<F>)> {
    let mut work: BTreeMap<Keyed, F> = f
        .terms()
        .map(|(m, c)| (Keyed { m: m.clone(), order }, c.clone()))
        .collect();
    let mut rem = Polynomial::zero();
    let mut quot = Polynomial::zero();
    while let Some((key, lc)) = work.pop_last() {
        match basis.iter().find(|g| g.lm.divides(&key.m)) {
            Some(g) => {
                steps.tick()?;
                let shift = g.lm.quotient_of(&key.m).expect("divisible");
                let coef = lc / g.lc.clone();
                for (m, c) in g.poly.terms() {
                    if *m == g.lm {
                        continue;
                    }
                    add_keyed(
                        &mut work,
                        Keyed {
                            m: m.mul(&shift),
                            order,
                        },
                        -(coef.clone() * c.clone()),
                    );
                }
                if let Some(cof) = &g.cof {
                    quot += cof.mul_term(&shift, &coef);
                }
            }
            None => rem.add_term(key.m, lc),
        }
    }
    Ok((rem, quot))
}

fn s_polynomial<F: Field>(a: &Element<F>, b: &Element<F>) -> (Polynomial<F>, Option<Polynomial<F>>) {
    let l = a.lm.lcm(&b.lm);
    let sa = a.lm.quotient_of(&l).unwrap();
    let sb = b.lm.quotient_of(&l).unwrap();
    let ca = a.lc.inv().unwrap();
    let cb = b.lc.inv().unwrap();
    let s = a.poly.mul_term(&sa, &ca) - b.poly.mul_term(&sb, &cb);
    let cof = match (&a.cof, &b.cof) {
        (Some(x), Some(y)) => Some(x.mul_term(&sa, &ca) - y.mul_term(&sb, &cb)),
        _ => None,
    };
    (s, cof)
}

/// Core Buchberger loop on already-prepared elements. Returns a (not yet
/// reduced) Gröbner basis.
fn buchberger_loop<F: Field>(
    mut basis: Vec<Element<F>>,
    order: MonomialOrder,
    steps: &mut StepCounter,
    cof_reducer: Option<&GroebnerBasis<F>>,
) -> Result<Vec<Element<F>>> {
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // Lowest lcm degree first, ties broken by the order, then indices.
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, p), (_, q)| {
                let lp = basis[p.0].lm.lcm(&basis[p.1].lm);
                let lq = basis[q.0].lm.lcm(&basis[q.1].lm);
                lp.degree()
                    .cmp(&lq.degree())
                    .then_with(|| order.cmp(&lp, &lq))
                    .then_with(|| p.cmp(q))
            })
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(idx);
        let (gi, gj) = (&basis[i], &basis[j]);
        if gi.lm.coprime(&gj.lm) {
            continue;
        }
        let l = gi.lm.lcm(&gj.lm);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (s, s_cof) = s_polynomial(gi, gj);
        let (r, q) = reduce(&s, &basis, order, steps)?;
        if r.is_zero() {
            continue;
        }
        let cof = s_cof.map(|c| {
            let c = c - q;
            match cof_reducer {
                Some(gb) => gb.normal_form(&c),
                None => c,
            }
        });
        let n = basis.len();
        basis.push(Element::new(r, cof, order));
        for k in 0..n {
            pairs.push((k, n));
        }
    }
    Ok(basis)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Field>(
    gens: &[Polynomial<F>],
    order: MonomialOrder,
    config: &GroebnerConfig,
) -> Result<GroebnerBasis<F>> {
    let mut steps = StepCounter {
        used: 0,
        limit: Some(config.max_steps),
    };
    let elems: Vec<Element<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Element::new(g.monic(order), None, order))
        .collect();
    if elems.iter().any(|e| e.lm.is_one()) {
        return Ok(GroebnerBasis {
            generators: vec![Polynomial::one()],
            order,
        });
    }
    let basis = buchberger_loop(elems, order, &mut steps, None)?;
    let reduced = interreduce(basis.into_iter().map(|e| e.poly).collect(), order, &mut steps)?;
    Ok(GroebnerBasis {
        generators: reduced,
        order,
    })
}

fn interreduce<F: Field>(
    polys: Vec<Polynomial<F>>,
    order: MonomialOrder,
    steps: &mut StepCounter,
) -> Result<Vec<Polynomial<F>>> {
    let mut elems: Vec<Element<F>> = polys
        .into_iter()
        .map(|p| Element::new(p.monic(order), None, order))
        .collect();
    if elems.iter().any(|e| e.lm.is_one()) {
        return Ok(vec![Polynomial::one()]);
    }
    // Minimal basis: drop elements whose leading monomial is a multiple of another's.
    let mut keep = vec![true; elems.len()];
    for i in 0..elems.len() {
        for j in 0..elems.len() {
            if i != j && keep[j] && elems[j].lm.divides(&elems[i].lm) && (elems[j].lm != elems[i].lm || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut k = 0;
    elems.retain(|_| {
        k += 1;
        keep[k - 1]
    });
    let mut out = Vec::with_capacity(elems.len());
    for i in 0..elems.len() {
        let head = Polynomial::term(elems[i].lm.clone(), F::one());
        let tail = &elems[i].poly - &head;
        let others: Vec<Element<F>> = elems
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, e)| Element {
                poly: e.poly.clone(),
                lm: e.lm.clone(),
                lc: e.lc.clone(),
                cof: None,
            })
            .collect();
        let (r, _) = reduce(&tail, &others, order, steps)?;
        out.push(&head + &r);
    }
    out.sort_by(|a, b| order.cmp(b.leading_monomial(order).unwrap(), a.leading_monomial(order).unwrap()));
    Ok(out)
}

impl<F: Field> GroebnerBasis<F> {
    /// Basis of the zero ideal.
    pub fn empty(order: MonomialOrder) -> Self {
        GroebnerBasis {
            generators: Vec::new(),
            order,
        }
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_one())
    }

    fn elements(&self) -> Vec<Element<F>> {
        self.generators
            .iter()
            .map(|g| Element::new(g.clone(), None, self.order))
            .collect()
    }

    /// The unique remainder of `f` modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        if self.generators.is_empty() {
            return f.clone();
        }
        let mut steps = StepCounter { used: 0, limit: None };
        reduce(f, &self.elements(), self.order, &mut steps)
            .expect("unbounded reduction")
            .0
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Prepare exact division by `c` in the quotient ring `k[X]/I`, where `I`
    /// is the ideal of this basis.
    pub fn division_basis(&self, c: &Polynomial<F>, config: &GroebnerConfig) -> Result<DivisionBasis<F>> {
        let c = self.normal_form(c);
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut elems: Vec<Element<F>> = self
            .generators
            .iter()
            .map(|g| Element::new(g.clone(), Some(Polynomial::zero()), self.order))
            .collect();
        elems.push(Element::new(c.clone(), Some(Polynomial::one()), self.order));
        let mut steps = StepCounter {
            used: 0,
            limit: Some(config.max_steps),
        };
        let basis = buchberger_loop(elems, self.order, &mut steps, Some(self))?;
        Ok(DivisionBasis {
            relations: self.clone(),
            divisor: c,
            basis,
            max_steps: config.max_steps,
        })
    }
}

/// Tracked Gröbner basis of `I + (c)`, each element `g` stored with a
/// cofactor `q` such that `g = q*c (mod I)`.
pub struct DivisionBasis<F: Field> {
    relations: GroebnerBasis<F>,
    divisor: Polynomial<F>,
    basis: Vec<Element<F>>,
    max_steps: usize,
}

impl<F: Field> DivisionBasis<F> {
    pub fn divisor(&self) -> &Polynomial<F> {
        &self.divisor
    }

    /// `Some(q)` in normal form with `q*c = e (mod I)`, or `None` if `c`
    /// does not divide `e` in the quotient ring.
    pub fn divide(&self, e: &Polynomial<F>) -> Result<Option<Polynomial<F>>> {
        let e = self.relations.normal_form(e);
        let mut steps = StepCounter {
            used: 0,
            limit: Some(self.max_steps),
        };
        let (r, q) = reduce(&e, &self.basis, self.relations.order, &mut steps)?;
        if !r.is_zero() {
            return Ok(None);
        }
        let q = self.relations.normal_form(&q);
        debug_assert!(self.relations.normal_form(&(&(&q * &self.divisor) - &e)).is_zero());
        Ok(Some(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    fn v(i: usize) -> P {
        P::var(i)
    }
    fn c(n: i64) -> P {
        P::constant(Rational::from_i64(n))
    }

    // x^n y - z^2 + 1 in variables x=0, y=1, z=2
    fn danielewski(n: u32) -> P {
        v(0).pow(n) * v(1) - v(2).pow(2) + c(1)
    }

    fn gb(gens: &[P], order: MonomialOrder) -> GroebnerBasis<Rational> {
        buchberger(gens, order, &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        for n in 1..=3 {
            let g = gb(&[danielewski(n)], MonomialOrder::GrevLex);
            assert_eq!(g.generators(), &[danielewski(n).monic(MonomialOrder::GrevLex)]);
        }
    }

    #[test]
    fn zero_generators() {
        assert!(gb(&[P::zero()], MonomialOrder::GrevLex).generators().is_empty());
    }

    #[test]
    fn redundant_power() {
        let g = gb(&[v(0).pow(2), v(0).pow(3)], MonomialOrder::Lex);
        assert_eq!(g.generators(), &[v(0).pow(2)]);
    }

    #[test]
    fn normal_forms() {
        for n in 1..=3 {
            let g = gb(&[danielewski(n)], MonomialOrder::GrevLex);
            let lt = v(0).pow(n) * v(1);
            assert_eq!(g.normal_form(&lt), v(2).pow(2) - c(1));
            assert!(g.normal_form(&danielewski(n)).is_zero());
            assert_eq!(g.normal_form(&v(2)), v(2));
            assert!(g.contains(&(danielewski(n) * v(2))));
            assert!(!g.contains(&v(0)));
            assert!(g.contains(&P::zero()));
        }
        let g = gb(&[danielewski(1)], MonomialOrder::GrevLex);
        assert_eq!(g.normal_form(&(v(0) * v(1))), v(2).pow(2) - c(1));
    }

    #[test]
    fn unit_ideal() {
        let g = gb(&[v(0) - c(1), v(0)], MonomialOrder::GrevLex);
        assert!(g.is_unit_ideal());
    }

    #[test]
    fn step_cap_is_an_error() {
        let gens = [
            v(0).pow(3) - v(1) * v(2),
            v(1).pow(3) - v(0) * v(2),
            v(2).pow(3) - v(0) * v(1),
        ];
        let r = buchberger(&gens, MonomialOrder::Lex, &GroebnerConfig { max_steps: 3 });
        assert!(matches!(r, Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn exact_division_in_quotient() {
        // In k[x,y,z]/(xy - z^2 + 1): z^2 - 1 = x*y, so x divides z^2 - 1.
        let g = gb(&[danielewski(1)], MonomialOrder::GrevLex);
        let db = g.division_basis(&v(0), &GroebnerConfig::default()).unwrap();
        let q = db.divide(&(v(2).pow(2) - c(1))).unwrap().unwrap();
        assert_eq!(q, v(1));
        assert_eq!(db.divide(&v(2)).unwrap(), None);
    }

    #[test]
    fn known_basis_twisted_cubic() {
        // (x^2 - y, x^3 - z) in lex x > y > z gives {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}
        let g = gb(&[v(0).pow(2) - v(1), v(0).pow(3) - v(2)], MonomialOrder::Lex);
        let expected = [
            v(0).pow(2) - v(1),
            v(0) * v(1) - v(2),
            v(0) * v(2) - v(1).pow(2),
            v(1).pow(3) - v(2).pow(2),
        ];
        assert_eq!(g.generators().len(), 4);
        for e in expected {
            assert!(g.generators().contains(&e), "missing {e:?}");
        }
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -3i64..4), 1..4)
            .prop_map(|ts| P::from_terms(ts.into_iter().map(|(e, k)| (Monomial::new(e), Rational::from_i64(k)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn normal_form_is_linear_and_idempotent(f in arb_poly(), g in arb_poly()) {
            let b = gb(&[danielewski(2), v(0) * v(2) - v(1)], MonomialOrder::GrevLex);
            let nf = |p: &P| b.normal_form(p);
            prop_assert_eq!(nf(&(&f + &g)), &nf(&f) + &nf(&g));
            prop_assert_eq!(nf(&nf(&f)), nf(&f));
        }

        #[test]
        fn ideal_absorbs_products(f in arb_poly(), h in arb_poly()) {
            let b = gb(&[danielewski(1)], MonomialOrder::GrevLex);
            let member = &danielewski(1) * &f;
            prop_assert!(b.contains(&member));
            prop_assert!(b.contains(&(&member * &h)));
        }

        #[test]
        fn basis_independent_of_input_order(a in arb_poly(), bb in arb_poly(), cc in arb_poly()) {
            let cfg = GroebnerConfig { max_steps: 20_000 };
            let one = buchberger(&[a.clone(), bb.clone(), cc.clone()], MonomialOrder::GrevLex, &cfg);
            let two = buchberger(&[cc, a, bb], MonomialOrder::GrevLex, &cfg);
            if let (Ok(one), Ok(two)) = (one, two) {
                prop_assert_eq!(one, two);
            }
        }
    }
}
