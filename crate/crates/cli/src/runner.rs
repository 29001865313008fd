//! Executes a parsed script over the field it declares.

use std::collections::HashMap;
use std::time::Instant;

use akinv_core::conductor::check_u_divides_dn_u;
use akinv_core::invariant::{check_degree_divisibility, check_minimal_element, default_pool, rewrite_with_pool};
use akinv_core::specialize::{find_good_point, fixes_left_factor, push_expmap, sigma_hom};
use akinv_core::{
    ak_upper_bound, invariant, tensor, AlgebraElement, AlgebraHom, CurveSubalgebra, Error, ExponentialMap, Field, Fp,
    GroebnerConfig, Monomial, Polynomial, PresentedAlgebra, Rational, Side, TensorProduct, UniPoly,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ast::*;
use crate::report::{Entry, Report, Status};

pub const DEFAULT_ITERATIVE_BOUND: u32 = 8;
const MAX_LISTED_FAILURES: usize = 5;

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Default `iterative` bound when a command does not give one.
    pub bound: Option<u32>,
    /// Total degree of the candidate pool for `invariant` and `rewrite`.
    pub pool_degree: Option<u32>,
    /// Adds seeded random sample elements to `iterative`.
    pub seed: Option<u64>,
    pub timing: bool,
    pub groebner_steps: Option<usize>,
    pub member_bound: Option<usize>,
}

impl Options {
    fn pool_degree(&self) -> u32 {
        self.pool_degree.unwrap_or(invariant::DEFAULT_POOL_DEGREE)
    }
}

struct Ring<F: Field> {
    algebra: PresentedAlgebra<F>,
    tensor: Option<TensorProduct<F>>,
}

struct Session<'o, F: Field> {
    opts: &'o Options,
    config: GroebnerConfig,
    rings: HashMap<String, Result<Ring<F>, String>>,
    maps: HashMap<String, (String, Result<ExponentialMap<F>, Error>)>,
    subalgebras: HashMap<String, CurveSubalgebra<F>>,
}

fn to_poly<F: Field>(e: &Expr, names: &[String], t: Option<usize>) -> Result<Polynomial<F>, Error> {
    Ok(match e {
        Expr::Int(n) => Polynomial::constant(F::from_bigint(n)),
        Expr::Frac(n, d) => Polynomial::constant(F::from_fraction(n, d)?),
        Expr::Var(id) => match names.iter().position(|n| *n == id.name) {
            Some(i) => Polynomial::var(i),
            None if id.name == "t" && t.is_some() => Polynomial::var(t.unwrap()),
            None => return Err(Error::UnknownVariable(id.name.clone())),
        },
        Expr::Neg(a) => -to_poly::<F>(a, names, t)?,
        Expr::Add(a, b) => to_poly::<F>(a, names, t)? + to_poly(b, names, t)?,
        Expr::Sub(a, b) => to_poly::<F>(a, names, t)? - to_poly(b, names, t)?,
        Expr::Mul(a, b) => to_poly::<F>(a, names, t)? * to_poly(b, names, t)?,
        Expr::Pow(a, k) => to_poly::<F>(a, names, t)?.pow(*k),
    })
}

/// Order map entries by generator index; missing generators map to themselves.
fn images_of<F: Field>(
    entries: &[MapEntry],
    names: &[String],
    t: Option<usize>,
    default_identity: bool,
) -> Result<Vec<Polynomial<F>>, Error> {
    let mut out = Vec::with_capacity(names.len());
    for (i, n) in names.iter().enumerate() {
        match entries.iter().find(|e| e.var.name == *n) {
            Some(e) => out.push(to_poly(&e.image, names, t)?),
            None if default_identity => out.push(Polynomial::var(i)),
            None => out.push(Polynomial::zero()),
        }
    }
    Ok(out)
}

fn is_map_rejection(e: &Error) -> bool {
    matches!(
        e,
        Error::NotExponential(_) | Error::NotLocallyNilpotent { .. } | Error::DerivationNotWellDefined { .. }
    )
}

fn classify(entry: &mut Entry, e: &Error) {
    match e {
        Error::NotExponential(vs) => {
            entry.fail(format!("not an exponential map: {} violation(s)", vs.len()));
            for v in vs {
                entry.witness("violation", v);
            }
        }
        Error::PoolMinimumNotGlobal { .. } | Error::NotOnVariety { .. } | Error::FieldTooSmall => {
            entry.fail(e.to_string())
        }
        e if is_map_rejection(e) => entry.fail(e.to_string()),
        Error::NotWellDefined { .. } => entry.fail(e.to_string()),
        _ => entry.error(e.to_string()),
    }
}

impl<F: Field> Session<'_, F> {
    fn ring(&self, name: &str) -> Result<&Ring<F>, Error> {
        match &self.rings[name] {
            Ok(r) => Ok(r),
            Err(e) => Err(Error::InvalidInput(format!("ring `{name}` could not be built: {e}"))),
        }
    }

    fn map(&self, name: &str) -> Result<&ExponentialMap<F>, Error> {
        match &self.maps[name].1 {
            Ok(m) => Ok(m),
            Err(e) => Err(Error::InvalidInput(format!(
                "exponential map `{name}` was rejected: {e}"
            ))),
        }
    }

    fn elements(&self, phi: &ExponentialMap<F>, exprs: &[Expr]) -> Result<Vec<AlgebraElement<F>>, Error> {
        let alg = phi.algebra();
        exprs
            .iter()
            .map(|e| Ok(alg.element(&to_poly(e, alg.names(), None)?)))
            .collect()
    }

    fn declare(&mut self, kind: &StmtKind, entry: &mut Entry) {
        match kind {
            StmtKind::Field(_) | StmtKind::Command(_) => {}
            StmtKind::Ring { name, def } => {
                let built = match def {
                    RingDef::Presented { gens, relations, .. } => {
                        let names: Vec<String> = gens.iter().map(|g| g.name.clone()).collect();
                        relations
                            .iter()
                            .map(|r| to_poly::<F>(r, &names, None))
                            .collect::<Result<Vec<_>, _>>()
                            .and_then(|rels| PresentedAlgebra::present(names, &rels, &self.config))
                            .map(|algebra| Ring { algebra, tensor: None })
                    }
                    RingDef::Tensor { left, right } => self.ring(&left.name).and_then(|l| {
                        let r = self.ring(&right.name)?;
                        let tp = tensor(&l.algebra, &r.algebra)?;
                        Ok(Ring {
                            algebra: tp.algebra().clone(),
                            tensor: Some(tp),
                        })
                    }),
                };
                match built {
                    Ok(r) => {
                        entry.summary = r.algebra.to_string();
                        self.rings.insert(name.name.clone(), Ok(r));
                    }
                    Err(e) => {
                        entry.error(e.to_string());
                        self.rings.insert(name.name.clone(), Err(e.to_string()));
                    }
                }
            }
            StmtKind::ExpMap { name, ring, def } => {
                let built = self.ring(&ring.name).and_then(|r| {
                    let alg = &r.algebra;
                    match def {
                        MapDef::Direct(entries) => {
                            ExponentialMap::new(alg, images_of(entries, alg.names(), Some(alg.t_var()), true)?)
                        }
                        MapDef::Exp { derivation, bound } => ExponentialMap::from_lnd(
                            alg,
                            images_of(derivation, alg.names(), None, false)?,
                            *bound as usize,
                        ),
                    }
                });
                match &built {
                    Ok(m) => entry.summary = m.to_string(),
                    Err(e) => classify(entry, e),
                }
                self.maps.insert(name.name.clone(), (ring.name.clone(), built));
            }
            StmtKind::Subalgebra { name, var, gens, .. } => {
                let names = vec![var.name.clone()];
                let built: Result<Vec<UniPoly<F>>, Error> = gens
                    .iter()
                    .map(|g| Ok(UniPoly::from_polynomial(&to_poly(g, &names, None)?, 0).expect("single variable")))
                    .collect();
                match built {
                    Ok(gens) => {
                        let mut s = CurveSubalgebra::new(gens);
                        if let Some(b) = self.opts.member_bound {
                            s = s.with_member_bound(b);
                        }
                        entry.summary = s.to_string();
                        self.subalgebras.insert(name.name.clone(), s);
                    }
                    Err(e) => entry.error(e.to_string()),
                }
            }
            StmtKind::Hom {
                source, target, images, ..
            } => {
                let built = self.ring(&source.name).and_then(|s| {
                    let t = self.ring(&target.name)?;
                    let imgs = images
                        .iter()
                        .map(|e| to_poly(&e.image, t.algebra.names(), None))
                        .collect::<Result<Vec<_>, _>>()?;
                    let mut ordered = Vec::new();
                    for n in s.algebra.names() {
                        match images.iter().position(|e| e.var.name == *n) {
                            Some(i) => ordered.push(imgs[i].clone()),
                            None => return Err(Error::InvalidInput(format!("no image given for `{n}`"))),
                        }
                    }
                    AlgebraHom::new(&s.algebra, &t.algebra, ordered)
                });
                match built {
                    Ok(h) => entry.summary = format!("{} -> {}", h.source(), h.target()),
                    Err(e) => classify(entry, &e),
                }
            }
        }
    }

    fn command(&self, cmd: &Command, entry: &mut Entry) -> Result<(), Error> {
        match cmd {
            Command::CheckExp { map } => match &self.maps[&map.name].1 {
                Ok(m) => {
                    let alg = m.algebra();
                    for (n, img) in alg.names().iter().zip(m.images()) {
                        entry.witness(format!("{n} ->"), alg.show(img));
                    }
                    let eps = m.eps1_automorphism()?;
                    entry.summary = "exponential map: counit, comultiplication and relations verified".into();
                    entry.witness(
                        "eps1 inverse",
                        eps.inverse
                            .images()
                            .iter()
                            .map(|p| alg.show(p))
                            .collect::<Vec<_>>()
                            .join(", "),
                    );
                }
                Err(e) => classify(entry, e),
            },
            Command::Deg { map, elements } => {
                let phi = self.map(&map.name)?;
                for a in self.elements(phi, elements)? {
                    entry.witness(format!("deg({a})"), phi.phi_degree(&a));
                }
            }
            Command::DCoeff { map, element } => {
                let phi = self.map(&map.name)?;
                let a = self.elements(phi, std::slice::from_ref(element))?.remove(0);
                for (i, d) in phi.derivation_coeffs(&a).iter().enumerate() {
                    entry.witness(format!("D^{i}({a})"), d);
                }
            }
            Command::Invariant { map } => {
                let phi = self.map(&map.name)?;
                let pool = default_pool(phi.algebra(), self.opts.pool_degree());
                let (x, n) = invariant::minimal_positive_degree(phi, &pool)?;
                entry.witness("x", &x);
                entry.witness("n", n);
                entry.witness("c = D^n(x)", phi.derivation_coeff(&x, n as usize));
                let facts = check_minimal_element(phi, &x);
                for i in &facts.non_invariant {
                    entry.fail("a derivative of the minimal element is not invariant");
                    entry.witness(format!("D^{i}(x) not invariant"), phi.derivation_coeff(&x, *i));
                }
                for i in &facts.nonzero_off_powers {
                    entry.fail("a derivative at a non-power index is nonzero");
                    entry.witness(format!("D^{i}(x) nonzero"), phi.derivation_coeff(&x, *i));
                }
                let div = check_degree_divisibility(phi, n, &pool);
                entry.witness(
                    "pool degrees divisible by n",
                    format!("{}/{}", div.checked - div.counterexamples.len(), div.checked),
                );
                for (a, d) in &div.counterexamples {
                    entry.fail("pool minimum is not the global minimum");
                    entry.witness(format!("deg({a})"), d);
                }
                if entry.status == Status::Pass {
                    entry.summary = format!("minimal positive degree {n} on a pool of {}", pool.len());
                }
            }
            Command::Iterative { map, bound } => {
                let phi = self.map(&map.name)?;
                let bound = bound.or(self.opts.bound).unwrap_or(DEFAULT_ITERATIVE_BOUND) as usize;
                let mut samples = phi.algebra().gens();
                if let Some(seed) = self.opts.seed {
                    samples.extend(random_elements(phi.algebra(), seed, 10));
                }
                let rep = phi.check_iterative(&samples, bound);
                entry.witness("identities checked", rep.identities_checked);
                entry.witness("samples", samples.len());
                if rep.passed() {
                    entry.summary = format!("D^i D^j = C(i+j,i) D^(i+j) for i+j <= {bound}");
                } else {
                    entry.fail(format!("{} identity failure(s)", rep.failures.len()));
                    for f in rep.failures.iter().take(MAX_LISTED_FAILURES) {
                        entry.witness(format!("a = {}, i = {}, j = {}", f.element, f.i, f.j), &f.difference);
                    }
                }
            }
            Command::Rewrite { map, elements } => {
                let phi = self.map(&map.name)?;
                let pool = default_pool(phi.algebra(), self.opts.pool_degree());
                for a in self.elements(phi, elements)? {
                    let rw = rewrite_with_pool(phi, &a, &pool)?;
                    let terms: Vec<String> = rw
                        .coefficients
                        .iter()
                        .enumerate()
                        .filter(|(_, e)| !e.is_zero())
                        .map(|(l, e)| format!("({e})*({})^{l}", rw.x))
                        .collect();
                    let rhs = if terms.is_empty() {
                        "0".to_string()
                    } else {
                        terms.join(" + ")
                    };
                    entry.witness(format!("({})^{} * ({a})", rw.c, rw.power), rhs);
                    if !rw.reconstructs() || !rw.coefficients_invariant(phi) {
                        entry.fail(format!("rewrite of {a} does not verify"));
                    }
                }
            }
            Command::Conductor { sub, check } => {
                let a = &self.subalgebras[&sub.name];
                let r = a.conductor_generator()?;
                let y = "y";
                entry.witness("u", r.u.display(y));
                entry.witness("g", r.g.display(y));
                entry.witness("h", r.h.display(y));
                entry.witness("n", r.n);
                entry.witness("h^(n-1)", r.ideal.h_power.display(y));
                entry.witness(
                    "ideal certificates",
                    format!(
                        "{} memberships, identities replayed to m = {}",
                        r.ideal.checks.len(),
                        r.ideal.replayed_to
                    ),
                );
                let ideal_ok = r
                    .ideal
                    .checks
                    .iter()
                    .all(|(m, c)| a.verify_certificate(&(&UniPoly::monomial(*m, F::one()) * &r.ideal.h_power), c));
                let u_ok = r.u_checks.iter().all(|(j, c)| a.verify_certificate(&r.u.shift(*j), c));
                if !ideal_ok || !u_ok {
                    entry.fail("a membership certificate did not replay");
                }
                if let Some(m) = check {
                    let phi = self.map(&m.name)?;
                    let ring = &self.maps[&m.name].0;
                    let Some(tp) = &self.ring(ring)?.tensor else {
                        return Err(Error::AlgebraMismatch(format!(
                            "`{}` is not defined on a tensor product",
                            m.name
                        )));
                    };
                    let rep = check_u_divides_dn_u(phi, tp, a, &r)?;
                    entry.witness("deg_phi(u)", rep.u_degree);
                    for v in &rep.hypothesis_violations {
                        entry.witness("hypothesis violated", v);
                    }
                    for (i, q) in &rep.quotients {
                        entry.witness(format!("D^{i}(u) / u"), q.as_deref().unwrap_or("not divisible"));
                    }
                    if !rep.hypothesis_holds() {
                        entry.fail(format!(
                            "`{}` does not map A ⊗ B into (A ⊗ B)[t]; divisibility not checked",
                            m.name
                        ));
                    } else if !rep.passed() {
                        entry.fail("u does not divide every D^i(u)");
                    }
                }
                if entry.status == Status::Pass {
                    entry.summary = format!("conductor generated by {}", r.u.display(y));
                }
            }
            Command::TensorExtend { map, with } => {
                let phi = self.map(&map.name)?;
                let b = self.ring(&with.name)?;
                let tp = tensor(phi.algebra(), &b.algebra)?;
                let ext = phi.extend_to_tensor(&tp, Side::Left)?;
                let t = ext.algebra();
                let mut fixed = Vec::new();
                for (i, n) in t.names().iter().enumerate() {
                    entry.witness(format!("{n} ->"), t.show(&ext.images()[i]));
                    if ext.is_invariant(&t.gen(i)) {
                        fixed.push(n.clone());
                    }
                }
                entry.summary = format!("fixed generators: {}", fixed.join(", "));
            }
            Command::Specialize { ring, avoid } => {
                let r = self.ring(&ring.name)?;
                let polys = avoid
                    .iter()
                    .map(|e| to_poly(e, r.algebra.names(), None))
                    .collect::<Result<Vec<_>, _>>()?;
                let pt = find_good_point(&r.algebra, &polys)?;
                for (n, v) in &pt.values {
                    entry.witness(n.clone(), v);
                }
                entry.witness("product value", &pt.witness);
                if !pt.check() {
                    entry.fail("stored witness does not re-check");
                }
            }
            Command::Push { map, ring, values } => {
                let phi = self.map(&map.name)?;
                let tp = self
                    .ring(&ring.name)?
                    .tensor
                    .as_ref()
                    .expect("parser checks tensor rings");
                let left_names = &tp.algebra().names()[..tp.right_offset()];
                let mut vals = Vec::new();
                for n in left_names {
                    let e = values
                        .iter()
                        .find(|v| v.var.name == *n)
                        .ok_or_else(|| Error::InvalidInput(format!("no value given for `{n}`")))?;
                    let p = to_poly::<F>(&e.image, &[], None)?;
                    vals.push(p.constant_value().unwrap_or_else(F::zero));
                }
                let sigma = sigma_hom(tp, &vals)?;
                match push_expmap(phi, tp, &sigma) {
                    Ok(pushed) => {
                        let b = pushed.psi.algebra();
                        for (n, img) in b.names().iter().zip(pushed.psi.images()) {
                            entry.witness(format!("{n} ->"), b.show(img));
                        }
                        entry.witness("iterative identities", pushed.iterative.identities_checked);
                        if pushed.iterative.passed() {
                            entry.summary = "pushed map verified".into();
                        } else {
                            entry.fail("pushed map is not iterative");
                        }
                    }
                    Err(e) => {
                        classify(entry, &e);
                        if !fixes_left_factor(phi, tp) {
                            entry.witness(
                                "diagnostic",
                                format!("`{}` does not fix the specialized factor", map.name),
                            );
                        }
                    }
                }
            }
            Command::AkUpperBound { maps, elements } => {
                let family = maps
                    .iter()
                    .map(|m| self.map(&m.name).cloned())
                    .collect::<Result<Vec<_>, _>>()?;
                let elems = self.elements(&family[0], elements)?;
                let mut inside = Vec::new();
                for m in ak_upper_bound(&family, &elems)? {
                    let fixed: Vec<&str> = maps
                        .iter()
                        .zip(&m.fixed_by)
                        .filter(|(_, b)| **b)
                        .map(|(id, _)| id.name.as_str())
                        .collect();
                    entry.witness(
                        format!("{} fixed by", m.element),
                        if fixed.is_empty() {
                            "none".into()
                        } else {
                            fixed.join(", ")
                        },
                    );
                    if m.in_intersection() {
                        inside.push(m.element);
                    }
                }
                entry.summary = format!(
                    "in the intersection of invariant rings: {}",
                    if inside.is_empty() {
                        "none".into()
                    } else {
                        inside.join(", ")
                    }
                );
            }
        }
        Ok(())
    }
}

fn random_elements<F: Field>(alg: &PresentedAlgebra<F>, seed: u64, count: usize) -> Vec<AlgebraElement<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let terms = (0..rng.gen_range(1..=4)).map(|_| {
                let mut exps = vec![0u32; alg.ngens()];
                for _ in 0..rng.gen_range(0..=3) {
                    exps[rng.gen_range(0..alg.ngens().max(1)).min(alg.ngens().saturating_sub(1))] += 1;
                }
                (Monomial::new(exps), F::from_i64(rng.gen_range(-3..=3)))
            });
            alg.element(&Polynomial::from_terms(terms))
        })
        .collect()
}

pub fn run_with<F: Field>(script: &Script, opts: &Options, declarations_only: bool) -> Report {
    let mut config = GroebnerConfig::default();
    if let Some(s) = opts.groebner_steps {
        config.max_steps = s;
    }
    let mut session: Session<'_, F> = Session {
        opts,
        config,
        rings: HashMap::new(),
        maps: HashMap::new(),
        subalgebras: HashMap::new(),
    };
    let mut report = Report {
        field: Some(F::name()),
        status: Status::Pass,
        error: None,
        declarations: Vec::new(),
        commands: Vec::new(),
    };
    for stmt in &script.stmts {
        let start = Instant::now();
        let mut entry = Entry::new(stmt.pos.line, stmt.to_string());
        match &stmt.kind {
            StmtKind::Field(_) => continue,
            StmtKind::Command(cmd) => {
                if declarations_only {
                    continue;
                }
                if let Err(e) = session.command(cmd, &mut entry) {
                    classify(&mut entry, &e);
                }
            }
            kind => session.declare(kind, &mut entry),
        }
        if opts.timing {
            entry.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
        match stmt.kind {
            StmtKind::Command(_) => report.commands.push(entry),
            _ => report.declarations.push(entry),
        }
    }
    report.finish();
    report
}

macro_rules! dispatch_primes {
    ($p:expr, $script:expr, $opts:expr, $decl:expr; $($prime:literal),*) => {
        match $p {
            $($prime => Some(run_with::<Fp<$prime>>($script, $opts, $decl)),)*
            _ => None,
        }
    };
}

/// Primes with a compiled field implementation.
pub const SUPPORTED_PRIMES: [u64; 18] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61];

pub fn run(script: &Script, opts: &Options, declarations_only: bool) -> Report {
    match script.field() {
        None | Some(FieldSpec::Q) => {
            let mut r = run_with::<Rational>(script, opts, declarations_only);
            if script.field().is_none() {
                r.field = None;
            }
            r
        }
        Some(FieldSpec::Fp(p)) => dispatch_primes!(p, script, opts, declarations_only;
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)
        .unwrap_or_else(|| {
            let mut r = Report::parse_failure(Error::UnsupportedCharacteristic(p).to_string());
            r.field = Some(FieldSpec::Fp(p).to_string());
            r
        }),
    }
}
