//! Specialization of parameters: points avoiding finitely many zero sets, the
//! evaluation map `σ: A ⊗ B -> B`, and the pushed-forward map `ψ = σφ`.

use crate::algebra::{AlgebraHom, PresentedAlgebra, TensorProduct};
use crate::error::{Error, Result};
use crate::expmap::{ExponentialMap, IterativeReport};
use crate::field::Field;
use crate::poly::Polynomial;

pub const PUSH_ITERATIVE_BOUND: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationPoint<F: Field> {
    pub values: Vec<(String, F)>,
    /// Product of the avoid-polynomials.
    pub avoided: Polynomial<F>,
    /// `avoided` evaluated at `values`, nonzero.
    pub witness: F,
}

impl<F: Field> SpecializationPoint<F> {
    pub fn check(&self) -> bool {
        let v = evaluate(
            &self.avoided,
            &self.values.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>(),
        );
        !v.is_zero() && v == self.witness
    }
}

fn evaluate<F: Field>(p: &Polynomial<F>, values: &[F]) -> F {
    let sub = values
        .iter()
        .enumerate()
        .map(|(i, c)| (i, Polynomial::constant(c.clone())))
        .collect();
    p.substitute(&sub).constant_value().unwrap_or_else(F::zero)
}

// Tuples in {0..side-1}^k that have at least one coordinate equal to side-1,
// in lexicographic order.
fn shell(k: usize, side: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; k];
    loop {
        if cur.iter().any(|&c| c + 1 == side) {
            out.push(cur.clone());
        }
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < side {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// First point, in a growing box `{0, 1, ..., b}^k` searched shell by shell,
/// where no avoid-polynomial vanishes. The parameters are the generators of
/// `params`, which must be a polynomial ring.
pub fn find_good_point<F: Field>(
    params: &PresentedAlgebra<F>,
    avoid: &[Polynomial<F>],
) -> Result<SpecializationPoint<F>> {
    if !params.relations().generators().is_empty() {
        return Err(Error::RootPickingUnsupported);
    }
    if avoid.iter().any(|p| p.is_zero()) {
        return Err(Error::InvalidInput("cannot avoid the zero polynomial".into()));
    }
    let k = params.ngens();
    if let Some(p) = avoid.iter().find(|p| p.width() > k) {
        return Err(Error::InvalidInput(format!(
            "{} uses variables outside the parameters",
            params.show(p)
        )));
    }
    let product = avoid.iter().fold(Polynomial::one(), |acc, p| acc * p.clone());
    // a nonzero polynomial of degree d has a non-root in {0..d}^k
    let max_side = product.total_degree().finite().unwrap_or(0) as u64 + 1;
    let limit = F::cardinality().map_or(max_side, |q| q.min(max_side));
    if k == 0 {
        let witness = evaluate(&product, &[]);
        return Ok(SpecializationPoint {
            values: Vec::new(),
            avoided: product,
            witness,
        });
    }
    for side in 1..=limit {
        for tuple in shell(k, side) {
            let values: Vec<F> = tuple
                .iter()
                .map(|&i| F::enumerate(i).expect("index below cardinality"))
                .collect();
            let witness = evaluate(&product, &values);
            if !witness.is_zero() {
                let values = params.names().iter().cloned().zip(values).collect();
                return Ok(SpecializationPoint {
                    values,
                    avoided: product,
                    witness,
                });
            }
        }
    }
    Err(Error::FieldTooSmall)
}

/// `σ: A ⊗ B -> B` sending the generators of `A` to `values` and fixing `B`.
pub fn sigma_hom<F: Field>(tp: &TensorProduct<F>, values: &[F]) -> Result<AlgebraHom<F>> {
    let a = tp.left().source();
    let b = tp.right().source();
    if values.len() != a.ngens() {
        return Err(Error::ImageCount {
            expected: a.ngens(),
            found: values.len(),
        });
    }
    for r in a.relations().generators() {
        let v = evaluate(r, values);
        if !v.is_zero() {
            return Err(Error::NotOnVariety {
                relation: a.show(r),
                value: v.to_string(),
            });
        }
    }
    let images = values
        .iter()
        .map(|c| Polynomial::constant(c.clone()))
        .chain((0..b.ngens()).map(Polynomial::var))
        .collect();
    AlgebraHom::new(tp.algebra(), b, images)
}

#[derive(Clone, Debug)]
pub struct PushedMap<F: Field> {
    pub psi: ExponentialMap<F>,
    pub iterative: IterativeReport,
}

/// `ψ(b) = σ(φ(1 ⊗ b))`, re-verified from scratch, with iterativity checked
/// on the generators of `B`.
pub fn push_expmap<F: Field>(
    phi: &ExponentialMap<F>,
    tp: &TensorProduct<F>,
    sigma: &AlgebraHom<F>,
) -> Result<PushedMap<F>> {
    if phi.algebra() != tp.algebra() || sigma.source() != tp.algebra() {
        return Err(Error::AlgebraMismatch(
            "map and specialization must live on the same tensor product".into(),
        ));
    }
    let b = tp.right().source();
    let images = (0..b.ngens())
        .map(|i| sigma.apply_poly(&phi.apply_poly(&Polynomial::var(tp.right_offset() + i))))
        .collect();
    let psi = ExponentialMap::new(b, images)?;
    let iterative = psi.check_iterative(&b.gens(), PUSH_ITERATIVE_BOUND);
    Ok(PushedMap { psi, iterative })
}

/// Whether `φ` fixes every generator of the left factor, the condition under
/// which `σφ` is guaranteed to be exponential.
pub fn fixes_left_factor<F: Field>(phi: &ExponentialMap<F>, tp: &TensorProduct<F>) -> bool {
    tp.left()
        .images()
        .iter()
        .all(|p| phi.is_invariant(&tp.algebra().element(p)))
}
