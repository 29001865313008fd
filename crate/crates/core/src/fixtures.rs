//! Standard algebras and maps used throughout the tests and examples.

use crate::algebra::{tensor, PresentedAlgebra, TensorProduct};
use crate::conductor::CurveSubalgebra;
use crate::expmap::ExponentialMap;
use crate::field::Field;
use crate::groebner::GroebnerConfig;
use crate::poly::{Polynomial, UniPoly};

fn c<F: Field>(v: i64) -> Polynomial<F> {
    Polynomial::constant(F::from_i64(v))
}

/// `k[X]` with `X -> X + t`.
pub fn translation<F: Field>() -> ExponentialMap<F> {
    let a = PresentedAlgebra::polynomial_ring(&["X"]).expect("valid names");
    ExponentialMap::new(&a, vec![Polynomial::var(0) + Polynomial::var(1)]).expect("translation is exponential")
}

/// `k[X]` with `X -> X + t^p`, exponential in characteristic `p`.
pub fn frobenius_translation<F: Field>() -> ExponentialMap<F> {
    let a = PresentedAlgebra::polynomial_ring(&["X"]).expect("valid names");
    let p = F::CHARACTERISTIC as u32;
    ExponentialMap::new(&a, vec![Polynomial::var(0) + Polynomial::var(1).pow(p)]).expect("Frobenius translation")
}

/// `A_n = k[x, y, z]/(x^n y - z^2 + 1)`.
pub fn danielewski_algebra<F: Field>(n: u32) -> PresentedAlgebra<F> {
    let (x, y, z) = (Polynomial::var(0), Polynomial::var(1), Polynomial::var(2));
    PresentedAlgebra::present(
        vec!["x".into(), "y".into(), "z".into()],
        &[x.pow(n) * y - z.pow(2) + Polynomial::one()],
        &GroebnerConfig::default(),
    )
    .expect("Danielewski surface")
}

/// `x -> x`, `z -> z + x^n t`, `y -> y + 2 z t + x^n t^2` on `A_n`.
pub fn danielewski_map<F: Field>(n: u32) -> ExponentialMap<F> {
    let a = danielewski_algebra(n);
    let (x, y, z, t) = (
        Polynomial::var(0),
        Polynomial::var(1),
        Polynomial::var(2),
        Polynomial::var(a.t_var()),
    );
    let xn = x.pow(n);
    let images = vec![
        x,
        y + c::<F>(2) * z.clone() * t.clone() + xn.clone() * t.pow(2),
        z + xn * t,
    ];
    ExponentialMap::new(&a, images).expect("Danielewski map")
}

/// The Danielewski map on `A_1` with the roles of `x` and `y` exchanged:
/// `y -> y`, `z -> z + y t`, `x -> x + 2 z t + y t^2`.
pub fn danielewski_swapped_map<F: Field>() -> ExponentialMap<F> {
    let a = danielewski_algebra(1);
    let (x, y, z, t) = (
        Polynomial::var(0),
        Polynomial::var(1),
        Polynomial::var(2),
        Polynomial::var(a.t_var()),
    );
    let images = vec![
        x + c::<F>(2) * z.clone() * t.clone() + y.clone() * t.pow(2),
        y.clone(),
        z + y * t,
    ];
    ExponentialMap::new(&a, images).expect("swapped Danielewski map")
}

/// The family `z -> z + f x^n t`, `y -> y + 2 f z t + f^2 x^n t^2` on `A_n`
/// for `f ∈ {1, x}`.
pub fn danielewski_family<F: Field>(n: u32) -> Vec<ExponentialMap<F>> {
    let a = danielewski_algebra(n);
    let (x, y, z, t) = (
        Polynomial::var(0),
        Polynomial::var(1),
        Polynomial::var(2),
        Polynomial::var(a.t_var()),
    );
    [Polynomial::one(), x.clone()]
        .into_iter()
        .map(|f| {
            let xn = x.pow(n);
            let images = vec![
                x.clone(),
                y.clone() + c::<F>(2) * f.clone() * z.clone() * t.clone() + f.pow(2) * xn.clone() * t.pow(2),
                z.clone() + f * xn * t.clone(),
            ];
            ExponentialMap::new(&a, images).expect("family member")
        })
        .collect()
}

/// `k[v, x]` with `v -> v`, `x -> x + v t`.
pub fn plane_map<F: Field>() -> ExponentialMap<F> {
    let a = PresentedAlgebra::polynomial_ring(&["v", "x"]).expect("valid names");
    let (v, x, t) = (Polynomial::var(0), Polynomial::var(1), Polynomial::var(2));
    ExponentialMap::new(&a, vec![v.clone(), x + v * t]).expect("plane map")
}

/// `A_1 ⊗ k[w]`.
pub fn danielewski_tensor_line<F: Field>() -> TensorProduct<F> {
    let b = PresentedAlgebra::polynomial_ring(&["w"]).expect("valid names");
    tensor(&danielewski_algebra(1), &b).expect("disjoint names")
}

/// `⟨y^2, y^3⟩`, the cusp.
pub fn cusp<F: Field>() -> CurveSubalgebra<F> {
    CurveSubalgebra::new(vec![UniPoly::from_i64s(&[0, 0, 1]), UniPoly::from_i64s(&[0, 0, 0, 1])])
}

/// `⟨y^2 - y, y^3 - y^2⟩`, the node gluing `0` and `1`.
pub fn node<F: Field>() -> CurveSubalgebra<F> {
    CurveSubalgebra::new(vec![
        UniPoly::from_i64s(&[0, -1, 1]),
        UniPoly::from_i64s(&[0, 0, -1, 1]),
    ])
}

pub fn full_line<F: Field>() -> CurveSubalgebra<F> {
    CurveSubalgebra::new(vec![UniPoly::y()])
}
