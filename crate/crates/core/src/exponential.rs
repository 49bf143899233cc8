//! Differential exponential maps: endomorphisms `e` with
//! `⟨0,1⟩;D[e] = 1` and `⊕;e = (1×e);D[e]`.
//!
//! These two equations say that `D[e](0, y) = y` and `e(x + y) = D[e](x, e(y))`,
//! the differential form of `e⁰ = 1` and `eˣ⁺ʸ = eˣeʸ`.

use crate::law::{CheckConfig, LawReport, SmoothCheck};
use crate::smooth::{Point, Primitive, SmoothError, SmoothMap};

/// A candidate exponential map on `ℝⁿ`.
#[derive(Debug, Clone)]
pub struct DiffExpMap {
    pub label: String,
    pub dim: usize,
    pub e: SmoothMap,
}

impl DiffExpMap {
    /// Wrap an endomorphism. Nothing about the exponential equations is assumed.
    pub fn new(label: impl Into<String>, e: SmoothMap) -> Result<DiffExpMap, SmoothError> {
        if e.dom() != e.cod() {
            return Err(SmoothError::dims("exponential must be an endomorphism", e.dom(), e.cod()));
        }
        let label = label.into();
        Ok(DiffExpMap { dim: e.dom(), e: e.named(label.clone()), label })
    }
}

fn unary(p: Primitive) -> SmoothMap {
    SmoothMap::primitive(p)
}

/// `(x, y) ↦ (eˣ·c(y), eˣ·s(y))` for a pair of scalar functions `c`, `s`.
fn twisted_exp(c: Primitive, s: Primitive) -> SmoothMap {
    let ex = SmoothMap::proj0(1, 1).then(&SmoothMap::exp()).unwrap();
    let comp = |p: Primitive| {
        let py = SmoothMap::proj1(1, 1).then(&unary(p)).unwrap();
        SmoothMap::pair(&ex, &py).unwrap().then(&SmoothMap::mul()).unwrap()
    };
    SmoothMap::pair(&comp(c), &comp(s)).unwrap()
}

pub fn real_exp() -> DiffExpMap {
    DiffExpMap::new("exp", SmoothMap::exp()).unwrap()
}

/// `ε(x, y) = (eˣcos y, eˣsin y)`, the complex exponential on `ℝ²`.
pub fn complex_exp() -> DiffExpMap {
    DiffExpMap::new("exp_C", twisted_exp(Primitive::Cos, Primitive::Sin)).unwrap()
}

/// `ε′(x, y) = (eˣcosh y, eˣsinh y)`, the split-complex exponential.
pub fn split_complex_exp() -> DiffExpMap {
    DiffExpMap::new("exp_split", twisted_exp(Primitive::Cosh, Primitive::Sinh)).unwrap()
}

/// `T(exp)(x, y) = (eˣ, eˣy)`, the dual-number exponential.
pub fn dual_exp() -> DiffExpMap {
    DiffExpMap::new("exp_dual", SmoothMap::exp().tangent()).unwrap()
}

/// `exp × ⋯ × exp` on `ℝⁿ`.
pub fn pointwise_exp(n: usize) -> DiffExpMap {
    let map = (1..n).fold(SmoothMap::exp(), |acc, _| SmoothMap::product(&acc, &SmoothMap::exp()));
    DiffExpMap::new(format!("exp_pointwise{n}"), map).unwrap()
}

/// The unique endomorphism of the terminal object `ℝ⁰`.
pub fn terminal_exp() -> DiffExpMap {
    DiffExpMap::new("exp_terminal", SmoothMap::identity(0)).unwrap()
}

/// `e × e′` on `ℝⁿ⁺ⁿ′`.
pub fn product_exp(e: &DiffExpMap, e2: &DiffExpMap) -> DiffExpMap {
    DiffExpMap::new(format!("{}×{}", e.label, e2.label), SmoothMap::product(&e.e, &e2.e)).unwrap()
}

/// `T(e)` on `ℝ²ⁿ`.
pub fn tangent_exp(e: &DiffExpMap) -> DiffExpMap {
    DiffExpMap::new(format!("T({})", e.label), e.e.tangent()).unwrap()
}

/// Every exponential shipped with the crate, in a fixed order.
pub fn builtin_exponentials() -> Vec<DiffExpMap> {
    vec![real_exp(), complex_exp(), split_complex_exp(), dual_exp(), pointwise_exp(2), terminal_exp()]
}

/// Left diagram: `⟨0,1⟩;D[e] = 1`.
pub fn dem_left_sides(e: &DiffExpMap) -> (SmoothMap, SmoothMap) {
    let n = e.dim;
    (SmoothMap::inj1(n, n).then(&e.e.differential()).unwrap(), SmoothMap::identity(n))
}

/// Right diagram: `⊕;e = (1×e);D[e]`.
pub fn dem_right_sides(e: &DiffExpMap) -> (SmoothMap, SmoothMap) {
    let n = e.dim;
    let lhs = SmoothMap::oplus(n).then(&e.e).unwrap();
    let rhs = SmoothMap::product(&SmoothMap::identity(n), &e.e).then(&e.e.differential()).unwrap();
    (lhs, rhs)
}

/// Add both exponential diagrams as parts of an existing check.
pub fn add_dem_parts(check: &mut SmoothCheck, e: &DiffExpMap) -> bool {
    let (l, r) = dem_left_sides(e);
    let left = check.compare(&format!("{}: ⟨0,1⟩D[e] = 1", e.label), &l, &r).unwrap();
    let (l, r) = dem_right_sides(e);
    let right = check.compare(&format!("{}: ⊕e = (1×e)D[e]", e.label), &l, &r).unwrap();
    left && right
}

/// Check both exponential diagrams. Each is sampled on its own stream and
/// reported as a separate part.
pub fn check_dem(e: &DiffExpMap, cfg: &CheckConfig) -> LawReport {
    let mut check = SmoothCheck::new(&format!("dem[{}]", e.label), cfg);
    add_dem_parts(&mut check, e);
    check.finish()
}

/// `e(0)`. For an exponential on a nonterminal carrier this is never zero.
pub fn value_at_zero(e: &DiffExpMap) -> Point {
    e.e.eval(&Point::new(vec![0.0; e.dim]).unwrap()).expect("e(0) is finite for builtins")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(e: &DiffExpMap, x: &[f64]) -> Vec<f64> {
        e.e.eval_at(x).unwrap()
    }

    #[test]
    fn builtin_values() {
        assert_eq!(at(&complex_exp(), &[0.0, 0.0]), vec![1.0, 0.0]);
        assert_eq!(at(&dual_exp(), &[0.0, 4.0]), vec![1.0, 4.0]);
        assert_eq!(at(&split_complex_exp(), &[0.0, 0.0]), vec![1.0, 0.0]);
        let t = at(&tangent_exp(&real_exp()), &[1.0, 2.0]);
        assert!((t[0] - 1f64.exp()).abs() < 1e-15 && (t[1] - 2.0 * 1f64.exp()).abs() < 1e-14);
        assert_eq!(at(&tangent_exp(&real_exp()), &[0.0, 0.0]), vec![1.0, 0.0]);
    }

    #[test]
    fn product_values_and_terminal_absorption() {
        let p = at(&product_exp(&real_exp(), &real_exp()), &[1.0, 1.0]);
        assert_eq!(p, vec![1f64.exp(); 2]);
        let absorbed = product_exp(&real_exp(), &terminal_exp());
        assert_eq!(absorbed.dim, 1);
        assert_eq!(at(&absorbed, &[0.5]), at(&real_exp(), &[0.5]));
    }

    #[test]
    fn builtins_are_exponential() {
        let cfg = CheckConfig::default().with_box(-3.0, 3.0);
        for e in builtin_exponentials() {
            let r = check_dem(&e, &cfg);
            assert!(r.pass, "{}: {:?}", e.label, r.witnesses);
        }
        assert!(check_dem(&product_exp(&real_exp(), &complex_exp()), &cfg).pass);
        assert!(check_dem(&tangent_exp(&complex_exp()), &cfg).pass);
    }

    #[test]
    fn negative_controls_fail() {
        let cfg = CheckConfig::default();
        let zero = DiffExpMap::new("zero", SmoothMap::zero(1, 1)).unwrap();
        let r = check_dem(&zero, &cfg);
        assert!(!r.pass && !r.parts[0].pass);
        let id = DiffExpMap::new("id", SmoothMap::identity(1)).unwrap();
        let r = check_dem(&id, &cfg);
        assert!(!r.pass && !r.parts[1].pass);
        // At (1, 0): ⊕ gives 1, while (1×e);D[e] gives D[1](1, 0) = 0.
        let (l, rr) = dem_right_sides(&id);
        assert_eq!(l.eval_at(&[1.0, 0.0]).unwrap(), vec![1.0]);
        assert_eq!(rr.eval_at(&[1.0, 0.0]).unwrap(), vec![0.0]);
    }

    #[test]
    fn not_reduced() {
        for e in builtin_exponentials().iter().filter(|e| e.dim > 0) {
            assert!(value_at_zero(e).coords().iter().any(|c| *c != 0.0));
        }
    }
}
