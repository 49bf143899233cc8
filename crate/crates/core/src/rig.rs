//! Differential rigs and the correspondence with exponential maps.
//!
//! An exponential map `e` induces a multiplication `⊙ₑ = (⟨0,1⟩×⟨1,0⟩);D²[e]`
//! and a unit `uₑ = e(0)`. Conversely a rig with an `e` satisfying
//! `D[e] = (e×1);⊙`, `e(0) = u` and `⊕;e = (e×e);⊙` makes `e` exponential.

use crate::exponential::{add_dem_parts, DiffExpMap};
use crate::law::{CheckConfig, LawReport, SmoothCheck};
use crate::smooth::{Point, SmoothMap};

/// A carrier `ℝⁿ` with a multiplication `⊙ : ℝ²ⁿ → ℝⁿ` and a unit point.
#[derive(Debug, Clone)]
pub struct DiffRig {
    pub label: String,
    pub dim: usize,
    pub mult: SmoothMap,
    pub unit: Point,
}

impl DiffRig {
    pub fn new(label: impl Into<String>, mult: SmoothMap, unit: Point) -> DiffRig {
        assert_eq!(mult.dom(), 2 * mult.cod(), "a multiplication has type A × A → A");
        assert_eq!(unit.dim(), mult.cod(), "the unit lives in the carrier");
        DiffRig { label: label.into(), dim: mult.cod(), mult, unit }
    }

    /// `ū = 0;u`, the constant map at the unit.
    pub fn unit_map(&self, dom: usize) -> SmoothMap {
        SmoothMap::constant(dom, self.unit.clone())
    }
}

/// A rig together with a candidate exponential on the same carrier.
#[derive(Debug, Clone)]
pub struct DiffExpRig {
    pub rig: DiffRig,
    pub exp: DiffExpMap,
}

impl DiffExpRig {
    pub fn new(rig: DiffRig, exp: DiffExpMap) -> DiffExpRig {
        assert_eq!(rig.dim, exp.dim, "rig and exponential share a carrier");
        DiffExpRig { rig, exp }
    }

    /// The rig induced by `e` itself.
    pub fn induced(exp: &DiffExpMap) -> DiffExpRig {
        DiffExpRig { rig: induced_rig(exp), exp: exp.clone() }
    }

    pub fn dim(&self) -> usize {
        self.rig.dim
    }
}

/// `⊙ₑ = (⟨0,1⟩×⟨1,0⟩);D²[e]`, i.e. `(x, y) ↦ D²[e]((0, x), (y, 0))`.
pub fn induced_mult(e: &DiffExpMap) -> SmoothMap {
    let n = e.dim;
    SmoothMap::product(&SmoothMap::inj1(n, n), &SmoothMap::inj0(n, n))
        .then(&e.e.differential_n(2))
        .unwrap()
        .named(format!("⊙[{}]", e.label))
}

/// `uₑ = e(0)`.
pub fn induced_unit(e: &DiffExpMap) -> Point {
    crate::exponential::value_at_zero(e)
}

pub fn induced_rig(e: &DiffExpMap) -> DiffRig {
    DiffRig::new(format!("rig[{}]", e.label), induced_mult(e), induced_unit(e))
}

/// Hand-written multiplications used as closed-form oracles.
pub mod closed_forms {
    /// `(x₁, y₁)·(x₂, y₂)` for complex numbers.
    pub fn complex(v: &[f64]) -> Vec<f64> {
        let (x1, y1, x2, y2) = (v[0], v[1], v[2], v[3]);
        vec![x1 * x2 - y1 * y2, x1 * y2 + x2 * y1]
    }

    /// Split-complex numbers, `j² = 1`.
    pub fn split(v: &[f64]) -> Vec<f64> {
        let (x1, y1, x2, y2) = (v[0], v[1], v[2], v[3]);
        vec![x1 * x2 + y1 * y2, x1 * y2 + x2 * y1]
    }

    /// Dual numbers, `ε² = 0`.
    pub fn dual(v: &[f64]) -> Vec<f64> {
        let (x1, y1, x2, y2) = (v[0], v[1], v[2], v[3]);
        vec![x1 * x2, x1 * y2 + y1 * x2]
    }

    /// Componentwise product on `ℝⁿ` given `(x, y)` flattened.
    pub fn pointwise(v: &[f64]) -> Vec<f64> {
        let n = v.len() / 2;
        (0..n).map(|i| v[i] * v[n + i]).collect()
    }

    pub fn real(v: &[f64]) -> Vec<f64> {
        vec![v[0] * v[1]]
    }
}

/// Add the rig-law parts for `r` to a check.
pub fn add_rig_law_parts(check: &mut SmoothCheck, r: &DiffRig) {
    let n = r.dim;
    let m = &r.mult;
    let id = SmoothMap::identity(n);
    let label = |s: &str| format!("{}: {s}", r.label);
    let cmp = |check: &mut SmoothCheck, s: &str, a: SmoothMap, b: SmoothMap| {
        check.compare(&label(s), &a, &b).expect("rig law sides share their type");
    };

    cmp(
        check,
        "associativity",
        SmoothMap::product(m, &id).then(m).unwrap(),
        SmoothMap::associator(n, n, n).then(&SmoothMap::product(&id, m)).unwrap().then(m).unwrap(),
    );
    cmp(check, "commutativity", SmoothMap::swap(n, n).then(m).unwrap(), m.clone());
    let unit_right = SmoothMap::pair(&id, &r.unit_map(n)).unwrap().then(m).unwrap();
    cmp(check, "right unit", unit_right, id.clone());
    let unit_left = SmoothMap::pair(&r.unit_map(n), &id).unwrap().then(m).unwrap();
    cmp(check, "left unit", unit_left, id.clone());

    // D[⊙]((x, y), (x′, y′)) = x ⊙ y′ + x′ ⊙ y
    let p0 = SmoothMap::proj0(n, n);
    let p1 = SmoothMap::proj1(n, n);
    let bilinear_rhs =
        SmoothMap::add(&SmoothMap::product(&p0, &p1).then(m).unwrap(), &SmoothMap::product(&p1, &p0).then(m).unwrap())
            .unwrap();
    cmp(check, "bilinearity", m.differential(), bilinear_rhs);
    cmp(check, "annihilation right", SmoothMap::inj0(n, n).then(m).unwrap(), SmoothMap::zero(n, n));
    cmp(check, "annihilation left", SmoothMap::inj1(n, n).then(m).unwrap(), SmoothMap::zero(n, n));

    // x ⊙ (y + z) = x ⊙ y + x ⊙ z, on A × (A × A)
    let mm = SmoothMap::product(m, m);
    let left_dist = SmoothMap::product(&id, &SmoothMap::oplus(n)).then(m).unwrap();
    let left_rhs = SmoothMap::pair(&SmoothMap::product(&id, &p0), &SmoothMap::product(&id, &p1))
        .unwrap()
        .then(&mm)
        .unwrap()
        .then(&SmoothMap::oplus(n))
        .unwrap();
    cmp(check, "left distributivity", left_dist, left_rhs);
    // (x + y) ⊙ z = x ⊙ z + y ⊙ z, on (A × A) × A
    let right_dist = SmoothMap::product(&SmoothMap::oplus(n), &id).then(m).unwrap();
    let right_rhs = SmoothMap::pair(&SmoothMap::product(&p0, &id), &SmoothMap::product(&p1, &id))
        .unwrap()
        .then(&mm)
        .unwrap()
        .then(&SmoothMap::oplus(n))
        .unwrap();
    cmp(check, "right distributivity", right_dist, right_rhs);
}

/// Commutative monoid laws, bilinearity, annihilation and distributivity.
pub fn check_rig_laws(r: &DiffRig, cfg: &CheckConfig) -> LawReport {
    let mut check = SmoothCheck::new(&format!("rig_laws[{}]", r.label), cfg);
    add_rig_law_parts(&mut check, r);
    check.finish()
}

/// The three `des` diagrams, plus the exponential diagrams for `e` they imply.
pub fn add_des_parts(check: &mut SmoothCheck, x: &DiffExpRig) {
    let n = x.dim();
    let e = &x.exp.e;
    let m = &x.rig.mult;
    let label = |s: &str| format!("{}/{}: {s}", x.rig.label, x.exp.label);
    let id = SmoothMap::identity(n);
    check.compare(&label("D[e] = (e×1)⊙"), &e.differential(), &SmoothMap::product(e, &id).then(m).unwrap()).unwrap();
    let zero = Point::new(vec![0.0; n]).unwrap();
    let e0 = e.eval(&zero);
    let unit = x.rig.unit.clone();
    check.compare_at(&label("0e = u"), &[(zero.to_string(), e0.map(|p| (p.into_coords(), unit.into_coords())))]);
    check
        .compare(
            &label("⊕e = (e×e)⊙"),
            &SmoothMap::oplus(n).then(e).unwrap(),
            &SmoothMap::product(e, e).then(m).unwrap(),
        )
        .unwrap();
    add_dem_parts(check, &x.exp);
}

/// Check the `des` diagrams and that they make `e` an exponential map.
pub fn check_des(x: &DiffExpRig, cfg: &CheckConfig) -> LawReport {
    let mut check = SmoothCheck::new(&format!("des[{}/{}]", x.rig.label, x.exp.label), cfg);
    add_des_parts(&mut check, x);
    check.finish()
}

/// `D²[e]((a, b), (c, d))` against `D[e](a, d) + D[e](a, b) ⊙ c`, i.e.
/// `(π₀×π₁);D[e] + (D[e]×π₀);⊙`.
pub fn second_differential_sides(x: &DiffExpRig) -> (SmoothMap, SmoothMap) {
    let n = x.dim();
    let de = x.exp.e.differential();
    let p0 = SmoothMap::proj0(n, n);
    let p1 = SmoothMap::proj1(n, n);
    let rhs = SmoothMap::add(
        &SmoothMap::product(&p0, &p1).then(&de).unwrap(),
        &SmoothMap::product(&de, &p0).then(&x.rig.mult).unwrap(),
    )
    .unwrap();
    (x.exp.e.differential_n(2), rhs)
}

/// Recover the rig from `e` and compare with the given one, and verify the
/// second-differential identity used to prove it.
pub fn add_roundtrip_parts(check: &mut SmoothCheck, x: &DiffExpRig) {
    let label = |s: &str| format!("{}/{}: {s}", x.rig.label, x.exp.label);
    check.compare(&label("⊙ₑ = ⊙"), &induced_mult(&x.exp), &x.rig.mult).unwrap();
    let u = induced_unit(&x.exp);
    check.compare_at(&label("uₑ = u"), &[("⊤".to_string(), Ok((u.into_coords(), x.rig.unit.clone().into_coords())))]);
    let (l, r) = second_differential_sides(x);
    check.compare(&label("D²[e] identity"), &l, &r).unwrap();
}

pub fn check_roundtrip(x: &DiffExpRig, cfg: &CheckConfig) -> LawReport {
    let mut check = SmoothCheck::new(&format!("roundtrip[{}/{}]", x.rig.label, x.exp.label), cfg);
    add_roundtrip_parts(&mut check, x);
    check.finish()
}

/// `⊙_{e×e′} = c;(⊙ₑ × ⊙ₑ′)` and `u_{e×e′} = (uₑ, uₑ′)`.
pub fn add_product_compat_parts(check: &mut SmoothCheck, e: &DiffExpMap, e2: &DiffExpMap) {
    let prod = crate::exponential::product_exp(e, e2);
    let (n, k) = (e.dim, e2.dim);
    let rhs =
        SmoothMap::interchange(n, k, n, k).then(&SmoothMap::product(&induced_mult(e), &induced_mult(e2))).unwrap();
    let tag = &prod.label;
    check.compare(&format!("{tag}: ⊙ = c(⊙×⊙′)"), &induced_mult(&prod), &rhs).unwrap();
    let expected = induced_unit(e).concat(&induced_unit(e2));
    check.compare_at(
        &format!("{tag}: u = ⟨u, u′⟩"),
        &[("⊤".into(), Ok((induced_unit(&prod).into_coords(), expected.into_coords())))],
    );
}

/// `⊙_{T(e)} = c;T(⊙ₑ)` and `u_{T(e)} = (uₑ, 0)`.
pub fn add_tangent_compat_parts(check: &mut SmoothCheck, e: &DiffExpMap) {
    let t = crate::exponential::tangent_exp(e);
    let n = e.dim;
    let rhs = SmoothMap::interchange(n, n, n, n).then(&induced_mult(e).tangent()).unwrap();
    let tag = &t.label;
    check.compare(&format!("{tag}: ⊙ = cT(⊙)"), &induced_mult(&t), &rhs).unwrap();
    let expected = induced_unit(e).concat(&Point::new(vec![0.0; n]).unwrap());
    check.compare_at(
        &format!("{tag}: u = ⟨u, 0⟩"),
        &[("⊤".into(), Ok((induced_unit(&t).into_coords(), expected.into_coords())))],
    );
}

/// Product and tangent compatibility of the induced rig, on the builtins.
pub fn check_construction_compat(cfg: &CheckConfig) -> LawReport {
    use crate::exponential::{complex_exp, real_exp, split_complex_exp};
    let mut check = SmoothCheck::new("construction_compat", cfg);
    add_product_compat_parts(&mut check, &real_exp(), &complex_exp());
    add_product_compat_parts(&mut check, &complex_exp(), &split_complex_exp());
    add_tangent_compat_parts(&mut check, &real_exp());
    add_tangent_compat_parts(&mut check, &complex_exp());
    check.finish()
}

/// Rigs whose multiplications are written out by hand.
pub mod explicit {
    use super::*;

    fn point(v: &[f64]) -> Point {
        Point::new(v.to_vec()).unwrap()
    }

    fn coord(dom: usize, i: usize) -> SmoothMap {
        SmoothMap::slice(dom, i, 1).unwrap()
    }

    fn prod(dom: usize, i: usize, j: usize, sign: f64) -> SmoothMap {
        let p = SmoothMap::pair(&coord(dom, i), &coord(dom, j)).unwrap().then(&SmoothMap::mul()).unwrap();
        if sign < 0.0 {
            p.then(&SmoothMap::primitive(crate::smooth::Primitive::Scale(-1.0))).unwrap()
        } else {
            p
        }
    }

    fn sum(a: SmoothMap, b: SmoothMap) -> SmoothMap {
        SmoothMap::add(&a, &b).unwrap()
    }

    /// `(x₁x₂ + s·y₁y₂, x₁y₂ + x₂y₁)` on coordinates `(x₁, y₁, x₂, y₂)`.
    fn quadratic(label: &str, s: f64, unit: &[f64]) -> DiffRig {
        let first = if s == 0.0 { prod(4, 0, 2, 1.0) } else { sum(prod(4, 0, 2, 1.0), prod(4, 1, 3, s)) };
        let second = sum(prod(4, 0, 3, 1.0), prod(4, 2, 1, 1.0));
        DiffRig::new(label, SmoothMap::pair(&first, &second).unwrap(), point(unit))
    }

    pub fn real() -> DiffRig {
        DiffRig::new("real", SmoothMap::mul(), point(&[1.0]))
    }

    pub fn complex() -> DiffRig {
        quadratic("complex", -1.0, &[1.0, 0.0])
    }

    pub fn split() -> DiffRig {
        quadratic("split", 1.0, &[1.0, 0.0])
    }

    pub fn dual() -> DiffRig {
        quadratic("dual", 0.0, &[1.0, 0.0])
    }

    pub fn pointwise(n: usize) -> DiffRig {
        let comps: Vec<SmoothMap> = (0..n).map(|i| prod(2 * n, i, n + i, 1.0)).collect();
        let mult = comps[1..].iter().fold(comps[0].clone(), |acc, c| SmoothMap::pair(&acc, c).unwrap());
        DiffRig::new(format!("pointwise{n}"), mult, point(&vec![1.0; n]))
    }

    /// `(ℝ, +, 0)`: a commutative monoid whose operation is not bilinear.
    pub fn additive() -> DiffRig {
        DiffRig::new("additive", SmoothMap::oplus(1), point(&[0.0]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponential::*;

    fn approx(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn induced_multiplications_match_examples() {
        assert!(approx(&induced_mult(&real_exp()).eval_at(&[2.0, 3.0]).unwrap(), &[6.0]));
        assert!(approx(&induced_mult(&complex_exp()).eval_at(&[0.0, 1.0, 0.0, 1.0]).unwrap(), &[-1.0, 0.0]));
        assert!(approx(&induced_mult(&dual_exp()).eval_at(&[1.0, 2.0, 3.0, 4.0]).unwrap(), &[3.0, 10.0]));
        assert!(approx(&induced_mult(&split_complex_exp()).eval_at(&[0.0, 1.0, 0.0, 1.0]).unwrap(), &[1.0, 0.0]));
    }

    #[test]
    fn induced_units() {
        assert_eq!(induced_unit(&real_exp()).coords(), &[1.0]);
        assert_eq!(induced_unit(&complex_exp()).coords(), &[1.0, 0.0]);
        assert_eq!(induced_unit(&pointwise_exp(2)).coords(), &[1.0, 1.0]);
        let u = induced_unit(&product_exp(&real_exp(), &complex_exp()));
        assert_eq!(u.coords(), &[1.0, 1.0, 0.0]);
        assert_eq!(induced_unit(&tangent_exp(&real_exp())).coords(), &[1.0, 0.0]);
    }

    #[test]
    fn explicit_rigs_obey_rig_laws() {
        let cfg = CheckConfig::default();
        for r in [explicit::real(), explicit::complex(), explicit::split(), explicit::dual(), explicit::pointwise(2)] {
            let rep = check_rig_laws(&r, &cfg);
            assert!(rep.pass, "{}: {:?}", r.label, rep.witnesses);
        }
    }

    #[test]
    fn additive_monoid_is_not_bilinear() {
        let rep = check_rig_laws(&explicit::additive(), &CheckConfig::default());
        assert!(!rep.pass);
        assert!(!rep.part("additive: bilinearity").unwrap().pass);
        let r = explicit::additive();
        // At (1,1,1,1): D[⊕] gives 2 while the bilinear form gives 4.
        let lhs = r.mult.differential().eval_at(&[1.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(lhs, vec![2.0]);
        let p0 = SmoothMap::proj0(1, 1);
        let p1 = SmoothMap::proj1(1, 1);
        let form = SmoothMap::add(
            &SmoothMap::product(&p0, &p1).then(&r.mult).unwrap(),
            &SmoothMap::product(&p1, &p0).then(&r.mult).unwrap(),
        )
        .unwrap();
        assert_eq!(form.eval_at(&[1.0, 1.0, 1.0, 1.0]).unwrap(), vec![4.0]);
    }

    #[test]
    fn des_examples() {
        let cfg = CheckConfig::default();
        assert!(check_des(&DiffExpRig::new(explicit::real(), real_exp()), &cfg).pass);
        assert!(check_des(&DiffExpRig::new(explicit::complex(), complex_exp()), &cfg).pass);
        let id = DiffExpMap::new("id", SmoothMap::identity(1)).unwrap();
        let rep = check_des(&DiffExpRig::new(explicit::real(), id), &cfg);
        assert!(!rep.pass);
    }

    #[test]
    fn tangent_compat_spot_value() {
        let t = tangent_exp(&real_exp());
        let lhs = induced_mult(&t).eval_at(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        let rhs = SmoothMap::interchange(1, 1, 1, 1)
            .then(&induced_mult(&real_exp()).tangent())
            .unwrap()
            .eval_at(&[1.0, 2.0, 3.0, 4.0])
            .unwrap();
        assert!(approx(&lhs, &[3.0, 10.0]) && approx(&rhs, &[3.0, 10.0]));
    }
}
