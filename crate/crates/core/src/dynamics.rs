//! Dynamical systems `(A, a₀, a₁)` and their solutions.
//!
//! A solution is an `f` with `f(0) = a₀` whose derivative is driven by `a₁`:
//! in a rig, `D[f](x, y) = a₁(f(x)) ⊙ y`. Exponential maps solve `(A, u, 1)`,
//! and `(x, y) ↦ e(a ⊙ x) ⊙ a₀(y)` solves the linear system `(A, a₀, ⊙ᵃ)`.

use crate::law::{CheckConfig, LawReport, SmoothCheck};
use crate::rig::{DiffExpRig, DiffRig};
use crate::smooth::{Point, SmoothError, SmoothMap};

/// `(A, a₀, a₁)` with `a₀` a point of `A` and `a₁ : A → A`.
#[derive(Debug, Clone)]
pub struct DynSystem {
    pub dim: usize,
    pub a0: Point,
    pub a1: SmoothMap,
}

impl DynSystem {
    pub fn new(a0: Point, a1: SmoothMap) -> Result<DynSystem, SmoothError> {
        if a1.dom() != a1.cod() || a1.dom() != a0.dim() {
            return Err(SmoothError::dims("dynamical system", a0.dim(), a1.dom()));
        }
        Ok(DynSystem { dim: a0.dim(), a0, a1 })
    }

    /// The canonical system `(A, 0, ū)` of a rig.
    pub fn canonical(r: &DiffRig) -> DynSystem {
        let n = r.dim;
        DynSystem::new(Point::new(vec![0.0; n]).unwrap(), r.unit_map(n)).unwrap()
    }
}

/// A system in context `X = ℝᵏ`: initial values `b₀ : X → A`, dynamics `b₁ : A → A`.
#[derive(Debug, Clone)]
pub struct ParamDynSystem {
    pub param_dim: usize,
    pub dim: usize,
    pub b0: SmoothMap,
    pub b1: SmoothMap,
}

impl ParamDynSystem {
    pub fn new(b0: SmoothMap, b1: SmoothMap) -> Result<ParamDynSystem, SmoothError> {
        if b1.dom() != b1.cod() || b1.dom() != b0.cod() {
            return Err(SmoothError::dims("parametrized dynamical system", b0.cod(), b1.dom()));
        }
        Ok(ParamDynSystem { param_dim: b0.dom(), dim: b0.cod(), b0, b1 })
    }
}

fn require_endo(f: &SmoothMap, n: usize, what: &str) -> Result<(), SmoothError> {
    if f.dom() != n {
        return Err(SmoothError::dims(format!("{what}: domain"), n, f.dom()));
    }
    if f.cod() != n {
        return Err(SmoothError::dims(format!("{what}: codomain"), n, f.cod()));
    }
    Ok(())
}

fn point_part(check: &mut SmoothCheck, label: &str, f: &SmoothMap, at: &Point, expected: &Point) {
    let got = f.eval(at).map(|p| (p.into_coords(), expected.clone().into_coords()));
    check.compare_at(label, &[(at.to_string(), got)]);
}

/// `f(a₀) = a₀′` and `⟨1, a₁⟩;D[f] = f;a₁′`.
pub fn add_morphism_parts(
    check: &mut SmoothCheck,
    f: &SmoothMap,
    src: &DynSystem,
    tgt: &DynSystem,
) -> Result<(), SmoothError> {
    if f.dom() != src.dim || f.cod() != tgt.dim {
        return Err(SmoothError::dims("morphism of dynamical systems", src.dim, f.dom()));
    }
    point_part(check, "a₀f = a₀′", f, &src.a0, &tgt.a0);
    let lhs = SmoothMap::pair(&SmoothMap::identity(src.dim), &src.a1)?.then(&f.differential())?;
    check.compare("⟨1,a₁⟩D[f] = fa₁′", &lhs, &f.then(&tgt.a1)?)?;
    Ok(())
}

pub fn check_morphism(
    f: &SmoothMap,
    src: &DynSystem,
    tgt: &DynSystem,
    cfg: &CheckConfig,
) -> Result<LawReport, SmoothError> {
    let mut check = SmoothCheck::new(&format!("morphism[{f}]"), cfg);
    add_morphism_parts(&mut check, f, src, tgt)?;
    Ok(check.finish())
}

/// `(x, y) ↦ D[f](x, u) ⊙ y`, i.e. `(⟨1,ū⟩×1);(D[f]×1);⊙`.
fn factored_differential(f: &SmoothMap, r: &DiffRig) -> Result<SmoothMap, SmoothError> {
    let n = r.dim;
    let with_unit = SmoothMap::pair(&SmoothMap::identity(n), &r.unit_map(n))?;
    SmoothMap::product(&with_unit, &SmoothMap::identity(n))
        .then(&SmoothMap::product(&f.differential(), &SmoothMap::identity(n)))?
        .then(&r.mult)
}

/// Solution diagrams in the rig, plus the equivalent morphism form against
/// the canonical system `(A, 0, ū)` and the factorization of `D[f]`.
pub fn add_rig_solution_parts(
    check: &mut SmoothCheck,
    f: &SmoothMap,
    r: &DiffRig,
    sys: &DynSystem,
) -> Result<(), SmoothError> {
    let n = r.dim;
    require_endo(f, n, "solution")?;
    require_endo(&sys.a1, n, "system dynamics")?;
    let zero = Point::new(vec![0.0; n]).unwrap();
    point_part(check, "0f = a₀", f, &zero, &sys.a0);
    let id = SmoothMap::identity(n);
    let driven = SmoothMap::product(f, &id).then(&SmoothMap::product(&sys.a1, &id))?.then(&r.mult)?;
    check.compare("D[f] = (f×1)(a₁×1)⊙", &f.differential(), &driven)?;
    add_morphism_parts(check, f, &DynSystem::canonical(r), sys)?;
    check.compare("D[f] = (⟨1,ū⟩×1)(D[f]×1)⊙", &f.differential(), &factored_differential(f, r)?)?;
    Ok(())
}

pub fn check_rig_solution(
    f: &SmoothMap,
    r: &DiffRig,
    sys: &DynSystem,
    cfg: &CheckConfig,
) -> Result<LawReport, SmoothError> {
    let mut check = SmoothCheck::new(&format!("rig_solution[{f}]"), cfg);
    add_rig_solution_parts(&mut check, f, r, sys)?;
    Ok(check.finish())
}

/// `⊙ᵃ = ⟨1, 0;a⟩;⊙`, multiplication by the point `a`.
pub fn scalar_mult_map(r: &DiffRig, a: &Point) -> Result<SmoothMap, SmoothError> {
    if a.dim() != r.dim {
        return Err(SmoothError::dims("scalar multiplication point", r.dim, a.dim()));
    }
    let n = r.dim;
    SmoothMap::pair(&SmoothMap::identity(n), &SmoothMap::constant(n, a.clone()))?
        .then(&r.mult)
        .map(|m| m.named(format!("⊙{a}")))
}

/// `(⊙ᵃ × a₀);D[e] : A × X → A`, i.e. `(x, y) ↦ e(a ⊙ x) ⊙ a₀(y)`.
pub fn canonical_solution(x: &DiffExpRig, a: &Point, a0: &SmoothMap) -> Result<SmoothMap, SmoothError> {
    if a0.cod() != x.dim() {
        return Err(SmoothError::dims("initial value map", x.dim(), a0.cod()));
    }
    SmoothMap::product(&scalar_mult_map(&x.rig, a)?, a0).then(&x.exp.e.differential())
}

/// Parametrized solution diagrams in the rig, with the equivalent form
/// against the canonical system.
pub fn add_param_solution_parts(
    check: &mut SmoothCheck,
    f: &SmoothMap,
    r: &DiffRig,
    sys: &ParamDynSystem,
) -> Result<(), SmoothError> {
    let (n, k) = (r.dim, sys.param_dim);
    if f.dom() != n + k || f.cod() != n || sys.dim != n {
        return Err(SmoothError::dims("parametrized solution", n + k, f.dom()));
    }
    let id_a = SmoothMap::identity(n);
    let id_ax = SmoothMap::identity(n + k);
    // f(0, x) = b₀(x)
    let initial = SmoothMap::inj1(n, k).then(f)?;
    check.compare("⟨0,1⟩f = b₀", &initial, &sys.b0)?;
    // b₁(f(a, x)) ⊙ b = D[f]((a, x), (b, 0))
    let driven = SmoothMap::product(f, &id_a).then(&SmoothMap::product(&sys.b1, &id_a))?.then(&r.mult)?;
    let directional = SmoothMap::product(&id_ax, &SmoothMap::inj0(n, k)).then(&f.differential())?;
    check.compare("(f×1)(b₁×1)⊙ = ((1×1)×⟨1,0⟩)D[f]", &driven, &directional)?;
    // Canonical form: D[f]((a, x), (u, 0)) = b₁(f(a, x)) ...
    let unit_dir =
        SmoothMap::pair(&id_ax, &SmoothMap::constant(n + k, r.unit.concat(&Point::new(vec![0.0; k]).unwrap())))?
            .then(&f.differential())?;
    check.compare("D[f]((a,x),(u,0)) = b₁f", &unit_dir, &f.then(&sys.b1)?)?;
    // ... and D[f]((a, x), (b, 0)) = D[f]((a, x), (u, 0)) ⊙ b
    let factored = SmoothMap::product(&unit_dir, &id_a).then(&r.mult)?;
    check.compare("D[f]((a,x),(b,0)) = D[f]((a,x),(u,0))⊙b", &directional, &factored)?;
    Ok(())
}

pub fn check_param_solution(
    f: &SmoothMap,
    r: &DiffRig,
    sys: &ParamDynSystem,
    cfg: &CheckConfig,
) -> Result<LawReport, SmoothError> {
    let mut check = SmoothCheck::new(&format!("param_solution[{f}]"), cfg);
    add_param_solution_parts(&mut check, f, r, sys)?;
    Ok(check.finish())
}

/// `⊕;e` and `(e×e);⊙` both solve `(A, e, 1)` in context `A`, and agree.
pub fn add_unique_construction_parts(check: &mut SmoothCheck, x: &DiffExpRig) -> Result<(), SmoothError> {
    let n = x.dim();
    let e = &x.exp.e;
    let sys = ParamDynSystem::new(e.clone(), SmoothMap::identity(n))?;
    let via_sum = SmoothMap::oplus(n).then(e)?;
    let via_mult = SmoothMap::product(e, e).then(&x.rig.mult)?;
    add_param_solution_parts(check, &via_sum, &x.rig, &sys)?;
    add_param_solution_parts(check, &via_mult, &x.rig, &sys)?;
    check.compare("⊕e = (e×e)⊙", &via_sum, &via_mult)?;
    Ok(())
}

pub fn check_unique_construction_property(x: &DiffExpRig, cfg: &CheckConfig) -> LawReport {
    let mut check = SmoothCheck::new(&format!("unique[{}/{}]", x.rig.label, x.exp.label), cfg);
    add_unique_construction_parts(&mut check, x).expect("both candidates live on A × A");
    check.finish()
}

/// The identities satisfied by multiplication-by-a-point maps, for points `a`, `b`.
pub fn add_flat_parts(check: &mut SmoothCheck, r: &DiffRig, a: &Point, b: &Point) -> Result<(), SmoothError> {
    let n = r.dim;
    let zero = Point::new(vec![0.0; n]).unwrap();
    let ma = scalar_mult_map(r, a)?;
    let mb = scalar_mult_map(r, b)?;
    let tag = |s: &str| format!("{}: {s}", r.label);
    check.compare(&tag("⊙⁰ = 0"), &scalar_mult_map(r, &zero)?, &SmoothMap::zero(n, n))?;
    check.compare(&tag("⊙ᵘ = 1"), &scalar_mult_map(r, &r.unit)?, &SmoothMap::identity(n))?;
    let sum = Point::new(a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect())?;
    check.compare(&tag("⊙ᵃ⁺ᵇ = ⊙ᵃ + ⊙ᵇ"), &scalar_mult_map(r, &sum)?, &SmoothMap::add(&ma, &mb)?)?;
    check.compare(&tag("⊙ᵃ⊙ᵇ = ⊙ᵇ⊙ᵃ"), &ma.then(&mb)?, &mb.then(&ma)?)?;
    let lin_rhs = SmoothMap::proj1(n, n).then(&ma)?;
    check.compare(&tag("⊙ᵃ linear"), &ma.differential(), &lin_rhs)?;
    let id = SmoothMap::identity(n);
    check.compare(&tag("(1×⊙ᵃ)⊙ = ⊙⊙ᵃ"), &SmoothMap::product(&id, &ma).then(&r.mult)?, &r.mult.then(&ma)?)?;
    let ua = ma.eval(&r.unit)?;
    check.compare_at(&tag("u⊙ᵃ = a"), &[(r.unit.to_string(), Ok((ua.clone().into_coords(), a.clone().into_coords())))]);
    check.compare(&tag("⊙^{u⊙ᵃ} = ⊙ᵃ"), &scalar_mult_map(r, &ua)?, &ma)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponential::{complex_exp, real_exp, DiffExpMap};
    use crate::rig::explicit;
    use crate::smooth::Primitive;

    fn p(v: &[f64]) -> Point {
        Point::new(v.to_vec()).unwrap()
    }

    fn scale(s: f64) -> SmoothMap {
        SmoothMap::primitive(Primitive::Scale(s))
    }

    #[test]
    fn scalar_mult_examples() {
        assert_eq!(scalar_mult_map(&explicit::real(), &p(&[3.0])).unwrap().eval_at(&[5.0]).unwrap(), vec![15.0]);
        let i = scalar_mult_map(&explicit::complex(), &p(&[0.0, 1.0])).unwrap();
        assert_eq!(i.eval_at(&[1.0, 0.0]).unwrap(), vec![0.0, 1.0]);
    }

    #[test]
    fn exp_solves_unit_system() {
        let cfg = CheckConfig::default();
        let sys = DynSystem::new(p(&[1.0]), SmoothMap::identity(1)).unwrap();
        let r = check_rig_solution(&SmoothMap::exp(), &explicit::real(), &sys, &cfg).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        let zero = SmoothMap::zero(1, 1);
        assert!(!check_rig_solution(&zero, &explicit::real(), &sys, &cfg).unwrap().pass);
        let e2x = scale(2.0).then(&SmoothMap::exp()).unwrap();
        let sys2 = DynSystem::new(p(&[1.0]), scale(2.0)).unwrap();
        assert!(check_rig_solution(&e2x, &explicit::real(), &sys2, &cfg).unwrap().pass);
    }

    #[test]
    fn decaying_exponential_is_a_morphism() {
        let f = scale(-2.0).then(&SmoothMap::exp()).unwrap();
        let src = DynSystem::new(p(&[0.0]), SmoothMap::constant(1, p(&[1.0]))).unwrap();
        let tgt = DynSystem::new(p(&[1.0]), scale(-2.0)).unwrap();
        assert!(check_morphism(&f, &src, &tgt, &CheckConfig::default()).unwrap().pass);
        let same = check_morphism(&SmoothMap::identity(1), &tgt, &tgt, &CheckConfig::default()).unwrap();
        assert!(same.pass);
    }

    #[test]
    fn canonical_solution_values() {
        let x = DiffExpRig::new(explicit::real(), real_exp());
        let f = canonical_solution(&x, &p(&[2.0]), &SmoothMap::identity(1)).unwrap();
        assert!((f.eval_at(&[1.0, 3.0]).unwrap()[0] - 3.0 * 2f64.exp()).abs() < 1e-12);
        assert_eq!(f.eval_at(&[0.0, 1.7]).unwrap(), vec![1.7]);
        let g = canonical_solution(&x, &p(&[0.0]), &SmoothMap::identity(1)).unwrap();
        assert_eq!(g.eval_at(&[1.3, -0.4]).unwrap(), vec![-0.4]);
    }

    #[test]
    fn param_solutions() {
        let cfg = CheckConfig::default();
        let r = explicit::real();
        let x = DiffExpRig::new(r.clone(), real_exp());
        let f = canonical_solution(&x, &p(&[2.0]), &SmoothMap::identity(1)).unwrap();
        let sys = ParamDynSystem::new(SmoothMap::identity(1), scalar_mult_map(&r, &p(&[2.0])).unwrap()).unwrap();
        assert!(check_param_solution(&f, &r, &sys, &cfg).unwrap().pass);
        let sys0 = ParamDynSystem::new(SmoothMap::identity(1), scalar_mult_map(&r, &p(&[0.0])).unwrap()).unwrap();
        assert!(check_param_solution(&SmoothMap::proj1(1, 1), &r, &sys0, &cfg).unwrap().pass);
        let ex_y = SmoothMap::product(&SmoothMap::exp(), &SmoothMap::identity(1)).then(&SmoothMap::mul()).unwrap();
        assert!(!check_param_solution(&ex_y, &r, &sys, &cfg).unwrap().pass);
    }

    #[test]
    fn uniqueness_pair() {
        let cfg = CheckConfig::default();
        assert!(check_unique_construction_property(&DiffExpRig::new(explicit::real(), real_exp()), &cfg).pass);
        assert!(check_unique_construction_property(&DiffExpRig::new(explicit::complex(), complex_exp()), &cfg).pass);
        let id = DiffExpMap::new("id", SmoothMap::identity(1)).unwrap();
        assert!(!check_unique_construction_property(&DiffExpRig::new(explicit::real(), id), &cfg).pass);
    }

    #[test]
    fn flat_identities() {
        let mut check = SmoothCheck::new("flat", &CheckConfig::default());
        add_flat_parts(&mut check, &explicit::complex(), &p(&[0.5, -1.0]), &p(&[2.0, 0.25])).unwrap();
        let r = check.finish();
        assert!(r.pass, "{:?}", r.witnesses);
    }
}
