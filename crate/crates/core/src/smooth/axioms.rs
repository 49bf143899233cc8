//! The Cartesian differential axioms and the standard lemmas about linear
//! maps, `⊕` and the tangent functor, stated as pairs of maps to compare.

use super::{finite_difference_oracle, SmoothError, SmoothMap};
use crate::law::SmoothCheck;

/// One equation `lhs = rhs` between maps of the same type.
#[derive(Debug, Clone)]
pub struct MapEquation {
    pub label: String,
    pub lhs: SmoothMap,
    pub rhs: SmoothMap,
}

fn eq(label: impl Into<String>, lhs: SmoothMap, rhs: SmoothMap) -> MapEquation {
    MapEquation { label: label.into(), lhs, rhs }
}

fn id(n: usize) -> SmoothMap {
    SmoothMap::identity(n)
}

/// `D[f+g] = D[f] + D[g]` and `D[0] = 0`, for parallel `f`, `g`.
pub fn cd1(f: &SmoothMap, g: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let (n, m) = (f.dom(), f.cod());
    Ok(vec![
        eq(
            format!("D[{f}+{g}] = D[{f}]+D[{g}]"),
            SmoothMap::add(f, g)?.differential(),
            SmoothMap::add(&f.differential(), &g.differential())?,
        ),
        eq(format!("D[0] on ℝ{n}→ℝ{m}"), SmoothMap::zero(n, m).differential(), SmoothMap::zero(2 * n, m)),
    ])
}

/// `(1×⊕)D[f] = (1×π₀)D[f] + (1×π₁)D[f]` and `⟨1,0⟩D[f] = 0`.
pub fn cd2(f: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let n = f.dom();
    let df = f.differential();
    let split = |p: SmoothMap| SmoothMap::product(&id(n), &p).then(&df);
    Ok(vec![
        eq(
            format!("(1×⊕)D[{f}] = (1×π₀)D[{f}] + (1×π₁)D[{f}]"),
            split(SmoothMap::oplus(n))?,
            SmoothMap::add(&split(SmoothMap::proj0(n, n))?, &split(SmoothMap::proj1(n, n))?)?,
        ),
        eq(format!("⟨1,0⟩D[{f}] = 0"), SmoothMap::inj0(n, n).then(&df)?, SmoothMap::zero(n, f.cod())),
    ])
}

/// `D[1] = π₁`, `D[π₀] = π₁π₀` and `D[π₁] = π₁π₁` on `ℝᵃ × ℝᵇ`.
pub fn cd3(a: usize, b: usize) -> Result<Vec<MapEquation>, SmoothError> {
    let ab = a + b;
    let second = SmoothMap::proj1(ab, ab);
    Ok(vec![
        eq(format!("D[1] = π₁ on ℝ{ab}"), id(ab).differential(), second.clone()),
        eq(
            format!("D[π₀] = π₁π₀ on ℝ{a}×ℝ{b}"),
            SmoothMap::proj0(a, b).differential(),
            second.then(&SmoothMap::proj0(a, b))?,
        ),
        eq(
            format!("D[π₁] = π₁π₁ on ℝ{a}×ℝ{b}"),
            SmoothMap::proj1(a, b).differential(),
            second.then(&SmoothMap::proj1(a, b))?,
        ),
    ])
}

/// `D[⟨f,g⟩] = ⟨D[f], D[g]⟩` for `f`, `g` with a common domain.
pub fn cd4(f: &SmoothMap, g: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    Ok(vec![eq(
        format!("D⟨{f},{g}⟩ = ⟨D[{f}],D[{g}]⟩"),
        SmoothMap::pair(f, g)?.differential(),
        SmoothMap::pair(&f.differential(), &g.differential())?,
    )])
}

/// `D[fg] = ⟨π₀f, D[f]⟩D[g]`.
pub fn cd5(f: &SmoothMap, g: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let n = f.dom();
    let rhs = SmoothMap::pair(&SmoothMap::proj0(n, n).then(f)?, &f.differential())?.then(&g.differential())?;
    Ok(vec![eq(format!("D[{f};{g}] = ⟨π₀{f},D[{f}]⟩D[{g}]"), f.then(g)?.differential(), rhs)])
}

/// `(⟨1,0⟩×⟨0,1⟩)D²[f] = D[f]`.
pub fn cd6(f: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let n = f.dom();
    let embed = SmoothMap::product(&SmoothMap::inj0(n, n), &SmoothMap::inj1(n, n));
    Ok(vec![eq(format!("(⟨1,0⟩×⟨0,1⟩)D²[{f}] = D[{f}]"), embed.then(&f.differential_n(2))?, f.differential())])
}

/// `cD²[f] = D²[f]`.
pub fn cd7(f: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let n = f.dom();
    let d2 = f.differential_n(2);
    Ok(vec![eq(format!("cD²[{f}] = D²[{f}]"), SmoothMap::interchange(n, n, n, n).then(&d2)?, d2)])
}

/// `D[f] = π₁f`.
pub fn linear_equation(f: &SmoothMap) -> Result<MapEquation, SmoothError> {
    let n = f.dom();
    Ok(eq(format!("D[{f}] = π₁{f}"), f.differential(), SmoothMap::proj1(n, n).then(f)?))
}

/// For linear `l : A → B`, `D[lg] = (l×l)D[g]` for `g` out of `B` and
/// `D[kl] = D[k]l` for `k` into `A`.
pub fn linear_chain(l: &SmoothMap, g: &SmoothMap, k: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    Ok(vec![
        eq(
            format!("D[{l};{g}] = ({l}×{l})D[{g}]"),
            l.then(g)?.differential(),
            SmoothMap::product(l, l).then(&g.differential())?,
        ),
        eq(format!("D[{k};{l}] = D[{k}]{l}"), k.then(l)?.differential(), k.differential().then(l)?),
    ])
}

/// `⊕` is linear, `T(⊕) = ⊕×⊕` and `cT(⊕) = ⊕` on `ℝⁿ`.
pub fn oplus_equations(n: usize) -> Result<Vec<MapEquation>, SmoothError> {
    let o = SmoothMap::oplus(n);
    Ok(vec![
        linear_equation(&o)?,
        eq(format!("T(⊕) = ⊕×⊕ on ℝ{n}"), o.tangent(), SmoothMap::product(&o, &o)),
        eq(
            format!("cT(⊕) = ⊕ on T(ℝ{n})"),
            SmoothMap::interchange(n, n, n, n).then(&o.tangent())?,
            SmoothMap::oplus(2 * n),
        ),
    ])
}

/// Tangent functor identities for a single map `f`.
pub fn tangent_equations(f: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let (n, m) = (f.dom(), f.cod());
    Ok(vec![
        eq(
            format!("⟨1,0⟩T({f}) = {f}⟨1,0⟩"),
            SmoothMap::inj0(n, n).then(&f.tangent())?,
            f.then(&SmoothMap::inj0(m, m))?,
        ),
        eq(
            format!("D[T({f})] = cT(D[{f}])"),
            f.tangent().differential(),
            SmoothMap::interchange(n, n, n, n).then(&f.differential().tangent())?,
        ),
        eq(format!("T(0) = 0 on ℝ{n}→ℝ{m}"), SmoothMap::zero(n, m).tangent(), SmoothMap::zero(2 * n, 2 * m)),
    ])
}

/// Tangent identities relating two composable maps `f : A → B`, `g : B → C`.
pub fn tangent_composite_equations(f: &SmoothMap, g: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    Ok(vec![
        eq(format!("D[{f};{g}] = T({f})D[{g}]"), f.then(g)?.differential(), f.tangent().then(&g.differential())?),
        eq(format!("T({f};{g}) = T({f})T({g})"), f.then(g)?.tangent(), f.tangent().then(&g.tangent())?),
    ])
}

/// Tangent identities for a pair of maps with a common domain (`pair`,
/// sums when parallel) and for their product.
pub fn tangent_pair_equations(f: &SmoothMap, g: &SmoothMap) -> Result<Vec<MapEquation>, SmoothError> {
    let (a, b) = (f.cod(), g.cod());
    let (n, k) = (f.dom(), g.dom());
    let mut out = Vec::new();
    if n == k {
        out.push(eq(
            format!("T⟨{f},{g}⟩ = ⟨T({f}),T({g})⟩c"),
            SmoothMap::pair(f, g)?.tangent(),
            SmoothMap::pair(&f.tangent(), &g.tangent())?.then(&SmoothMap::interchange(a, a, b, b))?,
        ));
        if a == b {
            out.push(eq(
                format!("T({f}+{g}) = T({f})+T({g})"),
                SmoothMap::add(f, g)?.tangent(),
                SmoothMap::add(&f.tangent(), &g.tangent())?,
            ));
        }
    }
    let fg = SmoothMap::product(f, g);
    out.push(eq(
        format!("D[{f}×{g}] = c(D[{f}]×D[{g}])"),
        fg.differential(),
        SmoothMap::interchange(n, k, n, k).then(&SmoothMap::product(&f.differential(), &g.differential()))?,
    ));
    out.push(eq(
        format!("T({f}×{g})c = c(T({f})×T({g}))"),
        fg.tangent().then(&SmoothMap::interchange(a, b, a, b))?,
        SmoothMap::interchange(n, k, n, k).then(&SmoothMap::product(&f.tangent(), &g.tangent()))?,
    ));
    Ok(out)
}

/// `α(1×D[f])D[g] = ((1×1)×⟨0,1⟩)D[(1×f)D[g]]` for `f : X → A`, `g : A → B`.
pub fn differential_slot_identity(f: &SmoothMap, g: &SmoothMap) -> Result<MapEquation, SmoothError> {
    let (a, x) = (g.dom(), f.dom());
    let lhs =
        SmoothMap::associator(a, x, x).then(&SmoothMap::product(&id(a), &f.differential()))?.then(&g.differential())?;
    let inner = SmoothMap::product(&id(a), f).then(&g.differential())?;
    let rhs = SmoothMap::product(&id(a + x), &SmoothMap::inj1(a, x)).then(&inner.differential())?;
    Ok(eq(format!("α(1×D[{f}])D[{g}] = ((1×1)×⟨0,1⟩)D[(1×{f})D[{g}]]"), lhs, rhs))
}

/// Compare every equation as a separate part.
pub fn add_equations(check: &mut SmoothCheck, eqs: &[MapEquation]) -> Result<bool, SmoothError> {
    let mut ok = true;
    for e in eqs {
        ok &= check.compare(&e.label, &e.lhs, &e.rhs)?;
    }
    Ok(ok)
}

/// `D[f](x, v)` against the central difference quotient with step `h`.
pub fn add_finite_difference_part(check: &mut SmoothCheck, f: &SmoothMap, h: f64) -> bool {
    let n = f.dom();
    let df = f.differential();
    check.compare_with(&format!("D[{f}] ≈ finite differences"), 2 * n, |xv| {
        let (x, v) = xv.coords().split_at(n);
        let x = super::Point::new(x.to_vec())?;
        let v = super::Point::new(v.to_vec())?;
        Ok((df.eval(xv)?.into_coords(), finite_difference_oracle(f, &x, &v, h)?.into_coords()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::law::CheckConfig;
    use crate::smooth::Primitive;

    fn sample_maps() -> Vec<SmoothMap> {
        let sq = SmoothMap::primitive(Primitive::Polynomial(vec![0.0, 0.0, 1.0]));
        let sin = SmoothMap::primitive(Primitive::Sin);
        vec![SmoothMap::exp(), sq.clone(), sin.then(&sq).unwrap(), SmoothMap::mul()]
    }

    fn holds(eqs: Vec<MapEquation>) {
        let mut check = SmoothCheck::new("t", &CheckConfig::default());
        add_equations(&mut check, &eqs).unwrap();
        let r = check.finish();
        assert!(r.pass, "{:?}", r.witnesses);
    }

    #[test]
    fn axioms_on_samples() {
        for f in sample_maps() {
            holds(cd2(&f).unwrap());
            holds(cd6(&f).unwrap());
            holds(cd7(&f).unwrap());
            holds(tangent_equations(&f).unwrap());
            holds(cd1(&f, &f).unwrap());
        }
        holds(cd3(1, 2).unwrap());
        holds(cd5(&SmoothMap::mul(), &SmoothMap::exp()).unwrap());
        holds(oplus_equations(2).unwrap());
        holds(tangent_pair_equations(&SmoothMap::exp(), &SmoothMap::mul()).unwrap());
        holds(vec![
            differential_slot_identity(&SmoothMap::mul(), &SmoothMap::exp().then(&SmoothMap::exp()).unwrap()).unwrap()
        ]);
    }

    #[test]
    fn wrong_chain_rule_is_caught() {
        // ⟨π₁f, D[f]⟩ in place of ⟨π₀f, D[f]⟩.
        let f = SmoothMap::exp();
        let g = SmoothMap::primitive(Primitive::Sin);
        let bad = SmoothMap::pair(&SmoothMap::proj1(1, 1).then(&f).unwrap(), &f.differential())
            .unwrap()
            .then(&g.differential())
            .unwrap();
        let r =
            crate::law::assert_smooth_equal("t", &f.then(&g).unwrap().differential(), &bad, &CheckConfig::default())
                .unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn finite_differences_agree() {
        let mut check = SmoothCheck::new("fd", &CheckConfig::default()).tol(1e-5).absolute();
        for f in sample_maps() {
            add_finite_difference_part(&mut check, &f, 1e-5);
        }
        let r = check.finish();
        assert!(r.pass, "{:?}", r.witnesses);
    }
}
