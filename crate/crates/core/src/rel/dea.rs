//! !-differential exponential algebras and their round trip through the
//! coKleisli category.

use super::cokleisli::{second_differential_formula, CoKleisli};
use super::{RelCheck, RelError, RelMor, RelObj};
use crate::law::{CheckConfig, LawReport};

/// A commutative monoid `(A, ▽, v)` in REL.
#[derive(Clone, Debug)]
pub struct RelMonoid {
    pub carrier: RelObj,
    pub mult: RelMor,
    pub unit: RelMor,
}

impl RelMonoid {
    pub fn new(carrier: RelObj, mult: RelMor, unit: RelMor) -> Result<RelMonoid, RelError> {
        let aa = RelObj::tensor(&carrier, &carrier);
        for (name, m, dom) in [("▽", &mult, &aa), ("v", &unit, &RelObj::Unit)] {
            if m.dom() != dom || m.cod() != &carrier {
                return Err(RelError::TypeMismatch {
                    context: format!("monoid {name}"),
                    expected: format!("{dom} → {carrier}"),
                    found: format!("{} → {}", m.dom(), m.cod()),
                });
            }
        }
        Ok(RelMonoid { carrier, mult, unit })
    }

    /// `(X, ▽, v)` with `(x, x) ↦ x` and `∗ ↦` every point.
    pub fn copy_dual(x: &RelObj) -> RelMonoid {
        RelMonoid { carrier: x.clone(), mult: RelMor::copy_mult(x), unit: RelMor::copy_unit(x) }
    }

    /// `(!X, ∇, ν)`.
    pub fn bang(x: &RelObj) -> RelMonoid {
        RelMonoid { carrier: RelObj::bang(x), mult: RelMor::nabla(x), unit: RelMor::nu(x) }
    }

    /// Associativity, both unit laws and commutativity.
    pub fn add_monoid_parts(&self, check: &mut RelCheck, prefix: &str) -> Result<bool, RelError> {
        let a = &self.carrier;
        let id = RelMor::identity(a);
        let m = &self.mult;
        let mut ok = check.compare(
            &format!("{prefix}(▽⊗1)▽ = (1⊗▽)▽"),
            &m.tensor(&id).then(m)?,
            &RelMor::chain(&[RelMor::assoc(a, a, a), id.tensor(m), m.clone()])?,
        )?;
        ok &= check.compare(
            &format!("{prefix}(v⊗1)▽ = 1"),
            &RelMor::chain(&[RelMor::left_unitor_inv(a), self.unit.tensor(&id), m.clone()])?,
            &id,
        )?;
        ok &= check.compare(
            &format!("{prefix}(1⊗v)▽ = 1"),
            &RelMor::chain(&[RelMor::right_unitor_inv(a), id.tensor(&self.unit), m.clone()])?,
            &id,
        )?;
        ok &= check.compare(&format!("{prefix}σ▽ = ▽"), &RelMor::swap(a, a).then(m)?, m)?;
        Ok(ok)
    }
}

fn expect_algebra(m: &RelMonoid, e: &RelMor) -> Result<RelObj, RelError> {
    let a = m.carrier.clone();
    if e.dom() != &RelObj::bang(&a) || e.cod() != &a {
        return Err(RelError::TypeMismatch {
            context: format!("algebra map {e}"),
            expected: format!("!{a} → {a}"),
            found: format!("{} → {}", e.dom(), e.cod()),
        });
    }
    Ok(a)
}

/// Outcome of the three formulations, for cross-checking.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeaVerdicts {
    pub bang_exp: bool,
    pub cokleisli_exp1: bool,
    pub cokleisli_exp2: bool,
}

impl DeaVerdicts {
    pub fn agree(&self) -> bool {
        self.bang_exp == self.cokleisli_exp1 && self.cokleisli_exp1 == self.cokleisli_exp2
    }
}

/// Add the `!exp` diagrams for `(m, e)` and both coKleisli characterizations
/// of `e` being a differential exponential map.
pub fn add_bang_dea_parts(check: &mut RelCheck, m: &RelMonoid, e: &RelMor) -> Result<DeaVerdicts, RelError> {
    let a = expect_algebra(m, e)?;
    let ba = RelObj::bang(&a);
    let (eta, nu, nabla, d) = (RelMor::eta(&a), RelMor::nu(&a), RelMor::nabla(&a), RelMor::deriv(&a));
    let id_a = RelMor::identity(&a);

    let mut bang_exp = check.compare("!exp: ηe = 1", &eta.then(e)?, &id_a)?;
    bang_exp &= check.compare("!exp: νe = v", &nu.then(e)?, &m.unit)?;
    bang_exp &= check.compare("!exp: ∇e = (e⊗e)▽", &nabla.then(e)?, &e.tensor(e).then(&m.mult)?)?;

    // ⟨0,1⟩D[e] = 1 and ⊕e = (1×e)D[e], computed in the base category.
    let bang_zero = RelMor::zero(&a, &a).bang();
    let mut k1 = check.compare(
        "coKexp1: Δ(!(0)⊗ε)de = ε",
        &RelMor::chain(&[RelMor::comult(&a), bang_zero.tensor(&RelMor::epsilon(&a)), d.clone(), e.clone()])?,
        &RelMor::epsilon(&a),
    )?;
    k1 &= check.compare(
        "coKexp1: !(⊕)e = χ(1⊗e)de",
        &RelMor::codiag(&a).bang().then(e)?,
        &RelMor::chain(&[RelMor::seely(&a, &a), RelMor::identity(&ba).tensor(e), d.clone(), e.clone()])?,
    )?;

    let mut k2 = check.compare("coKexp2: ηe = 1", &eta.then(e)?, &id_a)?;
    k2 &= check.compare(
        "coKexp2: ∇e = (1⊗e)de",
        &nabla.then(e)?,
        &RelMor::chain(&[RelMor::identity(&ba).tensor(e), d, e.clone()])?,
    )?;

    let verdicts = DeaVerdicts { bang_exp, cokleisli_exp1: k1, cokleisli_exp2: k2 };
    check.require("the three characterizations agree", verdicts.agree(), || format!("{verdicts:?}"));
    Ok(verdicts)
}

/// The copy-dual monoid laws together with its algebra map `e`.
pub fn add_copy_dual_parts(check: &mut RelCheck, x: &RelObj) -> Result<(), RelError> {
    let m = RelMonoid::copy_dual(x);
    m.add_monoid_parts(check, "monoid: ")?;
    add_bang_dea_parts(check, &m, &RelMor::copy_dual_e(x))?;
    Ok(())
}

/// `(!X, ∇, ν, μ)` as a !-differential exponential algebra.
pub fn add_mu_dea_parts(check: &mut RelCheck, x: &RelObj) -> Result<(), RelError> {
    let m = RelMonoid::bang(x);
    m.add_monoid_parts(check, "monoid: ")?;
    add_bang_dea_parts(check, &m, &RelMor::mu(x))?;
    Ok(())
}

pub fn check_bang_dea(id: &str, m: &RelMonoid, e: &RelMor, cfg: &CheckConfig) -> Result<LawReport, RelError> {
    let mut check = RelCheck::new(id, cfg);
    m.add_monoid_parts(&mut check, "monoid: ")?;
    add_bang_dea_parts(&mut check, m, e)?;
    Ok(check.finish())
}

/// Add the round-trip equations: the monoid recovered from `e` is `m`, and
/// the coKleisli rig structure `⊙ₑ, uₑ` is `χ(ε⊗ε)▽` and `χ⊤v`.
pub fn add_roundtrip_parts(check: &mut RelCheck, m: &RelMonoid, e: &RelMor) -> Result<(), RelError> {
    let a = expect_algebra(m, e)?;
    let top = RelObj::top();
    let (eta, nu, nabla) = (RelMor::eta(&a), RelMor::nu(&a), RelMor::nabla(&a));
    check.compare("▽ₑ = (η⊗η)∇e = ▽", &RelMor::chain(&[eta.tensor(&eta), nabla, e.clone()])?, &m.mult)?;
    check.compare("vₑ = νe = v", &nu.then(e)?, &m.unit)?;

    let ce = CoKleisli::new(e.clone())?;
    let d2 = ce.d()?.d()?;
    let swap_in = RelMor::inr(&a, &a).biprod(&RelMor::inl(&a, &a));
    check.compare(
        "⟦⊙ₑ⟧ = ⟦(⟨0,1⟩×⟨1,0⟩)D²[e]⟧ = χ(ε⊗ε)▽",
        d2.after_linear(&swap_in)?.rel(),
        &RelMor::chain(&[RelMor::seely(&a, &a), RelMor::epsilon(&a).tensor(&RelMor::epsilon(&a)), m.mult.clone()])?,
    )?;
    let u_e = CoKleisli::zero(&top, &a).then(&ce)?;
    check.compare("⟦uₑ⟧ = ⟦0e⟧ = χ⊤v", u_e.rel(), &RelMor::seely_top().then(&m.unit)?)?;
    let l = RelMor::identity(&RelObj::biprod(&a, &a)).biprod(&RelMor::inl(&a, &a));
    check.compare(
        "((1×1)×⟨1,0⟩)D²[e] = χ(χ⊗1)(1⊗ε⊗ε)(d⊗1)de",
        d2.after_linear(&l)?.rel(),
        &second_differential_formula(&ce)?,
    )?;
    Ok(())
}

pub fn dea_roundtrip(id: &str, m: &RelMonoid, e: &RelMor, cfg: &CheckConfig) -> Result<LawReport, RelError> {
    let mut check = RelCheck::new(id, cfg);
    add_roundtrip_parts(&mut check, m, e)?;
    Ok(check.finish())
}

/// Candidate `(monoid, algebra map)` pairs on which the three
/// characterizations are cross-checked, with whether each is a genuine
/// !-differential exponential algebra.
pub fn dea_candidates(x: &RelObj) -> Vec<(String, RelMonoid, RelMor, bool)> {
    let bx = RelObj::bang(x);
    vec![
        (format!("copy-dual e on {x}"), RelMonoid::copy_dual(x), RelMor::copy_dual_e(x), true),
        (format!("μ on !{x}"), RelMonoid::bang(x), RelMor::mu(x), true),
        (format!("ε on {x}"), RelMonoid::copy_dual(x), RelMor::epsilon(x), false),
        (format!("ε on !{x}"), RelMonoid::bang(x), RelMor::epsilon(&bx), false),
        (format!("0 on {x}"), RelMonoid::copy_dual(x), RelMor::zero(&bx, x), false),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel::Elem;

    fn cfg(d: usize) -> CheckConfig {
        CheckConfig { max_degree: d, ..CheckConfig::default() }
    }

    #[test]
    fn copy_dual_is_a_dea() {
        let x = RelObj::base(2);
        let r = check_bang_dea("t", &RelMonoid::copy_dual(&x), &RelMor::copy_dual_e(&x), &cfg(3)).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        let r = dea_roundtrip("t", &RelMonoid::copy_dual(&x), &RelMor::copy_dual_e(&x), &cfg(3)).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
    }

    #[test]
    fn mu_is_a_dea() {
        let x = RelObj::base(1);
        let r = check_bang_dea("t", &RelMonoid::bang(&x), &RelMor::mu(&x), &cfg(2)).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
        let r = dea_roundtrip("t", &RelMonoid::bang(&x), &RelMor::mu(&x), &cfg(2)).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
    }

    #[test]
    fn epsilon_is_not_a_dea() {
        let x = RelObj::base(2);
        let mut check = RelCheck::new("t", &cfg(2));
        let v = add_bang_dea_parts(&mut check, &RelMonoid::copy_dual(&x), &RelMor::epsilon(&x)).unwrap();
        assert!(!v.bang_exp && !v.cokleisli_exp1 && !v.cokleisli_exp2);
        let r = check.finish();
        assert!(r.part("coKexp1: Δ(!(0)⊗ε)de = ε").unwrap().pass);
        assert!(!r.part("!exp: νe = v").unwrap().pass);
        assert!(!r.witnesses.is_empty());
    }

    #[test]
    fn copy_dual_mult_from_e_is_diagonal() {
        let x = RelObj::base(2);
        let (eta, e) = (RelMor::eta(&x), RelMor::copy_dual_e(&x));
        let mult_e = RelMor::chain(&[eta.tensor(&eta), RelMor::nabla(&x), e]).unwrap();
        let (a, b) = (Elem::Atom(0), Elem::Atom(1));
        assert!(mult_e.contains(&Elem::pair(a.clone(), a.clone()), &a).unwrap());
        assert!(mult_e.image(&Elem::pair(a, b), 3).unwrap().is_empty());
    }

    #[test]
    fn characterizations_agree_on_candidates() {
        for x in [RelObj::base(1), RelObj::base(2)] {
            for (name, m, e, genuine) in dea_candidates(&x) {
                let mut check = RelCheck::new("t", &cfg(2));
                let v = add_bang_dea_parts(&mut check, &m, &e).unwrap();
                assert!(v.agree(), "{name}: {v:?}");
                assert_eq!(v.bang_exp, genuine, "{name}");
            }
        }
    }
}
