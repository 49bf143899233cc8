//! The equations of a differential storage category, instantiated in REL.

use super::{Elem, RelCheck, RelError, RelMor, RelObj};
use crate::law::{CheckConfig, LawReport};

/// One labelled equation between two parallel relations.
#[derive(Clone, Debug)]
pub struct Equation {
    pub family: &'static str,
    pub label: String,
    pub lhs: RelMor,
    pub rhs: RelMor,
}

/// Families accepted by [`storage_equations`], in listing order.
pub const STORAGE_FAMILIES: &[&str] = &[
    "comonad",
    "comonoid",
    "deltaeq",
    "d1",
    "d2",
    "d3",
    "d4",
    "d5",
    "cd1",
    "cd2",
    "cd3",
    "cd4",
    "seely",
    "bialgebra",
    "nabla_monoid",
    "definitions",
    "naturality",
];

fn eq(family: &'static str, label: &str, lhs: RelMor, rhs: RelMor) -> Equation {
    Equation { family, label: label.to_string(), lhs, rhs }
}

/// Two sample relations `A → A` used to instantiate the bialgebra and
/// naturality equations. On a base set of `n` points, `R` is a successor
/// relation with an extra loop and `S` collapses everything onto the first point.
pub fn sample_relations(a: &RelObj) -> Result<(RelMor, RelMor), RelError> {
    let n = match a {
        RelObj::Base(n) => *n,
        other => {
            return Err(RelError::TypeMismatch {
                context: "sample relations".into(),
                expected: "a base set".into(),
                found: other.to_string(),
            })
        }
    };
    let pts: Vec<Elem> = (0..n).map(Elem::Atom).collect();
    let succ = pts
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), pts[(i + 1) % pts.len()].clone()))
        .chain(pts.first().map(|x| (x.clone(), x.clone())));
    let collapse = pts.iter().map(|x| (x.clone(), pts[0].clone()));
    Ok((RelMor::graph(a, a, succ)?.named("R"), RelMor::graph(a, a, collapse)?.named("S")))
}

/// Every storage-category equation at the base object `a`.
pub fn storage_equations(a: &RelObj) -> Result<Vec<Equation>, RelError> {
    let ba = RelObj::bang(a);
    let k = RelObj::Unit;
    let top = RelObj::top();
    let aa = RelObj::biprod(a, a);
    let id = RelMor::identity;
    let ch = RelMor::chain;

    let (delta, eps, comult, counit) = (RelMor::dig(a), RelMor::epsilon(a), RelMor::comult(a), RelMor::counit(a));
    let (nabla, nu, eta, d) = (RelMor::nabla(a), RelMor::nu(a), RelMor::eta(a), RelMor::deriv(a));
    let (chi, chi_inv) = (RelMor::seely(a, a), RelMor::seely_inv(a, a));
    let id_a = id(a);
    let id_ba = id(&ba);

    let mut out = vec![
        // comonad
        eq("comonad", "δε = 1", delta.then(&RelMor::epsilon(&ba))?, id_ba.clone()),
        eq("comonad", "δ!(ε) = 1", delta.then(&eps.bang())?, id_ba.clone()),
        eq("comonad", "δδ = δ!(δ)", delta.then(&RelMor::dig(&ba))?, delta.then(&delta.bang())?),
        // comonoid
        eq(
            "comonoid",
            "Δ(Δ⊗1) = Δ(1⊗Δ)",
            ch(&[comult.clone(), comult.tensor(&id_ba), RelMor::assoc(&ba, &ba, &ba)])?,
            comult.then(&id_ba.tensor(&comult))?,
        ),
        eq(
            "comonoid",
            "Δ(1⊗ι) = 1",
            ch(&[comult.clone(), id_ba.tensor(&counit), RelMor::right_unitor(&ba)])?,
            id_ba.clone(),
        ),
        eq(
            "comonoid",
            "Δ(ι⊗1) = 1",
            ch(&[comult.clone(), counit.tensor(&id_ba), RelMor::left_unitor(&ba)])?,
            id_ba.clone(),
        ),
        eq("comonoid", "Δσ = Δ", comult.then(&RelMor::swap(&ba, &ba))?, comult.clone()),
        // δ is a comonoid morphism
        eq("deltaeq", "δΔ = Δ(δ⊗δ)", delta.then(&RelMor::comult(&ba))?, comult.then(&delta.tensor(&delta))?),
        eq("deltaeq", "δι = ι", delta.then(&RelMor::counit(&ba))?, counit.clone()),
        // deriving transformation
        eq("d1", "dι = 0", d.then(&counit)?, RelMor::zero(&RelObj::tensor(&ba, a), &k)),
        eq(
            "d2",
            "dΔ = (Δ⊗1)(1⊗d) + (Δ⊗1)(1⊗σ)(d⊗1)",
            d.then(&comult)?,
            ch(&[comult.tensor(&id_a), RelMor::assoc(&ba, &ba, a), id_ba.tensor(&d)])?.union(&ch(&[
                comult.tensor(&id_a),
                RelMor::assoc(&ba, &ba, a),
                id_ba.tensor(&RelMor::swap(&ba, a)),
                RelMor::assoc_inv(&ba, a, &ba),
                d.tensor(&id_ba),
            ])?)?,
        ),
        eq("d3", "dε = ι⊗1", d.then(&eps)?, counit.tensor(&id_a).then(&RelMor::left_unitor(a))?),
        eq(
            "d4",
            "dδ = (Δ⊗1)(δ⊗d)d",
            d.then(&delta)?,
            ch(&[comult.tensor(&id_a), RelMor::assoc(&ba, &ba, a), delta.tensor(&d), RelMor::deriv(&ba)])?,
        ),
        eq(
            "d5",
            "(1⊗σ)(d⊗1)d = (d⊗1)d",
            ch(&[
                RelMor::assoc(&ba, a, a),
                id_ba.tensor(&RelMor::swap(a, a)),
                RelMor::assoc_inv(&ba, a, a),
                d.tensor(&id_a),
                d.clone(),
            ])?,
            d.tensor(&id_a).then(&d)?,
        ),
        // codereliction
        eq("cd1", "ηι = 0", eta.then(&counit)?, RelMor::zero(a, &k)),
        eq(
            "cd2",
            "ηΔ = η⊗ν + ν⊗η",
            eta.then(&comult)?,
            RelMor::right_unitor_inv(a)
                .then(&eta.tensor(&nu))?
                .union(&RelMor::left_unitor_inv(a).then(&nu.tensor(&eta))?)?,
        ),
        eq("cd3", "ηε = 1", eta.then(&eps)?, id_a.clone()),
        eq(
            "cd4",
            "ηδ = (ν⊗η)(δ⊗η)∇",
            eta.then(&delta)?,
            ch(&[RelMor::left_unitor_inv(a), nu.tensor(&eta), delta.tensor(&RelMor::eta(&ba)), RelMor::nabla(&ba)])?,
        ),
        // Seely isomorphisms
        eq("seely", "χχ⁻¹ = 1", chi.then(&chi_inv)?, id(&RelObj::bang(&aa))),
        eq("seely", "χ⁻¹χ = 1", chi_inv.then(&chi)?, id(&RelObj::tensor(&ba, &ba))),
        eq("seely", "χ⊤χ⊤⁻¹ = 1", RelMor::seely_top().then(&RelMor::seely_top_inv())?, id(&RelObj::bang(&top))),
        eq("seely", "χ⊤⁻¹χ⊤ = 1", RelMor::seely_top_inv().then(&RelMor::seely_top())?, id(&k)),
        // the monoid (!A, ∇, ν)
        eq(
            "nabla_monoid",
            "(∇⊗1)∇ = (1⊗∇)∇",
            nabla.tensor(&id_ba).then(&nabla)?,
            ch(&[RelMor::assoc(&ba, &ba, &ba), id_ba.tensor(&nabla), nabla.clone()])?,
        ),
        eq(
            "nabla_monoid",
            "(ν⊗1)∇ = 1",
            ch(&[RelMor::left_unitor_inv(&ba), nu.tensor(&id_ba), nabla.clone()])?,
            id_ba.clone(),
        ),
        eq(
            "nabla_monoid",
            "(1⊗ν)∇ = 1",
            ch(&[RelMor::right_unitor_inv(&ba), id_ba.tensor(&nu), nabla.clone()])?,
            id_ba.clone(),
        ),
        eq("nabla_monoid", "σ∇ = ∇", RelMor::swap(&ba, &ba).then(&nabla)?, nabla.clone()),
        // the derived maps agree with their definitions
        eq(
            "definitions",
            "χ = Δ(!(π₀)⊗!(π₁))",
            chi.clone(),
            RelMor::comult(&aa).then(&RelMor::proj0(a, a).bang().tensor(&RelMor::proj1(a, a).bang()))?,
        ),
        eq("definitions", "χ⊤ = ι", RelMor::seely_top(), RelMor::counit(&top)),
        eq("definitions", "∇ = χ⁻¹!(⊕)", nabla.clone(), chi_inv.then(&RelMor::codiag(a).bang())?),
        eq("definitions", "ν = χ⊤⁻¹!(0)", nu.clone(), RelMor::seely_top_inv().then(&RelMor::zero(&top, a).bang())?),
        eq("definitions", "η = (ν⊗1)d", eta.clone(), ch(&[RelMor::left_unitor_inv(a), nu.tensor(&id_a), d.clone()])?),
        eq("definitions", "d = (1⊗η)∇", d.clone(), id_ba.tensor(&eta).then(&nabla)?),
    ];

    let (r, s) = sample_relations(a)?;
    out.push(eq(
        "bialgebra",
        "!(R+S) = Δ(!R⊗!S)∇",
        r.union(&s)?.bang(),
        ch(&[comult.clone(), r.bang().tensor(&s.bang()), nabla.clone()])?,
    ));
    out.push(eq("bialgebra", "!(0) = ιν", RelMor::zero(a, a).bang(), counit.then(&nu)?));
    out.push(eq("naturality", "!(R)ε = εR", r.bang().then(&eps)?, eps.then(&r)?));
    out.push(eq("naturality", "!(R)δ = δ!!(R)", r.bang().then(&RelMor::dig(a))?, delta.then(&r.bang().bang())?));
    out.push(eq("naturality", "!(R)Δ = Δ(!R⊗!R)", r.bang().then(&comult)?, comult.then(&r.bang().tensor(&r.bang()))?));
    out.push(eq("naturality", "(!R⊗R)d = d!(R)", r.bang().tensor(&r).then(&d)?, d.then(&r.bang())?));
    out.push(eq("naturality", "Rη = η!(R)", r.then(&eta)?, eta.then(&r.bang())?));
    out.push(eq("naturality", "μ!(S) = !!(S)μ", RelMor::mu(a).then(&s.bang())?, s.bang().bang().then(&RelMor::mu(a))?));
    Ok(out)
}

/// Add every equation of the selected families at each base object.
pub fn add_storage_axiom_parts(check: &mut RelCheck, bases: &[RelObj], families: &[&str]) -> Result<(), RelError> {
    for a in bases {
        for e in storage_equations(a)?.into_iter().filter(|e| families.contains(&e.family)) {
            check.compare(&format!("{a}: {}", e.label), &e.lhs, &e.rhs)?;
        }
    }
    Ok(())
}

/// Every storage equation at `|X| ∈ {1, 2}` up to the configured degree.
pub fn check_storage_axioms(bases: &[RelObj], cfg: &CheckConfig) -> Result<LawReport, RelError> {
    let mut check = RelCheck::new("storage_axioms", cfg);
    add_storage_axiom_parts(&mut check, bases, STORAGE_FAMILIES)?;
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bases() -> Vec<RelObj> {
        vec![RelObj::base(1), RelObj::base(2)]
    }

    #[test]
    fn every_family_has_equations() {
        let eqs = storage_equations(&RelObj::base(2)).unwrap();
        for f in STORAGE_FAMILIES {
            assert!(eqs.iter().any(|e| e.family == *f), "no equation for {f}");
        }
    }

    #[test]
    fn storage_axioms_hold_at_degree_two() {
        let cfg = CheckConfig { max_degree: 2, ..CheckConfig::default() };
        let r = check_storage_axioms(&bases(), &cfg).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
    }

    #[test]
    fn d_iota_is_empty_on_sample() {
        let x = RelObj::base(2);
        let d_iota = RelMor::deriv(&x).then(&RelMor::counit(&x)).unwrap();
        let input = Elem::pair(Elem::bag(super::super::MSet::singleton(Elem::Atom(0))), Elem::Atom(1));
        assert!(d_iota.image(&input, 3).unwrap().is_empty());
    }

    #[test]
    fn eta_comult_on_a_point() {
        let x = RelObj::base(1);
        let img = RelMor::eta(&x).then(&RelMor::comult(&x)).unwrap().image(&Elem::Atom(0), 3).unwrap();
        let shown: Vec<String> = img.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, vec!["([], [x])", "([x], [])"]);
    }

    #[test]
    fn a_wrong_equation_is_caught() {
        let x = RelObj::base(2);
        let mut check = RelCheck::new("t", &CheckConfig::default());
        let bad = RelMor::comult(&x).then(&RelMor::counit(&x).tensor(&RelMor::counit(&x))).unwrap();
        let lhs = bad.then(&RelMor::left_unitor(&RelObj::Unit)).unwrap();
        let rhs = RelMor::zero(&RelObj::bang(&x), &RelObj::Unit);
        assert!(!check.compare("Δ(ι⊗ι) = 0", &lhs, &rhs).unwrap());
    }
}
