//! The coKleisli category of `!` on REL as a Cartesian differential category.
//!
//! A coKleisli map `A → B` is a relation `!A → B`. Composition goes through
//! `δ`, the identity is `ε`, and the differential combinator is
//! `χ;(1⊗ε);d;f`.

use super::{RelCheck, RelError, RelMor, RelObj};
use crate::law::{CheckConfig, LawReport};

/// A coKleisli map `src → tgt`, carried by its underlying relation `!src → tgt`.
#[derive(Clone, Debug)]
pub struct CoKleisli {
    src: RelObj,
    rel: RelMor,
}

impl CoKleisli {
    pub fn new(rel: RelMor) -> Result<CoKleisli, RelError> {
        let src = rel.dom().bang_inner().cloned().ok_or_else(|| RelError::TypeMismatch {
            context: format!("coKleisli map {rel}"),
            expected: "a domain of the form !A".into(),
            found: rel.dom().to_string(),
        })?;
        Ok(CoKleisli { src, rel })
    }

    fn wrap(rel: RelMor) -> CoKleisli {
        CoKleisli::new(rel).expect("constructed with a !-domain")
    }

    pub fn rel(&self) -> &RelMor {
        &self.rel
    }

    pub fn src(&self) -> &RelObj {
        &self.src
    }

    pub fn tgt(&self) -> &RelObj {
        self.rel.cod()
    }

    /// `⟦1⟧ = ε`.
    pub fn identity(a: &RelObj) -> CoKleisli {
        CoKleisli::wrap(RelMor::epsilon(a))
    }

    /// The linear map `⟦L⟧ = εL` for a relation `L : A → B`.
    pub fn linear(l: &RelMor) -> CoKleisli {
        CoKleisli::wrap(RelMor::epsilon(l.dom()).then(l).expect("ε ends where L starts"))
    }

    pub fn zero(a: &RelObj, b: &RelObj) -> CoKleisli {
        CoKleisli::wrap(RelMor::zero(&RelObj::bang(a), b))
    }

    /// `⟦fg⟧ = δ;!⟦f⟧;⟦g⟧`.
    pub fn then(&self, g: &CoKleisli) -> Result<CoKleisli, RelError> {
        let inner = self.rel.bang().then(&g.rel)?;
        Ok(CoKleisli::wrap(RelMor::dig(&self.src).then(&inner)?))
    }

    /// Precompose with the linear map `εL`. Equal to [`Self::then`] on
    /// `linear(L)` by `δ!(ε) = 1`, but needs no intermediate `!!A` window.
    pub fn after_linear(&self, l: &RelMor) -> Result<CoKleisli, RelError> {
        Ok(CoKleisli::wrap(l.bang().then(&self.rel)?))
    }

    /// `⟦D[f]⟧ = χ;(1⊗ε);d;⟦f⟧`.
    pub fn d(&self) -> Result<CoKleisli, RelError> {
        let a = &self.src;
        let ba = RelObj::bang(a);
        let rel = RelMor::chain(&[
            RelMor::seely(a, a),
            RelMor::identity(&ba).tensor(&RelMor::epsilon(a)),
            RelMor::deriv(a),
            self.rel.clone(),
        ])?;
        Ok(CoKleisli::wrap(rel))
    }

    /// `⟨f, g⟩ = f;inl + g;inr`.
    pub fn pair(&self, g: &CoKleisli) -> Result<CoKleisli, RelError> {
        let (b, c) = (self.tgt(), g.tgt());
        let left = self.rel.then(&RelMor::inl(b, c))?;
        let right = g.rel.then(&RelMor::inr(b, c))?;
        Ok(CoKleisli::wrap(left.union(&right)?))
    }

    pub fn sum(&self, g: &CoKleisli) -> Result<CoKleisli, RelError> {
        Ok(CoKleisli::wrap(self.rel.union(&g.rel)?))
    }

    pub fn named(&self, name: &str) -> CoKleisli {
        CoKleisli { src: self.src.clone(), rel: self.rel.named(name) }
    }
}

/// Linear maps out of `(A×A)×A` naming the three coordinates `a, b, c`.
struct Coords {
    /// `⟨a, b⟩`
    ab: RelMor,
    /// `⟨a, c⟩`
    ac: RelMor,
    /// `⟨a, b + c⟩`
    a_bc: RelMor,
    /// `⟨a, 0⟩`
    a0: RelMor,
    /// `⟨⟨a, b⟩, ⟨0, c⟩⟩`
    ab_0c: RelMor,
}

fn coords(a: &RelObj) -> Result<Coords, RelError> {
    let aa = RelObj::biprod(a, a);
    let pi0 = RelMor::proj0(&aa, a);
    let pi1 = RelMor::proj1(&aa, a);
    let first = RelMor::chain(&[pi0.clone(), RelMor::proj0(a, a), RelMor::inl(a, a)])?;
    let third = pi1.then(&RelMor::inr(a, a))?;
    Ok(Coords {
        ab: pi0,
        ac: first.union(&third)?,
        a_bc: RelMor::identity(&aa).biprod(&RelMor::inr(a, a)).then(&RelMor::codiag(&aa))?,
        a0: first,
        ab_0c: RelMor::identity(&aa).biprod(&RelMor::inr(a, a)),
    })
}

/// `D²[f]` as the explicit composite `χ(χ⊗1)(1⊗ε⊗ε)(d⊗1)d f`, which equals
/// `((1×1)×⟨1,0⟩)D²[f]` in the coKleisli category.
pub fn second_differential_formula(f: &CoKleisli) -> Result<RelMor, RelError> {
    let a = f.src();
    let ba = RelObj::bang(a);
    let aa = RelObj::biprod(a, a);
    RelMor::chain(&[
        RelMor::seely(&aa, a),
        RelMor::seely(a, a).tensor(&RelMor::identity(&ba)),
        RelMor::identity(&ba).tensor(&RelMor::epsilon(a)).tensor(&RelMor::epsilon(a)),
        RelMor::deriv(a).tensor(&RelMor::identity(a)),
        RelMor::deriv(a),
        f.rel().clone(),
    ])
}

/// Add the coKleisli differential axioms for the given maps.
///
/// `maps` are tested for CD.2, CD.6 and CD.7 individually and pairwise (when
/// parallel) for CD.1 and CD.4. `chains` are composable pairs for CD.5.
pub fn add_cokleisli_parts(
    check: &mut RelCheck,
    maps: &[CoKleisli],
    chains: &[(CoKleisli, CoKleisli)],
    axioms: &[&str],
) -> Result<(), RelError> {
    let want = |k: &str| axioms.contains(&k);
    for f in maps {
        let a = f.src();
        let df = f.d()?;
        let c = coords(a)?;
        if want("cd1") {
            let z = CoKleisli::zero(a, f.tgt());
            check.compare(
                &format!("D[0] = 0 for {a} → {}", f.tgt()),
                z.d()?.rel(),
                CoKleisli::zero(&RelObj::biprod(a, a), f.tgt()).rel(),
            )?;
        }
        if want("cd2") {
            let lhs = df.after_linear(&c.a_bc)?;
            let rhs = df.after_linear(&c.ab)?.sum(&df.after_linear(&c.ac)?)?;
            check.compare(&format!("⟨a,b+c⟩D[{f}] = ⟨a,b⟩D[{f}] + ⟨a,c⟩D[{f}]", f = f.rel()), lhs.rel(), rhs.rel())?;
            let zero = CoKleisli::zero(&RelObj::biprod(&RelObj::biprod(a, a), a), f.tgt());
            check.compare(&format!("⟨a,0⟩D[{}] = 0", f.rel()), df.after_linear(&c.a0)?.rel(), zero.rel())?;
        }
        if want("cd6") {
            let d2 = df.d()?;
            check.compare(
                &format!("⟨⟨a,b⟩,⟨0,c⟩⟩D²[{f}] = ⟨a,c⟩D[{f}]", f = f.rel()),
                d2.after_linear(&c.ab_0c)?.rel(),
                df.after_linear(&c.ac)?.rel(),
            )?;
        }
        if want("cd7") {
            let d2 = df.d()?;
            let swap = RelMor::interchange(a, a, a, a);
            check.compare(&format!("cD²[{}] = D²", f.rel()), d2.after_linear(&swap)?.rel(), d2.rel())?;
        }
        if want("d2_formula") {
            let d2 = df.d()?;
            let l = RelMor::identity(&RelObj::biprod(a, a)).biprod(&RelMor::inl(a, a));
            check.compare(
                &format!("((1×1)×⟨1,0⟩)D²[{}] = χ(χ⊗1)(1⊗ε⊗ε)(d⊗1)d", f.rel()),
                d2.after_linear(&l)?.rel(),
                &second_differential_formula(f)?,
            )?;
        }
    }
    for f in maps {
        for g in maps {
            if f.src() != g.src() || f.tgt() != g.tgt() || f.rel().to_string() >= g.rel().to_string() {
                continue;
            }
            if want("cd1") {
                check.compare(
                    &format!("D[{f}+{g}] = D[{f}]+D[{g}]", f = f.rel(), g = g.rel()),
                    f.sum(g)?.d()?.rel(),
                    f.d()?.sum(&g.d()?)?.rel(),
                )?;
            }
            if want("cd4") {
                check.compare(
                    &format!("D⟨{f},{g}⟩ = ⟨D[{f}],D[{g}]⟩", f = f.rel(), g = g.rel()),
                    f.pair(g)?.d()?.rel(),
                    f.d()?.pair(&g.d()?)?.rel(),
                )?;
            }
        }
    }
    if want("cd3") {
        for a in maps.iter().map(|f| f.src().clone()).collect::<std::collections::BTreeSet<_>>() {
            let aa = RelObj::biprod(&a, &a);
            check.compare(
                &format!("D[1] = π₁ on {a}"),
                CoKleisli::identity(&a).d()?.rel(),
                CoKleisli::linear(&RelMor::proj1(&a, &a)).rel(),
            )?;
            let p0 = CoKleisli::linear(&RelMor::proj0(&a, &a));
            let p1p0 = CoKleisli::linear(&RelMor::proj1(&aa, &aa).then(&RelMor::proj0(&a, &a))?);
            check.compare(&format!("D[π₀] = π₁π₀ on {a}"), p0.d()?.rel(), p1p0.rel())?;
        }
    }
    if want("cd5") {
        for (f, g) in chains {
            let a = f.src();
            let lhs = f.then(g)?.d()?;
            let pi0f = f.after_linear(&RelMor::proj0(a, a))?;
            let rhs = pi0f.pair(&f.d()?)?.then(&g.d()?)?;
            check.compare(
                &format!("D[{f};{g}] = ⟨π₀{f}, D[{f}]⟩D[{g}]", f = f.rel(), g = g.rel()),
                lhs.rel(),
                rhs.rel(),
            )?;
        }
    }
    Ok(())
}

/// The sample coKleisli maps: `ε` and the copy-dual `e` on `X`, and `μ`, `ε`
/// on `!X`.
pub fn sample_maps(x: &RelObj) -> Vec<CoKleisli> {
    let bx = RelObj::bang(x);
    vec![
        CoKleisli::identity(x),
        CoKleisli::wrap(RelMor::copy_dual_e(x)),
        CoKleisli::wrap(RelMor::mu(x)),
        CoKleisli::identity(&bx),
        CoKleisli::wrap(RelMor::copy_dual_e(&bx)),
    ]
}

/// Composable pairs for the chain rule. The outer map has a finite rank
/// bound on its inputs, which is what makes the composite enumerable.
pub fn sample_chains(x: &RelObj) -> Vec<(CoKleisli, CoKleisli)> {
    let bx = RelObj::bang(x);
    let eps = CoKleisli::identity(x);
    let e = CoKleisli::wrap(RelMor::copy_dual_e(x));
    let mu = CoKleisli::wrap(RelMor::mu(x));
    vec![(e.clone(), eps.clone()), (eps.clone(), eps), (mu, CoKleisli::identity(&bx))]
}

pub const COKLEISLI_AXIOMS: &[&str] = &["cd1", "cd2", "cd3", "cd4", "cd5", "cd6", "cd7", "d2_formula"];

/// The coKleisli CDC axioms on the sample maps over `x`.
pub fn check_cokleisli_axioms(x: &RelObj, axioms: &[&str], cfg: &CheckConfig) -> Result<LawReport, RelError> {
    let mut check = RelCheck::new("cokleisli", cfg);
    add_cokleisli_parts(&mut check, &sample_maps(x), &sample_chains(x), axioms)?;
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rel::{Elem, MSet};

    #[test]
    fn differential_of_identity_is_second_projection() {
        let x = RelObj::base(2);
        let d_eps = CoKleisli::identity(&x).d().unwrap();
        let a = Elem::Atom(0);
        let b = Elem::Atom(1);
        let only_b = Elem::bag(MSet::singleton(Elem::inr(b.clone())));
        let mixed = Elem::bag(MSet::from_elems([Elem::inl(a), Elem::inr(b.clone())]));
        assert!(d_eps.rel().contains(&only_b, &b).unwrap());
        // A point in the first slot is not linear data, so D[ε] ignores it.
        assert!(!d_eps.rel().contains(&mixed, &b).unwrap());
    }

    #[test]
    fn cokleisli_axioms_hold() {
        let cfg = CheckConfig { max_degree: 2, ..CheckConfig::default() };
        let r = check_cokleisli_axioms(&RelObj::base(1), COKLEISLI_AXIOMS, &cfg).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
    }

    #[test]
    fn linear_precomposition_matches_composition() {
        let x = RelObj::base(2);
        let l = RelMor::proj1(&x, &x);
        let via_delta = CoKleisli::linear(&l).then(&CoKleisli::identity(&x)).unwrap();
        let direct = CoKleisli::identity(&x).after_linear(&l).unwrap();
        let r = crate::rel::assert_rel_equal("t", via_delta.rel(), direct.rel(), 3).unwrap();
        assert!(r.pass, "{:?}", r.witnesses);
    }
}
