//! Every registered law, grouped by suite.

use super::corpus::{
    build_corpus, composable_pairs, corpus, fixed_maps, parallel_pairs, same_domain_pairs, tame, CORPUS_SIZE,
};
use super::registry::{LawError, LawSpec, Suite};
use super::{CheckConfig, LawReport, Model, Sampler, SmoothCheck};
use crate::dynamics::{
    add_flat_parts, add_morphism_parts, add_param_solution_parts, add_rig_solution_parts,
    add_unique_construction_parts, canonical_solution, scalar_mult_map, DynSystem, ParamDynSystem,
};
use crate::exponential::{
    add_dem_parts, builtin_exponentials, complex_exp, dem_left_sides, dem_right_sides, dual_exp, pointwise_exp,
    product_exp, real_exp, split_complex_exp, tangent_exp, terminal_exp, value_at_zero, DiffExpMap,
};
use crate::rel::{
    add_bang_dea_parts, add_cokleisli_parts, add_copy_dual_parts, add_mu_dea_parts, add_roundtrip_parts,
    add_storage_axiom_parts, dea_candidates, sample_chains, sample_maps, RelCheck, RelError, RelMonoid, RelMor, RelObj,
};
use crate::rig::{
    self, add_des_parts, add_product_compat_parts, add_rig_law_parts, add_tangent_compat_parts, closed_forms, explicit,
    induced_mult, induced_rig, induced_unit, DiffExpRig,
};
use crate::smooth::axioms::{self as ax, add_equations, add_finite_difference_part, MapEquation};
use crate::smooth::{is_linear, Point, Primitive, SmoothError, SmoothMap};

/// Tolerance for the closed-form rig comparisons and the round trip.
const CLOSED_FORM_TOL: f64 = 1e-8;
/// Sample count for the closed-form rig comparisons.
const CLOSED_FORM_SAMPLES: usize = 100;
/// Step and absolute bound for derivatives against difference quotients.
const FD_STEP: f64 = 1e-5;
const FD_TOL: f64 = 1e-5;
/// The exponential diagrams are sampled on this wider box.
const EXP_BOX: (f64, f64) = (-3.0, 3.0);

type ClosedForm = fn(&[f64]) -> Vec<f64>;
type Outcome = Result<LawReport, LawError>;

fn smooth_with(check: SmoothCheck, build: impl FnOnce(&mut SmoothCheck) -> Result<(), SmoothError>) -> Outcome {
    let mut check = check;
    build(&mut check)?;
    Ok(check.finish())
}

fn smooth(id: &str, cfg: &CheckConfig, build: impl FnOnce(&mut SmoothCheck) -> Result<(), SmoothError>) -> Outcome {
    smooth_with(SmoothCheck::new(id, cfg), build)
}

fn rel(id: &str, cfg: &CheckConfig, build: impl FnOnce(&mut RelCheck) -> Result<(), RelError>) -> Outcome {
    let mut check = RelCheck::new(id, cfg);
    build(&mut check)?;
    Ok(check.finish())
}

fn p(v: &[f64]) -> Point {
    Point::new(v.to_vec()).unwrap()
}

fn scale(s: f64) -> SmoothMap {
    SmoothMap::primitive(Primitive::Scale(s))
}

fn square() -> SmoothMap {
    SmoothMap::primitive(Primitive::Polynomial(vec![0.0, 0.0, 1.0]))
}

/// `f(at)` against an expected value, as a one-point part.
fn spot(check: &mut SmoothCheck, label: &str, f: &SmoothMap, at: &[f64], expected: &[f64]) {
    let got = f.eval_at(at).map(|v| (v, expected.to_vec()));
    check.compare_at(label, &[(format!("{:?}", at), got)]);
}

// ---------------------------------------------------------------------------
// smooth-axioms

fn corpus_equations(
    id: &str,
    cfg: &CheckConfig,
    eqs: impl Fn(&[SmoothMap]) -> Result<Vec<MapEquation>, SmoothError>,
) -> Outcome {
    let maps = corpus(cfg);
    smooth(id, cfg, |c| add_equations(c, &eqs(&maps)?).map(|_| ()))
}

fn composite_equations(
    id: &str,
    cfg: &CheckConfig,
    eqs: impl Fn(&(SmoothMap, SmoothMap)) -> Result<Vec<MapEquation>, SmoothError>,
) -> Outcome {
    smooth(id, cfg, |c| add_equations(c, &each(&composable_pairs(cfg), eqs)?).map(|_| ()))
}

fn each<T>(
    items: &[T],
    f: impl Fn(&T) -> Result<Vec<MapEquation>, SmoothError>,
) -> Result<Vec<MapEquation>, SmoothError> {
    let mut out = Vec::new();
    for x in items {
        out.extend(f(x)?);
    }
    Ok(out)
}

/// Linear maps built from structure alone.
fn structural_linear_maps() -> Vec<SmoothMap> {
    vec![
        SmoothMap::identity(2),
        SmoothMap::proj0(1, 2),
        SmoothMap::proj1(2, 1),
        SmoothMap::zero(2, 3),
        SmoothMap::interchange(1, 1, 1, 1),
        SmoothMap::interchange(1, 2, 2, 1),
        SmoothMap::oplus(2),
        SmoothMap::associator(1, 1, 1),
        SmoothMap::swap(1, 2),
        SmoothMap::inj0(2, 1),
        SmoothMap::inj1(1, 2),
        scale(2.0),
    ]
}

/// Composites of linear maps, each of which must again be linear.
fn composite_linear_maps() -> Vec<SmoothMap> {
    let o1 = SmoothMap::oplus(1);
    vec![
        SmoothMap::proj0(2, 1).then(&o1).unwrap(),
        SmoothMap::pair(&SmoothMap::proj1(1, 1), &SmoothMap::proj0(1, 1)).unwrap(),
        SmoothMap::product(&scale(2.0), &o1),
        SmoothMap::add(&SmoothMap::proj0(1, 1), &SmoothMap::proj1(1, 1)).unwrap().then(&scale(-3.0)).unwrap(),
        SmoothMap::interchange(1, 1, 1, 1).then(&SmoothMap::product(&o1, &o1)).unwrap(),
        SmoothMap::add(&SmoothMap::swap(1, 1), &scale(0.5).tangent()).unwrap(),
    ]
}

fn linear_chain_equations(maps: &[SmoothMap]) -> Result<Vec<MapEquation>, SmoothError> {
    let mut out = Vec::new();
    for l in [scale(2.0), SmoothMap::oplus(1), SmoothMap::swap(1, 1), SmoothMap::proj0(1, 2)] {
        let g = maps.iter().find(|g| g.dom() == l.cod());
        let k = maps.iter().find(|k| k.cod() == l.dom());
        if let (Some(g), Some(k)) = (g, k) {
            out.extend(ax::linear_chain(&l, g, k)?);
        }
    }
    Ok(out)
}

fn smooth_examples(id: &str, cfg: &CheckConfig) -> Outcome {
    smooth(id, cfg, |c| {
        spot(c, "D[1](7,4) = 4", &SmoothMap::identity(1).differential(), &[7.0, 4.0], &[4.0]);
        spot(c, "D[x²](3,1) = 6", &square().differential(), &[3.0, 1.0], &[6.0]);
        spot(c, "D[exp](0,5) = 5", &SmoothMap::exp().differential(), &[0.0, 5.0], &[5.0]);
        spot(c, "T(exp)(0,3) = (1,3)", &SmoothMap::exp().tangent(), &[0.0, 3.0], &[1.0, 3.0]);
        spot(c, "T(x²)(3,1) = (9,6)", &square().tangent(), &[3.0, 1.0], &[9.0, 6.0]);
        spot(c, "⊕(2,3) = 5", &SmoothMap::oplus(1), &[2.0, 3.0], &[5.0]);
        spot(
            c,
            "c((1,2),(3,4)) = ((1,3),(2,4))",
            &SmoothMap::interchange(1, 1, 1, 1),
            &[1.0, 2.0, 3.0, 4.0],
            &[1.0, 3.0, 2.0, 4.0],
        );
        spot(c, "exp(1) = e", &SmoothMap::exp(), &[1.0], &[std::f64::consts::E]);
        Ok(())
    })
}

fn corpus_health(id: &str, cfg: &CheckConfig) -> Outcome {
    let a = corpus(cfg);
    let b = build_corpus(cfg);
    let probes = Sampler::new(cfg.seed, "corpus/probes", cfg.sample_box);
    smooth(id, cfg, |c| {
        c.require("corpus size", a.len() == CORPUS_SIZE, || format!("{} maps", a.len()));
        let same = a.iter().zip(&b).all(|(f, g)| format!("{f:?}") == format!("{g:?}"));
        c.require("corpus is deterministic", same, || "two builds differ".into());
        // The fixed head is admitted unconditionally; only drawn terms are filtered.
        let drawn = &a[fixed_maps().len()..];
        let wild: Vec<String> = drawn.iter().filter(|f| !tame(f, &probes)).map(|f| f.to_string()).collect();
        c.require("drawn maps are tame", wild.is_empty(), || wild.join(", "));
        let dims = a.iter().all(|f| (1..=3).contains(&f.dom()) && (1..=3).contains(&f.cod()));
        c.require("dimensions at most 3", dims, || "out of range".into());
        Ok(())
    })
}

fn smooth_laws() -> Vec<LawSpec> {
    use Model::Smooth as S;
    use Suite::SmoothAxioms as A;
    vec![
        LawSpec::new(
            "smooth.cd1",
            A,
            S,
            "Def 2.2 [CD.1] \"D[f+g] = D[f] + D[g] and D[0]=0\"",
            ("D[f+g], D[0]", "D[f]+D[g], 0"),
            "every parallel pair of corpus maps, scale-aware residual at sampled points",
            |id, cfg| corpus_equations(id, cfg, |m| each(&parallel_pairs(m), |(f, g)| ax::cd1(f, g))),
        ),
        LawSpec::new(
            "smooth.cd2",
            A,
            S,
            "Def 2.2 [CD.2] \"⟨1, 0⟩ D[f]=0\"",
            ("(1×⊕)D[f], ⟨1,0⟩D[f]", "(1×π₀)D[f] + (1×π₁)D[f], 0"),
            "every corpus map, scale-aware residual at sampled points",
            |id, cfg| corpus_equations(id, cfg, |m| each(m, ax::cd2)),
        ),
        LawSpec::new(
            "smooth.cd3",
            A,
            S,
            "Def 2.2 [CD.3] \"D[1]=π₁, D[π₀] = π₁π₀\"",
            ("D[1], D[π₀], D[π₁]", "π₁, π₁π₀, π₁π₁"),
            "identities and projections on ℝᵃ×ℝᵇ for several (a, b)",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for (a, b) in [(1, 1), (1, 2), (2, 1), (3, 3)] {
                        add_equations(c, &ax::cd3(a, b)?)?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.cd4",
            A,
            S,
            "Def 2.2 [CD.4] \"D[⟨f, g⟩] = ⟨D[f] , D[g]⟩\"",
            ("D⟨f,g⟩", "⟨D[f], D[g]⟩"),
            "corpus maps paired with the next map of the same domain",
            |id, cfg| corpus_equations(id, cfg, |m| each(&same_domain_pairs(m), |(f, g)| ax::cd4(f, g))),
        ),
        LawSpec::new(
            "smooth.cd5",
            A,
            S,
            "Def 2.2 [CD.5] \"D[fg] = ⟨π₀ f, D[f]⟩ D[g]\"",
            ("D[fg]", "⟨π₀f, D[f]⟩D[g]"),
            "composable pairs of corpus maps whose composite is tame",
            |id, cfg| composite_equations(id, cfg, |(f, g)| ax::cd5(f, g)),
        ),
        LawSpec::new(
            "smooth.cd6",
            A,
            S,
            "Def 2.2 [CD.6] \"D²[f] = D[f]\"",
            ("(⟨1,0⟩×⟨0,1⟩)D²[f]", "D[f]"),
            "every corpus map",
            |id, cfg| corpus_equations(id, cfg, |m| each(m, ax::cd6)),
        ),
        LawSpec::new(
            "smooth.cd7",
            A,
            S,
            "Def 2.2 [CD.7] \"c D²[f] = D²[f]\"",
            ("cD²[f]", "D²[f]"),
            "every corpus map",
            |id, cfg| corpus_equations(id, cfg, |m| each(m, ax::cd7)),
        ),
        LawSpec::new(
            "smooth.fd_oracle",
            A,
            S,
            "Ex 2.3 \"standard derivative of smooth functions\"",
            ("D[f](x, v)", "(f(x+hv) − f(x−hv)) / 2h"),
            "every corpus map, h = 1e-5, absolute error ≤ 1e-5 (tolerance pinned)",
            |id, cfg| {
                let maps = corpus(cfg);
                smooth_with(SmoothCheck::new(id, cfg).tol(FD_TOL).absolute(), |c| {
                    for f in &maps {
                        add_finite_difference_part(c, f, FD_STEP);
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.corpus",
            A,
            S,
            "corpus of maps (no source text)",
            ("corpus(seed)", "56 tame maps, identical on rebuild"),
            "rebuild the corpus and probe every drawn map f and D[f], D²[f], D³[f] for magnitude ≤ 100",
            corpus_health,
        )
        .plumbing(),
        LawSpec::new(
            "smooth.examples",
            A,
            S,
            "Ex 2.3 \"whose maps are smooth function\"",
            (
                "D[1](7,4), D[x²](3,1), D[exp](0,5), T(exp)(0,3), ⊕(2,3), c((1,2),(3,4))",
                "4, 6, 5, (1,3), 5, ((1,3),(2,4))",
            ),
            "spot values against hand computations",
            smooth_examples,
        ),
        LawSpec::new(
            "smooth.linear.structural",
            A,
            S,
            "Def 2.4 \"is said to be \\textbf{linear}\"; Lemma 2.5 \"useful properties about linear maps\"",
            ("D[l] for l ∈ {1, π₀, π₁, 0, c, ⊕, α, σ, ⟨1,0⟩, ⟨0,1⟩, 2·}", "π₁l"),
            "sampled comparison for each structural map",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    add_equations(c, &each(&structural_linear_maps(), |l| Ok(vec![ax::linear_equation(l)?]))?)
                        .map(|_| ())
                })
            },
        ),
        LawSpec::new(
            "smooth.linear.closure",
            A,
            S,
            "Lemma 2.5 \"useful properties about linear maps\"",
            ("D[l] for composites, pairings, products and sums of linear maps", "π₁l"),
            "sampled comparison for each composite",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    add_equations(c, &each(&composite_linear_maps(), |l| Ok(vec![ax::linear_equation(l)?]))?)
                        .map(|_| ())
                })
            },
        ),
        LawSpec::new(
            "smooth.linear.chain",
            A,
            S,
            "Lemma 2.5 (ix) \"useful properties about linear maps\"",
            ("D[lg], D[kl]", "(l×l)D[g], D[k]l"),
            "linear l ∈ {2·, ⊕, σ, π₀} against the first corpus maps that compose",
            |id, cfg| corpus_equations(id, cfg, linear_chain_equations),
        ),
        LawSpec::new(
            "neg.exp_is_linear",
            A,
            S,
            "Lemma \"reduced (i.e. 0e=0) if and only if\"",
            ("D[exp]", "π₁ exp"),
            "deliberately false: exp is not linear, so the sampled comparison must fail",
            |id, cfg| smooth(id, cfg, |c| add_equations(c, &[ax::linear_equation(&SmoothMap::exp())?]).map(|_| ())),
        )
        .negative(),
        LawSpec::new(
            "smooth.oplus.linear",
            A,
            S,
            "Lemma on ⊕ \"as ⊕ = π₀ + π₁\"",
            ("D[⊕]", "π₁⊕"),
            "ℝ¹, ℝ², ℝ³",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for n in 1..=3 {
                        add_equations(c, &ax::oplus_equations(n)?[..1])?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.oplus.tangent",
            A,
            S,
            "Lemma on ⊕ \"is a commutative monoid and furthermore\"",
            ("T(⊕)", "⊕×⊕"),
            "ℝ¹, ℝ², ℝ³",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for n in 1..=3 {
                        add_equations(c, &ax::oplus_equations(n)?[1..2])?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.oplus.interchange",
            A,
            S,
            "Lemma on ⊕ \"is a commutative monoid and furthermore\"",
            ("cT(⊕)", "⊕"),
            "ℝ¹, ℝ², ℝ³",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for n in 1..=3 {
                        add_equations(c, &ax::oplus_equations(n)?[2..])?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.interchange.involution",
            A,
            S,
            "§2 \"canonical interchange map\"",
            ("cc", "1"),
            "several block shapes",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for (a, b, x, y) in [(1, 1, 1, 1), (1, 2, 2, 1), (2, 1, 1, 3)] {
                        let lhs = SmoothMap::interchange(a, b, x, y).then(&SmoothMap::interchange(a, x, b, y))?;
                        c.compare(
                            &format!("cc = 1 on blocks ({a},{b},{x},{y})"),
                            &lhs,
                            &SmoothMap::identity(a + b + x + y),
                        )?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.tangent.chain",
            A,
            S,
            "Lemma on T (i) \"useful properties involving the tangent functor\"",
            ("D[fg]", "T(f)D[g]"),
            "composable pairs of corpus maps whose composite is tame",
            |id, cfg| composite_equations(id, cfg, |(f, g)| Ok(ax::tangent_composite_equations(f, g)?[..1].to_vec())),
        ),
        LawSpec::new(
            "smooth.tangent.functor",
            A,
            S,
            "Prop 2.7 \"tangent functor\"",
            ("T(fg), T(1)", "T(f)T(g), 1"),
            "composable pairs of corpus maps whose composite is tame",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    add_equations(
                        c,
                        &each(&composable_pairs(cfg), |(f, g)| {
                            Ok(ax::tangent_composite_equations(f, g)?[1..].to_vec())
                        })?,
                    )?;
                    for n in 1..=3 {
                        c.compare(
                            &format!("T(1) = 1 on ℝ{n}"),
                            &SmoothMap::identity(n).tangent(),
                            &SmoothMap::identity(2 * n),
                        )?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.tangent.zero_section",
            A,
            S,
            "Lemma on T (ii) \"useful properties involving the tangent functor\"",
            ("⟨1,0⟩T(f)", "f⟨1,0⟩"),
            "every corpus map",
            |id, cfg| corpus_equations(id, cfg, |m| each(m, |f| Ok(ax::tangent_equations(f)?[..1].to_vec()))),
        ),
        LawSpec::new(
            "smooth.tangent.linear",
            A,
            S,
            "Lemma on T (iii) \"useful properties involving the tangent functor\"",
            ("T(l)", "l×l"),
            "structural and composite linear maps",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for l in structural_linear_maps().into_iter().chain(composite_linear_maps()) {
                        c.compare(&format!("T({l}) = {l}×{l}"), &l.tangent(), &SmoothMap::product(&l, &l))?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "smooth.tangent.pair",
            A,
            S,
            "Lemma on T (iv) \"useful properties involving the tangent functor\"",
            ("T⟨f,g⟩", "⟨T(f),T(g)⟩c"),
            "corpus maps paired with the next map of the same domain",
            |id, cfg| {
                corpus_equations(id, cfg, |m| {
                    each(&same_domain_pairs(m), |(f, g)| Ok(ax::tangent_pair_equations(f, g)?[..1].to_vec()))
                })
            },
        ),
        LawSpec::new(
            "smooth.tangent.product",
            A,
            S,
            "Lemma on T (v) \"useful properties involving the tangent functor\"",
            ("D[f×g], T(f×g)c", "c(D[f]×D[g]), c(T(f)×T(g))"),
            "consecutive corpus maps",
            |id, cfg| {
                corpus_equations(id, cfg, |m| {
                    let pairs: Vec<_> = m.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
                    each(&pairs, |(f, g)| {
                        let all = ax::tangent_pair_equations(f, g)?;
                        Ok(all[all.len() - 2..].to_vec())
                    })
                })
            },
        ),
        LawSpec::new(
            "smooth.tangent.additive",
            A,
            S,
            "Lemma on T (vi) \"useful properties involving the tangent functor\"",
            ("T(f+g), T(0)", "T(f)+T(g), 0"),
            "every parallel pair of corpus maps",
            |id, cfg| {
                corpus_equations(id, cfg, |m| {
                    let mut out =
                        each(&parallel_pairs(m), |(f, g)| Ok(ax::tangent_pair_equations(f, g)?[1..2].to_vec()))?;
                    out.extend(each(m, |f| Ok(ax::tangent_equations(f)?[2..].to_vec()))?);
                    Ok(out)
                })
            },
        ),
        LawSpec::new(
            "smooth.tangent.differential",
            A,
            S,
            "Lemma on T (vii) \"useful properties involving the tangent functor\"",
            ("D[T(f)]", "cT(D[f])"),
            "every corpus map",
            |id, cfg| corpus_equations(id, cfg, |m| each(m, |f| Ok(ax::tangent_equations(f)?[1..2].to_vec()))),
        ),
        LawSpec::new(
            "smooth.slot_identity",
            A,
            S,
            "Prop map→rig proof \"which we leave as an exercise to the reader\"",
            ("α(1×D[f])D[g]", "((1×1)×⟨0,1⟩)D[(1×f)D[g]]"),
            "composable pairs of corpus maps whose composite is tame",
            |id, cfg| composite_equations(id, cfg, |(f, g)| Ok(vec![ax::differential_slot_identity(f, g)?])),
        ),
    ]
}

// ---------------------------------------------------------------------------
// exponentials

/// Every exponential the diagrams are checked on: the builtins and the
/// product and tangent constructions applied to them.
fn all_exponentials() -> Vec<DiffExpMap> {
    let mut out = builtin_exponentials();
    out.push(pointwise_exp(3));
    out.push(product_exp(&real_exp(), &complex_exp()));
    out.push(product_exp(&complex_exp(), &split_complex_exp()));
    for e in [real_exp(), complex_exp(), split_complex_exp(), dual_exp()] {
        out.push(tangent_exp(&e));
    }
    out
}

fn exp_check(id: &str, cfg: &CheckConfig) -> SmoothCheck {
    SmoothCheck::new(id, cfg).sample_box(EXP_BOX.0, EXP_BOX.1)
}

fn dem_law(id: &str, cfg: &CheckConfig, exps: Vec<DiffExpMap>) -> Outcome {
    smooth_with(exp_check(id, cfg), |c| {
        for e in &exps {
            add_dem_parts(c, e);
        }
        Ok(())
    })
}

fn dem_side_law(id: &str, cfg: &CheckConfig, left: bool) -> Outcome {
    smooth_with(exp_check(id, cfg), |c| {
        for e in all_exponentials() {
            let ((l, r), name) = if left {
                (dem_left_sides(&e), "⟨0,1⟩D[e] = 1")
            } else {
                (dem_right_sides(&e), "⊕e = (1×e)D[e]")
            };
            c.compare(&format!("{}: {name}", e.label), &l, &r)?;
        }
        Ok(())
    })
}

fn exp_closed_forms(id: &str, cfg: &CheckConfig) -> Outcome {
    smooth_with(exp_check(id, cfg), |c| {
        for e in builtin_exponentials() {
            let want: Vec<f64> = if e.dim == 0 {
                vec![]
            } else {
                (0..e.dim).map(|i| if i == 0 || e.label.contains("pointwise") { 1.0 } else { 0.0 }).collect()
            };
            let got = value_at_zero(&e).into_coords();
            c.compare_at(&format!("{}: e(0)", e.label), &[("0".into(), Ok((got, want)))]);
        }
        let ec = complex_exp();
        let half_pi = std::f64::consts::FRAC_PI_2;
        spot(c, "exp_C(0, π/2) = (0, 1)", &ec.e, &[0.0, half_pi], &[0.0, 1.0]);
        spot(c, "exp_dual(x, y) = (eˣ, eˣy) at (1, 2)", &dual_exp().e, &[1.0, 2.0], &[1f64.exp(), 2.0 * 1f64.exp()]);
        c.compare(
            "eᵃ⁺ᵇ = eᵃeᵇ",
            &SmoothMap::oplus(1).then(&SmoothMap::exp())?,
            &SmoothMap::product(&SmoothMap::exp(), &SmoothMap::exp()).then(&SmoothMap::mul())?,
        )?;
        let sum_then_exp = SmoothMap::oplus(2).then(&ec.e)?;
        let both = SmoothMap::product(&ec.e, &ec.e);
        c.compare_with("e^{z+w} = eᶻeʷ in ℂ", 4, |v| {
            Ok((sum_then_exp.eval(v)?.into_coords(), closed_forms::complex(both.eval(v)?.coords())))
        });
        Ok(())
    })
}

fn exp_not_reduced(id: &str, cfg: &CheckConfig) -> Outcome {
    smooth(id, cfg, |c| {
        for e in builtin_exponentials() {
            let terminal = e.dim == 0;
            let e0 = value_at_zero(&e);
            let reduced = e0.coords().iter().all(|x| *x == 0.0);
            c.require(&format!("{}: 0e = 0 iff terminal", e.label), reduced == terminal, || format!("e(0) = {e0}"));
            let linear = is_linear(&e.e, cfg).pass;
            c.require(&format!("{}: linear iff terminal", e.label), linear == terminal, || {
                format!("linear = {linear}")
            });
        }
        Ok(())
    })
}

fn exponential_laws() -> Vec<LawSpec> {
    use Model::Smooth as S;
    use Suite::Exponentials as E;
    const DEM: &str = "Def 3.1 \"such that the following diagrams commute\"";
    vec![
        LawSpec::new(
            "dem.left",
            E,
            S,
            DEM,
            ("⟨0,1⟩D[e]", "1"),
            "every builtin and constructed exponential on [−3,3]ⁿ",
            |id, cfg| dem_side_law(id, cfg, true),
        ),
        LawSpec::new(
            "dem.right",
            E,
            S,
            DEM,
            ("⊕e", "(1×e)D[e]"),
            "every builtin and constructed exponential on [−3,3]ⁿ",
            |id, cfg| dem_side_law(id, cfg, false),
        ),
        LawSpec::new(
            "exp.real",
            E,
            S,
            "Ex 3.6.i \"satisfies the left diagram\"",
            ("⟨0,1⟩D[eˣ], ⊕eˣ", "1, (1×eˣ)D[eˣ]"),
            "both diagrams on [−3,3]",
            |id, cfg| dem_law(id, cfg, vec![real_exp()]),
        ),
        LawSpec::new(
            "exp.pointwise",
            E,
            S,
            "Ex 3.6.ii \"the point-wise exponential functions\"",
            ("⟨0,1⟩D[e], ⊕e", "1, (1×e)D[e]"),
            "e = exp×exp and exp×exp×exp on [−3,3]ⁿ",
            |id, cfg| dem_law(id, cfg, vec![pointwise_exp(2), pointwise_exp(3)]),
        ),
        LawSpec::new(
            "exp.dual",
            E,
            S,
            "Ex 3.6.iii \"the dual number exponential function is\"",
            ("⟨0,1⟩D[e], ⊕e", "1, (1×e)D[e]"),
            "e(x, y) = (eˣ, eˣy) on [−3,3]²",
            |id, cfg| dem_law(id, cfg, vec![dual_exp()]),
        ),
        LawSpec::new(
            "exp.complex",
            E,
            S,
            "Ex 3.6.iv \"complex exponential function is\"",
            ("⟨0,1⟩D[ε], ⊕ε", "1, (1×ε)D[ε]"),
            "ε(x, y) = (eˣcos y, eˣsin y) on [−3,3]²",
            |id, cfg| dem_law(id, cfg, vec![complex_exp()]),
        ),
        LawSpec::new(
            "exp.split",
            E,
            S,
            "Ex 3.6.v \"defined using the hyperbolic cosine\"",
            ("⟨0,1⟩D[ε′], ⊕ε′", "1, (1×ε′)D[ε′]"),
            "ε′(x, y) = (eˣcosh y, eˣsinh y) on [−3,3]²",
            |id, cfg| dem_law(id, cfg, vec![split_complex_exp()]),
        ),
        LawSpec::new(
            "exp.terminal",
            E,
            S,
            "Corollary \"the identity map of the terminal object is a differential exponential map\"",
            ("⟨0,1⟩D[1_⊤], ⊕1_⊤", "1, (1×1_⊤)D[1_⊤]"),
            "the identity of ℝ⁰",
            |id, cfg| dem_law(id, cfg, vec![terminal_exp()]),
        ),
        LawSpec::new(
            "exp.product",
            E,
            S,
            "Corollary \"then their product\"",
            ("⟨0,1⟩D[e×e′], ⊕(e×e′)", "1, (1×(e×e′))D[e×e′]"),
            "exp×exp_C and exp_C×exp_split on [−3,3]ⁿ",
            |id, cfg| {
                dem_law(
                    id,
                    cfg,
                    vec![product_exp(&real_exp(), &complex_exp()), product_exp(&complex_exp(), &split_complex_exp())],
                )
            },
        ),
        LawSpec::new(
            "exp.tangent",
            E,
            S,
            "Lemma 3.4 \"is a differential exponential map\" (T(e))",
            ("⟨0,1⟩D[T(e)], ⊕T(e)", "1, (1×T(e))D[T(e)]"),
            "T applied to exp, exp_C, exp_split and exp_dual on [−3,3]ⁿ",
            |id, cfg| {
                dem_law(
                    id,
                    cfg,
                    [real_exp(), complex_exp(), split_complex_exp(), dual_exp()].iter().map(tangent_exp).collect(),
                )
            },
        ),
        LawSpec::new(
            "exp.closed_forms",
            E,
            S,
            "Ex 3.6.iv \"e^{z+w} = e^z e^w\"",
            ("e(0), ε(0, π/2), T(exp)(1, 2), ⊕e", "u, (0, 1), (e, 2e), (e×e)⊙"),
            "spot values and sampled multiplicativity against hand-written complex multiplication",
            exp_closed_forms,
        ),
        LawSpec::new(
            "exp.not_reduced",
            E,
            S,
            "Lemma \"reduced (i.e. 0e=0) if and only if\"",
            ("0e = 0, D[e] = π₁e", "A terminal"),
            "each builtin: reducedness and linearity hold exactly for the terminal one",
            exp_not_reduced,
        ),
        LawSpec::new(
            "neg.identity_as_exp",
            E,
            S,
            DEM,
            ("⟨0,1⟩D[1], ⊕1", "1, (1×1)D[1]"),
            "deliberately false: the identity of ℝ fails the right diagram (⊕ gives 1 at (1,0), the other side 0)",
            |id, cfg| dem_law(id, cfg, vec![DiffExpMap::new("identity", SmoothMap::identity(1)).unwrap()]),
        )
        .negative(),
        LawSpec::new(
            "neg.zero_as_exp",
            E,
            S,
            DEM,
            ("⟨0,1⟩D[0], ⊕0", "1, (1×0)D[0]"),
            "deliberately false: the zero map of ℝ fails the left diagram since D[0] = 0",
            |id, cfg| dem_law(id, cfg, vec![DiffExpMap::new("zero", SmoothMap::zero(1, 1)).unwrap()]),
        )
        .negative(),
    ]
}

// ---------------------------------------------------------------------------
// rigs

fn closed_form_law(id: &str, cfg: &CheckConfig, cases: Vec<(DiffExpMap, ClosedForm, Vec<f64>)>) -> Outcome {
    smooth_with(SmoothCheck::new(id, cfg).samples(CLOSED_FORM_SAMPLES).tol(CLOSED_FORM_TOL), |c| {
        for (e, closed, unit) in cases {
            let m = induced_mult(&e);
            c.compare_with(&format!("⊙ on {} against closed form", e.label), 2 * e.dim, |v| {
                Ok((m.eval(v)?.into_coords(), closed(v.coords())))
            });
            c.compare_at(&format!("u on {}", e.label), &[("⊤".into(), Ok((induced_unit(&e).into_coords(), unit)))]);
        }
        Ok(())
    })
}

fn explicit_pairs() -> Vec<DiffExpRig> {
    vec![
        DiffExpRig::new(explicit::real(), real_exp()),
        DiffExpRig::new(explicit::complex(), complex_exp()),
        DiffExpRig::new(explicit::split(), split_complex_exp()),
        DiffExpRig::new(explicit::dual(), dual_exp()),
        DiffExpRig::new(explicit::pointwise(2), pointwise_exp(2)),
        DiffExpRig::new(explicit::pointwise(3), pointwise_exp(3)),
    ]
}

fn rig_laws() -> Vec<LawSpec> {
    use Model::Smooth as S;
    use Suite::Rigs as R;
    vec![
        LawSpec::new(
            "rigs.mult.real",
            R,
            S,
            "Ex 4.7.i \"standard multiplication of real numbers\"",
            ("⊙ₑ, uₑ for e = eˣ", "x₁x₂, 1"),
            "100 samples, tolerance pinned at 1e-8",
            |id, cfg| closed_form_law(id, cfg, vec![(real_exp(), closed_forms::real, vec![1.0])]),
        ),
        LawSpec::new(
            "rigs.mult.pointwise",
            R,
            S,
            "Ex 4.7.ii \"(1, \\hdots, 1)\"",
            ("⊙ₑ, uₑ for pointwise exp", "componentwise product, (1, …, 1)"),
            "ℝ² and ℝ³, 100 samples, tolerance pinned at 1e-8",
            |id, cfg| {
                closed_form_law(
                    id,
                    cfg,
                    vec![
                        (pointwise_exp(2), closed_forms::pointwise, vec![1.0; 2]),
                        (pointwise_exp(3), closed_forms::pointwise, vec![1.0; 3]),
                    ],
                )
            },
        ),
        LawSpec::new(
            "rigs.mult.dual",
            R,
            S,
            "Ex 4.7.iii \"precisely the multiplication of dual numbers\"",
            ("⊙ₑ, uₑ for the dual exponential", "(x₁x₂, x₁y₂+y₁x₂), (1, 0)"),
            "100 samples, tolerance pinned at 1e-8",
            |id, cfg| closed_form_law(id, cfg, vec![(dual_exp(), closed_forms::dual, vec![1.0, 0.0])]),
        ),
        LawSpec::new(
            "rigs.mult.complex",
            R,
            S,
            "Ex 4.7.iv \"this ring structure on ℝ² is that of complex numbers\"",
            ("⊙ε, uε", "(x₁x₂−y₁y₂, x₁y₂+x₂y₁), (1, 0)"),
            "100 samples, tolerance pinned at 1e-8",
            |id, cfg| closed_form_law(id, cfg, vec![(complex_exp(), closed_forms::complex, vec![1.0, 0.0])]),
        ),
        LawSpec::new(
            "rigs.mult.split",
            R,
            S,
            "Ex 4.7.v \"is that of split complex numbers\"",
            ("⊙ε′, uε′", "(x₁x₂+y₁y₂, x₁y₂+x₂y₁), (1, 0)"),
            "100 samples, tolerance pinned at 1e-8",
            |id, cfg| closed_form_law(id, cfg, vec![(split_complex_exp(), closed_forms::split, vec![1.0, 0.0])]),
        ),
        LawSpec::new(
            "rigs.laws",
            R,
            S,
            "Prop map→rig \"define the maps\"; bilinearity \"is bilinear, that is\"",
            (
                "associativity, commutativity, units, D[⊙], distributivity of (A, ⊙ₑ, uₑ)",
                "the commutative rig equations",
            ),
            "the rig induced by every builtin and constructed exponential",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for e in all_exponentials() {
                        add_rig_law_parts(c, &induced_rig(&e));
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "rigs.laws.explicit",
            R,
            S,
            "Lemma \"is a commutative rig\"",
            ("the rig equations for hand-written ⊙", "the commutative rig equations"),
            "ℝ, ℂ, split-complex, dual and pointwise rigs written out by hand",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for x in explicit_pairs() {
                        add_rig_law_parts(c, &x.rig);
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "rigs.des",
            R,
            S,
            "Prop map→rig \"define the maps\"",
            ("D[e], 0e, ⊕e", "(e×1)⊙ₑ, uₑ, (e×e)⊙ₑ"),
            "every builtin and constructed exponential with its induced rig",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for e in all_exponentials() {
                        add_des_parts(c, &DiffExpRig::induced(&e));
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "rigs.des.explicit",
            R,
            S,
            "Prop rig→map \"be a differential exponential rig. Then\"",
            ("D[e], 0e, ⊕e, and then ⟨0,1⟩D[e], ⊕e", "(e×1)⊙, u, (e×e)⊙, and then 1, (1×e)D[e]"),
            "hand-written rigs with their exponentials",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for x in explicit_pairs() {
                        add_des_parts(c, &x);
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "rigs.roundtrip",
            R,
            S,
            "Theorem \"isomorphic to its category of differential\" exponential rigs; proof \"we first observe that\"",
            ("⊙ₑ, uₑ, D²[e]", "⊙, u, (π₀×π₁)D[e] + (D[e]×π₀)⊙"),
            "hand-written ℂ, split, ℝ, dual and pointwise rigs; tolerance pinned at 1e-8",
            |id, cfg| {
                smooth_with(SmoothCheck::new(id, cfg).tol(CLOSED_FORM_TOL), |c| {
                    for x in explicit_pairs() {
                        rig::add_roundtrip_parts(c, &x);
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "rigs.compat.product",
            R,
            S,
            "Lemma \"the following equality holds for the differential exponential map\" e×e′",
            ("⊙_{e×e′}, u_{e×e′}", "c(⊙ₑ×⊙ₑ′), ⟨uₑ, uₑ′⟩"),
            "exp×exp_C, exp_C×exp_split, exp_dual×exp",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    add_product_compat_parts(c, &real_exp(), &complex_exp());
                    add_product_compat_parts(c, &complex_exp(), &split_complex_exp());
                    add_product_compat_parts(c, &dual_exp(), &real_exp());
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "rigs.compat.tangent",
            R,
            S,
            "Lemma \"u_{T(e)} = ⟨u_e, 0⟩\"",
            ("⊙_{T(e)}, u_{T(e)}", "cT(⊙ₑ), ⟨uₑ, 0⟩"),
            "T(exp), T(exp_C), T(exp_split)",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for e in [real_exp(), complex_exp(), split_complex_exp()] {
                        add_tangent_compat_parts(c, &e);
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "neg.additive_rig",
            R,
            S,
            "Def of differential rig \"is bilinear, that is\"",
            ("D[+] for (ℝ, +, 0)", "(π₀×π₁)+ + (π₁×π₀)+"),
            "deliberately false: addition is a commutative monoid but not bilinear, so the rig laws must fail",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    add_rig_law_parts(c, &explicit::additive());
                    Ok(())
                })
            },
        )
        .negative(),
    ]
}

// ---------------------------------------------------------------------------
// dynamics

fn dynamics_laws() -> Vec<LawSpec> {
    use Model::Smooth as S;
    use Suite::Dynamics as D;
    vec![
        LawSpec::new(
            "dyn.exp_solution",
            D,
            S,
            "Prop \"solution of the dynamical system\" (A, u, 1)",
            ("0e, D[e]", "u, (e×1)(1×1)⊙"),
            "every hand-written rig with its exponential, against the system (A, u, 1)",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for x in explicit_pairs() {
                        let sys = DynSystem::new(x.rig.unit.clone(), SmoothMap::identity(x.dim()))?;
                        add_rig_solution_parts(c, &x.exp.e, &x.rig, &sys)?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "dyn.decay",
            D,
            S,
            "Ex (SMOOTH dynamical systems) \"f^\\prime(x) + \\lambda f(x) = 0\"",
            ("f(0), ⟨1, c̄⟩D[f] for f(x) = b·e^{−λx}", "b, −r·f"),
            "morphisms (ℝ, 0, c̄) → (ℝ, b, −r·) with λ = r/c",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for (r, cc, b) in [(2.0, 1.0, 1.0), (1.0, 0.5, 1.5), (-0.5, 2.0, -1.0)] {
                        let lambda: f64 = r / cc;
                        let f = scale(-lambda).then(&SmoothMap::exp())?.then(&scale(b))?;
                        let src = DynSystem::new(p(&[0.0]), SmoothMap::constant(1, p(&[cc])))?;
                        let tgt = DynSystem::new(p(&[b]), scale(-r))?;
                        add_morphism_parts(c, &f, &src, &tgt)?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "dyn.canonical_solution",
            D,
            S,
            "Prop (completeness) proof \"consider the following composite\"",
            ("(⊙ᵃ × 1);D[e] at (x, y)", "e^{ax}·y, and the parametrized solution diagrams for (A, 1, ⊙ᵃ)"),
            "a ∈ {−1, 0.5, 2} in ℝ and a = (0.5, −1) in ℂ",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    let real = DiffExpRig::new(explicit::real(), real_exp());
                    for a in [-1.0, 0.5, 2.0] {
                        let f = canonical_solution(&real, &p(&[a]), &SmoothMap::identity(1))?;
                        c.compare_with(&format!("a = {a}: f(x, y) = e^(ax)·y"), 2, |v| {
                            let (x, y) = (v.coords()[0], v.coords()[1]);
                            Ok((f.eval(v)?.into_coords(), vec![(a * x).exp() * y]))
                        });
                        let sys = ParamDynSystem::new(SmoothMap::identity(1), scalar_mult_map(&real.rig, &p(&[a]))?)?;
                        add_param_solution_parts(c, &f, &real.rig, &sys)?;
                    }
                    let cx = DiffExpRig::new(explicit::complex(), complex_exp());
                    let a = p(&[0.5, -1.0]);
                    let f = canonical_solution(&cx, &a, &SmoothMap::identity(2))?;
                    let sys = ParamDynSystem::new(SmoothMap::identity(2), scalar_mult_map(&cx.rig, &a)?)?;
                    add_param_solution_parts(c, &f, &cx.rig, &sys)?;
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "dyn.context_example",
            D,
            S,
            "Ex §5 \"f(x, \\vec y) = e^{x a}h(\\vec y)\"",
            ("(⊙ᵃ × h);D[e]", "e^{xa}h(y), a parametrized solution of (ℝ, h, ⊙ᵃ)"),
            "a = 2 with h = sin, and a = −1 with h = cosh",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    let real = DiffExpRig::new(explicit::real(), real_exp());
                    for (a, h, name) in [(2.0, Primitive::Sin, "sin"), (-1.0, Primitive::Cosh, "cosh")] {
                        let hm = SmoothMap::primitive(h.clone());
                        let f = canonical_solution(&real, &p(&[a]), &hm)?;
                        c.compare_with(&format!("e^({a}x){name}(y)"), 2, |v| {
                            let (x, y) = (v.coords()[0], v.coords()[1]);
                            Ok((f.eval(v)?.into_coords(), vec![(a * x).exp() * hm.eval_at(&[y])?[0]]))
                        });
                        let sys = ParamDynSystem::new(hm.clone(), scalar_mult_map(&real.rig, &p(&[a]))?)?;
                        add_param_solution_parts(c, &f, &real.rig, &sys)?;
                    }
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "dyn.flat",
            D,
            S,
            "Lemma (flat) \"We leave these as an exercise\"",
            ("⊙⁰, ⊙ᵘ, ⊙ᵃ⁺ᵇ, ⊙ᵃ⊙ᵇ, D[⊙ᵃ], (1×⊙ᵃ)⊙, u⊙ᵃ", "0, 1, ⊙ᵃ+⊙ᵇ, ⊙ᵇ⊙ᵃ, π₁⊙ᵃ, ⊙⊙ᵃ, a"),
            "hand-written rigs at fixed points",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    add_flat_parts(c, &explicit::real(), &p(&[2.0]), &p(&[-0.5]))?;
                    add_flat_parts(c, &explicit::complex(), &p(&[0.5, -1.0]), &p(&[2.0, 0.25]))?;
                    add_flat_parts(c, &explicit::split(), &p(&[1.5, 0.5]), &p(&[-1.0, 2.0]))?;
                    add_flat_parts(c, &explicit::dual(), &p(&[-0.75, 1.25]), &p(&[0.4, -2.0]))?;
                    add_flat_parts(c, &explicit::pointwise(3), &p(&[1.0, -2.0, 0.5]), &p(&[0.3, 0.7, -1.1]))?;
                    Ok(())
                })
            },
        ),
        LawSpec::new(
            "dyn.uniqueness",
            D,
            S,
            "Prop (uniqueness) \"are unique if they exists\"",
            ("⊕e, both parametrized solutions of (A, e, 1)", "(e×e)⊙"),
            "ℝ, ℂ, split-complex and dual",
            |id, cfg| {
                smooth(id, cfg, |c| {
                    for x in explicit_pairs().into_iter().take(4) {
                        add_unique_construction_parts(c, &x)?;
                    }
                    Ok(())
                })
            },
        ),
    ]
}

// ---------------------------------------------------------------------------
// rel

fn bases() -> [RelObj; 2] {
    [RelObj::base(1), RelObj::base(2)]
}

fn storage_law(id: &str, cfg: &CheckConfig, family: &str) -> Outcome {
    rel(id, cfg, |c| add_storage_axiom_parts(c, &bases(), &[family]))
}

fn cokleisli_law(id: &str, cfg: &CheckConfig, axiom: &str) -> Outcome {
    rel(id, cfg, |c| {
        for x in bases() {
            add_cokleisli_parts(c, &sample_maps(&x), &sample_chains(&x), &[axiom])?;
        }
        Ok(())
    })
}

fn characterizations_agree(id: &str, cfg: &CheckConfig) -> Outcome {
    rel(id, cfg, |c| {
        for x in bases() {
            for (name, m, e, genuine) in dea_candidates(&x) {
                let mut scratch = RelCheck::new(id, cfg);
                let v = add_bang_dea_parts(&mut scratch, &m, &e)?;
                c.require(&format!("{name}: !exp, coKexp1, coKexp2 agree"), v.agree(), || format!("{v:?}"));
                c.require(&format!("{name}: verdict matches expectation"), v.bang_exp == genuine, || {
                    format!("expected {genuine}, got {v:?}")
                });
            }
        }
        Ok(())
    })
}

macro_rules! storage {
    ($id:literal, $family:literal, $reference:literal, $lhs:literal, $rhs:literal) => {
        LawSpec::new($id, Suite::Rel, Model::Rel, $reference, ($lhs, $rhs), STORAGE_METHOD, |id, cfg| {
            storage_law(id, cfg, $family)
        })
    };
}

macro_rules! cokleisli {
    ($id:literal, $axiom:literal, $reference:literal, $lhs:literal, $rhs:literal) => {
        LawSpec::new($id, Suite::Rel, Model::Rel, $reference, ($lhs, $rhs), COKLEISLI_METHOD, |id, cfg| {
            cokleisli_law(id, cfg, $axiom)
        })
    };
}

const STORAGE_METHOD: &str =
    "exact comparison of both relations on X = {x} and X = {x, y}, every input and output of rank ≤ max degree";
const COKLEISLI_METHOD: &str =
    "coKleisli maps ε, copy-dual e and μ over X = {x} and {x, y}; exact comparison on inputs and outputs of rank ≤ max degree";

fn rel_laws() -> Vec<LawSpec> {
    use Model::Rel as M;
    use Suite::Rel as R;
    vec![
        storage!("rel.comonad", "comonad", "Def (differential category) \"coalgebra modality\": δε = 1 = !(ε)δ, δδ = δ!(δ)", "δε, !(ε)δ, δδ", "1, 1, δ!(δ)"),
        storage!("rel.comonoid", "comonoid", "eq. comonoid \"Δσ = Δ\"", "Δ(Δ⊗1), Δ(1⊗ι), Δσ", "Δ(1⊗Δ), 1, Δ"),
        storage!("rel.deltaeq", "deltaeq", "eq. deltaeq \"δ is a comonoid morphism\"", "δΔ, διota", "Δ(δ⊗δ), ι"),
        storage!("rel.d1", "d1", "\"Constant Rule: d ι = 0\"", "dι", "0"),
        storage!("rel.d2", "d2", "\"Leibniz Rule: d Δ = (Δ ⊗ 1)(1 ⊗ d) + (Δ⊗ 1)(1 ⊗ σ)(d ⊗ 1)\"", "dΔ", "(Δ⊗1)(1⊗d) + (Δ⊗1)(1⊗σ)(d⊗1)"),
        storage!("rel.d3", "d3", "\"Linear Rule: d ε = ι ⊗ 1\"", "dε", "ι⊗1"),
        storage!("rel.d4", "d4", "\"Chain Rule: d δ = (Δ ⊗ 1)(d ⊗ δ)d\" (read with δ on the !A factor)", "dδ", "(Δ⊗1)α(δ⊗d)d"),
        storage!("rel.d5", "d5", "\"Interchange Rule: (1 ⊗ σ)(d ⊗ 1)d = (d ⊗ 1)d\"", "(1⊗σ)(d⊗1)d", "(d⊗1)d"),
        storage!("rel.cd1", "cd1", "\"Constant Rule: η ι = 0\"", "ηι", "0"),
        storage!("rel.cd2", "cd2", "\"Leibniz Rule: η Δ = η ⊗ ν + ν ⊗ η\"", "ηΔ", "η⊗ν + ν⊗η"),
        storage!("rel.cd3", "cd3", "\"Linear Rule: η ε = 1\"", "ηε", "1"),
        storage!("rel.cd4", "cd4", "\"(Alternative) Chain Rule: η δ = (ν ⊗ η)(δ ⊗ η) ∇\"", "ηδ", "(ν⊗η)(δ⊗η)∇"),
        storage!("rel.seely", "seely", "Def (differential storage category) \"has the \\textbf{Seely isomorphisms}\"", "χχ⁻¹, χ⁻¹χ, χ_⊤χ_⊤⁻¹", "1, 1, 1"),
        storage!("rel.bialgebra", "bialgebra", "eq. addbialg \"additive bialgebra modality\"", "!(R+S), !(0)", "Δ(!R⊗!S)∇, ιν"),
        storage!("rel.nabla_monoid", "nabla_monoid", "\"In the presence of the Seely isomorphisms\" (!A, ∇, ν) is a commutative monoid", "(∇⊗1)∇, (ν⊗1)∇, σ∇", "(1⊗∇)∇, 1, ∇"),
        storage!("rel.definitions", "definitions", "\"to construct a deriving transformation\" d = (1⊗η)∇; ∇ and ν via \"In the presence of the Seely isomorphisms\"", "d, ∇, ν", "(1⊗η)∇, χ⁻¹!(⊕), χ_⊤⁻¹!(0)"),
        storage!("rel.naturality", "naturality", "Def (differential category) \"natural transformations\" ε, δ, Δ, d, η, μ", "!(R)ε, !(R)δ, …", "εR, δ!!(R), …"),
        cokleisli!("rel.cokleisli.cd1", "cd1", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "D[f+g], D[0]", "D[f]+D[g], 0"),
        cokleisli!("rel.cokleisli.cd2", "cd2", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "⟨a,b+c⟩D[f], ⟨a,0⟩D[f]", "⟨a,b⟩D[f]+⟨a,c⟩D[f], 0"),
        cokleisli!("rel.cokleisli.cd3", "cd3", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "D[1], D[π₀]", "π₁, π₁π₀"),
        cokleisli!("rel.cokleisli.cd4", "cd4", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "D⟨f,g⟩", "⟨D[f],D[g]⟩"),
        cokleisli!("rel.cokleisli.cd5", "cd5", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "D[fg]", "⟨π₀f, D[f]⟩D[g]"),
        cokleisli!("rel.cokleisli.cd6", "cd6", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "⟨⟨a,b⟩,⟨0,c⟩⟩D²[f]", "⟨a,c⟩D[f]"),
        cokleisli!("rel.cokleisli.cd7", "cd7", "Prop (coKleisli CDC) \"defined as follows on a coKleisli map\"", "cD²[f]", "D²[f]"),
        cokleisli!("rel.cokleisli.d2_formula", "d2_formula", "coKleisli second derivative \"it was computed out that\"", "((1×1)×⟨1,0⟩)D²[f]", "χ(χ⊗1)(1⊗ε⊗ε)(d⊗1)d f"),
        LawSpec::new("rel.copy_dual_dea", R, M, "Ex (REL) \"every $X$ comes equipped with a monoid structure\"",
            ("monoid laws; ηe, νe, ∇e; coKleisli forms", "(X, ▽, v) laws; 1, v, (e⊗e)▽; ε, χ(1⊗e)de, (1⊗e)de"),
            "copy-dual monoid on X = {x} and {x, y} with e = [x, …, x] ↦ x; exact",
            |id, cfg| rel(id, cfg, |c| bases().iter().try_for_each(|x| add_copy_dual_parts(c, x)))),
        LawSpec::new("rel.mu_dea", R, M, "Ex (REL) \"Explicitly, μ is defined as follows\"",
            ("∇, ν monoid laws; ημ, νμ, ∇μ; coKleisli forms", "1, ν, (μ⊗μ)∇; ε, χ(1⊗μ)dμ, (1⊗μ)dμ"),
            "(!X, ∇, ν, μ) on X = {x} and {x, y}; exact",
            |id, cfg| rel(id, cfg, |c| bases().iter().try_for_each(|x| add_mu_dea_parts(c, x)))),
        LawSpec::new("rel.copy_dual_roundtrip", R, M, "Prop (propcok2) \"and furthermore the following diagrams\"",
            ("▽ₑ, vₑ, ⟦⊙ₑ⟧, ⟦uₑ⟧, D²[e]", "▽, v, χ(ε⊗ε)▽, χ_⊤v, χ(χ⊗1)(1⊗ε⊗ε)(d⊗1)de"),
            "copy-dual e; exact",
            |id, cfg| rel(id, cfg, |c| bases().iter().try_for_each(|x| add_roundtrip_parts(c, &RelMonoid::copy_dual(x), &RelMor::copy_dual_e(x))))),
        LawSpec::new("rel.mu_roundtrip", R, M, "Theorem (isothm2) \"differential exponential maps of the coKleisli\"",
            ("▽ₑ, vₑ, ⟦⊙ₑ⟧, ⟦uₑ⟧, D²[μ]", "∇, ν, χ(ε⊗ε)∇, χ_⊤ν, χ(χ⊗1)(1⊗ε⊗ε)(d⊗1)dμ"),
            "μ on !X; exact",
            |id, cfg| rel(id, cfg, |c| bases().iter().try_for_each(|x| add_roundtrip_parts(c, &RelMonoid::bang(x), &RelMor::mu(x))))),
        LawSpec::new("rel.characterizations_agree", R, M, "Prop (coKexp2) \"For a differential storage category\"",
            ("verdict of !exp", "verdicts of coKexp1 and coKexp2"),
            "five candidates (copy-dual e, μ, ε, ε on !X, 0) on X = {x} and {x, y}; each verdict must also match whether the candidate is genuine",
            characterizations_agree),
        LawSpec::new("rel.neg.epsilon_as_exp", R, M, "Def (!-DEA) \"differential exponential algebras\" ηe = 1, νe = v, ∇e = (e⊗e)▽",
            ("νε, ∇ε", "v, (ε⊗ε)▽"),
            "deliberately false: ε is not a monoid morphism into the copy-dual monoid, so the check must fail with witnesses",
            |id, cfg| rel(id, cfg, |c| {
                for x in bases() {
                    let m = RelMonoid::copy_dual(&x);
                    m.add_monoid_parts(c, "monoid: ")?;
                    add_bang_dea_parts(c, &m, &RelMor::epsilon(&x))?;
                }
                Ok(())
            })).negative(),
    ]
}

/// The full registry, in declaration order.
pub fn registry() -> Vec<LawSpec> {
    let mut out = smooth_laws();
    out.extend(exponential_laws());
    out.extend(rig_laws());
    out.extend(dynamics_laws());
    out.extend(rel_laws());
    out
}
