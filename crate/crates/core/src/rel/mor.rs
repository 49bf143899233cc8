//! Relations between objects of REL.
//!
//! A relation is evaluated through [`RelMor::image`], which lists every
//! output of rank at most a given bound. Infinite relations such as `δ`
//! (an input may be split into arbitrarily many empty parts) have finite
//! images under every bound, so every check is an exact statement about a
//! finite window.
//!
//! Composition needs a bound on the witnessing intermediate element. Every
//! relation therefore reports how the rank of outputs grows with the rank of
//! inputs (`fwd`) and how the rank of inputs is limited by the rank of
//! outputs (`back`). The intermediate bound of `R;S` is the tightest of these
//! that is finite, and a composite with no finite bound is an error.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::elem::{multichoose, Elem, MSet};
use super::object::{universe, RelObj};
use super::RelError;

/// Largest image materialized for a single input before erroring out.
pub const IMAGE_CAP: usize = 500_000;

/// The named structure maps of the multiset exponential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Structure {
    /// `ε : !A → A`, `[x] ↦ x`.
    Epsilon,
    /// `δ : !A → !!A`, `f ↦ F` whenever `ΣF = f`.
    Dig,
    /// `Δ : !A → !A ⊗ !A`, all two-part splits.
    Comult,
    /// `ι : !A → K`, only `[] ↦ ∗`.
    Counit,
    /// `∇ : !A ⊗ !A → !A`, `(g, h) ↦ g + h`.
    Nabla,
    /// `ν : K → !A`, `∗ ↦ []`.
    Nu,
    /// `η : A → !A`, `x ↦ [x]`.
    Eta,
    /// `d : !A ⊗ A → !A`, `(f, x) ↦ f + [x]`.
    Deriv,
    /// `χ : !(A × B) → !A ⊗ !B`, restriction to each summand.
    Seely,
    Seelyinv,
    /// `χ⊤ : !⊤ → K`.
    SeelyTop,
    SeelyTopInv,
    /// `μ : !!A → !A`, flattening.
    Mu,
    /// `!A → A`, `f ↦ x` whenever every member of `f` equals `x`.
    CopyDualE,
    /// `▽ : A ⊗ A → A`, `(x, x) ↦ x`.
    CopyMult,
    /// `v : K → A`, `∗ ↦ x` for every `x`.
    CopyUnit,
    Swap,
    Assoc,
    AssocInv,
    LeftUnitor,
    LeftUnitorInv,
    RightUnitor,
    RightUnitorInv,
    Inl,
    Inr,
    Proj0,
    Proj1,
    /// `⊕ : A × A → A`, forgetting the summand.
    Codiag,
    /// `⟨1, 1⟩ : A → A × A`.
    Diag,
    /// `c : (A × B) × (C × D) → (A × C) × (B × D)`.
    Interchange,
}

impl Structure {
    pub fn symbol(self) -> &'static str {
        use Structure::*;
        match self {
            Epsilon => "ε",
            Dig => "δ",
            Comult => "Δ",
            Counit => "ι",
            Nabla => "∇",
            Nu => "ν",
            Eta => "η",
            Deriv => "d",
            Seely => "χ",
            Seelyinv => "χ⁻¹",
            SeelyTop => "χ⊤",
            SeelyTopInv => "χ⊤⁻¹",
            Mu => "μ",
            CopyDualE => "e",
            CopyMult => "▽",
            CopyUnit => "v",
            Swap => "σ",
            Assoc => "α",
            AssocInv => "α⁻¹",
            LeftUnitor => "λ",
            LeftUnitorInv => "λ⁻¹",
            RightUnitor => "ρ",
            RightUnitorInv => "ρ⁻¹",
            Inl => "inl",
            Inr => "inr",
            Proj0 => "π₀",
            Proj1 => "π₁",
            Codiag => "⊕",
            Diag => "⟨1,1⟩",
            Interchange => "c",
        }
    }
}

#[derive(Debug)]
enum Kind {
    Identity,
    Empty,
    Compose(RelMor, RelMor),
    Union(RelMor, RelMor),
    Tensor(RelMor, RelMor),
    Biprod(RelMor, RelMor),
    Bang(RelMor),
    Structure(Structure),
    Graph(BTreeSet<(Elem, Elem)>),
    Named(String, RelMor),
}

/// A relation `dom → cod`. Cheap to clone.
#[derive(Clone)]
pub struct RelMor {
    dom: RelObj,
    cod: RelObj,
    kind: Arc<Kind>,
}

impl fmt::Debug for RelMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} : {} → {}", self.dom, self.cod)
    }
}

fn mismatch(what: &str, expected: &RelObj, found: &RelObj) -> RelError {
    RelError::TypeMismatch { context: what.to_string(), expected: expected.to_string(), found: found.to_string() }
}

fn shape(what: &str, obj: &RelObj) -> RelError {
    RelError::TypeMismatch { context: what.to_string(), expected: "a different shape".into(), found: obj.to_string() }
}

fn max_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    Some(a?.max(b?))
}

fn min_some(cands: &[Option<usize>]) -> Option<usize> {
    cands.iter().flatten().copied().min()
}

impl RelMor {
    fn mk(dom: RelObj, cod: RelObj, kind: Kind) -> RelMor {
        RelMor { dom, cod, kind: Arc::new(kind) }
    }

    fn structure(dom: RelObj, cod: RelObj, s: Structure) -> RelMor {
        RelMor::mk(dom, cod, Kind::Structure(s))
    }

    pub fn dom(&self) -> &RelObj {
        &self.dom
    }

    pub fn cod(&self) -> &RelObj {
        &self.cod
    }

    // ----- combinators -------------------------------------------------

    pub fn identity(a: &RelObj) -> RelMor {
        RelMor::mk(a.clone(), a.clone(), Kind::Identity)
    }

    /// The empty relation, the zero of the additive structure.
    pub fn zero(dom: &RelObj, cod: &RelObj) -> RelMor {
        RelMor::mk(dom.clone(), cod.clone(), Kind::Empty)
    }

    /// Diagrammatic composite: first `self`, then `s`.
    pub fn then(&self, s: &RelMor) -> Result<RelMor, RelError> {
        if self.cod != s.dom {
            return Err(mismatch(&format!("composite {self} ; {s}"), &self.cod, &s.dom));
        }
        Ok(RelMor::mk(self.dom.clone(), s.cod.clone(), Kind::Compose(self.clone(), s.clone())))
    }

    /// Composite of a nonempty chain, nested to the right.
    pub fn chain(maps: &[RelMor]) -> Result<RelMor, RelError> {
        let (last, init) = maps.split_last().expect("a chain needs at least one map");
        init.iter().rev().try_fold(last.clone(), |acc, r| r.then(&acc))
    }

    /// Union `R + S`.
    pub fn union(&self, s: &RelMor) -> Result<RelMor, RelError> {
        if self.dom != s.dom {
            return Err(mismatch("union domains", &self.dom, &s.dom));
        }
        if self.cod != s.cod {
            return Err(mismatch("union codomains", &self.cod, &s.cod));
        }
        Ok(RelMor::mk(self.dom.clone(), self.cod.clone(), Kind::Union(self.clone(), s.clone())))
    }

    /// `R ⊗ S`.
    pub fn tensor(&self, s: &RelMor) -> RelMor {
        RelMor::mk(
            RelObj::tensor(&self.dom, &s.dom),
            RelObj::tensor(&self.cod, &s.cod),
            Kind::Tensor(self.clone(), s.clone()),
        )
    }

    /// `R × S` on disjoint unions.
    pub fn biprod(&self, s: &RelMor) -> RelMor {
        RelMor::mk(
            RelObj::biprod(&self.dom, &s.dom),
            RelObj::biprod(&self.cod, &s.cod),
            Kind::Biprod(self.clone(), s.clone()),
        )
    }

    /// `!R`: relates `[a₁,…,aₖ]` to `[b₁,…,bₖ]` when some matching has each `(aᵢ, bᵢ) ∈ R`.
    pub fn bang(&self) -> RelMor {
        RelMor::mk(RelObj::bang(&self.dom), RelObj::bang(&self.cod), Kind::Bang(self.clone()))
    }

    /// A finite relation given by its pairs.
    pub fn graph(
        dom: &RelObj,
        cod: &RelObj,
        pairs: impl IntoIterator<Item = (Elem, Elem)>,
    ) -> Result<RelMor, RelError> {
        let pairs: BTreeSet<(Elem, Elem)> = pairs.into_iter().collect();
        for (a, b) in &pairs {
            if !dom.contains(a) || !cod.contains(b) {
                return Err(RelError::TypeMismatch {
                    context: format!("graph pair ({a}, {b})"),
                    expected: format!("{dom} → {cod}"),
                    found: "an element outside the objects".into(),
                });
            }
        }
        Ok(RelMor::mk(dom.clone(), cod.clone(), Kind::Graph(pairs)))
    }

    /// Attach a display name.
    pub fn named(&self, name: impl Into<String>) -> RelMor {
        RelMor::mk(self.dom.clone(), self.cod.clone(), Kind::Named(name.into(), self.clone()))
    }

    // ----- structure maps ---------------------------------------------

    pub fn epsilon(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::bang(a), a.clone(), Structure::Epsilon)
    }

    pub fn dig(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::bang(a), RelObj::bang(&RelObj::bang(a)), Structure::Dig)
    }

    pub fn comult(a: &RelObj) -> RelMor {
        let b = RelObj::bang(a);
        RelMor::structure(b.clone(), RelObj::tensor(&b, &b), Structure::Comult)
    }

    pub fn counit(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::bang(a), RelObj::Unit, Structure::Counit)
    }

    pub fn nabla(a: &RelObj) -> RelMor {
        let b = RelObj::bang(a);
        RelMor::structure(RelObj::tensor(&b, &b), b, Structure::Nabla)
    }

    pub fn nu(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::Unit, RelObj::bang(a), Structure::Nu)
    }

    pub fn eta(a: &RelObj) -> RelMor {
        RelMor::structure(a.clone(), RelObj::bang(a), Structure::Eta)
    }

    pub fn deriv(a: &RelObj) -> RelMor {
        let b = RelObj::bang(a);
        RelMor::structure(RelObj::tensor(&b, a), b, Structure::Deriv)
    }

    pub fn seely(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(
            RelObj::bang(&RelObj::biprod(a, b)),
            RelObj::tensor(&RelObj::bang(a), &RelObj::bang(b)),
            Structure::Seely,
        )
    }

    pub fn seely_inv(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(
            RelObj::tensor(&RelObj::bang(a), &RelObj::bang(b)),
            RelObj::bang(&RelObj::biprod(a, b)),
            Structure::Seelyinv,
        )
    }

    pub fn seely_top() -> RelMor {
        RelMor::structure(RelObj::bang(&RelObj::top()), RelObj::Unit, Structure::SeelyTop)
    }

    pub fn seely_top_inv() -> RelMor {
        RelMor::structure(RelObj::Unit, RelObj::bang(&RelObj::top()), Structure::SeelyTopInv)
    }

    pub fn mu(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::bang(&RelObj::bang(a)), RelObj::bang(a), Structure::Mu)
    }

    pub fn copy_dual_e(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::bang(a), a.clone(), Structure::CopyDualE)
    }

    pub fn copy_mult(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::tensor(a, a), a.clone(), Structure::CopyMult)
    }

    pub fn copy_unit(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::Unit, a.clone(), Structure::CopyUnit)
    }

    pub fn swap(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(RelObj::tensor(a, b), RelObj::tensor(b, a), Structure::Swap)
    }

    pub fn assoc(a: &RelObj, b: &RelObj, c: &RelObj) -> RelMor {
        RelMor::structure(
            RelObj::tensor(&RelObj::tensor(a, b), c),
            RelObj::tensor(a, &RelObj::tensor(b, c)),
            Structure::Assoc,
        )
    }

    pub fn assoc_inv(a: &RelObj, b: &RelObj, c: &RelObj) -> RelMor {
        RelMor::structure(
            RelObj::tensor(a, &RelObj::tensor(b, c)),
            RelObj::tensor(&RelObj::tensor(a, b), c),
            Structure::AssocInv,
        )
    }

    pub fn left_unitor(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::tensor(&RelObj::Unit, a), a.clone(), Structure::LeftUnitor)
    }

    pub fn left_unitor_inv(a: &RelObj) -> RelMor {
        RelMor::structure(a.clone(), RelObj::tensor(&RelObj::Unit, a), Structure::LeftUnitorInv)
    }

    pub fn right_unitor(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::tensor(a, &RelObj::Unit), a.clone(), Structure::RightUnitor)
    }

    pub fn right_unitor_inv(a: &RelObj) -> RelMor {
        RelMor::structure(a.clone(), RelObj::tensor(a, &RelObj::Unit), Structure::RightUnitorInv)
    }

    /// `⟨1, 0⟩ : A → A × B`.
    pub fn inl(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(a.clone(), RelObj::biprod(a, b), Structure::Inl)
    }

    /// `⟨0, 1⟩ : B → A × B`.
    pub fn inr(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(b.clone(), RelObj::biprod(a, b), Structure::Inr)
    }

    pub fn proj0(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(RelObj::biprod(a, b), a.clone(), Structure::Proj0)
    }

    pub fn proj1(a: &RelObj, b: &RelObj) -> RelMor {
        RelMor::structure(RelObj::biprod(a, b), b.clone(), Structure::Proj1)
    }

    pub fn codiag(a: &RelObj) -> RelMor {
        RelMor::structure(RelObj::biprod(a, a), a.clone(), Structure::Codiag)
    }

    pub fn diag(a: &RelObj) -> RelMor {
        RelMor::structure(a.clone(), RelObj::biprod(a, a), Structure::Diag)
    }

    pub fn interchange(a: &RelObj, b: &RelObj, c: &RelObj, d: &RelObj) -> RelMor {
        RelMor::structure(
            RelObj::biprod(&RelObj::biprod(a, b), &RelObj::biprod(c, d)),
            RelObj::biprod(&RelObj::biprod(a, c), &RelObj::biprod(b, d)),
            Structure::Interchange,
        )
    }

    // ----- bounds -----------------------------------------------------

    /// Upper bound on the rank of outputs for inputs of rank `≤ d`
    /// (`None` input means unbounded input; `None` output means no bound).
    pub fn fwd(&self, d: Option<usize>) -> Option<usize> {
        use Structure::*;
        match &*self.kind {
            Kind::Identity => d,
            Kind::Empty => Some(0),
            Kind::Compose(r, s) => s.fwd(r.fwd(d)),
            Kind::Union(r, s) | Kind::Tensor(r, s) | Kind::Biprod(r, s) => max_opt(r.fwd(d), s.fwd(d)),
            Kind::Bang(r) if r.is_empty_kind() => Some(0),
            Kind::Bang(r) => max_opt(d, r.fwd(d)),
            Kind::Graph(g) => Some(g.iter().map(|(_, b)| b.rank()).max().unwrap_or(0)),
            Kind::Named(_, r) => r.fwd(d),
            Kind::Structure(s) => match s {
                Dig => None,
                Counit | Nu | SeelyTop | SeelyTopInv => Some(0),
                Nabla | Seelyinv => d.map(|n| 2 * n),
                Eta | Deriv => d.map(|n| n + 1),
                Mu => d.map(|n| n * n),
                CopyUnit => self.cod.is_flat().then_some(0),
                _ => d,
            },
        }
    }

    /// Upper bound on the rank of inputs related to outputs of rank `≤ d`.
    pub fn back(&self, d: Option<usize>) -> Option<usize> {
        use Structure::*;
        match &*self.kind {
            Kind::Identity => d,
            Kind::Empty => Some(0),
            Kind::Compose(r, s) => r.back(s.back(d)),
            Kind::Union(r, s) | Kind::Tensor(r, s) | Kind::Biprod(r, s) => max_opt(r.back(d), s.back(d)),
            Kind::Bang(r) if r.is_empty_kind() => Some(0),
            Kind::Bang(r) => max_opt(d, r.back(d)),
            Kind::Graph(g) => Some(g.iter().map(|(a, _)| a.rank()).max().unwrap_or(0)),
            Kind::Named(_, r) => r.back(d),
            Kind::Structure(s) => match s {
                Epsilon => d.map(|n| n.max(1)),
                Dig => d.map(|n| n.max(n * n)),
                Comult | Seely => d.map(|n| 2 * n),
                Counit | Nu | SeelyTop | SeelyTopInv | CopyUnit => Some(0),
                Mu | CopyDualE => None,
                _ => d,
            },
        }
    }

    /// Bound on the rank of the members of output multisets.
    fn fwd_inner(&self, d: Option<usize>) -> Option<usize> {
        match &*self.kind {
            Kind::Structure(Structure::Dig | Structure::Mu) => d,
            Kind::Bang(r) => r.fwd(d),
            Kind::Compose(r, s) => s.fwd_inner(r.fwd(d)),
            Kind::Named(_, r) => r.fwd_inner(d),
            _ => self.fwd(d),
        }
    }

    /// Bound on the total multiplicity of input multisets.
    fn back_outer(&self, d: Option<usize>) -> Option<usize> {
        match &*self.kind {
            Kind::Bang(_) => d,
            Kind::Compose(r, s) => r.back_outer(s.back(d)),
            Kind::Named(_, r) => r.back_outer(d),
            _ => self.back(d),
        }
    }

    fn is_empty_kind(&self) -> bool {
        match &*self.kind {
            Kind::Empty => true,
            Kind::Named(_, r) => r.is_empty_kind(),
            _ => false,
        }
    }

    // ----- evaluation -------------------------------------------------

    /// Every `b` of rank `≤ bound` with `(a, b)` in the relation.
    pub fn image(&self, a: &Elem, bound: usize) -> Result<BTreeSet<Elem>, RelError> {
        let out = self.image_raw(a, bound)?;
        if out.len() > IMAGE_CAP {
            return Err(RelError::EnumerationBoundExceeded {
                what: format!("image of {a} under {self}"),
                size: out.len(),
                cap: IMAGE_CAP,
            });
        }
        Ok(out)
    }

    fn image_raw(&self, a: &Elem, bound: usize) -> Result<BTreeSet<Elem>, RelError> {
        let keep = |e: Elem| (e.rank() <= bound).then_some(e);
        match &*self.kind {
            Kind::Identity => Ok(keep(a.clone()).into_iter().collect()),
            Kind::Empty => Ok(BTreeSet::new()),
            Kind::Named(_, r) => r.image(a, bound),
            Kind::Graph(g) => Ok(g
                .range((a.clone(), Elem::Atom(0))..)
                .take_while(|(x, _)| x == a)
                .filter_map(|(_, b)| keep(b.clone()))
                .collect()),
            Kind::Union(r, s) => {
                let mut out = r.image(a, bound)?;
                out.extend(s.image(a, bound)?);
                Ok(out)
            }
            Kind::Compose(r, s) => {
                let mid = self.intermediate_bound(r, s, a, bound)?;
                let mut out = BTreeSet::new();
                for b in r.image(a, mid)? {
                    out.extend(s.image(&b, bound)?);
                    if out.len() > IMAGE_CAP {
                        break;
                    }
                }
                Ok(out)
            }
            Kind::Tensor(r, s) => {
                let (x, y) = a.as_pair().ok_or_else(|| shape("tensor input", &self.dom))?;
                let (ix, iy) = (r.image(x, bound)?, s.image(y, bound)?);
                Ok(ix.iter().flat_map(|p| iy.iter().map(move |q| Elem::pair(p.clone(), q.clone()))).collect())
            }
            Kind::Biprod(r, s) => Ok(match a {
                Elem::Inl(x) => r.image(x, bound)?.into_iter().map(Elem::inl).collect(),
                Elem::Inr(y) => s.image(y, bound)?.into_iter().map(Elem::inr).collect(),
                _ => return Err(shape("biproduct input", &self.dom)),
            }),
            Kind::Bang(r) => {
                let m = a.as_bag().ok_or_else(|| shape("! input", &self.dom))?;
                bang_image(r, m, bound)
            }
            Kind::Structure(s) => self.structure_image(*s, a, bound),
        }
    }

    fn intermediate_bound(&self, r: &RelMor, s: &RelMor, a: &Elem, bound: usize) -> Result<usize, RelError> {
        let rank = Some(a.rank());
        let c1 = r.fwd(rank);
        let c2 = s.back(Some(bound));
        let c3 = max_opt(r.fwd_inner(rank), s.back_outer(Some(bound)));
        min_some(&[c1, c2, c3]).ok_or_else(|| RelError::Unbounded { what: format!("{r} ; {s}") })
    }

    /// Is `(a, b)` in the relation?
    pub fn contains(&self, a: &Elem, b: &Elem) -> Result<bool, RelError> {
        match &*self.kind {
            Kind::Identity => Ok(a == b),
            Kind::Empty => Ok(false),
            Kind::Named(_, r) => r.contains(a, b),
            Kind::Graph(g) => Ok(g.contains(&(a.clone(), b.clone()))),
            Kind::Union(r, s) => Ok(r.contains(a, b)? || s.contains(a, b)?),
            Kind::Tensor(r, s) => match (a.as_pair(), b.as_pair()) {
                (Some((x, y)), Some((p, q))) => Ok(r.contains(x, p)? && s.contains(y, q)?),
                _ => Ok(false),
            },
            Kind::Biprod(r, s) => match (a, b) {
                (Elem::Inl(x), Elem::Inl(p)) => r.contains(x, p),
                (Elem::Inr(y), Elem::Inr(q)) => s.contains(y, q),
                _ => Ok(false),
            },
            Kind::Bang(r) => match (a.as_bag(), b.as_bag()) {
                (Some(f), Some(g)) => bang_contains(r, &f.elems(), &g.elems()),
                _ => Ok(false),
            },
            Kind::Compose(..) => Ok(self.image(a, b.rank())?.contains(b)),
            Kind::Structure(s) => Ok(self.structure_contains(*s, a, b)),
        }
    }

    fn structure_image(&self, s: Structure, a: &Elem, bound: usize) -> Result<BTreeSet<Elem>, RelError> {
        use Structure::*;
        let keep = |e: Elem| (e.rank() <= bound).then_some(e);
        let bag = || a.as_bag().ok_or_else(|| shape("multiset input", &self.dom));
        let pair = || a.as_pair().ok_or_else(|| shape("pair input", &self.dom));
        let one = |e: Option<Elem>| -> BTreeSet<Elem> { e.and_then(keep).into_iter().collect() };
        Ok(match s {
            Epsilon => {
                let m = bag()?;
                one((m.degree() == 1).then(|| m.elems()[0].clone()))
            }
            Dig => dig_image(bag()?, bound),
            Comult => {
                bag()?.splits().into_iter().filter_map(|(g, h)| keep(Elem::pair(Elem::bag(g), Elem::bag(h)))).collect()
            }
            Counit | SeelyTop => one(bag()?.is_empty().then_some(Elem::Star)),
            Nabla => {
                let (g, h) = pair()?;
                match (g.as_bag(), h.as_bag()) {
                    (Some(g), Some(h)) => one(Some(Elem::bag(g.sum(h)))),
                    _ => return Err(shape("∇ input", &self.dom)),
                }
            }
            Nu | SeelyTopInv => one(Some(Elem::bag(MSet::empty()))),
            Eta => one(Some(Elem::bag(MSet::singleton(a.clone())))),
            Deriv => {
                let (f, x) = pair()?;
                let f = f.as_bag().ok_or_else(|| shape("d input", &self.dom))?;
                one(Some(Elem::bag(f.add_one(x.clone()))))
            }
            Seely => {
                let m = bag()?;
                let left = m.filter_map(|e| match e {
                    Elem::Inl(x) => Some((**x).clone()),
                    _ => None,
                });
                let right = m.filter_map(|e| match e {
                    Elem::Inr(y) => Some((**y).clone()),
                    _ => None,
                });
                one(Some(Elem::pair(Elem::bag(left), Elem::bag(right))))
            }
            Seelyinv => {
                let (g, h) = pair()?;
                match (g.as_bag(), h.as_bag()) {
                    (Some(g), Some(h)) => {
                        let tagged = g
                            .filter_map(|x| Some(Elem::inl(x.clone())))
                            .sum(&h.filter_map(|y| Some(Elem::inr(y.clone()))));
                        one(Some(Elem::bag(tagged)))
                    }
                    _ => return Err(shape("χ⁻¹ input", &self.dom)),
                }
            }
            Mu => one(bag()?.flatten().map(Elem::bag)),
            CopyDualE => {
                let m = bag()?;
                let mut support = m.support();
                match (support.next(), support.next()) {
                    (None, _) => universe(&self.cod, bound)?.iter().filter_map(|e| keep(e.clone())).collect(),
                    (Some(x), None) => one(Some(x.clone())),
                    _ => BTreeSet::new(),
                }
            }
            CopyMult => {
                let (x, y) = pair()?;
                one((x == y).then(|| x.clone()))
            }
            CopyUnit => universe(&self.cod, bound)?.iter().filter_map(|e| keep(e.clone())).collect(),
            Swap => {
                let (x, y) = pair()?;
                one(Some(Elem::pair(y.clone(), x.clone())))
            }
            Assoc => {
                let (xy, z) = pair()?;
                let (x, y) = xy.as_pair().ok_or_else(|| shape("α input", &self.dom))?;
                one(Some(Elem::pair(x.clone(), Elem::pair(y.clone(), z.clone()))))
            }
            AssocInv => {
                let (x, yz) = pair()?;
                let (y, z) = yz.as_pair().ok_or_else(|| shape("α⁻¹ input", &self.dom))?;
                one(Some(Elem::pair(Elem::pair(x.clone(), y.clone()), z.clone())))
            }
            LeftUnitor => one(Some(pair()?.1.clone())),
            RightUnitor => one(Some(pair()?.0.clone())),
            LeftUnitorInv => one(Some(Elem::pair(Elem::Star, a.clone()))),
            RightUnitorInv => one(Some(Elem::pair(a.clone(), Elem::Star))),
            Inl => one(Some(Elem::inl(a.clone()))),
            Inr => one(Some(Elem::inr(a.clone()))),
            Proj0 => one(match a {
                Elem::Inl(x) => Some((**x).clone()),
                _ => None,
            }),
            Proj1 => one(match a {
                Elem::Inr(y) => Some((**y).clone()),
                _ => None,
            }),
            Codiag => one(match a {
                Elem::Inl(x) | Elem::Inr(x) => Some((**x).clone()),
                _ => None,
            }),
            Diag => [Elem::inl(a.clone()), Elem::inr(a.clone())].into_iter().filter_map(keep).collect(),
            Interchange => one(interchange(a)),
        })
    }

    /// Direct membership predicates, independent of the image generators.
    fn structure_contains(&self, s: Structure, a: &Elem, b: &Elem) -> bool {
        use Structure::*;
        let bag = |e: &Elem| e.as_bag().cloned();
        let pair = |e: &Elem| e.as_pair().map(|(x, y)| (x.clone(), y.clone()));
        match s {
            Epsilon => bag(a).is_some_and(|m| m.degree() == 1 && m.multiplicity(b) == 1),
            Dig => match (bag(a), bag(b)) {
                (Some(f), Some(big)) => big.flatten().is_some_and(|g| g == f),
                _ => false,
            },
            Comult => match (bag(a), pair(b)) {
                (Some(f), Some((g, h))) => match (bag(&g), bag(&h)) {
                    (Some(g), Some(h)) => g.sum(&h) == f,
                    _ => false,
                },
                _ => false,
            },
            Counit | SeelyTop => bag(a).is_some_and(|m| m.is_empty()) && *b == Elem::Star,
            Nabla => match (pair(a), bag(b)) {
                (Some((g, h)), Some(f)) => match (bag(&g), bag(&h)) {
                    (Some(g), Some(h)) => g.sum(&h) == f,
                    _ => false,
                },
                _ => false,
            },
            Nu | SeelyTopInv => *a == Elem::Star && bag(b).is_some_and(|m| m.is_empty()),
            Eta => bag(b).is_some_and(|m| m.degree() == 1 && m.multiplicity(a) == 1),
            Deriv => match (pair(a), bag(b)) {
                (Some((f, x)), Some(g)) => bag(&f).is_some_and(|f| g.minus(&MSet::singleton(x)) == Some(f)),
                _ => false,
            },
            Seely | Seelyinv => {
                let (m, gh) = if s == Seely { (a, b) } else { (b, a) };
                match (bag(m), pair(gh)) {
                    (Some(m), Some((g, h))) => {
                        let left = m.filter_map(|e| match e {
                            Elem::Inl(x) => Some((**x).clone()),
                            _ => None,
                        });
                        let right = m.filter_map(|e| match e {
                            Elem::Inr(y) => Some((**y).clone()),
                            _ => None,
                        });
                        left.degree() + right.degree() == m.degree() && bag(&g) == Some(left) && bag(&h) == Some(right)
                    }
                    _ => false,
                }
            }
            Mu => match (bag(a), bag(b)) {
                (Some(big), Some(f)) => big.flatten() == Some(f),
                _ => false,
            },
            CopyDualE => bag(a).is_some_and(|m| m.support().all(|x| x == b)) && self.cod.contains(b),
            CopyMult => pair(a).is_some_and(|(x, y)| x == *b && y == *b),
            CopyUnit => *a == Elem::Star && self.cod.contains(b),
            Swap => matches!((pair(a), pair(b)), (Some((x, y)), Some((p, q))) if x == q && y == p),
            Assoc | AssocInv => {
                let flat_left = |e: &Elem| {
                    let (xy, z) = pair(e)?;
                    let (x, y) = pair(&xy)?;
                    Some((x, y, z))
                };
                let flat_right = |e: &Elem| {
                    let (x, yz) = pair(e)?;
                    let (y, z) = pair(&yz)?;
                    Some((x, y, z))
                };
                let (l, r) = if s == Assoc { (a, b) } else { (b, a) };
                matches!((flat_left(l), flat_right(r)), (Some(p), Some(q)) if p == q)
            }
            LeftUnitor => pair(a).is_some_and(|(s, x)| s == Elem::Star && x == *b),
            RightUnitor => pair(a).is_some_and(|(x, s)| s == Elem::Star && x == *b),
            LeftUnitorInv => pair(b).is_some_and(|(s, x)| s == Elem::Star && x == *a),
            RightUnitorInv => pair(b).is_some_and(|(x, s)| s == Elem::Star && x == *a),
            Inl => matches!(b, Elem::Inl(x) if **x == *a),
            Inr => matches!(b, Elem::Inr(x) if **x == *a),
            Proj0 => matches!(a, Elem::Inl(x) if **x == *b),
            Proj1 => matches!(a, Elem::Inr(x) if **x == *b),
            Codiag => matches!(a, Elem::Inl(x) | Elem::Inr(x) if **x == *b),
            Diag => matches!(b, Elem::Inl(x) | Elem::Inr(x) if **x == *a),
            Interchange => interchange(a).as_ref() == Some(b),
        }
    }
}

fn interchange(a: &Elem) -> Option<Elem> {
    let (outer, inner) = match a {
        Elem::Inl(x) => (0, x),
        Elem::Inr(x) => (1, x),
        _ => return None,
    };
    let (side, v) = match &**inner {
        Elem::Inl(v) => (0, v),
        Elem::Inr(v) => (1, v),
        _ => return None,
    };
    let v = (**v).clone();
    let tag = |t: u8, e: Elem| if t == 0 { Elem::inl(e) } else { Elem::inr(e) };
    // ((a | b) | (c | d)) ↦ ((a | c) | (b | d)): swap the two tag levels.
    Some(tag(side, tag(outer, v)))
}

/// All `F` of rank `≤ bound` with `ΣF = f`: partitions of `f` into nonempty
/// parts, padded with any number of empty parts.
fn dig_image(f: &MSet, bound: usize) -> BTreeSet<Elem> {
    let mut out = BTreeSet::new();
    // Members of f reappear inside the parts, and there are at most `bound`
    // parts of degree at most `bound` each.
    if f.support().any(|x| x.rank() > bound) || f.degree() > bound * bound {
        return out;
    }
    for parts in f.nonempty_partitions(bound) {
        for empties in 0..=bound - parts.len() {
            let members =
                parts.iter().cloned().map(Elem::bag).chain(std::iter::repeat_n(Elem::bag(MSet::empty()), empties));
            let big = Elem::bag(MSet::from_elems(members));
            if big.rank() <= bound {
                out.insert(big);
            }
        }
    }
    out
}

fn bang_image(r: &RelMor, m: &MSet, bound: usize) -> Result<BTreeSet<Elem>, RelError> {
    if m.degree() > bound {
        return Ok(BTreeSet::new());
    }
    let mut partial: BTreeSet<MSet> = BTreeSet::from([MSet::empty()]);
    for (a, k) in m.entries() {
        let images: Vec<Elem> = r.image(a, bound)?.into_iter().collect();
        let choices = multichoose(&images, *k as usize);
        let mut next = BTreeSet::new();
        for p in &partial {
            for c in &choices {
                let q = p.sum(&MSet::from_elems(c.iter().cloned()));
                if q.rank() <= bound {
                    next.insert(q);
                }
            }
        }
        if next.len() > IMAGE_CAP {
            return Err(RelError::EnumerationBoundExceeded {
                what: format!("image of {m} under !{r}"),
                size: next.len(),
                cap: IMAGE_CAP,
            });
        }
        partial = next;
    }
    Ok(partial.into_iter().map(Elem::bag).collect())
}

/// Is there a bijection pairing `xs` with `ys` inside `r`?
fn bang_contains(r: &RelMor, xs: &[Elem], ys: &[Elem]) -> Result<bool, RelError> {
    fn go(r: &RelMor, xs: &[Elem], ys: &[Elem], used: &mut Vec<bool>) -> Result<bool, RelError> {
        let Some((x, rest)) = xs.split_first() else { return Ok(true) };
        for j in 0..ys.len() {
            if used[j] || (j > 0 && !used[j - 1] && ys[j] == ys[j - 1]) {
                continue;
            }
            if r.contains(x, &ys[j])? {
                used[j] = true;
                if go(r, rest, ys, used)? {
                    return Ok(true);
                }
                used[j] = false;
            }
        }
        Ok(false)
    }
    if xs.len() != ys.len() {
        return Ok(false);
    }
    go(r, xs, ys, &mut vec![false; ys.len()])
}

impl fmt::Display for RelMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.kind {
            Kind::Identity => write!(f, "1"),
            Kind::Empty => write!(f, "0"),
            Kind::Compose(r, s) => write!(f, "{r};{s}"),
            Kind::Union(r, s) => write!(f, "({r} + {s})"),
            Kind::Tensor(r, s) => write!(f, "({r} ⊗ {s})"),
            Kind::Biprod(r, s) => write!(f, "({r} × {s})"),
            Kind::Bang(r) => write!(f, "!({r})"),
            Kind::Structure(s) => write!(f, "{}", s.symbol()),
            Kind::Graph(g) => write!(f, "graph[{} pairs]", g.len()),
            Kind::Named(n, _) => write!(f, "{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Elem {
        Elem::Atom(0)
    }
    fn y() -> Elem {
        Elem::Atom(1)
    }
    fn bag(es: &[Elem]) -> Elem {
        Elem::bag(MSet::from_elems(es.iter().cloned()))
    }

    #[test]
    fn mu_flattens() {
        let x2 = RelObj::base(2);
        let input = bag(&[bag(&[x()]), bag(&[x(), y()])]);
        let img = RelMor::mu(&x2).image(&input, 3).unwrap();
        assert_eq!(img.into_iter().collect::<Vec<_>>(), vec![bag(&[x(), x(), y()])]);
    }

    #[test]
    fn copy_dual_e_membership() {
        let x3 = RelObj::base(3);
        let e = RelMor::copy_dual_e(&x3);
        assert!(e.contains(&bag(&[x(), x(), x()]), &x()).unwrap());
        for z in 0..3 {
            assert!(e.contains(&bag(&[]), &Elem::Atom(z)).unwrap());
        }
        assert!(!e.contains(&bag(&[x(), y()]), &Elem::Atom(2)).unwrap());
    }

    #[test]
    fn comult_splits() {
        let d = RelMor::comult(&RelObj::base(2));
        let img = d.image(&bag(&[x(), y()]), 3).unwrap();
        assert_eq!(img.len(), 4);
        assert!(img.contains(&Elem::pair(bag(&[x()]), bag(&[y()]))));
    }

    #[test]
    fn deriv_adds_point() {
        let d = RelMor::deriv(&RelObj::base(2));
        assert!(d.contains(&Elem::pair(bag(&[x()]), y()), &bag(&[x(), y()])).unwrap());
        let via = RelMor::eta(&RelObj::base(2));
        let composite = RelMor::identity(&RelObj::bang(&RelObj::base(2)))
            .tensor(&via)
            .then(&RelMor::nabla(&RelObj::base(2)))
            .unwrap();
        assert!(composite.contains(&Elem::pair(bag(&[x()]), y()), &bag(&[x(), y()])).unwrap());
    }

    #[test]
    fn eta_then_epsilon_is_identity_on_points() {
        let x1 = RelObj::base(1);
        let r = RelMor::eta(&x1).then(&RelMor::epsilon(&x1)).unwrap();
        assert!(r.contains(&x(), &x()).unwrap());
    }

    #[test]
    fn zero_absorbs() {
        let x1 = RelObj::base(1);
        let r = RelMor::eta(&x1).then(&RelMor::zero(&RelObj::bang(&x1), &x1)).unwrap();
        assert!(r.image(&x(), 3).unwrap().is_empty());
    }

    #[test]
    fn dig_then_counit() {
        let x1 = RelObj::base(1);
        let r = RelMor::dig(&x1).then(&RelMor::counit(&RelObj::bang(&x1))).unwrap();
        assert!(r.contains(&bag(&[]), &Elem::Star).unwrap());
        assert!(!r.contains(&bag(&[x()]), &Elem::Star).unwrap());
    }

    #[test]
    fn dig_image_includes_empty_padding() {
        let img = dig_image(&MSet::empty(), 2);
        assert_eq!(img.len(), 3);
        let img = dig_image(&MSet::from_elems([x()]), 2);
        // [[x]], [[x], []]
        assert_eq!(img.len(), 2);
    }

    #[test]
    fn bang_contains_needs_matching() {
        let e = RelMor::epsilon(&RelObj::base(2)).bang();
        let a = bag(&[bag(&[x()]), bag(&[y()])]);
        assert!(e.contains(&a, &bag(&[x(), y()])).unwrap());
        assert!(!e.contains(&a, &bag(&[x(), x()])).unwrap());
    }

    #[test]
    fn composite_needs_a_bound() {
        let x1 = RelObj::base(1);
        let bx = RelObj::bang(&x1);
        // δ then μ has no finite intermediate bound from either side.
        let r = RelMor::dig(&x1).then(&RelMor::mu(&x1)).unwrap();
        let err = r.image(&Elem::bag(MSet::empty()), 2).unwrap_err();
        assert!(matches!(err, RelError::Unbounded { .. }));
        let _ = bx;
    }

    #[test]
    fn type_mismatch_is_rejected() {
        let x1 = RelObj::base(1);
        assert!(RelMor::eta(&x1).then(&RelMor::eta(&x1)).is_err());
    }
}
