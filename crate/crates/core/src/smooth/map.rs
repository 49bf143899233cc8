use std::fmt;
use std::sync::Arc;

use super::{Jet, Point, SmoothError};

/// Scalar maps `ℝ → ℝ` with exact jet lifts.
#[derive(Debug, Clone, PartialEq)]
pub enum Primitive {
    Exp,
    Sin,
    Cos,
    Sinh,
    Cosh,
    /// Multiplication by a fixed scalar.
    Scale(f64),
    /// `Σ cᵢ xⁱ`, coefficients in increasing degree.
    Polynomial(Vec<f64>),
}

impl Primitive {
    fn apply(&self, x: &Jet) -> Jet {
        match self {
            Primitive::Exp => x.exp(),
            Primitive::Sin => x.sin(),
            Primitive::Cos => x.cos(),
            Primitive::Sinh => x.sinh(),
            Primitive::Cosh => x.cosh(),
            Primitive::Scale(s) => x.scale(*s),
            Primitive::Polynomial(c) => x.polynomial(c),
        }
    }
}

impl fmt::Display for Primitive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primitive::Exp => write!(f, "exp"),
            Primitive::Sin => write!(f, "sin"),
            Primitive::Cos => write!(f, "cos"),
            Primitive::Sinh => write!(f, "sinh"),
            Primitive::Cosh => write!(f, "cosh"),
            Primitive::Scale(s) => write!(f, "({s}·)"),
            Primitive::Polynomial(c) => {
                write!(f, "poly[")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}

#[derive(Debug)]
enum Node {
    Identity,
    /// Coordinates `start .. start + cod` of the input.
    Slice {
        start: usize,
    },
    Zero,
    Constant(Point),
    Compose(SmoothMap, SmoothMap),
    Pair(SmoothMap, SmoothMap),
    Product(SmoothMap, SmoothMap),
    Add(SmoothMap, SmoothMap),
    Unary(Primitive),
    /// `(x, y) ↦ x·y`.
    Mul,
    Differential(SmoothMap),
    Tangent(SmoothMap),
    /// `((A, B), (C, D)) ↦ ((A, C), (B, D))` with the four block sizes.
    Interchange([usize; 4]),
    /// `A × A → A`, `(a, b) ↦ a + b`.
    Oplus,
    /// `(A × B) × C → A × (B × C)`. The identity on flat coordinates, kept as
    /// its own node so that printed terms show the reassociation.
    Associator,
    Named(String, SmoothMap),
}

/// A smooth map `ℝ^dom → ℝ^cod`. Cheap to clone.
#[derive(Clone, Debug)]
pub struct SmoothMap {
    dom: usize,
    cod: usize,
    node: Arc<Node>,
}

fn check_finite(node: &str, out: &[Jet]) -> Result<(), SmoothError> {
    if out.iter().all(Jet::is_finite) {
        Ok(())
    } else {
        Err(SmoothError::NumericOverflow { node: node.to_string() })
    }
}

fn add_vecs(a: &[Jet], b: &[Jet]) -> Vec<Jet> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl SmoothMap {
    fn mk(dom: usize, cod: usize, node: Node) -> SmoothMap {
        SmoothMap { dom, cod, node: Arc::new(node) }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn identity(n: usize) -> SmoothMap {
        SmoothMap::mk(n, n, Node::Identity)
    }

    pub fn zero(dom: usize, cod: usize) -> SmoothMap {
        SmoothMap::mk(dom, cod, Node::Zero)
    }

    /// The constant map `ℝ^dom → ℝ^{dim p}` at `p`.
    pub fn constant(dom: usize, p: Point) -> SmoothMap {
        SmoothMap::mk(dom, p.dim(), Node::Constant(p))
    }

    /// Coordinates `start .. start + len` of `ℝ^dom`.
    pub fn slice(dom: usize, start: usize, len: usize) -> Result<SmoothMap, SmoothError> {
        if start + len > dom {
            return Err(SmoothError::dims("slice", dom, start + len));
        }
        Ok(SmoothMap::mk(dom, len, Node::Slice { start }))
    }

    /// `π₀ : A × B → A`.
    pub fn proj0(a: usize, b: usize) -> SmoothMap {
        SmoothMap::mk(a + b, a, Node::Slice { start: 0 })
    }

    /// `π₁ : A × B → B`.
    pub fn proj1(a: usize, b: usize) -> SmoothMap {
        SmoothMap::mk(a + b, b, Node::Slice { start: a })
    }

    /// Diagrammatic composition: first `self`, then `g`.
    pub fn then(&self, g: &SmoothMap) -> Result<SmoothMap, SmoothError> {
        if self.cod != g.dom {
            return Err(SmoothError::dims(format!("composite ({self}) ; ({g})"), self.cod, g.dom));
        }
        Ok(SmoothMap::mk(self.dom, g.cod, Node::Compose(self.clone(), g.clone())))
    }

    /// `⟨f, g⟩ : A → B × C`.
    pub fn pair(f: &SmoothMap, g: &SmoothMap) -> Result<SmoothMap, SmoothError> {
        if f.dom != g.dom {
            return Err(SmoothError::dims(format!("pairing ⟨{f}, {g}⟩"), f.dom, g.dom));
        }
        Ok(SmoothMap::mk(f.dom, f.cod + g.cod, Node::Pair(f.clone(), g.clone())))
    }

    /// `f × g : A × C → B × D`.
    pub fn product(f: &SmoothMap, g: &SmoothMap) -> SmoothMap {
        SmoothMap::mk(f.dom + g.dom, f.cod + g.cod, Node::Product(f.clone(), g.clone()))
    }

    /// Pointwise sum `f + g`.
    pub fn add(f: &SmoothMap, g: &SmoothMap) -> Result<SmoothMap, SmoothError> {
        if f.dom != g.dom || f.cod != g.cod {
            let (e, x) = if f.dom != g.dom { (f.dom, g.dom) } else { (f.cod, g.cod) };
            return Err(SmoothError::dims(format!("sum {f} + {g}"), e, x));
        }
        Ok(SmoothMap::mk(f.dom, f.cod, Node::Add(f.clone(), g.clone())))
    }

    pub fn primitive(p: Primitive) -> SmoothMap {
        SmoothMap::mk(1, 1, Node::Unary(p))
    }

    pub fn exp() -> SmoothMap {
        SmoothMap::primitive(Primitive::Exp)
    }

    /// Real multiplication `ℝ × ℝ → ℝ`.
    pub fn mul() -> SmoothMap {
        SmoothMap::mk(2, 1, Node::Mul)
    }

    /// `⊕ = π₀ + π₁ : A × A → A`.
    pub fn oplus(n: usize) -> SmoothMap {
        SmoothMap::mk(2 * n, n, Node::Oplus)
    }

    /// The interchange `c : (A × B) × (C × D) → (A × C) × (B × D)`.
    pub fn interchange(a: usize, b: usize, c: usize, d: usize) -> SmoothMap {
        let n = a + b + c + d;
        SmoothMap::mk(n, n, Node::Interchange([a, b, c, d]))
    }

    /// `α : (A × B) × C → A × (B × C)`.
    pub fn associator(a: usize, b: usize, c: usize) -> SmoothMap {
        let n = a + b + c;
        SmoothMap::mk(n, n, Node::Associator)
    }

    /// `⟨π₁, π₀⟩ : A × B → B × A`.
    pub fn swap(a: usize, b: usize) -> SmoothMap {
        SmoothMap::pair(&SmoothMap::proj1(a, b), &SmoothMap::proj0(a, b)).expect("projections share a domain")
    }

    /// `⟨1, 0⟩ : A → A × B`.
    pub fn inj0(a: usize, b: usize) -> SmoothMap {
        SmoothMap::pair(&SmoothMap::identity(a), &SmoothMap::zero(a, b)).expect("same domain")
    }

    /// `⟨0, 1⟩ : B → A × B`.
    pub fn inj1(a: usize, b: usize) -> SmoothMap {
        SmoothMap::pair(&SmoothMap::zero(b, a), &SmoothMap::identity(b)).expect("same domain")
    }

    /// Attach a display name; evaluation is unchanged.
    pub fn named(&self, name: impl Into<String>) -> SmoothMap {
        SmoothMap::mk(self.dom, self.cod, Node::Named(name.into(), self.clone()))
    }

    pub fn differential(&self) -> SmoothMap {
        SmoothMap::mk(2 * self.dom, self.cod, Node::Differential(self.clone()))
    }

    pub fn tangent(&self) -> SmoothMap {
        SmoothMap::mk(2 * self.dom, 2 * self.cod, Node::Tangent(self.clone()))
    }

    /// `n`-fold differential.
    pub fn differential_n(&self, n: usize) -> SmoothMap {
        (0..n).fold(self.clone(), |f, _| f.differential())
    }

    pub fn eval(&self, x: &Point) -> Result<Point, SmoothError> {
        let jets: Vec<Jet> = x.coords().iter().map(|c| Jet::constant(*c)).collect();
        let out = self.eval_jets(&jets)?;
        Point::new(out.iter().map(Jet::real).collect())
            .map_err(|_| SmoothError::NumericOverflow { node: self.to_string() })
    }

    /// Convenience wrapper around [`SmoothMap::eval`] for literal coordinates.
    pub fn eval_at(&self, x: &[f64]) -> Result<Vec<f64>, SmoothError> {
        Ok(self.eval(&Point::new(x.to_vec())?)?.into_coords())
    }

    /// Evaluate on jets. Derivatives of the result with respect to the
    /// infinitesimals in `x` are exact derivatives of the map.
    pub fn eval_jets(&self, x: &[Jet]) -> Result<Vec<Jet>, SmoothError> {
        if x.len() != self.dom {
            return Err(SmoothError::dims(format!("evaluation of {self}"), self.dom, x.len()));
        }
        let out = match &*self.node {
            Node::Identity | Node::Associator => x.to_vec(),
            Node::Slice { start } => x[*start..*start + self.cod].to_vec(),
            Node::Zero => vec![Jet::zero(); self.cod],
            Node::Constant(p) => p.coords().iter().map(|c| Jet::constant(*c)).collect(),
            Node::Compose(f, g) => g.eval_jets(&f.eval_jets(x)?)?,
            Node::Pair(f, g) => {
                let mut out = f.eval_jets(x)?;
                out.extend(g.eval_jets(x)?);
                out
            }
            Node::Product(f, g) => {
                let mut out = f.eval_jets(&x[..f.dom])?;
                out.extend(g.eval_jets(&x[f.dom..])?);
                out
            }
            Node::Add(f, g) => {
                let out = add_vecs(&f.eval_jets(x)?, &g.eval_jets(x)?);
                check_finite("sum", &out)?;
                out
            }
            Node::Unary(p) => {
                let out = vec![p.apply(&x[0])];
                check_finite(&p.to_string(), &out)?;
                out
            }
            Node::Mul => {
                let out = vec![&x[0] * &x[1]];
                check_finite("mul", &out)?;
                out
            }
            Node::Oplus => {
                let n = self.cod;
                let out = add_vecs(&x[..n], &x[n..]);
                check_finite("⊕", &out)?;
                out
            }
            Node::Interchange([a, b, c, _]) => {
                let (ab, cd) = x.split_at(a + b);
                let mut out = ab[..*a].to_vec();
                out.extend_from_slice(&cd[..*c]);
                out.extend_from_slice(&ab[*a..]);
                out.extend_from_slice(&cd[*c..]);
                out
            }
            Node::Differential(f) | Node::Tangent(f) => {
                let n = f.dom;
                let depth = x.iter().map(Jet::depth).max().unwrap_or(0);
                let z: Vec<Jet> = (0..n).map(|i| Jet::pair_at(&x[i], &x[n + i], depth)).collect();
                let w = f.eval_jets(&z)?;
                let tangents = w.iter().map(|j| j.tangent_at(depth));
                if matches!(&*self.node, Node::Differential(_)) {
                    tangents.collect()
                } else {
                    let mut out: Vec<Jet> = w.iter().map(|j| j.value_at(depth)).collect();
                    out.extend(tangents);
                    out
                }
            }
            Node::Named(_, f) => f.eval_jets(x)?,
        };
        Ok(out)
    }
}

impl fmt::Display for SmoothMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.node {
            Node::Identity => write!(f, "1"),
            Node::Slice { start } if *start == 0 && self.cod < self.dom => write!(f, "π₀"),
            Node::Slice { start } if start + self.cod == self.dom && *start > 0 => write!(f, "π₁"),
            Node::Slice { start } => write!(f, "π[{start}..{}]", start + self.cod),
            Node::Zero => write!(f, "0"),
            Node::Constant(p) => write!(f, "const{p}"),
            Node::Compose(a, b) => write!(f, "{a};{b}"),
            Node::Pair(a, b) => write!(f, "⟨{a}, {b}⟩"),
            Node::Product(a, b) => write!(f, "({a} × {b})"),
            Node::Add(a, b) => write!(f, "({a} + {b})"),
            Node::Unary(p) => write!(f, "{p}"),
            Node::Mul => write!(f, "mul"),
            Node::Oplus => write!(f, "⊕"),
            Node::Interchange(_) => write!(f, "c"),
            Node::Associator => write!(f, "α"),
            Node::Differential(g) => write!(f, "D[{g}]"),
            Node::Tangent(g) => write!(f, "T({g})"),
            Node::Named(name, _) => write!(f, "{name}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn differential_of_exp() {
        let d = SmoothMap::exp().differential();
        let v = d.eval_at(&[0.3, 2.0]).unwrap();
        assert!((v[0] - 2.0 * 0.3f64.exp()).abs() < 1e-14);
    }

    #[test]
    fn second_differential_of_exp() {
        // D²[exp]((a,b),(c,d)) = eᵃ(b·c + d)
        let d2 = SmoothMap::exp().differential_n(2);
        let (a, b, c, d) = (0.4, 1.5, -0.7, 2.0);
        let v = d2.eval_at(&[a, b, c, d]).unwrap();
        assert!((v[0] - a.exp() * (b * c + d)).abs() < 1e-13);
    }

    #[test]
    fn differential_of_mul_is_product_rule() {
        let d = SmoothMap::mul().differential();
        let v = d.eval_at(&[2.0, 3.0, 5.0, 7.0]).unwrap();
        assert_eq!(v, vec![2.0 * 7.0 + 3.0 * 5.0]);
    }

    #[test]
    fn tangent_pairs_value_and_derivative() {
        let t = SmoothMap::primitive(Primitive::Sin).tangent();
        let v = t.eval_at(&[0.5, 3.0]).unwrap();
        assert!((v[0] - 0.5f64.sin()).abs() < 1e-15);
        assert!((v[1] - 3.0 * 0.5f64.cos()).abs() < 1e-15);
    }

    #[test]
    fn composition_checks_dimensions() {
        let err = SmoothMap::mul().then(&SmoothMap::mul()).unwrap_err();
        assert!(matches!(err, SmoothError::DimensionMismatch { .. }));
    }

    #[test]
    fn overflow_is_reported() {
        let f = SmoothMap::exp().then(&SmoothMap::exp()).unwrap();
        let err = f.eval_at(&[10.0]).unwrap_err();
        assert!(matches!(err, SmoothError::NumericOverflow { .. }));
    }

    #[test]
    fn interchange_moves_blocks() {
        let c = SmoothMap::interchange(1, 2, 1, 1);
        let v = c.eval_at(&[1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
        assert_eq!(v, vec![1.0, 4.0, 2.0, 3.0, 5.0]);
    }
}
