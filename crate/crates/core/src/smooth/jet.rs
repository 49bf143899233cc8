//! Truncated Taylor jets over a family of nilpotent infinitesimals.
//!
//! A jet of depth `k` is an element of `ℝ[ε₁, …, ε_k] / (ε₁², …, ε_k²)`. Its
//! coefficients are indexed by bitmasks: bit `i` set means the monomial
//! contains `ε_{i+1}`. Depth-`k+1` jets are exactly pairs `(value, tangent)` of
//! depth-`k` jets (`value + ε_{k+1}·tangent`), so this flat layout is the same
//! algebra as nested dual numbers without needing recursive types.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of the truncated jet algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet {
    coeffs: Vec<f64>,
}

impl Jet {
    /// A plain real number (depth 0).
    pub fn constant(c: f64) -> Jet {
        Jet { coeffs: vec![c] }
    }

    pub fn zero() -> Jet {
        Jet::constant(0.0)
    }

    /// Build a jet from its coefficient table. The length must be a power of two.
    pub fn from_coeffs(coeffs: Vec<f64>) -> Jet {
        assert!(coeffs.len().is_power_of_two(), "jet coefficient table must have power-of-two length");
        Jet { coeffs }.trimmed()
    }

    /// `value + ε·tangent` where `ε` is the first infinitesimal not used by
    /// either argument.
    pub fn dual(value: Jet, tangent: Jet) -> Jet {
        let depth = value.depth().max(tangent.depth());
        Jet::pair_at(&value, &tangent, depth)
    }

    /// `value + ε_{depth+1}·tangent`, where both parts live at depth `≤ depth`.
    pub fn pair_at(value: &Jet, tangent: &Jet, depth: u32) -> Jet {
        debug_assert!(value.depth() <= depth && tangent.depth() <= depth);
        let half = 1usize << depth;
        let mut coeffs = vec![0.0; half * 2];
        coeffs[..value.coeffs.len()].copy_from_slice(&value.coeffs);
        coeffs[half..half + tangent.coeffs.len()].copy_from_slice(&tangent.coeffs);
        Jet { coeffs }.trimmed()
    }

    /// Number of infinitesimals in the representation.
    pub fn depth(&self) -> u32 {
        self.coeffs.len().trailing_zeros()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// The real part (the coefficient of the empty monomial).
    pub fn real(&self) -> f64 {
        self.coeffs[0]
    }

    /// Part of the jet free of `ε_{depth+1}` and every later infinitesimal.
    pub fn value_at(&self, depth: u32) -> Jet {
        let half = 1usize << depth;
        if self.coeffs.len() <= half {
            self.clone()
        } else {
            Jet { coeffs: self.coeffs[..half].to_vec() }.trimmed()
        }
    }

    /// Coefficient of `ε_{depth+1}`, assuming no later infinitesimal is present.
    pub fn tangent_at(&self, depth: u32) -> Jet {
        let half = 1usize << depth;
        if self.coeffs.len() <= half {
            Jet::zero()
        } else {
            debug_assert_eq!(self.coeffs.len(), 2 * half);
            Jet { coeffs: self.coeffs[half..].to_vec() }.trimmed()
        }
    }

    /// Split at the outermost infinitesimal.
    pub fn value(&self) -> Jet {
        match self.depth() {
            0 => self.clone(),
            k => self.value_at(k - 1),
        }
    }

    /// The coefficient of the outermost infinitesimal.
    pub fn tangent(&self) -> Jet {
        match self.depth() {
            0 => Jet::zero(),
            k => self.tangent_at(k - 1),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Maximum absolute difference between coefficient tables.
    pub fn max_abs_diff(&self, other: &Jet) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).map(|i| (self.coeff(i) - other.coeff(i)).abs()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    fn padded(&self, len: usize) -> Vec<f64> {
        let mut v = self.coeffs.clone();
        v.resize(len, 0.0);
        v
    }

    /// Drop trailing halves that are identically zero so equal jets compare equal.
    fn trimmed(mut self) -> Jet {
        while self.coeffs.len() > 1 {
            let half = self.coeffs.len() / 2;
            if self.coeffs[half..].iter().all(|c| *c == 0.0) {
                self.coeffs.truncate(half);
            } else {
                break;
            }
        }
        self
    }

    /// Apply a smooth scalar function given its derivatives at the real part.
    ///
    /// `derivs(j)` must return `g⁽ʲ⁾(a₀)`. Because every monomial is square
    /// free, the nilpotent part `n` satisfies `n^(k+1) = 0` at depth `k`, so the
    /// Taylor series terminates and the result is exact.
    pub fn lift(&self, derivs: impl Fn(usize) -> f64) -> Jet {
        let k = self.depth() as usize;
        let mut nil = self.clone();
        nil.coeffs[0] = 0.0;
        let mut out = Jet::constant(derivs(0));
        let mut power = Jet::constant(1.0);
        let mut factorial = 1.0;
        for j in 1..=k {
            power = &power * &nil;
            factorial *= j as f64;
            out = &out + &power.scale(derivs(j) / factorial);
        }
        out.trimmed()
    }

    pub fn exp(&self) -> Jet {
        let e = self.real().exp();
        self.lift(|_| e)
    }

    pub fn sin(&self) -> Jet {
        let (s, c) = self.real().sin_cos();
        self.lift(|j| [s, c, -s, -c][j % 4])
    }

    pub fn cos(&self) -> Jet {
        let (s, c) = self.real().sin_cos();
        self.lift(|j| [c, -s, -c, s][j % 4])
    }

    pub fn sinh(&self) -> Jet {
        let (s, c) = (self.real().sinh(), self.real().cosh());
        self.lift(|j| if j % 2 == 0 { s } else { c })
    }

    pub fn cosh(&self) -> Jet {
        let (s, c) = (self.real().sinh(), self.real().cosh());
        self.lift(|j| if j % 2 == 0 { c } else { s })
    }

    /// Evaluate a polynomial with coefficients in increasing degree (Horner).
    pub fn polynomial(&self, coeffs: &[f64]) -> Jet {
        let mut acc = Jet::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + &Jet::constant(*c);
        }
        acc
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = self.padded(n);
        for (a, b) in v.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        Jet { coeffs: v }.trimmed()
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self + &(-rhs)
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

impl Mul for &Jet {
    type Output = Jet;
    // Subset convolution: ε_S·ε_T = ε_{S∪T} when S and T are disjoint, else 0.
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![0.0; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0.0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i & j == 0 {
                    v[i | j] += a * b;
                }
            }
        }
        Jet { coeffs: v }.trimmed()
    }
}

impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if *c == 0.0 && mask != 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for bit in 0..self.depth() {
                if mask & (1 << bit) != 0 {
                    write!(f, "·ε{}", bit + 1)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dual_number_product_rule() {
        let a = Jet::dual(Jet::constant(3.0), Jet::constant(1.0));
        let b = Jet::dual(Jet::constant(2.0), Jet::constant(5.0));
        let p = &a * &b;
        assert_eq!(p.value(), Jet::constant(6.0));
        assert_eq!(p.tangent(), Jet::constant(17.0));
    }

    #[test]
    fn exp_of_dual_number() {
        let x = Jet::dual(Jet::constant(0.5), Jet::constant(2.0));
        let e = x.exp();
        assert!((e.real() - 0.5f64.exp()).abs() < 1e-15);
        assert!((e.tangent().real() - 2.0 * 0.5f64.exp()).abs() < 1e-15);
    }

    #[test]
    fn second_order_jet_gives_second_derivative() {
        // x = a + ε₁ + ε₂ ; sin(x) has ε₁ε₂ coefficient sin''(a).
        let a = 0.7f64;
        let x = Jet::from_coeffs(vec![a, 1.0, 1.0, 0.0]);
        let s = x.sin();
        assert!((s.coeffs()[3] + a.sin()).abs() < 1e-15);
    }

    #[test]
    fn nilpotent_squares_vanish() {
        let e1 = Jet::from_coeffs(vec![0.0, 1.0]);
        assert_eq!(&e1 * &e1, Jet::zero());
    }

    #[test]
    fn trimmed_equality() {
        let a = Jet::from_coeffs(vec![1.0, 0.0, 0.0, 0.0]);
        let b = Jet::constant(1.0);
        assert_eq!(&a + &Jet::zero(), b);
    }
}
