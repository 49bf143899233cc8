use super::{Point, SmoothError, SmoothMap};
use crate::law::{CheckConfig, LawReport, SmoothCheck};

/// Central difference `(f(x + h·v) − f(x − h·v)) / 2h`, an independent check
/// on [`SmoothMap::differential`].
pub fn finite_difference_oracle(f: &SmoothMap, x: &Point, v: &Point, h: f64) -> Result<Point, SmoothError> {
    if x.dim() != f.dom() {
        return Err(SmoothError::dims("finite difference base point", f.dom(), x.dim()));
    }
    if v.dim() != f.dom() {
        return Err(SmoothError::dims("finite difference direction", f.dom(), v.dim()));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(SmoothError::InvalidPoint(format!("step size {h} must be positive")));
    }
    let shifted = |s: f64| Point::new(x.coords().iter().zip(v.coords()).map(|(a, b)| a + s * h * b).collect());
    let plus = f.eval(&shifted(1.0)?)?;
    let minus = f.eval(&shifted(-1.0)?)?;
    let quotient = plus.coords().iter().zip(minus.coords()).map(|(p, m)| (p - m) / (2.0 * h)).collect();
    Point::new(quotient).map_err(|_| SmoothError::NumericOverflow { node: "finite difference".into() })
}

/// Check `D[f] = π₁ f` at sampled points.
pub fn is_linear(f: &SmoothMap, cfg: &CheckConfig) -> LawReport {
    is_linear_with(&format!("linear[{f}]"), f, SmoothCheck::new(&format!("linear[{f}]"), cfg))
}

fn is_linear_with(label: &str, f: &SmoothMap, mut check: SmoothCheck) -> LawReport {
    let rhs = SmoothMap::proj1(f.dom(), f.dom()).then(f).expect("π₁ lands in dom f");
    check.compare(label, &f.differential(), &rhs).expect("D[f] and π₁f share their type");
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smooth::Primitive;

    fn square() -> SmoothMap {
        SmoothMap::primitive(Primitive::Polynomial(vec![0.0, 0.0, 1.0]))
    }

    #[test]
    fn oracle_on_square() {
        let d =
            finite_difference_oracle(&square(), &Point::new(vec![3.0]).unwrap(), &Point::new(vec![1.0]).unwrap(), 1e-5)
                .unwrap();
        assert!((d.coords()[0] - 6.0).abs() <= 1e-9);
    }

    #[test]
    fn oracle_on_constant_and_exp() {
        let c = SmoothMap::constant(1, Point::new(vec![4.0]).unwrap());
        let x = Point::new(vec![0.3]).unwrap();
        let v = Point::new(vec![1.0]).unwrap();
        assert_eq!(finite_difference_oracle(&c, &x, &v, 1e-5).unwrap().coords(), &[0.0]);
        let zero = Point::new(vec![0.0]).unwrap();
        let d = finite_difference_oracle(&SmoothMap::exp(), &zero, &v, 1e-5).unwrap();
        assert!((d.coords()[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn linearity_examples() {
        let cfg = CheckConfig::default();
        assert!(is_linear(&SmoothMap::proj0(1, 1), &cfg).pass);
        assert!(is_linear(&SmoothMap::primitive(Primitive::Scale(2.0)), &cfg).pass);
        assert!(!is_linear(&SmoothMap::exp(), &cfg).pass);
    }
}
