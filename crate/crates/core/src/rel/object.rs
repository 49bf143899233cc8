use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use super::elem::{multichoose, Elem, MSet};
use super::RelError;

/// Objects of REL built from finite base sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelObj {
    /// `{x₀, …, x_{n−1}}`. `Base(0)` is the zero object.
    Base(u32),
    /// The tensor unit `K = {∗}`.
    Unit,
    /// Finite multisets over the inner object.
    Bang(Arc<RelObj>),
    /// Cartesian product of sets.
    Tensor(Arc<RelObj>, Arc<RelObj>),
    /// Disjoint union, which is both product and coproduct in REL.
    Biprod(Arc<RelObj>, Arc<RelObj>),
}

impl RelObj {
    pub fn base(n: u32) -> RelObj {
        RelObj::Base(n)
    }

    /// The zero object, terminal and initial.
    pub fn top() -> RelObj {
        RelObj::Base(0)
    }

    pub fn bang(a: &RelObj) -> RelObj {
        RelObj::Bang(Arc::new(a.clone()))
    }

    pub fn tensor(a: &RelObj, b: &RelObj) -> RelObj {
        RelObj::Tensor(Arc::new(a.clone()), Arc::new(b.clone()))
    }

    pub fn biprod(a: &RelObj, b: &RelObj) -> RelObj {
        RelObj::Biprod(Arc::new(a.clone()), Arc::new(b.clone()))
    }

    pub fn bang_inner(&self) -> Option<&RelObj> {
        match self {
            RelObj::Bang(a) => Some(a),
            _ => None,
        }
    }

    pub fn tensor_parts(&self) -> Option<(&RelObj, &RelObj)> {
        match self {
            RelObj::Tensor(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn biprod_parts(&self) -> Option<(&RelObj, &RelObj)> {
        match self {
            RelObj::Biprod(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Membership test for elements of this object.
    pub fn contains(&self, e: &Elem) -> bool {
        match (self, e) {
            (RelObj::Base(n), Elem::Atom(i)) => i < n,
            (RelObj::Unit, Elem::Star) => true,
            (RelObj::Bang(a), Elem::Bag(m)) => m.support().all(|x| a.contains(x)),
            (RelObj::Tensor(a, b), Elem::Pair(x, y)) => a.contains(x) && b.contains(y),
            (RelObj::Biprod(a, _), Elem::Inl(x)) => a.contains(x),
            (RelObj::Biprod(_, b), Elem::Inr(y)) => b.contains(y),
            _ => false,
        }
    }

    /// Does every element have rank zero (so the universe is degree-independent)?
    pub fn is_flat(&self) -> bool {
        match self {
            RelObj::Base(_) | RelObj::Unit => true,
            RelObj::Bang(_) => false,
            RelObj::Tensor(a, b) | RelObj::Biprod(a, b) => a.is_flat() && b.is_flat(),
        }
    }
}

impl fmt::Display for RelObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelObj::Base(0) => write!(f, "⊤"),
            RelObj::Base(n) => write!(f, "X{n}"),
            RelObj::Unit => write!(f, "K"),
            RelObj::Bang(a) => write!(f, "!{a}"),
            RelObj::Tensor(a, b) => write!(f, "({a} ⊗ {b})"),
            RelObj::Biprod(a, b) => write!(f, "({a} × {b})"),
        }
    }
}

impl fmt::Debug for RelObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Largest universe materialized before giving up with an explicit error.
pub const UNIVERSE_CAP: usize = 250_000;

type UniverseTable = HashMap<(RelObj, usize), Arc<Vec<Elem>>>;

static UNIVERSES: LazyLock<Mutex<UniverseTable>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// All elements of `obj` with rank at most `degree`, in sorted order.
///
/// Results are memoized per `(object, degree)`. Enumeration is deterministic,
/// so concurrent callers computing the same key store identical tables.
pub fn universe(obj: &RelObj, degree: usize) -> Result<Arc<Vec<Elem>>, RelError> {
    let key = (obj.clone(), degree);
    if let Some(u) = UNIVERSES.lock().expect("universe table poisoned").get(&key) {
        return Ok(u.clone());
    }
    let mut elems = enumerate(obj, degree)?;
    elems.sort();
    elems.dedup();
    let table = Arc::new(elems);
    UNIVERSES.lock().expect("universe table poisoned").insert(key, table.clone());
    Ok(table)
}

fn too_big(obj: &RelObj, degree: usize, size: usize) -> RelError {
    RelError::EnumerationBoundExceeded {
        what: format!("universe of {obj} at degree {degree}"),
        size,
        cap: UNIVERSE_CAP,
    }
}

fn enumerate(obj: &RelObj, degree: usize) -> Result<Vec<Elem>, RelError> {
    Ok(match obj {
        RelObj::Base(n) => (0..*n).map(Elem::Atom).collect(),
        RelObj::Unit => vec![Elem::Star],
        RelObj::Tensor(a, b) => {
            let (ua, ub) = (universe(a, degree)?, universe(b, degree)?);
            let size = ua.len().saturating_mul(ub.len());
            if size > UNIVERSE_CAP {
                return Err(too_big(obj, degree, size));
            }
            ua.iter().flat_map(|x| ub.iter().map(move |y| Elem::pair(x.clone(), y.clone()))).collect()
        }
        RelObj::Biprod(a, b) => {
            let (ua, ub) = (universe(a, degree)?, universe(b, degree)?);
            ua.iter().cloned().map(Elem::inl).chain(ub.iter().cloned().map(Elem::inr)).collect()
        }
        RelObj::Bang(a) => {
            let inner = universe(a, degree)?;
            let size = multiset_count(inner.len(), degree);
            if size > UNIVERSE_CAP {
                return Err(too_big(obj, degree, size));
            }
            (0..=degree).flat_map(|m| multichoose(&inner, m)).map(|elems| Elem::bag(MSet::from_elems(elems))).collect()
        }
    })
}

/// Number of multisets of size at most `d` over `n` items, saturating.
fn multiset_count(n: usize, d: usize) -> usize {
    // Σ_{m ≤ d} C(n + m − 1, m) = C(n + d, d)
    let mut c: u128 = 1;
    for i in 1..=d as u128 {
        c = c * (n as u128 + i) / i;
        if c > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    c as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes() {
        let x2 = RelObj::base(2);
        assert_eq!(universe(&RelObj::bang(&x2), 3).unwrap().len(), 10);
        assert_eq!(universe(&RelObj::bang(&RelObj::bang(&x2)), 3).unwrap().len(), 286);
        assert_eq!(universe(&RelObj::tensor(&x2, &RelObj::Unit), 3).unwrap().len(), 2);
        assert_eq!(universe(&RelObj::biprod(&x2, &x2), 0).unwrap().len(), 4);
        assert_eq!(universe(&RelObj::bang(&RelObj::top()), 3).unwrap().len(), 1);
    }

    #[test]
    fn universe_respects_rank() {
        let obj = RelObj::bang(&RelObj::bang(&RelObj::base(1)));
        for e in universe(&obj, 2).unwrap().iter() {
            assert!(e.rank() <= 2);
            assert!(obj.contains(e));
        }
    }

    #[test]
    fn oversized_universe_is_an_error() {
        let mut obj = RelObj::base(3);
        for _ in 0..4 {
            obj = RelObj::bang(&obj);
        }
        assert!(matches!(universe(&obj, 6), Err(RelError::EnumerationBoundExceeded { .. })));
    }

    #[test]
    fn multiset_count_formula() {
        assert_eq!(multiset_count(2, 3), 10);
        assert_eq!(multiset_count(10, 3), 286);
    }
}
