use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// An element of some object of REL.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    /// The `i`-th point of a base set.
    Atom(u32),
    /// The point of the tensor unit.
    Star,
    Pair(Arc<Elem>, Arc<Elem>),
    Inl(Arc<Elem>),
    Inr(Arc<Elem>),
    Bag(Arc<MSet>),
}

impl Elem {
    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Arc::new(a), Arc::new(b))
    }

    pub fn inl(a: Elem) -> Elem {
        Elem::Inl(Arc::new(a))
    }

    pub fn inr(a: Elem) -> Elem {
        Elem::Inr(Arc::new(a))
    }

    pub fn bag(m: MSet) -> Elem {
        Elem::Bag(Arc::new(m))
    }

    pub fn as_bag(&self) -> Option<&MSet> {
        match self {
            Elem::Bag(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Elem, &Elem)> {
        match self {
            Elem::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// Size measure used for enumeration windows: zero on points, the
    /// maximum over components of a pair, and for a multiset the larger of its
    /// total multiplicity and the ranks of its members.
    pub fn rank(&self) -> usize {
        match self {
            Elem::Atom(_) | Elem::Star => 0,
            Elem::Pair(a, b) => a.rank().max(b.rank()),
            Elem::Inl(a) | Elem::Inr(a) => a.rank(),
            Elem::Bag(m) => m.rank(),
        }
    }
}

const ATOM_NAMES: [&str; 4] = ["x", "y", "z", "w"];

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Atom(i) => match ATOM_NAMES.get(*i as usize) {
                Some(n) => f.write_str(n),
                None => write!(f, "x{i}"),
            },
            Elem::Star => f.write_str("∗"),
            Elem::Pair(a, b) => write!(f, "({a}, {b})"),
            Elem::Inl(a) => write!(f, "inl {a}"),
            Elem::Inr(a) => write!(f, "inr {a}"),
            Elem::Bag(m) => write!(f, "{m}"),
        }
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite multiset, stored as sorted `(element, multiplicity)` entries with
/// no zero multiplicities.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MSet {
    entries: Vec<(Elem, u32)>,
}

impl MSet {
    pub fn empty() -> MSet {
        MSet::default()
    }

    pub fn singleton(e: Elem) -> MSet {
        MSet { entries: vec![(e, 1)] }
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (Elem, u32)>) -> MSet {
        let mut map: BTreeMap<Elem, u32> = BTreeMap::new();
        for (e, k) in counts {
            if k > 0 {
                *map.entry(e).or_insert(0) += k;
            }
        }
        MSet { entries: map.into_iter().collect() }
    }

    pub fn from_elems(elems: impl IntoIterator<Item = Elem>) -> MSet {
        MSet::from_counts(elems.into_iter().map(|e| (e, 1)))
    }

    pub fn entries(&self) -> &[(Elem, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity.
    pub fn degree(&self) -> usize {
        self.entries.iter().map(|(_, k)| *k as usize).sum()
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().map(|(e, _)| e.rank()).fold(self.degree(), usize::max)
    }

    pub fn multiplicity(&self, e: &Elem) -> u32 {
        self.entries.binary_search_by(|(x, _)| x.cmp(e)).map(|i| self.entries[i].1).unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Elem> {
        self.entries.iter().map(|(e, _)| e)
    }

    /// The members listed with repetition, in sorted order.
    pub fn elems(&self) -> Vec<Elem> {
        self.entries.iter().flat_map(|(e, k)| std::iter::repeat_n(e.clone(), *k as usize)).collect()
    }

    /// The multiset sum `f + g`.
    pub fn sum(&self, other: &MSet) -> MSet {
        MSet::from_counts(self.entries.iter().chain(&other.entries).cloned())
    }

    pub fn add_one(&self, e: Elem) -> MSet {
        MSet::from_counts(self.entries.iter().cloned().chain(std::iter::once((e, 1))))
    }

    /// Restrict and relabel: keep members mapped to `Some`, with their counts.
    pub fn filter_map(&self, f: impl Fn(&Elem) -> Option<Elem>) -> MSet {
        MSet::from_counts(self.entries.iter().filter_map(|(e, k)| f(e).map(|x| (x, *k))))
    }

    /// Every `(g, h)` with `g + h = self`.
    pub fn splits(&self) -> Vec<(MSet, MSet)> {
        self.sub_msets()
            .into_iter()
            .map(|g| {
                let h = self.minus(&g).expect("g is a sub-multiset");
                (g, h)
            })
            .collect()
    }

    /// Every sub-multiset, including the empty one and `self`.
    pub fn sub_msets(&self) -> Vec<MSet> {
        let mut out = vec![Vec::new()];
        for (e, k) in &self.entries {
            let mut next = Vec::with_capacity(out.len() * (*k as usize + 1));
            for prefix in &out {
                for j in 0..=*k {
                    let mut p: Vec<(Elem, u32)> = prefix.clone();
                    if j > 0 {
                        p.push((e.clone(), j));
                    }
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(|entries| MSet { entries }).collect()
    }

    /// `self − g` when `g ⊆ self`.
    pub fn minus(&self, g: &MSet) -> Option<MSet> {
        let mut entries = Vec::new();
        for (e, k) in &self.entries {
            let j = g.multiplicity(e);
            if j > *k {
                return None;
            }
            if k > &j {
                entries.push((e.clone(), k - j));
            }
        }
        if g.entries.iter().any(|(e, _)| self.multiplicity(e) == 0) {
            return None;
        }
        Some(MSet { entries })
    }

    /// `Σ_{g} F(g)·g` for a multiset of multisets.
    pub fn flatten(&self) -> Option<MSet> {
        let mut counts = Vec::new();
        for (e, k) in &self.entries {
            for (x, j) in e.as_bag()?.entries() {
                counts.push((x.clone(), j * k));
            }
        }
        Some(MSet::from_counts(counts))
    }

    /// Every way of writing `self` as a sum of nonempty parts, each listing
    /// given once as a multiset of parts.
    pub fn nonempty_partitions(&self, max_parts: usize) -> Vec<Vec<MSet>> {
        fn go(rest: &MSet, min: Option<&MSet>, max_parts: usize, acc: &mut Vec<MSet>, out: &mut Vec<Vec<MSet>>) {
            if rest.is_empty() {
                out.push(acc.clone());
                return;
            }
            if acc.len() == max_parts {
                return;
            }
            // Parts are chosen in non-decreasing order to list each partition once.
            for part in rest.sub_msets() {
                if part.is_empty() || min.is_some_and(|m| &part < m) {
                    continue;
                }
                let remaining = rest.minus(&part).expect("part is a sub-multiset");
                acc.push(part.clone());
                go(&remaining, Some(&part), max_parts, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(self, None, max_parts, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.elems().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All multisets of exactly `m` members drawn from `items` (with repetition).
pub fn multichoose(items: &[Elem], m: usize) -> Vec<Vec<Elem>> {
    fn go(items: &[Elem], start: usize, m: usize, acc: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if m == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..items.len() {
            acc.push(items[i].clone());
            go(items, i, m - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(items, 0, m, &mut Vec::new(), &mut out);
    out
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

    #[test]
    fn splits_of_xy() {
        let f = MSet::from_elems([x(), y()]);
        let mut s: Vec<String> = f.splits().iter().map(|(g, h)| format!("({g}, {h})")).collect();
        s.sort();
        assert_eq!(s, vec!["([], [x, y])", "([x, y], [])", "([x], [y])", "([y], [x])"]);
    }

    #[test]
    fn flatten_nested() {
        let inner1 = Elem::bag(MSet::from_elems([x()]));
        let inner2 = Elem::bag(MSet::from_elems([x(), y()]));
        let big = MSet::from_elems([inner1, inner2]);
        assert_eq!(big.flatten().unwrap().to_string(), "[x, x, y]");
    }

    #[test]
    fn rank_and_degree() {
        let f = MSet::from_elems([x(), x(), y()]);
        assert_eq!(f.degree(), 3);
        assert_eq!(Elem::bag(f.clone()).rank(), 3);
        let nested = MSet::from_elems([Elem::bag(f)]);
        assert_eq!(nested.degree(), 1);
        assert_eq!(nested.rank(), 3);
    }

    #[test]
    fn partitions_of_xxy() {
        let f = MSet::from_elems([x(), x(), y()]);
        // {xxy}, {x|xy}, {y|xx}, {x|x|y}
        assert_eq!(f.nonempty_partitions(3).len(), 4);
        assert_eq!(f.nonempty_partitions(2).len(), 3);
        assert_eq!(MSet::empty().nonempty_partitions(0).len(), 1);
    }

    #[test]
    fn multichoose_counts() {
        let items = vec![x(), y(), Elem::Atom(2)];
        assert_eq!(multichoose(&items, 2).len(), 6);
        assert_eq!(multichoose(&items, 0).len(), 1);
    }
}
