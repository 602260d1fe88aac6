use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex label.
pub const MAX_VERTICES: usize = 63;

/// A subset of `{1, ..., n}` stored as a bitmask; bit `i` is vertex `i`.
///
/// Bit 0 is never set. Ordering is by raw bitmask value, which is the
/// canonical face order used throughout (boundary matrices, serialization).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// Builds a set from raw bits. Bit 0 must be clear.
    pub fn from_bits(bits: u64) -> Self {
        debug_assert_eq!(bits & 1, 0, "bit 0 is not a vertex");
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << v)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet((u64::MAX >> (63 - n)) & !1)
        }
    }

    /// Builds a set from 1-based labels, checking each lies in `1..=n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            bits |= 1u64 << v;
        }
        Ok(VertexSet(bits))
    }

    pub fn cardinality(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v <= MAX_VERTICES && self.0 & (1u64 << v) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn remove(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u64 << v))
    }

    /// Largest label in the set, if any.
    pub fn max_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets obtained by deleting exactly one vertex, paired with the
    /// position (0-based, ascending order) of the deleted vertex.
    pub fn facets_with_position(self) -> impl Iterator<Item = (usize, VertexSet)> {
        self.iter().enumerate().map(move |(pos, v)| (pos, self.remove(v)))
    }

    /// Every subset of `self`, including `self` and the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Subsets of `self` with exactly `k` elements, in lexicographic order of
    /// their ascending label tuples.
    pub fn subsets_of_size(self, k: usize) -> impl Iterator<Item = VertexSet> {
        let labels = self.to_vec();
        Combinations::new(labels.len(), k)
            .map(move |idx| VertexSet(idx.iter().fold(0u64, |acc, &i| acc | (1u64 << labels[i]))))
    }

    /// Lex comparison of the squarefree monomials `x^self` and `x^other`
    /// (x1 > x2 > ... > xn): the larger monomial is the one holding the
    /// smallest label of the symmetric difference. Only meaningful for sets of
    /// equal cardinality.
    pub fn cmp_lex(self, other: VertexSet) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Applies a relabeling `perm[v - 1] = image of v`.
    pub fn permute(self, perm: &[usize]) -> VertexSet {
        VertexSet(self.iter().fold(0u64, |acc, v| acc | (1u64 << perm[v - 1])))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Ascending iterator over the vertices of a [`VertexSet`].
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterator over all submasks of a mask, in increasing numeric order.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// Lexicographic `k`-combinations of `0..n` as index vectors.
pub(crate) struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for t in i + 1..k {
                    self.idx[t] = self.idx[t - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Binomial coefficient with saturating arithmetic.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_cardinality() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(3).to_vec(), vec![1, 2, 3]);
        assert_eq!(VertexSet::full(63).cardinality(), 63);
        assert!(!VertexSet::full(63).contains(0));
    }

    #[test]
    fn rejects_out_of_range_labels() {
        assert_eq!(
            VertexSet::from_vertices(3, [1, 4]),
            Err(Error::InvalidVertex { vertex: 4, n: 3 })
        );
        assert!(VertexSet::from_vertices(3, [0]).is_err());
        assert!(VertexSet::from_vertices(64, [1]).is_err());
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = VertexSet::from_vertices(5, [2, 4, 5]).unwrap();
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn subsets_of_size_counts() {
        let s = VertexSet::full(6);
        for k in 0..=7 {
            assert_eq!(s.subsets_of_size(k).count() as u64, binomial(6, k));
        }
    }

    #[test]
    fn facet_positions_follow_ascending_order() {
        let s = VertexSet::from_vertices(5, [1, 3, 5]).unwrap();
        let got: Vec<_> = s.facets_with_position().collect();
        assert_eq!(got[0], (0, VertexSet::from_vertices(5, [3, 5]).unwrap()));
        assert_eq!(got[2], (2, VertexSet::from_vertices(5, [1, 3]).unwrap()));
    }

    #[test]
    fn lex_order_on_pairs() {
        let v = |a: &[usize]| VertexSet::from_vertices(4, a.iter().copied()).unwrap();
        let mut pairs: Vec<_> = VertexSet::full(4).subsets_of_size(2).collect();
        pairs.sort_by(|a, b| b.cmp_lex(*a));
        let want = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]];
        assert_eq!(pairs, want.iter().map(|p| v(p)).collect::<Vec<_>>());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(4, 5), 0);
        assert_eq!(binomial(63, 31), 916312070471295267);
    }
}
