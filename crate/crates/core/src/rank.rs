//! The ground-set rank function `ρ(X) = max_{u ∈ B} Σ_{i ∈ X} u_i` and the
//! closed / inseparable subset families it induces.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::polymatroid::{BaseSet, CapacityVector};

/// Default ground-set cap for materialized rank tables.
pub const DEFAULT_MAX_N: usize = 20;

/// Hard limit from the `u32` bitmask encoding.
const MASK_BITS: usize = 32;

/// A subset of `[n]` as a bitmask: vertex label `i` is bit `i - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    /// From 1-indexed labels, each within `1..=n`.
    pub fn from_labels(labels: &[usize], n: usize) -> Result<Self> {
        let mut mask = 0u32;
        for &l in labels {
            if l == 0 || l > n || l > MASK_BITS {
                return Err(Error::IndexOutOfRange { index: l, n });
            }
            mask |= 1 << (l - 1);
        }
        Ok(Subset(mask))
    }

    pub fn full(n: usize) -> Self {
        if n >= MASK_BITS {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains_label(self, label: usize) -> bool {
        (1..=MASK_BITS).contains(&label) && self.0 >> (label - 1) & 1 == 1
    }

    pub fn with_label(self, label: usize) -> Self {
        Subset(self.0 | 1 << (label - 1))
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending 1-indexed labels.
    pub fn labels(self) -> Vec<usize> {
        (0..MASK_BITS)
            .filter(|&b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    /// Applies a 0-based vertex permutation (`v ↦ perm[v]`).
    pub fn permuted(self, perm: &[usize]) -> Subset {
        let mut mask = 0;
        for (v, &p) in perm.iter().enumerate() {
            if self.0 >> v & 1 == 1 {
                mask |= 1 << p;
            }
        }
        Subset(mask)
    }

    /// Cardinality first, then bitmask.
    pub fn canonical_key(self) -> (usize, u32) {
        (self.len(), self.0)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().into_iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.labels().serialize(s)
    }
}

fn check_within(n: usize, x: Subset) -> Result<()> {
    if !x.is_subset_of(Subset::full(n)) {
        let bad = x.labels().into_iter().find(|&l| l > n).unwrap_or(0);
        return Err(Error::IndexOutOfRange { index: bad, n });
    }
    Ok(())
}

/// `ρ(X)` straight from the bases.
pub fn rank(b: &BaseSet, x: Subset) -> Result<u32> {
    check_within(b.n(), x)?;
    let labels = x.labels();
    Ok(b.bases()
        .iter()
        .map(|u| labels.iter().map(|&l| u[l - 1]).sum::<u32>())
        .max()
        .unwrap_or(0))
}

/// `min(c_i, Σ_{k ∈ N(i)} c_k)` for the 1-indexed vertex `i`.
pub fn rank_singleton_formula(g: &Graph, c: &CapacityVector, i: usize) -> Result<u32> {
    if c.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    if i == 0 || i > g.n() {
        return Err(Error::IndexOutOfRange { index: i, n: g.n() });
    }
    let v = i - 1;
    let neighborhood: u32 = g.neighbors(v).iter().map(|&k| c[k]).sum();
    Ok(c[v].min(neighborhood))
}

/// `ρ` materialized for every subset of `[n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    n: usize,
    delta: u32,
    ranks: Vec<u32>,
}

impl RankTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn get(&self, x: Subset) -> u32 {
        self.ranks[x.mask() as usize]
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn values(&self) -> &[u32] {
        &self.ranks
    }

    /// A pair `X ⊆ Y` with `ρ(X) > ρ(Y)`, if any (checked over one-element
    /// extensions, which suffices for monotonicity).
    pub fn monotonicity_violation(&self) -> Option<(Subset, Subset)> {
        let full = self.full().mask();
        (0..=full).find_map(|x| {
            (0..self.n)
                .map(|b| x | 1 << b)
                .find(|&y| y != x && self.ranks[x as usize] > self.ranks[y as usize])
                .map(|y| (Subset(x), Subset(y)))
        })
    }

    /// A pair violating `ρ(X) + ρ(Y) >= ρ(X ∪ Y) + ρ(X ∩ Y)`, if any.
    /// Exhaustive over all pairs.
    pub fn submodularity_violation(&self) -> Option<(Subset, Subset)> {
        let full = self.full().mask();
        for x in 0..=full {
            for y in x..=full {
                if !self.submodular_at(x, y) {
                    return Some((Subset(x), Subset(y)));
                }
            }
        }
        None
    }

    pub(crate) fn submodular_at(&self, x: u32, y: u32) -> bool {
        let r = |m: u32| self.ranks[m as usize];
        r(x) + r(y) >= r(x | y) + r(x & y)
    }
}

pub fn rank_table(b: &BaseSet) -> Result<RankTable> {
    rank_table_with_cap(b, DEFAULT_MAX_N)
}

/// Builds the table by per-base incremental subset sums, keeping the
/// elementwise maximum.
pub fn rank_table_with_cap(b: &BaseSet, max_n: usize) -> Result<RankTable> {
    let n = b.n();
    let limit = max_n.min(MASK_BITS - 1);
    if n > limit {
        return Err(Error::SizeCap {
            what: "rank-table ground set",
            requested: n as u128,
            limit: limit as u128,
        });
    }
    let size = 1usize << n;
    let mut ranks = vec![0u32; size];
    let mut sums = vec![0u32; size];
    for base in b.bases() {
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + base[low];
            ranks[mask] = ranks[mask].max(sums[mask]);
        }
    }
    Ok(RankTable {
        n,
        delta: b.delta(),
        ranks,
    })
}

fn check_nonempty(t: &RankTable, a: Subset) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    check_within(t.n, a)
}

/// `ρ(A ∪ {j}) > ρ(A)` for every `j ∉ A`; by monotonicity this is the same
/// as strict growth on every strict superset.
pub fn is_closed(t: &RankTable, a: Subset) -> Result<bool> {
    check_nonempty(t, a)?;
    let base = t.get(a);
    Ok((0..t.n)
        .map(|b| 1u32 << b)
        .filter(|bit| a.mask() & bit == 0)
        .all(|bit| t.ranks[(a.mask() | bit) as usize] > base))
}

/// Closedness straight from the definition: compares against every strict
/// superset.
pub fn is_closed_definitional(t: &RankTable, a: Subset) -> Result<bool> {
    check_nonempty(t, a)?;
    let base = t.get(a);
    let rest = t.full().mask() & !a.mask();
    let mut extra = rest;
    while extra != 0 {
        if t.ranks[(a.mask() | extra) as usize] <= base {
            return Ok(false);
        }
        extra = (extra - 1) & rest;
    }
    Ok(true)
}

/// No split `A = A' ⊔ A''` into nonempty parts has `ρ(A) = ρ(A') + ρ(A'')`.
pub fn is_inseparable(t: &RankTable, a: Subset) -> Result<bool> {
    check_nonempty(t, a)?;
    Ok(inseparable_unchecked(t, a.mask()))
}

fn inseparable_unchecked(t: &RankTable, a: u32) -> bool {
    let total = t.ranks[a as usize];
    let low = a & a.wrapping_neg();
    let rest = a & !low;
    // parts containing the lowest element; each bipartition visited once
    let mut extra = rest;
    loop {
        let part = low | extra;
        if part != a && t.ranks[part as usize] + t.ranks[(a & !part) as usize] == total {
            return false;
        }
        if extra == 0 {
            return true;
        }
        extra = (extra - 1) & rest;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifiedSubset {
    pub set: Subset,
    pub rank: u32,
    pub closed: bool,
    pub inseparable: bool,
}

impl Serialize for ClassifiedSubset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassifiedSubset", 4)?;
        st.serialize_field("closed", &self.closed)?;
        st.serialize_field("inseparable", &self.inseparable)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("set", &self.set)?;
        st.end()
    }
}

pub fn classify(t: &RankTable, a: Subset) -> Result<ClassifiedSubset> {
    Ok(ClassifiedSubset {
        set: a,
        rank: t.get(a),
        closed: is_closed(t, a)?,
        inseparable: is_inseparable(t, a)?,
    })
}

/// The closed ∧ inseparable subsets, ordered by cardinality then bitmask.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SubsetClassification {
    entries: Vec<ClassifiedSubset>,
}

impl SubsetClassification {
    pub fn entries(&self) -> &[ClassifiedSubset] {
        &self.entries
    }

    pub fn subsets(&self) -> Vec<Subset> {
        self.entries.iter().map(|e| e.set).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn closed_inseparable_sets(t: &RankTable) -> SubsetClassification {
    let full = t.full().mask();
    let mut entries: Vec<ClassifiedSubset> = (1..=full)
        .map(Subset)
        .filter(|&a| is_closed(t, a).unwrap_or(false))
        .filter(|a| inseparable_unchecked(t, a.mask()))
        .map(|a| ClassifiedSubset {
            set: a,
            rank: t.get(a),
            closed: true,
            inseparable: true,
        })
        .collect();
    entries.sort_by_key(|e| e.set.canonical_key());
    SubsetClassification { entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::polymatroid::bases;

    fn table(g: &Graph, c: &[u32]) -> RankTable {
        let c = CapacityVector::new(c.to_vec()).unwrap();
        rank_table(&bases(g, &c).unwrap()).unwrap()
    }

    fn set(labels: &[usize], n: usize) -> Subset {
        Subset::from_labels(labels, n).unwrap()
    }

    fn label_lists(c: &SubsetClassification) -> Vec<Vec<usize>> {
        c.subsets().into_iter().map(Subset::labels).collect()
    }

    #[test]
    fn subset_labels_round_trip() {
        let s = set(&[1, 3, 5], 5);
        assert_eq!(s.mask(), 0b10101);
        assert_eq!(s.labels(), vec![1, 3, 5]);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert!(Subset::from_labels(&[6], 5).is_err());
        assert!(Subset::from_labels(&[0], 5).is_err());
    }

    #[test]
    fn direct_rank_small_cases() {
        let p5 = path(5).unwrap();
        let b = bases(&p5, &CapacityVector::uniform(5, 1).unwrap()).unwrap();
        assert_eq!(rank(&b, set(&[1, 3, 5], 5)).unwrap(), 2);
        assert_eq!(rank(&b, Subset::EMPTY).unwrap(), 0);
        assert!(rank(&b, set(&[6], 6)).is_err());
        let b = bases(&cycle(4).unwrap(), &CapacityVector::uniform(4, 1).unwrap()).unwrap();
        assert_eq!(rank(&b, set(&[1, 2], 4)).unwrap(), 2);
    }

    #[test]
    fn singleton_formula_small_cases() {
        let c = |v: &[u32]| CapacityVector::new(v.to_vec()).unwrap();
        assert_eq!(rank_singleton_formula(&path(5).unwrap(), &c(&[1, 1, 2, 1, 1]), 3).unwrap(), 2);
        assert_eq!(rank_singleton_formula(&complete(3).unwrap(), &c(&[1, 1, 1]), 1).unwrap(), 1);
        assert_eq!(rank_singleton_formula(&path(3).unwrap(), &c(&[1, 5, 1]), 2).unwrap(), 2);
        assert!(rank_singleton_formula(&path(3).unwrap(), &c(&[1, 5, 1]), 4).is_err());
    }

    #[test]
    fn tables_for_cube_and_triangle() {
        let t = table(&cycle(4).unwrap(), &[1; 4]);
        for mask in 0..16u32 {
            assert_eq!(t.get(Subset(mask)), mask.count_ones());
        }
        let t = table(&complete(3).unwrap(), &[1; 3]);
        for mask in 0..7u32 {
            assert_eq!(t.get(Subset(mask)), mask.count_ones());
        }
        assert_eq!(t.get(t.full()), 2);
        assert_eq!(t.get(t.full()), 2 * t.delta());
    }

    #[test]
    fn table_cap() {
        let b = bases(&cycle(5).unwrap(), &CapacityVector::uniform(5, 1).unwrap()).unwrap();
        assert!(matches!(rank_table_with_cap(&b, 4), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn closedness_small_cases() {
        let t = table(&path(5).unwrap(), &[1; 5]);
        assert!(is_closed(&t, set(&[1, 3, 5], 5)).unwrap());
        assert!(!is_closed(&t, set(&[1, 3], 5)).unwrap());
        assert!(is_closed(&t, t.full()).unwrap());
        assert_eq!(is_closed(&t, Subset::EMPTY), Err(Error::EmptySubset));
        assert!(is_closed_definitional(&t, set(&[1, 3, 5], 5)).unwrap());
        assert!(!is_closed_definitional(&t, set(&[1, 3], 5)).unwrap());
    }

    #[test]
    fn inseparability_small_cases() {
        let t = table(&cycle(4).unwrap(), &[1; 4]);
        assert!(is_inseparable(&t, set(&[2], 4)).unwrap());
        assert!(!is_inseparable(&t, set(&[1, 2], 4)).unwrap());
        let t = table(&path(5).unwrap(), &[1; 5]);
        assert!(is_inseparable(&t, set(&[1, 3, 5], 5)).unwrap());
        assert_eq!(is_inseparable(&t, Subset::EMPTY), Err(Error::EmptySubset));
    }

    #[test]
    fn closed_inseparable_families() {
        let t = table(&complete(3).unwrap(), &[1; 3]);
        assert_eq!(
            label_lists(&closed_inseparable_sets(&t)),
            vec![vec![1], vec![2], vec![3], vec![1, 2, 3]]
        );
        let t = table(&path(5).unwrap(), &[1, 1, 2, 1, 1]);
        assert_eq!(
            label_lists(&closed_inseparable_sets(&t)),
            vec![vec![1], vec![2], vec![4], vec![5], vec![1, 3, 5]]
        );
        let t = table(&cycle(4).unwrap(), &[1; 4]);
        assert_eq!(
            label_lists(&closed_inseparable_sets(&t)),
            vec![vec![1], vec![2], vec![3], vec![4]]
        );
    }

    #[test]
    fn classification_json() {
        let t = table(&path(5).unwrap(), &[1; 5]);
        let json = serde_json::to_string(&classify(&t, set(&[1, 3, 5], 5)).unwrap()).unwrap();
        assert_eq!(json, r#"{"closed":true,"inseparable":true,"rank":2,"set":[1,3,5]}"#);
    }
}
