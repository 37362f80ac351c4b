//! Bounded powers `(I(G)^q)_c` through their combinatorial shadow: degree-capped
//! edge multisets.
//!
//! A monomial of `I(G)^q` bounded by `c` exists exactly when some edge
//! multiset of size `q` has every vertex degree at most `c`, so `δ` is a
//! maximum uncapacitated b-matching and the bases `B(G, c)` are the degree
//! vectors of the maximum ones.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, INF};
use crate::graph::Graph;

/// Default cap on `Π (c_i + 1)` for filter-mode enumeration.
pub const DEFAULT_MAX_CANDIDATES: u128 = 100_000_000;

/// Componentwise exponent bound `c`, every entry at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CapacityVector(Vec<u32>);

impl CapacityVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(i) = entries.iter().position(|&x| x == 0) {
            return Err(Error::NonPositiveCapacity { index: i + 1 });
        }
        Ok(Self(entries))
    }

    pub fn uniform(n: usize, k: u32) -> Result<Self> {
        Self::new(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_uniform(&self, k: u32) -> bool {
        self.0.iter().all(|&x| x == k)
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `Π (c_i + 1)`, saturating.
    pub fn candidate_count(&self) -> u128 {
        self.0
            .iter()
            .fold(1u128, |acc, &x| acc.saturating_mul(x as u128 + 1))
    }

    fn check_dim(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::DimensionMismatch {
                expected: g.n(),
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for CapacityVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u32>::deserialize(d)?;
        CapacityVector::new(v).map_err(serde::de::Error::custom)
    }
}

impl Index<usize> for CapacityVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for CapacityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Exponent tuple of one monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        Self(entries)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The unit vector at 0-based index `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &[u32]) -> bool {
        self.0.len() == other.len() && self.0.iter().zip(other).all(|(a, b)| a <= b)
    }
}

impl Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        Self(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in v.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// `B(G, c)`: sorted lexicographically, all of total `2 * delta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSet {
    delta: u32,
    bases: Vec<ExponentVector>,
}

impl BaseSet {
    /// Wraps an explicit base list; sorts and deduplicates it.
    pub fn from_bases(delta: u32, bases: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let bases: BTreeSet<ExponentVector> = bases.into_iter().collect();
        let mut iter = bases.iter();
        let Some(first) = iter.next() else {
            return Err(Error::Parameter("base set must be nonempty".into()));
        };
        for b in bases.iter() {
            if b.len() != first.len() {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    found: b.len(),
                });
            }
            if b.total() != 2 * delta {
                return Err(Error::Parameter(format!(
                    "base {b} has total {} but 2*delta = {}",
                    b.total(),
                    2 * delta
                )));
            }
        }
        Ok(Self {
            delta,
            bases: bases.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.bases[0].len()
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn bases(&self) -> &[ExponentVector] {
        &self.bases
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.bases.binary_search(a).is_ok()
    }

    /// True when the only base is the constant vector `(k, …, k)`.
    pub fn is_single_uniform(&self, k: u32) -> bool {
        self.bases.len() == 1 && self.bases[0].as_slice().iter().all(|&x| x == k)
    }
}

/// A downward-closed set of lattice points, e.g. `D(G, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: BTreeSet<ExponentVector>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.points.contains(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ExponentVector> {
        self.points.iter()
    }

    pub fn into_set(self) -> BTreeSet<ExponentVector> {
        self.points
    }

    /// Checks that lowering any coordinate of a member by one stays inside.
    pub fn is_downward_closed(&self) -> bool {
        self.points.iter().all(|p| {
            (0..p.len()).filter(|&i| p[i] > 0).all(|i| {
                let mut q = p.clone();
                q.0[i] -= 1;
                self.points.contains(&q)
            })
        })
    }
}

/// `δ_c(I(G))`. Bipartite graphs go through a max-flow reduction; all
/// other graphs through the memoized exhaustive search of [`delta_search`].
pub fn delta(g: &Graph, c: &CapacityVector) -> Result<u32> {
    c.check_dim(g)?;
    Ok(match g.bipartition() {
        Some(side) => bipartite_max_matching(g, &side, c.as_slice()).0,
        None => DeltaSearch::new(g).best(c.as_slice().to_vec()),
    })
}

/// `δ` by the generic exact search regardless of graph structure: branch on
/// the lowest live vertex (retire it, or spend one of its edges), memoized
/// on the residual capacity vector.
pub fn delta_search(g: &Graph, c: &CapacityVector) -> Result<u32> {
    c.check_dim(g)?;
    Ok(DeltaSearch::new(g).best(c.as_slice().to_vec()))
}

/// Whether some edge multiset of `g` has degree vector exactly `a`.
pub fn is_realizable(g: &Graph, a: &ExponentVector) -> Result<bool> {
    if a.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: a.len(),
        });
    }
    Ok(Realizer::new(g).check(a.as_slice()))
}

/// Realizability by the recursive decomposition only.
pub fn is_realizable_search(g: &Graph, a: &ExponentVector) -> Result<bool> {
    if a.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: a.len(),
        });
    }
    let mut r = Realizer::new(g);
    r.side = None;
    Ok(r.check(a.as_slice()))
}

/// The singleton bound iterated to a fixpoint: repeatedly replace
/// `c_i` by `min(c_i, Σ_{k ∈ N(i)} c_k)`. Every base of `(g, c)` already
/// satisfies the lowered bound, so `B(g, c)` does not change; at the fixpoint
/// each entry equals the singleton rank `ρ({i})`.
pub fn effective_capacity(g: &Graph, c: &CapacityVector) -> Result<CapacityVector> {
    c.check_dim(g)?;
    let mut cur = c.as_slice().to_vec();
    loop {
        let next: Vec<u32> = (0..g.n())
            .map(|i| cur[i].min(g.neighbors(i).iter().map(|&k| cur[k]).sum()))
            .collect();
        if next == cur {
            return CapacityVector::new(cur);
        }
        cur = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BaseMode {
    /// Close a seed base under single moves `a - e_i + e_j`.
    #[default]
    Exchange,
    /// Test every `a <= c` of total `2δ` in lexicographic order.
    Filter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseOptions {
    pub mode: BaseMode,
    /// Cap on `Π (c_i + 1)`, enforced in filter mode only.
    pub max_candidates: u128,
}

impl Default for BaseOptions {
    fn default() -> Self {
        Self {
            mode: BaseMode::Exchange,
            max_candidates: DEFAULT_MAX_CANDIDATES,
        }
    }
}

impl BaseOptions {
    pub fn filter() -> Self {
        Self {
            mode: BaseMode::Filter,
            ..Self::default()
        }
    }
}

/// `B(G, c)` by exchange closure.
pub fn bases(g: &Graph, c: &CapacityVector) -> Result<BaseSet> {
    bases_with(g, c, &BaseOptions::default())
}

pub fn bases_with(g: &Graph, c: &CapacityVector, opts: &BaseOptions) -> Result<BaseSet> {
    c.check_dim(g)?;
    match opts.mode {
        BaseMode::Exchange => exchange_bases(g, c),
        BaseMode::Filter => filter_bases(g, c, opts.max_candidates),
    }
}

fn seed_base(g: &Graph, c: &CapacityVector) -> (u32, Vec<u32>) {
    match g.bipartition() {
        Some(side) => bipartite_max_matching(g, &side, c.as_slice()),
        None => {
            let mut search = DeltaSearch::new(g);
            let d = search.best(c.as_slice().to_vec());
            let degrees = search.witness(c.as_slice().to_vec());
            (d, degrees)
        }
    }
}

fn exchange_bases(g: &Graph, c: &CapacityVector) -> Result<BaseSet> {
    let (d, seed) = seed_base(g, c);
    let cap = c.as_slice();
    let n = g.n();
    let mut realizer = Realizer::new(g);
    let mut found: HashSet<Vec<u32>> = HashSet::from([seed.clone()]);
    let mut rejected: HashSet<Vec<u32>> = HashSet::new();
    // in a bipartite graph a move across the sides unbalances the side sums
    let same_side = |i: usize, j: usize| realizer.side.as_ref().is_none_or(|s| s[i] == s[j]);
    let allowed: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| j != i && same_side(i, j)).collect()).collect();
    let mut queue = VecDeque::from([seed]);
    while let Some(a) = queue.pop_front() {
        for i in (0..n).filter(|&i| a[i] > 0) {
            for &j in allowed[i].iter().filter(|&&j| a[j] < cap[j]) {
                let mut b = a.clone();
                b[i] -= 1;
                b[j] += 1;
                if found.contains(&b) || rejected.contains(&b) {
                    continue;
                }
                if realizer.check(&b) {
                    found.insert(b.clone());
                    queue.push_back(b);
                } else {
                    rejected.insert(b);
                }
            }
        }
    }
    BaseSet::from_bases(d, found.into_iter().map(ExponentVector))
}

fn filter_bases(g: &Graph, c: &CapacityVector, max_candidates: u128) -> Result<BaseSet> {
    let count = c.candidate_count();
    if count > max_candidates {
        return Err(Error::SizeCap {
            what: "candidate count",
            requested: count,
            limit: max_candidates,
        });
    }
    let d = delta(g, c)?;
    let cap = c.as_slice();
    // suffix[i] = Σ_{k >= i} c_k
    let mut suffix = vec![0u32; cap.len() + 1];
    for i in (0..cap.len()).rev() {
        suffix[i] = suffix[i + 1] + cap[i];
    }
    let mut realizer = Realizer::new(g);
    let mut out = Vec::new();
    let mut current = vec![0u32; cap.len()];
    enumerate_candidates(cap, &suffix, 0, 2 * d, &mut current, &mut |a| {
        if realizer.check(a) {
            out.push(ExponentVector(a.to_vec()));
        }
    });
    BaseSet::from_bases(d, out)
}

/// Visits every `a <= cap` with `Σ a = need`, lexicographically.
fn enumerate_candidates(
    cap: &[u32],
    suffix: &[u32],
    i: usize,
    need: u32,
    current: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if i == cap.len() {
        if need == 0 {
            visit(current);
        }
        return;
    }
    let lo = need.saturating_sub(suffix[i + 1]);
    let hi = cap[i].min(need);
    for x in lo..=hi {
        current[i] = x;
        enumerate_candidates(cap, suffix, i + 1, need - x, current, visit);
    }
    current[i] = 0;
}

/// `D(G, c)`: everything componentwise below some base.
pub fn downward_closure(b: &BaseSet) -> PointSet {
    let mut points = BTreeSet::new();
    for base in b.bases() {
        let mut current = vec![0u32; base.len()];
        below(base.as_slice(), 0, &mut current, &mut points);
    }
    PointSet { points }
}

fn below(top: &[u32], i: usize, current: &mut Vec<u32>, out: &mut BTreeSet<ExponentVector>) {
    if i == top.len() {
        out.insert(ExponentVector(current.clone()));
        return;
    }
    for x in 0..=top[i] {
        current[i] = x;
        below(top, i + 1, current, out);
    }
    current[i] = 0;
}

/// Max flow from one color class to the other; returns `(δ, degree vector
/// of an optimal multiset)`.
fn bipartite_max_matching(g: &Graph, side: &[bool], cap: &[u32]) -> (u32, Vec<u32>) {
    let n = g.n();
    let (source, sink) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    let mut terminal = vec![0; n];
    for v in 0..n {
        terminal[v] = if side[v] {
            net.add_arc(v, sink, cap[v] as u64)
        } else {
            net.add_arc(source, v, cap[v] as u64)
        };
    }
    for &(u, v) in g.edges() {
        let (l, r) = if side[u] { (v, u) } else { (u, v) };
        net.add_arc(l, r, INF);
    }
    let total = net.max_flow(source, sink) as u32;
    let degrees = terminal.iter().map(|&id| net.flow_on(id) as u32).collect();
    (total, degrees)
}

/// Zeroes residual entries whose neighbors are all exhausted.
fn retire_dead(g: &Graph, r: &mut [u32]) {
    for v in 0..g.n() {
        if r[v] > 0 && g.neighbors(v).iter().all(|&u| r[u] == 0) {
            r[v] = 0;
        }
    }
}

struct DeltaSearch<'g> {
    g: &'g Graph,
    memo: HashMap<Vec<u32>, u32>,
}

impl<'g> DeltaSearch<'g> {
    fn new(g: &'g Graph) -> Self {
        Self {
            g,
            memo: HashMap::new(),
        }
    }

    fn best(&mut self, mut r: Vec<u32>) -> u32 {
        retire_dead(self.g, &mut r);
        let Some(v) = r.iter().position(|&x| x > 0) else {
            return 0;
        };
        if let Some(&known) = self.memo.get(&r) {
            return known;
        }
        let ceiling = r.iter().sum::<u32>() / 2;
        let mut best = {
            let mut s = r.clone();
            s[v] = 0;
            self.best(s)
        };
        for &u in self.g.neighbors(v) {
            if best == ceiling {
                break;
            }
            if r[u] > 0 {
                let mut s = r.clone();
                s[v] -= 1;
                s[u] -= 1;
                best = best.max(1 + self.best(s));
            }
        }
        self.memo.insert(r, best);
        best
    }

    /// Degree vector of one optimal multiset for residual `r`, read back
    /// from the memo.
    fn witness(&mut self, mut r: Vec<u32>) -> Vec<u32> {
        let mut used = vec![0u32; r.len()];
        loop {
            retire_dead(self.g, &mut r);
            let Some(v) = r.iter().position(|&x| x > 0) else {
                return used;
            };
            let target = self.best(r.clone());
            let step = self
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| r[u] > 0)
                .find(|&u| {
                    let mut s = r.clone();
                    s[v] -= 1;
                    s[u] -= 1;
                    1 + self.best(s) == target
                });
            match step {
                Some(u) => {
                    r[v] -= 1;
                    r[u] -= 1;
                    used[v] += 1;
                    used[u] += 1;
                }
                None => r[v] = 0,
            }
        }
    }
}

/// Exact-degree realizability with a memo shared across queries on one graph.
struct Realizer<'g> {
    g: &'g Graph,
    side: Option<Vec<bool>>,
    complete: bool,
    memo: HashMap<Vec<u32>, bool>,
}

impl<'g> Realizer<'g> {
    fn new(g: &'g Graph) -> Self {
        let side = g.bipartition();
        let complete = side.as_ref().is_some_and(|s| {
            let l = s.iter().filter(|&&x| !x).count();
            g.num_edges() == l * (s.len() - l)
        });
        Self {
            g,
            side,
            complete,
            memo: HashMap::new(),
        }
    }

    fn check(&mut self, a: &[u32]) -> bool {
        if a.iter().sum::<u32>() % 2 == 1 {
            return false;
        }
        if let Some(side) = &self.side {
            let left: u32 = (0..a.len()).filter(|&v| !side[v]).map(|v| a[v]).sum();
            let right: u32 = (0..a.len()).filter(|&v| side[v]).map(|v| a[v]).sum();
            // with every cross edge present, the northwest-corner rule
            // realizes any balanced pair of side degree sequences
            return left == right && (self.complete || bipartite_max_matching(self.g, side, a).0 == left);
        }
        self.search(a.to_vec())
    }

    fn search(&mut self, r: Vec<u32>) -> bool {
        let Some(v) = r.iter().position(|&x| x > 0) else {
            return true;
        };
        let starved = (0..r.len())
            .any(|w| r[w] > self.g.neighbors(w).iter().map(|&u| r[u]).sum::<u32>());
        if starved {
            return false;
        }
        if let Some(&known) = self.memo.get(&r) {
            return known;
        }
        let mut ok = false;
        for &u in self.g.neighbors(v) {
            if r[u] > 0 {
                let mut s = r.clone();
                s[v] -= 1;
                s[u] -= 1;
                if self.search(s) {
                    ok = true;
                    break;
                }
            }
        }
        self.memo.insert(r, ok);
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path};

    fn cap(v: &[u32]) -> CapacityVector {
        CapacityVector::new(v.to_vec()).unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn base_list(b: &BaseSet) -> Vec<Vec<u32>> {
        b.bases().iter().map(|x| x.as_slice().to_vec()).collect()
    }

    #[test]
    fn capacity_validation() {
        assert_eq!(
            CapacityVector::new(vec![1, 0, 2]),
            Err(Error::NonPositiveCapacity { index: 2 })
        );
        assert_eq!(cap(&[1, 2, 3]).candidate_count(), 24);
    }

    #[test]
    fn delta_small_cases() {
        assert_eq!(delta(&cycle(4).unwrap(), &cap(&[1; 4])).unwrap(), 2);
        assert_eq!(delta(&cycle(5).unwrap(), &cap(&[1; 5])).unwrap(), 2);
        assert_eq!(delta(&path(5).unwrap(), &cap(&[2; 5])).unwrap(), 4);
        assert_eq!(delta(&path(3).unwrap(), &cap(&[1; 3])).unwrap(), 1);
        assert_eq!(
            delta(&path(3).unwrap(), &cap(&[1; 4])),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        );
    }

    #[test]
    fn delta_paths_agree() {
        for g in [cycle(6).unwrap(), complete_bipartite(2, 3).unwrap(), path(5).unwrap()] {
            for k in 1..=3 {
                let c = CapacityVector::uniform(g.n(), k).unwrap();
                assert_eq!(delta(&g, &c).unwrap(), delta_search(&g, &c).unwrap());
            }
        }
    }

    #[test]
    fn realizability_small_cases() {
        assert!(is_realizable(&cycle(4).unwrap(), &ev(&[1, 1, 1, 1])).unwrap());
        assert!(!is_realizable(&path(3).unwrap(), &ev(&[1, 0, 1])).unwrap());
        assert!(is_realizable(&path(5).unwrap(), &ev(&[1, 2, 2, 2, 1])).unwrap());
        assert!(!is_realizable(&complete(3).unwrap(), &ev(&[1, 1, 1])).unwrap());
        assert!(is_realizable(&complete(3).unwrap(), &ev(&[2, 2, 2])).unwrap());
        assert!(is_realizable_search(&path(5).unwrap(), &ev(&[1, 2, 2, 2, 1])).unwrap());
        assert!(!is_realizable_search(&path(3).unwrap(), &ev(&[1, 0, 1])).unwrap());
        assert!(is_realizable(&path(3).unwrap(), &ev(&[1, 1])).is_err());
    }

    #[test]
    fn bases_small_cases() {
        let p5 = path(5).unwrap();
        let b = bases(&p5, &cap(&[1; 5])).unwrap();
        assert_eq!(b.delta(), 2);
        assert_eq!(
            base_list(&b),
            vec![vec![0, 1, 1, 1, 1], vec![1, 1, 0, 1, 1], vec![1, 1, 1, 1, 0]]
        );
        let b = bases(&p5, &cap(&[1, 1, 2, 1, 1])).unwrap();
        assert_eq!(
            base_list(&b),
            vec![
                vec![0, 1, 1, 1, 1],
                vec![0, 1, 2, 1, 0],
                vec![1, 1, 0, 1, 1],
                vec![1, 1, 1, 1, 0]
            ]
        );
        let b = bases(&complete(3).unwrap(), &cap(&[1; 3])).unwrap();
        assert_eq!(base_list(&b), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let b = bases(&cycle(4).unwrap(), &cap(&[2; 4])).unwrap();
        assert_eq!(base_list(&b), vec![vec![2, 2, 2, 2]]);
        assert!(b.is_single_uniform(2));
    }

    #[test]
    fn filter_mode_matches_and_respects_cap() {
        let g = path(5).unwrap();
        let c = cap(&[2, 2, 4, 2, 2]);
        assert_eq!(
            bases(&g, &c).unwrap(),
            bases_with(&g, &c, &BaseOptions::filter()).unwrap()
        );
        let opts = BaseOptions {
            mode: BaseMode::Filter,
            max_candidates: 10,
        };
        assert!(matches!(bases_with(&g, &c, &opts), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn closure_of_single_edge_base() {
        let b = BaseSet::from_bases(1, [ev(&[1, 1, 0])]).unwrap();
        let d: Vec<_> = downward_closure(&b).iter().cloned().collect();
        assert_eq!(d, vec![ev(&[0, 0, 0]), ev(&[0, 1, 0]), ev(&[1, 0, 0]), ev(&[1, 1, 0])]);
    }

    #[test]
    fn closure_of_triangle() {
        let b = bases(&complete(3).unwrap(), &cap(&[1; 3])).unwrap();
        let d = downward_closure(&b);
        assert_eq!(d.len(), 7);
        assert!(!d.contains(&ev(&[1, 1, 1])));
        assert!(d.is_downward_closed());
    }

    #[test]
    fn effective_capacity_clips_to_neighbor_sums() {
        let g = path(3).unwrap();
        assert_eq!(effective_capacity(&g, &cap(&[1, 5, 1])).unwrap(), cap(&[1, 2, 1]));
        let g = path(5).unwrap();
        assert_eq!(
            effective_capacity(&g, &cap(&[3, 1, 4, 1, 1])).unwrap(),
            cap(&[1, 1, 2, 1, 1])
        );
    }

    #[test]
    fn base_set_rejects_mixed_totals() {
        assert!(BaseSet::from_bases(1, [ev(&[1, 1, 0]), ev(&[1, 0, 0])]).is_err());
        assert!(BaseSet::from_bases(1, Vec::new()).is_err());
    }
}
