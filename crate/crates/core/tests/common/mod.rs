//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here works straight from the definitions (edge multisets,
//! supersets, bipartitions) and shares no code with the engine beyond the
//! `Graph` container.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use polymat::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest size of an edge multiset with degrees bounded by `c`.
pub fn oracle_delta(g: &Graph, c: &[u32]) -> u32 {
    fn go(edges: &[(usize, usize)], idx: usize, res: &mut Vec<u32>, memo: &mut HashMap<(usize, Vec<u32>), u32>) -> u32 {
        if idx == edges.len() {
            return 0;
        }
        if let Some(&v) = memo.get(&(idx, res.clone())) {
            return v;
        }
        let (u, w) = edges[idx];
        let top = res[u].min(res[w]);
        let mut best = 0;
        for t in 0..=top {
            res[u] -= t;
            res[w] -= t;
            best = best.max(t + go(edges, idx + 1, res, memo));
            res[u] += t;
            res[w] += t;
        }
        memo.insert((idx, res.clone()), best);
        best
    }
    go(g.edges(), 0, &mut c.to_vec(), &mut HashMap::new())
}

/// Degree vectors of all edge multisets bounded by `c`, keyed by size.
fn degree_vectors(g: &Graph, c: &[u32]) -> BTreeSet<Vec<u32>> {
    fn go(
        edges: &[(usize, usize)],
        idx: usize,
        c: &[u32],
        res: &mut Vec<u32>,
        seen: &mut HashSet<(usize, Vec<u32>)>,
        out: &mut BTreeSet<Vec<u32>>,
    ) {
        if !seen.insert((idx, res.clone())) {
            return;
        }
        if idx == edges.len() {
            out.insert(c.iter().zip(res.iter()).map(|(a, b)| a - b).collect());
            return;
        }
        let (u, w) = edges[idx];
        for t in 0..=res[u].min(res[w]) {
            res[u] -= t;
            res[w] -= t;
            go(edges, idx + 1, c, res, seen, out);
            res[u] += t;
            res[w] += t;
        }
    }
    let mut out = BTreeSet::new();
    go(g.edges(), 0, c, &mut c.to_vec(), &mut HashSet::new(), &mut out);
    out
}

/// `B(G, c)`: degree vectors of maximum-size bounded edge multisets.
pub fn oracle_bases(g: &Graph, c: &[u32]) -> (u32, BTreeSet<Vec<u32>>) {
    let all = degree_vectors(g, c);
    let best = all.iter().map(|v| v.iter().sum::<u32>()).max().unwrap_or(0);
    let bases = all.into_iter().filter(|v| v.iter().sum::<u32>() == best).collect();
    (best / 2, bases)
}

/// Exact degree realizability by enumerating edge multiplicities.
pub fn oracle_realizable(g: &Graph, a: &[u32]) -> bool {
    fn go(edges: &[(usize, usize)], idx: usize, res: &mut Vec<u32>, seen: &mut HashSet<(usize, Vec<u32>)>) -> bool {
        if idx == edges.len() {
            return res.iter().all(|&x| x == 0);
        }
        if !seen.insert((idx, res.clone())) {
            return false;
        }
        let (u, w) = edges[idx];
        for t in 0..=res[u].min(res[w]) {
            res[u] -= t;
            res[w] -= t;
            let ok = go(edges, idx + 1, res, seen);
            res[u] += t;
            res[w] += t;
            if ok {
                return true;
            }
        }
        false
    }
    go(g.edges(), 0, &mut a.to_vec(), &mut HashSet::new())
}

/// Bases by filtering every `a <= c` of total `2δ` through the realizability
/// oracle.
pub fn oracle_bases_by_filter(g: &Graph, c: &[u32], delta: u32) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    let n = c.len();
    let mut a = vec![0u32; n];
    loop {
        if a.iter().sum::<u32>() == 2 * delta && oracle_realizable(g, &a) {
            out.insert(a.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if a[i] < c[i] {
                a[i] += 1;
                break;
            }
            a[i] = 0;
            i += 1;
        }
    }
}

pub fn oracle_rank(bases: &BTreeSet<Vec<u32>>, mask: u32) -> u32 {
    bases
        .iter()
        .map(|b| b.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).sum())
        .max()
        .unwrap_or(0)
}

pub fn oracle_rank_table(bases: &BTreeSet<Vec<u32>>, n: usize) -> Vec<u32> {
    (0..1u32 << n).map(|m| oracle_rank(bases, m)).collect()
}

/// Closed: nonempty and every strict superset has larger rank.
pub fn oracle_closed(ranks: &[u32], n: usize, a: u32) -> bool {
    let full = (1u32 << n) - 1;
    a != 0 && (0..=full).filter(|&b| b & a == a && b != a).all(|b| ranks[b as usize] > ranks[a as usize])
}

/// Inseparable: nonempty and no split into two nonempty disjoint parts with
/// additive rank.
pub fn oracle_inseparable(ranks: &[u32], a: u32) -> bool {
    if a == 0 {
        return false;
    }
    let mut x = (a - 1) & a;
    while x != 0 {
        let y = a & !x;
        if ranks[x as usize] + ranks[y as usize] == ranks[a as usize] {
            return false;
        }
        x = (x - 1) & a;
    }
    true
}

pub fn oracle_closed_inseparable(ranks: &[u32], n: usize) -> Vec<(Vec<usize>, u32)> {
    let mut sets: Vec<u32> = (1..1u32 << n)
        .filter(|&a| oracle_closed(ranks, n, a) && oracle_inseparable(ranks, a))
        .collect();
    sets.sort_by_key(|&a| (a.count_ones(), a));
    sets.into_iter()
        .map(|a| ((0..n).filter(|&i| a >> i & 1 == 1).map(|i| i + 1).collect(), ranks[a as usize]))
        .collect()
}

/// The verdict by trying every candidate `k`.
pub fn oracle_gorenstein(ranks: &[u32], n: usize) -> Option<u32> {
    let family = oracle_closed_inseparable(ranks, n);
    (1..=n as u32 + 1).find(|&k| family.iter().all(|(s, r)| k * r == s.len() as u32 + 1))
}

/// Maximum matching size by trying every edge subset.
pub fn oracle_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 24);
    (0u32..1 << m)
        .filter(|&s| {
            let mut used = 0u64;
            (0..m).filter(|&e| s >> e & 1 == 1).all(|e| {
                let (u, v) = edges[e];
                let bits = 1u64 << u | 1u64 << v;
                let ok = used & bits == 0;
                used |= bits;
                ok
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// A connected graph on `n` vertices: a random tree plus extra edges, each
/// present with probability `p`.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = BTreeSet::new();
    for v in 2..=n {
        let u = rng.gen_range(1..v);
        edges.insert((u, v));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("a spanning tree keeps the graph valid")
}

pub struct Instance {
    pub graph: Graph,
    pub cap: Vec<u32>,
}

/// The fixed pool of random instances used by the oracle comparisons.
pub fn random_instances(seed: u64, count: usize, max_n: usize, max_entry: u32) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            let p = rng.gen_range(0.0..0.7);
            let graph = random_connected_graph(&mut rng, n, p);
            let cap = (0..n).map(|_| rng.gen_range(1..=max_entry)).collect();
            Instance { graph, cap }
        })
        .collect()
}
