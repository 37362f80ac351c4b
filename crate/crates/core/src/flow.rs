//! Augmenting-path max flow used by the bipartite fast paths.

use std::collections::VecDeque;

pub(crate) const INF: u64 = u64::MAX / 4;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    /// Adds `from -> to` with capacity `cap`; returns the arc id.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow routed through arc `id` (the residual of its reverse arc).
    pub(crate) fn flow_on(&self, id: usize) -> u64 {
        self.arcs[id ^ 1].cap
    }

    /// Dinic's algorithm.
    pub(crate) fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let nodes = self.out.len();
        let mut total = 0;
        loop {
            let mut level = vec![usize::MAX; nodes];
            level[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(v) = queue.pop_front() {
                for &id in &self.out[v] {
                    let arc = &self.arcs[id];
                    if arc.cap > 0 && level[arc.to] == usize::MAX {
                        level[arc.to] = level[v] + 1;
                        queue.push_back(arc.to);
                    }
                }
            }
            if level[sink] == usize::MAX {
                return total;
            }
            let mut next = vec![0; nodes];
            loop {
                let pushed = self.push(source, sink, INF, &level, &mut next);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn push(&mut self, v: usize, sink: usize, limit: u64, level: &[usize], next: &mut [usize]) -> u64 {
        if v == sink {
            return limit;
        }
        while next[v] < self.out[v].len() {
            let id = self.out[v][next[v]];
            let Arc { to, cap } = self.arcs[id];
            if cap > 0 && level[to] == level[v] + 1 {
                let pushed = self.push(to, sink, limit.min(cap), level, next);
                if pushed > 0 {
                    self.arcs[id].cap -= pushed;
                    self.arcs[id ^ 1].cap += pushed;
                    return pushed;
                }
            }
            next[v] += 1;
        }
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 3);
        net.add_arc(0, 2, 2);
        let mid = net.add_arc(1, 2, 5);
        net.add_arc(1, 3, 2);
        net.add_arc(2, 3, 3);
        assert_eq!(net.max_flow(0, 3), 5);
        assert!(net.flow_on(mid) <= 1);
    }
}
