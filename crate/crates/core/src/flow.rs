//! Dinic max-flow, used to minimise the predimension over supersets.

use std::collections::VecDeque;

pub(crate) struct FlowNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl FlowNetwork {
    #[cfg(test)]
    pub fn new(nodes: usize) -> Self {
        Self::with_arc_capacity(nodes, 0)
    }

    pub fn with_arc_capacity(nodes: usize, arcs: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::with_capacity(4); nodes],
            to: Vec::with_capacity(2 * arcs),
            cap: Vec::with_capacity(2 * arcs),
        }
    }

    /// Arc `u -> v` with capacity `c` plus its residual twin.
    pub fn add_arc(&mut self, u: usize, v: usize, c: i64) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] == usize::MAX {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn push(&mut self, u: usize, t: usize, limit: i64, level: &[usize], it: &mut [usize]) -> i64 {
        if u == t {
            return limit;
        }
        while it[u] < self.head[u].len() {
            let e = self.head[u][it[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && level[v] == level[u] + 1 {
                let got = self.push(v, t, limit.min(self.cap[e]), level, it);
                if got > 0 {
                    self.cap[e] -= got;
                    self.cap[e ^ 1] += got;
                    return got;
                }
            }
            it[u] += 1;
        }
        0
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return flow;
            }
            let mut it = vec![0; self.head.len()];
            loop {
                let f = self.push(s, t, i64::MAX, &level, &mut it);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network; after `max_flow`
    /// this is the inclusion-minimal source side of a minimum cut.
    pub fn residual_reach(&self, s: usize) -> Vec<bool> {
        let level = self.levels(s);
        level.iter().map(|&l| l != usize::MAX).collect()
    }

    /// Nodes from which `t` is reachable in the residual network.
    pub fn residual_coreach(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[t] = true;
        let mut stack = vec![t];
        while let Some(w) = stack.pop() {
            for &e in &self.head[w] {
                let v = self.to[e];
                if self.cap[e ^ 1] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Whether `nodes` lie in one strongly connected component of the
    /// residual network restricted to `nodes`.
    pub fn strongly_connected(&self, nodes: &[bool]) -> bool {
        let Some(start) = nodes.iter().position(|&b| b) else {
            return true;
        };
        let total = nodes.iter().filter(|&&b| b).count();
        let sweep = |forward: bool| {
            let mut seen = vec![false; self.head.len()];
            seen[start] = true;
            let mut stack = vec![start];
            let mut count = 1;
            while let Some(u) = stack.pop() {
                for &e in &self.head[u] {
                    let v = self.to[e];
                    let open = if forward {
                        self.cap[e]
                    } else {
                        self.cap[e ^ 1]
                    } > 0;
                    if open && nodes[v] && !seen[v] {
                        seen[v] = true;
                        count += 1;
                        stack.push(v);
                    }
                }
            }
            count
        };
        sweep(true) == total && sweep(false) == total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_network() {
        // s=0, t=3; two disjoint routes of capacity 2 and 3 with a cross arc.
        let mut net = FlowNetwork::new(4);
        net.add_arc(0, 1, 2);
        net.add_arc(0, 2, 5);
        net.add_arc(1, 3, 4);
        net.add_arc(2, 3, 3);
        net.add_arc(2, 1, 1);
        assert_eq!(net.max_flow(0, 3), 6);
        let reach = net.residual_reach(0);
        assert!(reach[0] && reach[2] && !reach[3]);
    }
}
