//! Exact maximum flow (Dinic) on rational capacities.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: Rational,
}

/// Directed network with a distinguished source and sink.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<Arc>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self> {
        if source >= nodes || sink >= nodes || source == sink {
            return Err(Error::InvalidInput(format!(
                "bad terminals {source} -> {sink} for {nodes} nodes"
            )));
        }
        Ok(FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: Rational) -> Result<()> {
        if from >= self.nodes || to >= self.nodes {
            return Err(Error::InvalidInput(format!("arc {from} -> {to} out of range")));
        }
        if capacity.is_negative() {
            return Err(Error::InvalidInput(format!(
                "arc {from} -> {to} has negative capacity {capacity}"
            )));
        }
        self.arcs.push(Arc { from, to, capacity });
        Ok(())
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Total capacity of arcs leaving the node set marked `true`.
    pub fn cut_capacity(&self, source_side: &[bool]) -> Rational {
        self.arcs
            .iter()
            .filter(|a| source_side[a.from] && !source_side[a.to])
            .map(|a| &a.capacity)
            .sum()
    }
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<Rational>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let mut r = Residual {
            head: Vec::with_capacity(2 * net.arcs.len()),
            cap: Vec::with_capacity(2 * net.arcs.len()),
            adj: vec![Vec::new(); net.nodes],
        };
        for a in net.arcs.iter().filter(|a| !a.capacity.is_zero() && a.from != a.to) {
            r.adj[a.from].push(r.head.len());
            r.head.push(a.to);
            r.cap.push(a.capacity.clone());
            r.adj[a.to].push(r.head.len());
            r.head.push(a.from);
            r.cap.push(Rational::zero());
        }
        r
    }

    fn reachable(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if !seen[v] && self.cap[e].is_positive() {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    fn levels(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let mut level = vec![usize::MAX; self.adj.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if level[v] == usize::MAX && self.cap[e].is_positive() {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        (level[t] != usize::MAX).then_some(level)
    }

    fn push(&mut self, u: usize, t: usize, limit: Rational, level: &[usize], next: &mut [usize]) -> Rational {
        if u == t {
            return limit;
        }
        while next[u] < self.adj[u].len() {
            let e = self.adj[u][next[u]];
            let v = self.head[e];
            if level[v] == level[u] + 1 && self.cap[e].is_positive() {
                let room = if self.cap[e] < limit { self.cap[e].clone() } else { limit.clone() };
                let sent = self.push(v, t, room, level, next);
                if !sent.is_zero() {
                    self.cap[e] -= &sent;
                    self.cap[e ^ 1] += &sent;
                    return sent;
                }
            }
            next[u] += 1;
        }
        Rational::zero()
    }
}

/// Maximum flow value and the source side of a minimum cut: the nodes
/// reachable from the source in the final residual network.
pub fn max_flow(net: &FlowNetwork) -> (Rational, Vec<bool>) {
    let mut r = Residual::new(net);
    let (s, t) = (net.source, net.sink);
    let unbounded: Rational = net
        .arcs
        .iter()
        .filter(|a| a.from == s)
        .map(|a| &a.capacity)
        .sum::<Rational>()
        + Rational::one();
    let mut total = Rational::zero();
    while let Some(level) = r.levels(s, t) {
        let mut next = vec![0; net.nodes];
        loop {
            let sent = r.push(s, t, unbounded.clone(), &level, &mut next);
            if sent.is_zero() {
                break;
            }
            total += sent;
        }
    }
    let side = r.reachable(s);
    (total, side)
}
