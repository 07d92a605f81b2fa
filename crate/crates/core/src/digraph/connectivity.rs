use std::collections::VecDeque;

use super::Digraph;
use crate::error::{Error, Result};

/// Strongly connected components (Tarjan, iterative). Components come out
/// in reverse topological order; each is sorted ascending.
pub fn strong_components(g: &Digraph) -> Vec<Vec<usize>> {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comps = Vec::new();
    let mut next = 0;
    // (vertex, position in its out-list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            let succ = g.out_neighbors(v);
            if *pos < succ.len() {
                let w = succ[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().unwrap();
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                comps.push(comp);
            }
        }
    }
    comps
}

pub fn is_strongly_connected(g: &Digraph) -> bool {
    strong_components(g).len() == 1
}

fn require_strong(g: &Digraph) -> Result<()> {
    if g.order() < 2 || !is_strongly_connected(g) {
        return Err(Error::NotStronglyConnected("connectivity undefined"));
    }
    Ok(())
}

/// Residual network for unit-ish integer capacities; BFS augmenting paths.
struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, u: usize, v: usize, c: i64) {
        self.adj[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(c);
        self.adj[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut flow = 0;
        let mut parent = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            parent.fill(usize::MAX);
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.head[e];
                    if self.cap[e] > 0 && v != s && parent[v] == usize::MAX {
                        parent[v] = e;
                        if v == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(v);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                break;
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let e = parent[v];
                push = push.min(self.cap[e]);
                v = self.head[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = parent[v];
                self.cap[e] -= push;
                self.cap[e ^ 1] += push;
                v = self.head[e ^ 1];
            }
            flow += push;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s -> t` paths, for a
/// non-arc pair `(s, t)`. Vertex `i` splits into `2i` (in) and `2i + 1` (out).
fn local_vertex_connectivity(g: &Digraph, s: usize, t: usize, limit: i64) -> i64 {
    let n = g.order();
    let big = n as i64;
    let mut net = FlowNetwork::new(2 * n);
    for i in 0..n {
        let c = if i == s || i == t { big } else { 1 };
        net.add(2 * i, 2 * i + 1, c);
    }
    for (u, v) in g.arcs() {
        net.add(2 * u + 1, 2 * v, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

fn local_arc_connectivity(g: &Digraph, s: usize, t: usize, limit: i64) -> i64 {
    let mut net = FlowNetwork::new(g.order());
    for (u, v) in g.arcs() {
        net.add(u, v, 1);
    }
    net.max_flow(s, t, limit)
}

/// κ(G). The complete digraph gets `n - 1` by convention; otherwise the
/// minimum local connectivity over ordered non-adjacent pairs.
pub fn vertex_connectivity(g: &Digraph) -> Result<usize> {
    require_strong(g)?;
    let n = g.order();
    let mut best = (n - 1) as i64;
    for s in 0..n {
        for t in 0..n {
            if s != t && !g.has_arc(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    Ok(best as usize)
}

/// κ′(G), from unit-capacity flows between vertex 0 and every other vertex
/// in both directions.
pub fn arc_connectivity(g: &Digraph) -> Result<usize> {
    require_strong(g)?;
    let n = g.order();
    let mut best = (n - 1) as i64;
    for v in 1..n {
        best = best.min(local_arc_connectivity(g, 0, v, best));
        best = best.min(local_arc_connectivity(g, v, 0, best));
    }
    Ok(best as usize)
}
