use std::collections::VecDeque;

use super::Digraph;

/// Length of the shortest directed cycle, `None` for acyclic digraphs.
/// A digon is a cycle of length 2.
pub fn girth(g: &Digraph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(u) = queue.pop_front() {
            if best.map_or(false, |b| dist[u] + 1 >= b) {
                break;
            }
            for &v in g.out_neighbors(u) {
                if v == s {
                    best = Some(dist[u] + 1);
                    break 'bfs;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if best == Some(2) {
            break;
        }
    }
    best
}

/// ω(G): the largest vertex set inducing a complete digraph, i.e. the
/// maximum clique of the undirected graph of digons. Bron–Kerbosch with
/// pivoting and a size bound.
pub fn clique_number(g: &Digraph) -> usize {
    let n = g.order();
    let nbrs: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && g.is_digon(u, v)).collect())
        .collect();
    let mut best = 1;
    let mut r = Vec::new();
    let p: Vec<usize> = (0..n).collect();
    expand(&nbrs, &mut r, p, Vec::new(), &mut best);
    best
}

fn expand(nbrs: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, best: &mut usize) {
    if p.is_empty() {
        if x.is_empty() {
            *best = (*best).max(r.len());
        }
        return;
    }
    if r.len() + p.len() <= *best {
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| nbrs[u][v]).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !nbrs[pivot][v]).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        let np = p.iter().copied().filter(|&w| nbrs[v][w]).collect();
        let nx = x.iter().copied().filter(|&w| nbrs[v][w]).collect();
        r.push(v);
        expand(nbrs, r, np, nx, best);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
