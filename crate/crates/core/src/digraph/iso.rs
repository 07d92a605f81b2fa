use super::Digraph;

/// Relabels `g` so that vertex `i` becomes `perm[i]`.
pub fn permute(g: &Digraph, perm: &[usize]) -> Digraph {
    assert_eq!(perm.len(), g.order(), "permutation length");
    Digraph::from_arcs(g.order(), g.arcs().map(|(u, v)| (perm[u], perm[v])))
        .expect("a permutation of a valid digraph is valid")
}

/// Isomorphism by backtracking over vertex bijections, restricted to
/// vertices with matching (out, in) degree pairs. Meant for small orders.
pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> bool {
    if g.order() != h.order() || g.arc_count() != h.arc_count() {
        return false;
    }
    let (pg, ph) = (g.degree_profile(), h.degree_profile());
    let key = |p: &super::DegreeProfile, i: usize| (p.out_degrees[i], p.in_degrees[i]);
    let mut kg: Vec<_> = (0..g.order()).map(|i| key(&pg, i)).collect();
    let mut kh: Vec<_> = (0..h.order()).map(|i| key(&ph, i)).collect();
    let (g_keys, h_keys) = (kg.clone(), kh.clone());
    kg.sort_unstable();
    kh.sort_unstable();
    if kg != kh {
        return false;
    }

    let n = g.order();
    // most constrained first: vertices of g ordered by degree, ties by index
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g_keys[v].0 + g_keys[v].1));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &order, &g_keys, &h_keys, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Digraph,
    h: &Digraph,
    order: &[usize],
    g_keys: &[(usize, usize)],
    h_keys: &[(usize, usize)],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.order() {
        if used[w] || g_keys[v] != h_keys[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let mu = map[u];
            g.has_arc(u, v) == h.has_arc(mu, w) && g.has_arc(v, u) == h.has_arc(w, mu)
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, order, g_keys, h_keys, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
