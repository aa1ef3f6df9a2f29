// Brute-force reference implementations. Nothing here calls the library's
// algorithms; graphs are read only through `has_edge` and `vertex_count`.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cycle_ramsey::graph::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    (0..n).map(|u| (0..n).map(|v| u != v && g.has_edge(u, v)).collect()).collect()
}

pub fn edge_list(g: &Graph) -> Vec<(usize, usize)> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                out.push((u, v));
            }
        }
    }
    out
}

/// Size (in edges) of a maximum matching, by trying every edge subset in
/// a recursion on the lowest unmatched vertex.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(adj: &[Vec<bool>], used: &mut Vec<bool>, from: usize) -> usize {
        let n = adj.len();
        let Some(v) = (from..n).find(|&v| !used[v]) else { return 0 };
        used[v] = true;
        let mut best = go(adj, used, v + 1);
        for u in v + 1..n {
            if adj[v][u] && !used[u] {
                used[u] = true;
                best = best.max(1 + go(adj, used, v + 1));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    let adj = adjacency(g);
    let mut used = vec![false; adj.len()];
    go(&adj, &mut used, 0)
}

/// Every cycle length present, by enumerating simple paths that start at
/// the cycle's smallest vertex.
pub fn brute_cycle_lengths(g: &Graph) -> BTreeSet<usize> {
    fn go(adj: &[Vec<bool>], start: usize, at: usize, on: &mut Vec<bool>, len: usize, out: &mut BTreeSet<usize>) {
        for w in start + 1..adj.len() {
            if adj[at][w] && !on[w] {
                on[w] = true;
                go(adj, start, w, on, len + 1, out);
                on[w] = false;
            }
        }
        if len >= 3 && adj[at][start] {
            out.insert(len);
        }
    }
    let adj = adjacency(g);
    let n = adj.len();
    let mut out = BTreeSet::new();
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        go(&adj, s, s, &mut on, 1, &mut out);
    }
    out
}

pub fn brute_longest_cycle(g: &Graph) -> usize {
    brute_cycle_lengths(g).into_iter().max().unwrap_or(0)
}

/// Component labels, by flood fill restricted to `alive`.
pub fn components(adj: &[Vec<bool>], alive: &[bool]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in 0..n {
                if alive[w] && adj[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Whether `verts` induces a bipartite graph, by BFS 2-coloring.
pub fn is_bipartite(adj: &[Vec<bool>], verts: &[usize]) -> bool {
    let n = adj.len();
    let mut alive = vec![false; n];
    for &v in verts {
        alive[v] = true;
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    for &s in verts {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in 0..n {
                if !alive[w] || !adj[v][w] {
                    continue;
                }
                match side[w] {
                    None => {
                        side[w] = Some(!side[v].unwrap());
                        queue.push_back(w);
                    }
                    Some(x) if x == side[v].unwrap() => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Tutte–Berge deficiency `max_S (odd(G - S) - |S|)`, over all `S`.
pub fn brute_deficiency(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    let mut best = 0i64;
    for mask in 0u32..(1 << n) {
        let alive: Vec<bool> = (0..n).map(|v| mask & (1 << v) == 0).collect();
        let odd = components(&adj, &alive).iter().filter(|c| c.len() % 2 == 1).count() as i64;
        best = best.max(odd - mask.count_ones() as i64);
    }
    best as usize
}

/// Checks that `cycle` is a simple cycle of `g` with at least 3 vertices.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    l >= 3 && distinct.len() == l && (0..l).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % l]))
}
