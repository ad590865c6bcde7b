//! Exact branch-and-bound searches on [`SmallGraph`]s.

use super::SmallGraph;

/// Greedy colouring of `p` used as the clique bound: vertices in colour order
/// with the running colour count.
fn colour_sort(g: &SmallGraph, p: u128) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.count_ones() as usize);
    let mut bounds = Vec::with_capacity(order.capacity());
    let mut uncoloured = p;
    let mut colour = 0;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !(1u128 << v) & !g.neighbors(v);
            uncoloured &= !(1u128 << v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

fn expand(g: &SmallGraph, current: &mut Vec<usize>, mut p: u128, best: &mut Vec<usize>) {
    let (order, bounds) = colour_sort(g, p);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = p & g.neighbors(v);
        if next == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, current, next, best);
        }
        current.pop();
        p &= !(1u128 << v);
    }
}

/// A maximum clique, sorted.
pub fn maximum_clique(g: &SmallGraph) -> Vec<usize> {
    let mut best = Vec::new();
    if g.vertex_count() > 0 {
        expand(g, &mut Vec::new(), g.all_vertices(), &mut best);
    }
    best.sort_unstable();
    best
}

/// α(G) with a witness independent set.
pub fn independence_number(g: &SmallGraph) -> (usize, Vec<usize>) {
    let w = maximum_clique(&g.complement());
    (w.len(), w)
}

pub fn clique_number(g: &SmallGraph) -> usize {
    maximum_clique(g).len()
}

fn colourable(g: &SmallGraph, k: usize, colours: &mut [usize], coloured: usize, used: usize) -> bool {
    let n = g.vertex_count();
    if coloured == n {
        return true;
    }
    // most saturated uncoloured vertex, ties by degree
    let mut pick = None;
    let mut best = (0usize, 0usize);
    for v in 0..n {
        if colours[v] != usize::MAX {
            continue;
        }
        let mut seen = 0u128;
        let mut nb = g.neighbors(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colours[u] != usize::MAX {
                seen |= 1 << colours[u];
            }
        }
        let key = (seen.count_ones() as usize, g.degree(v));
        if pick.is_none() || key > best {
            pick = Some((v, seen));
            best = key;
        }
    }
    let (v, seen) = pick.expect("an uncoloured vertex remains");
    for c in 0..k.min(used + 1) {
        if seen >> c & 1 == 1 {
            continue;
        }
        colours[v] = c;
        if colourable(g, k, colours, coloured + 1, used.max(c + 1)) {
            return true;
        }
    }
    colours[v] = usize::MAX;
    false
}

/// Whether the graph has a proper colouring with `k` colours.
pub fn is_k_colourable(g: &SmallGraph, k: usize) -> bool {
    let mut colours = vec![usize::MAX; g.vertex_count()];
    colourable(g, k, &mut colours, 0, 0)
}

/// χ(G) by iterative deepening from ω(G).
pub fn chromatic_number(g: &SmallGraph) -> usize {
    if g.vertex_count() == 0 {
        return 0;
    }
    let mut k = clique_number(g).max(1);
    while !is_k_colourable(g, k) {
        k += 1;
    }
    k
}

/// Chromatic index: χ of the line graph.
pub fn edge_chromatic_number(g: &SmallGraph) -> usize {
    chromatic_number(&g.line_graph().expect("line graph fits"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn independence_examples() {
        let (a, w) = independence_number(&SmallGraph::petersen());
        assert_eq!(a, 4);
        assert!(SmallGraph::petersen().is_independent(&w));
        assert_eq!(independence_number(&SmallGraph::pentagram_graph()).0, 2);
        assert_eq!(independence_number(&SmallGraph::complete(5).unwrap()).0, 1);
        assert_eq!(independence_number(&SmallGraph::empty(7).unwrap()).0, 7);
    }

    #[test]
    fn clique_and_chromatic_examples() {
        let p = SmallGraph::petersen();
        assert_eq!((clique_number(&p), chromatic_number(&p)), (2, 3));
        let t = SmallGraph::complete(3).unwrap();
        assert_eq!((clique_number(&t), chromatic_number(&t)), (3, 3));
        let q = SmallGraph::pentagram_graph();
        assert_eq!((clique_number(&q), chromatic_number(&q)), (4, 5));
        assert_eq!(chromatic_number(&SmallGraph::cycle(5).unwrap()), 3);
    }

    #[test]
    fn petersen_needs_four_edge_colours() {
        let p = SmallGraph::petersen();
        assert!(!is_k_colourable(&p.line_graph().unwrap(), 3));
        assert_eq!(edge_chromatic_number(&p), 4);
        // K4 is 3-edge-colourable
        assert_eq!(edge_chromatic_number(&SmallGraph::complete(4).unwrap()), 3);
    }
}
