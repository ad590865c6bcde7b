//! Backtracking vertex maps: automorphisms and isomorphisms of small graphs.

use super::SmallGraph;

struct Matcher<'a> {
    g: &'a SmallGraph,
    h: &'a SmallGraph,
    map: Vec<usize>,
    used: u128,
}

impl Matcher<'_> {
    fn consistent(&self, v: usize, w: usize, upto: usize) -> bool {
        (0..upto).all(|u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], w))
    }

    /// Extends the map over vertices `v..n`; `visit` returns `false` to stop.
    fn search(&mut self, v: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.g.vertex_count();
        if v == n {
            return visit(&self.map);
        }
        if self.map[v] != usize::MAX {
            if self.consistent(v, self.map[v], v) {
                return self.search(v + 1, visit);
            }
            return true;
        }
        for w in 0..n {
            if self.used >> w & 1 == 1 || self.g.degree(v) != self.h.degree(w) {
                continue;
            }
            if !self.consistent(v, w, v) {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            let go_on = self.search(v + 1, visit);
            self.used &= !(1u128 << w);
            self.map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
}

fn run(g: &SmallGraph, h: &SmallGraph, fixed: &[(usize, usize)], visit: &mut dyn FnMut(&[usize]) -> bool) {
    if g.vertex_count() != h.vertex_count() {
        return;
    }
    let n = g.vertex_count();
    let mut m = Matcher {
        g,
        h,
        map: vec![usize::MAX; n],
        used: 0,
    };
    for &(a, b) in fixed {
        if m.used >> b & 1 == 1 && m.map[a] != b {
            return;
        }
        if m.map[a] != usize::MAX && m.map[a] != b {
            return;
        }
        m.map[a] = b;
        m.used |= 1 << b;
    }
    m.search(0, visit);
}

/// Some isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &SmallGraph, h: &SmallGraph) -> Option<Vec<usize>> {
    if g.edge_count() != h.edge_count() {
        return None;
    }
    let mut dg: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.vertex_count()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    let mut found = None;
    run(g, h, &[], &mut |m| {
        found = Some(m.to_vec());
        false
    });
    found
}

pub fn is_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Every automorphism, by exhaustive backtracking.
pub fn automorphisms(g: &SmallGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    run(g, g, &[], &mut |m| {
        out.push(m.to_vec());
        true
    });
    out
}

fn maps_arc(g: &SmallGraph, from: (usize, usize), to: (usize, usize)) -> bool {
    let mut hit = false;
    run(g, g, &[(from.0, to.0), (from.1, to.1)], &mut |_| {
        hit = true;
        false
    });
    hit
}

/// Every edge is the image of the first edge under some automorphism.
pub fn is_edge_transitive(g: &SmallGraph) -> bool {
    let edges = g.edges();
    let Some(&first) = edges.first() else {
        return true;
    };
    edges
        .iter()
        .all(|&(u, v)| maps_arc(g, first, (u, v)) || maps_arc(g, first, (v, u)))
}

pub fn is_vertex_transitive(g: &SmallGraph) -> bool {
    (0..g.vertex_count()).all(|v| {
        let mut hit = false;
        run(g, g, &[(0, v)], &mut |_| {
            hit = true;
            false
        });
        hit
    })
}
