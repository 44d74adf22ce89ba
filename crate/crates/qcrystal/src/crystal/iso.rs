//! Weight-preserving isomorphism of crystal graphs.
//!
//! In a crystal graph every vertex has at most one outgoing and one incoming
//! edge per label, so on a connected graph an isomorphism is pinned down by
//! the image of a single vertex. We anchor at a vertex of the rarest weight
//! and try each candidate image; disconnected graphs are matched component by
//! component.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::graph::CrystalGraph;
use super::Label;

struct Tables {
    succ: HashMap<(usize, Label), usize>,
    pred: HashMap<(usize, Label), usize>,
    out: Vec<Vec<(usize, Label)>>,
    inn: Vec<Vec<(usize, Label)>>,
}

fn tables<E>(g: &CrystalGraph<E>) -> Tables {
    let mut t = Tables {
        succ: HashMap::new(),
        pred: HashMap::new(),
        out: vec![Vec::new(); g.vertices.len()],
        inn: vec![Vec::new(); g.vertices.len()],
    };
    for &(s, d, l) in &g.edges {
        t.succ.insert((s, l), d);
        t.pred.insert((d, l), s);
        t.out[s].push((d, l));
        t.inn[d].push((s, l));
    }
    t
}

fn propagate<E>(
    g1: &CrystalGraph<E>,
    t1: &Tables,
    g2: &CrystalGraph<E>,
    t2: &Tables,
    a: usize,
    b: usize,
) -> Option<Vec<usize>> {
    const NONE: usize = usize::MAX;
    let mut map = vec![NONE; g1.vertices.len()];
    let mut used = vec![false; g2.vertices.len()];
    map[a] = b;
    used[b] = true;
    let mut stack = vec![a];
    while let Some(v) = stack.pop() {
        let w = map[v];
        if g1.weights[v] != g2.weights[w] {
            return None;
        }
        if t1.out[v].len() != t2.out[w].len() || t1.inn[v].len() != t2.inn[w].len() {
            return None;
        }
        let steps = t1.out[v]
            .iter()
            .map(|&(u, l)| (u, t2.succ.get(&(w, l))))
            .chain(t1.inn[v].iter().map(|&(u, l)| (u, t2.pred.get(&(w, l)))));
        for (u, image) in steps {
            let x = *image?;
            if map[u] == NONE {
                if used[x] {
                    return None;
                }
                map[u] = x;
                used[x] = true;
                stack.push(u);
            } else if map[u] != x {
                return None;
            }
        }
    }
    if map.contains(&NONE) {
        return None;
    }
    Some(map)
}

/// Isomorphism between two connected graphs, as a position map from `g1` to `g2`.
pub fn isomorphism_connected<E>(g1: &CrystalGraph<E>, g2: &CrystalGraph<E>) -> Option<Vec<usize>> {
    if g1.vertices.len() != g2.vertices.len() || g1.edges.len() != g2.edges.len() {
        return None;
    }
    if g1.vertices.is_empty() {
        return Some(Vec::new());
    }
    let mut count: BTreeMap<&Vec<i64>, usize> = BTreeMap::new();
    for w in &g1.weights {
        *count.entry(w).or_insert(0) += 1;
    }
    let anchor = (0..g1.vertices.len()).min_by_key(|&v| (count[&g1.weights[v]], v))?;
    let t1 = tables(g1);
    let t2 = tables(g2);
    (0..g2.vertices.len())
        .filter(|&c| g2.weights[c] == g1.weights[anchor])
        .find_map(|c| propagate(g1, &t1, g2, &t2, anchor, c))
}

/// Isomorphism between arbitrary finite crystal graphs.
///
/// Greedy matching of components is exact because being isomorphic is an
/// equivalence relation.
pub fn isomorphism<E: Clone + Eq + Hash + Ord>(g1: &CrystalGraph<E>, g2: &CrystalGraph<E>) -> Option<Vec<usize>> {
    if g1.len() != g2.len() || g1.n != g2.n {
        return None;
    }
    let c1 = g1.component_positions();
    let c2 = g2.component_positions();
    if c1.len() != c2.len() {
        return None;
    }
    let s2: Vec<CrystalGraph<E>> = c2.iter().map(|c| g2.subgraph(c)).collect();
    let mut taken = vec![false; c2.len()];
    let mut map = vec![usize::MAX; g1.len()];
    for comp in &c1 {
        let sub = g1.subgraph(comp);
        let hit = (0..c2.len()).find_map(|k| {
            if taken[k] {
                return None;
            }
            isomorphism_connected(&sub, &s2[k]).map(|m| (k, m))
        })?;
        taken[hit.0] = true;
        for (local, &img) in hit.1.iter().enumerate() {
            map[comp[local]] = c2[hit.0][img];
        }
    }
    Some(map)
}

pub fn isomorphic<E: Clone + Eq + Hash + Ord>(g1: &CrystalGraph<E>, g2: &CrystalGraph<E>) -> bool {
    isomorphism(g1, g2).is_some()
}

/// Isomorphism test across graphs with different payload types.
pub fn isomorphic_erased<A: Clone + Eq + Hash + Ord, B: Clone + Eq + Hash + Ord>(
    g1: &CrystalGraph<A>,
    g2: &CrystalGraph<B>,
) -> bool {
    isomorphic(&erase(g1), &erase(g2))
}

/// Replaces payloads by vertex positions.
pub fn erase<E>(g: &CrystalGraph<E>) -> CrystalGraph<usize> {
    let items = (0..g.vertices.len())
        .map(|v| (v, g.names[v].clone(), g.weights[v].clone()))
        .collect();
    let edges = g.edges.clone();
    CrystalGraph::from_parts(g.n, g.category, g.labels.clone(), items, edges)
}
