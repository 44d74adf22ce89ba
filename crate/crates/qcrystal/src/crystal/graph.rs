//! Materialized crystal graphs and connected components.

use std::collections::{BTreeMap, HashMap, VecDeque};

use super::{Category, Crystal, Label};
use crate::alphabet::Weight;
use crate::characters::Poly;
use crate::error::CrystalError;

/// Default bound on the number of vertices explored per component.
pub const VERTEX_CAP: usize = 1_000_000;

/// A finite labeled digraph with an edge `b -i-> c` whenever `f_i(b) = c`.
#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    pub n: usize,
    pub category: Category,
    pub labels: Vec<Label>,
    /// Sorted by payload order.
    pub vertices: Vec<E>,
    pub names: Vec<String>,
    pub weights: Vec<Weight>,
    /// `(src, dst, label)`, sorted.
    pub edges: Vec<(usize, usize, Label)>,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + std::hash::Hash + Ord> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, b: &E) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn contains(&self, b: &E) -> bool {
        self.index.contains_key(b)
    }

    /// `f_label` as a lookup table, `None` where it vanishes.
    pub fn successor(&self, v: usize, label: Label) -> Option<usize> {
        self.out_edges(v).find(|&(_, l)| l == label).map(|(d, _)| d)
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, Label)> + '_ {
        let lo = self.edges.partition_point(|e| e.0 < v);
        self.edges[lo..]
            .iter()
            .take_while(move |e| e.0 == v)
            .map(|e| (e.1, e.2))
    }

    pub fn character(&self) -> Poly {
        let mut p = Poly::zero(self.n);
        for w in &self.weights {
            let exps: Vec<u32> = w.iter().map(|&x| x as u32).collect();
            p.add_term(exps, 1.into());
        }
        p
    }

    /// Edges as rendered triples, handy for comparing against drawings.
    pub fn edge_names(&self) -> Vec<(String, String, String)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .map(|&(s, d, l)| (self.names[s].clone(), self.names[d].clone(), l.to_string()))
            .collect();
        out.sort();
        out
    }

    pub fn from_parts(
        n: usize,
        category: Category,
        labels: Vec<Label>,
        mut items: Vec<(E, String, Weight)>,
        edges: Vec<(E, E, Label)>,
    ) -> CrystalGraph<E> {
        items.sort_by(|a, b| a.0.cmp(&b.0));
        items.dedup_by(|a, b| a.0 == b.0);
        let index: HashMap<E, usize> = items.iter().enumerate().map(|(k, it)| (it.0.clone(), k)).collect();
        let mut es: Vec<(usize, usize, Label)> = edges.into_iter().map(|(s, d, l)| (index[&s], index[&d], l)).collect();
        es.sort();
        es.dedup();
        let mut vertices = Vec::with_capacity(items.len());
        let mut names = Vec::with_capacity(items.len());
        let mut weights = Vec::with_capacity(items.len());
        for (e, s, w) in items {
            vertices.push(e);
            names.push(s);
            weights.push(w);
        }
        CrystalGraph {
            n,
            category,
            labels,
            vertices,
            names,
            weights,
            edges: es,
            index,
        }
    }

    /// Induced subgraph on a set of vertex positions.
    pub fn subgraph(&self, keep: &[usize]) -> CrystalGraph<E> {
        let set: std::collections::HashSet<usize> = keep.iter().copied().collect();
        let items = keep
            .iter()
            .map(|&v| (self.vertices[v].clone(), self.names[v].clone(), self.weights[v].clone()))
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| set.contains(&e.0) && set.contains(&e.1))
            .map(|&(s, d, l)| (self.vertices[s].clone(), self.vertices[d].clone(), l))
            .collect();
        CrystalGraph::from_parts(self.n, self.category, self.labels.clone(), items, edges)
    }

    /// Weakly connected components of this graph, as vertex position lists.
    pub fn component_positions(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(s, d, _) in &self.edges {
            adj[s].push(d);
            adj[d].push(s);
        }
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for v in 0..self.len() {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let mut comp = vec![v];
            let mut k = 0;
            while k < comp.len() {
                for &u in &adj[comp[k]] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                k += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn split(&self) -> Vec<CrystalGraph<E>> {
        self.component_positions().iter().map(|c| self.subgraph(c)).collect()
    }
}

/// Closure of `seeds` under every raising and lowering operator.
pub fn materialize<C: Crystal>(c: &C, seeds: &[C::Elem], cap: usize) -> Result<CrystalGraph<C::Elem>, CrystalError> {
    let labels = c.labels();
    let mut seen: HashMap<C::Elem, ()> = HashMap::new();
    let mut queue: VecDeque<C::Elem> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone(), ()).is_none() {
            queue.push_back(s.clone());
        }
    }
    let mut order = Vec::new();
    let mut edges = Vec::new();
    while let Some(b) = queue.pop_front() {
        for &i in &labels {
            if let Some(x) = c.lower(i, &b) {
                edges.push((b.clone(), x.clone(), i));
                if seen.insert(x.clone(), ()).is_none() {
                    queue.push_back(x);
                }
            }
            if let Some(x) = c.raise(i, &b) {
                if seen.insert(x.clone(), ()).is_none() {
                    queue.push_back(x);
                }
            }
        }
        order.push(b);
        if seen.len() > cap {
            return Err(CrystalError::TooLarge { cap });
        }
    }
    let items = order
        .into_iter()
        .map(|b| {
            let name = c.render(&b);
            let w = c.weight(&b);
            (b, name, w)
        })
        .collect();
    Ok(CrystalGraph::from_parts(c.rank(), c.category(), labels, items, edges))
}

/// All components meeting `seeds`, each sorted internally, ordered by least vertex.
pub fn components<C: Crystal>(c: &C, seeds: &[C::Elem]) -> Result<Vec<CrystalGraph<C::Elem>>, CrystalError> {
    let whole = materialize(c, seeds, VERTEX_CAP)?;
    Ok(whole.split())
}

/// Vertex counts grouped by weight; a cheap isomorphism invariant.
pub fn weight_histogram<E>(g: &CrystalGraph<E>) -> BTreeMap<Weight, usize> {
    let mut h = BTreeMap::new();
    for w in &g.weights {
        *h.entry(w.clone()).or_insert(0) += 1;
    }
    h
}
