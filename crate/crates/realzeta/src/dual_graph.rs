//! Real total dual graph: real components as vertices, real crossings as
//! edges, decorated with nu/N.

use crate::arith::{fmt_q, Q};
use crate::resolution::{Realness, ResolutionModel};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct Vertex {
    pub id: usize,
    pub nu: u64,
    pub n: u64,
    pub strict: bool,
    pub ratio: Q,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DualGraph {
    pub vertices: Vec<Vertex>,
    /// Sorted pairs (a < b).
    pub edges: Vec<(usize, usize)>,
    pub minimal: BTreeSet<usize>,
}

impl DualGraph {
    pub fn from_parts(vertices: Vec<Vertex>, edges: &[(usize, usize)]) -> DualGraph {
        let mut edges: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        edges.sort_unstable();
        let min = vertices.iter().map(|v| v.ratio.clone()).min();
        let minimal = vertices.iter().filter(|v| Some(&v.ratio) == min.as_ref()).map(|v| v.id).collect();
        DualGraph { vertices, edges, minimal }
    }

    pub fn vertex(&self, id: usize) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    fn adjacency(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut adj: BTreeMap<usize, Vec<usize>> = self.vertices.iter().map(|v| (v.id, Vec::new())).collect();
        for &(a, b) in &self.edges {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        adj
    }

    fn component_of(&self, start: usize, within: &BTreeSet<usize>) -> BTreeSet<usize> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if within.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Connected with |E| = |V| - 1.
    pub fn is_tree(&self) -> bool {
        let all: BTreeSet<usize> = self.vertices.iter().map(|v| v.id).collect();
        match all.iter().next() {
            None => self.edges.is_empty(),
            Some(&s) => self.edges.len() + 1 == all.len() && self.component_of(s, &all).len() == all.len(),
        }
    }

    pub fn minimal_connected(&self) -> bool {
        match self.minimal.iter().next() {
            None => true,
            Some(&s) => self.component_of(s, &self.minimal).len() == self.minimal.len(),
        }
    }

    /// Every path leaving the minimal set has strictly increasing ratios.
    /// On failure, returns a path from the minimal set to the offending vertex.
    pub fn monotonicity_check(&self) -> Result<(), Vec<usize>> {
        let adj = self.adjacency();
        let ratio: BTreeMap<usize, &Q> = self.vertices.iter().map(|v| (v.id, &v.ratio)).collect();
        let mut parent: BTreeMap<usize, Option<usize>> = self.minimal.iter().map(|&m| (m, None)).collect();
        let mut queue: VecDeque<usize> = self.minimal.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if parent.contains_key(&w) {
                    continue;
                }
                parent.insert(w, Some(v));
                if ratio[&w] <= ratio[&v] {
                    let mut path = vec![w];
                    let mut cur = Some(v);
                    while let Some(c) = cur {
                        path.push(c);
                        cur = parent[&c];
                    }
                    path.reverse();
                    return Err(path);
                }
                queue.push_back(w);
            }
        }
        Ok(())
    }

    /// If some neighbor of a vertex has a smaller ratio, all others have larger ones.
    /// Returns the first offending vertex.
    pub fn local_ordering_check(&self) -> Result<(), usize> {
        let adj = self.adjacency();
        for v in &self.vertices {
            let nb = &adj[&v.id];
            let smaller = nb.iter().filter(|w| self.vertex(**w).unwrap().ratio < v.ratio).count();
            let equal = nb.iter().filter(|w| self.vertex(**w).unwrap().ratio == v.ratio).count();
            if smaller > 1 || (smaller == 1 && equal > 0) {
                return Err(v.id);
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dual {\n");
        for v in &self.vertices {
            let shape = match (v.strict, self.minimal.contains(&v.id)) {
                (true, false) => "box",
                (true, true) => "box, peripheries=2",
                (false, true) => "doublecircle",
                (false, false) => "circle",
            };
            let _ = writeln!(s, "  E{} [label=\"E{} ({},{})\", shape={}];", v.id, v.id, v.nu, v.n, shape);
        }
        for (a, b) in &self.edges {
            let _ = writeln!(s, "  E{} -- E{};", a, b);
        }
        s.push_str("}\n");
        s
    }

    pub fn ratio_label(&self, id: usize) -> String {
        self.vertex(id).map(|v| fmt_q(&v.ratio)).unwrap_or_default()
    }
}

pub fn build_graph(model: &ResolutionModel) -> DualGraph {
    let vertices: Vec<Vertex> = model
        .components
        .iter()
        .filter(|c| c.is_real())
        .map(|c| Vertex { id: c.id, nu: c.nu, n: c.n, strict: !c.is_exceptional(), ratio: c.ratio() })
        .collect();
    let edges: Vec<(usize, usize)> =
        model.crossings.iter().filter(|x| x.realness == Realness::Real).map(|x| (x.a, x.b)).collect();
    DualGraph::from_parts(vertices, &edges)
}
