//! Simple undirected graphs used as dual graphs of exceptional curves.

use petgraph::graph::UnGraph;
use std::collections::BTreeSet;
use std::fmt::Write as _;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DualGraph {
    pub nodes: Vec<String>,
    /// Edges `(i, j)` with `i < j`.
    pub edges: BTreeSet<(usize, usize)>,
}

impl DualGraph {
    pub fn new(nodes: Vec<String>) -> Self {
        Self {
            nodes,
            edges: BTreeSet::new(),
        }
    }

    /// Adds the edge `{i, j}`; self-loops are ignored.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i != j {
            self.edges.insert((i.min(j), i.max(j)));
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours(v).len()
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Path graph on `n` nodes named `1..=n`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new((1..=n).map(|i| i.to_string()).collect());
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Relabels the graph with the given node names (in node order).
    pub fn renamed(&self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.nodes.len());
        Self {
            nodes: names,
            edges: self.edges.clone(),
        }
    }

    /// Isomorphism of the underlying unlabeled graphs.
    pub fn is_isomorphic(&self, other: &Self) -> bool {
        petgraph::algo::is_isomorphic(&self.to_petgraph(), &other.to_petgraph())
    }

    fn to_petgraph(&self) -> UnGraph<(), ()> {
        let mut g = UnGraph::new_undirected();
        let idx: Vec<_> = self.nodes.iter().map(|_| g.add_node(())).collect();
        for &(a, b) in &self.edges {
            g.add_edge(idx[a], idx[b], ());
        }
        g
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph dual {\n");
        for n in &self.nodes {
            let _ = writeln!(s, "  \"{n}\";");
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  \"{}\" -- \"{}\";", self.nodes[a], self.nodes[b]);
        }
        s.push_str("}\n");
        s
    }
}
