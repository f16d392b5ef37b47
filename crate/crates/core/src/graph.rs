//! Simple undirected graphs with bitset adjacency.
//!
//! Vertices are `0..n` internally. The text formats in [`crate::io`] use
//! labels `1..=n`; conversion happens only at that boundary.

use crate::bitset::VertexSet;

/// Undirected simple graph. Adjacency rows are bitsets, so `has_edge` is O(1).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced subgraph together with the original vertex of every new vertex.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    /// `labels[i]` is the vertex of the parent graph that became vertex `i`.
    pub labels: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| VertexSet::new(n)).collect(),
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    /// Builds a graph from 0-based edges. Panics on loops or out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Inserts edge `uv`. Returns false if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        fresh
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.adj[u].remove(v);
        self.adj[v].remove(u);
        had
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighbourhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut c = row.complement();
                c.remove(v);
                c
            })
            .collect::<Vec<_>>();
        debug_assert_eq!(adj.len(), n);
        Graph { adj }
    }

    /// Subgraph induced by `vertices`, relabelled in ascending order of the
    /// original labels. Panics on an out-of-range member.
    pub fn induced(&self, vertices: &VertexSet) -> Induced {
        let labels = vertices.to_vec();
        assert!(
            labels.last().is_none_or(|&v| v < self.n()),
            "vertex outside graph"
        );
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::new(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for w in self.adj[v].intersection(vertices).iter() {
                let j = pos[w];
                if j > i {
                    g.add_edge(i, j);
                }
            }
        }
        Induced { graph: g, labels }
    }

    /// Subgraph induced by a list of vertices (order and duplicates ignored).
    pub fn induced_by(&self, vertices: &[usize]) -> Induced {
        self.induced(&VertexSet::from_iter_in(self.n(), vertices.iter().copied()))
    }

    /// Connected components, each sorted, ordered by minimum element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertices())
    }

    /// Components of the subgraph induced by `within`, as vertex sets of `self`.
    pub fn components_within(&self, within: &VertexSet) -> Vec<Vec<usize>> {
        let mut left = within.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::new(self.n());
            comp.insert(start);
            let mut frontier = comp.clone();
            left.remove(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.n());
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(&left);
                left.difference_with(&next);
                comp.union_with(&next);
                frontier = next;
            }
            out.push(comp.to_vec());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// u and v are twins iff N(u) \ {v} = N(v) \ {u}.
    pub fn are_twins(&self, u: usize, v: usize) -> bool {
        let mut a = self.adj[u].clone();
        a.remove(v);
        let mut b = self.adj[v].clone();
        b.remove(u);
        a == b
    }

    /// Partition of the vertex set into twin classes.
    pub fn twin_classes(&self) -> TwinPartition {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'outer: for v in 0..self.n() {
            // Twinness is an equivalence relation, so comparing with one
            // representative per class is enough.
            for class in classes.iter_mut() {
                if self.are_twins(class[0], v) {
                    class.push(v);
                    continue 'outer;
                }
            }
            classes.push(vec![v]);
        }
        TwinPartition { classes }
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Twin classes of a graph, in order of their minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    /// Neighbourhood diversity.
    pub fn diversity(&self) -> usize {
        self.classes.len()
    }
}
