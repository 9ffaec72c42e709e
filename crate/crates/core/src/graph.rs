//! Small labeled simple graphs stored as per-vertex bit rows.
//!
//! Isomorphism-level questions (canonical codes, induced-subgraph search)
//! live in [`crate::canon`] and [`crate::induced`]; everything here is
//! label-exact.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Degrees;

/// Largest vertex count; one row must fit a `u32`.
pub const MAX_VERTICES: usize = 31;

/// Simple graph on at most [`MAX_VERTICES`] vertices. Row `v` has bit `u`
/// set iff `uv` is an edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

#[inline]
pub(crate) fn bit(v: usize) -> u32 {
    1u32 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bits of a row, lowest first.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::resource(format!(
            "graph on {n} vertices exceeds the {MAX_VERTICES}-vertex cap"
        )))
    } else {
        Ok(())
    }
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(SmallGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = low_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("C{n} is not a simple cycle")));
        }
        let mut g = Self::path(n)?;
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    /// Complete bipartite graph, parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Self::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::domain(format!("invalid edge {u}-{v} on {n} vertices")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, checking symmetry and irreflexivity.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        for (v, &row) in rows.iter().enumerate() {
            if row & !low_mask(n) != 0 || row & bit(v) != 0 {
                return Err(Error::domain(format!("row {v} is out of range or has a loop")));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in bits(g.adj[u]) {
                if g.adj[v] & bit(u) == 0 {
                    return Err(Error::domain(format!("adjacency not symmetric at {u},{v}")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn row(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Sorted degree list; zeros from isolated vertices are kept as a count.
    pub fn degree_sequence(&self) -> Degrees {
        Degrees::from_unsorted((0..self.order()).map(|v| self.degree(v) as u32).collect())
    }

    /// A vertex adjacent to every other vertex (`K1` counts).
    pub fn has_dominating_vertex(&self) -> bool {
        let n = self.order();
        n > 0 && (0..n).any(|v| self.degree(v) == n - 1)
    }

    pub fn is_regular_of(&self, k: usize) -> bool {
        (0..self.order()).all(|v| self.degree(v) == k)
    }

    pub fn isolated_count(&self) -> usize {
        self.rows().iter().filter(|&&r| r == 0).count()
    }

    pub fn complement(&self) -> SmallGraph {
        let n = self.order();
        let all = low_mask(n);
        let mut g = *self;
        for v in 0..n {
            g.adj[v] = all & !self.adj[v] & !bit(v);
        }
        g
    }

    /// `G + H`; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let a = self.order();
        let mut g = Self::empty(a + other.order())?;
        g.adj[..a].copy_from_slice(self.rows());
        for (v, &row) in other.rows().iter().enumerate() {
            g.adj[a + v] = row << a;
        }
        Ok(g)
    }

    /// `G ∨ H`: disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let a = self.order();
        let b = other.order();
        let mut g = self.disjoint_union(other)?;
        let left = low_mask(a);
        let right = low_mask(a + b) & !left;
        for v in 0..a {
            g.adj[v] |= right;
        }
        for v in a..a + b {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `K1 ∨ G`; the new apex is vertex 0.
    pub fn cone(&self) -> Result<SmallGraph> {
        SmallGraph::complete(1)?.join(self)
    }

    /// `a` disjoint copies of `self`.
    pub fn copies(&self, a: usize) -> Result<SmallGraph> {
        let mut g = SmallGraph::empty(0)?;
        for _ in 0..a {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// Replaces edge `uv` by the path `u - w - v` through a new vertex `w`
    /// (the last vertex).
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<SmallGraph> {
        if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
            return Err(Error::domain(format!("{u}-{v} is not an edge")));
        }
        let n = self.order();
        check_order(n + 1)?;
        let mut g = *self;
        g.n += 1;
        g.remove_edge(u, v);
        g.add_edge(u, n);
        g.add_edge(n, v);
        Ok(g)
    }

    /// Adds a new last vertex adjacent to every vertex except those in
    /// `skip`.
    pub fn add_apex_except(&self, skip: &[usize]) -> Result<SmallGraph> {
        let n = self.order();
        check_order(n + 1)?;
        let mut g = *self;
        g.n += 1;
        for v in 0..n {
            if !skip.contains(&v) {
                g.add_edge(n, v);
            }
        }
        Ok(g)
    }

    pub fn delete_vertex(&self, v: usize) -> Result<SmallGraph> {
        if v >= self.order() {
            return Err(Error::domain(format!("no vertex {v}")));
        }
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Subgraph induced on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SmallGraph {
        let k = vertices.len();
        let mut g = SmallGraph {
            n: k as u8,
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn relabel(&self, order: &[usize]) -> SmallGraph {
        debug_assert_eq!(order.len(), self.order());
        self.induced(order)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.order(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_constructions() {
        let k4 = SmallGraph::complete(4).unwrap();
        assert_eq!(k4.edge_count(), 6);
        let c5 = SmallGraph::cycle(5).unwrap();
        assert!(c5.is_regular_of(2));
        let p4 = SmallGraph::path(4).unwrap();
        assert_eq!(p4.degree_sequence().terms(), vec![2, 2, 1, 1]);
        assert!(SmallGraph::cycle(2).is_err());
        assert!(matches!(SmallGraph::empty(32), Err(Error::Resource(_))));
    }

    #[test]
    fn cone_of_path() {
        let g = SmallGraph::path(4).unwrap().cone().unwrap();
        assert_eq!(g.degree_sequence().terms(), vec![4, 3, 3, 2, 2]);
        assert!(g.has_dominating_vertex());
    }

    #[test]
    fn subdivided_k6() {
        let g = SmallGraph::complete(6).unwrap().subdivide_edge(0, 1).unwrap();
        assert_eq!(g.degree_sequence().terms(), vec![5, 5, 5, 5, 5, 5, 2]);
        let e = SmallGraph::empty(3).unwrap();
        assert!(matches!(e.subdivide_edge(0, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn complement_is_involution() {
        let g = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().edge_count(), 10 - 3);
    }

    #[test]
    fn join_and_union() {
        let two_k2 = SmallGraph::complete(2).unwrap().copies(2).unwrap();
        assert_eq!(two_k2.degree_sequence().terms(), vec![1, 1, 1, 1]);
        let g = SmallGraph::complete(1).unwrap().join(&two_k2).unwrap();
        assert_eq!(g.degree_sequence().terms(), vec![4, 2, 2, 2, 2]);
        assert_eq!(g.components().len(), 1);
        assert_eq!(two_k2.components().len(), 2);
    }

    #[test]
    fn isolated_vertices_and_regularity() {
        let g = SmallGraph::empty(2).unwrap();
        assert!(g.is_regular_of(0));
        assert!(!g.has_dominating_vertex());
        assert_eq!(g.degree_sequence().zeros, 2);
        assert!(SmallGraph::complete(1).unwrap().has_dominating_vertex());
    }

    #[test]
    fn delete_and_induce() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let p4 = c5.delete_vertex(4).unwrap();
        assert_eq!(p4.edge_count(), 3);
        assert!(p4.is_connected());
        assert!(SmallGraph::from_rows(&[0b10, 0b00]).is_err());
    }
}
