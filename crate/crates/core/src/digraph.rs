//! Finite digraphs: construction, connectivity, tensor products, and the
//! standard matrices attached to them.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::IntMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DigraphError {
    #[error("arc ({0}, {1}) has an endpoint outside 0..{2}")]
    ArcOutOfRange(usize, usize, usize),
}

/// A finite directed graph. Loops are allowed, multiple arcs are not.
///
/// Vertices are `0..vertex_count()`. The arc set is stored sorted, and
/// forward/backward adjacency is precomputed, so all accessors iterate in a
/// deterministic order. Values are immutable after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
    out_offsets: Vec<usize>,
    out_targets: Vec<usize>,
    in_offsets: Vec<usize>,
    in_sources: Vec<usize>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Digraph({} vertices, arcs {:?})", self.vertex_count, self.arcs)
    }
}

impl Digraph {
    /// Builds a digraph from an arc list. Duplicate arcs collapse to one.
    pub fn new(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            if u >= vertex_count || v >= vertex_count {
                return Err(DigraphError::ArcOutOfRange(u, v, vertex_count));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut out_offsets = vec![0usize; vertex_count + 1];
        let mut in_offsets = vec![0usize; vertex_count + 1];
        for &(u, v) in &arcs {
            out_offsets[u + 1] += 1;
            in_offsets[v + 1] += 1;
        }
        for i in 0..vertex_count {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let mut out_targets = vec![0usize; arcs.len()];
        let mut in_sources = vec![0usize; arcs.len()];
        let mut out_fill = out_offsets.clone();
        let mut in_fill = in_offsets.clone();
        for &(u, v) in &arcs {
            out_targets[out_fill[u]] = v;
            out_fill[u] += 1;
        }
        // arcs are sorted by (u, v), so each in-list ends up sorted as well
        for &(u, v) in &arcs {
            in_sources[in_fill[v]] = u;
            in_fill[v] += 1;
        }
        Ok(Digraph {
            vertex_count,
            arcs,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        })
    }

    /// The directed cycle `C_n`: vertices `0..n`, arcs `i -> i+1 (mod n)`.
    /// `C_1` is a single vertex with a loop.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1, "a directed cycle needs at least one vertex");
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// The directed path `P_n` on `n` vertices (`n - 1` arcs): the cycle
    /// `C_n` with the closing arc removed.
    pub fn path_graph(n: usize) -> Self {
        assert!(n >= 1, "a directed path needs at least one vertex");
        Digraph::new(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    /// The directed path with exactly `len` arcs, i.e. `len + 1` vertices.
    /// Convenient when a path is indexed by its length rather than its
    /// vertex count.
    pub fn path_of_length(len: usize) -> Self {
        Digraph::path_graph(len + 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in sorted order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    /// Targets of arcs leaving `u`, sorted.
    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.out_targets[self.out_offsets[u]..self.out_offsets[u + 1]]
    }

    /// Sources of arcs entering `v`, sorted.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_offsets[u + 1] - self.out_offsets[u]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    /// Vertices with in-degree 0. A loop at `v` counts towards both degrees,
    /// so a looped vertex is never a source.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.in_degree(v) == 0).collect()
    }

    /// Vertices with out-degree 0.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Tensor (categorical) product. Vertex `(u, v)` of the product is
    /// encoded row-major as `u * g2.vertex_count() + v`, and
    /// `((u1, v1), (u2, v2))` is an arc exactly when `(u1, u2)` and
    /// `(v1, v2)` both are.
    pub fn tensor_product(&self, other: &Digraph) -> Digraph {
        let n2 = other.vertex_count;
        let mut arcs = Vec::with_capacity(self.arcs.len() * other.arcs.len());
        for &(u1, u2) in &self.arcs {
            for &(v1, v2) in &other.arcs {
                arcs.push((u1 * n2 + v1, u2 * n2 + v2));
            }
        }
        Digraph::new(self.vertex_count * n2, arcs).unwrap()
    }

    /// Strongly connected components in Tarjan order; each component is a
    /// sorted vertex list.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        // Iterative Tarjan; recursion would overflow on long paths.
        const UNSEEN: usize = usize::MAX;
        let n = self.vertex_count;
        let mut index = vec![UNSEEN; n];
        let mut lowlink = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next_index = 0usize;
        let mut components = Vec::new();
        let mut call_stack: Vec<(usize, usize)> = Vec::new();

        for root in 0..n {
            if index[root] != UNSEEN {
                continue;
            }
            call_stack.push((root, 0));
            index[root] = next_index;
            lowlink[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;

            while let Some(&mut (v, ref mut child)) = call_stack.last_mut() {
                let outs = self.out_neighbors(v);
                if *child < outs.len() {
                    let w = outs[*child];
                    *child += 1;
                    if index[w] == UNSEEN {
                        index[w] = next_index;
                        lowlink[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call_stack.push((w, 0));
                    } else if on_stack[w] {
                        lowlink[v] = lowlink[v].min(index[w]);
                    }
                } else {
                    call_stack.pop();
                    if let Some(&(parent, _)) = call_stack.last() {
                        lowlink[parent] = lowlink[parent].min(lowlink[v]);
                    }
                    if lowlink[v] == index[v] {
                        let mut component = Vec::new();
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            component.push(w);
                            if w == v {
                                break;
                            }
                        }
                        component.sort_unstable();
                        components.push(component);
                    }
                }
            }
        }
        components
    }

    /// True when every ordered pair of vertices is joined by a directed walk.
    pub fn is_strong(&self) -> bool {
        self.vertex_count >= 1 && self.strongly_connected_components().len() == 1
    }

    /// True when for every pair `u, v` there is a walk `u -> v` or `v -> u`.
    /// Equivalent to the condensation having a Hamiltonian path.
    pub fn is_unilateral(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let sccs = self.strongly_connected_components();
        let k = sccs.len();
        let mut component_of = vec![0usize; self.vertex_count];
        for (i, scc) in sccs.iter().enumerate() {
            for &v in scc {
                component_of[v] = i;
            }
        }
        let mut cond_arcs = vec![false; k * k];
        let mut in_degree = vec![0usize; k];
        for &(u, v) in &self.arcs {
            let (cu, cv) = (component_of[u], component_of[v]);
            if cu != cv && !cond_arcs[cu * k + cv] {
                cond_arcs[cu * k + cv] = true;
                in_degree[cv] += 1;
            }
        }
        // A DAG has a Hamiltonian path iff any topological order has an arc
        // between each consecutive pair.
        let mut queue: VecDeque<usize> = (0..k).filter(|&c| in_degree[c] == 0).collect();
        let mut order = Vec::with_capacity(k);
        while let Some(c) = queue.pop_front() {
            order.push(c);
            for d in 0..k {
                if cond_arcs[c * k + d] {
                    in_degree[d] -= 1;
                    if in_degree[d] == 0 {
                        queue.push_back(d);
                    }
                }
            }
        }
        order.windows(2).all(|w| cond_arcs[w[0] * k + w[1]])
    }

    /// True when the underlying undirected graph is connected.
    pub fn is_weak(&self) -> bool {
        self.vertex_count >= 1 && self.weak_components().len() == 1
    }

    /// Weakly connected components as sorted vertex lists, ordered by their
    /// smallest vertex.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count;
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut component = vec![root];
            while let Some(v) = queue.pop_front() {
                for &w in self.out_neighbors(v).iter().chain(self.in_neighbors(v)) {
                    if !seen[w] {
                        seen[w] = true;
                        component.push(w);
                        queue.push_back(w);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    /// 0/1 adjacency matrix: `A[u][v] = 1` iff `(u, v)` is an arc.
    pub fn adjacency_matrix(&self) -> IntMatrix {
        let n = self.vertex_count;
        let mut m = IntMatrix::zeros(n, n);
        for &(u, v) in &self.arcs {
            m.set(u, v, BigInt::from(1));
        }
        m
    }

    /// Vertex-by-arc incidence matrix: one column per arc, `+1` at the head
    /// and `-1` at the tail. A loop contributes a zero column.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let n = self.vertex_count;
        let mut m = IntMatrix::zeros(n, self.arcs.len());
        for (j, &(u, v)) in self.arcs.iter().enumerate() {
            if u != v {
                m.set(v, j, BigInt::from(1));
                m.set(u, j, BigInt::from(-1));
            }
        }
        m
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph::new(self.vertex_count, self.arcs.iter().map(|&(u, v)| (v, u))).unwrap()
    }

    /// Induced subdigraph on `vertices` (which must be sorted and distinct);
    /// vertex `vertices[i]` becomes vertex `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Digraph {
        let mut position = vec![usize::MAX; self.vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| position[u] != usize::MAX && position[v] != usize::MAX)
            .map(|&(u, v)| (position[u], position[v]));
        Digraph::new(vertices.len(), arcs).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_and_path_shapes() {
        let c3 = Digraph::cycle(3);
        assert_eq!(c3.arcs(), &[(0, 1), (1, 2), (2, 0)]);
        let c1 = Digraph::cycle(1);
        assert_eq!(c1.arcs(), &[(0, 0)]);
        let p3 = Digraph::path_graph(3);
        assert_eq!(p3.arcs(), &[(0, 1), (1, 2)]);
        assert_eq!(Digraph::path_of_length(2), p3);
        assert_eq!(Digraph::path_of_length(0).vertex_count(), 1);
    }

    #[test]
    fn arc_bounds_checked() {
        assert!(matches!(
            Digraph::new(2, [(0, 5)]),
            Err(DigraphError::ArcOutOfRange(0, 5, 2))
        ));
    }

    #[test]
    fn duplicate_arcs_collapse() {
        let g = Digraph::new(2, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn connectivity_of_cycle_path_and_isolated_pair() {
        let c5 = Digraph::cycle(5);
        assert!(c5.is_strong() && c5.is_unilateral() && c5.is_weak());

        let p3 = Digraph::path_graph(3);
        assert!(!p3.is_strong());
        assert!(p3.is_unilateral());
        assert!(p3.is_weak());

        let isolated = Digraph::new(2, []).unwrap();
        assert!(!isolated.is_strong());
        assert!(!isolated.is_unilateral());
        assert!(!isolated.is_weak());
    }

    #[test]
    fn unilateral_needs_a_chain_of_components() {
        // 0 -> 1 <- 2 is weak but not unilateral: no walk joins 0 and 2.
        let g = Digraph::new(3, [(0, 1), (2, 1)]).unwrap();
        assert!(g.is_weak());
        assert!(!g.is_unilateral());
    }

    #[test]
    fn tensor_c2_c3_is_c6() {
        let product = Digraph::cycle(2).tensor_product(&Digraph::cycle(3));
        assert_eq!(product.vertex_count(), 6);
        assert_eq!(product.arc_count(), 6);
        assert!((0..6).all(|v| product.out_degree(v) == 1));
        assert!(product.is_strong());
    }

    #[test]
    fn tensor_c2_c2_splits() {
        let product = Digraph::cycle(2).tensor_product(&Digraph::cycle(2));
        assert_eq!(product.weak_components().len(), 2);
    }

    #[test]
    fn tensor_with_arcless_vertex_is_arcless() {
        let single = Digraph::new(1, []).unwrap();
        let product = Digraph::cycle(4).tensor_product(&single);
        assert_eq!(product.vertex_count(), 4);
        assert_eq!(product.arc_count(), 0);
    }

    #[test]
    fn sources_and_sinks() {
        let p3 = Digraph::path_graph(3);
        assert_eq!(p3.sources(), vec![0]);
        assert_eq!(p3.sinks(), vec![2]);

        let c4 = Digraph::cycle(4);
        assert!(c4.sources().is_empty());
        assert!(c4.sinks().is_empty());

        // A loop gives its vertex both an in- and an out-degree.
        let looped = Digraph::cycle(1);
        assert!(looped.sources().is_empty());
        assert!(looped.sinks().is_empty());
    }

    #[test]
    fn adjacency_of_c3_is_cycle_permutation() {
        let a = Digraph::cycle(3).adjacency_matrix();
        for u in 0..3 {
            for v in 0..3 {
                let expected = i64::from(v == (u + 1) % 3);
                assert_eq!(a.get(u, v), &BigInt::from(expected));
            }
        }
    }

    #[test]
    fn incidence_of_empty_graph_has_no_columns() {
        let g = Digraph::new(3, []).unwrap();
        let d = g.incidence_matrix();
        assert_eq!((d.rows(), d.cols()), (3, 0));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Digraph::new(4, [(0, 2), (2, 3), (1, 3)]).unwrap();
        let h = g.induced_subgraph(&[0, 2, 3]);
        assert_eq!(h.arcs(), &[(0, 1), (1, 2)]);
    }
}
