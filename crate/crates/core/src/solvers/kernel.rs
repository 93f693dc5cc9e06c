use fixedbitset::FixedBitSet;

use crate::graph::{Coloring, Graph, VertexSet};

/// Result of repeatedly deleting dominated vertices.
///
/// A vertex `v` is dominated by a non-neighbor `u` when `N(v) ⊆ N(u)`. Any
/// clique through `v` stays a clique after swapping `v` for `u`, and `v` can
/// always reuse `u`'s color, so deleting `v` preserves both ω and χ.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub graph: Graph,
    /// Surviving vertex positions in the original graph, increasing.
    pub keep: Vec<usize>,
    /// `(removed, dominator)` in removal order, original positions.
    pub removed: Vec<(usize, usize)>,
}

fn dominated_by(v: &FixedBitSet, alive: &FixedBitSet, u: &FixedBitSet) -> bool {
    v.as_slice().iter().zip(alive.as_slice()).zip(u.as_slice()).all(|((&nv, &a), &nu)| nv & a & !nu == 0)
}

pub fn dominated_kernel(g: &Graph) -> Kernel {
    let n = g.vertex_count();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut removed = Vec::new();
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive.contains(v) {
                continue;
            }
            let row = g.neighbors(v);
            let dominator =
                alive.ones().find(|&u| u != v && !row.contains(u) && dominated_by(row, &alive, g.neighbors(u)));
            if let Some(u) = dominator {
                alive.remove(v);
                removed.push((v, u));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = alive.ones().collect();
    let graph = g.induced(&VertexSet::from_indices(n, keep.iter().copied()));
    Kernel { graph, keep, removed }
}

impl Kernel {
    /// Extends a proper coloring of the kernel to the whole graph.
    pub fn lift_coloring(&self, kernel_coloring: &Coloring, n: usize) -> Coloring {
        let mut assignment = vec![usize::MAX; n];
        for (i, &v) in self.keep.iter().enumerate() {
            assignment[v] = kernel_coloring.assignment[i];
        }
        for &(v, u) in self.removed.iter().rev() {
            assignment[v] = assignment[u];
        }
        Coloring { assignment, color_count: kernel_coloring.color_count }
    }

    pub fn lift_vertices(&self, kernel_vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = kernel_vertices.iter().map(|&i| self.keep[i]).collect();
        out.sort_unstable();
        out
    }
}
