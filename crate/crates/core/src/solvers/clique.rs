use fixedbitset::FixedBitSet;

use super::{dominated_kernel, Budget, CliqueResult, CHECK_INTERVAL};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Branch-and-bound over bitset candidate sets, bounding each branch with a
/// greedy sequential coloring of the candidates (MCQ / BBMC family).
struct CliqueSearch<'a> {
    adj: Vec<FixedBitSet>,
    current: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: &'a Budget,
}

impl CliqueSearch<'_> {
    /// Candidates of `p` in branching order with their color numbers;
    /// vertices whose color cannot beat the incumbent are left out.
    fn color_sort(&self, p: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let kmin = (self.best.len() + 1).saturating_sub(self.current.len()).max(1);
        let mut uncolored = p.clone();
        let mut verts = Vec::new();
        let mut colors = Vec::new();
        let mut k = 1;
        while !uncolored.is_clear() {
            let mut q = uncolored.clone();
            while let Some(v) = q.minimum() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                if k >= kmin {
                    verts.push(v);
                    colors.push(k);
                }
            }
            k += 1;
        }
        (verts, colors)
    }

    fn expand(&mut self, mut p: FixedBitSet) -> Result<(), ()> {
        self.nodes += 1;
        if self.nodes % CHECK_INTERVAL == 1 && self.budget.expired() {
            return Err(());
        }
        let (verts, colors) = self.color_sort(&p);
        for idx in (0..verts.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return Ok(());
            }
            let v = verts[idx];
            self.current.push(v);
            let mut next = p.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            p.remove(v);
        }
        Ok(())
    }
}

/// Exact maximum clique of `g` without preprocessing.
pub(crate) fn clique_search(g: &Graph, budget: &Budget) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    // descending degree, ties by position
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut rank = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let adj: Vec<FixedBitSet> = order
        .iter()
        .map(|&v| {
            let mut row = FixedBitSet::with_capacity(n);
            for u in g.neighbors(v).ones() {
                row.insert(rank[u]);
            }
            row
        })
        .collect();
    let mut search = CliqueSearch { adj, current: Vec::new(), best: Vec::new(), nodes: 0, budget };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let root_bound = {
        let (_, colors) = search.color_sort(&all);
        colors.last().copied().unwrap_or(0)
    };
    if search.expand(all).is_err() {
        return Err(Error::Timeout { lower: search.best.len(), upper: root_bound });
    }
    let mut witness: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    Ok(witness)
}

/// Exact clique number with a witness.
pub fn max_clique(g: &Graph, budget: Budget) -> Result<CliqueResult> {
    let kernel = dominated_kernel(g);
    let inner = clique_search(&kernel.graph, &budget)?;
    let witness = kernel.lift_vertices(&inner);
    debug_assert!(g.is_clique(&witness));
    Ok(CliqueResult { omega: witness.len(), witness })
}
