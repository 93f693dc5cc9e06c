use super::clique::clique_search;
use super::{dominated_kernel, greedy_dsatur, Budget, ChromaticResult, CliqueResult, CHECK_INTERVAL};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

const UNCOLORED: usize = usize::MAX;

/// DSATUR-ordered backtracking for a `k`-coloring, with a clique precolored
/// `0..|clique|` to break color symmetry.
struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // neighbor_colors[v][c] = how many neighbors of v currently have color c
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    degree: Vec<usize>,
    nodes: u64,
    budget: &'a Budget,
}

impl<'a> KColoring<'a> {
    fn new(g: &'a Graph, k: usize, budget: &'a Budget) -> Self {
        let n = g.vertex_count();
        KColoring {
            g,
            k,
            color: vec![UNCOLORED; n],
            neighbor_colors: vec![vec![0; k]; n],
            saturation: vec![0; n],
            degree: (0..n).map(|v| g.degree(v)).collect(),
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for u in self.g.neighbors(v).ones() {
            let slot = &mut self.neighbor_colors[u][c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = UNCOLORED;
        for u in self.g.neighbors(v).ones() {
            let slot = &mut self.neighbor_colors[u][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.color.len()).filter(|&v| self.color[v] == UNCOLORED).max_by(|&a, &b| {
            self.saturation[a].cmp(&self.saturation[b]).then(self.degree[a].cmp(&self.degree[b])).then(b.cmp(&a))
        })
    }

    fn search(&mut self, used: usize) -> Result<bool, ()> {
        self.nodes += 1;
        if self.nodes % CHECK_INTERVAL == 1 && self.budget.expired() {
            return Err(());
        }
        let Some(v) = self.pick() else { return Ok(true) };
        if self.saturation[v] >= self.k {
            return Ok(false);
        }
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1))? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Finds a proper `k`-coloring extending the clique precoloring, if one exists.
fn k_colorable(g: &Graph, k: usize, clique: &[usize], budget: &Budget) -> Result<Option<Coloring>, ()> {
    let mut state = KColoring::new(g, k, budget);
    for (c, &v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    if state.search(clique.len())? {
        Ok(Some(Coloring { assignment: state.color, color_count: k }))
    } else {
        Ok(None)
    }
}

/// Exact chromatic number.
///
/// Works on the dominated-vertex kernel: a maximum clique gives the lower
/// bound, DSATUR the upper bound, and when they differ the smallest feasible
/// `k` in between is found by exhaustive search.
pub fn chromatic_number(g: &Graph, budget: Budget) -> Result<ChromaticResult> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            coloring: Coloring { assignment: Vec::new(), color_count: 0 },
            lower_bound_used: 0,
            clique: CliqueResult { omega: 0, witness: Vec::new() },
        });
    }
    let kernel = dominated_kernel(g);
    let upper_coloring = greedy_dsatur(&kernel.graph);
    let upper = upper_coloring.color_count;
    let kernel_clique = clique_search(&kernel.graph, &budget).map_err(|e| match e {
        Error::Timeout { lower, .. } => Error::Timeout { lower, upper },
        other => other,
    })?;
    let lower = kernel_clique.len();

    let mut best = upper_coloring;
    for k in lower..upper {
        match k_colorable(&kernel.graph, k, &kernel_clique, &budget) {
            Ok(Some(col)) => {
                best = col;
                break;
            }
            Ok(None) => continue,
            Err(()) => return Err(Error::Timeout { lower: k, upper }),
        }
    }

    let coloring = kernel.lift_coloring(&best, n);
    let witness = kernel.lift_vertices(&kernel_clique);
    debug_assert!(g.verify_coloring(&coloring));
    Ok(ChromaticResult {
        chi: coloring.color_count,
        coloring,
        lower_bound_used: lower,
        clique: CliqueResult { omega: lower, witness },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g, Budget::unlimited()).unwrap();
        assert!(g.verify_coloring(&r.coloring));
        assert!(g.is_clique(&r.clique.witness));
        assert!(r.chi >= r.lower_bound_used);
        r.chi
    }

    #[test]
    fn textbook_values() {
        assert_eq!(chi(&Graph::complete(4)), 4);
        assert_eq!(chi(&Graph::cycle(5)), 3);
        assert_eq!(chi(&Graph::cycle(8)), 2);
        assert_eq!(chi(&Graph::from_edges(3, [])), 1);
        assert_eq!(chi(&Graph::from_edges(0, [])), 0);
    }

    #[test]
    fn bipartite_graphs_need_two() {
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v))));
        assert_eq!(chi(&k33), 2);
        let path = Graph::from_edges(7, (0..6).map(|i| (i, i + 1)));
        assert_eq!(chi(&path), 2);
    }

    #[test]
    fn gap_between_clique_and_chi() {
        // Mycielski graph of C5 (Grötzsch): triangle-free with chi = 4.
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((5 + i, (i + 1) % 5));
            edges.push((5 + i, (i + 4) % 5));
            edges.push((5 + i, 10));
        }
        let g = Graph::from_edges(11, edges);
        let r = chromatic_number(&g, Budget::unlimited()).unwrap();
        assert_eq!(r.clique.omega, 2);
        assert_eq!(r.chi, 4);
        assert!(g.verify_coloring(&r.coloring));
    }

    #[test]
    fn direct_k_colorability() {
        let c5 = Graph::cycle(5);
        let b = Budget::unlimited();
        assert!(k_colorable(&c5, 2, &[0, 1], &b).unwrap().is_none());
        let col = k_colorable(&c5, 3, &[0, 1], &b).unwrap().unwrap();
        assert!(c5.verify_coloring(&col));
    }
}
