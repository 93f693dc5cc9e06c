use crate::error::{Error, Result};
use crate::graph::Graph;

pub const BRUTE_FORCE_LIMIT: usize = 12;

fn extend(adj: &[Vec<bool>], colors: &mut Vec<usize>, k: usize, used: usize) -> bool {
    let v = colors.len();
    if v == adj.len() {
        return true;
    }
    // vertex v may open at most one new color
    for c in 0..k.min(used + 1) {
        if (0..v).any(|u| adj[v][u] && colors[u] == c) {
            continue;
        }
        colors.push(c);
        if extend(adj, colors, k, used.max(c + 1)) {
            return true;
        }
        colors.pop();
    }
    false
}

/// Chromatic number by exhaustive assignment. Oracle for graphs of at most
/// twelve vertices.
pub fn brute_force_chi(g: &Graph) -> Result<usize> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge { vertices: n, limit: BRUTE_FORCE_LIMIT });
    }
    let adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
    Ok((0..=n).find(|&k| extend(&adj, &mut Vec::with_capacity(n), k, 0)).expect("n colors always suffice"))
}
