use fixedbitset::FixedBitSet;

use crate::graph::{Coloring, Graph};

/// Brélaz's DSATUR: repeatedly color the uncolored vertex with the most
/// distinct neighbor colors (ties: higher degree, then smaller position) with
/// the smallest free color.
pub fn greedy_dsatur(g: &Graph) -> Coloring {
    let n = g.vertex_count();
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut seen: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n + 1); n];
    let mut saturation = vec![0usize; n];
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by(|&a, &b| saturation[a].cmp(&saturation[b]).then(degree[a].cmp(&degree[b])).then(b.cmp(&a)))
            .expect("an uncolored vertex remains");
        let c = seen[v].zeroes().next().expect("a free color below n + 1");
        color[v] = c;
        used = used.max(c + 1);
        for u in g.neighbors(v).ones() {
            if color[u] == usize::MAX && !seen[u].put(c) {
                saturation[u] += 1;
            }
        }
    }
    Coloring { assignment: color, color_count: used }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dsatur_examples() {
        let k5 = greedy_dsatur(&Graph::complete(5));
        assert_eq!(k5.color_count, 5);
        let empty = greedy_dsatur(&Graph::from_edges(10, []));
        assert_eq!(empty.color_count, 1);
        let c5 = Graph::cycle(5);
        let col = greedy_dsatur(&c5);
        assert_eq!(col.color_count, 3);
        assert!(c5.verify_coloring(&col));
        assert_eq!(greedy_dsatur(&Graph::from_edges(0, [])).color_count, 0);
    }

    #[test]
    fn even_cycle_two_colors() {
        let c6 = Graph::cycle(6);
        assert_eq!(greedy_dsatur(&c6).color_count, 2);
    }
}
