//! Triangle listing and small-clique detection.

use crate::graph::{Graph, Vertex};

/// Every triangle of a graph, each as a sorted triple, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TriangleList {
    triangles: Vec<[Vertex; 3]>,
}

impl TriangleList {
    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, [Vertex; 3]> {
        self.triangles.iter()
    }

    pub fn as_slice(&self) -> &[[Vertex; 3]] {
        &self.triangles
    }
}

impl IntoIterator for TriangleList {
    type Item = [Vertex; 3];
    type IntoIter = std::vec::IntoIter<[Vertex; 3]>;

    fn into_iter(self) -> Self::IntoIter {
        self.triangles.into_iter()
    }
}

impl<'a> IntoIterator for &'a TriangleList {
    type Item = &'a [Vertex; 3];
    type IntoIter = std::slice::Iter<'a, [Vertex; 3]>;

    fn into_iter(self) -> Self::IntoIter {
        self.triangles.iter()
    }
}

/// Degeneracy (smallest-last) ordering: repeatedly removes a vertex of
/// minimum remaining degree. Ties go to the smallest index.
///
/// Returns the removal order together with the degeneracy, the largest
/// remaining degree seen at removal time.
pub fn degeneracy_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let max_degree = g.max_degree();
    // Bucket queue keyed by current degree; stale entries are skipped on pop.
    let mut buckets: Vec<Vec<Vertex>> = vec![Vec::new(); max_degree + 1];
    for v in (0..n).rev() {
        buckets[degree[v]].push(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    let mut low = 0;
    while order.len() < n {
        let v = loop {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop().expect("bucket is non-empty");
            if !removed[v] && degree[v] == low {
                break v;
            }
        };
        removed[v] = true;
        degeneracy = degeneracy.max(low);
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                buckets[degree[w]].push(w);
                low = low.min(degree[w]);
            }
        }
    }
    (order, degeneracy)
}

/// Lists every triangle of `g`.
///
/// Vertices are processed in degeneracy order; each triangle is reported by
/// its earliest-removed vertex, which only needs to inspect pairs among its
/// not-yet-removed neighbors (at most `degeneracy` of them).
pub fn list_triangles(g: &Graph) -> TriangleList {
    let (order, _) = degeneracy_order(g);
    let mut rank = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut triangles = Vec::new();
    let mut later = Vec::new();
    for &v in &order {
        later.clear();
        later.extend(g.neighbors(v).iter().copied().filter(|&w| rank[w] > rank[v]));
        for (i, &a) in later.iter().enumerate() {
            for &b in &later[i + 1..] {
                if g.has_edge(a, b) {
                    let mut t = [v, a, b];
                    t.sort_unstable();
                    triangles.push(t);
                }
            }
        }
    }
    triangles.sort_unstable();
    TriangleList { triangles }
}

pub fn is_triangle_free(g: &Graph) -> bool {
    list_triangles(g).is_empty()
}

/// Returns `true` if some four vertices are pairwise adjacent.
pub fn contains_k4(g: &Graph) -> bool {
    list_triangles(g).iter().any(|&[a, b, c]| {
        let mut common = g.adjacency_row(a).clone();
        common.intersect_with(g.adjacency_row(b));
        common.intersect_with(g.adjacency_row(c));
        common.count_ones(..) > 0
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force(g: &Graph) -> Vec<[Vertex; 3]> {
        let n = g.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges.collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn c5_has_no_triangles() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(list_triangles(&g).is_empty());
        assert!(!contains_k4(&g));
    }

    #[test]
    fn k4_has_four_triangles() {
        let g = complete(4);
        assert_eq!(list_triangles(&g).len(), 4);
        assert!(contains_k4(&g));
        assert!(!contains_k4(&complete(3)));
    }

    #[test]
    fn degeneracy_of_complete_graph() {
        let (order, d) = degeneracy_order(&complete(6));
        assert_eq!(d, 5);
        assert_eq!(order.len(), 6);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        assert!(list_triangles(&g).is_empty());
        assert_eq!(degeneracy_order(&g), (vec![], 0));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let all = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
                let edges: Vec<_> = all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(600))]

        #[test]
        fn listing_matches_triple_scan(g in arb_graph(8)) {
            let listed = list_triangles(&g);
            let expected = brute_force(&g);
            prop_assert_eq!(listed.as_slice(), expected.as_slice());
        }

        #[test]
        fn k4_matches_quadruple_scan(g in arb_graph(8)) {
            let n = g.n();
            let mut found = false;
            for a in 0..n { for b in a+1..n { for c in b+1..n { for d in c+1..n {
                found |= g.is_clique(&[a, b, c, d]);
            }}}}
            prop_assert_eq!(contains_k4(&g), found);
        }
    }
}
