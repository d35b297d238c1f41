//! Euclidean minimum spanning tree of a dot pattern.

use crate::error::Error;
use crate::geom::Point2;
use crate::pattern::DotPattern;
use crate::scalar::Scalar;

/// A spanning tree over the dots of a pattern.
///
/// Edges are stored with `a < b`, sorted by `(a, b)`, each weighted by the
/// Euclidean distance between its endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanningTree<S> {
    node_count: usize,
    edges: Vec<(usize, usize, S)>,
}

impl<S: Scalar> SpanningTree<S> {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edges(&self) -> &[(usize, usize, S)] {
        &self.edges
    }

    pub fn total_weight(&self) -> S {
        self.edges.iter().fold(S::zero(), |acc, e| acc + e.2)
    }

    /// Number of degree-one nodes.
    pub fn leaf_count(&self) -> usize {
        let mut deg = vec![0usize; self.node_count];
        for &(a, b, _) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg.iter().filter(|&&d| d == 1).count()
    }

    /// Neighbor lists (unsorted).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Prim's algorithm from node 0 under Euclidean weights.
///
/// Ties between equal-weight frontier edges are broken by the smaller
/// `(min endpoint, max endpoint)` pair, so the result is deterministic
/// across runs and platforms.
pub fn minimum_spanning_tree<S: Scalar>(dots: &DotPattern<S>) -> Result<SpanningTree<S>, Error> {
    let pts = dots.points();
    let n = pts.len();
    if n == 1 {
        return Ok(SpanningTree {
            node_count: 1,
            edges: Vec::new(),
        });
    }

    let d2 = |a: usize, b: usize| (pts[b] - pts[a]).norm_squared();
    let edge_key = |a: usize, b: usize| (a.min(b), a.max(b));

    let mut in_tree = vec![false; n];
    let mut best_dist: Vec<S> = (0..n).map(|i| d2(0, i)).collect();
    let mut best_from = vec![0usize; n];
    in_tree[0] = true;

    let mut edges = Vec::with_capacity(n - 1);
    for _ in 1..n {
        // Deterministic argmin over the frontier.
        let mut pick: Option<usize> = None;
        for o in 0..n {
            if in_tree[o] {
                continue;
            }
            let better = match pick {
                None => true,
                Some(p) => {
                    best_dist[o] < best_dist[p]
                        || (best_dist[o] == best_dist[p]
                            && edge_key(best_from[o], o) < edge_key(best_from[p], p))
                }
            };
            if better {
                pick = Some(o);
            }
        }
        let o = pick.expect("frontier non-empty");
        let f = best_from[o];
        edges.push((f.min(o), f.max(o), d2(f, o).sqrt()));
        in_tree[o] = true;
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            let d = d2(o, v);
            if d < best_dist[v]
                || (d == best_dist[v] && edge_key(o, v) < edge_key(best_from[v], v))
            {
                best_dist[v] = d;
                best_from[v] = o;
            }
        }
    }
    edges.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    Ok(SpanningTree {
        node_count: n,
        edges,
    })
}

/// Incident edges of every node sorted counter-clockwise by angle,
/// with exact angular ties broken by neighbor index.
pub fn sorted_adjacency<S: Scalar>(
    tree: &SpanningTree<S>,
    pts: &[Point2<S>],
) -> Vec<Vec<usize>> {
    let mut adj = tree.adjacency();
    for (v, list) in adj.iter_mut().enumerate() {
        list.sort_by(|&a, &b| {
            let ang_a = (pts[a] - pts[v]).angle();
            let ang_b = (pts[b] - pts[v]).angle();
            ang_a.partial_cmp(&ang_b).unwrap().then(a.cmp(&b))
        });
    }
    adj
}
