//! The zero-width initial polygon traced around a spanning tree.
//!
//! The boundary walk keeps the tree on its left, so the polygon sides (one
//! per directed tree edge, plus one cap per leaf) all move away from the
//! tree at unit speed, and the swept region lies to the right of travel as
//! the kinetic machinery expects. Every tree edge is traversed exactly
//! twice, once per direction; a node of degree `d` emits `d` wedge vertices
//! and a leaf emits a two-vertex flat cap, for `2|V| - 2 + n_L` vertices in
//! total.

use crate::error::Error;
use crate::geom::Vector2;
use crate::kinetic::{KineticPolygon, MovingVertex};
use crate::mst::{sorted_adjacency, SpanningTree};
use crate::pattern::DotPattern;
use crate::scalar::{c, Scalar};

/// Speed of a vertex with wedge angle `theta`: `1 / sin(theta / 2)`, the
/// unique speed for which both adjacent sides offset at unit rate.
pub fn vertex_speed<S: Scalar>(theta: S) -> Result<S, Error> {
    let tau = c::<S>(std::f64::consts::TAU);
    if !(theta > S::zero() && theta < tau) {
        return Err(Error::InvalidParameter(format!(
            "wedge angle must lie in (0, 2pi), got {:?}",
            theta
        )));
    }
    Ok(S::one() / (theta / c(2.0)).sin())
}

/// What a sliver-polygon side runs along.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideTag {
    /// Alongside the directed tree edge `from -> to`, on its right.
    Edge { from: usize, to: usize },
    /// The flat cap closing the tube beyond this leaf.
    Cap { leaf: usize },
}

/// The initial polygon plus bookkeeping used by tests and tracing.
#[derive(Debug, Clone)]
pub struct SliverPolygon<S> {
    pub polygon: KineticPolygon<S>,
    /// Tag of the side leaving vertex `i` (towards vertex `i + 1`).
    pub side_tags: Vec<SideTag>,
    pub leaf_count: usize,
}

impl<S: Scalar> SliverPolygon<S> {
    pub fn len(&self) -> usize {
        self.polygon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygon.is_empty()
    }
}

/// Trace the boundary walk around `tree` and emit the moving vertices of
/// the zero-width initial polygon.
pub fn initial_polygon<S: Scalar>(
    tree: &SpanningTree<S>,
    dots: &DotPattern<S>,
) -> Result<SliverPolygon<S>, Error> {
    let pts = dots.points();
    if tree.node_count() < 2 {
        return Err(Error::InvalidPattern(
            "initial polygon needs at least 2 dots".into(),
        ));
    }
    if tree.node_count() != pts.len() {
        return Err(Error::InvalidPattern(
            "tree and pattern sizes disagree".into(),
        ));
    }
    let adj = sorted_adjacency(tree, pts);
    let leaf_count = adj.iter().filter(|l| l.len() == 1).count();

    let mut vertices: Vec<MovingVertex<S>> = Vec::new();
    let mut side_tags: Vec<SideTag> = Vec::new();

    let push = |vertices: &mut Vec<MovingVertex<S>>,
                side_tags: &mut Vec<SideTag>,
                node: usize,
                velocity: Vector2<S>,
                out_dir: Vector2<S>,
                out_normal: Vector2<S>,
                tag: SideTag| {
        let origin = pts[node];
        vertices.push(MovingVertex {
            origin,
            birth_time: S::zero(),
            velocity,
            tree_node: Some(node),
            pi_a: None,
            pi_b: None,
            out_dir,
            out_normal,
            out_offset: origin.to_vector().dot(&out_normal),
            death: None,
        });
        side_tags.push(tag);
    };

    let start = (0usize, adj[0][0]);
    let mut cur = start;
    loop {
        let (u, v) = cur;
        let next_edge;
        if adj[v].len() == 1 {
            // Flat cap: both vertices at the leaf, wedge angle pi/2 each,
            // moving at +-45 degrees from the outward edge direction.
            let w = (pts[v] - pts[u]).normalized();
            let n = w.rot90_ccw();
            push(
                &mut vertices,
                &mut side_tags,
                v,
                w - n,
                n,
                w,
                SideTag::Cap { leaf: v },
            );
            let back_dir = -w;
            push(
                &mut vertices,
                &mut side_tags,
                v,
                w + n,
                back_dir,
                back_dir.rot90_cw(),
                SideTag::Edge { from: v, to: u },
            );
            next_edge = (v, u);
        } else {
            // Wedge between the reversed arrival edge and the next incident
            // edge counter-clockwise; one vertex per wedge.
            let list = &adj[v];
            let k = list.iter().position(|&x| x == u).expect("arrival edge");
            let w_node = list[(k + 1) % list.len()];
            let a1 = (pts[u] - pts[v]).angle();
            let a2 = (pts[w_node] - pts[v]).angle();
            let tau = c::<S>(std::f64::consts::TAU);
            let mut phi = a2 - a1;
            while phi <= S::zero() {
                phi = phi + tau;
            }
            let speed = vertex_speed(phi)?;
            let bisector = Vector2::from_angle(a1 + phi / c(2.0));
            let out_dir = (pts[w_node] - pts[v]).normalized();
            push(
                &mut vertices,
                &mut side_tags,
                v,
                bisector * speed,
                out_dir,
                out_dir.rot90_cw(),
                SideTag::Edge { from: v, to: w_node },
            );
            next_edge = (v, w_node);
        }
        cur = next_edge;
        if cur == start {
            break;
        }
    }

    debug_assert_eq!(vertices.len(), 2 * tree.node_count() - 2 + leaf_count);
    debug_assert!(velocities_consistent(&vertices));

    Ok(SliverPolygon {
        polygon: KineticPolygon {
            vertices,
            creation_time: S::zero(),
        },
        side_tags,
        leaf_count,
    })
}

/// Every vertex must ride both of its adjacent side lines at unit rate.
fn velocities_consistent<S: Scalar>(vertices: &[MovingVertex<S>]) -> bool {
    let n = vertices.len();
    let tol = c::<S>(1e-9);
    (0..n).all(|i| {
        let prev = &vertices[(i + n - 1) % n];
        let v = &vertices[i];
        (v.velocity.dot(&prev.out_normal) - S::one()).abs() < tol
            && (v.velocity.dot(&v.out_normal) - S::one()).abs() < tol
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use crate::mst::minimum_spanning_tree;
    use approx::assert_relative_eq;
    use std::f64::consts::{PI, SQRT_2};

    fn pattern(v: &[(f64, f64)]) -> DotPattern<f64> {
        DotPattern::new(v.iter().map(|&(x, y)| Point2::new(x, y)).collect()).unwrap()
    }

    fn sliver(v: &[(f64, f64)]) -> SliverPolygon<f64> {
        let dots = pattern(v);
        let tree = minimum_spanning_tree(&dots).unwrap();
        initial_polygon(&tree, &dots).unwrap()
    }

    #[test]
    fn vertex_speed_examples() {
        assert_relative_eq!(vertex_speed(PI).unwrap(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(vertex_speed(PI / 2.0).unwrap(), SQRT_2, epsilon = 1e-12);
        assert_relative_eq!(vertex_speed(PI / 3.0).unwrap(), 2.0, epsilon = 1e-12);
        assert!(vertex_speed(0.0).is_err());
        assert!(vertex_speed(2.0 * PI).is_err());
        assert!(vertex_speed(-1.0).is_err());
    }

    #[test]
    fn vertex_speed_f32() {
        assert!((vertex_speed(std::f32::consts::PI / 2.0).unwrap() - std::f32::consts::SQRT_2)
            .abs()
            < 1e-6);
    }

    #[test]
    fn two_node_path_has_four_vertices() {
        let s = sliver(&[(0.0, 0.0), (3.0, 0.0)]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.leaf_count, 2);
        for v in &s.polygon.vertices {
            assert_relative_eq!(v.speed(), SQRT_2, epsilon = 1e-12);
        }
    }

    #[test]
    fn star_k13_has_nine_vertices() {
        let s = sliver(&[(0.0, 0.0), (10.0, 0.0), (-5.0, 8.6), (-5.0, -8.6)]);
        assert_eq!(s.len(), 9); // 2*4 - 2 + 3
        assert_eq!(s.leaf_count, 3);
    }

    #[test]
    fn path_of_n_nodes_has_2n_vertices() {
        for n in 2..9 {
            let pts: Vec<(f64, f64)> = (0..n)
                .map(|i| (i as f64 * 2.0, (i as f64 * 0.7).sin()))
                .collect();
            let s = sliver(&pts);
            assert_eq!(s.len(), 2 * n);
        }
    }

    #[test]
    fn every_tree_edge_traversed_twice_in_opposite_directions() {
        let s = sliver(&[
            (0.0, 0.0),
            (4.0, 0.5),
            (7.5, -1.0),
            (3.5, 4.0),
            (-2.0, 3.0),
        ]);
        let mut directed: Vec<(usize, usize)> = s
            .side_tags
            .iter()
            .filter_map(|t| match t {
                SideTag::Edge { from, to } => Some((*from, *to)),
                SideTag::Cap { .. } => None,
            })
            .collect();
        directed.sort();
        // Each undirected edge appears exactly once per direction.
        let mut undirected = std::collections::BTreeMap::new();
        for &(a, b) in &directed {
            *undirected.entry((a.min(b), a.max(b))).or_insert(0usize) += 1;
        }
        assert!(undirected.values().all(|&c| c == 2));
        for &(a, b) in &directed {
            assert!(directed.binary_search(&(b, a)).is_ok());
        }
        // One cap per leaf.
        let caps = s.side_tags.iter().filter(|t| matches!(t, SideTag::Cap { .. })).count();
        assert_eq!(caps, s.leaf_count);
    }

    #[test]
    fn expanded_sides_parallel_to_their_edges() {
        let dots = pattern(&[
            (0.0, 0.0),
            (5.0, 1.0),
            (9.0, -2.0),
            (4.0, 6.0),
            (-3.0, 4.0),
            (1.0, -5.0),
        ]);
        let tree = minimum_spanning_tree(&dots).unwrap();
        let s = initial_polygon(&tree, &dots).unwrap();
        let min_edge = tree
            .edges()
            .iter()
            .map(|e| e.2)
            .fold(f64::INFINITY, f64::min);
        let t = 1e-3 * min_edge;
        let n = s.len();
        for i in 0..n {
            let p = s.polygon.vertices[i].position(t);
            let q = s.polygon.vertices[(i + 1) % n].position(t);
            match s.side_tags[i] {
                SideTag::Edge { from, to } => {
                    let a = dots.points()[from];
                    let b = dots.points()[to];
                    let edge_dir = (b - a).normalized();
                    // Parallel to the tree edge...
                    assert!(edge_dir.cross(&(q - p).normalized()).abs() < 1e-9);
                    // ...at distance exactly t on the right of from->to.
                    let n_right = edge_dir.rot90_cw();
                    assert_relative_eq!((p - a).dot(&n_right), t, epsilon = 1e-12);
                    assert_relative_eq!((q - a).dot(&n_right), t, epsilon = 1e-12);
                }
                SideTag::Cap { leaf } => {
                    let l = dots.points()[leaf];
                    assert_relative_eq!((p - l).norm(), t * SQRT_2, epsilon = 1e-12);
                    assert_relative_eq!((q - l).norm(), t * SQRT_2, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn rejects_single_dot() {
        let dots = pattern(&[(1.0, 1.0)]);
        let tree = minimum_spanning_tree(&dots).unwrap();
        assert!(initial_polygon(&tree, &dots).is_err());
    }

    #[test]
    fn lemma2_and_corollary_on_random_trees() {
        // 200 random patterns, 3 <= n <= 50: vertex count is exactly
        // 2|V| - 2 + n_L and falls within [2|V|, 3|V| - 3].
        let mut state = 0x243F6A8885A308D3u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for round in 0..200 {
            let n = 3 + (next() % 48) as usize;
            let pts: Vec<(f64, f64)> = (0..n)
                .map(|_| {
                    let x = (next() % 100_000) as f64 / 100.0;
                    let y = (next() % 100_000) as f64 / 100.0;
                    (x, y)
                })
                .collect();
            let dots = match DotPattern::new(
                pts.iter().map(|&(x, y)| Point2::new(x, y)).collect(),
            ) {
                Ok(d) => d,
                Err(_) => continue, // duplicate draw; astronomically rare
            };
            let tree = minimum_spanning_tree(&dots).unwrap();
            let s = initial_polygon(&tree, &dots).unwrap();
            let nv = tree.node_count();
            let expect = 2 * nv - 2 + tree.leaf_count();
            assert_eq!(s.len(), expect, "round {round}");
            assert!(s.len() >= 2 * nv && s.len() <= 3 * nv - 3);
        }
    }
}
