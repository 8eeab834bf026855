//! Pendant triangles hanging off a root vertex.

use alloc::vec;
use alloc::vec::Vec;

use crate::families::formula_friendship;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    /// `k ≥ 2` pendant triangles sharing the hub.
    Friendship(usize),
    SingleTriangle,
    None,
}

/// Triangles `{hub, a, b}` whose outer vertices `a < b` have degree two, so
/// the triangle meets the rest of the graph only at the hub.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendantGadget {
    pub hub: usize,
    pub kind: GadgetKind,
    pub triangles: Vec<(usize, usize)>,
}

impl PendantGadget {
    /// Hub followed by the outer vertices.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.hub];
        out.extend(self.outer_vertices());
        out
    }

    pub fn outer_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.triangles.iter().flat_map(|&(a, b)| [a, b])
    }
}

pub fn find_pendant_gadget(g: &Graph, hub: usize) -> PendantGadget {
    let mut triangles = Vec::new();
    for &a in g.neighbors(hub) {
        if g.degree(a) != 2 {
            continue;
        }
        let b = g.neighbors(a).iter().copied().find(|&x| x != hub).expect("degree two");
        if a < b && g.degree(b) == 2 && g.has_edge(hub, b) {
            triangles.push((a, b));
        }
    }
    let kind = match triangles.len() {
        0 => GadgetKind::None,
        1 => GadgetKind::SingleTriangle,
        k => GadgetKind::Friendship(k),
    };
    PendantGadget { hub, kind, triangles }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GadgetError {
    #[error("there is no pendant gadget to label")]
    NoGadget,
}

/// Labels the gadget edges so no automorphism fixing the hub can move a
/// gadget vertex. Returns `(edge index, label)` pairs.
///
/// Internal labels start at 0; label 0 becomes `zero_label` and every other
/// internal label keeps its value. Each triangle gets distinct spoke labels
/// (so its two outer vertices cannot swap) and the triangles get pairwise
/// different `({spoke, spoke}, outer)` patterns. With `L` internal labels
/// there are `L²(L−1)/2` patterns, so `k` triangles need the least `L` with
/// `L³ − L² ≥ 2k`.
pub fn label_friendship_gadget(
    g: &Graph,
    gadget: &PendantGadget,
    zero_label: u32,
) -> Result<Vec<(usize, u32)>, GadgetError> {
    let patterns: Vec<(u32, u32, u32)> = match gadget.kind {
        GadgetKind::None => return Err(GadgetError::NoGadget),
        GadgetKind::SingleTriangle => vec![(0, 1, 2)],
        GadgetKind::Friendship(k) => {
            let labels = formula_friendship(k as u64).expect("k ≥ 2") as u32;
            let mut all = Vec::new();
            for x in 0..labels {
                for y in x + 1..labels {
                    for z in 0..labels {
                        all.push((x, y, z));
                    }
                }
            }
            // Keep the relabeled zero off the outer edges while possible so
            // it stays concentrated at the hub.
            all.sort_by_key(|&(x, y, z)| (z == 0, x, y, z));
            all.truncate(k);
            all
        }
    };
    let map = |l: u32| if l == 0 { zero_label } else { l };
    let hub = gadget.hub;
    let mut out = Vec::with_capacity(3 * patterns.len());
    for (&(a, b), &(x, y, z)) in gadget.triangles.iter().zip(&patterns) {
        let edge = |u: usize, v: usize| g.edge_index(u, v).expect("gadget edge");
        out.push((edge(hub, a), map(x)));
        out.push((edge(hub, b), map(y)));
        out.push((edge(a, b), map(z)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::find_label_preserving;
    use crate::families;
    use alloc::collections::BTreeSet;

    #[test]
    fn finds_friendship_at_hub() {
        let g = families::friendship(3).unwrap();
        let gadget = find_pendant_gadget(&g, 0);
        assert_eq!(gadget.kind, GadgetKind::Friendship(3));
        assert_eq!(gadget.vertices().len(), 7);
        assert_eq!(find_pendant_gadget(&g, 1).kind, GadgetKind::None);
    }

    #[test]
    fn complete_graph_has_no_gadget() {
        let g = families::complete(4).unwrap();
        assert!((0..4).all(|v| find_pendant_gadget(&g, v).kind == GadgetKind::None));
    }

    #[test]
    fn triangle_glued_to_hexagon() {
        // Hexagon 0..6 with the triangle {0, 6, 7} hanging off vertex 0.
        let mut pairs: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        pairs.extend([(0, 6), (0, 7), (6, 7)]);
        let g = Graph::new(8, &pairs).unwrap();
        let gadget = find_pendant_gadget(&g, 0);
        assert_eq!(gadget.kind, GadgetKind::SingleTriangle);
        assert_eq!(gadget.triangles, vec![(6, 7)]);
        let labels = label_friendship_gadget(&g, &gadget, 9).unwrap();
        let values: Vec<u32> = labels.iter().map(|&(_, l)| l).collect();
        assert_eq!(values, vec![9, 1, 2]);
    }

    fn gadget_labels(k: usize) -> (Graph, Vec<u32>) {
        let g = families::friendship(k).unwrap();
        let gadget = find_pendant_gadget(&g, 0);
        let mut labels = vec![0; g.m()];
        for (e, l) in label_friendship_gadget(&g, &gadget, 9).unwrap() {
            labels[e] = l;
        }
        (g, labels)
    }

    #[test]
    fn friendship_labelings_distinguish() {
        for (k, expected) in [(2, 2), (3, 3), (4, 3), (10, 4)] {
            let (g, labels) = gadget_labels(k);
            assert!(labels.iter().all(|&l| l > 0));
            assert_eq!(labels.iter().collect::<BTreeSet<_>>().len(), expected, "k = {k}");
            assert!(find_label_preserving(&g, &labels).is_none(), "k = {k}");
        }
    }

    #[test]
    fn labeling_needs_a_gadget() {
        let g = families::cycle(5).unwrap();
        let gadget = find_pendant_gadget(&g, 0);
        assert_eq!(label_friendship_gadget(&g, &gadget, 3), Err(GadgetError::NoGadget));
    }
}
