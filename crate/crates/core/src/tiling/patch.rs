//! Substitution trees of half-tiles.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exec::Exec;

use super::cyclo::{orientation, Cyclo};
use super::tile::{HalfTile, Kind, System};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub tile: HalfTile,
    pub children: Vec<Node>,
}

impl Node {
    pub fn leaf(tile: HalfTile) -> Node {
        Node { tile, children: Vec::new() }
    }

    fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a HalfTile>) {
        if self.children.is_empty() {
            out.push(&self.tile);
        }
        for c in &self.children {
            c.collect_leaves(out);
        }
    }

    fn leaves_mut<'a>(&'a mut self, out: &mut Vec<&'a mut Node>) {
        if self.children.is_empty() {
            out.push(self);
        } else {
            for c in &mut self.children {
                c.leaves_mut(out);
            }
        }
    }

    fn prune(&mut self, levels: usize) {
        if levels == 0 {
            self.children.clear();
        } else {
            for c in &mut self.children {
                c.prune(levels - 1);
            }
        }
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Node)) {
        f(self);
        for c in &self.children {
            c.visit(f);
        }
    }
}

/// A forest of substitution trees; the leaves form the current tiling.
/// All leaves sit at the same depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Patch {
    pub system: System,
    pub roots: Vec<Node>,
}

impl Patch {
    pub fn new(system: System, seeds: Vec<HalfTile>) -> Patch {
        Patch { system, roots: seeds.into_iter().map(Node::leaf).collect() }
    }

    pub fn empty(system: System) -> Patch {
        Patch { system, roots: Vec::new() }
    }

    pub fn depth(&self) -> usize {
        self.roots.iter().map(Node::depth).max().unwrap_or(0)
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&HalfTile> {
        let mut out = Vec::new();
        for r in &self.roots {
            r.collect_leaves(&mut out);
        }
        out
    }

    /// `(acute, obtuse)` leaf counts.
    pub fn counts(&self) -> (usize, usize) {
        let leaves = self.leaves();
        let a = leaves.iter().filter(|t| t.kind == Kind::Acute).count();
        (a, leaves.len() - a)
    }

    pub fn nodes(&self) -> Vec<&Node> {
        let mut out = Vec::new();
        for r in &self.roots {
            r.visit(&mut |n| out.push(n));
        }
        out
    }
}

pub fn deflate(p: &Patch, steps: usize) -> Patch {
    deflate_with(p, steps, Exec::default())
}

/// Subdivides every leaf `steps` times.
pub fn deflate_with(p: &Patch, steps: usize, exec: Exec) -> Patch {
    let mut out = p.clone();
    for _ in 0..steps {
        let mut leaves = Vec::new();
        for r in &mut out.roots {
            r.leaves_mut(&mut leaves);
        }
        let tiles: Vec<HalfTile> = leaves.iter().map(|n| n.tile.clone()).collect();
        let children = exec.map(&tiles, |t| t.subdivide(p.system));
        for (leaf, kids) in leaves.into_iter().zip(children) {
            leaf.children = kids.into_iter().map(Node::leaf).collect();
        }
    }
    out
}

/// Removes the `steps` deepest substitution levels.
pub fn inflate(p: &Patch, steps: usize) -> Result<Patch> {
    if steps > p.depth() {
        return Err(Error::CannotInflate);
    }
    let target = p.depth() - steps;
    let mut out = p.clone();
    for r in &mut out.roots {
        r.prune(target);
    }
    Ok(out)
}

type Edge = (Cyclo, Cyclo);

fn directed_edges(t: &HalfTile) -> [Edge; 3] {
    let [a, b, c] = &t.v;
    // counter-clockwise orientation
    if orientation(a, b, c) > 0 {
        [(a.clone(), b.clone()), (b.clone(), c.clone()), (c.clone(), a.clone())]
    } else {
        [(a.clone(), c.clone()), (c.clone(), b.clone()), (b.clone(), a.clone())]
    }
}

/// Whether `x` lies on the open segment `(a, b)`, or equals an endpoint.
fn on_segment(a: &Cyclo, b: &Cyclo, x: &Cyclo) -> bool {
    let ab = b.sub(a);
    let ax = x.sub(a);
    if ab.conj().mul(&ax).im_sign() != 0 {
        return false;
    }
    // 0 ≤ ⟨ax, ab⟩ ≤ |ab|²
    let dot = |u: &Cyclo, v: &Cyclo| u.conj().mul(v).add(&v.conj().mul(u)).real_value().expect("real");
    let t = dot(&ax, &ab);
    let l = dot(&ab, &ab);
    !t.is_negative() && t <= l
}

/// Checks that the children of `parent` tile it: every child is a
/// well-formed triangle one scale down; interior edges cancel in opposite pairs; the surviving edges chain
/// along each parent edge from its start to its end.
pub fn children_tile_parent(parent: &HalfTile, children: &[HalfTile]) -> bool {
    if children.is_empty() {
        return true;
    }
    let s = parent.scale() + 1;
    for c in children {
        if c.scale() != s || c.v.iter().any(|p| p.scale() != s) || !c.is_well_formed() {
            return false;
        }
    }
    let mut count: HashMap<Edge, i64> = HashMap::new();
    for c in children {
        for (a, b) in directed_edges(c) {
            let rev = (b.clone(), a.clone());
            match count.get_mut(&rev) {
                Some(n) if *n > 0 => *n -= 1,
                _ => *count.entry((a, b)).or_insert(0) += 1,
            }
        }
    }
    let boundary: Vec<Edge> = count
        .into_iter()
        .flat_map(|(e, n)| std::iter::repeat_n(e, n.max(0) as usize))
        .collect();
    let parent_edges = directed_edges(&HalfTile { v: parent.v.clone().map(|p| p.lift()), ..parent.clone() });
    let mut used = vec![false; boundary.len()];
    for (a, b) in &parent_edges {
        // walk from a to b along boundary edges lying on the segment
        let mut at = a.clone();
        while at != *b {
            let next = boundary
                .iter()
                .enumerate()
                .find(|(i, (x, y))| !used[*i] && *x == at && on_segment(a, b, y));
            match next {
                Some((i, (_, y))) => {
                    used[i] = true;
                    at = y.clone();
                }
                None => return false,
            }
        }
    }
    used.iter().all(|&u| u)
}

/// The edge-cancellation check at every node of the patch.
pub fn check_patch(p: &Patch) -> bool {
    p.nodes().iter().all(|n| {
        let kids: Vec<HalfTile> = n.children.iter().map(|c| c.tile.clone()).collect();
        children_tile_parent(&n.tile, &kids)
    })
}

/// Leaf counts `(a_k, o_k)` from the recurrence alone.
pub fn recurrence_counts(system: System, seed: Kind, k: usize) -> (u128, u128) {
    let (mut a, mut o) = match seed {
        Kind::Acute => (1u128, 0u128),
        Kind::Obtuse => (0, 1),
    };
    for _ in 0..k {
        (a, o) = match system {
            System::P2 => (2 * a + o, a + o),
            System::P3 => (a + o, a + 2 * o),
        };
    }
    (a, o)
}
