//! Patch documents: the substitution tree with raw Cyclo coefficients.

use serde_json::{json, Value};

use super::json::*;
use crate::error::Result;
use crate::tiling::{Chirality, Cyclo, HalfTile, Kind, Node as TreeNode, Patch, System};

fn write_point(p: &Cyclo) -> Value {
    json!({
        "c": write_ints(p.coefficients()),
        "scale": p.scale(),
    })
}

fn read_point(node: Node<'_>) -> Result<Cyclo> {
    let c = with_key(node, "c", read_ints)?;
    let c: [_; 4] = c.try_into().map_err(|_| node.err("expected 4 coefficients"))?;
    let scale = with_key(node, "scale", |n| n.usize())?;
    let scale = u32::try_from(scale).map_err(|_| node.err("scale out of range"))?;
    Ok(Cyclo::from_big(c, scale))
}

fn write_node(n: &TreeNode) -> Value {
    json!({
        "kind": n.tile.kind.name(),
        "chirality": n.tile.chirality.name(),
        "vertices": n.tile.v.iter().map(write_point).collect::<Vec<_>>(),
        "children": n.children.iter().map(write_node).collect::<Vec<_>>(),
    })
}

fn read_node(node: Node<'_>) -> Result<TreeNode> {
    let kind = with_key(node, "kind", |n| Kind::parse(n.str()?).ok_or_else(|| n.err("unknown tile kind")))?;
    let chirality =
        with_key(node, "chirality", |n| Chirality::parse(n.str()?).ok_or_else(|| n.err("unknown chirality")))?;
    let v = with_key(node, "vertices", |n| each(n, read_point))?;
    let v: [Cyclo; 3] = v.try_into().map_err(|_| node.err("expected 3 vertices"))?;
    let tile = HalfTile { kind, chirality, v };
    if !tile.is_well_formed() {
        return Err(node.err("not a well-formed half-tile"));
    }
    let children = with_key(node, "children", |n| each(n, read_node))?;
    Ok(TreeNode { tile, children })
}

pub fn patch_to_json(p: &Patch) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "patch",
        "system": p.system.name(),
        "depth": p.depth(),
        "roots": p.roots.iter().map(write_node).collect::<Vec<_>>(),
    })
}

pub fn patch_from_json(text: &str) -> Result<Patch> {
    let doc = Owned::parse(text)?;
    let root = doc.root();
    check_version(root)?;
    check_kind(root, "patch")?;
    let system =
        with_key(root, "system", |n| System::parse(n.str()?).ok_or_else(|| n.err("unknown tiling system")))?;
    let roots = with_key(root, "roots", |n| each(n, read_node))?;
    Ok(Patch { system, roots })
}
