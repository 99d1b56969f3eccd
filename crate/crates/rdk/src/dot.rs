//! Graphviz output. Posets render bottom-to-top like Hasse diagrams; trees
//! keep their child slots in place with invisible fillers so that a missing
//! left child still leaves the right child leaning right.

use std::fmt::Write as _;

use rdk_core::bintree::BinaryTree;
use rdk_core::orders::Poset;
use rdk_core::trees::AryTree;

use crate::text::show_entries;

pub fn poset_dot(poset: &Poset) -> String {
    let mut out = String::from("digraph poset {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for (i, u) in poset.elements().iter().enumerate() {
        let label = show_entries(u.entries());
        let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
    }
    for &(lower, upper) in poset.covers() {
        let _ = writeln!(out, "  v{lower} -> v{upper};");
    }
    out.push_str("}\n");
    out
}

pub fn arytree_dot(tree: &AryTree) -> String {
    let mut out = String::from("digraph arytree {\n");
    out.push_str("  ordering=out;\n");
    out.push_str("  node [shape=circle];\n");
    for v in 0..tree.size() {
        let _ = writeln!(out, "  v{v} [label=\"{}\"];", tree.label(v));
    }
    let mut filler = 0usize;
    for v in 0..tree.size() {
        if tree.children(v).iter().all(Option::is_none) {
            continue;
        }
        for slot in tree.children(v) {
            match slot {
                Some(w) => {
                    let _ = writeln!(out, "  v{v} -> v{w};");
                }
                None => {
                    let _ = writeln!(out, "  f{filler} [style=invis, label=\"\"];");
                    let _ = writeln!(out, "  v{v} -> f{filler} [style=invis];");
                    filler += 1;
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn bintree_dot(tree: &BinaryTree) -> String {
    let mut out = String::from("digraph bintree {\n");
    out.push_str("  ordering=out;\n");
    out.push_str("  node [shape=point];\n");
    for v in 0..tree.node_count() {
        let _ = writeln!(out, "  v{v};");
    }
    let mut filler = 0usize;
    let mut slot = |v: usize, child: Option<usize>, out: &mut String| match child {
        Some(w) => {
            let _ = writeln!(out, "  v{v} -> v{w};");
        }
        None => {
            let _ = writeln!(out, "  f{filler} [style=invis];");
            let _ = writeln!(out, "  v{v} -> f{filler} [style=invis];");
            filler += 1;
        }
    };
    for v in 0..tree.node_count() {
        if tree.left(v).is_none() && tree.right(v).is_none() {
            continue;
        }
        slot(v, tree.left(v), &mut out);
        slot(v, None, &mut out);
        slot(v, tree.right(v), &mut out);
    }
    out.push_str("}\n");
    out
}
