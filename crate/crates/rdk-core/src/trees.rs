//! Plane trees for ordinary Dyck words, and (b+1)-ary trees whose regions
//! carry labels: the bijection with Stirling permutations, rotations on
//! labeled trees, and the contour walk word.

use alloc::vec;
use alloc::vec::Vec;

use crate::paren::{ParenPres, Token};
use crate::paths::{DyckWord, Slope, Step};
use crate::stirling::{zeta, zeta_inverse, StirlingPerm};

/// A rooted ordered tree. Node 0 is the root; children are listed left to
/// right. A (1,1)-Dyck word of size n corresponds to a tree with n edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneTree {
    children: Vec<Vec<usize>>,
}

impl PlaneTree {
    pub fn edge_count(&self) -> usize {
        self.children.len().saturating_sub(1)
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }
}

/// Reads an ordinary Dyck word as a plane tree: N opens a fresh child and
/// descends, E climbs back up. Nodes are numbered in order of creation, so
/// the edge leading to node v has pre-order number v.
pub fn dyck_to_plane_tree(q: &DyckWord) -> PlaneTree {
    assert_eq!(
        (q.slope().a(), q.slope().b()),
        (1, 1),
        "plane trees are built from (1,1)-Dyck words"
    );
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack = vec![0usize];
    for &s in q.steps() {
        match s {
            Step::N => {
                let v = children.len();
                children.push(Vec::new());
                let parent = *stack.last().expect("prefix law keeps the stack nonempty");
                children[parent].push(v);
                stack.push(v);
            }
            Step::E => {
                stack.pop();
            }
        }
    }
    PlaneTree { children }
}

pub fn plane_tree_to_dyck(t: &PlaneTree) -> DyckWord {
    fn descend(t: &PlaneTree, v: usize, out: &mut Vec<Step>) {
        for &c in &t.children[v] {
            out.push(Step::N);
            descend(t, c, out);
            out.push(Step::E);
        }
    }
    let mut steps = Vec::with_capacity(2 * t.edge_count());
    descend(t, 0, &mut steps);
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    DyckWord::new(slope, steps).expect("a tree contour satisfies the prefix law")
}

fn postorder_edges(t: &PlaneTree, v: usize, out: &mut Vec<usize>) {
    for &c in &t.children[v] {
        postorder_edges(t, c, out);
        out.push(c);
    }
}

/// Labels the edges of the tree of q by pre-order starting from 1, then
/// reads the labels back in post-order.
pub fn postorder_word_of_identity_preorder(q: &DyckWord) -> Vec<u64> {
    let t = dyck_to_plane_tree(q);
    let mut order = Vec::with_capacity(t.edge_count());
    postorder_edges(&t, 0, &mut order);
    order.into_iter().map(|v| v as u64).collect()
}

/// Labels the edges of the tree of q by post-order starting from 1, then
/// reads the labels back in pre-order.
pub fn preorder_word_of_postorder_labels(q: &DyckWord) -> Vec<u64> {
    let t = dyck_to_plane_tree(q);
    let mut order = Vec::with_capacity(t.edge_count());
    postorder_edges(&t, 0, &mut order);
    let mut label = vec![0u64; t.node_count()];
    for (k, v) in order.into_iter().enumerate() {
        label[v] = k as u64 + 1;
    }
    label.drain(..1);
    label
}

/// A (b+1)-ary tree on n internal nodes whose b regions between consecutive
/// child slots of node v all carry the label v + 1. Absent children are leaf
/// positions. Node v always carries label v + 1 and node 0 is the root, so
/// structural equality of the children table is equality of labeled trees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AryTree {
    b: u64,
    children: Vec<Vec<Option<usize>>>,
}

impl AryTree {
    pub(crate) fn from_parts(b: u64, children: Vec<Vec<Option<usize>>>) -> AryTree {
        debug_assert!(children
            .iter()
            .all(|slots| slots.len() == b as usize + 1));
        AryTree { b, children }
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        self.children.len()
    }

    pub fn root(&self) -> usize {
        0
    }

    /// The value written in the regions of node v.
    pub fn label(&self, v: usize) -> u64 {
        v as u64 + 1
    }

    pub fn children(&self, v: usize) -> &[Option<usize>] {
        &self.children[v]
    }

    /// Leaf positions (node, slot) in left-to-right order.
    fn leaf_slots(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if !self.children.is_empty() {
            self.collect_leaves(0, &mut out);
        }
        out
    }

    fn collect_leaves(&self, v: usize, out: &mut Vec<(usize, usize)>) {
        for (s, c) in self.children[v].iter().enumerate() {
            match c {
                Some(w) => self.collect_leaves(*w, out),
                None => out.push((v, s)),
            }
        }
    }

    fn parent_slot(&self, v: usize) -> (usize, usize) {
        for p in 0..self.children.len() {
            if let Some(s) = self.children[p].iter().position(|&c| c == Some(v)) {
                return (p, s);
            }
        }
        panic!("node {v} is not attached");
    }
}

/// Builds the labeled (b+1)-ary tree of a Stirling permutation: node i is
/// appended at the leaf indexed by the number of symbols preceding the
/// leftmost i, counted from left starting at one.
pub fn xi(pi: &StirlingPerm) -> AryTree {
    let b = pi.b();
    let width = b as usize + 1;
    let u = zeta_inverse(pi);
    if u.is_empty() {
        return AryTree {
            b,
            children: Vec::new(),
        };
    }
    let mut t = AryTree {
        b,
        children: vec![vec![None; width]],
    };
    for &ui in &u[1..] {
        let leaves = t.leaf_slots();
        let (p, s) = leaves[ui as usize];
        let v = t.children.len();
        t.children.push(vec![None; width]);
        t.children[p][s] = Some(v);
    }
    t
}

pub fn xi_inverse(t: &AryTree) -> StirlingPerm {
    let n = t.size();
    let mut work = t.clone();
    let mut u = vec![0u64; n];
    for i in (2..=n).rev() {
        let v = i - 1;
        debug_assert!(
            work.children[v].iter().all(|c| c.is_none()),
            "labels increase away from the root"
        );
        let (p, s) = work.parent_slot(v);
        work.children[p][s] = None;
        let pos = work
            .leaf_slots()
            .iter()
            .position(|&ps| ps == (p, s))
            .expect("a vacated slot is a leaf");
        u[v] = pos as u64;
    }
    zeta(&u, t.b).expect("leaf indices stay within the insertion bound")
}

/// Rotation on labeled trees. Detach the subtree rooted at the node labeled
/// i; when the leaf immediately left of its slot belongs to a node with a
/// smaller label, re-seat the subtree there, minus the child hanging off the
/// rightmost edge of node i, which stays behind in the vacated slot.
/// Otherwise the tree is returned unchanged.
pub fn tree_rotation(t: &AryTree, i: u64) -> AryTree {
    let n = t.size() as u64;
    assert!(2 <= i && i <= n, "label {i} out of range 2..={n}");
    let vi = (i - 1) as usize;
    let mut out = t.clone();
    let (p, s) = out.parent_slot(vi);
    out.children[p][s] = None;
    let leaves = out.leaf_slots();
    let x = leaves
        .iter()
        .position(|&ps| ps == (p, s))
        .expect("a vacated slot is a leaf");
    if x == 0 {
        out.children[p][s] = Some(vi);
        return out;
    }
    let (hp, hs) = leaves[x - 1];
    if out.label(hp) > i {
        out.children[p][s] = Some(vi);
        return out;
    }
    let rightmost = out.children[vi].len() - 1;
    let tj = out.children[vi][rightmost];
    out.children[vi][rightmost] = None;
    out.children[hp][hs] = Some(vi);
    out.children[p][s] = tj;
    out
}

/// The contour word of a labeled tree: walking anticlockwise from the root,
/// the leftmost edge of node v opens a pair, the rightmost closes it, and
/// each region between consecutive child slots contributes a star.
pub fn walk_word(t: &AryTree) -> ParenPres {
    fn emit(t: &AryTree, v: usize, out: &mut Vec<Token>) {
        out.push(Token::Open);
        for (s, c) in t.children(v).iter().enumerate() {
            if s > 0 {
                out.push(Token::Star);
            }
            if let Some(w) = c {
                emit(t, *w, out);
            }
        }
        out.push(Token::Close);
    }
    let mut tokens = Vec::new();
    if t.size() > 0 {
        emit(t, 0, &mut tokens);
    }
    ParenPres::new(t.b(), tokens).expect("a contour is balanced with b stars per node")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{primitive_subsequence, rotation_covers};
    use crate::paths::{enumerate_paths, word_to_step_seq, StepSeq};
    use crate::stirling::enumerate_stirling;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn word(a: u64, b: u64, s: &str) -> DyckWord {
        DyckWord::from_ascii(Slope::new(a, b).unwrap(), s).unwrap()
    }

    fn perm(b: u64, entries: &[u64]) -> StirlingPerm {
        StirlingPerm::new(b, entries.to_vec()).unwrap()
    }

    #[test]
    fn plane_tree_shapes() {
        let t = dyck_to_plane_tree(&word(1, 1, "NE"));
        assert_eq!(t.edge_count(), 1);
        assert_eq!(t.children(0), &[1]);

        let t = dyck_to_plane_tree(&word(1, 1, "NNEENE"));
        assert_eq!(t.children(0), &[1, 3]);
        assert_eq!(t.children(1), &[2]);

        let t = dyck_to_plane_tree(&word(1, 1, "NENENE"));
        assert_eq!(t.children(0), &[1, 2, 3]);
    }

    #[test]
    fn plane_tree_round_trip() {
        for n in 0..=5 {
            for p in enumerate_paths(Slope::new(1, 1).unwrap(), n) {
                assert_eq!(plane_tree_to_dyck(&dyck_to_plane_tree(&p)), p);
            }
        }
    }

    #[test]
    fn order_words() {
        assert_eq!(
            postorder_word_of_identity_preorder(&word(1, 1, "NNEENE")),
            [2, 1, 3]
        );
        assert_eq!(
            postorder_word_of_identity_preorder(&word(1, 1, "NENENE")),
            [1, 2, 3]
        );
        assert_eq!(postorder_word_of_identity_preorder(&word(1, 1, "NE")), [1]);
        assert_eq!(preorder_word_of_postorder_labels(&word(1, 1, "NNEE")), [2, 1]);
        assert_eq!(preorder_word_of_postorder_labels(&word(1, 1, "NE")), [1]);
        assert_eq!(
            preorder_word_of_postorder_labels(&word(1, 1, "NNEENE")),
            [2, 1, 3]
        );
    }

    #[test]
    fn both_order_words_invert_each_other_on_small_trees() {
        for n in 1..=5 {
            for p in enumerate_paths(Slope::new(1, 1).unwrap(), n) {
                let post = postorder_word_of_identity_preorder(&p);
                let pre = preorder_word_of_postorder_labels(&p);
                for (k, &v) in post.iter().enumerate() {
                    assert_eq!(pre[v as usize - 1], k as u64 + 1);
                }
            }
        }
    }

    #[test]
    fn xi_of_single_block_is_one_node() {
        let t = xi(&perm(2, &[1, 1]));
        assert_eq!(t.size(), 1);
        assert_eq!(t.children(0), &[None, None, None]);
        assert_eq!(walk_word(&t).to_string(), "(**)");
    }

    #[test]
    fn xi_places_nodes_by_preceding_symbols() {
        let t = xi(&perm(2, &[1, 2, 2, 1, 3, 3]));
        assert_eq!(t.children(0), &[None, Some(1), Some(2)]);
        assert_eq!(t.children(1), &[None, None, None]);
        assert_eq!(t.children(2), &[None, None, None]);
    }

    #[test]
    fn xi_round_trip_exhaustive() {
        for b in 1..=3u64 {
            for n in 0..=4u64 {
                let mut seen = BTreeSet::new();
                for pi in enumerate_stirling(n, b) {
                    let t = xi(&pi);
                    assert_eq!(t.size() as u64, n);
                    assert_eq!(xi_inverse(&t), pi);
                    seen.insert(t);
                }
                let expected: u64 = (1..=n).map(|i| b * (i - 1) + 1).product();
                assert_eq!(seen.len() as u64, expected);
            }
        }
    }

    #[test]
    fn walk_word_goldens() {
        let alpha = |u: &[u64], b: u64| walk_word(&xi(&zeta(u, b).unwrap())).to_string();
        assert_eq!(alpha(&[0, 1, 4], 2), "(*(**)*(**))");
        assert_eq!(alpha(&[0, 1, 2, 4], 3), "(*(*(**(***)*)**)**)");
        assert_eq!(alpha(&[0, 2, 4, 8], 3), "(**(**(***)*(***))*)");
        assert_eq!(alpha(&[0, 0, 3, 3, 6, 9], 2), "((**)*((**)*(**)*(**))*)");
    }

    #[test]
    fn rotation_moves_whole_subtree_when_rightmost_child_is_a_leaf() {
        let before = xi(&zeta(&[0, 1, 2, 4], 3).unwrap());
        let after = tree_rotation(&before, 2);
        assert_eq!(after, xi(&zeta(&[0, 0, 1, 3], 3).unwrap()));
    }

    #[test]
    fn rotation_leaves_rightmost_child_behind() {
        let before = xi(&zeta(&[0, 2, 4, 8], 3).unwrap());
        let after = tree_rotation(&before, 2);
        assert_eq!(after, xi(&zeta(&[0, 1, 3, 8], 3).unwrap()));
    }

    #[test]
    fn rotation_is_identity_under_a_larger_label() {
        let t = xi(&zeta(&[0, 2, 1], 2).unwrap());
        assert_eq!(tree_rotation(&t, 2), t);
    }

    #[test]
    fn rotation_is_identity_at_the_leftmost_leaf() {
        let t = xi(&zeta(&[0, 0], 2).unwrap());
        assert_eq!(tree_rotation(&t, 2), t);
    }

    #[test]
    fn rotations_realize_rotation_covers_exhaustively() {
        for b in 1..=3u64 {
            for n in 1..=4u64 {
                let slope = Slope::new(1, b).unwrap();
                for p in enumerate_paths(slope, n) {
                    let u = word_to_step_seq(&p);
                    let t = xi(&zeta(u.entries(), b).unwrap());
                    let expected: BTreeSet<StepSeq> = rotation_covers(&p)
                        .iter()
                        .map(word_to_step_seq)
                        .collect();
                    let mut got = BTreeSet::new();
                    for i in 2..=n {
                        let rotated = tree_rotation(&t, i);
                        if rotated == t {
                            continue;
                        }
                        let v = zeta_inverse(&xi_inverse(&rotated));
                        if let Ok(seq) = StepSeq::new(slope, v.clone()) {
                            got.insert(seq.clone());
                            let mut manual = u.entries().to_vec();
                            let k = primitive_subsequence(&u, i as usize);
                            for entry in &mut manual[i as usize - 1..k] {
                                *entry -= 1;
                            }
                            assert_eq!(seq.entries(), &manual[..]);
                        }
                    }
                    assert_eq!(got, expected);
                }
            }
        }
    }
}
