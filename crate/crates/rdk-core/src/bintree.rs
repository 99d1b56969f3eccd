//! Binary trees attached to comparable pairs of rational Dyck paths: the
//! two walk words read off the contour, the rotation that raises one word
//! one step while fixing the other, and the edge subdivisions whose strided
//! extraction splits a pair tree into the pair trees of its strips.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::orders::young_leq;
use crate::paren::DyckTuple;
use crate::paths::{gcd, DyckWord, Slope, Step};
use crate::Error;

/// A rooted binary tree stored as parallel child arrays; node 0 is the root.
///
/// Equality compares shapes, so trees built in different node orders agree
/// exactly when their walks agree.
#[derive(Debug, Clone)]
pub struct BinaryTree {
    left: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl BinaryTree {
    /// A single node with no children.
    pub fn leaf() -> BinaryTree {
        BinaryTree { left: vec![None], right: vec![None] }
    }

    pub fn node_count(&self) -> usize {
        self.left.len()
    }

    pub fn edge_count(&self) -> usize {
        self.node_count() - 1
    }

    pub fn left(&self, v: usize) -> Option<usize> {
        self.left[v]
    }

    pub fn right(&self, v: usize) -> Option<usize> {
        self.right[v]
    }

    fn fresh(&mut self) -> usize {
        self.left.push(None);
        self.right.push(None);
        self.left.len() - 1
    }

    fn add_left(&mut self, v: usize) -> usize {
        let w = self.fresh();
        self.left[v] = Some(w);
        w
    }

    fn add_right(&mut self, v: usize) -> usize {
        let w = self.fresh();
        self.right[v] = Some(w);
        w
    }
}

impl PartialEq for BinaryTree {
    fn eq(&self, other: &BinaryTree) -> bool {
        let mut stack = vec![(0usize, 0usize)];
        while let Some((v, w)) = stack.pop() {
            match (self.left[v], other.left[w]) {
                (Some(x), Some(y)) => stack.push((x, y)),
                (None, None) => {}
                _ => return false,
            }
            match (self.right[v], other.right[w]) {
                (Some(x), Some(y)) => stack.push((x, y)),
                (None, None) => {}
                _ => return false,
            }
        }
        true
    }
}

impl Eq for BinaryTree {}

/// One letter of the walk word. The walk goes around the tree keeping it on
/// the left, so every edge is passed once on the way down and once on the
/// way back up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaLetter {
    LeftFirst,
    LeftSecond,
    RightFirst,
    RightSecond,
}

impl OmegaLetter {
    pub fn to_char(self) -> char {
        match self {
            OmegaLetter::LeftFirst => '1',
            OmegaLetter::LeftSecond => '!',
            OmegaLetter::RightFirst => '2',
            OmegaLetter::RightSecond => '@',
        }
    }
}

/// The walk word of a tree: each node contributes its left edge and subtree
/// first, then its right edge and subtree.
pub fn omega(t: &BinaryTree) -> Vec<OmegaLetter> {
    fn emit(t: &BinaryTree, v: usize, out: &mut Vec<OmegaLetter>) {
        if let Some(l) = t.left(v) {
            out.push(OmegaLetter::LeftFirst);
            emit(t, l, out);
            out.push(OmegaLetter::LeftSecond);
        }
        if let Some(r) = t.right(v) {
            out.push(OmegaLetter::RightFirst);
            emit(t, r, out);
            out.push(OmegaLetter::RightSecond);
        }
    }
    let mut out = Vec::with_capacity(2 * t.edge_count());
    emit(t, 0, &mut out);
    out
}

fn omega1_steps(t: &BinaryTree) -> Vec<Step> {
    omega(t)
        .into_iter()
        .filter_map(|l| match l {
            OmegaLetter::LeftSecond => Some(Step::N),
            OmegaLetter::RightSecond => Some(Step::E),
            _ => None,
        })
        .collect()
}

fn omega2_steps(t: &BinaryTree) -> Vec<Step> {
    omega(t)
        .into_iter()
        .filter_map(|l| match l {
            OmegaLetter::LeftSecond => Some(Step::N),
            OmegaLetter::RightFirst => Some(Step::E),
            _ => None,
        })
        .collect()
}

fn path_from_steps(steps: Vec<Step>) -> Result<DyckWord, Error> {
    let ups = steps.iter().filter(|&&s| s == Step::N).count() as u64;
    let rights = steps.len() as u64 - ups;
    if ups == 0 || rights == 0 {
        return Err(Error::InvalidSlope { a: ups, b: rights });
    }
    let g = gcd(ups, rights);
    let slope = Slope::new(ups / g, rights / g).expect("counts divided by their gcd are coprime");
    DyckWord::new(slope, steps)
}

/// The path read from the second visits, upward closings as N and rightward
/// closings as E. The slope is inferred from the letter counts.
pub fn omega1(t: &BinaryTree) -> Result<DyckWord, Error> {
    path_from_steps(omega1_steps(t))
}

/// The path read from the left closings as N and the right openings as E.
pub fn omega2(t: &BinaryTree) -> Result<DyckWord, Error> {
    path_from_steps(omega2_steps(t))
}

fn runs(p: &DyckWord) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut steps = p.steps().iter().peekable();
    while steps.peek().is_some() {
        let mut ups = 0;
        while steps.peek() == Some(&&Step::N) {
            steps.next();
            ups += 1;
        }
        let mut rights = 0;
        while steps.peek() == Some(&&Step::E) {
            steps.next();
            rights += 1;
        }
        out.push((ups, rights));
    }
    out
}

/// The comb of a path: each run N^i E^j becomes a peak carrying a left chain
/// of i edges and a right chain of j edges, and the tree of the earlier runs
/// hangs from the bottom of the left chain.
pub fn tr(p: &DyckWord) -> BinaryTree {
    let mut t = BinaryTree::leaf();
    let mut attach = 0;
    for (i, j) in runs(p).into_iter().rev() {
        let mut w = attach;
        for _ in 0..j {
            w = t.add_right(w);
        }
        let mut v = attach;
        for _ in 0..i {
            v = t.add_left(v);
        }
        attach = v;
    }
    t
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Edges in second-visit order: position k of the walk word omega1 closes
/// edge k, and the same order labels the edges for extraction.
fn walk_edges(t: &BinaryTree) -> Vec<(usize, usize, Side)> {
    fn emit(t: &BinaryTree, v: usize, out: &mut Vec<(usize, usize, Side)>) {
        if let Some(l) = t.left(v) {
            emit(t, l, out);
            out.push((v, l, Side::Left));
        }
        if let Some(r) = t.right(v) {
            emit(t, r, out);
            out.push((v, r, Side::Right));
        }
    }
    let mut out = Vec::with_capacity(t.edge_count());
    emit(t, 0, &mut out);
    out
}

/// One rotation toward `target`: the first entry where the walk word
/// disagrees with the target is lowered to match it, while the second walk
/// word stays fixed. Rotations must walk toward a fixed target; retargeting
/// midway can reach trees whose cut pieces do not reassemble, which is
/// reported as a precondition failure.
pub fn binary_rotation(t: &BinaryTree, target: &DyckWord) -> Result<BinaryTree, Error> {
    let w = omega1(t)?;
    if w.slope() != target.slope() || w.n() != target.n() {
        return Err(Error::Precondition(format!(
            "rotation target lives in family ({}, {}) with n = {}, the walk word in ({}, {}) with n = {}",
            target.slope().a(),
            target.slope().b(),
            target.n(),
            w.slope().a(),
            w.slope().b(),
            w.n(),
        )));
    }
    if !young_leq(&w, target) {
        return Err(Error::Incomparable);
    }
    let ws = w.steps();
    let qs = target.steps();
    let k0 = match (0..ws.len()).find(|&k| ws[k] != qs[k]) {
        Some(k) => k,
        None => return Ok(t.clone()),
    };
    debug_assert!(ws[k0] == Step::E && qs[k0] == Step::N);
    let k1 = (k0 + 1..ws.len())
        .find(|&k| ws[k] == Step::N)
        .expect("a word below the target keeps an up step after the first disagreement");
    let k2 = (k1 + 1..ws.len()).find(|&k| ws[k] == Step::N).unwrap_or(ws.len());

    let edges = walk_edges(t);
    let (pe, x, e0_side) = edges[k0];
    let (pa, la, l_side) = edges[k1];
    debug_assert_eq!(e0_side, Side::Right);
    debug_assert_eq!(l_side, Side::Left);
    let mut prev = pa;
    for k in (k1 + 1..k2).rev() {
        let (p, c, side) = edges[k];
        if p != prev || side != Side::Right {
            return Err(Error::Precondition(format!(
                "the east run after position {} does not close a bare right chain",
                k1 + 1,
            )));
        }
        prev = c;
    }

    let mut out = t.clone();
    let chain = if k2 > k1 + 1 { out.right(pa) } else { None };
    out.right[pe] = None;
    let ll = out.left(la);
    let lr = out.right(la);
    out.left[pa] = None;
    if chain.is_some() {
        out.right[pa] = None;
    }
    let mut lml = 0;
    loop {
        if let Some(l) = out.left(lml) {
            lml = l;
        } else if let Some(r) = out.right(lml) {
            lml = r;
        } else {
            break;
        }
    }
    if lml != pa {
        return Err(Error::Precondition(format!(
            "the rotation at position {} does not hang from the leftmost leaf of the upper piece",
            k0 + 1,
        )));
    }
    out.left[lml] = ll;
    out.right[lml] = lr;
    out.left[la] = Some(x);
    out.right[la] = chain;
    let graft = if pe == la { lml } else { pe };
    out.right[graft] = Some(la);
    Ok(out)
}

/// The tree of a comparable pair, built from the comb of the smaller path by
/// rotations toward the larger one. Its walks read back the pair: omega1
/// gives q and omega2 gives p.
pub fn build_bqp(q: &DyckWord, p: &DyckWord) -> Result<BinaryTree, Error> {
    if p.slope() != q.slope() || p.n() != q.n() {
        return Err(Error::Precondition(format!(
            "paths from families ({}, {}) with n = {} and ({}, {}) with n = {} are never comparable",
            p.slope().a(),
            p.slope().b(),
            p.n(),
            q.slope().a(),
            q.slope().b(),
            q.n(),
        )));
    }
    if !young_leq(p, q) {
        return Err(Error::Incomparable);
    }
    let mut t = tr(p);
    while &omega1(&t).expect("a pair tree walk reads back a path") != q {
        t = binary_rotation(&t, q)?;
    }
    Ok(t)
}

/// Refines every left edge into a chain of `left_parts` left edges and every
/// right edge into a chain of `right_parts` right edges, then appends
/// `extra_right` right edges below the rightmost node.
pub fn subdivide(
    t: &BinaryTree,
    left_parts: usize,
    right_parts: usize,
    extra_right: usize,
) -> Result<BinaryTree, Error> {
    if left_parts == 0 || right_parts == 0 {
        return Err(Error::Precondition(format!(
            "edges cannot be divided into {left_parts} and {right_parts} parts",
        )));
    }
    let mut out = BinaryTree::leaf();
    let mut image = vec![usize::MAX; t.node_count()];
    image[0] = 0;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if let Some(c) = t.left(v) {
            let mut w = image[v];
            for _ in 0..left_parts {
                w = out.add_left(w);
            }
            image[c] = w;
            stack.push(c);
        }
        if let Some(c) = t.right(v) {
            let mut w = image[v];
            for _ in 0..right_parts {
                w = out.add_right(w);
            }
            image[c] = w;
            stack.push(c);
        }
    }
    let mut v = 0;
    while let Some(r) = out.right(v) {
        v = r;
    }
    for _ in 0..extra_right {
        v = out.add_right(v);
    }
    Ok(out)
}

/// Splits a subdivided pair tree into `r` component trees: the letters of
/// both walk words are dealt into `r` classes by position, counting from 1,
/// and component i is the pair tree rebuilt from its two class-i words.
pub fn extract_subtrees(t: &BinaryTree, r: usize) -> Result<Vec<BinaryTree>, Error> {
    if r == 0 {
        return Err(Error::Precondition(
            "extraction needs a positive number of components".into(),
        ));
    }
    if t.edge_count() % r != 0 {
        return Err(Error::Precondition(format!(
            "a tree with {} edges does not split into {} components",
            t.edge_count(),
            r,
        )));
    }
    let hi = omega1(t)?;
    let lo = omega2(t)?;
    let mut components = Vec::with_capacity(r);
    for i in 1..=r {
        let class = |steps: &[Step]| {
            path_from_steps(steps.iter().skip(i - 1).step_by(r).copied().collect())
        };
        components.push(build_bqp(&class(hi.steps())?, &class(lo.steps())?)?);
    }
    Ok(components)
}

/// Reads the two strided tuples of a subdivided tree: component j collects
/// the walk letters at positions b+1-j, 2b+1-j, and so on, once for the
/// omega1 reading and once for the omega2 reading.
pub fn d_words(t: &BinaryTree, b: usize) -> Result<(DyckTuple, DyckTuple), Error> {
    if b == 0 {
        return Err(Error::Precondition("the stride must be positive".into()));
    }
    let strided = |steps: Vec<Step>| -> Result<DyckTuple, Error> {
        if steps.len() % b != 0 {
            return Err(Error::Precondition(format!(
                "a walk of {} letters does not split into strides of {}",
                steps.len(),
                b,
            )));
        }
        let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
        let mut paths = Vec::with_capacity(b);
        for j in 1..=b {
            let component: Vec<Step> = steps.iter().skip(b - j).step_by(b).copied().collect();
            paths.push(DyckWord::new(slope, component)?);
        }
        DyckTuple::new(paths)
    };
    Ok((strided(omega1_steps(t))?, strided(omega2_steps(t))?))
}

#[cfg(test)]
mod tests {
    use alloc::string::String;
    use alloc::vec::Vec;

    use super::*;
    use crate::paren::{alpha_ii, alpha_star, gamma_ii};
    use crate::paths::{enumerate_paths, lowest_path, word_to_step_seq};
    use crate::stirling::zeta_g;

    fn slope(a: u64, b: u64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    fn word(a: u64, b: u64, text: &str) -> DyckWord {
        DyckWord::from_ascii(slope(a, b), text).unwrap()
    }

    fn walk_string(t: &BinaryTree) -> String {
        omega(t).iter().map(|l| l.to_char()).collect()
    }

    /// The left tree of the three-tree chain for NENENEENEE: peaks for the
    /// runs (1,1)(1,1)(1,2)(1,2) strung along the left spine.
    fn running_comb() -> BinaryTree {
        let mut t = BinaryTree::leaf();
        let c = t.add_left(0);
        let r = t.add_right(0);
        t.add_right(r);
        let b = t.add_left(c);
        let u = t.add_right(c);
        t.add_right(u);
        let a = t.add_left(b);
        t.add_right(b);
        t.add_left(a);
        t.add_right(a);
        t
    }

    #[test]
    fn the_comb_of_the_running_example_matches_the_figure() {
        let p = word(2, 3, "NENENEENEE");
        assert_eq!(tr(&p), running_comb());
        assert_eq!(walk_string(&tr(&p)), "1111!2@!2@!22@@!22@@");
    }

    #[test]
    fn comb_walks_read_back_the_path() {
        for (a, b, max_n) in [(1, 1, 4), (1, 2, 3), (2, 1, 2), (2, 3, 2), (1, 3, 2), (3, 2, 1)] {
            for n in 1..=max_n {
                for p in enumerate_paths(slope(a, b), n) {
                    let t = tr(&p);
                    assert_eq!(t.edge_count() as u64, (a + b) * n);
                    assert_eq!(omega1(&t).unwrap(), p);
                    assert_eq!(omega2(&t).unwrap(), p);
                }
            }
        }
    }

    #[test]
    fn every_edge_is_walked_twice() {
        let t = tr(&word(2, 3, "NENENEENEE"));
        let w = omega(&t);
        assert_eq!(w.len(), 2 * t.edge_count());
        let firsts = w
            .iter()
            .filter(|l| matches!(l, OmegaLetter::LeftFirst | OmegaLetter::RightFirst))
            .count();
        assert_eq!(firsts, t.edge_count());
    }

    #[test]
    fn walks_of_childless_trees_are_not_paths() {
        assert!(matches!(omega1(&BinaryTree::leaf()), Err(Error::InvalidSlope { .. })));
        let mut t = BinaryTree::leaf();
        t.add_left(0);
        assert!(matches!(omega1(&t), Err(Error::InvalidSlope { .. })));
        assert!(matches!(omega2(&t), Err(Error::InvalidSlope { .. })));
    }

    #[test]
    fn a_single_run_comb_is_one_peak() {
        let t = tr(&word(1, 1, "NE"));
        let mut expected = BinaryTree::leaf();
        expected.add_right(0);
        expected.add_left(0);
        assert_eq!(t, expected);
        assert_eq!(omega1(&t).unwrap(), word(1, 1, "NE"));
        assert_eq!(omega2(&t).unwrap(), word(1, 1, "NE"));
    }

    /// The middle tree of the chain: the first rotation hangs the old comb
    /// bottom off the transplanted east chain.
    fn middle_tree() -> BinaryTree {
        let mut t = BinaryTree::leaf();
        let c = t.add_left(0);
        let r = t.add_right(0);
        t.add_right(r);
        let a = t.add_left(c);
        let b = t.add_right(c);
        t.add_left(a);
        t.add_right(a);
        t.add_left(b);
        let c1 = t.add_right(b);
        t.add_right(c1);
        t
    }

    /// The right tree of the chain, the pair tree of NENNEENEEE over
    /// NENENEENEE.
    fn pair_tree() -> BinaryTree {
        let mut t = BinaryTree::leaf();
        let a = t.add_left(0);
        let c = t.add_right(0);
        t.add_left(a);
        t.add_right(a);
        let b = t.add_left(c);
        let d1 = t.add_right(c);
        t.add_right(d1);
        t.add_left(b);
        let c1 = t.add_right(b);
        t.add_right(c1);
        t
    }

    #[test]
    fn rotations_follow_the_documented_chain() {
        let p = word(2, 3, "NENENEENEE");
        let p1 = word(2, 3, "NENNEEENEE");
        let q = word(2, 3, "NENNEENEEE");
        let t0 = tr(&p);
        let t1 = binary_rotation(&t0, &q).unwrap();
        assert_eq!(t1, middle_tree());
        assert_eq!(omega1(&t1).unwrap(), p1);
        assert_eq!(omega2(&t1).unwrap(), p);
        assert_eq!(binary_rotation(&t0, &p1).unwrap(), t1);
        let t2 = binary_rotation(&t1, &q).unwrap();
        assert_eq!(t2, pair_tree());
        assert_eq!(omega1(&t2).unwrap(), q);
        assert_eq!(omega2(&t2).unwrap(), p);
    }

    #[test]
    fn rotation_with_the_current_word_is_the_identity() {
        let q = word(2, 3, "NENNEENEEE");
        let t = build_bqp(&q, &word(2, 3, "NENENEENEE")).unwrap();
        assert_eq!(binary_rotation(&t, &q).unwrap(), t);
    }

    #[test]
    fn rotation_rejects_targets_below_the_walk_word() {
        let p = word(2, 3, "NENENEENEE");
        let q = word(2, 3, "NENNEENEEE");
        let t = build_bqp(&q, &p).unwrap();
        assert!(matches!(binary_rotation(&t, &p), Err(Error::Incomparable)));
        let other = word(1, 1, "NE");
        assert!(matches!(binary_rotation(&t, &other), Err(Error::Precondition(_))));
    }

    #[test]
    fn rotation_jumps_a_whole_east_run_at_once() {
        let p = word(1, 2, "NEENEE");
        let q = word(1, 2, "NNEEEE");
        let t = binary_rotation(&tr(&p), &q).unwrap();
        assert_eq!(omega1(&t).unwrap(), q);
        assert_eq!(omega2(&t).unwrap(), p);
        let mut expected = BinaryTree::leaf();
        expected.add_left(0);
        let b1 = expected.add_right(0);
        let a = expected.add_right(b1);
        let d1 = expected.add_right(a);
        expected.add_right(d1);
        expected.add_left(a);
        assert_eq!(t, expected);
    }

    #[test]
    fn build_of_equal_paths_is_the_comb() {
        let p = word(2, 3, "NENENEENEE");
        assert_eq!(build_bqp(&p, &p).unwrap(), tr(&p));
    }

    #[test]
    fn build_matches_the_figure() {
        let p = word(2, 3, "NENENEENEE");
        let q = word(2, 3, "NENNEENEEE");
        assert_eq!(build_bqp(&q, &p).unwrap(), pair_tree());
    }

    #[test]
    fn build_rejects_incomparable_pairs() {
        let p = word(2, 3, "NENENEENEE");
        let q = word(2, 3, "NENNEENEEE");
        assert!(matches!(build_bqp(&p, &q), Err(Error::Incomparable)));
        assert!(matches!(build_bqp(&q, &word(1, 1, "NE")), Err(Error::Precondition(_))));
    }

    #[test]
    fn build_walks_agree_on_every_comparable_pair() {
        for (a, b, n) in [(1, 1, 3), (1, 2, 2), (2, 1, 2), (2, 3, 1), (1, 3, 2)] {
            let paths: Vec<DyckWord> = enumerate_paths(slope(a, b), n).collect();
            for p in &paths {
                for q in &paths {
                    if !young_leq(p, q) {
                        continue;
                    }
                    let t = build_bqp(q, p).unwrap();
                    assert_eq!(omega1(&t).unwrap(), *q);
                    assert_eq!(omega2(&t).unwrap(), *p);
                }
            }
        }
    }

    #[test]
    fn subdivision_refines_each_edge() {
        let t = tr(&word(1, 1, "NE"));
        let fine = subdivide(&t, 2, 3, 1).unwrap();
        let mut expected = BinaryTree::leaf();
        let l1 = expected.add_left(0);
        expected.add_left(l1);
        let mut w = 0;
        for _ in 0..4 {
            w = expected.add_right(w);
        }
        assert_eq!(fine, expected);
        assert_eq!(subdivide(&t, 1, 1, 0).unwrap(), t);
        assert!(subdivide(&t, 0, 1, 0).is_err());
    }

    #[test]
    fn extraction_with_one_class_returns_the_tree() {
        let t = pair_tree();
        assert_eq!(extract_subtrees(&t, 1).unwrap(), vec![t.clone()]);
        assert!(extract_subtrees(&t, 0).is_err());
    }

    fn worked_pair_tree() -> BinaryTree {
        build_bqp(
            &word(2, 3, "NENENEENEE"),
            &lowest_path(slope(2, 3), 2),
        )
        .unwrap()
    }

    #[test]
    fn the_pair_tree_of_the_worked_example_matches_the_figure() {
        let t = worked_pair_tree();
        let mut expected = BinaryTree::leaf();
        let a1 = expected.add_left(0);
        let y = expected.add_right(0);
        expected.add_right(y);
        let a2 = expected.add_left(a1);
        let u = expected.add_right(a1);
        expected.add_left(a2);
        expected.add_right(a2);
        let w = expected.add_left(u);
        expected.add_right(u);
        expected.add_right(w);
        assert_eq!(t, expected);
    }

    #[test]
    fn extraction_splits_the_pair_tree_into_vertical_strip_pairs() {
        let t = worked_pair_tree();
        let fine = subdivide(&t, 3, 2, 0).unwrap();
        assert_eq!(fine.edge_count(), 24);
        let parts = extract_subtrees(&fine, 2).unwrap();
        assert_eq!(parts.len(), 2);
        let theta = [
            (word(1, 1, "NNENENNEENEE"), word(1, 1, "NNENEENNENEE")),
            (word(1, 1, "NENNENEENNEE"), word(1, 1, "NENNEENENNEE")),
        ];
        for (part, (hi, lo)) in parts.iter().zip(&theta) {
            assert_eq!(part.edge_count(), 12);
            assert_eq!(omega1(part).unwrap(), *hi);
            assert_eq!(omega2(part).unwrap(), *lo);
            assert_eq!(*part, build_bqp(hi, lo).unwrap());
        }
    }

    #[test]
    fn the_dual_family_reads_the_sharp_words() {
        let p = word(2, 3, "NENENEENEE");
        let p0 = lowest_path(slope(2, 3), 2);
        let c_tilde = subdivide(&build_bqp(&p.sharp(), &p0.sharp()).unwrap(), 2, 3, 0).unwrap();
        let parts = extract_subtrees(&c_tilde, 2).unwrap();
        let expected = [
            (word(1, 1, "NNEENNENEENE"), word(1, 1, "NNEENENNEENE")),
            (word(1, 1, "NNENNEENENEE"), word(1, 1, "NNENEENNENEE")),
        ];
        for (part, (hi, lo)) in parts.iter().zip(&expected) {
            assert_eq!(omega1(part).unwrap(), *hi);
            assert_eq!(omega2(part).unwrap(), *lo);
        }

        let pi = zeta_g(&[0, 0, 1, 1, 2, 3], 3, 1, 2).unwrap();
        let pi0 = zeta_g(&[0, 0, 1, 2, 2, 3], 3, 1, 2).unwrap();
        assert_eq!(alpha_star(&pi).to_string(), "((**)*((**)*(**)*(**))*)");
        assert_eq!(alpha_star(&pi0).to_string(), "((**)*(**)*((**)*(**)*))");
        let hi_words: Vec<DyckWord> = parts.iter().rev().map(|t| omega1(t).unwrap()).collect();
        let lo_words: Vec<DyckWord> = parts.iter().rev().map(|t| omega2(t).unwrap()).collect();
        assert_eq!(alpha_ii(&pi).components(), &hi_words[..]);
        assert_eq!(alpha_ii(&pi0).components(), &lo_words[..]);

        let b_tilde = subdivide(&build_bqp(&p, &p0).unwrap(), 3, 2, 0).unwrap();
        let b_parts = extract_subtrees(&b_tilde, 2).unwrap();
        for (i, part) in b_parts.iter().enumerate() {
            let dual = &parts[b_parts.len() - 1 - i];
            assert_eq!(omega1(part).unwrap(), omega1(dual).unwrap().sharp());
            assert_eq!(omega2(part).unwrap(), omega2(dual).unwrap().sharp());
        }
    }

    #[test]
    fn strided_words_of_the_interleaved_tree_are_the_parenthesis_tuples() {
        let p = word(2, 3, "NENENEENEE");
        let p0 = lowest_path(slope(2, 3), 2);
        let t = subdivide(&build_bqp(&p, &p0).unwrap(), 3, 1, 6).unwrap();
        assert_eq!(t.edge_count(), 24);
        let (d1, d2) = d_words(&t, 3).unwrap();
        let u_p = word_to_step_seq(&p);
        let u_p0 = word_to_step_seq(&p0);
        assert_eq!(d1, gamma_ii(u_p.entries(), 3).unwrap());
        assert_eq!(d2, gamma_ii(u_p0.entries(), 3).unwrap());
    }

    #[test]
    fn strided_words_at_slope_one_are_the_pair_itself() {
        let p = word(1, 1, "NNEENE");
        let p0 = lowest_path(slope(1, 1), 3);
        let t = build_bqp(&p, &p0).unwrap();
        let (d1, d2) = d_words(&t, 1).unwrap();
        assert_eq!(d1.components(), &[p.clone()]);
        assert_eq!(d2.components(), &[p0.clone()]);
        assert!(d_words(&t, 5).is_err());
        assert!(d_words(&t, 0).is_err());
    }
}
