//! Cover relations and posets on a family of paths: the Young order, the
//! rotation order built from primitive subsequences, and the rotation
//! order built from horizontal distances.
//!
//! All three orders point the same way: covers move toward the highest
//! path, so the step sequence decreases entrywise as one goes up.

use alloc::vec;
use alloc::vec::Vec;

use crate::paths::{
    enumerate_paths, lowest_path, step_seq_to_word, word_to_step_seq, DyckWord, Slope, Step,
    StepSeq,
};
use crate::{Budget, Error};

/// The index k of the primitive subsequence of u at position i (both
/// 1-based): the largest k with a(u_j − u_i) < b(j − i) for every j in
/// (i, k].
///
/// Panics when i is out of range.
pub fn primitive_subsequence(u: &StepSeq, i: usize) -> usize {
    let a = u.slope().a();
    let b = u.slope().b();
    let v = u.entries();
    assert!(i >= 1 && i <= v.len(), "position {i} out of range");
    let ui = v[i - 1];
    let mut k = i;
    while k < v.len() {
        if a * (v[k] - ui) < b * (k + 1 - i) as u64 {
            k += 1;
        } else {
            break;
        }
    }
    k
}

/// All paths covering P in the rotation order: pick i with u_{i−1} < u_i
/// and decrement the primitive subsequence at i by one.
///
/// Results are sorted by step sequence; the highest path gets an empty set.
pub fn rotation_covers(p: &DyckWord) -> Vec<DyckWord> {
    let u = word_to_step_seq(p);
    let v = u.entries();
    let mut out = Vec::new();
    for i in 2..=v.len() {
        if v[i - 2] < v[i - 1] {
            let k = primitive_subsequence(&u, i);
            let mut w = v.to_vec();
            for entry in &mut w[i - 1..k] {
                *entry -= 1;
            }
            let uw = StepSeq::new(p.slope(), w).unwrap();
            out.push(step_seq_to_word(&uw));
        }
    }
    sort_by_step_seq(&mut out);
    out
}

/// All paths covering P in the Young order: decrement a single entry u_i
/// with u_{i−1} < u_i, i.e. delete one box of the Young diagram.
pub fn young_covers(p: &DyckWord) -> Vec<DyckWord> {
    let u = word_to_step_seq(p);
    let v = u.entries();
    let mut out = Vec::new();
    for i in 1..v.len() {
        if v[i - 1] < v[i] {
            let mut w = v.to_vec();
            w[i] -= 1;
            let uw = StepSeq::new(p.slope(), w).unwrap();
            out.push(step_seq_to_word(&uw));
        }
    }
    sort_by_step_seq(&mut out);
    out
}

/// All paths covering P in the horizontal-distance rotation order
/// relative to the lowest path P0: at each point p preceded by E and
/// followed by N, exchange that E with the subpath running from p to the
/// first later point p′ at equal horizontal distance.
///
/// Panics when P0 is not the lowest path of P's family.
pub fn rotation_covers_hor(p: &DyckWord, p0: &DyckWord) -> Vec<DyckWord> {
    assert!(
        *p0 == lowest_path(p.slope(), p.n()),
        "reference path must be the lowest path of the family"
    );
    let a = p.slope().a();
    let b = p.slope().b();
    let an = a * p.n();
    let bn = b * p.n();
    let hor = |pt: (u64, u64)| -> i64 {
        let reach = if pt.1 == an { bn } else { b * pt.1 / a };
        reach as i64 - pt.0 as i64
    };
    let steps = p.steps();
    let pts = p.lattice_points();
    let mut out = Vec::new();
    for idx in 0..steps.len().saturating_sub(1) {
        if steps[idx] != Step::E || steps[idx + 1] != Step::N {
            continue;
        }
        let target = hor(pts[idx + 1]);
        let t = (idx + 2..pts.len())
            .find(|&t| hor(pts[t]) == target)
            .expect("a later point at equal horizontal distance exists");
        let mut w = Vec::with_capacity(steps.len());
        w.extend_from_slice(&steps[..idx]);
        w.extend_from_slice(&steps[idx + 1..t]);
        w.push(Step::E);
        w.extend_from_slice(&steps[t..]);
        out.push(DyckWord::new(p.slope(), w).unwrap());
    }
    sort_by_step_seq(&mut out);
    out
}

/// Whether P ≤ Q in the Young order, i.e. u(P) ≥ u(Q) entrywise.
pub fn young_leq(p: &DyckWord, q: &DyckWord) -> bool {
    assert_eq!(p.slope(), q.slope());
    assert_eq!(p.n(), q.n());
    let up = word_to_step_seq(p);
    let uq = word_to_step_seq(q);
    up.entries().iter().zip(uq.entries()).all(|(x, y)| x >= y)
}

fn sort_by_step_seq(words: &mut Vec<DyckWord>) {
    words.sort_by(|p, q| {
        word_to_step_seq(p)
            .entries()
            .to_vec()
            .cmp(&word_to_step_seq(q).entries().to_vec())
    });
    words.dedup();
}

/// Which cover relation a poset is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    Young,
    Rotation,
    RotationHor,
}

/// A family of paths together with the cover graph of one of the orders.
///
/// Elements are sorted lexicographically by step sequence; each cover pair
/// (i, j) says that elements[i] is covered by elements[j].
#[derive(Debug, Clone)]
pub struct Poset {
    slope: Slope,
    n: u64,
    elements: Vec<StepSeq>,
    covers: Vec<(usize, usize)>,
}

impl Poset {
    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn elements(&self) -> &[StepSeq] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Whether elements[i] ≤ elements[j], by walking the cover graph.
    pub fn le(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        let mut up = vec![Vec::new(); self.elements.len()];
        for &(lo, hi) in &self.covers {
            up[lo].push(hi);
        }
        let mut seen = vec![false; self.elements.len()];
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            if v == j {
                return true;
            }
            for &w in &up[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

/// Materializes the cover graph of the chosen order over all paths of the
/// family, charging the budget once per element and once per cover.
pub fn build_poset(
    slope: Slope,
    n: u64,
    kind: OrderKind,
    budget: &mut Budget,
) -> Result<Poset, Error> {
    let mut elements: Vec<StepSeq> = Vec::new();
    for p in enumerate_paths(slope, n) {
        budget.charge(1)?;
        elements.push(word_to_step_seq(&p));
    }
    elements.sort();
    let p0 = lowest_path(slope, n);
    let mut covers = Vec::new();
    for (i, u) in elements.iter().enumerate() {
        let p = step_seq_to_word(u);
        let ups = match kind {
            OrderKind::Young => young_covers(&p),
            OrderKind::Rotation => rotation_covers(&p),
            OrderKind::RotationHor => rotation_covers_hor(&p, &p0),
        };
        for q in ups {
            budget.charge(1)?;
            let j = elements
                .binary_search(&word_to_step_seq(&q))
                .expect("cover stays within the family");
            covers.push((i, j));
        }
    }
    covers.sort_unstable();
    Ok(Poset { slope, n, elements, covers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn slope(a: u64, b: u64) -> Slope {
        Slope::new(a, b).unwrap()
    }

    fn path(a: u64, b: u64, u: &[u64]) -> DyckWord {
        step_seq_to_word(&StepSeq::new(slope(a, b), u.to_vec()).unwrap())
    }

    fn cover_seqs(words: &[DyckWord]) -> Vec<Vec<u64>> {
        words
            .iter()
            .map(|p| word_to_step_seq(p).entries().to_vec())
            .collect()
    }

    #[test]
    fn primitive_subsequence_examples() {
        let u = StepSeq::new(slope(2, 3), vec![0, 1, 2, 4]).unwrap();
        assert_eq!(primitive_subsequence(&u, 2), 3);
        assert_eq!(primitive_subsequence(&u, 1), 4);
        let u0 = StepSeq::new(slope(2, 3), vec![0, 0, 0, 0]).unwrap();
        for i in 1..=4 {
            assert_eq!(primitive_subsequence(&u0, i), 4);
        }
        let v = StepSeq::new(slope(2, 3), vec![0, 1, 3, 4]).unwrap();
        assert_eq!(primitive_subsequence(&v, 2), 2);
    }

    #[test]
    fn rotation_covers_of_figure_path() {
        let p = path(2, 3, &[0, 1, 2, 4]);
        assert_eq!(
            cover_seqs(&rotation_covers(&p)),
            vec![vec![0, 0, 1, 4], vec![0, 1, 1, 4], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn rotation_covers_of_highest_path_is_empty() {
        let p = path(2, 3, &[0, 0, 0, 0]);
        assert!(rotation_covers(&p).is_empty());
    }

    #[test]
    fn rotation_covers_steep_slope() {
        let p = path(2, 1, &[0, 0, 1, 1, 2, 2]);
        assert_eq!(
            cover_seqs(&rotation_covers(&p)),
            vec![vec![0, 0, 0, 0, 2, 2], vec![0, 0, 1, 1, 1, 1]]
        );
    }

    #[test]
    fn young_covers_of_figure_path() {
        let p = path(2, 3, &[0, 1, 2, 4]);
        assert_eq!(
            cover_seqs(&young_covers(&p)),
            vec![vec![0, 0, 2, 4], vec![0, 1, 1, 4], vec![0, 1, 2, 3]]
        );
        assert!(young_covers(&path(2, 3, &[0, 0, 0, 0])).is_empty());
        assert_eq!(cover_seqs(&young_covers(&path(1, 1, &[0, 1]))), vec![vec![0, 0]]);
    }

    #[test]
    fn hor_covers_match_rotation_on_figure_path() {
        let p = path(2, 3, &[0, 1, 2, 4]);
        let p0 = lowest_path(slope(2, 3), 2);
        assert_eq!(
            cover_seqs(&rotation_covers_hor(&p, &p0)),
            vec![vec![0, 0, 1, 4], vec![0, 1, 1, 4], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn hor_covers_steep_slope() {
        let p = path(2, 1, &[0, 0, 1, 1, 2, 2]);
        let p0 = lowest_path(slope(2, 1), 3);
        assert_eq!(
            cover_seqs(&rotation_covers_hor(&p, &p0)),
            vec![vec![0, 0, 0, 1, 2, 2], vec![0, 0, 1, 1, 1, 2]]
        );
    }

    #[test]
    fn hor_covers_of_highest_path_is_empty() {
        let p = path(2, 3, &[0, 0, 0, 0]);
        let p0 = lowest_path(slope(2, 3), 2);
        assert!(rotation_covers_hor(&p, &p0).is_empty());
    }

    #[test]
    fn the_two_rotation_variants_differ_on_the_lowest_path_at_2_3() {
        let p0 = lowest_path(slope(2, 3), 2);
        let rot = cover_seqs(&rotation_covers(&p0));
        let hor = cover_seqs(&rotation_covers_hor(&p0, &p0));
        assert_eq!(
            rot,
            vec![vec![0, 0, 3, 4], vec![0, 1, 2, 3], vec![0, 1, 3, 3]]
        );
        assert_eq!(
            hor,
            vec![vec![0, 0, 3, 4], vec![0, 1, 2, 4], vec![0, 1, 3, 3]]
        );
    }

    #[test]
    fn young_leq_is_entrywise() {
        let p = path(2, 3, &[0, 1, 2, 4]);
        let q = path(2, 3, &[0, 0, 1, 4]);
        assert!(young_leq(&p, &q));
        assert!(!young_leq(&q, &p));
        assert!(young_leq(&p, &p));
    }

    #[test]
    fn poset_sizes() {
        let mut budget = Budget::default();
        let y = build_poset(slope(1, 1), 3, OrderKind::Young, &mut budget).unwrap();
        assert_eq!(y.elements().len(), 5);
        assert_eq!(y.covers().len(), 5);
        for kind in [OrderKind::Young, OrderKind::Rotation, OrderKind::RotationHor] {
            let p = build_poset(slope(1, 1), 2, kind, &mut budget).unwrap();
            assert_eq!(p.elements().len(), 2);
            assert_eq!(p.covers().len(), 1);
        }
        let p = build_poset(slope(2, 3), 1, OrderKind::Young, &mut budget).unwrap();
        assert_eq!(p.elements().len(), 2);
        assert_eq!(p.covers().len(), 1);
    }

    #[test]
    fn poset_le_walks_covers() {
        let mut budget = Budget::default();
        let y = build_poset(slope(2, 3), 2, OrderKind::Young, &mut budget).unwrap();
        let bottom = y
            .elements()
            .iter()
            .position(|u| u.entries() == [0, 1, 3, 4])
            .unwrap();
        let top = y
            .elements()
            .iter()
            .position(|u| u.entries() == [0, 0, 0, 0])
            .unwrap();
        assert!(y.le(bottom, top));
        assert!(!y.le(top, bottom));
    }

    #[test]
    fn rotation_covers_decrement_a_contiguous_block() {
        for p in enumerate_paths(slope(2, 3), 2) {
            let u = word_to_step_seq(&p);
            for q in rotation_covers(&p) {
                let uq = word_to_step_seq(&q);
                let diffs: Vec<u64> = u
                    .entries()
                    .iter()
                    .zip(uq.entries())
                    .map(|(x, y)| x - y)
                    .collect();
                let ones: Vec<usize> =
                    diffs.iter().enumerate().filter(|(_, &d)| d == 1).map(|(i, _)| i).collect();
                assert!(!ones.is_empty());
                assert!(diffs.iter().all(|&d| d <= 1));
                assert_eq!(ones.last().unwrap() - ones[0] + 1, ones.len());
            }
        }
    }

    #[test]
    fn young_covers_decrement_exactly_one_box() {
        for p in enumerate_paths(slope(2, 3), 2) {
            let sum: u64 = word_to_step_seq(&p).entries().iter().sum();
            for q in young_covers(&p) {
                let qsum: u64 = word_to_step_seq(&q).entries().iter().sum();
                assert_eq!(sum - qsum, 1);
            }
        }
    }

    #[test]
    fn rotation_covers_refine_into_young_chains() {
        let mut budget = Budget::default();
        for (a, b, n) in [(1, 1, 4), (2, 3, 2), (2, 1, 3)] {
            let y = build_poset(slope(a, b), n, OrderKind::Young, &mut budget).unwrap();
            let index = |w: &DyckWord| {
                y.elements()
                    .binary_search(&word_to_step_seq(w))
                    .unwrap()
            };
            for p in enumerate_paths(slope(a, b), n) {
                for q in rotation_covers(&p) {
                    assert!(y.le(index(&p), index(&q)));
                }
            }
        }
    }

    #[test]
    fn hor_and_rotation_agree_when_a_is_one() {
        for (b, n) in [(1u64, 4u64), (2, 3), (3, 2), (5, 1)] {
            let s = slope(1, b);
            let p0 = lowest_path(s, n);
            for p in enumerate_paths(s, n) {
                let rot: BTreeSet<Vec<u64>> = cover_seqs(&rotation_covers(&p)).into_iter().collect();
                let hor: BTreeSet<Vec<u64>> =
                    cover_seqs(&rotation_covers_hor(&p, &p0)).into_iter().collect();
                assert_eq!(rot, hor, "diverged at u = {:?}", word_to_step_seq(&p).entries());
            }
        }
    }
}
