//! Stirling permutations with fixed multiplicity: construction from
//! insertion sequences, pattern avoidance, and the cover moves that mirror
//! the Young and rotation orders on paths.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::iter::repeat_n;

use crate::Error;

/// A permutation of the multiset {1^b, ..., n^b} in which any value lying
/// between two copies of i is larger than i.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingPerm {
    n: u64,
    b: u64,
    entries: Vec<u64>,
}

impl StirlingPerm {
    pub fn new(b: u64, entries: Vec<u64>) -> Result<StirlingPerm, Error> {
        if b == 0 {
            return Err(Error::NotStirling(String::from(
                "multiplicity must be positive",
            )));
        }
        let len = entries.len() as u64;
        if len % b != 0 {
            return Err(Error::NotStirling(format!(
                "length {len} is not a multiple of the multiplicity {b}"
            )));
        }
        let n = len / b;
        let mut counts = alloc::vec![0u64; n as usize];
        for &v in &entries {
            if v < 1 || v > n {
                return Err(Error::NotStirling(format!("value {v} out of range")));
            }
            counts[(v - 1) as usize] += 1;
        }
        if let Some(v) = counts.iter().position(|&c| c != b) {
            return Err(Error::NotStirling(format!(
                "value {} occurs {} times, expected {b}",
                v + 1,
                counts[v]
            )));
        }
        for i in 1..=n {
            let first = entries.iter().position(|&v| v == i).unwrap();
            let last = entries.iter().rposition(|&v| v == i).unwrap();
            for p in first + 1..last {
                if entries[p] < i {
                    return Err(Error::NotStirling(format!(
                        "value {} lies between two copies of {i}",
                        entries[p]
                    )));
                }
            }
        }
        Ok(StirlingPerm { n, b, entries })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }
}

/// One-line notation: plain digits while every value is a single digit,
/// comma-separated otherwise.
impl fmt::Display for StirlingPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for &v in &self.entries {
                write!(f, "{v}")?;
            }
        } else {
            for (i, &v) in self.entries.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Builds a Stirling permutation by inserting the block i^b so that
/// exactly u_i symbols precede it, for i = 1, 2, ....
///
/// The insertion sequence need not be weakly increasing; each entry only
/// has to point at an existing position.
pub fn zeta(u: &[u64], b: u64) -> Result<StirlingPerm, Error> {
    let mut out: Vec<u64> = Vec::with_capacity(u.len() * b as usize);
    for (idx, &ui) in u.iter().enumerate() {
        let limit = idx as u64 * b;
        if ui > limit {
            return Err(Error::InsertionRange { value: idx as u64 + 1, position: ui, limit });
        }
        let at = ui as usize;
        out.splice(at..at, repeat_n(idx as u64 + 1, b as usize));
    }
    Ok(StirlingPerm::new(b, out).expect("insertion always yields a valid permutation"))
}

/// Recovers the insertion sequence: u_i counts the symbols before the
/// leftmost i once every value above i is deleted.
pub fn zeta_inverse(pi: &StirlingPerm) -> Vec<u64> {
    let v = pi.entries();
    (1..=pi.n)
        .map(|i| {
            let first = v.iter().position(|&x| x == i).unwrap();
            v[..first].iter().filter(|&&x| x < i).count() as u64
        })
        .collect()
}

/// ζ applied to the entrywise-scaled sequence (g_num/g_den)·u.
pub fn zeta_g(u: &[u64], g_num: u64, g_den: u64, b: u64) -> Result<StirlingPerm, Error> {
    assert!(g_den != 0, "scaling denominator must be nonzero");
    let mut scaled = Vec::with_capacity(u.len());
    for &ui in u {
        let num = ui * g_num;
        if num % g_den != 0 {
            return Err(Error::NonIntegralScaling { numerator: num, denominator: g_den });
        }
        scaled.push(num / g_den);
    }
    zeta(&scaled, b)
}

/// Whether no positions i < j < k exist with π_j < π_k < π_i.
pub fn avoids_312(pi: &StirlingPerm) -> bool {
    let v = pi.entries();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[j] >= v[i] {
                continue;
            }
            for k in j + 1..v.len() {
                if v[j] < v[k] && v[k] < v[i] {
                    return false;
                }
            }
        }
    }
    true
}

/// The Young cover move at position i (1-based): with r = π_i < π_{i+1},
/// let s be the least value above r whose copies all lie after i; the
/// joint subsequence r^k s^b r^{b−k} becomes r^{k−1} s^b r^{b−k+1}.
///
/// On path images this decrements u_s by one.
pub fn young_cover_chi(pi: &StirlingPerm, i: usize) -> Result<StirlingPerm, Error> {
    let v = pi.entries();
    if i < 1 || i >= v.len() {
        return Err(Error::IndexOutOfRange { index: i, len: v.len() });
    }
    let r = v[i - 1];
    if r >= v[i] {
        return Err(Error::Precondition(format!("no rise at position {i}")));
    }
    let s = (r + 1..=pi.n)
        .find(|&s| v.iter().position(|&x| x == s).unwrap() >= i)
        .expect("the value following a rise starts after it");
    let mut positions: Vec<usize> = (0..v.len()).filter(|&p| v[p] == r || v[p] == s).collect();
    positions.sort_unstable();
    let b = pi.b as usize;
    let k = positions.iter().take_while(|&&p| v[p] == r).count();
    let pattern_ok = k >= 1
        && positions[k..k + b].iter().all(|&p| v[p] == s)
        && positions[k + b..].iter().all(|&p| v[p] == r);
    if !pattern_ok {
        return Err(Error::Precondition(format!(
            "values {r} and {s} do not interleave as a single block"
        )));
    }
    let mut out = v.to_vec();
    let mut replacement = Vec::with_capacity(2 * b);
    replacement.extend(repeat_n(r, k - 1));
    replacement.extend(repeat_n(s, b));
    replacement.extend(repeat_n(r, b - k + 1));
    for (&p, &val) in positions.iter().zip(&replacement) {
        out[p] = val;
    }
    StirlingPerm::new(pi.b, out)
}

/// The rotation move at position i (1-based): with r = π_i < π_{i+1}, let
/// s be the least value above r whose copies all lie after i and j the
/// last position carrying s; if every entry between i and j is at least s,
/// relocate π_i to just after j.
///
/// On path images this decrements the primitive subsequence at s.
pub fn rotation_cover_stirling(pi: &StirlingPerm, i: usize) -> Result<StirlingPerm, Error> {
    let v = pi.entries();
    if i < 1 || i >= v.len() {
        return Err(Error::IndexOutOfRange { index: i, len: v.len() });
    }
    let r = v[i - 1];
    if r >= v[i] {
        return Err(Error::Precondition(format!("no rise at position {i}")));
    }
    let s = (r + 1..=pi.n)
        .find(|&s| v.iter().position(|&x| x == s).unwrap() >= i)
        .expect("the value following a rise starts after it");
    let j = v.iter().rposition(|&x| x == s).unwrap() + 1;
    if v[i..j].iter().any(|&x| x < s) {
        return Err(Error::Precondition(format!(
            "an entry below {s} separates position {i} from position {j}"
        )));
    }
    let mut out = Vec::with_capacity(v.len());
    out.extend_from_slice(&v[..i - 1]);
    out.extend_from_slice(&v[i..j]);
    out.push(r);
    out.extend_from_slice(&v[j..]);
    StirlingPerm::new(pi.b, out)
}

/// Iterator over every Stirling permutation of {1^b, ..., n^b}, ordered
/// lexicographically by insertion sequence.
#[derive(Debug, Clone)]
pub struct StirlingPerms {
    b: u64,
    current: Option<Vec<u64>>,
}

impl Iterator for StirlingPerms {
    type Item = StirlingPerm;

    fn next(&mut self) -> Option<StirlingPerm> {
        let u = self.current.take()?;
        let item = zeta(&u, self.b).expect("odometer stays within insertion range");
        let mut next = u;
        for idx in (0..next.len()).rev() {
            if next[idx] < idx as u64 * self.b {
                next[idx] += 1;
                for v in &mut next[idx + 1..] {
                    *v = 0;
                }
                self.current = Some(next);
                return Some(item);
            }
        }
        Some(item)
    }
}

/// Enumerates all Stirling permutations with parameters (n, b); there are
/// (b+1)(2b+1)···((n−1)b+1) of them.
pub fn enumerate_stirling(n: u64, b: u64) -> StirlingPerms {
    StirlingPerms { b, current: Some(alloc::vec![0; n as usize]) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orders::{rotation_covers, young_covers};
    use crate::paths::{enumerate_paths, step_seq_to_word, word_to_step_seq, Slope, StepSeq};
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn perm(b: u64, digits: &str) -> StirlingPerm {
        let entries = digits.chars().map(|c| c.to_digit(10).unwrap() as u64).collect();
        StirlingPerm::new(b, entries).unwrap()
    }

    #[test]
    fn validation_rejects_bad_multisets() {
        assert!(StirlingPerm::new(2, alloc::vec![1, 1, 2]).is_err());
        assert!(StirlingPerm::new(2, alloc::vec![2, 1, 1, 2]).is_err());
        assert!(StirlingPerm::new(2, alloc::vec![1, 2, 2, 1]).is_ok());
    }

    #[test]
    fn zeta_small_examples() {
        assert_eq!(zeta(&[0, 1, 4], 2).unwrap(), perm(2, "122133"));
        assert_eq!(zeta(&[0], 3).unwrap(), perm(3, "111"));
        assert_eq!(zeta(&[0, 0, 4], 2).unwrap(), perm(2, "221133"));
        assert_eq!(zeta(&[0, 1, 3], 2).unwrap(), perm(2, "122331"));
    }

    #[test]
    fn zeta_non_monotone_sequences() {
        assert_eq!(zeta(&[0, 0, 4, 2], 3).unwrap(), perm(3, "224442133311"));
        assert_eq!(zeta(&[0, 2, 2, 6], 3).unwrap(), perm(3, "113332444221"));
    }

    #[test]
    fn zeta_triple_examples() {
        assert_eq!(zeta(&[0, 1, 2, 4], 3).unwrap(), perm(3, "123344432211"));
        assert_eq!(zeta(&[0, 0, 1, 4], 3).unwrap(), perm(3, "233344422111"));
        assert_eq!(zeta(&[0, 1, 1, 3], 3).unwrap(), perm(3, "133444322211"));
        assert_eq!(zeta(&[0, 0, 1, 3], 3).unwrap(), perm(3, "233444322111"));
    }

    #[test]
    fn zeta_rejects_out_of_range_insertion() {
        assert!(matches!(
            zeta(&[0, 3], 2),
            Err(Error::InsertionRange { value: 2, position: 3, limit: 2 })
        ));
    }

    #[test]
    fn zeta_inverse_round_trip() {
        assert_eq!(zeta_inverse(&perm(2, "122133")), alloc::vec![0, 1, 4]);
        assert_eq!(zeta_inverse(&perm(3, "111")), alloc::vec![0]);
        assert_eq!(zeta_inverse(&perm(3, "123344432211")), alloc::vec![0, 1, 2, 4]);
        assert_eq!(zeta_inverse(&perm(3, "224442133311")), alloc::vec![0, 0, 4, 2]);
    }

    #[test]
    fn zeta_g_examples() {
        assert_eq!(zeta_g(&[0, 1, 1, 3], 2, 1, 3).unwrap(), perm(3, "113332444221"));
        assert_eq!(zeta_g(&[0, 0, 2, 1], 2, 1, 3).unwrap(), perm(3, "224442133311"));
        assert_eq!(zeta_g(&[0, 1, 4], 1, 1, 2).unwrap(), zeta(&[0, 1, 4], 2).unwrap());
        assert_eq!(zeta_g(&[0, 0, 1, 1, 2, 2], 2, 1, 1).unwrap(), perm(1, "214365"));
        assert!(matches!(
            zeta_g(&[0, 1], 1, 2, 2),
            Err(Error::NonIntegralScaling { numerator: 1, denominator: 2 })
        ));
    }

    #[test]
    fn pattern_312() {
        assert!(avoids_312(&perm(2, "122133")));
        assert!(!avoids_312(&perm(2, "133122")));
        assert!(avoids_312(&perm(3, "111")));
    }

    #[test]
    fn chi_examples() {
        let pi = perm(2, "122133");
        assert_eq!(young_cover_chi(&pi, 1).unwrap(), perm(2, "221133"));
        assert_eq!(young_cover_chi(&pi, 4).unwrap(), perm(2, "122331"));
        assert!(young_cover_chi(&pi, 2).is_err());
    }

    #[test]
    fn chi_picks_the_least_eligible_value() {
        // at 133221 the rise 1 < 3 still moves the 2-block, not the 3-block
        let pi = perm(2, "133221");
        assert_eq!(young_cover_chi(&pi, 1).unwrap(), perm(2, "233211"));
        assert_eq!(zeta_inverse(&young_cover_chi(&pi, 1).unwrap()), alloc::vec![0, 0, 1]);
    }

    #[test]
    fn chi_has_no_move_on_the_top_image() {
        let top = zeta(&[0, 0, 0], 2).unwrap();
        for i in 1..top.entries().len() {
            assert!(young_cover_chi(&top, i).is_err());
        }
    }

    #[test]
    fn rotation_examples() {
        let pi = perm(3, "123344432211");
        assert_eq!(rotation_cover_stirling(&pi, 1).unwrap(), perm(3, "233444322111"));
        assert_eq!(rotation_cover_stirling(&pi, 2).unwrap(), perm(3, "133444322211"));
        assert_eq!(rotation_cover_stirling(&pi, 4).unwrap(), perm(3, "123444332211"));
        assert!(rotation_cover_stirling(&pi, 3).is_err());
        assert_eq!(
            rotation_cover_stirling(&perm(2, "122133"), 1).unwrap(),
            zeta(&[0, 0, 4], 2).unwrap()
        );
    }

    #[test]
    fn rotation_has_no_move_on_the_top_image() {
        let top = zeta(&[0, 0, 0, 0], 2).unwrap();
        for i in 1..top.entries().len() {
            assert!(rotation_cover_stirling(&top, i).is_err());
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_stirling(3, 2).count(), 15);
        assert_eq!(enumerate_stirling(1, 4).count(), 1);
        assert_eq!(enumerate_stirling(2, 3).count(), 4);
        assert_eq!(enumerate_stirling(4, 1).count(), 24);
    }

    #[test]
    fn enumeration_round_trips_through_zeta_inverse() {
        for pi in enumerate_stirling(3, 2) {
            let u = zeta_inverse(&pi);
            assert_eq!(zeta(&u, 2).unwrap(), pi);
        }
    }

    #[test]
    fn path_images_avoid_312() {
        for b in 1..=3u64 {
            let slope = Slope::new(1, b).unwrap();
            for p in enumerate_paths(slope, 4) {
                let u = word_to_step_seq(&p);
                assert!(avoids_312(&zeta(u.entries(), b).unwrap()));
            }
        }
    }

    #[test]
    fn chi_moves_match_young_covers() {
        for b in 1..=3u64 {
            let slope = Slope::new(1, b).unwrap();
            for p in enumerate_paths(slope, 3) {
                let u = word_to_step_seq(&p);
                let pi = zeta(u.entries(), b).unwrap();
                let expected: BTreeSet<StirlingPerm> = young_covers(&p)
                    .iter()
                    .map(|q| zeta(word_to_step_seq(q).entries(), b).unwrap())
                    .collect();
                let got: BTreeSet<StirlingPerm> = (1..pi.entries().len())
                    .filter_map(|i| young_cover_chi(&pi, i).ok())
                    .collect();
                assert_eq!(expected, got, "at u = {:?}", u.entries());
            }
        }
    }

    #[test]
    fn rotation_moves_match_rotation_covers() {
        for b in 1..=3u64 {
            let slope = Slope::new(1, b).unwrap();
            for p in enumerate_paths(slope, 3) {
                let u = word_to_step_seq(&p);
                let pi = zeta(u.entries(), b).unwrap();
                let expected: BTreeSet<StirlingPerm> = rotation_covers(&p)
                    .iter()
                    .map(|q| zeta(word_to_step_seq(q).entries(), b).unwrap())
                    .collect();
                let got: BTreeSet<StirlingPerm> = (1..pi.entries().len())
                    .filter_map(|i| rotation_cover_stirling(&pi, i).ok())
                    .collect();
                assert_eq!(expected, got, "at u = {:?}", u.entries());
            }
        }
    }

    #[test]
    fn display_uses_digits_for_small_n() {
        assert_eq!(zeta(&[0, 1, 4], 2).unwrap().to_string(), "122133");
        let long = zeta(&alloc::vec![0; 10], 1).unwrap();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
    }

    #[test]
    fn round_trip_over_whole_families() {
        for (b, n) in [(1u64, 5u64), (2, 4), (3, 3)] {
            let slope = Slope::new(1, b).unwrap();
            for p in enumerate_paths(slope, n) {
                let u = word_to_step_seq(&p);
                let pi = zeta(u.entries(), b).unwrap();
                let back = zeta_inverse(&pi);
                assert_eq!(back, u.entries());
                let rebuilt = step_seq_to_word(&StepSeq::new(slope, back).unwrap());
                assert_eq!(rebuilt, p);
            }
        }
    }
}
