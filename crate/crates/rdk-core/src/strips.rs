//! Horizontal and vertical strip decompositions of a rational Dyck path,
//! the enlarged square path that interleaves them, and the v/w/mu machinery
//! expressing the distance from a path to the lowest or highest path of its
//! family as a b-Stirling permutation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::paren::DyckTuple;
use crate::paths::{
    height_seq_to_word, lowest_path, step_seq_to_word, word_to_height_seq, word_to_step_seq,
    DyckWord, HeightSeq, Slope, Step, StepSeq,
};
use crate::stirling::StirlingPerm;
use crate::Error;

/// The reference path that the v-sequences of a path are measured against.
///
/// The two choices give genuinely different multi-permutations, so callers
/// must pick one explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QChoice {
    Lowest,
    Highest,
}

/// Horizontal strip decomposition: repeats each height a times and deals the
/// resulting abn heights round-robin into b height sequences of size an.
pub fn delta(p: &DyckWord) -> DyckTuple {
    let a = p.slope().a() as usize;
    let b = p.slope().b() as usize;
    let h = word_to_height_seq(p);
    let mut repeated = Vec::with_capacity(a * h.entries().len());
    for &x in h.entries() {
        repeated.extend(core::iter::repeat(x).take(a));
    }
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    let components = (0..b)
        .map(|i| {
            let heights: Vec<u64> = repeated.iter().skip(i).step_by(b).copied().collect();
            let seq = HeightSeq::new(slope, heights).expect("dealt heights stay weakly above j");
            height_seq_to_word(&seq)
        })
        .collect();
    DyckTuple::new(components).expect("strips share the size an")
}

/// Vertical strip decomposition: repeats each step-sequence entry b times and
/// deals the resulting abn entries round-robin into a step sequences of size
/// bn.
pub fn theta(p: &DyckWord) -> DyckTuple {
    let a = p.slope().a() as usize;
    let b = p.slope().b() as usize;
    let u = word_to_step_seq(p);
    let mut repeated = Vec::with_capacity(b * u.entries().len());
    for &x in u.entries() {
        repeated.extend(core::iter::repeat(x).take(b));
    }
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    let components = (0..a)
        .map(|i| {
            let entries: Vec<u64> = repeated.iter().skip(i).step_by(a).copied().collect();
            let seq = StepSeq::new(slope, entries).expect("dealt entries stay weakly below k");
            step_seq_to_word(&seq)
        })
        .collect();
    DyckTuple::new(components).expect("strips share the size bn")
}

/// Scales every N-run by b and every E-run by a, turning an (a,b)-path of
/// size n into a (1,1)-path of size abn.
pub fn enlarge(p: &DyckWord) -> DyckWord {
    let a = p.slope().a() as usize;
    let b = p.slope().b() as usize;
    let mut out = Vec::with_capacity(2 * a * b * p.n() as usize);
    for &s in p.steps() {
        let reps = match s {
            Step::N => b,
            Step::E => a,
        };
        out.extend(core::iter::repeat(s).take(reps));
    }
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    DyckWord::new(slope, out).expect("scaling runs preserves the prefix law")
}

/// Splits a square path into r words by reading every r-th letter, starting
/// from each of the first r positions.
///
/// For the enlarged path of p the strides r = b and r = a recover delta(p)
/// and theta(p); other strides may fail to produce balanced words.
pub fn interleave_extract(tilde: &DyckWord, r: u64) -> Result<DyckTuple, Error> {
    if r == 0 {
        return Err(Error::Precondition(format!(
            "extraction stride must be positive, got {}",
            r
        )));
    }
    let r = r as usize;
    let mut components = Vec::with_capacity(r);
    for i in 0..r {
        let letters: Vec<Step> = tilde.steps().iter().skip(i).step_by(r).copied().collect();
        components.push(DyckWord::new(tilde.slope(), letters)?);
    }
    DyckTuple::new(components)
}

/// The b integer sequences obtained by repeatedly splitting a ceiling share
/// off a·u′, where u′ measures the entrywise distance from p to the chosen
/// reference path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VSequences {
    sequences: Vec<Vec<u64>>,
}

impl VSequences {
    pub fn sequences(&self) -> &[Vec<u64>] {
        &self.sequences
    }
}

/// Entrywise distance from the step sequence of p to the chosen reference
/// path: u(lowest) − u(p) for Lowest, u(p) itself for Highest.
pub fn u_prime(p: &DyckWord, q: QChoice) -> Vec<u64> {
    let u = word_to_step_seq(p);
    match q {
        QChoice::Lowest => {
            let low = word_to_step_seq(&lowest_path(p.slope(), p.n()));
            low.entries()
                .iter()
                .zip(u.entries())
                .map(|(x, y)| x - y)
                .collect()
        }
        QChoice::Highest => u.entries().to_vec(),
    }
}

/// Splits a·u′ into b sequences v_1..v_b by iterated entrywise ceilings:
/// v_i takes ⌈remainder/(b−i+1)⌉ of what the earlier sequences left over, so
/// the v_i sum back to a·u′.
pub fn v_sequences(p: &DyckWord, q: QChoice) -> VSequences {
    let a = p.slope().a();
    let b = p.slope().b();
    let mut remainder: Vec<u64> = u_prime(p, q).iter().map(|x| a * x).collect();
    let mut sequences = Vec::with_capacity(b as usize);
    for i in 1..=b {
        let denom = b - i + 1;
        let v: Vec<u64> = remainder.iter().map(|x| x.div_ceil(denom)).collect();
        for (x, y) in remainder.iter_mut().zip(&v) {
            *x -= y;
        }
        sequences.push(v);
    }
    VSequences { sequences }
}

/// Builds a permutation of [1, n] from v by scanning right to left: position
/// i receives the (v_i + 1)-th smallest value not yet used.
///
/// Fails when some v_i + 1 exceeds the number of values still available.
pub fn eta(v: &[u64]) -> Result<Vec<u64>, Error> {
    let n = v.len();
    let mut pool: Vec<u64> = (1..=n as u64).collect();
    let mut w = vec![0u64; n];
    for i in (0..n).rev() {
        let idx = v[i] as usize;
        if idx >= pool.len() {
            return Err(Error::InvalidSequence(format!(
                "eta needs entry {} at position {} to be at most {}",
                v[i],
                i + 1,
                pool.len() - 1
            )));
        }
        w[i] = pool.remove(idx);
    }
    Ok(w)
}

/// The b-Stirling permutation measuring the distance from p to the chosen
/// reference path: position b(p−1)+q of the result reads entry p of the
/// inverse of eta(v_q).
pub fn mu(p: &DyckWord, q: QChoice) -> StirlingPerm {
    let b = p.slope().b();
    let an = (p.slope().a() * p.n()) as usize;
    let vs = v_sequences(p, q);
    let mut inverses = Vec::with_capacity(b as usize);
    for v in vs.sequences() {
        let w = eta(v).expect("v-sequences stay within eta's range");
        let mut inv = vec![0u64; an];
        for (pos, &val) in w.iter().enumerate() {
            inv[(val - 1) as usize] = pos as u64 + 1;
        }
        inverses.push(inv);
    }
    let mut entries = Vec::with_capacity(an * b as usize);
    for col in 0..an {
        for inv in &inverses {
            entries.push(inv[col]);
        }
    }
    StirlingPerm::new(b, entries).expect("interleaved inverses nest")
}
