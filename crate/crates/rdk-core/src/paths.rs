//! Rational Dyck paths: step words, step and height sequences, extremal
//! paths, enumeration, counting, and the horizontal distance.
//!
//! A path of slope (a,b) and size n runs from (0,0) to (bn, an) and stays
//! weakly above y = ax/b; equivalently every prefix satisfies the
//! cross-multiplied law b·#N ≥ a·#E.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::Error;

/// A pair of coprime positive integers (a, b) fixing the boundary line
/// y = ax/b.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    a: u64,
    b: u64,
}

pub(crate) fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

impl Slope {
    /// Creates a slope, rejecting zero or non-coprime parameters.
    pub fn new(a: u64, b: u64) -> Result<Slope, Error> {
        if a == 0 || b == 0 || gcd(a, b) != 1 {
            return Err(Error::InvalidSlope { a, b });
        }
        Ok(Slope { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A single lattice step: north or east.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn to_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

/// An (a,b)-Dyck path of size n, stored as its step word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord {
    slope: Slope,
    n: u64,
    steps: Vec<Step>,
}

impl DyckWord {
    /// Validates a step word against the slope: correct letter counts and
    /// the prefix law b·#N ≥ a·#E.
    pub fn new(slope: Slope, steps: Vec<Step>) -> Result<DyckWord, Error> {
        let len = steps.len() as u64;
        let per = slope.a + slope.b;
        if len % per != 0 {
            return Err(Error::WordShape(alloc::format!(
                "length {len} is not a multiple of a+b = {per}"
            )));
        }
        let n = len / per;
        let norths = steps.iter().filter(|&&s| s == Step::N).count() as u64;
        if norths != slope.a * n {
            return Err(Error::WordShape(alloc::format!(
                "expected {} N steps, found {norths}",
                slope.a * n
            )));
        }
        let mut e = 0u64;
        let mut nn = 0u64;
        for (idx, &s) in steps.iter().enumerate() {
            match s {
                Step::N => nn += 1,
                Step::E => e += 1,
            }
            if slope.b * nn < slope.a * e {
                return Err(Error::BelowLine { position: idx + 1 });
            }
        }
        Ok(DyckWord { slope, n, steps })
    }

    /// Parses a word from its ASCII form, e.g. `"NENENEENEE"`.
    pub fn from_ascii(slope: Slope, text: &str) -> Result<DyckWord, Error> {
        let mut steps = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                'N' => steps.push(Step::N),
                'E' => steps.push(Step::E),
                other => {
                    return Err(Error::WordShape(alloc::format!(
                        "unexpected character {other:?}"
                    )))
                }
            }
        }
        DyckWord::new(slope, steps)
    }

    pub(crate) fn new_unchecked(slope: Slope, n: u64, steps: Vec<Step>) -> DyckWord {
        debug_assert!(DyckWord::new(slope, steps.clone()).is_ok());
        DyckWord { slope, n, steps }
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn to_ascii(&self) -> String {
        self.steps.iter().map(|s| s.to_char()).collect()
    }

    /// All lattice points visited, from (0,0) to (bn, an), as (x, y) pairs.
    pub fn lattice_points(&self) -> Vec<(u64, u64)> {
        let mut points = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0u64, 0u64);
        points.push((x, y));
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => x += 1,
            }
            points.push((x, y));
        }
        points
    }

    /// The dual path: word reversed with N and E exchanged. A path of slope
    /// (a,b) maps to one of slope (b,a).
    pub fn sharp(&self) -> DyckWord {
        let slope = Slope { a: self.slope.b, b: self.slope.a };
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|&s| match s {
                Step::N => Step::E,
                Step::E => Step::N,
            })
            .collect();
        DyckWord::new_unchecked(slope, self.n, steps)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// The step sequence of a path: entry k (0-indexed) counts the E steps
/// before the (k+1)-th N step. Weakly increasing with a·u_k ≤ b·k.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepSeq {
    slope: Slope,
    n: u64,
    u: Vec<u64>,
}

impl StepSeq {
    pub fn new(slope: Slope, u: Vec<u64>) -> Result<StepSeq, Error> {
        let len = u.len() as u64;
        if len % slope.a != 0 {
            return Err(Error::InvalidSequence(alloc::format!(
                "length {len} is not a multiple of a = {}",
                slope.a
            )));
        }
        let n = len / slope.a;
        for k in 0..u.len() {
            if k > 0 && u[k - 1] > u[k] {
                return Err(Error::InvalidSequence(alloc::format!(
                    "not weakly increasing at entry {}",
                    k + 1
                )));
            }
            if slope.a * u[k] > slope.b * k as u64 {
                return Err(Error::InvalidSequence(alloc::format!(
                    "entry {} = {} exceeds the bound b(k-1)/a",
                    k + 1,
                    u[k]
                )));
            }
        }
        Ok(StepSeq { slope, n, u })
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[u64] {
        &self.u
    }
}

impl fmt::Display for StepSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.u.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The height sequence of a path: entry k (0-indexed) counts the N steps
/// before the (k+1)-th E step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightSeq {
    slope: Slope,
    n: u64,
    h: Vec<u64>,
}

impl HeightSeq {
    pub fn new(slope: Slope, h: Vec<u64>) -> Result<HeightSeq, Error> {
        let len = h.len() as u64;
        if len % slope.b != 0 {
            return Err(Error::InvalidSequence(alloc::format!(
                "length {len} is not a multiple of b = {}",
                slope.b
            )));
        }
        let n = len / slope.b;
        for k in 0..h.len() {
            if k > 0 && h[k - 1] > h[k] {
                return Err(Error::InvalidSequence(alloc::format!(
                    "not weakly increasing at entry {}",
                    k + 1
                )));
            }
            if slope.b * h[k] < slope.a * (k as u64 + 1) {
                return Err(Error::InvalidSequence(alloc::format!(
                    "entry {} = {} is below the bound ka/b",
                    k + 1,
                    h[k]
                )));
            }
        }
        if let Some(&last) = h.last() {
            if last > slope.a * n {
                return Err(Error::InvalidSequence(alloc::format!(
                    "final entry {last} exceeds the total height {}",
                    slope.a * n
                )));
            }
        }
        Ok(HeightSeq { slope, n, h })
    }

    pub fn slope(&self) -> Slope {
        self.slope
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn entries(&self) -> &[u64] {
        &self.h
    }
}

impl fmt::Display for HeightSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.h.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Reads off the step sequence of a path.
pub fn word_to_step_seq(p: &DyckWord) -> StepSeq {
    let mut u = Vec::with_capacity((p.slope.a * p.n) as usize);
    let mut easts = 0u64;
    for &s in &p.steps {
        match s {
            Step::N => u.push(easts),
            Step::E => easts += 1,
        }
    }
    StepSeq { slope: p.slope, n: p.n, u }
}

/// Rebuilds the unique path with the given step sequence.
pub fn step_seq_to_word(u: &StepSeq) -> DyckWord {
    let bn = u.slope.b * u.n;
    let mut steps = Vec::with_capacity(((u.slope.a + u.slope.b) * u.n) as usize);
    let mut easts = 0u64;
    for &uk in &u.u {
        for _ in easts..uk {
            steps.push(Step::E);
        }
        easts = uk;
        steps.push(Step::N);
    }
    for _ in easts..bn {
        steps.push(Step::E);
    }
    DyckWord::new_unchecked(u.slope, u.n, steps)
}

/// Reads off the height sequence of a path.
pub fn word_to_height_seq(p: &DyckWord) -> HeightSeq {
    let mut h = Vec::with_capacity((p.slope.b * p.n) as usize);
    let mut norths = 0u64;
    for &s in &p.steps {
        match s {
            Step::N => norths += 1,
            Step::E => h.push(norths),
        }
    }
    HeightSeq { slope: p.slope, n: p.n, h }
}

/// Rebuilds the unique path with the given height sequence.
pub fn height_seq_to_word(h: &HeightSeq) -> DyckWord {
    let an = h.slope.a * h.n;
    let mut steps = Vec::with_capacity(((h.slope.a + h.slope.b) * h.n) as usize);
    let mut norths = 0u64;
    for &hk in &h.h {
        for _ in norths..hk {
            steps.push(Step::N);
        }
        norths = hk;
        steps.push(Step::E);
    }
    for _ in norths..an {
        steps.push(Step::N);
    }
    DyckWord::new_unchecked(h.slope, h.n, steps)
}

/// The right-most path weakly above y = ax/b: step sequence
/// u_k = floor(b(k-1)/a).
pub fn lowest_path(slope: Slope, n: u64) -> DyckWord {
    let u = (0..slope.a * n).map(|k| slope.b * k / slope.a).collect();
    step_seq_to_word(&StepSeq { slope, n, u })
}

/// The path N^{an} E^{bn}, whose step sequence is all zeros.
pub fn highest_path(slope: Slope, n: u64) -> DyckWord {
    let mut steps = vec![Step::N; (slope.a * n) as usize];
    steps.extend(vec![Step::E; (slope.b * n) as usize]);
    DyckWord::new_unchecked(slope, n, steps)
}

/// Iterator over every path of a family in lexicographic word order
/// (N before E).
#[derive(Debug, Clone)]
pub struct Paths {
    slope: Slope,
    n: u64,
    // Stack of partial words, each extended depth-first; E is pushed before
    // N so that N-extensions are explored first.
    stack: Vec<(Vec<Step>, u64, u64)>,
}

impl Iterator for Paths {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let an = self.slope.a * self.n;
        let bn = self.slope.b * self.n;
        while let Some((prefix, norths, easts)) = self.stack.pop() {
            if norths == an && easts == bn {
                return Some(DyckWord::new_unchecked(self.slope, self.n, prefix));
            }
            if easts < bn && self.slope.b * norths >= self.slope.a * (easts + 1) {
                let mut next = prefix.clone();
                next.push(Step::E);
                self.stack.push((next, norths, easts + 1));
            }
            if norths < an {
                let mut next = prefix;
                next.push(Step::N);
                self.stack.push((next, norths + 1, easts));
            }
        }
        None
    }
}

/// Enumerates all (a,b)-Dyck paths of size n, each exactly once, in
/// lexicographic order on words with N sorted before E.
pub fn enumerate_paths(slope: Slope, n: u64) -> Paths {
    Paths { slope, n, stack: vec![(Vec::new(), 0, 0)] }
}

/// The Fuss–Catalan number C((b+1)n, n) / (bn + 1), the number of
/// (1,b)-Dyck paths of size n.
pub fn fuss_catalan(b: u64, n: u64) -> BigUint {
    // binomial((b+1)n, n) computed as an exact running product
    let mut num = BigUint::from(1u32);
    for i in 0..n {
        num *= BigUint::from((b + 1) * n - i);
        num /= BigUint::from(i + 1);
    }
    num / BigUint::from(b * n + 1)
}

/// The horizontal distance from a lattice point to the reference path:
/// u₀(y+1) − x, where u₀ is the step sequence of `p0` extended by
/// u₀(an+1) = bn.
///
/// Errors when the point lies outside the bn × an grid.
pub fn horizontal_distance(p0: &DyckWord, point: (u64, u64)) -> Result<i64, Error> {
    let (x, y) = point;
    let an = p0.slope.a * p0.n;
    let bn = p0.slope.b * p0.n;
    if y > an {
        return Err(Error::IndexOutOfRange { index: y as usize, len: an as usize });
    }
    if x > bn {
        return Err(Error::IndexOutOfRange { index: x as usize, len: bn as usize });
    }
    let u0 = word_to_step_seq(p0);
    let reach = if y == an { bn } else { u0.u[y as usize] };
    Ok(reach as i64 - x as i64)
}
