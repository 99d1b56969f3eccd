//! Parenthesis presentations with stars and the tuple decompositions they
//! induce: type I and type II tuples of ordinary Dyck words, the maps
//! between step sequences and tuples, admissibility, the Young-diagram
//! reconstruction, and the rotations acting on each presentation.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::paths::{step_seq_to_word, word_to_step_seq, DyckWord, Slope, Step, StepSeq};
use crate::stirling::{zeta, StirlingPerm};
use crate::trees::{postorder_word_of_identity_preorder, walk_word, xi, xi_inverse, AryTree};
use crate::Error;

/// One symbol of a starred parenthesis word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    Open,
    Close,
    Star,
}

impl Token {
    pub fn to_char(self) -> char {
        match self {
            Token::Open => '(',
            Token::Close => ')',
            Token::Star => '*',
        }
    }
}

/// A balanced parenthesis word with stars: one outer pair, and every pair
/// carries exactly b stars at its own nesting level.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParenPres {
    b: u64,
    tokens: Vec<Token>,
}

impl ParenPres {
    pub fn new(b: u64, tokens: Vec<Token>) -> Result<ParenPres, Error> {
        let mut stack: Vec<u64> = Vec::new();
        let mut top_level_pairs = 0u64;
        for (idx, &t) in tokens.iter().enumerate() {
            match t {
                Token::Open => {
                    if stack.is_empty() {
                        top_level_pairs += 1;
                    }
                    stack.push(0);
                }
                Token::Close => {
                    let stars = stack.pop().ok_or_else(|| {
                        Error::MalformedParen(format!("unmatched close at index {idx}"))
                    })?;
                    if stars != b {
                        return Err(Error::MalformedParen(format!(
                            "pair closing at index {idx} holds {stars} stars, expected {b}"
                        )));
                    }
                }
                Token::Star => match stack.last_mut() {
                    Some(top) => *top += 1,
                    None => {
                        return Err(Error::MalformedParen(format!(
                            "star outside all pairs at index {idx}"
                        )))
                    }
                },
            }
        }
        if !stack.is_empty() {
            return Err(Error::MalformedParen(format!(
                "{} unclosed pairs",
                stack.len()
            )));
        }
        if top_level_pairs > 1 {
            return Err(Error::MalformedParen(format!(
                "{top_level_pairs} top-level pairs, expected one"
            )));
        }
        Ok(ParenPres { b, tokens })
    }

    pub fn parse(b: u64, text: &str) -> Result<ParenPres, Error> {
        let mut tokens = Vec::with_capacity(text.len());
        for c in text.chars() {
            tokens.push(match c {
                '(' => Token::Open,
                ')' => Token::Close,
                '*' => Token::Star,
                other => {
                    return Err(Error::MalformedParen(format!(
                        "unexpected character {other:?}"
                    )))
                }
            });
        }
        ParenPres::new(b, tokens)
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Number of matching pairs.
    pub fn n(&self) -> u64 {
        self.tokens.iter().filter(|&&t| t == Token::Open).count() as u64
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }
}

impl fmt::Display for ParenPres {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.tokens {
            write!(f, "{}", t.to_char())?;
        }
        Ok(())
    }
}

/// A tuple of ordinary Dyck words of a common size. Type I tuples form a
/// chain in the Young order; type II tuples need not.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckTuple {
    paths: Vec<DyckWord>,
}

impl DyckTuple {
    pub fn new(paths: Vec<DyckWord>) -> Result<DyckTuple, Error> {
        if paths.is_empty() {
            return Err(Error::WordShape(String::from("a tuple needs a component")));
        }
        for p in &paths {
            if (p.slope().a(), p.slope().b()) != (1, 1) {
                return Err(Error::WordShape(format!(
                    "tuple components must have slope (1,1), found {}",
                    p.slope()
                )));
            }
            if p.n() != paths[0].n() {
                return Err(Error::WordShape(format!(
                    "tuple components must share a size, found {} and {}",
                    paths[0].n(),
                    p.n()
                )));
            }
        }
        Ok(DyckTuple { paths })
    }

    /// Tuple length.
    pub fn m(&self) -> u64 {
        self.paths.len() as u64
    }

    /// Common component size.
    pub fn size(&self) -> u64 {
        self.paths[0].n()
    }

    pub fn components(&self) -> &[DyckWord] {
        &self.paths
    }

    /// Whether consecutive components weakly decrease in the Young order,
    /// i.e. the step sequences weakly increase componentwise.
    pub fn is_young_chain(&self) -> bool {
        self.paths.windows(2).all(|w| {
            let prev = word_to_step_seq(&w[0]);
            let next = word_to_step_seq(&w[1]);
            prev.entries()
                .iter()
                .zip(next.entries())
                .all(|(p, q)| p <= q)
        })
    }
}

impl fmt::Display for DyckTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.paths.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn star_indices(tokens: &[Token]) -> Vec<usize> {
    tokens
        .iter()
        .enumerate()
        .filter(|(_, &t)| t == Token::Star)
        .map(|(idx, _)| idx)
        .collect()
}

fn open_indices(tokens: &[Token]) -> Vec<usize> {
    tokens
        .iter()
        .enumerate()
        .filter(|(_, &t)| t == Token::Open)
        .map(|(idx, _)| idx)
        .collect()
}

/// For every open parenthesis, the index of its matching close.
fn matching_closes(tokens: &[Token]) -> Vec<usize> {
    let mut out = vec![0usize; tokens.len()];
    let mut stack = Vec::new();
    for (idx, &t) in tokens.iter().enumerate() {
        match t {
            Token::Open => stack.push(idx),
            Token::Close => {
                let open = stack.pop().expect("tokens are balanced");
                out[open] = idx;
            }
            Token::Star => {}
        }
    }
    out
}

/// Type I star labels in star order: the stars at the own level of each
/// pair are numbered 1..=b from right to left.
fn type_i_labels(pp: &ParenPres) -> Vec<u64> {
    let tokens = pp.tokens();
    let total = star_indices(tokens).len();
    let mut labels = vec![0u64; total];
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut ordinal = 0usize;
    for &t in tokens {
        match t {
            Token::Open => stack.push(Vec::new()),
            Token::Star => {
                stack
                    .last_mut()
                    .expect("stars sit inside a pair")
                    .push(ordinal);
                ordinal += 1;
            }
            Token::Close => {
                let own = stack.pop().expect("tokens are balanced");
                let b = own.len() as u64;
                for (j, star) in own.into_iter().enumerate() {
                    labels[star] = b - j as u64;
                }
            }
        }
    }
    labels
}

/// Type II star labels in star order: all stars are numbered cyclically
/// 1..=b from right to left, ignoring the parentheses.
fn type_ii_labels(pp: &ParenPres) -> Vec<u64> {
    let b = pp.b();
    let total = star_indices(pp.tokens()).len();
    (0..total)
        .map(|t| ((total - 1 - t) as u64 % b) + 1)
        .collect()
}

/// The pair each star belongs to, numbered by the pre-order of opens.
fn star_pairs(pp: &ParenPres) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut next_pair = 0usize;
    for &t in pp.tokens() {
        match t {
            Token::Open => {
                stack.push(next_pair);
                next_pair += 1;
            }
            Token::Star => out.push(*stack.last().expect("stars sit inside a pair")),
            Token::Close => {
                stack.pop();
            }
        }
    }
    out
}

/// Extracts one Dyck word from a labeled presentation: opens become north
/// steps, the stars carrying the requested label become east steps.
fn extract_component(pp: &ParenPres, labels: &[u64], wanted: u64) -> DyckWord {
    let mut steps = Vec::new();
    let mut ordinal = 0usize;
    for &t in pp.tokens() {
        match t {
            Token::Open => steps.push(Step::N),
            Token::Star => {
                if labels[ordinal] == wanted {
                    steps.push(Step::E);
                }
                ordinal += 1;
            }
            Token::Close => {}
        }
    }
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    DyckWord::new(slope, steps).expect("each pair carries one star of every label")
}

/// The walk word of the labeled tree of a Stirling permutation.
pub fn alpha_star(pi: &StirlingPerm) -> ParenPres {
    walk_word(&xi(pi))
}

/// Rebuilds the Stirling permutation of a presentation by reading opens
/// from left to right as the nodes of a labeled tree. The result avoids
/// the pattern 312.
pub fn alpha_star_inverse(pp: &ParenPres) -> StirlingPerm {
    let width = pp.b() as usize + 1;
    let mut children: Vec<Vec<Option<usize>>> = Vec::new();
    let mut slot: Vec<usize> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for &t in pp.tokens() {
        match t {
            Token::Open => {
                let v = children.len();
                children.push(vec![None; width]);
                slot.push(0);
                if let Some(&p) = stack.last() {
                    children[p][slot[p]] = Some(v);
                }
                stack.push(v);
            }
            Token::Star => {
                let p = *stack.last().expect("stars sit inside a pair");
                slot[p] += 1;
            }
            Token::Close => {
                stack.pop();
            }
        }
    }
    xi_inverse(&AryTree::from_parts(pp.b(), children))
}

/// The type I tuple: stars of each pair are labeled 1..=b right to left
/// and the words of the labels are extracted.
pub fn alpha_i(pi: &StirlingPerm) -> DyckTuple {
    let pp = alpha_star(pi);
    let labels = type_i_labels(&pp);
    let paths = (1..=pi.b())
        .map(|l| extract_component(&pp, &labels, l))
        .collect();
    DyckTuple::new(paths).expect("extracted words share the size of the permutation")
}

/// The type II tuple: all stars are labeled cyclically 1..=b right to left
/// and the words of the labels are extracted.
pub fn alpha_ii(pi: &StirlingPerm) -> DyckTuple {
    let pp = alpha_star(pi);
    let labels = type_ii_labels(&pp);
    let paths = (1..=pi.b())
        .map(|l| extract_component(&pp, &labels, l))
        .collect();
    DyckTuple::new(paths).expect("extracted words share the size of the permutation")
}

/// Componentwise sum of the step sequences of a tuple, read as a step
/// sequence on the slope (1, m).
pub fn beta(t: &DyckTuple) -> StepSeq {
    let n = t.size() as usize;
    let mut sums = vec![0u64; n];
    for p in t.components() {
        for (s, e) in sums.iter_mut().zip(word_to_step_seq(p).entries()) {
            *s += e;
        }
    }
    let slope = Slope::new(1, t.m()).expect("1 is coprime to everything");
    StepSeq::new(slope, sums).expect("a sum of step sequences is a step sequence")
}

/// The largest k such that u_j - u_i <= b(j - i - 1) for all j in (i, k],
/// with positions 1-based. Requires u_i = u_{i+1}.
pub fn second_primitive_subsequence(u: &[u64], i: usize, b: u64) -> usize {
    let n = u.len();
    assert!(1 <= i && i < n, "position {i} out of range 1..{n}");
    assert_eq!(u[i - 1], u[i], "the entry must repeat at position {i}");
    let mut k = i + 1;
    while k < n && u[k] - u[i - 1] <= b * (k as u64 - i as u64) {
        k += 1;
    }
    k
}

fn block_labels(u: &[u64], level: u64) -> Vec<u64> {
    let n = u.len();
    (0..n)
        .map(|i| {
            if i + 1 == n || u[i] != u[i + 1] {
                u[i]
            } else {
                let k = second_primitive_subsequence(u, i + 1, level);
                u[i] + level * (k - i - 1) as u64
            }
        })
        .collect()
}

fn word_of_entries(entries: Vec<u64>) -> Result<DyckWord, Error> {
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    Ok(step_seq_to_word(&StepSeq::new(slope, entries)?))
}

/// Splits a step sequence on the slope (1, m) into m ordinary Dyck words
/// by repeatedly ranking the entries against their repetition blocks.
pub fn gamma(u: &[u64], m: u64) -> Result<DyckTuple, Error> {
    let slope = Slope::new(1, m)?;
    let mut rest = StepSeq::new(slope, u.to_vec())?.entries().to_vec();
    let mut parts: Vec<Vec<u64>> = Vec::with_capacity(m as usize);
    for level in (1..=m).rev() {
        let labels = block_labels(&rest, level);
        let ranks: Vec<u64> = (0..labels.len())
            .map(|i| labels[..i].iter().filter(|&&l| l < labels[i]).count() as u64)
            .collect();
        for (r, rank) in rest.iter_mut().zip(&ranks) {
            *r = r.checked_sub(*rank).ok_or_else(|| {
                Error::InvalidSequence(String::from("ranks exceed the remaining entries"))
            })?;
        }
        parts.push(ranks);
    }
    parts.reverse();
    let paths = parts
        .into_iter()
        .map(word_of_entries)
        .collect::<Result<Vec<_>, _>>()?;
    DyckTuple::new(paths)
}

/// A tuple is admissible when splitting its summed step sequence
/// reproduces the tuple.
pub fn is_admissible(t: &DyckTuple) -> bool {
    match gamma(beta(t).entries(), t.m()) {
        Ok(back) => back == *t,
        Err(_) => false,
    }
}

/// Lays out an admissible tuple as the presentation whose type I tuple
/// reproduces it: the opens fall before the stars counted by the summed
/// step sequence, the closes shut each pair behind its subtree.
pub fn paren_from_tuple(t: &DyckTuple) -> Result<ParenPres, Error> {
    if !is_admissible(t) {
        return Err(Error::Precondition(String::from(
            "the tuple is not admissible",
        )));
    }
    let u = beta(t);
    let pi = zeta(u.entries(), t.m()).expect("a step sequence stays in insertion range");
    Ok(alpha_star(&pi))
}

/// Recovers the summed step sequence from the post-order words of the
/// plane trees of the components.
pub fn u_from_postorder(t: &DyckTuple) -> Result<StepSeq, Error> {
    let n = t.size() as usize;
    let mut sums = vec![0u64; n];
    for p in t.components() {
        let w = postorder_word_of_identity_preorder(p);
        let mut position = vec![0usize; n + 1];
        for (idx, &val) in w.iter().enumerate() {
            position[val as usize] = idx;
        }
        for j in 1..=n {
            sums[j - 1] += (1..j).filter(|&k| position[k] < position[j]).count() as u64;
        }
    }
    let slope = Slope::new(1, t.m()).expect("1 is coprime to everything");
    StepSeq::new(slope, sums)
}

/// Transforms the type II tuple into the type I tuple by repeatedly
/// switching the first mismatched star label with its partner inside the
/// same pair and moving the two affected parentheses accordingly.
pub fn type_ii_to_i(pi: &StirlingPerm) -> DyckTuple {
    let pp = alpha_star(pi);
    let tokens = pp.tokens();
    let goal = type_i_labels(&pp);
    let mut labels = type_ii_labels(&pp);
    let pairs = star_pairs(&pp);
    let stars = star_indices(tokens);
    let opens = open_indices(tokens);
    let opens_before = |token_idx: usize| opens.iter().filter(|&&o| o < token_idx).count();
    let labeled_before = |labels: &[u64], t: usize, l: u64| {
        (0..t).filter(|&s| labels[s] == l).count()
    };
    let mut comps: Vec<Vec<Step>> = (1..=pi.b())
        .map(|l| extract_component(&pp, &labels, l).steps().to_vec())
        .collect();
    while let Some(p) = (0..labels.len()).find(|&t| labels[t] != goal[t]) {
        let l1 = labels[p];
        let l2 = goal[p];
        let q = (p + 1..labels.len())
            .find(|&t| pairs[t] == pairs[p] && labels[t] == l2)
            .expect("the stars of a pair carry every label once");
        let x = opens_before(stars[p]) + labeled_before(&labels, p, l1) + 1;
        let y = opens_before(stars[q]) + labeled_before(&labels, q, l2) + 1;
        if x < y {
            let x_to = opens_before(stars[q]) + labeled_before(&labels, q, l1) + 1;
            let first = &mut comps[l1 as usize - 1];
            let tok = first.remove(x - 1);
            first.insert(x_to - 2, tok);
            let y_to = opens_before(stars[p]) + labeled_before(&labels, p, l2) + 1;
            let second = &mut comps[l2 as usize - 1];
            let tok = second.remove(y - 1);
            second.insert(y_to - 1, tok);
        }
        labels.swap(p, q);
    }
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    let paths = comps
        .into_iter()
        .map(|steps| DyckWord::new(slope, steps).expect("moves preserve the prefix law"))
        .collect();
    DyckTuple::new(paths).expect("moves preserve the component sizes")
}

/// Interleaves the columns of a tuple in reversed component order into one
/// Dyck word of size m times the component size.
pub fn interleave_paths(t: &DyckTuple) -> DyckWord {
    let m = t.m() as usize;
    let len = 2 * t.size() as usize;
    let mut steps = Vec::with_capacity(m * len);
    for q in 0..len {
        for p in 0..m {
            steps.push(t.components()[m - 1 - p].steps()[q]);
        }
    }
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    DyckWord::new(slope, steps).expect("columnwise interleaving preserves the prefix law")
}

/// The Young diagram of the interleaved word, with boxes counted per
/// column when one plus arm plus leg vanishes modulo the tuple length.
/// Zero columns are dropped; the transpose recovers the summed step
/// sequence.
pub fn interleave_and_circle(t: &DyckTuple) -> Vec<u64> {
    let m = t.m();
    let a = interleave_paths(t);
    let u = word_to_step_seq(&a);
    let rows: Vec<u64> = u
        .entries()
        .iter()
        .rev()
        .copied()
        .filter(|&x| x > 0)
        .collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0] as usize;
    let mut counts = Vec::new();
    for j in 0..cols {
        let height = rows.iter().filter(|&&r| r > j as u64).count();
        let circled = (0..height)
            .filter(|&i| {
                let arm = rows[i] - j as u64 - 1;
                let leg = (height - i - 1) as u64;
                (arm + leg + 1) % m == 0
            })
            .count() as u64;
        if circled > 0 {
            counts.push(circled);
        }
    }
    counts
}

/// Splits a step sequence into b ordinary Dyck words by the ceiling
/// recursion, dividing the remainder by b, then b - 1, down to 1.
pub fn gamma_ii(u: &[u64], b: u64) -> Result<DyckTuple, Error> {
    let slope = Slope::new(1, b)?;
    let mut rest = StepSeq::new(slope, u.to_vec())?.entries().to_vec();
    let mut parts: Vec<Vec<u64>> = Vec::with_capacity(b as usize);
    for level in (1..=b).rev() {
        let part: Vec<u64> = rest.iter().map(|&x| x.div_ceil(level)).collect();
        for (r, p) in rest.iter_mut().zip(&part) {
            *r -= p;
        }
        parts.push(part);
    }
    parts.reverse();
    let paths = parts
        .into_iter()
        .map(word_of_entries)
        .collect::<Result<Vec<_>, _>>()?;
    DyckTuple::new(paths)
}

/// The rotation of size m at position i on an ordinary Dyck word: the east
/// step at i jumps past the next 2m steps.
pub fn rotate_dyck(q: &DyckWord, i: usize, m: usize) -> Result<DyckWord, Error> {
    let steps = q.steps();
    let len = steps.len();
    if i == 0 || i + 2 * m > len {
        return Err(Error::IndexOutOfRange {
            index: i + 2 * m,
            len,
        });
    }
    if steps[i - 1] != Step::E || steps[i] != Step::N {
        return Err(Error::Precondition(format!(
            "the rotation needs an east step at position {i} followed by a north step"
        )));
    }
    let mut out = steps.to_vec();
    out[i - 1..i + 2 * m - 1].rotate_left(1);
    DyckWord::new(q.slope(), out)
}

fn rotation_window(q: &DyckWord, i: usize, m: usize) -> Result<&[Step], Error> {
    let steps = q.steps();
    if i == 0 || i + 2 * m > steps.len() {
        return Err(Error::IndexOutOfRange {
            index: i + 2 * m,
            len: steps.len(),
        });
    }
    if steps[i - 1] != Step::E || steps[i] != Step::N {
        return Err(Error::Precondition(format!(
            "the rotation needs an east step at position {i} followed by a north step"
        )));
    }
    Ok(&steps[i..i + 2 * m])
}

/// Whether the 2m steps after position i form a Dyck word.
pub fn is_admissible_rotation(q: &DyckWord, i: usize, m: usize) -> Result<bool, Error> {
    let window = rotation_window(q, i, m)?;
    let mut depth = 0i64;
    for &s in window {
        depth += if s == Step::N { 1 } else { -1 };
        if depth < 0 {
            return Ok(false);
        }
    }
    Ok(depth == 0)
}

/// Whether the 2m steps after position i form a Dyck word that is not a
/// concatenation of two shorter ones.
pub fn is_irreducible_rotation(q: &DyckWord, i: usize, m: usize) -> Result<bool, Error> {
    if !is_admissible_rotation(q, i, m)? {
        return Ok(false);
    }
    let window = rotation_window(q, i, m)?;
    let mut depth = 0i64;
    for &s in &window[..window.len() - 1] {
        depth += if s == Step::N { 1 } else { -1 };
        if depth == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

struct RotationSite {
    eps: usize,
    close: usize,
    n1: usize,
    moved_opens: Vec<usize>,
}

fn rotation_site(pp: &ParenPres, i: usize) -> Result<RotationSite, Error> {
    let tokens = pp.tokens();
    let opens = open_indices(tokens);
    if i == 0 || i > opens.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: opens.len(),
        });
    }
    let eps = opens[i - 1];
    if eps == 0 || tokens[eps - 1] != Token::Star {
        return Err(Error::Precondition(format!(
            "open parenthesis {i} has no star immediately to its left"
        )));
    }
    let close = matching_closes(tokens)[eps];
    let mut depth = 0i64;
    let mut n1 = None;
    for idx in eps + 1..close {
        match tokens[idx] {
            Token::Open => depth += 1,
            Token::Close => depth -= 1,
            Token::Star => {
                if depth == 0 {
                    n1 = Some(idx);
                }
            }
        }
    }
    let n1 = n1.ok_or_else(|| {
        Error::Precondition(format!("open parenthesis {i} carries no stars"))
    })?;
    let moved_opens = opens.into_iter().filter(|&o| eps <= o && o < n1).collect();
    Ok(RotationSite {
        eps,
        close,
        n1,
        moved_opens,
    })
}

/// The rotation on a presentation at the i-th open parenthesis: the pairs
/// opened up to the last own star move one star left, the balanced block
/// after that star stays in place, and the closes guarding the landing
/// slot shift behind the arriving pairs.
pub fn rotate_paren(pp: &ParenPres, i: usize) -> Result<ParenPres, Error> {
    let tokens = pp.tokens();
    let site = rotation_site(pp, i)?;
    let closes = matching_closes(tokens);
    let mut moved = vec![false; tokens.len()];
    for &o in &site.moved_opens {
        moved[o] = true;
        moved[closes[o]] = true;
    }
    let mut chain = vec![false; tokens.len()];
    let mut chain_len = 0usize;
    let mut idx = site.eps - 1;
    while idx > 0 && tokens[idx - 1] == Token::Close {
        chain[idx - 1] = true;
        chain_len += 1;
        idx -= 1;
    }
    let in_block = |idx: usize| site.n1 < idx && idx < site.close;
    let block: Vec<Token> = tokens[site.n1 + 1..site.close].to_vec();
    let width = tokens[site.eps..=site.n1]
        .iter()
        .filter(|&&t| t == Token::Star)
        .count();

    let mut gap = 0usize;
    let mut n1_ordinal = 0usize;
    let mut slots: Vec<Vec<Token>> = vec![Vec::new()];
    let mut landing = Vec::with_capacity(chain_len);
    for (idx, &t) in tokens.iter().enumerate() {
        if in_block(idx) {
            continue;
        }
        match t {
            Token::Star => {
                gap += 1;
                slots.push(Vec::new());
                if idx == site.n1 {
                    n1_ordinal = gap;
                }
            }
            _ if chain[idx] => landing.push((gap + width, t)),
            _ => {
                let g = if moved[idx] { gap - 1 } else { gap };
                slots[g].push(t);
            }
        }
    }
    for (g, t) in landing {
        slots[g].push(t);
    }
    let mut out = Vec::with_capacity(tokens.len());
    for (g, slot) in slots.into_iter().enumerate() {
        if g > 0 {
            out.push(Token::Star);
        }
        if g == n1_ordinal {
            out.extend(block.iter().copied());
        }
        out.extend(slot);
    }
    ParenPres::new(pp.b(), out)
}

/// The rotation on a tuple at the i-th open parenthesis of its
/// presentation: for each of the a stars nearest to the left, the
/// component named by the star's type I label is rotated at the close
/// matching that star, with the size read off the presentation.
pub fn rotate_tuple(
    t: &DyckTuple,
    pp: &ParenPres,
    i: usize,
    a: u64,
) -> Result<DyckTuple, Error> {
    let tokens = pp.tokens();
    let site = rotation_site(pp, i)?;
    let size = site.moved_opens.len();
    let labels = type_i_labels(pp);
    let stars = star_indices(tokens);
    let left_of_eps = stars.iter().filter(|&&s| s < site.eps).count();
    if (left_of_eps as u64) < a {
        return Err(Error::Precondition(format!(
            "open parenthesis {i} has fewer than {a} stars to its left"
        )));
    }
    let mut comps = t.components().to_vec();
    for j in 1..=a as usize {
        let star = left_of_eps - j;
        let label = labels[star];
        let r = (0..=star).filter(|&s| labels[s] == label).count();
        let word = &comps[label as usize - 1];
        let position = word
            .steps()
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::E)
            .nth(r - 1)
            .map(|(idx, _)| idx + 1)
            .ok_or(Error::IndexOutOfRange {
                index: r,
                len: word.steps().len(),
            })?;
        comps[label as usize - 1] = rotate_dyck(word, position, size)?;
    }
    DyckTuple::new(comps)
}
