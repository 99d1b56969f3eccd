//! Text forms of the objects the commands exchange: step words, integer
//! sequences, Stirling permutations, parenthesis presentations, and tuples
//! of ordinary Dyck words.

use rdk_core::paren::{DyckTuple, ParenPres};
use rdk_core::stirling::StirlingPerm;
use rdk_core::{DyckWord, Slope};

use crate::{object_error, CliError};

pub fn parse_slope(a: u64, b: u64) -> Result<Slope, CliError> {
    Slope::new(a, b).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn parse_word(slope: Slope, input: &str) -> Result<DyckWord, CliError> {
    let word = input.trim();
    if !word.chars().all(|c| c == 'N' || c == 'E') {
        return Err(CliError::Usage(format!(
            "a step word uses only the letters N and E, got {word:?}"
        )));
    }
    DyckWord::from_ascii(slope, word).map_err(object_error)
}

/// Accepts "0,1,2,4", "(0,1,2,4)", "[0 1 2 4]", and blank-separated forms.
pub fn parse_entries(input: &str) -> Result<Vec<u64>, CliError> {
    let inner = input
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    inner
        .split([',', ' ', '\t'])
        .filter(|piece| !piece.is_empty())
        .map(|piece| {
            piece
                .trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("not a sequence entry: {piece:?}")))
        })
        .collect()
}

pub fn show_entries(entries: &[u64]) -> String {
    let pieces: Vec<String> = entries.iter().map(u64::to_string).collect();
    pieces.join(",")
}

/// A Stirling permutation is written as a digit string ("122133") when
/// every letter fits one digit, or comma-separated otherwise. When `b` is
/// not given it is read off the word: each of the n distinct letters must
/// repeat the same number of times.
pub fn parse_stirling(b: Option<u64>, input: &str) -> Result<StirlingPerm, CliError> {
    let word = input.trim();
    let entries = if word.contains([',', ' ']) {
        parse_entries(word)?
    } else {
        word.chars()
            .map(|c| {
                c.to_digit(10).map(u64::from).ok_or_else(|| {
                    CliError::Usage(format!("not a permutation digit: {c:?}"))
                })
            })
            .collect::<Result<Vec<u64>, CliError>>()?
    };
    let b = match b {
        Some(b) => b,
        None => {
            let n = entries.iter().copied().max().unwrap_or(0);
            if n == 0 || entries.len() as u64 % n != 0 {
                return Err(CliError::Invalid(format!(
                    "{} letters do not split evenly over {} values",
                    entries.len(),
                    n
                )));
            }
            entries.len() as u64 / n
        }
    };
    StirlingPerm::new(b, entries).map_err(object_error)
}

pub fn parse_paren(input: &str) -> Result<ParenPres, CliError> {
    let word = input.trim();
    if !word.chars().all(|c| matches!(c, '(' | ')' | '*')) {
        return Err(CliError::Usage(format!(
            "a parenthesis presentation uses only ( ) *, got {word:?}"
        )));
    }
    let opens = word.chars().filter(|&c| c == '(').count() as u64;
    let stars = word.chars().filter(|&c| c == '*').count() as u64;
    if opens == 0 || stars % opens != 0 {
        return Err(CliError::Invalid(String::from(
            "the stars do not divide evenly among the pairs",
        )));
    }
    ParenPres::parse(stars / opens, word).map_err(object_error)
}

/// A tuple is written as comma-separated ordinary Dyck words.
pub fn parse_tuple(input: &str) -> Result<DyckTuple, CliError> {
    let slope = Slope::new(1, 1).expect("1 and 1 are coprime");
    let words = input
        .trim()
        .split(',')
        .map(|piece| parse_word(slope, piece))
        .collect::<Result<Vec<DyckWord>, CliError>>()?;
    DyckTuple::new(words).map_err(object_error)
}

pub fn show_tuple(t: &DyckTuple) -> String {
    let pieces: Vec<String> = t.components().iter().map(DyckWord::to_ascii).collect();
    pieces.join(",")
}

pub fn word_json(p: &DyckWord) -> serde_json::Value {
    serde_json::json!({
        "a": p.slope().a(),
        "b": p.slope().b(),
        "n": p.n(),
        "word": p.to_ascii(),
    })
}
