//! Reduced words in the free group `F_r`.
//!
//! A letter is a nonzero signed generator index: `i` stands for `s_i` and
//! `-i` for `s_i^-1`, with `1 <= i <= r`. Words are written left to right
//! and act on atoms on the left, so `s1 s2` means "apply `s2`, then `s1`".

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Letter = i32;

/// Position of a letter in the canonical order `s1, s1^-1, s2, s2^-1, ...`.
#[inline]
pub fn letter_rank(l: Letter) -> usize {
    2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0)
}

/// Letters of rank `r` in canonical order.
pub fn letters(rank: usize) -> Vec<Letter> {
    (1..=rank as Letter).flat_map(|i| [i, -i]).collect()
}

/// A freely reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn empty(rank: usize) -> Self {
        ReducedWord {
            rank,
            letters: Vec::new(),
        }
    }

    pub fn generator(rank: usize, letter: Letter) -> Result<Self> {
        reduce(rank, &[letter])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length `ℓ`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        ReducedWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Reduced product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            if letters.last() == Some(&-l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        ReducedWord {
            rank: self.rank.max(other.rank),
            letters,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::empty(self.rank), |acc, _| acc.mul(&base))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => self.letters.len() == 1 || a != -b,
            _ => true,
        }
    }

    /// True when every letter is `s1` or `s1^-1` (including the empty word).
    pub fn is_power_of_first(&self) -> bool {
        self.letters.iter().all(|l| l.abs() == 1)
    }

    /// Parses the text form `s1 s2^-1 s1`; `e` or blank is the empty word.
    /// Integer exponents such as `s2^3` are expanded.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            if token == "e" {
                continue;
            }
            let bad = || Error::WordParse(token.to_string());
            let body = token.strip_prefix('s').ok_or_else(bad)?;
            let (index, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index: i64 = index.parse().map_err(|_| bad())?;
            if index < 1 || index as usize > rank {
                return Err(Error::BadGenerator { index, rank });
            }
            let l = if exp < 0 { -(index as Letter) } else { index as Letter };
            raw.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        reduce(rank, &raw)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, &l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Free reduction of a letter sequence.
pub fn reduce(rank: usize, letters: &[Letter]) -> Result<ReducedWord> {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if l == 0 || l.unsigned_abs() as usize > rank {
            return Err(Error::BadGenerator {
                index: l as i64,
                rank,
            });
        }
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Ok(ReducedWord { rank, letters: out })
}

/// Splits `w = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
pub fn cyclic_reduce(w: &ReducedWord) -> (ReducedWord, ReducedWord) {
    let l = w.letters();
    let (mut i, mut j) = (0, l.len());
    while j >= i + 2 && l[i] == -l[j - 1] {
        i += 1;
        j -= 1;
    }
    (
        ReducedWord {
            rank: w.rank,
            letters: l[..i].to_vec(),
        },
        ReducedWord {
            rank: w.rank,
            letters: l[i..j].to_vec(),
        },
    )
}

/// Closed-form size of the ball of radius `radius` in `F_rank`.
pub fn ball_size(rank: usize, radius: usize) -> usize {
    let mut total = 1;
    let mut sphere = 2 * rank;
    for _ in 0..radius {
        total += sphere;
        sphere *= 2 * rank - 1;
    }
    total
}

/// All reduced words of length at most `radius`, in length-lex order
/// (letters ordered `s1, s1^-1, s2, ...`), with lookup tables.
///
/// For every nonempty word the table keeps its leftmost letter and the index
/// of the word with that letter removed. Since the remainder is shorter it
/// always precedes the word, so images of all ball words at a point can be
/// filled in one pass.
#[derive(Clone, Debug)]
pub struct Ball {
    rank: usize,
    radius: usize,
    words: Vec<ReducedWord>,
    head: Vec<Letter>,
    tail: Vec<usize>,
    index: HashMap<Vec<Letter>, usize>,
}

impl Ball {
    pub fn new(rank: usize, radius: usize) -> Self {
        let alphabet = letters(rank);
        let mut words = vec![ReducedWord::empty(rank)];
        let mut level_start = 0;
        for _ in 0..radius {
            let level_end = words.len();
            for k in level_start..level_end {
                for &a in &alphabet {
                    let w = &words[k];
                    if w.letters.last() == Some(&-a) {
                        continue;
                    }
                    let mut letters = w.letters.clone();
                    letters.push(a);
                    words.push(ReducedWord { rank, letters });
                }
            }
            level_start = level_end;
        }
        let index: HashMap<Vec<Letter>, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.letters.clone(), i))
            .collect();
        let mut head = vec![0; words.len()];
        let mut tail = vec![0; words.len()];
        for (i, w) in words.iter().enumerate().skip(1) {
            head[i] = w.letters[0];
            tail[i] = index[&w.letters[1..]];
        }
        Ball {
            rank,
            radius,
            words,
            head,
            tail,
            index,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[ReducedWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &ReducedWord {
        &self.words[i]
    }

    /// Leftmost letter of word `i` (unused for the empty word).
    #[inline]
    pub fn head(&self, i: usize) -> Letter {
        self.head[i]
    }

    /// Index of word `i` with its leftmost letter removed.
    #[inline]
    pub fn tail(&self, i: usize) -> usize {
        self.tail[i]
    }

    pub fn index_of(&self, w: &ReducedWord) -> Option<usize> {
        self.index.get(&w.letters).copied()
    }
}

/// All reduced words of length at most `radius`, in length-lex order.
pub fn ball(rank: usize, radius: usize) -> Vec<ReducedWord> {
    Ball::new(rank, radius).words
}
