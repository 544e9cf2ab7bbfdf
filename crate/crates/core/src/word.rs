use std::fmt;

use crate::error::{Error, Result};
use crate::system::CoxeterSystem;

/// A word over generators `1..=n`, ordered lexicographically by letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// The factor spanning 1-based positions `i..=j`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::Interval {
                start: i,
                end: j,
                len: self.len(),
            });
        }
        Ok(Word(self.0[i - 1..j].to_vec()))
    }

    pub fn concat(parts: &[&Word]) -> Word {
        Word(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    pub fn push(&mut self, s: u8) {
        self.0.push(s);
    }

    pub fn has_adjacent_repeat(&self) -> bool {
        self.0.windows(2).any(|p| p[0] == p[1])
    }

    /// Parses a literal: digits when `n <= 9`, comma-separated otherwise.
    /// `e` and the empty string denote the empty word. Commas are accepted
    /// for any `n`.
    pub fn parse(text: &str, system: &CoxeterSystem) -> Result<Word> {
        let t = text.trim();
        if t.is_empty() || t == "e" {
            return Ok(Word::empty());
        }
        let n = system.n();
        let letters: Vec<usize> = if t.contains(',') || n > 9 {
            t.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad letter {:?} in {t:?}", p.trim())))
                })
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {t:?}")))
                })
                .collect::<Result<_>>()?
        };
        for &l in &letters {
            if l == 0 || l > n {
                return Err(Error::InvalidLetter { letter: l, n });
            }
        }
        Ok(Word(letters.into_iter().map(|l| l as u8).collect()))
    }

    /// Literal in the system's canonical format; the empty word prints `e`.
    pub fn literal(&self, system: &CoxeterSystem) -> String {
        if self.is_empty() {
            return "e".into();
        }
        if system.n() <= 9 {
            self.0.iter().map(|l| char::from(b'0' + l)).collect()
        } else {
            let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
            parts.join(",")
        }
    }

    pub fn check(&self, system: &CoxeterSystem) -> Result<()> {
        let n = system.n();
        match self.0.iter().find(|&&l| l == 0 || l as usize > n) {
            Some(&l) => Err(Error::InvalidLetter {
                letter: l as usize,
                n,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        if self.0.iter().all(|&l| l <= 9) {
            for &l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl From<&[u8]> for Word {
    fn from(letters: &[u8]) -> Self {
        Word(letters.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::Family;

    #[test]
    fn digit_literals() {
        let d4 = CoxeterSystem::named(Family::D, 4).unwrap();
        let w = Word::parse("1321434", &d4).unwrap();
        assert_eq!(w.letters(), &[1, 3, 2, 1, 4, 3, 4]);
        assert_eq!(w.literal(&d4), "1321434");
        assert_eq!(Word::parse("1,3,2", &d4).unwrap().letters(), &[1, 3, 2]);
        assert!(matches!(
            Word::parse("15", &d4),
            Err(Error::InvalidLetter { letter: 5, n: 4 })
        ));
        assert!(Word::parse("1x", &d4).is_err());
    }

    #[test]
    fn comma_literals_for_large_systems() {
        let a12 = CoxeterSystem::named(Family::A, 12).unwrap();
        let w = Word::parse("1,12,3", &a12).unwrap();
        assert_eq!(w.letters(), &[1, 12, 3]);
        assert_eq!(w.literal(&a12), "1,12,3");
        assert_eq!(Word::parse("3", &a12).unwrap().letters(), &[3]);
    }

    #[test]
    fn empty_word() {
        let a1 = CoxeterSystem::named(Family::A, 1).unwrap();
        assert!(Word::parse("", &a1).unwrap().is_empty());
        assert!(Word::parse("e", &a1).unwrap().is_empty());
        assert_eq!(Word::empty().literal(&a1), "e");
    }

    #[test]
    fn factors() {
        let w = Word::new(vec![3, 2, 3, 1, 3, 4, 3]);
        assert_eq!(w.factor(1, 3).unwrap().letters(), &[3, 2, 3]);
        assert_eq!(w.factor(1, 7).unwrap(), w);
        assert!(w.factor(0, 2).is_err());
        assert!(w.factor(3, 2).is_err());
        assert!(w.factor(5, 8).is_err());
        assert_eq!(w.at(4), 1);
    }
}
