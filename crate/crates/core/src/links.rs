//! Braid shadows, dimension, links, link factorization, signatures and the
//! sets of class members sharing signature entries.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::braid::{braid_class, BraidClass};
use crate::error::{Error, Result};
use crate::moves;
use crate::system::CoxeterSystem;
use crate::word::Word;

/// The three positions `center-1..=center+1` of an `sts` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Shadow {
    pub center: usize,
}

impl Shadow {
    pub fn at(center: usize) -> Self {
        Shadow { center }
    }

    pub fn interval(self) -> (usize, usize) {
        (self.center - 1, self.center + 1)
    }

    pub fn overlaps(self, other: Shadow) -> bool {
        self.center.abs_diff(other.center) <= 2
    }
}

impl fmt::Display for Shadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.interval();
        write!(f, "[{a},{b}]")
    }
}

/// Letters at the class shadow centers, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<u8>);

impl Signature {
    pub fn new(entries: Vec<u8>) -> Self {
        Signature(entries)
    }

    pub fn entries(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based ordinal `i`.
    pub fn get(&self, i: usize) -> u8 {
        self.0[i - 1]
    }

    /// 1-based ordinals where the two signatures differ.
    pub fn differences(&self, other: &Signature) -> Result<Vec<usize>> {
        if self.len() != other.len() {
            return Err(Error::SignatureLength(self.len(), other.len()));
        }
        Ok((0..self.len())
            .filter(|&i| self.0[i] != other.0[i])
            .map(|i| i + 1)
            .collect())
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u8::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Factors of a reduced word, each a maximal link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkFactorization {
    pub factors: Vec<Word>,
    /// 1-based inclusive position ranges of the factors.
    pub spans: Vec<(usize, usize)>,
}

impl LinkFactorization {
    /// Positions after which the word is cut.
    pub fn cuts(&self) -> Vec<usize> {
        self.spans.iter().rev().skip(1).rev().map(|&(_, b)| b).collect()
    }

    pub fn display(&self, sys: &CoxeterSystem) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| f.literal(sys)).collect();
        parts.join(" | ")
    }
}

/// Shadows of the word itself (not of its class).
pub fn shadows(sys: &CoxeterSystem, w: &Word) -> Result<Vec<Shadow>> {
    w.check(sys)?;
    Ok(moves::braid_starts(sys, w.letters())
        .map(|s| Shadow::at(s + 2))
        .collect())
}

pub fn class_shadows(sys: &CoxeterSystem, w: &Word) -> Result<Vec<Shadow>> {
    Ok(braid_class(sys, w)?.shadows())
}

pub fn dimension(sys: &CoxeterSystem, w: &Word) -> Result<usize> {
    Ok(braid_class(sys, w)?.dimension())
}

pub fn is_link(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    braid_class(sys, w)?.is_link()
}

pub fn link_factorization(sys: &CoxeterSystem, w: &Word) -> Result<LinkFactorization> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    braid_class(sys, w)?.factorization(sys, w)
}

pub fn signature(sys: &CoxeterSystem, w: &Word) -> Result<Signature> {
    Ok(braid_class(sys, w)?.signature(w))
}

pub fn sigbar_i(sys: &CoxeterSystem, w: &Word, i: usize) -> Result<Vec<Word>> {
    let class = braid_class(sys, w)?;
    let idx = class.sigbar(w, i)?;
    Ok(idx.into_iter().map(|k| class.members()[k].clone()).collect())
}

pub fn sigbar_pair(sys: &CoxeterSystem, a: &Word, b: &Word) -> Result<Vec<Word>> {
    let class = braid_class(sys, a)?;
    let idx = class.sigbar_pair(sys, a, b)?;
    Ok(idx.into_iter().map(|k| class.members()[k].clone()).collect())
}

/// Letters of `w` at 1-based positions `i..=j`.
pub fn local_support(w: &Word, i: usize, j: usize) -> Result<BTreeSet<u8>> {
    Ok(w.factor(i, j)?.letters().iter().copied().collect())
}

/// Letters at positions `i..=j` over every member of the class of `w`.
pub fn class_local_support(sys: &CoxeterSystem, w: &Word, i: usize, j: usize) -> Result<BTreeSet<u8>> {
    braid_class(sys, w)?.local_support(i, j)
}

impl BraidClass {
    /// Length one, or odd length `m` with class shadows exactly
    /// `[1,3], [3,5], ..., [m-2,m]`.
    pub fn is_link(&self) -> Result<bool> {
        let m = self.word_len();
        if m == 0 {
            return Err(Error::EmptyWord);
        }
        if m == 1 {
            return Ok(true);
        }
        Ok(m % 2 == 1 && self.shadow_centers().iter().copied().eq((2..m).step_by(2)))
    }

    pub fn local_support(&self, i: usize, j: usize) -> Result<BTreeSet<u8>> {
        let mut out = BTreeSet::new();
        for w in self.members() {
            out.extend(local_support(w, i, j)?);
        }
        Ok(out)
    }

    /// Indices of members agreeing with `w` at signature entry `i`.
    pub fn sigbar(&self, w: &Word, i: usize) -> Result<Vec<usize>> {
        self.check_ordinal(i)?;
        let c = self.shadow_centers()[i - 1];
        let letter = w.at(c);
        Ok((0..self.len())
            .filter(|&k| self.members()[k].at(c) == letter)
            .collect())
    }

    /// Indices of members agreeing with `a` wherever `sig(a)` and `sig(b)`
    /// agree.
    pub fn sigbar_pair(&self, sys: &CoxeterSystem, a: &Word, b: &Word) -> Result<Vec<usize>> {
        self.require_member(sys, a)?;
        self.require_member(sys, b)?;
        let common: Vec<usize> = self
            .shadow_centers()
            .iter()
            .copied()
            .filter(|&c| a.at(c) == b.at(c))
            .collect();
        Ok((0..self.len())
            .filter(|&k| common.iter().all(|&c| self.members()[k].at(c) == a.at(c)))
            .collect())
    }

    /// Maximal chains of class shadows overlapping in one position become
    /// factors; positions under no shadow become length-one factors. Each
    /// factor is checked to be a link and the class is checked to be the
    /// set of concatenations of factor-class members.
    pub fn factorization(&self, sys: &CoxeterSystem, w: &Word) -> Result<LinkFactorization> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        self.require_member(sys, w)?;
        let spans = self.factor_spans()?;
        let factors: Vec<Word> = spans
            .iter()
            .map(|&(a, b)| w.factor(a, b))
            .collect::<Result<_>>()?;

        let mut product = 1usize;
        let mut classes = Vec::with_capacity(factors.len());
        for f in &factors {
            let fc = BraidClass::of_reduced(sys, f)?;
            if !fc.is_link()? {
                return Err(Error::Invariant(format!(
                    "factor {} of {} is not a link",
                    f.literal(sys),
                    w.literal(sys)
                )));
            }
            product = product.saturating_mul(fc.len());
            classes.push(fc);
        }
        if product != self.len() {
            return Err(Error::Invariant(format!(
                "factor classes multiply to {product}, class of {} has {}",
                w.literal(sys),
                self.len()
            )));
        }
        for x in self.members() {
            for (&(a, b), fc) in spans.iter().zip(&classes) {
                if !fc.contains(&x.factor(a, b)?) {
                    return Err(Error::Invariant(format!(
                        "member {} does not split into factor-class members",
                        x.literal(sys)
                    )));
                }
            }
        }
        Ok(LinkFactorization { factors, spans })
    }

    /// The factor position ranges derived from the class shadows alone.
    pub fn factor_spans(&self) -> Result<Vec<(usize, usize)>> {
        let m = self.word_len();
        let mut spans = Vec::new();
        let mut pos = 1;
        let centers = self.shadow_centers();
        let mut k = 0;
        while pos <= m {
            if k < centers.len() && centers[k] - 1 == pos {
                let mut end = centers[k] + 1;
                k += 1;
                while k < centers.len() && centers[k] - 1 <= end {
                    if centers[k] - 1 != end {
                        return Err(Error::Invariant(format!(
                            "class shadows centered at {} and {} overlap in two positions",
                            centers[k - 1],
                            centers[k]
                        )));
                    }
                    end = centers[k] + 1;
                    k += 1;
                }
                spans.push((pos, end));
                pos = end + 1;
            } else {
                spans.push((pos, pos));
                pos += 1;
            }
        }
        Ok(spans)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::Family;

    fn sys(f: Family, r: usize) -> CoxeterSystem {
        CoxeterSystem::named(f, r).unwrap()
    }

    fn w(s: &str, sys: &CoxeterSystem) -> Word {
        Word::parse(s, sys).unwrap()
    }

    fn centers(v: &[Shadow]) -> Vec<usize> {
        v.iter().map(|s| s.center).collect()
    }

    #[test]
    fn word_shadows() {
        let a6 = sys(Family::A, 6);
        assert_eq!(centers(&shadows(&a6, &w("1213243565", &a6)).unwrap()), vec![2, 9]);
        let d4 = sys(Family::D, 4);
        assert_eq!(centers(&shadows(&d4, &w("4341232", &d4)).unwrap()), vec![2, 6]);
        let a2 = sys(Family::A, 2);
        assert!(shadows(&a2, &w("12", &a2)).unwrap().is_empty());
    }

    #[test]
    fn shadow_display() {
        assert_eq!(Shadow::at(9).to_string(), "[8,10]");
    }

    #[test]
    fn links() {
        let d4 = sys(Family::D, 4);
        assert!(is_link(&d4, &w("4341232", &d4)).unwrap());
        let a6 = sys(Family::A, 6);
        assert!(!is_link(&a6, &w("1213243565", &a6)).unwrap());
        let a1 = sys(Family::A, 1);
        assert!(is_link(&a1, &w("1", &a1)).unwrap());
        assert_eq!(is_link(&a1, &Word::empty()), Err(Error::EmptyWord));
        let a3 = sys(Family::A, 3);
        assert!(!is_link(&a3, &w("123", &a3)).unwrap());
    }

    #[test]
    fn factorizations() {
        let a6 = sys(Family::A, 6);
        let f = link_factorization(&a6, &w("1213243565", &a6)).unwrap();
        assert_eq!(f.display(&a6), "1213243 | 565");
        assert_eq!(f.cuts(), vec![7]);
        let a3 = sys(Family::A, 3);
        let f = link_factorization(&a3, &w("13", &a3)).unwrap();
        assert_eq!(f.display(&a3), "1 | 3");
        assert_eq!(f.spans, vec![(1, 1), (2, 2)]);
    }

    #[test]
    fn signatures() {
        let d4 = sys(Family::D, 4);
        assert_eq!(signature(&d4, &w("343132343", &d4)).unwrap().to_string(), "(4,1,2,4)");
        assert_eq!(signature(&d4, &w("4341232", &d4)).unwrap().to_string(), "(3,1,3)");
        let a2 = sys(Family::A, 2);
        assert_eq!(signature(&a2, &w("12", &a2)).unwrap().to_string(), "()");
    }

    #[test]
    fn sigbar_sets() {
        let d4 = sys(Family::D, 4);
        let b1 = w("4341232", &d4);
        let set = sigbar_i(&d4, &b1, 2).unwrap();
        assert!(set.iter().all(|x| x.at(4) == 1));
        assert!(sigbar_i(&d4, &b1, 0).is_err());
        assert!(sigbar_i(&d4, &b1, 4).is_err());
        assert_eq!(sigbar_pair(&d4, &b1, &b1).unwrap(), vec![b1.clone()]);
        let other = w("3431232", &d4);
        let pair = sigbar_pair(&d4, &b1, &other).unwrap();
        assert_eq!(pair, vec![other, b1]);
    }

    #[test]
    fn pair_requires_same_class() {
        let d4 = sys(Family::D, 4);
        assert!(matches!(
            sigbar_pair(&d4, &w("4341232", &d4), &w("343132343", &d4)),
            Err(Error::NotBraidEquivalent(_))
        ));
    }

    #[test]
    fn supports() {
        let d4 = sys(Family::D, 4);
        let x = w("4341232", &d4);
        assert_eq!(local_support(&x, 3, 3).unwrap(), BTreeSet::from([4]));
        assert_eq!(local_support(&x, 1, 3).unwrap(), BTreeSet::from([3, 4]));
        assert!(local_support(&x, 6, 9).is_err());
        let aff = sys(Family::AffineA, 2);
        assert_eq!(
            class_local_support(&aff, &w("1213121", &aff), 4, 4).unwrap(),
            BTreeSet::from([1, 2, 3])
        );
    }
}
