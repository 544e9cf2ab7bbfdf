//! Commutation and braid moves, move closures and the reducedness test.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::system::CoxeterSystem;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Commutation,
    Braid,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Commutation => "commutation",
            MoveKind::Braid => "braid",
        }
    }
}

/// A move at 1-based `position`: a commutation spans two letters from
/// there, a braid move three.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoveSite {
    pub kind: MoveKind,
    pub position: usize,
}

impl MoveSite {
    pub fn braid(position: usize) -> Self {
        MoveSite {
            kind: MoveKind::Braid,
            position,
        }
    }

    pub fn commutation(position: usize) -> Self {
        MoveSite {
            kind: MoveKind::Commutation,
            position,
        }
    }
}

/// Which move kinds a closure may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveSet {
    pub commutation: bool,
    pub braid: bool,
}

impl MoveSet {
    pub const ALL: MoveSet = MoveSet {
        commutation: true,
        braid: true,
    };
    pub const BRAID: MoveSet = MoveSet {
        commutation: false,
        braid: true,
    };
    pub const COMMUTATION: MoveSet = MoveSet {
        commutation: true,
        braid: false,
    };
}

#[inline]
fn is_braid_at(sys: &CoxeterSystem, w: &[u8], i: usize) -> bool {
    i + 2 < w.len() && w[i] == w[i + 2] && sys.is_bond3(w[i], w[i + 1])
}

#[inline]
fn is_commutation_at(sys: &CoxeterSystem, w: &[u8], i: usize) -> bool {
    i + 1 < w.len() && sys.commutes(w[i], w[i + 1])
}

/// 0-based starts of `sts` factors with `m(s,t) = 3`.
pub(crate) fn braid_starts<'a>(sys: &'a CoxeterSystem, w: &'a [u8]) -> impl Iterator<Item = usize> + 'a {
    (0..w.len().saturating_sub(2)).filter(move |&i| is_braid_at(sys, w, i))
}

pub fn enumerate_move_sites(sys: &CoxeterSystem, w: &Word) -> Result<Vec<MoveSite>> {
    w.check(sys)?;
    let l = w.letters();
    let mut out = Vec::new();
    for i in 0..l.len() {
        if is_commutation_at(sys, l, i) {
            out.push(MoveSite::commutation(i + 1));
        }
        if is_braid_at(sys, l, i) {
            out.push(MoveSite::braid(i + 1));
        }
    }
    Ok(out)
}

pub fn apply_move(sys: &CoxeterSystem, w: &Word, site: MoveSite) -> Result<Word> {
    w.check(sys)?;
    let l = w.letters();
    let i = site.position;
    if i == 0 {
        return Err(Error::InvalidSite("positions are 1-based".into()));
    }
    let mut out = l.to_vec();
    match site.kind {
        MoveKind::Commutation => {
            if i + 1 > l.len() {
                return Err(Error::InvalidSite(format!(
                    "commutation at {i} runs past the end of a word of length {}",
                    l.len()
                )));
            }
            if !is_commutation_at(sys, l, i - 1) {
                return Err(Error::InvalidSite(format!(
                    "letters {} and {} at {i} do not commute",
                    l[i - 1],
                    l[i]
                )));
            }
            out.swap(i - 1, i);
        }
        MoveKind::Braid => {
            if i + 2 > l.len() {
                return Err(Error::InvalidSite(format!(
                    "braid move at {i} runs past the end of a word of length {}",
                    l.len()
                )));
            }
            if !is_braid_at(sys, l, i - 1) {
                return Err(Error::InvalidSite(format!(
                    "letters {}{}{} at {i} are not of the form sts with m(s,t)=3",
                    l[i - 1],
                    l[i],
                    l[i + 1]
                )));
            }
            let (s, t) = (l[i - 1], l[i]);
            out[i - 1] = t;
            out[i] = s;
            out[i + 1] = t;
        }
    }
    Ok(Word::new(out))
}

/// Calls `f` with each word one move away from `w`.
pub(crate) fn for_each_neighbor(sys: &CoxeterSystem, w: &[u8], moves: MoveSet, mut f: impl FnMut(Vec<u8>, MoveSite)) {
    for i in 0..w.len() {
        if moves.commutation && is_commutation_at(sys, w, i) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            f(v, MoveSite::commutation(i + 1));
        }
        if moves.braid && is_braid_at(sys, w, i) {
            let mut v = w.to_vec();
            let (s, t) = (w[i], w[i + 1]);
            v[i] = t;
            v[i + 1] = s;
            v[i + 2] = t;
            f(v, MoveSite::braid(i + 1));
        }
    }
}

/// Breadth-first search over a move closure.
pub(crate) struct Exploration {
    pub words: Vec<Word>,
    pub hit: Option<usize>,
}

/// Explores the closure of `start`, stopping early at the first word that
/// satisfies `stop`. Visiting more than the system's node budget is an
/// error rather than a truncation.
pub(crate) fn explore(
    sys: &CoxeterSystem,
    start: &Word,
    moves: MoveSet,
    mut stop: impl FnMut(&Word) -> bool,
) -> Result<Exploration> {
    let budget = sys.rules().node_budget;
    let mut seen: HashSet<Word> = HashSet::new();
    let mut words = vec![start.clone()];
    seen.insert(start.clone());
    if stop(start) {
        return Ok(Exploration { words, hit: Some(0) });
    }
    let mut head = 0;
    while head < words.len() {
        let current = words[head].letters().to_vec();
        head += 1;
        let mut found = None;
        let mut over = false;
        for_each_neighbor(sys, &current, moves, |v, _| {
            if found.is_some() || over {
                return;
            }
            let v = Word::new(v);
            if seen.contains(&v) {
                return;
            }
            if seen.len() >= budget {
                over = true;
                return;
            }
            seen.insert(v.clone());
            let hit = stop(&v);
            words.push(v);
            if hit {
                found = Some(words.len() - 1);
            }
        });
        if over {
            return Err(Error::Budget { budget });
        }
        if found.is_some() {
            return Ok(Exploration { words, hit: found });
        }
    }
    Ok(Exploration { words, hit: None })
}

pub(crate) fn closure_sorted(sys: &CoxeterSystem, w: &Word, moves: MoveSet) -> Result<Vec<Word>> {
    let mut words = explore(sys, w, moves, |_| false)?.words;
    words.sort_unstable();
    Ok(words)
}

/// Every word reachable from `w` by commutation and braid moves, sorted.
pub fn tits_closure(sys: &CoxeterSystem, w: &Word) -> Result<Vec<Word>> {
    w.check(sys)?;
    closure_sorted(sys, w, MoveSet::ALL)
}

/// A word is reduced exactly when no word in its move closure has two equal
/// adjacent letters.
pub fn is_reduced(sys: &CoxeterSystem, w: &Word) -> Result<bool> {
    w.check(sys)?;
    if w.has_adjacent_repeat() {
        return Ok(false);
    }
    Ok(explore(sys, w, MoveSet::ALL, Word::has_adjacent_repeat)?
        .hit
        .is_none())
}

/// Deletes an adjacent repeated pair from some closure member until none is
/// left.
pub fn reduce(sys: &CoxeterSystem, w: &Word) -> Result<Word> {
    w.check(sys)?;
    let mut current = w.clone();
    loop {
        let ex = explore(sys, &current, MoveSet::ALL, Word::has_adjacent_repeat)?;
        let Some(hit) = ex.hit else {
            return Ok(current);
        };
        let letters = ex.words[hit].letters();
        let i = letters
            .windows(2)
            .position(|p| p[0] == p[1])
            .expect("hit has a repeat");
        let mut next = letters.to_vec();
        next.drain(i..i + 2);
        current = Word::new(next);
    }
}

pub(crate) fn require_reduced(sys: &CoxeterSystem, w: &Word) -> Result<()> {
    if is_reduced(sys, w)? {
        Ok(())
    } else {
        Err(Error::NotReduced(w.literal(sys)))
    }
}
