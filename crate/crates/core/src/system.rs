//! Simply-laced Coxeter systems: generator count plus the set of bond-3 pairs.

use std::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Largest supported generator count; letters are stored as bytes.
pub const MAX_GENERATORS: usize = 255;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    D,
    AffineA,
    AffineD,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::D => 3,
            Family::AffineA => 2,
            Family::AffineD => 4,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::D => "D",
            Family::AffineA => "affA",
            Family::AffineD => "affD",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(Family::A),
            "d" => Ok(Family::D),
            "affa" | "affinea" | "~a" => Ok(Family::AffineA),
            "affd" | "affined" | "~d" => Ok(Family::AffineD),
            other => Err(Error::Parse(format!(
                "unknown family {other:?} (expected A, D, affA or affD)"
            ))),
        }
    }

    fn generator_count(self, rank: usize) -> usize {
        match self {
            Family::A | Family::D => rank,
            Family::AffineA | Family::AffineD => rank + 1,
        }
    }

    fn bond3_edges(self, rank: usize) -> Vec<(usize, usize)> {
        let chain = |from: usize, to: usize| (from..to).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self {
            Family::A => chain(1, rank),
            Family::D => {
                let mut e = vec![(1, 3), (2, 3)];
                e.extend(chain(3, rank));
                e
            }
            Family::AffineA => {
                let mut e = chain(1, rank);
                e.push((1, rank + 1));
                e.push((rank, rank + 1));
                e
            }
            Family::AffineD => {
                let mut e = vec![(1, 3), (2, 3)];
                e.extend(chain(3, rank - 1));
                e.push((rank - 1, rank));
                e.push((rank - 1, rank + 1));
                e
            }
        }
    }
}

/// Knobs that change which moves exist or how far closures may search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveRules {
    /// When false every bond-2 pair behaves as if unbonded, so commutation
    /// moves never apply.
    pub commutations: bool,
    pub node_budget: usize,
}

impl Default for MoveRules {
    fn default() -> Self {
        MoveRules {
            commutations: true,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

/// Generators `1..=n` with a symmetric bond matrix valued in {2, 3}.
#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    n: usize,
    bond3: Vec<bool>,
    name: Option<(Family, usize)>,
    rules: MoveRules,
}

impl PartialEq for CoxeterSystem {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bond3 == other.bond3
    }
}

impl Eq for CoxeterSystem {}

impl CoxeterSystem {
    pub fn from_bond3(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("a system needs at least one generator".into()));
        }
        if n > MAX_GENERATORS {
            return Err(Error::Parse(format!(
                "{n} generators exceeds the supported maximum of {MAX_GENERATORS}"
            )));
        }
        let mut bond3 = vec![false; n * n];
        for &(s, t) in edges {
            for x in [s, t] {
                if x == 0 || x > n {
                    return Err(Error::InvalidLetter { letter: x, n });
                }
            }
            if s == t {
                return Err(Error::Parse(format!("self-loop ({s},{s}) is not a bond")));
            }
            bond3[(s - 1) * n + (t - 1)] = true;
            bond3[(t - 1) * n + (s - 1)] = true;
        }
        Ok(CoxeterSystem {
            n,
            bond3,
            name: None,
            rules: MoveRules::default(),
        })
    }

    pub fn named(family: Family, rank: usize) -> Result<Self> {
        let min = family.min_rank();
        let max = MAX_GENERATORS + 1 - family.generator_count(1);
        if rank < min || rank > max {
            return Err(Error::Rank {
                family: family.tag().into(),
                rank,
                expected: format!("{min} <= rank <= {max}"),
            });
        }
        let mut sys = Self::from_bond3(family.generator_count(rank), &family.bond3_edges(rank))?;
        sys.name = Some((family, rank));
        Ok(sys)
    }

    /// `FAMILY:RANK` shorthand such as `D:4` or `affA:3`.
    pub fn from_shorthand(text: &str) -> Result<Self> {
        let (fam, rank) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected FAMILY:RANK, got {text:?}")))?;
        let rank: usize = rank
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rank in {text:?}")))?;
        Self::named(Family::parse(fam)?, rank)
    }

    /// Parses `n=3; 3: (1,2)(2,3)`. Unlisted pairs get bond 2; a `2:`
    /// section is accepted and changes nothing.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = text.split(';').map(str::trim).filter(|p| !p.is_empty());
        let head = parts
            .next()
            .ok_or_else(|| Error::Parse("empty system description".into()))?;
        let n: usize = head
            .strip_prefix("n")
            .map(str::trim_start)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| Error::Parse(format!("expected n=<count>, got {head:?}")))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator count in {head:?}")))?;
        let mut edges = Vec::new();
        for part in parts {
            let (bond, list) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected <bond>: <pairs>, got {part:?}")))?;
            let bond: usize = bond
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad bond value {:?}", bond.trim())))?;
            if bond != 2 && bond != 3 {
                return Err(Error::Parse(format!(
                    "bond {bond} is not supported; only 2 and 3 are"
                )));
            }
            let pairs = parse_pairs(list)?;
            if bond == 3 {
                edges.extend(pairs);
            } else {
                for (s, t) in pairs {
                    if s == t {
                        return Err(Error::Parse(format!("self-loop ({s},{s}) is not a bond")));
                    }
                }
            }
        }
        Self::from_bond3(n, &edges)
    }

    /// Shorthand first, then the full text format.
    pub fn resolve(text: &str) -> Result<Self> {
        if text.contains('=') {
            Self::parse(text)
        } else {
            Self::from_shorthand(text)
        }
    }

    pub fn with_rules(mut self, rules: MoveRules) -> Self {
        self.rules = rules;
        self
    }

    pub fn with_budget(mut self, node_budget: usize) -> Self {
        self.rules.node_budget = node_budget;
        self
    }

    pub fn without_commutations(mut self) -> Self {
        self.rules.commutations = false;
        self
    }

    pub fn rules(&self) -> MoveRules {
        self.rules
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn name(&self) -> Option<(Family, usize)> {
        self.name
    }

    #[inline]
    pub fn is_bond3(&self, s: u8, t: u8) -> bool {
        s != t && self.bond3[(s as usize - 1) * self.n + (t as usize - 1)]
    }

    /// The bond value `m(s, t)`, with `m(s, s) = 1`.
    pub fn m(&self, s: u8, t: u8) -> u8 {
        if s == t {
            1
        } else if self.is_bond3(s, t) {
            3
        } else {
            2
        }
    }

    /// Whether `s` and `t` may be swapped by a commutation move.
    #[inline]
    pub fn commutes(&self, s: u8, t: u8) -> bool {
        self.rules.commutations && s != t && !self.is_bond3(s, t)
    }

    pub fn bond3_pairs(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for s in 1..=self.n {
            for t in s + 1..=self.n {
                if self.bond3[(s - 1) * self.n + (t - 1)] {
                    out.push((s as u8, t as u8));
                }
            }
        }
        out
    }

    /// No three generators pairwise joined by bond 3.
    pub fn is_triangle_free(&self) -> bool {
        let n = self.n as u8;
        for s in 1..=n {
            for t in s + 1..=n {
                if !self.is_bond3(s, t) {
                    continue;
                }
                for u in t + 1..=n {
                    if self.is_bond3(s, u) && self.is_bond3(t, u) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn spec_text(&self) -> String {
        let pairs = self.bond3_pairs();
        if pairs.is_empty() {
            return format!("n={}", self.n);
        }
        let list: String = pairs.iter().map(|(s, t)| format!("({s},{t})")).collect();
        format!("n={}; 3: {}", self.n, list)
    }

    /// `D:4` for named systems, the text format otherwise.
    pub fn label(&self) -> String {
        match self.name {
            Some((f, r)) => format!("{}:{}", f.tag(), r),
            None => self.spec_text(),
        }
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn parse_pairs(list: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut rest = list.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed pair at {rest:?}")))?;
        let (a, b) = body[..close]
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair needs two indices: {:?}", &body[..close])))?;
        let num = |x: &str| -> Result<usize> {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator index {:?}", x.trim())))
        };
        out.push((num(a)?, num(b)?));
        rest = body[close + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Ok(out)
}
