//! Tag strings: `d`, `C`, `c`, `i`, `m`, `l` and their negations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Flag letters in their canonical order.
pub const FLAG_LETTERS: [char; 6] = ['d', 'C', 'c', 'i', 'm', 'l'];

const D: usize = 0;
const SC: usize = 1;
const WC: usize = 2;
const I: usize = 3;
const M: usize = 4;
const L: usize = 5;

/// The six properties of one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TagSet {
    pub directed: bool,
    /// `None` for undirected graphs.
    pub strongly_connected: Option<bool>,
    pub weakly_connected: bool,
    pub has_isolated: bool,
    pub has_multiedge: bool,
    pub has_loop: bool,
}

impl TagSet {
    fn flag(&self, i: usize) -> Option<bool> {
        match i {
            D => Some(self.directed),
            SC => self.strongly_connected,
            WC => Some(self.weakly_connected),
            I => Some(self.has_isolated),
            M => Some(self.has_multiedge),
            L => Some(self.has_loop),
            _ => unreachable!(),
        }
    }

    /// Every tag set a graph can carry: 16 undirected, 24 directed.
    pub fn all_possible(directed: bool) -> Vec<TagSet> {
        let strong: &[Option<bool>] = if directed { &[Some(true), Some(false)] } else { &[None] };
        let mut out = Vec::new();
        for &s in strong {
            for bits in 0..16u8 {
                let t = TagSet {
                    directed,
                    strongly_connected: s,
                    weakly_connected: bits & 8 != 0,
                    has_isolated: bits & 4 != 0,
                    has_multiedge: bits & 2 != 0,
                    has_loop: bits & 1 != 0,
                };
                if !impossible_patterns().iter().any(|p| p.matches(&t)) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// The fully specified pattern matching exactly this tag set.
    pub fn to_pattern(&self) -> TagPattern {
        let mut flags = [None; 6];
        for (i, f) in flags.iter_mut().enumerate() {
            *f = self.flag(i);
        }
        TagPattern::from_flags(flags)
    }
}

impl fmt::Display for TagSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_pattern().fmt(f)
    }
}

/// Computes the tags of `g`.
///
/// ```
/// use graphcensus::{classify, Graph};
///
/// let two_cycle = Graph::from_edges(true, 2, [(0, 1), (1, 0)]).unwrap();
/// assert_eq!(classify(&two_cycle).to_string(), "dCc-i-m-l");
/// ```
pub fn classify(g: &Graph) -> TagSet {
    let n = g.vertex_count();
    let mut has_loop = false;
    let mut has_multiedge = false;
    let mut touched = vec![false; n];
    let mut und = vec![Vec::new(); n];
    let mut reach = vec![vec![false; n]; n];
    for ((u, v), m) in g.edges() {
        if m >= 2 {
            has_multiedge = true;
        }
        if u == v {
            has_loop = true;
            continue;
        }
        touched[u] = true;
        touched[v] = true;
        und[u].push(v);
        und[v].push(u);
        reach[u][v] = true;
        if !g.is_directed() {
            reach[v][u] = true;
        }
    }

    let weakly_connected = n <= 1 || {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &und[u] {
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    };

    let strongly_connected = if g.is_directed() {
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    let row = reach[k].clone();
                    for (x, y) in reach[i].iter_mut().zip(row) {
                        *x |= y;
                    }
                }
            }
        }
        let all = (0..n).all(|i| (0..n).all(|j| i == j || reach[i][j]));
        Some(all)
    } else {
        None
    };

    TagSet {
        directed: g.is_directed(),
        strongly_connected,
        weakly_connected,
        has_isolated: touched.iter().any(|&t| !t),
        has_multiedge,
        has_loop,
    }
}

/// A query over tag sets: each flag is required, forbidden, or left open.
///
/// Text form is the concatenation of the specified flags in the order
/// `d C c i m l`, each optionally prefixed by `-`, with `.*` fillers between
/// them. The text reads as an expression matched against the start of a tag
/// string, so a filler right before a positive flag also swallows its `-`:
/// `d.*Cc-i` leaves `C` open and asks for `c` and `-i`. Any written `C` token
/// restricts the pattern to directed graphs.
///
/// ```
/// use graphcensus::TagPattern;
///
/// let p: TagPattern = "-dc.*-m-l".parse().unwrap();
/// assert_eq!(p.to_string(), "-dc.*-m-l");
/// assert_eq!(p.flag('i'), None);
/// assert_eq!(p.flag('c'), Some(true));
///
/// let q: TagPattern = "d.*Cc-i".parse().unwrap();
/// assert_eq!(q.flag('C'), None);
/// assert_eq!(q.flag('c'), Some(true));
/// ```
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TagPattern {
    flags: [Option<bool>; 6],
    written: [Option<bool>; 6],
    // fillers[j]: number of `.*` printed after the j-th written token
    fillers: [u8; 7],
}

impl TagPattern {
    /// The pattern with every flag open.
    pub fn any() -> Self {
        Self::from_flags([None; 6])
    }

    pub fn from_flags(flags: [Option<bool>; 6]) -> Self {
        TagPattern {
            flags,
            written: flags,
            fillers: [0; 7],
        }
    }

    /// Requirement on a flag given by its letter.
    pub fn flag(&self, letter: char) -> Option<bool> {
        let i = FLAG_LETTERS.iter().position(|&c| c == letter)?;
        self.flags[i]
    }

    pub fn flags(&self) -> [Option<bool>; 6] {
        self.flags
    }

    /// Directedness if the pattern fixes it.
    pub fn directed(&self) -> Option<bool> {
        self.flags[D]
    }

    /// True if no graph can match.
    pub fn is_impossible(&self) -> bool {
        [false, true]
            .iter()
            .all(|&d| TagSet::all_possible(d).iter().all(|t| !self.matches(t)))
    }

    /// Whether `t` agrees with every specified flag.
    ///
    /// A `C` or `-C` requirement never matches an undirected tag set.
    pub fn matches(&self, t: &TagSet) -> bool {
        self.flags
            .iter()
            .enumerate()
            .all(|(i, want)| match want {
                None => true,
                Some(w) => t.flag(i) == Some(*w),
            })
    }

    /// The fully spelled-out pattern with the same meaning.
    pub fn normalized(&self) -> Self {
        Self::from_flags(self.flags)
    }
}

impl FromStr for TagPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Pattern {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut written = [None; 6];
        let mut flags = [None; 6];
        let mut fillers = [0u8; 7];
        let mut after_filler = false;
        let mut next = 0usize;
        let mut emitted = 0usize;
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            match c {
                '.' => {
                    if chars.next() != Some('*') {
                        return Err(err("`.` must be followed by `*`"));
                    }
                    fillers[emitted] += 1;
                    after_filler = true;
                }
                '-' | 'd' | 'C' | 'c' | 'i' | 'm' | 'l' => {
                    let (value, letter) = if c == '-' {
                        match chars.next() {
                            Some(l) => (false, l),
                            None => return Err(err("dangling `-`")),
                        }
                    } else {
                        (true, c)
                    };
                    let idx = FLAG_LETTERS
                        .iter()
                        .position(|&f| f == letter)
                        .ok_or_else(|| err(&format!("unknown flag `{letter}`")))?;
                    if idx < next {
                        return Err(err(&format!(
                            "flag `{letter}` out of order or repeated (expected order d C c i m l)"
                        )));
                    }
                    written[idx] = Some(value);
                    flags[idx] = if value && after_filler { None } else { Some(value) };
                    after_filler = false;
                    next = idx + 1;
                    emitted += 1;
                }
                _ => return Err(err(&format!("unexpected character `{c}`"))),
            }
        }
        if written[SC].is_some() {
            if written[D] == Some(false) {
                return Err(err("C applies only to directed graphs"));
            }
            if flags[D].is_none() {
                flags[D] = Some(true);
            }
        }
        Ok(TagPattern {
            flags,
            written,
            fillers,
        })
    }
}

impl fmt::Display for TagPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut emitted = 0;
        for _ in 0..self.fillers[0] {
            f.write_str(".*")?;
        }
        for (i, flag) in self.written.iter().enumerate() {
            if let Some(v) = flag {
                if !v {
                    f.write_str("-")?;
                }
                write!(f, "{}", FLAG_LETTERS[i])?;
                emitted += 1;
                for _ in 0..self.fillers[emitted] {
                    f.write_str(".*")?;
                }
            }
        }
        Ok(())
    }
}

/// `t` matches `p`.
pub fn pattern_matches(t: &TagSet, p: &TagPattern) -> bool {
    p.matches(t)
}

/// The two combinations no graph can have: `d-Cci` and `dC-c`.
pub fn impossible_patterns() -> Vec<TagPattern> {
    vec![
        TagPattern::from_flags([Some(true), Some(false), Some(true), Some(true), None, None]),
        TagPattern::from_flags([Some(true), Some(true), Some(false), None, None, None]),
    ]
}
