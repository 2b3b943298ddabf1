use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::classify::TagPattern;
use crate::error::{Error, Result};

/// Exact counts indexed by `(E, V)`. Cells never computed are absent, which
/// is different from a stored zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    patterns: Vec<TagPattern>,
    labeled: bool,
    max_edges: usize,
    max_vertices: usize,
    cells: BTreeMap<(usize, usize), BigUint>,
}

impl CountTable {
    pub fn new(pattern: TagPattern, labeled: bool, max_edges: usize, max_vertices: usize) -> Self {
        CountTable {
            patterns: vec![pattern],
            labeled,
            max_edges,
            max_vertices,
            cells: BTreeMap::new(),
        }
    }

    /// Patterns whose union this table counts (one for a direct census).
    pub fn patterns(&self) -> &[TagPattern] {
        &self.patterns
    }

    /// The patterns joined by ` + `.
    pub fn pattern_label(&self) -> String {
        let v: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        v.join(" + ")
    }

    pub fn labeled(&self) -> bool {
        self.labeled
    }

    pub fn max_edges(&self) -> usize {
        self.max_edges
    }

    pub fn max_vertices(&self) -> usize {
        self.max_vertices
    }

    pub fn set(&mut self, e: usize, v: usize, n: BigUint) {
        self.max_edges = self.max_edges.max(e);
        self.max_vertices = self.max_vertices.max(v);
        self.cells.insert((e, v), n);
    }

    pub fn get(&self, e: usize, v: usize) -> Option<&BigUint> {
        self.cells.get(&(e, v))
    }

    /// Makes a cell blank.
    pub fn clear(&mut self, e: usize, v: usize) {
        self.cells.remove(&(e, v));
    }

    /// Present cells in `(E, V)` order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.cells.iter().map(|(&k, n)| (k, n))
    }

    /// Cell-wise sum; a cell blank in either table is blank in the sum.
    pub fn add_cells(&self, other: &CountTable) -> Result<CountTable> {
        if self.labeled != other.labeled {
            return Err(Error::Incompatible("labeled and unlabeled tables".into()));
        }
        if (self.max_edges, self.max_vertices) != (other.max_edges, other.max_vertices) {
            return Err(Error::Incompatible(format!(
                "bounds E<={} V<={} vs E<={} V<={}",
                self.max_edges, self.max_vertices, other.max_edges, other.max_vertices
            )));
        }
        let mut patterns = self.patterns.clone();
        for p in &other.patterns {
            if !patterns.contains(p) {
                patterns.push(p.clone());
            }
        }
        let cells = self
            .cells
            .iter()
            .filter_map(|(k, a)| other.cells.get(k).map(|b| (*k, a + b)))
            .collect();
        Ok(CountTable {
            patterns,
            labeled: self.labeled,
            max_edges: self.max_edges,
            max_vertices: self.max_vertices,
            cells,
        })
    }

    /// `E` rows, `V` columns from 1, blank for absent cells.
    ///
    /// ```
    /// use graphcensus::{CountTable, TagPattern};
    ///
    /// let mut t = CountTable::new("-d".parse().unwrap(), false, 1, 2);
    /// t.set(0, 1, 1u32.into());
    /// t.set(0, 2, 1u32.into());
    /// t.set(1, 2, 2u32.into());
    /// assert_eq!(t.to_csv(), "E\\V,1,2\n0,1,1\n1,,2\n");
    /// ```
    pub fn to_csv(&self) -> String {
        let mut out = String::from("E\\V");
        for v in 1..=self.max_vertices {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
        for e in 0..=self.max_edges {
            write!(out, "{e}").unwrap();
            for v in 1..=self.max_vertices {
                out.push(',');
                if let Some(n) = self.get(e, v) {
                    write!(out, "{n}").unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    /// Reads the output of [`CountTable::to_csv`].
    pub fn from_csv(text: &str, pattern: TagPattern, labeled: bool) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty table"))?;
        let columns: Vec<usize> = header
            .split(',')
            .skip(1)
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(1, "bad column header"))?;
        let mut t = CountTable::new(pattern, labeled, 0, columns.iter().copied().max().unwrap_or(0));
        for (i, line) in lines {
            let mut fields = line.split(',');
            let e: usize = fields
                .next()
                .unwrap()
                .trim()
                .parse()
                .map_err(|_| Error::parse(i + 1, "bad row label"))?;
            t.max_edges = t.max_edges.max(e);
            for (col, field) in fields.enumerate() {
                let v = *columns
                    .get(col)
                    .ok_or_else(|| Error::parse(i + 1, "more fields than columns"))?;
                let field = field.trim();
                if field.is_empty() {
                    continue;
                }
                let n: BigUint = field
                    .parse()
                    .map_err(|_| Error::parse(i + 1, format!("bad count `{field}`")))?;
                t.set(e, v, n);
            }
        }
        Ok(t)
    }

    /// A `tabular` with `E` rows and `V` columns.
    pub fn to_latex(&self) -> String {
        let mut out = String::new();
        let cols = "r".repeat(self.max_vertices);
        writeln!(out, "\\begin{{tabular}}{{r|{cols}}}").unwrap();
        out.push_str("$E\\backslash V$");
        for v in 1..=self.max_vertices {
            write!(out, " & {v}").unwrap();
        }
        out.push_str("\\\\\n\\hline\n");
        for e in 0..=self.max_edges {
            write!(out, "{e}").unwrap();
            for v in 1..=self.max_vertices {
                match self.get(e, v) {
                    Some(n) => write!(out, "& {n}").unwrap(),
                    None => out.push_str("& "),
                }
            }
            out.push_str("\\\\\n");
        }
        out.push_str("\\hline\n\\end{tabular}\n");
        out
    }

    /// One `pattern;labeled|unlabeled;E;V;count` line per present cell, after a
    /// `# max_e=.. max_v=..` comment carrying the bounds.
    pub fn to_fixture(&self) -> String {
        let kind = if self.labeled { "labeled" } else { "unlabeled" };
        let pattern = self.pattern_label();
        let mut out = format!("# max_e={} max_v={}\n", self.max_edges, self.max_vertices);
        for ((e, v), n) in self.cells() {
            writeln!(out, "{pattern};{kind};{e};{v};{n}").unwrap();
        }
        out
    }

    /// Reads fixture lines of a single table.
    pub fn from_fixture(text: &str) -> Result<Self> {
        let mut table: Option<CountTable> = None;
        let mut bounds = (0, 0);
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix('#') {
                for word in rest.split_whitespace() {
                    if let Some(x) = word.strip_prefix("max_e=") {
                        bounds.0 = x.parse().map_err(|_| Error::parse(i + 1, "bad max_e"))?;
                    } else if let Some(x) = word.strip_prefix("max_v=") {
                        bounds.1 = x.parse().map_err(|_| Error::parse(i + 1, "bad max_v"))?;
                    }
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let cell = FixtureCell::parse(line, i + 1)?;
            let t = table.get_or_insert_with(|| {
                let mut t = CountTable::new(cell.pattern.clone(), cell.labeled, 0, 0);
                t.patterns = cell.patterns.clone();
                t
            });
            if t.labeled != cell.labeled || t.patterns != cell.patterns {
                return Err(Error::parse(i + 1, "cells from more than one table"));
            }
            t.set(cell.edges, cell.vertices, cell.count);
        }
        let mut t = table.ok_or_else(|| Error::parse(0, "no cells"))?;
        t.max_edges = t.max_edges.max(bounds.0);
        t.max_vertices = t.max_vertices.max(bounds.1);
        Ok(t)
    }
}

/// One parsed fixture line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct FixtureCell {
    pub pattern: TagPattern,
    pub patterns: Vec<TagPattern>,
    pub labeled: bool,
    pub edges: usize,
    pub vertices: usize,
    pub count: BigUint,
}

impl FixtureCell {
    pub fn parse(line: &str, lineno: usize) -> Result<Self> {
        let f: Vec<&str> = line.split(';').collect();
        if f.len() != 5 {
            return Err(Error::parse(lineno, "expected 5 `;`-separated fields"));
        }
        let patterns = f[0]
            .split(" + ")
            .map(|p| p.parse::<TagPattern>())
            .collect::<Result<Vec<_>>>()?;
        let labeled = match f[1] {
            "labeled" => true,
            "unlabeled" => false,
            other => return Err(Error::parse(lineno, format!("bad kind `{other}`"))),
        };
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("bad index `{s}`")))
        };
        Ok(FixtureCell {
            pattern: patterns[0].clone(),
            patterns,
            labeled,
            edges: num(f[2])?,
            vertices: num(f[3])?,
            count: f[4]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad count `{}`", f[4])))?,
        })
    }
}

/// Cell-wise sum of tables counting disjoint graph sets.
///
/// All tables must agree on the labeled flag and the bounds.
pub fn marginal(tables: &[CountTable]) -> Result<CountTable> {
    let (first, rest) = tables
        .split_first()
        .ok_or_else(|| Error::Incompatible("no tables to add".into()))?;
    rest.iter().try_fold(first.clone(), |acc, t| acc.add_cells(t))
}
