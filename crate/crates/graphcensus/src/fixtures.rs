//! Reference tables shipped with the crate.

use num_bigint::BigUint;

use crate::census::table::FixtureCell;
use crate::classify::TagPattern;
use crate::error::{Error, Result};

/// Census cells, grouped in `[table-id]` blocks.
pub const CENSUS: &str = include_str!("../data/census.fix");

/// Series and closed forms of the connected multigraph generating functions.
pub const GENERATING_FUNCTIONS: &str = include_str!("../data/gf.txt");

/// Printed cells known to be wrong, with their corrected values.
pub const ERRATA: &str = include_str!("../data/errata.txt");

/// Tables of graphs with `k` components, named `sk<k>` (simple) and `mk<k>`
/// (loopless multigraphs).
pub const COMPONENTS: [(&str, &str); 8] = [
    ("sk2", include_str!("../data/components/sk2.csv")),
    ("sk3", include_str!("../data/components/sk3.csv")),
    ("sk4", include_str!("../data/components/sk4.csv")),
    ("sk5", include_str!("../data/components/sk5.csv")),
    ("mk2", include_str!("../data/components/mk2.csv")),
    ("mk3", include_str!("../data/components/mk3.csv")),
    ("mk4", include_str!("../data/components/mk4.csv")),
    ("mk5", include_str!("../data/components/mk5.csv")),
];

/// One transcribed table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: String,
    pub pattern: TagPattern,
    pub labeled: bool,
    pub cells: Vec<(usize, usize, BigUint)>,
}

impl Fixture {
    pub fn get(&self, e: usize, v: usize) -> Option<&BigUint> {
        self.cells
            .iter()
            .find(|(ce, cv, _)| *ce == e && *cv == v)
            .map(|(_, _, n)| n)
    }
}

/// Parses `[id]` blocks of fixture lines.
pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    let mut out: Vec<Fixture> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(id) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            if out.iter().any(|f| f.id == id) {
                return Err(Error::parse(i + 1, format!("duplicate table id `{id}`")));
            }
            out.push(Fixture {
                id: id.to_string(),
                pattern: TagPattern::any(),
                labeled: false,
                cells: Vec::new(),
            });
            continue;
        }
        let cell = FixtureCell::parse(line, i + 1)?;
        let f = out
            .last_mut()
            .ok_or_else(|| Error::parse(i + 1, "cell before any [table-id]"))?;
        if f.cells.is_empty() {
            f.pattern = cell.pattern;
            f.labeled = cell.labeled;
        } else if f.pattern != cell.pattern || f.labeled != cell.labeled {
            return Err(Error::parse(i + 1, format!("mixed patterns in table `{}`", f.id)));
        }
        f.cells.push((cell.edges, cell.vertices, cell.count));
    }
    Ok(out)
}

/// The embedded census fixtures.
pub fn census_fixtures() -> Vec<Fixture> {
    parse_fixtures(CENSUS).expect("embedded census fixtures parse")
}

/// Looks up an embedded census fixture by id.
pub fn census_fixture(id: &str) -> Option<Fixture> {
    census_fixtures().into_iter().find(|f| f.id == id)
}

/// A printed cell and the value enumeration gives instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Erratum {
    pub table: String,
    pub edges: usize,
    pub vertices: usize,
    pub printed: BigUint,
    pub corrected: BigUint,
}

/// Parses `table;E;V;printed;corrected` lines.
pub fn parse_errata(text: &str) -> Result<Vec<Erratum>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::parse(i + 1, "expected `table;E;V;printed;corrected`");
        let f: Vec<&str> = line.split(';').collect();
        let [table, e, v, printed, corrected] = f[..] else {
            return Err(bad());
        };
        out.push(Erratum {
            table: table.to_string(),
            edges: e.parse().map_err(|_| bad())?,
            vertices: v.parse().map_err(|_| bad())?,
            printed: printed.parse().map_err(|_| bad())?,
            corrected: corrected.parse().map_err(|_| bad())?,
        });
    }
    Ok(out)
}

/// The embedded errata.
pub fn errata() -> Vec<Erratum> {
    parse_errata(ERRATA).expect("embedded errata parse")
}
