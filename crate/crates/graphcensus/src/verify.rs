//! Recomputes the embedded reference tables and reports every difference.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::census::{Census, Family};
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::graph::Graph;
use crate::mset::{k_component_table, multiset_transform, total_over_components, PairTable, Seq};
use crate::polya::{
    connected_multigraph_gf, connected_simple_gf, connected_table, edge_cycle_index, polya_substitute,
    FactoredGf, Poly, Weight,
};

/// Largest `E` and `V` checked for each kind of census table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub directed_edges: usize,
    pub directed_vertices: usize,
    pub undirected_edges: usize,
    pub undirected_vertices: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            directed_edges: 6,
            directed_vertices: 6,
            undirected_edges: 8,
            undirected_vertices: 8,
        }
    }
}

impl Bounds {
    pub fn uniform(edges: usize, vertices: usize) -> Self {
        Bounds {
            directed_edges: edges,
            directed_vertices: vertices,
            undirected_edges: edges,
            undirected_vertices: vertices,
        }
    }

    fn for_side(&self, directed: bool) -> (usize, usize) {
        if directed {
            (self.directed_edges, self.directed_vertices)
        } else {
            (self.undirected_edges, self.undirected_vertices)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub table: String,
    pub edges: usize,
    pub vertices: usize,
    pub expected: BigInt,
    pub got: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} E={} V={}: expected {}, got {}",
            self.table, self.edges, self.vertices, self.expected, self.got
        )
    }
}

/// Outcome of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub skipped: usize,
    pub mismatches: Vec<Mismatch>,
    /// Differences from the printed value that a listed erratum accounts for.
    pub errata: Vec<Mismatch>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.mismatches.extend(other.mismatches);
        self.errata.extend(other.errata);
    }

    pub(crate) fn compare(&mut self, table: &str, e: usize, v: usize, expected: &BigUint, got: &BigUint) {
        self.compare_int(table, e, v, &BigInt::from(expected.clone()), &BigInt::from(got.clone()));
    }

    /// Like [`Report::compare`] for a cell computed from a base table; a
    /// difference counts as an erratum when the base with its misprints
    /// restored reproduces the printed value.
    fn compare_derived(
        &mut self,
        table: &str,
        e: usize,
        v: usize,
        expected: &BigUint,
        got: &BigUint,
        from_print: &BigUint,
    ) {
        if expected != got && expected == from_print {
            self.checked += 1;
            self.errata.push(Mismatch {
                table: table.to_string(),
                edges: e,
                vertices: v,
                expected: expected.clone().into(),
                got: got.clone().into(),
            });
        } else {
            self.compare(table, e, v, expected, got);
        }
    }

    fn compare_int(&mut self, table: &str, e: usize, v: usize, expected: &BigInt, got: &BigInt) {
        self.checked += 1;
        if expected == got {
            return;
        }
        let m = Mismatch {
            table: table.to_string(),
            edges: e,
            vertices: v,
            expected: expected.clone(),
            got: got.clone(),
        };
        let listed = fixtures::errata().iter().any(|x| {
            (x.table.as_str(), x.edges, x.vertices) == (table, e, v)
                && BigInt::from(x.printed.clone()) == *expected
                && BigInt::from(x.corrected.clone()) == *got
        });
        if listed {
            self.errata.push(m);
        } else {
            self.mismatches.push(m);
        }
    }
}

/// Class caches shared across many census tables.
#[derive(Default)]
pub struct CensusPool {
    budget: Option<u64>,
    caches: HashMap<Family, Census>,
}

impl CensusPool {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_budget(budget: u64) -> Self {
        CensusPool {
            budget: Some(budget),
            caches: HashMap::new(),
        }
    }

    pub fn census(&mut self, family: Family) -> &mut Census {
        let budget = self.budget;
        self.caches.entry(family).or_insert_with(|| match budget {
            Some(b) => Census::with_budget(family, b),
            None => Census::new(family),
        })
    }
}

/// Checks every census fixture cell inside `bounds`; cells outside are skipped.
pub fn verify_census(fixtures: &[Fixture], bounds: Bounds, pool: &mut CensusPool) -> Result<Report> {
    let mut report = Report::default();
    for f in fixtures {
        let sides: Vec<bool> = match f.pattern.directed() {
            Some(d) => vec![d],
            None => vec![false, true],
        };
        let mut inside = Vec::new();
        for (e, v, n) in &f.cells {
            let within = sides.iter().all(|&d| {
                let (me, mv) = bounds.for_side(d);
                *e <= me && *v <= mv
            });
            if within && *v >= 1 {
                inside.push((*e, *v, n));
            } else {
                report.skipped += 1;
            }
        }
        if inside.is_empty() {
            continue;
        }
        let max_e = inside.iter().map(|c| c.0).max().unwrap();
        let max_v = inside.iter().map(|c| c.1).max().unwrap();
        let mut total: HashMap<(usize, usize), BigUint> = HashMap::new();
        for &d in &sides {
            let census = pool.census(Family::for_pattern(&f.pattern, d));
            let t = census.count(&f.pattern, f.labeled, max_e, max_v)?;
            for ((e, v), n) in t.cells() {
                *total.entry((e, v)).or_default() += n;
            }
        }
        for (e, v, expected) in inside {
            report.compare(&f.id, e, v, expected, &total[&(e, v)]);
        }
    }
    Ok(report)
}

/// A line of the generating-function fixture file.
#[derive(Clone, Debug, PartialEq, Eq)]
enum GfLine {
    Series(Vec<BigInt>),
    Closed(FactoredGf),
}

fn parse_gf_fixtures(text: &str) -> Result<Vec<(String, GfLine)>> {
    let ints = |s: &str, line: usize| -> Result<Vec<BigInt>> {
        s.split(',')
            .map(|x| x.trim().parse().map_err(|_| Error::parse(line, format!("bad integer `{x}`"))))
            .collect()
    };
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(';').collect();
        match fields[..] {
            [name, "series", values] => out.push((name.to_string(), GfLine::Series(ints(values, i + 1)?))),
            [name, "closed", shift, num, den] => {
                let shift = shift.parse().map_err(|_| Error::parse(i + 1, "bad shift"))?;
                let mut factors = std::collections::BTreeMap::new();
                for f in den.split_whitespace() {
                    let (d, e) = f
                        .split_once('^')
                        .and_then(|(d, e)| Some((d.parse::<usize>().ok()?, e.parse::<u32>().ok()?)))
                        .ok_or_else(|| Error::parse(i + 1, format!("bad factor `{f}`")))?;
                    *factors.entry(d).or_insert(0) += e;
                }
                let num = Poly::new(ints(num, i + 1)?);
                out.push((name.to_string(), GfLine::Closed(FactoredGf::new(shift, num, factors))));
            }
            _ => return Err(Error::parse(i + 1, "expected `name;series;...` or `name;closed;...`")),
        }
    }
    Ok(out)
}

/// The small graphs behind `c2` and `g1`..`g6`.
fn named_graph(name: &str) -> Option<Graph> {
    let edges: &[(usize, usize)] = match name {
        "c2" => &[(0, 1), (1, 2)],
        "g1" => &[(0, 1), (1, 2), (2, 3)],
        "g2" => &[(0, 1), (1, 2), (2, 0), (2, 3)],
        "g3" => &[(0, 1), (0, 2), (0, 3)],
        "g4" => &[(0, 1), (1, 2), (2, 3), (3, 0)],
        "g5" => &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        "g6" => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        _ => return None,
    };
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max()?;
    Graph::from_edges(false, n, edges.iter().copied()).ok()
}

/// Closed forms are compared through this many coefficients.
pub const CLOSED_FORM_TERMS: usize = 30;

/// Checks the generating-function fixtures for `V <= max_vertices`, and the
/// columns of the connected census tables they must reproduce.
pub fn verify_gf(max_vertices: usize) -> Result<Report> {
    let mut report = Report::default();
    let mut cache: HashMap<String, Vec<BigInt>> = HashMap::new();
    let mut ours = |name: &str, n: usize| -> Result<Option<Vec<BigInt>>> {
        if let Some(s) = cache.get(name).filter(|s| s.len() >= n) {
            return Ok(Some(s[..n].to_vec()));
        }
        let g = if let Some(g) = named_graph(name) {
            polya_substitute(&edge_cycle_index(&g)?, Weight::AtLeastOneEdge)
        } else if let Some(v) = name.strip_prefix('V').and_then(|v| v.parse::<usize>().ok()) {
            if v > max_vertices {
                return Ok(None);
            }
            connected_multigraph_gf(v)?
        } else {
            return Err(Error::Incompatible(format!("unknown generating function `{name}`")));
        };
        let s = g.series(n.max(CLOSED_FORM_TERMS))?;
        cache.insert(name.to_string(), s.clone());
        Ok(Some(s[..n].to_vec()))
    };
    for (name, line) in parse_gf_fixtures(fixtures::GENERATING_FUNCTIONS)? {
        let (expected, label) = match &line {
            GfLine::Series(s) => (s.clone(), format!("gf.{name}.series")),
            GfLine::Closed(f) => (f.series(CLOSED_FORM_TERMS)?, format!("gf.{name}.closed")),
        };
        let Some(got) = ours(&name, expected.len())? else {
            report.skipped += expected.len();
            continue;
        };
        let v = name.strip_prefix('V').and_then(|v| v.parse().ok()).unwrap_or(0);
        for (e, (x, y)) in expected.iter().zip(&got).enumerate() {
            report.compare_int(&label, e, v, x, y);
        }
    }

    let columns = [
        ("tab.191646", Weight::AtLeastOneEdge, 6usize, 10usize),
        ("tab.046742", Weight::CountUnderlying, 7, usize::MAX),
    ];
    for (id, weight, top_v, top_e) in columns {
        let fixture = fixtures::census_fixture(id)
            .ok_or_else(|| Error::Incompatible(format!("no fixture `{id}`")))?;
        for v in 2..=top_v.min(max_vertices) {
            let g = match weight {
                Weight::AtLeastOneEdge => connected_multigraph_gf(v)?,
                Weight::CountUnderlying => connected_simple_gf(v)?,
            };
            let cells: Vec<_> = fixture.cells.iter().filter(|c| c.1 == v && c.0 <= top_e).collect();
            let n = cells.iter().map(|c| c.0 + 1).max().unwrap_or(0);
            let s = g.series(n)?;
            for (e, _, expected) in cells {
                report.compare_int(id, *e, v, &BigInt::from(expected.clone()), &s[*e]);
            }
        }
    }
    Ok(report)
}

/// `(E, V)` extent covering the shipped component tables.
pub const COMPONENT_EXTENT: (usize, usize) = (13, 15);

/// Connected simple graphs and connected loopless multigraphs over the
/// component-table extent.
pub fn connected_bases() -> Result<(PairTable, PairTable)> {
    let (e, v) = COMPONENT_EXTENT;
    let simple = connected_table(Family::simple(false), e, v)?;
    let multi = connected_table(Family::loopless(false), e, v)?;
    Ok((simple, multi))
}

/// The fruit example: `T_{n,1}` = 3, 1, 0, 1 kinds of weight 1, 2, 3, 4.
const FRUIT: [u32; 4] = [3, 1, 0, 1];
const FRUIT_ROW_SUMS: [u32; 8] = [3, 7, 13, 23, 37, 57, 83, 118];

/// Checks the multiset transforms: the fruit example, the component tables
/// `sk2..sk5`, `mk2..mk5`, and the totals over all component counts.
pub fn verify_mset() -> Result<Report> {
    let mut report = Report::default();
    let fruit = multiset_transform(&Seq::from_positive(FRUIT), FRUIT_ROW_SUMS.len(), FRUIT_ROW_SUMS.len());
    for (i, &s) in FRUIT_ROW_SUMS.iter().enumerate() {
        report.compare("fruit", i + 1, 0, &BigUint::from(s), &fruit.row_sum(i + 1));
    }

    let (simple, multi) = connected_bases()?;
    report.merge(check_bases(&simple, &multi)?);
    let printed_simple = with_printed_cells(&simple, "tab.046742");
    let printed_multi = with_printed_cells(&multi, "tab.191646");
    for (name, text) in fixtures::COMPONENTS {
        let expected = PairTable::from_text(text)?;
        let (base, printed_base) = if name.starts_with('s') {
            (&simple, &printed_simple)
        } else {
            (&multi, &printed_multi)
        };
        let (me, mv) = (expected.max_edges(), expected.max_vertices());
        let got = k_component_table(base, expected.k, me, mv)?;
        let from_print = k_component_table(printed_base, expected.k, me, mv)?;
        for ((e, v), n) in expected.cells() {
            let g = got.get(e, v).cloned().unwrap_or_default();
            let p = from_print.get(e, v).cloned().unwrap_or_default();
            report.compare_derived(name, e, v, n, &g, &p);
        }
    }

    for (id, base, printed_base) in [
        ("tab.008406", &simple, &printed_simple),
        ("tab.192517", &multi, &printed_multi),
    ] {
        let fixture = fixtures::census_fixture(id)
            .ok_or_else(|| Error::Incompatible(format!("no fixture `{id}`")))?;
        let max_e = fixture.cells.iter().map(|c| c.0).max().unwrap_or(0);
        let max_v = fixture.cells.iter().map(|c| c.1).max().unwrap_or(1);
        let totals = total_over_components(base, max_e, max_v)?;
        let from_print = total_over_components(printed_base, max_e, max_v)?;
        for (e, v, expected) in &fixture.cells {
            if *v == 0 {
                report.skipped += 1;
                continue;
            }
            let g = totals.get(*e, *v).cloned().unwrap_or_default();
            let p = from_print.get(*e, *v).cloned().unwrap_or_default();
            report.compare_derived(id, *e, *v, expected, &g, &p);
        }
    }
    Ok(report)
}

/// Window in which the connected simple base is recounted by enumeration.
const BASE_CENSUS_WINDOW: (usize, usize) = (8, 8);

/// The connected bases against exhaustive enumeration (simple graphs) and
/// against the per-vertex generating functions (multigraphs, `V <= 7`).
fn check_bases(simple: &PairTable, multi: &PairTable) -> Result<Report> {
    let mut report = Report::default();
    let (we, wv) = BASE_CENSUS_WINDOW;
    let census = crate::census::connected_census(false, false, we, wv)?;
    for ((e, v), n) in census.cells() {
        let g = simple.get(e, v).cloned().unwrap_or_default();
        report.compare("base.simple", e, v, n, &g);
    }
    let n_terms = COMPONENT_EXTENT.0 + 1;
    for v in 2..=7 {
        let s = connected_multigraph_gf(v)?.series(n_terms)?;
        for (e, x) in s.iter().enumerate() {
            let g = BigInt::from(multi.get(e, v).cloned().unwrap_or_default());
            report.compare_int("base.multigraph", e, v, x, &g);
        }
    }
    Ok(report)
}

/// `base` with the listed errata of `table` put back to their printed values.
fn with_printed_cells(base: &PairTable, table: &str) -> PairTable {
    let mut out = base.clone();
    for x in fixtures::errata().into_iter().filter(|x| x.table == table) {
        if out.get(x.edges, x.vertices).is_some() {
            out.set(x.edges, x.vertices, x.printed);
        }
    }
    out
}

/// Which fixture groups to recompute.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    Census,
    Gf,
    Mset,
}

/// Runs every check in `scope` against the embedded fixtures.
pub fn verify(scope: Scope, bounds: Bounds, budget: u64) -> Result<Report> {
    verify_with(scope, bounds, budget, &fixtures::census_fixtures())
}

/// Like [`verify`] with the census tables taken from `census`.
pub fn verify_with(scope: Scope, bounds: Bounds, budget: u64, census: &[Fixture]) -> Result<Report> {
    let mut report = Report::default();
    if matches!(scope, Scope::All | Scope::Census) {
        let mut pool = CensusPool::with_budget(budget);
        report.merge(verify_census(census, bounds, &mut pool)?);
    }
    if matches!(scope, Scope::All | Scope::Gf) {
        report.merge(verify_gf(7)?);
    }
    if matches!(scope, Scope::All | Scope::Mset) {
        report.merge(verify_mset()?);
    }
    Ok(report)
}
