//! Embedded tables of exceptional-group cases and the recomputation of
//! every cell that lives in classical factors.
//!
//! Data files are tab-separated with `#` comments and `@` directives:
//! `@title`, `@table <id>`, `@kind basic` and `@factors X × Y`, which may
//! change between rows. Orbit and character cells are split on `×` into
//! one piece per factor.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::orbit::{Family, GroupType, Label, Orbit};
use crate::springer::{split_pair, springer_char, WChar};

const SOURCES: [(&str, &str); 11] = [
    ("table01.tsv", include_str!("../data/table01.tsv")),
    ("table02.tsv", include_str!("../data/table02.tsv")),
    ("table03.tsv", include_str!("../data/table03.tsv")),
    ("table04.tsv", include_str!("../data/table04.tsv")),
    ("table05.tsv", include_str!("../data/table05.tsv")),
    ("table06.tsv", include_str!("../data/table06.tsv")),
    ("table07.tsv", include_str!("../data/table07.tsv")),
    ("table08.tsv", include_str!("../data/table08.tsv")),
    ("table09.tsv", include_str!("../data/table09.tsv")),
    ("table10.tsv", include_str!("../data/table10.tsv")),
    ("table11.tsv", include_str!("../data/table11.tsv")),
];

const NOT_A_VALUE: &str = "Not a value of δ_[w]";
const MARKERS: [char; 3] = ['△', '◁', 'Δ'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Classical(GroupType),
    /// E, F or G, kept by name; nothing in these factors is recomputed.
    Exceptional(String),
}

impl Factor {
    fn parse(s: &str) -> Factor {
        match s.parse::<GroupType>() {
            Ok(g) => Factor::Classical(g),
            Err(_) => Factor::Exceptional(s.to_string()),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Classical(g) => write!(f, "{g}"),
            Factor::Exceptional(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRecord {
    pub table: u8,
    pub line: usize,
    pub factors: Vec<Factor>,
    /// Orbit cell as printed.
    pub orbit: String,
    pub d: u64,
    /// `None` for rows whose d_O is not a value of δ_[w], and for basic
    /// orbit lists.
    pub character: Option<String>,
    pub jchi: Option<String>,
    pub expect_mismatch: bool,
    pub j_not_springer: bool,
    /// One entry per factor, `None` for exceptional factors.
    pub orbits: Vec<Option<Orbit>>,
}

impl TableRecord {
    pub fn is_classical(&self) -> bool {
        !self.factors.is_empty() && self.orbits.iter().all(Option::is_some)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub id: u8,
    pub source: &'static str,
    pub title: String,
    /// A list of basic orbits with their δ values.
    pub basic: bool,
    pub records: Vec<TableRecord>,
}

fn table_err(source: &str, line: usize, reason: impl Into<String>) -> Error {
    Error::Table {
        table: source.to_string(),
        line,
        reason: reason.into(),
    }
}

fn pieces(cell: &str) -> Vec<&str> {
    cell.split('×').map(str::trim).collect()
}

fn parse_orbit_piece(group: GroupType, s: &str) -> Result<Orbit> {
    let (body, label) = Label::from_suffix(s.trim());
    Orbit::new(group, body.parse()?, label)
}

/// Reads one classical character piece: `((ζ),(η))`, the pair form
/// `(ζ, η)` with space-separated halves, or a partition for type A.
pub fn parse_character_piece(family: Family, s: &str) -> Result<WChar> {
    if family == Family::A {
        return Ok(WChar::type_a(s.parse()?));
    }
    let (body, label) = Label::from_suffix(s.trim());
    if let Some((z, e)) = split_pair(body) {
        return Ok(WChar::new(family, z.parse()?, e.parse()?, label));
    }
    let inner = body
        .trim()
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .filter(|b| !b.contains('(') && !b.contains(')'))
        .ok_or_else(|| parse_err("character", s, "expected ((ζ),(η)) or (ζ, η)"))?;
    let (z, e) = inner
        .split_once(',')
        .ok_or_else(|| parse_err("character", s, "pair form needs one comma"))?;
    if e.contains(',') {
        return Err(parse_err("character", s, "pair form needs one comma"));
    }
    Ok(WChar::new(family, z.parse()?, e.parse()?, label))
}

/// Parses one data file. Every classical orbit and character piece is
/// validated here.
pub fn parse_table(source: &'static str, text: &str) -> Result<Table> {
    let mut id = None;
    let mut title = String::new();
    let mut basic = false;
    let mut factors: Vec<Factor> = Vec::new();
    let mut records = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim_end();
        if l.trim().is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(d) = l.strip_prefix('@') {
            let (key, val) = d.split_once(' ').unwrap_or((d, ""));
            let val = val.trim();
            match key {
                "title" => title = val.to_string(),
                "table" => {
                    id = Some(
                        val.parse::<u8>()
                            .map_err(|_| table_err(source, line, format!("bad table id {val:?}")))?,
                    )
                }
                "kind" if val == "basic" => basic = true,
                "factors" => factors = pieces(val).into_iter().map(Factor::parse).collect(),
                _ => return Err(table_err(source, line, format!("unknown directive {l:?}"))),
            }
            continue;
        }
        let table = id.ok_or_else(|| table_err(source, line, "row before @table"))?;
        let cols: Vec<&str> = l.split('\t').map(str::trim).collect();
        let d = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| table_err(source, line, format!("bad d_O {s:?}")))
        };
        if basic {
            if cols.len() != 2 {
                return Err(table_err(source, line, "basic rows have two columns"));
            }
            records.push(TableRecord {
                table,
                line,
                factors: Vec::new(),
                orbit: cols[0].to_string(),
                d: d(cols[1])?,
                character: None,
                jchi: None,
                expect_mismatch: false,
                j_not_springer: false,
                orbits: Vec::new(),
            });
            continue;
        }
        if !(4..=5).contains(&cols.len()) {
            return Err(table_err(
                source,
                line,
                format!("expected 4 or 5 columns, got {}", cols.len()),
            ));
        }
        if factors.is_empty() {
            return Err(table_err(source, line, "row before @factors"));
        }
        let mut expect_mismatch = false;
        let mut j_not_springer = false;
        for flag in cols.get(4).map_or("", |s| *s).split_whitespace() {
            match flag {
                "expect-mismatch" => expect_mismatch = true,
                "j-not-springer" => j_not_springer = true,
                f => return Err(table_err(source, line, format!("unknown flag {f:?}"))),
            }
        }
        let orbit_pieces = pieces(cols[0]);
        if orbit_pieces.len() != factors.len() {
            return Err(table_err(source, line, "orbit pieces do not match the factors"));
        }
        let mut orbits = Vec::new();
        for (f, p) in factors.iter().zip(&orbit_pieces) {
            orbits.push(match f {
                Factor::Classical(g) => {
                    Some(parse_orbit_piece(*g, p).map_err(|e| table_err(source, line, e.to_string()))?)
                }
                Factor::Exceptional(_) => None,
            });
        }
        let (character, jchi) = if cols[2] == NOT_A_VALUE {
            if cols[3] != "-" {
                return Err(table_err(source, line, "a row that is not a value of δ carries a jχ"));
            }
            (None, None)
        } else {
            let cp = pieces(cols[2]);
            if cp.len() != factors.len() {
                return Err(table_err(source, line, "character pieces do not match the factors"));
            }
            for (f, p) in factors.iter().zip(&cp) {
                if let Factor::Classical(g) = f {
                    parse_character_piece(g.family, p).map_err(|e| table_err(source, line, e.to_string()))?;
                }
            }
            (Some(cols[2].to_string()), Some(cols[3].to_string()))
        };
        records.push(TableRecord {
            table,
            line,
            factors: factors.clone(),
            orbit: cols[0].to_string(),
            d: d(cols[1])?,
            character,
            jchi,
            expect_mismatch,
            j_not_springer,
            orbits,
        });
    }
    Ok(Table {
        id: id.ok_or_else(|| table_err(source, 0, "missing @table"))?,
        source,
        title,
        basic,
        records,
    })
}

/// Parses every embedded file.
pub fn load_tables() -> Result<Vec<Table>> {
    SOURCES.iter().map(|(name, text)| parse_table(name, text)).collect()
}

/// The embedded tables, parsed once.
pub fn embedded() -> Result<&'static [Table]> {
    static TABLES: OnceLock<Result<Vec<Table>>> = OnceLock::new();
    match TABLES.get_or_init(load_tables) {
        Ok(t) => Ok(t),
        Err(e) => Err(e.clone()),
    }
}

/// Name equivalences read off the cells that print two names joined by
/// `=`, e.g. `φ_{216,9} = 216_{a'}`.
#[derive(Debug, Clone, Default)]
pub struct AliasMap {
    parent: BTreeMap<String, String>,
}

fn clean_name(s: &str) -> String {
    s.trim()
        .trim_end_matches(|c: char| MARKERS.contains(&c) || c.is_whitespace())
        .trim()
        .to_string()
}

impl AliasMap {
    pub fn from_tables(tables: &[Table]) -> AliasMap {
        let mut m = AliasMap::default();
        for r in tables.iter().flat_map(|t| &t.records) {
            let cells = r.jchi.iter().chain(r.character.iter());
            for cell in cells {
                for piece in pieces(cell) {
                    let names: Vec<String> = piece.split(" = ").map(clean_name).collect();
                    for w in names.windows(2) {
                        m.union(&w[0], &w[1]);
                    }
                    for n in names {
                        m.find(&n);
                    }
                }
            }
        }
        m
    }

    fn find(&mut self, s: &str) -> String {
        let p = self
            .parent
            .entry(s.to_string())
            .or_insert_with(|| s.to_string())
            .clone();
        if p == s {
            return p;
        }
        let root = self.find(&p);
        self.parent.insert(s.to_string(), root.clone());
        root
    }

    fn union(&mut self, a: &str, b: &str) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }

    /// Representative name; markers are stripped first.
    pub fn canonical(&self, name: &str) -> String {
        let mut cur = clean_name(name);
        while let Some(p) = self.parent.get(&cur) {
            if *p == cur {
                break;
            }
            cur = p.clone();
        }
        cur
    }

    pub fn same(&self, a: &str, b: &str) -> bool {
        self.canonical(a) == self.canonical(b)
    }

    /// Classes with more than one name.
    pub fn groups(&self) -> Vec<Vec<String>> {
        let mut g: BTreeMap<String, Vec<String>> = BTreeMap::new();
        for k in self.parent.keys() {
            g.entry(self.canonical(k)).or_default().push(k.clone());
        }
        g.into_values().filter(|v| v.len() > 1).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCheck {
    pub table: u8,
    pub line: usize,
    pub row: String,
    pub column: String,
    pub printed: String,
    pub recomputed: String,
    pub matches: bool,
    pub expected_mismatch: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub cells: Vec<CellCheck>,
    /// Rows annotated `expect-mismatch` whose cells all match.
    pub unconfirmed: Vec<String>,
    pub pass: bool,
}

impl DiscrepancyReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CellCheck> {
        self.cells.iter().filter(|c| !c.matches)
    }

    pub fn unexpected(&self) -> impl Iterator<Item = &CellCheck> {
        self.mismatches().filter(|c| !c.expected_mismatch)
    }

    /// Distinct (table, line, row) triples with at least one mismatch.
    pub fn mismatched_rows(&self) -> Vec<(u8, usize, String)> {
        let mut rows: Vec<_> = self.mismatches().map(|c| (c.table, c.line, c.row.clone())).collect();
        rows.dedup();
        rows
    }
}

fn recompute_character(r: &TableRecord) -> Option<String> {
    let chars = r
        .orbits
        .iter()
        .map(|o| o.as_ref().map(|o| springer_char(o).to_string()))
        .collect::<Option<Vec<_>>>()?;
    Some(chars.join(" × "))
}

fn character_matches(r: &TableRecord, printed: &str) -> bool {
    let ps = pieces(printed);
    r.orbits.iter().zip(&ps).all(|(o, p)| {
        let o = o.as_ref().expect("classical row");
        match parse_character_piece(o.family(), p) {
            Ok(c) if c.label().is_none() => c == springer_char(o).without_label(),
            Ok(c) => c == springer_char(o),
            Err(_) => false,
        }
    })
}

/// Recomputes d_O and the character of every row in classical factors.
/// Exceptional names are left alone.
pub fn check_records(tables: &[Table]) -> DiscrepancyReport {
    let mut cells = Vec::new();
    let mut unconfirmed = Vec::new();
    for r in tables.iter().flat_map(|t| &t.records) {
        if !r.is_classical() {
            continue;
        }
        let before = cells.len();
        let d: u64 = r.orbits.iter().flatten().map(Orbit::springer_dim).sum();
        cells.push(CellCheck {
            table: r.table,
            line: r.line,
            row: r.orbit.clone(),
            column: "d_O".into(),
            printed: r.d.to_string(),
            recomputed: d.to_string(),
            matches: d == r.d,
            expected_mismatch: r.expect_mismatch,
        });
        if let Some(ch) = &r.character {
            cells.push(CellCheck {
                table: r.table,
                line: r.line,
                row: r.orbit.clone(),
                column: "character".into(),
                printed: ch.clone(),
                recomputed: recompute_character(r).expect("classical row"),
                matches: character_matches(r, ch),
                expected_mismatch: r.expect_mismatch,
            });
        }
        if r.expect_mismatch && cells[before..].iter().all(|c| c.matches) {
            unconfirmed.push(format!("table {} line {}: {}", r.table, r.line, r.orbit));
        }
    }
    let pass = unconfirmed.is_empty() && cells.iter().all(|c| c.matches || c.expected_mismatch);
    DiscrepancyReport {
        cells,
        unconfirmed,
        pass,
    }
}

/// Checks the embedded tables.
pub fn check_tables() -> Result<DiscrepancyReport> {
    Ok(check_records(embedded()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn everything_parses() {
        let t = load_tables().unwrap();
        let ids: Vec<u8> = t.iter().map(|t| t.id).collect();
        assert_eq!(ids, (1..=11).collect::<Vec<_>>());
        let counts: Vec<usize> = t.iter().map(|t| t.records.len()).collect();
        assert_eq!(counts, vec![9, 3, 2, 12, 8, 30, 10, 10, 12, 20, 4]);
        assert!(t[0].basic && t[3].basic && t[5].basic);
    }

    #[test]
    fn pair_forms() {
        let a = parse_character_piece(Family::D, "(2^1 3^1,)").unwrap();
        assert_eq!(a, WChar::parse(Family::D, "((3,2),())").unwrap());
        let b = parse_character_piece(Family::D, "(1^2, 3^2)").unwrap();
        assert_eq!(b, WChar::parse(Family::D, "((3,3),(1,1))").unwrap());
        let c = parse_character_piece(Family::D, "((), (1^2, 2^3))").unwrap();
        assert_eq!(c.size(), 8);
        assert!(parse_character_piece(Family::C, "(1, 2, 3)").is_err());
    }

    #[test]
    fn aliases() {
        let m = AliasMap::from_tables(&load_tables().unwrap());
        assert!(m.same("1050_10", "1050_x △"));
        assert!(m.same("φ_{216,9}", "216_{a'}"));
        assert!(m.same("216_9", "216'_a"));
        assert!(!m.same("84_x", "84_a"));
    }

    #[test]
    fn bad_rows_are_rejected() {
        let bad = "@table 2\n@factors C3 × A1\n(4, 1) × (2)\t2\t((2,1),()) × (2)\tx\n";
        assert!(parse_table("t", bad).is_err());
        let bad = "@table 2\n@factors C3\n(4, 1, 1)\t2\tNot a value of δ_[w]\t84_x\n";
        assert!(parse_table("t", bad).is_err());
    }

    #[test]
    fn report_is_deterministic() {
        let a = check_tables().unwrap();
        let b = check_tables().unwrap();
        assert_eq!(a, b);
        assert!(a.pass);
        assert_eq!(a.unexpected().count(), 0);
    }
}
