//! Command-line front end. `run` parses arguments, writes to the given
//! sink and returns the exit status: 0 on success, 1 when a check fails,
//! 2 for usage and domain errors.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::elliptic::EllipticClass;
use crate::error::{Error, Result};
use crate::jinduction::{j_of_orbits, LeviIndex};
use crate::minimal::{
    count_irreducibles, kl_fibers, missing_two_special, stratum_label, sweep, two_special_set, ARange, SweepFilter,
};
use crate::orbit::{Family, GroupType, Label, Orbit};
use crate::partition::Partition;
use crate::springer::{springer_char, springer_char_inverse, WChar};
use crate::tables::check_tables;

#[derive(Debug, Parser)]
#[command(
    name = "minred",
    version,
    about = "Springer data, j-induction and minimal reduction types"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Orbit data
    Orbit {
        #[command(subcommand)]
        command: OrbitCommand,
    },
    /// Springer character of an orbit, or the orbit of a character
    Springer {
        /// An orbit such as C3:4,1,1, or with --inverse a character such as C:((2,1),())
        value: String,
        #[arg(long)]
        inverse: bool,
    },
    /// j-induced character of Spr(left) ⊗ Spr(right) at split k
    Jinduce(SplitArgs),
    /// Minimal reduction type of an elliptic class
    Rtmin {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        class: Partition,
    },
    /// Check uniqueness of the j-value over every (class, k) cell
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max_n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        class: Option<Partition>,
        #[arg(long)]
        json: bool,
        /// Let each a_i range over [-n_i, 0]
        #[arg(long)]
        chain: bool,
        /// Print every cell, not only failures
        #[arg(long)]
        verbose: bool,
    },
    /// 2-special characters of W(X_n)
    TwoSpecial {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        list: bool,
    },
    /// Orbit pairs grouped by j-value
    KlFibers {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Stratum label of su with Jordan types (left, right)
    Stratum(SplitArgs),
    /// Embedded tables
    Tables {
        #[command(subcommand)]
        command: TablesCommand,
    },
}

#[derive(Debug, Subcommand)]
enum OrbitCommand {
    /// d_O, specialness and Springer character
    Info {
        orbit: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum TablesCommand {
    /// Recompute every classical cell
    Check {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, clap::Args)]
struct SplitArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    /// Jordan type on the rank-k factor; very even D types take + or -
    #[arg(long, allow_hyphen_values = true)]
    left: String,
    #[arg(long, allow_hyphen_values = true)]
    right: String,
}

impl SplitArgs {
    fn resolve(&self) -> Result<(LeviIndex, Orbit, Orbit)> {
        let levi = LeviIndex::new(self.family, self.n, self.k)?;
        let (gl, gr) = levi.factor_groups();
        Ok((levi, orbit_in(gl, &self.left)?, orbit_in(gr, &self.right)?))
    }
}

fn orbit_in(group: GroupType, s: &str) -> Result<Orbit> {
    let (body, label) = Label::from_suffix(s.trim());
    Orbit::new(group, body.parse()?, label)
}

#[derive(Serialize)]
struct OrbitInfo {
    orbit: String,
    d: u64,
    orbit_dim: u64,
    special: bool,
    springer: String,
}

#[derive(Serialize)]
struct FiberJson {
    k: u32,
    left: String,
    right: String,
}

enum Outcome {
    Pass,
    Fail,
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("plain data serializes"))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<std::io::Result<Outcome>> {
    Ok(match cmd {
        Command::Orbit {
            command: OrbitCommand::Info { orbit, json },
        } => {
            let o: Orbit = orbit.parse()?;
            let info = OrbitInfo {
                orbit: o.to_string(),
                d: o.springer_dim(),
                orbit_dim: o.orbit_dim(),
                special: o.is_special(),
                springer: springer_char(&o).to_string(),
            };
            if json {
                json_line(out, &info).map(|_| Outcome::Pass)
            } else {
                writeln!(
                    out,
                    "{}\nd_O = {}\ndim = {}\nspecial = {}\nspringer = {}",
                    info.orbit, info.d, info.orbit_dim, info.special, info.springer
                )
                .map(|_| Outcome::Pass)
            }
        }
        Command::Springer { value, inverse } => {
            if inverse {
                let c = WChar::from_tagged(&value)?;
                let rank = match c.family() {
                    Family::A => c.size().saturating_sub(1),
                    _ => c.size(),
                };
                let group = GroupType::new(c.family(), rank);
                match springer_char_inverse(group, &c)? {
                    Some(o) => writeln!(out, "{o}").map(|_| Outcome::Pass),
                    None => {
                        writeln!(out, "{} is not a Springer character of {group}", c.tagged()).map(|_| Outcome::Fail)
                    }
                }
            } else {
                let o: Orbit = value.parse()?;
                writeln!(out, "{}", springer_char(&o)).map(|_| Outcome::Pass)
            }
        }
        Command::Jinduce(args) => {
            let (levi, l, r) = args.resolve()?;
            let j = j_of_orbits(&levi, &l, &r)?;
            writeln!(out, "{j}").map(|_| Outcome::Pass)
        }
        Command::Stratum(args) => {
            let (_, l, r) = args.resolve()?;
            let s = stratum_label(args.family, args.n, args.k, &l, &r)?;
            writeln!(out, "{s}").map(|_| Outcome::Pass)
        }
        Command::Rtmin { family, class } => {
            let cls = EllipticClass::new(family, class)?;
            writeln!(
                out,
                "class {cls}\nrt_min = {}\ndelta = {}\ncharacter = {}",
                cls.rt_min(),
                cls.delta(),
                cls.rtmin_char()
            )
            .map(|_| Outcome::Pass)
        }
        Command::Verify {
            family,
            max_n,
            k,
            class,
            json,
            chain,
            verbose,
        } => {
            if !matches!(family, Family::C | Family::D) {
                return Err(Error::UnsupportedFamily(family));
            }
            if let Some(c) = &class {
                EllipticClass::new(family, c.clone())?;
            }
            let filter = SweepFilter {
                k,
                class,
                range: if chain { ARange::Chain } else { ARange::Strict },
                sequential: false,
            };
            let reports = sweep(family, max_n, &filter);
            let failed = reports.iter().filter(|r| !r.pass).count();
            let res = if json {
                json_line(out, &reports)
            } else {
                (|| {
                    for r in &reports {
                        if verbose || !r.pass {
                            let status = if r.pass { "pass" } else { "FAIL" };
                            writeln!(
                                out,
                                "{status} {}{} [w]={} k={} delta={} candidates={} rt_min={} char={}",
                                r.family,
                                r.n,
                                r.class,
                                r.k,
                                r.delta,
                                r.candidates.len(),
                                r.rtmin_orbit,
                                r.rtmin_char
                            )?;
                            if !r.pass {
                                for c in &r.candidates {
                                    writeln!(out, "  {} × {} -> {}", c.left, c.right, c.j_value)?;
                                }
                            }
                        }
                    }
                    let empty = reports.iter().filter(|r| r.is_vacuous()).count();
                    writeln!(
                        out,
                        "{family} n<={max_n}: {} cells, {} without candidates, {failed} failures",
                        reports.len(),
                        empty
                    )
                })()
            };
            res.map(|_| if failed == 0 { Outcome::Pass } else { Outcome::Fail })
        }
        Command::TwoSpecial { family, n, list } => {
            let set = two_special_set(family, n)?;
            (|| {
                match count_irreducibles(family, n) {
                    Ok(total) => {
                        writeln!(
                            out,
                            "{} of {total} characters of W({family}{n}) are 2-special",
                            set.len()
                        )?;
                        for c in missing_two_special(family, n).expect("family checked") {
                            writeln!(out, "missing {c}")?;
                        }
                    }
                    Err(_) => writeln!(out, "{} characters of W({family}{n}) are 2-special", set.len())?,
                }
                if list {
                    for c in &set {
                        writeln!(out, "{c}")?;
                    }
                }
                Ok(Outcome::Pass)
            })()
        }
        Command::KlFibers { family, n, json } => {
            let fibers = kl_fibers(family, n)?;
            if json {
                let m: BTreeMap<String, Vec<FiberJson>> = fibers
                    .iter()
                    .map(|(c, es)| {
                        let v = es
                            .iter()
                            .map(|e| FiberJson {
                                k: e.k,
                                left: e.left.to_string(),
                                right: e.right.to_string(),
                            })
                            .collect();
                        (c.to_string(), v)
                    })
                    .collect();
                json_line(out, &m).map(|_| Outcome::Pass)
            } else {
                (|| {
                    for (c, es) in &fibers {
                        writeln!(out, "{c}: {} entries", es.len())?;
                        for e in es {
                            writeln!(out, "  k={} {} × {}", e.k, e.left, e.right)?;
                        }
                    }
                    Ok(Outcome::Pass)
                })()
            }
        }
        Command::Tables {
            command: TablesCommand::Check { json },
        } => {
            let report = check_tables()?;
            let status = if report.pass { Outcome::Pass } else { Outcome::Fail };
            if json {
                json_line(out, &report).map(|_| status)
            } else {
                (|| {
                    for c in report.mismatches() {
                        let tag = if c.expected_mismatch { "expected" } else { "UNEXPECTED" };
                        writeln!(
                            out,
                            "{tag} mismatch: table {} line {}: {} | {}: printed {}, recomputed {}",
                            c.table, c.line, c.row, c.column, c.printed, c.recomputed
                        )?;
                    }
                    for u in &report.unconfirmed {
                        writeln!(out, "annotated row matches: {u}")?;
                    }
                    writeln!(
                        out,
                        "{} cells checked, {} mismatched in {} rows, {} unexpected: {}",
                        report.cells.len(),
                        report.mismatches().count(),
                        report.mismatched_rows().len(),
                        report.unexpected().count(),
                        if report.pass { "ok" } else { "FAILED" }
                    )?;
                    Ok(status)
                })()
            }
        }
    })
}

/// Runs the command line given by `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(Ok(Outcome::Pass)) => 0,
        Ok(Ok(Outcome::Fail)) => 1,
        Ok(Err(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
