//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use minred::elliptic::elliptic_classes;
use minred::jinduction::{j_induce, j_of_orbits, LeviIndex};
use minred::minimal::{block_candidates, enumerate_skeleton, missing_two_special, sweep, SweepFilter};
use minred::orbit::list_orbits;
use minred::springer::{bipartitions, springer_char};
use minred::tables::{check_tables, DiscrepancyReport};
use minred::{cli, Family, GroupType, Orbit, Partition, WChar};

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["minred"];
    full.extend_from_slice(args);
    let code = cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap() + &String::from_utf8(err).unwrap())
}

fn parts(p: &[u32]) -> Partition {
    Partition::new(p.to_vec())
}

/// d_O from the centralizer dimension, written out independently:
/// (dim Z(e) − rank)/2 with dim Z(e) = (Σ(λ*_i)² ∓ #odd parts)/2.
fn oracle_d(family: Family, p: &Partition) -> u64 {
    let conj = p.conjugate();
    let sq: u64 = conj.parts().iter().map(|&c| (c as u64) * (c as u64)).sum();
    let odd = p.parts().iter().filter(|&&x| x % 2 == 1).count() as u64;
    let n = p.size() as u64;
    let (z, rank) = match family {
        Family::A => (sq, n),
        Family::B => ((sq - odd) / 2, (n - 1) / 2),
        Family::C => ((sq + odd) / 2, n / 2),
        Family::D => ((sq - odd) / 2, n / 2),
    };
    (z - rank) / 2
}

/// Componentwise sum of partitions aligned at their largest parts.
fn oracle_sum(a: &Partition, b: &Partition) -> Partition {
    let len = a.len().max(b.len());
    let get = |p: &Partition, i: usize| p.parts().get(i).copied().unwrap_or(0);
    Partition::new((0..len).map(|i| get(a, i) + get(b, i)).collect())
}

fn oracle_j(family: Family, l: &WChar, r: &WChar) -> WChar {
    WChar::new(
        family,
        oracle_sum(l.zeta(), r.zeta()),
        oracle_sum(l.eta(), r.eta()),
        l.label().or(r.label()),
    )
}

fn criterion_1() -> Outcome {
    let base = ["jinduce", "--family", "C", "--n", "6", "--k", "3"];
    let mut a = base.to_vec();
    a.extend(["--left", "4,2", "--right", "4,2"]);
    let mut b = base.to_vec();
    b.extend(["--left", "3,3", "--right", "6"]);
    let (ca, oa) = call(&a);
    let (cb, ob) = call(&b);
    let ok = ca == 0 && cb == 0 && oa == ob && !oa.trim().is_empty();
    outcome(ok, format!("{} vs {}", oa.trim(), ob.trim()))
}

fn criterion_2() -> Outcome {
    let (code, out) = call(&["two-special", "--family", "C", "--n", "3"]);
    let missing = missing_two_special(Family::C, 3).unwrap();
    let ok = code == 0 && out.starts_with("9 of 10") && missing.len() == 1 && bipartitions(3).len() == 10;
    let first = out.lines().next().unwrap_or("").to_string();
    outcome(
        ok,
        format!(
            "{first}; missing {}",
            missing.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
        ),
    )
}

fn table_cells(report: &DiscrepancyReport, table: u8) -> (usize, usize, usize) {
    let cells: Vec<_> = report.cells.iter().filter(|c| c.table == table).collect();
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.line).collect();
    let bad = cells.iter().filter(|c| !c.matches).count();
    (rows.len(), cells.len(), bad)
}

fn criterion_3() -> Outcome {
    let report = check_tables().unwrap();
    let (rows, cells, bad) = table_cells(&report, 7);
    outcome(
        rows == 10 && cells == 20 && bad == 0,
        format!("{rows} rows, {cells} cells, {bad} mismatches"),
    )
}

fn criterion_4() -> Outcome {
    let report = check_tables().unwrap();
    let want = [(2u8, 3usize, 6usize), (3, 2, 4), (5, 8, 14)];
    let mut ok = true;
    let mut detail = Vec::new();
    for (t, rows_want, cells_want) in want {
        let (rows, cells, bad) = table_cells(&report, t);
        ok &= rows == rows_want && cells == cells_want && bad == 0;
        detail.push(format!("table {t}: {rows} rows, {cells} cells, {bad} mismatches"));
    }
    outcome(ok, detail.join("; "))
}

fn criterion_5() -> Outcome {
    let non_special = |g: &str| -> BTreeSet<Partition> {
        list_orbits(g.parse().unwrap())
            .into_iter()
            .filter(|o| !o.is_special())
            .map(|o| o.partition().clone())
            .collect()
    };
    let set = |ps: &[&[u32]]| -> BTreeSet<Partition> { ps.iter().map(|p| parts(p)).collect() };
    let cases: [(&str, BTreeSet<Partition>); 4] = [
        ("C3", set(&[&[4, 1, 1], &[2, 1, 1, 1, 1]])),
        ("D5", set(&[&[3, 2, 2, 1, 1, 1], &[5, 2, 2, 1]])),
        ("B4", set(&[&[2, 2, 1, 1, 1, 1, 1], &[2, 2, 2, 2, 1], &[4, 4, 1]])),
        (
            "D6",
            set(&[
                &[3, 2, 2, 1, 1, 1, 1, 1],
                &[5, 2, 2, 1, 1, 1],
                &[3, 2, 2, 2, 2, 1],
                &[7, 2, 2, 1],
            ]),
        ),
    ];
    let mut ok = true;
    let mut detail = Vec::new();
    for (g, want) in cases {
        let got = non_special(g);
        ok &= got == want;
        detail.push(format!("{g}: {}", got.len()));
    }
    outcome(ok, detail.join(", "))
}

fn criterion_6() -> Outcome {
    let filter = SweepFilter {
        sequential: true,
        ..SweepFilter::default()
    };
    let mut ok = true;
    let mut detail = Vec::new();
    for family in [Family::C, Family::D] {
        let reports = sweep(family, 9, &filter);
        let mut failures = 0;
        for n in 1..=9 {
            for cls in elliptic_classes(family, n) {
                let spr = springer_char(&cls.rt_min());
                let formula = cls.rtmin_char();
                for r in reports
                    .iter()
                    .filter(|r| r.n == n && r.class == cls.cycle_type().to_string())
                {
                    let js: BTreeSet<&str> = r.candidates.iter().map(|c| c.j_value.as_str()).collect();
                    let good = r.pass
                        && js.len() <= 1
                        && js.iter().all(|j| *j == formula.to_string() && *j == spr.to_string())
                        && formula == spr;
                    if !good {
                        failures += 1;
                    }
                    // the same j-values from the independent sum
                    let levi = LeviIndex::new(family, n, r.k).unwrap();
                    for c in &r.candidates {
                        let (l, rt): (Orbit, Orbit) = (c.left.parse().unwrap(), c.right.parse().unwrap());
                        let o = oracle_j(family, &springer_char(&l), &springer_char(&rt));
                        if o.without_label() != j_of_orbits(&levi, &l, &rt).unwrap().without_label()
                            || o.without_label() != formula
                        {
                            failures += 1;
                        }
                    }
                }
            }
        }
        let empty = reports.iter().filter(|r| r.is_vacuous()).count();
        ok &= failures == 0 && !reports.is_empty();
        detail.push(format!(
            "{family}: {} cells ({empty} without candidates), {failures} failures",
            reports.len()
        ));
    }
    outcome(ok, detail.join("; "))
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in 1..=10 {
            for o in list_orbits(GroupType::new(family, rank)) {
                checked += 1;
                let d = o.springer_dim();
                let b = springer_char(&o).b_invariant();
                let formula_ok = o
                    .springer_dim_formula()
                    .is_none_or(|f| f == o.springer_dim_via_centralizer());
                if b != d || !formula_ok || d != oracle_d(family, o.partition()) {
                    bad += 1;
                }
            }
        }
    }
    outcome(bad == 0, format!("{checked} orbits, {bad} failures"))
}

fn criterion_8() -> Outcome {
    let mut pairs = 0u64;
    let mut bad = 0u64;
    for family in [Family::C, Family::D] {
        for n in 2..=8 {
            for k in LeviIndex::interior_splits(family, n) {
                let levi = LeviIndex::interior(family, n, k).unwrap();
                let (gl, gr) = levi.factor_groups();
                let rights: Vec<_> = list_orbits(gr).iter().map(springer_char).collect();
                for l in list_orbits(gl).iter().map(springer_char) {
                    for r in &rights {
                        pairs += 1;
                        let j = j_induce(&levi, &l, r).unwrap();
                        if j.b_invariant() != l.b_invariant() + r.b_invariant() {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    let chars = |n: u32| -> Vec<WChar> {
        bipartitions(n)
            .into_iter()
            .map(|(z, e)| WChar::new(Family::C, z, e, None))
            .collect()
    };
    let mut triples = 0u64;
    for n in 3..=6 {
        for a in 1..n {
            for b in 1..n - a {
                let c = n - a - b;
                let ab = LeviIndex::new(Family::C, a + b, a).unwrap();
                let abc_left = LeviIndex::new(Family::C, n, a + b).unwrap();
                let bc = LeviIndex::new(Family::C, b + c, b).unwrap();
                let abc_right = LeviIndex::new(Family::C, n, a).unwrap();
                let (xs, ys, zs) = (chars(a), chars(b), chars(c));
                for x in &xs {
                    for y in &ys {
                        let xy = j_induce(&ab, x, y).unwrap();
                        for z in &zs {
                            triples += 1;
                            let left = j_induce(&abc_left, &xy, z).unwrap();
                            let right = j_induce(&abc_right, x, &j_induce(&bc, y, z).unwrap()).unwrap();
                            if left != right {
                                bad += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{pairs} pairs, {triples} triples, {bad} failures"))
}

fn criterion_9() -> Outcome {
    let mut cells = 0;
    let mut bad = 0;
    for family in [Family::C, Family::D] {
        for n in 1..=7 {
            for cls in elliptic_classes(family, n) {
                for k in LeviIndex::interior_splits(family, n) {
                    cells += 1;
                    let sk: Vec<_> = enumerate_skeleton(&cls, k)
                        .unwrap()
                        .into_iter()
                        .flat_map(|(_, p)| p)
                        .collect();
                    let keys: BTreeSet<_> = sk.iter().map(|p| p.key()).collect();
                    let max = sk.iter().map(|p| p.d_sum()).max();
                    for c in block_candidates(&cls, k).unwrap() {
                        if !keys.contains(&c.key()) || Some(c.d_sum()) != max {
                            bad += 1;
                        }
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{cells} cells, {bad} failures"))
}

fn criterion_10() -> Outcome {
    let (code, out) = call(&["tables", "check"]);
    let report = check_tables().unwrap();
    let rows = report.mismatched_rows();
    let printed: Vec<String> = rows.iter().map(|(t, _, r)| format!("table {t}: {r}")).collect();
    let want = ["table 8: 1^3 2^2 3^1 × 4", "table 8: 1^1 2^2 5^1 × 4"];
    let listed = rows
        .iter()
        .all(|(t, l, _)| out.contains(&format!("table {t} line {l}:")));
    let ok = code == 0 && listed && printed.len() == want.len() && want.iter().all(|w| printed.iter().any(|p| p == w));
    outcome(
        ok,
        format!(
            "exit {code}, {} annotated rows printed: {}",
            printed.len(),
            printed.join(", ")
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        (
            "symplectic example pairs share a j-value",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            "C3 has 9 of 10 characters 2-special",
            Duration::from_secs(1),
            criterion_2,
        ),
        ("D8 table recomputes", Duration::from_secs(1), criterion_3),
        (
            "C3 x A1, B4, D6 x A1 tables recompute",
            Duration::from_secs(1),
            criterion_4,
        ),
        ("non-special orbit sets", Duration::from_secs(1), criterion_5),
        ("uniqueness sweep C/D n <= 9", Duration::from_secs(300), criterion_6),
        ("b = d for ranks <= 10", Duration::from_secs(60), criterion_7),
        (
            "j-induction additivity and associativity",
            Duration::from_secs(120),
            criterion_8,
        ),
        (
            "block pairs inside the skeleton, n <= 7",
            Duration::from_secs(120),
            criterion_9,
        ),
        (
            "tables check prints exactly the two annotated rows",
            Duration::from_secs(1),
            criterion_10,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let dt = t.elapsed();
        let ok = o.ok && dt <= *limit;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} [{:.2?}, limit {:?}] {}",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            dt,
            limit,
            o.detail
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
