//! Acceptance suite: one line per criterion item, `PASS` or `FAIL`, then a
//! summary. Items marked `REPORT` are informational and never gate.
//!
//! Run with `cargo test -p rainbow --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rainbow::coloring::{color_classes, normalize, unique_colors_at};
use rainbow::constructions::{bull_cycle_partition, disjoint_cliques_plus_one, extremal_plus_one, k23_special, Certificate, Verdict};
use rainbow::embeddings::canonical_code;
use rainbow::formulas::{sandwich_bounds, girth5_bound_holds, reference_tables, rb_cycle};
use rainbow::graphs::{complete_edges, edge_endpoints, minus_edge_family, ForbiddenFamily, SmallGraph, Target};
use rainbow::search::{decide_colorable, f_exact, rb_exact, turan_exact, witness_is_valid, Decision, SearchConfig};

struct Report {
    failed: Vec<String>,
    passed: usize,
}

impl Report {
    fn check(&mut self, id: &str, ok: bool, detail: impl AsRef<str>) {
        println!("{} {id:<5} {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
        if ok {
            self.passed += 1;
        } else {
            self.failed.push(id.to_string());
        }
    }

    fn report(&self, id: &str, ok: bool, detail: impl AsRef<str>) {
        println!("REPORT {id:<5} [{}] {}", if ok { "reproduced" } else { "not reproduced" }, detail.as_ref());
    }
}

fn g(name: &str) -> SmallGraph {
    name.parse::<Target>().unwrap().graph
}

fn t(name: &str) -> Target {
    name.parse().unwrap()
}

fn family(names: &[&str]) -> ForbiddenFamily {
    ForbiddenFamily::new(names.iter().map(|n| g(n)))
}

fn budgeted(secs: u64) -> SearchConfig {
    SearchConfig { timeout: Some(Duration::from_secs(secs)), ..SearchConfig::default() }
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn codes(f: &ForbiddenFamily) -> BTreeSet<String> {
    f.members().iter().map(|m| canonical_code(m).to_hex()).collect()
}

/// An exactly computed `f(n, H)`, kept for the sandwich check.
struct Exact {
    n: usize,
    name: String,
    f: u64,
}

fn criterion_1(r: &mut Report, exact: &mut Vec<Exact>) {
    let gates: [(usize, &str, u64, &str); 8] = [
        (4, "diamond", 60, "1.1"),
        (5, "diamond", 60, "1.2"),
        (6, "diamond", 60, "1.3"),
        (5, "bull", 10, "1.4"),
        (6, "bull", 900, "1.5"),
        (5, "K2,3", 60, "1.6"),
        (5, "house", 60, "1.7"),
        (6, "house", 1800, "1.8"),
    ];
    for (n, name, budget, id) in gates {
        let h = g(name);
        let expected = reference_tables::rb(&h, n as u64).expect("tabulated");
        let start = Instant::now();
        let out = rb_exact(n, &h, &budgeted(budget)).unwrap();
        let elapsed = start.elapsed();
        let witness_ok = witness_is_valid(out.coloring().unwrap(), &h, out.value as usize - 1);
        let ok = out.is_exact() && out.value == expected && witness_ok && elapsed <= Duration::from_secs(budget);
        r.check(id, ok, format!("rb({n},{name}) = {} expected {expected} [{:?}] in {} (budget {budget}s, {} nodes)", out.value, out.status, secs(elapsed), out.nodes_explored));
        if out.is_exact() {
            exact.push(Exact { n, name: name.into(), f: out.value - 1 });
        }
    }
    for (n, name, id) in [(7, "diamond", "1.s1"), (6, "K2,3", "1.s2")] {
        let h = g(name);
        let expected = reference_tables::rb(&h, n as u64).unwrap();
        let start = Instant::now();
        let out = rb_exact(n, &h, &budgeted(600)).unwrap();
        r.report(id, out.is_exact() && out.value == expected, format!("stretch rb({n},{name}) = {} expected {expected} [{:?}] in {}", out.value, out.status, secs(start.elapsed())));
        if out.is_exact() {
            exact.push(Exact { n, name: name.into(), f: out.value - 1 });
        }
    }
}

fn timed_certificate(r: &mut Report, id: &str, make: impl FnOnce() -> Certificate) {
    let start = Instant::now();
    let cert = make();
    let verdict = cert.check().unwrap();
    let elapsed = start.elapsed();
    let expected = reference_tables::rb(&cert.target.graph, cert.n as u64).expect("tabulated") - 1;
    let ok = verdict == Verdict::Valid && cert.claimed_colors as u64 == expected && elapsed <= Duration::from_secs(1);
    r.check(id, ok, format!("{} n={} {}: {} colours, expected {expected}, {:?} in {}", cert.target.label, cert.n, cert.construction_tag, cert.claimed_colors, verdict, secs(elapsed)));
}

fn criterion_2(r: &mut Report) {
    timed_certificate(r, "2.b5", || disjoint_cliques_plus_one(5, &[3, 2], t("bull")).unwrap());
    for n in 6..=10 {
        timed_certificate(r, &format!("2.b{n}"), || bull_cycle_partition(n).unwrap());
    }
    timed_certificate(r, "2.k5", || disjoint_cliques_plus_one(5, &[4, 1], t("K2,3")).unwrap());
    timed_certificate(r, "2.k6", || k23_special(6).unwrap());
    timed_certificate(r, "2.k7", || k23_special(7).unwrap());
    timed_certificate(r, "2.k8", || disjoint_cliques_plus_one(8, &[4, 4], t("K2,3")).unwrap());
    for n in 5..=8 {
        timed_certificate(r, &format!("2.h{n}"), || disjoint_cliques_plus_one(n, &[4, n - 4], t("house")).unwrap());
    }
    let c3c4 = family(&["C3", "C4"]);
    for n in 4..=10 {
        timed_certificate(r, &format!("2.d{n}"), || extremal_plus_one(n, &c3c4, t("diamond"), &budgeted(1)).unwrap());
    }
}

fn criterion_3(r: &mut Report) {
    let c3c4 = family(&["C3", "C4"]);
    let start = Instant::now();
    let mut values = Vec::new();
    for n in 4..=10u64 {
        let out = turan_exact(n as usize, &c3c4, &budgeted(600)).unwrap();
        let expected = reference_tables::ext_c3_c4(n).unwrap();
        let w = out.graph().unwrap();
        let ok = out.is_exact() && out.value == expected && w.size() as u64 == out.value && c3c4.is_free(w);
        r.check(&format!("3.{n}"), ok, format!("ext({n},{{C3,C4}}) = {} expected {expected}, witness {w}", out.value));
        values.push(out.value);
    }
    let total = start.elapsed();
    r.check("3.t", total <= Duration::from_secs(600), format!("Turán table n=4..10 total {} (budget 600s)", secs(total)));

    let paw_c4 = family(&["K1,3+e", "C4"]);
    for n in 4..=8u64 {
        let out = turan_exact(n as usize, &paw_c4, &budgeted(600)).unwrap();
        let expected = reference_tables::ext_c3_c4(n).unwrap();
        r.check(&format!("3.c{n}"), out.is_exact() && out.value == expected, format!("ext({n},{{K1,3+e,C4}}) = {} expected {expected}", out.value));
    }

    let start = Instant::now();
    let rest: Vec<String> = (11..=16u64)
        .map(|n| {
            let out = turan_exact(n as usize, &c3c4, &budgeted(600)).unwrap();
            format!("{n}:{}{}", out.value, if out.is_exact() && Some(out.value) == reference_tables::ext_c3_c4(n) { "" } else { "!" })
        })
        .collect();
    r.report("3.x", !rest.iter().any(|s| s.ends_with('!')), format!("ext(n,{{C3,C4}}) for n=11..16: {} in {}", rest.join(" "), secs(start.elapsed())));
}

fn criterion_4(r: &mut Report) {
    let start = Instant::now();
    let d = minus_edge_family(&g("diamond")).unwrap();
    let d_ok = codes(&d) == codes(&family(&["K1,3+e", "C4"])) && d.len() == 2;
    let h = minus_edge_family(&g("house")).unwrap();
    let h_ok = codes(&h) == codes(&family(&["C5", "C4+", "bull", "Z2"])) && h.len() == 4;
    let elapsed = start.elapsed();
    r.check("4.1", d_ok && elapsed < Duration::from_secs(1), format!("diamond minus an edge: {:?}", d.members()));
    r.check("4.2", h_ok && elapsed < Duration::from_secs(1), format!("house minus an edge: {:?}", h.members()));
}

fn criterion_5(r: &mut Report, exact: &mut Vec<Exact>) {
    let start = Instant::now();
    for (n, k) in [(4, 3), (5, 3), (6, 3), (5, 4), (6, 4), (6, 5)] {
        let name = format!("C{k}");
        let out = rb_exact(n, &g(&name), &budgeted(900)).unwrap();
        let formula = rb_cycle(n as u64, k as u64).unwrap();
        r.check(&format!("5.{n}{k}"), out.is_exact() && out.value == formula, format!("rb({n},C{k}) search {} formula {formula}", out.value));
        if out.is_exact() {
            exact.push(Exact { n, name, f: out.value - 1 });
        }
    }
    let total = start.elapsed();
    r.check("5.t", total <= Duration::from_secs(900), format!("cycle cross-check total {} (budget 900s)", secs(total)));

    let start = Instant::now();
    for n in [5, 6] {
        let plus = rb_exact(n, &g("C3+"), &budgeted(900)).unwrap();
        let plain = rb_exact(n, &g("C3"), &budgeted(900)).unwrap();
        r.check(&format!("5.p{n}"), plus.is_exact() && plain.is_exact() && plus.value == plain.value, format!("rb({n},C3+) = {} rb({n},C3) = {}", plus.value, plain.value));
        if plus.is_exact() {
            exact.push(Exact { n, name: "C3+".into(), f: plus.value - 1 });
        }
    }
    let total = start.elapsed();
    r.check("5.pt", total <= Duration::from_secs(900), format!("pendant cross-check total {} (budget 900s)", secs(total)));
}

fn random_coloring(rng: &mut StdRng) -> rainbow::EdgeColoring {
    let n = rng.gen_range(3..=9);
    let k = rng.gen_range(1..=complete_edges(n));
    let raw: Vec<usize> = (0..complete_edges(n)).map(|_| rng.gen_range(0..k)).collect();
    normalize(&raw, n).unwrap()
}

fn criterion_6(r: &mut Report, exact: &[Exact]) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    // identity: |Γ[F - w]| = |Γ[F]| - |S(w, F)|, colours recounted pair by pair
    let mut identity_ok = true;
    let mut star_ok = true;
    for _ in 0..1000 {
        let c = random_coloring(&mut rng);
        let n = c.n();
        let f: u16 = loop {
            let f = rng.gen_range(1u16..1 << n);
            if f != 0 {
                break f;
            }
        };
        let members: Vec<usize> = (0..n).filter(|&v| f >> v & 1 == 1).collect();
        let w = members[rng.gen_range(0..members.len())];
        let count = |set: u16| {
            let mut seen = BTreeSet::new();
            for j in 0..n {
                for i in 0..j {
                    if set >> i & 1 == 1 && set >> j & 1 == 1 {
                        seen.insert(c.color(i, j));
                    }
                }
            }
            seen.len()
        };
        let s = unique_colors_at(&c, f, w).unwrap().count_ones() as usize;
        identity_ok &= count(f & !(1 << w)) == count(f) - s;

        // C* classes are stars; a class is in C* iff its edges share a vertex
        let view = color_classes(&c);
        for (i, class) in view.classes.iter().enumerate() {
            let mut common = u16::MAX;
            for e in 0..complete_edges(n) {
                if class >> e & 1 == 1 {
                    let (a, b) = edge_endpoints(e);
                    common &= (1 << a) | (1 << b);
                }
            }
            star_ok &= (common != 0) == (view.c_star >> i & 1 == 1);
        }
    }
    r.check("6.1", identity_ok, "unique-colour identity on 1000 random colourings");
    r.check("6.2", star_ok, "every class in C* is a star, and every star class is in C*");

    let mut sandwich_ok = true;
    let mut lines = Vec::new();
    for e in exact {
        let h = g(&e.name);
        let low = turan_exact(e.n, &minus_edge_family(&h).unwrap(), &budgeted(600)).unwrap();
        let high = turan_exact(e.n, &ForbiddenFamily::new([h]), &budgeted(600)).unwrap();
        let ok = low.is_exact() && high.is_exact() && low.value < e.f && e.f <= high.value && sandwich_bounds(low.value, high.value).is_ok();
        sandwich_ok &= ok;
        lines.push(format!("{}@{}: {} <= {} <= {}", e.name, e.n, low.value + 1, e.f, high.value));
    }
    r.check("6.3", sandwich_ok && !exact.is_empty(), format!("ext(n,H-e)+1 <= f(n,H) <= ext(n,H) on {} instances: {}", exact.len(), lines.join("; ")));

    let mut monotone_ok = true;
    for (n, name) in [(5, "bull"), (6, "bull"), (5, "diamond"), (6, "diamond"), (5, "house"), (5, "K2,3")] {
        let h = g(name);
        let f = f_exact(n, &h, &budgeted(600)).unwrap().value as usize;
        for k in 1..=f {
            monotone_ok &= matches!(decide_colorable(n, &h, k, &budgeted(600)).unwrap(), Decision::Feasible(c) if c.color_count() == k && witness_is_valid(&c, &h, k));
        }
        monotone_ok &= decide_colorable(n, &h, f + 1, &budgeted(600)).unwrap() == Decision::Infeasible;
    }
    r.check("6.4", monotone_ok, "decide feasible for every k <= f and infeasible at f + 1 (6 instances)");

    let mut det_ok = true;
    for (n, name) in [(6, "bull"), (6, "diamond"), (6, "house"), (5, "K2,3"), (7, "bull")] {
        let h = g(name);
        let one = rb_exact(n, &h, &budgeted(600).with_workers(1)).unwrap();
        let four = rb_exact(n, &h, &budgeted(600).with_workers(4)).unwrap();
        det_ok &= one.value == four.value && one.witness == four.witness;
    }
    r.check("6.5", det_ok, "identical value and witness with 1 and 4 workers (5 instances)");

    let table_ok = reference_tables::EXT_C3_C4.iter().all(|&(n, e)| girth5_bound_holds(n, e));
    r.check("6.6", table_ok, "ext(n,{C3,C4}) <= n sqrt(n-1) / 2 for the embedded table n=4..16");

    // rb(n, D) <= rb(n, K_{2,3}) and rb(n, house) <= rb(n, K_{2,4}) where computed
    let mut lemma = Vec::new();
    let mut lemma_ok = true;
    for n in 5..=7 {
        let d = rb_exact(n, &g("diamond"), &budgeted(600)).unwrap();
        let k = rb_exact(n, &g("K2,3"), &budgeted(600)).unwrap();
        lemma_ok &= d.is_exact() && k.is_exact() && d.value <= k.value;
        lemma.push(format!("D/K2,3 n={n}: {} <= {}", d.value, k.value));
    }
    for n in 6..=7 {
        let h = rb_exact(n, &g("house"), &budgeted(600)).unwrap();
        let k = rb_exact(n, &g("K2,4"), &budgeted(600)).unwrap();
        lemma_ok &= h.is_exact() && k.is_exact() && h.value <= k.value;
        lemma.push(format!("house/K2,4 n={n}: {} <= {}", h.value, k.value));
    }
    r.check("6.7", lemma_ok, lemma.join("; "));
}

fn criterion_7(r: &mut Report) {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap_or_default();
    let ok = readme.contains("## Not reproducible at desk scale");
    r.check("7.1", ok, "README states that asymptotic and all-n results are only covered by the finite checks above");
    println!("      Asymptotic statements (liminf/limsup of ext(n,{{C3,C4}})/n^(3/2), the Θ(n^(3/2)) growth of rb for the");
    println!("      diamond, K2,3 and house) and statements for all n (rb(n,bull) = n+2 for every n >= 6) are NOT");
    println!("      reproducible by finite computation; this suite checks them only at the values listed above.");
}

fn extra_reports(r: &mut Report) {
    for (n, name) in [(7, "bull"), (7, "house"), (7, "K2,3"), (8, "diamond"), (8, "bull"), (8, "house"), (8, "K2,3")] {
        let h = g(name);
        let expected = reference_tables::rb(&h, n as u64).unwrap();
        let start = Instant::now();
        let out = rb_exact(n, &h, &budgeted(600)).unwrap();
        r.report("x", out.is_exact() && out.value == expected, format!("rb({n},{name}) = {} expected {expected} [{:?}] in {}", out.value, out.status, secs(start.elapsed())));
    }
}

fn main() {
    // `cargo test -- --list` and similar harness queries
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let start = Instant::now();
    let mut r = Report { failed: Vec::new(), passed: 0 };
    let mut exact = Vec::new();
    println!("== 1 value reproduction");
    criterion_1(&mut r, &mut exact);
    println!("== 2 certificates");
    criterion_2(&mut r);
    println!("== 3 Turán table");
    criterion_3(&mut r);
    println!("== 4 H - e families");
    criterion_4(&mut r);
    println!("== 5 closed-form cross-checks");
    criterion_5(&mut r, &mut exact);
    println!("== 6 properties");
    criterion_6(&mut r, &exact);
    println!("== 7 scope");
    criterion_7(&mut r);
    println!("== extra (report only)");
    extra_reports(&mut r);
    println!("acceptance: {} passed, {} failed in {}", r.passed, r.failed.len(), secs(start.elapsed()));
    if !r.failed.is_empty() {
        println!("failed: {}", r.failed.join(", "));
        std::process::exit(1);
    }
}
