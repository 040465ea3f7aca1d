//! Runs the acceptance criteria and prints one pass/fail line per criterion.

use std::collections::BTreeMap;
use std::time::Instant;

use jd_verify::{run_suite, Params, Report, Status, SUITES};

struct Runs {
    reports: BTreeMap<&'static str, Report>,
}

impl Runs {
    fn get(&mut self, id: &'static str) -> &Report {
        self.reports.entry(id).or_insert_with(|| {
            let t = Instant::now();
            let r = run_suite(id, &Params::default()).expect("registered suite");
            eprintln!("  ran {id} in {:.1}s", t.elapsed().as_secs_f64());
            r
        })
    }
}

fn summary(reports: &[&Report], filter: impl Fn(&str) -> bool) -> (bool, String) {
    let mut n = 0;
    let mut bad = Vec::new();
    for r in reports {
        for c in r.cases.iter().filter(|c| filter(&c.id)) {
            n += 1;
            if c.status != Status::Pass {
                bad.push(format!("{}/{}: expected {}; computed {}", r.suite, c.id, c.expected, c.computed));
            }
        }
    }
    let ok = n > 0 && bad.is_empty();
    let detail = if ok { format!("{n} cases") } else { format!("{} of {n} cases not passing: {}", bad.len(), bad.join(" | ")) };
    (ok, detail)
}

fn main() {
    let mut runs = Runs { reports: BTreeMap::new() };
    let mut lines = Vec::new();
    let mut all = true;
    let mut record = |k: usize, what: &str, (ok, detail): (bool, String)| {
        all &= ok;
        let line = format!("criterion {k:>2} [{}] {what}: {detail}", if ok { "PASS" } else { "FAIL" });
        println!("{line}");
        lines.push(line);
    };

    let t = Instant::now();
    let r = runs.get("oneloop_rank").clone();
    let mut res = summary(&[&r], |id| id.starts_with("A^c") || id.starts_with("palindromes"));
    let secs = t.elapsed().as_secs_f64();
    if secs > 120.0 {
        res = (false, format!("{} (took {secs:.0}s > 120s)", res.1));
    }
    record(1, "one-loop rank and torsion", res);

    let r = runs.get("oneloop_phi").clone();
    record(2, "Φ isomorphism", summary(&[&r], |_| true));

    let r = runs.get("quasilie_exact").clone();
    record(3, "quasi-Lie sequences", summary(&[&r], |_| true));

    let r = runs.get("eta_iso").clone();
    record(4, "η′ isomorphism", summary(&[&r], |_| true));

    let rs: Vec<Report> = ["delta_welldef", "delta_Delta", "jacobi_Dvv", "kirchhoff"].into_iter().map(|s| runs.get(s).clone()).collect();
    record(5, "operator identities", summary(&rs.iter().collect::<Vec<_>>(), |_| true));

    let r = runs.get("leibniz").clone();
    record(6, "Leibniz rule and per-color identities", summary(&[&r], |_| true));

    let r = runs.get("sq_xi").clone();
    record(7, "δ″∘sq = ξ", summary(&[&r], |_| true));

    let r = runs.get("nu_inj").clone();
    record(8, "ν injective, kills θ", summary(&[&r], |_| true));

    let r = runs.get("tree_kernel").clone();
    record(9, "tree kernel", summary(&[&r], |_| true));

    let r = runs.get("y3_structure").clone();
    record(10, "j and A^c_3 / im j", summary(&[&r], |_| true));

    let counts = runs.get("oneloop_rank").clone();
    let p = runs.get("periodic_iso").clone();
    let q = runs.get("periodic_inclusion").clone();
    let (c_ok, c_detail) = summary(&[&counts], |id| id.starts_with("necklaces"));
    let (p_ok, p_detail) = summary(&[&p, &q], |_| true);
    record(11, "enumeration oracles", (c_ok && p_ok, format!("counts: {c_detail}; periodic: {p_detail}")));

    for s in SUITES {
        runs.get(s.id);
    }
    let mut differing = Vec::new();
    for s in SUITES {
        let first = runs.get(s.id).to_json();
        let again = run_suite(s.id, &Params::default()).unwrap().to_json();
        if first != again {
            differing.push(s.id);
        }
    }
    let every_pass = SUITES.iter().all(|s| runs.get(s.id).passed);
    record(
        12,
        "deterministic reports",
        (differing.is_empty(), if differing.is_empty() { format!("{} suites byte-identical on re-run", SUITES.len()) } else { format!("differ: {differing:?}") }),
    );
    if !every_pass {
        println!("note: some suite reports did not pass");
    }
    assert!(all, "acceptance failures:\n{}", lines.join("\n"));
}
