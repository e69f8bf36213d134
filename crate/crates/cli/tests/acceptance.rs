//! One PASS/FAIL line per acceptance criterion, every comparison exact.
//! Each criterion drives the same campaigns as the binary.

use std::process::ExitCode;
use std::time::Instant;

use gordon_verify::{run, Report, Status};
use serde_json::Value;

struct Outcome {
    ok: bool,
    detail: String,
}

fn campaign(args: &[&str]) -> Report {
    let argv = std::iter::once("gordon-verify").chain(args.iter().copied());
    let out = run(argv);
    out.report.unwrap_or_else(|| panic!("{args:?}: {}", out.stderr))
}

/// Runs campaigns that must all pass; summarizes their mismatches otherwise.
fn all_pass(runs: &[&[&str]]) -> Outcome {
    let mut checks = 0u64;
    let mut bad = Vec::new();
    for args in runs {
        let r = campaign(args);
        checks += r.checks.values().sum::<u64>();
        if r.status != Status::Pass {
            bad.push(format!("{} {}: {} ({} mismatches)", r.command, r.args.join(" "), r.status, r.mismatches.len()));
        }
    }
    Outcome { ok: bad.is_empty(), detail: if bad.is_empty() { format!("{checks} comparisons") } else { bad.join("; ") } }
}

fn coefficients(args: &[&str]) -> Vec<String> {
    let r = campaign(args);
    match r.data.as_ref().and_then(|d| d.get("coeffs")) {
        Some(Value::Array(cs)) => cs.iter().map(|c| c.as_str().unwrap().to_string()).collect(),
        _ => panic!("{args:?} has no series"),
    }
}

fn gordon() -> Outcome {
    all_pass(&[&["verify-gordon", "--r", "2,3,4,5", "--max-n", "30"]])
}

fn shifted_rogers_ramanujan() -> Outcome {
    all_pass(&[&["verify-rrk", "--k", "1,2,3", "--max-m", "12", "--max-n", "25"]])
}

fn rank_three() -> Outcome {
    all_pass(&[&["verify-gordon3", "--max-m", "15", "--max-n", "30", "--bijection-n", "20"]])
}

fn new_part_conjecture() -> Outcome {
    let r = campaign(&["verify-conjecture", "--r", "4,5", "--max-n", "25", "--order", "25"]);
    let c_eq_b: Vec<_> = r.mismatches.iter().filter(|m| m.check == "C=B").collect();
    let detail = match c_eq_b.first() {
        None => format!("{} C=B comparisons, status {}", r.checks["C=B"], r.status),
        Some(m) => format!("finding at {}: B={} C={}", m.location, m.expected, m.got),
    };
    Outcome { ok: r.status == Status::Pass, detail }
}

fn series_identities() -> Outcome {
    let mut bad = Vec::new();
    let product = coefficients(&["series", "--kind", "product", "--r", "3", "--i", "3", "--order", "30"]);
    for kind in ["double-sum-r3", "chain-sum-r3"] {
        if coefficients(&["series", "--kind", kind, "--order", "30"]) != product {
            bad.push(kind.to_string());
        }
    }
    let mut pairs = 0;
    for n in 0..=12 {
        for j in 0..=n {
            let (n, j) = (n.to_string(), j.to_string());
            let lhs = coefficients(&["series", "--kind", "q-binomial", "--n", &n, "--j", &j, "--order", "30"]);
            let rhs = coefficients(&["series", "--kind", "lemma-q-binomial", "--n", &n, "--j", &j, "--order", "30"]);
            pairs += 1;
            if lhs != rhs {
                bad.push(format!("q-binomial n={n} j={j}"));
            }
        }
    }
    for r in ["3", "4"] {
        let sum = coefficients(&["series", "--kind", "conjecture", "--r", r, "--order", "30"]);
        let ag = coefficients(&["series", "--kind", "andrews-gordon", "--r", r, "--i", r, "--order", "30"]);
        if sum != ag {
            bad.push(format!("conjecture sum r={r}"));
        }
    }
    let detail = if bad.is_empty() { format!("r=3 sums, {pairs} q-binomial pairs, r=3,4 chain sums") } else { bad.join("; ") };
    Outcome { ok: bad.is_empty(), detail }
}

fn hilbert_engine() -> Outcome {
    let mut argv: Vec<Vec<String>> = Vec::new();
    let own = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    for r in 2..=4usize {
        let rs = r.to_string();
        for i in 1..=r {
            let is = i.to_string();
            for family in ["I_ri", "Iprime_ri"] {
                argv.push(own(&["hilbert", "--family", family, "--r", &rs, "--i", &is, "--order", "25"]));
            }
            for k in 1..=3 {
                argv.push(own(&["hilbert", "--family", "J_k_l", "--r", &rs, "--l", &is, "--k", &k.to_string(), "--order", "25"]));
            }
        }
        for c in 1..=3 {
            for m in 1..=3 {
                let (c, m) = (c.to_string(), m.to_string());
                argv.push(own(&["hilbert", "--family", "block", "--r", &rs, "--c", &c, "--m", &m, "--order", "25"]));
            }
        }
    }
    argv.push(own(&["verify-conjecture", "--r", "2,3", "--max-n", "25", "--order", "25", "--max-c", "3", "--max-m", "3"]));
    let borrowed: Vec<Vec<&str>> = argv.iter().map(|v| v.iter().map(String::as_str).collect()).collect();
    let runs: Vec<&[&str]> = borrowed.iter().map(Vec::as_slice).collect();
    all_pass(&runs)
}

fn recursion_machinery() -> Outcome {
    all_pass(&[
        &["verify-recursion", "--r", "2,3,4", "--max-k", "4", "--max-d", "6", "--order", "30"],
        &["verify-lz", "--r", "2,3,4", "--max-d", "6", "--order", "20"],
    ])
}

fn arc_ideal() -> Outcome {
    let mut bad = Vec::new();
    for r in ["2", "3"] {
        let rev = campaign(&["leading-ideal", "--r", r, "--max-weight", "12", "--order", "wrevlex"]);
        let lex = campaign(&["leading-ideal", "--r", r, "--max-weight", "12", "--order", "wlex"]);
        if rev.status != Status::Pass {
            bad.push(format!("wrevlex r={r}: {}", rev.status));
        }
        let standard = |rep: &Report| -> Vec<(String, String)> {
            let t = &rep.tables["weights"];
            let s = t.columns.iter().position(|c| c == "standard").unwrap();
            let b = t.columns.iter().position(|c| c == "b_rr_count").unwrap();
            t.rows.iter().map(|row| (row[s].clone(), row[b].clone())).collect()
        };
        let (sr, sl) = (standard(&rev), standard(&lex));
        if sr != sl || sr.iter().any(|(s, b)| s != b) {
            bad.push(format!("standard counts r={r}"));
        }
        if r == "2" && lex.status != Status::Pass {
            bad.push(format!("wlex candidate r=2: {} mismatches", lex.mismatches.len()));
        }
    }
    let detail = if bad.is_empty() { "r=2,3 up to weight 12".to_string() } else { bad.join("; ") };
    Outcome { ok: bad.is_empty(), detail }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("A = B = product = multisum, r <= 5, n <= 30", gordon),
        ("shifted Rogers-Ramanujan counts and system, k <= 3", shifted_rogers_ramanujan),
        ("r = 3 new-part counts, system and bijections", rank_three),
        ("new-part counts equal difference counts, r = 4, 5", new_part_conjecture),
        ("series identities to q^30", series_identities),
        ("Hilbert series methods and closed forms", hilbert_engine),
        ("recursions, coefficient tables, hypothesis, convergence", recursion_machinery),
        ("leading ideal of the differential ideal", arc_ideal),
    ];
    let mut failed = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let verdict = if outcome.ok { "PASS" } else { "FAIL" };
        if !outcome.ok {
            failed += 1;
        }
        println!("criterion {}: {verdict}  {name}  [{}; {:.1}s]", idx + 1, outcome.detail, start.elapsed().as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
