//! Acceptance checks, one PASS/FAIL line each.
//!
//! Exits nonzero when a check fails unless it is listed in `KNOWN_FAILURES`.
//! Those still print FAIL with their evidence.

use std::process::Command;

use apolar_core::growth::{binomial, macaulay_bound, macaulay_rep};
use apolar_core::poincare::predict;
use apolar_core::poly::parse_infer;
use apolar_core::suites::{run_suite, Suite};

const SEED: u64 = 2024;

/// The stretched family `y1^s + y2^2 + ... + yn^2` has series `1/(1 - nz + z^2)`,
/// so `1/(1 - nz)` and `n^p` cannot both be reproduced there.
const KNOWN_FAILURES: &[usize] = &[6];

type Criterion = (&'static str, Box<dyn Fn() -> Check>);

struct Check {
    passed: bool,
    detail: String,
}

fn suites(list: &[(Suite, usize)]) -> Check {
    let mut passed = true;
    let mut parts = Vec::new();
    for &(s, trials) in list {
        let r = run_suite(s, trials, SEED);
        passed &= r.all_passed() && (s.is_exhaustive() || r.trials.len() == trials);
        parts.push(format!("{}: {}", s.name(), r.summary()));
        for t in r.trials.iter().filter(|t| !t.passed).take(3) {
            parts.push(format!("  trial {} {} :: {}", t.index, t.input, t.detail));
        }
    }
    Check { passed, detail: parts.join("; ") }
}

fn powers(n: u64, pmax: u32) -> Vec<String> {
    (0..=pmax).map(|p| n.pow(p).to_string()).collect()
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn closed_forms() -> Check {
    let mut passed = true;
    let mut parts = Vec::new();
    for n in [2usize, 3] {
        for s in [3u32, 4] {
            let text = std::iter::once(format!("y1^{s}"))
                .chain((2..=n).map(|j| format!("y{j}^2")))
                .collect::<Vec<_>>()
                .join("+");
            let f = parse_infer(&text).expect("parses");
            let p = predict(&f, 5).expect("predicts");
            let expected = powers(n as u64, 5);
            let oracle = strings(&p.oracle.coeffs);
            let closed = p.closed_form.as_ref().map(|c| strings(&c.series(5).expect("expands").coeffs));
            let form = p.closed_form.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "none".into());
            let ok = oracle == expected && closed.as_ref() == Some(&expected);
            passed &= ok;
            parts.push(format!("{text}: form {form}, oracle ({}) vs n^p ({})", oracle.join(","), expected.join(",")));
        }
    }
    let f = parse_infer("y1^2+y2^2").expect("parses");
    let p = predict(&f, 6).expect("predicts");
    let expected: Vec<String> = (1..=7).map(|p: u32| p.to_string()).collect();
    let oracle = strings(&p.oracle.coeffs);
    passed &= oracle == expected;
    parts.push(format!("y1^2+y2^2: oracle ({})", oracle.join(",")));
    Check { passed, detail: parts.join("; ") }
}

/// Every representation `h = C(k_d, d) + ... + C(k_j, j)` with `k_d > ... > k_j >= j >= 1`.
fn representations(h: u64, j: u64, below: u64, acc: &mut Vec<(u64, u64)>, out: &mut Vec<Vec<(u64, u64)>>) {
    if h == 0 {
        out.push(acc.clone());
        return;
    }
    if j == 0 {
        return;
    }
    for k in j..below {
        let c = binomial(k, j);
        let c: u64 = c.try_into().unwrap_or(u64::MAX);
        if c > h {
            break;
        }
        acc.push((k, j));
        representations(h - c, j - 1, k, acc, out);
        acc.pop();
    }
}

fn macaulay_combinatorics() -> Check {
    let b = macaulay_bound(4u32, 2);
    let mut passed = b == 5u32.into();
    let mut parts = vec![format!("4^<2> = {b}")];
    let mut checked = 0;
    for h in 1..=50u64 {
        for d in 1..=6u64 {
            let mut all = Vec::new();
            representations(h, d, h + d + 1, &mut Vec::new(), &mut all);
            let ours: Vec<(u64, u64)> = macaulay_rep(h, d as u32).terms.iter().map(|&(k, j)| (k, j as u64)).collect();
            if all.len() != 1 || all[0] != ours {
                passed = false;
                parts.push(format!("h = {h}, d = {d}: {} representations, greedy {ours:?}", all.len()));
            }
            checked += 1;
        }
    }
    parts.push(format!("{checked} (h, d) pairs have exactly one representation"));
    let o = suites(&[(Suite::OSequence, 50)]);
    passed &= o.passed;
    parts.push(o.detail);
    Check { passed, detail: parts.join("; ") }
}

fn determinism() -> Check {
    let exe = env!("CARGO_BIN_EXE_apolar-lab");
    let commands: &[&[&str]] = &[
        &["hilbert", "y1^3+y1*y2^2+y3^2"],
        &["ann", "y1^4+y2^3+y1*y2*y3"],
        &["decompose", "y1^5+y1^2*y2^2+y3^2"],
        &["betti", "y1^3+y2^3", "--pmax", "5"],
        &["poincare", "y1^3+y1*y2^2+y3^2+y4^2"],
        &["classify", "--hilbert", "1,5,4,4,1"],
        &["split", "--g", "y1^3+y2^3", "--h", "y3^4"],
        &["enumerate", "--sdeg", "5"],
        &["verify", "--suite", "split-sum", "--trials", "8"],
        &["verify", "--suite", "three-stretched", "--trials", "8"],
    ];
    let mut passed = true;
    let mut parts = Vec::new();
    for args in commands {
        let run = || Command::new(exe).args(["--json", "--seed", "17"]).args(*args).output().expect("binary runs");
        let (a, b) = (run(), run());
        let same = a.stdout == b.stdout && a.status == b.status && !a.stdout.is_empty();
        let ok = same && a.status.success();
        passed &= ok;
        if !ok {
            parts.push(format!("{}: status {:?}, identical {same}", args[0], a.status.code()));
        }
    }
    parts.push(format!("{} commands byte-identical across two runs", commands.len()));
    Check { passed, detail: parts.join("; ") }
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        (
            "perp of the annihilator equals the derivative module",
            Box::new(|| suites(&[(Suite::MacaulayCorrespondence, 50)])),
        ),
        ("graded Hilbert function and ldf(Ann F) = Ann(tdf F)", Box::new(|| suites(&[(Suite::LdfTdf, 50)]))),
        (
            "assembled split ideals equal the annihilator",
            Box::new(|| suites(&[(Suite::SplitSum, 50), (Suite::QuadricSplit, 50)])),
        ),
        (
            "symmetric decomposition rows, sums and first row",
            Box::new(|| {
                suites(&[
                    (Suite::DecompositionSymmetry, 50),
                    (Suite::DecompositionSum, 50),
                    (Suite::GorensteinQuotient, 50),
                ])
            }),
        ),
        (
            "socle, quotient and quadric series identities",
            Box::new(|| {
                suites(&[(Suite::SocleFormula, 50), (Suite::QuotientFormula, 50), (Suite::QuadricRelation, 50)])
            }),
        ),
        ("stretched closed forms 1/(1-nz) and y1^2+y2^2", Box::new(closed_forms)),
        ("column inequality for 3-stretched algebras", Box::new(|| suites(&[(Suite::ThreeStretched, 100)]))),
        ("bounded-length dichotomy by enumeration", Box::new(|| suites(&[(Suite::BoundedLengthDichotomy, 0)]))),
        ("Macaulay representations and O-sequences", Box::new(macaulay_combinatorics)),
        ("byte-reproducible JSON", Box::new(determinism)),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        let c = check();
        let tag = if c.passed { "PASS" } else { "FAIL" };
        println!("{tag} {id:>2} {name}: {}", c.detail);
        if c.passed {
            passed += 1;
        } else if !KNOWN_FAILURES.contains(&id) {
            unexpected.push(id);
        }
    }
    println!("{passed}/{} criteria pass", criteria.len());
    if !unexpected.is_empty() {
        println!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
