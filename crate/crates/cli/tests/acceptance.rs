//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. Set `POLYA_BLESS=1` to rewrite the golden corpus.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use polya_core::verify::{run_suite, SuiteOptions, SUITES};
use serde_json::{json, Value};

const BUDGETS: [u64; 13] = [60, 30, 60, 10, 120, 120, 180, 120, 120, 60, 10, 60, 10];

const TITLES: [&str; 14] = [
    "Weyl coordinate agreement",
    "generating series",
    "M-Weyl coordinate agreement",
    "factorial identities",
    "Polya formula vs oracle",
    "quantum symmetric functions vs oracle",
    "star associativity",
    "wreath and dihedral oracles",
    "symmetric powers of Weyl algebras",
    "odd and Boolean formulas",
    "gl(inf) model",
    "Schur composition",
    "dimension counts",
    "CLI golden corpus",
];

/// Arguments for the golden corpus; `{g}` expands to the fixture directory.
const CASES: [&[&str]; 50] = [
    &["weyl", "normal-order", "y . x"],
    &["weyl", "normal-order", "y^2 x^2"],
    &["weyl", "normal-order", "y^3 . x^2 . y . x"],
    &["weyl", "normal-order", "2 y x - 1/2i x y"],
    &["weyl", "normal-order", "h y . x + y^2"],
    &["weyl", "product", "y", "x^2", "y"],
    &["weyl", "product", "x y", "x y"],
    &["weyl", "coords", "x y^2 . x^2 y", "--k", "1"],
    &["weyl", "coords", "y^2 . x^3"],
    &["mweyl", "normal-order", "y . x"],
    &["mweyl", "normal-order", "y^2 . x"],
    &["mweyl", "product", "y", "x", "y"],
    &["mweyl", "coords", "y^2 . x^2", "--k", "2"],
    &["sympow", "boolean", "--n", "2", "1", "1"],
    &["sympow", "boolean", "--n", "5", "2", "3"],
    &["sympow", "boolean", "--n", "4", "[1] + [2]", "[2]"],
    &["sympow", "dim", "--dim", "3", "--group", "S2", "--n", "2"],
    &["sympow", "dim", "--dim", "2", "--group", "gens:(1 2 3 4)", "--n", "4"],
    &["sympow", "product", "--algebra", "{g}/poly3.json", "--group", "S2", "--n", "2", "x,1", "x,x"],
    &["sympow", "product", "--algebra", "{g}/poly3.json", "--group", "S3", "--n", "3", "x,1,1", "x,x,1"],
    &["sympow", "product", "--algebra", "{g}/ext2.json", "--group", "S2", "--n", "2", "th1,th2", "th1,1"],
    &["sympow", "product", "--oracle", "--algebra", "{g}/ext2.json", "--group", "S2", "--n", "2", "th1,1", "1,th2"],
    &["sympow", "classical", "--type", "A", "[x y | 1]", "[y | x]"],
    &["qsym", "star", "--type", "A", "[y | 1]", "[x | 1]"],
    &["qsym", "star", "--type", "A", "[x1 y1 | x2]", "[y1 | 1]"],
    &["qsym", "star", "--type", "B", "[y^2 | x^2]", "[x^2 | y x]"],
    &["qsym", "star", "--type", "B", "[y | 1]", "[x | 1]"],
    &["qsym", "star", "--type", "D", "[y | x]", "[x | y]"],
    &["qsym", "star", "--type", "M", "[y | 1]", "[x | 1]"],
    &["qsym", "star", "--type", "zm:2", "[z zb]", "[z^2]"],
    &["qsym", "star", "--type", "zm:3", "[z^3 | z zb]", "[zb^3 | z zb]"],
    &["qsym", "star", "--type", "zm:2", "[z^2 | zb^2]", "[z zb | z^2]"],
    &["qsym", "star", "--type", "dihedral:1", "z", "z"],
    &["qsym", "star", "--type", "dihedral:2", "[zb^2 | z zb]", "[z^2 | 1]"],
    &["qsym", "product", "--kind", "weyl", "--path", "direct", "[y | x]", "[x | y]", "[y | 1]"],
    &["qsym", "product", "--kind", "mweyl", "--path", "iterated", "[y]", "[x]", "[y]"],
    &["qsym", "normal-form", "[zb^2 | z] + [z^2 | zb]"],
    &["super", "odd", "[th1 | th2]", "[th2 | th1]"],
    &["super", "odd", "[th1 th2 | 1]", "[th3 | th1]"],
    &["super", "ext", "th1 th3", "th2"],
    &["super", "clifford", "th1 th2", "th2 th3"],
    &["super", "koszul", "--a", "1,0", "--b", "1,1", "--perm", "(1 2)"],
    &["schur", "compose", "--m", "2,3", "--n", "2", "{g}/f.json", "{g}/g.json"],
    &["schur", "compose", "--m", "2", "--n", "2", "{g}/h.json", "{g}/k.json"],
    &["schur", "identity", "--m", "2", "--n", "2", "--space", "0,1"],
    &["weyl", "normal-order", "x^"],
    &["weyl", "normal-order", "x + q"],
    &["qsym", "star", "--type", "zm:2", "[z]", "[z]"],
    &["sympow", "dim", "--dim", "2"],
    &["verify", "dimensions", "--nmax", "3"],
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

fn expand(args: &[&str]) -> Vec<String> {
    let g = golden_dir();
    args.iter().map(|a| a.replace("{g}", g.to_str().expect("utf-8 path"))).collect()
}

fn run_cli(args: &[String]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_polya")).args(args).output().expect("spawn polya");
    (String::from_utf8(out.stdout).expect("utf-8 output"), out.status.code().unwrap_or(-1))
}

fn family(args: &[&str]) -> Option<&'static str> {
    match (args[0], args[1]) {
        ("weyl", "normal-order" | "product") => Some("weyl"),
        ("mweyl", "normal-order" | "product") => Some("mweyl"),
        ("qsym", _) => Some("qsym"),
        ("super", "odd") => Some("odd"),
        ("super", "ext" | "clifford") => Some("ext"),
        ("sympow", "boolean") => Some("boolean"),
        ("schur", _) => Some("schur"),
        _ => None,
    }
}

fn golden_corpus() -> Result<String, String> {
    let path = golden_dir().join("corpus.json");
    let bless = std::env::var_os("POLYA_BLESS").is_some();
    let mut fresh = Vec::new();
    let mut roundtrips = 0;
    for case in CASES {
        let args = expand(case);
        let (out, code) = run_cli(&args);
        let (again, code2) = run_cli(&args);
        if out != again || code != code2 {
            return Err(format!("nondeterministic output for {case:?}"));
        }
        if code == 0 {
            if let Some(fam) = family(case) {
                let v: Value = serde_json::from_str(&out).map_err(|e| format!("{case:?}: {e}"))?;
                let back = polya_cli::reencode(fam, &v).map_err(|e| format!("{case:?}: round-trip failed: {e}"))?;
                if back != v {
                    return Err(format!("{case:?}: round-trip mismatch\n  printed  {v}\n  reparsed {back}"));
                }
                roundtrips += 1;
            }
        }
        fresh.push(json!({ "args": case, "exit": code, "stdout": out }));
    }
    if bless {
        let text = serde_json::to_string_pretty(&Value::Array(fresh)).expect("serialize corpus");
        std::fs::write(&path, text + "\n").map_err(|e| e.to_string())?;
    } else {
        let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let frozen: Vec<Value> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        if frozen.len() != fresh.len() {
            return Err(format!("corpus has {} cases, expected {}", frozen.len(), fresh.len()));
        }
        for (f, g) in fresh.iter().zip(&frozen) {
            if f != g {
                return Err(format!("golden mismatch for {}\n  expected {}\n  actual   {}", f["args"], g, f));
            }
        }
    }
    for suite in SUITES {
        let (out, code) = run_cli(&["verify".to_string(), suite.to_string()]);
        let v: Value = serde_json::from_str(&out).map_err(|e| format!("verify {suite}: {e}"))?;
        if code != 0 || v["suite"] != suite || v["mismatches"] != json!([]) {
            return Err(format!("verify {suite} exited {code}: {out}"));
        }
    }
    Ok(format!("{} cases, {roundtrips} round-trips, {} suites by name", CASES.len(), SUITES.len()))
}

fn main() {
    let mut failures = 0;
    for (i, suite) in SUITES.iter().enumerate() {
        let start = Instant::now();
        let result = run_suite(suite, &SuiteOptions::default());
        let elapsed = start.elapsed();
        let detail = match &result {
            Ok(r) if !r.passed() => {
                let first = &r.mismatches[0];
                Err(format!(
                    "{} mismatches; first: {} expected {} got {}",
                    r.mismatches.len(),
                    first.input,
                    first.expected,
                    first.actual
                ))
            }
            Ok(r) if i == 0 && r.instances < 4000 => Err(format!("only {} instances", r.instances)),
            Ok(_) if elapsed > Duration::from_secs(BUDGETS[i]) => Err(format!("over the {} s budget", BUDGETS[i])),
            Ok(r) => Ok(format!("{} checks", r.instances)),
            Err(e) => Err(e.to_string()),
        };
        failures += report(i + 1, suite, detail, elapsed);
    }
    let start = Instant::now();
    failures += report(14, "cli", golden_corpus(), start.elapsed());
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 14 criteria passed");
}

fn report(id: usize, name: &str, detail: Result<String, String>, elapsed: Duration) -> usize {
    let secs = elapsed.as_secs_f64();
    match detail {
        Ok(d) => {
            println!("criterion {id:>2} [{name}] {}: PASS ({d}, {secs:.1} s)", TITLES[id - 1]);
            0
        }
        Err(d) => {
            println!("criterion {id:>2} [{name}] {}: FAIL ({d}, {secs:.1} s)", TITLES[id - 1]);
            1
        }
    }
}
