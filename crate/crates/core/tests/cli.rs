use std::path::Path;
use std::process::{Command, Output};

use ckform::report::RunReport;

const BIN: &str = env!("CARGO_BIN_EXE_ckform");
const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn verdict_on_corpus_emits_report() {
    let o = run(&["verdict", &format!("{DATA}/corpus.triples")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = RunReport::from_lines(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(r.command, "verdict");
    let first = &r.results[0];
    assert_eq!(first["outcome"], "AdmitsStandard");
    let cites = first["trace"].as_array().unwrap().iter().filter(|s| s["fired"] == true).flat_map(|s| s["citations"].as_array().unwrap().clone());
    assert!(cites.into_iter().any(|c| c == "Table 1 row 1"));
}

#[test]
fn bad_records_exit_one_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "bad.triples",
        "schema=ckform-triples/1\ng=so(2,2) h=so(1,2)\ng=sl(3,R) h=sl(2,R) embedding=centralizer_witness witness=0,0\n",
    );
    let o = run(&["verdict", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = stderr(&o);
    assert!(err.contains("line 2") && err.contains("so(2,2)"), "{err}");
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(run(&["verdict", "/nonexistent/x.triples"]).status.code(), Some(1));
}

#[test]
fn verify_table_one_and_sweep() {
    let o = run(&["verify-table1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r = RunReport::from_lines(&String::from_utf8(o.stdout).unwrap()).unwrap();
    assert_eq!(r.results.len(), 43);
    assert_eq!(r.results[42]["summary"]["failures"], 0);
    let o = run(&["sweep", "--family", "so_nn", "--max-param", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(run(&["sweep", "--family", "nope"]).status.code(), Some(1));
}

#[test]
fn lemmas_cap_is_enforced() {
    let o = run(&["lemmas", "--rank-cap", "2", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(run(&["lemmas", "--rank-cap", "5"]).status.code(), Some(1));
}

#[test]
fn corrupted_catalog_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let catalog = std::fs::read_to_string(format!("{DATA}/catalog.txt")).unwrap();
    let table = std::fs::read_to_string(format!("{DATA}/table1.txt")).unwrap();
    let bad: Vec<String> = catalog
        .lines()
        .map(|l| if l.starts_with("name=su(2,3) ") { l.replace("dim_k=12", "dim_k=13") } else { l.to_string() })
        .collect();
    assert_ne!(bad.join("\n") + "\n", catalog);
    write(dir.path(), "catalog.txt", &(bad.join("\n") + "\n"));
    write(dir.path(), "table1.txt", &table);
    let d = dir.path().display().to_string();
    let o = run(&["--data-dir", &d, "audit-catalog"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("su(2,3)"), "{}", stderr(&o));
    assert_eq!(run(&["--data-dir", &d, "verify-table1"]).status.code(), Some(2));
}

#[test]
fn builtin_catalog_audits_clean() {
    let o = run(&["audit-catalog"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
}
