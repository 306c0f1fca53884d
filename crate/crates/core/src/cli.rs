//! Command-line front end. Every command writes a [`RunReport`] to stdout
//! and returns the process exit status: 0 evaluated, 1 input error,
//! 2 invariant violation.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::catalog::{Catalog, CatalogError};
use crate::forms::Reductive;
use crate::harness;
use crate::linalg::Rat;
use crate::oracle;
use crate::report::RunReport;
use crate::verdict::{EmbeddingDescriptor, EmbeddingKind, Engine, SweepFamily, TripleSpec, Verdict};

pub const TRIPLES_SCHEMA: &str = "schema=ckform-triples/1";
pub const EXHAUSTIVE_RANK_CAP: usize = 4;
pub const DEFAULT_SEED: u64 = 20_190_521;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INVARIANT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ckform", version, about = "Decide standard compact Clifford-Klein forms from root data")]
pub struct Cli {
    /// Directory holding catalog.txt and table1.txt (defaults to the built-in copies).
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every record of a triples file.
    Verdict { file: PathBuf },
    /// Check d(g) = d(h) + d(l) for every Table 1 row and n <= max-n.
    VerifyTable1 {
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
    /// Run the root-system harnesses.
    Lemmas {
        #[arg(long, default_value_t = EXHAUSTIVE_RANK_CAP)]
        rank_cap: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Audit catalog records and compare the shipped matrix models with it.
    AuditCatalog,
    /// Regenerate a corollary list from the rules and diff it.
    Sweep {
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_param: u32,
    },
    /// Catalog queries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Print every record.
    List,
}

/// A parsed record of a triples file, echoed into reports.
#[derive(Debug, Clone, Serialize)]
pub struct SpecRecord {
    pub line: usize,
    pub g: String,
    pub h: String,
    pub l: Option<String>,
    pub embedding: String,
    pub row: Option<u32>,
    pub n: Option<u32>,
    pub witness: Option<Vec<String>>,
    pub container: Option<String>,
    pub notes: String,
    #[serde(skip)]
    pub spec: Option<TripleSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

fn parse_record(line: usize, text: &str) -> Result<SpecRecord, String> {
    let (fields, notes) = match text.find("notes=") {
        Some(i) => (&text[..i], text[i + 6..].trim().to_string()),
        None => (text, String::new()),
    };
    let mut rec = SpecRecord {
        line,
        g: String::new(),
        h: String::new(),
        l: None,
        embedding: EmbeddingKind::Unspecified.id().into(),
        row: None,
        n: None,
        witness: None,
        container: None,
        notes,
        spec: None,
    };
    for kv in fields.split_whitespace() {
        let (k, v) = kv.split_once('=').ok_or_else(|| format!("expected key=value, got `{kv}`"))?;
        let int = |v: &str| v.parse::<u32>().map_err(|_| format!("`{k}` must be a non-negative integer, got `{v}`"));
        match k {
            "g" => rec.g = v.into(),
            "h" => rec.h = v.into(),
            "l" => rec.l = Some(v.into()),
            "embedding" => rec.embedding = v.into(),
            "row" => rec.row = Some(int(v)?),
            "n" => rec.n = Some(int(v)?),
            "witness" => rec.witness = Some(v.split(',').map(str::to_string).collect()),
            "container" => rec.container = Some(v.into()),
            _ => return Err(format!("unknown field `{k}`")),
        }
    }
    if rec.g.is_empty() || rec.h.is_empty() {
        return Err("fields `g` and `h` are required".into());
    }
    let kind: EmbeddingKind = rec.embedding.parse()?;
    let witness = rec
        .witness
        .as_ref()
        .map(|w| w.iter().map(|x| x.parse::<Rat>().map_err(|_| format!("witness entry `{x}` is not a rational"))).collect())
        .transpose()?;
    let emb = EmbeddingDescriptor {
        kind,
        witness,
        container: rec.container.clone(),
        row: rec.row,
        n: rec.n,
        notes: rec.notes.clone(),
    };
    if let Some(c) = &rec.container {
        Reductive::parse(c).map_err(|e| format!("container: {e}"))?;
    }
    let spec = TripleSpec::parse(&rec.g, &rec.h, emb, rec.l.as_deref()).map_err(|e| e.to_string())?;
    rec.spec = Some(spec);
    Ok(rec)
}

/// Parses a triples file, collecting every diagnostic.
pub fn parse_triples(text: &str) -> Result<Vec<SpecRecord>, Vec<Diagnostic>> {
    let (records, diags) = parse_lenient(text);
    if diags.is_empty() {
        Ok(records)
    } else {
        Err(diags)
    }
}

fn parse_lenient(text: &str) -> (Vec<SpecRecord>, Vec<Diagnostic>) {
    let mut records = Vec::new();
    let mut diags = Vec::new();
    let mut header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if !header {
            if t != TRIPLES_SCHEMA {
                diags.push(Diagnostic { line, message: format!("expected header `{TRIPLES_SCHEMA}`") });
                return (records, diags);
            }
            header = true;
            continue;
        }
        match parse_record(line, t) {
            Ok(r) => records.push(r),
            Err(message) => diags.push(Diagnostic { line, message }),
        }
    }
    if !header {
        diags.push(Diagnostic { line: 1, message: format!("missing header `{TRIPLES_SCHEMA}`") });
    }
    (records, diags)
}

/// Parses and classifies a triples file; any diagnostic from either pass
/// rejects the whole file.
pub fn check_triples(engine: &Engine, text: &str) -> Result<RunReport, Vec<Diagnostic>> {
    let (records, mut diags) = parse_lenient(text);
    match verdict_report(engine, &records) {
        Ok(report) if diags.is_empty() => Ok(report),
        Ok(_) => Err(diags),
        Err(more) => {
            diags.extend(more);
            diags.sort_by_key(|d| d.line);
            Err(diags)
        }
    }
}

#[derive(Serialize)]
struct VerdictRecord<'a> {
    line: usize,
    g: &'a str,
    h: &'a str,
    l: Option<&'a str>,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

/// Classifies parsed records; rejections are line-anchored diagnostics.
pub fn verdict_report(engine: &Engine, records: &[SpecRecord]) -> Result<RunReport, Vec<Diagnostic>> {
    let verdicts: Vec<Result<Verdict, Diagnostic>> = records
        .par_iter()
        .map(|r| {
            engine
                .classify(r.spec.as_ref().expect("parsed"))
                .map_err(|e| Diagnostic { line: r.line, message: e.to_string() })
        })
        .collect();
    let diags: Vec<Diagnostic> = verdicts.iter().filter_map(|v| v.as_ref().err().cloned()).collect();
    if !diags.is_empty() {
        return Err(diags);
    }
    let mut report = RunReport::new("verdict", serde_json::to_value(records).expect("records serialize"));
    for (r, v) in records.iter().zip(&verdicts) {
        let v = v.as_ref().expect("checked");
        report.push(&VerdictRecord { line: r.line, g: &r.g, h: &r.h, l: r.l.as_deref(), verdict: v });
    }
    Ok(report)
}

fn load_catalog(dir: Option<&Path>) -> Result<Catalog, CatalogError> {
    match dir {
        Some(d) => Catalog::load_dir(d),
        None => {
            let (c, t) = Catalog::builtin_text();
            Catalog::load(c, t)
        }
    }
}

fn emit(out: &mut dyn Write, report: &RunReport) {
    // A closed stdout is not worth a panic.
    let _ = out.write_all(report.to_lines().as_bytes());
}

fn catalog_failure(err: &mut dyn Write, e: &CatalogError) -> i32 {
    let _ = writeln!(err, "error: {e}");
    match e {
        CatalogError::Io { .. } => EXIT_INPUT,
        _ => EXIT_INVARIANT,
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let dir = cli.data_dir.as_deref();
    if let Command::AuditCatalog = cli.command {
        return audit_catalog(dir, out, err);
    }
    let catalog = match load_catalog(dir) {
        Ok(c) => c,
        Err(e) => return catalog_failure(err, &e),
    };
    let engine = Engine::new(&catalog);
    match &cli.command {
        Command::Verdict { file } => {
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => {
                    let _ = writeln!(err, "error: reading {}: {e}", file.display());
                    return EXIT_INPUT;
                }
            };
            match check_triples(&engine, &text) {
                Ok(report) => {
                    emit(out, &report);
                    EXIT_OK
                }
                Err(diags) => {
                    for d in diags {
                        let _ = writeln!(err, "{}:{d}", file.display());
                    }
                    EXIT_INPUT
                }
            }
        }
        Command::VerifyTable1 { max_n } => {
            if *max_n == 0 {
                let _ = writeln!(err, "error: --max-n must be at least 1");
                return EXIT_INPUT;
            }
            let mut report = RunReport::new("verify-table1", json!({ "max_n": max_n }));
            let mut failures = 0;
            for check in catalog.table_checks(*max_n) {
                match check {
                    Ok(c) => {
                        failures += usize::from(!c.holds);
                        report.push(&c);
                    }
                    Err(e) => {
                        failures += 1;
                        report.push(&json!({ "error": e.to_string() }));
                    }
                }
            }
            report.push(&json!({ "summary": { "instances": report.results.len(), "failures": failures } }));
            emit(out, &report);
            if failures == 0 {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            }
        }
        Command::Lemmas { rank_cap, samples, seed } => {
            if *rank_cap > EXHAUSTIVE_RANK_CAP || *rank_cap == 0 {
                let _ = writeln!(err, "error: --rank-cap must be between 1 and {EXHAUSTIVE_RANK_CAP} in exhaustive mode");
                return EXIT_INPUT;
            }
            let reports = match harness::run_all(*rank_cap, *samples, *seed) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_INVARIANT;
                }
            };
            let mut report =
                RunReport::new("lemmas", json!({ "rank_cap": rank_cap, "samples": samples, "seed": seed }));
            let counterexamples: usize = reports.iter().map(|r| r.counterexamples.len()).sum();
            let cases: usize = reports.iter().map(|r| r.cases).sum();
            for r in &reports {
                report.push(r);
            }
            report.push(&json!({ "summary": { "checks": reports.len(), "cases": cases, "counterexamples": counterexamples } }));
            emit(out, &report);
            if counterexamples == 0 {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            }
        }
        Command::Sweep { family, max_param } => {
            let families: Vec<SweepFamily> = match family {
                None => SweepFamily::ALL.to_vec(),
                Some(f) => match f.parse() {
                    Ok(f) => vec![f],
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return EXIT_INPUT;
                    }
                },
            };
            let mut report = RunReport::new("sweep", json!({ "family": family, "max_param": max_param }));
            let mut pass = true;
            for f in families {
                match engine.corollary_sweep(f, *max_param) {
                    Ok(r) => {
                        pass &= r.pass;
                        report.push(&r);
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return EXIT_INVARIANT;
                    }
                }
            }
            emit(out, &report);
            if pass {
                EXIT_OK
            } else {
                EXIT_INVARIANT
            }
        }
        Command::Catalog { action: CatalogAction::List } => {
            let mut report = RunReport::new("catalog list", json!({}));
            for d in catalog.entries() {
                report.push(&json!({ "d": d.d_value(), "descriptor": d }));
            }
            emit(out, &report);
            EXIT_OK
        }
        Command::AuditCatalog => unreachable!("handled above"),
    }
}

fn audit_catalog(dir: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let texts = match dir {
        Some(d) => Catalog::read_dir_raw(d),
        None => {
            let (c, t) = Catalog::builtin_text();
            Ok((c.to_string(), t.to_string()))
        }
    };
    let parsed = texts.and_then(|(c, t)| Catalog::parse(&c, &t));
    let catalog = match parsed {
        Ok(c) => c,
        Err(e) => return catalog_failure(err, &e),
    };
    let mut report = RunReport::new("audit-catalog", json!({ "data_dir": dir.map(|d| d.display().to_string()) }));
    let findings = catalog.audit();
    for f in &findings {
        let _ = writeln!(err, "audit: {f}");
        report.push(&json!({ "finding": f }));
    }
    let mut failures = findings.len();
    let agreements: Vec<_> = oracle::SHIPPED_MODELS
        .par_iter()
        .map(|name| catalog.lookup(name).map_err(|e| e.to_string()).and_then(|d| oracle::compare(d).map_err(|e| e.to_string())))
        .collect();
    for (name, a) in oracle::SHIPPED_MODELS.iter().zip(agreements) {
        match a {
            Ok(a) => {
                if !a.agree {
                    failures += 1;
                    let _ = writeln!(err, "audit: {name}: oracle disagrees with catalog");
                }
                report.push(&a);
            }
            Err(e) => {
                failures += 1;
                let _ = writeln!(err, "audit: {name}: {e}");
                report.push(&json!({ "name": name, "error": e }));
            }
        }
    }
    report.push(&json!({ "summary": { "records": catalog.entries().len(), "models": oracle::SHIPPED_MODELS.len(), "failures": failures } }));
    emit(out, &report);
    if failures == 0 {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_records_with_notes() {
        let text = "schema=ckform-triples/1\n# comment\ng=su(2,4) h=sp(1,2) l=su(1,4) embedding=table_one_identified row=1 n=2 notes=first row, n = 2\n";
        let r = parse_triples(text).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].line, 3);
        assert_eq!(r[0].notes, "first row, n = 2");
        assert_eq!(r[0].spec.as_ref().unwrap().emb.row, Some(1));
    }

    #[test]
    fn diagnostics_are_line_anchored() {
        let text = "schema=ckform-triples/1\ng=so(2,2) h=so(1,2)\ng=sl(3,R) h=sl(2,R) embedding=bogus\ng=sl(3,R)\n";
        let d = parse_triples(text).unwrap_err();
        assert_eq!(d.iter().map(|d| d.line).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert!(d[0].message.contains("so(2,2)"));
        assert!(parse_triples("g=sl(3,R) h=sl(2,R)\n").is_err());
    }

    #[test]
    fn witness_parses_rationals() {
        let text = "schema=ckform-triples/1\ng=su(3,4) h=su(2,3) embedding=centralizer_witness witness=0,1/2,-1\n";
        let r = parse_triples(text).unwrap();
        let w = r[0].spec.as_ref().unwrap().emb.witness.clone().unwrap();
        assert_eq!(w[1], crate::linalg::ratio(1, 2));
    }
}
