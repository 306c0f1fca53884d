//! Ordered rule chain deciding whether `G/H` (or a triple `(G, H, L)`)
//! admits a standard compact Clifford-Klein form.
//!
//! Rules, first hit wins:
//!
//! | rule | condition | outcome |
//! |------|-----------|---------|
//! | R0 | `h` compact | admits |
//! | R1 | embedding identified with a Table 1 row | admits |
//! | R2 | `g` split, `(g, h)` not in Table 1 | none |
//! | R3 | `h` proper real R-regular | none |
//! | R4 | triple with `d(g) != d(h) + d(l)` | none for this triple |
//!
//! Anything else is `Unknown`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{Catalog, CatalogError, TableInstance};
use crate::forms::{Family, FormError, FormKey, Reductive};
use crate::linalg::{self, Rat};
use crate::restriction::{big_root_model, restrict, RestrictedSystem};

#[derive(Debug, Error)]
pub enum VerdictError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("witness has {got} coordinates but the real rank of {g} is {expected}")]
    WitnessDimension { g: String, expected: usize, got: usize },
    #[error("witness vector must be nonzero")]
    ZeroWitness,
    #[error("centralizer_witness requires a witness vector")]
    MissingWitness,
    #[error("table_one_identified requires a row number (and n for parametric rows)")]
    MissingRow,
    #[error("Table 1 has no row {0}")]
    NoSuchRow(u32),
    #[error("row {row} is not admissible at n={n}")]
    Inadmissible { row: u32, n: u32 },
    #[error("row {row} at n={n} is ({g}, {h}, {l}); the record does not match")]
    RowMismatch { row: u32, n: u32, g: String, h: String, l: String },
    #[error("d(h) = {d_h} exceeds d(g) = {d_g}")]
    SubalgebraTooLarge { d_h: u64, d_g: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EmbeddingKind {
    TableOneIdentified,
    CentralizerWitness,
    SplitAmbientGeneric,
    DeclaredRegularProper,
    Unspecified,
}

impl EmbeddingKind {
    pub const ALL: [EmbeddingKind; 5] = [
        EmbeddingKind::TableOneIdentified,
        EmbeddingKind::CentralizerWitness,
        EmbeddingKind::SplitAmbientGeneric,
        EmbeddingKind::DeclaredRegularProper,
        EmbeddingKind::Unspecified,
    ];

    pub fn id(self) -> &'static str {
        match self {
            EmbeddingKind::TableOneIdentified => "table_one_identified",
            EmbeddingKind::CentralizerWitness => "centralizer_witness",
            EmbeddingKind::SplitAmbientGeneric => "split_ambient_generic",
            EmbeddingKind::DeclaredRegularProper => "declared_regular_proper",
            EmbeddingKind::Unspecified => "unspecified",
        }
    }
}

impl FromStr for EmbeddingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.iter().copied().find(|k| k.id() == s).ok_or_else(|| {
            let ids: Vec<&str> = Self::ALL.iter().map(|k| k.id()).collect();
            format!("unknown embedding kind `{s}` (expected one of {})", ids.join(", "))
        })
    }
}

impl fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingDescriptor {
    pub kind: EmbeddingKind,
    /// Point of `a` in `g`'s a-coordinates, for `centralizer_witness`.
    pub witness: Option<Vec<Rat>>,
    /// Name of the regular subalgebra claimed to contain `h`.
    pub container: Option<String>,
    pub row: Option<u32>,
    pub n: Option<u32>,
    pub notes: String,
}

impl EmbeddingDescriptor {
    pub fn new(kind: EmbeddingKind) -> Self {
        Self { kind, witness: None, container: None, row: None, n: None, notes: String::new() }
    }

    pub fn table_row(row: u32, n: Option<u32>) -> Self {
        Self { row: Some(row), n, ..Self::new(EmbeddingKind::TableOneIdentified) }
    }

    pub fn witness(w: Vec<Rat>, container: Option<&str>) -> Self {
        Self { witness: Some(w), container: container.map(str::to_string), ..Self::new(EmbeddingKind::CentralizerWitness) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleSpec {
    pub g: FormKey,
    pub h: Reductive,
    pub emb: EmbeddingDescriptor,
    pub l: Option<Reductive>,
}

impl TripleSpec {
    pub fn parse(g: &str, h: &str, emb: EmbeddingDescriptor, l: Option<&str>) -> Result<Self, FormError> {
        Ok(Self {
            g: FormKey::parse(g)?,
            h: Reductive::parse(h)?,
            emb,
            l: l.map(Reductive::parse).transpose()?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    AdmitsStandard,
    NoStandard,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    /// The verdict concerns `G/H` for every choice of `L`.
    Space,
    /// The verdict concerns only the given `L`.
    Triple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: &'static str,
    pub citations: Vec<String>,
    pub fired: bool,
    pub detail: String,
    pub values: BTreeMap<&'static str, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub scope: Scope,
    pub trace: Vec<TraceStep>,
}

impl Verdict {
    pub fn deciding_rule(&self) -> Option<&'static str> {
        self.trace.iter().rev().find(|s| s.fired).map(|s| s.rule)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionCheck {
    pub holds: bool,
    pub d_g: u64,
    pub d_h: u64,
    pub d_l: u64,
}

/// Outcome of the R-regularity check; `passed == false` carries the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RRegularCheck {
    pub passed: bool,
    pub reason: Option<String>,
    /// `rank g - rank span(Σ_A)`; absent for declared embeddings.
    pub rank_deficit: Option<u64>,
    /// `d` of the centralizer of the witness; absent for declared embeddings.
    pub centralizer_d: Option<u64>,
    pub d_h: u64,
    pub residual_trust: String,
}

/// Membership in a corollary list, as printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Listed {
    pub explicit: &'static [u32],
    pub from: u32,
}

impl Listed {
    pub fn contains(&self, n: u32) -> bool {
        self.explicit.contains(&n) || n >= self.from
    }
}

/// The split-family lists of Corollary 5.
pub const COR5_SL: Listed = Listed { explicit: &[], from: 2 };
pub const COR5_SO_NN: Listed = Listed { explicit: &[3, 5, 7], from: 10 };
pub const COR5_SO_NN1: Listed = Listed { explicit: &[2], from: 4 };
pub const COR5_SP: Listed = Listed { explicit: &[], from: 2 };

/// Parameters where the regenerated so(n,n) list is known to differ.
pub const DOCUMENTED_SO_NN_DIVERGENCE: &[u32] = &[6, 9];

fn cor5_lists(g: &FormKey) -> bool {
    let p = g.params.first().copied().unwrap_or(0);
    let q = g.params.get(1).copied().unwrap_or(0);
    match g.family {
        Family::SlR => COR5_SL.contains(p),
        Family::SpR => COR5_SP.contains(p),
        Family::SoPq if p == q => COR5_SO_NN.contains(p),
        Family::SoPq if q == p + 1 => COR5_SO_NN1.contains(p),
        _ => false,
    }
}

/// Corollaries 6-8: `(corollary, domain)` for `g = fam(n, m)` with regular
/// container `fam(n-1, m-1)`.
fn chain_corollary(g: &FormKey) -> Option<(u32, bool)> {
    let (n, m) = (*g.params.first()?, *g.params.get(1)?);
    match g.family {
        Family::SuPq => Some((6, m >= n && n > 2)),
        Family::SoPq => Some((7, m + 1 > n && n > 8)),
        Family::SpPq => Some((8, m >= n && n > 1)),
        _ => None,
    }
}

fn chain_container(g: &FormKey) -> Option<String> {
    let (n, m) = (*g.params.first()?, *g.params.get(1)?);
    let fam = match g.family {
        Family::SuPq => "su",
        Family::SoPq => "so",
        Family::SpPq => "sp",
        _ => return None,
    };
    Some(format!("{fam}({},{})", n.checked_sub(1)?, m.checked_sub(1)?))
}

fn same(a: &Reductive, text: &str) -> bool {
    Reductive::parse(text).is_ok_and(|r| &r == a)
}

/// Largest `n` tried when matching names against parametric rows.
const TABLE_SEARCH_N: u32 = 64;

pub struct Engine<'a> {
    catalog: &'a Catalog,
}

impl<'a> Engine<'a> {
    pub fn new(catalog: &'a Catalog) -> Self {
        Self { catalog }
    }

    pub fn catalog(&self) -> &Catalog {
        self.catalog
    }

    fn d_simple(&self, g: &FormKey) -> Result<u64, VerdictError> {
        Ok(self.catalog.lookup(&g.to_string())?.d_value())
    }

    pub fn dimension_condition(&self, g: &FormKey, h: &Reductive, l: &Reductive) -> Result<DimensionCheck, VerdictError> {
        let d_g = self.d_simple(g)?;
        let d_h = self.catalog.reductive_d(h)?;
        let d_l = self.catalog.reductive_d(l)?;
        Ok(DimensionCheck { holds: d_g == d_h + d_l, d_g, d_h, d_l })
    }

    /// Table 1 instances whose `g` and `h` (and `l` when given) match.
    pub fn table_matches(&self, g: &FormKey, h: &Reductive, l: Option<&Reductive>) -> Vec<TableInstance> {
        let g = Reductive::simple(g.clone());
        let mut out = Vec::new();
        for entry in self.catalog.table_one() {
            let ns: Vec<u32> = if entry.is_parametric() { (entry.min_n.unwrap_or(1)..=TABLE_SEARCH_N).collect() } else { vec![1] };
            for n in ns {
                let inst = entry.instance(n);
                if same(&g, &inst.g) && same(h, &inst.h) && l.is_none_or(|l| same(l, &inst.l)) {
                    out.push(inst);
                }
            }
        }
        out
    }

    /// Restricted roots of `g` in the coordinates witnesses are written in.
    pub fn witness_frame(&self, g: &FormKey) -> Result<RestrictedSystem, VerdictError> {
        if let Some(sys) = big_root_model(g).and_then(|m| restrict(&m).ok()) {
            return Ok(sys);
        }
        let desc = self.catalog.lookup(&g.to_string())?;
        desc.restricted_system().ok_or(VerdictError::WitnessDimension { g: g.to_string(), expected: 0, got: 0 })
    }

    pub fn r_regular_check(&self, g: &FormKey, h: &Reductive, emb: &EmbeddingDescriptor) -> Result<RRegularCheck, VerdictError> {
        let gd = self.catalog.lookup(&g.to_string())?;
        let d_h = self.catalog.reductive_d(h)?;
        let fail = |reason: String, deficit, cd| RRegularCheck {
            passed: false,
            reason: Some(reason),
            rank_deficit: deficit,
            centralizer_d: cd,
            d_h,
            residual_trust: String::new(),
        };
        if h.dim() >= gd.dim_g {
            return Ok(fail(format!("dim h = {} is not smaller than dim g = {}", h.dim(), gd.dim_g), None, None));
        }
        if h.real_rank() > gd.real_rank {
            return Ok(fail(format!("real rank of h ({}) exceeds that of g ({})", h.real_rank(), gd.real_rank), None, None));
        }
        match emb.kind {
            EmbeddingKind::CentralizerWitness => {
                let w = emb.witness.as_ref().ok_or(VerdictError::MissingWitness)?;
                let r = gd.real_rank as usize;
                if w.len() != r {
                    return Err(VerdictError::WitnessDimension { g: g.to_string(), expected: r, got: w.len() });
                }
                if w.iter().all(Zero::is_zero) {
                    return Err(VerdictError::ZeroWitness);
                }
                let sys = self.witness_frame(g)?;
                let vanishing = sys.vanishing_at(w);
                let span: Vec<Vec<Rat>> = vanishing.iter().map(|(a, _)| a.0.clone()).collect();
                let deficit = (r - linalg::rank(&span)) as u64;
                let positive: u64 = vanishing.iter().filter(|(a, _)| linalg::lex_sign(&a.0) > 0).map(|(_, m)| *m as u64).sum();
                let centralizer_d = r as u64 + positive;
                if deficit == 0 {
                    return Ok(fail("witness centralizer is not proper".into(), Some(deficit), Some(centralizer_d)));
                }
                if d_h > centralizer_d {
                    return Ok(fail(
                        format!("d(h) = {d_h} exceeds d of the witness centralizer = {centralizer_d}"),
                        Some(deficit),
                        Some(centralizer_d),
                    ));
                }
                Ok(RRegularCheck {
                    passed: true,
                    reason: None,
                    rank_deficit: Some(deficit),
                    centralizer_d: Some(centralizer_d),
                    d_h,
                    residual_trust: "containment of h in the witness centralizer is asserted, not verified".into(),
                })
            }
            EmbeddingKind::DeclaredRegularProper => Ok(RRegularCheck {
                passed: true,
                reason: None,
                rank_deficit: None,
                centralizer_d: None,
                d_h,
                residual_trust: "proper real R-regularity is declared by the input, not verified".into(),
            }),
            k => Ok(fail(format!("embedding kind {k} carries no R-regularity claim"), None, None)),
        }
    }

    fn validate(&self, spec: &TripleSpec) -> Result<Option<TableInstance>, VerdictError> {
        let d_g = self.d_simple(&spec.g)?;
        let d_h = self.catalog.reductive_d(&spec.h)?;
        if let Some(l) = &spec.l {
            self.catalog.reductive_d(l)?;
        }
        if d_h > d_g {
            return Err(VerdictError::SubalgebraTooLarge { d_h, d_g });
        }
        match spec.emb.kind {
            EmbeddingKind::CentralizerWitness => {
                let w = spec.emb.witness.as_ref().ok_or(VerdictError::MissingWitness)?;
                let r = self.catalog.lookup(&spec.g.to_string())?.real_rank as usize;
                if w.len() != r {
                    return Err(VerdictError::WitnessDimension { g: spec.g.to_string(), expected: r, got: w.len() });
                }
                if w.iter().all(Zero::is_zero) {
                    return Err(VerdictError::ZeroWitness);
                }
                Ok(None)
            }
            EmbeddingKind::TableOneIdentified => {
                let row = spec.emb.row.ok_or(VerdictError::MissingRow)?;
                let entry =
                    self.catalog.table_one().iter().find(|e| e.row == row).ok_or(VerdictError::NoSuchRow(row))?;
                let n = match (entry.min_n, spec.emb.n) {
                    (Some(_), None) => return Err(VerdictError::MissingRow),
                    (Some(min), Some(n)) if n < min => return Err(VerdictError::Inadmissible { row, n }),
                    (_, n) => n.unwrap_or(1),
                };
                let inst = entry.instance(n);
                if FormKey::parse(&inst.g).is_err() {
                    return Err(VerdictError::Inadmissible { row, n });
                }
                let g = Reductive::simple(spec.g.clone());
                let ok = same(&g, &inst.g) && same(&spec.h, &inst.h) && spec.l.as_ref().is_none_or(|l| same(l, &inst.l));
                if !ok {
                    return Err(VerdictError::RowMismatch { row, n, g: inst.g, h: inst.h, l: inst.l });
                }
                Ok(Some(inst))
            }
            _ => Ok(None),
        }
    }

    pub fn classify(&self, spec: &TripleSpec) -> Result<Verdict, VerdictError> {
        let identified = self.validate(spec)?;
        let mut trace = Vec::new();
        let done = |outcome, scope, trace| Ok(Verdict { outcome, scope, trace });
        let d_g = self.d_simple(&spec.g)?;
        let d_h = self.catalog.reductive_d(&spec.h)?;

        // R0
        let compact = spec.h.is_compact();
        trace.push(TraceStep {
            rule: "R0",
            citations: vec!["Theorem 3".into()],
            fired: compact,
            detail: if compact { "h is compact: d(h) = 0 and L = G gives d(g) = d(h) + d(g)".into() } else { "h is noncompact".into() },
            values: BTreeMap::from([("d_g", d_g), ("d_h", d_h)]),
        });
        if compact {
            return done(Outcome::AdmitsStandard, Scope::Space, trace);
        }

        // R1
        // Rows that instantiate to the same triple (e.g. rows 5 and 8).
        let duplicates = |inst: &TableInstance| -> Vec<String> {
            let mut rows: Vec<u32> = self
                .table_matches(&spec.g, &spec.h, None)
                .into_iter()
                .filter(|m| same_name(&m.l, &inst.l))
                .map(|m| m.row)
                .collect();
            rows.dedup();
            rows.into_iter().map(|r| format!("Table 1 row {r}")).collect()
        };
        if let Some(inst) = &identified {
            let mut citations = duplicates(inst);
            citations.push("Theorem 1".into());
            let d_l = Reductive::parse(&inst.l).ok().and_then(|l| self.catalog.reductive_d(&l).ok()).unwrap_or(0);
            trace.push(TraceStep {
                rule: "R1",
                citations,
                fired: true,
                detail: format!("embedding identified with Table 1 row {} at n={}: ({}, {}, {})", inst.row, inst.n, inst.g, inst.h, inst.l),
                values: BTreeMap::from([("d_g", d_g), ("d_h", d_h), ("d_l", d_l), ("row", inst.row as u64), ("n", inst.n as u64)]),
            });
            return done(Outcome::AdmitsStandard, Scope::Space, trace);
        }
        let in_table = self.table_matches(&spec.g, &spec.h, None);
        trace.push(TraceStep {
            rule: "R1",
            citations: vec!["Table 1".into()],
            fired: false,
            detail: if in_table.is_empty() {
                "(g, h) matches no Table 1 row".into()
            } else {
                format!(
                    "(g, h) names match Table 1 row(s) {} but the embedding is not identified",
                    in_table.iter().map(|i| i.row.to_string()).collect::<Vec<_>>().join(",")
                )
            },
            values: BTreeMap::new(),
        });

        // R2
        let gd = self.catalog.lookup(&spec.g.to_string())?;
        if gd.is_split {
            let fired = in_table.is_empty();
            let mut citations = vec!["Theorem 5".to_string()];
            if cor5_lists(&spec.g) {
                citations.push("Corollary 5".into());
            }
            trace.push(TraceStep {
                rule: "R2",
                citations,
                fired,
                detail: if fired {
                    format!("{} is split and (g, h) is not in Table 1", spec.g)
                } else {
                    format!("{} is split but (g, h) appears in Table 1; rule skipped", spec.g)
                },
                values: BTreeMap::from([("real_rank", gd.real_rank as u64)]),
            });
            if fired {
                return done(Outcome::NoStandard, Scope::Space, trace);
            }
        }

        // R3
        if matches!(spec.emb.kind, EmbeddingKind::CentralizerWitness | EmbeddingKind::DeclaredRegularProper) {
            let check = self.r_regular_check(&spec.g, &spec.h, &spec.emb)?;
            let mut citations = vec!["Theorem 4".to_string()];
            if let (Some((cor, true)), Some(container), Some(expected)) =
                (chain_corollary(&spec.g), spec.emb.container.as_deref(), chain_container(&spec.g))
            {
                if check.passed && same_name(container, &expected) {
                    citations.push(format!("Corollary {cor}"));
                }
            }
            let mut values = BTreeMap::from([("d_h", check.d_h)]);
            if let Some(v) = check.rank_deficit {
                values.insert("rank_deficit", v);
            }
            if let Some(v) = check.centralizer_d {
                values.insert("centralizer_d", v);
            }
            trace.push(TraceStep {
                rule: "R3",
                citations,
                fired: check.passed,
                detail: match &check.reason {
                    None => format!("h is a proper real R-regular subalgebra ({})", check.residual_trust),
                    Some(r) => format!("R-regularity not established: {r}"),
                },
                values,
            });
            if check.passed {
                return done(Outcome::NoStandard, Scope::Space, trace);
            }
        }

        // R4
        if let Some(l) = &spec.l {
            let dc = self.dimension_condition(&spec.g, &spec.h, l)?;
            trace.push(TraceStep {
                rule: "R4",
                citations: vec!["Theorem 3".into()],
                fired: !dc.holds,
                detail: format!(
                    "d(g) = {} {} d(h) + d(l) = {} + {}",
                    dc.d_g,
                    if dc.holds { "=" } else { "!=" },
                    dc.d_h,
                    dc.d_l
                ),
                values: BTreeMap::from([("d_g", dc.d_g), ("d_h", dc.d_h), ("d_l", dc.d_l)]),
            });
            if !dc.holds {
                return done(Outcome::NoStandard, Scope::Triple, trace);
            }
        }
        done(Outcome::Unknown, if spec.l.is_some() { Scope::Triple } else { Scope::Space }, trace)
    }
}

fn same_name(a: &str, b: &str) -> bool {
    match (Reductive::parse(a), Reductive::parse(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepFamily {
    SlR,
    SpR,
    SoNN,
    SoNN1,
    SuChain,
    SoChain,
    SpChain,
}

impl SweepFamily {
    pub const ALL: [SweepFamily; 7] = [
        SweepFamily::SlR,
        SweepFamily::SpR,
        SweepFamily::SoNN,
        SweepFamily::SoNN1,
        SweepFamily::SuChain,
        SweepFamily::SoChain,
        SweepFamily::SpChain,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SweepFamily::SlR => "sl_R",
            SweepFamily::SpR => "sp_R",
            SweepFamily::SoNN => "so_nn",
            SweepFamily::SoNN1 => "so_nn1",
            SweepFamily::SuChain => "su_chain",
            SweepFamily::SoChain => "so_chain",
            SweepFamily::SpChain => "sp_chain",
        }
    }

    pub fn corollary(self) -> u32 {
        match self {
            SweepFamily::SuChain => 6,
            SweepFamily::SoChain => 7,
            SweepFamily::SpChain => 8,
            _ => 5,
        }
    }

    fn split_member(self, n: u32) -> Option<(String, Listed)> {
        match self {
            SweepFamily::SlR if n >= 2 => Some((format!("sl({n},R)"), COR5_SL)),
            SweepFamily::SpR if n >= 2 => Some((format!("sp({n},R)"), COR5_SP)),
            SweepFamily::SoNN if n >= 3 => Some((format!("so({n},{n})"), COR5_SO_NN)),
            SweepFamily::SoNN1 if n >= 2 => Some((format!("so({n},{})", n + 1), COR5_SO_NN1)),
            _ => None,
        }
    }

    fn documented_divergence(self) -> &'static [u32] {
        match self {
            SweepFamily::SoNN => DOCUMENTED_SO_NN_DIVERGENCE,
            _ => &[],
        }
    }
}

impl FromStr for SweepFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL.iter().copied().find(|f| f.id() == s).ok_or_else(|| format!("unknown sweep family `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub g: String,
    /// Engine verdict: every probe subalgebra yields `NoStandard`.
    pub engine_no_standard: bool,
    pub corollary_lists: bool,
    /// Table 1 rows that admit a standard form for this `g`.
    pub table_rows: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub family: SweepFamily,
    pub corollary: u32,
    pub max_param: u32,
    pub entries: Vec<SweepEntry>,
    pub matches: Vec<String>,
    pub divergences: Vec<String>,
    pub documented_divergences: Vec<String>,
    /// Chains only: engine `NoStandard` outside the corollary's stated domain.
    pub beyond_domain: Vec<String>,
    pub skipped: Vec<String>,
    pub pass: bool,
}

impl Engine<'_> {
    fn split_probe(&self, g: &str) -> Result<SweepEntry, VerdictError> {
        let key = FormKey::parse(g)?;
        let generic = TripleSpec::parse(g, "sl(2,R)", EmbeddingDescriptor::new(EmbeddingKind::SplitAmbientGeneric), None)?;
        let mut all_none = self.classify(&generic)?.outcome == Outcome::NoStandard;
        let mut rows = Vec::new();
        let gr = Reductive::simple(key.clone());
        for entry in self.catalog.table_one() {
            let ns: Vec<u32> = if entry.is_parametric() { (1..=TABLE_SEARCH_N).collect() } else { vec![1] };
            for n in ns {
                let inst = entry.instance(n);
                if !same(&gr, &inst.g) {
                    continue;
                }
                let spec = TripleSpec::parse(g, &inst.h, EmbeddingDescriptor::table_row(entry.row, Some(n)), Some(&inst.l))?;
                if self.classify(&spec)?.outcome != Outcome::NoStandard {
                    all_none = false;
                    rows.push(entry.row);
                }
            }
        }
        Ok(SweepEntry { g: key.to_string(), engine_no_standard: all_none, corollary_lists: cor5_lists(&key), table_rows: rows })
    }

    /// Regenerates a corollary list from the rules and diffs it against the
    /// printed list.
    pub fn corollary_sweep(&self, family: SweepFamily, max_param: u32) -> Result<SweepReport, VerdictError> {
        let mut entries = Vec::new();
        let mut skipped = Vec::new();
        let mut beyond = Vec::new();
        let chain = family.corollary() != 5;
        if !chain {
            for n in 1..=max_param {
                let Some((g, listed)) = family.split_member(n) else { continue };
                if self.catalog.lookup(&g).is_err() {
                    skipped.push(g);
                    continue;
                }
                let mut e = self.split_probe(&g)?;
                e.corollary_lists = listed.contains(n);
                entries.push(e);
            }
        } else {
            let fam = match family {
                SweepFamily::SuChain => "su",
                SweepFamily::SoChain => "so",
                _ => "sp",
            };
            for n in 2..=max_param {
                for m in n..=max_param {
                    let g = format!("{fam}({n},{m})");
                    let container = format!("{fam}({},{})", n - 1, m - 1);
                    let key = match FormKey::parse(&g) {
                        Ok(k) if k.params == [n, m] => k,
                        _ => {
                            skipped.push(g);
                            continue;
                        }
                    };
                    if self.catalog.get(&key).is_none() || Reductive::parse(&container).is_err() {
                        skipped.push(g);
                        continue;
                    }
                    let mut w = vec![Rat::zero(); n as usize];
                    w[n as usize - 1] = linalg::rat(1);
                    let spec = TripleSpec::parse(&g, &container, EmbeddingDescriptor::witness(w, Some(&container)), None)?;
                    let v = self.classify(&spec)?;
                    let (_, in_domain) = chain_corollary(&key).expect("chain family");
                    let none = v.outcome == Outcome::NoStandard;
                    if none && !in_domain {
                        beyond.push(key.to_string());
                    }
                    entries.push(SweepEntry {
                        g: key.to_string(),
                        engine_no_standard: none,
                        corollary_lists: in_domain,
                        table_rows: vec![],
                    });
                }
            }
        }
        let mut matches = Vec::new();
        let mut divergences = Vec::new();
        for e in &entries {
            let agree = if chain { !e.corollary_lists || e.engine_no_standard } else { e.corollary_lists == e.engine_no_standard };
            if agree {
                matches.push(e.g.clone());
            } else {
                divergences.push(e.g.clone());
            }
        }
        let documented: Vec<String> =
            family.documented_divergence().iter().filter(|&&n| n <= max_param).filter_map(|&n| family.split_member(n)).map(|(g, _)| g).collect();
        let pass = divergences == documented;
        Ok(SweepReport {
            family,
            corollary: family.corollary(),
            max_param,
            entries,
            matches,
            divergences,
            documented_divergences: documented,
            beyond_domain: beyond,
            skipped,
            pass,
        })
    }
}
