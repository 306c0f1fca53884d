//! Registry of real simple Lie algebras loaded from a shipped text file,
//! together with the machine-readable list of standard triples.
//!
//! Every record is audited on load against the closed-form dimension
//! formulas in [`crate::forms`] and against the Iwasawa identity
//! `dim g - dim k = dim a + Σ_{Σ⁺} mult`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::forms::{Family, FormError, FormKey, Reductive};
use crate::restriction::{positive_class_counts, RestrictedSystem};
use crate::roots::TypeLabel;

pub const CATALOG_SCHEMA: &str = "schema=ckform-catalog/1";
pub const TABLE_SCHEMA: &str = "schema=ckform-table1/1";
pub const CATALOG_FILE: &str = "catalog.txt";
pub const TABLE_FILE: &str = "table1.txt";

const BUILTIN_CATALOG: &str = include_str!("../data/catalog.txt");
const BUILTIN_TABLE: &str = include_str!("../data/table1.txt");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{file}:{line}: {msg}")]
    Parse { file: &'static str, line: usize, msg: String },
    #[error("{file}: missing or unsupported schema header (expected `{expected}`)")]
    Schema { file: &'static str, expected: &'static str },
    #[error("catalog audit failed:\n  {}", .0.join("\n  "))]
    Audit(Vec<String>),
    #[error("{0} is not in the catalog (outside the shipped parameter range)")]
    Unknown(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Restricted root data as shipped: type plus one multiplicity per
/// normalized squared-length class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaData {
    #[serde(serialize_with = "display")]
    pub label: TypeLabel,
    pub mult: BTreeMap<u32, u32>,
}

fn display<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, Serialize)]
pub struct RealFormDescriptor {
    pub name: String,
    #[serde(serialize_with = "family_id")]
    pub family: Family,
    pub params: Vec<u32>,
    pub dim_g: u64,
    pub dim_k: u64,
    pub real_rank: u32,
    pub sigma: Option<SigmaData>,
    pub is_split: bool,
    pub is_compact: bool,
    #[serde(skip)]
    pub key: FormKey,
}

fn family_id<S: serde::Serializer>(f: &Family, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(f.id())
}

impl RealFormDescriptor {
    pub fn d_value(&self) -> u64 {
        self.dim_g - self.dim_k
    }

    /// `dim m_0 = dim k - dim n` since `k ≅ m_0 + n` as vector spaces.
    pub fn m0_dim(&self) -> u64 {
        self.dim_k - (self.d_value() - self.real_rank as u64)
    }

    pub fn restricted_system(&self) -> Option<RestrictedSystem> {
        let s = self.sigma.as_ref()?;
        let mut sys = RestrictedSystem::from_label(s.label, &s.mult).ok()?;
        sys.m0_dim = Some(self.m0_dim());
        Some(sys)
    }

    fn audit(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut fail = |msg: String| out.push(format!("{}: {msg}", self.name));
        if self.key.to_string() != self.name {
            fail(format!("name is not canonical (expected {})", self.key));
        }
        if self.key.family != self.family || self.key.params != self.params {
            fail("family/params disagree with the name".into());
        }
        if self.dim_k > self.dim_g {
            fail("dim_k exceeds dim_g".into());
            return out;
        }
        if self.dim_g != self.key.dim_g() || self.dim_k != self.key.dim_k() {
            fail(format!(
                "dimensions ({}, {}) disagree with formulas ({}, {})",
                self.dim_g,
                self.dim_k,
                self.key.dim_g(),
                self.key.dim_k()
            ));
        }
        if self.real_rank != self.key.real_rank() {
            fail(format!("real rank {} disagrees with formula {}", self.real_rank, self.key.real_rank()));
        }
        let d = self.d_value();
        if self.is_compact != (d == 0) {
            fail(format!("compact flag {} but d = {d}", self.is_compact));
        }
        match &self.sigma {
            None if !self.is_compact => fail("noncompact entry without restricted root data".into()),
            None => {}
            Some(s) => match positive_class_counts(s.label) {
                Err(e) => fail(format!("sigma: {e}")),
                Ok(counts) => {
                    if s.label.rank != self.real_rank as usize {
                        fail(format!("sigma rank {} but real_rank {}", s.label.rank, self.real_rank));
                    }
                    if !counts.keys().eq(s.mult.keys()) {
                        fail("multiplicity classes do not match the root system".into());
                    }
                    let sum: u64 = counts.iter().map(|(c, k)| k * s.mult.get(c).copied().unwrap_or(0) as u64).sum();
                    let iwasawa = s.label.rank as u64 + sum;
                    if iwasawa != d {
                        fail(format!("Iwasawa identity: dim_g - dim_k = {d} but rank + Σ mult = {iwasawa}"));
                    }
                    let split = s.mult.values().all(|&m| m == 1) && self.m0_dim() == 0;
                    if self.is_split != split {
                        fail(format!("split flag {} inconsistent with multiplicities and m_0", self.is_split));
                    }
                }
            },
        }
        out
    }
}

/// One argument of a row template: a constant or `k·n`.
fn instantiate(template: &str, n: u32) -> String {
    let mut out = String::new();
    let mut rest = template;
    while let Some(open) = rest.find('(') {
        let close = rest[open..].find(')').map(|c| open + c).unwrap_or(rest.len() - 1);
        out.push_str(&rest[..=open]);
        let args: Vec<String> = rest[open + 1..close]
            .split(',')
            .map(|a| match a.strip_suffix('n') {
                Some("") => n.to_string(),
                Some(k) if k.chars().all(|c| c.is_ascii_digit()) => (k.parse::<u32>().unwrap() * n).to_string(),
                _ => a.to_string(),
            })
            .collect();
        out.push_str(&args.join(","));
        rest = &rest[close..];
    }
    out.push_str(rest);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableOneEntry {
    pub row: u32,
    pub g: String,
    pub h: String,
    pub l: String,
    /// Smallest admissible `n`; `None` for rows without a parameter.
    pub min_n: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableInstance {
    pub row: u32,
    pub n: u32,
    pub g: String,
    pub h: String,
    pub l: String,
}

impl TableOneEntry {
    pub fn is_parametric(&self) -> bool {
        self.min_n.is_some()
    }

    pub fn instance(&self, n: u32) -> TableInstance {
        TableInstance {
            row: self.row,
            n,
            g: instantiate(&self.g, n),
            h: instantiate(&self.h, n),
            l: instantiate(&self.l, n),
        }
    }
}

/// `d` of each member of a row instance by the closed-form path; raw parsing
/// so that degenerate instances such as `so(2,2)` still evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub instance: TableInstance,
    pub d_g: u64,
    pub d_h: u64,
    pub d_l: u64,
    pub holds: bool,
    pub rank_additive: bool,
    pub nilradical_additive: bool,
    /// False when `g` at this `n` is not simple (e.g. `so(2,2)`).
    pub admissible: bool,
}

impl TableInstance {
    pub fn check(&self) -> Result<IdentityCheck, FormError> {
        let g = Reductive::parse_raw(&self.g)?;
        let h = Reductive::parse_raw(&self.h)?;
        let l = Reductive::parse_raw(&self.l)?;
        let (d_g, d_h, d_l) = (g.d_value(), h.d_value(), l.d_value());
        let (r_g, r_h, r_l) = (g.real_rank() as u64, h.real_rank() as u64, l.real_rank() as u64);
        Ok(IdentityCheck {
            instance: self.clone(),
            d_g,
            d_h,
            d_l,
            holds: d_g == d_h + d_l,
            rank_additive: r_g == r_h + r_l,
            nilradical_additive: d_g - r_g == (d_h - r_h) + (d_l - r_l),
            admissible: FormKey::parse(&self.g).is_ok(),
        })
    }
}

#[derive(Debug)]
pub struct Catalog {
    entries: Vec<RealFormDescriptor>,
    index: BTreeMap<FormKey, usize>,
    table: Vec<TableOneEntry>,
}

fn fields(line: &str) -> BTreeMap<&str, &str> {
    line.split_whitespace().filter_map(|kv| kv.split_once('=')).collect()
}

fn check_header(text: &str, file: &'static str, expected: &'static str) -> Result<(), CatalogError> {
    match text.lines().find(|l| !l.trim().is_empty() && !l.starts_with('#')) {
        Some(h) if h.trim() == expected => Ok(()),
        _ => Err(CatalogError::Schema { file, expected }),
    }
}

fn body(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with("schema="))
}

fn parse_record(line: &str, lineno: usize) -> Result<RealFormDescriptor, CatalogError> {
    let err = |msg: String| CatalogError::Parse { file: CATALOG_FILE, line: lineno, msg };
    let f = fields(line);
    let get = |k: &str| f.get(k).copied().ok_or_else(|| err(format!("missing field `{k}`")));
    let num = |k: &str| -> Result<u64, CatalogError> {
        get(k)?.parse().map_err(|_| err(format!("field `{k}` is not a non-negative integer")))
    };
    let flag = |k: &str| -> Result<bool, CatalogError> {
        match get(k)? {
            "true" => Ok(true),
            "false" => Ok(false),
            v => Err(err(format!("field `{k}` must be true or false, got `{v}`"))),
        }
    };
    let name = get("name")?.to_string();
    let family = Family::from_id(get("family")?).ok_or_else(|| err(format!("unknown family `{}`", f["family"])))?;
    let params = match get("params")? {
        "-" => vec![],
        p => p.split(',').map(|x| x.parse().map_err(|_| err(format!("bad params `{p}`")))).collect::<Result<_, _>>()?,
    };
    let sigma = match get("sigma")? {
        "-" => None,
        s => {
            let label: TypeLabel = s.parse().map_err(|e| err(format!("sigma: {e}")))?;
            let mut mult = BTreeMap::new();
            for pair in get("mult")?.split(',') {
                let (k, v) = pair.split_once(':').ok_or_else(|| err(format!("bad mult entry `{pair}`")))?;
                let k = k.parse().map_err(|_| err(format!("bad mult entry `{pair}`")))?;
                let v = v.parse().map_err(|_| err(format!("bad mult entry `{pair}`")))?;
                mult.insert(k, v);
            }
            Some(SigmaData { label, mult })
        }
    };
    let key = FormKey::parse(&name).map_err(|e| err(e.to_string()))?;
    Ok(RealFormDescriptor {
        name,
        family,
        params,
        dim_g: num("dim_g")?,
        dim_k: num("dim_k")?,
        real_rank: num("real_rank")? as u32,
        sigma,
        is_split: flag("split")?,
        is_compact: flag("compact")?,
        key,
    })
}

fn parse_table(text: &str) -> Result<Vec<TableOneEntry>, CatalogError> {
    check_header(text, TABLE_FILE, TABLE_SCHEMA)?;
    body(text)
        .map(|(lineno, line)| {
            let err = |msg: String| CatalogError::Parse { file: TABLE_FILE, line: lineno, msg };
            let f = fields(line);
            let get = |k: &str| f.get(k).map(|s| s.to_string()).ok_or_else(|| err(format!("missing field `{k}`")));
            let row = get("row")?.parse().map_err(|_| err("bad row number".into()))?;
            let min_n = match get("range")?.as_str() {
                "-" => None,
                r => Some(
                    r.strip_prefix("n>=")
                        .and_then(|v| v.parse().ok())
                        .ok_or_else(|| err(format!("bad range `{r}`")))?,
                ),
            };
            Ok(TableOneEntry { row, g: get("g")?, h: get("h")?, l: get("l")?, min_n })
        })
        .collect()
}

impl Catalog {
    /// Parses both files without auditing.
    pub fn parse(catalog: &str, table: &str) -> Result<Self, CatalogError> {
        check_header(catalog, CATALOG_FILE, CATALOG_SCHEMA)?;
        let mut entries = Vec::new();
        let mut index = BTreeMap::new();
        for (lineno, line) in body(catalog) {
            let d = parse_record(line, lineno)?;
            if index.insert(d.key.clone(), entries.len()).is_some() {
                return Err(CatalogError::Parse { file: CATALOG_FILE, line: lineno, msg: format!("duplicate entry {}", d.name) });
            }
            entries.push(d);
        }
        Ok(Self { entries, index, table: parse_table(table)? })
    }

    /// Parses and audits; any audit finding is an error.
    pub fn load(catalog: &str, table: &str) -> Result<Self, CatalogError> {
        let c = Self::parse(catalog, table)?;
        let findings = c.audit();
        if findings.is_empty() {
            Ok(c)
        } else {
            Err(CatalogError::Audit(findings))
        }
    }

    pub fn read_dir_raw(dir: &Path) -> Result<(String, String), CatalogError> {
        let read = |f: &str| {
            let path = dir.join(f);
            std::fs::read_to_string(&path).map_err(|source| CatalogError::Io { path: path.display().to_string(), source })
        };
        Ok((read(CATALOG_FILE)?, read(TABLE_FILE)?))
    }

    pub fn load_dir(dir: &Path) -> Result<Self, CatalogError> {
        let (c, t) = Self::read_dir_raw(dir)?;
        Self::load(&c, &t)
    }

    pub fn builtin_text() -> (&'static str, &'static str) {
        (BUILTIN_CATALOG, BUILTIN_TABLE)
    }

    /// The shipped catalog, audited once per process.
    pub fn builtin() -> &'static Catalog {
        static CELL: OnceLock<Catalog> = OnceLock::new();
        CELL.get_or_init(|| Self::load(BUILTIN_CATALOG, BUILTIN_TABLE).expect("shipped catalog passes its audit"))
    }

    /// All findings: per-record checks plus the Table 1 identity for n = 1, 2, 3.
    pub fn audit(&self) -> Vec<String> {
        let labels: BTreeSet<TypeLabel> = self.entries.iter().filter_map(|d| d.sigma.as_ref().map(|s| s.label)).collect();
        labels.par_iter().for_each(|l| {
            let _ = positive_class_counts(*l);
        });
        let mut out: Vec<String> = self.entries.iter().flat_map(RealFormDescriptor::audit).collect();
        if self.table.len() != 14 {
            out.push(format!("{TABLE_FILE}: expected 14 rows, found {}", self.table.len()));
        }
        for check in self.table_checks(3) {
            match check {
                Ok(c) if !c.holds => out.push(format!(
                    "{TABLE_FILE}: row {} n={}: d(g)={} but d(h)+d(l)={}",
                    c.instance.row,
                    c.instance.n,
                    c.d_g,
                    c.d_h + c.d_l
                )),
                Ok(_) => {}
                Err(e) => out.push(format!("{TABLE_FILE}: {e}")),
            }
        }
        out
    }

    pub fn entries(&self) -> &[RealFormDescriptor] {
        &self.entries
    }

    pub fn get(&self, key: &FormKey) -> Option<&RealFormDescriptor> {
        self.index.get(key).map(|&i| &self.entries[i])
    }

    pub fn lookup(&self, name: &str) -> Result<&RealFormDescriptor, CatalogError> {
        let key = FormKey::parse(name)?;
        self.get(&key).ok_or_else(|| CatalogError::Unknown(key.to_string()))
    }

    /// `d` of a reductive algebra; every simple factor must be catalogued.
    pub fn reductive_d(&self, r: &Reductive) -> Result<u64, CatalogError> {
        r.simple_factors()
            .map(|k| self.get(k).map(RealFormDescriptor::d_value).ok_or_else(|| CatalogError::Unknown(k.to_string())))
            .sum()
    }

    pub fn table_one(&self) -> &[TableOneEntry] {
        &self.table
    }

    /// Every row instantiated for `n = 1..=max_n` (constant rows repeat).
    pub fn table_instances(&self, max_n: u32) -> Vec<TableInstance> {
        self.table.iter().flat_map(|e| (1..=max_n).map(move |n| e.instance(n))).collect()
    }

    pub fn table_checks(&self, max_n: u32) -> Vec<Result<IdentityCheck, FormError>> {
        self.table_instances(max_n).iter().map(TableInstance::check).collect()
    }

    /// Split entries whose parameters are at most `max_param`; exceptional
    /// split forms are always included.
    pub fn split_forms(&self, max_param: u32) -> Vec<&RealFormDescriptor> {
        self.entries
            .iter()
            .filter(|d| d.is_split && d.params.iter().all(|&p| p <= max_param))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> &'static Catalog {
        Catalog::builtin()
    }

    #[test]
    fn lookup_examples() {
        let su24 = cat().lookup("su(2,4)").unwrap();
        assert_eq!((su24.dim_g, su24.dim_k, su24.d_value()), (35, 19, 16));
        let su3 = cat().lookup("su(3)").unwrap();
        assert!(su3.is_compact && su3.d_value() == 0 && su3.sigma.is_none());
        let so34 = cat().lookup("so(3,4)").unwrap();
        assert!(so34.is_split);
        assert_eq!(so34.d_value(), 12);
        assert_eq!(cat().lookup("sp(1,2)").unwrap().d_value(), 8);
        assert_eq!(cat().lookup("g2(2)").unwrap().d_value(), 8);
        for n in 1..=3u32 {
            assert_eq!(cat().lookup(&format!("su(1,{})", 2 * n)).unwrap().d_value(), 4 * n as u64);
        }
    }

    #[test]
    fn lookup_rejections() {
        assert!(matches!(cat().lookup("so(2,2)"), Err(CatalogError::Form(FormError::NotSimple(_)))));
        assert!(matches!(cat().lookup("xx(3)"), Err(CatalogError::Form(_))));
        assert!(matches!(cat().lookup("sl(40,R)"), Err(CatalogError::Unknown(_))));
        assert_eq!(cat().lookup("su(1,1)").unwrap().name, "sl(2,R)");
    }

    #[test]
    fn table_rows_present() {
        let t = cat().table_one();
        assert_eq!(t.len(), 14);
        assert_eq!((t[0].g.as_str(), t[0].h.as_str(), t[0].l.as_str()), ("su(2,2n)", "sp(1,n)", "su(1,2n)"));
        assert!(t.iter().any(|e| e.g == "so(3,4)" && e.h == "g2(2)" && e.l == "so(1,4)"));
        let c = t[0].instance(2).check().unwrap();
        assert_eq!((c.d_g, c.d_h, c.d_l), (16, 8, 8));
        assert!(c.holds && c.admissible);
        let c = t[2].instance(1).check().unwrap();
        assert!(c.holds && !c.admissible);
    }

    #[test]
    fn instantiate_templates() {
        assert_eq!(instantiate("sp(1,n)*so(2)", 3), "sp(1,3)*so(2)");
        assert_eq!(instantiate("so(4,4n)", 2), "so(4,8)");
        assert_eq!(instantiate("g2(2)", 5), "g2(2)");
    }

    #[test]
    fn split_forms_list() {
        let names: Vec<&str> = cat().split_forms(4).iter().map(|d| d.name.as_str()).collect();
        for want in ["sl(3,R)", "so(3,4)", "so(3,3)", "sp(2,R)", "g2(2)", "f4(4)", "e8(8)"] {
            assert!(names.contains(&want), "{want}");
        }
        assert!(!names.contains(&"su(2,3)"));
        assert!(!names.contains(&"sl(5,R)"));
    }

    #[test]
    fn audit_flags_corruption() {
        let (c, t) = Catalog::builtin_text();
        let bad = c.replace("name=su(2,4) family=su_pq params=2,4 dim_g=35", "name=su(2,4) family=su_pq params=2,4 dim_g=36");
        match Catalog::load(&bad, t) {
            Err(CatalogError::Audit(f)) => assert!(f.iter().any(|m| m.starts_with("su(2,4)"))),
            other => panic!("{other:?}"),
        }
        let bad = c.replace("mult=1:4,2:2,4:1", "mult=1:4,2:2,4:2");
        assert!(matches!(Catalog::load(&bad, t), Err(CatalogError::Audit(_))));
        assert!(matches!(Catalog::load("nonsense", t), Err(CatalogError::Schema { .. })));
    }
}
