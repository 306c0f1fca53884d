//! Names of real simple Lie algebras and reductive products of them.
//!
//! Parsing happens in two steps. [`FormKey::parse_raw`] only reads the
//! syntax and orders the signature; [`FormKey::canonical`] then rejects
//! non-simple parameter choices and maps low-dimensional coincidences onto
//! one representative:
//!
//! | input                               | becomes      |
//! |-------------------------------------|--------------|
//! | `su(1,1)`, `sp(1,R)`, `so(1,2)`     | `sl(2,R)`    |
//! | `sl(1,H)`                           | `su(2)`      |
//! | `su(0,n)`, `so(0,n)`, `sp(0,n)`     | compact form |
//! | `so(q,p)` etc. with `p < q`         | `so(p,q)`    |
//!
//! Rejected: `so(2,2)`, `so(1,1)`, `so(4)`, `so*(4)`, and anything whose
//! complexification is not simple or is zero.
//!
//! The dimension formulas here are kept independent of the shipped catalog
//! file; the catalog loader cross-checks the two.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormError {
    #[error("cannot parse real form name `{0}`")]
    Syntax(String),
    #[error("`{0}` is not a simple real Lie algebra")]
    NotSimple(String),
    #[error("unsupported real form `{0}`")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    SlR,
    SuPq,
    SoPq,
    SpR,
    SpPq,
    SlH,
    SoStar,
    G2Split,
    F4Split,
    F4Rank1,
    E6Split,
    E6Quasi,
    E6Hermitian,
    E6Rank2,
    E7Split,
    E8Split,
    Su,
    So,
    Sp,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 24] = [
        Family::SlR,
        Family::SuPq,
        Family::SoPq,
        Family::SpR,
        Family::SpPq,
        Family::SlH,
        Family::SoStar,
        Family::G2Split,
        Family::F4Split,
        Family::F4Rank1,
        Family::E6Split,
        Family::E6Quasi,
        Family::E6Hermitian,
        Family::E6Rank2,
        Family::E7Split,
        Family::E8Split,
        Family::Su,
        Family::So,
        Family::Sp,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E7,
        Family::E8,
    ];

    /// Identifier used in the catalog file.
    pub fn id(self) -> &'static str {
        match self {
            Family::SlR => "sl_R",
            Family::SuPq => "su_pq",
            Family::SoPq => "so_pq",
            Family::SpR => "sp_R",
            Family::SpPq => "sp_pq",
            Family::SlH => "sl_H",
            Family::SoStar => "so_star",
            Family::G2Split => "g2_2",
            Family::F4Split => "f4_4",
            Family::F4Rank1 => "f4_m20",
            Family::E6Split => "e6_6",
            Family::E6Quasi => "e6_2",
            Family::E6Hermitian => "e6_m14",
            Family::E6Rank2 => "e6_m26",
            Family::E7Split => "e7_7",
            Family::E8Split => "e8_8",
            Family::Su => "su",
            Family::So => "so",
            Family::Sp => "sp",
            Family::G2 => "g2",
            Family::F4 => "f4",
            Family::E6 => "e6",
            Family::E7 => "e7",
            Family::E8 => "e8",
        }
    }

    pub fn from_id(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|f| f.id() == s)
    }

    pub fn is_compact(self) -> bool {
        matches!(self, Family::Su | Family::So | Family::Sp | Family::G2 | Family::F4 | Family::E6 | Family::E7 | Family::E8)
    }

    fn param_count(self) -> usize {
        match self {
            Family::SuPq | Family::SoPq | Family::SpPq => 2,
            Family::SlR | Family::SpR | Family::SlH | Family::SoStar | Family::Su | Family::So | Family::Sp => 1,
            _ => 0,
        }
    }
}

/// A real form identified by family and integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FormKey {
    pub family: Family,
    pub params: Vec<u32>,
}

fn parse_args(s: &str) -> Option<(String, Vec<String>)> {
    let open = s.find('(')?;
    if !s.ends_with(')') {
        return None;
    }
    let head = s[..open].to_string();
    let args = s[open + 1..s.len() - 1].split(',').map(str::to_string).collect();
    Some((head, args))
}

fn normalize(name: &str) -> String {
    name.chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .replace('ℝ', "R")
        .replace('ℍ', "H")
        .replace("_{", "")
        .replace('}', "")
}

impl FormKey {
    pub fn new(family: Family, params: &[u32]) -> Self {
        Self { family, params: params.to_vec() }
    }

    /// Syntax only: signatures are ordered `p <= q`, nothing is rejected for
    /// being non-simple.
    pub fn parse_raw(name: &str) -> Result<Self, FormError> {
        let s = normalize(name);
        let err = || FormError::Syntax(name.to_string());
        let fixed = match s.as_str() {
            "g2(2)" => Some(Family::G2Split),
            "f4(4)" => Some(Family::F4Split),
            "f4(-20)" => Some(Family::F4Rank1),
            "e6(6)" => Some(Family::E6Split),
            "e6(2)" => Some(Family::E6Quasi),
            "e6(-14)" => Some(Family::E6Hermitian),
            "e6(-26)" => Some(Family::E6Rank2),
            "e7(7)" => Some(Family::E7Split),
            "e8(8)" => Some(Family::E8Split),
            "g2" => Some(Family::G2),
            "f4" => Some(Family::F4),
            "e6" => Some(Family::E6),
            "e7" => Some(Family::E7),
            "e8" => Some(Family::E8),
            _ => None,
        };
        if let Some(f) = fixed {
            return Ok(Self::new(f, &[]));
        }
        let (head, args) = parse_args(&s).ok_or_else(err)?;
        let num = |a: &str| a.parse::<u32>().map_err(|_| err());
        let ordered = |f: Family, a: &str, b: &str| -> Result<Self, FormError> {
            let (p, q) = (num(a)?, num(b)?);
            Ok(Self::new(f, &[p.min(q), p.max(q)]))
        };
        match (head.as_str(), args.as_slice()) {
            ("sl", [n, k]) if k == "R" => Ok(Self::new(Family::SlR, &[num(n)?])),
            ("sl", [n, k]) if k == "H" => Ok(Self::new(Family::SlH, &[num(n)?])),
            ("su" | "su*", [n]) if head == "su*" => {
                let n = num(n)?;
                if n % 2 != 0 {
                    return Err(err());
                }
                Ok(Self::new(Family::SlH, &[n / 2]))
            }
            ("sp", [n, k]) if k == "R" => Ok(Self::new(Family::SpR, &[num(n)?])),
            ("su", [p, q]) => ordered(Family::SuPq, p, q),
            ("so", [p, q]) => ordered(Family::SoPq, p, q),
            ("sp", [p, q]) => ordered(Family::SpPq, p, q),
            ("su", [n]) => Ok(Self::new(Family::Su, &[num(n)?])),
            ("so", [n]) => Ok(Self::new(Family::So, &[num(n)?])),
            ("sp", [n]) => Ok(Self::new(Family::Sp, &[num(n)?])),
            ("so*", [n]) => {
                let n = num(n)?;
                if n % 2 != 0 {
                    return Err(err());
                }
                Ok(Self::new(Family::SoStar, &[n / 2]))
            }
            _ => Err(err()),
        }
    }

    /// Parse, validate simplicity and canonicalize.
    pub fn parse(name: &str) -> Result<Self, FormError> {
        Self::parse_raw(name)?.canonical()
    }

    pub fn canonical(self) -> Result<Self, FormError> {
        use Family::*;
        let bad = |k: &FormKey| Err(FormError::NotSimple(k.to_string()));
        if self.params.len() != self.family.param_count() {
            return Err(FormError::Syntax(self.to_string()));
        }
        let p = self.params.first().copied().unwrap_or(0);
        let q = self.params.get(1).copied().unwrap_or(0);
        let sl2 = Self::new(SlR, &[2]);
        match self.family {
            SlR if p < 2 => bad(&self),
            SlH if p == 0 => bad(&self),
            SlH if p == 1 => Ok(Self::new(Su, &[2])),
            SpR if p == 0 => bad(&self),
            SpR if p == 1 => Ok(sl2),
            SuPq if p == 0 => Self::new(Su, &[q]).canonical(),
            SuPq if (p, q) == (1, 1) => Ok(sl2),
            SoPq if p == 0 => Self::new(So, &[q]).canonical(),
            SoPq if p + q <= 2 || (p, q) == (2, 2) => bad(&self),
            SoPq if (p, q) == (1, 2) => Ok(sl2),
            SpPq if p == 0 => Self::new(Sp, &[q]).canonical(),
            SoStar if p < 3 => bad(&self),
            Su if p < 2 => bad(&self),
            So if p < 3 || p == 4 => bad(&self),
            Sp if p == 0 => bad(&self),
            _ => Ok(self),
        }
    }

    pub fn is_compact(&self) -> bool {
        self.family.is_compact()
    }

    /// Dimension of the algebra.
    pub fn dim_g(&self) -> u64 {
        use Family::*;
        let p = self.params.first().copied().unwrap_or(0) as u64;
        let q = self.params.get(1).copied().unwrap_or(0) as u64;
        match self.family {
            SlR | Su => p * p - 1,
            SuPq => (p + q) * (p + q) - 1,
            SoPq => (p + q) * (p + q - 1) / 2,
            So => p * (p - 1) / 2,
            SpR | Sp => p * (2 * p + 1),
            SpPq => (p + q) * (2 * (p + q) + 1),
            SlH => 4 * p * p - 1,
            SoStar => p * (2 * p - 1),
            G2Split | G2 => 14,
            F4Split | F4Rank1 | F4 => 52,
            E6Split | E6Quasi | E6Hermitian | E6Rank2 | E6 => 78,
            E7Split | E7 => 133,
            E8Split | E8 => 248,
        }
    }

    /// Dimension of a maximal compact subalgebra.
    pub fn dim_k(&self) -> u64 {
        use Family::*;
        let p = self.params.first().copied().unwrap_or(0) as u64;
        let q = self.params.get(1).copied().unwrap_or(0) as u64;
        let so = |n: u64| n * n.saturating_sub(1) / 2;
        let sp = |n: u64| n * (2 * n + 1);
        match self.family {
            SlR => so(p),
            SuPq => p * p + q * q - 1,
            SoPq => so(p) + so(q),
            SpR | SoStar => p * p,
            SpPq => sp(p) + sp(q),
            SlH => sp(p),
            G2Split => 6,
            F4Split => 24,
            F4Rank1 => 36,
            E6Split => 36,
            E6Quasi => 38,
            E6Hermitian => 46,
            E6Rank2 => 52,
            E7Split => 63,
            E8Split => 120,
            Su | So | Sp | G2 | F4 | E6 | E7 | E8 => self.dim_g(),
        }
    }

    /// `dim G/K`.
    pub fn d_value(&self) -> u64 {
        self.dim_g() - self.dim_k()
    }

    pub fn real_rank(&self) -> u32 {
        use Family::*;
        let p = self.params.first().copied().unwrap_or(0);
        match self.family {
            SlR | SlH => p - 1,
            SuPq | SoPq | SpPq | SpR => p,
            SoStar => p / 2,
            G2Split => 2,
            F4Split | E6Quasi => 4,
            F4Rank1 => 1,
            E6Split => 6,
            E6Hermitian | E6Rank2 => 2,
            E7Split => 7,
            E8Split => 8,
            Su | So | Sp | G2 | F4 | E6 | E7 | E8 => 0,
        }
    }
}

impl fmt::Display for FormKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let p = self.params.first().copied().unwrap_or(0);
        let q = self.params.get(1).copied().unwrap_or(0);
        match self.family {
            SlR => write!(f, "sl({p},R)"),
            SlH => write!(f, "sl({p},H)"),
            SpR => write!(f, "sp({p},R)"),
            SuPq => write!(f, "su({p},{q})"),
            SoPq => write!(f, "so({p},{q})"),
            SpPq => write!(f, "sp({p},{q})"),
            SoStar => write!(f, "so*({})", 2 * p),
            Su => write!(f, "su({p})"),
            So => write!(f, "so({p})"),
            Sp => write!(f, "sp({p})"),
            G2Split => f.write_str("g2(2)"),
            F4Split => f.write_str("f4(4)"),
            F4Rank1 => f.write_str("f4(-20)"),
            E6Split => f.write_str("e6(6)"),
            E6Quasi => f.write_str("e6(2)"),
            E6Hermitian => f.write_str("e6(-14)"),
            E6Rank2 => f.write_str("e6(-26)"),
            E7Split => f.write_str("e7(7)"),
            E8Split => f.write_str("e8(8)"),
            G2 => f.write_str("g2"),
            F4 => f.write_str("f4"),
            E6 => f.write_str("e6"),
            E7 => f.write_str("e7"),
            E8 => f.write_str("e8"),
        }
    }
}

/// One factor of a reductive algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Factor {
    Simple(FormKey),
    /// A compact abelian factor of the given dimension (`so(2)`, the centre of `u(p,q)`).
    Torus(u32),
}

/// A reductive algebra written as a product of factors, e.g. `sp(1,2)*so(2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Reductive {
    /// Sorted; simple factors first.
    pub factors: Vec<Factor>,
}

impl Reductive {
    pub fn simple(key: FormKey) -> Self {
        Self { factors: vec![Factor::Simple(key)] }
    }

    fn parse_with(text: &str, canonical: bool) -> Result<Self, FormError> {
        let s = normalize(text).replace('×', "*");
        if s.is_empty() {
            return Err(FormError::Syntax(text.to_string()));
        }
        let mut factors = Vec::new();
        for part in s.split('*') {
            if part == "so(2)" || part == "u(1)" {
                factors.push(Factor::Torus(1));
                continue;
            }
            if let Some(rest) = part.strip_prefix('u') {
                if let Some((_, args)) = parse_args(rest) {
                    if args.len() == 2 {
                        let key = FormKey::parse_raw(&format!("su{rest}"))?;
                        let key = if canonical { key.canonical()? } else { key };
                        factors.push(Factor::Simple(key));
                        factors.push(Factor::Torus(1));
                        continue;
                    }
                }
                return Err(FormError::Syntax(part.to_string()));
            }
            let key = FormKey::parse_raw(part)?;
            factors.push(Factor::Simple(if canonical { key.canonical()? } else { key }));
        }
        factors.sort();
        // Merge tori.
        let torus: u32 = factors.iter().filter_map(|f| if let Factor::Torus(n) = f { Some(*n) } else { None }).sum();
        factors.retain(|f| matches!(f, Factor::Simple(_)));
        if torus > 0 {
            factors.push(Factor::Torus(torus));
        }
        Ok(Self { factors })
    }

    /// Parse and canonicalize every simple factor.
    pub fn parse(text: &str) -> Result<Self, FormError> {
        Self::parse_with(text, true)
    }

    /// Parse without rejecting non-simple factors; used for formula checks.
    pub fn parse_raw(text: &str) -> Result<Self, FormError> {
        Self::parse_with(text, false)
    }

    pub fn simple_factors(&self) -> impl Iterator<Item = &FormKey> {
        self.factors.iter().filter_map(|f| if let Factor::Simple(k) = f { Some(k) } else { None })
    }

    pub fn d_value(&self) -> u64 {
        self.simple_factors().map(FormKey::d_value).sum()
    }

    pub fn real_rank(&self) -> u32 {
        self.simple_factors().map(FormKey::real_rank).sum()
    }

    pub fn dim(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| match f {
                Factor::Simple(k) => k.dim_g(),
                Factor::Torus(n) => *n as u64,
            })
            .sum()
    }

    pub fn is_compact(&self) -> bool {
        self.simple_factors().all(FormKey::is_compact)
    }
}

impl fmt::Display for Reductive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match factor {
                Factor::Simple(k) => write!(f, "{k}")?,
                Factor::Torus(1) => f.write_str("so(2)")?,
                Factor::Torus(n) => write!(f, "t{n}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for FormKey {
    type Err = FormError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(name: &str) -> u64 {
        FormKey::parse(name).unwrap().d_value()
    }

    #[test]
    fn dimension_examples() {
        let k = FormKey::parse("su(2,4)").unwrap();
        assert_eq!((k.dim_g(), k.dim_k(), k.d_value()), (35, 19, 16));
        assert_eq!(d("su(3)"), 0);
        assert_eq!(d("so(3,4)"), 12);
        assert_eq!(d("sp(1,2)"), 8);
        for n in 1..=3u64 {
            assert_eq!(d(&format!("su(1,{})", 2 * n)), 4 * n);
        }
        assert_eq!(d("g2(2)"), 8);
    }

    #[test]
    fn canonicalization_table() {
        let sl2 = FormKey::new(Family::SlR, &[2]);
        for n in ["su(1,1)", "sp(1,R)", "so(1,2)", "so(2,1)"] {
            assert_eq!(FormKey::parse(n).unwrap(), sl2, "{n}");
        }
        assert_eq!(FormKey::parse("so(4,3)").unwrap().to_string(), "so(3,4)");
        assert_eq!(FormKey::parse("su(0,3)").unwrap().to_string(), "su(3)");
        assert_eq!(FormKey::parse("sl(3,ℝ)").unwrap().to_string(), "sl(3,R)");
        assert_eq!(FormKey::parse("g_{2(2)}").unwrap().to_string(), "g2(2)");
        assert_eq!(FormKey::parse("so*(8)").unwrap().to_string(), "so*(8)");
    }

    #[test]
    fn non_simple_rejected() {
        for n in ["so(2,2)", "so(1,1)", "so(4)", "so*(4)", "sl(1,R)", "su(1)"] {
            assert!(matches!(FormKey::parse(n), Err(FormError::NotSimple(_))), "{n}");
        }
        for n in ["xx(1,2)", "su(a,b)", "so*(5)", "sl(3,C)", "su(1,2"] {
            assert!(matches!(FormKey::parse(n), Err(FormError::Syntax(_))), "{n}");
        }
        // raw parsing keeps so(2,2) for formula checks
        assert_eq!(FormKey::parse_raw("so(2,2)").unwrap().d_value(), 4);
    }

    #[test]
    fn reductive_products() {
        let r = Reductive::parse("sp(1,2)*so(2)").unwrap();
        assert_eq!(r.d_value(), 8);
        assert_eq!(r.to_string(), "sp(1,2)*so(2)");
        let u = Reductive::parse("u(1,4)").unwrap();
        assert_eq!(u, Reductive::parse("su(1,4)*so(2)").unwrap());
        assert_eq!(u.dim(), 25);
        assert!(Reductive::parse("so(3)*sp(1)").unwrap().is_compact());
        assert!(Reductive::parse("u(1,1)").is_ok());
        assert!(Reductive::parse("").is_err());
    }
}
