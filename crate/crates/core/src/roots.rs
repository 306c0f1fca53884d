//! Abstract root systems in their standard orthonormal coordinate
//! realizations, with exact rational coordinates.
//!
//! Every predicate here is a sign or zero test on the standard inner
//! product, so no normalization of the form is ever needed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, dot, is_zero_vec, rat, ratio, Coordinates, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("no root system of type {label}{rank}")]
    InvalidType { label: String, rank: usize },
    #[error("unknown root system label `{0}`")]
    UnknownLabel(String),
    #[error("vector has {got} coordinates, ambient space has {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector lies on the wall of simple root {index}: not in the open positive chamber")]
    OnChamberWall { index: usize },
    #[error("vector is not a root of this system")]
    NotARoot,
    #[error("the two roots sum to zero")]
    ZeroSum,
    #[error("chamber vector `{0}` vanishes on every root")]
    ZeroVector(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    BC,
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::E => "E",
            RootType::F => "F",
            RootType::G => "G",
            RootType::BC => "BC",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "A" => RootType::A,
            "B" => RootType::B,
            "C" => RootType::C,
            "D" => RootType::D,
            "E" => RootType::E,
            "F" => RootType::F,
            "G" => RootType::G,
            "BC" => RootType::BC,
            _ => return Err(RootError::UnknownLabel(s.to_string())),
        })
    }
}

impl RootType {
    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            RootType::A | RootType::BC => rank >= 1,
            RootType::B | RootType::C => rank >= 2,
            RootType::D => rank >= 3,
            RootType::E => (6..=8).contains(&rank),
            RootType::F => rank == 4,
            RootType::G => rank == 2,
        }
    }
}

/// A root type together with its rank, e.g. `BC2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypeLabel {
    pub kind: RootType,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(kind: RootType, rank: usize) -> Self {
        Self { kind, rank }
    }

    /// Representative of the isomorphism class: A1 = B1 = C1, B2 = C2, D3 = A3.
    pub fn canonical(self) -> Self {
        use RootType::*;
        match (self.kind, self.rank) {
            (B | C, 1) => Self::new(A, 1),
            (C, 2) => Self::new(B, 2),
            (D, 3) => Self::new(A, 3),
            _ => self,
        }
    }

    pub fn isomorphic(self, other: Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Classical root count.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.kind {
            RootType::A => n * (n + 1),
            RootType::B | RootType::C => 2 * n * n,
            RootType::D => 2 * n * (n - 1),
            RootType::BC => 2 * n * n + 2 * n,
            RootType::G => 12,
            RootType::F => 48,
            RootType::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| RootError::UnknownLabel(s.into()))?;
        let kind: RootType = s[..split].parse()?;
        let rank: usize = s[split..].parse().map_err(|_| RootError::UnknownLabel(s.into()))?;
        if !kind.is_valid_rank(rank) {
            return Err(RootError::InvalidType { label: kind.to_string(), rank });
        }
        Ok(Self { kind, rank })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<Rat>);

impl RootVector {
    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn neg(&self) -> Self {
        Self(linalg::neg_vec(&self.0))
    }

    pub fn scaled(&self, k: &Rat) -> Self {
        Self(linalg::scale_vec(k, &self.0))
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A point A, X or H of the ambient space, paired with roots by the standard
/// inner product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChamberVector(pub Vec<Rat>);

impl ChamberVector {
    pub fn from_ints(v: &[i64]) -> Self {
        Self(v.iter().map(|&x| rat(x)).collect())
    }

    pub fn scaled(&self, k: &Rat) -> Self {
        Self(linalg::scale_vec(k, &self.0))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    ambient: usize,
    roots: Vec<RootVector>,
    root_set: BTreeSet<RootVector>,
    simple: Vec<RootVector>,
    positive: Vec<RootVector>,
    reduced: bool,
    simple_coords: Coordinates,
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

fn e_diff(n: usize, i: usize, j: usize) -> Vec<Rat> {
    linalg::sub_vec(&unit(n, i), &unit(n, j))
}

fn reflect(beta: &[Rat], alpha: &[Rat]) -> Vec<Rat> {
    let k = rat(2) * dot(beta, alpha) / dot(alpha, alpha);
    linalg::sub_vec(beta, &linalg::scale_vec(&k, alpha))
}

/// Bourbaki simple roots, plus the extra seed `2·α_n` for BC.
fn simple_roots(label: TypeLabel) -> (usize, Vec<Vec<Rat>>, Vec<Vec<Rat>>) {
    let n = label.rank;
    let chain = |amb: usize, len: usize| -> Vec<Vec<Rat>> { (0..len).map(|i| e_diff(amb, i, i + 1)).collect() };
    match label.kind {
        RootType::A => (n + 1, chain(n + 1, n), vec![]),
        RootType::B => {
            let mut s = chain(n, n - 1);
            s.push(unit(n, n - 1));
            (n, s, vec![])
        }
        RootType::BC => {
            let mut s = chain(n, n - 1);
            s.push(unit(n, n - 1));
            (n, s, vec![linalg::scale_vec(&rat(2), &unit(n, n - 1))])
        }
        RootType::C => {
            let mut s = chain(n, n - 1);
            s.push(linalg::scale_vec(&rat(2), &unit(n, n - 1)));
            (n, s, vec![])
        }
        RootType::D => {
            let mut s = chain(n, n - 1);
            s.push(linalg::add_vec(&unit(n, n - 2), &unit(n, n - 1)));
            (n, s, vec![])
        }
        RootType::G => {
            let a1 = vec![rat(1), rat(-1), rat(0)];
            let a2 = vec![rat(-2), rat(1), rat(1)];
            (3, vec![a1, a2], vec![])
        }
        RootType::F => {
            let h = ratio(1, 2);
            let s = vec![
                e_diff(4, 1, 2),
                e_diff(4, 2, 3),
                unit(4, 3),
                vec![h.clone(), -h.clone(), -h.clone(), -h],
            ];
            (4, s, vec![])
        }
        RootType::E => {
            let h = ratio(1, 2);
            let mut a1 = vec![-h.clone(); 8];
            a1[0] = h.clone();
            a1[7] = h;
            let mut s = vec![a1, linalg::add_vec(&unit(8, 0), &unit(8, 1)), e_diff(8, 1, 0)];
            for i in 2..7 {
                s.push(e_diff(8, i, i - 1));
            }
            s.truncate(n);
            (8, s, vec![])
        }
    }
}

impl RootSystem {
    /// Builds the full system by reflection closure of the simple roots.
    pub fn build(kind: RootType, rank: usize) -> Result<Self, RootError> {
        if !kind.is_valid_rank(rank) {
            return Err(RootError::InvalidType { label: kind.to_string(), rank });
        }
        let label = TypeLabel::new(kind, rank);
        let (ambient, simple, extra) = simple_roots(label);
        let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<Rat>> = VecDeque::new();
        for s in simple.iter().chain(&extra) {
            for v in [s.clone(), linalg::neg_vec(s)] {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        while let Some(beta) = queue.pop_front() {
            for alpha in &simple {
                let r = reflect(&beta, alpha);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let roots: Vec<RootVector> = seen.into_iter().map(RootVector).collect();
        let simple: Vec<RootVector> = simple.into_iter().map(RootVector).collect();
        Self::from_parts(label, ambient, roots, simple)
    }

    fn from_parts(label: TypeLabel, ambient: usize, roots: Vec<RootVector>, simple: Vec<RootVector>) -> Result<Self, RootError> {
        let simple_coords = Coordinates::new(&simple.iter().map(|s| s.0.clone()).collect::<Vec<_>>())
            .ok_or(RootError::InvalidType { label: label.kind.to_string(), rank: label.rank })?;
        let positive = roots
            .iter()
            .filter(|r| {
                let c = simple_coords.solve(&r.0).expect("root outside simple span");
                c.iter().all(|x| !x.is_negative())
            })
            .cloned()
            .collect();
        let root_set: BTreeSet<RootVector> = roots.iter().cloned().collect();
        let reduced = !roots.iter().any(|r| root_set.contains(&r.scaled(&rat(2))));
        Ok(Self { label, ambient, roots, root_set, simple, positive, reduced, simple_coords })
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// All roots, sorted lexicographically.
    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn simple(&self) -> &[RootVector] {
        &self.simple
    }

    pub fn positive(&self) -> &[RootVector] {
        &self.positive
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn contains(&self, v: &RootVector) -> bool {
        self.root_set.contains(v)
    }

    /// Coefficients of `v` in the simple basis, `None` off the root span.
    pub fn simple_coefficients(&self, v: &RootVector) -> Option<Vec<Rat>> {
        self.simple_coords.solve(&v.0)
    }

    /// The same system with every root multiplied by `k > 0`.
    pub fn scaled(&self, k: &Rat) -> Self {
        assert!(k.is_positive(), "scale must be positive");
        let map = |v: &[RootVector]| v.iter().map(|r| r.scaled(k)).collect::<Vec<_>>();
        let mut roots = map(&self.roots);
        roots.sort();
        Self::from_parts(self.label, self.ambient, roots, map(&self.simple)).expect("scaling preserves independence")
    }

    pub fn pair(&self, root: &RootVector, x: &ChamberVector) -> Rat {
        dot(&root.0, &x.0)
    }

    fn check_dim(&self, v: &[Rat]) -> Result<(), RootError> {
        if v.len() != self.ambient {
            return Err(RootError::DimensionMismatch { expected: self.ambient, got: v.len() });
        }
        Ok(())
    }

    /// The unique positive root dominating every other positive root.
    pub fn highest_root(&self) -> RootVector {
        let height = |r: &RootVector| -> Rat {
            self.simple_coefficients(r).unwrap().into_iter().fold(Rat::zero(), |a, b| a + b)
        };
        self.positive
            .iter()
            .max_by(|a, b| height(a).cmp(&height(b)))
            .cloned()
            .expect("root system has positive roots")
    }

    /// Fundamental coweights: `α_j(ω_i) = δ_ij`, lying in the span of the roots.
    pub fn fundamental_coweights(&self) -> Vec<ChamberVector> {
        let gram: Vec<Vec<Rat>> = self
            .simple
            .iter()
            .map(|a| self.simple.iter().map(|b| dot(&a.0, &b.0)).collect())
            .collect();
        let inv = linalg::inverse(&gram).expect("simple roots are independent");
        (0..self.rank())
            .map(|i| {
                let mut w = vec![Rat::zero(); self.ambient];
                for (k, s) in self.simple.iter().enumerate() {
                    let c = &inv[k][i];
                    if !c.is_zero() {
                        w = linalg::add_vec(&w, &linalg::scale_vec(c, &s.0));
                    }
                }
                ChamberVector(w)
            })
            .collect()
    }

    /// `Σ c_i ω_i`, so that `α_i` takes the value `c_i`.
    pub fn from_coweight_coords(&self, c: &[Rat]) -> Result<ChamberVector, RootError> {
        if c.len() != self.rank() {
            return Err(RootError::DimensionMismatch { expected: self.rank(), got: c.len() });
        }
        let mut w = vec![Rat::zero(); self.ambient];
        for (ci, om) in c.iter().zip(self.fundamental_coweights()) {
            w = linalg::add_vec(&w, &linalg::scale_vec(ci, &om.0));
        }
        Ok(ChamberVector(w))
    }

    /// Whether the highest root strictly dominates every other positive root
    /// at the interior point `a`.
    pub fn dominance_check(&self, a: &ChamberVector) -> Result<bool, RootError> {
        self.check_dim(&a.0)?;
        for (index, s) in self.simple.iter().enumerate() {
            if !self.pair(s, a).is_positive() {
                return Err(RootError::OnChamberWall { index: index + 1 });
            }
        }
        let top = self.highest_root();
        let top_val = self.pair(&top, a);
        Ok(self.positive.iter().filter(|r| **r != top).all(|r| self.pair(r, a) < top_val))
    }

    /// For roots with negative inner product, whether their sum is a root.
    /// Pairs with non-negative inner product are outside the rule and give `true`.
    pub fn sum_rule_check(&self, g1: &RootVector, g2: &RootVector) -> Result<bool, RootError> {
        self.check_dim(&g1.0)?;
        self.check_dim(&g2.0)?;
        if !self.contains(g1) || !self.contains(g2) {
            return Err(RootError::NotARoot);
        }
        let sum = RootVector(linalg::add_vec(&g1.0, &g2.0));
        if sum.is_zero() {
            return Err(RootError::ZeroSum);
        }
        if dot(&g1.0, &g2.0).is_negative() {
            Ok(self.contains(&sum))
        } else {
            Ok(true)
        }
    }

    /// Roots vanishing at `x`.
    pub fn vanishing_set(&self, x: &ChamberVector) -> BTreeSet<RootVector> {
        self.roots.iter().filter(|r| self.pair(r, x).is_zero()).cloned().collect()
    }

    /// Whether every root vanishes at `x` or at `h`.
    pub fn cover_check(&self, x: &ChamberVector, h: &ChamberVector) -> Result<bool, RootError> {
        self.check_dim(&x.0)?;
        self.check_dim(&h.0)?;
        let cx = self.vanishing_set(x);
        if cx.len() == self.roots.len() {
            return Err(RootError::ZeroVector("X"));
        }
        let ch = self.vanishing_set(h);
        if ch.len() == self.roots.len() {
            return Err(RootError::ZeroVector("H"));
        }
        Ok(self.roots.iter().all(|r| cx.contains(r) || ch.contains(r)))
    }
}

/// Invariant squared lengths of a finite set of roots, normalized so the
/// shortest root has length 1.
///
/// The form is the dual of `Σ_α α ⊗ α`, which is invariant under every
/// permutation of the roots induced by a linear map, so it works in any
/// coordinates, orthonormal or not.
pub fn normalized_lengths(vectors: &[RootVector]) -> BTreeMap<RootVector, Rat> {
    let raw: Vec<Vec<Rat>> = vectors.iter().map(|v| v.0.clone()).collect();
    let basis_idx = linalg::independent_subset(&raw);
    let basis: Vec<Vec<Rat>> = basis_idx.iter().map(|&i| raw[i].clone()).collect();
    let coords = Coordinates::new(&basis).expect("independent by construction");
    let k = basis.len();
    let cs: Vec<Vec<Rat>> = raw.iter().map(|v| coords.solve(v).expect("in span")).collect();
    let mut q = vec![vec![Rat::zero(); k]; k];
    for c in &cs {
        for i in 0..k {
            for j in 0..k {
                q[i][j] += &c[i] * &c[j];
            }
        }
    }
    let qinv = linalg::inverse(&q).expect("roots span their span");
    let sq: Vec<Rat> = cs.iter().map(|c| dot(c, &linalg::mat_vec(&qinv, c))).collect();
    let min = sq.iter().min().cloned().unwrap_or_else(Rat::one);
    vectors.iter().cloned().zip(sq.into_iter().map(|x| x / &min)).collect()
}

/// Identifies an irreducible root system from its roots, up to isomorphism.
pub fn classify(vectors: &[RootVector]) -> Option<TypeLabel> {
    if vectors.is_empty() {
        return None;
    }
    let raw: Vec<Vec<Rat>> = vectors.iter().map(|v| v.0.clone()).collect();
    let r = linalg::rank(&raw);
    let n = vectors.len();
    let set: BTreeSet<&RootVector> = vectors.iter().collect();
    let reduced = !vectors.iter().any(|v| set.contains(&v.scaled(&rat(2))));
    let lengths = normalized_lengths(vectors);
    let mut classes: BTreeMap<Rat, usize> = BTreeMap::new();
    for l in lengths.values() {
        *classes.entry(l.clone()).or_default() += 1;
    }
    let short = classes.get(&Rat::one()).copied().unwrap_or(0);
    use RootType::*;
    let candidate = if !reduced {
        TypeLabel::new(BC, r)
    } else if classes.len() == 1 {
        match n {
            72 if r == 6 => TypeLabel::new(E, 6),
            126 if r == 7 => TypeLabel::new(E, 7),
            240 if r == 8 => TypeLabel::new(E, 8),
            _ if n == r * (r + 1) => TypeLabel::new(A, r),
            _ => TypeLabel::new(D, r),
        }
    } else if r == 2 && n == 12 {
        TypeLabel::new(G, 2)
    } else if r == 4 && n == 48 {
        TypeLabel::new(F, 4)
    } else if short == 2 * r {
        TypeLabel::new(B, r)
    } else {
        TypeLabel::new(C, r)
    };
    if !candidate.kind.is_valid_rank(candidate.rank) || candidate.root_count() != n {
        return None;
    }
    Some(candidate.canonical())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(kind: RootType, rank: usize) -> RootSystem {
        RootSystem::build(kind, rank).unwrap()
    }

    #[test]
    fn small_systems_have_expected_sizes() {
        let a2 = rs(RootType::A, 2);
        assert_eq!(a2.roots().len(), 6);
        assert_eq!(a2.simple().len(), 2);
        assert_eq!(rs(RootType::G, 2).roots().len(), 12);
        let bc2 = rs(RootType::BC, 2);
        assert_eq!(bc2.roots().len(), 12);
        assert!(bc2.contains(&RootVector::from_ints(&[1, 0])));
        assert!(bc2.contains(&RootVector::from_ints(&[2, 0])));
        assert!(!bc2.is_reduced());
    }

    #[test]
    fn bc2_matches_explicit_listing() {
        // ±e_i, ±2e_i, ±e_1±e_2
        let mut expected: BTreeSet<RootVector> = BTreeSet::new();
        for s in [1, -1] {
            for i in 0..2 {
                let mut v = [0i64; 2];
                v[i] = s;
                expected.insert(RootVector::from_ints(&v));
                v[i] = 2 * s;
                expected.insert(RootVector::from_ints(&v));
            }
            for t in [1, -1] {
                expected.insert(RootVector::from_ints(&[s, t]));
            }
        }
        let got: BTreeSet<RootVector> = rs(RootType::BC, 2).roots().iter().cloned().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(RootSystem::build(RootType::E, 5).is_err());
        assert!(RootSystem::build(RootType::D, 2).is_err());
        assert!(RootSystem::build(RootType::G, 3).is_err());
        assert!(RootSystem::build(RootType::A, 0).is_err());
        assert!(matches!(
            RootSystem::build(RootType::F, 3),
            Err(RootError::InvalidType { rank: 3, .. })
        ));
    }

    #[test]
    fn highest_roots() {
        let a2 = rs(RootType::A, 2);
        let s = a2.simple();
        let expect = RootVector(linalg::add_vec(&s[0].0, &s[1].0));
        assert_eq!(a2.highest_root(), expect);

        let g2 = rs(RootType::G, 2);
        assert_eq!(g2.simple_coefficients(&g2.highest_root()).unwrap(), vec![rat(3), rat(2)]);

        let b2 = rs(RootType::B, 2);
        assert_eq!(b2.simple_coefficients(&b2.highest_root()).unwrap(), vec![rat(1), rat(2)]);
    }

    #[test]
    fn dominance_examples() {
        for (k, r) in [(RootType::A, 2), (RootType::G, 2)] {
            let sys = rs(k, r);
            let a = sys.from_coweight_coords(&vec![rat(1); r]).unwrap();
            assert!(sys.dominance_check(&a).unwrap());
        }
        let b2 = rs(RootType::B, 2);
        let wall = b2.from_coweight_coords(&[rat(0), rat(1)]).unwrap();
        assert_eq!(b2.dominance_check(&wall), Err(RootError::OnChamberWall { index: 1 }));
    }

    #[test]
    fn sum_rule_examples() {
        let a2 = rs(RootType::A, 2);
        let s = a2.simple().to_vec();
        assert!(a2.sum_rule_check(&s[0], &s[1]).unwrap());
        assert_eq!(a2.sum_rule_check(&s[0], &s[0].neg()), Err(RootError::ZeroSum));
        let b2 = rs(RootType::B, 2);
        assert!(b2
            .sum_rule_check(&RootVector::from_ints(&[1, -1]), &RootVector::from_ints(&[0, 1]))
            .unwrap());
        assert_eq!(
            b2.sum_rule_check(&RootVector::from_ints(&[3, 0]), &RootVector::from_ints(&[0, 1])),
            Err(RootError::NotARoot)
        );
    }

    #[test]
    fn cover_examples() {
        let a1 = rs(RootType::A, 1);
        let x = a1.from_coweight_coords(&[rat(1)]).unwrap();
        assert!(!a1.cover_check(&x, &x).unwrap());

        let a2 = rs(RootType::A, 2);
        let w = a2.fundamental_coweights();
        assert!(!a2.cover_check(&w[0], &w[1]).unwrap());

        let bc2 = rs(RootType::BC, 2);
        let x = ChamberVector::from_ints(&[1, 0]);
        let h = ChamberVector::from_ints(&[0, 1]);
        assert!(!bc2.cover_check(&x, &h).unwrap());

        // (1,1,1) is orthogonal to every root of A2 in R^3.
        let flat = ChamberVector::from_ints(&[1, 1, 1]);
        assert_eq!(a2.cover_check(&flat, &w[0]), Err(RootError::ZeroVector("X")));
        assert!(matches!(
            a2.cover_check(&ChamberVector::from_ints(&[1, 0]), &w[0]),
            Err(RootError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn coweights_are_dual_to_simple_roots() {
        for (k, r) in [(RootType::A, 3), (RootType::F, 4), (RootType::E, 6), (RootType::BC, 3)] {
            let sys = rs(k, r);
            for (i, w) in sys.fundamental_coweights().iter().enumerate() {
                for (j, s) in sys.simple().iter().enumerate() {
                    let expect = if i == j { rat(1) } else { rat(0) };
                    assert_eq!(sys.pair(s, w), expect);
                }
            }
        }
    }

    #[test]
    fn classification_recovers_labels() {
        use RootType::*;
        let cases = [(A, 1), (A, 4), (B, 3), (C, 3), (D, 4), (D, 5), (G, 2), (F, 4), (E, 6), (E, 7), (BC, 1), (BC, 3)];
        for (k, r) in cases {
            let sys = rs(k, r);
            let got = classify(sys.roots()).unwrap();
            assert!(got.isomorphic(TypeLabel::new(k, r)), "{k}{r} classified as {got}");
        }
        assert_eq!(classify(rs(C, 2).roots()), Some(TypeLabel::new(B, 2)));
        assert_eq!(classify(rs(D, 3).roots()), Some(TypeLabel::new(A, 3)));
    }

    #[test]
    fn normalized_lengths_of_bc() {
        let sys = rs(RootType::BC, 2);
        let l = normalized_lengths(sys.roots());
        assert_eq!(l[&RootVector::from_ints(&[1, 0])], rat(1));
        assert_eq!(l[&RootVector::from_ints(&[1, 1])], rat(2));
        assert_eq!(l[&RootVector::from_ints(&[0, -2])], rat(4));
    }

    #[test]
    fn labels_parse() {
        assert_eq!("BC2".parse::<TypeLabel>().unwrap(), TypeLabel::new(RootType::BC, 2));
        assert!("E5".parse::<TypeLabel>().is_err());
        assert!("X3".parse::<TypeLabel>().is_err());
    }
}
