//! Roots of the complexified algebra written as `(t-part, a-part)` pairs,
//! their restriction to `a`, the conjugation `σ`, and the sign partition
//! induced by an element `X` of `t`.
//!
//! A big root is stored as two rational vectors. The conjugation with
//! respect to the real form flips the `t`-part and keeps the `a`-part, so no
//! complex numbers are needed: the only quantities ever used are signs of
//! `α_c(iX)` (the `t`-part paired with `X`) and vanishing of `α_c|_a`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::forms::{Family, FormKey};
use crate::linalg::{self, dot, is_zero_vec, lex_sign, rat, Rat};
use crate::roots::{self, RootSystem, RootVector, TypeLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RestrictionError {
    #[error("empty set of roots")]
    Empty,
    #[error("root set is not closed under negation")]
    NotNegationClosed,
    #[error("root set is not stable under the conjugation (t, a) -> (-t, a)")]
    NotSigmaStable,
    #[error("coordinate length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("restricted roots of one length class carry different multiplicities")]
    InconsistentClassMultiplicity,
    #[error("no multiplicity given for length class {0}")]
    MissingClass(u32),
    #[error("normalized squared length {0} is not an integer")]
    NonIntegralLength(String),
    #[error("restricted roots do not span a")]
    DegenerateA,
    #[error("{0}")]
    Root(#[from] roots::RootError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigRoot {
    pub t_part: Vec<Rat>,
    pub a_part: Vec<Rat>,
}

impl BigRoot {
    pub fn new(t_part: Vec<Rat>, a_part: Vec<Rat>) -> Self {
        Self { t_part, a_part }
    }

    pub fn sigma(&self) -> Self {
        Self::new(linalg::neg_vec(&self.t_part), self.a_part.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(linalg::neg_vec(&self.t_part), linalg::neg_vec(&self.a_part))
    }

    /// Real value of `α_c(iX)` for `X` in `t`.
    pub fn pair_t(&self, x: &[Rat]) -> Rat {
        dot(&self.t_part, x)
    }

    /// Positivity is lexicographic on `(a_part, t_part)`, so the a-part
    /// decides whenever it is nonzero and positive big roots restrict to
    /// positive restricted roots.
    pub fn is_positive(&self) -> bool {
        match lex_sign(&self.a_part) {
            0 => lex_sign(&self.t_part) > 0,
            s => s > 0,
        }
    }

    pub fn restricts_to_zero(&self) -> bool {
        is_zero_vec(&self.a_part)
    }
}

/// Restricted root system with multiplicities.
///
/// Coordinates are whatever the producer used; every derived quantity
/// (positivity, length classes, type) is coordinate independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedSystem {
    mult: BTreeMap<RootVector, u32>,
    real_rank: usize,
    label: Option<TypeLabel>,
    /// Number of big roots restricting to zero, when known.
    pub m0_root_count: Option<usize>,
    /// Dimension of the centralizer of `a` in `k`, when known.
    pub m0_dim: Option<u64>,
}

impl RestrictedSystem {
    /// From restricted roots with multiplicities in `real_rank` coordinates.
    pub fn from_weights(mult: BTreeMap<RootVector, u32>, real_rank: usize) -> Result<Self, RestrictionError> {
        let mut sys = Self::unlabelled(mult, real_rank)?;
        let roots: Vec<RootVector> = sys.mult.keys().cloned().collect();
        sys.label = roots::classify(&roots);
        Ok(sys)
    }

    fn unlabelled(mult: BTreeMap<RootVector, u32>, real_rank: usize) -> Result<Self, RestrictionError> {
        if mult.is_empty() {
            return Err(RestrictionError::Empty);
        }
        for (r, m) in &mult {
            if r.0.len() != real_rank {
                return Err(RestrictionError::DimensionMismatch { expected: real_rank, got: r.0.len() });
            }
            if mult.get(&r.neg()) != Some(m) {
                return Err(RestrictionError::NotNegationClosed);
            }
        }
        let vecs: Vec<Vec<Rat>> = mult.keys().map(|r| r.0.clone()).collect();
        if linalg::rank(&vecs) != real_rank {
            return Err(RestrictionError::DegenerateA);
        }
        Ok(Self { mult, real_rank, label: None, m0_root_count: None, m0_dim: None })
    }

    /// Builds `Σ` of the given type in simple-root coordinates, assigning
    /// multiplicities per normalized squared-length class.
    pub fn from_label(label: TypeLabel, class_mult: &BTreeMap<u32, u32>) -> Result<Self, RestrictionError> {
        let rs = RootSystem::build(label.kind, label.rank)?;
        let min = ambient_min_length(&rs);
        let mut mult = BTreeMap::new();
        for r in rs.roots() {
            let class = integral(&(dot(&r.0, &r.0) / &min))?;
            let m = *class_mult.get(&class).ok_or(RestrictionError::MissingClass(class))?;
            let coeffs = rs.simple_coefficients(r).expect("root in span");
            mult.insert(RootVector(coeffs), m);
        }
        let mut sys = Self::unlabelled(mult, label.rank)?;
        sys.label = Some(label.canonical());
        Ok(sys)
    }

    pub fn real_rank(&self) -> usize {
        self.real_rank
    }

    pub fn label(&self) -> Option<TypeLabel> {
        self.label
    }

    pub fn roots(&self) -> impl Iterator<Item = &RootVector> {
        self.mult.keys()
    }

    pub fn mult(&self, r: &RootVector) -> Option<u32> {
        self.mult.get(r).copied()
    }

    pub fn multiplicities(&self) -> &BTreeMap<RootVector, u32> {
        &self.mult
    }

    pub fn positive(&self) -> impl Iterator<Item = (&RootVector, &u32)> {
        self.mult.iter().filter(|(r, _)| lex_sign(&r.0) > 0)
    }

    /// `dim n`, the sum of multiplicities over positive restricted roots.
    pub fn positive_mult_sum(&self) -> u64 {
        self.positive().map(|(_, m)| *m as u64).sum()
    }

    /// `dim a + dim n`, which equals `dim p`.
    pub fn iwasawa_d(&self) -> u64 {
        self.real_rank as u64 + self.positive_mult_sum()
    }

    pub fn is_reduced(&self) -> bool {
        !self.mult.keys().any(|r| self.mult.contains_key(&r.scaled(&rat(2))))
    }

    /// Multiplicity per normalized squared-length class.
    pub fn class_multiplicities(&self) -> Result<BTreeMap<u32, u32>, RestrictionError> {
        let roots: Vec<RootVector> = self.mult.keys().cloned().collect();
        let lengths = roots::normalized_lengths(&roots);
        let mut out: BTreeMap<u32, u32> = BTreeMap::new();
        for (r, m) in &self.mult {
            let class = integral(&lengths[r])?;
            if let Some(prev) = out.insert(class, *m) {
                if prev != *m {
                    return Err(RestrictionError::InconsistentClassMultiplicity);
                }
            }
        }
        Ok(out)
    }

    /// Restricted roots vanishing at `a` (a point of `a` in the same coordinates).
    pub fn vanishing_at(&self, a: &[Rat]) -> Vec<(&RootVector, u32)> {
        self.mult.iter().filter(|(r, _)| dot(&r.0, a).is_zero()).map(|(r, m)| (r, *m)).collect()
    }
}

/// The shipped realizations use the standard inner product, which is
/// invariant for every irreducible type.
fn ambient_min_length(rs: &RootSystem) -> Rat {
    rs.roots().iter().map(|r| dot(&r.0, &r.0)).min().expect("nonempty root system")
}

/// Number of positive roots in each normalized squared-length class.
pub fn positive_class_counts(label: TypeLabel) -> Result<BTreeMap<u32, u64>, RestrictionError> {
    static CACHE: OnceLock<Mutex<HashMap<TypeLabel, BTreeMap<u32, u64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&label) {
        return Ok(hit.clone());
    }
    let rs = RootSystem::build(label.kind, label.rank)?;
    let min = ambient_min_length(&rs);
    let mut out: BTreeMap<u32, u64> = BTreeMap::new();
    for r in rs.positive() {
        *out.entry(integral(&(dot(&r.0, &r.0) / &min))?).or_default() += 1;
    }
    cache.lock().expect("cache lock").insert(label, out.clone());
    Ok(out)
}

fn integral(x: &Rat) -> Result<u32, RestrictionError> {
    if x.is_integer() && x.is_positive() {
        Ok(x.to_integer().try_into().map_err(|_| RestrictionError::NonIntegralLength(x.to_string()))?)
    } else {
        Err(RestrictionError::NonIntegralLength(x.to_string()))
    }
}

fn check_closed(bigroots: &[BigRoot]) -> Result<BTreeSet<&BigRoot>, RestrictionError> {
    if bigroots.is_empty() {
        return Err(RestrictionError::Empty);
    }
    let set: BTreeSet<&BigRoot> = bigroots.iter().collect();
    if bigroots.iter().any(|b| !set.contains(&b.neg())) {
        return Err(RestrictionError::NotNegationClosed);
    }
    if bigroots.iter().any(|b| !set.contains(&b.sigma())) {
        return Err(RestrictionError::NotSigmaStable);
    }
    Ok(set)
}

/// The projection `α_c ↦ α_c|_a`: nonzero a-parts with the number of big
/// roots over each; big roots with zero a-part are counted separately.
pub fn restrict(bigroots: &[BigRoot]) -> Result<RestrictedSystem, RestrictionError> {
    check_closed(bigroots)?;
    let a_dim = bigroots[0].a_part.len();
    let mut mult: BTreeMap<RootVector, u32> = BTreeMap::new();
    let mut m0 = 0;
    for b in bigroots {
        if b.a_part.len() != a_dim {
            return Err(RestrictionError::DimensionMismatch { expected: a_dim, got: b.a_part.len() });
        }
        if b.restricts_to_zero() {
            m0 += 1;
        } else {
            *mult.entry(RootVector(b.a_part.clone())).or_default() += 1;
        }
    }
    let mut sys = RestrictedSystem::from_weights(mult, a_dim)?;
    sys.m0_root_count = Some(m0);
    Ok(sys)
}

/// Sign partition of the positive big roots by `X ∈ t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    /// Positive big roots restricting to zero.
    pub delta_m: Vec<BigRoot>,
    pub delta_0: Vec<BigRoot>,
    pub delta_p: Vec<BigRoot>,
    pub delta_n: Vec<BigRoot>,
    pub x: Vec<Rat>,
    /// `X = 0`: every pairing vanishes.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZDim {
    pub dim: usize,
    pub degenerate: bool,
}

pub fn partition_by(bigroots: &[BigRoot], x: &[Rat]) -> Result<Partition, RestrictionError> {
    check_closed(bigroots)?;
    let t_dim = bigroots[0].t_part.len();
    if x.len() != t_dim {
        return Err(RestrictionError::DimensionMismatch { expected: t_dim, got: x.len() });
    }
    let mut p = Partition {
        delta_m: vec![],
        delta_0: vec![],
        delta_p: vec![],
        delta_n: vec![],
        x: x.to_vec(),
        degenerate: is_zero_vec(x),
    };
    let mut sorted: Vec<&BigRoot> = bigroots.iter().filter(|b| b.is_positive()).collect();
    sorted.sort();
    for b in sorted {
        let bucket = if b.restricts_to_zero() {
            &mut p.delta_m
        } else {
            let v = b.pair_t(x);
            if v.is_positive() {
                &mut p.delta_p
            } else if v.is_negative() {
                &mut p.delta_n
            } else {
                &mut p.delta_0
            }
        };
        bucket.push(b.clone());
    }
    Ok(p)
}

/// `dim Z = |Δ_p| + |Δ_n|`.
pub fn z_dim(p: &Partition) -> ZDim {
    if p.degenerate {
        return ZDim { dim: 0, degenerate: true };
    }
    ZDim { dim: p.delta_p.len() + p.delta_n.len(), degenerate: false }
}

/// Whether `σ` carries `Δ_p` bijectively onto `Δ_n`.
pub fn sigma_swap_check(p: &Partition) -> bool {
    let image: BTreeSet<BigRoot> = p.delta_p.iter().map(BigRoot::sigma).collect();
    let target: BTreeSet<BigRoot> = p.delta_n.iter().cloned().collect();
    image.len() == p.delta_p.len() && image == target
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = rat(1);
    v
}

fn weight_roots(weights: &[BigRoot], type_c: bool, short: bool) -> Vec<BigRoot> {
    let add = |x: &BigRoot, y: &BigRoot| {
        BigRoot::new(linalg::add_vec(&x.t_part, &y.t_part), linalg::add_vec(&x.a_part, &y.a_part))
    };
    let mut out = BTreeSet::new();
    for (i, wi) in weights.iter().enumerate() {
        for wj in &weights[i + 1..] {
            for s in [wi.clone(), wi.neg()] {
                for t in [wj.clone(), wj.neg()] {
                    out.insert(add(&s, &t));
                }
            }
        }
        if short {
            out.insert(wi.clone());
            out.insert(wi.neg());
        }
        if type_c {
            out.insert(add(wi, wi));
            out.insert(add(&wi.neg(), &wi.neg()));
        }
    }
    out.into_iter().collect()
}

/// Explicit big-root tables for the classical families with a model.
///
/// Coordinates: the a-part is a functional on `a` in a basis of length equal
/// to the real rank; the t-part is a functional on `t` (possibly in a
/// redundant spanning set of coordinates). `None` for compact and
/// exceptional forms.
pub fn big_root_model(key: &FormKey) -> Option<Vec<BigRoot>> {
    let p = *key.params.first()? as usize;
    let q = key.params.get(1).copied().unwrap_or(0) as usize;
    match key.family {
        Family::SlR => {
            // a = diag(x_1, .., x_{n-1}, -Σx); e_n restricts to (-1, .., -1).
            let n = p;
            let eps: Vec<Vec<Rat>> = (0..n)
                .map(|i| if i + 1 < n { unit(n - 1, i) } else { vec![rat(-1); n - 1] })
                .collect();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        out.push(BigRoot::new(vec![], linalg::sub_vec(&eps[i], &eps[j])));
                    }
                }
            }
            out.sort();
            Some(out)
        }
        Family::SuPq => {
            // ε_i = (f_i; s_i), ε_{n+1-i} = (-f_i; s_i) for i <= p, middle ε_k = (0; u_k).
            let n = p + q;
            let weights: Vec<BigRoot> = (0..n)
                .map(|i| {
                    if i < p {
                        BigRoot::new(unit(q, i), unit(p, i))
                    } else if i < q {
                        BigRoot::new(unit(q, i), vec![rat(0); p])
                    } else {
                        let j = n - 1 - i;
                        BigRoot::new(unit(q, j), linalg::neg_vec(&unit(p, j)))
                    }
                })
                .collect();
            let mut out = Vec::new();
            for (i, wi) in weights.iter().enumerate() {
                for (j, wj) in weights.iter().enumerate() {
                    if i != j {
                        out.push(BigRoot::new(
                            linalg::sub_vec(&wi.t_part, &wj.t_part),
                            linalg::sub_vec(&wi.a_part, &wj.a_part),
                        ));
                    }
                }
            }
            out.sort();
            Some(out)
        }
        Family::SoPq => {
            // ε_i = (0; f_i) for i <= p, remaining ε_j = (u_j; 0).
            let n = p + q;
            let m = n / 2;
            let t_dim = m - p;
            let weights: Vec<BigRoot> = (0..m)
                .map(|i| {
                    if i < p {
                        BigRoot::new(vec![rat(0); t_dim], unit(p, i))
                    } else {
                        BigRoot::new(unit(t_dim, i - p), vec![rat(0); p])
                    }
                })
                .collect();
            Some(weight_roots(&weights, false, n % 2 == 1))
        }
        Family::SpR => {
            let weights: Vec<BigRoot> = (0..p).map(|i| BigRoot::new(vec![], unit(p, i))).collect();
            Some(weight_roots(&weights, true, false))
        }
        Family::SpPq => {
            // ε_i = (f_i; s_i), ε_{p+i} = (f_i; -s_i), compact ε_k = (0; u_k).
            let weights: Vec<BigRoot> = (0..p + q)
                .map(|i| {
                    if i < p {
                        BigRoot::new(unit(q, i), unit(p, i))
                    } else if i < 2 * p {
                        BigRoot::new(linalg::neg_vec(&unit(q, i - p)), unit(p, i - p))
                    } else {
                        BigRoot::new(unit(q, i - p), vec![rat(0); p])
                    }
                })
                .collect();
            Some(weight_roots(&weights, true, false))
        }
        _ => None,
    }
}

/// Dimension of `t` in the model's coordinates.
pub fn t_dim(bigroots: &[BigRoot]) -> usize {
    bigroots.first().map_or(0, |b| b.t_part.len())
}
