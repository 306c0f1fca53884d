//! Small real forms as explicit real matrix algebras, and an exact
//! computation of their Cartan decomposition and restricted roots.
//!
//! Complex and quaternionic families are realified, so every model lives in
//! `gl(N, R)` and the Cartan involution is `θ(X) = -Xᵀ` throughout.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::catalog::RealFormDescriptor;

use crate::forms::{Family, FormKey};
use crate::linalg::{self, rat, Coordinates, Rat};
use crate::restriction::{RestrictedSystem, RestrictionError};
use crate::roots::RootVector;

type Matrix = Vec<Vec<Rat>>;

/// Largest defining size (complex size for quaternionic families) accepted.
pub const MAX_SIZE: u32 = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("no matrix model for {0}")]
    Unsupported(String),
    #[error("{0}: basis is not closed under the bracket")]
    NotClosed(String),
    #[error("{0}: Cartan involution does not preserve the algebra")]
    ThetaNotInvariant(String),
    #[error("{name}: ad(a) is not diagonalizable over Q in the chosen frame")]
    IrrationalSpectrum { name: String },
    #[error("{name}: no maximal abelian subspace found in p")]
    NoCartanSubspace { name: String },
    #[error(transparent)]
    Restriction(#[from] RestrictionError),
}

#[derive(Debug, Clone)]
pub struct MatrixModel {
    pub name: String,
    pub basis: Vec<Matrix>,
    pub theta_fixed_dim: usize,
    pub ambient_size: usize,
}

fn zeros(n: usize) -> Matrix {
    vec![vec![Rat::zero(); n]; n]
}

fn identity(n: usize) -> Matrix {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rat::one();
    }
    m
}

fn diag(entries: &[i64]) -> Matrix {
    let mut m = zeros(entries.len());
    for (i, &e) in entries.iter().enumerate() {
        m[i][i] = rat(e);
    }
    m
}

/// Block matrix from a grid of equally sized square blocks.
fn blocks(grid: &[Vec<Matrix>]) -> Matrix {
    let b = grid[0][0].len();
    let n = grid.len() * b;
    let mut m = zeros(n);
    for (bi, row) in grid.iter().enumerate() {
        for (bj, blk) in row.iter().enumerate() {
            for i in 0..b {
                for j in 0..b {
                    m[bi * b + i][bj * b + j] = blk[i][j].clone();
                }
            }
        }
    }
    m
}

fn scale(k: i64, m: &Matrix) -> Matrix {
    m.iter().map(|r| linalg::scale_vec(&rat(k), r)).collect()
}

fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(x, y)| linalg::sub_vec(x, y)).collect()
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().zip(b).map(|(x, y)| linalg::add_vec(x, y)).collect()
}

pub fn bracket(a: &Matrix, b: &Matrix) -> Matrix {
    sub(&linalg::mat_mul(a, b), &linalg::mat_mul(b, a))
}

fn flatten(m: &Matrix) -> Vec<Rat> {
    m.iter().flatten().cloned().collect()
}

fn unflatten(v: &[Rat], n: usize) -> Matrix {
    v.chunks(n).map(<[Rat]>::to_vec).collect()
}

/// `(A, B) ↦ [[A, -B], [B, A]]`, the realification of `A + iB`.
fn realify_structure(n: usize) -> Matrix {
    let z = zeros(n);
    blocks(&[vec![z.clone(), scale(-1, &identity(n))], vec![identity(n), z]])
}

/// Linear constraints on the `N²` entries of `X`.
struct Constraints {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl Constraints {
    fn new(n: usize) -> Self {
        Self { n, rows: Vec::new() }
    }

    /// Each entry of `f(E_ij)` is a linear functional of `X`; collect them.
    fn linear_map(&mut self, f: impl Fn(&Matrix) -> Matrix) {
        let n = self.n;
        let images: Vec<Vec<Rat>> = (0..n * n)
            .map(|k| {
                let mut e = zeros(n);
                e[k / n][k % n] = Rat::one();
                flatten(&f(&e))
            })
            .collect();
        for out in 0..n * n {
            let row: Vec<Rat> = images.iter().map(|img| img[out].clone()).collect();
            if !linalg::is_zero_vec(&row) {
                self.rows.push(row);
            }
        }
    }

    fn commutes_with(&mut self, j: &Matrix) {
        self.linear_map(|x| bracket(x, j));
    }

    /// `Xᵀ S + S X = 0`.
    fn preserves(&mut self, s: &Matrix) {
        self.linear_map(|x| add(&linalg::mat_mul(&linalg::transpose(x), s), &linalg::mat_mul(s, x)));
    }

    /// `tr(M X) = 0`.
    fn trace_zero(&mut self, m: &Matrix) {
        let n = self.n;
        let row: Vec<Rat> = (0..n * n).map(|k| m[k % n][k / n].clone()).collect();
        self.rows.push(row);
    }

    fn solve(&self) -> Vec<Matrix> {
        linalg::nullspace(&self.rows, self.n * self.n).iter().map(|v| unflatten(v, self.n)).collect()
    }
}

fn signature(p: usize, q: usize) -> Vec<i64> {
    std::iter::repeat_n(1, p).chain(std::iter::repeat_n(-1, q)).collect()
}

/// Defining-representation basis of a small classical real form.
pub fn realize(key: &FormKey) -> Result<MatrixModel, OracleError> {
    let unsupported = || OracleError::Unsupported(key.to_string());
    let p = *key.params.first().ok_or_else(unsupported)? as usize;
    let q = key.params.get(1).copied().unwrap_or(0) as usize;
    let size = match key.family {
        Family::SlR => p,
        Family::SoPq | Family::SuPq => p + q,
        Family::SpR => 2 * p,
        Family::SpPq => 2 * (p + q),
        _ => return Err(unsupported()),
    };
    if size as u32 > MAX_SIZE || key.clone().canonical().is_err() {
        return Err(unsupported());
    }
    let (n, c) = match key.family {
        Family::SlR => {
            let mut c = Constraints::new(p);
            c.trace_zero(&identity(p));
            (p, c)
        }
        Family::SoPq => {
            let mut c = Constraints::new(size);
            c.preserves(&diag(&signature(p, q)));
            (size, c)
        }
        Family::SpR => {
            let z = zeros(p);
            let omega = blocks(&[vec![z.clone(), identity(p)], vec![scale(-1, &identity(p)), z]]);
            let mut c = Constraints::new(size);
            c.preserves(&omega);
            (size, c)
        }
        Family::SuPq => {
            let n = 2 * size;
            let jc = realify_structure(size);
            let s = diag(&[signature(p, q), signature(p, q)].concat());
            let mut c = Constraints::new(n);
            c.commutes_with(&jc);
            c.preserves(&s);
            c.trace_zero(&identity(n));
            c.trace_zero(&jc);
            (n, c)
        }
        Family::SpPq => {
            // C^{2m} with the antilinear j: v ↦ Ω v̄, realified.
            let m = p + q;
            let n = 2 * size;
            let z = zeros(m);
            let omega = blocks(&[vec![z.clone(), scale(-1, &identity(m))], vec![identity(m), z]]);
            let zz = zeros(size);
            let jq = blocks(&[vec![omega.clone(), zz.clone()], vec![zz, scale(-1, &omega)]]);
            let sig = signature(p, q);
            let s = diag(&[sig.clone(), sig.clone(), sig.clone(), sig].concat());
            let mut c = Constraints::new(n);
            c.commutes_with(&realify_structure(size));
            c.commutes_with(&jq);
            c.preserves(&s);
            (n, c)
        }
        _ => unreachable!(),
    };
    let basis = c.solve();
    let name = key.to_string();
    let model = MatrixModel { name: name.clone(), theta_fixed_dim: 0, ambient_size: n, basis };
    let coords = model.coordinates();
    for (i, a) in model.basis.iter().enumerate() {
        for b in &model.basis[i + 1..] {
            if coords.solve(&flatten(&bracket(a, b))).is_none() {
                return Err(OracleError::NotClosed(name));
            }
        }
    }
    let (k, _) = cartan_split(&model)?;
    Ok(MatrixModel { theta_fixed_dim: k.len(), ..model })
}

fn theta(x: &Matrix) -> Matrix {
    scale(-1, &linalg::transpose(x))
}

impl MatrixModel {
    fn coordinates(&self) -> Coordinates {
        Coordinates::new(&self.basis.iter().map(flatten).collect::<Vec<_>>()).expect("nullspace basis is independent")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn independent(ms: Vec<Matrix>) -> Vec<Matrix> {
    let flat: Vec<Vec<Rat>> = ms.iter().map(flatten).collect();
    linalg::independent_subset(&flat).into_iter().map(|i| ms[i].clone()).collect()
}

/// Bases of `k` (θ-fixed) and `p` (θ = -1).
pub fn cartan_split(m: &MatrixModel) -> Result<(Vec<Matrix>, Vec<Matrix>), OracleError> {
    let coords = m.coordinates();
    if m.basis.iter().any(|b| coords.solve(&flatten(&theta(b))).is_none()) {
        return Err(OracleError::ThetaNotInvariant(m.name.clone()));
    }
    let k = independent(m.basis.iter().map(|b| sub(b, &linalg::transpose(b))).collect());
    let p = independent(m.basis.iter().map(|b| add(b, &linalg::transpose(b))).collect());
    Ok((k, p))
}

pub fn cartan_dims(m: &MatrixModel) -> Result<(usize, usize), OracleError> {
    let (k, p) = cartan_split(m)?;
    Ok((k.len(), p.len()))
}

/// Distinct rational eigenvalues of `x`, or `None` unless `x` is
/// diagonalizable over Q.
fn rational_spectrum(x: &Matrix) -> Option<Vec<Rat>> {
    let n = x.len();
    let roots = linalg::rational_roots(&linalg::char_poly(x));
    let total: usize = roots
        .iter()
        .map(|l| {
            let shifted = sub(x, &identity(n).iter().map(|r| linalg::scale_vec(l, r)).collect());
            n - linalg::rank(&shifted)
        })
        .sum();
    (total == n).then_some(roots)
}

/// Elements of span(p) commuting with every element of `a`.
fn centralizer_in(p: &[Matrix], a: &[Matrix]) -> Vec<Matrix> {
    if a.is_empty() {
        return p.to_vec();
    }
    let cols: Vec<Vec<Rat>> = p.iter().map(|y| a.iter().flat_map(|x| flatten(&bracket(x, y))).collect()).collect();
    let rows = linalg::transpose(&cols);
    linalg::nullspace(&rows, p.len())
        .iter()
        .map(|c| p.iter().zip(c).fold(zeros(p[0].len()), |acc, (y, k)| add(&acc, &y.iter().map(|r| linalg::scale_vec(k, r)).collect())))
        .collect()
}

fn in_span(span: &[Matrix], x: &Matrix) -> bool {
    let mut rows: Vec<Vec<Rat>> = span.iter().map(flatten).collect();
    let r = linalg::rank(&rows);
    rows.push(flatten(x));
    linalg::rank(&rows) == r
}

/// Depth-first extension of an abelian set inside `p` until its centralizer
/// in `p` equals its span; candidates are the centralizer's basis vectors,
/// and only elements with rational spectrum are accepted.
fn extend_abelian(p: &[Matrix], a: &mut Vec<Matrix>) -> bool {
    let c = centralizer_in(p, a);
    let new: Vec<Matrix> = c.into_iter().filter(|x| !in_span(a, x)).collect();
    if new.is_empty() {
        return true;
    }
    for x in new {
        if rational_spectrum(&x).is_none() {
            continue;
        }
        a.push(x);
        if extend_abelian(p, a) {
            return true;
        }
        a.pop();
    }
    false
}

/// A maximal abelian subspace of `p` with rational ad-spectrum.
pub fn cartan_subspace(m: &MatrixModel) -> Result<Vec<Matrix>, OracleError> {
    let (_, p) = cartan_split(m)?;
    let mut a = Vec::new();
    if extend_abelian(&p, &mut a) {
        Ok(a)
    } else {
        Err(OracleError::NoCartanSubspace { name: m.name.clone() })
    }
}

/// Matrix of `ad x` in the model's basis (columns are images).
fn ad_matrix(m: &MatrixModel, coords: &Coordinates, x: &Matrix) -> Matrix {
    let cols: Vec<Vec<Rat>> =
        m.basis.iter().map(|b| coords.solve(&flatten(&bracket(x, b))).expect("closed under bracket")).collect();
    linalg::transpose(&cols)
}

/// Intersection of span(`v`) with `ker(ad - μ)`, in model coordinates.
fn eigen_refine(ad: &Matrix, v: &[Vec<Rat>], mu: &Rat) -> Vec<Vec<Rat>> {
    let images: Vec<Vec<Rat>> =
        v.iter().map(|x| linalg::sub_vec(&linalg::mat_vec(ad, x), &linalg::scale_vec(mu, x))).collect();
    let rows = linalg::transpose(&images);
    linalg::nullspace(&rows, v.len())
        .iter()
        .map(|c| v.iter().zip(c).fold(vec![Rat::zero(); ad.len()], |acc, (x, k)| linalg::add_vec(&acc, &linalg::scale_vec(k, x))))
        .collect()
}

/// Restricted roots and multiplicities from the simultaneous eigenspaces of
/// `ad(a)`; weights are written as values on the chosen basis of `a`.
pub fn restricted_spectrum(m: &MatrixModel) -> Result<RestrictedSystem, OracleError> {
    let a = cartan_subspace(m)?;
    let coords = m.coordinates();
    let irrational = || OracleError::IrrationalSpectrum { name: m.name.clone() };
    let dim = m.dim();
    let full: Vec<Vec<Rat>> = (0..dim).map(|i| (0..dim).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect();
    let mut spaces: Vec<(Vec<Rat>, Vec<Vec<Rat>>)> = vec![(vec![], full)];
    for x in &a {
        let eig = rational_spectrum(x).ok_or_else(irrational)?;
        let mut diffs: Vec<Rat> = eig.iter().flat_map(|l| eig.iter().map(move |k| l - k)).collect();
        diffs.sort();
        diffs.dedup();
        let ad = ad_matrix(m, &coords, x);
        let mut next = Vec::new();
        for (w, v) in &spaces {
            let mut found = 0;
            for mu in &diffs {
                let e = eigen_refine(&ad, v, mu);
                if !e.is_empty() {
                    found += e.len();
                    let mut w2 = w.clone();
                    w2.push(mu.clone());
                    next.push((w2, e));
                }
            }
            if found != v.len() {
                return Err(irrational());
            }
        }
        spaces = next;
    }
    let mut mult = BTreeMap::new();
    let mut zero_dim = 0;
    for (w, v) in spaces {
        if linalg::is_zero_vec(&w) {
            zero_dim += v.len();
        } else {
            mult.insert(RootVector(w), v.len() as u32);
        }
    }
    let mut sys = RestrictedSystem::from_weights(mult, a.len())?;
    sys.m0_dim = Some((zero_dim - a.len()) as u64);
    Ok(sys)
}

/// Models checked by the catalog audit.
pub const SHIPPED_MODELS: &[&str] = &[
    "sl(2,R)", "sl(3,R)", "sl(4,R)", "su(1,2)", "su(2,2)", "su(1,3)", "so(2,3)", "so(1,3)", "so(1,4)", "so(2,4)",
    "so(3,3)", "sp(2,R)", "sp(3,R)", "sp(1,1)",
];

/// The invariants compared between the catalog and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub sigma: Option<String>,
    pub mult: BTreeMap<u32, u32>,
    pub real_rank: usize,
    pub d: u64,
    pub dim_k: u64,
    pub m0_dim: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub name: String,
    pub catalog: Summary,
    pub oracle: Summary,
    pub agree: bool,
}

fn summarize(sys: &RestrictedSystem, dim_k: u64) -> Result<Summary, OracleError> {
    Ok(Summary {
        sigma: sys.label().map(|l| l.canonical().to_string()),
        mult: sys.class_multiplicities()?,
        real_rank: sys.real_rank(),
        d: sys.iwasawa_d(),
        dim_k,
        m0_dim: sys.m0_dim,
    })
}

/// Runs the oracle on `desc` and compares every shared invariant exactly.
pub fn compare(desc: &RealFormDescriptor) -> Result<Agreement, OracleError> {
    let model = realize(&desc.key)?;
    let (k, p) = cartan_dims(&model)?;
    let sys = restricted_spectrum(&model)?;
    let oracle = Summary { d: p as u64, ..summarize(&sys, k as u64)? };
    let catalog = match desc.restricted_system() {
        Some(cs) => summarize(&cs, desc.dim_k)?,
        None => return Err(OracleError::Unsupported(desc.name.clone())),
    };
    let agree = catalog == oracle && sys.iwasawa_d() == p as u64;
    Ok(Agreement { name: desc.name.clone(), catalog, oracle, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::{RootType, TypeLabel};

    fn model(name: &str) -> MatrixModel {
        realize(&FormKey::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn basis_sizes() {
        let m = model("su(1,2)");
        assert_eq!((m.dim(), m.ambient_size), (8, 6));
        let m = model("so(2,3)");
        assert_eq!((m.dim(), m.ambient_size), (10, 5));
        let m = model("sp(2,R)");
        assert_eq!((m.dim(), m.ambient_size), (10, 4));
        assert_eq!(model("sp(1,1)").dim(), 10);
    }

    #[test]
    fn cartan_dimensions() {
        assert_eq!(cartan_dims(&model("su(1,2)")).unwrap(), (4, 4));
        assert_eq!(cartan_dims(&model("so(2,3)")).unwrap(), (4, 6));
        assert_eq!(cartan_dims(&model("sl(3,R)")).unwrap(), (3, 5));
        assert_eq!(model("sl(3,R)").theta_fixed_dim, 3);
    }

    #[test]
    fn su12_spectrum() {
        let s = restricted_spectrum(&model("su(1,2)")).unwrap();
        assert_eq!(s.label(), Some(TypeLabel::new(RootType::BC, 1)));
        assert_eq!(s.real_rank(), 1);
        let c = s.class_multiplicities().unwrap();
        assert_eq!(c, BTreeMap::from([(1, 2), (4, 1)]));
        assert_eq!(s.m0_dim, Some(1));
    }

    #[test]
    fn sl3_spectrum() {
        let s = restricted_spectrum(&model("sl(3,R)")).unwrap();
        assert_eq!(s.label(), Some(TypeLabel::new(RootType::A, 2)));
        assert!(s.multiplicities().values().all(|&m| m == 1));
        assert_eq!(s.m0_dim, Some(0));
    }

    #[test]
    fn sp11_is_rank_one_mult_three() {
        let s = restricted_spectrum(&model("sp(1,1)")).unwrap();
        assert_eq!(s.real_rank(), 1);
        assert_eq!(s.class_multiplicities().unwrap(), BTreeMap::from([(1, 3)]));
        assert_eq!(s.iwasawa_d(), 4);
    }

    #[test]
    fn su22_agrees_with_catalog() {
        let a = compare(crate::catalog::Catalog::builtin().lookup("su(2,2)").unwrap()).unwrap();
        assert!(a.agree, "{a:?}");
        assert_eq!(a.oracle.sigma.as_deref(), Some("B2"));
        assert_eq!(a.oracle.mult, BTreeMap::from([(1, 2), (2, 1)]));
    }

    #[test]
    fn rejects_large_or_exceptional() {
        assert!(matches!(realize(&FormKey::parse("sl(8,R)").unwrap()), Err(OracleError::Unsupported(_))));
        assert!(matches!(realize(&FormKey::parse("g2(2)").unwrap()), Err(OracleError::Unsupported(_))));
    }
}
