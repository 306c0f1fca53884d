//! Exact linear algebra over the rationals.
//!
//! Everything here works on dense row-major `Vec<Vec<Rat>>` matrices. The
//! sizes involved are tiny (a few hundred rows at most), so clarity wins over
//! cache behaviour.

use num::{BigInt, BigRational, One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(k: &Rat, v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| k * x).collect()
}

pub fn neg_vec(v: &[Rat]) -> Vec<Rat> {
    v.iter().map(|x| -x).collect()
}

/// Sign of the first nonzero entry: `1`, `-1`, or `0` for the zero vector.
pub fn lex_sign(v: &[Rat]) -> i32 {
    for x in v {
        if x.is_positive() {
            return 1;
        }
        if x.is_negative() {
            return -1;
        }
    }
    0
}

/// Reduced row echelon form of `m` in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rat>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}` where `m` has `cols` columns.
pub fn nullspace(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Matrix times column vector.
pub fn mat_vec(m: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn transpose(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Coordinates of vectors with respect to a fixed, linearly independent
/// spanning list. Built once, then queried many times.
#[derive(Debug, Clone)]
pub struct Coordinates {
    /// rref of `[B^T | I]`, kept so membership and coordinates are one pass.
    reduced: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
    basis_len: usize,
    ambient: usize,
}

impl Coordinates {
    /// `basis` must be linearly independent; returns `None` otherwise.
    pub fn new(basis: &[Vec<Rat>]) -> Option<Self> {
        let k = basis.len();
        let ambient = basis.first().map_or(0, Vec::len);
        // Rows of the system B c = v, one per ambient coordinate.
        let mut aug: Vec<Vec<Rat>> = (0..ambient)
            .map(|i| {
                let mut row: Vec<Rat> = basis.iter().map(|b| b[i].clone()).collect();
                row.extend((0..ambient).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        let pivots = rref(&mut aug);
        let pivots: Vec<usize> = pivots.into_iter().filter(|&c| c < k).collect();
        if pivots.len() != k {
            return None;
        }
        Some(Self { reduced: aug, pivots, basis_len: k, ambient })
    }

    pub fn len(&self) -> usize {
        self.basis_len
    }

    pub fn is_empty(&self) -> bool {
        self.basis_len == 0
    }

    /// Coordinates of `v`, or `None` when `v` is outside the span.
    pub fn solve(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        debug_assert_eq!(v.len(), self.ambient);
        let k = self.basis_len;
        // Each reduced row expresses a combination of the original rows.
        let transformed: Vec<Rat> =
            self.reduced.iter().map(|row| dot(&row[k..], v)).collect();
        if transformed[self.pivots.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut c = vec![Rat::zero(); k];
        for (row, &pc) in self.pivots.iter().enumerate() {
            c[pc] = transformed[row].clone();
        }
        Some(c)
    }
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Greedy maximal linearly independent sublist, returning the chosen indices.
pub fn independent_subset(vectors: &[Vec<Rat>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        rows.push(v.clone());
        if rank(&rows) == rows.len() {
            chosen.push(i);
        } else {
            rows.pop();
        }
    }
    chosen
}

/// Rational roots of an integer-coefficient-free rational polynomial given as
/// `coeffs[i]` = coefficient of `x^i`. Multiplicities are not reported.
pub fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    let mut c: Vec<Rat> = coeffs.to_vec();
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    let mut roots = Vec::new();
    if c.len() <= 1 {
        return roots;
    }
    // Strip factors of x.
    let lead_zero = c.iter().take_while(|x| x.is_zero()).count();
    if lead_zero > 0 {
        roots.push(Rat::zero());
        c.drain(..lead_zero);
    }
    if c.len() <= 1 {
        return roots;
    }
    let lcm = c.iter().fold(BigInt::one(), |acc, x| num::integer::lcm(acc, x.denom().clone()));
    let ints: Vec<BigInt> = c.iter().map(|x| (x * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &(&d * &d) <= n {
            if (n % &d).is_zero() {
                out.push(d.clone());
                let q = n / &d;
                if q != d {
                    out.push(q);
                }
            }
            d += 1;
        }
        out
    };
    let eval = |x: &Rat| -> Rat {
        c.iter().rev().fold(Rat::zero(), |acc, k| acc * x + k)
    };
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for s in [1, -1] {
                let cand = Rat::new(&p * BigInt::from(s), q.clone());
                if !roots.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Characteristic polynomial `det(xI - m)` by Faddeev-LeVerrier; `coeffs[i]`
/// is the coefficient of `x^i`.
pub fn char_poly(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let identity = |k: &Rat| -> Vec<Vec<Rat>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { k.clone() } else { Rat::zero() }).collect())
            .collect()
    };
    let mut mk = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let prev = mat_mul(m, &mk);
        let shift = identity(&coeffs[n - k + 1]);
        mk = prev.iter().zip(&shift).map(|(a, b)| add_vec(a, b)).collect();
        let am = mat_mul(m, &mk);
        let tr = (0..n).fold(Rat::zero(), |acc, i| acc + &am[i][i]);
        coeffs[n - k] = -tr / rat(k as i64);
    }
    coeffs
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let inner = b.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for k in 0..inner {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&mat_vec(&a, &ns[0])));
    }

    #[test]
    fn coordinates_roundtrip() {
        let basis = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let coords = Coordinates::new(&basis).unwrap();
        let v = m(&[&[2, 5, 3]]).remove(0);
        assert_eq!(coords.solve(&v).unwrap(), vec![rat(2), rat(3)]);
        assert!(coords.solve(&m(&[&[1, 0, 0]])[0]).is_none());
        assert!(Coordinates::new(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), m(&[&[1, 0], &[0, 1]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn char_poly_and_roots() {
        // diag(1, -1, 0, 2)
        let a = m(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 2]]);
        let cp = char_poly(&a);
        let roots = rational_roots(&cp);
        assert_eq!(roots, vec![rat(-1), rat(0), rat(1), rat(2)]);
        // x^2 - 1/4
        let half = rational_roots(&[ratio(-1, 4), rat(0), rat(1)]);
        assert_eq!(half, vec![ratio(-1, 2), ratio(1, 2)]);
    }
}
