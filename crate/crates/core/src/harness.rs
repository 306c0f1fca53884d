//! Seeded property harness for the three root-system facts the engine
//! relies on: highest-root dominance, the negative-pairing sum rule, and
//! that two nonzero vectors never have vanishing sets covering `Δ`.

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::{ratio, Rat};
use crate::roots::{ChamberVector, RootError, RootSystem, RootType, TypeLabel};

/// Largest rank the harness enumerates (E8 is the largest exceptional).
pub const MAX_RANK_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub system: String,
    pub check: &'static str,
    pub cases: usize,
    pub counterexamples: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Every irreducible type of rank at most `cap`, including BC.
pub fn systems(cap: usize) -> Result<Vec<TypeLabel>, RootError> {
    if cap == 0 || cap > MAX_RANK_CAP {
        return Err(RootError::InvalidType { label: "rank cap".into(), rank: cap });
    }
    use RootType::*;
    let mut out = Vec::new();
    for kind in [A, B, C, D, E, F, G, BC] {
        for rank in 1..=cap {
            if kind.is_valid_rank(rank) {
                out.push(TypeLabel::new(kind, rank));
            }
        }
    }
    Ok(out)
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    ratio(rng.gen_range(-20..=20), rng.gen_range(1..=20))
}

fn random_nonzero(rs: &RootSystem, rng: &mut ChaCha8Rng) -> ChamberVector {
    loop {
        let c: Vec<Rat> = (0..rs.rank()).map(|_| random_rat(rng)).collect();
        if c.iter().any(|x| !x.is_zero()) {
            return rs.from_coweight_coords(&c).expect("rank-sized coordinates");
        }
    }
}

fn random_interior(rs: &RootSystem, rng: &mut ChaCha8Rng) -> ChamberVector {
    let c: Vec<Rat> = (0..rs.rank()).map(|_| ratio(rng.gen_range(1..=20), rng.gen_range(1..=20))).collect();
    rs.from_coweight_coords(&c).expect("rank-sized coordinates")
}

fn rng_for(seed: u64, label: TypeLabel, check: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = label.kind as u64;
    rng.set_stream((kind << 32) | ((label.rank as u64) << 8) | check);
    rng
}

/// Cover check over all ordered pairs of fundamental coweights plus
/// `samples` random nonzero pairs; a counterexample is a pair returning true.
pub fn lemma_cover(label: TypeLabel, samples: usize, seed: u64) -> Result<LemmaReport, RootError> {
    let rs = RootSystem::build(label.kind, label.rank)?;
    let mut rng = rng_for(seed, label, 8);
    let w = rs.fundamental_coweights();
    let mut pairs: Vec<(ChamberVector, ChamberVector)> =
        w.iter().flat_map(|x| w.iter().map(move |h| (x.clone(), h.clone()))).collect();
    for _ in 0..samples {
        let x = random_nonzero(&rs, &mut rng);
        let h = random_nonzero(&rs, &mut rng);
        pairs.push((x, h));
    }
    let mut counterexamples = Vec::new();
    for (x, h) in &pairs {
        if rs.cover_check(x, h)? {
            counterexamples.push(format!("X={} H={}", fmt_vec(&x.0), fmt_vec(&h.0)));
        }
    }
    Ok(LemmaReport { system: label.to_string(), check: "cover", cases: pairs.len(), counterexamples })
}

/// Dominance at the sum of fundamental coweights plus `samples` random
/// interior points.
pub fn lemma_dominance(label: TypeLabel, samples: usize, seed: u64) -> Result<LemmaReport, RootError> {
    let rs = RootSystem::build(label.kind, label.rank)?;
    let mut rng = rng_for(seed, label, 6);
    let ones = vec![Rat::one(); rs.rank()];
    let mut points = vec![rs.from_coweight_coords(&ones)?];
    points.extend((0..samples).map(|_| random_interior(&rs, &mut rng)));
    let mut counterexamples = Vec::new();
    for a in &points {
        if !rs.dominance_check(a)? {
            counterexamples.push(format!("A={}", fmt_vec(&a.0)));
        }
    }
    Ok(LemmaReport { system: label.to_string(), check: "dominance", cases: points.len(), counterexamples })
}

/// Sum rule over every ordered pair of roots with nonzero sum.
pub fn sum_rule(label: TypeLabel) -> Result<LemmaReport, RootError> {
    let rs = RootSystem::build(label.kind, label.rank)?;
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    for g1 in rs.roots() {
        for g2 in rs.roots() {
            match rs.sum_rule_check(g1, g2) {
                Err(RootError::ZeroSum) => continue,
                Err(e) => return Err(e),
                Ok(ok) => {
                    cases += 1;
                    if !ok {
                        counterexamples.push(format!("{g1} + {g2}"));
                    }
                }
            }
        }
    }
    Ok(LemmaReport { system: label.to_string(), check: "sum_rule", cases, counterexamples })
}

fn fmt_vec(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// All three checks for every system up to `rank_cap`, in a fixed order.
pub fn run_all(rank_cap: usize, samples: usize, seed: u64) -> Result<Vec<LemmaReport>, RootError> {
    let labels = systems(rank_cap)?;
    let per: Vec<Result<Vec<LemmaReport>, RootError>> = labels
        .par_iter()
        .map(|&l| Ok(vec![lemma_cover(l, samples, seed)?, lemma_dominance(l, 100, seed)?, sum_rule(l)?]))
        .collect();
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_four_systems() {
        let names: Vec<String> = systems(4).unwrap().iter().map(ToString::to_string).collect();
        for want in ["A1", "A4", "B2", "C3", "D4", "F4", "G2", "BC1", "BC4"] {
            assert!(names.contains(&want.to_string()), "{want}");
        }
        assert!(!names.iter().any(|n| n.starts_with('E')));
        assert!(systems(0).is_err() && systems(9).is_err());
    }

    #[test]
    fn small_runs_are_clean_and_deterministic() {
        let a = run_all(2, 50, 7).unwrap();
        assert!(a.iter().all(LemmaReport::passed));
        assert_eq!(a, run_all(2, 50, 7).unwrap());
        let cover = a.iter().find(|r| r.system == "G2" && r.check == "cover").unwrap();
        assert_eq!(cover.cases, 4 + 50);
    }

    #[test]
    fn different_seeds_sample_differently() {
        let l = TypeLabel::new(RootType::A, 2);
        let rs = RootSystem::build(l.kind, l.rank).unwrap();
        let x = random_nonzero(&rs, &mut rng_for(1, l, 8));
        let y = random_nonzero(&rs, &mut rng_for(2, l, 8));
        assert_ne!(x, y);
    }
}
