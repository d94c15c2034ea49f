//! Checks of the five modulus postulates
//!
//! 1. `N(0) = 0`
//! 2. `N(φ) > 0` for `φ ≠ 0`
//! 3. `N(rφ) = |r| N(φ)`
//! 4. `N(φ₁ + φ₂) ≤ N(φ₁) + N(φ₂)`
//! 5. `N(φ₁φ₂) = N(φ₁) N(φ₂)`
//!
//! against the Euclidean norm. Postulate 5 fails on the full algebra (`ij = 0`
//! while `N(i)N(j) = 1`) and is probed separately on the fixed-azimuth
//! sub-algebra, where it holds.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{GcAlgebra, GcNumber, SgcNumber};
use crate::algebra::REL_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsOnProbes,
    Fails,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdlerWitness {
    pub operands: Vec<GcNumber>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PostulateResult {
    pub verdict: Verdict,
    pub probes: usize,
    /// First violating probe, if any.
    pub witness: Option<AdlerWitness>,
    /// Gap of the witness for a failure; largest relative gap seen otherwise.
    pub discrepancy: f64,
}

impl PostulateResult {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::HoldsOnProbes
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdlerReport {
    pub postulate_1: PostulateResult,
    pub postulate_2: PostulateResult,
    pub postulate_3: PostulateResult,
    pub postulate_4: PostulateResult,
    pub postulate_5: PostulateResult,
    /// Postulate 5 restricted to same-azimuth pairs of the sub-algebra.
    pub postulate_5_sgc: PostulateResult,
}

/// Accumulates probes for one postulate.
struct Tally {
    probes: usize,
    witness: Option<(AdlerWitness, f64)>,
    worst: f64,
}

impl Tally {
    fn new() -> Self {
        Self {
            probes: 0,
            witness: None,
            worst: 0.0,
        }
    }

    /// `gap` is the relative gap of a passing probe, or the absolute gap when
    /// `violated`.
    fn record(&mut self, violated: bool, gap: f64, witness: impl FnOnce() -> AdlerWitness) {
        self.probes += 1;
        if violated {
            if self.witness.is_none() {
                self.witness = Some((witness(), gap));
            }
        } else {
            self.worst = self.worst.max(gap);
        }
    }

    fn finish(self) -> PostulateResult {
        match self.witness {
            Some((w, gap)) => PostulateResult {
                verdict: Verdict::Fails,
                probes: self.probes,
                witness: Some(w),
                discrepancy: gap,
            },
            None => PostulateResult {
                verdict: Verdict::HoldsOnProbes,
                probes: self.probes,
                witness: None,
                discrepancy: self.worst,
            },
        }
    }
}

fn random_gc(rng: &mut ChaCha8Rng) -> GcNumber {
    GcNumber::new(
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
        rng.gen_range(-10.0..10.0),
    )
}

fn rel_gap(lhs: f64, rhs: f64) -> f64 {
    let scale = lhs.abs().max(rhs.abs());
    if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).abs() / scale
    }
}

const BASIS: [GcNumber; 3] = [GcNumber::ONE, GcNumber::I, GcNumber::J];

impl GcAlgebra {
    /// Runs all five postulates with `samples` random probes each.
    ///
    /// Postulate 5 first scans all basis pairs, so a basis-level failure such
    /// as `(i, j)` is the reported witness.
    pub fn adler_check(&self, samples: usize, seed: u64) -> AdlerReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let mut p1 = Tally::new();
        let n0 = GcNumber::ZERO.norm();
        p1.record(n0 != 0.0, n0, || AdlerWitness {
            operands: vec![GcNumber::ZERO],
            scalar: None,
            lhs: n0,
            rhs: 0.0,
        });

        let mut p2 = Tally::new();
        let nonzero = BASIS
            .iter()
            .copied()
            .chain((0..samples).map(|_| random_gc(&mut rng)))
            .filter(|q| *q != GcNumber::ZERO)
            .collect::<Vec<_>>();
        for q in nonzero {
            let n = q.norm();
            p2.record(n <= 0.0, 0.0, || AdlerWitness {
                operands: vec![q],
                scalar: None,
                lhs: n,
                rhs: 0.0,
            });
        }

        let mut p3 = Tally::new();
        let fixed = (-2.0, GcNumber::new(1.0, 1.0, 1.0));
        let random = (0..samples).map(|_| (rng.gen_range(-10.0..10.0), random_gc(&mut rng)));
        for (r, q) in std::iter::once(fixed).chain(random.collect::<Vec<_>>()) {
            let lhs = q.scale(r).norm();
            let rhs = r.abs() * q.norm();
            let gap = rel_gap(lhs, rhs);
            let violated = gap > REL_TOL;
            p3.record(violated, if violated { (lhs - rhs).abs() } else { gap }, || {
                AdlerWitness {
                    operands: vec![q],
                    scalar: Some(r),
                    lhs,
                    rhs,
                }
            });
        }

        let mut p4 = Tally::new();
        for _ in 0..samples {
            let (x, y) = (random_gc(&mut rng), random_gc(&mut rng));
            let lhs = (x + y).norm();
            let rhs = x.norm() + y.norm();
            let violated = lhs > rhs * (1.0 + REL_TOL);
            let slack = if rhs == 0.0 { 0.0 } else { ((lhs - rhs) / rhs).max(0.0) };
            p4.record(violated, if violated { lhs - rhs } else { slack }, || {
                AdlerWitness {
                    operands: vec![x, y],
                    scalar: None,
                    lhs,
                    rhs,
                }
            });
        }

        let mut p5 = Tally::new();
        let basis_pairs: Vec<(GcNumber, GcNumber)> = BASIS
            .iter()
            .flat_map(|&x| BASIS.iter().map(move |&y| (x, y)))
            .collect();
        let random_pairs: Vec<(GcNumber, GcNumber)> = (0..samples)
            .map(|_| (random_gc(&mut rng), random_gc(&mut rng)))
            .collect();
        for (x, y) in basis_pairs.into_iter().chain(random_pairs) {
            self.probe_multiplicative(&mut p5, x, y);
        }

        let mut p5_sgc = Tally::new();
        for _ in 0..samples {
            let phi = rng.gen_range(0.0..TAU);
            let x = SgcNumber::new(rng.gen_range(0.0..10.0), rng.gen_range(-PI..PI), phi)
                .expect("sampled R is nonnegative");
            let y = SgcNumber::new(rng.gen_range(0.0..10.0), rng.gen_range(-PI..PI), phi)
                .expect("sampled R is nonnegative");
            self.probe_multiplicative(&mut p5_sgc, x.to_gc(), y.to_gc());
        }

        AdlerReport {
            postulate_1: p1.finish(),
            postulate_2: p2.finish(),
            postulate_3: p3.finish(),
            postulate_4: p4.finish(),
            postulate_5: p5.finish(),
            postulate_5_sgc: p5_sgc.finish(),
        }
    }

    fn probe_multiplicative(&self, tally: &mut Tally, x: GcNumber, y: GcNumber) {
        let lhs = self.mul(x, y).norm();
        let rhs = x.norm() * y.norm();
        let gap = rel_gap(lhs, rhs);
        let violated = gap > REL_TOL;
        tally.record(violated, if violated { (lhs - rhs).abs() } else { gap }, || {
            AdlerWitness {
                operands: vec![x, y],
                scalar: None,
                lhs,
                rhs,
            }
        });
    }
}

pub fn adler_check(samples: usize, seed: u64) -> AdlerReport {
    GcAlgebra::standard().adler_check(samples, seed)
}
