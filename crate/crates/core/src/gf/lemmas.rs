//! Brute-force oracles for the algebraic identities the construction relies on.
//!
//! Each oracle searches for an assignment that satisfies a lemma's hypotheses
//! but violates its conclusion. Fields with `q <= EXHAUSTIVE_MAX_Q` are
//! searched exhaustively. Larger fields are sampled: every sample fixes all
//! variables but one free coordinate at random, then scans that coordinate
//! over the whole field and solves the linear hypothesis for the last
//! variable, so each sample tests every hypothesis-satisfying completion on a
//! one-dimensional fibre instead of hoping a random tuple lands on one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{FieldContext, FieldElement};

pub const EXHAUSTIVE_MAX_Q: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma {
    /// a weighted two-term quadratic identity implies the difference identity
    Ruzsa,
    /// `{(a, a^2)}` is a Sidon set
    Sidon,
    /// three-term weighted cycle forces `a_1 = a_2 = a_3`
    Triangle,
    /// three solutions of a weighted pair system contain a repeated pair
    ThreePairs,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub lemma: Lemma,
    pub assignment: Vec<(&'static str, FieldElement)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleRun {
    pub lemma: Lemma,
    pub exhaustive: bool,
    /// Hypothesis-satisfying assignments whose conclusion was checked.
    pub instances: u64,
    pub counterexample: Option<Counterexample>,
}

/// `None` when the hypotheses fail, otherwise whether the conclusion holds.
pub fn ruzsa_holds(f: &FieldContext, v: [FieldElement; 8]) -> Option<bool> {
    let [al, be, ga, de, a1, a2, a3, a4] = v;
    if v.iter().any(|x| x.is_zero()) || f.add(al, be) != f.add(ga, de) {
        return None;
    }
    let lin = |x: FieldElement, y: FieldElement, s: FieldElement, t: FieldElement| f.add(f.mul(x, s), f.mul(y, t));
    if lin(al, be, a1, a2) != lin(ga, de, a3, a4) {
        return None;
    }
    if lin(al, be, f.square(a1), f.square(a2)) != lin(ga, de, f.square(a3), f.square(a4)) {
        return None;
    }
    let lhs = f.mul(f.mul(al, be), f.square(f.sub(a1, a2)));
    let rhs = f.mul(f.mul(ga, de), f.square(f.sub(a3, a4)));
    Some(lhs == rhs)
}

pub fn sidon_holds(f: &FieldContext, v: [FieldElement; 4]) -> Option<bool> {
    let [a1, a2, a3, a4] = v;
    if v.iter().any(|x| x.is_zero())
        || f.add(a1, a2) != f.add(a3, a4)
        || f.add(f.square(a1), f.square(a2)) != f.add(f.square(a3), f.square(a4))
    {
        return None;
    }
    Some((a1 == a3 && a2 == a4) || (a1 == a4 && a2 == a3))
}

pub fn triangle_holds(f: &FieldContext, v: [FieldElement; 6]) -> Option<bool> {
    let [al, be, ga, a1, a2, a3] = v;
    if al == be || be == ga || al == ga || a1.is_zero() || a2.is_zero() || a3.is_zero() {
        return None;
    }
    let cyc = |x1: FieldElement, x2: FieldElement, x3: FieldElement| {
        f.add(f.add(f.mul(al, f.sub(x2, x1)), f.mul(be, f.sub(x3, x2))), f.mul(ga, f.sub(x1, x3)))
    };
    if !cyc(a1, a2, a3).is_zero() || !cyc(f.square(a1), f.square(a2), f.square(a3)).is_zero() {
        return None;
    }
    Some(a1 == a2 && a2 == a3)
}

/// Hypotheses: `alpha*a_i + beta*b_i` and `alpha*a_i^2 + beta*b_i^2` are each
/// constant over i = 1..3. Conclusion: two indices carry the same pair,
/// `(a_i, b_i) = (a_j, b_j)`.
pub fn threepairs_holds(
    f: &FieldContext,
    al: FieldElement,
    be: FieldElement,
    pairs: [(FieldElement, FieldElement); 3],
) -> Option<bool> {
    if al.is_zero() || be.is_zero() || f.add(al, be).is_zero() {
        return None;
    }
    if pairs.iter().any(|(a, b)| a.is_zero() || b.is_zero()) {
        return None;
    }
    let key = |(a, b): (FieldElement, FieldElement)| {
        (f.add(f.mul(al, a), f.mul(be, b)), f.add(f.mul(al, f.square(a)), f.mul(be, f.square(b))))
    };
    let k0 = key(pairs[0]);
    if key(pairs[1]) != k0 || key(pairs[2]) != k0 {
        return None;
    }
    Some(pairs[0] == pairs[1] || pairs[0] == pairs[2] || pairs[1] == pairs[2])
}

fn nonzero(f: &FieldContext) -> Vec<FieldElement> {
    f.nonzero_elements().collect()
}

fn random_nonzero(f: &FieldContext, rng: &mut ChaCha8Rng) -> FieldElement {
    f.element(rng.gen_range(1..f.q())).expect("in range")
}

fn random_any(f: &FieldContext, rng: &mut ChaCha8Rng) -> FieldElement {
    f.element(rng.gen_range(0..f.q())).expect("in range")
}

struct Tally {
    lemma: Lemma,
    instances: u64,
    found: Option<Counterexample>,
}

impl Tally {
    fn new(lemma: Lemma) -> Self {
        Tally { lemma, instances: 0, found: None }
    }

    /// Returns true once a counterexample is recorded.
    fn record(&mut self, verdict: Option<bool>, names: &[&'static str], vals: &[FieldElement]) -> bool {
        match verdict {
            None => false,
            Some(true) => {
                self.instances += 1;
                false
            }
            Some(false) => {
                self.instances += 1;
                self.found = Some(Counterexample {
                    lemma: self.lemma,
                    assignment: names.iter().copied().zip(vals.iter().copied()).collect(),
                });
                true
            }
        }
    }

    fn finish(self, exhaustive: bool) -> OracleRun {
        OracleRun { lemma: self.lemma, exhaustive, instances: self.instances, counterexample: self.found }
    }
}

const RUZSA_NAMES: [&str; 8] = ["alpha", "beta", "gamma", "delta", "a1", "a2", "a3", "a4"];

pub fn oracle_lemma_ruzsa(f: &FieldContext, sample_budget: u64, seed: u64) -> OracleRun {
    let mut tally = Tally::new(Lemma::Ruzsa);
    let nz = nonzero(f);
    if f.q() <= EXHAUSTIVE_MAX_Q {
        for &al in &nz {
            for &be in &nz {
                for &ga in &nz {
                    let de = f.sub(f.add(al, be), ga);
                    if de.is_zero() {
                        continue;
                    }
                    for &a1 in &nz {
                        for &a2 in &nz {
                            for &a3 in &nz {
                                for &a4 in &nz {
                                    let v = [al, be, ga, de, a1, a2, a3, a4];
                                    if tally.record(ruzsa_holds(f, v), &RUZSA_NAMES, &v) {
                                        return tally.finish(true);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        return tally.finish(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_budget {
        let (al, be, ga) = (random_nonzero(f, &mut rng), random_nonzero(f, &mut rng), random_nonzero(f, &mut rng));
        let (a1, a2) = (random_nonzero(f, &mut rng), random_nonzero(f, &mut rng));
        let de = f.sub(f.add(al, be), ga);
        if de.is_zero() {
            continue;
        }
        let target = f.add(f.mul(al, a1), f.mul(be, a2));
        let de_inv = f.inv(de).expect("nonzero");
        for &a3 in &nz {
            let a4 = f.mul(f.sub(target, f.mul(ga, a3)), de_inv);
            let v = [al, be, ga, de, a1, a2, a3, a4];
            if tally.record(ruzsa_holds(f, v), &RUZSA_NAMES, &v) {
                return tally.finish(false);
            }
        }
    }
    tally.finish(false)
}

const SIDON_NAMES: [&str; 4] = ["a1", "a2", "a3", "a4"];

pub fn oracle_lemma_sidon(f: &FieldContext, sample_budget: u64, seed: u64) -> OracleRun {
    let mut tally = Tally::new(Lemma::Sidon);
    let nz = nonzero(f);
    let exhaustive = f.q() <= EXHAUSTIVE_MAX_Q;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let firsts: Box<dyn Iterator<Item = (FieldElement, FieldElement)>> = if exhaustive {
        Box::new(nz.clone().into_iter().flat_map(|a| nz.clone().into_iter().map(move |b| (a, b))))
    } else {
        let samples: Vec<_> =
            (0..sample_budget).map(|_| (random_nonzero(f, &mut rng), random_nonzero(f, &mut rng))).collect();
        Box::new(samples.into_iter())
    };
    for (a1, a2) in firsts {
        for &a3 in &nz {
            // exhaustive mode scans a4 too; sampling solves the linear equation
            let a4s: Vec<FieldElement> = if exhaustive { nz.clone() } else { vec![f.sub(f.add(a1, a2), a3)] };
            for a4 in a4s {
                let v = [a1, a2, a3, a4];
                if tally.record(sidon_holds(f, v), &SIDON_NAMES, &v) {
                    return tally.finish(exhaustive);
                }
            }
        }
    }
    tally.finish(exhaustive)
}

const TRIANGLE_NAMES: [&str; 6] = ["alpha", "beta", "gamma", "a1", "a2", "a3"];

pub fn oracle_lemma_triangle(f: &FieldContext, sample_budget: u64, seed: u64) -> OracleRun {
    let mut tally = Tally::new(Lemma::Triangle);
    let nz = nonzero(f);
    if f.q() <= EXHAUSTIVE_MAX_Q {
        let all: Vec<FieldElement> = f.elements().collect();
        for &al in &all {
            for &be in &all {
                for &ga in &all {
                    if al == be || be == ga || al == ga {
                        continue;
                    }
                    for &a1 in &nz {
                        for &a2 in &nz {
                            for &a3 in &nz {
                                let v = [al, be, ga, a1, a2, a3];
                                if tally.record(triangle_holds(f, v), &TRIANGLE_NAMES, &v) {
                                    return tally.finish(true);
                                }
                            }
                        }
                    }
                }
            }
        }
        return tally.finish(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_budget {
        let (al, be, ga) = (random_any(f, &mut rng), random_any(f, &mut rng), random_any(f, &mut rng));
        let a1 = random_nonzero(f, &mut rng);
        if al == be || be == ga || al == ga {
            continue;
        }
        let denom_inv = f.inv(f.sub(be, ga)).expect("distinct");
        for &a2 in &nz {
            // solve the linear cycle equation for a3
            let num = f.sub(f.sub(f.mul(be, a2), f.mul(ga, a1)), f.mul(al, f.sub(a2, a1)));
            let a3 = f.mul(num, denom_inv);
            let v = [al, be, ga, a1, a2, a3];
            if tally.record(triangle_holds(f, v), &TRIANGLE_NAMES, &v) {
                return tally.finish(false);
            }
        }
    }
    tally.finish(false)
}

const THREEPAIRS_NAMES: [&str; 8] = ["alpha", "beta", "a1", "b1", "a2", "b2", "a3", "b3"];

pub fn oracle_lemma_threepairs(f: &FieldContext, sample_budget: u64, seed: u64) -> OracleRun {
    let mut tally = Tally::new(Lemma::ThreePairs);
    let nz = nonzero(f);
    let check = |tally: &mut Tally, al, be, p: [(FieldElement, FieldElement); 3]| {
        let vals = [al, be, p[0].0, p[0].1, p[1].0, p[1].1, p[2].0, p[2].1];
        tally.record(threepairs_holds(f, al, be, p), &THREEPAIRS_NAMES, &vals)
    };
    if f.q() <= EXHAUSTIVE_MAX_Q {
        let pairs: Vec<(FieldElement, FieldElement)> =
            nz.iter().flat_map(|&a| nz.iter().map(move |&b| (a, b))).collect();
        for &al in &nz {
            for &be in &nz {
                if f.add(al, be).is_zero() {
                    continue;
                }
                for &p1 in &pairs {
                    for &p2 in &pairs {
                        for &p3 in &pairs {
                            if check(&mut tally, al, be, [p1, p2, p3]) {
                                return tally.finish(true);
                            }
                        }
                    }
                }
            }
        }
        return tally.finish(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..sample_budget {
        let (al, be) = (random_nonzero(f, &mut rng), random_nonzero(f, &mut rng));
        let (a1, b1) = (random_nonzero(f, &mut rng), random_nonzero(f, &mut rng));
        if f.add(al, be).is_zero() {
            continue;
        }
        let lin = f.add(f.mul(al, a1), f.mul(be, b1));
        let quad = f.add(f.mul(al, f.square(a1)), f.mul(be, f.square(b1)));
        let be_inv = f.inv(be).expect("nonzero");
        // every (a, b) on the same linear and quadratic level as (a1, b1)
        let fibre: Vec<(FieldElement, FieldElement)> = nz
            .iter()
            .map(|&a| (a, f.mul(f.sub(lin, f.mul(al, a)), be_inv)))
            .filter(|&(a, b)| !b.is_zero() && f.add(f.mul(al, f.square(a)), f.mul(be, f.square(b))) == quad)
            .collect();
        for &p2 in &fibre {
            for &p3 in &fibre {
                if check(&mut tally, al, be, [(a1, b1), p2, p3]) {
                    return tally.finish(false);
                }
            }
        }
    }
    tally.finish(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u32) -> FieldContext {
        FieldContext::new(p, 1).unwrap()
    }

    #[test]
    fn symmetric_instances_satisfy_each_lemma() {
        let f = field(11);
        let e = |n| f.from_int(n);
        assert_eq!(ruzsa_holds(&f, [e(1), e(1), e(1), e(1), e(3), e(5), e(3), e(5)]), Some(true));
        assert_eq!(sidon_holds(&f, [e(1), e(2), e(1), e(2)]), Some(true));
        assert_eq!(triangle_holds(&f, [e(0), e(1), e(2), e(4), e(4), e(4)]), Some(true));
        let same = (e(3), e(3));
        assert_eq!(threepairs_holds(&f, e(1), e(2), [same, same, same]), Some(true));
    }

    #[test]
    fn hypotheses_that_fail_are_reported_as_vacuous() {
        let f = field(11);
        let e = |n| f.from_int(n);
        assert_eq!(sidon_holds(&f, [e(1), e(2), e(1), e(3)]), None);
        assert_eq!(sidon_holds(&f, [e(0), e(2), e(0), e(2)]), None);
        assert_eq!(triangle_holds(&f, [e(1), e(1), e(2), e(4), e(4), e(4)]), None);
        assert_eq!(threepairs_holds(&f, e(1), e(10), [(e(1), e(1)); 3]), None);
    }

    #[test]
    fn repeated_pairs_with_unequal_coordinates_still_conclude() {
        // (a_i, b_i) identical across i while a != b: the repeated-pair
        // conclusion holds even though a_i = b_i does not
        let f = field(7);
        let e = |n| f.from_int(n);
        assert_eq!(threepairs_holds(&f, e(1), e(1), [(e(2), e(5)); 3]), Some(true));
    }

    #[test]
    fn exhaustive_runs_on_gf5() {
        let f = field(5);
        for run in [
            oracle_lemma_ruzsa(&f, 0, 0),
            oracle_lemma_sidon(&f, 0, 0),
            oracle_lemma_triangle(&f, 0, 0),
            oracle_lemma_threepairs(&f, 0, 0),
        ] {
            assert!(run.exhaustive);
            assert!(run.instances > 0, "{:?}", run.lemma);
            assert_eq!(run.counterexample, None, "{:?}", run.lemma);
        }
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let f = field(31);
        let a = oracle_lemma_triangle(&f, 200, 9);
        let b = oracle_lemma_triangle(&f, 200, 9);
        assert_eq!(a, b);
        assert!(!a.exhaustive);
    }

    #[test]
    fn sampled_sidon_run_checks_every_sample() {
        let f = field(13);
        let run = oracle_lemma_sidon(&f, 500, 1);
        assert!(run.instances >= 500);
        assert!(run.counterexample.is_none());
    }
}
