//! Exhaustive re-checking of the classification theorems on a finite box.
//!
//! Every check scans a box of integer triples (or a parameter range), counts
//! the cases it looked at, and keeps the first few counterexamples. The
//! report lists the checks in a fixed order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::classify::geometry::{
    component_of, component_table, gradient, markov_constant_real, mutate_real,
    singular_points, ComponentCounts, Field, RealPoint,
};
use crate::classify::{
    acyclic_by_constant, band_functions, cyclic_by_band, descend, in_fundamental_domain, m_minus,
    m_plus, Verdict,
};
use crate::hochschild::{dim_h1, dim_h1_closed_form, hereditary_candidates, mutate_to_cyclic, AcyclicQuiver3};
use crate::orbits::{
    acyclic_representatives, cyclic_representatives, enumerate_orbit, is_finite_orbit,
    CyclicRepresentatives, Finiteness, OrbitBounds,
};
use crate::spectral::{cartan, char_poly, coxeter, spectrum_for_constant};
use crate::triple::{Letter, MCase, Triple, Vertex};

const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Side of the scanned boxes, `[0, N]^3` or `[-N, N]^3`.
    pub box_size: i64,
    /// Orbit elements sampled per triple in the uniqueness check.
    pub orbit_samples: usize,
    /// Node budget for the finiteness check.
    pub finiteness_bound: usize,
}

impl VerifyConfig {
    pub fn new(box_size: i64) -> VerifyConfig {
        VerifyConfig {
            box_size: box_size.max(5),
            orbit_samples: 50,
            finiteness_bound: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub mismatches: u64,
    pub counterexamples: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub box_size: i64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }
}

struct Check {
    result: CheckResult,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check {
            result: CheckResult {
                name,
                cases: 0,
                mismatches: 0,
                counterexamples: Vec::new(),
            },
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.mismatches += 1;
            if self.result.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.result.counterexamples.push(describe());
            }
        }
    }

    fn finish(self) -> CheckResult {
        self.result
    }
}

fn cube(lo: i64, hi: i64) -> impl Iterator<Item = Triple> {
    (lo..=hi).flat_map(move |x| {
        (lo..=hi).flat_map(move |y| (lo..=hi).map(move |z| Triple::new(x, y, z)))
    })
}

pub fn run(config: &VerifyConfig) -> Report {
    let n = config.box_size;
    let checks = vec![
        markov_invariance(n),
        fixed_points(n),
        monotone_comparability(n),
        theorem_equivalence(n),
        band_constant_algebra(n),
        m_case_lemma(n),
        descent_witness(n),
        fundamental_uniqueness(n, config.orbit_samples),
        finite_cyclic_orbits(n, config.finiteness_bound),
        cyclic_representatives_cover(n),
        finite_lists(),
        markov_zero_two_orbits(n),
        band_function_identities(n),
        spectral_identities(n),
        unit_circle_window(n),
        singular_gradient_scan(n),
        component_table_rows(),
        component_preservation(),
        hochschild_dimension(n),
        hereditary_candidate_constants(n),
    ];
    Report { box_size: n, checks }
}

fn markov_invariance(n: i64) -> CheckResult {
    let mut check = Check::new("markov_invariance");
    for t in cube(-n, n) {
        let c = t.markov_constant();
        for letter in Letter::ALL {
            let image = letter.apply(&t);
            check.record(image.markov_constant() == c && letter.apply(&image) == t, || {
                format!("{t} under {letter}")
            });
        }
    }
    check.finish()
}

fn fixed_points(n: i64) -> CheckResult {
    let mut check = Check::new("mutation_fixed_points");
    // Off the non-negative octant the sign twists of (2,2,2) with two
    // negative entries are fixed as well.
    let expected = [
        Triple::new(0, 0, 0),
        Triple::new(2, 2, 2),
        Triple::new(-2, -2, 2),
        Triple::new(-2, 2, -2),
        Triple::new(2, -2, -2),
    ];
    for t in cube(-n, n) {
        let fixed = t.is_mutation_fixed_point();
        check.record(fixed == expected.contains(&t), || format!("{t} fixed={fixed}"));
    }
    check.finish()
}

fn monotone_comparability(n: i64) -> CheckResult {
    let mut check = Check::new("monotone_comparability");
    for t in cube(0, n).filter(|t| t.x >= t.y && t.y >= t.z) {
        let [dx, dy, dz] = Vertex::ALL.map(|v| t.mutated_entry(v) < *t.get(v));
        check.record((!dz || dy) && (!dy || dx), || t.to_string());
    }
    check.finish()
}

fn theorem_equivalence(n: i64) -> CheckResult {
    let mut check = Check::new("theorem_equivalence");
    for t in cube(0, n) {
        let by_constant = acyclic_by_constant(&t).expect("non-negative");
        let by_band = !cyclic_by_band(&t).expect("non-negative");
        let by_descent = descend(&t).expect("non-negative").verdict == Verdict::Acyclic;
        check.record(by_constant == by_band && by_band == by_descent, || {
            format!("{t}: constant={by_constant} band={by_band} descent={by_descent}")
        });
    }
    check.finish()
}

fn band_constant_algebra(n: i64) -> CheckResult {
    let mut check = Check::new("band_constant_algebra");
    let four = BigInt::from(4);
    for t in cube(2, n) {
        let band = cyclic_by_band(&t).expect("non-negative");
        check.record(band == (t.markov_constant() <= four), || t.to_string());
    }
    check.finish()
}

fn m_case_lemma(n: i64) -> CheckResult {
    let mut check = Check::new("m_case_lemma");
    let two = BigInt::from(2);
    for t in cube(0, n) {
        let cyclic = !acyclic_by_constant(&t).expect("non-negative");
        let ok = match t.m_case() {
            MCase::M3 => t.min_entry() < &two && !cyclic,
            MCase::M1 if t != Triple::new(0, 0, 0) => t.min_entry() >= &two && cyclic,
            _ => true,
        };
        check.record(ok, || format!("{t} is {:?}", t.m_case()));
    }
    check.finish()
}

fn descent_witness(n: i64) -> CheckResult {
    let mut check = Check::new("descent_witness");
    for t in cube(0, n) {
        let c = descend(&t).expect("non-negative");
        let reached = t.apply_word(&c.witness) == c.representative;
        let shape = match c.verdict {
            Verdict::Cyclic => in_fundamental_domain(&c.representative),
            Verdict::Acyclic => c.representative.has_nonpositive_entry(),
        };
        check.record(reached && shape, || t.to_string());
    }
    check.finish()
}

fn cyclic_box_below_four(n: i64) -> impl Iterator<Item = Triple> {
    let four = BigInt::from(4);
    cube(2, n).filter(move |t| t.markov_constant() < four)
}

fn fundamental_uniqueness(n: i64, samples: usize) -> CheckResult {
    let mut check = Check::new("fundamental_uniqueness");
    for t in cyclic_box_below_four(n) {
        let target = descend(&t).expect("non-negative").representative;
        let graph = enumerate_orbit(&t, &OrbitBounds::nodes(samples));
        let agree = graph.nodes.len() == samples
            && graph
                .nodes
                .iter()
                .all(|u| descend(u).map(|c| c.representative == target).unwrap_or(false));
        check.record(agree, || t.to_string());
    }
    check.finish()
}

fn finite_cyclic_orbits(n: i64, bound: usize) -> CheckResult {
    let mut check = Check::new("finite_cyclic_orbits");
    let four = BigInt::from(4);
    for t in cube(2, n).filter(|t| t.markov_constant() <= four) {
        let expected = if t == Triple::new(2, 2, 2) {
            Finiteness::Yes
        } else {
            Finiteness::No
        };
        let got = is_finite_orbit(&t, bound);
        check.record(got == expected, || format!("{t}: {got:?}"));
    }
    check.finish()
}

fn cyclic_representatives_cover(n: i64) -> CheckResult {
    let mut check = Check::new("cyclic_representatives_cover");
    let mut seen = BTreeSet::new();
    for t in cyclic_box_below_four(n) {
        let c = t.markov_constant();
        let reps = match cyclic_representatives(&c) {
            CyclicRepresentatives::Finite(reps) => reps,
            CyclicRepresentatives::UUTwoFamily => Vec::new(),
        };
        if seen.insert(c.clone()) {
            let distinct: BTreeSet<_> = reps.iter().collect();
            let shaped = reps
                .iter()
                .all(|r| in_fundamental_domain(r) && r.markov_constant() == c);
            check.record(shaped && distinct.len() == reps.len(), || format!("C = {c}"));
        }
        let rep = descend(&t).expect("non-negative").representative;
        check.record(reps.contains(&rep), || format!("{t} -> {rep}"));
    }
    check.finish()
}

/// The acyclic orbits with `C` in `{0, 1, 2, 4}` and their non-negative
/// sorted members.
fn finite_lists() -> CheckResult {
    let mut check = Check::new("finite_lists");
    let bounds = OrbitBounds::boxed(64, 10_000);
    let expected: [(i64, Vec<Triple>); 4] = [
        (0, vec![Triple::new(0, 0, 0)]),
        (1, vec![Triple::new(1, 0, 0)]),
        (2, vec![Triple::new(1, 1, 0), Triple::new(1, 1, 1)]),
        (4, vec![Triple::new(2, 0, 0), Triple::new(2, 1, 1)]),
    ];
    for (c, want) in expected {
        let c = BigInt::from(c);
        let classes = acyclic_representatives(&c, &bounds);
        let got: BTreeSet<Triple> = classes
            .iter()
            .flat_map(|cl| cl.nonnegative_members.iter().cloned())
            .collect();
        let verified = classes.iter().all(|cl| cl.merge_verified);
        let want: BTreeSet<Triple> = want.into_iter().collect();
        check.record(got == want && verified, || format!("C = {c}: {got:?}"));
    }
    let cyclic_ok = [
        (0, CyclicRepresentatives::Finite(vec![Triple::new(3, 3, 3)])),
        (1, CyclicRepresentatives::Finite(vec![])),
        (2, CyclicRepresentatives::Finite(vec![])),
        (4, CyclicRepresentatives::UUTwoFamily),
    ];
    for (c, want) in cyclic_ok {
        let got = cyclic_representatives(&BigInt::from(c));
        check.record(got == want, || format!("C = {c}: {got:?}"));
    }
    check.finish()
}

/// Every solution of `C = 0` with non-negative entries in the box is the
/// origin or lies in the orbit of `(3, 3, 3)`; solutions with negative
/// entries have exactly two of them and are sign twists of those.
fn markov_zero_two_orbits(n: i64) -> CheckResult {
    let mut check = Check::new("markov_zero_two_orbits");
    let orbit = enumerate_orbit(&Triple::new(3, 3, 3), &OrbitBounds::boxed(n, usize::MAX));
    let members: BTreeSet<&Triple> = orbit.nodes.iter().collect();
    for t in cube(-n, n).filter(|t| t.markov_constant().is_zero()) {
        let untwisted = Triple::new(t.x.abs(), t.y.abs(), t.z.abs());
        let negatives = t.entries().iter().filter(|e| e.is_negative()).count();
        let ok = (negatives == 0 || negatives == 2)
            && (untwisted == Triple::new(0, 0, 0) || members.contains(&untwisted));
        check.record(ok, || t.to_string());
    }
    check.finish()
}

fn band_function_identities(n: i64) -> CheckResult {
    let mut check = Check::new("band_function_identities");
    let rel = |a: f64, b: f64| (a - b).abs() <= 1e-9 * b.abs().max(1.0);
    for x in 2..=n {
        for y in 2..=n {
            let (xf, yf) = (x as f64, y as f64);
            let b = band_functions(xf, yf).expect("x, y >= 2");
            let chain = [
                m_plus(xf, b.m_minus),
                m_plus(xf, xf * yf - b.m_plus),
                m_minus(xf, b.m_plus),
                m_minus(xf, xf * yf - b.m_minus),
            ];
            // m+(x, m-(x, y)) is the larger root in y of C(x, y, m-) = 4, which
            // is y itself only when y >= x; otherwise it is the partner root.
            let upper = if y >= x { yf } else { xf * b.m_minus - yf };
            let targets = [upper, upper, yf, yf];
            let ok = chain
                .iter()
                .zip(targets)
                .all(|(v, want)| v.as_ref().is_ok_and(|v| rel(*v, want)));
            check.record(ok, || format!("x={x} y={y}: {chain:?}"));
        }
    }
    check.finish()
}

fn spectral_identities(n: i64) -> CheckResult {
    let mut check = Check::new("spectral_identities");
    let m = n.min(10);
    let minus_one = BigInt::from(-1);
    for t in cube(-m, m) {
        let phi = coxeter(&cartan(&t));
        let p = char_poly(&phi);
        let ok = phi.trace() == t.markov_constant() - 3
            && phi.determinant() == minus_one
            && p.eval(&minus_one).is_zero()
            && p.is_palindromic();
        check.record(ok, || t.to_string());
    }
    check.finish()
}

fn unit_circle_window(n: i64) -> CheckResult {
    let mut check = Check::new("unit_circle_window");
    for c in -n..=n {
        let s = spectrum_for_constant(&BigInt::from(c));
        let on_circle = (s.lambda.norm() - 1.0).abs() <= 1e-12;
        let sum_ok = s.lambda_sum == BigInt::from(c - 2);
        check.record(on_circle == (0..=4).contains(&c) && sum_ok, || format!("C = {c}"));
    }
    check.finish()
}

fn singular_gradient_scan(n: i64) -> CheckResult {
    let mut check = Check::new("singular_gradient_scan");
    let m = n.min(10);
    let four = BigInt::from(4);
    let expected: BTreeSet<Triple> = singular_points(&four, Field::Real).into_iter().collect();
    let found: BTreeSet<Triple> = cube(-m, m)
        .filter(|t| t.markov_constant() == four && gradient(t).iter().all(Zero::is_zero))
        .collect();
    check.record(found == expected, || format!("{found:?}"));
    check.finish()
}

fn component_table_rows() -> CheckResult {
    let mut check = Check::new("component_table");
    let rows = [(-10, (4, 4, 0)), (0, (5, 5, 1)), (2, (5, 5, 1)), (4, (1, 5, 0)), (9, (1, 1, 0))];
    for (c, (total, smooth_part, compact)) in rows {
        let want = ComponentCounts {
            total,
            smooth_part,
            compact,
        };
        let got = component_table(&BigInt::from(c));
        check.record(got == want, || format!("C = {c}: {got:?}"));
    }
    check.finish()
}

/// Deterministic grid of real points with `0 < C < 4`.
pub fn sample_real_points() -> Vec<RealPoint> {
    let mut points = Vec::new();
    for ci in 1..8 {
        let c = ci as f64 * 0.5;
        for xi in -12..=12 {
            for yi in -12..=12 {
                let (x, y) = (xi as f64 * 0.37, yi as f64 * 0.41);
                // z^2 - xy z + (x^2 + y^2 - C) = 0
                let disc = x * x * y * y - 4.0 * (x * x + y * y - c);
                if disc < 0.0 {
                    continue;
                }
                for z in [(x * y + disc.sqrt()) / 2.0, (x * y - disc.sqrt()) / 2.0] {
                    let p = [x, y, z];
                    if p.iter().all(|v| (v.abs() - 2.0).abs() > 1e-6) {
                        points.push(p);
                    }
                }
            }
        }
    }
    points
}

fn component_preservation() -> CheckResult {
    let mut check = Check::new("component_preservation");
    for p in sample_real_points() {
        let Ok(home) = component_of(p) else {
            check.record(false, || format!("{p:?} has no component (C = {})", markov_constant_real(p)));
            continue;
        };
        for v in Vertex::ALL {
            let q = mutate_real(p, v);
            let there = component_of(q);
            check.record(there.as_ref() == Ok(&home), || format!("{p:?} -> {q:?}: {there:?}"));
        }
    }
    check.finish()
}

fn hochschild_dimension(n: i64) -> CheckResult {
    let mut check = Check::new("hochschild_dimension");
    for r in 1..=n {
        for s in 1..=n {
            for t in 0..=n {
                let q = AcyclicQuiver3::new(r, s, t).expect("non-negative");
                let dim = dim_h1(&q);
                let c = mutate_to_cyclic(&q).expect("r, s > 0").markov_constant();
                let ok = &c - 2 == dim && dim_h1_closed_form(&q).as_ref() == Some(&dim);
                check.record(ok, || format!("{q}: C = {c}, dim = {dim}"));
            }
        }
    }
    check.finish()
}

fn hereditary_candidate_constants(n: i64) -> CheckResult {
    let mut check = Check::new("hereditary_candidates");
    for c in 2..=(n * n) {
        let c = BigInt::from(c);
        for q in hereditary_candidates(&c) {
            let ok = mutate_to_cyclic(&q).map(|t| t.markov_constant() == c).unwrap_or(false)
                && dim_h1(&q) + 2 == c;
            check.record(ok, || format!("C = {c}: {q}"));
        }
    }
    check.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_box_passes() {
        let report = run(&VerifyConfig::new(6));
        for c in &report.checks {
            assert!(c.passed(), "{}: {:?}", c.name, c.counterexamples);
            assert!(c.cases > 0, "{} checked nothing", c.name);
        }
    }

    #[test]
    fn sample_points_are_on_level_sets() {
        let pts = sample_real_points();
        assert!(pts.len() > 1000);
        for p in pts {
            let c = markov_constant_real(p);
            assert!(c > 0.0 && c < 4.0 + 1e-9, "{p:?} {c}");
        }
    }
}
