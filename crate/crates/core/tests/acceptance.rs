//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Statistical criteria use `MASTER_SEED`.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{boundary_squares_to_zero, brute_force_expansion, euler_poincare, rp2, sample};
use dclique_core::combinatorics::binomial;
use dclique_core::expansion::{d_clique_complex, ExpansionParams};
use dclique_core::homology::{betti_profile, reduced_homology, HomologyResult};
use dclique_core::invariants::{
    homology_vanishing_degree, is_d_lumpless, lemma34_bound, strong_domination_at_most,
    strong_domination_number, Gamma, SearchLimits,
};
use dclique_core::lab::{pattern_k, rows_csv, run_sweep, theorem_thresholds, SweepConfig};
use dclique_core::random::lemma31_p;
use dclique_core::Complex;

const MASTER_SEED: u64 = 20_261_016;

/// Criterion 7: required gap between P(betti1 > 0) at alpha = -0.7 and -0.25.
const PHASE_GAP: f64 = 0.3;
/// Criterion 8: required frequency of gamma >= 3.
const GAMMA_FREQ: f64 = 0.5;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn q(n: i64, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn profile_checked(c: &Complex, kmax: usize) -> Vec<HomologyResult> {
    let p = betti_profile(c, kmax);
    assert!(
        c.dim() > kmax as isize || euler_poincare(c, &p),
        "Euler-Poincare fails"
    );
    p
}

fn homology_oracles() -> Outcome {
    let mut failures = Vec::new();
    let mut check =
        |name: &str, c: &Complex, kmax: usize, betti: &[usize], torsion: &[(usize, i64)]| {
            let p = profile_checked(c, kmax);
            let got: Vec<usize> = p.iter().map(|h| h.betti).collect();
            let tors: Vec<(usize, i64)> = p
                .iter()
                .flat_map(|h| {
                    h.torsion
                        .iter()
                        .map(move |t| (h.degree, i64::try_from(t).unwrap()))
                })
                .collect();
            if got != betti || tors != torsion || !boundary_squares_to_zero(c) {
                failures.push(format!("{name}: betti {got:?} torsion {tors:?}"));
            }
            let cone = c.cone();
            let cp = profile_checked(&cone, kmax + 1);
            if cp.iter().any(|h| !h.vanishes()) || !boundary_squares_to_zero(&cone) {
                failures.push(format!("cone over {name} not acyclic"));
            }
        };
    let triangle = Complex::boundary_of_simplex(3).unwrap();
    check("hollow triangle", &triangle, 1, &[0, 1], &[]);
    let octahedron = Complex::boundary_of_simplex(2).unwrap().n_fold_join(2);
    check("octahedron", &octahedron, 2, &[0, 0, 1], &[]);
    check("RP2", &rp2(), 2, &[0, 0, 0], &[(1, 2)]);
    let k = Complex::boundary_of_simplex(3).unwrap().n_fold_join(1);
    let delta = d_clique_complex(&k.skeleton(2), ExpansionParams::full(2).unwrap());
    check(
        "2-clique complex of the join of two triangles",
        &delta,
        3,
        &[0, 0, 0, 1],
        &[],
    );
    let pass = failures.is_empty();
    outcome(
        pass,
        if pass {
            "5 complexes and their cones exact".into()
        } else {
            failures.join("; ")
        },
    )
}

fn lumpless_patterns() -> Outcome {
    let pairs = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)];
    let bad: Vec<_> = pairs
        .iter()
        .filter(|&&(d, k)| {
            let pat = pattern_k(d, k).unwrap();
            !is_d_lumpless(&pat, d, &SearchLimits::default())
                .unwrap()
                .lumpless
        })
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} pairs, failures {bad:?}", pairs.len()),
    )
}

fn simplex_skeleta_lumpless() -> Outcome {
    let mut bad = Vec::new();
    let mut checked = 0;
    for k in 2..=6usize {
        for d in 1..k {
            let s = Complex::simplex(k + 1).unwrap().skeleton(d);
            checked += 1;
            if !is_d_lumpless(&s, d, &SearchLimits::default())
                .unwrap()
                .lumpless
            {
                bad.push((d, k));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (d, k) pairs, failures {bad:?}"),
    )
}

fn graph_case_reductions() -> Outcome {
    let bad: Vec<usize> = (1..=12usize)
        .filter(|&k| {
            let r = theorem_thresholds(1, k).unwrap();
            let ki = k as i64;
            !(r.t == q(ki, 1)
                && r.nonvanish_window == (q(-1, ki), q(-1, ki + 1))
                && r.vanish_high == Some(q(-1, 2 * ki + 2)))
        })
        .collect();
    outcome(bad.is_empty(), format!("k = 1..=12, failures {bad:?}"))
}

fn binomial_inequality() -> Outcome {
    let mut bad = Vec::new();
    for d in 1..=6usize {
        for k in d..=6usize {
            let r = theorem_thresholds(d, k).unwrap();
            // independent recomputation of t + 1 <= C(d(k+1), d)
            let m = ((d + 1) * (k + 1)) as u64;
            let t = BigRational::new(binomial(m, d as u64 + 1) - BigInt::from(k + 1), m.into());
            let holds = t + BigRational::one()
                <= BigRational::from_integer(binomial((d * (k + 1)) as u64, d as u64));
            if !holds || !r.remark_inequality_holds {
                bad.push((d, k));
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("1 <= d <= k <= 6, failures {bad:?}"),
    )
}

fn lemma34_contrapositive() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 6);
    let (mut samples, mut applicable, mut violations) = (0, 0, 0);
    while samples < 600 {
        let d = rng.gen_range(1..=2usize);
        let n = rng.gen_range(d + 2..=9usize);
        let p = rng.gen_range(0.2..1.0);
        let x = sample(n, d, p, rng.gen());
        let delta = d_clique_complex(&x, ExpansionParams::full(d).unwrap());
        samples += 1;
        for k in (d - 1)..=3usize {
            if delta.num_faces(d - 1) < lemma34_bound(d, k).unwrap() {
                applicable += 1;
                if !reduced_homology(&delta, k).vanishes() {
                    violations += 1;
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{samples} samples, {applicable} applicable (sample, k), {violations} violations"),
    )
}

fn phase_transition() -> Outcome {
    let alphas = vec![-0.8, -0.7, -0.4, -0.25];
    let mut config = SweepConfig::new(1, 50, 1, 100, alphas, MASTER_SEED);
    config.contain_k = Some(2);
    config.couple = true;
    let out = run_sweep(&config).unwrap();
    let p_low = out.aggregates[1].p_betti_positive[1];
    let p_high = out.aggregates[3].p_betti_positive[1];
    let mut non_monotone = 0;
    for t in 0..config.trials {
        let seq: Vec<(bool, isize)> = (0..4)
            .map(|a| {
                let r = &out.rows[a * config.trials + t];
                (r.contains_k.unwrap(), r.dim.unwrap())
            })
            .collect();
        if seq.windows(2).any(|w| !w[1].0 & w[0].0 || w[1].1 < w[0].1) {
            non_monotone += 1;
        }
    }
    outcome(
        p_low - p_high >= PHASE_GAP && non_monotone == 0,
        format!(
            "P(b1>0): {p_low:.2} at -0.7, {p_high:.2} at -0.25 (gap >= {PHASE_GAP}); \
             {non_monotone} non-monotone coupled trials"
        ),
    )
}

fn domination_smoke() -> Outcome {
    let n = 100;
    let p = lemma31_p(n, 2, 1, 3.0).unwrap().value;
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 8);
    let trials = 50;
    let big = (0..trials)
        .filter(|_| {
            let g = sample(n, 1, p, rng.gen());
            let delta = d_clique_complex(&g, ExpansionParams::new(1, Some(2)).unwrap());
            !strong_domination_at_most(&delta, 2).unwrap()
        })
        .count();
    let freq = big as f64 / trials as f64;
    outcome(
        freq >= GAMMA_FREQ,
        format!("p = {p:.6}, gamma >= 3 in {big}/{trials} (need >= {GAMMA_FREQ})"),
    )
}

fn connectivity_consequence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 9);
    let (mut finite, mut violations) = (0, 0);
    let samples = 250;
    for _ in 0..samples {
        let n = rng.gen_range(4..=14usize);
        let p = rng.gen_range(0.3..0.95);
        let g = sample(n, 1, p, rng.gen());
        let delta = d_clique_complex(&g, ExpansionParams::full(1).unwrap());
        let r = strong_domination_number(&delta, &SearchLimits::default()).unwrap();
        if let Gamma::Finite(_) = r.gamma {
            finite += 1;
            if let Some(top) = homology_vanishing_degree(r.gamma) {
                if top >= 0 {
                    let prof = profile_checked(&delta, top as usize);
                    if prof.iter().any(|h| !h.vanishes()) {
                        violations += 1;
                    }
                }
            }
        }
    }
    outcome(
        violations == 0,
        format!("{samples} samples, {finite} with finite gamma, {violations} violations"),
    )
}

fn engine_cross_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(MASTER_SEED ^ 10);
    let mut expansion_mismatch = 0;
    let mut boundary_fail = 0;
    for _ in 0..120 {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(d + 1..=8usize);
        let x = sample(n, d, rng.gen_range(0.1..1.0), rng.gen());
        let fast = d_clique_complex(&x, ExpansionParams::full(d).unwrap());
        if fast != brute_force_expansion(&x, d) {
            expansion_mismatch += 1;
        }
        if !boundary_squares_to_zero(&fast) {
            boundary_fail += 1;
        }
        let dim = fast.dim().max(0) as usize;
        profile_checked(&fast, dim);
    }
    let mut config = SweepConfig::new(1, 14, 2, 6, vec![-0.8, -0.5, -0.3], MASTER_SEED);
    config.contain_k = Some(1);
    config.gamma_at_most = Some(2);
    config.workers = 1;
    let a = rows_csv(&run_sweep(&config).unwrap());
    let b = rows_csv(&run_sweep(&config).unwrap());
    config.workers = 4;
    let c = rows_csv(&run_sweep(&config).unwrap());
    let identical = a == b && b == c;
    outcome(
        expansion_mismatch == 0 && boundary_fail == 0 && identical,
        format!(
            "120 expansions: {expansion_mismatch} oracle mismatches, {boundary_fail} nonzero ∂∂; \
             sweep CSV identical across runs and workers {{1, 4}}: {identical}"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("homology oracle suite", homology_oracles),
        ("K^(d) is d-lumpless", lumpless_patterns),
        ("simplex skeleta are d-lumpless", simplex_skeleta_lumpless),
        ("graph-case threshold reductions", graph_case_reductions),
        ("t + 1 <= C(d(k+1), d)", binomial_inequality),
        ("face-count bound contrapositive", lemma34_contrapositive),
        ("phase-transition smoke test", phase_transition),
        ("strong domination smoke test", domination_smoke),
        ("connectivity-bound consequence", connectivity_consequence),
        ("engine cross-checks", engine_cross_checks),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {status} {name} ({:.1}s): {}",
            i + 1,
            start.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {}/{} passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
