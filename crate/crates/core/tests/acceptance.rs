//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any fail.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use signed_spectra::closedform::{
    biclique_spectrum, disjoint_bicliques_quotient, nonsingularity_check, p5_explicit, path_quotient,
    regular_general_spectrum, regular_kk_spectrum,
};
use signed_spectra::linalg::{char_poly_coeffs, max_deviation, ZERO_TOL};
use signed_spectra::oracle::full_spectrum;
use signed_spectra::reduction::{nullity_lower_bound, spectrum_via_reduction};
use signed_spectra::sgraph::{build_from_pattern, random_signing};
use signed_spectra::{NegativePattern, PathKind, RegularSubgraph, SignedBipartiteGraph, Spectrum, SwitchingFunction};

const SEED: u64 = 0x5157_4e45_4400_0001;

type Criterion = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn dev(a: &Spectrum, b: &Spectrum) -> f64 {
    max_deviation(a, b).unwrap_or(f64::INFINITY)
}

fn expand(top: &[f64], zeros: usize) -> Spectrum {
    let mut v: Vec<f64> = top.iter().flat_map(|&x| [x, -x]).collect();
    v.extend(std::iter::repeat_n(0.0, zeros));
    Spectrum::from_values(&v)
}

fn within(elapsed: Duration, limit: f64) -> bool {
    elapsed.as_secs_f64() < limit
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = SignedBipartiteGraph::from_rows(&[[-1, -1, -1, 1, 1, 1], [-1, 1, -1, -1, 1, 1], [1; 6], [1; 6]]).unwrap();
    let want = expand(&[2.0 * 3f64.sqrt(), 2.0 * 2f64.sqrt(), 2.0], 4);
    let oracle = full_spectrum(&g).unwrap();
    let reduced = spectrum_via_reduction(&g).unwrap();
    let d_routes = dev(&oracle, &reduced);
    let d_want = dev(&oracle, &want).max(dev(&reduced, &want));
    let elapsed = start.elapsed();
    Outcome::new(
        d_routes < 1e-9 && d_want < 1e-9 && within(elapsed, 0.1),
        format!("oracle/reduction {d_routes:.1e}, vs displayed {d_want:.1e}"),
    )
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let (p, q) = (5, 7);
    let parts = [(2, 2), (2, 3)];
    let res = disjoint_bicliques_quotient(p, q, &parts).unwrap();
    let g = build_from_pattern(p, q, &NegativePattern::BicliqueUnion { parts: parts.to_vec() }).unwrap();
    let d = dev(&res.spectrum, &full_spectrum(&g).unwrap());

    let shown = ["4.50", "3.37", "1.82", "0.00", "-1.82", "-3.37", "-4.50"];
    let shown_mult = [1, 1, 1, 6, 1, 1, 1];
    let rounded: Vec<String> = res.spectrum.pairs().iter().map(|(v, _)| format!("{v:.2}")).collect();
    let mults: Vec<usize> = res.spectrum.pairs().iter().map(|&(_, m)| m).collect();
    let rounding_ok = rounded == shown && mults == shown_mult;
    let elapsed = start.elapsed();
    Outcome::new(
        d < 1e-9 && rounding_ok && within(elapsed, 0.1),
        format!(
            "closedform/oracle {d:.1e}, rounded [{}] vs displayed [{}]",
            rounded.join(" "),
            shown.join(" ")
        ),
    )
}

fn criterion_3() -> Outcome {
    let mut worst = 0.0f64;
    let mut pair = true;
    for (p, q) in [(3, 4), (4, 5), (5, 9)] {
        let explicit = p5_explicit(p, q).unwrap();
        let quotient = path_quotient(p, q, PathKind::OddV, 2).unwrap().spectrum;
        let g = build_from_pattern(p, q, &NegativePattern::PathOddV { r: 2 }).unwrap();
        let oracle = full_spectrum(&g).unwrap();
        worst = worst
            .max(dev(&explicit, &quotient))
            .max(dev(&explicit, &oracle))
            .max(dev(&quotient, &oracle));
        pair &= [&explicit, &quotient, &oracle]
            .iter()
            .all(|s| s.multiplicity(2.0, 1e-9) >= 1 && s.multiplicity(-2.0, 1e-9) >= 1);
    }
    Outcome::new(
        worst < 1e-9 && pair,
        format!("max deviation {worst:.1e}, ±2 present: {pair}"),
    )
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut count = 0;
    for p in 1..=5 {
        for q in p..=6 {
            for r in 1..=p {
                for s in 1..=q {
                    let g = build_from_pattern(p, q, &NegativePattern::Biclique { r, s }).unwrap();
                    let closed = biclique_spectrum(p, q, r, s).unwrap().spectrum;
                    worst = worst.max(dev(&closed, &full_spectrum(&g).unwrap()));
                    count += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome::new(
        worst < 1e-9 && within(elapsed, 5.0),
        format!("{count} instances, max deviation {worst:.1e}"),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut bound_ok, mut sym_ok, mut switch_ok) = (0, 0, 0);
    let trials = 200;
    for _ in 0..trials {
        let p = rng.random_range(1..=15);
        let q = rng.random_range(p..=30 - p);
        let g = random_signing(p, q, &mut rng).unwrap();
        let s = full_spectrum(&g).unwrap();
        let zeros = s.values().iter().filter(|x| x.abs() < ZERO_TOL).count();
        let (r, s_cov) = g.minimal_cover();
        let bound = (p + q).saturating_sub(2 * r.min(s_cov) + 2);
        bound_ok += usize::from(zeros >= bound && zeros >= nullity_lower_bound(&g));
        sym_ok += usize::from(s.is_symmetric_about_zero(1e-8));
        let f = SwitchingFunction::random(p, q, &mut rng);
        switch_ok += usize::from(dev(&full_spectrum(&g.switch(&f).unwrap()).unwrap(), &s) < 1e-8);
    }
    Outcome::new(
        bound_ok == trials && sym_ok == trials && switch_ok == trials,
        format!("{trials} trials: nullity bound {bound_ok}, symmetric {sym_ok}, switching {switch_ok}"),
    )
}

fn criterion_6() -> Outcome {
    let mut subgraphs = Vec::new();
    for k in 1..=4 {
        subgraphs.push(RegularSubgraph::perfect_matching(k).unwrap());
    }
    for k in 2..=4 {
        subgraphs.push(RegularSubgraph::even_cycle(k).unwrap());
    }
    for k in [2, 4] {
        subgraphs.push(RegularSubgraph::disjoint_four_cycles(k).unwrap());
    }
    let mut worst = 0.0f64;
    let mut cases = 0;
    let mut agree = 0;
    for h in &subgraphs {
        let k = h.k();
        for (p, q) in [(k, k), (k + 1, k + 2), (k + 2, k + 2)] {
            let g = build_from_pattern(p, q, &NegativePattern::Regular(h.clone())).unwrap();
            let oracle = full_spectrum(&g).unwrap();
            worst = worst.max(dev(&regular_general_spectrum(p, q, k, h).unwrap(), &oracle));
            if p == k && q == k {
                worst = worst.max(dev(&regular_kk_spectrum(k, h).unwrap(), &oracle));
            }
            let singular = oracle.values().iter().any(|x| x.abs() < ZERO_TOL);
            agree += usize::from(nonsingularity_check(p, q, k, h).unwrap() == !singular);
            cases += 1;
        }
    }
    Outcome::new(
        worst < 1e-9 && agree == cases,
        format!("{cases} cases, max deviation {worst:.1e}, nonsingularity agrees {agree}/{cases}"),
    )
}

fn criterion_7() -> Outcome {
    let mut worst = 0.0f64;
    let mut cases = 0;
    for kind in [PathKind::Even, PathKind::OddU, PathKind::OddV] {
        for r in 1..=3 {
            for (p, q) in [(4, 5), (5, 7), (6, 6)] {
                let (ru, sv) = kind.footprint(r);
                if ru > p || sv > q {
                    continue;
                }
                let g = build_from_pattern(p, q, &NegativePattern::path(kind, r)).unwrap();
                let res = path_quotient(p, q, kind, r).unwrap();
                worst = worst.max(dev(&res.spectrum, &full_spectrum(&g).unwrap()));
                cases += 1;
            }
        }
    }
    Outcome::new(worst < 1e-9, format!("{cases} cases, max deviation {worst:.1e}"))
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let mut good = 0;
    let mut worst_odd = 0.0f64;
    let trials = 50;
    for _ in 0..trials {
        let p = rng.random_range(1..=6);
        let q = rng.random_range(p..=8);
        let g = random_signing(p, q, &mut rng).unwrap();
        let c = char_poly_coeffs(&full_spectrum(&g).unwrap());
        let mut ok = true;
        for (i, &x) in c.iter().enumerate() {
            if i % 2 == 1 {
                worst_odd = worst_odd.max(x.abs());
                ok &= x.abs() < 1e-8;
            } else if (i / 2) % 2 == 1 {
                ok &= x <= 1e-8;
            } else {
                ok &= x >= -1e-8;
            }
        }
        good += usize::from(ok);
    }
    Outcome::new(
        good == trials,
        format!("{good}/{trials} instances, largest odd coefficient {worst_odd:.1e}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("golden K_{4,6} with two negative rows", criterion_1),
        ("golden K_{5,7} with two negative bicliques", criterion_2),
        ("golden negative P_5 with ends in V", criterion_3),
        ("single biclique sweep", criterion_4),
        ("nullity bound property suite", criterion_5),
        ("regular negative subgraph suite", criterion_6),
        ("negative path quotients", criterion_7),
        ("characteristic polynomial shape", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!(
            "{tag} [{}] {name}: {} ({:.3} s)",
            i + 1,
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
