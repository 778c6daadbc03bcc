//! Fixed instances with independently computed reference values.
//!
//! Reference eigenvalues were obtained once with LAPACK (`eigvalsh` on the
//! full adjacency matrix) and frozen here.

use signed_spectra::closedform::{self, biclique_spectrum, disjoint_bicliques_quotient, p5_explicit, path_quotient};
use signed_spectra::linalg::max_deviation;
use signed_spectra::oracle::{full_spectrum, verify, Method};
use signed_spectra::reduction::{build_z1, build_z2, spectrum_via_reduction};
use signed_spectra::sgraph::build_from_pattern;
use signed_spectra::{NegativePattern, PathKind, RegularSubgraph, SignedBipartiteGraph, Spectrum};

fn symmetric(top: &[f64], zeros: usize) -> Spectrum {
    let mut v: Vec<f64> = top.iter().flat_map(|&x| [x, -x]).collect();
    v.extend(std::iter::repeat_n(0.0, zeros));
    Spectrum::from_values(&v)
}

fn close(a: &Spectrum, b: &Spectrum, tol: f64) {
    let d = max_deviation(a, b).unwrap();
    assert!(d < tol, "deviation {d:e}\n  {a}\n  {b}");
}

fn k46() -> SignedBipartiteGraph {
    SignedBipartiteGraph::from_rows(&[[-1, -1, -1, 1, 1, 1], [-1, 1, -1, -1, 1, 1], [1; 6], [1; 6]]).unwrap()
}

#[test]
fn k46_two_negative_rows() {
    let g = k46();
    let want = symmetric(&[2.0 * 3f64.sqrt(), 2.0 * 2f64.sqrt(), 2.0], 4);
    close(&full_spectrum(&g).unwrap(), &want, 1e-12);
    close(&spectrum_via_reduction(&g).unwrap(), &want, 1e-12);

    let z1 = build_z1(&g);
    assert_eq!(z1.zero_exponent(), 4);
    assert_eq!(z1.z().to_rows(), [[6.0, 2.0, 0.0], [2.0, 6.0, 0.0], [0.0, 0.0, 12.0]]);
    let z2 = build_z2(&g);
    assert_eq!(z2.order(), 5);
    assert_eq!(z2.zero_exponent(), 0);
    close(&z2.spectrum().unwrap(), &want, 1e-12);
}

#[test]
fn two_bicliques_in_k57() {
    let top = [4.5091423669484, 3.3668072246304814, 1.8254435698664995];
    let res = disjoint_bicliques_quotient(5, 7, &[(2, 2), (2, 3)]).unwrap();
    close(&res.spectrum, &symmetric(&top, 6), 1e-12);
    let g = build_from_pattern(
        5,
        7,
        &NegativePattern::BicliqueUnion {
            parts: vec![(2, 2), (2, 3)],
        },
    )
    .unwrap();
    close(&full_spectrum(&g).unwrap(), &res.spectrum, 1e-12);
}

#[test]
fn single_biclique_in_k57() {
    let top = [5.063537330567421, 3.0595080816938762];
    close(
        &biclique_spectrum(5, 7, 2, 2).unwrap().spectrum,
        &symmetric(&top, 8),
        1e-12,
    );
}

#[test]
fn p5_reference_values() {
    let cases: [((usize, usize), [f64; 2]); 2] = [
        ((4, 5), [3.2906575520321453, 2.274109248750774]),
        ((5, 9), [5.862203052083922, 2.575766949112041]),
    ];
    for ((p, q), [m1, m2]) in cases {
        let want = symmetric(&[m1, m2, 2.0], p + q - 6);
        close(&p5_explicit(p, q).unwrap(), &want, 1e-12);
        close(&path_quotient(p, q, PathKind::OddV, 2).unwrap().spectrum, &want, 1e-12);
    }
    // mu_2 = 2 coincides with the fixed pair
    let s = p5_explicit(3, 4).unwrap();
    assert_eq!(s.multiplicity(2.0, 1e-9), 3);
    assert_eq!(s.multiplicity(-2.0, 1e-9), 3);
}

#[test]
fn p4_in_k45() {
    let top = [3.653169500858384, 2.301330397160106, 1.1654316801533342];
    let res = path_quotient(4, 5, PathKind::Even, 2).unwrap();
    close(&res.spectrum, &symmetric(&top, 3), 1e-12);
}

#[test]
fn matching_in_k45() {
    let h = RegularSubgraph::perfect_matching(3).unwrap();
    let s = closedform::regular_general_spectrum(4, 5, 3, &h).unwrap();
    close(
        &s,
        &symmetric(&[3.3602831163652227, 2.0, 2.0, 0.8417228628656938], 1),
        1e-12,
    );
}

#[test]
fn positive_kpq() {
    for (p, q) in [(1, 1), (2, 3), (4, 6)] {
        let g = SignedBipartiteGraph::all_positive(p, q).unwrap();
        let want = symmetric(&[((p * q) as f64).sqrt()], p + q - 2);
        close(&full_spectrum(&g).unwrap(), &want, 1e-12);
        close(&spectrum_via_reduction(&g).unwrap(), &want, 1e-12);
    }
}

#[test]
fn report_json_shape() {
    let pattern = NegativePattern::Biclique { r: 2, s: 2 };
    let g = build_from_pattern(5, 7, &pattern).unwrap();
    let report = verify(&g, Some(&pattern), &Method::ALL, 1).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "instance", "max_deviation", "methods", "pass"]);
    assert_eq!(json["methods"].as_object().unwrap().len(), 3);
    assert_eq!(json["methods"]["oracle"][0]["multiplicity"], 1);
    assert_eq!(json["pass"], true);
    let back: signed_spectra::VerificationReport = serde_json::from_value(json).unwrap();
    assert_eq!(back, report);
}
