//! Ground-truth spectra from the full adjacency matrix, and a harness that
//! cross-checks the other routes against it.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::closedform;
use crate::error::{Error, Result};
use crate::linalg::{self, max_deviation, DenseMatrix, Spectrum, GROUP_TOL};
use crate::reduction;
use crate::sgraph::{build_from_pattern, NegativePattern, SignedBipartiteGraph, SwitchingFunction};

/// Two spectra agree when their sorted eigenvalues differ by less than this.
pub const AGREEMENT_TOL: f64 = 1e-8;

/// Dense eigendecomposition of the `(p+q)`-order adjacency matrix.
///
/// The matrix is assembled here straight from the sign table, so this route
/// shares nothing with the others except the Jacobi kernel.
pub fn full_spectrum(g: &SignedBipartiteGraph) -> Result<Spectrum> {
    let (p, q) = (g.p(), g.q());
    let n = p + q;
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..p {
        for j in 0..q {
            let s = f64::from(g.sign(i, j));
            a[(i, p + j)] = s;
            a[(p + j, i)] = s;
        }
    }
    let values = linalg::sym_eigenvalues_default(&a)?;
    linalg::group_spectrum(&values, n, GROUP_TOL)
}

/// A route to the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Oracle,
    Reduction,
    ClosedForm,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Oracle, Method::Reduction, Method::ClosedForm];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Reduction => "reduction",
            Method::ClosedForm => "closedform",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parameters(alloc::format!("unknown method {s:?}")))
    }
}

/// The graph a report is about, with the pattern it was built from (if any).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub pattern: Option<String>,
    pub graph: SignedBipartiteGraph,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub instance: Instance,
    pub methods: BTreeMap<String, Spectrum>,
    pub max_deviation: f64,
    pub checks: BTreeMap<String, bool>,
    pub pass: bool,
}

/// Spectrum of `g` by one route. The closed form needs the pattern `g` was
/// built from.
pub fn spectrum_by(g: &SignedBipartiteGraph, pattern: Option<&NegativePattern>, method: Method) -> Result<Spectrum> {
    match method {
        Method::Oracle => full_spectrum(g),
        Method::Reduction => reduction::spectrum_via_reduction(g),
        Method::ClosedForm => {
            let pattern = pattern.ok_or(Error::NoClosedForm)?;
            if matches!(pattern, NegativePattern::Arbitrary { .. }) {
                return Err(Error::NoClosedForm);
            }
            if build_from_pattern(g.p(), g.q(), pattern)? != *g {
                return Err(Error::Pattern(alloc::format!("graph is not the {pattern} layout")));
            }
            Ok(closedform::closed_form(g.p(), g.q(), pattern)?.spectrum)
        }
    }
}

/// Runs `methods` on `g` and cross-checks them.
///
/// Checks: the routes agree pairwise within [`AGREEMENT_TOL`], the oracle's
/// nullity meets [`reduction::nullity_lower_bound`], every spectrum is
/// symmetric about zero, and the oracle spectrum is unchanged by negation
/// and by a switching drawn from `seed`.
pub fn verify(
    g: &SignedBipartiteGraph,
    pattern: Option<&NegativePattern>,
    methods: &[Method],
    seed: u64,
) -> Result<VerificationReport> {
    let mut spectra: BTreeMap<Method, Spectrum> = BTreeMap::new();
    for &m in methods {
        if let alloc::collections::btree_map::Entry::Vacant(slot) = spectra.entry(m) {
            slot.insert(spectrum_by(g, pattern, m)?);
        }
    }
    let reference = match spectra.get(&Method::Oracle) {
        Some(s) => s.clone(),
        None => full_spectrum(g)?,
    };

    let list: Vec<&Spectrum> = spectra.values().collect();
    let mut worst = 0.0f64;
    for (i, a) in list.iter().enumerate() {
        for b in &list[i + 1..] {
            worst = worst.max(max_deviation(a, b)?);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let switching = SwitchingFunction::random(g.p(), g.q(), &mut rng);
    let switched = full_spectrum(&g.switch(&switching)?)?;
    let negated = full_spectrum(&g.negate())?;

    let mut checks = BTreeMap::new();
    checks.insert("agreement".to_string(), worst < AGREEMENT_TOL);
    checks.insert(
        "nullity_bound".to_string(),
        reference.nullity() >= reduction::nullity_lower_bound(g),
    );
    checks.insert(
        "symmetry".to_string(),
        list.iter().all(|s| s.is_symmetric_about_zero(AGREEMENT_TOL)),
    );
    checks.insert(
        "switching_invariance".to_string(),
        max_deviation(&switched, &reference)? < AGREEMENT_TOL,
    );
    checks.insert(
        "negation_invariance".to_string(),
        max_deviation(&negated, &reference)? < AGREEMENT_TOL,
    );
    let pass = checks.values().all(|&ok| ok);

    Ok(VerificationReport {
        instance: Instance {
            pattern: pattern.map(|p| p.to_string()),
            graph: g.clone(),
        },
        methods: spectra.into_iter().map(|(m, s)| (m.name().to_string(), s)).collect(),
        max_deviation: worst,
        checks,
        pass,
    })
}
