//! Numerical evidence tables for the open questions. Nothing here asserts a
//! theorem: the tables report measured quantities at documented thresholds.

use clap::Args;

use dompoly::bkw::fit_axis_hyperbola;
use dompoly::families::FamilySpec;
use dompoly::roots::{
    real_roots_of_set, RootFindConfig, RootSet, RootsError, DEFAULT_ROOT_TOL,
    REAL_IM_THRESHOLD_COEFF,
};

use super::{compute_member_roots, parse_n_range};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvidenceQuestion {
    /// Real-root counts of the friendship polynomials.
    Q1,
    /// Real-root counts of the 4-flower polynomials (odd n expected to have
    /// no nonzero real root).
    C1,
    /// Empirical maximum root modulus of the 4-flower polynomials.
    Q3,
    /// Hyperbola fit to the 4-flower root clouds.
    C2,
}

impl EvidenceQuestion {
    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "q1" => Ok(EvidenceQuestion::Q1),
            "c1" => Ok(EvidenceQuestion::C1),
            "q3" => Ok(EvidenceQuestion::Q3),
            "c2" => Ok(EvidenceQuestion::C2),
            other => Err(CliError::Usage(format!(
                "unknown question `{other}` (expected q1|c1|q3|c2)"
            ))),
        }
    }
}

#[derive(Args, Debug)]
pub struct EvidenceArgs {
    /// q1 | c1 | q3 | c2
    #[arg(long)]
    pub question: String,

    /// Inclusive range, e.g. `1..12`.
    #[arg(long)]
    pub n_range: String,

    /// Root-finder tolerance.
    #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
    pub tol: f64,
}

fn member_roots(spec: &FamilySpec, n: usize, tol: f64) -> Result<RootSet, CliError> {
    let config = RootFindConfig {
        tol,
        ..RootFindConfig::default()
    };
    match compute_member_roots(&spec.with_n(n), &config)? {
        Ok(set) => Ok(set),
        Err(RootsError::NonConvergence { .. }) => Err(CliError::Numeric(format!(
            "root finder did not converge at n = {n}"
        ))),
        Err(e) => Err(CliError::Numeric(e.to_string())),
    }
}

pub fn run(args: &EvidenceArgs) -> Result<(), CliError> {
    let question = EvidenceQuestion::parse(&args.question)?;
    let (lo, hi) = parse_n_range(&args.n_range)?;
    println!(
        "# numerical evidence only; nothing below is a proof (root tol {:.1e})",
        args.tol
    );
    match question {
        EvidenceQuestion::Q1 => {
            println!(
                "# friendship F_n real-root counts; real means |Im z| < {REAL_IM_THRESHOLD_COEFF:.1e}*(1+|Re z|)"
            );
            real_root_table(FamilySpec::Friendship { n: 1 }, lo, hi, args.tol)?;
        }
        EvidenceQuestion::C1 => {
            println!(
                "# flower F_(4,n) real-root counts; real means |Im z| < {REAL_IM_THRESHOLD_COEFF:.1e}*(1+|Re z|)"
            );
            real_root_table(FamilySpec::Flower { q: 4, n: 1 }, lo, hi, args.tol)?;
        }
        EvidenceQuestion::Q3 => {
            println!("# flower F_(4,n) empirical maximum root modulus");
            for n in lo..=hi {
                let set = member_roots(&FamilySpec::Flower { q: 4, n: 1 }, n, args.tol)?;
                let max_mod = set
                    .nonzero_roots
                    .iter()
                    .map(|z| z.norm())
                    .fold(0.0f64, f64::max);
                println!("n={n} max_modulus={max_mod:.6}");
            }
        }
        EvidenceQuestion::C2 => {
            // the root cloud splits into bounded pieces and one unbounded
            // piece; only roots whose two largest |λ_i| are the two cubic
            // eigenpolynomials belong to the unbounded curve, so the fit is
            // taken over that bucket inside a fixed window
            let fam = dompoly::expsum::family_flower4();
            println!("# least-squares fit of (Re z - h)^2 - (Im z)^2 = c to flower F_(4,n) roots");
            println!("# `branch` = roots attributed to the dominant cubic pair, |z| <= {FIT_WINDOW_RADIUS}");
            for n in lo..=hi {
                let set = member_roots(&FamilySpec::Flower { q: 4, n: 1 }, n, args.tol)?;
                let branch: Vec<_> = set
                    .nonzero_roots
                    .iter()
                    .copied()
                    .filter(|&z| z.norm() <= FIT_WINDOW_RADIUS && on_cubic_pair(&fam, z))
                    .collect();
                let all_fit = describe_fit(fit_axis_hyperbola(&set.nonzero_roots));
                let branch_fit = describe_fit(fit_axis_hyperbola(&branch));
                println!(
                    "n={n} roots={} all[{all_fit}] branch_roots={} branch[{branch_fit}]",
                    set.nonzero_roots.len(),
                    branch.len(),
                );
            }
        }
    }
    Ok(())
}

/// Window for the branch fit; the limit curves of a fixed bounded region
/// are what the root clouds approach.
const FIT_WINDOW_RADIUS: f64 = 3.0;

fn describe_fit(fit: Option<dompoly::bkw::HyperbolaFit>) -> String {
    match fit {
        Some(f) => format!("h={:.6} c={:.6} rms={:.6}", f.center, f.constant, f.rms),
        None => "degenerate".to_string(),
    }
}

/// True when the two largest `|λ_i(z)|` belong to the two cubic terms.
fn on_cubic_pair(fam: &dompoly::expsum::ExpSumFamily, z: dompoly::Complex64) -> bool {
    let mut mods: Vec<(usize, f64)> = fam
        .terms()
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let m = t
                .lambda
                .evaluate_complex(z)
                .map(|v| v.norm())
                .unwrap_or(f64::NAN);
            (i, m)
        })
        .collect();
    mods.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap_or(std::cmp::Ordering::Equal));
    let top: [usize; 2] = [mods[0].0, mods[1].0];
    let cubics: Vec<usize> = fam
        .terms()
        .iter()
        .enumerate()
        .filter(|(_, t)| t.lambda.degree() == Some(3))
        .map(|(i, _)| i)
        .collect();
    top.iter().all(|i| cubics.contains(i))
}

fn real_root_table(spec: FamilySpec, lo: usize, hi: usize, tol: f64) -> Result<(), CliError> {
    for n in lo..=hi {
        let set = member_roots(&spec, n, tol)?;
        let report = real_roots_of_set(&set);
        println!(
            "n={n} zero_multiplicity={} nonzero_real_roots={} values=[{}]",
            report.zero_multiplicity,
            report.values.len(),
            report
                .values
                .iter()
                .map(|v| format!("{v:.6}"))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok(())
}
