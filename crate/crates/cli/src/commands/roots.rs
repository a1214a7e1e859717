use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::Args;
use dompoly::roots::{RootFindConfig, RootSet, RootsError, DEFAULT_ROOT_TOL};

use super::{compute_member_roots, parse_family_range};
use crate::svg::Scatter;
use crate::CliError;

#[derive(Args, Debug)]
pub struct RootsArgs {
    /// Family with an n range, e.g. `book:1..30` or `flower:4,1..12`.
    #[arg(long)]
    pub family: String,

    /// Output CSV (`family,n,re,im,residual`). Zero-root multiplicities and
    /// per-n diagnostics go to the same path with a `.json` extension.
    #[arg(long)]
    pub out: PathBuf,

    /// Convergence tolerance on the relative root step.
    #[arg(long, default_value_t = DEFAULT_ROOT_TOL)]
    pub tol: f64,

    /// Optional SVG scatter of all roots.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

pub fn run(args: &RootsArgs) -> Result<(), CliError> {
    let (spec, lo, hi) = parse_family_range(&args.family)?;
    let config = RootFindConfig {
        tol: args.tol,
        ..RootFindConfig::default()
    };

    let mut csv = String::from("family,n,re,im,residual\n");
    let mut summaries = Vec::new();
    let mut points = Vec::new();
    let mut any_failed = false;

    for n in lo..=hi {
        let member = spec.with_n(n);
        let (set, failed): (RootSet, Vec<usize>) = match compute_member_roots(&member, &config)? {
            Ok(set) => (set, Vec::new()),
            Err(RootsError::NonConvergence { partial, failed }) => {
                any_failed = true;
                (partial, failed)
            }
            Err(e) => return Err(CliError::Numeric(e.to_string())),
        };
        for (z, r) in set.nonzero_roots.iter().zip(&set.residuals) {
            writeln!(csv, "{member},{n},{:.17e},{:.17e},{:.3e}", z.re, z.im, r).unwrap();
            points.push((z.re, z.im));
        }
        summaries.push(serde_json::json!({
            "family": member.to_string(),
            "n": n,
            "zero_multiplicity": set.zero_multiplicity,
            "nonzero_roots": set.nonzero_roots.len(),
            "max_residual": set.residuals.iter().cloned().fold(0.0f64, f64::max),
            "failed_root_indices": failed,
        }));
    }

    std::fs::write(&args.out, csv)?;
    let summary = serde_json::json!({
        "tol": args.tol,
        "members": summaries,
    });
    std::fs::write(
        side_json_path(&args.out),
        serde_json::to_string_pretty(&summary).unwrap() + "\n",
    )?;

    if let Some(svg_path) = &args.svg {
        let mut plot = Scatter::new();
        plot.points("root", &points);
        std::fs::write(svg_path, plot.render())?;
    }

    if any_failed {
        Err(CliError::Numeric(
            "root finder failed to converge on some roots (see the side JSON)".into(),
        ))
    } else {
        Ok(())
    }
}

pub fn side_json_path(out: &Path) -> PathBuf {
    out.with_extension("json")
}
