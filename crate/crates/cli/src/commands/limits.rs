use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use dompoly::bkw::{classify_grid, BookLimitSet, GridOutcome, GridRegion, LimitVerdict};
use dompoly::expsum::{family_book, family_flower4, family_gbook5, ExpSumFamily};

use crate::svg::Scatter;
use crate::CliError;

#[derive(Args, Debug)]
pub struct LimitsArgs {
    /// book | gbook5 | flower4
    #[arg(long)]
    pub family: String,

    /// Rectangle `x0,x1,y0,y1`.
    #[arg(long, default_value = "-4,1,-2.5,2.5", allow_hyphen_values = true)]
    pub region: String,

    /// Grid resolution `RxC` (re nodes x im nodes), at least 2 each.
    #[arg(long, default_value = "200x200")]
    pub res: String,

    /// Output CSV (`re,im,verdict,margin`).
    #[arg(long)]
    pub out: PathBuf,

    /// Analytic limit-curve samples CSV (`curve,re,im`); book/gbook5 only.
    #[arg(long)]
    pub curves_out: Option<PathBuf>,

    /// Optional SVG overlay of verdicts and curves.
    #[arg(long)]
    pub svg: Option<PathBuf>,

    /// Relative modulus tie tolerance; default scales with the grid pitch.
    #[arg(long)]
    pub tie_tol: Option<f64>,
}

fn family_by_name(name: &str) -> Result<(ExpSumFamily, bool), CliError> {
    match name {
        "book" => Ok((family_book(), true)),
        "gbook5" => Ok((family_gbook5(), true)),
        "flower4" => Ok((family_flower4(), false)),
        other => Err(CliError::Usage(format!(
            "unknown limits family `{other}` (expected book|gbook5|flower4)"
        ))),
    }
}

fn parse_region(region: &str, res: &str) -> Result<GridRegion, CliError> {
    let bad_region = || CliError::Usage(format!("bad region `{region}` (expected x0,x1,y0,y1)"));
    let vals: Vec<f64> = region
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad_region())?;
    let [x0, x1, y0, y1] = vals[..] else {
        return Err(bad_region());
    };
    if !(x0 < x1 && y0 < y1) {
        return Err(bad_region());
    }
    let bad_res = || CliError::Usage(format!("bad resolution `{res}` (expected RxC, each >= 2)"));
    let (r, c) = res.split_once('x').ok_or_else(bad_res)?;
    let nx: usize = r.trim().parse().map_err(|_| bad_res())?;
    let ny: usize = c.trim().parse().map_err(|_| bad_res())?;
    if nx < 2 || ny < 2 {
        return Err(bad_res());
    }
    Ok(GridRegion {
        x0,
        x1,
        y0,
        y1,
        nx,
        ny,
    })
}

pub fn run(args: &LimitsArgs) -> Result<(), CliError> {
    let (fam, has_book_curves) = family_by_name(&args.family)?;
    let region = parse_region(&args.region, &args.res)?;
    if args.curves_out.is_some() && !has_book_curves {
        return Err(CliError::Usage(
            "--curves-out is only available for book and gbook5".into(),
        ));
    }
    // the tie condition is measure-zero; grids use a band proportional to
    // the node spacing so curves show up one node wide
    let tie_tol = args.tie_tol.unwrap_or(0.5 * region.pitch());

    let grid = classify_grid(&fam, &region, tie_tol);

    let mut csv = String::from("re,im,verdict,margin\n");
    let mut tie_pts = Vec::new();
    let mut alpha_pts = Vec::new();
    let mut pole_count = 0usize;
    for (z, outcome) in &grid {
        match outcome {
            GridOutcome::Classified(c) => {
                let verdict = match c.verdict {
                    LimitVerdict::NotLimit => "notlimit",
                    LimitVerdict::LimitByModulusTie => "tie",
                    LimitVerdict::LimitByAlphaZero => "alphazero",
                };
                writeln!(csv, "{:.12},{:.12},{verdict},{:.6e}", z.re, z.im, c.margin).unwrap();
                match c.verdict {
                    LimitVerdict::LimitByModulusTie => tie_pts.push((z.re, z.im)),
                    LimitVerdict::LimitByAlphaZero => alpha_pts.push((z.re, z.im)),
                    LimitVerdict::NotLimit => {}
                }
            }
            GridOutcome::Pole => {
                pole_count += 1;
                writeln!(csv, "{:.12},{:.12},pole,nan", z.re, z.im).unwrap();
            }
        }
    }
    std::fs::write(&args.out, csv)?;
    eprintln!(
        "limits: {} nodes, {} tie, {} alphazero, {} pole (tie_tol {:.3e})",
        grid.len(),
        tie_pts.len(),
        alpha_pts.len(),
        pole_count,
        tie_tol
    );

    let curve_samples = has_book_curves.then(|| BookLimitSet.curve_samples(400));
    if let (Some(path), Some(samples)) = (&args.curves_out, &curve_samples) {
        let mut csv = String::from("curve,re,im\n");
        for (id, z) in samples {
            writeln!(csv, "{},{:.12},{:.12}", id.name(), z.re, z.im).unwrap();
        }
        std::fs::write(path, csv)?;
    }

    if let Some(svg_path) = &args.svg {
        let mut plot = Scatter::new();
        plot.points("tie", &tie_pts);
        plot.points("alphazero", &alpha_pts);
        if let Some(samples) = &curve_samples {
            let curve_pts: Vec<(f64, f64)> = samples.iter().map(|(_, z)| (z.re, z.im)).collect();
            plot.points("curve", &curve_pts);
        }
        std::fs::write(svg_path, plot.render())?;
    }
    Ok(())
}
