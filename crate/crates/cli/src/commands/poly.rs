use std::path::PathBuf;

use clap::Args;
use dompoly::domset::domination_polynomial_bruteforce;
use dompoly::families::FamilySpec;
use dompoly::graph::Graph;

use super::{family_polynomial, Method};
use crate::CliError;

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// Family member, e.g. `book:3`, `flower:4,2`, `star:5`.
    #[arg(long, conflicts_with = "edgelist")]
    pub family: Option<String>,

    /// Edge-list file: header `n <order>`, then `u v` per line. Always
    /// computed by the oracle.
    #[arg(long)]
    pub edgelist: Option<PathBuf>,

    /// closed | recurrence | oracle (default: best available).
    #[arg(long)]
    pub method: Option<String>,

    /// Write `{input, method, polynomial}` JSON here; coefficients are
    /// decimal strings indexed by exponent.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

pub fn run(args: &PolyArgs) -> Result<(), CliError> {
    let method = args.method.as_deref().map(Method::parse).transpose()?;
    let (input, poly, used) = match (&args.family, &args.edgelist) {
        (Some(f), None) => {
            let spec: FamilySpec = f.parse()?;
            let (poly, used) = family_polynomial(&spec, method)?;
            (spec.to_string(), poly, used)
        }
        (None, Some(path)) => {
            if method.is_some_and(|m| m != Method::Oracle) {
                return Err(CliError::Usage(
                    "--edgelist input is always computed by the oracle".into(),
                ));
            }
            let text = std::fs::read_to_string(path)?;
            let g = Graph::parse_edge_list(&text)?;
            let poly = domination_polynomial_bruteforce(&g)?;
            (path.display().to_string(), poly, Method::Oracle)
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --family or --edgelist is required".into(),
            ))
        }
    };

    println!("{poly}");

    if let Some(path) = &args.json {
        let doc = serde_json::json!({
            "input": input,
            "method": used.name(),
            "polynomial": poly.to_json_array(),
        });
        std::fs::write(path, serde_json::to_string_pretty(&doc).unwrap() + "\n")?;
    }
    Ok(())
}
