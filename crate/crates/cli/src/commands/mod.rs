pub mod evidence;
pub mod limits;
pub mod poly;
pub mod roots;
pub mod verify;

use dompoly::families::FamilySpec;
use dompoly::poly::Polynomial;

use crate::CliError;

/// How a polynomial was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Closed,
    Recurrence,
    Oracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Recurrence => "recurrence",
            Method::Oracle => "oracle",
        }
    }

    pub fn parse(s: &str) -> Result<Method, CliError> {
        match s {
            "closed" => Ok(Method::Closed),
            "recurrence" => Ok(Method::Recurrence),
            "oracle" => Ok(Method::Oracle),
            other => Err(CliError::Usage(format!(
                "unknown method `{other}` (expected closed|recurrence|oracle)"
            ))),
        }
    }
}

/// Computes `D(G, x)` for a family member by the requested method, or by the
/// best available one (closed form, then recurrence, then oracle).
pub fn family_polynomial(
    spec: &FamilySpec,
    method: Option<Method>,
) -> Result<(Polynomial, Method), CliError> {
    match method {
        Some(Method::Closed) => spec
            .closed_form()
            .map(|p| (p, Method::Closed))
            .ok_or_else(|| CliError::Usage(format!("no closed form for `{spec}`"))),
        Some(Method::Recurrence) => spec
            .recurrence_form()
            .map(|p| (p, Method::Recurrence))
            .ok_or_else(|| CliError::Usage(format!("no recurrence evaluator for `{spec}`"))),
        Some(Method::Oracle) => {
            let g = spec.build()?;
            let p = dompoly::domset::domination_polynomial_bruteforce(&g)?;
            Ok((p, Method::Oracle))
        }
        None => {
            if let Some(p) = spec.closed_form() {
                Ok((p, Method::Closed))
            } else if let Some(p) = spec.recurrence_form() {
                Ok((p, Method::Recurrence))
            } else {
                let g = spec.build()?;
                let p = dompoly::domset::domination_polynomial_bruteforce(&g)?;
                Ok((p, Method::Oracle))
            }
        }
    }
}

/// Roots of a family member, preferring the structured exponential-sum
/// evaluation (stable at any family index) over expanded coefficients.
/// The outer error is an input problem; the inner result carries
/// root-finder convergence.
pub fn compute_member_roots(
    spec: &FamilySpec,
    config: &dompoly::roots::RootFindConfig,
) -> Result<Result<dompoly::roots::RootSet, dompoly::roots::RootsError>, CliError> {
    if let Some(fam) = dompoly::expsum::family_for_spec(spec) {
        Ok(dompoly::roots::find_family_roots(&fam, spec.n(), config))
    } else {
        let (poly, _) = family_polynomial(spec, None)?;
        Ok(dompoly::roots::find_roots_with(&poly, config))
    }
}

/// Parses `a..b` (inclusive) or a single `n` into a range.
pub fn parse_n_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad n-range `{s}` (expected `a..b` or `n`)"));
    if let Some((a, b)) = s.split_once("..") {
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a == 0 || b < a {
            return Err(bad());
        }
        Ok((a, b))
    } else {
        let n: usize = s.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok((n, n))
    }
}

/// Parses a family spec where the varying parameter `n` may be an `a..b`
/// range, e.g. `book:1..30`, `flower:4,1..12`, `gbook:1..5,5`. Returns the
/// spec at `n = a` and the range.
pub fn parse_family_range(s: &str) -> Result<(FamilySpec, usize, usize), CliError> {
    let usage = |msg: String| CliError::Usage(msg);
    let (kind, params) = s
        .split_once(':')
        .ok_or_else(|| usage(format!("unknown family spec `{s}`")))?;
    let parts: Vec<&str> = params.split(',').collect();
    let ranged: Vec<usize> = (0..parts.len())
        .filter(|&i| parts[i].contains(".."))
        .collect();
    let idx = match ranged[..] {
        [] => parts.len() - 1,
        [i] => i,
        _ => return Err(usage(format!("more than one range in `{s}`"))),
    };
    let (lo, hi) = parse_n_range(parts[idx])?;
    let at = |n: usize| -> String {
        let rendered: Vec<String> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if i == idx {
                    n.to_string()
                } else {
                    p.to_string()
                }
            })
            .collect();
        format!("{kind}:{}", rendered.join(","))
    };
    let spec: FamilySpec = at(lo)
        .parse()
        .map_err(|e: dompoly::families::FamilyError| usage(e.to_string()))?;
    if hi > lo {
        // the ranged slot must be the parameter that varies with n
        let next: FamilySpec = at(lo + 1)
            .parse()
            .map_err(|e: dompoly::families::FamilyError| usage(e.to_string()))?;
        if spec.with_n(lo + 1) != next {
            return Err(usage(format!("the range in `{s}` must be over n")));
        }
    }
    Ok((spec, lo, hi))
}
