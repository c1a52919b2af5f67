use brauer_witness::parse::parse_element;
use brauer_witness::quaternion::{conic_search, residue_symbol_at_x, DEFAULT_SEARCH_BUDGET};
use brauer_witness::{Error, Exec, L};
use serde_json::json;

use crate::{report_error, Output, EXIT_PASS};

#[derive(clap::Args, Debug)]
pub struct Args {
    /// First entry of the symbol, an element of Q(x,y).
    #[arg(long, allow_hyphen_values = true)]
    f: String,
    /// Second entry of the symbol.
    #[arg(long, allow_hyphen_values = true)]
    g: String,
    /// Also search for a solution of f u^2 + g v^2 = w^2 up to this total degree.
    #[arg(long = "search-degree", visible_alias = "search", value_name = "DMAX")]
    search_degree: Option<u32>,
    /// Coefficient bound for the search.
    #[arg(long, default_value_t = 2)]
    search_coeff: i64,
    #[command(flatten)]
    out: Output,
}

fn polynomial(s: &str, what: &str) -> Result<brauer_witness::Poly<brauer_witness::Rational>, Error> {
    let e: L = parse_element(s)?;
    if !e.is_polynomial() {
        return Err(Error::InvalidFlag(format!("the search needs polynomial {}, got {}", what, e)));
    }
    Ok(e.numer().clone())
}

pub fn run(a: &Args) -> u8 {
    let parsed = parse_element::<L>(&a.f).and_then(|f| Ok((f, parse_element::<L>(&a.g)?)));
    let (f, g) = match parsed {
        Ok(p) => p,
        Err(e) => return report_error(&e),
    };
    let cert = match residue_symbol_at_x(&f, &g) {
        Ok(c) => c,
        Err(e) => return report_error(&e),
    };
    println!("residue at x: {} ({})", cert.residue, if cert.square_geometric { "square" } else { "not a square" });
    println!("verdict: {}", cert.split_verdict);
    let mut value = json!({ "residue": cert });
    if let Some(d) = a.search_degree {
        if a.search_coeff < 0 {
            return report_error(&Error::InvalidFlag("--search-coeff must be non-negative".into()));
        }
        let found = polynomial(&a.f, "f")
            .and_then(|pf| Ok((pf, polynomial(&a.g, "g")?)))
            .and_then(|(pf, pg)| conic_search(&pf, &pg, d, a.search_coeff, DEFAULT_SEARCH_BUDGET, Exec::Parallel));
        let sol = match found {
            Ok(s) => s,
            Err(e) => return report_error(&e),
        };
        match &sol {
            Some(s) => println!("search: solution u = {}, v = {}, w = {}", s.u, s.v, s.w),
            None => println!(
                "search: no solution with degree <= {} and coefficients in [-{}, {}] (not a proof)",
                d, a.search_coeff, a.search_coeff
            ),
        }
        value["search"] = json!({
            "degree": d,
            "coeff_bound": a.search_coeff,
            "solution": sol.map(|s| json!({ "u": s.u.to_string(), "v": s.v.to_string(), "w": s.w.to_string() })),
        });
    }
    value["run"] = json!({ "seed": a.out.seed });
    match a.out.emit(&value) {
        Ok(()) => EXIT_PASS,
        Err(c) => c,
    }
}
