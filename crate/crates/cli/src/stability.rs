use std::path::PathBuf;

use brauer_witness::stability::{is_stable, Method, Verdict, DEFAULT_SUBSPACE_BUDGET};
use brauer_witness::tuple_json::{FieldTag, TupleJson};
use brauer_witness::{Error, Exec, Fp, Group, Rational, Symbols, K, L};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::{report_error, Output, EXIT_FAIL, EXIT_PASS};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Burnside,
    Eigen,
    Enumerate,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Burnside => Method::Burnside,
            MethodArg::Eigen => Method::Eigen,
            MethodArg::Enumerate => Method::Enumerate,
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct Args {
    /// Tuple file in the JSON tuple format.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "enumerate")]
    method: MethodArg,
    /// Run every other applicable method and require identical verdicts.
    #[arg(long)]
    cross_check: bool,
    /// Maximum number of subspaces the enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_SUBSPACE_BUDGET)]
    budget_subspaces: u128,
    /// Run the enumeration on the calling thread only.
    #[arg(long)]
    sequential: bool,
    #[command(flatten)]
    out: Output,
}

struct Outcome {
    field: String,
    group: Group,
    primary: Value,
    stable: bool,
    others: Vec<Value>,
    agree: bool,
}

fn verdict_json<F: Symbols>(v: &Verdict<F>) -> Value {
    let cert = v.certificate.as_ref().map(|c| {
        json!({
            "subspace": c.subspace.vectors().iter().map(|w| w.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "flag_basis": serde_json::to_value(brauer_witness::matrix::MatJson::from(&c.flag.basis)).expect("serializable"),
            "weights": c.flag.ops.weights(),
            "mu": c.mu,
        })
    });
    json!({
        "method": v.method,
        "stable": v.stable,
        "certificate": cert,
        "note": v.note,
    })
}

fn analyze<F: Symbols>(doc: &TupleJson, a: &Args) -> Result<Outcome, Error> {
    let t = doc.to_tuple::<F>()?;
    let group = doc.form.group();
    let exec = if a.sequential { Exec::Sequential } else { Exec::Parallel };
    let primary = is_stable(&t, group, a.method.into(), a.budget_subspaces, exec)?;
    let mut others = Vec::new();
    let mut agree = true;
    if a.cross_check {
        for m in [Method::Burnside, Method::Eigen, Method::Enumerate] {
            if m == primary.method {
                continue;
            }
            match is_stable(&t, group, m, a.budget_subspaces, exec) {
                Ok(v) => {
                    agree &= v.stable == primary.stable;
                    others.push(verdict_json(&v));
                }
                Err(e @ (Error::MethodNotApplicable(_) | Error::Budget { .. })) => {
                    others.push(json!({ "method": m, "skipped": e.to_string() }));
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(Outcome {
        field: F::field_name(),
        group,
        stable: primary.stable,
        primary: verdict_json(&primary),
        others,
        agree,
    })
}

macro_rules! prime_dispatch {
    ($p:expr, $doc:expr, $args:expr; $($q:literal)*) => {
        match $p {
            $($q => analyze::<Fp<$q>>($doc, $args),)*
            p => Err(Error::Parse { offset: 0, msg: format!("prime fields are supported for p < 100, got {}", p) }),
        }
    };
}

pub fn run(a: &Args) -> u8 {
    let text = match std::fs::read_to_string(&a.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {}", a.input.display(), e);
            return crate::EXIT_USAGE;
        }
    };
    let doc = match TupleJson::parse(&text) {
        Ok(d) => d,
        Err(e) => return report_error(&e),
    };
    let outcome = match doc.field_tag() {
        Ok(FieldTag::Q) => analyze::<Rational>(&doc, a),
        Ok(FieldTag::RationalFunctions) => analyze::<L>(&doc, a),
        Ok(FieldTag::QuadraticExtension) => analyze::<K>(&doc, a),
        Ok(FieldTag::Fp(p)) => {
            prime_dispatch!(p, &doc, a; 2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97)
        }
        Err(e) => Err(e),
    };
    let o = match outcome {
        Ok(o) => o,
        Err(e) => return report_error(&e),
    };
    println!("{} over {}: {}", o.group.name(), o.field, if o.stable { "stable" } else { "unstable" });
    if let Some(c) = o.primary.get("certificate").filter(|c| !c.is_null()) {
        println!("destabilizing subspace: {}", c["subspace"]);
        println!("mu = {}", c["mu"]);
    }
    if a.cross_check {
        println!("cross-check: {}", if o.agree { "all applicable methods agree" } else { "methods disagree" });
    }
    let value = json!({
        "field": o.field,
        "group": o.group,
        "result": o.primary,
        "cross_check": if a.cross_check { Some(json!({ "agree": o.agree, "methods": o.others })) } else { None },
        "run": { "seed": a.out.seed, "budget_subspaces": a.budget_subspaces.to_string() },
    });
    if let Err(code) = a.out.emit(&value) {
        return code;
    }
    if o.agree {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
