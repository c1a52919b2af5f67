use brauer_witness::witness::{
    obstruction_report_built, sp_coupling_generator, specialization_agreement, Witness, WitnessSpec,
};
use brauer_witness::Group;
use clap::ValueEnum;
use serde_json::json;

use crate::{report_error, Output, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GroupArg {
    Sp,
    So,
}

#[derive(clap::Args, Debug)]
pub struct Args {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Half the dimension of the representation.
    #[arg(long)]
    n: usize,
    /// Number of generators.
    #[arg(long)]
    g: usize,
    /// Append the coupling generator `[[√x J, yJ], [y^2 J, -√x J]]` (Sp only).
    #[arg(long)]
    couple: bool,
    /// Also compare the isotropy verdict with this many random finite-field
    /// specializations (n <= 2).
    #[arg(long, value_name = "COUNT")]
    specializations: Option<usize>,
    #[command(flatten)]
    out: Output,
}

pub fn run(a: &Args) -> u8 {
    let group = match a.group {
        GroupArg::Sp => Group::Sp,
        GroupArg::So => Group::SO,
    };
    let spec = match WitnessSpec::new(group, a.n, a.g) {
        Ok(s) => s,
        Err(e) => return report_error(&e),
    };
    let spec = if a.couple {
        if group != Group::Sp {
            eprintln!("error: --couple applies to the symplectic witness only");
            return EXIT_USAGE;
        }
        spec.with_extra(&[sp_coupling_generator(a.n)])
    } else {
        spec
    };
    let built = match Witness::build(&spec) {
        Ok(w) => w,
        Err(e) => return report_error(&e),
    };
    let report = match obstruction_report_built(&built) {
        Ok(r) => r,
        Err(e) => return report_error(&e),
    };
    let mut value = serde_json::to_value(&report).expect("serializable");
    let mut agree = true;
    let mut run = json!({ "seed": a.out.seed });
    if let Some(k) = a.specializations {
        match specialization_agreement(&built, k, a.out.seed) {
            Ok(s) => {
                agree = s.all_agree();
                println!("specializations: {}/{} agree with the generic verdict", s.agreements(), s.points.len());
                run["specializations"] = serde_json::to_value(&s).expect("serializable");
            }
            Err(e) => return report_error(&e),
        }
    }
    value["run"] = run;
    for c in &report.checks {
        println!("{:<24} {}", c.name, c.verdict);
    }
    println!("verdict: {}", report.verdict);
    if let Some(c) = &report.conclusion {
        println!("{}", c);
    }
    if let Err(code) = a.out.emit(&value) {
        return code;
    }
    if report.passed() && agree {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}
