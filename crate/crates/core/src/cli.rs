//! Command-line surface. `run` does all the work and returns the report
//! with its exit code; the binary only prints.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, Structure};
use crate::cohomology::{hl_dims, z2_b2};
use crate::constructions::dialgebra_to_leibniz;
use crate::differentials::{check_universal_property, omega, omega_mod_d, DialgebraBimodule};
use crate::error::{Error, Result};
use crate::format;
use crate::graded::{
    check_dialgebra, check_grading, check_leibniz, check_lie_super, invariant_form_report,
    CheckReport, GradedBasis, LeibnizModule, LeibnizSuperalgebra,
};
use crate::linalg::{format_scalar, SparseVec};
use crate::uce::{is_perfect, uce};
use crate::verify;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

const MAX_COUNTEREXAMPLES: usize = 20;

#[derive(Parser, Debug)]
#[command(
    name = "superleib",
    version,
    about = "Exact checks for Leibniz superalgebras and dialgebras"
)]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall time in the report (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every applicable identity check.
    Check {
        /// AlgebraFile path or catalog name.
        input: String,
        /// Degree bound for free structures named without one.
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Dimensions of Z^n, B^n and HL^n.
    Cohomology {
        input: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Coefficients::Trivial)]
        coefficients: Coefficients,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Universal central extension of a perfect algebra.
    Uce {
        input: String,
        /// Compare the kernel with Ω of the coefficient dialgebra.
        #[arg(long)]
        compare_omega: bool,
    },
    /// Kähler differentials of a commutative dialgebra.
    Omega { input: String },
    /// List catalog entries.
    Catalog,
    /// Run the full acceptance suite.
    VerifyPaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Coefficients {
    Trivial,
    Adjoint,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Counterexample {
    pub axiom: String,
    pub indices: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub checked: usize,
    pub skipped: usize,
    pub failures: usize,
    /// First failures in index order.
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub input: Option<String>,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub dimensions: BTreeMap<String, usize>,
    pub properties: BTreeMap<String, bool>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl Report {
    fn new(command: &str, input: Option<&str>) -> Self {
        Self {
            command: command.to_string(),
            input: input.map(str::to_string),
            passed: true,
            checks: Vec::new(),
            dimensions: BTreeMap::new(),
            properties: BTreeMap::new(),
            notes: Vec::new(),
            error: None,
            wall_time_ms: None,
        }
    }

    fn add(&mut self, name: &str, rep: &CheckReport, basis: Option<&GradedBasis>) {
        let mut failures = rep.failures.clone();
        failures.sort_by(|a, b| (&a.indices, &a.axiom).cmp(&(&b.indices, &b.axiom)));
        let counterexamples = failures
            .iter()
            .take(MAX_COUNTEREXAMPLES)
            .map(|f| Counterexample {
                axiom: f.axiom.clone(),
                indices: f.indices.iter().map(|i| index_name(basis, *i)).collect(),
                residual: if f.axiom == "invariance" {
                    f.residual.get(0).map_or_else(|| "0".into(), format_scalar)
                } else {
                    vector_string(basis, &f.residual)
                },
            })
            .collect();
        self.checks.push(Check {
            name: name.to_string(),
            passed: rep.passed(),
            checked: rep.checked,
            skipped: rep.skipped,
            failures: rep.failures.len(),
            counterexamples,
        });
        self.passed &= rep.passed();
    }

    fn flag(&mut self, name: &str, ok: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed: ok,
            checked: 1,
            skipped: 0,
            failures: usize::from(!ok),
            counterexamples: Vec::new(),
        });
        if let Some(d) = detail {
            self.notes.push(d);
        }
        self.passed &= ok;
    }

    fn dim(&mut self, name: &str, v: usize) {
        self.dimensions.insert(name.to_string(), v);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(i) = &self.input {
            out += &format!("input: {i}\n");
        }
        for c in &self.checks {
            out += &format!(
                "check {}: {} ({} checked, {} skipped, {} failing)\n",
                c.name,
                if c.passed { "PASS" } else { "FAIL" },
                c.checked,
                c.skipped,
                c.failures
            );
            for x in &c.counterexamples {
                out += &format!(
                    "  {} ({}) residual {}\n",
                    x.axiom,
                    x.indices.join(", "),
                    x.residual
                );
            }
        }
        for (k, v) in &self.dimensions {
            out += &format!("dim {k}: {v}\n");
        }
        for (k, v) in &self.properties {
            out += &format!("property {k}: {}\n", if *v { "yes" } else { "no" });
        }
        for n in &self.notes {
            out += &format!("note: {n}\n");
        }
        if let Some(e) = &self.error {
            out += &format!("error: {e}\n");
        }
        if let Some(t) = self.wall_time_ms {
            out += &format!("wall time: {t} ms\n");
        }
        out += &format!(
            "result: {}\n",
            if self.error.is_some() {
                "ERROR"
            } else if self.passed {
                "PASS"
            } else {
                "FAIL"
            }
        );
        out
    }
}

fn index_name(basis: Option<&GradedBasis>, i: usize) -> String {
    match basis {
        Some(b) if i < b.dim() => b.name(i).to_string(),
        _ => i.to_string(),
    }
}

fn vector_string(basis: Option<&GradedBasis>, v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| format!("{} {}", format_scalar(c), index_name(basis, i)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// An existing file is parsed as an AlgebraFile; anything else is a
/// catalog name. Free entries without a degree get `max_degree`.
pub fn load(input: &str, max_degree: usize) -> Result<Structure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return format::parse(&text);
    }
    let parts: Vec<&str> = input.split(':').collect();
    if let [kind @ ("free_leibniz" | "free_dias"), p] = parts.as_slice() {
        return catalog::lookup(&format!("{kind}:{p}:{max_degree}"));
    }
    catalog::lookup(input)
}

fn leibniz_of(s: &Structure, notes: &mut Vec<String>) -> Result<LeibnizSuperalgebra> {
    Ok(match s {
        Structure::Leibniz { algebra, .. } => algebra.clone(),
        Structure::FreeLeibniz(f) => f.algebra.clone(),
        Structure::Dialgebra(d) => {
            notes.push("dialgebra converted with [x,y] = x ⊢ y - (-1)^{|x||y|} y ⊣ x".into());
            dialgebra_to_leibniz(d)?
        }
        Structure::FreeDialgebra(f) => {
            notes.push("dialgebra converted with [x,y] = x ⊢ y - (-1)^{|x||y|} y ⊣ x".into());
            dialgebra_to_leibniz(&f.dialgebra)?
        }
    })
}

fn cmd_check(input: &str, max_degree: usize) -> Result<Report> {
    let s = load(input, max_degree)?;
    let mut r = Report::new("check", Some(input));
    match &s {
        Structure::Leibniz { algebra, form, .. } => {
            r.dim("algebra", algebra.dim());
            r.add("leibniz", &check_leibniz(algebra), Some(algebra.basis()));
            r.add("grading", &check_grading(algebra), Some(algebra.basis()));
            if let Some(f) = form {
                r.flag(
                    "form supersymmetric",
                    f.is_even_supersymmetric(algebra.basis()),
                    None,
                );
                r.add(
                    "form invariant",
                    &invariant_form_report(algebra, f),
                    Some(algebra.basis()),
                );
            }
            r.properties
                .insert("lie superalgebra".into(), check_lie_super(algebra));
            r.properties.insert("perfect".into(), is_perfect(algebra));
        }
        Structure::Dialgebra(d) => {
            r.dim("dialgebra", d.dim());
            r.add("dialgebra", &check_dialgebra(d), Some(d.basis()));
            r.add("grading", &check_grading(d), Some(d.basis()));
            if let Ok(l) = dialgebra_to_leibniz(d) {
                r.add("leibniz image", &check_leibniz(&l), Some(l.basis()));
            }
            r.properties
                .insert("commutative".into(), d.is_commutative());
            r.properties
                .insert("associative type".into(), d.is_associative_type());
            r.properties.insert(
                "bar unit".into(),
                d.bar_unit().is_some() || d.find_bar_unit().is_some(),
            );
        }
        Structure::FreeLeibniz(f) => {
            r.dim("truncation", f.algebra.dim());
            r.dim("max degree", f.max_degree);
            r.add("leibniz", &f.check(), Some(f.algebra.basis()));
            r.add(
                "grading",
                &check_grading(&f.algebra),
                Some(f.algebra.basis()),
            );
        }
        Structure::FreeDialgebra(f) => {
            r.dim("truncation", f.dialgebra.dim());
            r.dim("max degree", f.max_degree);
            r.add("dialgebra", &f.check(), Some(f.dialgebra.basis()));
            r.add(
                "grading",
                &check_grading(&f.dialgebra),
                Some(f.dialgebra.basis()),
            );
        }
    }
    Ok(r)
}

fn cmd_cohomology(
    input: &str,
    n: usize,
    coefficients: Coefficients,
    max_degree: usize,
) -> Result<Report> {
    if n > 3 {
        return Err(Error::Unsupported(format!(
            "cohomology in degree {n} (at most 3)"
        )));
    }
    let s = load(input, max_degree)?;
    let mut r = Report::new("cohomology", Some(input));
    let l = leibniz_of(&s, &mut r.notes)?;
    let m = match coefficients {
        Coefficients::Trivial => LeibnizModule::trivial_even(&l, 1),
        Coefficients::Adjoint => LeibnizModule::adjoint(&l),
    };
    let dims = hl_dims(&m, n, None);
    r.dim("algebra", l.dim());
    r.dim(&format!("C{n}"), dims.cochains);
    r.dim(&format!("Z{n}"), dims.cocycles);
    r.dim(&format!("B{n}"), dims.coboundaries);
    r.dim(&format!("HL{n}"), dims.hl);
    if n == 2 && coefficients == Coefficients::Trivial {
        let space = z2_b2(&l, 1);
        r.dim("Z2 even", space.z2.dim());
        r.dim("B2 even", space.b2.dim());
        r.dim("HL2 even", space.hl2_dim);
    }
    r.notes.push(format!(
        "{} coefficients",
        match coefficients {
            Coefficients::Trivial => "trivial one-dimensional even",
            Coefficients::Adjoint => "adjoint",
        }
    ));
    Ok(r)
}

fn cmd_uce(input: &str, compare_omega: bool) -> Result<Report> {
    let s = load(input, 3)?;
    let mut r = Report::new("uce", Some(input));
    let l = leibniz_of(&s, &mut r.notes)?;
    r.dim("algebra", l.dim());
    let u = uce(&l)?;
    r.flag(
        "perfect",
        true,
        Some(format!("[L, L] spans all {} basis vectors", l.dim())),
    );
    let verified = u.extension.verify(&l);
    r.flag(
        "central extension",
        verified.is_ok(),
        verified.err().map(|e| e.to_string()),
    );
    r.add(
        "leibniz",
        &check_leibniz(u.total()),
        Some(u.total().basis()),
    );
    r.dim("extension", u.total().dim());
    r.dim("kernel", u.kernel_dim());
    if compare_omega {
        let Structure::Leibniz {
            coefficients: Some(d),
            ..
        } = &s
        else {
            return Err(Error::Unsupported(
                "--compare-omega needs a current algebra such as sl2xPoly:3".into(),
            ));
        };
        let om = omega(d)?.dim();
        r.dim("omega", om);
        let ok = om == u.kernel_dim();
        r.flag(
            "kernel matches omega",
            ok,
            Some(if ok {
                "MATCH".into()
            } else {
                "MISMATCH".into()
            }),
        );
    }
    Ok(r)
}

fn cmd_omega(input: &str) -> Result<Report> {
    let s = load(input, 3)?;
    let d = match &s {
        Structure::Dialgebra(d) => d.clone(),
        Structure::FreeDialgebra(f) => f.dialgebra.clone(),
        _ => return Err(Error::Unsupported("omega needs a dialgebra".into())),
    };
    let mut r = Report::new("omega", Some(input));
    let dm = omega(&d)?;
    let quotient = omega_mod_d(&dm);
    r.dim("dialgebra", d.dim());
    r.dim("omega", dm.dim());
    r.dim("omega mod dD", quotient.dim);
    r.add("leibniz rule", &dm.check_leibniz_rule(), None);
    r.add("symmetry", &dm.check_symmetry(), None);
    let up = check_universal_property(&dm, &DialgebraBimodule::regular(&d));
    r.dim("der(D, D)", up.der_dim);
    r.flag("universal property", up.holds, None);
    let rest: Vec<String> = quotient
        .exact
        .complement_indices()
        .into_iter()
        .map(|i| dm.names()[i].clone())
        .collect();
    r.notes
        .push(format!("omega basis: {}", name_list(dm.names())));
    r.notes
        .push(format!("omega mod dD basis: {}", name_list(&rest)));
    Ok(r)
}

fn name_list(names: &[String]) -> String {
    if names.is_empty() {
        "(empty)".into()
    } else {
        names.join(" ")
    }
}

fn cmd_catalog() -> Report {
    let mut r = Report::new("catalog", None);
    r.notes = catalog::ENTRIES
        .iter()
        .map(|(p, d)| format!("{p}: {d}"))
        .collect();
    r
}

fn cmd_verify_paper() -> Report {
    let mut r = Report::new("verify-paper", None);
    for c in verify::run_all() {
        r.flag(&format!("criterion {}: {}", c.id, c.name), c.passed, None);
        r.notes
            .extend(c.details.into_iter().map(|d| format!("[{}] {d}", c.id)));
    }
    r
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> (Report, i32) {
    let start = Instant::now();
    let (name, input) = match &cli.command {
        Command::Check { input, .. } => ("check", Some(input.as_str())),
        Command::Cohomology { input, .. } => ("cohomology", Some(input.as_str())),
        Command::Uce { input, .. } => ("uce", Some(input.as_str())),
        Command::Omega { input } => ("omega", Some(input.as_str())),
        Command::Catalog => ("catalog", None),
        Command::VerifyPaper => ("verify-paper", None),
    };
    let result = match &cli.command {
        Command::Check { input, max_degree } => cmd_check(input, *max_degree),
        Command::Cohomology {
            input,
            n,
            coefficients,
            max_degree,
        } => cmd_cohomology(input, *n, *coefficients, *max_degree),
        Command::Uce {
            input,
            compare_omega,
        } => cmd_uce(input, *compare_omega),
        Command::Omega { input } => cmd_omega(input),
        Command::Catalog => Ok(cmd_catalog()),
        Command::VerifyPaper => Ok(cmd_verify_paper()),
    };
    let (mut report, code) = match result {
        Ok(r) => {
            let code = if r.passed { EXIT_PASS } else { EXIT_FAIL };
            (r, code)
        }
        Err(e) => {
            let mut r = Report::new(name, input);
            r.passed = false;
            r.error = Some(e.to_string());
            (r, EXIT_INPUT)
        }
    };
    if cli.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    (report, code)
}
