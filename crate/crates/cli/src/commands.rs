use std::fmt::Write as _;

use apolar_core::apolar::{
    annihilator, capital_degree, hilbert_function, split_annihilator, split_quadrics, SplitIdeal,
};
use apolar_core::artin::{algebra_from_inverse_system, symmetric_decomposition};
use apolar_core::poincare::{betti_numbers, classify_hilbert, classify_polynomial, enumerate_decompositions, predict};
use apolar_core::poly::{parse, parse_infer};
use apolar_core::suites::{run_suite, Suite};
use apolar_core::{Error, Polynomial};

use crate::report::{self, Report};
use crate::{Cli, Command, Expr};

pub struct Output {
    pub report: Report,
    pub text: String,
    pub code: u8,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Invariant(_)) { 3 } else { 2 };
        Failure { message: e.to_string(), code }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure { message: message.into(), code: 2 }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn polynomial(text: &str, nvars: Option<usize>) -> Result<Polynomial, Failure> {
    Ok(match nvars {
        Some(n) => parse(text, n)?,
        None => parse_infer(text)?,
    })
}

fn with_input(report: &mut Report, f: &Polynomial) {
    report.input = Some(f.to_string());
    report.nvars = Some(f.nvars());
}

pub fn run(cli: &Cli, echo: Vec<String>) -> Result<Output, Failure> {
    let mut report = Report::new(echo);
    let mut text = String::new();
    let mut code = 0;
    match &cli.command {
        Command::Hilbert(Expr { expr, nvars }) => {
            let f = polynomial(expr, *nvars)?;
            with_input(&mut report, &f);
            let h = hilbert_function(&f)?;
            let cdeg = capital_degree(&f)?;
            let dim: usize = h.iter().sum();
            let sdeg = h.len() - 1;
            writeln!(text, "H = {}; dim = {dim}; sdeg = {sdeg}; cdeg = {cdeg}", tuple(&h)).unwrap();
            report.hilbert = Some(h);
            report.dim = Some(dim);
            report.socle_degree = Some(sdeg);
            report.capital_degree = Some(cdeg);
        }
        Command::Ann(Expr { expr, nvars }) => {
            let f = polynomial(expr, *nvars)?;
            with_input(&mut report, &f);
            let ann = annihilator(&f)?;
            let gens: Vec<String> = ann.minimal_generators().iter().map(|g| g.display_as('x').to_string()).collect();
            writeln!(text, "Ann(F) has {} minimal generators:", gens.len()).unwrap();
            for g in &gens {
                writeln!(text, "  {g}").unwrap();
            }
            report.annihilator = Some(gens);
        }
        Command::Decompose(Expr { expr, nvars }) => {
            let f = polynomial(expr, *nvars)?;
            with_input(&mut report, &f);
            let alg = algebra_from_inverse_system(&f)?;
            let dec = symmetric_decomposition(&alg)?;
            writeln!(text, "H = {}; dim = {}; sdeg = {}", tuple(&dec.total), alg.dim(), dec.s).unwrap();
            for (a, row) in dec.rows.iter().enumerate() {
                writeln!(text, "  Q({a}) = {}", tuple(row)).unwrap();
            }
            if !dec.f.is_empty() {
                writeln!(text, "f_2..f_{} = {}", dec.s, tuple(&dec.f)).unwrap();
            }
            report.hilbert = Some(dec.total.clone());
            report.dim = Some(alg.dim());
            report.socle_degree = Some(dec.s);
            report.decomposition = Some(dec.rows);
            report.f = Some(dec.f);
        }
        Command::Betti { expr, pmax } => {
            let f = polynomial(&expr.expr, expr.nvars)?;
            with_input(&mut report, &f);
            let alg = algebra_from_inverse_system(&f)?;
            let b = betti_numbers(&alg, *pmax)?;
            writeln!(text, "beta_0..beta_{pmax} = {b}").unwrap();
            report.dim = Some(alg.dim());
            report.betti = Some(report::Betti { pmax: *pmax, values: report::series_values(&b) });
        }
        Command::Poincare { expr, pmax } => {
            let f = polynomial(&expr.expr, expr.nvars)?;
            with_input(&mut report, &f);
            let p = predict(&f, *pmax)?;
            if let (Some(cf), Some(src)) = (&p.closed_form, &p.source) {
                writeln!(text, "closed form: {cf} ({})", src.describe()).unwrap();
            }
            if let Some(r) = &p.reduction {
                writeln!(
                    text,
                    "relation: {} (m = {}, split quadrics = {}, H(1) - H(2) = {})",
                    r.relation_text(),
                    r.m,
                    r.h,
                    r.hilbert_drop
                )
                .unwrap();
            }
            writeln!(text, "oracle: {}", p.oracle).unwrap();
            if let Some(b) = &p.oracle_b {
                writeln!(text, "oracle for B: {b}").unwrap();
            }
            if let Some(pr) = &p.predicted {
                writeln!(text, "predicted: {pr}").unwrap();
            }
            let verdict = match p.consistent {
                Some(true) => "consistent",
                Some(false) => "INCONSISTENT",
                None => "no prediction",
            };
            writeln!(text, "{verdict}").unwrap();
            if p.consistent == Some(false) {
                code = 3;
            }
            report.betti = Some(report::Betti { pmax: *pmax, values: report::series_values(&p.oracle) });
            report.poincare = Some(report::Poincare {
                pmax: *pmax,
                closed_form: p.closed_form.as_ref().map(report::series),
                source: p.source.map(|s| s.describe().to_string()),
                relation: p.reduction.as_ref().map(|r| r.relation_text()),
                split_quadrics: p.reduction.as_ref().map(|r| r.h),
                hilbert_drop: p.reduction.as_ref().map(|r| r.hilbert_drop),
                oracle: report::series_values(&p.oracle),
                oracle_b: p.oracle_b.as_ref().map(report::series_values),
                predicted: p.predicted.as_ref().map(report::series_values),
                consistent: p.consistent,
            });
        }
        Command::Classify { expr, nvars, hilbert, dim } => {
            let v = match (expr, hilbert) {
                (Some(e), _) => {
                    let f = polynomial(e, *nvars)?;
                    with_input(&mut report, &f);
                    let (v, dec) = classify_polynomial(&f)?;
                    report.decomposition = Some(dec.rows);
                    report.f = Some(dec.f);
                    v
                }
                (None, Some(h)) => classify_hilbert(h, *dim)?,
                (None, None) => return Err(input_error("classify needs a polynomial or --hilbert")),
            };
            writeln!(
                text,
                "H = {}; dim = {}; sdeg = {}; cdeg = {}",
                tuple(&v.hilbert),
                v.dim,
                v.socle_degree,
                v.capital_degree
            )
            .unwrap();
            let column = match v.column {
                Some((Some(m), c)) => format!(" (m = {m}, c = {c})"),
                Some((None, c)) => format!(" (empty column, c = {c})"),
                None => String::new(),
            };
            let f3 = match (v.f3, v.f3_at_most_4) {
                (Some(f), Some(b)) => format!("{b} (f_3 = {f})"),
                (None, Some(b)) => format!("{b} (from H(1) <= 4)"),
                _ => "unknown without F".to_string(),
            };
            writeln!(text, "  stretched:          {}", v.stretched).unwrap();
            writeln!(text, "  column shape:       {}{column}", v.column_shape).unwrap();
            writeln!(text, "  small length:       {}", v.small_length).unwrap();
            writeln!(text, "  low capital degree: {}", v.low_capital_degree).unwrap();
            writeln!(text, "  constant column:    {}", v.constant_column).unwrap();
            writeln!(text, "  f_3 <= 4:           {f3}").unwrap();
            report.hilbert = Some(v.hilbert.clone());
            report.dim = Some(v.dim);
            report.socle_degree = Some(v.socle_degree);
            report.capital_degree = Some(v.capital_degree);
            report.verdicts = Some(report::verdicts(&v));
        }
        Command::Split { g, h, n } => {
            let split = match (h, n) {
                (Some(h), _) => {
                    let nv = parse_infer(g)?.nvars().max(parse_infer(h)?.nvars());
                    split_annihilator(&parse(g, nv)?, &parse(h, nv)?)?
                }
                (None, Some(n)) => split_quadrics(&parse_infer(g)?, *n)?,
                (None, None) => return Err(input_error("split needs --h or --n")),
            };
            with_input(&mut report, &split.f);
            write_split(&mut text, &split);
            if !split.certificate.holds() {
                code = 3;
            }
            report.split = Some(split_report(&split));
        }
        Command::Enumerate { sdeg, max_dim, max_h2 } => {
            let tables = enumerate_decompositions(*sdeg, *max_dim, *max_h2)?;
            let uncovered = tables.iter().filter(|t| !t.covered()).count();
            for t in &tables {
                let rows: Vec<String> = t.rows.iter().map(|r| tuple(r)).collect();
                writeln!(
                    text,
                    "{}  H = {}  dim {}  f_3 = {}  cdeg = {}",
                    rows.join(" + "),
                    tuple(&t.hilbert),
                    t.dim,
                    t.f3,
                    t.capital_degree
                )
                .unwrap();
            }
            writeln!(text, "{} tables, {uncovered} with f_3 > 4 and cdeg > 3", tables.len()).unwrap();
            report.enumeration = Some(report::Enumeration {
                socle_degree: *sdeg,
                max_dim: *max_dim,
                max_h2: *max_h2,
                tables: tables.iter().map(report::table).collect(),
                uncovered,
            });
        }
        Command::Verify { suite, trials } => {
            let s = Suite::from_name(suite).ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                input_error(format!("unknown suite `{suite}`; expected one of {}", names.join(", ")))
            })?;
            let r = run_suite(s, *trials, cli.seed);
            for t in r.trials.iter().filter(|t| !t.passed) {
                writeln!(text, "FAIL trial {}: {} :: {}", t.index, t.input, t.detail).unwrap();
            }
            writeln!(text, "{}", r.summary()).unwrap();
            if !r.all_passed() {
                code = 3;
            }
            report.suite = Some(report::suite(&r));
        }
    }
    Ok(Output { report, text, code })
}

fn write_split(text: &mut String, split: &SplitIdeal) {
    writeln!(text, "F = {}", split.f).unwrap();
    for s in &split.sigmas {
        writeln!(text, "sigma = {} for {}", s.sigma.display_as('x'), s.target).unwrap();
    }
    writeln!(text, "assembled generators:").unwrap();
    for g in &split.generators {
        writeln!(text, "  {}", g.display_as('x')).unwrap();
    }
    for c in &split.certificate.checks {
        let mark = if c.equal { "=" } else { "!=" };
        writeln!(text, "  mod m^{}: {} {mark} {}", c.degree + 1, c.assembled_dim, c.annihilator_dim).unwrap();
    }
    let verdict = if split.certificate.holds() { "equals Ann(F)" } else { "DIFFERS from Ann(F)" };
    writeln!(text, "assembled ideal {verdict}").unwrap();
}

fn split_report(split: &SplitIdeal) -> report::Split {
    report::Split {
        f: split.f.to_string(),
        generators: split.generators.iter().map(|g| g.display_as('x').to_string()).collect(),
        sigmas: split.sigmas.iter().map(|s| s.sigma.display_as('x').to_string()).collect(),
        checks: split
            .certificate
            .checks
            .iter()
            .map(|c| report::DegreeCheck {
                degree: c.degree,
                assembled_dim: c.assembled_dim,
                annihilator_dim: c.annihilator_dim,
                equal: c.equal,
            })
            .collect(),
        generators_annihilate: split.certificate.generators_annihilate,
        holds: split.certificate.holds(),
    }
}
