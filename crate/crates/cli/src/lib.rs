//! Command-line front end: root tables, parabolic data, structure constants,
//! motives, residue derivations and case verification, as JSON or markdown.

use clap::{Parser, Subcommand, ValueEnum};
use fdq_core::lattice_constants::structure_constants_for_root;
use fdq_core::mero::DerivationReport;
use fdq_core::motive::{measure_quotient_factor, motive_summary};
use fdq_core::parabolic::{levi_data, relative_weyl, shahidi_levels};
use fdq_core::rat::{fmt_combination, fmt_q, Q};
use fdq_core::root_datum::{builtin_datum, RootDatum, RootSystem};
use fdq_core::verify::{bundled_cases, derive_case, find_case, verify_all, CaseRecord, VerificationReport};
use fdq_core::{Error, Result};
use serde_json::{json, Value};
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(name = "fdq", about = "Formal degree quotients for maximal Levi subgroups", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "markdown", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Positive roots and their coroots.
    Roots { group: String },
    /// rho_P, alpha~ and the level decomposition for a maximal parabolic.
    Parabolic {
        group: String,
        /// Simple root to delete: alpha, beta (rank <= 2) or alpha<k> (1-based).
        #[arg(long)]
        remove: String,
    },
    /// chi, <chi, alpha^vee> and m_idx for a bundled case, or for a group with --remove.
    Constants {
        target: String,
        #[arg(long)]
        remove: Option<String>,
    },
    /// Invariant degrees, Iwahori volume exponent and point count.
    Motive { group: String },
    /// gamma(G/M) and the measure quotient factor.
    GammaGm {
        group: String,
        #[arg(long)]
        remove: String,
    },
    /// Residue derivation of the formal degree quotient for a bundled case.
    Derive { case: String },
    /// Verify one bundled case, or all of them.
    VerifyCase {
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        case: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Names of the bundled cases.
    ListCases,
}

/// Resolves `alpha`, `beta` (rank <= 2) or `alpha<k>` (1-based) to an index.
pub fn parse_root_name(rank: usize, name: &str) -> Result<usize> {
    let names = fdq_core::root_datum::simple_root_names(rank);
    names
        .iter()
        .position(|n| n == name.trim())
        .ok_or_else(|| Error::Input(format!("unknown simple root '{name}'; expected one of {}", names.join(", "))))
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&output.json).expect("json output") + "\n",
                Format::Markdown => output.markdown,
            };
            let _ = out.write_all(text.as_bytes());
            if output.pass {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input() {
                let _ = writeln!(err, "run `fdq --help` for usage");
                EXIT_USAGE
            } else {
                EXIT_FAILED
            }
        }
    }
}

struct Output {
    json: Value,
    markdown: String,
    pass: bool,
}

impl Output {
    fn ok(json: Value, markdown: String) -> Self {
        Output { json, markdown, pass: true }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Roots { group } => roots(&builtin_datum(group)?),
        Command::Parabolic { group, remove } => {
            let datum = builtin_datum(group)?;
            let alpha = parse_root_name(datum.semisimple_rank(), remove)?;
            parabolic(&datum, alpha)
        }
        Command::Constants { target, remove } => constants(target, remove.as_deref()),
        Command::Motive { group } => motive(&builtin_datum(group)?),
        Command::GammaGm { group, remove } => {
            let datum = builtin_datum(group)?;
            let alpha = parse_root_name(datum.semisimple_rank(), remove)?;
            gamma_gm(&datum, alpha)
        }
        Command::Derive { case } => derive(&find_case(case)?),
        Command::VerifyCase { case, all } => {
            let cases = if *all { bundled_cases() } else { vec![find_case(case.as_deref().unwrap_or_default())?] };
            verify(&cases)
        }
        Command::ListCases => Ok(list_cases()),
    }
}

fn group_name(datum: &RootDatum) -> String {
    datum.name().unwrap_or("custom").to_string()
}

fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(x)).collect()
}

fn root_label(rs: &RootSystem, coords: &[i64]) -> String {
    fmt_combination(&to_q(coords), &rs.simple_root_names())
}

fn coroot_label(rs: &RootSystem, coords: &[i64]) -> String {
    let names: Vec<String> = rs.simple_root_names().iter().map(|n| format!("{n}^v")).collect();
    fmt_combination(&to_q(coords), &names)
}

fn qvec_str(v: &[Q]) -> String {
    format!("[{}]", v.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for r in rows {
        s.push_str(&format!("| {} |\n", r.join(" | ")));
    }
    s
}

fn roots(datum: &RootDatum) -> Result<Output> {
    let rs = datum.root_system();
    let rows: Vec<Value> = rs
        .positive_roots()
        .iter()
        .zip(rs.coroots())
        .map(|(r, c)| {
            json!({
                "root": r.coords,
                "rootName": root_label(rs, &r.coords),
                "coroot": c.coords,
                "corootName": coroot_label(rs, &c.coords),
                "length": r.length_class,
            })
        })
        .collect();
    let table: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                (i + 1).to_string(),
                r["rootName"].as_str().unwrap_or_default().to_string(),
                r["corootName"].as_str().unwrap_or_default().to_string(),
                r["length"].as_str().unwrap_or_default().to_string(),
            ]
        })
        .collect();
    let name = group_name(datum);
    let markdown = format!(
        "## Positive roots of {name}\n\n{}\n{} positive roots\n",
        md_table(&["#", "root", "coroot", "length"], &table),
        rows.len()
    );
    let json = json!({
        "group": name,
        "simpleRoots": rs.simple_root_names(),
        "positiveRoots": rows,
    });
    Ok(Output::ok(json, markdown))
}

fn parabolic(datum: &RootDatum, alpha: usize) -> Result<Output> {
    let rs = datum.root_system();
    let names = rs.simple_root_names();
    let levi = levi_data(rs, alpha)?;
    let levels = shahidi_levels(rs, &levi)?;
    let rw = relative_weyl(rs, &levi)?;
    let level_json: serde_json::Map<String, Value> = levels
        .levels
        .iter()
        .map(|(i, cs)| {
            let entries: Vec<Value> = cs
                .iter()
                .zip(&levels.roots[i])
                .map(|(c, r)| json!({ "root": r, "coroot": c.coords }))
                .collect();
            (i.to_string(), Value::Array(entries))
        })
        .collect();
    let json = json!({
        "group": group_name(datum),
        "removedRoot": names[alpha],
        "theta": levi.theta.iter().map(|&i| names[i].clone()).collect::<Vec<_>>(),
        "rhoP": serde_json::to_value(&levi)?["rhoP"],
        "alphaTilde": serde_json::to_value(&levi)?["alphaTilde"],
        "dimN": levi.dim_n,
        "sigmaP": levi.sigma_p,
        "nonReduced": levi.non_reduced,
        "levels": level_json,
        "mLS": levels.m_ls,
        "WMOrder": rw.wm_order,
    });
    let rows: Vec<Vec<String>> = levels
        .levels
        .iter()
        .map(|(i, cs)| {
            let coroots: Vec<String> = cs.iter().map(|c| coroot_label(rs, &c.coords)).collect();
            vec![i.to_string(), cs.len().to_string(), coroots.join(", ")]
        })
        .collect();
    let markdown = format!(
        "## Maximal parabolic of {} without {}\n\n- rho_P = {} = {}\n- alpha~ = {} = {}\n- dim N = {}\n- |W(M)| = {}\n\n{}",
        group_name(datum),
        names[alpha],
        fmt_combination(&levi.rho_p, &names),
        qvec_str(&levi.rho_p),
        fmt_combination(&levi.alpha_tilde, &names),
        qvec_str(&levi.alpha_tilde),
        levi.dim_n,
        rw.wm_order,
        md_table(&["level", "size", "coroots"], &rows),
    );
    Ok(Output::ok(json, markdown))
}

fn constants(target: &str, remove: Option<&str>) -> Result<Output> {
    let (label, datum, alpha) = match remove {
        Some(r) => {
            let datum = builtin_datum(target)?;
            let alpha = parse_root_name(datum.semisimple_rank(), r)?;
            (group_name(&datum), datum, alpha)
        }
        None => {
            let case = find_case(target)?;
            (case.name.clone(), case.group.resolve()?, case.removed_root)
        }
    };
    let sc = structure_constants_for_root(&datum, alpha)?;
    let mut json = serde_json::to_value(&sc)?;
    json["target"] = json!(label);
    let markdown = format!(
        "## Structure constants for {label}\n\n- chi = {:?}\n- <chi, alpha^v> = {}\n- m_idx = {}\n- m_idx / <chi, alpha^v> = {}\n",
        sc.chi,
        sc.chi_pairing,
        sc.m_idx,
        fmt_q(&sc.heiermann_constant)
    );
    Ok(Output::ok(json, markdown))
}

fn motive(datum: &RootDatum) -> Result<Output> {
    let summary = motive_summary(datum)?;
    let degrees: Vec<String> =
        summary.motive.degrees_with_mult.iter().map(|(d, m)| if *m == 1 { d.to_string() } else { format!("{d}^{m}") }).collect();
    let markdown = format!(
        "## Motive of {}\n\n- degrees: {}\n- dim G = {} = sum (2d - 1) dim V_d = {}\n- Iwahori volume: q^-{}\n- point count: {}\n",
        group_name(datum),
        degrees.join(", "),
        summary.motive.dim_g,
        summary.motive.motive_dimension(),
        fmt_q(&summary.iwahori_exponent),
        summary.point_count,
    );
    let mut json = serde_json::to_value(&summary)?;
    json["group"] = json!(group_name(datum));
    json["pointCountText"] = json!(summary.point_count.to_string());
    Ok(Output::ok(json, markdown))
}

fn gamma_gm(datum: &RootDatum, alpha: usize) -> Result<Output> {
    let theta: Vec<usize> = (0..datum.semisimple_rank()).filter(|&i| i != alpha).collect();
    let mq = measure_quotient_factor(datum, &theta)?;
    let mut json = serde_json::to_value(&mq)?;
    json["group"] = json!(group_name(datum));
    json["removedRoot"] = json!(datum.root_system().simple_root_names()[alpha]);
    json["gammaGMText"] = json!(mq.gamma_gm.to_string());
    json["factorText"] = json!(mq.factor.to_string());
    let markdown = format!(
        "## gamma(G/M) for {} without {}\n\n- gamma(G/M) = {}\n- dim A_M - dim A_G = {}\n- gamma(G/M) (1 - q^-1)^{} = {}\n",
        group_name(datum),
        datum.root_system().simple_root_names()[alpha],
        mq.gamma_gm,
        mq.dim_a_m - mq.dim_a_g,
        mq.dim_a_m - mq.dim_a_g,
        mq.factor,
    );
    Ok(Output::ok(json, markdown))
}

fn derivation_markdown(case: &str, r: &DerivationReport) -> String {
    let mut s = format!(
        "## Derivation for {case} (m_LS = {}, j = {}, s0 = {})\n\n",
        r.m_ls,
        r.j,
        fmt_q(&r.s0)
    );
    for (i, st) in r.steps.iter().enumerate() {
        s.push_str(&format!("{}. **{}** [{}]\n   - {}\n   - => {}\n", i + 1, st.rule, st.paper_ref, st.before, st.after));
    }
    s.push_str(&format!(
        "\nconstant: {} (expected {}), surviving symbols: {}\n",
        r.constant.as_ref().map_or("none".into(), fmt_q),
        fmt_q(&r.expected_constant),
        if r.surviving_symbols.is_empty() { "none".into() } else { r.surviving_symbols.join(", ") }
    ));
    s.push_str(&format!("result: {}\n", if r.pass { "PASS" } else { "FAIL" }));
    if let Some(f) = &r.failure {
        s.push_str(&format!("failure: {f}\n"));
    }
    s
}

fn derive(case: &CaseRecord) -> Result<Output> {
    let report = derive_case(case)?;
    let markdown = derivation_markdown(&case.name, &report);
    let mut json = serde_json::to_value(&report)?;
    json["case"] = json!(case.name);
    Ok(Output { pass: report.pass, json, markdown })
}

fn verify(cases: &[CaseRecord]) -> Result<Output> {
    let reports: Vec<VerificationReport> = verify_all(cases).into_iter().collect::<Result<_>>()?;
    let pass = reports.iter().all(|r| r.overall);
    let summary: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let passed = r.per_check.iter().filter(|c| c.pass).count();
            vec![
                r.case.clone(),
                r.group.clone(),
                r.j.to_string(),
                format!("{passed}/{}", r.per_check.len()),
                if r.overall { "PASS".into() } else { "FAIL".into() },
            ]
        })
        .collect();
    let mut markdown = format!("## Verification\n\n{}", md_table(&["case", "group", "j", "checks", "result"], &summary));
    for r in &reports {
        let rows: Vec<Vec<String>> = r
            .per_check
            .iter()
            .map(|c| {
                vec![
                    c.check_name.clone(),
                    c.paper_ref.clone(),
                    c.computed.to_string(),
                    c.expected.to_string(),
                    if c.pass { "pass".into() } else { "FAIL".into() },
                ]
            })
            .collect();
        markdown.push_str(&format!(
            "\n### {}\n\nassumptions: {}\n\n{}",
            r.case,
            serde_json::to_string(&r.assumptions)?,
            md_table(&["check", "ref", "computed", "expected", "pass"], &rows)
        ));
    }
    let json = json!({ "overall": pass, "reports": reports });
    Ok(Output { json, markdown, pass })
}

fn list_cases() -> Output {
    let cases = bundled_cases();
    let rows: Vec<Vec<String>> = cases
        .iter()
        .map(|c| vec![c.name.clone(), c.group.display_name(), c.j.to_string(), c.description.clone()])
        .collect();
    let json = json!(cases
        .iter()
        .map(|c| json!({ "name": c.name, "group": c.group.display_name(), "j": c.j, "description": c.description }))
        .collect::<Vec<_>>());
    Output::ok(json, md_table(&["case", "group", "j", "description"], &rows))
}
