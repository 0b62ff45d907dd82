//! `cyclobound` command-line front end.
//!
//! Exit codes: 0 on success, 1 when the result is a negative finding
//! (a witness, unequal varieties, a failed check), 2 on errors.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclobound::codes::{self, BoundOptions, Distance};
use cyclobound::gf::parse_descriptor;
use cyclobound::vandermonde::{compute_fr, f_poly, verify_fr_remark};
use cyclobound::variety::{self, Certificate};
use cyclobound::{Budgets, Error, ExponentSet, Field};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "cyclobound",
    version,
    about = "Minimum-distance bounds for cyclic codes from generalized Vandermonde varieties"
)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Include wall-clock time in the JSON report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(flatten)]
    budgets: BudgetArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest projective point count to enumerate.
    #[arg(long, global = true, env = "CYCLOBOUND_BUDGET_POINTS", default_value_t = Budgets::default().points)]
    budget_points: u64,
    /// Largest number of exponent tuples per certificate.
    #[arg(long, global = true, env = "CYCLOBOUND_BUDGET_TUPLES", default_value_t = Budgets::default().tuples)]
    budget_tuples: u64,
    /// Largest field order that may be built.
    #[arg(long, global = true, env = "CYCLOBOUND_BUDGET_FIELD", default_value_t = Budgets::default().field)]
    budget_field: u64,
    /// Largest message count q^k for brute-force distance.
    #[arg(long, global = true, env = "CYCLOBOUND_BUDGET_MESSAGES", default_value_t = Budgets::default().messages)]
    budget_messages: u64,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets {
            field: self.budget_field,
            points: self.budget_points,
            tuples: self.budget_tuples,
            messages: self.budget_messages,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Describe GF(q): modulus, primitive element, roots of unity.
    Field(FieldArgs),
    /// Print the quotient f[U] = Δ[U] / Δ_t.
    Fpoly(FpolyArgs),
    /// Factor check of F_r = f[{0,1,r}] restricted to x1 + x2 + x3 = 0.
    Fr(FrArgs),
    /// Count, list or compare points of V(T, t) over a finite field.
    Variety(VarietyArgs),
    /// Root-of-unity certificate for d > t.
    Certify(CertifyArgs),
    /// Predicted linear subspaces inside V(T, t+k).
    Subspaces(SubspacesArgs),
    /// Checks around V({0,1,m,m+1,2m}, 4).
    Component2m(Component2mArgs),
    /// Point count of the genus-4 curve from the quadric and cubic fixtures.
    CurveEx9(CurveArgs),
    /// q-cyclotomic cosets mod n.
    Cosets(CosetArgs),
    /// Cyclic code reports.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Minimum distance of a cyclic code.
    Mindist(MindistArgs),
    /// Sweep T = {0,1,3,4,6,7,...,r}, t = |T| - 1.
    SweepQuestion(SweepArgs),
}

#[derive(Args, Debug, Serialize)]
struct FieldArgs {
    /// Field order q or descriptor p^m.
    #[arg(long)]
    q: String,
    /// Also report the primitive root of unity of this order.
    #[arg(long)]
    root: Option<u64>,
}

#[derive(Args, Debug, Serialize)]
struct FpolyArgs {
    /// Exponent set, e.g. 0,1,4.
    #[arg(long = "U", value_parser = parse_set)]
    #[serde(rename = "U")]
    u: ExponentSet,
}

#[derive(Args, Debug, Serialize)]
struct FrArgs {
    #[arg(long)]
    r: u32,
    /// Also check the printed factorization of F_11.
    #[arg(long)]
    remark: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
enum VarietyAction {
    Count,
    Points,
    Equal,
}

#[derive(Args, Debug, Serialize)]
struct VarietyArgs {
    #[arg(value_enum)]
    action: VarietyAction,
    #[arg(long = "T", value_parser = parse_set)]
    #[serde(rename = "T")]
    t_set: ExponentSet,
    #[arg(long)]
    t: usize,
    /// Field order q or descriptor p^m.
    #[arg(long)]
    q: String,
    /// Work over GF(q^ext).
    #[arg(long)]
    ext: Option<usize>,
    /// Second set, for `equal`.
    #[arg(long = "T2", value_parser = parse_set)]
    #[serde(rename = "T2")]
    t2: Option<ExponentSet>,
}

#[derive(Args, Debug, Serialize)]
struct CertifyArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    q: u64,
    #[arg(long = "T", value_parser = parse_set)]
    #[serde(rename = "T")]
    t_set: ExponentSet,
    #[arg(long)]
    t: usize,
}

#[derive(Args, Debug, Serialize)]
struct SubspacesArgs {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    q: String,
}

#[derive(Args, Debug, Serialize)]
struct Component2mArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    q: String,
}

#[derive(Args, Debug, Serialize)]
struct CurveArgs {
    #[arg(long)]
    q: String,
    /// External constant a_q for the comparison with q + 1 - 4 a_q.
    #[arg(long, allow_hyphen_values = true)]
    aq: Option<i64>,
}

#[derive(Args, Debug, Serialize)]
struct CosetArgs {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    q: u64,
}

#[derive(Args, Debug, Serialize)]
struct CodeSpec {
    #[arg(long)]
    n: u64,
    #[arg(long)]
    q: u64,
    /// Defining set as explicit residues.
    #[arg(long = "S", value_parser = parse_list, conflicts_with = "coset")]
    #[serde(rename = "S")]
    s: Option<Residues>,
    /// Defining set as the union of the cosets of these representatives.
    #[arg(long, value_parser = parse_list)]
    coset: Option<Residues>,
}

impl CodeSpec {
    fn defining_set(&self) -> Result<Vec<u64>, Error> {
        match (&self.s, &self.coset) {
            (Some(s), _) => Ok(s.0.clone()),
            (None, Some(reps)) => codes::coset_union(self.n, self.q, &reps.0),
            (None, None) => Err(Error::InvalidArgument("give --S or --coset".into())),
        }
    }
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    /// Parameters and the bound report of a cyclic code.
    Info(CodeInfoArgs),
}

#[derive(Args, Debug, Serialize)]
struct CodeInfoArgs {
    #[command(flatten)]
    code: CodeSpec,
    /// Also run the brute-force distance.
    #[arg(long)]
    brute: bool,
    /// Certify this T instead of searching with T = S.
    #[arg(long = "T", value_parser = parse_set, requires = "t")]
    #[serde(rename = "T")]
    t_set: Option<ExponentSet>,
    #[arg(long)]
    t: Option<usize>,
    /// Largest t tried by the T = S search.
    #[arg(long)]
    max_t: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Method {
    Certificates,
    Brute,
    Both,
}

#[derive(Args, Debug, Serialize)]
struct MindistArgs {
    #[command(flatten)]
    code: CodeSpec,
    #[arg(long, value_enum, default_value_t = Method::Certificates)]
    method: Method,
}

#[derive(Args, Debug, Serialize)]
struct SweepArgs {
    #[arg(long)]
    rmax: u32,
    #[arg(long)]
    q: u64,
    /// Largest length n for the certificates.
    #[arg(long, default_value_t = 20)]
    nmax: u64,
}

fn parse_set(s: &str) -> Result<ExponentSet, String> {
    ExponentSet::parse(s).map_err(|e| e.to_string())
}

/// Comma-separated residues; a newtype so clap reads it as one value.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
struct Residues(Vec<u64>);

fn parse_list(s: &str) -> Result<Residues, String> {
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| format!("bad residue {x:?}")))
        .collect::<Result<_, _>>()
        .map(Residues)
}

/// The JSON report printed with `--json`.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct RunReport {
    command: String,
    inputs: Value,
    result: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    timing: Option<u64>,
    budgets: Budgets,
}

/// What a subcommand produced.
struct Output {
    inputs: Value,
    result: Value,
    text: String,
    negative: bool,
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn field_from(desc: &str, ext: Option<usize>, b: &Budgets) -> Result<Field, Error> {
    let base = parse_descriptor(desc, b.field)?;
    match ext {
        Some(e) if e > 1 => base.extension(e, b.field),
        _ => Ok(base),
    }
}

fn describe(f: &Field) -> String {
    format!("GF({})", f.order())
}

fn run_field(a: &FieldArgs, b: &Budgets) -> Result<Output, Error> {
    let f = parse_descriptor(&a.q, b.field)?;
    let prim = f.primitive_element();
    let root = a.root.map(|n| f.primitive_root_of_unity(n)).transpose()?;
    let mut text = format!(
        "GF({}) = GF({}^{})\nmodulus (low degree first): {:?}\nprimitive element: {}\n",
        f.order(),
        f.characteristic(),
        f.degree(),
        f.modulus(),
        prim
    );
    if let (Some(n), Some(r)) = (a.root, &root) {
        writeln!(text, "primitive {n}-th root of unity: {r}").unwrap();
    }
    Ok(Output {
        inputs: to_value(a),
        result: json!({
            "p": f.characteristic(),
            "m": f.degree(),
            "order": f.order(),
            "modulus": f.modulus(),
            "primitive_element": prim.to_string(),
            "root_of_unity": root.map(|r| r.to_string()),
        }),
        text,
        negative: false,
    })
}

fn run_fpoly(a: &FpolyArgs) -> Result<Output, Error> {
    let p = f_poly(&a.u);
    let degree = p.homogeneous_degree()?;
    Ok(Output {
        inputs: to_value(a),
        result: json!({"U": a.u, "f": p.to_string(), "degree": degree, "terms": p.num_terms()}),
        text: format!("{p}\n"),
        negative: false,
    })
}

fn run_fr(a: &FrArgs) -> Result<Output, Error> {
    let report = compute_fr(a.r)?;
    let mut text = format!("F_{} = {}\n", a.r, report.f_r);
    for f in &report.predicted_factors {
        writeln!(text, "factor: {f}").unwrap();
    }
    writeln!(text, "residual: {}", report.residual).unwrap();
    writeln!(
        text,
        "k = {} (expected {})",
        report.k.map_or("-".to_string(), |k| k.to_string()),
        report.expected_k
    )
    .unwrap();
    let mut negative = !report.is_consistent();
    let mut result = json!({"report": to_value(&report)});
    if a.remark {
        let remark = verify_fr_remark();
        writeln!(text, "F_11 factorization: {}", if remark.holds { "holds" } else { "fails" }).unwrap();
        negative |= !remark.holds;
        result["remark"] = to_value(&remark);
    }
    Ok(Output {
        inputs: to_value(a),
        result,
        text,
        negative,
    })
}

fn run_variety(a: &VarietyArgs, b: &Budgets) -> Result<Output, Error> {
    let f = field_from(&a.q, a.ext, b)?;
    let (result, text, negative) = match a.action {
        VarietyAction::Count => {
            let c = variety::count_points(&a.t_set, a.t, &f, b)?;
            (json!({"field": f.to_string(), "count": c}), format!("{c}\n"), false)
        }
        VarietyAction::Points => {
            let pts = variety::enumerate_points(&a.t_set, a.t, &f, b)?;
            let text: String = pts.iter().map(|p| format!("{p}\n")).collect();
            (
                json!({"field": f.to_string(), "count": pts.len(), "points": to_value(&pts)}),
                text,
                false,
            )
        }
        VarietyAction::Equal => {
            let Some(t2) = &a.t2 else {
                return Err(Error::InvalidArgument("`equal` needs --T2".into()));
            };
            let cmp = variety::compare_varieties(&a.t_set, t2, a.t, &f, b)?;
            let text = format!(
                "{} over {} ({} and {} points; evidence at q only)\n",
                if cmp.equal { "equal" } else { "different" },
                describe(&f),
                cmp.first_count,
                cmp.second_count
            );
            let neg = !cmp.equal;
            (to_value(&cmp), text, neg)
        }
    };
    Ok(Output {
        inputs: to_value(a),
        result,
        text,
        negative,
    })
}

fn certificate_text(c: &Certificate) -> String {
    match &c.witness {
        None => format!(
            "pass: d > {} for every cyclic code of length {} over GF({}) with {{{}}} in S ({} tuples over GF({}^{}))\n",
            c.t, c.n, c.q, c.set, c.tuples_checked, c.q, c.s
        ),
        Some(w) => {
            let pt: Vec<String> = w.iter().map(|i| format!("a^{i}")).collect();
            format!(
                "witness: ({}) after {} tuples over GF({}^{})\n",
                pt.join(" : "),
                c.tuples_checked,
                c.q,
                c.s
            )
        }
    }
}

fn run_certify(a: &CertifyArgs, b: &Budgets) -> Result<Output, Error> {
    let c = variety::certify_roots_of_unity(&a.t_set, a.t, a.q, a.n, b)?;
    Ok(Output {
        inputs: to_value(a),
        result: to_value(&c),
        text: certificate_text(&c),
        negative: !c.passed(),
    })
}

fn run_subspaces(a: &SubspacesArgs, b: &Budgets) -> Result<Output, Error> {
    let f = field_from(&a.q, None, b)?;
    let fam = variety::predicted_subspaces(a.t, a.k, a.m, &f, b)?;
    let mut text = format!(
        "{} subspaces of dimension {} in V({{{}}}, {}) (predicted {}, {} duplicates); ",
        fam.subspaces.len(),
        a.k - 1,
        fam.set,
        a.t + a.k,
        fam.predicted_count,
        fam.duplicates
    );
    if fam.all_contained() {
        writeln!(text, "all contained, checked over GF({})", fam.verification_field).unwrap();
    } else {
        writeln!(text, "{} not contained", fam.containment_failures.len()).unwrap();
    }
    let dim = a.t + a.k;
    for s in &fam.subspaces {
        // Spanned by unit vectors e_i and one vector of powers of a root ζ.
        let mut v = vec!["0".to_string(); dim];
        for (p, e) in &s.fixed {
            v[*p] = format!("z^{e}");
        }
        let mut span: Vec<String> = s.free.iter().map(|p| format!("e{}", p + 1)).collect();
        span.push(format!("({})", v.join(", ")));
        writeln!(text, "span {}", span.join(", ")).unwrap();
    }
    Ok(Output {
        inputs: to_value(a),
        negative: !fam.all_contained(),
        result: to_value(&fam),
        text,
    })
}

fn run_component(a: &Component2mArgs, b: &Budgets) -> Result<Output, Error> {
    let f = field_from(&a.q, None, b)?;
    let r = variety::verify_2m_component(a.m, &f, b)?;
    let text = format!(
        "over {}: #V5 = {}, #V6 = {}, (a) equal: {}\n(b) component points {}, all in V5: {}\n(c) on predicted lines {}, unexplained {}: {} the conjecture at this field\n",
        describe(&f),
        r.v5_count,
        r.v6_count,
        r.equal_with_2m_plus_1,
        r.component_count,
        r.component_contained,
        r.line_points,
        r.unexplained,
        r.conjecture
    );
    Ok(Output {
        inputs: to_value(a),
        negative: !(r.equal_with_2m_plus_1 && r.component_contained),
        result: to_value(&r),
        text,
    })
}

fn run_curve(a: &CurveArgs, b: &Budgets) -> Result<Output, Error> {
    let f = field_from(&a.q, None, b)?;
    let c = variety::curve_count_ex9(&f, a.aq, b)?;
    let mut text = format!("#X({}) = {}\n", describe(&f), c.count);
    if let Some(p) = c.predicted {
        writeln!(text, "q + 1 - 4 a_q = {p}").unwrap();
    }
    Ok(Output {
        inputs: to_value(a),
        negative: c.matches == Some(false),
        result: to_value(&c),
        text,
    })
}

fn run_cosets(a: &CosetArgs) -> Result<Output, Error> {
    let cs = codes::cyclotomic_cosets(a.n, a.q)?;
    let text: String = cs
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().map(u64::to_string).collect();
            format!("{{{}}}\n", parts.join(","))
        })
        .collect();
    Ok(Output {
        inputs: to_value(a),
        result: json!({"cosets": cs}),
        text,
        negative: false,
    })
}

fn distance_text(d: &Distance) -> String {
    match d {
        Distance::Exact(d) => d.to_string(),
        Distance::LowerBound(d) => format!(">= {d}"),
    }
}

fn run_code_info(a: &CodeInfoArgs, b: &Budgets) -> Result<Output, Error> {
    let s = a.code.defining_set()?;
    let code = codes::code_from_defining_set(a.code.n, a.code.q, &s, b)?;
    let opts = BoundOptions {
        set: a.t_set.clone().zip(a.t),
        max_t: a.max_t,
        brute_force: a.brute,
    };
    let r = codes::bound_report(&code, &opts, b)?;
    let mut text = format!(
        "[{}, {}] cyclic code over GF({})\nS = {:?}\ng = {}\nalpha = {} in GF({})\nBCH bound: d >= {}\nHT bound: d >= {}\n",
        r.n, r.k, r.q, r.defining_set, r.generator, r.alpha, r.field, r.bch, r.ht
    );
    match &r.variety {
        Some(d) => writeln!(text, "variety: d = {}", distance_text(d)).unwrap(),
        None => writeln!(text, "variety: no bound (witness found)").unwrap(),
    }
    if let Some(d) = r.brute_force {
        writeln!(text, "brute force: d = {d}").unwrap();
    }
    Ok(Output {
        inputs: to_value(a),
        result: to_value(&r),
        text,
        negative: false,
    })
}

fn run_mindist(a: &MindistArgs, b: &Budgets) -> Result<Output, Error> {
    let s = a.code.defining_set()?;
    let code = codes::code_from_defining_set(a.code.n, a.code.q, &s, b)?;
    let cert = match a.method {
        Method::Brute => None,
        _ => Some(codes::exact_distance_by_certificates(&code, a.code.n as usize, b)?),
    };
    let brute = match a.method {
        Method::Certificates => None,
        _ => Some(codes::brute_force_distance(&code, b)?),
    };
    let d = match (&cert, brute) {
        (Some(c), _) => c.distance,
        (None, Some(d)) => Distance::Exact(d),
        (None, None) => unreachable!("one method always runs"),
    };
    let agree = match (&cert, brute) {
        (Some(c), Some(d)) => c.distance == Distance::Exact(d),
        _ => true,
    };
    Ok(Output {
        inputs: to_value(a),
        result: json!({
            "distance": d,
            "brute_force": brute,
            "certificates": cert.map(|c| to_value(&c.certificates)),
            "agree": agree,
        }),
        text: format!("{}\n", distance_text(&d)),
        negative: !agree,
    })
}

fn run_sweep(a: &SweepArgs, b: &Budgets) -> Result<Output, Error> {
    let rows = variety::sweep_question(a.rmax, a.q, a.nmax, b)?;
    let mut text = String::new();
    for r in &rows {
        let passes: Vec<String> = r
            .certificates
            .iter()
            .filter(|c| c.passed())
            .map(|c| c.n.to_string())
            .collect();
        let witnesses: Vec<String> = r
            .certificates
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.n.to_string())
            .collect();
        writeln!(
            text,
            "r={} T={{{}}} t={} points over GF({}): {} | pass n: {} | witness n: {}",
            r.r,
            r.set,
            r.t,
            a.q,
            r.point_count.map_or("over budget".into(), |c| c.to_string()),
            passes.join(","),
            witnesses.join(",")
        )
        .unwrap();
    }
    Ok(Output {
        inputs: to_value(a),
        result: json!({"rows": to_value(&rows)}),
        text,
        negative: false,
    })
}

fn dispatch(cmd: &Command, b: &Budgets) -> Result<(&'static str, Output), Error> {
    Ok(match cmd {
        Command::Field(a) => ("field", run_field(a, b)?),
        Command::Fpoly(a) => ("fpoly", run_fpoly(a)?),
        Command::Fr(a) => ("fr", run_fr(a)?),
        Command::Variety(a) => ("variety", run_variety(a, b)?),
        Command::Certify(a) => ("certify", run_certify(a, b)?),
        Command::Subspaces(a) => ("subspaces", run_subspaces(a, b)?),
        Command::Component2m(a) => ("component2m", run_component(a, b)?),
        Command::CurveEx9(a) => ("curve-ex9", run_curve(a, b)?),
        Command::Cosets(a) => ("cosets", run_cosets(a)?),
        Command::Code(CodeCommand::Info(a)) => ("code info", run_code_info(a, b)?),
        Command::Mindist(a) => ("mindist", run_mindist(a, b)?),
        Command::SweepQuestion(a) => ("sweep-question", run_sweep(a, b)?),
    })
}

fn fail(kind: &str, message: &str) -> ExitCode {
    eprintln!("{}", json!({"error": kind, "message": message}));
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail("usage", e.to_string().trim());
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            return fail("threads", &e.to_string());
        }
    }
    let budgets = cli.budgets.budgets();
    let start = Instant::now();
    let (command, out) = match dispatch(&cli.command, &budgets) {
        Ok(r) => r,
        Err(e) => return fail(e.kind(), &e.to_string()),
    };
    if cli.json {
        let report = RunReport {
            command: command.into(),
            inputs: out.inputs,
            result: out.result,
            timing: cli.timing.then(|| start.elapsed().as_millis() as u64),
            budgets,
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
    } else {
        print!("{}", out.text);
    }
    if out.negative {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips() {
        let r = RunReport {
            command: "certify".into(),
            inputs: json!({"n": 7}),
            result: json!({"outcome": "pass", "witness": null}),
            timing: None,
            budgets: Budgets::default(),
        };
        let text = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(serde_json::from_str::<RunReport>(&text).unwrap(), r);
        assert!(!text.contains("timing"));
    }

    #[test]
    fn arguments_parse() {
        let cli = Cli::try_parse_from(["cyclobound", "certify", "--n", "7", "--q", "2", "--T", "0,1,3,4", "--t", "3"]).unwrap();
        assert!(matches!(cli.command, Command::Certify(_)));
        assert!(Cli::try_parse_from(["cyclobound", "certify", "--n", "7"]).is_err());
        assert!(Cli::try_parse_from(["cyclobound", "variety", "count", "--T", "0,0", "--t", "1", "--q", "7"]).is_err());
    }
}
