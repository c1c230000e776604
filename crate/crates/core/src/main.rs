//! Command-line driver: exact connection verdicts for graded MCM modules.
//!
//! Reports are JSON on stdout (one object per invocation), or a
//! human-readable table with `--pretty`. Default output is byte-identical
//! across runs for identical input; timing is emitted only with `--timing`.
//!
//! Exit codes: 0 for any mathematical verdict (including "no connection"),
//! 1 for usage errors, 2 for malformed input, 3 for exceeded resource
//! limits.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use mcmconn::catalog::{threefold_lie, threefold_modules, AdeClass, CatalogFixture, LieVariant};
use mcmconn::exact::Scalar;
use mcmconn::gradconn::{curvature, exists_connection, exists_klinear, VerdictKind};
use mcmconn::io::{
    conn_problem_from_io, conn_problem_to_io, mat_to_io, mf_from_io, mf_to_io, ConnProblemIo,
    MfIo, PolyIo,
};
use mcmconn::semigroup::{
    canonical_lambda, decide_connection, enumerate_lambda, CurveVerdict, LambdaSet, NumSemigroup,
};
use mcmconn::{Error, Qi};

/// Largest gap count accepted by `semigroup classify` (the Λ enumeration
/// is exponential in the number of gaps in the worst case).
const MAX_CLASSIFY_GAPS: usize = 30;
/// Largest `--max-n` accepted by the `repro` threefold sweeps.
const MAX_REPRO_N: u32 = 30;

#[derive(Parser)]
#[command(
    name = "mcmconn",
    version,
    about = "Exact connection verdicts for graded MCM modules over hypersurface and monomial curve singularities"
)]
struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Include wall-clock timing in the report (off by default so output
    /// is byte-identical across runs).
    #[arg(long, global = true)]
    timing: bool,
    /// Worker threads (reserved; checks currently run sequentially).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    threads: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical semigroup queries and classifications.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Matrix factorization operations on a serialized factorization.
    #[command(subcommand)]
    Mf(MfCmd),
    /// Connection existence for a serialized presentation + Lie data.
    #[command(subcommand)]
    Conn(ConnCmd),
    /// Built-in reference modules over the threefold singularities.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Regenerate the checked-in expected tables.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Subcommand)]
enum SemigroupCmd {
    /// Gaps, Frobenius number, symmetry, and Δ of ⟨GENS⟩.
    Info(GensArgs),
    /// Classify every rank-one module k[[Λ]] over k[[Γ]].
    Classify(GensArgs),
    /// Decide the canonical module and report the Gorenstein flag.
    Canonical(GensArgs),
}

#[derive(Args)]
struct GensArgs {
    /// Semigroup generators, e.g. `3 4 5`.
    #[arg(required = true)]
    gens: Vec<u64>,
}

#[derive(Subcommand)]
enum MfCmd {
    /// Check φψ = ψφ = f·I and reducedness.
    Verify(FileArg),
    /// Transpose both factors.
    Dual(FileArg),
    /// Swap φ and ψ (the syzygy factorization).
    Syzygy(FileArg),
    /// Knörrer double: a factorization of f + uv in two more variables.
    Knoerrer(KnoerrerArgs),
}

#[derive(Args)]
struct FileArg {
    /// Input file (JSON in the documented format).
    file: String,
}

#[derive(Args)]
struct KnoerrerArgs {
    /// Input file (JSON in the documented format).
    file: String,
    /// Name of the first new variable.
    #[arg(long, default_value = "u")]
    u_name: String,
    /// Name of the second new variable.
    #[arg(long, default_value = "v")]
    v_name: String,
    /// Weight of the first new variable (default: deg f / 2 when even).
    #[arg(long)]
    u_weight: Option<i64>,
    /// Weight of the second new variable (default: deg f − u-weight).
    #[arg(long)]
    v_weight: Option<i64>,
}

#[derive(Subcommand)]
enum ConnCmd {
    /// Decide existence of a graded connection for the problem in FILE.
    Solve(ConnSolveArgs),
}

#[derive(Args)]
struct ConnSolveArgs {
    /// Input file: {"presentation": …, "lie": …}.
    file: String,
    /// Also decide per-generator (k-linear) solvability.
    #[arg(long)]
    klinear: bool,
    /// Check curvature of the found connection (needs a bracket table).
    #[arg(long)]
    integrability: bool,
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the built-in module families.
    List,
    /// Solve the built-in modules of one family at index n.
    Check(CatalogSelectArgs),
    /// Print one built-in module as a `conn solve` input problem.
    Export(CatalogExportArgs),
}

#[derive(Args)]
struct CatalogSelectArgs {
    /// Family: `An3fold` or `Dn3fold`.
    family: String,
    /// Singularity index n (A: n ≥ 1; D: n ≥ 4).
    #[arg(long)]
    n: u32,
    /// Restrict to one module id, e.g. `M1`, `N-`, `B1`, `C+`.
    #[arg(long)]
    module: Option<String>,
}

#[derive(Args)]
struct CatalogExportArgs {
    /// Family: `An3fold` or `Dn3fold`.
    family: String,
    /// Singularity index n (A: n ≥ 1; D: n ≥ 4).
    #[arg(long)]
    n: u32,
    /// Module id, e.g. `M1`, `N-`, `B1`, `C+`.
    #[arg(long)]
    module: String,
    /// Lie generator variant: `standard` or `exceptional` (D only).
    #[arg(long, default_value = "standard")]
    variant: String,
}

#[derive(Subcommand)]
enum ReproCmd {
    /// Verdict table for the type-A threefold modules, n = 1..=N.
    AnThreefold(MaxNArg),
    /// Verdict table for the type-D threefold modules, n = 4..=N.
    DnThreefold(MaxNArg),
    /// The monomial-curve classification tables.
    MonomialTables,
}

#[derive(Args)]
struct MaxNArg {
    #[arg(long)]
    max_n: u32,
}

// ---------------------------------------------------------------------------
// Failure plumbing
// ---------------------------------------------------------------------------

/// An operational failure: a message and the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
    fn input(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
    fn resource(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

/// Library errors surfacing from user-supplied data are input errors.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = Instant::now();
    let timing = cli.timing;
    let pretty = cli.pretty;
    let out = match run(cli) {
        Ok(out) => out,
        Err(f) => {
            eprintln!("error: {}", f.message);
            return ExitCode::from(f.code);
        }
    };
    print!("{}", out.render(pretty, timing.then(|| started.elapsed().as_millis())));
    ExitCode::SUCCESS
}

/// A finished report: the JSON value and its table rendering.
struct Output {
    json: serde_json::Value,
    pretty: String,
}

impl Output {
    fn new<T: Serialize>(report: &T, pretty: String) -> Self {
        Output {
            json: serde_json::to_value(report).expect("report serialization"),
            pretty,
        }
    }

    /// Raw text output (repro tables), emitted identically in both modes.
    fn text(t: String) -> Self {
        Output { json: serde_json::Value::Null, pretty: t }
    }

    fn render(mut self, pretty: bool, timing_ms: Option<u128>) -> String {
        if self.json.is_null() {
            return self.pretty;
        }
        if let Some(ms) = timing_ms {
            if let Some(map) = self.json.as_object_mut() {
                map.insert("timing_ms".into(), serde_json::json!(ms));
            }
            self.pretty.push_str(&format!("timing: {ms} ms\n"));
        }
        if pretty {
            self.pretty
        } else {
            let mut s = serde_json::to_string(&self.json).expect("report rendering");
            s.push('\n');
            s
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Semigroup(cmd) => match cmd {
            SemigroupCmd::Info(a) => semigroup_info(&a.gens),
            SemigroupCmd::Classify(a) => semigroup_classify(&a.gens),
            SemigroupCmd::Canonical(a) => semigroup_canonical(&a.gens),
        },
        Command::Mf(cmd) => match cmd {
            MfCmd::Verify(a) => mf_verify(&a.file),
            MfCmd::Dual(a) => mf_transform(&a.file, "mf dual", |m| m.dual()),
            MfCmd::Syzygy(a) => mf_transform(&a.file, "mf syzygy", |m| m.syzygy()),
            MfCmd::Knoerrer(a) => mf_knoerrer(&a),
        },
        Command::Conn(ConnCmd::Solve(a)) => conn_solve(&a),
        Command::Catalog(cmd) => match cmd {
            CatalogCmd::List => catalog_list(),
            CatalogCmd::Check(a) => catalog_check(&a),
            CatalogCmd::Export(a) => catalog_export(&a),
        },
        Command::Repro(cmd) => match cmd {
            ReproCmd::AnThreefold(a) => repro_threefold(AdeClass::A, a.max_n),
            ReproCmd::DnThreefold(a) => repro_threefold(AdeClass::D, a.max_n),
            ReproCmd::MonomialTables => repro_monomial_tables(),
        },
    }
}

// ---------------------------------------------------------------------------
// semigroup
// ---------------------------------------------------------------------------

fn parse_semigroup(gens: &[u64]) -> Result<NumSemigroup, Failure> {
    NumSemigroup::new(gens).map_err(|e| Failure::usage(e.to_string()))
}

fn gens_string(s: &NumSemigroup) -> String {
    let parts: Vec<String> = s.generators().iter().map(|g| g.to_string()).collect();
    format!("<{}>", parts.join(","))
}

/// Human-readable name of a rank-one module: `A` (free) or `M{h1,h2,…}`.
fn lambda_label(l: &LambdaSet) -> String {
    if l.is_free() {
        "A".to_string()
    } else {
        let parts: Vec<String> = l.extra().iter().map(|h| h.to_string()).collect();
        format!("M{{{}}}", parts.join(","))
    }
}

fn verdict_str(v: CurveVerdict) -> &'static str {
    match v {
        CurveVerdict::Connection => "connection",
        CurveVerdict::KlinearOnly => "klinear_only",
        CurveVerdict::None => "none",
    }
}

#[derive(Serialize)]
struct SemigroupInfoReport {
    command: String,
    generators: Vec<u64>,
    frobenius: i64,
    gaps: Vec<u64>,
    symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s_max: Option<u64>,
}

fn semigroup_info(gens: &[u64]) -> Result<Output, Failure> {
    let s = parse_semigroup(gens)?;
    let symmetric = s.is_symmetric();
    let (delta, s_max) = if symmetric {
        (None, None)
    } else {
        (Some(s.delta()?), Some(s.s_max()?))
    };
    let report = SemigroupInfoReport {
        command: format!("semigroup info {}", gens_string(&s)),
        generators: s.generators().to_vec(),
        frobenius: s.frobenius(),
        gaps: s.gaps(),
        symmetric,
        delta: delta.clone(),
        s_max,
    };
    let mut t = format!(
        "semigroup {}\n  frobenius: {}\n  gaps: {:?}\n  symmetric: {}\n",
        gens_string(&s),
        report.frobenius,
        report.gaps,
        symmetric
    );
    if let (Some(d), Some(m)) = (&delta, s_max) {
        t.push_str(&format!("  delta: {d:?}\n  s_max: {m}\n"));
    }
    Ok(Output::new(&report, t))
}

#[derive(Serialize)]
struct ClassifyRow {
    module: String,
    extra: Vec<u64>,
    free: bool,
    verdict: &'static str,
    /// Connection witness `f = Σ f_μ t^μ` as `(μ, coefficient)` pairs.
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<Vec<(u64, String)>>,
}

#[derive(Serialize)]
struct ClassifyReport {
    command: String,
    generators: Vec<u64>,
    symmetric: bool,
    modules: Vec<ClassifyRow>,
}

fn classify_rows(s: &NumSemigroup) -> Result<Vec<ClassifyRow>, Failure> {
    let mut rows = Vec::new();
    for lambda in enumerate_lambda(s) {
        let w = decide_connection(&lambda)?;
        rows.push(ClassifyRow {
            module: lambda_label(&lambda),
            extra: lambda.extra().to_vec(),
            free: lambda.is_free(),
            verdict: verdict_str(w.verdict),
            f: w.f_coefficients.as_ref().map(|f| {
                f.iter().map(|(mu, c)| (*mu, c.render_coeff())).collect()
            }),
        });
    }
    Ok(rows)
}

fn semigroup_classify(gens: &[u64]) -> Result<Output, Failure> {
    let s = parse_semigroup(gens)?;
    if s.gaps().len() > MAX_CLASSIFY_GAPS {
        return Err(Failure::resource(format!(
            "classification supports at most {MAX_CLASSIFY_GAPS} gaps, got {}",
            s.gaps().len()
        )));
    }
    let rows = classify_rows(&s)?;
    let mut t = format!("modules over k[[{}]]\n", gens_string(&s));
    for r in &rows {
        t.push_str(&format!("  {:<14} {}\n", r.module, r.verdict));
    }
    let report = ClassifyReport {
        command: format!("semigroup classify {}", gens_string(&s)),
        generators: s.generators().to_vec(),
        symmetric: s.is_symmetric(),
        modules: rows,
    };
    Ok(Output::new(&report, t))
}

#[derive(Serialize)]
struct CanonicalReport {
    command: String,
    generators: Vec<u64>,
    extra: Vec<u64>,
    admits: bool,
    gorenstein: bool,
}

fn semigroup_canonical(gens: &[u64]) -> Result<Output, Failure> {
    let s = parse_semigroup(gens)?;
    let lambda = canonical_lambda(&s)?;
    let w = decide_connection(&lambda)?;
    let report = CanonicalReport {
        command: format!("semigroup canonical {}", gens_string(&s)),
        generators: s.generators().to_vec(),
        extra: lambda.extra().to_vec(),
        admits: w.verdict == CurveVerdict::Connection,
        gorenstein: s.is_symmetric(),
    };
    let t = format!(
        "canonical module of k[[{}]]: extra = {:?}, admits = {}, gorenstein = {}\n",
        gens_string(&s),
        report.extra,
        report.admits,
        report.gorenstein
    );
    Ok(Output::new(&report, t))
}

// ---------------------------------------------------------------------------
// mf
// ---------------------------------------------------------------------------

fn read_json<T: serde::de::DeserializeOwned>(file: &str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure::input(format!("{file}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{file}: {e}")))
}

fn mf_verify(file: &str) -> Result<Output, Failure> {
    let io: MfIo = read_json(file)?;
    let mf = mf_from_io::<Qi>(&io)?;
    #[derive(Serialize)]
    struct VerifyReport {
        command: String,
        verified: bool,
        reduced: bool,
        size: usize,
    }
    let report = VerifyReport {
        command: format!("mf verify {file}"),
        verified: mf.verify()?,
        reduced: mf.is_reduced(),
        size: mf.size(),
    };
    let t = format!(
        "factorization: size {}, verified = {}, reduced = {}\n",
        report.size, report.verified, report.reduced
    );
    Ok(Output::new(&report, t))
}

#[derive(Serialize)]
struct MfTransformReport {
    command: String,
    result: MfIo,
}

fn mf_output(command: String, result: MfIo) -> Output {
    let t = format!(
        "{command}: {}x{} factorization over vars {:?}\n{}\n",
        result.phi.len(),
        result.phi.len(),
        result.ring.vars,
        serde_json::to_string(&result).expect("mf rendering")
    );
    Output::new(&MfTransformReport { command, result }, t)
}

fn mf_transform(
    file: &str,
    name: &str,
    op: impl Fn(&mcmconn::matfac::MatrixFactorization<Qi>) -> mcmconn::matfac::MatrixFactorization<Qi>,
) -> Result<Output, Failure> {
    let io: MfIo = read_json(file)?;
    let mf = mf_from_io::<Qi>(&io)?;
    Ok(mf_output(format!("{name} {file}"), mf_to_io(&op(&mf))))
}

fn mf_knoerrer(a: &KnoerrerArgs) -> Result<Output, Failure> {
    let io: MfIo = read_json(&a.file)?;
    let mf = mf_from_io::<Qi>(&io)?;
    let deg_f = match mf.f.homogeneity()? {
        mcmconn::wpoly::Homogeneity::Degree(d) => d,
        _ => return Err(Failure::input("the factored polynomial must be homogeneous")),
    };
    let (u_w, v_w) = match (a.u_weight, a.v_weight) {
        (Some(u), Some(v)) => (u, v),
        (Some(u), None) => (u, deg_f - u),
        (None, Some(v)) => (deg_f - v, v),
        (None, None) if deg_f % 2 == 0 => (deg_f / 2, deg_f / 2),
        (None, None) => {
            return Err(Failure::usage(format!(
                "deg f = {deg_f} is odd; pass --u-weight/--v-weight explicitly"
            )))
        }
    };
    if u_w + v_w != deg_f {
        return Err(Failure::usage(format!(
            "u and v weights must sum to deg f = {deg_f}, got {u_w} + {v_w}"
        )));
    }
    let doubled = mf.knoerrer(&a.u_name, &a.v_name, u_w, v_w)?;
    Ok(mf_output(format!("mf knoerrer {}", a.file), mf_to_io(&doubled)))
}

// ---------------------------------------------------------------------------
// conn
// ---------------------------------------------------------------------------

fn kind_str(k: VerdictKind) -> &'static str {
    match k {
        VerdictKind::Connection => "connection",
        VerdictKind::KlinearOnly => "klinear_only",
        VerdictKind::None => "none",
    }
}

#[derive(Serialize)]
struct CertificateIo {
    p: Vec<Vec<PolyIo>>,
    c: Vec<Vec<PolyIo>>,
}

#[derive(Serialize)]
struct IntegrabilityIo {
    pairs: Vec<(usize, usize, bool)>,
    integrable: bool,
}

#[derive(Serialize)]
struct ConnSolveReport {
    command: String,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    klinear: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    obstruction: Option<String>,
    caveat_relation_completeness: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificates: Option<Vec<CertificateIo>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    integrability: Option<IntegrabilityIo>,
}

fn conn_solve(a: &ConnSolveArgs) -> Result<Output, Failure> {
    let io: ConnProblemIo = read_json(&a.file)?;
    let (p, g) = conn_problem_from_io::<Qi>(&io)?;
    let verdict = exists_connection(&p, &g)?;
    let klinear = if a.klinear {
        Some(exists_klinear(&p, &g)?)
    } else {
        None
    };
    let integrability = if a.integrability {
        match &verdict.certificates {
            Some(certs) => {
                let p_values: Vec<_> = certs.iter().map(|(pm, _)| pm.clone()).collect();
                let rep = curvature(&p, &g, &p_values)?;
                Some(IntegrabilityIo { pairs: rep.pairs, integrable: rep.integrable })
            }
            None => None,
        }
    } else {
        None
    };
    let report = ConnSolveReport {
        command: format!("conn solve {}", a.file),
        verdict: kind_str(verdict.kind),
        klinear,
        obstruction: verdict.obstruction_witness.clone(),
        caveat_relation_completeness: verdict.caveat_relation_completeness,
        certificates: verdict.certificates.as_ref().map(|certs| {
            certs
                .iter()
                .map(|(pm, cm)| CertificateIo { p: mat_to_io(pm), c: mat_to_io(cm) })
                .collect()
        }),
        integrability,
    };
    let mut t = format!("verdict: {}\n", report.verdict);
    if let Some(k) = report.klinear {
        t.push_str(&format!("klinear: {k}\n"));
    }
    if let Some(o) = &report.obstruction {
        t.push_str(&format!("obstruction: {o}\n"));
    }
    if let Some(i) = &report.integrability {
        t.push_str(&format!("integrable: {}\n", i.integrable));
    }
    if report.caveat_relation_completeness {
        t.push_str("caveat: positive verdict assumes the relation list is complete\n");
    }
    Ok(Output::new(&report, t))
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

fn parse_family(s: &str) -> Result<AdeClass, Failure> {
    match s {
        "An3fold" => Ok(AdeClass::A),
        "Dn3fold" => Ok(AdeClass::D),
        other => Err(Failure::usage(format!(
            "unknown family {other:?}; expected An3fold or Dn3fold"
        ))),
    }
}

fn variant_str(v: LieVariant) -> &'static str {
    match v {
        LieVariant::Standard => "standard",
        LieVariant::Exceptional => "exceptional",
    }
}

fn select_modules(
    class: AdeClass,
    n: u32,
    module: Option<&str>,
) -> Result<Vec<CatalogFixture<Qi>>, Failure> {
    let all = threefold_modules::<Qi>(class, n).map_err(|e| Failure::usage(e.to_string()))?;
    match module {
        None => Ok(all),
        Some(id) => {
            let picked: Vec<_> = all.into_iter().filter(|f| f.id == id).collect();
            if picked.is_empty() {
                return Err(Failure::usage(format!(
                    "no module {id:?} in this family at n = {n}"
                )));
            }
            Ok(picked)
        }
    }
}

#[derive(Serialize)]
struct CatalogListReport {
    command: String,
    families: Vec<CatalogFamilyIo>,
}

#[derive(Serialize)]
struct CatalogFamilyIo {
    name: &'static str,
    equation: &'static str,
    n_min: u32,
    modules: &'static str,
}

fn catalog_list() -> Result<Output, Failure> {
    let families = vec![
        CatalogFamilyIo {
            name: "An3fold",
            equation: "x^2 + y^(n+1) + zw",
            n_min: 1,
            modules: "M_l (even n: l = 1..n/2; odd n: l = 1..(n-1)/2), and N-, N+ for odd n",
        },
        CatalogFamilyIo {
            name: "Dn3fold",
            equation: "x^2 y + y^(n-1) + zw",
            n_min: 4,
            modules: "M_l, N_l, X_l, Y_l, B1, B2, and C-, C+, D-, D+ for even n",
        },
    ];
    let mut t = String::from("built-in families\n");
    for f in &families {
        t.push_str(&format!(
            "  {:<9} {}  (n >= {})\n    modules: {}\n",
            f.name, f.equation, f.n_min, f.modules
        ));
    }
    let report = CatalogListReport { command: "catalog list".into(), families };
    Ok(Output::new(&report, t))
}

#[derive(Serialize)]
struct CatalogCheckRow {
    module: String,
    verdict: &'static str,
    variant: &'static str,
    klinear: bool,
}

#[derive(Serialize)]
struct CatalogCheckReport {
    command: String,
    family: String,
    n: u32,
    modules: Vec<CatalogCheckRow>,
}

/// Decide one fixture: type A uses the standard generators; type D falls
/// back to the exceptional (β, D₄, D₅) generators when the standard family
/// does not already rule a connection out.
fn check_fixture(fix: &CatalogFixture<Qi>) -> Result<CatalogCheckRow, Failure> {
    let standard = threefold_lie::<Qi>(fix.class, fix.n, LieVariant::Standard)?;
    let v = exists_connection(&fix.presentation, &standard)?;
    let (verdict, variant, spec) = if fix.class == AdeClass::D && v.kind == VerdictKind::Connection
    {
        let exceptional = threefold_lie::<Qi>(fix.class, fix.n, LieVariant::Exceptional)?;
        let v2 = exists_connection(&fix.presentation, &exceptional)?;
        (v2.kind, LieVariant::Exceptional, exceptional)
    } else {
        (v.kind, LieVariant::Standard, standard)
    };
    Ok(CatalogCheckRow {
        module: fix.id.clone(),
        verdict: kind_str(verdict),
        variant: variant_str(variant),
        klinear: exists_klinear(&fix.presentation, &spec)?,
    })
}

fn catalog_check(a: &CatalogSelectArgs) -> Result<Output, Failure> {
    let class = parse_family(&a.family)?;
    let fixtures = select_modules(class, a.n, a.module.as_deref())?;
    let mut rows = Vec::new();
    for fix in &fixtures {
        rows.push(check_fixture(fix)?);
    }
    let mut t = format!("{} n={}\n", a.family, a.n);
    for r in &rows {
        t.push_str(&format!(
            "  {:<4} verdict={:<13} variant={:<12} klinear={}\n",
            r.module, r.verdict, r.variant, r.klinear
        ));
    }
    let report = CatalogCheckReport {
        command: format!("catalog check {} --n {}", a.family, a.n),
        family: a.family.clone(),
        n: a.n,
        modules: rows,
    };
    Ok(Output::new(&report, t))
}

fn catalog_export(a: &CatalogExportArgs) -> Result<Output, Failure> {
    let class = parse_family(&a.family)?;
    let variant = match a.variant.as_str() {
        "standard" => LieVariant::Standard,
        "exceptional" => LieVariant::Exceptional,
        other => {
            return Err(Failure::usage(format!(
                "unknown variant {other:?}; expected standard or exceptional"
            )))
        }
    };
    let fixtures = select_modules(class, a.n, Some(&a.module))?;
    let lie = threefold_lie::<Qi>(class, a.n, variant).map_err(|e| Failure::usage(e.to_string()))?;
    let io = conn_problem_to_io(&fixtures[0].presentation, &lie);
    let mut s = serde_json::to_string(&io).expect("problem rendering");
    s.push('\n');
    Ok(Output::text(s))
}

// ---------------------------------------------------------------------------
// repro
// ---------------------------------------------------------------------------

fn repro_threefold(class: AdeClass, max_n: u32) -> Result<Output, Failure> {
    if max_n > MAX_REPRO_N {
        return Err(Failure::resource(format!(
            "repro sweeps support --max-n up to {MAX_REPRO_N}"
        )));
    }
    let (label, n_min) = match class {
        AdeClass::A => ("A", 1),
        AdeClass::D => ("D", 4),
        _ => unreachable!("threefold families are A and D"),
    };
    if max_n < n_min {
        return Err(Failure::usage(format!("--max-n must be at least {n_min}")));
    }
    let mut t = String::new();
    for n in n_min..=max_n {
        for fix in threefold_modules::<Qi>(class, n)? {
            let row = check_fixture(&fix)?;
            t.push_str(&format!(
                "{label}{n} {:<4} verdict={} variant={} klinear={}\n",
                row.module, row.verdict, row.variant, row.klinear
            ));
        }
    }
    Ok(Output::text(t))
}

fn repro_monomial_tables() -> Result<Output, Failure> {
    let mut t = String::new();
    for gens in [vec![3u64, 4, 5], vec![3, 5, 7], vec![4, 5, 6, 7]] {
        let s = NumSemigroup::new(&gens).expect("fixed generators");
        t.push_str(&format!("classify {}\n", gens_string(&s)));
        for row in classify_rows(&s)? {
            t.push_str(&format!("  {:<10} {}\n", row.module, row.verdict));
        }
    }
    for gens in [vec![3u64, 5, 7], vec![4, 5, 6, 7]] {
        let s = NumSemigroup::new(&gens).expect("fixed generators");
        let lambda = canonical_lambda(&s)?;
        let w = decide_connection(&lambda)?;
        t.push_str(&format!(
            "canonical {} extra={:?} admits={} gorenstein={}\n",
            gens_string(&s),
            lambda.extra(),
            w.verdict == CurveVerdict::Connection,
            s.is_symmetric()
        ));
    }
    Ok(Output::text(t))
}
