//! The `qfodc` command line: argument model, the four verbs and report rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coordalg::{CoordElem, CoordError, Corep, Descriptor, Registry, Word, YoungWeight};
use crate::dual::{
    functional_equal, rank_at, span_ranks, stabilized_rank, Dual, DualError, Equality, Functional, Policy,
};
use crate::fodc::{
    central_element, check_central, classify, direct_sum, quantum_lie, quantum_lie_from_central,
    tensor_identity_check, Calculus, ClassificationReport, FodcError, LibraryConfig, QuantumLieAlgebra,
};
use crate::linalg::{sparse_rank, sparse_rank_mod, Matrix};
use crate::scalar::{FieldConfig, Scalar, ScalarError, Specialization, Zeta};

#[derive(Parser, Debug, Clone)]
#[command(name = "qfodc", version, about = "Bicovariant first-order differential calculi on SL_q(N) and Sp_q(2n)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Construct Γ_ζ(v) and report its dimensions.
    Build(RunArgs),
    /// Run one named check.
    Verify(VerifyArgs),
    /// Decompose a quantum Lie algebra into library components.
    Classify(ClassifyArgs),
    /// Build, run every claim and classify.
    Report(ClassifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, value_enum, default_value_t = SeriesArg::Sl)]
    pub series: SeriesArg,
    /// Matrix size for `sl`, rank for `sp`.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Sign of z for `sp`.
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub z_choice: i64,
    #[arg(long, default_value = "u")]
    pub corep: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub zeta: String,
    /// Word degree for fixed-degree checks.
    #[arg(long, default_value_t = 3)]
    pub degree: usize,
    #[arg(long, default_value_t = 2)]
    pub start_degree: usize,
    #[arg(long, default_value_t = 2)]
    pub window: usize,
    #[arg(long, default_value_t = 6)]
    pub d_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum)]
    pub claim: Claim,
    /// Minor size for `minor-tau`.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Second factor for `tensor-identity` (defaults to `--corep`).
    #[arg(long)]
    pub corep2: Option<String>,
    /// Second character for `tensor-identity`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub zeta2: String,
    /// Random pairs for `leibniz`.
    #[arg(long, default_value_t = 20)]
    pub pairs: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug, Clone)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, value_enum, default_value_t = Source::Lie)]
    pub source: Source,
    /// Largest number of boxes in a library frame.
    #[arg(long, default_value_t = 2)]
    pub bound: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesArg {
    Sl,
    Sp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// `X_ζ(v)` from `--corep` and `--zeta`.
    Lie,
    /// The span generated by the central element `c_ζ(v)`.
    Central,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    MinorTau,
    Centrality,
    TensorIdentity,
    Coideal,
    Leibniz,
    Factorizability,
    DirectSum,
    CentralGenerates,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::MinorTau,
        Claim::Centrality,
        Claim::TensorIdentity,
        Claim::Coideal,
        Claim::Leibniz,
        Claim::Factorizability,
        Claim::DirectSum,
        Claim::CentralGenerates,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::MinorTau => "minor-tau",
            Claim::Centrality => "centrality",
            Claim::TensorIdentity => "tensor-identity",
            Claim::Coideal => "coideal",
            Claim::Leibniz => "leibniz",
            Claim::Factorizability => "factorizability",
            Claim::DirectSum => "direct-sum",
            Claim::CentralGenerates => "central-generates",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Undecided => 2,
        }
    }

    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn from_equality(e: &Equality) -> Status {
        match e {
            Equality::Equal { .. } => Status::Pass,
            Equality::Different { .. } => Status::Fail,
            Equality::Undecided { .. } => Status::Undecided,
        }
    }
}

/// Exit status 3 plus a diagnostic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<ScalarError> for ConfigError {
    fn from(e: ScalarError) -> Self {
        ConfigError(e.to_string())
    }
}

impl From<CoordError> for ConfigError {
    fn from(e: CoordError) -> Self {
        ConfigError(e.to_string())
    }
}

/// Failure while computing: rank instability maps to `undecided`.
#[derive(Debug)]
enum RunError {
    Config(ConfigError),
    Undecided(String),
}

impl From<ConfigError> for RunError {
    fn from(e: ConfigError) -> Self {
        RunError::Config(e)
    }
}

impl From<CoordError> for RunError {
    fn from(e: CoordError) -> Self {
        RunError::Config(e.into())
    }
}

impl From<DualError> for RunError {
    fn from(e: DualError) -> Self {
        match e {
            DualError::RankUnstable { .. } => RunError::Undecided(e.to_string()),
            other => RunError::Config(ConfigError(other.to_string())),
        }
    }
}

impl From<FodcError> for RunError {
    fn from(e: FodcError) -> Self {
        match e {
            FodcError::Dual(d) => d.into(),
            FodcError::Coord(c) => c.into(),
            other => RunError::Config(ConfigError(other.to_string())),
        }
    }
}

/// Validated configuration shared by all verbs.
pub struct Context {
    pub config: FieldConfig,
    pub dual: Arc<Dual>,
    pub registry: Registry,
    pub descriptor: Descriptor,
    pub corep: Arc<Corep>,
    pub zeta: Zeta,
    pub policy: Policy,
    pub degree: usize,
}

impl Context {
    pub fn new(args: &RunArgs) -> Result<Context, ConfigError> {
        let config = match args.series {
            SeriesArg::Sl => FieldConfig::sl(args.n)?,
            SeriesArg::Sp => FieldConfig::sp(args.n, args.z_choice)?,
        };
        let zeta = Zeta::parse_admissible(&args.zeta, &config)?;
        let descriptor = Descriptor::parse(&args.corep)?;
        let dual = Arc::new(Dual::for_config(&config)?);
        let registry = Registry::new(dual.clone());
        let corep = registry.get(&descriptor)?;
        if args.d_max < args.start_degree {
            return Err(ConfigError(format!(
                "--d-max {} is below --start-degree {}",
                args.d_max, args.start_degree
            )));
        }
        Ok(Context {
            config,
            dual,
            registry,
            descriptor,
            corep,
            zeta,
            policy: Policy {
                start_degree: args.start_degree,
                stability_window: args.window,
                d_max: args.d_max,
            },
            degree: args.degree,
        })
    }

    fn lie(&self) -> Result<QuantumLieAlgebra, RunError> {
        Ok(quantum_lie(&self.dual, &self.corep, &self.zeta, &self.policy)?)
    }

    fn header(&self) -> BTreeMap<String, Value> {
        let mut h = BTreeMap::new();
        h.insert("config".into(), json!(self.config.label()));
        h.insert("corep".into(), json!(self.descriptor.to_string()));
        h.insert("zeta".into(), json!(self.zeta.to_string()));
        h
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BuildReport {
    pub config: String,
    pub corep: String,
    pub corep_dim: usize,
    pub zeta: String,
    /// `m²`, the number of basis functionals.
    pub invariant_dim: usize,
    pub certified_dim: usize,
    pub cert_degree: usize,
    pub rank_with_counit: usize,
    pub counit_cert_degree: usize,
    pub basis: Vec<String>,
    pub theta: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub claim: Claim,
    pub status: Status,
    pub degree: usize,
    pub data: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FullReport {
    pub build: BuildReport,
    pub verifications: Vec<VerifyReport>,
    pub classification: ClassificationReport,
}

fn labels(m: usize) -> Vec<String> {
    (0..m * m).map(|e| format!("X[{},{}]", e / m + 1, e % m + 1)).collect()
}

fn build(ctx: &Context) -> Result<BuildReport, RunError> {
    let lie = ctx.lie()?;
    let with = stabilized_rank(&lie.with_eps(), &ctx.policy)?;
    let m = lie.dim_v();
    let cal = Calculus::new(lie);
    let all = labels(m);
    Ok(BuildReport {
        config: ctx.config.label(),
        corep: ctx.descriptor.to_string(),
        corep_dim: m,
        zeta: ctx.zeta.to_string(),
        invariant_dim: cal.lie.invariant_dim(),
        certified_dim: cal.lie.certified_dim.value,
        cert_degree: cal.lie.certified_dim.degree,
        rank_with_counit: with.value,
        counit_cert_degree: with.degree,
        theta: cal.theta().iter().map(|&i| all[i].replace('X', "ω")).collect(),
        basis: all,
    })
}

fn insert(data: &mut BTreeMap<String, Value>, key: &str, v: impl Serialize) {
    data.insert(key.into(), serde_json::to_value(v).expect("serializable"));
}

fn equality_data(data: &mut BTreeMap<String, Value>, e: &Equality) {
    match e {
        Equality::Equal { degree } => insert(data, "certified_at", degree),
        Equality::Different { witness, left, right } => {
            insert(data, "witness", witness);
            insert(data, "left", left.to_string());
            insert(data, "right", right.to_string());
        }
        Equality::Undecided { degree } => insert(data, "undecided_at", degree),
    }
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> CoordElem {
    let mut e = CoordElem::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let degree = rng.gen_range(0..=2);
        let letters: Vec<(usize, usize)> = (0..degree).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let c = Scalar::from_i64(rng.gen_range(1..=3));
        e = e.add(&CoordElem::from_word(Word::from_pairs(&letters, n)).scale(&c));
    }
    e
}

fn verify(ctx: &Context, args: &VerifyArgs, claim: Claim) -> Result<VerifyReport, RunError> {
    let d = &ctx.dual;
    let degree = ctx.degree;
    let mut data = ctx.header();
    let status = match claim {
        Claim::MinorTau => {
            let minor = d.alg().principal_minor(args.k)?;
            let e = functional_equal(&d.l_of(&minor), &d.tau_functional(&YoungWeight::fundamental(args.k)), degree);
            insert(&mut data, "k", args.k);
            equality_data(&mut data, &e);
            Status::from_equality(&e)
        }
        Claim::Centrality => {
            let c = central_element(d, &ctx.corep, &ctx.zeta)?;
            let central = check_central(d, &c, degree);
            let lie = ctx.lie()?;
            let projected = c.sub(&d.eps_functional().scale(&c.value_at_unit()));
            let nonzero = rank_at(std::slice::from_ref(&projected), degree) == 1;
            let (rx, rp, union) = span_ranks(&lie.basis, &[projected], degree);
            equality_data(&mut data, &central);
            insert(&mut data, "projection_nonzero", nonzero);
            insert(&mut data, "ranks", json!({"X": rx, "projection": rp, "union": union}));
            match Status::from_equality(&central) {
                Status::Pass => Status::from_bool(nonzero && union == rx),
                s => s,
            }
        }
        Claim::TensorIdentity => {
            let w = match &args.corep2 {
                Some(s) => ctx.registry.resolve(s)?,
                None => ctx.corep.clone(),
            };
            let z2 = Zeta::parse_admissible(&args.zeta2, &ctx.config).map_err(ConfigError::from)?;
            let cert = tensor_identity_check(d, &ctx.corep, &w, &ctx.zeta, &z2, degree)?;
            insert(&mut data, "corep2", w.label().to_string());
            insert(&mut data, "zeta2", z2.to_string());
            insert(&mut data, "ranks", &cert);
            Status::from_bool(cert.equal())
        }
        Claim::Coideal => {
            let lie = ctx.lie()?;
            let r = d.coideal_check(&lie.with_eps(), degree)?;
            insert(&mut data, "right_coideal", r.right_coideal);
            insert(&mut data, "ad_invariant", r.ad_invariant);
            Status::from_bool(r.passed())
        }
        Claim::Leibniz => {
            let cal = Calculus::new(ctx.lie()?);
            let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
            let n = d.n();
            let mut status = Status::Pass;
            let mut passed = 0;
            for _ in 0..args.pairs {
                let a = random_element(&mut rng, n);
                let b = random_element(&mut rng, n);
                let e = cal.leibniz_holds(d, &a, &b, &ctx.policy);
                match Status::from_equality(&e) {
                    Status::Pass => passed += 1,
                    s => {
                        if status == Status::Pass {
                            insert(&mut data, "first_failure", json!({"a": a.render(n), "b": b.render(n)}));
                            equality_data(&mut data, &e);
                        }
                        status = status.max(s);
                    }
                }
            }
            let d1 = cal.differential(&CoordElem::unit()).iter().all(CoordElem::is_zero);
            let x1 = cal.lie.basis.iter().all(|x| x.value_at_unit().is_zero());
            insert(&mut data, "pairs", args.pairs);
            insert(&mut data, "passed", passed);
            insert(&mut data, "seed", args.seed);
            insert(&mut data, "d_of_unit_zero", d1);
            insert(&mut data, "x_of_unit_zero", x1);
            if status == Status::Pass && !(d1 && x1) {
                Status::Fail
            } else {
                status
            }
        }
        Claim::Factorizability => {
            let words = Word::all_up_to(degree, d.n());
            let gram = d.gram_matrix(&words);
            let gram_rows = sparse_rows(&gram);
            let spec = Specialization::default();
            let lower = sparse_rank_mod(&gram_rows, &spec);
            let relations = relation_rank_mod(d, &words, degree, &spec);
            let upper = relations.map(|r| words.len() - r);
            insert(&mut data, "words", words.len());
            insert(&mut data, "gram_rank_lower", lower);
            insert(&mut data, "dimension_upper", upper);
            if lower.is_some() && lower == upper {
                Status::Pass
            } else {
                let exact = sparse_rank(&gram_rows, words.len());
                let dim = filtered_dimension(d, &words, degree + 1);
                insert(&mut data, "gram_rank", exact);
                insert(&mut data, "filtered_dimension", dim);
                if exact < dim {
                    Status::Fail
                } else if Some(exact) == upper {
                    Status::Pass
                } else {
                    Status::Undecided
                }
            }
        }
        Claim::DirectSum => {
            let Descriptor::Sum(parts) = &ctx.descriptor else {
                return Err(ConfigError(format!("direct-sum needs a sum(...) descriptor, got '{}'", ctx.descriptor)).into());
            };
            let cals: Vec<Calculus> = parts
                .iter()
                .map(|p| {
                    let v = ctx.registry.get(p)?;
                    Ok(Calculus::new(quantum_lie(d, &v, &ctx.zeta, &ctx.policy)?))
                })
                .collect::<Result<_, RunError>>()?;
            let whole = ctx.lie()?;
            match direct_sum(&cals, &ctx.policy) {
                Ok(sum) => {
                    let (a, b, u) = span_ranks(&whole.basis, &sum.basis, sum.degree.max(degree));
                    insert(&mut data, "part_ranks", &sum.part_ranks);
                    insert(&mut data, "union_rank", sum.union_rank);
                    insert(&mut data, "ranks", json!({"whole": a, "parts": b, "union": u}));
                    Status::from_bool(a == u && b == u)
                }
                Err(FodcError::NotDirect { parts, union }) => {
                    insert(&mut data, "part_ranks", parts);
                    insert(&mut data, "union_rank", union);
                    Status::Fail
                }
                Err(e) => return Err(e.into()),
            }
        }
        Claim::CentralGenerates => {
            let c = central_element(d, &ctx.corep, &ctx.zeta)?;
            let chi = quantum_lie_from_central(d, &c, degree)?;
            let lie = ctx.lie()?;
            let (a, b, u) = span_ranks(&chi, &lie.basis, degree);
            insert(&mut data, "ranks", json!({"central": a, "X": b, "union": u}));
            Status::from_bool(a == u && b == u)
        }
    };
    Ok(VerifyReport { claim, status, degree, data })
}

fn sparse_rows(m: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
        .collect()
}

/// Lower bound on the dimension of the relations `a x b` inside the span of
/// `words`, so `words.len()` minus it bounds the quotient from above.
fn relation_rank_mod(d: &Dual, words: &[Word], degree: usize, spec: &Specialization) -> Option<usize> {
    let alg = d.alg();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rels = alg.frt_relations();
    rels.extend(alg.antipode_relations());
    let mut rows = Vec::new();
    for x in rels.iter().filter(|x| x.degree() <= degree) {
        let room = degree - x.degree();
        for a in Word::all_up_to(room, d.n()) {
            for b in Word::all_up_to(room - a.degree(), d.n()) {
                let e = CoordElem::from_word(a.clone()).mul(x).mul(&CoordElem::from_word(b));
                rows.push(e.terms().map(|(w, c)| (index[w], c.clone())).collect());
            }
        }
    }
    sparse_rank_mod(&rows, spec)
}

/// Dimension of the span of `words` in the quotient algebra, read off the
/// separating family up to `level`.
fn filtered_dimension(d: &Dual, words: &[Word], level: usize) -> usize {
    let reps: Vec<_> = (0..=level).flat_map(|l| d.separating_level(l)).collect();
    let width: usize = reps.iter().map(|r| r.dim() * r.dim()).sum();
    let rows: Vec<Vec<(usize, Scalar)>> = words
        .iter()
        .map(|w| {
            let mut v = Vec::new();
            let mut offset = 0;
            for r in &reps {
                let m = r.value_word_sparse(w);
                for i in 0..r.dim() {
                    v.extend(m.row(i).iter().map(|(j, x)| (offset + i * r.dim() + j, x.clone())));
                }
                offset += r.dim() * r.dim();
            }
            v
        })
        .collect();
    sparse_rank(&rows, width)
}

fn classify_run(ctx: &Context, args: &ClassifyArgs) -> Result<ClassificationReport, RunError> {
    let x: Vec<Functional> = match args.source {
        Source::Lie => ctx.lie()?.basis,
        Source::Central => {
            let c = central_element(&ctx.dual, &ctx.corep, &ctx.zeta)?;
            quantum_lie_from_central(&ctx.dual, &c, ctx.degree)?
        }
    };
    let lib = LibraryConfig { bound: args.bound, zetas: None };
    Ok(classify(&ctx.registry, &x, &lib, &ctx.policy)?)
}

fn markdown_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn markdown_build(r: &BuildReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Γ_{}({}) on {}\n", r.zeta, r.corep, r.config);
    let _ = writeln!(s, "| quantity | value |\n|---|---|");
    let _ = writeln!(s, "| dim v | {} |", r.corep_dim);
    let _ = writeln!(s, "| invariant forms (m²) | {} |", r.invariant_dim);
    let _ = writeln!(s, "| certified dim | {} (degree {}) |", r.certified_dim, r.cert_degree);
    let _ = writeln!(s, "| rank with ε | {} (degree {}) |", r.rank_with_counit, r.counit_cert_degree);
    let _ = writeln!(s, "\nbasis: {}\n\nθ = {}", r.basis.join(", "), r.theta.join(" + "));
    s
}

fn markdown_verify(r: &VerifyReport) -> String {
    let mut s = String::new();
    let status = serde_json::to_value(r.status).unwrap();
    let _ = writeln!(s, "## {}: {}\n", r.claim.name(), markdown_value(&status));
    let _ = writeln!(s, "| key | value |\n|---|---|");
    let _ = writeln!(s, "| degree | {} |", r.degree);
    for (k, v) in &r.data {
        let _ = writeln!(s, "| {k} | {} |", markdown_value(v));
    }
    s
}

fn markdown_classify(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "## classification on {}\n", r.config);
    let _ = writeln!(s, "| zeta | frame | corep | dim | cert degree |\n|---|---|---|---|---|");
    for c in &r.components {
        let _ = writeln!(s, "| {} | {} | {} | {} | {} |", c.zeta, c.frame, c.corep, c.dim, c.cert_degree);
    }
    let _ = writeln!(
        s,
        "\ninput {} functionals of certified rank {} (degree {}); total {}; residual {}; library bound {}; complete: {}\n\ncentral element: {}",
        r.input_size, r.certified_rank, r.cert_degree, r.total_dim, r.residual_rank, r.library_bound, r.complete, r.central_element
    );
    s
}

fn render<T: Serialize>(format: Format, value: &T, markdown: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("serializable");
            s.push('\n');
            s
        }
        Format::Markdown => markdown(value),
    }
}

/// Output text and exit status for a parsed command line.
pub struct Outcome {
    pub text: String,
    pub code: i32,
    pub out: Option<std::path::PathBuf>,
    /// `text` is a diagnostic for stderr rather than a report.
    pub diagnostic: bool,
}

fn finish(run: &RunArgs, res: Result<(String, i32), RunError>) -> Outcome {
    match res {
        Ok((text, code)) => Outcome {
            text,
            code,
            out: run.out.clone(),
            diagnostic: false,
        },
        Err(RunError::Config(e)) => Outcome {
            text: format!("error: {e}\n"),
            code: 3,
            out: None,
            diagnostic: true,
        },
        Err(RunError::Undecided(msg)) => Outcome {
            text: format!("undecided: {msg}\n"),
            code: 2,
            out: None,
            diagnostic: true,
        },
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let run = match &cli.command {
        Command::Build(r) => r,
        Command::Verify(v) => &v.run,
        Command::Classify(c) | Command::Report(c) => &c.run,
    };
    let ctx = match Context::new(run) {
        Ok(c) => c,
        Err(e) => return finish(run, Err(e.into())),
    };
    let res = match &cli.command {
        Command::Build(_) => build(&ctx).map(|r| (render(run.format, &r, markdown_build), 0)),
        Command::Verify(v) => verify(&ctx, v, v.claim).map(|r| {
            let code = r.status.exit_code();
            (render(run.format, &r, markdown_verify), code)
        }),
        Command::Classify(c) => classify_run(&ctx, c).map(|r| (render(run.format, &r, markdown_classify), 0)),
        Command::Report(c) => full_report(&ctx, c).map(|r| {
            let code = r.verifications.iter().map(|v| v.status).max().map_or(0, Status::exit_code);
            (
                render(run.format, &r, |r| {
                    let mut s = markdown_build(&r.build);
                    for v in &r.verifications {
                        s.push('\n');
                        s.push_str(&markdown_verify(v));
                    }
                    s.push('\n');
                    s.push_str(&markdown_classify(&r.classification));
                    s
                }),
                code,
            )
        }),
    };
    finish(run, res)
}

fn full_report(ctx: &Context, args: &ClassifyArgs) -> Result<FullReport, RunError> {
    let build = build(ctx)?;
    let vargs = VerifyArgs {
        run: args.run.clone(),
        claim: Claim::MinorTau,
        k: 1,
        corep2: None,
        zeta2: "1".into(),
        pairs: 20,
        seed: 0,
    };
    let mut verifications = Vec::new();
    for claim in Claim::ALL {
        if claim == Claim::DirectSum && !matches!(ctx.descriptor, Descriptor::Sum(_)) {
            continue;
        }
        verifications.push(verify(ctx, &vargs, claim)?);
    }
    let classification = classify_run(ctx, args)?;
    Ok(FullReport { build, verifications, classification })
}
