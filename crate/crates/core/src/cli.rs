//! Command-line front end of the `wv` binary.
//!
//! Every subcommand builds a report value; `--format json` serializes it and
//! `--format text` renders a table. Reports deserialize back to equal values.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::branching::{branch, compute_fan, default_depth, module_dimension, BranchRow, BranchingResult, Fan};
use crate::embedding::{build_embedding, standard_embeddings, EmbeddingDescriptor, EmbeddingSpec};
use crate::formal::FormalElement;
use crate::oracle::{brute_force_branch, freudenthal, weyl_dimension};
use crate::resolution::{bgg_resolution, resolution_from_branching, verify_euler, ResolutionSequence};
use crate::rootspace::{build_root_datum, label_grid, AlgebraId, RootDatum};
use crate::singular::{decompose, singular_element};
use crate::svg;
use crate::verma::{
    gv_character, gv_to_ordinary, parabolic_data, standard_weyl_verma, weyl_verma_decompose, DEFAULT_DEPTH,
};
use crate::weight::{format_rational, rational_vec, Rational, Weight};
use crate::weyl::WeylElement;

#[derive(Debug, Parser)]
#[command(name = "wv", version, about = "Branching rules, generalized Weyl-Verma decompositions and BGG resolutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root data of an algebra.
    Info { algebra: String },
    /// Branching coefficients of L^mu restricted to a regular subalgebra.
    Branch(Query),
    /// The injection fan of an embedding.
    Fan(EmbeddingArgs),
    /// Decomposition of the singular element over the coset representatives U.
    Decompose(Query),
    /// Signed generalized Verma modules whose Euler sum is ch L^mu.
    Verma(VermaArgs),
    /// Generalized BGG resolution graded by Weyl length.
    Resolve(Query),
    /// Compare main computations with the brute-force oracle over a test matrix.
    Verify(VerifyArgs),
    /// SVG weight diagram of a rank-2 module.
    Draw(DrawArgs),
}

#[derive(Debug, Clone, Args)]
pub struct EmbeddingArgs {
    /// Ambient algebra, e.g. B2. May be omitted when --embedding is given.
    pub algebra: Option<String>,
    /// Simple roots of the subalgebra as simple-root coefficients: "1,2" or "1,0,0;0,0,1".
    #[arg(long)]
    pub a_roots: Option<String>,
    /// Embedding descriptor JSON: {"ambient": "B2", "a_roots": [[1,2]]}.
    #[arg(long)]
    pub embedding: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Query {
    #[command(flatten)]
    pub embedding: EmbeddingArgs,
    /// Highest weight as Dynkin labels, e.g. "1,0".
    #[arg(long)]
    pub hw: String,
    /// Truncation depth.
    #[arg(long, env = "WV_DEPTH")]
    pub depth: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct VermaArgs {
    #[command(flatten)]
    pub query: Query,
    /// Include the windowed characters of each module.
    #[arg(long)]
    pub tables: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub embedding: EmbeddingArgs,
    /// Largest Dynkin label of the tested highest weights.
    #[arg(long, default_value_t = 2)]
    pub max_label: i64,
    /// Window depth for character identities.
    #[arg(long, env = "WV_DEPTH")]
    pub depth: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct DrawArgs {
    #[command(flatten)]
    pub embedding: EmbeddingArgs,
    #[arg(long)]
    pub hw: String,
    #[arg(long, env = "WV_DEPTH")]
    pub depth: Option<u32>,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input; exit status 2.
    Usage(String),
    /// Failure inside a computation; exit status 1.
    Compute(crate::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Compute(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_ints(s: &str, what: &str) -> CliResult<Vec<i64>> {
    s.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| usage(format!("invalid {what} `{s}`")))).collect()
}

fn parse_algebra(s: &str) -> CliResult<RootDatum> {
    let id: AlgebraId = s.parse().map_err(|e: crate::Error| usage(e.to_string()))?;
    Ok(build_root_datum(id)?)
}

impl EmbeddingArgs {
    fn descriptor(&self) -> CliResult<Option<EmbeddingDescriptor>> {
        let from_json = match &self.embedding {
            Some(json) => Some(EmbeddingDescriptor::from_json(json).map_err(|e| usage(e.to_string()))?),
            None => None,
        };
        let ambient = match (&self.algebra, &from_json) {
            (Some(a), Some(d)) => {
                let id: AlgebraId = a.parse().map_err(|e: crate::Error| usage(e.to_string()))?;
                if id != d.ambient {
                    return Err(usage(format!("algebra {id} does not match embedding ambient {}", d.ambient)));
                }
                id
            }
            (Some(a), None) => a.parse().map_err(|e: crate::Error| usage(e.to_string()))?,
            (None, Some(d)) => d.ambient,
            (None, None) => return Err(usage("an algebra or --embedding is required")),
        };
        match (&self.a_roots, from_json) {
            (Some(_), Some(_)) => Err(usage("give either --a-roots or --embedding, not both")),
            (Some(roots), None) => {
                let a_roots = roots.split(';').map(|r| parse_ints(r, "root")).collect::<CliResult<Vec<_>>>()?;
                Ok(Some(EmbeddingDescriptor { ambient, a_roots }))
            }
            (None, d) => Ok(d),
        }
    }

    fn algebra(&self) -> CliResult<RootDatum> {
        if let Some(d) = self.descriptor()? {
            return Ok(build_root_datum(d.ambient)?);
        }
        parse_algebra(self.algebra.as_deref().unwrap_or_default())
    }

    fn spec(&self) -> CliResult<(EmbeddingDescriptor, EmbeddingSpec)> {
        let d = self.descriptor()?.ok_or_else(|| usage("an embedding is required (--a-roots or --embedding)"))?;
        for r in &d.a_roots {
            if r.len() != d.ambient.rank {
                return Err(usage(format!("root {r:?} must have {} coefficients", d.ambient.rank)));
            }
        }
        let spec = d.build()?;
        Ok((d, spec))
    }
}

fn parse_hw(d: &RootDatum, s: &str) -> CliResult<(Vec<i64>, Weight)> {
    let labels = parse_ints(s, "highest weight")?;
    if labels.len() != d.rank() {
        return Err(usage(format!("--hw needs {} labels for {}", d.rank(), d.id)));
    }
    let w = d.from_dynkin_labels(&labels)?;
    Ok((labels, w))
}

fn fmt_rationals(v: &[Rational]) -> String {
    format!("[{}]", v.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

fn fmt_ints(v: &[i64]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

fn fmt_word(w: &WeylElement) -> String {
    if w.is_identity() {
        "e".into()
    } else {
        w.word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }
}

fn fmt_embedding(d: &EmbeddingDescriptor) -> String {
    format!("{} ⊃ a = <{}>", d.ambient, d.a_roots.iter().map(|r| fmt_ints(r)).collect::<Vec<_>>().join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRow {
    pub coeffs: Vec<i64>,
    pub vector: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub algebra: AlgebraId,
    pub rank: usize,
    pub ambient_dim: usize,
    pub weyl_group_order: u64,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    pub positive_roots: Vec<RootRow>,
    pub rho: Weight,
    #[serde(with = "rational_vec")]
    pub rho_labels: Vec<Rational>,
    pub fundamental_weights: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchReport {
    pub embedding: EmbeddingDescriptor,
    pub hw: Vec<i64>,
    pub dimension: u64,
    pub rows: Vec<BranchRow>,
    pub total_dimension: u64,
    pub result: BranchingResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanReport {
    pub embedding: EmbeddingDescriptor,
    pub fan: Fan,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeRow {
    pub u: WeylElement,
    pub sign: i64,
    pub length: usize,
    pub carrier: Weight,
    pub perp_hw: Weight,
    #[serde(with = "rational_vec")]
    pub perp_labels: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub embedding: EmbeddingDescriptor,
    pub hw: Vec<i64>,
    pub entries: Vec<DecomposeRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VermaRow {
    pub u: WeylElement,
    pub sign: i64,
    pub carrier: Weight,
    #[serde(with = "rational_vec")]
    pub carrier_labels: Vec<Rational>,
    pub lambda: Weight,
    #[serde(with = "rational_vec")]
    pub lambda_labels: Vec<Rational>,
    pub terms: Option<FormalElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VermaReport {
    pub embedding: EmbeddingDescriptor,
    pub hw: Vec<i64>,
    pub depth: u32,
    pub subset: Vec<usize>,
    pub witness: WeylElement,
    pub entries: Vec<VermaRow>,
    pub euler_check: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolveReport {
    pub embedding: EmbeddingDescriptor,
    pub hw: Vec<i64>,
    pub depth: u32,
    pub sequence: ResolutionSequence,
    pub euler_check: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyCase {
    pub a_roots: Vec<Vec<i64>>,
    pub hw: Vec<i64>,
    pub checks: BTreeMap<String, bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub algebra: AlgebraId,
    pub max_label: i64,
    pub depth: u32,
    pub cases: Vec<VerifyCase>,
    pub passed: usize,
    pub failed: usize,
}

/// What a command produced.
pub enum Output {
    Info(InfoReport),
    Branch(BranchReport),
    Fan(FanReport),
    Decompose(DecomposeReport),
    Verma(VermaReport),
    Resolve(ResolveReport),
    Verify(VerifyReport),
    Svg(String),
}

impl Output {
    /// Non-zero when the command ran but a check it reports failed.
    pub fn exit_code(&self) -> i32 {
        match self {
            Output::Verify(r) if r.failed > 0 => 1,
            Output::Resolve(r) if !r.euler_check => 1,
            Output::Verma(r) if !r.euler_check => 1,
            _ => 0,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::Svg(s), _) => s.clone(),
            (_, Format::Json) => {
                let mut s = match self {
                    Output::Info(r) => serde_json::to_string_pretty(r),
                    Output::Branch(r) => serde_json::to_string_pretty(r),
                    Output::Fan(r) => serde_json::to_string_pretty(r),
                    Output::Decompose(r) => serde_json::to_string_pretty(r),
                    Output::Verma(r) => serde_json::to_string_pretty(r),
                    Output::Resolve(r) => serde_json::to_string_pretty(r),
                    Output::Verify(r) => serde_json::to_string_pretty(r),
                    Output::Svg(_) => unreachable!(),
                }
                .expect("reports serialize");
                s.push('\n');
                s
            }
            (_, Format::Text) => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut o = String::new();
        match self {
            Output::Info(r) => {
                let _ = writeln!(o, "algebra {}", r.algebra);
                let _ = writeln!(o, "rank {}", r.rank);
                let _ = writeln!(o, "Weyl group order {}", r.weyl_group_order);
                let _ = writeln!(o, "positive roots {}", r.positive_roots.len());
                let _ = writeln!(o, "rho {}  labels {}", r.rho, fmt_rationals(&r.rho_labels));
                let _ = writeln!(o, "cartan matrix <a_i, a_j^v>:");
                for row in &r.cartan {
                    let _ = writeln!(o, "  {}", fmt_ints(row));
                }
                let _ = writeln!(o, "simple roots:");
                for (i, a) in r.simple_roots.iter().enumerate() {
                    let _ = writeln!(o, "  a{} = {a}", i + 1);
                }
                let _ = writeln!(o, "fundamental weights:");
                for (i, w) in r.fundamental_weights.iter().enumerate() {
                    let _ = writeln!(o, "  w{} = {w}", i + 1);
                }
                let _ = writeln!(o, "positive roots (simple-root coefficients):");
                for root in &r.positive_roots {
                    let _ = writeln!(o, "  {}  {}", fmt_ints(&root.coeffs), root.vector);
                }
            }
            Output::Branch(r) => {
                let _ = writeln!(o, "{}, mu = {}", fmt_embedding(&r.embedding), fmt_ints(&r.hw));
                let _ = writeln!(o, "{:<16} {:<12} {:>6} {:>6}", "labels", "h_perp", "b", "dim");
                for row in &r.rows {
                    let _ = writeln!(
                        o,
                        "{:<16} {:<12} {:>6} {:>6}",
                        fmt_rationals(&row.labels),
                        fmt_rationals(&row.charge),
                        row.multiplicity,
                        row.dimension
                    );
                }
                let _ = writeln!(o, "sum b * dim = {} (dim L^mu = {})", r.total_dimension, r.dimension);
            }
            Output::Fan(r) => {
                let _ = writeln!(o, "{}", fmt_embedding(&r.embedding));
                let _ = writeln!(o, "gamma0 = {}  s(gamma0) = {}", r.fan.gamma0, r.fan.s0);
                let _ = writeln!(o, "factors:");
                for (g, n) in &r.fan.factors {
                    let _ = writeln!(o, "  (1 - e^-{g})^{n}");
                }
                let _ = writeln!(o, "shifts gamma: s(gamma + gamma0)");
                for (g, s) in &r.fan.shifts {
                    let _ = writeln!(o, "  {g}: {s}");
                }
            }
            Output::Decompose(r) => {
                let _ = writeln!(o, "{}, mu = {}", fmt_embedding(&r.embedding), fmt_ints(&r.hw));
                let _ = writeln!(o, "{:<14} {:>4} {:<28} perp labels", "u", "sign", "carrier");
                for e in &r.entries {
                    let _ = writeln!(
                        o,
                        "{:<14} {:>4} {:<28} {}",
                        fmt_word(&e.u),
                        e.sign,
                        e.carrier.to_string(),
                        fmt_rationals(&e.perp_labels)
                    );
                }
            }
            Output::Verma(r) => {
                let _ = writeln!(o, "{}, mu = {}", fmt_embedding(&r.embedding), fmt_ints(&r.hw));
                let _ = writeln!(
                    o,
                    "I = {:?}  witness {}",
                    r.subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
                    fmt_word(&r.witness)
                );
                let _ = writeln!(o, "{:>4} {:<20} lambda labels", "sign", "carrier labels");
                for e in &r.entries {
                    let _ = writeln!(
                        o,
                        "{:>4} {:<20} {}",
                        e.sign,
                        fmt_rationals(&e.carrier_labels),
                        fmt_rationals(&e.lambda_labels)
                    );
                    if let Some(t) = &e.terms {
                        for (w, c) in t.terms() {
                            let _ = writeln!(o, "       {w}: {c}");
                        }
                    }
                }
                let _ = writeln!(o, "Euler check (depth {}): {}", r.depth, pass(r.euler_check));
            }
            Output::Resolve(r) => {
                let _ = writeln!(o, "{}, mu = {}", fmt_embedding(&r.embedding), fmt_ints(&r.hw));
                let _ = writeln!(
                    o,
                    "{:>2} {:<14} {:<26} {:<26} {:<26} {:>4}",
                    "k", "u", "hw", "carrier", "perp hw", "sign"
                );
                for (k, e) in r.sequence.entries() {
                    let _ = writeln!(
                        o,
                        "{:>2} {:<14} {:<26} {:<26} {:<26} {:>4}",
                        k,
                        fmt_word(&e.u),
                        e.highest_weight.to_string(),
                        e.carrier.to_string(),
                        e.perp_hw.to_string(),
                        e.sign
                    );
                }
                let _ = writeln!(o, "Euler check (depth {}): {}", r.depth, pass(r.euler_check));
            }
            Output::Verify(r) => {
                for c in &r.cases {
                    let ok = c.checks.values().all(|&b| b);
                    let failed: Vec<&str> = c.checks.iter().filter(|(_, &b)| !b).map(|(k, _)| k.as_str()).collect();
                    let _ = write!(
                        o,
                        "{} {} a = <{}> mu = {}",
                        pass(ok),
                        r.algebra,
                        c.a_roots.iter().map(|x| fmt_ints(x)).collect::<Vec<_>>().join(", "),
                        fmt_ints(&c.hw)
                    );
                    if !failed.is_empty() {
                        let _ = write!(o, "  failed: {}", failed.join(", "));
                    }
                    o.push('\n');
                }
                let _ = writeln!(o, "{} passed, {} failed", r.passed, r.failed);
            }
            Output::Svg(_) => unreachable!(),
        }
        o
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn info(d: &RootDatum) -> InfoReport {
    InfoReport {
        algebra: d.id,
        rank: d.rank(),
        ambient_dim: d.ambient_dim(),
        weyl_group_order: d.id.weyl_group_order(),
        cartan: d.cartan().to_vec(),
        simple_roots: d.simple_roots().to_vec(),
        positive_roots: d
            .positive_roots()
            .iter()
            .map(|r| RootRow { coeffs: r.coeffs.clone(), vector: r.vector.clone() })
            .collect(),
        rho: d.rho().clone(),
        rho_labels: d.dynkin_labels(d.rho()),
        fundamental_weights: d.fundamental_weights().to_vec(),
    }
}

/// All checks of `wv verify` for one triple.
pub fn verify_case(spec: &EmbeddingSpec, mu: &Weight, depth: u32) -> crate::Result<BTreeMap<String, bool>> {
    let d = spec.ambient();
    let mut checks = BTreeMap::new();
    let dec = decompose(spec, mu)?;
    checks.insert("reconstruction".into(), dec.expand(spec)? == singular_element(d, mu)?);
    let branching = branch(spec, mu, default_depth(spec, mu)?)?;
    checks.insert("branching".into(), branching.b == brute_force_branch(spec, mu)?);
    let seq = bgg_resolution(spec, mu)?;
    checks.insert("euler".into(), verify_euler(&seq, spec, depth)?);
    let pd = parabolic_data(spec)?;
    let mut gv_ok = true;
    for e in &dec.entries {
        gv_ok &= gv_character(&pd, &e.perp_hw, depth)?.terms == gv_to_ordinary(&pd, &e.perp_hw, depth)?;
    }
    checks.insert("gv-ordinary".into(), gv_ok);
    let ch = freudenthal(d, mu)?.to_formal().below(d, mu, depth);
    checks.insert("character".into(), standard_weyl_verma(d, mu, depth)? == ch);
    if spec.perp_system().rank() == 1 {
        checks.insert("recovered-resolution".into(), resolution_from_branching(spec, mu, None)? == seq);
    }
    Ok(checks)
}

pub fn execute(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Info { algebra } => Ok(Output::Info(info(&parse_algebra(algebra)?))),
        Command::Branch(q) => {
            let (desc, spec) = q.embedding.spec()?;
            let (hw, mu) = parse_hw(spec.ambient(), &q.hw)?;
            let depth = match q.depth {
                Some(d) => d,
                None => default_depth(&spec, &mu)?,
            };
            let result = branch(&spec, &mu, depth)?;
            Ok(Output::Branch(BranchReport {
                embedding: desc,
                hw,
                dimension: module_dimension(spec.ambient(), &mu)?,
                rows: result.rows(&spec)?,
                total_dimension: result.total_dimension(&spec)?,
                result,
            }))
        }
        Command::Fan(e) => {
            let (desc, spec) = e.spec()?;
            Ok(Output::Fan(FanReport { embedding: desc, fan: compute_fan(&spec)? }))
        }
        Command::Decompose(q) => {
            let (desc, spec) = q.embedding.spec()?;
            let (hw, mu) = parse_hw(spec.ambient(), &q.hw)?;
            let entries = decompose(&spec, &mu)?
                .entries
                .into_iter()
                .map(|e| DecomposeRow {
                    perp_labels: spec.perp_system().dynkin_labels(&e.perp_hw),
                    u: e.u,
                    sign: e.sign,
                    length: e.length,
                    carrier: e.carrier,
                    perp_hw: e.perp_hw,
                })
                .collect();
            Ok(Output::Decompose(DecomposeReport { embedding: desc, hw, entries }))
        }
        Command::Verma(v) => {
            let q = &v.query;
            let (desc, spec) = q.embedding.spec()?;
            let (hw, mu) = parse_hw(spec.ambient(), &q.hw)?;
            let depth = q.depth.unwrap_or(DEFAULT_DEPTH);
            let pd = parabolic_data(&spec)?;
            let dec = weyl_verma_decompose(&spec, &mu, depth)?;
            let d = spec.ambient();
            let euler_check = dec.euler_sum(d) == standard_weyl_verma(d, &mu, depth)?;
            let entries = dec
                .entries
                .into_iter()
                .map(|e| VermaRow {
                    carrier_labels: d.dynkin_labels(&e.carrier),
                    lambda_labels: spec.perp_system().dynkin_labels(&e.gv.highest_weight),
                    lambda: e.gv.highest_weight,
                    terms: v.tables.then_some(e.gv.terms),
                    u: e.u,
                    sign: e.sign,
                    carrier: e.carrier,
                })
                .collect();
            Ok(Output::Verma(VermaReport {
                embedding: desc,
                hw,
                depth,
                subset: pd.subset,
                witness: pd.witness,
                entries,
                euler_check,
            }))
        }
        Command::Resolve(q) => {
            let (desc, spec) = q.embedding.spec()?;
            let (hw, mu) = parse_hw(spec.ambient(), &q.hw)?;
            let depth = q.depth.unwrap_or(DEFAULT_DEPTH);
            let sequence = bgg_resolution(&spec, &mu)?;
            let euler_check = verify_euler(&sequence, &spec, depth)?;
            Ok(Output::Resolve(ResolveReport { embedding: desc, hw, depth, sequence, euler_check }))
        }
        Command::Verify(v) => {
            let d = v.embedding.algebra()?;
            let depth = v.depth.unwrap_or(DEFAULT_DEPTH);
            if v.max_label < 0 {
                return Err(usage("--max-label must be non-negative"));
            }
            let embeddings = match v.embedding.descriptor()? {
                Some(desc) => vec![desc.a_roots],
                None => standard_embeddings(&d),
            };
            let mut cases = Vec::new();
            for a_roots in embeddings {
                let spec = build_embedding(&d, &a_roots)?;
                for labels in label_grid(d.rank(), v.max_label) {
                    let mu = d.from_dynkin_labels(&labels)?;
                    let checks = verify_case(&spec, &mu, depth)?;
                    cases.push(VerifyCase { a_roots: a_roots.clone(), hw: labels, checks });
                }
            }
            let passed = cases.iter().filter(|c| c.checks.values().all(|&b| b)).count();
            let failed = cases.len() - passed;
            Ok(Output::Verify(VerifyReport { algebra: d.id, max_label: v.max_label, depth, cases, passed, failed }))
        }
        Command::Draw(a) => {
            let d = a.embedding.algebra()?;
            let (_, mu) = parse_hw(&d, &a.hw)?;
            let spec = match a.embedding.descriptor()? {
                Some(desc) => Some(desc.build()?),
                None => None,
            };
            let depth = a.depth.unwrap_or(DEFAULT_DEPTH);
            // dimension first, so that oversized requests fail before layout
            weyl_dimension(&d, &mu)?;
            Ok(Output::Svg(svg::draw(&d, &mu, spec.as_ref(), depth)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CliResult<Output> {
        let cli = Cli::try_parse_from(std::iter::once("wv").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn info_b2() {
        let Output::Info(r) = run(&["info", "B2"]).unwrap() else { panic!() };
        assert_eq!(r.positive_roots.len(), 4);
        assert_eq!(r.weyl_group_order, 8);
        assert_eq!(r.rho_labels, vec![Rational::from_integer(1); 2]);
    }

    #[test]
    fn branch_table() {
        let Output::Branch(r) = run(&["branch", "B2", "--hw", "1,0", "--a-roots", "1,2"]).unwrap() else { panic!() };
        let table: Vec<(String, u64)> =
            r.rows.iter().map(|row| (fmt_rationals(&row.labels), row.multiplicity)).collect();
        assert_eq!(table, vec![("[1]".to_string(), 2), ("[0]".to_string(), 1)]);
        let json = Output::Branch(r.clone()).render(Format::Json);
        assert_eq!(serde_json::from_str::<BranchReport>(&json).unwrap(), r);
    }

    #[test]
    fn embedding_json_and_errors() {
        let out = run(&["decompose", "--embedding", r#"{"ambient":"B2","a_roots":[[1,2]]}"#, "--hw", "1,0"]).unwrap();
        let Output::Decompose(r) = out else { panic!() };
        assert_eq!(r.entries.len(), 4);
        assert_eq!(run(&["branch", "B2", "--hw", "1", "--a-roots", "1,2"]).err().unwrap().exit_code(), 2);
        assert_eq!(run(&["branch", "B2", "--hw", "1,0", "--a-roots", "2,1"]).err().unwrap().exit_code(), 1);
        assert_eq!(run(&["branch", "B2", "--hw", "x,0", "--a-roots", "1,2"]).err().unwrap().exit_code(), 2);
        assert_eq!(run(&["branch", "B2", "--hw", "1,0"]).err().unwrap().exit_code(), 2);
        assert_eq!(run(&["info", "Q7"]).err().unwrap().exit_code(), 2);
        assert_eq!(run(&["draw", "A1", "--hw", "1"]).err().unwrap().exit_code(), 1);
    }

    #[test]
    fn resolve_passes_euler() {
        let Output::Resolve(r) = run(&["resolve", "B2", "--hw", "1,0", "--a-roots", "1,2"]).unwrap() else { panic!() };
        assert_eq!(r.sequence.len(), 4);
        assert!(r.euler_check);
        let text = Output::Resolve(r).render(Format::Text);
        assert!(text.contains("Euler check (depth 8): PASS"));
    }
}
