//! `stabtee` command-line front end.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use stabtee::boundary::{self, BoundaryError, HalfPlaneContext, Side};
use stabtee::code::{self, CodeError, CodeSpec, OnConflict, ValidationReport};
use stabtee::entropy::{self, BufferPolicy, EntropyError, EntropyValue, GammaResult, GroupCounter};
use stabtee::groebner::{self, GroebnerError, ModuleStyle, ModuleVector, MonomialOrder, TermOrder};
use stabtee::lattice::{Geometry, PartitionStyle, Rect, Region};
use stabtee::laurent::{LaurentError, LaurentPoly, Monomial};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "stabtee", version, about = "Entanglement entropy and boundary analysis of translation-invariant stabilizer codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that all generator translates commute and report the range.
    Validate(CommonArgs),
    /// Entropy of a union of rectangles.
    Entropy(EntropyArgs),
    /// Levin-Wen topological entanglement entropy.
    Tee(TeeArgs),
    /// Cylinder entropy and torus logical dimension over a range of circumferences.
    ScanCylinder(ScanArgs),
    /// Bulk stabilizers and secondary boundary gauge operators on half-planes.
    Boundary(BoundaryArgs),
    /// Reduced Gröbner basis of a module.
    Groebner(GroebnerArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// `builtin:NAME` or a code file (the `.json` suffix may be omitted).
    #[arg(long)]
    code: String,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Buffer {
    Auto,
    Fixed,
    Strict,
}

#[derive(Args)]
struct BufferArgs {
    /// Exterior buffer around the regions.
    #[arg(long, value_enum, default_value_t = Buffer::Auto)]
    buffer: Buffer,
    /// Buffer width for `--buffer fixed`.
    #[arg(long)]
    beta: Option<i64>,
}

#[derive(Args)]
struct EntropyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Half-open rectangle `x1,x2,y1,y2`; repeat for a union.
    #[arg(long = "region", required = true, value_parser = parse_rect)]
    regions: Vec<Rect>,
    /// Compute on an `LX,LY` torus instead of the infinite plane.
    #[arg(long, value_parser = parse_pair)]
    torus: Option<(usize, usize)>,
    #[command(flatten)]
    buffer: BufferArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PartitionArg {
    Rect,
    Concave,
    Both,
}

#[derive(Args)]
struct TeeArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = PartitionArg::Both)]
    partition: PartitionArg,
    /// Linear size; searched for the smallest stable value when omitted.
    #[arg(long = "L", alias = "l")]
    l: Option<i64>,
    /// Largest L tried by the automatic search.
    #[arg(long = "l-max", default_value_t = 32)]
    l_max: i64,
    #[command(flatten)]
    buffer: BufferArgs,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long = "l-min", default_value_t = 3)]
    l_min: usize,
    #[arg(long = "l-max")]
    l_max: usize,
    /// Torus length along x for the logical dimension.
    #[arg(long, default_value_t = 12)]
    lx: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Upper,
    Lower,
    Both,
}

#[derive(Args)]
struct BoundaryArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = SideArg::Both)]
    side: SideArg,
    /// Skip the comparison against the spurious TEE.
    #[arg(long)]
    no_check: bool,
    /// Largest L tried when computing the spurious TEE.
    #[arg(long = "l-max", default_value_t = 32)]
    l_max: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StyleArg {
    Top,
    Pot,
}

#[derive(Args)]
struct GroebnerArgs {
    /// `builtin:NAME` or a code file; its generators become the module inputs.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    code: Option<String>,
    /// Module document: `{"p": 2, "generators": [["1", "x"], ...]}`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// lex-xy, lex-yx, grlex or anti-lex-y.
    #[arg(long, default_value = "lex-xy")]
    order: MonomialOrder,
    #[arg(long, value_enum, default_value_t = StyleArg::Top)]
    style: StyleArg,
    /// Component indices from lowest to highest priority, e.g. `0,2,1,3`.
    #[arg(long, value_delimiter = ',')]
    positions: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    NoConvergence(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::NoConvergence(_) => 3,
            CliError::Parse(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::NoConvergence(_) => "non-convergence",
            CliError::Parse(_) => "parse",
        }
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::Io { .. }
            | CodeError::Parse { .. }
            | CodeError::Field { .. }
            | CodeError::Laurent(_)
            | CodeError::UnknownBuiltin(_)
            | CodeError::BadParams(_) => CliError::Parse(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<EntropyError> for CliError {
    fn from(e: EntropyError) -> Self {
        match e {
            EntropyError::NoConvergence(_) => CliError::NoConvergence(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<BoundaryError> for CliError {
    fn from(e: BoundaryError) -> Self {
        match e {
            BoundaryError::NoConvergence(_) | BoundaryError::Inconclusive { .. } => CliError::NoConvergence(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::Laurent(_) => CliError::Parse(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<LaurentError> for CliError {
    fn from(e: LaurentError) -> Self {
        CliError::Parse(e.to_string())
    }
}

fn parse_ints(s: &str, n: usize) -> Result<Vec<i64>, String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad integer {t:?}")))
        .collect::<Result<_, _>>()?;
    if v.len() != n {
        return Err(format!("expected {n} comma-separated integers"));
    }
    Ok(v)
}

fn parse_rect(s: &str) -> Result<Rect, String> {
    let v = parse_ints(s, 4)?;
    Ok(Rect::new(v[0], v[1], v[2], v[3]))
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let v = parse_ints(s, 2)?;
    if v.iter().any(|&n| n < 1) {
        return Err("torus extents must be positive".into());
    }
    Ok((v[0] as usize, v[1] as usize))
}

/// A result ready for rendering in any of the three formats.
struct Report {
    header: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
    footer: Vec<(String, String)>,
    json: Value,
}

impl Report {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.table(),
            Format::Csv => self.csv(),
            Format::Json => {
                let mut doc = json!({ "schema_version": SCHEMA_VERSION });
                if let (Value::Object(d), Value::Object(extra)) = (&mut doc, &self.json) {
                    d.extend(extra.clone());
                }
                let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
                s.push('\n');
                s
            }
        }
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let kv = |out: &mut String, pairs: &[(String, String)]| {
            let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in pairs {
                out.push_str(&format!("{k:<w$}  {v}\n"));
            }
        };
        kv(&mut out, &self.header);
        if !self.columns.is_empty() {
            if !self.header.is_empty() {
                out.push('\n');
            }
            let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
            for row in &self.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let line = |cells: &[String]| {
                let padded: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                    .collect();
                format!("{}\n", padded.join("  ").trim_end())
            };
            out.push_str(&line(&self.columns));
            for row in &self.rows {
                out.push_str(&line(row));
            }
        }
        if !self.footer.is_empty() {
            out.push('\n');
            kv(&mut out, &self.footer);
        }
        out
    }

    fn csv(&self) -> String {
        let esc = |c: &str| {
            if c.contains([',', '"', '\n']) {
                format!("\"{}\"", c.replace('"', "\"\""))
            } else {
                c.to_string()
            }
        };
        let mut out = String::new();
        let line = |cells: &[String]| format!("{}\n", cells.iter().map(|c| esc(c)).collect::<Vec<_>>().join(","));
        out.push_str(&line(&self.columns));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        out
    }
}

fn load_code(source: &str, policy: OnConflict) -> Result<(CodeSpec, ValidationReport), CliError> {
    if let Some(name) = source.strip_prefix("builtin:") {
        let code = code::builtin(name)?;
        let report = code::validate(&code);
        return Ok((code, report));
    }
    let path = Path::new(source);
    let with_ext = path.with_extension("json");
    let path = if !path.exists() && path.extension().is_none() && with_ext.exists() { with_ext.as_path() } else { path };
    Ok(code::load_with(path, policy)?)
}

fn code_json(code: &CodeSpec) -> Value {
    json!({ "name": code.name, "p": code.p, "q": code.q, "n_s": code.n_s(), "range": code.range() })
}

fn code_header(code: &CodeSpec) -> Vec<(String, String)> {
    vec![
        ("code".into(), code.name.clone()),
        ("p".into(), code.p.to_string()),
        ("q".into(), code.q.to_string()),
        ("range".into(), code.range().to_string()),
    ]
}

fn entropy_json(v: EntropyValue, p: u32) -> Value {
    let mut m = json!({ "dits": v.to_rational_string(), "halves": v.halves });
    if p == 2 {
        m["log2"] = json!(v.to_rational_string());
    }
    m
}

fn cmd_validate(args: &CommonArgs) -> Result<(Report, Option<CliError>), CliError> {
    let (code, report) = load_code(&args.code, OnConflict::Warn)?;
    let mut header = code_header(&code);
    header.push(("generators".into(), code.n_s().to_string()));
    header.push(("commuting".into(), report.commuting.to_string()));
    let pairs: Vec<String> = report.violating_pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    header.push(("violating_pairs".into(), if pairs.is_empty() { "none".into() } else { pairs.join(" ") }));
    let rows = code
        .generators
        .iter()
        .zip(&code.labels)
        .enumerate()
        .map(|(i, (g, label))| vec![i.to_string(), label.clone(), g.to_string()])
        .collect();
    let json = json!({
        "command": "validate",
        "code": code_json(&code),
        "commuting": report.commuting,
        "violating_pairs": report.violating_pairs,
        "generators": code.generators.iter().zip(&code.labels).map(|(g, l)| json!({ "label": l, "operator": g.to_string() })).collect::<Vec<_>>(),
    });
    let failure = (!report.commuting).then(|| CliError::Validation(format!("generators do not commute: {}", pairs.join(" "))));
    Ok((
        Report {
            header,
            columns: vec!["index".into(), "label".into(), "generator".into()],
            rows,
            footer: Vec::new(),
            json,
        },
        failure,
    ))
}

fn fixed_beta(b: &BufferArgs) -> Result<Option<i64>, CliError> {
    match b.buffer {
        Buffer::Fixed => match b.beta {
            Some(beta) if beta >= 0 => Ok(Some(beta)),
            _ => Err(CliError::Validation("--buffer fixed needs a nonnegative --beta".into())),
        },
        _ => Ok(None),
    }
}

fn cmd_entropy(args: &EntropyArgs) -> Result<Report, CliError> {
    let (code, _) = load_code(&args.common.code, OnConflict::Reject)?;
    let region = Region { rects: args.regions.clone() };
    let (value, beta, size) = if let Some((lx, ly)) = args.torus {
        let geom = Geometry::torus(lx, ly);
        let n_s = code.n_s();
        let translates: Vec<(Monomial, usize)> = (0..ly as i64)
            .flat_map(|y| (0..lx as i64).flat_map(move |x| (0..n_s).map(move |mu| (Monomial::new(x, y), mu))))
            .collect();
        let counter = GroupCounter::from_translates(&code, geom, &translates)?;
        let s = counter.qudits_in(&region) as i64 - counter.log_group_size(&region) as i64;
        (EntropyValue::from_dits(s), None, counter.qudits_in(&region) / code.q)
    } else {
        if args.buffer.buffer == Buffer::Strict {
            return Err(CliError::Validation("--buffer strict applies to tee only".into()));
        }
        let at = |beta: i64| -> Result<EntropyValue, CliError> {
            let bound = region.bounding_rect().unwrap_or(Rect::new(0, 0, 0, 0));
            let geom = entropy::plane_around(&code, bound.grow(beta));
            Ok(entropy::entropy_region(&code, &geom, &region, beta)?)
        };
        let (v, beta) = match fixed_beta(&args.buffer)? {
            Some(beta) => (at(beta)?, beta),
            None => {
                let mut beta = 2 * code.range();
                let mut prev = at(beta)?;
                let mut done = None;
                for _ in 0..entropy::MAX_BUFFER_DOUBLINGS {
                    let next = at(2 * beta)?;
                    if next == prev {
                        done = Some((prev, beta));
                        break;
                    }
                    beta *= 2;
                    prev = next;
                }
                done.ok_or_else(|| CliError::NoConvergence(format!("entropy did not stabilize up to beta={beta}")))?
            }
        };
        (v, Some(beta), region.size())
    };
    let mut header = code_header(&code);
    header.push(("sites".into(), size.to_string()));
    header.push(("geometry".into(), match args.torus {
        Some((lx, ly)) => format!("torus {lx}x{ly}"),
        None => "plane".into(),
    }));
    if let Some(b) = beta {
        header.push(("beta".into(), b.to_string()));
    }
    header.push(("entropy_dits".into(), value.to_string()));
    if code.p == 2 {
        header.push(("entropy_log2".into(), value.to_string()));
    }
    let mut columns = vec!["sites".to_string(), "beta".into(), "entropy_dits".into()];
    let mut row = vec![size.to_string(), beta.map(|b| b.to_string()).unwrap_or_default(), value.to_string()];
    if code.p == 2 {
        columns.push("entropy_log2".into());
        row.push(value.to_string());
    }
    let json = json!({
        "command": "entropy",
        "code": code_json(&code),
        "regions": args.regions.iter().map(|r| [r.x1, r.x2, r.y1, r.y2]).collect::<Vec<_>>(),
        "torus": args.torus.map(|(a, b)| [a, b]),
        "sites": size,
        "beta": beta,
        "entropy": entropy_json(value, code.p),
    });
    Ok(Report { header, columns, rows: vec![row], footer: Vec::new(), json })
}

fn settle(code: &CodeSpec, style: PartitionStyle, policy: BufferPolicy, l_max: i64) -> Result<GammaResult, CliError> {
    let mut l = code.range().max(2);
    let mut prev = entropy::gamma_at(code, style, l, policy)?;
    while l < l_max {
        let next = entropy::gamma_at(code, style, l + 1, policy)?;
        if next.gamma == prev.gamma {
            return Ok(prev);
        }
        l += 1;
        prev = next;
    }
    Err(CliError::NoConvergence(format!("gamma did not settle for L up to {l_max}")))
}

/// `γ` on each requested partition at one common `L`.
fn tee_results(
    code: &CodeSpec,
    styles: &[PartitionStyle],
    l: Option<i64>,
    l_max: i64,
    policy: BufferPolicy,
) -> Result<Vec<(PartitionStyle, GammaResult)>, CliError> {
    let common = match l {
        Some(l) => l,
        None => {
            let mut best = 0;
            for &s in styles {
                best = best.max(settle(code, s, policy, l_max)?.l);
            }
            best
        }
    };
    styles.iter().map(|&s| Ok((s, entropy::gamma_at(code, s, common, policy)?))).collect()
}

fn style_name(s: PartitionStyle) -> &'static str {
    match s {
        PartitionStyle::Rectangular => "rectangular",
        PartitionStyle::Concave => "concave",
    }
}

fn cmd_tee(args: &TeeArgs) -> Result<Report, CliError> {
    let (code, _) = load_code(&args.common.code, OnConflict::Reject)?;
    let styles: Vec<PartitionStyle> = match args.partition {
        PartitionArg::Rect => vec![PartitionStyle::Rectangular],
        PartitionArg::Concave => vec![PartitionStyle::Concave],
        PartitionArg::Both => vec![PartitionStyle::Rectangular, PartitionStyle::Concave],
    };
    if let Some(l) = args.l {
        if l < 1 {
            return Err(CliError::Validation("L must be at least 1".into()));
        }
    }
    let policy = match fixed_beta(&args.buffer)? {
        Some(beta) => BufferPolicy::Fixed(beta),
        None => BufferPolicy::Auto,
    };
    let l = match args.buffer.buffer {
        Buffer::Strict => Some(args.l.unwrap_or(0).max(entropy::strict_min_l(&code))),
        _ => args.l,
    };
    let results = tee_results(&code, &styles, l, args.l_max, policy)?;
    let log2 = code.p == 2;
    let mut columns: Vec<String> =
        ["partition", "L", "beta", "m_ABC", "m_B", "m_AB", "m_BC", "gamma_dits"].iter().map(|s| s.to_string()).collect();
    if log2 {
        columns.push("gamma_log2".into());
    }
    let mut rows = Vec::new();
    for (s, r) in &results {
        let c = r.counts;
        let mut row = vec![
            style_name(*s).to_string(),
            r.l.to_string(),
            r.beta.to_string(),
            c.m_abc.to_string(),
            c.m_b.to_string(),
            c.m_ab.to_string(),
            c.m_bc.to_string(),
            r.gamma.to_string(),
        ];
        if log2 {
            row.push(r.gamma.to_string());
        }
        rows.push(row);
    }
    let stee = (results.len() == 2).then(|| results[0].1.gamma.minus(results[1].1.gamma));
    if let Some(d) = stee {
        let mut row = vec!["stee".to_string(), results[0].1.l.to_string(), String::new(), String::new(), String::new(), String::new(), String::new(), d.to_string()];
        if log2 {
            row.push(d.to_string());
        }
        rows.push(row);
    }
    let json = json!({
        "command": "tee",
        "code": code_json(&code),
        "buffer": match args.buffer.buffer { Buffer::Auto => "auto", Buffer::Fixed => "fixed", Buffer::Strict => "strict" },
        "results": results.iter().map(|(s, r)| json!({
            "partition": style_name(*s),
            "L": r.l,
            "beta": r.beta,
            "counts": r.counts,
            "gamma": entropy_json(r.gamma, code.p),
        })).collect::<Vec<_>>(),
        "stee": stee.map(|d| entropy_json(d, code.p)),
    });
    Ok(Report { header: code_header(&code), columns, rows, footer: Vec::new(), json })
}

fn cmd_scan(args: &ScanArgs) -> Result<Report, CliError> {
    let (code, _) = load_code(&args.common.code, OnConflict::Reject)?;
    if args.l_min < 1 || args.l_max < args.l_min || args.lx < 1 {
        return Err(CliError::Validation("need 1 ≤ l-min ≤ l-max and lx ≥ 1".into()));
    }
    let ls: Vec<usize> = (args.l_min..=args.l_max).collect();
    let points = entropy::scan_cylinder(&code, &ls, args.lx)?;
    let log2 = code.p == 2;
    let mut columns: Vec<String> = vec!["l".into(), "S_A_dits".into(), "k".into()];
    if log2 {
        columns.push("S_A_log2".into());
    }
    columns.push("half_length".into());
    let rows = points
        .iter()
        .map(|pt| {
            let mut row = vec![pt.l.to_string(), pt.s_a.to_string(), pt.k.to_string()];
            if log2 {
                row.push(pt.s_a.to_string());
            }
            row.push(pt.half_length.to_string());
            row
        })
        .collect();
    let mut header = code_header(&code);
    header.push(("lx".into(), args.lx.to_string()));
    let json = json!({
        "command": "scan-cylinder",
        "code": code_json(&code),
        "lx": args.lx,
        "points": points.iter().map(|pt| json!({
            "l": pt.l,
            "S_A": entropy_json(pt.s_a, code.p),
            "k": pt.k,
            "half_length": pt.half_length,
        })).collect::<Vec<_>>(),
    });
    Ok(Report { header, columns, rows, footer: Vec::new(), json })
}

fn cmd_boundary(args: &BoundaryArgs) -> Result<(Report, Option<CliError>), CliError> {
    let (code, _) = load_code(&args.common.code, OnConflict::Reject)?;
    let sides: Vec<Side> = match args.side {
        SideArg::Upper => vec![Side::Upper],
        SideArg::Lower => vec![Side::Lower],
        SideArg::Both => vec![Side::Upper, Side::Lower],
    };
    let mut rows = Vec::new();
    let mut side_docs = Vec::new();
    let mut total = 0;
    for &side in &sides {
        let count = boundary::secondary_bgo_dimension(&code, side)?;
        let ctx = HalfPlaneContext::new(&code, side, count.widths.0, count.probe_height)?
            .with_heights(count.analysis_height, count.depth);
        let bulk = boundary::bulk_generators(&ctx)?;
        let report = boundary::bgo_report(&ctx);
        let name = match side {
            Side::Upper => "upper",
            Side::Lower => "lower",
        };
        total += count.count;
        rows.push(vec![
            name.to_string(),
            count.count.to_string(),
            format!("{} {}", count.widths.0, count.widths.1),
            count.probe_height.to_string(),
            count.analysis_height.to_string(),
            count.depth.to_string(),
            bulk.len().to_string(),
        ]);
        side_docs.push(json!({
            "side": name,
            "secondary": count.count,
            "widths": [count.widths.0, count.widths.1],
            "probe_height": count.probe_height,
            "analysis_height": count.analysis_height,
            "depth": count.depth,
            "bulk_basis": bulk.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "report": report,
            "representatives": report.representatives.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        }));
    }
    let mut footer = Vec::new();
    let mut failure = None;
    let mut check = Value::Null;
    if sides.len() == 2 && !args.no_check {
        let styles = [PartitionStyle::Rectangular, PartitionStyle::Concave];
        let results = tee_results(&code, &styles, None, args.l_max, BufferPolicy::Auto)?;
        let stee = results[0].1.gamma.minus(results[1].1.gamma);
        let holds = stee.halves == total as i64;
        footer.push(("secondary_total".into(), total.to_string()));
        footer.push(("stee_dits".into(), stee.to_string()));
        footer.push(("twice_stee".into(), stee.halves.to_string()));
        footer.push(("corollary".into(), if holds { "holds".into() } else { "fails".into() }));
        check = json!({ "secondary_total": total, "stee": entropy_json(stee, code.p), "holds": holds });
        if !holds {
            failure = Some(CliError::Validation(format!("secondary total {total} differs from twice the spurious TEE {stee}")));
        }
    }
    for (doc, &side) in side_docs.iter().zip(&sides) {
        let name = match side {
            Side::Upper => "upper",
            Side::Lower => "lower",
        };
        for (i, g) in doc["bulk_basis"].as_array().into_iter().flatten().enumerate() {
            footer.push((format!("{name}.bulk[{i}]"), g.as_str().unwrap_or_default().to_string()));
        }
        for (i, g) in doc["representatives"].as_array().into_iter().flatten().enumerate() {
            footer.push((format!("{name}.secondary[{i}]"), g.as_str().unwrap_or_default().to_string()));
        }
    }
    let json = json!({
        "command": "boundary",
        "code": code_json(&code),
        "sides": side_docs,
        "check": check,
    });
    let columns = ["side", "secondary", "widths", "probe_height", "analysis_height", "depth", "bulk_basis"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ok((Report { header: code_header(&code), columns, rows, footer, json }, failure))
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    #[serde(default)]
    name: Option<String>,
    p: u32,
    generators: Vec<Vec<String>>,
}

fn load_module(path: &Path) -> Result<(String, Vec<ModuleVector>), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc: ModuleDoc = serde_json::from_str(&text).map_err(|e| {
        CliError::Parse(format!("parse error in {} at line {}, column {}: {e}", path.display(), e.line(), e.column()))
    })?;
    let rank = doc.generators.first().map(|g| g.len()).unwrap_or(0);
    if rank == 0 {
        return Err(CliError::Parse(format!("{}: no generators", path.display())));
    }
    let mut gens = Vec::new();
    for (i, g) in doc.generators.iter().enumerate() {
        if g.len() != rank {
            return Err(CliError::Parse(format!("{}: generator {i} has {} components, expected {rank}", path.display(), g.len())));
        }
        let comps: Vec<&str> = g.iter().map(|s| s.as_str()).collect();
        gens.push(ModuleVector::parse(doc.p, &comps)?);
    }
    Ok((doc.name.unwrap_or_else(|| path.display().to_string()), gens))
}

fn cmd_groebner(args: &GroebnerArgs) -> Result<Report, CliError> {
    let (name, gens, q) = match (&args.code, &args.input) {
        (Some(src), _) => {
            let (code, _) = load_code(src, OnConflict::Reject)?;
            let gens: Vec<ModuleVector> = code.generators.iter().map(ModuleVector::from_pauli).collect();
            (code.name.clone(), gens, code.q)
        }
        (None, Some(path)) => {
            let (name, gens) = load_module(path)?;
            let q = gens[0].rank().div_ceil(2);
            (name, gens, q)
        }
        (None, None) => return Err(CliError::Parse("need --code or --input".into())),
    };
    let rank = gens[0].rank();
    let style = match args.style {
        StyleArg::Top => ModuleStyle::Top,
        StyleArg::Pot => ModuleStyle::Pot,
    };
    let order = match &args.positions {
        Some(pos) => TermOrder::with_positions(args.order, style, pos)?,
        None => TermOrder::new(args.order, style, rank),
    };
    let basis = groebner::buchberger(&gens, &order)?;
    let d = groebner::input_degree(&gens);
    let report = groebner::check_degree_bound(&basis, d, q);
    let p = gens[0].p();
    let rows = basis
        .elements
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let (c, m, _) = groebner::leading_term(g, &order).expect("nonzero basis element");
            vec![
                i.to_string(),
                c.to_string(),
                LaurentPoly::monomial(p, m, 1).to_string(),
                g.degree().to_string(),
                g.to_string(),
            ]
        })
        .collect();
    let style_name = match style {
        ModuleStyle::Top => "top",
        ModuleStyle::Pot => "pot",
    };
    let header = vec![
        ("module".to_string(), name.clone()),
        ("p".into(), p.to_string()),
        ("rank".into(), rank.to_string()),
        ("order".into(), format!("{} {}", args.order.name(), style_name)),
        ("elements".into(), basis.len().to_string()),
    ];
    let footer = vec![
        ("input_degree".to_string(), report.input_degree.to_string()),
        ("basis_degree".into(), report.basis_degree.to_string()),
        ("degree_bound".into(), report.bound.to_string()),
        ("within_bound".into(), report.within.to_string()),
    ];
    let json = json!({
        "command": "groebner",
        "module": name,
        "p": p,
        "rank": rank,
        "order": { "monomial": args.order.name(), "style": style_name, "positions": args.positions },
        "elements": basis.elements.iter().map(|g| {
            let (c, m, _) = groebner::leading_term(g, &order).expect("nonzero basis element");
            json!({
                "components": g.comps().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "leading_component": c,
                "leading_monomial": LaurentPoly::monomial(p, m, 1).to_string(),
                "degree": g.degree(),
            })
        }).collect::<Vec<_>>(),
        "degree_report": report,
    });
    Ok(Report {
        header,
        columns: vec!["index".into(), "lead_component".into(), "lead_monomial".into(), "degree".into(), "element".into()],
        rows,
        footer,
        json,
    })
}

fn emit(report: &Report, format: Format, failure: Option<CliError>) -> ExitCode {
    print!("{}", report.render(format));
    match failure {
        None => ExitCode::SUCCESS,
        Some(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(e.exit_code())
        }
    }
}

fn fail(e: CliError, format: Format) -> ExitCode {
    if format == Format::Json {
        let doc = json!({ "schema_version": SCHEMA_VERSION, "error": { "kind": e.kind(), "message": e.to_string() } });
        println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
    }
    eprintln!("error[{}]: {e}", e.kind());
    ExitCode::from(e.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, result) = match &cli.command {
        Command::Validate(a) => (a.format, cmd_validate(a)),
        Command::Entropy(a) => (a.common.format, cmd_entropy(a).map(|r| (r, None))),
        Command::Tee(a) => (a.common.format, cmd_tee(a).map(|r| (r, None))),
        Command::ScanCylinder(a) => (a.common.format, cmd_scan(a).map(|r| (r, None))),
        Command::Boundary(a) => (a.common.format, cmd_boundary(a)),
        Command::Groebner(a) => (a.format, cmd_groebner(a).map(|r| (r, None))),
    };
    match result {
        Ok((report, failure)) => emit(&report, format, failure),
        Err(e) => fail(e, format),
    }
}
