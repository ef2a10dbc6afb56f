//! Command-line front end over the exact kernel. Every subcommand is a
//! pure computation followed by one deterministic report; identical
//! invocations produce identical bytes, whatever `--jobs` says.
//!
//! Exit codes: 0 success/agreement, 1 mathematical disagreement,
//! 2 usage error, 3 resource cap exceeded.

pub mod parallel;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};

use detjets_core::complex::{
    enumerate_facets_families, second_order_complex, vertex_names, EnumerationCaps, VertexSet,
};
use detjets_core::groebner::{buchberger_completion, leading_ideal, CompletionCaps, GroebnerCheck};
use detjets_core::hilbert::{
    check_conjecture, closed_form_conca_herzog, closed_form_jets, hilbert_function_oracle,
    series_from_shelling, ConjectureError, HilbertSeries, JetClosedForm, OracleCaps,
};
use detjets_core::jets::{gamma_basis, jet_generators, jet_generators_labeled, JetIdealSpec};
use detjets_core::shelling::ShellingOrder;
use detjets_core::vars::VariableTable;

use report::{comma_join, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser)]
#[command(
    name = "detjets",
    about = "Jet ideals of determinantal varieties: generators, Groebner checks, facets, shellings, Hilbert series",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<String>,

    /// Permit the long-running cases (second-order basis work at
    /// n >= 6, the first-order 3x3 determinant pipeline, facet brute
    /// force at n >= 6).
    #[arg(long, global = true)]
    allow_slow: bool,

    /// Worker threads for the S-pair scan.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Cap: maximum completion basis size.
    #[arg(long, global = true, default_value_t = 10_000)]
    max_basis: usize,

    /// Cap: maximum degree of a completion element.
    #[arg(long, global = true, default_value_t = 128)]
    max_degree: u32,

    /// Cap: maximum S-pairs processed by completion.
    #[arg(long, global = true, default_value_t = 5_000_000)]
    max_pairs: u64,

    /// Cap: maximum vertex-universe size for facet enumeration.
    #[arg(long, global = true, default_value_t = 64)]
    max_universe: usize,

    /// Cap: maximum memoized states of the counting oracle.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    max_oracle_states: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Structured,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Structured => Format::Structured,
        }
    }
}

#[derive(Args)]
struct Shape {
    /// Matrix rows.
    #[arg(long)]
    m: u32,
    /// Matrix columns.
    #[arg(long)]
    n: u32,
    /// Minor size.
    #[arg(long)]
    r: u32,
    /// Jet order.
    #[arg(long)]
    k: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Emit ideal generators by truncated expansion of minors, or the
    /// explicit basis of the 2xn second-order case.
    Gen {
        /// Matrix rows (jet mode).
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Matrix columns.
        #[arg(long)]
        n: u32,
        /// Minor size (jet mode).
        #[arg(long, default_value_t = 2)]
        r: u32,
        /// Jet order (jet mode).
        #[arg(long, default_value_t = 2)]
        k: u32,
        /// Emit the explicit candidate basis instead of the raw
        /// expansion generators (forces m = r = k = 2).
        #[arg(long)]
        gamma: bool,
    },
    /// Complete the jet ideal generators and report the leading ideal;
    /// optionally verify the explicit basis against it.
    Groebner {
        #[command(flatten)]
        shape: Shape,
        /// Also check the explicit basis with Buchberger's criterion
        /// and compare leading ideals (needs m = r = k = 2).
        #[arg(long)]
        check_gamma: bool,
    },
    /// Facets of the second-order 2xn complex.
    Facets {
        /// Matrix columns.
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = FacetMode::Families)]
        mode: FacetMode,
    },
    /// Verify the star order is a shelling and report h-vectors.
    Shelling {
        /// Matrix columns.
        #[arg(long)]
        n: u32,
    },
    /// Hilbert series from a chosen source.
    Hilbert {
        #[arg(long, value_enum)]
        source: SeriesSource,
        /// Matrix rows (eq1, eq2, oracle).
        #[arg(long)]
        m: Option<u32>,
        /// Matrix columns.
        #[arg(long)]
        n: Option<u32>,
        /// Minor size (eq1, oracle).
        #[arg(long)]
        r: Option<u32>,
        /// Jet order (oracle).
        #[arg(long)]
        k: Option<u32>,
        /// Also expand the series through this degree (oracle: degree
        /// bound of the table, default 10).
        #[arg(long)]
        maxdeg: Option<u32>,
    },
    /// Compare the jet pipeline against the matching power of the base
    /// determinantal series.
    Conjecture {
        #[command(flatten)]
        shape: Shape,
        /// Comparison degree bound.
        #[arg(long, default_value_t = 8)]
        maxdeg: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FacetMode {
    Families,
    Brute,
    CrossCheck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesSource {
    Shelling,
    Eq1,
    Eq2,
    Eq3,
    Thm61,
    Oracle,
}

/// Everything a subcommand needs besides its own flags.
struct Ctx {
    format: Format,
    out: Option<String>,
    allow_slow: bool,
    jobs: usize,
    completion: CompletionCaps,
    enumeration: EnumerationCaps,
    oracle: OracleCaps,
}

enum Failure {
    Usage(String),
    Cap(String),
    /// A finished report that records a mathematical disagreement.
    Disagreement(Report, String),
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version go to stdout with success; real parse
            // errors exit as usage errors
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if cli.jobs == 0
        || cli.max_basis == 0
        || cli.max_degree == 0
        || cli.max_pairs == 0
        || cli.max_universe == 0
        || cli.max_oracle_states == 0
    {
        eprintln!("error: usage: caps and --jobs must be positive");
        return EXIT_USAGE;
    }
    let ctx = Ctx {
        format: cli.format.into(),
        out: cli.out,
        allow_slow: cli.allow_slow,
        jobs: cli.jobs,
        completion: CompletionCaps {
            max_basis: cli.max_basis,
            max_degree: cli.max_degree,
            max_pairs: cli.max_pairs,
        },
        enumeration: EnumerationCaps {
            max_universe: cli.max_universe,
            ..EnumerationCaps::default()
        },
        oracle: OracleCaps {
            max_states: cli.max_oracle_states,
        },
    };

    let outcome = match cli.command {
        Command::Gen { m, n, r, k, gamma } => cmd_gen(&ctx, m, n, r, k, gamma),
        Command::Groebner { shape, check_gamma } => cmd_groebner(&ctx, &shape, check_gamma),
        Command::Facets { n, mode } => cmd_facets(&ctx, n, mode),
        Command::Shelling { n } => cmd_shelling(&ctx, n),
        Command::Hilbert {
            source,
            m,
            n,
            r,
            k,
            maxdeg,
        } => cmd_hilbert(&ctx, source, m, n, r, k, maxdeg),
        Command::Conjecture { shape, maxdeg } => cmd_conjecture(&ctx, &shape, maxdeg),
    };

    match outcome {
        Ok(report) => {
            if let Err(e) = report.emit(ctx.out.as_deref()) {
                eprintln!("error: io: {e}");
                return EXIT_USAGE;
            }
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: usage: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: cap: {msg}");
            EXIT_CAP
        }
        Err(Failure::Disagreement(report, msg)) => {
            if let Err(e) = report.emit(ctx.out.as_deref()) {
                eprintln!("error: io: {e}");
                return EXIT_USAGE;
            }
            eprintln!("error: disagreement: {msg}");
            EXIT_DISAGREEMENT
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn cap(e: impl ToString) -> Failure {
    Failure::Cap(e.to_string())
}

/// Refuse designated long cases without --allow-slow.
fn slow_gate(ctx: &Ctx, what: &str, is_slow: bool) -> Result<(), Failure> {
    if is_slow && !ctx.allow_slow {
        return Err(Failure::Usage(format!(
            "{what} is a long-running case; pass --allow-slow to run it"
        )));
    }
    Ok(())
}

fn second_order_2xn_slow(m: u32, n: u32, r: u32, k: u32) -> bool {
    m == 2 && r == 2 && k == 2 && n >= 6
}

fn eq3_pipeline(m: u32, r: u32, k: u32) -> bool {
    m == 3 && r == 3 && k == 1
}

fn cmd_gen(ctx: &Ctx, m: u32, n: u32, r: u32, k: u32, gamma: bool) -> Result<Report, Failure> {
    let mut rep = Report::new(ctx.format);
    rep.push_detail("command", "gen");
    if gamma {
        if (m, r, k) != (2, 2, 2) {
            return Err(usage("--gamma fixes m = 2, r = 2, k = 2"));
        }
        let basis = gamma_basis(n).map_err(usage)?;
        let table = basis.order().table().clone();
        rep.push("mode", "gamma");
        rep.push("n", n);
        rep.push("count", basis.len());
        for (i, (family, index, poly)) in basis.members().into_iter().enumerate() {
            let shown = poly.display(&table);
            let idx = comma_join(index.iter());
            rep.push_line(
                format!("gen.{i}.family"),
                family,
                format!("{family}[{idx}] = {shown}"),
            );
            rep.push_detail(format!("gen.{i}.index"), &idx);
            rep.push_detail(format!("gen.{i}.poly"), format!("{shown}"));
        }
    } else {
        let spec = JetIdealSpec::new(m, n, r, k).map_err(usage)?;
        let table = spec.table();
        let gens = jet_generators_labeled(&spec);
        rep.push("mode", "jet");
        rep.push("m", m);
        rep.push("n", n);
        rep.push("r", r);
        rep.push("k", k);
        rep.push("count", gens.len());
        for (i, (label, poly)) in gens.iter().enumerate() {
            let shown = poly.display(&table);
            let rows = comma_join(label.rows.iter());
            let cols = comma_join(label.cols.iter());
            rep.push_line(
                format!("gen.{i}.rows"),
                &rows,
                format!(
                    "minor rows [{rows}] cols [{cols}] t^{}: {shown}",
                    label.t_degree
                ),
            );
            rep.push_detail(format!("gen.{i}.cols"), &cols);
            rep.push_detail(format!("gen.{i}.t"), label.t_degree);
            rep.push_detail(format!("gen.{i}.poly"), format!("{shown}"));
        }
    }
    rep.push("status", "ok");
    Ok(rep)
}

fn cmd_groebner(ctx: &Ctx, shape: &Shape, check_gamma: bool) -> Result<Report, Failure> {
    let spec = JetIdealSpec::new(shape.m, shape.n, shape.r, shape.k).map_err(usage)?;
    slow_gate(
        ctx,
        "the second-order basis work at n >= 6",
        second_order_2xn_slow(shape.m, shape.n, shape.r, shape.k),
    )?;
    slow_gate(
        ctx,
        "the first-order 3x3 determinant pipeline",
        eq3_pipeline(shape.m, shape.r, shape.k),
    )?;
    if check_gamma && (shape.m, shape.r, shape.k) != (2, 2, 2) {
        return Err(usage("--check-gamma needs m = 2, r = 2, k = 2"));
    }

    let gens = jet_generators(&spec);
    let mut rep = Report::new(ctx.format);
    rep.push_detail("command", "groebner");
    rep.push("m", shape.m);
    rep.push("n", shape.n);
    rep.push("r", shape.r);
    rep.push("k", shape.k);
    rep.push("generators", gens.len());

    let basis = buchberger_completion(&gens, &ctx.completion).map_err(cap)?;
    let ideal = leading_ideal(&basis);
    rep.push("basis_size", basis.len());
    rep.push("leading_ideal_size", ideal.len());

    if check_gamma {
        let gamma = gamma_basis(shape.n).map_err(usage)?;
        let set = gamma.generator_set();
        rep.push("gamma_size", set.len());
        match parallel::is_groebner_basis_jobs(&set, true, ctx.jobs) {
            GroebnerCheck::IsBasis => {
                rep.push("gamma_is_basis", "true");
            }
            GroebnerCheck::NotBasis { i, j, remainder } => {
                rep.push("gamma_is_basis", "false");
                rep.push("witness_pair", format!("{i},{j}"));
                rep.push(
                    "witness_remainder",
                    format!("{}", remainder.display(set.order.table())),
                );
                rep.push("status", "disagreement");
                return Err(Failure::Disagreement(
                    rep,
                    format!("pair ({i},{j}) does not reduce to zero"),
                ));
            }
        }
        let gamma_ideal = leading_ideal(&set);
        let equal = gamma_ideal == ideal;
        rep.push("leading_ideals_equal", equal);
        if !equal {
            rep.push("status", "disagreement");
            return Err(Failure::Disagreement(
                rep,
                String::from("completion and explicit basis disagree on the leading ideal"),
            ));
        }
    }
    rep.push("status", "ok");
    Ok(rep)
}

fn facet_lines(
    rep: &mut Report,
    complex: &detjets_core::complex::SimplicialComplexFacets,
    table: &VariableTable,
    facets: &[(String, String, VertexSet)],
) {
    for (i, (family, params, verts)) in facets.iter().enumerate() {
        let names = vertex_names(verts, complex, table).join(",");
        if family.is_empty() {
            rep.push_line(
                format!("facet.{i}.vertices"),
                &names,
                format!("facet {i}: {names}"),
            );
        } else {
            rep.push_line(
                format!("facet.{i}.family"),
                family,
                format!("{family}({params}): {names}"),
            );
            rep.push_detail(format!("facet.{i}.params"), params);
            rep.push_detail(format!("facet.{i}.vertices"), &names);
        }
    }
}

fn cmd_facets(ctx: &Ctx, n: u32, mode: FacetMode) -> Result<Report, Failure> {
    if n < 2 {
        return Err(usage("facets need n >= 2"));
    }
    slow_gate(
        ctx,
        "facet brute force at n >= 6",
        n >= 6 && mode != FacetMode::Families,
    )?;
    let complex = second_order_complex(n);
    let table = VariableTable::jet(2, n, 2);
    let mut rep = Report::new(ctx.format);
    rep.push_detail("command", "facets");
    rep.push("n", n);
    rep.push(
        "mode",
        match mode {
            FacetMode::Families => "families",
            FacetMode::Brute => "brute",
            FacetMode::CrossCheck => "cross-check",
        },
    );
    match mode {
        FacetMode::Families => {
            let fams = enumerate_facets_families(n);
            rep.push("count", fams.len());
            let rows: Vec<(String, String, VertexSet)> = fams
                .iter()
                .map(|t| {
                    (
                        t.family.tag().to_string(),
                        comma_join(t.params.iter()),
                        t.verts,
                    )
                })
                .collect();
            facet_lines(&mut rep, &complex, &table, &rows);
        }
        FacetMode::Brute => {
            let brute = complex
                .enumerate_facets_bruteforce(&ctx.enumeration)
                .map_err(cap)?;
            rep.push("count", brute.len());
            let rows: Vec<(String, String, VertexSet)> = brute
                .iter()
                .map(|v| (String::new(), String::new(), *v))
                .collect();
            facet_lines(&mut rep, &complex, &table, &rows);
        }
        FacetMode::CrossCheck => {
            let fams = enumerate_facets_families(n);
            let brute = complex
                .enumerate_facets_bruteforce(&ctx.enumeration)
                .map_err(cap)?;
            let mut from_fams: Vec<VertexSet> = fams.iter().map(|t| t.verts).collect();
            from_fams.sort_unstable();
            let disjoint = {
                let before = from_fams.len();
                from_fams.dedup();
                before == from_fams.len()
            };
            let equal = from_fams == brute;
            rep.push("families", fams.len());
            rep.push("brute", brute.len());
            rep.push("disjoint", disjoint);
            rep.push("equal", equal);
            rep.push("facet_size", brute.first().map(VertexSet::len).unwrap_or(0));
            if !(equal && disjoint) {
                rep.push("status", "disagreement");
                return Err(Failure::Disagreement(
                    rep,
                    String::from("family enumeration does not match brute force"),
                ));
            }
        }
    }
    rep.push("status", "ok");
    Ok(rep)
}

fn cmd_shelling(ctx: &Ctx, n: u32) -> Result<Report, Failure> {
    if n < 2 {
        return Err(usage("shelling needs n >= 2"));
    }
    let order = ShellingOrder::second_order(n);
    let mut rep = Report::new(ctx.format);
    rep.push_detail("command", "shelling");
    rep.push("n", n);
    rep.push("facets", order.len());
    match order.verify() {
        Ok(verified) => {
            rep.push("verdict", "valid");
            rep.push("facet_size", verified.facet_size());
            rep.push("h", comma_join(verified.h_vector().0.iter()));
            for (family, row) in verified.h_by_family() {
                rep.push(format!("h.{family}"), comma_join(row.0.iter()));
            }
            rep.push("status", "ok");
            Ok(rep)
        }
        Err(e) => {
            rep.push("verdict", "invalid");
            rep.push("witness", e.to_string());
            rep.push("status", "disagreement");
            Err(Failure::Disagreement(rep, e.to_string()))
        }
    }
}

fn series_lines(rep: &mut Report, series: &HilbertSeries, maxdeg: Option<u32>) {
    rep.push("numerator", comma_join(series.numerator().iter()));
    rep.push("denom_pow", series.denom_pow());
    rep.push("shift", series.shift());
    rep.push_line("series", series, format!("series = {series}"));
    if let Some(d) = maxdeg {
        rep.push("maxdeg", d);
        rep.push("values", comma_join(series.taylor(d).iter()));
    }
}

fn need(name: &str, v: Option<u32>) -> Result<u32, Failure> {
    v.ok_or_else(|| usage(format!("--{name} is required for this source")))
}

fn forbid(name: &str, v: Option<u32>, source: &str) -> Result<(), Failure> {
    if v.is_some() {
        return Err(usage(format!("--{name} does not apply to source {source}")));
    }
    Ok(())
}

fn cmd_hilbert(
    ctx: &Ctx,
    source: SeriesSource,
    m: Option<u32>,
    n: Option<u32>,
    r: Option<u32>,
    k: Option<u32>,
    maxdeg: Option<u32>,
) -> Result<Report, Failure> {
    let mut rep = Report::new(ctx.format);
    rep.push_detail("command", "hilbert");
    match source {
        SeriesSource::Shelling => {
            forbid("m", m, "shelling")?;
            forbid("r", r, "shelling")?;
            forbid("k", k, "shelling")?;
            let n = need("n", n)?;
            if n < 2 {
                return Err(usage("shelling source needs n >= 2"));
            }
            let verified = ShellingOrder::second_order(n)
                .verify()
                .map_err(|e| Failure::Disagreement(Report::new(ctx.format), e.to_string()))?;
            let series = series_from_shelling(&verified.h_vector(), verified.facet_size());
            rep.push("source", "shelling");
            rep.push("n", n);
            series_lines(&mut rep, &series, maxdeg);
        }
        SeriesSource::Eq1 => {
            forbid("k", k, "eq1")?;
            let m = need("m", m)?;
            let n = need("n", n)?;
            let minor = need("r", r)?;
            if minor == 0 {
                return Err(usage("minor size must be at least 1"));
            }
            let series = closed_form_conca_herzog(m, n, minor - 1).map_err(usage)?;
            rep.push("source", "eq1");
            rep.push("m", m);
            rep.push("n", n);
            rep.push("r", minor);
            series_lines(&mut rep, &series, maxdeg);
        }
        SeriesSource::Eq2 => {
            forbid("r", r, "eq2")?;
            forbid("k", k, "eq2")?;
            let m = need("m", m)?;
            let n = need("n", n)?;
            let series = closed_form_jets(JetClosedForm::Eq2 { m, n }).map_err(usage)?;
            rep.push("source", "eq2");
            rep.push("m", m);
            rep.push("n", n);
            series_lines(&mut rep, &series, maxdeg);
        }
        SeriesSource::Eq3 => {
            forbid("m", m, "eq3")?;
            forbid("r", r, "eq3")?;
            forbid("k", k, "eq3")?;
            let n = need("n", n)?;
            let series = closed_form_jets(JetClosedForm::Eq3 { n }).map_err(usage)?;
            rep.push("source", "eq3");
            rep.push("n", n);
            series_lines(&mut rep, &series, maxdeg);
        }
        SeriesSource::Thm61 => {
            forbid("m", m, "thm61")?;
            forbid("r", r, "thm61")?;
            forbid("k", k, "thm61")?;
            let n = need("n", n)?;
            let series = closed_form_jets(JetClosedForm::Thm61 { n }).map_err(usage)?;
            rep.push("source", "thm61");
            rep.push("n", n);
            series_lines(&mut rep, &series, maxdeg);
        }
        SeriesSource::Oracle => {
            let m = need("m", m)?;
            let n = need("n", n)?;
            let minor = need("r", r)?;
            let k = need("k", k)?;
            let spec = JetIdealSpec::new(m, n, minor, k).map_err(usage)?;
            slow_gate(
                ctx,
                "the second-order basis work at n >= 6",
                second_order_2xn_slow(m, n, minor, k),
            )?;
            slow_gate(
                ctx,
                "the first-order 3x3 determinant pipeline",
                eq3_pipeline(m, minor, k),
            )?;
            let d = maxdeg.unwrap_or(10);
            let basis =
                buchberger_completion(&jet_generators(&spec), &ctx.completion).map_err(cap)?;
            let ideal = leading_ideal(&basis);
            let hf =
                hilbert_function_oracle(&ideal, spec.table().len(), d, &ctx.oracle).map_err(cap)?;
            rep.push("source", "oracle");
            rep.push("m", m);
            rep.push("n", n);
            rep.push("r", minor);
            rep.push("k", k);
            rep.push("maxdeg", d);
            rep.push("basis_size", basis.len());
            rep.push("leading_ideal_size", ideal.len());
            rep.push("values", comma_join(hf.values.iter()));
        }
    }
    rep.push("status", "ok");
    Ok(rep)
}

fn cmd_conjecture(ctx: &Ctx, shape: &Shape, maxdeg: u32) -> Result<Report, Failure> {
    slow_gate(
        ctx,
        "the second-order basis work at n >= 6",
        second_order_2xn_slow(shape.m, shape.n, shape.r, shape.k),
    )?;
    slow_gate(
        ctx,
        "the first-order 3x3 determinant pipeline",
        eq3_pipeline(shape.m, shape.r, shape.k),
    )?;
    let report = check_conjecture(
        shape.m,
        shape.n,
        shape.r,
        shape.k,
        maxdeg,
        &ctx.completion,
        &ctx.oracle,
    )
    .map_err(|e| match e {
        ConjectureError::Invalid(e) => usage(e),
        ConjectureError::Params(e) => usage(e),
        ConjectureError::Completion(e) => cap(e),
        ConjectureError::Oracle(e) => cap(e),
    })?;

    let mut rep = Report::new(ctx.format);
    rep.push_detail("command", "conjecture");
    rep.push("m", shape.m);
    rep.push("n", shape.n);
    rep.push("r", shape.r);
    rep.push("k", shape.k);
    rep.push("maxdeg", maxdeg);
    rep.push("label", report.status);
    rep.push("basis_size", report.basis_size);
    rep.push("leading_ideal_size", report.leading_ideal_size);
    for (d, lhs, rhs) in &report.rows {
        // pipeline counts are unsigned; the power side is equal exactly
        // when the decimal renderings coincide
        let equal = if lhs.to_string() == rhs.to_string() {
            "equal"
        } else {
            "differs"
        };
        rep.push_line(
            format!("degree.{d}"),
            format!("{lhs},{rhs},{equal}"),
            format!("degree {d}: pipeline {lhs} vs power {rhs} ({equal})"),
        );
    }
    match report.first_divergence {
        None => {
            rep.push("agree", "true");
            rep.push("status", "ok");
            Ok(rep)
        }
        Some(d) => {
            rep.push("agree", "false");
            rep.push("first_divergence", d);
            rep.push("status", "disagreement");
            Err(Failure::Disagreement(
                rep,
                format!("first divergence at degree {d}"),
            ))
        }
    }
}
