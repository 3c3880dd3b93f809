use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperbicycle::catalog::{self, AnyCode, Built, CatalogEntry};
use hyperbicycle::classical::{circulant, classical_params_with};
use hyperbicycle::construct::{
    generalized_bicycle, haah_code, hyperbicycle, hyperbicycle_noncss, noncss_bicycle, CssCode, NonCssCode,
    Provenance,
};
use hyperbicycle::distance::{css_distance, noncss_distance, DistanceOptions, SearchConfig};
use hyperbicycle::gf2::io::{read_alist, read_dense01, write_alist, write_dense01};
use hyperbicycle::layout::layout;
use hyperbicycle::poly::BinPoly;
use hyperbicycle::report::{analyze, AnalyzeOptions};
use hyperbicycle::spec_file::SpecFile;
use hyperbicycle::verify::{verify_entry, Status, VerifyTier};
use hyperbicycle::{BinMat, BinVec, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "hbc", version, about = "Build and analyze hyperbicycle and related quantum codes")]
struct Cli {
    /// Seed for every randomized search.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for the distance search (0 = all cores).
    #[arg(long, global = true, env = "HBC_WORKERS", default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write its check matrices.
    Construct(ConstructArgs),
    /// Full analysis report as JSON.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        skip_distance: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distance interval with witness.
    Distance {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        search: SearchArgs,
        /// Split the search at the sublattice boundary first.
        #[arg(long)]
        sublattice: bool,
        /// Write the witness as a dense01 vector.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Parameters of a classical code given by a check matrix or a circulant.
    Classical {
        /// dense01 or alist check matrix.
        #[arg(long, conflicts_with_all = ["poly", "n"])]
        h: Option<PathBuf>,
        /// Polynomial whose circulant is the check matrix.
        #[arg(long, requires = "n")]
        poly: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = hyperbicycle::classical::DEFAULT_ENUM_CAP)]
        enum_cap: usize,
    },
    /// Check the built-in example catalog.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = TierArg::Quick)]
        tier: TierArg,
        /// Read the catalog from a JSON file instead.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Only entries whose name contains this.
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// List the built-in example catalog.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Planar two-sublattice picture of a square-block hyperbicycle spec.
    Layout {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = LayoutFormat::Txt)]
        format: LayoutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write check matrices (dense01 and alist) and the spec of a code.
    Export {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dir: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum LayoutFormat {
    Txt,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    GeneralizedBicycle,
    NoncssBicycle,
    Haah,
    Hyperbicycle,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    f1: Option<String>,
    #[arg(long)]
    f2: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    variant: Option<usize>,
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Directory for the matrix files.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Input {
    /// Hyperbicycle spec JSON.
    #[arg(long, group = "src")]
    spec: Option<PathBuf>,
    /// Built-in catalog entry.
    #[arg(long = "catalog", group = "src")]
    entry: Option<String>,
    /// CSS X checks (dense01 or alist); needs --gz.
    #[arg(long, group = "src", requires = "gz")]
    gx: Option<PathBuf>,
    #[arg(long)]
    gz: Option<PathBuf>,
    /// Non-CSS check matrix (A|B).
    #[arg(long, group = "src")]
    h: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Information-set decoding iterations.
    #[arg(long, default_value_t = 2000)]
    distance_budget: usize,
    /// Upper bound on the enumerated weight.
    #[arg(long)]
    enum_weight_cap: Option<usize>,
}

impl SearchArgs {
    fn config(&self, seed: u64) -> SearchConfig {
        SearchConfig {
            seed,
            isd_iterations: self.distance_budget,
            enum_weight_cap: self.enum_weight_cap,
            ..SearchConfig::default()
        }
    }
}

fn read_matrix(path: &Path) -> Result<BinMat> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_alist = path.extension().is_some_and(|e| e == "alist");
    let m = if is_alist { read_alist(&text) } else { read_dense01(&text) };
    m.with_context(|| format!("parsing {}", path.display()))
}

fn read_spec(path: &Path) -> Result<SpecFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SpecFile::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn load(input: &Input) -> Result<Built> {
    if let Some(path) = &input.spec {
        let f = read_spec(path)?;
        let spec = f.to_spec()?;
        let code = if f.css {
            AnyCode::Css(hyperbicycle(&spec)?)
        } else {
            AnyCode::NonCss(hyperbicycle_noncss(&spec)?)
        };
        return Ok(Built { code, spec: Some(spec) });
    }
    if let Some(name) = &input.entry {
        let e = catalog::find(name).with_context(|| format!("no catalog entry named {name:?}"))?;
        return Ok(e.build()?);
    }
    if let (Some(gx), Some(gz)) = (&input.gx, &input.gz) {
        let code = CssCode::new(read_matrix(gx)?, read_matrix(gz)?, Provenance::new("file"))?;
        return Ok(Built {
            code: AnyCode::Css(code),
            spec: None,
        });
    }
    if let Some(h) = &input.h {
        let code = NonCssCode::new(read_matrix(h)?, Provenance::new("file"))?;
        return Ok(Built {
            code: AnyCode::NonCss(code),
            spec: None,
        });
    }
    bail!("give one of --spec, --catalog, --gx/--gz or --h")
}

fn write_code(dir: &Path, code: &AnyCode) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mats: Vec<(&str, &BinMat)> = match code {
        AnyCode::Css(c) => vec![("gx", &c.gx), ("gz", &c.gz)],
        AnyCode::NonCss(c) => vec![("h", &c.h)],
    };
    for (name, m) in mats {
        fs::write(dir.join(format!("{name}.dense01")), write_dense01(m))?;
        fs::write(dir.join(format!("{name}.alist")), write_alist(m))?;
    }
    Ok(())
}

fn poly_arg(s: &Option<String>, flag: &str) -> Result<BinPoly> {
    let s = s.as_deref().with_context(|| format!("{flag} is required"))?;
    Ok(s.parse()?)
}

fn construct(args: &ConstructArgs) -> Result<()> {
    let built = match args.family {
        Family::GeneralizedBicycle | Family::NoncssBicycle => {
            let (f1, f2) = (poly_arg(&args.f1, "--f1")?, poly_arg(&args.f2, "--f2")?);
            let n = args.n.context("--n is required")?;
            let code = if matches!(args.family, Family::GeneralizedBicycle) {
                AnyCode::Css(generalized_bicycle(&f1, &f2, n)?)
            } else {
                AnyCode::NonCss(noncss_bicycle(&f1, &f2, n)?)
            };
            Built { code, spec: None }
        }
        Family::Haah => {
            let v = args.variant.context("--variant is required")?;
            let l = args.l.context("--L is required")?;
            Built {
                code: AnyCode::Css(haah_code(v, l)?),
                spec: None,
            }
        }
        Family::Hyperbicycle => {
            let path = args.spec.as_ref().context("--spec is required")?;
            load(&Input {
                spec: Some(path.clone()),
                entry: None,
                gx: None,
                gz: None,
                h: None,
            })?
        }
    };
    // Construction already rejects non-commuting generators.
    println!("commutation: OK");
    println!("N = {}", built.code.n());
    println!("K = {} (from rank)", built.code.k());
    if let Some(dir) = &args.out {
        write_code(dir, &built.code)?;
        if let Some(spec) = &built.spec {
            let css = matches!(built.code, AnyCode::Css(_));
            fs::write(dir.join("spec.json"), SpecFile::from_spec(spec, css).to_json())?;
        }
        println!("wrote {}", dir.display());
    }
    Ok(())
}

fn witness_text(code: &AnyCode, spec_split: Option<usize>, kind: &str, support: &[usize], len: usize) -> String {
    let v = BinVec::from_support(len, support);
    let m = BinMat::from_rows(len, &[v]);
    let split = match (code, spec_split) {
        (AnyCode::Css(_), Some(s)) => format!("sublattices [0,{s}) and [{s},{len})"),
        (AnyCode::NonCss(_), _) => "interleaved (x_q, z_q) pairs, no sublattice split".into(),
        _ => "no sublattice split".into(),
    };
    format!("# {kind} logical of weight {}; {split}\n{}", support.len(), write_dense01(&m))
}

fn sublattice_split(built: &Built) -> Option<usize> {
    let spec = built.spec.as_ref()?;
    let (r1, n1, r2, _) = spec.dims();
    (r1 > 0).then_some(r2 * spec.c * n1)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let seed = cli.seed;
    match cli.cmd {
        Command::Construct(args) => construct(&args)?,
        Command::Analyze {
            input,
            search,
            skip_distance,
            out,
        } => {
            let built = load(&input)?;
            let mut opts = AnalyzeOptions::default();
            opts.distance.search = search.config(seed);
            opts.skip_distance = skip_distance;
            let rep = analyze(&built.code, built.spec.as_ref(), &opts)?;
            let json = rep.to_json();
            match out {
                Some(p) => fs::write(&p, json)?,
                None => println!("{json}"),
            }
            if !rep.ok() {
                for c in rep.checks.iter().filter(|c| !c.ok) {
                    eprintln!("check failed: {}", c.name);
                }
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Distance {
            input,
            search,
            sublattice,
            witness,
        } => {
            let built = load(&input)?;
            let split = sublattice_split(&built);
            let opts = DistanceOptions {
                search: search.config(seed),
                sublattice: if sublattice { split } else { None },
            };
            let r = match &built.code {
                AnyCode::Css(c) => css_distance(c, &opts),
                AnyCode::NonCss(c) => noncss_distance(c, &opts),
            };
            println!("{}", serde_json::to_string_pretty(&r)?);
            if let (Some(path), Some(w)) = (witness, &r.witness) {
                let len = match &built.code {
                    AnyCode::Css(c) => c.n(),
                    AnyCode::NonCss(c) => 2 * c.n(),
                };
                let kind = r.witness_type.as_deref().unwrap_or("");
                fs::write(&path, witness_text(&built.code, split, kind, w, len))?;
            }
        }
        Command::Classical { h, poly, n, enum_cap } => {
            let m = match (h, poly, n) {
                (Some(path), _, _) => read_matrix(&path)?,
                (None, Some(p), Some(n)) => circulant(n, &p.parse()?),
                _ => bail!("give --h FILE or --poly P --n N"),
            };
            let cfg = SearchConfig {
                seed,
                ..SearchConfig::default()
            };
            let p = classical_params_with(&m, enum_cap, &cfg);
            println!("{}", serde_json::to_string_pretty(&p)?);
        }
        Command::VerifyPaper {
            tier,
            catalog: path,
            only,
            json,
        } => {
            let entries: Vec<CatalogEntry> = match path {
                Some(p) => serde_json::from_str(&fs::read_to_string(&p)?)
                    .with_context(|| format!("parsing catalog {}", p.display()))?,
                None => catalog::catalog(),
            };
            let tier = match tier {
                TierArg::Quick => VerifyTier::Quick,
                TierArg::Full => VerifyTier::Full,
            };
            let mut unexpected = 0;
            let mut verdicts = Vec::new();
            if !json {
                println!("{:<8} {:<28} {:>12} {:>12} {:>10} {:>10}  anchor", "status", "entry", "expected", "computed", "exp D", "got D");
            }
            for e in entries.iter().filter(|e| only.as_ref().is_none_or(|o| e.name.contains(o.as_str()))) {
                let v = verify_entry(e, tier, seed);
                if v.status == Status::Fail {
                    unexpected += 1;
                }
                if !json {
                    let status = match v.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::KnownFail => "KNOWN",
                    };
                    let nk = |p: Option<(usize, usize)>| p.map_or("-".into(), |(n, k)| format!("[[{n},{k}]]"));
                    let exp_d = v.expected_d.map_or("-".into(), |d| match d {
                        catalog::ExpectedD::Exact { d } => d.to_string(),
                        catalog::ExpectedD::Bracket { lo, hi } => format!("[{lo},{hi}]"),
                        catalog::ExpectedD::AtMost { d } => format!("<={d}"),
                    });
                    let got_d = v.computed_d.map_or("-".into(), |i| format!("[{},{}]", i.lo, i.hi));
                    println!(
                        "{:<8} {:<28} {:>12} {:>12} {:>10} {:>10}  {}",
                        status,
                        v.name,
                        nk(Some(v.expected_nk)),
                        nk(v.computed_nk),
                        exp_d,
                        got_d,
                        v.anchor
                    );
                    if v.status != Status::Pass {
                        println!("         {}", v.detail);
                    }
                }
                verdicts.push(v);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&verdicts)?);
            } else {
                println!("{} entries, {} unexpected failures", verdicts.len(), unexpected);
            }
            if unexpected > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Catalog { json } => {
            let entries = catalog::catalog();
            if json {
                println!("{}", serde_json::to_string_pretty(&entries)?);
            } else {
                for e in entries {
                    println!("{:<28} [[{},{}]]  {}", e.name, e.n, e.k, e.anchor);
                }
            }
        }
        Command::Layout { input, format, out } => {
            let built = load(&input)?;
            let spec = built.spec.context("layout needs a hyperbicycle spec (--spec or --catalog)")?;
            let l = layout(&spec)?;
            let text = match format {
                LayoutFormat::Txt => l.to_txt(),
                LayoutFormat::Svg => l.to_svg(),
            };
            match out {
                Some(p) => fs::write(&p, text)?,
                None => print!("{text}"),
            }
        }
        Command::Export { input, dir } => {
            let built = load(&input)?;
            write_code(&dir, &built.code)?;
            if let Some(spec) = &built.spec {
                let css = matches!(built.code, AnyCode::Css(_));
                fs::write(dir.join("spec.json"), SpecFile::from_spec(spec, css).to_json())?;
            }
            println!("wrote {}", dir.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.workers > 0 {
        // Results do not depend on the worker count, only the speed does.
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global() {
            eprintln!("warning: could not size the worker pool: {e}");
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
