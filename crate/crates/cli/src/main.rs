use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use scb_core::ccm::{Analysis, Verdict};
use scb_core::claims;
use scb_core::code::ScbSpec;
use scb_core::decoder::{monte_carlo, write_profiles_csv, QFormat, Quantization, TrialConfig};
use scb_core::gfp::primes_in;
use scb_core::oracle::{enumerate_class, records, write_records_csv, OracleOptions};
use scb_core::search::{
    find_rsfs, label_list, normalize_rsf, scan_rsf, tanner_absorbing_check, verdict_name,
    RsfPolicy, TannerSpec,
};
use scb_core::topology::{by_name, catalog, Topology};

/// Design and analysis of separable circulant-based LDPC codes.
#[derive(Parser, Debug)]
#[command(name = "scb", version, args_override_self = true)]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Plain `key = value` file supplying defaults for command flags.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CodeArgs {
    /// Circulant size (prime).
    #[arg(long)]
    p: u32,
    /// Row labels, comma separated.
    #[arg(long, default_value = "0,1,2,3,4")]
    rsf: String,
    /// Column labels, comma separated (default: all of 0..p).
    #[arg(long)]
    cols: Option<String>,
}

impl CodeArgs {
    fn spec(&self) -> Result<ScbSpec, String> {
        let rows = parse_list(&self.rsf)?;
        let cols = match &self.cols {
            Some(c) => parse_list(c)?,
            None => (0..self.p).collect(),
        };
        ScbSpec::new(self.p, rows, cols).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the parity-check matrix, report n, k and girth, optionally write an alist file.
    Build {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Existence verdicts for catalog topologies in one code.
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        /// Topology names, comma separated (default: whole catalog).
        #[arg(long)]
        topology: Option<String>,
        /// Also run the brute-force oracle when p is at most this.
        #[arg(long, default_value_t = 23)]
        oracle_max_p: u32,
    },
    /// Scan primes for one row selection, or list clean row selections at one prime.
    Search {
        #[command(subcommand)]
        mode: SearchMode,
    },
    /// Absorbing-set check for a Tanner-style quasi-cyclic code.
    Tanner {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        row_gen: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        col_gen: u32,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        topology: Option<String>,
    },
    /// Brute-force enumeration of one (a, b) class.
    Enumerate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Search every root instead of one offset per column group.
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long, default_value_t = 2_000_000_000)]
        budget: u64,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Monte Carlo error profiling over BPSK/AWGN.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        /// Eb/N0 points in dB, comma separated.
        #[arg(long)]
        snr: String,
        #[arg(long, default_value_t = 100)]
        errors: u64,
        #[arg(long, default_value_t = 100_000)]
        frames: u64,
        #[arg(long, default_value_t = 200)]
        iterations: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Unquantized messages instead of Q4.2.
        #[arg(long)]
        float: bool,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Re-check the pinned published results.
    VerifyPaper {
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SearchMode {
    /// Verdicts of one row selection over a prime range.
    Scan {
        #[arg(long)]
        rsf: String,
        /// `lo..hi` (inclusive) or a comma-separated list.
        #[arg(long)]
        primes: String,
        #[arg(long)]
        topology: Option<String>,
        /// Map the selection to one containing 0 and 1 instead of rejecting it.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Every `[0, 1, a, b, c]` eliminating the topologies at one prime.
    Find {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        topology: Option<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Command, effective arguments and outputs, written at the top of every artifact.
struct RunManifest {
    args: Vec<String>,
    extra: Vec<String>,
}

impl RunManifest {
    fn lines(&self, outputs: &[&Path]) -> Vec<String> {
        let mut v = vec![
            format!("tool: scb {}", env!("CARGO_PKG_VERSION")),
            format!("command: {}", self.args.join(" ")),
        ];
        v.extend(self.extra.iter().cloned());
        for o in outputs {
            v.push(format!("output: {}", o.display()));
        }
        v
    }
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<scb_core::Error> for Failure {
    fn from(e: scb_core::Error) -> Self {
        match e {
            scb_core::Error::Budget { .. } | scb_core::Error::Io(_) | scb_core::Error::Csv(_) => {
                Failure::Run(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<bool, Failure>;

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| format!("not a number: {t}")))
        .collect()
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("not a number: {t}")))
        .collect()
}

fn parse_primes(s: &str) -> Result<Vec<u32>, String> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| format!("bad range {s}"))?;
        let hi = hi.trim().parse().map_err(|_| format!("bad range {s}"))?;
        return Ok(primes_in(lo, hi));
    }
    parse_list(s)
}

fn topologies(names: &Option<String>) -> Result<Vec<Topology>, Failure> {
    match names {
        None => Ok(catalog()),
        Some(s) => s
            .split(',')
            .map(|n| by_name(n.trim()).map_err(Failure::from))
            .collect(),
    }
}

fn analyses(ts: &[Topology]) -> Result<Vec<Analysis>, Failure> {
    Ok(ts.iter().map(Analysis::new).collect::<Result<Vec<_>, _>>()?)
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    Ok(BufWriter::new(File::create(path)?))
}

fn write_header(w: &mut impl Write, lines: &[String]) -> Result<(), Failure> {
    for l in lines {
        writeln!(w, "# {l}")?;
    }
    Ok(())
}

fn cmd_build(code: &CodeArgs, out: &Option<PathBuf>) -> Outcome {
    let spec = code.spec()?;
    let h = spec.build();
    let girth = spec.girth(&h);
    println!(
        "n = {}, m = {}, k = {}, girth = {}",
        h.cols(),
        h.rows(),
        h.dimension(),
        girth.map_or("none".into(), |g| g.to_string())
    );
    if let Some(path) = out {
        let mut w = create(path)?;
        h.write_alist(&mut w)?;
        w.flush()?;
        println!("wrote {}", path.display());
    }
    Ok(true)
}

fn cmd_analyze(code: &CodeArgs, names: &Option<String>, oracle_max_p: u32) -> Outcome {
    let spec = code.spec()?;
    let ts = topologies(names)?;
    let use_oracle = spec.p() <= oracle_max_p;
    let h = use_oracle.then(|| spec.build());
    let mut clean = true;
    println!("topology,verdict,labelings_tested,rank_deficient,oracle_instances");
    for t in &ts {
        let e = Analysis::new(t)?.exists_in_code(&spec)?;
        let mut verdict = e.verdict();
        let mut oracle = String::from("-");
        if let Some(h) = &h {
            let all = enumerate_class(&spec, t.a(), t.b(), OracleOptions::default())?;
            let mut n = 0;
            for s in &all {
                if scb_core::oracle::match_topology(s, h, std::slice::from_ref(t))?.is_some() {
                    n += 1;
                }
            }
            oracle = n.to_string();
            verdict = if n > 0 { Verdict::Present } else { Verdict::Absent };
        }
        clean &= verdict == Verdict::Absent;
        println!(
            "{},{},{},{},{}",
            t.name(),
            verdict_name(verdict),
            e.labelings_tested,
            e.rank_deficient,
            oracle
        );
    }
    Ok(clean)
}

fn cmd_scan(
    manifest: &RunManifest,
    rsf: &str,
    primes: &str,
    names: &Option<String>,
    normalize: bool,
    csv: &Option<PathBuf>,
    jobs: usize,
) -> Outcome {
    let rsf = parse_list(rsf)?;
    let primes = parse_primes(primes)?;
    let policy = if normalize {
        RsfPolicy::Normalize
    } else {
        RsfPolicy::Reject
    };
    if let Some(&p) = primes.first() {
        normalize_rsf(&rsf, p, policy)?;
    }
    let ts = topologies(names)?;
    let an = analyses(&ts)?;
    let mut sink: Box<dyn Write> = match csv {
        Some(path) => {
            let mut w = create(path)?;
            write_header(&mut w, &manifest.lines(&[path]))?;
            Box::new(w)
        }
        None => Box::new(std::io::stdout()),
    };
    writeln!(sink, "rsf,prime,topology,verdict")?;
    let mut clean = true;
    for chunk in primes.chunks(jobs.max(1)) {
        let report = scan_rsf(&rsf, chunk, &an, policy)?;
        for (p, verdicts) in &report.rows {
            for (t, v) in report.topologies.iter().zip(verdicts) {
                clean &= *v == Verdict::Absent;
                writeln!(sink, "{},{},{},{}", label_list(&rsf), p, t, verdict_name(*v))?;
            }
        }
        sink.flush()?;
    }
    Ok(clean)
}

fn cmd_find(manifest: &RunManifest, p: u32, names: &Option<String>, csv: &Option<PathBuf>) -> Outcome {
    let ts = topologies(names)?;
    let found = find_rsfs(p, &analyses(&ts)?)?;
    let mut sink: Box<dyn Write> = match csv {
        Some(path) => {
            let mut w = create(path)?;
            write_header(&mut w, &manifest.lines(&[path]))?;
            Box::new(w)
        }
        None => Box::new(std::io::stdout()),
    };
    writeln!(sink, "prime,rsf")?;
    for r in &found {
        writeln!(sink, "{},{}", p, label_list(r))?;
    }
    sink.flush()?;
    eprintln!("{} clean row selections at p = {p}", found.len());
    Ok(found.is_empty())
}

fn cmd_tanner(p: u32, row_gen: u32, r: usize, col_gen: u32, c: usize, names: &Option<String>) -> Outcome {
    let t = TannerSpec::new(p, row_gen, r, col_gen, c)?;
    println!(
        "rows {}, columns {}",
        label_list(t.row_exponents()),
        label_list(t.column_exponents())
    );
    let mut clean = true;
    for top in topologies(names)? {
        let exists = tanner_absorbing_check(&t, &Analysis::new(&top)?)?;
        clean &= !exists;
        println!("{},{}", top.name(), if exists { "possible" } else { "eliminated" });
    }
    Ok(clean)
}

fn cmd_enumerate(
    manifest: &RunManifest,
    code: &CodeArgs,
    a: usize,
    b: usize,
    no_symmetry: bool,
    budget: u64,
    csv: &Option<PathBuf>,
) -> Outcome {
    let spec = code.spec()?;
    let opts = OracleOptions {
        use_symmetry: !no_symmetry,
        budget,
    };
    let supports = enumerate_class(&spec, a, b, opts)?;
    let recs = records(&spec, &supports, &catalog())?;
    let mut by_shape = std::collections::BTreeMap::<String, usize>::new();
    for r in &recs {
        *by_shape
            .entry(r.topology.clone().unwrap_or_else(|| "other".into()))
            .or_default() += 1;
    }
    println!("({a},{b}) supports: {}", recs.len());
    for (k, v) in &by_shape {
        println!("  {k}: {v}");
    }
    if let Some(path) = csv {
        let w = create(path)?;
        write_records_csv(w, &manifest.lines(&[path]), &recs)?;
    }
    Ok(recs.is_empty())
}

#[allow(clippy::too_many_arguments)]
fn cmd_simulate(
    manifest: &RunManifest,
    code: &CodeArgs,
    snr: &str,
    errors: u64,
    frames: u64,
    iterations: usize,
    seed: u64,
    float: bool,
    csv: &Option<PathBuf>,
) -> Outcome {
    let spec = code.spec()?;
    let h = spec.build();
    let rate = h.dimension() as f64 / h.cols() as f64;
    let snrs: Vec<Option<f64>> = parse_f64_list(snr)?.into_iter().map(Some).collect();
    let cfg = TrialConfig {
        max_iterations: iterations,
        target_errors: errors,
        max_frames: frames,
        seed,
        quantization: if float {
            Quantization::Float
        } else {
            Quantization::Fixed(QFormat::default())
        },
        ..Default::default()
    };
    let profiles = monte_carlo(&h, rate, &snrs, &cfg)?;
    let mut header = manifest.lines(&csv.iter().map(PathBuf::as_path).collect::<Vec<_>>());
    header.push(format!("seed: {seed}"));
    header.push(format!("quantization: {}", cfg.quantization.describe()));
    header.push(format!("max_iterations: {iterations}"));
    header.push(format!("snr: Eb/N0 dB, rate {rate:.6} (k = {}, n = {})", h.dimension(), h.cols()));
    match csv {
        Some(path) => write_profiles_csv(create(path)?, &header, &profiles)?,
        None => write_profiles_csv(std::io::stdout(), &header, &profiles)?,
    }
    Ok(profiles.iter().all(|p| p.n_collected == 0))
}

fn cmd_verify(manifest: &RunManifest, csv: &Option<PathBuf>) -> Outcome {
    let results = claims::run_suite()?;
    let mut all = true;
    for c in &results {
        all &= c.passed;
        println!("{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.id, c.statement);
        println!("     {}", c.detail);
    }
    if let Some(path) = csv {
        let mut w = create(path)?;
        write_header(&mut w, &manifest.lines(&[path]))?;
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["id", "passed", "statement", "detail"])
            .map_err(|e| Failure::Run(e.to_string()))?;
        for c in &results {
            out.write_record([c.id, if c.passed { "true" } else { "false" }, c.statement, &c.detail])
                .map_err(|e| Failure::Run(e.to_string()))?;
        }
        out.flush()?;
    }
    println!(
        "{} of {} claims hold",
        results.iter().filter(|c| c.passed).count(),
        results.len()
    );
    Ok(all)
}

/// Expands `--config` into flags placed right after the subcommand path, so
/// that flags given on the command line take precedence.
fn expand_config(args: Vec<String>) -> Result<Vec<String>, String> {
    let Some(pos) = args.iter().position(|a| a == "--config" || a.starts_with("--config=")) else {
        return Ok(args);
    };
    let path = match args[pos].split_once('=') {
        Some((_, p)) => p.to_string(),
        None => args.get(pos + 1).cloned().ok_or("--config needs a file")?,
    };
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))?;
    let mut flags = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{path}:{}: expected key = value", n + 1))?;
        let k = k.trim().replace('_', "-");
        match v.trim() {
            "true" => flags.push(format!("--{k}")),
            "false" => {}
            v => {
                flags.push(format!("--{k}"));
                flags.push(v.to_string());
            }
        }
    }
    let subcommands = ["build", "analyze", "search", "scan", "find", "tanner", "enumerate", "simulate", "verify-paper"];
    let mut insert = 1;
    for (i, a) in args.iter().enumerate().skip(1) {
        if subcommands.contains(&a.as_str()) {
            insert = i + 1;
        }
    }
    let mut out = args;
    let tail = out.split_off(insert);
    out.extend(flags);
    out.extend(tail);
    Ok(out)
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().collect();
    let args = match expand_config(raw) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let jobs = cli.jobs.unwrap_or_else(rayon::current_num_threads);
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let manifest = RunManifest {
        args: args[1..].to_vec(),
        extra: vec![format!("jobs: {jobs}")],
    };
    let result = match &cli.command {
        Command::Build { code, out } => cmd_build(code, out),
        Command::Analyze {
            code,
            topology,
            oracle_max_p,
        } => cmd_analyze(code, topology, *oracle_max_p),
        Command::Search { mode } => match mode {
            SearchMode::Scan {
                rsf,
                primes,
                topology,
                normalize,
                csv,
            } => cmd_scan(&manifest, rsf, primes, topology, *normalize, csv, jobs),
            SearchMode::Find { p, topology, csv } => cmd_find(&manifest, *p, topology, csv),
        },
        Command::Tanner {
            p,
            row_gen,
            r,
            col_gen,
            c,
            topology,
        } => cmd_tanner(*p, *row_gen, *r, *col_gen, *c, topology),
        Command::Enumerate {
            code,
            a,
            b,
            no_symmetry,
            budget,
            csv,
        } => cmd_enumerate(&manifest, code, *a, *b, *no_symmetry, *budget, csv),
        Command::Simulate {
            code,
            snr,
            errors,
            frames,
            iterations,
            seed,
            float,
            csv,
        } => cmd_simulate(
            &manifest,
            code,
            snr,
            *errors,
            *frames,
            *iterations,
            *seed,
            *float,
            csv,
        ),
        Command::VerifyPaper { csv } => cmd_verify(&manifest, csv),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
