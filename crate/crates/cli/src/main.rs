use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use wreath_eulerian::eulerian::{q_bruteforce, q_cv_bruteforce, LhsSource};
use wreath_eulerian::qsym::XAlphabet;
use wreath_eulerian::report::VerificationReport;
use wreath_eulerian::specialize::joint_distribution;
use wreath_eulerian::suite::{run_criterion, run_identity, IdentityParams, CRITERIA, IDENTITIES};
use wreath_eulerian::vars::Vars;
use wreath_eulerian::wreath::{
    cycle_structure, statistics, type_b_stats, ColoredPermutation, CvCycleType, Enumeration,
};
use wreath_eulerian::{Error, Poly};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wreath",
    version,
    about = "Colored permutation statistics and colored Eulerian quasisymmetric functions"
)]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of one colored permutation, e.g. --perm "1^2,4^0,8^1".
    Stats {
        #[arg(long = "N", short = 'N')]
        colors: u32,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Statistics of every element of C_N wr S_n.
    Enumerate {
        #[arg(long = "N", short = 'N')]
        colors: u32,
        #[arg(long, short = 'n')]
        n: usize,
        /// Comma-separated subset of des,des_star,maj,exc,fix,col.
        #[arg(long)]
        stats: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Q_{n,j,alpha,beta} by enumeration.
    Qsym {
        #[arg(long = "N", short = 'N')]
        colors: u32,
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long, short = 'j')]
        j: usize,
        #[arg(long)]
        alpha: String,
        /// Color counts beta_1..beta_{N-1}; may be empty when N = 1.
        #[arg(long, default_value = "")]
        beta: String,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Q for one cv-cycle type, e.g. --cycles "3:1,0;2:0,0".
    QsymCv {
        #[arg(long = "N", short = 'N', default_value_t = 1)]
        colors: u32,
        #[arg(long)]
        cycles: String,
        #[arg(long, short = 'j')]
        j: usize,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// sum q^maj t^exc r^fix s^col (times p^des* with --with-p).
    Distribution {
        #[arg(long = "N", short = 'N')]
        colors: u32,
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long)]
        with_p: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check a named identity, or `all` for the acceptance suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    identity: String,
    #[arg(long = "N", short = 'N')]
    colors: Option<u32>,
    #[arg(long)]
    nmax: Option<usize>,
    /// Number of x variables (value bound for the bijection suites).
    #[arg(long)]
    vars: Option<usize>,
    #[arg(long)]
    zmax: Option<u32>,
    #[arg(long)]
    tmax: Option<u32>,
    #[arg(long)]
    qmax: Option<u32>,
    #[arg(long)]
    pmax: Option<u32>,
    /// Left-hand side source for the generating-function checks.
    #[arg(long, value_parser = ["oracle", "recurrence"])]
    lhs: Option<String>,
    /// Profile for `verify all`; only `desk` exists.
    #[arg(long, default_value = "desk", value_parser = ["desk"])]
    profile: String,
    /// Include elapsed times, which makes output vary between runs.
    #[arg(long)]
    timing: bool,
}

fn parse_list(text: &str) -> anyhow::Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .with_context(|| format!("bad number {s:?}"))
        })
        .collect()
}

fn print_poly(poly: &Poly, format: Format, out: &mut impl Write) -> anyhow::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(&poly.to_json())?)?,
        Format::Text => writeln!(out, "{poly}")?,
        Format::Csv => bail!(Error::InvalidInput(
            "polynomials print as json or text".into()
        )),
    }
    Ok(())
}

const STAT_NAMES: [&str; 6] = ["des", "des_star", "maj", "exc", "fix", "col"];

fn enumerate(
    colors: u32,
    n: usize,
    stats: Option<&str>,
    format: Format,
    out: &mut impl Write,
) -> anyhow::Result<()> {
    let chosen: Vec<&str> = match stats {
        Some(list) => {
            let v: Vec<&str> = list
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            if let Some(bad) = v.iter().find(|s| !STAT_NAMES.contains(s)) {
                bail!(Error::InvalidInput(format!(
                    "unknown statistic {bad:?}; expected {}",
                    STAT_NAMES.join(",")
                )));
            }
            STAT_NAMES
                .iter()
                .copied()
                .filter(|s| v.contains(s))
                .collect()
        }
        None => STAT_NAMES.to_vec(),
    };
    let en = Enumeration::new(n, colors)?;
    let mut header = vec!["word".to_string()];
    for s in &chosen {
        match *s {
            "fix" => header.extend((0..colors).map(|k| format!("fix_{k}"))),
            "col" => header.extend((1..colors).map(|k| format!("col_{k}"))),
            other => header.push(other.to_string()),
        }
    }
    let row = |pi: &ColoredPermutation| -> Vec<String> {
        let s = statistics(pi);
        let mut r = vec![pi.to_string()];
        for name in &chosen {
            match *name {
                "des" => r.push(s.des.to_string()),
                "des_star" => r.push(s.des_star.to_string()),
                "maj" => r.push(s.maj.to_string()),
                "exc" => r.push(s.exc.to_string()),
                "fix" => r.extend(s.fix.iter().map(|v| v.to_string())),
                _ => r.extend(s.col.iter().map(|v| v.to_string())),
            }
        }
        r
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&header)?;
            for pi in en.iter() {
                w.write_record(row(&pi))?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "{}", header.join("\t"))?;
            for pi in en.iter() {
                writeln!(out, "{}", row(&pi).join("\t"))?;
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = en
                .iter()
                .map(|pi| {
                    let r = row(&pi);
                    let mut obj = serde_json::Map::new();
                    obj.insert("word".into(), json!(r[0]));
                    for (h, v) in header.iter().zip(&r).skip(1) {
                        obj.insert(h.clone(), json!(v.parse::<u64>().unwrap()));
                    }
                    serde_json::Value::Object(obj)
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string(&rows)?)?;
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut impl Write) -> anyhow::Result<bool> {
    let finish = |r: VerificationReport| if args.timing { r } else { r.without_timing() };
    if args.identity == "all" {
        let mut all_ok = true;
        for id in CRITERIA {
            let mut outcome = run_criterion(id)?;
            if !args.timing {
                outcome = outcome.without_timing();
            }
            all_ok &= outcome.passed;
            writeln!(out, "{}", outcome.line())?;
        }
        return Ok(all_ok);
    }
    if !IDENTITIES.contains(&args.identity.as_str()) {
        bail!(Error::InvalidInput(format!(
            "unknown identity {:?}; expected all or one of {}",
            args.identity,
            IDENTITIES.join(", ")
        )));
    }
    let params = IdentityParams {
        colors: args.colors,
        n_max: args.nmax,
        m: args.vars,
        z: args.zmax,
        t: args.tmax,
        q: args.qmax,
        p: args.pmax,
        lhs: args.lhs.as_deref().map(|s| {
            if s == "oracle" {
                LhsSource::Oracle
            } else {
                LhsSource::Recurrence
            }
        }),
    };
    let report = finish(run_identity(&args.identity, &params)?);
    writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    Ok(report.is_ok())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!(Error::InvalidInput("--jobs must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match cli.command {
        Command::Stats { colors, perm } => {
            let pi = ColoredPermutation::parse(&perm, colors)?;
            let s = statistics(&pi);
            let cs = cycle_structure(&pi);
            let mut v = serde_json::to_value(&s)?;
            v["word"] = json!(pi.to_string());
            let cycles: String = cs
                .cycles
                .iter()
                .map(|c| {
                    format!(
                        "({})",
                        c.iter()
                            .map(|l| l.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                })
                .collect();
            v["cycles"] = json!(cycles);
            v["cv_type"] = json!(cs.cv_type.to_string());
            v["cycle_type"] = serde_json::to_value(&cs.cycle_type)?;
            if colors == 2 {
                v["type_b"] = serde_json::to_value(type_b_stats(&pi)?)?;
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)?;
        }
        Command::Enumerate {
            colors,
            n,
            stats,
            format,
        } => enumerate(colors, n, stats.as_deref(), format, &mut out)?,
        Command::Qsym {
            colors,
            n,
            j,
            alpha,
            beta,
            vars,
            format,
        } => {
            let (alpha, beta) = (parse_list(&alpha)?, parse_list(&beta)?);
            if alpha.len() != colors as usize || beta.len() + 1 != colors as usize {
                bail!(Error::InvalidInput(format!(
                    "expected {colors} entries in --alpha and {} in --beta",
                    colors.saturating_sub(1)
                )));
            }
            let q = q_bruteforce(n, j, &alpha, &beta, &XAlphabet::standalone(vars))?;
            print_poly(&q.poly, format, &mut out)?;
        }
        Command::QsymCv {
            colors,
            cycles,
            j,
            vars,
            format,
        } => {
            let cv = CvCycleType::parse(&cycles, colors)?;
            let q = q_cv_bruteforce(&cv, j, colors, &XAlphabet::standalone(vars))?;
            print_poly(&q.poly, format, &mut out)?;
        }
        Command::Distribution {
            colors,
            n,
            with_p,
            format,
        } => {
            let vars = Vars::new(colors, 0);
            print_poly(&joint_distribution(n, &vars, with_p)?, format, &mut out)?;
        }
        Command::Verify(args) => {
            let ok = verify(&args, &mut out)?;
            out.flush()?;
            return Ok(ok);
        }
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::ResourceGuard { .. }) => ExitCode::from(EXIT_GUARD),
                _ => ExitCode::from(EXIT_USAGE),
            }
        }
    }
}
