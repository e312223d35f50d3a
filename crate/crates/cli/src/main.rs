//! cornerwalk: exact enumeration of plane-walk shuffles, corner statistics,
//! and verification scans.
//!
//! Exit codes: 0 on success with every verdict confirmed; 1 on usage or
//! input errors; 2 when any report is a counterexample or a discrepancy.

mod emit;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use cornerwalk::bijection::{coloring_encode, flip, word_to_shuffle, ToggleClass};
use cornerwalk::binary::BinaryWord;
use cornerwalk::enumerate::{
    abs_signed_gf, distribution, gf_abs_signed, gf_peak_shuffle_class, projection_stat_gfs,
    shuffles, WalkDomain,
};
use cornerwalk::path::{ClassParams, HPath, Shuffle, VPath};
use cornerwalk::stats::{signed_peak_count, Statistic};
use cornerwalk::verify::{run_verify, scan, ScanCheck, ScanOptions, VerdictReport};

use emit::Format;

#[derive(Parser)]
#[command(
    name = "cornerwalk",
    version,
    about = "Exact enumeration of plane-walk shuffles and their corner statistics",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Write output to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Worker threads for grid scans (default: all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Tally a statistic over every interleaving of a word pair
    Enumerate {
        /// Vertical word over N/S
        #[arg(long)]
        vpath: String,
        /// Horizontal word over E/W
        #[arg(long)]
        hpath: String,
        #[arg(long, value_enum, default_value_t = StatArg::SignedPeak)]
        stat: StatArg,
    },
    /// Generating functions: closed-form by class, or enumerated over a
    /// shuffle class or a projection walk set
    Gf(GfArgs),
    /// Apply a structural map to explicit inputs
    Bijection {
        #[command(subcommand)]
        op: BijectionOp,
    },
    /// Re-derive a proven identity by brute force
    Verify {
        /// Check id (see README for the list)
        id: String,
        /// Grid bound
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Scan a parameter grid for conjecture counterexamples
    Scan {
        /// Comma-separated check ids (default: conjmain, conjx1equal,
        /// conjbuild, p2, conj10)
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Grid bound for the class entries
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Quarter)]
        mode: ModeArg,
        /// Largest loop length for conj10 (default: 2*max + 4; must be even)
        #[arg(long, value_name = "LEN")]
        maxlen: Option<usize>,
    },
}

#[derive(Args)]
struct GfArgs {
    /// Class multiplicities r,l,u,d for the closed form
    #[arg(long, value_name = "R,L,U,D")]
    class: Option<String>,
    /// Vertical word over N/S
    #[arg(long)]
    vpath: Option<String>,
    /// Horizontal word over E/W (fixes the whole word pair)
    #[arg(long)]
    hpath: Option<String>,
    /// East,West counts for a projection walk set with free horizontal
    /// arrangement
    #[arg(long, value_name = "R,L")]
    hcount: Option<String>,
    #[arg(long, value_enum, default_value_t = StatArg::AbsSignedPeak)]
    stat: StatArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Quarter)]
    mode: ModeArg,
}

#[derive(Subcommand)]
enum BijectionOp {
    /// Reverse every outward run of a walk
    Flip {
        #[arg(long)]
        word: String,
    },
    /// Swap the values of one odd-indexed pair of a binary word
    Toggle {
        #[arg(long)]
        bits: String,
        /// Pair index (0-based)
        #[arg(long)]
        index: usize,
    },
    /// Blue-red coloring of a walk, with the decoded round trip
    Coloring {
        #[arg(long)]
        word: String,
    },
    /// Map a binary word onto a shuffle of the given loops
    WordToShuffle {
        #[arg(long)]
        bits: String,
        #[arg(long)]
        vpath: String,
        #[arg(long)]
        hpath: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StatArg {
    Peak,
    SignedPeak,
    AbsSignedPeak,
    InVert,
    ShiftedInVert,
}

impl From<StatArg> for Statistic {
    fn from(s: StatArg) -> Statistic {
        match s {
            StatArg::Peak => Statistic::Peak,
            StatArg::SignedPeak => Statistic::SignedPeak,
            StatArg::AbsSignedPeak => Statistic::AbsSignedPeak,
            StatArg::InVert => Statistic::InVert,
            StatArg::ShiftedInVert => Statistic::ShiftedInVert,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Quarter,
    Planar,
}

impl From<ModeArg> for WalkDomain {
    fn from(m: ModeArg) -> WalkDomain {
        match m {
            ModeArg::Quarter => WalkDomain::QuarterPlanar,
            ModeArg::Planar => WalkDomain::Planar,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                print!("{e}");
                std::process::exit(0);
            }
            _ => {
                eprint!("{e}");
                std::process::exit(1);
            }
        },
    };
    let format = cli.format.into();
    let out = cli.out.clone();
    match execute(cli, format) {
        Ok((text, code)) => {
            if let Err(e) = write_output(&text, &out) {
                eprintln!("error: {e}");
                std::process::exit(1);
            }
            std::process::exit(code);
        }
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(1);
        }
    }
}

fn write_output(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn exit_code_for(reports: &[VerdictReport]) -> i32 {
    if reports.iter().all(|r| r.is_clean()) {
        0
    } else {
        2
    }
}

fn parse_vpath(text: &str) -> Result<VPath, String> {
    VPath::parse(text).map_err(|e| format!("--vpath {text:?}: {e}"))
}

fn parse_hpath(text: &str) -> Result<HPath, String> {
    HPath::parse(text).map_err(|e| format!("--hpath {text:?}: {e}"))
}

fn parse_counts(text: &str, expected: usize, flag: &str) -> Result<Vec<usize>, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != expected {
        return Err(format!(
            "{flag} expects {expected} comma-separated integers, got {text:?}"
        ));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("{flag}: {p:?} is not a non-negative integer"))
        })
        .collect()
}

fn check_length(total: usize) -> Result<(), String> {
    if total > 63 {
        Err(format!(
            "combined walk length {total} exceeds the supported maximum of 63"
        ))
    } else {
        Ok(())
    }
}

fn execute(cli: Cli, format: Format) -> Result<(String, i32), String> {
    match cli.command {
        Command::Enumerate { vpath, hpath, stat } => {
            let v = parse_vpath(&vpath)?;
            let h = parse_hpath(&hpath)?;
            check_length(v.len() + h.len())?;
            let stat: Statistic = stat.into();
            let dist = distribution(shuffles(&v, &h), stat);
            let title = format!("{stat} over interleavings of V={v}, H={h}");
            Ok((emit::render_distribution(&dist, &title, format), 0))
        }
        Command::Gf(args) => {
            let poly = gf_dispatch(&args)?;
            Ok((emit::render_poly(&poly, format), 0))
        }
        Command::Bijection { op } => {
            let fields = bijection_dispatch(op)?;
            Ok((emit::render_fields(&fields, format), 0))
        }
        Command::Verify { id, max } => {
            let reports = run_verify(&id, max, cli.jobs).map_err(|e| e.to_string())?;
            let code = exit_code_for(&reports);
            Ok((emit::render_reports(&reports, format), code))
        }
        Command::Scan {
            checks,
            max,
            mode,
            maxlen,
        } => {
            let selected: Vec<ScanCheck> = if checks.is_empty() {
                ScanCheck::DEFAULT.to_vec()
            } else {
                checks
                    .iter()
                    .map(|id| ScanCheck::parse(id).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?
            };
            if let Some(len) = maxlen {
                if len % 2 != 0 {
                    return Err(format!("--maxlen must be even, got {len}"));
                }
            }
            let opts = ScanOptions {
                max_entry: max,
                mode: mode.into(),
                loop_len_cap: maxlen,
                jobs: cli.jobs,
            };
            let reports = scan(&selected, &opts);
            let code = exit_code_for(&reports);
            Ok((emit::render_reports(&reports, format), code))
        }
    }
}

fn gf_dispatch(args: &GfArgs) -> Result<cornerwalk::poly::IntPoly, String> {
    let stat: Statistic = args.stat.into();
    match (&args.class, &args.vpath, &args.hpath, &args.hcount) {
        (Some(class), None, None, None) => {
            if stat != Statistic::AbsSignedPeak {
                return Err(format!(
                    "--class computes the closed form for abs-signed-peak; {stat} is not available here"
                ));
            }
            let c = parse_counts(class, 4, "--class")?;
            Ok(gf_abs_signed(ClassParams::new(c[0], c[1], c[2], c[3])))
        }
        (None, Some(vpath), Some(hpath), None) => {
            let v = parse_vpath(vpath)?;
            let h = parse_hpath(hpath)?;
            check_length(v.len() + h.len())?;
            match stat {
                Statistic::Peak => Ok(gf_peak_shuffle_class(&v, &h)),
                Statistic::AbsSignedPeak => Ok(abs_signed_gf(shuffles(&v, &h))),
                other => Err(format!(
                    "{other} has no generating function here; use `enumerate` for signed or in-vert tallies"
                )),
            }
        }
        (None, Some(vpath), None, Some(hcount)) => {
            let v = parse_vpath(vpath)?;
            let c = parse_counts(hcount, 2, "--hcount")?;
            check_length(v.len() + c[0] + c[1])?;
            let domain: WalkDomain = args.mode.into();
            let (g1, g2) =
                projection_stat_gfs(&v, c[0], c[1], domain).map_err(|e| e.to_string())?;
            match stat {
                Statistic::Peak => Ok(g1),
                Statistic::AbsSignedPeak => Ok(g2),
                other => Err(format!(
                    "{other} has no generating function here; use peak or abs-signed-peak"
                )),
            }
        }
        _ => Err(
            "gf needs exactly one input form: --class R,L,U,D | --vpath V --hpath H | --vpath V --hcount R,L"
                .to_string(),
        ),
    }
}

fn bijection_dispatch(op: BijectionOp) -> Result<BTreeMap<String, String>, String> {
    match op {
        BijectionOp::Flip { word } => {
            let s = Shuffle::parse(&word).map_err(|e| format!("--word {word:?}: {e}"))?;
            let flipped = flip(&s);
            Ok(BTreeMap::from([
                ("input".into(), s.to_string()),
                ("output".into(), flipped.to_string()),
            ]))
        }
        BijectionOp::Toggle { bits, index } => {
            let w = BinaryWord::parse(&bits).map_err(|e| format!("--bits {bits:?}: {e}"))?;
            let toggled = w.toggle(index).map_err(|e| e.to_string())?;
            let class = ToggleClass::of(&w).expect("toggle already checked even length");
            Ok(BTreeMap::from([
                ("anchor".into(), format!("{:?}", class.anchor())),
                ("base".into(), format!("{:?}", class.base())),
                ("class-size".into(), class.size().to_string()),
                ("index".into(), index.to_string()),
                ("input".into(), w.to_string()),
                ("output".into(), toggled.to_string()),
            ]))
        }
        BijectionOp::Coloring { word } => {
            let s = Shuffle::parse(&word).map_err(|e| format!("--word {word:?}: {e}"))?;
            let coloring = coloring_encode(&s).map_err(|e| e.to_string())?;
            let (v, h) = s.projections();
            let decoded = cornerwalk::bijection::coloring_decode(&coloring, &v, &h)
                .map_err(|e| format!("round trip failed: {e}"))?;
            Ok(BTreeMap::from([
                (
                    "blue-horizontal".into(),
                    format!("{:?}", coloring.blue_horizontal),
                ),
                (
                    "blue-vertical".into(),
                    format!("{:?}", coloring.blue_vertical),
                ),
                ("decoded".into(), decoded.to_string()),
                (
                    "in-vert".into(),
                    cornerwalk::stats::in_vert(s.steps()).to_string(),
                ),
                ("input".into(), s.to_string()),
                ("origin-blue".into(), coloring.origin_blue.to_string()),
            ]))
        }
        BijectionOp::WordToShuffle { bits, vpath, hpath } => {
            let w = BinaryWord::parse(&bits).map_err(|e| format!("--bits {bits:?}: {e}"))?;
            let v = parse_vpath(&vpath)?;
            let h = parse_hpath(&hpath)?;
            let m = h.right_count();
            let n = v.up_count();
            let s = word_to_shuffle(m, n, &w, &v, &h).map_err(|e| e.to_string())?;
            Ok(BTreeMap::from([
                ("input".into(), w.to_string()),
                (
                    "shifted-even-count".into(),
                    w.shifted_even_count().to_string(),
                ),
                ("shuffle".into(), s.to_string()),
                (
                    "signed-peak".into(),
                    signed_peak_count(s.steps()).to_string(),
                ),
            ]))
        }
    }
}
