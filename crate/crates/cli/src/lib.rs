//! Command-line front end for `socodes`.
//!
//! [`run`] takes the argument list and the three standard streams so the
//! whole command surface can be exercised in-process. Exit codes: 0 success,
//! 1 verification failure, 2 usage or input error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use socodes::bounds::{self, Figure1Config};
use socodes::codes::{rm_code, rs_code, self_orthogonal_outer};
use socodes::concat::{self, ConcatenationScheme};
use socodes::counting;
use socodes::expansion::{self, ExpansionScheme};
use socodes::gf2la::{MAX_BINARY_ENUM_DIM, MAX_FIELD_ENUM_BITS};
use socodes::{codefile, Basis, FieldSpec, LinearCode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const FORMAT_HELP: &str = "\
Code files:
  # comment lines start with '#'; '# claimed_d: D' records a design distance
  q n k
  k rows of n whitespace-separated lowercase hex symbols below q

A symbol is the polynomial-basis coordinate vector of a field element (bit 0
is the constant term) under the default modulus for GF(q).";

#[derive(Parser, Debug)]
#[command(
    name = "socodes",
    version,
    about = "Binary self-orthogonal codes: constructions, verification, counting and bounds",
    after_help = FORMAT_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a field, its self-dual basis and trace Gram matrices
    Field {
        #[arg(long)]
        m: u32,
        /// Irreducible modulus in hex (default: built-in table)
        #[arg(long, value_parser = parse_hex)]
        modulus: Option<u32>,
    },
    /// Emit a code file for a standard family
    #[command(subcommand)]
    Code(CodeCommand),
    /// Report rank, self-orthogonality, dual containment and weight parity
    Check {
        /// Code file ('-' or absent reads standard input)
        file: Option<PathBuf>,
        /// Exit with status 1 unless the code is self-orthogonal
        #[arg(long)]
        expect_so: bool,
    },
    /// Exact minimum distance by exhaustive enumeration
    Mindist {
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Concatenate an outer code over GF(2^k) with a binary [n, k] inner code
    Concat {
        #[arg(long)]
        outer: PathBuf,
        #[arg(long)]
        inner: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisChoice::SelfDual)]
        basis: BasisChoice,
    },
    /// Binary expansion of a code over GF(2^(2t)) through a self-dual basis
    Expand { file: Option<PathBuf> },
    /// Recompute the published bound tables as CSV
    Tables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// Printed counting formulas next to exhaustive counts, as CSV
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Also run the exhaustive enumeration (n <= 10)
        #[arg(long)]
        oracle: bool,
    },
    /// Existence condition for self-orthogonal codes at relative distance delta
    Gv {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: f64,
        #[arg(long)]
        seed: u64,
        /// Search nodes (n <= 12) or greedy restarts (larger n)
        #[arg(long, default_value_t = 2_000_000)]
        budget: usize,
    },
    /// Curve data for the combined bound figure, as CSV
    Bounds {
        #[arg(long, default_value_t = 101)]
        samples: usize,
        /// Output file (default: standard output)
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CodeCommand {
    /// Reed-Muller code RM(r, m)
    Rm {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        m: u32,
    },
    /// Reed-Solomon code on the first n field elements
    Rs(FieldCodeArgs),
    /// Self-orthogonal generalized Reed-Solomon code
    SoOuter {
        #[command(flatten)]
        params: FieldCodeArgs,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct FieldCodeArgs {
    #[arg(long)]
    q: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BasisChoice {
    SelfDual,
    Polynomial,
}

fn parse_hex(s: &str) -> Result<u32, String> {
    let digits = s.trim_start_matches("0x").trim_start_matches("0X");
    u32::from_str_radix(digits, 16).map_err(|e| format!("'{s}' is not hex: {e}"))
}

/// A failed command: the exit code and the message for standard error.
struct Failure(i32, String);

impl From<socodes::Error> for Failure {
    fn from(e: socodes::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure(EXIT_USAGE, format!("i/o error: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs one command line (`args[0]` is the program name).
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let text = e.render().to_string();
            let _ = if informational {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return if informational { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(Failure(code, msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> CmdResult {
    match command {
        Command::Field { m, modulus } => cmd_field(m, modulus, io),
        Command::Code(c) => cmd_code(c, io),
        Command::Check { file, expect_so } => cmd_check(file, expect_so, io),
        Command::Mindist { file, jobs } => cmd_mindist(file, jobs, io),
        Command::Concat {
            outer,
            inner,
            basis,
        } => cmd_concat(&outer, &inner, basis, io),
        Command::Expand { file } => cmd_expand(file, io),
        Command::Tables { which } => cmd_tables(which, io),
        Command::Count { n, k, s, oracle } => cmd_count(n, k, s, oracle, io),
        Command::Gv {
            n,
            delta,
            seed,
            budget,
        } => cmd_gv(n, delta, seed, budget, io),
        Command::Bounds { samples, out } => cmd_bounds(samples, out, io),
    }
}

fn read_code_text(path: Option<&PathBuf>, io: &mut Io) -> Result<(String, String), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", p.display())))?;
            Ok((p.display().to_string(), text))
        }
        _ => {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            Ok(("<stdin>".into(), text))
        }
    }
}

fn load_code(path: Option<&PathBuf>, io: &mut Io) -> Result<LinearCode, Failure> {
    let (name, text) = read_code_text(path, io)?;
    codefile::parse(&text).map_err(|e| Failure(EXIT_USAGE, format!("{name}: {e}")))
}

fn field_from_q(q: usize) -> Result<FieldSpec, Failure> {
    if q < 2 || !q.is_power_of_two() {
        return Err(Failure(
            EXIT_USAGE,
            format!("q = {q} is not a power of two >= 2"),
        ));
    }
    Ok(FieldSpec::with_degree(q.trailing_zeros())?)
}

fn gram_lines(basis: &Basis) -> Vec<String> {
    (0..basis.len())
        .map(|i| {
            (0..basis.len())
                .map(|j| if basis.gram_entry(i, j) { '1' } else { '0' })
                .collect()
        })
        .collect()
}

fn cmd_field(m: u32, modulus: Option<u32>, io: &mut Io) -> CmdResult {
    let f = FieldSpec::new(m, modulus)?;
    let w = &mut io.out;
    writeln!(w, "field: {f}")?;
    for (name, basis) in [
        ("polynomial", Basis::polynomial(&f)),
        ("self-dual", Basis::self_dual(&f)),
    ] {
        let elems: Vec<String> = basis.elements().iter().map(ToString::to_string).collect();
        writeln!(w, "{name} basis: {}", elems.join(" "))?;
        writeln!(w, "{name} gram:")?;
        for line in gram_lines(&basis) {
            writeln!(w, "  {line}")?;
        }
        writeln!(
            w,
            "{name} basis is self-dual: {}",
            yes_no(basis.is_self_dual())
        )?;
    }
    Ok(())
}

fn cmd_code(c: CodeCommand, io: &mut Io) -> CmdResult {
    let (code, comment) = match c {
        CodeCommand::Rm { r, m } => (rm_code(r, m)?, format!("RM({r},{m})")),
        CodeCommand::Rs(FieldCodeArgs { q, n, k }) => (
            rs_code(&field_from_q(q)?, n, k)?,
            format!("Reed-Solomon [{n},{k}] over GF({q})"),
        ),
        CodeCommand::SoOuter {
            params: FieldCodeArgs { q, n, k },
            seed,
        } => (
            self_orthogonal_outer(&field_from_q(q)?, n, k, seed)?,
            format!("self-orthogonal GRS [{n},{k}] over GF({q}), seed {seed}"),
        ),
    };
    io.out
        .write_all(codefile::emit(&code, &[comment]).as_bytes())?;
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn cmd_check(file: Option<PathBuf>, expect_so: bool, io: &mut Io) -> CmdResult {
    let code = load_code(file.as_ref(), io)?;
    let so = code.is_self_orthogonal();
    let sd = so && 2 * code.dim() == code.len();
    let w = &mut io.out;
    writeln!(
        w,
        "[{},{}] self-orthogonal: {}, self-dual: {}",
        code.len(),
        code.dim(),
        yes_no(so),
        yes_no(sd)
    )?;
    writeln!(w, "field: {}", code.field())?;
    writeln!(w, "rank: {}", code.dim())?;
    let dual = code.dual();
    writeln!(w, "dual dimension: {}", dual.dim())?;
    writeln!(w, "contained in dual: {}", yes_no(dual.contains(&code)?))?;
    let even = code.field().is_binary().then(|| code.is_even());
    match even {
        Some(e) => writeln!(w, "all weights even: {}", yes_no(e))?,
        None => writeln!(w, "all weights even: n/a (non-binary)")?,
    }
    if let Some(d) = code.claimed_distance() {
        writeln!(w, "claimed distance: {d}")?;
    }
    // a binary self-orthogonal code must be even
    if so && even == Some(false) {
        return Err(Failure(
            EXIT_VERIFY,
            "self-orthogonal binary code has an odd-weight codeword".into(),
        ));
    }
    if expect_so && !so {
        return Err(Failure(EXIT_VERIFY, "code is not self-orthogonal".into()));
    }
    Ok(())
}

fn cmd_mindist(file: Option<PathBuf>, jobs: usize, io: &mut Io) -> CmdResult {
    if jobs == 0 {
        return Err(Failure(EXIT_USAGE, "--jobs must be at least 1".into()));
    }
    let code = load_code(file.as_ref(), io)?;
    let d = code.min_distance(jobs).map_err(|e| {
        Failure(
            EXIT_USAGE,
            format!(
                "{e} (limits: binary dimension {MAX_BINARY_ENUM_DIM}, field k*m {MAX_FIELD_ENUM_BITS})"
            ),
        )
    })?;
    writeln!(io.out, "[{},{},{}]", code.len(), code.dim(), d)?;
    if let Some(claimed) = code.claimed_distance() {
        writeln!(
            io.out,
            "claimed distance {claimed}: {}",
            if d >= claimed { "met" } else { "violated" }
        )?;
        if d < claimed {
            return Err(Failure(
                EXIT_VERIFY,
                format!("minimum distance {d} below claimed {claimed}"),
            ));
        }
    }
    Ok(())
}

fn cmd_concat(outer: &PathBuf, inner: &PathBuf, basis: BasisChoice, io: &mut Io) -> CmdResult {
    let outer = load_code(Some(outer), io)?;
    let inner = load_code(Some(inner), io)?;
    let symbol_map = match basis {
        BasisChoice::SelfDual => Basis::self_dual(outer.field()),
        BasisChoice::Polynomial => Basis::polynomial(outer.field()),
    };
    let basis_name = match basis {
        BasisChoice::SelfDual => "self-dual",
        BasisChoice::Polynomial => "polynomial",
    };
    let comment = format!(
        "concatenation of [{},{}] over GF({}) with binary [{},{}], {} basis",
        outer.len(),
        outer.dim(),
        outer.field().q(),
        inner.len(),
        inner.dim(),
        basis_name
    );
    let scheme = ConcatenationScheme::new(outer, inner, symbol_map)?;
    let code = concat::concatenate(&scheme)?;
    io.out
        .write_all(codefile::emit(&code, &[comment]).as_bytes())?;
    Ok(())
}

fn cmd_expand(file: Option<PathBuf>, io: &mut Io) -> CmdResult {
    let code = load_code(file.as_ref(), io)?;
    let scheme = ExpansionScheme::new(code.field())?;
    let expanded = expansion::expand(&code, &scheme)?;
    let comment = format!(
        "self-dual-basis expansion of [{},{}] over GF({})",
        code.len(),
        code.dim(),
        code.field().q()
    );
    io.out
        .write_all(codefile::emit(&expanded, &[comment]).as_bytes())?;
    Ok(())
}

fn cmd_tables(which: u8, io: &mut Io) -> CmdResult {
    if which == 1 {
        concat::write_table1_csv(&mut io.out, &concat::table1()?)?;
    } else {
        let rows = expansion::table2(2..=5)?;
        expansion::write_table2_csv(&mut io.out, &rows)?;
        if let Some(t) = expansion::best_t_at_half(&rows) {
            let best = rows.iter().find(|r| r.t == t).expect("best row is present");
            writeln!(
                io.err,
                "argmax t at R = 1/2: {t} (delta = {} ~ {:.5})",
                best.delta_at_half,
                bounds::to_f64(&best.delta_at_half)
            )?;
        }
    }
    Ok(())
}

fn cmd_count(n: usize, k: Option<usize>, s: Option<usize>, oracle: bool, io: &mut Io) -> CmdResult {
    let reports = counting::count_reports(n, k, s, oracle)?;
    counting::write_reports_csv(&mut io.out, &reports)?;
    Ok(())
}

/// Largest lengths and dimensions handed to the witness search.
const WITNESS_MAX_N: usize = 20;
const WITNESS_MAX_K: usize = 10;

fn cmd_gv(n: usize, delta: f64, seed: u64, budget: usize, io: &mut Io) -> CmdResult {
    if !(0.0..=0.5).contains(&delta) {
        return Err(Failure(
            EXIT_USAGE,
            format!("delta = {delta} must lie in [0, 1/2]"),
        ));
    }
    if n == 0 || n % 2 == 1 {
        return Err(Failure(
            EXIT_USAGE,
            format!("length n = {n} must be even and positive"),
        ));
    }
    let r = counting::radius_for_delta(n, delta);
    let w = &mut io.out;
    writeln!(w, "n: {n}")?;
    writeln!(w, "r: {r}")?;
    if r < 2 {
        writeln!(w, "k: n/a (needs r >= 2)")?;
        return Ok(());
    }
    let k = counting::gv_so_dimension(n, r)?;
    writeln!(w, "k: {k}")?;
    let rate = k as f64 / n as f64;
    writeln!(w, "k/n: {rate:.6}")?;
    if delta > 0.0 {
        writeln!(w, "1-H2(delta): {:.6}", 1.0 - bounds::entropy_h(2, delta)?)?;
    }
    if k < 1 {
        writeln!(w, "condition holds: n/a (k < 1)")?;
        return Ok(());
    }
    let k = k as usize;
    writeln!(w, "condition holds: {}", counting::theorem1_holds(n, k, r)?)?;
    if n > WITNESS_MAX_N || k > WITNESS_MAX_K {
        writeln!(
            w,
            "witness: skipped (search limited to n <= {WITNESS_MAX_N}, k <= {WITNESS_MAX_K})"
        )?;
        return Ok(());
    }
    match counting::find_so_code(n, k, 2 * r, budget, seed)? {
        Some(code) => {
            writeln!(w, "witness: found")?;
            let comment = format!(
                "self-orthogonal [{n},{k}] witness with distance >= {}",
                2 * r
            );
            w.write_all(codefile::emit(&code, &[comment]).as_bytes())?;
        }
        None => writeln!(w, "witness: none within budget")?,
    }
    Ok(())
}

fn cmd_bounds(samples: usize, out: Option<PathBuf>, io: &mut Io) -> CmdResult {
    if samples < 2 {
        return Err(Failure(EXIT_USAGE, "--samples must be at least 2".into()));
    }
    let config = Figure1Config {
        samples,
        ..Figure1Config::default()
    };
    let points = bounds::figure1_data(&config)?;
    match out {
        Some(path) => {
            let mut buf = Vec::new();
            bounds::write_points_csv(&mut buf, &points)?;
            fs::write(&path, buf)
                .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
        }
        None => bounds::write_points_csv(&mut io.out, &points)?,
    }
    Ok(())
}
