use clap::{Args, Parser, Subcommand, ValueEnum};
use matroid_algebra::error::Error;
use matroid_algebra::family::{class_label, product, Family};
use matroid_algebra::freedom::FreedomMatroid;
use matroid_algebra::freeness::{certify_degree, p_prime_basis, CoeffMatrix, RatSum};
use matroid_algebra::hopf::{coproduct_with_cap, multisection_coefficient, section_coefficient};
use matroid_algebra::iso::{canonicalize_with_cap, CanonicalKey, CANONICAL_CAP};
use matroid_algebra::lambda::{distinguished_word, is_order_ideal, lambda_image, maximal_words};
use matroid_algebra::matroid::Matroid;
use matroid_algebra::subset;
use matroid_algebra::verify::run_all;
use matroid_algebra::word::{lex_cmp, DominanceLattice, Word};
use serde::Serialize;
use std::fmt::Write as _;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "matroid-algebra",
    about = "Exact coalgebra of matroid minors and the free point-loop subalgebra",
    version
)]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Source {
    /// 0/1 word defining a freedom matroid, e.g. 0101
    #[arg(long)]
    word: Option<String>,
    /// JSON file with {"n", "ranks"} or {"n", "bases"}
    #[arg(long)]
    matroid: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Matroid, Error> {
        match (&self.word, &self.matroid) {
            (Some(w), None) => {
                let w: Word = w.parse()?;
                Ok(FreedomMatroid::build(&w)?.into_matroid())
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::DomainError(format!("cannot read {path}: {e}")))?;
                serde_json::from_str(&text)
                    .map_err(|e| Error::DomainError(format!("cannot parse {path}: {e}")))
            }
            _ => Err(Error::DomainError(
                "pass exactly one of --word and --matroid".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a matroid and print its basic data
    Build {
        #[command(flatten)]
        source: Source,
        /// Raise the canonicalization size cap (warns above the default)
        #[arg(long)]
        canon_cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Expand the coproduct of a matroid class
    Coproduct {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        canon_cap: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multiply two classes inside a family
    Product {
        /// Left factor, e.g. word:110, point, loop, uniform:2,4, file:m.json
        #[arg(long)]
        left: String,
        /// Right factor, same syntax as --left
        #[arg(long)]
        right: String,
        /// Family the expansion runs over
        #[arg(long, default_value = "freedom")]
        family: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Section coefficient of an ordered pair of classes in a matroid
    Section {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Multisection coefficient of an ordered list of classes
    Multisection {
        #[command(flatten)]
        source: Source,
        /// Factor classes in order; repeat the flag
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Image of the rank-increment word map over all orderings
    Image {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Hasse diagram of the dominance order on words, as DOT
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Coefficient matrix of word products in one bidegree
    MatrixC {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Freeness certificates for every bidegree of a degree
    Freeness {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Dual basis expansions in every bidegree of a degree
    DualBasis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full verification battery
    Verify {
        /// Raise size caps where a criterion has an extended variant
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_factor(s: &str) -> Result<Matroid, Error> {
    if let Some(w) = s.strip_prefix("word:") {
        let w: Word = w.parse()?;
        return Ok(FreedomMatroid::build(&w)?.into_matroid());
    }
    if let Some(path) = s.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::DomainError(format!("cannot read {path}: {e}")))?;
        return serde_json::from_str(&text)
            .map_err(|e| Error::DomainError(format!("cannot parse {path}: {e}")));
    }
    if let Some(rn) = s.strip_prefix("uniform:") {
        let (r, n) = rn
            .split_once(',')
            .ok_or_else(|| Error::DomainError("uniform takes rank,size".into()))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::DomainError(format!("bad number {t:?}: {e}")))
        };
        return Matroid::uniform(parse(r)?, parse(n)?);
    }
    let with_size = |t: &str| {
        t.parse::<usize>()
            .map_err(|e| Error::DomainError(format!("bad size {t:?}: {e}")))
    };
    if let Some(n) = s.strip_prefix("free:") {
        return Matroid::free(with_size(n)?);
    }
    if let Some(n) = s.strip_prefix("zero:") {
        return Matroid::zero(with_size(n)?);
    }
    if let Some(n) = s.strip_prefix("circuit:") {
        return Matroid::circuit(with_size(n)?);
    }
    if let Some(n) = s.strip_prefix("multipoint:") {
        return Matroid::multipoint(with_size(n)?);
    }
    match s {
        "point" => Ok(Matroid::point()),
        "loop" => Ok(Matroid::loop_()),
        "empty" => Ok(Matroid::empty()),
        other => Err(Error::DomainError(format!(
            "unknown class {other:?}; use word:..., file:..., uniform:r,n, free:n, zero:n, circuit:n, multipoint:n, point, loop, or empty"
        ))),
    }
}

fn canon_cap_for(m: &Matroid, flag: Option<usize>) -> usize {
    let cap = flag.unwrap_or(CANONICAL_CAP).max(m.n());
    if cap > CANONICAL_CAP {
        eprintln!(
            "warning: canonicalization above {CANONICAL_CAP} elements searches a large relabeling space"
        );
    }
    cap
}

fn json<T: Serialize>(value: &T) -> Result<String, Error> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Error::DomainError(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct BuildReport {
    matroid: Matroid,
    rank: usize,
    nullity: usize,
    loops: Vec<usize>,
    base_count: usize,
    distinguished_word: String,
    canonical: CanonicalKey,
}

#[derive(Serialize)]
struct Coefficient {
    coefficient: String,
}

fn run(cli: Cli) -> Result<String, Error> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::DomainError(format!("thread pool: {e}")))?;
    }
    let mut out = String::new();
    match cli.command {
        Command::Build { source, canon_cap, format } => {
            let m = source.load()?;
            let cap = canon_cap_for(&m, canon_cap);
            let canonical = canonicalize_with_cap(&m, cap)?;
            let report = BuildReport {
                rank: m.rank(),
                nullity: m.nullity(),
                loops: subset::elements(m.loops()).collect(),
                base_count: m.bases().len(),
                distinguished_word: distinguished_word(&m).to_string(),
                canonical,
                matroid: m,
            };
            match format {
                Format::Json => out = json(&report)?,
                _ => {
                    let _ = writeln!(out, "elements            {}", report.matroid.n());
                    let _ = writeln!(out, "rank                {}", report.rank);
                    let _ = writeln!(out, "nullity             {}", report.nullity);
                    let _ = writeln!(
                        out,
                        "loops               {}",
                        subset::format_set(report.matroid.loops())
                    );
                    let _ = writeln!(out, "bases               {}", report.base_count);
                    let _ = writeln!(out, "distinguished word  {}", report.distinguished_word);
                    let _ = writeln!(out, "class               {}", class_label(&report.canonical));
                    let _ = writeln!(out, "digest              {}", report.canonical.digest_hex());
                }
            }
        }
        Command::Coproduct { source, canon_cap, format } => {
            let m = source.load()?;
            let cap = canon_cap_for(&m, canon_cap);
            let d = coproduct_with_cap(&m, cap)?;
            match format {
                Format::Json => out = json(&d)?,
                _ => {
                    let _ = writeln!(out, "{}", d.display_with(class_label));
                }
            }
        }
        Command::Product { left, right, family, format } => {
            let a = parse_factor(&left)?;
            let b = parse_factor(&right)?;
            let fam = Family::parse(&family)?;
            let sum = product(&a, &b, fam)?;
            match format {
                Format::Json => out = json(&sum)?,
                _ => {
                    let _ = writeln!(out, "{}", sum.display_with(class_label));
                }
            }
        }
        Command::Section { source, left, right, format } => {
            let m = source.load()?;
            let a = parse_factor(&left)?;
            let b = parse_factor(&right)?;
            let c = section_coefficient(&m, &a, &b)?;
            match format {
                Format::Json => out = json(&Coefficient { coefficient: c.to_string() })?,
                _ => {
                    let _ = writeln!(out, "{c}");
                }
            }
        }
        Command::Multisection { source, parts, format } => {
            let m = source.load()?;
            let factors: Vec<Matroid> = parts
                .iter()
                .map(|p| parse_factor(p))
                .collect::<Result<_, _>>()?;
            let c = multisection_coefficient(&m, &factors)?;
            match format {
                Format::Json => out = json(&Coefficient { coefficient: c.to_string() })?,
                _ => {
                    let _ = writeln!(out, "{c}");
                }
            }
        }
        Command::Image { source, format } => {
            let m = source.load()?;
            let image = lambda_image(&m)?;
            let maxima = maximal_words(&image);
            let mut sorted: Vec<Word> = image.iter().cloned().collect();
            sorted.sort_by(|x, y| lex_cmp(y, x));
            #[derive(Serialize)]
            struct ImageReport {
                image: Vec<String>,
                maxima: Vec<String>,
                order_ideal: bool,
                principal: bool,
            }
            let report = ImageReport {
                image: sorted.iter().map(Word::to_string).collect(),
                maxima: maxima.iter().map(Word::to_string).collect(),
                order_ideal: is_order_ideal(&image),
                principal: maxima.len() <= 1,
            };
            match format {
                Format::Json => out = json(&report)?,
                _ => {
                    let _ = writeln!(out, "image     {}", report.image.join(" "));
                    let _ = writeln!(out, "maxima    {}", report.maxima.join(" "));
                    let _ = writeln!(out, "ideal     {}", report.order_ideal);
                    let _ = writeln!(out, "principal {}", report.principal);
                }
            }
        }
        Command::Hasse { n, r, format } => {
            let lat = DominanceLattice::new(n, r);
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct HasseReport {
                        words: Vec<String>,
                        covers: Vec<(String, String)>,
                    }
                    let mut covers = Vec::new();
                    for w in lat.words() {
                        for c in lat.covers(w) {
                            covers.push((w.to_string(), c.to_string()));
                        }
                    }
                    covers.sort();
                    out = json(&HasseReport {
                        words: lat.words().iter().map(Word::to_string).collect(),
                        covers,
                    })?;
                }
                _ => out = lat.hasse_dot(),
            }
        }
        Command::MatrixC { n, r, format } => {
            let c = CoeffMatrix::build(n, r)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct MatrixReport {
                        n: usize,
                        r: usize,
                        words: Vec<String>,
                        entries: Vec<Vec<String>>,
                    }
                    out = json(&MatrixReport {
                        n,
                        r,
                        words: c.words().iter().map(Word::to_string).collect(),
                        entries: c
                            .row_tables()
                            .iter()
                            .map(|row| row.iter().map(|e| e.to_string()).collect())
                            .collect(),
                    })?;
                }
                _ => {
                    let width = c
                        .row_tables()
                        .iter()
                        .flatten()
                        .map(|e| e.to_string().len())
                        .max()
                        .unwrap_or(1)
                        .max(n);
                    let _ = write!(out, "{:>width$} ", "");
                    for w in c.words() {
                        let _ = write!(out, "{:>width$} ", w.to_string());
                    }
                    out.push('\n');
                    for (i, w) in c.words().iter().enumerate() {
                        let _ = write!(out, "{:>width$} ", w.to_string());
                        for j in 0..c.size() {
                            let _ = write!(out, "{:>width$} ", c.entry(i, j).to_string());
                        }
                        out.push('\n');
                    }
                }
            }
        }
        Command::Freeness { n, format } => {
            let certs = certify_degree(n)?;
            match format {
                Format::Json => out = json(&certs)?,
                _ => {
                    for cert in &certs {
                        let _ = writeln!(
                            out,
                            "bidegree ({}, {}): dimension {}, determinant {}, triangular {}, diagonal positive {}, inverse check {}, free {}",
                            cert.n,
                            cert.r,
                            cert.dimension,
                            cert.determinant,
                            cert.upper_triangular,
                            cert.diagonal_all_positive,
                            cert.inverse_check,
                            cert.free
                        );
                    }
                    let all = certs.iter().all(|c| c.free);
                    let _ = writeln!(
                        out,
                        "degree {n}: point-loop products are {}independent",
                        if all { "" } else { "NOT " }
                    );
                }
            }
        }
        Command::DualBasis { n, format } => {
            let mut report: Vec<(String, RatSum)> = Vec::new();
            for r in (0..=n).rev() {
                let basis = p_prime_basis(n, r)?;
                for w in DominanceLattice::new(n, r).words() {
                    report.push((w.to_string(), basis[w].clone()));
                }
            }
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct DualBasisEntry<'a> {
                        word: &'a str,
                        expansion: &'a RatSum,
                    }
                    let entries: Vec<DualBasisEntry> = report
                        .iter()
                        .map(|(w, s)| DualBasisEntry { word: w, expansion: s })
                        .collect();
                    out = json(&entries)?;
                }
                _ => {
                    for (w, s) in &report {
                        let _ = writeln!(out, "P'({w}) = {}", s.display_with(class_label));
                    }
                }
            }
        }
        Command::Verify { extended, format } => {
            let results = run_all(extended);
            let ok = results.iter().all(|r| r.passed);
            match format {
                Format::Json => out = json(&results)?,
                _ => {
                    for r in &results {
                        let _ = writeln!(out, "{}", r.line());
                    }
                }
            }
            emit(&out);
            if !ok {
                std::process::exit(1);
            }
            return Ok(String::new());
        }
    }
    Ok(out)
}

/// Write to stdout, treating a closed pipe as a normal exit.
fn emit(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(1);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeCapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
