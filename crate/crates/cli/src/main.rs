use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use lattice_lab::lattice::{
    find_rank2_diamond, is_distributive, is_modular, DistributivityReport, LatticeDoc, ModularityReport, Rank2Interval,
    SublatticeWitness,
};
use lattice_lab::workflows::{
    decompose, join_meet_ideal_over, lk_suite, radical_certificate_with, squarefree_order_scan, Check, Permutations,
    RadicalOptions, RadicalRoute, RadicalSummary, Report, ScanFamily, ScanReport, DEFAULT_SEED,
};
use lattice_lab::{build_fixture, Error, Field, Fixture, Lattice, MonomialOrder};

/// Join-meet ideals of finite lattices: Groebner bases, radicality and minimal primes.
#[derive(Debug, Parser)]
#[command(name = "lattice-lab", version)]
struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Add wall-clock timings to the JSON report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Structural report: grading, distributivity, modularity.
    Check(InputArgs),
    /// Reduced Groebner basis of the join-meet ideal.
    Gb {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Initial ideal and whether it is squarefree.
    Ini {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Minimal primes and the intersection check.
    Primes(InputArgs),
    /// Radical certificate: squarefree order, prime intersection, or a witness.
    Radical {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        scan: ScanArgs,
        /// Largest witness degree (default: height + 2).
        #[arg(long, value_name = "D")]
        degree_bound: Option<usize>,
    },
    /// Scan Lex and DegRevLex orders for a squarefree initial ideal.
    Scan {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        scan: ScanArgs,
        /// Stop at the first squarefree order.
        #[arg(long)]
        first: bool,
        /// List the verdict for every order.
        #[arg(long)]
        verdicts: bool,
    },
    /// The L_k suite.
    Lk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// List the fixtures, or print one as lattice JSON.
    Fixtures {
        #[arg(long, value_name = "FIXTURE")]
        dump: Option<String>,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Named fixture, e.g. `Q`, `Lk:3:1`, `Chain:5`.
    #[arg(long, conflicts_with = "input", required_unless_present = "input")]
    fixture: Option<String>,
    /// Lattice JSON file: {"elements": [...], "covers": [[lower, upper], ...]}.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Coefficient field: `Q` or a prime p.
    #[arg(long, default_value = "Q")]
    field: String,
}

#[derive(Debug, Args)]
struct OrderArgs {
    /// `lex:<v1,...>`, `degrevlex:<v1,...>` or a block order; a bare kind uses element order.
    #[arg(long, default_value = "degrevlex")]
    order: String,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Sample this many permutations per order kind.
    #[arg(long, conflicts_with = "full", value_name = "N")]
    cap: Option<usize>,
    /// Enumerate every permutation.
    #[arg(long)]
    full: bool,
    /// Sampling seed.
    #[arg(long, env = "LATTICE_LAB_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
}

impl ScanArgs {
    fn permutations(&self) -> Permutations {
        match (self.cap, self.full) {
            (_, true) => Permutations::All,
            (Some(count), false) => Permutations::Sample { count, seed: self.seed },
            (None, false) => Permutations::Auto { seed: self.seed },
        }
    }
}

/// Bad input; exits with status 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn parse_field(text: &str) -> Result<Field, Failure> {
    match text {
        "Q" | "QQ" | "0" | "rationals" => Ok(Field::Rationals),
        p => {
            let p: u64 = p.parse().map_err(|_| Failure(format!("unknown field `{p}`")))?;
            Ok(Field::prime(p)?)
        }
    }
}

fn load(input: &InputArgs) -> Result<(String, Lattice), Failure> {
    if let Some(spec) = &input.fixture {
        let f: Fixture = spec.parse()?;
        return Ok((f.to_string(), build_fixture(&f)?));
    }
    let path = input.input.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), Lattice::from_json(&text)?))
}

#[derive(Serialize)]
struct Structure {
    lattice: LatticeDoc,
    elements: usize,
    graded: bool,
    height: usize,
    distributive: DistributivityReport,
    modular: ModularityReport,
    rank2_diamond: Option<Rank2Interval>,
    join_irreducibles: Vec<String>,
    basic_binomials: usize,
}

#[derive(Serialize)]
struct BasisOut {
    lattice: String,
    order: String,
    basis: Vec<String>,
    verified: bool,
}

#[derive(Serialize)]
struct InitialOut {
    lattice: String,
    order: String,
    generators: Vec<String>,
    squarefree: bool,
    dim: usize,
}

#[derive(Serialize)]
struct RadicalOut {
    lattice: String,
    #[serde(flatten)]
    summary: RadicalSummary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    components: Vec<lattice_lab::workflows::ComponentReport>,
}

#[derive(Serialize)]
struct ScanOut {
    lattice: String,
    #[serde(flatten)]
    scan: ScanReport,
}

/// What a verb produced: JSON, text, and whether its checks passed.
struct Output {
    json: Value,
    text: String,
    pass: bool,
}

impl Output {
    fn new(value: &impl Serialize, text: String, pass: bool) -> Self {
        Output { json: serde_json::to_value(value).expect("reports serialize"), text, pass }
    }
}

fn sub_text(w: &SublatticeWitness) -> String {
    let [a, b, c] = &w.middles;
    let kind = format!("{:?}", w.kind).to_lowercase();
    format!("{kind} {} < {{{a}, {b}, {c}}} < {}", w.min, w.max)
}

fn report_text(r: &Report) -> String {
    let mut out = format!("lattice: {}\n", r.lattice);
    for c in &r.checks {
        out += &format!("[{}] {}", if c.pass { "pass" } else { "FAIL" }, c.name);
        if let Some(w) = &c.witness {
            out += &format!(": {w}");
        }
        out.push('\n');
    }
    for c in &r.components {
        out += &format!("component {{{}}} dim {} prime {}: {}\n", c.admissible.join(", "), c.dim, c.prime, c.generators.join(", "));
    }
    out
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.verb {
        Verb::Check(input) => {
            let (_, l) = load(input)?;
            let s = Structure {
                lattice: l.to_doc(),
                elements: l.len(),
                graded: l.is_graded(),
                height: l.height(),
                distributive: is_distributive(&l),
                modular: is_modular(&l),
                rank2_diamond: find_rank2_diamond(&l).ok(),
                join_irreducibles: l.join_irreducibles().into_iter().map(|x| l.name(x).to_string()).collect(),
                basic_binomials: l.incomparable_pairs().len(),
            };
            let mut text = format!(
                "elements: {}\ngraded: {}\nheight: {}\nbasic binomials: {}\njoin-irreducibles: {}\n",
                s.elements,
                s.graded,
                s.height,
                s.basic_binomials,
                s.join_irreducibles.join(", ")
            );
            text += &format!("distributive: {}", s.distributive.distributive);
            if let Some(w) = &s.distributive.sublattice {
                text += &format!(" ({})", sub_text(w));
            }
            text += &format!("\nmodular: {}", s.modular.modular);
            if let Some(w) = &s.modular.witness {
                text += &format!(" ({})", sub_text(w));
            }
            text.push('\n');
            if let Some(d) = &s.rank2_diamond {
                text += &format!("rank-2 diamond: [{}, {}] with atoms {}\n", d.bottom, d.top, d.atoms.join(", "));
            }
            Ok(Output::new(&s, text, true))
        }
        Verb::Gb { input, order } => {
            let (name, l) = load(input)?;
            let jm = join_meet_ideal_over(&l, parse_field(&input.field)?)?;
            let order = MonomialOrder::parse(&order.order, &jm.ring)?;
            let gb = jm.ideal.gb(&order)?;
            let verified = gb.verify();
            let out = BasisOut { lattice: name, order: order.descriptor(&jm.ring), basis: gb.to_strings(), verified };
            let text = format!("order: {}\n{}\n", out.order, out.basis.join("\n"));
            Ok(Output::new(&out, text, verified))
        }
        Verb::Ini { input, order } => {
            let (name, l) = load(input)?;
            let jm = join_meet_ideal_over(&l, parse_field(&input.field)?)?;
            let order = MonomialOrder::parse(&order.order, &jm.ring)?;
            let ini = jm.ideal.gb(&order)?.initial_ideal();
            let out = InitialOut {
                lattice: name,
                order: order.descriptor(&jm.ring),
                generators: ini.to_strings(&jm.ring),
                squarefree: ini.is_squarefree(),
                dim: ini.krull_dim(),
            };
            let text = format!(
                "order: {}\ngenerators: {}\nsquarefree: {}\ndim: {}\n",
                out.order,
                out.generators.join(", "),
                out.squarefree,
                out.dim
            );
            Ok(Output::new(&out, text, true))
        }
        Verb::Primes(input) => {
            let (name, l) = load(input)?;
            let d = decompose(&l)?;
            let mut r = Report::new(name);
            let all_prime = d.minimal.iter().all(|c| c.certified_prime);
            r.checks.push(Check::new("components certified prime", all_prime, None));
            r.checks.push(Check::new(
                "intersection equals the join-meet ideal",
                d.intersection_matches,
                (!d.intersection_matches).then(|| "the join-meet ideal is not radical or the list is incomplete".to_string()),
            ));
            r.components = d.minimal.iter().map(|c| c.report(&l)).collect::<Result<_, _>>()?;
            Ok(Output::new(&r, report_text(&r), r.passed()))
        }
        Verb::Radical { input, scan, degree_bound } => {
            let (name, l) = load(input)?;
            let opts = RadicalOptions {
                scan: ScanFamily { permutations: scan.permutations(), stop_at_first: true, ..Default::default() },
                degree_bound: *degree_bound,
            };
            let verdict = radical_certificate_with(&l, &opts)?;
            let components = match &verdict {
                lattice_lab::workflows::RadicalVerdict::Radical(RadicalRoute::PrimeIntersection { components }) => {
                    components.iter().map(|c| c.report(&l)).collect::<Result<_, _>>()?
                }
                _ => Vec::new(),
            };
            let out = RadicalOut { lattice: name, summary: verdict.summary(), components };
            let mut text = format!("{} (stage {})\n", out.summary.verdict, out.summary.stage);
            for (label, v) in [("order", &out.summary.order), ("witness", &out.summary.witness), ("reason", &out.summary.reason)] {
                if let Some(v) = v {
                    text += &format!("{label}: {v}\n");
                }
            }
            for c in &out.components {
                text += &format!("component {{{}}}: {}\n", c.admissible.join(", "), c.generators.join(", "));
            }
            Ok(Output::new(&out, text, true))
        }
        Verb::Scan { input, scan, first, verdicts } => {
            let (name, l) = load(input)?;
            let family = ScanFamily {
                permutations: scan.permutations(),
                stop_at_first: *first,
                record_verdicts: *verdicts,
                ..Default::default()
            };
            let report = squarefree_order_scan(&l, &family)?;
            let mut text = format!(
                "family: {}\norders checked: {}\nsquarefree orders: {}\n",
                report.family, report.orders_checked, report.squarefree_orders
            );
            if let Some(w) = &report.witness {
                text += &format!("witness: {w}\n");
            }
            for v in &report.verdicts {
                text += &format!("{} {}\n", if v.squarefree { "squarefree" } else { "-" }, v.order);
            }
            Ok(Output::new(&ScanOut { lattice: name, scan: report }, text, true))
        }
        Verb::Lk { n, k } => {
            let mut r = lk_suite(*n, *k)?;
            if !cli.timings {
                r.timings = None;
            }
            Ok(Output::new(&r, report_text(&r), r.passed()))
        }
        Verb::Fixtures { dump } => match dump {
            Some(spec) => {
                let f: Fixture = spec.parse()?;
                let l = build_fixture(&f)?;
                Ok(Output { json: serde_json::to_value(l.to_doc()).expect("doc"), text: l.to_json() + "\n", pass: true })
            }
            None => {
                let names = Fixture::catalogue();
                Ok(Output::new(&names, names.join("\n") + "\n", true))
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    let dumping = matches!(cli.verb, Verb::Fixtures { dump: Some(_) });
    match run(&cli) {
        Ok(mut out) => {
            // a closed pipe is not worth a panic
            let mut stdout = std::io::stdout().lock();
            if cli.json && !dumping {
                if cli.timings {
                    if let Value::Object(map) = &mut out.json {
                        let timings = map.entry("timings").or_insert_with(|| serde_json::json!({}));
                        if let Value::Object(t) = timings {
                            t.insert("total".into(), start.elapsed().as_secs_f64().into());
                        }
                    }
                }
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                let _ = write!(stdout, "{}", out.text);
                if cli.timings && !dumping {
                    let _ = writeln!(stdout, "time: {:.3}s", start.elapsed().as_secs_f64());
                }
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
