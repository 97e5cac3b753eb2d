use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use markov_quivers::classify::geometry::{
    component_of, component_table, singular_points, slice_classify, Component, ComponentCounts,
    Field, SliceKind,
};
use markov_quivers::hochschild::{
    check_dimension_identity, dim_h1, hereditary_candidates, path_counts, AcyclicQuiver3,
    DimensionCheck, PathCounts,
};
use markov_quivers::orbits::{
    acyclic_representatives, cyclic_representatives, enumerate_orbit, export_dot,
    summarize_orbit, AcyclicClass, CyclicRepresentatives, OrbitBounds,
};
use markov_quivers::spectral::{cartan, char_poly, coxeter, spectrum, CharPoly, CoxeterSpectrum};
use markov_quivers::triple::{decimal, parse_integer};
use markov_quivers::verify::{self, VerifyConfig};
use markov_quivers::{
    descend, in_fundamental_domain, in_open_domain, Error, GroupWord, Letter, MCase, Triple,
};
use num_bigint::BigInt;
use serde::Serialize;

/// Cluster-cyclic and cluster-acyclic quivers with three vertices.
#[derive(Parser)]
#[command(name = "markov3", version, about)]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    pretty: bool,

    /// JSON output (the default).
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TripleArgs {
    #[arg(value_parser = integer, allow_negative_numbers = true)]
    x: BigInt,
    #[arg(value_parser = integer, allow_negative_numbers = true)]
    y: BigInt,
    #[arg(value_parser = integer, allow_negative_numbers = true)]
    z: BigInt,
}

impl TripleArgs {
    fn triple(&self) -> Triple {
        Triple::new(self.x.clone(), self.y.clone(), self.z.clone())
    }
}

#[derive(Args)]
struct BoundArgs {
    /// Skip triples with an entry larger than this in absolute value.
    #[arg(long, value_parser = integer)]
    max_abs: Option<BigInt>,
    #[arg(long, default_value_t = 1000)]
    max_nodes: usize,
    /// Stop after this many breadth-first layers.
    #[arg(long)]
    depth: Option<usize>,
}

impl BoundArgs {
    fn bounds(&self) -> OrbitBounds {
        OrbitBounds {
            max_abs: self.max_abs.clone(),
            max_nodes: self.max_nodes,
            max_depth: self.depth,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide cluster-cyclic or cluster-acyclic by mutation descent.
    Decide(TripleArgs),
    /// Print every step of the descent.
    Descend(TripleArgs),
    /// Walk the orbit and print a summary line.
    Orbit {
        #[command(flatten)]
        triple: TripleArgs,
        #[command(flatten)]
        bounds: BoundArgs,
        /// Also write the orbit graph in DOT format.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Orbit representatives for one Markov constant.
    Reps {
        #[arg(long, value_parser = integer, allow_negative_numbers = true)]
        constant: BigInt,
        /// Only list the acyclic classes (needed for C = 4).
        #[arg(long)]
        acyclic_only: bool,
        #[arg(long, value_parser = integer, default_value = "64")]
        max_abs: BigInt,
        #[arg(long, default_value_t = 10_000)]
        max_nodes: usize,
    },
    /// Markov constant, M-case and fundamental domain membership.
    Constant {
        #[command(flatten)]
        triple: TripleArgs,
        /// Comma-separated word such as `mu1,swap12`, applied left to right.
        #[arg(long)]
        word: Option<GroupWord>,
    },
    /// Coxeter matrix invariants and eigenvalues.
    Spectrum(TripleArgs),
    /// The conic obtained by fixing z on the level set C.
    Slice {
        #[arg(value_parser = integer, allow_negative_numbers = true)]
        constant: BigInt,
        #[arg(value_parser = integer, allow_negative_numbers = true)]
        z: BigInt,
        /// A real point whose component should be reported.
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_negative_numbers = true)]
        point: Option<Vec<f64>>,
    },
    /// dim H^1 of the path algebra of Q(r, s, t).
    Hochschild {
        #[arg(value_parser = integer)]
        r: BigInt,
        #[arg(value_parser = integer)]
        s: BigInt,
        #[arg(value_parser = integer)]
        t: BigInt,
    },
    /// Hereditary algebras Q(r, s, t) with r^2 + s^2 + t^2 + rst = C.
    Candidates {
        #[arg(value_parser = integer, allow_negative_numbers = true)]
        constant: BigInt,
    },
    /// Re-check all theorem equivalences on a box.
    Verify {
        #[arg(long = "box", value_parser = clap::value_parser!(i64).range(5..))]
        box_size: i64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Print the orbit graph in DOT format.
    Dot {
        #[command(flatten)]
        triple: TripleArgs,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

fn integer(s: &str) -> Result<BigInt, String> {
    parse_integer(s).map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(io::Error),
    Refused(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "{e}"),
            Failure::Refused(msg) => f.write_str(msg),
        }
    }
}

struct Out {
    pretty: bool,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn json<T: Serialize>(&mut self, value: &T) -> io::Result<()> {
        let line = serde_json::to_string(value).expect("plain data serializes");
        writeln!(self.stdout, "{line}")
    }

    fn line(&mut self, text: impl std::fmt::Display) -> io::Result<()> {
        writeln!(self.stdout, "{text}")
    }
}

#[derive(Serialize)]
struct DescentStep {
    step: usize,
    letter: Option<Letter>,
    triple: Triple,
}

#[derive(Serialize)]
struct ConstantReport {
    triple: Triple,
    #[serde(with = "decimal")]
    constant: BigInt,
    m_case: MCase,
    in_fundamental_domain: bool,
    in_open_domain: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<Triple>,
}

#[derive(Serialize)]
struct SpectrumReport {
    triple: Triple,
    #[serde(with = "decimal")]
    trace: BigInt,
    #[serde(with = "decimal")]
    determinant: BigInt,
    char_poly: CharPoly,
    spectrum: CoxeterSpectrum,
}

#[derive(Serialize)]
struct SliceReport {
    #[serde(with = "decimal")]
    constant: BigInt,
    #[serde(with = "decimal")]
    z: BigInt,
    slice: SliceKind,
    singular_real: Vec<Triple>,
    singular_complex: Vec<Triple>,
    components: ComponentCounts,
    #[serde(skip_serializing_if = "Option::is_none")]
    component: Option<Component>,
}

#[derive(Serialize)]
struct HochschildReport {
    quiver: AcyclicQuiver3,
    connected: bool,
    path_counts: PathCounts,
    #[serde(with = "decimal")]
    dim_h1: BigInt,
    check: Option<DimensionCheck>,
}

#[derive(Serialize)]
struct Candidate {
    quiver: AcyclicQuiver3,
    cyclic: Triple,
    #[serde(with = "decimal")]
    dim_h1: BigInt,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RepLine<'a> {
    Cyclic { representative: &'a Triple },
    Acyclic(&'a AcyclicClass),
}

fn run(cli: Cli, out: &mut Out) -> Result<(), Failure> {
    match cli.command {
        Command::Decide(args) => {
            let c = descend(&args.triple())?;
            if out.pretty {
                out.line(format_args!("verdict         {:?}", c.verdict))?;
                out.line(format_args!("constant        {}", c.constant))?;
                out.line(format_args!("representative  {}", c.representative))?;
                out.line(format_args!("witness         {}", c.witness))?;
            } else {
                out.json(&c)?;
            }
        }
        Command::Descend(args) => {
            let start = args.triple();
            let c = descend(&start)?;
            let mut current = start;
            let mut steps = vec![DescentStep {
                step: 0,
                letter: None,
                triple: current.clone(),
            }];
            for (i, letter) in c.witness.letters().iter().enumerate() {
                current = letter.apply(&current);
                steps.push(DescentStep {
                    step: i + 1,
                    letter: Some(*letter),
                    triple: current.clone(),
                });
            }
            for s in &steps {
                if out.pretty {
                    let name = s.letter.map_or("start", Letter::name);
                    out.line(format_args!("{:>4}  {:<7} {}", s.step, name, s.triple))?;
                } else {
                    out.json(s)?;
                }
            }
            if out.pretty {
                out.line(format_args!("verdict: {:?}", c.verdict))?;
            }
        }
        Command::Orbit {
            triple,
            bounds,
            dot,
        } => {
            let seed = triple.triple();
            let bounds = bounds.bounds();
            let summary = summarize_orbit(&seed, &bounds);
            if let Some(path) = dot {
                fs::write(path, export_dot(&enumerate_orbit(&seed, &bounds)))?;
            }
            if out.pretty {
                out.line(format_args!("seed            {}", summary.seed))?;
                out.line(format_args!("constant        {}", summary.constant))?;
                out.line(format_args!("verdict         {:?}", summary.verdict))?;
                out.line(format_args!("representative  {}", summary.representative))?;
                out.line(format_args!("elements found  {}", summary.elements_found))?;
                out.line(format_args!("finite          {:?}", summary.is_finite))?;
            } else {
                out.json(&summary)?;
            }
        }
        Command::Reps {
            constant,
            acyclic_only,
            max_abs,
            max_nodes,
        } => {
            let cyclic = if acyclic_only {
                Vec::new()
            } else {
                match cyclic_representatives(&constant) {
                    CyclicRepresentatives::Finite(reps) => reps,
                    CyclicRepresentatives::UUTwoFamily => {
                        return Err(Failure::Refused(
                            "C = 4: the cluster-cyclic representatives are the infinite family \
                             (x, x, 2) with x >= 2; pass --acyclic-only for the acyclic classes"
                                .into(),
                        ))
                    }
                }
            };
            let classes = acyclic_representatives(&constant, &OrbitBounds::boxed(max_abs, max_nodes));
            for t in &cyclic {
                if out.pretty {
                    out.line(format_args!("cyclic   {t}"))?;
                } else {
                    out.json(&RepLine::Cyclic { representative: t })?;
                }
            }
            for class in &classes {
                if out.pretty {
                    let members: Vec<String> =
                        class.nonnegative_members.iter().map(Triple::to_string).collect();
                    out.line(format_args!(
                        "acyclic  {}  non-negative members: {}",
                        class.representative,
                        members.join(" ")
                    ))?;
                } else {
                    out.json(&RepLine::Acyclic(class))?;
                }
            }
        }
        Command::Constant { triple, word } => {
            let t = triple.triple();
            let report = ConstantReport {
                constant: t.markov_constant(),
                m_case: t.m_case(),
                in_fundamental_domain: in_fundamental_domain(&t),
                in_open_domain: in_open_domain(&t),
                image: word.map(|w| t.apply_word(&w)),
                triple: t,
            };
            if out.pretty {
                out.line(format_args!("triple    {}", report.triple))?;
                out.line(format_args!("constant  {}", report.constant))?;
                out.line(format_args!("case      {:?}", report.m_case))?;
                out.line(format_args!("in F      {}", report.in_fundamental_domain))?;
                out.line(format_args!("in F°     {}", report.in_open_domain))?;
                if let Some(image) = &report.image {
                    out.line(format_args!("image     {image}"))?;
                }
            } else {
                out.json(&report)?;
            }
        }
        Command::Spectrum(args) => {
            let t = args.triple();
            let phi = coxeter(&cartan(&t));
            let report = SpectrumReport {
                trace: phi.trace(),
                determinant: phi.determinant(),
                char_poly: char_poly(&phi),
                spectrum: spectrum(&t),
                triple: t,
            };
            if out.pretty {
                let [c0, c1, c2, c3] = &report.char_poly.coeffs;
                let s = &report.spectrum;
                out.line(format_args!("trace        {}", report.trace))?;
                out.line(format_args!("determinant  {}", report.determinant))?;
                out.line(format_args!("char poly    {c3} T^3 + {c2} T^2 + {c1} T + {c0}"))?;
                out.line(format_args!("lambda       {}", s.lambda))?;
                out.line(format_args!("1/lambda     {}", s.lambda_inverse))?;
                out.line(format_args!("regime       {:?}", s.regime))?;
            } else {
                out.json(&report)?;
            }
        }
        Command::Slice {
            constant,
            z,
            point,
        } => {
            let component = match point {
                Some(p) => Some(component_of([p[0], p[1], p[2]])?),
                None => None,
            };
            let report = SliceReport {
                slice: slice_classify(&constant, &z),
                singular_real: singular_points(&constant, Field::Real),
                singular_complex: singular_points(&constant, Field::Complex),
                components: component_table(&constant),
                component,
                constant,
                z,
            };
            if out.pretty {
                let list = |v: &[Triple]| v.iter().map(Triple::to_string).collect::<Vec<_>>().join(" ");
                let k = report.components;
                out.line(format_args!("slice             {:?}", report.slice))?;
                out.line(format_args!("singular (real)   {}", list(&report.singular_real)))?;
                out.line(format_args!("singular (cplx)   {}", list(&report.singular_complex)))?;
                out.line(format_args!(
                    "components        {} total, {} smooth part, {} compact",
                    k.total, k.smooth_part, k.compact
                ))?;
                if let Some(c) = report.component {
                    out.line(format_args!("point component   {c:?}"))?;
                }
            } else {
                out.json(&report)?;
            }
        }
        Command::Hochschild { r, s, t } => {
            let q = AcyclicQuiver3::new(r, s, t)?;
            let check = match check_dimension_identity(&q) {
                Ok(c) => Some(c),
                Err(Error::Disconnected { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let report = HochschildReport {
                connected: q.is_connected(),
                path_counts: path_counts(&q),
                dim_h1: dim_h1(&q),
                check,
                quiver: q,
            };
            if out.pretty {
                out.line(format_args!("quiver    {}", report.quiver))?;
                out.line(format_args!("dim H^1   {}", report.dim_h1))?;
                match &report.check {
                    Some(c) => {
                        out.line(format_args!("mutated   {}", c.cyclic))?;
                        out.line(format_args!("constant  {}", c.constant))?;
                        out.line(format_args!("C - 2 = dim H^1: {}", c.holds))?;
                    }
                    None => out.line("not connected; no cyclic mutation")?,
                }
            } else {
                out.json(&report)?;
            }
        }
        Command::Candidates { constant } => {
            for q in hereditary_candidates(&constant) {
                let check = check_dimension_identity(&q)?;
                let line = Candidate {
                    dim_h1: check.dim_h1,
                    cyclic: check.cyclic,
                    quiver: q,
                };
                if out.pretty {
                    out.line(format_args!("{}  dim H^1 = {}  cyclic {}", line.quiver, line.dim_h1, line.cyclic))?;
                } else {
                    out.json(&line)?;
                }
            }
        }
        Command::Verify { box_size, samples } => {
            let config = VerifyConfig {
                orbit_samples: samples,
                ..VerifyConfig::new(box_size)
            };
            let report = verify::run(&config);
            if out.pretty {
                out.line(format_args!("box {}", report.box_size))?;
                for check in &report.checks {
                    let status = if check.passed() { "ok" } else { "FAILED" };
                    out.line(format_args!(
                        "{:<28} {:>9} cases  {:>3} mismatches  {status}",
                        check.name, check.cases, check.mismatches
                    ))?;
                    for example in &check.counterexamples {
                        out.line(format_args!("    {example}"))?;
                    }
                }
            } else {
                out.json(&report)?;
            }
        }
        Command::Dot { triple, bounds } => {
            let graph = enumerate_orbit(&triple.triple(), &bounds.bounds());
            write!(out.stdout, "{}", export_dot(&graph))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        pretty: cli.pretty,
        stdout: io::stdout().lock(),
    };
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.stdout.flush();
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
