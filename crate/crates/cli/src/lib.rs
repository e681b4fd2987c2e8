//! Front end for the `oddhole` binary: argument types, verb dispatch, the
//! `--oracle` cross-checks and report rendering.

mod report;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use oddhole::algebra::text::parse_ideal;
use oddhole::algebra::{
    associated_primes, intersect_components, irreducible_decomposition, irreducible_decomposition_by_splitting,
    primes_of, default_variable_names, IrreducibleComponent, Monomial, MonomialIdeal, MonomialPrime,
};
use oddhole::covers::{decompose_2cover, minimal_vertex_covers, minimal_vertex_covers_by_duality, symbolic_square};
use oddhole::detection::{is_perfect, Analysis};
use oddhole::graph::{count_triangles, enumerate_induced_odd_cycles, is_bipartite, parse_graph, Graph, VertexSet};
use oddhole::Error;

pub use report::{render_text, Document, GraphSummary, IdealSummary, MultiplicityOut, Payload, PrimeOut, WitnessOut};

#[derive(Parser, Debug)]
#[command(name = "oddhole", version, about = "Odd holes and perfection through the associated primes of J^2")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Recompute through the graph-side oracle and fail on any difference.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Name ideal variables after the vertex labels instead of x1..xn.
    #[arg(long, global = true)]
    pub labels: bool,

    /// How monomials are written.
    #[arg(long, global = true, value_enum, default_value_t = Syntax::Human)]
    pub monomials: Syntax,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Syntax {
    /// `x1^2*x3`
    Human,
    /// `2 0 1`
    Exponents,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Both,
    Graph,
    Complement,
}

#[derive(Args, Debug)]
pub struct GraphInput {
    /// Edge list or DIMACS file; `-` reads standard input.
    pub path: PathBuf,
}

#[derive(Args, Debug)]
pub struct AlgebraInput {
    /// Graph file, or an ideal file with `--ideal`; `-` reads standard input.
    pub path: PathBuf,

    /// Treat the input as a monomial ideal, one generator per line.
    #[arg(long)]
    pub ideal: bool,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Odd holes (odd induced cycles of length at least 5); exit 1 if any exist.
    OddHoles {
        #[command(flatten)]
        input: GraphInput,
        /// Only report holes at least this long.
        #[arg(long)]
        min_length: Option<usize>,
    },
    /// Odd induced cycles of length at least --min-length.
    OddCycles {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 3)]
        min_length: usize,
    },
    /// Perfection of the graph; exit 1 with a witness hole if imperfect.
    Perfect {
        #[command(flatten)]
        input: GraphInput,
        /// Which of the graph and its complement to search.
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Associated primes of J^2, or of the given ideal.
    Ass(AlgebraInput),
    /// Irreducible components of J^2, or of the given ideal.
    Decompose(AlgebraInput),
    /// Minimal vertex covers, the generators of J.
    Covers(GraphInput),
    /// Generators of the symbolic square J^(2), marking those outside J^2.
    SymbolicSquare(GraphInput),
    /// The second secant ideal of the edge ideal.
    Secant(GraphInput),
    /// Arithmetic degree of J^2 against 3|E| + t; exit 1 if an odd hole forces inequality.
    Adeg(GraphInput),
    /// Degree of J^2.
    Degree(GraphInput),
    /// Whether J^2:(L_t) = J^2; exit 1 if not.
    SaturationTest {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 4)]
        min_length: usize,
    },
    /// Depth and projective dimension bounds for R/J^2.
    Bounds(GraphInput),
}

impl Verb {
    pub fn name(&self) -> &'static str {
        match self {
            Verb::OddHoles { .. } => "odd-holes",
            Verb::OddCycles { .. } => "odd-cycles",
            Verb::Perfect { .. } => "perfect",
            Verb::Ass(_) => "ass",
            Verb::Decompose(_) => "decompose",
            Verb::Covers(_) => "covers",
            Verb::SymbolicSquare(_) => "symbolic-square",
            Verb::Secant(_) => "secant",
            Verb::Adeg(_) => "adeg",
            Verb::Degree(_) => "degree",
            Verb::SaturationTest { .. } => "saturation-test",
            Verb::Bounds(_) => "bounds",
        }
    }
}

/// Successful run: rendered report and exit status (0 property holds, 1 fails).
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

/// Failed run: 2 for input and usage problems, 3 when a cross-check fails.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub status: u8,
}

pub const STATUS_USAGE: u8 = 2;
pub const STATUS_MISMATCH: u8 = 3;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if matches!(e, Error::Inconsistency(_)) { STATUS_MISMATCH } else { STATUS_USAGE };
        Failure { message: e.to_string(), status }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { message: message.into(), status: STATUS_USAGE }
}

fn mismatch(message: impl Into<String>) -> Failure {
    Failure { message: format!("oracle mismatch: {}", message.into()), status: STATUS_MISMATCH }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| usage(format!("standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    parse_graph(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Variable names for a graph: `x1..xn`, or the vertex labels with `--labels`
/// (numeric labels keep an `x` prefix).
fn variable_names(g: &Graph, labels: bool) -> Vec<String> {
    if !labels {
        return default_variable_names(g.n());
    }
    g.labels()
        .iter()
        .map(|l| if l.chars().all(|c| c.is_ascii_digit()) { format!("x{l}") } else { l.clone() })
        .collect()
}

struct Style {
    names: Vec<String>,
    syntax: Syntax,
}

impl Style {
    fn monomial<E: oddhole::Exponent>(&self, m: &Monomial<E>) -> String {
        match self.syntax {
            Syntax::Human => m.format_with(&self.names),
            Syntax::Exponents => exponents(m),
        }
    }

    fn component<E: oddhole::Exponent>(&self, c: &IrreducibleComponent<E>) -> String {
        match self.syntax {
            Syntax::Human => c.format_with(&self.names),
            Syntax::Exponents => exponents(c.exponents()),
        }
    }
}

fn exponents<E: oddhole::Exponent>(m: &Monomial<E>) -> String {
    m.exponents().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn set_labels(g: &Graph, s: VertexSet) -> Vec<String> {
    s.iter().map(|v| g.label(v).to_string()).collect()
}

fn prime_out(p: &MonomialPrime, names: &[String]) -> PrimeOut {
    PrimeOut { variables: p.support.iter().map(|i| names[i].clone()).collect(), height: p.height() }
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let verb = &cli.verb;
    match verb {
        Verb::Ass(input) | Verb::Decompose(input) if input.ideal => return run_on_ideal(cli, input),
        _ => {}
    }
    let path = match verb {
        Verb::OddHoles { input, .. }
        | Verb::OddCycles { input, .. }
        | Verb::Perfect { input, .. }
        | Verb::SaturationTest { input, .. } => &input.path,
        Verb::Ass(a) | Verb::Decompose(a) => &a.path,
        Verb::Covers(i) | Verb::SymbolicSquare(i) | Verb::Secant(i) | Verb::Adeg(i) | Verb::Degree(i) | Verb::Bounds(i) => {
            &i.path
        }
    };
    let g = load_graph(path)?;
    let style = Style { names: variable_names(&g, cli.labels), syntax: cli.monomials };
    let start = Instant::now();
    let payload = graph_payload(verb, &g, &style)?;
    let timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    let oracle = if cli.oracle {
        graph_oracle(verb, &g, &payload)?;
        Some("agree".to_string())
    } else {
        None
    };
    let summary = GraphSummary { vertices: g.n(), edges: g.edge_count(), labels: g.labels().to_vec() };
    let doc = Document { verb: verb.name().to_string(), graph: Some(summary), ideal: None, result: payload, timing_ms, oracle };
    finish(cli, &doc)
}

fn finish(cli: &Cli, doc: &Document) -> Result<Outcome, Failure> {
    let output = match cli.format {
        Format::Text => report::render_text(doc),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).map_err(|e| usage(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    Ok(Outcome { output, status: if doc.result.property_holds() { 0 } else { 1 } })
}

fn graph_payload(verb: &Verb, g: &Graph, style: &Style) -> Result<Payload, Failure> {
    let payload = match verb {
        Verb::OddHoles { min_length, .. } => {
            let floor = min_length.unwrap_or(5).max(5);
            let report = Analysis::new(g)?.odd_cycles()?;
            let holes = report.holes().filter(|s| s.len() >= floor).map(|s| set_labels(g, s)).collect();
            Payload::OddHoles { min_length: floor, holes }
        }
        Verb::OddCycles { min_length, .. } => {
            let report = Analysis::new(g)?.odd_cycles()?;
            let cycles = report.odd_cycles.iter().filter(|s| s.len() >= *min_length).map(|&s| set_labels(g, s)).collect();
            Payload::OddCycles { min_length: *min_length, cycles }
        }
        Verb::Perfect { side, .. } => perfect_payload(g, *side)?,
        Verb::Ass(_) => {
            let a = Analysis::new(g)?;
            Payload::Ass { primes: a.associated_primes().iter().map(|p| prime_out(p, &style.names)).collect() }
        }
        Verb::Decompose(_) => {
            let a = Analysis::new(g)?;
            Payload::Decompose { components: a.components().iter().map(|c| style.component(c)).collect() }
        }
        Verb::Covers(_) => {
            let covers = minimal_vertex_covers(g)?;
            Payload::Covers { covers: covers.iter().map(|&c| set_labels(g, c)).collect() }
        }
        Verb::SymbolicSquare(_) => {
            let square = Analysis::new(g)?.cover_square().clone();
            let symbolic = symbolic_square::<u8>(g)?;
            let outside = symbolic.gens().iter().filter(|m| !square.contains(m)).map(|m| style.monomial(m)).collect();
            Payload::SymbolicSquare {
                generators: symbolic.gens().iter().map(|m| style.monomial(m)).collect(),
                outside_square: outside,
                equals_square: symbolic == square,
            }
        }
        Verb::Secant(_) => {
            let secant = Analysis::new(g)?.secant_ideal()?;
            Payload::Secant { generators: secant.gens().iter().map(|m| style.monomial(m)).collect() }
        }
        Verb::Adeg(_) => {
            let a = Analysis::new(g)?;
            let report = a.adeg_test()?;
            let multiplicities = a
                .multiplicities()
                .into_iter()
                .map(|(p, m)| report::MultiplicityOut { prime: prime_out(&p, &style.names), multiplicity: m })
                .collect();
            Payload::Adeg {
                adeg: report.adeg,
                expected: report.expected,
                edges: g.edge_count(),
                triangles: count_triangles(g),
                odd_hole_free: report.odd_hole_free,
                multiplicities,
            }
        }
        Verb::Degree(_) => Payload::Degree { degree: Analysis::new(g)?.degree_check()?, edges: g.edge_count() },
        Verb::SaturationTest { min_length, .. } => {
            if *min_length <= 1 {
                return Err(usage(format!("--min-length must exceed 1, got {min_length}")));
            }
            Payload::SaturationTest { min_length: *min_length, equal: Analysis::new(g)?.saturation_test(*min_length)? }
        }
        Verb::Bounds(_) => {
            let bounds = Analysis::new(g)?.depth_bounds()?;
            Payload::Bounds {
                vertices: g.n(),
                longest_odd_cycle: bounds.map(|b| b.longest_odd_cycle),
                depth_upper: bounds.map(|b| b.depth_upper),
                projdim_lower: bounds.map(|b| b.projdim_lower),
            }
        }
    };
    Ok(payload)
}

fn perfect_payload(g: &Graph, side: Side) -> Result<Payload, Failure> {
    let holes_in = |h: &Graph| -> Result<Option<VertexSet>, Failure> {
        if h.edge_count() == 0 {
            return Ok(None);
        }
        Ok(Analysis::new(h)?.smallest_hole()?)
    };
    let witness = match side {
        Side::Both => {
            let verdict = is_perfect(g)?;
            verdict.witness.map(|w| (w.vertices, w.in_complement))
        }
        Side::Graph => holes_in(g)?.map(|s| (s, false)),
        Side::Complement => holes_in(&g.complement())?.map(|s| (s, true)),
    };
    Ok(Payload::Perfect {
        side: format!("{side:?}").to_lowercase(),
        perfect: witness.is_none(),
        witness: witness.map(|(s, in_complement)| WitnessOut { vertices: set_labels(g, s), in_complement }),
    })
}

fn labelled_cycles(g: &Graph, min_len: usize) -> Vec<Vec<String>> {
    enumerate_induced_odd_cycles(g, min_len).into_iter().map(|s| set_labels(g, s)).collect()
}

/// Recomputes each verb's content from the graph alone and compares.
fn graph_oracle(verb: &Verb, g: &Graph, payload: &Payload) -> Result<(), Failure> {
    let cycles = enumerate_induced_odd_cycles(g, 3);
    let holes = || cycles.iter().copied().filter(|s| s.len() >= 5);
    let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(mismatch(what.to_string())) };
    match (verb, payload) {
        (Verb::OddHoles { .. }, Payload::OddHoles { min_length, holes: got }) => {
            check(got == &labelled_cycles(g, *min_length), "odd holes differ from induced-cycle search")
        }
        (Verb::OddCycles { .. }, Payload::OddCycles { min_length, cycles: got }) => {
            check(got == &labelled_cycles(g, *min_length), "odd cycles differ from induced-cycle search")
        }
        (Verb::Perfect { side, .. }, Payload::Perfect { witness, .. }) => {
            let least = |h: &Graph| enumerate_induced_odd_cycles(h, 5).into_iter().min_by_key(|s| (s.len(), *s));
            let direct = || least(g).map(|s| (s, false));
            let dual = || least(&g.complement()).map(|s| (s, true));
            let want = match side {
                Side::Both => direct().or_else(dual),
                Side::Graph => direct(),
                Side::Complement => dual(),
            };
            let want = want.map(|(s, in_complement)| WitnessOut { vertices: set_labels(g, s), in_complement });
            check(witness == &want, "perfection witness differs from induced-cycle search")
        }
        (Verb::Ass(_), Payload::Ass { primes }) => {
            let mut want: Vec<Vec<String>> = g
                .edges()
                .map(|(i, j)| VertexSet::singleton(i).with(j))
                .chain(cycles.iter().copied())
                .map(|s| set_labels(g, s))
                .collect();
            want.sort();
            let a = Analysis::new(g)?;
            let mut got: Vec<Vec<String>> = a.associated_primes().iter().map(|p| set_labels(g, p.support)).collect();
            got.sort();
            check(got == want && primes.len() == want.len(), "associated primes are not the edges and odd cycles")
        }
        (Verb::Decompose(_), Payload::Decompose { .. }) => {
            let a = Analysis::new(g)?;
            let mut want: Vec<VertexSet> = g.edges().map(|(i, j)| VertexSet::singleton(i).with(j)).collect();
            want.extend(cycles.iter().copied());
            want.sort();
            let got: Vec<VertexSet> = primes_of(a.components()).iter().map(|p| p.support).collect();
            check(got == want, "component radicals are not the edges and odd cycles")?;
            check(&intersect_components(g.n(), a.components()) == a.cover_square(), "components do not intersect to J^2")
        }
        (Verb::Covers(_), Payload::Covers { .. }) => {
            check(minimal_vertex_covers(g)? == minimal_vertex_covers_by_duality(g)?, "cover search differs from the dual of the edge ideal")
        }
        (Verb::SymbolicSquare(_), Payload::SymbolicSquare { equals_square, .. }) => {
            check(*equals_square == is_bipartite(g).is_bipartite(), "J^(2) = J^2 disagrees with bipartiteness")?;
            let square = Analysis::new(g)?.cover_square().clone();
            let symbolic = symbolic_square::<u8>(g)?;
            for m in symbolic.gens().iter().filter(|m| !square.contains(m)) {
                check(decompose_2cover(g, m)?.is_irreducible(), "a generator outside J^2 is a reducible 2-cover")?;
            }
            Ok(())
        }
        (Verb::Secant(_), Payload::Secant { .. }) => {
            let n = g.n();
            let want = MonomialIdeal::minimalize(n, cycles.iter().map(|&s| Monomial::<u8>::squarefree(n, s)))?;
            check(Analysis::new(g)?.secant_ideal()? == want, "secant generators differ from odd-cycle products")
        }
        (Verb::Adeg(_), Payload::Adeg { expected, odd_hole_free, .. }) => {
            let triangles = cycles.iter().filter(|s| s.len() == 3).count() as u64;
            check(*expected == 3 * g.edge_count() as u64 + triangles, "triangle count differs")?;
            check(*odd_hole_free == holes().next().is_none(), "arithmetic degree verdict differs from hole search")
        }
        (Verb::Degree(_), Payload::Degree { degree, edges }) => check(*degree == 3 * *edges as u64, "degree is not 3|E|"),
        (Verb::SaturationTest { .. }, Payload::SaturationTest { min_length, equal }) => {
            check(*equal == cycles.iter().all(|s| s.len() < *min_length), "saturation verdict differs from induced-cycle search")
        }
        (Verb::Bounds(_), Payload::Bounds { longest_odd_cycle, .. }) => {
            check(*longest_odd_cycle == cycles.iter().map(|s| s.len()).max(), "longest odd cycle differs")
        }
        _ => Err(mismatch("payload does not match the verb")),
    }
}

fn run_on_ideal(cli: &Cli, input: &AlgebraInput) -> Result<Outcome, Failure> {
    let text = read_input(&input.path)?;
    let ideal = parse_ideal::<u32>(&text, None).map_err(|e| usage(format!("{}: {e}", input.path.display())))?;
    let style = Style { names: default_variable_names(ideal.ambient()), syntax: cli.monomials };
    let start = Instant::now();
    let components = irreducible_decomposition(&ideal)?;
    let payload = match cli.verb {
        Verb::Ass(_) => Payload::Ass { primes: primes_of(&components).iter().map(|p| prime_out(p, &style.names)).collect() },
        _ => Payload::Decompose { components: components.iter().map(|c| style.component(c)).collect() },
    };
    let timing_ms = start.elapsed().as_secs_f64() * 1000.0;
    let oracle = if cli.oracle {
        if irreducible_decomposition_by_splitting(&ideal)? != components {
            return Err(mismatch("splitting decomposition differs"));
        }
        if intersect_components(ideal.ambient(), &components) != ideal {
            return Err(mismatch("components do not intersect to the ideal"));
        }
        if associated_primes(&ideal)? != primes_of(&components) {
            return Err(mismatch("associated primes differ"));
        }
        Some("agree".to_string())
    } else {
        None
    };
    let summary = IdealSummary { variables: ideal.ambient(), generators: ideal.len() };
    let doc = Document { verb: cli.verb.name().to_string(), graph: None, ideal: Some(summary), result: payload, timing_ms, oracle };
    finish(cli, &doc)
}
