//! Report documents and their text rendering. Text is rendered from the same
//! payload that the JSON form serializes, so both carry the same content.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub verb: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<IdealSummary>,
    pub result: Payload,
    pub timing_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSummary {
    pub variables: usize,
    pub generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOut {
    pub variables: Vec<String>,
    pub height: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub vertices: Vec<String>,
    pub in_complement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityOut {
    pub prime: PrimeOut,
    pub multiplicity: u64,
}

/// Vertex sets are lists of vertex labels; monomials and components are
/// strings in the requested syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    OddHoles { min_length: usize, holes: Vec<Vec<String>> },
    OddCycles { min_length: usize, cycles: Vec<Vec<String>> },
    Perfect { side: String, perfect: bool, witness: Option<WitnessOut> },
    Ass { primes: Vec<PrimeOut> },
    Decompose { components: Vec<String> },
    Covers { covers: Vec<Vec<String>> },
    SymbolicSquare { generators: Vec<String>, outside_square: Vec<String>, equals_square: bool },
    Secant { generators: Vec<String> },
    Adeg {
        adeg: u64,
        expected: u64,
        edges: usize,
        triangles: usize,
        odd_hole_free: bool,
        multiplicities: Vec<MultiplicityOut>,
    },
    Degree { degree: u64, edges: usize },
    SaturationTest { min_length: usize, equal: bool },
    Bounds {
        vertices: usize,
        longest_odd_cycle: Option<usize>,
        depth_upper: Option<usize>,
        projdim_lower: Option<usize>,
    },
}

impl Payload {
    /// Drives the exit status of the yes/no verbs.
    pub fn property_holds(&self) -> bool {
        match self {
            Payload::OddHoles { holes, .. } => holes.is_empty(),
            Payload::Perfect { perfect, .. } => *perfect,
            Payload::Adeg { odd_hole_free, .. } => *odd_hole_free,
            Payload::SaturationTest { equal, .. } => *equal,
            _ => true,
        }
    }
}

fn set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn prime(p: &PrimeOut) -> String {
    format!("({})", p.variables.join(", "))
}

fn plural(k: usize, one: &str, many: &str) -> String {
    format!("{k} {}", if k == 1 { one } else { many })
}

pub fn render_text(doc: &Document) -> String {
    let mut out: Vec<String> = Vec::new();
    match &doc.result {
        Payload::OddHoles { min_length, holes } => {
            out.extend(holes.iter().map(|h| set(h)));
            let what = if *min_length > 5 { format!(" of length >= {min_length}") } else { String::new() };
            out.push(if holes.is_empty() {
                format!("no odd holes{what}")
            } else {
                format!("{}{what}", plural(holes.len(), "odd hole", "odd holes"))
            });
        }
        Payload::OddCycles { min_length, cycles } => {
            out.extend(cycles.iter().map(|c| set(c)));
            out.push(format!("{} of length >= {min_length}", plural(cycles.len(), "odd induced cycle", "odd induced cycles")));
        }
        Payload::Perfect { perfect, witness, side } => match witness {
            Some(w) => {
                let host = if w.in_complement { "complement of G" } else { "G" };
                out.push(format!("NOT PERFECT: odd hole {} in {host}", set(&w.vertices)));
            }
            None if *perfect && side == "both" => out.push("PERFECT".to_string()),
            None => out.push(format!("no odd hole in {}", if side == "complement" { "complement of G" } else { "G" })),
        },
        Payload::Ass { primes } => {
            out.extend(primes.iter().map(|p| format!("{}  height {}", prime(p), p.height)));
            out.push(plural(primes.len(), "associated prime", "associated primes"));
        }
        Payload::Decompose { components } => {
            out.extend(components.iter().cloned());
            out.push(plural(components.len(), "irreducible component", "irreducible components"));
        }
        Payload::Covers { covers } => {
            out.extend(covers.iter().map(|c| set(c)));
            out.push(plural(covers.len(), "minimal vertex cover", "minimal vertex covers"));
        }
        Payload::SymbolicSquare { generators, outside_square, equals_square } => {
            out.extend(generators.iter().map(|g| {
                if outside_square.contains(g) {
                    format!("{g}  (not in J^2)")
                } else {
                    g.clone()
                }
            }));
            out.push(if *equals_square {
                "J^(2) = J^2".to_string()
            } else {
                format!("J^(2) != J^2: {} outside J^2", plural(outside_square.len(), "generator", "generators"))
            });
        }
        Payload::Secant { generators } => {
            if generators.is_empty() {
                out.push("(0)".to_string());
            } else {
                out.extend(generators.iter().cloned());
            }
        }
        Payload::Adeg { adeg, expected, odd_hole_free, multiplicities, .. } => {
            for m in multiplicities.iter().filter(|m| m.prime.height >= 5) {
                out.push(format!("mult {} = {}", prime(&m.prime), m.multiplicity));
            }
            let verdict = if *odd_hole_free { "no odd hole" } else { "odd hole present" };
            out.push(format!("adeg(J^2)={adeg}, 3|E|+t={expected}, {verdict}"));
        }
        Payload::Degree { degree, edges } => out.push(format!("deg(J^2)={degree}, 3|E|={}", 3 * edges)),
        Payload::SaturationTest { min_length, equal } => out.push(if *equal {
            format!("J^2:(L_{min_length}) = J^2: no odd induced cycle of length >= {min_length} (read from associated prime heights)")
        } else {
            format!("J^2:(L_{min_length}) != J^2: odd induced cycle of length >= {min_length} (read from associated prime heights)")
        }),
        Payload::Bounds { longest_odd_cycle, depth_upper, projdim_lower, .. } => {
            out.push(match (longest_odd_cycle, depth_upper, projdim_lower) {
                (Some(t), Some(d), Some(p)) => {
                    format!("depth(R/J^2) <= {d}, projdim(R/J^2) >= {p} (longest odd induced cycle {t})")
                }
                _ => "not applicable: no odd induced cycle".to_string(),
            });
        }
    }
    if let Some(o) = &doc.oracle {
        out.push(format!("oracle: {o}"));
    }
    let mut s = out.join("\n");
    s.push('\n');
    s
}
