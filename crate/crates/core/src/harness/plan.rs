use std::fmt;
use std::io::BufRead;
use std::path::PathBuf;

use crate::contour::{make_schedule, Schedule, Variant, DEFAULT_ORDER_M, DEFAULT_WARMUP};
use crate::error::{Error, Result};
use crate::generate::{generate, GraphKind};
use crate::graph::Graph;
use crate::io::{load_graph, EdgeListOptions, Format};

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File { path: PathBuf, format: Format },
    Generated { kind: GraphKind, seed: u64 },
}

impl GraphSource {
    /// Benchmark loads dedupe edges and densify IDs.
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSource::File { path, format } => load_graph(
                path,
                *format,
                EdgeListOptions {
                    dedupe: true,
                    remap: true,
                },
            ),
            GraphSource::Generated { kind, seed } => generate(kind, *seed),
        }
    }

    /// Parses a generator spec with an optional `seed=` part, e.g.
    /// `er:n=1000:p=0.01:seed=3`.
    pub fn generated(spec: &str) -> Result<Self> {
        let mut seed = 0;
        let mut rest = Vec::new();
        for part in spec.split(':') {
            match part.strip_prefix("seed=") {
                Some(value) => {
                    seed = value
                        .parse()
                        .map_err(|_| Error::param(format!("bad seed `{value}`")))?
                }
                None => rest.push(part),
            }
        }
        Ok(GraphSource::Generated {
            kind: rest.join(":").parse()?,
            seed,
        })
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::File { path, .. } => write!(f, "{}", path.display()),
            GraphSource::Generated { kind, seed } => write!(f, "{kind}:seed={seed}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmSpec {
    Contour(Schedule),
    FastSv { atomic: bool },
    UnionFind,
    Bfs,
}

impl AlgorithmSpec {
    pub fn name(&self) -> &'static str {
        match self {
            AlgorithmSpec::Contour(_) => "contour",
            AlgorithmSpec::FastSv { .. } => "fastsv",
            AlgorithmSpec::UnionFind => "unionfind",
            AlgorithmSpec::Bfs => "bfs",
        }
    }

    pub fn variant_name(&self) -> String {
        match self {
            AlgorithmSpec::Contour(s) => s.variant().to_string(),
            _ => String::new(),
        }
    }

    pub fn is_sync(&self) -> bool {
        match self {
            AlgorithmSpec::Contour(s) => s.is_sync(),
            AlgorithmSpec::FastSv { .. } => true,
            _ => false,
        }
    }

    pub fn is_atomic(&self) -> bool {
        match self {
            AlgorithmSpec::Contour(s) => s.is_atomic(),
            AlgorithmSpec::FastSv { atomic } => *atomic,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PlanEntry {
    pub source: GraphSource,
    pub algorithm: AlgorithmSpec,
    pub threads: usize,
    pub seed: u64,
}

fn flag(value: &str, on: &str, off: &str) -> Result<Option<bool>> {
    match value {
        "" | "-" => Ok(None),
        v if v == on => Ok(Some(true)),
        v if v == off => Ok(Some(false)),
        v => Err(Error::param(format!("expected `{on}` or `{off}`, got `{v}`"))),
    }
}

/// `c2`, `cm:64`, `c11mm:8:3` → schedule with optional m and warmup.
fn parse_variant(text: &str) -> Result<Schedule> {
    let mut parts = text.split(':');
    let variant: Variant = parts.next().unwrap_or_default().parse()?;
    let m = match parts.next() {
        Some(m) => m.parse().map_err(|_| Error::param(format!("bad order `{m}`")))?,
        None => DEFAULT_ORDER_M,
    };
    let warmup = match parts.next() {
        Some(w) => w.parse().map_err(|_| Error::param(format!("bad warmup `{w}`")))?,
        None => DEFAULT_WARMUP,
    };
    make_schedule(variant, m, warmup)
}

fn parse_line(line: &str) -> Result<PlanEntry> {
    let fields: Vec<&str> = line.split(',').map(str::trim).collect();
    let [path, format, algo, variant, mode, atomics, threads] = fields[..] else {
        return Err(Error::param(format!(
            "expected 7 comma-separated fields, got {}",
            fields.len()
        )));
    };
    let source = match format {
        "gen" => GraphSource::generated(path)?,
        other => GraphSource::File {
            path: PathBuf::from(path),
            format: other.parse()?,
        },
    };
    let sync = flag(mode, "sync", "async")?;
    let atomic = flag(atomics, "on", "off")?;
    let algorithm = match algo {
        "fastsv" => {
            if sync == Some(false) {
                return Err(Error::param("fastsv is synchronous only"));
            }
            AlgorithmSpec::FastSv {
                atomic: atomic.unwrap_or(true),
            }
        }
        "unionfind" => AlgorithmSpec::UnionFind,
        "bfs" => AlgorithmSpec::Bfs,
        contour => {
            let text = if contour == "contour" { variant } else { contour };
            let mut schedule = parse_variant(text)?;
            if let Some(sync) = sync {
                schedule = schedule.with_sync(sync)?;
            }
            if let Some(atomic) = atomic {
                schedule = schedule.with_atomic(atomic);
            }
            AlgorithmSpec::Contour(schedule)
        }
    };
    let threads: usize = threads
        .parse()
        .map_err(|_| Error::param(format!("bad thread count `{threads}`")))?;
    if threads == 0 {
        return Err(Error::param("thread count must be at least 1"));
    }
    Ok(PlanEntry {
        source,
        algorithm,
        threads,
        seed: 0,
    })
}

/// Reads a plan: one `graph_path,format,algo,variant,mode,atomics,threads`
/// entry per line. Blank lines, `#` comments and a leading header row are
/// skipped. `format` is `edgelist`, `mtx` or `gen` (then `graph_path` is a
/// generator spec such as `path:n=100`). `-` leaves a field at its default.
pub fn parse_plan<R: BufRead>(source: R) -> Result<Vec<PlanEntry>> {
    let mut plan = Vec::new();
    for (index, line) in source.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || (index == 0 && trimmed.starts_with("graph_path")) {
            continue;
        }
        let entry = parse_line(trimmed).map_err(|e| Error::parse(index + 1, e.to_string()))?;
        plan.push(entry);
    }
    Ok(plan)
}
