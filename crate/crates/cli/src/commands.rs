use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};

use contour_core::harness::{parse_plan, run_algorithm, run_experiment, verify_labels, write_csv, AlgorithmSpec};
use contour_core::io::write_edge_list;
use contour_core::{
    generate, load_graph, make_schedule, summarize, EdgeListOptions, ExecConfig, Format, Graph, GraphKind,
    Variant,
};

use crate::args::{Algo, BenchArgs, Cli, Command, GenArgs, GraphType, InputFormat, Mode, RunArgs, Toggle};
use crate::Failure;

pub fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen(args) => gen(args),
        Command::Run(args) => run(args),
        Command::Verify(args) => verify(args),
        Command::Bench(args) => bench(args),
    }
}

fn gen(args: GenArgs) -> Result<(), Failure> {
    let kind = match args.kind {
        GraphType::Path => GraphKind::Path { n: args.n },
        GraphType::Cycle => GraphKind::Cycle { n: args.n },
        GraphType::Star => GraphKind::Star { n: args.n },
        GraphType::Grid2d => GraphKind::Grid2d {
            rows: args.rows,
            cols: args.cols,
        },
        GraphType::ErdosRenyi => GraphKind::ErdosRenyi { n: args.n, p: args.p },
        GraphType::Forest => GraphKind::Forest {
            n: args.n,
            trees: args.trees,
        },
    };
    let graph = generate(&kind, args.seed)?;
    let sink = BufWriter::new(File::create(&args.output)?);
    write_edge_list(&graph, sink)?;
    Ok(())
}

fn algorithm(args: &RunArgs) -> Result<AlgorithmSpec, Failure> {
    let variant = match args.algo {
        Algo::Fastsv => {
            if args.mode == Some(Mode::Async) {
                return Err(Failure::Usage("fastsv is synchronous only".into()));
            }
            return Ok(AlgorithmSpec::FastSv {
                atomic: args.atomics != Some(Toggle::Off),
            });
        }
        Algo::Unionfind => return Ok(AlgorithmSpec::UnionFind),
        Algo::Bfs => return Ok(AlgorithmSpec::Bfs),
        Algo::C1 => Variant::C1,
        Algo::C2 => Variant::C2,
        Algo::Cm => Variant::Cm,
        Algo::C11mm => Variant::C11mm,
        Algo::C1m1m => Variant::C1m1m,
        Algo::Csyn => Variant::CSyn,
    };
    let mut schedule = make_schedule(variant, args.order_m, args.warmup)?;
    if let Some(mode) = args.mode {
        schedule = schedule.with_sync(mode == Mode::Sync)?;
    }
    if let Some(atomics) = args.atomics {
        schedule = schedule.with_atomic(atomics == Toggle::On);
    }
    Ok(AlgorithmSpec::Contour(schedule))
}

fn load(args: &RunArgs) -> Result<Graph, Failure> {
    let format = match args.format {
        InputFormat::Edgelist => Format::EdgeList,
        InputFormat::Mtx => Format::MatrixMarket,
    };
    let options = EdgeListOptions {
        dedupe: true,
        remap: true,
    };
    Ok(load_graph(&args.input, format, options)?)
}

fn algo_name(algo: Algo) -> &'static str {
    match algo {
        Algo::C1 => "c1",
        Algo::C2 => "c2",
        Algo::Cm => "cm",
        Algo::C11mm => "c11mm",
        Algo::C1m1m => "c1m1m",
        Algo::Csyn => "csyn",
        Algo::Fastsv => "fastsv",
        Algo::Unionfind => "unionfind",
        Algo::Bfs => "bfs",
    }
}

fn emit_labels(graph: &Graph, labels: &[u32], args: &RunArgs) -> io::Result<()> {
    let sink: Box<dyn Write> = match &args.output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    for (v, &label) in labels.iter().enumerate() {
        writeln!(sink, "{} {}", graph.original_id(v as u32), graph.original_id(label))?;
    }
    sink.flush()
}

fn run(args: RunArgs) -> Result<(), Failure> {
    let algorithm = algorithm(&args)?;
    let graph = load(&args)?;
    let outcome = run_algorithm(&graph, &algorithm, ExecConfig::parallel(args.threads, args.seed))?;
    let sweeps = outcome.stats.as_ref().map_or(0, |s| s.sweeps_until_stable);
    println!(
        "graph={} algo={} sweeps={sweeps} time_ms={:.3} components={}",
        args.input.display(),
        algo_name(args.algo),
        outcome.elapsed.as_secs_f64() * 1e3,
        summarize(&outcome.labels).count()
    );
    if args.emit_labels {
        emit_labels(&graph, &outcome.labels, &args)?;
    }
    Ok(())
}

fn verify(args: RunArgs) -> Result<(), Failure> {
    let algorithm = algorithm(&args)?;
    let graph = load(&args)?;
    let outcome = run_algorithm(&graph, &algorithm, ExecConfig::parallel(args.threads, args.seed))?;
    let report = verify_labels(&graph, &outcome.labels);
    match report.first_mismatch {
        None => {
            println!(
                "verified graph={} algo={} components={}",
                args.input.display(),
                algo_name(args.algo),
                summarize(&outcome.labels).count()
            );
            Ok(())
        }
        Some(m) => Err(Failure::Verification(format!(
            "vertex {} labelled {:?}, oracle says {:?}",
            m.vertex, m.found, m.expected
        ))),
    }
}

fn bench(args: BenchArgs) -> Result<(), Failure> {
    let plan = parse_plan(BufReader::new(File::open(&args.plan)?))?;
    let outcome = run_experiment(&plan, args.repeats)?;
    write_csv(&outcome.records, BufWriter::new(File::create(&args.output)?))?;
    if outcome.passed() {
        Ok(())
    } else {
        Err(Failure::Verification(outcome.failures.join("; ")))
    }
}
