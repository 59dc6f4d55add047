use arcroute::aco::{aco_run, AcoParams};
use arcroute::graph::{appendix_graph, WeightedGraph};
use arcroute::planner::{enumerate_candidates, plan_route, KnownTargets, RouteRequest};
use arcroute::report::{aco_text, candidates_text, plan_json, RunReport};
use arcroute::scene::{builtin_scene, Scene};
use arcroute::svg::render_svg;
use arcroute::verify::{fixtures_dir, verify_fixtures};
use arcroute::{Point, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "arcroute",
    version,
    about = "Line-and-arc route planning among obstacles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Plan one route and print its segment table.
    Plan {
        #[command(flatten)]
        route: RouteArgs,
        #[arg(long, value_enum, default_value_t = EngineKind::Exact)]
        engine: EngineKind,
        #[command(flatten)]
        colony: ColonyArgs,
        /// Write the full-precision plan as JSON.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also draw the plan.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the ant colony on a weighted graph (the benchmark graph by default).
    Aco {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[command(flatten)]
        colony: ColonyArgs,
        /// Write the convergence curve here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the reference fixtures; exits nonzero on any failure.
    Verify {
        /// Override the route point and total tolerances.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Draw the scene, its clearance envelopes and optionally a route.
    ExportSvg {
        #[arg(long)]
        scene: Option<PathBuf>,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long, alias = "out")]
        svg: PathBuf,
    },
    /// List the k shortest routes over distinct corner sequences.
    Enumerate {
        #[command(flatten)]
        route: RouteArgs,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
}

#[derive(Args)]
struct RouteArgs {
    /// Scene file; the built-in scene if omitted.
    #[arg(long)]
    scene: Option<PathBuf>,
    /// O, A, B, C or "x,y".
    #[arg(long, default_value = "O")]
    from: String,
    #[arg(long)]
    to: String,
}

#[derive(Args)]
struct ColonyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    ants: usize,
    #[arg(long, default_value_t = 100)]
    gens: usize,
}

impl ColonyArgs {
    fn params(&self) -> AcoParams {
        AcoParams {
            ants: self.ants,
            generations: self.gens,
            seed: self.seed,
            ..AcoParams::default()
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineKind {
    Exact,
    Aco,
}

fn parse_point(s: &str) -> Result<Point> {
    if let Some(p) = KnownTargets::named(s) {
        return Ok(p);
    }
    let bad = || arcroute::Error::InvalidRequest(format!("expected O, A, B, C or x,y; got {s:?}"));
    let (x, y) = s.split_once(',').ok_or_else(bad)?;
    let x: f64 = x.trim().parse().map_err(|_| bad())?;
    let y: f64 = y.trim().parse().map_err(|_| bad())?;
    Ok(Point::new(x, y))
}

fn load_scene(path: &Option<PathBuf>) -> Result<(Scene, String)> {
    match path {
        Some(p) => Ok((Scene::load(p)?, p.display().to_string())),
        None => Ok((builtin_scene(), "builtin".to_string())),
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Plan {
            route,
            engine,
            colony,
            out,
            svg,
        } => {
            let (scene, label) = load_scene(&route.scene)?;
            let (start, goal) = (parse_point(&route.from)?, parse_point(&route.to)?);
            let mut inputs = vec![
                ("scene".to_string(), label),
                ("from".to_string(), format!("{start}")),
                ("to".to_string(), format!("{goal}")),
            ];
            let req = match engine {
                EngineKind::Exact => {
                    inputs.push(("engine".into(), "exact".into()));
                    RouteRequest::exact(start, goal)
                }
                EngineKind::Aco => {
                    let p = colony.params();
                    inputs.push(("engine".into(), "aco".into()));
                    inputs.push((
                        "colony".into(),
                        format!(
                            "seed {} ants {} generations {}",
                            p.seed, p.ants, p.generations
                        ),
                    ));
                    RouteRequest::aco(start, goal, p)
                }
            };
            let result = plan_route(&scene, &req)?;
            print!("{}", RunReport::for_plan(inputs, &result).to_text());
            if let Some(path) = out {
                std::fs::write(path, plan_json(&result) + "\n")?;
            }
            if let Some(path) = svg {
                std::fs::write(path, render_svg(&scene, Some(&result.path)))?;
            }
            Ok(true)
        }
        Command::Aco { graph, colony, out } => {
            let g = match graph {
                Some(p) => WeightedGraph::load(p)?,
                None => appendix_graph(),
            };
            let params = colony.params();
            let result = aco_run(&g, &params)?;
            print!("{}", aco_text(&result, params.seed));
            match out {
                Some(path) => std::fs::write(path, result.curve_table())?,
                None => print!("\n{}", result.curve_table()),
            }
            Ok(true)
        }
        Command::Verify { tolerance } => {
            let checks = verify_fixtures(&fixtures_dir(), tolerance)?;
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            println!("{} checks, {failed} failed", checks.len());
            Ok(failed == 0)
        }
        Command::ExportSvg {
            scene,
            from,
            to,
            svg,
        } => {
            let (scene, _) = load_scene(&scene)?;
            let path = match to {
                Some(to) => {
                    let start = parse_point(from.as_deref().unwrap_or("O"))?;
                    let goal = parse_point(&to)?;
                    Some(plan_route(&scene, &RouteRequest::exact(start, goal))?.path)
                }
                None => None,
            };
            std::fs::write(svg, render_svg(&scene, path.as_ref()))?;
            Ok(true)
        }
        Command::Enumerate { route, k } => {
            let (scene, _) = load_scene(&route.scene)?;
            let (start, goal) = (parse_point(&route.from)?, parse_point(&route.to)?);
            print!(
                "{}",
                candidates_text(&enumerate_candidates(&scene, start, goal, k)?)
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
