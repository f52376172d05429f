use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use paravector::scene::{self, ProjectMode, SceneError};
use paravector::Vector3;

/// Batch tool for paravector scenes.
#[derive(Parser)]
#[command(name = "paravec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a transform script over every point of a scene.
    Transform {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        script: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Perspective or pseudo-perspective projection of a scene.
    Project {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
        eye: Vector3,
        #[arg(long, value_parser = parse_vec3, allow_hyphen_values = true)]
        normal: Vector3,
        /// Plane offset in `n·x = c`; required unless --pseudo.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<f64>,
        #[arg(long)]
        pseudo: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify the lines through two pairs of points.
    Classify {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        a: (String, String),
        #[arg(long, value_parser = parse_pair)]
        b: (String, String),
    },
    /// Plücker coordinates, plane duals and supports.
    Info {
        #[arg(long)]
        scene: PathBuf,
    },
}

fn parse_vec3(s: &str) -> Result<Vector3, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("`{x}`: {e}")))
        .collect::<Result<_, _>>()?;
    match parts.as_slice() {
        [x, y, z] if parts.iter().all(|v| v.is_finite()) => Ok(Vector3::new(*x, *y, *z)),
        [_, _, _] => Err("components must be finite".into()),
        _ => Err(format!("expected x,y,z, got {} components", parts.len())),
    }
}

fn parse_pair(s: &str) -> Result<(String, String), String> {
    match s.split_once(',') {
        Some((a, b)) if !a.is_empty() && !b.is_empty() && !b.contains(',') => {
            Ok((a.trim().to_string(), b.trim().to_string()))
        }
        _ => Err(format!("expected id,id, got `{s}`")),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), SceneError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| SceneError::Write { path: path.clone(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), SceneError> {
    match cli.command {
        Command::Transform { scene, script, out } => {
            let s = scene::load_scene(&scene)?;
            let script = scene::load_script(&script)?;
            emit(&scene::run_script(&s, &script)?.to_json(), out.as_ref())
        }
        Command::Project { scene, eye, normal, c, pseudo, out } => {
            let s = scene::load_scene(&scene)?;
            let mode = match (pseudo, c) {
                (true, _) => ProjectMode::Pseudo,
                (false, Some(c)) => ProjectMode::Perspective { c },
                (false, None) => return Err(SceneError::Usage("--c is required for perspective projection".into())),
            };
            let projected = scene::cmd_project(&s, eye, normal, mode)?;
            for (id, flag) in &projected.flags {
                eprintln!("warning: point `{id}` is {}", flag.replace('_', " "));
            }
            emit(&projected.to_json(), out.as_ref())
        }
        Command::Classify { scene, a, b } => {
            let s = scene::load_scene(&scene)?;
            let r = scene::cmd_classify(&s, (&a.0, &a.1), (&b.0, &b.1))?;
            println!("{r}");
            Ok(())
        }
        Command::Info { scene } => {
            let s = scene::load_scene(&scene)?;
            let report = scene::info(&s)?;
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            emit(&text, None)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
