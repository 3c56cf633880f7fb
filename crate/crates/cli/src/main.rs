mod args;
mod pipeline;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, DistArgs, Settings};

fn run(cli: Cli) -> Result<bool> {
    let config = cli.config.as_deref();
    match cli.command {
        Command::Build(common) => {
            pipeline::cmd_build(&Settings::resolve(common, DistArgs::default(), vec![], config)?)?
        }
        Command::Persist(common) => {
            pipeline::cmd_persist(&Settings::resolve(common, DistArgs::default(), vec![], config)?)?
        }
        Command::Forest { common, seeds } => {
            pipeline::cmd_forest(&Settings::resolve(common, DistArgs::default(), seeds, config)?)?
        }
        Command::Distmat { common, dist } => {
            pipeline::cmd_distmat(&Settings::resolve(common, dist, vec![], config)?)?
        }
        Command::Check { common } => {
            return pipeline::cmd_check(&Settings::resolve(common, DistArgs::default(), vec![], config)?)
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("check failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
