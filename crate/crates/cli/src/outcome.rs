use std::process::ExitCode;

use qtk_core::Error;
use serde_json::{json, Value};

/// Why a command stopped early.
pub enum Failure {
    /// The input is well-formed but mathematically unsuitable. Exit 2.
    Refusal(Value),
    /// Anything else. Exit 1.
    Error(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast::<Error>() {
            Ok(core) => Failure::from(core),
            Err(e) => Failure::Error(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::Refused(c) => Failure::Refusal(json!({
                "schema_version": 1,
                "kind": "refusal",
                "reason": "not simple",
                "message": e.to_string(),
                "classification": c.to_json(),
            })),
            Error::InvalidPolytope(_)
            | Error::NotInQuasilattice { .. }
            | Error::DegenerateCut
            | Error::DegenerateTriple(_)
            | Error::CannotInflate => Failure::Refusal(json!({
                "schema_version": 1,
                "kind": "refusal",
                "reason": reason(&e),
                "message": e.to_string(),
            })),
            _ => Failure::Error(e.into()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

fn reason(e: &Error) -> &'static str {
    match e {
        Error::InvalidPolytope(_) => "invalid polytope",
        Error::NotInQuasilattice { .. } => "normal not in quasilattice",
        Error::DegenerateCut => "degenerate cut",
        Error::DegenerateTriple(_) => "degenerate triple",
        Error::CannotInflate => "cannot inflate",
        _ => "refused",
    }
}

pub fn finish(r: Result<(), Failure>) -> ExitCode {
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Refusal(v)) => {
            eprintln!("{}", qtk_core::io::to_text(&v).trim_end());
            ExitCode::from(2)
        }
        Err(Failure::Error(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
