mod arc;
mod hilbert;
mod partitions;
mod series;

use gordon_core::error::{Error, Result};

use crate::args::Command;
use crate::report::Campaign;

pub use partitions::bijection_laws;

/// Runs one subcommand on the current rayon pool.
pub fn execute(command: &Command) -> Result<Campaign> {
    match command {
        Command::Count(a) => partitions::count(a),
        Command::Series(a) => series::series(a),
        Command::VerifyGordon(a) => partitions::verify_gordon(a),
        Command::VerifyRrk(a) => partitions::verify_rrk(a),
        Command::VerifyGordon3(a) => partitions::verify_gordon3(a),
        Command::VerifyConjecture(a) => partitions::verify_conjecture(a),
        Command::VerifyRecursion(a) => hilbert::verify_recursion(a),
        Command::VerifyLz(a) => hilbert::verify_lz(a),
        Command::Hilbert(a) => hilbert::hilbert(a),
        Command::LeadingIdeal(a) => arc::leading_ideal(a),
        Command::VerifyBijections(a) => partitions::verify_bijections(a),
    }
}

fn class_for_r(r: usize) -> crate::report::CheckClass {
    if r <= 3 {
        crate::report::CheckClass::Theorem
    } else {
        crate::report::CheckClass::Conjecture
    }
}

fn check_ranks(rs: &[usize]) -> Result<()> {
    match rs.iter().find(|&&r| r < 2) {
        Some(r) => Err(Error::ParameterRange(format!("r = {r}, need r >= 2"))),
        None if rs.is_empty() => Err(Error::ParameterRange("no value of r given".into())),
        None => Ok(()),
    }
}
