//! Runs the Kirby-move probes under both framing conventions.

use quantinv::quantum_rep::FramingConvention;
use quantinv::wrt::{identify_convention, kirby_probes};

fn main() -> quantinv::error::Result<()> {
    for conv in FramingConvention::ALL {
        let report = kirby_probes(4, conv)?;
        let passed = report.checks.iter().filter(|c| c.equal).count();
        println!(
            "{conv}: {passed}/{} probes pass at N=4",
            report.checks.len()
        );
    }
    match identify_convention(&[3, 4, 5])? {
        Some(conv) => println!("convention passing every probe: {conv}"),
        None => println!("no convention passes every probe"),
    }
    Ok(())
}
