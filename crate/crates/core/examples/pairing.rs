//! Evaluates the Kirby-circle intersection data and specializes it.

use quantinv::intersection::{kirby_circle_fixture, pairing_evaluate};
use quantinv::laurent::SpecializationSpec;

fn main() -> quantinv::error::Result<()> {
    let data = kirby_circle_fixture(2)?;
    println!("{}", data.to_json());
    let value = pairing_evaluate(&data)?;
    println!("pairing = {value}");
    let spec = SpecializationSpec::new(vec![2, 3], vec![], vec![])?;
    println!("at colours (2, 3): {}", value.specialize_psi(&spec)?);
    Ok(())
}
