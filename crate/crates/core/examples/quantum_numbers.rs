//! Quantum integers and their values at a root of unity.

use quantinv::cyclotomic::eval_at_root;
use quantinv::qpoly::{quantum_binomial, quantum_integer, QuantumMode};

fn main() -> quantinv::error::Result<()> {
    for n in 1..=5 {
        let bracket = quantum_integer(n, QuantumMode::Bracket)?;
        let at_root = eval_at_root(&bracket, 5)?;
        println!(
            "[{n}] = {bracket}    at N=5: {at_root} ~ {:.6}",
            at_root.to_complex().re
        );
    }
    println!("[4 choose 2] = {}", quantum_binomial(4, 2));
    Ok(())
}
