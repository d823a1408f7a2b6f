//! Coloured Jones polynomials of the trefoil and the figure-eight knot.

use quantinv::braid::LinkPresentation;
use quantinv::quantum_rep::{coloured_jones, FramingConvention};

fn main() -> quantinv::error::Result<()> {
    for (name, text) in [
        ("trefoil", "2: 1 1 1 | 0"),
        ("figure-eight", "3: 1 -2 1 -2 | 0"),
    ] {
        let link: LinkPresentation = text.parse()?;
        for colour in 2..=4 {
            let j = coloured_jones(&link, &[colour], FramingConvention::Ribbon)?;
            println!("J_{colour}({name}) = {}", j.value);
        }
    }
    Ok(())
}
