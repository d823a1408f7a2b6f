//! WRT invariants by the regrouped state sum and the Kirby-colour sum.

use quantinv::braid::LinkPresentation;
use quantinv::quantum_rep::FramingConvention;
use quantinv::wrt::{tau_direct, tau_statesum, SurgeryInput};

fn main() -> quantinv::error::Result<()> {
    // -1 surgery on the right trefoil gives the Poincaré sphere (up to orientation).
    let link: LinkPresentation = "2: 1 1 1 | -1".parse()?;
    for level in 3..=6 {
        let input = SurgeryInput::new(link.clone(), level, FramingConvention::Ribbon)?;
        let direct = tau_direct(&input)?;
        let statesum = tau_statesum(&input)?;
        assert!(direct.same_invariant(&statesum));
        println!(
            "N={level}: tau = ({}) / D^{}  ~ {:.9}",
            direct.numerator, direct.b, direct.complex
        );
    }
    Ok(())
}
