//! Components, linking matrix and inertia of a framed braid closure.

use quantinv::braid::LinkPresentation;

fn main() -> quantinv::error::Result<()> {
    let link: LinkPresentation = "3: 1 1 -2 -2 | 0 1 -1".parse()?;
    println!("components: {}", link.components());
    println!("strand colouring: {:?}", link.colouring());
    for row in link.linking_matrix() {
        println!("  {row:?}");
    }
    let inertia = link.inertia();
    println!(
        "b+ = {}, b- = {}, b = {}",
        inertia.positive, inertia.negative, inertia.zero
    );
    Ok(())
}
