//! The snippet from the workspace README, kept compiling.

use wqsym::{coproduct, eulerian_projector, tridendriform, word, Ops, TriKind};

fn main() -> Result<(), wqsym::HopfError> {
    let ops = Ops::exact();
    let x = word(&[2, 1, 1]);
    let y = word(&[1, 2]);

    // q-weighted middle product: q(2,1,1,1,2) + (3,1,1,2,3) + (3,2,2,1,3)
    let middle = tridendriform(&ops, &x, &y, TriKind::Middle)?;
    println!("{middle}");

    // Reduced coproduct by value cuts.
    println!("{}", coproduct(&word(&[3, 4, 2, 5, 1, 1, 3, 5])));

    // Idempotent projection onto primitives: (2,3,1) - (2,1,3).
    println!("{}", eulerian_projector(&word(&[2, 3, 1])));
    Ok(())
}
