//! The full cohomology ring of a filtered surjection complex, and the check
//! that the dual shuffle map identifies it with the ring of the diagonal
//! simplicial set — multiplicatively at the level of cochains.

use multichain::cohomtools::{ring_presentation, verify_ez_ring_iso};
use multichain::complexes::{ComplexView, Mode};
use multichain::surjection::SurSet;
use multichain::{Result, RingSpec};

fn main() -> Result<()> {
    let view = ComplexView::new(SurSet::filtered(3, 2)?, RingSpec::Q, Mode::Normalized, 3);

    let pres = ring_presentation(&view, 2)?;
    print!("{pres}");
    let betti: Vec<usize> = pres.groups.iter().map(|g| g.betti).collect();
    assert_eq!(betti, [1, 3, 2]);

    let report = verify_ez_ring_iso(&view, 2)?;
    println!("\n{report}");
    assert!(report.ok());
    Ok(())
}
