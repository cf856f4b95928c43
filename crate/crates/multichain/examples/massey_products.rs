//! Triple Massey products on the planar-configuration stage.  The space is
//! formal, so every defined product must vanish modulo its indeterminacy;
//! triples whose cup obstructions are nonzero are undefined.

use multichain::cohomtools::{massey_triple, CohomologyBasis};
use multichain::complexes::{ComplexView, Mode};
use multichain::error::Error;
use multichain::ezaw::cup;
use multichain::surjection::SurSet;
use multichain::{Result, RingSpec};

fn main() -> Result<()> {
    let view = ComplexView::new(SurSet::filtered(3, 2)?, RingSpec::Q, Mode::Normalized, 3);
    let h1 = CohomologyBasis::new(&view, 1)?;
    let h2 = CohomologyBasis::new(&view, 2)?;
    let reps = h1.representatives();

    let (mut defined, mut undefined) = (0usize, 0usize);
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate() {
            for (l, c) in reps.iter().enumerate() {
                match massey_triple(&view, a, 1, b, 1, c, 1) {
                    Ok(out) => {
                        defined += 1;
                        assert!(out.vanishes_mod_indeterminacy, "formality");
                        println!(
                            "<x1_{i}, x1_{j}, x1_{l}> defined; vanishes mod indeterminacy (rank {})",
                            out.indeterminacy_rank
                        );
                    }
                    Err(Error::NotExact) => {
                        undefined += 1;
                        // One of the two cup products is nonzero in H^2.
                        let ab = h2.coordinates(&view, &cup(&view, a, 1, b, 1)?)?;
                        let bc = h2.coordinates(&view, &cup(&view, b, 1, c, 1)?)?;
                        assert!(
                            ab.iter().any(|v| !v.is_zero()) || bc.iter().any(|v| !v.is_zero())
                        );
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }
    println!("{defined} defined, {undefined} undefined of {} triples", defined + undefined);
    assert!(defined > 0 && undefined > 0);
    Ok(())
}
