//! Cup products of cochains on filtered surjection complexes: the Leibniz
//! rule at chain level, and products of cohomology classes on the
//! planar-configuration stage (three degree-1 classes spanning a rank-2
//! degree-2 group, with all squares zero).

use multichain::cohomtools::CohomologyBasis;
use multichain::complexes::{Chain, ComplexView, Mode};
use multichain::ezaw::cup;
use multichain::surjection::SurSet;
use multichain::{Result, RingSpec};

fn main() -> Result<()> {
    let ring = RingSpec::Q;

    // Leibniz: delta(a cup b) = (delta a) cup b + (-1)^|a| a cup (delta b),
    // here on the unfiltered 2-value complex where both sides are nonzero.
    let free = ComplexView::new(SurSet::full(2)?, ring, Mode::Normalized, 4);
    let basis1 = free.basis(1)?;
    let alpha = Chain::generator(ring, basis1[0].clone());
    let beta = Chain::generator(ring, basis1[1].clone());
    let lhs = free.coboundary(&cup(&free, &alpha, 1, &beta, 1)?, 2)?;
    let rhs = cup(&free, &free.coboundary(&alpha, 1)?, 2, &beta, 1)?
        .add(&cup(&free, &alpha, 1, &free.coboundary(&beta, 1)?, 2)?.neg())?;
    assert_eq!(lhs, rhs);
    println!("Leibniz on duals of {} and {}: both sides = {lhs}", basis1[0], basis1[1]);

    // Products of cohomology classes on the planar-configuration stage.
    let view = ComplexView::new(SurSet::filtered(3, 2)?, ring, Mode::Normalized, 3);
    let h1 = CohomologyBasis::new(&view, 1)?;
    let h2 = CohomologyBasis::new(&view, 2)?;
    println!("\nH^1 rank {}, H^2 rank {}", h1.rank(), h2.rank());
    for (i, a) in h1.representatives().iter().enumerate() {
        for (j, b) in h1.representatives().iter().enumerate() {
            let coords = h2.coordinates(&view, &cup(&view, a, 1, b, 1)?)?;
            let coords: Vec<String> = coords.iter().map(|c| c.to_exact_string()).collect();
            println!("  x1_{i} cup x1_{j} = [{}]", coords.join(", "));
            if i == j {
                assert!(coords.iter().all(|c| c == "0"), "squares vanish");
            }
        }
    }
    Ok(())
}
