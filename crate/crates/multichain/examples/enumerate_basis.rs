//! Chain-group bases: surjection words by total degree, with and without the
//! degenerate generators, and the simplices of a standard multisimplex.

use multichain::complexes::{ComplexView, Mode};
use multichain::msets::StandardMSet;
use multichain::surjection::SurSet;
use multichain::{MSet, Result, RingSpec};

fn main() -> Result<()> {
    // Complexity-2 stage of the 3-value surjection complex.
    let sur = SurSet::filtered(3, 2)?;
    let normalized = ComplexView::new(sur.clone(), RingSpec::Z, Mode::Normalized, 2);
    let full = ComplexView::new(sur, RingSpec::Z, Mode::Full, 2);
    println!("surjections on 3 values, complexity <= 2:");
    for n in 0..=2 {
        let basis = normalized.basis(n)?;
        println!("degree {n}: {} nondegenerate (of {} total)", basis.len(), full.dimension(n)?);
        for word in basis.iter() {
            println!("  {word}");
        }
    }
    // Matches the counting polynomial 6*(1 + 3x + 2x^2).
    assert_eq!(normalized.dimension(0)?, 6);
    assert_eq!(normalized.dimension(1)?, 18);
    assert_eq!(normalized.dimension(2)?, 12);

    // The square Delta^1 x Delta^1: simplices are pairs of monotone maps.
    let square = StandardMSet::new(vec![1, 1]);
    println!("\nstandard (1,1)-multisimplex, bidegree (1,1):");
    for x in square.enumerate(&[1, 1])? {
        let tag = if square.is_degenerate(&x) { " (degenerate)" } else { "" };
        println!("  {x}{tag}");
    }
    let nondeg =
        square.enumerate(&[1, 1])?.into_iter().filter(|x| !square.is_degenerate(x)).count();
    assert_eq!(nondeg, 1, "one nondegenerate square cell");
    Ok(())
}
