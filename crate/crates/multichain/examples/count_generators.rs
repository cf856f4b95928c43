//! Counting polynomials for the surjection and Barratt-Eccles families: the
//! number of nondegenerate generators in each degree under the complexity
//! filtration, with the k! symmetry factor extracted.

use multichain::surjection::{counting_polynomial_be, counting_polynomial_sur};
use multichain::Result;

fn main() -> Result<()> {
    for (k, d) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3), (4, 2)] {
        let sur = counting_polynomial_sur(k, d)?;
        let be = counting_polynomial_be(k, d)?;
        println!("k = {k}, complexity <= {d}");
        println!("  surjections:    {sur}");
        println!("  barratt-eccles: {be}");
        println!("  totals: {} vs {}", sur.total(), be.total());
    }

    // The published tables.
    assert_eq!(counting_polynomial_sur(4, 2)?.to_string(), "24*(1 + 6x + 10x^2 + 5x^3)");
    assert_eq!(
        counting_polynomial_be(4, 2)?.to_string(),
        "24*(1 + 23x + 104x^2 + 196x^3 + 184x^4 + 86x^5 + 16x^6)"
    );
    assert_eq!(counting_polynomial_sur(3, 3)?.to_string(), "6*(1 + 3x + 7x^2 + 9x^3 + 6x^4 + x^5)");
    assert_eq!(
        counting_polynomial_be(3, 3)?.to_string(),
        "6*(1 + 5x + 25x^2 + 60x^3 + 70x^4 + 38x^5 + 8x^6)"
    );
    println!("published tables reproduced");
    Ok(())
}
