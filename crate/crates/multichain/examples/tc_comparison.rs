//! The table companion: the simplicial map from the diagonal of a surjection
//! complex to the Barratt-Eccles complex.  Row j of the output tuple orders
//! the values by the position of their (j+1)-th occurrence.

use multichain::surjection::{tc, tc_report, SurSet};
use multichain::Result;

fn main() -> Result<()> {
    let tuple = tc(&[1, 2, 2, 3, 3, 3, 1, 1, 2])?;
    let parts: Vec<String> = tuple.0.iter().map(|p| p.to_string()).collect();
    println!("tc(122333112) = ({})", parts.join(", "));
    assert_eq!(parts, ["123", "231", "312"]);

    // Degreewise: tc commutes with faces and degeneracies and does not raise
    // complexity.
    let sur = SurSet::filtered(3, 2)?;
    for degree in 0..=2 {
        let report = tc_report(&sur, degree)?;
        println!("{report}");
        assert!(report.chain_map_ok && report.filtration_ok);
    }
    Ok(())
}
