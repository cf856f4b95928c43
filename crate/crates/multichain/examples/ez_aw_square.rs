//! The shuffle (Eilenberg-Zilber) map, the front/back (Alexander-Whitney)
//! decompositions, and the comparison square relating them, on the two
//! motivating surjection words.  Everything here is over Z, so the signs are
//! live; reducing mod 2 recovers the familiar sign-free formulas.

use multichain::complexes::Chain;
use multichain::ezaw::{aw_multisimplicial, ez, verify_square, Shuffle};
use multichain::surjection::SurSet;
use multichain::{MSet, Result, RingSpec};

fn main() -> Result<()> {
    let sur2 = SurSet::full(2)?;
    let sur3 = SurSet::full(3)?;

    // 12121 has multidegree (2,1): three (2,1)-shuffles.
    println!("(2,1)-shuffles as lattice paths:");
    for sh in Shuffle::enumerate(&[2, 1]) {
        println!("  {sh} ({} inversions)", sh.inversions());
    }

    let x = Chain::generator(RingSpec::Z, sur2.parse_simplex("12121")?);
    println!("\nEZ(12121) = {}", ez(&sur2, &x)?);
    println!("AW(12121) = {}", aw_multisimplicial(&sur2, &x)?);

    let y = Chain::generator(RingSpec::Z, sur3.parse_simplex("12321")?);
    println!("\nEZ(12321) = {}", ez(&sur3, &y)?);
    println!("AW(12321) = {}", aw_multisimplicial(&sur3, &y)?);

    // The comparison square: applying the one-direction front/back
    // decomposition after EZ equals applying EZ in both tensor factors after
    // the multisimplicial decomposition.
    println!();
    let report = verify_square(&sur2, &x)?;
    println!("12121: {report}");
    assert!(report.equal);
    assert_eq!(report.lhs.len(), 12);
    assert_eq!(report.degenerate_summands, 2);

    let report = verify_square(&sur3, &y)?;
    println!("12321: {report}");
    assert!(report.equal);
    Ok(())
}
