//! The signed multisimplicial boundary, the square-zero check, and homology
//! of filtered surjection complexes — whose stages are configuration-space
//! models: complexity d on k values gives F(R^d, k).

use multichain::complexes::{chain_boundary, Chain, ComplexView, Mode};
use multichain::surjection::SurSet;
use multichain::{MSet, Result, RingSpec};

fn main() -> Result<()> {
    let sur2 = SurSet::full(2)?;
    let c = Chain::generator(RingSpec::Z, sur2.parse_simplex("1212")?);
    let dc = chain_boundary(&sur2, &c)?;
    println!("d(1212)   = {dc}");
    println!("d(d(1212)) = {}", chain_boundary(&sur2, &dc)?);
    assert!(chain_boundary(&sur2, &dc)?.is_zero());

    // Betti numbers of the filtered stages match the product formula
    // prod_{i=1}^{k-1} (1 + i t^(d-1)).
    for (k, d, expect) in [
        (2usize, 2usize, vec![1usize, 1]),          // circle
        (2, 3, vec![1, 0, 1]),                      // 2-sphere
        (3, 2, vec![1, 3, 2]),                      // planar 3-point configurations
    ] {
        let view =
            ComplexView::new(SurSet::filtered(k, d)?, RingSpec::Z, Mode::Normalized, expect.len());
        let mut betti = Vec::new();
        for n in 0..expect.len() {
            let h = view.homology(n)?;
            assert!(h.torsion.is_empty(), "torsion-free in this range");
            betti.push(h.betti);
        }
        println!("H_*(sur{k}:{d}) betti = {betti:?}");
        assert_eq!(betti, expect);
    }
    Ok(())
}
