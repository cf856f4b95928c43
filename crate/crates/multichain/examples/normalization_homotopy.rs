//! The normalization homotopy: an explicit operator h killing degenerate
//! generators, with a transfer T recording why the quotient map to the
//! normalized complex is a quasi-isomorphism:
//!     c - h(c) = d T(c) + T(d c)       (T replayed over the same steps).

use multichain::complexes::{Chain, ComplexView, Mode};
use multichain::msets::MSet;
use multichain::surjection::SurSet;
use multichain::{Coefficient, Result, RingSpec};

fn main() -> Result<()> {
    let sur = SurSet::full(2)?;
    let view = ComplexView::new(sur.clone(), RingSpec::Z, Mode::Full, 4);

    // A mixed chain: one nondegenerate word and two degenerate ones.
    let mut c = Chain::zero(RingSpec::Z);
    c.add_term(sur.parse_simplex("1212")?, Coefficient::from_i64(RingSpec::Z, 1))?;
    c.add_term(sur.parse_simplex("1122")?, Coefficient::from_i64(RingSpec::Z, 2))?;
    c.add_term(sur.parse_simplex("2211")?, Coefficient::from_i64(RingSpec::Z, -1))?;
    println!("c        = {c}");

    let run = view.normalize_with_homotopy(&c)?;
    println!("h(c)     = {}", run.normalized);
    println!("T(c)     = {}", run.transfer);
    println!("steps    = {:?}", run.steps);

    // h(c) and c agree in the quotient by degenerate generators.
    println!("q(c)     = {}", view.project_normalized(&c)?);
    assert_eq!(view.project_normalized(&run.normalized)?, view.project_normalized(&c)?);

    // The homotopy identity, with T replayed on d(c) over the same steps.
    let (_, t_dc) = view.apply_homotopy_steps(&view.boundary(&c)?, &run.steps)?;
    let lhs = c.sub(&run.normalized)?;
    let rhs = view.boundary(&run.transfer)?.add(&t_dc)?;
    assert_eq!(lhs, rhs);
    println!("c - h(c) = dT(c) + T(dc) checked");
    Ok(())
}
