//! End-to-end acceptance checks, one test per release criterion.  Each test
//! prints a single `criterion N ... pass` line (visible with --nocapture).

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use multichain::cohomtools::{massey_triple, verify_ez_ring_iso, CohomologyBasis};
use multichain::complexes::{chain_boundary, Chain, ComplexView, Mode};
use multichain::error::Error;
use multichain::ezaw::{
    aw_multisimplicial, cup, ez, tensor_boundary, verify_square, Shuffle, TensorTerm,
};
use multichain::msets::{Diagonal, StandardMSet};
use multichain::surjection::{
    counting_polynomial_be, counting_polynomial_sur, tc, SurSet,
};
use multichain::{Coefficient, MSet, RingSpec};

fn betti(view: &ComplexView<impl MSet>, top: usize) -> Vec<usize> {
    (0..=top).map(|n| view.homology(n).unwrap().betti).collect()
}

/// A random chain with at most three terms in a random degree `1..=maxd`.
fn random_chain<M: MSet>(
    view: &ComplexView<M>,
    rng: &mut ChaCha8Rng,
    maxd: usize,
) -> Option<Chain<M::Simplex>> {
    let start = rng.gen_range(1..=maxd);
    for offset in 0..maxd {
        let n = (start - 1 + offset) % maxd + 1;
        let basis = view.basis(n).unwrap();
        if basis.is_empty() {
            continue;
        }
        let mut c = Chain::zero(view.ring());
        for _ in 0..rng.gen_range(1..=3usize) {
            let s = basis[rng.gen_range(0..basis.len())].clone();
            let v = *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap();
            c.add_term(s, Coefficient::from_i64(view.ring(), v)).unwrap();
        }
        if !c.is_zero() {
            return Some(c);
        }
    }
    None
}

#[test]
fn criterion_1_counting_polynomials() {
    assert_eq!(
        counting_polynomial_sur(4, 2).unwrap().to_string(),
        "24*(1 + 6x + 10x^2 + 5x^3)"
    );
    assert_eq!(
        counting_polynomial_be(4, 2).unwrap().to_string(),
        "24*(1 + 23x + 104x^2 + 196x^3 + 184x^4 + 86x^5 + 16x^6)"
    );
    assert_eq!(
        counting_polynomial_sur(3, 3).unwrap().to_string(),
        "6*(1 + 3x + 7x^2 + 9x^3 + 6x^4 + x^5)"
    );
    assert_eq!(
        counting_polynomial_be(3, 3).unwrap().to_string(),
        "6*(1 + 5x + 25x^2 + 60x^3 + 70x^4 + 38x^5 + 8x^6)"
    );
    println!("criterion 1 (counting polynomials): pass");
}

#[test]
fn criterion_2_worked_examples_mod_2() {
    let two = RingSpec::zp(2).unwrap();
    let sur2 = SurSet::full(2).unwrap();
    let sur3 = SurSet::full(3).unwrap();
    let gen = |m: &SurSet, w: &str| Chain::generator(two, m.parse_simplex(w).unwrap());

    let terms = |c: &Chain<_>| -> Vec<String> {
        c.iter().map(|(s, v)| format!("{}:{}", s, v.to_exact_string())).collect()
    };

    // The three-summand shuffle image of 12121 and the two-summand image of
    // 12321 (nine letters: three of each value).
    let e = ez(&sur2, &gen(&sur2, "12121")).unwrap();
    assert_eq!(terms(&e), ["11212221:1", "12211221:1", "12221211:1"]);
    let e = ez(&sur3, &gen(&sur3, "12321")).unwrap();
    assert_eq!(terms(&e), ["112333221:1", "122333211:1"]);

    let ttag = |c: &Chain<TensorTerm<_>>| -> Vec<String> {
        c.iter().map(|(t, _)| format!("{}|{}", t.0, t.1)).collect()
    };
    let a = aw_multisimplicial(&sur3, &gen(&sur3, "12321")).unwrap();
    assert_eq!(ttag(&a), ["123|12321", "1231|2321", "1232|1321", "12321|321"]);
    let a = aw_multisimplicial(&sur2, &gen(&sur2, "12121")).unwrap();
    assert_eq!(
        ttag(&a),
        ["12|12121", "121|2121", "1211|221", "1212|121", "12121|21", "122|1121"]
    );

    // The comparison square on 12121 has twelve summands, two with a
    // degenerate factor.
    let report =
        verify_square(&sur2, &Chain::generator(RingSpec::Z, sur2.parse_simplex("12121").unwrap()))
            .unwrap();
    assert!(report.equal);
    assert_eq!(report.lhs.len(), 12);
    assert_eq!(report.degenerate_summands, 2);
    println!("criterion 2 (worked shuffle/front-back examples mod 2): pass");
}

#[test]
fn criterion_3_table_companion() {
    let tuple = tc(&[1, 2, 2, 3, 3, 3, 1, 1, 2]).unwrap();
    let parts: Vec<String> = tuple.0.iter().map(|p| p.to_string()).collect();
    assert_eq!(parts, ["123", "231", "312"]);
    println!("criterion 3 (table companion of 122333112): pass");
}

/// Runs all eight chain-level properties on `count` random inputs of total
/// degree <= 4 from one instance; returns per-property sample counts.
fn property_samples<M: MSet + Clone>(m: M, count: usize, seed: u64) -> [usize; 8] {
    let ring = RingSpec::Z;
    let maxd = 4usize;
    let full = ComplexView::new(m.clone(), ring, Mode::Full, maxd + 1);
    let normalized = ComplexView::new(m.clone(), ring, Mode::Normalized, maxd + 1);
    let diag = Diagonal::new(m.clone());
    let diag_view = ComplexView::new(diag.clone(), ring, Mode::Full, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = [0usize; 8];

    // Triple-tensor expansion used for coassociativity.
    type Triple<S> = BTreeMap<(S, S, S), Coefficient>;
    fn bump<S: Ord>(map: &mut Triple<S>, key: (S, S, S), v: Coefficient) {
        match map.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&v);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    for _ in 0..count {
        let c = random_chain(&full, &mut rng, maxd).unwrap();

        // 1. d(d(c)) = 0.
        assert!(chain_boundary(&m, &chain_boundary(&m, &c).unwrap()).unwrap().is_zero());
        done[0] += 1;

        // 2. The shuffle map is a chain map.
        let lhs = chain_boundary(&diag, &ez(&m, &c).unwrap()).unwrap();
        let rhs = ez(&m, &chain_boundary(&m, &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "shuffle chain map failed on {c}");
        done[1] += 1;

        // 3. The multisimplicial front/back decomposition is a chain map.
        let aw = aw_multisimplicial(&m, &c).unwrap();
        let lhs = tensor_boundary(&m, &aw).unwrap();
        let rhs = aw_multisimplicial(&m, &chain_boundary(&m, &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "front/back chain map failed on {c}");
        done[2] += 1;

        // 4. Coassociativity of the decomposition.
        let mut left: Triple<M::Simplex> = BTreeMap::new();
        let mut right: Triple<M::Simplex> = BTreeMap::new();
        for (t, v) in aw.iter() {
            let inner = aw_multisimplicial(&m, &Chain::generator(ring, t.0.clone())).unwrap();
            for (u, w) in inner.iter() {
                bump(&mut left, (u.0.clone(), u.1.clone(), t.1.clone()), v.mul(w));
            }
            let inner = aw_multisimplicial(&m, &Chain::generator(ring, t.1.clone())).unwrap();
            for (u, w) in inner.iter() {
                bump(&mut right, (t.0.clone(), u.0.clone(), u.1.clone()), v.mul(w));
            }
        }
        assert_eq!(left, right, "coassociativity failed on {c}");
        done[3] += 1;

        // 5. The comparison square commutes.
        let report = verify_square(&m, &c).unwrap();
        assert!(report.equal, "square failed on {c}:\n{report}");
        done[4] += 1;
    }

    // 6. The one-direction decomposition is a chain map on the diagonal.
    for _ in 0..count {
        let Some(c) = random_chain(&diag_view, &mut rng, 2) else { break };
        let lhs = tensor_boundary(
            &diag,
            &multichain::ezaw::aw_simplicial(&diag, &c).unwrap(),
        )
        .unwrap();
        let rhs = multichain::ezaw::aw_simplicial(&diag, &chain_boundary(&diag, &c).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs, "diagonal decomposition chain map failed on {c}");
        done[5] += 1;
    }

    // 7. Cup products are associative on indicator cochains.
    let shapes = [(1usize, 1usize, 1usize), (1, 1, 2), (1, 2, 1), (2, 1, 1)];
    for _ in 0..count {
        let (p, q, r) = *shapes.choose(&mut rng).unwrap();
        let (bp, bq, br) =
            (normalized.basis(p).unwrap(), normalized.basis(q).unwrap(), normalized.basis(r).unwrap());
        if bp.is_empty() || bq.is_empty() || br.is_empty() {
            continue;
        }
        let a = Chain::generator(ring, bp[rng.gen_range(0..bp.len())].clone());
        let b = Chain::generator(ring, bq[rng.gen_range(0..bq.len())].clone());
        let c = Chain::generator(ring, br[rng.gen_range(0..br.len())].clone());
        let lhs = cup(&normalized, &cup(&normalized, &a, p, &b, q).unwrap(), p + q, &c, r).unwrap();
        let rhs = cup(&normalized, &a, p, &cup(&normalized, &b, q, &c, r).unwrap(), q + r).unwrap();
        assert_eq!(lhs, rhs, "associativity failed on {a}, {b}, {c}");
        done[6] += 1;
    }

    // 8. The Leibniz rule.
    for _ in 0..count {
        let p = rng.gen_range(1..maxd);
        let q = rng.gen_range(1..=maxd - p);
        let (bp, bq) = (normalized.basis(p).unwrap(), normalized.basis(q).unwrap());
        if bp.is_empty() || bq.is_empty() {
            continue;
        }
        let a = Chain::generator(ring, bp[rng.gen_range(0..bp.len())].clone());
        let b = Chain::generator(ring, bq[rng.gen_range(0..bq.len())].clone());
        let lhs = normalized
            .coboundary(&cup(&normalized, &a, p, &b, q).unwrap(), p + q)
            .unwrap();
        let da = cup(&normalized, &normalized.coboundary(&a, p).unwrap(), p + 1, &b, q).unwrap();
        let ad = cup(&normalized, &a, p, &normalized.coboundary(&b, q).unwrap(), q + 1).unwrap();
        let rhs = da.add(&if p % 2 == 0 { ad } else { ad.neg() }).unwrap();
        assert_eq!(lhs, rhs, "leibniz failed on {a}, {b}");
        done[7] += 1;
    }

    done
}

#[test]
fn criterion_4_property_suite_over_z() {
    let mut totals = [0usize; 8];
    let mut add = |part: [usize; 8]| {
        for (t, p) in totals.iter_mut().zip(part) {
            *t += p;
        }
    };
    add(property_samples(SurSet::full(2).unwrap(), 250, 11));
    add(property_samples(SurSet::full(3).unwrap(), 250, 12));
    add(property_samples(StandardMSet::new(vec![2, 1]), 250, 13));
    add(property_samples(StandardMSet::new(vec![1, 1, 2]), 250, 14));
    for (i, t) in totals.iter().enumerate() {
        assert!(*t >= 1000, "property {i} only ran {t} samples");
    }
    println!("criterion 4 (integral property suite, {totals:?} samples): pass");
}

#[test]
fn criterion_5_shuffle_bijection() {
    // All multidegree profiles with at most 4 directions and total <= 6.
    let mut profiles: Vec<Vec<usize>> = Vec::new();
    fn build(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur.push(v);
            build(k, left - v, cur, out);
            cur.pop();
        }
    }
    for k in 1..=4 {
        build(k, 6, &mut Vec::new(), &mut profiles);
    }

    let sub_profiles = |a: &[usize]| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        build(a.len(), a.iter().sum(), &mut Vec::new(), &mut out);
        out.into_iter().filter(|i| i.iter().zip(a).all(|(x, y)| x <= y)).collect()
    };

    for a in &profiles {
        let all = Shuffle::enumerate(a);
        let mut pair_count = 0usize;
        for i in sub_profiles(a) {
            let j: Vec<usize> = a.iter().zip(&i).map(|(x, y)| x - y).collect();
            for s1 in Shuffle::enumerate(&i) {
                for s2 in Shuffle::enumerate(&j) {
                    pair_count += 1;
                    // split inverts concat.
                    let (t1, t2) = s1.concat(&s2).split(&i).unwrap();
                    assert_eq!((t1, t2), (s1.clone(), s2.clone()));
                }
            }
        }
        // Disjoint-union cardinality: every (prefix profile, shuffle) split
        // attempt that succeeds is counted once.
        let mut split_points = 0usize;
        for s in &all {
            for i in sub_profiles(a) {
                if s.split(&i).is_ok() {
                    split_points += 1;
                }
            }
        }
        assert_eq!(pair_count, split_points, "profile {a:?}");
    }
    println!("criterion 5 (shuffle concat/split bijection, {} profiles): pass", profiles.len());
}

#[test]
fn criterion_6_homology_regression() {
    // Filtered stages model configuration spaces; the Poincare polynomial is
    // prod_{i=1}^{k-1} (1 + i t^(d-1)).
    for (k, d, expect) in [
        (2usize, 2usize, vec![1usize, 1]),
        (3, 2, vec![1, 3, 2]),
        (2, 3, vec![1, 0, 1]),
    ] {
        let view = ComplexView::new(
            SurSet::filtered(k, d).unwrap(),
            RingSpec::Z,
            Mode::Normalized,
            expect.len(),
        );
        assert_eq!(betti(&view, expect.len() - 1), expect, "sur{k}:{d}");
        for n in 0..expect.len() {
            assert!(view.homology(n).unwrap().torsion.is_empty(), "torsion at sur{k}:{d} H_{n}");
        }
    }
    println!("criterion 6 (homology of filtered stages over Z): pass");
}

#[test]
fn criterion_7_ring_isomorphism_along_the_shuffle_map() {
    for ring in [RingSpec::Q, RingSpec::zp(2).unwrap()] {
        let view = ComplexView::new(SurSet::filtered(2, 3).unwrap(), ring, Mode::Normalized, 3);
        let report = verify_ez_ring_iso(&view, 2).unwrap();
        assert!(report.ok(), "sur2:3 over {ring}:\n{report}");
        assert_eq!(report.betti_multi, vec![1, 0, 1]);
    }
    let view =
        ComplexView::new(SurSet::filtered(3, 3).unwrap(), RingSpec::Q, Mode::Normalized, 5);
    let report = verify_ez_ring_iso(&view, 4).unwrap();
    assert!(report.ok(), "sur3:3 over Q:\n{report}");
    assert_eq!(report.betti_multi, vec![1, 0, 3, 0, 2]);
    println!("criterion 7 (cohomology rings agree along the dual shuffle map): pass");
}

#[test]
fn criterion_8_normalization() {
    // Quotienting by degenerate generators does not change homology.
    let full = ComplexView::new(SurSet::full(2).unwrap(), RingSpec::Z, Mode::Full, 3);
    let norm = ComplexView::new(SurSet::full(2).unwrap(), RingSpec::Z, Mode::Normalized, 3);
    for n in 0..=2 {
        let (a, b) = (full.homology(n).unwrap(), norm.homology(n).unwrap());
        assert_eq!((a.betti, a.torsion), (b.betti, b.torsion), "degree {n}");
    }

    // The homotopy h with transfer T: c - h(c) = dT(c) + T(dc), and h is a
    // chain map when T is replayed over the same steps.
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let view = ComplexView::new(SurSet::full(2).unwrap(), RingSpec::Z, Mode::Full, 5);
    for _ in 0..500 {
        let c = random_chain(&view, &mut rng, 4).unwrap();
        let run = view.normalize_with_homotopy(&c).unwrap();
        let dc = view.boundary(&c).unwrap();
        let (h_dc, t_dc) = view.apply_homotopy_steps(&dc, &run.steps).unwrap();
        let lhs = c.sub(&run.normalized).unwrap();
        let rhs = view.boundary(&run.transfer).unwrap().add(&t_dc).unwrap();
        assert_eq!(lhs, rhs, "homotopy identity failed on {c}");
        assert_eq!(
            view.boundary(&run.normalized).unwrap(),
            h_dc,
            "h does not commute with d on {c}"
        );
    }
    println!("criterion 8 (normalization homotopy on 500 random chains): pass");
}

#[test]
fn criterion_9_massey_sanity() {
    // sur2:3 over Z/2: H = (1, 0, 1); the only triple lands in a zero group.
    let view = ComplexView::new(
        SurSet::filtered(2, 3).unwrap(),
        RingSpec::zp(2).unwrap(),
        Mode::Normalized,
        6,
    );
    let h2 = CohomologyBasis::new(&view, 2).unwrap();
    assert_eq!(h2.rank(), 1);
    let x = &h2.representatives()[0];
    let out = massey_triple(&view, x, 2, x, 2, x, 2).unwrap();
    assert!(out.vanishes_mod_indeterminacy);

    // sur3:3 over Q: classes in degrees 2 and 4; every defined triple
    // vanishes modulo indeterminacy.
    let view =
        ComplexView::new(SurSet::filtered(3, 3).unwrap(), RingSpec::Q, Mode::Normalized, 6);
    let h2 = CohomologyBasis::new(&view, 2).unwrap();
    assert_eq!(h2.rank(), 3);
    let reps: Vec<_> = h2.representatives().to_vec();
    let (mut defined, mut undefined) = (0usize, 0usize);
    for a in &reps {
        for b in &reps {
            for c in &reps {
                match massey_triple(&view, a, 2, b, 2, c, 2) {
                    Ok(out) => {
                        assert!(out.vanishes_mod_indeterminacy, "formality violated");
                        defined += 1;
                    }
                    Err(Error::NotExact) => undefined += 1,
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }
    assert!(defined > 0, "no defined triples");
    assert_eq!(defined + undefined, 27);
    println!(
        "criterion 9 (massey products vanish mod indeterminacy, {defined} defined): pass"
    );
}
