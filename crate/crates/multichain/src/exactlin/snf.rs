//! Smith normal form over `Z` with arbitrary-precision pivots.

use std::collections::BTreeMap;

use num::{BigInt, Signed, Zero};

use crate::error::{Error, Result};

use super::SparseMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` (all positive) of an integer
/// matrix.  `r` is the rank; zero diagonal entries are omitted.
///
/// Pivot choice is deterministic: the entry of smallest absolute value,
/// ties broken by lowest `(row, col)`.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<Vec<BigInt>> {
    if m.ring() != super::RingSpec::Z {
        return Err(Error::Invalid(format!(
            "smith normal form requires Z coefficients, got {}",
            m.ring()
        )));
    }
    let mut rows: Vec<BTreeMap<usize, BigInt>> = vec![BTreeMap::new(); m.rows()];
    for (r, c, v) in m.entries() {
        rows[r].insert(c, v.as_bigint().expect("Z entry").clone());
    }
    let mut active_rows: Vec<bool> = vec![true; m.rows()];
    let mut active_cols: Vec<bool> = vec![true; m.cols()];
    let mut divisors: Vec<BigInt> = Vec::new();

    'outer: loop {
        // Global pivot: smallest |entry| in the active region, ties by (row, col).
        let mut pivot: Option<(usize, usize)> = None;
        let mut best: Option<BigInt> = None;
        for (r, row) in rows.iter().enumerate() {
            if !active_rows[r] {
                continue;
            }
            for (&c, v) in row {
                if !active_cols[c] {
                    continue;
                }
                let a = v.abs();
                if best.as_ref().is_none_or(|b| a < *b) {
                    best = Some(a);
                    pivot = Some((r, c));
                }
            }
        }
        let (mut pr, mut pc) = match pivot {
            Some(p) => p,
            None => break,
        };

        loop {
            let p = rows[pr].get(&pc).expect("pivot present").clone();

            // Clear the pivot column with row operations.
            let col_rows: Vec<usize> = (0..rows.len())
                .filter(|&r| r != pr && active_rows[r] && rows[r].contains_key(&pc))
                .collect();
            if !col_rows.is_empty() {
                for r in col_rows {
                    let v = rows[r][&pc].clone();
                    let q = nearest_quotient(&v, &p);
                    row_sub_scaled(&mut rows, r, pr, &q);
                }
                // Any nonzero remainder is strictly smaller than |p|; re-pick
                // the pivot inside this column and go again.
                if let Some((r, _)) = min_in_column(&rows, &active_rows, pc) {
                    pr = r;
                    continue;
                }
            }

            // Column clean; clear the pivot row with column operations.  The
            // column ops only touch row `pr` because the pivot column holds a
            // single nonzero now.
            let row_cols: Vec<usize> = rows[pr]
                .keys()
                .copied()
                .filter(|&c| c != pc && active_cols[c])
                .collect();
            if !row_cols.is_empty() {
                let p = rows[pr][&pc].clone();
                for c in row_cols {
                    let v = rows[pr][&c].clone();
                    let q = nearest_quotient(&v, &p);
                    let delta = &v - &q * &p;
                    if delta.is_zero() {
                        rows[pr].remove(&c);
                    } else {
                        rows[pr].insert(c, delta);
                    }
                }
                if rows[pr].len() > 1 {
                    // Remainders linger; move the pivot to the smallest one.
                    let (c, _) = rows[pr]
                        .iter()
                        .filter(|(c, _)| active_cols[**c])
                        .min_by(|(c1, v1), (c2, v2)| v1.abs().cmp(&v2.abs()).then(c1.cmp(c2)))
                        .map(|(&c, v)| (c, v.clone()))
                        .expect("nonempty");
                    pc = c;
                    continue;
                }
            }

            // Pivot isolated.  Enforce the divisor chain: everything left must
            // be divisible by p, otherwise fold an offending row in and redo.
            let p = rows[pr][&pc].clone();
            let offender = rows.iter().enumerate().find(|(r, row)| {
                *r != pr
                    && active_rows[*r]
                    && row
                        .iter()
                        .any(|(c, v)| active_cols[*c] && !(v % &p).is_zero())
            });
            if let Some((r, _)) = offender {
                let extra = rows[r].clone();
                for (c, v) in extra {
                    let e = rows[pr].entry(c).or_insert_with(BigInt::zero);
                    *e += v;
                    if e.is_zero() {
                        rows[pr].remove(&c);
                    }
                }
                continue;
            }

            divisors.push(p.abs());
            active_rows[pr] = false;
            active_cols[pc] = false;
            continue 'outer;
        }
    }

    Ok(divisors)
}

fn min_in_column(
    rows: &[BTreeMap<usize, BigInt>],
    active_rows: &[bool],
    c: usize,
) -> Option<(usize, BigInt)> {
    let mut best: Option<(usize, BigInt)> = None;
    for (r, row) in rows.iter().enumerate() {
        if !active_rows[r] {
            continue;
        }
        if let Some(v) = row.get(&c) {
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some((r, a));
            }
        }
    }
    best
}

/// Quotient minimizing |v - q*p|.
fn nearest_quotient(v: &BigInt, p: &BigInt) -> BigInt {
    use num::Integer;
    let (mut q, r) = v.div_rem(p);
    let two_r = r.abs() * 2;
    if two_r > p.abs() {
        if (r.sign() == num::bigint::Sign::Minus) == (p.sign() == num::bigint::Sign::Minus) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// `rows[a] -= q * rows[b]`.
fn row_sub_scaled(rows: &mut [BTreeMap<usize, BigInt>], a: usize, b: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let b_row = rows[b].clone();
    for (c, v) in b_row {
        let delta = q * &v;
        let e = rows[a].entry(c).or_insert_with(BigInt::zero);
        *e -= delta;
        if e.is_zero() {
            rows[a].remove(&c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Coefficient, RingSpec};
    use super::*;

    fn mat(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix {
        let mut m = SparseMatrix::zero(RingSpec::Z, rows, cols);
        for &(r, c, v) in entries {
            m.set(r, c, Coefficient::from_i64(RingSpec::Z, v)).unwrap();
        }
        m
    }

    fn snf_i64(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> Vec<i64> {
        smith_normal_form(&mat(rows, cols, entries))
            .unwrap()
            .iter()
            .map(|d| {
                use num::ToPrimitive;
                d.to_i64().unwrap()
            })
            .collect()
    }

    #[test]
    fn circle_incidence_matrix() {
        // Two 0-cells, two 1-cells glued into a circle.
        assert_eq!(snf_i64(2, 2, &[(0, 0, -1), (0, 1, 1), (1, 0, 1), (1, 1, -1)]), vec![1]);
    }

    #[test]
    fn multiplication_by_two() {
        assert_eq!(snf_i64(1, 1, &[(0, 0, 2)]), vec![2]);
    }

    #[test]
    fn known_small_matrices() {
        assert_eq!(snf_i64(2, 2, &[(0, 0, 2), (0, 1, 4), (1, 0, 6), (1, 1, 8)]), vec![2, 4]);
        assert_eq!(snf_i64(2, 2, &[(0, 0, 4), (1, 1, 6)]), vec![2, 12]);
        assert_eq!(
            snf_i64(3, 3, &[(0, 0, 2), (1, 1, 6), (2, 2, 12)]),
            vec![2, 6, 12]
        );
        assert_eq!(snf_i64(2, 3, &[]), Vec::<i64>::new());
        // Divisor chain forced through an awkward layout.
        assert_eq!(snf_i64(2, 2, &[(0, 0, 2), (1, 1, 3)]), vec![1, 6]);
    }

    #[test]
    fn divisor_chain_property() {
        let m = mat(
            3,
            4,
            &[
                (0, 0, 6),
                (0, 1, 4),
                (0, 3, 2),
                (1, 1, 10),
                (1, 2, 4),
                (2, 0, 2),
                (2, 2, 8),
                (2, 3, 4),
            ],
        );
        let d = smith_normal_form(&m).unwrap();
        for w in d.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "chain broken: {d:?}");
        }
    }
}
