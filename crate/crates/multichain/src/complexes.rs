//! Chains, cochains, and chain-complex views of a multisimplicial set:
//! signed differentials, boundary matrices, (co)homology, and the explicit
//! normalization homotopy.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::exactlin::{homology_of_pair, Coefficient, HomologySummary, RingSpec, SparseMatrix};
use crate::msets::{compositions, MSet};

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

/// A finitely supported formal sum of simplices with coefficients in one
/// ring.  Terms are kept sorted and never store zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain<S: Ord> {
    ring: RingSpec,
    terms: BTreeMap<S, Coefficient>,
}

/// Cochains share the representation of chains: a finitely supported
/// assignment of coefficients to basis simplices.
pub type Cochain<S> = Chain<S>;

impl<S: Ord + Clone> Chain<S> {
    pub fn zero(ring: RingSpec) -> Self {
        Chain { ring, terms: BTreeMap::new() }
    }

    pub fn generator(ring: RingSpec, s: S) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(s, Coefficient::one(ring));
        Chain { ring, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (S, Coefficient)>>(
        ring: RingSpec,
        iter: I,
    ) -> Result<Self> {
        let mut out = Chain::zero(ring);
        for (s, c) in iter {
            out.add_term(s, c)?;
        }
        Ok(out)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &S) -> Coefficient {
        self.terms.get(s).cloned().unwrap_or_else(|| Coefficient::zero(self.ring))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, &Coefficient)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<S, Coefficient> {
        self.terms
    }

    pub fn add_term(&mut self, s: S, c: Coefficient) -> Result<()> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(c.ring(), self.ring));
        }
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&s) {
            None => {
                self.terms.insert(s, c);
            }
            Some(old) => {
                let next = old.add(&c);
                if !next.is_zero() {
                    self.terms.insert(s, next);
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch(other.ring, self.ring));
        }
        let mut out = self.clone();
        for (s, c) in &other.terms {
            out.add_term(s.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(s, c)| (s.clone(), c.neg())).collect();
        Chain { ring: self.ring, terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, lambda: &Coefficient) -> Result<Self> {
        if lambda.ring() != self.ring {
            return Err(Error::RingMismatch(lambda.ring(), self.ring));
        }
        let mut out = Chain::zero(self.ring);
        for (s, c) in &self.terms {
            out.add_term(s.clone(), c.mul(lambda))?;
        }
        Ok(out)
    }
}

/// The bilinear pairing of a cochain against a chain: sum of products of
/// matching coefficients, with no extra sign.
pub fn pair<S: Ord + Clone>(alpha: &Cochain<S>, c: &Chain<S>) -> Result<Coefficient> {
    if alpha.ring() != c.ring() {
        return Err(Error::RingMismatch(alpha.ring(), c.ring()));
    }
    let mut acc = Coefficient::zero(c.ring());
    for (s, v) in c.iter() {
        let a = alpha.coeff(s);
        if !a.is_zero() {
            acc = acc.add(&a.mul(v));
        }
    }
    Ok(acc)
}

/// [`simplex_boundary`] extended linearly to a whole chain.
pub fn chain_boundary<M: MSet>(m: &M, c: &Chain<M::Simplex>) -> Result<Chain<M::Simplex>> {
    let mut out = Chain::zero(c.ring());
    for (x, coeff) in c.iter() {
        out = out.add(&simplex_boundary(m, x, c.ring())?.scale(coeff)?)?;
    }
    Ok(out)
}

/// Signed differential of a single generator, with no normalization applied.
/// Direction `l` contributes `sum_t (-1)^(t + a_1 + ... + a_(l-1)) d^l_t`
/// and is skipped entirely when `a_l = 0`.
pub fn simplex_boundary<M: MSet>(
    m: &M,
    x: &M::Simplex,
    ring: RingSpec,
) -> Result<Chain<M::Simplex>> {
    let one = Coefficient::one(ring);
    let a = m.multidegree(x);
    let mut out = Chain::zero(ring);
    let mut prefix = 0usize;
    for dir in 1..=m.directions() {
        let ad = a[dir - 1];
        if ad >= 1 {
            for t in 0..=ad {
                let y = m.face(x, dir, t)?;
                let signed = if (prefix + t).is_multiple_of(2) { one.clone() } else { one.neg() };
                out.add_term(y, signed)?;
            }
        }
        prefix += ad;
    }
    Ok(out)
}

impl<S: Ord + Clone + fmt::Display> fmt::Display for Chain<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            let repr = c.to_exact_string();
            let (neg, mag) = match repr.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, repr),
            };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag == "1" {
                write!(f, "{s}")?;
            } else {
                write!(f, "{mag}*{s}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Complex views
// ---------------------------------------------------------------------------

/// Whether a view works with all simplices or with the normalized complex
/// (degenerate simplices collapsed to zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Full,
    Normalized,
}

/// A chain-complex view of a multisimplicial set over a fixed ring: graded
/// bases (cached), differentials, boundary matrices, and (co)homology.
/// `cap` bounds the degrees for which bases may be materialized.
pub struct ComplexView<M: MSet> {
    mset: M,
    ring: RingSpec,
    mode: Mode,
    cap: usize,
    bases: RwLock<BTreeMap<usize, Arc<Vec<M::Simplex>>>>,
}

impl<M: MSet> ComplexView<M> {
    pub fn new(mset: M, ring: RingSpec, mode: Mode, cap: usize) -> Self {
        ComplexView { mset, ring, mode, cap, bases: RwLock::new(BTreeMap::new()) }
    }

    pub fn mset(&self) -> &M {
        &self.mset
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Sorted basis of the degree-`n` chain group (all simplices of total
    /// degree `n`, nondegenerate ones only in normalized mode).
    pub fn basis(&self, n: usize) -> Result<Arc<Vec<M::Simplex>>> {
        if n > self.cap {
            return Err(Error::CapTooLow { cap: self.cap, needed: n });
        }
        if let Some(b) = self.bases.read().expect("basis lock").get(&n) {
            return Ok(Arc::clone(b));
        }
        let mut list = Vec::new();
        for a in compositions(n, self.mset.directions()) {
            for x in self.mset.enumerate(&a)? {
                if self.mode == Mode::Normalized && self.mset.is_degenerate(&x) {
                    continue;
                }
                list.push(x);
            }
        }
        list.sort();
        let arc = Arc::new(list);
        self.bases.write().expect("basis lock").insert(n, Arc::clone(&arc));
        Ok(arc)
    }

    pub fn dimension(&self, n: usize) -> Result<usize> {
        Ok(self.basis(n)?.len())
    }

    /// The signed differential.  Direction `l` contributes
    /// `sum_t (-1)^(t + a_1 + ... + a_(l-1)) d^l_t` and is skipped entirely
    /// when `a_l = 0`; in normalized mode degenerate input terms and
    /// degenerate faces are dropped.
    pub fn boundary(&self, c: &Chain<M::Simplex>) -> Result<Chain<M::Simplex>> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(c.ring(), self.ring));
        }
        let mut out = Chain::zero(self.ring);
        for (x, coeff) in c.iter() {
            if self.mode == Mode::Normalized && self.mset.is_degenerate(x) {
                continue;
            }
            let a = self.mset.multidegree(x);
            let mut prefix = 0usize;
            for dir in 1..=self.mset.directions() {
                let ad = a[dir - 1];
                if ad >= 1 {
                    for t in 0..=ad {
                        let y = self.mset.face(x, dir, t)?;
                        if self.mode == Mode::Normalized && self.mset.is_degenerate(&y) {
                            continue;
                        }
                        let signed =
                            if (prefix + t).is_multiple_of(2) { coeff.clone() } else { coeff.neg() };
                        out.add_term(y, signed)?;
                    }
                }
                prefix += ad;
            }
        }
        Ok(out)
    }

    /// The dual differential on cochains: `(coboundary a)(x) = a(boundary x)`
    /// for `x` running over the degree-`(degree+1)` basis.
    pub fn coboundary(
        &self,
        alpha: &Cochain<M::Simplex>,
        degree: usize,
    ) -> Result<Cochain<M::Simplex>> {
        if alpha.ring() != self.ring {
            return Err(Error::RingMismatch(alpha.ring(), self.ring));
        }
        let mut out = Chain::zero(self.ring);
        for x in self.basis(degree + 1)?.iter() {
            let v = pair(alpha, &self.boundary(&Chain::generator(self.ring, x.clone()))?)?;
            out.add_term(x.clone(), v)?;
        }
        Ok(out)
    }

    /// Matrix of the differential `C_n -> C_(n-1)` in the cached bases.
    /// Degree 0 yields a matrix with zero rows.
    pub fn boundary_matrix(&self, n: usize) -> Result<SparseMatrix> {
        let cols = self.basis(n)?;
        if n == 0 {
            return Ok(SparseMatrix::zero(self.ring, 0, cols.len()));
        }
        let rows = self.basis(n - 1)?;
        let mut m = SparseMatrix::zero(self.ring, rows.len(), cols.len());
        for (j, x) in cols.iter().enumerate() {
            let dx = self.boundary(&Chain::generator(self.ring, x.clone()))?;
            for (y, c) in dx.iter() {
                let i = rows
                    .binary_search(y)
                    .map_err(|_| Error::Invalid(format!("face {y} missing from basis")))?;
                m.set(i, j, c.clone())?;
            }
        }
        Ok(m)
    }

    /// Homology in one degree (needs bases up to `n + 1`).
    pub fn homology(&self, n: usize) -> Result<HomologySummary> {
        let d_in = self.boundary_matrix(n + 1)?;
        let d_out = self.boundary_matrix(n)?;
        homology_of_pair(n, &d_in, &d_out, self.ring)
    }

    /// Cohomology in one degree: kernel of the dual differential modulo its
    /// image.  Over `Z` the torsion reported is that of `H^n`.
    pub fn cohomology(&self, n: usize) -> Result<HomologySummary> {
        let d_in = self.boundary_matrix(n)?.transpose();
        let d_out = self.boundary_matrix(n + 1)?.transpose();
        homology_of_pair(n, &d_in, &d_out, self.ring)
    }

    /// Drop degenerate terms: the basis-level projection onto the normalized
    /// complex.
    pub fn project_normalized(&self, c: &Chain<M::Simplex>) -> Result<Chain<M::Simplex>> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(c.ring(), self.ring));
        }
        Chain::from_terms(
            self.ring,
            c.iter()
                .filter(|(s, _)| !self.mset.is_degenerate(s))
                .map(|(s, c)| (s.clone(), c.clone())),
        )
    }

    // -- normalization homotopy ---------------------------------------------

    /// The signed degeneracy `t^l_j = (-1)^(j + a_1 + ... + a_(l-1)) s^l_j`,
    /// extended by zero to terms whose direction-`l` degree is below `j`.
    /// This always acts in the full (unnormalized) complex.
    pub fn t_operator(
        &self,
        c: &Chain<M::Simplex>,
        dir: usize,
        j: usize,
    ) -> Result<Chain<M::Simplex>> {
        let mut out = Chain::zero(self.ring);
        for (x, coeff) in c.iter() {
            let a = self.mset.multidegree(x);
            if j > a[dir - 1] {
                continue;
            }
            let prefix: usize = a[..dir - 1].iter().sum();
            let y = self.mset.degeneracy(x, dir, j)?;
            let signed = if (prefix + j).is_multiple_of(2) { coeff.clone() } else { coeff.neg() };
            out.add_term(y, signed)?;
        }
        Ok(out)
    }

    fn boundary_full(&self, c: &Chain<M::Simplex>) -> Result<Chain<M::Simplex>> {
        chain_boundary(&self.mset, c)
    }

    /// One homotopy step `h^l_j = 1 - boundary t^l_j - t^l_j boundary`,
    /// returning `(h c, t c)`.
    fn homotopy_step(
        &self,
        c: &Chain<M::Simplex>,
        dir: usize,
        j: usize,
    ) -> Result<HomotopyPair<M::Simplex>> {
        let t = self.t_operator(c, dir, j)?;
        let h = c
            .sub(&self.boundary_full(&t)?)?
            .sub(&self.t_operator(&self.boundary_full(c)?, dir, j)?)?;
        Ok((h, t))
    }

    /// Replay a fixed list of `(direction, index)` homotopy steps on `c`,
    /// returning the final chain and the accumulated transfer
    /// `T = sum_i t_i h_(i-1) ... h_1`.
    pub fn apply_homotopy_steps(
        &self,
        c: &Chain<M::Simplex>,
        steps: &[(usize, usize)],
    ) -> Result<HomotopyPair<M::Simplex>> {
        let mut current = c.clone();
        let mut transfer = Chain::zero(self.ring);
        for &(dir, j) in steps {
            let (h, t) = self.homotopy_step(&current, dir, j)?;
            transfer = transfer.add(&t)?;
            current = h;
        }
        Ok((current, transfer))
    }

    /// Run the normalization homotopy on `c`: directions from last to first,
    /// degeneracy indices from high to low.  Returns the normalized chain
    /// `h(c)`, the transfer `T(c)`, and the step list actually taken, which
    /// satisfies `c - h(c) = boundary T(c) + T(boundary c)` when `T` is
    /// replayed with the same steps.
    pub fn normalize_with_homotopy(&self, c: &Chain<M::Simplex>) -> Result<NormalizationRun<M>> {
        if c.ring() != self.ring {
            return Err(Error::RingMismatch(c.ring(), self.ring));
        }
        let mut current = c.clone();
        let mut transfer = Chain::zero(self.ring);
        let mut steps = Vec::new();
        for dir in (1..=self.mset.directions()).rev() {
            let top = current
                .iter()
                .map(|(x, _)| self.mset.multidegree(x)[dir - 1])
                .max()
                .unwrap_or(0);
            for j in (0..top).rev() {
                let (h, t) = self.homotopy_step(&current, dir, j)?;
                steps.push((dir, j));
                transfer = transfer.add(&t)?;
                current = h;
            }
        }
        Ok(NormalizationRun { normalized: current, transfer, steps })
    }
}

/// A `(normalized part, transfer)` pair produced by the homotopy machinery.
pub type HomotopyPair<S> = (Chain<S>, Chain<S>);

/// Output of [`ComplexView::normalize_with_homotopy`].
pub struct NormalizationRun<M: MSet> {
    pub normalized: Chain<M::Simplex>,
    pub transfer: Chain<M::Simplex>,
    pub steps: Vec<(usize, usize)>,
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use crate::msets::StandardMSet;
    use crate::surjection::SurSet;

    use super::*;

    fn z() -> RingSpec {
        RingSpec::Z
    }

    fn sur_view(k: usize, cap_complexity: Option<usize>, mode: Mode, cap: usize) -> ComplexView<SurSet> {
        ComplexView::new(SurSet::new(k, cap_complexity).unwrap(), z(), mode, cap)
    }

    fn gen(view: &ComplexView<SurSet>, s: &str) -> Chain<crate::surjection::Surjection> {
        Chain::generator(z(), view.mset().parse_simplex(s).unwrap())
    }

    #[test]
    fn differential_on_a_mixed_degree_word() {
        let view = sur_view(3, None, Mode::Full, 4);
        let d = view.boundary(&gen(&view, "12321")).unwrap();
        // Directions of degree 0 contribute nothing.
        assert_eq!(d.to_string(), "1231 - 1232 - 1321 + 2321");
        let dd = view.boundary(&d).unwrap();
        assert!(dd.is_zero(), "d^2 = {dd}");
    }

    #[test]
    fn boundary_squares_to_zero_in_both_modes() {
        for mode in [Mode::Full, Mode::Normalized] {
            let view = sur_view(3, None, mode, 4);
            for n in 1..=3usize {
                for x in view.basis(n).unwrap().iter() {
                    let c = Chain::generator(z(), x.clone());
                    let dd = view.boundary(&view.boundary(&c).unwrap()).unwrap();
                    assert!(dd.is_zero(), "mode {mode:?}, x={x}");
                }
            }
        }
    }

    #[test]
    fn coboundary_squares_to_zero_and_pairs_with_boundary() {
        let view = sur_view(2, None, Mode::Normalized, 4);
        let alpha = gen(&view, "121"); // indicator cochain of a 1-simplex
        let d1 = view.coboundary(&alpha, 1).unwrap();
        let d2 = view.coboundary(&d1, 2).unwrap();
        assert!(d2.is_zero());
        for x in view.basis(2).unwrap().iter() {
            let c = Chain::generator(z(), x.clone());
            let lhs = pair(&d1, &c).unwrap();
            let rhs = pair(&alpha, &view.boundary(&c).unwrap()).unwrap();
            assert_eq!(lhs.to_exact_string(), rhs.to_exact_string());
        }
    }

    #[test]
    fn filtered_surjection_homology_over_z() {
        // Complexity <= 2 on two values: a circle.
        let view = sur_view(2, Some(2), Mode::Normalized, 3);
        let h0 = view.homology(0).unwrap();
        let h1 = view.homology(1).unwrap();
        assert_eq!((h0.betti, h0.torsion.len()), (1, 0));
        assert_eq!((h1.betti, h1.torsion.len()), (1, 0));

        // Complexity <= 3 on two values: betti (1, 0, 1).
        let view = sur_view(2, Some(3), Mode::Normalized, 4);
        let b: Vec<usize> = (0..=2).map(|n| view.homology(n).unwrap().betti).collect();
        assert_eq!(b, vec![1, 0, 1]);
        assert!((0..=2).all(|n| view.homology(n).unwrap().torsion.is_empty()));

        // Complexity <= 2 on three values: betti (1, 3, 2).
        let view = sur_view(3, Some(2), Mode::Normalized, 4);
        let b: Vec<usize> = (0..=2).map(|n| view.homology(n).unwrap().betti).collect();
        assert_eq!(b, vec![1, 3, 2]);
    }

    #[test]
    fn full_surjection_complex_is_contractible_looking() {
        // The full (unfiltered) family on two values has the homology of a
        // point through the range tested.
        let view = sur_view(2, None, Mode::Normalized, 5);
        let b: Vec<usize> = (0..=4).map(|n| view.homology(n).unwrap().betti).collect();
        assert_eq!(b, vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn standard_complex_has_point_homology() {
        let view = ComplexView::new(StandardMSet::new(vec![1, 1]), z(), Mode::Normalized, 3);
        let b: Vec<usize> = (0..=2).map(|n| view.homology(n).unwrap().betti).collect();
        assert_eq!(b, vec![1, 0, 0]);
        let c: Vec<usize> = (0..=2).map(|n| view.cohomology(n).unwrap().betti).collect();
        assert_eq!(c, vec![1, 0, 0]);
    }

    #[test]
    fn cap_errors_are_reported() {
        let view = sur_view(2, None, Mode::Normalized, 2);
        match view.homology(2) {
            Err(Error::CapTooLow { cap, needed }) => {
                assert_eq!((cap, needed), (2, 3));
            }
            other => panic!("expected CapTooLow, got {other:?}"),
        }
    }

    #[test]
    fn normalization_kills_a_degenerate_generator() {
        let view = sur_view(2, None, Mode::Full, 4);
        let run = view.normalize_with_homotopy(&gen(&view, "1121")).unwrap();
        assert!(run.normalized.is_zero(), "h(1121) = {}", run.normalized);
    }

    #[test]
    fn normalization_homotopy_identity() {
        let view = sur_view(3, None, Mode::Full, 5);
        for word in ["123", "1213", "11213", "12321", "112233"] {
            let c = gen(&view, word);
            let run = view.normalize_with_homotopy(&c).unwrap();
            // Same image in the quotient by degenerates.
            assert_eq!(
                view.project_normalized(&run.normalized).unwrap(),
                view.project_normalized(&c).unwrap(),
                "quotient image changed for {word}"
            );
            // c - h(c) = d T(c) + T(d c), with T replayed on d c.
            let dc = view.boundary(&c).unwrap();
            let (h_dc, t_dc) = view.apply_homotopy_steps(&dc, &run.steps).unwrap();
            let lhs = c.sub(&run.normalized).unwrap();
            let rhs = view.boundary(&run.transfer).unwrap().add(&t_dc).unwrap();
            assert_eq!(lhs, rhs, "homotopy identity failed for {word}");
            // h is a chain map when run with a common step list.
            assert_eq!(view.boundary(&run.normalized).unwrap(), h_dc);
        }
    }

    #[test]
    fn normalization_kills_every_degenerate_generator() {
        // h vanishing on degenerate simplices is what makes the inclusion of
        // the normalized complex a quasi-isomorphism.
        let view = sur_view(2, None, Mode::Full, 6);
        for n in 1..=4usize {
            for x in view.basis(n).unwrap().iter() {
                if !view.mset().is_degenerate(x) {
                    continue;
                }
                let run =
                    view.normalize_with_homotopy(&Chain::generator(z(), x.clone())).unwrap();
                assert!(run.normalized.is_zero(), "h({x}) = {}", run.normalized);
            }
        }
        let view3 = sur_view(3, None, Mode::Full, 5);
        for n in 1..=3usize {
            for x in view3.basis(n).unwrap().iter() {
                if !view3.mset().is_degenerate(x) {
                    continue;
                }
                let run =
                    view3.normalize_with_homotopy(&Chain::generator(z(), x.clone())).unwrap();
                assert!(run.normalized.is_zero(), "h({x}) = {}", run.normalized);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn boundary_of_boundary_vanishes_on_random_chains(
            words in proptest::collection::vec(proptest::collection::vec(1u8..=3, 0..5), 1..4),
            coeffs in proptest::collection::vec(-3i64..=3, 1..4),
        ) {
            let view = sur_view(3, None, Mode::Full, 8);
            let mut c = Chain::zero(z());
            for (w, &co) in words.iter().zip(&coeffs) {
                let mut word = w.clone();
                word.extend([1, 2, 3]);
                let s = view.mset().parse_simplex(&word.iter().map(|v| v.to_string()).collect::<String>()).unwrap();
                c.add_term(s, Coefficient::from_i64(z(), co)).unwrap();
            }
            let dd = view.boundary(&view.boundary(&c).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }

        #[test]
        fn normalization_works_on_random_words(
            w in proptest::collection::vec(1u8..=2, 0..5),
        ) {
            let view = sur_view(2, None, Mode::Full, 8);
            let mut word = w.clone();
            word.extend([1, 2]);
            let s = view.mset().parse_simplex(&word.iter().map(|v| v.to_string()).collect::<String>()).unwrap();
            let degenerate = view.mset().is_degenerate(&s);
            let c = Chain::generator(z(), s);
            let run = view.normalize_with_homotopy(&c).unwrap();
            if degenerate {
                prop_assert!(run.normalized.is_zero());
            }
            prop_assert_eq!(
                view.project_normalized(&run.normalized).unwrap(),
                view.project_normalized(&c).unwrap()
            );
            let dc = view.boundary(&c).unwrap();
            let (_, t_dc) = view.apply_homotopy_steps(&dc, &run.steps).unwrap();
            let lhs = c.sub(&run.normalized).unwrap();
            let rhs = view.boundary(&run.transfer).unwrap().add(&t_dc).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
