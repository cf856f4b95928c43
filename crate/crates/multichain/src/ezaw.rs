//! The shuffle (Eilenberg-Zilber) map into the diagonal, the two
//! Alexander-Whitney maps, tensor chains with the Koszul differential, and
//! the cup products built from them.
//!
//! A [`Shuffle`] is stored as its lattice path: the word listing, step by
//! step, which direction advances.  [`ez`] sends a multidegree
//! `(a_1, ..., a_k)` generator to a signed sum over all such paths of
//! degeneracy images living in the diagonal; [`aw_multisimplicial`] splits a
//! generator into signed front/back tensor pairs, and [`cup`] is its dual
//! pairing on cochains.  [`verify_square`] checks on explicit chains that
//! the two routes from a multisimplicial chain to a tensor of diagonal
//! chains — `aw_simplicial` after `ez`, versus `ez (x) ez` after
//! `aw_multisimplicial` — agree on the nose.

use std::fmt;

use crate::complexes::{pair, simplex_boundary, Chain, Cochain, ComplexView};
use crate::error::{Error, Result};
use crate::exactlin::Coefficient;
use crate::msets::{
    back_face, front_face, total_degree, Diagonal, MSet, MultiIndex, ProdSimplex,
    ProductOfSimplicial,
};

/// An `(a_1, ..., a_k)`-shuffle as a lattice path from the origin to
/// `(a_1, ..., a_k)`: entry `j` is the direction (1-based) advanced at step
/// `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Shuffle {
    path: Vec<u8>,
}

impl Shuffle {
    pub fn from_path(path: Vec<u8>) -> Result<Self> {
        if path.contains(&0) {
            return Err(Error::Invalid("shuffle path steps are 1-based directions".into()));
        }
        Ok(Shuffle { path })
    }

    pub fn path(&self) -> &[u8] {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    /// How many steps go in each of directions `1..=k`.
    pub fn multidegree(&self, k: usize) -> MultiIndex {
        let mut a = vec![0usize; k];
        for &d in &self.path {
            a[d as usize - 1] += 1;
        }
        a
    }

    /// All shuffles of the given multidegree, ascending in the path word.
    pub fn enumerate(multidegree: &[usize]) -> Vec<Shuffle> {
        fn rec(remaining: &mut [usize], path: &mut Vec<u8>, n: usize, out: &mut Vec<Shuffle>) {
            if path.len() == n {
                out.push(Shuffle { path: path.clone() });
                return;
            }
            for dir in 0..remaining.len() {
                if remaining[dir] > 0 {
                    remaining[dir] -= 1;
                    path.push((dir + 1) as u8);
                    rec(remaining, path, n, out);
                    path.pop();
                    remaining[dir] += 1;
                }
            }
        }
        let n = total_degree(multidegree);
        let mut remaining = multidegree.to_vec();
        let mut out = Vec::new();
        rec(&mut remaining, &mut Vec::with_capacity(n), n, &mut out);
        out
    }

    /// Inversions of the associated permutation: pairs of steps where a
    /// higher direction precedes a lower one.  The shuffle's sign is the
    /// parity of this count.
    pub fn inversions(&self) -> usize {
        let mut inv = 0;
        for s in 0..self.path.len() {
            for t in s + 1..self.path.len() {
                if self.path[s] > self.path[t] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// The degeneracy word in direction `dir`: the indices `j` whose step
    /// `j + 1` moves in some other direction, ascending.  Applying
    /// `s^dir_j` for these `j` from lowest to highest realizes the monotone
    /// map of the shuffle in that direction.
    pub fn degeneracy_indices(&self, dir: usize) -> Vec<usize> {
        self.path
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d as usize != dir)
            .map(|(j, _)| j)
            .collect()
    }

    /// The path running this one, then `back`.
    pub fn concat(&self, back: &Shuffle) -> Shuffle {
        let mut path = self.path.clone();
        path.extend_from_slice(&back.path);
        Shuffle { path }
    }

    /// Cuts the path once it has advanced exactly `front` in every
    /// direction; fails when it never passes through that lattice point.
    pub fn split(&self, front: &[usize]) -> Result<(Shuffle, Shuffle)> {
        let cut = total_degree(front);
        if cut > self.path.len() {
            return Err(Error::NoSplit);
        }
        let mut seen = vec![0usize; front.len()];
        for &d in &self.path[..cut] {
            let dir = d as usize - 1;
            if dir >= front.len() {
                return Err(Error::NoSplit);
            }
            seen[dir] += 1;
        }
        if seen != front {
            return Err(Error::NoSplit);
        }
        Ok((Shuffle { path: self.path[..cut].to_vec() }, Shuffle { path: self.path[cut..].to_vec() }))
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.iter().all(|&d| d <= 9) {
            for d in &self.path {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.path.iter().map(|d| d.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// The degeneracy image of `x` under a shuffle of its multidegree: in every
/// direction the indices where the path moves elsewhere, lowest first.  The
/// result is a diagonal simplex of degree `|a|`.
pub fn apply_shuffle<M: MSet>(m: &M, x: &M::Simplex, sh: &Shuffle) -> Result<M::Simplex> {
    let a = m.multidegree(x);
    if sh.multidegree(m.directions()) != a {
        return Err(Error::Invalid(format!("shuffle {sh} does not match multidegree {a:?}")));
    }
    let mut cur = x.clone();
    for dir in 1..=m.directions() {
        for j in sh.degeneracy_indices(dir) {
            cur = m.degeneracy(&cur, dir, j)?;
        }
    }
    Ok(cur)
}

/// The shuffle map into the diagonal: the signed sum of [`apply_shuffle`]
/// over all shuffles of the multidegree of each term.
pub fn ez<M: MSet>(m: &M, c: &Chain<M::Simplex>) -> Result<Chain<M::Simplex>> {
    ez_raw(m, c, true)
}

/// [`ez`] with the shuffle signs optionally dropped; the unsigned variant is
/// not a chain map and exists as a negative control for consistency checks.
pub(crate) fn ez_raw<M: MSet>(
    m: &M,
    c: &Chain<M::Simplex>,
    signed: bool,
) -> Result<Chain<M::Simplex>> {
    let mut out = Chain::zero(c.ring());
    for (x, coeff) in c.iter() {
        let a = m.multidegree(x);
        for sh in Shuffle::enumerate(&a) {
            let y = apply_shuffle(m, x, &sh)?;
            let v = if signed && sh.inversions() % 2 == 1 { coeff.neg() } else { coeff.clone() };
            out.add_term(y, v)?;
        }
    }
    Ok(out)
}

/// An elementary tensor of two simplices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorTerm<S>(pub S, pub S);

impl<S: fmt::Display> fmt::Display for TensorTerm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(x){}", self.0, self.1)
    }
}

/// A formal sum of elementary tensors.
pub type TensorChain<S> = Chain<TensorTerm<S>>;

/// The Koszul differential on elementary tensors:
/// `d(a (x) b) = da (x) b + (-1)^|a| a (x) db` with `|a|` the total degree.
pub fn tensor_boundary<M: MSet>(
    m: &M,
    tc: &TensorChain<M::Simplex>,
) -> Result<TensorChain<M::Simplex>> {
    let ring = tc.ring();
    let mut out = Chain::zero(ring);
    for (TensorTerm(a, b), coeff) in tc.iter() {
        for (t, v) in simplex_boundary(m, a, ring)?.iter() {
            out.add_term(TensorTerm(t.clone(), b.clone()), coeff.mul(v))?;
        }
        let flip = total_degree(&m.multidegree(a)) % 2 == 1;
        for (t, v) in simplex_boundary(m, b, ring)?.iter() {
            let w = coeff.mul(v);
            out.add_term(TensorTerm(a.clone(), t.clone()), if flip { w.neg() } else { w })?;
        }
    }
    Ok(out)
}

/// All componentwise-bounded multi-indices `0 <= i <= a`, ascending.
fn sub_multidegrees(a: &[usize]) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; a.len()];
    loop {
        out.push(cur.clone());
        let mut pos = a.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < a[pos] {
                cur[pos] += 1;
                for v in cur[pos + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Parity exponent of the front/back splitting `i` of multidegree `a`:
/// `sum over l < h of i_h * (a_l - i_l)`.
fn splitting_exponent(i: &[usize], a: &[usize]) -> usize {
    let mut e = 0;
    for l in 0..a.len() {
        for h in l + 1..a.len() {
            e += i[h] * (a[l] - i[l]);
        }
    }
    e
}

/// The multisimplicial Alexander-Whitney map: for each term of multidegree
/// `a` the signed sum over all splittings `i <= a` of
/// `front_i (x) back_(a-i)`, with sign `(-1)^(sum over l<h of i_h(a_l-i_l))`.
pub fn aw_multisimplicial<M: MSet>(
    m: &M,
    c: &Chain<M::Simplex>,
) -> Result<TensorChain<M::Simplex>> {
    let mut out = Chain::zero(c.ring());
    for (x, coeff) in c.iter() {
        let a = m.multidegree(x);
        for i in sub_multidegrees(&a) {
            let front = front_face(m, x, &i)?;
            let rest: MultiIndex = a.iter().zip(&i).map(|(&ad, &id)| ad - id).collect();
            let back = back_face(m, x, &rest)?;
            let v = if splitting_exponent(&i, &a) % 2 == 1 { coeff.neg() } else { coeff.clone() };
            out.add_term(TensorTerm(front, back), v)?;
        }
    }
    Ok(out)
}

/// The classical Alexander-Whitney map of a one-direction complex: the
/// unsigned sum of `front_i (x) back_(n-i)` over `i = 0..=n`.
pub fn aw_simplicial<M: MSet>(m: &M, c: &Chain<M::Simplex>) -> Result<TensorChain<M::Simplex>> {
    if m.directions() != 1 {
        return Err(Error::Invalid(
            "the simplicial Alexander-Whitney map needs a one-direction complex".into(),
        ));
    }
    let mut out = Chain::zero(c.ring());
    for (x, coeff) in c.iter() {
        let n = m.multidegree(x)[0];
        for i in 0..=n {
            let front = front_face(m, x, &[i])?;
            let back = back_face(m, x, &[n - i])?;
            out.add_term(TensorTerm(front, back), coeff.clone())?;
        }
    }
    Ok(out)
}

/// The multivariable shuffle map assembling one chain per simplicial factor
/// into a chain on their external product.
pub fn ez_tensor<M: MSet + Clone>(
    factors: &[M],
    chains: &[Chain<M::Simplex>],
) -> Result<Chain<ProdSimplex<M::Simplex>>> {
    if factors.is_empty() || factors.len() != chains.len() {
        return Err(Error::Invalid("need one chain per product factor".into()));
    }
    let ring = chains[0].ring();
    for c in chains {
        if c.ring() != ring {
            return Err(Error::RingMismatch(c.ring(), ring));
        }
    }
    let prod = ProductOfSimplicial::new(factors.to_vec())?;
    let mut assembled = Chain::zero(ring);
    let mut stack: Vec<(Vec<M::Simplex>, Coefficient)> = vec![(Vec::new(), Coefficient::one(ring))];
    for c in chains {
        let mut next = Vec::new();
        for (prefix, acc) in &stack {
            for (x, v) in c.iter() {
                let mut longer = prefix.clone();
                longer.push(x.clone());
                next.push((longer, acc.mul(v)));
            }
        }
        stack = next;
    }
    for (combo, acc) in stack {
        assembled.add_term(ProdSimplex(combo), acc)?;
    }
    ez(&prod, &assembled)
}

/// The cup product dual to [`aw_multisimplicial`]:
/// `(alpha cup beta)(x) = sum of signs * alpha(front_i x) * beta(back_(a-i) x)`
/// over splittings with `|i| = p`, evaluated on the degree `p + q` basis.
pub fn cup<M: MSet>(
    view: &ComplexView<M>,
    alpha: &Cochain<M::Simplex>,
    p: usize,
    beta: &Cochain<M::Simplex>,
    q: usize,
) -> Result<Cochain<M::Simplex>> {
    if alpha.ring() != view.ring() {
        return Err(Error::RingMismatch(alpha.ring(), view.ring()));
    }
    if beta.ring() != view.ring() {
        return Err(Error::RingMismatch(beta.ring(), view.ring()));
    }
    let m = view.mset();
    let mut out = Chain::zero(view.ring());
    for x in view.basis(p + q)?.iter() {
        let a = m.multidegree(x);
        let mut acc = Coefficient::zero(view.ring());
        for i in sub_multidegrees(&a) {
            if total_degree(&i) != p {
                continue;
            }
            let av = alpha.coeff(&front_face(m, x, &i)?);
            if av.is_zero() {
                continue;
            }
            let rest: MultiIndex = a.iter().zip(&i).map(|(&ad, &id)| ad - id).collect();
            let bv = beta.coeff(&back_face(m, x, &rest)?);
            if bv.is_zero() {
                continue;
            }
            let term = av.mul(&bv);
            acc = acc.add(&if splitting_exponent(&i, &a) % 2 == 1 { term.neg() } else { term });
        }
        if !acc.is_zero() {
            out.add_term(x.clone(), acc)?;
        }
    }
    Ok(out)
}

/// Pullback of a diagonal cochain along [`ez`]:
/// `(ez_dual gamma)(x) = gamma(ez x)` over the degree-`degree` basis.
pub fn ez_dual<M: MSet>(
    view: &ComplexView<M>,
    gamma: &Cochain<M::Simplex>,
    degree: usize,
) -> Result<Cochain<M::Simplex>> {
    if gamma.ring() != view.ring() {
        return Err(Error::RingMismatch(gamma.ring(), view.ring()));
    }
    let m = view.mset();
    let mut out = Chain::zero(view.ring());
    for x in view.basis(degree)?.iter() {
        let image = ez(m, &Chain::generator(view.ring(), x.clone()))?;
        let v = pair(gamma, &image)?;
        if !v.is_zero() {
            out.add_term(x.clone(), v)?;
        }
    }
    Ok(out)
}

/// Outcome of checking `aw_simplicial(ez(c)) == (ez (x) ez)(aw_multisimplicial(c))`
/// on a single chain.
#[derive(Clone, Debug)]
pub struct SquareReport<S: Ord + Clone> {
    pub lhs: TensorChain<S>,
    pub rhs: TensorChain<S>,
    pub equal: bool,
    /// Summands of `lhs` whose left (resp. right) factor is degenerate as a
    /// diagonal simplex, and those with at least one degenerate factor.
    pub degenerate_left: usize,
    pub degenerate_right: usize,
    pub degenerate_summands: usize,
}

impl<S: Ord + Clone + fmt::Display> fmt::Display for SquareReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equal {
            write!(
                f,
                "square commutes: {} summands agree, {} with a degenerate factor",
                self.lhs.len(),
                self.degenerate_summands
            )
        } else {
            write!(f, "square FAILS:\n  lhs = {}\n  rhs = {}", self.lhs, self.rhs)
        }
    }
}

/// Checks that the two routes from a multisimplicial chain to a tensor of
/// diagonal chains agree on `c`.
pub fn verify_square<M: MSet + Clone>(
    m: &M,
    c: &Chain<M::Simplex>,
) -> Result<SquareReport<M::Simplex>> {
    verify_square_raw(m, c, true)
}

/// [`verify_square`] with the shuffle signs of every `ez` application
/// optionally dropped (negative control).
pub(crate) fn verify_square_raw<M: MSet + Clone>(
    m: &M,
    c: &Chain<M::Simplex>,
    signed: bool,
) -> Result<SquareReport<M::Simplex>> {
    let ring = c.ring();
    let diag = Diagonal::new(m.clone());
    let lhs = aw_simplicial(&diag, &ez_raw(m, c, signed)?)?;
    let mut rhs: TensorChain<M::Simplex> = Chain::zero(ring);
    for (TensorTerm(x, y), coeff) in aw_multisimplicial(m, c)?.iter() {
        let ex = ez_raw(m, &Chain::generator(ring, x.clone()), signed)?;
        let ey = ez_raw(m, &Chain::generator(ring, y.clone()), signed)?;
        for (u, cu) in ex.iter() {
            for (v, cv) in ey.iter() {
                rhs.add_term(TensorTerm(u.clone(), v.clone()), coeff.mul(cu).mul(cv))?;
            }
        }
    }
    let mut degenerate_left = 0;
    let mut degenerate_right = 0;
    let mut degenerate_summands = 0;
    for (TensorTerm(u, v), _) in lhs.iter() {
        let du = diag.is_degenerate(u);
        let dv = diag.is_degenerate(v);
        degenerate_left += du as usize;
        degenerate_right += dv as usize;
        degenerate_summands += (du || dv) as usize;
    }
    let equal = lhs == rhs;
    Ok(SquareReport { lhs, rhs, equal, degenerate_left, degenerate_right, degenerate_summands })
}
