//! Multisimplicial sets: a trait for sets graded by multidegrees with
//! per-direction faces and degeneracies, plus the standard models and the
//! diagonal / external-product constructions.
//!
//! Conventions used throughout the crate:
//! * directions are 1-based (`1..=k`);
//! * a face in direction `l` exists only when that direction's degree is at
//!   least 1 — there are no simplices of negative degree, and chain-level
//!   differentials simply skip directions of degree 0;
//! * simplex types are `Ord` so that every basis, chain, and matrix built on
//!   top of them is deterministic.

use std::fmt;

use crate::error::{Error, Result};

/// Multidegree `(a_1, ..., a_k)`.
pub type MultiIndex = Vec<usize>;

/// Total degree of a multidegree.
pub fn total_degree(a: &[usize]) -> usize {
    a.iter().sum()
}

/// A multisimplicial set.
pub trait MSet {
    type Simplex: Clone + Ord + fmt::Debug + fmt::Display;

    /// Number of simplicial directions `k`.
    fn directions(&self) -> usize;

    /// The multidegree of a simplex (length `k`).
    fn multidegree(&self, x: &Self::Simplex) -> MultiIndex;

    /// Face `d^dir_i` (`dir` is 1-based, `0 <= i <= a_dir`, requires
    /// `a_dir >= 1`).
    fn face(&self, x: &Self::Simplex, dir: usize, i: usize) -> Result<Self::Simplex>;

    /// Degeneracy `s^dir_i` (`0 <= i <= a_dir`).
    fn degeneracy(&self, x: &Self::Simplex, dir: usize, i: usize) -> Result<Self::Simplex>;

    /// All simplices of the given multidegree, ascending.  Degenerate
    /// simplices are included.
    fn enumerate(&self, multidegree: &[usize]) -> Result<Vec<Self::Simplex>>;

    /// Parse a simplex from its display form.
    fn parse_simplex(&self, s: &str) -> Result<Self::Simplex>;

    fn degree(&self, x: &Self::Simplex) -> usize {
        total_degree(&self.multidegree(x))
    }

    /// Whether `x` lies in the image of some degeneracy operator of this
    /// structure.  The default uses the identity `s_i d_{i+1} x = x` which
    /// characterizes `x = s_i y`.
    fn is_degenerate(&self, x: &Self::Simplex) -> bool {
        let a = self.multidegree(x);
        for dir in 1..=self.directions() {
            for i in 0..a[dir - 1] {
                let inner = self
                    .face(x, dir, i + 1)
                    .expect("face within range");
                let back = self
                    .degeneracy(&inner, dir, i)
                    .expect("degeneracy within range");
                if back == *x {
                    return true;
                }
            }
        }
        false
    }
}

/// Iterated top faces in every direction until the multidegree drops to
/// `target`: the "front" restriction of `x`.
pub fn front_face<M: MSet>(m: &M, x: &M::Simplex, target: &[usize]) -> Result<M::Simplex> {
    let a = m.multidegree(x);
    check_target(&a, target)?;
    let mut cur = x.clone();
    for dir in 1..=m.directions() {
        let mut deg = a[dir - 1];
        while deg > target[dir - 1] {
            cur = m.face(&cur, dir, deg)?;
            deg -= 1;
        }
    }
    Ok(cur)
}

/// Iterated zeroth faces in every direction until the multidegree drops to
/// `target`: the "back" restriction of `x`.
pub fn back_face<M: MSet>(m: &M, x: &M::Simplex, target: &[usize]) -> Result<M::Simplex> {
    let a = m.multidegree(x);
    check_target(&a, target)?;
    let mut cur = x.clone();
    for dir in 1..=m.directions() {
        let mut deg = a[dir - 1];
        while deg > target[dir - 1] {
            cur = m.face(&cur, dir, 0)?;
            deg -= 1;
        }
    }
    Ok(cur)
}

fn check_target(a: &[usize], target: &[usize]) -> Result<()> {
    if target.len() != a.len() || target.iter().zip(a).any(|(t, a)| t > a) {
        return Err(Error::IndexOutOfRange(format!(
            "target multidegree {target:?} does not sit under {a:?}"
        )));
    }
    Ok(())
}

/// All `k`-part compositions of `n` (parts may be zero), ascending
/// lexicographically.
pub fn compositions(n: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; k];
    fn rec(n: usize, pos: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if pos + 1 == cur.len() {
            cur[pos] = n;
            out.push(cur.clone());
            return;
        }
        for v in 0..=n {
            cur[pos] = v;
            rec(n - v, pos + 1, cur, out);
        }
    }
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, 0, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Standard multisimplicial sets
// ---------------------------------------------------------------------------

/// A tuple of weakly monotone maps, one per direction; the simplex type of
/// [`StandardMSet`].  Component `l` lists the images of `0..=b_l`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonotoneMaps(pub Vec<Vec<u8>>);

impl fmt::Display for MonotoneMaps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| render_digits(m)).collect();
        write!(f, "{}", parts.join("|"))
    }
}

fn render_digits(values: &[u8]) -> String {
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_digits(s: &str) -> Result<Vec<u8>> {
    let bad = |s: &str| Error::Invalid(format!("cannot parse vertex list {s:?}"));
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse::<u8>().map_err(|_| bad(s))).collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(s)))
            .collect()
    }
}

/// The standard multisimplicial set of shape `(a_1, ..., a_k)`: its
/// `(b_1, ..., b_k)`-simplices are tuples of weakly monotone maps
/// `[b_l] -> [a_l]`.  Nondegenerate simplices are the tuples of strictly
/// monotone maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardMSet {
    shape: MultiIndex,
}

impl StandardMSet {
    pub fn new(shape: MultiIndex) -> Self {
        StandardMSet { shape }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// The unique top-dimensional nondegenerate simplex (identity maps).
    pub fn top_simplex(&self) -> MonotoneMaps {
        MonotoneMaps(self.shape.iter().map(|&a| (0..=a as u8).collect()).collect())
    }
}

fn monotone_maps_into(len: usize, top: u8) -> Vec<Vec<u8>> {
    // All weakly increasing sequences of the given length with values 0..=top.
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, top: u8, min: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in min..=top {
            cur.push(v);
            rec(len, top, v, cur, out);
            cur.pop();
        }
    }
    rec(len, top, 0, &mut cur, &mut out);
    out
}

impl MSet for StandardMSet {
    type Simplex = MonotoneMaps;

    fn directions(&self) -> usize {
        self.shape.len()
    }

    fn multidegree(&self, x: &MonotoneMaps) -> MultiIndex {
        x.0.iter().map(|m| m.len() - 1).collect()
    }

    fn face(&self, x: &MonotoneMaps, dir: usize, i: usize) -> Result<MonotoneMaps> {
        let comp = x.0.get(dir - 1).ok_or_else(|| bad_dir(dir))?;
        if comp.len() < 2 || i >= comp.len() {
            return Err(Error::IndexOutOfRange(format!(
                "face {i} in direction {dir} of a degree-{} component",
                comp.len() - 1
            )));
        }
        let mut out = x.clone();
        out.0[dir - 1].remove(i);
        Ok(out)
    }

    fn degeneracy(&self, x: &MonotoneMaps, dir: usize, i: usize) -> Result<MonotoneMaps> {
        let comp = x.0.get(dir - 1).ok_or_else(|| bad_dir(dir))?;
        if i >= comp.len() {
            return Err(Error::IndexOutOfRange(format!(
                "degeneracy {i} in direction {dir} of a degree-{} component",
                comp.len() - 1
            )));
        }
        let mut out = x.clone();
        let v = out.0[dir - 1][i];
        out.0[dir - 1].insert(i, v);
        Ok(out)
    }

    fn enumerate(&self, multidegree: &[usize]) -> Result<Vec<MonotoneMaps>> {
        if multidegree.len() != self.shape.len() {
            return Err(Error::Invalid(format!(
                "multidegree {multidegree:?} has wrong length for shape {:?}",
                self.shape
            )));
        }
        let per_dir: Vec<Vec<Vec<u8>>> = multidegree
            .iter()
            .zip(&self.shape)
            .map(|(&b, &a)| monotone_maps_into(b + 1, a as u8))
            .collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; per_dir.len()];
        'prod: loop {
            out.push(MonotoneMaps(
                choice.iter().zip(&per_dir).map(|(&i, maps)| maps[i].clone()).collect(),
            ));
            for pos in (0..choice.len()).rev() {
                choice[pos] += 1;
                if choice[pos] < per_dir[pos].len() {
                    continue 'prod;
                }
                choice[pos] = 0;
            }
            break;
        }
        out.sort();
        Ok(out)
    }

    fn parse_simplex(&self, s: &str) -> Result<MonotoneMaps> {
        let comps: Vec<Vec<u8>> =
            s.split('|').map(parse_digits).collect::<Result<_>>()?;
        if comps.len() != self.shape.len() {
            return Err(Error::Invalid(format!(
                "expected {} components, got {}",
                self.shape.len(),
                comps.len()
            )));
        }
        for (l, (comp, &a)) in comps.iter().zip(&self.shape).enumerate() {
            if comp.is_empty()
                || comp.windows(2).any(|w| w[0] > w[1])
                || comp.iter().any(|&v| v as usize > a)
            {
                return Err(Error::Invalid(format!(
                    "component {} is not a monotone map into [0..{a}]",
                    l + 1
                )));
            }
        }
        Ok(MonotoneMaps(comps))
    }
}

fn bad_dir(dir: usize) -> Error {
    Error::IndexOutOfRange(format!("direction {dir} out of range"))
}

// ---------------------------------------------------------------------------
// Diagonal
// ---------------------------------------------------------------------------

/// The diagonal simplicial set of a multisimplicial set: `n`-simplices are
/// the simplices of multidegree `(n, ..., n)`, with `d_i` (resp. `s_i`)
/// acting as `d^l_i` (resp. `s^l_i`) in every direction at once.
#[derive(Debug, Clone)]
pub struct Diagonal<M> {
    inner: M,
}

impl<M: MSet> Diagonal<M> {
    pub fn new(inner: M) -> Self {
        Diagonal { inner }
    }

    pub fn inner(&self) -> &M {
        &self.inner
    }

    fn diag_degree(&self, x: &M::Simplex) -> usize {
        let a = self.inner.multidegree(x);
        debug_assert!(
            a.windows(2).all(|w| w[0] == w[1]),
            "not a diagonal simplex: multidegree {a:?}"
        );
        a.first().copied().unwrap_or(0)
    }
}

impl<M: MSet> MSet for Diagonal<M> {
    type Simplex = M::Simplex;

    fn directions(&self) -> usize {
        1
    }

    fn multidegree(&self, x: &M::Simplex) -> MultiIndex {
        vec![self.diag_degree(x)]
    }

    fn face(&self, x: &M::Simplex, dir: usize, i: usize) -> Result<M::Simplex> {
        if dir != 1 {
            return Err(bad_dir(dir));
        }
        let mut cur = x.clone();
        for l in 1..=self.inner.directions() {
            cur = self.inner.face(&cur, l, i)?;
        }
        Ok(cur)
    }

    fn degeneracy(&self, x: &M::Simplex, dir: usize, i: usize) -> Result<M::Simplex> {
        if dir != 1 {
            return Err(bad_dir(dir));
        }
        let mut cur = x.clone();
        for l in 1..=self.inner.directions() {
            cur = self.inner.degeneracy(&cur, l, i)?;
        }
        Ok(cur)
    }

    fn enumerate(&self, multidegree: &[usize]) -> Result<Vec<M::Simplex>> {
        if multidegree.len() != 1 {
            return Err(Error::Invalid("diagonal enumeration takes a single degree".into()));
        }
        self.inner.enumerate(&vec![multidegree[0]; self.inner.directions()])
    }

    fn parse_simplex(&self, s: &str) -> Result<M::Simplex> {
        let x = self.inner.parse_simplex(s)?;
        let a = self.inner.multidegree(&x);
        if a.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::MalformedDiagonal(format!(
                "multidegree {a:?} is not constant"
            )));
        }
        Ok(x)
    }
}

// ---------------------------------------------------------------------------
// External products of simplicial sets
// ---------------------------------------------------------------------------

/// A tuple of simplices, one per factor; simplex type of
/// [`ProductOfSimplicial`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProdSimplex<S>(pub Vec<S>);

impl<S: fmt::Display> fmt::Display for ProdSimplex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// The external product of simplicial sets, one direction per factor:
/// `(X_1 x ... x X_k)_{(a_1..a_k)} = X_1(a_1) x ... x X_k(a_k)` with
/// direction `l` acting on slot `l`.  Its diagonal is the usual product
/// simplicial set.
#[derive(Debug, Clone)]
pub struct ProductOfSimplicial<M> {
    factors: Vec<M>,
}

impl<M: MSet> ProductOfSimplicial<M> {
    pub fn new(factors: Vec<M>) -> Result<Self> {
        if factors.iter().any(|f| f.directions() != 1) {
            return Err(Error::Invalid(
                "external products take simplicial (one-direction) factors".into(),
            ));
        }
        Ok(ProductOfSimplicial { factors })
    }

    pub fn factors(&self) -> &[M] {
        &self.factors
    }
}

impl<M: MSet> MSet for ProductOfSimplicial<M> {
    type Simplex = ProdSimplex<M::Simplex>;

    fn directions(&self) -> usize {
        self.factors.len()
    }

    fn multidegree(&self, x: &Self::Simplex) -> MultiIndex {
        x.0.iter().zip(&self.factors).map(|(s, f)| f.degree(s)).collect()
    }

    fn face(&self, x: &Self::Simplex, dir: usize, i: usize) -> Result<Self::Simplex> {
        let f = self.factors.get(dir - 1).ok_or_else(|| bad_dir(dir))?;
        let mut out = x.clone();
        out.0[dir - 1] = f.face(&x.0[dir - 1], 1, i)?;
        Ok(out)
    }

    fn degeneracy(&self, x: &Self::Simplex, dir: usize, i: usize) -> Result<Self::Simplex> {
        let f = self.factors.get(dir - 1).ok_or_else(|| bad_dir(dir))?;
        let mut out = x.clone();
        out.0[dir - 1] = f.degeneracy(&x.0[dir - 1], 1, i)?;
        Ok(out)
    }

    fn enumerate(&self, multidegree: &[usize]) -> Result<Vec<Self::Simplex>> {
        if multidegree.len() != self.factors.len() {
            return Err(Error::Invalid(format!(
                "multidegree {multidegree:?} has wrong length for {} factors",
                self.factors.len()
            )));
        }
        let per: Vec<Vec<M::Simplex>> = multidegree
            .iter()
            .zip(&self.factors)
            .map(|(&b, f)| f.enumerate(&[b]))
            .collect::<Result<_>>()?;
        let mut out = vec![ProdSimplex(Vec::new())];
        for list in &per {
            let mut next = Vec::with_capacity(out.len() * list.len());
            for partial in &out {
                for s in list {
                    let mut t = partial.clone();
                    t.0.push(s.clone());
                    next.push(t);
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }

    fn parse_simplex(&self, s: &str) -> Result<Self::Simplex> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != self.factors.len() {
            return Err(Error::Invalid(format!(
                "expected {} factors, got {}",
                self.factors.len(),
                parts.len()
            )));
        }
        let comps = parts
            .iter()
            .zip(&self.factors)
            .map(|(p, f)| f.parse_simplex(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProdSimplex(comps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_are_lexicographic_and_complete() {
        assert_eq!(compositions(2, 2), vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(compositions(0, 3), vec![vec![0, 0, 0]]);
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(4, 3).len(), 15);
    }

    #[test]
    fn standard_square_has_one_nondegenerate_top_cell() {
        let sq = StandardMSet::new(vec![1, 1]);
        let all = sq.enumerate(&[1, 1]).unwrap();
        assert_eq!(all.len(), 9);
        let nondeg: Vec<_> = all.iter().filter(|x| !sq.is_degenerate(x)).collect();
        assert_eq!(nondeg.len(), 1);
        assert_eq!(nondeg[0].to_string(), "01|01");
        assert_eq!(*nondeg[0], sq.top_simplex());
    }

    #[test]
    fn standard_faces_and_degeneracies_obey_simplicial_identities() {
        let m = StandardMSet::new(vec![2, 1]);
        let x = m.parse_simplex("0122|011").unwrap();
        assert_eq!(m.multidegree(&x), vec![3, 2]);
        // d_i d_j = d_{j-1} d_i for i < j, within one direction.
        for dir in 1..=2 {
            let top = m.multidegree(&x)[dir - 1];
            for j in 1..=top {
                for i in 0..j {
                    let a = m.face(&m.face(&x, dir, j).unwrap(), dir, i).unwrap();
                    let b = m.face(&m.face(&x, dir, i).unwrap(), dir, j - 1).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
        // Faces in different directions commute.
        let a = m.face(&m.face(&x, 1, 2).unwrap(), 2, 0).unwrap();
        let b = m.face(&m.face(&x, 2, 0).unwrap(), 1, 2).unwrap();
        assert_eq!(a, b);
        // s then the two neutralizing faces.
        let s = m.degeneracy(&x, 1, 1).unwrap();
        assert_eq!(m.face(&s, 1, 1).unwrap(), x);
        assert_eq!(m.face(&s, 1, 2).unwrap(), x);
    }

    #[test]
    fn front_back_restrict_standard_simplices() {
        let m = StandardMSet::new(vec![2]);
        let top = m.top_simplex();
        assert_eq!(front_face(&m, &top, &[1]).unwrap().to_string(), "01");
        assert_eq!(back_face(&m, &top, &[1]).unwrap().to_string(), "12");
        assert_eq!(front_face(&m, &top, &[0]).unwrap().to_string(), "0");
        assert_eq!(back_face(&m, &top, &[0]).unwrap().to_string(), "2");
        assert!(front_face(&m, &top, &[3]).is_err());
    }

    #[test]
    fn diagonal_of_the_square_is_the_triangulated_square() {
        let interval = StandardMSet::new(vec![1]);
        let prod = ProductOfSimplicial::new(vec![interval.clone(), interval]).unwrap();
        let diag = Diagonal::new(prod);
        let count_nondeg = |n: usize| {
            diag.enumerate(&[n])
                .unwrap()
                .into_iter()
                .filter(|x| !diag.is_degenerate(x))
                .count()
        };
        // Square: 4 vertices, 4 edges + 1 diagonal, 2 triangles.
        assert_eq!(count_nondeg(0), 4);
        assert_eq!(count_nondeg(1), 5);
        assert_eq!(count_nondeg(2), 2);
        assert_eq!(count_nondeg(3), 0);
    }

    #[test]
    fn degenerate_in_product_structure_but_not_on_diagonal() {
        // The tuple (011, 001) is multisimplicially nondegenerate in
        // neither slot... both slots are degenerate maps, but at different
        // indices, so the diagonal sees a nondegenerate 2-simplex.
        let interval = StandardMSet::new(vec![1]);
        let prod = ProductOfSimplicial::new(vec![interval.clone(), interval]).unwrap();
        let x = prod.parse_simplex("011;001").unwrap();
        assert!(prod.is_degenerate(&x));
        let diag = Diagonal::new(prod);
        assert!(!diag.is_degenerate(&x));
    }

    #[test]
    fn parse_round_trips() {
        let m = StandardMSet::new(vec![2, 1]);
        for s in ["012|01", "002|11", "0|0"] {
            if s.matches('|').count() == 1 {
                if let Ok(x) = m.parse_simplex(s) {
                    assert_eq!(m.parse_simplex(&x.to_string()).unwrap(), x);
                }
            }
        }
        assert!(m.parse_simplex("021|01").is_err()); // not monotone
        assert!(m.parse_simplex("013|01").is_err()); // exceeds shape
        assert!(m.parse_simplex("01").is_err()); // wrong arity
    }
}
