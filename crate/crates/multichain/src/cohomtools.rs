//! Cohomology rings with explicit representatives and structure constants,
//! the comparison of the multisimplicial and diagonal ring structures along
//! the shuffle map, and triple Massey products.
//!
//! Group computations (Betti numbers, torsion) run over any supported ring;
//! everything involving products — representatives, structure constants,
//! [`verify_ez_ring_iso`], [`massey_triple`] — needs field coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::complexes::{Chain, Cochain, ComplexView};
use crate::error::{Error, Result};
use crate::exactlin::{
    kernel_basis, solve, Coefficient, Echelon, HomologySummary, Reduction, RingSpec, SparseVec,
};
use crate::ezaw::{cup, ez_dual};
use crate::msets::{Diagonal, MSet};

/// Chosen cocycle representatives for one cohomology degree over a field,
/// together with the echelon data needed to express any cocycle of that
/// degree in terms of them.
pub struct CohomologyBasis<S: Ord + Clone> {
    degree: usize,
    reps: Vec<Cochain<S>>,
    ech: Echelon,
    /// Insertion index in `ech` -> position in `reps`.
    rep_slots: BTreeMap<usize, usize>,
}

impl<S: Ord + Clone + fmt::Display> CohomologyBasis<S> {
    pub fn new<M: MSet<Simplex = S>>(view: &ComplexView<M>, degree: usize) -> Result<Self> {
        let ring = view.ring();
        if !ring.is_field() {
            return Err(Error::NotAField(ring));
        }
        // delta_n is the transpose of the degree-(n+1) boundary matrix; its
        // kernel vectors are the cocycles.  The coboundaries are the rows of
        // the degree-n boundary matrix: row r lists delta of the r-th dual
        // generator one degree down.
        let delta = view.boundary_matrix(degree + 1)?.transpose();
        let cocycles = kernel_basis(&delta)?;
        let mut ech = Echelon::new(ring)?;
        if degree > 0 {
            let below = view.boundary_matrix(degree)?;
            let mut rows: Vec<SparseVec> = vec![SparseVec::new(); below.rows()];
            for (r, c, v) in below.entries() {
                rows[r].insert(c, v.clone());
            }
            for row in rows {
                if !row.is_empty() {
                    ech.insert(row);
                }
            }
        }
        let mut reps = Vec::new();
        let mut rep_slots = BTreeMap::new();
        for z in cocycles {
            let idx = ech.inserted();
            if let Reduction::Independent { .. } = ech.insert(z.clone()) {
                rep_slots.insert(idx, reps.len());
                reps.push(vec_to_cochain(view, &z, degree)?);
            }
        }
        Ok(CohomologyBasis { degree, reps, ech, rep_slots })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Dimension of the cohomology group.
    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[Cochain<S>] {
        &self.reps
    }

    /// Coordinates of the class of a cocycle in the chosen basis.
    pub fn coordinates<M: MSet<Simplex = S>>(
        &self,
        view: &ComplexView<M>,
        z: &Cochain<S>,
    ) -> Result<Vec<Coefficient>> {
        let (residue, used) = self.ech.reduce(&cochain_to_vec(view, z, self.degree)?);
        if !residue.is_empty() {
            return Err(Error::Invalid(format!(
                "cochain is not a degree-{} cocycle of this complex",
                self.degree
            )));
        }
        let mut coords = vec![Coefficient::zero(view.ring()); self.reps.len()];
        for (idx, v) in used {
            if let Some(&slot) = self.rep_slots.get(&idx) {
                coords[slot] = v;
            }
        }
        Ok(coords)
    }
}

fn cochain_to_vec<M: MSet>(
    view: &ComplexView<M>,
    alpha: &Cochain<M::Simplex>,
    degree: usize,
) -> Result<SparseVec> {
    let basis = view.basis(degree)?;
    let mut v = SparseVec::new();
    for (s, c) in alpha.iter() {
        match basis.binary_search(s) {
            Ok(i) => {
                v.insert(i, c.clone());
            }
            Err(_) => {
                return Err(Error::Invalid(format!(
                    "term {s} is not a degree-{degree} basis element"
                )))
            }
        }
    }
    Ok(v)
}

fn vec_to_cochain<M: MSet>(
    view: &ComplexView<M>,
    v: &SparseVec,
    degree: usize,
) -> Result<Cochain<M::Simplex>> {
    let basis = view.basis(degree)?;
    let mut out = Chain::zero(view.ring());
    for (&i, c) in v {
        out.add_term(basis[i].clone(), c.clone())?;
    }
    Ok(out)
}

/// One named cohomology generator.
pub struct RingGenerator<S: Ord + Clone> {
    pub name: String,
    pub degree: usize,
    pub representative: Cochain<S>,
}

/// One entry of the multiplication table, written in the generator basis of
/// the target degree.
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub total_degree: usize,
    pub coordinates: Vec<(String, Coefficient)>,
}

/// The cohomology ring of a complex up to a degree bound: groups in every
/// degree, and (over a field) named generators with their full
/// multiplication table.
pub struct RingPresentation<S: Ord + Clone> {
    pub ring: RingSpec,
    pub max_degree: usize,
    pub groups: Vec<HomologySummary>,
    pub generators: Vec<RingGenerator<S>>,
    pub products: Vec<ProductEntry>,
}

/// Computes the cohomology ring of the view up to `max_degree`.  Over a
/// non-field ring the groups are still computed but the product table is
/// empty (products need field coefficients).
pub fn ring_presentation<M: MSet>(
    view: &ComplexView<M>,
    max_degree: usize,
) -> Result<RingPresentation<M::Simplex>> {
    let ring = view.ring();
    let mut groups = Vec::new();
    for n in 0..=max_degree {
        groups.push(view.cohomology(n)?);
    }
    let mut generators = Vec::new();
    let mut products = Vec::new();
    if ring.is_field() {
        let mut bases = Vec::new();
        for n in 0..=max_degree {
            bases.push(CohomologyBasis::new(view, n)?);
        }
        let name = |d: usize, i: usize| format!("x{d}_{i}");
        for (d, basis) in bases.iter().enumerate() {
            for (i, rep) in basis.representatives().iter().enumerate() {
                generators.push(RingGenerator {
                    name: name(d, i),
                    degree: d,
                    representative: rep.clone(),
                });
            }
        }
        for p in 0..=max_degree {
            for q in 0..=max_degree - p {
                for (i, alpha) in bases[p].representatives().iter().enumerate() {
                    for (j, beta) in bases[q].representatives().iter().enumerate() {
                        let z = cup(view, alpha, p, beta, q)?;
                        let coords = bases[p + q].coordinates(view, &z)?;
                        let coordinates = coords
                            .into_iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(t, v)| (name(p + q, t), v))
                            .collect();
                        products.push(ProductEntry {
                            left: name(p, i),
                            right: name(q, j),
                            total_degree: p + q,
                            coordinates,
                        });
                    }
                }
            }
        }
    }
    Ok(RingPresentation { ring, max_degree, groups, generators, products })
}

impl<S: Ord + Clone + fmt::Display> fmt::Display for RingPresentation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "cohomology over {} up to degree {}:", self.ring, self.max_degree)?;
        for g in &self.groups {
            writeln!(f, "  {g}")?;
        }
        if !self.generators.is_empty() {
            writeln!(f, "generators:")?;
            for g in &self.generators {
                writeln!(f, "  {} (degree {}) = {}", g.name, g.degree, g.representative)?;
            }
            writeln!(f, "products:")?;
            for p in &self.products {
                let rhs = if p.coordinates.is_empty() {
                    "0".to_string()
                } else {
                    p.coordinates
                        .iter()
                        .map(|(n, v)| {
                            if v.is_one() {
                                n.clone()
                            } else {
                                format!("{v}*{n}")
                            }
                        })
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                writeln!(f, "  {} * {} = {}", p.left, p.right, rhs)?;
            }
        }
        Ok(())
    }
}

/// Outcome of comparing the multisimplicial cohomology ring with the
/// diagonal one along the dual shuffle map, degree by degree.
pub struct EzCompatReport {
    pub max_degree: usize,
    pub betti_multi: Vec<usize>,
    pub betti_diag: Vec<usize>,
    pub betti_match: bool,
    /// Every transported representative is again a cocycle.
    pub transports_cocycles: bool,
    /// The induced map is an isomorphism on cohomology in each degree.
    pub induces_isomorphism: bool,
    /// `ez_dual(a cup b) == ez_dual(a) cup ez_dual(b)` held exactly, as
    /// cochains, for every pair of diagonal representatives.
    pub multiplicative_on_cochains: bool,
}

impl EzCompatReport {
    pub fn ok(&self) -> bool {
        self.betti_match
            && self.transports_cocycles
            && self.induces_isomorphism
            && self.multiplicative_on_cochains
    }
}

impl fmt::Display for EzCompatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dual shuffle map comparison up to degree {}: {}",
            self.max_degree,
            if self.ok() { "ok" } else { "FAILED" }
        )?;
        writeln!(f, "  betti (multisimplicial): {:?}", self.betti_multi)?;
        writeln!(f, "  betti (diagonal):        {:?}", self.betti_diag)?;
        writeln!(f, "  cocycles transported:    {}", self.transports_cocycles)?;
        writeln!(f, "  iso on cohomology:       {}", self.induces_isomorphism)?;
        write!(f, "  multiplicative:          {}", self.multiplicative_on_cochains)
    }
}

/// Checks, over a field, that the dual shuffle map carries the diagonal
/// cohomology ring isomorphically onto the multisimplicial one up to
/// `max_degree`: Betti numbers agree, transported representatives are
/// cocycles spanning cohomology, and the map is multiplicative at the level
/// of cochains (not just up to coboundary).
pub fn verify_ez_ring_iso<M: MSet + Clone>(
    view: &ComplexView<M>,
    max_degree: usize,
) -> Result<EzCompatReport> {
    let ring = view.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring));
    }
    let diag_view =
        ComplexView::new(Diagonal::new(view.mset().clone()), ring, view.mode(), view.cap());
    let mut betti_multi = Vec::new();
    let mut betti_diag = Vec::new();
    let mut transports_cocycles = true;
    let mut induces_isomorphism = true;
    let mut diag_bases = Vec::new();
    for n in 0..=max_degree {
        let mb = CohomologyBasis::new(view, n)?;
        let db = CohomologyBasis::new(&diag_view, n)?;
        betti_multi.push(mb.rank());
        betti_diag.push(db.rank());
        let mut image = Echelon::new(ring)?;
        for gamma in db.representatives() {
            let t = ez_dual(view, gamma, n)?;
            if !view.coboundary(&t, n)?.is_zero() {
                transports_cocycles = false;
                continue;
            }
            let coords = mb.coordinates(view, &t)?;
            let v: SparseVec = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            image.insert(v);
        }
        if image.rank() != mb.rank() || mb.rank() != db.rank() {
            induces_isomorphism = false;
        }
        diag_bases.push(db);
    }
    let mut multiplicative_on_cochains = true;
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for g1 in diag_bases[p].representatives() {
                for g2 in diag_bases[q].representatives() {
                    let lhs = ez_dual(view, &cup(&diag_view, g1, p, g2, q)?, p + q)?;
                    let rhs = cup(
                        view,
                        &ez_dual(view, g1, p)?,
                        p,
                        &ez_dual(view, g2, q)?,
                        q,
                    )?;
                    if lhs != rhs {
                        multiplicative_on_cochains = false;
                    }
                }
            }
        }
    }
    let betti_match = betti_multi == betti_diag;
    Ok(EzCompatReport {
        max_degree,
        betti_multi,
        betti_diag,
        betti_match,
        transports_cocycles,
        induces_isomorphism,
        multiplicative_on_cochains,
    })
}

/// A triple Massey product `<a, b, c>`: the representative
/// `u cup c + (-1)^(p+1) a cup v` built from chosen bounding cochains
/// `delta u = a cup b`, `delta v = b cup c`, its coordinates in the basis of
/// `H^(p+q+r-1)`, and the indeterminacy subspace
/// `a cup H^(q+r-1) + H^(p+q-1) cup c` expressed in the same coordinates.
pub struct MasseyOutcome<S: Ord + Clone> {
    pub degrees: (usize, usize, usize),
    pub representative: Cochain<S>,
    pub coordinates: Vec<Coefficient>,
    pub target_rank: usize,
    pub indeterminacy_rank: usize,
    pub vanishes_mod_indeterminacy: bool,
}

impl<S: Ord + Clone + fmt::Display> fmt::Display for MasseyOutcome<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q, r) = self.degrees;
        writeln!(f, "massey product of degrees ({p}, {q}, {r}) in H^{}:", p + q + r - 1)?;
        writeln!(f, "  representative: {}", self.representative)?;
        let coords: Vec<String> = self.coordinates.iter().map(|c| c.to_string()).collect();
        writeln!(f, "  class: [{}] (target rank {})", coords.join(", "), self.target_rank)?;
        write!(
            f,
            "  indeterminacy rank {}; vanishes modulo indeterminacy: {}",
            self.indeterminacy_rank, self.vanishes_mod_indeterminacy
        )
    }
}

/// Computes the triple Massey product of cocycles `a`, `b`, `c` of positive
/// degrees `p`, `q`, `r`.  Fails with [`Error::NotExact`] when `a cup b` or
/// `b cup c` is not a coboundary (the product is then undefined), and with
/// [`Error::Invalid`] when an input is not a cocycle.
pub fn massey_triple<M: MSet>(
    view: &ComplexView<M>,
    a: &Cochain<M::Simplex>,
    p: usize,
    b: &Cochain<M::Simplex>,
    q: usize,
    c: &Cochain<M::Simplex>,
    r: usize,
) -> Result<MasseyOutcome<M::Simplex>> {
    let ring = view.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring));
    }
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::Invalid("massey products need positive degrees".into()));
    }
    for (x, d, label) in [(a, p, "first"), (b, q, "second"), (c, r, "third")] {
        if !view.coboundary(x, d)?.is_zero() {
            return Err(Error::Invalid(format!("{label} input is not a cocycle")));
        }
    }
    let u = bound(view, &cup(view, a, p, b, q)?, p + q)?;
    let v = bound(view, &cup(view, b, q, c, r)?, q + r)?;
    let first = cup(view, &u, p + q - 1, c, r)?;
    let second = cup(view, a, p, &v, q + r - 1)?;
    let w = first.add(&if p.is_multiple_of(2) { second.neg() } else { second })?;
    let target_degree = p + q + r - 1;
    if !view.coboundary(&w, target_degree)?.is_zero() {
        return Err(Error::Invalid("massey representative failed the cocycle check".into()));
    }
    let target = CohomologyBasis::new(view, target_degree)?;
    let coordinates = target.coordinates(view, &w)?;

    let mut inde = Echelon::new(ring)?;
    let left_factors = CohomologyBasis::new(view, q + r - 1)?;
    for z in left_factors.representatives() {
        let coords = target.coordinates(view, &cup(view, a, p, z, q + r - 1)?)?;
        push_coords(&mut inde, coords);
    }
    let right_factors = CohomologyBasis::new(view, p + q - 1)?;
    for z in right_factors.representatives() {
        let coords = target.coordinates(view, &cup(view, z, p + q - 1, c, r)?)?;
        push_coords(&mut inde, coords);
    }
    let as_vec: SparseVec = coordinates
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect();
    let vanishes_mod_indeterminacy = inde.reduce(&as_vec).0.is_empty();
    Ok(MasseyOutcome {
        degrees: (p, q, r),
        representative: w,
        coordinates,
        target_rank: target.rank(),
        indeterminacy_rank: inde.rank(),
        vanishes_mod_indeterminacy,
    })
}

/// Solves `delta u = z` for a cochain `u` one degree below `degree`;
/// [`Error::NotExact`] when no solution exists.
pub fn bound<M: MSet>(
    view: &ComplexView<M>,
    z: &Cochain<M::Simplex>,
    degree: usize,
) -> Result<Cochain<M::Simplex>> {
    if degree == 0 {
        return if z.is_zero() { Ok(Chain::zero(view.ring())) } else { Err(Error::NotExact) };
    }
    let delta = view.boundary_matrix(degree)?.transpose();
    let b = cochain_to_vec(view, z, degree)?;
    match solve(&delta, &b)? {
        Some(x) => vec_to_cochain(view, &x, degree - 1),
        None => Err(Error::NotExact),
    }
}

fn push_coords(ech: &mut Echelon, coords: Vec<Coefficient>) {
    let v: SparseVec =
        coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    if !v.is_empty() {
        ech.insert(v);
    }
}
