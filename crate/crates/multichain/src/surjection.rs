//! The surjection and Barratt-Eccles families: multisimplicial models,
//! complexity filtrations, counting polynomials, and the table companion map
//! from diagonal surjections to tuples of permutations.

use std::fmt;

use crate::error::{Error, Result};
use crate::msets::{Diagonal, MSet, MultiIndex};

// ---------------------------------------------------------------------------
// Surjection words
// ---------------------------------------------------------------------------

/// A finite sequence over `{1..=k}` hitting every value; the value `l`
/// appearing `a_l + 1` times makes this a simplex of multidegree
/// `(a_1, ..., a_k)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surjection {
    word: Vec<u8>,
}

impl Surjection {
    pub fn word(&self) -> &[u8] {
        &self.word
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_values(&self.word))
    }
}

fn render_values(values: &[u8]) -> String {
    if values.iter().all(|&v| v <= 9) {
        values.iter().map(|v| v.to_string()).collect()
    } else {
        values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_values(s: &str) -> Result<Vec<u8>> {
    let bad = |s: &str| Error::Invalid(format!("cannot parse value list {s:?}"));
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse::<u8>().map_err(|_| bad(s))).collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(s)))
            .collect()
    }
}

/// Complexity of a surjection word: the maximum, over value pairs `a < b`,
/// of the number of adjacent unequal pairs in the subsequence of `a`s and
/// `b`s.  Permutations have complexity 1; `121` has 2; `1212` has 3.
pub fn sur_complexity(word: &[u8]) -> usize {
    let k = word.iter().copied().max().unwrap_or(0);
    let mut best = 0usize;
    for a in 1..=k {
        for b in (a + 1)..=k {
            let mut last = 0u8;
            let mut trans = 0usize;
            for &v in word {
                if v == a || v == b {
                    if last != 0 && last != v {
                        trans += 1;
                    }
                    last = v;
                }
            }
            best = best.max(trans);
        }
    }
    best
}

/// The surjection multisimplicial set on `k` values, optionally cut down to
/// the subcomplex of complexity at most `cap`.  Faces delete occurrences,
/// degeneracies double them; a word is degenerate exactly when it has two
/// equal adjacent letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurSet {
    k: usize,
    cap: Option<usize>,
}

impl SurSet {
    pub fn full(k: usize) -> Result<Self> {
        Self::new(k, None)
    }

    pub fn filtered(k: usize, cap: usize) -> Result<Self> {
        Self::new(k, Some(cap))
    }

    pub fn new(k: usize, cap: Option<usize>) -> Result<Self> {
        if k == 0 || k > 60 {
            return Err(Error::Invalid(format!("arity {k} out of range")));
        }
        Ok(SurSet { k, cap })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    fn occurrence_positions(&self, word: &[u8], value: u8) -> Vec<usize> {
        word.iter()
            .enumerate()
            .filter_map(|(p, &v)| (v == value).then_some(p))
            .collect()
    }

    fn admissible(&self, word: &[u8]) -> bool {
        self.cap.is_none_or(|d| sur_complexity(word) <= d)
    }
}

impl MSet for SurSet {
    type Simplex = Surjection;

    fn directions(&self) -> usize {
        self.k
    }

    fn multidegree(&self, x: &Surjection) -> MultiIndex {
        let mut counts = vec![0usize; self.k];
        for &v in &x.word {
            counts[v as usize - 1] += 1;
        }
        counts.into_iter().map(|c| c - 1).collect()
    }

    fn face(&self, x: &Surjection, dir: usize, i: usize) -> Result<Surjection> {
        if dir == 0 || dir > self.k {
            return Err(Error::IndexOutOfRange(format!("direction {dir} out of range")));
        }
        let occ = self.occurrence_positions(&x.word, dir as u8);
        if occ.len() < 2 {
            return Err(Error::IndexOutOfRange(format!(
                "no faces in direction {dir}: degree 0"
            )));
        }
        if i >= occ.len() {
            return Err(Error::IndexOutOfRange(format!(
                "face index {i} exceeds degree {}",
                occ.len() - 1
            )));
        }
        let mut word = x.word.clone();
        word.remove(occ[i]);
        debug_assert!(self.admissible(&word), "face left the filtration");
        Ok(Surjection { word })
    }

    fn degeneracy(&self, x: &Surjection, dir: usize, i: usize) -> Result<Surjection> {
        if dir == 0 || dir > self.k {
            return Err(Error::IndexOutOfRange(format!("direction {dir} out of range")));
        }
        let occ = self.occurrence_positions(&x.word, dir as u8);
        if i >= occ.len() {
            return Err(Error::IndexOutOfRange(format!(
                "degeneracy index {i} exceeds degree {}",
                occ.len() - 1
            )));
        }
        let mut word = x.word.clone();
        word.insert(occ[i], dir as u8);
        Ok(Surjection { word })
    }

    fn enumerate(&self, multidegree: &[usize]) -> Result<Vec<Surjection>> {
        if multidegree.len() != self.k {
            return Err(Error::Invalid(format!(
                "multidegree {multidegree:?} has wrong length for arity {}",
                self.k
            )));
        }
        let counts: Vec<usize> = multidegree.iter().map(|a| a + 1).collect();
        let mut out = Vec::new();
        let mut state = PairState::new(self.k, self.cap);
        let mut remaining = counts;
        let mut word: Vec<u8> = Vec::new();
        enumerate_words(self.k, &mut remaining, &mut word, &mut state, false, &mut |w| {
            out.push(Surjection { word: w.to_vec() })
        });
        Ok(out)
    }

    fn parse_simplex(&self, s: &str) -> Result<Surjection> {
        let word = parse_values(s)?;
        let mut counts = vec![0usize; self.k];
        for &v in &word {
            if v == 0 || v as usize > self.k {
                return Err(Error::Invalid(format!(
                    "value {v} outside 1..={} in {s:?}",
                    self.k
                )));
            }
            counts[v as usize - 1] += 1;
        }
        if counts.contains(&0) {
            return Err(Error::Invalid(format!(
                "{s:?} does not hit every value in 1..={}",
                self.k
            )));
        }
        if !self.admissible(&word) {
            return Err(Error::Invalid(format!(
                "{s:?} has complexity {} above the filtration cap {}",
                sur_complexity(&word),
                self.cap.unwrap()
            )));
        }
        Ok(Surjection { word })
    }

    fn is_degenerate(&self, x: &Surjection) -> bool {
        x.word.windows(2).any(|w| w[0] == w[1])
    }
}

/// Tracks, per unordered value pair, which of the two was seen last and how
/// many alternations have occurred; prunes branches that exceed the cap.
struct PairState {
    k: usize,
    cap: Option<usize>,
    last: Vec<u8>,
    trans: Vec<usize>,
}

impl PairState {
    fn new(k: usize, cap: Option<usize>) -> Self {
        PairState { k, cap, last: vec![0; k * k], trans: vec![0; k * k] }
    }

    fn idx(&self, a: u8, b: u8) -> usize {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        (lo as usize - 1) * self.k + (hi as usize - 1)
    }

    /// Push value `v`, returning an undo list of `(index, previous_last)`.
    fn push(&mut self, v: u8) -> Vec<(usize, u8)> {
        let mut undo = Vec::with_capacity(self.k.saturating_sub(1));
        for other in 1..=self.k as u8 {
            if other == v {
                continue;
            }
            let i = self.idx(v, other);
            let prev = self.last[i];
            if prev != 0 && prev != v {
                self.trans[i] += 1;
            }
            undo.push((i, prev));
            self.last[i] = v;
        }
        undo
    }

    /// After pushing `v`: did some pair blow through the cap?
    fn over_cap(&self, v: u8) -> bool {
        match self.cap {
            None => false,
            Some(d) => (1..=self.k as u8)
                .any(|other| other != v && self.trans[self.idx(v, other)] > d),
        }
    }

    fn pop(&mut self, v: u8, undo: Vec<(usize, u8)>) {
        for (i, prev) in undo.into_iter().rev() {
            if prev != 0 && prev != v {
                self.trans[i] -= 1;
            }
            self.last[i] = prev;
        }
    }
}

fn enumerate_words(
    k: usize,
    remaining: &mut Vec<usize>,
    word: &mut Vec<u8>,
    state: &mut PairState,
    nondegenerate_only: bool,
    emit: &mut impl FnMut(&[u8]),
) {
    if remaining.iter().all(|&r| r == 0) {
        emit(word);
        return;
    }
    for v in 1..=k as u8 {
        if remaining[v as usize - 1] == 0 {
            continue;
        }
        if nondegenerate_only && word.last() == Some(&v) {
            continue;
        }
        let undo = state.push(v);
        if state.over_cap(v) {
            state.pop(v, undo);
            continue;
        }
        remaining[v as usize - 1] -= 1;
        word.push(v);
        enumerate_words(k, remaining, word, state, nondegenerate_only, emit);
        word.pop();
        remaining[v as usize - 1] += 1;
        state.pop(v, undo);
    }
}

// ---------------------------------------------------------------------------
// Barratt-Eccles
// ---------------------------------------------------------------------------

/// A permutation of `{1..=k}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    /// Does `a` appear before `b`?
    fn before(&self, a: u8, b: u8) -> bool {
        for &v in &self.0 {
            if v == a {
                return true;
            }
            if v == b {
                return false;
            }
        }
        unreachable!("both values occur in a permutation")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_values(&self.0))
    }
}

/// A tuple of permutations: a simplex of the Barratt-Eccles simplicial set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BETuple(pub Vec<Perm>);

impl fmt::Display for BETuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Complexity of a permutation tuple: one more than the maximum, over value
/// pairs, of the number of orientation changes along the tuple.  A single
/// permutation has complexity 1.
pub fn be_complexity(tuple: &[Perm]) -> usize {
    let k = tuple.first().map_or(0, |p| p.0.len());
    if k == 0 || tuple.is_empty() {
        return 0;
    }
    let mut worst = 0usize;
    for a in 1..=k as u8 {
        for b in (a + 1)..=k as u8 {
            let mut flips = 0usize;
            for w in tuple.windows(2) {
                if w[0].before(a, b) != w[1].before(a, b) {
                    flips += 1;
                }
            }
            worst = worst.max(flips);
        }
    }
    1 + worst
}

/// The Barratt-Eccles simplicial set on `k` symbols (tuples of permutations,
/// faces delete entries), optionally filtered by complexity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarrattEccles {
    k: usize,
    cap: Option<usize>,
}

impl BarrattEccles {
    pub fn full(k: usize) -> Result<Self> {
        Self::new(k, None)
    }

    pub fn filtered(k: usize, cap: usize) -> Result<Self> {
        Self::new(k, Some(cap))
    }

    pub fn new(k: usize, cap: Option<usize>) -> Result<Self> {
        if k == 0 || k > 8 {
            return Err(Error::Invalid(format!("arity {k} out of range")));
        }
        Ok(BarrattEccles { k, cap })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    fn admissible(&self, tuple: &[Perm]) -> bool {
        self.cap.is_none_or(|d| be_complexity(tuple) <= d)
    }

    fn all_perms(&self) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = Vec::new();
        let mut used = vec![false; self.k + 1];
        fn rec(k: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if cur.len() == k {
                out.push(Perm(cur.clone()));
                return;
            }
            for v in 1..=k as u8 {
                if !used[v as usize] {
                    used[v as usize] = true;
                    cur.push(v);
                    rec(k, cur, used, out);
                    cur.pop();
                    used[v as usize] = false;
                }
            }
        }
        rec(self.k, &mut cur, &mut used, &mut out);
        out
    }
}

impl MSet for BarrattEccles {
    type Simplex = BETuple;

    fn directions(&self) -> usize {
        1
    }

    fn multidegree(&self, x: &BETuple) -> MultiIndex {
        vec![x.0.len() - 1]
    }

    fn face(&self, x: &BETuple, dir: usize, i: usize) -> Result<BETuple> {
        if dir != 1 {
            return Err(Error::IndexOutOfRange(format!("direction {dir} out of range")));
        }
        if x.0.len() < 2 || i >= x.0.len() {
            return Err(Error::IndexOutOfRange(format!(
                "face index {i} on a degree-{} tuple",
                x.0.len() - 1
            )));
        }
        let mut t = x.clone();
        t.0.remove(i);
        Ok(t)
    }

    fn degeneracy(&self, x: &BETuple, dir: usize, i: usize) -> Result<BETuple> {
        if dir != 1 {
            return Err(Error::IndexOutOfRange(format!("direction {dir} out of range")));
        }
        if i >= x.0.len() {
            return Err(Error::IndexOutOfRange(format!(
                "degeneracy index {i} on a degree-{} tuple",
                x.0.len() - 1
            )));
        }
        let mut t = x.clone();
        let p = t.0[i].clone();
        t.0.insert(i, p);
        Ok(t)
    }

    fn enumerate(&self, multidegree: &[usize]) -> Result<Vec<BETuple>> {
        if multidegree.len() != 1 {
            return Err(Error::Invalid("Barratt-Eccles sets are simplicial".into()));
        }
        let n = multidegree[0];
        let fact: usize = (1..=self.k).product();
        if self.cap.is_none() {
            let size = fact.checked_pow(n as u32 + 1);
            if size.is_none_or(|s| s > 3_000_000) {
                return Err(Error::NotEnumerable(format!(
                    "degree-{n} tuples over S_{} without a complexity cap",
                    self.k
                )));
            }
        }
        let perms = self.all_perms();
        let mut out = Vec::new();
        let mut cur: Vec<Perm> = Vec::new();
        be_dfs(&perms, n + 1, self.cap, false, &mut cur, &mut |t| {
            out.push(BETuple(t.to_vec()))
        });
        Ok(out)
    }

    fn parse_simplex(&self, s: &str) -> Result<BETuple> {
        let parts: Vec<&str> = s.split('|').collect();
        let mut perms = Vec::with_capacity(parts.len());
        for p in &parts {
            let vals = parse_values(p)?;
            let mut seen = vec![false; self.k + 1];
            if vals.len() != self.k
                || vals.iter().any(|&v| {
                    if v == 0 || v as usize > self.k || seen[v as usize] {
                        true
                    } else {
                        seen[v as usize] = true;
                        false
                    }
                })
            {
                return Err(Error::Invalid(format!(
                    "{p:?} is not a permutation of 1..={}",
                    self.k
                )));
            }
            perms.push(Perm(vals));
        }
        if perms.is_empty() {
            return Err(Error::Invalid("empty permutation tuple".into()));
        }
        if !self.admissible(&perms) {
            return Err(Error::Invalid(format!(
                "{s:?} has complexity {} above the filtration cap {}",
                be_complexity(&perms),
                self.cap.unwrap()
            )));
        }
        Ok(BETuple(perms))
    }

    fn is_degenerate(&self, x: &BETuple) -> bool {
        x.0.windows(2).any(|w| w[0] == w[1])
    }
}

fn be_dfs(
    perms: &[Perm],
    len: usize,
    cap: Option<usize>,
    nondegenerate_only: bool,
    cur: &mut Vec<Perm>,
    emit: &mut impl FnMut(&[Perm]),
) {
    if cur.len() == len {
        emit(cur);
        return;
    }
    for p in perms {
        if nondegenerate_only && cur.last() == Some(p) {
            continue;
        }
        cur.push(p.clone());
        let ok = cap.is_none_or(|d| be_complexity(cur) <= d);
        if ok {
            be_dfs(perms, len, cap, nondegenerate_only, cur, emit);
        }
        cur.pop();
    }
}

// ---------------------------------------------------------------------------
// Counting polynomials
// ---------------------------------------------------------------------------

/// Generating polynomial (by degree) for the nondegenerate simplices of a
/// filtered family, factored through the overall `k!` symmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountingPolynomial {
    pub factor: u64,
    pub reduced: Vec<u64>,
}

impl CountingPolynomial {
    pub fn coefficient(&self, degree: usize) -> u64 {
        self.reduced.get(degree).copied().unwrap_or(0) * self.factor
    }

    pub fn total(&self) -> u64 {
        self.reduced.iter().sum::<u64>() * self.factor
    }

    fn from_counts(counts: Vec<u64>, factor: u64) -> Self {
        let mut counts = counts;
        while counts.last() == Some(&0) {
            counts.pop();
        }
        if counts.is_empty() {
            return CountingPolynomial { factor: 1, reduced: Vec::new() };
        }
        assert!(
            counts.iter().all(|c| c % factor == 0),
            "symmetry should divide every count"
        );
        CountingPolynomial {
            factor,
            reduced: counts.into_iter().map(|c| c / factor).collect(),
        }
    }
}

impl fmt::Display for CountingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.reduced.is_empty() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.reduced.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let term = match (c, i) {
                (c, 0) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (c, 1) => format!("{c}x"),
                (1, i) => format!("x^{i}"),
                (c, i) => format!("{c}x^{i}"),
            };
            terms.push(term);
        }
        let inner = terms.join(" + ");
        if self.factor == 1 {
            write!(f, "{inner}")
        } else {
            write!(f, "{}*({})", self.factor, inner)
        }
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Degree-by-degree count of nondegenerate surjection words of complexity at
/// most `d` on `k` values.
pub fn counting_polynomial_sur(k: usize, d: usize) -> Result<CountingPolynomial> {
    let set = SurSet::filtered(k, d)?;
    if k == 1 {
        return Ok(CountingPolynomial { factor: 1, reduced: vec![1] });
    }
    let pairs = k * (k - 1) / 2;
    let max_len = d * pairs + 1;
    if max_len < k {
        return Ok(CountingPolynomial::from_counts(Vec::new(), 1));
    }
    let mut counts = Vec::new();
    for n in 0..=(max_len - k) {
        let mut total = 0u64;
        for composition in crate::msets::compositions(n, k) {
            let mut remaining: Vec<usize> = composition.iter().map(|a| a + 1).collect();
            let mut state = PairState::new(k, set.cap());
            let mut word = Vec::new();
            enumerate_words(k, &mut remaining, &mut word, &mut state, true, &mut |_| {
                total += 1
            });
        }
        counts.push(total);
    }
    Ok(CountingPolynomial::from_counts(counts, factorial(k)))
}

/// Degree-by-degree count of nondegenerate permutation tuples of complexity
/// at most `d` on `k` symbols.
pub fn counting_polynomial_be(k: usize, d: usize) -> Result<CountingPolynomial> {
    let set = BarrattEccles::filtered(k, d)?;
    if k == 1 {
        return Ok(CountingPolynomial { factor: 1, reduced: vec![1] });
    }
    if d == 0 {
        return Ok(CountingPolynomial::from_counts(Vec::new(), 1));
    }
    let pairs = k * (k - 1) / 2;
    let perms = set.all_perms();
    let mut counts = Vec::new();
    for n in 0..=pairs * (d - 1) {
        let mut total = 0u64;
        let mut cur = Vec::new();
        be_dfs(&perms, n + 1, Some(d), true, &mut cur, &mut |_| total += 1);
        counts.push(total);
    }
    Ok(CountingPolynomial::from_counts(counts, factorial(k)))
}

// ---------------------------------------------------------------------------
// Table companion map
// ---------------------------------------------------------------------------

/// The table companion of a diagonal surjection word in which every value
/// occurs exactly `n + 1` times: permutation `j` reads off the order of the
/// `(j+1)`-st occurrences of the values.
pub fn tc(word: &[u8]) -> Result<BETuple> {
    let k = word.iter().copied().max().unwrap_or(0) as usize;
    if k == 0 {
        return Err(Error::MalformedDiagonal("empty word".into()));
    }
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (p, &v) in word.iter().enumerate() {
        occ[v as usize - 1].push(p);
    }
    let rows = occ[0].len();
    if rows == 0 || occ.iter().any(|o| o.len() != rows) {
        return Err(Error::MalformedDiagonal(format!(
            "{} is not a diagonal simplex: unequal occurrence counts",
            render_values(word)
        )));
    }
    let tuple = (0..rows)
        .map(|j| {
            let mut slots: Vec<(usize, u8)> =
                (1..=k as u8).map(|v| (occ[v as usize - 1][j], v)).collect();
            slots.sort();
            Perm(slots.into_iter().map(|(_, v)| v).collect())
        })
        .collect();
    Ok(BETuple(tuple))
}

/// Exhaustive check, in one diagonal degree, that the table companion is a
/// simplicial map and does not raise complexity.
#[derive(Debug, Clone)]
pub struct TcReport {
    pub k: usize,
    pub degree: usize,
    pub checked: usize,
    pub chain_map_ok: bool,
    pub filtration_ok: bool,
    pub max_input_complexity: usize,
    pub max_output_complexity: usize,
}

impl fmt::Display for TcReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "tc on {} diagonal simplices (k={}, degree {}): faces/degeneracies {}, filtration {} (complexity {} -> {})",
            self.checked,
            self.k,
            self.degree,
            if self.chain_map_ok { "commute" } else { "FAIL" },
            if self.filtration_ok { "respected" } else { "FAIL" },
            self.max_input_complexity,
            self.max_output_complexity,
        )
    }
}

pub fn tc_report(sur: &SurSet, degree: usize) -> Result<TcReport> {
    let diag = Diagonal::new(sur.clone());
    let be = BarrattEccles::new(sur.k(), None)?;
    let simplices = diag.enumerate(&[degree])?;
    let mut report = TcReport {
        k: sur.k(),
        degree,
        checked: 0,
        chain_map_ok: true,
        filtration_ok: true,
        max_input_complexity: 0,
        max_output_complexity: 0,
    };
    for x in &simplices {
        let image = tc(x.word())?;
        report.checked += 1;
        let cin = sur_complexity(x.word());
        let cout = be_complexity(&image.0);
        report.max_input_complexity = report.max_input_complexity.max(cin);
        report.max_output_complexity = report.max_output_complexity.max(cout);
        if cout > cin {
            report.filtration_ok = false;
        }
        if degree >= 1 {
            for i in 0..=degree {
                let lhs = tc(diag.face(x, 1, i)?.word())?;
                let rhs = be.face(&image, 1, i)?;
                if lhs != rhs {
                    report.chain_map_ok = false;
                }
            }
        }
        for i in 0..=degree {
            let lhs = tc(diag.degeneracy(x, 1, i)?.word())?;
            let rhs = be.degeneracy(&image, 1, i)?;
            if lhs != rhs {
                report.chain_map_ok = false;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sur(k: usize) -> SurSet {
        SurSet::full(k).unwrap()
    }

    #[test]
    fn faces_remove_the_right_occurrence() {
        let s = sur(3);
        let x = s.parse_simplex("12321").unwrap();
        assert_eq!(s.multidegree(&x), vec![1, 1, 0]);
        assert_eq!(s.face(&x, 1, 0).unwrap().to_string(), "2321");
        assert_eq!(s.face(&x, 1, 1).unwrap().to_string(), "1232");
        assert_eq!(s.face(&x, 2, 0).unwrap().to_string(), "1321");
        assert_eq!(s.face(&x, 2, 1).unwrap().to_string(), "1231");
        assert!(s.face(&x, 3, 0).is_err()); // degree 0 in direction 3
        assert_eq!(s.degeneracy(&x, 3, 0).unwrap().to_string(), "123321");
    }

    #[test]
    fn degeneracy_is_adjacent_repetition() {
        let s = sur(2);
        assert!(s.is_degenerate(&s.parse_simplex("1221").unwrap()));
        assert!(!s.is_degenerate(&s.parse_simplex("1212").unwrap()));
        // The generic criterion (s_i d_{i+1} x = x for some direction) must
        // agree with the adjacent-equality shortcut.
        for x in s.enumerate(&[2, 1]).unwrap() {
            let mut generic = false;
            let a = s.multidegree(&x);
            for dir in 1..=2 {
                for i in 0..a[dir - 1] {
                    let y = s.degeneracy(&s.face(&x, dir, i + 1).unwrap(), dir, i).unwrap();
                    if y == x {
                        generic = true;
                    }
                }
            }
            assert_eq!(generic, s.is_degenerate(&x), "simplex {x}");
        }
    }

    #[test]
    fn complexity_values() {
        assert_eq!(sur_complexity(&[1, 2]), 1);
        assert_eq!(sur_complexity(&[2, 1, 3]), 1);
        assert_eq!(sur_complexity(&[1, 2, 1]), 2);
        assert_eq!(sur_complexity(&[1, 2, 1, 2]), 3);
        assert_eq!(sur_complexity(&[1, 2, 1, 2, 1]), 4);
        assert_eq!(sur_complexity(&[1, 2, 2, 3, 3, 3, 1, 1, 2]), 3);
        assert_eq!(be_complexity(&[Perm(vec![2, 1, 3])]), 1);
        assert_eq!(be_complexity(&[Perm(vec![1, 2]), Perm(vec![2, 1])]), 2);
        assert_eq!(
            be_complexity(&[Perm(vec![1, 2]), Perm(vec![2, 1]), Perm(vec![1, 2])]),
            3
        );
    }

    #[test]
    fn filtration_caps_enumeration_and_parsing() {
        let s2 = SurSet::filtered(2, 2).unwrap();
        let deg1: Vec<String> =
            s2.enumerate(&[1, 0]).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(deg1, vec!["112", "121", "211"]);
        // 1212 has complexity 3 and is refused by the capped family.
        assert!(s2.parse_simplex("1212").is_err());
        assert!(SurSet::filtered(2, 3).unwrap().parse_simplex("1212").is_ok());
    }

    #[test]
    fn surjection_counting_polynomials_match_known_tables() {
        let p = counting_polynomial_sur(4, 2).unwrap();
        assert_eq!((p.factor, p.reduced.clone()), (24, vec![1, 6, 10, 5]));
        assert_eq!(p.to_string(), "24*(1 + 6x + 10x^2 + 5x^3)");

        let p = counting_polynomial_sur(3, 3).unwrap();
        assert_eq!((p.factor, p.reduced.clone()), (6, vec![1, 3, 7, 9, 6, 1]));
        assert_eq!(p.to_string(), "6*(1 + 3x + 7x^2 + 9x^3 + 6x^4 + x^5)");

        let p = counting_polynomial_sur(3, 2).unwrap();
        assert_eq!((p.factor, p.reduced.clone()), (6, vec![1, 3, 2]));

        assert_eq!(counting_polynomial_sur(1, 5).unwrap().to_string(), "1");
    }

    #[test]
    fn barratt_eccles_counting_polynomials_match_known_tables() {
        let p = counting_polynomial_be(4, 2).unwrap();
        assert_eq!(
            (p.factor, p.reduced.clone()),
            (24, vec![1, 23, 104, 196, 184, 86, 16])
        );
        assert_eq!(
            p.to_string(),
            "24*(1 + 23x + 104x^2 + 196x^3 + 184x^4 + 86x^5 + 16x^6)"
        );

        let p = counting_polynomial_be(3, 3).unwrap();
        assert_eq!(
            (p.factor, p.reduced.clone()),
            (6, vec![1, 5, 25, 60, 70, 38, 8])
        );
        assert_eq!(
            p.to_string(),
            "6*(1 + 5x + 25x^2 + 60x^3 + 70x^4 + 38x^5 + 8x^6)"
        );
    }

    #[test]
    fn table_companion_golden_values() {
        assert_eq!(tc(&[1, 2, 2, 3, 3, 3, 1, 1, 2]).unwrap().to_string(), "123|231|312");
        assert_eq!(tc(&[1, 2, 1, 2]).unwrap().to_string(), "12|12");
        assert_eq!(tc(&[1, 2, 2, 1]).unwrap().to_string(), "12|21");
        assert_eq!(tc(&[1, 1, 2, 3, 3, 3, 2, 2, 1]).unwrap().to_string(), "123|132|321");
        assert_eq!(tc(&[1, 2, 2, 3, 3, 3, 2, 1, 1]).unwrap().to_string(), "123|231|321");
        assert!(tc(&[1, 2, 1]).is_err());
    }

    #[test]
    fn table_companion_is_simplicial_and_respects_filtration() {
        for (k, degree) in [(2, 1), (2, 2), (2, 3), (3, 1)] {
            let report = tc_report(&sur(k), degree).unwrap();
            assert!(report.checked > 0);
            assert!(report.chain_map_ok, "{report}");
            assert!(report.filtration_ok, "{report}");
        }
    }

    #[test]
    fn barratt_eccles_basics() {
        let w = BarrattEccles::full(2).unwrap();
        let x = w.parse_simplex("12|21|12").unwrap();
        assert_eq!(w.multidegree(&x), vec![2]);
        assert_eq!(w.face(&x, 1, 1).unwrap().to_string(), "12|12");
        assert!(w.is_degenerate(&w.face(&x, 1, 1).unwrap()));
        assert_eq!(w.enumerate(&[1]).unwrap().len(), 4);
        assert!(w.parse_simplex("11|21").is_err());
        let filtered = BarrattEccles::filtered(2, 2).unwrap();
        assert!(filtered.parse_simplex("12|21|12").is_err());
    }

    proptest! {
        #[test]
        fn complexity_monotone_under_faces(tail in proptest::collection::vec(1u8..=3, 0..8)) {
            let mut word = tail;
            word.extend([1, 2, 3]);
            let s = sur(3);
            let x = Surjection { word };
            let c = sur_complexity(x.word());
            let a = s.multidegree(&x);
            for dir in 1..=3 {
                if a[dir - 1] == 0 { continue; }
                for i in 0..=a[dir - 1] {
                    let y = s.face(&x, dir, i).unwrap();
                    prop_assert!(sur_complexity(y.word()) <= c);
                }
            }
            for dir in 1..=3 {
                for i in 0..=a[dir - 1] {
                    let y = s.degeneracy(&x, dir, i).unwrap();
                    prop_assert_eq!(sur_complexity(y.word()), c);
                }
            }
        }

        #[test]
        fn tc_commutes_with_faces_on_random_diagonals(perm_rows in proptest::collection::vec(0usize..6, 1..4)) {
            // Build a diagonal word by interleaving: rows of permutations
            // concatenated give equal occurrence counts.
            let perms: Vec<Vec<u8>> = {
                let all: Vec<Vec<u8>> = vec![
                    vec![1,2,3], vec![1,3,2], vec![2,1,3],
                    vec![2,3,1], vec![3,1,2], vec![3,2,1],
                ];
                perm_rows.iter().map(|&i| all[i].clone()).collect()
            };
            let word: Vec<u8> = perms.concat();
            let s = sur(3);
            let diag = Diagonal::new(s);
            let x = Surjection { word };
            let n = perms.len() - 1;
            let image = tc(x.word()).unwrap();
            if n >= 1 {
                for i in 0..=n {
                    let fx = diag.face(&x, 1, i).unwrap();
                    let mut expect = image.clone();
                    expect.0.remove(i);
                    prop_assert_eq!(tc(fx.word()).unwrap(), expect);
                }
            }
        }
    }
}
