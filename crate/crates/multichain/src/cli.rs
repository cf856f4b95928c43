//! Command-line front end: basis enumeration, counting polynomials, homology
//! and cohomology rings, cup products on JSON cochains, identity
//! verification on random inputs, the table companion, and Massey products.
//!
//! Exit codes: `0` success, `1` a verification found a counterexample, `2`
//! usage or input errors.  Output is deterministic for a fixed command line
//! and seed; `MULTICHAIN_THREADS` caps internal parallelism without
//! affecting output order.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cohomtools::{massey_triple, ring_presentation, verify_ez_ring_iso, CohomologyBasis};
use crate::complexes::{chain_boundary, Chain, Cochain, ComplexView, Mode};
use crate::error::{Error, Result};
use crate::exactlin::{Coefficient, RingSpec};
use crate::ezaw::{
    aw_multisimplicial, aw_simplicial, cup, ez_raw, tensor_boundary, verify_square_raw,
    TensorChain, TensorTerm,
};
use crate::msets::{Diagonal, MSet, MultiIndex, StandardMSet};
use crate::surjection::{
    counting_polynomial_be, counting_polynomial_sur, tc, tc_report, BarrattEccles, SurSet,
};

// -- instance selectors ------------------------------------------------------

/// Which complex a command operates on: `sur<k>[:d]`, `be<k>[:d]`, or
/// `standard:a1,a2,...` (the standard multisimplex of that shape).  The
/// optional `:d` is a complexity-filtration cap; `--cap` overrides it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Sur { k: usize, d: Option<usize> },
    Be { k: usize, d: Option<usize> },
    Standard { shape: MultiIndex },
}

impl FromStr for Instance {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let bad = || {
            format!("bad instance {s:?} (expected sur<k>[:d], be<k>[:d], or standard:a1,a2,...)")
        };
        if let Some(rest) = s.strip_prefix("standard:") {
            let shape: std::result::Result<MultiIndex, _> =
                rest.split(',').map(|p| p.trim().parse::<usize>().map_err(|_| bad())).collect();
            let shape = shape?;
            if shape.is_empty() {
                return Err(bad());
            }
            return Ok(Instance::Standard { shape });
        }
        let (family, rest) = if let Some(r) = s.strip_prefix("sur") {
            (0, r)
        } else if let Some(r) = s.strip_prefix("be") {
            (1, r)
        } else {
            return Err(bad());
        };
        let (k_str, d) = match rest.split_once(':') {
            Some((k, d)) => (k, Some(d.parse::<usize>().map_err(|_| bad())?)),
            None => (rest, None),
        };
        let k = k_str.parse::<usize>().map_err(|_| bad())?;
        Ok(if family == 0 { Instance::Sur { k, d } } else { Instance::Be { k, d } })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Sur { k, d: None } => write!(f, "sur{k}"),
            Instance::Sur { k, d: Some(d) } => write!(f, "sur{k}:{d}"),
            Instance::Be { k, d: None } => write!(f, "be{k}"),
            Instance::Be { k, d: Some(d) } => write!(f, "be{k}:{d}"),
            Instance::Standard { shape } => {
                let parts: Vec<String> = shape.iter().map(|a| a.to_string()).collect();
                write!(f, "standard:{}", parts.join(","))
            }
        }
    }
}

enum AnyMSet {
    Sur(SurSet),
    Be(BarrattEccles),
    Standard(StandardMSet),
}

/// Builds the concrete complex, letting `--cap` override the instance's own
/// complexity filter.
fn resolve(instance: &Instance, cap: Option<usize>) -> Result<AnyMSet> {
    Ok(match instance {
        Instance::Sur { k, d } => AnyMSet::Sur(SurSet::new(*k, cap.or(*d))?),
        Instance::Be { k, d } => AnyMSet::Be(BarrattEccles::new(*k, cap.or(*d))?),
        Instance::Standard { shape } => {
            if cap.is_some() {
                return Err(Error::Invalid(
                    "--cap applies to sur/be instances only".into(),
                ));
            }
            AnyMSet::Standard(StandardMSet::new(shape.clone()))
        }
    })
}

/// The largest total degree with a nonzero chain group, when the instance is
/// finite (complexity-filtered or standard).
fn top_degree(m: &AnyMSet) -> Result<Option<usize>> {
    Ok(match m {
        AnyMSet::Sur(s) => match s.cap() {
            Some(d) => {
                let poly = counting_polynomial_sur(s.k(), d)?;
                Some(poly.reduced.len().saturating_sub(1))
            }
            None => None,
        },
        AnyMSet::Be(b) => match b.cap() {
            Some(d) => {
                let poly = counting_polynomial_be(b.k(), d)?;
                Some(poly.reduced.len().saturating_sub(1))
            }
            None => None,
        },
        AnyMSet::Standard(s) => Some(s.shape().iter().sum()),
    })
}

fn degree_range(m: &AnyMSet, requested: Option<usize>) -> Result<usize> {
    match requested.or(top_degree(m)?) {
        Some(d) => Ok(d),
        None => Err(Error::Invalid(
            "an unfiltered instance needs --max-degree (or a :d complexity cap)".into(),
        )),
    }
}

macro_rules! dispatch {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            AnyMSet::Sur($m) => $body,
            AnyMSet::Be($m) => $body,
            AnyMSet::Standard($m) => $body,
        }
    };
}

// -- JSON chain schema -------------------------------------------------------

/// Serialized chain/cochain: ring tag plus one entry per generator.  Plain
/// terms carry `gen`; tensor terms carry `left` and `right` instead.  The
/// `degree` field is the generator's multidegree (left followed by right for
/// tensors) and is validated on ingestion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainJson {
    pub ring: String,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gen: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
    pub degree: Vec<usize>,
}

pub fn chain_to_json<M: MSet>(m: &M, c: &Chain<M::Simplex>) -> ChainJson {
    ChainJson {
        ring: c.ring().to_string(),
        terms: c
            .iter()
            .map(|(s, v)| TermJson {
                coeff: v.to_exact_string(),
                gen: Some(s.to_string()),
                left: None,
                right: None,
                degree: m.multidegree(s),
            })
            .collect(),
    }
}

pub fn tensor_to_json<M: MSet>(m: &M, c: &TensorChain<M::Simplex>) -> ChainJson {
    ChainJson {
        ring: c.ring().to_string(),
        terms: c
            .iter()
            .map(|(t, v)| {
                let mut degree = m.multidegree(&t.0);
                degree.extend(m.multidegree(&t.1));
                TermJson {
                    coeff: v.to_exact_string(),
                    gen: None,
                    left: Some(t.0.to_string()),
                    right: Some(t.1.to_string()),
                    degree,
                }
            })
            .collect(),
    }
}

pub fn chain_from_json<M: MSet>(m: &M, j: &ChainJson) -> Result<Chain<M::Simplex>> {
    let ring: RingSpec = j.ring.parse()?;
    let mut out = Chain::zero(ring);
    for term in &j.terms {
        let gen = term
            .gen
            .as_deref()
            .ok_or_else(|| Error::Invalid("term without a \"gen\" field".into()))?;
        let s = m.parse_simplex(gen)?;
        if !term.degree.is_empty() && term.degree != m.multidegree(&s) {
            return Err(Error::Invalid(format!(
                "term {gen:?} declares degree {:?} but has multidegree {:?}",
                term.degree,
                m.multidegree(&s)
            )));
        }
        out.add_term(s, Coefficient::parse(ring, &term.coeff)?)?;
    }
    Ok(out)
}

pub fn tensor_from_json<M: MSet>(m: &M, j: &ChainJson) -> Result<TensorChain<M::Simplex>> {
    let ring: RingSpec = j.ring.parse()?;
    let mut out = Chain::zero(ring);
    for term in &j.terms {
        let (left, right) = match (&term.left, &term.right) {
            (Some(l), Some(r)) => (m.parse_simplex(l)?, m.parse_simplex(r)?),
            _ => return Err(Error::Invalid("tensor term needs \"left\" and \"right\"".into())),
        };
        out.add_term(TensorTerm(left, right), Coefficient::parse(ring, &term.coeff)?)?;
    }
    Ok(out)
}

// -- argument grammar --------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Sur,
    Be,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "multichain",
    version,
    about = "Exact chain/cochain calculus for multisimplicial sets",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Counting polynomial of nondegenerate generators under the complexity
    /// filtration, with the symmetry factor extracted.
    Count {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// List the canonical basis of each chain group.
    Enumerate {
        #[arg(long)]
        instance: Instance,
        /// Complexity cap (overrides the instance's `:d`).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Include degenerate generators (the unnormalized complex).
        #[arg(long, default_value_t = false)]
        full: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Betti numbers and torsion of the normalized complex.
    Homology {
        #[arg(long)]
        instance: Instance,
        #[arg(long, default_value = "Z")]
        ring: RingSpec,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, default_value_t = false)]
        full: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Cohomology ring: groups, generators, multiplication table, and (over
    /// a field) the diagonal-comparison check.
    Ring {
        #[arg(long)]
        instance: Instance,
        #[arg(long, default_value = "Q")]
        ring: RingSpec,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Cup product of two cochains given as JSON files (pass --from-json
    /// twice: left factor, then right factor).
    Cup {
        #[arg(long)]
        instance: Instance,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long = "from-json", required = true)]
        from_json: Vec<PathBuf>,
        #[arg(long, default_value_t = false)]
        full: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Check differential, chain-map, Leibniz, and comparison-square
    /// identities on seeded random inputs; exit 1 on any counterexample.
    Verify {
        #[arg(long, default_value = "sur2")]
        instance: Instance,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Drop the shuffle signs (negative control; the square must fail).
        #[arg(long, hide = true, default_value_t = false)]
        unsigned_shuffles: bool,
    },
    /// Table companion of one diagonal word, or a degreewise report with
    /// --instance.
    Tc {
        /// A diagonal surjection word such as 122333112.
        word: Option<String>,
        #[arg(long)]
        instance: Option<Instance>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
    /// Triple Massey products between cohomology basis classes.
    Massey {
        #[arg(long)]
        instance: Instance,
        #[arg(long, default_value = "Q")]
        ring: RingSpec,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Restrict to one degree triple, e.g. --degrees 1,1,1.
        #[arg(long)]
        degrees: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutFormat,
    },
}

// -- entry points ------------------------------------------------------------

/// Parses and runs a full command line (including argv[0]); returns the
/// process exit code.  All report output goes to `out`, errors to `errw`.
pub fn run<I, T>(args: I, out: &mut dyn Write, errw: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    init_thread_pool(errw);
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(errw, "{e}");
                    2
                }
            }
        }
    };
    match execute(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(errw, "error: {e}");
            2
        }
    }
}

pub fn run_from_env() -> i32 {
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run(std::env::args_os(), &mut out, &mut err)
}

fn init_thread_pool(errw: &mut dyn Write) {
    static ONCE: std::sync::Once = std::sync::Once::new();
    ONCE.call_once(|| {
        if let Ok(v) = std::env::var("MULTICHAIN_THREADS") {
            match v.parse::<usize>() {
                Ok(n) if n >= 1 => {
                    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
                }
                _ => {
                    let _ = writeln!(
                        errw,
                        "warning: ignoring MULTICHAIN_THREADS={v:?} (want a positive integer)"
                    );
                }
            }
        }
    });
}

fn execute(cmd: Cmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Cmd::Count { family, k, d } => {
            let poly = match family {
                Family::Sur => counting_polynomial_sur(k, d)?,
                Family::Be => counting_polynomial_be(k, d)?,
            };
            writeln!(out, "{poly}")?;
            Ok(0)
        }
        Cmd::Enumerate { instance, cap, max_degree, full, format } => {
            let any = resolve(&instance, cap)?;
            let maxd = degree_range(&any, max_degree)?;
            let mode = if full { Mode::Full } else { Mode::Normalized };
            dispatch!(any, m => cmd_enumerate(m, &instance, mode, maxd, format, out))
        }
        Cmd::Homology { instance, ring, cap, max_degree, full, format } => {
            let any = resolve(&instance, cap)?;
            let maxd = degree_range(&any, max_degree)?;
            let mode = if full { Mode::Full } else { Mode::Normalized };
            dispatch!(any, m => cmd_homology(m, &instance, ring, mode, maxd, format, out))
        }
        Cmd::Ring { instance, ring, cap, max_degree, format } => {
            let any = resolve(&instance, cap)?;
            let maxd = degree_range(&any, max_degree)?;
            dispatch!(any, m => cmd_ring(m, &instance, ring, maxd, format, out))
        }
        Cmd::Cup { instance, cap, from_json, full, format } => {
            let any = resolve(&instance, cap)?;
            let mode = if full { Mode::Full } else { Mode::Normalized };
            dispatch!(any, m => cmd_cup(m, mode, &from_json, format, out))
        }
        Cmd::Verify { instance, cap, samples, seed, max_degree, unsigned_shuffles } => {
            let any = resolve(&instance, cap)?;
            let maxd = match degree_range(&any, max_degree) {
                Ok(d) => d.min(4),
                Err(_) => 4,
            };
            dispatch!(any, m => cmd_verify(m, &instance, samples, seed, maxd, !unsigned_shuffles, out))
        }
        Cmd::Tc { word, instance, cap, max_degree, format } => match (word, instance) {
            (Some(w), None) => cmd_tc_word(&w, format, out),
            (None, Some(instance)) => {
                let any = resolve(&instance, cap)?;
                match any {
                    AnyMSet::Sur(s) => cmd_tc_report(s, &instance, max_degree, out),
                    _ => Err(Error::Invalid(
                        "the tc report runs on sur instances only".into(),
                    )),
                }
            }
            _ => Err(Error::Invalid(
                "pass either a diagonal word or --instance, not both".into(),
            )),
        },
        Cmd::Massey { instance, ring, cap, max_degree, degrees, format } => {
            let any = resolve(&instance, cap)?;
            let maxd = degree_range(&any, max_degree)?;
            let triple = match &degrees {
                Some(s) => Some(parse_degree_triple(s)?),
                None => None,
            };
            dispatch!(any, m => cmd_massey(m, &instance, ring, maxd, triple, format, out))
        }
    }
}

fn parse_degree_triple(s: &str) -> Result<(usize, usize, usize)> {
    let parts: Vec<&str> = s.split(',').collect();
    let bad = || Error::Invalid(format!("bad --degrees {s:?} (expected p,q,r)"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut vals = [0usize; 3];
    for (v, p) in vals.iter_mut().zip(&parts) {
        *v = p.trim().parse().map_err(|_| bad())?;
    }
    Ok((vals[0], vals[1], vals[2]))
}

// -- enumerate ---------------------------------------------------------------

#[derive(Serialize)]
struct EnumerateJson {
    instance: String,
    mode: String,
    degrees: Vec<DegreeJson>,
}

#[derive(Serialize)]
struct DegreeJson {
    degree: usize,
    dimension: usize,
    generators: Vec<String>,
}

fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Full => "full",
        Mode::Normalized => "normalized",
    }
}

fn cmd_enumerate<M: MSet>(
    m: M,
    instance: &Instance,
    mode: Mode,
    maxd: usize,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let view = ComplexView::new(m, RingSpec::Z, mode, maxd);
    let mut degrees = Vec::new();
    for n in 0..=maxd {
        let basis = view.basis(n)?;
        degrees.push(DegreeJson {
            degree: n,
            dimension: basis.len(),
            generators: basis.iter().map(|s| s.to_string()).collect(),
        });
    }
    match format {
        OutFormat::Json => {
            let doc = EnumerateJson {
                instance: instance.to_string(),
                mode: mode_name(mode).into(),
                degrees,
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutFormat::Text => {
            writeln!(out, "basis of {instance} ({})", mode_name(mode))?;
            let mut total = 0usize;
            for d in &degrees {
                writeln!(out, "degree {}: {} generators", d.degree, d.dimension)?;
                for g in &d.generators {
                    writeln!(out, "  {g}")?;
                }
                total += d.dimension;
            }
            writeln!(out, "total: {total} generators")?;
        }
    }
    Ok(0)
}

// -- homology ----------------------------------------------------------------

#[derive(Serialize)]
struct HomologyJson {
    instance: String,
    ring: String,
    mode: String,
    groups: Vec<GroupJson>,
}

#[derive(Serialize)]
struct GroupJson {
    degree: usize,
    betti: usize,
    torsion: Vec<String>,
}

fn cmd_homology<M>(
    m: M,
    instance: &Instance,
    ring: RingSpec,
    mode: Mode,
    maxd: usize,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32>
where
    M: MSet + Sync,
    M::Simplex: Send + Sync,
{
    let view = ComplexView::new(m, ring, mode, maxd + 1);
    let groups: Result<Vec<_>> =
        (0..=maxd).into_par_iter().map(|n| view.homology(n)).collect();
    let groups = groups?;
    match format {
        OutFormat::Json => {
            let doc = HomologyJson {
                instance: instance.to_string(),
                ring: ring.to_string(),
                mode: mode_name(mode).into(),
                groups: groups
                    .iter()
                    .map(|g| GroupJson {
                        degree: g.degree,
                        betti: g.betti,
                        torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutFormat::Text => {
            writeln!(out, "homology of {instance} over {ring} ({})", mode_name(mode))?;
            for g in &groups {
                writeln!(out, "{g}")?;
            }
            let betti: Vec<String> = groups.iter().map(|g| g.betti.to_string()).collect();
            writeln!(out, "betti: [{}]", betti.join(", "))?;
        }
    }
    Ok(0)
}

// -- ring --------------------------------------------------------------------

#[derive(Serialize)]
struct RingJson {
    instance: String,
    ring: String,
    groups: Vec<GroupJson>,
    generators: Vec<GeneratorJson>,
    products: Vec<ProductJson>,
    comparison: Option<ComparisonJson>,
}

#[derive(Serialize)]
struct GeneratorJson {
    name: String,
    degree: usize,
    representative: ChainJson,
}

#[derive(Serialize)]
struct ProductJson {
    left: String,
    right: String,
    coordinates: Vec<(String, String)>,
}

#[derive(Serialize)]
struct ComparisonJson {
    betti_multi: Vec<usize>,
    betti_diag: Vec<usize>,
    transports_cocycles: bool,
    induces_isomorphism: bool,
    multiplicative_on_cochains: bool,
    ok: bool,
}

fn cmd_ring<M: MSet + Clone>(
    m: M,
    instance: &Instance,
    ring: RingSpec,
    maxd: usize,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    let view = ComplexView::new(m.clone(), ring, Mode::Normalized, maxd + 1);
    let pres = ring_presentation(&view, maxd)?;
    let report = if ring.is_field() && m.directions() > 1 {
        Some(verify_ez_ring_iso(&view, maxd)?)
    } else {
        None
    };
    match format {
        OutFormat::Json => {
            let doc = RingJson {
                instance: instance.to_string(),
                ring: ring.to_string(),
                groups: pres
                    .groups
                    .iter()
                    .map(|g| GroupJson {
                        degree: g.degree,
                        betti: g.betti,
                        torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
                    })
                    .collect(),
                generators: pres
                    .generators
                    .iter()
                    .map(|g| GeneratorJson {
                        name: g.name.clone(),
                        degree: g.degree,
                        representative: chain_to_json(&m, &g.representative),
                    })
                    .collect(),
                products: pres
                    .products
                    .iter()
                    .map(|p| ProductJson {
                        left: p.left.clone(),
                        right: p.right.clone(),
                        coordinates: p
                            .coordinates
                            .iter()
                            .map(|(n, v)| (n.clone(), v.to_exact_string()))
                            .collect(),
                    })
                    .collect(),
                comparison: report.as_ref().map(|r| ComparisonJson {
                    betti_multi: r.betti_multi.clone(),
                    betti_diag: r.betti_diag.clone(),
                    transports_cocycles: r.transports_cocycles,
                    induces_isomorphism: r.induces_isomorphism,
                    multiplicative_on_cochains: r.multiplicative_on_cochains,
                    ok: r.ok(),
                }),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutFormat::Text => {
            writeln!(out, "instance {instance}")?;
            write!(out, "{pres}")?;
            let betti: Vec<String> = pres.groups.iter().map(|g| g.betti.to_string()).collect();
            writeln!(out, "betti: [{}]", betti.join(", "))?;
            if let Some(r) = &report {
                writeln!(out, "{r}")?;
            }
        }
    }
    Ok(0)
}

// -- cup ---------------------------------------------------------------------

/// The common total degree of a cochain's terms.
fn homogeneous_degree<M: MSet>(m: &M, c: &Cochain<M::Simplex>) -> Result<usize> {
    let mut degree = None;
    for (s, _) in c.iter() {
        let d = m.degree(s);
        match degree {
            None => degree = Some(d),
            Some(prev) if prev != d => {
                return Err(Error::Invalid(format!(
                    "cochain mixes degrees {prev} and {d}"
                )))
            }
            _ => {}
        }
    }
    degree.ok_or_else(|| Error::Invalid("empty cochain: cannot infer its degree".into()))
}

fn cmd_cup<M: MSet>(
    m: M,
    mode: Mode,
    files: &[PathBuf],
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    if files.len() != 2 {
        return Err(Error::Invalid(format!(
            "cup needs exactly two --from-json files, got {}",
            files.len()
        )));
    }
    let mut parsed = Vec::new();
    for f in files {
        let text = fs::read_to_string(f)
            .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", f.display())))?;
        let doc: ChainJson = serde_json::from_str(&text)
            .map_err(|e| Error::Invalid(format!("bad JSON in {}: {e}", f.display())))?;
        parsed.push(chain_from_json(&m, &doc)?);
    }
    let (alpha, beta) = (parsed.remove(0), parsed.remove(0));
    if alpha.ring() != beta.ring() {
        return Err(Error::RingMismatch(alpha.ring(), beta.ring()));
    }
    let p = homogeneous_degree(&m, &alpha)?;
    let q = homogeneous_degree(&m, &beta)?;
    let view = ComplexView::new(m, alpha.ring(), mode, p + q);
    let product = cup(&view, &alpha, p, &beta, q)?;
    match format {
        OutFormat::Json => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&chain_to_json(view.mset(), &product))?
            )?;
        }
        OutFormat::Text => writeln!(out, "{product}")?,
    }
    Ok(0)
}

// -- verify ------------------------------------------------------------------

struct CheckLog<'a> {
    out: &'a mut dyn Write,
    failed: bool,
}

impl<'a> CheckLog<'a> {
    fn pass(&mut self, name: &str, detail: &str) -> Result<()> {
        writeln!(self.out, "  {name}: ok ({detail})")?;
        Ok(())
    }

    fn fail(&mut self, name: &str, detail: &str) -> Result<()> {
        self.failed = true;
        writeln!(self.out, "  {name}: FAIL\n{detail}")?;
        Ok(())
    }
}

/// A random chain with up to three terms in a random positive degree whose
/// basis is nonempty.
fn random_chain<M: MSet>(
    view: &ComplexView<M>,
    rng: &mut ChaCha8Rng,
    maxd: usize,
) -> Result<Option<(usize, Chain<M::Simplex>)>> {
    if maxd == 0 {
        return Ok(None);
    }
    let start = rng.gen_range(1..=maxd);
    for offset in 0..maxd {
        let n = (start - 1 + offset) % maxd + 1;
        let basis = view.basis(n)?;
        if basis.is_empty() {
            continue;
        }
        let mut c = Chain::zero(view.ring());
        for _ in 0..rng.gen_range(1..=3usize) {
            let s = basis[rng.gen_range(0..basis.len())].clone();
            let coeff = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
            c.add_term(s, Coefficient::from_i64(view.ring(), coeff))?;
        }
        if !c.is_zero() {
            return Ok(Some((n, c)));
        }
    }
    Ok(None)
}

fn cmd_verify<M: MSet + Clone>(
    m: M,
    instance: &Instance,
    samples: usize,
    seed: u64,
    maxd: usize,
    signed: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    writeln!(
        out,
        "verify {instance} (seed {seed}, {samples} samples, degrees <= {maxd})"
    )?;
    let mut log = CheckLog { out, failed: false };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = RingSpec::Z;
    let full = ComplexView::new(m.clone(), ring, Mode::Full, maxd + 1);
    let normalized = ComplexView::new(m.clone(), ring, Mode::Normalized, maxd + 1);
    let diag = Diagonal::new(m.clone());

    // 1. Boundary matrices compose to zero, in both modes.
    let mut matrix_ok = true;
    for view in [&full, &normalized] {
        for n in 1..=maxd {
            let prod = view.boundary_matrix(n)?.mul(&view.boundary_matrix(n + 1)?)?;
            if !prod.is_zero() {
                matrix_ok = false;
                log.fail(
                    "boundary matrices compose to zero",
                    &format!("    nonzero product at degree {n} ({} mode)", mode_name(view.mode())),
                )?;
            }
        }
    }
    if matrix_ok {
        log.pass("boundary matrices compose to zero", &format!("degrees 1..={maxd}"))?;
    }

    // 2. d(d(c)) = 0 on random chains.
    let mut count = 0usize;
    let mut ok = true;
    for _ in 0..samples {
        let Some((_, c)) = random_chain(&full, &mut rng, maxd)? else { continue };
        count += 1;
        let dd = chain_boundary(&m, &chain_boundary(&m, &c)?)?;
        if !dd.is_zero() {
            ok = false;
            log.fail("d(d(c)) = 0", &format!("    c = {c}\n    d(d(c)) = {dd}"))?;
            break;
        }
    }
    if ok {
        log.pass("d(d(c)) = 0", &format!("{count} random chains"))?;
    }

    // 3. The shuffle map is a chain map into the diagonal complex.
    let mut count = 0usize;
    let mut ok = true;
    for _ in 0..samples {
        let Some((_, c)) = random_chain(&full, &mut rng, maxd)? else { continue };
        count += 1;
        let lhs = chain_boundary(&diag, &ez_raw(&m, &c, signed)?)?;
        let rhs = ez_raw(&m, &chain_boundary(&m, &c)?, signed)?;
        if lhs != rhs {
            ok = false;
            log.fail(
                "shuffle map is a chain map",
                &format!("    c = {c}\n    d(EZ c) = {lhs}\n    EZ(d c) = {rhs}"),
            )?;
            break;
        }
    }
    if ok {
        log.pass("shuffle map is a chain map", &format!("{count} random chains"))?;
    }

    // 4. The front/back decomposition is a chain map (tensor differential).
    let mut count = 0usize;
    let mut ok = true;
    for _ in 0..samples {
        let Some((_, c)) = random_chain(&full, &mut rng, maxd)? else { continue };
        count += 1;
        let lhs = tensor_boundary(&m, &aw_multisimplicial(&m, &c)?)?;
        let rhs = aw_multisimplicial(&m, &chain_boundary(&m, &c)?)?;
        if lhs != rhs {
            ok = false;
            log.fail(
                "front/back decomposition is a chain map",
                &format!("    c = {c}\n    d(AW c) = {lhs}\n    AW(d c) = {rhs}"),
            )?;
            break;
        }
    }
    if ok {
        log.pass("front/back decomposition is a chain map", &format!("{count} random chains"))?;
    }

    // 5. The comparison square commutes; canonical words are always included
    // when the instance admits them.
    let mut square_inputs: Vec<Chain<M::Simplex>> = Vec::new();
    for w in ["12121", "12321"] {
        if let Ok(s) = m.parse_simplex(w) {
            if m.degree(&s) <= maxd {
                square_inputs.push(Chain::generator(ring, s));
            }
        }
    }
    for _ in 0..samples {
        if let Some((_, c)) = random_chain(&full, &mut rng, maxd)? {
            square_inputs.push(c);
        }
    }
    let mut ok = true;
    let total = square_inputs.len();
    for c in &square_inputs {
        let report = verify_square_raw(&m, c, signed)?;
        if !report.equal {
            ok = false;
            log.fail("comparison square commutes", &format!("    input = {c}\n{report}"))?;
            break;
        }
    }
    if ok {
        log.pass("comparison square commutes", &format!("{total} chains"))?;
    }

    // 6. Leibniz rule for the cup product on indicator cochains.
    let mut count = 0usize;
    let mut ok = true;
    'leibniz: for _ in 0..samples {
        if maxd < 2 {
            break;
        }
        let p = rng.gen_range(1..maxd);
        let q = rng.gen_range(1..=maxd - p);
        let (bp, bq) = (normalized.basis(p)?, normalized.basis(q)?);
        if bp.is_empty() || bq.is_empty() {
            continue;
        }
        let alpha = Chain::generator(ring, bp[rng.gen_range(0..bp.len())].clone());
        let beta = Chain::generator(ring, bq[rng.gen_range(0..bq.len())].clone());
        count += 1;
        let lhs = normalized.coboundary(&cup(&normalized, &alpha, p, &beta, q)?, p + q)?;
        let da = cup(&normalized, &normalized.coboundary(&alpha, p)?, p + 1, &beta, q)?;
        let ad = cup(&normalized, &alpha, p, &normalized.coboundary(&beta, q)?, q + 1)?;
        let rhs = da.add(&if p % 2 == 0 { ad } else { ad.neg() })?;
        if lhs != rhs {
            ok = false;
            log.fail(
                "cup-product Leibniz rule",
                &format!(
                    "    alpha = {alpha} (degree {p}), beta = {beta} (degree {q})\n    delta(a cup b) = {lhs}\n    (delta a) cup b +/- a cup (delta b) = {rhs}"
                ),
            )?;
            break 'leibniz;
        }
    }
    if ok {
        log.pass("cup-product Leibniz rule", &format!("{count} cochain pairs"))?;
    }

    // 7. The one-direction decomposition is a chain map on the diagonal.
    let diag_view = ComplexView::new(diag.clone(), ring, Mode::Full, 3);
    let mut count = 0usize;
    let mut ok = true;
    for _ in 0..samples.min(25) {
        let Some((_, c)) = random_chain(&diag_view, &mut rng, 2)? else { continue };
        count += 1;
        let lhs = tensor_boundary(&diag, &aw_simplicial(&diag, &c)?)?;
        let rhs = aw_simplicial(&diag, &chain_boundary(&diag, &c)?)?;
        if lhs != rhs {
            ok = false;
            log.fail(
                "diagonal decomposition is a chain map",
                &format!("    c = {c}"),
            )?;
            break;
        }
    }
    if ok {
        log.pass("diagonal decomposition is a chain map", &format!("{count} random chains"))?;
    }

    if log.failed {
        writeln!(log.out, "FAILED")?;
        Ok(1)
    } else {
        writeln!(log.out, "all checks passed")?;
        Ok(0)
    }
}

// -- tc ----------------------------------------------------------------------

#[derive(Serialize)]
struct TcJson {
    word: String,
    tuple: Vec<String>,
}

fn parse_word(s: &str) -> Result<Vec<u8>> {
    let bad = || Error::Invalid(format!("cannot parse word {s:?}"));
    if s.contains(',') {
        s.split(',').map(|p| p.trim().parse::<u8>().map_err(|_| bad())).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad)).collect()
    }
}

fn cmd_tc_word(word: &str, format: OutFormat, out: &mut dyn Write) -> Result<i32> {
    let values = parse_word(word)?;
    let tuple = tc(&values)?;
    match format {
        OutFormat::Json => {
            let doc = TcJson {
                word: word.to_string(),
                tuple: tuple.0.iter().map(|p| p.to_string()).collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutFormat::Text => {
            let parts: Vec<String> = tuple.0.iter().map(|p| p.to_string()).collect();
            writeln!(out, "({})", parts.join(", "))?;
        }
    }
    Ok(0)
}

fn cmd_tc_report(
    sur: SurSet,
    instance: &Instance,
    max_degree: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32> {
    let maxd = max_degree.unwrap_or(2);
    writeln!(out, "table companion on {instance}, diagonal degrees 0..={maxd}")?;
    let mut all_ok = true;
    for n in 0..=maxd {
        let report = tc_report(&sur, n)?;
        all_ok &= report.chain_map_ok && report.filtration_ok;
        writeln!(out, "  {report}")?;
    }
    Ok(if all_ok { 0 } else { 1 })
}

// -- massey ------------------------------------------------------------------

#[derive(Serialize)]
struct MasseyJson {
    instance: String,
    ring: String,
    entries: Vec<MasseyEntryJson>,
}

#[derive(Serialize)]
struct MasseyEntryJson {
    a: String,
    b: String,
    c: String,
    degrees: (usize, usize, usize),
    defined: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coordinates: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vanishes_mod_indeterminacy: Option<bool>,
}

fn cmd_massey<M: MSet>(
    m: M,
    instance: &Instance,
    ring: RingSpec,
    maxd: usize,
    degrees: Option<(usize, usize, usize)>,
    format: OutFormat,
    out: &mut dyn Write,
) -> Result<i32> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring));
    }
    let view = ComplexView::new(m, ring, Mode::Normalized, maxd + 1);
    let mut bases = Vec::new();
    for n in 0..=maxd {
        bases.push(CohomologyBasis::new(&view, n)?);
    }
    let triples: Vec<(usize, usize, usize)> = match degrees {
        Some(t) => vec![t],
        None => {
            let mut v = Vec::new();
            for p in 1..=maxd {
                for q in 1..=maxd {
                    for r in 1..=maxd {
                        if p + q + r - 1 <= maxd {
                            v.push((p, q, r));
                        }
                    }
                }
            }
            v
        }
    };
    let mut entries = Vec::new();
    for (p, q, r) in triples {
        if p == 0 || q == 0 || r == 0 || p + q + r - 1 > maxd {
            return Err(Error::Invalid(format!(
                "degrees ({p},{q},{r}) need 1 <= p,q,r and p+q+r-1 <= {maxd}"
            )));
        }
        for (i, a) in bases[p].representatives().iter().enumerate() {
            for (j, b) in bases[q].representatives().iter().enumerate() {
                for (l, c) in bases[r].representatives().iter().enumerate() {
                    let names = (
                        format!("x{p}_{i}"),
                        format!("x{q}_{j}"),
                        format!("x{r}_{l}"),
                    );
                    match massey_triple(&view, a, p, b, q, c, r) {
                        Ok(o) => entries.push((names, (p, q, r), Some(o))),
                        Err(Error::NotExact) => entries.push((names, (p, q, r), None)),
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    match format {
        OutFormat::Json => {
            let doc = MasseyJson {
                instance: instance.to_string(),
                ring: ring.to_string(),
                entries: entries
                    .iter()
                    .map(|((a, b, c), degs, o)| MasseyEntryJson {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                        degrees: *degs,
                        defined: o.is_some(),
                        coordinates: o.as_ref().map(|o| {
                            o.coordinates.iter().map(|v| v.to_exact_string()).collect()
                        }),
                        vanishes_mod_indeterminacy: o
                            .as_ref()
                            .map(|o| o.vanishes_mod_indeterminacy),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        OutFormat::Text => {
            writeln!(out, "massey products of {instance} over {ring}")?;
            let mut defined = 0usize;
            for ((a, b, c), (p, q, r), o) in &entries {
                match o {
                    None => writeln!(
                        out,
                        "  <{a}, {b}, {c}>: undefined (a cup product is nonzero in cohomology)"
                    )?,
                    Some(o) => {
                        defined += 1;
                        let coords: Vec<String> =
                            o.coordinates.iter().map(|v| v.to_exact_string()).collect();
                        writeln!(
                            out,
                            "  <{a}, {b}, {c}>: class [{}] in H^{}; {} (indeterminacy rank {})",
                            coords.join(", "),
                            p + q + r - 1,
                            if o.vanishes_mod_indeterminacy {
                                "vanishes mod indeterminacy"
                            } else {
                                "NONZERO mod indeterminacy"
                            },
                            o.indeterminacy_rank,
                        )?;
                    }
                }
            }
            writeln!(out, "{} triples, {} defined", entries.len(), defined)?;
        }
    }
    Ok(0)
}
