//! Corpus-wide comparison of constructed graphs against closed forms.
//!
//! For each corpus graph and variant the transformed graph is built and its
//! NK index compared with [`formulas::nk_exact`] and, for bounded variants,
//! with [`formulas::nk_bound`]. Every applicable entry of
//! [`claims::CLAIMS`] is checked on the same constructed values.

mod allowlist;
mod report;

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

pub use allowlist::{Allowlist, KNOWN_ERRATA};
pub use report::{
    AmGmSummary, ClaimStatus, ClaimSummary, ErratumRecord, GraphSummary, Report, Summary, Verdict,
    VerificationRecord,
};

use crate::claims::{self, Claim, Invariants};
use crate::formulas::{self, BoundOutcome, ExampleFamily, FormulaError};
use crate::graph::{self, Family, Graph, GraphError, MAX_ENUMERATION_N};
use crate::indices;
use crate::transform::{build, TransformKind};
use crate::{BigNat, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("no variants selected")]
    NoVariants,
    #[error("invalid corpus: {0}")]
    InvalidCorpus(String),
    #[error("unknown claim id {0:?} in allowlist")]
    UnknownClaim(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Exhaustive labeled enumeration for every `n` in `min_n..=max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationRange {
    pub min_n: usize,
    pub max_n: usize,
    pub connected_only: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NamedFamily {
    Cycle,
    Complete,
    Path,
    Star,
}

impl NamedFamily {
    pub const ALL: [NamedFamily; 4] = [
        NamedFamily::Cycle,
        NamedFamily::Complete,
        NamedFamily::Path,
        NamedFamily::Star,
    ];

    fn member(self, n: usize) -> Family {
        match self {
            NamedFamily::Cycle => Family::Cycle(n),
            NamedFamily::Complete => Family::Complete(n),
            NamedFamily::Path => Family::Path(n),
            NamedFamily::Star => Family::Star(n),
        }
    }

    fn example_family(self) -> Option<ExampleFamily> {
        match self {
            NamedFamily::Cycle => Some(ExampleFamily::Cycle),
            NamedFamily::Complete => Some(ExampleFamily::Complete),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyRange {
    pub family: NamedFamily,
    pub min_n: usize,
    pub max_n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    pub enumerate: Vec<EnumerationRange>,
    pub families: Vec<FamilyRange>,
}

impl Default for CorpusSpec {
    /// Connected labeled graphs with `3 ≤ n ≤ 6`, plus cycles, complete
    /// graphs, paths and stars with `3 ≤ n ≤ 10`.
    fn default() -> Self {
        Self {
            enumerate: vec![EnumerationRange {
                min_n: 3,
                max_n: 6,
                connected_only: true,
            }],
            families: NamedFamily::ALL
                .iter()
                .map(|&family| FamilyRange {
                    family,
                    min_n: 3,
                    max_n: 10,
                })
                .collect(),
        }
    }
}

impl CorpusSpec {
    pub fn families_only(family: NamedFamily, min_n: usize, max_n: usize) -> Self {
        Self {
            enumerate: Vec::new(),
            families: vec![FamilyRange {
                family,
                min_n,
                max_n,
            }],
        }
    }

    pub fn enumeration_only(min_n: usize, max_n: usize, connected_only: bool) -> Self {
        Self {
            enumerate: vec![EnumerationRange {
                min_n,
                max_n,
                connected_only,
            }],
            families: Vec::new(),
        }
    }

    fn validate(&self) -> Result<(), VerifyError> {
        for e in &self.enumerate {
            if e.min_n == 0 || e.min_n > e.max_n || e.max_n > MAX_ENUMERATION_N {
                return Err(VerifyError::InvalidCorpus(format!(
                    "enumeration range {}..={} must lie within 1..={MAX_ENUMERATION_N}",
                    e.min_n, e.max_n
                )));
            }
        }
        for f in &self.families {
            if f.min_n > f.max_n {
                return Err(VerifyError::InvalidCorpus(format!(
                    "empty {:?} range {}..={}",
                    f.family, f.min_n, f.max_n
                )));
            }
        }
        Ok(())
    }
}

/// One distinct corpus graph.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub graph: Graph,
    pub summary: GraphSummary,
    pub example_families: Vec<ExampleFamily>,
}

impl CorpusGraph {
    fn new(graph: Graph) -> Self {
        let summary = GraphSummary {
            n: graph.order(),
            m: graph.size(),
            hash: graph.content_hash(),
            names: Vec::new(),
            regular: graph.is_regular(),
            connected: graph.is_connected(),
        };
        Self {
            graph,
            summary,
            example_families: Vec::new(),
        }
    }
}

/// Materialises the corpus, one entry per distinct graph, ordered by hash.
///
/// A graph produced by several generators (`C_3` and `K_3`, say) carries
/// every family name, whether or not the enumeration also yields it.
pub fn build_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusGraph>, VerifyError> {
    spec.validate()?;
    let mut by_hash: BTreeMap<String, CorpusGraph> = BTreeMap::new();
    for f in &spec.families {
        for n in f.min_n..=f.max_n {
            let family = f.family.member(n);
            // Ranges may start below a family's minimum order (cycles need 3).
            let Ok(graph) = graph::generate(family) else {
                continue;
            };
            let entry = by_hash
                .entry(graph.content_hash())
                .or_insert_with(|| CorpusGraph::new(graph));
            let name = family.to_string();
            if !entry.summary.names.contains(&name) {
                entry.summary.names.push(name);
            }
            if let Some(e) = f.family.example_family() {
                if !entry.example_families.contains(&e) {
                    entry.example_families.push(e);
                }
            }
        }
    }
    for e in &spec.enumerate {
        for n in e.min_n..=e.max_n {
            for graph in graph::enumerate_small_graphs(n, e.connected_only)? {
                let hash = graph.content_hash();
                by_hash
                    .entry(hash)
                    .or_insert_with(|| CorpusGraph::new(graph));
            }
        }
    }
    if by_hash.is_empty() {
        return Err(VerifyError::EmptyCorpus);
    }
    Ok(by_hash.into_values().collect())
}

struct ClaimCheck {
    claim: usize,
    printed: ExactRational,
    oracle: BigNat,
    confirmed: bool,
}

#[derive(Clone, Copy)]
struct BoundObservation {
    kind: TransformKind,
    outcome: Option<BoundOutcome>,
    vertex_tight: bool,
    edge_tight: bool,
}

struct GraphResult {
    records: Vec<VerificationRecord>,
    checks: Vec<ClaimCheck>,
    bounds: Vec<BoundObservation>,
}

fn verify_graph(entry: &CorpusGraph, variants: &[TransformKind]) -> GraphResult {
    let g = &entry.graph;
    let mut oracle: BTreeMap<TransformKind, BigNat> = BTreeMap::new();
    let mut records = Vec::with_capacity(variants.len());
    let mut bounds = Vec::new();

    for &kind in variants {
        let oracle_nk = indices::nk(&build(g, kind).graph);
        let formula = formulas::nk_exact(kind, g).ok();
        let bound = formulas::is_bounded(kind).then(|| formulas::nk_bound(kind, g));

        let mut verdict = match &formula {
            None => Verdict::NotApplicable,
            Some(f) if *f != oracle_nk => Verdict::Mismatch,
            Some(_) => Verdict::Match,
        };
        let mut bound_value = None;
        if let Some(result) = &bound {
            let observation = match result {
                Ok(b) => {
                    bound_value = Some(b.bound.clone());
                    let outcome = b.outcome();
                    if verdict == Verdict::Match {
                        verdict = match outcome {
                            BoundOutcome::Tight => Verdict::BoundTight,
                            BoundOutcome::Strict => Verdict::BoundHoldsStrict,
                            BoundOutcome::Violated => Verdict::Mismatch,
                        };
                    }
                    BoundObservation {
                        kind,
                        outcome: Some(outcome),
                        vertex_tight: b.vertex_part.averaged && b.vertex_part.is_tight(),
                        edge_tight: b.edge_part.averaged && b.edge_part.is_tight(),
                    }
                }
                Err(FormulaError::NotApplicable(_)) | Err(_) => BoundObservation {
                    kind,
                    outcome: None,
                    vertex_tight: false,
                    edge_tight: false,
                },
            };
            bounds.push(observation);
        }

        records.push(VerificationRecord {
            graph_hash: entry.summary.hash.clone(),
            n: entry.summary.n,
            m: entry.summary.m,
            regular: entry.summary.regular,
            variant: kind,
            oracle_nk: oracle_nk.clone(),
            formula_nk: formula,
            bound: bound_value,
            verdict,
        });
        oracle.insert(kind, oracle_nk);
    }

    let inv = Invariants::of(g);
    let checks = claims::CLAIMS
        .iter()
        .enumerate()
        .filter(|(_, c)| c.applies_to(g, &entry.example_families))
        .filter_map(|(i, c)| {
            let oracle = oracle.get(&c.kind)?;
            let outcome = c.check(&inv, oracle);
            Some(ClaimCheck {
                claim: i,
                printed: outcome.printed,
                oracle: oracle.clone(),
                confirmed: outcome.confirmed,
            })
        })
        .collect();

    GraphResult {
        records,
        checks,
        bounds,
    }
}

struct ClaimTally<'a> {
    claim: &'a Claim,
    checked: usize,
    refuted: usize,
    counterexample: Option<(GraphSummary, ExactRational, BigNat)>,
}

/// Runs the full comparison over the corpus described by `spec`.
pub fn run_suite(
    spec: &CorpusSpec,
    variants: &[TransformKind],
    allowlist: &Allowlist,
) -> Result<Report, VerifyError> {
    let corpus = build_corpus(spec)?;
    run_on_corpus(&corpus, variants, allowlist)
}

/// [`run_suite`] over an already materialised corpus.
pub fn run_on_corpus(
    corpus: &[CorpusGraph],
    variants: &[TransformKind],
    allowlist: &Allowlist,
) -> Result<Report, VerifyError> {
    if corpus.is_empty() {
        return Err(VerifyError::EmptyCorpus);
    }
    if variants.is_empty() {
        return Err(VerifyError::NoVariants);
    }
    let mut variants = variants.to_vec();
    variants.sort();
    variants.dedup();

    let results: Vec<GraphResult> = corpus
        .par_iter()
        .map(|entry| verify_graph(entry, &variants))
        .collect();

    let mut tallies: Vec<ClaimTally> = claims::CLAIMS
        .iter()
        .map(|claim| ClaimTally {
            claim,
            checked: 0,
            refuted: 0,
            counterexample: None,
        })
        .collect();
    let mut amgm: BTreeMap<TransformKind, AmGmSummary> = BTreeMap::new();
    let mut records = Vec::with_capacity(corpus.len() * variants.len());

    for (entry, result) in corpus.iter().zip(results) {
        records.extend(result.records);
        for check in result.checks {
            let tally = &mut tallies[check.claim];
            tally.checked += 1;
            if !check.confirmed {
                tally.refuted += 1;
                let smaller = tally
                    .counterexample
                    .as_ref()
                    .is_none_or(|(best, _, _)| entry.summary < *best);
                if smaller {
                    tally.counterexample =
                        Some((entry.summary.clone(), check.printed, check.oracle));
                }
            }
        }
        for obs in result.bounds {
            tally_bound(amgm.entry(obs.kind).or_default(), obs, &entry.summary);
        }
    }
    records.sort_by(|a, b| (&a.graph_hash, a.variant).cmp(&(&b.graph_hash, b.variant)));

    let mut summary = Summary {
        total: records.len(),
        graphs: corpus.len(),
        ..Summary::default()
    };
    for r in &records {
        match r.verdict {
            Verdict::Match => summary.matched += 1,
            Verdict::BoundTight => summary.tight += 1,
            Verdict::BoundHoldsStrict => summary.strict += 1,
            Verdict::NotApplicable => summary.not_applicable += 1,
            Verdict::Mismatch => summary.mismatch += 1,
        }
    }

    let mut claim_summaries = Vec::with_capacity(tallies.len());
    let mut errata = Vec::new();
    for t in tallies {
        let allowlisted = allowlist.contains(t.claim.id);
        let status = match (t.checked, t.refuted, allowlisted) {
            (0, _, _) => ClaimStatus::Unchecked,
            (_, 0, _) => ClaimStatus::Confirmed,
            (_, _, true) => ClaimStatus::Erratum,
            (_, _, false) => ClaimStatus::Mismatch,
        };
        match status {
            ClaimStatus::Confirmed => summary.claims_confirmed += 1,
            ClaimStatus::Erratum => summary.errata += 1,
            ClaimStatus::Mismatch => summary.mismatch += 1,
            ClaimStatus::Unchecked => {}
        }
        if let Some((counterexample, printed_value, oracle_value)) = t.counterexample {
            errata.push(ErratumRecord {
                claim: t.claim.id,
                printed_formula: t.claim.printed,
                counterexample,
                printed_value,
                oracle_value,
                refuted: t.refuted,
                checked: t.checked,
                allowlisted,
            });
        }
        claim_summaries.push(ClaimSummary {
            id: t.claim.id,
            variant: t.claim.kind,
            scope: t.claim.scope,
            form: t.claim.form,
            printed: t.claim.printed,
            checked: t.checked,
            refuted: t.refuted,
            status,
        });
    }

    Ok(Report {
        summary,
        records,
        errata,
        claims: claim_summaries,
        amgm: amgm
            .into_iter()
            .map(|(kind, mut s)| {
                s.variant = Some(kind);
                s
            })
            .collect(),
    })
}

fn tally_bound(s: &mut AmGmSummary, obs: BoundObservation, graph: &GraphSummary) {
    let Some(outcome) = obs.outcome else {
        s.not_applicable += 1;
        return;
    };
    let regular = graph.regular.is_some();
    match (outcome, regular) {
        (BoundOutcome::Violated, _) => s.violations += 1,
        (BoundOutcome::Tight, true) => s.regular_tight += 1,
        (BoundOutcome::Strict, true) => s.regular_not_tight += 1,
        (BoundOutcome::Strict, false) => s.nonregular_strict += 1,
        (BoundOutcome::Tight, false) => {
            s.nonregular_tight += 1;
            if s.nonregular_tight_examples.len() < AmGmSummary::MAX_EXAMPLES {
                s.nonregular_tight_examples.push(graph.clone());
            }
        }
    }
    if !regular {
        s.nonregular_vertex_part_tight += usize::from(obs.vertex_tight);
        s.nonregular_edge_part_tight += usize::from(obs.edge_tight);
    }
}

/// AM-GM equality behaviour of the bounded variants over a corpus.
pub fn check_amgm_equality(
    corpus: &[CorpusGraph],
    variants: &[TransformKind],
) -> Result<Vec<AmGmSummary>, VerifyError> {
    let bounded: Vec<_> = variants
        .iter()
        .copied()
        .filter(|&k| formulas::is_bounded(k))
        .collect();
    if bounded.is_empty() {
        return Err(VerifyError::NoVariants);
    }
    Ok(run_on_corpus(corpus, &bounded, &Allowlist::default())?.amgm)
}
