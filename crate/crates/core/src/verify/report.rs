use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::claims::{ClaimForm, ClaimScope};
use crate::transform::TransformKind;
use crate::{BigNat, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub hash: String,
    /// Generator specs that produce this graph, such as `cycle:3`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
    pub regular: Option<usize>,
    pub connected: bool,
}

impl GraphSummary {
    /// Family names joined with `=`, or the content hash for unnamed graphs.
    pub fn label(&self) -> String {
        if self.names.is_empty() {
            self.hash.clone()
        } else {
            self.names.join("=")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    BoundTight,
    BoundHoldsStrict,
    NotApplicable,
    Mismatch,
}

/// Oracle against formula for one `(graph, variant)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub graph_hash: String,
    pub n: usize,
    pub m: usize,
    pub regular: Option<usize>,
    pub variant: TransformKind,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub oracle_nk: BigNat,
    #[serde(serialize_with = "crate::serde_decimal_opt")]
    pub formula_nk: Option<BigNat>,
    #[serde(serialize_with = "crate::serde_decimal_opt")]
    pub bound: Option<ExactRational>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimStatus {
    Confirmed,
    /// Refuted and allowlisted.
    Erratum,
    /// Refuted and not allowlisted.
    Mismatch,
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimSummary {
    pub id: &'static str,
    pub variant: TransformKind,
    pub scope: ClaimScope,
    pub form: ClaimForm,
    pub printed: &'static str,
    pub checked: usize,
    pub refuted: usize,
    pub status: ClaimStatus,
}

/// A printed claim refuted by construction, with its smallest counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErratumRecord {
    pub claim: &'static str,
    pub printed_formula: &'static str,
    pub counterexample: GraphSummary,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub printed_value: ExactRational,
    #[serde(serialize_with = "crate::serde_decimal")]
    pub oracle_value: BigNat,
    pub refuted: usize,
    pub checked: usize,
    pub allowlisted: bool,
}

/// AM-GM equality behaviour of one bounded variant across the corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AmGmSummary {
    pub variant: Option<TransformKind>,
    pub regular_tight: usize,
    /// Regular graphs where the bound is not attained. Expected to be zero.
    pub regular_not_tight: usize,
    pub nonregular_strict: usize,
    /// Non-regular graphs attaining the bound: every averaged factor coincides.
    pub nonregular_tight: usize,
    pub nonregular_vertex_part_tight: usize,
    pub nonregular_edge_part_tight: usize,
    pub violations: usize,
    pub not_applicable: usize,
    pub nonregular_tight_examples: Vec<GraphSummary>,
}

impl AmGmSummary {
    pub const MAX_EXAMPLES: usize = 5;

    pub fn holds(&self) -> bool {
        self.regular_not_tight == 0 && self.violations == 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "match")]
    pub matched: usize,
    pub tight: usize,
    pub strict: usize,
    pub errata: usize,
    pub mismatch: usize,
    pub not_applicable: usize,
    pub graphs: usize,
    pub claims_confirmed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub summary: Summary,
    pub records: Vec<VerificationRecord>,
    pub errata: Vec<ErratumRecord>,
    pub claims: Vec<ClaimSummary>,
    pub amgm: Vec<AmGmSummary>,
}

impl Report {
    /// No mismatch outside the allowlist.
    pub fn passed(&self) -> bool {
        self.summary.mismatch == 0
    }

    /// Number of checks per claim id.
    pub fn coverage(&self) -> BTreeMap<&'static str, usize> {
        self.claims.iter().map(|c| (c.id, c.checked)).collect()
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimSummary> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn erratum(&self, id: &str) -> Option<&ErratumRecord> {
        self.errata.iter().find(|e| e.claim == id)
    }

    pub fn amgm_for(&self, kind: TransformKind) -> Option<&AmGmSummary> {
        self.amgm.iter().find(|a| a.variant == Some(kind))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Human-readable summary tables. Individual records are only in the JSON.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        let _ = writeln!(
            out,
            "graphs {}  records {}  match {}  tight {}  strict {}  n/a {}  errata {}  mismatch {}",
            s.graphs, s.total, s.matched, s.tight, s.strict, s.not_applicable, s.errata, s.mismatch
        );

        let mut per_variant: BTreeMap<TransformKind, [usize; 5]> = BTreeMap::new();
        for r in &self.records {
            per_variant.entry(r.variant).or_default()[r.verdict as usize] += 1;
        }
        let _ = writeln!(
            out,
            "\n{:<8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            "variant", "match", "tight", "strict", "n/a", "mismatch"
        );
        for (kind, c) in &per_variant {
            let _ = writeln!(
                out,
                "{:<8} {:>8} {:>8} {:>8} {:>8} {:>8}",
                kind.name(),
                c[0],
                c[1],
                c[2],
                c[3],
                c[4]
            );
        }

        let _ = writeln!(
            out,
            "\n{:<22} {:<10} {:>7} {:>7}  printed",
            "claim", "status", "checked", "refuted"
        );
        for c in &self.claims {
            let status = match c.status {
                ClaimStatus::Confirmed => "CONFIRMED",
                ClaimStatus::Erratum => "ERRATUM",
                ClaimStatus::Mismatch => "MISMATCH",
                ClaimStatus::Unchecked => "-",
            };
            let _ = writeln!(
                out,
                "{:<22} {:<10} {:>7} {:>7}  {}",
                c.id, status, c.checked, c.refuted, c.printed
            );
        }

        if !self.errata.is_empty() {
            let _ = writeln!(out, "\nerrata (smallest counterexample)");
            for e in &self.errata {
                let g = &e.counterexample;
                let _ = writeln!(
                    out,
                    "  {:<22} {} (n={}, m={}): printed {} vs constructed {}{}",
                    e.claim,
                    g.label(),
                    g.n,
                    g.m,
                    e.printed_value,
                    e.oracle_value,
                    if e.allowlisted {
                        ""
                    } else {
                        "  [NOT ALLOWLISTED]"
                    }
                );
            }
        }

        let _ = writeln!(
            out,
            "\n{:<8} {:>8} {:>8} {:>8} {:>8} {:>8}",
            "AM-GM", "reg=", "reg<", "nonreg<", "nonreg=", "violated"
        );
        for a in &self.amgm {
            let name = a.variant.map(|k| k.name()).unwrap_or("-");
            let _ = writeln!(
                out,
                "{:<8} {:>8} {:>8} {:>8} {:>8} {:>8}",
                name,
                a.regular_tight,
                a.regular_not_tight,
                a.nonregular_strict,
                a.nonregular_tight,
                a.violations
            );
        }
        let _ = writeln!(out, "\n{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}
