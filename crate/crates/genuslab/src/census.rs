//! Exhaustive small-n census: exact labelled, unlabelled and connected
//! counts per (n, h, family), persisted as CSV with resumable checkpoints,
//! plus a registry of exact inequality checks that ties the census numbers
//! to the closed-form bound evaluators.

use crate::classes::{self, GenusMode};
use crate::embedding;
use crate::formulas::{self, CompositionIndexing};
use crate::graph::{graph_count, graph_from_index, Graph, CANON_HARD_LIMIT};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// Genus families (exhaustive scheme search per graph) stop here.
pub const GENUS_CENSUS_CEILING: usize = 5;
/// Cycle-rank/excess families extend to here.
pub const STRUCTURE_CENSUS_CEILING: usize = 7;
/// Checkpoint granularity by enumeration index.
pub const CHECKPOINT_INTERVAL: u64 = 1 << 15;

/// Graph family indexed by a genus budget h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    /// Minimum Euler genus over all surfaces at most h.
    AnySurface,
    /// Minimum orientable Euler genus at most h.
    Orientable,
    /// Minimum nonorientable Euler genus at most h (0 for planar graphs).
    Nonorientable,
    /// Both of the previous two.
    BothModes,
    /// Cycle rank at most h (equivalently every embedding within genus h).
    CycleRank,
    /// Excess at most h.
    Excess,
    /// Connected with cycle rank at most h.
    ConnectedCycleRank,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [
        FamilyTag::AnySurface,
        FamilyTag::Orientable,
        FamilyTag::Nonorientable,
        FamilyTag::BothModes,
        FamilyTag::CycleRank,
        FamilyTag::Excess,
        FamilyTag::ConnectedCycleRank,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FamilyTag::AnySurface => "E",
            FamilyTag::Orientable => "OE",
            FamilyTag::Nonorientable => "NE",
            FamilyTag::BothModes => "OE&NE",
            FamilyTag::CycleRank => "F",
            FamilyTag::Excess => "XS",
            FamilyTag::ConnectedCycleRank => "C",
        }
    }

    pub fn needs_genus(self) -> bool {
        matches!(
            self,
            FamilyTag::AnySurface
                | FamilyTag::Orientable
                | FamilyTag::Nonorientable
                | FamilyTag::BothModes
        )
    }
}

/// Genus data of one isomorphism class (sphere convention applied to the
/// nonorientable minimum).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusSummary {
    pub min_h: usize,
    pub min_orientable_h: usize,
    pub min_nonorientable_h: usize,
    pub max_h: usize,
}

/// One isomorphism class of graphs on [n].
#[derive(Debug, Clone)]
pub struct ClassEntry {
    /// Lowest enumeration index realizing the class (its edge bitmask).
    pub rep_index: u64,
    /// Number of labelled graphs in the class.
    pub labelled: u64,
    pub connected: bool,
    pub cycle_rank: usize,
    pub excess: usize,
    pub edge_count: usize,
    /// Present for n up to the genus census ceiling.
    pub genus: Option<GenusSummary>,
}

impl ClassEntry {
    pub fn in_family(&self, family: FamilyTag, h: usize) -> bool {
        match family {
            FamilyTag::AnySurface => self.genus.expect("genus families need genus data").min_h <= h,
            FamilyTag::Orientable => {
                self.genus.expect("genus families need genus data").min_orientable_h <= h
            }
            FamilyTag::Nonorientable => {
                self.genus.expect("genus families need genus data").min_nonorientable_h <= h
            }
            FamilyTag::BothModes => {
                let g = self.genus.expect("genus families need genus data");
                g.min_orientable_h.max(g.min_nonorientable_h) <= h
            }
            FamilyTag::CycleRank => self.cycle_rank <= h,
            FamilyTag::Excess => self.excess <= h,
            FamilyTag::ConnectedCycleRank => self.connected && self.cycle_rank <= h,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CensusLevel {
    pub n: usize,
    /// Canonical key -> class, in key order (deterministic).
    pub classes: BTreeMap<u64, ClassEntry>,
}

#[derive(Debug, Clone)]
pub struct Census {
    pub levels: Vec<CensusLevel>,
    pub genus_n_max: usize,
}

/// One row of the published table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub n: usize,
    pub h: usize,
    pub family: FamilyTag,
    pub labelled: u64,
    pub unlabelled: u64,
    pub connected_labelled: u64,
    pub connected_unlabelled: u64,
}

/// Largest relevant genus budget on [n]: the cycle rank of the complete
/// graph (which is also its maximum Euler genus).
pub fn h_ceiling(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        n * (n - 1) / 2 + 1 - n
    }
}

#[derive(Serialize, Deserialize)]
struct Checkpoint {
    n: usize,
    next_index: u64,
    /// (canonical key, representative index, labelled count), key-sorted.
    classes: Vec<(u64, u64, u64)>,
}

fn checkpoint_path(dir: &Path, n: usize) -> std::path::PathBuf {
    dir.join(format!("checkpoint_n{n}.json"))
}

fn load_checkpoint(dir: &Path, n: usize) -> Result<Option<(BTreeMap<u64, (u64, u64)>, u64)>> {
    let path = checkpoint_path(dir, n);
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path)?;
    let ck: Checkpoint = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad checkpoint {}: {e}", path.display())))?;
    if ck.n != n {
        return Err(Error::Parse(format!("checkpoint {} is for n = {}", path.display(), ck.n)));
    }
    let map = ck.classes.into_iter().map(|(k, rep, lab)| (k, (rep, lab))).collect();
    Ok(Some((map, ck.next_index)))
}

fn save_checkpoint(
    dir: &Path,
    n: usize,
    classes: &BTreeMap<u64, (u64, u64)>,
    next_index: u64,
) -> Result<()> {
    let ck = Checkpoint {
        n,
        next_index,
        classes: classes.iter().map(|(&k, &(rep, lab))| (k, rep, lab)).collect(),
    };
    let path = checkpoint_path(dir, n);
    let tmp = path.with_extension("json.tmp");
    std::fs::write(&tmp, serde_json::to_string(&ck).expect("checkpoint serializes"))?;
    std::fs::rename(&tmp, &path)?;
    Ok(())
}

/// Exhaustive census of all simple graphs on [1]..[n_max]. Genus families
/// are populated up to the genus ceiling; cycle-rank/excess families all
/// the way. Checkpoints (if a directory is given) make the run resumable at
/// 2^15-graph granularity with byte-identical results.
pub fn run_census(n_max: usize, budget: u128, checkpoint_dir: Option<&Path>) -> Result<Census> {
    if n_max > STRUCTURE_CENSUS_CEILING {
        return Err(Error::CeilingExceeded {
            what: "census",
            requested: n_max,
            limit: STRUCTURE_CENSUS_CEILING,
        });
    }
    let genus_n_max = n_max.min(GENUS_CENSUS_CEILING);
    let mut levels = Vec::new();
    for n in 1..=n_max {
        let total = graph_count(n);
        let (mut raw, mut next) = match checkpoint_dir {
            Some(dir) => load_checkpoint(dir, n)?.unwrap_or((BTreeMap::new(), 0)),
            None => (BTreeMap::new(), 0),
        };
        while next < total {
            let end = (next + CHECKPOINT_INTERVAL).min(total);
            let keyed: Vec<(u64, u64)> = (next..end)
                .into_par_iter()
                .map(|i| {
                    let key = graph_from_index(n, i)
                        .canonical_form(CANON_HARD_LIMIT)
                        .expect("census n is within the canonical-form limit");
                    (key, i)
                })
                .collect();
            for (key, i) in keyed {
                let slot = raw.entry(key).or_insert((i, 0));
                slot.1 += 1;
            }
            next = end;
            if let Some(dir) = checkpoint_dir {
                save_checkpoint(dir, n, &raw, next)?;
            }
        }
        let entries: Result<Vec<(u64, ClassEntry)>> = raw
            .into_par_iter()
            .map(|(key, (rep_index, labelled))| {
                let g = graph_from_index(n, rep_index);
                let genus = if n <= genus_n_max {
                    let p = embedding::genus_profile(&g, budget)?;
                    Some(GenusSummary {
                        min_h: p.min_h,
                        min_orientable_h: p.min_orientable_h,
                        min_nonorientable_h: if p.min_orientable_h == 0 {
                            0
                        } else {
                            p.min_nonorientable_h
                                .expect("nonplanar graphs admit nonorientable schemes")
                        },
                        max_h: p.max_h,
                    })
                } else {
                    None
                };
                Ok((
                    key,
                    ClassEntry {
                        rep_index,
                        labelled,
                        connected: g.is_connected(),
                        cycle_rank: g.cycle_rank(),
                        excess: g.excess(),
                        edge_count: g.e(),
                        genus,
                    },
                ))
            })
            .collect();
        levels.push(CensusLevel { n, classes: entries?.into_iter().collect() });
    }
    Ok(Census { levels, genus_n_max })
}

impl Census {
    pub fn n_max(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> Option<&CensusLevel> {
        self.levels.get(n.wrapping_sub(1))
    }

    /// The four counts of one (n, family, h) cell.
    pub fn counts(&self, n: usize, family: FamilyTag, h: usize) -> Option<[u64; 4]> {
        let level = self.level(n)?;
        if family.needs_genus() && n > self.genus_n_max {
            return None;
        }
        let h = h.min(h_ceiling(n));
        let mut out = [0u64; 4];
        for entry in level.classes.values() {
            if !entry.in_family(family, h) {
                continue;
            }
            out[0] += entry.labelled;
            out[1] += 1;
            if entry.connected {
                out[2] += entry.labelled;
                out[3] += 1;
            }
        }
        Some(out)
    }

    pub fn records(&self) -> Vec<CensusRecord> {
        let mut out = Vec::new();
        for level in &self.levels {
            let n = level.n;
            for family in FamilyTag::ALL {
                if family.needs_genus() && n > self.genus_n_max {
                    continue;
                }
                for h in 0..=h_ceiling(n) {
                    let c = self.counts(n, family, h).expect("cell in range");
                    out.push(CensusRecord {
                        n,
                        h,
                        family,
                        labelled: c[0],
                        unlabelled: c[1],
                        connected_labelled: c[2],
                        connected_unlabelled: c[3],
                    });
                }
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,h,family,labelled,unlabelled,connected_labelled,connected_unlabelled\n");
        for r in self.records() {
            writeln!(
                s,
                "{},{},{},{},{},{},{}",
                r.n,
                r.h,
                r.family.label(),
                r.labelled,
                r.unlabelled,
                r.connected_labelled,
                r.connected_unlabelled
            )
            .expect("writing to a String cannot fail");
        }
        s
    }
}

// ---------------------------------------------------------------------------
// Inequality registry
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Holds,
    Fails,
    SkippedBudget,
    /// Informational one-sided proxy; never gates verification.
    Reported,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimResult {
    pub claim: String,
    pub anchor: String,
    pub instance: String,
    pub status: ClaimStatus,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn failures(&self) -> usize {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fails).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn rat(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Run every registered inequality against the census. Each claim id
/// appears exactly once; its witness quotes the tightest or first-failing
/// instance.
pub fn verify_inequalities(census: &Census, budget: u128) -> VerificationReport {
    let mut claims = Vec::new();
    let gmax = census.genus_n_max.min(census.n_max());
    let smax = census.n_max();

    // R1: adding a vertex multiplies the embeddable count by at least 2n.
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 1..gmax {
            for h in 0..=h_ceiling(n + 1) {
                let small = census.counts(n, FamilyTag::AnySurface, h).unwrap()[0];
                let big = census.counts(n + 1, FamilyTag::AnySurface, h).unwrap()[0];
                let ok = big >= 2 * n as u64 * small;
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!("n={n},h={h}: {big} < {}", 2 * n as u64 * small);
                }
                if ok && n + 1 == gmax && h == 0 {
                    witness = format!("n={n},h=0: {big} >= {}*{small}", 2 * n);
                }
            }
        }
        claims.push(ClaimResult {
            claim: "vertex-growth-ratio".into(),
            anchor: "R1".into(),
            instance: format!("|E^h(n+1)| >= 2n|E^h(n)| for n+1 <= {gmax}, all h"),
            status,
            witness,
        });
    }

    // R2: adding a handle multiplies the embeddable count by at least
    // (C(n,2) - 3(n+h)) / (3(n+h)).
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 1..=gmax {
            for h in 0..=h_ceiling(n).saturating_sub(2) {
                let base = census.counts(n, FamilyTag::AnySurface, h).unwrap()[0];
                let bigger = census.counts(n, FamilyTag::AnySurface, h + 2).unwrap()[0];
                let factor = formulas::extension_growth_factor(n, h);
                let ok = rat(bigger) >= factor.clone() * rat(base);
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!("n={n},h={h}: {bigger} < {factor}*{base}");
                } else if ok && witness.is_empty() {
                    witness = format!("n={n},h={h}: {bigger} >= {factor}*{base}");
                }
            }
        }
        claims.push(ClaimResult {
            claim: "handle-growth-ratio".into(),
            anchor: "R2".into(),
            instance: format!("|E^(h+2)(n)| >= ((C(n,2)-3(n+h))/(3(n+h)))|E^h(n)|, n <= {gmax}"),
            status,
            witness,
        });
    }

    // R3: exact count of connected low-cycle-rank graphs beats the
    // spanning-tree-plus-extra-edges lower bound.
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 1..=smax {
            let hi = ((n * n) as i64 - 5 * n as i64) / 2;
            for h in 0..=hi.max(-1).min(h_ceiling(n) as i64) {
                let h = h as usize;
                let count = census.counts(n, FamilyTag::ConnectedCycleRank, h).unwrap()[0];
                let bound = formulas::connected_low_rank_lower_bound(n, h)
                    .expect("h is within the validity range");
                let ok = rat(count) >= bound;
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!("n={n},h={h}: {count} < {bound}");
                } else if ok && n == 6 && h == 1 {
                    witness = format!("n=6,h=1: {count} >= {bound}");
                }
            }
        }
        claims.push(ClaimResult {
            claim: "connected-low-rank-lower-bound".into(),
            anchor: "R3".into(),
            instance: format!("|C^h(n)| >= n^(n-2)((n^2-3n)/(2(n+h)))^h, n <= {smax}, 2h <= n^2-5n"),
            status,
            witness,
        });
    }

    // R4: the low-cycle-rank count sits inside the sandwich
    // (n^2/(14(n+h)))^(n+h) <= |F^h(n)| <= (8n^2/(n+h))^(n+h).
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 1..=smax {
            for h in 0..=n * n {
                let count = census.counts(n, FamilyTag::CycleRank, h).unwrap()[0];
                let lower = formulas::embeddable_estimate(n, h, false).expect("h <= n^2");
                let upper = formulas::embeddable_estimate(n, h, true).expect("h <= n^2");
                let ok = lower <= rat(count) && rat(count) <= upper;
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!("n={n},h={h}: {count} outside [{lower}, {upper}]");
                } else if ok && n == 5 && h == 0 {
                    witness = format!("n=5,h=0: {lower} <= {count} <= {upper}");
                }
            }
        }
        claims.push(ClaimResult {
            claim: "low-rank-sandwich".into(),
            anchor: "R4".into(),
            instance: format!("(n^2/(14(n+h)))^(n+h) <= |F^h(n)| <= (8n^2/(n+h))^(n+h), n <= {smax}, h <= n^2"),
            status,
            witness,
        });
    }

    // R5: a handle can be replaced by two crosscaps: every graph with
    // orientable genus <= h embeds nonorientably within h+1 (set
    // containment per isomorphism class, sphere convention).
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 1..=gmax {
            let level = census.level(n).unwrap();
            for entry in level.classes.values() {
                let g = entry.genus.unwrap();
                let ok = g.min_nonorientable_h <= g.min_orientable_h + 1;
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!(
                        "n={n},graph#{}: nonorientable {} > orientable {}+1",
                        entry.rep_index, g.min_nonorientable_h, g.min_orientable_h
                    );
                }
            }
        }
        if status == ClaimStatus::Holds {
            witness = format!("all classes up to n={gmax}: nonorientable <= orientable+1");
        }
        claims.push(ClaimResult {
            claim: "crosscap-from-handle".into(),
            anchor: "R5".into(),
            instance: format!("OE^h(n) contained in NE^(h+1)(n), n <= {gmax}"),
            status,
            witness,
        });
    }

    // R6: bridge-addable classes have many connected members:
    // unlabelled-connected >= unlabelled / (2n). Applied to the
    // any-surface families (n within genus range) and the cycle-rank
    // families (all n).
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        let mut run = |family: FamilyTag, n_hi: usize, census: &Census| {
            for n in 1..=n_hi {
                for h in 0..=h_ceiling(n) {
                    let c = census.counts(n, family, h).unwrap();
                    let ok = rat(c[3]) >= rat(c[1]) / rat(2 * n as u64);
                    if !ok && status == ClaimStatus::Holds {
                        status = ClaimStatus::Fails;
                        witness = format!(
                            "{} n={n},h={h}: {} < {}/{}",
                            family.label(),
                            c[3],
                            c[1],
                            2 * n
                        );
                    } else if ok && family == FamilyTag::AnySurface && n == 5 && h == 0 {
                        witness = format!("E n=5,h=0: {} >= {}/10", c[3], c[1]);
                    }
                }
            }
        };
        run(FamilyTag::AnySurface, gmax, census);
        run(FamilyTag::CycleRank, smax, census);
        claims.push(ClaimResult {
            claim: "bridge-addable-connected-ratio".into(),
            anchor: "R6".into(),
            instance: format!(
                "unlabelled-connected >= unlabelled/(2n) for E (n <= {gmax}) and F (n <= {smax})"
            ),
            status,
            witness,
        });
    }

    // R7: an n-vertex graph embeddable within genus h has at most
    // 3(n+h-2) edges (n >= 3; the bound is vacuous below that).
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 3..=gmax {
            let level = census.level(n).unwrap();
            for entry in level.classes.values() {
                let h = entry.genus.unwrap().min_h;
                let bound = formulas::embeddable_edge_bound(n, h);
                let ok = entry.edge_count as i64 <= bound;
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!(
                        "n={n},graph#{}: {} edges > {bound}",
                        entry.rep_index, entry.edge_count
                    );
                }
            }
        }
        if status == ClaimStatus::Holds {
            witness = format!("all classes 3 <= n <= {gmax}: e <= 3(n+h-2)");
        }
        claims.push(ClaimResult {
            claim: "embeddable-edge-bound".into(),
            anchor: "R7".into(),
            instance: format!("e(G) <= 3(n+h-2) for G in E^h(n), 3 <= n <= {gmax}"),
            status,
            witness,
        });
    }

    // R8: cross-family coherence per isomorphism class: cycle rank bounds
    // the maximum genus (so F^h within E^h), and excess bounds the minimum
    // genus in both modes (so XS^h within OE^h and NE^h).
    {
        let mut status = ClaimStatus::Holds;
        let mut witness = String::new();
        for n in 1..=gmax {
            let level = census.level(n).unwrap();
            for entry in level.classes.values() {
                let g = entry.genus.unwrap();
                let ok = g.max_h <= entry.cycle_rank
                    && g.min_orientable_h <= entry.excess
                    && g.min_nonorientable_h <= entry.excess
                    && g.min_h <= g.min_orientable_h;
                if !ok && status == ClaimStatus::Holds {
                    status = ClaimStatus::Fails;
                    witness = format!("n={n},graph#{}: {g:?} vs rank {}, excess {}",
                        entry.rep_index, entry.cycle_rank, entry.excess);
                }
            }
        }
        if status == ClaimStatus::Holds {
            witness = format!("all classes up to n={gmax}: max genus <= cycle rank, both minima <= excess");
        }
        claims.push(ClaimResult {
            claim: "cross-family-coherence".into(),
            anchor: "R8".into(),
            instance: format!("F^h within E^h and XS^h within OE^h, NE^h, n <= {gmax}"),
            status,
            witness,
        });
    }

    // R9: smallest extension count matches 6n-9 and is at least 2n.
    {
        let (mut status, mut witness) = (ClaimStatus::Holds, String::new());
        for n in [4usize, 5] {
            match classes::minext(n, 0, GenusMode::Any, budget) {
                Ok(m) => {
                    let ok = m as u64 == 6 * n as u64 - 9 && m >= 2 * n;
                    if !ok && status == ClaimStatus::Holds {
                        status = ClaimStatus::Fails;
                        witness = format!("n={n}: minext = {m}, expected {}", 6 * n - 9);
                    } else if ok {
                        witness = format!("minext({n},0) = {m} = 6n-9 >= 2n");
                    }
                }
                Err(Error::BudgetExceeded { .. }) => {
                    status = ClaimStatus::SkippedBudget;
                    witness = format!("n={n}: budget exceeded");
                }
                Err(e) => {
                    status = ClaimStatus::Fails;
                    witness = format!("n={n}: {e}");
                }
            }
        }
        claims.push(ClaimResult {
            claim: "minimum-extension-count".into(),
            anchor: "R9".into(),
            instance: "minext(n,0) = 6n-9 >= 2n at n = 4, 5".into(),
            status,
            witness,
        });
    }

    // R10 (reported, never asserted): unlabelled connected planar graph
    // counts per edge count, against the rooted-map chain bound
    // UMap(n,0) * D(2(n-1), e-n+1). Graphs undercount maps, so this is a
    // one-sided sanity proxy.
    {
        let mut lines = Vec::new();
        let mut all_ok = true;
        for n in 2..=gmax {
            let level = census.level(n).unwrap();
            let mut per_edge: BTreeMap<usize, u64> = BTreeMap::new();
            for entry in level.classes.values() {
                if entry.connected && entry.genus.unwrap().min_h == 0 {
                    *per_edge.entry(entry.edge_count).or_insert(0) += 1;
                }
            }
            let umap = formulas::unicellular_orientable_rooted(n, 0, CompositionIndexing::Genus)
                .expect("h = 0 is always valid")
                .to_integer();
            for (e, count) in per_edge {
                if e + 1 < n {
                    continue;
                }
                let j = e + 1 - n;
                let bound = match formulas::dissection_count(2 * (n - 1), j) {
                    Ok(d) => umap.clone() * d,
                    Err(_) => continue,
                };
                let ok = BigInt::from(count) <= bound;
                all_ok &= ok;
                lines.push(format!("n={n},e={e}: {count} <= {bound} ({ok})"));
            }
        }
        claims.push(ClaimResult {
            claim: "maps-to-unicellular-proxy".into(),
            anchor: "R10".into(),
            instance: format!("unlabelled connected planar per edge count vs UMap*D, n <= {gmax}"),
            status: ClaimStatus::Reported,
            witness: format!("all within bound: {all_ok}; {}", lines.join("; ")),
        });
    }

    VerificationReport { claims }
}

// ---------------------------------------------------------------------------
// Extension census
// ---------------------------------------------------------------------------

/// Exact minimum extension count over all graphs on [n] in the class, with
/// the first argmin in enumeration order.
pub fn extension_census(
    n: usize,
    h: usize,
    mode: GenusMode,
    budget: u128,
) -> Result<(usize, Graph)> {
    let limit = if h == 0 { 5 } else { 4 };
    if n == 0 || n > limit {
        return Err(Error::CeilingExceeded { what: "extension census", requested: n, limit });
    }
    let mut cache = embedding::PlanarityCache::new();
    let mut best: Option<(usize, Graph)> = None;
    for g in crate::graph::enumerate_graphs(n, 7, None)? {
        let in_class = if h == 0 {
            cache.is_planar(&g, budget)?
        } else {
            let p = embedding::genus_profile(&g, budget)?;
            match mode {
                GenusMode::Any => p.min_h <= h,
                GenusMode::Orientable => p.min_orientable_h <= h,
                GenusMode::Nonorientable => {
                    (if p.min_orientable_h == 0 {
                        0
                    } else {
                        p.min_nonorientable_h.expect("nonplanar graph")
                    }) <= h
                }
            }
        };
        if !in_class {
            continue;
        }
        let c = classes::ext_count(&g, h, mode, budget, &mut cache)?;
        if best.as_ref().map_or(true, |(b, _)| c < *b) {
            best = Some((c, g));
        }
    }
    best.ok_or_else(|| Error::Precondition(format!("no graph on [{n}] lies in the class")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    #[test]
    fn census_small_counts() {
        let census = run_census(5, DEFAULT_BUDGET, None).unwrap();
        // All 4-vertex graphs are planar.
        assert_eq!(census.counts(4, FamilyTag::AnySurface, 0).unwrap()[0], 64);
        // K5 is the unique nonplanar graph on [5].
        let c = census.counts(5, FamilyTag::AnySurface, 0).unwrap();
        assert_eq!(c[0], 1023);
        assert_eq!(c[1], 33);
        // K5 has orientable Euler genus 2, so everything fits at h = 2.
        assert_eq!(census.counts(5, FamilyTag::Orientable, 2).unwrap()[0], 1024);
        assert_eq!(census.counts(5, FamilyTag::Orientable, 1).unwrap()[0], 1023);
        // Nonorientable genus of K5 is 1.
        assert_eq!(census.counts(5, FamilyTag::Nonorientable, 1).unwrap()[0], 1024);
        // Forests and trees on [5].
        assert_eq!(census.counts(5, FamilyTag::CycleRank, 0).unwrap()[0], 291);
        assert_eq!(census.counts(5, FamilyTag::ConnectedCycleRank, 0).unwrap()[0], 125);
        // Unlabelled totals at the top of the h range.
        assert_eq!(census.counts(4, FamilyTag::CycleRank, h_ceiling(4)).unwrap()[1], 11);
        assert_eq!(census.counts(5, FamilyTag::CycleRank, h_ceiling(5)).unwrap()[1], 34);
    }

    #[test]
    fn census_monotone_and_consistent() {
        let census = run_census(5, DEFAULT_BUDGET, None).unwrap();
        for r in census.records() {
            assert!(r.labelled >= r.unlabelled);
            assert!(r.connected_labelled <= r.labelled);
            assert!(r.connected_unlabelled <= r.unlabelled);
        }
        for n in 1..=5 {
            for family in FamilyTag::ALL {
                for h in 1..=h_ceiling(n) {
                    let prev = census.counts(n, family, h - 1).unwrap();
                    let cur = census.counts(n, family, h).unwrap();
                    for i in 0..4 {
                        assert!(cur[i] >= prev[i], "monotone in h: {family:?} n={n} h={h}");
                    }
                }
            }
        }
    }

    #[test]
    fn checkpoint_resume_is_byte_identical() {
        let dir = std::env::temp_dir().join(format!("genuslab-census-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let full = run_census(4, DEFAULT_BUDGET, None).unwrap();
        // Seed a partial checkpoint by truncating a fresh run's file midway:
        // run once with checkpoints, rewind next_index, then resume.
        run_census(4, DEFAULT_BUDGET, Some(&dir)).unwrap();
        let path = checkpoint_path(&dir, 4);
        let ck: Checkpoint = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(ck.next_index, graph_count(4));
        // Rebuild a mid-run checkpoint: replay the first 17 indices only.
        let mut partial = BTreeMap::new();
        for i in 0..17u64 {
            let key = graph_from_index(4, i).canonical_form(CANON_HARD_LIMIT).unwrap();
            let slot = partial.entry(key).or_insert((i, 0));
            slot.1 += 1;
        }
        save_checkpoint(&dir, 4, &partial, 17).unwrap();
        let resumed = run_census(4, DEFAULT_BUDGET, Some(&dir)).unwrap();
        assert_eq!(full.to_csv(), resumed.to_csv());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn registry_all_holds_at_n5() {
        let census = run_census(5, DEFAULT_BUDGET, None).unwrap();
        let report = verify_inequalities(&census, DEFAULT_BUDGET);
        assert_eq!(report.claims.len(), 10);
        for c in &report.claims {
            assert_ne!(c.status, ClaimStatus::Fails, "{}: {}", c.claim, c.witness);
        }
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn extension_census_examples() {
        let (m4, g4) = extension_census(4, 0, GenusMode::Any, DEFAULT_BUDGET).unwrap();
        assert_eq!(m4, 15);
        // The argmin is a 4-vertex planar triangulation (6 edges).
        assert_eq!(g4.e(), 6);
        let (m3, _) = extension_census(3, 0, GenusMode::Any, DEFAULT_BUDGET).unwrap();
        assert!(m3 <= 8);
    }
}
