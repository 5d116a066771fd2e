//! Lower bounds on `n_g(k)`, the order of the smallest `k`-chromatic graph
//! of girth at least `g`, from counting arguments and known values.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("the Moore bound needs minimum degree at least 3, got {0}")]
    DegreeTooSmall(u64),
    #[error("girth must be at least 3, got {0}")]
    GirthTooSmall(u64),
    #[error("no closed-form vertex-critical bound for girth {0}")]
    UnsupportedGirth(u64),
    #[error("the vertex-critical bound needs k >= 4, got {0}")]
    ChromaticTooSmall(u64),
    #[error("anchor for (g={g}, k={k}) listed twice")]
    DuplicateAnchor { g: u64, k: u64 },
    #[error("invalid anchor file: {0}")]
    Parse(String),
}

/// `prior + max(k, ⌈3(k-2)/2⌉) + 1`, where `prior` bounds `n_g(k-1)`.
///
/// Deleting a maximum-degree vertex and its neighbourhood from a
/// `k`-vertex-critical graph leaves a `(k-1)`-chromatic graph of the same
/// girth; the maximum degree is at least `k` (Brooks) and at least
/// `⌈3(k-2)/2⌉` (Kostochka, triangle-free case).
pub fn lemma1_bound(g: u64, k: u64, prior: u64) -> u64 {
    assert!(g >= 4 && k >= 2, "needs g >= 4 and k >= 2");
    prior + k.max((3 * (k - 2)).div_ceil(2)) + 1
}

/// Order of the smallest graph of minimum degree `d` and girth `g`.
pub fn moore_bound(d: u64, g: u64) -> Result<u64, BoundsError> {
    if d < 3 {
        return Err(BoundsError::DegreeTooSmall(d));
    }
    if g < 3 {
        return Err(BoundsError::GirthTooSmall(g));
    }
    let num = if g % 2 == 1 { d * (d - 1).pow((g as u32 - 1) / 2) - 2 } else { 2 * (d - 1).pow(g as u32 / 2) - 2 };
    Ok(num.div_ceil(d - 2))
}

/// Moore-style count around a vertex of degree `k` in a `k`-vertex-critical
/// graph (minimum degree `k - 1`), for girth 4 to 7. Even girths add the
/// `k - 2` vertices needed beyond the bipartite ball.
pub fn lemma3_bound(g: u64, k: u64) -> Result<u64, BoundsError> {
    if k < 4 {
        return Err(BoundsError::ChromaticTooSmall(k));
    }
    match g {
        4 => Ok(3 * k - 3),
        5 => Ok(k * k - k + 1),
        6 => Ok(2 * k * k - 4 * k + 3),
        7 => Ok(k * k * k - 3 * k * k + 3 * k + 1),
        _ => Err(BoundsError::UnsupportedGirth(g)),
    }
}

/// `n_g(3)`: the shortest odd cycle of length at least `g`.
pub fn three_chromatic_order(g: u64) -> u64 {
    g.max(3) | 1
}

/// A known value or lower bound on `n_g(k)`, with where it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerAnchor {
    pub g: u64,
    pub k: u64,
    pub value: u64,
    /// The value is `n_g(k)` itself, not just a bound.
    #[serde(default)]
    pub exact: bool,
    pub citation: String,
}

/// An upper bound on `n_g(k)` witnessed by a concrete graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperAnchor {
    pub g: u64,
    pub k: u64,
    pub value: u64,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AnchorSet {
    #[serde(default, rename = "lower")]
    pub lower: Vec<LowerAnchor>,
    #[serde(default, rename = "upper")]
    pub upper: Vec<UpperAnchor>,
}

fn lower(g: u64, k: u64, value: u64, exact: bool, citation: &str) -> LowerAnchor {
    LowerAnchor { g, k, value, exact, citation: citation.to_string() }
}

fn upper(g: u64, k: u64, value: u64, witness: &str) -> UpperAnchor {
    UpperAnchor { g, k, value, witness: witness.to_string() }
}

impl AnchorSet {
    pub fn empty() -> Self {
        AnchorSet::default()
    }

    /// Exact values and computational lower bounds from the literature,
    /// plus the witness graphs shipped as fixtures.
    pub fn known() -> Self {
        AnchorSet {
            lower: vec![
                lower(4, 4, 11, true, "Chvatal 1974: the Grotzsch graph is smallest"),
                lower(4, 5, 22, true, "Jensen and Royle 1995"),
                lower(4, 6, 32, false, "exhaustive generation of triangle-free graphs"),
                lower(5, 4, 21, true, "Royle 2015"),
                lower(5, 5, 29, false, "exhaustive generation of girth-5 graphs"),
                lower(6, 4, 26, false, "degree-bounded generation, girth 6, orders 19-25 all 3-colourable"),
                lower(7, 4, 30, false, "degree-bounded generation, girth 7, order 29 all 3-colourable"),
            ],
            upper: vec![
                upper(4, 4, 11, "Grotzsch graph"),
                upper(5, 4, 21, "Brinkmann graph"),
                upper(4, 5, 22, "Jensen-Royle graph"),
                upper(6, 4, 66, "LCF(6,11) fixture girth6_chi4_lcf_6_11"),
                upper(7, 4, 171, "LCF(9,19) fixture girth7_chi4_lcf_9_19"),
                upper(5, 5, 80, "LCF(4,20) fixture girth5_chi5_lcf_4_20"),
                upper(4, 6, 40, "LCF(8,5) fixture girth4_chi6_lcf_8_5"),
                upper(4, 7, 77, "adjacency-list fixture girth4_chi7_77"),
                upper(4, 8, 155, "Mycielskian of the 77-vertex fixture"),
            ],
        }
    }

    /// Reads `[[lower]]` and `[[upper]]` tables from TOML.
    pub fn from_toml(text: &str) -> Result<Self, BoundsError> {
        let set: AnchorSet = toml::from_str(text).map_err(|e| BoundsError::Parse(e.to_string()))?;
        set.check()?;
        Ok(set)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("anchor sets serialize")
    }

    fn check(&self) -> Result<(), BoundsError> {
        let mut seen = std::collections::BTreeSet::new();
        for a in &self.lower {
            if !seen.insert((a.g, a.k)) {
                return Err(BoundsError::DuplicateAnchor { g: a.g, k: a.k });
            }
        }
        Ok(())
    }
}

/// Which argument produced a lower bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Anchor(String),
    /// Delete a maximum-degree vertex's closed neighbourhood.
    Lemma1,
    /// Moore-style count with a degree-`k` centre.
    Lemma3,
    /// Moore bound with minimum degree `k - 1`.
    Moore,
}

impl Source {
    pub fn tag(&self) -> &'static str {
        match self {
            Source::Anchor(_) => "anchor",
            Source::Lemma1 => "lemma1",
            Source::Lemma3 => "lemma3",
            Source::Moore => "moore",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsCell {
    pub g: u64,
    pub k: u64,
    pub lower: u64,
    /// Every argument reaching `lower`.
    pub lower_sources: Vec<Source>,
    pub upper: Option<u64>,
    pub upper_witness: Option<String>,
}

impl BoundsCell {
    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsTable {
    pub g_max: u64,
    pub k_max: u64,
    cells: BTreeMap<(u64, u64), BoundsCell>,
}

pub const MIN_GIRTH: u64 = 4;
pub const MIN_CHROMATIC: u64 = 4;

/// Fills `4 <= g <= g_max`, `4 <= k <= k_max` with the best lower bound
/// among the anchors and formulas, chaining the neighbourhood-deletion
/// bound up each girth column, and attaches witnessed upper bounds.
pub fn build_bounds_table(anchors: &AnchorSet, g_max: u64, k_max: u64) -> BoundsTable {
    let mut cells = BTreeMap::new();
    for g in MIN_GIRTH..=g_max {
        let mut prior = three_chromatic_order(g);
        for k in MIN_CHROMATIC..=k_max {
            let mut options: Vec<(u64, Source)> = Vec::new();
            if let Some(a) = anchors.lower.iter().find(|a| a.g == g && a.k == k) {
                options.push((a.value, Source::Anchor(a.citation.clone())));
            }
            if let Ok(v) = lemma3_bound(g, k) {
                options.push((v, Source::Lemma3));
            }
            options.push((lemma1_bound(g, k, prior), Source::Lemma1));
            if let Ok(v) = moore_bound(k - 1, g) {
                options.push((v, Source::Moore));
            }
            let lower = options.iter().map(|&(v, _)| v).max().expect("lemma1 always applies");
            let lower_sources = options.into_iter().filter(|&(v, _)| v == lower).map(|(_, s)| s).collect();
            let exact = anchors.lower.iter().find(|a| a.g == g && a.k == k && a.exact);
            let witness = anchors.upper.iter().filter(|u| u.g == g && u.k == k).min_by_key(|u| u.value);
            let (upper, upper_witness) = match (exact, witness) {
                (_, Some(w)) => (Some(w.value), Some(w.witness.clone())),
                (Some(a), None) => (Some(a.value), Some(a.citation.clone())),
                (None, None) => (None, None),
            };
            cells.insert((g, k), BoundsCell { g, k, lower, lower_sources, upper, upper_witness });
            prior = lower;
        }
    }
    BoundsTable { g_max, k_max, cells }
}

impl BoundsTable {
    pub fn get(&self, g: u64, k: u64) -> Option<&BoundsCell> {
        self.cells.get(&(g, k))
    }

    /// Cells in `(g, k)` order.
    pub fn cells(&self) -> impl Iterator<Item = &BoundsCell> {
        self.cells.values()
    }

    /// Grid with one row per `k` and one column per `g`; exact values stand
    /// alone, bounds show as `lower-upper` or `>=lower`.
    pub fn render_grid(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{:>4}", "k\\g");
        for g in MIN_GIRTH..=self.g_max {
            let _ = write!(out, " {g:>10}");
        }
        out.push('\n');
        for k in MIN_CHROMATIC..=self.k_max {
            let _ = write!(out, "{k:>4}");
            for g in MIN_GIRTH..=self.g_max {
                let cell = &self.cells[&(g, k)];
                let text = match cell.upper {
                    Some(u) if u == cell.lower => format!("{u}"),
                    Some(u) => format!("{}-{u}", cell.lower),
                    None => format!(">={}", cell.lower),
                };
                let _ = write!(out, " {text:>10}");
            }
            out.push('\n');
        }
        out
    }

    /// One `key=value` record per cell.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for c in self.cells() {
            let sources: Vec<&str> = c.lower_sources.iter().map(Source::tag).collect();
            let _ = write!(out, "g={} k={} lower={} lower_source={}", c.g, c.k, c.lower, sources.join(","));
            if let Some(u) = c.upper {
                let _ = write!(out, " upper={u}");
            }
            let _ = writeln!(out, " exact={}", c.is_exact());
        }
        out
    }

    /// Footnotes naming each anchor and witness used.
    pub fn render_provenance(&self) -> String {
        let mut out = String::new();
        for c in self.cells() {
            for s in &c.lower_sources {
                if let Source::Anchor(cite) = s {
                    let _ = writeln!(out, "n_{}({}) >= {}: {cite}", c.g, c.k, c.lower);
                }
            }
            if let (Some(u), Some(w)) = (c.upper, &c.upper_witness) {
                let _ = writeln!(out, "n_{}({}) <= {u}: {w}", c.g, c.k);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moore_values() {
        assert_eq!(moore_bound(3, 5), Ok(10));
        assert_eq!(moore_bound(3, 6), Ok(14));
        assert_eq!(moore_bound(2, 5), Err(BoundsError::DegreeTooSmall(2)));
        assert_eq!(moore_bound(3, 2), Err(BoundsError::GirthTooSmall(2)));
    }

    #[test]
    fn lemma3_rejects_other_girths() {
        assert_eq!(lemma3_bound(8, 4), Err(BoundsError::UnsupportedGirth(8)));
        assert_eq!(lemma3_bound(5, 3), Err(BoundsError::ChromaticTooSmall(3)));
    }

    #[test]
    fn odd_cycle_orders() {
        assert_eq!((3..=8).map(three_chromatic_order).collect::<Vec<_>>(), vec![3, 5, 5, 7, 7, 9]);
    }

    #[test]
    fn anchors_round_trip_through_toml() {
        let known = AnchorSet::known();
        assert_eq!(AnchorSet::from_toml(&known.to_toml()).unwrap(), known);
        let text = "[[lower]]\ng = 4\nk = 4\nvalue = 11\ncitation = \"x\"\n[[lower]]\ng = 4\nk = 4\nvalue = 12\ncitation = \"y\"\n";
        assert_eq!(AnchorSet::from_toml(text), Err(BoundsError::DuplicateAnchor { g: 4, k: 4 }));
        assert!(matches!(AnchorSet::from_toml("[[lower]]\ng = 4"), Err(BoundsError::Parse(_))));
    }

    #[test]
    fn upper_bounds_attach() {
        let t = build_bounds_table(&AnchorSet::known(), 7, 8);
        assert_eq!(t.get(4, 7).unwrap().upper, Some(77));
        assert_eq!(t.get(6, 5).unwrap().upper, None);
        assert!(t.get(4, 5).unwrap().is_exact());
        assert!(!t.get(5, 5).unwrap().is_exact());
        assert!(t.render_grid().contains("29-80"));
        assert!(t.render_records().contains("g=7 k=4 lower=30 lower_source=anchor upper=171 exact=false"));
    }
}
