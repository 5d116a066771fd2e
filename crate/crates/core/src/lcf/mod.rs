//! Graphs with a semiregular automorphism of `r` cycles of length `s`.
//!
//! Vertex `x` of an `LCF(r, s)` graph lies in row `x mod r`; the shift
//! `x -> x + r (mod rs)` is an automorphism. Edges come in orbits
//! `{(x, x + t) : x ≡ i (mod r)}` keyed by a row `i` and a signed offset `t`.

mod build;
mod format;
mod search;

pub use build::{best_orbits, new_cycle_count, update_orbits, LcfGraph};
pub use format::{emit_lcf_table, parse_lcf_rows, parse_lcf_table, LcfParseError};
pub use search::{
    basic_search, even_girth_search, exhaustive_search, Candidate, EvenGirthHeuristics, ExhaustiveError,
    ExhaustiveOutcome, ScreenOutcome, ScreenRecord, SearchBudget, SearchOutcome, SearchParams,
};

use std::cmp::Ordering;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{edge_key, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcfError {
    #[error("LCF({r},{s}) needs r >= 1 and s >= 1")]
    BadShape { r: usize, s: usize },
    #[error("row {row} is out of range for {r} rows")]
    RowOutOfRange { row: usize, r: usize },
    #[error("offset {offset} in row {row} is a multiple of the order {order} (self-loop)")]
    SelfLoop { row: usize, offset: i64, order: usize },
    #[error("offset {offset} in row {row} exceeds half the order {order}")]
    OffsetOutOfRange { row: usize, offset: i64, order: usize },
    #[error("scheme lists {found} rows but declares {r}")]
    RowCount { found: usize, r: usize },
}

/// One orbit of edges under the shift, stored under its canonical key.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeOrbit {
    r: usize,
    s: usize,
    row: usize,
    offset: i64,
    edges: Vec<(usize, usize)>,
}

/// Reduces `t` modulo `n` into `(-n/2, n/2]`.
fn normalize_offset(t: i64, n: usize) -> i64 {
    let n = n as i64;
    let m = t.rem_euclid(n);
    if 2 * m > n {
        m - n
    } else {
        m
    }
}

/// Key order on descriptions: row, then `|t|`, then positive before negative.
fn key_cmp(a: (usize, i64), b: (usize, i64)) -> Ordering {
    (a.0, a.1.unsigned_abs(), a.1 < 0).cmp(&(b.0, b.1.unsigned_abs(), b.1 < 0))
}

impl EdgeOrbit {
    /// The orbit generated by `(row, offset)`, stored under the smaller of
    /// its two descriptions `(i, t)` and `((i + t) mod r, -t)`.
    pub fn new(r: usize, s: usize, row: usize, offset: i64) -> Result<Self, LcfError> {
        if r == 0 || s == 0 {
            return Err(LcfError::BadShape { r, s });
        }
        if row >= r {
            return Err(LcfError::RowOutOfRange { row, r });
        }
        let n = r * s;
        let t = normalize_offset(offset, n);
        if t == 0 {
            return Err(LcfError::SelfLoop { row, offset, order: n });
        }
        let alt = ((row as i64 + t).rem_euclid(r as i64) as usize, normalize_offset(-t, n));
        let (row, offset) = if key_cmp(alt, (row, t)) == Ordering::Less { alt } else { (row, t) };
        let edges: BTreeSet<(usize, usize)> = (0..s)
            .map(|j| {
                let x = row + r * j;
                edge_key(x, (x as i64 + offset).rem_euclid(n as i64) as usize)
            })
            .collect();
        Ok(EdgeOrbit { r, s, row, offset, edges: edges.into_iter().collect() })
    }

    pub fn row(&self) -> usize {
        self.row
    }

    /// Canonical offset in `(-n/2, n/2]`.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn key(&self) -> (usize, i64) {
        (self.row, self.offset)
    }

    pub fn order(&self) -> usize {
        self.r * self.s
    }

    /// The orbit's distinct edges as `(min, max)` pairs, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The edge `(row, row + offset)`; every other edge is a shift of it.
    pub fn representative(&self) -> (usize, usize) {
        (self.row, (self.row as i64 + self.offset).rem_euclid(self.order() as i64) as usize)
    }

    /// The other description `((i + t) mod r, -t)`; equal to the key for
    /// orbits that map to themselves.
    pub fn alternate(&self) -> (usize, i64) {
        let n = self.order();
        ((self.row as i64 + self.offset).rem_euclid(self.r as i64) as usize, normalize_offset(-self.offset, n))
    }

    /// The two rows the orbit's edges join (equal for rows joined to themselves).
    pub fn rows(&self) -> (usize, usize) {
        (self.row, self.alternate().0)
    }
}

impl PartialOrd for EdgeOrbit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for EdgeOrbit {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.r, self.s).cmp(&(other.r, other.s)).then_with(|| key_cmp(self.key(), other.key()))
    }
}

/// Every loop-free edge orbit of `LCF(r, s)`, once each, in key order.
pub fn get_orbits(r: usize, s: usize) -> Vec<EdgeOrbit> {
    assert!(r >= 1 && s >= 1, "LCF({r},{s}) needs r >= 1 and s >= 1");
    let n = r * s;
    let mut out = Vec::new();
    for row in 0..r {
        for abs in 1..=n as i64 / 2 {
            for t in [abs, -abs] {
                if normalize_offset(t, n) != t {
                    continue;
                }
                let orbit = EdgeOrbit::new(r, s, row, t).expect("row and offset are in range");
                if orbit.key() == (row, t) {
                    out.push(orbit);
                }
            }
        }
    }
    out
}

/// An `LCF(r, s)` table: for each row, signed offsets of its neighbours.
///
/// As in published tables, an orbit may be listed from both of its rows;
/// realizing unions the listings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LcfScheme {
    r: usize,
    s: usize,
    rows: Vec<Vec<i64>>,
}

impl LcfScheme {
    pub fn new(r: usize, s: usize, rows: Vec<Vec<i64>>) -> Result<Self, LcfError> {
        if r == 0 || s == 0 {
            return Err(LcfError::BadShape { r, s });
        }
        if rows.len() != r {
            return Err(LcfError::RowCount { found: rows.len(), r });
        }
        let n = r * s;
        for (row, offsets) in rows.iter().enumerate() {
            for &t in offsets {
                if t.unsigned_abs() as usize * 2 > n {
                    return Err(LcfError::OffsetOutOfRange { row, offset: t, order: n });
                }
                if t == 0 || t.rem_euclid(n as i64) == 0 {
                    return Err(LcfError::SelfLoop { row, offset: t, order: n });
                }
            }
        }
        Ok(LcfScheme { r, s, rows })
    }

    /// Lists every orbit from both of its rows, each row's offsets in key
    /// order (`|t|` ascending, positive first).
    pub fn from_orbits<'a>(r: usize, s: usize, orbits: impl IntoIterator<Item = &'a EdgeOrbit>) -> Self {
        let mut rows: Vec<BTreeSet<(u64, bool, i64)>> = vec![BTreeSet::new(); r];
        for o in orbits {
            assert_eq!((o.r, o.s), (r, s), "orbit belongs to a different LCF shape");
            for (row, t) in [o.key(), o.alternate()] {
                rows[row].insert((t.unsigned_abs(), t < 0, t));
            }
        }
        let rows = rows.into_iter().map(|set| set.into_iter().map(|(_, _, t)| t).collect()).collect();
        LcfScheme { r, s, rows }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn order(&self) -> usize {
        self.r * self.s
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Distinct orbits named by the table, in key order.
    pub fn orbits(&self) -> Vec<EdgeOrbit> {
        let set: BTreeSet<EdgeOrbit> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(row, ts)| ts.iter().map(move |&t| (row, t)))
            .map(|(row, t)| EdgeOrbit::new(self.r, self.s, row, t).expect("scheme offsets are validated"))
            .collect();
        set.into_iter().collect()
    }

    /// The graph on `rs` vertices with every listed orbit's edges.
    pub fn realize(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::new(n);
        for (row, offsets) in self.rows.iter().enumerate() {
            for &t in offsets {
                for j in 0..self.s {
                    let x = row + self.r * j;
                    g.add_edge(x, (x as i64 + t).rem_euclid(n as i64) as usize);
                }
            }
        }
        g
    }

    /// Rebuilds the table from its orbits in the [`LcfScheme::from_orbits`] layout.
    pub fn canonical(&self) -> LcfScheme {
        LcfScheme::from_orbits(self.r, self.s, &self.orbits())
    }
}

/// Whether `x -> x + r (mod n)` maps the edge set of `g` onto itself.
pub fn is_shift_invariant(g: &Graph, r: usize) -> bool {
    let n = g.order();
    g.edges().all(|(u, v)| g.has_edge((u + r) % n, (v + r) % n))
}
