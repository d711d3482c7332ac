//! Canonical codes for small graphs: the lexicographically least
//! column-major upper-triangle bit string over all vertex orderings, found by
//! branch and bound over partial orderings.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const CANONICAL_MAX_VERTICES: usize = 10;

/// Byte string equal for two graphs iff they are isomorphic.
///
/// Layout: `[n, packed bits...]`, bits MSB first in column-major pair order,
/// so byte order agrees with bit-string order.
pub fn canonical_code(g: &Graph) -> Result<Vec<u8>> {
    let order = canonical_order(g)?;
    Ok(encode(&g.induced_by_order(&order)))
}

/// The relabelling of `g` whose code is canonical.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    Ok(g.induced_by_order(&order))
}

fn encode(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    let n = g.n();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::SizeCap {
            what: "canonical_code",
            n,
            max: CANONICAL_MAX_VERTICES,
        });
    }
    let mut search = Search {
        g,
        best: None,
        current: Vec::with_capacity(n),
        bits: Vec::with_capacity(n * n / 2),
    };
    search.run(VertexSet::full(n));
    Ok(search.best.map(|(order, _)| order).unwrap_or_default())
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<usize>, Vec<bool>)>,
    current: Vec<usize>,
    bits: Vec<bool>,
}

impl Search<'_> {
    /// Placing vertex `v` at position `j` fixes the column `(0,j)..(j-1,j)`,
    /// so every prefix of positions fixes a prefix of the bit string.
    fn run(&mut self, remaining: VertexSet) {
        if remaining.is_empty() {
            if self.best.as_ref().is_none_or(|(_, b)| self.bits < *b) {
                self.best = Some((self.current.clone(), self.bits.clone()));
            }
            return;
        }
        let mut tried = VertexSet::EMPTY;
        for v in remaining {
            // swapping two unplaced twins is an automorphism fixing the prefix
            if tried.iter().any(|u| self.twins(u, v)) {
                continue;
            }
            tried.insert(v);
            let mark = self.bits.len();
            for &u in &self.current {
                self.bits.push(self.g.has_edge(u, v));
            }
            if self.prefix_can_win() {
                self.current.push(v);
                self.run(remaining.without(v));
                self.current.pop();
            }
            self.bits.truncate(mark);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let pair = VertexSet::singleton(u).with(v);
        self.g.neighbours(u) - pair == self.g.neighbours(v) - pair
    }

    fn prefix_can_win(&self) -> bool {
        match &self.best {
            None => true,
            Some((_, best)) => self.bits[..] <= best[..self.bits.len()],
        }
    }
}
