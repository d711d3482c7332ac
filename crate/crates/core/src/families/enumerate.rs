//! Enumeration of the members of a hereditary class by one-vertex extension:
//! every member on `n` vertices restricts to a member on its first `n - 1`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_code, Graph, VertexSet, CANONICAL_MAX_VERTICES};

/// Appends vertex `g.n()` adjacent to `nb`.
pub(crate) fn extend(g: &Graph, nb: VertexSet) -> Graph {
    let n = g.n();
    let mut rows: Vec<u64> = g.rows().to_vec();
    for v in nb {
        rows[v] |= 1 << n;
    }
    rows.push(nb.bits());
    Graph::from_rows(rows).expect("extension of a valid graph")
}

/// One representative per isomorphism class of `n`-vertex members, sorted by
/// canonical code. `member` must describe a hereditary class.
pub fn members_up_to_iso<P>(member: P, n: usize) -> Result<Vec<Graph>>
where
    P: Fn(&Graph) -> bool + Sync,
{
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::SizeCap { what: "isomorphism-class enumeration", n, max: CANONICAL_MAX_VERTICES });
    }
    let mut level: Vec<Graph> = Vec::new();
    let empty = Graph::empty(0)?;
    if member(&empty) {
        level.push(empty);
    }
    for k in 0..n {
        let found: Vec<(Vec<u8>, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (0..1u64 << k).filter_map(|s| {
                    let h = extend(g, VertexSet::from_bits(s));
                    member(&h).then(|| (canonical_code(&h).expect("within cap"), h))
                })
            })
            .collect();
        let mut classes = BTreeMap::new();
        for (code, h) in found {
            classes.entry(code).or_insert(h);
        }
        level = classes.into_values().collect();
    }
    Ok(level)
}

/// Number of labelled members on vertex set `{0, ..., n-1}`.
pub fn count_members_labelled<P>(member: P, n: usize) -> u128
where
    P: Fn(&Graph) -> bool + Sync,
{
    fn dfs<P: Fn(&Graph) -> bool>(member: &P, g: &Graph, n: usize) -> u128 {
        if g.n() == n {
            return 1;
        }
        (0..1u64 << g.n())
            .map(|s| extend(g, VertexSet::from_bits(s)))
            .filter(|h| member(h))
            .map(|h| dfs(member, &h, n))
            .sum()
    }
    let empty = Graph::empty(0).expect("order 0");
    if !member(&empty) {
        return 0;
    }
    // expand a few levels serially, then fan out
    let split = n.min(4);
    let mut frontier = vec![empty];
    for _ in 0..split {
        frontier = frontier
            .iter()
            .flat_map(|g| (0..1u64 << g.n()).map(move |s| extend(g, VertexSet::from_bits(s))))
            .filter(|h| member(h))
            .collect();
    }
    frontier.par_iter().map(|g| dfs(&member, g, n)).sum()
}
