use serde::Serialize;

use crate::graph::{Bipartition, Graph, VertexSet};
use crate::parameters::similarity_partition;

/// Ordered pairs `(x_i, y_i)` with `x_i ~ y_i` and `y_i` not adjacent to
/// `x_j` for `i < j`; when `complemented`, the same in the complement of the
/// cross relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewMatching {
    pub pairs: Vec<(usize, usize)>,
    pub complemented: bool,
}

impl SkewMatching {
    pub fn verify(&self, g: &Graph) -> bool {
        let used: VertexSet = self.pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
        if used.len() != 2 * self.pairs.len() {
            return false;
        }
        let adj = |u: usize, v: usize| g.has_edge(u, v) != self.complemented;
        self.pairs.iter().enumerate().all(|(i, &(xi, yi))| {
            adj(xi, yi) && self.pairs[i + 1..].iter().all(|&(xj, _)| !adj(yi, xj))
        })
    }
}

/// One step of the big/small procedure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewRound {
    pub x: usize,
    pub y: usize,
    pub big: bool,
}

/// Runs up to `max_rounds` rounds on the pairwise distinguishable set `d`,
/// taking distinguishers from `others`.
///
/// Each round takes the least `y` in `others` with both a neighbour and a
/// non-neighbour in `D`. `y` is big if it has more neighbours than
/// non-neighbours in `D`. A small `y` pairs with its least neighbour and
/// `D` loses `N(y)`; a big `y` pairs with its least non-neighbour and `D`
/// shrinks to `D ∩ N(y)`. Stops early when nothing distinguishes `D`.
pub fn skew_rounds(g: &Graph, mut d: VertexSet, others: VertexSet, max_rounds: usize) -> Vec<SkewRound> {
    let mut rounds = Vec::new();
    let mut pool = others;
    while rounds.len() < max_rounds {
        let Some(y) = pool.iter().find(|&y| {
            let inside = g.neighbours(y) & d;
            !inside.is_empty() && inside != d
        }) else {
            break;
        };
        pool.remove(y);
        let inside = g.neighbours(y) & d;
        let big = inside.len() > d.len() - inside.len();
        let x = if big { (d - inside).first() } else { inside.first() }.expect("y distinguishes D");
        d = if big { inside } else { d - inside };
        rounds.push(SkewRound { x, y, big });
    }
    rounds
}

/// The part with more distinct neighbourhoods (part A on ties), one least
/// vertex per neighbourhood, and the other part.
pub(crate) fn distinguishable_side(bp: &Bipartition) -> (VertexSet, VertexSet) {
    let reps = similarity_partition(bp.graph()).representatives();
    let (ra, rb) = (reps & bp.part_a(), reps & bp.part_b());
    if rb.len() > ra.len() { (rb, bp.part_a()) } else { (ra, bp.part_b()) }
}

/// A skew matching of size `m` or its complement, after `2m - 1` rounds,
/// preferring the skew matching.
pub fn find_skew_matching(bp: &Bipartition, m: usize) -> Result<SkewMatching, String> {
    if m == 0 {
        return Ok(SkewMatching { pairs: Vec::new(), complemented: false });
    }
    let (d, others) = distinguishable_side(bp);
    let rounds = skew_rounds(bp.graph(), d, others, 2 * m - 1);
    if rounds.len() < 2 * m - 1 {
        return Err(format!(
            "distinguishing set exhausted after {} of {} rounds (|D| = {})",
            rounds.len(),
            2 * m - 1,
            d.len()
        ));
    }
    let small: Vec<(usize, usize)> = rounds.iter().filter(|r| !r.big).map(|r| (r.x, r.y)).collect();
    let big: Vec<(usize, usize)> = rounds.iter().filter(|r| r.big).map(|r| (r.x, r.y)).collect();
    Ok(if small.len() >= m {
        SkewMatching { pairs: small[..m].to_vec(), complemented: false }
    } else {
        SkewMatching { pairs: big[..m].to_vec(), complemented: true }
    })
}
