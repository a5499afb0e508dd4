//! Proper colouring of symmetric digraphs (graphs).

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::limits::{Limits, Meter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticResult {
    pub k: usize,
    /// Colour of every vertex, in `0..k`.
    pub colouring: Vec<usize>,
}

/// Minimum number of colours such that no edge joins two vertices of the same
/// colour. Fails with [`Error::NotAGraph`] on asymmetric adjacency.
pub fn chromatic_number(g: &Digraph, limits: &Limits) -> Result<ChromaticResult> {
    if let Some((u, v)) = g.asymmetric_edge() {
        return Err(Error::NotAGraph(u, v));
    }
    let n = g.n();
    if n == 0 {
        return Ok(ChromaticResult { k: 0, colouring: Vec::new() });
    }
    // Static order: decreasing degree, ties by id.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut meter = Meter::new("chromatic search", limits.chrom_nodes);
    for k in 1..=n {
        let mut colour = vec![usize::MAX; n];
        if colour_rec(g, &order, 0, k, 0, &mut colour, &mut meter)? {
            return Ok(ChromaticResult { k, colouring: colour });
        }
    }
    unreachable!("n colours always suffice")
}

fn colour_rec(
    g: &Digraph,
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colour: &mut [usize],
    meter: &mut Meter,
) -> Result<bool> {
    if depth == order.len() {
        return Ok(true);
    }
    let v = order[depth];
    for c in 0..(used + 1).min(k) {
        meter.tick()?;
        if g.out_neighbors(v).ones().any(|u| colour[u] == c) {
            continue;
        }
        colour[v] = c;
        if colour_rec(g, order, depth + 1, k, used.max(c + 1), colour, meter)? {
            return Ok(true);
        }
        colour[v] = usize::MAX;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_cycle(n: usize) -> Digraph {
        let mut e = Vec::new();
        for i in 0..n {
            e.push((i, (i + 1) % n));
            e.push(((i + 1) % n, i));
        }
        Digraph::new(n, &e).unwrap()
    }

    #[test]
    fn examples() {
        let lim = Limits::default();
        assert_eq!(chromatic_number(&Digraph::empty(4), &lim).unwrap().k, 1);
        assert_eq!(chromatic_number(&Digraph::bidirected_complete(3), &lim).unwrap().k, 3);
        assert_eq!(chromatic_number(&sym_cycle(5), &lim).unwrap().k, 3);
        assert_eq!(chromatic_number(&sym_cycle(6), &lim).unwrap().k, 2);
    }

    #[test]
    fn asymmetric_rejected() {
        assert_eq!(
            chromatic_number(&Digraph::directed_cycle(3), &Limits::default()),
            Err(Error::NotAGraph(0, 1))
        );
    }

    #[test]
    fn colouring_is_proper() {
        let g = sym_cycle(7);
        let r = chromatic_number(&g, &Limits::default()).unwrap();
        for (u, v) in g.edges() {
            assert_ne!(r.colouring[u], r.colouring[v]);
        }
    }
}
