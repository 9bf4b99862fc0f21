//! Full automorphism groups by refinement-pruned backtracking.

use super::search::{Colors, Refiner};
use crate::error::{Error, Result};
use crate::graph::{Digraph, Permutation, UnderlyingGraph, MAX_N};

/// Groups with more elements than this are refused with `TooLarge`.
pub const MAX_GROUP_ELEMENTS: usize = 1 << 20;

/// Largest order accepted by the enumerators.
const MAX_AUT_ORDER: usize = 16;

/// An explicitly listed permutation group. Elements are sorted by image
/// vector, so the identity comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Builds a group from a list that the caller asserts is closed.
    pub(crate) fn from_sorted(elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        AutGroup { elements }
    }

    /// Checks closure under composition and inverses.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.then(b)))
        })
    }
}

pub fn aut_group(g: &Digraph) -> Result<AutGroup> {
    let n = g.n();
    if n > MAX_AUT_ORDER {
        return Err(Error::TooLarge(format!("automorphism enumeration needs n <= {MAX_AUT_ORDER}, got {n}")));
    }
    let mut colors: Colors = [0; MAX_N];
    Refiner::new(g).refine(&mut colors, 1);
    let order = search_order(g);
    let inn = g.in_masks();
    let mut img = [usize::MAX; MAX_N];
    let mut used = 0u32;
    let mut out = Vec::new();
    extend(g, &inn, &colors, &order, 0, &mut img, &mut used, &mut out)?;
    out.sort();
    Ok(AutGroup { elements: out })
}

pub fn aut_group_undirected(u: &UnderlyingGraph) -> Result<AutGroup> {
    aut_group(&u.as_digraph())
}

/// Vertices in breadth-first order over the underlying graph, so each new
/// vertex is usually adjacent to an already placed one.
fn search_order(g: &Digraph) -> Vec<usize> {
    let n = g.n();
    let u = g.underlying();
    let mut seen = 0u32;
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen >> root & 1 == 1 {
            continue;
        }
        seen |= 1 << root;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let mut nb = u.adj_mask(order[i]) & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                order.push(w);
            }
            i += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Digraph,
    inn: &[u32; MAX_N],
    colors: &Colors,
    order: &[usize],
    depth: usize,
    img: &mut [usize; MAX_N],
    used: &mut u32,
    out: &mut Vec<Permutation>,
) -> Result<()> {
    let n = g.n();
    if depth == n {
        if out.len() >= MAX_GROUP_ELEMENTS {
            return Err(Error::TooLarge(format!("more than {MAX_GROUP_ELEMENTS} automorphisms")));
        }
        out.push(Permutation::from_images(&img[..n]).expect("bijection"));
        return Ok(());
    }
    let v = order[depth];
    for w in 0..n {
        if *used >> w & 1 == 1 || colors[w] != colors[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| {
            let y = img[x];
            g.has_arc(v, x) == g.has_arc(w, y) && (inn[v] >> x & 1) == (inn[w] >> y & 1)
        });
        if !consistent {
            continue;
        }
        img[v] = w;
        *used |= 1 << w;
        extend(g, inn, colors, order, depth + 1, img, used, out)?;
        *used &= !(1 << w);
    }
    img[v] = usize::MAX;
    Ok(())
}
