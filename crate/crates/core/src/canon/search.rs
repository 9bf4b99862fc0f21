//! Individualization-refinement search for the lexicographically least
//! relabelled adjacency matrix.
//!
//! Cells are refined by (out-count, in-count) into every current cell until
//! the ordered partition is equitable. The search individualizes vertices of
//! the first non-singleton cell, least vertex first, and prunes children that
//! an automorphism found so far (fixing the current prefix pointwise) maps
//! onto an already explored child.

use crate::graph::{Digraph, MAX_N};

pub(crate) type Colors = [u8; MAX_N];

pub(crate) struct Refiner<'a> {
    n: usize,
    out: &'a [u32; MAX_N],
    inn: [u32; MAX_N],
}

impl<'a> Refiner<'a> {
    pub(crate) fn new(g: &'a Digraph) -> Self {
        Refiner { n: g.n(), out: g.out_masks(), inn: g.in_masks() }
    }

    /// Refines `colors` (with `k` cells) to an equitable ordered partition and
    /// returns the new cell count.
    pub(crate) fn refine(&self, colors: &mut Colors, mut k: usize) -> usize {
        let n = self.n;
        loop {
            let mut cell_mask = [0u32; MAX_N];
            for v in 0..n {
                cell_mask[colors[v] as usize] |= 1 << v;
            }
            // signature: old color, then (out, in) counts into each cell
            let mut sigs: Vec<([u8; 2 * MAX_N + 1], u8)> = Vec::with_capacity(n);
            for v in 0..n {
                let mut s = [0u8; 2 * MAX_N + 1];
                s[0] = colors[v];
                for (c, &m) in cell_mask.iter().enumerate().take(k) {
                    s[1 + 2 * c] = (self.out[v] & m).count_ones() as u8;
                    s[2 + 2 * c] = (self.inn[v] & m).count_ones() as u8;
                }
                sigs.push((s, v as u8));
            }
            sigs.sort_unstable();
            let mut new_k = 0;
            for i in 0..n {
                if i > 0 && sigs[i].0 != sigs[i - 1].0 {
                    new_k += 1;
                }
                colors[sigs[i].1 as usize] = new_k as u8;
            }
            new_k += 1;
            if new_k == k {
                return k;
            }
            k = new_k;
        }
    }
}

/// Gives `v` its own cell immediately before the rest of its old cell.
fn individualize(colors: &Colors, n: usize, v: usize) -> Colors {
    let c = colors[v];
    let mut next = *colors;
    for (u, col) in next.iter_mut().enumerate().take(n) {
        if *col > c || (*col == c && u != v) {
            *col += 1;
        }
    }
    next
}

struct UnionFind {
    parent: [u8; MAX_N],
}

impl UnionFind {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; MAX_N];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u8;
        }
    }
}

pub(crate) struct CanonSearch<'a> {
    g: &'a Digraph,
    refiner: Refiner<'a>,
    best_rows: Vec<u32>,
    /// position -> vertex of the best leaf
    best_order: [u8; MAX_N],
    has_best: bool,
    generators: Vec<[u8; MAX_N]>,
    leaves: u64,
}

impl<'a> CanonSearch<'a> {
    pub(crate) fn new(g: &'a Digraph) -> Self {
        CanonSearch {
            g,
            refiner: Refiner::new(g),
            best_rows: Vec::new(),
            best_order: [0; MAX_N],
            has_best: false,
            generators: Vec::new(),
            leaves: 0,
        }
    }

    pub(crate) fn run(mut self) -> SearchResult {
        let colors = [0u8; MAX_N];
        let mut prefix = Vec::new();
        self.descend(colors, 1, &mut prefix);
        SearchResult {
            rows: self.best_rows,
            order: self.best_order,
            generators: self.generators,
            leaves: self.leaves,
        }
    }

    fn descend(&mut self, mut colors: Colors, k: usize, prefix: &mut Vec<usize>) {
        let n = self.g.n();
        let k = self.refiner.refine(&mut colors, k);
        if k == n {
            self.leaf(&colors);
            return;
        }
        let mut size = [0u8; MAX_N];
        for &c in colors.iter().take(n) {
            size[c as usize] += 1;
        }
        let target = (0..k).find(|&c| size[c] > 1).expect("non-discrete partition") as u8;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            explored.push(v);
            prefix.push(v);
            self.descend(individualize(&colors, n, v), k + 1, prefix);
            prefix.pop();
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.n();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for gen in &self.generators {
            if prefix.iter().all(|&p| gen[p] as usize == p) {
                any = true;
                for x in 0..n {
                    uf.union(x, gen[x] as usize);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == rv)
    }

    fn leaf(&mut self, colors: &Colors) {
        self.leaves += 1;
        let n = self.g.n();
        let mut order = [0u8; MAX_N];
        for v in 0..n {
            order[colors[v] as usize] = v as u8;
        }
        let rows = relabelled_rows(self.g, colors);
        if !self.has_best || rows < self.best_rows {
            self.best_rows = rows;
            self.best_order = order;
            self.has_best = true;
        } else if rows == self.best_rows {
            // vertex at position i in this leaf -> vertex at position i in the best
            let mut gen = [0u8; MAX_N];
            let mut identity = true;
            for v in 0..n {
                gen[v] = self.best_order[colors[v] as usize];
                identity &= gen[v] as usize == v;
            }
            if !identity {
                self.generators.push(gen);
            }
        }
    }
}

/// Rows of the adjacency matrix after relabelling `v ↦ pos[v]`; column `j`
/// sits at bit `n − 1 − j` so numeric order is lexicographic order.
pub(crate) fn relabelled_rows(g: &Digraph, pos: &Colors) -> Vec<u32> {
    let n = g.n();
    let mut rows = vec![0u32; n];
    for v in 0..n {
        let mut m = g.out_mask(v);
        let mut r = 0u32;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            r |= 1 << (n - 1 - pos[w] as usize);
        }
        rows[pos[v] as usize] = r;
    }
    rows
}

pub(crate) struct SearchResult {
    pub rows: Vec<u32>,
    pub order: [u8; MAX_N],
    pub generators: Vec<[u8; MAX_N]>,
    #[allow(dead_code)]
    pub leaves: u64,
}
