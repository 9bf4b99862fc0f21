//! Orientations of labelled paths and cycles as packed symbol strings.
//!
//! Edge `i` joins vertices `i` and `i + 1` (mod `n` on a cycle). Symbol `i`
//! is stored most significant first, so numeric order on the packed word is
//! lexicographic order on the string. Oriented strings use one bit per edge
//! (`1` forward `i → i+1`, `0` backward); strings that may contain digons
//! use two bits (`01` forward, `10` backward, `11` digon).

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// A symbol of a cycle or path orientation string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeDir {
    Fwd,
    Bwd,
    Digon,
}

/// Packed orientation strings of the `n`-cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleSpace {
    n: usize,
    /// bits per symbol: 1 (oriented) or 2 (digons allowed)
    b: usize,
    mask: u64,
}

impl CycleSpace {
    pub fn new(n: usize, digons: bool) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall(n));
        }
        if n > 32 {
            return Err(Error::TooLarge(format!("cycle length {n} exceeds 32")));
        }
        let b = if digons { 2 } else { 1 };
        let width = b * n;
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        Ok(CycleSpace { n, b, mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn digons(&self) -> bool {
        self.b == 2
    }

    #[inline]
    fn shift(&self, i: usize) -> usize {
        self.b * (self.n - 1 - i)
    }

    #[inline]
    pub fn symbol(&self, w: u64, i: usize) -> EdgeDir {
        match (w >> self.shift(i)) & if self.b == 1 { 1 } else { 3 } {
            0 => EdgeDir::Bwd,
            1 => EdgeDir::Fwd,
            2 => EdgeDir::Bwd,
            _ if self.b == 1 => EdgeDir::Fwd,
            _ => EdgeDir::Digon,
        }
    }

    pub fn pack(&self, dirs: &[EdgeDir]) -> Result<u64> {
        if dirs.len() != self.n {
            return Err(Error::LengthMismatch { perm: dirs.len(), n: self.n });
        }
        let mut w = 0u64;
        for &d in dirs {
            let s = match (d, self.b) {
                (EdgeDir::Fwd, _) => 1,
                (EdgeDir::Bwd, 1) => 0,
                (EdgeDir::Bwd, _) => 2,
                (EdgeDir::Digon, 1) => return Err(Error::DigonViolation(0, 0)),
                (EdgeDir::Digon, _) => 3,
            };
            w = w << self.b | s;
        }
        Ok(w)
    }

    pub fn unpack(&self, w: u64) -> Vec<EdgeDir> {
        (0..self.n).map(|i| self.symbol(w, i)).collect()
    }

    /// The string seen after relabelling `v ↦ v − 1`.
    #[inline]
    pub fn rotate(&self, w: u64) -> u64 {
        ((w << self.b) | (w >> (self.b * (self.n - 1)))) & self.mask
    }

    /// The string seen after relabelling `v ↦ −v`: reversed, with forward
    /// and backward exchanged.
    #[inline]
    pub fn reflect(&self, w: u64) -> u64 {
        let r = w.reverse_bits() >> (64 - self.b * self.n);
        if self.b == 1 {
            !r & self.mask
        } else {
            // bit reversal already swaps 01 and 10 inside each symbol
            r
        }
    }

    #[inline]
    fn min_rotation(&self, mut w: u64) -> u64 {
        let mut best = w;
        for _ in 1..self.n {
            w = self.rotate(w);
            best = best.min(w);
        }
        best
    }

    /// Least string in the dihedral orbit: the class key of the orientation.
    #[inline]
    pub fn canonical(&self, w: u64) -> u64 {
        self.min_rotation(w).min(self.min_rotation(self.reflect(w)))
    }

    /// Switching at vertex `v` reverses edges `v − 1` and `v`.
    #[inline]
    pub fn switch(&self, w: u64, v: usize) -> u64 {
        let prev = (v + self.n - 1) % self.n;
        let mut w = w;
        for e in [prev, v] {
            let s = self.shift(e);
            if self.b == 1 {
                w ^= 1 << s;
            } else if (w >> s) & 3 != 3 {
                w ^= 3 << s;
            }
        }
        w
    }

    pub fn to_digraph(&self, w: u64) -> Digraph {
        let n = self.n;
        let mut arcs = Vec::with_capacity(2 * n);
        for i in 0..n {
            let j = (i + 1) % n;
            match self.symbol(w, i) {
                EdgeDir::Fwd => arcs.push((i, j)),
                EdgeDir::Bwd => arcs.push((j, i)),
                EdgeDir::Digon => {
                    arcs.push((i, j));
                    arcs.push((j, i));
                }
            }
        }
        Digraph::from_arcs(n, &arcs, self.b == 1).expect("cycle orientation")
    }

    /// The string of `g` if its arcs lie exactly on the labelled cycle
    /// `0, 1, …, n − 1`.
    pub fn from_digraph(&self, g: &Digraph) -> Option<u64> {
        let n = self.n;
        if g.n() != n || g.arc_count() > 2 * n {
            return None;
        }
        let mut dirs = Vec::with_capacity(n);
        let mut arcs = 0;
        for i in 0..n {
            let j = (i + 1) % n;
            let d = match (g.has_arc(i, j), g.has_arc(j, i)) {
                (true, false) => EdgeDir::Fwd,
                (false, true) => EdgeDir::Bwd,
                (true, true) => EdgeDir::Digon,
                (false, false) => return None,
            };
            arcs += if d == EdgeDir::Digon { 2 } else { 1 };
            dirs.push(d);
        }
        if arcs != g.arc_count() {
            return None;
        }
        self.pack(&dirs).ok()
    }

    /// One string per dihedral class, in increasing order.
    pub fn bracelets(&self) -> Bracelets {
        Bracelets::new(*self)
    }
}

/// Necklaces in lexicographic order (iterative Fredricksen–Kessler–Maiorana),
/// filtered to those that are also least under reflection.
pub struct Bracelets {
    space: CycleSpace,
    k: u8,
    a: Vec<u8>,
    started: bool,
    done: bool,
}

impl Bracelets {
    fn new(space: CycleSpace) -> Self {
        let k = if space.b == 1 { 2 } else { 3 };
        Bracelets { space, k, a: vec![0; space.n + 1], started: false, done: false }
    }

    fn word(&self) -> u64 {
        let sym = |x: u8| if self.space.b == 1 { x as u64 } else { x as u64 + 1 };
        self.a[1..].iter().fold(0u64, |w, &x| w << self.space.b | sym(x))
    }

    /// Advances to the next necklace; false when exhausted.
    fn advance(&mut self) -> bool {
        let n = self.space.n;
        loop {
            let mut i = n;
            while i > 0 && self.a[i] == self.k - 1 {
                i -= 1;
            }
            if i == 0 {
                return false;
            }
            self.a[i] += 1;
            for j in i + 1..=n {
                self.a[j] = self.a[j - i];
            }
            if n % i == 0 {
                return true;
            }
        }
    }
}

impl Iterator for Bracelets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        loop {
            if self.done {
                return None;
            }
            if !self.started {
                self.started = true;
            } else if !self.advance() {
                self.done = true;
                return None;
            }
            let w = self.word();
            if w <= self.space.min_rotation(self.space.reflect(w)) {
                return Some(w);
            }
        }
    }
}

/// Packed orientation strings of the path `0 − 1 − … − (n−1)`, one bit per
/// edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathSpace {
    n: usize,
    /// number of edges
    m: usize,
}

impl PathSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > 32 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(PathSpace { n, m: n - 1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Reversal `v ↦ n − 1 − v`: the string reversed and complemented.
    #[inline]
    pub fn reverse(&self, w: u64) -> u64 {
        if self.m == 0 {
            return 0;
        }
        !(w.reverse_bits() >> (64 - self.m)) & ((1u64 << self.m) - 1)
    }

    #[inline]
    pub fn canonical(&self, w: u64) -> u64 {
        w.min(self.reverse(w))
    }

    #[inline]
    pub fn switch(&self, w: u64, v: usize) -> u64 {
        let mut w = w;
        if v >= 1 {
            w ^= 1 << (self.m - v);
        }
        if v < self.m {
            w ^= 1 << (self.m - 1 - v);
        }
        w
    }

    pub fn to_digraph(&self, w: u64) -> Digraph {
        let arcs: Vec<_> = (0..self.m)
            .map(|i| if w >> (self.m - 1 - i) & 1 == 1 { (i, i + 1) } else { (i + 1, i) })
            .collect();
        Digraph::from_arcs(self.n, &arcs, true).expect("path orientation")
    }

    pub fn from_digraph(&self, g: &Digraph) -> Option<u64> {
        if g.n() != self.n || g.arc_count() != self.m || !g.is_oriented() {
            return None;
        }
        let mut w = 0u64;
        for i in 0..self.m {
            w <<= 1;
            if g.has_arc(i, i + 1) {
                w |= 1;
            } else if !g.has_arc(i + 1, i) {
                return None;
            }
        }
        Some(w)
    }

    /// One string per class (`w ≤ reverse(w)`), increasing.
    pub fn classes(&self) -> impl Iterator<Item = u64> + Send + '_ {
        let space = *self;
        (0..1u64 << self.m).filter(move |&w| w <= space.reverse(w))
    }
}
