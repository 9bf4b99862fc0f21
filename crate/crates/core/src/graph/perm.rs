use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..n`, acting on vertices from the right: `v^γ = γ[v]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n as u8).collect() }
    }

    pub fn from_images(image: &[usize]) -> Result<Self> {
        let n = image.len();
        let mut seen = 0u64;
        for &x in image {
            if x >= n || x >= 64 || seen >> x & 1 == 1 {
                return Err(Error::NotAPermutation(image.to_vec()));
            }
            seen |= 1 << x;
        }
        Ok(Permutation { image: image.iter().map(|&x| x as u8).collect() })
    }

    /// Rotation `v ↦ v + r (mod n)`.
    pub fn rotation(n: usize, r: usize) -> Self {
        Permutation { image: (0..n).map(|v| ((v + r) % n) as u8).collect() }
    }

    /// Reflection `v ↦ c − v (mod n)`.
    pub fn reflection(n: usize, c: usize) -> Self {
        Permutation { image: (0..n).map(|v| ((c + n - v % n) % n) as u8).collect() }
    }

    /// The transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.image.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v] as usize
    }

    /// Image of a vertex bit set.
    #[inline]
    pub fn apply_mask(&self, mut mask: u32) -> u32 {
        let mut out = 0;
        while mask != 0 {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            out |= 1 << self.image[v];
        }
        out
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.image.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self · other`, i.e. first `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation { image: self.image.iter().map(|&x| other.image[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { image: inv }
    }

    pub fn fixes(&self, v: usize) -> bool {
        self.image[v] as usize == v
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.image)
    }
}
