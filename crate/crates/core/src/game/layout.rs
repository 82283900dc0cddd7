use crate::{Error, Profile, Result};

/// Mixed-radix indexing of `J^n`: profile `x` sits at `Σ x_i · j^(n-i)`,
/// player 1 being the most significant digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    n: usize,
    j: u32,
    strides: Vec<usize>,
    len: usize,
}

impl Layout {
    /// Fails with `CapExceeded` when `j^n > cap`.
    pub fn new(n: usize, j: u32, cap: usize) -> Result<Self> {
        let too_big = || Error::CapExceeded {
            size: format!("{j}^{n}"),
            cap,
        };
        let len = (j as usize)
            .checked_pow(u32::try_from(n).map_err(|_| too_big())?)
            .filter(|&len| len <= cap)
            .ok_or_else(too_big)?;
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * j as usize;
        }
        Ok(Layout { n, j, strides, len })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    /// Number of profiles, `j^n`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn stride(&self, i: usize) -> usize {
        self.strides[i]
    }

    /// Level of the 0-based position `i` in the profile at `index`.
    #[inline]
    pub fn digit(&self, index: usize, i: usize) -> u32 {
        ((index / self.strides[i]) % self.j as usize) as u32
    }

    /// Index of `x↓i`, if position `i` is nonzero.
    #[inline]
    pub fn down(&self, index: usize, i: usize) -> Option<usize> {
        (self.digit(index, i) > 0).then(|| index - self.strides[i])
    }

    /// Index of `x↑i`, if position `i` is below the top level.
    #[inline]
    pub fn up(&self, index: usize, i: usize) -> Option<usize> {
        (self.digit(index, i) + 1 < self.j).then(|| index + self.strides[i])
    }

    pub fn profile(&self, index: usize) -> Profile {
        Profile::new((0..self.n).map(|i| self.digit(index, i)).collect())
    }

    pub fn index(&self, x: &Profile) -> Result<usize> {
        if x.len() != self.n {
            return Err(Error::ProfileDimensionMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let mut index = 0;
        for (i, &level) in x.iter().enumerate() {
            if level >= self.j {
                return Err(Error::LevelOutOfRange {
                    level,
                    max: self.j - 1,
                });
            }
            index += level as usize * self.strides[i];
        }
        Ok(index)
    }

    /// Bitmask (bit `i` for position `i`) of the nonzero positions.
    pub fn support_mask(&self, index: usize) -> u32 {
        (0..self.n)
            .filter(|&i| self.digit(index, i) != 0)
            .fold(0, |mask, i| mask | (1 << i))
    }
}
