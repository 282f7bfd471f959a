//! Finite, serializable total orders on integer windows.
//!
//! Segment generation never inspects an order outside a bounded window,
//! so a handful of finite spec variants covers every construction:
//! the natural order, the below-axis "waterline" family, and explicit
//! permutations of a window. Explicit specs hard-error when queried
//! outside their window instead of guessing an extension.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

/// A non-empty integer interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::EmptyRow {
                end_sum: hi,
                base_sum: lo,
            });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn len(&self) -> Result<usize> {
        let len = self.hi as i128 - self.lo as i128 + 1;
        usize::try_from(len).map_err(|_| Error::WindowTooLarge {
            lo: self.lo,
            hi: self.hi,
        })
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: i64) -> bool {
        v >= self.lo && v <= self.hi
    }

    pub fn values(&self) -> core::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

/// A finite description of a total order on the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    /// The natural ascending order on all of `Z`.
    Natural,
    /// The below-axis order: values `>= anchor_x` ascending first, then
    /// values `< anchor_x` descending, i.e.
    /// `a  <  a+1  <  ...  <  +inf  <  a-1  <  a-2  <  ...`.
    WaterlineBelow { anchor_x: i64 },
    /// An arbitrary permutation of `[lo, hi]`, listed smallest-first.
    /// Comparisons outside the window are an error.
    ExplicitWindow {
        lo: i64,
        hi: i64,
        ascending: Vec<i64>,
    },
}

impl OrderSpec {
    /// Builds an explicit spec, checking that `ascending` is a
    /// permutation of `lo..=hi`.
    pub fn explicit(lo: i64, hi: i64, ascending: Vec<i64>) -> Result<Self> {
        let len = Window::new(lo, hi)?.len()?;
        if ascending.len() != len {
            return Err(Error::NotPermutation);
        }
        let mut seen = BTreeSet::new();
        for &v in &ascending {
            if v < lo || v > hi || !seen.insert(v) {
                return Err(Error::NotPermutation);
            }
        }
        Ok(OrderSpec::ExplicitWindow { lo, hi, ascending })
    }

    fn waterline_key(anchor: i64, v: i64) -> (bool, i128) {
        if v >= anchor {
            (false, v as i128 - anchor as i128)
        } else {
            (true, anchor as i128 - v as i128)
        }
    }

    /// Compares two integers under the order. Strict and total on the
    /// spec's domain; `Equal` iff `a == b`.
    pub fn compare(&self, a: i64, b: i64) -> Result<Ordering> {
        match self {
            OrderSpec::Natural => Ok(a.cmp(&b)),
            OrderSpec::WaterlineBelow { anchor_x } => {
                Ok(Self::waterline_key(*anchor_x, a).cmp(&Self::waterline_key(*anchor_x, b)))
            }
            OrderSpec::ExplicitWindow { lo, hi, ascending } => {
                let pos = |v: i64| -> Result<usize> {
                    if v < *lo || v > *hi {
                        return Err(Error::OutsideWindow {
                            value: v,
                            lo: *lo,
                            hi: *hi,
                        });
                    }
                    // windows are short; a linear probe beats building maps
                    Ok(ascending
                        .iter()
                        .position(|&w| w == v)
                        .expect("permutation covers window"))
                };
                Ok(pos(a)?.cmp(&pos(b)?))
            }
        }
    }

    /// The values of `w` listed ascending under this order.
    pub fn sorted_window(&self, w: Window) -> Result<Vec<i64>> {
        w.len()?; // reject windows that cannot materialize
        match self {
            OrderSpec::Natural => Ok(w.values().collect()),
            OrderSpec::WaterlineBelow { anchor_x } => {
                let a = *anchor_x;
                let mut out: Vec<i64> = w.values().filter(|&v| v >= a).collect();
                out.extend(w.values().filter(|&v| v < a).rev());
                Ok(out)
            }
            OrderSpec::ExplicitWindow { lo, hi, ascending } => {
                if w.lo() < *lo || w.hi() > *hi {
                    let outside = if w.lo() < *lo { w.lo() } else { w.hi() };
                    return Err(Error::OutsideWindow {
                        value: outside,
                        lo: *lo,
                        hi: *hi,
                    });
                }
                Ok(ascending
                    .iter()
                    .copied()
                    .filter(|v| w.contains(*v))
                    .collect())
            }
        }
    }

    /// Splits `w` into the `vertical_count` greatest values under this
    /// order and the remaining (smaller) values.
    ///
    /// Returns `(horizontal, vertical)`: the first-quadrant walk moves
    /// right on the horizontal set and up on the vertical set.
    pub fn partition_window(
        &self,
        w: Window,
        vertical_count: usize,
    ) -> Result<(BTreeSet<i64>, BTreeSet<i64>)> {
        let sorted = self.sorted_window(w)?;
        if vertical_count > sorted.len() {
            return Err(Error::PartitionOverflow {
                requested: vertical_count,
                available: sorted.len(),
            });
        }
        let split = sorted.len() - vertical_count;
        let horizontal: BTreeSet<i64> = sorted[..split].iter().copied().collect();
        let vertical: BTreeSet<i64> = sorted[split..].iter().copied().collect();
        Ok((horizontal, vertical))
    }
}
