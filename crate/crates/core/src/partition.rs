//! Set partitions enumerated as restricted growth strings.
//!
//! A restricted growth string `a` of length `m` satisfies `a[0] = 0` and
//! `a[i] <= 1 + max(a[..i])`; block `b` of the partition collects every `i`
//! with `a[i] = b`. Strings are produced in lexicographic order.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone)]
pub struct RestrictedGrowthStrings {
    current: Vec<usize>,
    // prefix maxima: maxima[i] = max(current[..=i])
    maxima: Vec<usize>,
    done: bool,
}

impl RestrictedGrowthStrings {
    /// All set partitions of an `m`-element set; none when `m == 0`.
    pub fn new(m: usize) -> Self {
        RestrictedGrowthStrings {
            current: vec![0; m],
            maxima: vec![0; m],
            done: m == 0,
        }
    }

    fn advance(&mut self) {
        let m = self.current.len();
        let mut i = m;
        while i > 1 {
            i -= 1;
            if self.current[i] <= self.maxima[i - 1] {
                self.current[i] += 1;
                self.maxima[i] = self.maxima[i - 1].max(self.current[i]);
                for j in i + 1..m {
                    self.current[j] = 0;
                    self.maxima[j] = self.maxima[i];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for RestrictedGrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// Groups `items` into blocks according to a restricted growth string.
pub fn blocks_of<T: Clone>(rgs: &[usize], items: &[T]) -> Vec<Vec<T>> {
    let count = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut blocks: Vec<Vec<T>> = vec![Vec::new(); count];
    for (item, &b) in items.iter().zip(rgs) {
        blocks[b].push(item.clone());
    }
    blocks
}
