//! The lattice S(n,r) of padded strings.
//!
//! A string `i_r .. i_1 | j_1 .. j_{n-r}` records a subset of the symbol set
//! `{r~, .., 1~, 1-, .., (n-r)-}`: the tilde symbols present, written in
//! decreasing order and padded on the right with `0`, then the bar symbols
//! present, padded on the left with `0` and written in increasing index order.
//! Strings are compared position by position along the chain
//! `(n-r)- < .. < 1- < 0 < 1~ < .. < r~`.
//!
//! Internally a string is the pair of symbol bitmasks; the padded form is
//! derived when comparing or printing. The element index of a string inside
//! [`SnrLattice`] is `tilde_mask | bar_mask << r`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{blocks_of, RestrictedGrowthStrings};
use crate::poset::{Poset, Sip};

/// Largest `n` representable by the bitmask encoding of strings.
pub const MAX_STRING_N: usize = 63;

/// Default cap on `n` for materialising the dense order of S(n,r).
pub const DEFAULT_LATTICE_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnrParams {
    n: usize,
    r: usize,
}

impl SnrParams {
    pub fn new(n: usize, r: usize) -> Result<SnrParams> {
        if r < 1 || r > n || n > MAX_STRING_N {
            return Err(Error::InvalidParams { n, r });
        }
        Ok(SnrParams { n, r })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of bar symbols, `n - r`.
    #[inline]
    pub fn bars(&self) -> usize {
        self.n - self.r
    }

    /// `2^n`
    pub fn element_count(&self) -> usize {
        1usize << self.n
    }

    fn tilde_full(&self) -> u64 {
        low_bits(self.r)
    }

    fn bar_full(&self) -> u64 {
        low_bits(self.bars())
    }

    /// Digit form is legal when every symbol index fits one decimal digit.
    pub fn digit_form(&self) -> bool {
        self.r <= 9 && self.bars() <= 9
    }
}

fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// A symbol of `A(n,r)`: a tilde symbol, the padding zero, or a bar symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Tilde(usize),
    Zero,
    Bar(usize),
}

impl Symbol {
    /// Position in the chain; `Tilde(i) -> i`, `Zero -> 0`, `Bar(j) -> -j`.
    pub fn rank(self) -> i64 {
        match self {
            Symbol::Tilde(i) => i as i64,
            Symbol::Zero => 0,
            Symbol::Bar(j) => -(j as i64),
        }
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Tilde(i) => write!(f, "{i}~"),
            Symbol::Zero => f.write_str("0"),
            Symbol::Bar(j) => write!(f, "{j}-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnrString {
    params: SnrParams,
    tilde: u64,
    bar: u64,
}

impl SnrString {
    /// Builds a string from the sets of tilde and bar indices present (bit `k`
    /// stands for index `k + 1`).
    pub fn from_masks(params: SnrParams, tilde: u64, bar: u64) -> Result<SnrString> {
        if tilde & !params.tilde_full() != 0 || bar & !params.bar_full() != 0 {
            return Err(Error::InvalidSystem(format!(
                "masks {tilde:#b}|{bar:#b} out of range for S({}, {})",
                params.n, params.r
            )));
        }
        Ok(SnrString { params, tilde, bar })
    }

    /// The string with element index `index` (see module docs).
    pub fn from_index(params: SnrParams, index: usize) -> SnrString {
        assert!(index < params.element_count(), "index out of range");
        let index = index as u64;
        SnrString {
            params,
            tilde: index & params.tilde_full(),
            bar: index >> params.r,
        }
    }

    #[inline]
    pub fn index(&self) -> usize {
        (self.tilde | (self.bar << self.params.r)) as usize
    }

    #[inline]
    pub fn params(&self) -> SnrParams {
        self.params
    }

    pub fn tilde_mask(&self) -> u64 {
        self.tilde
    }

    pub fn bar_mask(&self) -> u64 {
        self.bar
    }

    /// `0..0|0..0`, the string of the empty subset.
    pub fn empty(params: SnrParams) -> SnrString {
        SnrString {
            params,
            tilde: 0,
            bar: 0,
        }
    }

    /// `r..21|12..(n-r)`, the string of all of `I(n,r)`.
    pub fn full(params: SnrParams) -> SnrString {
        SnrString {
            params,
            tilde: params.tilde_full(),
            bar: params.bar_full(),
        }
    }

    /// `xi_0` is the empty string and `xi_i = {i~}` for `1 <= i <= r`.
    pub fn xi(params: SnrParams, i: usize) -> Option<SnrString> {
        match i {
            0 => Some(Self::empty(params)),
            i if i <= params.r => Some(SnrString {
                params,
                tilde: 1 << (i - 1),
                bar: 0,
            }),
            _ => None,
        }
    }

    /// `eta_j = {j-}` for `1 <= j <= n - r`.
    pub fn eta(params: SnrParams, j: usize) -> Option<SnrString> {
        if j >= 1 && j <= params.bars() {
            Some(SnrString {
                params,
                tilde: 0,
                bar: 1 << (j - 1),
            })
        } else {
            None
        }
    }

    /// Number of symbols in the underlying subset.
    pub fn weight(&self) -> usize {
        (self.tilde.count_ones() + self.bar.count_ones()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.tilde == 0 && self.bar == 0
    }

    pub fn is_singleton(&self) -> bool {
        self.weight() == 1
    }

    /// Tilde indices present, high to low (the written order).
    pub fn tilde_indices(&self) -> Vec<usize> {
        (1..=self.params.r)
            .rev()
            .filter(|&i| self.tilde & (1 << (i - 1)) != 0)
            .collect()
    }

    /// Bar indices present, low to high (the written order).
    pub fn bar_indices(&self) -> Vec<usize> {
        (1..=self.params.bars())
            .filter(|&j| self.bar & (1 << (j - 1)) != 0)
            .collect()
    }

    /// The padded `n`-string as symbols.
    pub fn padded(&self) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.params.n);
        let tildes = self.tilde_indices();
        out.extend(tildes.iter().map(|&i| Symbol::Tilde(i)));
        out.extend(core::iter::repeat_n(
            Symbol::Zero,
            self.params.r - tildes.len(),
        ));
        let bars = self.bar_indices();
        out.extend(core::iter::repeat_n(
            Symbol::Zero,
            self.params.bars() - bars.len(),
        ));
        out.extend(bars.iter().map(|&j| Symbol::Bar(j)));
        out
    }

    fn padded_ranks(&self) -> Vec<i64> {
        self.padded().into_iter().map(Symbol::rank).collect()
    }

    /// Componentwise comparison of padded forms along the symbol chain.
    pub fn leq(&self, other: &SnrString) -> bool {
        debug_assert_eq!(self.params, other.params);
        self.padded_ranks()
            .iter()
            .zip(other.padded_ranks())
            .all(|(a, b)| *a <= b)
    }

    pub fn complement(&self) -> SnrString {
        SnrString {
            params: self.params,
            tilde: !self.tilde & self.params.tilde_full(),
            bar: !self.bar & self.params.bar_full(),
        }
    }

    /// The subset `w*` of `I(n,r)`, listed in chain order (lowest first).
    pub fn star(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self
            .bar_indices()
            .into_iter()
            .rev()
            .map(Symbol::Bar)
            .collect();
        let mut tildes = self.tilde_indices();
        tildes.reverse();
        out.extend(tildes.into_iter().map(Symbol::Tilde));
        out
    }

    /// Inverse of [`SnrString::star`].
    pub fn unstar<I>(params: SnrParams, symbols: I) -> Result<SnrString>
    where
        I: IntoIterator<Item = Symbol>,
    {
        let mut tilde = 0u64;
        let mut bar = 0u64;
        for s in symbols {
            match s {
                Symbol::Tilde(i) if (1..=params.r).contains(&i) => tilde |= 1 << (i - 1),
                Symbol::Bar(j) if (1..=params.bars()).contains(&j) => bar |= 1 << (j - 1),
                other => {
                    return Err(Error::InvalidSystem(format!(
                        "symbol {other} is not in I({}, {})",
                        params.n, params.r
                    )))
                }
            }
        }
        Ok(SnrString { params, tilde, bar })
    }

    /// Disjoint union of the underlying subsets.
    pub fn union(&self, other: &SnrString) -> SnrString {
        SnrString {
            params: self.params,
            tilde: self.tilde | other.tilde,
            bar: self.bar | other.bar,
        }
    }

    pub fn is_disjoint(&self, other: &SnrString) -> bool {
        self.tilde & other.tilde == 0 && self.bar & other.bar == 0
    }

    /// Every partition `w : w_1 ~ .. ~ w_k` in restricted-growth order over
    /// `star(w)` sorted along the chain. The empty string has none.
    pub fn partitions(&self) -> impl Iterator<Item = Vec<SnrString>> + '_ {
        let symbols = self.star();
        let params = self.params;
        RestrictedGrowthStrings::new(symbols.len()).map(move |rgs| {
            blocks_of(&rgs, &symbols)
                .into_iter()
                .map(|block| SnrString::unstar(params, block).expect("symbols come from star"))
                .collect()
        })
    }

    /// Parses digit form (`4310|001`) or dot-separated token form
    /// (`10.4.3.1.0|0.0.1`).
    pub fn parse(text: &str, params: SnrParams) -> Result<SnrString> {
        let text = text.trim();
        let bar_pos = text
            .find('|')
            .ok_or_else(|| parse_err(text.len(), "missing '|'"))?;
        if text[bar_pos + 1..].contains('|') {
            return Err(parse_err(
                bar_pos + 1 + text[bar_pos + 1..].find('|').unwrap(),
                "second '|'",
            ));
        }
        let left = read_slots(&text[..bar_pos], 0, params.r)?;
        let right = read_slots(&text[bar_pos + 1..], bar_pos + 1, params.bars())?;

        let mut tilde = 0u64;
        let mut seen_zero = false;
        let mut previous = usize::MAX;
        for &(value, pos) in &left {
            if value == 0 {
                seen_zero = true;
                continue;
            }
            if seen_zero {
                return Err(parse_err(pos, "tilde symbol after padding zero"));
            }
            if value > params.r {
                return Err(parse_err(pos, "tilde index exceeds r"));
            }
            if value >= previous {
                return Err(parse_err(pos, "left part not strictly decreasing"));
            }
            previous = value;
            tilde |= 1 << (value - 1);
        }

        let mut bar = 0u64;
        let mut previous = 0usize;
        for &(value, pos) in &right {
            if value == 0 {
                if previous != 0 {
                    return Err(parse_err(pos, "padding zero after bar symbol"));
                }
                continue;
            }
            if value > params.bars() {
                return Err(parse_err(pos, "bar index exceeds n - r"));
            }
            if value <= previous {
                return Err(parse_err(pos, "right part not strictly increasing"));
            }
            previous = value;
            bar |= 1 << (value - 1);
        }
        Ok(SnrString { params, tilde, bar })
    }

    /// Digit form when legal, token form otherwise.
    pub fn format(&self) -> String {
        let ranks = self.padded();
        let digits = |s: &Symbol| match s {
            Symbol::Tilde(i) | Symbol::Bar(i) => i.to_string(),
            Symbol::Zero => "0".to_string(),
        };
        let sep = if self.params.digit_form() { "" } else { "." };
        let left: Vec<String> = ranks[..self.params.r].iter().map(digits).collect();
        let right: Vec<String> = ranks[self.params.r..].iter().map(digits).collect();
        format!("{}|{}", left.join(sep), right.join(sep))
    }
}

fn parse_err(position: usize, message: &str) -> Error {
    Error::Parse {
        position,
        message: message.to_string(),
    }
}

/// Reads the values in one side of the bar, with their byte positions.
fn read_slots(part: &str, offset: usize, slots: usize) -> Result<Vec<(usize, usize)>> {
    let tokens: Vec<(usize, &str)> = if part.contains('.') || (slots == 1 && part.len() > 1) {
        let mut pos = offset;
        part.split('.')
            .map(|tok| {
                let start = pos;
                pos += tok.len() + 1;
                (start, tok)
            })
            .collect()
    } else {
        part.char_indices()
            .map(|(i, c)| (offset + i, &part[i..i + c.len_utf8()]))
            .collect()
    };
    if tokens.len() != slots {
        return Err(parse_err(
            offset,
            &format!("expected {slots} symbols, found {}", tokens.len()),
        ));
    }
    tokens
        .into_iter()
        .map(|(pos, tok)| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(pos, "expected a digit"));
            }
            tok.parse::<usize>()
                .map(|v| (v, pos))
                .map_err(|_| parse_err(pos, "number too large"))
        })
        .collect()
}

impl fmt::Display for SnrString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

/// S(n,r) with its order and complement materialised as a [`Sip`].
#[derive(Debug, Clone)]
pub struct SnrLattice {
    params: SnrParams,
    sip: Sip,
}

impl SnrLattice {
    pub fn build(params: SnrParams) -> Result<SnrLattice> {
        Self::build_with_cap(params, DEFAULT_LATTICE_CAP)
    }

    pub fn build_with_cap(params: SnrParams, max_n: usize) -> Result<SnrLattice> {
        if params.n > max_n {
            return Err(Error::CapExceeded {
                what: "n",
                value: params.n,
                cap: max_n,
            });
        }
        let count = params.element_count();
        let padded: Vec<Vec<i64>> = (0..count)
            .map(|i| SnrString::from_index(params, i).padded_ranks())
            .collect();
        let poset = Poset::from_relation_unchecked(count, |a, b| {
            padded[a].iter().zip(&padded[b]).all(|(x, y)| x <= y)
        });
        let complement = (0..count)
            .map(|i| SnrString::from_index(params, i).complement().index())
            .collect();
        let sip = Sip::new(poset, complement)?;
        Ok(SnrLattice { params, sip })
    }

    pub fn params(&self) -> SnrParams {
        self.params
    }

    pub fn sip(&self) -> &Sip {
        &self.sip
    }

    pub fn poset(&self) -> &Poset {
        &self.sip.poset
    }

    pub fn len(&self) -> usize {
        self.sip.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sip.is_empty()
    }

    pub fn string(&self, index: usize) -> SnrString {
        SnrString::from_index(self.params, index)
    }

    pub fn index_of(&self, w: &SnrString) -> usize {
        debug_assert_eq!(w.params, self.params);
        w.index()
    }

    pub fn strings(&self) -> impl Iterator<Item = SnrString> + '_ {
        (0..self.len()).map(|i| self.string(i))
    }

    pub fn leq(&self, a: &SnrString, b: &SnrString) -> bool {
        self.sip.poset.leq(a.index(), b.index())
    }

    pub fn full_index(&self) -> usize {
        SnrString::full(self.params).index()
    }

    /// Indices of `xi_0 .. xi_r`.
    pub fn xi_indices(&self) -> Vec<usize> {
        (0..=self.params.r)
            .map(|i| SnrString::xi(self.params, i).unwrap().index())
            .collect()
    }

    /// Indices of `eta_1 .. eta_{n-r}`.
    pub fn eta_indices(&self) -> Vec<usize> {
        (1..=self.params.bars())
            .map(|j| SnrString::eta(self.params, j).unwrap().index())
            .collect()
    }

    /// Strings that may appear as rows of a system: not empty, not singletons.
    pub fn is_admissible(&self, index: usize) -> bool {
        let w = self.string(index);
        !w.is_empty() && !w.is_singleton()
    }
}

/// Strings of S(n,r) in lexicographic order of their text form.
pub fn sorted_by_text(mut strings: Vec<SnrString>) -> Vec<SnrString> {
    strings.sort_by_cached_key(|w| w.format());
    strings
}

/// `0..0|12..(n-r)`
pub fn minimum(params: SnrParams) -> SnrString {
    SnrString::from_masks(params, 0, params.bar_full()).unwrap()
}

/// `r..21|0..0`
pub fn maximum(params: SnrParams) -> SnrString {
    SnrString::from_masks(params, params.tilde_full(), 0).unwrap()
}
