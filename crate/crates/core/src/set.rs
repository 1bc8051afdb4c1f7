use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported order; subsets fit in a single `u64`.
pub const MAX_ORDER: usize = 64;

/// A subset of the elements `1..=n` of a table, stored as a bit mask.
///
/// Bit `i` stands for element `i + 1`. Every public method speaks in
/// 1-based element numbers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    /// Every element of a table of order `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == MAX_ORDER {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&x));
        ElementSet(1u64 << (x - 1))
    }

    /// Builds a set from 1-based element numbers. Panics on 0 or values above 64.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut bits = 0u64;
        for x in elements {
            assert!((1..=MAX_ORDER).contains(&x), "element {x} out of range");
            bits |= 1u64 << (x - 1);
        }
        ElementSet(bits)
    }

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, x: usize) -> bool {
        (1..=MAX_ORDER).contains(&x) && self.0 & (1u64 << (x - 1)) != 0
    }

    pub(crate) fn contains0(self, i: usize) -> bool {
        self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << (x - 1);
    }

    pub(crate) fn insert0(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in ascending order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.iter0().map(|i| i + 1)
    }

    pub(crate) fn iter0(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub(crate) struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_elements(iter)
    }
}

/// Orders by size first, then by the ascending element list.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let elements = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = elements.iter().find(|&&x| x == 0 || x > MAX_ORDER) {
            return Err(serde::de::Error::custom(format!(
                "element {bad} out of range"
            )));
        }
        Ok(ElementSet::from_elements(elements))
    }
}

/// Parses a comma-separated, 1-based element list such as `1,2,3,4`.
pub fn parse_subset(text: &str) -> Result<ElementSet, String> {
    let mut set = ElementSet::EMPTY;
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let x: usize = token
            .parse()
            .map_err(|_| format!("bad element `{token}` in subset"))?;
        if !(1..=MAX_ORDER).contains(&x) {
            return Err(format!("element {x} out of range in subset"));
        }
        set.insert(x);
    }
    if set.is_empty() {
        return Err("empty subset".to_string());
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_based_round_trip() {
        let s = ElementSet::from_elements([1, 7]);
        assert_eq!(s.bits(), 0b100_0001);
        assert_eq!(s.to_vec(), vec![1, 7]);
        assert!(s.contains(7) && !s.contains(2) && !s.contains(0));
        assert_eq!(s.to_string(), "{1,7}");
    }

    #[test]
    fn full_sets() {
        assert_eq!(ElementSet::full(64).len(), 64);
        assert_eq!(ElementSet::full(5).to_vec(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn ordering_is_size_then_lex() {
        let mut v = [
            ElementSet::from_elements([1, 2, 3, 4]),
            ElementSet::from_elements([1, 8]),
            ElementSet::from_elements([1, 2]),
        ];
        v.sort();
        assert_eq!(v[0].to_vec(), vec![1, 2]);
        assert_eq!(v[1].to_vec(), vec![1, 8]);
    }

    #[test]
    fn subset_flag_parsing() {
        assert_eq!(parse_subset("1,2,3,4").unwrap().to_vec(), vec![1, 2, 3, 4]);
        assert_eq!(parse_subset(" 1, 7 ").unwrap().to_vec(), vec![1, 7]);
        assert!(parse_subset("1,x").is_err());
        assert!(parse_subset("0").is_err());
        assert!(parse_subset("").is_err());
    }

    #[test]
    fn serde_as_list() {
        let s = ElementSet::from_elements([2, 5]);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[2,5]");
        let back: ElementSet = serde_json::from_str("[2,5]").unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<ElementSet>("[0]").is_err());
    }
}
