//! List assignments and their enumeration up to renaming of colours.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A non-empty set of positive colours for every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<u32>>) -> Result<ListAssignment> {
        for (v, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::InvalidArgument(format!("vertex {v} has an empty list")));
            }
            if list.contains(&0) {
                return Err(Error::InvalidArgument(format!("vertex {v} lists colour 0; colours are positive")));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn from_slices(lists: &[&[u32]]) -> Result<ListAssignment> {
        ListAssignment::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    /// Every vertex gets `list`.
    pub fn constant(n: usize, list: &[u32]) -> Result<ListAssignment> {
        ListAssignment::new(vec![list.iter().copied().collect(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &BTreeSet<u32> {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BTreeSet<u32>] {
        &self.lists
    }

    /// `Some(r)` when every list has exactly `r` colours.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.lists.first()?.len();
        self.lists.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn min_size(&self) -> Option<usize> {
        self.lists.iter().map(BTreeSet::len).min()
    }

    /// True iff every list has at least `k` colours.
    pub fn is_k_assignment(&self, k: usize) -> bool {
        self.lists.iter().all(|l| l.len() >= k)
    }

    /// Number of L-colourings, `∏ |L(v)|`.
    pub fn colouring_count(&self) -> u128 {
        self.lists
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.len() as u128))
            .unwrap_or(u128::MAX)
    }

    /// All colours appearing in some list.
    pub fn universe(&self) -> BTreeSet<u32> {
        self.lists.iter().flatten().copied().collect()
    }

    /// Lists of the given host vertices, in order.
    pub fn restrict(&self, vertices: &[usize]) -> ListAssignment {
        ListAssignment {
            lists: vertices.iter().map(|&v| self.lists[v].clone()).collect(),
        }
    }

    /// Checks that a colouring picks from the lists.
    pub fn admits(&self, colours: &[u32]) -> bool {
        colours.len() == self.lists.len() && colours.iter().zip(&self.lists).all(|(c, l)| l.contains(c))
    }

    /// Relabels colours in first-appearance order (vertex order, then
    /// ascending within a list), starting at 1.
    pub fn normalized(&self) -> ListAssignment {
        let mut relabel = std::collections::BTreeMap::new();
        for list in &self.lists {
            for &c in list {
                let next = relabel.len() as u32 + 1;
                relabel.entry(c).or_insert(next);
            }
        }
        ListAssignment {
            lists: self
                .lists
                .iter()
                .map(|l| l.iter().map(|c| relabel[c]).collect())
                .collect(),
        }
    }
}

fn check_enumeration(n: usize, r: usize, caps: &Caps) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidArgument("list size must be at least 1".into()));
    }
    if n > 64 {
        return Err(Error::cap("vertex count for list enumeration", 64u128, n as u128));
    }
    let product = n.saturating_mul(r);
    if product > caps.list_product {
        return Err(Error::cap("n*r for canonical list enumeration", caps.list_product as u128, product as u128));
    }
    Ok(())
}

/// Visits the `r`-uniform list assignments on `n` vertices, one per class of
/// assignments equivalent under injective renaming of colours.
///
/// A colour is determined, up to renaming, by the set of vertices whose list
/// contains it; an assignment is therefore a multiset of non-empty vertex
/// sets covering every vertex exactly `r` times. Those multisets are
/// generated with their members in non-decreasing bitmask order, which yields
/// each class exactly once. The emitted representative is relabelled in
/// first-appearance order over the universe `{1, ..., n*r}`.
pub fn for_each_canonical_assignment<F>(n: usize, r: usize, caps: &Caps, mut visit: F) -> Result<ControlFlow<()>>
where
    F: FnMut(&ListAssignment) -> ControlFlow<()>,
{
    check_enumeration(n, r, caps)?;
    if n == 0 {
        return Ok(visit(&ListAssignment { lists: Vec::new() }));
    }
    let mut need = vec![r; n];
    let mut chosen: Vec<u64> = Vec::with_capacity(n * r);
    Ok(extend(&mut need, &mut chosen, 1, &mut visit))
}

fn extend<F>(need: &mut [usize], chosen: &mut Vec<u64>, min_mask: u64, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&ListAssignment) -> ControlFlow<()>,
{
    let open: u64 = need
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .fold(0, |m, (v, _)| m | 1 << v);
    if open == 0 {
        return visit(&assignment_from_classes(need.len(), chosen));
    }
    if open < min_mask {
        return ControlFlow::Continue(());
    }
    // Submasks of `open` that are >= min_mask, in increasing order.
    let mut mask = next_submask_at_least(open, min_mask);
    while let Some(m) = mask {
        for v in bits(m) {
            need[v] -= 1;
        }
        chosen.push(m);
        let flow = extend(need, chosen, m, visit);
        chosen.pop();
        for v in bits(m) {
            need[v] += 1;
        }
        flow?;
        mask = m.checked_add(1).and_then(|next| next_submask_at_least(open, next));
    }
    ControlFlow::Continue(())
}

/// Smallest non-empty submask of `set` that is `>= floor`.
fn next_submask_at_least(set: u64, floor: u64) -> Option<u64> {
    let floor = floor.max(1);
    let bad = floor & !set;
    if bad == 0 {
        return Some(floor);
    }
    // Raise the lowest admissible zero bit of `floor` above its highest bit
    // outside `set`, keep the bits above it and clear the rest.
    let highest_bad = 63 - bad.leading_zeros();
    for p in highest_bad + 1..64 {
        let bit = 1u64 << p;
        if set & bit != 0 && floor & bit == 0 {
            let above = if p == 63 { 0 } else { !((bit << 1) - 1) };
            return Some(floor & above | bit);
        }
    }
    None
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn assignment_from_classes(n: usize, classes: &[u64]) -> ListAssignment {
    let mut lists = vec![BTreeSet::new(); n];
    for (c, &m) in classes.iter().enumerate() {
        for v in bits(m) {
            lists[v].insert(c as u32 + 1);
        }
    }
    ListAssignment { lists }.normalized()
}

/// Collects [`for_each_canonical_assignment`].
pub fn canonical_list_assignments(n: usize, r: usize, caps: &Caps) -> Result<Vec<ListAssignment>> {
    let mut out = Vec::new();
    let _ = for_each_canonical_assignment(n, r, caps, |l| {
        out.push(l.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_enumerations() {
        let caps = Caps::default();
        let one = canonical_list_assignments(1, 1, &caps).unwrap();
        assert_eq!(one, vec![ListAssignment::from_slices(&[&[1]]).unwrap()]);

        let two = canonical_list_assignments(2, 1, &caps).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&ListAssignment::from_slices(&[&[1], &[1]]).unwrap()));
        assert!(two.contains(&ListAssignment::from_slices(&[&[1], &[2]]).unwrap()));
    }

    #[test]
    fn singleton_lists_count_set_partitions() {
        // Bell numbers.
        let caps = Caps::default();
        let bell = [1usize, 1, 2, 5, 15, 52, 203];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(canonical_list_assignments(n, 1, &caps).unwrap().len(), b, "n = {n}");
        }
    }

    #[test]
    fn representatives_are_uniform_and_normalized() {
        let caps = Caps::default();
        for l in canonical_list_assignments(3, 2, &caps).unwrap() {
            assert_eq!(l.uniform_size(), Some(2));
            assert_eq!(l, l.normalized());
            assert!(l.universe().iter().all(|&c| (1..=6).contains(&c)));
        }
    }

    #[test]
    fn enumeration_cap_and_arguments() {
        let caps = Caps::default();
        assert!(matches!(
            canonical_list_assignments(7, 2, &caps),
            Err(Error::CapExceeded { .. })
        ));
        assert!(canonical_list_assignments(3, 0, &caps).is_err());
    }

    #[test]
    fn submask_stepping() {
        assert_eq!(next_submask_at_least(0b1011, 0b0100), Some(0b1000));
        assert_eq!(next_submask_at_least(0b1011, 0b0011), Some(0b0011));
        assert_eq!(next_submask_at_least(0b1011, 0b1100), None);
        assert_eq!(next_submask_at_least(0b0110, 1), Some(0b0010));
        let all: Vec<u64> = std::iter::successors(next_submask_at_least(0b1101, 1), |&m| {
            next_submask_at_least(0b1101, m + 1)
        })
        .collect();
        assert_eq!(all, vec![0b0001, 0b0100, 0b0101, 0b1000, 0b1001, 0b1100, 0b1101]);
    }

    #[test]
    fn list_assignment_validation() {
        assert!(ListAssignment::from_slices(&[&[]]).is_err());
        assert!(ListAssignment::from_slices(&[&[0, 1]]).is_err());
        let l = ListAssignment::from_slices(&[&[5, 9], &[9]]).unwrap();
        assert_eq!(l.uniform_size(), None);
        assert_eq!(l.min_size(), Some(1));
        assert!(l.is_k_assignment(1));
        assert!(!l.is_k_assignment(2));
        assert_eq!(l.colouring_count(), 2);
        assert_eq!(l.normalized(), ListAssignment::from_slices(&[&[1, 2], &[2]]).unwrap());
    }
}
