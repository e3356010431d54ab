/// Fixed-capacity set of element indices, used for subsum and image sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(capacity: usize) -> Self {
        ElemSet {
            words: vec![0; capacity.div_ceil(64)],
        }
    }

    pub fn singleton(capacity: usize, x: usize) -> Self {
        let mut s = Self::new(capacity);
        s.insert(x);
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &bits)| {
            let mut bits = bits;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }
}

impl FromIterator<usize> for ElemSet {
    /// Capacity is taken from the largest member; prefer `new` + `insert`
    /// when the ambient size is known.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let cap = items.iter().max().map_or(0, |m| m + 1);
        let mut s = ElemSet::new(cap);
        for x in items {
            s.insert(x);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_len() {
        let mut s = ElemSet::new(130);
        assert!(s.is_empty());
        for x in [0, 63, 64, 129, 5] {
            assert!(s.insert(x));
        }
        assert!(!s.insert(5));
        assert_eq!(s.len(), 5);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 63, 64, 129]);
        assert!(s.contains(129) && !s.contains(128));
    }

    #[test]
    fn subset_and_union() {
        let a: ElemSet = [1, 2].into_iter().collect();
        let mut b = ElemSet::new(3);
        b.insert(2);
        assert!(b.is_subset(&a));
        assert!(!a.is_subset(&b));
        b.union_with(&a);
        assert_eq!(b, a);
    }
}
