/// A fixed-capacity bitset over edge indices, `64 * W` bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits<const W: usize>([u64; W]);

impl<const W: usize> Bits<W> {
    pub const CAPACITY: usize = 64 * W;

    pub fn empty() -> Self {
        Bits([0; W])
    }

    /// Bits `0..len`.
    pub fn prefix(len: usize) -> Self {
        let mut b = Self::empty();
        for (w, word) in b.0.iter_mut().enumerate() {
            let lo = 64 * w;
            *word = match len.saturating_sub(lo) {
                0 => 0,
                r if r >= 64 => u64::MAX,
                r => (1u64 << r) - 1,
            };
        }
        b
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn with(mut self, i: usize) -> Self {
        self.set(i);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        self.clear(i);
        self
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| 64 * i + w.trailing_zeros() as usize)
    }

    pub fn and(mut self, other: &Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        self
    }

    pub fn and_not(mut self, other: &Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        self
    }

    pub fn ones(&self) -> Ones<'_, W> {
        Ones {
            bits: self,
            word: 0,
            cur: self.0[0],
        }
    }
}

pub(crate) struct Ones<'a, const W: usize> {
    bits: &'a Bits<W>,
    word: usize,
    cur: u64,
}

impl<const W: usize> Iterator for Ones<'_, W> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let i = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(64 * self.word + i);
            }
            self.word += 1;
            if self.word >= W {
                return None;
            }
            self.cur = self.bits.0[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let b = Bits::<2>::prefix(70);
        assert_eq!(b.count(), 70);
        let c = Bits::<2>::empty().with(3).with(65).with(127);
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![3, 65, 127]);
        assert_eq!(c.and(&b).ones().collect::<Vec<_>>(), vec![3, 65]);
        assert_eq!(c.and_not(&b).first(), Some(127));
        assert!(c.without(3).without(65).without(127).is_empty());
        assert_eq!(Bits::<1>::prefix(64).count(), 64);
    }
}
