/// Counting Fenwick tree over positions `1..=len`.
#[derive(Clone, Debug)]
pub(crate) struct Fenwick {
    tree: Vec<u64>,
}

impl Fenwick {
    pub(crate) fn new(len: usize) -> Self {
        Fenwick { tree: vec![0; len + 1] }
    }

    pub(crate) fn add(&mut self, mut pos: usize, delta: u64) {
        debug_assert!(pos >= 1);
        while pos < self.tree.len() {
            self.tree[pos] += delta;
            pos += pos & pos.wrapping_neg();
        }
    }

    /// Sum over `1..=pos`.
    pub(crate) fn prefix(&self, pos: usize) -> u64 {
        let mut pos = pos.min(self.tree.len() - 1);
        let mut sum = 0;
        while pos > 0 {
            sum += self.tree[pos];
            pos &= pos - 1;
        }
        sum
    }

    pub(crate) fn total(&self) -> u64 {
        self.prefix(self.tree.len() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::Fenwick;

    #[test]
    fn prefix_sums() {
        let mut f = Fenwick::new(10);
        for (pos, v) in [(1, 3), (4, 1), (10, 2), (4, 5)] {
            f.add(pos, v);
        }
        assert_eq!(f.prefix(0), 0);
        assert_eq!(f.prefix(3), 3);
        assert_eq!(f.prefix(4), 9);
        assert_eq!(f.prefix(9), 9);
        assert_eq!(f.total(), 11);
        assert_eq!(f.prefix(50), 11);
    }
}
