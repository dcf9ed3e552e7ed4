//! Permutations of `0..n` ranked lexicographically, so rank 0 is the identity.

#[derive(Debug, Clone)]
pub(crate) struct PermTable {
    n: usize,
    perms: Vec<[u8; 8]>,
    inverse: Vec<u32>,
}

impl PermTable {
    pub(crate) fn new(n: usize) -> Self {
        assert!((1..=8).contains(&n));
        let count: usize = (1..=n).product();
        let perms: Vec<[u8; 8]> = (0..count).map(|r| unrank(n, r)).collect();
        let mut table = PermTable { n, perms, inverse: Vec::new() };
        table.inverse = (0..count)
            .map(|r| {
                let p = &table.perms[r];
                let mut q = [0u8; 8];
                for i in 0..n {
                    q[p[i] as usize] = i as u8;
                }
                table.rank(&q) as u32
            })
            .collect();
        table
    }

    pub(crate) fn len(&self) -> usize {
        self.perms.len()
    }

    /// Lehmer-code rank.
    fn rank(&self, p: &[u8; 8]) -> usize {
        let n = self.n;
        let mut r = 0usize;
        for i in 0..n {
            let smaller = (i + 1..n).filter(|&j| p[j] < p[i]).count();
            r = r * (n - i) + smaller;
        }
        r
    }

    #[inline]
    pub(crate) fn compose(&self, g: usize, h: usize) -> usize {
        let (a, b) = (&self.perms[g], &self.perms[h]);
        let mut c = [0u8; 8];
        for i in 0..self.n {
            c[i] = a[b[i] as usize];
        }
        self.rank(&c)
    }

    #[inline]
    pub(crate) fn inverse(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    pub(crate) fn images(&self, g: usize) -> Vec<u8> {
        self.perms[g][..self.n].to_vec()
    }

    pub(crate) fn index_of(&self, images: &[usize]) -> Option<usize> {
        if images.len() != self.n {
            return None;
        }
        let mut p = [0u8; 8];
        let mut seen = [false; 8];
        for (i, &v) in images.iter().enumerate() {
            if v >= self.n || seen[v] {
                return None;
            }
            seen[v] = true;
            p[i] = v as u8;
        }
        Some(self.rank(&p))
    }
}

fn unrank(n: usize, mut r: usize) -> [u8; 8] {
    let mut digits = [0usize; 8];
    for i in (0..n).rev() {
        let base = n - i;
        digits[i] = r % base;
        r /= base;
    }
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut p = [0u8; 8];
    for i in 0..n {
        p[i] = pool.remove(digits[i]);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_unrank_bijection() {
        for n in 1..=6 {
            let t = PermTable::new(n);
            for r in 0..t.len() {
                assert_eq!(t.rank(&t.perms[r]), r);
            }
        }
        let t = PermTable::new(4);
        assert_eq!(&t.perms[0][..4], &[0, 1, 2, 3]);
        assert_eq!(&t.perms[23][..4], &[3, 2, 1, 0]);
    }
}
