/// Dense vector over GF(2), packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec { words: vec![0; len.div_ceil(64)] }
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.toggle(i);
        }
        v
    }

    pub fn toggle(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn pivot(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Rank over GF(2) of a family of vectors, by elimination on lowest pivots.
pub fn rank(vectors: impl IntoIterator<Item = BitVec>) -> usize {
    // basis[p] holds a reduced vector whose lowest set bit is p
    let mut basis: std::collections::HashMap<usize, BitVec> = std::collections::HashMap::new();
    let mut r = 0;
    for mut v in vectors {
        while let Some(p) = v.pivot() {
            match basis.get(&p) {
                Some(b) => v.xor_assign(b),
                None => {
                    basis.insert(p, v);
                    r += 1;
                    break;
                }
            }
        }
    }
    r
}
