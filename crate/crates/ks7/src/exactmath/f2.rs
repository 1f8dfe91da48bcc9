/// A square matrix over the two-element field, with rows packed into `u64`
/// bitmasks. Sizes up to 64 are supported, far beyond what the exhaustive
/// parity arguments need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Matrix {
    size: usize,
    rows: Vec<u64>,
}

impl F2Matrix {
    pub fn new(size: usize) -> Self {
        assert!(size >= 1 && size <= 64, "size out of range: {size}");
        F2Matrix {
            size,
            rows: vec![0; size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = F2Matrix::new(size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    /// Rows of 0/1 entries; any odd value reads as 1.
    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let mut m = F2Matrix::new(rows.len());
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len(), "matrix must be square");
            for (j, &e) in row.iter().enumerate() {
                m.set(i, j, e % 2 == 1);
            }
        }
        m
    }

    /// The symmetric zero-diagonal matrix whose strict upper triangle is
    /// filled from the low bits of `bits`, row by row. Enumerating
    /// `bits` over `0..2^(n(n-1)/2)` walks every such matrix exactly once.
    pub fn symmetric_zero_diag(size: usize, bits: u64) -> Self {
        let k = size * (size - 1) / 2;
        assert!(k <= 64 && (k == 64 || bits < (1u64 << k)), "bits out of range");
        let mut m = F2Matrix::new(size);
        let mut next = 0;
        for i in 0..size {
            for j in i + 1..size {
                if bits >> next & 1 == 1 {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
                next += 1;
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.size && j < self.size);
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        assert!(i < self.size && j < self.size);
        if bit {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn is_symmetric_zero_diag(&self) -> bool {
        for i in 0..self.size {
            if self.get(i, i) {
                return false;
            }
            for j in i + 1..self.size {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Determinant over the two-element field, by Gaussian elimination.
    pub fn det(&self) -> u8 {
        let mut rows = self.rows.clone();
        for col in 0..self.size {
            let pivot = (col..self.size).find(|&r| rows[r] >> col & 1 == 1);
            let Some(p) = pivot else { return 0 };
            rows.swap(col, p);
            let pivot_row = rows[col];
            for row in rows.iter_mut().skip(col + 1) {
                if *row >> col & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
        }
        1
    }
}
