use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::ExactMathError;

/// The symmetric integer matrix [[a, b], [b, c]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl SymMat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        SymMat2 { a, b, c }
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Self {
        SymMat2::new(BigInt::from(a), BigInt::from(b), BigInt::from(c))
    }

    pub fn identity() -> Self {
        SymMat2::from_i64(1, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.c - &self.b * &self.b
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    /// Signature of the real symmetric form.
    ///
    /// det < 0: indefinite, 0. det > 0: definite, 2*sign(a). det = 0 with a
    /// nonzero matrix: the form has rank 1 and its nonzero eigenvalue carries
    /// the sign of the trace. The zero matrix has signature 0.
    pub fn signature(&self) -> i32 {
        let det = self.det();
        if det.is_negative() {
            0
        } else if det.is_positive() {
            if self.a.is_positive() {
                2
            } else {
                -2
            }
        } else if self.is_zero() {
            0
        } else {
            let t = self.trace();
            debug_assert!(!t.is_zero(), "rank-1 symmetric matrix has nonzero trace");
            if t.is_positive() {
                1
            } else {
                -1
            }
        }
    }

    /// Exact integer inverse, defined only when det is +1 or -1.
    pub fn inverse(&self) -> Result<SymMat2, ExactMathError> {
        let det = self.det();
        if det == BigInt::from(1) {
            Ok(SymMat2::new(self.c.clone(), -&self.b, self.a.clone()))
        } else if det == BigInt::from(-1) {
            Ok(SymMat2::new(-&self.c, self.b.clone(), -&self.a))
        } else {
            Err(ExactMathError::NonUnimodular { det })
        }
    }

    /// Matrix-vector product M (x, y)^T.
    pub fn mul_vec(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.b * x + &self.c * y)
    }

    /// The bilinear pairing u^T M w.
    pub fn pair(&self, u: (&BigInt, &BigInt), w: (&BigInt, &BigInt)) -> BigInt {
        let mw = self.mul_vec(w.0, w.1);
        u.0 * mw.0 + u.1 * mw.1
    }
}
