//! Exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::Rational;

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let size = m.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(Int::from(a), Int::from(b))
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(vec![]), Rational::one());
        assert_eq!(determinant(vec![vec![q(0, 1), q(1, 2)], vec![q(1, 3), q(5, 1)]]), q(-1, 6));
        let singular = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(determinant(singular).is_zero());
        let m = vec![vec![q(2, 1), q(0, 1), q(1, 1)], vec![q(1, 1), q(3, 1), q(2, 1)], vec![q(1, 1), q(1, 1), q(2, 1)]];
        assert_eq!(determinant(m), q(6, 1));
    }
}
