use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex;

use crate::{Error, Real, Result};

/// Dense square complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    size: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> ComplexMatrix<T> {
    pub fn zeros(size: usize) -> Self {
        ComplexMatrix { size, data: vec![Complex::new(T::zero(), T::zero()); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> Complex<T>) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            for j in 0..size {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        ComplexMatrix { size: self.size, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.size, |i, j| self[(j, i)])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    /// `max_{ij} |self_ij − other_ij|`.
    pub fn max_deviation(&self, other: &Self) -> T {
        assert_eq!(self.size, other.size, "matrix sizes differ");
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(T::zero(), T::max)
    }

    /// One CSV record per row, each entry written as two fields `re,im`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let err = |e: csv::Error| Error::Csv(e.to_string());
        for i in 0..self.size {
            let mut rec = Vec::with_capacity(2 * self.size);
            for j in 0..self.size {
                let z = self[(i, j)];
                rec.push(format_float(z.re.to_f64().unwrap_or(f64::NAN)));
                rec.push(format_float(z.im.to_f64().unwrap_or(f64::NAN)));
            }
            w.write_record(&rec).map_err(err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Csv(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Csv(e.to_string()))
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.size + j]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.size + j]
    }
}

impl<T: Real> Mul for &ComplexMatrix<T> {
    type Output = ComplexMatrix<T>;
    fn mul(self, rhs: Self) -> ComplexMatrix<T> {
        assert_eq!(self.size, rhs.size, "matrix sizes differ");
        let s = self.size;
        let mut out = ComplexMatrix::zeros(s);
        for i in 0..s {
            for l in 0..s {
                let a = self[(i, l)];
                for j in 0..s {
                    out[(i, j)] = out[(i, j)] + a * rhs[(l, j)];
                }
            }
        }
        out
    }
}

/// Twelve significant digits, trailing zeros trimmed, `-0` printed as `0`.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..15).contains(&exp) {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        return format!("{m}e{exp}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_adjoint() {
        let i = Complex::new(0.0, 1.0);
        let m = ComplexMatrix::from_fn(2, |r, c| if r == c { Complex::new(0.0, 0.0) } else { i });
        let sq = &m * &m;
        assert!(sq.max_deviation(&ComplexMatrix::identity(2)) > 1.9);
        assert!((&m * &m.adjoint()).max_deviation(&ComplexMatrix::identity(2)) < 1e-15);
        assert_eq!(m.transpose(), m);
    }

    #[test]
    fn float_formatting() {
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(-0.0), "0");
        assert_eq!(format_float(0.1 + 0.2), "0.3");
        assert_eq!(format_float(2.0f64.sqrt()), "1.41421356237");
        assert_eq!(format_float(-1.5e-12), "-1.5e-12");
        assert_eq!(format_float(123456.0), "123456");
        assert_eq!(format_float(-1e-17), "-1e-17");
    }

    #[test]
    fn csv_layout() {
        let m = ComplexMatrix::<f64>::identity(2);
        assert_eq!(m.to_csv().unwrap(), "1,0,0,0\n0,0,1,0\n");
    }
}
