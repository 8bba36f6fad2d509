//! Bracketing root finding for sign changes of a scalar function.

use crate::error::{Error, Result};

/// Bisection on `[a, b]` until the bracket is narrower than `tol`.
///
/// `f(a)` and `f(b)` must have opposite signs (or one of them be zero).
pub fn bisect<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let (mut lo, mut hi) = if a <= b { (a, b) } else { (b, a) };
    let mut f_lo = f(lo)?;
    let f_hi = f(hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NoSignChange {
            a: lo,
            fa: f_lo,
            b: hi,
            fb: f_hi,
        });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Samples `f` at `samples` evenly spaced points of `[a, b]` and returns the
/// first sub-interval across which it changes sign.
pub fn scan_bracket<F>(f: F, a: f64, b: f64, samples: usize) -> Result<Option<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64>,
{
    let samples = samples.max(2);
    let step = (b - a) / (samples - 1) as f64;
    let at = |k: usize| if k == samples - 1 { b } else { a + step * k as f64 };
    let mut prev_x = a;
    let mut prev = f(a)?;
    for k in 1..samples {
        let x = at(k);
        let v = f(x)?;
        if prev == 0.0 || prev.signum() != v.signum() {
            return Ok(Some((prev_x, x)));
        }
        prev_x = x;
        prev = v;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_sqrt_two() {
        let x = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0, 1e-12).unwrap();
        assert!((x - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn reports_missing_sign_change() {
        let err = bisect(|x| Ok(x * x + 1.0), -1.0, 1.0, 1e-6).unwrap_err();
        match err {
            Error::NoSignChange { a, fa, b, fb } => {
                assert_eq!((a, fa, b, fb), (-1.0, 2.0, 1.0, 2.0));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scan_locates_first_crossing() {
        let br = scan_bracket(|x| Ok((x - 0.3) * (x - 0.7)), 0.0, 1.0, 1000).unwrap().unwrap();
        assert!(br.0 <= 0.3 && br.1 >= 0.3 && br.1 - br.0 < 2e-3);
        assert!(scan_bracket(|x| Ok(x + 5.0), 0.0, 1.0, 100).unwrap().is_none());
    }

    #[test]
    fn propagates_evaluation_errors() {
        let res = bisect(|_| Err(Error::domain("boom")), 0.0, 1.0, 1e-6);
        assert!(matches!(res, Err(Error::Domain(_))));
    }
}
