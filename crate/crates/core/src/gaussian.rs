//! Multimode Gaussian states in the quadrature picture.
//!
//! Quadratures are ordered x₁, p₁, x₂, p₂, … with x = a + a† and
//! p = i(a† − a), so the vacuum covariance is the identity. Every optical
//! element is a Gaussian channel `mean → X·mean`, `cov → X·cov·Xᵀ + Y`; for
//! lossless elements X is symplectic and Y vanishes.

use std::f64::consts::FRAC_PI_2;

use nalgebra::{DMatrix, DVector, Matrix2};

use crate::error::{Error, Result};

/// Homodyne angle selecting the phase quadrature i(a − a†) = −p.
pub const PHASE_QUADRATURE: f64 = -FRAC_PI_2;

#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    n_modes: usize,
    mean: DVector<f64>,
    cov: DMatrix<f64>,
}

/// Mean and variance of one measured quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomodyneStats {
    pub mean: f64,
    pub variance: f64,
}

/// An optical element acting on one or two modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Element {
    /// Intensity transmittance `transmittance`: a' = √T a + √(1−T) b, b' = −√(1−T) a + √T b.
    Beamsplitter { a: usize, b: usize, transmittance: f64 },
    /// a → a·e^{iθ}.
    Phase { mode: usize, theta: f64 },
    /// a → (cosh r · a + sinh r · a†)·e^{iξ}.
    Squeeze { mode: usize, r: f64, xi: f64 },
    /// a → cosh r · a + e^{iφ} sinh r · b†, and symmetrically for b.
    TwoModeSqueeze { a: usize, b: usize, r: f64, pump_phase: f64 },
    /// Beamsplitter coupling to vacuum with amplitude transmittance `t`.
    Loss { mode: usize, t: f64 },
}

impl Element {
    fn modes(&self) -> (usize, Option<usize>) {
        match *self {
            Element::Beamsplitter { a, b, .. } | Element::TwoModeSqueeze { a, b, .. } => (a, Some(b)),
            Element::Phase { mode, .. } | Element::Squeeze { mode, .. } | Element::Loss { mode, .. } => {
                (mode, None)
            }
        }
    }

    pub fn is_lossless(&self) -> bool {
        !matches!(self, Element::Loss { t, .. } if *t < 1.0)
    }

    fn validate(&self, n_modes: usize) -> Result<()> {
        let (a, b) = self.modes();
        check_mode(a, n_modes)?;
        if let Some(b) = b {
            check_mode(b, n_modes)?;
            if a == b {
                return Err(Error::domain(format!("two-mode element needs distinct modes, got {a} twice")));
            }
        }
        match *self {
            Element::Beamsplitter { transmittance, .. } if !(0.0..=1.0).contains(&transmittance) => Err(
                Error::domain(format!("beamsplitter transmittance must lie in [0, 1], got {transmittance}")),
            ),
            Element::Squeeze { r, .. } | Element::TwoModeSqueeze { r, .. } if !(r.is_finite() && r >= 0.0) => {
                Err(Error::domain(format!("squeezing parameter must be >= 0, got {r}")))
            }
            Element::Loss { t, .. } if !(0.0..=1.0).contains(&t) => Err(Error::domain(format!(
                "loss transmittance must lie in [0, 1], got {t}"
            ))),
            _ => Ok(()),
        }
    }

    /// Linear part X of the channel, embedded in a `2n × 2n` matrix.
    pub fn transfer_matrix(&self, n_modes: usize) -> Result<DMatrix<f64>> {
        self.validate(n_modes)?;
        let mut m = DMatrix::identity(2 * n_modes, 2 * n_modes);
        match *self {
            Element::Beamsplitter { a, b, transmittance } => {
                let t = transmittance.sqrt();
                let s = (1.0 - transmittance).sqrt();
                set_block(&mut m, a, a, Matrix2::identity() * t);
                set_block(&mut m, a, b, Matrix2::identity() * s);
                set_block(&mut m, b, a, Matrix2::identity() * -s);
                set_block(&mut m, b, b, Matrix2::identity() * t);
            }
            Element::Phase { mode, theta } => set_block(&mut m, mode, mode, rotation(theta)),
            Element::Squeeze { mode, r, xi } => {
                let stretch = Matrix2::new(r.exp(), 0.0, 0.0, (-r).exp());
                set_block(&mut m, mode, mode, rotation(xi) * stretch);
            }
            Element::TwoModeSqueeze { a, b, r, pump_phase } => {
                let (ch, sh) = (r.cosh(), r.sinh());
                let (c, s) = (pump_phase.cos(), pump_phase.sin());
                // e^{iφ} b† in quadratures
                let conj = Matrix2::new(c, s, s, -c) * sh;
                set_block(&mut m, a, a, Matrix2::identity() * ch);
                set_block(&mut m, a, b, conj);
                set_block(&mut m, b, a, conj);
                set_block(&mut m, b, b, Matrix2::identity() * ch);
            }
            Element::Loss { mode, t } => set_block(&mut m, mode, mode, Matrix2::identity() * t),
        }
        Ok(m)
    }
}

fn rotation(theta: f64) -> Matrix2<f64> {
    let (s, c) = theta.sin_cos();
    Matrix2::new(c, -s, s, c)
}

fn set_block(m: &mut DMatrix<f64>, row_mode: usize, col_mode: usize, block: Matrix2<f64>) {
    m.view_mut((2 * row_mode, 2 * col_mode), (2, 2)).copy_from(&block);
}

fn check_mode(mode: usize, n_modes: usize) -> Result<()> {
    if mode >= n_modes {
        return Err(Error::ModeIndex { index: mode, n_modes });
    }
    Ok(())
}

/// The standard symplectic form ⊕ [[0, 1], [−1, 0]].
pub fn symplectic_form(n_modes: usize) -> DMatrix<f64> {
    let mut omega = DMatrix::zeros(2 * n_modes, 2 * n_modes);
    for k in 0..n_modes {
        omega[(2 * k, 2 * k + 1)] = 1.0;
        omega[(2 * k + 1, 2 * k)] = -1.0;
    }
    omega
}

impl GaussianState {
    pub fn vacuum(n_modes: usize) -> Self {
        GaussianState {
            n_modes,
            mean: DVector::zeros(2 * n_modes),
            cov: DMatrix::identity(2 * n_modes, 2 * n_modes),
        }
    }

    /// Coherent amplitude α = `alpha_x` + i·`alpha_p` in `mode`, vacuum elsewhere.
    pub fn coherent(n_modes: usize, mode: usize, alpha_x: f64, alpha_p: f64) -> Result<Self> {
        check_mode(mode, n_modes)?;
        let mut state = Self::vacuum(n_modes);
        state.mean[2 * mode] = 2.0 * alpha_x;
        state.mean[2 * mode + 1] = 2.0 * alpha_p;
        Ok(state)
    }

    /// Builds a state from raw moments; `cov` is symmetrised.
    pub fn from_moments(mean: DVector<f64>, cov: DMatrix<f64>) -> Result<Self> {
        let dim = mean.len();
        if !dim.is_multiple_of(2) || cov.nrows() != dim || cov.ncols() != dim {
            return Err(Error::Config(format!(
                "moment shapes do not describe a multimode state: mean {dim}, cov {}x{}",
                cov.nrows(),
                cov.ncols()
            )));
        }
        let cov = (&cov + cov.transpose()) * 0.5;
        Ok(GaussianState {
            n_modes: dim / 2,
            mean,
            cov,
        })
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn mean(&self) -> &DVector<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &DMatrix<f64> {
        &self.cov
    }

    /// Mean photon number ⟨a†a⟩ of one mode.
    pub fn photon_number(&self, mode: usize) -> Result<f64> {
        check_mode(mode, self.n_modes)?;
        let (i, j) = (2 * mode, 2 * mode + 1);
        let coherent = self.mean[i].powi(2) + self.mean[j].powi(2);
        let thermal = self.cov[(i, i)] + self.cov[(j, j)] - 2.0;
        Ok((coherent + thermal) / 4.0)
    }

    pub fn apply(&mut self, element: &Element) -> Result<()> {
        let x = element.transfer_matrix(self.n_modes)?;
        self.mean = &x * &self.mean;
        let mut cov = &x * &self.cov * x.transpose();
        if let Element::Loss { mode, t } = *element {
            let admix = 1.0 - t * t;
            cov[(2 * mode, 2 * mode)] += admix;
            cov[(2 * mode + 1, 2 * mode + 1)] += admix;
        }
        self.cov = (&cov + cov.transpose()) * 0.5;
        Ok(())
    }

    pub fn apply_all<'a>(&mut self, elements: impl IntoIterator<Item = &'a Element>) -> Result<()> {
        for e in elements {
            self.apply(e)?;
        }
        Ok(())
    }

    pub fn apply_beamsplitter(&mut self, a: usize, b: usize, transmittance: f64) -> Result<()> {
        self.apply(&Element::Beamsplitter { a, b, transmittance })
    }

    pub fn apply_phase(&mut self, mode: usize, theta: f64) -> Result<()> {
        self.apply(&Element::Phase { mode, theta })
    }

    pub fn apply_single_mode_squeeze(&mut self, mode: usize, r: f64, xi: f64) -> Result<()> {
        self.apply(&Element::Squeeze { mode, r, xi })
    }

    pub fn apply_two_mode_squeeze(&mut self, a: usize, b: usize, r: f64) -> Result<()> {
        self.apply(&Element::TwoModeSqueeze { a, b, r, pump_phase: 0.0 })
    }

    /// Two-mode squeezer whose pump carries phase `pump_phase`. A stage with
    /// pump phase π undoes an equal-gain stage with pump phase 0.
    pub fn apply_two_mode_squeeze_pumped(&mut self, a: usize, b: usize, r: f64, pump_phase: f64) -> Result<()> {
        self.apply(&Element::TwoModeSqueeze { a, b, r, pump_phase })
    }

    pub fn apply_loss(&mut self, mode: usize, t: f64) -> Result<()> {
        self.apply(&Element::Loss { mode, t })
    }

    /// Statistics of x·cos θ + p·sin θ on one mode.
    pub fn homodyne_stats(&self, mode: usize, angle: f64) -> Result<HomodyneStats> {
        check_mode(mode, self.n_modes)?;
        let mut w = DVector::zeros(2 * self.n_modes);
        w[2 * mode] = angle.cos();
        w[2 * mode + 1] = angle.sin();
        Ok(self.linear_stats(&w))
    }

    /// Statistics of the summed quadrature X_a(θ) + X_b(θ), cross terms included.
    pub fn joint_quadrature_stats(&self, mode_a: usize, mode_b: usize, angle: f64) -> Result<HomodyneStats> {
        check_mode(mode_a, self.n_modes)?;
        check_mode(mode_b, self.n_modes)?;
        if mode_a == mode_b {
            return Err(Error::domain("joint detection needs two distinct modes"));
        }
        let (s, c) = angle.sin_cos();
        let mut w = DVector::zeros(2 * self.n_modes);
        for m in [mode_a, mode_b] {
            w[2 * m] = c;
            w[2 * m + 1] = s;
        }
        Ok(self.linear_stats(&w))
    }

    fn linear_stats(&self, w: &DVector<f64>) -> HomodyneStats {
        HomodyneStats {
            mean: w.dot(&self.mean),
            variance: (w.transpose() * &self.cov * w)[(0, 0)],
        }
    }

    /// Smallest eigenvalue of cov + iΩ, via its real 4n × 4n embedding.
    ///
    /// Non-negative (up to rounding) exactly when the state is physical.
    pub fn uncertainty_margin(&self) -> f64 {
        let dim = 2 * self.n_modes;
        let omega = symplectic_form(self.n_modes);
        let mut big = DMatrix::zeros(2 * dim, 2 * dim);
        big.view_mut((0, 0), (dim, dim)).copy_from(&self.cov);
        big.view_mut((dim, dim), (dim, dim)).copy_from(&self.cov);
        big.view_mut((0, dim), (dim, dim)).copy_from(&(-&omega));
        big.view_mut((dim, 0), (dim, dim)).copy_from(&omega);
        big.symmetric_eigenvalues().min()
    }

    /// Smallest eigenvalue of the covariance matrix.
    pub fn min_cov_eigenvalue(&self) -> f64 {
        self.cov.clone().symmetric_eigenvalues().min()
    }

    /// Largest |cov − covᵀ| entry.
    pub fn asymmetry(&self) -> f64 {
        (&self.cov - self.cov.transpose()).amax()
    }
}
