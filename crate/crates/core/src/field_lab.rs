//! Plane-wave field lab.
//!
//! The first-order wave operator `i dt - grad_r - i m_tr` (time derivative
//! carried by `e_t`, gradient by `e_r`, mass by `e_tr`) acts on a single
//! Fourier mode multiplicatively, so it materializes to an operator sedeon
//! and every equation check reduces to exact algebra on amplitudes. The lab
//! evaluates the second-order massive wave equation, the first-order system
//! for the field intensities, the electromagnetic specialization down to the
//! four Maxwell residuals (Gaussian units, the 4 pi factors kept verbatim),
//! the first-order Dirac-type equation, and a central-difference grid
//! version of the first-order operator for convergence studies.

use num_complex::Complex64;

use crate::algebra::{scalar_product, vector_product, Sedeon};
use crate::error::SedeonError;
use crate::matrix_rep::{left_regular_matrix, Matrix16};
use crate::report::{ResidualReport, ANALYTIC_TOL};

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
const C_I: Complex64 = Complex64::new(0.0, 1.0);

/// Sign convention for the mode phase. Derivatives act multiplicatively:
/// with `Plus` (the default) the field varies as `exp(i(w t - k.r))`, so the
/// time derivative brings down `i w` and the gradient `-i k`; `Minus` flips
/// both. All identities hold under either convention.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum PhaseSign {
    #[default]
    Plus,
    Minus,
}

impl PhaseSign {
    /// Eigenvalue of `d/dt` on the mode.
    pub fn time_factor(self, omega: f64) -> Complex64 {
        match self {
            PhaseSign::Plus => Complex64::new(0.0, omega),
            PhaseSign::Minus => Complex64::new(0.0, -omega),
        }
    }

    /// Eigenvalue of one gradient component on the mode.
    pub fn grad_factor(self, k: f64) -> Complex64 {
        match self {
            PhaseSign::Plus => Complex64::new(0.0, -k),
            PhaseSign::Minus => Complex64::new(0.0, k),
        }
    }
}

/// Parameters of the wave operator. `mass_coeff` is the single combined
/// inverse length `m c / hbar`; natural units (`c = 1`) are the default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveOperatorParams {
    pub mass_coeff: f64,
    pub c: f64,
    pub convention: PhaseSign,
}

impl WaveOperatorParams {
    pub fn new(mass_coeff: f64, c: f64, convention: PhaseSign) -> Result<Self, SedeonError> {
        if !mass_coeff.is_finite() || !c.is_finite() {
            return Err(SedeonError::NonFinite {
                context: "wave operator parameters",
            });
        }
        if mass_coeff < 0.0 {
            return Err(SedeonError::NegativeMass { value: mass_coeff });
        }
        if c <= 0.0 {
            return Err(SedeonError::NonPositiveLightSpeed { c });
        }
        Ok(WaveOperatorParams {
            mass_coeff,
            c,
            convention,
        })
    }

    /// Natural units with the default phase convention.
    pub fn natural(mass_coeff: f64) -> Result<Self, SedeonError> {
        WaveOperatorParams::new(mass_coeff, 1.0, PhaseSign::default())
    }

    pub fn massless() -> Self {
        WaveOperatorParams::natural(0.0).expect("valid parameters")
    }
}

/// A single Fourier mode: a sedeon amplitude with angular frequency and wave
/// vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveField {
    pub amplitude: Sedeon,
    pub omega: f64,
    pub kvec: [f64; 3],
}

impl PlaneWaveField {
    pub fn new(amplitude: Sedeon, omega: f64, kvec: [f64; 3]) -> Result<Self, SedeonError> {
        if !amplitude.is_finite() || !omega.is_finite() || !kvec.iter().all(|k| k.is_finite()) {
            return Err(SedeonError::NonFinite {
                context: "plane wave field",
            });
        }
        Ok(PlaneWaveField {
            amplitude,
            omega,
            kvec,
        })
    }

    pub fn wave_number(&self) -> f64 {
        (self.kvec[0] * self.kvec[0] + self.kvec[1] * self.kvec[1] + self.kvec[2] * self.kvec[2])
            .sqrt()
    }
}

/// The positive frequency satisfying the dispersion relation
/// `w^2 = c^2 (k^2 + mass^2)`.
pub fn on_shell_omega(kvec: [f64; 3], params: &WaveOperatorParams) -> f64 {
    let k_sq = kvec.iter().map(|k| k * k).sum::<f64>();
    params.c * (k_sq + params.mass_coeff * params.mass_coeff).sqrt()
}

/// The scalar the squared operator multiplies amplitudes by:
/// `w^2/c^2 - k^2 - mass^2`. Zero exactly on shell.
pub fn dispersion_factor(omega: f64, kvec: [f64; 3], params: &WaveOperatorParams) -> f64 {
    let k_sq = kvec.iter().map(|k| k * k).sum::<f64>();
    (omega / params.c) * (omega / params.c) - k_sq - params.mass_coeff * params.mass_coeff
}

/// The `i dt` piece of the operator, materialized on the mode.
fn time_piece(omega: f64, params: &WaveOperatorParams) -> Sedeon {
    let tau = params.convention.time_factor(omega);
    let mut s = Sedeon::zero();
    *s.at_mut(1, 0) = C_I * (tau / params.c);
    s
}

/// The gradient piece (without its leading minus), a pure sedeon-vector.
fn gradient_piece(kvec: [f64; 3], params: &WaveOperatorParams) -> Sedeon {
    let mut s = Sedeon::zero();
    for (j, &k) in kvec.iter().enumerate() {
        *s.at_mut(2, j + 1) = params.convention.grad_factor(k);
    }
    s
}

/// The `-i m_tr` piece.
fn mass_piece(params: &WaveOperatorParams) -> Sedeon {
    let mut s = Sedeon::zero();
    *s.at_mut(3, 0) = Complex64::new(0.0, -params.mass_coeff);
    s
}

/// The whole first-order operator materialized as a sedeon; applying the
/// operator to a mode is left multiplication by this value.
pub fn operator_sedeon(omega: f64, kvec: [f64; 3], params: &WaveOperatorParams) -> Sedeon {
    time_piece(omega, params) - gradient_piece(kvec, params) + mass_piece(params)
}

/// One application of the first-order operator to a mode.
pub fn apply_wave_operator(field: &PlaneWaveField, params: &WaveOperatorParams) -> PlaneWaveField {
    let op = operator_sedeon(field.omega, field.kvec, params);
    PlaneWaveField {
        amplitude: op.product(&field.amplitude),
        omega: field.omega,
        kvec: field.kvec,
    }
}

/// Scalar and vector field intensities of a mode, each carried as a mode
/// amplitude sharing the frequency and wave vector of the potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldIntensities {
    pub scalar: PlaneWaveField,
    pub vector: PlaneWaveField,
}

/// One operator application split into its defining pieces:
/// scalar intensity `i dt W_0 - (grad . W) - i m W_0` and vector intensity
/// `i dt W - grad W_0 - i m W - [grad x W]`. Equal to the decomposition of
/// [`apply_wave_operator`], which the tests exercise as an independent
/// route.
pub fn field_intensities(field: &PlaneWaveField, params: &WaveOperatorParams) -> FieldIntensities {
    let (w0, wv) = field.amplitude.decompose();
    let t = time_piece(field.omega, params);
    let g = gradient_piece(field.kvec, params);
    let m = mass_piece(params);
    let dot = scalar_product(&g, &wv).expect("gradient and vector parts are pure vectors");
    let cross = vector_product(&g, &wv).expect("gradient and vector parts are pure vectors");
    let e0 = t.product(&w0) - dot + m.product(&w0);
    let ev = t.product(&wv) - g.product(&w0) + m.product(&wv) - cross;
    FieldIntensities {
        scalar: PlaneWaveField {
            amplitude: e0,
            omega: field.omega,
            kvec: field.kvec,
        },
        vector: PlaneWaveField {
            amplitude: ev,
            omega: field.omega,
            kvec: field.kvec,
        },
    }
}

/// Residual amplitudes of the first-order system for the intensities, with
/// the source split off: scalar equation
/// `i dt E_0 - (grad . E) - i m E_0 - J_0` and vector equation
/// `i dt E - [grad x E] - grad E_0 - i m E - J`.
pub fn first_order_residual_amplitudes(
    intensities: &FieldIntensities,
    source: &Sedeon,
    params: &WaveOperatorParams,
) -> (Sedeon, Sedeon) {
    let e0 = intensities.scalar.amplitude;
    let ev = intensities.vector.amplitude;
    let omega = intensities.scalar.omega;
    let kvec = intensities.scalar.kvec;
    let (j0, jv) = source.decompose();
    let t = time_piece(omega, params);
    let g = gradient_piece(kvec, params);
    let m = mass_piece(params);
    let dot = scalar_product(&g, &ev).expect("pure vectors");
    let cross = vector_product(&g, &ev).expect("pure vectors");
    let r_scalar = t.product(&e0) - dot + m.product(&e0) - j0;
    let r_vector = t.product(&ev) - cross - g.product(&e0) + m.product(&ev) - jv;
    (r_scalar, r_vector)
}

/// Report form of [`first_order_residual_amplitudes`].
pub fn first_order_residual(
    intensities: &FieldIntensities,
    source: &Sedeon,
    params: &WaveOperatorParams,
) -> ResidualReport {
    let (r_scalar, r_vector) = first_order_residual_amplitudes(intensities, source, params);
    let mut report = ResidualReport::new();
    report.record("first_order.scalar", r_scalar.max_norm(), ANALYTIC_TOL);
    report.record("first_order.vector", r_vector.max_norm(), ANALYTIC_TOL);
    report
}

/// Residual amplitude of the second-order massive wave equation: two
/// operator applications minus the source.
pub fn second_order_residual_amplitude(
    field: &PlaneWaveField,
    source: &Sedeon,
    params: &WaveOperatorParams,
) -> Sedeon {
    let twice = apply_wave_operator(&apply_wave_operator(field, params), params);
    twice.amplitude - *source
}

/// Full second-order report: the total residual, its scalar/vector split,
/// and the intensity wave equations driven by the operator-split source.
pub fn second_order_residual(
    field: &PlaneWaveField,
    source: &Sedeon,
    params: &WaveOperatorParams,
) -> ResidualReport {
    let residual = second_order_residual_amplitude(field, source, params);
    let (r0, rv) = residual.decompose();

    // Wave equations for the intensities: the squared operator applied to
    // each intensity must match the same split of the operator applied to
    // the source.
    let fi = field_intensities(field, params);
    let source_mode = PlaneWaveField {
        amplitude: *source,
        omega: field.omega,
        kvec: field.kvec,
    };
    let source_split = field_intensities(&source_mode, params);
    let d2_scalar =
        apply_wave_operator(&apply_wave_operator(&fi.scalar, params), params).amplitude;
    let d2_vector =
        apply_wave_operator(&apply_wave_operator(&fi.vector, params), params).amplitude;

    let mut report = ResidualReport::new();
    report.record("second_order.total", residual.max_norm(), ANALYTIC_TOL);
    report.record("second_order.scalar", r0.max_norm(), ANALYTIC_TOL);
    report.record("second_order.vector", rv.max_norm(), ANALYTIC_TOL);
    report.record(
        "second_order.intensity_wave.scalar",
        (d2_scalar - source_split.scalar.amplitude).max_norm(),
        ANALYTIC_TOL,
    );
    report.record(
        "second_order.intensity_wave.vector",
        (d2_vector - source_split.vector.amplitude).max_norm(),
        ANALYTIC_TOL,
    );
    report
}

/// Summed second-order residual over a superposition of modes, one source
/// amplitude per mode. Linearity makes per-mode residuals sufficient; the
/// sum bounds the residual of the superposed field.
pub fn multimode_second_order_residual(
    modes: &[(PlaneWaveField, Sedeon)],
    params: &WaveOperatorParams,
) -> ResidualReport {
    let total: f64 = modes
        .iter()
        .map(|(field, source)| second_order_residual_amplitude(field, source, params).max_norm())
        .sum();
    let mut report = ResidualReport::new();
    report.record("second_order.multimode_sum", total, ANALYTIC_TOL);
    report
}

/// Electromagnetic potential mode: scalar potential, vector potential,
/// frequency and wave vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EMPotential {
    pub phi: Complex64,
    pub a_vec: [Complex64; 3],
    pub omega: f64,
    pub kvec: [f64; 3],
}

/// Electromagnetic source: charge and current density (Gaussian units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EMSource {
    pub rho: Complex64,
    pub j_vec: [Complex64; 3],
}

impl EMSource {
    pub fn vacuum() -> EMSource {
        EMSource {
            rho: C_ZERO,
            j_vec: [C_ZERO; 3],
        }
    }
}

/// Electric and magnetic field of a potential mode plus the Lorentz-gauge
/// residual `(1/c) d phi / dt + (grad . A)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EMFields {
    pub e: [Complex64; 3],
    pub h: [Complex64; 3],
    pub gauge_residual: Complex64,
}

fn cross3(x: &[Complex64; 3], y: &[Complex64; 3]) -> [Complex64; 3] {
    [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ]
}

fn dot3(x: &[Complex64; 3], y: &[Complex64; 3]) -> Complex64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn max_norm3(x: &[Complex64; 3]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Field definitions on the mode: `E = -(1/c) dA/dt - grad phi` and
/// `H = -i [grad x A]`, where the bracket is the algebra's cross product
/// carrying its factor i, so `H` reduces to the plain curl of `A`.
pub fn em_fields(pot: &EMPotential, c: f64, convention: PhaseSign) -> EMFields {
    let tau = convention.time_factor(pot.omega);
    let gamma = [
        convention.grad_factor(pot.kvec[0]),
        convention.grad_factor(pot.kvec[1]),
        convention.grad_factor(pot.kvec[2]),
    ];
    let mut e = [C_ZERO; 3];
    for j in 0..3 {
        e[j] = -(tau / c) * pot.a_vec[j] - gamma[j] * pot.phi;
    }
    let h = cross3(&gamma, &pot.a_vec);
    let gauge_residual = (tau / c) * pot.phi + dot3(&gamma, &pot.a_vec);
    EMFields {
        e,
        h,
        gauge_residual,
    }
}

/// The potential as a mode amplitude: `i e_t phi + e_r A`.
pub fn em_potential_amplitude(pot: &EMPotential) -> Sedeon {
    let mut s = Sedeon::zero();
    *s.at_mut(1, 0) = C_I * pot.phi;
    for j in 0..3 {
        *s.at_mut(2, j + 1) = pot.a_vec[j];
    }
    s
}

/// The source as a mode amplitude: `-i e_t 4 pi rho - e_r (4 pi / c) j`.
pub fn em_source_amplitude(src: &EMSource, c: f64) -> Sedeon {
    let four_pi = 4.0 * std::f64::consts::PI;
    let mut s = Sedeon::zero();
    *s.at_mut(1, 0) = -C_I * four_pi * src.rho;
    for j in 0..3 {
        *s.at_mut(2, j + 1) = -(four_pi / c) * src.j_vec[j];
    }
    s
}

/// Check the reduction of one massless operator application on an
/// electromagnetic potential: the result must equal
/// `-(gauge residual) + e_tr E - i H` as a sedeon. With the Lorentz gauge
/// satisfied this is the pure field-intensity form. Returns the fields and
/// a two-entry report (reduction identity, gauge residual).
pub fn em_reduction_report(
    pot: &EMPotential,
    c: f64,
    convention: PhaseSign,
) -> (EMFields, ResidualReport) {
    let fields = em_fields(pot, c, convention);
    let params = WaveOperatorParams::new(0.0, c, convention).expect("valid parameters");
    let mode = PlaneWaveField {
        amplitude: em_potential_amplitude(pot),
        omega: pot.omega,
        kvec: pot.kvec,
    };
    let applied = apply_wave_operator(&mode, &params).amplitude;

    let mut expected = Sedeon::zero();
    *expected.at_mut(0, 0) = -fields.gauge_residual;
    for j in 0..3 {
        *expected.at_mut(3, j + 1) = fields.e[j];
        *expected.at_mut(0, j + 1) = -C_I * fields.h[j];
    }

    let mut report = ResidualReport::new();
    report.record(
        "em.operator_reduction",
        (applied - expected).max_norm(),
        ANALYTIC_TOL,
    );
    report.record(
        "em.lorentz_gauge",
        fields.gauge_residual.norm(),
        ANALYTIC_TOL,
    );
    (fields, report)
}

/// The four Maxwell residuals on a mode, in Gaussian units, with the
/// algebra's cross product (factor i included):
/// electric divergence `(grad . E) - 4 pi rho`, the curl-H equation
/// `[grad x H] - i (1/c) dE/dt - i (4 pi / c) j`, the curl-E equation
/// `[grad x E] + i (1/c) dH/dt`, and the magnetic divergence `(grad . H)`.
pub fn maxwell_residuals(
    e: &[Complex64; 3],
    h: &[Complex64; 3],
    source: &EMSource,
    omega: f64,
    kvec: [f64; 3],
    c: f64,
    convention: PhaseSign,
) -> ResidualReport {
    let tau = convention.time_factor(omega);
    let gamma = [
        convention.grad_factor(kvec[0]),
        convention.grad_factor(kvec[1]),
        convention.grad_factor(kvec[2]),
    ];
    let four_pi = 4.0 * std::f64::consts::PI;

    let gauss_e = dot3(&gamma, e) - four_pi * source.rho;

    let curl_h = cross3(&gamma, h);
    let mut ampere = [C_ZERO; 3];
    for j in 0..3 {
        ampere[j] = C_I * curl_h[j] - C_I * (tau / c) * e[j] - C_I * (four_pi / c) * source.j_vec[j];
    }

    let curl_e = cross3(&gamma, e);
    let mut faraday = [C_ZERO; 3];
    for j in 0..3 {
        faraday[j] = C_I * curl_e[j] + C_I * (tau / c) * h[j];
    }

    let gauss_h = dot3(&gamma, h);

    let mut report = ResidualReport::new();
    report.record("maxwell.gauss_electric", gauss_e.norm(), ANALYTIC_TOL);
    report.record("maxwell.ampere", max_norm3(&ampere), ANALYTIC_TOL);
    report.record("maxwell.faraday", max_norm3(&faraday), ANALYTIC_TOL);
    report.record("maxwell.gauss_magnetic", gauss_h.norm(), ANALYTIC_TOL);
    report
}

/// Residual of the first-order Dirac-type equation: a single operator
/// application. Zero means the mode has vanishing field intensities.
pub fn dirac_residual(field: &PlaneWaveField, params: &WaveOperatorParams) -> ResidualReport {
    let applied = apply_wave_operator(field, params);
    let mut report = ResidualReport::new();
    report.record(
        "dirac.first_order",
        applied.amplitude.max_norm(),
        ANALYTIC_TOL,
    );
    report
}

/// The 16x16 left-regular matrix of the materialized operator. Singular
/// exactly on shell (its square is the dispersion factor times the
/// identity), so kernel modes exist there and only there.
pub fn dirac_operator_matrix(
    omega: f64,
    kvec: [f64; 3],
    params: &WaveOperatorParams,
) -> Matrix16 {
    left_regular_matrix(&operator_sedeon(omega, kvec, params))
}

/// A closed-form kernel amplitude of the massless operator on the
/// `w = +c |k|` shell: `1 - e_tr khat`. Flipping the phase convention flips
/// the whole operator, so the kernel is the same under both.
pub fn massless_null_amplitude(kvec: [f64; 3]) -> Result<Sedeon, SedeonError> {
    let norm = kvec.iter().map(|k| k * k).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(SedeonError::ZeroWaveVector);
    }
    let mut s = Sedeon::one();
    for (j, &k) in kvec.iter().enumerate() {
        *s.at_mut(3, j + 1) = Complex64::new(-k / norm, 0.0);
    }
    Ok(s)
}

/// A time-harmonic field sampled on a uniform 1-D grid along x, together
/// with the generating mode. Central differences need interior points, so at
/// least 5 samples are required, and the mode may only vary along x.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField1D {
    x0: f64,
    h: f64,
    mode: PlaneWaveField,
    convention: PhaseSign,
    samples: Vec<Sedeon>,
}

impl GridField1D {
    pub fn sample_mode(
        mode: &PlaneWaveField,
        params: &WaveOperatorParams,
        x0: f64,
        h: f64,
        count: usize,
    ) -> Result<GridField1D, SedeonError> {
        if count < 5 {
            return Err(SedeonError::GridTooSmall { count });
        }
        if !(x0.is_finite() && h.is_finite()) || h <= 0.0 {
            return Err(SedeonError::NonFinite {
                context: "grid geometry",
            });
        }
        if mode.kvec[1] != 0.0 || mode.kvec[2] != 0.0 {
            return Err(SedeonError::GridNotAxial);
        }
        let gamma = params.convention.grad_factor(mode.kvec[0]);
        let samples = (0..count)
            .map(|j| {
                let x = x0 + j as f64 * h;
                mode.amplitude.scale((gamma * x).exp())
            })
            .collect();
        Ok(GridField1D {
            x0,
            h,
            mode: *mode,
            convention: params.convention,
            samples,
        })
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn omega(&self) -> f64 {
        self.mode.omega
    }

    pub fn samples(&self) -> &[Sedeon] {
        &self.samples
    }

    pub fn mode(&self) -> &PlaneWaveField {
        &self.mode
    }

    /// Spatial phase of the mode at grid point j, identical to the factor
    /// used during sampling.
    fn phase(&self, j: usize) -> Complex64 {
        let gamma = self.convention.grad_factor(self.mode.kvec[0]);
        let x = self.x0 + j as f64 * self.h;
        (gamma * x).exp()
    }
}

/// First-order operator applied on the grid: analytic time derivative,
/// 3-point central difference along x, boundary points excluded. Returns
/// one value per interior point.
fn grid_apply(grid: &GridField1D, params: &WaveOperatorParams) -> Vec<Sedeon> {
    let t = time_piece(grid.mode.omega, params);
    let m = mass_piece(params);
    let tm = t + m;
    let grad_unit = Sedeon::unit(2, 1);
    let inv_2h = Complex64::new(1.0 / (2.0 * grid.h), 0.0);
    (1..grid.samples.len() - 1)
        .map(|j| {
            let derivative = (grid.samples[j + 1] - grid.samples[j - 1]).scale(inv_2h);
            tm.product(&grid.samples[j]) - grad_unit.product(&derivative)
        })
        .collect()
}

/// Exact operator values at the interior points of the grid.
fn grid_exact(grid: &GridField1D, params: &WaveOperatorParams) -> Vec<Sedeon> {
    let exact_amp = apply_wave_operator(&grid.mode, params).amplitude;
    (1..grid.samples.len() - 1)
        .map(|j| exact_amp.scale(grid.phase(j)))
        .collect()
}

/// Max deviation of the grid-applied operator from the analytic result over
/// the interior points. The tolerance is the second-order stencil bound
/// `|sin(k h)/h - k| * ||A||` with a small safety margin, so an exactly
/// sampled mode always passes and anything worse than the stencil error
/// does not.
pub fn grid_first_order_residual(
    grid: &GridField1D,
    params: &WaveOperatorParams,
) -> ResidualReport {
    let applied = grid_apply(grid, params);
    let exact = grid_exact(grid, params);
    let residual = applied
        .iter()
        .zip(exact.iter())
        .map(|(a, e)| (*a - *e).max_norm())
        .fold(0.0, f64::max);

    let k = grid.mode.kvec[0];
    let amp = grid.mode.amplitude.max_norm();
    let stencil_bound = ((k * grid.h).sin() / grid.h - k).abs() * amp;
    let scale = amp * (1.0 + grid.mode.omega.abs() / params.c + k.abs() + params.mass_coeff);
    let tolerance = stencil_bound * 1.01 + 1e-12 * (1.0 + scale);

    let mut report = ResidualReport::new();
    report.record("grid.first_order_stencil", residual, tolerance);
    report
}

/// Outcome of a step-halving convergence study.
#[derive(Debug, Clone, PartialEq)]
pub struct GridConvergence {
    pub step_sizes: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Observed orders between consecutive levels, `log2(r_i / r_{i+1})`.
    pub orders: Vec<f64>,
    /// Max deviation of the Richardson-extrapolated operator values from the
    /// analytic ones at the coarse interior points.
    pub richardson_residual: f64,
}

/// Apply the grid operator at `levels` step-halved resolutions, measure the
/// convergence order of the residual and Richardson-extrapolate the finest
/// levels against the analytic operator. Grids share their endpoints, so
/// coarse points coincide bitwise with even fine points.
pub fn grid_convergence(
    mode: &PlaneWaveField,
    params: &WaveOperatorParams,
    x0: f64,
    coarse_h: f64,
    coarse_count: usize,
    levels: usize,
) -> Result<GridConvergence, SedeonError> {
    assert!(levels >= 2, "a convergence study needs at least two levels");
    let mut step_sizes = Vec::new();
    let mut residuals = Vec::new();
    // Interior values on each level, restricted to coarse interior points.
    let mut coarse_values: Vec<Vec<Sedeon>> = Vec::new();
    let mut exact_at_coarse: Vec<Sedeon> = Vec::new();

    for level in 0..levels {
        let stride = 1usize << level;
        let h = coarse_h / stride as f64;
        let count = (coarse_count - 1) * stride + 1;
        let grid = GridField1D::sample_mode(mode, params, x0, h, count)?;
        let applied = grid_apply(&grid, params);
        let exact = grid_exact(&grid, params);
        let residual = applied
            .iter()
            .zip(exact.iter())
            .map(|(a, e)| (*a - *e).max_norm())
            .fold(0.0, f64::max);
        step_sizes.push(h);
        residuals.push(residual);

        // Coarse interior point j sits at fine interior index j*stride - 1
        // of the interior array (which starts at sample index 1).
        let restricted: Vec<Sedeon> = (1..coarse_count - 1)
            .map(|j| applied[j * stride - 1])
            .collect();
        if level == 0 {
            exact_at_coarse = (1..coarse_count - 1).map(|j| exact[j - 1]).collect();
        }
        coarse_values.push(restricted);
    }

    let orders = residuals
        .windows(2)
        .map(|w| (w[0] / w[1]).log2())
        .collect();

    // Richardson extrapolation over the finest levels: one halving step
    // cancels the h^2 term, a second cancels h^4.
    let refine = |coarse: &[Sedeon], fine: &[Sedeon], weight: f64| -> Vec<Sedeon> {
        coarse
            .iter()
            .zip(fine.iter())
            .map(|(c, f)| (*f * weight - *c).scale(Complex64::new(1.0 / (weight - 1.0), 0.0)))
            .collect()
    };
    let extrapolated = if levels >= 3 {
        let n = coarse_values.len();
        let first = refine(&coarse_values[n - 3], &coarse_values[n - 2], 4.0);
        let second = refine(&coarse_values[n - 2], &coarse_values[n - 1], 4.0);
        refine(&first, &second, 16.0)
    } else {
        refine(&coarse_values[0], &coarse_values[1], 4.0)
    };
    let richardson_residual = extrapolated
        .iter()
        .zip(exact_at_coarse.iter())
        .map(|(r, e)| (*r - *e).max_norm())
        .fold(0.0, f64::max);

    Ok(GridConvergence {
        step_sizes,
        residuals,
        orders,
        richardson_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::GRID_EXTRAP_TOL;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mixed_amplitude() -> Sedeon {
        Sedeon::one().scale(c64(0.5, -0.25))
            + Sedeon::unit(0, 1).scale(c64(1.0, 0.5))
            + Sedeon::unit(1, 2).scale(c64(-0.75, 0.125))
            + Sedeon::unit(2, 0).scale(c64(0.25, 1.0))
            + Sedeon::unit(3, 3).scale(c64(0.0, -0.5))
    }

    #[test]
    fn constant_field_keeps_only_the_mass_term() {
        let params = WaveOperatorParams::natural(2.5).unwrap();
        let field = PlaneWaveField::new(Sedeon::one(), 0.0, [0.0; 3]).unwrap();
        let applied = apply_wave_operator(&field, &params);
        let expected = Sedeon::unit(3, 0).scale(c64(0.0, -2.5));
        assert_eq!(applied.amplitude, expected);
    }

    #[test]
    fn double_application_is_the_dispersion_scalar() {
        // Integer parameters keep every contribution exact.
        let params = WaveOperatorParams::natural(0.0).unwrap();
        let field = PlaneWaveField::new(mixed_amplitude(), 2.0, [1.0, 0.0, 0.0]).unwrap();
        let twice = apply_wave_operator(&apply_wave_operator(&field, &params), &params);
        let factor = dispersion_factor(2.0, [1.0, 0.0, 0.0], &params);
        assert_eq!(factor, 3.0);
        assert_eq!(twice.amplitude, field.amplitude.scale(c64(3.0, 0.0)));
    }

    #[test]
    fn double_application_vanishes_exactly_on_pythagorean_shell() {
        let params = WaveOperatorParams::natural(4.0).unwrap();
        let field = PlaneWaveField::new(mixed_amplitude(), 5.0, [3.0, 0.0, 0.0]).unwrap();
        let twice = apply_wave_operator(&apply_wave_operator(&field, &params), &params);
        assert!(twice.amplitude.is_zero());
        assert_eq!(dispersion_factor(5.0, [3.0, 0.0, 0.0], &params), 0.0);
    }

    #[test]
    fn double_application_scalar_under_both_conventions() {
        for convention in [PhaseSign::Plus, PhaseSign::Minus] {
            let params = WaveOperatorParams::new(1.5, 1.0, convention).unwrap();
            let field =
                PlaneWaveField::new(mixed_amplitude(), 0.7, [0.3, -0.4, 1.1]).unwrap();
            let twice = apply_wave_operator(&apply_wave_operator(&field, &params), &params);
            let factor = dispersion_factor(0.7, [0.3, -0.4, 1.1], &params);
            let deviation =
                (twice.amplitude - field.amplitude.scale(c64(factor, 0.0))).max_norm();
            assert!(deviation <= 1e-12 * field.amplitude.max_norm().max(1.0));
        }
    }

    #[test]
    fn intensities_match_operator_decomposition() {
        for convention in [PhaseSign::Plus, PhaseSign::Minus] {
            let params = WaveOperatorParams::new(0.8, 2.0, convention).unwrap();
            let field = PlaneWaveField::new(mixed_amplitude(), 1.3, [0.2, 0.9, -0.5]).unwrap();
            let fi = field_intensities(&field, &params);
            let (scalar, vector) = apply_wave_operator(&field, &params).amplitude.decompose();
            assert!((fi.scalar.amplitude - scalar).max_norm() <= 1e-12);
            assert!((fi.vector.amplitude - vector).max_norm() <= 1e-12);
            assert!(fi.scalar.amplitude.is_pure_scalar());
            assert!(fi.vector.amplitude.is_pure_vector());
        }
    }

    #[test]
    fn constant_scalar_potential_intensity() {
        let params = WaveOperatorParams::natural(3.0).unwrap();
        let field = PlaneWaveField::new(Sedeon::one(), 0.0, [0.0; 3]).unwrap();
        let fi = field_intensities(&field, &params);
        assert_eq!(fi.scalar.amplitude, Sedeon::unit(3, 0).scale(c64(0.0, -3.0)));
        assert!(fi.vector.amplitude.is_zero());
    }

    #[test]
    fn first_order_residual_reads_off_source() {
        let params = WaveOperatorParams::natural(1.0).unwrap();
        let zero_mode = PlaneWaveField::new(Sedeon::zero(), 0.4, [0.2, 0.0, 0.0]).unwrap();
        let fi = field_intensities(&zero_mode, &params);

        let zero = Sedeon::zero();
        let (r0, rv) = first_order_residual_amplitudes(&fi, &zero, &params);
        assert!(r0.is_zero() && rv.is_zero());

        let source = Sedeon::unit(1, 0).scale(c64(2.0, 1.0)) + Sedeon::unit(0, 2);
        let (r0, rv) = first_order_residual_amplitudes(&fi, &source, &params);
        assert_eq!(r0 + rv, -source);
    }

    #[test]
    fn source_free_on_shell_mode_solves_the_first_order_system() {
        let params = WaveOperatorParams::natural(1.0).unwrap();
        let kvec = [3.0, 0.0, 0.0];
        let omega = on_shell_omega(kvec, &params);
        let field = PlaneWaveField::new(mixed_amplitude(), omega, kvec).unwrap();
        let fi = field_intensities(&field, &params);
        let report = first_order_residual(&fi, &Sedeon::zero(), &params);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn second_order_residual_off_shell_magnitude() {
        // mass 0, k = (1,0,0), w = 2: the residual is 3x the amplitude.
        let params = WaveOperatorParams::natural(0.0).unwrap();
        let field = PlaneWaveField::new(Sedeon::one(), 2.0, [1.0, 0.0, 0.0]).unwrap();
        let residual = second_order_residual_amplitude(&field, &Sedeon::zero(), &params);
        assert_eq!(residual, Sedeon::one().scale(c64(3.0, 0.0)));
        assert_eq!(residual.max_norm(), 3.0);

        // W = 0 reads off the source.
        let source = Sedeon::unit(2, 2).scale(c64(0.5, 0.5));
        let zero_mode = PlaneWaveField::new(Sedeon::zero(), 2.0, [1.0, 0.0, 0.0]).unwrap();
        assert_eq!(
            second_order_residual_amplitude(&zero_mode, &source, &params),
            -source
        );
    }

    #[test]
    fn second_order_report_consistent_with_sourced_mode() {
        // Build a source that the mode satisfies exactly, then check all
        // report entries pass.
        let params = WaveOperatorParams::natural(2.0).unwrap();
        let field = PlaneWaveField::new(mixed_amplitude(), 1.5, [0.5, 0.25, 0.0]).unwrap();
        let source = second_order_residual_amplitude(&field, &Sedeon::zero(), &params);
        let report = second_order_residual(&field, &source, &params);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn multimode_superposition_sums_residuals() {
        let params = WaveOperatorParams::natural(1.0).unwrap();
        let k1 = [3.0, 0.0, 0.0];
        let k2 = [0.0, 4.0, 0.0];
        let modes = [
            (
                PlaneWaveField::new(mixed_amplitude(), on_shell_omega(k1, &params), k1).unwrap(),
                Sedeon::zero(),
            ),
            (
                PlaneWaveField::new(Sedeon::unit(0, 1), on_shell_omega(k2, &params), k2).unwrap(),
                Sedeon::zero(),
            ),
        ];
        let report = multimode_second_order_residual(&modes, &params);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn em_transverse_mode_fields() {
        let k = 2.0;
        let a0 = c64(1.0, 0.0);
        let pot = EMPotential {
            phi: C_ZERO,
            a_vec: [C_ZERO, a0, C_ZERO],
            omega: k,
            kvec: [k, 0.0, 0.0],
        };
        let fields = em_fields(&pot, 1.0, PhaseSign::Plus);
        // E = -(iw/c) A along y; H = -i (k x A) along z; gauge clean.
        assert_eq!(fields.e, [C_ZERO, c64(0.0, -k), C_ZERO]);
        assert_eq!(fields.h, [C_ZERO, C_ZERO, c64(0.0, -k)]);
        assert_eq!(fields.gauge_residual, C_ZERO);
    }

    #[test]
    fn em_static_uniform_potential_gives_nothing() {
        let pot = EMPotential {
            phi: c64(3.0, 0.0),
            a_vec: [C_ZERO; 3],
            omega: 0.0,
            kvec: [0.0; 3],
        };
        let fields = em_fields(&pot, 1.0, PhaseSign::Plus);
        assert_eq!(fields.e, [C_ZERO; 3]);
        assert_eq!(fields.h, [C_ZERO; 3]);
        assert_eq!(fields.gauge_residual, C_ZERO);
    }

    #[test]
    fn em_reduction_and_maxwell_vacuum() {
        for convention in [PhaseSign::Plus, PhaseSign::Minus] {
            let k = 1.5;
            let pot = EMPotential {
                phi: C_ZERO,
                a_vec: [C_ZERO, c64(0.7, -0.2), c64(0.1, 0.4)],
                omega: k,
                kvec: [k, 0.0, 0.0],
            };
            let (fields, report) = em_reduction_report(&pot, 1.0, convention);
            assert!(report.all_pass(), "{convention:?}: {report:?}");
            let maxwell = maxwell_residuals(
                &fields.e,
                &fields.h,
                &EMSource::vacuum(),
                pot.omega,
                pot.kvec,
                1.0,
                convention,
            );
            assert!(maxwell.all_pass(), "{convention:?}: {maxwell:?}");
        }
    }

    #[test]
    fn maxwell_off_shell_fails_only_the_sourced_curl_equation() {
        // For potential-derived fields the divergence equations are
        // transversality statements and the curl-E equation is an identity
        // of the potential, all frequency independent; off shell only the
        // curl-H equation picks up a residual.
        let k = 1.0;
        let pot = EMPotential {
            phi: C_ZERO,
            a_vec: [C_ZERO, c64(1.0, 0.0), C_ZERO],
            omega: 1.7 * k,
            kvec: [k, 0.0, 0.0],
        };
        let fields = em_fields(&pot, 1.0, PhaseSign::Plus);
        let report = maxwell_residuals(
            &fields.e,
            &fields.h,
            &EMSource::vacuum(),
            pot.omega,
            pot.kvec,
            1.0,
            PhaseSign::Plus,
        );
        let by_name: std::collections::BTreeMap<_, _> = report
            .entries
            .iter()
            .map(|e| (e.equation.as_str(), e.pass))
            .collect();
        assert!(by_name["maxwell.gauss_electric"]);
        assert!(by_name["maxwell.gauss_magnetic"]);
        assert!(by_name["maxwell.faraday"]);
        assert!(!by_name["maxwell.ampere"]);
    }

    #[test]
    fn massless_null_amplitude_is_annihilated() {
        let kvec = [0.6, -0.8, 0.0];
        let amp = massless_null_amplitude(kvec).unwrap();
        for convention in [PhaseSign::Plus, PhaseSign::Minus] {
            let params = WaveOperatorParams::new(0.0, 1.0, convention).unwrap();
            let omega = on_shell_omega(kvec, &params);
            let field = PlaneWaveField::new(amp, omega, kvec).unwrap();
            let report = dirac_residual(&field, &params);
            assert!(report.all_pass(), "{convention:?}: {report:?}");
        }
        assert!(matches!(
            massless_null_amplitude([0.0; 3]),
            Err(SedeonError::ZeroWaveVector)
        ));
    }

    #[test]
    fn dirac_matrix_singular_on_shell_only() {
        let params = WaveOperatorParams::natural(1.0).unwrap();
        let kvec = [1.0, 0.0, 0.0];
        let on_shell = dirac_operator_matrix(on_shell_omega(kvec, &params), kvec, &params);
        assert!(on_shell.smallest_singular_value() < 1e-10);
        let off_shell = dirac_operator_matrix(3.0, kvec, &params);
        assert!(off_shell.smallest_singular_value() > 0.1);
    }

    #[test]
    fn grid_rejects_bad_setups() {
        let params = WaveOperatorParams::natural(0.0).unwrap();
        let mode = PlaneWaveField::new(Sedeon::one(), 1.0, [1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            GridField1D::sample_mode(&mode, &params, 0.0, 0.1, 4),
            Err(SedeonError::GridTooSmall { count: 4 })
        ));
        let skew = PlaneWaveField::new(Sedeon::one(), 1.0, [1.0, 0.5, 0.0]).unwrap();
        assert!(matches!(
            GridField1D::sample_mode(&skew, &params, 0.0, 0.1, 9),
            Err(SedeonError::GridNotAxial)
        ));
    }

    #[test]
    fn constant_grid_field_has_exactly_zero_residual() {
        let params = WaveOperatorParams::natural(0.0).unwrap();
        let mode = PlaneWaveField::new(mixed_amplitude(), 0.0, [0.0; 3]).unwrap();
        let grid = GridField1D::sample_mode(&mode, &params, -1.0, 0.25, 9).unwrap();
        let report = grid_first_order_residual(&grid, &params);
        assert_eq!(report.entries[0].max_residual, 0.0);
        assert!(report.all_pass());
    }

    #[test]
    fn grid_residual_halves_by_factor_four() {
        let params = WaveOperatorParams::natural(0.5).unwrap();
        let mode = PlaneWaveField::new(mixed_amplitude(), 0.9, [1.0, 0.0, 0.0]).unwrap();
        let study = grid_convergence(&mode, &params, 0.0, 0.1, 21, 2).unwrap();
        let ratio = study.residuals[0] / study.residuals[1];
        assert!(
            (3.6..=4.4).contains(&ratio),
            "second-order ratio out of range: {ratio}"
        );
    }

    #[test]
    fn grid_richardson_matches_analytic_operator() {
        let params = WaveOperatorParams::natural(0.5).unwrap();
        let mode = PlaneWaveField::new(mixed_amplitude(), 0.9, [1.0, 0.0, 0.0]).unwrap();
        let study = grid_convergence(&mode, &params, 0.0, 0.1, 21, 3).unwrap();
        for order in &study.orders {
            assert!((order - 2.0).abs() <= 0.2, "order {order}");
        }
        assert!(study.richardson_residual <= GRID_EXTRAP_TOL);
    }

    #[test]
    fn params_validation() {
        assert!(matches!(
            WaveOperatorParams::natural(-1.0),
            Err(SedeonError::NegativeMass { .. })
        ));
        assert!(matches!(
            WaveOperatorParams::new(1.0, 0.0, PhaseSign::Plus),
            Err(SedeonError::NonPositiveLightSpeed { .. })
        ));
    }
}
