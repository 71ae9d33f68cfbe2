//! Space rotations, space-time inversions and Lorentz boosts.
//!
//! All transformations are sandwich products `X' = U* X U` built from pairs
//! of mutually inverse operator sedeons. The closed-form expansions are kept
//! alongside as independent cross-check evaluators; the sandwich product is
//! normative.

use crate::algebra::{scalar_product, vector_product, Complex64, Sedeon};
use crate::error::SedeonError;

const AXIS_NORM_TOL: f64 = 1e-9;

fn validated_axis(axis: [f64; 3], context: &'static str) -> Result<[f64; 3], SedeonError> {
    if !axis.iter().all(|x| x.is_finite()) {
        return Err(SedeonError::NonFinite { context });
    }
    let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
    if (norm - 1.0).abs() > AXIS_NORM_TOL {
        return Err(SedeonError::NonUnitAxis { norm });
    }
    Ok([axis[0] / norm, axis[1] / norm, axis[2] / norm])
}

/// Absolute-vector sedeon with the given real components.
fn absolute_vector(v: [f64; 3]) -> Sedeon {
    let mut s = Sedeon::zero();
    for (j, &x) in v.iter().enumerate() {
        *s.at_mut(0, j + 1) = Complex64::new(x, 0.0);
    }
    s
}

/// Rotation by `theta` around a real unit axis of absolute vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotor {
    theta: f64,
    axis: [f64; 3],
}

impl Rotor {
    /// Axes within 1e-9 of unit length are renormalized; anything else is
    /// rejected.
    pub fn new(theta: f64, axis: [f64; 3]) -> Result<Rotor, SedeonError> {
        if !theta.is_finite() {
            return Err(SedeonError::NonFinite { context: "rotor angle" });
        }
        Ok(Rotor {
            theta,
            axis: validated_axis(axis, "rotor axis")?,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }
}

/// The operator pair `(U, U*)` for a rotation:
/// `U = cos(theta/2) + i sin(theta/2) n`, with `U*` its componentwise
/// complex conjugate, satisfying `U* U = U U* = 1`.
pub fn rotor_sedeon(rotor: &Rotor) -> (Sedeon, Sedeon) {
    let half = 0.5 * rotor.theta;
    let mut u = Sedeon::scalar(Complex64::new(half.cos(), 0.0));
    let s = half.sin();
    for (j, &n) in rotor.axis.iter().enumerate() {
        *u.at_mut(0, j + 1) = Complex64::new(0.0, s * n);
    }
    (u, u.conj())
}

/// Sandwich rotation `U* V U`. The sedeon-scalar part is untouched; the
/// sedeon-vector part rotates by `theta` around the axis.
pub fn rotate(v: &Sedeon, rotor: &Rotor) -> Sedeon {
    let (u, u_conj) = rotor_sedeon(rotor);
    u_conj.product(v).product(&u)
}

/// Closed-form rotation
/// `V_0 + V cos(theta) + (1 - cos(theta))(n . V)n - i sin(theta) [n x V]`,
/// kept as an independent cross-check of [`rotate`].
pub fn rotate_closed_form(v: &Sedeon, rotor: &Rotor) -> Sedeon {
    let (scalar, vector) = v.decompose();
    let n = absolute_vector(rotor.axis);
    let cos = rotor.theta.cos();
    let sin = rotor.theta.sin();
    let dot = scalar_product(&n, &vector).expect("axis and vector parts are pure vectors");
    let cross = vector_product(&n, &vector).expect("axis and vector parts are pure vectors");
    scalar
        + vector * cos
        + dot.product(&n) * (1.0 - cos)
        + cross.scale(Complex64::new(0.0, -sin))
}

/// The three sandwich inversions, named by what they reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Inversion {
    Time,
    Space,
    SpaceTime,
}

impl Inversion {
    /// The space-time unit that implements the inversion as `u V u`.
    pub fn sandwich_unit(self) -> Sedeon {
        match self {
            Inversion::Time => Sedeon::unit(2, 0),
            Inversion::Space => Sedeon::unit(1, 0),
            Inversion::SpaceTime => Sedeon::unit(3, 0),
        }
    }

    /// Signs applied to the four space-time blocks (n = 0..3).
    pub fn sign_pattern(self) -> [f64; 4] {
        match self {
            Inversion::Time => [1.0, -1.0, 1.0, -1.0],
            Inversion::Space => [1.0, 1.0, -1.0, -1.0],
            Inversion::SpaceTime => [1.0, -1.0, -1.0, 1.0],
        }
    }
}

/// Space-time inversion as the literal sandwich product `u V u`.
pub fn invert(v: &Sedeon, mode: Inversion) -> Sedeon {
    let u = mode.sandwich_unit();
    u.product(v).product(&u)
}

/// The sign-pattern form of the same inversion, used to cross-check
/// [`invert`].
pub fn invert_sign_pattern(v: &Sedeon, mode: Inversion) -> Sedeon {
    let signs = mode.sign_pattern();
    let mut out = *v;
    for n in 0..4 {
        for k in 0..4 {
            let c = out.at(n, k);
            *out.at_mut(n, k) = Complex64::new(signs[n] * c.re, signs[n] * c.im);
        }
    }
    out
}

/// A boost with rapidity `vartheta` along a real unit direction; the
/// velocity ratio is `v/c = tanh(2 vartheta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Boost {
    rapidity: f64,
    direction: [f64; 3],
}

impl Boost {
    pub fn from_rapidity(rapidity: f64, direction: [f64; 3]) -> Result<Boost, SedeonError> {
        if !rapidity.is_finite() {
            return Err(SedeonError::NonFinite { context: "boost rapidity" });
        }
        Ok(Boost {
            rapidity,
            direction: validated_axis(direction, "boost direction")?,
        })
    }

    /// Build from the velocity ratio `beta = v/c`; internally
    /// `vartheta = atanh(beta) / 2`.
    pub fn from_beta(beta: f64, direction: [f64; 3]) -> Result<Boost, SedeonError> {
        if !beta.is_finite() || beta.abs() >= 1.0 {
            return Err(SedeonError::SpeedLimit { beta });
        }
        Boost::from_rapidity(0.5 * beta.atanh(), direction)
    }

    pub fn rapidity(&self) -> f64 {
        self.rapidity
    }

    pub fn direction(&self) -> [f64; 3] {
        self.direction
    }

    pub fn beta(&self) -> f64 {
        (2.0 * self.rapidity).tanh()
    }

    pub fn inverse(&self) -> Boost {
        Boost {
            rapidity: -self.rapidity,
            direction: self.direction,
        }
    }
}

/// The operator pair `(L, L*)` for a boost:
/// `L = cosh(vartheta) - e_tr m sinh(vartheta)` and
/// `L* = cosh(vartheta) + e_tr m sinh(vartheta)`, with `L* L = L L* = 1`.
/// Note `L*` flips the vector term rather than conjugating components: all
/// components of `L` are real.
pub fn boost_sedeon(boost: &Boost) -> (Sedeon, Sedeon) {
    let ch = boost.rapidity.cosh();
    let sh = boost.rapidity.sinh();
    let mut l = Sedeon::scalar(Complex64::new(ch, 0.0));
    let mut l_conj = l;
    for (j, &m) in boost.direction.iter().enumerate() {
        *l.at_mut(3, j + 1) = Complex64::new(-sh * m, 0.0);
        *l_conj.at_mut(3, j + 1) = Complex64::new(sh * m, 0.0);
    }
    (l, l_conj)
}

/// Sandwich boost `L* V L` of a full sedeon. The absolute-scalar and
/// space-time-scalar parts are invariant.
pub fn lorentz_transform(v: &Sedeon, boost: &Boost) -> Sedeon {
    let (l, l_conj) = boost_sedeon(boost);
    l_conj.product(v).product(&l)
}

/// An event (t, r) with a configurable speed of light (1 in natural units).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EventVector {
    pub t: f64,
    pub r: [f64; 3],
    pub c: f64,
}

impl EventVector {
    pub fn new(t: f64, r: [f64; 3], c: f64) -> Result<EventVector, SedeonError> {
        if !t.is_finite() || !r.iter().all(|x| x.is_finite()) || !c.is_finite() {
            return Err(SedeonError::NonFinite { context: "event vector" });
        }
        if c <= 0.0 {
            return Err(SedeonError::NonPositiveLightSpeed { c });
        }
        Ok(EventVector { t, r, c })
    }

    /// Natural units, c = 1.
    pub fn natural(t: f64, r: [f64; 3]) -> Result<EventVector, SedeonError> {
        EventVector::new(t, r, 1.0)
    }
}

/// The event as a sedeon: `i e_t c t + e_r r`.
pub fn event_sedeon(event: &EventVector) -> Sedeon {
    let mut s = Sedeon::zero();
    *s.at_mut(1, 0) = Complex64::new(0.0, event.c * event.t);
    for (j, &x) in event.r.iter().enumerate() {
        *s.at_mut(2, j + 1) = Complex64::new(x, 0.0);
    }
    s
}

const EVENT_SHAPE_TOL: f64 = 1e-9;

/// The squared event, `-c^2 t^2 + x^2 + y^2 + z^2`, taken as the scalar part
/// of `S S`. The input must be event-shaped: only the `e_t` scalar slot and
/// the `e_r` vector slots may be populated (tiny numerical residue from a
/// prior transformation is tolerated).
pub fn interval(s: &Sedeon) -> Result<Complex64, SedeonError> {
    let mut event_scale: f64 = 0.0;
    let mut stray: f64 = 0.0;
    for n in 0..4 {
        for k in 0..4 {
            let mag = s.at(n, k).norm();
            if (n, k) == (1, 0) || (n == 2 && k > 0) {
                event_scale = event_scale.max(mag);
            } else {
                stray = stray.max(mag);
            }
        }
    }
    if stray > EVENT_SHAPE_TOL * (1.0 + event_scale) {
        return Err(SedeonError::NotEventShaped { magnitude: stray });
    }
    Ok(s.product(s).at(0, 0))
}

/// Boost an event and read the transformed time and coordinates back off the
/// `e_t` and `e_r` slots of the sandwich product.
pub fn boost_event(event: &EventVector, boost: &Boost) -> (f64, [f64; 3]) {
    let transformed = lorentz_transform(&event_sedeon(event), boost);
    let t = transformed.at(1, 0).im / event.c;
    let r = [
        transformed.at(2, 1).re,
        transformed.at(2, 2).re,
        transformed.at(2, 3).re,
    ];
    (t, r)
}

/// Textbook boost of an event:
/// `t' = (t - x v / c^2) / sqrt(1 - v^2/c^2)`, `x' = (x - t v) / sqrt(...)`
/// with x the coordinate along the boost direction, transverse coordinates
/// unchanged. Cross-check for [`boost_event`].
pub fn boost_event_closed_form(event: &EventVector, boost: &Boost) -> (f64, [f64; 3]) {
    let m = boost.direction();
    let v = boost.beta() * event.c;
    let gamma = 1.0 / (1.0 - (v / event.c) * (v / event.c)).sqrt();
    let x = event.r[0] * m[0] + event.r[1] * m[1] + event.r[2] * m[2];
    let t_prime = gamma * (event.t - x * v / (event.c * event.c));
    let x_prime = gamma * (x - event.t * v);
    let mut r_prime = [0.0; 3];
    for j in 0..3 {
        r_prime[j] = event.r[j] - x * m[j] + x_prime * m[j];
    }
    (t_prime, r_prime)
}

/// One line of the boost closed-form audit: a component sector, the
/// magnitude of the deviation between the closed form and the sandwich
/// product, and the verdict at the given tolerance.
#[derive(Debug, Clone)]
pub struct BoostAuditLine {
    pub sector: &'static str,
    pub deviation: f64,
    pub agrees: bool,
}

/// Names of the eight component sectors audited by
/// [`boost_closed_form_audit`], in report order.
pub const BOOST_AUDIT_SECTORS: [&str; 8] = [
    "absolute_scalar",
    "spacetime_scalar",
    "space_scalar",
    "time_scalar",
    "absolute_vector",
    "spacetime_vector",
    "space_vector",
    "time_vector",
];

fn sector_mask(v: &Sedeon, n: usize, vector: bool) -> Sedeon {
    let mut out = Sedeon::zero();
    if vector {
        for k in 1..4 {
            *out.at_mut(n, k) = v.at(n, k);
        }
    } else {
        *out.at_mut(n, 0) = v.at(n, 0);
    }
    out
}

/// Closed-form expansion of the boosted sedeon, assembled sector by sector
/// with the algebra's own products. Barred sector symbols keep their
/// space-time unit attached, so `e_tr`-prefixed terms are genuine sedeon
/// products.
///
/// Sector layout of the returned array matches [`BOOST_AUDIT_SECTORS`].
pub fn lorentz_closed_form_sectors(v: &Sedeon, boost: &Boost) -> [Sedeon; 8] {
    let ch2 = Complex64::new((2.0 * boost.rapidity).cosh(), 0.0);
    let sh2 = Complex64::new((2.0 * boost.rapidity).sinh(), 0.0);
    let sh_sq = Complex64::new(boost.rapidity.sinh().powi(2), 0.0);
    let e_tr = Sedeon::unit(3, 0);
    let m = absolute_vector(boost.direction);

    let scalar = |n: usize| sector_mask(v, n, false);
    let vector = |n: usize| sector_mask(v, n, true);
    let dot_m = |w: &Sedeon| scalar_product(&m, w).expect("pure vector sectors");
    let cross_m = |w: &Sedeon| vector_product(&m, w).expect("pure vector sectors");

    [
        // absolute scalar: invariant
        scalar(0),
        // space-time scalar: invariant
        scalar(3),
        // space scalar: V_r ch(2w) + e_tr (m . V_t) sh(2w)
        scalar(2) * ch2 + e_tr.product(&dot_m(&vector(1))) * sh2,
        // time scalar: V_t ch(2w) + e_tr (m . V_r) sh(2w)
        scalar(1) * ch2 + e_tr.product(&dot_m(&vector(2))) * sh2,
        // absolute vector: V ch(2w) - 2 (m . V) m sh^2 + e_tr [m x V_tr] sh(2w)
        vector(0) * ch2 - dot_m(&vector(0)).product(&m) * (sh_sq * 2.0)
            + e_tr.product(&cross_m(&vector(3))) * sh2,
        // space-time vector: V_tr ch(2w) - 2 (m . V_tr) m sh^2 + e_tr [m x V] sh(2w)
        vector(3) * ch2 - dot_m(&vector(3)).product(&m) * (sh_sq * 2.0)
            + e_tr.product(&cross_m(&vector(0))) * sh2,
        // space vector: V_r + 2 (m . V_r) m sh^2 + e_tr V_t m sh(2w)
        vector(2)
            + dot_m(&vector(2)).product(&m) * (sh_sq * 2.0)
            + e_tr.product(&scalar(1)).product(&m) * sh2,
        // time vector: V_t + 2 (m . V_t) m sh^2 + e_tr V_r m sh(2w)
        vector(1)
            + dot_m(&vector(1)).product(&m) * (sh_sq * 2.0)
            + e_tr.product(&scalar(2)).product(&m) * sh2,
    ]
}

/// Compare, sector by sector, the closed-form expansion against the
/// normative sandwich product on the same input.
pub fn boost_closed_form_audit(v: &Sedeon, boost: &Boost, tol: f64) -> Vec<BoostAuditLine> {
    let sandwich = lorentz_transform(v, boost);
    let closed = lorentz_closed_form_sectors(v, boost);
    let scale = 1.0 + v.max_norm() * (2.0 * boost.rapidity).cosh();
    let sectors: [(usize, bool); 8] = [
        (0, false),
        (3, false),
        (2, false),
        (1, false),
        (0, true),
        (3, true),
        (2, true),
        (1, true),
    ];
    sectors
        .iter()
        .zip(BOOST_AUDIT_SECTORS.iter())
        .zip(closed.iter())
        .map(|((&(n, vector), name), line)| {
            let deviation = (sector_mask(&sandwich, n, vector) - *line).max_norm();
            BoostAuditLine {
                sector: name,
                deviation,
                agrees: deviation <= tol * scale,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-12;

    fn close(a: &Sedeon, b: &Sedeon, tol: f64) -> bool {
        (*a - *b).max_norm() <= tol
    }

    #[test]
    fn rotor_identity_and_full_turn() {
        let id = Rotor::new(0.0, [0.0, 0.0, 1.0]).unwrap();
        let (u, _) = rotor_sedeon(&id);
        assert_eq!(u, Sedeon::one());

        // theta = 2 pi gives U = -1, yet the sandwich is the identity map.
        let full = Rotor::new(2.0 * std::f64::consts::PI, [0.0, 0.0, 1.0]).unwrap();
        let (u, _) = rotor_sedeon(&full);
        assert!(close(&u, &-Sedeon::one(), TOL));
        let v = Sedeon::unit(2, 1) + Sedeon::unit(0, 2).scale(Complex64::new(0.0, 3.0));
        assert!(close(&rotate(&v, &full), &v, 10.0 * TOL));
    }

    #[test]
    fn rotor_quarter_turn_components() {
        let r = Rotor::new(std::f64::consts::FRAC_PI_2, [0.0, 0.0, 1.0]).unwrap();
        let (u, u_conj) = rotor_sedeon(&r);
        let half = std::f64::consts::FRAC_1_SQRT_2;
        assert!((u.at(0, 0).re - half).abs() < TOL);
        assert!((u.at(0, 3).im - half).abs() < TOL);
        assert!(close(&u_conj.product(&u), &Sedeon::one(), TOL));
        assert!(close(&u.product(&u_conj), &Sedeon::one(), TOL));
    }

    #[test]
    fn rotor_rejects_non_unit_axis() {
        assert!(matches!(
            Rotor::new(1.0, [1.0, 1.0, 0.0]),
            Err(SedeonError::NonUnitAxis { .. })
        ));
        // A slightly off axis is renormalized.
        let r = Rotor::new(1.0, [1.0 + 5e-10, 0.0, 0.0]).unwrap();
        assert!((r.axis()[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rotation_quarter_turn_sends_a1_to_a2() {
        let r = Rotor::new(std::f64::consts::FRAC_PI_2, [0.0, 0.0, 1.0]).unwrap();
        let rotated = rotate(&Sedeon::unit(0, 1), &r);
        assert!(close(&rotated, &Sedeon::unit(0, 2), TOL));
        // The axis itself is a fixed point.
        let fixed = rotate(&Sedeon::unit(0, 3), &r);
        assert!(close(&fixed, &Sedeon::unit(0, 3), TOL));
    }

    #[test]
    fn rotation_leaves_scalar_parts_alone() {
        let r = Rotor::new(0.83, [0.6, 0.0, 0.8]).unwrap();
        let v = Sedeon::unit(1, 0).scale(Complex64::new(2.0, -1.0))
            + Sedeon::unit(3, 0).scale(Complex64::new(0.0, 4.0));
        assert!(close(&rotate(&v, &r), &v, 10.0 * TOL));
    }

    #[test]
    fn inversion_signs_and_involution() {
        let e1 = Sedeon::unit(1, 0);
        let e2 = Sedeon::unit(2, 0);
        assert_eq!(invert(&e1, Inversion::Time), -e1);
        assert_eq!(invert(&e2, Inversion::Time), e2);
        for mode in [Inversion::Time, Inversion::Space, Inversion::SpaceTime] {
            for n in 0..4 {
                for k in 0..4 {
                    let b = Sedeon::unit(n, k);
                    assert_eq!(invert(&b, mode), invert_sign_pattern(&b, mode));
                    assert_eq!(invert(&invert(&b, mode), mode), b);
                }
            }
        }
    }

    #[test]
    fn boost_normalization_and_zero_case() {
        let rest = Boost::from_rapidity(0.0, [1.0, 0.0, 0.0]).unwrap();
        let (l, _) = boost_sedeon(&rest);
        assert_eq!(l, Sedeon::one());

        let b = Boost::from_beta(0.6, [1.0, 0.0, 0.0]).unwrap();
        let (l, l_conj) = boost_sedeon(&b);
        assert!(close(&l_conj.product(&l), &Sedeon::one(), TOL));
        assert!(close(&l.product(&l_conj), &Sedeon::one(), TOL));
        assert!((b.beta() - 0.6).abs() < TOL);
    }

    #[test]
    fn boost_rejects_superluminal_beta() {
        assert!(matches!(
            Boost::from_beta(1.0, [1.0, 0.0, 0.0]),
            Err(SedeonError::SpeedLimit { .. })
        ));
        assert!(matches!(
            Boost::from_beta(-1.5, [1.0, 0.0, 0.0]),
            Err(SedeonError::SpeedLimit { .. })
        ));
    }

    #[test]
    fn boost_rapidity_addition_on_shared_axis() {
        let axis = [0.0, 1.0, 0.0];
        let b1 = Boost::from_rapidity(0.3, axis).unwrap();
        let b2 = Boost::from_rapidity(0.45, axis).unwrap();
        let b_sum = Boost::from_rapidity(0.75, axis).unwrap();
        let lhs = boost_sedeon(&b1).0.product(&boost_sedeon(&b2).0);
        assert!(close(&lhs, &boost_sedeon(&b_sum).0, TOL));
    }

    #[test]
    fn event_examples_and_interval() {
        assert!(event_sedeon(&EventVector::natural(0.0, [0.0; 3]).unwrap()).is_zero());

        let e = EventVector::natural(1.0, [1.0, 1.0, 1.0]).unwrap();
        let s = event_sedeon(&e);
        assert_eq!(s.at(1, 0), Complex64::new(0.0, 1.0));
        assert_eq!(s.at(2, 1), Complex64::new(1.0, 0.0));
        assert_eq!(interval(&s).unwrap(), Complex64::new(2.0, 0.0));

        let timelike = EventVector::natural(1.0, [0.0; 3]).unwrap();
        assert_eq!(
            interval(&event_sedeon(&timelike)).unwrap(),
            Complex64::new(-1.0, 0.0)
        );
        let spacelike = EventVector::natural(0.0, [1.0, 0.0, 0.0]).unwrap();
        assert_eq!(
            interval(&event_sedeon(&spacelike)).unwrap(),
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn interval_rejects_non_event_shape() {
        let not_event = Sedeon::one();
        assert!(matches!(
            interval(&not_event),
            Err(SedeonError::NotEventShaped { .. })
        ));
    }

    #[test]
    fn event_vector_rejects_bad_light_speed() {
        assert!(matches!(
            EventVector::new(0.0, [0.0; 3], 0.0),
            Err(SedeonError::NonPositiveLightSpeed { .. })
        ));
    }

    #[test]
    fn boost_event_reference_point() {
        // beta = 0.6, t = x = 1 maps to t' = x' = 0.5.
        let event = EventVector::natural(1.0, [1.0, 0.0, 0.0]).unwrap();
        let boost = Boost::from_beta(0.6, [1.0, 0.0, 0.0]).unwrap();
        let (t, r) = boost_event(&event, &boost);
        assert!((t - 0.5).abs() < TOL);
        assert!((r[0] - 0.5).abs() < TOL);
        assert!(r[1].abs() < TOL && r[2].abs() < TOL);

        let rest = Boost::from_beta(0.0, [1.0, 0.0, 0.0]).unwrap();
        let (t, r) = boost_event(&event, &rest);
        assert!((t - 1.0).abs() < TOL && (r[0] - 1.0).abs() < TOL);
    }

    #[test]
    fn boost_event_keeps_transverse_coordinates() {
        let event = EventVector::natural(0.7, [0.3, -1.2, 2.5]).unwrap();
        let boost = Boost::from_beta(0.9, [1.0, 0.0, 0.0]).unwrap();
        let (_, r) = boost_event(&event, &boost);
        assert!((r[1] + 1.2).abs() < TOL);
        assert!((r[2] - 2.5).abs() < TOL);
    }

    #[test]
    fn closed_form_audit_has_eight_sectors() {
        let v = Sedeon::unit(1, 0) + Sedeon::unit(0, 2) + Sedeon::unit(3, 1);
        let b = Boost::from_beta(0.4, [0.0, 0.0, 1.0]).unwrap();
        let lines = boost_closed_form_audit(&v, &b, TOL);
        assert_eq!(lines.len(), 8);
        for line in &lines {
            assert!(line.agrees, "sector {} deviates {}", line.sector, line.deviation);
        }
    }
}
