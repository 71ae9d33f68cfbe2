//! Property tests for the field lab: the squared operator is the dispersion
//! scalar, the intensity split agrees with the operator, the first-order
//! system closes, and the electromagnetic reduction produces fields that
//! satisfy the Maxwell residuals on the light cone.

use proptest::prelude::*;

use sedeon::algebra::{Complex64, Sedeon};
use sedeon::field_lab::{
    apply_wave_operator, dispersion_factor, em_fields, em_reduction_report, field_intensities,
    first_order_residual_amplitudes, maxwell_residuals, on_shell_omega, EMPotential, EMSource,
    PhaseSign, PlaneWaveField, WaveOperatorParams,
};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn sedeon_from(xs: [f64; 32]) -> Sedeon {
    let mut comps = [c(0.0, 0.0); 16];
    for (i, slot) in comps.iter_mut().enumerate() {
        *slot = c(xs[2 * i], xs[2 * i + 1]);
    }
    Sedeon::from_components(comps)
}

prop_compose! {
    fn any_sedeon()(xs in prop::array::uniform32(-1.0f64..1.0)) -> Sedeon {
        sedeon_from(xs)
    }
}

prop_compose! {
    fn any_mode()(
        amp in any_sedeon(),
        omega in -3.0f64..3.0,
        kx in -2.0f64..2.0,
        ky in -2.0f64..2.0,
        kz in -2.0f64..2.0,
    ) -> PlaneWaveField {
        PlaneWaveField::new(amp, omega, [kx, ky, kz]).unwrap()
    }
}

prop_compose! {
    fn any_params()(
        mass in 0.0f64..2.0,
        minus in any::<bool>(),
    ) -> WaveOperatorParams {
        let convention = if minus { PhaseSign::Minus } else { PhaseSign::Plus };
        WaveOperatorParams::new(mass, 1.0, convention).unwrap()
    }
}

proptest! {
    #[test]
    fn squared_operator_is_the_dispersion_scalar(
        mode in any_mode(),
        params in any_params(),
    ) {
        let twice = apply_wave_operator(&apply_wave_operator(&mode, &params), &params);
        let factor = dispersion_factor(mode.omega, mode.kvec, &params);
        let expected = mode.amplitude.scale(c(factor, 0.0));
        let scale = mode.amplitude.max_norm().max(1.0) * (1.0 + factor.abs());
        prop_assert!((twice.amplitude - expected).max_norm() <= 1e-12 * scale);
    }

    #[test]
    fn intensities_are_the_split_operator(mode in any_mode(), params in any_params()) {
        let fi = field_intensities(&mode, &params);
        let (s, v) = apply_wave_operator(&mode, &params).amplitude.decompose();
        let scale = mode.amplitude.max_norm().max(1.0) * 10.0;
        prop_assert!((fi.scalar.amplitude - s).max_norm() <= 1e-12 * scale);
        prop_assert!((fi.vector.amplitude - v).max_norm() <= 1e-12 * scale);
    }

    #[test]
    fn first_order_system_matches_direct_application(
        mode in any_mode(),
        params in any_params(),
        source in any_sedeon(),
    ) {
        let fi = field_intensities(&mode, &params);
        let (r0, rv) = first_order_residual_amplitudes(&fi, &source, &params);
        let total = fi.scalar.amplitude + fi.vector.amplitude;
        let direct = apply_wave_operator(
            &PlaneWaveField::new(total, mode.omega, mode.kvec).unwrap(),
            &params,
        )
        .amplitude
            - source;
        let (d0, dv) = direct.decompose();
        let scale = mode.amplitude.max_norm().max(1.0) * 20.0 + source.max_norm();
        prop_assert!((r0 - d0).max_norm() <= 1e-12 * scale);
        prop_assert!((rv - dv).max_norm() <= 1e-12 * scale);
    }

    #[test]
    fn em_reduction_identity_for_arbitrary_potentials(
        phi_re in -1.0f64..1.0, phi_im in -1.0f64..1.0,
        a in prop::array::uniform6(-1.0f64..1.0),
        omega in -2.0f64..2.0,
        k in prop::array::uniform3(-2.0f64..2.0),
        minus in any::<bool>(),
    ) {
        let convention = if minus { PhaseSign::Minus } else { PhaseSign::Plus };
        let pot = EMPotential {
            phi: c(phi_re, phi_im),
            a_vec: [c(a[0], a[1]), c(a[2], a[3]), c(a[4], a[5])],
            omega,
            kvec: k,
        };
        let (_, report) = em_reduction_report(&pot, 1.0, convention);
        prop_assert!(report.entries[0].max_residual <= 1e-12 * 20.0);
    }

    #[test]
    fn transverse_vacuum_mode_passes_all_maxwell_residuals(
        a in prop::array::uniform4(-1.0f64..1.0),
        k_mag in 0.25f64..2.0,
        minus in any::<bool>(),
    ) {
        let convention = if minus { PhaseSign::Minus } else { PhaseSign::Plus };
        let pot = EMPotential {
            phi: c(0.0, 0.0),
            a_vec: [c(0.0, 0.0), c(a[0], a[1]), c(a[2], a[3])],
            omega: k_mag,
            kvec: [k_mag, 0.0, 0.0],
        };
        let fields = em_fields(&pot, 1.0, convention);
        let report = maxwell_residuals(
            &fields.e,
            &fields.h,
            &EMSource::vacuum(),
            pot.omega,
            pot.kvec,
            1.0,
            convention,
        );
        prop_assert!(report.all_pass(), "{:?}", report);
    }

    #[test]
    fn on_shell_modes_solve_the_second_order_equation(
        amp in any_sedeon(),
        kx in 0.25f64..2.0,
        mass in 0.0f64..2.0,
    ) {
        let params = WaveOperatorParams::natural(mass).unwrap();
        let kvec = [kx, 0.0, 0.0];
        let omega = on_shell_omega(kvec, &params);
        let mode = PlaneWaveField::new(amp, omega, kvec).unwrap();
        let twice = apply_wave_operator(&apply_wave_operator(&mode, &params), &params);
        let scale = amp.max_norm().max(1.0) * (1.0 + omega * omega);
        prop_assert!(twice.amplitude.max_norm() <= 1e-12 * scale);
    }
}
