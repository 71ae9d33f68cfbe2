//! Named verification suites. Each suite replays the invariants of one
//! module on seeded random inputs and returns a labeled residual report;
//! exact identities carry tolerance zero. The CLI exposes these unchanged,
//! so a fixed seed yields a bitwise-identical report.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::algebra::{
    linear_combine, scalar_product, unit_product, vector_product, Complex64, Sedeon,
};
use crate::field_lab::{
    apply_wave_operator, dirac_operator_matrix, dispersion_factor, em_fields,
    em_potential_amplitude, em_reduction_report, field_intensities,
    first_order_residual_amplitudes, grid_convergence, massless_null_amplitude,
    maxwell_residuals, multimode_second_order_residual, on_shell_omega, EMPotential, EMSource,
    PhaseSign, PlaneWaveField, WaveOperatorParams,
};
use crate::matrix_rep::{
    dirac_project, dirac_reassemble, left_regular_matrix, left_regular_matrix_amajor,
    sigma_action_matrix, sigma_matrix, swap_ordering, unit_matrix_a, unit_matrix_e, vec_components,
    Matrix4,
};
use crate::report::{ResidualReport, ANALYTIC_TOL, GRID_EXTRAP_TOL};
use crate::sample;
use crate::transforms::{
    boost_closed_form_audit, boost_event, boost_event_closed_form, boost_sedeon, event_sedeon,
    interval, invert, invert_sign_pattern, lorentz_transform, rotate, rotate_closed_form,
    rotor_sedeon, Boost, EventVector, Inversion, Rotor, BOOST_AUDIT_SECTORS,
};

const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The named check suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Tables,
    Algebra,
    Transforms,
    Representation,
    Field,
    All,
}

impl Suite {
    pub const ALL_NAMES: [&'static str; 6] = [
        "tables",
        "algebra",
        "transforms",
        "representation",
        "field",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Algebra => "algebra",
            Suite::Transforms => "transforms",
            Suite::Representation => "representation",
            Suite::Field => "field",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tables" => Ok(Suite::Tables),
            "algebra" => Ok(Suite::Algebra),
            "transforms" => Ok(Suite::Transforms),
            "representation" => Ok(Suite::Representation),
            "field" => Ok(Suite::Field),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite '{other}'; expected one of {}",
                Suite::ALL_NAMES.join(", ")
            )),
        }
    }
}

/// Run a suite with a fixed random seed and sample count.
pub fn run_suite(suite: Suite, seed: u64, samples: usize) -> ResidualReport {
    match suite {
        Suite::Tables => tables_suite(),
        Suite::Algebra => algebra_suite(seed, samples),
        Suite::Transforms => transforms_suite(seed, samples),
        Suite::Representation => representation_suite(seed, samples),
        Suite::Field => field_suite(seed, samples),
        Suite::All => {
            let mut report = tables_suite();
            report.extend(algebra_suite(seed, samples));
            report.extend(transforms_suite(seed, samples));
            report.extend(representation_suite(seed, samples));
            report.extend(field_suite(seed, samples));
            report
        }
    }
}

fn basis_unit(basis: char, index: usize) -> Sedeon {
    match basis {
        'e' => Sedeon::basis(index, 0).expect("index in range"),
        _ => Sedeon::basis(0, index).expect("index in range"),
    }
}

/// Both unit tables, product by product: 9 products and 9 anticommutation
/// relations per basis, all exact.
pub fn tables_suite() -> ResidualReport {
    let mut report = ResidualReport::new();
    for basis in ['a', 'e'] {
        for m in 1..4 {
            for n in 1..4 {
                let um = basis_unit(basis, m);
                let un = basis_unit(basis, n);
                let (coeff, idx) = unit_product(m, n);
                let expected = basis_unit(basis, idx).scale(coeff.value());
                let deviation = (um.product(&un) - expected).max_norm();
                report.record(format!("tables.{basis}.{basis}{m}*{basis}{n}"), deviation, 0.0);

                let anti = um.product(&un) + un.product(&um);
                let anti_expected = if m == n {
                    Sedeon::one().scale(Complex64::new(2.0, 0.0))
                } else {
                    Sedeon::zero()
                };
                report.record(
                    format!("tables.{basis}.{basis}{m}*{basis}{n}+{basis}{n}*{basis}{m}"),
                    (anti - anti_expected).max_norm(),
                    0.0,
                );
            }
        }
    }
    report
}

/// Expected product of two basis elements straight from the structure
/// table.
fn expected_basis_product(na: usize, ka: usize, nb: usize, kb: usize) -> Sedeon {
    let (ce, ne) = unit_product(na, nb);
    let (ca, kc) = unit_product(ka, kb);
    Sedeon::basis(ne, kc)
        .expect("in range")
        .scale(ce.mul(ca).value())
}

pub fn algebra_suite(seed: u64, samples: usize) -> ResidualReport {
    let mut rng = sample::rng(seed);
    let mut report = ResidualReport::new();

    // Every one of the 256 basis pairs, exactly.
    let mut fidelity: f64 = 0.0;
    for ia in 0..16 {
        for ib in 0..16 {
            let a = Sedeon::basis(ia / 4, ia % 4).expect("in range");
            let b = Sedeon::basis(ib / 4, ib % 4).expect("in range");
            let expected = expected_basis_product(ia / 4, ia % 4, ib / 4, ib % 4);
            fidelity = fidelity.max((a.product(&b) - expected).max_norm());
        }
    }
    report.record("algebra.table_fidelity", fidelity, 0.0);

    let a1 = Sedeon::unit(0, 1);
    let a2 = Sedeon::unit(0, 2);
    let ia3 = Sedeon::unit(0, 3).scale(Complex64::new(0.0, 1.0));
    let witness = (a1.product(&a2) - ia3).max_norm() + (a2.product(&a1) + ia3).max_norm();
    report.record("algebra.noncommutativity_witness", witness, 0.0);

    let mut associativity: f64 = 0.0;
    for _ in 0..samples {
        let a = sample::random_sedeon(&mut rng);
        let b = sample::random_sedeon(&mut rng);
        let c = sample::random_sedeon(&mut rng);
        let lhs = a.product(&b).product(&c);
        let rhs = a.product(&b.product(&c));
        let scale = (a.max_norm() * b.max_norm() * c.max_norm()).max(f64::MIN_POSITIVE);
        associativity = associativity.max((lhs - rhs).max_norm() / scale);
    }
    report.record("algebra.associativity", associativity, ANALYTIC_TOL);

    // Bilinearity, exact on integer-valued inputs and tight on floats.
    let mut bilinear_exact: f64 = 0.0;
    let mut bilinear_float: f64 = 0.0;
    for _ in 0..samples {
        let a = sample::random_integer_sedeon(&mut rng);
        let b = sample::random_integer_sedeon(&mut rng);
        let c = sample::random_integer_sedeon(&mut rng);
        let c1 = sample::random_integer_complex(&mut rng);
        let c2 = sample::random_integer_complex(&mut rng);
        let lhs = a.product(&linear_combine(c1, &b, c2, &c));
        let rhs = linear_combine(c1, &a.product(&b), c2, &a.product(&c));
        bilinear_exact = bilinear_exact.max((lhs - rhs).max_norm());
        let lhs = linear_combine(c1, &a, c2, &b).product(&c);
        let rhs = linear_combine(c1, &a.product(&c), c2, &b.product(&c));
        bilinear_exact = bilinear_exact.max((lhs - rhs).max_norm());

        let x = sample::random_sedeon(&mut rng);
        let y = sample::random_sedeon(&mut rng);
        let z = sample::random_sedeon(&mut rng);
        let d1 = sample::random_complex(&mut rng);
        let d2 = sample::random_complex(&mut rng);
        let lhs = x.product(&linear_combine(d1, &y, d2, &z));
        let rhs = linear_combine(d1, &x.product(&y), d2, &x.product(&z));
        let scale = (x.max_norm() * (y.max_norm() + z.max_norm())).max(f64::MIN_POSITIVE);
        bilinear_float = bilinear_float.max((lhs - rhs).max_norm() / scale);
    }
    report.record("algebra.bilinearity_exact", bilinear_exact, 0.0);
    report.record("algebra.bilinearity", bilinear_float, ANALYTIC_TOL);

    // Product decomposition into scalar/vector sub-products.
    let mut decomposition_exact: f64 = 0.0;
    let mut decomposition_float: f64 = 0.0;
    for i in 0..samples {
        let (a, b) = if i % 2 == 0 {
            (
                sample::random_integer_sedeon(&mut rng),
                sample::random_integer_sedeon(&mut rng),
            )
        } else {
            (
                sample::random_sedeon(&mut rng),
                sample::random_sedeon(&mut rng),
            )
        };
        let (a0, av) = a.decompose();
        let (b0, bv) = b.decompose();
        let assembled = a0.product(&b0)
            + a0.product(&bv)
            + av.product(&b0)
            + scalar_product(&av, &bv).expect("pure vectors")
            + vector_product(&av, &bv).expect("pure vectors");
        let deviation = (a.product(&b) - assembled).max_norm();
        if i % 2 == 0 {
            decomposition_exact = decomposition_exact.max(deviation);
        } else {
            let scale = (a.max_norm() * b.max_norm()).max(f64::MIN_POSITIVE);
            decomposition_float = decomposition_float.max(deviation / scale);
        }
    }
    report.record(
        "algebra.product_decomposition_exact",
        decomposition_exact,
        0.0,
    );
    report.record(
        "algebra.product_decomposition",
        decomposition_float,
        ANALYTIC_TOL,
    );

    // Triple product identity on all basis-vector triples, exactly.
    let mut triple_basis: f64 = 0.0;
    for i in 1..4 {
        for j in 1..4 {
            for k in 1..4 {
                let a = Sedeon::unit(0, i);
                let b = Sedeon::unit(0, j);
                let c = Sedeon::unit(0, k);
                triple_basis = triple_basis.max(triple_product_deviation(&a, &b, &c));
            }
        }
    }
    report.record("algebra.triple_product_basis", triple_basis, 0.0);

    let mut triple_random: f64 = 0.0;
    for _ in 0..samples {
        let a = sample::random_absolute_vector(&mut rng);
        let b = sample::random_absolute_vector(&mut rng);
        let c = sample::random_absolute_vector(&mut rng);
        let scale = (a.max_norm() * b.max_norm() * c.max_norm()).max(f64::MIN_POSITIVE);
        triple_random = triple_random.max(triple_product_deviation(&a, &b, &c) / scale);
    }
    report.record("algebra.triple_product_random", triple_random, ANALYTIC_TOL);

    let mut conj_involution: f64 = 0.0;
    for _ in 0..samples.min(16) {
        let a = sample::random_sedeon(&mut rng);
        conj_involution = conj_involution.max((a.conj().conj() - a).max_norm());
    }
    report.record("algebra.conj_involution", conj_involution, 0.0);

    report
}

/// Deviation of `[A x [B x C]]` from `-B (A . C) + C (A . B)` for absolute
/// vectors.
fn triple_product_deviation(a: &Sedeon, b: &Sedeon, c: &Sedeon) -> f64 {
    let inner = vector_product(b, c).expect("pure vectors");
    let lhs = vector_product(a, &inner).expect("pure vectors");
    let rhs = -b.product(&scalar_product(a, c).expect("pure vectors"))
        + c.product(&scalar_product(a, b).expect("pure vectors"));
    (lhs - rhs).max_norm()
}

pub fn transforms_suite(seed: u64, samples: usize) -> ResidualReport {
    let mut rng = sample::rng(seed);
    let mut report = ResidualReport::new();
    let one = Sedeon::one();

    let mut unitarity: f64 = 0.0;
    let mut closed_form: f64 = 0.0;
    let mut scalar_invariance: f64 = 0.0;
    let mut composition: f64 = 0.0;
    for _ in 0..samples {
        let rotor = sample::random_rotor(&mut rng);
        let (u, u_conj) = rotor_sedeon(&rotor);
        unitarity = unitarity
            .max((u_conj.product(&u) - one).max_norm())
            .max((u.product(&u_conj) - one).max_norm());

        let v = sample::random_sedeon(&mut rng);
        let scale = v.max_norm().max(f64::MIN_POSITIVE);
        let sandwich = rotate(&v, &rotor);
        closed_form = closed_form.max((sandwich - rotate_closed_form(&v, &rotor)).max_norm() / scale);
        scalar_invariance = scalar_invariance
            .max((sandwich.scalar_part() - v.scalar_part()).max_norm() / scale);

        let theta2 = rng.random_range(-2.0..2.0);
        let second = Rotor::new(theta2, rotor.axis()).expect("axis already unit");
        let combined =
            Rotor::new(rotor.theta() + theta2, rotor.axis()).expect("axis already unit");
        composition = composition
            .max((rotate(&rotate(&v, &rotor), &second) - rotate(&v, &combined)).max_norm() / scale);
    }
    report.record("transforms.rotor_unitarity", unitarity, ANALYTIC_TOL);
    report.record("transforms.rotation_closed_form", closed_form, ANALYTIC_TOL);
    report.record(
        "transforms.rotation_scalar_invariance",
        scalar_invariance,
        ANALYTIC_TOL,
    );
    report.record("transforms.rotation_composition", composition, ANALYTIC_TOL);

    // Inversion sign patterns on all sixteen basis elements, and the
    // involution property, both exact.
    let mut signs: f64 = 0.0;
    let mut involution: f64 = 0.0;
    for mode in [Inversion::Time, Inversion::Space, Inversion::SpaceTime] {
        for n in 0..4 {
            for k in 0..4 {
                let b = Sedeon::unit(n, k);
                signs = signs.max((invert(&b, mode) - invert_sign_pattern(&b, mode)).max_norm());
            }
        }
        let v = sample::random_sedeon(&mut rng);
        involution = involution.max((invert(&invert(&v, mode), mode) - v).max_norm());
    }
    report.record("transforms.inversion_signs", signs, 0.0);
    report.record("transforms.inversion_involution", involution, 0.0);

    let mut normalization: f64 = 0.0;
    let mut additivity: f64 = 0.0;
    let mut invariance: f64 = 0.0;
    let mut scalar_sectors: f64 = 0.0;
    let mut audit_deviation = [0.0f64; 8];
    let mut audit_scale: f64 = 1.0;
    for _ in 0..samples {
        let boost = sample::random_boost(&mut rng);
        let (l, l_conj) = boost_sedeon(&boost);
        normalization = normalization
            .max((l_conj.product(&l) - one).max_norm())
            .max((l.product(&l_conj) - one).max_norm());

        let extra = rng.random_range(-1.0..1.0);
        let second = Boost::from_rapidity(extra, boost.direction()).expect("unit direction");
        let summed = Boost::from_rapidity(boost.rapidity() + extra, boost.direction())
            .expect("unit direction");
        additivity = additivity
            .max((boost_sedeon(&boost).0.product(&boost_sedeon(&second).0)
                - boost_sedeon(&summed).0)
                .max_norm());

        let event = sample::random_event(&mut rng);
        let s = event_sedeon(&event);
        let before = interval(&s).expect("event shaped");
        let after = interval(&lorentz_transform(&s, &boost)).expect("still event shaped");
        invariance = invariance.max((after - before).norm() / (1.0 + before.norm()));

        let v = sample::random_sedeon(&mut rng);
        let transformed = lorentz_transform(&v, &boost);
        let scale = v.max_norm().max(f64::MIN_POSITIVE) * (2.0 * boost.rapidity()).cosh();
        let mut sector_dev = (transformed.at(0, 0) - v.at(0, 0)).norm();
        sector_dev = sector_dev.max((transformed.at(3, 0) - v.at(3, 0)).norm());
        scalar_sectors = scalar_sectors.max(sector_dev / scale);

        for (i, line) in boost_closed_form_audit(&v, &boost, ANALYTIC_TOL)
            .iter()
            .enumerate()
        {
            audit_deviation[i] = audit_deviation[i].max(line.deviation);
        }
        audit_scale = audit_scale.max(1.0 + scale);
    }
    report.record("transforms.boost_normalization", normalization, ANALYTIC_TOL);
    report.record("transforms.boost_additivity", additivity, ANALYTIC_TOL);
    report.record("transforms.interval_invariance", invariance, ANALYTIC_TOL);
    report.record(
        "transforms.lorentz_scalar_sectors",
        scalar_sectors,
        ANALYTIC_TOL,
    );

    // Event transformation against the textbook formulas on the velocity
    // grid, including the reference point t = x = 1, beta = 0.6.
    let mut event_closed: f64 = 0.0;
    for &beta in &[0.0, 0.2, -0.2, 0.6, -0.6, 0.9, -0.9] {
        let boost = Boost::from_beta(beta, [1.0, 0.0, 0.0]).expect("subluminal");
        for event in [
            EventVector::natural(1.0, [1.0, 0.0, 0.0]).expect("finite"),
            EventVector::natural(0.4, [-0.3, 1.1, 0.7]).expect("finite"),
        ] {
            let (t, r) = boost_event(&event, &boost);
            let (t_ref, r_ref) = boost_event_closed_form(&event, &boost);
            let scale = 1.0 + t_ref.abs() + r_ref.iter().map(|x| x.abs()).fold(0.0, f64::max);
            let mut dev = (t - t_ref).abs();
            for j in 0..3 {
                dev = dev.max((r[j] - r_ref[j]).abs());
            }
            event_closed = event_closed.max(dev / scale);
        }
    }
    report.record(
        "transforms.event_transform_closed_form",
        event_closed,
        ANALYTIC_TOL,
    );

    for (i, sector) in BOOST_AUDIT_SECTORS.iter().enumerate() {
        report.record(
            format!("transforms.boost_closed_form.{sector}"),
            audit_deviation[i],
            ANALYTIC_TOL * audit_scale,
        );
    }

    report
}

pub fn representation_suite(seed: u64, samples: usize) -> ResidualReport {
    let mut rng = sample::rng(seed);
    let mut report = ResidualReport::new();

    // 4x4 unit matrices close under their tables, exactly.
    let mut table_dev: f64 = 0.0;
    for m in 0..4 {
        for n in 0..4 {
            let (coeff, idx) = unit_product(m, n);
            let e = unit_matrix_e(m).expect("in range") * unit_matrix_e(n).expect("in range")
                - unit_matrix_e(idx).expect("in range") * coeff.value();
            let a = unit_matrix_a(m).expect("in range") * unit_matrix_a(n).expect("in range")
                - unit_matrix_a(idx).expect("in range") * coeff.value();
            table_dev = table_dev.max(e.max_abs()).max(a.max_abs());
        }
    }
    report.record("rep.unit_matrix_tables", table_dev, 0.0);

    let mut action: f64 = 0.0;
    let mut homomorphism: f64 = 0.0;
    let mut vectorization: f64 = 0.0;
    let mut roundtrip: f64 = 0.0;
    for _ in 0..samples {
        let a = sample::random_sedeon(&mut rng);
        let b = sample::random_sedeon(&mut rng);
        let scale = (a.max_norm() * b.max_norm()).max(f64::MIN_POSITIVE);

        let m_a = left_regular_matrix(&a);
        let acted = m_a.apply(&vec_components(&b));
        let direct = vec_components(&a.product(&b));
        let mut dev: f64 = 0.0;
        for i in 0..16 {
            dev = dev.max((acted[i] - direct[i]).norm());
        }
        action = action.max(dev / scale);

        let product_matrix = left_regular_matrix(&a.product(&b));
        homomorphism = homomorphism
            .max(product_matrix.sub(&m_a.matmul(&left_regular_matrix(&b))).max_abs() / scale);

        vectorization = vectorization
            .max(swap_ordering(&m_a).sub(&left_regular_matrix_amajor(&a)).max_abs());

        roundtrip = roundtrip.max(
            (dirac_reassemble(&dirac_project(&a)) - a).max_norm() / a.max_norm().max(1.0),
        );
    }
    report.record("rep.left_regular_action", action, ANALYTIC_TOL);
    report.record("rep.left_regular_homomorphism", homomorphism, ANALYTIC_TOL);
    report.record("rep.vectorization_consistency", vectorization, 0.0);
    report.record("rep.dirac_roundtrip", roundtrip, 1e-15);

    // Linear independence of the sixteen basis matrices: their Frobenius
    // Gram matrix is exactly 16 times the identity.
    let mut gram_dev: f64 = 0.0;
    let basis_matrices: Vec<_> = (0..16)
        .map(|i| left_regular_matrix(&Sedeon::basis(i / 4, i % 4).expect("in range")))
        .collect();
    for (i, mi) in basis_matrices.iter().enumerate() {
        for (j, mj) in basis_matrices.iter().enumerate() {
            let inner = mi.frobenius_inner(mj);
            let expected = if i == j {
                Complex64::new(16.0, 0.0)
            } else {
                C_ZERO
            };
            gram_dev = gram_dev.max((inner - expected).norm());
        }
    }
    report.record("rep.basis_gram_orthogonality", gram_dev, 0.0);

    let mut sigma_const: f64 = 0.0;
    let mut sigma_herm: f64 = 0.0;
    let mut sigma_invol: f64 = 0.0;
    for j in 1..4 {
        let s = sigma_matrix(j).expect("in range");
        sigma_const = sigma_const
            .max((s - sigma_action_matrix(j).expect("in range")).max_abs());
        sigma_herm = sigma_herm.max((s - s.conj_transpose()).max_abs());
        sigma_invol = sigma_invol.max((s * s - Matrix4::identity()).max_abs());
    }
    let cycle = (sigma_matrix(1).expect("in range") * sigma_matrix(2).expect("in range")
        - sigma_matrix(3).expect("in range") * Complex64::new(0.0, 1.0))
    .max_abs();
    report.record("rep.sigma_action_consistency", sigma_const, 0.0);
    report.record("rep.sigma_hermitian", sigma_herm, 0.0);
    report.record("rep.sigma_involution", sigma_invol, 0.0);
    report.record("rep.sigma_cycle", cycle, 0.0);

    report
}

pub fn field_suite(seed: u64, samples: usize) -> ResidualReport {
    let mut rng = sample::rng(seed);
    let mut report = ResidualReport::new();

    // The squared operator acts as the dispersion scalar on a parameter
    // grid, under both phase conventions.
    let mut square_scalar: f64 = 0.0;
    let directions = [
        [1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.6, 0.8, 0.0],
        [0.0, -0.6, 0.8],
    ];
    for convention in [PhaseSign::Plus, PhaseSign::Minus] {
        for &mass in &[0.0, 1.0, 2.5] {
            let params = WaveOperatorParams::new(mass, 1.0, convention).expect("valid");
            for &omega in &[0.0, 0.5, 1.0, 2.0, 3.5] {
                for (d, &k_mag) in directions.iter().zip([0.0, 0.5, 1.0, 2.0, 3.5].iter()) {
                    let kvec = [d[0] * k_mag, d[1] * k_mag, d[2] * k_mag];
                    let amplitude = sample::random_sedeon(&mut rng);
                    let field = PlaneWaveField::new(amplitude, omega, kvec).expect("finite");
                    let twice =
                        apply_wave_operator(&apply_wave_operator(&field, &params), &params);
                    let factor = dispersion_factor(omega, kvec, &params);
                    let scale =
                        amplitude.max_norm().max(1.0) * (1.0 + factor.abs());
                    square_scalar = square_scalar.max(
                        (twice.amplitude - amplitude.scale(Complex64::new(factor, 0.0)))
                            .max_norm()
                            / scale,
                    );
                }
            }
        }
    }
    report.record("field.operator_square_scalar", square_scalar, ANALYTIC_TOL);

    // Exactly zero on Pythagorean on-shell points with dyadic amplitudes.
    let mut onshell_exact: f64 = 0.0;
    for &(omega, kvec, mass) in &[
        (5.0, [3.0, 0.0, 0.0], 4.0),
        (5.0, [0.0, 4.0, 0.0], 3.0),
        (1.0, [1.0, 0.0, 0.0], 0.0),
        (13.0, [3.0, 4.0, 12.0], 0.0),
    ] {
        let params = WaveOperatorParams::natural(mass).expect("valid");
        let amplitude = sample::random_integer_sedeon(&mut rng).scale(Complex64::new(0.125, 0.0));
        let field = PlaneWaveField::new(amplitude, omega, kvec).expect("finite");
        let twice = apply_wave_operator(&apply_wave_operator(&field, &params), &params);
        onshell_exact = onshell_exact.max(twice.amplitude.max_norm());
    }
    report.record("field.operator_square_onshell_exact", onshell_exact, 0.0);

    // Intensities equal the decomposition of one operator application, and
    // one more application splits into the two first-order equations.
    let mut intensity: f64 = 0.0;
    let mut first_order_equiv: f64 = 0.0;
    for _ in 0..samples {
        let params = WaveOperatorParams::new(
            rng.random_range(0.0..2.0),
            1.0,
            PhaseSign::default(),
        )
        .expect("valid");
        let field = PlaneWaveField::new(
            sample::random_sedeon(&mut rng),
            rng.random_range(-2.0..2.0),
            [
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ],
        )
        .expect("finite");
        let scale = field.amplitude.max_norm().max(1.0) * 10.0;

        let fi = field_intensities(&field, &params);
        let (s, v) = apply_wave_operator(&field, &params).amplitude.decompose();
        intensity = intensity.max(
            ((fi.scalar.amplitude - s).max_norm() + (fi.vector.amplitude - v).max_norm()) / scale,
        );

        let source = sample::random_sedeon(&mut rng);
        let (r0, rv) = first_order_residual_amplitudes(&fi, &source, &params);
        let total = fi.scalar.amplitude + fi.vector.amplitude;
        let direct = apply_wave_operator(
            &PlaneWaveField::new(total, field.omega, field.kvec).expect("finite"),
            &params,
        )
        .amplitude
            - source;
        let (d0, dv) = direct.decompose();
        first_order_equiv = first_order_equiv
            .max(((r0 - d0).max_norm() + (rv - dv).max_norm()) / scale);
    }
    report.record("field.intensity_consistency", intensity, ANALYTIC_TOL);
    report.record(
        "field.first_order_equivalence",
        first_order_equiv,
        ANALYTIC_TOL,
    );

    // Electromagnetic reduction: one massless application equals
    // `-(gauge) + e_tr E - i H` for arbitrary potentials, and the four
    // Maxwell residuals vanish for transverse vacuum modes on the light
    // cone.
    let mut reduction: f64 = 0.0;
    let mut maxwell: f64 = 0.0;
    for _ in 0..samples {
        let pot = EMPotential {
            phi: sample::random_complex(&mut rng),
            a_vec: [
                sample::random_complex(&mut rng),
                sample::random_complex(&mut rng),
                sample::random_complex(&mut rng),
            ],
            omega: rng.random_range(-2.0..2.0),
            kvec: [
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
                rng.random_range(-2.0..2.0),
            ],
        };
        let (_, rep) = em_reduction_report(&pot, 1.0, PhaseSign::default());
        reduction = reduction.max(rep.entries[0].max_residual);

        // Transverse vacuum mode: A perpendicular to k, phi = 0, w = c|k|.
        let k_mag = rng.random_range(0.5..2.0);
        let t1 = sample::random_complex(&mut rng);
        let t2 = sample::random_complex(&mut rng);
        let vac = EMPotential {
            phi: C_ZERO,
            a_vec: [C_ZERO, t1, t2],
            omega: k_mag,
            kvec: [k_mag, 0.0, 0.0],
        };
        let fields = em_fields(&vac, 1.0, PhaseSign::default());
        let res = maxwell_residuals(
            &fields.e,
            &fields.h,
            &EMSource::vacuum(),
            vac.omega,
            vac.kvec,
            1.0,
            PhaseSign::default(),
        );
        for entry in &res.entries {
            maxwell = maxwell.max(entry.max_residual);
        }
    }
    report.record("field.em_operator_reduction", reduction, ANALYTIC_TOL);
    report.record("field.maxwell_vacuum_mode", maxwell, ANALYTIC_TOL);

    // Sourced Maxwell check: for a gauge-clean (transverse, phi = 0)
    // off-shell mode, two operator applications produce the source the
    // potential satisfies; the Maxwell residuals against that source must
    // close.
    let mut sourced: f64 = 0.0;
    for _ in 0..samples.min(8) {
        let k_mag = rng.random_range(0.5..2.0);
        let pot = EMPotential {
            phi: C_ZERO,
            a_vec: [
                C_ZERO,
                sample::random_complex(&mut rng),
                sample::random_complex(&mut rng),
            ],
            omega: rng.random_range(-2.0..2.0),
            kvec: [k_mag, 0.0, 0.0],
        };
        let params = WaveOperatorParams::new(0.0, 1.0, PhaseSign::default()).expect("valid");
        let mode = PlaneWaveField::new(em_potential_amplitude(&pot), pot.omega, pot.kvec)
            .expect("finite");
        let produced = apply_wave_operator(&apply_wave_operator(&mode, &params), &params);
        let four_pi = 4.0 * std::f64::consts::PI;
        let i = Complex64::new(0.0, 1.0);
        let rho = produced.amplitude.at(1, 0) / (-i * four_pi);
        let j_vec = [
            produced.amplitude.at(2, 1) * (-1.0 / four_pi),
            produced.amplitude.at(2, 2) * (-1.0 / four_pi),
            produced.amplitude.at(2, 3) * (-1.0 / four_pi),
        ];
        let fields = em_fields(&pot, 1.0, PhaseSign::default());
        let res = maxwell_residuals(
            &fields.e,
            &fields.h,
            &EMSource { rho, j_vec },
            pot.omega,
            pot.kvec,
            1.0,
            PhaseSign::default(),
        );
        for entry in &res.entries {
            sourced = sourced.max(entry.max_residual);
        }
    }
    report.record("field.maxwell_sourced_mode", sourced, ANALYTIC_TOL * 100.0);

    // Dirac-type first-order equation: closed-form kernel mode and the
    // singular-value picture of the operator matrix.
    let params0 = WaveOperatorParams::massless();
    let kvec = [0.6, 0.8, 0.0];
    let null = massless_null_amplitude(kvec).expect("nonzero k");
    let mode = PlaneWaveField::new(null, on_shell_omega(kvec, &params0), kvec).expect("finite");
    let null_residual = apply_wave_operator(&mode, &params0).amplitude.max_norm();
    report.record("field.dirac_null_mode", null_residual, ANALYTIC_TOL);

    let mut onshell_sv: f64 = 0.0;
    let mut offshell_margin: f64 = 0.0;
    for &mass in &[0.0, 1.0] {
        let params = WaveOperatorParams::natural(mass).expect("valid");
        for kvec in [[1.0, 0.0, 0.0], [0.0, 0.6, 0.8]] {
            let omega = on_shell_omega(kvec, &params);
            let sv = dirac_operator_matrix(omega, kvec, &params).smallest_singular_value();
            onshell_sv = onshell_sv.max(sv);

            let k_mag = 1.0;
            for &omega_off in &[0.0, 0.5, 2.5] {
                let sv =
                    dirac_operator_matrix(omega_off, kvec, &params).smallest_singular_value();
                offshell_margin = offshell_margin.max((0.1 * k_mag - sv).max(0.0));
            }
        }
    }
    report.record("field.dirac_kernel_onshell", onshell_sv, 1e-10);
    report.record("field.dirac_kernel_offshell_margin", offshell_margin, 0.0);

    // Grid convergence of the central-difference operator.
    let grid_params = WaveOperatorParams::natural(0.5).expect("valid");
    let grid_mode = PlaneWaveField::new(
        Sedeon::one() + Sedeon::unit(0, 1) + Sedeon::unit(1, 2).scale(Complex64::new(0.5, -0.5)),
        0.9,
        [1.0, 0.0, 0.0],
    )
    .expect("finite");
    let study = grid_convergence(&grid_mode, &grid_params, 0.0, 0.1, 21, 3)
        .expect("valid grid setup");
    let order_dev = study
        .orders
        .iter()
        .map(|o| (o - 2.0).abs())
        .fold(0.0, f64::max);
    report.record("field.grid_convergence_order", order_dev, 0.2);
    report.record(
        "field.grid_richardson",
        study.richardson_residual,
        GRID_EXTRAP_TOL,
    );

    // Superposition support: summed residuals over a list of on-shell
    // modes.
    let params = WaveOperatorParams::natural(1.0).expect("valid");
    let k1 = [3.0, 0.0, 0.0];
    let k2 = [0.0, 0.0, 2.0];
    let modes = [
        (
            PlaneWaveField::new(
                sample::random_sedeon(&mut rng),
                on_shell_omega(k1, &params),
                k1,
            )
            .expect("finite"),
            Sedeon::zero(),
        ),
        (
            PlaneWaveField::new(
                sample::random_sedeon(&mut rng),
                on_shell_omega(k2, &params),
                k2,
            )
            .expect("finite"),
            Sedeon::zero(),
        ),
    ];
    let multi = multimode_second_order_residual(&modes, &params);
    report.record(
        "field.multimode_superposition",
        multi.entries[0].max_residual,
        ANALYTIC_TOL * 100.0,
    );

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for name in Suite::ALL_NAMES {
            let suite: Suite = name.parse().unwrap();
            assert_eq!(suite.name(), name);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn tables_suite_has_36_exact_entries() {
        let report = tables_suite();
        assert_eq!(report.entries.len(), 36);
        assert!(report.all_pass());
        assert!(report.entries.iter().all(|e| e.tolerance == 0.0));
    }

    #[test]
    fn every_suite_passes_on_a_fresh_build() {
        for suite in [
            Suite::Tables,
            Suite::Algebra,
            Suite::Transforms,
            Suite::Representation,
            Suite::Field,
        ] {
            let report = run_suite(suite, 0, 25);
            let failures: Vec<_> = report.failures().collect();
            assert!(failures.is_empty(), "{suite}: {failures:?}");
        }
    }

    #[test]
    fn all_suite_is_the_concatenation() {
        let all = run_suite(Suite::All, 7, 10);
        let mut expected = tables_suite();
        expected.extend(algebra_suite(7, 10));
        expected.extend(transforms_suite(7, 10));
        expected.extend(representation_suite(7, 10));
        expected.extend(field_suite(7, 10));
        assert_eq!(all, expected);
    }

    #[test]
    fn fixed_seed_is_deterministic() {
        let a = run_suite(Suite::All, 11, 12);
        let b = run_suite(Suite::All, 11, 12);
        assert_eq!(a, b);
    }
}
