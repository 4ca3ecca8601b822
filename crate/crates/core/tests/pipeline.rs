use approx::assert_relative_eq;
use xwave::fockspace::{
    joint_quadrature_variances, kx_closed_form, moments, separability_check, squeeze_operator_apply,
    tms_number_state, tmsv_analytic, vacuum,
};
use xwave::phasematch::{interaction_time, MatchOrder};
use xwave::squeezing::{optimal_velocity, squeezing_parameter, SqueezedAxis};
use xwave::MediumParams;

#[test]
fn optimum_to_squeezed_state() {
    let p = MediumParams::femtosecond_850nm();
    for (j, m) in [(0, 0), (1, 1), (2, 2)] {
        let opt = optimal_velocity(j, m);
        let v = p.velocity_from_normalized(opt.x_opt);
        // choose t so that 4χt/Δ = 1, making ξ equal to ξ^(N)
        let t = p.delta / (4.0 * p.chi);
        let spec = squeezing_parameter(v, t, m, j, &p).unwrap();
        assert_relative_eq!(spec.xi, opt.xi_normalized, max_relative = 1e-9);

        let xi = spec.xi.clamp(-1.0, 1.0);
        let state = squeeze_operator_apply(&vacuum(40), xi, 0.0);
        let q = joint_quadrature_variances(&state);
        match SqueezedAxis::for_oam(m) {
            SqueezedAxis::Y => assert!(q.y_sum < 2.0 && q.x_sum > 2.0),
            SqueezedAxis::X => assert!(q.x_sum < 2.0 && q.y_sum > 2.0),
        }
    }
}

#[test]
fn matched_interaction_time_is_positive_and_ordered() {
    let p = MediumParams::femtosecond_850nm();
    let v = p.velocity_from_normalized(3.0);
    let t0 = interaction_time(v, MatchOrder(0), &p).unwrap();
    let t1 = interaction_time(v, MatchOrder(1), &p).unwrap();
    assert_relative_eq!(t1, 3.0 * t0, max_relative = 1e-14);
}

#[test]
fn criterion_on_constructed_states() {
    let s = squeeze_operator_apply(&vacuum(40), 0.5, 0.0);
    let r = separability_check(&s);
    assert!(r.violated && r.truncation_safe);
    assert_relative_eq!(r.mean_kx, kx_closed_form(0, 0, 0.5, 0.0), max_relative = 1e-9);

    let pair = tms_number_state(1, 1, 0.5, 0.0, 40);
    assert_relative_eq!(moments(&pair).mean_kx, 3.0 * 0.5f64.sinh() * 0.5f64.cosh(), max_relative = 1e-9);
    assert!(separability_check(&pair).violated);

    assert!(!separability_check(&tmsv_analytic(0.5, std::f64::consts::FRAC_PI_2, 40)).violated);
}
