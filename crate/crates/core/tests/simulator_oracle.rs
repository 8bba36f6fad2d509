use proptest::prelude::*;

use qgrav::closed_form::{mz_squeezed_lossy, su11_joint, su11_single, Detection, Losses};
use qgrav::interferometer::{
    n0_for_mz, n0_for_su11, run, simulate_sensitivity, InterferometerConfig, SimulationOptions,
};
use qgrav::sweep::Params;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

const TS: [f64; 5] = [0.6, 0.7, 0.8, 0.9, 1.0];

#[test]
fn mz_grid_matches_closed_form() {
    let geo = Params::default().geometry();
    let n_sig = 1e16;
    let t = 0.8;
    for t1 in TS {
        for t2 in TS {
            for r in [0.0, 0.7, 1.5] {
                let cfg = InterferometerConfig::mach_zehnder(t, n0_for_mz(t, n_sig))
                    .with_squeezing(r, 0.0)
                    .with_losses(t1, t2);
                let sim = simulate_sensitivity(&cfg, &geo, SimulationOptions::default()).unwrap();
                let cf = mz_squeezed_lossy(t, n_sig, r, Losses::new(t1, t2), &geo).unwrap();
                assert!(rel(sim.value, cf.value) < 1e-6, "t1={t1} t2={t2} r={r}: {} vs {}", sim.value, cf.value);
                assert!(rel(sim.n_sig, n_sig) < 1e-12);
            }
        }
    }
}

#[test]
fn su11_grid_matches_closed_form() {
    let geo = Params::default().geometry();
    let n_sig = 1e16;
    for t1 in TS {
        for t2 in TS {
            for (r1, r2) in [(0.5, 0.5), (1.0, 1.5), (1.5, 0.8)] {
                let base = InterferometerConfig::su11(r1, r2, n0_for_su11(r1, n_sig).unwrap()).with_losses(t1, t2);
                let losses = Losses::new(t1, t2);
                let single = simulate_sensitivity(&base, &geo, SimulationOptions::default()).unwrap();
                let joint =
                    simulate_sensitivity(&base.with_detection(Detection::Joint), &geo, SimulationOptions::default())
                        .unwrap();
                let cf_single = su11_single(n_sig, r1, r2, losses, &geo).unwrap().value;
                let cf_joint = su11_joint(n_sig, r1, r2, losses, &geo).unwrap().value;
                assert!(rel(single.value, cf_single) < 1e-6, "single t1={t1} t2={t2} r=({r1},{r2})");
                assert!(rel(joint.value, cf_joint) < 1e-6, "joint t1={t1} t2={t2} r=({r1},{r2})");
            }
        }
    }
}

#[test]
fn dark_fringe_outputs_are_centred() {
    let mz = InterferometerConfig::mach_zehnder(0.7, 1e12).with_squeezing(1.0, 0.0);
    let su = InterferometerConfig::su11(1.0, 1.0, 1e12);
    for cfg in [mz, su] {
        for detection in [Detection::SingleB, Detection::Joint] {
            let stats = run(&cfg.with_detection(detection), 0.0).unwrap();
            assert!(stats.mean.abs() < 1e-6 * 1e6, "{cfg:?}");
        }
    }
}

#[test]
fn unpumped_amplifier_carries_no_signal() {
    let geo = Params::default().geometry();
    let cfg = InterferometerConfig::su11(0.0, 1.0, 1e12);
    assert!(simulate_sensitivity(&cfg, &geo, SimulationOptions::default()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sensitivity_scales_as_inverse_root_n(exp in 6.0f64..20.0, r in 0.0f64..1.5, t2 in 0.6f64..1.0) {
        let geo = Params::default().geometry();
        let eval = |n_sig: f64| {
            let cfg = InterferometerConfig::mach_zehnder(0.9, n0_for_mz(0.9, n_sig))
                .with_squeezing(r, 0.0)
                .with_losses(1.0, t2);
            simulate_sensitivity(&cfg, &geo, SimulationOptions::default()).unwrap().value
        };
        let n = 10f64.powf(exp);
        prop_assert!(rel(eval(n) * n.sqrt(), eval(4.0 * n) * (4.0 * n).sqrt()) < 1e-6);
    }

    #[test]
    fn operating_point_is_flat_near_zero(eps in -1e-4f64..1e-4, t1 in 0.6f64..1.0) {
        let geo = Params::default().geometry();
        let cfg = InterferometerConfig::su11(1.0, 1.0, 1e12).with_losses(t1, 1.0).with_detection(Detection::Joint);
        let at = |epsilon_g| simulate_sensitivity(&cfg, &geo, SimulationOptions { epsilon_g, ..Default::default() })
            .unwrap()
            .value;
        prop_assert!(rel(at(eps), at(0.0)) < 1e-6);
    }

    #[test]
    fn detection_loss_never_helps(t_hi in 0.6f64..1.0, dt in 0.01f64..0.3, r in 0.0f64..1.5) {
        let geo = Params::default().geometry();
        let t_lo = (t_hi - dt).max(0.3);
        let eval = |t2: f64| {
            let cfg = InterferometerConfig::mach_zehnder(0.9, 1e13).with_squeezing(r, 0.0).with_losses(1.0, t2);
            simulate_sensitivity(&cfg, &geo, SimulationOptions::default()).unwrap().value
        };
        prop_assert!(eval(t_lo) > eval(t_hi));
    }
}
