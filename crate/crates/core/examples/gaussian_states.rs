//! Building and propagating Gaussian states by hand.

use qgrav::gaussian::{Element, GaussianState, PHASE_QUADRATURE};

fn main() -> qgrav::Result<()> {
    let mut state = GaussianState::coherent(2, 0, 10.0, 0.0)?;
    println!("coherent input: <n0> = {:.3}", state.photon_number(0)?);

    state.apply_single_mode_squeeze(1, 1.0, 0.0)?;
    let p = state.homodyne_stats(1, PHASE_QUADRATURE)?;
    println!("squeezed vacuum, phase quadrature variance {:.4} (e^-2 = {:.4})", p.variance, (-2.0f64).exp());

    state.apply_beamsplitter(0, 1, 0.5)?;
    println!(
        "after a 50:50 beamsplitter: <n0> = {:.3}, <n1> = {:.3}",
        state.photon_number(0)?,
        state.photon_number(1)?
    );

    let chain = [
        Element::Phase { mode: 1, theta: 0.3 },
        Element::Loss { mode: 0, t: 0.9 },
        Element::TwoModeSqueeze { a: 0, b: 1, r: 0.5, pump_phase: 0.0 },
    ];
    for element in &chain {
        state.apply(element)?;
        println!(
            "{:<70} margin {:+.3e}",
            format!("{element:?}"),
            state.uncertainty_margin()
        );
    }
    let joint = state.joint_quadrature_stats(0, 1, PHASE_QUADRATURE)?;
    println!("joint phase quadrature: mean {:.4}, variance {:.4}", joint.mean, joint.variance);
    println!("covariance matrix:{:.4}", state.cov());
    Ok(())
}
