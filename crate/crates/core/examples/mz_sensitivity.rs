//! Mach-Zehnder gravimeter: simulated against closed-form sensitivity as the
//! beamsplitter transmittance varies at fixed signal photon number.

use qgrav::closed_form::{mz_joint_squeezed_lossy, mz_squeezed_lossy, sql, Losses};
use qgrav::interferometer::{n0_for_mz, simulate_sensitivity, InterferometerConfig, SimulationOptions};
use qgrav::closed_form::Detection;
use qgrav::sweep::Params;

fn main() -> qgrav::Result<()> {
    let geo = Params::default().geometry();
    let n_sig = 1e18;
    println!("SQL at N_sig = 1e18: {:.4e}\n", sql(n_sig, &geo)?.value);
    println!("    T     single(sim)  single(cf)   joint(sim)   joint(cf)");
    for t in [0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
        let base = InterferometerConfig::mach_zehnder(t, n0_for_mz(t, n_sig));
        let single = simulate_sensitivity(&base, &geo, SimulationOptions::default())?;
        let joint = simulate_sensitivity(&base.with_detection(Detection::Joint), &geo, SimulationOptions::default())?;
        println!(
            "{t:5.2}  {:.5e}  {:.5e}  {:.5e}  {:.5e}",
            single.value,
            mz_squeezed_lossy(t, n_sig, 0.0, Losses::NONE, &geo)?.value,
            joint.value,
            mz_joint_squeezed_lossy(t, n_sig, 0.0, Losses::NONE, &geo)?.value,
        );
    }
    Ok(())
}
