//! Proper heights, travel times and the gravitational phase of a 50 m fountain.

use qgrav::schwarzschild::{
    coord_time_horizontal, coord_time_vertical, local_g, path_times, proper_height_approx,
    proper_height_exact, GeometryConfig, SPEED_OF_LIGHT,
};

fn main() -> qgrav::Result<()> {
    let geo = GeometryConfig::earth();
    let (r_s, ground) = (geo.schwarzschild_radius, geo.ground_radius);
    let top = ground + geo.height;

    let exact = proper_height_exact(r_s, top, ground)?;
    let approx = proper_height_approx(r_s, top, ground)?;
    println!("proper height over 50 m of coordinate separation");
    println!("  exact  {exact:.15} m");
    println!("  approx {approx:.15} m  (difference {:.2e} m)", exact - approx);

    let vertical = coord_time_vertical(r_s, top, ground, SPEED_OF_LIGHT)?;
    let horizontal = coord_time_horizontal(r_s, top, geo.length, SPEED_OF_LIGHT)?;
    println!("coordinate times");
    println!("  vertical   {:.15e} s (first order {:.15e} s)", vertical.exact, vertical.approx);
    println!("  horizontal {horizontal:.15e} s");
    println!("local g at the ground: {:.6} m/s^2", local_g(r_s, ground, SPEED_OF_LIGHT)?);

    let t = path_times(&geo)?;
    println!("path times seen by the ground clock");
    println!("  signal    {:.15e} s", t.tau_signal);
    println!("  reference {:.15e} s", t.tau_reference);
    println!("  delta tau {:.6e} s", t.delta_tau);
    println!("phase psi = {:.6e} rad, closed form {:.6e} rad", t.psi, geo.phase_closed_form());

    println!("\n   L [m]     psi [rad]");
    for length in [100.0, 500.0, 1000.0, 5000.0] {
        let psi = path_times(&GeometryConfig { length, ..geo })?.psi;
        println!("{length:8.0}  {psi:.4e}");
    }
    Ok(())
}
