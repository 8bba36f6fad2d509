//! How internal and detection loss erode the squeezing gain.

use qgrav::closed_form::{mz_squeezed_lossy, sql, Losses};
use qgrav::sweep::Params;

fn main() -> qgrav::Result<()> {
    let geo = Params::default().geometry();
    let n_sig = 1e18;
    let reference = sql(n_sig, &geo)?.value;
    let cases = [(1.0, 1.0), (0.9, 1.0), (1.0, 0.9), (0.9, 0.9), (0.7, 0.7)];

    print!("   r ");
    for (t1, t2) in cases {
        print!("  t1={t1:.1},t2={t2:.1}");
    }
    println!("\n     (values are dg/g relative to the SQL)");
    for k in 0..=8 {
        let r = 0.25 * k as f64;
        print!("{r:5.2}");
        for (t1, t2) in cases {
            let v = mz_squeezed_lossy(1.0, n_sig, r, Losses::new(t1, t2), &geo)?.value;
            print!("  {:>13.4}", v / reference);
        }
        println!();
    }

    println!("\nwith r -> infinity the ratio approaches sqrt(eta1^2 t2^2 + eta2^2)/(t1 t2):");
    for (t1, t2) in cases {
        let floor = ((1.0 - t1 * t1) * t2 * t2 + 1.0 - t2 * t2).sqrt() / (t1 * t2);
        println!("  t1={t1:.1}, t2={t2:.1}: {floor:.4}");
    }
    Ok(())
}
