//! SU(1,1) against a squeezed Mach-Zehnder: where each wins as loss grows.

use qgrav::closed_form::Scheme;
use qgrav::sweep::{find_crossover, CrossoverOptions, Engine, Param, Params};

fn main() -> qgrav::Result<()> {
    let base = Params::default().with(Param::Squeeze, 1.0);
    let searches = [
        (Scheme::Su11Joint, Scheme::MzSqueezed, Param::T2),
        (Scheme::Su11Single, Scheme::MzSqueezed, Param::T2),
        (Scheme::Su11Single, Scheme::Su11Joint, Param::T1),
    ];
    for (a, b, param) in searches {
        let c = find_crossover(
            Engine::closed(a),
            Engine::closed(b),
            param,
            &base,
            (0.5, 1.0),
            CrossoverOptions::default(),
        )?;
        println!(
            "{a} vs {b}: equal at {param} = {:.6}; {} wins below, {} above",
            c.value, c.better_below, c.better_above
        );
    }

    println!("\n  t2    mz_squeezed   su11_single   su11_joint   (simulated su11_joint)");
    for k in 0..=5 {
        let p = base.with(Param::T2, 0.75 + 0.05 * k as f64);
        let eval = |e: Engine| e.evaluate(&p).map(|r| r.value);
        println!(
            "{:.2}   {:.5e}   {:.5e}   {:.5e}   {:.5e}",
            p.get(Param::T2),
            eval(Engine::closed(Scheme::MzSqueezed))?,
            eval(Engine::closed(Scheme::Su11Single))?,
            eval(Engine::closed(Scheme::Su11Joint))?,
            eval(Engine::simulated(Scheme::Su11Joint))?,
        );
    }
    Ok(())
}
