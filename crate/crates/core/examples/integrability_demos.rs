//! Computations below δ2-level zero: e(0,-1) is not locally nilpotent on
//! W(lambda), and the weight space at lambda - d2 is infinite-dimensional.

use toroidal::quotient::{demo_infinite_dim, demo_nonintegrability};
use toroidal::rational::{format_rational, frac, int};
use toroidal::HighestWeight;

fn main() -> toroidal::Result<()> {
    let hw = HighestWeight::new(int(0), frac(1, 2))?;
    let t = demo_nonintegrability(&hw, 4)?;
    for line in &t.lines {
        println!(
            "[{}] {}",
            if line.holds { "ok" } else { "FAIL" },
            line.claim
        );
    }
    println!("{}\n", t.conclusion);

    let hw = HighestWeight::new(int(0), int(1))?;
    let r = demo_infinite_dim(&hw, 6)?;
    println!("<h(s,1), h(-m,-1) h(m,-1) v> for s, m = 1..6:");
    for row in &r.matrix {
        println!(
            "  {}",
            row.iter()
                .map(|c| format!("{:>3}", format_rational(c)))
                .collect::<String>()
        );
    }
    println!("rank {} of {}", r.rank, r.size);
    Ok(())
}
