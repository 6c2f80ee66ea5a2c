//! Singular vectors of M(lambda): certificates and the comparison with the
//! shifted Weyl orbit.

use toroidal::rational::int;
use toroidal::singular::{find_singular, scan_vs_dot_orbit};
use toroidal::{HighestWeight, RootVector, VermaModule};

fn main() -> toroidal::Result<()> {
    let hw = HighestWeight::new(int(1), int(2))?;
    let module = VermaModule::new(hw.clone());

    for eta in [2 * RootVector::alpha1(), 2 * RootVector::alpha0()] {
        let cert = find_singular(&module, &eta)?;
        println!("eta = {eta}: kernel dim {}", cert.kernel.len());
        for v in &cert.kernel {
            println!("  {v}");
        }
        println!("  raising checks pass: {}", cert.verified());
    }

    let report = scan_vs_dot_orbit(&hw, 8)?;
    println!("\nscan to depth 8 for {hw}:");
    for (eta, dim) in &report.found {
        println!("  singular at lambda - ({eta}), dim {dim}");
    }
    for p in &report.predicted {
        println!("  predicted {:?} . lambda at lambda - ({})", p.word, p.eta);
    }
    println!("exact match: {}", report.exact_match());
    Ok(())
}
