//! PBW bases of weight spaces at δ2-level zero against the Kostant
//! partition function.

use toroidal::kostant::partition_count;
use toroidal::rational::frac;
use toroidal::{HighestWeight, RootVector, VermaModule};

fn main() -> toroidal::Result<()> {
    let module = VermaModule::new(HighestWeight::new(frac(1, 2), frac(3, 2))?);

    let eta = RootVector::new(1, 1, 0);
    println!("basis of M(lambda) at lambda - ({eta}):");
    for m in module.weight_space_basis(&eta)? {
        println!("  {m}");
    }

    println!(
        "\n a0\\a1 {}",
        (0..=6).map(|a| format!("{a:>5}")).collect::<String>()
    );
    for a0 in 0..=6 {
        let row: String = (0..=6)
            .map(|a1| {
                let pbw = module
                    .weight_space_basis(&RootVector::from_affine_coords(a0, a1))
                    .map(|b| b.len())
                    .unwrap_or(0);
                assert_eq!(pbw as u128, partition_count(a0, a1));
                format!("{pbw:>5}")
            })
            .collect();
        println!("{a0:>6} {row}");
    }

    // δ2-level -1 is infinite-dimensional; a window on the δ1-degrees shows growth
    let below = RootVector::DELTA2;
    for window in [1, 2, 3] {
        let t = module.truncated_weight_space_basis(&below, window)?;
        println!(
            "lambda - d2, factor degrees |m| <= {window}: {} monomials",
            t.monomials.len()
        );
    }
    Ok(())
}
