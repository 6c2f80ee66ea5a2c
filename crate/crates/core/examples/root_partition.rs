//! Real and imaginary roots, the positive/negative split, reflections and
//! the shifted action of the affine Weyl group.

use toroidal::rational::int;
use toroidal::roots::{affine_weyl_words, classify, dot_action, is_positive, reflect, RootVector};
use toroidal::HighestWeight;

fn main() -> toroidal::Result<()> {
    for r in [
        RootVector::new(1, 0, 0),
        RootVector::new(-1, 2, 0),
        RootVector::new(1, -3, 1),
        RootVector::new(0, -1, 1),
        RootVector::new(0, 0, -2),
    ] {
        println!("{r:>10}  {:?}  positive={}", classify(&r), is_positive(&r)?);
    }

    let simple = [
        ("alpha_1", RootVector::alpha1()),
        ("alpha_0", RootVector::alpha0()),
        ("alpha_-1", RootVector::alpha_minus1()),
    ];
    for (name, r) in simple {
        println!("{name} = {r}");
    }

    let hw = HighestWeight::new(int(1), int(2))?;
    let lam = hw.weight();
    println!("lambda = {lam}");
    println!(
        "r_(a+d1)(lambda) = {}",
        reflect(&RootVector::new(1, 1, 0), &lam)?
    );
    for word in affine_weyl_words(3) {
        let mu = dot_action(&word, &lam);
        let eta = (&lam - &mu).as_root_vector().expect("in the root lattice");
        println!("{word:?} . lambda = lambda - ({eta})");
    }
    Ok(())
}
