//! The quotient W(lambda) by the submodule generated by
//! f(0,0)^(n1+1) v and e(-1,0)^(n0+1) v, against the character of L(lambda).

use toroidal::quotient::{lchar_oracle, quotient_singular_dim, w_multiplicity};
use toroidal::singular::etas_up_to_depth;
use toroidal::{HighestWeight, RootVector, VermaModule};

fn main() -> toroidal::Result<()> {
    let hw = HighestWeight::dominant(1, 2);
    let module = VermaModule::new(hw.clone());
    println!("{hw}");
    println!(
        "{:>6} {:>8} {:>9} {:>8} {:>5} {:>9}",
        "eta", "ambient", "submodule", "quotient", "L", "singular"
    );
    let mut etas = vec![RootVector::ZERO];
    etas.extend(etas_up_to_depth(6));
    for eta in &etas {
        let q = w_multiplicity(&module, eta)?;
        let l = lchar_oracle(&hw, eta)?;
        let s = if eta.is_zero() {
            1
        } else {
            quotient_singular_dim(&module, eta)?
        };
        println!(
            "{:>6} {:>8} {:>9} {:>8} {:>5} {:>9}",
            format!("{},{}", q.eta.0, q.eta.1),
            q.ambient_dim,
            q.submodule_dim,
            q.quotient_dim,
            l,
            s
        );
    }
    Ok(())
}
