//! Reducibility of M(lambda) from the resonance condition, checked against
//! the singular-vector scan.

use toroidal::rational::{frac, int};
use toroidal::reducibility::is_reducible;
use toroidal::singular::scan_singular;
use toroidal::HighestWeight;

fn main() -> toroidal::Result<()> {
    let weights = [
        (int(0), int(0)),
        (int(1), int(1)),
        (frac(1, 2), frac(1, 3)),
        (frac(-3, 2), int(0)),
        (frac(-3, 5), frac(1, 5)),
        (frac(-7, 3), frac(5, 2)),
    ];
    for (n1, k1) in weights {
        let hw = HighestWeight::new(n1, k1)?;
        let report = is_reducible(&hw);
        let first = scan_singular(&hw, 8)
            .first()
            .map(|(eta, d)| format!("{eta} (dim {d})"));
        match report.smallest_witness() {
            Some(w) => println!(
                "{hw}: reducible, smallest witness beta = {}, l = {}, depth {}; first singular: {}",
                w.beta,
                w.l,
                w.depth(),
                first.unwrap_or_else(|| "beyond depth 8".into())
            ),
            None => println!(
                "{hw}: irreducible (scanned k <= {}); first singular: {}",
                report.scan_bound,
                first.unwrap_or_else(|| "none".into())
            ),
        }
    }
    Ok(())
}
