//! Brackets in the double loop algebra, with the central term and a few
//! identity checks.

use toroidal::algebra::bracket;
use toroidal::syntax::parse_element;

fn main() -> toroidal::Result<()> {
    let pairs = [
        ("e(1,0)", "f(-1,0)"),
        ("h(2,3)", "h(-2,-3)"),
        ("h(0,0)", "e(4,-1)"),
        ("d1", "f(-2,5)"),
        ("e(0,1) + 1/2*h(1,0)", "f(0,-1) - c2"),
    ];
    for (a, b) in pairs {
        let x = parse_element(a)?;
        let y = parse_element(b)?;
        println!("[{x}, {y}] = {}", bracket(&x, &y));
    }

    let a = parse_element("e(1,2)")?;
    let b = parse_element("f(-3,0) + h(2,-2)")?;
    let c = parse_element("e(2,0) - 2*d2")?;
    let jacobi = &(&bracket(&a, &bracket(&b, &c)) + &bracket(&b, &bracket(&c, &a)))
        + &bracket(&c, &bracket(&a, &b));
    println!("Jacobi sum: {jacobi}");
    Ok(())
}
