// Standardizations, shuffle and convolution products and their coproducts.

use coxkit::shuffle::{self, Coproduct, Product};
use coxkit::Element;

pub fn run_example() -> coxkit::Result<()> {
    let st = shuffle::st(&[3, 2, 2, 3, 6, 2, 5]);
    println!("st(3223625) = {st}");
    assert_eq!(st, Element::parse("4,1,2,5,7,3,6")?);
    println!("signed st(2,-4,3,-2,0,2,0,-2) = {}", shuffle::st_b(&[2, -4, 3, -2, 0, 2, 0, -2]));

    let (u, v) = (Element::parse("2,1")?, Element::parse("1,2")?);
    for p in [Product::ShuffleA, Product::CupA] {
        let x = p.apply(&u, &v)?;
        println!("{u} {p} {v} = {x}");
        assert_eq!(x.len(), 6);
    }
    let signed = Product::ShuffleB.apply(&Element::parse("-1")?, &Element::parse("2,1")?)?;
    println!("-1 shuffleB 21 has {} terms", signed.len());

    let w = Element::parse("2,-4,-3,1")?;
    for (i, (x, y)) in Coproduct::UnshuffleD.splits(&w)? {
        println!("unshuffleD split {i}: {x} (x) {y}");
    }

    let (a, b, z) = shuffle::factor_d(&Element::parse("2,-5,1,-3,4")?, 3)?;
    println!("2,-5,1,-3,4 = ({a} x {b}) {z}");
    assert_eq!(&shuffle::cross(&a, &b) * &z, Element::parse("2,-5,1,-3,4")?);
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
