// Signed permutations as Coxeter group elements: lengths, descents,
// reduced words and parabolic factorizations.

use coxkit::{CoxeterSystem, Family, Side, SubsetMask};

pub fn run_example() -> coxkit::Result<()> {
    let s3 = CoxeterSystem::new(Family::A, 2)?;
    let u = s3.parse_element("2,1,3")?;
    let v = s3.parse_element("2,3,1")?;
    // (uv)(i) = u(v(i))
    println!("{u} * {v} = {}", &u * &v);
    assert_eq!(&u * &v, s3.parse_element("1,3,2")?);

    let b2 = CoxeterSystem::b(2);
    let w = b2.parse_element("-2,1")?;
    println!(
        "in {b2}: length {}, descents {}, reduced word {:?}",
        b2.length(&w),
        b2.descent_set(&w),
        b2.reduced_word(&w)
    );
    assert_eq!(b2.length(&w), 2);
    assert_eq!(b2.from_word(&b2.reduced_word(&w)), w);

    let d4 = CoxeterSystem::d(4);
    println!("{d4} has order {} and longest element {}", d4.order(), d4.longest_element(d4.full_set()));

    // w = w^I w_I with w^I minimal in its coset w W_I
    let b3 = CoxeterSystem::b(3);
    let i = SubsetMask::from_indices([1, 2]);
    let w = b3.parse_element("2,-3,1")?;
    let (top, bottom) = b3.decompose_left(&w, i);
    println!("{w} = {top} * {bottom} with {bottom} in W_{i}");
    assert_eq!(&top * &bottom, w);
    assert!(b3.min_coset_reps(i, Side::Left)?.contains(&top));
    println!("{} minimal coset representatives", b3.min_coset_reps(i, Side::Left)?.len());
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
