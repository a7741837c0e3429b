// Descent algebra maps, the c form and the Aguiar-Mahajan bases.

use coxkit::descent;
use coxkit::linalg;
use coxkit::maps::SubsetVector;
use coxkit::{CoxeterSystem, SubsetMask};

pub fn run_example() -> coxkit::Result<()> {
    let b3 = CoxeterSystem::b(3);
    let i = SubsetMask::from_indices([1, 2]);
    let x = SubsetVector::basis(SubsetMask::singleton(1));
    println!("sigma induce of Y_{{1}} from {i}: {}", descent::sigma_induce(&b3, i, &x)?);
    println!(
        "sigma restrict of Y_{{0,2}} to {i}: {}",
        descent::sigma_restrict(&b3, i, &SubsetVector::basis(SubsetMask::from_indices([0, 2])))?
    );

    let b2 = CoxeterSystem::b(2);
    let (keys, c) = descent::c_matrix(&b2)?;
    println!("c matrix of {b2} on {keys:?}:");
    for row in &c {
        println!("  {row:?}");
    }
    assert_eq!(linalg::fmt_q(&descent::c_determinant(&b2)?), "3");

    let a3 = CoxeterSystem::a(4);
    let bases = descent::sym_bases(&a3)?;
    println!("{a3}: {} parabolic conjugacy classes", bases.classes.len());
    assert_eq!(bases.hm_matrix(&a3)?, linalg::identity(bases.classes.len()));
    let full = a3.full_set();
    let (p, q) = (SubsetMask::singleton(1), SubsetMask::singleton(2));
    println!("<h_{p}, h_{q}> = {} = number of double cosets", descent::h_gram(&a3, p, q)?);
    assert_eq!(
        descent::h_gram(&a3, p, q)?,
        descent::double_coset_count(&a3, full.difference(p), full.difference(q))? as i64
    );
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
