// The four parabolic maps between group algebras and their adjunctions.

use coxkit::maps::{self, GroupVector};
use coxkit::{CoxeterSystem, SubsetMask};

pub fn run_example() -> coxkit::Result<()> {
    let b3 = CoxeterSystem::b(3);
    let i = SubsetMask::from_indices([0, 1]);
    let u = b3.parse_element("-2,1,3")?;
    let x = GroupVector::basis(u.clone());

    let induced = maps::mu(&b3, i, &x)?;
    let induced_bar = maps::mu_bar(&b3, i, &x)?;
    println!("mu({u}) has {} terms, mu_bar({u}) has {}", induced.len(), induced_bar.len());
    assert_eq!(induced.len(), 6);

    // (mu x)^{-1} = mu_bar(x^{-1})
    assert_eq!(maps::invert_vector(&induced), maps::mu_bar(&b3, i, &maps::invert_vector(&x))?);

    // <mu x, y> = <x, rho_bar y> for every basis element y
    for w in b3.elements()?.iter() {
        let y = GroupVector::basis(w.clone());
        assert_eq!(maps::pairing(&induced, &y), maps::pairing(&x, &maps::rho_bar(&b3, i, &y)?));
    }

    let w = b3.parse_element("3,-1,2")?;
    let y = GroupVector::basis(w.clone());
    println!("rho({w}) = {}, rho_bar({w}) = {}", maps::rho(&b3, i, &y)?, maps::rho_bar(&b3, i, &y)?);
    println!("chi({w}) = {}", maps::chi(&b3, &y));
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
