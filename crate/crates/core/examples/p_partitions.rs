// Parsets of roots, their P-partitions and the Jordan-Holder decomposition.

use coxkit::series::{self, Parset};
use coxkit::{CoxeterSystem, SubsetMask};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> coxkit::Result<()> {
    let b2 = CoxeterSystem::b(2);
    let p = Parset::parabolic(&b2, &b2.identity(), SubsetMask::singleton(1))?;
    println!("parset with {} roots, Jordan-Holder set {:?}", p.len(), p.jordan_holder(&b2)?);

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let d3 = CoxeterSystem::d(3);
    let m = 3;
    for _ in 0..5 {
        let p = series::random_parset(&d3, &mut rng);
        let mut lhs = p.p_partitions(m);
        let mut rhs = Vec::new();
        for w in p.jordan_holder(&d3)? {
            rhs.extend(Parset::of_element(&d3, &w).p_partitions(m));
        }
        lhs.sort();
        rhs.sort();
        assert_eq!(lhs, rhs);
        println!("{} roots: {} P-partitions split over the linear extensions", p.len(), lhs.len());
    }
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
