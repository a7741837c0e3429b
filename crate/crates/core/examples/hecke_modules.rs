// 0-Hecke modules: simples, projectives, induction, restriction and characteristics.

use coxkit::hecke;
use coxkit::series::{self, BasisKind};
use coxkit::{Composition, CoxeterSystem, SubsetMask};

pub fn run_example() -> coxkit::Result<()> {
    let b3 = CoxeterSystem::b(3);
    let i = SubsetMask::from_indices([1, 2]);

    let c = hecke::simple_module(&b3, i, SubsetMask::EMPTY)?;
    let induced = hecke::induce(&c)?;
    println!("Ind C_{{}} from {i}: dim {}, factors {}", induced.dim(), hecke::composition_factors(&induced));

    let p = hecke::indecomposable_projective(&b3, SubsetMask::from_indices([0, 2]))?;
    p.check_relations()?;
    let restricted = hecke::restrict(&p, i)?;
    println!("Res P_{{0,2}} to {i} = {}", hecke::projective_multiplicities(&restricted)?);

    let alpha = Composition::parse("(0,2,1)")?;
    let pa = hecke::indecomposable_projective(&b3, alpha.descent_set())?;
    let ch = hecke::ch_quasisymmetric(&b3, &hecke::composition_factors(&pa), 4)?;
    assert_eq!(ch, series::ribbon_qsym(BasisKind::SB, &alpha, 4)?);
    println!("Ch(P{alpha}) is the ribbon function with {} monomials", ch.len());
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
