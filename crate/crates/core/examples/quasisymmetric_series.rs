// Truncated noncommutative series, their three constructions and expansions.

use coxkit::series::{self, BasisKind, Construction, Level};
use coxkit::{Composition, CoxeterSystem};

pub fn run_example() -> coxkit::Result<()> {
    let alpha = Composition::parse("(0,2,1)")?;
    let m = 4;
    let by_class = series::basis_element(BasisKind::SB, &alpha, m, Construction::DescentClass)?;
    let by_tableau = series::basis_element(BasisKind::SB, &alpha, m, Construction::Tableau)?;
    let by_parset = series::basis_element(BasisKind::SB, &alpha, m, Construction::Parset)?;
    println!("sB{alpha} at window {m}: {} words", by_class.len());
    assert_eq!(by_class, by_tableau);
    assert_eq!(by_class, by_parset);

    let b3 = CoxeterSystem::b(3);
    let coords = series::expand_in_basis(&b3, Level::S, &by_class)?;
    println!("in the s basis it is a sum over {} elements of the descent class {}", coords.len(), alpha.descent_set());
    assert_eq!(coords.len(), b3.descent_class(alpha.descent_set())?.len());

    let ribbon = series::Ribbon::new(b3.family(), &alpha)?;
    let f = &ribbon.semistandard_words(2)[0];
    println!("a filling of the pseudo-ribbon {alpha}:\n{}", ribbon.render(f));

    let hb = series::hb_sym(&Composition::parse("(0,2)")?, 3)?;
    println!("hB(0,2) = {hb}");
    Ok(())
}

fn main() -> coxkit::Result<()> {
    run_example()
}
