//! Parsing pp-formulas, the subgroups they define, and the classification
//! of embeddings with witnesses.
//!
//! ```bash
//! cargo run -p ppmod --example pp_formulas
//! ```

use ppmod::exactlin::Matrix;
use ppmod::module::all_submodules;
use ppmod::pp::classify_embedding;
use ppmod::{Hom, Module, PpFormula, Ring};

fn main() -> ppmod::Result<()> {
    let z8 = Ring::zmod(8)?;
    let m = Module::new(&z8, vec![2, 8], vec![Matrix::identity(2)])?;
    for text in ["E w1 . 2*w1 - x1 = 0", "4*x1 = 0", "E w1 . 4*w1 - x1 = 0 & 2*x1 = 0"] {
        let phi = PpFormula::parse(text, &z8)?;
        let g = phi.subgroup(&m)?;
        println!("{phi:<36} defines {} elements of Z/2 + Z/8", g.cardinality());
    }

    let z4 = Ring::zmod(4)?;
    let two = Module::new(&z4, vec![2], vec![Matrix::from_vec(1, 1, vec![1])])?;
    let f = Hom::new(&two, &Module::regular(&z4), Matrix::from_vec(1, 1, vec![2]))?;
    println!("Z/2 -> Z/4: {:?}", classify_embedding(&f));

    // every submodule of F2[x,y]/(x,y)^2 and how it sits
    let r = Ring::preset("f2xy").expect("preset");
    let reg = Module::regular(&r);
    for s in all_submodules(&reg) {
        let c = classify_embedding(s.inclusion());
        println!("  |S| = {:<2} rd {:<5} pure {:<5} witness {:?}", s.cardinality(), c.is_rd, c.is_pure, c.witness);
    }
    Ok(())
}
