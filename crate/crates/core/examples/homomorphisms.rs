//! Hom-groups between small Z/4-modules, kernels and images, and the
//! extension problem along an inclusion.
//!
//! ```bash
//! cargo run -p ppmod --example homomorphisms
//! ```

use ppmod::exactlin::Matrix;
use ppmod::hom::solve_extension;
use ppmod::{Hom, HomGroup, Module, Ring};

fn main() -> ppmod::Result<()> {
    let z4 = Ring::zmod(4)?;
    let two = Module::new(&z4, vec![2], vec![Matrix::from_vec(1, 1, vec![1])])?;
    let four = Module::regular(&z4);
    let sum = Module::new(&z4, vec![2, 4], vec![Matrix::identity(2)])?;

    for (a, b) in [(&two, &four), (&four, &two), (&four, &sum), (&sum, &sum)] {
        let hg = HomGroup::new(a, b)?;
        println!("|Hom({:?}, {:?})| = {}", a.orders(), b.orders(), hg.cardinality());
    }

    let f = Hom::new(&two, &four, Matrix::from_vec(1, 1, vec![2]))?;
    let a = f.analyze();
    println!("1 -> 2: injective {} surjective {} image {:?}", a.injective, a.surjective, a.image.generators());

    // the identity of Z/2 does not extend along Z/2 -> Z/4, the other map does
    for g in HomGroup::new(&two, &two)?.elements() {
        let ext = solve_extension(&f, &g)?;
        println!("g = {:?}: extension {:?}", g.matrix().to_rows(), ext.map(|h| h.matrix().to_rows()));
    }
    Ok(())
}
