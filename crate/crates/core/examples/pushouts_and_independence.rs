//! A pushout, its two legs, and independence of submodule squares.
//!
//! ```bash
//! cargo run -p ppmod --example pushouts_and_independence
//! ```

use ppmod::exactlin::Matrix;
use ppmod::pp::{mode_submodules, Mode};
use ppmod::pushout::{find_independence_base, is_independent_submodules, pushout};
use ppmod::{Hom, Module, Ring, Submodule};

fn main() -> ppmod::Result<()> {
    let z4 = Ring::zmod(4)?;
    let two = Module::new(&z4, vec![2], vec![Matrix::from_vec(1, 1, vec![1])])?;
    let four = Module::regular(&z4);
    let f1 = Hom::new(&two, &four, Matrix::from_vec(1, 1, vec![2]))?;
    let f2 = Hom::zero(&two, &two);
    let p = pushout(&f1, &f2)?;
    println!("pushout of 1->2 and 0: apex orders {:?}", p.apex.orders());
    for mode in Mode::ALL {
        println!("  {mode}: {:?}", p.check_legs(mode));
    }

    // Z/4 + Z/4 with its two coordinate lines over the zero base
    let n = Module::free(&z4, 2);
    let full = Submodule::full(&n);
    let x = Submodule::generate(&n, &[vec![1, 0]])?;
    let y = Submodule::generate(&n, &[vec![0, 1]])?;
    let zero = Submodule::zero(&n);
    for mode in Mode::ALL {
        println!("{mode}: coordinate lines independent over 0: {}", is_independent_submodules(&zero, &x, &y, &full, mode)?);
    }

    let subs = mode_submodules(&n, Mode::Pure);
    let (m1, m2) = (&subs[1], &subs[subs.len() - 2]);
    let (m0, m1e) = find_independence_base(m1, m2, Mode::Pure)?;
    println!(
        "base for {:?} and {:?}: M0 = {:?}, enlarged M1 = {:?}",
        m1.generators(),
        m2.generators(),
        m0.generators(),
        m1e.generators()
    );
    Ok(())
}
