//! Smith form over Z, Howell form over Z/n and a mixed-moduli congruence
//! system.
//!
//! ```bash
//! cargo run -p ppmod --example linear_algebra
//! ```

use ppmod::exactlin::{howell_form, smith_normal_form, LinearSystem, Matrix, Solution};

fn main() {
    let m = Matrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]);
    let s = smith_normal_form(&m);
    println!("smith diagonal of {:?}: {:?}", m.to_rows(), s.diagonal());
    assert_eq!(s.u.mul(&m).mul(&s.v), s.d);

    let rows = vec![vec![2, 4, 0], vec![4, 2, 6], vec![6, 6, 6]];
    println!("howell form mod 8: {:?}", howell_form(rows, 3, 8));

    // x in Z/4, y in Z/6 with 2x + 3y = 1 (mod 4) and x + y = 2 (mod 2)
    let mut sys = LinearSystem::new(vec![4, 6]);
    sys.push(vec![2, 3], 1, 4);
    sys.push(vec![1, 1], 2, 2);
    match sys.solve() {
        Solution::Unsolvable => println!("no solution"),
        Solution::Solvable { particular, kernel } => {
            println!("particular {particular:?}, {} solutions in all", kernel.cardinality())
        }
    }
}
