//! Smith normal form and linear congruences modulo `N`.

use gcrossed::exact::{smith_normal_form, solve_congruences, Congruences, IntMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let snf = smith_normal_form(&a)?;
    println!("invariant factors {:?}", snf.factors);

    // x + y = 1, x - y = 1 (mod 3)
    let system = IntMatrix::from_rows(&[vec![1, 1], vec![1, -1]])?;
    match solve_congruences(&system, &[1, 1], 3)? {
        Congruences::Infeasible => println!("no solution"),
        Congruences::Solutions(s) => {
            println!("{} solution(s), particular {:?}", s.count(), s.particular);
        }
    }
    // 2x = 0 (mod 4) has a kernel of order 2
    let s = solve_congruences(&IntMatrix::from_rows(&[vec![2]])?, &[0], 4)?
        .solutions()
        .expect("homogeneous");
    println!("2x = 0 mod 4: {:?}", s.iter().collect::<Vec<_>>());
    Ok(())
}
