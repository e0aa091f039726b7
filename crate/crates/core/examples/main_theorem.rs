//! Both sides of the characterization of exceptional `H_pi`, over the
//! solvable groups of the builtin catalog.

use hugheslab::algebra::is_solvable;
use hugheslab::harness::builtin_catalog;
use hugheslab::structure::main_theorem_check;

fn main() -> hugheslab::Result<()> {
    let mut checked = 0;
    for e in builtin_catalog() {
        if !is_solvable(&e.group) {
            continue;
        }
        let v = main_theorem_check(&e.group)?;
        checked += 1;
        if let Some(f) = &v.frobenius {
            println!(
                "{:<12} case {:<15} kernel {:>4} complement {:>3} |H_q(F)| {:?} consistent {}",
                e.name,
                v.classification.case.to_string(),
                f.kernel_order(),
                f.complement_order,
                v.kernel_hughes_order,
                v.consistent()
            );
        }
    }
    println!("{checked} solvable groups checked");
    Ok(())
}
