//! Hughes subgroups and the classification of `H_pi`.

use hugheslab::algebra::PrimeSet;
use hugheslab::constructions::Family;
use hugheslab::hughes::{classify_pi, hughes_n, hughes_p, hughes_pi, PiChoice};

fn main() -> hugheslab::Result<()> {
    let s3 = Family::Symmetric(3).build()?;
    let h23 = hughes_pi(&s3, &"2,3".parse()?)?;
    let h2 = hughes_p(&s3, 2)?;
    println!(
        "S3: |H_{{2,3}}| = {}, |H_2| = {}, |S3| = {}",
        h23.order(),
        h2.order(),
        s3.order()
    );

    let c12 = Family::Cyclic(12).build()?;
    let h6 = hughes_n(&c12, 6)?;
    println!(
        "C12: H_6 has order {} from {} generators",
        h6.order(),
        h6.generator_count
    );

    for (name, g, pi) in [
        ("S3", s3.clone(), PiChoice::All),
        ("C6", Family::Cyclic(6).build()?, PiChoice::All),
        (
            "D30",
            Family::Dihedral(15).build()?,
            PiChoice::Set(PrimeSet::new([2, 3])?),
        ),
        ("S4", Family::Symmetric(4).build()?, PiChoice::All),
    ] {
        let c = classify_pi(&g, &pi)?;
        println!(
            "{name} with pi = {}: {} (|H_pi| = {}, H_p orders {:?}, prime {:?})",
            c.primes,
            c.case,
            c.h_pi_order(),
            c.hp_orders(),
            c.prime
        );
    }
    Ok(())
}
