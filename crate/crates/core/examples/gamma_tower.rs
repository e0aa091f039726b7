//! `GF(27)` acted on by its multiplicative subgroup of order 13 and by the
//! Frobenius automorphism.

use std::collections::BTreeMap;

use hugheslab::algebra::PrimeSet;
use hugheslab::constructions::{gamma_tower, Field};
use hugheslab::hughes::{hughes_p, hughes_pi};

fn main() -> hugheslab::Result<()> {
    let field = Field::new(3, 3)?;
    println!("GF(27) = GF(3)[x]/({})", field.modulus_string());
    let w = field.primitive_element();
    println!(
        "primitive element {:?}, order {:?}",
        w.coefficients(),
        field.multiplicative_order(&w)
    );

    let t = gamma_tower();
    println!(
        "|N| = {}, |Gamma0| = {}, |Gamma| = {}",
        t.kernel.order(),
        t.gamma0.order(),
        t.gamma.order()
    );

    let mut orders = BTreeMap::new();
    for x in t.gamma.members()? {
        *orders.entry(x.order()).or_insert(0) += 1;
    }
    println!("element orders in Gamma: {orders:?}");

    let h13 = hughes_p(&t.gamma0, 13)?;
    println!(
        "H_13(Gamma0) = N: {}",
        h13.subgroup.group().same_group(&t.kernel)
    );
    println!("|H_13(Gamma0)| = {}", h13.order());
    println!("|H_3(Gamma)| = {}", hughes_p(&t.gamma, 3)?.order());
    println!(
        "|H_{{3,13}}(Gamma)| = {}",
        hughes_pi(&t.gamma, &PrimeSet::new([3, 13])?)?.order()
    );
    println!(
        "|H_{{3,13}}(Gamma0)| = {}",
        hughes_pi(&t.gamma0, &PrimeSet::new([3, 13])?)?.order()
    );
    Ok(())
}
