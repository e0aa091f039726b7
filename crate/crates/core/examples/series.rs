//! Derived and lower central series, centers, and quotients.

use hugheslab::algebra::{
    center, derived_series, derived_subgroup, lower_central_series, quotient,
};
use hugheslab::constructions::Family;

fn main() -> hugheslab::Result<()> {
    for (name, g) in [
        ("S4", Family::Symmetric(4).build()?),
        ("Q16", Family::Quaternion { n: 4 }.build()?),
        ("A5", Family::Alternating(5).build()?),
    ] {
        let d = derived_series(&g);
        let l = lower_central_series(&g);
        let orders = |t: &[hugheslab::algebra::SubgroupHandle]| {
            t.iter().map(|s| s.order()).collect::<Vec<_>>()
        };
        println!(
            "{name}: derived {:?} (length {:?}), lower central {:?} (class {:?}), |Z| = {}",
            orders(&d.terms),
            d.derived_length,
            orders(&l.terms),
            l.class,
            center(&g)?.order()
        );
    }

    let s4 = Family::Symmetric(4).build()?;
    let a4 = derived_subgroup(&s4);
    let q = quotient(&s4, &a4)?;
    println!(
        "S4 / A4 has order {} acting on {} cosets",
        q.order(),
        q.degree()
    );
    let v4 = derived_subgroup(a4.group());
    let q = quotient(
        &s4,
        &hugheslab::algebra::SubgroupHandle::new(&s4, v4.group().clone())?,
    )?;
    println!("S4 / V4 has order {}", q.order());
    Ok(())
}
