//! Frobenius kernels and fixed-point-free automorphisms.

use hugheslab::constructions::{affine_frobenius_parts, agl1, Family};
use hugheslab::structure::{frobenius_decomposition, is_fixed_point_free, AutomorphismSpec};

fn main() -> hugheslab::Result<()> {
    for (name, g) in [
        ("A4", Family::Alternating(4).build()?),
        ("AGL(1,8)", agl1(2, 3)?),
        ("F21", Family::AffineMod { n: 7, a: 2 }.build()?),
        ("S4", Family::Symmetric(4).build()?),
        ("C6", Family::Cyclic(6).build()?),
    ] {
        match frobenius_decomposition(&g)? {
            Some(c) => println!(
                "{name}: kernel of order {} ({}abelian), complement of order {}",
                c.kernel_order(),
                if c.kernel_is_abelian { "" } else { "non" },
                c.complement_order
            ),
            None => println!("{name}: not a Frobenius group"),
        }
    }

    let parts = affine_frobenius_parts(3, 3, 13)?;
    let kernel = hugheslab::PermGroup::new(parts.translations.clone())?;
    let phi = AutomorphismSpec::by_conjugation(&kernel, &parts.multiplier)?;
    println!(
        "multiplication by an element of order 13 on GF(27): order {}, {} fixed points, fixed-point-free: {}",
        phi.order(),
        phi.fixed_point_count(),
        is_fixed_point_free(&phi)
    );
    Ok(())
}
