//! Regularity, `Omega_1`, nilpotence class and `H_p` for small `p`-groups.

use hugheslab::algebra::nilpotence_class;
use hugheslab::constructions::Family;
use hugheslab::hughes::hughes_p;
use hugheslab::structure::{is_regular_p_group, omega1};

fn main() -> hugheslab::Result<()> {
    for (name, p, family) in [
        ("D8", 2, Family::Dihedral(4)),
        ("Q8", 2, Family::Quaternion { n: 3 }),
        ("D16", 2, Family::Dihedral(8)),
        (
            "3^(1+2), exponent 3",
            3,
            Family::Extraspecial {
                p: 3,
                exponent_p: true,
            },
        ),
        (
            "3^(1+2), exponent 9",
            3,
            Family::Extraspecial {
                p: 3,
                exponent_p: false,
            },
        ),
        (
            "5^(1+2), exponent 5",
            5,
            Family::Extraspecial {
                p: 5,
                exponent_p: true,
            },
        ),
    ] {
        let g = family.build()?;
        let reg = is_regular_p_group(&g, p)?;
        let om = omega1(&g, p)?;
        let h = hughes_p(&g, p)?;
        println!(
            "{name}: order {}, class {:?}, regular {}, |Omega_1| = {} (exact set: {}), |H_{p}| = {}",
            g.order(),
            nilpotence_class(&g),
            reg.regular,
            om.subgroup.order(),
            om.is_exact_set,
            h.order()
        );
        if let Some((x, y)) = reg.witness {
            println!("  irregular pair: x = {x}, y = {y}");
        }
    }
    Ok(())
}
