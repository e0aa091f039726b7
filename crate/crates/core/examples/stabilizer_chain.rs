//! Schreier-Sims chains: order, base, membership, and a cross-check by
//! enumeration.

use hugheslab::constructions::{agl1, Family};
use hugheslab::group::bfs_closure;
use hugheslab::{PermGroup, Permutation};

fn main() -> hugheslab::Result<()> {
    let groups: Vec<(&str, PermGroup)> = vec![
        ("S6", Family::Symmetric(6).build()?),
        ("AGL(1,27)", agl1(3, 3)?),
        ("D64", Family::Dihedral(32).build()?),
    ];
    for (name, g) in &groups {
        let chain = g.chain();
        let enumerated = bfs_closure(g.degree(), g.generators(), g.cap())?.len();
        println!(
            "{name}: order {}, base {:?}, orbits {:?}, {} strong generators, enumerated {enumerated}",
            g.order(),
            chain.base(),
            chain.orbit_lengths(),
            chain.strong_generators().len(),
        );
    }

    let s6 = &groups[0].1;
    let a6 = Family::Alternating(6).build()?;
    let t = Permutation::parse_cycles("(0 1)", 6)?;
    println!(
        "(0 1) in S6: {}, in A6: {}",
        s6.contains(&t),
        a6.contains(&t)
    );
    println!("A6 <= S6: {}", a6.is_subgroup_of(s6));
    Ok(())
}
