//! Parsing, composing and inspecting permutations.

use hugheslab::{compose, element_order, Permutation};

fn main() -> hugheslab::Result<()> {
    let a = Permutation::parse_cycles("(0 1 2 3 4)", 7)?;
    let b = Permutation::parse_cycles("(0 5)(1 6)", 7)?;
    let ab = compose(&a, &b)?;
    println!("a = {a}, b = {b}");
    println!("a*b = {ab} (b first), images {:?}", ab.images());
    println!("order(a*b) = {}", element_order(&ab));
    println!("[a, b] = {}", Permutation::commutator(&a, &b));
    println!("a^b = {}", a.conjugate_by(&b));
    println!("a^-1 = {}, a^7 = {}", a.inverse(), a.pow(7));

    let c = Permutation::from_images(vec![1, 0, 3, 4, 2])?;
    println!("{c} has cycles {:?} and order {}", c.cycles(), c.order());
    match Permutation::from_images(vec![0, 0, 1]) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
