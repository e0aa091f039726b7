use crate::algebra::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::affine_frobenius;

/// Standard group families with fixed, documented generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `C_n` generated by the `n`-cycle `(0 1 .. n-1)`.
    Cyclic(usize),
    /// Symmetries of the `n`-gon, order `2n` (`n >= 3`): rotation and `i -> -i`.
    Dihedral(usize),
    /// `S_n` from `(0 1)` and `(0 1 .. n-1)`.
    Symmetric(usize),
    /// `A_n` from the 3-cycles `(0 1 i)`.
    Alternating(usize),
    /// `C_p^rank` as `rank` disjoint `p`-cycles.
    ElementaryAbelian { p: u64, rank: usize },
    /// Extraspecial group of order `p^3`, odd `p`, in its regular
    /// representation. `exponent_p = true` gives the Heisenberg group
    /// `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`; otherwise
    /// `C_{p^2} ⋊ C_p` with `y x y^-1 = x^(1+p)`.
    Extraspecial { p: u64, exponent_p: bool },
    /// Generalized quaternion group of order `2^n`, `n >= 3`, regular representation.
    Quaternion { n: u32 },
    /// Semidihedral group of order `2^n`, `n >= 4`, regular representation.
    Semidihedral { n: u32 },
    /// `x -> a x + b` on `Z_n`, with `gcd(a, n) = 1`.
    AffineMod { n: usize, a: usize },
    /// `GF(p^k) ⋊ C_m`.
    AffineField { p: u64, k: usize, m: u64 },
    /// Direct product acting on the disjoint union of the point sets.
    Direct(Box<Family>, Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<PermGroup> {
        match *self {
            Family::Cyclic(n) => {
                let n = n.max(1);
                let c: Vec<usize> = (0..n).collect();
                PermGroup::new(vec![Permutation::from_cycles(n, &[&c])?])
            }
            Family::Dihedral(n) => {
                if n < 3 {
                    return Err(Error::Construction("dihedral needs n >= 3".into()));
                }
                let rot = Permutation::from_images((0..n).map(|i| (i + 1) % n).collect())?;
                let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
                PermGroup::new(vec![rot, refl])
            }
            Family::Symmetric(n) => {
                if n < 2 {
                    return Ok(PermGroup::trivial(n.max(1)));
                }
                let c: Vec<usize> = (0..n).collect();
                PermGroup::new(vec![
                    Permutation::from_cycles(n, &[&[0, 1]])?,
                    Permutation::from_cycles(n, &[&c])?,
                ])
            }
            Family::Alternating(n) => {
                if n < 3 {
                    return Ok(PermGroup::trivial(n.max(1)));
                }
                let gens = (2..n)
                    .map(|i| Permutation::from_cycles(n, &[&[0, 1, i]]))
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(gens)
            }
            Family::ElementaryAbelian { p, rank } => {
                check_prime(p)?;
                if rank == 0 {
                    return Ok(PermGroup::trivial(1));
                }
                let p = p as usize;
                let degree = p * rank;
                let gens = (0..rank)
                    .map(|r| {
                        let c: Vec<usize> = (r * p..(r + 1) * p).collect();
                        Permutation::from_cycles(degree, &[&c])
                    })
                    .collect::<Result<Vec<_>>>()?;
                PermGroup::new(gens)
            }
            Family::Extraspecial { p, exponent_p } => {
                check_prime(p)?;
                if p == 2 {
                    return Err(Error::Construction(
                        "extraspecial family is for odd p; use dihedral(4) or quaternion(3)".into(),
                    ));
                }
                let p = p as usize;
                if exponent_p {
                    // (a, b, c) encoded as a + p b + p^2 c.
                    let enc = |a: usize, b: usize, c: usize| a + p * b + p * p * c;
                    let mul = |x: usize, y: usize| {
                        let (a, b, c) = (x % p, x / p % p, x / (p * p));
                        let (a2, b2, c2) = (y % p, y / p % p, y / (p * p));
                        enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)
                    };
                    regular_representation(p * p * p, &[enc(1, 0, 0), enc(0, 1, 0)], mul)
                } else {
                    // x^i y^j encoded as i + p^2 j.
                    let m = p * p;
                    let twist = |j: usize, k: usize| {
                        let mut t = k;
                        for _ in 0..j {
                            t = t * (1 + p) % m;
                        }
                        t
                    };
                    let mul = |x: usize, y: usize| {
                        let (i, j) = (x % m, x / m);
                        let (k, l) = (y % m, y / m);
                        (i + twist(j, k)) % m + m * ((j + l) % p)
                    };
                    regular_representation(m * p, &[1, m], mul)
                }
            }
            Family::Quaternion { n } => {
                if n < 3 {
                    return Err(Error::Construction("quaternion needs n >= 3".into()));
                }
                let m = 1usize << (n - 1);
                // x^i y^j as i + m j; y x y^-1 = x^-1, y^2 = x^(m/2).
                let mul = |u: usize, v: usize| {
                    let (i, j) = (u % m, u / m);
                    let (k, l) = (v % m, v / m);
                    let k = if j == 1 { (m - k) % m } else { k };
                    let extra = if j == 1 && l == 1 { m / 2 } else { 0 };
                    (i + k + extra) % m + m * (j ^ l)
                };
                regular_representation(2 * m, &[1, m], mul)
            }
            Family::Semidihedral { n } => {
                if n < 4 {
                    return Err(Error::Construction("semidihedral needs n >= 4".into()));
                }
                let m = 1usize << (n - 1);
                let s = m / 2 - 1;
                // x^i y^j as i + m j; y x y^-1 = x^(m/2 - 1), y^2 = 1.
                let mul = |u: usize, v: usize| {
                    let (i, j) = (u % m, u / m);
                    let (k, l) = (v % m, v / m);
                    let k = if j == 1 { k * s % m } else { k };
                    (i + k) % m + m * (j ^ l)
                };
                regular_representation(2 * m, &[1, m], mul)
            }
            Family::AffineMod { n, a } => {
                if n < 2 || gcd(a, n) != 1 {
                    return Err(Error::Construction(format!(
                        "need n >= 2 and gcd(a, n) = 1, got n = {n}, a = {a}"
                    )));
                }
                let t = Permutation::from_images((0..n).map(|x| (x + 1) % n).collect())?;
                let u = Permutation::from_images((0..n).map(|x| a * x % n).collect())?;
                PermGroup::new(vec![t, u])
            }
            Family::AffineField { p, k, m } => affine_frobenius(p, k, m),
            Family::Direct(ref a, ref b) => {
                let a = a.build()?;
                let b = b.build()?;
                direct_product(&a, &b)
            }
        }
    }
}

/// `A × B` acting on `A`'s points followed by `B`'s.
pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (da, db) = (a.degree(), b.degree());
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images = g.images().to_vec();
        images.extend(da..da + db);
        gens.push(Permutation::from_images(images)?);
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (0..da).collect();
        images.extend(g.images().iter().map(|&x| x + da));
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::new(gens)
}

/// Left-regular representation of a group on `{0..order-1}` given by its
/// multiplication: generator `g` acts by `h -> mul(g, h)`.
pub fn regular_representation(
    order: usize,
    generators: &[usize],
    mul: impl Fn(usize, usize) -> usize,
) -> Result<PermGroup> {
    let gens = generators
        .iter()
        .map(|&g| Permutation::from_images((0..order).map(|h| mul(g, h)).collect()))
        .collect::<Result<Vec<_>>>()?;
    PermGroup::new(gens)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Builds a family by name, e.g. `("dihedral", &[4])` or
/// `("extraspecial", &[5, 5])`. The group must fit under its cap.
///
/// Names: `cyclic n`, `dihedral n`, `symmetric n`, `alternating n`,
/// `elementary p rank`, `extraspecial p exponent` (exponent `p` or `p^2`),
/// `quaternion order`, `semidihedral order`, `affine-mod n a`,
/// `affine p k m`, `agl p k`.
pub fn standard_family(name: &str, params: &[u64]) -> Result<PermGroup> {
    let arg = |i: usize| -> Result<u64> {
        params
            .get(i)
            .copied()
            .ok_or_else(|| Error::Construction(format!("{name}: missing parameter {}", i + 1)))
    };
    let log2 = |order: u64| -> Result<u32> {
        if order.is_power_of_two() {
            Ok(order.trailing_zeros())
        } else {
            Err(Error::Construction(format!(
                "{name}: order {order} is not a power of 2"
            )))
        }
    };
    let family = match name.to_ascii_lowercase().as_str() {
        "cyclic" => Family::Cyclic(arg(0)? as usize),
        "dihedral" => Family::Dihedral(arg(0)? as usize),
        "symmetric" => Family::Symmetric(arg(0)? as usize),
        "alternating" => Family::Alternating(arg(0)? as usize),
        "elementary" | "elementary-abelian" => Family::ElementaryAbelian {
            p: arg(0)?,
            rank: arg(1)? as usize,
        },
        "extraspecial" => {
            let p = arg(0)?;
            let e = arg(1)?;
            if e != p && e != p * p {
                return Err(Error::Construction(format!(
                    "extraspecial exponent must be {p} or {}",
                    p * p
                )));
            }
            Family::Extraspecial {
                p,
                exponent_p: e == p,
            }
        }
        "quaternion" => Family::Quaternion { n: log2(arg(0)?)? },
        "semidihedral" => Family::Semidihedral { n: log2(arg(0)?)? },
        "affine-mod" => Family::AffineMod {
            n: arg(0)? as usize,
            a: arg(1)? as usize,
        },
        "affine" => Family::AffineField {
            p: arg(0)?,
            k: arg(1)? as usize,
            m: arg(2)?,
        },
        "agl" => {
            let (p, k) = (arg(0)?, arg(1)? as usize);
            let q = p
                .checked_pow(k as u32)
                .ok_or_else(|| Error::Construction("field too large".into()))?;
            Family::AffineField { p, k, m: q - 1 }
        }
        other => return Err(Error::UnknownGroup(other.to_string())),
    };
    let group = family.build()?;
    if group.order() > group.cap() as u128 {
        return Err(Error::CapExceeded { cap: group.cap() });
    }
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{exponent_and_primes, nilpotence_class};

    #[test]
    fn named_examples() {
        assert_eq!(standard_family("dihedral", &[4]).unwrap().order(), 8);
        assert_eq!(standard_family("symmetric", &[4]).unwrap().order(), 24);
        let e = standard_family("extraspecial", &[5, 5]).unwrap();
        assert_eq!((e.degree(), e.order()), (125, 125));
        assert_eq!(nilpotence_class(&e), Some(2));
        assert_eq!(exponent_and_primes(&e).unwrap().0, 5);
    }

    #[test]
    fn unknown_and_bad_parameters() {
        assert_eq!(
            standard_family("mystery", &[1]).unwrap_err(),
            Error::UnknownGroup("mystery".into())
        );
        assert!(standard_family("dihedral", &[]).is_err());
        assert!(standard_family("extraspecial", &[5, 7]).is_err());
        assert!(standard_family("quaternion", &[12]).is_err());
        assert!(standard_family("symmetric", &[12]).is_err());
        assert!(standard_family("affine-mod", &[6, 2]).is_err());
    }

    #[test]
    fn family_orders() {
        let cases: Vec<(Family, u128)> = vec![
            (Family::Cyclic(12), 12),
            (Family::Cyclic(1), 1),
            (Family::Dihedral(7), 14),
            (Family::Alternating(5), 60),
            (Family::ElementaryAbelian { p: 3, rank: 3 }, 27),
            (
                Family::Extraspecial {
                    p: 3,
                    exponent_p: false,
                },
                27,
            ),
            (
                Family::Extraspecial {
                    p: 7,
                    exponent_p: true,
                },
                343,
            ),
            (Family::Quaternion { n: 3 }, 8),
            (Family::Quaternion { n: 4 }, 16),
            (Family::Semidihedral { n: 4 }, 16),
            (Family::AffineMod { n: 7, a: 2 }, 21),
            (
                Family::Direct(Box::new(Family::Cyclic(2)), Box::new(Family::Symmetric(3))),
                12,
            ),
        ];
        for (f, order) in cases {
            assert_eq!(f.build().unwrap().order(), order, "{f:?}");
        }
    }

    #[test]
    fn small_two_groups_have_expected_exponents() {
        let q8 = Family::Quaternion { n: 3 }.build().unwrap();
        let (e, _) = exponent_and_primes(&q8).unwrap();
        assert_eq!(e, 4);
        // Q8 has a unique involution.
        let involutions = q8
            .members()
            .unwrap()
            .iter()
            .filter(|g| g.order() == 2)
            .count();
        assert_eq!(involutions, 1);
        let sd16 = Family::Semidihedral { n: 4 }.build().unwrap();
        assert_eq!(exponent_and_primes(&sd16).unwrap().0, 8);
        assert_eq!(nilpotence_class(&sd16), Some(3));
        let m27 = Family::Extraspecial {
            p: 3,
            exponent_p: false,
        }
        .build()
        .unwrap();
        assert_eq!(exponent_and_primes(&m27).unwrap().0, 9);
        assert_eq!(nilpotence_class(&m27), Some(2));
    }
}
