//! Dense permutations of `{0, .., n-1}`.
//!
//! Products follow the "right factor acts first" rule: `a * b` maps `i` to
//! `a(b(i))`. Everything else in the crate multiplies through [`compose`] or
//! the `Mul` impl, which share one code path.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// `compose(a, b)` maps `i` to `a(b(i))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.compose_unchecked(b))
}

/// Least `n >= 1` with `g^n = id`.
pub fn element_order(g: &Permutation) -> u128 {
    g.order()
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::NotBijection(format!(
                    "image {x} of point {i} is out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotBijection(format!("point {x} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree {
                    return Err(Error::Parse(format!(
                        "point {a} out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[a], true) {
                    return Err(Error::Parse(format!("point {a} appears twice")));
                }
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(images)
    }

    /// Parses cycle notation such as `"(0 1 2)(3 4)"`. The identity is `"()"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(degree, &refs)
    }

    /// Parses cycle notation and takes the degree to be one past the largest
    /// point mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        let degree = cycles.iter().flatten().map(|&x| x + 1).max().unwrap_or(0);
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Permutation::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Smallest point not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i != x)
            .map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub(crate) fn compose_unchecked(&self, right: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), right.degree());
        Permutation {
            images: right.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn pow(&self, mut exp: u128) -> Self {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.compose_unchecked(&base);
            }
        }
        acc
    }

    /// `h^-1 * self * h`.
    pub fn conjugate_by(&self, h: &Permutation) -> Self {
        h.inverse().compose_unchecked(&self.compose_unchecked(h))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Self {
        let ab = a.compose_unchecked(b);
        let ba = b.compose_unchecked(a);
        ba.inverse().compose_unchecked(&ab)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&x, &y)| self.images[y] == other.images[x])
    }

    /// Nontrivial cycles in order of their smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// lcm of the cycle lengths. Saturates at `u128::MAX` for degrees far
    /// beyond anything this crate is meant for.
    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| {
            let len = c.len() as u128;
            (acc / gcd(acc, len)).saturating_mul(len)
        })
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| Error::Parse("unclosed cycle".into()))?;
        let body = &body_start[..close];
        let points = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body_start[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}
