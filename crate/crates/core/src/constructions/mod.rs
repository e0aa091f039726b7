//! Concrete groups: affine Frobenius groups over finite fields, the
//! `GF(27)` tower extended by its Galois group, and the standard families
//! used to populate catalogs.

mod families;
mod field;

pub use families::{standard_family, Family};
pub use field::{Field, FieldElement, MAX_FIELD_ORDER};

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// The pieces of `GF(q) ⋊ C_m` acting on the field elements (points are
/// field indices).
#[derive(Clone, Debug)]
pub struct AffineFrobenius {
    pub field: Field,
    /// `a -> a + p^j` for each basis vector; they generate the additive group.
    pub translations: Vec<Permutation>,
    /// `a -> w a` where `w` has multiplicative order `m`.
    pub multiplier: Permutation,
    pub group: PermGroup,
}

/// Permutation of the field induced by `f`.
pub fn field_permutation(field: &Field, f: impl Fn(&FieldElement) -> FieldElement) -> Permutation {
    let images = field
        .elements()
        .map(|a| field.index(&f(&a)) as usize)
        .collect();
    Permutation::from_images(images).expect("field map is a bijection")
}

/// `N ⋊ C_m` where `N` is the additive group of `GF(p^k)` and `C_m` is the
/// subgroup of order `m` of the multiplicative group, generated by
/// `g^((q-1)/m)` for the primitive element `g` of smallest index.
pub fn affine_frobenius_parts(p: u64, k: usize, m: u64) -> Result<AffineFrobenius> {
    let field = Field::new(p, k)?;
    let q = field.order();
    if m <= 1 || (q - 1) % m != 0 {
        return Err(Error::Construction(format!(
            "m = {m} must be > 1 and divide {p}^{k} - 1 = {}",
            q - 1
        )));
    }
    let translations: Vec<Permutation> = (0..k)
        .map(|j| {
            let b = field.element(p.pow(j as u32));
            field_permutation(&field, |a| field.add(a, &b))
        })
        .collect();
    let w = field.pow(&field.primitive_element(), (q - 1) / m);
    let multiplier = field_permutation(&field, |a| field.mul(&w, a));
    let mut gens = translations.clone();
    gens.push(multiplier.clone());
    let group = PermGroup::new(gens)?;
    Ok(AffineFrobenius {
        field,
        translations,
        multiplier,
        group,
    })
}

pub fn affine_frobenius(p: u64, k: usize, m: u64) -> Result<PermGroup> {
    affine_frobenius_parts(p, k, m).map(|a| a.group)
}

/// The affine group `AGL(1, q)` for a prime power `q = p^k`.
pub fn agl1(p: u64, k: usize) -> Result<PermGroup> {
    let q = p
        .checked_pow(k as u32)
        .ok_or_else(|| Error::Construction("field too large".into()))?;
    affine_frobenius(p, k, q - 1)
}

/// `GF(27) ⋊ C_13` and its extension by the Frobenius map `a -> a^3`.
#[derive(Clone, Debug)]
pub struct GammaTower {
    /// The additive group `N` of `GF(27)`, order 27.
    pub kernel: PermGroup,
    /// `N ⋊ C_13`, order 351.
    pub gamma0: PermGroup,
    /// `gamma0 ⋊ Gal(GF(27)/GF(3))`, order 1053.
    pub gamma: PermGroup,
    /// Multiplication by the square of the primitive element.
    pub multiplier: Permutation,
    /// `a -> a^3`.
    pub galois: Permutation,
}

pub fn gamma_tower() -> GammaTower {
    let parts = affine_frobenius_parts(3, 3, 13).expect("13 divides 26");
    let field = &parts.field;
    let galois = field_permutation(field, |a| field.frobenius(a));
    let kernel = PermGroup::new(parts.translations.clone()).expect("nonempty");
    let mut gens = parts.group.generators().to_vec();
    gens.push(galois.clone());
    let gamma = PermGroup::new(gens).expect("same degree");
    GammaTower {
        kernel,
        gamma0: parts.group,
        gamma,
        multiplier: parts.multiplier,
        galois,
    }
}
