//! Generating sets for Aut(T) and some of its filtration terms.

use crate::error::{AutError, MorphismError};
use crate::group::{Family, Group};
use crate::morphism::{catalog, GenMap, NamedAut};
use crate::params::GroupParams;

fn named(g: &Group, names: &[NamedAut]) -> Result<Vec<GenMap>, AutError> {
    names
        .iter()
        .map(|n| catalog(n, g).map_err(AutError::from))
        .collect()
}

/// Both slot placements of each generator of Z_level, wrapped by `make`.
fn slot_pairs(
    g: &Group,
    level: u32,
    make: fn(crate::Element, crate::Element) -> NamedAut,
) -> Vec<NamedAut> {
    let e = g.identity();
    g.center_generators(level)
        .into_iter()
        .flat_map(|z| [make(z, e), make(e, z)])
        .collect()
}

/// Generators of Aut_2(T) from 2-central perturbations A -> Ax, B -> By
/// (and central ones for K).
pub fn aut2_generators(g: &Group) -> Result<Vec<GenMap>, AutError> {
    require_m2(g)?;
    let names = match g.family() {
        Family::J => {
            let mut v = slot_pairs(g, 1, NamedAut::Omega);
            v.extend(slot_pairs(g, 2, NamedAut::PsiJ));
            v
        }
        Family::H => slot_pairs(g, 2, NamedAut::PiH),
        Family::K => {
            let mut v = slot_pairs(g, 1, NamedAut::Omega);
            v.extend(slot_pairs(g, 2, NamedAut::GammaK));
            v
        }
    };
    named(g, &names)
}

/// Generators of Aut_3(H) = Inn(H) Aut_2(H) <Gamma, Gamma^nu>.
pub fn aut3_h_generators(g: &Group) -> Result<Vec<GenMap>, AutError> {
    if g.family() != Family::H {
        return Err(AutError::Unsupported(format!("Aut_3(H) generators in {g}")));
    }
    let mut v = aut2_generators(g)?;
    v.extend(named(
        g,
        &[
            NamedAut::Inner(g.gen_a()),
            NamedAut::Inner(g.gen_b()),
            NamedAut::GammaH,
        ],
    )?);
    let nu = catalog(&NamedAut::Nu, g)?;
    let gamma = catalog(&NamedAut::GammaH, g)?;
    v.push(nu.compose(&gamma).compose(&nu));
    Ok(v)
}

fn require_m2(g: &Group) -> Result<(), AutError> {
    if g.params().m < 2 {
        return Err(AutError::Unsupported(format!(
            "{g}: generating sets need m >= 2"
        )));
    }
    Ok(())
}

/// A generating set of Aut(T).
///
/// K: Aut_2(K) S <mu, Phi>, with S = {f_n} generated by f_(-1) and f_5.
/// H: Aut_2(H) Inn(H) <Gamma, Sigma_1, nu>.
/// J: Omega_(1, A^(2u)), Psi_(1, C^s), Delta_1, Delta_2, A delta, Delta_3, theta,
/// and Sigma when m > 2. For m = 1 only J is supported (the quaternion case).
pub fn standard_generators(family: Family, params: GroupParams) -> Result<Vec<GenMap>, AutError> {
    let g = Group::new(family, params);
    let (m, s, u) = (params.m, params.s, params.u);
    if m == 1 {
        if family != Family::J {
            return Err(AutError::Unsupported(format!(
                "{g}: only J is supported at m = 1"
            )));
        }
        return quaternion_generators(&g);
    }
    let e = g.identity();
    match family {
        Family::K => {
            let mut v = aut2_generators(&g)?;
            v.extend(named(
                &g,
                &[
                    NamedAut::F(-1),
                    NamedAut::F(5),
                    NamedAut::Mu,
                    NamedAut::PhiK,
                ],
            )?);
            Ok(v)
        }
        Family::H => {
            let mut v = aut2_generators(&g)?;
            let mut names = vec![
                NamedAut::Inner(g.gen_a()),
                NamedAut::Inner(g.gen_b()),
                NamedAut::GammaH,
                NamedAut::Nu,
            ];
            if m > 2 {
                names.push(NamedAut::SigmaH);
            }
            v.extend(named(&g, &names)?);
            Ok(v)
        }
        Family::J => {
            let mut names = vec![
                NamedAut::Omega(e, g.power(g.gen_a(), 2 * u)),
                NamedAut::PsiJ(e, g.power(g.gen_c(), s)),
                NamedAut::Delta1,
                NamedAut::Delta2,
                NamedAut::Inner(g.gen_a()),
                NamedAut::Delta3,
                NamedAut::Theta,
            ];
            if m > 2 {
                names.push(NamedAut::SigmaJ(if m == 3 { 1 } else { 0 }));
            }
            named(&g, &names)
        }
    }
}

/// J at m = 1 is the quaternion group of order 16, whose automorphism group
/// is the holomorph of Z/8.
fn quaternion_generators(g: &Group) -> Result<Vec<GenMap>, AutError> {
    let a = g.gen_a();
    let b = g.gen_b();
    let mut v = named(
        g,
        &[NamedAut::Theta, NamedAut::Inner(a), NamedAut::Inner(b)],
    )?;
    // x -> x^3 on an element of order 8, fixing another generator.
    let ab = g.mul(a, b);
    let x = if g.element_order(ab) == 8 { ab } else { a };
    let y = if x == a { b } else { a };
    // Realize x -> x^3, y -> y as a map on A, B.
    let f = solve_generator_images(g, x, y, g.power(x, 3), y)?;
    v.push(f);
    Ok(v)
}

/// The map sending x -> x', y -> y', where {x, y} generate, found by search
/// over image pairs of A and B (only used for the 16-element group).
fn solve_generator_images(
    g: &Group,
    x: crate::Element,
    y: crate::Element,
    x2: crate::Element,
    y2: crate::Element,
) -> Result<GenMap, AutError> {
    for a in g.elements() {
        for b in g.elements() {
            let f = GenMap::from_images(*g, a, b)?;
            if f.apply(x) == x2 && f.apply(y) == y2 && f.extends_to_automorphism() {
                return Ok(f);
            }
        }
    }
    Err(MorphismError::NotAutomorphism.into())
}
