//! Evaluation of closed webs as a dynamic program over multipartition
//! shapes, together with an independent flow-enumeration oracle and the
//! Kuperberg pairing.
//!
//! The program's entries are processed move by move; each live shape routes
//! its polynomial, times `q^(degree increment)`, to every legal successor
//! shape. For a closed web the sum over final shapes is the web's value as a
//! scalar intertwiner, a Laurent polynomial with nonnegative coefficients.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::qlaurent::{Coeff, Laurent, Sign};
use crate::tableaux::{degree_increment, MultiPartition};
use crate::webs::{enumerate_flows, flow_weight, FProgram, GlWeight};

/// Tuning knobs for the shape dynamic program.
#[derive(Debug, Clone, Copy)]
pub struct EvalOptions {
    /// Abort with a resource error when the number of live shapes exceeds
    /// this bound.
    pub max_live_shapes: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            max_live_shapes: 1_000_000,
        }
    }
}

/// Final shapes with their accumulated degree polynomials.
pub type ShapePolyMap<C> = BTreeMap<MultiPartition, Laurent<C>>;

/// Runs the shape dynamic program with default options.
pub fn ev_by_shape<C: Coeff>(p: &FProgram) -> Result<ShapePolyMap<C>> {
    ev_by_shape_with(p, &EvalOptions::default())
}

/// Runs the shape dynamic program: start from the empty multipartition with
/// polynomial 1; each move `F_pos^(power)` extends every live shape by
/// `power` nodes of residue `pos` in all legal component sets. Shapes with no
/// legal extension drop out.
pub fn ev_by_shape_with<C: Coeff>(p: &FProgram, opts: &EvalOptions) -> Result<ShapePolyMap<C>> {
    p.validate_static()?;
    p.apply()?;
    let mut live: ShapePolyMap<C> = BTreeMap::new();
    live.insert(MultiPartition::empty(p.n, p.ell)?, Laurent::one());
    for mv in &p.moves {
        let res = mv.pos as i32;
        let mut next: ShapePolyMap<C> = BTreeMap::new();
        for (shape, poly) in &live {
            let candidates: Vec<usize> = (1..=p.n)
                .rev()
                .filter(|&i| shape.comp(i).addable_cell(res, p.ell).is_some())
                .collect();
            if candidates.len() < mv.power {
                continue;
            }
            for combo in candidates.iter().copied().combinations(mv.power) {
                let (inc, grown) = degree_increment(shape, res, &combo)?;
                let inc: i32 = inc.try_into().map_err(|_| Error::Overflow)?;
                let contribution = poly.scale(Sign::Plus, inc)?;
                match next.get_mut(&grown) {
                    Some(acc) => *acc = acc.checked_add(&contribution)?,
                    None => {
                        next.insert(grown, contribution);
                    }
                }
            }
            if next.len() > opts.max_live_shapes {
                return Err(Error::ResourceExhausted {
                    limit: opts.max_live_shapes,
                });
            }
        }
        live = next;
    }
    Ok(live)
}

/// The evaluation of a web: the sum of the per-shape polynomials. For a
/// closed program this is the web's quantum value.
pub fn ev<C: Coeff>(p: &FProgram) -> Result<Laurent<C>> {
    ev_with(p, &EvalOptions::default())
}

pub fn ev_with<C: Coeff>(p: &FProgram, opts: &EvalOptions) -> Result<Laurent<C>> {
    let mut total = Laurent::zero();
    for poly in ev_by_shape_with::<C>(p, opts)?.values() {
        total = total.checked_add(poly)?;
    }
    Ok(total)
}

/// Independent oracle for [`ev`]: enumerates every flow and sums
/// `q^(flow weight)` directly. Exponential; for small programs only.
pub fn ev_oracle<C: Coeff>(p: &FProgram) -> Result<Laurent<C>> {
    let mut total: Laurent<C> = Laurent::zero();
    for f in enumerate_flows(p)? {
        let w: i32 = flow_weight(p, &f)?.try_into().map_err(|_| Error::Overflow)?;
        total = total.checked_add(&Laurent::monomial(w))?;
    }
    Ok(total)
}

/// The normalization exponent `d(k) = (n(n-1) ell - sum k_i (k_i - 1)) / 2`
/// of a boundary weight.
pub fn d_shift(w: &GlWeight, n: usize, ell: usize) -> Result<i64> {
    for &k in &w.0 {
        if k > n {
            return Err(Error::invalid(format!("weight entry {k} exceeds n = {n}")));
        }
    }
    let total: i64 = (n as i64) * (n as i64 - 1) * (ell as i64)
        - w.0.iter().map(|&k| (k as i64) * (k as i64 - 1)).sum::<i64>();
    if total % 2 != 0 {
        return Err(Error::invalid(
            "normalization exponent is not an integer; inconsistent weight",
        ));
    }
    Ok(total / 2)
}

fn check_same_boundary(u: &FProgram, v: &FProgram) -> Result<GlWeight> {
    if u.n != v.n || u.ell != v.ell || u.m != v.m {
        return Err(Error::BoundaryMismatch(format!(
            "contexts differ: (n={}, m={}, l={}) vs (n={}, m={}, l={})",
            u.n, u.m, u.ell, v.n, v.m, v.ell
        )));
    }
    let wu = u.apply()?;
    let wv = v.apply()?;
    if wu != wv {
        return Err(Error::BoundaryMismatch(format!(
            "end weights differ: {wu} vs {wv}"
        )));
    }
    Ok(wu)
}

/// The Kuperberg pairing of two webs with equal boundary data: the sum over
/// common end shapes of the products of their shape polynomials. Equals
/// `q^(d) * ev(glued web)` where `d` is the boundary normalization exponent.
pub fn kuperberg_pair<C: Coeff>(u: &FProgram, v: &FProgram) -> Result<Laurent<C>> {
    kuperberg_pair_with(u, v, &EvalOptions::default())
}

pub fn kuperberg_pair_with<C: Coeff>(
    u: &FProgram,
    v: &FProgram,
    opts: &EvalOptions,
) -> Result<Laurent<C>> {
    check_same_boundary(u, v)?;
    let pu = ev_by_shape_with::<C>(u, opts)?;
    let pv = ev_by_shape_with::<C>(v, opts)?;
    let mut total = Laurent::zero();
    for (shape, a) in &pu {
        if let Some(b) = pv.get(shape) {
            total = total.checked_add(&a.checked_mul(b)?)?;
        }
    }
    Ok(total)
}

/// The evaluation of the closed web obtained by gluing the reflection of `v`
/// on top of `u`: `q^(-d) *` the Kuperberg pairing.
pub fn ev_glued<C: Coeff>(u: &FProgram, v: &FProgram) -> Result<Laurent<C>> {
    let w = check_same_boundary(u, v)?;
    let d: i32 = d_shift(&w, u.n, u.ell)?
        .try_into()
        .map_err(|_| Error::Overflow)?;
    kuperberg_pair::<C>(u, v)?.scale(Sign::Plus, -d)
}
