//! The greedy canonical filling of a ladder web and the dual-canonicality
//! decision procedure.
//!
//! The canonical filling places, at each move, the new nodes in the legal
//! components of smallest index (the rightmost possible positions). Its
//! degree is never positive, and a web is a dual canonical basis element
//! exactly when its evaluation lies in `1 + q N[q]`.

use crate::error::{Error, Result};
use crate::evaluation::{ev_with, EvalOptions};
use crate::qlaurent::Laurent;
use crate::tableaux::MultiTableau;
use crate::webs::FProgram;

/// The greedy canonical filling: at step `k` the `power` nodes of residue
/// `pos` go to the `power` addable components of smallest index.
///
/// Fails with [`Error::GreedyStuck`] when fewer components are addable; this
/// cannot happen for programs that never connect nested, unconnected
/// components, so the error diagnoses a violated presentation discipline.
pub fn canonical_tableau(p: &FProgram) -> Result<MultiTableau> {
    p.validate_static()?;
    p.apply()?;
    let mut groups: Vec<(i32, Vec<usize>)> = Vec::with_capacity(p.moves.len());
    let mut shape = crate::tableaux::MultiPartition::empty(p.n, p.ell)?;
    for (k, mv) in p.moves.iter().enumerate() {
        let res = mv.pos as i32;
        let mut comps: Vec<usize> = (1..=p.n)
            .filter(|&i| shape.comp(i).addable_cell(res, p.ell).is_some())
            .take(mv.power)
            .collect();
        if comps.len() < mv.power {
            return Err(Error::GreedyStuck {
                step: k + 1,
                found: comps.len(),
                needed: mv.power,
            });
        }
        comps.reverse();
        let (_, grown) = crate::tableaux::degree_increment(&shape, res, &comps)?;
        shape = grown;
        groups.push((res, comps));
    }
    MultiTableau::from_groups(p.n, p.ell, &groups)
}

/// The degree of the canonical filling; at most zero for every valid program.
pub fn canonical_degree(p: &FProgram) -> Result<i64> {
    canonical_tableau(p).map(|t| t.bkw_degree())
}

/// Decides whether the web presented by `p` is a dual canonical basis
/// element: true iff `ev(p)` has minimal exponent 0 with coefficient exactly
/// one, i.e. `ev(p)` lies in `1 + q N[q]`.
pub fn is_dual_canonical(p: &FProgram) -> Result<bool> {
    is_dual_canonical_with(p, &EvalOptions::default())
}

pub fn is_dual_canonical_with(p: &FProgram, opts: &EvalOptions) -> Result<bool> {
    let e: Laurent<i64> = ev_with(p, opts)?;
    Ok(e.min_exp() == Some(0) && e.coeff(0) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webs::FMove;

    fn prog(n: usize, m: usize, ell: usize, moves: &[(usize, usize)]) -> FProgram {
        FProgram::new(
            n,
            m,
            ell,
            moves.iter().map(|&(pos, power)| FMove { pos, power }).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cup_is_canonical_of_degree_zero() {
        let cup = prog(2, 2, 1, &[(1, 1)]);
        let t = canonical_tableau(&cup).unwrap();
        assert_eq!(t.group_data(), vec![(1, vec![1])]);
        assert_eq!(canonical_degree(&cup).unwrap(), 0);
        assert!(is_dual_canonical(&cup).unwrap());
    }

    #[test]
    fn sl2_arcs_have_all_rungs_rightmost() {
        // two side-by-side cups
        let p = prog(2, 4, 2, &[(2, 2), (1, 1), (3, 1)]);
        let t = canonical_tableau(&p).unwrap();
        for (res, comps) in t.group_data().iter().skip(1) {
            assert_eq!(comps, &vec![1], "residue {res}");
        }
        assert_eq!(canonical_degree(&p).unwrap(), 0);
        assert!(is_dual_canonical(&p).unwrap());
    }

    #[test]
    fn full_leash_move_is_unique() {
        let p = prog(3, 2, 1, &[(1, 3)]);
        let t = canonical_tableau(&p).unwrap();
        assert_eq!(t.group_data(), vec![(1, vec![3, 2, 1])]);
        assert_eq!(canonical_degree(&p).unwrap(), 0);
    }

    #[test]
    fn closed_circle_is_never_dual_canonical() {
        let circle = prog(2, 2, 1, &[(1, 1), (1, 1)]);
        assert_eq!(canonical_degree(&circle).unwrap(), -1);
        assert!(!is_dual_canonical(&circle).unwrap());

        // a cup next to a closed circle
        let p = prog(2, 4, 2, &[(2, 2), (1, 1), (3, 1), (3, 1)]);
        assert!(!is_dual_canonical(&p).unwrap());
    }

    #[test]
    fn greedy_stuck_is_reported() {
        // weight-legal, but the rung at step 5 connects nested, unconnected
        // components, so no addable node of residue 1 remains
        let p = prog(2, 4, 2, &[(2, 1), (1, 1), (3, 1), (2, 1), (1, 1)]);
        assert!(p.apply().is_ok());
        assert_eq!(
            canonical_tableau(&p).unwrap_err(),
            Error::GreedyStuck {
                step: 5,
                found: 0,
                needed: 1
            }
        );

        let killed = prog(2, 3, 1, &[(2, 1)]);
        assert!(matches!(
            canonical_tableau(&killed),
            Err(Error::Killed { step: 1, .. })
        ));
    }
}
