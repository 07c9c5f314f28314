//! Shared helpers for the integration suites: a random generator of
//! non-killed ladder programs and an independent closed-circle detector for
//! sl(2) programs.

use rand::Rng;

use slnweb::webs::{FMove, FProgram};

/// Builds a program from `(pos, power)` pairs.
#[allow(dead_code)]
pub fn prog(n: usize, m: usize, ell: usize, moves: &[(usize, usize)]) -> FProgram {
    FProgram::new(
        n,
        m,
        ell,
        moves.iter().map(|&(pos, power)| FMove { pos, power }).collect(),
    )
    .expect("valid test program")
}

/// Draws a random non-killed program by walking legal moves.
pub fn random_program<R: Rng>(rng: &mut R, max_moves: usize) -> FProgram {
    loop {
        let n = rng.gen_range(2..=4usize);
        let ell = rng.gen_range(1..=2usize);
        let m = rng.gen_range((ell + 1).max(2)..=6usize);
        let target_len = rng.gen_range(1..=max_moves);
        let mut w: Vec<usize> = (0..m).map(|c| if c < ell { n } else { 0 }).collect();
        let mut moves = Vec::new();
        for _ in 0..target_len {
            let legal: Vec<(usize, usize)> = (1..m)
                .flat_map(|pos| {
                    (1..=n.min(w[pos - 1]).min(n - w[pos])).map(move |power| (pos, power))
                })
                .collect();
            if legal.is_empty() {
                break;
            }
            let (pos, power) = legal[rng.gen_range(0..legal.len())];
            w[pos - 1] -= power;
            w[pos] += power;
            moves.push(FMove { pos, power });
        }
        if moves.is_empty() {
            continue;
        }
        return FProgram::new(n, m, ell, moves).expect("walk stays legal");
    }
}

/// Independent detector of internal circles for sl(2) programs.
///
/// Tracks the arcs (label-1 edges) of the diagram directly: label-0 edges do
/// not exist and label-2 edges are trivial, so every trivalent vertex joins
/// exactly two arc segments. An internal circle is an arc component that
/// never reaches the top cut-line.
#[allow(dead_code)] // each test binary uses its own subset of helpers
pub fn sl2_has_internal_circle(p: &FProgram) -> bool {
    assert_eq!(p.n, 2, "detector is specific to n = 2");
    let trace = p.weight_trace().expect("non-killed program");

    // union-find over arc-segment classes
    let mut parent: Vec<usize> = Vec::new();
    let find = |parent: &mut Vec<usize>, mut x: usize| -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    };
    let fresh = |parent: &mut Vec<usize>| -> usize {
        parent.push(parent.len());
        parent.len() - 1
    };

    // current arc class per column (only columns with weight 1 carry one)
    let mut seg: Vec<Option<usize>> = vec![None; p.m];
    let mut classes = 0usize;
    for (k, mv) in p.moves.iter().enumerate() {
        let a = trace[k].entry(mv.pos);
        let b = trace[k].entry(mv.pos + 1);
        let j = mv.power;
        // the rung's arc class, when the rung is visible (label 1)
        let rung: Option<usize> = match (a, j) {
            (2, 1) => {
                // a cup: the rung and the continuing column are one new arc
                let c = fresh(&mut parent);
                classes += 1;
                seg[mv.pos - 1] = Some(c);
                Some(c)
            }
            (2, 2) => {
                // full shift: nothing visible
                seg[mv.pos - 1] = None;
                None
            }
            (1, 1) => {
                // the arc bends right
                let c = seg[mv.pos - 1].take().expect("weight-1 column has an arc");
                Some(c)
            }
            _ => unreachable!("weights stay within 0..=2"),
        };
        match (b, j) {
            (0, 1) => seg[mv.pos] = rung,
            (0, 2) => seg[mv.pos] = None,
            (1, 1) => {
                // a cap: the rung closes onto the column's arc
                let below = seg[mv.pos].take().expect("weight-1 column has an arc");
                let (x, y) = (
                    find(&mut parent, below),
                    find(&mut parent, rung.expect("visible rung at a cap")),
                );
                if x != y {
                    parent[x] = y;
                    classes -= 1;
                }
            }
            _ => unreachable!("weights stay within 0..=2"),
        }
    }
    // every class reaching the top cut-line survives in some column; the
    // remaining classes are internal circles
    let mut top_roots: Vec<usize> = seg
        .iter()
        .flatten()
        .map(|&c| find(&mut parent, c))
        .collect();
    top_roots.sort_unstable();
    top_roots.dedup();
    top_roots.len() < classes
}
