//! Compiles the trace closure of a colored braid word into a link program.
//!
//! Layout: one start leash per strand; strand `j` opens as a cup at columns
//! `(2j-1, 2j)` whose left leg is the return arc (color `n - c_j`) and whose
//! right leg carries the strand. Wires keep their interleaved order
//! `r_1 s_1 r_2 s_2 ...` throughout. A braid letter on strands `(p, p+1)`
//! first slides the return arc `r_{p+1}` under the crossing (an
//! over/under pair that cancels by the second Reidemeister move), crosses the
//! two strands with the requested sign, and drifts everything rightwards. At
//! the top each return arc merges with its strand into a leash.

use crate::error::{Error, Result};
use crate::qlaurent::Sign;
use crate::webs::FMove;

use super::{LinkItem, LinkProgram};

#[derive(Debug, Clone, Copy)]
struct Wire {
    col: usize,
    color: usize,
}

struct Compiler {
    wires: Vec<Wire>,
    items: Vec<LinkItem>,
    max_col: usize,
}

impl Compiler {
    fn new(start_cols: usize) -> Self {
        Compiler {
            wires: Vec::new(),
            items: Vec::new(),
            max_col: start_cols,
        }
    }

    fn occupied(&self, col: usize) -> bool {
        self.wires.iter().any(|w| w.col == col)
    }

    fn emit_move(&mut self, pos: usize, power: usize) {
        self.items.push(LinkItem::Move(FMove { pos, power }));
        self.max_col = self.max_col.max(pos + 1);
    }

    fn emit_crossing(&mut self, pos: usize, sign: Sign) {
        self.items.push(LinkItem::Crossing { pos, sign });
        self.max_col = self.max_col.max(pos + 2);
    }

    /// Moves a wire right one column at a time through free columns.
    fn slide_to(&mut self, wire: usize, target: usize) {
        let (col, color) = (self.wires[wire].col, self.wires[wire].color);
        assert!(target >= col, "wires only move right");
        for c in col..target {
            assert!(!self.occupied(c + 1), "slide through an occupied column");
            self.emit_move(c, color);
            self.wires[wire].col = c + 1;
        }
    }

    /// Crosses two wires occupying adjacent positions in the wire order
    /// (only free columns between them). The left wire ends up right of the
    /// right wire.
    fn cross(&mut self, left: usize, right: usize, sign: Sign) {
        let rc = self.wires[right].col;
        assert!(self.wires[left].col < rc, "cross expects ordered wires");
        self.slide_to(left, rc - 1);
        // clear the blocker column, shifting everything beyond one step right
        if self.occupied(rc + 1) {
            let mut beyond: Vec<usize> = (0..self.wires.len())
                .filter(|&i| self.wires[i].col > rc)
                .collect();
            beyond.sort_by_key(|&i| std::cmp::Reverse(self.wires[i].col));
            for i in beyond {
                let c = self.wires[i].col;
                self.slide_to(i, c + 1);
            }
        }
        self.emit_crossing(rc - 1, sign);
        self.wires[left].col = rc + 1;
    }
}

/// Compiles the trace closure of a braid word on `colors.len()` strands.
///
/// `colors[j]` is the color (1..=n) of the strand starting at position
/// `j + 1`; `word` lists the letters bottom to top, a letter `(p, sign)`
/// crossing strands `p` and `p + 1`. Colors must be constant on the cycles
/// of the braid permutation.
pub fn compile_braid_closure(
    n: usize,
    colors: &[usize],
    word: &[(usize, Sign)],
) -> Result<LinkProgram> {
    let s = colors.len();
    if n < 2 {
        return Err(Error::invalid("n must be at least 2"));
    }
    if s == 0 {
        return Err(Error::invalid("a braid needs at least one strand"));
    }
    for (j, &c) in colors.iter().enumerate() {
        if c < 1 || c > n {
            return Err(Error::invalid(format!(
                "strand {}: color {c} out of range 1..={n}",
                j + 1
            )));
        }
    }
    for (k, &(p, _)) in word.iter().enumerate() {
        if p < 1 || p + 1 > s {
            return Err(Error::invalid(format!(
                "letter {}: strand index {p} out of range 1..{}",
                k + 1,
                s
            )));
        }
    }
    let mut top_colors: Vec<usize> = colors.to_vec();
    for &(p, _) in word {
        top_colors.swap(p - 1, p);
    }
    if top_colors != colors {
        return Err(Error::invalid(
            "malformed word: colors are not constant on the closure components",
        ));
    }

    let mut c = Compiler::new(s);
    // spread the start leashes so strand j's cup opens at column 2j - 1
    for j in (2..=s).rev() {
        for col in j..(2 * j - 1) {
            c.emit_move(col, n);
        }
    }
    // cups; a color-n strand is its own leash and has no return arc
    let mut strand_slot: Vec<usize> = Vec::with_capacity(s);
    let mut return_slot: Vec<Option<usize>> = Vec::with_capacity(s);
    for (j, &color) in colors.iter().enumerate() {
        let base = 2 * j + 1;
        c.emit_move(base, color);
        if color < n {
            c.wires.push(Wire {
                col: base,
                color: n - color,
            });
            return_slot.push(Some(c.wires.len() - 1));
        } else {
            return_slot.push(None);
        }
        c.wires.push(Wire {
            col: base + 1,
            color,
        });
        strand_slot.push(c.wires.len() - 1);
    }

    for &(p, sign) in word {
        let sp = strand_slot[p - 1];
        let sq = strand_slot[p];
        match return_slot[p] {
            Some(r) => {
                c.cross(sp, r, Sign::Plus);
                c.cross(sp, sq, sign);
                c.cross(r, sq, Sign::Minus);
            }
            None => c.cross(sp, sq, sign),
        }
        strand_slot.swap(p - 1, p);
    }

    // caps, left to right: each return arc merges into its strand's column
    for j in 0..s {
        if let Some(r) = return_slot[j] {
            let strand = strand_slot[j];
            let target = c.wires[strand].col;
            assert_eq!(
                c.wires[r].color + c.wires[strand].color,
                n,
                "cap colors must complement"
            );
            let from = c.wires[r].col;
            let color = c.wires[r].color;
            for col in from..target {
                c.emit_move(col, color);
            }
            // both wires end in a leash at the strand column; mark the pair
            // consumed by parking them on the (inert) merged column
            c.wires[r].col = target;
            c.wires[r].color = 0;
            c.wires[strand].color = n;
        }
    }

    let m = c.max_col;
    LinkProgram::new(n, m, s, c.items)
}
