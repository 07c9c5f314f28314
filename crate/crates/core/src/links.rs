//! Colored link diagrams as ladder programs with crossing markers, their
//! expansion into signed, q-shifted closed webs, and the colored
//! Reshetikhin-Turaev link polynomial.
//!
//! A crossing at position `i` acts on a weight patterned `(..., a, b, 0,
//! ...)` at columns `i, i+1, i+2` and produces `(..., 0, b, a, ...)`; the
//! colors `a`, `b` are read off the running weight, never stored. A positive
//! crossing with `b <= a` expands as
//!
//! `sum over k in 0..=b of (-1)^(k + (a+1)b) q^(-b+k)
//!      F_{i+1}^(a+k-b) F_i^(a) F_{i+1}^(b-k)`
//!
//! (rightmost factor applied first); for `a < b` the roles swap, and a
//! negative crossing negates every power of q.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::evaluation::{ev_with, EvalOptions};
use crate::qlaurent::{Coeff, Laurent, Sign};
use crate::webs::{apply_move, parse_fmove, parse_program_lines, FMove, FProgram, GlWeight};

/// One item of a link program: a ladder move or a crossing marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkItem {
    Move(FMove),
    Crossing { pos: usize, sign: Sign },
}

/// A colored link (or tangle) diagram in ladder form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkProgram {
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub items: Vec<LinkItem>,
}

impl LinkProgram {
    pub fn new(n: usize, m: usize, ell: usize, items: Vec<LinkItem>) -> Result<Self> {
        let lp = LinkProgram { n, m, ell, items };
        lp.weight_trace()?;
        Ok(lp)
    }

    /// Wraps a plain web program (no crossings).
    pub fn from_fprogram(p: &FProgram) -> Self {
        LinkProgram {
            n: p.n,
            m: p.m,
            ell: p.ell,
            items: p.moves.iter().map(|&mv| LinkItem::Move(mv)).collect(),
        }
    }

    fn start_weight(&self) -> GlWeight {
        let mut w = vec![0usize; self.m];
        for e in w.iter_mut().take(self.ell) {
            *e = self.n;
        }
        GlWeight(w)
    }

    /// Weights before/after every item. Crossings require the pattern
    /// `(a, b, 0)` at `pos..pos+2` and produce `(0, b, a)`.
    pub fn weight_trace(&self) -> Result<Vec<GlWeight>> {
        if self.n < 2 || self.ell < 1 || self.m < self.ell {
            return Err(Error::invalid("bad link program header"));
        }
        let mut w = self.start_weight();
        let mut out = vec![w.clone()];
        for (k, item) in self.items.iter().enumerate() {
            match *item {
                LinkItem::Move(mv) => {
                    if mv.pos < 1 || mv.pos + 1 > self.m || mv.power < 1 {
                        return Err(Error::invalid(format!("item {}: bad move", k + 1)));
                    }
                    apply_move(&mut w, mv, self.n, k + 1)?;
                }
                LinkItem::Crossing { pos, .. } => {
                    if pos < 1 || pos + 2 > self.m {
                        return Err(Error::invalid(format!(
                            "item {}: crossing position {pos} needs columns {pos}..{}",
                            k + 1,
                            pos + 2
                        )));
                    }
                    let (a, b, blocker) = (w.0[pos - 1], w.0[pos], w.0[pos + 1]);
                    if blocker != 0 {
                        return Err(Error::invalid(format!(
                            "item {}: crossing at {pos} requires a zero column at {}, found {blocker}",
                            k + 1,
                            pos + 2
                        )));
                    }
                    w.0[pos - 1] = 0;
                    w.0[pos] = b;
                    w.0[pos + 1] = a;
                }
            }
            out.push(w.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for LinkProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "header n={} m={} l={}", self.n, self.m, self.ell)?;
        for item in &self.items {
            match item {
                LinkItem::Move(mv) => writeln!(f, "F {} {}", mv.pos, mv.power)?,
                LinkItem::Crossing { pos, sign } => writeln!(f, "T{sign} {pos}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for LinkProgram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ((n, m, ell), body) = parse_program_lines(s)?;
        let mut items = Vec::new();
        for (line_no, tokens) in body {
            match tokens[0].as_str() {
                "F" => items.push(LinkItem::Move(parse_fmove(line_no, &tokens)?)),
                "T+" | "T-" => {
                    if tokens.len() != 2 {
                        return Err(Error::parse(line_no, "expected `T+ <pos>` or `T- <pos>`"));
                    }
                    let pos = tokens[1]
                        .parse()
                        .map_err(|_| Error::parse(line_no, "bad crossing position"))?;
                    let sign = if tokens[0] == "T+" { Sign::Plus } else { Sign::Minus };
                    items.push(LinkItem::Crossing { pos, sign });
                }
                other => {
                    return Err(Error::parse(line_no, format!("unknown directive `{other}`")))
                }
            }
        }
        LinkProgram::new(n, m, ell, items)
    }
}

/// One term of a crossing expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidingSummand {
    pub sign: Sign,
    pub qpower: i32,
    /// Ladder moves in application order; zero-power factors are dropped.
    pub moves: Vec<FMove>,
}

/// The expansion of one crossing on the weight `w`: colors `a = w[pos]`,
/// `b = w[pos+1]` (1-based), blocker `w[pos+2] = 0` required.
pub fn braiding_summands(
    w: &GlWeight,
    n: usize,
    pos: usize,
    sign: Sign,
) -> Result<Vec<BraidingSummand>> {
    if pos < 1 || pos + 2 > w.len() {
        return Err(Error::invalid(format!("crossing position {pos} out of range")));
    }
    let a = w.entry(pos);
    let b = w.entry(pos + 1);
    if a > n || b > n {
        return Err(Error::invalid("crossing colors exceed n"));
    }
    if w.entry(pos + 2) != 0 {
        return Err(Error::invalid(format!(
            "crossing at {pos} requires a zero column at {}",
            pos + 2
        )));
    }
    let mut out = Vec::new();
    let push_move = |moves: &mut Vec<FMove>, p: usize, j: usize| {
        if j > 0 {
            moves.push(FMove { pos: p, power: j });
        }
    };
    if b <= a {
        for k in 0..=b {
            let coeff = Sign::from_parity((k + (a + 1) * b) as i64);
            let qpow = k as i32 - b as i32;
            let mut moves = Vec::new();
            push_move(&mut moves, pos + 1, b - k);
            push_move(&mut moves, pos, a);
            push_move(&mut moves, pos + 1, a + k - b);
            out.push(BraidingSummand {
                sign: coeff,
                qpower: apply_crossing_sign(qpow, sign),
                moves,
            });
        }
    } else {
        for k in 0..=a {
            let coeff = Sign::from_parity((k + (b + 1) * a) as i64);
            let qpow = k as i32 - a as i32;
            let mut moves = Vec::new();
            push_move(&mut moves, pos, k);
            push_move(&mut moves, pos + 1, a);
            push_move(&mut moves, pos, a - k);
            out.push(BraidingSummand {
                sign: coeff,
                qpower: apply_crossing_sign(qpow, sign),
                moves,
            });
        }
    }
    Ok(out)
}

fn apply_crossing_sign(qpow: i32, sign: Sign) -> i32 {
    match sign {
        Sign::Plus => qpow,
        Sign::Minus => -qpow,
    }
}

/// One closed web of an expanded link program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedSummand {
    pub sign: Sign,
    pub qshift: i32,
    pub program: FProgram,
}

/// Distributes every crossing of the link program into its braiding
/// summands: signs multiply, q-powers add, ladder moves splice in place.
/// Summands killed by the weight bounds are dropped.
pub fn expand(lp: &LinkProgram) -> Result<Vec<ExpandedSummand>> {
    let trace = lp.weight_trace()?;
    let mut branches: Vec<(Sign, i32, Vec<FMove>)> = vec![(Sign::Plus, 0, Vec::new())];
    for (k, item) in lp.items.iter().enumerate() {
        match *item {
            LinkItem::Move(mv) => {
                for br in &mut branches {
                    br.2.push(mv);
                }
            }
            LinkItem::Crossing { pos, sign } => {
                let before = &trace[k];
                let summands = braiding_summands(before, lp.n, pos, sign)?;
                // drop summands whose internal moves leave 0..n
                let viable: Vec<&BraidingSummand> = summands
                    .iter()
                    .filter(|s| {
                        let mut w = before.clone();
                        s.moves
                            .iter()
                            .all(|&mv| apply_move(&mut w, mv, lp.n, 0).is_ok())
                    })
                    .collect();
                let mut next = Vec::with_capacity(branches.len() * viable.len());
                for (sgn, shift, moves) in &branches {
                    for s in &viable {
                        let mut m2 = moves.clone();
                        m2.extend_from_slice(&s.moves);
                        next.push((
                            sgn.combine(s.sign),
                            shift + s.qpower,
                            m2,
                        ));
                    }
                }
                branches = next;
            }
        }
    }
    // every summand moves the same total number of boxes
    let mut totals = branches
        .iter()
        .map(|(_, _, m)| m.iter().map(|mv| mv.power).sum::<usize>());
    if let Some(first) = totals.next() {
        if totals.any(|t| t != first) {
            return Err(Error::invalid("expansion produced summands of unequal length"));
        }
    }
    branches
        .into_iter()
        .map(|(sign, qshift, moves)| {
            let program = FProgram::new(lp.n, lp.m, lp.ell, moves)?;
            program.apply()?;
            Ok(ExpandedSummand {
                sign,
                qshift,
                program,
            })
        })
        .collect()
}

/// The link evaluation: the signed, q-shifted sum of the evaluations of the
/// expanded summands. Every surviving summand must be closed.
pub fn ev_link<C: Coeff>(lp: &LinkProgram) -> Result<Laurent<C>> {
    ev_link_with(lp, &EvalOptions::default())
}

pub fn ev_link_with<C: Coeff>(lp: &LinkProgram, opts: &EvalOptions) -> Result<Laurent<C>> {
    let mut total = Laurent::zero();
    for s in expand(lp)? {
        if !s.program.is_closed()? {
            return Err(Error::invalid(
                "expanded summand is not closed; the diagram is not a link",
            ));
        }
        let value = ev_with::<C>(&s.program, opts)?;
        total = total.checked_add(&value.scale(s.sign, s.qshift)?)?;
    }
    Ok(total)
}

/// The framing normalization: the product over crossings of
/// `(-1)^(b+1) q^(+-b(n+1-b))` for equal colors `a = b` (sign of the
/// exponent following the crossing sign), and 1 otherwise.
pub fn normalization(lp: &LinkProgram) -> Result<(Sign, i32)> {
    let trace = lp.weight_trace()?;
    let mut sign = Sign::Plus;
    let mut qpow: i64 = 0;
    for (k, item) in lp.items.iter().enumerate() {
        if let LinkItem::Crossing { pos, sign: csign } = *item {
            let w = &trace[k];
            let a = w.entry(pos);
            let b = w.entry(pos + 1);
            if a == b {
                sign = sign.combine(Sign::from_parity(b as i64 + 1));
                let e = (b as i64) * (lp.n as i64 + 1 - b as i64);
                qpow += match csign {
                    Sign::Plus => e,
                    Sign::Minus => -e,
                };
            }
        }
    }
    let qpow: i32 = qpow.try_into().map_err(|_| Error::Overflow)?;
    Ok((sign, qpow))
}

/// The normalized colored Reshetikhin-Turaev polynomial: the link evaluation
/// scaled by the framing normalization.
pub fn rt<C: Coeff>(lp: &LinkProgram) -> Result<Laurent<C>> {
    rt_with(lp, &EvalOptions::default())
}

pub fn rt_with<C: Coeff>(lp: &LinkProgram, opts: &EvalOptions) -> Result<Laurent<C>> {
    let (sign, qpow) = normalization(lp)?;
    ev_link_with::<C>(lp, opts)?.scale(sign, qpow)
}

mod braid;
pub use braid::compile_braid_closure;

#[cfg(test)]
mod tests {
    use super::*;

    type P = Laurent<i64>;

    fn poly(s: &str) -> P {
        s.parse().unwrap()
    }

    fn moves(list: &[(usize, usize)]) -> Vec<FMove> {
        list.iter().map(|&(pos, power)| FMove { pos, power }).collect()
    }

    /// The one-crossing unknot diagram: its two summands are the side-by-side
    /// and the stacked pair of circles, with coefficients `q` and `-1`.
    fn unknot() -> LinkProgram {
        "header n=2 m=5 l=2\nF 2 2\nF 3 1\nF 4 1\nF 1 1\nT- 2\nF 1 1\nF 2 1\nF 4 1\n"
            .parse()
            .unwrap()
    }

    /// The positively-stacked Hopf link with colors 1 and 2 in sl(3).
    fn hopf() -> LinkProgram {
        concat!(
            "header n=3 m=6 l=2\n",
            "F 2 3\nF 1 1\nF 3 1\nF 4 1\nF 5 1\n",
            "T+ 2\nT+ 3\n",
            "F 1 2\nF 2 2\nF 3 2\nF 5 2\n"
        )
        .parse()
        .unwrap()
    }

    #[test]
    fn braiding_summands_color_one() {
        let w = GlWeight(vec![1, 1, 0]);
        let pos_cross = braiding_summands(&w, 2, 1, Sign::Plus).unwrap();
        assert_eq!(pos_cross.len(), 2);
        assert_eq!(pos_cross[0].sign, Sign::Plus);
        assert_eq!(pos_cross[0].qpower, -1);
        assert_eq!(pos_cross[0].moves, moves(&[(2, 1), (1, 1)]));
        assert_eq!(pos_cross[1].sign, Sign::Minus);
        assert_eq!(pos_cross[1].qpower, 0);
        assert_eq!(pos_cross[1].moves, moves(&[(1, 1), (2, 1)]));

        let neg_cross = braiding_summands(&w, 2, 1, Sign::Minus).unwrap();
        assert_eq!(neg_cross[0].sign, Sign::Plus);
        assert_eq!(neg_cross[0].qpower, 1);
        assert_eq!(neg_cross[1].sign, Sign::Minus);
        assert_eq!(neg_cross[1].qpower, 0);
    }

    #[test]
    fn braiding_summands_mixed_colors() {
        // colors a = 1, b = 2: two summands with signs -, + and powers -1, 0
        let w = GlWeight(vec![2, 1, 2, 0, 0, 1]);
        let s = braiding_summands(&w, 3, 2, Sign::Plus).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].sign, s[0].qpower), (Sign::Minus, -1));
        assert_eq!(s[0].moves, moves(&[(3, 1), (2, 1)]));
        assert_eq!((s[1].sign, s[1].qpower), (Sign::Plus, 0));
        assert_eq!(s[1].moves, moves(&[(2, 1), (3, 1)]));
    }

    #[test]
    fn blocked_crossing_is_rejected() {
        let w = GlWeight(vec![1, 1, 1]);
        assert!(braiding_summands(&w, 2, 1, Sign::Plus).is_err());
    }

    #[test]
    fn expand_unknot_matches_hand_expansion() {
        let summands = expand(&unknot()).unwrap();
        assert_eq!(summands.len(), 2);
        assert_eq!((summands[0].sign, summands[0].qshift), (Sign::Plus, 1));
        assert_eq!(
            summands[0].program.moves,
            moves(&[(2, 2), (3, 1), (4, 1), (1, 1), (3, 1), (2, 1), (1, 1), (2, 1), (4, 1)])
        );
        assert_eq!((summands[1].sign, summands[1].qshift), (Sign::Minus, 0));
        assert_eq!(
            summands[1].program.moves,
            moves(&[(2, 2), (3, 1), (4, 1), (1, 1), (2, 1), (3, 1), (1, 1), (2, 1), (4, 1)])
        );
    }

    #[test]
    fn expand_trivial_and_hopf_counts() {
        let plain: LinkProgram = "header n=2 m=2 l=1\nF 1 1\nF 1 1\n".parse().unwrap();
        let s = expand(&plain).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].sign, s[0].qshift), (Sign::Plus, 0));

        assert_eq!(expand(&hopf()).unwrap().len(), 4);
    }

    #[test]
    fn unknot_values() {
        assert_eq!(ev_link::<i64>(&unknot()).unwrap(), poly("q^3 + q"));
        assert_eq!(normalization(&unknot()).unwrap(), (Sign::Plus, -2));
        assert_eq!(rt::<i64>(&unknot()).unwrap(), poly("q + q^-1"));
    }

    #[test]
    fn hopf_value() {
        let two = P::qint(2);
        let three = P::qint(3);
        let t22 = two.checked_mul(&two).unwrap();
        let expected = t22
            .checked_mul(&three)
            .unwrap()
            .scale(Sign::Plus, -2)
            .unwrap()
            .checked_add(
                &two.checked_mul(&three)
                    .unwrap()
                    .checked_mul(&P::constant(2))
                    .unwrap()
                    .scale(Sign::Minus, -1)
                    .unwrap(),
            )
            .unwrap()
            .checked_add(&three.checked_mul(&three).unwrap())
            .unwrap();
        assert_eq!(ev_link::<i64>(&hopf()).unwrap(), expected);
        // both crossings have distinct colors: trivial normalization
        assert_eq!(normalization(&hopf()).unwrap(), (Sign::Plus, 0));
        assert_eq!(rt::<i64>(&hopf()).unwrap(), expected);
    }

    #[test]
    fn crossingless_circle_reduces_to_ev() {
        let circle: LinkProgram = "header n=2 m=2 l=1\nF 1 1\nF 1 1\n".parse().unwrap();
        assert_eq!(ev_link::<i64>(&circle).unwrap(), poly("q + q^-1"));
        assert_eq!(rt::<i64>(&circle).unwrap(), poly("q + q^-1"));
    }

    #[test]
    fn link_program_round_trip() {
        let text = unknot().to_string();
        let again: LinkProgram = text.parse().unwrap();
        assert_eq!(again, unknot());
    }
}
