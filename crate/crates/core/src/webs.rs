//! Ladder presentations of sl(n) webs: gl(m) weights, divided-power F-moves,
//! flows on ladder webs, and the two mutually inverse growth algorithms
//! between flows and standard multitableaux.
//!
//! A program starts from the weight `(n, ..., n, 0, ..., 0)` with `ell`
//! leading `n`s; each move `F pos power` sends
//! `(..., k_pos, k_{pos+1}, ...)` to `(..., k_pos - power, k_{pos+1} + power,
//! ...)`. A program whose intermediate weights leave `0..n` denotes the zero
//! vector and is rejected as killed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::qlaurent::{Coeff, Laurent};
use crate::tableaux::{MultiPartition, MultiTableau};

/// A divided-power ladder move `F_pos^(power)`, positions 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FMove {
    pub pos: usize,
    pub power: usize,
}

/// A gl(m) weight: one entry per column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GlWeight(pub Vec<usize>);

impl GlWeight {
    /// 1-based column access.
    pub fn entry(&self, col: usize) -> usize {
        self.0[col - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// A ladder web: context `(n, m, ell)` plus a sequence of F-moves, applied
/// first to last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FProgram {
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub moves: Vec<FMove>,
}

impl FProgram {
    pub fn new(n: usize, m: usize, ell: usize, moves: Vec<FMove>) -> Result<Self> {
        let p = FProgram { n, m, ell, moves };
        p.validate_static()?;
        Ok(p)
    }

    pub(crate) fn validate_static(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::invalid(format!("n must be at least 2, got {}", self.n)));
        }
        if self.ell < 1 {
            return Err(Error::invalid("l must be at least 1"));
        }
        if self.m < self.ell {
            return Err(Error::invalid(format!(
                "m = {} is smaller than l = {}",
                self.m, self.ell
            )));
        }
        for (i, mv) in self.moves.iter().enumerate() {
            if mv.pos < 1 || mv.pos + 1 > self.m {
                return Err(Error::invalid(format!(
                    "move {}: position {} out of range 1..{}",
                    i + 1,
                    mv.pos,
                    self.m - 1
                )));
            }
            if mv.power < 1 {
                return Err(Error::invalid(format!("move {}: power must be positive", i + 1)));
            }
        }
        Ok(())
    }

    /// The start weight `(n^ell, 0^(m-ell))`.
    pub fn start_weight(&self) -> GlWeight {
        let mut w = vec![0usize; self.m];
        for e in w.iter_mut().take(self.ell) {
            *e = self.n;
        }
        GlWeight(w)
    }

    /// Applies all moves and returns the final weight, or the killing step.
    pub fn apply(&self) -> Result<GlWeight> {
        Ok(self.weight_trace()?.pop().expect("trace is non-empty"))
    }

    /// Weights at every level: `trace[k]` is the weight after `k` moves.
    pub fn weight_trace(&self) -> Result<Vec<GlWeight>> {
        let mut w = self.start_weight();
        let mut out = Vec::with_capacity(self.moves.len() + 1);
        out.push(w.clone());
        for (k, mv) in self.moves.iter().enumerate() {
            apply_move(&mut w, *mv, self.n, k + 1)?;
            out.push(w.clone());
        }
        Ok(out)
    }

    /// True if the final weight has all entries in `{0, n}`.
    pub fn is_closed(&self) -> Result<bool> {
        let w = self.apply()?;
        Ok(w.0.iter().all(|&k| k == 0 || k == self.n))
    }
}

pub(crate) fn apply_move(w: &mut GlWeight, mv: FMove, n: usize, step: usize) -> Result<()> {
    let src = w.0[mv.pos - 1];
    let dst = w.0[mv.pos];
    if src < mv.power {
        return Err(Error::Killed {
            step,
            col: mv.pos,
            n,
        });
    }
    if dst + mv.power > n {
        return Err(Error::Killed {
            step,
            col: mv.pos + 1,
            n,
        });
    }
    w.0[mv.pos - 1] = src - mv.power;
    w.0[mv.pos] = dst + mv.power;
    Ok(())
}

impl fmt::Display for FProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "header n={} m={} l={}", self.n, self.m, self.ell)?;
        for mv in &self.moves {
            writeln!(f, "F {} {}", mv.pos, mv.power)?;
        }
        Ok(())
    }
}

/// Tokenized program body: per directive, its 1-based line number and
/// whitespace-split tokens.
pub(crate) type ProgramBody = Vec<(usize, Vec<String>)>;

/// Parses the shared program text: a `header n=.. m=.. l=..` line followed by
/// one directive per line; `#` starts a comment. The caller interprets the
/// body directives.
pub(crate) fn parse_program_lines(input: &str) -> Result<((usize, usize, usize), ProgramBody)> {
    let mut header = None;
    let mut body = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if header.is_none() {
            if tokens[0] != "header" {
                return Err(Error::parse(line_no, "expected `header n=.. m=.. l=..`"));
            }
            let mut n = None;
            let mut m = None;
            let mut l = None;
            for t in &tokens[1..] {
                let (key, val) = t
                    .split_once('=')
                    .ok_or_else(|| Error::parse(line_no, format!("bad header field `{t}`")))?;
                let v: usize = val
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad header value `{t}`")))?;
                match key {
                    "n" => n = Some(v),
                    "m" => m = Some(v),
                    "l" => l = Some(v),
                    _ => return Err(Error::parse(line_no, format!("unknown header field `{key}`"))),
                }
            }
            match (n, m, l) {
                (Some(n), Some(m), Some(l)) => header = Some((n, m, l)),
                _ => return Err(Error::parse(line_no, "header must set n, m and l")),
            }
        } else {
            body.push((line_no, tokens));
        }
    }
    let header = header.ok_or_else(|| Error::parse(0, "missing header line"))?;
    Ok((header, body))
}

pub(crate) fn parse_fmove(line_no: usize, tokens: &[String]) -> Result<FMove> {
    if tokens.len() != 3 {
        return Err(Error::parse(line_no, "expected `F <pos> <power>`"));
    }
    let pos = tokens[1]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad position"))?;
    let power = tokens[2]
        .parse()
        .map_err(|_| Error::parse(line_no, "bad power"))?;
    Ok(FMove { pos, power })
}

impl FromStr for FProgram {
    type Err = Error;

    /// Parses the text form; killed programs are rejected here, not at use.
    fn from_str(s: &str) -> Result<Self> {
        let ((n, m, ell), body) = parse_program_lines(s)?;
        let mut moves = Vec::new();
        for (line_no, tokens) in body {
            match tokens[0].as_str() {
                "F" => moves.push(parse_fmove(line_no, &tokens)?),
                other => {
                    return Err(Error::parse(
                        line_no,
                        format!("unexpected directive `{other}` in a web program"),
                    ))
                }
            }
        }
        let p = FProgram::new(n, m, ell, moves)?;
        p.apply()?;
        Ok(p)
    }
}

/// A flow on a ladder web: one rung subset of `{1..n}` per move, with
/// `|rungs[k]|` equal to the move's power. Fronts (per-column label subsets)
/// are recomputed on demand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flow {
    pub rungs: Vec<BTreeSet<usize>>,
}

/// The per-column label subsets read along the boundary of a web or at one
/// level of its ladder presentation.
pub type StateString = Vec<BTreeSet<usize>>;

/// Renders a state string as `({2,1},{},{1})`, elements descending.
pub fn render_state_string(s: &StateString) -> String {
    let cols = s
        .iter()
        .map(|set| format!("{{{}}}", set.iter().rev().join(",")))
        .join(",");
    format!("({cols})")
}

fn initial_front(p: &FProgram) -> StateString {
    let mut front: StateString = vec![BTreeSet::new(); p.m];
    for col in front.iter_mut().take(p.ell) {
        *col = (1..=p.n).collect();
    }
    front
}

/// The level-by-level fronts of a flow; `fronts[k]` holds after `k` moves.
/// Checks all flow constraints along the way.
pub fn flow_fronts(p: &FProgram, f: &Flow) -> Result<Vec<StateString>> {
    if f.rungs.len() != p.moves.len() {
        return Err(Error::invalid("flow length does not match the program"));
    }
    let mut front = initial_front(p);
    let mut out = vec![front.clone()];
    for (k, (mv, rung)) in p.moves.iter().zip(&f.rungs).enumerate() {
        if rung.len() != mv.power {
            return Err(Error::invalid(format!(
                "move {}: rung size {} does not match power {}",
                k + 1,
                rung.len(),
                mv.power
            )));
        }
        if !rung.is_subset(&front[mv.pos - 1]) {
            return Err(Error::invalid(format!(
                "move {}: rung is not contained in the source column",
                k + 1
            )));
        }
        if !rung.is_disjoint(&front[mv.pos]) {
            return Err(Error::invalid(format!(
                "move {}: rung collides with the target column",
                k + 1
            )));
        }
        front[mv.pos - 1] = front[mv.pos - 1].difference(rung).copied().collect();
        front[mv.pos] = front[mv.pos].union(rung).copied().collect();
        out.push(front.clone());
    }
    Ok(out)
}

/// All flows on the program: every assignment of rung subsets compatible
/// with the fronts.
pub fn enumerate_flows(p: &FProgram) -> Result<Vec<Flow>> {
    p.apply()?;
    let mut out = Vec::new();
    let mut rungs: Vec<BTreeSet<usize>> = Vec::with_capacity(p.moves.len());
    fn rec(
        p: &FProgram,
        k: usize,
        front: &mut StateString,
        rungs: &mut Vec<BTreeSet<usize>>,
        out: &mut Vec<Flow>,
    ) {
        if k == p.moves.len() {
            out.push(Flow {
                rungs: rungs.clone(),
            });
            return;
        }
        let mv = p.moves[k];
        let choices: Vec<usize> = front[mv.pos - 1]
            .difference(&front[mv.pos])
            .copied()
            .collect();
        for combo in choices.iter().copied().combinations(mv.power) {
            let rung: BTreeSet<usize> = combo.into_iter().collect();
            for &s in &rung {
                front[mv.pos - 1].remove(&s);
                front[mv.pos].insert(s);
            }
            rungs.push(rung.clone());
            rec(p, k + 1, front, rungs, out);
            rungs.pop();
            for &s in &rung {
                front[mv.pos].remove(&s);
                front[mv.pos - 1].insert(s);
            }
        }
    }
    let mut front = initial_front(p);
    rec(p, 0, &mut front, &mut rungs, &mut out);
    Ok(out)
}

/// Number of strictly increasing pairs between two label sets:
/// `|{(s, t) in S x T : s < t}|`.
fn interleave(s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> i64 {
    s.iter()
        .map(|&x| t.iter().filter(|&&y| x < y).count() as i64)
        .sum()
}

/// The weight of a flow: per move, with source column labels `S1` and target
/// column labels `S2` read below the move and rung `T`,
/// `interleave(S1, T) - interleave(S2, T) - |T|(|T|-1)/2`, summed.
///
/// The first term counts the pairs a label of the rung passes under on the
/// source side, the second those it lands above on the target side; the
/// shift removes the rung's internal pairs.
pub fn flow_weight(p: &FProgram, f: &Flow) -> Result<i64> {
    let fronts = flow_fronts(p, f)?;
    let mut total = 0i64;
    for (k, (mv, rung)) in p.moves.iter().zip(&f.rungs).enumerate() {
        let below = &fronts[k];
        let t = rung.len() as i64;
        total += interleave(&below[mv.pos - 1], rung) - interleave(&below[mv.pos], rung)
            - t * (t - 1) / 2;
    }
    Ok(total)
}

/// Converts a flow into a standard multitableau: step `k` with rung `T` adds
/// a node of residue `pos_k` labelled `k` to component `s` for every `s` in
/// `T`.
pub fn flow_to_tableau(p: &FProgram, f: &Flow) -> Result<MultiTableau> {
    flow_fronts(p, f)?;
    let groups: Vec<(i32, Vec<usize>)> = p
        .moves
        .iter()
        .zip(&f.rungs)
        .map(|(mv, rung)| (mv.pos as i32, rung.iter().copied().collect()))
        .collect();
    MultiTableau::from_groups(p.n, p.ell, &groups)
}

/// The inverse growth algorithm: rebuilds the program (width `m`) and flow
/// from a standard multitableau. Entry `k` contributes the move
/// `F_{residue(k)}^(multiplicity)` with rung the set of components holding
/// `k`.
pub fn tableau_to_flow(t: &MultiTableau, m: usize) -> Result<(FProgram, Flow)> {
    let mut moves = Vec::with_capacity(t.groups().len());
    let mut rungs = Vec::with_capacity(t.groups().len());
    for g in t.groups() {
        if g.residue < 1 {
            return Err(Error::invalid(format!(
                "entry residue {} cannot come from a ladder move",
                g.residue
            )));
        }
        moves.push(FMove {
            pos: g.residue as usize,
            power: g.nodes.len(),
        });
        rungs.push(g.nodes.iter().map(|nd| nd.comp).collect());
    }
    let p = FProgram::new(t.n(), m, t.ell(), moves)?;
    p.apply()?;
    let f = Flow { rungs };
    flow_fronts(&p, &f)?;
    Ok((p, f))
}

/// The boundary state string of a multipartition: column `c` holds component
/// `s` iff some row `r` in `1..=ell` of component `s` has
/// `row_len + ell + 1 - r = c`.
pub fn state_string_of_shape(shape: &MultiPartition, m: usize) -> StateString {
    let ell = shape.ell();
    let mut out: StateString = vec![BTreeSet::new(); m];
    for s in 1..=shape.n() {
        for r in 1..=ell {
            let c = shape.comp(s).row_len(r) + ell + 1 - r;
            if c <= m {
                out[c - 1].insert(s);
            }
        }
    }
    out
}

/// The expansion of a web into elementary tensors: for each boundary state
/// `S`, the coefficient `sum over flows with boundary S of (-q)^weight`.
pub fn tensor_expansion<C: Coeff>(p: &FProgram) -> Result<BTreeMap<StateString, Laurent<C>>> {
    let by_shape = crate::evaluation::ev_by_shape::<C>(p)?;
    let mut out = BTreeMap::new();
    for (shape, poly) in by_shape {
        let key = state_string_of_shape(&shape, p.m);
        let signed = poly.at_neg_q()?;
        let entry = out.entry(key).or_insert_with(Laurent::zero);
        *entry = entry.checked_add(&signed)?;
    }
    Ok(out)
}
