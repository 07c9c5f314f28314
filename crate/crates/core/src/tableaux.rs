//! Partitions, n-multipartitions and standard n-multitableaux with grouped
//! (divided-power) entries.
//!
//! Conventions used throughout:
//!
//! - Nodes are addressed as `(row, col)`, both 1-based, English notation.
//! - A node in row `r`, column `c` has residue `c - r + ell`, where `ell` is
//!   fixed by the ambient context (the number of full start columns of the
//!   generating ladder).
//! - Component index 1 is the *rightmost* component; displays print
//!   components left to right, i.e. from index `n` down to 1.
//! - Node `N1 = (r1, c1, i1)` comes before `N2 = (r2, c2, i2)` iff `i1 > i2`,
//!   or `i1 == i2` and `r1 <= r2`. "Strictly after" excludes the node itself.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// The residue `col - row + ell` of a node (coordinates 1-based).
pub fn residue(row: usize, col: usize, ell: usize) -> i32 {
    col as i32 - row as i32 + ell as i32
}

/// An integer partition: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if !rows.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "partition rows must be weakly decreasing, got {rows:?}"
            )));
        }
        let mut rows = rows;
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Ok(Partition { rows })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of non-empty rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of nodes.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Length of row `r` (1-based); rows past the end have length 0.
    pub fn row_len(&self, r: usize) -> usize {
        self.rows.get(r - 1).copied().unwrap_or(0)
    }

    /// The unique addable cell of the given residue, if any.
    pub fn addable_cell(&self, res: i32, ell: usize) -> Option<(usize, usize)> {
        (1..=self.len() + 1)
            .map(|r| (r, self.row_len(r) + 1))
            .find(|&(r, c)| residue(r, c, ell) == res && (r == 1 || self.row_len(r - 1) >= c))
    }

    /// The unique removable cell of the given residue, if any.
    pub fn removable_cell(&self, res: i32, ell: usize) -> Option<(usize, usize)> {
        (1..=self.len())
            .map(|r| (r, self.row_len(r)))
            .find(|&(r, c)| residue(r, c, ell) == res && self.row_len(r + 1) < c)
    }

    fn grow(&mut self, row: usize) {
        if row == self.rows.len() + 1 {
            self.rows.push(1);
        } else {
            self.rows[row - 1] += 1;
        }
    }

    /// True if `self` fits inside `other` row by row.
    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.len()).all(|r| self.row_len(r) <= other.row_len(r))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "[0]");
        }
        write!(f, "[{}]", self.rows.iter().join(","))
    }
}

/// A node of a multipartition: 1-based component, row and column.
/// Component 1 is the rightmost component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeRef {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl NodeRef {
    pub fn residue(&self, ell: usize) -> i32 {
        residue(self.row, self.col, ell)
    }
}

/// An n-tuple of partitions with its ambient context `(n, ell)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    n: usize,
    ell: usize,
    /// `comps[i]` is component `i + 1`; component 1 is the rightmost.
    comps: Vec<Partition>,
}

impl MultiPartition {
    pub fn empty(n: usize, ell: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::invalid(format!("n must be at least 2, got {n}")));
        }
        if ell < 1 {
            return Err(Error::invalid("ell must be at least 1"));
        }
        Ok(MultiPartition {
            n,
            ell,
            comps: vec![Partition::empty(); n],
        })
    }

    /// Builds from components listed left to right, i.e. component `n` first,
    /// matching the display convention.
    pub fn from_components_left_to_right(
        n: usize,
        ell: usize,
        comps: Vec<Partition>,
    ) -> Result<Self> {
        if comps.len() != n {
            return Err(Error::invalid(format!(
                "expected {n} components, got {}",
                comps.len()
            )));
        }
        let mut mp = Self::empty(n, ell)?;
        for (i, p) in comps.into_iter().enumerate() {
            mp.comps[n - 1 - i] = p;
        }
        Ok(mp)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Component by 1-based index (1 = rightmost).
    pub fn comp(&self, i: usize) -> &Partition {
        &self.comps[i - 1]
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    /// All addable nodes of the given residue, at most one per component,
    /// ordered leftmost first (descending component index).
    pub fn addable_nodes(&self, res: i32) -> Vec<NodeRef> {
        (1..=self.n)
            .rev()
            .filter_map(|i| {
                self.comp(i)
                    .addable_cell(res, self.ell)
                    .map(|(row, col)| NodeRef { comp: i, row, col })
            })
            .collect()
    }

    /// All removable nodes of the given residue, ordered leftmost first.
    pub fn removable_nodes(&self, res: i32) -> Vec<NodeRef> {
        (1..=self.n)
            .rev()
            .filter_map(|i| {
                self.comp(i)
                    .removable_cell(res, self.ell)
                    .map(|(row, col)| NodeRef { comp: i, row, col })
            })
            .collect()
    }

    fn add_node(&mut self, node: NodeRef) {
        self.comps[node.comp - 1].grow(node.row);
    }

    /// True if every component of `self` fits inside the matching component
    /// of `other`.
    pub fn contained_in(&self, other: &MultiPartition) -> bool {
        self.n == other.n
            && (1..=self.n).all(|i| self.comp(i).contained_in(other.comp(i)))
    }
}

impl fmt::Display for MultiPartition {
    /// Components left to right (index `n` down to 1), e.g. `[3,2,1][0][4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (1..=self.n).rev() {
            write!(f, "{}", self.comp(i))?;
        }
        Ok(())
    }
}

/// Outcome of a partial-order comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomOrd {
    Lt,
    Eq,
    Gt,
    Incomparable,
}

/// Dominance order on multipartitions of equal size: cumulative sums taken
/// component by component from the left (index `n` down to 1), refined by row
/// prefixes inside each component.
pub fn dominance_mp(a: &MultiPartition, b: &MultiPartition) -> Result<DomOrd> {
    if a.n() != b.n() || a.ell() != b.ell() {
        return Err(Error::invalid("dominance: mismatched contexts"));
    }
    if a.size() != b.size() {
        return Err(Error::invalid("dominance: mismatched total sizes"));
    }
    // Cumulative profile on a common row refinement: within each component
    // block (taken to the deeper of the two row counts) the running total
    // after each row prefix. The profile determines the multipartition.
    let depths: Vec<usize> = (1..=a.n())
        .rev()
        .map(|i| a.comp(i).len().max(b.comp(i).len()).max(1))
        .collect();
    let profile = |mp: &MultiPartition| -> Vec<usize> {
        let mut acc = 0usize;
        let mut out = Vec::new();
        for (k, i) in (1..=mp.n()).rev().enumerate() {
            let p = mp.comp(i);
            for r in 1..=depths[k] {
                out.push(acc + p.rows().iter().take(r).sum::<usize>());
            }
            acc += p.size();
        }
        out
    };
    let pa = profile(a);
    let pb = profile(b);
    let le = pa.iter().zip(&pb).all(|(x, y)| x <= y);
    let ge = pa.iter().zip(&pb).all(|(x, y)| x >= y);
    Ok(match (le, ge) {
        (true, true) => DomOrd::Eq,
        (true, false) => DomOrd::Lt,
        (false, true) => DomOrd::Gt,
        (false, false) => DomOrd::Incomparable,
    })
}

/// One divided-power entry of a standard multitableau: `len(nodes)` nodes of
/// a common residue, in pairwise distinct components, ordered leftmost first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntryGroup {
    pub residue: i32,
    pub nodes: Vec<NodeRef>,
}

/// A standard n-multitableau with grouped entries.
///
/// Entry `k` (1-based) occupies the nodes of `groups[k - 1]`; within each
/// component entries strictly increase along rows and columns, every node of
/// a group carries the group's residue, and the groups tile the shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiTableau {
    shape: MultiPartition,
    groups: Vec<EntryGroup>,
}

impl MultiTableau {
    /// Builds a tableau by placing each group at the addable cells of its
    /// residue, components processed leftmost first. Fails if some component
    /// has no addable cell of the requested residue or a component repeats
    /// within a group.
    pub fn from_groups(n: usize, ell: usize, groups: &[(i32, Vec<usize>)]) -> Result<Self> {
        let mut shape = MultiPartition::empty(n, ell)?;
        let mut built = Vec::with_capacity(groups.len());
        for (k, (res, comps)) in groups.iter().enumerate() {
            if comps.is_empty() {
                return Err(Error::invalid(format!("entry {} has no components", k + 1)));
            }
            let mut sorted = comps.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!(
                    "entry {} repeats a component",
                    k + 1
                )));
            }
            let mut nodes = Vec::with_capacity(sorted.len());
            for &i in &sorted {
                if i < 1 || i > n {
                    return Err(Error::invalid(format!(
                        "entry {}: component {i} out of range",
                        k + 1
                    )));
                }
                let (row, col) = shape.comp(i).addable_cell(*res, ell).ok_or_else(|| {
                    Error::invalid(format!(
                        "entry {}: component {i} has no addable node of residue {res}",
                        k + 1
                    ))
                })?;
                let node = NodeRef { comp: i, row, col };
                shape.add_node(node);
                nodes.push(node);
            }
            built.push(EntryGroup {
                residue: *res,
                nodes,
            });
        }
        Ok(MultiTableau {
            shape,
            groups: built,
        })
    }

    /// The row-reading filling of a shape: entries 1, 2, ... placed component
    /// by component from the left, each component row by row. Every standard
    /// tableau of the shape is dominated by it.
    pub fn row_reading(shape: &MultiPartition) -> Self {
        let ell = shape.ell();
        let mut groups = Vec::with_capacity(shape.size());
        for i in (1..=shape.n()).rev() {
            let p = shape.comp(i);
            for r in 1..=p.len() {
                for c in 1..=p.row_len(r) {
                    groups.push((residue(r, c, ell), vec![i]));
                }
            }
        }
        Self::from_groups(shape.n(), ell, &groups).expect("row reading is always standard")
    }

    pub fn shape(&self) -> &MultiPartition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn ell(&self) -> usize {
        self.shape.ell()
    }

    pub fn groups(&self) -> &[EntryGroup] {
        &self.groups
    }

    /// The per-group residue/multiplicity list, in entry order.
    pub fn residue_sequence(&self) -> Vec<(i32, usize)> {
        self.groups
            .iter()
            .map(|g| (g.residue, g.nodes.len()))
            .collect()
    }

    /// Group data in constructor form.
    pub fn group_data(&self) -> Vec<(i32, Vec<usize>)> {
        self.groups
            .iter()
            .map(|g| (g.residue, g.nodes.iter().map(|nd| nd.comp).collect()))
            .collect()
    }

    /// The Brundan-Kleshchev-Wang degree: the sum over entries of the
    /// addable-minus-removable counts after each placed node, with the
    /// `j(j-1)/2` shift per divided-power group.
    pub fn bkw_degree(&self) -> i64 {
        let mut shape = MultiPartition::empty(self.n(), self.ell()).expect("valid context");
        let mut total = 0i64;
        for g in &self.groups {
            let comps: Vec<usize> = g.nodes.iter().map(|nd| nd.comp).collect();
            let (inc, next) = degree_increment(&shape, g.residue, &comps)
                .expect("tableau groups are placeable by construction");
            total += inc;
            shape = next;
        }
        total
    }

    /// Shapes after each single node, groups flattened leftmost first; used
    /// by the extended dominance order.
    fn node_shapes(&self) -> Vec<MultiPartition> {
        let mut shape = MultiPartition::empty(self.n(), self.ell()).expect("valid context");
        let mut out = Vec::new();
        for g in &self.groups {
            for &node in &g.nodes {
                shape.add_node(node);
                out.push(shape.clone());
            }
        }
        out
    }
}

impl fmt::Display for MultiTableau {
    /// Components left to right; each as rows of entry numbers joined by `/`,
    /// e.g. `[1,2/3][ ]` prints as `[1,2/3][]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut grids: Vec<Vec<Vec<usize>>> = (1..=self.n())
            .map(|i| {
                let p = self.shape.comp(i);
                (1..=p.len()).map(|r| vec![0; p.row_len(r)]).collect()
            })
            .collect();
        for (k, g) in self.groups.iter().enumerate() {
            for nd in &g.nodes {
                grids[nd.comp - 1][nd.row - 1][nd.col - 1] = k + 1;
            }
        }
        for i in (1..=self.n()).rev() {
            let rows = &grids[i - 1];
            write!(f, "[")?;
            for (r, row) in rows.iter().enumerate() {
                if r > 0 {
                    write!(f, "/")?;
                }
                write!(f, "{}", row.iter().join(","))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Adds one node of residue `res` to each listed component of `shape`
/// (leftmost first) and returns the degree contribution together with the
/// grown shape.
///
/// After each node `N` the contribution counts the addable minus removable
/// nodes of residue `res` strictly after `N` in the shape including `N`;
/// finally `j(j-1)/2` is subtracted, `j` being the number of components.
pub fn degree_increment(
    shape: &MultiPartition,
    res: i32,
    comps: &[usize],
) -> Result<(i64, MultiPartition)> {
    let mut order: Vec<usize> = comps.to_vec();
    order.sort_unstable_by(|a, b| b.cmp(a));
    if order.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("degree increment: repeated component"));
    }
    let ell = shape.ell();
    let mut shape = shape.clone();
    let mut inc = 0i64;
    for &i in &order {
        let (row, col) = shape.comp(i).addable_cell(res, ell).ok_or_else(|| {
            Error::invalid(format!(
                "component {i} has no addable node of residue {res}"
            ))
        })?;
        shape.add_node(NodeRef { comp: i, row, col });
        // Strictly after the new node: everything in components of smaller
        // index, plus the same component strictly below the new node. Within
        // one component, addable or removable nodes of the same residue can
        // only sit in lower rows, so the per-component flags suffice.
        for j in 1..i {
            if shape.comp(j).addable_cell(res, ell).is_some() {
                inc += 1;
            }
            if shape.comp(j).removable_cell(res, ell).is_some() {
                inc -= 1;
            }
        }
        if let Some((r2, _)) = shape.comp(i).addable_cell(res, ell) {
            if r2 > row {
                inc += 1;
            }
        }
        if let Some((r2, _)) = shape.comp(i).removable_cell(res, ell) {
            if r2 > row {
                inc -= 1;
            }
        }
    }
    let j = order.len() as i64;
    inc -= j * (j - 1) / 2;
    Ok((inc, shape))
}

/// Extended dominance order on standard multitableaux: compares the shape
/// sequences after every node, groups flattened leftmost first.
pub fn dominance_mt(a: &MultiTableau, b: &MultiTableau) -> Result<DomOrd> {
    let sa = a.node_shapes();
    let sb = b.node_shapes();
    if sa.len() != sb.len() {
        return Err(Error::invalid("dominance: mismatched tableau sizes"));
    }
    let mut le = true;
    let mut ge = true;
    for (x, y) in sa.iter().zip(&sb) {
        match dominance_mp(x, y)? {
            DomOrd::Lt => ge = false,
            DomOrd::Gt => le = false,
            DomOrd::Eq => {}
            DomOrd::Incomparable => {
                le = false;
                ge = false;
            }
        }
        if !le && !ge {
            return Ok(DomOrd::Incomparable);
        }
    }
    Ok(match (le, ge) {
        (true, true) => DomOrd::Eq,
        (true, false) => DomOrd::Lt,
        (false, true) => DomOrd::Gt,
        (false, false) => DomOrd::Incomparable,
    })
}

/// Enumerates every standard filling of `shape` realizing the given residue
/// sequence (residue, multiplicity per entry). Brute force; intended as an
/// oracle for the shape-merging evaluation.
pub fn enumerate_standard(
    shape: &MultiPartition,
    rseq: &[(i32, usize)],
) -> Vec<MultiTableau> {
    let total: usize = rseq.iter().map(|&(_, m)| m).sum();
    if total != shape.size() {
        return Vec::new();
    }
    struct Search<'a> {
        shape: &'a MultiPartition,
        rseq: &'a [(i32, usize)],
        current: Vec<(i32, Vec<usize>)>,
        out: Vec<MultiTableau>,
    }

    impl Search<'_> {
        fn step(&mut self, k: usize, running: &MultiPartition) {
            let (n, ell) = (self.shape.n(), self.shape.ell());
            if k == self.rseq.len() {
                self.out.push(
                    MultiTableau::from_groups(n, ell, &self.current)
                        .expect("placements were validated during the search"),
                );
                return;
            }
            let (res, mult) = self.rseq[k];
            let candidates: Vec<usize> = (1..=n)
                .rev()
                .filter(|&i| {
                    running.comp(i).addable_cell(res, ell).is_some_and(|(r, c)| {
                        // prune: the grown component must still fit the target
                        r <= self.shape.comp(i).len() && c <= self.shape.comp(i).row_len(r)
                    })
                })
                .collect();
            if candidates.len() < mult {
                return;
            }
            for combo in candidates.iter().copied().combinations(mult) {
                let mut next = running.clone();
                for &i in &combo {
                    let (row, col) = next.comp(i).addable_cell(res, ell).expect("candidate");
                    next.add_node(NodeRef { comp: i, row, col });
                }
                self.current.push((res, combo));
                self.step(k + 1, &next);
                self.current.pop();
            }
        }
    }

    let start = MultiPartition::empty(shape.n(), shape.ell()).expect("valid context");
    let mut search = Search {
        shape,
        rseq,
        current: Vec::new(),
        out: Vec::new(),
    };
    search.step(0, &start);
    search.out
}

/// Convenience: the distinct components touched by a set of nodes.
pub fn components_of(nodes: &[NodeRef]) -> BTreeSet<usize> {
    nodes.iter().map(|nd| nd.comp).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn mp(n: usize, ell: usize, comps_left_to_right: &[&[usize]]) -> MultiPartition {
        MultiPartition::from_components_left_to_right(
            n,
            ell,
            comps_left_to_right.iter().map(|r| part(r)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn residue_rule() {
        assert_eq!(residue(1, 1, 3), 3);
        assert_eq!(residue(4, 4, 7), 7);
        assert_eq!(residue(3, 1, 3), 1);
    }

    /// The 3-multipartition ((4,2,1),(2,1),(4,4,3)) with ell = 3: two addable
    /// nodes of residue 4 and one removable node of residue 2.
    #[test]
    fn addable_removable_nodes() {
        let lam = mp(3, 3, &[&[4, 2, 1], &[2, 1], &[4, 4, 3]]);
        let add4 = lam.addable_nodes(4);
        assert_eq!(
            add4,
            vec![
                NodeRef { comp: 3, row: 2, col: 3 },
                NodeRef { comp: 1, row: 3, col: 4 },
            ]
        );
        let rem2 = lam.removable_nodes(2);
        assert_eq!(rem2, vec![NodeRef { comp: 2, row: 2, col: 1 }]);
    }

    #[test]
    fn addable_to_empty() {
        let e = MultiPartition::empty(4, 1).unwrap();
        let nodes = e.addable_nodes(1);
        assert_eq!(nodes.len(), 4);
        assert!(nodes.iter().all(|nd| (nd.row, nd.col) == (1, 1)));
        assert_eq!(nodes[0].comp, 4);
        assert!(e.addable_nodes(2).is_empty());
        assert!(e.removable_nodes(1).is_empty());
    }

    #[test]
    fn single_cell_removable() {
        let one = mp(2, 1, &[&[], &[1]]);
        assert_eq!(one.removable_nodes(1), vec![NodeRef { comp: 1, row: 1, col: 1 }]);
    }

    /// Four single-entry tableaux filling one node per component have degree
    /// zero for any number of components.
    #[test]
    fn degree_zero_rows() {
        for k in 1..=4 {
            let comps: Vec<usize> = (1..=k).collect();
            let t = MultiTableau::from_groups(4, 1, &[(1, comps)]).unwrap();
            assert_eq!(t.bkw_degree(), 0, "k = {k}");
        }
    }

    /// A 3-multitableau with a removable node after the last entry; its
    /// total degree is 3 with per-entry contributions
    /// 1,0,0,0,1,0,0,1,0,1,-1.
    #[test]
    fn degree_with_negative_step() {
        let groups: Vec<(i32, Vec<usize>)> = vec![
            (3, vec![3, 1]),
            (4, vec![3, 1]),
            (5, vec![3, 1]),
            (2, vec![1]),
            (3, vec![2]),
            (4, vec![2]),
            (1, vec![1]),
            (2, vec![3]),
            (3, vec![3, 1]),
            (2, vec![2]),
            (1, vec![2]),
        ];
        let t = MultiTableau::from_groups(3, 3, &groups).unwrap();
        assert_eq!(t.bkw_degree(), 3);

        // replay the per-group contributions
        let expected = [1, 0, 0, 0, 1, 0, 0, 1, 0, 1, -1];
        let mut shape = MultiPartition::empty(3, 3).unwrap();
        for (g, want) in groups.iter().zip(expected) {
            let (inc, next) = degree_increment(&shape, g.0, &g.1).unwrap();
            assert_eq!(inc, want, "group {g:?}");
            shape = next;
        }
    }

    #[test]
    fn degree_increment_full_row_of_empty() {
        let e = MultiPartition::empty(4, 1).unwrap();
        let (inc, next) = degree_increment(&e, 1, &[4, 3, 2, 1]).unwrap();
        assert_eq!(inc, 0);
        assert_eq!(next.size(), 4);
        assert!(degree_increment(&e, 2, &[1]).is_err());
    }

    #[test]
    fn dominance_examples() {
        let a = mp(2, 2, &[&[], &[2, 2]]);
        let b = mp(2, 2, &[&[1], &[2, 1]]);
        assert_eq!(dominance_mp(&a, &b).unwrap(), DomOrd::Lt);
        assert_eq!(dominance_mp(&a, &a).unwrap(), DomOrd::Eq);

        let c = mp(2, 1, &[&[2], &[]]);
        let d = mp(2, 1, &[&[], &[2]]);
        assert_eq!(dominance_mp(&c, &d).unwrap(), DomOrd::Gt);

        // equal component sizes, transposed shapes: no relation either way
        let x = mp(2, 2, &[&[2], &[1, 1]]);
        let y = mp(2, 2, &[&[1, 1], &[2]]);
        assert_eq!(dominance_mp(&x, &y).unwrap(), DomOrd::Incomparable);
        assert!(dominance_mp(&a, &c).is_err());
    }

    #[test]
    fn dominance_mt_row_reading_dominates() {
        // shape ((2,1),(1),(2,1)) left to right, n = 3, ell = 2
        let shape = mp(3, 2, &[&[2, 1], &[1], &[2, 1]]);
        let t_lam = MultiTableau::row_reading(&shape);
        // fill entries 1,2,3 in comp 3; 4 at comp 1 (1,1); 5 at comp 2; 6,7 in comp 1
        let t = MultiTableau::from_groups(
            3,
            2,
            &[
                (2, vec![3]),
                (3, vec![3]),
                (1, vec![3]),
                (2, vec![1]),
                (2, vec![2]),
                (3, vec![1]),
                (1, vec![1]),
            ],
        )
        .unwrap();
        assert_eq!(dominance_mt(&t, &t_lam).unwrap(), DomOrd::Lt);
        assert_eq!(dominance_mt(&t, &t).unwrap(), DomOrd::Eq);
    }

    #[test]
    fn residue_sequence_of_row_reading() {
        // shape ((1),(2,1)) with n = 2, ell = 2
        let shape = mp(2, 2, &[&[1], &[2, 1]]);
        let t = MultiTableau::row_reading(&shape);
        assert_eq!(t.residue_sequence(), vec![(2, 1), (2, 1), (3, 1), (1, 1)]);
    }

    #[test]
    fn enumerate_standard_small() {
        let shape = mp(2, 1, &[&[1], &[1]]);
        let fillings = enumerate_standard(&shape, &[(1, 1), (1, 1)]);
        assert_eq!(fillings.len(), 2);
        let none = enumerate_standard(&shape, &[(2, 1), (1, 1)]);
        assert!(none.is_empty());
    }

    #[test]
    fn display_forms() {
        let lam = mp(4, 1, &[&[3, 2, 1], &[], &[4], &[3, 1]]);
        assert_eq!(lam.to_string(), "[3,2,1][0][4][3,1]");
        let t = MultiTableau::from_groups(2, 1, &[(1, vec![2, 1]), (2, vec![1])]).unwrap();
        assert_eq!(t.to_string(), "[1][1,2]");
    }
}
