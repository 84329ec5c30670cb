//! Coxeter presentations and their labeled diagrams.
//!
//! A Coxeter group here is the symmetric exponent matrix `m` with
//! `m[i][i] = 1` and `m[i][j] ∈ {2, 3, …, ∞}` off the diagonal. The
//! diagram has an edge `i — j` exactly when `m[i][j] ≥ 3`. This module
//! parses the `.cox` text format, splits diagrams into irreducible
//! components, classifies components against the spherical and affine
//! tables, and evaluates the combinatorial conditions that govern the
//! existence of convex cocompact reflection representations.
//!
//! Generator indices are 0-based throughout the API; display output
//! uses the conventional 1-based `s1, s2, …` names.

mod classify;

pub use classify::{catalog, AffineFamily, GroupClass, SphericalFamily};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

/// An exponent `m[i][j]`; `Infinite` sorts above every finite label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoxLabel {
    Finite(u32),
    Infinite,
}

impl CoxLabel {
    pub fn is_edge(self) -> bool {
        match self {
            CoxLabel::Finite(m) => m >= 3,
            CoxLabel::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            CoxLabel::Finite(m) => Some(m),
            CoxLabel::Infinite => None,
        }
    }
}

impl core::fmt::Display for CoxLabel {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoxLabel::Finite(m) => write!(f, "{m}"),
            CoxLabel::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoxeterError {
    /// Entry matrix is not square of the declared size.
    BadShape,
    /// `m[i][j] != m[j][i]`.
    Asymmetric { i: usize, j: usize },
    /// Diagonal entry is not 1, or 1 appears off the diagonal.
    BadDiagonal { i: usize, j: usize },
    /// Off-diagonal exponent below 2.
    BadExponent { i: usize, j: usize },
    /// Subset enumeration over more than [`SUBSET_BUDGET`] generators.
    SubsetBudget { n: usize },
    /// Operation requires a connected diagram.
    Reducible,
    /// Operation requires an infinite group.
    FiniteGroup,
    /// Named precondition does not hold.
    Precondition(&'static str),
}

impl core::fmt::Display for CoxeterError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CoxeterError::BadShape => write!(f, "exponent matrix has wrong shape"),
            CoxeterError::Asymmetric { i, j } => {
                write!(f, "m[{}][{}] and m[{}][{}] differ", i + 1, j + 1, j + 1, i + 1)
            }
            CoxeterError::BadDiagonal { i, j } => {
                write!(f, "exponent 1 allowed exactly on the diagonal (entry {},{})", i + 1, j + 1)
            }
            CoxeterError::BadExponent { i, j } => {
                write!(f, "off-diagonal exponent m[{}][{}] must be >= 2", i + 1, j + 1)
            }
            CoxeterError::SubsetBudget { n } => {
                write!(f, "subset enumeration capped at {} generators, got {}", SUBSET_BUDGET, n)
            }
            CoxeterError::Reducible => write!(f, "diagram must be connected (irreducible group)"),
            CoxeterError::FiniteGroup => write!(f, "group must be infinite"),
            CoxeterError::Precondition(what) => write!(f, "precondition violated: {what}"),
        }
    }
}

impl core::error::Error for CoxeterError {}

/// Exhaustive subset scans refuse to run past this many generators.
pub const SUBSET_BUDGET: usize = 20;

/// A pair of generator subsets, e.g. an (IC) witness.
pub type SubsetPair = (Vec<usize>, Vec<usize>);

/// The presentation data `m[i][j]` of a Coxeter group `W_S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    m: Vec<CoxLabel>,
}

impl CoxeterMatrix {
    /// Build from a full symmetric exponent matrix.
    pub fn new(entries: &[Vec<CoxLabel>]) -> Result<Self, CoxeterError> {
        let n = entries.len();
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return Err(CoxeterError::BadShape);
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                if entry != entries[j][i] {
                    return Err(CoxeterError::Asymmetric { i, j });
                }
                if (i == j) != (entry == CoxLabel::Finite(1)) {
                    return Err(CoxeterError::BadDiagonal { i, j });
                }
                if i != j {
                    if let CoxLabel::Finite(m) = entry {
                        if m < 2 {
                            return Err(CoxeterError::BadExponent { i, j });
                        }
                    }
                }
            }
        }
        let mut m = Vec::with_capacity(n * n);
        for row in entries {
            m.extend_from_slice(row);
        }
        Ok(CoxeterMatrix { n, m })
    }

    /// Build from an edge list (0-based); unlisted off-diagonal pairs get `m = 2`.
    pub fn from_edges(n: usize, edges: &[(usize, usize, CoxLabel)]) -> Result<Self, CoxeterError> {
        if n == 0 {
            return Err(CoxeterError::BadShape);
        }
        let mut m = vec![CoxLabel::Finite(2); n * n];
        for i in 0..n {
            m[i * n + i] = CoxLabel::Finite(1);
        }
        for &(i, j, label) in edges {
            if i >= n || j >= n || i == j {
                return Err(CoxeterError::BadShape);
            }
            if let CoxLabel::Finite(v) = label {
                if v < 2 {
                    return Err(CoxeterError::BadExponent { i, j });
                }
            }
            m[i * n + j] = label;
            m[j * n + i] = label;
        }
        Ok(CoxeterMatrix { n, m })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn label(&self, i: usize, j: usize) -> CoxLabel {
        self.m[i * self.n + j]
    }

    pub fn commutes(&self, i: usize, j: usize) -> bool {
        self.label(i, j) == CoxLabel::Finite(2)
    }

    /// Neighbors in the diagram (pairs with `m ≥ 3`), ascending.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| j != i && self.label(i, j).is_edge()).collect()
    }

    /// Diagram edges `(i, j, m)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize, CoxLabel)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let l = self.label(i, j);
                if l.is_edge() {
                    out.push((i, j, l));
                }
            }
        }
        out
    }

    /// Pairs `(i, j)` with `i < j` and `m[i][j] = ∞`.
    pub fn infinite_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.label(i, j) == CoxLabel::Infinite {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Exponent matrix restricted to `subset` (indices kept in the given order).
    pub fn induced(&self, subset: &[usize]) -> CoxeterMatrix {
        let k = subset.len();
        assert!(k > 0, "empty subset");
        let mut m = Vec::with_capacity(k * k);
        for &i in subset {
            for &j in subset {
                m.push(self.label(i, j));
            }
        }
        CoxeterMatrix { n: k, m }
    }

    pub fn is_irreducible(&self) -> bool {
        irreducible_components(self).len() == 1
    }

    /// Whether `W_S` is infinite: some irreducible component is not spherical.
    pub fn is_infinite(&self) -> bool {
        irreducible_components(self)
            .iter()
            .any(|c| !matches!(classify_component(self, c), GroupClass::Spherical(_)))
    }

    /// Whether the whole group is word hyperbolic (Moussong's criterion):
    /// no two disjoint commuting infinite standard subgroups, and no
    /// connected affine standard subgroup on three or more generators.
    pub fn is_word_hyperbolic(&self) -> bool {
        if condition_ic(self).0 {
            return false;
        }
        !has_affine_subset_rank_ge3(self)
    }
}

/// A connected component of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramComponent {
    /// Sorted vertex indices into the parent matrix.
    pub vertices: Vec<usize>,
    /// Edges `(i, j, m)` with `i < j`, among `vertices`.
    pub edges: Vec<(usize, usize, CoxLabel)>,
}

/// A standard subgroup `W_{S'}` with its induced exponent matrix.
#[derive(Clone, Debug)]
pub struct StandardSubgroup {
    /// Sorted generator indices into the parent matrix.
    pub subset: Vec<usize>,
    pub matrix: CoxeterMatrix,
}

/// Connected components of the diagram, ordered by smallest vertex.
pub fn irreducible_components(w: &CoxeterMatrix) -> Vec<DiagramComponent> {
    let n = w.size();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut verts = Vec::new();
        let mut queue = vec![start];
        seen[start] = true;
        while let Some(v) = queue.pop() {
            verts.push(v);
            for u in w.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        verts.sort_unstable();
        let mut edges = Vec::new();
        for (a, &i) in verts.iter().enumerate() {
            for &j in verts.iter().skip(a + 1) {
                let l = w.label(i, j);
                if l.is_edge() {
                    edges.push((i, j, l));
                }
            }
        }
        out.push(DiagramComponent { vertices: verts, edges });
    }
    out
}

/// Classify one connected component against the spherical and affine tables.
pub fn classify_component(w: &CoxeterMatrix, c: &DiagramComponent) -> GroupClass {
    classify::classify(w, c)
}

/// Classify a whole connected matrix (convenience for induced subgroups).
pub fn classify_connected(w: &CoxeterMatrix) -> Result<GroupClass, CoxeterError> {
    let comps = irreducible_components(w);
    if comps.len() != 1 {
        return Err(CoxeterError::Reducible);
    }
    Ok(classify_component(w, &comps[0]))
}

fn subset_from_mask(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask & (1 << i) != 0).collect()
}

fn induced_is_connected(w: &CoxeterMatrix, subset: &[usize]) -> bool {
    if subset.is_empty() {
        return false;
    }
    let sub = w.induced(subset);
    irreducible_components(&sub).len() == 1
}

fn subset_is_infinite(w: &CoxeterMatrix, subset: &[usize]) -> bool {
    w.induced(subset).is_infinite()
}

/// All nonempty standard subgroups passing `filter`, ordered by subset
/// bitmask. Refuses to run past [`SUBSET_BUDGET`] generators.
pub fn enumerate_standard_subgroups(
    w: &CoxeterMatrix,
    filter: impl Fn(&StandardSubgroup) -> bool,
) -> Result<Vec<StandardSubgroup>, CoxeterError> {
    let n = w.size();
    if n > SUBSET_BUDGET {
        return Err(CoxeterError::SubsetBudget { n });
    }
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let subset = subset_from_mask(mask, n);
        let sub = StandardSubgroup { matrix: w.induced(&subset), subset };
        if filter(&sub) {
            out.push(sub);
        }
    }
    Ok(out)
}

/// Condition (IC): do there exist disjoint subsets `S', S''` whose
/// standard subgroups are both infinite and commute? Returns the first
/// witness pair in subset-bitmask order.
///
/// Uses the equivalent scan over single subsets: `(IC)` holds iff some
/// infinite `S'` has an infinite commutant `S'^⊥`.
pub fn condition_ic(w: &CoxeterMatrix) -> (bool, Option<SubsetPair>) {
    let n = w.size();
    debug_assert!(n <= SUBSET_BUDGET, "subset scan past budget");
    for mask in 1u32..(1u32 << n) {
        let s1 = subset_from_mask(mask, n);
        if !subset_is_infinite(w, &s1) {
            continue;
        }
        let perp = perp_of(w, &s1);
        if perp.is_empty() || !subset_is_infinite(w, &perp) {
            continue;
        }
        // Shrink the commutant side to one infinite irreducible piece.
        let sub = w.induced(&perp);
        for comp in irreducible_components(&sub) {
            if !matches!(classify_component(&sub, &comp), GroupClass::Spherical(_)) {
                let s2: Vec<usize> = comp.vertices.iter().map(|&l| perp[l]).collect();
                return (true, Some((s1, s2)));
            }
        }
    }
    (false, None)
}

/// Generators outside `subset` commuting with all of it.
pub fn perp_of(w: &CoxeterMatrix, subset: &[usize]) -> Vec<usize> {
    (0..w.size())
        .filter(|&s| !subset.contains(&s) && subset.iter().all(|&u| w.commutes(s, u)))
        .collect()
}

/// Condition (Ã): every connected affine standard subgroup on ≥ 3
/// generators is of type `Ã_k`. Returns the first violating subset if any.
pub fn condition_atilde(w: &CoxeterMatrix) -> (bool, Option<Vec<usize>>) {
    let n = w.size();
    debug_assert!(n <= SUBSET_BUDGET, "subset scan past budget");
    for mask in 1u32..(1u32 << n) {
        if (mask.count_ones() as usize) < 3 {
            continue;
        }
        let subset = subset_from_mask(mask, n);
        if !induced_is_connected(w, &subset) {
            continue;
        }
        let class = classify_connected(&w.induced(&subset)).expect("connected");
        if let GroupClass::Affine(family) = class {
            if !matches!(family, AffineFamily::ATilde(_)) {
                return (false, Some(subset));
            }
        }
    }
    (true, None)
}

fn has_affine_subset_rank_ge3(w: &CoxeterMatrix) -> bool {
    let n = w.size();
    for mask in 1u32..(1u32 << n) {
        if (mask.count_ones() as usize) < 3 {
            continue;
        }
        let subset = subset_from_mask(mask, n);
        if !induced_is_connected(w, &subset) {
            continue;
        }
        if matches!(classify_connected(&w.induced(&subset)), Ok(GroupClass::Affine(_))) {
            return true;
        }
    }
    false
}

/// Whether an infinite irreducible `W_S` admits a convex cocompact
/// reflection representation: conditions ¬(IC) and (Ã) together.
pub fn admits_cc_reflection_rep(w: &CoxeterMatrix) -> Result<bool, CoxeterError> {
    if !w.is_irreducible() {
        return Err(CoxeterError::Reducible);
    }
    if !w.is_infinite() {
        return Err(CoxeterError::FiniteGroup);
    }
    Ok(!condition_ic(w).0 && condition_atilde(w).0)
}

/// Peripheral data for relative hyperbolicity: every subset `U` of type
/// `Ã_k` (k ≥ 2) paired with its commutant `U^⊥` (always finite here).
pub fn peripheral_subgroups(
    w: &CoxeterMatrix,
) -> Result<Vec<SubsetPair>, CoxeterError> {
    if !admits_cc_reflection_rep(w)? {
        return Err(CoxeterError::Precondition("conditions ¬(IC) and (Ã) must hold"));
    }
    if !matches!(classify_connected(w), Ok(GroupClass::Large)) {
        return Err(CoxeterError::Precondition(
            "peripheral structure is defined for large groups; this group is affine",
        ));
    }
    let n = w.size();
    let mut out = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if (mask.count_ones() as usize) < 3 {
            continue;
        }
        let subset = subset_from_mask(mask, n);
        if !induced_is_connected(w, &subset) {
            continue;
        }
        if let Ok(GroupClass::Affine(AffineFamily::ATilde(_))) =
            classify_connected(&w.induced(&subset))
        {
            let perp = perp_of(w, &subset);
            if !perp.is_empty() && subset_is_infinite(w, &perp) {
                // ¬(IC) rules this out.
                return Err(CoxeterError::Precondition("infinite commutant despite ¬(IC)"));
            }
            out.push((subset, perp));
        }
    }
    Ok(out)
}

/// Errors from the `.cox` text format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    BadHeader { line: usize },
    MalformedLine { line: usize },
    IndexOutOfRange { line: usize, index: i64 },
    BadExponent { line: usize },
    ConflictingEntry { line: usize, i: usize, j: usize },
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ParseError::Empty => write!(f, "no content"),
            ParseError::BadHeader { line } => write!(f, "line {line}: expected generator count"),
            ParseError::MalformedLine { line } => {
                write!(f, "line {line}: expected `i j m` with integer i, j")
            }
            ParseError::IndexOutOfRange { line, index } => {
                write!(f, "line {line}: generator index {index} out of range")
            }
            ParseError::BadExponent { line } => {
                write!(f, "line {line}: exponent must be an integer >= 2 or `inf`")
            }
            ParseError::ConflictingEntry { line, i, j } => {
                write!(f, "line {line}: conflicting exponent for pair ({}, {})", i + 1, j + 1)
            }
        }
    }
}

impl core::error::Error for ParseError {}

/// Parse the `.cox` format: first significant line is the generator
/// count `N`; each following line is `i j m` with 1-based indices and
/// `m` an integer ≥ 2 or `inf`; `#` starts a comment; unlisted pairs
/// default to `m = 2`; duplicate symmetric entries must agree.
pub fn parse_coxeter(text: &str) -> Result<CoxeterMatrix, ParseError> {
    let mut n: Option<usize> = None;
    let mut entries: Vec<Vec<Option<CoxLabel>>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                let count: usize =
                    line.parse().map_err(|_| ParseError::BadHeader { line: line_no })?;
                if count == 0 {
                    return Err(ParseError::BadHeader { line: line_no });
                }
                n = Some(count);
                entries = vec![vec![None; count]; count];
            }
            Some(count) => {
                let mut parts = line.split_whitespace();
                let (a, b, m) = match (parts.next(), parts.next(), parts.next(), parts.next()) {
                    (Some(a), Some(b), Some(m), None) => (a, b, m),
                    _ => return Err(ParseError::MalformedLine { line: line_no }),
                };
                let parse_index = |s: &str| -> Result<usize, ParseError> {
                    let v: i64 =
                        s.parse().map_err(|_| ParseError::MalformedLine { line: line_no })?;
                    if v < 1 || v as usize > count {
                        return Err(ParseError::IndexOutOfRange { line: line_no, index: v });
                    }
                    Ok(v as usize - 1)
                };
                let i = parse_index(a)?;
                let j = parse_index(b)?;
                if i == j {
                    return Err(ParseError::BadExponent { line: line_no });
                }
                let label = if m.eq_ignore_ascii_case("inf") {
                    CoxLabel::Infinite
                } else {
                    let v: u32 = m.parse().map_err(|_| ParseError::BadExponent { line: line_no })?;
                    if v < 2 {
                        return Err(ParseError::BadExponent { line: line_no });
                    }
                    CoxLabel::Finite(v)
                };
                for (p, q) in [(i, j), (j, i)] {
                    match entries[p][q] {
                        Some(existing) if existing != label => {
                            return Err(ParseError::ConflictingEntry { line: line_no, i, j })
                        }
                        _ => entries[p][q] = Some(label),
                    }
                }
            }
        }
    }
    n.ok_or(ParseError::Empty)?;
    let rows: Vec<Vec<CoxLabel>> = entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, &e)| {
                    if i == j {
                        CoxLabel::Finite(1)
                    } else {
                        e.unwrap_or(CoxLabel::Finite(2))
                    }
                })
                .collect()
        })
        .collect();
    CoxeterMatrix::new(&rows).map_err(|_| ParseError::Empty)
}

/// Serialize back to the `.cox` format (edges only, ascending).
pub fn to_cox_text(w: &CoxeterMatrix) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    let _ = writeln!(out, "{}", w.size());
    for (i, j, l) in w.edges() {
        let _ = writeln!(out, "{} {} {}", i + 1, j + 1, l);
    }
    out
}

#[cfg(test)]
pub(crate) mod tests;
