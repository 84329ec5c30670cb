//! Recognition of the irreducible spherical and affine diagrams.
//!
//! Each family is matched by a structural predicate on the component:
//! vertex count, degree sequence, label multiset, cycle detection, and
//! branch-arm lengths. A component matching no table entry is large.

use alloc::vec;
use alloc::vec::Vec;

use super::{CoxLabel, CoxeterMatrix, DiagramComponent};

/// Irreducible spherical (finite) families. Rank = number of nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphericalFamily {
    A(u32),
    B(u32),
    D(u32),
    /// Dihedral `I2(p)`, `p ≥ 5`; `p = 3, 4` are `A2`, `B2`.
    I2(u32),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

/// Irreducible affine families. The index is one less than the number
/// of nodes; `ATilde(1)` is the infinite dihedral group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineFamily {
    ATilde(u32),
    BTilde(u32),
    CTilde(u32),
    DTilde(u32),
    /// The 3-node path with both labels 4 (`B̃2 = C̃2`).
    BC2Tilde,
    GTilde2,
    FTilde4,
    ETilde6,
    ETilde7,
    ETilde8,
}

/// Spherical / affine / large trichotomy for an irreducible component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupClass {
    Spherical(SphericalFamily),
    Affine(AffineFamily),
    Large,
}

impl GroupClass {
    pub fn is_finite(self) -> bool {
        matches!(self, GroupClass::Spherical(_))
    }
}

impl core::fmt::Display for SphericalFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SphericalFamily::A(n) => write!(f, "A{n}"),
            SphericalFamily::B(n) => write!(f, "B{n}"),
            SphericalFamily::D(n) => write!(f, "D{n}"),
            SphericalFamily::I2(p) => write!(f, "I2({p})"),
            SphericalFamily::H3 => write!(f, "H3"),
            SphericalFamily::H4 => write!(f, "H4"),
            SphericalFamily::F4 => write!(f, "F4"),
            SphericalFamily::E6 => write!(f, "E6"),
            SphericalFamily::E7 => write!(f, "E7"),
            SphericalFamily::E8 => write!(f, "E8"),
        }
    }
}

impl core::fmt::Display for AffineFamily {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            AffineFamily::ATilde(n) => write!(f, "A~{n}"),
            AffineFamily::BTilde(n) => write!(f, "B~{n}"),
            AffineFamily::CTilde(n) => write!(f, "C~{n}"),
            AffineFamily::DTilde(n) => write!(f, "D~{n}"),
            AffineFamily::BC2Tilde => write!(f, "B~2=C~2"),
            AffineFamily::GTilde2 => write!(f, "G~2"),
            AffineFamily::FTilde4 => write!(f, "F~4"),
            AffineFamily::ETilde6 => write!(f, "E~6"),
            AffineFamily::ETilde7 => write!(f, "E~7"),
            AffineFamily::ETilde8 => write!(f, "E~8"),
        }
    }
}

impl core::fmt::Display for GroupClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GroupClass::Spherical(fam) => write!(f, "spherical {fam}"),
            GroupClass::Affine(fam) => write!(f, "affine {fam}"),
            GroupClass::Large => write!(f, "large"),
        }
    }
}

/// Component structure in local 0..k indices.
struct Local {
    k: usize,
    adj: Vec<Vec<(usize, CoxLabel)>>,
    edges: Vec<(usize, usize, CoxLabel)>,
}

impl Local {
    fn build(w: &CoxeterMatrix, c: &DiagramComponent) -> Local {
        let k = c.vertices.len();
        let pos = |v: usize| c.vertices.iter().position(|&x| x == v).unwrap();
        let mut adj = vec![Vec::new(); k];
        let mut edges = Vec::new();
        for &(i, j, l) in &c.edges {
            debug_assert!(w.label(i, j) == l);
            let (a, b) = (pos(i), pos(j));
            adj[a].push((b, l));
            adj[b].push((a, l));
            edges.push((a, b, l));
        }
        Local { k, adj, edges }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn leaves(&self) -> Vec<usize> {
        (0..self.k).filter(|&v| self.degree(v) == 1).collect()
    }

    fn branch_vertices(&self) -> Vec<usize> {
        (0..self.k).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Walk from `start` along `next` until a leaf or a branch vertex;
    /// returns the vertex path (excluding `start`) or `None` if a
    /// branch vertex was hit.
    fn arm(&self, start: usize, next: usize) -> Option<Vec<usize>> {
        let mut path = vec![next];
        let mut prev = start;
        let mut cur = next;
        loop {
            match self.degree(cur) {
                1 => return Some(path),
                2 => {
                    let (a, _) = self.adj[cur][0];
                    let (b, _) = self.adj[cur][1];
                    let fwd = if a == prev { b } else { a };
                    path.push(fwd);
                    prev = cur;
                    cur = fwd;
                }
                _ => return None,
            }
        }
    }

    /// Ordered vertices of a path component (`None` if not a path).
    fn path_order(&self) -> Option<Vec<usize>> {
        if self.k == 1 {
            return Some(vec![0]);
        }
        if (0..self.k).any(|v| self.degree(v) > 2) {
            return None;
        }
        let leaves = self.leaves();
        if leaves.len() != 2 {
            return None; // cycle
        }
        let start = *leaves.iter().min().unwrap();
        let mut order = vec![start];
        order.extend(self.arm(start, self.adj[start][0].0)?);
        if order.len() != self.k {
            return None;
        }
        Some(order)
    }

    fn label_of(&self, a: usize, b: usize) -> CoxLabel {
        self.adj[a].iter().find(|&&(v, _)| v == b).map(|&(_, l)| l).unwrap()
    }

    /// Edge labels along an ordered path.
    fn path_labels(&self, order: &[usize]) -> Vec<CoxLabel> {
        order.windows(2).map(|w| self.label_of(w[0], w[1])).collect()
    }
}

const L3: CoxLabel = CoxLabel::Finite(3);
const L4: CoxLabel = CoxLabel::Finite(4);

pub(super) fn classify(w: &CoxeterMatrix, c: &DiagramComponent) -> GroupClass {
    use GroupClass::{Affine, Large, Spherical};
    let g = Local::build(w, c);
    let k = g.k;
    if k == 1 {
        return Spherical(SphericalFamily::A(1));
    }
    if k == 2 {
        return match g.edges[0].2 {
            CoxLabel::Infinite => Affine(AffineFamily::ATilde(1)),
            CoxLabel::Finite(3) => Spherical(SphericalFamily::A(2)),
            CoxLabel::Finite(4) => Spherical(SphericalFamily::B(2)),
            CoxLabel::Finite(p) => Spherical(SphericalFamily::I2(p)),
        };
    }
    let e = g.edges.len();
    if e > k {
        return Large; // two independent cycles match no table entry
    }
    if e == k {
        // One cycle: only the all-3 full cycle is tabulated (Ã_{k−1}).
        let is_atilde =
            (0..k).all(|v| g.degree(v) == 2) && g.edges.iter().all(|&(_, _, l)| l == L3);
        return if is_atilde { Affine(AffineFamily::ATilde(k as u32 - 1)) } else { Large };
    }
    // Tree case from here on.
    let non3: Vec<CoxLabel> =
        g.edges.iter().map(|&(_, _, l)| l).filter(|&l| l != L3).collect();
    let branches = g.branch_vertices();
    match (non3.as_slice(), branches.len()) {
        ([], 0) => {
            // All-3 path.
            Spherical(SphericalFamily::A(k as u32))
        }
        ([], 1) => classify_all3_one_branch(&g, branches[0]),
        ([], 2) => {
            // D̃ shape: two degree-3 vertices, each with exactly two leaf
            // neighbors, joined by a plain path.
            let ok = branches.iter().all(|&b| {
                g.degree(b) == 3
                    && g.adj[b].iter().filter(|&&(v, _)| g.degree(v) == 1).count() == 2
            }) && g.leaves().len() == 4
                && (0..k).all(|v| g.degree(v) <= 3);
            if ok {
                Affine(AffineFamily::DTilde(k as u32 - 1))
            } else {
                Large
            }
        }
        ([l], _) => classify_one_special_label(&g, *l),
        ([a, b], 0) if *a == L4 && *b == L4 => {
            // Path with both non-3 labels equal to 4 at the two ends.
            let order = match g.path_order() {
                Some(o) => o,
                None => return Large,
            };
            let labels = g.path_labels(&order);
            let inner_all3 = labels[1..labels.len() - 1].iter().all(|&l| l == L3);
            if labels[0] == L4 && labels[labels.len() - 1] == L4 && inner_all3 {
                if k == 3 {
                    Affine(AffineFamily::BC2Tilde)
                } else {
                    Affine(AffineFamily::CTilde(k as u32 - 1))
                }
            } else {
                Large
            }
        }
        _ => Large,
    }
}

fn classify_all3_one_branch(g: &Local, b: usize) -> GroupClass {
    use GroupClass::{Affine, Large, Spherical};
    let k = g.k as u32;
    if g.degree(b) == 4 {
        // Only D̃4 (the 4-star) has a degree-4 vertex.
        return if g.k == 5 { Affine(AffineFamily::DTilde(4)) } else { Large };
    }
    if g.degree(b) != 3 {
        return Large;
    }
    let mut arms: Vec<usize> = Vec::new();
    for &(next, _) in &g.adj[b] {
        match g.arm(b, next) {
            Some(path) => arms.push(path.len()),
            None => return Large, // second branch vertex — not handled here
        }
    }
    arms.sort_unstable();
    match (arms[0], arms[1], arms[2]) {
        (1, 1, _) => Spherical(SphericalFamily::D(k)),
        (1, 2, 2) => Spherical(SphericalFamily::E6),
        (1, 2, 3) => Spherical(SphericalFamily::E7),
        (1, 2, 4) => Spherical(SphericalFamily::E8),
        (2, 2, 2) => Affine(AffineFamily::ETilde6),
        (1, 3, 3) => Affine(AffineFamily::ETilde7),
        (1, 2, 5) => Affine(AffineFamily::ETilde8),
        _ => Large,
    }
}

/// Tree with exactly one edge label different from 3.
fn classify_one_special_label(g: &Local, special: CoxLabel) -> GroupClass {
    use GroupClass::{Affine, Large, Spherical};
    let k = g.k as u32;
    if let Some(order) = g.path_order() {
        let labels = g.path_labels(&order);
        let pos = labels.iter().position(|&l| l != L3).unwrap();
        let end = pos == 0 || pos == labels.len() - 1;
        return match special {
            CoxLabel::Finite(4) if end => Spherical(SphericalFamily::B(k)),
            CoxLabel::Finite(4) if g.k == 4 && pos == 1 => Spherical(SphericalFamily::F4),
            CoxLabel::Finite(4) if g.k == 5 && (pos == 1 || pos == 2) => {
                Affine(AffineFamily::FTilde4)
            }
            CoxLabel::Finite(5) if end && g.k == 3 => Spherical(SphericalFamily::H3),
            CoxLabel::Finite(5) if end && g.k == 4 => Spherical(SphericalFamily::H4),
            CoxLabel::Finite(6) if g.k == 3 => Affine(AffineFamily::GTilde2),
            _ => Large,
        };
    }
    // Branched tree: only B̃_n (fork at one end, 4 on the far pendant edge).
    if special != L4 {
        return Large;
    }
    let branches = g.branch_vertices();
    if branches.len() != 1 || g.degree(branches[0]) != 3 {
        return Large;
    }
    let b = branches[0];
    let mut arm_data: Vec<(usize, bool)> = Vec::new(); // (length, has the 4 on its pendant edge)
    for &(next, _) in &g.adj[b] {
        let path = match g.arm(b, next) {
            Some(p) => p,
            None => return Large,
        };
        let mut full = vec![b];
        full.extend(path.iter().copied());
        let labels = g.path_labels(&full);
        let pendant_is4 = *labels.last().unwrap() == L4;
        let rest_all3 = labels[..labels.len() - 1].iter().all(|&l| l == L3);
        if !rest_all3 {
            return Large;
        }
        arm_data.push((path.len(), pendant_is4));
    }
    arm_data.sort_unstable();
    let with4: Vec<&(usize, bool)> = arm_data.iter().filter(|d| d.1).collect();
    let short_arms_plain = arm_data.iter().filter(|d| !d.1).filter(|d| d.0 == 1).count();
    if with4.len() == 1 && short_arms_plain == 2 && with4[0].0 + 3 == g.k {
        Affine(AffineFamily::BTilde(k - 1))
    } else {
        Large
    }
}

/// Builders for every diagram in the spherical and affine tables.
pub mod catalog {
    use super::{AffineFamily, SphericalFamily};
    use crate::coxeter::{CoxLabel, CoxeterMatrix};
    use alloc::vec::Vec;

    fn path(labels: &[u32]) -> CoxeterMatrix {
        let n = labels.len() + 1;
        let edges: Vec<(usize, usize, CoxLabel)> = labels
            .iter()
            .enumerate()
            .map(|(i, &m)| (i, i + 1, CoxLabel::Finite(m)))
            .collect();
        CoxeterMatrix::from_edges(n, &edges).unwrap()
    }

    fn all3_path(n: usize) -> Vec<u32> {
        alloc::vec![3; n]
    }

    /// The diagram of a spherical family. Panics on out-of-range ranks
    /// (A needs n ≥ 1, B n ≥ 2, D n ≥ 4, I2 p ≥ 5).
    pub fn spherical(family: SphericalFamily) -> CoxeterMatrix {
        use SphericalFamily::*;
        match family {
            A(1) => CoxeterMatrix::from_edges(1, &[]).unwrap(),
            A(n) => {
                assert!(n >= 1);
                path(&all3_path(n as usize - 1))
            }
            B(n) => {
                assert!(n >= 2);
                let mut labels = all3_path(n as usize - 1);
                labels[0] = 4;
                path(&labels)
            }
            D(n) => {
                assert!(n >= 4);
                let n = n as usize;
                let mut edges: Vec<(usize, usize, CoxLabel)> = (0..n - 3)
                    .map(|i| (i, i + 1, CoxLabel::Finite(3)))
                    .collect();
                edges.push((n - 3, n - 2, CoxLabel::Finite(3)));
                edges.push((n - 3, n - 1, CoxLabel::Finite(3)));
                CoxeterMatrix::from_edges(n, &edges).unwrap()
            }
            I2(p) => {
                assert!(p >= 5);
                path(&[p])
            }
            H3 => path(&[5, 3]),
            H4 => path(&[5, 3, 3]),
            F4 => path(&[3, 4, 3]),
            E6 => branched(&[2, 2, 1]),
            E7 => branched(&[3, 2, 1]),
            E8 => branched(&[4, 2, 1]),
        }
    }

    /// Star of arms of the given lengths around a central vertex; all labels 3.
    fn branched(arms: &[usize]) -> CoxeterMatrix {
        let n = 1 + arms.iter().sum::<usize>();
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, CoxLabel::Finite(3)));
                prev = next;
                next += 1;
            }
        }
        CoxeterMatrix::from_edges(n, &edges).unwrap()
    }

    /// The diagram of an affine family. Panics on out-of-range indices
    /// (Ã needs k ≥ 1, B̃/C̃ n ≥ 3, D̃ n ≥ 4).
    pub fn affine(family: AffineFamily) -> CoxeterMatrix {
        use AffineFamily::*;
        match family {
            ATilde(1) => {
                CoxeterMatrix::from_edges(2, &[(0, 1, CoxLabel::Infinite)]).unwrap()
            }
            ATilde(k) => {
                assert!(k >= 2);
                let n = k as usize + 1;
                let mut edges: Vec<(usize, usize, CoxLabel)> =
                    (0..n - 1).map(|i| (i, i + 1, CoxLabel::Finite(3))).collect();
                edges.push((0, n - 1, CoxLabel::Finite(3)));
                CoxeterMatrix::from_edges(n, &edges).unwrap()
            }
            BTilde(n) => {
                assert!(n >= 3);
                let n = n as usize;
                // 4-labeled pendant edge at one end, fork at the other.
                let mut edges: Vec<(usize, usize, CoxLabel)> =
                    alloc::vec![(0, 1, CoxLabel::Finite(4))];
                for i in 1..n - 2 {
                    edges.push((i, i + 1, CoxLabel::Finite(3)));
                }
                edges.push((n - 2, n - 1, CoxLabel::Finite(3)));
                edges.push((n - 2, n, CoxLabel::Finite(3)));
                CoxeterMatrix::from_edges(n + 1, &edges).unwrap()
            }
            CTilde(n) => {
                assert!(n >= 3);
                let mut labels = all3_path(n as usize);
                labels[0] = 4;
                *labels.last_mut().unwrap() = 4;
                path(&labels)
            }
            DTilde(n) => {
                assert!(n >= 4);
                let n = n as usize;
                let mut edges: Vec<(usize, usize, CoxLabel)> = alloc::vec![
                    (0, 2, CoxLabel::Finite(3)),
                    (1, 2, CoxLabel::Finite(3)),
                ];
                for i in 2..n - 2 {
                    edges.push((i, i + 1, CoxLabel::Finite(3)));
                }
                edges.push((n - 2, n - 1, CoxLabel::Finite(3)));
                edges.push((n - 2, n, CoxLabel::Finite(3)));
                CoxeterMatrix::from_edges(n + 1, &edges).unwrap()
            }
            BC2Tilde => path(&[4, 4]),
            GTilde2 => path(&[6, 3]),
            FTilde4 => path(&[3, 4, 3, 3]),
            ETilde6 => branched(&[2, 2, 2]),
            ETilde7 => branched(&[3, 3, 1]),
            ETilde8 => branched(&[5, 2, 1]),
        }
    }
}
