//! Ext¹-quivers of blocks and the leaf-based Ringel self-duality test.
//!
//! `Ext¹` between simples of any `O_λ^μ` reduces to the regular block, where it
//! is given by the Kazhdan-Lusztig μ-function. Directions are dropped.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::blocks::BlockDescriptor;
use crate::coxeter::WeylElement;
use crate::error::{Error, Result};
use crate::klpoly::KLTable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverVertex {
    pub word: Vec<usize>,
    pub length: usize,
}

/// Undirected edge between vertex positions `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuiverEdge {
    pub a: usize,
    pub b: usize,
    pub mult: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverGraph {
    pub vertices: Vec<QuiverVertex>,
    pub edges: Vec<QuiverEdge>,
}

/// `dim Ext¹(L(x), L(y))` in `O_0`.
pub fn ext1_dim(table: &KLTable, x: &WeylElement, y: &WeylElement) -> Result<u64> {
    if x == y {
        return Ok(0);
    }
    table.mu(x, y)
}

/// Vertices are `X_λ^μ` in canonical order; edge multiplicities are `ext1_dim`.
pub fn block_quiver(block: &BlockDescriptor, table: &KLTable) -> Result<QuiverGraph> {
    if **table.cartan() != **block.cartan() {
        return Err(Error::MixedRootSystems);
    }
    let set = block.simple_index_set()?;
    let c = block.cartan();
    let vertices = set.elements.iter().map(|x| QuiverVertex { word: c.reduced_word(x), length: x.length() }).collect();
    let mut edges = Vec::new();
    for (a, x) in set.elements.iter().enumerate() {
        for (b, y) in set.elements.iter().enumerate().skip(a + 1) {
            let mult = ext1_dim(table, x, y)?;
            if mult > 0 {
                edges.push(QuiverEdge { a, b, mult });
            }
        }
    }
    Ok(QuiverGraph { vertices, edges })
}

impl QuiverGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn adjacency(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let mut m = vec![vec![0; n]; n];
        for e in &self.edges {
            m[e.a][e.b] += e.mult;
            m[e.b][e.a] += e.mult;
        }
        m
    }

    /// Sum of incident edge multiplicities.
    pub fn degree(&self, v: usize) -> u64 {
        self.edges.iter().filter(|e| e.a == v || e.b == v).map(|e| e.mult).sum()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Edges as unordered pairs of reduced words.
    pub fn edge_words(&self) -> Vec<(Vec<usize>, Vec<usize>, u64)> {
        self.edges
            .iter()
            .map(|e| (self.vertices[e.a].word.clone(), self.vertices[e.b].word.clone(), e.mult))
            .collect()
    }

    /// Graph isomorphism by backtracking; with `respect_length` vertices must keep their lengths.
    pub fn is_isomorphic(&self, other: &QuiverGraph, respect_length: bool) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        let (a, b) = (self.adjacency(), other.adjacency());
        let label = |g: &QuiverGraph, adj: &[Vec<u64>], v: usize| {
            let mut row = adj[v].clone();
            row.sort_unstable();
            (if respect_length { g.vertices[v].length } else { 0 }, row)
        };
        let la: Vec<_> = (0..n).map(|v| label(self, &a, v)).collect();
        let lb: Vec<_> = (0..n).map(|v| label(other, &b, v)).collect();
        let mut sa = la.clone();
        let mut sb = lb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        extend(0, &a, &b, &la, &lb, &mut map, &mut used)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph quiver {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let name = if v.word.is_empty() {
                "e".to_string()
            } else {
                v.word.iter().map(|s| format!("s{s}")).collect::<String>()
            };
            let _ = writeln!(out, "  v{i} [label=\"{name}\", length={}];", v.length);
        }
        for e in &self.edges {
            if e.mult == 1 {
                let _ = writeln!(out, "  v{} -- v{};", e.a, e.b);
            } else {
                let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.a, e.b, e.mult);
            }
        }
        out.push_str("}\n");
        out
    }
}

type Label = (usize, Vec<u64>);

fn extend(
    v: usize,
    a: &[Vec<u64>],
    b: &[Vec<u64>],
    la: &[Label],
    lb: &[Label],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == a.len() {
        return true;
    }
    for w in 0..b.len() {
        if used[w] || la[v] != lb[w] {
            continue;
        }
        if (0..v).all(|u| a[v][u] == b[w][map[u]]) {
            map[v] = w;
            used[w] = true;
            if extend(v + 1, a, b, la, lb, map, used) {
                return true;
            }
            used[w] = false;
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    NotEquivalent,
    TriviallySelfDual,
    Inconclusive,
}

/// A degree-one vertex with its Bruhat position in `X_λ^μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafFlags {
    pub vertex: usize,
    pub word: Vec<usize>,
    /// Bruhat-maximal, so the standard module is simple.
    pub simple_standard: bool,
    pub bruhat_minimal: bool,
}

#[derive(Clone, Debug)]
pub struct SelfDualityReport {
    pub block: BlockDescriptor,
    pub dual: BlockDescriptor,
    pub quiver: QuiverGraph,
    pub dual_quiver: QuiverGraph,
    pub leaves: Vec<LeafFlags>,
    pub dual_leaves: Vec<LeafFlags>,
    pub verdict: Verdict,
}

fn leaf_flags(block: &BlockDescriptor, q: &QuiverGraph) -> Result<Vec<LeafFlags>> {
    let set = block.simple_index_set()?;
    let c = block.cartan();
    let mut out = Vec::new();
    for v in q.leaves() {
        let x = &set.elements[v];
        let mut max = true;
        let mut min = true;
        for y in set.elements.iter().filter(|y| *y != x) {
            max &= !c.bruhat_leq(x, y)?;
            min &= !c.bruhat_leq(y, x)?;
        }
        out.push(LeafFlags { vertex: v, word: q.vertices[v].word.clone(), simple_standard: max, bruhat_minimal: min });
    }
    Ok(out)
}

/// Compare a block with its Ringel dual. A block whose unique leaf carries a
/// simple standard module cannot be equivalent to one whose unique leaf does
/// not: that leaf's projective cover is injective in one and not the other.
pub fn self_duality_analysis(block: &BlockDescriptor, table: &KLTable) -> Result<SelfDualityReport> {
    let dual = block.ringel_dual_block()?.block;
    let quiver = block_quiver(block, table)?;
    let dual_quiver = block_quiver(&dual, table)?;
    let leaves = leaf_flags(block, &quiver)?;
    let dual_leaves = leaf_flags(&dual, &dual_quiver)?;
    let verdict = if dual == *block {
        Verdict::TriviallySelfDual
    } else if leaves.len() == 1
        && dual_leaves.len() == 1
        && leaves[0].simple_standard != dual_leaves[0].simple_standard
    {
        Verdict::NotEquivalent
    } else {
        Verdict::Inconclusive
    };
    Ok(SelfDualityReport { block: block.clone(), dual, quiver, dual_quiver, leaves, dual_leaves, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CartanDatum, ParabolicSubset};
    use std::collections::BTreeSet;
    use std::sync::Arc;

    fn setup(spec: &str, lambda: &[usize], mu: &[usize]) -> (KLTable, BlockDescriptor) {
        let c = Arc::new(CartanDatum::parse(spec).unwrap());
        let t = KLTable::new(c.clone()).unwrap();
        let b = BlockDescriptor::new(c, ParabolicSubset::new(lambda.iter().copied()), ParabolicSubset::new(mu.iter().copied()))
            .unwrap();
        (t, b)
    }

    fn edge_set(q: &QuiverGraph) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
        q.edge_words().into_iter().map(|(a, b, _)| if a < b { (a, b) } else { (b, a) }).collect()
    }

    #[test]
    fn a1_principal_block() {
        let (t, b) = setup("A1", &[], &[]);
        let q = block_quiver(&b, &t).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(q.edges, vec![QuiverEdge { a: 0, b: 1, mult: 1 }]);
    }

    #[test]
    fn a2_principal_block_is_bruhat_hasse_diagram() {
        let (t, b) = setup("A2", &[], &[]);
        let q = block_quiver(&b, &t).unwrap();
        assert_eq!(q.edges.len(), 8);
        assert!(q.edges.iter().all(|e| q.vertices[e.b].length == q.vertices[e.a].length + 1));
    }

    #[test]
    fn counterexample_quivers() {
        let (t, b) = setup("A3", &[3], &[1]);
        let q = block_quiver(&b, &t).unwrap();
        let c = b.cartan().clone();
        let w = |v: &[usize]| c.reduced_word(&c.from_word(v).unwrap());
        let expected: BTreeSet<_> = [
            (w(&[2, 3]), w(&[3])),
            (w(&[2, 1, 3]), w(&[2, 3])),
            (w(&[2, 3]), w(&[3, 2, 3])),
            (w(&[2, 1, 3]), w(&[3, 2, 1, 3])),
            (w(&[3, 2, 1, 3]), w(&[3, 2, 3])),
        ]
        .into_iter()
        .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
        assert_eq!(edge_set(&q), expected);

        let r = self_duality_analysis(&b, &t).unwrap();
        assert_eq!(r.verdict, Verdict::NotEquivalent);
        assert!(q.is_isomorphic(&r.dual_quiver, false));
        assert!(!q.is_isomorphic(&r.dual_quiver, true));
        assert_eq!(r.leaves.len(), 1);
        assert!(r.leaves[0].bruhat_minimal && !r.leaves[0].simple_standard);
        assert!(r.dual_leaves[0].simple_standard);
    }

    #[test]
    fn regular_blocks_are_trivially_self_dual() {
        let (t, b) = setup("A2", &[1], &[]);
        assert_eq!(self_duality_analysis(&b, &t).unwrap().verdict, Verdict::TriviallySelfDual);
        let (t, b) = setup("B2", &[], &[1]);
        assert_eq!(self_duality_analysis(&b, &t).unwrap().verdict, Verdict::TriviallySelfDual);
    }

    #[test]
    fn dot_export() {
        let (t, b) = setup("A1", &[], &[]);
        let dot = block_quiver(&b, &t).unwrap().to_dot();
        assert!(dot.contains("v0 -- v1;"));
        assert!(dot.contains("label=\"s1\""));
    }
}
