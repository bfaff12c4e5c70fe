//! The graph whose vertices are reversal classes `{w, mirror(w)}` of special
//! factors of length `n` and whose edges are reversal classes of `n`-simple
//! paths, and the check that `T(n) = 0` exactly when the graph is a tree
//! after removing loops and every loop is a palindrome.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::factors::FactorIndex;
use crate::identity::Status;
use crate::words::Word;
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct GnVertex {
    /// Lexicographically smaller member of the pair.
    pub label: String,
    pub mirror: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GnEdge {
    pub a: usize,
    pub b: usize,
    /// Smaller member of `{e, mirror(e)}`.
    pub path: String,
    pub is_loop: bool,
    pub palindromic: bool,
    /// Occurrences of `e` or `mirror(e)` in the indexed word.
    pub occurrences: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GnGraph {
    pub n: usize,
    pub vertices: Vec<GnVertex>,
    pub edges: Vec<GnEdge>,
    pub degenerate: bool,
    pub truncated_paths: usize,
}

fn canonical(symbols: &[u8]) -> Vec<u8> {
    let mirrored: Vec<u8> = symbols.iter().rev().copied().collect();
    if mirrored.as_slice() < symbols {
        mirrored
    } else {
        symbols.to_vec()
    }
}

impl GnGraph {
    /// Builds the graph from the factors of the indexed word; needs
    /// `n + 1 <= idx.depth()`.
    pub fn build(idx: &FactorIndex, n: usize) -> Result<Self> {
        let paths = idx.n_simple_paths(n)?;
        let word = idx.word();
        let mut vertex_ids: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
        let mut vertices = Vec::new();
        let mut vertex_of = |w: &Word| -> usize {
            let key = canonical(w.symbols());
            *vertex_ids.entry(key.clone()).or_insert_with(|| {
                let label = w.sibling(key.clone());
                vertices.push(GnVertex { label: label.to_string(), mirror: label.mirror().to_string() });
                vertices.len() - 1
            })
        };
        let report = idx.special_factors(n)?;
        for w in report.right_special.iter().chain(&report.left_special) {
            vertex_of(w);
        }

        let mut edge_ids: HashMap<Vec<u8>, usize> = HashMap::new();
        let mut edges: Vec<GnEdge> = Vec::new();
        for p in &paths.paths {
            let key = canonical(p.word.symbols());
            let a = vertex_of(&p.start(n));
            let b = vertex_of(&p.end(n));
            match edge_ids.get(&key) {
                Some(&slot) => {
                    let e = &mut edges[slot];
                    debug_assert!(e.a.min(e.b) == a.min(b) && e.a.max(e.b) == a.max(b));
                    e.occurrences += p.occurrences;
                }
                None => {
                    let path = word.sibling(key.clone());
                    edge_ids.insert(key, edges.len());
                    edges.push(GnEdge {
                        a: a.min(b),
                        b: a.max(b),
                        palindromic: path.is_palindrome(),
                        path: path.to_string(),
                        is_loop: a == b,
                        occurrences: p.occurrences,
                    });
                }
            }
        }
        Ok(Self { n, degenerate: vertices.is_empty(), vertices, edges, truncated_paths: paths.truncated })
    }

    pub fn loops(&self) -> impl Iterator<Item = &GnEdge> {
        self.edges.iter().filter(|e| e.is_loop)
    }

    /// Connected, `#non-loop edges == #vertices - 1`, and no two vertices
    /// joined twice.
    pub fn is_tree_after_loop_removal(&self) -> bool {
        let v = self.vertices.len();
        if v == 0 {
            return false;
        }
        let proper: Vec<&GnEdge> = self.edges.iter().filter(|e| !e.is_loop).collect();
        let mut pairs = HashSet::new();
        if !proper.iter().all(|e| pairs.insert((e.a, e.b))) || proper.len() != v - 1 {
            return false;
        }
        let mut parent: Vec<usize> = (0..v).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = v;
        for e in proper {
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            if ra != rb {
                parent[ra] = rb;
                components -= 1;
            }
        }
        components == 1
    }

    pub fn all_loops_palindromic(&self) -> bool {
        self.loops().all(|e| e.palindromic)
    }

    /// One edge per line: `vertex_a<TAB>vertex_b<TAB>path<TAB>loop|tree`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let kind = if e.is_loop { "loop" } else { "tree" };
            let _ = writeln!(out, "{}\t{}\t{}\t{kind}", self.vertices[e.a].label, self.vertices[e.b].label, e.path);
        }
        out
    }

    /// Graphviz description of the undirected multigraph.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph G{} {{\n", self.n);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", v.label);
        }
        for e in &self.edges {
            let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.a, e.b, e.path);
        }
        out.push_str("}\n");
        out
    }

    pub fn check(&self, t_value: i64) -> GnCheckReport {
        let tree = self.is_tree_after_loop_removal();
        let loops = self.all_loops_palindromic();
        let (status, reason) = if self.degenerate {
            (Status::Inapplicable, Some("no special factors of this length".to_string()))
        } else if (t_value == 0) == (tree && loops) {
            (Status::Pass, None)
        } else {
            (Status::Fail, None)
        };
        GnCheckReport {
            n: self.n,
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            loops: self.loops().count(),
            is_tree_after_loop_removal: tree,
            all_loops_palindromic: loops,
            t_value,
            equivalence_pass: status == Status::Pass,
            status,
            truncated_paths: self.truncated_paths,
            reason,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GnCheckReport {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub loops: usize,
    pub is_tree_after_loop_removal: bool,
    pub all_loops_palindromic: bool,
    pub t_value: i64,
    pub equivalence_pass: bool,
    pub status: Status,
    pub truncated_paths: usize,
    pub reason: Option<String>,
}

pub fn build_gn(idx: &FactorIndex, n: usize) -> Result<GnGraph> {
    GnGraph::build(idx, n)
}

pub fn check_gn(graph: &GnGraph, t_value: i64) -> GnCheckReport {
    graph.check(t_value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::PrefixAnalysis;
    use crate::words::WordSource;

    #[test]
    fn fibonacci_single_vertex_with_palindromic_loops() {
        let fib = WordSource::fibonacci().prefix(2000).unwrap();
        let idx = FactorIndex::build(&fib, 12).unwrap();
        let a = PrefixAnalysis::new(&fib);
        for n in 1..=10 {
            let g = GnGraph::build(&idx, n).unwrap();
            assert_eq!(g.vertices.len(), 1, "n = {n}");
            assert!(g.edges.iter().all(|e| e.is_loop && e.palindromic));
            let r = g.check(a.t(n));
            assert!(r.equivalence_pass && r.status == Status::Pass);
        }
    }

    #[test]
    fn unary_is_degenerate() {
        let w = Word::from_text("aaaaaaa").unwrap();
        let g = GnGraph::build(&FactorIndex::build(&w, 4).unwrap(), 2).unwrap();
        assert!(g.degenerate);
        assert_eq!(g.check(0).status, Status::Inapplicable);
    }

    #[test]
    fn thue_morse_equivalence() {
        let tm = WordSource::thue_morse().prefix(4096).unwrap();
        let idx = FactorIndex::build(&tm, 14).unwrap();
        let a = PrefixAnalysis::new(&tm);
        let g = GnGraph::build(&idx, 3).unwrap();
        assert_eq!((g.vertices.len(), a.t(3)), (4, 2));
        assert!(!g.is_tree_after_loop_removal());
        for n in 1..=12 {
            let r = GnGraph::build(&idx, n).unwrap().check(a.t(n));
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }

    #[test]
    fn exports() {
        let fib = WordSource::fibonacci().prefix(200).unwrap();
        let g = GnGraph::build(&FactorIndex::build(&fib, 4).unwrap(), 1).unwrap();
        let tsv = g.to_tsv();
        assert!(tsv.lines().all(|l| l.split('\t').count() == 4));
        assert!(tsv.contains("\tloop"));
        assert!(g.to_dot().starts_with("graph G1 {"));
    }
}
