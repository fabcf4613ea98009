//! Small simple graphs and brute-force isomorphism.

use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    adj: Vec<Vec<bool>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph {
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Ignores self-loops; the graph stays simple.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.adj[a][b] = true;
            self.adj[b][a] = true;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&x| x).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.adj[a][b])
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertex bijection `self -> other` preserving adjacency, if any.
    /// Backtracking over degree-compatible candidates.
    pub fn isomorphism(&self, other: &SimpleGraph) -> Option<Vec<usize>> {
        let n = self.vertex_count();
        if n != other.vertex_count()
            || self.edge_count() != other.edge_count()
            || self.degree_sequence() != other.degree_sequence()
        {
            return None;
        }
        // map high-degree vertices first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut image = vec![usize::MAX; n];
        let mut taken = vec![false; n];

        fn go(
            k: usize,
            order: &[usize],
            g: &SimpleGraph,
            h: &SimpleGraph,
            image: &mut [usize],
            taken: &mut [bool],
        ) -> bool {
            if k == order.len() {
                return true;
            }
            let v = order[k];
            for c in 0..h.vertex_count() {
                if taken[c] || g.degree(v) != h.degree(c) {
                    continue;
                }
                let fits = order[..k].iter().all(|&w| g.adjacent(v, w) == h.adjacent(c, image[w]));
                if !fits {
                    continue;
                }
                image[v] = c;
                taken[c] = true;
                if go(k + 1, order, g, h, image, taken) {
                    return true;
                }
                taken[c] = false;
            }
            false
        }

        go(0, &order, self, other, &mut image, &mut taken).then_some(image)
    }

    pub fn is_isomorphic(&self, other: &SimpleGraph) -> bool {
        self.isomorphism(other).is_some()
    }

    /// Parses an adjacency list, one `u: v w ...` line per vertex. Vertex
    /// names are arbitrary tokens, numbered by first appearance. Blank
    /// lines and `#` comments are skipped.
    pub fn parse_adjacency(text: &str) -> Result<(SimpleGraph, Vec<String>), String> {
        let mut names: BTreeMap<String, usize> = BTreeMap::new();
        let mut order: Vec<String> = Vec::new();
        let mut pairs = Vec::new();
        let id = |name: &str, names: &mut BTreeMap<String, usize>, order: &mut Vec<String>| {
            *names.entry(name.to_string()).or_insert_with(|| {
                order.push(name.to_string());
                order.len() - 1
            })
        };
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (head, rest) = line
                .split_once(':')
                .ok_or_else(|| format!("line {}: expected `u: v w ...`", lineno + 1))?;
            let head = head.trim();
            if head.is_empty() || head.contains(char::is_whitespace) {
                return Err(format!("line {}: bad vertex name `{head}`", lineno + 1));
            }
            let u = id(head, &mut names, &mut order);
            for tok in rest.split_whitespace() {
                let v = id(tok, &mut names, &mut order);
                if u == v {
                    return Err(format!("line {}: self-loop on `{head}`", lineno + 1));
                }
                pairs.push((u, v));
            }
        }
        Ok((SimpleGraph::from_edges(order.len(), &pairs), order))
    }

    /// Wheel: a cycle on `rim` vertices plus a hub (vertex `rim`) joined to all.
    pub fn wheel(rim: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(rim + 1);
        for i in 0..rim {
            g.add_edge(i, (i + 1) % rim);
            g.add_edge(i, rim);
        }
        g
    }
}
