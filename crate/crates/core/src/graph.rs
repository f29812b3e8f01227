//! Simple graphs, their blocks, and regularity of the point sets
//! parameterized by their edges.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::ffvanish::{enumerate_parameterized, regularity_points, PointSet, PrimeField};
use crate::gb::{buchberger, colon_by_monomial, ideal_equal, saturate_all, toric_ideal_monomial_map, BinomialIdeal};
use crate::hilbert::{ideal_hilbert, HilbertFunctionTable};
use crate::ring::{Binomial, ExponentVector, Grading};

/// Simple graph on vertices `0..n`; edges are stored as sorted pairs `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = BTreeSet::new();
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::invalid(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {a}")));
            }
            if !out.insert((a.min(b), a.max(b))) {
                return Err(Error::invalid(format!("repeated edge ({a}, {b})")));
            }
        }
        Ok(Graph { n, edges: out.into_iter().collect() })
    }

    /// Same as [`Graph::new`] with vertices numbered from 1.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let shifted = edges
            .iter()
            .map(|&(a, b)| match (a.checked_sub(1), b.checked_sub(1)) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(Error::invalid("vertices are numbered from 1")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, &shifted)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        adj
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        let adj = self.adjacency();
        (0..self.n).filter(|&v| adj[v].is_empty()).collect()
    }

    /// Component label per vertex, numbered in order of lowest vertex.
    fn components(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut label = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(v, _) in &adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn num_components(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.num_components() <= 1
    }

    /// A forest has `|E| = n - c`.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.num_components() == self.n
    }

    /// Subgraph on the given edges with its vertices renumbered in
    /// increasing order.
    pub fn edge_subgraph(&self, edges: &[(usize, usize)]) -> Result<Graph> {
        let verts: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        let index: Vec<usize> = verts.iter().copied().collect();
        let pos = |v: usize| index.binary_search(&v).expect("vertex of the subgraph");
        let relabeled: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (pos(a), pos(b))).collect();
        Graph::new(index.len(), &relabeled)
    }
}

/// `e_i + e_j` for every edge, in edge order.
pub fn characteristic_vectors(g: &Graph) -> Vec<Vec<u32>> {
    g.edges
        .iter()
        .map(|&(a, b)| {
            let mut v = vec![0u32; g.n];
            v[a] = 1;
            v[b] = 1;
            v
        })
        .collect()
}

/// Two-colouring with the lowest vertex of each component in the first
/// class, or `None` if there is an odd cycle.
pub fn bipartition(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let adj = g.adjacency();
    let mut colour = vec![None; g.n];
    for start in 0..g.n {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("coloured");
            for &(v, _) in &adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut v1, mut v2) = (Vec::new(), Vec::new());
    for (v, c) in colour.into_iter().enumerate() {
        if c == Some(false) {
            v1.push(v);
        } else {
            v2.push(v);
        }
    }
    Some((v1, v2))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge sets of the blocks, each sorted, ordered by first edge.
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub cutvertices: Vec<usize>,
    pub isolated: Vec<usize>,
}

struct BlockSearch<'a> {
    adj: &'a [Vec<(usize, usize)>],
    edges: &'a [(usize, usize)],
    disc: Vec<Option<usize>>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<usize>,
    blocks: Vec<Vec<(usize, usize)>>,
    cut: BTreeSet<usize>,
}

impl BlockSearch<'_> {
    fn visit(&mut self, u: usize, parent_edge: Option<usize>) {
        self.disc[u] = Some(self.time);
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for &(v, e) in &self.adj[u] {
            if Some(e) == parent_edge {
                continue;
            }
            match self.disc[v] {
                None => {
                    children += 1;
                    self.stack.push(e);
                    self.visit(v, Some(e));
                    self.low[u] = self.low[u].min(self.low[v]);
                    let du = self.disc[u].expect("visited");
                    if self.low[v] >= du {
                        let mut block = Vec::new();
                        while let Some(f) = self.stack.pop() {
                            block.push(self.edges[f]);
                            if f == e {
                                break;
                            }
                        }
                        block.sort_unstable();
                        self.blocks.push(block);
                        if parent_edge.is_some() || children > 1 {
                            self.cut.insert(u);
                        }
                    }
                }
                Some(dv) if dv < self.disc[u].expect("visited") => {
                    self.stack.push(e);
                    self.low[u] = self.low[u].min(dv);
                }
                Some(_) => {}
            }
        }
    }
}

/// Blocks (maximal subgraphs without cutvertices) by depth-first low-link.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let adj = g.adjacency();
    let mut search = BlockSearch {
        adj: &adj,
        edges: &g.edges,
        disc: vec![None; g.n],
        low: vec![0; g.n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cut: BTreeSet::new(),
    };
    for (v, nbrs) in adj.iter().enumerate() {
        if search.disc[v].is_none() && !nbrs.is_empty() {
            search.visit(v, None);
        }
    }
    let mut blocks = search.blocks;
    blocks.sort();
    BlockDecomposition { blocks, cutvertices: search.cut.into_iter().collect(), isolated: g.isolated_vertices() }
}

/// Point set parameterized by the edge monomials `x_i x_j`.
pub fn edge_point_set(g: &Graph, field: &PrimeField) -> Result<PointSet> {
    if g.edges.is_empty() {
        return Err(Error::invalid("graph has no edges"));
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::invalid(format!("vertex {v} is isolated")));
    }
    enumerate_parameterized(field, &characteristic_vectors(g))
}

fn require_bipartite(g: &Graph) -> Result<(Vec<usize>, Vec<usize>)> {
    bipartition(g).ok_or_else(|| Error::Precondition("graph is not bipartite".into()))
}

/// Regularity of the edge point set as the sum over blocks plus
/// `(q - 2)(c - 1)`.
pub fn reg_bipartite_blocks(g: &Graph, field: &PrimeField) -> Result<i64> {
    require_bipartite(g)?;
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::invalid(format!("vertex {v} is isolated")));
    }
    let dec = blocks(g);
    let mut total = 0i64;
    for block in &dec.blocks {
        let sub = g.edge_subgraph(block)?;
        total += regularity_points(&edge_point_set(&sub, field)?)? as i64;
    }
    let c = dec.blocks.len() as i64;
    Ok(total + (field.p() as i64 - 2) * (c - 1))
}

/// `((|V_1| - 1)(q - 2), (|V_1| + |V_2| - 2)(q - 2))` with `|V_1| ≥ |V_2|`.
pub fn reg_bounds_bipartite(g: &Graph, field: &PrimeField) -> Result<(i64, i64)> {
    let (a, b) = require_bipartite(g)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let v1 = a.len().max(b.len()) as i64;
    let v2 = a.len().min(b.len()) as i64;
    let q2 = field.p() as i64 - 2;
    Ok(((v1 - 1) * q2, (v1 + v2 - 2) * q2))
}

/// Intermediate data of [`reg_colon_method`].
#[derive(Debug, Clone)]
pub struct ColonCertificate {
    pub regularity: i64,
    /// `N` with `t^a = (t_1 ⋯ t_s)^N`.
    pub power: u32,
    pub degree_a: usize,
    pub i0: usize,
    pub num_points: u64,
    pub table_i: Vec<u64>,
    pub table_q: Vec<u64>,
}

/// `I = P + (t_i^{q-1} - t_j^{q-1})` for the toric ideal `P` of the edge
/// monomials.
pub fn edge_binomial_ideal(g: &Graph, q: u64) -> Result<BinomialIdeal> {
    let vs = characteristic_vectors(g);
    let s = vs.len();
    let p = toric_ideal_monomial_map(&vs, true)?;
    let e = u32::try_from(q - 1).map_err(|_| Error::Overflow)?;
    let mut gens: Vec<Binomial> = p.generators().to_vec();
    for i in 0..s {
        for j in i + 1..s {
            gens.push(Binomial::new(ExponentVector::var_power(s, i, e), ExponentVector::var_power(s, j, e))?);
        }
    }
    BinomialIdeal::new(s, gens, Some(Grading::standard(s)))
}

/// Regularity through the exact sequence
/// `0 → S/I(X)[-|a|] → S/I → S/(I + (t^a)) → 0`.
pub fn reg_colon_method(g: &Graph, field: &PrimeField) -> Result<i64> {
    Ok(reg_colon_certificate(g, field)?.regularity)
}

const MAX_POWER: u32 = 64;

pub fn reg_colon_certificate(g: &Graph, field: &PrimeField) -> Result<ColonCertificate> {
    require_bipartite(g)?;
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::invalid(format!("vertex {v} is isolated")));
    }
    if g.is_forest() {
        return Err(Error::Precondition("graph is a forest".into()));
    }
    let s = g.edges.len();
    let std = Grading::standard(s);
    let i = edge_binomial_ideal(g, field.p())?;
    let order = i.default_order();
    let ix = saturate_all(&i)?;

    let mut power = 1;
    let (q_ideal, a) = loop {
        if power > MAX_POWER {
            return Err(Error::NotFound(format!("no power of t_1⋯t_s up to {MAX_POWER} works")));
        }
        let a = ExponentVector::new(vec![power; s]);
        let q_ideal = i.clone().with_monomials(vec![a.clone()])?;
        let m_primary = buchberger(&q_ideal, &order)?.has_finite_colength();
        if m_primary && ideal_equal(&colon_by_monomial(&i, &a)?, &ix, &order)? {
            break (q_ideal, a);
        }
        power += 1;
    };
    let deg_a = a.total_degree() as usize;

    let fi = ideal_hilbert(&i, &order, &std)?;
    let fq = ideal_hilbert(&q_ideal, &order, &std)?;
    let probe = HilbertFunctionTable::from_series(&fi, 0)?;
    let stable = probe.stable_from.unwrap_or(0);
    let mut len = deg_a.max(stable) + s + 2;
    loop {
        let ti = HilbertFunctionTable::from_series(&fi, len)?;
        let tq = HilbertFunctionTable::from_series(&fq, len)?;
        let num_points = ti.values[stable.min(len)];
        let hit = (deg_a..=len).find(|&k| ti.values[k] - tq.values[k] == num_points);
        if let Some(i0) = hit {
            return Ok(ColonCertificate {
                regularity: (i0 - deg_a) as i64,
                power,
                degree_a: deg_a,
                i0,
                num_points,
                table_i: ti.values,
                table_q: tq.values,
            });
        }
        len *= 2;
    }
}
