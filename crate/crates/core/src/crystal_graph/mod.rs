//! Explicit crystal graphs over finite vertex sets, with the twisted
//! operators, highest/lowest weight tests, the rank function, isomorphism
//! search and DOT/JSON export.

mod twisted;

use std::collections::{HashMap, VecDeque};
use std::fmt::{Display, Write as _};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::words::{index_set, Crystal, CrystalIndex, Flavor, Weight};

pub use twisted::{
    apply_sigmas, e0_bracket, e_bar_prime, f0_bracket, f_bar_prime, is_highest, is_lowest, sigma,
    sigma_w0, sigma_w0_inverse, twisted_e_bar, twisted_f_bar,
};

/// A labeled digraph with an edge `b -i-> c` whenever `f_i(b) = c`.
/// Vertices are addressed by their position in [`CrystalGraph::vertices`].
#[derive(Clone, Debug)]
pub struct CrystalGraph<V> {
    n: usize,
    flavor: Flavor,
    vertices: Vec<V>,
    lookup: HashMap<V, usize>,
    weights: Vec<Weight>,
    labels: Vec<CrystalIndex>,
    down: Vec<Vec<Option<usize>>>,
    up: Vec<Vec<Option<usize>>>,
}

/// Materializes every edge among `elements` for the flavor's operators.
/// Fails if an operator leaves the set.
pub fn build_graph<C: Crystal>(
    crystal: &C,
    elements: Vec<C::Elem>,
    flavor: Flavor,
) -> Result<CrystalGraph<C::Elem>> {
    let n = crystal.rank();
    let labels = index_set(flavor, n);
    let mut lookup = HashMap::with_capacity(elements.len());
    for (k, v) in elements.iter().enumerate() {
        lookup.entry(v.clone()).or_insert(k);
    }
    if lookup.len() != elements.len() {
        return Err(Error::Invariant("duplicate vertices".to_string()));
    }
    let find = |x: Option<C::Elem>, from: &C::Elem, i: CrystalIndex| -> Result<Option<usize>> {
        match x {
            None => Ok(None),
            Some(y) => lookup
                .get(&y)
                .copied()
                .map(Some)
                .ok_or_else(|| Error::NotClosed(format!("{i} maps {from:?} to {y:?}"))),
        }
    };
    let mut down = Vec::with_capacity(labels.len());
    let mut up = Vec::with_capacity(labels.len());
    for &i in &labels {
        let mut d = Vec::with_capacity(elements.len());
        let mut u = Vec::with_capacity(elements.len());
        for v in &elements {
            d.push(find(crystal.lower(v, i), v, i)?);
            u.push(find(crystal.raise(v, i), v, i)?);
        }
        down.push(d);
        up.push(u);
    }
    let weights = elements.iter().map(|v| crystal.weight(v)).collect();
    Ok(CrystalGraph {
        n,
        flavor,
        vertices: elements,
        lookup,
        weights,
        labels,
        down,
        up,
    })
}

/// The connected component generated by `seeds` under all operators.
pub fn closure<C: Crystal>(
    crystal: &C,
    seeds: Vec<C::Elem>,
    flavor: Flavor,
) -> Result<CrystalGraph<C::Elem>> {
    let labels = index_set(flavor, crystal.rank());
    let mut seen: HashMap<C::Elem, ()> = HashMap::new();
    let mut order = Vec::new();
    let mut queue: VecDeque<C::Elem> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone(), ()).is_none() {
            order.push(s.clone());
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &i in &labels {
            for w in [crystal.lower(&v, i), crystal.raise(&v, i)]
                .into_iter()
                .flatten()
            {
                if seen.insert(w.clone(), ()).is_none() {
                    order.push(w.clone());
                    queue.push_back(w);
                }
            }
        }
    }
    build_graph(crystal, order, flavor)
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    label: String,
    wt: Vec<u32>,
}

#[derive(Serialize)]
struct JsonEdge {
    src: usize,
    lbl: String,
    dst: usize,
}

#[derive(Serialize)]
struct JsonGraph {
    vertices: Vec<JsonVertex>,
    edges: Vec<JsonEdge>,
}

fn edge_style(i: CrystalIndex) -> &'static str {
    match i {
        CrystalIndex::Std(1) => "color=blue, style=solid",
        CrystalIndex::Std(2) => "color=red, style=solid",
        CrystalIndex::Std(3) => "color=orange, style=solid",
        CrystalIndex::Std(4) => "color=purple, style=solid",
        CrystalIndex::Std(_) => "color=black, style=solid",
        CrystalIndex::Zero => "color=green, style=dotted",
        CrystalIndex::Bar1 => "color=blue, style=dashed",
    }
}

impl<V: Clone + Eq + Hash> CrystalGraph<V> {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &V {
        &self.vertices[id]
    }

    pub fn id_of(&self, v: &V) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn weight_of(&self, id: usize) -> &Weight {
        &self.weights[id]
    }

    pub fn labels(&self) -> &[CrystalIndex] {
        &self.labels
    }

    fn label_pos(&self, i: CrystalIndex) -> Option<usize> {
        self.labels.iter().position(|&l| l == i)
    }

    /// All edges `(source, label, target)` in vertex order, then label order.
    pub fn edges(&self) -> Vec<(usize, CrystalIndex, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for (k, &i) in self.labels.iter().enumerate() {
                if let Some(w) = self.down[k][v] {
                    out.push((v, i, w));
                }
            }
        }
        out
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.labels.len()).flat_map(move |k| self.down[k][v].into_iter().chain(self.up[k][v]))
    }

    /// Component id of every vertex; components are numbered by their
    /// smallest vertex.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.len()];
        let mut next = 0;
        for start in 0..self.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            comp[start] = next;
            while let Some(v) = queue.pop_front() {
                for w in self.neighbours(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let ids = self.component_ids();
        let count = ids.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); count];
        for (v, &c) in ids.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// The component containing `v`.
    pub fn connected_component(&self, v: usize) -> Vec<usize> {
        let ids = self.component_ids();
        (0..self.len()).filter(|&w| ids[w] == ids[v]).collect()
    }

    pub fn highest_vertices(&self, flavor: Flavor) -> Vec<usize> {
        (0..self.len())
            .filter(|v| is_highest(self, v, flavor))
            .collect()
    }

    pub fn lowest_vertices(&self, flavor: Flavor) -> Vec<usize> {
        (0..self.len())
            .filter(|v| is_lowest(self, v, flavor))
            .collect()
    }

    /// A function increasing by one along every edge, zero at the minimum of
    /// each component. Fails if no such function exists.
    pub fn rank_function(&self) -> Result<Vec<usize>> {
        let mut rank: Vec<Option<i64>> = vec![None; self.len()];
        for comp in self.components() {
            let start = comp[0];
            rank[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let r = rank[v].expect("visited");
                for k in 0..self.labels.len() {
                    let moves = [(self.down[k][v], r + 1), (self.up[k][v], r - 1)];
                    for (w, target) in moves {
                        let Some(w) = w else { continue };
                        match rank[w] {
                            None => {
                                rank[w] = Some(target);
                                queue.push_back(w);
                            }
                            Some(x) if x != target => {
                                return Err(Error::NotNormal(format!(
                                    "inconsistent rank at vertex {w}"
                                )));
                            }
                            Some(_) => {}
                        }
                    }
                }
            }
            let min = comp
                .iter()
                .map(|&v| rank[v].expect("visited"))
                .min()
                .unwrap_or(0);
            for &v in &comp {
                rank[v] = rank[v].map(|x| x - min);
            }
        }
        Ok(rank
            .into_iter()
            .map(|r| r.expect("visited") as usize)
            .collect())
    }

    pub fn to_dot(&self) -> String
    where
        V: Display,
    {
        let mut out =
            String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (k, v) in self.vertices.iter().enumerate() {
            let label = v.to_string().replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  v{k} [label=\"{label}\"];");
        }
        for (s, i, t) in self.edges() {
            let _ = writeln!(
                out,
                "  v{s} -> v{t} [label=\"{}\", {}];",
                i.label(),
                edge_style(i)
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value
    where
        V: Display,
    {
        let graph = JsonGraph {
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| JsonVertex {
                    id,
                    label: v.to_string(),
                    wt: self.weights[id].0.clone(),
                })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(src, i, dst)| JsonEdge {
                    src,
                    lbl: i.label(),
                    dst,
                })
                .collect(),
        };
        serde_json::to_value(graph).expect("graph serializes")
    }
}

impl<V: Clone + Eq + Hash> Crystal for CrystalGraph<V> {
    type Elem = usize;

    fn rank(&self) -> usize {
        self.n
    }

    fn weight(&self, b: &usize) -> Weight {
        self.weights[*b].clone()
    }

    fn raise(&self, b: &usize, i: CrystalIndex) -> Option<usize> {
        self.up[self.label_pos(i)?][*b]
    }

    fn lower(&self, b: &usize, i: CrystalIndex) -> Option<usize> {
        self.down[self.label_pos(i)?][*b]
    }
}

/// The unique label- and weight-preserving bijection from the component of
/// `a` in `g1` onto the component of `b` in `g2`, sending the highest weight
/// vertex to the highest weight vertex; `None` if there is none.
/// Pairs are listed as `(vertex of g1, vertex of g2)` sorted by the first.
pub fn find_isomorphism<V: Clone + Eq + Hash, W: Clone + Eq + Hash>(
    g1: &CrystalGraph<V>,
    a: usize,
    g2: &CrystalGraph<W>,
    b: usize,
) -> Option<Vec<(usize, usize)>> {
    if g1.labels != g2.labels {
        return None;
    }
    let flavor = g1.flavor;
    let c1 = g1.connected_component(a);
    let c2 = g2.connected_component(b);
    if c1.len() != c2.len() {
        return None;
    }
    let h1: Vec<usize> = c1
        .iter()
        .copied()
        .filter(|v| is_highest(g1, v, flavor))
        .collect();
    let h2: Vec<usize> = c2
        .iter()
        .copied()
        .filter(|v| is_highest(g2, v, flavor))
        .collect();
    let (&[r1], &[r2]) = (h1.as_slice(), h2.as_slice()) else {
        return None;
    };
    let mut map: HashMap<usize, usize> = HashMap::from([(r1, r2)]);
    let mut inverse: HashMap<usize, usize> = HashMap::from([(r2, r1)]);
    let mut queue = VecDeque::from([r1]);
    while let Some(v) = queue.pop_front() {
        let w = map[&v];
        if g1.weights[v] != g2.weights[w] {
            return None;
        }
        for k in 0..g1.labels.len() {
            for (x, y) in [(g1.down[k][v], g2.down[k][w]), (g1.up[k][v], g2.up[k][w])] {
                match (x, y) {
                    (None, None) => {}
                    (Some(x), Some(y)) => match (map.get(&x), inverse.get(&y)) {
                        (None, None) => {
                            map.insert(x, y);
                            inverse.insert(y, x);
                            queue.push_back(x);
                        }
                        (Some(&y0), Some(&x0)) if y0 == y && x0 == x => {}
                        _ => return None,
                    },
                    _ => return None,
                }
            }
        }
    }
    if map.len() != c1.len() {
        return None;
    }
    let mut pairs: Vec<(usize, usize)> = map.into_iter().collect();
    pairs.sort();
    Some(pairs)
}
