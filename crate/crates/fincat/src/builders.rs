//! Constructors for every category family the library knows how to
//! materialize: preorders, finite monoids, free categories on graphs, and the
//! bounded universe categories of sets, ordinals, pointed sets and posets.
//!
//! Every constructor output passes [`FinCat::check_laws`] (for graphs: in the
//! acyclic, unbounded case). Cyclic graphs never yield a `FinCat`; with a
//! path-length bound they yield a [`HomEnumeration`] usable only for listing
//! hom-sets.

use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cat::{FinCat, MorData, MorId, ObjId};
use crate::error::{Error, Result};
use crate::finset::{all_functions, function_count, function_index, FinFun, FinSet};
use crate::report::{witness, Report};

/// A preordered set presentation. Construction takes the
/// reflexive-transitive closure of the given pairs.
#[derive(Debug, Clone)]
pub struct PreorderPresentation {
    pub elements: Vec<String>,
    pub leq: Vec<(usize, usize)>,
}

impl PreorderPresentation {
    pub fn new<S: Into<String>>(elements: Vec<S>, leq: Vec<(usize, usize)>) -> Result<Self> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        for &(a, b) in &leq {
            if a >= elements.len() || b >= elements.len() {
                return Err(Error::structural("preorder", format!("pair ({a},{b}) out of range")));
            }
        }
        Ok(PreorderPresentation { elements, leq })
    }

    /// The chain `0 ≤ 1 ≤ … ≤ k-1`.
    pub fn chain(k: usize) -> Self {
        PreorderPresentation {
            elements: (0..k).map(|i| i.to_string()).collect(),
            leq: (1..k).map(|i| (i - 1, i)).collect(),
        }
    }

    /// `k` elements, no relations beyond reflexivity.
    pub fn discrete(k: usize) -> Self {
        PreorderPresentation {
            elements: (0..k).map(|i| i.to_string()).collect(),
            leq: Vec::new(),
        }
    }

    /// X, Y both below A and B, with X and Y incomparable.
    pub fn diamond() -> Self {
        PreorderPresentation {
            elements: vec!["A".into(), "B".into(), "X".into(), "Y".into()],
            leq: vec![(2, 0), (2, 1), (3, 0), (3, 1)],
        }
    }

    /// The reflexive-transitive closure as a full boolean matrix.
    pub fn closure(&self) -> Vec<Vec<bool>> {
        let n = self.elements.len();
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        for &(a, b) in &self.leq {
            le[a][b] = true;
        }
        for m in 0..n {
            for i in 0..n {
                if le[i][m] {
                    for j in 0..n {
                        if le[m][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        le
    }
}

/// `Hom(x, y)` is a singleton iff `x ≤ y`, empty otherwise; identities and
/// composites are the forced unique elements.
pub fn from_preorder(p: &PreorderPresentation) -> FinCat {
    let le = p.closure();
    let n = p.elements.len();
    let mut mors = Vec::new();
    let mut arrow = vec![vec![None; n]; n];
    let mut identities = vec![MorId(0); n];
    for a in 0..n {
        for b in 0..n {
            if le[a][b] {
                let id = MorId(mors.len());
                arrow[a][b] = Some(id);
                let name = if a == b {
                    format!("id_{}", p.elements[a])
                } else {
                    format!("{}≤{}", p.elements[a], p.elements[b])
                };
                mors.push(MorData { name, dom: ObjId(a), cod: ObjId(b) });
                if a == b {
                    identities[a] = id;
                }
            }
        }
    }
    let dom_cod: Vec<(usize, usize)> = mors.iter().map(|m| (m.dom.0, m.cod.0)).collect();
    FinCat::from_fn(p.elements.clone(), mors, identities, |f, g| {
        let (a, _) = dom_cod[f.0];
        let (_, c) = dom_cod[g.0];
        arrow[a][c].expect("transitivity guarantees the composite arrow")
    })
    .expect("preorder data is well-typed")
}

/// A finite monoid given by its full multiplication table.
#[derive(Debug, Clone)]
pub struct FiniteMonoidPresentation {
    pub elements: Vec<String>,
    pub unit: usize,
    /// `table[a][b]` is the product `a·b`.
    pub table: Vec<Vec<usize>>,
}

impl FiniteMonoidPresentation {
    /// Validates totality, the unit law and associativity.
    pub fn new<S: Into<String>>(elements: Vec<S>, unit: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let n = elements.len();
        if unit >= n {
            return Err(Error::structural("monoid", "unit element out of range"));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::structural("monoid", "multiplication table is not total"));
        }
        if let Some(&v) = table.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::structural("monoid", format!("table entry {v} out of range")));
        }
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                return Err(Error::InvalidMonoid {
                    law: "unit".into(),
                    witness: elements[a].clone(),
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidMonoid {
                            law: "associativity".into(),
                            witness: format!("({}, {}, {})", elements[a], elements[b], elements[c]),
                        });
                    }
                }
            }
        }
        Ok(FiniteMonoidPresentation { elements, unit, table })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Fold a word left-to-right, starting from the unit.
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.unit, |acc, &x| self.table[acc][x])
    }

    /// All monoid homomorphisms into `other`, as value tables.
    pub fn homs_to(&self, other: &FiniteMonoidPresentation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for f in all_functions(&FinSet::new(self.size()), &FinSet::new(other.size())) {
            let t = &f.table;
            if t[self.unit] != other.unit {
                continue;
            }
            let ok = (0..self.size()).all(|a| {
                (0..self.size()).all(|b| t[self.table[a][b]] == other.table[t[a]][t[b]])
            });
            if ok {
                out.push(t.clone());
            }
        }
        out
    }
}

/// One object `*`; `Hom(*,*) = M`; composition is the multiplication.
pub fn from_monoid(m: &FiniteMonoidPresentation) -> FinCat {
    let mors = m
        .elements
        .iter()
        .map(|e| MorData { name: e.clone(), dom: ObjId(0), cod: ObjId(0) })
        .collect();
    FinCat::from_fn(vec!["*".into()], mors, vec![MorId(m.unit)], |f, g| {
        MorId(m.table[f.0][g.0])
    })
    .expect("monoid data is well-typed")
}

/// Built-in monoids, addressable by name from the CLI.
pub fn monoid_catalog(name: &str) -> Result<FiniteMonoidPresentation> {
    let cyclic = |k: usize| {
        FiniteMonoidPresentation::new(
            (0..k).map(|i| i.to_string()).collect::<Vec<_>>(),
            0,
            (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect(),
        )
    };
    match name {
        "trivial" => cyclic(1),
        "z2" => cyclic(2),
        "z3" => cyclic(3),
        "z4" => cyclic(4),
        "z5" => cyclic(5),
        "z6" => cyclic(6),
        // ({0,1}, ∧, 1)
        "and" => FiniteMonoidPresentation::new(vec!["0", "1"], 1, vec![vec![0, 0], vec![0, 1]]),
        // ({0,1}, ∨, 0)
        "or" => FiniteMonoidPresentation::new(vec!["0", "1"], 0, vec![vec![0, 1], vec![1, 1]]),
        // unit e adjoined to the left-zero semigroup {a, b}
        "flipflop" => FiniteMonoidPresentation::new(
            vec!["e", "a", "b"],
            0,
            vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]],
        ),
        // symmetric group on 3 letters, permutations composed left-to-right
        "s3" => {
            let perms: Vec<[usize; 3]> =
                vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
            let names: Vec<String> = perms
                .iter()
                .map(|p| format!("({}{}{})", p[0], p[1], p[2]))
                .collect();
            let table = perms
                .iter()
                .map(|p| {
                    perms
                        .iter()
                        .map(|q| {
                            let r = [q[p[0]], q[p[1]], q[p[2]]];
                            perms.iter().position(|s| *s == r).unwrap()
                        })
                        .collect()
                })
                .collect();
            FiniteMonoidPresentation::new(names, 0, table)
        }
        _ => Err(Error::Unsupported(format!("unknown monoid `{name}`"))),
    }
}

/// A directed multigraph presentation.
#[derive(Debug, Clone)]
pub struct GraphPresentation {
    pub nodes: Vec<String>,
    /// (edge name, src node index, dst node index)
    pub edges: Vec<(String, usize, usize)>,
    pub max_path_len: Option<usize>,
}

impl GraphPresentation {
    pub fn new<S: Into<String>>(
        nodes: Vec<S>,
        edges: Vec<(S, usize, usize)>,
        max_path_len: Option<usize>,
    ) -> Result<Self> {
        let nodes: Vec<String> = nodes.into_iter().map(Into::into).collect();
        let edges: Vec<(String, usize, usize)> = edges
            .into_iter()
            .map(|(n, s, d)| (n.into(), s, d))
            .collect();
        for (name, s, d) in &edges {
            if *s >= nodes.len() || *d >= nodes.len() {
                return Err(Error::structural(
                    "graph",
                    format!("edge `{name}` has an undeclared endpoint"),
                ));
            }
        }
        Ok(GraphPresentation { nodes, edges, max_path_len })
    }

    fn has_cycle(&self) -> bool {
        // Kahn's algorithm on the node set.
        let n = self.nodes.len();
        let mut indeg = vec![0usize; n];
        for &(_, _, d) in &self.edges {
            indeg[d] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for &(_, s, d) in &self.edges {
                if s == v {
                    indeg[d] -= 1;
                    if indeg[d] == 0 {
                        queue.push(d);
                    }
                }
            }
        }
        seen != n
    }
}

/// Hom-sets of a free category on a cyclic graph, truncated at a path-length
/// bound. Not composable-closed: composition of listed paths may exceed the
/// bound, so this structure only answers hom-set queries.
#[derive(Debug, Clone)]
pub struct HomEnumeration {
    pub nodes: Vec<String>,
    pub max_path_len: usize,
    /// Per (src, dst): canonical path names, shortest first.
    pub paths: Vec<Vec<Vec<String>>>,
}

impl HomEnumeration {
    pub fn hom(&self, src: usize, dst: usize) -> &[String] {
        &self.paths[src][dst]
    }
}

/// Result of [`from_graph`]: a real category for acyclic graphs, a truncated
/// hom listing for cyclic ones with a bound.
#[derive(Debug, Clone)]
pub enum GraphCategory {
    Category(FinCat),
    HomEnumeration(HomEnumeration),
}

fn path_name(nodes: &[String], edges: &[(String, usize, usize)], node: usize, path: &[usize]) -> String {
    if path.is_empty() {
        format!("id_{}", nodes[node])
    } else {
        path.iter()
            .map(|&e| edges[e].0.clone())
            .collect::<Vec<_>>()
            .join("·")
    }
}

/// Morphisms are all directed paths (empty paths are the identities);
/// composition is path concatenation.
pub fn from_graph(g: &GraphPresentation) -> Result<GraphCategory> {
    let cyclic = g.has_cycle();
    if cyclic {
        let Some(bound) = g.max_path_len else {
            return Err(Error::InfiniteCategory);
        };
        let n = g.nodes.len();
        let mut paths: Vec<Vec<Vec<String>>> = vec![vec![Vec::new(); n]; n];
        // breadth-first over path length
        let mut frontier: Vec<(usize, usize, Vec<usize>)> =
            (0..n).map(|v| (v, v, Vec::new())).collect();
        for (s, d, p) in &frontier {
            paths[*s][*d].push(path_name(&g.nodes, &g.edges, *s, p));
        }
        for _len in 1..=bound {
            let mut next = Vec::new();
            for (s, d, p) in &frontier {
                for (e, &(_, src, dst)) in g.edges.iter().enumerate() {
                    if src == *d {
                        let mut q = p.clone();
                        q.push(e);
                        paths[*s][dst].push(path_name(&g.nodes, &g.edges, *s, &q));
                        next.push((*s, dst, q));
                    }
                }
            }
            frontier = next;
        }
        return Ok(GraphCategory::HomEnumeration(HomEnumeration {
            nodes: g.nodes.clone(),
            max_path_len: bound,
            paths,
        }));
    }

    // Acyclic: enumerate every path. Longest possible path visits each edge
    // at most... every path in a DAG is simple on nodes, so length < |nodes|.
    let n = g.nodes.len();
    let mut mors: Vec<MorData> = Vec::new();
    let mut key_of: HashMap<(usize, Vec<usize>), MorId> = HashMap::new();
    let mut identities = Vec::new();
    let mut frontier: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for v in 0..n {
        let id = MorId(mors.len());
        identities.push(id);
        key_of.insert((v, Vec::new()), id);
        mors.push(MorData {
            name: path_name(&g.nodes, &g.edges, v, &[]),
            dom: ObjId(v),
            cod: ObjId(v),
        });
        frontier.push((v, v, Vec::new()));
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (s, d, p) in &frontier {
            for (e, &(_, src, dst)) in g.edges.iter().enumerate() {
                if src == *d {
                    let mut q = p.clone();
                    q.push(e);
                    let id = MorId(mors.len());
                    key_of.insert((*s, q.clone()), id);
                    mors.push(MorData {
                        name: path_name(&g.nodes, &g.edges, *s, &q),
                        dom: ObjId(*s),
                        cod: ObjId(dst),
                    });
                    next.push((*s, dst, q));
                }
            }
        }
        frontier = next;
    }
    let keys: Vec<(usize, Vec<usize>)> = {
        let mut v: Vec<((usize, Vec<usize>), MorId)> = key_of.iter().map(|(k, &i)| (k.clone(), i)).collect();
        v.sort_by_key(|(_, i)| i.0);
        v.into_iter().map(|(k, _)| k).collect()
    };
    let cat = FinCat::from_fn(g.nodes.clone(), mors, identities, |f, g_| {
        let (s, ref p) = keys[f.0];
        let (_, ref q) = keys[g_.0];
        let mut r = p.clone();
        r.extend(q.iter().copied());
        key_of[&(s, r)]
    })
    .expect("path concatenation is well-typed");
    Ok(GraphCategory::Category(cat))
}

/// Which family of structured finite objects a universe materializes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniverseKind {
    /// All subsets of the canonical n-element label pool, all functions.
    /// Distinct equinumerous objects exist on purpose: the skeleton questions
    /// (equivalence vs isomorphism) need them.
    FinSet,
    /// One canonical ordinal `[k]` per size, all functions.
    FinOrd,
    /// Pointed canonical sets `([k], 0)` for k ≥ 1, point-preserving maps.
    FinPtSet,
    /// All labeled posets on at most n elements, monotone maps.
    FinPos,
}

impl UniverseKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "finset" => Ok(UniverseKind::FinSet),
            "finord" => Ok(UniverseKind::FinOrd),
            "finptset" => Ok(UniverseKind::FinPtSet),
            "finpos" => Ok(UniverseKind::FinPos),
            _ => Err(Error::Unsupported(format!("unknown universe family `{s}`"))),
        }
    }
}

/// A materialized universe category plus the carrier-level payload of each
/// object and morphism, for value-level queries and witnesses.
#[derive(Debug, Clone)]
pub struct Universe {
    pub kind: UniverseKind,
    pub cat: FinCat,
    /// Carrier of each object: elements are ranks `0..size`.
    pub carriers: Vec<FinSet>,
    /// Underlying function of each morphism, on ranks.
    pub tables: Vec<FinFun>,
}

impl Universe {
    /// Morphism id for a value table between two universe objects.
    pub fn morphism_of_table(&self, dom: ObjId, cod: ObjId, table: &[usize]) -> Option<MorId> {
        self.cat.hom(dom, cod).iter().copied().find(|&m| self.tables[m.0].table == table)
    }
}

fn poset_relations(k: usize) -> Vec<Vec<Vec<bool>>> {
    // All partial orders on k labeled elements, as ≤ matrices,
    // enumerated deterministically.
    let mut seen: Vec<Vec<Vec<bool>>> = Vec::new();
    let offdiag: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    for bits in 0u32..(1 << offdiag.len()) {
        let mut le = vec![vec![false; k]; k];
        for i in 0..k {
            le[i][i] = true;
        }
        for (b, &(i, j)) in offdiag.iter().enumerate() {
            if (bits >> b) & 1 == 1 {
                le[i][j] = true;
            }
        }
        for m in 0..k {
            for i in 0..k {
                if le[i][m] {
                    for j in 0..k {
                        if le[m][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        let antisym = (0..k).all(|i| (0..k).all(|j| i == j || !(le[i][j] && le[j][i])));
        if antisym && !seen.contains(&le) {
            seen.push(le);
        }
    }
    seen
}

/// Materialize a universe category at bound `n`.
///
/// Guards: `n ≤ 4` for finset/finord/finptset, `n ≤ 3` for finpos.
pub fn universe_category(kind: UniverseKind, n: usize) -> Result<Universe> {
    let limit = match kind {
        UniverseKind::FinPos => 3,
        _ => 4,
    };
    if n > limit {
        return Err(Error::size_limit(format!("universe {kind:?}"), n, limit));
    }

    // Objects: (name, carrier, optional poset order on ranks).
    let mut names: Vec<String> = Vec::new();
    let mut carriers: Vec<FinSet> = Vec::new();
    let mut orders: Vec<Option<Vec<Vec<bool>>>> = Vec::new();
    match kind {
        UniverseKind::FinSet => {
            for mask in 0u32..(1 << n) {
                let elems: Vec<usize> = (0..n).filter(|&i| (mask >> i) & 1 == 1).collect();
                names.push(format!(
                    "{{{}}}",
                    elems.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
                ));
                carriers.push(FinSet {
                    size: elems.len(),
                    labels: Some(elems.iter().map(|e| e.to_string()).collect()),
                });
                orders.push(None);
            }
        }
        UniverseKind::FinOrd => {
            for k in 0..=n {
                names.push(format!("[{k}]"));
                carriers.push(FinSet::new(k));
                orders.push(None);
            }
        }
        UniverseKind::FinPtSet => {
            for k in 1..=n {
                names.push(format!("([{k}],0)"));
                carriers.push(FinSet::new(k));
                orders.push(None);
            }
        }
        UniverseKind::FinPos => {
            for k in 0..=n {
                for le in poset_relations(k) {
                    let strict: Vec<String> = (0..k)
                        .flat_map(|i| {
                            let le = le.clone();
                            (0..k).filter(move |&j| i != j && le[i][j]).map(move |j| format!("{i}<{j}"))
                        })
                        .collect();
                    names.push(format!("pos{k}({})", strict.join(",")));
                    carriers.push(FinSet::new(k));
                    orders.push(Some(le));
                }
            }
        }
    }

    let keep = |f: &FinFun, a: usize, b: usize| -> bool {
        match kind {
            UniverseKind::FinSet | UniverseKind::FinOrd => true,
            UniverseKind::FinPtSet => f.table.first().map_or(true, |&v| v == 0),
            UniverseKind::FinPos => {
                let (pa, pb) = (orders[a].as_ref().unwrap(), orders[b].as_ref().unwrap());
                (0..f.dom.size).all(|i| {
                    (0..f.dom.size).all(|j| !pa[i][j] || pb[f.table[i]][f.table[j]])
                })
            }
        }
    };

    let objs = names.len();
    let mut mors: Vec<MorData> = Vec::new();
    let mut tables: Vec<FinFun> = Vec::new();
    let mut identities = vec![MorId(0); objs];
    // lookup[a][b]: function_index -> morphism id (dense, u32::MAX = absent)
    let mut lookup: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); objs]; objs];
    for a in 0..objs {
        for b in 0..objs {
            let count = function_count(&carriers[a], &carriers[b]);
            let mut slot = vec![u32::MAX; count];
            for f in all_functions(&carriers[a], &carriers[b]) {
                if !keep(&f, a, b) {
                    continue;
                }
                let id = MorId(mors.len());
                slot[function_index(&f)] = id.0 as u32;
                let name = format!(
                    "{}→{}:[{}]",
                    names[a],
                    names[b],
                    f.table.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                );
                mors.push(MorData { name, dom: ObjId(a), cod: ObjId(b) });
                if a == b && f.table == FinFun::identity(&carriers[a]).table {
                    identities[a] = id;
                }
                tables.push(f);
            }
            lookup[a][b] = slot;
        }
    }

    let dom_cod: Vec<(usize, usize)> = mors.iter().map(|m| (m.dom.0, m.cod.0)).collect();
    let cat = FinCat::from_fn(names, mors, identities, |f, g| {
        let (a, _) = dom_cod[f.0];
        let (_, c) = dom_cod[g.0];
        let composed = tables[f.0].then(&tables[g.0]).expect("composable by block layout");
        MorId(lookup[a][c][function_index(&composed)] as usize)
    })
    .expect("universe data is well-typed");
    Ok(Universe { kind, cat, carriers, tables })
}

/// A lazily-presented category for sampled law checking: too big to
/// materialize, but able to produce random composable chains.
pub trait SampledCategory {
    type Obj: Clone + PartialEq + std::fmt::Debug;
    type Mor: Clone + PartialEq + std::fmt::Debug;

    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn cod(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    /// Diagrammatic composition; callers guarantee `cod(f) = dom(g)`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn sample_object(&self, rng: &mut ChaCha8Rng) -> Self::Obj;
    fn sample_hom(&self, rng: &mut ChaCha8Rng, dom: &Self::Obj, cod: &Self::Obj) -> Self::Mor;
}

/// Check unit and associativity on `samples` pseudo-random composable
/// pairs/triples drawn deterministically from `seed`.
pub fn sampled_laws<C: SampledCategory>(spec: &C, samples: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..samples {
        let (x, y, z, w) = (
            spec.sample_object(&mut rng),
            spec.sample_object(&mut rng),
            spec.sample_object(&mut rng),
            spec.sample_object(&mut rng),
        );
        let f = spec.sample_hom(&mut rng, &x, &y);
        let g = spec.sample_hom(&mut rng, &y, &z);
        let h = spec.sample_hom(&mut rng, &z, &w);
        let left_unit = spec.compose(&spec.identity(&x), &f);
        if left_unit != f {
            return Report::fail(
                "left unit law (sampled)",
                vec![witness("sample", i), witness("morphism f", format!("{f:?}")), witness("id·f", format!("{left_unit:?}"))],
            );
        }
        let right_unit = spec.compose(&f, &spec.identity(&y));
        if right_unit != f {
            return Report::fail(
                "right unit law (sampled)",
                vec![witness("sample", i), witness("morphism f", format!("{f:?}")), witness("f·id", format!("{right_unit:?}"))],
            );
        }
        let lhs = spec.compose(&spec.compose(&f, &g), &h);
        let rhs = spec.compose(&f, &spec.compose(&g, &h));
        if lhs != rhs {
            return Report::fail(
                "associative law (sampled)",
                vec![
                    witness("sample", i),
                    witness("morphism f", format!("{f:?}")),
                    witness("morphism g", format!("{g:?}")),
                    witness("morphism h", format!("{h:?}")),
                    witness("(f·g)·h", format!("{lhs:?}")),
                    witness("f·(g·h)", format!("{rhs:?}")),
                ],
            );
        }
    }
    Report::pass("category laws (sampled)").with_detail(format!("{samples} composable triples sampled"))
}

/// Integer matrices: objects are dimensions `0..=max_dim`, `Hom(l, m)` is the
/// l×m matrices, composition is the matrix product `M·N`.
#[derive(Debug, Clone)]
pub struct MatrixCategory {
    pub max_dim: usize,
    pub entry_lo: i64,
    pub entry_hi: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

impl Matrix {
    pub fn identity(n: usize) -> Matrix {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { rows: n, cols: n, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut entries = vec![0i64; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    entries[i * other.cols + j] += a * other.entries[k * other.cols + j];
                }
            }
        }
        Matrix { rows: self.rows, cols: other.cols, entries }
    }
}

impl Default for MatrixCategory {
    fn default() -> Self {
        MatrixCategory { max_dim: 3, entry_lo: -2, entry_hi: 2 }
    }
}

impl SampledCategory for MatrixCategory {
    type Obj = usize;
    type Mor = Matrix;

    fn dom(&self, f: &Matrix) -> usize {
        f.rows
    }
    fn cod(&self, f: &Matrix) -> usize {
        f.cols
    }
    fn identity(&self, x: &usize) -> Matrix {
        Matrix::identity(*x)
    }
    fn compose(&self, f: &Matrix, g: &Matrix) -> Matrix {
        f.mul(g)
    }
    fn sample_object(&self, rng: &mut ChaCha8Rng) -> usize {
        rng.gen_range(0..=self.max_dim)
    }
    fn sample_hom(&self, rng: &mut ChaCha8Rng, dom: &usize, cod: &usize) -> Matrix {
        Matrix {
            rows: *dom,
            cols: *cod,
            entries: (0..dom * cod).map(|_| rng.gen_range(self.entry_lo..=self.entry_hi)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_has_six_morphisms() {
        // oracle: reflexive pairs (3) + order pairs 0≤1, 0≤2, 1≤2 (3)
        let c = from_preorder(&PreorderPresentation::chain(3));
        assert_eq!(c.morphism_count(), 6);
        assert!(c.check_laws().passed());
    }

    #[test]
    fn discrete_preorder_has_only_identities() {
        let c = from_preorder(&PreorderPresentation::discrete(2));
        assert_eq!(c.morphism_count(), 2);
        assert!(c.morphisms().all(|f| c.is_identity(f)));
    }

    #[test]
    fn truth_value_poset_has_one_way_arrow() {
        let p = PreorderPresentation::new(vec!["0", "1"], vec![(0, 1)]).unwrap();
        let c = from_preorder(&p);
        let (zero, one) = (ObjId(0), ObjId(1));
        assert_eq!(c.hom(zero, one).len(), 1);
        assert_eq!(c.hom(one, zero).len(), 0);
    }

    #[test]
    fn preorder_homs_are_thin_and_antisymmetric_inputs_have_no_two_cycles() {
        for p in [
            PreorderPresentation::chain(4),
            PreorderPresentation::diamond(),
            PreorderPresentation::discrete(3),
        ] {
            let c = from_preorder(&p);
            for x in c.objects() {
                for y in c.objects() {
                    assert!(c.hom(x, y).len() <= 1);
                    if x != y {
                        assert!(c.hom(x, y).is_empty() || c.hom(y, x).is_empty());
                    } else {
                        assert!(c.hom(x, x).iter().all(|&f| c.is_identity(f)));
                    }
                }
            }
        }
    }

    #[test]
    fn z3_is_a_group_and_and_monoid_is_not() {
        let z3 = monoid_catalog("z3").unwrap();
        let c = from_monoid(&z3);
        assert_eq!(c.morphism_count(), 3);
        // brute-force inverse search
        let invertible = |m: &FiniteMonoidPresentation, a: usize| {
            (0..m.size()).any(|b| m.mul(a, b) == m.unit && m.mul(b, a) == m.unit)
        };
        assert!((0..3).all(|a| invertible(&z3, a)));
        let and = monoid_catalog("and").unwrap();
        let isos: Vec<usize> = (0..2).filter(|&a| invertible(&and, a)).collect();
        assert_eq!(isos, vec![and.unit]);
    }

    #[test]
    fn trivial_monoid_is_terminal_category() {
        let c = from_monoid(&monoid_catalog("trivial").unwrap());
        assert_eq!((c.object_count(), c.morphism_count()), (1, 1));
    }

    #[test]
    fn invalid_monoid_reports_failed_axiom() {
        // unit law broken: 1·1 = 0 with claimed unit 1
        let err = FiniteMonoidPresentation::new(vec!["0", "1"], 1, vec![vec![0, 0], vec![0, 0]])
            .unwrap_err();
        assert!(matches!(err, Error::InvalidMonoid { ref law, .. } if law == "unit"));
    }

    #[test]
    fn monoid_catalog_members_build_law_abiding_categories() {
        for name in ["trivial", "z2", "z3", "z4", "z5", "z6", "and", "or", "flipflop", "s3"] {
            let m = monoid_catalog(name).unwrap();
            assert!(from_monoid(&m).check_laws().passed(), "{name}");
        }
    }

    #[test]
    fn single_node_graph_is_terminal_category() {
        let g = GraphPresentation::new::<&str>(vec!["x"], vec![], None).unwrap();
        let GraphCategory::Category(c) = from_graph(&g).unwrap() else {
            panic!("acyclic")
        };
        assert_eq!((c.object_count(), c.morphism_count()), (1, 1));
    }

    #[test]
    fn paper_w_x_y_z_graph_homs() {
        // edges y→x, y→z, z→w
        let g = GraphPresentation::new(
            vec!["x", "y", "z", "w"],
            vec![("a", 1, 0), ("b", 1, 2), ("c", 2, 3)],
            None,
        )
        .unwrap();
        let GraphCategory::Category(c) = from_graph(&g).unwrap() else {
            panic!("acyclic")
        };
        assert!(c.check_laws().passed());
        let (x, y, _z, w) = (ObjId(0), ObjId(1), ObjId(2), ObjId(3));
        assert_eq!(c.hom(y, w).len(), 1);
        assert_eq!(c.morphism_name(c.hom(y, w)[0]), "b·c");
        assert!(c.hom(w, x).is_empty());
        for v in c.objects() {
            assert_eq!(c.hom(v, v).len(), 1);
        }
    }

    #[test]
    fn cyclic_graph_without_bound_is_infinite() {
        let g = GraphPresentation::new(vec!["x", "y"], vec![("f", 0, 1), ("g", 1, 0)], None).unwrap();
        assert!(matches!(from_graph(&g), Err(Error::InfiniteCategory)));
    }

    #[test]
    fn two_cycle_bounded_enumeration() {
        let g = GraphPresentation::new(vec!["x", "y"], vec![("f", 0, 1), ("g", 1, 0)], Some(3)).unwrap();
        let GraphCategory::HomEnumeration(h) = from_graph(&g).unwrap() else {
            panic!("cyclic")
        };
        // Hom(x,x) up to length 3: lengths 0 and 2 only
        assert_eq!(h.hom(0, 0), &["id_x".to_string(), "f·g".to_string()]);
        assert_eq!(h.hom(0, 1), &["f".to_string(), "f·g·f".to_string()]);
    }

    #[test]
    fn finset_universe_small_shape() {
        let u = universe_category(UniverseKind::FinSet, 2).unwrap();
        // subsets of {0,1}: sizes 0,1,1,2
        let mut sizes: Vec<usize> = u.carriers.iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![0, 1, 1, 2]);
        let two = u.cat.object_by_name("{0,1}").unwrap();
        assert_eq!(u.cat.hom(two, two).len(), 4);
        assert!(u.cat.check_laws().passed());
    }

    #[test]
    fn hom_counts_are_powers() {
        let u = universe_category(UniverseKind::FinSet, 3).unwrap();
        for a in u.cat.objects() {
            for b in u.cat.objects() {
                let expected = function_count(&u.carriers[a.0], &u.carriers[b.0]);
                assert_eq!(u.cat.hom(a, b).len(), expected);
            }
        }
    }

    #[test]
    fn finptset_universe_shape() {
        let u = universe_category(UniverseKind::FinPtSet, 2).unwrap();
        assert_eq!(u.cat.object_count(), 2);
        // Hom(([2],0), ([2],0)) = point-preserving maps = 2
        let two = u.cat.object_by_name("([2],0)").unwrap();
        assert_eq!(u.cat.hom(two, two).len(), 2);
        assert!(u.cat.check_laws().passed());
    }

    #[test]
    fn finpos_universe_chain_homs() {
        let u = universe_category(UniverseKind::FinPos, 2).unwrap();
        // objects: pos0(), pos1(), pos2(), pos2(0<1), pos2(1<0)
        assert_eq!(u.cat.object_count(), 5);
        let chain = u.cat.object_by_name("pos2(0<1)").unwrap();
        // oracle: monotone tables [0,0], [0,1], [1,1]
        assert_eq!(u.cat.hom(chain, chain).len(), 3);
        assert!(u.cat.check_laws().passed());
    }

    #[test]
    fn universe_guards() {
        assert!(matches!(
            universe_category(UniverseKind::FinSet, 5),
            Err(Error::SizeLimit { .. })
        ));
        assert!(matches!(
            universe_category(UniverseKind::FinPos, 4),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn matrix_laws_pass_sampled() {
        let report = sampled_laws(&MatrixCategory::default(), 1000, 7);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn identity_matrix_is_a_unit() {
        let m = Matrix { rows: 2, cols: 3, entries: vec![1, -2, 0, 2, 1, 1] };
        assert_eq!(Matrix::identity(2).mul(&m), m);
        assert_eq!(m.mul(&Matrix::identity(3)), m);
    }

    #[test]
    fn transposed_compose_fails_with_witness() {
        // one object (dim 2), compose deliberately transposed
        #[derive(Debug, Clone)]
        struct Broken;
        impl SampledCategory for Broken {
            type Obj = usize;
            type Mor = Matrix;
            fn dom(&self, _: &Matrix) -> usize {
                2
            }
            fn cod(&self, _: &Matrix) -> usize {
                2
            }
            fn identity(&self, _: &usize) -> Matrix {
                Matrix::identity(2)
            }
            fn compose(&self, f: &Matrix, g: &Matrix) -> Matrix {
                let p = f.mul(g);
                Matrix {
                    rows: 2,
                    cols: 2,
                    entries: vec![p.entries[0], p.entries[2], p.entries[1], p.entries[3]],
                }
            }
            fn sample_object(&self, _: &mut ChaCha8Rng) -> usize {
                2
            }
            fn sample_hom(&self, rng: &mut ChaCha8Rng, _: &usize, _: &usize) -> Matrix {
                Matrix { rows: 2, cols: 2, entries: (0..4).map(|_| rng.gen_range(-2..=2)).collect() }
            }
        }
        let report = sampled_laws(&Broken, 200, 7);
        assert!(!report.passed());
        assert!(!report.witnesses.is_empty());
    }
}
