//! JSON document schemas and their conversion to library values.
//!
//! One normalized schema with a `"kind"` discriminator keeps golden files
//! stable. Schema violations (malformed JSON, unknown fields) and semantic
//! violations (names that do not resolve, non-total tables) both exit with
//! code 2; semantic errors name the offending field.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use fincat::builders::{
    from_graph, from_monoid, from_preorder, universe_category, FiniteMonoidPresentation,
    GraphCategory, GraphPresentation, PreorderPresentation, Universe, UniverseKind,
};
use fincat::cat::{FinCat, MorData, MorId, ObjId};
use fincat::functor::{Functor, NatTrans};

#[derive(Debug)]
pub struct DocError(pub String);

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for DocError {}

impl From<fincat::Error> for DocError {
    fn from(e: fincat::Error) -> Self {
        DocError(e.to_string())
    }
}

pub type DocResult<T> = Result<T, DocError>;

#[derive(Debug, Clone, Deserialize)]
pub struct MorphismDoc {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CompositionEntry {
    pub first: String,
    pub then: String,
    pub result: String,
}

#[derive(Debug, Clone, Deserialize)]
pub struct EdgeDoc {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// A category presentation document.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CategoryDocument {
    Explicit {
        objects: Vec<String>,
        morphisms: Vec<MorphismDoc>,
        identities: BTreeMap<String, String>,
        /// Diagrammatic: `result = first, then `then``.
        composition: Vec<CompositionEntry>,
    },
    Preorder {
        elements: Vec<String>,
        leq: Vec<(String, String)>,
    },
    Monoid {
        elements: Vec<String>,
        unit: String,
        table: Vec<Vec<String>>,
    },
    Graph {
        nodes: Vec<String>,
        edges: Vec<EdgeDoc>,
        #[serde(default)]
        max_path_len: Option<usize>,
    },
    Universe {
        family: String,
        max_size: usize,
    },
}

/// What a category document materializes into.
pub enum BuiltCategory {
    Plain(FinCat),
    Universe(Universe),
    /// Bounded hom listing of a cyclic free category; rejected by the law
    /// checker and all global queries.
    HomEnumeration(fincat::builders::HomEnumeration),
}

impl BuiltCategory {
    pub fn cat(&self) -> DocResult<&FinCat> {
        match self {
            BuiltCategory::Plain(c) => Ok(c),
            BuiltCategory::Universe(u) => Ok(&u.cat),
            BuiltCategory::HomEnumeration(h) => Err(DocError(format!(
                "this graph is cyclic; hom-sets over its {} nodes are enumerable only up to path length {}, and global checks refuse the truncation",
                h.nodes.len(),
                h.max_path_len
            ))),
        }
    }
}

fn find<'a>(names: &'a [String], name: &str, field: &str) -> DocResult<usize> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| DocError(format!("{field}: unknown name `{name}`")))
}

pub fn build_category(doc: &CategoryDocument) -> DocResult<BuiltCategory> {
    match doc {
        CategoryDocument::Explicit {
            objects,
            morphisms,
            identities,
            composition,
        } => {
            let mor_names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
            let mors = morphisms
                .iter()
                .map(|m| {
                    Ok(MorData {
                        name: m.name.clone(),
                        dom: ObjId(find(objects, &m.dom, "morphisms.dom")?),
                        cod: ObjId(find(objects, &m.cod, "morphisms.cod")?),
                    })
                })
                .collect::<DocResult<Vec<_>>>()?;
            let mut ids = Vec::new();
            for obj in objects {
                let name = identities
                    .get(obj)
                    .ok_or_else(|| DocError(format!("identities: no identity for `{obj}`")))?;
                ids.push(MorId(find(&mor_names, name, "identities")?));
            }
            let entries = composition
                .iter()
                .map(|e| {
                    Ok((
                        MorId(find(&mor_names, &e.first, "composition.first")?),
                        MorId(find(&mor_names, &e.then, "composition.then")?),
                        MorId(find(&mor_names, &e.result, "composition.result")?),
                    ))
                })
                .collect::<DocResult<Vec<_>>>()?;
            let cat = FinCat::from_entries(objects.clone(), mors, ids, &entries)
                .map_err(|e| DocError(format!("composition: {e}")))?;
            Ok(BuiltCategory::Plain(cat))
        }
        CategoryDocument::Preorder { elements, leq } => {
            let pairs = leq
                .iter()
                .map(|(a, b)| Ok((find(elements, a, "leq")?, find(elements, b, "leq")?)))
                .collect::<DocResult<Vec<_>>>()?;
            let p = PreorderPresentation::new(elements.clone(), pairs)?;
            Ok(BuiltCategory::Plain(from_preorder(&p)))
        }
        CategoryDocument::Monoid { elements, unit, table } => {
            let unit = find(elements, unit, "unit")?;
            let table = table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| find(elements, v, "table"))
                        .collect::<DocResult<Vec<_>>>()
                })
                .collect::<DocResult<Vec<_>>>()?;
            let m = FiniteMonoidPresentation::new(elements.clone(), unit, table)?;
            Ok(BuiltCategory::Plain(from_monoid(&m)))
        }
        CategoryDocument::Graph { nodes, edges, max_path_len } => {
            let es = edges
                .iter()
                .map(|e| {
                    Ok((
                        e.name.clone(),
                        find(nodes, &e.src, "edges.src")?,
                        find(nodes, &e.dst, "edges.dst")?,
                    ))
                })
                .collect::<DocResult<Vec<_>>>()?;
            let g = GraphPresentation::new(nodes.clone(), es, *max_path_len)?;
            match from_graph(&g)? {
                GraphCategory::Category(c) => Ok(BuiltCategory::Plain(c)),
                GraphCategory::HomEnumeration(h) => Ok(BuiltCategory::HomEnumeration(h)),
            }
        }
        CategoryDocument::Universe { family, max_size } => {
            let kind = UniverseKind::parse(family)?;
            Ok(BuiltCategory::Universe(universe_category(kind, *max_size)?))
        }
    }
}

/// Inline document or a path to one, resolved relative to the referring file.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Path(String),
    Inline(Box<CategoryDocument>),
}

pub fn load_json<T: serde::de::DeserializeOwned>(path: &Path) -> DocResult<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| DocError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| DocError(format!("{}: {e}", path.display())))
}

pub fn resolve_category(r: &CategoryRef, base: &Path) -> DocResult<BuiltCategory> {
    match r {
        CategoryRef::Inline(doc) => build_category(doc),
        CategoryRef::Path(p) => {
            let path = base_join(base, p);
            let doc: CategoryDocument = load_json(&path)?;
            build_category(&doc)
        }
    }
}

fn base_join(base: &Path, p: &str) -> PathBuf {
    let candidate = PathBuf::from(p);
    if candidate.is_absolute() {
        candidate
    } else {
        base.join(p)
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorMaps {
    pub obj_map: BTreeMap<String, String>,
    pub mor_map: BTreeMap<String, String>,
}

/// A functor document: source and target categories plus the two maps.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDocument {
    pub source: CategoryRef,
    pub target: CategoryRef,
    #[serde(flatten)]
    pub maps: FunctorMaps,
}

pub fn build_functor_maps(
    source: &std::sync::Arc<FinCat>,
    target: &std::sync::Arc<FinCat>,
    maps: &FunctorMaps,
) -> DocResult<Functor> {
    let mut obj_map = Vec::new();
    for x in source.objects() {
        let name = source.object_name(x);
        let image = maps
            .obj_map
            .get(name)
            .ok_or_else(|| DocError(format!("obj_map: no image for `{name}`")))?;
        obj_map.push(target.object_by_name(image).map_err(|e| DocError(format!("obj_map: {e}")))?);
    }
    let mut mor_map = Vec::new();
    for f in source.morphisms() {
        let name = source.morphism_name(f);
        let image = maps
            .mor_map
            .get(name)
            .ok_or_else(|| DocError(format!("mor_map: no image for `{name}`")))?;
        mor_map.push(
            target
                .morphism_by_name(image)
                .map_err(|e| DocError(format!("mor_map: {e}")))?,
        );
    }
    Ok(Functor {
        source: source.clone(),
        target: target.clone(),
        obj_map,
        mor_map,
    })
}

pub fn build_functor(doc: &FunctorDocument, base: &Path) -> DocResult<Functor> {
    let source = std::sync::Arc::new(resolve_category(&doc.source, base)?.cat()?.clone());
    let target = std::sync::Arc::new(resolve_category(&doc.target, base)?.cat()?.clone());
    build_functor_maps(&source, &target, &doc.maps)
}

/// A natural-transformation document: one source/target pair, two functor
/// maps, and a component table.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NatTransDocument {
    pub source: CategoryRef,
    pub target: CategoryRef,
    pub from: FunctorMaps,
    pub to: FunctorMaps,
    pub components: BTreeMap<String, String>,
}

pub fn build_nattrans(doc: &NatTransDocument, base: &Path) -> DocResult<NatTrans> {
    let source = std::sync::Arc::new(resolve_category(&doc.source, base)?.cat()?.clone());
    let target = std::sync::Arc::new(resolve_category(&doc.target, base)?.cat()?.clone());
    let from = build_functor_maps(&source, &target, &doc.from)?;
    let to = build_functor_maps(&source, &target, &doc.to)?;
    let mut components = Vec::new();
    for x in source.objects() {
        let name = source.object_name(x);
        let comp = doc
            .components
            .get(name)
            .ok_or_else(|| DocError(format!("components: missing component at `{name}`")))?;
        components.push(
            target
                .morphism_by_name(comp)
                .map_err(|e| DocError(format!("components: {e}")))?,
        );
    }
    Ok(NatTrans { from, to, components })
}

/// An adjunction document: the two categories, both functors, and either
/// unit/counit component tables or explicit α tables per object pair.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdjunctionDocument {
    pub left: CategoryRef,
    pub right: CategoryRef,
    pub f: FunctorMaps,
    pub g: FunctorMaps,
    #[serde(default)]
    pub unit: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub counit: Option<BTreeMap<String, String>>,
    #[serde(default)]
    pub alpha: Option<Vec<AlphaEntry>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaEntry {
    pub c: String,
    pub d: String,
    /// morphism in Hom_R(F c, d) ↦ morphism in Hom_L(c, G d)
    pub table: BTreeMap<String, String>,
}

pub struct BuiltAdjunction {
    pub left: std::sync::Arc<FinCat>,
    pub right: std::sync::Arc<FinCat>,
    pub f: Functor,
    pub g: Functor,
    pub unit: Option<Vec<MorId>>,
    pub counit: Option<Vec<MorId>>,
    /// alpha[c][d]: for each morphism id in Hom_R(F c, d), the image id.
    pub alpha: Option<BTreeMap<(ObjId, ObjId), BTreeMap<MorId, MorId>>>,
}

pub fn build_adjunction(doc: &AdjunctionDocument, base: &Path) -> DocResult<BuiltAdjunction> {
    let left = std::sync::Arc::new(resolve_category(&doc.left, base)?.cat()?.clone());
    let right = std::sync::Arc::new(resolve_category(&doc.right, base)?.cat()?.clone());
    let f = build_functor_maps(&left, &right, &doc.f)?;
    let g = build_functor_maps(&right, &left, &doc.g)?;
    let unit = doc
        .unit
        .as_ref()
        .map(|u| {
            left.objects()
                .map(|x| {
                    let name = left.object_name(x);
                    let m = u
                        .get(name)
                        .ok_or_else(|| DocError(format!("unit: missing component at `{name}`")))?;
                    left.morphism_by_name(m).map_err(|e| DocError(format!("unit: {e}")))
                })
                .collect::<DocResult<Vec<_>>>()
        })
        .transpose()?;
    let counit = doc
        .counit
        .as_ref()
        .map(|u| {
            right
                .objects()
                .map(|x| {
                    let name = right.object_name(x);
                    let m = u
                        .get(name)
                        .ok_or_else(|| DocError(format!("counit: missing component at `{name}`")))?;
                    right.morphism_by_name(m).map_err(|e| DocError(format!("counit: {e}")))
                })
                .collect::<DocResult<Vec<_>>>()
        })
        .transpose()?;
    let alpha = doc
        .alpha
        .as_ref()
        .map(|entries| {
            let mut out: BTreeMap<(ObjId, ObjId), BTreeMap<MorId, MorId>> = BTreeMap::new();
            for e in entries {
                let c = left.object_by_name(&e.c).map_err(|er| DocError(format!("alpha.c: {er}")))?;
                let d = right.object_by_name(&e.d).map_err(|er| DocError(format!("alpha.d: {er}")))?;
                let mut table = BTreeMap::new();
                for (from, to) in &e.table {
                    table.insert(
                        right
                            .morphism_by_name(from)
                            .map_err(|er| DocError(format!("alpha.table: {er}")))?,
                        left.morphism_by_name(to)
                            .map_err(|er| DocError(format!("alpha.table: {er}")))?,
                    );
                }
                out.insert((c, d), table);
            }
            Ok::<_, DocError>(out)
        })
        .transpose()?;
    if unit.is_some() != counit.is_some() {
        return Err(DocError("unit and counit must be given together".into()));
    }
    if unit.is_none() && alpha.is_none() {
        return Err(DocError("an adjunction document needs {unit, counit} or {alpha}".into()));
    }
    Ok(BuiltAdjunction {
        left,
        right,
        f,
        g,
        unit,
        counit,
        alpha,
    })
}
