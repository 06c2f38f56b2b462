//! Morphism classification and universal-object search over any [`FinCat`],
//! with witness production and uniqueness-up-to-iso verification.
//!
//! Everything here quantifies exhaustively: mono/epi run over all parallel
//! pairs, iso over all inverse candidates, and universal objects over all
//! test objects. Categories built by this crate are small by construction,
//! so there is no probabilistic mode.

use std::collections::BTreeMap;

use crate::cat::{FinCat, MorData, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::{witness, Report};

/// Everything the exhaustive sweeps can say about one morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismClassification {
    pub is_mono: bool,
    pub is_epi: bool,
    pub is_iso: bool,
    /// Present iff `is_iso`; unique when present.
    pub inverse: Option<MorId>,
    /// All r with f·r = id (f is a section of each of these retractions).
    pub retractions_of: Vec<MorId>,
    /// All s with s·f = id (f is a retraction of each of these sections).
    pub sections_of: Vec<MorId>,
}

/// Mono/epi by quantification over all parallel pairs, iso by exhaustive
/// inverse search, section/retraction lists complete.
pub fn classify(cat: &FinCat, f: MorId) -> Result<MorphismClassification> {
    if f.0 >= cat.morphism_count() {
        return Err(Error::UnknownMorphism(format!("#{}", f.0)));
    }
    let (a, b) = (cat.dom(f), cat.cod(f));

    let mut is_mono = true;
    'mono: for z in cat.objects() {
        let hom = cat.hom(z, a);
        for (i, &g1) in hom.iter().enumerate() {
            for &g2 in &hom[i + 1..] {
                if cat.compose(g1, f)? == cat.compose(g2, f)? {
                    is_mono = false;
                    break 'mono;
                }
            }
        }
    }

    let mut is_epi = true;
    'epi: for z in cat.objects() {
        let hom = cat.hom(b, z);
        for (i, &g1) in hom.iter().enumerate() {
            for &g2 in &hom[i + 1..] {
                if cat.compose(f, g1)? == cat.compose(f, g2)? {
                    is_epi = false;
                    break 'epi;
                }
            }
        }
    }

    let mut retractions_of = Vec::new();
    let mut sections_of = Vec::new();
    let mut inverse = None;
    for &g in cat.hom(b, a) {
        let fg_is_id = cat.compose(f, g)? == cat.identity(a);
        let gf_is_id = cat.compose(g, f)? == cat.identity(b);
        if fg_is_id {
            retractions_of.push(g);
        }
        if gf_is_id {
            sections_of.push(g);
        }
        if fg_is_id && gf_is_id && inverse.is_none() {
            inverse = Some(g);
        }
    }
    Ok(MorphismClassification {
        is_mono,
        is_epi,
        is_iso: inverse.is_some(),
        inverse,
        retractions_of,
        sections_of,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    Initial,
    Terminal,
}

/// The result of a universal-object search.
#[derive(Debug, Clone)]
pub struct UniversalWitness {
    pub kind: Polarity,
    /// All qualifying objects, in enumeration order.
    pub objects: Vec<ObjId>,
    /// For each qualifying object X and every object Y: the unique morphism
    /// X→Y (initial) or Y→X (terminal).
    pub mediating: BTreeMap<(ObjId, ObjId), MorId>,
    /// For each ordered pair of qualifying objects: the canonical iso between
    /// them, i.e. the unique mediating morphism.
    pub canonical_isos: BTreeMap<(ObjId, ObjId), MorId>,
}

/// Objects with exactly one morphism to (initial) or from (terminal) every
/// object. Canonical isos between multiple witnesses are the unique
/// mediating morphisms themselves.
pub fn find_universal(cat: &FinCat, kind: Polarity) -> UniversalWitness {
    let mut objects = Vec::new();
    let mut mediating = BTreeMap::new();
    for x in cat.objects() {
        let ok = cat.objects().all(|y| {
            let hom = match kind {
                Polarity::Initial => cat.hom(x, y),
                Polarity::Terminal => cat.hom(y, x),
            };
            hom.len() == 1
        });
        if ok {
            for y in cat.objects() {
                let hom = match kind {
                    Polarity::Initial => cat.hom(x, y),
                    Polarity::Terminal => cat.hom(y, x),
                };
                mediating.insert((x, y), hom[0]);
            }
            objects.push(x);
        }
    }
    let mut canonical_isos = BTreeMap::new();
    for &x in &objects {
        for &y in &objects {
            // unique X→Y regardless of polarity: as mediating morphism of the
            // initial one or into the terminal one
            let m = match kind {
                Polarity::Initial => mediating[&(x, y)],
                Polarity::Terminal => mediating[&(y, x)],
            };
            canonical_isos.insert((x, y), m);
        }
    }
    UniversalWitness {
        kind,
        objects,
        mediating,
        canonical_isos,
    }
}

/// Verify the uniqueness-up-to-unique-iso package for a witness:
/// canonical isos compose to identities pairwise, each is the only morphism
/// in its hom-set, and transporting the property along *any* iso out of a
/// universal object re-verifies it.
pub fn verify_uniqueness(cat: &FinCat, w: &UniversalWitness) -> Result<Report> {
    for &x in &w.objects {
        for &y in &w.objects {
            let i = w.canonical_isos[&(x, y)];
            let j = w.canonical_isos[&(y, x)];
            if cat.compose(i, j)? != cat.identity(x) || cat.compose(j, i)? != cat.identity(y) {
                return Ok(Report::fail(
                    "universal objects: canonical isos",
                    vec![
                        witness("object X", cat.object_name(x)),
                        witness("object X'", cat.object_name(y)),
                        witness("i", cat.morphism_name(i)),
                        witness("j", cat.morphism_name(j)),
                    ],
                ));
            }
            // uniqueness of the iso: the entire hom-set is a singleton
            let hom = cat.hom(x, y);
            if hom.len() != 1 {
                return Ok(Report::fail(
                    "universal objects: unique iso",
                    vec![
                        witness("object X", cat.object_name(x)),
                        witness("object X'", cat.object_name(y)),
                        witness("hom size", hom.len()),
                    ],
                ));
            }
        }
    }
    // transport along arbitrary isos
    for &x in &w.objects {
        for f in cat.outgoing(x).to_vec() {
            let cls = classify(cat, f)?;
            if !cls.is_iso {
                continue;
            }
            let y = cat.cod(f);
            let ok = cat.objects().all(|z| {
                let hom = match w.kind {
                    Polarity::Initial => cat.hom(y, z),
                    Polarity::Terminal => cat.hom(z, y),
                };
                hom.len() == 1
            });
            if !ok {
                return Ok(Report::fail(
                    "universal property transported along iso",
                    vec![
                        witness("universal object", cat.object_name(x)),
                        witness("iso", cat.morphism_name(f)),
                        witness("target", cat.object_name(y)),
                    ],
                ));
            }
        }
    }
    Ok(Report::pass("uniqueness up to unique iso").with_detail(format!(
        "{} qualifying object(s), all pairwise isos verified",
        w.objects.len()
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinaryKind {
    Product,
    Coproduct,
}

/// A (co)cone over a fixed pair of objects, as found by [`find_binary`].
#[derive(Debug, Clone)]
pub struct BinaryWitness {
    pub kind: BinaryKind,
    /// Qualifying apex objects with their two legs.
    pub cones: Vec<(ObjId, MorId, MorId)>,
    /// Canonical isos between qualifying apexes, indexed like
    /// [`UniversalWitness::canonical_isos`].
    pub canonical_isos: BTreeMap<(usize, usize), MorId>,
}

/// The category of cones over (A, B): objects are spans `(P, pl, pr)`,
/// morphisms are base morphisms commuting with both legs. A product of A and
/// B is exactly a terminal object here (dually for cocones/coproducts).
pub struct ConeCategory {
    pub cat: FinCat,
    /// For each cone-category object: (apex, left leg, right leg) in the base.
    pub spans: Vec<(ObjId, MorId, MorId)>,
    /// For each cone-category morphism: the base morphism it came from.
    pub base_mor: Vec<MorId>,
}

/// Default guard on the number of composable pairs the materialized cone
/// category may hold. Overridable through `CATTOOL_MAX_SEARCH`.
pub const DEFAULT_MAX_SEARCH: usize = 4_000_000;

fn search_guard(explicit: Option<usize>) -> usize {
    explicit
        .or_else(|| {
            std::env::var("CATTOOL_MAX_SEARCH")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_MAX_SEARCH)
}

/// Materialize the cone (or cocone) category over `(a, b)`.
pub fn cone_category(
    cat: &FinCat,
    kind: BinaryKind,
    a: ObjId,
    b: ObjId,
    max_search: Option<usize>,
) -> Result<ConeCategory> {
    // Cones: (P, pl: P→A, pr: P→B); morphism (P,..)→(Q, ql, qr) is f: P→Q
    // with f·ql = pl and f·qr = pr.
    // Cocones: (C, il: A→C, ir: B→C); morphism (C,..)→(D, jl, jr) is f: C→D
    // with il·f = jl and ir·f = jr.
    let mut spans = Vec::new();
    for p in cat.objects() {
        let (left, right) = match kind {
            BinaryKind::Product => (cat.hom(p, a), cat.hom(p, b)),
            BinaryKind::Coproduct => (cat.hom(a, p), cat.hom(b, p)),
        };
        for &pl in left {
            for &pr in right {
                spans.push((p, pl, pr));
            }
        }
    }
    // Estimate the comp-table size before building: composable pairs in the
    // cone category = for each base composable pair (f, g), one entry per
    // span structure on the far end.
    let mut span_count_per_obj = vec![0usize; cat.object_count()];
    for &(p, _, _) in &spans {
        span_count_per_obj[p.0] += 1;
    }
    let mut estimated = 0usize;
    for y in cat.objects() {
        for &g in cat.outgoing(y) {
            let weight = match kind {
                BinaryKind::Product => span_count_per_obj[cat.cod(g).0],
                BinaryKind::Coproduct => span_count_per_obj[y.0],
            };
            estimated = estimated.saturating_add(cat.incoming(y).len().saturating_mul(weight));
        }
    }
    let guard = search_guard(max_search);
    if estimated > guard {
        return Err(Error::size_limit("cone category", estimated, guard));
    }

    let span_index: BTreeMap<(ObjId, MorId, MorId), usize> = spans
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i))
        .collect();
    let objects: Vec<String> = spans
        .iter()
        .map(|&(p, l, r)| {
            format!(
                "({},{},{})",
                cat.object_name(p),
                cat.morphism_name(l),
                cat.morphism_name(r)
            )
        })
        .collect();
    let mut mors: Vec<MorData> = Vec::new();
    let mut base_mor: Vec<MorId> = Vec::new();
    let mut identities = vec![MorId(0); spans.len()];
    let mut mor_index: BTreeMap<(usize, usize, MorId), MorId> = BTreeMap::new();
    for (si, &(p, pl, pr)) in spans.iter().enumerate() {
        match kind {
            BinaryKind::Product => {
                // source cone fixed, enumerate f out of its apex; target cone
                // is forced to (cod f, ql, qr) for each compatible (ql, qr):
                // i.e. for each f: P→Q and each span on Q with f·ql = pl.
                for &f in cat.outgoing(p) {
                    let q = cat.cod(f);
                    for &ql in cat.hom(q, a) {
                        if cat.compose(f, ql)? != pl {
                            continue;
                        }
                        for &qr in cat.hom(q, b) {
                            if cat.compose(f, qr)? != pr {
                                continue;
                            }
                            let ti = span_index[&(q, ql, qr)];
                            let id = MorId(mors.len());
                            mor_index.insert((si, ti, f), id);
                            mors.push(MorData {
                                name: format!("{}[{}→{}]", cat.morphism_name(f), si, ti),
                                dom: ObjId(si),
                                cod: ObjId(ti),
                            });
                            base_mor.push(f);
                            if si == ti && f == cat.identity(p) {
                                identities[si] = id;
                            }
                        }
                    }
                }
            }
            BinaryKind::Coproduct => {
                for &f in cat.outgoing(p) {
                    let q = cat.cod(f);
                    let jl = cat.compose(pl, f)?;
                    let jr = cat.compose(pr, f)?;
                    let ti = span_index[&(q, jl, jr)];
                    let id = MorId(mors.len());
                    mor_index.insert((si, ti, f), id);
                    mors.push(MorData {
                        name: format!("{}[{}→{}]", cat.morphism_name(f), si, ti),
                        dom: ObjId(si),
                        cod: ObjId(ti),
                    });
                    base_mor.push(f);
                    if si == ti && f == cat.identity(p) {
                        identities[si] = id;
                    }
                }
            }
        }
    }
    let doms: Vec<usize> = mors.iter().map(|m| m.dom.0).collect();
    let cods: Vec<usize> = mors.iter().map(|m| m.cod.0).collect();
    let base = base_mor.clone();
    let cone = FinCat::from_fn(objects, mors, identities, |f, g| {
        let composite = cat
            .compose(base[f.0], base[g.0])
            .expect("cone morphisms compose in the base");
        mor_index[&(doms[f.0], cods[g.0], composite)]
    })?;
    Ok(ConeCategory {
        cat: cone,
        spans,
        base_mor,
    })
}

/// Find all binary (co)products of `(a, b)` by running the terminal-object
/// (resp. initial-object) search in the materialized cone category.
pub fn find_binary(
    cat: &FinCat,
    kind: BinaryKind,
    a: ObjId,
    b: ObjId,
    max_search: Option<usize>,
) -> Result<BinaryWitness> {
    let cone = cone_category(cat, kind, a, b, max_search)?;
    let polarity = match kind {
        BinaryKind::Product => Polarity::Terminal,
        BinaryKind::Coproduct => Polarity::Initial,
    };
    let uni = find_universal(&cone.cat, polarity);
    let cones: Vec<(ObjId, MorId, MorId)> = uni.objects.iter().map(|&o| cone.spans[o.0]).collect();
    let mut canonical_isos = BTreeMap::new();
    for (i, &x) in uni.objects.iter().enumerate() {
        for (j, &y) in uni.objects.iter().enumerate() {
            canonical_isos.insert((i, j), cone.base_mor[uni.canonical_isos[&(x, y)].0]);
        }
    }
    Ok(BinaryWitness {
        kind,
        cones,
        canonical_isos,
    })
}

/// A chosen product for every pair of objects: apex and both projections.
#[derive(Debug, Clone, Default)]
pub struct ChosenProducts {
    pub table: BTreeMap<(ObjId, ObjId), (ObjId, MorId, MorId)>,
}

impl ChosenProducts {
    pub fn get(&self, cat: &FinCat, a: ObjId, b: ObjId) -> Result<(ObjId, MorId, MorId)> {
        self.table.get(&(a, b)).copied().ok_or_else(|| {
            Error::MissingChosenProduct(cat.object_name(a).into(), cat.object_name(b).into())
        })
    }

    /// The unique mediating morphism `⟨q1, q2⟩` into the chosen product,
    /// found by exhaustive scan; errors if it is not unique (i.e. the chosen
    /// data is not actually a product).
    pub fn pair(
        &self,
        cat: &FinCat,
        a: ObjId,
        b: ObjId,
        q1: MorId,
        q2: MorId,
    ) -> Result<MorId> {
        let (p, pl, pr) = self.get(cat, a, b)?;
        let q = cat.dom(q1);
        if cat.dom(q2) != q {
            return Err(Error::structural("pairing", "legs have different domains"));
        }
        let mut found = None;
        for &h in cat.hom(q, p) {
            if cat.compose(h, pl)? == q1 && cat.compose(h, pr)? == q2 {
                if found.is_some() {
                    return Err(Error::structural(
                        "pairing",
                        "mediating morphism is not unique; chosen data is not a product",
                    ));
                }
                found = Some(h);
            }
        }
        found.ok_or_else(|| Error::structural("pairing", "no mediating morphism exists"))
    }
}

/// Choose the canonical product cone for every pair of objects that has one,
/// using [`find_binary`] and taking the first universal cone.
pub fn choose_products(cat: &FinCat, max_search: Option<usize>) -> Result<ChosenProducts> {
    let mut table = BTreeMap::new();
    for a in cat.objects() {
        for b in cat.objects() {
            let w = find_binary(cat, BinaryKind::Product, a, b, max_search)?;
            if let Some(&(p, pl, pr)) = w.cones.first() {
                table.insert((a, b), (p, pl, pr));
            }
        }
    }
    Ok(ChosenProducts { table })
}

/// `f × g : A×B → C×D`, the unique mediating morphism with
/// `(f×g)·πl' = πl·f` and `(f×g)·πr' = πr·g`.
pub fn product_of_morphisms(
    cat: &FinCat,
    chosen: &ChosenProducts,
    f: MorId,
    g: MorId,
) -> Result<MorId> {
    let (a, c) = (cat.dom(f), cat.cod(f));
    let (b, d) = (cat.dom(g), cat.cod(g));
    let (_, pl, pr) = chosen.get(cat, a, b)?;
    let q1 = cat.compose(pl, f)?;
    let q2 = cat.compose(pr, g)?;
    chosen.pair(cat, c, d, q1, q2)
}

/// The braiding `⟨πr, πl⟩ : A×B → B×A`. Always an isomorphism, with the
/// symmetric construction as its inverse.
pub fn swap_iso(cat: &FinCat, chosen: &ChosenProducts, a: ObjId, b: ObjId) -> Result<MorId> {
    let (_, pl, pr) = chosen.get(cat, a, b)?;
    chosen.pair(cat, b, a, pr, pl)
}
