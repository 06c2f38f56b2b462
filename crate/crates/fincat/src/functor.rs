//! Functors between materialized categories, natural transformations,
//! functor categories, and the classification toolkit (full, faithful,
//! essentially surjective, isomorphism, equivalence).
//!
//! Equivalence is decided constructively on finite data: a quasi-inverse is
//! built from first-found isos and then every required law is checked
//! exhaustively. No choice principle, no unverified claims.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{FinCat, MorData, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::{witness, Report};

/// A functor between two materialized categories, as explicit tables.
#[derive(Debug, Clone)]
pub struct Functor {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl Functor {
    pub fn identity(cat: &Arc<FinCat>) -> Functor {
        Functor {
            source: cat.clone(),
            target: cat.clone(),
            obj_map: cat.objects().collect(),
            mor_map: cat.morphisms().collect(),
        }
    }

    pub fn on_obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn on_mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    /// Structural typing: maps are total and `mor_map` respects dom/cod
    /// under `obj_map`. Violations are errors, not law failures.
    pub fn validate(&self) -> Result<()> {
        if self.obj_map.len() != self.source.object_count() {
            return Err(Error::structural("functor", "object map is not total"));
        }
        if self.mor_map.len() != self.source.morphism_count() {
            return Err(Error::structural("functor", "morphism map is not total"));
        }
        if let Some(&x) = self.obj_map.iter().find(|x| x.0 >= self.target.object_count()) {
            return Err(Error::structural("functor", format!("object image #{} unknown", x.0)));
        }
        for f in self.source.morphisms() {
            let img = self.mor_map[f.0];
            if img.0 >= self.target.morphism_count() {
                return Err(Error::structural(
                    "functor",
                    format!("image of `{}` is unknown", self.source.morphism_name(f)),
                ));
            }
            let want_dom = self.obj_map[self.source.dom(f).0];
            let want_cod = self.obj_map[self.source.cod(f).0];
            if self.target.dom(img) != want_dom || self.target.cod(img) != want_cod {
                return Err(Error::structural(
                    "functor",
                    format!(
                        "image of `{}` has the wrong type: wanted {}→{}, got {}",
                        self.source.morphism_name(f),
                        self.target.object_name(want_dom),
                        self.target.object_name(want_cod),
                        self.target.describe(img),
                    ),
                ));
            }
        }
        Ok(())
    }

    /// Diagrammatic composition of functors: `self`, then `other`.
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            obj_map: self.obj_map.iter().map(|&x| other.obj_map[x.0]).collect(),
            mor_map: self.mor_map.iter().map(|&f| other.mor_map[f.0]).collect(),
        }
    }
}

/// `F(id) = id` and `F(f·g) = F(f)·F(g)`, exhaustively; counterexample on
/// failure. Ill-typed maps error out before any law is consulted.
pub fn check_functor(f: &Functor) -> Result<Report> {
    f.validate()?;
    for x in f.source.objects() {
        let img = f.on_mor(f.source.identity(x));
        let want = f.target.identity(f.on_obj(x));
        if img != want {
            return Ok(Report::fail(
                "functor preserves identity",
                vec![
                    witness("object", f.source.object_name(x)),
                    witness("F(id)", f.target.morphism_name(img)),
                    witness("id_{F X}", f.target.morphism_name(want)),
                ],
            ));
        }
    }
    for y in f.source.objects() {
        for &p in f.source.incoming(y) {
            for &q in f.source.outgoing(y) {
                let lhs = f.on_mor(f.source.compose(p, q)?);
                let rhs = f.target.compose(f.on_mor(p), f.on_mor(q))?;
                if lhs != rhs {
                    return Ok(Report::fail(
                        "functor preserves composition",
                        vec![
                            witness("morphism f", f.source.morphism_name(p)),
                            witness("morphism g", f.source.morphism_name(q)),
                            witness("F(f·g)", f.target.morphism_name(lhs)),
                            witness("F(f)·F(g)", f.target.morphism_name(rhs)),
                        ],
                    ));
                }
            }
        }
    }
    Ok(Report::pass("functor laws"))
}

/// A natural transformation between parallel functors, as a component table.
#[derive(Debug, Clone)]
pub struct NatTrans {
    pub from: Functor,
    pub to: Functor,
    /// `components[X] ∈ Hom(F X, G X)` in the target category.
    pub components: Vec<MorId>,
}

impl NatTrans {
    pub fn identity(f: &Functor) -> NatTrans {
        NatTrans {
            from: f.clone(),
            to: f.clone(),
            components: f.obj_map.iter().map(|&x| f.target.identity(x)).collect(),
        }
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }
}

/// For every `f : X → Y` checks `α_X · G(f) = F(f) · α_Y`; the counterexample
/// names `f`.
pub fn check_naturality(alpha: &NatTrans) -> Result<Report> {
    let (f, g) = (&alpha.from, &alpha.to);
    let d = &f.target;
    if alpha.components.len() != f.source.object_count() {
        return Err(Error::structural(
            "natural transformation",
            "a component is missing for some object",
        ));
    }
    for x in f.source.objects() {
        let c = alpha.components[x.0];
        if d.dom(c) != f.on_obj(x) || d.cod(c) != g.on_obj(x) {
            return Err(Error::structural(
                "natural transformation",
                format!(
                    "component at {} must lie in Hom(F X, G X); got {}",
                    f.source.object_name(x),
                    d.describe(c)
                ),
            ));
        }
    }
    for m in f.source.morphisms() {
        let (x, y) = (f.source.dom(m), f.source.cod(m));
        let lhs = d.compose(alpha.components[x.0], g.on_mor(m))?;
        let rhs = d.compose(f.on_mor(m), alpha.components[y.0])?;
        if lhs != rhs {
            return Ok(Report::fail(
                "naturality square",
                vec![
                    witness("morphism f", f.source.morphism_name(m)),
                    witness("α_X·G(f)", d.morphism_name(lhs)),
                    witness("F(f)·α_Y", d.morphism_name(rhs)),
                ],
            ));
        }
    }
    Ok(Report::pass("naturality"))
}

/// Vertical composition: componentwise.
pub fn vcompose(alpha: &NatTrans, beta: &NatTrans) -> Result<NatTrans> {
    if alpha.to.obj_map != beta.from.obj_map || alpha.to.mor_map != beta.from.mor_map {
        return Err(Error::structural("vcompose", "middle functors disagree"));
    }
    let d = &alpha.from.target;
    let components = alpha
        .components
        .iter()
        .zip(&beta.components)
        .map(|(&a, &b)| d.compose(a, b))
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        from: alpha.from.clone(),
        to: beta.to.clone(),
        components,
    })
}

/// Horizontal composition (Godement product) of `α : F ⇒ G` (C→D) with
/// `β : F̃ ⇒ G̃` (D→E): component at X is `F̃(α_X) · β_{G X}`.
pub fn hcompose(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
    let (f_tilde, g_tilde) = (&beta.from, &beta.to);
    let e = &f_tilde.target;
    let components = alpha
        .from
        .source
        .objects()
        .map(|x| {
            e.compose(
                f_tilde.on_mor(alpha.components[x.0]),
                beta.components[alpha.to.on_obj(x).0],
            )
        })
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        from: alpha.from.then(f_tilde),
        to: alpha.to.then(g_tilde),
        components,
    })
}

/// The alternate formula for the Godement product: `β_{F X} · G̃(α_X)`.
/// Must agree with [`hcompose`] pointwise.
pub fn hcompose_alt(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
    let (f_tilde, g_tilde) = (&beta.from, &beta.to);
    let e = &f_tilde.target;
    let components = alpha
        .from
        .source
        .objects()
        .map(|x| {
            e.compose(
                beta.components[alpha.from.on_obj(x).0],
                g_tilde.on_mor(alpha.components[x.0]),
            )
        })
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        from: alpha.from.then(f_tilde),
        to: alpha.to.then(g_tilde),
        components,
    })
}

/// A materialized functor category `[C, D]` together with the functor and
/// transformation each object and morphism stands for.
pub struct FunctorCategory {
    pub cat: FinCat,
    pub functors: Vec<Functor>,
    pub transformations: Vec<NatTrans>,
}

/// Enumerate all law-abiding functors `C → D`.
///
/// The candidate space is `|Ob D|^|Ob C|` object maps times, per object map,
/// the product of hom-set sizes at every non-identity morphism; the `guard`
/// bounds that count (default 10^6).
pub fn all_functors(c: &Arc<FinCat>, d: &Arc<FinCat>, guard: Option<usize>) -> Result<Vec<Functor>> {
    let guard = guard.unwrap_or(1_000_000);
    let non_ids: Vec<MorId> = c.morphisms().filter(|&m| !c.is_identity(m)).collect();
    // candidate-count estimate
    let mut total: usize = 0;
    let obj_maps = d.object_count().checked_pow(c.object_count() as u32);
    let Some(obj_maps) = obj_maps else {
        return Err(Error::size_limit("functor enumeration", usize::MAX, guard));
    };
    let mut stack = vec![0usize; c.object_count()];
    let mut done = c.object_count() == 0;
    let mut first = true;
    // walk object maps in lexicographic order
    let mut result = Vec::new();
    let _ = obj_maps;
    loop {
        if done && !first {
            break;
        }
        first = false;
        // per-object-map candidate count
        let mut count: usize = 1;
        for &m in &non_ids {
            let h = d
                .hom(ObjId(stack[c.dom(m).0]), ObjId(stack[c.cod(m).0]))
                .len();
            count = count.saturating_mul(h);
            if count == 0 {
                break;
            }
        }
        total = total.saturating_add(count.max(1));
        if total > guard {
            return Err(Error::size_limit("functor enumeration", total, guard));
        }
        if count > 0 {
            // enumerate morphism images
            let choices: Vec<&[MorId]> = non_ids
                .iter()
                .map(|&m| d.hom(ObjId(stack[c.dom(m).0]), ObjId(stack[c.cod(m).0])))
                .collect();
            let mut pick = vec![0usize; non_ids.len()];
            'mors: loop {
                let mut mor_map: Vec<MorId> = vec![MorId(0); c.morphism_count()];
                for x in c.objects() {
                    mor_map[c.identity(x).0] = d.identity(ObjId(stack[x.0]));
                }
                for (k, &m) in non_ids.iter().enumerate() {
                    mor_map[m.0] = choices[k][pick[k]];
                }
                let cand = Functor {
                    source: c.clone(),
                    target: d.clone(),
                    obj_map: stack.iter().map(|&o| ObjId(o)).collect(),
                    mor_map,
                };
                if check_functor(&cand)?.passed() {
                    result.push(cand);
                }
                // next pick
                let mut k = non_ids.len();
                loop {
                    if k == 0 {
                        break 'mors;
                    }
                    k -= 1;
                    pick[k] += 1;
                    if pick[k] < choices[k].len() {
                        break;
                    }
                    pick[k] = 0;
                }
            }
        }
        // next object map
        let mut i = c.object_count();
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            stack[i] += 1;
            if stack[i] < d.object_count() {
                break;
            }
            stack[i] = 0;
        }
        if done {
            break;
        }
    }
    Ok(result)
}

/// Enumerate all natural transformations `F ⇒ G`.
pub fn all_nat_trans(f: &Functor, g: &Functor) -> Result<Vec<NatTrans>> {
    let d = &f.target;
    let choices: Vec<&[MorId]> = f
        .source
        .objects()
        .map(|x| d.hom(f.on_obj(x), g.on_obj(x)))
        .collect();
    if choices.iter().any(|h| h.is_empty()) {
        return Ok(Vec::new());
    }
    let mut pick = vec![0usize; choices.len()];
    let mut out = Vec::new();
    loop {
        let cand = NatTrans {
            from: f.clone(),
            to: g.clone(),
            components: pick.iter().enumerate().map(|(i, &k)| choices[i][k]).collect(),
        };
        if check_naturality(&cand)?.passed() {
            out.push(cand);
        }
        let mut i = choices.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// Materialize `[C, D]`: objects are all law-abiding functors, morphisms all
/// natural transformations, composition is vertical composition.
pub fn functor_category(c: &Arc<FinCat>, d: &Arc<FinCat>, guard: Option<usize>) -> Result<FunctorCategory> {
    let functors = all_functors(c, d, guard)?;
    let mut mors: Vec<MorData> = Vec::new();
    let mut transformations: Vec<NatTrans> = Vec::new();
    let mut identities = vec![MorId(0); functors.len()];
    let mut index: BTreeMap<(usize, usize, Vec<MorId>), MorId> = BTreeMap::new();
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for t in all_nat_trans(f, g)? {
                let id = MorId(mors.len());
                index.insert((i, j, t.components.clone()), id);
                mors.push(MorData {
                    name: format!(
                        "nt{}[F{}⇒F{}]",
                        mors.len(),
                        i,
                        j
                    ),
                    dom: ObjId(i),
                    cod: ObjId(j),
                });
                if i == j && t.components == NatTrans::identity(f).components {
                    identities[i] = id;
                }
                transformations.push(t);
            }
        }
    }
    let objects: Vec<String> = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let trans = transformations.clone();
    let doms: Vec<usize> = mors.iter().map(|m| m.dom.0).collect();
    let cods: Vec<usize> = mors.iter().map(|m| m.cod.0).collect();
    let cat = FinCat::from_fn(objects, mors, identities, |a, b| {
        let v = vcompose(&trans[a.0], &trans[b.0]).expect("vertical composition is well-typed");
        index[&(doms[a.0], cods[b.0], v.components)]
    })?;
    Ok(FunctorCategory {
        cat,
        functors,
        transformations,
    })
}

/// Classification flags for a functor, per the finite-data characterizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorFlags {
    pub injective_on_objects: bool,
    pub surjective_on_objects: bool,
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
    /// Equivalent to the first four flags together.
    pub is_isomorphism: bool,
    /// Verified constructively; see [`quasi_inverse`].
    pub is_equivalence: bool,
    /// A pair of distinct objects with the same image, when one exists.
    pub non_injective_witness: Option<(ObjId, ObjId)>,
}

fn find_iso(cat: &FinCat, a: ObjId, b: ObjId) -> Option<(MorId, MorId)> {
    for &f in cat.hom(a, b) {
        for &g in cat.hom(b, a) {
            if cat.compose(f, g).ok()? == cat.identity(a) && cat.compose(g, f).ok()? == cat.identity(b) {
                return Some((f, g));
            }
        }
    }
    None
}

/// The verified quasi-inverse package of an equivalence.
pub struct EquivalenceData {
    pub g: Functor,
    /// η : Id_C ⇒ F·G, componentwise isomorphisms.
    pub unit: NatTrans,
    /// ε : G·F ⇒ Id_D, componentwise isomorphisms.
    pub counit: NatTrans,
}

/// Construct a quasi-inverse for `f` from first-found isos and verify all
/// laws. Returns `None` when `f` is not an equivalence.
pub fn quasi_inverse(f: &Functor) -> Result<Option<EquivalenceData>> {
    let (c, d) = (&f.source, &f.target);
    // choose s(d) and an iso ε_d : F(s d) ≅ d for every target object
    let mut s = Vec::new();
    let mut eps = Vec::new();
    let mut eps_inv = Vec::new();
    for y in d.objects() {
        let found = c.objects().find_map(|x| {
            find_iso(d, f.on_obj(x), y).map(|(i, j)| (x, i, j))
        });
        let Some((x, i, j)) = found else {
            return Ok(None); // not essentially surjective
        };
        s.push(x);
        eps.push(i);
        eps_inv.push(j);
    }
    // G on morphisms: unique preimage of ε_d · g · ε_{d'}⁻¹ under F
    let mut g_mor = vec![MorId(0); d.morphism_count()];
    for m in d.morphisms() {
        let (y, y2) = (d.dom(m), d.cod(m));
        let conjugated = d.compose(d.compose(eps[y.0], m)?, eps_inv[y2.0])?;
        let mut pre = None;
        for &cand in c.hom(s[y.0], s[y2.0]) {
            if f.on_mor(cand) == conjugated {
                if pre.is_some() {
                    return Ok(None); // not faithful
                }
                pre = Some(cand);
            }
        }
        let Some(pre) = pre else {
            return Ok(None); // not full
        };
        g_mor[m.0] = pre;
    }
    let g = Functor {
        source: d.clone(),
        target: c.clone(),
        obj_map: s,
        mor_map: g_mor,
    };
    if !check_functor(&g)?.passed() {
        return Ok(None);
    }
    // counit ε : G·F ⇒ Id_D, component at y is ε_y itself
    let counit = NatTrans {
        from: g.then(f),
        to: Functor::identity(d),
        components: eps.clone(),
    };
    if !check_naturality(&counit)?.passed() {
        return Ok(None);
    }
    // unit η : Id_C ⇒ F·G, component at x = unique preimage of ε_{F x}⁻¹
    let mut unit_components = Vec::new();
    for x in c.objects() {
        let fx = f.on_obj(x);
        let want = eps_inv[fx.0];
        let mut pre = None;
        for &cand in c.hom(x, g.on_obj(fx)) {
            if f.on_mor(cand) == want {
                pre = Some(cand);
                break;
            }
        }
        let Some(pre) = pre else { return Ok(None) };
        unit_components.push(pre);
    }
    let unit = NatTrans {
        from: Functor::identity(c),
        to: f.then(&g),
        components: unit_components,
    };
    if !check_naturality(&unit)?.passed() {
        return Ok(None);
    }
    // every component must be an isomorphism
    let all_iso = unit
        .components
        .iter()
        .enumerate()
        .all(|(x, &m)| find_iso(c, ObjId(x), c.cod(m)).map_or(false, |(i, _)| {
            let _ = i;
            crate::queries::classify(c, m).map(|cl| cl.is_iso).unwrap_or(false)
        }))
        && counit
            .components
            .iter()
            .all(|&m| crate::queries::classify(d, m).map(|cl| cl.is_iso).unwrap_or(false));
    if !all_iso {
        return Ok(None);
    }
    Ok(Some(EquivalenceData { g, unit, counit }))
}

/// Classify a functor: injectivity/surjectivity on objects, full, faithful,
/// essentially surjective, isomorphism (the conjunction of the first four),
/// and equivalence (constructively verified).
pub fn classify_functor(f: &Functor) -> Result<FunctorFlags> {
    f.validate()?;
    let (c, d) = (&f.source, &f.target);
    let mut non_injective_witness = None;
    'obj: for x in c.objects() {
        for y in c.objects() {
            if x < y && f.on_obj(x) == f.on_obj(y) {
                non_injective_witness = Some((x, y));
                break 'obj;
            }
        }
    }
    let surjective_on_objects = d
        .objects()
        .all(|y| c.objects().any(|x| f.on_obj(x) == y));
    let mut full = true;
    let mut faithful = true;
    for x in c.objects() {
        for y in c.objects() {
            let hom = c.hom(x, y);
            let images: Vec<MorId> = hom.iter().map(|&m| f.on_mor(m)).collect();
            for (i, a) in images.iter().enumerate() {
                if images[i + 1..].contains(a) {
                    faithful = false;
                }
            }
            for &t in d.hom(f.on_obj(x), f.on_obj(y)) {
                if !images.contains(&t) {
                    full = false;
                }
            }
        }
    }
    let essentially_surjective = d
        .objects()
        .all(|y| c.objects().any(|x| find_iso(d, f.on_obj(x), y).is_some()));
    let is_isomorphism =
        non_injective_witness.is_none() && surjective_on_objects && full && faithful;
    let is_equivalence = quasi_inverse(f)?.is_some();
    Ok(FunctorFlags {
        injective_on_objects: non_injective_witness.is_none(),
        surjective_on_objects,
        full,
        faithful,
        essentially_surjective,
        is_isomorphism,
        is_equivalence,
        non_injective_witness,
    })
}

/// The comparison functor from the finite-set universe to the ordinal
/// universe: a set goes to the ordinal of its size, and a function goes to
/// its value table conjugated along the canonical rank bijections.
///
/// The rank bijection `φ^X` sorts the elements of `X`, so on canonical
/// carriers the conjugation is content-free and `U(f)` is just `f`'s table.
/// `U` is full, faithful and essentially surjective but not injective on
/// objects: distinct equinumerous sets share an image.
pub struct SetToOrd {
    pub finset: crate::builders::Universe,
    pub finord: crate::builders::Universe,
    pub functor: Functor,
}

pub fn finset_to_finord(n: usize) -> Result<SetToOrd> {
    let finset = crate::builders::universe_category(crate::builders::UniverseKind::FinSet, n)?;
    let finord = crate::builders::universe_category(crate::builders::UniverseKind::FinOrd, n)?;
    let src = Arc::new(finset.cat.clone());
    let tgt = Arc::new(finord.cat.clone());
    let obj_map: Vec<ObjId> = finset
        .carriers
        .iter()
        .map(|c| tgt.object_by_name(&format!("[{}]", c.size)).expect("ordinal exists"))
        .collect();
    let mor_map: Vec<MorId> = src
        .morphisms()
        .map(|m| {
            let (a, b) = (src.dom(m), src.cod(m));
            finord
                .morphism_of_table(obj_map[a.0], obj_map[b.0], &finset.tables[m.0].table)
                .expect("every table exists in the ordinal universe")
        })
        .collect();
    let functor = Functor {
        source: src,
        target: tgt,
        obj_map,
        mor_map,
    };
    Ok(SetToOrd {
        finset,
        finord,
        functor,
    })
}
