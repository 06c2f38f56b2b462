//! Contravariant functors, stored with an explicit direction flag, and the
//! inverse-image powerset functor.
//!
//! Both views from the notes coexist: a contravariant functor `C → D` is the
//! same data as a covariant functor `C^op → D`, and an adapter converts
//! between them. The adapter is exact because [`FinCat::opposite`] keeps
//! morphism ids stable.

use std::sync::Arc;

use crate::cat::{FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::finset::{all_functions, FinFun, FinSet};
use crate::functor::Functor;
use crate::report::{witness, Report};

/// A contravariant functor: `mor_map(f) : F(cod f) → F(dom f)`.
#[derive(Debug, Clone)]
pub struct Contravariant {
    pub source: Arc<FinCat>,
    pub target: Arc<FinCat>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl Contravariant {
    /// View as a covariant functor out of the opposite category. The caller
    /// supplies `op`, which must be `source.opposite()` (shared so ids align).
    pub fn as_functor_from_opposite(&self, op: &Arc<FinCat>) -> Functor {
        Functor {
            source: op.clone(),
            target: self.target.clone(),
            obj_map: self.obj_map.clone(),
            mor_map: self.mor_map.clone(),
        }
    }

    /// Recover the contravariant view from a covariant functor on the
    /// opposite category.
    pub fn from_functor_on_opposite(original: &Arc<FinCat>, f: &Functor) -> Contravariant {
        Contravariant {
            source: original.clone(),
            target: f.target.clone(),
            obj_map: f.obj_map.clone(),
            mor_map: f.mor_map.clone(),
        }
    }

    /// `F(id) = id` and `F(f·g) = F(g)·F(f)`, exhaustively.
    pub fn check(&self) -> Result<Report> {
        let (c, d) = (&self.source, &self.target);
        for f in c.morphisms() {
            let img = self.mor_map[f.0];
            let want_dom = self.obj_map[c.cod(f).0];
            let want_cod = self.obj_map[c.dom(f).0];
            if d.dom(img) != want_dom || d.cod(img) != want_cod {
                return Err(Error::structural(
                    "contravariant functor",
                    format!(
                        "image of `{}` must reverse direction: wanted {}→{}",
                        c.morphism_name(f),
                        d.object_name(want_dom),
                        d.object_name(want_cod)
                    ),
                ));
            }
        }
        for x in c.objects() {
            if self.mor_map[c.identity(x).0] != d.identity(self.obj_map[x.0]) {
                return Ok(Report::fail(
                    "contravariant functor preserves identity",
                    vec![witness("object", c.object_name(x))],
                ));
            }
        }
        for y in c.objects() {
            for &p in c.incoming(y) {
                for &q in c.outgoing(y) {
                    let lhs = self.mor_map[c.compose(p, q)?.0];
                    let rhs = d.compose(self.mor_map[q.0], self.mor_map[p.0])?;
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "contravariant functor reverses composition",
                            vec![
                                witness("f", c.morphism_name(p)),
                                witness("g", c.morphism_name(q)),
                            ],
                        ));
                    }
                }
            }
        }
        Ok(Report::pass("contravariant functor laws"))
    }
}

/// `f⁻¹(B) = {x | f(x) ∈ B}`, with subsets of a canonical set as bitmasks.
pub fn inverse_image(f: &FinFun, subset_of_cod: u32) -> Result<u32> {
    if subset_of_cod >= (1u32 << f.cod.size) {
        return Err(Error::structural(
            "inverse image",
            format!("{subset_of_cod:#b} is not a subset of a {}-element set", f.cod.size),
        ));
    }
    let mut out = 0u32;
    for (x, &v) in f.table.iter().enumerate() {
        if (subset_of_cod >> v) & 1 == 1 {
            out |= 1 << x;
        }
    }
    Ok(out)
}

/// Contravariant powerset laws, exhaustively over all functions between sets
/// of size ≤ `nmax` and all subsets: `id⁻¹ = id` and `(f·g)⁻¹ = g⁻¹ then f⁻¹`.
pub fn check_powerset_laws(nmax: usize) -> Result<Report> {
    if nmax > 3 {
        return Err(Error::size_limit("powerset law sweep", nmax, 3));
    }
    let mut checked = 0usize;
    for a in 0..=nmax {
        let sa = FinSet::new(a);
        let id = FinFun::identity(&sa);
        for mask in 0..(1u32 << a) {
            if inverse_image(&id, mask)? != mask {
                return Ok(Report::fail(
                    "powerset functor preserves identity",
                    vec![witness("set size", a), witness("subset", format!("{mask:#b}"))],
                ));
            }
        }
        for b in 0..=nmax {
            for f in all_functions(&sa, &FinSet::new(b)) {
                for c in 0..=nmax {
                    for g in all_functions(&FinSet::new(b), &FinSet::new(c)) {
                        let fg = f.then(&g)?;
                        for mask in 0..(1u32 << c) {
                            checked += 1;
                            if inverse_image(&fg, mask)? != inverse_image(&f, inverse_image(&g, mask)?)? {
                                return Ok(Report::fail(
                                    "powerset functor reverses composition",
                                    vec![
                                        witness("f", &f),
                                        witness("g", &g),
                                        witness("subset", format!("{mask:#b}")),
                                    ],
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Report::pass("contravariant powerset laws")
        .with_detail(format!("{checked} (function pair, subset) cases checked")))
}

/// Materialize the powerset functor between universe categories:
/// contravariant from `finset(src_n)` into `finset(tgt_n)`, sending `S` to
/// the canonical `2^|S|`-element object, where `tgt_n ≥ 2^src_n`.
pub fn powerset_on_universe(src_n: usize, tgt_n: usize) -> Result<(Arc<FinCat>, Contravariant)> {
    use crate::builders::{universe_category, UniverseKind};
    if (1usize << src_n) > tgt_n {
        return Err(Error::size_limit("powerset universe", 1 << src_n, tgt_n));
    }
    let src = universe_category(UniverseKind::FinSet, src_n)?;
    let tgt = universe_category(UniverseKind::FinSet, tgt_n)?;
    let source = Arc::new(src.cat.clone());
    let target = Arc::new(tgt.cat.clone());
    // canonical 2^k-element object: the subset {0, ..., 2^k - 1}
    let pow_obj: Vec<ObjId> = src
        .carriers
        .iter()
        .map(|c| {
            let elems: Vec<String> = (0..(1usize << c.size)).map(|e| e.to_string()).collect();
            target
                .object_by_name(&format!("{{{}}}", elems.join(",")))
                .expect("power object exists in the target universe")
        })
        .collect();
    let mor_map: Vec<MorId> = source
        .morphisms()
        .map(|m| {
            let f = &src.tables[m.0];
            let table: Vec<usize> = (0..(1usize << f.cod.size))
                .map(|mask| inverse_image(f, mask as u32).unwrap() as usize)
                .collect();
            tgt.morphism_of_table(pow_obj[src.cat.cod(m).0], pow_obj[src.cat.dom(m).0], &table)
                .expect("inverse image is a function between power objects")
        })
        .collect();
    Ok((
        source.clone(),
        Contravariant {
            source,
            target,
            obj_map: pow_obj,
            mor_map,
        },
    ))
}
