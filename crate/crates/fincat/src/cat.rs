//! Materialized small categories with total composition tables.
//!
//! A [`FinCat`] stores every object, every morphism, every identity and the
//! full composition table, defined exactly on composable pairs. Composition
//! is diagrammatic: `compose(f, g)` is "`f`, then `g`", the paper-order `f·g`.
//!
//! Nothing here assumes the laws hold; [`FinCat::check_laws`] verifies unit
//! and associativity laws exhaustively and reports the offending morphisms on
//! failure. Constructors elsewhere in the crate produce law-abiding
//! categories, but deliberately broken tables can be built through
//! [`FinCat::from_entries`] and will fail the check with a witness.

use crate::error::{Error, Result};
use crate::report::{witness, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorData {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A fully materialized finite category.
#[derive(Debug, Clone)]
pub struct FinCat {
    objects: Vec<String>,
    mors: Vec<MorData>,
    identities: Vec<MorId>,
    /// hom[x][y]: morphism ids with dom x and cod y, in insertion order.
    hom: Vec<Vec<Vec<MorId>>>,
    incoming: Vec<Vec<MorId>>,
    outgoing: Vec<Vec<MorId>>,
    /// Position of each morphism inside incoming[cod] / outgoing[dom].
    in_pos: Vec<u32>,
    out_pos: Vec<u32>,
    /// Per middle object y: a |incoming(y)| × |outgoing(y)| block of results,
    /// one entry per composable pair. This is the whole composition table.
    blocks: Vec<Vec<u32>>,
}

impl FinCat {
    /// Build a category from parts, computing the table through `comp`.
    ///
    /// Structural validation only: identities must be endomorphisms on their
    /// object and every composite must have the right domain and codomain.
    /// Laws are the business of [`FinCat::check_laws`].
    pub fn from_fn(
        objects: Vec<String>,
        mors: Vec<MorData>,
        identities: Vec<MorId>,
        comp: impl Fn(MorId, MorId) -> MorId,
    ) -> Result<FinCat> {
        let mut cat = FinCat::new_unchecked(objects, mors, identities)?;
        for y in 0..cat.objects.len() {
            let inc = cat.incoming[y].clone();
            let out = cat.outgoing[y].clone();
            let mut block = Vec::with_capacity(inc.len() * out.len());
            for &f in &inc {
                for &g in &out {
                    let r = comp(f, g);
                    cat.validate_composite(f, g, r)?;
                    block.push(r.0 as u32);
                }
            }
            cat.blocks[y] = block;
        }
        Ok(cat)
    }

    /// Build a category from an explicit list of `(first, then, result)`
    /// entries. The list must cover every composable pair exactly once.
    pub fn from_entries(
        objects: Vec<String>,
        mors: Vec<MorData>,
        identities: Vec<MorId>,
        entries: &[(MorId, MorId, MorId)],
    ) -> Result<FinCat> {
        let mut cat = FinCat::new_unchecked(objects, mors, identities)?;
        let mut filled: Vec<Vec<bool>> = cat
            .blocks
            .iter()
            .enumerate()
            .map(|(y, _)| vec![false; cat.incoming[y].len() * cat.outgoing[y].len()])
            .collect();
        for y in 0..cat.objects.len() {
            cat.blocks[y] = vec![0; cat.incoming[y].len() * cat.outgoing[y].len()];
        }
        for &(f, g, r) in entries {
            if f.0 >= cat.mors.len() || g.0 >= cat.mors.len() || r.0 >= cat.mors.len() {
                return Err(Error::structural("composition", "entry refers to an unknown morphism"));
            }
            let y = cat.mors[f.0].cod;
            if y != cat.mors[g.0].dom {
                return Err(Error::structural(
                    "composition",
                    format!(
                        "pair ({}, {}) is not composable: cod {} ≠ dom {}",
                        cat.mors[f.0].name,
                        cat.mors[g.0].name,
                        cat.objects[y.0],
                        cat.objects[cat.mors[g.0].dom.0]
                    ),
                ));
            }
            cat.validate_composite(f, g, r)?;
            let slot = cat.in_pos[f.0] as usize * cat.outgoing[y.0].len() + cat.out_pos[g.0] as usize;
            if filled[y.0][slot] {
                return Err(Error::structural(
                    "composition",
                    format!("duplicate entry for ({}, {})", cat.mors[f.0].name, cat.mors[g.0].name),
                ));
            }
            filled[y.0][slot] = true;
            cat.blocks[y.0][slot] = r.0 as u32;
        }
        for (y, flags) in filled.iter().enumerate() {
            if let Some(slot) = flags.iter().position(|&b| !b) {
                let f = cat.incoming[y][slot / cat.outgoing[y].len()];
                let g = cat.outgoing[y][slot % cat.outgoing[y].len()];
                return Err(Error::structural(
                    "composition",
                    format!(
                        "table is not total: missing composite for ({}, {})",
                        cat.mors[f.0].name, cat.mors[g.0].name
                    ),
                ));
            }
        }
        Ok(cat)
    }

    fn new_unchecked(objects: Vec<String>, mors: Vec<MorData>, identities: Vec<MorId>) -> Result<FinCat> {
        let n = objects.len();
        if identities.len() != n {
            return Err(Error::structural("FinCat", "one identity per object required"));
        }
        for m in &mors {
            if m.dom.0 >= n || m.cod.0 >= n {
                return Err(Error::structural(
                    "FinCat",
                    format!("morphism `{}` refers to an unknown object", m.name),
                ));
            }
        }
        for (x, &id) in identities.iter().enumerate() {
            let m = mors.get(id.0).ok_or_else(|| Error::structural("FinCat", "identity refers to an unknown morphism"))?;
            if m.dom.0 != x || m.cod.0 != x {
                return Err(Error::structural(
                    "FinCat",
                    format!("identity of `{}` must be an endomorphism on it", objects[x]),
                ));
            }
        }
        let mut hom = vec![vec![Vec::new(); n]; n];
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        let mut in_pos = vec![0u32; mors.len()];
        let mut out_pos = vec![0u32; mors.len()];
        for (i, m) in mors.iter().enumerate() {
            hom[m.dom.0][m.cod.0].push(MorId(i));
            in_pos[i] = incoming[m.cod.0].len() as u32;
            incoming[m.cod.0].push(MorId(i));
            out_pos[i] = outgoing[m.dom.0].len() as u32;
            outgoing[m.dom.0].push(MorId(i));
        }
        let blocks = vec![Vec::new(); n];
        Ok(FinCat {
            objects,
            mors,
            identities,
            hom,
            incoming,
            outgoing,
            in_pos,
            out_pos,
            blocks,
        })
    }

    fn validate_composite(&self, f: MorId, g: MorId, r: MorId) -> Result<()> {
        let (f, g) = (&self.mors[f.0], &self.mors[g.0]);
        let r = self
            .mors
            .get(r.0)
            .ok_or_else(|| Error::structural("composition", "composite refers to an unknown morphism"))?;
        if r.dom != f.dom || r.cod != g.cod {
            return Err(Error::structural(
                "composition",
                format!(
                    "composite of ({}, {}) is `{}` of the wrong type: wanted {}→{}, got {}→{}",
                    f.name,
                    g.name,
                    r.name,
                    self.objects[f.dom.0],
                    self.objects[g.cod.0],
                    self.objects[r.dom.0],
                    self.objects[r.cod.0],
                ),
            ));
        }
        Ok(())
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mors.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.mors.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn morphism(&self, f: MorId) -> &MorData {
        &self.mors[f.0]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.mors[f.0].name
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.mors[f.0].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.mors[f.0].cod
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identities[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.mors[f.0].dom.0] == f
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.hom[x.0][y.0]
    }

    pub fn incoming(&self, y: ObjId) -> &[MorId] {
        &self.incoming[y.0]
    }

    pub fn outgoing(&self, x: ObjId) -> &[MorId] {
        &self.outgoing[x.0]
    }

    pub fn object_by_name(&self, name: &str) -> Result<ObjId> {
        self.objects
            .iter()
            .position(|n| n == name)
            .map(ObjId)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn morphism_by_name(&self, name: &str) -> Result<MorId> {
        self.mors
            .iter()
            .position(|m| m.name == name)
            .map(MorId)
            .ok_or_else(|| Error::UnknownMorphism(name.to_string()))
    }

    /// Total composition, diagrammatic order: `f` then `g`.
    pub fn compose(&self, f: MorId, g: MorId) -> Result<MorId> {
        let y = self.mors[f.0].cod;
        if y != self.mors[g.0].dom {
            return Err(Error::ComposeMismatch {
                f: self.mors[f.0].name.clone(),
                g: self.mors[g.0].name.clone(),
                f_cod: y.0,
                g_dom: self.mors[g.0].dom.0,
            });
        }
        Ok(self.compose_unchecked(f, g))
    }

    #[inline]
    fn compose_unchecked(&self, f: MorId, g: MorId) -> MorId {
        let y = self.mors[f.0].cod.0;
        let w = self.outgoing[y].len();
        MorId(self.blocks[y][self.in_pos[f.0] as usize * w + self.out_pos[g.0] as usize] as usize)
    }

    /// Chain composition `f1 · f2 · … · fk` (diagrammatic).
    pub fn compose_all(&self, fs: &[MorId]) -> Result<MorId> {
        let mut it = fs.iter();
        let mut acc = *it
            .next()
            .ok_or_else(|| Error::structural("compose_all", "empty chain"))?;
        for &f in it {
            acc = self.compose(acc, f)?;
        }
        Ok(acc)
    }

    /// Exhaustive unit and associativity check.
    ///
    /// Left unit and right unit run over every morphism; associativity runs
    /// over every composable triple. The first violation is reported with the
    /// offending morphisms as witnesses.
    pub fn check_laws(&self) -> Report {
        for f in self.morphisms() {
            let m = &self.mors[f.0];
            let left = self.compose_unchecked(self.identities[m.dom.0], f);
            if left != f {
                return Report::fail(
                    "left unit law",
                    vec![
                        witness("morphism f", &m.name),
                        witness("id·f", self.morphism_name(left)),
                    ],
                );
            }
            let right = self.compose_unchecked(f, self.identities[m.cod.0]);
            if right != f {
                return Report::fail(
                    "right unit law",
                    vec![
                        witness("morphism f", &m.name),
                        witness("f·id", self.morphism_name(right)),
                    ],
                );
            }
        }
        let mut triples = 0usize;
        for y in self.objects() {
            for &f in &self.incoming[y.0] {
                for &g in &self.outgoing[y.0] {
                    let fg = self.compose_unchecked(f, g);
                    let z = self.mors[g.0].cod.0;
                    for &h in &self.outgoing[z] {
                        triples += 1;
                        let lhs = self.compose_unchecked(fg, h);
                        let rhs = self.compose_unchecked(f, self.compose_unchecked(g, h));
                        if lhs != rhs {
                            return Report::fail(
                                "associative law",
                                vec![
                                    witness("morphism f", self.morphism_name(f)),
                                    witness("morphism g", self.morphism_name(g)),
                                    witness("morphism h", self.morphism_name(h)),
                                    witness("(f·g)·h", self.morphism_name(lhs)),
                                    witness("f·(g·h)", self.morphism_name(rhs)),
                                ],
                            );
                        }
                    }
                }
            }
        }
        Report::pass("category laws").with_detail(format!(
            "{} objects, {} morphisms, {} composable triples checked",
            self.objects.len(),
            self.mors.len(),
            triples
        ))
    }

    /// The opposite category: same objects and morphism ids, arrows reversed,
    /// `comp_op(f, g) = comp(g, f)`. Applying it twice restores the original
    /// data exactly.
    pub fn opposite(&self) -> FinCat {
        let mors = self
            .mors
            .iter()
            .map(|m| MorData {
                name: m.name.clone(),
                dom: m.cod,
                cod: m.dom,
            })
            .collect();
        FinCat::from_fn(
            self.objects.clone(),
            mors,
            self.identities.clone(),
            |f, g| self.compose_unchecked(g, f),
        )
        .expect("opposite of a well-typed category is well-typed")
    }

    /// The product category: objects and morphisms are pairs, everything
    /// componentwise.
    pub fn product_category(&self, other: &FinCat) -> FinCat {
        let objects: Vec<String> = self
            .objects
            .iter()
            .flat_map(|a| other.objects.iter().map(move |b| format!("({a},{b})")))
            .collect();
        let obj_pair = |a: ObjId, b: ObjId| ObjId(a.0 * other.objects.len() + b.0);
        let mut mors = Vec::new();
        let mut pair_of = vec![vec![0usize; other.mors.len()]; self.mors.len()];
        for (i, m1) in self.mors.iter().enumerate() {
            for (j, m2) in other.mors.iter().enumerate() {
                pair_of[i][j] = mors.len();
                mors.push(MorData {
                    name: format!("({},{})", m1.name, m2.name),
                    dom: obj_pair(m1.dom, m2.dom),
                    cod: obj_pair(m1.cod, m2.cod),
                });
            }
        }
        let mut identities = Vec::new();
        for &i in &self.identities {
            for &j in &other.identities {
                identities.push(MorId(pair_of[i.0][j.0]));
            }
        }
        let w = other.mors.len();
        FinCat::from_fn(objects, mors, identities, |f, g| {
            let (f1, f2) = (MorId(f.0 / w), MorId(f.0 % w));
            let (g1, g2) = (MorId(g.0 / w), MorId(g.0 % w));
            MorId(pair_of[self.compose_unchecked(f1, g1).0][other.compose_unchecked(f2, g2).0])
        })
        .expect("componentwise composition is well-typed")
    }

    /// Structural equality of the underlying data.
    pub fn same_data(&self, other: &FinCat) -> bool {
        self.objects == other.objects
            && self.mors == other.mors
            && self.identities == other.identities
            && self.blocks == other.blocks
    }

    /// A short human-readable summary of a morphism: `name: dom→cod`.
    pub fn describe(&self, f: MorId) -> String {
        let m = &self.mors[f.0];
        format!("{}: {}→{}", m.name, self.objects[m.dom.0], self.objects[m.cod.0])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The interval category: x → y plus identities.
    pub(crate) fn interval() -> FinCat {
        FinCat::from_entries(
            vec!["x".into(), "y".into()],
            vec![
                MorData { name: "id_x".into(), dom: ObjId(0), cod: ObjId(0) },
                MorData { name: "id_y".into(), dom: ObjId(1), cod: ObjId(1) },
                MorData { name: "f".into(), dom: ObjId(0), cod: ObjId(1) },
            ],
            vec![MorId(0), MorId(1)],
            &[
                (MorId(0), MorId(0), MorId(0)),
                (MorId(1), MorId(1), MorId(1)),
                (MorId(0), MorId(2), MorId(2)),
                (MorId(2), MorId(1), MorId(2)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn terminal_category_passes() {
        let c = FinCat::from_entries(
            vec!["*".into()],
            vec![MorData { name: "id".into(), dom: ObjId(0), cod: ObjId(0) }],
            vec![MorId(0)],
            &[(MorId(0), MorId(0), MorId(0))],
        )
        .unwrap();
        assert!(c.check_laws().passed());
    }

    #[test]
    fn interval_passes_and_composes() {
        let c = interval();
        assert!(c.check_laws().passed());
        let f = c.morphism_by_name("f").unwrap();
        assert_eq!(c.compose(c.identity(ObjId(0)), f).unwrap(), f);
        assert!(c.compose(f, f).is_err());
    }

    #[test]
    fn broken_right_unit_is_reported() {
        // Two parallel arrows x→y; comp(f, id_y) deliberately returns g.
        let c = FinCat::from_entries(
            vec!["x".into(), "y".into()],
            vec![
                MorData { name: "id_x".into(), dom: ObjId(0), cod: ObjId(0) },
                MorData { name: "id_y".into(), dom: ObjId(1), cod: ObjId(1) },
                MorData { name: "f".into(), dom: ObjId(0), cod: ObjId(1) },
                MorData { name: "g".into(), dom: ObjId(0), cod: ObjId(1) },
            ],
            vec![MorId(0), MorId(1)],
            &[
                (MorId(0), MorId(0), MorId(0)),
                (MorId(1), MorId(1), MorId(1)),
                (MorId(0), MorId(2), MorId(2)),
                (MorId(0), MorId(3), MorId(3)),
                (MorId(2), MorId(1), MorId(3)), // violation: f·id_y = g
                (MorId(3), MorId(1), MorId(3)),
            ],
        )
        .unwrap();
        let report = c.check_laws();
        assert!(!report.passed());
        assert_eq!(report.name, "right unit law");
        assert!(report.witnesses.iter().any(|w| w.value == "f"));
    }

    #[test]
    fn missing_table_entry_is_structural_error() {
        let err = FinCat::from_entries(
            vec!["x".into()],
            vec![MorData { name: "id_x".into(), dom: ObjId(0), cod: ObjId(0) }],
            vec![MorId(0)],
            &[],
        )
        .unwrap_err();
        assert!(matches!(err, Error::Structural { .. }));
    }

    #[test]
    fn opposite_is_an_involution() {
        let c = interval();
        let op = c.opposite();
        let f = op.morphism_by_name("f").unwrap();
        assert_eq!(op.dom(f), ObjId(1));
        assert_eq!(op.cod(f), ObjId(0));
        assert!(op.check_laws().passed());
        assert!(op.opposite().same_data(&c));
    }

    #[test]
    fn product_of_intervals_is_commuting_square() {
        let c = interval();
        let p = c.product_category(&c);
        assert_eq!(p.object_count(), 4);
        // oracle: pairs of morphisms
        assert_eq!(p.morphism_count(), 9);
        assert!(p.check_laws().passed());
        // both paths around the square agree
        let fx = p.morphism_by_name("(f,id_x)").unwrap();
        let yf = p.morphism_by_name("(id_y,f)").unwrap();
        let xf = p.morphism_by_name("(id_x,f)").unwrap();
        let fy = p.morphism_by_name("(f,id_y)").unwrap();
        assert_eq!(p.compose(fx, yf).unwrap(), p.compose(xf, fy).unwrap());
    }
}
