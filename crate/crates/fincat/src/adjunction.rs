//! Both presentations of adjunctions — unit/counit with the triangle
//! identities, and natural hom-set bijections — plus the constructive
//! translation between them, instantiated on finite data.
//!
//! The checks run over *sites*: category windows with enumerable hom-sets
//! and designated test objects. A materialized [`FinCat`] is a site, and so
//! is a bounded window of the category of sets. The window formulation
//! matters for the currying adjunction, where neither functor can be total
//! on any finite materialized category (`(−×Y)` and `(Y→−)` both escape
//! every bound); on a site, morphism actions are computed where needed and
//! all quantified checks stay exhaustive over the test objects.
//!
//! Every check is pure table algebra at the value level, and all
//! conventions are diagrammatic. Naturality in the hom-bijection is read as:
//! precomposition with `F(f)` on the left side matches precomposition with
//! `f` on the right, and postcomposition with `g` matches postcomposition
//! with `G(g)`.

use std::fmt::Debug;

use crate::cat::{FinCat, MorId};
use crate::error::{Error, Result};
use crate::finset::{all_functions, function_count, FinFun, FinSet};
use crate::report::{witness, Report};

/// A category window: objects are coded as `usize`, hom-sets are enumerable
/// on demand, and composition is diagrammatic. Quantified checks range over
/// [`Site::test_objects`]; composition and identities must work on any codes
/// reachable from those through the functors under test.
pub trait Site {
    type Mor: Clone + PartialEq + Debug;

    fn test_objects(&self) -> Vec<usize>;
    fn hom(&self, a: usize, b: usize) -> Vec<Self::Mor>;
    /// Diagrammatic: `f` then `g`; callers guarantee composability.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn identity(&self, a: usize) -> Self::Mor;
    fn obj_name(&self, a: usize) -> String;
    fn mor_name(&self, m: &Self::Mor) -> String;
}

/// A materialized category as a site; codes are object ids.
pub struct CatSite<'a>(pub &'a FinCat);

impl<'a> Site for CatSite<'a> {
    type Mor = MorId;

    fn test_objects(&self) -> Vec<usize> {
        (0..self.0.object_count()).collect()
    }
    fn hom(&self, a: usize, b: usize) -> Vec<MorId> {
        self.0.hom(crate::cat::ObjId(a), crate::cat::ObjId(b)).to_vec()
    }
    fn compose(&self, f: &MorId, g: &MorId) -> MorId {
        self.0.compose(*f, *g).expect("site callers compose composable pairs")
    }
    fn identity(&self, a: usize) -> MorId {
        self.0.identity(crate::cat::ObjId(a))
    }
    fn obj_name(&self, a: usize) -> String {
        self.0.object_name(crate::cat::ObjId(a)).to_string()
    }
    fn mor_name(&self, m: &MorId) -> String {
        self.0.morphism_name(*m).to_string()
    }
}

/// The category of sets at desk scale as a site; codes are cardinalities,
/// morphisms are explicit tables. Hom-sets exist between arbitrary sizes;
/// only the test objects are bounded.
pub struct SetSite {
    pub test_max: usize,
}

impl Site for SetSite {
    type Mor = FinFun;

    fn test_objects(&self) -> Vec<usize> {
        (0..=self.test_max).collect()
    }
    fn hom(&self, a: usize, b: usize) -> Vec<FinFun> {
        all_functions(&FinSet::new(a), &FinSet::new(b))
    }
    fn compose(&self, f: &FinFun, g: &FinFun) -> FinFun {
        f.then(g).expect("site callers compose composable pairs")
    }
    fn identity(&self, a: usize) -> FinFun {
        FinFun::identity(&FinSet::new(a))
    }
    fn obj_name(&self, a: usize) -> String {
        format!("[{a}]")
    }
    fn mor_name(&self, m: &FinFun) -> String {
        m.to_string()
    }
}

/// A functor action between sites: an object-code map and a morphism action.
pub struct SiteMap<'a, L: Site, R: Site> {
    pub obj: Box<dyn Fn(usize) -> usize + 'a>,
    /// `(dom code, cod code, morphism)` in the source, image in the target.
    pub mor: Box<dyn Fn(usize, usize, &L::Mor) -> R::Mor + 'a>,
}

impl<'a, L: Site, R: Site> SiteMap<'a, L, R> {
    pub fn identity_on(_site: &'a L) -> SiteMap<'a, L, L>
    where
        L: Site,
    {
        SiteMap {
            obj: Box::new(|c| c),
            mor: Box::new(|_, _, m| m.clone()),
        }
    }
}

/// An adjunction presented by unit and counit.
///
/// `F : L → R`, `G : R → L`, `unit_c ∈ Hom_L(c, G F c)`,
/// `counit_d ∈ Hom_R(F G d, d)`.
pub struct UnitCounit<'a, L: Site, R: Site> {
    pub left: &'a L,
    pub right: &'a R,
    pub f: SiteMap<'a, L, R>,
    pub g: SiteMap<'a, R, L>,
    pub unit: Box<dyn Fn(usize) -> L::Mor + 'a>,
    pub counit: Box<dyn Fn(usize) -> R::Mor + 'a>,
}

/// An adjunction presented by a natural family of hom-set bijections
/// `α_{c,d} : Hom_R(F c, d) → Hom_L(c, G d)` with explicit inverse.
pub struct HomBijection<'a, L: Site, R: Site> {
    pub left: &'a L,
    pub right: &'a R,
    pub f: SiteMap<'a, L, R>,
    pub g: SiteMap<'a, R, L>,
    pub alpha: Box<dyn Fn(usize, usize, &R::Mor) -> L::Mor + 'a>,
    pub alpha_inv: Box<dyn Fn(usize, usize, &L::Mor) -> R::Mor + 'a>,
}

impl<'a, L: Site, R: Site> HomBijection<'a, L, R> {
    /// Materialize the bijection at one pair as an explicit table of
    /// positions into `Hom_L(c, G d)`.
    pub fn table_at(&self, c: usize, d: usize) -> Vec<usize> {
        let gd = (self.g.obj)(d);
        let fc = (self.f.obj)(c);
        let target = self.left.hom(c, gd);
        self.right
            .hom(fc, d)
            .iter()
            .map(|m| {
                let img = (self.alpha)(c, d, m);
                target.iter().position(|t| *t == img).expect("alpha lands in Hom_L(c, G d)")
            })
            .collect()
    }
}

/// α and α⁻¹ are mutually inverse on every test hom-set.
pub fn check_bijective<L: Site, R: Site>(adj: &HomBijection<'_, L, R>) -> Report {
    for c in adj.left.test_objects() {
        for d in adj.right.test_objects() {
            let fc = (adj.f.obj)(c);
            let gd = (adj.g.obj)(d);
            for m in adj.right.hom(fc, d) {
                let round = (adj.alpha_inv)(c, d, &(adj.alpha)(c, d, &m));
                if round != m {
                    return Report::fail(
                        "hom-bijection roundtrip α⁻¹∘α",
                        vec![
                            witness("C", adj.left.obj_name(c)),
                            witness("D", adj.right.obj_name(d)),
                            witness("g", adj.right.mor_name(&m)),
                            witness("α⁻¹(α(g))", adj.right.mor_name(&round)),
                        ],
                    );
                }
            }
            for m in adj.left.hom(c, gd) {
                let round = (adj.alpha)(c, d, &(adj.alpha_inv)(c, d, &m));
                if round != m {
                    return Report::fail(
                        "hom-bijection roundtrip α∘α⁻¹",
                        vec![
                            witness("C", adj.left.obj_name(c)),
                            witness("D", adj.right.obj_name(d)),
                            witness("f", adj.left.mor_name(&m)),
                            witness("α(α⁻¹(f))", adj.left.mor_name(&round)),
                        ],
                    );
                }
            }
        }
    }
    Report::pass("hom-bijection invertibility")
}

/// Both naturality squares of the bijection, over all test objects and all
/// morphisms between them.
pub fn check_hom_naturality<L: Site, R: Site>(adj: &HomBijection<'_, L, R>) -> Report {
    let l_objs = adj.left.test_objects();
    let r_objs = adj.right.test_objects();
    // naturality in C: α(F(f)·g) = f·α(g)
    for &c1 in &l_objs {
        for &c2 in &l_objs {
            for f in adj.left.hom(c1, c2) {
                let ff = (adj.f.mor)(c1, c2, &f);
                for &d in &r_objs {
                    for g in adj.right.hom((adj.f.obj)(c2), d) {
                        let lhs = (adj.alpha)(c1, d, &adj.right.compose(&ff, &g));
                        let rhs = adj.left.compose(&f, &(adj.alpha)(c2, d, &g));
                        if lhs != rhs {
                            return Report::fail(
                                "hom-bijection naturality in C",
                                vec![
                                    witness("f", adj.left.mor_name(&f)),
                                    witness("g", adj.right.mor_name(&g)),
                                    witness("α(F(f)·g)", adj.left.mor_name(&lhs)),
                                    witness("f·α(g)", adj.left.mor_name(&rhs)),
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    // naturality in D: α(h·g) = α(h)·G(g)
    for &d1 in &r_objs {
        for &d2 in &r_objs {
            for g in adj.right.hom(d1, d2) {
                let gg = (adj.g.mor)(d1, d2, &g);
                for &c in &l_objs {
                    for h in adj.right.hom((adj.f.obj)(c), d1) {
                        let lhs = (adj.alpha)(c, d2, &adj.right.compose(&h, &g));
                        let rhs = adj.left.compose(&(adj.alpha)(c, d1, &h), &gg);
                        if lhs != rhs {
                            return Report::fail(
                                "hom-bijection naturality in D",
                                vec![
                                    witness("g", adj.right.mor_name(&g)),
                                    witness("h", adj.right.mor_name(&h)),
                                    witness("α(h·g)", adj.left.mor_name(&lhs)),
                                    witness("α(h)·G(g)", adj.left.mor_name(&rhs)),
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    Report::pass("hom-bijection naturality")
}

/// Naturality of unit and counit as transformations.
pub fn check_unit_counit_naturality<L: Site, R: Site>(adj: &UnitCounit<'_, L, R>) -> Report {
    for c1 in adj.left.test_objects() {
        for c2 in adj.left.test_objects() {
            for f in adj.left.hom(c1, c2) {
                let ff = (adj.f.mor)(c1, c2, &f);
                let gff = (adj.g.mor)((adj.f.obj)(c1), (adj.f.obj)(c2), &ff);
                let lhs = adj.left.compose(&(adj.unit)(c1), &gff);
                let rhs = adj.left.compose(&f, &(adj.unit)(c2));
                if lhs != rhs {
                    return Report::fail(
                        "unit naturality",
                        vec![witness("f", adj.left.mor_name(&f))],
                    );
                }
            }
        }
    }
    for d1 in adj.right.test_objects() {
        for d2 in adj.right.test_objects() {
            for g in adj.right.hom(d1, d2) {
                let gg = (adj.g.mor)(d1, d2, &g);
                let fgg = (adj.f.mor)((adj.g.obj)(d1), (adj.g.obj)(d2), &gg);
                let lhs = adj.right.compose(&fgg, &(adj.counit)(d2));
                let rhs = adj.right.compose(&(adj.counit)(d1), &g);
                if lhs != rhs {
                    return Report::fail(
                        "counit naturality",
                        vec![witness("g", adj.right.mor_name(&g))],
                    );
                }
            }
        }
    }
    Report::pass("unit/counit naturality")
}

/// The triangle identities: `F(η_C)·ε_{F C} = id_{F C}` for every test
/// object C, and `η_{G D}·G(ε_D) = id_{G D}` for every test object D.
pub fn check_triangles<L: Site, R: Site>(adj: &UnitCounit<'_, L, R>) -> Report {
    for c in adj.left.test_objects() {
        let fc = (adj.f.obj)(c);
        let gfc = (adj.g.obj)(fc);
        let f_eta = (adj.f.mor)(c, gfc, &(adj.unit)(c));
        let composite = adj.right.compose(&f_eta, &(adj.counit)(fc));
        if composite != adj.right.identity(fc) {
            return Report::fail(
                "triangle identity F(η)·ε",
                vec![
                    witness("object C", adj.left.obj_name(c)),
                    witness("F(η_C)·ε_{F C}", adj.right.mor_name(&composite)),
                ],
            );
        }
    }
    for d in adj.right.test_objects() {
        let gd = (adj.g.obj)(d);
        let fgd = (adj.f.obj)(gd);
        let g_eps = (adj.g.mor)(fgd, d, &(adj.counit)(d));
        let composite = adj.left.compose(&(adj.unit)(gd), &g_eps);
        if composite != adj.left.identity(gd) {
            return Report::fail(
                "triangle identity η·G(ε)",
                vec![
                    witness("object D", adj.right.obj_name(d)),
                    witness("η_{G D}·G(ε_D)", adj.left.mor_name(&composite)),
                ],
            );
        }
    }
    Report::pass("triangle identities")
}

/// From unit/counit to the hom-bijection of the equivalence theorem:
/// `α(g) = η_C · G(g)` and `α⁻¹(f) = F(f) · ε_D`.
pub fn hom_bijection_from_unit_counit<'a, L: Site, R: Site>(
    adj: &'a UnitCounit<'a, L, R>,
) -> HomBijection<'a, L, R> {
    HomBijection {
        left: adj.left,
        right: adj.right,
        f: SiteMap {
            obj: Box::new(|c| (adj.f.obj)(c)),
            mor: Box::new(|a, b, m| (adj.f.mor)(a, b, m)),
        },
        g: SiteMap {
            obj: Box::new(|d| (adj.g.obj)(d)),
            mor: Box::new(|a, b, m| (adj.g.mor)(a, b, m)),
        },
        alpha: Box::new(move |c, d, m| {
            let fc = (adj.f.obj)(c);
            let gm = (adj.g.mor)(fc, d, m);
            adj.left.compose(&(adj.unit)(c), &gm)
        }),
        alpha_inv: Box::new(move |c, d, m| {
            let gd = (adj.g.obj)(d);
            let fm = (adj.f.mor)(c, gd, m);
            adj.right.compose(&fm, &(adj.counit)(d))
        }),
    }
}

/// From the hom-bijection back to unit and counit:
/// `η_C = α_{C,FC}(id_{FC})` and `ε_D = α⁻¹_{GD,D}(id_{GD})`.
pub fn unit_counit_from_hom_bijection<'a, L: Site, R: Site>(
    adj: &'a HomBijection<'a, L, R>,
) -> UnitCounit<'a, L, R> {
    UnitCounit {
        left: adj.left,
        right: adj.right,
        f: SiteMap {
            obj: Box::new(|c| (adj.f.obj)(c)),
            mor: Box::new(|a, b, m| (adj.f.mor)(a, b, m)),
        },
        g: SiteMap {
            obj: Box::new(|d| (adj.g.obj)(d)),
            mor: Box::new(|a, b, m| (adj.g.mor)(a, b, m)),
        },
        unit: Box::new(move |c| {
            let fc = (adj.f.obj)(c);
            (adj.alpha)(c, fc, &adj.right.identity(fc))
        }),
        counit: Box::new(move |d| {
            let gd = (adj.g.obj)(d);
            (adj.alpha_inv)(gd, d, &adj.left.identity(gd))
        }),
    }
}

/// Pointwise equality of two hom-bijections on every test pair.
pub fn bijections_agree<L: Site, R: Site>(
    a: &HomBijection<'_, L, R>,
    b: &HomBijection<'_, L, R>,
) -> Report {
    for c in a.left.test_objects() {
        for d in a.right.test_objects() {
            let fc = (a.f.obj)(c);
            for m in a.right.hom(fc, d) {
                let (x, y) = ((a.alpha)(c, d, &m), (b.alpha)(c, d, &m));
                if x != y {
                    return Report::fail(
                        "hom-bijections agree",
                        vec![
                            witness("C", a.left.obj_name(c)),
                            witness("D", a.right.obj_name(d)),
                            witness("g", a.right.mor_name(&m)),
                            witness("first", a.left.mor_name(&x)),
                            witness("second", a.left.mor_name(&y)),
                        ],
                    );
                }
            }
        }
    }
    Report::pass("hom-bijections agree pointwise")
}

/// The identity adjunction on any site.
pub fn identity_adjunction<L: Site>(site: &L) -> UnitCounit<'_, L, L> {
    UnitCounit {
        left: site,
        right: site,
        f: SiteMap {
            obj: Box::new(|c| c),
            mor: Box::new(|_, _, m| m.clone()),
        },
        g: SiteMap {
            obj: Box::new(|c| c),
            mor: Box::new(|_, _, m| m.clone()),
        },
        unit: Box::new(move |c| site.identity(c)),
        counit: Box::new(move |d| site.identity(d)),
    }
}

/// The currying adjunction `(−×Y) ⊣ (Y→−)` on the set site:
/// `α : Hom(X×Y, Z) ≅ Hom(X, Z^Y)` is the transpose.
pub struct CurryingAdjunction {
    pub left: SetSite,
    pub right: SetSite,
    pub y: usize,
    /// When true, the exponential uses a reversed enumeration of functions —
    /// a different but isomorphic right adjoint, used to exercise the
    /// uniqueness-up-to-natural-iso search.
    pub reversed_exponent: bool,
}

impl CurryingAdjunction {
    pub fn new(y: usize, n: usize) -> Result<CurryingAdjunction> {
        if n > 3 || !(1..=3).contains(&y) {
            return Err(Error::size_limit("currying adjunction", n.max(y), 3));
        }
        Ok(CurryingAdjunction {
            left: SetSite { test_max: n },
            right: SetSite { test_max: n },
            y,
            reversed_exponent: false,
        })
    }

    fn exp_size(&self, z: usize) -> usize {
        function_count(&FinSet::new(self.y), &FinSet::new(z))
    }

    /// Position flip for the reversed exponential encoding.
    fn recode(&self, z: usize, idx: usize) -> usize {
        if self.reversed_exponent {
            self.exp_size(z) - 1 - idx
        } else {
            idx
        }
    }

    pub fn bijection(&self) -> HomBijection<'_, SetSite, SetSite> {
        let y = self.y;
        HomBijection {
            left: &self.left,
            right: &self.right,
            f: SiteMap {
                obj: Box::new(move |x| x * y),
                mor: Box::new(move |_, _, m: &FinFun| {
                    crate::finset::parallel(m, &FinFun::identity(&FinSet::new(y)))
                }),
            },
            g: SiteMap {
                obj: Box::new(move |z| self.exp_size(z)),
                mor: Box::new(move |z1, z2, m: &FinFun| {
                    // postcomposition on tables, with optional recoding
                    let dom = FinSet::new(self.exp_size(z1));
                    let cod = FinSet::new(self.exp_size(z2));
                    let table = (0..dom.size)
                        .map(|i| {
                            let t = crate::finset::function_at(
                                &FinSet::new(y),
                                &FinSet::new(z1),
                                self.recode(z1, i),
                            );
                            self.recode(z2, crate::finset::function_index(&t.then(m).unwrap()))
                        })
                        .collect();
                    FinFun { dom, cod, table }
                }),
            },
            alpha: Box::new(move |x, z, m: &FinFun| {
                let cur = crate::finset::curry(m, &FinSet::new(x), &FinSet::new(y))
                    .expect("domain is the canonical product");
                if self.reversed_exponent {
                    let table = cur.table.iter().map(|&i| self.recode(z, i)).collect();
                    FinFun { dom: cur.dom, cod: cur.cod, table }
                } else {
                    cur
                }
            }),
            alpha_inv: Box::new(move |_x, z, m: &FinFun| {
                let decoded = if self.reversed_exponent {
                    let table = m.table.iter().map(|&i| self.recode(z, i)).collect();
                    FinFun { dom: m.dom.clone(), cod: m.cod.clone(), table }
                } else {
                    m.clone()
                };
                crate::finset::uncurry(&decoded, &FinSet::new(y), &FinSet::new(z))
            }),
        }
    }
}

/// Search for a natural isomorphism between two parallel functor actions
/// `L → L'` over the test objects: enumerate isomorphism components per
/// object, then filter jointly by naturality. Returns the first family in
/// enumeration order.
pub fn find_natural_iso<L: Site, M: Site>(
    src: &L,
    tgt: &M,
    f1: &SiteMap<'_, L, M>,
    f2: &SiteMap<'_, L, M>,
) -> Option<Vec<M::Mor>> {
    let objs = src.test_objects();
    let candidates: Vec<Vec<M::Mor>> = objs
        .iter()
        .map(|&c| {
            let (a, b) = ((f1.obj)(c), (f2.obj)(c));
            tgt.hom(a, b)
                .into_iter()
                .filter(|m| {
                    tgt.hom(b, a).into_iter().any(|inv| {
                        tgt.compose(m, &inv) == tgt.identity(a)
                            && tgt.compose(&inv, m) == tgt.identity(b)
                    })
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut pick = vec![0usize; objs.len()];
    loop {
        let family: Vec<M::Mor> = pick.iter().enumerate().map(|(i, &k)| candidates[i][k].clone()).collect();
        let natural = objs.iter().enumerate().all(|(i, &c1)| {
            objs.iter().enumerate().all(|(j, &c2)| {
                src.hom(c1, c2).iter().all(|f| {
                    let lhs = tgt.compose(&(f1.mor)(c1, c2, f), &family[j]);
                    let rhs = tgt.compose(&family[i], &(f2.mor)(c1, c2, f));
                    lhs == rhs
                })
            })
        });
        if natural {
            return Some(family);
        }
        let mut i = objs.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < candidates[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{from_preorder, PreorderPresentation};

    #[test]
    fn identity_adjunction_passes_everything() {
        let cat = from_preorder(&PreorderPresentation::chain(3));
        let site = CatSite(&cat);
        let adj = identity_adjunction(&site);
        assert!(check_unit_counit_naturality(&adj).passed());
        assert!(check_triangles(&adj).passed());
        let bij = hom_bijection_from_unit_counit(&adj);
        assert!(check_bijective(&bij).passed());
        assert!(check_hom_naturality(&bij).passed());
        // α of the identity adjunction is the identity table
        for c in site.test_objects() {
            for d in site.test_objects() {
                let t = bij.table_at(c, d);
                assert_eq!(t, (0..t.len()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn currying_adjunction_checks_at_sizes_2() {
        let adj = CurryingAdjunction::new(2, 2).unwrap();
        let bij = adj.bijection();
        assert!(check_bijective(&bij).passed());
        assert!(check_hom_naturality(&bij).passed());
        // |Hom(X×Y, Z)| = |Hom(X, Z^Y)|
        for x in 0..=2usize {
            for z in 0..=2usize {
                assert_eq!(
                    function_count(&FinSet::new(x * 2), &FinSet::new(z)),
                    function_count(&FinSet::new(x), &FinSet::new(adj.exp_size(z)))
                );
            }
        }
    }

    #[test]
    fn currying_roundtrips_through_unit_counit() {
        let adj = CurryingAdjunction::new(2, 2).unwrap();
        let bij = adj.bijection();
        let uc = unit_counit_from_hom_bijection(&bij);
        assert!(check_unit_counit_naturality(&uc).passed());
        assert!(check_triangles(&uc).passed());
        let back = hom_bijection_from_unit_counit(&uc);
        assert!(bijections_agree(&bij, &back).passed());
        // α(id_{F X}) = η_X, reading the unit off the bijection
        for x in 0..=2usize {
            let fx = (bij.f.obj)(x);
            let eta = (bij.alpha)(x, fx, &adj.right.identity(fx));
            assert_eq!(eta, (uc.unit)(x));
        }
    }

    #[test]
    fn currying_alpha_is_the_transpose() {
        // α matches finset-universe currying by construction; verify against
        // the standalone curry on a concrete morphism anyway.
        let adj = CurryingAdjunction::new(2, 2).unwrap();
        let bij = adj.bijection();
        let f = FinFun::new(FinSet::new(4), FinSet::new(2), vec![0, 1, 1, 0]).unwrap();
        let curried = (bij.alpha)(2, 2, &f);
        assert_eq!(curried, crate::finset::curry(&f, &FinSet::new(2), &FinSet::new(2)).unwrap());
    }

    #[test]
    fn singleton_y_degenerates_to_identity_like_bijection() {
        let adj = CurryingAdjunction::new(1, 2).unwrap();
        let bij = adj.bijection();
        assert!(check_bijective(&bij).passed());
        assert!(check_hom_naturality(&bij).passed());
        // A×1 ≅ A: F is size-preserving and α is a bijection between
        // equinumerous hom-sets
        for x in 0..=2usize {
            assert_eq!((bij.f.obj)(x), x);
            assert_eq!((bij.g.obj)(x), x);
        }
    }

    #[test]
    fn perturbed_counit_fails_triangles_naming_the_object() {
        let adj = CurryingAdjunction::new(2, 2).unwrap();
        let bij = adj.bijection();
        let good = unit_counit_from_hom_bijection(&bij);
        let bad = UnitCounit {
            left: good.left,
            right: good.right,
            f: SiteMap {
                obj: Box::new(|c| (good.f.obj)(c)),
                mor: Box::new(|a, b, m| (good.f.mor)(a, b, m)),
            },
            g: SiteMap {
                obj: Box::new(|d| (good.g.obj)(d)),
                mor: Box::new(|a, b, m| (good.g.mor)(a, b, m)),
            },
            unit: Box::new(|c| (good.unit)(c)),
            counit: Box::new(|d| {
                let mut eps = (good.counit)(d);
                if eps.cod.size >= 2 && !eps.table.is_empty() {
                    eps.table[0] = (eps.table[0] + 1) % eps.cod.size; // perturb
                }
                eps
            }),
        };
        let report = check_triangles(&bad);
        assert!(!report.passed());
        assert!(report.witnesses.iter().any(|w| w.role.contains("object")));
    }

    #[test]
    fn non_natural_permutation_fails_hom_naturality() {
        let adj = CurryingAdjunction::new(2, 2).unwrap();
        let good = adj.bijection();
        let bad = HomBijection {
            left: good.left,
            right: good.right,
            f: SiteMap {
                obj: Box::new(|c| (good.f.obj)(c)),
                mor: Box::new(|a, b, m| (good.f.mor)(a, b, m)),
            },
            g: SiteMap {
                obj: Box::new(|d| (good.g.obj)(d)),
                mor: Box::new(|a, b, m| (good.g.mor)(a, b, m)),
            },
            alpha: Box::new(|c, d, m| {
                let mut out = (good.alpha)(c, d, m);
                // permute one hom-set: twist values when X = Y = 2, Z = 2
                if c == 2 && d == 2 && !out.table.is_empty() {
                    let n = out.cod.size;
                    out.table = out.table.iter().map(|&v| (v + 1) % n).collect();
                }
                out
            }),
            alpha_inv: Box::new(|c, d, m| {
                let mut m = m.clone();
                if c == 2 && d == 2 && !m.table.is_empty() {
                    let n = m.cod.size;
                    m.table = m.table.iter().map(|&v| (v + n - 1) % n).collect();
                }
                (good.alpha_inv)(c, d, &m)
            }),
        };
        assert!(check_bijective(&bad).passed()); // still a bijection
        assert!(!check_hom_naturality(&bad).passed()); // but not natural
    }

    #[test]
    fn right_adjoints_unique_up_to_natural_iso() {
        // two different-but-isomorphic exponential encodings; both are right
        // adjoint to (−×Y); the search finds a natural iso between them.
        let plain = CurryingAdjunction::new(2, 2).unwrap();
        let mut reversed = CurryingAdjunction::new(2, 2).unwrap();
        reversed.reversed_exponent = true;
        let b1 = plain.bijection();
        let b2 = reversed.bijection();
        assert!(check_hom_naturality(&b2).passed());
        assert!(check_bijective(&b2).passed());
        let iso = find_natural_iso(&plain.right, &plain.left, &b1.g, &b2.g);
        let family = iso.expect("a natural iso between the two right adjoints");
        for (z, component) in family.iter().enumerate() {
            assert!(component.is_bijective(), "component at {z} must be iso");
        }
    }
}
