//! The paper's stock of Set-endofunctors acting on explicit values: bounded
//! lists, Maybe, `(× A)`, `(+ A)`, `(R →)`, plus the hom-functor
//! `Hom(R, −)` out of an arbitrary finite category.
//!
//! Each functor gives an object action on canonical finite sets and a
//! morphism action on [`FinFun`] tables, so the functor laws are checkable
//! by exhaustive evaluation at the stated bounds.

use crate::cat::{FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::finset::{all_functions, function_at, function_index, FinFun, FinSet};

/// Canonical encoding of bounded lists over a set of size `base`:
/// lists are ordered by length, then lexicographically; index 0 is `[]`.
pub fn encode_list(base: usize, list: &[usize]) -> usize {
    let mut offset = 0;
    let mut block = 1;
    for _ in 0..list.len() {
        offset += block;
        block *= base;
    }
    let mut rank = 0;
    for &x in list {
        rank = rank * base + x;
    }
    offset + rank
}

/// Inverse of [`encode_list`].
pub fn decode_list(base: usize, mut index: usize) -> Vec<usize> {
    let mut len = 0;
    let mut block = 1;
    while index >= block {
        index -= block;
        block *= base;
        len += 1;
    }
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = index % base;
        index /= base;
    }
    out
}

/// Number of lists over `base` symbols with length ≤ `bound`.
pub fn list_count(base: usize, bound: usize) -> usize {
    let mut total = 0;
    let mut block = 1;
    for _ in 0..=bound {
        total += block;
        block *= base;
    }
    total
}

/// A Set-endofunctor with an explicit value-level action.
#[derive(Debug, Clone)]
pub enum SetFunctor {
    /// Lists of length ≤ bound. Map preserves length, so the bounded carrier
    /// is closed under the morphism action.
    List { bound: usize },
    /// `X ↦ X + {*}`; the adjoined point is the last index.
    Maybe,
    /// `X ↦ X × A` with the canonical pair encoding.
    Times(FinSet),
    /// `X ↦ X + A`, X first.
    Plus(FinSet),
    /// `X ↦ (R → X)`, functions indexed in enumeration order.
    Reader(FinSet),
}

impl SetFunctor {
    pub fn parse(name: &str, param: Option<usize>) -> Result<SetFunctor> {
        match name {
            "list" => Ok(SetFunctor::List { bound: param.unwrap_or(3) }),
            "maybe" => Ok(SetFunctor::Maybe),
            "times" => Ok(SetFunctor::Times(FinSet::new(param.ok_or_else(|| {
                Error::structural("set functor", "times requires a parameter set size")
            })?))),
            "plus" => Ok(SetFunctor::Plus(FinSet::new(param.ok_or_else(|| {
                Error::structural("set functor", "plus requires a parameter set size")
            })?))),
            "reader" | "hom" => Ok(SetFunctor::Reader(FinSet::new(param.ok_or_else(|| {
                Error::structural("set functor", "reader requires a parameter set size")
            })?))),
            _ => Err(Error::Unsupported(format!("unknown set functor `{name}`"))),
        }
    }

    pub fn apply_obj(&self, x: &FinSet) -> FinSet {
        match self {
            SetFunctor::List { bound } => FinSet::new(list_count(x.size, *bound)),
            SetFunctor::Maybe => FinSet::new(x.size + 1),
            SetFunctor::Times(a) => FinSet::new(x.size * a.size),
            SetFunctor::Plus(a) => FinSet::new(x.size + a.size),
            SetFunctor::Reader(r) => FinSet::new(crate::finset::function_count(r, x)),
        }
    }

    pub fn apply_mor(&self, f: &FinFun) -> FinFun {
        let dom = self.apply_obj(&f.dom);
        let cod = self.apply_obj(&f.cod);
        let table = match self {
            SetFunctor::List { .. } => (0..dom.size)
                .map(|i| {
                    let mapped: Vec<usize> = decode_list(f.dom.size, i)
                        .into_iter()
                        .map(|x| f.table[x])
                        .collect();
                    encode_list(f.cod.size, &mapped)
                })
                .collect(),
            SetFunctor::Maybe => (0..dom.size)
                .map(|i| if i < f.dom.size { f.table[i] } else { f.cod.size })
                .collect(),
            SetFunctor::Times(a) => (0..dom.size)
                .map(|i| f.table[i / a.size.max(1)] * a.size + i % a.size.max(1))
                .collect(),
            SetFunctor::Plus(_) => (0..dom.size)
                .map(|i| {
                    if i < f.dom.size {
                        f.table[i]
                    } else {
                        f.cod.size + (i - f.dom.size)
                    }
                })
                .collect(),
            SetFunctor::Reader(r) => (0..dom.size)
                .map(|i| {
                    let g = function_at(r, &f.dom, i);
                    function_index(&g.then(f).expect("reader postcomposition is well-typed"))
                })
                .collect(),
        };
        FinFun { dom, cod, table }
    }

    /// Functor laws by exhaustive evaluation over all functions between sets
    /// of size ≤ `nmax`.
    pub fn check_laws(&self, nmax: usize) -> crate::report::Report {
        use crate::report::{witness, Report};
        for a in 0..=nmax {
            let sa = FinSet::new(a);
            let mapped_id = self.apply_mor(&FinFun::identity(&sa));
            let id = FinFun::identity(&self.apply_obj(&sa));
            if mapped_id != id {
                return Report::fail(
                    "set functor preserves identity",
                    vec![witness("set size", a), witness("F(id)", mapped_id)],
                );
            }
            for b in 0..=nmax {
                for f in all_functions(&sa, &FinSet::new(b)) {
                    for c in 0..=nmax {
                        for g in all_functions(&FinSet::new(b), &FinSet::new(c)) {
                            let lhs = self.apply_mor(&f.then(&g).unwrap());
                            let rhs = self
                                .apply_mor(&f)
                                .then(&self.apply_mor(&g))
                                .unwrap();
                            if lhs != rhs {
                                return Report::fail(
                                    "set functor preserves composition",
                                    vec![witness("f", &f), witness("g", &g)],
                                );
                            }
                        }
                    }
                }
            }
        }
        Report::pass("set functor laws")
    }
}

/// The covariant hom-functor `Hom(R, −) : C → Set`: objects go to their
/// hom-sets out of `R` (as canonical finite sets ordered by morphism id) and
/// a morphism acts by postcomposition.
pub struct HomFunctor<'a> {
    pub cat: &'a FinCat,
    pub base: ObjId,
}

impl<'a> HomFunctor<'a> {
    pub fn apply_obj(&self, x: ObjId) -> FinSet {
        FinSet::new(self.cat.hom(self.base, x).len())
    }

    pub fn apply_mor(&self, f: MorId) -> Result<FinFun> {
        let (x, y) = (self.cat.dom(f), self.cat.cod(f));
        let hom_x = self.cat.hom(self.base, x);
        let hom_y = self.cat.hom(self.base, y);
        let table = hom_x
            .iter()
            .map(|&g| {
                let composed = self.cat.compose(g, f)?;
                Ok(hom_y.iter().position(|&h| h == composed).expect("composite lands in Hom(R, Y)"))
            })
            .collect::<Result<_>>()?;
        FinFun::new(self.apply_obj(x), self.apply_obj(y), table)
    }

    pub fn check_laws(&self) -> Result<crate::report::Report> {
        use crate::report::{witness, Report};
        for x in self.cat.objects() {
            let img = self.apply_mor(self.cat.identity(x))?;
            if img != FinFun::identity(&self.apply_obj(x)) {
                return Ok(Report::fail(
                    "hom-functor preserves identity",
                    vec![witness("object", self.cat.object_name(x))],
                ));
            }
        }
        for y in self.cat.objects() {
            for &p in self.cat.incoming(y) {
                for &q in self.cat.outgoing(y) {
                    let lhs = self.apply_mor(self.cat.compose(p, q)?)?;
                    let rhs = self.apply_mor(p)?.then(&self.apply_mor(q)?)?;
                    if lhs != rhs {
                        return Ok(Report::fail(
                            "hom-functor preserves composition",
                            vec![
                                witness("f", self.cat.morphism_name(p)),
                                witness("g", self.cat.morphism_name(q)),
                            ],
                        ));
                    }
                }
            }
        }
        Ok(Report::pass("hom-functor laws"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{from_preorder, PreorderPresentation};
    use crate::finset::parallel;

    #[test]
    fn list_encoding_roundtrips() {
        for base in 1..=3usize {
            for i in 0..list_count(base, 3) {
                let l = decode_list(base, i);
                assert!(l.len() <= 3);
                assert_eq!(encode_list(base, &l), i);
            }
        }
    }

    #[test]
    fn list_map_id_is_id_at_bound_3() {
        let f = SetFunctor::List { bound: 3 };
        let x = FinSet::new(2);
        let mapped = f.apply_mor(&FinFun::identity(&x));
        assert_eq!(mapped, FinFun::identity(&f.apply_obj(&x)));
    }

    #[test]
    fn maybe_fixes_the_adjoined_point() {
        let f = SetFunctor::Maybe;
        let g = FinFun::new(FinSet::new(2), FinSet::new(3), vec![2, 0]).unwrap();
        let mg = f.apply_mor(&g);
        assert_eq!(mg.table, vec![2, 0, 3]); // point 2 ↦ point 3
    }

    #[test]
    fn times_matches_value_level_parallel_map() {
        let a = FinSet::new(2);
        let f = SetFunctor::Times(a.clone());
        let g = FinFun::new(FinSet::new(2), FinSet::new(3), vec![1, 2]).unwrap();
        assert_eq!(f.apply_mor(&g), parallel(&g, &FinFun::identity(&a)));
    }

    #[test]
    fn all_builtin_functors_satisfy_laws() {
        for f in [
            SetFunctor::List { bound: 2 },
            SetFunctor::Maybe,
            SetFunctor::Times(FinSet::new(2)),
            SetFunctor::Plus(FinSet::new(2)),
            SetFunctor::Reader(FinSet::new(2)),
        ] {
            assert!(f.check_laws(2).passed(), "{f:?}");
        }
    }

    #[test]
    fn hom_functor_laws_on_a_poset() {
        let c = from_preorder(&PreorderPresentation::chain(3));
        for base in c.objects() {
            let h = HomFunctor { cat: &c, base };
            assert!(h.check_laws().unwrap().passed());
        }
    }
}
