//! Canonical finite sets and exhaustively enumerable functions between them.
//!
//! This is the category of sets at desk scale: carriers are always
//! `{0, ..., n-1}`, functions are explicit value tables, and every hom-set
//! can be walked in a fixed lexicographic order. Most other modules quantify
//! their checks over these enumerations.
//!
//! Composition is diagrammatic throughout: `f.then(g)` means "`f`, then `g`".
//! A classical-order wrapper [`FinFun::after`] exists and is defined in terms
//! of the diagrammatic one.

use crate::error::{Error, Result};

/// A canonical finite set. Elements are `0..size`; labels are
/// presentation-only and do not participate in equality.
#[derive(Debug, Clone, Default)]
pub struct FinSet {
    pub size: usize,
    pub labels: Option<Vec<String>>,
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}
impl Eq for FinSet {}

impl FinSet {
    pub fn new(size: usize) -> Self {
        FinSet { size, labels: None }
    }

    /// A labelled set. The label list must match the size and be duplicate-free.
    pub fn labelled<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::structural("FinSet", format!("duplicate label `{a}`")));
            }
        }
        Ok(FinSet {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(ls) => ls[i].clone(),
            None => i.to_string(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }
}

/// A function between canonical finite sets, given as an explicit table:
/// `table[x]` is the image of `x`. Two `FinFun`s are equal iff their domains,
/// codomains and tables are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFun {
    pub dom: FinSet,
    pub cod: FinSet,
    pub table: Vec<usize>,
}

impl FinFun {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size {
            return Err(Error::structural(
                "FinFun",
                format!("table length {} does not match domain size {}", table.len(), dom.size),
            ));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= cod.size) {
            return Err(Error::structural(
                "FinFun",
                format!("table entry {v} is not below the codomain size {}", cod.size),
            ));
        }
        Ok(FinFun { dom, cod, table })
    }

    pub fn identity(x: &FinSet) -> Self {
        FinFun {
            dom: x.clone(),
            cod: x.clone(),
            table: x.elements().collect(),
        }
    }

    /// The constant function onto `value`.
    pub fn constant(dom: FinSet, cod: FinSet, value: usize) -> Result<Self> {
        let table = vec![value; dom.size];
        FinFun::new(dom, cod, table)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Diagrammatic composition: `self`, then `g`.
    pub fn then(&self, g: &FinFun) -> Result<FinFun> {
        if self.cod.size != g.dom.size {
            return Err(Error::ComposeMismatch {
                f: format!("{self}"),
                g: format!("{g}"),
                f_cod: self.cod.size,
                g_dom: g.dom.size,
            });
        }
        Ok(FinFun {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            table: self.table.iter().map(|&x| g.table[x]).collect(),
        })
    }

    /// Classical-order composition: `self` after `f`, i.e. `f.then(self)`.
    pub fn after(&self, f: &FinFun) -> Result<FinFun> {
        f.then(self)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.size == self.cod.size && self.is_injective()
    }
}

impl std::fmt::Display for FinFun {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}]:{}→{}",
            self.table.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
            self.dom.size,
            self.cod.size
        )
    }
}

/// All `|Y|^|X|` functions `X → Y` in lexicographic table order.
///
/// The order is part of the contract: the all-zero table comes first, and the
/// table is read as a big-endian number with digits in `0..|Y|`. An empty `X`
/// yields exactly the empty function; an empty `Y` with non-empty `X` yields
/// nothing.
pub fn all_functions(x: &FinSet, y: &FinSet) -> Vec<FinFun> {
    let mut out = Vec::new();
    if y.size == 0 && x.size > 0 {
        return out;
    }
    let mut table = vec![0usize; x.size];
    loop {
        out.push(FinFun {
            dom: x.clone(),
            cod: y.clone(),
            table: table.clone(),
        });
        // increment as a base-|Y| counter, last entry least significant
        let mut i = x.size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < y.size {
                break;
            }
            table[i] = 0;
        }
    }
}

/// Number of functions `X → Y` without enumerating them.
pub fn function_count(x: &FinSet, y: &FinSet) -> usize {
    if y.size == 0 {
        return if x.size == 0 { 1 } else { 0 };
    }
    y.size.pow(x.size as u32)
}

/// Position of `f` in [`all_functions`] order.
pub fn function_index(f: &FinFun) -> usize {
    let mut idx = 0usize;
    for &v in &f.table {
        idx = idx * f.cod.size + v;
    }
    idx
}

/// Inverse of [`function_index`].
pub fn function_at(x: &FinSet, y: &FinSet, mut idx: usize) -> FinFun {
    let mut table = vec![0usize; x.size];
    for i in (0..x.size).rev() {
        table[i] = idx % y.size.max(1);
        idx /= y.size.max(1);
    }
    FinFun {
        dom: x.clone(),
        cod: y.clone(),
        table,
    }
}

/// A product cone: an apex with its two projections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCone {
    pub obj: FinSet,
    pub proj_l: FinFun,
    pub proj_r: FinFun,
}

impl ProductCone {
    /// The unique mediating map `⟨q1, q2⟩` for a span `(Q, q1, q2)`.
    pub fn pair(&self, q1: &FinFun, q2: &FinFun) -> Result<FinFun> {
        if q1.dom != q2.dom {
            return Err(Error::structural(
                "pairing",
                format!("legs have different domains: {} vs {}", q1.dom.size, q2.dom.size),
            ));
        }
        if q1.cod != self.proj_l.cod || q2.cod != self.proj_r.cod {
            return Err(Error::structural(
                "pairing",
                "legs do not target the product factors".to_string(),
            ));
        }
        let b = self.proj_r.cod.size;
        let table = q1
            .table
            .iter()
            .zip(&q2.table)
            .map(|(&i, &j)| i * b + j)
            .collect();
        FinFun::new(q1.dom.clone(), self.obj.clone(), table)
    }
}

/// The cartesian product of `A` and `B`, with pair `(i, j)` encoded as
/// `i * |B| + j`. The encoding is fixed so golden files stay bit-stable.
pub fn product(a: &FinSet, b: &FinSet) -> ProductCone {
    let obj = FinSet::new(a.size * b.size);
    let proj_l = FinFun {
        dom: obj.clone(),
        cod: a.clone(),
        table: (0..obj.size).map(|p| p / b.size.max(1)).collect(),
    };
    let proj_r = FinFun {
        dom: obj.clone(),
        cod: b.clone(),
        table: (0..obj.size).map(|p| p % b.size.max(1)).collect(),
    };
    ProductCone { obj, proj_l, proj_r }
}

/// A coproduct cocone: an apex with its two injections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoproductCocone {
    pub obj: FinSet,
    pub inj_l: FinFun,
    pub inj_r: FinFun,
}

impl CoproductCocone {
    /// The unique mediating map `[f, g]` for a cocone `(D, f, g)`.
    pub fn copair(&self, f: &FinFun, g: &FinFun) -> Result<FinFun> {
        if f.cod != g.cod {
            return Err(Error::structural(
                "copairing",
                format!("legs have different codomains: {} vs {}", f.cod.size, g.cod.size),
            ));
        }
        if f.dom != self.inj_l.dom || g.dom != self.inj_r.dom {
            return Err(Error::structural(
                "copairing",
                "legs do not come from the coproduct summands".to_string(),
            ));
        }
        let table = f.table.iter().chain(&g.table).copied().collect();
        FinFun::new(self.obj.clone(), f.cod.clone(), table)
    }
}

/// The disjoint union of `A` and `B`: `A` sits at indices `0..|A|`, `B` at
/// `|A|..|A|+|B|`.
pub fn coproduct(a: &FinSet, b: &FinSet) -> CoproductCocone {
    let obj = FinSet::new(a.size + b.size);
    let inj_l = FinFun {
        dom: a.clone(),
        cod: obj.clone(),
        table: (0..a.size).collect(),
    };
    let inj_r = FinFun {
        dom: b.clone(),
        cod: obj.clone(),
        table: (a.size..a.size + b.size).collect(),
    };
    CoproductCocone { obj, inj_l, inj_r }
}

/// An exponential object `Z^Y` together with evaluation.
#[derive(Debug, Clone)]
pub struct Exponential {
    /// The set of all functions `Y → Z`, indexed in [`all_functions`] order.
    pub obj: FinSet,
    /// Evaluation `(Z^Y) × Y → Z`, with the product encoded as in [`product`].
    pub eval: FinFun,
}

/// The set of all functions `Y → Z` plus `eval(f, y) = f(y)`.
pub fn exponential(y: &FinSet, z: &FinSet) -> Exponential {
    let fns = all_functions(y, z);
    let obj = FinSet::new(fns.len());
    let table = (0..obj.size * y.size)
        .map(|p| fns[p / y.size.max(1)].table[p % y.size.max(1)])
        .collect::<Vec<_>>();
    let eval = FinFun {
        dom: FinSet::new(obj.size * y.size),
        cod: z.clone(),
        table,
    };
    Exponential { obj, eval }
}

/// The transpose of `f : X × Y → Z`, as a function `X → Z^Y`.
///
/// `f`'s domain must use the canonical pair encoding for `(X, Y)`.
pub fn curry(f: &FinFun, x: &FinSet, y: &FinSet) -> Result<FinFun> {
    if f.dom.size != x.size * y.size {
        return Err(Error::structural(
            "curry",
            format!(
                "domain size {} is not |X|·|Y| = {}",
                f.dom.size,
                x.size * y.size
            ),
        ));
    }
    let exp = exponential(y, &f.cod);
    let table = x
        .elements()
        .map(|i| {
            let section = FinFun {
                dom: y.clone(),
                cod: f.cod.clone(),
                table: y.elements().map(|j| f.table[i * y.size + j]).collect(),
            };
            function_index(&section)
        })
        .collect();
    FinFun::new(x.clone(), exp.obj, table)
}

/// Inverse of [`curry`]: turn `g : X → Z^Y` back into `X × Y → Z`.
pub fn uncurry(g: &FinFun, y: &FinSet, z: &FinSet) -> FinFun {
    let dom = FinSet::new(g.dom.size * y.size);
    let table = (0..dom.size)
        .map(|p| {
            let (i, j) = (p / y.size.max(1), p % y.size.max(1));
            function_at(y, z, g.table[i]).table[j]
        })
        .collect();
    FinFun {
        dom,
        cod: z.clone(),
        table,
    }
}

/// `f × g` acting on canonically encoded pairs: `(a, b) ↦ (f a, g b)`.
pub fn parallel(f: &FinFun, g: &FinFun) -> FinFun {
    let dom = FinSet::new(f.dom.size * g.dom.size);
    let cod = FinSet::new(f.cod.size * g.cod.size);
    let table = (0..dom.size)
        .map(|p| {
            let (a, b) = (p / g.dom.size.max(1), p % g.dom.size.max(1));
            f.table[a] * g.cod.size + g.table[b]
        })
        .collect();
    FinFun { dom, cod, table }
}
