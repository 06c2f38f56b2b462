//! Polynomial endofunctors, their initial algebras as finite constructor
//! trees, catamorphism evaluation, and the law suite: square commutation,
//! `⟬in⟭ = id`, uniqueness of the mediating map, Lambek's theorem, and the
//! fusion property, plus the stock fold library on lists.
//!
//! Carriers split into finite-set carriers (fully exhaustive checks) and
//! named value domains — bounded integers, booleans, lists — checked over
//! bounded test vectors with exact equality. Term depth counts constructor
//! layers: the nil term has depth 1, `[a]` has depth 2.

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::report::{witness, Report};

/// Integer label window for the expression datatype. One config constant,
/// never hard-coded at call sites.
pub const EXP_INT_LO: i64 = -8;
pub const EXP_INT_HI: i64 = 8;

/// A polynomial endofunctor expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyF {
    /// A constant label set.
    Const(FinSet),
    /// The argument slot.
    Id,
    Sum(Box<PolyF>, Box<PolyF>),
    Prod(Box<PolyF>, Box<PolyF>),
}

fn int_labels(lo: i64, hi: i64) -> FinSet {
    FinSet::labelled((lo..=hi).map(|v| v.to_string()).collect::<Vec<_>>())
        .expect("integer labels are distinct")
}

/// Numeric value of a label: parsed from the label text when possible,
/// otherwise the index itself.
pub fn label_value(s: &FinSet, i: usize) -> i64 {
    match &s.labels {
        Some(ls) => ls[i].parse().unwrap_or(i as i64),
        None => i as i64,
    }
}

impl PolyF {
    /// `Maybe(X) = 1 + X`; its initial algebra is the naturals.
    pub fn nat() -> PolyF {
        PolyF::Sum(Box::new(PolyF::Const(FinSet::new(1))), Box::new(PolyF::Id))
    }

    /// `Bool = 1 + 1`.
    pub fn bool_datatype() -> PolyF {
        PolyF::Sum(
            Box::new(PolyF::Const(FinSet::new(1))),
            Box::new(PolyF::Const(FinSet::new(1))),
        )
    }

    /// List step over `A`: `X ↦ 1 + A×X`.
    pub fn list(a: FinSet) -> PolyF {
        PolyF::Sum(
            Box::new(PolyF::Const(FinSet::new(1))),
            Box::new(PolyF::Prod(Box::new(PolyF::Const(a)), Box::new(PolyF::Id))),
        )
    }

    pub fn list_bits() -> PolyF {
        PolyF::list(FinSet::labelled(vec!["0", "1"]).unwrap())
    }

    pub fn list_ints(lo: i64, hi: i64) -> PolyF {
        PolyF::list(int_labels(lo, hi))
    }

    /// Binary-tree step over `A`: `X ↦ A + X×X`.
    pub fn btree(a: FinSet) -> PolyF {
        PolyF::Sum(
            Box::new(PolyF::Const(a)),
            Box::new(PolyF::Prod(Box::new(PolyF::Id), Box::new(PolyF::Id))),
        )
    }

    /// Expression step: `X ↦ Z + (X×X + X)` for Int | Plus | Squared.
    pub fn exp(z: FinSet) -> PolyF {
        PolyF::Sum(
            Box::new(PolyF::Const(z)),
            Box::new(PolyF::Sum(
                Box::new(PolyF::Prod(Box::new(PolyF::Id), Box::new(PolyF::Id))),
                Box::new(PolyF::Id),
            )),
        )
    }

    pub fn exp_default() -> PolyF {
        PolyF::exp(int_labels(EXP_INT_LO, EXP_INT_HI))
    }

    /// Coproduct datatype: `X + Y` as `Const X + Const Y`.
    pub fn coproduct(x: FinSet, y: FinSet) -> PolyF {
        PolyF::Sum(Box::new(PolyF::Const(x)), Box::new(PolyF::Const(y)))
    }

    /// Size of `F(X)` for `|X| = x`.
    pub fn apply_size(&self, x: usize) -> usize {
        match self {
            PolyF::Const(s) => s.size,
            PolyF::Id => x,
            PolyF::Sum(a, b) => a.apply_size(x) + b.apply_size(x),
            PolyF::Prod(a, b) => a.apply_size(x) * b.apply_size(x),
        }
    }

    /// Largest constant label set appearing in the expression.
    pub fn max_const(&self) -> usize {
        match self {
            PolyF::Const(s) => s.size,
            PolyF::Id => 0,
            PolyF::Sum(a, b) | PolyF::Prod(a, b) => a.max_const().max(b.max_const()),
        }
    }
}

/// A structural value of `F(T)`: labels at constant positions, payloads at
/// the argument slots, tagged sums, pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FVal<T> {
    Label(usize),
    Hole(T),
    InL(Box<FVal<T>>),
    InR(Box<FVal<T>>),
    Pair(Box<FVal<T>>, Box<FVal<T>>),
}

impl<T> FVal<T> {
    /// The functorial action: apply `f` at every argument slot.
    pub fn map<U>(&self, f: &mut impl FnMut(&T) -> U) -> FVal<U> {
        match self {
            FVal::Label(i) => FVal::Label(*i),
            FVal::Hole(t) => FVal::Hole(f(t)),
            FVal::InL(v) => FVal::InL(Box::new(v.map(f))),
            FVal::InR(v) => FVal::InR(Box::new(v.map(f))),
            FVal::Pair(a, b) => FVal::Pair(Box::new(a.map(f)), Box::new(b.map(f))),
        }
    }
}

/// An element of the initial algebra `μF`: a finite constructor tree. The
/// constructor `in` wraps one layer of structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term(pub Box<FVal<Term>>);

impl Term {
    pub fn new(node: FVal<Term>) -> Term {
        Term(Box::new(node))
    }

    /// One constructor layer, unfolded.
    pub fn out(&self) -> &FVal<Term> {
        &self.0
    }

    /// Constructor layers: nil/zero-style terms have depth 1.
    pub fn depth(&self) -> usize {
        fn val_depth(v: &FVal<Term>) -> usize {
            match v {
                FVal::Label(_) => 0,
                FVal::Hole(t) => t.depth(),
                FVal::InL(v) | FVal::InR(v) => val_depth(v),
                FVal::Pair(a, b) => val_depth(a).max(val_depth(b)),
            }
        }
        1 + val_depth(&self.0)
    }

    /// Does the tree shape match the functor at every node?
    pub fn well_formed(&self, f: &PolyF) -> bool {
        fn check(shape: &PolyF, root: &PolyF, v: &FVal<Term>) -> bool {
            match (shape, v) {
                (PolyF::Const(s), FVal::Label(i)) => *i < s.size,
                (PolyF::Id, FVal::Hole(t)) => t.well_formed(root),
                (PolyF::Sum(a, _), FVal::InL(v)) => check(a, root, v),
                (PolyF::Sum(_, b), FVal::InR(v)) => check(b, root, v),
                (PolyF::Prod(a, b), FVal::Pair(l, r)) => check(a, root, l) && check(b, root, r),
                _ => false,
            }
        }
        check(f, f, &self.0)
    }
}

/// All structural values of `F` with argument payloads drawn from `holes`.
pub fn fvals<T: Clone>(f: &PolyF, holes: &[T]) -> Vec<FVal<T>> {
    match f {
        PolyF::Const(s) => (0..s.size).map(FVal::Label).collect(),
        PolyF::Id => holes.iter().cloned().map(FVal::Hole).collect(),
        PolyF::Sum(a, b) => fvals(a, holes)
            .into_iter()
            .map(|v| FVal::InL(Box::new(v)))
            .chain(fvals(b, holes).into_iter().map(|v| FVal::InR(Box::new(v))))
            .collect(),
        PolyF::Prod(a, b) => {
            let left = fvals(a, holes);
            let right = fvals(b, holes);
            left.iter()
                .flat_map(|l| {
                    right
                        .iter()
                        .map(move |r| FVal::Pair(Box::new(l.clone()), Box::new(r.clone())))
                })
                .collect()
        }
    }
}

/// Canonical index of an `FVal<usize>` when the payload alphabet has size
/// `x`: sums concatenate (left first), products pair as `l·|right|+r`.
pub fn encode_fval(f: &PolyF, x: usize, v: &FVal<usize>) -> usize {
    match (f, v) {
        (PolyF::Const(_), FVal::Label(i)) => *i,
        (PolyF::Id, FVal::Hole(t)) => *t,
        (PolyF::Sum(a, _), FVal::InL(v)) => encode_fval(a, x, v),
        (PolyF::Sum(a, b), FVal::InR(v)) => a.apply_size(x) + encode_fval(b, x, v),
        (PolyF::Prod(a, b), FVal::Pair(l, r)) => {
            encode_fval(a, x, l) * b.apply_size(x) + encode_fval(b, x, r)
        }
        _ => panic!("value does not match the functor shape"),
    }
}

/// Inverse of [`encode_fval`].
pub fn decode_fval(f: &PolyF, x: usize, idx: usize) -> FVal<usize> {
    match f {
        PolyF::Const(_) => FVal::Label(idx),
        PolyF::Id => FVal::Hole(idx),
        PolyF::Sum(a, b) => {
            let asize = a.apply_size(x);
            if idx < asize {
                FVal::InL(Box::new(decode_fval(a, x, idx)))
            } else {
                FVal::InR(Box::new(decode_fval(b, x, idx - asize)))
            }
        }
        PolyF::Prod(a, b) => {
            let bsize = b.apply_size(x);
            FVal::Pair(
                Box::new(decode_fval(a, x, idx / bsize)),
                Box::new(decode_fval(b, x, idx % bsize)),
            )
        }
    }
}

/// All terms with at most `depth` constructor layers, each appearing once.
pub fn enumerate_terms(f: &PolyF, depth: usize) -> Result<Vec<Term>> {
    if depth > 4 || f.max_const() > 3 {
        return Err(Error::size_limit(
            "term enumeration",
            depth.max(f.max_const()),
            4,
        ));
    }
    let mut terms: Vec<Term> = Vec::new();
    for _ in 0..depth {
        terms = fvals(f, &terms).into_iter().map(Term::new).collect();
    }
    Ok(terms)
}

/// The catamorphism: structural recursion with `cata(in(s)) = alg(F(cata)(s))`.
pub fn cata<T>(f: &PolyF, alg: &impl Fn(FVal<T>) -> T, t: &Term) -> T {
    let unfolded = t.out().map(&mut |sub| cata(f, alg, sub));
    alg(unfolded)
}

/// Carrier domains for the algebra catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Carrier {
    Fin(FinSet),
    Int,
    Bool,
    /// Lists over a finite label set.
    List(FinSet),
    /// Pairs of integers, for tupled folds.
    IntPair,
}

/// A carrier value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CV {
    Fin(usize),
    Int(i64),
    Bool(bool),
    List(Vec<usize>),
    Pair(i64, i64),
}

impl std::fmt::Display for CV {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CV::Fin(v) => write!(f, "{v}"),
            CV::Int(v) => write!(f, "{v}"),
            CV::Bool(v) => write!(f, "{v}"),
            CV::List(v) => write!(
                f,
                "[{}]",
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            CV::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// The closed catalog of named structure maps. Each evaluates one layer of
/// `F`-structure over already-folded children.
#[derive(Debug, Clone)]
pub enum NamedAlgebra {
    /// Nat functor into integers: zero ↦ 0, succ ↦ +1.
    NatValue,
    /// List-of-ints folds.
    Sum,
    Product,
    /// List-of-bools folds (labels 0/1).
    And,
    Or,
    /// nil ↦ the given tail, cons ↦ cons: concatenation as a fold.
    Append(Vec<usize>),
    Length,
    Reverse,
    /// cons(a, r) ↦ g(a):r over label indices.
    Map(Vec<usize>),
    /// keep labels where the predicate holds.
    Filter(Vec<bool>),
    /// Big-endian bits to integer; carrier is (value, length) pairs and the
    /// exported function projects left. A single-integer carrier cannot
    /// express this fold: the weight of a bit depends on the tail length.
    Bin2IntPair,
    /// Little-endian bits to integer on the same paired carrier.
    Bin2Int2Pair,
    /// Expression evaluator: Int ↦ value, Plus ↦ +, Squared ↦ ².
    ExpEval,
}

/// An algebra: a functor, a carrier, and a structure map (an explicit table
/// over encoded `F(carrier)` for finite carriers, or a named primitive).
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    pub functor: PolyF,
    pub carrier: Carrier,
    pub action: AlgebraAction,
}

#[derive(Debug, Clone)]
pub enum AlgebraAction {
    /// `table[encode(F(carrier value))] = carrier value`; carrier must be Fin.
    Table(Vec<usize>),
    Named(NamedAlgebra),
}

impl AlgebraSpec {
    pub fn table(functor: PolyF, carrier: FinSet, table: Vec<usize>) -> Result<AlgebraSpec> {
        let expected = functor.apply_size(carrier.size);
        if table.len() != expected {
            return Err(Error::structural(
                "algebra",
                format!("table has {} entries, F(carrier) has {expected}", table.len()),
            ));
        }
        if let Some(&v) = table.iter().find(|&&v| v >= carrier.size) {
            return Err(Error::structural("algebra", format!("table entry {v} outside carrier")));
        }
        Ok(AlgebraSpec {
            functor,
            carrier: Carrier::Fin(carrier),
            action: AlgebraAction::Table(table),
        })
    }

    /// Evaluate the structure map on one layer.
    pub fn eval(&self, v: FVal<CV>) -> CV {
        match &self.action {
            AlgebraAction::Table(table) => {
                let indexed = v.map(&mut |c| match c {
                    CV::Fin(i) => *i,
                    other => panic!("finite-table algebra got {other}"),
                });
                CV::Fin(table[encode_fval(&self.functor, carrier_size(&self.carrier), &indexed)])
            }
            AlgebraAction::Named(named) => eval_named(named, &self.functor, v),
        }
    }

    /// `⟬φ⟭(t)`: fold the whole term.
    pub fn cata(&self, t: &Term) -> Result<CV> {
        if !t.well_formed(&self.functor) {
            return Err(Error::structural("cata", "term does not match the functor shape"));
        }
        Ok(cata(&self.functor, &|v| self.eval(v), t))
    }
}

fn carrier_size(c: &Carrier) -> usize {
    match c {
        Carrier::Fin(s) => s.size,
        _ => 0,
    }
}

fn labels_of(f: &PolyF) -> &FinSet {
    // the A in 1 + A×X (list) — used by the list fold catalog
    match f {
        PolyF::Sum(_, rest) => match rest.as_ref() {
            PolyF::Prod(a, _) => match a.as_ref() {
                PolyF::Const(s) => s,
                _ => panic!("not a list functor"),
            },
            _ => panic!("not a list functor"),
        },
        _ => panic!("not a list functor"),
    }
}

fn eval_named(named: &NamedAlgebra, functor: &PolyF, v: FVal<CV>) -> CV {
    use FVal::*;
    match named {
        NamedAlgebra::NatValue => match v {
            InL(_) => CV::Int(0),
            InR(b) => match *b {
                Hole(CV::Int(n)) => CV::Int(n + 1),
                other => panic!("nat algebra got {other:?}"),
            },
            other => panic!("nat algebra got {other:?}"),
        },
        NamedAlgebra::ExpEval => match v {
            InL(l) => match *l {
                Label(i) => CV::Int(label_value(labels_of_exp(functor), i)),
                other => panic!("exp algebra got {other:?}"),
            },
            InR(r) => match *r {
                InL(p) => match *p {
                    Pair(a, b) => match (*a, *b) {
                        (Hole(CV::Int(x)), Hole(CV::Int(y))) => CV::Int(x + y),
                        other => panic!("exp algebra got {other:?}"),
                    },
                    other => panic!("exp algebra got {other:?}"),
                },
                InR(s) => match *s {
                    Hole(CV::Int(x)) => CV::Int(x * x),
                    other => panic!("exp algebra got {other:?}"),
                },
                other => panic!("exp algebra got {other:?}"),
            },
            other => panic!("exp algebra got {other:?}"),
        },
        // list folds: InL(Label 0) is nil, InR(Pair(Label a, Hole v)) is cons
        _ => {
            let (head, tail) = match v {
                InL(_) => (None, None),
                InR(b) => match *b {
                    Pair(a, t) => match (*a, *t) {
                        (Label(i), Hole(cv)) => (Some(i), Some(cv)),
                        other => panic!("list algebra got {other:?}"),
                    },
                    other => panic!("list algebra got {other:?}"),
                },
                other => panic!("list algebra got {other:?}"),
            };
            let labels = labels_of(functor);
            match (named, head, tail) {
                (NamedAlgebra::Sum, None, None) => CV::Int(0),
                (NamedAlgebra::Sum, Some(a), Some(CV::Int(n))) => CV::Int(label_value(labels, a) + n),
                (NamedAlgebra::Product, None, None) => CV::Int(1),
                (NamedAlgebra::Product, Some(a), Some(CV::Int(n))) => {
                    CV::Int(label_value(labels, a) * n)
                }
                (NamedAlgebra::And, None, None) => CV::Bool(true),
                (NamedAlgebra::And, Some(a), Some(CV::Bool(b))) => CV::Bool(a != 0 && b),
                (NamedAlgebra::Or, None, None) => CV::Bool(false),
                (NamedAlgebra::Or, Some(a), Some(CV::Bool(b))) => CV::Bool(a != 0 || b),
                (NamedAlgebra::Append(t), None, None) => CV::List(t.clone()),
                (NamedAlgebra::Append(_), Some(a), Some(CV::List(mut r))) => {
                    r.insert(0, a);
                    CV::List(r)
                }
                (NamedAlgebra::Length, None, None) => CV::Int(0),
                (NamedAlgebra::Length, Some(_), Some(CV::Int(n))) => CV::Int(n + 1),
                (NamedAlgebra::Reverse, None, None) => CV::List(vec![]),
                (NamedAlgebra::Reverse, Some(a), Some(CV::List(mut r))) => {
                    r.push(a);
                    CV::List(r)
                }
                (NamedAlgebra::Map(_), None, None) => CV::List(vec![]),
                (NamedAlgebra::Map(g), Some(a), Some(CV::List(mut r))) => {
                    r.insert(0, g[a]);
                    CV::List(r)
                }
                (NamedAlgebra::Filter(_), None, None) => CV::List(vec![]),
                (NamedAlgebra::Filter(p), Some(a), Some(CV::List(mut r))) => {
                    if p[a] {
                        r.insert(0, a);
                    }
                    CV::List(r)
                }
                (NamedAlgebra::Bin2IntPair, None, None) => CV::Pair(0, 0),
                (NamedAlgebra::Bin2IntPair, Some(b), Some(CV::Pair(v, len))) => {
                    CV::Pair(b as i64 * (1 << len) + v, len + 1)
                }
                (NamedAlgebra::Bin2Int2Pair, None, None) => CV::Pair(0, 0),
                (NamedAlgebra::Bin2Int2Pair, Some(b), Some(CV::Pair(v, len))) => {
                    CV::Pair(b as i64 + 2 * v, len + 1)
                }
                other => panic!("algebra/value mismatch: {other:?}"),
            }
        }
    }
}

fn labels_of_exp(f: &PolyF) -> &FinSet {
    match f {
        PolyF::Sum(a, _) => match a.as_ref() {
            PolyF::Const(s) => s,
            _ => panic!("not an expression functor"),
        },
        _ => panic!("not an expression functor"),
    }
}

/// A fold from the library: an algebra plus an optional left projection on
/// the result (for the paired-carrier folds).
pub struct FoldFunction {
    pub spec: AlgebraSpec,
    pub project_left: bool,
}

impl FoldFunction {
    pub fn apply(&self, t: &Term) -> Result<CV> {
        let v = self.spec.cata(t)?;
        Ok(if self.project_left {
            match v {
                CV::Pair(a, _) => CV::Int(a),
                other => other,
            }
        } else {
            v
        })
    }
}

/// The named fold library over list functors.
///
/// `labels` is the list element alphabet; numeric folds read label values
/// as integers. `arg` carries the parameter for append/map/filter, as a
/// comma-separated index list ("1,0" etc.) or single entries.
pub fn fold_library(name: &str, labels: FinSet, arg: Option<&str>) -> Result<FoldFunction> {
    let functor = PolyF::list(labels.clone());
    let parse_indices = |s: &str| -> Result<Vec<usize>> {
        if s.is_empty() {
            return Ok(vec![]);
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::structural("fold argument", format!("bad index `{p}`")))
            })
            .collect()
    };
    let named = match name {
        "sum" => NamedAlgebra::Sum,
        "product" => NamedAlgebra::Product,
        "and" => NamedAlgebra::And,
        "or" => NamedAlgebra::Or,
        "length" => NamedAlgebra::Length,
        "reverse" => NamedAlgebra::Reverse,
        "append" => NamedAlgebra::Append(parse_indices(arg.unwrap_or(""))?),
        "map" => {
            let g = parse_indices(arg.ok_or_else(|| Error::structural("fold", "map needs a label table"))?)?;
            if g.len() != labels.size || g.iter().any(|&v| v >= labels.size) {
                return Err(Error::structural("fold", "map table must cover the label set"));
            }
            NamedAlgebra::Map(g)
        }
        "filter" => {
            let p = parse_indices(arg.ok_or_else(|| Error::structural("fold", "filter needs a 0/1 mask"))?)?;
            if p.len() != labels.size {
                return Err(Error::structural("fold", "filter mask must cover the label set"));
            }
            NamedAlgebra::Filter(p.into_iter().map(|v| v != 0).collect())
        }
        "bin2int" => NamedAlgebra::Bin2IntPair,
        "bin2int2_pair" | "bin2int2" => NamedAlgebra::Bin2Int2Pair,
        _ => return Err(Error::Unsupported(format!("unknown fold `{name}`"))),
    };
    let project_left = matches!(named, NamedAlgebra::Bin2IntPair | NamedAlgebra::Bin2Int2Pair);
    let carrier = match named {
        NamedAlgebra::Sum | NamedAlgebra::Product | NamedAlgebra::Length => Carrier::Int,
        NamedAlgebra::And | NamedAlgebra::Or => Carrier::Bool,
        NamedAlgebra::Bin2IntPair | NamedAlgebra::Bin2Int2Pair => Carrier::IntPair,
        _ => Carrier::List(labels),
    };
    Ok(FoldFunction {
        spec: AlgebraSpec {
            functor,
            carrier,
            action: AlgebraAction::Named(named),
        },
        project_left,
    })
}

/// Build a list term from label indices.
pub fn list_term(labels: &FinSet, entries: &[usize]) -> Result<Term> {
    for &e in entries {
        if e >= labels.size {
            return Err(Error::structural("list term", format!("label index {e} out of range")));
        }
    }
    let mut t = Term::new(FVal::InL(Box::new(FVal::Label(0))));
    for &e in entries.iter().rev() {
        t = Term::new(FVal::InR(Box::new(FVal::Pair(
            Box::new(FVal::Label(e)),
            Box::new(FVal::Hole(t)),
        ))));
    }
    Ok(t)
}

/// Build the numeral `n` as a nat term.
pub fn nat_term(n: usize) -> Term {
    let mut t = Term::new(FVal::InL(Box::new(FVal::Label(0))));
    for _ in 0..n {
        t = Term::new(FVal::InR(Box::new(FVal::Hole(t))));
    }
    t
}

/// Read back a list term's label indices.
pub fn list_entries(t: &Term) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = t;
    loop {
        match cur.out() {
            FVal::InL(_) => return Some(out),
            FVal::InR(b) => match b.as_ref() {
                FVal::Pair(a, t) => match (a.as_ref(), t.as_ref()) {
                    (FVal::Label(i), FVal::Hole(rest)) => {
                        out.push(*i);
                        cur = rest;
                    }
                    _ => return None,
                },
                _ => return None,
            },
            _ => return None,
        }
    }
}

/// The full catamorphism law suite for one algebra over a finite carrier:
/// (a) the defining square commutes at every enumerated term, (b) the fold
/// of the in-algebra is the identity, (c) the fold is the unique
/// square-commuting map — by brute force over all candidate maps when
/// `|carrier|^#terms ≤ 10^5`, by the induction-forced-value argument
/// otherwise (the square forces each value bottom-up, so any solution
/// agrees with the fold; both verdicts coincide).
pub fn check_cata_laws(f: &PolyF, alg: &AlgebraSpec, depth: usize) -> Result<Report> {
    let terms = enumerate_terms(f, depth)?;

    // (a) square commutation: cata(in(s)) = φ(F(cata)(s)), both sides
    // computed through their own path
    for t in &terms {
        let lhs = alg.cata(t)?;
        let unfolded = t.out().map(&mut |sub| alg.cata(sub).expect("subterm folds"));
        let rhs = alg.eval(unfolded);
        if lhs != rhs {
            return Ok(Report::fail(
                "catamorphism square",
                vec![witness("term", format!("{t:?}")), witness("cata", lhs), witness("forced", rhs)],
            ));
        }
    }

    // (b) ⟬in⟭ = id
    for t in &terms {
        let folded: Term = cata(f, &Term::new, t);
        if folded != *t {
            return Ok(Report::fail(
                "⟬in⟭ = id",
                vec![witness("term", format!("{t:?}"))],
            ));
        }
    }

    // (c) uniqueness over the finite carrier
    let Carrier::Fin(carrier) = &alg.carrier else {
        return Ok(Report::pass("catamorphism laws (square and ⟬in⟭=id)")
            .with_detail(format!("{} terms at depth ≤ {depth}; uniqueness needs a finite carrier", terms.len())));
    };
    if carrier.size > 3 {
        return Err(Error::size_limit("uniqueness sweep carrier", carrier.size, 3));
    }
    // hashed index and one-layer shapes with subterm positions resolved once
    let term_index: std::collections::HashMap<&Term, usize> =
        terms.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let shapes: Vec<FVal<usize>> = terms
        .iter()
        .map(|t| t.out().map(&mut |sub| term_index[sub]))
        .collect();
    let mut cata_values = vec![usize::MAX; terms.len()];
    // subterms may be enumerated after their parents; resolve recursively
    fn value_at(
        i: usize,
        shapes: &[FVal<usize>],
        alg: &AlgebraSpec,
        out: &mut Vec<usize>,
    ) -> usize {
        if out[i] != usize::MAX {
            return out[i];
        }
        let folded = shapes[i].map(&mut |&j| CV::Fin(value_at(j, shapes, alg, out)));
        let CV::Fin(v) = alg.eval(folded) else { unreachable!("finite carrier") };
        out[i] = v;
        v
    }
    for i in 0..terms.len() {
        value_at(i, &shapes, alg, &mut cata_values);
    }
    let combos = (carrier.size as f64).powi(terms.len() as i32);
    if combos <= 1e5 && carrier.size > 0 {
        // brute force: every square-commuting assignment equals cata
        let mut assignment = vec![0usize; terms.len()];
        let mut solutions = 0usize;
        loop {
            let commutes = (0..terms.len()).all(|i| {
                let folded = shapes[i].map(&mut |&j| CV::Fin(assignment[j]));
                alg.eval(folded) == CV::Fin(assignment[i])
            });
            if commutes {
                solutions += 1;
                if assignment != cata_values {
                    return Ok(Report::fail(
                        "catamorphism uniqueness",
                        vec![witness("rival assignment", format!("{assignment:?}"))],
                    ));
                }
            }
            let mut i = terms.len();
            loop {
                if i == 0 {
                    if solutions != 1 {
                        return Ok(Report::fail(
                            "catamorphism uniqueness",
                            vec![witness("solution count", solutions)],
                        ));
                    }
                    return Ok(Report::pass("catamorphism laws")
                        .with_detail(format!("uniqueness by brute force over {combos} candidate maps")));
                }
                i -= 1;
                assignment[i] += 1;
                if assignment[i] < carrier.size {
                    break;
                }
                assignment[i] = 0;
            }
        }
    }
    // induction-forced-value: the square forces each value from the subterm
    // values, so any square-commuting map agrees with the fold; verify the
    // forced value equals cata at every term
    for i in 0..terms.len() {
        let forced = alg.eval(shapes[i].map(&mut |&j| CV::Fin(cata_values[j])));
        if forced != CV::Fin(cata_values[i]) {
            return Ok(Report::fail(
                "catamorphism uniqueness (forced value)",
                vec![witness("term", format!("{:?}", terms[i]))],
            ));
        }
    }
    Ok(Report::pass("catamorphism laws")
        .with_detail(format!("uniqueness by forced values over {} terms", terms.len())))
}

/// Lambek's theorem at depth `d`: `in⁻¹ := ⟬F(in)⟭` is a two-sided inverse
/// of the constructor on all enumerated terms and one-layer values.
pub fn lambek_check(f: &PolyF, depth: usize) -> Result<Report> {
    let terms = enumerate_terms(f, depth)?;
    // ⟬F(in)⟭: carrier is F(μF); the algebra applies in at the argument slots
    let alg = |s: FVal<FVal<Term>>| -> FVal<Term> { s.map(&mut |inner| Term::new(inner.clone())) };
    let in_inv = |t: &Term| -> FVal<Term> { cata(f, &alg, t) };
    for t in &terms {
        let round = Term::new(in_inv(t));
        if round != *t {
            return Ok(Report::fail(
                "Lambek in·in⁻¹ = id",
                vec![witness("term", format!("{t:?}"))],
            ));
        }
    }
    let shallower = enumerate_terms(f, depth.saturating_sub(1))?;
    for s in fvals(f, &shallower) {
        let round = in_inv(&Term::new(s.clone()));
        if round != s {
            return Ok(Report::fail(
                "Lambek in⁻¹·in = id",
                vec![witness("value", format!("{s:?}"))],
            ));
        }
    }
    Ok(Report::pass("Lambek two-sided inverse")
        .with_detail(format!("{} terms at depth ≤ {depth}", terms.len())))
}

/// Carrier maps for fusion checks.
#[derive(Debug, Clone)]
pub enum CarrierMap {
    /// the successor on integers
    AddOne,
    /// elementwise relabeling of list carriers
    MapLabels(Vec<usize>),
}

impl CarrierMap {
    pub fn apply(&self, v: &CV) -> CV {
        match (self, v) {
            (CarrierMap::AddOne, CV::Int(n)) => CV::Int(n + 1),
            (CarrierMap::MapLabels(g), CV::List(xs)) => {
                CV::List(xs.iter().map(|&x| g[x]).collect())
            }
            other => panic!("carrier map mismatch: {other:?}"),
        }
    }
}

pub struct FusionOutcome {
    pub premise: Report,
    /// Checked and asserted only when the premise holds.
    pub conclusion: Option<Report>,
}

/// The fusion property: if `h` is an algebra homomorphism from φ to ψ
/// (premise: `h(φ(s)) = ψ(F(h)(s))` on every generated one-layer value),
/// then `h ∘ ⟬φ⟭ = ⟬ψ⟭` (conclusion: checked on all terms to `depth`).
///
/// One-layer test values place carrier test vectors at the argument slots;
/// for value-domain carriers those vectors are the folds of the enumerated
/// terms plus a small integer window, keeping equality exact.
fn try_list_labels(f: &PolyF) -> Option<&FinSet> {
    match f {
        PolyF::Sum(unit, rest) => match (unit.as_ref(), rest.as_ref()) {
            (PolyF::Const(u), PolyF::Prod(a, x)) if u.size == 1 => match (a.as_ref(), x.as_ref()) {
                (PolyF::Const(s), PolyF::Id) => Some(s),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

/// Terms for a fusion sweep: length-bounded for list functors (label sets
/// can be wide there), depth-bounded otherwise.
fn fusion_terms(f: &PolyF, bound: usize) -> Result<Vec<Term>> {
    match try_list_labels(f) {
        Some(labels) => Ok(enumerate_list_terms(labels, bound)),
        None => enumerate_terms(f, bound),
    }
}

pub fn fusion_check(
    phi: &AlgebraSpec,
    psi: &AlgebraSpec,
    h: &CarrierMap,
    depth: usize,
) -> Result<FusionOutcome> {
    let f = &phi.functor;
    let terms = fusion_terms(f, depth)?;
    // carrier test vectors for the premise
    let mut vectors: Vec<CV> = match &phi.carrier {
        Carrier::Fin(s) => (0..s.size).map(CV::Fin).collect(),
        Carrier::Int => (-10..=10).map(CV::Int).collect(),
        Carrier::Bool => vec![CV::Bool(false), CV::Bool(true)],
        Carrier::List(_) | Carrier::IntPair => Vec::new(),
    };
    for t in &terms {
        let v = phi.cata(t)?;
        if !vectors.contains(&v) {
            vectors.push(v);
        }
    }
    let mut premise = Report::pass("fusion premise h·φ = ψ·F(h)");
    'outer: for s in fvals(f, &vectors) {
        let lhs = h.apply(&phi.eval(s.clone()));
        let rhs = psi.eval(s.map(&mut |v| h.apply(v)));
        if lhs != rhs {
            premise = Report::fail(
                "fusion premise h·φ = ψ·F(h)",
                vec![
                    witness("one-layer value", format!("{s:?}")),
                    witness("h(φ(s))", lhs),
                    witness("ψ(F(h)(s))", rhs),
                ],
            );
            break 'outer;
        }
    }
    if !premise.passed() {
        return Ok(FusionOutcome { premise, conclusion: None });
    }
    let mut conclusion = Report::pass("fusion conclusion h·⟬φ⟭ = ⟬ψ⟭")
        .with_detail(format!("{} terms at depth ≤ {depth}", terms.len()));
    for t in &terms {
        let lhs = h.apply(&phi.cata(t)?);
        let rhs = psi.cata(t)?;
        if lhs != rhs {
            conclusion = Report::fail(
                "fusion conclusion h·⟬φ⟭ = ⟬ψ⟭",
                vec![
                    witness("term", format!("{t:?}")),
                    witness("h(⟬φ⟭ t)", lhs),
                    witness("⟬ψ⟭ t", rhs),
                ],
            );
            break;
        }
    }
    Ok(FusionOutcome { premise, conclusion: Some(conclusion) })
}

/// `(+1) ∘ sum = fold(+, 1)`: φ = [0, +], ψ = [1, +], h = (+1); lists over
/// the given integer window checked to the given length.
pub fn fusion_sum_plus_one(lo: i64, hi: i64, max_len: usize) -> Result<FusionOutcome> {
    let labels = int_labels(lo, hi);
    let phi = fold_library("sum", labels.clone(), None)?.spec;
    let f = PolyF::list(labels.clone());
    let terms = enumerate_list_terms(&labels, max_len);
    // premise, as in the two solution cases: (+1)(0) = 1 and
    // (+1)(m + n) = m + ((+1) n), over the integer window
    let mut premise = Report::pass("fusion premise for (+1)·sum");
    if 0 + 1 != 1 {
        premise = Report::fail("fusion premise for (+1)·sum", vec![witness("case", "*")]);
    }
    'outer: for a in lo..=hi {
        for n in -20..=20i64 {
            if (a + n) + 1 != a + (n + 1) {
                premise = Report::fail(
                    "fusion premise for (+1)·sum",
                    vec![witness("pair", format!("({a},{n})"))],
                );
                break 'outer;
            }
        }
    }
    if !premise.passed() {
        return Ok(FusionOutcome { premise, conclusion: None });
    }
    let sum_alg = phi;
    let fold_plus_one = |t: &Term| -> Result<i64> {
        // fold (+) with nil ↦ 1
        let v = cata(&f, &|v: FVal<CV>| match v {
            FVal::InL(_) => CV::Int(1),
            FVal::InR(b) => match *b {
                FVal::Pair(a, t) => match (*a, *t) {
                    (FVal::Label(i), FVal::Hole(CV::Int(n))) => CV::Int(label_value(&labels, i) + n),
                    other => panic!("unexpected {other:?}"),
                },
                other => panic!("unexpected {other:?}"),
            },
            other => panic!("unexpected {other:?}"),
        }, t);
        match v {
            CV::Int(n) => Ok(n),
            _ => unreachable!(),
        }
    };
    let mut conclusion =
        Report::pass("(+1)·sum = fold(+,1)").with_detail(format!("{} lists checked", terms.len()));
    for t in &terms {
        let CV::Int(s) = sum_alg.cata(t)? else { unreachable!() };
        if s + 1 != fold_plus_one(t)? {
            conclusion = Report::fail(
                "(+1)·sum = fold(+,1)",
                vec![witness("list", format!("{:?}", list_entries(t)))],
            );
            break;
        }
    }
    Ok(FusionOutcome { premise, conclusion: Some(conclusion) })
}

/// All list terms over `labels` up to the given length (not constructor
/// depth), for fusion sweeps on longer lists.
pub fn enumerate_list_terms(labels: &FinSet, max_len: usize) -> Vec<Term> {
    let mut out = vec![];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    out.push(list_term(labels, &[]).unwrap());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for l in &layer {
            for a in 0..labels.size {
                let mut e = l.clone();
                e.push(a);
                out.push(list_term(labels, &e).unwrap());
                next.push(e);
            }
        }
        layer = next;
    }
    out
}

/// `map g ∘ map f = map (g·f)` through the fusion property.
pub fn fusion_map_map(labels: FinSet, f_table: Vec<usize>, g_table: Vec<usize>, max_len: usize) -> Result<FusionOutcome> {
    let phi = fold_library("map", labels.clone(), Some(&indices_arg(&f_table)))?.spec;
    let gf: Vec<usize> = f_table.iter().map(|&a| g_table[a]).collect();
    let psi = fold_library("map", labels.clone(), Some(&indices_arg(&gf)))?.spec;
    let h = CarrierMap::MapLabels(g_table);
    // premise over one-layer values with enumerated list vectors
    let terms = enumerate_list_terms(&labels, max_len);
    let vectors: Vec<CV> = terms.iter().map(|t| CV::List(list_entries(t).unwrap())).collect();
    let f = &phi.functor;
    for s in fvals(f, &vectors) {
        let lhs = h.apply(&phi.eval(s.clone()));
        let rhs = psi.eval(s.map(&mut |v| h.apply(v)));
        if lhs != rhs {
            return Ok(FusionOutcome {
                premise: Report::fail(
                    "fusion premise map g·map f",
                    vec![witness("one-layer value", format!("{s:?}"))],
                ),
                conclusion: None,
            });
        }
    }
    let mut conclusion = Report::pass("map g ∘ map f = map (g·f)")
        .with_detail(format!("{} lists checked", terms.len()));
    for t in &terms {
        let lhs = h.apply(&phi.cata(t)?);
        let rhs = psi.cata(t)?;
        if lhs != rhs {
            conclusion = Report::fail(
                "map g ∘ map f = map (g·f)",
                vec![witness("list", format!("{:?}", list_entries(t)))],
            );
            break;
        }
    }
    Ok(FusionOutcome {
        premise: Report::pass("fusion premise map g·map f"),
        conclusion: Some(conclusion),
    })
}

fn indices_arg(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Parse a list literal like `[1,0,1]`; entries are matched against the
/// label names of the alphabet.
pub fn parse_list_literal(labels: &FinSet, text: &str) -> Result<Term> {
    let inner = text
        .trim()
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::structural("list literal", "expected [a,b,...]"))?;
    let mut entries = Vec::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let idx = match &labels.labels {
            Some(ls) => ls.iter().position(|l| l == part),
            None => part.parse::<usize>().ok().filter(|&v| v < labels.size),
        }
        .ok_or_else(|| Error::structural("list literal", format!("unknown label `{part}`")))?;
        entries.push(idx);
    }
    list_term(labels, &entries)
}

/// Parse a natural-number literal: `s(s(z))` or a decimal numeral.
pub fn parse_nat_literal(text: &str) -> Result<Term> {
    let text = text.trim();
    if let Ok(n) = text.parse::<usize>() {
        if n > 64 {
            return Err(Error::size_limit("nat literal", n, 64));
        }
        return Ok(nat_term(n));
    }
    let mut rest = text;
    let mut count = 0usize;
    loop {
        if rest == "z" {
            return Ok(nat_term(count));
        }
        rest = rest
            .strip_prefix("s(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::structural("nat literal", "expected s(...) or z or a numeral"))?;
        count += 1;
        if count > 64 {
            return Err(Error::size_limit("nat literal", count, 64));
        }
    }
}

/// Parse an expression s-literal: `(plus (int 3) (squared (int 2)))`.
pub fn parse_exp_literal(text: &str) -> Result<Term> {
    #[derive(Debug)]
    enum Sexp {
        Atom(String),
        List(Vec<Sexp>),
    }
    fn tokenize(s: &str) -> Vec<String> {
        s.replace('(', " ( ")
            .replace(')', " ) ")
            .split_whitespace()
            .map(String::from)
            .collect()
    }
    fn parse(tokens: &[String], pos: &mut usize) -> Result<Sexp> {
        let t = tokens
            .get(*pos)
            .ok_or_else(|| Error::structural("exp literal", "unexpected end of input"))?;
        *pos += 1;
        if t == "(" {
            let mut items = Vec::new();
            while tokens.get(*pos).map(String::as_str) != Some(")") {
                if *pos >= tokens.len() {
                    return Err(Error::structural("exp literal", "missing )"));
                }
                items.push(parse(tokens, pos)?);
            }
            *pos += 1;
            Ok(Sexp::List(items))
        } else if t == ")" {
            Err(Error::structural("exp literal", "unexpected )"))
        } else {
            Ok(Sexp::Atom(t.clone()))
        }
    }
    fn build(s: &Sexp) -> Result<Term> {
        let Sexp::List(items) = s else {
            return Err(Error::structural("exp literal", "expected (...)"));
        };
        let head = match items.first() {
            Some(Sexp::Atom(a)) => a.as_str(),
            _ => return Err(Error::structural("exp literal", "expected a constructor name")),
        };
        match (head, items.len()) {
            ("int", 2) => {
                let Sexp::Atom(n) = &items[1] else {
                    return Err(Error::structural("exp literal", "int needs a numeral"));
                };
                let v: i64 = n
                    .parse()
                    .map_err(|_| Error::structural("exp literal", format!("bad integer `{n}`")))?;
                if !(EXP_INT_LO..=EXP_INT_HI).contains(&v) {
                    return Err(Error::size_limit(
                        "exp integer literal",
                        v.unsigned_abs() as usize,
                        EXP_INT_HI as usize,
                    ));
                }
                Ok(Term::new(FVal::InL(Box::new(FVal::Label((v - EXP_INT_LO) as usize)))))
            }
            ("plus", 3) => Ok(Term::new(FVal::InR(Box::new(FVal::InL(Box::new(FVal::Pair(
                Box::new(FVal::Hole(build(&items[1])?)),
                Box::new(FVal::Hole(build(&items[2])?)),
            ))))))),
            ("squared", 2) => Ok(Term::new(FVal::InR(Box::new(FVal::InR(Box::new(
                FVal::Hole(build(&items[1])?),
            )))))),
            _ => Err(Error::structural(
                "exp literal",
                format!("unknown constructor `{head}` with {} argument(s)", items.len() - 1),
            )),
        }
    }
    let tokens = tokenize(text);
    let mut pos = 0;
    let sexp = parse(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::structural("exp literal", "trailing input"));
    }
    build(&sexp)
}

/// Render a nat term as `s(s(z))`.
pub fn render_nat(t: &Term) -> String {
    match t.out() {
        FVal::InL(_) => "z".into(),
        FVal::InR(b) => match b.as_ref() {
            FVal::Hole(sub) => format!("s({})", render_nat(sub)),
            _ => "?".into(),
        },
        _ => "?".into(),
    }
}

/// The conatural-number algebra `(ℕ∞, zero^c, succ^c)` is *not* an initial
/// Maybe-algebra: two distinct algebra homomorphisms out of it reach the
/// carrier `({0,1}, z = 0, s = id)`. The maps agree on every finite value
/// (forced to 0 by the recursion) and differ at ∞, where the square only
/// demands a fixed point of `s` — and `id` has two.
pub fn conat_algebra_not_initial() -> Report {
    use crate::coalgebra::Conat;
    // target algebra: carrier {0,1}, z = 0, s = id
    let z = 0usize;
    let s = |v: usize| v;
    let g1 = |v: Conat| -> usize {
        match v {
            Conat::Fin(_) => 0,
            Conat::Inf => 0,
        }
    };
    let g2 = |v: Conat| -> usize {
        match v {
            Conat::Fin(_) => 0,
            Conat::Inf => 1,
        }
    };
    // verify both make the algebra square commute: g(zero^c) = z,
    // g(succ^c(v)) = s(g(v)) on Fin(0..8) and at ∞
    for g in [&g1 as &dyn Fn(Conat) -> usize, &g2] {
        if g(Conat::Fin(0)) != z {
            return Report::fail("conat homomorphism zero case", vec![witness("map", "g")]);
        }
        for n in 0..8u64 {
            if g(Conat::Fin(n + 1)) != s(g(Conat::Fin(n))) {
                return Report::fail("conat homomorphism succ case", vec![witness("n", n)]);
            }
        }
        if g(Conat::Inf) != s(g(Conat::Inf)) {
            return Report::fail("conat homomorphism ∞ case", vec![witness("map", "g")]);
        }
    }
    if g1(Conat::Inf) == g2(Conat::Inf) {
        return Report::fail("conat maps must differ", vec![witness("value", "∞")]);
    }
    Report::pass("conaturals are not an initial algebra").with_detail(
        "two distinct homomorphisms into ({0,1}, z=0, s=id), differing at ∞",
    )
}

/// `(⊥, id)` is the initial algebra of the identity functor: materialize
/// the category of Id-algebras over `C` (objects are endomorphisms,
/// morphisms are commuting squares) and run the initial-object search.
pub fn initial_object_is_initial_algebra_of_id(cat: &crate::cat::FinCat) -> Result<Report> {
    use crate::cat::{FinCat, MorData, MorId, ObjId};
    use crate::queries::{find_universal, Polarity};
    let base_initial = find_universal(cat, Polarity::Initial);
    if base_initial.objects.is_empty() {
        return Ok(Report::pass("initial algebra of Id: not applicable")
            .with_detail("the base category has no initial object"));
    }
    // objects: all (X, e : X→X)
    let mut objs: Vec<(ObjId, MorId)> = Vec::new();
    for x in cat.objects() {
        for &e in cat.hom(x, x) {
            objs.push((x, e));
        }
    }
    let names: Vec<String> = objs
        .iter()
        .map(|&(x, e)| format!("({},{})", cat.object_name(x), cat.morphism_name(e)))
        .collect();
    let mut mors: Vec<MorData> = Vec::new();
    let mut base_of: Vec<MorId> = Vec::new();
    let mut identities = vec![MorId(0); objs.len()];
    let mut index: std::collections::BTreeMap<(usize, usize, MorId), MorId> =
        std::collections::BTreeMap::new();
    for (a, &(x, e)) in objs.iter().enumerate() {
        for (b, &(y, d)) in objs.iter().enumerate() {
            for &f in cat.hom(x, y) {
                // square: e·f = f·d
                if cat.compose(e, f)? != cat.compose(f, d)? {
                    continue;
                }
                let id = MorId(mors.len());
                index.insert((a, b, f), id);
                mors.push(MorData {
                    name: format!("{}[{a}→{b}]", cat.morphism_name(f)),
                    dom: ObjId(a),
                    cod: ObjId(b),
                });
                base_of.push(f);
                if a == b && f == cat.identity(x) {
                    identities[a] = id;
                }
            }
        }
    }
    let doms: Vec<usize> = mors.iter().map(|m| m.dom.0).collect();
    let cods: Vec<usize> = mors.iter().map(|m| m.cod.0).collect();
    let base = base_of.clone();
    let alg_cat = FinCat::from_fn(names.clone(), mors, identities, |f, g| {
        let composite = cat.compose(base[f.0], base[g.0]).expect("squares compose");
        index[&(doms[f.0], cods[g.0], composite)]
    })?;
    if !alg_cat.check_laws().passed() {
        return Ok(Report::fail(
            "Id-algebra category laws",
            vec![witness("category", "Alg(Id)")],
        ));
    }
    let w = find_universal(&alg_cat, Polarity::Initial);
    let bottom = base_initial.objects[0];
    let target = objs
        .iter()
        .position(|&(x, e)| x == bottom && e == cat.identity(bottom))
        .expect("(⊥, id) is an object");
    if !w.objects.contains(&ObjId(target)) {
        return Ok(Report::fail(
            "(⊥, id) initial in Alg(Id)",
            vec![witness("expected", &names[target])],
        ));
    }
    Ok(Report::pass("(⊥, id) is the initial Id-algebra")
        .with_detail(format!("Alg(Id) has {} objects", objs.len())))
}

/// A polynomial bifunctor in a parameter `A` and the recursion slot `X`.
#[derive(Debug, Clone)]
pub enum BiPolyF {
    Const(FinSet),
    /// The parameter slot `A`.
    Param,
    /// The recursion slot `X`.
    Rec,
    Sum(Box<BiPolyF>, Box<BiPolyF>),
    Prod(Box<BiPolyF>, Box<BiPolyF>),
}

impl BiPolyF {
    pub fn list_step() -> BiPolyF {
        BiPolyF::Sum(
            Box::new(BiPolyF::Const(FinSet::new(1))),
            Box::new(BiPolyF::Prod(Box::new(BiPolyF::Param), Box::new(BiPolyF::Rec))),
        )
    }

    pub fn btree_step() -> BiPolyF {
        BiPolyF::Sum(
            Box::new(BiPolyF::Param),
            Box::new(BiPolyF::Prod(Box::new(BiPolyF::Rec), Box::new(BiPolyF::Rec))),
        )
    }

    /// Fix the parameter: `F_A = F(A, −)`.
    pub fn instantiate(&self, a: &FinSet) -> PolyF {
        match self {
            BiPolyF::Const(s) => PolyF::Const(s.clone()),
            BiPolyF::Param => PolyF::Const(a.clone()),
            BiPolyF::Rec => PolyF::Id,
            BiPolyF::Sum(l, r) => {
                PolyF::Sum(Box::new(l.instantiate(a)), Box::new(r.instantiate(a)))
            }
            BiPolyF::Prod(l, r) => {
                PolyF::Prod(Box::new(l.instantiate(a)), Box::new(r.instantiate(a)))
            }
        }
    }
}

/// The functor `A ↦ μF_A` on morphisms: the unique mediating map induced by
/// the algebra `in_{A'} ∘ F(f, id)`, evaluated as a catamorphism. Relabels
/// parameter positions through `f` and preserves all structure.
pub fn mu_map(bi: &BiPolyF, a: &FinSet, f: &[usize], t: &Term) -> Term {
    fn relabel(bi: &BiPolyF, root: &BiPolyF, a: &FinSet, f: &[usize], v: &FVal<Term>) -> FVal<Term> {
        match (bi, v) {
            (BiPolyF::Const(_), FVal::Label(i)) => FVal::Label(*i),
            (BiPolyF::Param, FVal::Label(i)) => FVal::Label(f[*i]),
            (BiPolyF::Rec, FVal::Hole(sub)) => {
                FVal::Hole(Term::new(relabel(root, root, a, f, sub.out())))
            }
            (BiPolyF::Sum(l, _), FVal::InL(v)) => {
                FVal::InL(Box::new(relabel(l, root, a, f, v)))
            }
            (BiPolyF::Sum(_, r), FVal::InR(v)) => {
                FVal::InR(Box::new(relabel(r, root, a, f, v)))
            }
            (BiPolyF::Prod(l, r), FVal::Pair(x, y)) => FVal::Pair(
                Box::new(relabel(l, root, a, f, x)),
                Box::new(relabel(r, root, a, f, y)),
            ),
            other => panic!("term does not match the bifunctor shape: {other:?}"),
        }
    }
    Term::new(relabel(bi, bi, a, f, t.out()))
}

/// Functor laws for `A ↦ μF_A` on enumerated terms: identity and
/// composition.
pub fn check_mu_functor(bi: &BiPolyF, a: &FinSet, depth: usize) -> Result<Report> {
    let fa = bi.instantiate(a);
    let terms = enumerate_terms(&fa, depth)?;
    let id_table: Vec<usize> = (0..a.size).collect();
    for t in &terms {
        if mu_map(bi, a, &id_table, t) != *t {
            return Ok(Report::fail(
                "μF functor preserves identity",
                vec![witness("term", format!("{t:?}"))],
            ));
        }
    }
    // composition with all pairs of endo-tables on A
    let tables = crate::finset::all_functions(a, a);
    for f in &tables {
        for g in &tables {
            let fg: Vec<usize> = f.table.iter().map(|&x| g.table[x]).collect();
            for t in &terms {
                let lhs = mu_map(bi, a, &g.table, &mu_map(bi, a, &f.table, t));
                let rhs = mu_map(bi, a, &fg, t);
                if lhs != rhs {
                    return Ok(Report::fail(
                        "μF functor preserves composition",
                        vec![witness("term", format!("{t:?}"))],
                    ));
                }
            }
        }
    }
    Ok(Report::pass("μF is a functor in the parameter")
        .with_detail(format!("{} terms, {} table pairs", terms.len(), tables.len().pow(2))))
}


#[cfg(test)]
mod literal_tests {
    use super::*;

    #[test]
    fn literals_parse_and_evaluate() {
        let bits = FinSet::labelled(vec!["0", "1"]).unwrap();
        let t = parse_list_literal(&bits, "[1,0,1]").unwrap();
        assert_eq!(list_entries(&t).unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_nat_literal("s(s(z))").unwrap(), nat_term(2));
        assert_eq!(parse_nat_literal("3").unwrap(), nat_term(3));
        assert_eq!(render_nat(&nat_term(2)), "s(s(z))");
        let e = parse_exp_literal("(plus (int 3) (squared (int 2)))").unwrap();
        let alg = AlgebraSpec {
            functor: PolyF::exp_default(),
            carrier: Carrier::Int,
            action: AlgebraAction::Named(NamedAlgebra::ExpEval),
        };
        assert_eq!(alg.cata(&e).unwrap(), CV::Int(7));
        assert!(parse_exp_literal("(times (int 1) (int 2))").is_err());
        assert!(parse_list_literal(&bits, "[2]").is_err());
        assert!(parse_nat_literal("s(q)").is_err());
    }
}
