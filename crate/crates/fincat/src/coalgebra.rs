//! F-coalgebras and the dual law suite: the conatural numbers as the
//! terminal Maybe-coalgebra, streams as running processes observed through
//! `take`, and materialized coalgebra categories.
//!
//! Terminal coalgebras are infinite objects, so nothing here materializes
//! one: streams stay as (state, head, tail) processes with bounded
//! observation, and conat terminality is checked on the finite fragment
//! that a finite carrier can reach. Any coalgebra-square-commuting map out
//! of a size-k carrier lands in `{Fin(0), …, Fin(k-1), ∞}` (a state mapped
//! to `Fin(j)` must reach the stop symbol in exactly j steps, and j < k by
//! pigeonhole), so quantifying candidate maps over that finite codomain is
//! a complete uniqueness check, not an approximation.

use crate::cat::{FinCat, MorData, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::{witness, Report};

/// A conatural number: a finite count or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Conat {
    Fin(u64),
    Inf,
}

impl std::fmt::Display for Conat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Conat::Fin(n) => write!(f, "{n}"),
            Conat::Inf => write!(f, "∞"),
        }
    }
}

/// One step of Maybe-structure: the stop symbol or a next value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step<T> {
    Stop,
    Next(T),
}

/// The structure map of the conaturals: the predecessor.
/// `0 ↦ ⋆`, `n+1 ↦ n`, `∞ ↦ ∞`.
pub fn conat_out(v: Conat) -> Step<Conat> {
    match v {
        Conat::Fin(0) => Step::Stop,
        Conat::Fin(n) => Step::Next(Conat::Fin(n - 1)),
        Conat::Inf => Step::Next(Conat::Inf),
    }
}

/// A Maybe-coalgebra on a finite carrier: per element, stop or step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaybeCoalgebra {
    /// `map[i]` is the image of state i.
    pub map: Vec<Step<usize>>,
}

impl MaybeCoalgebra {
    pub fn size(&self) -> usize {
        self.map.len()
    }

    /// All `(k+1)^k` coalgebras on a k-element carrier, deterministically.
    pub fn enumerate(k: usize) -> Vec<MaybeCoalgebra> {
        let mut out = Vec::new();
        let mut counter = vec![0usize; k];
        loop {
            out.push(MaybeCoalgebra {
                map: counter
                    .iter()
                    .map(|&c| if c == 0 { Step::Stop } else { Step::Next(c - 1) })
                    .collect(),
            });
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                counter[i] += 1;
                if counter[i] < k + 1 {
                    break;
                }
                counter[i] = 0;
            }
        }
    }
}

/// The anamorphism into the conaturals: iterate the structure map; either
/// the stop symbol is reached in fewer than `|carrier|` steps, or a state
/// repeats and the value is `∞`. Total and terminating.
pub fn ana_conat(c: &MaybeCoalgebra, start: usize) -> Conat {
    let mut state = start;
    for steps in 0..=c.size() as u64 {
        match c.map[state] {
            Step::Stop => return Conat::Fin(steps),
            Step::Next(next) => state = next,
        }
    }
    Conat::Inf
}

fn conat_codomain(k: usize) -> Vec<Conat> {
    (0..k as u64).map(Conat::Fin).chain([Conat::Inf]).collect()
}

/// For every Maybe-coalgebra on carriers of size ≤ `max_size`: the
/// anamorphism makes the coalgebra square commute, and it is the only
/// function into the (complete) restricted codomain that does.
pub fn check_conat_terminality(max_size: usize) -> Result<Report> {
    if max_size > 4 {
        return Err(Error::size_limit("conat terminality sweep", max_size, 4));
    }
    let square_commutes = |c: &MaybeCoalgebra, f: &dyn Fn(usize) -> Conat| -> Option<usize> {
        // out(f(x)) must equal (id + f)(c.map[x]) for every state x
        (0..c.size()).find(|&x| {
            let lhs = conat_out(f(x));
            let rhs = match c.map[x] {
                Step::Stop => Step::Stop,
                Step::Next(y) => Step::Next(f(y)),
            };
            lhs != rhs
        })
    };
    let mut coalgebras = 0usize;
    let mut candidates_checked = 0usize;
    for k in 0..=max_size {
        let codomain = conat_codomain(k);
        for c in MaybeCoalgebra::enumerate(k) {
            coalgebras += 1;
            let ana: Vec<Conat> = (0..k).map(|x| ana_conat(&c, x)).collect();
            if let Some(x) = square_commutes(&c, &|x| ana[x]) {
                return Ok(Report::fail(
                    "anamorphism square",
                    vec![
                        witness("coalgebra", format!("{:?}", c.map)),
                        witness("state", x),
                        witness("ana(state)", ana[x]),
                    ],
                ));
            }
            // uniqueness: every square-commuting map into the restricted
            // codomain must equal the anamorphism
            let mut assignment = vec![0usize; k];
            'cand: loop {
                candidates_checked += 1;
                let f = |x: usize| codomain[assignment[x]];
                if square_commutes(&c, &f).is_none() {
                    if let Some(x) = (0..k).find(|&x| f(x) != ana[x]) {
                        return Ok(Report::fail(
                            "anamorphism uniqueness",
                            vec![
                                witness("coalgebra", format!("{:?}", c.map)),
                                witness("state", x),
                                witness("rival value", f(x)),
                                witness("ana value", ana[x]),
                            ],
                        ));
                    }
                }
                let mut i = k;
                loop {
                    if i == 0 {
                        break 'cand;
                    }
                    i -= 1;
                    assignment[i] += 1;
                    if assignment[i] < codomain.len() {
                        break;
                    }
                    assignment[i] = 0;
                }
            }
        }
    }
    Ok(Report::pass("conat terminality").with_detail(format!(
        "{coalgebras} coalgebras on carriers of size ≤ {max_size}; {candidates_checked} candidate maps swept"
    )))
}

/// The dual of Lambek's theorem, observed on the conaturals: `out` has a
/// two-sided inverse (the anamorphism of the Maybe-lifted `out`), checked to
/// the given observation depth. The inverse is the successor-or-zero map.
pub fn conat_dual_lambek(depth: u64) -> Report {
    let out_inv = |s: Step<Conat>| -> Conat {
        match s {
            Step::Stop => Conat::Fin(0),
            Step::Next(Conat::Fin(n)) => Conat::Fin(n + 1),
            Step::Next(Conat::Inf) => Conat::Inf,
        }
    };
    for v in (0..=depth).map(Conat::Fin).chain([Conat::Inf]) {
        if out_inv(conat_out(v)) != v {
            return Report::fail("dual Lambek out⁻¹·out", vec![witness("value", v)]);
        }
    }
    for s in (0..=depth)
        .map(|n| Step::Next(Conat::Fin(n)))
        .chain([Step::Stop, Step::Next(Conat::Inf)])
    {
        if conat_out(out_inv(s)) != s {
            return Report::fail("dual Lambek out·out⁻¹", vec![witness("value", format!("{s:?}"))]);
        }
    }
    Report::pass("dual Lambek on conaturals")
}

/// A stream coalgebra: a state space with head and tail maps. Streams are
/// never materialized; they are observed through [`stream_take`].
pub trait StreamCoalgebra {
    type State: Clone;
    type Out: Clone + PartialEq + std::fmt::Debug;

    fn head(&self, s: &Self::State) -> Result<Self::Out>;
    fn tail(&self, s: &Self::State) -> Result<Self::State>;
}

/// A running stream process: a coalgebra plus its current (initial) state.
pub struct StreamProc<C: StreamCoalgebra> {
    pub coalg: C,
    pub state: C::State,
}

/// Observe the anamorphism to depth `k`: `output[i] = head(tailⁱ(state))`.
/// Re-entrant: observation always restarts from the stored state.
pub fn stream_take<C: StreamCoalgebra>(p: &StreamProc<C>, k: usize) -> Result<Vec<C::Out>> {
    let mut out = Vec::with_capacity(k);
    let mut state = p.state.clone();
    for i in 0..k {
        out.push(p.coalg.head(&state)?);
        if i + 1 < k {
            state = p.coalg.tail(&state)?;
        }
    }
    Ok(out)
}

/// True iff the two processes agree on their first `k` observations.
pub fn bisimilar_up_to<C1, C2>(p: &StreamProc<C1>, q: &StreamProc<C2>, k: usize) -> Result<bool>
where
    C1: StreamCoalgebra,
    C2: StreamCoalgebra<Out = C1::Out>,
{
    Ok(stream_take(p, k)? == stream_take(q, k)?)
}

/// The stream of naturals: head is the state, tail is successor. Bounded:
/// stepping past the bound is a reported error, never a silent wrap.
pub struct NatsCoalgebra {
    pub bound: u64,
}

impl StreamCoalgebra for NatsCoalgebra {
    type State = u64;
    type Out = u64;

    fn head(&self, s: &u64) -> Result<u64> {
        Ok(*s)
    }
    fn tail(&self, s: &u64) -> Result<u64> {
        if *s >= self.bound {
            return Err(Error::size_limit("nats stream", *s as usize + 1, self.bound as usize));
        }
        Ok(s + 1)
    }
}

pub fn nats(start: u64) -> StreamProc<NatsCoalgebra> {
    StreamProc {
        coalg: NatsCoalgebra { bound: 1 << 20 },
        state: start,
    }
}

/// `zip`: the state is a pair of states, head is the pair of heads, tail the
/// pair of tails.
pub struct ZipCoalgebra<C1: StreamCoalgebra, C2: StreamCoalgebra> {
    pub first: C1,
    pub second: C2,
}

impl<C1: StreamCoalgebra, C2: StreamCoalgebra> StreamCoalgebra for ZipCoalgebra<C1, C2> {
    type State = (C1::State, C2::State);
    type Out = (C1::Out, C2::Out);

    fn head(&self, s: &Self::State) -> Result<Self::Out> {
        Ok((self.first.head(&s.0)?, self.second.head(&s.1)?))
    }
    fn tail(&self, s: &Self::State) -> Result<Self::State> {
        Ok((self.first.tail(&s.0)?, self.second.tail(&s.1)?))
    }
}

pub fn zip<C1: StreamCoalgebra, C2: StreamCoalgebra>(
    p: StreamProc<C1>,
    q: StreamProc<C2>,
) -> StreamProc<ZipCoalgebra<C1, C2>> {
    StreamProc {
        coalg: ZipCoalgebra { first: p.coalg, second: q.coalg },
        state: (p.state, q.state),
    }
}

/// A materialized category of Maybe-coalgebras.
pub struct CoalgebraCategory {
    pub cat: FinCat,
    /// The coalgebra each object stands for.
    pub coalgebras: Vec<MaybeCoalgebra>,
    /// The underlying function of each morphism.
    pub maps: Vec<Vec<usize>>,
}

/// Materialize Coalg(Maybe) on all coalgebras with carriers of size ≤
/// `max_size`, plus the truncated-conat coalgebra
/// `{Fin 0, …, Fin(max_size−1), ∞}` — the receiver of every hitting-time
/// map, and the terminal object of the materialized category.
pub fn coalgebra_category(max_size: usize) -> Result<CoalgebraCategory> {
    if max_size > 3 {
        return Err(Error::size_limit("coalgebra category", max_size, 3));
    }
    let mut coalgebras = Vec::new();
    for k in 0..=max_size {
        coalgebras.extend(MaybeCoalgebra::enumerate(k));
    }
    // truncated conat: states 0..max_size are Fin(0..max_size-1), the last
    // state is ∞ (a self-loop)
    let truncated = MaybeCoalgebra {
        map: (0..=max_size)
            .map(|i| {
                if i == 0 {
                    Step::Stop
                } else if i < max_size {
                    Step::Next(i - 1)
                } else {
                    Step::Next(max_size)
                }
            })
            .collect(),
    };
    coalgebras.push(truncated);

    let names: Vec<String> = coalgebras
        .iter()
        .enumerate()
        .map(|(i, c)| format!("C{i}:{:?}", c.map))
        .collect();
    let is_hom = |c: &MaybeCoalgebra, d: &MaybeCoalgebra, f: &[usize]| -> bool {
        (0..c.size()).all(|x| match (c.map[x], d.map[f[x]]) {
            (Step::Stop, Step::Stop) => true,
            (Step::Next(y), Step::Next(z)) => f[y] == z,
            _ => false,
        })
    };
    let mut mors: Vec<MorData> = Vec::new();
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut identities = vec![MorId(0); coalgebras.len()];
    let mut index: std::collections::HashMap<(usize, usize, Vec<usize>), MorId> =
        std::collections::HashMap::new();
    for (a, c) in coalgebras.iter().enumerate() {
        for (b, d) in coalgebras.iter().enumerate() {
            for f in crate::finset::all_functions(
                &crate::finset::FinSet::new(c.size()),
                &crate::finset::FinSet::new(d.size()),
            ) {
                if !is_hom(c, d, &f.table) {
                    continue;
                }
                let id = MorId(mors.len());
                index.insert((a, b, f.table.clone()), id);
                mors.push(MorData {
                    name: format!("[{}]:C{a}→C{b}", f.table.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")),
                    dom: ObjId(a),
                    cod: ObjId(b),
                });
                if a == b && f.table.iter().enumerate().all(|(i, &v)| i == v) {
                    identities[a] = id;
                }
                maps.push(f.table);
            }
        }
    }
    let doms: Vec<usize> = mors.iter().map(|m| m.dom.0).collect();
    let cods: Vec<usize> = mors.iter().map(|m| m.cod.0).collect();
    let cat = FinCat::from_fn(names, mors, identities, |f, g| {
        let composed: Vec<usize> = maps[f.0].iter().map(|&x| maps[g.0][x]).collect();
        index[&(doms[f.0], cods[g.0], composed)]
    })?;
    Ok(CoalgebraCategory {
        cat,
        coalgebras,
        maps,
    })
}

/// The dual fusion property on conat targets: for every morphism
/// `f : (C,φ) → (D,ψ)` of the materialized category, `f·⟦ψ⟧ = ⟦φ⟧`.
pub fn check_coalgebra_fusion(cc: &CoalgebraCategory) -> Report {
    for m in cc.cat.morphisms() {
        let (a, b) = (cc.cat.dom(m), cc.cat.cod(m));
        let (c, d) = (&cc.coalgebras[a.0], &cc.coalgebras[b.0]);
        let f = &cc.maps[m.0];
        for x in 0..c.size() {
            if ana_conat(c, x) != ana_conat(d, f[x]) {
                return Report::fail(
                    "coalgebra fusion f·⟦ψ⟧ = ⟦φ⟧",
                    vec![
                        witness("morphism", cc.cat.morphism_name(m)),
                        witness("state", x),
                    ],
                );
            }
        }
    }
    Report::pass("coalgebra fusion on conat targets")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::queries::{find_universal, Polarity};

    #[test]
    fn ana_examples() {
        // φ(x) = ⋆ → Fin(0)
        let c = MaybeCoalgebra { map: vec![Step::Stop] };
        assert_eq!(ana_conat(&c, 0), Conat::Fin(0));
        // 2-cycle never reaching ⋆ → ∞
        let c = MaybeCoalgebra { map: vec![Step::Next(1), Step::Next(0)] };
        assert_eq!(ana_conat(&c, 0), Conat::Inf);
        // chain x→y→⋆: iterate-by-hand oracle gives 1
        let c = MaybeCoalgebra { map: vec![Step::Next(1), Step::Stop] };
        assert_eq!(ana_conat(&c, 0), Conat::Fin(1));
    }

    #[test]
    fn out_is_the_predecessor() {
        assert_eq!(conat_out(Conat::Fin(0)), Step::Stop);
        assert_eq!(conat_out(Conat::Fin(5)), Step::Next(Conat::Fin(4)));
        assert_eq!(conat_out(Conat::Inf), Step::Next(Conat::Inf));
    }

    #[test]
    fn terminality_sweep_on_size_3() {
        // all 4^3 = 64 coalgebras on size-3 carriers (plus smaller ones)
        assert_eq!(MaybeCoalgebra::enumerate(3).len(), 64);
        let report = check_conat_terminality(3).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn identity_as_anamorphism() {
        // ana of the truncated-conat coalgebra is the identity on the values
        // it represents
        let k = 4;
        let trunc = MaybeCoalgebra {
            map: (0..=k)
                .map(|i| if i == 0 { Step::Stop } else if i < k { Step::Next(i - 1) } else { Step::Next(k) })
                .collect(),
        };
        for i in 0..k {
            assert_eq!(ana_conat(&trunc, i), Conat::Fin(i as u64));
        }
        assert_eq!(ana_conat(&trunc, k), Conat::Inf);
    }

    #[test]
    fn dual_lambek_to_depth_8() {
        assert!(conat_dual_lambek(8).passed());
    }

    #[test]
    fn take_examples() {
        let p = nats(5);
        assert_eq!(stream_take(&p, 0).unwrap(), Vec::<u64>::new());
        assert_eq!(stream_take(&p, 3).unwrap(), vec![5, 6, 7]);
        // re-entrant: same observation twice
        assert_eq!(stream_take(&p, 3).unwrap(), vec![5, 6, 7]);
    }

    #[test]
    fn nats_satisfies_its_equation_system() {
        // f = ⟦⟨h, t⟩⟧ with h = id, t = succ: f·head = h and f·tail = t·f
        // observationally: take(k, nats(n)) = n, n+1, ...
        for n in 0..8u64 {
            for k in 0..16usize {
                let take = stream_take(&nats(n), k).unwrap();
                assert_eq!(take, (n..n + k as u64).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn zip_is_pairwise() {
        let z = zip(nats(0), nats(10));
        let take = stream_take(&z, 5).unwrap();
        assert_eq!(take, vec![(0, 10), (1, 11), (2, 12), (3, 13), (4, 14)]);
        // zip(nats(0), nats(0)) is bisimilar to the diagonal stream
        struct Diag;
        impl StreamCoalgebra for Diag {
            type State = u64;
            type Out = (u64, u64);
            fn head(&self, s: &u64) -> Result<(u64, u64)> {
                Ok((*s, *s))
            }
            fn tail(&self, s: &u64) -> Result<u64> {
                Ok(s + 1)
            }
        }
        let d = StreamProc { coalg: Diag, state: 0 };
        let z = zip(nats(0), nats(0));
        assert!(bisimilar_up_to(&z, &d, 32).unwrap());
        let p = nats(0);
        let q = nats(1);
        assert!(!bisimilar_up_to(&p, &q, 1).unwrap());
        assert!(bisimilar_up_to(&p, &p, 32).unwrap());
    }

    #[test]
    fn nats_overflow_is_reported() {
        let p = StreamProc { coalg: NatsCoalgebra { bound: 3 }, state: 0 };
        assert!(stream_take(&p, 4).is_ok());
        assert!(stream_take(&p, 5).is_err());
    }

    #[test]
    fn coalgebra_category_laws_and_terminal_object() {
        let cc = coalgebra_category(3).unwrap();
        assert!(cc.cat.check_laws().passed());
        assert!(check_coalgebra_fusion(&cc).passed());
        // terminal object = the truncated-conat coalgebra (the last object)
        let w = find_universal(&cc.cat, Polarity::Terminal);
        assert_eq!(w.objects, vec![ObjId(cc.coalgebras.len() - 1)]);
        let uniq = crate::queries::verify_uniqueness(&cc.cat, &w).unwrap();
        assert!(uniq.passed());
    }
}
