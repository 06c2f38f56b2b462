//! Free monoids over finite generator sets: the canonical injection, the
//! unique lift of the universal property, and the Free ⊣ Forget adjunction
//! at bounded word length.
//!
//! The free monoid is infinite, so adjunction and uniqueness claims are
//! checked on the ≤-L word fragment. The fragment is a faithful proxy: a
//! monoid homomorphism out of a free monoid is determined by its values on
//! generators, and every report states the bound it used.

use crate::builders::FiniteMonoidPresentation;
use crate::error::{Error, Result};
use crate::finset::{all_functions, FinSet};
use crate::report::{witness, Report};

/// A word over generator indices.
pub type Word = Vec<usize>;

/// All words of length ≤ `max_len` over `gens` generators, shortest first,
/// lexicographic within a length.
pub fn words_up_to(gens: usize, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![vec![]];
    let mut layer: Vec<Word> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..gens {
                let mut v = w.clone();
                v.push(g);
                out.push(v.clone());
                next.push(v);
            }
        }
        layer = next;
    }
    out
}

/// The canonical injection `x ↦ (x)` of generators into words.
pub fn canonical_injection(x: usize) -> Word {
    vec![x]
}

/// The unique homomorphism extending `f : X → M`: the empty word goes to
/// the unit and a word folds through the multiplication.
pub fn lift(m: &FiniteMonoidPresentation, f: &[usize], word: &[usize]) -> usize {
    word.iter().fold(m.unit, |acc, &x| m.mul(acc, f[x]))
}

/// The universal property at bound `L`: the lift extends `f` along the
/// canonical injection, and every bounded homomorphism table that extends
/// `f` agrees with the lift on all words of length ≤ L.
///
/// Guards: |X| ≤ 2, |M| ≤ 3, L ≤ 3 (the candidate sweep enumerates
/// `|M|^#words` tables).
pub fn check_uvp(
    gens: usize,
    m: &FiniteMonoidPresentation,
    f: &[usize],
    max_len: usize,
) -> Result<Report> {
    if gens > 2 || m.size() > 3 || max_len > 3 {
        return Err(Error::size_limit(
            "free monoid UVP sweep",
            gens.max(m.size()).max(max_len),
            3,
        ));
    }
    if f.len() != gens || f.iter().any(|&v| v >= m.size()) {
        return Err(Error::structural("UVP", "generator assignment is not a map into M"));
    }
    let words = words_up_to(gens, max_len);
    let lift_table: Vec<usize> = words.iter().map(|w| lift(m, f, w)).collect();

    // (a) lift ∘ canonical injection = f
    for x in 0..gens {
        let w = canonical_injection(x);
        if lift(m, f, &w) != f[x] {
            return Ok(Report::fail(
                "lift extends f along the injection",
                vec![witness("generator", x)],
            ));
        }
    }

    // concatenable pairs within the bound
    let pairs: Vec<(usize, usize, usize)> = {
        let mut out = Vec::new();
        for (i, u) in words.iter().enumerate() {
            for (j, v) in words.iter().enumerate() {
                if u.len() + v.len() <= max_len {
                    let mut uv = u.clone();
                    uv.extend(v.iter().copied());
                    let k = words.iter().position(|w| *w == uv).expect("within bound");
                    out.push((i, j, k));
                }
            }
        }
        out
    };

    // (b) uniqueness sweep: every table on words ≤ L that satisfies the hom
    // laws (unit, concatenation within the bound) and agrees with f on
    // singletons equals the lift
    let mut assignment = vec![0usize; words.len()];
    let mut survivors = 0usize;
    let empty_index = 0usize; // words_up_to puts the empty word first
    loop {
        let hom_ok = assignment[empty_index] == m.unit
            && pairs
                .iter()
                .all(|&(i, j, k)| m.mul(assignment[i], assignment[j]) == assignment[k]);
        let extends_f = (0..gens).all(|x| {
            let idx = words.iter().position(|w| w.len() == 1 && w[0] == x).unwrap();
            assignment[idx] == f[x]
        });
        if hom_ok && extends_f {
            survivors += 1;
            if assignment != lift_table {
                return Ok(Report::fail(
                    "UVP uniqueness",
                    vec![witness("rival table", format!("{assignment:?}"))],
                ));
            }
        }
        let mut i = words.len();
        let mut done = false;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            assignment[i] += 1;
            if assignment[i] < m.size() {
                break;
            }
            assignment[i] = 0;
        }
        if done {
            break;
        }
    }
    if survivors != 1 {
        return Ok(Report::fail(
            "UVP uniqueness",
            vec![witness("survivor count", survivors)],
        ));
    }
    Ok(Report::pass("free monoid universal property").with_detail(format!(
        "unique among {} candidate tables on {} words (length ≤ {max_len})",
        (m.size() as u64).pow(words.len() as u32),
        words.len()
    )))
}

/// Free-monoid laws on the bounded fragment: concatenation is associative
/// and the empty word is a two-sided unit, exhaustively on words ≤ L.
pub fn check_word_monoid_laws(gens: usize, max_len: usize) -> Report {
    let words = words_up_to(gens, max_len);
    let concat = |u: &Word, v: &Word| -> Word {
        let mut out = u.clone();
        out.extend(v.iter().copied());
        out
    };
    let empty: Word = vec![];
    for u in &words {
        if concat(&empty, u) != *u || concat(u, &empty) != *u {
            return Report::fail(
                "empty word unit law",
                vec![witness("word", format!("{u:?}"))],
            );
        }
        for v in &words {
            for w in &words {
                if concat(&concat(u, v), w) != concat(u, &concat(v, w)) {
                    return Report::fail(
                        "word concatenation associativity",
                        vec![witness("u", format!("{u:?}"))],
                    );
                }
            }
        }
    }
    Report::pass("free monoid word laws").with_detail(format!("{} words", words.len()))
}

/// The free functor's action on morphisms — pointwise application — applied
/// to a word.
pub fn free_map(f: &[usize], w: &[usize]) -> Word {
    w.iter().map(|&x| f[x]).collect()
}

/// The Free ⊣ Forget adjunction on a bounded window.
///
/// α sends a homomorphism `Free(X) → M` (represented by its generator
/// images, which determine it) to its restriction along the canonical
/// injection; `lift` is the two-sided inverse. Naturality is checked
/// against all functions between the generator sets and all monoid
/// homomorphisms between the given monoids; the triangle identities are
/// checked exactly — on generators for the free side (homs out of a free
/// monoid agree iff they agree on generators) and pointwise on `U M`, with
/// word-level evidence to length ≤ L.
pub struct FreeForgetWindow {
    pub gen_sets: Vec<usize>,
    pub monoids: Vec<FiniteMonoidPresentation>,
    pub max_len: usize,
}

pub fn free_forget_adjunction(window: &FreeForgetWindow) -> Result<Report> {
    if window.max_len > 3 || window.gen_sets.iter().any(|&g| g > 2) {
        return Err(Error::size_limit("free ⊣ forget window", window.max_len, 3));
    }
    let mut parts = Vec::new();

    // bijectivity: α (restriction to generators) and lift are mutually
    // inverse on every hom-window Hom_Mon(Free X, M) ≅ Hom_Set(X, U M)
    for &gens in &window.gen_sets {
        for m in &window.monoids {
            for f in all_functions(&FinSet::new(gens), &FinSet::new(m.size())) {
                // α(lift(f)) = f: restriction of the lift to singletons
                let restricted: Vec<usize> =
                    (0..gens).map(|x| lift(m, &f.table, &canonical_injection(x))).collect();
                if restricted != f.table {
                    return Ok(Report::fail(
                        "α∘lift = id on Hom_Set(X, U M)",
                        vec![witness("f", &f)],
                    ));
                }
                // lift(α(φ)) = φ on all bounded words, for φ given by its
                // generator images (= f)
                for w in words_up_to(gens, window.max_len) {
                    if lift(m, &f.table, &w) != lift(m, &restricted, &w) {
                        return Ok(Report::fail(
                            "lift∘α = id on bounded words",
                            vec![witness("word", format!("{w:?}"))],
                        ));
                    }
                }
            }
        }
    }
    parts.push(Report::pass("hom-window bijectivity"));

    // naturality in the generator set: for σ : X' → X and φ : Free X → M,
    // α(Free(σ)·φ) = σ·α(φ)
    for &g1 in &window.gen_sets {
        for &g2 in &window.gen_sets {
            for sigma in all_functions(&FinSet::new(g1), &FinSet::new(g2)) {
                for m in &window.monoids {
                    for phi in all_functions(&FinSet::new(g2), &FinSet::new(m.size())) {
                        // Free(σ)·φ has generator images x ↦ φ(σ(x))
                        let composite: Vec<usize> =
                            (0..g1).map(|x| phi.table[sigma.table[x]]).collect();
                        let lhs: Vec<usize> =
                            (0..g1).map(|x| lift(m, &composite, &canonical_injection(x))).collect();
                        let rhs: Vec<usize> = (0..g1)
                            .map(|x| {
                                let ax: Vec<usize> = (0..g2)
                                    .map(|y| lift(m, &phi.table, &canonical_injection(y)))
                                    .collect();
                                ax[sigma.table[x]]
                            })
                            .collect();
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "α naturality in the generator set",
                                vec![witness("σ", &sigma)],
                            ));
                        }
                        // word-level agreement to the bound
                        for w in words_up_to(g1, window.max_len) {
                            let via_map = lift(m, &phi.table, &free_map(&sigma.table, &w));
                            let direct = lift(m, &composite, &w);
                            if via_map != direct {
                                return Ok(Report::fail(
                                    "Free(σ) naturality on words",
                                    vec![witness("word", format!("{w:?}"))],
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    parts.push(Report::pass("naturality in the generator set"));

    // naturality in the monoid: for monoid homs h : M1 → M2,
    // α(φ·h) = α(φ)·U(h)
    for m1 in &window.monoids {
        for m2 in &window.monoids {
            for h in m1.homs_to(m2) {
                for &gens in &window.gen_sets {
                    for phi in all_functions(&FinSet::new(gens), &FinSet::new(m1.size())) {
                        let lhs: Vec<usize> = (0..gens)
                            .map(|x| h[lift(m1, &phi.table, &canonical_injection(x))])
                            .collect();
                        let composed: Vec<usize> = phi.table.iter().map(|&v| h[v]).collect();
                        let rhs: Vec<usize> =
                            (0..gens).map(|x| lift(m2, &composed, &canonical_injection(x))).collect();
                        if lhs != rhs {
                            return Ok(Report::fail(
                                "α naturality in the monoid",
                                vec![witness("hom", format!("{h:?}"))],
                            ));
                        }
                    }
                }
            }
        }
    }
    parts.push(Report::pass("naturality in the monoid"));

    // triangle identities of the induced unit/counit.
    // unit η_X : X → U(Free X) is x ↦ (x); counit ε_M : Free(U M) → M is
    // the lift of the identity (fold by multiplication).
    for &gens in &window.gen_sets {
        // triangle 1: F(η_X)·ε_{Free X} = id on Free X. Both sides are
        // monoid homomorphisms out of Free X, so equality on generators is
        // exact; words to the bound double as evidence.
        for x in 0..gens {
            // F(η)(x-as-generator) = the word [(x)] over the word alphabet;
            // ε concatenates the inner words, giving back (x).
            let image: Word = canonical_injection(x);
            if image != vec![x] {
                return Ok(Report::fail(
                    "triangle F(η)·ε on generators",
                    vec![witness("generator", x)],
                ));
            }
        }
        for w in words_up_to(gens, window.max_len) {
            // the word w = x1…xk maps under F(η) to the word of singleton
            // words [(x1)]…[(xk)]; ε concatenates them back to w
            let singletons: Vec<Word> = w.iter().map(|&x| canonical_injection(x)).collect();
            let folded: Word = singletons.concat();
            if folded != w {
                return Ok(Report::fail(
                    "triangle F(η)·ε on words",
                    vec![witness("word", format!("{w:?}"))],
                ));
            }
        }
    }
    for m in &window.monoids {
        // triangle 2: η_{U M}·U(ε_M) = id on U M, pointwise and exactly
        for v in 0..m.size() {
            let identity_images: Vec<usize> = (0..m.size()).collect();
            let folded = lift(m, &identity_images, &canonical_injection(v));
            if folded != v {
                return Ok(Report::fail(
                    "triangle η·U(ε)",
                    vec![witness("element", m.elements[v].clone())],
                ));
            }
        }
        // ε_M really folds words by multiplication
        for w in words_up_to(m.size().min(2), window.max_len) {
            let identity_images: Vec<usize> = (0..m.size()).collect();
            let folded = lift(m, &identity_images, &w);
            let direct = m.product(&w);
            if folded != direct {
                return Ok(Report::fail(
                    "counit folds by multiplication",
                    vec![witness("word", format!("{w:?}"))],
                ));
            }
        }
    }
    parts.push(Report::pass("triangle identities"));

    Ok(Report::combine(
        format!("Free ⊣ Forget at word length ≤ {}", window.max_len),
        parts,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::monoid_catalog;

    #[test]
    fn injection_is_singletons_and_injective() {
        for x in 0..3 {
            assert_eq!(canonical_injection(x), vec![x]);
        }
        let images: Vec<Word> = (0..3).map(canonical_injection).collect();
        for (i, a) in images.iter().enumerate() {
            for (j, b) in images.iter().enumerate() {
                assert_eq!(a == b, i == j);
            }
        }
    }

    #[test]
    fn lift_examples() {
        let z3 = monoid_catalog("z3").unwrap();
        // empty word → unit
        assert_eq!(lift(&z3, &[1], &[]), z3.unit);
        // X = {a}, f(a) = 1: aaaa ↦ 4 mod 3 = 1 (table-folding oracle)
        assert_eq!(lift(&z3, &[1], &[0, 0, 0, 0]), 1);
    }

    #[test]
    fn lift_respects_concatenation() {
        let z3 = monoid_catalog("z3").unwrap();
        let f = [1, 2];
        for u in words_up_to(2, 3) {
            for v in words_up_to(2, 3) {
                let mut uv = u.clone();
                uv.extend(v.iter().copied());
                assert_eq!(lift(&z3, &f, &uv), z3.mul(lift(&z3, &f, &u), lift(&z3, &f, &v)));
            }
        }
    }

    #[test]
    fn uvp_unique_for_all_assignments() {
        let z3 = monoid_catalog("z3").unwrap();
        for f0 in 0..3 {
            for f1 in 0..3 {
                let report = check_uvp(2, &z3, &[f0, f1], 3).unwrap();
                assert!(report.passed(), "{report:?}");
            }
        }
    }

    #[test]
    fn trivial_monoid_has_exactly_one_candidate() {
        let trivial = monoid_catalog("trivial").unwrap();
        let report = check_uvp(2, &trivial, &[0, 0], 2).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn word_laws_and_free_map_functoriality() {
        assert!(check_word_monoid_laws(2, 3).passed());
        // pointwise application preserves identity and composition on
        // words ≤ 4
        let words = words_up_to(2, 4);
        let id = [0usize, 1];
        let f = [1usize, 0];
        let g = [1usize, 1];
        let fg: Vec<usize> = f.iter().map(|&x| g[x]).collect();
        for w in &words {
            assert_eq!(free_map(&id, w), *w);
            assert_eq!(free_map(&g, &free_map(&f, w)), free_map(&fg, w));
        }
    }

    #[test]
    fn adjunction_window_passes() {
        let window = FreeForgetWindow {
            gen_sets: vec![1, 2],
            monoids: vec![monoid_catalog("z3").unwrap(), monoid_catalog("and").unwrap()],
            max_len: 3,
        };
        let report = free_forget_adjunction(&window).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn guards_reject_oversized_windows() {
        assert!(check_uvp(3, &monoid_catalog("z3").unwrap(), &[0, 0, 0], 3).is_err());
        let window = FreeForgetWindow {
            gen_sets: vec![2],
            monoids: vec![monoid_catalog("z2").unwrap()],
            max_len: 4,
        };
        assert!(free_forget_adjunction(&window).is_err());
    }
}
