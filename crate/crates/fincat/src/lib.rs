//! Finite category theory you can run.
//!
//! This crate materializes small categories as honest data — objects,
//! morphisms, identities and a total composition table — and mechanically
//! verifies category laws, universal properties, functor and naturality
//! laws, adjunctions, monad laws, and the recursion-scheme identities for
//! initial algebras and terminal coalgebras. Every check is exhaustive over
//! an explicitly bounded universe, and every failure comes back with a
//! concrete counterexample.
//!
//! Composition is written diagrammatically throughout: `compose(f, g)` is
//! "`f`, then `g`".
//!
//! The narrative guide lives in the `book/` directory of the repository; its
//! code snippets are compiled as doc-tests of this crate.

pub mod cat;
pub mod error;
pub mod finset;
pub mod report;

pub mod adjunction;
pub mod algebra;
pub mod builders;
pub mod coalgebra;
pub mod contravariant;
pub mod free_monoid;
pub mod functor;
pub mod kleisli;
pub mod queries;
pub mod set_functor;

pub use cat::{FinCat, MorData, MorId, ObjId};
pub use error::{Error, Result};
pub use finset::{FinFun, FinSet};
pub use report::{Report, Status, Witness};

// The book's code snippets double as doc-tests, so the guide cannot drift
// from the API. Each chapter is attached to a carrier item below.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Categories, "../../../book/src/categories.md");
    chapter!(Sets, "../../../book/src/sets.md");
    chapter!(UniversalProperties, "../../../book/src/universal-properties.md");
    chapter!(Functors, "../../../book/src/functors.md");
    chapter!(Adjunctions, "../../../book/src/adjunctions.md");
    chapter!(Monads, "../../../book/src/monads.md");
    chapter!(InitialAlgebras, "../../../book/src/initial-algebras.md");
    chapter!(Coalgebras, "../../../book/src/coalgebras.md");
    chapter!(FreeMonoids, "../../../book/src/free-monoids.md");
    chapter!(Cli, "../../../book/src/cli.md");
}
