//! Exact arithmetic for numerical semigroups: Apéry sets, non-representable
//! sets, Frobenius numbers, genus, and Sylvester power sums, with closed
//! forms for two-variable, arithmetic-progression, and generalized
//! arithmetic-progression generator families.
//!
//! Every quantity is computed in exact integer or rational arithmetic, and
//! every closed form has at least one independent route to the same value: a
//! shortest-path Apéry computation, a brute-force sieve, a
//! Bernoulli-polynomial summation, or a cleared generating-function
//! identity. The [`verify`] module runs those routes against each other.

pub mod bernoulli;
pub mod closed;
pub mod error;
pub mod oracle;
pub mod rational;
pub mod semigroup;
pub mod series;
pub mod verify;

pub use error::Error;
pub use num::bigint::BigInt;
pub use rational::Rational;
