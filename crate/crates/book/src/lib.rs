//! Runs the code snippets of the guide in `book/` and of the README as
//! doc-tests.

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub struct Introduction;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/accuracy.md")]
pub struct Accuracy;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/algorithm.md")]
pub struct Algorithm;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/derivatives.md")]
pub struct Derivatives;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/verification.md")]
pub struct Verification;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub struct Cli;

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct Readme;
