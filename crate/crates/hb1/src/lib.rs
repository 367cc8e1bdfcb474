//! Hopf algebras over the 16-dimensional Kashina algebra `H_{b:1}`: the
//! algebra itself, its Drinfeld double and simple modules, Yetter–Drinfeld
//! modules, Nichols algebras, bosonizations and liftings.

pub mod double;
pub mod kashina;
pub mod lifting;
pub mod nichols;
pub mod report;
pub mod yd;

/// The book chapters, compiled so their examples run as doc-tests.
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    pub mod scalars {}
    #[doc = include_str!("../../../book/src/kashina.md")]
    pub mod kashina {}
    #[doc = include_str!("../../../book/src/presentations.md")]
    pub mod presentations {}
    #[doc = include_str!("../../../book/src/double.md")]
    pub mod double {}
    #[doc = include_str!("../../../book/src/yetter-drinfeld.md")]
    pub mod yetter_drinfeld {}
    #[doc = include_str!("../../../book/src/nichols.md")]
    pub mod nichols {}
    #[doc = include_str!("../../../book/src/liftings.md")]
    pub mod liftings {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
