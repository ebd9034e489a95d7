#![doc = include_str!("../../../book/src/intro.md")]

#[doc = include_str!("../../../book/src/floor-diagrams.md")]
pub mod floor_diagrams {}

#[doc = include_str!("../../../book/src/markings.md")]
pub mod markings {}

#[doc = include_str!("../../../book/src/enumeration.md")]
pub mod enumeration {}

#[doc = include_str!("../../../book/src/formulas.md")]
pub mod formulas {}

#[doc = include_str!("../../../book/src/tropical.md")]
pub mod tropical {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
