//! Bruhat intervals, R-polynomials and their combinatorial invariants in
//! finite Coxeter groups of type A and dihedral type.

pub mod coxeter;
pub mod error;
pub mod graph;
pub mod poly;
pub mod analysis;
pub mod cache;
pub mod report;
pub mod rpoly;
pub mod suite;

pub use coxeter::{CoxeterType, Element, Form, Group, Interval, Side};
pub use error::{Error, Result};
pub use graph::{BruhatEdge, BruhatGraph, BruhatPath, ReflectionOrder};
pub use poly::{BiPoly, IntPoly, RatMonomial, Specialization, TermOrder};
pub use rpoly::{DescentRule, Family, GammaVector, RContext};
