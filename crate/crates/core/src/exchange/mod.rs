//! Exchange, symmetric exchange and strong exchange on sets of monomials of
//! one degree, Veronese-type recognition, and bounded counterexample search.
//!
//! All checkers take the member set directly so that they apply equally to a
//! [`GeneratorSet`](crate::GeneratorSet) and to hand-built or polymatroid
//! base sets. Witnesses are the lexicographically first failing
//! `(u, v, xi, rho)` with `u`, `v` in increasing exponent-vector order.

mod polymatroid;
mod search;
mod veronese;

use std::collections::BTreeSet;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::bounded_powers::ExponentVector;

pub use polymatroid::{enumerate_polymatroid_base, SubmodularFunction};
pub use search::{normalized_grid, search_sep_counterexample, Counterexample};
pub use veronese::{detect_veronese, VeroneseDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    Exchange,
    Symmetric,
    Strong,
}

impl Property {
    pub fn tag(self) -> &'static str {
        match self {
            Property::Exchange => "exchange",
            Property::Symmetric => "symmetric",
            Property::Strong => "strong",
        }
    }
}

/// A failing instance. Vertex indices are 0-based; `rho` is absent when no
/// exchange partner works at all, and `missing` is set only for strong
/// exchange, where it is `u - e_xi + e_rho`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub u: ExponentVector,
    pub v: ExponentVector,
    pub xi: usize,
    pub rho: Option<usize>,
    pub missing: Option<ExponentVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeReport {
    pub property: Property,
    pub witness: Option<Witness>,
}

impl ExchangeReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Witness", 5)?;
        st.serialize_field("u", &self.u)?;
        st.serialize_field("v", &self.v)?;
        st.serialize_field("xi", &(self.xi + 1))?;
        st.serialize_field("rho", &self.rho.map(|r| r + 1))?;
        st.serialize_field("missing", &self.missing)?;
        st.end()
    }
}

impl Serialize for ExchangeReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ExchangeReport", 3)?;
        st.serialize_field("property", self.property.tag())?;
        st.serialize_field("verdict", if self.passed() { "pass" } else { "fail" })?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

fn report(property: Property, witness: Option<Witness>) -> ExchangeReport {
    ExchangeReport { property, witness }
}

/// Polymatroid exchange: whenever `u_xi > v_xi` there is `rho` with
/// `u_rho < v_rho` and `u - e_xi + e_rho` in the set.
pub fn check_exchange(members: &BTreeSet<ExponentVector>) -> ExchangeReport {
    check_one_sided(members, Property::Exchange)
}

/// As [`check_exchange`], but the same `rho` must also give
/// `v - e_rho + e_xi` in the set.
pub fn check_symmetric_exchange(members: &BTreeSet<ExponentVector>) -> ExchangeReport {
    check_one_sided(members, Property::Symmetric)
}

fn check_one_sided(members: &BTreeSet<ExponentVector>, property: Property) -> ExchangeReport {
    for u in members {
        for v in members {
            if u == v {
                continue;
            }
            for xi in 0..u.len() {
                if u.get(xi) <= v.get(xi) {
                    continue;
                }
                let ok = (0..u.len()).any(|rho| {
                    u.get(rho) < v.get(rho)
                        && members.contains(&u.exchange(xi, rho).unwrap())
                        && (property == Property::Exchange || members.contains(&v.exchange(rho, xi).unwrap()))
                });
                if !ok {
                    let w = Witness { u: u.clone(), v: v.clone(), xi, rho: None, missing: None };
                    return report(property, Some(w));
                }
            }
        }
    }
    report(property, None)
}

/// Strong exchange: for every `u_xi > v_xi` and every `u_rho < v_rho`,
/// `u - e_xi + e_rho` is in the set.
pub fn check_strong_exchange(members: &BTreeSet<ExponentVector>) -> ExchangeReport {
    for u in members {
        for v in members {
            if u == v {
                continue;
            }
            for xi in (0..u.len()).filter(|&i| u.get(i) > v.get(i)) {
                for rho in (0..u.len()).filter(|&i| u.get(i) < v.get(i)) {
                    let swapped = u.exchange(xi, rho).unwrap();
                    if !members.contains(&swapped) {
                        let w = Witness { u: u.clone(), v: v.clone(), xi, rho: Some(rho), missing: Some(swapped) };
                        return report(Property::Strong, Some(w));
                    }
                }
            }
        }
    }
    report(Property::Strong, None)
}

pub fn check(members: &BTreeSet<ExponentVector>, property: Property) -> ExchangeReport {
    match property {
        Property::Exchange => check_exchange(members),
        Property::Symmetric => check_symmetric_exchange(members),
        Property::Strong => check_strong_exchange(members),
    }
}
