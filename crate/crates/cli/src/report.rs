//! Serializable run reports.

use std::collections::BTreeMap;
use std::fmt;

use curvelattice_core::cubic::{CubicVerdict, InRange};
use curvelattice_core::k3::{CohDims, Terminal, Trace};
use curvelattice_core::quartic::Verdict;
use curvelattice_core::{DivClass2, Int};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An integer that serializes as a JSON number when it fits in `i64` and as
/// a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Num(pub Int);

impl From<Int> for Num {
    fn from(n: Int) -> Self {
        Num(n)
    }
}

impl From<&Int> for Num {
    fn from(n: &Int) -> Self {
        Num(n.clone())
    }
}

impl From<i64> for Num {
    fn from(n: i64) -> Self {
        Num(Int::from(n))
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(n) => s.serialize_i64(n),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Num;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a base-10 integer string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Num, E> {
                Ok(Num::from(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Num, E> {
                Ok(Num(Int::from(v)))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Num, E> {
                v.parse::<Int>()
                    .map(Num)
                    .map_err(|_| E::custom("not a base-10 integer"))
            }
        }
        d.deserialize_any(V)
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub model: Option<String>,
    pub inputs: BTreeMap<String, String>,
    pub payload: Payload,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_us: Option<u64>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Quartic(QuarticRow),
    Cubic(CubicRow),
    Enumeration(Enumeration),
    MaxGenus(MaxGenus),
    Cohomology(Cohomology),
    Verify(VerifyReport),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuarticRow {
    pub a: Num,
    pub b: Num,
    pub d: Num,
    pub g: Num,
    #[serde(rename = "h1_I4")]
    pub h1_i4: Num,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub dim_w: Option<Num>,
    pub tangent_dim: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clifford_bound: Option<String>,
    pub criteria: Vec<String>,
}

impl From<&Verdict> for QuarticRow {
    fn from(v: &Verdict) -> Self {
        QuarticRow {
            a: Num::from(&v.class.a),
            b: Num::from(&v.class.b),
            d: Num::from(&v.d),
            g: Num::from(&v.g),
            h1_i4: Num::from(&v.h1_ideal_4),
            kind: v.kind.as_str().to_string(),
            reason: (v.kind == curvelattice_core::VerdictKind::NotApplicable)
                .then(|| v.criteria.first().map(|c| c.tag().to_string()))
                .flatten(),
            dim_w: v.dim_w.as_ref().map(Num::from),
            tangent_dim: v.tangent_dim.as_ref().map(Num::from),
            clifford_bound: v.clifford_bound.as_ref().map(|r| r.to_string()),
            criteria: v.criteria.iter().map(|c| c.tag().to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CubicRow {
    pub delta: Num,
    pub m: Vec<Num>,
    pub d: Num,
    pub g: Num,
    pub kind: String,
    pub dim_w: Option<Num>,
    pub tangent_dim: Option<Num>,
    /// `null` when unknown.
    #[serde(rename = "h1_I3")]
    pub h1_i3: Option<Num>,
    /// `null` when unknown.
    #[serde(rename = "h1_I1_zero")]
    pub h1_i1_zero: Option<bool>,
    #[serde(rename = "h1_I3_nonzero_in_range")]
    pub h1_i3_nonzero_in_range: String,
    pub conjecture_range: bool,
    pub criteria: Vec<String>,
    pub notes: Vec<String>,
}

impl From<&CubicVerdict> for CubicRow {
    fn from(v: &CubicVerdict) -> Self {
        let mut notes: Vec<String> = v
            .criteria
            .iter()
            .filter(|c| {
                matches!(
                    c,
                    curvelattice_core::Criterion::CubicExceptionalSmooth
                        | curvelattice_core::Criterion::CubicM6Zero
                )
            })
            .map(|c| c.description().to_string())
            .collect();
        notes.extend(v.unmet.iter().cloned());
        CubicRow {
            delta: Num::from(v.tuple.delta()),
            m: v.tuple.m().iter().map(Num::from).collect(),
            d: Num::from(&v.d),
            g: Num::from(&v.g),
            kind: v.kind.as_str().to_string(),
            dim_w: v.dim_w.as_ref().map(Num::from),
            tangent_dim: v.tangent_dim.as_ref().map(Num::from),
            h1_i3: v.h1_i3.as_ref().map(Num::from),
            h1_i1_zero: v.h1_i1_zero,
            h1_i3_nonzero_in_range: match v.linear_normality.h1_i3_nonzero {
                InRange::Holds => "True",
                InRange::Fails => "False",
                InRange::OutOfRange => "OutOfRange",
            }
            .to_string(),
            conjecture_range: v.conjecture_range,
            criteria: v.criteria.iter().map(|c| c.tag().to_string()).collect(),
            notes,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Enumeration {
    pub region: String,
    pub bmax: Num,
    pub rows: Vec<QuarticRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub check: Option<FamilyCheckReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyCheckReport {
    pub families: Vec<String>,
    pub expected: usize,
    pub found: usize,
    pub unexpected: Vec<String>,
    pub missing: Vec<String>,
    /// Members above the large-genus threshold, where the families are
    /// asserted to lie below it.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub above_genus_threshold: Vec<String>,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaxGenus {
    pub d: Num,
    pub s: Num,
    pub g: Num,
    pub r: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cohomology {
    pub a: Num,
    pub b: Num,
    pub twist: Num,
    /// `C − nH`.
    pub line_bundle: [Num; 2],
    pub h0: Num,
    pub h1: Num,
    pub h2: Num,
    #[serde(rename = "h1_ideal")]
    pub h1_ideal: Num,
    pub trace: TraceReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub dual: bool,
    pub peels: Num,
    pub runs: Vec<PeelReport>,
    pub terminal: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeelReport {
    pub curve: [Num; 2],
    pub from: [Num; 2],
    pub times: Num,
    pub first_d: Num,
    pub last_d: Num,
    pub h1_added: Num,
}

pub fn pair_of(c: &DivClass2) -> [Num; 2] {
    [Num::from(&c.a), Num::from(&c.b)]
}

impl Cohomology {
    pub fn new(
        c: &DivClass2,
        twist: &Int,
        dims: &CohDims,
        trace: &Trace,
        curves: &[DivClass2],
        pencils: &[DivClass2],
    ) -> Self {
        let terminal = match &trace.terminal {
            Terminal::Zero => "zero".to_string(),
            Terminal::NefBig => "nef-and-big".to_string(),
            Terminal::Pencil { pencil, multiple } => {
                format!("{multiple} x pencil {}", pencils[*pencil])
            }
            Terminal::MinusTwoCurve { curve } => format!("(-2)-curve {}", curves[*curve]),
            Terminal::NotEffective => "not-effective".to_string(),
        };
        Cohomology {
            a: Num::from(&c.a),
            b: Num::from(&c.b),
            twist: Num::from(twist),
            line_bundle: pair_of(&dims.class),
            h0: Num::from(&dims.h0),
            h1: Num::from(&dims.h1),
            h2: Num::from(&dims.h2),
            h1_ideal: Num::from(&dims.h1),
            trace: TraceReport {
                dual: trace.dual,
                peels: Num(trace.peel_count()),
                runs: trace
                    .runs
                    .iter()
                    .map(|r| PeelReport {
                        curve: pair_of(&curves[r.curve]),
                        from: pair_of(&r.from),
                        times: Num::from(&r.times),
                        first_d: Num::from(&r.first_d),
                        last_d: Num::from(&r.last_d),
                        h1_added: Num::from(&r.h1_added),
                    })
                    .collect(),
                terminal,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub counterexamples: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}
