//! JSON schema for Hamiltonians:
//!
//! ```text
//! {"mass": m,
//!  "terms": [{"kind":"shifted_power","coef":[re,im],"shift":[re,im],"exp":k},
//!            {"kind":"ix_power","coef":g,"nu":v},
//!            {"kind":"sech2"|"sec2","coef":[re,im],"shift":[re,im]}]}
//! ```
//!
//! Each term may carry `"mass_scaling": "proportional" | "inverse"`; the
//! field is omitted for mass-independent terms. A missing `shift` reads as
//! the origin.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{from_pair, to_pair, Real};

use super::expr::PotentialExpr;
use super::hamiltonian::Hamiltonian;
use super::term::{MassScaling, PotentialTerm, TermShape};

fn is_independent(m: &MassScaling) -> bool {
    *m == MassScaling::Independent
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
enum WireTerm {
    #[serde(rename = "shifted_power")]
    ShiftedPower {
        coef: [f64; 2],
        #[serde(default)]
        shift: [f64; 2],
        exp: i32,
        #[serde(default, skip_serializing_if = "is_independent")]
        mass_scaling: MassScaling,
    },
    #[serde(rename = "ix_power")]
    IxPower {
        coef: f64,
        nu: f64,
        #[serde(default, skip_serializing_if = "is_independent")]
        mass_scaling: MassScaling,
    },
    #[serde(rename = "sech2")]
    Sech2 {
        coef: [f64; 2],
        #[serde(default)]
        shift: [f64; 2],
        #[serde(default, skip_serializing_if = "is_independent")]
        mass_scaling: MassScaling,
    },
    #[serde(rename = "sec2")]
    Sec2 {
        coef: [f64; 2],
        #[serde(default)]
        shift: [f64; 2],
        #[serde(default, skip_serializing_if = "is_independent")]
        mass_scaling: MassScaling,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WireHamiltonian {
    mass: f64,
    terms: Vec<WireTerm>,
}

fn unsign(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

fn pair<T: Real>(z: crate::scalar::Cx<T>) -> [f64; 2] {
    let [re, im] = to_pair(z);
    [unsign(re), unsign(im)]
}

fn to_wire<T: Real>(t: &PotentialTerm<T>) -> WireTerm {
    let mass_scaling = t.mass_scaling;
    match t.shape {
        TermShape::ShiftedPower {
            coef,
            shift,
            exponent,
        } => WireTerm::ShiftedPower {
            coef: pair(coef),
            shift: pair(shift),
            exp: exponent,
            mass_scaling,
        },
        TermShape::IxPower { coef, nu } => WireTerm::IxPower {
            coef: unsign(coef.as_f64()),
            nu: nu.as_f64(),
            mass_scaling,
        },
        TermShape::SechSquared { coef, shift } => WireTerm::Sech2 {
            coef: pair(coef),
            shift: pair(shift),
            mass_scaling,
        },
        TermShape::SecSquared { coef, shift } => WireTerm::Sec2 {
            coef: pair(coef),
            shift: pair(shift),
            mass_scaling,
        },
    }
}

fn from_wire<T: Real>(w: WireTerm) -> Result<PotentialTerm<T>> {
    let (shape, mass_scaling) = match w {
        WireTerm::ShiftedPower {
            coef,
            shift,
            exp,
            mass_scaling,
        } => (
            TermShape::ShiftedPower {
                coef: from_pair(coef),
                shift: from_pair(shift),
                exponent: exp,
            },
            mass_scaling,
        ),
        WireTerm::IxPower {
            coef,
            nu,
            mass_scaling,
        } => {
            if nu < 2.0 {
                return Err(Error::Schema(format!(
                    "ix_power requires nu >= 2, got {nu}"
                )));
            }
            (
                TermShape::IxPower {
                    coef: T::lit(coef),
                    nu: T::lit(nu),
                },
                mass_scaling,
            )
        }
        WireTerm::Sech2 {
            coef,
            shift,
            mass_scaling,
        } => (
            TermShape::SechSquared {
                coef: from_pair(coef),
                shift: from_pair(shift),
            },
            mass_scaling,
        ),
        WireTerm::Sec2 {
            coef,
            shift,
            mass_scaling,
        } => (
            TermShape::SecSquared {
                coef: from_pair(coef),
                shift: from_pair(shift),
            },
            mass_scaling,
        ),
    };
    let term = PotentialTerm {
        shape,
        mass_scaling,
    };
    let c = term.coef();
    if !(c.re.is_finite() && c.im.is_finite()) {
        return Err(Error::Schema("non-finite coefficient".into()));
    }
    Ok(term)
}

impl<T: Real> Hamiltonian<T> {
    /// Compact single-line JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let wire = WireHamiltonian {
            mass: self.mass().as_f64(),
            terms: self.potential.terms.iter().map(to_wire).collect(),
        };
        let mut s = serde_json::to_string(&wire).expect("wire types serialize");
        s.push('\n');
        s
    }

    /// JSON of the canonical form (see [`PotentialExpr::canonical`]).
    pub fn to_canonical_json(&self) -> String {
        Hamiltonian::new(self.mass(), self.potential.canonical())
            .expect("valid mass")
            .to_json()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let wire: WireHamiltonian =
            serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        let terms = wire
            .terms
            .into_iter()
            .map(from_wire)
            .collect::<Result<Vec<_>>>()?;
        Hamiltonian::new(T::lit(wire.mass), PotentialExpr::new(terms))
            .map_err(|e| Error::Schema(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::families;
    use crate::scalar::Cx;

    #[test]
    fn documented_schema_parses() {
        let src = r#"{"mass":0.5,"terms":[
            {"kind":"shifted_power","coef":[1,0],"shift":[0,1],"exp":2,"mass_scaling":"proportional"},
            {"kind":"ix_power","coef":1.0,"nu":3},
            {"kind":"sech2","coef":[-1,0],"shift":[0,0.5]},
            {"kind":"sec2","coef":[2,0],"shift":[0,0]}]}"#;
        let h = Hamiltonian::<f64>::from_json(src).unwrap();
        assert_eq!(h.mass(), 0.5);
        assert_eq!(h.potential.len(), 4);
        assert_eq!(h.potential.terms[0].mass_scaling, MassScaling::Proportional);
    }

    #[test]
    fn serialization_is_byte_stable() {
        let h = families::shifted_oscillator(0.5, 2.0, 1.0, 0.75).unwrap();
        let once = h.to_json();
        let twice = Hamiltonian::<f64>::from_json(&once).unwrap().to_json();
        assert_eq!(once, twice);
        assert_eq!(
            once,
            "{\"mass\":0.5,\"terms\":[{\"kind\":\"shifted_power\",\"coef\":[1.0,0.0],\"shift\":[0.0,1.0],\"exp\":2,\"mass_scaling\":\"proportional\"},\
             {\"kind\":\"shifted_power\",\"coef\":[0.3125,0.0],\"shift\":[0.0,1.0],\"exp\":-2,\"mass_scaling\":\"inverse\"}]}\n"
        );
    }

    #[test]
    fn shift_defaults_to_origin() {
        let h = Hamiltonian::<f64>::from_json(
            r#"{"mass":0.5,"terms":[{"kind":"shifted_power","coef":[-1,0],"exp":3}]}"#,
        )
        .unwrap();
        assert_eq!(
            h.potential.eval(Cx::new(2.0, 0.0)).unwrap(),
            Cx::new(-8.0, 0.0)
        );
    }

    #[test]
    fn malformed_inputs_are_schema_errors() {
        for bad in [
            "{",
            r#"{"mass":0.5}"#,
            r#"{"mass":0.0,"terms":[]}"#,
            r#"{"mass":1,"terms":[{"kind":"cubic","coef":[1,0]}]}"#,
            r#"{"mass":1,"terms":[{"kind":"ix_power","coef":1,"nu":1.5}]}"#,
            r#"{"mass":1,"terms":[],"extra":true}"#,
        ] {
            assert!(
                matches!(Hamiltonian::<f64>::from_json(bad), Err(Error::Schema(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn negative_zero_is_written_as_zero() {
        let h = Hamiltonian::new(
            1.0,
            PotentialExpr::new(vec![PotentialTerm::shifted_power(
                Cx::new(-0.0, 1.0),
                Cx::new(0.0, -0.0),
                1,
            )]),
        )
        .unwrap();
        assert!(!h.to_json().contains("-0.0"));
    }
}
