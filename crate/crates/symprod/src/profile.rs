//! The JSON profile-file format consumed by the command-line tool.
//!
//! ```json
//! {
//!   "profiles": [
//!     {"name": "projective-line", "kind": "hodge", "poly": "1 + y*x*z^2"},
//!     {"name": "p2-sig", "kind": "signature", "sigma": 1, "chi": 3},
//!     {"name": "two-points", "kind": "euler", "chi": 2}
//!   ],
//!   "order": 6
//! }
//! ```
//!
//! Polynomial kinds carry a `poly` expression (parsed over the kind's
//! canonical variables), `euler` carries `chi`, and `signature` carries
//! `sigma` and `chi`. `compact_support` defaults to false and `order` is
//! optional.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genera::{GenusData, GenusKind, GenusProfile};
use crate::parse::parse_poly;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileFile {
    pub profiles: Vec<ProfileEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub name: String,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<i64>,
    #[serde(default)]
    pub compact_support: bool,
}

impl ProfileFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("profile file: {e}"),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Validate and parse every entry.
    pub fn genus_profiles(&self) -> Result<Vec<GenusProfile>> {
        self.profiles.iter().map(ProfileEntry::to_profile).collect()
    }
}

impl ProfileEntry {
    pub fn to_profile(&self) -> Result<GenusProfile> {
        let kind = GenusKind::parse(&self.kind).ok_or_else(|| Error::Profile {
            name: self.name.clone(),
            msg: format!("unknown kind `{}`", self.kind),
        })?;
        let data = match kind {
            GenusKind::Euler => GenusData::Euler(self.chi.ok_or_else(|| Error::Profile {
                name: self.name.clone(),
                msg: "euler profiles need `chi`".to_string(),
            })?),
            GenusKind::Signature => GenusData::Signature {
                sigma: self.sigma.ok_or_else(|| Error::Profile {
                    name: self.name.clone(),
                    msg: "signature profiles need `sigma`".to_string(),
                })?,
                chi: self.chi.ok_or_else(|| Error::Profile {
                    name: self.name.clone(),
                    msg: "signature profiles need `chi`".to_string(),
                })?,
            },
            poly_kind => {
                let text = self.poly.as_ref().ok_or_else(|| Error::Profile {
                    name: self.name.clone(),
                    msg: format!("{poly_kind} profiles need `poly`"),
                })?;
                let vars = poly_kind.vars().expect("poly kind");
                GenusData::Poly(parse_poly(text, &vars)?)
            }
        };
        GenusProfile::new(self.name.clone(), kind, data, self.compact_support)
    }

    /// Entry for a polynomial-kind profile.
    pub fn from_profile(p: &GenusProfile) -> Self {
        let (poly, sigma, chi) = match &p.data {
            GenusData::Poly(q) => (Some(q.to_string()), None, None),
            GenusData::Euler(c) => (None, None, Some(*c)),
            GenusData::Signature { sigma, chi } => (None, Some(*sigma), Some(*chi)),
        };
        ProfileEntry {
            name: p.name.clone(),
            kind: p.kind.as_str().to_string(),
            poly,
            sigma,
            chi,
            compact_support: p.compact_support,
        }
    }
}
