//! Wire helpers: arbitrary-size integers as JSON numbers, reals as
//! decimal strings.

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::qcore::decimal::{scientific, width_string};
use crate::qcore::{RInterval, Round};

/// Significant digits used for interval endpoints in JSON output.
pub const ENDPOINT_DIGITS: usize = 40;

/// A big integer rendered as a bare JSON number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number =
            self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse::<BigInt>().map(JsonInt).map_err(serde::de::Error::custom)
    }
}

impl From<&BigInt> for JsonInt {
    fn from(n: &BigInt) -> Self {
        JsonInt(n.clone())
    }
}

/// Outward-rounded decimal rendering of an enclosure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: String,
    pub hi: String,
    pub width: String,
}

impl From<&RInterval> for IntervalJson {
    fn from(r: &RInterval) -> Self {
        IntervalJson {
            lo: scientific(r.lo(), ENDPOINT_DIGITS, Round::Down),
            hi: scientific(r.hi(), ENDPOINT_DIGITS, Round::Up),
            width: width_string(&r.width()),
        }
    }
}
