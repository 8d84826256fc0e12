//! Instance JSON.
//!
//! ```json
//! {"problem":"coverage","domain":[0,5],"intervals":[[0,2],[1,4],[3,5]]}
//! {"problem":"piercing","xdomain":[0,3],"ydomain":[0,3],"crosses":[{"h":[0,1],"v":[0,1]}]}
//! ```
//!
//! Integer coordinates are kept as given. If any coordinate on an axis is
//! written as a decimal, that whole axis is replaced by its dense ranks.

use std::fs;
use std::path::Path;

use serde::Deserialize;
use serde_json::Number;

use crate::error::{Error, Result};
use crate::instance::{CoverageInstance, Cross, Instance, Interval, PiercingInstance, Rank};
use crate::rank::normalize_ranks;

type RawInterval = [Number; 2];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCross {
    h: RawInterval,
    v: RawInterval,
}

#[derive(Deserialize)]
#[serde(tag = "problem", rename_all = "lowercase", deny_unknown_fields)]
enum RawInstance {
    Coverage { domain: RawInterval, intervals: Vec<RawInterval> },
    Piercing { xdomain: RawInterval, ydomain: RawInterval, crosses: Vec<RawCross> },
}

/// Converts one axis worth of coordinates to ranks, keeping integers as-is.
fn axis_ranks(raw: &[&Number]) -> Result<Vec<Rank>> {
    if let Some(ints) = raw.iter().map(|n| n.as_i64()).collect::<Option<Vec<_>>>() {
        return Ok(ints);
    }
    let floats = raw
        .iter()
        .map(|n| n.as_f64().ok_or_else(|| Error::Malformed(format!("unrepresentable number {n}"))))
        .collect::<Result<Vec<f64>>>()?;
    Ok(normalize_ranks(&floats)?.ranks)
}

fn intervals_from(ranks: &[Rank]) -> Result<Vec<Interval>> {
    ranks.chunks(2).map(|p| Interval::new(p[0], p[1]).map_err(|e| Error::Malformed(e.to_string()))).collect()
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let raw: RawInstance = serde_json::from_str(text)?;
    Ok(match raw {
        RawInstance::Coverage { domain, intervals } => {
            let nums: Vec<&Number> = domain.iter().chain(intervals.iter().flatten()).collect();
            let mut ivs = intervals_from(&axis_ranks(&nums)?)?.into_iter();
            let domain = ivs.next().expect("domain present");
            Instance::Coverage(CoverageInstance::new(domain, ivs.collect()))
        }
        RawInstance::Piercing { xdomain, ydomain, crosses } => {
            let xs: Vec<&Number> = xdomain.iter().chain(crosses.iter().flat_map(|c| &c.h)).collect();
            let ys: Vec<&Number> = ydomain.iter().chain(crosses.iter().flat_map(|c| &c.v)).collect();
            let mut hs = intervals_from(&axis_ranks(&xs)?)?.into_iter();
            let mut vs = intervals_from(&axis_ranks(&ys)?)?.into_iter();
            let (xdomain, ydomain) = (hs.next().expect("xdomain"), vs.next().expect("ydomain"));
            Instance::Piercing(PiercingInstance::new(
                xdomain,
                ydomain,
                hs.zip(vs).map(|(h, v)| Cross::new(h, v)).collect(),
            ))
        }
    })
}

/// Compact JSON followed by a newline.
pub fn to_json(instance: &Instance) -> String {
    let mut s = serde_json::to_string(instance).expect("instances always serialize");
    s.push('\n');
    s
}

pub fn load_instance(path: &Path) -> Result<Instance> {
    parse_instance(&fs::read_to_string(path)?)
}

pub fn save_instance(path: &Path, instance: &Instance) -> Result<()> {
    fs::write(path, to_json(instance))?;
    Ok(())
}
