//! `key = value` query files.
//!
//! ```text
//! # SL2, split real form, annulus curve
//! group = A1.sc
//! sigma = split
//! curve = A:-1
//! sign = -
//! side = representation
//! twist = trivial
//! z = nontrivial
//! commands = components, pseudo-real
//! ```

use crate::error::{Error, Result};

pub const KEYS: [&str; 10] = ["group", "sigma", "epsilon", "curve", "sign", "side", "twist", "z", "format", "commands"];

/// Raw values of a query; every field is optional so command-line flags
/// can fill in or override them.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QueryFile {
    pub group: Option<String>,
    pub sigma: Option<String>,
    pub epsilon: Option<String>,
    pub curve: Option<String>,
    pub sign: Option<String>,
    pub side: Option<String>,
    pub twist: Option<String>,
    pub z: Option<String>,
    pub format: Option<String>,
    pub commands: Option<String>,
}

impl QueryFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut q = QueryFile::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("query line {}: expected `key = value`", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim().to_string());
            let slot = match key {
                "group" => &mut q.group,
                "sigma" => &mut q.sigma,
                "epsilon" => &mut q.epsilon,
                "curve" => &mut q.curve,
                "sign" => &mut q.sign,
                "side" => &mut q.side,
                "twist" => &mut q.twist,
                "z" => &mut q.z,
                "format" => &mut q.format,
                "commands" => &mut q.commands,
                other => {
                    return Err(Error::parse(format!(
                        "query line {}: unknown key {other:?} (known: {})",
                        lineno + 1,
                        KEYS.join(", ")
                    )))
                }
            };
            if slot.replace(value).is_some() {
                return Err(Error::parse(format!("query line {}: {key} given twice", lineno + 1)));
            }
        }
        Ok(q)
    }

    /// Fills unset fields from `other`, which takes precedence when set.
    pub fn overridden_by(mut self, other: QueryFile) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f; } )* };
        }
        take!(group, sigma, epsilon, curve, sign, side, twist, z, format, commands);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let q = QueryFile::parse("# hi\ngroup = A2 # trailing\n\nsign = -\n").unwrap();
        assert_eq!(q.group.as_deref(), Some("A2"));
        assert_eq!(q.sign.as_deref(), Some("-"));
    }

    #[test]
    fn rejects_unknown_and_repeated_keys() {
        assert!(matches!(QueryFile::parse("colour = red"), Err(Error::Parse(_))));
        assert!(matches!(QueryFile::parse("group = A1\ngroup = A2"), Err(Error::Parse(_))));
    }
}
