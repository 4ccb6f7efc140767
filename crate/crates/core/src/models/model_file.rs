//! The line-based model file format.
//!
//! ```text
//! ring matrix 3                  # or: ring polytrunc 6
//! elem c = [[0,1,0],[0,0,1],[0,0,0]]
//! elem u = [[1,1,0],[0,1,1],[0,0,1]]
//! map s = conj u
//! map d = compose inner_c s      # maps: id, left E, right E, inner E,
//! map inner_c = inner c          #   innergen E1 E2, conj E, diff,
//! assign d d s s d               #   compose M1 M2 ... (M1 applied last)
//! commute d s
//! ```
//!
//! `assign F G1 H1 G2 H2` names the maps playing the spec roles; without it
//! spec symbols are looked up by name.

use std::collections::BTreeMap;

use super::element::{ConcreteRing, Element};
use super::env::{MapEnv, RoleAssignment};
use super::maps::ConcreteMap;
use crate::error::{Error, Result};
use crate::spec::{strip_comment, DerivationSpec};
use crate::symbol::{is_identifier, CommutationHypotheses, OpSymbol};

#[derive(Clone, Debug, PartialEq)]
pub struct ModelFile {
    pub ring: ConcreteRing,
    pub elements: BTreeMap<String, Element>,
    pub maps: BTreeMap<OpSymbol, ConcreteMap>,
    pub roles: Option<RoleAssignment>,
    pub hyp: CommutationHypotheses,
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut ring: Option<ConcreteRing> = None;
        let mut elements = BTreeMap::new();
        let mut maps: BTreeMap<OpSymbol, ConcreteMap> = BTreeMap::new();
        let mut roles = None;
        let mut hyp = CommutationHypotheses::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw).trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::syntax(line_no, msg);
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            if keyword != "ring" && ring.is_none() {
                return Err(err("the first statement must be `ring ...`".into()));
            }
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(err("duplicate `ring` line".into()));
                    }
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    let size = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| err(format!("bad ring size {s:?}")))
                    };
                    let parsed = match parts.as_slice() {
                        ["matrix", n] => ConcreteRing::matrix(size(n)?),
                        ["polytrunc", m] => ConcreteRing::poly_trunc(size(m)?),
                        _ => return Err(err("usage: ring matrix <dim> | ring polytrunc <m>".into())),
                    };
                    ring = Some(parsed.map_err(|e| err(e.to_string()))?);
                }
                "elem" => {
                    let (name, literal) = split_binding(rest)
                        .ok_or_else(|| err("usage: elem <name> = <literal>".into()))?;
                    if !is_identifier(name) {
                        return Err(err(format!("bad element name {name:?}")));
                    }
                    let value = ring
                        .unwrap()
                        .parse_element(literal)
                        .map_err(|e| err(e.to_string()))?;
                    if elements.insert(name.to_string(), value).is_some() {
                        return Err(err(format!("element {name} defined twice")));
                    }
                }
                "map" => {
                    let (name, body) = split_binding(rest)
                        .ok_or_else(|| err("usage: map <name> = <kind> <args>".into()))?;
                    let symbol = OpSymbol::new(name).map_err(|e| err(e.to_string()))?;
                    if symbol.is_identity() {
                        return Err(err("the identity symbol I cannot be redefined".into()));
                    }
                    let map = parse_map(body, &elements, &maps).map_err(err)?;
                    map.check_ring(ring.unwrap()).map_err(|e| err(e.to_string()))?;
                    if maps.insert(symbol, map).is_some() {
                        return Err(err(format!("map {name} defined twice")));
                    }
                }
                "assign" => {
                    let names = symbols(rest).map_err(err)?;
                    let [f, g1, h1, g2, h2]: [OpSymbol; 5] = names
                        .try_into()
                        .map_err(|_| err("usage: assign <f> <g1> <h1> <g2> <h2>".into()))?;
                    for s in [&f, &g1, &h1, &g2, &h2] {
                        if !s.is_identity() && !maps.contains_key(s) {
                            return Err(err(format!("map {s} is not defined")));
                        }
                    }
                    if f.is_identity() {
                        return Err(err("f cannot be I".into()));
                    }
                    if roles.is_some() {
                        return Err(err("duplicate `assign` line".into()));
                    }
                    roles = Some(RoleAssignment {
                        f,
                        summands: [(g1, h1), (g2, h2)],
                    });
                }
                "commute" => {
                    let names = symbols(rest).map_err(err)?;
                    let [s, t]: [OpSymbol; 2] = names
                        .try_into()
                        .map_err(|_| err("usage: commute <s> <t>".into()))?;
                    for x in [&s, &t] {
                        if !x.is_identity() && !maps.contains_key(x) {
                            return Err(err(format!("map {x} is not defined")));
                        }
                    }
                    hyp.declare(s, t);
                }
                other => return Err(err(format!("unknown keyword {other:?}"))),
            }
        }
        let ring = ring.ok_or_else(|| Error::syntax(0, "missing `ring` line"))?;
        Ok(ModelFile {
            ring,
            elements,
            maps,
            roles,
            hyp,
        })
    }

    /// Builds the environment for `spec`, with spec symbols resolvable.
    pub fn env_for(&self, spec: &DerivationSpec) -> Result<MapEnv> {
        let f_name = self.roles.as_ref().map_or(&spec.f_name, |r| &r.f);
        let f_map = self
            .maps
            .get(f_name)
            .cloned()
            .ok_or_else(|| Error::UnboundSymbol(f_name.clone()))?;
        let mut env = MapEnv::new(self.ring, f_map)?;
        for (name, map) in &self.maps {
            env.assign(name.clone(), map.clone())?;
        }
        env.hyp = self.hyp.clone();
        env.roles = self.roles.clone();
        env.bind(spec)
    }

    pub fn element(&self, name: &str) -> Option<&Element> {
        self.elements.get(name)
    }
}

fn split_binding(rest: &str) -> Option<(&str, &str)> {
    let (name, body) = rest.split_once('=')?;
    let name = name.trim();
    let body = body.trim();
    if name.is_empty() || body.is_empty() {
        None
    } else {
        Some((name, body))
    }
}

fn symbols(rest: &str) -> std::result::Result<Vec<OpSymbol>, String> {
    rest.split_whitespace()
        .map(|s| OpSymbol::new(s).map_err(|e| e.to_string()))
        .collect()
}

fn parse_map(
    body: &str,
    elements: &BTreeMap<String, Element>,
    maps: &BTreeMap<OpSymbol, ConcreteMap>,
) -> std::result::Result<ConcreteMap, String> {
    let parts: Vec<&str> = body.split_whitespace().collect();
    let elem = |name: &str| {
        elements
            .get(name)
            .cloned()
            .ok_or_else(|| format!("element {name} is not defined"))
    };
    let map = match parts.as_slice() {
        ["id"] => ConcreteMap::Identity,
        ["diff"] => ConcreteMap::FormalDiff,
        ["left", c] => ConcreteMap::LeftMul(elem(c)?),
        ["right", c] => ConcreteMap::RightMul(elem(c)?),
        ["inner", c] => ConcreteMap::InnerDer(elem(c)?),
        ["innergen", b1, b2] => ConcreteMap::InnerGenDer(elem(b1)?, elem(b2)?),
        ["conj", u] => ConcreteMap::conj(elem(u)?).map_err(|e| e.to_string())?,
        ["compose", rest @ ..] if !rest.is_empty() => ConcreteMap::Compose(
            rest.iter()
                .map(|name| {
                    if *name == "I" {
                        return Ok(ConcreteMap::Identity);
                    }
                    let sym = OpSymbol::new(name).map_err(|e| e.to_string())?;
                    maps.get(&sym)
                        .cloned()
                        .ok_or_else(|| format!("map {name} is not defined"))
                })
                .collect::<std::result::Result<Vec<_>, String>>()?,
        ),
        _ => {
            return Err(format!(
                "unknown map form {body:?}; expected id | diff | left E | right E | inner E | \
                 innergen E1 E2 | conj E | compose M1 M2 ..."
            ))
        }
    };
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::element::Sampler;
    use crate::models::validate::{validate_spec, Trials};
    use crate::par::Execution;

    const SIGMA: &str = "\
ring matrix 3
elem c = [[0,1,2],[0,0,1],[0,0,0]]
elem u = [[1,1,0],[0,1,1],[0,0,1]]
map s = conj u
map dc = inner c
map d = compose dc s
commute d s
";

    #[test]
    fn parses_and_binds_by_name() {
        let model = ModelFile::parse(SIGMA).unwrap();
        assert_eq!(model.ring, ConcreteRing::Matrix(3));
        assert_eq!(model.maps.len(), 3);
        let spec = DerivationSpec::parse("derivation d\nsummand d s\nsummand s d\n").unwrap();
        let env = model.env_for(&spec).unwrap();
        let report = validate_spec(&spec, &env, Trials::Random(20), 1, &Sampler::default(), Execution::Sequential);
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn binds_by_role() {
        let text = format!("{SIGMA}assign d d s s d\n");
        let model = ModelFile::parse(&text).unwrap();
        let spec = DerivationSpec::parse("derivation f\nsummand g1 h1\nsummand g2 h2\n").unwrap();
        let env = model.env_for(&spec).unwrap();
        let report = validate_spec(&spec, &env, Trials::Random(20), 1, &Sampler::default(), Execution::Sequential);
        assert!(report.passed(), "{report:?}");
        // g1 = g plays `d` while h1 = g plays `s`: one spec symbol, two maps.
        let clash = DerivationSpec::parse("derivation f\nsummand g g\nsummand h g\n").unwrap();
        assert!(model.env_for(&clash).is_err());
        let with_identity = DerivationSpec::parse("derivation f\nsummand g I\nsummand I h\n").unwrap();
        assert!(model.env_for(&with_identity).is_err());
    }

    #[test]
    fn errors_report_lines() {
        let cases = [
            ("elem c = [[1]]\n", 1),
            ("ring matrix 9\n", 1),
            ("ring matrix 2\nelem c = [[1,2],[3]]\n", 2),
            ("ring matrix 2\nmap d = inner nope\n", 2),
            ("ring matrix 2\nelem u = [[1,2],[2,4]]\nmap s = conj u\n", 3),
            ("ring matrix 2\nmap d = diff\n", 2),
            ("ring matrix 2\nmap d = id\nassign d d\n", 3),
            ("ring matrix 2\nfrobnicate\n", 2),
            ("ring polytrunc 4\nmap I = id\n", 2),
        ];
        for (text, line) in cases {
            match ModelFile::parse(text) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: expected syntax error, got {other:?}"),
            }
        }
    }

    #[test]
    fn unbound_f_is_reported() {
        let model = ModelFile::parse("ring matrix 2\nmap g = id\n").unwrap();
        let spec = DerivationSpec::parse("derivation f\nsummand g I\nsummand I g\n").unwrap();
        assert!(matches!(model.env_for(&spec), Err(Error::UnboundSymbol(_))));
    }
}
