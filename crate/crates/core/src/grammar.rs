//! Text form of family members, `tag:args`, and the registry of parsers.
//!
//! | tag      | args              | example                 |
//! |----------|-------------------|-------------------------|
//! | `werner` | `c1,c2,...`       | `werner:0.6,0.8i`       |
//! | `dicke`  | `n,k`             | `dicke:4,2`             |
//! | `ghz`    | `n,c1`            | `ghz:3,0.7071067811865476` |
//! | `sin`    | `n`               | `sin:5`                 |
//! | `cos`    | `n`               | `cos:5`                 |
//!
//! Complex coefficients are written `re+imi`; bare reals are accepted.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{DickeSpec, FamilySpec, GhzSpec, WernerSpec};
use crate::statevector::Amplitude;

pub trait FamilyParser: Send + Sync {
    fn tag(&self) -> &'static str;
    fn usage(&self) -> &'static str;
    fn parse(&self, args: &str) -> Result<FamilySpec>;
}

pub fn parse_complex(text: &str) -> Result<Amplitude> {
    let t = text.trim();
    Amplitude::from_str(t).map_err(|_| Error::Parse(format!("bad complex number `{t}`")))
}

fn parse_usize(text: &str, what: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what} `{}`", text.trim())))
}

fn split_args<'a>(args: &'a str, expected: usize, usage: &str) -> Result<Vec<&'a str>> {
    let parts: Vec<&str> = args.split(',').collect();
    if parts.len() != expected {
        return Err(Error::Parse(format!("expected `{usage}`")));
    }
    Ok(parts)
}

struct WernerParser;

impl FamilyParser for WernerParser {
    fn tag(&self) -> &'static str {
        "werner"
    }

    fn usage(&self) -> &'static str {
        "werner:c1,c2,...,cn"
    }

    fn parse(&self, args: &str) -> Result<FamilySpec> {
        let c = args.split(',').map(parse_complex).collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec::Werner(WernerSpec::new(c)?))
    }
}

struct DickeParser;

impl FamilyParser for DickeParser {
    fn tag(&self) -> &'static str {
        "dicke"
    }

    fn usage(&self) -> &'static str {
        "dicke:n,k"
    }

    fn parse(&self, args: &str) -> Result<FamilySpec> {
        let p = split_args(args, 2, self.usage())?;
        let spec = DickeSpec::new(parse_usize(p[0], "n")?, parse_usize(p[1], "k")?)?;
        Ok(FamilySpec::Dicke(spec))
    }
}

struct GhzParser;

impl FamilyParser for GhzParser {
    fn tag(&self) -> &'static str {
        "ghz"
    }

    fn usage(&self) -> &'static str {
        "ghz:n,c1"
    }

    fn parse(&self, args: &str) -> Result<FamilySpec> {
        let p = split_args(args, 2, self.usage())?;
        let spec = GhzSpec::from_c1(parse_usize(p[0], "n")?, parse_complex(p[1])?)?;
        Ok(FamilySpec::Ghz(spec))
    }
}

struct TrigParser {
    tag: &'static str,
    usage: &'static str,
    make: fn(usize) -> FamilySpec,
}

impl FamilyParser for TrigParser {
    fn tag(&self) -> &'static str {
        self.tag
    }

    fn usage(&self) -> &'static str {
        self.usage
    }

    fn parse(&self, args: &str) -> Result<FamilySpec> {
        let n = parse_usize(args, "n")?;
        if n < 2 {
            return Err(Error::NTooSmall { n, min: 2 });
        }
        if n > crate::statevector::MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        Ok((self.make)(n))
    }
}

/// Parsers keyed by tag, in registration order.
pub struct FamilyRegistry {
    parsers: Vec<Box<dyn FamilyParser>>,
}

impl FamilyRegistry {
    pub fn empty() -> Self {
        Self { parsers: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(WernerParser));
        r.register(Box::new(DickeParser));
        r.register(Box::new(GhzParser));
        r.register(Box::new(TrigParser { tag: "sin", usage: "sin:n", make: FamilySpec::Sin }));
        r.register(Box::new(TrigParser { tag: "cos", usage: "cos:n", make: FamilySpec::Cos }));
        r
    }

    /// Adds a parser, replacing any previous one with the same tag.
    pub fn register(&mut self, parser: Box<dyn FamilyParser>) {
        match self.parsers.iter().position(|p| p.tag() == parser.tag()) {
            Some(i) => self.parsers[i] = parser,
            None => self.parsers.push(parser),
        }
    }

    pub fn get(&self, tag: &str) -> Option<&dyn FamilyParser> {
        self.parsers.iter().find(|p| p.tag() == tag).map(|p| p.as_ref())
    }

    pub fn tags(&self) -> Vec<&'static str> {
        self.parsers.iter().map(|p| p.tag()).collect()
    }

    pub fn usages(&self) -> Vec<&'static str> {
        self.parsers.iter().map(|p| p.usage()).collect()
    }

    pub fn parse(&self, text: &str) -> Result<FamilySpec> {
        let (tag, args) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `tag:args`, got `{text}`")))?;
        let tag = tag.trim().to_ascii_lowercase();
        self.get(&tag).ok_or(Error::UnknownFamily(tag))?.parse(args)
    }
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

/// Parses with the built-in registry.
pub fn parse_family(text: &str) -> Result<FamilySpec> {
    FamilyRegistry::builtin().parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("0.7").unwrap(), Amplitude::new(0.7, 0.0));
        assert_eq!(parse_complex(" 0.5+0.25i ").unwrap(), Amplitude::new(0.5, 0.25));
        assert_eq!(parse_complex("-0.3-0.2i").unwrap(), Amplitude::new(-0.3, -0.2));
        assert_eq!(parse_complex("0.8i").unwrap(), Amplitude::new(0.0, 0.8));
        assert_eq!(parse_complex("1e-3").unwrap(), Amplitude::new(1e-3, 0.0));
        assert!(matches!(parse_complex("abc"), Err(Error::Parse(_))));
    }

    #[test]
    fn parses_every_builtin_family() {
        assert!(matches!(parse_family("dicke:4,2").unwrap(), FamilySpec::Dicke(d) if d.k() == 2));
        assert!(matches!(parse_family("sin:3").unwrap(), FamilySpec::Sin(3)));
        assert!(matches!(parse_family("cos:5").unwrap(), FamilySpec::Cos(5)));
        let g = parse_family("ghz:5,0.7071067811865476").unwrap();
        assert_eq!(g.n(), 5);
        let w = parse_family("werner:0.6,0.8i").unwrap();
        match w {
            FamilySpec::Werner(w) => assert_eq!(w.coefficients()[1], Amplitude::new(0.0, 0.8)),
            other => panic!("{other:?}"),
        }
        let w = parse_family(
            "werner:0.8366600265340756,0.31622776601683794,0.31622776601683794,0.31622776601683794",
        );
        assert!(w.is_ok());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_family("bell:2"), Err(Error::UnknownFamily(t)) if t == "bell"));
        assert!(matches!(parse_family("dicke4"), Err(Error::Parse(_))));
        assert!(matches!(parse_family("dicke:4"), Err(Error::Parse(_))));
        assert!(matches!(parse_family("dicke:4,5"), Err(Error::KOutOfRange { .. })));
        assert!(matches!(parse_family("werner:0.5,0.5"), Err(Error::BadNormalization(_))));
        assert!(matches!(parse_family("sin:1"), Err(Error::NTooSmall { .. })));
        assert!(matches!(parse_family("ghz:3,2"), Err(Error::BadNormalization(_))));
    }

    #[test]
    fn registry_lookup_and_replacement() {
        struct Bell;
        impl FamilyParser for Bell {
            fn tag(&self) -> &'static str {
                "bell"
            }
            fn usage(&self) -> &'static str {
                "bell:"
            }
            fn parse(&self, _: &str) -> Result<FamilySpec> {
                Ok(FamilySpec::Cos(2))
            }
        }
        let mut r = FamilyRegistry::builtin();
        assert_eq!(r.tags(), vec!["werner", "dicke", "ghz", "sin", "cos"]);
        r.register(Box::new(Bell));
        assert!(r.get("bell").is_some());
        assert_eq!(r.parse("bell:").unwrap(), FamilySpec::Cos(2));
        let before = r.tags().len();
        r.register(Box::new(Bell));
        assert_eq!(r.tags().len(), before);
    }
}
