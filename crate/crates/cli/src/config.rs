//! Run configuration: command-line flags override a `key = value` file,
//! which overrides the defaults.

use std::path::Path;

use kashiwara_core::{CartanType, Error, Mutation, Result, SuiteConfig, Weight};

/// Values that may come from either the command line or a config file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Partial {
    pub cartan: Option<String>,
    pub height: Option<usize>,
    pub depth: Option<usize>,
    pub lambda: Option<String>,
    pub seed: Option<u64>,
    pub json: Option<bool>,
    pub mutation: Option<String>,
}

impl Partial {
    /// Fill unset fields from `other`.
    pub fn or(self, other: Partial) -> Partial {
        Partial {
            cartan: self.cartan.or(other.cartan),
            height: self.height.or(other.height),
            depth: self.depth.or(other.depth),
            lambda: self.lambda.or(other.lambda),
            seed: self.seed.or(other.seed),
            json: self.json.or(other.json),
            mutation: self.mutation.or(other.mutation),
        }
    }

    pub fn parse_file_text(text: &str) -> Result<Partial> {
        let mut out = Partial::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::Config(format!("line {}: expected key = value", n + 1)));
            };
            let (key, value) = (key.trim(), value.trim().to_string());
            let number = |v: &str| {
                v.parse::<u64>()
                    .map_err(|_| Error::Config(format!("line {}: `{key}` needs a number, got `{v}`", n + 1)))
            };
            match key {
                "type" => out.cartan = Some(value),
                "height" => out.height = Some(number(&value)? as usize),
                "depth" => out.depth = Some(number(&value)? as usize),
                "lambda" => out.lambda = Some(value),
                "seed" => out.seed = Some(number(&value)?),
                "json" => {
                    out.json = Some(value.parse().map_err(|_| {
                        Error::Config(format!("line {}: `json` needs true or false", n + 1))
                    })?)
                }
                "mutation" => out.mutation = Some(value),
                _ => return Err(Error::Config(format!("line {}: unknown key `{key}`", n + 1))),
            }
        }
        Ok(out)
    }

    pub fn read_file(path: &Path) -> Result<Partial> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse_file_text(&text)
    }
}

/// A fully resolved configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub suite: SuiteConfig,
    pub lambda: Option<Weight>,
    pub json: bool,
}

pub fn parse_mutation(s: &str) -> Result<Mutation> {
    match s {
        "none" => Ok(Mutation::None),
        "kashiwara-delta" => Ok(Mutation::KashiwaraDelta),
        "quantum-commutator" => Ok(Mutation::QuantumCommutator),
        "pairing-base" => Ok(Mutation::PairingBase),
        _ => Err(Error::Config(format!("unknown mutation `{s}`"))),
    }
}

impl Config {
    pub fn resolve(p: Partial) -> Result<Config> {
        let defaults = SuiteConfig::default();
        let cartan: CartanType = match &p.cartan {
            Some(t) => t.parse()?,
            None => defaults.cartan.clone(),
        };
        let lambda = p.lambda.as_deref().map(str::parse::<Weight>).transpose()?;
        let suite = SuiteConfig {
            cartan,
            height: p.height.unwrap_or(defaults.height),
            depth: p.depth.unwrap_or(defaults.depth),
            lambdas: lambda.iter().cloned().collect(),
            seed: p.seed.unwrap_or(defaults.seed),
            mutation: p.mutation.as_deref().map(parse_mutation).transpose()?.unwrap_or_default(),
        };
        suite.validate()?;
        Ok(Config {
            suite,
            lambda,
            json: p.json.unwrap_or(false),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_beat_file_beat_defaults() {
        let file = Partial::parse_file_text("type = A2\nheight = 2 # short run\n\ndepth=3\n").unwrap();
        let flags = Partial {
            height: Some(4),
            ..Partial::default()
        };
        let c = Config::resolve(flags.or(file)).unwrap();
        assert_eq!(c.suite.cartan, CartanType::a(2));
        assert_eq!(c.suite.height, 4);
        assert_eq!(c.suite.depth, 3);
        assert_eq!(c.suite.seed, 0);
        assert!(!c.json);

        let c = Config::resolve(Partial::default()).unwrap();
        assert_eq!((c.suite.cartan.name(), c.suite.height, c.suite.depth), ("A1".into(), 3, 4));
    }

    #[test]
    fn bad_files_name_the_line() {
        let e = Partial::parse_file_text("type = A1\nheight = lots\n").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
        assert!(Partial::parse_file_text("colour = red").is_err());
        assert!(Partial::parse_file_text("just words").is_err());
    }

    #[test]
    fn lambda_must_match_the_rank() {
        let p = Partial {
            cartan: Some("A2".into()),
            lambda: Some("1".into()),
            ..Partial::default()
        };
        assert!(Config::resolve(p).is_err());
    }
}
