use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A perversity: an integer function of codimension `c >= 2`.
///
/// Odd codimensions follow the usual completion: `middle(c) = ⌊(c-2)/2⌋`,
/// `log = middle + 1`, and the `k` family switches from `middle` to
/// `middle + 1` above codimension `2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Perversity {
    Zero,
    /// Lower middle, `⌊(c-2)/2⌋`.
    Middle,
    /// Upper middle, `⌊(c-1)/2⌋`; agrees with `Middle` on even codimensions.
    UpperMiddle,
    /// Logarithmic, `middle + 1`.
    Log,
    /// `middle(c)` for `c <= 2k`, `middle(c) + 1` above.
    K(usize),
    /// `c - 2`.
    Top,
    /// Explicit values; codimensions not listed are undefined.
    Custom(BTreeMap<usize, i64>),
}

impl Perversity {
    /// Checks a custom table: codimensions `>= 2`, values nonnegative,
    /// nondecreasing, and at most `c - 1`.
    pub fn custom(values: BTreeMap<usize, i64>) -> Result<Self> {
        let mut prev: Option<i64> = None;
        for (&c, &v) in &values {
            if c < 2 {
                return Err(Error::InvalidPerversity(format!(
                    "codimension {c} is below 2"
                )));
            }
            if v < 0 || v > c as i64 - 1 {
                return Err(Error::InvalidPerversity(format!(
                    "value {v} at codimension {c} is outside 0..={}",
                    c - 1
                )));
            }
            if prev.is_some_and(|p| v < p) {
                return Err(Error::InvalidPerversity(format!(
                    "values must be nondecreasing, drop at codimension {c}"
                )));
            }
            prev = Some(v);
        }
        Ok(Perversity::Custom(values))
    }

    pub fn value(&self, c: usize) -> Result<i64> {
        if c < 2 {
            return Err(Error::CodimTooSmall(c));
        }
        let ci = c as i64;
        let middle = (ci - 2).div_euclid(2);
        Ok(match self {
            Perversity::Zero => 0,
            Perversity::Middle => middle,
            Perversity::UpperMiddle => (ci - 1).div_euclid(2),
            Perversity::Log => middle + 1,
            Perversity::K(k) => {
                if c <= 2 * k {
                    middle
                } else {
                    middle + 1
                }
            }
            Perversity::Top => ci - 2,
            Perversity::Custom(table) => {
                *table.get(&c).ok_or_else(|| Error::PerversityUndefined {
                    name: self.to_string(),
                    codim: c,
                })?
            }
        })
    }

    /// `(codim, value)` for each requested codimension, as echoed in reports.
    pub fn table(&self, codims: &[usize]) -> Result<Vec<(usize, i64)>> {
        codims.iter().map(|&c| Ok((c, self.value(c)?))).collect()
    }
}

impl fmt::Display for Perversity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Perversity::Zero => write!(f, "zero"),
            Perversity::Middle => write!(f, "middle"),
            Perversity::UpperMiddle => write!(f, "upper-middle"),
            Perversity::Log => write!(f, "log"),
            Perversity::K(k) => write!(f, "k={k}"),
            Perversity::Top => write!(f, "top"),
            Perversity::Custom(t) => {
                let parts: Vec<String> = t.iter().map(|(c, v)| format!("{c}:{v}")).collect();
                write!(f, "custom={}", parts.join(","))
            }
        }
    }
}

impl FromStr for Perversity {
    type Err = Error;

    /// `zero|middle|upper-middle|log|top|k=<int>|custom=<c1:v1,c2:v2,...>`
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::parse("perversity", msg);
        match s {
            "zero" => return Ok(Perversity::Zero),
            "middle" => return Ok(Perversity::Middle),
            "upper-middle" => return Ok(Perversity::UpperMiddle),
            "log" => return Ok(Perversity::Log),
            "top" => return Ok(Perversity::Top),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("k=") {
            let k: usize = k
                .parse()
                .map_err(|_| bad(format!("'{k}' is not a nonnegative integer")))?;
            return Ok(Perversity::K(k));
        }
        if let Some(body) = s.strip_prefix("custom=") {
            let mut table = BTreeMap::new();
            for pair in body.split(',').filter(|p| !p.is_empty()) {
                let (c, v) = pair
                    .split_once(':')
                    .ok_or_else(|| bad(format!("expected c:v, got '{pair}'")))?;
                let c: usize = c
                    .trim()
                    .parse()
                    .map_err(|_| bad(format!("bad codimension '{c}'")))?;
                let v: i64 = v
                    .trim()
                    .parse()
                    .map_err(|_| bad(format!("bad value '{v}'")))?;
                if table.insert(c, v).is_some() {
                    return Err(bad(format!("codimension {c} given twice")));
                }
            }
            return Perversity::custom(table);
        }
        Err(bad(format!("unknown perversity '{s}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_values() {
        assert_eq!(Perversity::Middle.value(4).unwrap(), 1);
        assert_eq!(Perversity::Log.value(2).unwrap(), 1);
        assert_eq!(Perversity::K(2).value(6).unwrap(), 3);
        assert_eq!(Perversity::K(2).value(4).unwrap(), 1);
        assert_eq!(Perversity::Top.value(5).unwrap(), 3);
        assert_eq!(Perversity::UpperMiddle.value(3).unwrap(), 1);
        assert_eq!(Perversity::Middle.value(3).unwrap(), 0);
        assert!(matches!(
            Perversity::Zero.value(1),
            Err(Error::CodimTooSmall(1))
        ));
    }

    #[test]
    fn even_codims_match_the_closed_forms() {
        // m(2c) = c - 1 and log(2c) = c
        for c in 1..10usize {
            assert_eq!(Perversity::Middle.value(2 * c).unwrap(), c as i64 - 1);
            assert_eq!(Perversity::Log.value(2 * c).unwrap(), c as i64);
        }
    }

    #[test]
    fn pointwise_ordering() {
        for c in 2..20 {
            let v = |p: &Perversity| p.value(c).unwrap();
            assert!(v(&Perversity::Zero) <= v(&Perversity::Middle));
            assert!(v(&Perversity::Middle) <= v(&Perversity::Log));
            assert!(v(&Perversity::Log) <= v(&Perversity::Top) + 1);
            for k in 0..6 {
                assert!(v(&Perversity::Middle) <= v(&Perversity::K(k)));
                assert!(v(&Perversity::K(k)) <= v(&Perversity::Log));
            }
        }
    }

    #[test]
    fn grammar_round_trips() {
        for text in ["zero", "middle", "log", "top", "k=3", "custom=2:0,3:1,4:1"] {
            let p: Perversity = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert!("custom=2:1,3:0".parse::<Perversity>().is_err());
        assert!("custom=2:2".parse::<Perversity>().is_err());
        assert!("sideways".parse::<Perversity>().is_err());
        let p: Perversity = "custom=2:0".parse().unwrap();
        assert!(matches!(
            p.value(3),
            Err(Error::PerversityUndefined { codim: 3, .. })
        ));
    }
}
