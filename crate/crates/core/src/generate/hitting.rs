//! Hitting set instances.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSetInstance {
    /// η; elements are `1..=universe`.
    pub universe: usize,
    pub sets: Vec<BTreeSet<usize>>,
    pub k: usize,
}

impl HittingSetInstance {
    /// Every set must be non-empty and every element must occur somewhere.
    pub fn new(
        universe: usize,
        sets: Vec<BTreeSet<usize>>,
        k: usize,
    ) -> Result<HittingSetInstance> {
        for (j, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::MalformedInstance(format!("set {} is empty", j + 1)));
            }
            if let Some(&x) = s.iter().find(|&&x| x == 0 || x > universe) {
                return Err(Error::MalformedInstance(format!(
                    "set {} has element {x} outside 1..={universe}",
                    j + 1
                )));
            }
        }
        if let Some(x) = (1..=universe).find(|x| sets.iter().all(|s| !s.contains(x))) {
            return Err(Error::MalformedInstance(format!(
                "element {x} occurs in no set"
            )));
        }
        Ok(HittingSetInstance { universe, sets, k })
    }

    /// μ
    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    /// `p hs η μ k`, then one line per set.
    pub fn to_text(&self) -> String {
        let mut out = format!("p hs {} {} {}\n", self.universe, self.sets.len(), self.k);
        for s in &self.sets {
            let items: Vec<String> = s.iter().map(usize::to_string).collect();
            out.push_str(&items.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses `p hs η μ k` followed by one line of elements per set. Lines
/// starting with `c` are comments.
pub fn parse_hs(text: &str) -> Result<HittingSetInstance> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut sets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix('p') {
            let nums: Option<Vec<usize>> = rest
                .split_whitespace()
                .skip(1)
                .map(|x| x.parse().ok())
                .collect();
            match (rest.split_whitespace().next(), nums.as_deref(), header) {
                (Some("hs"), Some(&[eta, mu, k]), None) => header = Some((eta, mu, k)),
                _ => {
                    return Err(Error::MalformedInstance(format!(
                        "line {}: bad or repeated header",
                        idx + 1
                    )))
                }
            }
            continue;
        }
        if header.is_none() {
            return Err(Error::MalformedInstance(format!(
                "line {}: set before header",
                idx + 1
            )));
        }
        sets.push(
            parse_set(line)
                .map_err(|e| Error::MalformedInstance(format!("line {}: {e}", idx + 1)))?,
        );
    }
    let Some((eta, mu, k)) = header else {
        return Err(Error::MalformedInstance("missing `p hs` header".into()));
    };
    if sets.len() != mu {
        return Err(Error::MalformedInstance(format!(
            "header declares {mu} sets, found {}",
            sets.len()
        )));
    }
    HittingSetInstance::new(eta, sets, k)
}

fn parse_set(text: &str) -> std::result::Result<BTreeSet<usize>, String> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| format!("bad element `{t}`")))
        .collect()
}

/// Parses an inline family such as `1;1 2;3`: sets separated by `;`,
/// elements by spaces or commas. The universe is the largest element.
pub fn parse_sets(text: &str, k: usize) -> Result<HittingSetInstance> {
    let sets = text
        .split(';')
        .map(|s| parse_set(s).map_err(Error::MalformedInstance))
        .collect::<Result<Vec<_>>>()?;
    let universe = sets.iter().flatten().copied().max().unwrap_or(0);
    HittingSetInstance::new(universe, sets, k)
}

/// Minimum hitting set size, by exhaustive search over at most 16 elements.
pub fn hs_brute(inst: &HittingSetInstance) -> Result<usize> {
    if inst.universe > 16 {
        return Err(Error::ResourceLimit(format!(
            "{} elements exceed the oracle bound of 16",
            inst.universe
        )));
    }
    let masks: Vec<u32> = inst
        .sets
        .iter()
        .map(|s| s.iter().map(|&x| 1u32 << (x - 1)).sum())
        .collect();
    let best = (0u32..1 << inst.universe)
        .filter(|h| masks.iter().all(|m| m & h != 0))
        .map(|h| h.count_ones() as usize)
        .min();
    Ok(best.expect("the whole universe hits every set"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_and_file_forms_agree() {
        let a = parse_sets("1;1 2;3", 2).unwrap();
        let b = parse_hs("c demo\np hs 3 3 2\n1\n1 2\n3\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_hs(&a.to_text()).unwrap(), a);
        assert_eq!(hs_brute(&a).unwrap(), 2);
    }

    #[test]
    fn empty_family_needs_nothing() {
        let inst = HittingSetInstance::new(0, vec![], 0).unwrap();
        assert_eq!(hs_brute(&inst).unwrap(), 0);
    }

    #[test]
    fn invalid_families() {
        assert!(matches!(
            parse_sets("1;;2", 1),
            Err(Error::MalformedInstance(_))
        ));
        assert!(matches!(
            HittingSetInstance::new(3, vec![[1].into()], 1),
            Err(Error::MalformedInstance(_))
        ));
        assert!(matches!(
            parse_hs("p hs 2 2 1\n1 2\n"),
            Err(Error::MalformedInstance(_))
        ));
    }
}
