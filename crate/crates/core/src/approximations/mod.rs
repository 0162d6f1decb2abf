//! Regular inner and outer approximations of non-regular languages, with
//! exact densities, bounded containment checks and gap reports.

mod generators;

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub use generators::{
    goldstine_inner, goldstine_outer, infix_ext_pair, modk_inner, modk_outer, o3_outer, o4_outer,
    pal_inner, prefix_ext_pair, suffix_ext_pair, suffix_gap_closed_form, DEFAULT_STATE_BUDGET,
};

use crate::automata::Dfa;
use crate::census::{census_by_enumeration, Language, LengthCensus, DEFAULT_ENUMERATION_BUDGET};
use crate::density::density;
use crate::error::{Error, Result};
use crate::languages::LanguageOracle;
use crate::monoid::transition_monoid;
use crate::numbers::{one, render, zero, Rational};
use crate::word::{checked_count, count_letter, decode_word, Alphabet, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Contained in the target.
    Inner,
    /// Contains the target.
    Outer,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Inner => "inner",
            Direction::Outer => "outer",
        })
    }
}

/// One member of an approximation family.
#[derive(Clone, Debug)]
pub struct Approximant {
    pub dfa: Dfa,
    pub direction: Direction,
    /// Density predicted by closed form, when one is known.
    pub claimed_density: Option<Rational>,
}

impl Approximant {
    pub fn new(dfa: Dfa, direction: Direction, claimed_density: Option<Rational>) -> Self {
        Approximant {
            dfa,
            direction,
            claimed_density,
        }
    }
}

type Generator = Arc<dyn Fn(usize) -> Result<Option<Approximant>> + Send + Sync>;
type ApproximantPair = fn(&dyn Language, char, usize, usize) -> Result<(Approximant, Approximant)>;

/// A target language with parameterized inner and outer approximants.
#[derive(Clone)]
pub struct ApproxFamily {
    name: String,
    target: LanguageOracle,
    inner: Generator,
    outer: Generator,
}

impl fmt::Debug for ApproxFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ApproxFamily")
            .field("name", &self.name)
            .field("target", &self.target.name())
            .finish_non_exhaustive()
    }
}

fn none() -> Generator {
    Arc::new(|_| Ok(None))
}

fn some(f: impl Fn(usize) -> Result<Approximant> + Send + Sync + 'static) -> Generator {
    Arc::new(move |k| f(k).map(Some))
}

impl ApproxFamily {
    /// `L(a, b)` over `{a, b}`, from outside by complements of counters.
    pub fn modk() -> Self {
        let ab = Alphabet::parse("ab").expect("built-in alphabet is valid");
        ApproxFamily {
            name: "modk".into(),
            target: LanguageOracle::count_eq(&ab, 'a', 'b').expect("valid letters"),
            inner: none(),
            outer: some(modk_outer),
        }
    }

    pub fn o3() -> Self {
        ApproxFamily {
            name: "o3".into(),
            target: LanguageOracle::o3(),
            inner: none(),
            outer: some(o3_outer),
        }
    }

    pub fn o4() -> Self {
        ApproxFamily {
            name: "o4".into(),
            target: LanguageOracle::o4(),
            inner: none(),
            outer: some(o4_outer),
        }
    }

    /// Non-palindromes, from inside.
    pub fn pal(alphabet: &Alphabet) -> Self {
        let a = alphabet.clone();
        ApproxFamily {
            name: "pal".into(),
            target: LanguageOracle::complement(LanguageOracle::palindromes(alphabet)),
            inner: some(move |k| pal_inner(&a, k, DEFAULT_STATE_BUDGET)),
            outer: none(),
        }
    }

    pub fn goldstine() -> Self {
        ApproxFamily {
            name: "goldstine".into(),
            target: LanguageOracle::goldstine(),
            inner: some(goldstine_inner),
            outer: some(|_| goldstine_outer()),
        }
    }

    fn extension(
        tag: &str,
        base: LanguageOracle,
        c: char,
        target: LanguageOracle,
        pair: ApproximantPair,
    ) -> Self {
        let (b1, b2) = (base.clone(), base);
        ApproxFamily {
            name: format!("{tag}:{}:{c}", b1.name()),
            target,
            inner: some(move |n| pair(&b1, c, n, DEFAULT_STATE_BUDGET).map(|p| p.0)),
            outer: some(move |n| pair(&b2, c, n, DEFAULT_STATE_BUDGET).map(|p| p.1)),
        }
    }

    pub fn suffix_ext(base: LanguageOracle, c: char) -> Result<Self> {
        let target = LanguageOracle::suffix_extension(base.clone(), c)?;
        Ok(Self::extension(
            "suffix-ext",
            base,
            c,
            target,
            suffix_ext_pair,
        ))
    }

    pub fn prefix_ext(base: LanguageOracle, c: char) -> Result<Self> {
        let target = LanguageOracle::prefix_extension(base.clone(), c)?;
        Ok(Self::extension(
            "prefix-ext",
            base,
            c,
            target,
            prefix_ext_pair,
        ))
    }

    pub fn infix_ext(base: LanguageOracle, c: char) -> Result<Self> {
        let target = LanguageOracle::infix_extension(base.clone(), c)?;
        Ok(Self::extension(
            "infix-ext",
            base,
            c,
            target,
            infix_ext_pair,
        ))
    }

    /// `modk`, `o3`, `o4`, `pal`, `goldstine`, or
    /// `suffix-ext|prefix-ext|infix-ext:<base oracle>:<c>`.
    pub fn parse(source: &str, alphabet: &Alphabet) -> Result<Self> {
        match source {
            "modk" => return Ok(Self::modk()),
            "o3" => return Ok(Self::o3()),
            "o4" => return Ok(Self::o4()),
            "pal" => return Ok(Self::pal(alphabet)),
            "goldstine" => return Ok(Self::goldstine()),
            _ => {}
        }
        let (tag, rest) = source
            .split_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {source:?}")))?;
        let (base, c) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::InvalidParameter(format!("{tag} expects <base>:<c>")))?;
        let mut chars = c.chars();
        let c = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "bad extension letter {c:?}"
                )))
            }
        };
        let base = LanguageOracle::parse(base, alphabet)?;
        match tag {
            "suffix-ext" => Self::suffix_ext(base, c),
            "prefix-ext" => Self::prefix_ext(base, c),
            "infix-ext" => Self::infix_ext(base, c),
            _ => Err(Error::InvalidParameter(format!(
                "unknown family {source:?}"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn target(&self) -> &LanguageOracle {
        &self.target
    }

    pub fn inner(&self, k: usize) -> Result<Option<Approximant>> {
        (self.inner)(k)
    }

    pub fn outer(&self, k: usize) -> Result<Option<Approximant>> {
        (self.outer)(k)
    }
}

/// Outcome of a bounded containment check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Verified,
    /// Shortlex-least word violating the claimed direction.
    Counterexample(Direction, Word),
}

impl Containment {
    pub fn is_verified(&self) -> bool {
        matches!(self, Containment::Verified)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        match self {
            Containment::Verified => "ok".into(),
            Containment::Counterexample(_, w) => {
                let s = alphabet.render(w.letters());
                if s.is_empty() {
                    "counterexample:ε".into()
                } else {
                    format!("counterexample:{s}")
                }
            }
        }
    }
}

/// Checks `L(x) ⊆ target` (inner) or `target ⊆ L(x)` (outer) on every word
/// of length at most `max_len`.
pub fn verify_containment(
    x: &Dfa,
    target: &(impl Language + ?Sized),
    direction: Direction,
    max_len: usize,
) -> Result<Containment> {
    verify_containment_with_budget(x, target, direction, max_len, DEFAULT_ENUMERATION_BUDGET)
}

pub fn verify_containment_with_budget(
    x: &Dfa,
    target: &(impl Language + ?Sized),
    direction: Direction,
    max_len: usize,
    budget: u64,
) -> Result<Containment> {
    x.alphabet().ensure_same(target.alphabet())?;
    let k = x.alphabet().len();
    let total = (0..=max_len)
        .map(|n| checked_count(k, n).unwrap_or(u64::MAX))
        .fold(0u64, u64::saturating_add);
    if total > budget {
        return Err(Error::budget(
            "containment words",
            total as u128,
            budget as u128,
        ));
    }
    for n in 0..=max_len {
        let count = checked_count(k, n).expect("bounded above");
        let bad = (0..count)
            .into_par_iter()
            .map_init(
                || vec![0 as Letter; n],
                |buf, i| -> Result<Option<u64>> {
                    decode_word(k, i, buf);
                    let in_x = x.accepts(buf);
                    let violated = match direction {
                        Direction::Inner => in_x && !target.member(buf)?,
                        Direction::Outer => !in_x && target.member(buf)?,
                    };
                    Ok(violated.then_some(i))
                },
            )
            .filter_map(|r| r.transpose())
            .find_first(|_| true);
        if let Some(found) = bad {
            let mut buf = vec![0; n];
            decode_word(k, found?, &mut buf);
            return Ok(Containment::Counterexample(direction, Word(buf)));
        }
    }
    Ok(Containment::Verified)
}

/// One row of a gap sweep.
#[derive(Clone, Debug)]
pub struct GapRow {
    pub k: usize,
    pub inner: Rational,
    pub outer: Rational,
    pub gap: Rational,
    pub inner_claimed: Option<Rational>,
    pub outer_claimed: Option<Rational>,
    pub containment: Containment,
}

/// Inner/outer densities per parameter, with containment verdicts.
#[derive(Clone, Debug)]
pub struct GapReport {
    pub family: String,
    pub alphabet: Alphabet,
    pub max_len: usize,
    pub rows: Vec<GapRow>,
    /// Cesàro prefix of the target up to `max_len`, when countable.
    pub target_census: Option<LengthCensus>,
}

impl GapReport {
    /// CSV with header `k,inner,outer,gap,containment`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,inner,outer,gap,containment\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.k,
                render(&r.inner),
                render(&r.outer),
                render(&r.gap),
                r.containment.render(&self.alphabet)
            ));
        }
        out
    }
}

fn gap_row(fam: &ApproxFamily, k: usize, max_len: usize) -> Result<GapRow> {
    let target = fam.target();
    let mut containment = Containment::Verified;
    let mut measure =
        |a: Option<Approximant>, default: Rational| -> Result<(Rational, Option<Rational>)> {
            match a {
                None => Ok((default, None)),
                Some(a) => {
                    if containment.is_verified() {
                        containment = verify_containment(&a.dfa, target, a.direction, max_len)?;
                    }
                    Ok((density(&a.dfa)?, a.claimed_density))
                }
            }
        };
    let (inner, inner_claimed) = measure(fam.inner(k)?, zero())?;
    let (outer, outer_claimed) = measure(fam.outer(k)?, one())?;
    Ok(GapRow {
        k,
        gap: &outer - &inner,
        inner,
        outer,
        inner_claimed,
        outer_claimed,
        containment,
    })
}

/// Exact densities and bounded containment for each parameter in `ks`.
/// Missing inner approximants count as `∅`, missing outer ones as `A*`.
pub fn gap_report(fam: &ApproxFamily, ks: &[usize], max_len: usize) -> Result<GapReport> {
    let rows = ks
        .par_iter()
        .map(|&k| gap_row(fam, k, max_len))
        .collect::<Result<Vec<_>>>()?;
    let target = fam.target();
    let target_census = if target.has_counter() {
        let counts = (0..=max_len)
            .map(|n| target.closed_count(n))
            .collect::<Result<Vec<_>>>()?;
        Some(LengthCensus::new(target.alphabet().len(), counts)?)
    } else {
        census_by_enumeration(target, max_len, DEFAULT_ENUMERATION_BUDGET).ok()
    };
    Ok(GapReport {
        family: fam.name().to_string(),
        alphabet: target.alphabet().clone(),
        max_len,
        rows,
        target_census,
    })
}

/// A member `v` of `L(x)` with `|v|_a ≤ m·|v|_b`, so `L(x) ⊄ M_m`.
///
/// With `c` the largest shortest-representative length in the syntactic
/// monoid, `v = x' b^{2c} y'` for representatives `x'`, `y'` of length at
/// most `c`, so `|v| ≤ 4c`.
pub fn majority_escape_witness(x: &Dfa, m: usize) -> Result<Word> {
    let ab = Alphabet::parse("ab").expect("built-in alphabet is valid");
    x.alphabet().ensure_same(&ab)?;
    if m == 0 {
        return Err(Error::InvalidParameter("majority needs m ≥ 1".into()));
    }
    if density(x)?.is_zero() {
        return Err(Error::NullLanguage);
    }
    let (monoid, _) = transition_monoid(x)?;
    let dfa = monoid.dfa();
    let c = monoid.max_witness_length();
    let b: Letter = 1;
    let mut prefixes: Vec<&Word> = (0..monoid.len()).map(|e| monoid.witness(e)).collect();
    prefixes.sort();
    for prefix in prefixes {
        let mut q = dfa.run(prefix.letters());
        for _ in 0..2 * c {
            q = dfa.step(q, b);
        }
        let probe = dfa.with_initial(q);
        if let Some(suffix) = probe.shortlex_least() {
            let mut v = prefix.0.clone();
            v.extend(std::iter::repeat_n(b, 2 * c));
            v.extend(suffix.letters());
            let v = Word(v);
            let (na, nb) = (count_letter(v.letters(), 0), count_letter(v.letters(), 1));
            if !x.accepts(v.letters()) || na > m * nb || v.len() > 4 * c {
                return Err(Error::Internal("escape witness failed verification".into()));
            }
            return Ok(v);
        }
    }
    Err(Error::Internal(
        "dense language forbids a power of b".into(),
    ))
}
