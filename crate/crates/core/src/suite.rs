//! End-to-end check suite: one entry per published property, each
//! recomputed against an independent counting or enumeration oracle.
//!
//! The density engine is injected through [`SuiteConfig`] so that a
//! corrupted engine can be shown to fail the suite.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::approximations::{
    goldstine_inner, goldstine_outer, majority_escape_witness, modk_inner, o3_outer, o4_outer,
    pal_inner, suffix_ext_pair, verify_containment, Direction, DEFAULT_STATE_BUDGET,
};
use crate::automata::{builtin, mod_counter_dfa, Dfa};
use crate::census::{census_by_enumeration, Language, DEFAULT_ENUMERATION_BUDGET};
use crate::density::natural_density;
use crate::error::{Error, Result};
use crate::languages::DiagonalProgram;
use crate::languages::{goldstine_word_prefix, LanguageOracle};
use crate::monoid::nonprimitive_witness;
use crate::numbers::{
    big_pow, binomial, int, inverse_power, one, ratio, rational, render, zero, Rational,
};
use crate::random::{random_dfas, random_nonnull_dfas, random_null_dfas, DEFAULT_SEED};
use crate::word::{words_up_to, Alphabet, Letter, Word, WordsOfLength};

pub type DensityFn = Arc<dyn Fn(&Dfa) -> Result<Rational> + Send + Sync>;

/// Wall-clock cap for the diagonal criterion.
pub const DIAGONAL_TIME_LIMIT: Duration = Duration::from_secs(60);

#[derive(Clone)]
pub struct SuiteConfig {
    pub density: DensityFn,
    /// Run only criteria with this tag.
    pub only: Option<String>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            density: Arc::new(crate::density::density),
            only: None,
            seed: DEFAULT_SEED,
        }
    }
}

impl SuiteConfig {
    /// Engine whose every answer is off by `2^-20`.
    pub fn mutated() -> Self {
        SuiteConfig {
            density: Arc::new(|d| Ok(crate::density::density(d)? + inverse_power(2, 20))),
            ..Self::default()
        }
    }

    pub fn with_only(mut self, tag: Option<String>) -> Self {
        self.only = tag;
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub tag: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub passed: bool,
    pub results: Vec<CriterionResult>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One `PASS`/`FAIL` line per criterion followed by its details.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict} {:>2} {:<9} {}\n", r.id, r.tag, r.title));
            for d in &r.details {
                out.push_str(&format!("       {d}\n"));
            }
        }
        let failed = self.results.iter().filter(|r| !r.passed).count();
        out.push_str(&format!(
            "{} criteria, {failed} failed\n",
            self.results.len()
        ));
        out
    }
}

/// Accumulated sub-checks of one criterion.
struct Checks {
    ok: bool,
    lines: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks {
            ok: true,
            lines: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, line: impl Into<String>) {
        self.ok &= ok;
        let mark = if ok { "ok  " } else { "FAIL" };
        self.lines.push(format!("{mark} {}", line.into()));
    }

    fn note(&mut self, line: impl Into<String>) {
        self.lines.push(format!("     {}", line.into()));
    }
}

struct Ctx<'a> {
    config: &'a SuiteConfig,
}

impl Ctx<'_> {
    fn density(&self, d: &Dfa) -> Result<Rational> {
        (self.config.density)(d)
    }
}

type Body = fn(&Ctx, &mut Checks) -> Result<()>;

struct Criterion {
    id: usize,
    tag: &'static str,
    title: &'static str,
    body: Body,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        tag: "density",
        title: "exact densities of textbook machines",
        body: textbook,
    },
    Criterion {
        id: 2,
        tag: "modk",
        title: "mod-k counters inside the unbalanced words",
        body: modk,
    },
    Criterion {
        id: 3,
        tag: "dyck",
        title: "semi-Dyck census and null Cesaro prefix",
        body: dyck,
    },
    Criterion {
        id: 4,
        tag: "pal",
        title: "non-palindrome inner family",
        body: pal,
    },
    Criterion {
        id: 5,
        tag: "goldstine",
        title: "Goldstine inner family and fixed-point identity",
        body: goldstine,
    },
    Criterion {
        id: 6,
        tag: "o3o4",
        title: "outer families of O3 and O4",
        body: o3o4,
    },
    Criterion {
        id: 7,
        tag: "suffix",
        title: "suffix-extension families",
        body: suffix,
    },
    Criterion {
        id: 8,
        tag: "majority",
        title: "majority counts and escape witnesses",
        body: majority,
    },
    Criterion {
        id: 9,
        tag: "prim",
        title: "primitive words and non-primitive witnesses",
        body: prim,
    },
    Criterion {
        id: 10,
        tag: "algebra",
        title: "density algebra on random automata",
        body: algebra,
    },
    Criterion {
        id: 11,
        tag: "diagonal",
        title: "diagonal language accepts sparse words",
        body: diagonal,
    },
];

pub fn tags() -> Vec<&'static str> {
    CRITERIA.iter().map(|c| c.tag).collect()
}

/// Runs the selected criteria. An unknown `only` tag is an error.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if let Some(tag) = &config.only {
        if !CRITERIA.iter().any(|c| c.tag == tag) {
            return Err(Error::InvalidParameter(format!(
                "unknown criterion tag {tag:?}; known: {}",
                tags().join(", ")
            )));
        }
    }
    let ctx = Ctx { config };
    let results: Vec<CriterionResult> = CRITERIA
        .iter()
        .filter(|c| config.only.as_deref().is_none_or(|t| t == c.tag))
        .map(|c| {
            let mut checks = Checks::new();
            if let Err(e) = (c.body)(&ctx, &mut checks) {
                checks.check(false, format!("error: {e}"));
            }
            CriterionResult {
                id: c.id,
                tag: c.tag,
                title: c.title,
                passed: checks.ok,
                details: checks.lines,
            }
        })
        .collect();
    Ok(SuiteReport {
        passed: results.iter().all(|r| r.passed),
        results,
    })
}

fn alphabet(s: &str) -> Alphabet {
    Alphabet::parse(s).expect("built-in alphabet is valid")
}

fn eq(c: &mut Checks, what: &str, got: &Rational, want: &Rational) {
    c.check(
        got == want,
        format!("{what} = {} (expected {})", render(got), render(want)),
    );
}

fn textbook(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    for (symbols, want) in [("ab", rational(1, 2)), ("abc", rational(1, 3))] {
        let d = ctx.density(&builtin("starts:a", &alphabet(symbols))?)?;
        eq(c, &format!("d(aA*), |A|={}", symbols.len()), &d, &want);
    }
    let evens = builtin("evens", &alphabet("ab"))?;
    eq(c, "d((AA)*)", &ctx.density(&evens)?, &rational(1, 2));
    let report = natural_density(&evens)?;
    c.check(
        report.natural_density.is_none(),
        "natural density of (AA)* is undefined",
    );
    let points: Vec<String> = report
        .accumulation_points
        .iter()
        .map(|(r, v)| format!("{r}:{}", render(v)))
        .collect();
    c.check(
        report.accumulation_points == vec![(0, one()), (1, zero())],
        format!("accumulation points [{}]", points.join(",")),
    );
    Ok(())
}

fn modk(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let unbalanced =
        LanguageOracle::complement(LanguageOracle::count_eq(&alphabet("ab"), 'a', 'b')?);
    for k in [3usize, 5, 7, 9] {
        let a = modk_inner(k)?;
        eq(
            c,
            &format!("d(A_{k})"),
            &ctx.density(&a.dfa)?,
            &rational(k as i64 - 1, k as i64),
        );
        let v = verify_containment(&a.dfa, &unbalanced, Direction::Inner, 12)?;
        c.check(
            v.is_verified(),
            format!(
                "A_{k} inside complement(L(a,b)) to length 12: {}",
                v.render(&alphabet("ab"))
            ),
        );
    }
    Ok(())
}

fn dyck(_ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let census =
        census_by_enumeration(&LanguageOracle::semi_dyck(), 20, DEFAULT_ENUMERATION_BUDGET)?;
    let counts = census.counts();
    let catalan_ok = (0..=10).all(|n| counts[2 * n] == binomial(2 * n, n) / (n + 1));
    c.check(
        catalan_ok,
        "even-length counts are Catalan numbers for n <= 10",
    );
    let odd_ok = (0..10).all(|n| counts[2 * n + 1].is_zero());
    c.check(odd_ok, "odd-length counts vanish");
    let (_, cesaro) = census.ratio_and_cesaro();
    let mean = cesaro[20].clone().expect("defined for n >= 1");
    c.check(
        mean <= rational(1, 10),
        format!("Cesaro mean at N=20 is {} <= 1/10", render(&mean)),
    );
    Ok(())
}

fn pal(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let ab = alphabet("ab");
    let non_pal = LanguageOracle::complement(LanguageOracle::palindromes(&ab));
    for k in 1..=6 {
        let a = pal_inner(&ab, k, DEFAULT_STATE_BUDGET)?;
        eq(
            c,
            &format!("d(pal_inner({k}))"),
            &ctx.density(&a.dfa)?,
            &(one() - inverse_power(2, k)),
        );
        let v = verify_containment(&a.dfa, &non_pal, Direction::Inner, 14)?;
        c.check(
            v.is_verified(),
            format!(
                "pal_inner({k}) inside non-palindromes to length 14: {}",
                v.render(&ab)
            ),
        );
    }
    Ok(())
}

fn goldstine(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let ab = alphabet("ab");
    let g = LanguageOracle::goldstine();
    for k in 1..=10 {
        let a = goldstine_inner(k)?;
        let want = rational(1, 2) - inverse_power(2, k + 1);
        eq(
            c,
            &format!("d(goldstine_inner({k}))"),
            &ctx.density(&a.dfa)?,
            &want,
        );
        let v = verify_containment(&a.dfa, &g, Direction::Inner, 16)?;
        c.check(
            v.is_verified(),
            format!(
                "goldstine_inner({k}) inside G to length 16: {}",
                v.render(&ab)
            ),
        );
    }
    let outer = goldstine_outer()?;
    let v = verify_containment(&outer.dfa, &g, Direction::Outer, 16)?;
    c.check(
        v.is_verified(),
        format!("G inside A*b to length 16: {}", v.render(&ab)),
    );

    // G = Copref(a b a^2 b a^3 b ...) ∩ A*b, by direct comparison
    let fixed = goldstine_word_prefix(12);
    let mismatch = words_up_to(2, 12).find(|w| {
        let w = w.letters();
        let copref = !fixed.starts_with(w);
        let ends_b = w.last() == Some(&1);
        g.member(w).unwrap_or(false) != (copref && ends_b)
    });
    c.check(
        mismatch.is_none(),
        match &mismatch {
            None => "G agrees with Copref ∩ A*b to length 12".to_string(),
            Some(w) => format!(
                "G disagrees with Copref ∩ A*b at {}",
                ab.render(w.letters())
            ),
        },
    );
    Ok(())
}

fn o3o4(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    for k in [3usize, 5, 9] {
        let bound = rational(2, k as i64);
        for (name, a) in [("o3", o3_outer(k)?), ("o4", o4_outer(k)?)] {
            let d = ctx.density(&a.dfa)?;
            c.check(
                d <= bound,
                format!("d({name}_outer({k})) = {} <= 2/{k}", render(&d)),
            );
        }
    }
    let o3 = LanguageOracle::o3();
    let census = census_by_enumeration(&o3, 12, DEFAULT_ENUMERATION_BUDGET)?;
    let agree = (0..=12)
        .map(|n| o3.closed_count(n))
        .collect::<Result<Vec<_>>>()?
        == census.counts();
    c.check(
        agree,
        "O3 multinomial counter matches enumeration to length 12",
    );
    let count18 = o3.closed_count(18)?;
    let r = ratio(&count18, &big_pow(3, 18));
    c.check(
        r < rational(1, 10),
        format!("O3 ratio at n=18 is {count18}/3^18 = {} < 1/10", render(&r)),
    );
    Ok(())
}

fn suffix(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let a_star = LanguageOracle::regular("a*", builtin("star:a", &alphabet("a"))?);
    for n in 1..=10 {
        let (inner, _) = suffix_ext_pair(&a_star, 'c', n, DEFAULT_STATE_BUDGET)?;
        eq(
            c,
            &format!("d(inner_{n}) for a*c(a|c)*"),
            &ctx.density(&inner.dfa)?,
            &(one() - inverse_power(2, n)),
        );
    }

    let kemp = LanguageOracle::kemp_base();
    let mut previous: Option<(Rational, Rational)> = None;
    let (mut monotone, mut exact) = (true, true);
    let mut gap12 = None;
    for n in 1..=12usize {
        let (inner, outer) = suffix_ext_pair(&kemp, 'c', n, DEFAULT_STATE_BUDGET)?;
        let (di, dout) = (ctx.density(&inner.dfa)?, ctx.density(&outer.dfa)?);
        if let Some((pi, po)) = &previous {
            monotone &= *pi <= di && dout <= *po;
        }
        // Σ_{m≥n} 2^m 3^{-(m+1)}: geometric with first term 2^n/3^{n+1}, ratio 2/3
        let first = ratio(&big_pow(2, n), &big_pow(3, n + 1));
        let want = first * int(3);
        let gap = &dout - &di;
        if gap != want {
            exact = false;
            c.note(format!(
                "n={n}: gap {} expected {}",
                render(&gap),
                render(&want)
            ));
        }
        if n == 12 {
            gap12 = Some(gap);
        }
        previous = Some((di, dout));
    }
    c.check(
        monotone,
        "Kemp inner densities increase and outer densities decrease, n = 1..12",
    );
    c.check(exact, "Kemp gap(n) equals the tail mass for n = 1..12");
    let gap12 = gap12.expect("loop reaches 12");
    c.check(
        gap12 < rational(1, 100),
        format!("gap(12) = {} < 1/100", render(&gap12)),
    );
    Ok(())
}

fn majority(_ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let m1 = LanguageOracle::majority(1)?;
    let census = census_by_enumeration(&m1, 16, DEFAULT_ENUMERATION_BUDGET)?;
    let formula = |n: usize| {
        let central = if n.is_multiple_of(2) {
            binomial(n, n / 2)
        } else {
            Zero::zero()
        };
        (big_pow(2, n) - central) / 2u32
    };
    let brute_ok = (0..=16).all(|n| census.counts()[n] == formula(n));
    c.check(
        brute_ok,
        "|M_1 ∩ A^n| matches the binomial formula for n <= 16",
    );
    let counter_ok = (0..=16)
        .map(|n| m1.closed_count(n))
        .collect::<Result<Vec<_>>>()?
        == census.counts();
    c.check(counter_ok, "M_1 counter matches enumeration for n <= 16");

    let r20 = ratio(&m1.closed_count(20)?, &big_pow(2, 20));
    let want = (one() - ratio(&binomial(20, 10), &big_pow(2, 20))) / int(2);
    eq(c, "M_1 ratio at n=20", &r20, &want);
    c.check(
        rational(2, 5) < r20 && r20 < rational(1, 2),
        format!("M_1 ratio at n=20 lies in (2/5, 1/2): {}", render(&r20)),
    );

    // |w|_a > 2|w|_b at n = 24 means fewer than 8 letters b
    let tail: crate::numbers::BigCount = (0..8).map(|j| binomial(24, j)).sum();
    let r24 = ratio(&tail, &big_pow(2, 24));
    let counted = ratio(
        &LanguageOracle::majority(2)?.closed_count(24)?,
        &big_pow(2, 24),
    );
    eq(
        c,
        "M_2 counter at n=24 against the binomial tail",
        &counted,
        &r24,
    );
    c.check(
        r24 <= rational(1, 50),
        format!("M_2 ratio at n=24 is {} <= 1/50", render(&r24)),
    );

    let ab = alphabet("ab");
    let seed = _ctx.config.seed;
    let mut escaped = 0;
    for x in random_nonnull_dfas(seed, &ab, 10, 6)? {
        match majority_escape_witness(&x, 1) {
            Ok(v) => {
                let (na, nb) = (v.count(0), v.count(1));
                if x.accepts(v.letters()) && na <= nb {
                    escaped += 1;
                } else {
                    c.note(format!(
                        "witness {} does not escape",
                        ab.render(v.letters())
                    ));
                }
            }
            Err(e) => c.note(format!("escape witness failed: {e}")),
        }
    }
    c.check(
        escaped == 10,
        format!("escape witnesses verified on {escaped}/10 non-null automata"),
    );
    let mut refused = 0;
    for x in random_null_dfas(seed, &ab, 5, 6)? {
        if majority_escape_witness(&x, 1) == Err(Error::NullLanguage) {
            refused += 1;
        }
    }
    c.check(refused == 5, format!("null automata refused: {refused}/5"));
    Ok(())
}

/// `w` is a proper power iff it equals a rotation of itself by a proper
/// divisor of its length.
fn is_power(w: &[Letter]) -> bool {
    let n = w.len();
    (1..n).any(|p| n.is_multiple_of(p) && w.iter().zip(w.iter().skip(p)).all(|(x, y)| x == y))
}

fn prim(_ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let ab = alphabet("ab");
    let q = LanguageOracle::primitive(&ab);
    let census = census_by_enumeration(&q, 16, DEFAULT_ENUMERATION_BUDGET)?;
    let counter = (0..=16)
        .map(|n| q.closed_count(n))
        .collect::<Result<Vec<_>>>()?;
    c.check(
        counter == census.counts(),
        "Möbius counter matches enumeration for n <= 16",
    );

    // 1 - ratio <= 2√n·2^{1-n/2}, squared: (1 - ratio)^2 · 2^n <= 16n
    let ratios = census.ratios();
    let bound_ok = (4..=16).all(|n| {
        let miss = one() - &ratios[n];
        &miss * &miss * ratio(&big_pow(2, n), &One::one()) <= int(16 * n as i64)
    });
    c.check(bound_ok, "primitive ratio bound holds for 4 <= n <= 16");

    let mut machines = random_nonnull_dfas(_ctx.config.seed, &ab, 10, 6)?;
    machines.push(mod_counter_dfa(&ab, 3, 'a', 'b', &[])?);
    let mut verified = 0;
    for x in &machines {
        match nonprimitive_witness(x) {
            Ok((w, n)) => {
                let good = !w.is_empty()
                    && (1..=3).all(|j| {
                        let p = w.power(j * n + 1);
                        x.accepts(p.letters()) && is_power(p.letters())
                    });
                if good {
                    verified += 1;
                } else {
                    c.note(format!("witness ({}, {n}) fails", ab.render(w.letters())));
                }
            }
            Err(e) => c.note(format!("witness extraction failed: {e}")),
        }
    }
    c.check(
        verified == machines.len(),
        format!(
            "non-primitive witnesses verified on {verified}/{} automata (10 random and A_3)",
            machines.len()
        ),
    );

    // Q^2 = A^+ minus the unary words x^n with n != 2
    let bad = (1..=10).flat_map(|n| WordsOfLength::new(2, n)).find(|w| {
        let w = w.letters();
        let split = (1..w.len()).any(|i| !is_power(&w[..i]) && !is_power(&w[i..]));
        let unary = w.iter().all(|&x| x == w[0]);
        split != (!unary || w.len() == 2)
    });
    c.check(
        bad.is_none(),
        match &bad {
            None => "every word of length 1..10 is in Q^2 unless unary of length != 2".to_string(),
            Some(w) => format!("factorization identity fails at {}", ab.render(w.letters())),
        },
    );
    Ok(())
}

fn algebra(ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let machines = random_dfas(ctx.config.seed, &alphabet("ab"), 200, 8);
    let failures: Vec<String> = (0..machines.len())
        .into_par_iter()
        .map(|i| -> Result<Vec<String>> {
            let x = &machines[i];
            let y = &machines[(i + 1) % machines.len()];
            let mut bad = Vec::new();
            let dx = ctx.density(x)?;
            let dy = ctx.density(y)?;
            if &dx + ctx.density(&x.complement())? != one() {
                bad.push(format!("#{i}: complement law"));
            }
            let meet = x.intersection(y)?;
            let join = x.union(y)?;
            let (dm, dj) = (ctx.density(&meet)?, ctx.density(&join)?);
            if !(dm <= dx && dx <= dj && dm <= dy && dy <= dj) {
                bad.push(format!("#{i}: monotonicity"));
            }
            if x.is_subset_of(y)? && dx > dy {
                bad.push(format!("#{i}: monotonicity under inclusion"));
            }
            if &dm + ctx.density(&x.difference(y)?)? != dx {
                bad.push(format!("#{i}: additivity"));
            }
            if dx.is_zero() != x.shortest_forbidden_word()?.is_some() {
                bad.push(format!("#{i}: null iff not dense"));
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let count = |tag: &str| failures.iter().filter(|f| f.ends_with(tag)).count();
    for law in [
        "complement law",
        "monotonicity",
        "monotonicity under inclusion",
        "additivity",
        "null iff not dense",
    ] {
        let n = count(law);
        c.check(n == 0, format!("{law}: {} of 200 pairs violate", n));
    }
    Ok(())
}

fn diagonal(_ctx: &Ctx, c: &mut Checks) -> Result<()> {
    let start = Instant::now();
    let ab = alphabet("ab");
    let program = DiagonalProgram::new(ab.clone())?;
    let mut accepted: Vec<Word> = Vec::new();
    for n in 0..=5 {
        let mut here = 0;
        for w in WordsOfLength::new(2, n) {
            if program.accepts(w.letters())? {
                here += 1;
                accepted.push(w);
            }
        }
        c.check(here <= 1, format!("length {n}: {here} accepted"));
    }
    let increasing = accepted.windows(2).all(|p| p[0].len() < p[1].len());
    let listed: Vec<String> = accepted.iter().map(|w| ab.render(w.letters())).collect();
    c.check(
        increasing,
        format!("accepted lengths strictly increase: [{}]", listed.join(",")),
    );
    let elapsed = start.elapsed();
    c.check(
        elapsed <= DIAGONAL_TIME_LIMIT,
        format!(
            "finished in {:.1}s (limit {}s)",
            elapsed.as_secs_f64(),
            DIAGONAL_TIME_LIMIT.as_secs()
        ),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_tag_is_rejected() {
        let config = SuiteConfig::default().with_only(Some("nope".into()));
        assert!(matches!(
            run_suite(&config),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn only_filter_selects_one_criterion() {
        let report = run_suite(&SuiteConfig::default().with_only(Some("density".into()))).unwrap();
        assert_eq!(report.results.len(), 1);
        assert!(report.passed, "{}", report.render_table());
    }

    #[test]
    fn mutated_engine_fails_textbook_densities() {
        let report = run_suite(&SuiteConfig::mutated().with_only(Some("density".into()))).unwrap();
        assert!(!report.passed);
    }

    #[test]
    fn power_detection() {
        assert!(is_power(&[0, 0]));
        assert!(is_power(&[0, 1, 0, 1]));
        assert!(!is_power(&[0, 1, 0]));
        assert!(!is_power(&[0]));
        assert!(!is_power(&[]));
    }
}
