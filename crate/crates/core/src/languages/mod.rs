//! Membership oracles for the concrete non-regular languages under study,
//! with closed-form length counts where one is known.

pub mod counting;
mod diagonal;
mod morphism;
pub mod predicates;

use std::fmt;
use std::sync::{Arc, Mutex};

pub use diagonal::{
    pinned_automaton, pinned_automaton_with, DiagonalProgram, DiagonalWitness,
    DEFAULT_MAX_AUTOMATA, DEFAULT_MAX_WORD_LENGTH,
};
pub use morphism::{coprefix_prefixes, Morphism};

use crate::automata::{builtin, Dfa};
use crate::census::Language;
use crate::error::{Error, Result};
use crate::numbers::{big_pow, BigCount};
use crate::word::{Alphabet, Letter};

/// The infinite word `a b a² b a³ b ⋯`.
pub fn goldstine_word_prefix(n: usize) -> Vec<Letter> {
    let mut w = Vec::with_capacity(n);
    let mut block = 1;
    while w.len() < n {
        w.extend(std::iter::repeat_n(0, block));
        w.push(1);
        block += 1;
    }
    w.truncate(n);
    w
}

/// Prefix cache of a morphic fixed point, grown on demand.
#[derive(Debug)]
struct FixedPoint {
    morphism: Morphism,
    seed: Letter,
    prefix: Mutex<Vec<Letter>>,
}

impl FixedPoint {
    fn is_prefix(&self, w: &[Letter]) -> bool {
        let mut prefix = self.prefix.lock().expect("prefix cache poisoned");
        while prefix.len() < w.len() {
            *prefix = self.morphism.apply(&prefix).0;
        }
        prefix.starts_with(w)
    }
}

#[derive(Clone, Debug)]
enum Kind {
    SemiDyck,
    CountEq(Letter, Letter),
    Palindromes,
    O3,
    O4,
    Goldstine,
    Kemp,
    KempS1,
    KempS2,
    KempBase,
    Majority(usize),
    Primitive,
    Coprefix(Arc<FixedPoint>),
    SuffixExtension(Box<LanguageOracle>, Letter),
    PrefixExtension(Box<LanguageOracle>, Letter),
    InfixExtension(Box<LanguageOracle>, Letter),
    Diagonal(Arc<DiagonalProgram>),
    Regular(Dfa),
    Complement(Box<LanguageOracle>),
}

/// A named language with a total membership test.
#[derive(Clone, Debug)]
pub struct LanguageOracle {
    name: String,
    alphabet: Alphabet,
    kind: Kind,
}

impl fmt::Display for LanguageOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.name, self.alphabet)
    }
}

fn fixed(symbols: &str) -> Alphabet {
    Alphabet::parse(symbols).expect("built-in alphabet is valid")
}

impl LanguageOracle {
    fn build(name: impl Into<String>, alphabet: Alphabet, kind: Kind) -> Self {
        LanguageOracle {
            name: name.into(),
            alphabet,
            kind,
        }
    }

    /// Semi-Dyck words over `{a, b}`, `a` opening.
    pub fn semi_dyck() -> Self {
        Self::build("dyck", fixed("ab"), Kind::SemiDyck)
    }

    /// `L_A(a, b) = {w : |w|_a = |w|_b}`.
    pub fn count_eq(alphabet: &Alphabet, a: char, b: char) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidParameter(
                "counted letters must differ".into(),
            ));
        }
        let kind = Kind::CountEq(alphabet.letter(a)?, alphabet.letter(b)?);
        Ok(Self::build(
            format!("counteq:{a},{b}"),
            alphabet.clone(),
            kind,
        ))
    }

    pub fn palindromes(alphabet: &Alphabet) -> Self {
        Self::build("pal", alphabet.clone(), Kind::Palindromes)
    }

    /// `|w|_a = |w|_b` or `|w|_a = |w|_c` over `{a, b, c}`.
    pub fn o3() -> Self {
        Self::build("o3", fixed("abc"), Kind::O3)
    }

    /// `|w|_x = |w|_X` or `|w|_y = |w|_Y` over `{x, X, y, Y}`.
    pub fn o4() -> Self {
        Self::build("o4", fixed("xXyY"), Kind::O4)
    }

    pub fn goldstine() -> Self {
        Self::build("goldstine", fixed("ab"), Kind::Goldstine)
    }

    /// `S1 {c} A* ∪ S2 {c} A*` over `{a, b, c}`.
    pub fn kemp() -> Self {
        Self::build("kemp", fixed("abc"), Kind::Kemp)
    }

    /// `S1 = a (b^i a^i)*` over `{a, b}`.
    pub fn kemp_s1() -> Self {
        Self::build("kemp-s1", fixed("ab"), Kind::KempS1)
    }

    /// `S2 = (a^i b^{2i})* a^+` over `{a, b}`.
    pub fn kemp_s2() -> Self {
        Self::build("kemp-s2", fixed("ab"), Kind::KempS2)
    }

    /// `S1 ∪ S2`, whose suffix extension by `c` is Kemp's language.
    pub fn kemp_base() -> Self {
        Self::build("kemp-base", fixed("ab"), Kind::KempBase)
    }

    /// `M_m = {w : |w|_a > m·|w|_b}` over `{a, b}`.
    pub fn majority(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("majority needs m ≥ 1".into()));
        }
        Ok(Self::build(
            format!("majority:{m}"),
            fixed("ab"),
            Kind::Majority(m),
        ))
    }

    pub fn primitive(alphabet: &Alphabet) -> Self {
        Self::build("primitive", alphabet.clone(), Kind::Primitive)
    }

    /// Words that are not prefixes of `h^ω(seed)`.
    pub fn coprefix(h: Morphism, seed: Letter) -> Result<Self> {
        h.ensure_prolongable(seed)?;
        let alphabet = h.alphabet().clone();
        let fixed_point = FixedPoint {
            prefix: Mutex::new(vec![seed]),
            morphism: h,
            seed,
        };
        let name = format!("coprefix:{}", alphabet.symbol(fixed_point.seed));
        Ok(Self::build(
            name,
            alphabet,
            Kind::Coprefix(Arc::new(fixed_point)),
        ))
    }

    fn extension(
        base: LanguageOracle,
        c: char,
        tag: &str,
        make: fn(Box<LanguageOracle>, Letter) -> Kind,
    ) -> Result<Self> {
        if base.alphabet.contains(c) {
            return Err(Error::InvalidParameter(format!(
                "extension letter {c:?} already in {}",
                base.alphabet
            )));
        }
        let alphabet = base.alphabet.extended(c)?;
        let letter = alphabet.letter(c)?;
        let name = format!("{tag}:{}:{c}", base.name);
        Ok(Self::build(name, alphabet, make(Box::new(base), letter)))
    }

    /// `L {c} (A ∪ {c})*`.
    pub fn suffix_extension(base: LanguageOracle, c: char) -> Result<Self> {
        Self::extension(base, c, "suffix-ext", Kind::SuffixExtension)
    }

    /// `(A ∪ {c})* {c} L`.
    pub fn prefix_extension(base: LanguageOracle, c: char) -> Result<Self> {
        Self::extension(base, c, "prefix-ext", Kind::PrefixExtension)
    }

    /// `(A ∪ {c})* {c} L {c} (A ∪ {c})*`.
    pub fn infix_extension(base: LanguageOracle, c: char) -> Result<Self> {
        Self::extension(base, c, "infix-ext", Kind::InfixExtension)
    }

    pub fn diagonal(program: DiagonalProgram) -> Self {
        let alphabet = program.alphabet().clone();
        Self::build("diagonal", alphabet, Kind::Diagonal(Arc::new(program)))
    }

    pub fn regular(name: impl Into<String>, dfa: Dfa) -> Self {
        let alphabet = dfa.alphabet().clone();
        Self::build(name, alphabet, Kind::Regular(dfa))
    }

    pub fn complement(base: LanguageOracle) -> Self {
        let name = format!("not-{}", base.name);
        let alphabet = base.alphabet.clone();
        Self::build(name, alphabet, Kind::Complement(Box::new(base)))
    }

    /// Parses an oracle name. Oracles with a fixed alphabet ignore
    /// `alphabet`; the others use it.
    ///
    /// Names: `dyck`, `counteq:a,b`, `pal`, `o3`, `o4`, `goldstine`,
    /// `kemp`, `kemp-s1`, `kemp-s2`, `kemp-base`, `majority:m`,
    /// `primitive`, `coprefix:<rules>`, `suffix-ext:<base>:<c>`,
    /// `prefix-ext:<base>:<c>`, `infix-ext:<base>:<c>`, `diagonal`,
    /// `dfa:<builtin>`. The base alphabet of an extension is `alphabet`
    /// unless the base fixes its own.
    pub fn parse(source: &str, alphabet: &Alphabet) -> Result<Self> {
        let (head, rest) = match source.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (source, None),
        };
        let bare = |oracle: Self| match rest {
            None => Ok(oracle),
            Some(_) => Err(Error::InvalidParameter(format!("{head} takes no argument"))),
        };
        let arg =
            || rest.ok_or_else(|| Error::InvalidParameter(format!("{head} needs an argument")));
        match head {
            "dyck" => bare(Self::semi_dyck()),
            "pal" => bare(Self::palindromes(alphabet)),
            "o3" => bare(Self::o3()),
            "o4" => bare(Self::o4()),
            "goldstine" => bare(Self::goldstine()),
            "kemp" => bare(Self::kemp()),
            "kemp-s1" => bare(Self::kemp_s1()),
            "kemp-s2" => bare(Self::kemp_s2()),
            "kemp-base" => bare(Self::kemp_base()),
            "primitive" => bare(Self::primitive(alphabet)),
            "diagonal" => bare(Self::diagonal(DiagonalProgram::new(alphabet.clone())?)),
            "counteq" => {
                let letters: Vec<char> = arg()?.chars().collect();
                match letters[..] {
                    [a, ',', b] => Self::count_eq(alphabet, a, b),
                    _ => Err(Error::InvalidParameter("counteq expects a,b".into())),
                }
            }
            "majority" => {
                let m = arg()?
                    .parse()
                    .map_err(|_| Error::InvalidParameter("majority expects an integer".into()))?;
                Self::majority(m)
            }
            "coprefix" => {
                let (h, seed) = Morphism::parse(alphabet, arg()?)?;
                Self::coprefix(h, seed)
            }
            "dfa" => Ok(Self::regular(source, builtin(arg()?, alphabet)?)),
            "suffix-ext" | "prefix-ext" | "infix-ext" => {
                let (base, c) = arg()?
                    .rsplit_once(':')
                    .ok_or_else(|| Error::InvalidParameter(format!("{head} expects <base>:<c>")))?;
                let mut chars = c.chars();
                let c = match (chars.next(), chars.next()) {
                    (Some(c), None) => c,
                    _ => {
                        return Err(Error::InvalidParameter(format!(
                            "bad extension letter {c:?}"
                        )))
                    }
                };
                let base = Self::parse(base, alphabet)?;
                match head {
                    "suffix-ext" => Self::suffix_extension(base, c),
                    "prefix-ext" => Self::prefix_extension(base, c),
                    _ => Self::infix_extension(base, c),
                }
            }
            _ => Err(Error::InvalidParameter(format!(
                "unknown oracle {source:?}"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Whether [`LanguageOracle::closed_count`] is available.
    pub fn has_counter(&self) -> bool {
        match &self.kind {
            Kind::SemiDyck
            | Kind::CountEq(..)
            | Kind::Palindromes
            | Kind::O3
            | Kind::O4
            | Kind::Goldstine
            | Kind::Majority(_)
            | Kind::Primitive
            | Kind::Coprefix(_)
            | Kind::Regular(_) => true,
            Kind::SuffixExtension(base, _) | Kind::PrefixExtension(base, _) => base.has_counter(),
            Kind::Complement(base) => base.has_counter(),
            _ => false,
        }
    }

    /// Exact number of members of length `n`, without enumeration.
    pub fn closed_count(&self, n: usize) -> Result<BigCount> {
        let k = self.alphabet.len();
        Ok(match &self.kind {
            Kind::SemiDyck => counting::semi_dyck(n),
            Kind::CountEq(..) => counting::count_eq(k, n),
            Kind::Palindromes => counting::palindromes(k, n),
            Kind::O3 => counting::o3(n),
            Kind::O4 => counting::o4(n),
            Kind::Goldstine => counting::goldstine(n, goldstine_word_prefix(n).last() == Some(&1)),
            Kind::Majority(m) => counting::majority(*m, n),
            Kind::Primitive => counting::primitive(k, n),
            Kind::Coprefix(_) => counting::coprefix(k, n),
            Kind::Regular(dfa) => dfa.count_words(n).counts()[n].clone(),
            Kind::SuffixExtension(base, _) | Kind::PrefixExtension(base, _) => {
                let counts = (0..n)
                    .map(|m| base.closed_count(m))
                    .collect::<Result<Vec<_>>>()?;
                counting::suffix_extension(&counts, k, n)
            }
            Kind::Complement(base) => big_pow(k, n) - base.closed_count(n)?,
            _ => return Err(Error::NoCounter(self.name.clone())),
        })
    }

    fn member_unchecked(&self, w: &[Letter]) -> Result<bool> {
        use predicates as p;
        Ok(match &self.kind {
            Kind::SemiDyck => p::semi_dyck(w, 0, 1),
            Kind::CountEq(a, b) => p::count_eq(w, *a, *b),
            Kind::Palindromes => p::palindrome(w),
            Kind::O3 => p::count_eq(w, 0, 1) || p::count_eq(w, 0, 2),
            Kind::O4 => p::count_eq(w, 0, 1) || p::count_eq(w, 2, 3),
            Kind::Goldstine => p::goldstine(w, 0, 1),
            Kind::KempS1 => p::kemp_s1(w, 0, 1),
            Kind::KempS2 => p::kemp_s2(w, 0, 1),
            Kind::KempBase => p::kemp_s1(w, 0, 1) || p::kemp_s2(w, 0, 1),
            Kind::Kemp => {
                p::before_first(w, 2).is_some_and(|u| p::kemp_s1(u, 0, 1) || p::kemp_s2(u, 0, 1))
            }
            Kind::Majority(m) => p::majority(w, *m, 0, 1),
            Kind::Primitive => p::primitive(w),
            Kind::Coprefix(fp) => !fp.is_prefix(w),
            Kind::SuffixExtension(base, c) => match p::before_first(w, *c) {
                Some(u) => base.member_unchecked(u)?,
                None => false,
            },
            Kind::PrefixExtension(base, c) => match p::after_last(w, *c) {
                Some(v) => base.member_unchecked(v)?,
                None => false,
            },
            Kind::InfixExtension(base, c) => {
                for u in p::between_consecutive(w, *c) {
                    if base.member_unchecked(u)? {
                        return Ok(true);
                    }
                }
                false
            }
            Kind::Diagonal(program) => program.accepts(w)?,
            Kind::Regular(dfa) => dfa.accepts(w),
            Kind::Complement(base) => !base.member_unchecked(w)?,
        })
    }
}

impl Language for LanguageOracle {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn member(&self, w: &[Letter]) -> Result<bool> {
        if let Some(&x) = w.iter().find(|&&x| x as usize >= self.alphabet.len()) {
            return Err(Error::InvalidParameter(format!(
                "letter index {x} out of range"
            )));
        }
        self.member_unchecked(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{census_by_enumeration, DEFAULT_ENUMERATION_BUDGET};

    fn accepts(o: &LanguageOracle, s: &str) -> bool {
        let w = o.alphabet.word(s).unwrap();
        o.member(w.letters()).unwrap()
    }

    fn ab() -> Alphabet {
        Alphabet::parse("ab").unwrap()
    }

    #[test]
    fn membership_examples() {
        let dyck = LanguageOracle::semi_dyck();
        assert!(accepts(&dyck, "abab") && !accepts(&dyck, "ba"));
        let g = LanguageOracle::goldstine();
        assert!(
            accepts(&g, "b") && !accepts(&g, "ab") && !accepts(&g, "abaab") && accepts(&g, "abab")
        );
        let kemp = LanguageOracle::kemp();
        assert!(accepts(&kemp, "ac") && accepts(&kemp, "abbaacbca") && !accepts(&kemp, "bc"));
        assert!(!accepts(&kemp, "a"));
        let q = LanguageOracle::primitive(&ab());
        assert!(!accepts(&q, "aa") && accepts(&q, "ab"));
        let o4 = LanguageOracle::o4();
        assert!(accepts(&o4, "xX") && accepts(&o4, "xXy") && !accepts(&o4, "xy"));
    }

    #[test]
    fn counters_match_enumeration() {
        let abc = Alphabet::parse("abc").unwrap();
        let binary = [
            LanguageOracle::semi_dyck(),
            LanguageOracle::count_eq(&ab(), 'a', 'b').unwrap(),
            LanguageOracle::palindromes(&ab()),
            LanguageOracle::goldstine(),
            LanguageOracle::majority(1).unwrap(),
            LanguageOracle::majority(2).unwrap(),
            LanguageOracle::primitive(&ab()),
            LanguageOracle::parse("coprefix:a>ab,b>a", &ab()).unwrap(),
        ];
        let ternary = [
            LanguageOracle::count_eq(&abc, 'a', 'c').unwrap(),
            LanguageOracle::palindromes(&abc),
            LanguageOracle::o3(),
            LanguageOracle::primitive(&abc),
            LanguageOracle::parse("suffix-ext:pal:c", &ab()).unwrap(),
        ];
        for (oracles, max) in [(&binary[..], 12), (&ternary[..], 8)] {
            for o in oracles {
                let census = census_by_enumeration(o, max, DEFAULT_ENUMERATION_BUDGET).unwrap();
                for n in 0..=max {
                    assert_eq!(
                        &o.closed_count(n).unwrap(),
                        &census.counts()[n],
                        "{o} n={n}"
                    );
                }
            }
        }
        let o4 = LanguageOracle::o4();
        let census = census_by_enumeration(&o4, 7, DEFAULT_ENUMERATION_BUDGET).unwrap();
        for n in 0..=7 {
            assert_eq!(o4.closed_count(n).unwrap(), census.counts()[n]);
        }
    }

    #[test]
    fn o3_large_count() {
        assert_eq!(
            LanguageOracle::o3().closed_count(18).unwrap(),
            71_152_482u64.into()
        );
    }

    #[test]
    fn extensions() {
        let base = LanguageOracle::parse("dfa:star:a", &ab()).unwrap();
        let suffix = LanguageOracle::suffix_extension(base.clone(), 'c').unwrap();
        assert!(accepts(&suffix, "aacb") && accepts(&suffix, "c") && !accepts(&suffix, "bcc"));
        let prefix = LanguageOracle::prefix_extension(base.clone(), 'c').unwrap();
        assert!(accepts(&prefix, "bcaa") && !accepts(&prefix, "cab"));
        let infix = LanguageOracle::infix_extension(base.clone(), 'c').unwrap();
        assert!(accepts(&infix, "bcacb") && accepts(&infix, "cc") && !accepts(&infix, "cbc"));
        assert!(LanguageOracle::suffix_extension(base, 'a').is_err());
    }

    #[test]
    fn parse_names() {
        for name in [
            "dyck",
            "counteq:a,b",
            "pal",
            "o3",
            "o4",
            "goldstine",
            "kemp",
            "majority:2",
            "primitive",
            "coprefix:a>ab,b>a",
            "suffix-ext:kemp-base:c",
            "diagonal",
            "dfa:evens",
        ] {
            LanguageOracle::parse(name, &ab()).unwrap();
        }
        for bad in [
            "nope",
            "dyck:1",
            "majority:x",
            "majority:0",
            "counteq:a",
            "coprefix:a>b",
        ] {
            assert!(LanguageOracle::parse(bad, &ab()).is_err(), "{bad}");
        }
        assert!(!LanguageOracle::kemp().has_counter());
        assert!(matches!(
            LanguageOracle::kemp().closed_count(3),
            Err(Error::NoCounter(_))
        ));
    }

    #[test]
    fn goldstine_word() {
        let s: String = goldstine_word_prefix(10)
            .iter()
            .map(|&l| (b'a' + l) as char)
            .collect();
        assert_eq!(s, "abaabaaaba");
    }
}
