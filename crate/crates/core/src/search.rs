//! Randomized search for bipolar subsets satisfying a boolean combination of
//! ideal-class flags, e.g. interior ideals that are not two-sided.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bvf::{gamma, BvfSubset};
use crate::enumerate::{enumerate, EnumerationTask};
use crate::error::{Error, Result};
use crate::ideals::{classify_with, holds_unchecked, BiForm, Classification, IdealClass};
use crate::magma::Magma;
use crate::random::{derive_seed, random_bvf};

pub const DEFAULT_MAX_TRIALS: u64 = 100_000;

/// A boolean formula over ideal-class flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Class(IdealClass),
    Not(Box<Target>),
    And(Box<Target>, Box<Target>),
    Or(Box<Target>, Box<Target>),
}

impl Target {
    /// Parses `&`/`∧`/`and`, `|`/`∨`/`or`, `!`/`¬`/`not` and parentheses over
    /// class names (`left`, `bvf_interior`, `two_sided`, ...). `!` binds
    /// tightest, then `&`, then `|`.
    pub fn parse(text: &str) -> Result<Target> {
        let tokens = tokenize(text)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            end: text.len(),
        };
        let expr = parser.or()?;
        match parser.tokens.get(parser.pos) {
            None => Ok(expr),
            Some((offset, tok)) => Err(Error::Target {
                offset: *offset,
                message: format!("unexpected {tok:?}"),
            }),
        }
    }

    pub fn eval(&self, flag: &mut impl FnMut(IdealClass) -> bool) -> bool {
        match self {
            Target::Class(c) => flag(*c),
            Target::Not(t) => !t.eval(flag),
            Target::And(a, b) => a.eval(flag) && b.eval(flag),
            Target::Or(a, b) => a.eval(flag) || b.eval(flag),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Class(c) => write!(f, "{c}"),
            Target::Not(t) => write!(f, "!{t}"),
            Target::And(a, b) => write!(f, "({a} & {b})"),
            Target::Or(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    And,
    Or,
    Not,
    Open,
    Close,
    Ident(String),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        let single = match ch {
            '&' | '∧' => Some(Token::And),
            '|' | '∨' => Some(Token::Or),
            '!' | '¬' => Some(Token::Not),
            '(' => Some(Token::Open),
            ')' => Some(Token::Close),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            // Accept doubled `&&` / `||`.
            if matches!(tok, Token::And | Token::Or) {
                if let Some(&(_, next)) = chars.peek() {
                    if next == ch && ch.is_ascii() {
                        chars.next();
                    }
                }
            }
            out.push((i, tok));
        } else if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_alphanumeric() || ch == '_' || ch == '-' {
            let mut word = String::new();
            while let Some(&(_, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
                    word.push(c);
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = match word.to_ascii_lowercase().as_str() {
                "and" => Token::And,
                "or" => Token::Or,
                "not" => Token::Not,
                _ => Token::Ident(word),
            };
            out.push((i, tok));
        } else {
            return Err(Error::Target {
                offset: i,
                message: format!("unexpected character {ch:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn or(&mut self) -> Result<Target> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Target::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Target> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Target::And(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Target> {
        let offset = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Not) => {
                self.pos += 1;
                Ok(Target::Not(Box::new(self.unary()?)))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::Target {
                        offset: self.offset(),
                        message: "expected ')'".into(),
                    });
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Token::Ident(word)) => {
                self.pos += 1;
                word.parse::<IdealClass>()
                    .map(Target::Class)
                    .map_err(|_| Error::Target {
                        offset,
                        message: format!("unknown class {word:?}"),
                    })
            }
            Some(tok) => Err(Error::Target {
                offset,
                message: format!("unexpected {tok:?}"),
            }),
            None => Err(Error::Target {
                offset,
                message: "unexpected end of expression".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub target: Target,
    pub orders: Vec<usize>,
    pub q: u32,
    pub seed: u64,
    pub max_trials: u64,
    pub bi_form: BiForm,
}

impl SearchSpec {
    pub fn new(target: &str, orders: Vec<usize>) -> Result<Self> {
        let spec = Self {
            target: Target::parse(target)?,
            orders,
            q: 10,
            seed: 0,
            max_trials: DEFAULT_MAX_TRIALS,
            bi_form: BiForm::default(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.orders.is_empty() || self.orders.contains(&0) {
            return Err(Error::InvalidTask(
                "orders must be a nonempty list of positive integers".into(),
            ));
        }
        if self.q == 0 {
            return Err(Error::InvalidTask("quantization must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub trial: u64,
    pub magma: Magma,
    pub subset: BvfSubset,
    pub classification: Classification,
}

/// Trial `t` pairs magma `t mod k` (the `k` isomorphism classes of the
/// requested orders, in census order) with `Γ` for the first `k` trials and
/// with a seeded random subset afterwards. Returns the lowest-numbered hit.
pub fn search(spec: &SearchSpec) -> Result<Option<SearchHit>> {
    spec.validate()?;
    let mut magmas = Vec::new();
    for &order in &spec.orders {
        let mut task = EnumerationTask::new(order);
        task.up_to_isomorphism = true;
        magmas.extend(enumerate(&task)?.magmas);
    }
    let k = magmas.len() as u64;
    let candidate = |t: u64| -> (&Magma, BvfSubset) {
        let m = &magmas[(t % k) as usize];
        let b = if t < k {
            gamma(m.order())
        } else {
            random_bvf(m.order(), spec.q, derive_seed(spec.seed, t))
        };
        (m, b)
    };
    let hit = (0..spec.max_trials).into_par_iter().find_first(|&t| {
        let (m, b) = candidate(t);
        spec.target
            .eval(&mut |class| holds_unchecked(m, &b, class, spec.bi_form))
    });
    hit.map(|t| {
        let (m, b) = candidate(t);
        let classification = classify_with(m, &b, spec.bi_form)?;
        Ok(SearchHit {
            trial: t,
            magma: m.clone(),
            subset: b,
            classification,
        })
    })
    .transpose()
}
