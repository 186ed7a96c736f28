use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use indexmap::IndexMap;
use thiserror::Error;

use super::{BeliefDecl, KnowledgeBaseDoc, PropositionDecl, ProximityDecl, Query, QueryKind};
use crate::belief::BeliefMethod;
use crate::discount::LinguisticCredibility;
use crate::error::Error;
use crate::possibility::{Conorm, DiscountModel, FuzzySet, Universe};
use crate::relative::{GTransform, Proposition, Qualifier};

/// A parse or validation failure, positioned at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown {kind} `{name}`")]
    UnknownReference { kind: &'static str, name: String },
    #[error("duplicate {kind} `{name}`")]
    Duplicate { kind: &'static str, name: String },
    #[error("grade outside [0,1]: {0}")]
    GradeOutOfRange(f64),
    #[error("proximity conflict: {0}")]
    ProximityConflict(String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Word(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    col: usize,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || matches!(c, '_' | '.' | '-' | '+')
}

fn lex(text: &str, line: usize) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        } else if c.is_whitespace() {
            i += 1;
        } else if matches!(c, '=' | ',' | ':' | '(' | ')') {
            tokens.push(Token {
                tok: Tok::Sym(c),
                col,
            });
            i += 1;
        } else if is_word_char(c) {
            let start = i;
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            tokens.push(Token {
                tok: Tok::Word(chars[start..i].iter().collect()),
                col,
            });
        } else {
            return Err(ParseError {
                line,
                column: col,
                kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
            });
        }
    }
    Ok(tokens)
}

/// A word together with where it was found.
#[derive(Debug, Clone)]
struct Word {
    text: String,
    col: usize,
}

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl Cursor {
    fn error_at(&self, col: usize, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: self.line,
            column: col,
            kind,
        }
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        let found = match self.tokens.get(self.pos) {
            Some(t) => format!("found {}", t.tok),
            None => "found end of line".to_string(),
        };
        self.error_at(
            self.col(),
            ParseErrorKind::Syntax(format!("expected {expected}, {found}")),
        )
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn peek_word(&self) -> Option<&str> {
        match self.tokens.get(self.pos).map(|t| &t.tok) {
            Some(Tok::Word(w)) => Some(w),
            _ => None,
        }
    }

    fn peek_sym(&self, c: char) -> bool {
        matches!(self.tokens.get(self.pos).map(|t| &t.tok), Some(Tok::Sym(s)) if *s == c)
    }

    fn word(&mut self, expected: &str) -> Result<Word, ParseError> {
        match self.tokens.get(self.pos) {
            Some(Token {
                tok: Tok::Word(w),
                col,
            }) => {
                let word = Word {
                    text: w.clone(),
                    col: *col,
                };
                self.pos += 1;
                Ok(word)
            }
            _ => Err(self.unexpected(expected)),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<Word, ParseError> {
        if self.peek_word() == Some(kw) {
            self.word(kw)
        } else {
            Err(self.unexpected(&format!("`{kw}`")))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> Option<Word> {
        (self.peek_word() == Some(kw)).then(|| self.word(kw).expect("peeked"))
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn eat_sym(&mut self, c: char) -> bool {
        let hit = self.peek_sym(c);
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn ident(&mut self, what: &str) -> Result<Word, ParseError> {
        let w = self.word(what)?;
        if is_number(&w.text)
            || !w
                .text
                .chars()
                .next()
                .is_some_and(|c| c.is_alphabetic() || c == '_')
        {
            return Err(self.error_at(
                w.col,
                ParseErrorKind::Syntax(format!("expected {what}, found `{}`", w.text)),
            ));
        }
        Ok(w)
    }

    fn number(&mut self, what: &str) -> Result<(f64, usize), ParseError> {
        let w = self.word(what)?;
        parse_number(&w.text).map(|v| (v, w.col)).ok_or_else(|| {
            self.error_at(
                w.col,
                ParseErrorKind::Syntax(format!("expected {what}, found `{}`", w.text)),
            )
        })
    }

    fn grade(&mut self, what: &str) -> Result<(f64, usize), ParseError> {
        let (v, col) = self.number(what)?;
        if (0.0..=1.0).contains(&v) {
            Ok((v, col))
        } else {
            Err(self.error_at(col, ParseErrorKind::GradeOutOfRange(v)))
        }
    }

    fn integer(&mut self, what: &str) -> Result<(u32, usize), ParseError> {
        let w = self.word(what)?;
        w.text.parse::<u32>().map(|v| (v, w.col)).map_err(|_| {
            self.error_at(
                w.col,
                ParseErrorKind::Syntax(format!("expected {what}, found `{}`", w.text)),
            )
        })
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of line"))
        }
    }
}

fn is_number(text: &str) -> bool {
    parse_number(text).is_some()
}

fn parse_number(text: &str) -> Option<f64> {
    let body = text.strip_prefix(['-', '+']).unwrap_or(text);
    let first = body.chars().next()?;
    if !(first.is_ascii_digit() || first == '.') {
        return None;
    }
    text.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Parses and validates a knowledge-base document.
pub fn parse_kb(text: &str) -> Result<KnowledgeBaseDoc, ParseError> {
    let mut parser = Parser::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens = lex(raw, line)?;
        if tokens.is_empty() {
            continue;
        }
        let mut cur = Cursor {
            tokens,
            pos: 0,
            line,
            end_col: raw.chars().count() + 1,
        };
        parser.statement(&mut cur)?;
    }
    Ok(parser.finish())
}

#[derive(Default)]
struct Parser {
    doc: KnowledgeBaseDoc,
    /// Universes as declared, before proximity is attached.
    base: IndexMap<String, Universe>,
    pairs: HashMap<String, Vec<(String, String, f64)>>,
    variable: Option<(String, String)>,
}

fn duplicate(cur: &Cursor, w: &Word, kind: &'static str) -> ParseError {
    cur.error_at(
        w.col,
        ParseErrorKind::Duplicate {
            kind,
            name: w.text.clone(),
        },
    )
}

fn unknown(cur: &Cursor, w: &Word, kind: &'static str) -> ParseError {
    cur.error_at(
        w.col,
        ParseErrorKind::UnknownReference {
            kind,
            name: w.text.clone(),
        },
    )
}

impl Parser {
    fn statement(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let head = cur.word("a statement keyword")?;
        match head.text.as_str() {
            "universe" => self.universe(cur),
            "proximity" => self.proximity(cur),
            "set" => self.set(cur),
            "ling" => self.ling(cur),
            "prop" => self.prop(cur),
            "belief" => self.belief(cur),
            "query" => self.query(cur),
            other => Err(cur.error_at(
                head.col,
                ParseErrorKind::Syntax(format!("unknown statement `{other}`")),
            )),
        }?;
        cur.finish()
    }

    fn universe(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let name = cur.ident("universe name")?;
        if self.base.contains_key(&name.text) {
            return Err(duplicate(cur, &name, "universe"));
        }
        cur.sym('=')?;
        let mut elements: Vec<Word> = vec![cur.ident("element label")?];
        while cur.eat_sym(',') {
            let e = cur.ident("element label")?;
            if elements.iter().any(|x| x.text == e.text) {
                return Err(duplicate(cur, &e, "element"));
            }
            elements.push(e);
        }
        let universe = Universe::new(name.text.clone(), elements.iter().map(|e| e.text.clone()))
            .map_err(|e| cur.error_at(name.col, ParseErrorKind::Invalid(e.to_string())))?;
        self.doc
            .universes
            .insert(name.text.clone(), Arc::new(universe.clone()));
        self.base.insert(name.text, universe);
        Ok(())
    }

    fn universe_ref(&self, cur: &Cursor, w: &Word) -> Result<Arc<Universe>, ParseError> {
        self.doc
            .universes
            .get(&w.text)
            .cloned()
            .ok_or_else(|| unknown(cur, w, "universe"))
    }

    fn element(&self, cur: &Cursor, universe: &Universe, w: &Word) -> Result<(), ParseError> {
        match universe.position(&w.text) {
            Some(_) => Ok(()),
            None => Err(cur.error_at(
                w.col,
                ParseErrorKind::UnknownReference {
                    kind: "element",
                    name: format!("{} in universe {}", w.text, universe.name()),
                },
            )),
        }
    }

    fn proximity(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let uname = cur.ident("universe name")?;
        let universe = self.universe_ref(cur, &uname)?;
        let left = cur.ident("element label")?;
        self.element(cur, &universe, &left)?;
        let right = cur.ident("element label")?;
        self.element(cur, &universe, &right)?;
        let (value, col) = cur.grade("proximity value")?;

        let pairs = self.pairs.entry(uname.text.clone()).or_default();
        pairs.push((left.text.clone(), right.text.clone(), value));
        let base = self.base[&uname.text].clone();
        base.with_proximity(pairs.iter().map(|(x, y, v)| (x.as_str(), y.as_str(), *v)))
            .map_err(|e| {
                let msg = match e {
                    Error::InvalidProximity(m) => m,
                    other => other.to_string(),
                };
                cur.error_at(col, ParseErrorKind::ProximityConflict(msg))
            })?;
        self.doc.proximities.push(ProximityDecl {
            universe: uname.text,
            left: left.text,
            right: right.text,
            value,
            line: cur.line,
        });
        Ok(())
    }

    fn set(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let name = cur.ident("set name")?;
        if self.doc.sets.contains_key(&name.text) {
            return Err(duplicate(cur, &name, "set"));
        }
        cur.keyword("on")?;
        let uname = cur.ident("universe name")?;
        let universe = self.universe_ref(cur, &uname)?;
        cur.sym('=')?;
        let mut grades = vec![0.0; universe.len()];
        let mut assigned = vec![false; universe.len()];
        loop {
            let elem = cur.ident("element label")?;
            self.element(cur, &universe, &elem)?;
            cur.sym(':')?;
            let (g, _) = cur.grade("grade")?;
            let i = universe.position(&elem.text).expect("checked");
            if assigned[i] {
                return Err(duplicate(cur, &elem, "element assignment"));
            }
            assigned[i] = true;
            grades[i] = g;
            if !cur.eat_sym(',') {
                break;
            }
        }
        let set = FuzzySet::from_grades(&universe, grades).expect("grades validated");
        self.doc.sets.insert(name.text, set);
        Ok(())
    }

    fn ling(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let name = cur.ident("linguistic value name")?;
        if self.doc.granules.contains_key(&name.text) || name.text == "unknown" {
            return Err(duplicate(cur, &name, "linguistic value"));
        }
        cur.sym('=')?;
        let mut points: Vec<(f64, f64)> = Vec::new();
        loop {
            let (y, ycol) = cur.grade("credibility value")?;
            if let Some(&(prev, _)) = points.last() {
                if y <= prev {
                    return Err(cur.error_at(
                        ycol,
                        ParseErrorKind::Invalid(format!(
                            "credibility values must be strictly increasing ({prev} then {y})"
                        )),
                    ));
                }
            }
            cur.sym(':')?;
            let (g, _) = cur.grade("membership grade")?;
            points.push((y, g));
            if !cur.eat_sym(',') {
                break;
            }
        }
        let granule = LinguisticCredibility::new(name.text.clone(), points)
            .map_err(|e| cur.error_at(name.col, ParseErrorKind::Invalid(e.to_string())))?;
        self.doc.granules.insert(name.text, granule);
        Ok(())
    }

    fn set_ref(&self, cur: &Cursor, w: &Word) -> Result<FuzzySet, ParseError> {
        self.doc
            .sets
            .get(&w.text)
            .cloned()
            .ok_or_else(|| unknown(cur, w, "set"))
    }

    fn prop(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let id = cur.ident("proposition id")?;
        if self
            .doc
            .propositions
            .iter()
            .any(|p| p.proposition.id == id.text)
        {
            return Err(duplicate(cur, &id, "proposition"));
        }
        cur.sym(':')?;
        let variable = cur.ident("variable name")?;
        cur.keyword("is")?;
        let set_name = cur.ident("set name")?;
        let content = self.set_ref(cur, &set_name)?;

        let universe = content.universe().name().to_string();
        match &self.variable {
            Some((v, _)) if *v != variable.text => {
                return Err(cur.error_at(
                    variable.col,
                    ParseErrorKind::Invalid(format!(
                        "documents reason about a single variable; `{}` conflicts with `{v}`",
                        variable.text
                    )),
                ));
            }
            Some((_, u)) if *u != universe => {
                return Err(cur.error_at(
                    set_name.col,
                    ParseErrorKind::Invalid(format!(
                        "set `{}` is on universe `{universe}` but propositions use `{u}`",
                        set_name.text
                    )),
                ));
            }
            _ => self.variable = Some((variable.text.clone(), universe)),
        }

        let mut qualifier: Option<Qualifier> = None;
        let mut relative_priority: Option<u32> = None;
        let mut model: Option<DiscountModel> = None;
        let mut priority: Option<u32> = None;
        while !cur.at_end() {
            let clause = cur.word("`cred`, `relcred`, `conorm`, `model` or `priority`")?;
            let repeated = || {
                cur.error_at(
                    clause.col,
                    ParseErrorKind::Syntax(format!("`{}` given more than once", clause.text)),
                )
            };
            match clause.text.as_str() {
                "cred" | "relcred" if qualifier.is_some() => {
                    return Err(cur.error_at(
                        clause.col,
                        ParseErrorKind::Syntax("credibility qualifier given more than once".into()),
                    ));
                }
                "cred" => {
                    let w = cur.word("credibility number or linguistic value")?;
                    qualifier = Some(match parse_number(&w.text) {
                        Some(v) if (0.0..=1.0).contains(&v) => Qualifier::Scalar(v),
                        Some(v) => {
                            return Err(cur.error_at(w.col, ParseErrorKind::GradeOutOfRange(v)))
                        }
                        None => {
                            if !(self.doc.granules.contains_key(&w.text) || w.text == "unknown") {
                                return Err(unknown(cur, &w, "linguistic value"));
                            }
                            Qualifier::Linguistic(w.text)
                        }
                    });
                }
                "relcred" => {
                    if priority.is_some() {
                        return Err(repeated());
                    }
                    cur.keyword("priority")?;
                    let (p, pcol) = cur.integer("priority")?;
                    if p < 2 {
                        return Err(cur.error_at(
                            pcol,
                            ParseErrorKind::Invalid(
                                "relative credibility needs priority >= 2".into(),
                            ),
                        ));
                    }
                    relative_priority = Some(p);
                    let g = if cur.eat_keyword("g").is_some() {
                        self.g_transform(cur)?
                    } else {
                        GTransform::Identity
                    };
                    qualifier = Some(Qualifier::Relative(g));
                }
                "conorm" | "model" if model.is_some() => return Err(repeated()),
                "conorm" => {
                    let w = cur.word("`max`, `probsum` or `bounded`")?;
                    let s = match w.text.as_str() {
                        "max" => Conorm::Max,
                        "probsum" => Conorm::ProbSum,
                        "bounded" => Conorm::Bounded,
                        _ => {
                            cur.pos -= 1;
                            return Err(cur.unexpected("`max`, `probsum` or `bounded`"));
                        }
                    };
                    model = Some(DiscountModel::Conorm(s));
                }
                "model" => {
                    cur.keyword("exp")?;
                    model = Some(DiscountModel::Exponential);
                }
                "priority" => {
                    if priority.is_some() || relative_priority.is_some() {
                        return Err(repeated());
                    }
                    let (p, pcol) = cur.integer("priority")?;
                    if p < 1 {
                        return Err(cur.error_at(
                            pcol,
                            ParseErrorKind::Invalid("priority must be >= 1".into()),
                        ));
                    }
                    priority = Some(p);
                }
                other => {
                    return Err(cur.error_at(
                        clause.col,
                        ParseErrorKind::Syntax(format!("unknown proposition clause `{other}`")),
                    ));
                }
            }
        }

        let mut proposition = Proposition::new(id.text, content)
            .with_qualifier(qualifier.unwrap_or(Qualifier::None))
            .with_priority(relative_priority.or(priority).unwrap_or(1));
        proposition.model = model;
        self.doc.propositions.push(PropositionDecl {
            proposition,
            set: set_name.text,
            variable: variable.text,
            line: cur.line,
        });
        Ok(())
    }

    fn g_transform(&self, cur: &mut Cursor) -> Result<GTransform, ParseError> {
        let tag = cur.word("`identity`, `const`, `power` or `cap`")?;
        if tag.text == "identity" {
            return Ok(GTransform::Identity);
        }
        if !matches!(tag.text.as_str(), "const" | "power" | "cap") {
            cur.pos -= 1;
            return Err(cur.unexpected("`identity`, `const`, `power` or `cap`"));
        }
        cur.sym('(')?;
        let (v, col) = cur.number("g parameter")?;
        cur.sym(')')?;
        let g = match tag.text.as_str() {
            "const" => GTransform::constant(v),
            "power" => GTransform::power(v),
            _ => GTransform::cap(v),
        };
        g.map_err(|e| match e {
            Error::OutOfRange { value, .. } => {
                cur.error_at(col, ParseErrorKind::GradeOutOfRange(value))
            }
            other => cur.error_at(col, ParseErrorKind::Invalid(other.to_string())),
        })
    }

    fn belief(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let name = cur.ident("belief name")?;
        if self.doc.beliefs.contains_key(&name.text) {
            return Err(duplicate(cur, &name, "belief"));
        }
        cur.sym('=')?;
        cur.keyword("support")?;
        let set = cur.ident("set name")?;
        self.set_ref(cur, &set)?;
        cur.keyword("mass")?;
        let (mass, _) = cur.grade("mass")?;
        self.doc.beliefs.insert(
            name.text,
            BeliefDecl {
                set: set.text,
                mass,
                line: cur.line,
            },
        );
        Ok(())
    }

    fn query(&mut self, cur: &mut Cursor) -> Result<(), ParseError> {
        let kind = cur.word("query kind")?;
        let query = match kind.text.as_str() {
            "dist" => QueryKind::Dist,
            "poss" | "cert" | "entails" => {
                let set = cur.ident("set name")?;
                self.set_ref(cur, &set)?;
                match kind.text.as_str() {
                    "poss" => QueryKind::Poss(set.text),
                    "cert" => QueryKind::Cert(set.text),
                    _ => QueryKind::Entails(set.text),
                }
            }
            "pl" | "bel" => {
                let set = cur.ident("set name")?;
                self.set_ref(cur, &set)?;
                cur.keyword("under")?;
                let belief = cur.ident("belief name")?;
                if !self.doc.beliefs.contains_key(&belief.text) {
                    return Err(unknown(cur, &belief, "belief"));
                }
                let method = if cur.eat_keyword("method").is_some() {
                    let m = cur.word("`weighted` or `contour`")?;
                    match m.text.as_str() {
                        "weighted" => BeliefMethod::Weighted,
                        "contour" => BeliefMethod::Contour,
                        _ => {
                            cur.pos -= 1;
                            return Err(cur.unexpected("`weighted` or `contour`"));
                        }
                    }
                } else {
                    BeliefMethod::default()
                };
                let (set, belief) = (set.text, belief.text);
                if kind.text == "pl" {
                    QueryKind::Pl {
                        set,
                        belief,
                        method,
                    }
                } else {
                    QueryKind::Bel {
                        set,
                        belief,
                        method,
                    }
                }
            }
            other => {
                return Err(cur.error_at(
                    kind.col,
                    ParseErrorKind::Syntax(format!(
                        "unknown query `{other}` (expected poss, cert, entails, dist, pl or bel)"
                    )),
                ))
            }
        };
        self.doc.queries.push(Query {
            line: cur.line,
            kind: query,
        });
        Ok(())
    }

    /// Attaches proximity relations and moves every set onto its final
    /// universe.
    fn finish(mut self) -> KnowledgeBaseDoc {
        for (name, base) in &self.base {
            if let Some(pairs) = self.pairs.get(name) {
                let full = base
                    .clone()
                    .with_proximity(pairs.iter().map(|(x, y, v)| (x.as_str(), y.as_str(), *v)))
                    .expect("proximity validated per statement");
                self.doc.universes.insert(name.clone(), Arc::new(full));
            }
        }
        let universes = &self.doc.universes;
        let rebind = |set: &FuzzySet| set.rebind(&universes[set.universe().name()]);
        for set in self.doc.sets.values_mut() {
            *set = rebind(set);
        }
        for decl in &mut self.doc.propositions {
            decl.proposition.content = rebind(&decl.proposition.content);
        }
        self.doc
    }
}
