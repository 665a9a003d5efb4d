//! Query-driven textual affinity between search terms and change regions.
//!
//! Each executed region becomes a [`RegionDocument`] whose tokens are tagged
//! with the zone they came from: the region itself, nearby lines in the
//! same method, the method signature and comments, the containing class,
//! and the file name. A hit is weighted by a log-damped TF-IDF and the
//! boost of its zone.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

use rust_stemmers::{Algorithm, Stemmer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diff::ChangeRegion;
use crate::method_map::{MethodExtent, MethodMap};
use crate::source::SourceProvider;

/// Lines on either side of a region that count as its surroundings.
pub const NEAR_LINES: u32 = 10;

/// Match strength for terms that only share a stem.
pub const STEM_MATCH: f64 = 0.8;

#[derive(Debug, Error)]
pub enum TextualError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("synonym score for `{a}`/`{b}` must be within [0, 1], got {score}")]
    SynonymScore { a: String, b: String, score: f64 },

    #[error("zone boost `{zone}` must be positive and finite, got {value}")]
    ZoneBoost { zone: &'static str, value: f64 },
}

/// Splits every identifier in `text` on underscores, case transitions and
/// digit boundaries.
///
/// Parts are lowercased. Identifiers with more than one part are also
/// emitted in their original form after the parts.
pub fn split_identifiers(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    for ident in text
        .split(|c: char| !(c.is_alphanumeric() || c == '_'))
        .filter(|s| !s.is_empty())
    {
        let parts = split_parts(ident);
        let compound = parts.len() > 1;
        tokens.extend(parts);
        if compound {
            tokens.push(ident.to_string());
        }
    }
    tokens
}

fn split_parts(ident: &str) -> Vec<String> {
    let mut parts = Vec::new();
    for piece in ident.split('_').filter(|p| !p.is_empty()) {
        let chars: Vec<char> = piece.chars().collect();
        let mut start = 0;
        for i in 1..chars.len() {
            let (prev, cur) = (chars[i - 1], chars[i]);
            let next_lower = chars.get(i + 1).is_some_and(|c| c.is_lowercase());
            let boundary = (prev.is_lowercase() && cur.is_uppercase())
                || (prev.is_alphabetic() && cur.is_numeric())
                || (prev.is_numeric() && cur.is_alphabetic())
                // "HTTPResponse": the last capital of a run starts a new word
                || (prev.is_uppercase() && cur.is_uppercase() && next_lower);
            if boundary {
                parts.push(chars[start..i].iter().collect::<String>().to_lowercase());
                start = i;
            }
        }
        parts.push(chars[start..].iter().collect::<String>().to_lowercase());
    }
    parts
}

const ENGLISH_STOP_WORDS: &[&str] = &[
    "a", "about", "above", "after", "again", "against", "all", "am", "an", "and", "any", "are",
    "as", "at", "be", "because", "been", "before", "being", "below", "between", "both", "but",
    "by", "can", "could", "did", "do", "does", "doing", "down", "during", "each", "few", "for",
    "from", "further", "had", "has", "have", "having", "he", "her", "here", "hers", "herself",
    "him", "himself", "his", "how", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
    "me", "more", "most", "my", "myself", "no", "nor", "not", "now", "of", "off", "on", "once",
    "only", "or", "other", "our", "ours", "ourselves", "out", "over", "own", "same", "she",
    "should", "so", "some", "such", "than", "that", "the", "their", "theirs", "them",
    "themselves", "then", "there", "these", "they", "this", "those", "through", "to", "too",
    "under", "until", "up", "very", "was", "we", "were", "what", "when", "where", "which",
    "while", "who", "whom", "why", "will", "with", "would", "you", "your", "yours", "yourself",
    "yourselves",
];

const PYTHON_KEYWORDS: &str = include_str!("keywords/python.txt");

fn english_stop_words() -> &'static HashSet<&'static str> {
    static WORDS: OnceLock<HashSet<&'static str>> = OnceLock::new();
    WORDS.get_or_init(|| ENGLISH_STOP_WORDS.iter().copied().collect())
}

/// Language keywords treated as stop words, one per line in file form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KeywordList {
    words: BTreeSet<String>,
}

impl KeywordList {
    /// Parses one keyword per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Self {
        KeywordList {
            words: text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(str::to_lowercase)
                .collect(),
        }
    }

    /// The bundled list for the line-tracing runtime (Python).
    pub fn python() -> Self {
        Self::parse(PYTHON_KEYWORDS)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

pub fn is_stop_word(token: &str, keywords: &KeywordList) -> bool {
    let lower = token.to_lowercase();
    english_stop_words().contains(lower.as_str()) || keywords.contains(&lower)
}

/// Drops English stop words and language keywords (case-insensitive).
pub fn filter_stop_words(tokens: Vec<String>, keywords: &KeywordList) -> Vec<String> {
    tokens
        .into_iter()
        .filter(|t| !is_stop_word(t, keywords))
        .collect()
}

fn english_stemmer() -> Stemmer {
    Stemmer::create(Algorithm::English)
}

pub fn stem(term: &str) -> String {
    english_stemmer().stem(&term.to_lowercase()).into_owned()
}

#[derive(Deserialize)]
struct SynonymRecord {
    a: String,
    b: String,
    score: f64,
}

/// Symmetric term-pair relatedness scores.
#[derive(Debug, Clone, Default)]
pub struct SynonymTable {
    pairs: HashMap<(String, String), f64>,
}

fn pair_key(a: &str, b: &str) -> (String, String) {
    let (a, b) = (a.to_lowercase(), b.to_lowercase());
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl SynonymTable {
    pub fn new(pairs: impl IntoIterator<Item = (String, String, f64)>) -> Result<Self, TextualError> {
        let mut table = SynonymTable::default();
        for (a, b, score) in pairs {
            if !(0.0..=1.0).contains(&score) {
                return Err(TextualError::SynonymScore { a, b, score });
            }
            table.pairs.insert(pair_key(&a, &b), score);
        }
        Ok(table)
    }

    /// Reads `[{"a": term, "b": term, "score": 0..1}, ...]`.
    pub fn from_json(text: &str) -> Result<Self, TextualError> {
        let records: Vec<SynonymRecord> = serde_json::from_str(text)?;
        Self::new(records.into_iter().map(|r| (r.a, r.b, r.score)))
    }

    pub fn score(&self, a: &str, b: &str) -> Option<f64> {
        self.pairs.get(&pair_key(a, b)).copied()
    }
}

/// Strength in `[0, 1]` with which `doc_term` answers `query_term`.
pub fn term_match(query_term: &str, doc_term: &str, synonyms: Option<&SynonymTable>) -> f64 {
    let (q, d) = (query_term.to_lowercase(), doc_term.to_lowercase());
    strength(&q, &stem(&q), &d, &stem(&d), synonyms)
}

fn strength(q: &str, q_stem: &str, d: &str, d_stem: &str, synonyms: Option<&SynonymTable>) -> f64 {
    if q == d {
        1.0
    } else if q_stem == d_stem {
        STEM_MATCH
    } else {
        synonyms.and_then(|s| s.score(q, d)).unwrap_or(0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Zone {
    /// Lines of the executed region.
    Region,
    /// Other lines of the same method within [`NEAR_LINES`].
    Near,
    /// Method name, parameters and comments.
    Method,
    /// Containing class.
    Class,
    /// File name.
    File,
}

/// Multiplicative boost per zone; the weights file is a JSON object with
/// any subset of these keys.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ZoneWeights {
    pub region: f64,
    pub near: f64,
    pub method: f64,
    pub class: f64,
    pub file: f64,
}

impl Default for ZoneWeights {
    fn default() -> Self {
        ZoneWeights {
            region: 4.0,
            near: 2.0,
            method: 3.0,
            class: 1.5,
            file: 1.0,
        }
    }
}

impl ZoneWeights {
    pub fn from_json(text: &str) -> Result<Self, TextualError> {
        let weights: ZoneWeights = serde_json::from_str(text)?;
        for (zone, value) in [
            ("region", weights.region),
            ("near", weights.near),
            ("method", weights.method),
            ("class", weights.class),
            ("file", weights.file),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(TextualError::ZoneBoost { zone, value });
            }
        }
        Ok(weights)
    }

    pub fn boost(&self, zone: Zone) -> f64 {
        match zone {
            Zone::Region => self.region,
            Zone::Near => self.near,
            Zone::Method => self.method,
            Zone::Class => self.class,
            Zone::File => self.file,
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        ZoneWeights {
            region: self.region * factor,
            near: self.near * factor,
            method: self.method * factor,
            class: self.class * factor,
            file: self.file * factor,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneToken {
    pub text: String,
    pub zone: Zone,
}

/// Tokens describing one change region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDocument {
    pub region: ChangeRegion,
    pub tokens: Vec<ZoneToken>,
}

impl RegionDocument {
    pub fn new(region: ChangeRegion) -> Self {
        RegionDocument {
            region,
            tokens: Vec::new(),
        }
    }

    pub fn push_text(&mut self, text: &str, zone: Zone, keywords: &KeywordList) {
        for token in filter_stop_words(split_identifiers(text), keywords) {
            self.tokens.push(ZoneToken { text: token, zone });
        }
    }

    /// Term frequency per (lowercased term, zone), in a fixed order so that
    /// score sums are reproducible.
    pub fn frequencies(&self) -> BTreeMap<(String, Zone), u32> {
        let mut tf = BTreeMap::new();
        for t in &self.tokens {
            *tf.entry((t.text.to_lowercase(), t.zone)).or_insert(0) += 1;
        }
        tf
    }
}

fn is_comment(line: &str) -> bool {
    let t = line.trim_start();
    ["#", "//", "/*", "*", "\"\"\"", "'''"]
        .iter()
        .any(|p| t.starts_with(p))
}

/// Builds region documents from source text and method extents.
pub struct DocumentBuilder<'a> {
    pub source: &'a dyn SourceProvider,
    pub methods: &'a MethodMap,
    pub keywords: &'a KeywordList,
    pub near_lines: u32,
}

impl<'a> DocumentBuilder<'a> {
    pub fn new(
        source: &'a dyn SourceProvider,
        methods: &'a MethodMap,
        keywords: &'a KeywordList,
    ) -> Self {
        DocumentBuilder {
            source,
            methods,
            keywords,
            near_lines: NEAR_LINES,
        }
    }

    pub fn build(&self, region: &ChangeRegion) -> RegionDocument {
        let file = region.file.as_str();
        let mut doc = RegionDocument::new(region.clone());

        for line in region.lines.lines() {
            if let Some(text) = self.source.line_text(file, line) {
                doc.push_text(&text, Zone::Region, self.keywords);
            }
        }

        let method = self.methods.extent_at(file, region.lines.start);
        let mut lo = region.lines.start.saturating_sub(self.near_lines).max(1);
        let mut hi = region.lines.end.saturating_add(self.near_lines);
        if let Some(m) = method {
            lo = lo.max(m.start);
            hi = hi.min(m.end);
        }
        if let Some(count) = self.source.line_count(file) {
            hi = hi.min(count);
        }
        for line in (lo..=hi).filter(|l| !region.lines.contains(*l)) {
            if let Some(text) = self.source.line_text(file, line) {
                doc.push_text(&text, Zone::Near, self.keywords);
            }
        }

        if let Some(m) = method {
            self.push_method_zone(&mut doc, file, m);
            if let Some(container) = m.container() {
                doc.push_text(container, Zone::Class, self.keywords);
            }
        }

        if let Some(stem) = Path::new(file).file_stem().and_then(|s| s.to_str()) {
            doc.push_text(stem, Zone::File, self.keywords);
        }
        doc
    }

    fn push_method_zone(&self, doc: &mut RegionDocument, file: &str, m: &MethodExtent) {
        match self.source.line_text(file, m.start) {
            Some(signature) => doc.push_text(&signature, Zone::Method, self.keywords),
            None => doc.push_text(m.short_name(), Zone::Method, self.keywords),
        }
        for line in m.start + 1..=m.end {
            match self.source.line_text(file, line) {
                Some(text) if is_comment(&text) => doc.push_text(&text, Zone::Method, self.keywords),
                _ => {}
            }
        }
        // Doc comment block directly above the method; annotations and
        // decorators in between are skipped.
        let mut line = m.start;
        while line > 1 {
            line -= 1;
            let Some(text) = self.source.line_text(file, line) else {
                break;
            };
            let trimmed = text.trim_start();
            if trimmed.starts_with('@') {
                continue;
            }
            if !is_comment(trimmed) {
                break;
            }
            doc.push_text(&text, Zone::Method, self.keywords);
        }
    }
}

/// A prepared query: lowercased, stop-word-filtered, de-duplicated terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Query {
    terms: Vec<(String, String)>,
}

impl Query {
    pub fn parse(text: &str, keywords: &KeywordList) -> Self {
        Self::from_terms(filter_stop_words(split_identifiers(text), keywords))
    }

    pub fn from_terms<I, S>(terms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let stemmer = english_stemmer();
        let mut seen = HashSet::new();
        let terms = terms
            .into_iter()
            .map(|t| t.as_ref().to_lowercase())
            .filter(|t| seen.insert(t.clone()))
            .map(|t| {
                let s = stemmer.stem(&t).into_owned();
                (t, s)
            })
            .collect();
        Query { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|(t, _)| t.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Document frequencies over all region documents of a session.
#[derive(Debug, Clone, Default)]
pub struct TermIndex {
    doc_count: usize,
    df: HashMap<String, u32>,
    stems: HashMap<String, String>,
}

impl TermIndex {
    pub fn build(docs: &[RegionDocument]) -> Self {
        let stemmer = english_stemmer();
        let mut df: HashMap<String, u32> = HashMap::new();
        let mut stems = HashMap::new();
        for doc in docs {
            let distinct: HashSet<String> = doc.tokens.iter().map(|t| t.text.to_lowercase()).collect();
            for term in distinct {
                stems
                    .entry(term.clone())
                    .or_insert_with(|| stemmer.stem(&term).into_owned());
                *df.entry(term).or_insert(0) += 1;
            }
        }
        TermIndex {
            doc_count: docs.len(),
            df,
            stems,
        }
    }

    pub fn doc_count(&self) -> usize {
        self.doc_count
    }

    pub fn df(&self, term: &str) -> u32 {
        self.df.get(term).copied().unwrap_or(0)
    }

    /// `ln((N + 1) / (df + 0.5))`
    pub fn idf(&self, term: &str) -> f64 {
        ((self.doc_count as f64 + 1.0) / (self.df(term) as f64 + 0.5)).ln()
    }

    fn stem_of<'s>(&'s self, term: &'s str) -> &'s str {
        self.stems.get(term).map(String::as_str).unwrap_or(term)
    }
}

/// `(1 + ln tf) * idf`
pub fn tf_idf(tf: u32, idf: f64) -> f64 {
    if tf == 0 {
        0.0
    } else {
        (1.0 + (tf as f64).ln()) * idf
    }
}

pub struct Scorer<'a> {
    pub index: &'a TermIndex,
    pub weights: ZoneWeights,
    pub synonyms: Option<&'a SynonymTable>,
}

impl Scorer<'_> {
    /// Sum over query terms and document (term, zone) pairs of
    /// match strength × tf-idf × zone boost.
    pub fn score(&self, query: &Query, doc: &RegionDocument) -> f64 {
        if query.is_empty() {
            return 0.0;
        }
        let mut total = 0.0;
        for ((term, zone), tf) in doc.frequencies() {
            let term_stem = self.index.stem_of(&term);
            let mut matched = 0.0;
            for (q, q_stem) in &query.terms {
                matched += strength(q, q_stem, &term, term_stem, self.synonyms);
            }
            if matched > 0.0 {
                total += matched * tf_idf(tf, self.index.idf(&term)) * self.weights.boost(zone);
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::{HunkId, LineRange};

    fn set(v: Vec<String>) -> BTreeSet<String> {
        v.into_iter().collect()
    }
    fn strs(v: &[&str]) -> BTreeSet<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn splits_camel_case() {
        assert_eq!(
            split_identifiers("getUserName"),
            vec!["get", "user", "name", "getUserName"]
        );
    }

    #[test]
    fn splits_underscores() {
        assert_eq!(
            set(split_identifiers("parse_xml_file")),
            strs(&["parse", "xml", "file", "parse_xml_file"])
        );
    }

    #[test]
    fn splits_acronyms_and_digits() {
        assert_eq!(
            split_identifiers("HTTPResponse2"),
            vec!["http", "response", "2", "HTTPResponse2"]
        );
        assert_eq!(split_identifiers("User"), vec!["user"]);
        assert_eq!(split_identifiers("URL"), vec!["url"]);
    }

    #[test]
    fn splits_whole_lines() {
        let tokens = split_identifiers("    if self.maxRetries > 3:  # retry_limit");
        assert_eq!(
            tokens,
            vec!["if", "self", "max", "retries", "maxRetries", "3", "retry", "limit", "retry_limit"]
        );
    }

    #[test]
    fn stop_words_and_keywords() {
        let java = KeywordList::parse("# java\nfor\nwhile\nclass\n");
        let tokens = vec!["for".into(), "user".into(), "while".into(), "name".into()];
        assert_eq!(filter_stop_words(tokens, &java), vec!["user", "name"]);
        let english = vec!["the".into(), "a".into(), "of".into()];
        assert!(filter_stop_words(english, &KeywordList::default()).is_empty());
        assert!(filter_stop_words(Vec::new(), &java).is_empty());
        assert!(KeywordList::python().contains("def"));
        assert!(is_stop_word("The", &KeywordList::default()));
    }

    #[test]
    fn match_strengths() {
        assert_eq!(term_match("charset", "charset", None), 1.0);
        assert_eq!(term_match("Charset", "charset", None), 1.0);
        assert_eq!(stem("connecting"), "connect");
        assert_eq!(stem("connected"), "connect");
        assert_eq!(term_match("connecting", "connected", None), STEM_MATCH);
        let synonyms = SynonymTable::new([("login".into(), "authentication".into(), 0.6)]).unwrap();
        assert_eq!(term_match("login", "authentication", Some(&synonyms)), 0.6);
        assert_eq!(term_match("authentication", "login", Some(&synonyms)), 0.6);
        assert_eq!(term_match("login", "authentication", None), 0.0);
        assert_eq!(term_match("login", "socket", Some(&synonyms)), 0.0);
    }

    #[test]
    fn synonym_table_validation() {
        let ok = SynonymTable::from_json(r#"[{"a": "screen", "b": "resolution", "score": 0.4}]"#).unwrap();
        assert_eq!(ok.score("resolution", "screen"), Some(0.4));
        assert!(matches!(
            SynonymTable::from_json(r#"[{"a": "x", "b": "y", "score": 1.5}]"#),
            Err(TextualError::SynonymScore { .. })
        ));
    }

    #[test]
    fn weights_file_overrides_subset() {
        let w = ZoneWeights::from_json(r#"{"near": 2.5}"#).unwrap();
        assert_eq!(w.near, 2.5);
        assert_eq!(w.region, 4.0);
        assert!(ZoneWeights::from_json(r#"{"bogus": 1}"#).is_err());
        assert!(matches!(
            ZoneWeights::from_json(r#"{"class": 0}"#),
            Err(TextualError::ZoneBoost { zone: "class", .. })
        ));
    }

    fn region(id: u64, start: u32, end: u32) -> ChangeRegion {
        ChangeRegion {
            hunk_id: HunkId(id),
            file: "pkg/server.py".into(),
            lines: LineRange { start, end },
            executed: true,
        }
    }

    fn doc(id: u64, tokens: &[(&str, Zone)]) -> RegionDocument {
        RegionDocument {
            region: region(id, 1, 1),
            tokens: tokens
                .iter()
                .map(|&(t, zone)| ZoneToken { text: t.into(), zone })
                .collect(),
        }
    }

    #[test]
    fn region_hit_doubles_near_hit() {
        let docs = vec![
            doc(1, &[("charset", Zone::Region), ("reader", Zone::Near)]),
            doc(2, &[("reader", Zone::Region), ("charset", Zone::Near)]),
            doc(3, &[("other", Zone::Region)]),
        ];
        let index = TermIndex::build(&docs);
        let scorer = Scorer {
            index: &index,
            weights: ZoneWeights::default(),
            synonyms: None,
        };
        let q = Query::from_terms(["charset"]);
        let (a, b) = (scorer.score(&q, &docs[0]), scorer.score(&q, &docs[1]));
        assert!((a / b - 2.0).abs() < 1e-12, "{a} vs {b}");
        assert_eq!(scorer.score(&q, &docs[2]), 0.0);
        assert_eq!(scorer.score(&Query::default(), &docs[0]), 0.0);
        // unmatched extra term changes nothing
        let q2 = Query::from_terms(["charset", "zebra"]);
        assert_eq!(scorer.score(&q2, &docs[0]), a);
    }

    #[test]
    fn idf_floor_for_ubiquitous_terms() {
        let docs = vec![doc(1, &[("x", Zone::Region)]), doc(2, &[("x", Zone::Near), ("y", Zone::Near)])];
        let index = TermIndex::build(&docs);
        let floor = (3.0f64 / 2.5).ln();
        assert!((index.idf("x") - floor).abs() < 1e-12);
        assert!(index.idf("x") > 0.0);
        assert!(index.idf("y") > index.idf("x"));
    }

    struct Lines(BTreeMap<u32, &'static str>);
    impl SourceProvider for Lines {
        fn line_text(&self, _file: &str, line: u32) -> Option<String> {
            self.0.get(&line).map(|s| s.to_string())
        }
        fn line_count(&self, _file: &str) -> Option<u32> {
            self.0.keys().last().copied()
        }
    }

    #[test]
    fn builder_assigns_zones() {
        let source = Lines(BTreeMap::from([
            (1, "class Connector:"),
            (2, "    # Opens the socket connection"),
            (3, "    def openSocket(self, host_name):"),
            (4, "        # resolve first"),
            (5, "        addr = resolve(host_name)"),
            (6, "        sock = connect(addr)"),
            (7, "        return sock"),
            (8, "def unrelated():"),
            (9, "    pass"),
        ]));
        let methods = MethodMap::from_json(
            r#"{"pkg/server.py": [{"name": "Connector.openSocket", "start": 3, "end": 7}, {"name": "unrelated", "start": 8, "end": 9}]}"#,
        )
        .unwrap();
        let keywords = KeywordList::python();
        let builder = DocumentBuilder::new(&source, &methods, &keywords);
        let d = builder.build(&region(1, 6, 6));
        let zone_of = |zone: Zone| -> BTreeSet<String> {
            d.tokens.iter().filter(|t| t.zone == zone).map(|t| t.text.clone()).collect()
        };
        assert_eq!(zone_of(Zone::Region), strs(&["sock", "connect", "addr"]));
        // near lines stay inside the method: 3..=7 except 6
        assert!(zone_of(Zone::Near).contains("resolve"));
        assert!(!zone_of(Zone::Near).contains("unrelated"));
        assert!(zone_of(Zone::Method).contains("open"));
        assert!(zone_of(Zone::Method).contains("openSocket"));
        assert!(zone_of(Zone::Method).contains("host_name"));
        assert!(zone_of(Zone::Method).contains("socket"));
        assert_eq!(zone_of(Zone::Class), strs(&["connector"]));
        assert_eq!(zone_of(Zone::File), strs(&["server"]));
        assert!(d.tokens.iter().all(|t| t.text != "self" && t.text != "def"));
    }
}
