//! Combinatorial C-complexes.
//!
//! A complex is recorded by its clasps (which two components each clasp
//! joins, and its sign) together with the order in which each boundary
//! component meets its clasps, read from a basepoint. Surfaces themselves are
//! not represented; everything downstream only needs the clasp words.
//!
//! Text format, one directive per line, `#` starting a comment line:
//!
//! ```text
//! components 3
//! clasp p 1 2 +
//! clasp q 1 2 -
//! order 1 p q
//! order 2 q p
//! order 3
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{ClaspWord, Sign, SignedLetter};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clasp {
    id: String,
    a: u32,
    b: u32,
    sign: Sign,
}

impl Clasp {
    /// Endpoints are stored with `a <= b`.
    pub fn new(id: impl Into<String>, a: u32, b: u32, sign: Sign) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Clasp { id: id.into(), a, b, sign }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn touches(&self, k: u32) -> bool {
        self.a == k || self.b == k
    }

    pub fn joins(&self, i: u32, j: u32) -> bool {
        (self.a, self.b) == (i.min(j), i.max(j))
    }

    /// The endpoint that is not `k`.
    pub fn other(&self, k: u32) -> u32 {
        if self.a == k {
            self.b
        } else {
            self.a
        }
    }
}

/// One broken invariant of a [`CComplex`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    NoComponents,
    SelfClasp { id: String, component: u32 },
    DuplicateId { id: String },
    EndpointOutOfRange { id: String, component: u32 },
    UnknownClasp { component: u32, id: String },
    NotIncident { component: u32, id: String },
    RepeatedInOrder { component: u32, id: String },
    OrderIncomplete { component: u32, id: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            NoComponents => write!(f, "no components: a C-complex needs at least one"),
            SelfClasp { id, component } => {
                write!(f, "self-clasp: clasp {id} joins component {component} to itself")
            }
            DuplicateId { id } => write!(f, "duplicate id: clasp {id} is declared more than once"),
            EndpointOutOfRange { id, component } => {
                write!(f, "bad endpoint: clasp {id} touches nonexistent component {component}")
            }
            UnknownClasp { component, id } => {
                write!(f, "unknown clasp: order of component {component} lists undeclared {id}")
            }
            NotIncident { component, id } => write!(
                f,
                "not incident: order of component {component} lists clasp {id}, which does not touch it"
            ),
            RepeatedInOrder { component, id } => {
                write!(f, "repeated clasp: order of component {component} lists {id} twice")
            }
            OrderIncomplete { component, id } => {
                write!(f, "order incomplete: clasp {id} is missing from the order of component {component}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CComplex {
    components: usize,
    clasps: Vec<Clasp>,
    /// `orders[k - 1]` is the sequence of clasp ids met along component `k`.
    orders: Vec<Vec<String>>,
}

impl CComplex {
    /// Assembles a complex without checking it; see [`CComplex::validate`].
    /// Missing trailing orders are treated as empty.
    pub fn new(components: usize, clasps: Vec<Clasp>, mut orders: Vec<Vec<String>>) -> Self {
        orders.resize(components.max(orders.len()), Vec::new());
        CComplex { components, clasps, orders }
    }

    /// The complex with no clasps at all: a boundary surface.
    pub fn boundary(components: usize) -> Self {
        Self::new(components, Vec::new(), Vec::new())
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn clasps(&self) -> &[Clasp] {
        &self.clasps
    }

    pub fn order(&self, k: u32) -> Result<&[String]> {
        self.check_component(k)?;
        Ok(&self.orders[k as usize - 1])
    }

    pub fn clasp(&self, id: &str) -> Option<&Clasp> {
        self.clasps.iter().find(|c| c.id == id)
    }

    pub fn total_clasps(&self) -> usize {
        self.clasps.len()
    }

    pub fn check_component(&self, k: u32) -> Result<()> {
        if k == 0 || k as usize > self.components {
            return Err(Error::ComponentOutOfRange { index: k, n: self.components });
        }
        Ok(())
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.components == 0 {
            out.push(Violation::NoComponents);
        }
        let n = self.components as u32;
        let mut ids = HashSet::new();
        for c in &self.clasps {
            if !ids.insert(c.id.as_str()) {
                out.push(Violation::DuplicateId { id: c.id.clone() });
            }
            if c.a == c.b {
                out.push(Violation::SelfClasp { id: c.id.clone(), component: c.a });
            }
            for end in [c.a, c.b] {
                if end == 0 || end > n {
                    out.push(Violation::EndpointOutOfRange { id: c.id.clone(), component: end });
                }
            }
        }
        let by_id: HashMap<&str, &Clasp> = self.clasps.iter().map(|c| (c.id.as_str(), c)).collect();
        for (slot, order) in self.orders.iter().enumerate() {
            let k = slot as u32 + 1;
            let mut seen = HashSet::new();
            for id in order {
                if !seen.insert(id.as_str()) {
                    out.push(Violation::RepeatedInOrder { component: k, id: id.clone() });
                }
                match by_id.get(id.as_str()) {
                    None => out.push(Violation::UnknownClasp { component: k, id: id.clone() }),
                    Some(c) if !c.touches(k) => {
                        out.push(Violation::NotIncident { component: k, id: id.clone() })
                    }
                    Some(_) => {}
                }
            }
            for c in self.clasps.iter().filter(|c| c.touches(k)) {
                if !seen.contains(c.id.as_str()) {
                    out.push(Violation::OrderIncomplete { component: k, id: c.id.clone() });
                }
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidComplex(violations))
        }
    }

    /// The word read along component `k`: each clasp met contributes the
    /// other component's letter with the clasp's sign.
    pub fn clasp_word(&self, k: u32) -> Result<ClaspWord> {
        self.check_component(k)?;
        self.ensure_valid()?;
        Ok(self.word_unchecked(k))
    }

    /// All clasp words, component 1 first.
    pub fn clasp_words(&self) -> Result<Vec<ClaspWord>> {
        self.ensure_valid()?;
        Ok((1..=self.components as u32).map(|k| self.word_unchecked(k)).collect())
    }

    fn word_unchecked(&self, k: u32) -> ClaspWord {
        self.orders[k as usize - 1]
            .iter()
            .map(|id| {
                let c = self.clasp(id).expect("validated");
                let other = c.other(k);
                match c.sign {
                    Sign::Plus => SignedLetter::pos(other),
                    Sign::Minus => SignedLetter::neg(other),
                }
            })
            .collect()
    }

    /// Moves the basepoint of component `k` forward past `by` clasps.
    pub fn rotate_order(&self, k: u32, by: i64) -> Result<CComplex> {
        self.check_component(k)?;
        let mut out = self.clone();
        let order = &mut out.orders[k as usize - 1];
        if !order.is_empty() {
            let shift = by.rem_euclid(order.len() as i64) as usize;
            order.rotate_left(shift);
        }
        Ok(out)
    }

    /// Every clasp sign flipped.
    pub fn mirrored(&self) -> CComplex {
        let mut out = self.clone();
        for c in &mut out.clasps {
            c.sign = c.sign.flip();
        }
        out
    }

    /// Every boundary traversed in the opposite direction.
    pub fn reversed(&self) -> CComplex {
        let mut out = self.clone();
        for order in &mut out.orders {
            order.reverse();
        }
        out
    }

    /// The three-component complex from the Borromean rings with four clasps.
    pub fn borromean() -> CComplex {
        BORROMEAN.parse().expect("built-in complex parses")
    }

    /// A complex for the generalised Borromean rings `BR^n` with `4n` clasps,
    /// whose words are `x3^-n x2^n x3^n x2^-n`, `x1^n x1^-n` and `(x1 x1^-1)^n`.
    pub fn generalized_borromean(n: usize) -> Result<CComplex> {
        if n < 1 {
            return Err(Error::OutOfDomain("BR^n needs n >= 1".into()));
        }
        let ids = |p: &'static str| (1..=n).map(move |t| format!("{p}{t}"));
        let mut clasps = Vec::with_capacity(4 * n);
        // p: +(1,2)  q: -(1,2)  r: +(1,3)  s: -(1,3)
        clasps.extend(ids("p").map(|id| Clasp::new(id, 1, 2, Sign::Plus)));
        clasps.extend(ids("q").map(|id| Clasp::new(id, 1, 2, Sign::Minus)));
        clasps.extend(ids("r").map(|id| Clasp::new(id, 1, 3, Sign::Plus)));
        clasps.extend(ids("s").map(|id| Clasp::new(id, 1, 3, Sign::Minus)));

        let first: Vec<String> = ids("s").chain(ids("p")).chain(ids("r")).chain(ids("q")).collect();
        let second: Vec<String> = ids("p").chain(ids("q")).collect();
        let third: Vec<String> = ids("r").zip(ids("s")).flat_map(|(r, s)| [r, s]).collect();
        Ok(CComplex::new(3, clasps, vec![first, second, third]))
    }
}

const BORROMEAN: &str = "\
components 3
clasp p 1 2 +
clasp q 1 2 -
clasp r 1 3 +
clasp s 1 3 -
order 1 s p r q
order 2 q p
order 3 s r
";

impl fmt::Display for CComplex {
    /// Canonical file form: clasps sorted by endpoints, ties kept in
    /// declaration order, then one `order` line per component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "components {}", self.components)?;
        let mut clasps: Vec<&Clasp> = self.clasps.iter().collect();
        clasps.sort_by_key(|c| (c.a, c.b));
        for c in clasps {
            writeln!(f, "clasp {} {} {} {}", c.id, c.a, c.b, c.sign.symbol())?;
        }
        for (slot, order) in self.orders.iter().enumerate() {
            let mut line = format!("order {}", slot + 1);
            for id in order {
                write!(line, " {id}")?;
            }
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

impl FromStr for CComplex {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_complex(text)
    }
}

pub fn parse_complex(text: &str) -> Result<CComplex> {
    let mut components: Option<usize> = None;
    let mut clasps = Vec::new();
    let mut orders: Vec<(usize, u32, Vec<String>)> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let err = |msg: String| Error::Format { line, msg };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let keyword = tokens.next().expect("nonblank line");
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "components" => {
                if components.is_some() {
                    return Err(err("duplicate 'components' line".into()));
                }
                let [count] = rest[..] else {
                    return Err(err("expected 'components <n>'".into()));
                };
                components = Some(count.parse().map_err(|_| err(format!("bad component count {count:?}")))?);
            }
            "clasp" => {
                let [id, a, b, sign] = rest[..] else {
                    return Err(err("expected 'clasp <id> <a> <b> <+|->'".into()));
                };
                let a = parse_index(a).ok_or_else(|| err(format!("bad component index {a:?}")))?;
                let b = parse_index(b).ok_or_else(|| err(format!("bad component index {b:?}")))?;
                let sign = match sign {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(err(format!("clasp sign must be + or -, got {other:?}"))),
                };
                clasps.push(Clasp::new(id, a, b, sign));
            }
            "order" => {
                let Some((k, ids)) = rest.split_first() else {
                    return Err(err("expected 'order <k> <id>...'".into()));
                };
                let k = parse_index(k).ok_or_else(|| err(format!("bad component index {k:?}")))?;
                orders.push((line, k, ids.iter().map(|s| s.to_string()).collect()));
            }
            other => return Err(err(format!("unknown directive {other:?}"))),
        }
    }

    let components = components.ok_or(Error::Format { line: 0, msg: "missing 'components' line".into() })?;
    let mut slots: Vec<Option<Vec<String>>> = vec![None; components];
    for (line, k, ids) in orders {
        let slot = slots
            .get_mut(k as usize - 1)
            .ok_or_else(|| Error::Format { line, msg: format!("order for component {k}, but only {components} declared") })?;
        if slot.is_some() {
            return Err(Error::Format { line, msg: format!("second order line for component {k}") });
        }
        *slot = Some(ids);
    }
    Ok(CComplex::new(
        components,
        clasps,
        slots.into_iter().map(Option::unwrap_or_default).collect(),
    ))
}

fn parse_index(token: &str) -> Option<u32> {
    token.parse::<u32>().ok().filter(|&k| k >= 1)
}
